//! Adomian polynomials from the closed recursion, compared with the
//! lambda-derivative definition evaluated numerically.

use fracadm::{adomian_lambda_oracle, adomian_polynomial, builtin_problem, solve, ExampleId};

fn main() -> fracadm::Result<()> {
    let beta = 0.6;
    let sol = solve(&builtin_problem(ExampleId::new(2)?, 0.9, beta, 5)?)?;
    let probes = [(0.3, 0.05), (0.6, 0.1), (0.9, 0.3)];
    for n in 0..5 {
        let an = adomian_polynomial(sol.components(), n, beta)?;
        let oracle = adomian_lambda_oracle(sol.components(), n, beta, &probes)?;
        println!("A_{n} has {} terms", an.len());
        for (&(x, y), o) in probes.iter().zip(oracle) {
            let v = an.evaluate(x, y)?;
            println!("  ({x}, {y}): closed {v:+.15e}  oracle {o:+.15e}  diff {:.1e}", (v - o).abs());
        }
    }
    Ok(())
}
