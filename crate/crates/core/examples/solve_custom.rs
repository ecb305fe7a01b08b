//! Solves a user-defined problem D_y^a u + u D_x^b u = g(x) and reports the
//! residual of successive partial sums.

use fracadm::{parse_series, residual, solve, ProblemSpec};

fn main() -> fracadm::Result<()> {
    let ic = parse_series("x")?;
    let g = parse_series("0")?;
    let problem = ProblemSpec::new(0.8, 0.9, ic, g, 6)?;
    let sol = solve(&problem)?;

    for (k, u) in sol.components().iter().enumerate() {
        println!("u_{k} = {u}");
    }

    let points = [(0.3, 0.05), (0.6, 0.05), (0.9, 0.1)];
    for n in 1..=problem.n_terms {
        let r = residual(&problem, sol.partial_sum(n)?, &points)?;
        println!("N = {n}: max residual {r:.3e}");
    }
    println!("u(0.5, 0.1) ~ {}", sol.evaluate(0.5, 0.1)?);
    Ok(())
}
