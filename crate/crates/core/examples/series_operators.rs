//! Exact Caputo derivatives and Riemann-Liouville integrals on generalized
//! power series, checked against direct quadrature.

use fracadm::{caputo_quadrature_oracle, parse_series, Axis};

fn main() -> fracadm::Result<()> {
    let s = parse_series("1 + 2*x^1.5*y - x*y^0.5")?;
    println!("s            = {s}");
    println!("D_x^0.5 s    = {}", s.caputo_deriv(0.5, Axis::X)?);
    println!("D_y^0.5 s    = {}", s.caputo_deriv(0.5, Axis::Y)?);
    let j = s.rl_integral(0.5, Axis::Y)?;
    println!("J_y^0.5 s    = {j}");
    println!("D J s - s    = {}", j.caputo_deriv(0.5, Axis::Y)?.sub(&s));

    let t = parse_series("x - y")?;
    println!("s * (x - y)  = {}", s.mul(&t)?);

    let rule = parse_series("x^2")?
        .caputo_deriv(0.3, Axis::X)?
        .evaluate(1.7, 0.0)?;
    let quad = caputo_quadrature_oracle(2.0, 0.3, 1.7)?;
    println!("D^0.3 x^2 at 1.7: rule {rule:.15}, quadrature {quad:.15}");
    Ok(())
}
