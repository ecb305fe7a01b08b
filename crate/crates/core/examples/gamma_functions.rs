//! Gamma, its reciprocal, and the ratio used by the fractional power rules.

use fracadm::{gamma, gamma_ratio, rgamma};

fn main() -> fracadm::Result<()> {
    for z in [0.5, 1.5, 2.5, -0.5, 10.0, 170.5] {
        println!("Gamma({z:>6}) = {}", gamma(z)?);
    }
    // reciprocal is entire: zero on the poles
    for z in [0.0, -1.0, -2.0, 0.25] {
        println!("1/Gamma({z:>5}) = {}", rgamma(z));
    }
    // coefficient of D^0.5 x = Gamma(2)/Gamma(1.5) x^0.5
    println!("Gamma(2)/Gamma(1.5) = {}", gamma_ratio(2.0, 1.5)?);
    // large arguments go through log-space
    println!("Gamma(200.5)/Gamma(200) = {}", gamma_ratio(200.5, 200.0)?);
    match gamma(-3.0) {
        Err(e) => println!("Gamma(-3): {e}"),
        Ok(v) => println!("Gamma(-3) = {v}"),
    }
    Ok(())
}
