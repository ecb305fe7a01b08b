//! `%g`-style float formatting with a fixed number of significant digits.

/// Digits that make every finite `f64` round-trip.
pub const ROUND_TRIP_DIGITS: usize = 17;

/// Formats `v` with `digits` significant digits, trailing zeros removed.
///
/// Fixed notation is used for decimal exponents in `[-5, digits)`,
/// scientific otherwise, mirroring C's `%.{digits}g`.
pub fn format_sig(v: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("exponent digits");
    if exp < -5 || exp >= digits as i32 {
        format!("{}e{}", strip_zeros(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        strip_zeros(&format!("{:.*}", decimals, v)).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_and_scientific() {
        assert_eq!(format_sig(1.0, 17), "1");
        assert_eq!(format_sig(-0.5, 17), "-0.5");
        assert_eq!(format_sig(0.1, 17), "0.10000000000000001");
        assert_eq!(format_sig(2.97029e-13, 6), "2.97029e-13");
        assert_eq!(format_sig(123456.0, 3), "1.23e5");
        assert_eq!(format_sig(0.000123, 6), "0.000123");
        assert_eq!(format_sig(30.0 / 101.0, 6), "0.29703");
    }

    #[test]
    fn round_trips_at_17_digits() {
        for &v in &[1.0 / 3.0, 2.0f64.sqrt(), 1e-300, 6.02e23, -7.25e-7, 0.1 + 0.2] {
            let s = format_sig(v, ROUND_TRIP_DIGITS);
            assert_eq!(s.parse::<f64>().unwrap(), v, "{s}");
        }
    }
}
