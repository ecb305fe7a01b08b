//! The four reference problems, their closed-form solutions, and the
//! comparison tables built from them.
//!
//! | id | forcing g(x) | u(x, 0) | exact solution (a = b = 1)      |
//! |----|--------------|---------|---------------------------------|
//! | 1  | x            | 1       | x tanh y + sech y               |
//! | 2  | 1            | -x      | (2x - 2y + y^2) / (2 (y - 1))   |
//! | 3  | 0            | 1 + x   | (1 + x) / (1 + y)               |
//! | 4  | 0            | x       | x / (1 + y)                     |

use std::fmt;

use crate::adm::{solve, ProblemSpec};
use crate::error::{Error, Result};
use crate::series::{FracSeries, FracTerm};

/// Sampling grid of the reference tables.
pub const TABLE_Y: [f64; 3] = [0.01, 0.05, 0.1];
pub const TABLE_X: [f64; 3] = [0.3, 0.6, 0.9];
pub const TABLE_ORDERS: [(f64, f64); 3] = [(0.5, 0.5), (0.75, 0.75), (1.0, 1.0)];

/// Extra components summed for [`TableCell::tail_error`].
pub const TAIL_EXTRA_TERMS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExampleId(u8);

impl ExampleId {
    pub const ALL: [ExampleId; 4] = [ExampleId(1), ExampleId(2), ExampleId(3), ExampleId(4)];

    pub fn new(id: u32) -> Result<Self> {
        match id {
            1..=4 => Ok(ExampleId(id as u8)),
            _ => Err(Error::UnknownExample(id)),
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }
}

impl TryFrom<u32> for ExampleId {
    type Error = Error;
    fn try_from(id: u32) -> Result<Self> {
        ExampleId::new(id)
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn poly_x(coeffs: &[(f64, f64)]) -> FracSeries {
    FracSeries::from_terms(coeffs.iter().map(|&(c, p)| FracTerm::new(c, p, 0.0)))
}

/// Initial condition and forcing of a reference problem.
pub fn problem_data(id: ExampleId) -> (FracSeries, FracSeries) {
    match id.0 {
        1 => (poly_x(&[(1.0, 0.0)]), poly_x(&[(1.0, 1.0)])),
        2 => (poly_x(&[(-1.0, 1.0)]), poly_x(&[(1.0, 0.0)])),
        3 => (poly_x(&[(1.0, 0.0), (1.0, 1.0)]), FracSeries::zero()),
        4 => (poly_x(&[(1.0, 1.0)]), FracSeries::zero()),
        _ => unreachable!("ExampleId is validated on construction"),
    }
}

pub fn builtin_problem(id: ExampleId, alpha: f64, beta: f64, n_terms: usize) -> Result<ProblemSpec> {
    let (ic, forcing) = problem_data(id);
    ProblemSpec::new(alpha, beta, ic, forcing, n_terms)
}

/// Closed-form solution of the integer-order (a = b = 1) problem.
pub fn exact_solution(id: ExampleId, x: f64, y: f64) -> Result<f64> {
    match id.0 {
        1 => Ok(x * y.tanh() + 1.0 / y.cosh()),
        2 => {
            if y == 1.0 {
                return Err(Error::Singular { y });
            }
            Ok((2.0 * x - 2.0 * y + y * y) / (2.0 * (y - 1.0)))
        }
        3 | 4 => {
            if y == -1.0 {
                return Err(Error::Singular { y });
            }
            let num = if id.0 == 3 { 1.0 + x } else { x };
            Ok(num / (1.0 + y))
        }
        _ => unreachable!("ExampleId is validated on construction"),
    }
}

/// One grid point of a [`TableReport`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableCell {
    pub y: f64,
    pub x: f64,
    pub alpha: f64,
    pub beta: f64,
    /// `Phi_N(x, y)`.
    pub approx: f64,
    /// Present only for `alpha = beta = 1`.
    pub exact: Option<f64>,
    /// `|exact - approx|` in double precision.
    pub abs_error: Option<f64>,
    /// `|u_N + ... + u_{N+TAIL_EXTRA_TERMS-1}|` at the point: the truncation
    /// error without the cancellation of `exact - approx`. Present only for
    /// `alpha = beta = 1`.
    pub tail_error: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableReport {
    pub example: ExampleId,
    pub alpha_beta_pairs: Vec<(f64, f64)>,
    pub y_values: Vec<f64>,
    pub x_values: Vec<f64>,
    pub n_terms: usize,
    /// Row-major in (y, x, pair) order.
    pub cells: Vec<TableCell>,
}

impl TableReport {
    pub fn cell(&self, iy: usize, ix: usize, ipair: usize) -> &TableCell {
        let np = self.alpha_beta_pairs.len();
        let nx = self.x_values.len();
        &self.cells[(iy * nx + ix) * np + ipair]
    }

    /// Index of the integer-order pair, if the table has one.
    pub fn unit_pair(&self) -> Option<usize> {
        self.alpha_beta_pairs.iter().position(|&p| p == (1.0, 1.0))
    }
}

/// Reference table on the standard grid: y in {0.01, 0.05, 0.1},
/// x in {0.3, 0.6, 0.9}, (a, b) in {(0.5, 0.5), (0.75, 0.75), (1, 1)}.
pub fn make_table(id: ExampleId, n_terms: usize) -> Result<TableReport> {
    make_table_with(id, n_terms, &TABLE_ORDERS, &TABLE_X, &TABLE_Y)
}

pub fn make_table_with(
    id: ExampleId,
    n_terms: usize,
    pairs: &[(f64, f64)],
    x_values: &[f64],
    y_values: &[f64],
) -> Result<TableReport> {
    let columns = pairs
        .iter()
        .map(|&(alpha, beta)| table_column(id, alpha, beta, n_terms, x_values, y_values))
        .collect::<Result<Vec<_>>>()?;

    let mut cells = Vec::with_capacity(columns.len() * x_values.len() * y_values.len());
    for iy in 0..y_values.len() {
        for ix in 0..x_values.len() {
            for col in &columns {
                cells.push(col[iy * x_values.len() + ix]);
            }
        }
    }
    Ok(TableReport {
        example: id,
        alpha_beta_pairs: pairs.to_vec(),
        y_values: y_values.to_vec(),
        x_values: x_values.to_vec(),
        n_terms,
        cells,
    })
}

/// All grid cells for one (alpha, beta) pair, (y, x) row-major.
fn table_column(
    id: ExampleId,
    alpha: f64,
    beta: f64,
    n_terms: usize,
    x_values: &[f64],
    y_values: &[f64],
) -> Result<Vec<TableCell>> {
    let integer_order = alpha == 1.0 && beta == 1.0;
    let depth = if integer_order {
        n_terms + TAIL_EXTRA_TERMS
    } else {
        n_terms
    };
    let sol = solve(&builtin_problem(id, alpha, beta, depth)?)?;
    let approx_series = sol.partial_sum(n_terms)?;
    let tail_series = integer_order.then(|| {
        sol.components()[n_terms..]
            .iter()
            .fold(FracSeries::zero(), |acc, u| acc.add(u))
    });

    let mut out = Vec::with_capacity(x_values.len() * y_values.len());
    for &y in y_values {
        for &x in x_values {
            let approx = approx_series.evaluate(x, y)?;
            let (exact, abs_error, tail_error) = match &tail_series {
                Some(tail) => {
                    let exact = exact_solution(id, x, y)?;
                    (
                        Some(exact),
                        Some((exact - approx).abs()),
                        Some(tail.evaluate(x, y)?.abs()),
                    )
                }
                None => (None, None, None),
            };
            out.push(TableCell {
                y,
                x,
                alpha,
                beta,
                approx,
                exact,
                abs_error,
                tail_error,
            });
        }
    }
    Ok(out)
}

/// A printed table entry: the value and the size of one unit in its last
/// printed digit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Printed {
    pub value: f64,
    pub unit: f64,
}

impl Printed {
    pub fn parse(s: &str) -> Printed {
        let value: f64 = s.parse().expect("fixture literal");
        let (mantissa, exp) = match s.split_once(['e', 'E']) {
            Some((m, e)) => (m, e.parse::<i32>().expect("fixture exponent")),
            None => (s, 0),
        };
        let decimals = mantissa.split_once('.').map_or(0, |(_, d)| d.len()) as i32;
        Printed {
            value,
            unit: 10f64.powi(exp - decimals),
        }
    }

    pub fn significant_digits(s: &str) -> usize {
        let mantissa = s.split(['e', 'E']).next().unwrap_or(s);
        mantissa
            .chars()
            .filter(char::is_ascii_digit)
            .skip_while(|&c| c == '0')
            .count()
    }
}

/// One row of a published comparison table, values kept as printed.
#[derive(Debug, Clone, Copy)]
pub struct ReferenceRow {
    pub y: f64,
    pub x: f64,
    /// Approximations at (a, b) = (0.5, 0.5), (0.75, 0.75), (1, 1).
    pub approx: [&'static str; 3],
    pub exact: &'static str,
    pub error: &'static str,
}

const fn row(
    y: f64,
    x: f64,
    approx: [&'static str; 3],
    exact: &'static str,
    error: &'static str,
) -> ReferenceRow {
    ReferenceRow {
        y,
        x,
        approx,
        exact,
        error,
    }
}

// Table 1, example 1 (g = x, u(x,0) = 1).
const TABLE_1: [ReferenceRow; 9] = [
    row(0.01, 0.3, ["1.02826", "1.00972", "1.00295"], "1.00295", "1.78455e-17"),
    row(0.01, 0.6, ["1.05931", "1.01991", "1.00595"], "1.00595", "1.79697e-17"),
    row(0.01, 0.9, ["1.09087", "1.03015", "1.00895"], "1.00895", "1.81007e-17"),
    row(0.05, 0.3, ["1.05085", "1.02803", "1.01374"], "1.01374", "1.35317e-12"),
    row(0.05, 0.6, ["1.11205", "1.06088", "1.02873"], "1.02873", "1.36598e-12"),
    row(0.05, 0.9, ["1.17514", "1.0942", "1.04371"], "1.04371", "1.37878e-12"),
    row(0.1, 0.3, ["1.05979", "1.04063", "1.02492"], "1.02492", "3.4865e-10"),
    row(0.1, 0.6, ["1.13731", "1.09334", "1.05482"], "1.05482", "3.55184e-10"),
    row(0.1, 0.9, ["1.21761", "1.14748", "1.08472"], "1.08472", "3.61719e-10"),
];

// Table 2, example 2 (g = 1, u(x,0) = -x).
const TABLE_2: [ReferenceRow; 9] = [
    row(0.01, 0.3, ["-0.210064", "-0.274905", "-0.29298"], "-0.29298", "2.9798e-9"),
    row(0.01, 0.6, ["-0.555538", "-0.586408", "-0.59601"], "-0.59601", "6.0101e-9"),
    row(0.01, 0.9, ["-0.910206", "-0.898583", "-0.89904"], "-0.89904", "9.04041e-9"),
    row(0.05, 0.3, ["-0.0782081", "-0.213214", "-0.264472"], "-0.264474", "1.80921e-6"),
    row(0.05, 0.6, ["-0.50313", "-0.556151", "-0.580259"], "-0.580263", "3.78289e-6"),
    row(0.05, 0.9, ["-0.966632", "-0.90218", "-0.896047"], "-0.896053", "5.75658e-6"),
    row(0.1, 0.3, ["0.0446003", "-0.147862", "-0.22775"], "-0.227778", "2.77778e-5"),
    row(0.1, 0.6, ["-0.454211", "-0.528458", "-0.56105"], "-0.561111", "6.11111e-5"),
    row(0.1, 0.9, ["-1.03523", "-0.916113", "-0.89435"], "-0.894444", "9.44444e-5"),
];

// Table 3, example 3 (g = 0, u(x,0) = 1 + x).
const TABLE_3: [ReferenceRow; 9] = [
    row(0.01, 0.3, ["1.20487", "1.26054", "1.28713"], "1.28713", "1.28713e-8"),
    row(0.01, 0.6, ["1.45717", "1.54776", "1.58416"], "1.58416", "1.58416e-8"),
    row(0.01, 0.9, ["1.71169", "1.83537", "1.88119"], "1.88119", "1.88119e-8"),
    row(0.05, 0.3, ["1.10925", "1.1828", "1.23809"], "1.2381", "7.7381e-6"),
    row(0.05, 0.6, ["1.29774", "1.4429", "1.5238"], "1.52381", "9.52381e-6"),
    row(0.05, 0.9, ["1.49262", "1.70524", "1.80951"], "1.80952", "1.13095e-5"),
    row(0.1, 0.3, ["1.00627", "1.12089", "1.1817"], "1.18182", "1.18182e-4"),
    row(0.1, 0.6, ["1.11627", "1.35561", "1.4544"], "1.45455", "1.45455e-4"),
    row(0.1, 0.9, ["1.23329", "1.59591", "1.7271"], "1.72727", "1.72727e-4"),
];

// Table 4, example 4 (g = 0, u(x,0) = x).
const TABLE_4: [ReferenceRow; 9] = [
    row(0.01, 0.3, ["0.276009", "0.290771", "0.29703"], "0.29703", "2.97029e-13"),
    row(0.01, 0.6, ["0.544279", "0.580275", "0.594059"], "0.594059", "5.94058e-13"),
    row(0.01, 0.9, ["0.80891", "0.869243", "0.891089"], "0.891089", "8.91087e-13"),
    row(0.05, 0.3, ["0.252999", "0.271796", "0.285714"], "0.285714", "4.46429e-9"),
    row(0.05, 0.6, ["0.491149", "0.540065", "0.571429"], "0.571429", "8.92857e-9"),
    row(0.05, 0.9, ["0.720922", "0.806873", "0.857143"], "0.857143", "1.33929e-8"),
    row(0.1, 0.3, ["0.23591", "0.256139", "0.272727"], "0.272727", "2.72727e-7"),
    row(0.1, 0.6, ["0.442692", "0.507181", "0.545454"], "0.545454", "5.45455e-7"),
    row(0.1, 0.9, ["0.624414", "0.756131", "0.818181"], "0.818181", "8.18182e-7"),
];

/// Published values for the standard grid, rows in (y, x) order.
pub fn reference_table(id: ExampleId) -> &'static [ReferenceRow; 9] {
    match id.0 {
        1 => &TABLE_1,
        2 => &TABLE_2,
        3 => &TABLE_3,
        4 => &TABLE_4,
        _ => unreachable!("ExampleId is validated on construction"),
    }
}

/// Deviation of one truncation depth from the published table.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub n: usize,
    /// Max over the 9 rows of `|c - p| / min(|c|, |p|)` between the computed
    /// truncation error (tail sum) and the published error column. The
    /// symmetric denominator penalizes errors that are too small as much as
    /// errors that are too large.
    pub error_column_deviation: f64,
    /// Max `|c - p| / |p|` over the integer-order approximation column.
    pub unit_approx_deviation: f64,
    /// Same over both fractional-order columns; `None` when a fractional
    /// solve failed at this depth.
    pub fractional_deviation: Option<f64>,
    /// Max over every available column.
    pub max_rel_deviation: f64,
}

fn symmetric_rel(c: f64, p: f64) -> f64 {
    let d = (c - p).abs();
    if d == 0.0 {
        return 0.0;
    }
    d / c.abs().min(p.abs())
}

fn column_deviation(
    id: ExampleId,
    alpha: f64,
    beta: f64,
    n: usize,
    col: usize,
) -> Result<(Vec<TableCell>, f64)> {
    let cells = table_column(id, alpha, beta, n, &TABLE_X, &TABLE_Y)?;
    let dev = cells
        .iter()
        .zip(reference_table(id))
        .map(|(c, r)| {
            let p = Printed::parse(r.approx[col]).value;
            ((c.approx - p) / p).abs()
        })
        .fold(0.0, f64::max);
    Ok((cells, dev))
}

/// Compares truncation depths `1..=n_max` against the published table.
/// Depths at which the integer-order solve fails are reported with
/// infinite deviation.
pub fn truncation_scan(id: ExampleId, n_max: usize) -> Vec<ScanRow> {
    let table = reference_table(id);
    (1..=n_max)
        .map(|n| {
            let (error_dev, unit_dev) = match column_deviation(id, 1.0, 1.0, n, 2) {
                Ok((cells, unit_dev)) => {
                    let err_dev = cells
                        .iter()
                        .zip(table)
                        .map(|(c, r)| {
                            symmetric_rel(c.tail_error.unwrap_or(0.0), Printed::parse(r.error).value)
                        })
                        .fold(0.0, f64::max);
                    (err_dev, unit_dev)
                }
                Err(_) => (f64::INFINITY, f64::INFINITY),
            };
            let fractional = TABLE_ORDERS[..2]
                .iter()
                .enumerate()
                .map(|(col, &(a, b))| column_deviation(id, a, b, n, col).map(|(_, d)| d))
                .collect::<Result<Vec<_>>>()
                .ok()
                .map(|v| v.into_iter().fold(0.0, f64::max));
            let max_rel = error_dev
                .max(unit_dev)
                .max(fractional.unwrap_or(0.0));
            ScanRow {
                n,
                error_column_deviation: error_dev,
                unit_approx_deviation: unit_dev,
                fractional_deviation: fractional,
                max_rel_deviation: max_rel,
            }
        })
        .collect()
}

/// Depth with the smallest error-column deviation (earliest on ties).
pub fn recovered_depth(scan: &[ScanRow]) -> Option<usize> {
    scan.iter()
        .min_by(|a, b| a.error_column_deviation.total_cmp(&b.error_column_deviation))
        .map(|r| r.n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_ids() {
        assert!(ExampleId::new(0).is_err());
        assert!(ExampleId::new(5).is_err());
        assert_eq!(ExampleId::try_from(3).unwrap().get(), 3);
    }

    #[test]
    fn builtin_problems() {
        let p = builtin_problem(ExampleId(1), 0.5, 0.5, 2).unwrap();
        assert_eq!(p.forcing, FracSeries::monomial(1.0, 1.0, 0.0));
        assert_eq!(p.ic, FracSeries::constant(1.0));
        let p = builtin_problem(ExampleId(3), 1.0, 1.0, 4).unwrap();
        assert_eq!(p.ic, poly_x(&[(1.0, 0.0), (1.0, 1.0)]));
        assert!(p.forcing.is_empty());
        let p = builtin_problem(ExampleId(4), 1.0, 1.0, 6).unwrap();
        assert_eq!(p.ic, FracSeries::monomial(1.0, 1.0, 0.0));
        let p = builtin_problem(ExampleId(2), 1.0, 1.0, 6).unwrap();
        assert_eq!(p.ic, FracSeries::monomial(-1.0, 1.0, 0.0));
        assert_eq!(p.forcing, FracSeries::constant(1.0));
    }

    #[test]
    fn exact_values() {
        assert!((exact_solution(ExampleId(4), 0.3, 0.1).unwrap() - 0.3 / 1.1).abs() < 1e-16);
        assert!((exact_solution(ExampleId(3), 0.9, 0.05).unwrap() - 1.9 / 1.05).abs() < 1e-15);
        assert_eq!(exact_solution(ExampleId(1), 0.0, 0.0).unwrap(), 1.0);
        assert!(matches!(
            exact_solution(ExampleId(2), 0.5, 1.0),
            Err(Error::Singular { .. })
        ));
    }

    #[test]
    fn printed_literals() {
        let p = Printed::parse("0.29703");
        assert!((p.unit - 1e-5).abs() < 1e-20);
        let p = Printed::parse("2.97029e-13");
        assert!((p.unit / 1e-18 - 1.0).abs() < 1e-12);
        assert_eq!(Printed::significant_digits("-0.0782081"), 6);
        assert_eq!(Printed::significant_digits("1.2381"), 5);
    }

    #[test]
    fn depth_one_table_is_initial_data() {
        let t = make_table(ExampleId(4), 1).unwrap();
        let unit = t.unit_pair().unwrap();
        for (iy, _) in TABLE_Y.iter().enumerate() {
            for (ix, &x) in TABLE_X.iter().enumerate() {
                assert_eq!(t.cell(iy, ix, unit).approx, x);
            }
        }
        assert!(t.cell(0, 0, 0).exact.is_none());
        assert!(t.cell(0, 0, 0).abs_error.is_none());
    }

    #[test]
    fn abs_error_is_consistent_with_cells() {
        let t = make_table(ExampleId(3), 4).unwrap();
        for c in &t.cells {
            match (c.exact, c.abs_error) {
                (Some(e), Some(err)) => {
                    assert_eq!(err, (e - c.approx).abs());
                    assert_eq!((c.alpha, c.beta), (1.0, 1.0));
                }
                (None, None) => assert_ne!((c.alpha, c.beta), (1.0, 1.0)),
                _ => panic!("exact and abs_error must appear together"),
            }
        }
    }

    #[test]
    fn scan_at_depth_one_is_far_off() {
        let scan = truncation_scan(ExampleId(4), 1);
        assert!(scan[0].error_column_deviation > 1e3);
        assert!(scan[0].unit_approx_deviation > 1e-2);
    }
}
