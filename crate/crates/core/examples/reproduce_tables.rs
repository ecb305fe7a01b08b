//! Rebuilds the four reference tables at their recovered truncation depths
//! and prints them next to the published values.

use fracadm::problems::{reference_table, TABLE_ORDERS};
use fracadm::{make_table, ExampleId};

fn main() -> fracadm::Result<()> {
    for (id, depth) in [(1, 4), (2, 4), (3, 4), (4, 6)] {
        let id = ExampleId::new(id)?;
        let table = make_table(id, depth)?;
        let unit = table.unit_pair().expect("(1, 1) column");
        println!("example {id}, N = {depth}");
        println!(
            "{:>5} {:>4} {:>11} {:>11} {:>11} {:>11} {:>11}",
            "y", "x", "a=b=0.5", "a=b=0.75", "a=b=1", "exact", "error"
        );
        for (k, r) in reference_table(id).iter().enumerate() {
            let (iy, ix) = (k / 3, k % 3);
            let approx: Vec<String> = (0..TABLE_ORDERS.len())
                .map(|p| format!("{:>11.6}", table.cell(iy, ix, p).approx))
                .collect();
            let c = table.cell(iy, ix, unit);
            println!(
                "{:>5} {:>4} {} {:>11.6} {:>11.3e}",
                r.y,
                r.x,
                approx.join(" "),
                c.exact.unwrap_or(f64::NAN),
                c.tail_error.unwrap_or(f64::NAN),
            );
            println!(
                "{:>10} {:>11} {:>11} {:>11} {:>11} {:>11}",
                "printed", r.approx[0], r.approx[1], r.approx[2], r.exact, r.error
            );
        }
        println!();
    }
    Ok(())
}
