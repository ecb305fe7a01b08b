//! Scans truncation depths and picks the one that best matches each
//! reference table.

use fracadm::{recovered_depth, truncation_scan, ExampleId};

fn main() -> fracadm::Result<()> {
    for id in ExampleId::ALL {
        let rows = truncation_scan(id, 8);
        println!("example {id}");
        println!("  n  error-col   unit-approx  fractional");
        for r in &rows {
            let frac = r
                .fractional_deviation
                .map_or("failed".to_string(), |d| format!("{d:.3e}"));
            println!(
                "  {}  {:.3e}  {:.3e}  {frac}",
                r.n, r.error_column_deviation, r.unit_approx_deviation
            );
        }
        println!("  recovered N = {:?}\n", recovered_depth(&rows));
    }
    Ok(())
}
