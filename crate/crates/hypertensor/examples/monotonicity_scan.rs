// Scan lambda(B^{k,s}) over a (k, s) grid and check the structural laws:
// strictly decreasing in k, strictly increasing in s, always above the
// maximum degree for cored powers, with the gap to the maximum degree
// shrinking toward zero — and constant 2 when the maximum degree is 1.
//
// Run with: cargo run --example monotonicity_scan

use hypertensor::report::{assertion_lines, monotonicity_csv};
use hypertensor::{verify_monotonicity, Graph, SolverConfig};

fn main() -> hypertensor::Result<()> {
    let cfg = SolverConfig::default();

    for (name, g) in [
        ("K3 (triangle)", Graph::complete(3)),
        ("P4 (path)", Graph::path(4)),
        ("K2 (single edge)", Graph::complete(2)),
    ] {
        println!("=== {name}, max degree {} ===", g.max_degree());
        let report = verify_monotonicity(&g, &[4, 6, 8, 10], &[1, 2, 3], &cfg)?;
        print!("{}", monotonicity_csv(&report));
        print!("{}", assertion_lines(&report));
        println!();
    }
    Ok(())
}
