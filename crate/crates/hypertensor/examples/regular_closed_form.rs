// For a connected d-regular seed graph, lambda(Q^{k,s}) is the largest root
// of (x-d)(x-1)^((k-2s)/(2s)) = d, and the quotient Perron vector is 1 on
// vertex rows and (lambda-1)^(-1/(2s)) on edge rows.
//
// Run with: cargo run --example regular_closed_form

use hypertensor::{
    quotient_radius, regular_perron_vector, regular_radius, residual, Graph, QuotientOp,
    SolverConfig,
};

fn main() -> hypertensor::Result<()> {
    let cfg = SolverConfig::default();

    println!("closed-form roots vs power iteration on the quotient:");
    println!("{:>3} {:>3} {:>3} {:>16} {:>16} {:>10}", "d", "k", "s", "root", "iterated", "diff");
    for d in [2usize, 3] {
        let g = Graph::complete(d + 1);
        for (k, s) in [(4, 1), (6, 1), (6, 2), (8, 1)] {
            let root = regular_radius(d, k, s)?;
            let pair = quotient_radius(&g, k, s, &cfg)?;
            println!(
                "{d:>3} {k:>3} {s:>3} {root:>16.12} {:>16.12} {:>10.2e}",
                pair.lambda,
                (root - pair.lambda).abs()
            );
        }
    }

    // the closed-form Perron vector satisfies the eigen equation directly
    let g = Graph::complete(4);
    let (k, s) = (6, 1);
    let lambda = regular_radius(3, k, s)?;
    let y = regular_perron_vector(&g, k, s, lambda)?;
    let op = QuotientOp::new(&g, k, s)?;
    println!(
        "\nK4 at (k,s)=({k},{s}): lambda = {lambda:.12}, edge value = {:.12}",
        y[g.n()]
    );
    println!("residual of the closed-form pair: {:.2e}", residual(&op, lambda, &y)?);

    // degree-1 seeds degenerate to lambda = 2 for every (k, s)
    for (k, s) in [(4, 1), (6, 2), (10, 3)] {
        println!("d=1, (k,s)=({k},{s}): root = {}", regular_radius(1, k, s)?);
    }
    Ok(())
}
