// Largest H-eigenvalues of hypergraph tensors by certified power iteration:
// the Collatz-Wielandt bracket encloses lambda at every step, so the solver
// stops with a guaranteed enclosure.
//
// Run with: cargo run --example spectral_radius

use hypertensor::{adjacency_radius, build_generalized_power, signless_radius, Graph, Hypergraph, SolverConfig};

fn main() -> hypertensor::Result<()> {
    let cfg = SolverConfig::default();

    // a single 4-edge: Q row sums are all 2, so lambda(Q) = 2 with the
    // all-ones Perron vector; the adjacency tensor has lambda = 1
    let single = Hypergraph::new(4, 4, vec![vec![0, 1, 2, 3]])?;
    let q = signless_radius(&single, &cfg)?;
    println!(
        "single 4-edge:  lambda(Q) = {:.12}  bracket [{:.3e}, {:.3e}]  {} iterations",
        q.lambda,
        q.bracket.0 - q.lambda,
        q.bracket.1 - q.lambda,
        q.iterations
    );
    let a = adjacency_radius(&single, &cfg)?;
    println!("single 4-edge:  lambda(A) = {:.12}", a.lambda);

    // the 4-power of the triangle: 9 vertices, 3 edges
    let (h, _) = build_generalized_power(&Graph::complete(3), 4, 1)?;
    let q = signless_radius(&h, &cfg)?;
    println!(
        "G^{{4,1}}(K3):    lambda(Q) = {:.12}  residual {:.2e}  {} iterations",
        q.lambda, q.residual, q.iterations
    );
    println!("  Perron vector (max-normalized): {:?}", rounded(&q.vector));

    // disconnected inputs: per-component max, vector supported on the winner
    let two = Hypergraph::new(8, 4, vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]])?;
    let pair = signless_radius(&two, &cfg)?;
    println!("two disjoint 4-edges: lambda(Q) = {:.12}", pair.lambda);
    Ok(())
}

fn rounded(v: &[f64]) -> Vec<f64> {
    v.iter().map(|x| (x * 1e6).round() / 1e6).collect()
}
