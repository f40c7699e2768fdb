// Embed any graph as an induced subgraph of a Δ-regular graph by repeated
// doubling with a matching on deficient vertices. Combined with the
// closed-form root for regular seeds this bounds lambda(Q^{k,s}) of an
// arbitrary seed from above — the bound that drives lambda toward Δ as k
// grows.
//
// Run with: cargo run --example konig_embedding

use hypertensor::{embed_in_regular, quotient_radius, regular_radius, Graph, SolverConfig};

fn main() -> hypertensor::Result<()> {
    let cfg = SolverConfig::default();

    let star = Graph::new(4, vec![(0, 1), (0, 2), (0, 3)])?;
    let host = embed_in_regular(&star);
    println!(
        "star K1,3 (max degree {}) embeds in a {}-regular graph on {} vertices",
        star.max_degree(),
        host.regular_degree().unwrap(),
        host.n()
    );
    let ids: Vec<usize> = (0..star.n()).collect();
    let (induced, _) = host.induced_subgraph(&ids);
    assert_eq!(induced, star, "induced subgraph on the original ids is the star");

    // lambda(Q^{k,s}) of a subgraph never exceeds the host's, and the host's
    // value is the closed-form root for Δ-regular graphs
    for k in [4usize, 6, 8, 12] {
        let sub = quotient_radius(&star, k, 1, &cfg)?.lambda;
        let bound = regular_radius(star.max_degree(), k, 1)?;
        println!(
            "k={k:>2}: lambda(B^{{k,1}}(K1,3)) = {sub:.9} <= {bound:.9} = Δ-regular root (gap to Δ: {:.4})",
            bound - star.max_degree() as f64
        );
        assert!(sub <= bound + 1e-9);
    }
    Ok(())
}
