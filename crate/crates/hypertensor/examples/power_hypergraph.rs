// Build generalized power hypergraphs G^{k,s}: every graph vertex becomes an
// s-block, every graph edge becomes its two endpoint blocks plus k-2s fresh
// core vertices.
//
// Run with: cargo run --example power_hypergraph

use hypertensor::{build_generalized_power, Graph};

fn main() -> hypertensor::Result<()> {
    let k3 = Graph::complete(3);

    for (k, s) in [(4, 1), (6, 1), (4, 2), (2, 1)] {
        let (h, labeling) = build_generalized_power(&k3, k, s)?;
        println!("G^{{{k},{s}}}(K3): {} vertices, {} edges of size {}", h.n(), h.m(), h.k());
        println!("  vertex blocks: {:?}", labeling.vertex_blocks);
        if labeling.edge_blocks.is_empty() {
            println!("  no core blocks (s = k/2)");
        } else {
            println!("  core blocks:   {:?}", labeling.edge_blocks);
        }
        for e in h.edges() {
            println!("  edge {e:?}");
        }
        let degrees = h.degrees();
        println!("  degrees: {degrees:?}\n");
    }

    // |V^{k,s}| = n*s + m*(k-2s) on any seed
    let p4 = Graph::path(4);
    let (h, _) = build_generalized_power(&p4, 5, 2)?;
    assert_eq!(h.n(), 4 * 2 + 3);
    println!("G^{{5,2}}(P4) has {} vertices as predicted by n*s + m*(k-2s)", h.n());
    Ok(())
}
