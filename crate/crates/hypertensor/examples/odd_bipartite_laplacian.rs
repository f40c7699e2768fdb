// Odd-bipartite hypergraphs have lambda(L) = lambda(Q): flip the signs of
// the Q-Perron vector on one side of an odd-bipartition and it satisfies the
// Laplacian eigenvalue equation exactly. The certificate comes from solving
// sum_{v in e} x_v = 1 over GF(2).
//
// Run with: cargo run --example odd_bipartite_laplacian

use hypertensor::{
    build_generalized_power, laplacian_radius_odd_bipartite, residual, Graph, SolverConfig,
};

fn main() -> hypertensor::Result<()> {
    let cfg = SolverConfig::default();

    // every cored power (s < k/2) is odd-bipartite: one core vertex per edge
    let (h, _) = build_generalized_power(&Graph::complete(3), 4, 1)?;
    let cert = h.is_odd_bipartite().expect("cored powers are odd-bipartite");
    println!("G^{{4,1}}(K3) odd-bipartition: V1 = {:?}", cert.v1);
    assert!(cert.verify(&h));

    let (pair, signed) = laplacian_radius_odd_bipartite(&h, &cfg)?;
    println!("lambda(L) = lambda(Q) = {:.12}", pair.lambda);
    println!("signed eigenvector: {:?}", rounded(&signed));
    println!(
        "Laplacian residual of the flipped pair: {:.2e}",
        residual(&h.laplacian_op(), pair.lambda, &signed)?
    );

    // at s = k/2 the certificate exists iff the seed graph is bipartite
    let (half_k3, _) = build_generalized_power(&Graph::complete(3), 4, 2)?;
    println!(
        "\nG^{{4,2}}(K3) odd-bipartite? {} (K3 bipartite? {})",
        half_k3.is_odd_bipartite().is_some(),
        Graph::complete(3).is_bipartite()
    );
    let (half_c4, _) = build_generalized_power(&Graph::cycle(4), 4, 2)?;
    println!(
        "G^{{4,2}}(C4) odd-bipartite? {} (C4 bipartite? {})",
        half_c4.is_odd_bipartite().is_some(),
        Graph::cycle(4).is_bipartite()
    );

    match laplacian_radius_odd_bipartite(&half_k3, &cfg) {
        Err(e) => println!("Laplacian route on G^{{4,2}}(K3): {e}"),
        Ok(_) => unreachable!("K3 is not bipartite"),
    }
    Ok(())
}

fn rounded(v: &[f64]) -> Vec<f64> {
    v.iter().map(|x| (x * 1e6).round() / 1e6).collect()
}
