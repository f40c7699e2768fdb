// The sparse tensor layer on its own: products, Collatz-Wielandt bounds,
// diagonal similarity, weak irreducibility and triangular-block structure,
// plus JSON serialization.
//
// Run with: cargo run --example tensor_toolkit

use hypertensor::{
    collatz_wielandt_bounds, general_product, io, largest_h_eigenvalue, quotient_closed_form,
    tensor_apply, Graph, SolverConfig, SparseTensor,
};

fn main() -> hypertensor::Result<()> {
    // B^{4,1}(K3): quotient of the signless Laplacian of the 4-power triangle
    let b = quotient_closed_form(&Graph::complete(3), 4, 1)?;
    println!("B^{{4,1}}(K3): order {}, dim {}, {} entries", b.order(), b.dim(), b.nnz());

    let ones = vec![1.0; b.dim()];
    println!("B * 1 = {:?}", tensor_apply(&b, &ones)?);

    // Collatz-Wielandt at all-ones brackets lambda = 3 by (2, 4)
    let (lo, hi) = collatz_wielandt_bounds(&b, &ones)?;
    println!("CW bounds at all-ones: [{lo}, {hi}]");
    let pair = largest_h_eigenvalue(&b, &SolverConfig::default())?;
    println!("lambda = {:.12} in [{lo}, {hi}]", pair.lambda);

    // diagonal similarity preserves the spectrum
    let d = vec![1.0, 2.0, 1.0, 0.5, 2.0, 1.0];
    let similar = b.diagonal_similarity(&d)?;
    let pair2 = largest_h_eigenvalue(&similar, &SolverConfig::default())?;
    println!(
        "after diagonal similarity: lambda = {:.12} (difference {:.2e})",
        pair2.lambda,
        (pair.lambda - pair2.lambda).abs()
    );

    // structure predicates
    println!("B weakly irreducible? {}", b.is_weakly_irreducible());
    let diag = SparseTensor::from_diagonal(4, &[1.0, 2.0, 3.0])?;
    println!(
        "diagonal tensor: weakly irreducible? {}, lower triangular at split 1? {}",
        diag.is_weakly_irreducible(),
        diag.is_lower_triangular_block(1)?
    );

    // identity law of the product, and JSON round-trip
    let id = SparseTensor::from_diagonal(2, &vec![1.0; b.dim()])?;
    assert_eq!(general_product(&b, &id)?, b);
    let json = io::tensor_to_json(&b).to_string();
    assert_eq!(io::tensor_from_json(&json)?, b);
    println!("identity product law and JSON round-trip hold");
    Ok(())
}
