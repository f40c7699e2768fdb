// Equitable partitions of tensors: the equitability test, the quotient
// tensor, the characteristic-matrix intertwining law AX = XB, and coarsest
// equitable refinement from a seed partition.
//
// Run with: cargo run --example equitable_partitions

use hypertensor::{
    build_generalized_power, coarsest_equitable_refinement, is_equitable, quotient_tensor,
    verify_intertwine, Graph, Partition,
};

fn main() -> hypertensor::Result<()> {
    let g = Graph::complete(3);
    let (h, labeling) = build_generalized_power(&g, 4, 1)?;
    let q = h.signless_tensor();
    println!(
        "Q^{{4,1}}(K3) materialized: order {}, dim {}, {} stored entries",
        q.order(),
        q.dim(),
        q.nnz()
    );

    // the natural partition (vertex blocks then core blocks) is equitable
    let natural = labeling.natural_partition();
    println!("natural partition: {:?}", natural.blocks());
    println!("  equitable?  {}", is_equitable(&q, &natural)?);

    let b = quotient_tensor(&q, &natural)?;
    println!("  quotient tensor: dim {}, {} entries", b.dim(), b.nnz());
    println!("  AX = XB?    {}", verify_intertwine(&q, &natural, &b)?);

    // merging an original vertex with a core pair breaks equitability
    let mut blocks = natural.blocks().to_vec();
    let core = blocks.remove(3);
    blocks[0].extend(core);
    let merged = Partition::new(blocks)?;
    println!("merged partition:  {:?}", merged.blocks());
    println!("  equitable?  {}", is_equitable(&q, &merged)?);
    let b_merged = quotient_tensor(&q, &merged)?;
    println!("  AX = XB?    {}", verify_intertwine(&q, &merged, &b_merged)?);

    // refinement discovers an equitable partition from a single block
    let refined = coarsest_equitable_refinement(&q, &Partition::one_block(q.dim()))?;
    println!("coarsest equitable refinement of the one-block partition:");
    println!("  {:?}", refined.blocks());
    println!("  equitable?  {}", is_equitable(&q, &refined)?);
    Ok(())
}
