//! Spectral radii of uniform hypergraphs through nonnegative tensors.
//!
//! A k-uniform hypergraph carries an order-k adjacency tensor (weight
//! `1/(k-1)!` on every ordering of each edge) together with its Laplacian
//! `L = D - A` and signless Laplacian `Q = D + A`. This crate computes their
//! largest H-eigenvalues — solutions of `Tx = λ x^{[k-1]}` with a positive
//! eigenvector — and the structure that makes those computations cheap:
//!
//! * sparse order-k tensors with tensor-vector and tensor-matrix products,
//!   diagonal similarity, Collatz-Wielandt bounds and weak irreducibility
//!   ([`tensor`]);
//! * k-uniform hypergraphs with implicit `A`/`L`/`Q` operators and
//!   odd-bipartite certificates ([`hypergraph`]);
//! * equitable partitions, quotient tensors, the `AX = XB` intertwining law
//!   and eigenvector lifting ([`partition`]);
//! * generalized power hypergraphs `G^{k,s}` with their natural equitable
//!   partition, closed-form quotient, and the closed-form spectral radius of
//!   regular seeds ([`power`]);
//! * a certified power-iteration solver plus a monotonicity verification
//!   harness ([`solver`]).
//!
//! The quotient route is the point: instead of iterating on the
//! `n·s + m·(k-2s)` vertices of `G^{k,s}`, solve the `(n + m)`-dimensional
//! quotient `B^{k,s}` and lift the eigenvector back exactly.
//!
//! ```
//! use hypertensor::{Graph, SolverConfig};
//!
//! let g = Graph::complete(3);
//! let pair = hypertensor::quotient_radius(&g, 4, 1, &SolverConfig::default()).unwrap();
//! assert!((pair.lambda - 3.0).abs() < 1e-8);
//! ```
//!
//! Runnable walkthroughs for each capability live in `examples/`; the
//! `hypertensor` binary exposes the same operations as subcommands.

pub mod error;
pub mod hypergraph;
pub mod io;
pub mod partition;
pub mod power;
pub mod report;
mod scc;
pub mod solver;
pub mod tensor;

pub use error::{Error, Result};
pub use hypergraph::{Graph, Hypergraph, OddBipartition};
pub use partition::{
    coarsest_equitable_refinement, is_equitable, is_equitable_with_tol, quotient_tensor,
    verify_intertwine, Partition,
};
pub use power::{
    build_generalized_power, embed_in_regular, natural_partition, quotient_apply,
    quotient_closed_form, regular_perron_vector, regular_radius, regular_radius_bracketed,
    GenPowerLabeling, QuotientOp,
};
pub use solver::{
    adjacency_radius, laplacian_radius_odd_bipartite, largest_h_eigenvalue,
    largest_h_eigenvalue_op, quotient_radius, quotient_radius_lifted, residual, signless_radius,
    solve_irreducible, verify_monotonicity, EigenPair, MonotonicityReport, SolverConfig,
};
pub use tensor::{
    collatz_wielandt_bounds, general_product, hadamard_power, matrix_tensor_product,
    tensor_apply, tensor_matrix_product, DenseMatrix, DenseVector, ProductTensor, SparseTensor,
    TensorOp,
};
