//! Equitable partitions of tensors: the equitability predicate, quotient
//! tensors, characteristic matrices, eigenvector lifting, the `AX = XB`
//! intertwining check and coarsest equitable refinement.
//!
//! A partition `{V_1, …, V_m}` of the index set is equitable for a tensor `A`
//! when, for every block-index tuple `(i, i2, …, ik)`, the row sum
//! `sum_{j2 in V_{i2}, …, jk in V_{ik}} a_{j,j2..jk}` does not depend on the
//! choice of `j in V_i`. The quotient tensor collects those common values
//! (averaged over the block in general), and an eigenpair of the quotient
//! lifts through the characteristic matrix to an eigenpair of `A`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::tensor::{
    matrix_tensor_product, tensor_matrix_product, DenseMatrix, DenseVector, SparseTensor,
};

/// Absolute tolerance for "constant over the block" comparisons. The tensors
/// of interest have small rational entries, so exact agreement up to rounding
/// is expected.
pub const EQUITABLE_TOL: f64 = 1e-12;

/// Ordered disjoint blocks covering `0..n`. Block order is significant: it
/// defines the quotient indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Validate blocks: nonempty, disjoint, and covering `0..n` where `n` is
    /// the total number of members. Members are sorted within each block.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidPartition("no blocks".into()));
        }
        let mut sorted_blocks = Vec::with_capacity(blocks.len());
        let mut total = 0usize;
        for mut b in blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            b.sort_unstable();
            total += b.len();
            sorted_blocks.push(b);
        }
        let mut seen = vec![false; total];
        for b in &sorted_blocks {
            for &i in b {
                if i >= total {
                    return Err(Error::InvalidPartition(format!(
                        "index {i} out of range for n = {total}"
                    )));
                }
                if seen[i] {
                    return Err(Error::InvalidPartition(format!("index {i} repeated")));
                }
                seen[i] = true;
            }
        }
        Ok(Self {
            blocks: sorted_blocks,
        })
    }

    /// The all-singletons partition of `0..n`.
    pub fn singletons(n: usize) -> Self {
        Self {
            blocks: (0..n).map(|i| vec![i]).collect(),
        }
    }

    /// The one-block partition of `0..n`.
    pub fn one_block(n: usize) -> Self {
        Self {
            blocks: vec![(0..n).collect()],
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Number of partitioned indices.
    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Map from index to its block number.
    pub fn block_of(&self) -> Vec<usize> {
        let mut map = vec![0; self.n()];
        for (b, members) in self.blocks.iter().enumerate() {
            for &i in members {
                map[i] = b;
            }
        }
        map
    }

    /// 0/1 characteristic matrix `X` with `x_{ij} = 1` iff `i in V_j`;
    /// exactly one 1 per row.
    pub fn characteristic_matrix(&self) -> DenseMatrix {
        let mut x = DenseMatrix::zeros(self.n(), self.num_blocks());
        for (j, members) in self.blocks.iter().enumerate() {
            for &i in members {
                x.set(i, j, 1.0);
            }
        }
        x
    }

    /// Lift a quotient vector: `(Xy)_i = y_{block(i)}`. Satisfies
    /// `(Xy)^{[p]} = X(y^{[p]})` exactly, the identity behind eigenvector
    /// lifting.
    pub fn lift(&self, y: &[f64]) -> Result<DenseVector> {
        if y.len() != self.num_blocks() {
            return Err(Error::DimensionMismatch {
                expected: self.num_blocks(),
                got: y.len(),
            });
        }
        let mut x = vec![0.0; self.n()];
        for (j, members) in self.blocks.iter().enumerate() {
            for &i in members {
                x[i] = y[j];
            }
        }
        Ok(x)
    }

    /// True iff every block of `self` is contained in a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        if self.n() != coarser.n() {
            return false;
        }
        let outer = coarser.block_of();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&i| outer[i] == outer[b[0]]))
    }
}

/// Row sums of `t` grouped by row index and ordered block tuple:
/// `(j, (i2..ik)) -> sum_{j2 in V_{i2}, …} t_{j,j2..jk}`.
fn row_block_sums(
    t: &SparseTensor,
    block_of: &[usize],
) -> BTreeMap<(usize, Vec<usize>), f64> {
    let mut sums = BTreeMap::new();
    for (idx, v) in t.entries() {
        let tuple: Vec<usize> = idx[1..].iter().map(|&j| block_of[j]).collect();
        *sums.entry((idx[0], tuple)).or_insert(0.0) += v;
    }
    sums
}

/// Equitability at the default tolerance [`EQUITABLE_TOL`].
pub fn is_equitable(t: &SparseTensor, p: &Partition) -> Result<bool> {
    is_equitable_with_tol(t, p, EQUITABLE_TOL)
}

/// True iff, for every block-index tuple, the inner row sum is constant over
/// each block within `tol`. Rows with no entries for a tuple count as zero.
pub fn is_equitable_with_tol(t: &SparseTensor, p: &Partition, tol: f64) -> Result<bool> {
    check_dims(t, p)?;
    let block_of = p.block_of();
    let sums = row_block_sums(t, &block_of);

    // group the observed sums by (block of j, tuple)
    let mut groups: BTreeMap<(usize, Vec<usize>), Vec<f64>> = BTreeMap::new();
    for ((j, tuple), s) in sums {
        groups.entry((block_of[j], tuple)).or_default().push(s);
    }

    for ((b, _), values) in groups {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &v in &values {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        if values.len() < p.blocks()[b].len() {
            // some row of the block has sum exactly zero for this tuple
            lo = lo.min(0.0);
            hi = hi.max(0.0);
        }
        if hi - lo > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Quotient tensor `b_{i,i2..ik} = (1/|V_i|) sum_{j in V_i} sum_{j2 in V_{i2}, …} a_{j,j2..jk}`.
///
/// Summation runs in ascending entry order, so results are reproducible.
pub fn quotient_tensor(t: &SparseTensor, p: &Partition) -> Result<SparseTensor> {
    check_dims(t, p)?;
    let block_of = p.block_of();
    let mut sums: BTreeMap<Vec<usize>, f64> = BTreeMap::new();
    for (idx, v) in t.entries() {
        let key: Vec<usize> = idx.iter().map(|&j| block_of[j]).collect();
        *sums.entry(key).or_insert(0.0) += v;
    }
    let mut b = SparseTensor::new(t.order(), p.num_blocks())?;
    for (key, total) in sums {
        let size = p.blocks()[key[0]].len() as f64;
        b.set(&key, total / size)?;
    }
    Ok(b)
}

/// Intertwining check `A·X = X·B` for the characteristic matrix `X` of `p`,
/// entrywise within `1e-12`. Agrees with [`is_equitable`] when `b` is the
/// quotient tensor of `t`.
pub fn verify_intertwine(t: &SparseTensor, p: &Partition, b: &SparseTensor) -> Result<bool> {
    check_dims(t, p)?;
    if b.dim() != p.num_blocks() || b.order() != t.order() {
        return Err(Error::DimensionMismatch {
            expected: p.num_blocks(),
            got: b.dim(),
        });
    }
    let x = p.characteristic_matrix();
    let ax = tensor_matrix_product(t, &x)?;
    let xb = matrix_tensor_product(&x, b)?;
    Ok(ax.approx_eq(&xb, 1e-12))
}

/// Coarsest equitable partition refining `p0`: blocks are repeatedly split by
/// the signature `j -> (sum over each reachable block tuple)` until the
/// partition is equitable. Deterministic: splits follow sorted signature
/// order and members stay ascending.
pub fn coarsest_equitable_refinement(t: &SparseTensor, p0: &Partition) -> Result<Partition> {
    check_dims(t, p0)?;
    let mut p = p0.clone();
    loop {
        let block_of = p.block_of();
        let sums = row_block_sums(t, &block_of);

        // signature per row: sorted (tuple, sum) pairs; sums that cancelled
        // to ~0 are treated the same as absent tuples
        let mut sig: BTreeMap<usize, Vec<(Vec<usize>, f64)>> = BTreeMap::new();
        for ((j, tuple), s) in sums {
            if s.abs() > EQUITABLE_TOL {
                sig.entry(j).or_default().push((tuple, s));
            }
        }

        let mut new_blocks = Vec::new();
        let mut split = false;
        for block in p.blocks() {
            let mut keyed: Vec<(usize, &[(Vec<usize>, f64)])> = block
                .iter()
                .map(|&j| (j, sig.get(&j).map(Vec::as_slice).unwrap_or(&[])))
                .collect();
            keyed.sort_by(|a, b| compare_signatures(a.1, b.1).then(a.0.cmp(&b.0)));

            let mut current: Vec<usize> = Vec::new();
            for (pos, &(j, s)) in keyed.iter().enumerate() {
                if pos > 0 && !signatures_close(keyed[pos - 1].1, s, EQUITABLE_TOL) {
                    new_blocks.push(std::mem::take(&mut current));
                    split = true;
                }
                current.push(j);
            }
            new_blocks.push(current);
        }
        if !split {
            return Ok(p);
        }
        p = Partition::new(new_blocks)?;
    }
}

fn compare_signatures(a: &[(Vec<usize>, f64)], b: &[(Vec<usize>, f64)]) -> std::cmp::Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| {
            for ((ta, va), (tb, vb)) in a.iter().zip(b) {
                let ord = ta.cmp(tb).then(va.total_cmp(vb));
                if ord != std::cmp::Ordering::Equal {
                    return ord;
                }
            }
            std::cmp::Ordering::Equal
        })
}

fn signatures_close(a: &[(Vec<usize>, f64)], b: &[(Vec<usize>, f64)], tol: f64) -> bool {
    a.len() == b.len()
        && a.iter()
            .zip(b)
            .all(|((ta, va), (tb, vb))| ta == tb && (va - vb).abs() <= tol)
}

fn check_dims(t: &SparseTensor, p: &Partition) -> Result<()> {
    if t.dim() != p.n() {
        return Err(Error::DimensionMismatch {
            expected: t.dim(),
            got: p.n(),
        });
    }
    Ok(())
}
