//! Sparse real tensors of order `k` and dimension `n`, the tensor-vector and
//! tensor-matrix products, diagonal similarity, Collatz-Wielandt bounds, weak
//! irreducibility and the triangular-block predicate.
//!
//! A tensor `T = (t_{i1…ik})` acts on a vector through
//! `(Tx)_i = sum_{i2..ik} t_{i,i2..ik} x_{i2} … x_{ik}`, the left side of the
//! eigenvalue equation `Tx = lambda x^{[k-1]}`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scc;

/// Entries whose magnitude falls below this after arithmetic are dropped,
/// preserving the no-zero-entry invariant.
pub const ZERO_DROP_TOL: f64 = 1e-14;

/// Dense real vector, indexed like the tensors it is applied to.
pub type DenseVector = Vec<f64>;

/// Anything that acts like an order-`k`, dimension-`n` tensor on vectors.
///
/// `apply` must compute `(Tx)_i = sum t_{i,i2..ik} x_{i2}…x_{ik}` and may
/// assume `x.len() == dim()`; use [`tensor_apply`] for the checked entry
/// point. `digraph` returns, for every row `i`, the sorted list of `j != i`
/// that appear together with `i` in some nonzero entry of row `i`; the
/// operator is weakly irreducible iff this digraph is strongly connected.
pub trait TensorOp {
    fn order(&self) -> usize;
    fn dim(&self) -> usize;
    fn apply(&self, x: &[f64]) -> DenseVector;
    fn digraph(&self) -> Vec<Vec<usize>>;
}

/// Checked tensor-vector product: `y_i = sum t_{i,i2..ik} x_{i2}…x_{ik}`.
///
/// Homogeneous of degree `k - 1` in `x`.
pub fn tensor_apply<T: TensorOp + ?Sized>(op: &T, x: &[f64]) -> Result<DenseVector> {
    if x.len() != op.dim() {
        return Err(Error::DimensionMismatch {
            expected: op.dim(),
            got: x.len(),
        });
    }
    Ok(op.apply(x))
}

/// Elementwise power `x^{[p]} = (x_1^p, …, x_n^p)`.
///
/// Fractional exponents require nonnegative entries.
pub fn hadamard_power(x: &[f64], p: f64) -> Result<DenseVector> {
    let fractional = p.fract() != 0.0;
    x.iter()
        .map(|&v| {
            if fractional && v < 0.0 {
                Err(Error::NegativeBaseFractionalPower {
                    base: v,
                    exponent: p,
                })
            } else {
                Ok(v.powf(p))
            }
        })
        .collect()
}

/// Collatz-Wielandt bounds of a nonnegative operator at a positive vector:
/// `a = min_i (Tx)_i / x_i^{k-1}` and `b = max_i (Tx)_i / x_i^{k-1}`.
///
/// For nonnegative `T` these bracket the largest H-eigenvalue, `a <= lambda(T) <= b`.
pub fn collatz_wielandt_bounds<T: TensorOp + ?Sized>(op: &T, x: &[f64]) -> Result<(f64, f64)> {
    if x.len() != op.dim() {
        return Err(Error::DimensionMismatch {
            expected: op.dim(),
            got: x.len(),
        });
    }
    for (i, &v) in x.iter().enumerate() {
        if v <= 0.0 {
            return Err(Error::NonpositiveEntry { index: i, value: v });
        }
    }
    let y = op.apply(x);
    let km1 = (op.order() - 1) as i32;
    let mut a = f64::INFINITY;
    let mut b = f64::NEG_INFINITY;
    for (yi, xi) in y.iter().zip(x) {
        let r = yi / xi.powi(km1);
        a = a.min(r);
        b = b.max(r);
    }
    Ok((a, b))
}

/// Order-`k`, dimension-`n` real tensor stored as a map from index tuples to
/// nonzero values. No symmetry is assumed; quotient tensors are only
/// partially symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseTensor {
    order: usize,
    dim: usize,
    entries: BTreeMap<Vec<usize>, f64>,
}

impl SparseTensor {
    /// Empty (all-zero) tensor of the given order and dimension.
    pub fn new(order: usize, dim: usize) -> Result<Self> {
        if order < 1 {
            return Err(Error::InvalidOrder { min: 1, got: order });
        }
        if dim < 1 {
            return Err(Error::EmptyDimension);
        }
        Ok(Self {
            order,
            dim,
            entries: BTreeMap::new(),
        })
    }

    /// Diagonal tensor with `diag[i]` at position `(i, i, …, i)`.
    pub fn from_diagonal(order: usize, diag: &[f64]) -> Result<Self> {
        let mut t = Self::new(order, diag.len())?;
        for (i, &v) in diag.iter().enumerate() {
            t.set(&vec![i; order], v)?;
        }
        Ok(t)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Iterate entries in lexicographic index order.
    pub fn entries(&self) -> impl Iterator<Item = (&[usize], f64)> {
        self.entries.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    fn check_index(&self, idx: &[usize]) -> Result<()> {
        if idx.len() != self.order {
            return Err(Error::EntryLength {
                order: self.order,
                got: idx.len(),
            });
        }
        for &i in idx {
            if i >= self.dim {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    dim: self.dim,
                });
            }
        }
        Ok(())
    }

    /// Set the entry at `idx`; values below [`ZERO_DROP_TOL`] clear it.
    pub fn set(&mut self, idx: &[usize], value: f64) -> Result<()> {
        self.check_index(idx)?;
        if value.abs() < ZERO_DROP_TOL {
            self.entries.remove(idx);
        } else {
            self.entries.insert(idx.to_vec(), value);
        }
        Ok(())
    }

    /// Accumulate `delta` onto the entry at `idx`.
    pub fn add(&mut self, idx: &[usize], delta: f64) -> Result<()> {
        self.check_index(idx)?;
        let v = self.entries.get(idx).copied().unwrap_or(0.0) + delta;
        self.set(idx, v)
    }

    /// Entry value, zero when absent.
    pub fn get(&self, idx: &[usize]) -> f64 {
        self.entries.get(idx).copied().unwrap_or(0.0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|&v| v >= 0.0)
    }

    /// First negative entry, if any.
    pub fn negative_entry(&self) -> Option<(Vec<usize>, f64)> {
        self.entries
            .iter()
            .find(|(_, &v)| v < 0.0)
            .map(|(k, &v)| (k.clone(), v))
    }

    /// Diagonal similarity transform `T' = D^{-(k-1)} T D`:
    /// `t'_{i1…ik} = t_{i1…ik} · d_{i1}^{-(k-1)} · d_{i2} … d_{ik}`.
    ///
    /// Preserves the whole H-spectrum for any invertible diagonal `d`.
    pub fn diagonal_similarity(&self, d: &[f64]) -> Result<SparseTensor> {
        if d.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: d.len(),
            });
        }
        if let Some(i) = d.iter().position(|&v| v == 0.0) {
            return Err(Error::ZeroDiagonal { index: i });
        }
        let km1 = (self.order - 1) as i32;
        let mut out = SparseTensor::new(self.order, self.dim)?;
        for (idx, v) in self.entries() {
            let mut scaled = v * d[idx[0]].powi(-km1);
            for &j in &idx[1..] {
                scaled *= d[j];
            }
            out.set(idx, scaled)?;
        }
        Ok(out)
    }

    /// True iff `t_{i1…ik} = 0` whenever `i1 < split` and at least one of
    /// `i2…ik` is `>= split`.
    pub fn is_lower_triangular_block(&self, split: usize) -> Result<bool> {
        if split < 1 || split > self.dim.saturating_sub(1) {
            return Err(Error::SplitOutOfRange {
                split,
                dim: self.dim,
            });
        }
        Ok(!self
            .entries()
            .any(|(idx, _)| idx[0] < split && idx[1..].iter().any(|&j| j >= split)))
    }

    /// Weak irreducibility: the digraph with an arc `i -> j` whenever some
    /// nonzero entry `t_{i,i2..ik}` has `j` among `i2..ik` is strongly
    /// connected. Dimension 1 is trivially weakly irreducible.
    pub fn is_weakly_irreducible(&self) -> bool {
        scc::is_strongly_connected(&self.digraph())
    }

    /// Principal subtensor on the sorted index set `indices`: keeps exactly
    /// the entries all of whose indices lie in the set, reindexed to
    /// `0..indices.len()`.
    pub fn principal_subtensor(&self, indices: &[usize]) -> Result<SparseTensor> {
        let mut pos = vec![usize::MAX; self.dim];
        for (p, &i) in indices.iter().enumerate() {
            if i >= self.dim {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    dim: self.dim,
                });
            }
            pos[i] = p;
        }
        let mut out = SparseTensor::new(self.order, indices.len().max(1))?;
        if indices.is_empty() {
            return Ok(out);
        }
        'entry: for (idx, v) in self.entries() {
            let mut mapped = Vec::with_capacity(self.order);
            for &i in idx {
                if pos[i] == usize::MAX {
                    continue 'entry;
                }
                mapped.push(pos[i]);
            }
            out.set(&mapped, v)?;
        }
        Ok(out)
    }

    /// Dense matrix view of an order-2 tensor.
    pub fn to_dense_matrix(&self) -> Result<DenseMatrix> {
        if self.order != 2 {
            return Err(Error::InvalidOrder {
                min: 2,
                got: self.order,
            });
        }
        let mut m = DenseMatrix::zeros(self.dim, self.dim);
        for (idx, v) in self.entries() {
            m.set(idx[0], idx[1], v);
        }
        Ok(m)
    }
}

impl TensorOp for SparseTensor {
    fn order(&self) -> usize {
        self.order
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn apply(&self, x: &[f64]) -> DenseVector {
        debug_assert_eq!(x.len(), self.dim);
        let mut y = vec![0.0; self.dim];
        for (idx, v) in self.entries() {
            let mut term = v;
            for &j in &idx[1..] {
                term *= x[j];
            }
            y[idx[0]] += term;
        }
        y
    }

    fn digraph(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.dim];
        for (idx, _) in self.entries() {
            let i = idx[0];
            for &j in &idx[1..] {
                if j != i {
                    adj[i].push(j);
                }
            }
        }
        for out in &mut adj {
            out.sort_unstable();
            out.dedup();
        }
        adj
    }
}

/// Row-major dense matrix; holds characteristic matrices and diagonal scalings.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    values: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            values: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.values[i * self.cols + j] = v;
    }

    /// Column sums, handy for checking characteristic matrices.
    pub fn column_sums(&self) -> Vec<f64> {
        let mut sums = vec![0.0; self.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                sums[j] += self.get(i, j);
            }
        }
        sums
    }

    fn nonzeros_by_row(&self) -> Vec<Vec<(usize, f64)>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter_map(|j| {
                        let v = self.get(i, j);
                        (v != 0.0).then_some((j, v))
                    })
                    .collect()
            })
            .collect()
    }

    fn nonzeros_by_col(&self) -> Vec<Vec<(usize, f64)>> {
        let mut cols = vec![Vec::new(); self.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if v != 0.0 {
                    cols[j].push((i, v));
                }
            }
        }
        cols
    }
}

/// Product tensor with dimensions `(row_dim, col_dim, …, col_dim)`, the shape
/// of both `A·X` and `X·B` for a square tensor and a rectangular matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductTensor {
    row_dim: usize,
    col_dim: usize,
    order: usize,
    entries: BTreeMap<Vec<usize>, f64>,
}

impl ProductTensor {
    fn new(row_dim: usize, col_dim: usize, order: usize) -> Self {
        Self {
            row_dim,
            col_dim,
            order,
            entries: BTreeMap::new(),
        }
    }

    fn add(&mut self, idx: Vec<usize>, delta: f64) {
        let v = self.entries.get(&idx).copied().unwrap_or(0.0) + delta;
        if v.abs() < ZERO_DROP_TOL {
            self.entries.remove(&idx);
        } else {
            self.entries.insert(idx, v);
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn row_dim(&self) -> usize {
        self.row_dim
    }

    pub fn col_dim(&self) -> usize {
        self.col_dim
    }

    pub fn get(&self, idx: &[usize]) -> f64 {
        self.entries.get(idx).copied().unwrap_or(0.0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[usize], f64)> {
        self.entries.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    /// Largest absolute entrywise difference between two products of the
    /// same shape.
    pub fn max_abs_diff(&self, other: &ProductTensor) -> Result<f64> {
        if self.row_dim != other.row_dim
            || self.col_dim != other.col_dim
            || self.order != other.order
        {
            return Err(Error::DimensionMismatch {
                expected: self.row_dim,
                got: other.row_dim,
            });
        }
        let mut worst: f64 = 0.0;
        for (idx, v) in self.entries() {
            worst = worst.max((v - other.get(idx)).abs());
        }
        for (idx, v) in other.entries() {
            worst = worst.max((v - self.get(idx)).abs());
        }
        Ok(worst)
    }

    pub fn approx_eq(&self, other: &ProductTensor, tol: f64) -> bool {
        matches!(self.max_abs_diff(other), Ok(d) if d <= tol)
    }

    /// Convert back to a square tensor when `row_dim == col_dim`.
    pub fn to_sparse_tensor(&self) -> Result<SparseTensor> {
        if self.row_dim != self.col_dim {
            return Err(Error::DimensionMismatch {
                expected: self.row_dim,
                got: self.col_dim,
            });
        }
        let mut t = SparseTensor::new(self.order, self.row_dim)?;
        for (idx, v) in self.entries() {
            t.set(idx, v)?;
        }
        Ok(t)
    }
}

/// Tensor-matrix product `(A·X)_{i,a2..ak} = sum_{i2..ik} a_{i,i2..ik} x_{i2,a2} … x_{ik,ak}`.
///
/// Cost grows with the product of per-row nonzero counts of `X`; intended for
/// sparse matrices such as characteristic or permutation matrices, and for
/// desk-scale dense ones.
pub fn tensor_matrix_product(a: &SparseTensor, x: &DenseMatrix) -> Result<ProductTensor> {
    if x.rows() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: x.rows(),
        });
    }
    let mut out = ProductTensor::new(a.dim(), x.cols(), a.order());
    let rows = x.nonzeros_by_row();
    let k = a.order();
    for (idx, v) in a.entries() {
        // cartesian product over the nonzero columns of each factor row
        let choices: Vec<&Vec<(usize, f64)>> = idx[1..].iter().map(|&j| &rows[j]).collect();
        if choices.iter().any(|c| c.is_empty()) {
            continue;
        }
        let mut cursor = vec![0usize; k - 1];
        'tuples: loop {
            let mut tuple = Vec::with_capacity(k);
            tuple.push(idx[0]);
            let mut term = v;
            for (slot, &c) in cursor.iter().enumerate() {
                let (col, xv) = choices[slot][c];
                tuple.push(col);
                term *= xv;
            }
            out.add(tuple, term);
            // advance the mixed-radix cursor, most significant slot first
            let mut slot = k - 1;
            loop {
                if slot == 0 {
                    break 'tuples;
                }
                slot -= 1;
                cursor[slot] += 1;
                if cursor[slot] < choices[slot].len() {
                    break;
                }
                cursor[slot] = 0;
            }
        }
    }
    Ok(out)
}

/// Matrix-tensor product `(X·B)_{i,i2..ik} = sum_j x_{ij} b_{j,i2..ik}`.
pub fn matrix_tensor_product(x: &DenseMatrix, b: &SparseTensor) -> Result<ProductTensor> {
    if x.cols() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: b.dim(),
            got: x.cols(),
        });
    }
    let mut out = ProductTensor::new(x.rows(), b.dim(), b.order());
    let cols = x.nonzeros_by_col();
    for (idx, v) in b.entries() {
        for &(i, xv) in &cols[idx[0]] {
            let mut tuple = Vec::with_capacity(b.order());
            tuple.push(i);
            tuple.extend_from_slice(&idx[1..]);
            out.add(tuple, xv * v);
        }
    }
    Ok(out)
}

/// General product of two square tensors, restricted to the two matrix cases
/// used by the equitable-partition machinery: `A · M` with `M` of order 2,
/// and `M · B` with `M` of order 2. Anything else is rejected.
pub fn general_product(a: &SparseTensor, b: &SparseTensor) -> Result<SparseTensor> {
    if b.order() == 2 {
        tensor_matrix_product(a, &b.to_dense_matrix()?)?.to_sparse_tensor()
    } else if a.order() == 2 {
        matrix_tensor_product(&a.to_dense_matrix()?, b)?.to_sparse_tensor()
    } else {
        Err(Error::UnsupportedProduct {
            left: a.order(),
            right: b.order(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_edge_adjacency() -> SparseTensor {
        // adjacency tensor of the 3-edge {0,1,2}: 1/2 on all 6 orderings
        let mut t = SparseTensor::new(3, 3).unwrap();
        for perm in [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ] {
            t.set(&perm, 0.5).unwrap();
        }
        t
    }

    #[test]
    fn apply_identity_diagonal() {
        let t = SparseTensor::from_diagonal(3, &[1.0, 1.0]).unwrap();
        let y = tensor_apply(&t, &[2.0, 3.0]).unwrap();
        assert_eq!(y, vec![4.0, 9.0]);
    }

    #[test]
    fn apply_single_edge() {
        let t = single_edge_adjacency();
        let y = tensor_apply(&t, &[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(y, vec![6.0, 3.0, 2.0]);
    }

    #[test]
    fn apply_rejects_dimension_mismatch() {
        let t = SparseTensor::from_diagonal(3, &[1.0, 1.0]).unwrap();
        assert!(matches!(
            tensor_apply(&t, &[1.0]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn hadamard_examples() {
        assert_eq!(hadamard_power(&[2.0, 3.0], 3.0).unwrap(), vec![8.0, 27.0]);
        assert_eq!(hadamard_power(&[4.0, 9.0], 0.5).unwrap(), vec![2.0, 3.0]);
        assert_eq!(
            hadamard_power(&[1.0, 1.0, 1.0], 7.3).unwrap(),
            vec![1.0, 1.0, 1.0]
        );
        assert!(matches!(
            hadamard_power(&[-1.0], 0.5),
            Err(Error::NegativeBaseFractionalPower { .. })
        ));
        // integer exponents accept negative bases
        assert_eq!(hadamard_power(&[-2.0], 3.0).unwrap(), vec![-8.0]);
    }

    #[test]
    fn diagonal_similarity_identity_and_uniform_scale() {
        let t = single_edge_adjacency();
        assert_eq!(t.diagonal_similarity(&[1.0, 1.0, 1.0]).unwrap(), t);
        let s = t.diagonal_similarity(&[2.5, 2.5, 2.5]).unwrap();
        for (idx, v) in t.entries() {
            assert!((s.get(idx) - v).abs() < 1e-12);
        }
    }

    #[test]
    fn diagonal_similarity_rejects_zero() {
        let t = single_edge_adjacency();
        assert!(matches!(
            t.diagonal_similarity(&[1.0, 0.0, 1.0]),
            Err(Error::ZeroDiagonal { index: 1 })
        ));
    }

    #[test]
    fn collatz_wielandt_on_single_edge() {
        let t = single_edge_adjacency();
        // (Ax)_i = 1 at all-ones, so both bounds are 1
        let (a, b) = collatz_wielandt_bounds(&t, &[1.0, 1.0, 1.0]).unwrap();
        assert_eq!((a, b), (1.0, 1.0));
        assert!(matches!(
            collatz_wielandt_bounds(&t, &[1.0, 0.0, 1.0]),
            Err(Error::NonpositiveEntry { .. })
        ));
    }

    #[test]
    fn weak_irreducibility_cases() {
        let diag = SparseTensor::from_diagonal(3, &[1.0, 2.0]).unwrap();
        assert!(!diag.is_weakly_irreducible());
        assert!(single_edge_adjacency().is_weakly_irreducible());
        let one = SparseTensor::from_diagonal(4, &[3.0]).unwrap();
        assert!(one.is_weakly_irreducible());
    }

    #[test]
    fn weak_irreducibility_relabel_invariant() {
        // relabel the vertices of the single-edge tensor plus an isolated row
        let mut t = SparseTensor::new(3, 4).unwrap();
        for perm in [[0, 1, 2], [1, 2, 0], [2, 0, 1]] {
            t.set(&perm, 1.0).unwrap();
        }
        let relabel = [3, 0, 2, 1];
        let mut r = SparseTensor::new(3, 4).unwrap();
        for (idx, v) in t.entries() {
            let mapped: Vec<usize> = idx.iter().map(|&i| relabel[i]).collect();
            r.set(&mapped, v).unwrap();
        }
        assert_eq!(t.is_weakly_irreducible(), r.is_weakly_irreducible());
    }

    #[test]
    fn lower_triangular_block_cases() {
        let diag = SparseTensor::from_diagonal(3, &[1.0, 2.0, 3.0]).unwrap();
        assert!(diag.is_lower_triangular_block(1).unwrap());
        assert!(diag.is_lower_triangular_block(2).unwrap());

        let edge = single_edge_adjacency();
        assert!(!edge.is_lower_triangular_block(1).unwrap());

        // direct sum of two 2-dim blocks
        let mut t = SparseTensor::new(3, 4).unwrap();
        t.set(&[0, 1, 1], 1.0).unwrap();
        t.set(&[1, 0, 0], 1.0).unwrap();
        t.set(&[2, 3, 3], 1.0).unwrap();
        t.set(&[3, 2, 2], 1.0).unwrap();
        assert!(t.is_lower_triangular_block(2).unwrap());
        assert!(matches!(
            t.is_lower_triangular_block(0),
            Err(Error::SplitOutOfRange { .. })
        ));
        assert!(matches!(
            t.is_lower_triangular_block(4),
            Err(Error::SplitOutOfRange { .. })
        ));
    }

    #[test]
    fn general_product_identity_law() {
        let a = single_edge_adjacency();
        let id = SparseTensor::from_diagonal(2, &[1.0, 1.0, 1.0]).unwrap();
        assert_eq!(general_product(&a, &id).unwrap(), a);
        // and from the left with a matching dimension
        let m = SparseTensor::from_diagonal(2, &[1.0, 1.0, 1.0]).unwrap();
        assert_eq!(general_product(&m, &a).unwrap(), a);
    }

    #[test]
    fn general_product_rejects_high_orders() {
        let a = single_edge_adjacency();
        assert!(matches!(
            general_product(&a, &a),
            Err(Error::UnsupportedProduct { .. })
        ));
    }

    #[test]
    fn matrix_tensor_product_replicates_rows() {
        // X = characteristic matrix of {{0,1},{2}}, B = order-3 dim-2 all-ones
        let mut x = DenseMatrix::zeros(3, 2);
        x.set(0, 0, 1.0);
        x.set(1, 0, 1.0);
        x.set(2, 1, 1.0);
        let mut b = SparseTensor::new(3, 2).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    b.set(&[i, j, l], 1.0).unwrap();
                }
            }
        }
        let xb = matrix_tensor_product(&x, &b).unwrap();
        for i in 0..3 {
            let class = if i < 2 { 0 } else { 1 };
            for j in 0..2 {
                for l in 0..2 {
                    assert_eq!(xb.get(&[i, j, l]), b.get(&[class, j, l]));
                }
            }
        }
    }

    #[test]
    fn principal_subtensor_extracts_block() {
        let mut t = SparseTensor::new(3, 4).unwrap();
        t.set(&[0, 1, 1], 2.0).unwrap();
        t.set(&[1, 0, 0], 3.0).unwrap();
        t.set(&[2, 3, 3], 4.0).unwrap();
        t.set(&[0, 2, 3], 5.0).unwrap(); // straddles the cut, must vanish
        let sub = t.principal_subtensor(&[0, 1]).unwrap();
        assert_eq!(sub.dim(), 2);
        assert_eq!(sub.get(&[0, 1, 1]), 2.0);
        assert_eq!(sub.get(&[1, 0, 0]), 3.0);
        assert_eq!(sub.nnz(), 2);
    }

    #[test]
    fn zero_drop_preserves_no_zero_invariant() {
        let mut t = SparseTensor::new(2, 2).unwrap();
        t.set(&[0, 1], 1.0).unwrap();
        t.add(&[0, 1], -1.0).unwrap();
        assert_eq!(t.nnz(), 0);
        t.set(&[1, 0], 1e-16).unwrap();
        assert_eq!(t.nnz(), 0);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_tensor() -> impl Strategy<Value = SparseTensor> {
            (2usize..=4, 2usize..=5).prop_flat_map(|(order, dim)| {
                proptest::collection::vec(
                    (
                        proptest::collection::vec(0..dim, order),
                        0.01f64..10.0,
                    ),
                    1..12,
                )
                .prop_map(move |entries| {
                    let mut t = SparseTensor::new(order, dim).unwrap();
                    for (idx, v) in entries {
                        t.set(&idx, v).unwrap();
                    }
                    t
                })
            })
        }

        proptest! {
            #[test]
            fn apply_is_homogeneous(t in arb_tensor(), scale in 0.1f64..10.0) {
                let x: Vec<f64> = (0..t.dim()).map(|i| 0.3 + 0.17 * i as f64).collect();
                let scaled: Vec<f64> = x.iter().map(|v| v * scale).collect();
                let y = tensor_apply(&t, &x).unwrap();
                let y_scaled = tensor_apply(&t, &scaled).unwrap();
                let factor = scale.powi(t.order() as i32 - 1);
                for (a, b) in y.iter().zip(&y_scaled) {
                    let expect = a * factor;
                    prop_assert!((b - expect).abs() <= 1e-12 * expect.abs().max(1.0));
                }
            }

            #[test]
            fn diagonal_similarity_identity_for_uniform_scale(
                t in arb_tensor(),
                c in 0.2f64..5.0,
            ) {
                let d = vec![c; t.dim()];
                let s = t.diagonal_similarity(&d).unwrap();
                for (idx, v) in t.entries() {
                    prop_assert!((s.get(idx) - v).abs() <= 1e-12 * v.abs().max(1.0));
                }
            }
        }
    }
}
