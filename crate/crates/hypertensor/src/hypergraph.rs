//! k-uniform hypergraphs and simple graphs, their degree vectors, the
//! implicit adjacency / Laplacian / signless Laplacian operators, and
//! odd-bipartiteness.
//!
//! The adjacency tensor of a k-uniform hypergraph carries `1/(k-1)!` on every
//! ordering of each edge, so `(Ax)_i = sum_{e ∋ i} prod_{j in e \ i} x_j`.
//! The operators here evaluate that sum edge by edge, in `O(sum_e k)` per
//! apply, without materializing the `m · k!` tensor entries. Materialization
//! is provided separately for cross-validation at small sizes.

use crate::error::{Error, Result};
use crate::tensor::{DenseVector, SparseTensor, TensorOp};

/// Simple undirected graph on vertices `0..n`; the seed of every generalized
/// power hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Build a simple graph; endpoints are normalized to `(min, max)`,
    /// loops and duplicate edges are rejected.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        let mut seen = std::collections::BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge ({}, {})",
                    e.0, e.1
                )));
            }
            normalized.push(e);
        }
        Ok(Self {
            n,
            edges: normalized,
        })
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Self { n, edges }
    }

    /// Path on `n` vertices, `0 - 1 - … - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Self { n, edges }
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        Self { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// `Some(d)` iff every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            None => Some(0),
            Some(&d0) if d.iter().all(|&x| x == d0) => Some(d0),
            _ => None,
        }
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components_of(self.n, &self.adjacency_lists())
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Two-colorability via BFS.
    pub fn is_bipartite(&self) -> bool {
        let adj = self.adjacency_lists();
        let mut color = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Subgraph induced on a sorted vertex set, reindexed to `0..set.len()`.
    /// Also returns, for each kept edge, its index in the original edge list.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut pos = vec![usize::MAX; self.n];
        for (p, &v) in vertices.iter().enumerate() {
            pos[v] = p;
        }
        let mut edges = Vec::new();
        let mut edge_ids = Vec::new();
        for (idx, &(u, v)) in self.edges.iter().enumerate() {
            if pos[u] != usize::MAX && pos[v] != usize::MAX {
                edges.push((pos[u], pos[v]));
                edge_ids.push(idx);
            }
        }
        (
            Graph {
                n: vertices.len(),
                edges,
            },
            edge_ids,
        )
    }
}

/// k-uniform hypergraph on vertices `0..n`; edges are duplicate-free sorted
/// k-subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    k: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, k: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidHypergraph(format!(
                "edge size k must be at least 2, got {k}"
            )));
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut sorted_edges = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            if e.len() != k {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {e:?} has {} vertices, expected {k}",
                    e.len()
                )));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {e:?} has repeated vertices"
                )));
            }
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidHypergraph(format!(
                    "vertex {v} out of range for n = {n}"
                )));
            }
            if !seen.insert(e.clone()) {
                return Err(Error::InvalidHypergraph(format!("duplicate edge {e:?}")));
            }
            sorted_edges.push(e);
        }
        Ok(Self {
            n,
            k,
            edges: sorted_edges,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// `d_v = |{e : v in e}|`, the diagonal of the degree tensor.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    fn adjacency_apply_raw(&self, x: &[f64]) -> DenseVector {
        let mut y = vec![0.0; self.n];
        let k = self.k;
        let mut pre = vec![0.0; k + 1];
        let mut suf = vec![0.0; k + 1];
        for e in &self.edges {
            // prefix/suffix products leave out one coordinate at a time
            pre[0] = 1.0;
            for (i, &v) in e.iter().enumerate() {
                pre[i + 1] = pre[i] * x[v];
            }
            suf[k] = 1.0;
            for i in (0..k).rev() {
                suf[i] = suf[i + 1] * x[e[i]];
            }
            for (i, &v) in e.iter().enumerate() {
                y[v] += pre[i] * suf[i + 1];
            }
        }
        y
    }

    /// `(Ax)_i = sum_{e ∋ i} prod_{j in e \ i} x_j`.
    pub fn adjacency_apply(&self, x: &[f64]) -> Result<DenseVector> {
        self.check_len(x)?;
        Ok(self.adjacency_apply_raw(x))
    }

    /// `(Qx)_i = d_i x_i^{k-1} + (Ax)_i`.
    pub fn signless_apply(&self, x: &[f64]) -> Result<DenseVector> {
        self.check_len(x)?;
        Ok(self.signless_op().apply(x))
    }

    /// `(Lx)_i = d_i x_i^{k-1} - (Ax)_i`.
    pub fn laplacian_apply(&self, x: &[f64]) -> Result<DenseVector> {
        self.check_len(x)?;
        Ok(self.laplacian_op().apply(x))
    }

    fn check_len(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        Ok(())
    }

    pub fn adjacency_op(&self) -> AdjacencyOp<'_> {
        AdjacencyOp { h: self }
    }

    pub fn signless_op(&self) -> SignlessLaplacianOp<'_> {
        SignlessLaplacianOp {
            h: self,
            degrees: self.degrees(),
        }
    }

    pub fn laplacian_op(&self) -> LaplacianOp<'_> {
        LaplacianOp {
            h: self,
            degrees: self.degrees(),
        }
    }

    /// Materialized adjacency tensor: `1/(k-1)!` on every ordering of every
    /// edge. Entry count is `m · k!`; intended for cross-validation on small
    /// hypergraphs only.
    pub fn adjacency_tensor(&self) -> SparseTensor {
        let k = self.k;
        let mut fact = 1.0;
        for i in 1..k {
            fact *= i as f64;
        }
        let weight = 1.0 / fact;
        let mut t = SparseTensor::new(k, self.n.max(1)).expect("valid tensor shape");
        for e in &self.edges {
            let mut perm = e.clone();
            loop {
                t.set(&perm, weight).expect("edge indices in range");
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
        t
    }

    /// Materialized signless Laplacian tensor `Q = D + A`.
    pub fn signless_tensor(&self) -> SparseTensor {
        let mut t = self.adjacency_tensor();
        for (v, &d) in self.degrees().iter().enumerate() {
            if d > 0 {
                t.set(&vec![v; self.k], d as f64).expect("diagonal in range");
            }
        }
        t
    }

    /// Materialized Laplacian tensor `L = D - A`.
    pub fn laplacian_tensor(&self) -> SparseTensor {
        let mut t = SparseTensor::new(self.k, self.n.max(1)).expect("valid tensor shape");
        for (idx, v) in self.adjacency_tensor().entries() {
            t.set(idx, -v).expect("in range");
        }
        for (v, &d) in self.degrees().iter().enumerate() {
            if d > 0 {
                t.set(&vec![v; self.k], d as f64).expect("diagonal in range");
            }
        }
        t
    }

    /// Connected components (vertices sharing edges), sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            for w in e.windows(2) {
                adj[w[0]].push(w[1]);
                adj[w[1]].push(w[0]);
            }
        }
        components_of(self.n, &adj)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Sub-hypergraph induced on a sorted vertex set: keeps edges fully
    /// inside the set, reindexed to `0..set.len()`.
    pub fn induced(&self, vertices: &[usize]) -> Hypergraph {
        let mut pos = vec![usize::MAX; self.n];
        for (p, &v) in vertices.iter().enumerate() {
            pos[v] = p;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| pos[v] != usize::MAX))
            .map(|e| e.iter().map(|&v| pos[v]).collect())
            .collect();
        Hypergraph {
            n: vertices.len(),
            k: self.k,
            edges,
        }
    }

    /// Odd-bipartite certificate: a split `(V1, V2)` with `|e ∩ V1|` odd for
    /// every edge, or `None` when `k` is odd or the GF(2) system
    /// `sum_{v in e} x_v = 1` is inconsistent. Free variables are fixed to
    /// `V2`, so the certificate is deterministic.
    pub fn is_odd_bipartite(&self) -> Option<OddBipartition> {
        if !self.k.is_multiple_of(2) {
            return None;
        }
        let side = solve_gf2_all_odd(self.n, &self.edges)?;
        let (mut v1, mut v2) = (Vec::new(), Vec::new());
        for (v, &in_v1) in side.iter().enumerate() {
            if in_v1 {
                v1.push(v);
            } else {
                v2.push(v);
            }
        }
        Some(OddBipartition { v1, v2 })
    }
}

/// Vertex split certifying odd-bipartiteness: every edge meets `v1` in an odd
/// number of vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddBipartition {
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
}

impl OddBipartition {
    /// Check `|e ∩ V1|` odd for every edge of `h`.
    pub fn verify(&self, h: &Hypergraph) -> bool {
        let mut in_v1 = vec![false; h.n()];
        for &v in &self.v1 {
            if v >= h.n() {
                return false;
            }
            in_v1[v] = true;
        }
        h.edges()
            .iter()
            .all(|e| e.iter().filter(|&&v| in_v1[v]).count() % 2 == 1)
    }

    /// Sign vector: `-1` on `v1`, `+1` elsewhere.
    pub fn signs(&self, n: usize) -> Vec<f64> {
        let mut s = vec![1.0; n];
        for &v in &self.v1 {
            s[v] = -1.0;
        }
        s
    }
}

/// Gauss-Jordan elimination over GF(2) for the system `sum_{v in e} x_v = 1`.
/// Pivots are chosen in ascending column order; free variables are 0.
fn solve_gf2_all_odd(n: usize, edges: &[Vec<usize>]) -> Option<Vec<bool>> {
    let m = edges.len();
    let mut rows: Vec<(Vec<bool>, bool)> = edges
        .iter()
        .map(|e| {
            let mut coeffs = vec![false; n];
            for &v in e {
                coeffs[v] = true;
            }
            (coeffs, true)
        })
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut rank = 0;
    for col in 0..n {
        let Some(r) = (rank..m).find(|&r| rows[r].0[col]) else {
            continue;
        };
        rows.swap(rank, r);
        for other in 0..m {
            if other != rank && rows[other].0[col] {
                let (pivot_row, pivot_rhs) = {
                    let p = &rows[rank];
                    (p.0.clone(), p.1)
                };
                let row = &mut rows[other];
                for (cell, &p) in row.0.iter_mut().zip(&pivot_row) {
                    *cell ^= p;
                }
                row.1 ^= pivot_rhs;
            }
        }
        pivots.push((rank, col));
        rank += 1;
    }

    // inconsistent: a zero row with rhs 1
    for (coeffs, rhs) in rows.iter().skip(rank) {
        if *rhs && coeffs.iter().all(|&c| !c) {
            return None;
        }
    }

    let mut x = vec![false; n];
    for &(row, col) in &pivots {
        x[col] = rows[row].1;
    }
    Some(x)
}

fn components_of(n: usize, adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// In-place next lexicographic permutation; `false` once exhausted.
fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Implicit adjacency tensor of a hypergraph.
pub struct AdjacencyOp<'a> {
    h: &'a Hypergraph,
}

/// Implicit signless Laplacian `Q = D + A`.
pub struct SignlessLaplacianOp<'a> {
    h: &'a Hypergraph,
    degrees: Vec<usize>,
}

/// Implicit Laplacian `L = D - A`. Has negative off-diagonal entries, so the
/// Perron solver does not apply to it directly; it exists for residual checks
/// and the odd-bipartite sign-flip route.
pub struct LaplacianOp<'a> {
    h: &'a Hypergraph,
    degrees: Vec<usize>,
}

fn coedge_digraph(h: &Hypergraph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); h.n()];
    for e in h.edges() {
        for &i in e {
            for &j in e {
                if i != j {
                    adj[i].push(j);
                }
            }
        }
    }
    for a in &mut adj {
        a.sort_unstable();
        a.dedup();
    }
    adj
}

impl TensorOp for AdjacencyOp<'_> {
    fn order(&self) -> usize {
        self.h.k()
    }

    fn dim(&self) -> usize {
        self.h.n()
    }

    fn apply(&self, x: &[f64]) -> DenseVector {
        self.h.adjacency_apply_raw(x)
    }

    fn digraph(&self) -> Vec<Vec<usize>> {
        coedge_digraph(self.h)
    }
}

impl TensorOp for SignlessLaplacianOp<'_> {
    fn order(&self) -> usize {
        self.h.k()
    }

    fn dim(&self) -> usize {
        self.h.n()
    }

    fn apply(&self, x: &[f64]) -> DenseVector {
        let km1 = (self.h.k() - 1) as i32;
        let mut y = self.h.adjacency_apply_raw(x);
        for (i, yi) in y.iter_mut().enumerate() {
            *yi += self.degrees[i] as f64 * x[i].powi(km1);
        }
        y
    }

    fn digraph(&self) -> Vec<Vec<usize>> {
        coedge_digraph(self.h)
    }
}

impl TensorOp for LaplacianOp<'_> {
    fn order(&self) -> usize {
        self.h.k()
    }

    fn dim(&self) -> usize {
        self.h.n()
    }

    fn apply(&self, x: &[f64]) -> DenseVector {
        let km1 = (self.h.k() - 1) as i32;
        let a = self.h.adjacency_apply_raw(x);
        a.iter()
            .enumerate()
            .map(|(i, ai)| self.degrees[i] as f64 * x[i].powi(km1) - ai)
            .collect()
    }

    fn digraph(&self) -> Vec<Vec<usize>> {
        coedge_digraph(self.h)
    }
}
