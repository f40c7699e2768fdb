//! Generalized power hypergraphs: the construction that blows a graph vertex
//! up into an `s`-block and a graph edge into its two endpoint blocks plus
//! `k - 2s` fresh core vertices, together with the natural partition of the
//! result, the closed-form quotient tensor of its signless Laplacian, the
//! closed-form spectral radius for regular seed graphs, and a regular
//! supergraph embedding.
//!
//! Vertex labels are frozen: vertex blocks first (`V_v = {v·s, …, v·s+s-1}`),
//! then core blocks in input edge order, so every artifact is reproducible
//! byte for byte.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph};
use crate::partition::Partition;
use crate::tensor::{DenseVector, SparseTensor, TensorOp};

/// Deterministic labeling of a generalized power hypergraph: which vertices
/// form each vertex block `V_v` and each core block `V_e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenPowerLabeling {
    pub k: usize,
    pub s: usize,
    pub vertex_blocks: Vec<Vec<usize>>,
    pub edge_blocks: Vec<Vec<usize>>,
}

impl GenPowerLabeling {
    pub fn total_vertices(&self) -> usize {
        self.vertex_blocks.iter().map(Vec::len).sum::<usize>()
            + self.edge_blocks.iter().map(Vec::len).sum::<usize>()
    }

    /// Natural partition: vertex blocks in vertex order, then core blocks in
    /// edge order (omitted when `s = k/2`). Quotient indices therefore run
    /// vertices first, edges second.
    pub fn natural_partition(&self) -> Partition {
        let mut blocks = self.vertex_blocks.clone();
        blocks.extend(self.edge_blocks.iter().cloned());
        Partition::new(blocks).expect("labeling blocks form a partition")
    }
}

fn check_power_params(k: usize, s: usize) -> Result<()> {
    if k < 2 || s < 1 || 2 * s > k {
        return Err(Error::InvalidPowerParams { k, s });
    }
    Ok(())
}

/// Build `G^{k,s}`: one k-edge `V_u ∪ V_v ∪ V_e` per graph edge `uv`, on
/// `n·s + m·(k-2s)` vertices. `G^{2,1}` is `G` itself.
pub fn build_generalized_power(
    g: &Graph,
    k: usize,
    s: usize,
) -> Result<(Hypergraph, GenPowerLabeling)> {
    check_power_params(k, s)?;
    let n = g.n();
    let m = g.m();
    let core = k - 2 * s;

    let vertex_blocks: Vec<Vec<usize>> = (0..n).map(|v| (v * s..(v + 1) * s).collect()).collect();
    let edge_blocks: Vec<Vec<usize>> = (0..m)
        .map(|j| (n * s + j * core..n * s + (j + 1) * core).collect())
        .filter(|b: &Vec<usize>| !b.is_empty())
        .collect();

    let mut edges = Vec::with_capacity(m);
    for (j, &(u, v)) in g.edges().iter().enumerate() {
        let mut e: Vec<usize> = Vec::with_capacity(k);
        e.extend(&vertex_blocks[u]);
        e.extend(&vertex_blocks[v]);
        if core > 0 {
            e.extend(&edge_blocks[j]);
        }
        edges.push(e);
    }

    let h = Hypergraph::new(n * s + m * core, k, edges)?;
    Ok((
        h,
        GenPowerLabeling {
            k,
            s,
            vertex_blocks,
            edge_blocks,
        },
    ))
}

/// Natural partition of `G^{k,s}` straight from a seed graph.
pub fn natural_partition(g: &Graph, k: usize, s: usize) -> Result<Partition> {
    let (_, labeling) = build_generalized_power(g, k, s)?;
    Ok(labeling.natural_partition())
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// Distinct permutations of a sorted multiset, lexicographic order.
fn multiset_permutations(sorted: &[usize]) -> Vec<Vec<usize>> {
    let mut perms = Vec::new();
    let mut cur = sorted.to_vec();
    loop {
        perms.push(cur.clone());
        if !next_perm(&mut cur) {
            break;
        }
    }
    perms
}

fn next_perm(a: &mut [usize]) -> bool {
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

/// Closed-form quotient tensor `B^{k,s}` of the signless Laplacian of
/// `G^{k,s}` under the natural partition, assembled case by case:
///
/// * each core-block diagonal entry is 1,
/// * each vertex-block diagonal entry is `d_v`,
/// * a vertex row `u` of edge `e = uv` carries
///   `(s-1)!·s!·(k-2s)! / (k-1)!` on every arrangement of
///   `{u^(s-1), v^s, e^(k-2s)}`,
/// * a core row `e` carries `s!·s!·(k-2s-1)! / (k-1)!` on every arrangement
///   of `{e^(k-2s-1), u^s, v^s}`,
/// * everything else is zero.
///
/// For `s < k/2` the dimension is `n + m` (vertices then edges); for
/// `s = k/2` it is `n` and the core cases disappear.
pub fn quotient_closed_form(g: &Graph, k: usize, s: usize) -> Result<SparseTensor> {
    check_power_params(k, s)?;
    let n = g.n();
    let m = g.m();
    let core = k - 2 * s;
    let dim = if core > 0 { n + m } else { n };
    let mut b = SparseTensor::new(k, dim.max(1))?;

    for (v, &d) in g.degrees().iter().enumerate() {
        if d > 0 {
            b.set(&vec![v; k], d as f64)?;
        }
    }

    let fk1 = factorial(k - 1);
    if core > 0 {
        let c_vertex = factorial(s - 1) * factorial(s) * factorial(core) / fk1;
        let c_core = factorial(s) * factorial(s) * factorial(core - 1) / fk1;
        for (j, &(u, v)) in g.edges().iter().enumerate() {
            let e = n + j;
            b.set(&vec![e; k], 1.0)?;
            for (row, other) in [(u, v), (v, u)] {
                let mut rest = vec![row; s - 1];
                rest.extend(std::iter::repeat_n(other, s));
                rest.extend(std::iter::repeat_n(e, core));
                rest.sort_unstable();
                for perm in multiset_permutations(&rest) {
                    let mut idx = Vec::with_capacity(k);
                    idx.push(row);
                    idx.extend(perm);
                    b.set(&idx, c_vertex)?;
                }
            }
            let mut rest = vec![u; s];
            rest.extend(std::iter::repeat_n(v, s));
            rest.extend(std::iter::repeat_n(e, core - 1));
            rest.sort_unstable();
            for perm in multiset_permutations(&rest) {
                let mut idx = Vec::with_capacity(k);
                idx.push(e);
                idx.extend(perm);
                b.set(&idx, c_core)?;
            }
        }
    } else {
        let c_vertex = factorial(s - 1) * factorial(s) / fk1;
        for &(u, v) in g.edges() {
            for (row, other) in [(u, v), (v, u)] {
                let mut rest = vec![row; s - 1];
                rest.extend(std::iter::repeat_n(other, s));
                rest.sort_unstable();
                for perm in multiset_permutations(&rest) {
                    let mut idx = Vec::with_capacity(k);
                    idx.push(row);
                    idx.extend(perm);
                    b.set(&idx, c_vertex)?;
                }
            }
        }
    }
    Ok(b)
}

/// Implicit `B^{k,s}` operator with `O(m)` apply:
///
/// * edge row: `(Bx)_e = x_e^{k-1} + x_e^{k-2s-1} x_u^s x_v^s`,
/// * vertex row: `(Bx)_v = d_v x_v^{k-1} + sum_{u ~ v} x_{e_uv}^{k-2s} x_u^s x_v^{s-1}`,
///
/// with the edge factor dropped when `s = k/2`.
#[derive(Debug, Clone)]
pub struct QuotientOp {
    n: usize,
    m: usize,
    k: usize,
    s: usize,
    degrees: Vec<usize>,
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<(usize, usize)>>, // per vertex: (neighbor, edge id)
}

impl QuotientOp {
    pub fn new(g: &Graph, k: usize, s: usize) -> Result<Self> {
        check_power_params(k, s)?;
        let mut incident = vec![Vec::new(); g.n()];
        for (j, &(u, v)) in g.edges().iter().enumerate() {
            incident[u].push((v, j));
            incident[v].push((u, j));
        }
        Ok(Self {
            n: g.n(),
            m: g.m(),
            k,
            s,
            degrees: g.degrees(),
            edges: g.edges().to_vec(),
            incident,
        })
    }

    pub fn has_edge_rows(&self) -> bool {
        self.k > 2 * self.s
    }
}

impl TensorOp for QuotientOp {
    fn order(&self) -> usize {
        self.k
    }

    fn dim(&self) -> usize {
        if self.has_edge_rows() {
            self.n + self.m
        } else {
            self.n
        }
    }

    fn apply(&self, x: &[f64]) -> DenseVector {
        let (k, s, n) = (self.k, self.s, self.n);
        let km1 = (k - 1) as i32;
        let core = (k - 2 * s) as i32;
        let mut y = vec![0.0; self.dim()];
        for (v, &d) in self.degrees.iter().enumerate() {
            let mut acc = d as f64 * x[v].powi(km1);
            for &(u, e) in &self.incident[v] {
                let edge_factor = if core > 0 { x[n + e].powi(core) } else { 1.0 };
                acc += edge_factor * x[u].powi(s as i32) * x[v].powi(s as i32 - 1);
            }
            y[v] = acc;
        }
        if core > 0 {
            for (j, &(u, v)) in self.edges.iter().enumerate() {
                let xe = x[n + j];
                y[n + j] = xe.powi(km1)
                    + xe.powi(core - 1) * x[u].powi(s as i32) * x[v].powi(s as i32);
            }
        }
        y
    }

    fn digraph(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.dim()];
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push(v);
            adj[v].push(u);
            if self.has_edge_rows() {
                let e = self.n + j;
                adj[u].push(e);
                adj[v].push(e);
                adj[e].push(u);
                adj[e].push(v);
            }
        }
        for a in &mut adj {
            a.sort_unstable();
            a.dedup();
        }
        adj
    }
}

/// Fast quotient apply, checked. Agrees with `tensor_apply` on
/// [`quotient_closed_form`] to relative 1e-12.
pub fn quotient_apply(g: &Graph, k: usize, s: usize, x: &[f64]) -> Result<DenseVector> {
    let op = QuotientOp::new(g, k, s)?;
    crate::tensor::tensor_apply(&op, x)
}

fn check_regular_params(d: usize, k: usize, s: usize) -> Result<()> {
    if d < 1 || k < 3 || s < 1 || 2 * s > k - 1 {
        return Err(Error::InvalidPowerParams { k, s });
    }
    Ok(())
}

/// Largest root of `(x - d)(x - 1)^{(k-2s)/(2s)} - d = 0`, the signless
/// Laplacian spectral radius of `G^{k,s}` for any connected d-regular seed.
///
/// The function is strictly increasing on `[max(d,1), 2d+1]` with a sign
/// change inside, so bisection to interval width 1e-12 is exact enough for
/// every downstream tolerance. Also returns the final bracket.
pub fn regular_radius_bracketed(d: usize, k: usize, s: usize) -> Result<(f64, (f64, f64))> {
    check_regular_params(d, k, s)?;
    let df = d as f64;
    let expo = (k - 2 * s) as f64 / (2 * s) as f64;
    let f = |x: f64| (x - df) * (x - 1.0).powf(expo) - df;

    let mut lo = df.max(1.0);
    let mut hi = 2.0 * df + 1.0;
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((0.5 * (lo + hi), (lo, hi)))
}

/// See [`regular_radius_bracketed`]; returns just the root.
pub fn regular_radius(d: usize, k: usize, s: usize) -> Result<f64> {
    regular_radius_bracketed(d, k, s).map(|(root, _)| root)
}

/// Perron vector of `B^{k,s}` for a connected d-regular seed graph at
/// `lambda = regular_radius(d, k, s)`: 1 on vertex rows and
/// `(lambda - 1)^{-1/(2s)}` on edge rows.
pub fn regular_perron_vector(g: &Graph, k: usize, s: usize, lambda: f64) -> Result<DenseVector> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    check_regular_params(d, k, s)?;
    if lambda <= 1.0 {
        return Err(Error::LambdaNotAboveOne { lambda });
    }
    let edge_value = (lambda - 1.0).powf(-1.0 / (2 * s) as f64);
    let mut y = vec![1.0; g.n()];
    y.extend(std::iter::repeat_n(edge_value, g.m()));
    Ok(y)
}

/// Embed `G` as an induced subgraph (on its original vertex ids) of a
/// Δ-regular simple graph, Δ = max degree of `G`.
///
/// Each round doubles the current graph and joins the two copies of every
/// deficient vertex by a matching edge, raising every deficient degree by
/// one; at most Δ rounds are needed.
pub fn embed_in_regular(g: &Graph) -> Graph {
    let target = g.max_degree();
    let mut current = g.clone();
    loop {
        let degrees = current.degrees();
        if degrees.iter().all(|&d| d == target) {
            return current;
        }
        let n = current.n();
        let mut edges: Vec<(usize, usize)> = current.edges().to_vec();
        edges.extend(current.edges().iter().map(|&(u, v)| (u + n, v + n)));
        for (v, &d) in degrees.iter().enumerate() {
            if d < target {
                edges.push((v, v + n));
            }
        }
        current = Graph::new(2 * n, edges).expect("doubling preserves simplicity");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{is_equitable, quotient_tensor};
    use crate::tensor::tensor_apply;

    #[test]
    fn build_k2_four_one() {
        let (h, lab) = build_generalized_power(&Graph::complete(2), 4, 1).unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.m(), 1);
        assert_eq!(lab.total_vertices(), 4);
        assert_eq!(h.edges()[0], vec![0, 1, 2, 3]);
    }

    #[test]
    fn build_k3_four_one() {
        let (h, lab) = build_generalized_power(&Graph::complete(3), 4, 1).unwrap();
        assert_eq!(h.n(), 9);
        assert_eq!(h.m(), 3);
        assert_eq!(lab.vertex_blocks, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(lab.edge_blocks.len(), 3);
        // every edge = two original vertices + two core vertices
        for e in h.edges() {
            assert_eq!(e.iter().filter(|&&v| v < 3).count(), 2);
        }
    }

    #[test]
    fn power_two_one_reproduces_graph() {
        let g = Graph::path(4);
        let (h, lab) = build_generalized_power(&g, 2, 1).unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.k(), 2);
        assert_eq!(
            h.edges(),
            &[vec![0, 1], vec![1, 2], vec![2, 3]]
        );
        assert!(lab.edge_blocks.is_empty());
    }

    #[test]
    fn rejects_bad_params() {
        let g = Graph::complete(3);
        assert!(build_generalized_power(&g, 4, 3).is_err());
        assert!(build_generalized_power(&g, 4, 0).is_err());
        assert!(build_generalized_power(&g, 1, 1).is_err());
    }

    #[test]
    fn natural_partition_shapes() {
        let g = Graph::complete(3);
        let p = natural_partition(&g, 4, 1).unwrap();
        assert_eq!(p.num_blocks(), 6);
        assert_eq!(p.blocks()[0], vec![0]);
        assert_eq!(p.blocks()[3].len(), 2);

        let p = natural_partition(&g, 4, 2).unwrap();
        assert_eq!(p.num_blocks(), 3);
        assert!(p.blocks().iter().all(|b| b.len() == 2));

        let p = natural_partition(&Graph::complete(2), 6, 1).unwrap();
        assert_eq!(p.blocks(), &[vec![0], vec![1], vec![2, 3, 4, 5]]);
    }

    #[test]
    fn closed_form_row_sums_k3() {
        // vertex rows sum to d + d, edge rows to 1 + 1
        let g = Graph::complete(3);
        let b = quotient_closed_form(&g, 4, 1).unwrap();
        let y = tensor_apply(&b, &[1.0; 6]).unwrap();
        for v in 0..3 {
            assert!((y[v] - 4.0).abs() < 1e-12);
        }
        for e in 3..6 {
            assert!((y[e] - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn closed_form_matches_quotient_of_materialized_q() {
        for (k, s) in [(3, 1), (4, 1), (4, 2), (5, 2), (6, 2)] {
            let g = Graph::complete(3);
            let (h, lab) = build_generalized_power(&g, k, s).unwrap();
            let q = h.signless_tensor();
            let p = lab.natural_partition();
            assert!(is_equitable(&q, &p).unwrap(), "natural partition equitable k={k} s={s}");
            let via_partition = quotient_tensor(&q, &p).unwrap();
            let closed = quotient_closed_form(&g, k, s).unwrap();
            assert_eq!(closed.dim(), via_partition.dim());
            for (idx, v) in closed.entries() {
                assert!(
                    (v - via_partition.get(idx)).abs() < 1e-12,
                    "entry {idx:?} k={k} s={s}: {v} vs {}",
                    via_partition.get(idx)
                );
            }
            assert_eq!(closed.nnz(), via_partition.nnz());
        }
    }

    #[test]
    fn quotient_apply_all_ones_k3() {
        let g = Graph::complete(3);
        let y = quotient_apply(&g, 4, 1, &[1.0; 6]).unwrap();
        assert_eq!(&y[..3], &[4.0, 4.0, 4.0]);
        assert_eq!(&y[3..], &[2.0, 2.0, 2.0]);

        // s = k/2 drops the edge rows: (Bx)_v = 2 + 2 = 4 at all-ones
        let y = quotient_apply(&g, 4, 2, &[1.0; 3]).unwrap();
        assert_eq!(y, vec![4.0, 4.0, 4.0]);

        let y = quotient_apply(&Graph::complete(2), 4, 1, &[1.0, 1.0, 1.0]).unwrap();
        assert_eq!(y, vec![2.0, 2.0, 2.0]);
    }

    #[test]
    fn quotient_apply_matches_closed_form_on_random_vectors() {
        let mut state = 7u64;
        let mut rand = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            0.2 + (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for g in [Graph::complete(3), Graph::path(4), Graph::cycle(5)] {
            for k in [3usize, 4, 5, 6, 8] {
                for s in 1..=(k / 2) {
                    let closed = quotient_closed_form(&g, k, s).unwrap();
                    let op = QuotientOp::new(&g, k, s).unwrap();
                    for _ in 0..5 {
                        let x: Vec<f64> = (0..closed.dim()).map(|_| rand()).collect();
                        let fast = tensor_apply(&op, &x).unwrap();
                        let slow = tensor_apply(&closed, &x).unwrap();
                        for (f, sl) in fast.iter().zip(&slow) {
                            assert!(
                                (f - sl).abs() <= 1e-12 * f.abs().max(1.0),
                                "k={k} s={s}: {f} vs {sl}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn regular_radius_anchors() {
        assert!((regular_radius(2, 4, 1).unwrap() - 3.0).abs() < 1e-9);
        for (k, s) in [(4, 1), (6, 1), (6, 2), (8, 3), (5, 2)] {
            assert!((regular_radius(1, k, s).unwrap() - 2.0).abs() < 1e-9);
        }
        assert!(regular_radius(2, 4, 2).is_err());
        assert!(regular_radius(0, 4, 1).is_err());
    }

    #[test]
    fn regular_radius_k6_matches_cubic_oracle() {
        // (x-2)(x-1)^2 - 2 expands to x^3 - 4x^2 + 5x - 4; bisect that
        // polynomial independently
        let f = |x: f64| x * x * x - 4.0 * x * x + 5.0 * x - 4.0;
        let (mut lo, mut hi) = (2.0, 5.0);
        while hi - lo > 1e-13 {
            let mid = 0.5 * (lo + hi);
            if f(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let oracle = 0.5 * (lo + hi);
        assert!((oracle - 2.6956).abs() < 1e-3);
        assert!((regular_radius(2, 6, 1).unwrap() - oracle).abs() < 1e-9);
    }

    #[test]
    fn regular_perron_vector_values_and_residual() {
        let lambda = regular_radius(2, 4, 1).unwrap();
        let y = regular_perron_vector(&Graph::complete(3), 4, 1, lambda).unwrap();
        assert_eq!(y.len(), 6);
        assert!((y[3] - 1.0 / 2.0f64.sqrt()).abs() < 1e-9);

        // d = 1: lambda = 2 and the edge value degenerates to 1
        let y = regular_perron_vector(&Graph::complete(2), 6, 1, 2.0).unwrap();
        assert!(y.iter().all(|&v| (v - 1.0).abs() < 1e-12));

        // residual of the closed-form pair on the quotient operator
        let g = Graph::complete(4);
        let lambda = regular_radius(3, 6, 1).unwrap();
        let y = regular_perron_vector(&g, 6, 1, lambda).unwrap();
        let op = QuotientOp::new(&g, 6, 1).unwrap();
        let r = crate::solver::residual(&op, lambda, &y).unwrap();
        assert!(r < 1e-10, "residual {r}");

        assert!(regular_perron_vector(&Graph::path(3), 4, 1, 3.0).is_err());
        assert!(matches!(
            regular_perron_vector(&Graph::complete(3), 4, 1, 0.5),
            Err(Error::LambdaNotAboveOne { .. })
        ));
    }

    #[test]
    fn embed_regular_keeps_regular_graph() {
        let k3 = Graph::complete(3);
        let r = embed_in_regular(&k3);
        assert_eq!(r, k3);
    }

    #[test]
    fn embed_path_and_star() {
        for g in [
            Graph::path(3),
            Graph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap(),
        ] {
            let delta = g.max_degree();
            let r = embed_in_regular(&g);
            assert_eq!(r.regular_degree(), Some(delta));
            // induced subgraph on the original ids is g exactly
            let ids: Vec<usize> = (0..g.n()).collect();
            let (induced, _) = r.induced_subgraph(&ids);
            assert_eq!(induced, g);
        }
    }

    #[test]
    fn embed_edgeless_returns_itself() {
        let g = Graph::new(3, vec![]).unwrap();
        assert_eq!(embed_in_regular(&g), g);
    }
}
