//! Largest H-eigenvalue of nonnegative tensors and operators via shifted
//! power iteration with Collatz-Wielandt bracketing.
//!
//! One step maps `x` to `normalize((T x + σ x^{[k-1]})^{[1/(k-1)]})`. At every
//! iterate the Collatz-Wielandt ratios of the shifted operator bracket
//! `λ + σ`, so the midpoint of the final bracket is a certified estimate: the
//! iteration stops once the bracket is narrower than the configured
//! tolerance. Weak irreducibility keeps the iterates strictly positive;
//! reducible inputs are split into strongly connected blocks and solved per
//! block, returning the maximum.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::partition::Partition;
use crate::power::{build_generalized_power, QuotientOp};
use crate::scc;
use crate::tensor::{DenseVector, SparseTensor, TensorOp};

/// Strictness margin for the monotonicity assertions, 100x the default
/// solver tolerance.
pub const STRICT_MARGIN: f64 = 1e-6;

/// Power-iteration configuration.
///
/// `shift` of `None` picks an operator-appropriate default: 0 for signless
/// Laplacian and quotient operators (their positive diagonal already damps
/// oscillation), 1 for adjacency tensors and generic inputs.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub tol: f64,
    pub max_iter: usize,
    pub shift: Option<f64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iter: 1_000_000,
            shift: None,
        }
    }
}

impl SolverConfig {
    fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "tol must be positive, got {}",
                self.tol
            )));
        }
        if self.max_iter < 1 {
            return Err(Error::InvalidConfig("max_iter must be at least 1".into()));
        }
        if let Some(s) = self.shift {
            if s < 0.0 {
                return Err(Error::InvalidConfig(format!(
                    "shift must be nonnegative, got {s}"
                )));
            }
        }
        Ok(())
    }
}

/// Converged eigenpair: `lambda` with a nonnegative vector normalized to max
/// entry 1 (strictly positive on the component that was solved), the residual
/// `max_i |(Tx)_i - lambda x_i^{k-1}|`, the iteration count, and the final
/// Collatz-Wielandt bracket around `lambda`.
#[derive(Debug, Clone, Serialize)]
pub struct EigenPair {
    pub lambda: f64,
    pub vector: DenseVector,
    pub residual: f64,
    pub iterations: usize,
    pub bracket: (f64, f64),
}

/// `max_i |(Tx)_i - lambda x_i^{k-1}|`.
pub fn residual<T: TensorOp + ?Sized>(op: &T, lambda: f64, x: &[f64]) -> Result<f64> {
    if x.len() != op.dim() {
        return Err(Error::DimensionMismatch {
            expected: op.dim(),
            got: x.len(),
        });
    }
    let km1 = (op.order() - 1) as i32;
    let y = op.apply(x);
    Ok(y.iter()
        .zip(x)
        .map(|(yi, xi)| (yi - lambda * xi.powi(km1)).abs())
        .fold(0.0, f64::max))
}

/// Power iteration on a weakly irreducible nonnegative operator. The caller
/// guarantees irreducibility; use [`largest_h_eigenvalue`] or the hypergraph
/// wrappers for general inputs.
pub fn solve_irreducible<T: TensorOp + ?Sized>(
    op: &T,
    cfg: &SolverConfig,
    default_shift: f64,
) -> Result<EigenPair> {
    cfg.validate()?;
    let k = op.order();
    let n = op.dim();
    if k < 2 {
        return Err(Error::InvalidOrder { min: 2, got: k });
    }
    let shift = cfg.shift.unwrap_or(default_shift);

    if n == 1 {
        let lambda = op.apply(&[1.0])[0];
        return Ok(EigenPair {
            lambda,
            vector: vec![1.0],
            residual: 0.0,
            iterations: 0,
            bracket: (lambda, lambda),
        });
    }

    let km1 = (k - 1) as i32;
    let inv_km1 = 1.0 / (k - 1) as f64;
    let mut x = vec![1.0; n];
    let mut bracket = (f64::NEG_INFINITY, f64::INFINITY);

    for it in 1..=cfg.max_iter {
        let mut y = op.apply(&x);
        if shift != 0.0 {
            for (yi, xi) in y.iter_mut().zip(&x) {
                *yi += shift * xi.powi(km1);
            }
        }

        let mut a = f64::INFINITY;
        let mut b = f64::NEG_INFINITY;
        for (yi, xi) in y.iter().zip(&x) {
            let r = yi / xi.powi(km1);
            a = a.min(r);
            b = b.max(r);
        }
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::NonConvergence {
                iterations: it,
                lower: a - shift,
                upper: b - shift,
            });
        }
        bracket = (a - shift, b - shift);

        if b - a < cfg.tol {
            let lambda = 0.5 * (a + b) - shift;
            let res = residual(op, lambda, &x)?;
            return Ok(EigenPair {
                lambda,
                vector: x,
                residual: res,
                iterations: it,
                bracket,
            });
        }

        // next iterate: k-1'th root of y, sup-normalized
        let mut max = 0.0f64;
        for yi in &y {
            max = max.max(*yi);
        }
        if max <= 0.0 {
            // zero operator with zero shift: λ = 0 exactly
            return Ok(EigenPair {
                lambda: 0.0,
                vector: x,
                residual: 0.0,
                iterations: it,
                bracket: (0.0, 0.0),
            });
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = (yi / max).powf(inv_km1);
        }
    }

    Err(Error::NonConvergence {
        iterations: cfg.max_iter,
        lower: bracket.0,
        upper: bracket.1,
    })
}

fn embed_component(pair: EigenPair, indices: &[usize], full_dim: usize) -> EigenPair {
    let mut vector = vec![0.0; full_dim];
    for (&i, &v) in indices.iter().zip(&pair.vector) {
        vector[i] = v;
    }
    EigenPair { vector, ..pair }
}

fn better(best: Option<EigenPair>, candidate: EigenPair) -> Option<EigenPair> {
    match best {
        Some(b) if b.lambda >= candidate.lambda => Some(b),
        _ => Some(candidate),
    }
}

/// Largest H-eigenvalue of a nonnegative sparse tensor.
///
/// Weakly irreducible tensors are solved directly. Otherwise the index set is
/// split into the strongly connected components of the tensor's digraph, each
/// principal subtensor is solved recursively, and the maximum is returned;
/// the reported vector is then the dominant component's Perron vector
/// embedded with zeros, and the residual refers to that component.
pub fn largest_h_eigenvalue(t: &SparseTensor, cfg: &SolverConfig) -> Result<EigenPair> {
    if let Some((index, value)) = t.negative_entry() {
        return Err(Error::NegativeTensorEntry { index, value });
    }
    solve_tensor_rec(t, cfg)
}

fn solve_tensor_rec(t: &SparseTensor, cfg: &SolverConfig) -> Result<EigenPair> {
    let comps = scc::tarjan_scc(&t.digraph());
    if comps.len() == 1 {
        return solve_irreducible(t, cfg, 1.0);
    }
    let mut best: Option<EigenPair> = None;
    for comp in comps {
        let sub = t.principal_subtensor(&comp)?;
        let pair = solve_tensor_rec(&sub, cfg)?;
        best = better(best, embed_component(pair, &comp, t.dim()));
    }
    Ok(best.expect("at least one component"))
}

/// Largest H-eigenvalue of a weakly irreducible nonnegative operator given
/// through the [`TensorOp`] interface. Errors when the operator's digraph is
/// not strongly connected; reducible structured inputs go through the typed
/// wrappers which split into components first.
pub fn largest_h_eigenvalue_op<T: TensorOp + ?Sized>(
    op: &T,
    cfg: &SolverConfig,
) -> Result<EigenPair> {
    if op.dim() > 1 && !scc::is_strongly_connected(&op.digraph()) {
        return Err(Error::NotWeaklyIrreducible);
    }
    solve_irreducible(op, cfg, 1.0)
}

fn solve_hypergraph_components<F>(h: &Hypergraph, cfg: &SolverConfig, solve: F) -> Result<EigenPair>
where
    F: Fn(&Hypergraph, &SolverConfig) -> Result<EigenPair>,
{
    let comps = h.components();
    if comps.len() <= 1 {
        return solve(h, cfg);
    }
    let mut best: Option<EigenPair> = None;
    for comp in comps {
        let sub = h.induced(&comp);
        let pair = solve(&sub, cfg)?;
        best = better(best, embed_component(pair, &comp, h.n()));
    }
    Ok(best.expect("at least one component"))
}

/// Spectral radius of the adjacency tensor of `h`; disconnected hypergraphs
/// are solved per connected component (max over components, vector supported
/// on the dominant one).
pub fn adjacency_radius(h: &Hypergraph, cfg: &SolverConfig) -> Result<EigenPair> {
    solve_hypergraph_components(h, cfg, |c, cfg| {
        solve_irreducible(&c.adjacency_op(), cfg, 1.0)
    })
}

/// Spectral radius of the signless Laplacian tensor `Q = D + A` of `h`.
pub fn signless_radius(h: &Hypergraph, cfg: &SolverConfig) -> Result<EigenPair> {
    solve_hypergraph_components(h, cfg, |c, cfg| {
        solve_irreducible(&c.signless_op(), cfg, 0.0)
    })
}

/// Largest H-eigenvalue of the Laplacian `L = D - A` through the
/// odd-bipartite sign-flip route.
///
/// Requires even `k` and an odd-bipartite certificate `(V1, V2)`. Computes
/// the Perron pair of `Q`, flips the sign of the vector on `V1` (odd edge
/// intersections and odd `k - 1` make the flipped vector satisfy the `L`
/// eigenvalue equation with the same `lambda`), verifies the `L` residual,
/// and returns the `Q` pair together with the signed vector.
pub fn laplacian_radius_odd_bipartite(
    h: &Hypergraph,
    cfg: &SolverConfig,
) -> Result<(EigenPair, DenseVector)> {
    if !h.k().is_multiple_of(2) {
        return Err(Error::LaplacianOddOrder { k: h.k() });
    }
    let cert = h.is_odd_bipartite().ok_or(Error::NotOddBipartite)?;
    let pair = signless_radius(h, cfg)?;
    let signs = cert.signs(h.n());
    let flipped: DenseVector = pair
        .vector
        .iter()
        .zip(&signs)
        .map(|(x, s)| x * s)
        .collect();
    let l_res = residual(&h.laplacian_op(), pair.lambda, &flipped)?;
    if l_res > cfg.tol.max(pair.residual * 4.0) {
        return Err(Error::NonConvergence {
            iterations: pair.iterations,
            lower: pair.bracket.0,
            upper: pair.bracket.1,
        });
    }
    Ok((pair, flipped))
}

/// Spectral radius of the quotient `B^{k,s}` for a seed graph `g`;
/// disconnected seeds are solved per connected component.
pub fn quotient_radius(g: &crate::hypergraph::Graph, k: usize, s: usize, cfg: &SolverConfig) -> Result<EigenPair> {
    let comps = g.components();
    if comps.len() <= 1 {
        let op = QuotientOp::new(g, k, s)?;
        return solve_irreducible(&op, cfg, 0.0);
    }
    let full_dim = QuotientOp::new(g, k, s)?.dim();
    let mut best: Option<EigenPair> = None;
    for comp in comps {
        let (sub, edge_ids) = g.induced_subgraph(&comp);
        let op = QuotientOp::new(&sub, k, s)?;
        let pair = solve_irreducible(&op, cfg, 0.0)?;
        // quotient indices: component vertices first, then its edges
        let mut indices: Vec<usize> = comp.clone();
        if op.has_edge_rows() {
            indices.extend(edge_ids.iter().map(|&j| g.n() + j));
        }
        best = better(best, embed_component(pair, &indices, full_dim));
    }
    Ok(best.expect("at least one component"))
}

/// One evaluated grid point of the monotonicity scan.
#[derive(Debug, Clone, Serialize)]
pub struct GridPoint {
    pub k: usize,
    pub s: usize,
    pub lambda: f64,
    pub residual: f64,
    pub iterations: usize,
    pub delta_gap: f64,
}

/// Outcome of one monotonicity assertion; failures list the violating grid
/// points in `detail`.
#[derive(Debug, Clone, Serialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Table plus assertion results from [`verify_monotonicity`].
#[derive(Debug, Clone, Serialize)]
pub struct MonotonicityReport {
    pub max_degree: usize,
    pub rows: Vec<GridPoint>,
    pub assertions: Vec<Assertion>,
}

impl MonotonicityReport {
    pub fn all_passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }

    fn point(&self, k: usize, s: usize) -> Option<&GridPoint> {
        self.rows.iter().find(|p| p.k == k && p.s == s)
    }
}

/// Evaluate `lambda(B^{k,s})` over a `(k, s)` grid on a connected seed graph
/// and assert the structural laws with margin [`STRICT_MARGIN`]:
///
/// * strict decrease along `k` at fixed `s` (max degree >= 2),
/// * strict increase along `s` at fixed `k`, including `s = k/2`,
/// * `lambda > Δ(G)` for every `s < k/2`,
/// * the gap `lambda - Δ` shrinks monotonically along `k`,
/// * for max degree 1 the whole table is constant 2 instead.
pub fn verify_monotonicity(
    g: &crate::hypergraph::Graph,
    k_list: &[usize],
    s_list: &[usize],
    cfg: &SolverConfig,
) -> Result<MonotonicityReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let delta = g.max_degree();
    if delta == 0 {
        return Err(Error::InvalidGraph("graph has no edges".into()));
    }

    let mut ks: Vec<usize> = k_list.to_vec();
    ks.sort_unstable();
    ks.dedup();
    let mut ss: Vec<usize> = s_list.to_vec();
    ss.sort_unstable();
    ss.dedup();

    let mut rows = Vec::new();
    for &k in &ks {
        for &s in &ss {
            if s < 1 || 2 * s > k || k < 2 {
                continue;
            }
            let pair = quotient_radius(g, k, s, cfg)?;
            rows.push(GridPoint {
                k,
                s,
                lambda: pair.lambda,
                residual: pair.residual,
                iterations: pair.iterations,
                delta_gap: pair.lambda - delta as f64,
            });
        }
    }

    let mut report = MonotonicityReport {
        max_degree: delta,
        rows,
        assertions: Vec::new(),
    };

    if delta >= 2 {
        for &s in &ss {
            let lambdas: Vec<(usize, f64)> = ks
                .iter()
                .filter_map(|&k| report.point(k, s).map(|p| (k, p.lambda)))
                .collect();
            if lambdas.len() < 2 {
                continue;
            }
            let violations: Vec<String> = lambdas
                .windows(2)
                .filter(|w| !(w[0].1 - w[1].1 > STRICT_MARGIN))
                .map(|w| format!("k={}→{} at s={s}: {} vs {}", w[0].0, w[1].0, w[0].1, w[1].1))
                .collect();
            report.assertions.push(Assertion {
                name: format!("strict_decrease_in_k(s={s})"),
                passed: violations.is_empty(),
                detail: violations.join("; "),
            });
        }
        for &k in &ks {
            let lambdas: Vec<(usize, f64)> = ss
                .iter()
                .filter_map(|&s| report.point(k, s).map(|p| (s, p.lambda)))
                .collect();
            if lambdas.len() < 2 {
                continue;
            }
            let violations: Vec<String> = lambdas
                .windows(2)
                .filter(|w| !(w[1].1 - w[0].1 > STRICT_MARGIN))
                .map(|w| format!("s={}→{} at k={k}: {} vs {}", w[0].0, w[1].0, w[0].1, w[1].1))
                .collect();
            report.assertions.push(Assertion {
                name: format!("strict_increase_in_s(k={k})"),
                passed: violations.is_empty(),
                detail: violations.join("; "),
            });
        }
        for &s in &ss {
            let gaps: Vec<(usize, f64)> = ks
                .iter()
                .filter_map(|&k| report.point(k, s).map(|p| (k, p.delta_gap)))
                .collect();
            if gaps.len() < 2 {
                continue;
            }
            let violations: Vec<String> = gaps
                .windows(2)
                .filter(|w| !(w[0].1 > w[1].1 && w[1].1 > 0.0))
                .map(|w| format!("k={}→{} at s={s}", w[0].0, w[1].0))
                .collect();
            report.assertions.push(Assertion {
                name: format!("gap_shrinks_toward_zero(s={s})"),
                passed: violations.is_empty(),
                detail: violations.join("; "),
            });
        }
    } else {
        // max degree 1: the sequence is constant 2
        let violations: Vec<String> = report
            .rows
            .iter()
            .filter(|p| (p.lambda - 2.0).abs() > STRICT_MARGIN)
            .map(|p| format!("k={} s={}: {}", p.k, p.s, p.lambda))
            .collect();
        report.assertions.push(Assertion {
            name: "constant_lambda_2_for_max_degree_1".into(),
            passed: violations.is_empty(),
            detail: violations.join("; "),
        });
    }

    let violations: Vec<String> = report
        .rows
        .iter()
        .filter(|p| 2 * p.s < p.k && !(p.lambda > delta as f64 + STRICT_MARGIN))
        .map(|p| format!("k={} s={}: {}", p.k, p.s, p.lambda))
        .collect();
    report.assertions.push(Assertion {
        name: "lambda_exceeds_max_degree_for_cored".into(),
        passed: violations.is_empty(),
        detail: violations.join("; "),
    });

    Ok(report)
}

/// Convenience: Perron pair of `B^{k,s}` plus the lift of its vector to the
/// full `G^{k,s}` through the natural partition, with the full-size signless
/// Laplacian residual.
pub fn quotient_radius_lifted(
    g: &crate::hypergraph::Graph,
    k: usize,
    s: usize,
    cfg: &SolverConfig,
) -> Result<(EigenPair, DenseVector, f64)> {
    let pair = quotient_radius(g, k, s, cfg)?;
    let (h, labeling) = build_generalized_power(g, k, s)?;
    let p: Partition = labeling.natural_partition();
    let lifted = p.lift(&pair.vector)?;
    let res = residual(&h.signless_op(), pair.lambda, &lifted)?;
    Ok((pair, lifted, res))
}
