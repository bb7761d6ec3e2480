//! Strongly regular graphs: parameter extraction, closed-form eigenvalues,
//! Hoffman-type bounds and Delsarte cliques.

use std::collections::BTreeMap;
use std::fmt;

use num::integer::Roots;
use num::rational::Ratio;
use serde::Serialize;

use crate::clique::{enumerate_maximal_cliques, is_clique, is_coclique};
use crate::graph::{all_pairs_distances, local_graph, Graph};
use crate::linalg::adjacency_eigenvalues;
use crate::par;

/// Nontrivial eigenvalues `r > s` of a strongly regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum SrgEigenvalues {
    Integral {
        r: i64,
        s: i64,
    },
    /// Discriminant is not a perfect square (conference-graph case).
    Irrational {
        r: f64,
        s: f64,
    },
}

/// `(v, k, lambda, mu)` with eigenvalues solved from
/// `x^2 - (lambda - mu) x - (k - mu) = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SrgParams {
    pub v: i64,
    pub k: i64,
    pub lambda: i64,
    pub mu: i64,
    pub eigenvalues: SrgEigenvalues,
}

impl SrgParams {
    pub fn new(v: i64, k: i64, lambda: i64, mu: i64) -> Self {
        let b = lambda - mu;
        let disc = b * b + 4 * (k - mu);
        let root = if disc >= 0 { disc.sqrt() } else { -1 };
        let eigenvalues = if root >= 0 && root * root == disc {
            // monic integer polynomial: rational roots are integers
            SrgEigenvalues::Integral {
                r: (b + root) / 2,
                s: (b - root) / 2,
            }
        } else {
            let d = (disc as f64).sqrt();
            SrgEigenvalues::Irrational {
                r: (b as f64 + d) / 2.0,
                s: (b as f64 - d) / 2.0,
            }
        };
        Self {
            v,
            k,
            lambda,
            mu,
            eigenvalues,
        }
    }

    pub fn integral_eigenvalues(&self) -> Option<(i64, i64)> {
        match self.eigenvalues {
            SrgEigenvalues::Integral { r, s } => Some((r, s)),
            SrgEigenvalues::Irrational { .. } => None,
        }
    }

    /// `m = -s` for integral eigenvalues.
    pub fn m(&self) -> Option<i64> {
        self.integral_eigenvalues().map(|(_, s)| -s)
    }

    /// `n = r - s` for integral eigenvalues.
    pub fn n_gap(&self) -> Option<i64> {
        self.integral_eigenvalues().map(|(r, s)| r - s)
    }

    pub fn is_integral(&self) -> bool {
        self.integral_eigenvalues().is_some()
    }

    /// Checks `v(k + rs) = (k - r)(k - s)`, `lambda = k + r + s + rs`,
    /// `mu = k + rs` exactly. Irrational eigenvalues fail.
    pub fn satisfies_eigen_relations(&self) -> bool {
        let Some((r, s)) = self.integral_eigenvalues() else {
            return false;
        };
        let k = self.k as i128;
        let (r, s) = (r as i128, s as i128);
        k + r * s != 0
            && self.v as i128 * (k + r * s) == (k - r) * (k - s)
            && self.lambda as i128 == k + r + s + r * s
            && self.mu as i128 == k + r * s
            && k > r
            && r > s
    }

    /// Connected with connected complement: `0 < mu < k`.
    pub fn is_primitive(&self) -> bool {
        self.mu > 0 && self.mu < self.k
    }

    pub fn tuple(&self) -> (i64, i64, i64, i64) {
        (self.v, self.k, self.lambda, self.mu)
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NotSrg {
    #[error("graph has fewer than 2 vertices")]
    TooSmall,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    NotRegular {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    #[error("complete graph: no nonadjacent pair")]
    Complete,
    #[error("adjacent pair ({0}, {1}) has {2} common neighbours, expected lambda = {3}")]
    Lambda(usize, usize, usize, usize),
    #[error("nonadjacent pair ({0}, {1}) has {2} common neighbours, expected mu = {3}")]
    Mu(usize, usize, usize, usize),
}

/// Verifies strong regularity, returning the first deviating pair (in
/// lexicographic order) otherwise.
pub fn srg_params_from_graph(g: &Graph) -> Result<SrgParams, NotSrg> {
    let n = g.order();
    if n < 2 {
        return Err(NotSrg::TooSmall);
    }
    let k = g.degree(0);
    if let Some(v) = (1..n).find(|&v| g.degree(v) != k) {
        return Err(NotSrg::NotRegular {
            vertex: v,
            degree: g.degree(v),
            expected: k,
        });
    }
    let d = all_pairs_distances(g);
    if !d.is_connected() {
        return Err(NotSrg::Disconnected);
    }
    if k == n - 1 {
        return Err(NotSrg::Complete);
    }
    let first_edge = g.edges().next();
    let lambda = first_edge.map(|(u, v)| g.common_neighbor_count(u, v));
    let first_non_edge = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| !g.adjacent(u, v))
        .expect("not complete");
    let mu = g.common_neighbor_count(first_non_edge.0, first_non_edge.1);
    let deviations = par::map_range(n, |u| {
        (u + 1..n).find_map(|v| {
            let c = g.common_neighbor_count(u, v);
            if g.adjacent(u, v) {
                let l = lambda.expect("edge exists");
                (c != l).then_some(NotSrg::Lambda(u, v, c, l))
            } else {
                (c != mu).then_some(NotSrg::Mu(u, v, c, mu))
            }
        })
    });
    if let Some(err) = deviations.into_iter().flatten().next() {
        return Err(err);
    }
    Ok(SrgParams::new(
        n as i64,
        k as i64,
        lambda.unwrap_or(0) as i64,
        mu as i64,
    ))
}

/// Order `(s, t)` of a generalized quadrangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GqOrder {
    pub s: i64,
    pub t: i64,
}

/// Point graph parameters `((s+1)(st+1), s(t+1), s-1, t+1)`.
pub fn gq_point_graph_params(order: GqOrder) -> SrgParams {
    let GqOrder { s, t } = order;
    SrgParams::new((s + 1) * (s * t + 1), s * (t + 1), s - 1, t + 1)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SrgError {
    #[error("inapplicable: {0}")]
    Inapplicable(String),
    #[error("vertex set is not a clique")]
    NotAClique,
    #[error("vertex set is not a coclique")]
    NotACoclique,
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// Hoffman (Delsarte) clique bound `1 + k/m`.
pub fn hoffman_clique_bound(params: &SrgParams) -> Result<Ratio<i64>, SrgError> {
    let m = params
        .m()
        .ok_or_else(|| SrgError::Inapplicable("smallest eigenvalue is not integral".into()))?;
    if m <= 0 {
        return Err(SrgError::Inapplicable(format!(
            "smallest eigenvalue -m with m = {m}"
        )));
    }
    Ok(Ratio::from_integer(1) + Ratio::new(params.k, m))
}

/// Hoffman coclique bound `v / (1 + k/m)` plus an optional equality certificate.
#[derive(Clone, Debug, PartialEq)]
pub struct CocliqueBound {
    pub bound: Ratio<i64>,
    pub m: i64,
    /// For a supplied coclique: whether every outside vertex has exactly `m`
    /// neighbours in it.
    pub certificate: Option<bool>,
}

/// `m` is the negated smallest adjacency eigenvalue; computed numerically
/// (and required to be integral) when not supplied.
pub fn coclique_bound(
    g: &Graph,
    k: usize,
    m: Option<i64>,
    coclique: Option<&[usize]>,
) -> Result<CocliqueBound, SrgError> {
    match g.regular_degree() {
        Some(d) if d == k => {}
        Some(d) => {
            return Err(SrgError::Inapplicable(format!(
                "graph is {d}-regular, not {k}-regular"
            )))
        }
        None => return Err(SrgError::Inapplicable("graph is not regular".into())),
    }
    let m = match m {
        Some(m) => m,
        None => {
            let least = *adjacency_eigenvalues(g).last().expect("non-empty graph");
            let rounded = least.round();
            if (least - rounded).abs() > 1e-8 {
                return Err(SrgError::Inapplicable(format!(
                    "smallest eigenvalue {least} is not integral"
                )));
            }
            -(rounded as i64)
        }
    };
    if m <= 0 {
        return Err(SrgError::Inapplicable(format!("m = {m} must be positive")));
    }
    let v = g.order() as i64;
    let bound = Ratio::new(v * m, m + k as i64);
    let certificate = match coclique {
        None => None,
        Some(c) => {
            if !is_coclique(g, c) {
                return Err(SrgError::NotACoclique);
            }
            Some(outside_counts(g, c).all(|count| count as i64 == m))
        }
    };
    Ok(CocliqueBound {
        bound,
        m,
        certificate,
    })
}

fn outside_counts<'a>(g: &'a Graph, set: &'a [usize]) -> impl Iterator<Item = usize> + 'a {
    (0..g.order())
        .filter(move |v| !set.contains(v))
        .map(move |v| set.iter().filter(|&&u| g.adjacent(u, v)).count())
}

/// Outcome of a Delsarte clique test.
#[derive(Clone, Debug, PartialEq)]
pub struct DelsarteCheck {
    pub size: usize,
    pub bound: Ratio<i64>,
    pub is_delsarte: bool,
    /// When the size meets the bound: whether every outside vertex has
    /// exactly `mu/m` neighbours in the clique.
    pub outside_law_holds: Option<bool>,
}

pub fn is_delsarte_clique(
    g: &Graph,
    params: &SrgParams,
    c: &[usize],
) -> Result<DelsarteCheck, SrgError> {
    if !is_clique(g, c) || c.iter().any(|&v| v >= g.order()) {
        return Err(SrgError::NotAClique);
    }
    let bound = hoffman_clique_bound(params)?;
    let m = params.m().expect("bound implies integral");
    let is_delsarte = bound.is_integer() && c.len() as i64 == bound.to_integer();
    let outside_law_holds =
        is_delsarte.then(|| outside_counts(g, c).all(|count| count as i64 * m == params.mu));
    Ok(DelsarteCheck {
        size: c.len(),
        bound,
        is_delsarte,
        outside_law_holds,
    })
}

/// All cliques of `g` meeting the Hoffman bound of `params`.
pub fn delsarte_cliques(g: &Graph, params: &SrgParams) -> Result<Vec<Vec<usize>>, SrgError> {
    let bound = hoffman_clique_bound(params)?;
    if !bound.is_integer() {
        return Ok(Vec::new());
    }
    let size = bound.to_integer() as usize;
    Ok(enumerate_maximal_cliques(g)
        .into_iter()
        .filter(|c| c.len() == size)
        .collect())
}

/// Distribution of `|Γ(z) ∩ C|` over vertices `z` at distance two from `x`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NeighborLawReport {
    /// `1 + mu/m` of the local graph.
    pub expected: usize,
    pub histogram: BTreeMap<usize, usize>,
    /// `(z, count)` with count outside `{0, expected}`.
    pub violations: Vec<(usize, usize)>,
}

impl NeighborLawReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that each vertex at distance two from `x` sees either none or
/// exactly `1 + mu/m` vertices of the Delsarte clique `c` of the local graph
/// at `x`. `c` is given in `big`'s vertex indices.
pub fn check_clique_neighbor_law(
    big: &Graph,
    x: usize,
    c: &[usize],
) -> Result<NeighborLawReport, SrgError> {
    let local = local_graph(big, x);
    let params = srg_params_from_graph(&local.graph).map_err(|e| {
        SrgError::Precondition(format!("local graph at {x} is not strongly regular: {e}"))
    })?;
    let mut local_c = Vec::with_capacity(c.len());
    for &v in c {
        let idx = local
            .original
            .binary_search(&v)
            .map_err(|_| SrgError::Precondition(format!("vertex {v} is not a neighbour of {x}")))?;
        local_c.push(idx);
    }
    let check = is_delsarte_clique(&local.graph, &params, &local_c)?;
    if !check.is_delsarte {
        return Err(SrgError::Precondition(format!(
            "clique of size {} is not Delsarte (bound {})",
            check.size, check.bound
        )));
    }
    let m = params.m().expect("Delsarte implies integral");
    if params.mu % m != 0 {
        return Err(SrgError::Precondition(format!(
            "mu/m = {}/{m} is not integral",
            params.mu
        )));
    }
    let expected = (1 + params.mu / m) as usize;
    Ok(neighbor_law_counts(big, x, c, expected))
}

pub(crate) fn neighbor_law_counts(
    big: &Graph,
    x: usize,
    c: &[usize],
    expected: usize,
) -> NeighborLawReport {
    let mut histogram = BTreeMap::new();
    let mut violations = Vec::new();
    for z in 0..big.order() {
        // distance two: nonadjacent with a common neighbour
        if z == x || big.adjacent(x, z) || big.common_neighbor_count(x, z) == 0 {
            continue;
        }
        let count = c.iter().filter(|&&y| big.adjacent(y, z)).count();
        *histogram.entry(count).or_insert(0) += 1;
        if count != 0 && count != expected {
            violations.push((z, count));
        }
    }
    NeighborLawReport {
        expected,
        histogram,
        violations,
    }
}
