//! mu-graphs, the triple intersection number gamma, and instance checks of
//! the mu-graph lemmas.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::bitset::{and3_count, BitSet};
use crate::graph::{
    all_pairs_distances, induced_subgraph, local_graph, recognize_complete_multipartite, Graph,
    InducedSubgraph, MultipartiteShape,
};
use crate::par;
use crate::srg::srg_params_from_graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MuError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("vertices {x} and {z} are not at distance 2")]
    NotDistanceTwo { x: usize, z: usize },
}

/// Unordered pair at distance 2: distinct, nonadjacent, with a common
/// neighbour.
fn at_distance_two(g: &Graph, x: usize, z: usize) -> bool {
    x != z && !g.adjacent(x, z) && g.common_neighbor_count(x, z) > 0
}

/// Subgraph induced on the common neighbours of `x` and `z`.
pub fn mu_graph(g: &Graph, x: usize, z: usize) -> Result<InducedSubgraph, MuError> {
    for vertex in [x, z] {
        if vertex >= g.order() {
            return Err(MuError::VertexOutOfRange {
                vertex,
                order: g.order(),
            });
        }
    }
    if !at_distance_two(g, x, z) {
        return Err(MuError::NotDistanceTwo { x, z });
    }
    Ok(induced_subgraph(g, &g.common_neighbors(x, z)).expect("in range"))
}

/// Isomorphism class of a mu-graph, as far as it is recognised.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum MuShape {
    Multipartite(MultipartiteShape),
    /// `n` isolated vertices, i.e. `K_{1 x n}`.
    Edgeless(usize),
    Srg {
        v: i64,
        k: i64,
        lambda: i64,
        mu: i64,
    },
    Unclassified {
        vertices: usize,
    },
}

impl MuShape {
    /// `K_{t x n}`, reading `t = 1` as the edgeless graph.
    pub fn complete_multipartite(t: usize, n: usize) -> Self {
        if t == 1 {
            MuShape::Edgeless(n)
        } else {
            MuShape::Multipartite(MultipartiteShape { t, n })
        }
    }

    /// `(t, n)` with `Edgeless(n)` as `(1, n)`.
    pub fn parts(&self) -> Option<(usize, usize)> {
        match *self {
            MuShape::Multipartite(s) => Some((s.t, s.n)),
            MuShape::Edgeless(n) => Some((1, n)),
            _ => None,
        }
    }
}

impl fmt::Display for MuShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MuShape::Multipartite(s) => write!(f, "{s}"),
            MuShape::Edgeless(n) => write!(f, "{n}K1"),
            MuShape::Srg { v, k, lambda, mu } => write!(f, "srg({v},{k},{lambda},{mu})"),
            MuShape::Unclassified { vertices } => write!(f, "unclassified({vertices})"),
        }
    }
}

pub fn classify_mu_graph(g: &Graph) -> MuShape {
    if g.edge_count() == 0 {
        return MuShape::Edgeless(g.order());
    }
    if let Some(shape) = recognize_complete_multipartite(g) {
        return MuShape::Multipartite(shape);
    }
    match srg_params_from_graph(g) {
        Ok(p) => MuShape::Srg {
            v: p.v,
            k: p.k,
            lambda: p.lambda,
            mu: p.mu,
        },
        Err(_) => MuShape::Unclassified {
            vertices: g.order(),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuGraphCensus {
    pub counts: BTreeMap<MuShape, usize>,
    /// Lexicographically first pair showing each shape.
    pub first_witness: BTreeMap<MuShape, (usize, usize)>,
    /// Unordered distance-2 pairs.
    pub pairs: usize,
    pub uniform: bool,
}

impl MuGraphCensus {
    pub fn uniform_shape(&self) -> Option<MuShape> {
        if self.uniform {
            self.counts.keys().next().copied()
        } else {
            None
        }
    }
}

/// Classifies the mu-graph of every unordered pair at distance 2.
pub fn mu_census(g: &Graph) -> MuGraphCensus {
    let n = g.order();
    let per_x = par::map_range(n, |x| {
        (x + 1..n)
            .filter(|&z| at_distance_two(g, x, z))
            .map(|z| {
                let mu = induced_subgraph(g, &g.common_neighbors(x, z)).expect("in range");
                (classify_mu_graph(&mu.graph), z)
            })
            .collect::<Vec<_>>()
    });
    let mut counts = BTreeMap::new();
    let mut first_witness = BTreeMap::new();
    let mut pairs = 0;
    for (x, found) in per_x.into_iter().enumerate() {
        for (shape, z) in found {
            *counts.entry(shape).or_insert(0) += 1;
            first_witness.entry(shape).or_insert((x, z));
            pairs += 1;
        }
    }
    let uniform = counts.len() == 1;
    MuGraphCensus {
        counts,
        first_witness,
        pairs,
        uniform,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaReport {
    pub exists: bool,
    pub value: Option<usize>,
    /// Ordered triples `(x, y, z)` examined.
    pub triple_count: u64,
    pub histogram: BTreeMap<usize, u64>,
}

fn distance_two_sets(g: &Graph) -> Vec<BitSet> {
    let dist = all_pairs_distances(g);
    par::map_range(g.order(), |x| dist.sphere(x, 2))
}

fn gamma_impl(g: &Graph, verbose: bool) -> GammaReport {
    let n = g.order();
    let d2 = distance_two_sets(g);
    let triples_at = |x: usize, y: usize| {
        let mut both = d2[x].clone();
        both.intersect_with(d2[y].words());
        both
    };
    // reference count from the first triple in (x, y, z) order
    let reference = (0..n).find_map(|x| {
        g.neighbors(x).find_map(|y| {
            triples_at(x, y)
                .iter()
                .next()
                .map(|z| and3_count(g.row(x), g.row(y), g.row(z)))
        })
    });
    let Some(reference) = reference else {
        return GammaReport {
            exists: false,
            value: None,
            triple_count: 0,
            histogram: BTreeMap::new(),
        };
    };
    let per_x = par::map_range(n, |x| {
        let mut hist: BTreeMap<usize, u64> = BTreeMap::new();
        for y in g.neighbors(x) {
            for z in triples_at(x, y).iter() {
                let c = and3_count(g.row(x), g.row(y), g.row(z));
                *hist.entry(c).or_insert(0) += 1;
                if !verbose && c != reference {
                    return hist;
                }
            }
        }
        hist
    });
    let mut histogram = BTreeMap::new();
    for hist in per_x {
        for (c, count) in hist {
            *histogram.entry(c).or_insert(0) += count;
        }
    }
    let triple_count = histogram.values().sum();
    let exists = histogram.len() == 1;
    GammaReport {
        exists,
        value: exists.then_some(reference),
        triple_count,
        histogram,
    }
}

/// `gamma`: the common count `|Gamma(x) ∩ Gamma(y) ∩ Gamma(z)|` over all
/// `x ~ y` with `d(x,z) = d(y,z) = 2`, if it is constant. Stops scanning a
/// vertex at its first deviating triple.
pub fn gamma_number(g: &Graph) -> GammaReport {
    gamma_impl(g, false)
}

/// As [`gamma_number`] but always scans every triple, so the histogram is
/// complete.
pub fn gamma_number_verbose(g: &Graph) -> GammaReport {
    gamma_impl(g, true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LemmaOutcome {
    Inapplicable(String),
    Pass,
    Fail {
        x: usize,
        z: Option<usize>,
        reason: String,
    },
}

impl LemmaOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, LemmaOutcome::Pass)
    }

    pub fn status(&self) -> &'static str {
        match self {
            LemmaOutcome::Inapplicable(_) => "INAPPLICABLE",
            LemmaOutcome::Pass => "PASS",
            LemmaOutcome::Fail { .. } => "FAIL",
        }
    }
}

impl fmt::Display for LemmaOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LemmaOutcome::Inapplicable(why) => write!(f, "INAPPLICABLE ({why})"),
            LemmaOutcome::Pass => write!(f, "PASS"),
            LemmaOutcome::Fail {
                x,
                z: Some(z),
                reason,
            } => write!(f, "FAIL at ({x},{z}): {reason}"),
            LemmaOutcome::Fail { x, z: None, reason } => write!(f, "FAIL at {x}: {reason}"),
        }
    }
}

/// Recursion through local graphs for a graph whose mu-graphs are all
/// `K_{t x n}` (`t, n >= 2`) with `gamma` defined: each local graph must be
/// regular, have all mu-graphs `K_{(t-1) x n}` and `gamma` one less.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JmtReport {
    pub outcome: LemmaOutcome,
    pub t: Option<usize>,
    pub n: Option<usize>,
    pub gamma: Option<usize>,
    pub vertices_checked: usize,
}

pub fn verify_jmt_recursion(g: &Graph) -> JmtReport {
    let inapplicable = |why: String, t, n, gamma| JmtReport {
        outcome: LemmaOutcome::Inapplicable(why),
        t,
        n,
        gamma,
        vertices_checked: 0,
    };
    let census = mu_census(g);
    let Some(MuShape::Multipartite(shape)) = census.uniform_shape() else {
        return inapplicable(
            "mu-graphs are not uniformly complete multipartite".into(),
            None,
            None,
            None,
        );
    };
    let (t, n) = (shape.t, shape.n);
    if n < 2 {
        return inapplicable(
            format!("mu-graph {shape} has parts of size 1"),
            Some(t),
            Some(n),
            None,
        );
    }
    let gamma = gamma_number(g);
    let Some(gv) = gamma.value else {
        return inapplicable("gamma is not defined".into(), Some(t), Some(n), None);
    };
    let want = MuShape::complete_multipartite(t - 1, n);
    let failures = par::map_range(g.order(), |x| {
        let local = local_graph(g, x).graph;
        if local.regular_degree().is_none() {
            return Some(LemmaOutcome::Fail {
                x,
                z: None,
                reason: "local graph is not regular".into(),
            });
        }
        let lc = mu_census(&local);
        if let Some((shape, &(a, b))) = lc.first_witness.iter().find(|(s, _)| **s != want) {
            return Some(LemmaOutcome::Fail {
                x,
                z: None,
                reason: format!("local mu-graph at ({a},{b}) is {shape}, expected {want}"),
            });
        }
        if lc.pairs == 0 {
            return Some(LemmaOutcome::Fail {
                x,
                z: None,
                reason: "local graph has no pair at distance 2".into(),
            });
        }
        let lg = gamma_number(&local);
        if lg.value != gv.checked_sub(1) {
            return Some(LemmaOutcome::Fail {
                x,
                z: None,
                reason: format!("local gamma {:?}, expected {}", lg.value, gv as i64 - 1),
            });
        }
        None
    });
    let outcome = failures
        .into_iter()
        .flatten()
        .next()
        .unwrap_or(LemmaOutcome::Pass);
    JmtReport {
        outcome,
        t: Some(t),
        n: Some(n),
        gamma: Some(gv),
        vertices_checked: g.order(),
    }
}

/// Gate value `c_2`: mu of the first pair at distance 2.
fn first_c2(g: &Graph) -> Option<usize> {
    let n = g.order();
    (0..n).find_map(|x| {
        (x + 1..n)
            .find(|&z| at_distance_two(g, x, z))
            .map(|z| g.common_neighbor_count(x, z))
    })
}

fn verify_shape(g: &Graph, c2_needed: usize, want: MuShape, label: &str) -> LemmaOutcome {
    let Some(c2) = first_c2(g) else {
        return LemmaOutcome::Inapplicable("no pair at distance 2".into());
    };
    if c2 != c2_needed {
        return LemmaOutcome::Inapplicable(format!("c2 = {c2} but {label} = {c2_needed}"));
    }
    let census = mu_census(g);
    match census
        .first_witness
        .iter()
        .filter(|(s, _)| **s != want)
        .min_by_key(|(_, &w)| w)
    {
        None => LemmaOutcome::Pass,
        Some((shape, &(x, z))) => LemmaOutcome::Fail {
            x,
            z: Some(z),
            reason: format!("mu-graph is {shape}, expected {want}"),
        },
    }
}

/// Every mu-graph is `K_{m x m}` when `c_2 = m^2`.
pub fn verify_oa_mu_lemma(g: &Graph, m: usize) -> LemmaOutcome {
    if m < 2 {
        return LemmaOutcome::Inapplicable(format!("m = {m} < 2"));
    }
    verify_shape(g, m * m, MuShape::complete_multipartite(m, m), "m^2")
}

/// Every mu-graph is `K_{(m+1) x m}` when `c_2 = m(m+1)`.
pub fn verify_steiner_mu_lemma(g: &Graph, m: usize) -> LemmaOutcome {
    if m < 2 {
        return LemmaOutcome::Inapplicable(format!("m = {m} < 2"));
    }
    verify_shape(
        g,
        m * (m + 1),
        MuShape::complete_multipartite(m + 1, m),
        "m(m+1)",
    )
}

/// Consequences checked when the census is uniform `K_{t x n}` with
/// `t, n >= 2` and gamma exists: `gamma = t` (if `gamma >= 2`) and `t <= 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MuGammaCheck {
    pub t: usize,
    pub n: usize,
    pub gamma: usize,
    pub gamma_equals_t: bool,
    /// `false` would contradict the bound `t <= 4`.
    pub t_at_most_four: bool,
}

pub fn mu_gamma_check(census: &MuGraphCensus, gamma: &GammaReport) -> Option<MuGammaCheck> {
    let MuShape::Multipartite(s) = census.uniform_shape()? else {
        return None;
    };
    let gv = gamma.value?;
    if s.n < 2 || gv < 2 {
        return None;
    }
    Some(MuGammaCheck {
        t: s.t,
        n: s.n,
        gamma: gv,
        gamma_equals_t: gv == s.t,
        t_at_most_four: s.t <= 4,
    })
}
