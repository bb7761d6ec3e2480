//! Named graph families and the Taylor doubling construction.

use std::fmt;
use std::str::FromStr;

use crate::designs::ConstructionError;
use crate::drg::{is_distance_regular, IntersectionArray};
use crate::graph::Graph;
use crate::srg::srg_params_from_graph;

/// Largest vertex count the constructors will produce.
pub const MAX_ORDER: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Johnson { n: usize, k: usize },
    HalvedCube { n: usize },
    Kneser2 { n: usize },
    Hamming { d: usize, q: usize },
    Hypercube { n: usize },
    CompleteMultipartite { t: usize, n: usize },
    Gq22PointGraph,
}

fn out_of_range(msg: String) -> ConstructionError {
    ConstructionError::OutOfRange(msg)
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    let k = k.min(n - k);
    (0..k).try_fold(1usize, |acc, i| acc.checked_mul(n - i).map(|x| x / (i + 1)))
}

fn check_order(order: Option<usize>, what: &dyn fmt::Display) -> Result<usize, ConstructionError> {
    match order {
        Some(v) if v <= MAX_ORDER => Ok(v),
        _ => Err(out_of_range(format!("{what} exceeds {MAX_ORDER} vertices"))),
    }
}

fn subset_label(mask: u128) -> String {
    let items: Vec<String> = (0..128)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i: u32| i.to_string())
        .collect();
    format!("{{{}}}", items.join(","))
}

/// `k`-subsets of `0..n` (n < 128) as bitmasks in colex order, by Gosper's hack.
fn colex_subsets(n: usize, k: usize) -> Vec<u128> {
    let mut out = Vec::new();
    let mut m: u128 = (1 << k) - 1;
    while m < 1 << n {
        out.push(m);
        let low = m & m.wrapping_neg();
        let ripple = m + low;
        m = (((ripple ^ m) >> 2) / low) | ripple;
    }
    out
}

impl NamedGraph {
    pub fn build(&self) -> Result<Graph, ConstructionError> {
        match *self {
            NamedGraph::Johnson { n, k } => {
                if n < 2 || k < 1 || k >= n || n > 100 {
                    return Err(out_of_range(format!(
                        "johnson({n},{k}) needs 1 <= k <= n - 1, n <= 100"
                    )));
                }
                check_order(binomial(n, k), self)?;
                let subsets = colex_subsets(n, k);
                let g = Graph::from_fn(subsets.len(), |i, j| {
                    (subsets[i] & subsets[j]).count_ones() as usize == k - 1
                });
                Ok(
                    g.with_labels(subsets.iter().map(|&m| subset_label(m)).collect())
                        .expect("labels"),
                )
            }
            NamedGraph::HalvedCube { n } => {
                if !(2..=13).contains(&n) {
                    return Err(out_of_range(format!("halved_cube({n}) needs 2 <= n <= 13")));
                }
                let words: Vec<u64> = (0u64..1 << n).filter(|w| w.count_ones() % 2 == 0).collect();
                let g = Graph::from_fn(words.len(), |i, j| (words[i] ^ words[j]).count_ones() == 2);
                Ok(
                    g.with_labels(words.iter().map(|&w| bits_label(w, n)).collect())
                        .expect("labels"),
                )
            }
            NamedGraph::Kneser2 { n } => kneser2(n, self),
            NamedGraph::Gq22PointGraph => kneser2(6, self),
            NamedGraph::Hamming { d, q } => hamming(d, q, self),
            NamedGraph::Hypercube { n } => hamming(n, 2, self),
            NamedGraph::CompleteMultipartite { t, n } => {
                if t < 2 || n < 1 {
                    return Err(out_of_range(format!(
                        "complete_multipartite({t},{n}) needs t >= 2, n >= 1"
                    )));
                }
                let order = check_order(t.checked_mul(n), self)?;
                Ok(Graph::from_fn(order, |i, j| i / n != j / n))
            }
        }
    }
}

/// 2-subsets, adjacent when disjoint.
fn kneser2(n: usize, name: &NamedGraph) -> Result<Graph, ConstructionError> {
    if !(5..=100).contains(&n) {
        return Err(out_of_range(format!("{name} needs 5 <= n <= 100")));
    }
    check_order(binomial(n, 2), name)?;
    let pairs = colex_subsets(n, 2);
    let g = Graph::from_fn(pairs.len(), |i, j| pairs[i] & pairs[j] == 0);
    Ok(
        g.with_labels(pairs.iter().map(|&m| subset_label(m)).collect())
            .expect("labels"),
    )
}

fn bits_label(w: u64, n: usize) -> String {
    (0..n)
        .map(|i| if w >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

fn hamming(d: usize, q: usize, name: &NamedGraph) -> Result<Graph, ConstructionError> {
    if d < 1 || q < 2 {
        return Err(out_of_range(format!("{name} needs d >= 1, q >= 2")));
    }
    let order = check_order(u32::try_from(d).ok().and_then(|d| q.checked_pow(d)), name)?;
    let digits = |mut v: usize| -> Vec<usize> {
        let mut out = vec![0; d];
        for slot in out.iter_mut() {
            *slot = v % q;
            v /= q;
        }
        out
    };
    let words: Vec<Vec<usize>> = (0..order).map(digits).collect();
    let g = Graph::from_fn(order, |i, j| {
        words[i]
            .iter()
            .zip(&words[j])
            .filter(|(a, b)| a != b)
            .count()
            == 1
    });
    let labels = words
        .iter()
        .map(|w| w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(""))
        .collect();
    Ok(g.with_labels(labels).expect("labels"))
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Johnson { n, k } => write!(f, "johnson({n},{k})"),
            NamedGraph::HalvedCube { n } => write!(f, "halved_cube({n})"),
            NamedGraph::Kneser2 { n } => write!(f, "kneser2({n})"),
            NamedGraph::Hamming { d, q } => write!(f, "hamming({d},{q})"),
            NamedGraph::Hypercube { n } => write!(f, "hypercube({n})"),
            NamedGraph::CompleteMultipartite { t, n } => {
                write!(f, "complete_multipartite({t},{n})")
            }
            NamedGraph::Gq22PointGraph => write!(f, "gq22_point_graph"),
        }
    }
}

/// Accepts `johnson(6,3)`, `johnson 6 3` and `halved-cube 6` style names.
impl FromStr for NamedGraph {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cleaned: String = s
            .chars()
            .map(|c| if "(),".contains(c) { ' ' } else { c })
            .collect();
        let mut parts = cleaned.split_whitespace();
        let name = parts
            .next()
            .ok_or_else(|| ConstructionError::Parse("empty family name".into()))?;
        let args: Vec<usize> = parts
            .map(|p| {
                p.parse().map_err(|_| {
                    ConstructionError::Parse(format!("`{p}` is not a nonnegative integer"))
                })
            })
            .collect::<Result<_, _>>()?;
        let family = name.to_ascii_lowercase().replace('-', "_");
        let arity = |want: usize| -> Result<(), ConstructionError> {
            if args.len() == want {
                Ok(())
            } else {
                Err(ConstructionError::Parse(format!(
                    "{family} takes {want} argument(s), got {}",
                    args.len()
                )))
            }
        };
        match family.as_str() {
            "johnson" => arity(2).map(|_| NamedGraph::Johnson {
                n: args[0],
                k: args[1],
            }),
            "halved_cube" => arity(1).map(|_| NamedGraph::HalvedCube { n: args[0] }),
            "kneser2" => arity(1).map(|_| NamedGraph::Kneser2 { n: args[0] }),
            "hamming" => arity(2).map(|_| NamedGraph::Hamming {
                d: args[0],
                q: args[1],
            }),
            "hypercube" => arity(1).map(|_| NamedGraph::Hypercube { n: args[0] }),
            "complete_multipartite" => arity(2).map(|_| NamedGraph::CompleteMultipartite {
                t: args[0],
                n: args[1],
            }),
            "gq22_point_graph" | "gq22" => arity(0).map(|_| NamedGraph::Gq22PointGraph),
            _ => Err(ConstructionError::Parse(format!("unknown family `{name}`"))),
        }
    }
}

/// Checks that `delta` is strongly regular on `k` vertices with valency
/// `a_1` and `lambda = (3a_1 - k - 1)/2`, `mu = a_1/2`; returns
/// `c_2 = k - a_1 - 1`.
pub fn taylor_local_c2(delta: &Graph) -> Result<i64, ConstructionError> {
    let params = srg_params_from_graph(delta).map_err(|e| {
        ConstructionError::Rejected(format!("local graph is not strongly regular: {e}"))
    })?;
    let (k, a1) = (params.v, params.k);
    let c2 = k - a1 - 1;
    if 2 * params.lambda != 3 * a1 - k - 1 {
        return Err(ConstructionError::Rejected(format!(
            "lambda = {} but (3a_1 - k - 1)/2 = {}/2 for {params}",
            params.lambda,
            3 * a1 - k - 1
        )));
    }
    if 2 * params.mu != a1 {
        return Err(ConstructionError::Rejected(format!(
            "mu = {} but a_1/2 = {a1}/2 for {params}",
            params.mu
        )));
    }
    if c2 < 1 || c2 > k - 2 {
        return Err(ConstructionError::Rejected(format!(
            "c_2 = {c2} outside [1, k - 2] for {params}"
        )));
    }
    Ok(c2)
}

/// Two-graph double of `delta`: vertices `(v, e)` for `v` in `delta` or the
/// point at infinity, `e` in `{0, 1}`. Layout: `0` is `(inf, 0)`, `1..=k`
/// are `(x, 0)`, `k + 1` is `(inf, 1)`, then `(x, 1)`.
///
/// The result is checked to be distance-regular with array
/// `{k, c_2, 1; 1, c_2, k}`.
pub fn taylor_double(delta: &Graph) -> Result<Graph, ConstructionError> {
    let c2 = taylor_local_c2(delta)?;
    let k = delta.order();
    let order = 2 * (k + 1);
    // (is_infinity, x, layer)
    let decode = |v: usize| -> (Option<usize>, usize) {
        let layer = v / (k + 1);
        let pos = v % (k + 1);
        ((pos > 0).then(|| pos - 1), layer)
    };
    let g = Graph::from_fn(order, |u, v| match (decode(u), decode(v)) {
        ((None, e), (Some(_), f)) | ((Some(_), e), (None, f)) => e == f,
        ((None, _), (None, _)) => false,
        ((Some(x), e), (Some(y), f)) => {
            if e == f {
                delta.adjacent(x, y)
            } else {
                x != y && !delta.adjacent(x, y)
            }
        }
    });
    let labels = (0..order)
        .map(|v| match decode(v) {
            (None, e) => format!("(inf,{e})"),
            (Some(x), e) => format!("({},{e})", delta.label(x)),
        })
        .collect();
    let g = g.with_labels(labels).expect("labels");
    let kk = k as i64;
    let want = IntersectionArray::new(vec![kk, c2, 1], vec![1, c2, kk])
        .map_err(|e| ConstructionError::Rejected(e.to_string()))?;
    match is_distance_regular(&g) {
        Ok(arr) if arr == want => Ok(g),
        Ok(arr) => Err(ConstructionError::Rejected(format!(
            "double has array {arr}, expected {want}"
        ))),
        Err(witness) => Err(ConstructionError::Rejected(format!(
            "double is not distance-regular: {witness}"
        ))),
    }
}
