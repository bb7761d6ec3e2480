//! Distance-regular graphs: verification, spectra, tightness and Krein
//! parameters.

mod array;
mod krein;
mod spectrum;
mod tight;

pub use array::IntersectionArray;
pub use krein::{krein_and_qpoly, EigenmatrixPair, KreinAnalysis};
pub use spectrum::{spectrum_from_array, Spectrum};
pub use tight::{
    local_graph_report, local_graph_survey, tightness_test, LocalGraphReport, TightReport,
};

use crate::bitset::{and_count, BitSet};
use crate::graph::{all_pairs_distances, Graph};
use crate::par;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DrgError {
    #[error("invalid intersection array: {0}")]
    InvalidArray(String),
    #[error("cannot parse intersection array: {0}")]
    Parse(String),
    #[error("vertex count {given} disagrees with the array (implies {implied:?})")]
    InconsistentVertexCount { given: u64, implied: Option<u64> },
    #[error("multiplicity of eigenvalue {eigenvalue} is {value}, not an integer")]
    NonIntegralMultiplicity { eigenvalue: String, value: f64 },
    #[error("diameter {0} is below 3")]
    DiameterTooSmall(usize),
    #[error("division by zero: {0}")]
    DivisionGuard(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("{0}")]
    InvalidInput(String),
}

/// Which intersection number disagreed in [`is_distance_regular`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Count {
    /// `|Gamma(y) ∩ Gamma_{i-1}(x)|`
    C,
    /// `|Gamma(y) ∩ Gamma_{i+1}(x)|`
    B,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NotDrg {
    #[error("graph has no vertices")]
    TooSmall,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {x} has eccentricity {found}, expected {expected}")]
    Eccentricity {
        x: usize,
        found: usize,
        expected: usize,
    },
    #[error("pair ({x}, {y}) at distance {i}: {kind:?}-count {found}, expected {expected}")]
    Mismatch {
        x: usize,
        y: usize,
        i: usize,
        kind: Count,
        found: usize,
        expected: usize,
    },
}

/// Per-distance `(c_i, b_i)` seen from `x`; `None` for a distance that
/// disagrees within the sphere itself (the witness is returned).
fn counts_from(
    g: &Graph,
    spheres: &[BitSet],
    x: usize,
    reference: Option<&[(usize, usize)]>,
) -> Result<Vec<(usize, usize)>, NotDrg> {
    let d = spheres.len() - 1;
    let mut out = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut seen: Option<(usize, usize)> = reference.map(|r| r[i]);
        for y in spheres[i].iter() {
            let row = g.row(y);
            let c = if i == 0 {
                0
            } else {
                and_count(row, spheres[i - 1].words())
            };
            let b = if i == d {
                0
            } else {
                and_count(row, spheres[i + 1].words())
            };
            match seen {
                None => seen = Some((c, b)),
                Some((ec, eb)) => {
                    if c != ec {
                        return Err(NotDrg::Mismatch {
                            x,
                            y,
                            i,
                            kind: Count::C,
                            found: c,
                            expected: ec,
                        });
                    }
                    if b != eb {
                        return Err(NotDrg::Mismatch {
                            x,
                            y,
                            i,
                            kind: Count::B,
                            found: b,
                            expected: eb,
                        });
                    }
                }
            }
        }
        out.push(seen.expect("spheres up to the eccentricity are nonempty"));
    }
    Ok(out)
}

/// Checks distance-regularity and returns the intersection array, or the
/// first disagreeing `(x, y, i)` in vertex order.
pub fn is_distance_regular(g: &Graph) -> Result<IntersectionArray, NotDrg> {
    let n = g.order();
    if n == 0 {
        return Err(NotDrg::TooSmall);
    }
    let dist = all_pairs_distances(g);
    if !dist.is_connected() {
        return Err(NotDrg::Disconnected);
    }
    let d = dist.diameter();
    let spheres_of = |x: usize| -> Vec<BitSet> { (0..=d).map(|i| dist.sphere(x, i)).collect() };
    let s0 = spheres_of(0);
    let found = s0.iter().rposition(|s| !s.is_empty()).unwrap_or(0);
    if found != d {
        return Err(NotDrg::Eccentricity {
            x: 0,
            found,
            expected: d,
        });
    }
    let reference = counts_from(g, &s0, 0, None)?;
    let results = par::map_range(n, |x| {
        let spheres = spheres_of(x);
        let found = spheres.iter().rposition(|s| !s.is_empty()).unwrap_or(0);
        if found != d {
            return Err(NotDrg::Eccentricity {
                x,
                found,
                expected: d,
            });
        }
        counts_from(g, &spheres, x, Some(&reference)).map(|_| ())
    });
    if let Some(err) = results.into_iter().find_map(Result::err) {
        return Err(err);
    }
    if d == 0 {
        // single vertex: no array
        return Err(NotDrg::TooSmall);
    }
    let b = reference[..d].iter().map(|&(_, b)| b as i64).collect();
    let c = reference[1..].iter().map(|&(c, _)| c as i64).collect();
    Ok(IntersectionArray::new(b, c).expect("counts from a connected graph form a valid array"))
}

/// `1 + k sum_{i<D} (k-1)^i`, which is `2D + 1` when `k = 2`.
pub fn moore_bound(k: u64, diameter: u32) -> Option<u128> {
    if k < 2 || diameter < 1 {
        return None;
    }
    if k == 2 {
        return Some(2 * diameter as u128 + 1);
    }
    let mut total: u128 = 1;
    let mut term: u128 = k as u128;
    for _ in 0..diameter {
        total = total.checked_add(term)?;
        term = term.checked_mul(k as u128 - 1)?;
    }
    Some(total)
}
