//! Eigenmatrices, Krein parameters and Q-polynomial orderings.

use nalgebra::DMatrix;

use super::spectrum::cosines_f64;
use super::{DrgError, IntersectionArray, Spectrum};
use crate::scalar::rational_to_f64;

/// `P Q = |X| I` must hold to this relative tolerance.
pub const PQ_TOLERANCE: f64 = 1e-8;
/// `|q| < KREIN_ZERO * max |q|` counts as zero.
pub const KREIN_ZERO: f64 = 1e-7;
/// Orderings are enumerated up to this diameter (`D!` candidates).
pub const MAX_ORDERING_DIAMETER: usize = 9;

#[derive(Clone, Debug)]
pub struct EigenmatrixPair {
    /// `P[i][l]`: eigenvalue of `A_l` on `E_i`.
    pub p: DMatrix<f64>,
    /// `Q = |X| P^{-1}`.
    pub q: DMatrix<f64>,
    /// `krein[h][i][j] = q^h_{i,j}`.
    pub krein: Vec<Vec<Vec<f64>>>,
}

impl EigenmatrixPair {
    pub fn krein(&self, h: usize, i: usize, j: usize) -> f64 {
        self.krein[h][i][j]
    }

    pub fn max_abs_krein(&self) -> f64 {
        self.krein
            .iter()
            .flatten()
            .flatten()
            .fold(0.0f64, |m, q| m.max(q.abs()))
    }

    pub fn min_krein(&self) -> f64 {
        self.krein
            .iter()
            .flatten()
            .flatten()
            .fold(f64::INFINITY, |m, &q| m.min(q))
    }

    /// Krein condition `q^h_{i,j} >= 0`, up to the zero tolerance.
    pub fn krein_conditions_hold(&self) -> bool {
        self.min_krein() >= -KREIN_ZERO * self.max_abs_krein()
    }
}

#[derive(Clone, Debug)]
pub struct KreinAnalysis {
    pub matrices: EigenmatrixPair,
    /// Each ordering lists spectrum indices `0, s_1, ..., s_D`.
    pub q_polynomial_orderings: Vec<Vec<usize>>,
}

impl KreinAnalysis {
    pub fn is_q_polynomial(&self) -> bool {
        !self.q_polynomial_orderings.is_empty()
    }
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items[k..=i].rotate_right(1);
        permutations(items, k + 1, out);
        items[k..=i].rotate_left(1);
    }
}

/// Builds `P`, `Q` and the Krein tensor, then lists every ordering of the
/// nontrivial idempotents satisfying: for distinct `h, j`, `q^h_{1,j} = 0`
/// iff `|h - j| != 1`.
pub fn krein_and_qpoly(
    arr: &IntersectionArray,
    spec: &Spectrum,
) -> Result<KreinAnalysis, DrgError> {
    let d = arr.diameter();
    if spec.diameter() != d {
        return Err(DrgError::InvalidInput(format!(
            "spectrum has {} eigenvalues, array has diameter {d}",
            spec.eigenvalues.len()
        )));
    }
    if d > MAX_ORDERING_DIAMETER {
        return Err(DrgError::InvalidInput(format!(
            "diameter {d} exceeds {MAX_ORDERING_DIAMETER}"
        )));
    }
    let n: f64 = spec.multiplicities.iter().sum::<u64>() as f64;
    let sizes: Vec<f64> = arr.sphere_sizes().iter().map(rational_to_f64).collect();
    let thetas = spec.theta_f64();
    let cos: Vec<Vec<f64>> = thetas.iter().map(|&t| cosines_f64(arr, t)).collect();
    let p = DMatrix::from_fn(d + 1, d + 1, |i, l| sizes[l] * cos[i][l]);
    let inv = p
        .clone()
        .try_inverse()
        .ok_or_else(|| DrgError::Numerical("eigenmatrix P is singular".into()))?;
    let q = inv * n;
    let prod = &p * &q;
    let worst = (0..=d)
        .flat_map(|i| (0..=d).map(move |j| (i, j)))
        .map(|(i, j)| (prod[(i, j)] - if i == j { n } else { 0.0 }).abs())
        .fold(0.0f64, f64::max);
    if worst > PQ_TOLERANCE * n {
        return Err(DrgError::Numerical(format!("|PQ - nI| = {worst:e}")));
    }
    let krein: Vec<Vec<Vec<f64>>> = (0..=d)
        .map(|h| {
            (0..=d)
                .map(|i| {
                    (0..=d)
                        .map(|j| {
                            (0..=d)
                                .map(|l| q[(l, i)] * q[(l, j)] * p[(h, l)])
                                .sum::<f64>()
                                / n
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let matrices = EigenmatrixPair { p, q, krein };
    let scale = matrices.max_abs_krein();
    let zero = |x: f64| x.abs() < KREIN_ZERO * scale;
    let mut perms = Vec::new();
    permutations(&mut (1..=d).collect(), 0, &mut perms);
    let orderings = perms
        .into_iter()
        .map(|rest| {
            let mut ord = vec![0];
            ord.extend(rest);
            ord
        })
        .filter(|ord| {
            (0..=d).all(|h| {
                (0..=d).filter(|&j| j != h).all(|j| {
                    let z = zero(matrices.krein(ord[h], ord[1], ord[j]));
                    z == (h.abs_diff(j) != 1)
                })
            })
        })
        .collect();
    Ok(KreinAnalysis {
        matrices,
        q_polynomial_orderings: orderings,
    })
}
