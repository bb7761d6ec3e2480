//! Eigenvalues and multiplicities of a distance-regular graph from its
//! intersection array.

use nalgebra::DMatrix;
use num::{BigInt, One, Signed, ToPrimitive, Zero};

use super::{DrgError, IntersectionArray};
use crate::linalg::symmetric_eigenvalues;
use crate::scalar::{approx_eq, rational, Rational, Scalar};

/// `theta_0 > theta_1 > ... > theta_D` with multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<Scalar>,
    pub multiplicities: Vec<u64>,
    /// True when every eigenvalue is an exact integer.
    pub exact: bool,
}

impl Spectrum {
    pub fn theta(&self, i: usize) -> &Scalar {
        &self.eigenvalues[i]
    }

    pub fn theta_f64(&self) -> Vec<f64> {
        self.eigenvalues.iter().map(Scalar::to_f64).collect()
    }

    pub fn diameter(&self) -> usize {
        self.eigenvalues.len() - 1
    }
}

/// Characteristic polynomial of the tridiagonal intersection matrix,
/// coefficients low to high, via the three-term determinant recurrence.
pub(crate) fn characteristic_polynomial(arr: &IntersectionArray) -> Vec<BigInt> {
    let d = arr.diameter();
    // p_{-1} = 1, p_0 = x - a_0
    let mut prev: Vec<BigInt> = vec![BigInt::one()];
    let mut cur: Vec<BigInt> = vec![BigInt::from(-arr.a(0)), BigInt::one()];
    for i in 1..=d {
        let a = BigInt::from(arr.a(i));
        let bc = BigInt::from(arr.b(i - 1)) * BigInt::from(arr.c(i));
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (j, coef) in cur.iter().enumerate() {
            next[j + 1] += coef;
            next[j] -= &a * coef;
        }
        for (j, coef) in prev.iter().enumerate() {
            next[j] -= &bc * coef;
        }
        prev = cur;
        cur = next;
    }
    cur
}

fn eval(poly: &[BigInt], x: &BigInt) -> BigInt {
    poly.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Synthetic division by `(x - root)`.
fn deflate(poly: &[BigInt], root: &BigInt) -> Vec<BigInt> {
    let deg = poly.len() - 1;
    let mut out = vec![BigInt::zero(); deg];
    let mut carry = BigInt::zero();
    for j in (1..=deg).rev() {
        carry = &poly[j] + &carry * root;
        out[j - 1] = carry.clone();
    }
    out
}

/// Integer roots of the characteristic polynomial, when it splits over the
/// integers; every eigenvalue lies in `[-k, k]`.
pub(crate) fn integer_roots(arr: &IntersectionArray) -> Option<Vec<i64>> {
    let k = arr.valency();
    let mut poly = characteristic_polynomial(arr);
    let mut roots = Vec::with_capacity(arr.diameter() + 1);
    for x in (-k..=k).rev() {
        if poly.len() == 1 {
            break;
        }
        let bx = BigInt::from(x);
        if eval(&poly, &bx).is_zero() {
            poly = deflate(&poly, &bx);
            roots.push(x);
        }
    }
    (roots.len() == arr.diameter() + 1).then_some(roots)
}

/// Eigenvalues of the symmetrised intersection matrix, descending.
pub(crate) fn float_eigenvalues(arr: &IntersectionArray) -> Vec<f64> {
    let d = arr.diameter();
    let m = DMatrix::from_fn(d + 1, d + 1, |i, j| {
        if i == j {
            arr.a(i) as f64
        } else if j == i + 1 {
            ((arr.b(i) * arr.c(j)) as f64).sqrt()
        } else if i == j + 1 {
            ((arr.b(j) * arr.c(i)) as f64).sqrt()
        } else {
            0.0
        }
    });
    symmetric_eigenvalues(m)
}

/// Standard sequence `u_0 = 1`, `u_1 = theta/k`,
/// `c_i u_{i-1} + a_i u_i + b_i u_{i+1} = theta u_i`.
pub(crate) fn cosines_exact(arr: &IntersectionArray, theta: &Rational) -> Vec<Rational> {
    let d = arr.diameter();
    let mut u = vec![Rational::one(), theta / rational(arr.valency())];
    for i in 1..d {
        let next = ((theta - rational(arr.a(i))) * &u[i] - rational(arr.c(i)) * &u[i - 1])
            / rational(arr.b(i));
        u.push(next);
    }
    u.truncate(d + 1);
    u
}

pub(crate) fn cosines_f64(arr: &IntersectionArray, theta: f64) -> Vec<f64> {
    let d = arr.diameter();
    let mut u = vec![1.0, theta / arr.valency() as f64];
    for i in 1..d {
        let next =
            ((theta - arr.a(i) as f64) * u[i] - arr.c(i) as f64 * u[i - 1]) / arr.b(i) as f64;
        u.push(next);
    }
    u.truncate(d + 1);
    u
}

/// Spectrum of a distance-regular graph with array `arr` on `vertex_count`
/// vertices. Multiplicities come from `m = |X| / sum_j k_j u_j(theta)^2`.
pub fn spectrum_from_array(
    arr: &IntersectionArray,
    vertex_count: u64,
) -> Result<Spectrum, DrgError> {
    let implied = arr.vertex_count();
    if implied != Some(vertex_count) {
        return Err(DrgError::InconsistentVertexCount {
            given: vertex_count,
            implied,
        });
    }
    let sizes = arr.sphere_sizes();
    let n = rational(vertex_count as i64);
    if let Some(roots) = integer_roots(arr) {
        let mut multiplicities = Vec::with_capacity(roots.len());
        for &theta in &roots {
            let u = cosines_exact(arr, &rational(theta));
            let norm = u
                .iter()
                .zip(&sizes)
                .fold(Rational::zero(), |acc, (ui, ki)| acc + ki * ui * ui);
            let mult = &n / norm;
            if !mult.is_integer() || mult.is_negative() {
                return Err(DrgError::NonIntegralMultiplicity {
                    eigenvalue: theta.to_string(),
                    value: mult.to_f64().unwrap_or(f64::NAN),
                });
            }
            multiplicities.push(mult.to_integer().to_u64().expect("fits"));
        }
        let spectrum = Spectrum {
            eigenvalues: roots.iter().map(|&t| Scalar::from(t)).collect(),
            multiplicities,
            exact: true,
        };
        validate_traces(&spectrum, vertex_count, arr.valency())?;
        return Ok(spectrum);
    }
    let thetas = float_eigenvalues(arr);
    let sizes_f: Vec<f64> = sizes
        .iter()
        .map(|k| k.to_f64().unwrap_or(f64::NAN))
        .collect();
    let mut multiplicities = Vec::with_capacity(thetas.len());
    for &theta in &thetas {
        let u = cosines_f64(arr, theta);
        let norm: f64 = u.iter().zip(&sizes_f).map(|(ui, ki)| ki * ui * ui).sum();
        let mult = vertex_count as f64 / norm;
        let rounded = mult.round();
        if (mult - rounded).abs() > 1e-6 || rounded < 0.0 {
            return Err(DrgError::NonIntegralMultiplicity {
                eigenvalue: format!("{theta:.10}"),
                value: mult,
            });
        }
        multiplicities.push(rounded as u64);
    }
    let spectrum = Spectrum {
        eigenvalues: thetas.into_iter().map(Scalar::Real).collect(),
        multiplicities,
        exact: false,
    };
    validate_traces(&spectrum, vertex_count, arr.valency())?;
    Ok(spectrum)
}

/// `sum m_i = |X|`, `sum m_i theta_i = 0`, `sum m_i theta_i^2 = |X| k`.
fn validate_traces(spec: &Spectrum, vertex_count: u64, k: i64) -> Result<(), DrgError> {
    let total: u64 = spec.multiplicities.iter().sum();
    if total != vertex_count || spec.multiplicities[0] != 1 {
        return Err(DrgError::Numerical(format!(
            "multiplicities sum to {total} (m_0 = {}), expected {vertex_count}",
            spec.multiplicities[0]
        )));
    }
    let ok = if spec.exact {
        let (t1, t2) = spec.eigenvalues.iter().zip(&spec.multiplicities).fold(
            (Rational::zero(), Rational::zero()),
            |(s1, s2), (th, &m)| {
                let th = th.as_exact().expect("exact spectrum");
                let m = rational(m as i64);
                (s1 + &m * th, s2 + m * th * th)
            },
        );
        t1.is_zero() && t2 == rational(vertex_count as i64 * k)
    } else {
        let t1: f64 = spec
            .eigenvalues
            .iter()
            .zip(&spec.multiplicities)
            .map(|(t, &m)| m as f64 * t.to_f64())
            .sum();
        let t2: f64 = spec
            .eigenvalues
            .iter()
            .zip(&spec.multiplicities)
            .map(|(t, &m)| m as f64 * t.to_f64().powi(2))
            .sum();
        let nk = vertex_count as f64 * k as f64;
        t1.abs() <= 1e-6 * nk && approx_eq(t2, nk, 1e-6)
    };
    if ok {
        Ok(())
    } else {
        Err(DrgError::Numerical("trace identities fail".into()))
    }
}
