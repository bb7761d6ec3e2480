use std::fmt;
use std::str::FromStr;

use num::{BigInt, One, Zero};
use serde::Serialize;

use super::DrgError;
use crate::scalar::Rational;

/// `{b_0, ..., b_{D-1}; c_1, ..., c_D}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IntersectionArray {
    b: Vec<i64>,
    c: Vec<i64>,
}

impl IntersectionArray {
    /// Validates `c_1 = 1`, positive `b_i` (`i < D`) and `c_i`, and
    /// `a_i = k - b_i - c_i >= 0`.
    pub fn new(b: Vec<i64>, c: Vec<i64>) -> Result<Self, DrgError> {
        if b.is_empty() || b.len() != c.len() {
            return Err(DrgError::InvalidArray(format!(
                "need D >= 1 entries on each side, got {} and {}",
                b.len(),
                c.len()
            )));
        }
        let arr = Self { b, c };
        let mut offenders = Vec::new();
        if arr.c[0] != 1 {
            offenders.push(format!("c_1 = {} (must be 1)", arr.c[0]));
        }
        for (i, &bi) in arr.b.iter().enumerate() {
            if bi <= 0 {
                offenders.push(format!("b_{i} = {bi}"));
            }
        }
        for (i, &ci) in arr.c.iter().enumerate() {
            if ci <= 0 {
                offenders.push(format!("c_{} = {ci}", i + 1));
            }
        }
        for i in 0..=arr.diameter() {
            if arr.a(i) < 0 {
                offenders.push(format!("a_{i} = {}", arr.a(i)));
            }
        }
        if offenders.is_empty() {
            Ok(arr)
        } else {
            Err(DrgError::InvalidArray(offenders.join(", ")))
        }
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn valency(&self) -> i64 {
        self.b[0]
    }

    /// `b_i` for `0 <= i <= D` (with `b_D = 0`).
    pub fn b(&self, i: usize) -> i64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i` for `0 <= i <= D` (with `c_0 = 0`).
    pub fn c(&self, i: usize) -> i64 {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    /// `a_i = k - b_i - c_i`.
    pub fn a(&self, i: usize) -> i64 {
        self.valency() - self.b(i) - self.c(i)
    }

    pub fn b_seq(&self) -> &[i64] {
        &self.b
    }

    pub fn c_seq(&self) -> &[i64] {
        &self.c
    }

    /// A distance-regular graph is bipartite iff every `a_i` vanishes.
    pub fn is_bipartite(&self) -> bool {
        (0..=self.diameter()).all(|i| self.a(i) == 0)
    }

    /// `k_i = k_{i-1} b_{i-1} / c_i`, as rationals.
    pub fn sphere_sizes(&self) -> Vec<Rational> {
        let mut out = vec![Rational::one()];
        for i in 1..=self.diameter() {
            let prev = out[i - 1].clone();
            out.push(prev * Rational::new(BigInt::from(self.b(i - 1)), BigInt::from(self.c(i))));
        }
        out
    }

    /// Number of vertices `sum k_i`, when every `k_i` is integral.
    pub fn vertex_count(&self) -> Option<u64> {
        let sizes = self.sphere_sizes();
        if sizes.iter().any(|k| !k.is_integer()) {
            return None;
        }
        let total: BigInt = sizes
            .iter()
            .map(|k| k.to_integer())
            .fold(BigInt::zero(), |a, b| a + b);
        u64::try_from(total).ok()
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

impl FromStr for IntersectionArray {
    type Err = DrgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| {
                DrgError::Parse(format!("`{s}` is not of the form {{b0,...;c1,...}}"))
            })?;
        let (bs, cs) = inner
            .split_once(';')
            .ok_or_else(|| DrgError::Parse(format!("`{s}` has no `;` separator")))?;
        let nums = |part: &str| -> Result<Vec<i64>, DrgError> {
            part.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|e| DrgError::Parse(format!("`{}`: {e}", t.trim())))
                })
                .collect()
        };
        Self::new(nums(bs)?, nums(cs)?)
    }
}
