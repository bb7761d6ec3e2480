//! The tightness equality and predicted local eigenvalues.

use num::{One, Zero};

use super::{DrgError, IntersectionArray, Spectrum};
use crate::graph::{local_graph, Graph, InducedSubgraph};
use crate::par;
use crate::scalar::{approx_eq, rational, Rational, Scalar};
use crate::srg::{srg_params_from_graph, NotSrg, SrgEigenvalues, SrgParams};

/// Relative tolerance for declaring the two sides equal when the spectrum
/// is not exact.
pub const TIGHT_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq)]
pub struct TightReport {
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub is_bipartite: bool,
    pub is_tight: bool,
    /// `b = b_1 / (1 + theta_1)`
    pub b_param: Scalar,
    pub local_r: Scalar,
    pub local_s: Scalar,
}

/// Evaluates `(theta_1 + k/(a_1+1)) (theta_D + k/(a_1+1))` against
/// `-k a_1 b_1 / (a_1+1)^2` and derives `b`, `r`, `s`.
pub fn tightness_test(
    arr: &IntersectionArray,
    spec: &Spectrum,
    bipartite: bool,
) -> Result<TightReport, DrgError> {
    let d = arr.diameter();
    if d < 3 {
        return Err(DrgError::DiameterTooSmall(d));
    }
    if spec.diameter() != d {
        return Err(DrgError::InvalidInput(format!(
            "spectrum has {} eigenvalues, array has diameter {d}",
            spec.eigenvalues.len()
        )));
    }
    let (k, a1, b1) = (arr.valency(), arr.a(1), arr.b(1));
    if let (Some(t1), Some(td)) = (spec.theta(1).as_exact(), spec.theta(d).as_exact()) {
        let shift = rational(k) / rational(a1 + 1);
        let lhs = (t1 + &shift) * (td + &shift);
        let rhs = rational(-k * a1 * b1) / rational((a1 + 1) * (a1 + 1));
        let one = Rational::one();
        let (d1, dd) = (&one + t1, &one + td);
        if d1.is_zero() {
            return Err(DrgError::DivisionGuard("1 + theta_1 = 0".into()));
        }
        if dd.is_zero() {
            return Err(DrgError::DivisionGuard("1 + theta_D = 0".into()));
        }
        let b_param = rational(b1) / d1;
        let local_r = -&one - rational(b1) / dd;
        let local_s = -&one - &b_param;
        let is_tight = !bipartite && lhs == rhs;
        return Ok(TightReport {
            lhs: Scalar::Exact(lhs),
            rhs: Scalar::Exact(rhs),
            is_bipartite: bipartite,
            is_tight,
            b_param: Scalar::Exact(b_param),
            local_r: Scalar::Exact(local_r),
            local_s: Scalar::Exact(local_s),
        });
    }
    let (t1, td) = (spec.theta(1).to_f64(), spec.theta(d).to_f64());
    let (kf, a1f, b1f) = (k as f64, a1 as f64, b1 as f64);
    let shift = kf / (a1f + 1.0);
    let lhs = (t1 + shift) * (td + shift);
    let rhs = -kf * a1f * b1f / ((a1f + 1.0) * (a1f + 1.0));
    if (1.0 + t1).abs() < 1e-12 {
        return Err(DrgError::DivisionGuard("1 + theta_1 = 0".into()));
    }
    if (1.0 + td).abs() < 1e-12 {
        return Err(DrgError::DivisionGuard("1 + theta_D = 0".into()));
    }
    let b_param = b1f / (1.0 + t1);
    Ok(TightReport {
        lhs: Scalar::Real(lhs),
        rhs: Scalar::Real(rhs),
        is_bipartite: bipartite,
        is_tight: !bipartite && approx_eq(lhs, rhs, TIGHT_TOLERANCE),
        b_param: Scalar::Real(b_param),
        local_r: Scalar::Real(-1.0 - b1f / (1.0 + td)),
        local_s: Scalar::Real(-1.0 - b_param),
    })
}

#[derive(Clone, Debug)]
pub struct LocalGraphReport {
    pub vertex: usize,
    pub local: InducedSubgraph,
    pub srg: Result<SrgParams, NotSrg>,
    /// `Some` when a prediction was supplied: whether the local eigenvalues
    /// equal `(local_r, local_s)`.
    pub matches: Option<bool>,
}

fn eigen_match(params: &SrgParams, tight: &TightReport) -> bool {
    match params.eigenvalues {
        SrgEigenvalues::Integral { r, s } => {
            match (tight.local_r.as_exact(), tight.local_s.as_exact()) {
                (Some(pr), Some(ps)) => *pr == rational(r) && *ps == rational(s),
                _ => {
                    approx_eq(r as f64, tight.local_r.to_f64(), 1e-9)
                        && approx_eq(s as f64, tight.local_s.to_f64(), 1e-9)
                }
            }
        }
        SrgEigenvalues::Irrational { r, s } => {
            !tight.local_r.is_exact()
                && approx_eq(r, tight.local_r.to_f64(), 1e-9)
                && approx_eq(s, tight.local_s.to_f64(), 1e-9)
        }
    }
}

/// Local graph at `x`, its SRG parameters and, given a tightness report,
/// whether its eigenvalues are the predicted ones.
pub fn local_graph_report(g: &Graph, x: usize, tight: Option<&TightReport>) -> LocalGraphReport {
    let local = local_graph(g, x);
    let srg = srg_params_from_graph(&local.graph);
    let matches = tight.map(|t| srg.as_ref().map(|p| eigen_match(p, t)).unwrap_or(false));
    LocalGraphReport {
        vertex: x,
        local,
        srg,
        matches,
    }
}

/// [`local_graph_report`] at every vertex, in vertex order.
pub fn local_graph_survey(g: &Graph, tight: Option<&TightReport>) -> Vec<LocalGraphReport> {
    par::map_range(g.order(), |x| local_graph_report(g, x, tight))
}
