//! Parameter-level screening of tight distance-regular graphs: classical
//! parameters, Taylor graphs, and the claw/Neumaier/valency bound chain.
//!
//! Everything here is exact integer or rational arithmetic.

mod batch;

pub use batch::{parse_batch_line, screen_batch, screen_line, BatchEntry, BatchLine, ParseError};

use std::fmt;

use num::rational::Ratio;
use num::{BigInt, Integer, One, Signed, ToPrimitive};
use serde::Serialize;

use crate::drg::{spectrum_from_array, tightness_test, DrgError, IntersectionArray, Spectrum};
use crate::srg::SrgParams;

pub type Q = Ratio<i128>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Status {
    Excluded,
    Consistent,
    Inapplicable,
    /// Parameters are not realisable at all (non-integral data).
    Infeasible,
    MustBeOa,
    MustBeSteiner,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Excluded => "EXCLUDED",
            Status::Consistent => "CONSISTENT",
            Status::Inapplicable => "INAPPLICABLE",
            Status::Infeasible => "INFEASIBLE",
            Status::MustBeOa => "MUST-BE-OA",
            Status::MustBeSteiner => "MUST-BE-STEINER",
        })
    }
}

/// Rule identifiers used in verdicts.
pub mod rules {
    pub const CLASSICAL_OA: &str = "Thm6.2(i)";
    pub const CLASSICAL_STEINER: &str = "Thm6.2(ii)";
    pub const LOCAL_OA: &str = "Thm1.2(i)";
    pub const LOCAL_STEINER: &str = "Thm1.2(ii)";
    pub const VALENCY: &str = "Thm1.3";
    pub const TAYLOR: &str = "Prop5.6";
    pub const CLAW: &str = "Lem7.2";
    pub const NEUMAIER: &str = "Lem7.1";
}

/// Short statement of what a rule asserts, for `--cite`.
pub fn rule_statement(rule: &str) -> Option<&'static str> {
    Some(match rule {
        rules::CLASSICAL_OA => {
            "tight with classical parameters, D >= 3, b >= 2: local graphs cannot carry OA block-graph parameters (alpha = b forces c2 = (b+1)^2)"
        }
        rules::CLASSICAL_STEINER => {
            "tight with classical parameters, D >= 3, b >= 2: local graphs cannot carry Steiner block-graph parameters (alpha = b+1 forces c2 = (b+1)(b+2))"
        }
        rules::LOCAL_OA => "locally OA block graph, smallest local eigenvalue -m with m >= 3, gamma defined and k > m^2: then c2 != m^2",
        rules::LOCAL_STEINER => {
            "locally Steiner block graph, smallest local eigenvalue -m with m >= 3, gamma defined and k > m(m+1): then c2 != m(m+1)"
        }
        rules::VALENCY => "tight, b >= 2, local graph neither OA nor Steiner block graph: k <= phi(b); the diameter bound from k is an external result",
        rules::TAYLOR => "Taylor graph with local m = -s, n = r - s: OA parameters iff n = 2m-1 iff c2 = 2m(m-1); Steiner iff n = 2m iff c2 = 2(m+1)(m-1)",
        rules::CLAW => "primitive SRG, m = -s, n = r - s, f = m(m-1)(mu+1)/2 + m - 1: n > f forces an OA (mu = m(m-1)) or Steiner (mu = m^2) block graph, otherwise n <= f",
        rules::NEUMAIER => "primitive SRG with integral eigenvalues: mu <= m^3(2m-3)",
        _ => return None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub rule: Option<&'static str>,
    /// Named quantities in output order.
    pub computed: Vec<(String, String)>,
}

impl Verdict {
    pub fn new(status: Status) -> Self {
        Self {
            status,
            rule: None,
            computed: Vec::new(),
        }
    }

    pub fn with_rule(mut self, rule: &'static str) -> Self {
        self.rule = Some(rule);
        self
    }

    pub fn kv(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.computed.push((key.to_string(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.computed
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// `STATUS rule=... key=value ...`
    pub fn to_line(&self) -> String {
        let mut out = self.status.to_string();
        if let Some(rule) = self.rule {
            out.push_str(" rule=");
            out.push_str(rule);
        }
        for (k, v) in &self.computed {
            out.push_str(&format!(" {k}={v}"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        map.insert("status".into(), self.status.to_string().into());
        map.insert(
            "rule".into(),
            self.rule.map(Into::into).unwrap_or(serde_json::Value::Null),
        );
        for (k, v) in &self.computed {
            let value = v
                .parse::<i64>()
                .map(serde_json::Value::from)
                .unwrap_or_else(|_| serde_json::Value::from(v.clone()));
            map.insert(k.clone(), value);
        }
        serde_json::Value::Object(map)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `[i]_b = 1 + b + ... + b^{i-1}`.
pub fn gaussian_bracket(i: u32, b: i128) -> i128 {
    (0..i).map(|j| b.pow(j)).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicalParams {
    pub d: u32,
    pub b: i128,
    pub alpha: Q,
    pub beta: Q,
}

impl ClassicalParams {
    pub fn new(d: u32, b: i128, alpha: Q, beta: Q) -> Self {
        Self { d, b, alpha, beta }
    }

    pub fn integral(d: u32, b: i128, alpha: i128, beta: i128) -> Self {
        Self::new(d, b, Q::from_integer(alpha), Q::from_integer(beta))
    }

    fn bracket(&self, i: u32) -> Q {
        Q::from_integer(gaussian_bracket(i, self.b))
    }
}

impl fmt::Display for ClassicalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.d, self.b, self.alpha, self.beta)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ScreenError {
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("inapplicable: {0}")]
    Inapplicable(String),
    #[error(transparent)]
    Drg(#[from] DrgError),
}

fn to_i64(q: &Q) -> Option<i64> {
    q.is_integer().then(|| q.to_integer().to_i64()).flatten()
}

/// `b_i = ([D] - [i])(beta - alpha [i])`, `c_i = [i](1 + alpha [i-1])`.
pub fn classical_to_array(p: &ClassicalParams) -> Result<IntersectionArray, ScreenError> {
    if p.d < 1 || p.b == 0 {
        return Err(ScreenError::Infeasible(format!(
            "{p}: need D >= 1 and b != 0"
        )));
    }
    let dd = p.bracket(p.d);
    let mut offenders = Vec::new();
    let mut bs = Vec::new();
    let mut cs = Vec::new();
    for i in 0..p.d {
        let bi = (dd - p.bracket(i)) * (p.beta - p.alpha * p.bracket(i));
        match to_i64(&bi) {
            Some(v) => bs.push(v),
            None => offenders.push(format!("b_{i} = {bi}")),
        }
    }
    for i in 1..=p.d {
        let ci = p.bracket(i) * (Q::one() + p.alpha * p.bracket(i - 1));
        match to_i64(&ci) {
            Some(v) => cs.push(v),
            None => offenders.push(format!("c_{i} = {ci}")),
        }
    }
    if !offenders.is_empty() {
        return Err(ScreenError::Infeasible(offenders.join(", ")));
    }
    IntersectionArray::new(bs, cs).map_err(|e| ScreenError::Infeasible(e.to_string()))
}

/// `beta = 1 + alpha [D-1]` with `b, alpha > 0`.
pub fn is_tight_classical(p: &ClassicalParams) -> bool {
    p.d >= 1
        && p.b > 0
        && p.alpha.is_positive()
        && p.beta == Q::one() + p.alpha * p.bracket(p.d - 1)
}

/// Local parameters `(k, a_1, lambda, mu)` of a tight graph with classical
/// parameters: `a_1 = alpha(b+1)[D-1]`, `lambda = (alpha-1)(b+1) + alpha b [D-2]`,
/// `mu = alpha(b+1)`, eigenvalues `r = alpha b [D-2]`, `s = -1-b`.
pub fn local_params_classical(p: &ClassicalParams) -> Result<SrgParams, ScreenError> {
    if p.d < 2 || !is_tight_classical(p) {
        return Err(ScreenError::Inapplicable(format!("{p} is not tight")));
    }
    let arr = classical_to_array(p)?;
    let b1 = Q::from_integer(p.b + 1);
    let a1 = p.alpha * b1 * p.bracket(p.d - 1);
    let lambda = (p.alpha - Q::one()) * b1 + p.alpha * Q::from_integer(p.b) * p.bracket(p.d - 2);
    let mu = p.alpha * b1;
    match (to_i64(&a1), to_i64(&lambda), to_i64(&mu)) {
        (Some(a1), Some(lambda), Some(mu)) => Ok(SrgParams::new(arr.valency(), a1, lambda, mu)),
        _ => Err(ScreenError::Infeasible(format!(
            "non-integral local parameters a1={a1} lambda={lambda} mu={mu}"
        ))),
    }
}

/// Local eigenvalue `r = alpha b [D-2]` of a tight classical graph.
pub fn local_r_classical(p: &ClassicalParams) -> Q {
    p.alpha * Q::from_integer(p.b) * p.bracket(p.d.saturating_sub(2))
}

/// The case analysis for tight graphs with classical parameters.
pub fn screen_tight_classical(p: &ClassicalParams) -> Verdict {
    let inapplicable = |why: &str| {
        Verdict::new(Status::Inapplicable)
            .kv("b", p.b)
            .kv("D", p.d)
            .kv("reason", why)
    };
    if p.d < 3 {
        return inapplicable("D<3");
    }
    if !is_tight_classical(p) {
        return inapplicable("not-tight");
    }
    if p.b < 2 {
        return Verdict::new(Status::Inapplicable)
            .kv("b", p.b)
            .kv("D", p.d)
            .kv("reason", "b<2");
    }
    let arr = match classical_to_array(p) {
        Ok(a) => a,
        Err(_) => return inapplicable("invalid-array"),
    };
    let local = match local_params_classical(p) {
        Ok(l) => l,
        Err(_) => return inapplicable("non-integral-local-parameters"),
    };
    let m = p.b + 1;
    let c2 = arr.c(2);
    let alpha = p.alpha;
    let (status, rule, excludes) = if alpha == Q::from_integer(p.b) {
        (Status::Excluded, Some(rules::CLASSICAL_OA), "locally-oa")
    } else if alpha == Q::from_integer(p.b + 1) {
        (
            Status::Excluded,
            Some(rules::CLASSICAL_STEINER),
            "locally-steiner",
        )
    } else {
        (Status::Consistent, None, "none")
    };
    let mut v = Verdict::new(status);
    if let Some(rule) = rule {
        v = v.with_rule(rule);
    }
    v = v
        .kv("c2", c2)
        .kv("m", m)
        .kv("b", p.b)
        .kv("alpha", p.alpha)
        .kv("beta", p.beta)
        .kv("D", p.d)
        .kv("k", arr.valency())
        .kv("mu", local.mu);
    if status == Status::Excluded {
        v.kv("excludes", excludes)
    } else {
        let (_, phi) = valency_bound(p.b as i64).expect("b >= 2");
        v.kv("phi", phi)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TaylorBranch {
    Oa,
    Steiner,
    Neither,
}

impl fmt::Display for TaylorBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TaylorBranch::Oa => "OA",
            TaylorBranch::Steiner => "STEINER",
            TaylorBranch::Neither => "NEITHER",
        })
    }
}

/// Taylor graph `{k, c_2, 1; 1, c_2, k}` and its local graph
/// `(k, a_1, lambda, mu)` with eigenvalues `r, s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TaylorParams {
    pub k: i64,
    pub c2: i64,
    pub a1: i64,
    pub lambda: i64,
    pub mu: i64,
    pub r: i64,
    pub s: i64,
    pub m: i64,
    pub n: i64,
    pub branch: TaylorBranch,
}

impl TaylorParams {
    /// `a_1 = k - c_2 - 1`, `2 lambda = 3a_1 - k - 1`, `2 mu = a_1`,
    /// `k = -(2r+1)(2s+1)`, `c_2 < k - 1`.
    pub fn relations_hold(&self) -> bool {
        self.a1 == self.k - self.c2 - 1
            && 2 * self.lambda == 3 * self.a1 - self.k - 1
            && 2 * self.mu == self.a1
            && self.k == -(2 * self.r + 1) * (2 * self.s + 1)
            && self.c2 < self.k - 1
    }
}

/// Local parameters `((2n-2m+1)(2m-1), 2m(n-m), (n-m)(m+1)-m, m(n-m))` and
/// the branch: `n = 2m-1` (OA, `c_2 = 2m(m-1)`), `n = 2m` (Steiner,
/// `c_2 = 2(m+1)(m-1)`), else neither.
pub fn taylor_trichotomy(m: i64, n: i64) -> (Verdict, Option<TaylorParams>) {
    if m < 2 || n <= m {
        return (
            Verdict::new(Status::Inapplicable)
                .kv("m", m)
                .kv("n", n)
                .kv("reason", "need-m>=2-and-n>m"),
            None,
        );
    }
    let k = (2 * n - 2 * m + 1) * (2 * m - 1);
    let a1 = 2 * m * (n - m);
    let lambda = (n - m) * (m + 1) - m;
    let mu = m * (n - m);
    let c2 = k - a1 - 1;
    let local = SrgParams::new(k, a1, lambda, mu);
    let infeasible = |why: &str| {
        Verdict::new(Status::Infeasible)
            .with_rule(rules::TAYLOR)
            .kv("m", m)
            .kv("n", n)
            .kv("k", k)
            .kv("reason", why)
    };
    let Some((r, s)) = local.integral_eigenvalues() else {
        return (infeasible("irrational-local-eigenvalues"), None);
    };
    if (3 * a1 - k - 1) % 2 != 0 || a1 % 2 != 0 {
        return (infeasible("odd-a1"), None);
    }
    let branch = if n == 2 * m - 1 {
        TaylorBranch::Oa
    } else if n == 2 * m {
        TaylorBranch::Steiner
    } else {
        TaylorBranch::Neither
    };
    let params = TaylorParams {
        k,
        c2,
        a1,
        lambda,
        mu,
        r,
        s,
        m: -s,
        n: r - s,
        branch,
    };
    if !params.relations_hold() || params.m != m || params.n != n {
        return (infeasible("local-relations-fail"), Some(params));
    }
    let v = Verdict::new(Status::Consistent)
        .with_rule(rules::TAYLOR)
        .kv("branch", branch)
        .kv("c2", c2)
        .kv("m", m)
        .kv("n", n)
        .kv("k", k)
        .kv("a1", a1)
        .kv("lambda", lambda)
        .kv("mu", mu)
        .kv("r", r)
        .kv("s", s);
    (v, Some(params))
}

/// `m^3 (2m - 3)`.
pub fn neumaier_mu_bound(m: i64) -> i64 {
    m.pow(3) * (2 * m - 3)
}

/// `n = m(m-1)(2m-1)`, forced when the Neumaier bound is attained.
pub fn neumaier_equality_n(m: i64) -> i64 {
    m * (m - 1) * (2 * m - 1)
}

/// `f(m, mu) = m(m-1)(mu+1)/2 + m - 1`.
pub fn claw_f(m: i64, mu: i64) -> i64 {
    m * (m - 1) / 2 * (mu + 1) + m - 1
}

/// Claw-bound trichotomy on SRG parameters, with the Neumaier bound as a
/// secondary check.
pub fn claw_bound_classify(params: &SrgParams) -> Verdict {
    let base = |status| {
        Verdict::new(status)
            .kv("v", params.v)
            .kv("k", params.k)
            .kv("lambda", params.lambda)
            .kv("mu", params.mu)
    };
    let Some((r, s)) = params.integral_eigenvalues() else {
        return base(Status::Inapplicable).kv("reason", "irrational-eigenvalues");
    };
    if !params.is_primitive() {
        return base(Status::Inapplicable).kv("reason", "imprimitive");
    }
    if !params.satisfies_eigen_relations() {
        return base(Status::Infeasible).kv("reason", "eigenvalue-relations-fail");
    }
    let (m, n, mu) = (-s, r - s, params.mu);
    let f = claw_f(m, mu);
    let neumaier = neumaier_mu_bound(m);
    let (status, rule) = if n > f {
        if mu == m * (m - 1) {
            (Status::MustBeOa, Some(rules::CLAW))
        } else if mu == m * m {
            (Status::MustBeSteiner, Some(rules::CLAW))
        } else {
            (Status::Excluded, Some(rules::CLAW))
        }
    } else if mu > neumaier {
        (Status::Excluded, Some(rules::NEUMAIER))
    } else {
        (Status::Consistent, None)
    };
    let mut v = Verdict::new(status);
    if let Some(rule) = rule {
        v = v.with_rule(rule);
    }
    v.kv("f", f)
        .kv("n", n)
        .kv("mu", mu)
        .kv("m", m)
        .kv("v", params.v)
        .kv("k", params.k)
        .kv("lambda", params.lambda)
        .kv("neumaier", neumaier)
}

/// `g(m) = (m^3(2m-3)+1)(m^2(m-1)+2)/2 - m - 1`.
pub fn g_of_m(m: i64) -> BigInt {
    let m = BigInt::from(m);
    let one = BigInt::one();
    let x = (m.pow(3) * (BigInt::from(2) * &m - 3) + &one) * (m.pow(2) * (&m - &one) + 2);
    x / 2 - &m - one
}

/// `phi(b) = [((1+b)^3(2b-1)+1)(b(1+b)^2+2) - 2b - 4]^2 / 4 + 1`.
pub fn phi_of_b(b: i64) -> BigInt {
    let b = BigInt::from(b);
    let one = BigInt::one();
    let b1 = &b + &one;
    let inner: BigInt = (b1.pow(3) * (BigInt::from(2) * &b - 1) + &one) * (&b * b1.pow(2) + 2)
        - BigInt::from(2) * &b
        - 4;
    debug_assert!(inner.is_even());
    inner.pow(2) / 4 + one
}

/// `(g(b+1), phi(b))` for `b >= 2`.
pub fn valency_bound(b: i64) -> Result<(BigInt, BigInt), ScreenError> {
    if b < 2 {
        return Err(ScreenError::Inapplicable(format!("b = {b} < 2")));
    }
    Ok((g_of_m(b + 1), phi_of_b(b)))
}

/// Screens a tight array against the local OA/Steiner exclusions and the
/// valency bound. Family membership is decided on parameters: local
/// `mu = m(m-1)` (OA) or `mu = m^2` (Steiner), with `m = 1 + b`.
pub fn screen_tight_general(arr: &IntersectionArray, spec: &Spectrum) -> Verdict {
    let inapplicable = |why: &str| Verdict::new(Status::Inapplicable).kv("reason", why);
    let tight = match tightness_test(arr, spec, arr.is_bipartite()) {
        Ok(t) => t,
        Err(DrgError::DiameterTooSmall(_)) => return inapplicable("D<3"),
        Err(_) => return inapplicable("tightness-undefined"),
    };
    if !tight.is_tight {
        return inapplicable("not-tight");
    }
    let Some(b) = tight.b_param.as_integer() else {
        return inapplicable("b-non-integral");
    };
    let Some(r) = tight.local_r.as_integer() else {
        return Verdict::new(Status::Inapplicable)
            .kv("b", b)
            .kv("reason", "r-non-integral");
    };
    screen_tight_local(&TightLocalData {
        k: arr.valency(),
        a1: arr.a(1),
        c2: arr.c(2),
        b,
        r,
    })
}

/// The data of a tight graph the exclusions depend on: valency, `a_1`,
/// `c_2`, `b = b_1/(1+theta_1)` and the local eigenvalue `r` (`s = -1-b`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TightLocalData {
    pub k: i64,
    pub a1: i64,
    pub c2: i64,
    pub b: i64,
    pub r: i64,
}

/// [`screen_tight_general`] on already-derived data; lets hypothetical
/// parameter sets be screened without a spectrum.
pub fn screen_tight_local(data: &TightLocalData) -> Verdict {
    let TightLocalData { k, a1, c2, b, r } = *data;
    if b < 2 {
        return Verdict::new(Status::Inapplicable)
            .kv("b", b)
            .kv("reason", "b<2");
    }
    let m = b + 1;
    let s = -m;
    let mu = a1 + r * s;
    let lambda = a1 + r + s + r * s;
    let local = SrgParams::new(k, a1, lambda, mu);
    let n = r - s;
    let f = claw_f(m, mu);
    let phi = phi_of_b(b);
    let oa = mu == m * (m - 1);
    let steiner = mu == m * m;
    let (status, rule, excludes) = if oa && k > m * m && c2 == m * m {
        (Status::Excluded, Some(rules::LOCAL_OA), "locally-oa")
    } else if steiner && k > m * (m + 1) && c2 == m * (m + 1) {
        (
            Status::Excluded,
            Some(rules::LOCAL_STEINER),
            "locally-steiner",
        )
    } else if !oa && !steiner && BigInt::from(k) > phi {
        (Status::Excluded, Some(rules::VALENCY), "parameters")
    } else {
        (Status::Consistent, None, "none")
    };
    let family = if oa {
        "oa"
    } else if steiner {
        "steiner"
    } else {
        "neither"
    };
    let mut v = Verdict::new(status);
    if let Some(rule) = rule {
        v = v.with_rule(rule);
    }
    v = v
        .kv("c2", c2)
        .kv("m", m)
        .kv("b", b)
        .kv("k", k)
        .kv("local", local)
        .kv("family", family)
        .kv("n", n)
        .kv("f", f)
        .kv("claw_forced", yes_no(n > f && (oa || steiner)))
        .kv("phi", &phi);
    if status == Status::Excluded {
        v = v.kv("excludes", excludes);
    }
    if rule == Some(rules::VALENCY) || family == "neither" {
        v = v.kv("diameter", "cited-external");
    }
    v
}

/// Builds the spectrum and screens; for `array` batch lines.
pub fn screen_array(arr: &IntersectionArray, vertex_count: Option<u64>) -> Verdict {
    let implied = arr.vertex_count();
    let n = match (vertex_count, implied) {
        (Some(n), Some(i)) if n == i => n,
        (None, Some(i)) => i,
        _ => {
            let mut v = Verdict::new(Status::Infeasible)
                .kv("array", arr)
                .kv("reason", "vertex-count");
            if let Some(given) = vertex_count {
                v = v.kv("n", given);
            }
            return v.kv("implied", implied.map_or("non-integral".to_string(), |i| i.to_string()));
        }
    };
    match spectrum_from_array(arr, n) {
        Ok(spec) => screen_tight_general(arr, &spec),
        Err(_) => Verdict::new(Status::Infeasible)
            .kv("array", arr)
            .kv("reason", "multiplicities"),
    }
}
