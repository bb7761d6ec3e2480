//! Plain-text and JSON reports, and the end-to-end graph analysis that
//! feeds them.

use std::fmt::Write as _;

use serde_json::{Map, Value};

use crate::drg::{
    is_distance_regular, krein_and_qpoly, local_graph_survey, spectrum_from_array, tightness_test,
    IntersectionArray, Spectrum, TightReport,
};
use crate::graph::{all_pairs_distances, Graph};
use crate::linalg::{adjacency_eigenvalues, cluster_eigenvalues};
use crate::mu::{
    gamma_number, mu_census, mu_gamma_check, verify_oa_mu_lemma, verify_steiner_mu_lemma,
    GammaReport, MuGraphCensus,
};
use crate::screen::{rule_statement, Verdict};
use crate::srg::SrgEigenvalues;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Section {
    pub title: String,
    pub entries: Vec<(String, String)>,
    pub citation: Option<String>,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            ..Self::default()
        }
    }

    pub fn entry(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.entries.push((key.into(), value.to_string()));
        self
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub sections: Vec<Section>,
}

fn json_scalar(v: &str) -> Value {
    v.parse::<i64>()
        .map(Value::from)
        .unwrap_or_else(|_| Value::from(v))
}

impl Report {
    pub fn section(&self, title: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.title == title)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serialisable");
                s.push('\n');
                s
            }
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, s) in self.sections.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "[{}]", s.title);
            let width = s.entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in &s.entries {
                let _ = writeln!(out, "  {k:<width$}  {v}");
            }
            if let Some(c) = &s.citation {
                let _ = writeln!(out, "  cite: {c}");
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let sections: Vec<Value> = self
            .sections
            .iter()
            .map(|s| {
                let entries: Map<String, Value> = s
                    .entries
                    .iter()
                    .map(|(k, v)| (k.clone(), json_scalar(v)))
                    .collect();
                let mut obj = Map::new();
                obj.insert("title".into(), s.title.clone().into());
                obj.insert("entries".into(), Value::Object(entries));
                if let Some(c) = &s.citation {
                    obj.insert("citation".into(), c.clone().into());
                }
                Value::Object(obj)
            })
            .collect();
        serde_json::json!({ "sections": sections })
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn format_spectrum(spec: &Spectrum) -> String {
    spec.eigenvalues
        .iter()
        .zip(&spec.multiplicities)
        .map(|(t, m)| format!("{t}^{m}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Compares the array spectrum with a direct eigensolve of the adjacency
/// matrix (relative tolerance 1e-8).
pub fn spectrum_matches_graph(g: &Graph, spec: &Spectrum) -> bool {
    let direct = cluster_eigenvalues(&adjacency_eigenvalues(g), 1e-6);
    direct.len() == spec.eigenvalues.len()
        && direct
            .iter()
            .zip(spec.eigenvalues.iter().zip(&spec.multiplicities))
            .all(|(&(t, m), (e, &em))| {
                let e = e.to_f64();
                m as u64 == em && (t - e).abs() <= 1e-8 * e.abs().max(1.0)
            })
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalyzeOptions {
    /// Local graph at every vertex rather than vertex 0.
    pub all_vertices: bool,
}

pub fn census_section(census: &MuGraphCensus) -> Section {
    let mut s = Section::new("mu-census")
        .entry("pairs", census.pairs)
        .entry("uniform", yes_no(census.uniform));
    for (shape, count) in &census.counts {
        let pct = if census.pairs == 0 {
            0.0
        } else {
            100.0 * *count as f64 / census.pairs as f64
        };
        s.push(shape.to_string(), format!("{count} ({pct:.1}%)"));
    }
    s
}

pub fn gamma_section(gamma: &GammaReport) -> Section {
    let mut s = Section::new("gamma").entry("exists", yes_no(gamma.exists));
    if let Some(v) = gamma.value {
        s.push("gamma", v);
    }
    s.push("triples", gamma.triple_count);
    if !gamma.exists && !gamma.histogram.is_empty() {
        let hist: Vec<String> = gamma
            .histogram
            .iter()
            .map(|(k, v)| format!("{k}:{v}"))
            .collect();
        s.push("histogram", hist.join(" "));
    }
    s
}

fn tightness_section(t: &TightReport) -> Section {
    Section::new("tightness")
        .entry("lhs", &t.lhs)
        .entry("rhs", &t.rhs)
        .entry("bipartite", yes_no(t.is_bipartite))
        .entry("tight", yes_no(t.is_tight))
        .entry("b", &t.b_param)
        .entry("local_r", &t.local_r)
        .entry("local_s", &t.local_s)
}

fn srg_eigen_text(e: &SrgEigenvalues) -> String {
    match *e {
        SrgEigenvalues::Integral { r, s } => format!("{r},{s}"),
        SrgEigenvalues::Irrational { r, s } => format!("{r:.10},{s:.10}"),
    }
}

/// Runs the whole pipeline on one graph.
pub fn analyze_graph(g: &Graph, opts: AnalyzeOptions) -> Report {
    let mut report = Report::default();
    let dist = all_pairs_distances(g);
    let connected = dist.is_connected();
    let mut graph = Section::new("graph")
        .entry("vertices", g.order())
        .entry("edges", g.edge_count())
        .entry("connected", yes_no(connected));
    if connected {
        graph.push("diameter", dist.diameter());
    }
    graph.push("bipartite", yes_no(g.is_bipartite()));
    graph.push(
        "regular",
        g.regular_degree()
            .map(|k| k.to_string())
            .unwrap_or_else(|| "no".into()),
    );
    report.sections.push(graph);

    let arr: Option<IntersectionArray> = match is_distance_regular(g) {
        Ok(arr) => {
            report.sections.push(
                Section::new("distance-regularity")
                    .entry("distance_regular", "yes")
                    .entry("array", &arr)
                    .entry("D", arr.diameter()),
            );
            Some(arr)
        }
        Err(e) => {
            report.sections.push(
                Section::new("distance-regularity")
                    .entry("distance_regular", "no")
                    .entry("witness", e),
            );
            None
        }
    };

    let mut tight = None;
    if let Some(arr) = &arr {
        match spectrum_from_array(arr, g.order() as u64) {
            Ok(spec) => {
                let mut s = Section::new("spectrum")
                    .entry("eigenvalues", format_spectrum(&spec))
                    .entry("exact", yes_no(spec.exact))
                    .entry(
                        "matches_adjacency",
                        yes_no(spectrum_matches_graph(g, &spec)),
                    );
                if let Ok(k) = krein_and_qpoly(arr, &spec) {
                    s.push(
                        "krein_nonnegative",
                        yes_no(k.matrices.krein_conditions_hold()),
                    );
                    s.push("q_polynomial", yes_no(k.is_q_polynomial()));
                }
                report.sections.push(s);
                if arr.diameter() < 3 {
                    report.sections.push(
                        Section::new("tightness")
                            .entry("skipped", format!("D = {} < 3", arr.diameter())),
                    );
                } else if let Ok(t) = tightness_test(arr, &spec, g.is_bipartite()) {
                    report.sections.push(tightness_section(&t));
                    tight = Some(t);
                }
            }
            Err(e) => report
                .sections
                .push(Section::new("spectrum").entry("error", e)),
        }
    }

    let prediction = tight.as_ref().filter(|t| t.is_tight);
    let mut local = Section::new("local graph");
    if opts.all_vertices {
        let survey = local_graph_survey(g, prediction);
        let mut shapes: std::collections::BTreeMap<String, usize> =
            std::collections::BTreeMap::new();
        for r in &survey {
            let key = match &r.srg {
                Ok(p) => format!("{p} eigenvalues {},{}", p.k, srg_eigen_text(&p.eigenvalues)),
                Err(_) => "not strongly regular".into(),
            };
            *shapes.entry(key).or_default() += 1;
        }
        local.push("vertices", survey.len());
        for (k, v) in shapes {
            local.push(k, v);
        }
        if prediction.is_some() {
            let ok = survey.iter().filter(|r| r.matches == Some(true)).count();
            local.push("matches_prediction", format!("{ok}/{}", survey.len()));
        }
    } else if g.order() > 0 {
        let r = crate::drg::local_graph_report(g, 0, prediction);
        local.push("vertex", 0);
        match &r.srg {
            Ok(p) => {
                local.push("srg", p);
                local.push(
                    "eigenvalues",
                    format!("{},{}", p.k, srg_eigen_text(&p.eigenvalues)),
                );
            }
            Err(e) => local.push("srg", format!("no ({e})")),
        }
        if let Some(m) = r.matches {
            local.push("matches_prediction", yes_no(m));
        }
    }
    report.sections.push(local);

    let census = mu_census(g);
    report.sections.push(census_section(&census));
    let gamma = gamma_number(g);
    report.sections.push(gamma_section(&gamma));

    if let Some(check) = mu_gamma_check(&census, &gamma) {
        let mut s = Section::new("mu lemmas")
            .entry("t", check.t)
            .entry("n", check.n)
            .entry("gamma_equals_t", yes_no(check.gamma_equals_t))
            .entry("t_at_most_4", yes_no(check.t_at_most_four));
        if let Some(m) = local_m(&report) {
            s.push(format!("oa_lemma(m={m})"), verify_oa_mu_lemma(g, m));
            s.push(
                format!("steiner_lemma(m={m})"),
                verify_steiner_mu_lemma(g, m),
            );
        }
        report.sections.push(s);
    }
    report
}

/// `m = -s` read back from the local-graph section.
fn local_m(report: &Report) -> Option<usize> {
    let s = report.section("local graph")?;
    let eig = s.get("eigenvalues")?;
    let last = eig.rsplit(',').next()?;
    last.parse::<i64>()
        .ok()
        .filter(|&s| s < 0)
        .map(|s| (-s) as usize)
}

/// One line per verdict, or an error line; `cite` appends rule statements.
pub fn verdict_line(v: &Verdict, cite: bool) -> String {
    let mut line = v.to_line();
    if cite {
        if let Some(stmt) = v.rule.and_then(rule_statement) {
            let _ = write!(line, " cite=\"{stmt}\"");
        }
    }
    line
}
