mod construct;

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use tightdrg::drg::moore_bound;
use tightdrg::families::MAX_ORDER;
use tightdrg::mu::{gamma_number_verbose, mu_census};
use tightdrg::report::{
    analyze_graph, census_section, gamma_section, verdict_line, AnalyzeOptions, Format, Report,
    Section,
};
use tightdrg::screen::{
    claw_bound_classify, claw_f, neumaier_equality_n, neumaier_mu_bound, rule_statement,
    screen_batch, taylor_trichotomy, valency_bound, Verdict,
};
use tightdrg::{all_pairs_distances, Graph, SrgParams};

#[derive(Parser)]
#[command(
    name = "tightdrg",
    version,
    about = "Build, analyze and screen tight distance-regular graphs"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Accepted for scripts; every computation is already deterministic.
    #[arg(long, global = true)]
    seedless: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and write it as an edge list.
    ///
    /// Families: johnson N K, halved-cube N, kneser2 N, hamming D Q, hypercube N,
    /// complete-multipartite T N, gq22, oa-block M N, steiner-affine Q,
    /// steiner-pairs V, steiner-projective Q, taylor <family...>.
    Construct {
        #[arg(required = true)]
        family: Vec<String>,
        /// Edge-list destination; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Also write the underlying design (block graphs only).
        #[arg(long)]
        design_out: Option<PathBuf>,
    },
    /// Distance-regularity, spectrum, tightness, local graphs, mu-graphs, gamma.
    Analyze {
        file: PathBuf,
        /// Local graph at every vertex instead of vertex 0.
        #[arg(long)]
        all_vertices: bool,
    },
    /// Screen a batch of parameter sets, one verdict per line.
    Screen {
        file: PathBuf,
        /// Structured output (same as --format json).
        #[arg(long)]
        json: bool,
        /// Append the statement of each verdict's rule.
        #[arg(long)]
        cite: bool,
    },
    /// Shapes of all mu-graphs.
    MuCensus { file: PathBuf },
    /// The triple intersection number gamma.
    Gamma { file: PathBuf },
    /// Parameter bounds.
    Bounds {
        #[command(subcommand)]
        which: Bounds,
    },
}

#[derive(Subcommand)]
enum Bounds {
    /// g(b+1) and phi(b) for a tight graph with parameter b.
    Valency { b: i64 },
    /// Neumaier's mu bound for smallest eigenvalue -m.
    Neumaier { m: i64 },
    /// The claw-bound threshold f(m, mu).
    Claw { m: i64, mu: i64 },
    /// Moore bound on the order for valency k and diameter d.
    Moore { k: u64, d: u32 },
    /// Taylor-graph branch for a local graph with eigenvalue gap (m, n).
    Taylor { m: i64, n: i64 },
    /// Classify strongly regular parameters by the claw bound.
    Srg {
        v: i64,
        k: i64,
        lambda: i64,
        mu: i64,
    },
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let g = Graph::parse_edge_list(&read_input(path)?)
        .with_context(|| format!("parsing {}", path.display()))?;
    if g.order() > MAX_ORDER {
        bail!(
            "{} has {} vertices; the limit is {MAX_ORDER}",
            path.display(),
            g.order()
        );
    }
    Ok(g)
}

fn emit(report: &Report, format: Format) -> Result<()> {
    io::stdout().write_all(report.render(format).as_bytes())?;
    Ok(())
}

fn verdict_section(title: &str, v: &Verdict) -> Section {
    let mut s = Section::new(title).entry("status", v.status);
    if let Some(rule) = v.rule {
        s.push("rule", rule);
    }
    for (k, val) in &v.computed {
        s.push(k.clone(), val);
    }
    s.citation = v.rule.and_then(rule_statement).map(String::from);
    s
}

fn construct(tokens: &[String], out: Option<&Path>, design_out: Option<&Path>) -> Result<()> {
    let built = construct::build(tokens)?;
    let text = built.graph.to_edge_list();
    match out {
        Some(p) => fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    if let Some(p) = design_out {
        let Some(design) = &built.design else {
            bail!(
                "`{}` is not a block graph; no design to write",
                tokens.join(" ")
            );
        };
        fs::write(p, design).with_context(|| format!("writing {}", p.display()))?;
    }
    if let Some(note) = &built.note {
        eprintln!("note: {note}");
    }
    let counts = format!(
        "{} vertices, {} edges",
        built.graph.order(),
        built.graph.edge_count()
    );
    // keep stdout clean when it carries the edge list
    if out.is_some() {
        println!("{counts}");
    } else {
        eprintln!("{counts}");
    }
    Ok(())
}

fn analyze(path: &Path, all_vertices: bool, format: Format) -> Result<ExitCode> {
    let g = read_graph(path)?;
    let report = analyze_graph(&g, AnalyzeOptions { all_vertices });
    emit(&report, format)?;
    if g.order() > 0 && !all_pairs_distances(&g).is_connected() {
        eprintln!(
            "error: {} is disconnected; distance-regularity needs a connected graph",
            path.display()
        );
        return Ok(ExitCode::FAILURE);
    }
    Ok(ExitCode::SUCCESS)
}

fn screen(path: &Path, cite: bool, format: Format) -> Result<ExitCode> {
    let entries = screen_batch(&read_input(path)?);
    let mut tally: BTreeMap<String, usize> = BTreeMap::new();
    let mut errors = 0;
    for e in &entries {
        match &e.result {
            Ok(v) => *tally.entry(v.status.to_string()).or_default() += 1,
            Err(_) => errors += 1,
        }
    }
    let mut stdout = io::stdout().lock();
    match format {
        Format::Text => {
            for e in &entries {
                match &e.result {
                    Ok(v) => writeln!(stdout, "{}", verdict_line(v, cite))?,
                    Err(err) => writeln!(stdout, "ERROR {err}")?,
                }
            }
            let counts: Vec<String> = tally.iter().map(|(k, n)| format!("{k}={n}")).collect();
            writeln!(
                stdout,
                "# {} screened: {} errors={errors}",
                entries.len(),
                counts.join(" ")
            )?;
        }
        Format::Json => {
            let results: Vec<_> = entries
                .iter()
                .map(|e| {
                    let mut obj = json!({ "line": e.line, "input": e.input });
                    match &e.result {
                        Ok(v) => {
                            obj["verdict"] = v.to_json();
                            if cite {
                                if let Some(stmt) = v.rule.and_then(rule_statement) {
                                    obj["citation"] = stmt.into();
                                }
                            }
                        }
                        Err(err) => obj["error"] = err.message.clone().into(),
                    }
                    obj
                })
                .collect();
            let doc = json!({ "results": results, "summary": { "total": entries.len(), "statuses": tally, "errors": errors } });
            writeln!(stdout, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
    }
    if errors > 0 {
        eprintln!("error: {errors} line(s) failed to parse");
        return Ok(ExitCode::FAILURE);
    }
    Ok(ExitCode::SUCCESS)
}

fn bounds(which: &Bounds) -> Result<Report> {
    let section = match *which {
        Bounds::Valency { b } => {
            let (g, phi) = valency_bound(b)?;
            Section::new("valency bound")
                .entry("b", b)
                .entry("m", b + 1)
                .entry("g", g)
                .entry("phi", phi)
                .entry("diameter", "cited-external")
        }
        Bounds::Neumaier { m } => {
            if m < 2 {
                bail!("neumaier: need m >= 2");
            }
            Section::new("neumaier")
                .entry("m", m)
                .entry("mu_bound", neumaier_mu_bound(m))
                .entry("equality_n", neumaier_equality_n(m))
        }
        Bounds::Claw { m, mu } => {
            if m < 2 || mu < 1 {
                bail!("claw: need m >= 2 and mu >= 1");
            }
            Section::new("claw")
                .entry("m", m)
                .entry("mu", mu)
                .entry("f", claw_f(m, mu))
        }
        Bounds::Moore { k, d } => {
            let bound =
                moore_bound(k, d).with_context(|| format!("moore: no bound for k={k}, D={d}"))?;
            Section::new("moore")
                .entry("k", k)
                .entry("D", d)
                .entry("bound", bound)
        }
        Bounds::Taylor { m, n } => verdict_section("taylor", &taylor_trichotomy(m, n).0),
        Bounds::Srg { v, k, lambda, mu } => verdict_section(
            "claw bound",
            &claw_bound_classify(&SrgParams::new(v, k, lambda, mu)),
        ),
    };
    Ok(Report {
        sections: vec![section],
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let format: Format = cli.format.into();
    match &cli.command {
        Command::Construct {
            family,
            out,
            design_out,
        } => {
            construct(family, out.as_deref(), design_out.as_deref())?;
        }
        Command::Analyze { file, all_vertices } => return analyze(file, *all_vertices, format),
        Command::Screen { file, json, cite } => {
            let format = if *json { Format::Json } else { format };
            return screen(file, *cite, format);
        }
        Command::MuCensus { file } => {
            let g = read_graph(file)?;
            emit(
                &Report {
                    sections: vec![census_section(&mu_census(&g))],
                },
                format,
            )?;
        }
        Command::Gamma { file } => {
            let g = read_graph(file)?;
            emit(
                &Report {
                    sections: vec![gamma_section(&gamma_number_verbose(&g))],
                },
                format,
            )?;
        }
        Command::Bounds { which } => emit(&bounds(which)?, format)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
