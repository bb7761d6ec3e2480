//! Batch screening input: one parameter set per line.
//!
//! ```text
//! classical D b alpha beta
//! srg v k lambda mu
//! array {b0,...;c1,...} [n=<count>]
//! ```
//! Blank lines and `#` comments are skipped.

use super::{
    claw_bound_classify, screen_array, screen_tight_classical, ClassicalParams, Verdict, Q,
};
use crate::drg::IntersectionArray;
use crate::par;
use crate::srg::SrgParams;

#[derive(Clone, Debug, PartialEq)]
pub enum BatchLine {
    Classical(ClassicalParams),
    Srg {
        v: i64,
        k: i64,
        lambda: i64,
        mu: i64,
    },
    Array {
        array: IntersectionArray,
        n: Option<u64>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BatchEntry {
    /// 1-based line number in the input.
    pub line: usize,
    pub input: String,
    pub result: Result<Verdict, ParseError>,
}

fn parse_num<T: std::str::FromStr>(tok: &str, what: &str) -> Result<T, String> {
    tok.parse()
        .map_err(|_| format!("{what} `{tok}` is not a valid number"))
}

/// Parses one line; `Ok(None)` for blank or comment lines.
pub fn parse_batch_line(text: &str, line: usize) -> Result<Option<BatchLine>, ParseError> {
    let body = text.split('#').next().unwrap_or("").trim();
    if body.is_empty() {
        return Ok(None);
    }
    let err = |message: String| ParseError { line, message };
    let (kind, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
    let toks: Vec<&str> = rest.split_whitespace().collect();
    match kind {
        "classical" => {
            if toks.len() != 4 {
                return Err(err(format!(
                    "classical expects 4 values (D b alpha beta), got {}",
                    toks.len()
                )));
            }
            let d: u32 = parse_num(toks[0], "D").map_err(err)?;
            let b: i128 = parse_num(toks[1], "b").map_err(err)?;
            let alpha: Q = parse_num(toks[2], "alpha").map_err(err)?;
            let beta: Q = parse_num(toks[3], "beta").map_err(err)?;
            Ok(Some(BatchLine::Classical(ClassicalParams::new(
                d, b, alpha, beta,
            ))))
        }
        "srg" => {
            if toks.len() != 4 {
                return Err(err(format!(
                    "srg expects 4 values (v k lambda mu), got {}",
                    toks.len()
                )));
            }
            let vals: Vec<i64> = toks
                .iter()
                .zip(["v", "k", "lambda", "mu"])
                .map(|(t, w)| parse_num::<i64>(t, w))
                .collect::<Result<_, _>>()
                .map_err(err)?;
            if vals.iter().any(|&x| x < 0) || vals[1] >= vals[0] {
                return Err(err("srg needs nonnegative values with k < v".into()));
            }
            Ok(Some(BatchLine::Srg {
                v: vals[0],
                k: vals[1],
                lambda: vals[2],
                mu: vals[3],
            }))
        }
        "array" => {
            let close = rest
                .find('}')
                .ok_or_else(|| err("array needs a {b...;c...} literal".into()))?;
            let array: IntersectionArray = rest[..=close]
                .trim()
                .parse()
                .map_err(|e: crate::drg::DrgError| err(e.to_string()))?;
            let mut n = None;
            for tok in rest[close + 1..].split_whitespace() {
                match tok.strip_prefix("n=") {
                    Some(v) if n.is_none() => n = Some(parse_num::<u64>(v, "n").map_err(err)?),
                    _ => return Err(err(format!("unexpected token `{tok}`"))),
                }
            }
            Ok(Some(BatchLine::Array { array, n }))
        }
        other => Err(err(format!("unknown line kind `{other}`"))),
    }
}

pub fn screen_line(line: &BatchLine) -> Verdict {
    match line {
        BatchLine::Classical(p) => screen_tight_classical(p),
        BatchLine::Srg { v, k, lambda, mu } => {
            claw_bound_classify(&SrgParams::new(*v, *k, *lambda, *mu))
        }
        BatchLine::Array { array, n } => screen_array(array, *n),
    }
}

/// Screens every non-blank line, in input order. Parse failures are kept
/// per line and do not stop the batch.
pub fn screen_batch(text: &str) -> Vec<BatchEntry> {
    let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
    par::map_slice(&lines, |&(no, l)| {
        parse_batch_line(l, no)
            .map(|parsed| {
                parsed.map(|p| BatchEntry {
                    line: no,
                    input: l.trim().to_string(),
                    result: Ok(screen_line(&p)),
                })
            })
            .unwrap_or_else(|e| {
                Some(BatchEntry {
                    line: no,
                    input: l.trim().to_string(),
                    result: Err(e),
                })
            })
    })
    .into_iter()
    .flatten()
    .collect()
}
