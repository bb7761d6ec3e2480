//! Orthogonal arrays, Steiner systems and their block graphs.
//!
//! Orders are restricted to primes: every construction is cyclic over `Z_p`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::graph::Graph;
use crate::srg::SrgParams;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("{name} = {value} is not prime")]
    NotPrime { name: &'static str, value: usize },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("invalid design: {0}")]
    InvalidDesign(String),
    #[error("construction rejected: {0}")]
    Rejected(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn require_prime(name: &'static str, value: usize) -> Result<(), ConstructionError> {
    if is_prime(value) {
        Ok(())
    } else {
        Err(ConstructionError::NotPrime { name, value })
    }
}

/// `m x n^2` array over `0..n` in which every pair of rows shows each
/// ordered symbol pair exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalArray {
    pub m: usize,
    pub n: usize,
    /// `entries[row][column]`.
    pub entries: Vec<Vec<usize>>,
}

/// Rows 0 and 1 are the coordinate projections of column `(i, j) = (c / n, c % n)`;
/// row `a + 1` is the Latin square `a*i + j mod n` for `a = 1..m-2`.
pub fn build_orthogonal_array(m: usize, n: usize) -> Result<OrthogonalArray, ConstructionError> {
    require_prime("n", n)?;
    if m < 2 || m > n + 1 {
        return Err(ConstructionError::OutOfRange(format!(
            "OA(m, n) needs 2 <= m <= n + 1, got m = {m}, n = {n}"
        )));
    }
    let columns = n * n;
    let mut entries = vec![
        (0..columns).map(|c| c / n).collect::<Vec<_>>(),
        (0..columns).map(|c| c % n).collect(),
    ];
    for a in 1..m - 1 {
        entries.push((0..columns).map(|c| (a * (c / n) + c % n) % n).collect());
    }
    Ok(OrthogonalArray { m, n, entries })
}

impl OrthogonalArray {
    /// Exhaustive all-pairs-once check over every pair of rows.
    pub fn validate(&self) -> Result<(), ConstructionError> {
        let n = self.n;
        if self.entries.len() != self.m || self.entries.iter().any(|r| r.len() != n * n) {
            return Err(ConstructionError::InvalidDesign(
                "array is not m x n^2".into(),
            ));
        }
        if let Some(bad) = self.entries.iter().flatten().find(|&&x| x >= n) {
            return Err(ConstructionError::InvalidDesign(format!(
                "symbol {bad} out of range"
            )));
        }
        for r1 in 0..self.m {
            for r2 in r1 + 1..self.m {
                let mut seen = vec![false; n * n];
                for c in 0..n * n {
                    let key = self.entries[r1][c] * n + self.entries[r2][c];
                    if std::mem::replace(&mut seen[key], true) {
                        return Err(ConstructionError::InvalidDesign(format!(
                            "rows {r1},{r2} repeat pair ({}, {})",
                            key / n,
                            key % n
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `m` lines of `n^2` space-separated symbols.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            writeln!(out, "{}", line.join(" ")).unwrap();
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self, ConstructionError> {
        let entries: Vec<Vec<usize>> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                l.split_whitespace()
                    .map(|t| {
                        t.parse()
                            .map_err(|e| ConstructionError::Parse(format!("{t}: {e}")))
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        let m = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        let n = (cols as f64).sqrt().round() as usize;
        if m < 2 || n * n != cols {
            return Err(ConstructionError::Parse(format!(
                "{m} rows of {cols} columns is not an OA shape"
            )));
        }
        let oa = Self { m, n, entries };
        oa.validate()?;
        Ok(oa)
    }
}

/// Identifies a canonical clique of a block graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum CliqueKey {
    /// Columns carrying `symbol` in `row` of an orthogonal array.
    Row { row: usize, symbol: usize },
    /// Blocks through a point of a Steiner system.
    Point(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalCliqueFamily {
    pub keys: Vec<CliqueKey>,
    /// Sorted vertex lists, parallel to `keys`.
    pub cliques: Vec<Vec<usize>>,
}

impl CanonicalCliqueFamily {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// How many canonical cliques contain each vertex.
    pub fn incidence_counts(&self, order: usize) -> Vec<usize> {
        let mut counts = vec![0; order];
        for c in &self.cliques {
            for &v in c {
                counts[v] += 1;
            }
        }
        counts
    }
}

/// A block graph with its canonical cliques and the closed-form parameters
/// it should have (absent when the closed form does not apply).
#[derive(Clone, Debug)]
pub struct BlockGraph {
    pub graph: Graph,
    pub cliques: CanonicalCliqueFamily,
    pub expected: Option<SrgParams>,
    pub warning: Option<String>,
}

/// `(n^2, m(n-1), (m-1)(m-2)+n-2, m(m-1))`.
pub fn oa_block_params(m: i64, n: i64) -> SrgParams {
    SrgParams::new(n * n, m * (n - 1), (m - 1) * (m - 2) + n - 2, m * (m - 1))
}

/// Spectrum `{m(n-1)^1, (n-m)^{m(n-1)}, (-m)^{(n-1)(n+1-m)}}`.
pub fn oa_block_spectrum(m: i64, n: i64) -> Vec<(i64, usize)> {
    vec![
        (m * (n - 1), 1),
        (n - m, (m * (n - 1)) as usize),
        (-m, ((n - 1) * (n + 1 - m)) as usize),
    ]
}

/// Columns adjacent iff they agree in some row.
pub fn block_graph_of_oa(oa: &OrthogonalArray) -> Result<BlockGraph, ConstructionError> {
    oa.validate()?;
    let cols = oa.n * oa.n;
    let mut graph = Graph::from_fn(cols, |a, b| oa.entries.iter().any(|row| row[a] == row[b]));
    let labels = (0..cols)
        .map(|c| {
            let col: Vec<String> = oa.entries.iter().map(|row| row[c].to_string()).collect();
            format!("({})", col.join(","))
        })
        .collect();
    graph = graph.with_labels(labels).expect("one label per column");
    let mut keys = Vec::new();
    let mut cliques = Vec::new();
    for (row_idx, row) in oa.entries.iter().enumerate() {
        for symbol in 0..oa.n {
            keys.push(CliqueKey::Row {
                row: row_idx,
                symbol,
            });
            cliques.push((0..cols).filter(|&c| row[c] == symbol).collect());
        }
    }
    let (expected, warning) = if oa.n >= oa.m {
        (Some(oa_block_params(oa.m as i64, oa.n as i64)), None)
    } else {
        (
            None,
            Some(format!(
                "OA({}, {}) has m > n; the block graph is complete",
                oa.m, oa.n
            )),
        )
    };
    Ok(BlockGraph {
        graph,
        cliques: CanonicalCliqueFamily { keys, cliques },
        expected,
        warning,
    })
}

/// `S(2, m, n)`: every pair of points lies in exactly one block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerSystem {
    pub point_count: usize,
    pub block_size: usize,
    /// Each block sorted ascending.
    pub blocks: Vec<Vec<usize>>,
}

impl SteinerSystem {
    pub fn new(
        point_count: usize,
        block_size: usize,
        mut blocks: Vec<Vec<usize>>,
    ) -> Result<Self, ConstructionError> {
        for b in &mut blocks {
            b.sort_unstable();
        }
        let s = Self {
            point_count,
            block_size,
            blocks,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), ConstructionError> {
        let (n, m) = (self.point_count, self.block_size);
        if m < 2 || n < m {
            return Err(ConstructionError::InvalidDesign(format!(
                "S(2,{m},{n}) is degenerate"
            )));
        }
        let mut cover = vec![0u32; n * n];
        for block in &self.blocks {
            if block.len() != m {
                return Err(ConstructionError::InvalidDesign(format!(
                    "block {block:?} does not have size {m}"
                )));
            }
            for (i, &p) in block.iter().enumerate() {
                if p >= n {
                    return Err(ConstructionError::InvalidDesign(format!(
                        "point {p} out of range"
                    )));
                }
                for &q in &block[i + 1..] {
                    cover[p * n + q] += 1;
                }
            }
        }
        for p in 0..n {
            for q in p + 1..n {
                if cover[p * n + q] != 1 {
                    return Err(ConstructionError::InvalidDesign(format!(
                        "pair {{{p},{q}}} lies in {} blocks",
                        cover[p * n + q]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Blocks through each point: `(n-1)/(m-1)`.
    pub fn replication(&self) -> usize {
        (self.point_count - 1) / (self.block_size - 1)
    }

    pub fn is_symmetric(&self) -> bool {
        self.blocks.len() == self.point_count
    }

    /// One block per line, points space-separated.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for b in &self.blocks {
            let line: Vec<String> = b.iter().map(usize::to_string).collect();
            writeln!(out, "{}", line.join(" ")).unwrap();
        }
        out
    }

    /// Inverse of [`SteinerSystem::to_text`]. The point set is `0..=max point`.
    pub fn parse_text(text: &str) -> Result<Self, ConstructionError> {
        let blocks: Vec<Vec<usize>> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                l.split_whitespace()
                    .map(|t| {
                        t.parse()
                            .map_err(|e| ConstructionError::Parse(format!("{t}: {e}")))
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        let m = blocks.first().map_or(0, Vec::len);
        let n = blocks.iter().flatten().max().map_or(0, |&p| p + 1);
        Self::new(n, m, blocks)
    }
}

/// Lines of `AG(2, q)`: `S(2, q, q^2)`, point `(x, y)` is `x*q + y`.
pub fn build_affine_plane(q: usize) -> Result<SteinerSystem, ConstructionError> {
    require_prime("q", q)?;
    let mut blocks = Vec::with_capacity(q * q + q);
    for slope in 0..q {
        for c in 0..q {
            blocks.push((0..q).map(|x| x * q + (slope * x + c) % q).collect());
        }
    }
    for c in 0..q {
        blocks.push((0..q).map(|y| c * q + y).collect());
    }
    SteinerSystem::new(q * q, q, blocks)
}

/// All 2-subsets of `0..v`, in colex order.
pub fn build_pair_design(v: usize) -> Result<SteinerSystem, ConstructionError> {
    if v < 3 {
        return Err(ConstructionError::OutOfRange(format!(
            "pair design needs v >= 3, got {v}"
        )));
    }
    let blocks = (1..v)
        .flat_map(|b| (0..b).map(move |a| vec![a, b]))
        .collect();
    SteinerSystem::new(v, 2, blocks)
}

fn normalized_points(q: usize) -> Vec<[usize; 3]> {
    let mut pts = Vec::with_capacity(q * q + q + 1);
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let v = [a, b, c];
                if v.iter().find(|&&x| x != 0) == Some(&1) {
                    pts.push(v);
                }
            }
        }
    }
    pts
}

/// Lines of `PG(2, q)`: the symmetric design `S(2, q+1, q^2+q+1)`.
pub fn build_projective_plane(q: usize) -> Result<SteinerSystem, ConstructionError> {
    require_prime("q", q)?;
    let pts = normalized_points(q);
    let blocks = pts
        .iter()
        .map(|line| {
            pts.iter()
                .enumerate()
                .filter(|(_, p)| (0..3).map(|i| p[i] * line[i]).sum::<usize>() % q == 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    SteinerSystem::new(pts.len(), q + 1, blocks)
}

/// Closed-form parameters for a non-symmetric `S(2, m, n)` block graph.
pub fn steiner_block_params(m: i64, n: i64) -> SrgParams {
    SrgParams::new(
        n * (n - 1) / (m * (m - 1)),
        m * (n - m) / (m - 1),
        (m - 1) * (m - 1) + (n - 1) / (m - 1) - 2,
        m * m,
    )
}

/// Spectrum of a non-symmetric `S(2, m, n)` block graph.
pub fn steiner_block_spectrum(m: i64, n: i64) -> Vec<(i64, usize)> {
    let blocks = n * (n - 1) / (m * (m - 1));
    vec![
        (m * (n - m) / (m - 1), 1),
        ((n - m * m) / (m - 1), (n - 1) as usize),
        (-m, (blocks - n) as usize),
    ]
}

/// Steiner graph `S_m(n)`: block graph of `S(2, m, mn + m - n)`.
pub fn steiner_graph_params(m: i64, n: i64) -> SrgParams {
    SrgParams::new(
        (m + n * (m - 1)) * (n + 1) / m,
        m * n,
        m * m - 2 * m + n,
        m * m,
    )
}

/// Blocks adjacent iff they meet in exactly one point.
pub fn block_graph_of_steiner(s: &SteinerSystem) -> Result<BlockGraph, ConstructionError> {
    s.validate()?;
    let meet = |a: &[usize], b: &[usize]| a.iter().filter(|p| b.binary_search(p).is_ok()).count();
    let graph = Graph::from_fn(s.blocks.len(), |i, j| meet(&s.blocks[i], &s.blocks[j]) == 1);
    let labels = s
        .blocks
        .iter()
        .map(|b| {
            let pts: Vec<String> = b.iter().map(usize::to_string).collect();
            format!("{{{}}}", pts.join(","))
        })
        .collect();
    let graph = graph.with_labels(labels).expect("one label per block");
    let keys = (0..s.point_count).map(CliqueKey::Point).collect();
    let cliques = (0..s.point_count)
        .map(|p| {
            (0..s.blocks.len())
                .filter(|&i| s.blocks[i].binary_search(&p).is_ok())
                .collect()
        })
        .collect();
    let (expected, warning) = if s.is_symmetric() {
        (
            None,
            Some(format!(
                "symmetric design S(2,{},{}): closed-form parameters need a non-symmetric system",
                s.block_size, s.point_count
            )),
        )
    } else {
        (
            Some(steiner_block_params(
                s.block_size as i64,
                s.point_count as i64,
            )),
            None,
        )
    };
    Ok(BlockGraph {
        graph,
        cliques: CanonicalCliqueFamily { keys, cliques },
        expected,
        warning,
    })
}
