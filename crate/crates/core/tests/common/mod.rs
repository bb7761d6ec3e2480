//! Brute-force oracles shared by the integration tests. Nothing here uses
//! the crate's bitsets, spectra or screeners.

#![allow(dead_code, clippy::needless_range_loop)]

use nalgebra::DMatrix;
use num::{BigInt, BigRational, One, Zero};
use tightdrg::Graph;

pub fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order())
        .map(|v| (0..g.order()).filter(|&u| g.adjacent(u, v)).collect())
        .collect()
}

/// Floyd-Warshall distances; `u32::MAX` for unreachable.
pub fn distances(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let inf = u32::MAX / 2;
    let mut d = vec![vec![inf; n]; n];
    for i in 0..n {
        d[i][i] = 0;
        for j in 0..n {
            if g.adjacent(i, j) {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Intersection array `(b, c)` by counting over every pair, or `None`.
pub fn intersection_array(g: &Graph) -> Option<(Vec<i64>, Vec<i64>)> {
    let d = distances(g);
    let adj = adjacency_lists(g);
    let n = g.order();
    let diam = *d.iter().flatten().max()? as usize;
    let mut b: Vec<Option<i64>> = vec![None; diam + 1];
    let mut c: Vec<Option<i64>> = vec![None; diam + 1];
    for x in 0..n {
        for y in 0..n {
            let i = d[x][y] as usize;
            if i > diam {
                return None;
            }
            let ci = adj[y]
                .iter()
                .filter(|&&z| i > 0 && d[x][z] as usize == i - 1)
                .count() as i64;
            let bi = adj[y]
                .iter()
                .filter(|&&z| d[x][z] as usize == i + 1)
                .count() as i64;
            for (slot, val) in [(&mut c[i], ci), (&mut b[i], bi)] {
                match slot {
                    None => *slot = Some(val),
                    Some(v) if *v != val => return None,
                    _ => {}
                }
            }
        }
    }
    let b = b[..diam].iter().map(|v| v.unwrap()).collect();
    let c = c[1..].iter().map(|v| v.unwrap()).collect();
    Some((b, c))
}

/// Strongly regular parameters by counting, or `None`.
pub fn srg_counts(g: &Graph) -> Option<(i64, i64, i64, i64)> {
    let n = g.order();
    let adj = adjacency_lists(g);
    let k = adj.first()?.len();
    if adj.iter().any(|a| a.len() != k) {
        return None;
    }
    let (mut lam, mut mu) = (None, None);
    for u in 0..n {
        for v in u + 1..n {
            let common = adj[u].iter().filter(|w| adj[v].contains(w)).count();
            let slot = if g.adjacent(u, v) { &mut lam } else { &mut mu };
            match slot {
                None => *slot = Some(common),
                Some(x) if *x != common => return None,
                _ => {}
            }
        }
    }
    Some((n as i64, k as i64, lam.unwrap_or(0) as i64, mu? as i64))
}

/// Distinct adjacency eigenvalues with multiplicities, descending, each
/// rounded to the nearest integer after checking it is within 1e-6.
pub fn integral_adjacency_spectrum(g: &Graph) -> Option<Vec<(i64, usize)>> {
    let n = g.order();
    let a = DMatrix::from_fn(n, n, |i, j| if g.adjacent(i, j) { 1.0 } else { 0.0 });
    let mut ev: Vec<f64> = a.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(|x, y| y.partial_cmp(x).unwrap());
    let mut out: Vec<(i64, usize)> = Vec::new();
    for e in ev {
        let r = e.round();
        if (e - r).abs() > 1e-6 {
            return None;
        }
        match out.last_mut() {
            Some((v, m)) if *v == r as i64 => *m += 1,
            _ => out.push((r as i64, 1)),
        }
    }
    Some(out)
}

/// Tridiagonal intersection matrix `L` with `L[i][i-1] = c_i`,
/// `L[i][i] = a_i`, `L[i][i+1] = b_i`.
pub fn intersection_matrix(b: &[i64], c: &[i64]) -> Vec<Vec<i64>> {
    let d = b.len();
    let k = b[0];
    let mut l = vec![vec![0i64; d + 1]; d + 1];
    for i in 0..=d {
        let bi = if i < d { b[i] } else { 0 };
        let ci = if i > 0 { c[i - 1] } else { 0 };
        l[i][i] = k - bi - ci;
        if i > 0 {
            l[i][i - 1] = ci;
        }
        if i < d {
            l[i][i + 1] = bi;
        }
    }
    l
}

/// Integer eigenvalues of `L` found by testing `det(L - xI) = 0` with exact
/// Bareiss elimination for every `x` in `[-k, k]`.
pub fn integer_eigenvalues(b: &[i64], c: &[i64]) -> Vec<i64> {
    let l = intersection_matrix(b, c);
    let k = b[0];
    (-k..=k)
        .rev()
        .filter(|&x| {
            let m: Vec<Vec<BigInt>> = l
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, &v)| BigInt::from(if i == j { v - x } else { v }))
                        .collect()
                })
                .collect();
            determinant(m).is_zero()
        })
        .collect()
}

fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Multiplicities from closed-walk counts: `sum_i m_i theta_i^j = n (L^j)_{00}`
/// for `j = 0..D`, solved exactly.
pub fn walk_multiplicities(b: &[i64], c: &[i64], n: i64, thetas: &[i64]) -> Option<Vec<i64>> {
    let l = intersection_matrix(b, c);
    let dim = l.len();
    let mut power: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| (0..dim).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for j in 0..dim {
        let mut row: Vec<BigRational> = thetas
            .iter()
            .map(|&t| BigRational::from_integer(BigInt::from(t).pow(j as u32)))
            .collect();
        row.push(BigRational::from_integer(&power[0][0] * n));
        rows.push(row);
        power = (0..dim)
            .map(|r| {
                (0..dim)
                    .map(|s| (0..dim).map(|t| &power[r][t] * l[t][s]).sum())
                    .collect()
            })
            .collect();
    }
    // Gauss-Jordan
    for col in 0..dim {
        let pivot = (col..dim).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        let p = rows[col][col].clone();
        for v in rows[col].iter_mut() {
            *v = &*v / &p;
        }
        for r in 0..dim {
            if r != col && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for s in 0..=dim {
                    let sub = &f * &rows[col][s];
                    rows[r][s] = &rows[r][s] - sub;
                }
            }
        }
    }
    rows.iter()
        .map(|r| {
            let v = &r[dim];
            v.is_integer()
                .then(|| i64::try_from(v.to_integer()).ok())
                .flatten()
        })
        .collect()
}

/// Both sides of the tightness equality, exactly.
pub fn tightness_sides(
    k: &BigInt,
    a1: &BigInt,
    b1: &BigInt,
    theta1: &BigInt,
    theta_d: &BigInt,
) -> (BigRational, BigRational) {
    let q = |x: &BigInt| BigRational::from_integer(x.clone());
    let shift = q(k) / q(&(a1 + 1));
    let lhs = (q(theta1) + &shift) * (q(theta_d) + &shift);
    let rhs = -(q(k) * q(a1) * q(b1)) / q(&((a1 + 1) * (a1 + 1)));
    (lhs, rhs)
}

/// Krein parameters `q^h_{ij} = m_i m_j / n * sum_l k_l u_l(i) u_l(j) u_l(h)`.
pub fn krein_by_cosines(
    b: &[i64],
    c: &[i64],
    thetas: &[f64],
    mults: &[f64],
    n: f64,
) -> Vec<Vec<Vec<f64>>> {
    let d = b.len();
    let k = b[0] as f64;
    let a = |i: usize| {
        k - if i < d { b[i] as f64 } else { 0.0 } - if i > 0 { c[i - 1] as f64 } else { 0.0 }
    };
    let mut sizes = vec![1.0];
    for i in 1..=d {
        sizes.push(sizes[i - 1] * b[i - 1] as f64 / c[i - 1] as f64);
    }
    let cos: Vec<Vec<f64>> = thetas
        .iter()
        .map(|&t| {
            let mut u = vec![1.0, t / k];
            for i in 1..d {
                u.push(((t - a(i)) * u[i] - c[i - 1] as f64 * u[i - 1]) / b[i] as f64);
            }
            u
        })
        .collect();
    (0..=d)
        .map(|h| {
            (0..=d)
                .map(|i| {
                    (0..=d)
                        .map(|j| {
                            mults[i] * mults[j] / n
                                * (0..=d)
                                    .map(|l| sizes[l] * cos[i][l] * cos[j][l] * cos[h][l])
                                    .sum::<f64>()
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// Orderings `0, s_1..s_D` with `q^{s_h}_{s_1, s_j} = 0` iff `|h-j| != 1` for
/// distinct `h, j`, zero meaning below `tol * max|q|`.
pub fn q_orderings(krein: &[Vec<Vec<f64>>], tol: f64) -> Vec<Vec<usize>> {
    let d = krein.len() - 1;
    let scale = krein
        .iter()
        .flatten()
        .flatten()
        .fold(0.0f64, |m, q| m.max(q.abs()));
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![vec![0]];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == d + 1 {
            let ok = (0..=d).all(|h| {
                (0..=d).filter(|&j| j != h).all(|j| {
                    let zero = krein[prefix[h]][prefix[1]][prefix[j]].abs() < tol * scale;
                    zero == (h.abs_diff(j) != 1)
                })
            });
            if ok {
                out.push(prefix);
            }
            continue;
        }
        for next in 1..=d {
            if !prefix.contains(&next) {
                let mut p = prefix.clone();
                p.push(next);
                stack.push(p);
            }
        }
    }
    out.sort();
    out
}

/// `gamma` by a plain triple loop: `Some(value)` when constant and at least
/// one triple exists.
pub fn gamma_brute(g: &Graph) -> Option<usize> {
    let d = distances(g);
    let adj = adjacency_lists(g);
    let n = g.order();
    let mut seen = None;
    for x in 0..n {
        for &y in &adj[x] {
            for z in 0..n {
                if d[x][z] == 2 && d[y][z] == 2 {
                    let c = adj[x]
                        .iter()
                        .filter(|w| adj[y].contains(w) && adj[z].contains(w))
                        .count();
                    match seen {
                        None => seen = Some(c),
                        Some(s) if s != c => return None,
                        _ => {}
                    }
                }
            }
        }
    }
    seen
}

/// Shape `(t, n)` of every mu-graph if all are complete multipartite with
/// equal parts (checked as: every vertex has exactly `n - 1` non-neighbours
/// and non-adjacency is transitive).
pub fn mu_shapes(g: &Graph) -> Vec<Option<(usize, usize)>> {
    let d = distances(g);
    let adj = adjacency_lists(g);
    let n = g.order();
    let mut out = Vec::new();
    for x in 0..n {
        for z in x + 1..n {
            if d[x][z] != 2 {
                continue;
            }
            let common: Vec<usize> = adj[x]
                .iter()
                .copied()
                .filter(|w| adj[z].contains(w))
                .collect();
            let non = |u: usize| -> Vec<usize> {
                common
                    .iter()
                    .copied()
                    .filter(|&w| w != u && !g.adjacent(u, w))
                    .collect()
            };
            let part = non(common[0]).len() + 1;
            let ok = common.iter().all(|&u| {
                let nu = non(u);
                nu.len() + 1 == part
                    && nu
                        .iter()
                        .all(|&w| nu.iter().all(|&y| y == w || !g.adjacent(w, y)))
            });
            out.push(ok.then(|| (common.len() / part, part)));
        }
    }
    out
}

/// `g(m) = (m^3(2m-3)+1)(m^2(m-1)+2)/2 - m - 1`.
pub fn g_closed(m: i64) -> BigInt {
    let m = BigInt::from(m);
    (m.pow(3) * (BigInt::from(2) * &m - 3) + 1) * (m.pow(2) * (&m - 1) + 2) / 2 - &m - 1
}

/// The valency bound written directly in `b`.
pub fn phi_closed(b: i64) -> BigInt {
    let b = BigInt::from(b);
    let one = BigInt::one();
    let inner: BigInt = ((&one + &b).pow(3) * (BigInt::from(2) * &b - 1) + 1)
        * (&b * (&one + &b).pow(2) + 2)
        - BigInt::from(2) * &b
        - 4;
    inner.pow(2) / 4 + 1
}
