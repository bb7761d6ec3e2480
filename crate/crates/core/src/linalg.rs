//! Dense floating-point helpers over nalgebra.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::graph::Graph;

/// Adjacency eigenvalues in descending order.
pub fn adjacency_eigenvalues(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let a = DMatrix::from_fn(n, n, |i, j| if g.adjacent(i, j) { 1.0 } else { 0.0 });
    symmetric_eigenvalues(a)
}

pub(crate) fn symmetric_eigenvalues(a: DMatrix<f64>) -> Vec<f64> {
    let mut ev: Vec<f64> = SymmetricEigen::new(a).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

/// Groups a sorted (descending) list of eigenvalues into `(value, multiplicity)`
/// clusters, merging entries closer than `tol` (relative to magnitude).
pub fn cluster_eigenvalues(sorted: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize, f64)> = Vec::new();
    for &x in sorted {
        match out.last_mut() {
            Some((_, count, sum))
                if ((*sum / *count as f64) - x).abs() <= tol * x.abs().max(1.0) =>
            {
                *count += 1;
                *sum += x;
            }
            _ => out.push((x, 1, x)),
        }
    }
    out.into_iter().map(|(_, c, s)| (s / c as f64, c)).collect()
}
