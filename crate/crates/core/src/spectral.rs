//! Dense symmetric matrices (Laplacian, signless Laplacian, incidence Gram
//! products) and their eigenvalues — the direct route against which the
//! closed-form spectral maps are checked.
//!
//! The eigensolver is a cyclic Jacobi iteration: simple and robustly
//! accurate at the ≤ 200×200 scales this crate targets. Convergence is
//! declared when the off-diagonal Frobenius norm drops below
//! `tol · ‖M‖_F` (the Frobenius norm is invariant under the rotations, so
//! it is computed once on the input); the iteration gives up after
//! [`MAX_SWEEPS`] full sweeps.
//!
//! Laplacian and signless-Laplacian matrices are positive semidefinite, so
//! any computed eigenvalue in `(−1e−9, 0)` is reported as `0` to keep square
//! roots well-defined; anything below `−1e−9` signals a real numerical
//! problem and is surfaced as an error rather than silently clamped.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Default eigensolver convergence tolerance (relative to `‖M‖_F`).
pub const DEFAULT_EIG_TOL: f64 = 1e-12;
/// Eigenvalues in `(−EIG_CLAMP, 0)` are clamped to `0`; below is an anomaly.
pub const EIG_CLAMP: f64 = 1e-9;
/// Jacobi sweep cap before reporting non-convergence.
pub const MAX_SWEEPS: usize = 100;

/// Dense symmetric matrix in row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymmetricMatrix {
    /// Zero matrix of the given order.
    pub fn zero(order: usize) -> SymmetricMatrix {
        SymmetricMatrix { order, entries: vec![0.0; order * order] }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    /// Sets `(i, j)` and `(j, i)` so symmetry holds exactly by construction.
    pub fn set_sym(&mut self, i: usize, j: usize, value: f64) {
        self.entries[i * self.order + j] = value;
        self.entries[j * self.order + i] = value;
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// Which matrix a spectrum belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumKind {
    Laplacian,
    SignlessLaplacian,
}

impl SpectrumKind {
    pub fn name(self) -> &'static str {
        match self {
            SpectrumKind::Laplacian => "laplacian",
            SpectrumKind::SignlessLaplacian => "signless_laplacian",
        }
    }
}

/// Real eigenvalues sorted descending, multiplicities explicit.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    kind: SpectrumKind,
    values: Vec<f64>,
}

impl Spectrum {
    /// Clamps tiny negatives to zero, rejects genuine negatives or
    /// non-finite values, and sorts descending.
    pub fn new(kind: SpectrumKind, mut values: Vec<f64>) -> Result<Spectrum> {
        for v in &mut values {
            if !v.is_finite() {
                return Err(Error::NumericalAnomaly { value: *v });
            }
            if *v < 0.0 {
                if *v > -EIG_CLAMP {
                    *v = 0.0;
                } else {
                    return Err(Error::NumericalAnomaly { value: *v });
                }
            }
        }
        values.sort_by(|a, b| b.total_cmp(a));
        Ok(Spectrum { kind, values })
    }

    pub fn kind(&self) -> SpectrumKind {
        self.kind
    }

    /// Values in descending order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Vertex–edge incidence matrix: `entry(v, e) = 1` iff `v` is an endpoint
/// of edge `e`. Stored by edge endpoints; every column has exactly two 1s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    endpoints: Vec<(usize, usize)>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.endpoints.len()
    }

    pub fn entry(&self, v: usize, e: usize) -> f64 {
        let (a, b) = self.endpoints[e];
        if v == a || v == b {
            1.0
        } else {
            0.0
        }
    }
}

/// `L = D − A`: diagonal `d(v)`, off-diagonal `−1` iff adjacent.
pub fn laplacian(g: &Graph) -> SymmetricMatrix {
    let mut mtx = SymmetricMatrix::zero(g.order());
    for v in 0..g.order() {
        mtx.set_sym(v, v, g.degree(v) as f64);
    }
    for &(u, v) in g.edges() {
        mtx.set_sym(u, v, -1.0);
    }
    mtx
}

/// `Q = D + A`: diagonal `d(v)`, off-diagonal `+1` iff adjacent.
pub fn signless_laplacian(g: &Graph) -> SymmetricMatrix {
    let mut mtx = SymmetricMatrix::zero(g.order());
    for v in 0..g.order() {
        mtx.set_sym(v, v, g.degree(v) as f64);
    }
    for &(u, v) in g.edges() {
        mtx.set_sym(u, v, 1.0);
    }
    mtx
}

/// Incidence matrix of `g` in canonical edge order.
pub fn incidence(g: &Graph) -> IncidenceMatrix {
    IncidenceMatrix { rows: g.order(), endpoints: g.edges().to_vec() }
}

/// Eigenvalues of a symmetric matrix, packaged as a clamped, sorted
/// [`Spectrum`] of the stated kind.
pub fn eigenvalues(mtx: &SymmetricMatrix, kind: SpectrumKind, tol: f64) -> Result<Spectrum> {
    Spectrum::new(kind, symmetric_eigenvalues(mtx, tol)?)
}

/// Raw eigenvalues of a symmetric matrix by cyclic Jacobi iteration:
/// unsorted, unclamped. Converges when the off-diagonal Frobenius norm
/// drops below `tol · ‖mtx‖_F`.
pub fn symmetric_eigenvalues(mtx: &SymmetricMatrix, tol: f64) -> Result<Vec<f64>> {
    let n = mtx.order;
    if n == 0 {
        return Ok(Vec::new());
    }
    let norm = mtx.frobenius_norm();
    if norm == 0.0 {
        return Ok(vec![0.0; n]);
    }
    let threshold = tol * norm;
    let mut a = mtx.entries.clone();
    for _ in 0..MAX_SWEEPS {
        if off_diag_norm(&a, n) < threshold {
            return Ok(diagonal(&a, n));
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
    }
    if off_diag_norm(&a, n) < threshold {
        Ok(diagonal(&a, n))
    } else {
        Err(Error::NoConvergence { sweeps: MAX_SWEEPS })
    }
}

/// One Jacobi rotation annihilating entry `(p, q)`.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    // Smaller-magnitude root of t² + 2θt − 1 = 0 for numerical stability;
    // θ = ±∞ (denormal apq) degrades gracefully to t = 0.
    let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;
    let tau = s / (1.0 + c);
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        let new_rp = arp - s * (arq + tau * arp);
        let new_rq = arq + s * (arp - tau * arq);
        a[r * n + p] = new_rp;
        a[p * n + r] = new_rp;
        a[r * n + q] = new_rq;
        a[q * n + r] = new_rq;
    }
}

fn off_diag_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            sum += 2.0 * a[p * n + q] * a[p * n + q];
        }
    }
    sum.sqrt()
}

fn diagonal(a: &[f64], n: usize) -> Vec<f64> {
    (0..n).map(|i| a[i * n + i]).collect()
}

/// Singular values of an incidence matrix, descending, `min(n, m)` of them:
/// square roots of the eigenvalues of the smaller Gram product (`B·Bᵀ` when
/// `n ≤ m`, else `Bᵀ·B`), which is assembled exactly from integer counts.
pub fn singular_values(b: &IncidenceMatrix) -> Result<Vec<f64>> {
    let (n, m) = (b.rows(), b.cols());
    let gram = if n <= m {
        // (B·Bᵀ)_{uv}: shared incident edges — degree on the diagonal,
        // adjacency indicator off it (the signless Laplacian).
        let mut g = SymmetricMatrix::zero(n);
        for &(u, v) in &b.endpoints {
            g.set_sym(u, u, g.get(u, u) + 1.0);
            g.set_sym(v, v, g.get(v, v) + 1.0);
            g.set_sym(u, v, g.get(u, v) + 1.0);
        }
        g
    } else {
        // (Bᵀ·B)_{ef}: shared endpoints — 2 on the diagonal, 1 for
        // adjacent edges.
        let mut g = SymmetricMatrix::zero(m);
        let mut incident = vec![Vec::new(); n];
        for (e, &(u, v)) in b.endpoints.iter().enumerate() {
            g.set_sym(e, e, 2.0);
            incident[u].push(e);
            incident[v].push(e);
        }
        for list in &incident {
            for (k, &e) in list.iter().enumerate() {
                for &f in &list[k + 1..] {
                    g.set_sym(e, f, 1.0);
                }
            }
        }
        g
    };
    let eig = Spectrum::new(
        SpectrumKind::SignlessLaplacian,
        symmetric_eigenvalues(&gram, DEFAULT_EIG_TOL)?,
    )?;
    Ok(eig.values().iter().map(|&q| q.sqrt()).collect())
}

/// Largest absolute difference between two descending-sorted value lists;
/// infinite if the lengths differ.
pub fn max_deviation(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
