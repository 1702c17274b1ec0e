//! Dense real-symmetric eigensolver and the spectral quantities consumed
//! by the certifier.
//!
//! The solver is classical cyclic Jacobi: plane rotations annihilate
//! off-diagonal entries sweep by sweep until the off-diagonal Frobenius
//! norm falls below `1e-12 · ‖M‖_F`. Matrices here are small (a few
//! hundred rows at most), where Jacobi is simple, backward-stable, and
//! dependency-free. Eigenvalues of integer matrices are kept in floating
//! point; the recorded residual makes the accuracy auditable.

use crate::graph::{Graph, VertexSet};
use crate::math;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Relative off-diagonal tolerance for the Jacobi sweep.
pub const JACOBI_TOL: f64 = 1e-12;
/// Sweep cap; hitting it signals a solver bug, not bad input.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Errors from spectral computations.
#[derive(Debug, Clone, PartialEq)]
pub enum SpectraError {
    /// The Jacobi sweep cap was reached before convergence.
    NoConvergence { sweeps: usize },
    /// The quantity needs at least two vertices.
    TooSmall,
    /// The pencil `aD + bA` requires `b > 0` and `a ≥ −b`.
    PencilDomain { a: f64, b: f64 },
    /// The Fiedler quotient is undefined for constant vectors.
    ConstantVector,
    /// The subset must be nonempty and proper.
    EmptyOrFull,
    /// `S` must be a vertex cut with `X` a union of components of `G − S`
    /// and the remainder nonempty.
    NotACut,
    /// The vector length must equal the graph order.
    DimensionMismatch { expected: usize, got: usize },
}

impl fmt::Display for SpectraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NoConvergence { sweeps } => {
                write!(f, "Jacobi failed to converge within {sweeps} sweeps")
            }
            Self::TooSmall => write!(f, "graph must have at least two vertices"),
            Self::PencilDomain { a, b } => {
                write!(f, "pencil needs b > 0 and a >= -b, got a={a}, b={b}")
            }
            Self::ConstantVector => write!(f, "vector must be non-constant"),
            Self::EmptyOrFull => write!(f, "subset must be nonempty and proper"),
            Self::NotACut => write!(f, "S must cut the graph with X a component union"),
            Self::DimensionMismatch { expected, got } => {
                write!(f, "vector length {got} does not match order {expected}")
            }
        }
    }
}

impl core::error::Error for SpectraError {}

/// A dense real symmetric matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl SymmetricMatrix {
    /// The zero matrix of dimension `n`.
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            entries: vec![0.0; n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    /// Sets `(i, j)` and `(j, i)` together, preserving exact symmetry.
    pub fn set_sym(&mut self, i: usize, j: usize, value: f64) {
        self.entries[i * self.n + j] = value;
        self.entries[j * self.n + i] = value;
    }

    /// Frobenius norm.
    pub fn frobenius(&self) -> f64 {
        math::sqrt(self.entries.iter().map(|&x| x * x).sum())
    }

    /// Matrix–vector product `M·x` written into `out`.
    fn mul_vec(&self, x: &[f64], out: &mut [f64]) {
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.entries[i * self.n..(i + 1) * self.n]
                .iter()
                .zip(x)
                .map(|(&a, &b)| a * b)
                .sum();
        }
    }
}

impl fmt::Debug for SymmetricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SymmetricMatrix({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                write!(f, " {:7.3}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The Laplacian `L = D − A`.
pub fn laplacian(g: &Graph) -> SymmetricMatrix {
    pencil_unchecked(g, 1.0, -1.0)
}

/// The adjacency matrix `A`.
pub fn adjacency(g: &Graph) -> SymmetricMatrix {
    pencil_unchecked(g, 0.0, 1.0)
}

/// The signless Laplacian `Q = D + A`.
pub fn signless_laplacian(g: &Graph) -> SymmetricMatrix {
    pencil_unchecked(g, 1.0, 1.0)
}

/// The pencil `aD + bA` for `b > 0` and `a ≥ −b`.
pub fn pencil(g: &Graph, a: f64, b: f64) -> Result<SymmetricMatrix, SpectraError> {
    if !(b > 0.0 && a >= -b) {
        return Err(SpectraError::PencilDomain { a, b });
    }
    Ok(pencil_unchecked(g, a, b))
}

fn pencil_unchecked(g: &Graph, a: f64, b: f64) -> SymmetricMatrix {
    let n = g.order();
    let mut m = SymmetricMatrix::zero(n);
    for v in 0..n {
        m.set_sym(v, v, a * g.degree(v) as f64);
    }
    for (u, v) in g.edges() {
        m.set_sym(u, v, b);
    }
    m
}

/// Eigenvalues of a real symmetric matrix, sorted descending, with solver
/// diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Eigenvalues in descending order.
    pub values: Vec<f64>,
    /// `max_i ‖M v_i − λ_i v_i‖_∞` over all eigenpairs.
    pub residual: f64,
    /// Number of Jacobi sweeps performed.
    pub sweeps: usize,
}

/// Full eigendecomposition; column `i` of `vectors` pairs with
/// `values[i]`.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    vectors: Vec<f64>, // column-major n x n
    pub residual: f64,
    pub sweeps: usize,
    n: usize,
}

impl EigenDecomposition {
    /// The eigenvector paired with `values[i]`.
    pub fn vector(&self, i: usize) -> &[f64] {
        &self.vectors[i * self.n..(i + 1) * self.n]
    }

    pub fn spectrum(&self) -> Spectrum {
        Spectrum {
            values: self.values.clone(),
            residual: self.residual,
            sweeps: self.sweeps,
        }
    }
}

/// All eigenvalues of a symmetric matrix via cyclic Jacobi.
pub fn eigenvalues_sym(m: &SymmetricMatrix) -> Result<Spectrum, SpectraError> {
    eigen_sym(m).map(|d| d.spectrum())
}

/// Full symmetric eigendecomposition via cyclic Jacobi.
pub fn eigen_sym(m: &SymmetricMatrix) -> Result<EigenDecomposition, SpectraError> {
    let n = m.dim();
    if n == 0 {
        return Ok(EigenDecomposition {
            values: Vec::new(),
            vectors: Vec::new(),
            residual: 0.0,
            sweeps: 0,
            n,
        });
    }
    let mut a = m.entries.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let tol = JACOBI_TOL * m.frobenius();
    let mut sweeps = 0;
    while off_norm(&a, n) > tol {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(SpectraError::NoConvergence { sweeps });
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, &mut v, n, p, q);
            }
        }
        sweeps += 1;
    }

    // Sort eigenpairs by descending eigenvalue.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[j * n + j]
            .partial_cmp(&a[i * n + i])
            .expect("eigenvalues are finite")
    });
    let values: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let mut vectors = vec![0.0; n * n];
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            vectors[col * n + row] = v[row * n + src];
        }
    }

    // Residual check over every eigenpair.
    let mut residual = 0.0f64;
    let mut mv = vec![0.0; n];
    for (i, &lambda) in values.iter().enumerate() {
        let x = &vectors[i * n..(i + 1) * n];
        m.mul_vec(x, &mut mv);
        for (r, &xr) in mv.iter().zip(x) {
            let err = math::abs(r - lambda * xr);
            if err > residual {
                residual = err;
            }
        }
    }

    Ok(EigenDecomposition {
        values,
        vectors,
        residual,
        sweeps,
        n,
    })
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            let x = a[p * n + q];
            sum += 2.0 * x * x;
        }
    }
    math::sqrt(sum)
}

/// One Jacobi rotation annihilating `a[p][q]`.
fn rotate(a: &mut [f64], v: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
    let t = if theta >= 0.0 {
        1.0 / (theta + math::sqrt(1.0 + theta * theta))
    } else {
        -1.0 / (-theta + math::sqrt(1.0 + theta * theta))
    };
    let c = 1.0 / math::sqrt(1.0 + t * t);
    let s = t * c;
    let tau = s / (1.0 + c);

    let app = a[p * n + p];
    let aqq = a[q * n + q];
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for j in 0..n {
        if j == p || j == q {
            continue;
        }
        let ajp = a[j * n + p];
        let ajq = a[j * n + q];
        a[j * n + p] = ajp - s * (ajq + tau * ajp);
        a[p * n + j] = a[j * n + p];
        a[j * n + q] = ajq + s * (ajp - tau * ajq);
        a[q * n + j] = a[j * n + q];
    }
    for j in 0..n {
        let vjp = v[j * n + p];
        let vjq = v[j * n + q];
        v[j * n + p] = vjp - s * (vjq + tau * vjp);
        v[j * n + q] = vjq + s * (vjp - tau * vjq);
    }
}

/// Algebraic connectivity `μ_{n−1}(G)`: the second-smallest Laplacian
/// eigenvalue. Zero (within tolerance) exactly when the graph is
/// disconnected.
pub fn algebraic_connectivity(g: &Graph) -> Result<f64, SpectraError> {
    let n = g.order();
    if n < 2 {
        return Err(SpectraError::TooSmall);
    }
    Ok(eigenvalues_sym(&laplacian(g))?.values[n - 2])
}

/// Laplacian spectral radius `μ₁(G)`.
pub fn laplacian_radius(g: &Graph) -> Result<f64, SpectraError> {
    require_two(g)?;
    Ok(eigenvalues_sym(&laplacian(g))?.values[0])
}

/// Second-largest adjacency eigenvalue `λ₂(G)`.
pub fn lambda2(g: &Graph) -> Result<f64, SpectraError> {
    require_two(g)?;
    Ok(eigenvalues_sym(&adjacency(g))?.values[1])
}

/// Second-largest signless Laplacian eigenvalue `q₂(G)`.
pub fn q2(g: &Graph) -> Result<f64, SpectraError> {
    require_two(g)?;
    Ok(eigenvalues_sym(&signless_laplacian(g))?.values[1])
}

/// Second-largest eigenvalue of the pencil `aD + bA`.
pub fn pencil_lambda2(g: &Graph, a: f64, b: f64) -> Result<f64, SpectraError> {
    require_two(g)?;
    Ok(eigenvalues_sym(&pencil(g, a, b)?)?.values[1])
}

fn require_two(g: &Graph) -> Result<(), SpectraError> {
    if g.order() < 2 {
        Err(SpectraError::TooSmall)
    } else {
        Ok(())
    }
}

/// The four spectral quantities the certifier consumes, from one solve of
/// each matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralProfile {
    pub mu1: f64,
    pub mu_n1: f64,
    pub lambda2: f64,
    pub q2: f64,
    /// Largest eigenpair residual across the three solves.
    pub residual: f64,
}

impl SpectralProfile {
    pub fn compute(g: &Graph) -> Result<Self, SpectraError> {
        require_two(g)?;
        let n = g.order();
        let l = eigenvalues_sym(&laplacian(g))?;
        let a = eigenvalues_sym(&adjacency(g))?;
        let q = eigenvalues_sym(&signless_laplacian(g))?;
        Ok(Self {
            mu1: l.values[0],
            mu_n1: l.values[n - 2],
            lambda2: a.values[1],
            q2: q.values[1],
            residual: l.residual.max(a.residual).max(q.residual),
        })
    }
}

/// The Fiedler quotient `n·Σ_{ij∈E}(x_i−x_j)² / Σ_{i<j}(x_i−x_j)²`, whose
/// minimum over non-constant vectors is `μ_{n−1}(G)`.
pub fn fiedler_quotient(g: &Graph, x: &[f64]) -> Result<f64, SpectraError> {
    let n = g.order();
    if x.len() != n {
        return Err(SpectraError::DimensionMismatch {
            expected: n,
            got: x.len(),
        });
    }
    if x.iter().all(|&v| v == x[0]) {
        return Err(SpectraError::ConstantVector);
    }
    let numerator: f64 = g
        .edges()
        .map(|(u, v)| {
            let d = x[u] - x[v];
            d * d
        })
        .sum();
    // Σ_{i<j}(x_i−x_j)² = n·Σx² − (Σx)²
    let sum: f64 = x.iter().sum();
    let sum_sq: f64 = x.iter().map(|&v| v * v).sum();
    let denominator = (n as f64) * sum_sq - sum * sum;
    Ok((n as f64) * numerator / denominator)
}

/// The ±1 test-vector bound `μ_{n−1}(G) ≤ n·d(X)/(|X||Y|)` for a nonempty
/// proper subset `X` with `Y = V∖X`.
pub fn cut_quotient_bound(g: &Graph, x: &VertexSet) -> Result<f64, SpectraError> {
    let n = g.order();
    let size = x.len();
    if size == 0 || size >= n {
        return Err(SpectraError::EmptyOrFull);
    }
    let d = g.cut_degree(x).expect("proper nonempty subset");
    Ok(n as f64 * d as f64 / (size as f64 * (n - size) as f64))
}

/// The (1, 0, −1) test-vector bound
/// `μ_{n−1}(G) ≤ n·d(S)/(n(n−|S|) − (|X|−|Y|)²)` for a vertex cut `S`,
/// `X` a union of components of `G − S`, and `Y = V∖(S∪X)` nonempty.
pub fn vertex_cut_quotient_bound(
    g: &Graph,
    s: &VertexSet,
    x: &VertexSet,
) -> Result<f64, SpectraError> {
    let n = g.order();
    if s.is_empty() || x.is_empty() || !s.is_disjoint(x) {
        return Err(SpectraError::NotACut);
    }
    let mut sx = s.clone();
    sx.union_with(x);
    let y = sx.complement();
    if y.is_empty() {
        return Err(SpectraError::NotACut);
    }
    // X must be a union of components of G − S: no edge may leave X for Y.
    for v in x.iter() {
        for &w in g.neighbors(v) {
            if y.contains(w) {
                return Err(SpectraError::NotACut);
            }
        }
    }
    let ds = g.cut_degree(s).expect("S is nonempty and proper") as f64;
    let diff = x.len() as f64 - y.len() as f64;
    let denominator = n as f64 * (n - s.len()) as f64 - diff * diff;
    Ok(n as f64 * ds / denominator)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    const TOL: f64 = 1e-8;

    fn assert_close(a: f64, b: f64) {
        assert!((a - b).abs() < TOL, "{a} vs {b}");
    }

    fn k(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((5 + i, 5 + (i + 2) % 5));
            e.push((i, i + 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    #[test]
    fn matrices_of_k2() {
        let k2 = k(2);
        let l = laplacian(&k2);
        assert_eq!(
            [l.get(0, 0), l.get(0, 1), l.get(1, 0), l.get(1, 1)],
            [1.0, -1.0, -1.0, 1.0]
        );
        let q = signless_laplacian(&k2);
        assert_eq!(
            [q.get(0, 0), q.get(0, 1), q.get(1, 0), q.get(1, 1)],
            [1.0, 1.0, 1.0, 1.0]
        );
    }

    #[test]
    fn pencil_identities() {
        let g = petersen();
        assert_eq!(pencil(&g, 1.0, 1.0).unwrap(), signless_laplacian(&g));
        assert_eq!(pencil(&g, 0.0, 1.0).unwrap(), adjacency(&g));
        assert!(matches!(
            pencil(&g, 1.0, 0.0),
            Err(SpectraError::PencilDomain { .. })
        ));
        assert!(matches!(
            pencil(&g, -2.0, 1.0),
            Err(SpectraError::PencilDomain { .. })
        ));
    }

    #[test]
    fn laplacian_spectrum_k4() {
        let s = eigenvalues_sym(&laplacian(&k(4))).unwrap();
        for (got, want) in s.values.iter().zip([4.0, 4.0, 4.0, 0.0]) {
            assert_close(*got, want);
        }
        assert!(s.residual < 1e-10);
    }

    #[test]
    fn laplacian_spectrum_p3() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let s = eigenvalues_sym(&laplacian(&p3)).unwrap();
        for (got, want) in s.values.iter().zip([3.0, 1.0, 0.0]) {
            assert_close(*got, want);
        }
    }

    #[test]
    fn laplacian_spectrum_c4() {
        let s = eigenvalues_sym(&laplacian(&cycle(4))).unwrap();
        for (got, want) in s.values.iter().zip([4.0, 2.0, 2.0, 0.0]) {
            assert_close(*got, want);
        }
    }

    #[test]
    fn named_quantities_k4() {
        let k4 = k(4);
        assert_close(laplacian_radius(&k4).unwrap(), 4.0);
        assert_close(lambda2(&k4).unwrap(), -1.0);
        assert_close(q2(&k4).unwrap(), 2.0);
        assert_close(algebraic_connectivity(&k4).unwrap(), 4.0);
        assert_close(pencil_lambda2(&k4, 1.0, 1.0).unwrap(), q2(&k4).unwrap());
    }

    #[test]
    fn lambda2_c4_is_zero() {
        assert_close(lambda2(&cycle(4)).unwrap(), 0.0);
    }

    #[test]
    fn algebraic_connectivity_detects_disconnection() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_close(algebraic_connectivity(&g).unwrap(), 0.0);
    }

    #[test]
    fn petersen_profile() {
        let p = SpectralProfile::compute(&petersen()).unwrap();
        assert_close(p.mu1, 5.0);
        assert_close(p.mu_n1, 2.0);
        assert_close(p.lambda2, 1.0);
        assert_close(p.q2, 4.0);
    }

    #[test]
    fn too_small_graphs_rejected() {
        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert!(matches!(
            algebraic_connectivity(&k1),
            Err(SpectraError::TooSmall)
        ));
    }

    #[test]
    fn fiedler_quotient_hand_values() {
        let k2 = k(2);
        assert_close(fiedler_quotient(&k2, &[1.0, -1.0]).unwrap(), 2.0);
        // C4 with the two +1s adjacent
        let c4 = cycle(4);
        assert_close(fiedler_quotient(&c4, &[1.0, 1.0, -1.0, -1.0]).unwrap(), 2.0);
        assert!(matches!(
            fiedler_quotient(&c4, &[2.0, 2.0, 2.0, 2.0]),
            Err(SpectraError::ConstantVector)
        ));
        assert!(matches!(
            fiedler_quotient(&c4, &[1.0, 2.0]),
            Err(SpectraError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn fiedler_vector_attains_minimum() {
        for g in [petersen(), cycle(5), k(4)] {
            let n = g.order();
            let d = eigen_sym(&laplacian(&g)).unwrap();
            let mu = d.values[n - 2];
            let quotient = fiedler_quotient(&g, d.vector(n - 2)).unwrap();
            assert!((quotient - mu).abs() < 1e-8, "{quotient} vs {mu}");
        }
    }

    #[test]
    fn cut_quotient_hand_values() {
        let k4 = k(4);
        let x = VertexSet::from_members(4, &[0]);
        assert_close(cut_quotient_bound(&k4, &x).unwrap(), 4.0);

        let c6 = cycle(6);
        let x = VertexSet::from_members(6, &[0, 1, 2]);
        assert_close(cut_quotient_bound(&c6, &x).unwrap(), 4.0 / 3.0);
        assert!(cut_quotient_bound(&c6, &x).unwrap() >= algebraic_connectivity(&c6).unwrap());

        assert!(matches!(
            cut_quotient_bound(&k4, &VertexSet::empty(4)),
            Err(SpectraError::EmptyOrFull)
        ));
    }

    #[test]
    fn vertex_cut_quotient_hand_values() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let s = VertexSet::from_members(3, &[1]);
        let x = VertexSet::from_members(3, &[0]);
        assert_close(vertex_cut_quotient_bound(&p3, &s, &x).unwrap(), 1.0);

        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = VertexSet::from_members(4, &[0]);
        let x = VertexSet::from_members(4, &[1]);
        assert_close(
            vertex_cut_quotient_bound(&star, &s, &x).unwrap(),
            12.0 / 11.0,
        );

        // X adjacent to Y is not a component union
        let c4 = cycle(4);
        let s = VertexSet::from_members(4, &[0]);
        let x = VertexSet::from_members(4, &[1]);
        assert!(matches!(
            vertex_cut_quotient_bound(&c4, &s, &x),
            Err(SpectraError::NotACut)
        ));
    }

    #[test]
    fn trace_identity_on_samples() {
        for g in [k(4), cycle(5), petersen()] {
            let s = eigenvalues_sym(&laplacian(&g)).unwrap();
            let total: f64 = s.values.iter().sum();
            assert!((total - 2.0 * g.size() as f64).abs() < 1e-8);
        }
    }
}
