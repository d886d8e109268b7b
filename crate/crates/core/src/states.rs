//! Two-qubit states in the fixed product basis `ee, eg, ge, gg`.
//!
//! Conventions: `|e> = (1, 0)`, `|g> = (0, 1)`, `sigma_z |e> = +|e>`, and
//! `sigma_- = |g><e|` lowers the excited state. The first tensor factor is
//! atom A, the second atom B.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eigenvalues, partial_trace, tensor_product, ComplexMatrix, RealMatrix3, Subsystem,
    C64, TOL_HERM,
};

/// Default tolerance on negative eigenvalues when validating a state.
pub const TOL_PSD: f64 = 1e-9;

/// Tolerance on `tr rho = 1`.
pub const TOL_TRACE: f64 = 1e-10;

/// Tolerance on probability normalization.
pub const TOL_PROB: f64 = 1e-12;

/// Labels of the product basis, in index order.
pub const BASIS_LABELS: [&str; 4] = ["ee", "eg", "ge", "gg"];

const fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub const KET_E: [C64; 2] = [c(1.0, 0.0), c(0.0, 0.0)];
pub const KET_G: [C64; 2] = [c(0.0, 0.0), c(1.0, 0.0)];
pub const KET_PLUS: [C64; 2] = [c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)];
pub const KET_MINUS: [C64; 2] = [c(FRAC_1_SQRT_2, 0.0), c(-FRAC_1_SQRT_2, 0.0)];

/// Pauli matrices `[sigma_x, sigma_y, sigma_z]`.
pub fn pauli() -> [ComplexMatrix; 3] {
    [
        ComplexMatrix::from_rows(&[[c(0., 0.), c(1., 0.)], [c(1., 0.), c(0., 0.)]]).unwrap(),
        ComplexMatrix::from_rows(&[[c(0., 0.), c(0., -1.)], [c(0., 1.), c(0., 0.)]]).unwrap(),
        ComplexMatrix::from_rows(&[[c(1., 0.), c(0., 0.)], [c(0., 0.), c(-1., 0.)]]).unwrap(),
    ]
}

/// `sigma_- = |g><e|`
pub fn sigma_minus() -> ComplexMatrix {
    ComplexMatrix::outer(&KET_G, &KET_E)
}

/// `sigma_+ = |e><g|`
pub fn sigma_plus() -> ComplexMatrix {
    ComplexMatrix::outer(&KET_E, &KET_G)
}

/// Projector onto the ground state of one atom.
pub fn ground_projector() -> ComplexMatrix {
    ComplexMatrix::outer(&KET_G, &KET_G)
}

/// `sigma_j (x) sigma_k` for j, k in 0..4 where index 0 is the identity.
fn pauli_products() -> &'static [[ComplexMatrix; 4]; 4] {
    static PRODUCTS: OnceLock<[[ComplexMatrix; 4]; 4]> = OnceLock::new();
    PRODUCTS.get_or_init(|| {
        let [x, y, z] = pauli();
        let basis = [ComplexMatrix::identity(2), x, y, z];
        std::array::from_fn(|j| {
            std::array::from_fn(|k| tensor_product(&basis[j], &basis[k]).unwrap())
        })
    })
}

/// Re tr(rho m) without forming the product.
fn expectation(rho: &ComplexMatrix, m: &ComplexMatrix) -> f64 {
    let mut acc = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            let mji = m[(j, i)];
            if mji.re != 0.0 || mji.im != 0.0 {
                acc += (rho[(i, j)] * mji).re;
            }
        }
    }
    acc
}

/// A validated two-qubit density matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix4 {
    m: ComplexMatrix,
}

impl DensityMatrix4 {
    /// Validates `m` with the default tolerances.
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        Self::with_tolerance(m, TOL_PSD)
    }

    /// Validates `m`, accepting eigenvalues down to `-tol_psd`.
    pub fn with_tolerance(m: ComplexMatrix, tol_psd: f64) -> Result<Self> {
        let state = Self { m };
        state.validate(tol_psd)?;
        Ok(state)
    }

    /// Wraps a matrix without checking it. Used for states produced by
    /// trace-preserving maps, where validation would only repeat work.
    pub fn from_matrix_unchecked(m: ComplexMatrix) -> Self {
        assert!(m.rows() == 4 && m.cols() == 4, "expected a 4x4 matrix");
        Self { m }
    }

    /// Checks shape, finiteness, Hermiticity, unit trace and positivity.
    pub fn validate(&self, tol_psd: f64) -> Result<()> {
        let m = &self.m;
        if m.rows() != 4 || m.cols() != 4 {
            return Err(Error::DimensionMismatch {
                expected: "4x4".into(),
                got: format!("{}x{}", m.rows(), m.cols()),
            });
        }
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        let deviation = m.hermiticity_deviation();
        if deviation > TOL_HERM {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = m.trace().re;
        if (trace - 1.0).abs() > TOL_TRACE {
            return Err(Error::TraceNotOne { trace });
        }
        let min_eigenvalue = *hermitian_eigenvalues(m)?.last().unwrap();
        if min_eigenvalue < -tol_psd {
            return Err(Error::NotPositive { min_eigenvalue });
        }
        Ok(())
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.m
    }

    /// Matrix element by zero-based basis index.
    pub fn element(&self, i: usize, j: usize) -> C64 {
        self.m[(i, j)]
    }

    pub fn maximally_mixed() -> Self {
        Self {
            m: ComplexMatrix::identity(4).scale_real(0.25),
        }
    }

    /// |psi><psi| for a (not necessarily normalized) two-qubit ket.
    pub fn pure(ket: &[C64; 4]) -> Result<Self> {
        let norm_sq: f64 = ket.iter().map(|z| z.norm_sqr()).sum();
        if norm_sq <= 0.0 || !norm_sq.is_finite() {
            return Err(Error::InvalidParameter("zero or non-finite ket".into()));
        }
        let m = ComplexMatrix::outer(ket, ket).scale_real(1.0 / norm_sq);
        Self::new(m)
    }

    /// `(|ee> + |gg>)/sqrt 2`
    pub fn bell_phi_plus() -> Self {
        let s = FRAC_1_SQRT_2;
        Self::pure(&[c(s, 0.), c(0., 0.), c(0., 0.), c(s, 0.)]).unwrap()
    }

    /// a (x) b for two qubit density matrices.
    pub fn product(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Self> {
        Self::new(tensor_product(a, b)?)
    }

    pub fn marginal(&self, keep: Subsystem) -> ComplexMatrix {
        partial_trace(&self.m, keep).unwrap()
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.m.symmetrized()).unwrap()
    }

    /// tr rho^2
    pub fn purity(&self) -> f64 {
        self.m.entries().map(|z| z.norm_sqr()).sum()
    }

    /// Exchanges the roles of A and B.
    pub fn swapped(&self) -> Self {
        Self {
            m: swap_subsystems(&self.m),
        }
    }

    /// (u (x) v) rho (u (x) v)†
    pub fn conjugated_by(&self, u: &ComplexMatrix, v: &ComplexMatrix) -> Result<Self> {
        let w = tensor_product(u, v)?;
        Ok(Self {
            m: (w * self.m) * w.adjoint(),
        })
    }
}

/// S m S with S the swap of the two qubits.
pub fn swap_subsystems(m: &ComplexMatrix) -> ComplexMatrix {
    const PERM: [usize; 4] = [0, 2, 1, 3];
    let mut out = ComplexMatrix::zeros(4, 4);
    for i in 0..4 {
        for j in 0..4 {
            out[(PERM[i], PERM[j])] = m[(i, j)];
        }
    }
    out
}

/// A point in the closed unit ball.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochVector([f64; 3]);

impl BlochVector {
    pub fn new(a: [f64; 3]) -> Result<Self> {
        if a.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter("non-finite Bloch vector".into()));
        }
        let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1.0 + 1e-12 {
            return Err(Error::OutsideBlochBall { norm });
        }
        Ok(Self(a))
    }

    /// Unit vector `(cos angle, sin angle, 0)` in the equatorial plane.
    pub fn planar(angle: f64) -> Self {
        Self([angle.cos(), angle.sin(), 0.0])
    }

    pub fn components(&self) -> [f64; 3] {
        self.0
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn neg(&self) -> Self {
        Self(self.0.map(|x| -x))
    }

    /// Euclidean distance to another Bloch vector.
    pub fn distance(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }
}

/// The qubit state `(1 + a . sigma)/2`.
pub fn qubit_from_bloch(a: &BlochVector) -> ComplexMatrix {
    let [x, y, z] = a.0;
    ComplexMatrix::from_rows(&[
        [c(0.5 * (1.0 + z), 0.0), c(0.5 * x, -0.5 * y)],
        [c(0.5 * x, 0.5 * y), c(0.5 * (1.0 - z), 0.0)],
    ])
    .unwrap()
}

/// The orthogonal projectors `P1(theta, phi)`, `P2(theta, phi)` of a von
/// Neumann measurement on one qubit. `P1` has Bloch vector
/// `(sin 2θ cos φ, sin 2θ sin φ, cos 2θ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProjectorPair {
    pub theta: f64,
    pub phi: f64,
}

impl ProjectorPair {
    pub fn new(theta: f64, phi: f64) -> Self {
        Self { theta, phi }
    }

    /// The pair whose first projector points along `n` (normalized internally).
    pub fn from_direction(n: [f64; 3]) -> Self {
        let norm = n.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Self::new(0.0, 0.0);
        }
        let z = (n[2] / norm).clamp(-1.0, 1.0);
        Self::new(0.5 * z.acos(), n[1].atan2(n[0]))
    }

    /// Bloch vector of `P1`; `P2` points the opposite way.
    pub fn direction(&self) -> [f64; 3] {
        let s = (2.0 * self.theta).sin();
        [
            s * self.phi.cos(),
            s * self.phi.sin(),
            (2.0 * self.theta).cos(),
        ]
    }

    /// Orthonormal kets with `P_k = |psi_k><psi_k|`.
    pub fn kets(&self) -> [[C64; 2]; 2] {
        let (s, co) = self.theta.sin_cos();
        let e = C64::from_polar(1.0, self.phi);
        [[c(co, 0.0), e * s], [-e.conj() * s, c(co, 0.0)]]
    }

    pub fn projectors(&self) -> (ComplexMatrix, ComplexMatrix) {
        let (cos2, sin2) = (self.theta.cos().powi(2), self.theta.sin().powi(2));
        let off = C64::from_polar(0.5 * (2.0 * self.theta).sin(), -self.phi);
        let p1 =
            ComplexMatrix::from_rows(&[[c(cos2, 0.0), off], [off.conj(), c(sin2, 0.0)]]).unwrap();
        let p2 =
            ComplexMatrix::from_rows(&[[c(sin2, 0.0), -off], [-off.conj(), c(cos2, 0.0)]]).unwrap();
        (p1, p2)
    }
}

fn check_probabilities(ps: &[f64]) -> Result<()> {
    if let Some(p) = ps.iter().find(|p| !p.is_finite() || **p < 0.0) {
        return Err(Error::InvalidDistribution(format!(
            "entry {p} is not a probability"
        )));
    }
    let sum: f64 = ps.iter().sum();
    if (sum - 1.0).abs() > TOL_PROB {
        return Err(Error::InvalidDistribution(format!("entries sum to {sum}")));
    }
    Ok(())
}

/// Joint distribution of two ±1-valued variables; `p[j][k]` is the weight
/// of outcome `(j, k)` with index 0 meaning +1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JointDistribution2x2 {
    p: [[f64; 2]; 2],
}

impl JointDistribution2x2 {
    pub fn new(p11: f64, p12: f64, p21: f64, p22: f64) -> Result<Self> {
        check_probabilities(&[p11, p12, p21, p22])?;
        Ok(Self {
            p: [[p11, p12], [p21, p22]],
        })
    }

    pub fn uniform() -> Self {
        Self { p: [[0.25; 2]; 2] }
    }

    pub fn get(&self, j: usize, k: usize) -> f64 {
        self.p[j][k]
    }

    /// `[p11, p12, p21, p22]`
    pub fn as_array(&self) -> [f64; 4] {
        [self.p[0][0], self.p[0][1], self.p[1][0], self.p[1][1]]
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BinaryDistribution {
    pub p1: f64,
    pub p2: f64,
}

impl BinaryDistribution {
    pub fn new(p1: f64, p2: f64) -> Result<Self> {
        check_probabilities(&[p1, p2])?;
        Ok(Self { p1, p2 })
    }

    pub fn fair() -> Self {
        Self { p1: 0.5, p2: 0.5 }
    }
}

/// `rho_cc = sum_jk p_jk P_j (x) P_k`
pub fn cc_state(
    p: &JointDistribution2x2,
    pair_a: &ProjectorPair,
    pair_b: &ProjectorPair,
) -> DensityMatrix4 {
    let (a1, a2) = pair_a.projectors();
    let (b1, b2) = pair_b.projectors();
    let pa = [a1, a2];
    let pb = [b1, b2];
    let mut m = ComplexMatrix::zeros(4, 4);
    for (j, aj) in pa.iter().enumerate() {
        for (k, bk) in pb.iter().enumerate() {
            m = m + tensor_product(aj, bk).unwrap().scale_real(p.get(j, k));
        }
    }
    DensityMatrix4::new(m).expect("a convex mixture of product projectors is a state")
}

/// `rho_cq = p1 P1 (x) rho_1 + p2 P2 (x) rho_2` with `rho_k = (1 + a_k . sigma)/2`.
pub fn cq_state(
    p: &BinaryDistribution,
    pair_a: &ProjectorPair,
    a1: &BlochVector,
    a2: &BlochVector,
) -> DensityMatrix4 {
    let (p1, p2) = pair_a.projectors();
    let m = tensor_product(&p1, &qubit_from_bloch(a1))
        .unwrap()
        .scale_real(p.p1)
        + tensor_product(&p2, &qubit_from_bloch(a2))
            .unwrap()
            .scale_real(p.p2);
    DensityMatrix4::new(m).expect("a convex mixture of product states is a state")
}

/// `rho_0 = (|+><+| (x) |-><-| + |-><-| (x) |+><+|)/2`
pub fn rho_zero() -> DensityMatrix4 {
    let pp = ComplexMatrix::outer(&KET_PLUS, &KET_PLUS);
    let mm = ComplexMatrix::outer(&KET_MINUS, &KET_MINUS);
    let m = (tensor_product(&pp, &mm).unwrap() + tensor_product(&mm, &pp).unwrap()).scale_real(0.5);
    DensityMatrix4::new(m).unwrap()
}

/// Local Bloch vectors and correlation tensor of a two-qubit state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PauliDecomposition {
    /// `x_k = tr(rho sigma_k (x) 1)`
    pub x: [f64; 3],
    /// `y_k = tr(rho 1 (x) sigma_k)`
    pub y: [f64; 3],
    /// `t_jk = tr(rho sigma_j (x) sigma_k)`
    pub t: RealMatrix3,
}

impl PauliDecomposition {
    /// `(1 (x) 1 + x.sigma (x) 1 + 1 (x) y.sigma + sum t_jk sigma_j (x) sigma_k)/4`
    pub fn reconstruct(&self) -> ComplexMatrix {
        let prods = pauli_products();
        let mut m = prods[0][0];
        for k in 0..3 {
            m = m + prods[k + 1][0].scale_real(self.x[k]) + prods[0][k + 1].scale_real(self.y[k]);
            for l in 0..3 {
                m = m + prods[k + 1][l + 1].scale_real(self.t.0[k][l]);
            }
        }
        m.scale_real(0.25)
    }
}

pub fn pauli_decomposition(rho: &DensityMatrix4) -> PauliDecomposition {
    let prods = pauli_products();
    let m = rho.matrix();
    let mut d = PauliDecomposition {
        x: [0.0; 3],
        y: [0.0; 3],
        t: RealMatrix3::zeros(),
    };
    for k in 0..3 {
        d.x[k] = expectation(m, &prods[k + 1][0]);
        d.y[k] = expectation(m, &prods[0][k + 1]);
        for l in 0..3 {
            d.t.0[k][l] = expectation(m, &prods[k + 1][l + 1]);
        }
    }
    d
}

/// Deterministic generator used by all seeded samplers.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian_complex<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    c(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// `G G† / tr(G G†)` for a complex Gaussian 4 x rank matrix `G`.
pub fn sample_density_matrix<R: Rng + ?Sized>(rng: &mut R, rank: usize) -> Result<DensityMatrix4> {
    if !(1..=4).contains(&rank) {
        return Err(Error::InvalidRank(rank));
    }
    let mut g = ComplexMatrix::zeros(4, rank);
    for i in 0..4 {
        for j in 0..rank {
            g[(i, j)] = gaussian_complex(rng);
        }
    }
    let m = g * g.adjoint();
    let tr = m.trace().re;
    Ok(DensityMatrix4::from_matrix_unchecked(
        m.scale_real(1.0 / tr).symmetrized(),
    ))
}

pub fn random_density_matrix(seed: u64, rank: usize) -> Result<DensityMatrix4> {
    sample_density_matrix(&mut rng_from_seed(seed), rank)
}

/// Uniform point on the probability simplex with `n` vertices.
pub fn sample_simplex<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    let mut cuts: Vec<f64> = (0..n.saturating_sub(1))
        .map(|_| rng.random::<f64>())
        .collect();
    cuts.sort_by(f64::total_cmp);
    let mut out = Vec::with_capacity(n);
    let mut prev = 0.0;
    for &x in &cuts {
        out.push(x - prev);
        prev = x;
    }
    out.push(1.0 - prev);
    out
}

/// Uniform direction on the unit sphere.
pub fn sample_unit_vector<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    loop {
        let v: [f64; 3] = std::array::from_fn(|_| rng.sample(StandardNormal));
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-12 {
            return v.map(|x| x / n);
        }
    }
}

/// Projector pair with θ uniform on [0, π/2] and φ uniform on [0, 2π).
pub fn sample_projector_pair<R: Rng + ?Sized>(rng: &mut R) -> ProjectorPair {
    ProjectorPair::new(
        rng.random::<f64>() * PI / 2.0,
        rng.random::<f64>() * 2.0 * PI,
    )
}

/// Uniform direction with radius uniform in [0, 1].
pub fn sample_bloch_vector<R: Rng + ?Sized>(rng: &mut R) -> BlochVector {
    let r: f64 = rng.random();
    BlochVector(sample_unit_vector(rng).map(|x| x * r))
}

/// Parameters of a sampled classical-classical state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CcParams {
    pub p: JointDistribution2x2,
    pub pair_a: ProjectorPair,
    pub pair_b: ProjectorPair,
}

/// Parameters of a sampled classical-quantum state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CqParams {
    pub p: BinaryDistribution,
    pub pair_a: ProjectorPair,
    pub a1: BlochVector,
    pub a2: BlochVector,
}

pub fn sample_cc_params<R: Rng + ?Sized>(rng: &mut R) -> CcParams {
    let w = sample_simplex(rng, 4);
    // Renormalize so the sum is exactly within TOL_PROB after rounding.
    let s: f64 = w.iter().sum();
    let p = JointDistribution2x2::new(w[0] / s, w[1] / s, w[2] / s, w[3] / s).unwrap();
    CcParams {
        p,
        pair_a: sample_projector_pair(rng),
        pair_b: sample_projector_pair(rng),
    }
}

pub fn sample_cq_params<R: Rng + ?Sized>(rng: &mut R) -> CqParams {
    let p1: f64 = rng.random();
    CqParams {
        p: BinaryDistribution::new(p1, 1.0 - p1).unwrap(),
        pair_a: sample_projector_pair(rng),
        a1: sample_bloch_vector(rng),
        a2: sample_bloch_vector(rng),
    }
}

pub fn random_cc_params(seed: u64) -> CcParams {
    sample_cc_params(&mut rng_from_seed(seed))
}

pub fn random_cq_params(seed: u64) -> CqParams {
    sample_cq_params(&mut rng_from_seed(seed))
}

pub fn random_cc_state(seed: u64) -> DensityMatrix4 {
    let q = random_cc_params(seed);
    cc_state(&q.p, &q.pair_a, &q.pair_b)
}

pub fn random_cq_state(seed: u64) -> DensityMatrix4 {
    let q = random_cq_params(seed);
    cq_state(&q.p, &q.pair_a, &q.a1, &q.a2)
}

/// The four Bell kets `Phi+, Phi-, Psi+, Psi-`.
pub fn bell_kets() -> [[C64; 4]; 4] {
    let s = FRAC_1_SQRT_2;
    let z = c(0.0, 0.0);
    [
        [c(s, 0.), z, z, c(s, 0.)],
        [c(s, 0.), z, z, c(-s, 0.)],
        [z, c(s, 0.), c(s, 0.), z],
        [z, c(s, 0.), c(-s, 0.), z],
    ]
}

/// Mixture of Bell projectors with weights uniform on the simplex.
pub fn sample_bell_diagonal<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix4 {
    let w = sample_simplex(rng, 4);
    let mut m = ComplexMatrix::zeros(4, 4);
    for (ket, &wk) in bell_kets().iter().zip(&w) {
        m = m + ComplexMatrix::outer(ket, ket).scale_real(wk);
    }
    DensityMatrix4::from_matrix_unchecked(m)
}

/// Haar-random 2x2 unitary via QR of a complex Gaussian matrix.
pub fn sample_unitary2<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix {
    let u0 = [gaussian_complex(rng), gaussian_complex(rng)];
    let n0 = (u0[0].norm_sqr() + u0[1].norm_sqr()).sqrt();
    let u0 = [u0[0] / n0, u0[1] / n0];
    let phase = C64::from_polar(1.0, rng.random::<f64>() * 2.0 * PI);
    // The orthogonal complement of (a, b) is (-b*, a*) up to a phase.
    let u1 = [-u0[1].conj() * phase, u0[0].conj() * phase];
    ComplexMatrix::from_rows(&[[u0[0], u1[0]], [u0[1], u1[1]]]).unwrap()
}
