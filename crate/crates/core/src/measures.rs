//! Correlation quantifiers of two-qubit states.
//!
//! Geometric discord has a closed form in terms of the Pauli decomposition.
//! The brute-force route minimizes the Hilbert-Schmidt disturbance over all
//! projective measurements on A directly and serves as its oracle. The
//! trace-distance discord has no closed form here and always uses the search.

use std::f64::consts::PI;

use crate::linalg::{
    hermitian_eigenvalues, largest_singular_value, partial_transpose_b, tensor_product, trace_norm,
    ComplexMatrix, RealMatrix3, Subsystem, C64,
};
use crate::states::{
    pauli_decomposition, BinaryDistribution, BlochVector, DensityMatrix4, JointDistribution2x2,
    ProjectorPair,
};

/// How a discord value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscordMethod {
    ClosedForm,
    BruteForce,
}

/// Normalized geometric discord (Bell states score 1).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiscordValue {
    pub value: f64,
    pub method: DiscordMethod,
}

/// Post-measurement state for a particular measurement on A.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementChannelResult {
    pub state: DensityMatrix4,
    pub theta: f64,
    pub phi: f64,
}

/// Resolution of the measurement search: a coarse `(θ, φ)` grid on
/// `[0, π/2] x [0, 2π)` followed by compass-search refinement.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub theta_points: usize,
    pub phi_points: usize,
    /// Refinement stops once the step is below this (radians).
    pub step_tol: f64,
    /// Number of best grid points refined.
    pub starts: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            theta_points: 181,
            phi_points: 360,
            step_tol: 1e-7,
            starts: 3,
        }
    }
}

impl GridSpec {
    pub fn coarse(theta_points: usize, phi_points: usize) -> Self {
        Self {
            theta_points,
            phi_points,
            ..Self::default()
        }
    }
}

/// Minimum of an objective over projective measurements.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchMinimum {
    pub value: f64,
    pub pair: ProjectorPair,
}

/// `sum_k (P_k (x) 1) rho (P_k (x) 1)` for the pair `P_k(theta, phi)`.
pub fn measurement_channel(rho: &DensityMatrix4, theta: f64, phi: f64) -> DensityMatrix4 {
    let (p1, p2) = ProjectorPair::new(theta, phi).projectors();
    let id = ComplexMatrix::identity(2);
    let mut out = ComplexMatrix::zeros(4, 4);
    for p in [p1, p2] {
        let w = tensor_product(&p, &id).unwrap();
        out = out + (&w * rho.matrix()) * w;
    }
    DensityMatrix4::from_matrix_unchecked(out)
}

/// Off-diagonal block `X = (<psi_1| (x) 1) rho (|psi_2> (x) 1)`.
///
/// In the measurement basis `rho - P(rho)` is `|psi_1><psi_2| (x) X + h.c.`,
/// so its Hilbert-Schmidt norm squared is `2 |X|_F^2` and its eigenvalues are
/// `± s_i(X)`, giving trace norm `2 (s_1 + s_2)`.
fn disturbance_block(rho: &ComplexMatrix, kets: &[[C64; 2]; 2]) -> [C64; 4] {
    let [u, v] = kets;
    let mut x = [C64::new(0.0, 0.0); 4];
    for a in 0..2 {
        for a2 in 0..2 {
            let w = u[a].conj() * v[a2];
            for b in 0..2 {
                for b2 in 0..2 {
                    x[2 * b + b2] += w * rho[(2 * a + b, 2 * a2 + b2)];
                }
            }
        }
    }
    x
}

fn frobenius_sq(x: &[C64; 4]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum()
}

/// `|rho - P(rho)|_2^2`
fn hs_disturbance(rho: &ComplexMatrix, kets: &[[C64; 2]; 2]) -> f64 {
    2.0 * frobenius_sq(&disturbance_block(rho, kets))
}

/// `|rho - P(rho)|_1`
fn trace_disturbance(rho: &ComplexMatrix, kets: &[[C64; 2]; 2]) -> f64 {
    let x = disturbance_block(rho, kets);
    let det = (x[0] * x[3] - x[1] * x[2]).norm();
    2.0 * (frobenius_sq(&x) + 2.0 * det).max(0.0).sqrt()
}

/// Minimizes `objective(kets)` over measurements on A.
pub fn minimize_over_measurements<F>(objective: F, grid: &GridSpec) -> SearchMinimum
where
    F: Fn(&[[C64; 2]; 2]) -> f64,
{
    assert!(
        grid.theta_points >= 2 && grid.phi_points >= 1,
        "grid too small"
    );
    let d_theta = 0.5 * PI / (grid.theta_points - 1) as f64;
    let d_phi = 2.0 * PI / grid.phi_points as f64;
    let phases: Vec<C64> = (0..grid.phi_points)
        .map(|j| C64::from_polar(1.0, j as f64 * d_phi))
        .collect();

    // Keep the `starts` best grid points.
    let keep = grid.starts.max(1);
    let mut best: Vec<(f64, usize, usize)> = Vec::with_capacity(keep + 1);
    for i in 0..grid.theta_points {
        let (s, c) = (i as f64 * d_theta).sin_cos();
        for (j, e) in phases.iter().enumerate() {
            let kets = [[C64::new(c, 0.0), e * s], [-e.conj() * s, C64::new(c, 0.0)]];
            let f = objective(&kets);
            if best.len() < keep || f < best[best.len() - 1].0 {
                let pos = best.partition_point(|b| b.0 <= f);
                best.insert(pos, (f, i, j));
                best.truncate(keep);
            }
        }
    }

    let eval = |theta: f64, phi: f64| objective(&ProjectorPair::new(theta, phi).kets());
    best.iter()
        .map(|&(f0, i, j)| {
            let (theta, phi, value) = compass_search(
                &eval,
                (i as f64 * d_theta, j as f64 * d_phi, f0),
                (d_theta, d_phi),
                grid.step_tol,
            );
            SearchMinimum {
                value,
                pair: ProjectorPair::new(theta, phi),
            }
        })
        .min_by(|a, b| a.value.total_cmp(&b.value))
        .unwrap()
}

/// Derivative-free coordinate descent with step halving.
fn compass_search<F: Fn(f64, f64) -> f64>(
    f: &F,
    (mut x, mut y, mut fx): (f64, f64, f64),
    (mut sx, mut sy): (f64, f64),
    tol: f64,
) -> (f64, f64, f64) {
    let mut iterations = 0;
    while sx.max(sy) >= tol && iterations < 100_000 {
        iterations += 1;
        let mut moved = false;
        for (dx, dy) in [(sx, 0.0), (-sx, 0.0), (0.0, sy), (0.0, -sy)] {
            let g = f(x + dx, y + dy);
            if g < fx {
                x += dx;
                y += dy;
                fx = g;
                moved = true;
                break;
            }
        }
        if !moved {
            sx *= 0.5;
            sy *= 0.5;
        }
    }
    (x, y, fx)
}

/// Closed-form geometric discord, `(|x|^2 + |T|_2^2 - k_max)/2` with `k_max`
/// the largest eigenvalue of `x x^T + T T^T`.
pub fn geometric_discord_closed(rho: &DensityMatrix4) -> DiscordValue {
    let d = pauli_decomposition(rho);
    let x_sq: f64 = d.x.iter().map(|v| v * v).sum();
    let k = RealMatrix3::outer(&d.x, &d.x).add(&d.t.matmul(&d.t.transpose()));
    let k_max = k.symmetric_eigenvalues()[0];
    DiscordValue {
        value: (0.5 * (x_sq + d.t.frobenius_sq() - k_max)).max(0.0),
        method: DiscordMethod::ClosedForm,
    }
}

/// Geometric discord as `2 min_P |rho - P(rho)|_2^2` by direct search.
pub fn geometric_discord_bruteforce(
    rho: &DensityMatrix4,
    grid: &GridSpec,
) -> (DiscordValue, ProjectorPair) {
    let m = rho.matrix();
    let best = minimize_over_measurements(|k| hs_disturbance(m, k), grid);
    (
        DiscordValue {
            value: 2.0 * best.value,
            method: DiscordMethod::BruteForce,
        },
        best.pair,
    )
}

/// The least-disturbing measurement on A and its post-measurement state.
pub fn closest_classical_quantum(
    rho: &DensityMatrix4,
    grid: &GridSpec,
) -> MeasurementChannelResult {
    let (_, pair) = geometric_discord_bruteforce(rho, grid);
    MeasurementChannelResult {
        state: measurement_channel(rho, pair.theta, pair.phi),
        theta: pair.theta,
        phi: pair.phi,
    }
}

/// `min_P |rho - P(rho)|_1` by direct search.
pub fn trace_distance_discord(rho: &DensityMatrix4, grid: &GridSpec) -> f64 {
    let m = rho.matrix();
    minimize_over_measurements(|k| trace_disturbance(m, k), grid)
        .value
        .max(0.0)
}

/// `q_ij = <sigma_i (x) sigma_j> - <sigma_i (x) 1><1 (x) sigma_j>`
pub fn correlation_matrix(rho: &DensityMatrix4) -> RealMatrix3 {
    let d = pauli_decomposition(rho);
    d.t.sub(&RealMatrix3::outer(&d.x, &d.y))
}

/// Maximal mutual correlation: the largest singular value of the
/// correlation matrix.
pub fn max_mutual_correlation(rho: &DensityMatrix4) -> f64 {
    largest_singular_value(&correlation_matrix(rho))
}

/// `|rho - rho_A (x) rho_B|_1`
pub fn correlation_distance(rho: &DensityMatrix4) -> f64 {
    let product = tensor_product(&rho.marginal(Subsystem::A), &rho.marginal(Subsystem::B)).unwrap();
    trace_norm(&(*rho.matrix() - product))
}

/// Normalized negativity `|rho^PT|_1 - 1`, i.e. twice the total weight of
/// the negative partial-transpose eigenvalues. Eigenvalues in `[-1e-12, 0)`
/// count as zero.
pub fn negativity(rho: &DensityMatrix4) -> f64 {
    let pt = partial_transpose_b(&rho.matrix().symmetrized()).unwrap();
    let ev = hermitian_eigenvalues(&pt.symmetrized()).unwrap();
    2.0 * ev.iter().filter(|&&l| l < -1e-12).map(|l| -l).sum::<f64>()
}

/// `|Cov(X, Y)|` for ±1-valued variables distributed as `p`; equals the
/// maximal mutual correlation of every classical-classical state built on `p`.
pub fn cm_cc_analytic(p: &JointDistribution2x2) -> f64 {
    let [p11, p12, p21, p22] = p.as_array();
    ((p11 - p22).powi(2) - (p12 - p21).powi(2) + p12 + p21 - p11 - p22).abs()
}

/// `2 p1 p2 |a1 - a2|`
pub fn cm_cq_analytic(p: &BinaryDistribution, a1: &BlochVector, a2: &BlochVector) -> f64 {
    2.0 * p.p1 * p.p2 * a1.distance(a2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hs_norm;
    use crate::states::{
        cc_state, cq_state, random_cc_params, random_cq_state, random_density_matrix, rho_zero,
    };
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn fast() -> GridSpec {
        GridSpec::coarse(46, 90)
    }

    #[test]
    fn channel_examples() {
        let mixed = DensityMatrix4::maximally_mixed();
        let out = measurement_channel(&mixed, 0.9, 2.3);
        assert!(out.matrix().max_abs_diff(mixed.matrix()) < 1e-15);

        let bell = DensityMatrix4::bell_phi_plus();
        let out = measurement_channel(&bell, 0.0, 0.0);
        let c = |x: f64| C64::new(x, 0.0);
        let expected = ComplexMatrix::diagonal(&[c(0.5), c(0.0), c(0.0), c(0.5)]);
        assert!(out.matrix().max_abs_diff(&expected) < 1e-15);

        let q = crate::states::random_cq_params(4);
        let cq = cq_state(&q.p, &q.pair_a, &q.a1, &q.a2);
        let out = measurement_channel(&cq, q.pair_a.theta, q.pair_a.phi);
        assert!(hs_norm(&(*out.matrix() - *cq.matrix())) < 1e-12);
    }

    #[test]
    fn channel_is_idempotent() {
        let rho = random_density_matrix(9, 4).unwrap();
        let once = measurement_channel(&rho, 0.4, 1.7);
        let twice = measurement_channel(&once, 0.4, 1.7);
        assert!(once.matrix().max_abs_diff(twice.matrix()) < 1e-12);
    }

    #[test]
    fn disturbance_norms_match_full_matrices() {
        for seed in 0..20 {
            let rho = random_density_matrix(seed, 1 + (seed as usize % 4)).unwrap();
            let pair = ProjectorPair::new(0.1 * seed as f64, 0.37 * seed as f64);
            let diff = *rho.matrix() - *measurement_channel(&rho, pair.theta, pair.phi).matrix();
            let kets = pair.kets();
            let hs = hs_norm(&diff).powi(2);
            assert!((hs_disturbance(rho.matrix(), &kets) - hs).abs() < 1e-14);
            let tn = trace_norm(&diff);
            assert!((trace_disturbance(rho.matrix(), &kets) - tn).abs() < 1e-12);
        }
    }

    #[test]
    fn closed_form_examples() {
        assert!(
            (geometric_discord_closed(&DensityMatrix4::bell_phi_plus()).value - 1.0).abs() < 1e-14
        );
        assert!(geometric_discord_closed(&rho_zero()).value.abs() < 1e-15);
        for seed in 0..50 {
            assert!(geometric_discord_closed(&random_cq_state(seed)).value < 1e-10);
        }
    }

    #[test]
    fn brute_force_examples() {
        let (d, _) = geometric_discord_bruteforce(&DensityMatrix4::maximally_mixed(), &fast());
        assert!(d.value.abs() < 1e-15);
        let (d, _) = geometric_discord_bruteforce(&DensityMatrix4::bell_phi_plus(), &fast());
        assert!((d.value - 1.0).abs() < 1e-12);
        assert_eq!(d.method, DiscordMethod::BruteForce);

        let q = random_cc_params(21);
        let cc = cc_state(&q.p, &q.pair_a, &q.pair_b);
        let (d, pair) = geometric_discord_bruteforce(&cc, &fast());
        assert!(d.value < 1e-8);
        // The minimizing measurement is the state's own A basis (up to the
        // sign of its Bloch direction).
        let n = pair.direction();
        let m = q.pair_a.direction();
        let dot: f64 = n.iter().zip(m.iter()).map(|(a, b)| a * b).sum();
        assert!(dot.abs() > 1.0 - 1e-6, "dot = {dot}");
    }

    #[test]
    fn brute_force_agrees_with_closed_form() {
        for seed in 0..30 {
            let rho = random_density_matrix(seed, 1 + seed as usize % 4).unwrap();
            let closed = geometric_discord_closed(&rho).value;
            let (brute, _) = geometric_discord_bruteforce(&rho, &fast());
            assert!(
                (brute.value - closed).abs() < 1e-6,
                "seed {seed}: {} vs {closed}",
                brute.value
            );
            assert!(brute.value >= closed - 1e-9);
        }
    }

    #[test]
    fn trace_distance_examples() {
        assert!(trace_distance_discord(&DensityMatrix4::maximally_mixed(), &fast()) < 1e-15);
        assert!(trace_distance_discord(&random_cq_state(2), &fast()) < 1e-7);
        // Bell state: measuring z leaves |Phi+><Phi+| - diag(1/2,0,0,1/2),
        // whose eigenvalues are +-1/2.
        let d1 = trace_distance_discord(&DensityMatrix4::bell_phi_plus(), &fast());
        assert!((d1 - 1.0).abs() < 1e-9);
    }

    #[test]
    fn correlation_matrix_examples() {
        let product = DensityMatrix4::product(
            &crate::states::qubit_from_bloch(&BlochVector::new([0.3, 0.1, 0.2]).unwrap()),
            &crate::states::qubit_from_bloch(&BlochVector::new([0.0, 0.5, 0.5]).unwrap()),
        )
        .unwrap();
        assert!(correlation_matrix(&product).frobenius_sq() < 1e-30);
        assert!(max_mutual_correlation(&product) < 1e-15);
        assert!(correlation_distance(&product) < 1e-15);

        assert!((max_mutual_correlation(&rho_zero()) - 1.0).abs() < 1e-15);
        assert!(correlation_distance(&rho_zero()) >= 1.0 - 1e-15);

        let bell = DensityMatrix4::bell_phi_plus();
        let q = correlation_matrix(&bell);
        assert!(q.max_abs_diff(&RealMatrix3::diag([1.0, -1.0, 1.0])) < 1e-15);
        assert!((max_mutual_correlation(&bell) - 1.0).abs() < 1e-15);
        assert!((correlation_distance(&bell) - 1.5).abs() < 1e-14);
    }

    #[test]
    fn negativity_examples() {
        assert!((negativity(&DensityMatrix4::bell_phi_plus()) - 1.0).abs() < 1e-14);
        assert_eq!(negativity(&rho_zero()), 0.0);
        for seed in 0..20 {
            assert_eq!(negativity(&random_cq_state(seed)), 0.0);
            assert_eq!(negativity(&crate::states::random_cc_state(seed)), 0.0);
        }
    }

    #[test]
    fn pure_states_collapse_the_chain() {
        for seed in 0..20 {
            let rho = random_density_matrix(seed, 1).unwrap();
            let cm = max_mutual_correlation(&rho);
            let dg = geometric_discord_closed(&rho).value.sqrt();
            let n = negativity(&rho);
            assert!(
                (cm - dg).abs() < 1e-8 && (dg - n).abs() < 1e-8,
                "{cm} {dg} {n}"
            );
        }
    }

    #[test]
    fn analytic_cm_examples() {
        let p = JointDistribution2x2::new(0.0, 0.5, 0.5, 0.0).unwrap();
        assert_eq!(cm_cc_analytic(&p), 1.0);
        assert_eq!(cm_cc_analytic(&JointDistribution2x2::uniform()), 0.0);
        let p = JointDistribution2x2::new(0.5, 0.0, 0.0, 0.5).unwrap();
        assert_eq!(cm_cc_analytic(&p), 1.0);

        let fair = BinaryDistribution::fair();
        let a = BlochVector::new([0.2, -0.4, 0.1]).unwrap();
        assert_eq!(cm_cq_analytic(&fair, &a, &a), 0.0);
        let e = BlochVector::planar(0.3);
        assert!((cm_cq_analytic(&fair, &e, &e.neg()) - 1.0).abs() < 1e-15);
        let alpha = FRAC_PI_2;
        let a2 = BlochVector::planar(alpha);
        let want = 0.5 * (2.0 * (1.0 - alpha.cos())).sqrt();
        assert!((cm_cq_analytic(&fair, &BlochVector::planar(0.0), &a2) - want).abs() < 1e-15);
        // alpha = pi/2 gives sqrt(2)/2
        assert!((want - 2f64.sqrt() / 2.0).abs() < 1e-15);

        let pair = ProjectorPair::new(FRAC_PI_4, 0.0);
        let rho = cq_state(&fair, &pair, &BlochVector::planar(0.0), &a2);
        assert!((max_mutual_correlation(&rho) - want).abs() < 1e-12);
    }
}
