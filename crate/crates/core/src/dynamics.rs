//! Spontaneous emission of two independent two-level atoms.
//!
//! The propagators are written element by element in the product basis
//! `ee, eg, ge, gg` (zero-based indices 0..4). Time is always the
//! dimensionless product `γ₀t`. [`integrate_lindblad`] integrates the master
//! equation directly and is the independent check on the closed forms.

use crate::error::{Error, Result};
use crate::linalg::{tensor_product, ComplexMatrix, Subsystem, C64};
use crate::states::{ground_projector, sigma_minus, DensityMatrix4};

/// Which atoms couple to the vacuum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChannelKind {
    TwoSided,
    OneSidedA,
    OneSidedB,
}

impl ChannelKind {
    pub const ALL: [ChannelKind; 3] = [Self::TwoSided, Self::OneSidedA, Self::OneSidedB];

    pub fn name(&self) -> &'static str {
        match self {
            Self::TwoSided => "two-sided",
            Self::OneSidedA => "one-sided-a",
            Self::OneSidedB => "one-sided-b",
        }
    }

    fn damps(&self, side: Subsystem) -> bool {
        matches!(
            (self, side),
            (Self::TwoSided, _) | (Self::OneSidedA, Subsystem::A) | (Self::OneSidedB, Subsystem::B)
        )
    }
}

impl std::str::FromStr for ChannelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown channel '{s}'")))
    }
}

/// Emission rate together with the set of emitting atoms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EmissionChannel {
    gamma0: f64,
    pub kind: ChannelKind,
}

impl EmissionChannel {
    pub fn new(gamma0: f64, kind: ChannelKind) -> Result<Self> {
        if !(gamma0 > 0.0 && gamma0.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "emission rate must be positive, got {gamma0}"
            )));
        }
        Ok(Self { gamma0, kind })
    }

    /// Unit rate, so that times are already in `γ₀t` units.
    pub fn unit(kind: ChannelKind) -> Self {
        Self { gamma0: 1.0, kind }
    }

    pub fn gamma0(&self) -> f64 {
        self.gamma0
    }

    /// Evolves `rho` for physical time `t`.
    pub fn evolve(&self, rho: &DensityMatrix4, t: f64) -> Result<DensityMatrix4> {
        propagate(rho, self.kind, self.gamma0 * t)
    }
}

/// Uniform grid of `steps` points on `[0, t_max]` (in `γ₀t`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TimeGrid {
    pub t_max: f64,
    pub steps: usize,
}

impl TimeGrid {
    pub fn new(t_max: f64, steps: usize) -> Result<Self> {
        if !(t_max > 0.0 && t_max.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "t_max must be positive, got {t_max}"
            )));
        }
        if steps < 2 {
            return Err(Error::InvalidParameter(format!(
                "need at least 2 steps, got {steps}"
            )));
        }
        Ok(Self { t_max, steps })
    }

    pub fn points(&self) -> Vec<f64> {
        let n = (self.steps - 1) as f64;
        (0..self.steps).map(|i| self.t_max * i as f64 / n).collect()
    }
}

/// Right-hand side `L rho` of the master equation, with
/// `L_k rho = γ₀/2 (2 s rho s† - s†s rho - rho s†s)` and `s = sigma_-` on atom k.
pub fn lindblad_rhs(rho: &DensityMatrix4, ch: &EmissionChannel) -> ComplexMatrix {
    generator(rho.matrix(), ch.kind).scale_real(ch.gamma0)
}

fn lowering(side: Subsystem) -> ComplexMatrix {
    let id = ComplexMatrix::identity(2);
    match side {
        Subsystem::A => tensor_product(&sigma_minus(), &id).unwrap(),
        Subsystem::B => tensor_product(&id, &sigma_minus()).unwrap(),
    }
}

/// Generator at unit rate.
fn generator(rho: &ComplexMatrix, kind: ChannelKind) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(4, 4);
    for side in [Subsystem::A, Subsystem::B] {
        if !kind.damps(side) {
            continue;
        }
        let s = lowering(side);
        let sd = s.adjoint();
        let n = sd * s;
        let jump = (&s * rho) * sd;
        let anti = &n * rho + rho * &n;
        out = out + (jump.scale_real(2.0) - anti).scale_real(0.5);
    }
    out
}

fn check_time(gamma0t: f64) -> Result<()> {
    if gamma0t < 0.0 || gamma0t.is_nan() {
        Err(Error::NegativeTime(gamma0t))
    } else {
        Ok(())
    }
}

/// Fills the lower triangle from the upper one.
fn hermitian_from_upper(mut m: ComplexMatrix) -> ComplexMatrix {
    for i in 0..4 {
        m[(i, i)].im = 0.0;
        for j in 0..i {
            m[(i, j)] = m[(j, i)].conj();
        }
    }
    m
}

/// Both atoms emit.
pub fn propagate_two_sided(rho: &DensityMatrix4, gamma0t: f64) -> Result<DensityMatrix4> {
    check_time(gamma0t)?;
    let r = |i: usize, j: usize| rho.element(i, j);
    let e1 = (-gamma0t).exp();
    let e2 = (-2.0 * gamma0t).exp();
    let h1 = (-0.5 * gamma0t).exp();
    let h3 = (-1.5 * gamma0t).exp();

    let mut m = ComplexMatrix::zeros(4, 4);
    m[(0, 0)] = r(0, 0) * e2;
    m[(0, 1)] = r(0, 1) * h3;
    m[(0, 2)] = r(0, 2) * h3;
    m[(0, 3)] = r(0, 3) * e1;
    m[(1, 1)] = r(0, 0) * (e1 - e2) + r(1, 1) * e1;
    m[(2, 2)] = r(0, 0) * (e1 - e2) + r(2, 2) * e1;
    m[(1, 2)] = r(1, 2) * e1;
    m[(1, 3)] = r(0, 2) * (h1 - h3) + r(1, 3) * h1;
    m[(2, 3)] = r(0, 1) * (h1 - h3) + r(2, 3) * h1;
    m[(3, 3)] = C64::new(1.0, 0.0) - m[(0, 0)] - m[(1, 1)] - m[(2, 2)];
    Ok(DensityMatrix4::from_matrix_unchecked(hermitian_from_upper(
        m,
    )))
}

/// Only atom A emits; atom B is isolated.
pub fn propagate_one_sided_a(rho: &DensityMatrix4, gamma0t: f64) -> Result<DensityMatrix4> {
    one_sided_a(rho, gamma0t, (-gamma0t).exp())
}

/// [`propagate_one_sided_a`] with the `ρ₃₄` feed factor written as
/// `1 - e^{+γ₀t}` instead of `1 - e^{-γ₀t}`. This is not a dynamical map:
/// the coherence grows without bound. It exists so the discrepancy with the
/// integrator can be demonstrated.
pub fn propagate_one_sided_a_uncorrected(
    rho: &DensityMatrix4,
    gamma0t: f64,
) -> Result<DensityMatrix4> {
    one_sided_a(rho, gamma0t, gamma0t.exp())
}

fn one_sided_a(
    rho: &DensityMatrix4,
    gamma0t: f64,
    coherence_feed_exp: f64,
) -> Result<DensityMatrix4> {
    check_time(gamma0t)?;
    let r = |i: usize, j: usize| rho.element(i, j);
    let e1 = (-gamma0t).exp();
    let h1 = (-0.5 * gamma0t).exp();

    let mut m = ComplexMatrix::zeros(4, 4);
    m[(0, 0)] = r(0, 0) * e1;
    m[(0, 1)] = r(0, 1) * e1;
    m[(1, 1)] = r(1, 1) * e1;
    m[(0, 2)] = r(0, 2) * h1;
    m[(0, 3)] = r(0, 3) * h1;
    m[(1, 2)] = r(1, 2) * h1;
    m[(1, 3)] = r(1, 3) * h1;
    m[(2, 2)] = r(0, 0) * (1.0 - e1) + r(2, 2);
    m[(2, 3)] = r(0, 1) * (1.0 - coherence_feed_exp) + r(2, 3);
    m[(3, 3)] = r(1, 1) * (1.0 - e1) + r(3, 3);
    Ok(DensityMatrix4::from_matrix_unchecked(hermitian_from_upper(
        m,
    )))
}

/// Only atom B emits, obtained from the A map by exchanging the atoms.
pub fn propagate_one_sided_b(rho: &DensityMatrix4, gamma0t: f64) -> Result<DensityMatrix4> {
    let evolved = propagate_one_sided_a(&rho.swapped(), gamma0t)?;
    Ok(evolved.swapped())
}

/// Dispatches on `kind`. Zero time returns `rho` bit for bit; the element
/// formulas would rebuild the last population from the trace.
pub fn propagate(rho: &DensityMatrix4, kind: ChannelKind, gamma0t: f64) -> Result<DensityMatrix4> {
    if gamma0t == 0.0 {
        return Ok(*rho);
    }
    match kind {
        ChannelKind::TwoSided => propagate_two_sided(rho, gamma0t),
        ChannelKind::OneSidedA => propagate_one_sided_a(rho, gamma0t),
        ChannelKind::OneSidedB => propagate_one_sided_b(rho, gamma0t),
    }
}

/// Largest step accepted by the integrator, in `γ₀t` units.
pub const MAX_STEP: f64 = 1e-3;

/// Fixed-step classical Runge-Kutta integration of `dρ/dt = Lρ` up to
/// `gamma0t`, with step at most `dt` (both in `γ₀t` units).
pub fn integrate_lindblad(
    rho: &DensityMatrix4,
    ch: &EmissionChannel,
    gamma0t: f64,
    dt: f64,
) -> Result<DensityMatrix4> {
    Ok(integrate_lindblad_trajectory(rho, ch, &[gamma0t], dt)?.remove(0))
}

/// States at each of the non-decreasing `times`, integrated in one pass.
pub fn integrate_lindblad_trajectory(
    rho: &DensityMatrix4,
    ch: &EmissionChannel,
    times: &[f64],
    dt: f64,
) -> Result<Vec<DensityMatrix4>> {
    if !(dt > 0.0 && dt <= MAX_STEP) {
        return Err(Error::StepTooLarge { dt, max: MAX_STEP });
    }
    if let Some(&t) = times.iter().find(|t| **t < 0.0 || t.is_nan()) {
        return Err(Error::NegativeTime(t));
    }
    if times.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidParameter(
            "times must be non-decreasing".into(),
        ));
    }
    // The generator is rate-independent once time is measured in γ₀t.
    let f = |m: &ComplexMatrix| generator(m, ch.kind);
    let mut state = *rho.matrix();
    let mut now = 0.0;
    let mut out = Vec::with_capacity(times.len());
    for &target in times {
        let span = target - now;
        let n = (span / dt - 1e-9).ceil().max(0.0) as usize;
        if n > 0 {
            let h = span / n as f64;
            for _ in 0..n {
                let k1 = f(&state);
                let k2 = f(&(state + k1.scale_real(0.5 * h)));
                let k3 = f(&(state + k2.scale_real(0.5 * h)));
                let k4 = f(&(state + k3.scale_real(h)));
                state =
                    state + (k1 + k2.scale_real(2.0) + k3.scale_real(2.0) + k4).scale_real(h / 6.0);
            }
        }
        now = target;
        out.push(DensityMatrix4::from_matrix_unchecked(state));
    }
    Ok(out)
}

/// The `t -> ∞` limit of the channel.
pub fn asymptotic_state(rho: &DensityMatrix4, kind: ChannelKind) -> DensityMatrix4 {
    let pg = ground_projector();
    let m = match kind {
        ChannelKind::TwoSided => tensor_product(&pg, &pg).unwrap(),
        ChannelKind::OneSidedA => tensor_product(&pg, &rho.marginal(Subsystem::B)).unwrap(),
        ChannelKind::OneSidedB => tensor_product(&rho.marginal(Subsystem::A), &pg).unwrap(),
    };
    DensityMatrix4::from_matrix_unchecked(m)
}
