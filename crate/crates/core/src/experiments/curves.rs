//! Closed-form time dependence of correlations for the reference states,
//! and peak searches over them.

use crate::dynamics::ChannelKind;
use crate::error::{Error, Result};
use crate::states::{cq_state, BinaryDistribution, BlochVector, DensityMatrix4, ProjectorPair};

use std::f64::consts::FRAC_PI_4;

fn rho0_kind(kind: ChannelKind) -> Result<()> {
    match kind {
        ChannelKind::TwoSided | ChannelKind::OneSidedA => Ok(()),
        ChannelKind::OneSidedB => Err(Error::InvalidParameter(
            "closed-form curves exist for two-sided and one-sided-a emission only".into(),
        )),
    }
}

/// Maximal mutual correlation of the evolved `rho_0`.
pub fn curve_cm_rho0(kind: ChannelKind, gamma0t: f64) -> Result<f64> {
    rho0_kind(kind)?;
    Ok(match kind {
        ChannelKind::TwoSided => (-gamma0t).exp(),
        _ => (-0.5 * gamma0t).exp(),
    })
}

/// The two branches whose minimum is the geometric discord of the evolved
/// `rho_0`. With `x = e^{-γ₀t}`:
///
/// * two-sided: `x²/2` and `((1-x)² + (1-x)⁴)/2`
/// * one-sided: `x/2` and `(1-x)²/2`
pub fn rho0_dg_branches(kind: ChannelKind, gamma0t: f64) -> Result<(f64, f64)> {
    rho0_kind(kind)?;
    let x = (-gamma0t).exp();
    Ok(match kind {
        ChannelKind::TwoSided => {
            // e^{-4γ₀t}(e^{γ₀t} - 1)⁴ is (1 - x)⁴
            let d1 = 0.5 * (-2.0 * gamma0t).exp();
            let d2 =
                0.5 * ((x - 1.0).powi(2) + (-4.0 * gamma0t).exp() * (gamma0t.exp() - 1.0).powi(4));
            (d1, d2)
        }
        _ => (0.5 * x, 0.5 * (x - 1.0).powi(2)),
    })
}

pub fn curve_dg_rho0(kind: ChannelKind, gamma0t: f64) -> Result<f64> {
    let (d1, d2) = rho0_dg_branches(kind, gamma0t)?;
    Ok(d1.min(d2))
}

/// Branches for the classical-quantum family `(|+><+| (x) rho_1 + |-><-| (x) rho_2)/2`
/// with planar unit Bloch vectors an angle `alpha` apart, under two-sided emission.
pub fn cq_dg_branches(alpha: f64, gamma0t: f64) -> (f64, f64) {
    let e = |k: f64| (-k * gamma0t).exp();
    let c = alpha.cos();
    let d1 = 0.25 * (1.0 - c) * e(2.0);
    let d2 = 1.0 + 0.5 * e(4.0) - 1.75 * e(3.0) + 3.0 * e(2.0) - 2.75 * e(1.0)
        + (0.25 * e(3.0) - 0.5 * e(2.0) + 0.25 * e(1.0)) * c;
    (d1, d2)
}

pub fn curve_dg_cq(alpha: f64, gamma0t: f64) -> f64 {
    let (d1, d2) = cq_dg_branches(alpha, gamma0t);
    d1.min(d2)
}

/// The initial state behind [`curve_dg_cq`]; `alpha0` rotates both Bloch
/// vectors in the plane.
pub fn cq_reference_state(alpha: f64, alpha0: f64) -> DensityMatrix4 {
    cq_state(
        &BinaryDistribution::fair(),
        &ProjectorPair::new(FRAC_PI_4, 0.0),
        &BlochVector::planar(alpha0),
        &BlochVector::planar(alpha0 + alpha),
    )
}

/// Location and height of a maximum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Peak {
    pub gamma0t: f64,
    pub value: f64,
}

/// Points of the coarse scan used by [`find_peak`].
pub const PEAK_SCAN_POINTS: usize = 400;

/// Horizon of peak searches, in `γ₀t`.
pub const PEAK_HORIZON: f64 = 10.0;

/// Maximum of `f` on `[0, t_max]`: a coarse scan of `points` samples, then
/// golden-section refinement to `1e-10` in `t` around the best sample.
///
/// The discord curves are minima of two smooth branches and have a kink at
/// the maximizer, so no derivatives are used.
pub fn find_peak<F: Fn(f64) -> f64>(f: F, t_max: f64, points: usize) -> Peak {
    assert!(points >= 3 && t_max > 0.0);
    let step = t_max / (points - 1) as f64;
    let (best_i, best_v) =
        (0..points)
            .map(|i| (i, f(i as f64 * step)))
            .fold(
                (0, f64::NEG_INFINITY),
                |acc, (i, v)| if v > acc.1 { (i, v) } else { acc },
            );
    let lo = best_i.saturating_sub(1) as f64 * step;
    let hi = ((best_i + 1).min(points - 1)) as f64 * step;
    let refined = golden_section_max(&f, lo, hi, 1e-10);
    if refined.value >= best_v {
        refined
    } else {
        Peak {
            gamma0t: best_i as f64 * step,
            value: best_v,
        }
    }
}

fn golden_section_max<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64, tol: f64) -> Peak {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let t = 0.5 * (a + b);
    Peak {
        gamma0t: t,
        value: f(t),
    }
}

/// Largest discord created from the classical-quantum family at angle
/// `alpha`, over `γ₀t ∈ [0, 10]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DmaxPoint {
    pub alpha: f64,
    pub d_max: f64,
    pub t_peak: f64,
}

pub fn dmax_at(alpha: f64) -> DmaxPoint {
    let peak = find_peak(|t| curve_dg_cq(alpha, t), PEAK_HORIZON, PEAK_SCAN_POINTS);
    DmaxPoint {
        alpha,
        d_max: peak.value,
        t_peak: peak.gamma0t,
    }
}

pub fn dmax_vs_alpha(alphas: &[f64]) -> Result<Vec<DmaxPoint>> {
    if let Some(a) = alphas
        .iter()
        .find(|a| !(0.0..=2.0 * std::f64::consts::PI + 1e-12).contains(*a))
    {
        return Err(Error::InvalidParameter(format!(
            "alpha {a} outside [0, 2π]"
        )));
    }
    Ok(alphas.iter().map(|&a| dmax_at(a)).collect())
}

/// `n` evenly spaced angles covering `[0, 2π]` inclusive.
pub fn alpha_grid(n: usize) -> Vec<f64> {
    assert!(n >= 2);
    let step = 2.0 * std::f64::consts::PI / (n - 1) as f64;
    (0..n).map(|i| i as f64 * step).collect()
}
