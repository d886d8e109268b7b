//! Data series for the three figures and for measure trajectories.

use std::f64::consts::{FRAC_PI_4, FRAC_PI_6, FRAC_PI_8};

use crate::dynamics::{propagate, ChannelKind, TimeGrid};
use crate::error::{Error, Result};
use crate::measures::{
    correlation_distance, geometric_discord_closed, max_mutual_correlation, negativity,
};
use crate::states::{cc_state, DensityMatrix4, JointDistribution2x2, ProjectorPair};

use super::curves::{curve_dg_rho0, dmax_vs_alpha, DmaxPoint};

/// One point of a labeled curve.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveSample {
    pub label: String,
    pub gamma0t: f64,
    pub value: f64,
}

/// Series names of the first figure.
pub const FIG1_LABELS: [&str; 2] = ["one-sided", "two-sided"];

/// Angles and series names of the second figure.
pub const FIG2_THETAS: [(&str, f64); 3] = [
    ("theta=pi/4", FRAC_PI_4),
    ("theta=pi/6", FRAC_PI_6),
    ("theta=pi/8", FRAC_PI_8),
];

/// Default time grid for the first two figures.
pub fn default_figure_grid() -> TimeGrid {
    TimeGrid::new(6.0, 301).expect("valid grid")
}

/// Geometric discord of `rho_0` under one-sided and two-sided emission.
pub fn figure1(grid: &TimeGrid) -> Result<Vec<CurveSample>> {
    let mut out = Vec::with_capacity(2 * grid.steps);
    for (label, kind) in FIG1_LABELS
        .iter()
        .zip([ChannelKind::OneSidedA, ChannelKind::TwoSided])
    {
        for t in grid.points() {
            out.push(CurveSample {
                label: label.to_string(),
                gamma0t: t,
                value: curve_dg_rho0(kind, t)?,
            });
        }
    }
    Ok(out)
}

/// The classical-classical state `(P1 (x) P2 + P2 (x) P1)/2` with both
/// projector pairs at angle `theta` and `phi = 0`.
pub fn figure2_state(theta: f64) -> DensityMatrix4 {
    let p = JointDistribution2x2::new(0.0, 0.5, 0.5, 0.0).expect("valid distribution");
    let pair = ProjectorPair::new(theta, 0.0);
    cc_state(&p, &pair, &pair)
}

/// Geometric discord of [`figure2_state`] under two-sided emission, for each
/// angle in [`FIG2_THETAS`].
pub fn figure2(grid: &TimeGrid) -> Result<Vec<CurveSample>> {
    let mut out = Vec::with_capacity(3 * grid.steps);
    for (label, theta) in FIG2_THETAS {
        let rho = figure2_state(theta);
        for t in grid.points() {
            let evolved = propagate(&rho, ChannelKind::TwoSided, t)?;
            out.push(CurveSample {
                label: label.to_string(),
                gamma0t: t,
                value: geometric_discord_closed(&evolved).value,
            });
        }
    }
    Ok(out)
}

/// Number of angles in the default third-figure grid.
pub const FIG3_POINTS: usize = 64;

pub fn figure3(alphas: &[f64]) -> Result<Vec<DmaxPoint>> {
    dmax_vs_alpha(alphas)
}

/// Correlation measures of an evolving state at one time.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrajectoryPoint {
    pub gamma0t: f64,
    pub geometric_discord: f64,
    pub max_mutual_correlation: f64,
    pub correlation_distance: f64,
    pub negativity: f64,
}

impl TrajectoryPoint {
    /// Measures of `state`, recorded at `gamma0t`.
    pub fn of_state(gamma0t: f64, state: &DensityMatrix4) -> Self {
        Self {
            gamma0t,
            geometric_discord: geometric_discord_closed(state).value,
            max_mutual_correlation: max_mutual_correlation(state),
            correlation_distance: correlation_distance(state),
            negativity: negativity(state),
        }
    }
}

pub fn measure_trajectory(
    rho: &DensityMatrix4,
    kind: ChannelKind,
    grid: &TimeGrid,
) -> Result<Vec<TrajectoryPoint>> {
    grid.points()
        .into_iter()
        .map(|t| Ok(TrajectoryPoint::of_state(t, &propagate(rho, kind, t)?)))
        .collect()
}

/// Largest value of a labeled series, with its time.
pub fn series_peak(samples: &[CurveSample], label: &str) -> Result<(f64, f64)> {
    samples
        .iter()
        .filter(|s| s.label == label)
        .map(|s| (s.value, s.gamma0t))
        .max_by(|a, b| a.0.total_cmp(&b.0))
        .ok_or_else(|| Error::InvalidParameter(format!("no series named '{label}'")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::rho_zero;

    #[test]
    fn figure1_starts_at_zero_and_one_sided_wins() {
        let s = figure1(&default_figure_grid()).unwrap();
        for label in FIG1_LABELS {
            let first = s.iter().find(|c| c.label == label).unwrap();
            assert_eq!(first.gamma0t, 0.0);
            assert!(first.value.abs() < 1e-15);
        }
        let one = series_peak(&s, "one-sided").unwrap().0;
        let two = series_peak(&s, "two-sided").unwrap().0;
        assert!(one > two);
    }

    #[test]
    fn figure2_quarter_angle_is_rho0() {
        let diff = figure2_state(FRAC_PI_4)
            .matrix()
            .max_abs_diff(rho_zero().matrix());
        assert!(diff < 1e-15);
    }

    #[test]
    fn figure2_ordering() {
        let s = figure2(&default_figure_grid()).unwrap();
        let p: Vec<f64> = FIG2_THETAS
            .iter()
            .map(|(l, _)| series_peak(&s, l).unwrap().0)
            .collect();
        assert!(p[0] > p[1] && p[1] > p[2], "{p:?}");
    }

    #[test]
    fn trajectory_starts_classical() {
        let grid = TimeGrid::new(2.0, 5).unwrap();
        let tr = measure_trajectory(&rho_zero(), ChannelKind::TwoSided, &grid).unwrap();
        assert_eq!(tr.len(), 5);
        assert!(tr[0].geometric_discord < 1e-15);
        assert!((tr[0].max_mutual_correlation - 1.0).abs() < 1e-12);
        assert!(series_peak(&[], "x").is_err());
    }
}
