//! Analytic curves, figure data, peak searches and randomized sweeps.

pub mod csv;
pub mod curves;
pub mod figures;
pub mod sweep;
pub mod typo;

pub use curves::{
    alpha_grid, curve_cm_rho0, curve_dg_cq, curve_dg_rho0, dmax_at, dmax_vs_alpha, find_peak,
    DmaxPoint, Peak,
};
pub use figures::{figure1, figure2, figure3, measure_trajectory, CurveSample, TrajectoryPoint};
pub use sweep::{
    inequality_chain, sweep_classical_states, ChainReport, Family, SweepRecord, SweepSummary,
};
pub use typo::{compare_one_sided_forms, typo_probe_state, TypoReport};
