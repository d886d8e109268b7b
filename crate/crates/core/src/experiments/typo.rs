//! Comparison of the corrected and misprinted one-sided maps against the
//! integrator.

use crate::dynamics::{
    integrate_lindblad_trajectory, propagate_one_sided_a, propagate_one_sided_a_uncorrected,
    ChannelKind, EmissionChannel,
};
use crate::error::Result;
use crate::linalg::{tensor_product, ComplexMatrix};
use crate::states::{DensityMatrix4, KET_E, KET_PLUS};

/// `|e><e| (x) |+><+|`, whose `ee,eg` coherence feeds the disputed element.
pub fn typo_probe_state() -> DensityMatrix4 {
    let e = ComplexMatrix::outer(&KET_E, &KET_E);
    let plus = ComplexMatrix::outer(&KET_PLUS, &KET_PLUS);
    DensityMatrix4::product(&e, &plus).expect("product of pure states")
}

#[derive(Clone, Debug, PartialEq)]
pub struct TypoReport {
    pub times: Vec<f64>,
    /// Largest entrywise deviation of the corrected map from the integrator
    /// at each time.
    pub corrected: Vec<f64>,
    /// Same for the misprinted map.
    pub printed: Vec<f64>,
}

impl TypoReport {
    pub fn max_corrected(&self) -> f64 {
        self.corrected.iter().copied().fold(0.0, f64::max)
    }

    pub fn max_printed(&self) -> f64 {
        self.printed.iter().copied().fold(0.0, f64::max)
    }
}

/// Evolves `probe` under one-sided emission on atom A and compares both
/// closed forms with the integrator (step `dt`) at every time in `times`.
pub fn compare_one_sided_forms(
    probe: &DensityMatrix4,
    times: &[f64],
    dt: f64,
) -> Result<TypoReport> {
    let ch = EmissionChannel::unit(ChannelKind::OneSidedA);
    let oracle = integrate_lindblad_trajectory(probe, &ch, times, dt)?;
    let mut corrected = Vec::with_capacity(times.len());
    let mut printed = Vec::with_capacity(times.len());
    for (&t, o) in times.iter().zip(&oracle) {
        let c = propagate_one_sided_a(probe, t)?;
        let p = propagate_one_sided_a_uncorrected(probe, t)?;
        corrected.push(c.matrix().max_abs_diff(o.matrix()));
        printed.push(p.matrix().max_abs_diff(o.matrix()));
    }
    Ok(TypoReport {
        times: times.to_vec(),
        corrected,
        printed,
    })
}

/// Same comparison for a probe with no `ee,eg` coherence, where both forms
/// coincide.
pub fn silent_probe_state() -> DensityMatrix4 {
    let e = ComplexMatrix::outer(&KET_E, &KET_E);
    let m = tensor_product(&e, &e).unwrap();
    DensityMatrix4::from_matrix_unchecked(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_form_diverges_on_the_probe() {
        let r = compare_one_sided_forms(&typo_probe_state(), &[0.5, 2.0], 1e-3).unwrap();
        assert!(r.max_corrected() < 1e-9);
        // |1 - e^2| / 2 against the true (1 - e^-2)/2
        let expected = 0.5 * ((2f64.exp() - 1.0) + (1.0 - (-2f64).exp()));
        assert!((r.printed[1] - expected).abs() < 1e-6, "{}", r.printed[1]);
    }

    #[test]
    fn silent_probe_agrees() {
        let r = compare_one_sided_forms(&silent_probe_state(), &[1.0, 3.0], 1e-3).unwrap();
        assert!(r.max_printed() < 1e-9);
    }
}
