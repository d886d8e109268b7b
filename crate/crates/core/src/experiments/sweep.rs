//! Randomized studies over many seeded states.

use std::fmt;
use std::str::FromStr;

use super::curves::find_peak;
use crate::dynamics::{propagate, ChannelKind, TimeGrid};
use crate::error::{Error, Result};
use crate::measures::{geometric_discord_closed, max_mutual_correlation, negativity};
use crate::states::{
    cc_state, cq_state, random_cc_params, random_cq_params, random_density_matrix, DensityMatrix4,
};

/// Family of classically correlated states sampled by a sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Cc,
    Cq,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Cc => "cc",
            Family::Cq => "cq",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cc" => Ok(Family::Cc),
            "cq" => Ok(Family::Cq),
            _ => Err(Error::InvalidParameter(format!("unknown family '{s}'"))),
        }
    }
}

/// Sampled initial state of a family.
pub fn family_state(family: Family, seed: u64) -> DensityMatrix4 {
    match family {
        Family::Cc => {
            let q = random_cc_params(seed);
            cc_state(&q.p, &q.pair_a, &q.pair_b)
        }
        Family::Cq => {
            let q = random_cq_params(seed);
            cq_state(&q.p, &q.pair_a, &q.a1, &q.a2)
        }
    }
}

/// Outcome for one sampled state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRecord {
    pub seed: u64,
    pub family: Family,
    /// Maximal mutual correlation of the initial state.
    pub cm0: f64,
    /// Geometric discord of the initial state.
    pub dg0: f64,
    pub peak_dg: f64,
    pub peak_t: f64,
}

/// Initial states with maximal mutual correlation at or below this are
/// product states and cannot gain discord under local dynamics.
pub const PRODUCT_CM: f64 = 1e-12;

/// Peak discord above which a sample counts as having created discord.
pub const CREATED_DG: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSummary {
    pub records: Vec<SweepRecord>,
    /// Samples excluded as product states.
    pub excluded: usize,
    pub min_peak: f64,
    pub median_peak: f64,
    pub max_peak: f64,
    /// Fraction of non-product samples with peak discord above [`CREATED_DG`].
    pub fraction_created: f64,
    /// Largest initial discord seen (should vanish for classical families).
    pub max_initial_dg: f64,
}

/// Peak of the geometric discord for one initial state: a scan over `grid`
/// refined by golden-section search around the best point.
pub fn discord_peak(
    rho: &DensityMatrix4,
    kind: ChannelKind,
    grid: &TimeGrid,
) -> Result<(f64, f64)> {
    let dg =
        |t: f64| -> Result<f64> { Ok(geometric_discord_closed(&propagate(rho, kind, t)?).value) };
    // Grid times are non-negative, so propagation cannot fail inside the search.
    dg(0.0)?;
    let peak = find_peak(
        |t| dg(t).unwrap_or(f64::NEG_INFINITY),
        grid.t_max,
        grid.steps,
    );
    Ok((peak.value, peak.gamma0t))
}

/// Samples `n` states with seeds `base_seed, base_seed + 1, ...`, evolves each
/// and records the largest discord reached on `grid`.
pub fn sweep_classical_states(
    n: usize,
    family: Family,
    kind: ChannelKind,
    grid: &TimeGrid,
    base_seed: u64,
) -> Result<SweepSummary> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "sweep needs at least one sample".into(),
        ));
    }
    let records = (0..n as u64)
        .map(|i| {
            let seed = base_seed.wrapping_add(i);
            let rho = family_state(family, seed);
            let (peak_dg, peak_t) = discord_peak(&rho, kind, grid)?;
            Ok(SweepRecord {
                seed,
                family,
                cm0: max_mutual_correlation(&rho),
                dg0: geometric_discord_closed(&rho).value,
                peak_dg,
                peak_t,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(summarize(records))
}

fn summarize(records: Vec<SweepRecord>) -> SweepSummary {
    let mut peaks: Vec<f64> = records
        .iter()
        .filter(|r| r.cm0 > PRODUCT_CM)
        .map(|r| r.peak_dg)
        .collect();
    peaks.sort_by(f64::total_cmp);
    let excluded = records.len() - peaks.len();
    let created = peaks.iter().filter(|&&p| p > CREATED_DG).count();
    let (min_peak, median_peak, max_peak, fraction_created) = if peaks.is_empty() {
        (f64::NAN, f64::NAN, f64::NAN, f64::NAN)
    } else {
        let mid = peaks.len() / 2;
        let median = if peaks.len() % 2 == 1 {
            peaks[mid]
        } else {
            0.5 * (peaks[mid - 1] + peaks[mid])
        };
        (
            peaks[0],
            median,
            peaks[peaks.len() - 1],
            created as f64 / peaks.len() as f64,
        )
    };
    let max_initial_dg = records.iter().map(|r| r.dg0).fold(0.0, f64::max);
    SweepSummary {
        records,
        excluded,
        min_peak,
        median_peak,
        max_peak,
        fraction_created,
        max_initial_dg,
    }
}

/// A state where the conjectured bound `C_M >= sqrt(D_G)` failed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChainViolation {
    pub seed: u64,
    pub rank: usize,
    pub cm: f64,
    pub sqrt_dg: f64,
    pub negativity: f64,
}

/// Evidence for `C_M >= sqrt(D_G) >= N` over random states.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainReport {
    pub samples: usize,
    /// Violations of `sqrt(D_G) >= N - tol` (a theorem; expected empty).
    pub discord_vs_negativity: Vec<ChainViolation>,
    /// Violations of `C_M >= sqrt(D_G) - tol` (a conjecture; reported, not asserted).
    pub correlation_vs_discord: Vec<ChainViolation>,
}

/// Checks the inequality chain on `n` random states, cycling ranks 1..=4,
/// with seeds `base_seed + i`.
pub fn inequality_chain(n: usize, base_seed: u64, tol: f64) -> Result<ChainReport> {
    let mut report = ChainReport {
        samples: n,
        discord_vs_negativity: Vec::new(),
        correlation_vs_discord: Vec::new(),
    };
    for i in 0..n as u64 {
        let seed = base_seed.wrapping_add(i);
        let rank = 1 + (i % 4) as usize;
        let rho = random_density_matrix(seed, rank)?;
        let v = ChainViolation {
            seed,
            rank,
            cm: max_mutual_correlation(&rho),
            sqrt_dg: geometric_discord_closed(&rho).value.sqrt(),
            negativity: negativity(&rho),
        };
        if v.sqrt_dg < v.negativity - tol {
            report.discord_vs_negativity.push(v);
        }
        if v.cm < v.sqrt_dg - tol {
            report.correlation_vs_discord.push(v);
        }
    }
    Ok(report)
}
