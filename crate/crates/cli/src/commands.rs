use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use discord_lab::dynamics::{integrate_lindblad_trajectory, propagate};
use discord_lab::experiments::csv::{curves_csv, dmax_csv, fmt_g12, sweep_csv, trajectory_csv};
use discord_lab::experiments::figures::{
    default_figure_grid, figure1, figure2, figure3, FIG3_POINTS,
};
use discord_lab::experiments::typo::{
    compare_one_sided_forms, silent_probe_state, typo_probe_state,
};
use discord_lab::experiments::{
    alpha_grid, sweep_classical_states, CurveSample, Family, TrajectoryPoint,
};
use discord_lab::io::{state_from_json, state_to_json};
use discord_lab::measures::{
    correlation_distance, geometric_discord_bruteforce, geometric_discord_closed,
    max_mutual_correlation, negativity, trace_distance_discord,
};
use discord_lab::states::TOL_PSD;
use discord_lab::{ChannelKind, DensityMatrix4, EmissionChannel, GridSpec, TimeGrid};

/// Closed form and integrator may differ by at most this before `evolve
/// --oracle` fails.
const ORACLE_LIMIT: f64 = 1e-5;

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn io(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<discord_lab::Error> for Failure {
    fn from(e: discord_lab::Error) -> Self {
        Failure::invalid(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

pub struct Context {
    tol_psd: f64,
    /// Divides reported times when set.
    gamma0: Option<f64>,
}

impl Context {
    pub fn from_env(gamma0: Option<f64>) -> Result<Self, Failure> {
        let tol_psd = match std::env::var("DISCORD_LAB_TOL") {
            Ok(v) => v
                .trim()
                .parse::<f64>()
                .ok()
                .filter(|t| *t >= 0.0 && t.is_finite())
                .ok_or_else(|| {
                    Failure::invalid(format!(
                        "DISCORD_LAB_TOL must be a non-negative number, got '{v}'"
                    ))
                })?,
            Err(_) => TOL_PSD,
        };
        if let Some(g) = gamma0 {
            if !(g > 0.0 && g.is_finite()) {
                return Err(Failure::invalid(format!(
                    "--gamma0 must be positive, got {g}"
                )));
            }
        }
        Ok(Self { tol_psd, gamma0 })
    }

    fn time(&self, gamma0t: f64) -> f64 {
        self.gamma0.map_or(gamma0t, |g| gamma0t / g)
    }

    /// Renames the `gamma0t` column when times are reported in physical units.
    fn header(&self, csv: String) -> String {
        if self.gamma0.is_some() {
            csv.replacen("gamma0t", "t", 1)
        } else {
            csv
        }
    }

    fn load(&self, path: &Path) -> Result<DensityMatrix4, Failure> {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::io(format!("cannot read {}: {e}", path.display())))?;
        state_from_json(&text, self.tol_psd)
            .map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
    }
}

fn emit(out: Option<&Path>, data: &str) -> Outcome {
    match out {
        Some(path) => fs::write(path, data)
            .map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .lock()
            .write_all(data.as_bytes())
            .map_err(|e| Failure::io(format!("cannot write to stdout: {e}"))),
    }
}

pub fn measures(ctx: &Context, file: &Path) -> Outcome {
    let rho = ctx.load(file)?;
    let grid = GridSpec::default();
    let rows = [
        ("geometric_discord", geometric_discord_closed(&rho).value),
        (
            "geometric_discord_search",
            geometric_discord_bruteforce(&rho, &grid).0.value,
        ),
        (
            "trace_distance_discord",
            trace_distance_discord(&rho, &grid),
        ),
        ("max_mutual_correlation", max_mutual_correlation(&rho)),
        ("correlation_distance", correlation_distance(&rho)),
        ("negativity", negativity(&rho)),
    ];
    let text: String = rows
        .iter()
        .map(|(name, v)| format!("{name:<26} {}\n", fmt_g12(*v)))
        .collect();
    emit(None, &text)
}

pub struct EvolveArgs {
    pub file: PathBuf,
    pub kind: ChannelKind,
    pub gamma0t: f64,
    /// Number of grid points when a trajectory is requested.
    pub trajectory: Option<usize>,
    /// Integrator step when the integrator is requested.
    pub oracle_dt: Option<f64>,
    pub out: Option<PathBuf>,
}

pub fn evolve(ctx: &Context, args: &EvolveArgs) -> Outcome {
    let rho = ctx.load(&args.file)?;
    if !(args.gamma0t >= 0.0 && args.gamma0t.is_finite()) {
        return Err(Failure::invalid(format!(
            "--gamma0t must be a non-negative number, got {}",
            args.gamma0t
        )));
    }
    let times = match args.trajectory {
        Some(steps) => TimeGrid::new(args.gamma0t, steps)?.points(),
        None => vec![args.gamma0t],
    };
    let exact = times
        .iter()
        .map(|&t| propagate(&rho, args.kind, t))
        .collect::<Result<Vec<_>, _>>()?;

    let (states, deviation) = match args.oracle_dt {
        Some(dt) => {
            let ch = EmissionChannel::unit(args.kind);
            let integrated = integrate_lindblad_trajectory(&rho, &ch, &times, dt)?;
            let dev = integrated
                .iter()
                .zip(&exact)
                .map(|(a, b)| a.matrix().max_abs_diff(b.matrix()))
                .fold(0.0, f64::max);
            eprintln!("max deviation of integrator from closed form: {dev:.3e}");
            (integrated, Some(dev))
        }
        None => (exact, None),
    };

    let data = if args.trajectory.is_some() {
        let points: Vec<TrajectoryPoint> = times
            .iter()
            .zip(&states)
            .map(|(&t, s)| TrajectoryPoint::of_state(ctx.time(t), s))
            .collect();
        ctx.header(trajectory_csv(&points))
    } else {
        state_to_json(&states[0])
    };
    emit(args.out.as_deref(), &data)?;

    match deviation {
        Some(dev) if dev > ORACLE_LIMIT => Err(Failure {
            code: 3,
            message: format!(
                "integrator diverges from the closed form by {dev:.3e} (limit {ORACLE_LIMIT:e})"
            ),
        }),
        _ => Ok(()),
    }
}

pub fn figure(ctx: &Context, which: u8, out: Option<&Path>) -> Outcome {
    let grid = default_figure_grid();
    let data = match which {
        1 | 2 => {
            let samples = if which == 1 {
                figure1(&grid)?
            } else {
                figure2(&grid)?
            };
            ctx.header(curves_csv(&rescale(ctx, samples)))
        }
        _ => dmax_csv(&rescale_dmax(ctx, figure3(&alpha_grid(FIG3_POINTS))?)),
    };
    emit(out, &data)
}

fn rescale(ctx: &Context, samples: Vec<CurveSample>) -> Vec<CurveSample> {
    samples
        .into_iter()
        .map(|s| CurveSample {
            gamma0t: ctx.time(s.gamma0t),
            ..s
        })
        .collect()
}

fn rescale_dmax(
    ctx: &Context,
    points: Vec<discord_lab::experiments::DmaxPoint>,
) -> Vec<discord_lab::experiments::DmaxPoint> {
    points
        .into_iter()
        .map(|p| discord_lab::experiments::DmaxPoint {
            t_peak: ctx.time(p.t_peak),
            ..p
        })
        .collect()
}

pub fn sweep(
    ctx: &Context,
    family: Family,
    n: usize,
    seed: u64,
    kind: ChannelKind,
    out: Option<&Path>,
) -> Outcome {
    let grid = TimeGrid::new(10.0, 400)?;
    let mut summary = sweep_classical_states(n, family, kind, &grid, seed)?;
    eprintln!(
        "{n} {family} samples, {} product states excluded; peak discord min {} median {} max {}; \
         fraction above 1e-8: {}; largest initial discord {}",
        summary.excluded,
        fmt_g12(summary.min_peak),
        fmt_g12(summary.median_peak),
        fmt_g12(summary.max_peak),
        fmt_g12(summary.fraction_created),
        fmt_g12(summary.max_initial_dg),
    );
    for r in &mut summary.records {
        r.peak_t = ctx.time(r.peak_t);
    }
    emit(out, &sweep_csv(&summary.records))
}

pub fn dmax_scan(ctx: &Context, alphas: usize, out: Option<&Path>) -> Outcome {
    if alphas < 2 {
        return Err(Failure::invalid(format!(
            "--alphas needs at least 2 points, got {alphas}"
        )));
    }
    let points = figure3(&alpha_grid(alphas))?;
    emit(out, &dmax_csv(&rescale_dmax(ctx, points)))
}

pub fn verify_typo() -> Outcome {
    let times: Vec<f64> = (0..=10).map(|i| 0.5 * i as f64).collect();
    let dt = 1e-4;
    let probe = compare_one_sided_forms(&typo_probe_state(), &times, dt)?;
    let silent = compare_one_sided_forms(&silent_probe_state(), &times, dt)?;
    let mut text = String::from(
        "probe |e><e| (x) |+><+|, one-sided emission on A, integrator step 1e-4\n\
         gamma0t,corrected_deviation,printed_deviation\n",
    );
    for ((t, c), p) in times.iter().zip(&probe.corrected).zip(&probe.printed) {
        text += &format!("{},{},{}\n", fmt_g12(*t), fmt_g12(*c), fmt_g12(*p));
    }
    text += &format!(
        "corrected form: max deviation {} ({})\n",
        fmt_g12(probe.max_corrected()),
        if probe.max_corrected() <= 1e-7 {
            "agrees"
        } else {
            "DISAGREES"
        }
    );
    text += &format!(
        "printed form: max deviation {} ({})\n",
        fmt_g12(probe.max_printed()),
        if probe.max_printed() > 0.1 {
            "diverges"
        } else {
            "agrees"
        }
    );
    text += &format!(
        "probe without the ee,eg coherence: corrected {} printed {}\n",
        fmt_g12(silent.max_corrected()),
        fmt_g12(silent.max_printed())
    );
    emit(None, &text)
}

pub fn validate(ctx: &Context, file: &Path) -> Outcome {
    ctx.load(file)?;
    emit(None, &format!("{}: valid\n", file.display()))
}
