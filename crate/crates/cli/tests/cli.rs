use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_discord-lab"));
    c.env_remove("DISCORD_LAB_TOL");
    c
}

fn state(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../states")
        .join(format!("{name}.json"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Parses `name value` lines from `measures`.
fn measure(o: &Output, name: &str) -> f64 {
    stdout(o)
        .lines()
        .find_map(|l| {
            let mut parts = l.split_whitespace();
            (parts.next() == Some(name)).then(|| parts.next().unwrap().parse().unwrap())
        })
        .unwrap_or_else(|| panic!("no {name} in output"))
}

fn column(csv: &str, name: &str) -> Vec<f64> {
    let mut lines = csv.lines();
    let idx = lines
        .next()
        .unwrap()
        .split(',')
        .position(|h| h == name)
        .unwrap();
    lines
        .map(|l| l.split(',').nth(idx).unwrap().parse().unwrap())
        .collect()
}

#[test]
fn measures_of_reference_states() {
    let bell = run(&["measures", state("bell").to_str().unwrap()]);
    assert!(bell.status.success());
    for name in [
        "geometric_discord",
        "geometric_discord_search",
        "negativity",
        "max_mutual_correlation",
    ] {
        assert!((measure(&bell, name) - 1.0).abs() < 1e-9, "{name}");
    }
    assert!((measure(&bell, "trace_distance_discord") - 1.0).abs() < 1e-9);

    let rho0 = run(&["measures", state("rho0").to_str().unwrap()]);
    assert!(measure(&rho0, "geometric_discord").abs() < 1e-12);
    assert!((measure(&rho0, "max_mutual_correlation") - 1.0).abs() < 1e-12);
    assert!(measure(&rho0, "negativity").abs() < 1e-12);

    let mixed = run(&["measures", state("maximally_mixed").to_str().unwrap()]);
    for line in stdout(&mixed).lines() {
        let v: f64 = line.split_whitespace().nth(1).unwrap().parse().unwrap();
        assert!(v.abs() < 1e-12, "{line}");
    }
}

#[test]
fn invalid_states_exit_with_2_and_name_the_problem() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"basis":"ee,eg,ge,gg","matrix":[[[1,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0.5,0]]]}"#,
    )
    .unwrap();
    let o = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("trace"));
    assert!(o.stdout.is_empty());

    let o = run(&[
        "measures",
        dir.path().join("missing.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));

    let ok = run(&["validate", state("rho0").to_str().unwrap()]);
    assert!(ok.status.success());
}

#[test]
fn tolerance_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let slightly_negative = dir.path().join("s.json");
    std::fs::write(
        &slightly_negative,
        r#"{"basis":"ee,eg,ge,gg","matrix":[[[0.5,0],[0,0],[0,0],[0.5000001,0]],[[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]],[[0.5000001,0],[0,0],[0,0],[0.5,0]]]}"#,
    )
    .unwrap();
    let path = slightly_negative.to_str().unwrap();
    assert_eq!(run(&["validate", path]).status.code(), Some(2));
    let o = bin()
        .env("DISCORD_LAB_TOL", "1e-6")
        .args(["validate", path])
        .output()
        .unwrap();
    assert!(o.status.success());
    let o = bin()
        .env("DISCORD_LAB_TOL", "abc")
        .args(["validate", path])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn evolve_produces_the_expected_discord() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("evolved.json");
    let o = run(&[
        "evolve",
        state("rho0").to_str().unwrap(),
        "--channel",
        "two-sided",
        "--gamma0t",
        &std::f64::consts::LN_2.to_string(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let m = run(&["measures", out.to_str().unwrap()]);
    assert!((measure(&m, "geometric_discord") - 0.125).abs() < 1e-12);
}

#[test]
fn zero_time_round_trips_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let start = dir.path().join("start.json");
    let evolved = dir.path().join("evolved.json");
    std::fs::copy(state("rho0"), &start).unwrap();
    // normalize the layout through one write
    let o = run(&[
        "evolve",
        start.to_str().unwrap(),
        "--channel",
        "one-sided-a",
        "--gamma0t",
        "0.7",
    ]);
    std::fs::write(&start, &o.stdout).unwrap();
    for channel in ["two-sided", "one-sided-a", "one-sided-b"] {
        let o = run(&[
            "evolve",
            start.to_str().unwrap(),
            "--channel",
            channel,
            "--gamma0t",
            "0",
            "--out",
            evolved.to_str().unwrap(),
        ]);
        assert!(o.status.success());
        assert_eq!(
            std::fs::read(&start).unwrap(),
            std::fs::read(&evolved).unwrap()
        );
    }
}

#[test]
fn one_sided_trajectory_peaks_at_the_branch_crossing() {
    let o = run(&[
        "evolve",
        state("rho0").to_str().unwrap(),
        "--channel",
        "one-sided-a",
        "--gamma0t",
        "4",
        "--trajectory",
        "--steps",
        "4001",
    ]);
    assert!(o.status.success());
    let dg = column(&stdout(&o), "dg");
    assert_eq!(dg.len(), 4001);
    let peak = dg.iter().copied().fold(0.0, f64::max);
    // grid step 1e-3 against slopes of about 0.1 at the kink
    assert!((peak - 0.190983).abs() < 2e-4, "{peak}");
}

#[test]
fn oracle_mode_reports_and_checks_the_deviation() {
    let o = run(&[
        "evolve",
        state("excited_plus").to_str().unwrap(),
        "--channel",
        "one-sided-a",
        "--gamma0t",
        "2",
        "--oracle",
        "--dt",
        "1e-3",
    ]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("max deviation"));
    let o = run(&[
        "evolve",
        state("bell").to_str().unwrap(),
        "--channel",
        "two-sided",
        "--gamma0t",
        "1",
        "--oracle",
        "--dt",
        "0.5",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[
        "evolve",
        state("bell").to_str().unwrap(),
        "--channel",
        "two-sided",
        "--gamma0t",
        "-1",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn figures_are_deterministic_and_well_formed() {
    let dir = tempfile::tempdir().unwrap();
    for which in ["1", "2", "3"] {
        let a = dir.path().join(format!("a{which}.csv"));
        let b = dir.path().join(format!("b{which}.csv"));
        assert!(run(&["figure", which, "--out", a.to_str().unwrap()])
            .status
            .success());
        assert!(run(&["figure", which, "--out", b.to_str().unwrap()])
            .status
            .success());
        let text = std::fs::read_to_string(&a).unwrap();
        assert_eq!(text, std::fs::read_to_string(&b).unwrap());
        let header = text.lines().next().unwrap();
        match which {
            "3" => assert_eq!(header, "alpha,d_max,t_peak"),
            _ => assert_eq!(header, "label,gamma0t,value"),
        }
    }
    let fig1 = std::fs::read_to_string(dir.path().join("a1.csv")).unwrap();
    let first: Vec<&str> = fig1.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(first, ["one-sided", "0", "0"]);
    assert_eq!(run(&["figure", "4"]).status.code(), Some(2));
}

#[test]
fn gamma0_rescales_reported_times() {
    let o = run(&["--gamma0", "2", "figure", "1"]);
    let text = stdout(&o);
    assert!(text.starts_with("label,t,value\n"));
    let t = column(&text, "t");
    assert!((t.iter().copied().fold(0.0, f64::max) - 3.0).abs() < 1e-12);
}

#[test]
fn sweep_requires_a_seed_and_is_reproducible() {
    assert_ne!(
        run(&["sweep", "--family", "cc", "--n", "3"]).status.code(),
        Some(0)
    );
    let args = [
        "sweep",
        "--family",
        "cc",
        "--n",
        "4",
        "--seed",
        "11",
        "--channel",
        "two-sided",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("seed,family,cm0,peak_dg,peak_t\n11,cc,"));
    assert_eq!(text.lines().count(), 5);
    assert!(String::from_utf8_lossy(&a.stderr).contains("median"));
}

#[test]
fn dmax_scan_endpoints_and_middle() {
    let o = run(&["dmax-scan", "--alphas", "5"]);
    let text = stdout(&o);
    let d = column(&text, "d_max");
    assert_eq!(d.len(), 5);
    assert!(d[0] <= 1e-10 && d[4] <= 1e-10);
    assert!((d[2] - 0.138008595).abs() < 1e-8);
    assert!((d[1] - d[3]).abs() < 1e-9);
}

#[test]
fn verify_typo_reports_both_forms() {
    let o = run(&["verify-typo"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("corrected form: max deviation"));
    assert!(text.contains("(agrees)"));
    assert!(text.contains("(diverges)"));
    let row = text.lines().find(|l| l.starts_with("2,")).unwrap();
    let cols: Vec<f64> = row.split(',').map(|v| v.parse().unwrap()).collect();
    assert!(cols[1] <= 1e-7);
    assert!(cols[2] > 1.0);
}
