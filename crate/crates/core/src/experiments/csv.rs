//! CSV rendering with 12 significant digits.

use std::fmt::Write;

use super::curves::DmaxPoint;
use super::figures::{CurveSample, TrajectoryPoint};
use super::sweep::SweepRecord;

/// Formats like C's `%.12g`: 12 significant digits, trailing zeros removed,
/// exponent form outside `[1e-4, 1e12)`.
pub fn fmt_g12(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{v:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..12).contains(&exp) {
        let decimals = (11 - exp) as usize;
        trim_zeros(&format!("{v:.decimals$}")).to_string()
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn curves_csv(samples: &[CurveSample]) -> String {
    let mut s = String::from("label,gamma0t,value\n");
    for c in samples {
        writeln!(s, "{},{},{}", c.label, fmt_g12(c.gamma0t), fmt_g12(c.value)).unwrap();
    }
    s
}

pub fn dmax_csv(points: &[DmaxPoint]) -> String {
    let mut s = String::from("alpha,d_max,t_peak\n");
    for p in points {
        writeln!(
            s,
            "{},{},{}",
            fmt_g12(p.alpha),
            fmt_g12(p.d_max),
            fmt_g12(p.t_peak)
        )
        .unwrap();
    }
    s
}

pub fn sweep_csv(records: &[SweepRecord]) -> String {
    let mut s = String::from("seed,family,cm0,peak_dg,peak_t\n");
    for r in records {
        writeln!(
            s,
            "{},{},{},{},{}",
            r.seed,
            r.family,
            fmt_g12(r.cm0),
            fmt_g12(r.peak_dg),
            fmt_g12(r.peak_t)
        )
        .unwrap();
    }
    s
}

pub fn trajectory_csv(points: &[TrajectoryPoint]) -> String {
    let mut s = String::from("gamma0t,dg,cm,correlation_distance,negativity\n");
    for p in points {
        writeln!(
            s,
            "{},{},{},{},{}",
            fmt_g12(p.gamma0t),
            fmt_g12(p.geometric_discord),
            fmt_g12(p.max_mutual_correlation),
            fmt_g12(p.correlation_distance),
            fmt_g12(p.negativity)
        )
        .unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g12_matches_c() {
        assert_eq!(fmt_g12(0.0), "0");
        assert_eq!(fmt_g12(1.0), "1");
        assert_eq!(fmt_g12(0.5), "0.5");
        assert_eq!(fmt_g12(-2.25), "-2.25");
        assert_eq!(fmt_g12(1.0 / 3.0), "0.333333333333");
        assert_eq!(fmt_g12(std::f64::consts::PI), "3.14159265359");
        assert_eq!(fmt_g12(0.190983005625), "0.190983005625");
        assert_eq!(fmt_g12(1e-5), "1e-05");
        assert_eq!(fmt_g12(1.5e-7), "1.5e-07");
        assert_eq!(fmt_g12(123456789012.0), "123456789012");
        assert_eq!(fmt_g12(1.0e12), "1e+12");
        assert_eq!(fmt_g12(4.5399929762484854e-5), "4.53999297625e-05");
        assert_eq!(fmt_g12(0.0001), "0.0001");
    }

    #[test]
    fn curve_rows() {
        let s = curves_csv(&[CurveSample {
            label: "two-sided".into(),
            gamma0t: 0.25,
            value: 1.0 / 3.0,
        }]);
        assert_eq!(s, "label,gamma0t,value\ntwo-sided,0.25,0.333333333333\n");
    }
}
