//! CSV and JSON output.
//!
//! CSV files have a header row, one record per line, `.` as the decimal
//! separator and floats at 17 significant digits in C `%.17g` style, so every
//! value round-trips exactly.

use std::io::{self, Write};

use crate::channel::PhaseCovChannel;
use crate::dynamics::{SliceClass, Trajectory};
use crate::volume::{Report, RowKind};

/// Formats `x` like C's `printf("%.{sig}g", x)`.
pub fn fmt_g(x: f64, sig: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    let sig = sig.max(1);
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= sig as i32 {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// File precision.
pub fn fmt17(x: f64) -> String {
    fmt_g(x, 17)
}

/// Human-readable precision.
pub fn fmt6(x: f64) -> String {
    fmt_g(x, 6)
}

fn opt17(x: Option<f64>) -> String {
    x.map(fmt17).unwrap_or_default()
}

pub fn write_points_csv<W: Write>(mut w: W, points: &[PhaseCovChannel]) -> io::Result<()> {
    writeln!(w, "lambda1,lambda3,lambdaStar")?;
    for p in points {
        writeln!(
            w,
            "{},{},{}",
            fmt17(p.lambda1),
            fmt17(p.lambda3),
            fmt17(p.lambda_star)
        )?;
    }
    Ok(())
}

pub fn write_report_csv<W: Write>(mut w: W, report: &Report) -> io::Result<()> {
    writeln!(
        w,
        "kind,name,measure,analytic,mc,std_error,deviation_sigma,analytic_fraction_of_pt,mc_fraction_of_pt"
    )?;
    for r in &report.rows {
        let kind = match r.kind {
            RowKind::Cell => "cell",
            RowKind::Region => "region",
        };
        writeln!(
            w,
            "{kind},{},{},{},{},{},{},{},{}",
            r.name,
            report.measure.name(),
            opt17(r.analytic),
            fmt17(r.mc),
            fmt17(r.std_error),
            opt17(r.deviation_sigma),
            opt17(r.analytic_fraction_of_pt),
            fmt17(r.mc_fraction_of_pt),
        )?;
    }
    Ok(())
}

pub fn write_trajectory_csv<W: Write>(
    mut w: W,
    traj: &Trajectory,
    classes: &[SliceClass],
) -> io::Result<()> {
    writeln!(w, "t,lambda1,lambda3,lambdaStar,is_cpt,is_ebc,is_tlg")?;
    for ((t, c), k) in traj.times.iter().zip(&traj.channels).zip(classes) {
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            fmt17(*t),
            fmt17(c.lambda1),
            fmt17(c.lambda3),
            fmt17(c.lambda_star),
            k.cpt,
            k.ebc,
            k.tlg
        )?;
    }
    Ok(())
}

/// Pretty JSON followed by a newline.
pub fn write_json<W: Write, T: serde::Serialize>(mut w: W, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn matches_printf() {
        // Reference strings from printf("%.17g") / printf("%.6g").
        assert_eq!(fmt17(0.1), "0.10000000000000001");
        assert_eq!(fmt17(1.0), "1");
        assert_eq!(fmt17(std::f64::consts::SQRT_2 / 2.0), "0.70710678118654757");
        assert_eq!(fmt17(1e-5), "1.0000000000000001e-05");
        assert_eq!(fmt17(123456789012345678.0), "1.2345678901234568e+17");
        assert_eq!(fmt17(-2.5), "-2.5");
        assert_eq!(fmt6(0.314269680527), "0.31427");
        assert_eq!(fmt6(1234567.0), "1.23457e+06");
        assert_eq!(fmt6(0.0001), "0.0001");
        assert_eq!(fmt6(0.00001), "1e-05");
        assert_eq!(fmt6(100000.0), "100000");
        assert_eq!(fmt6(0.0), "0");
    }

    proptest! {
        #[test]
        fn seventeen_digits_round_trip(x in prop::num::f64::NORMAL | prop::num::f64::SUBNORMAL) {
            prop_assert_eq!(fmt17(x).parse::<f64>().unwrap(), x);
        }
    }
}
