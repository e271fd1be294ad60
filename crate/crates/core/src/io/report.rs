//! CSV report writers. Floats are printed with shortest round-trip
//! formatting, so files are value-exact and hash-comparable.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::Result;
use crate::harness::ScaleSweepReport;
use crate::metrics::{f_measure, EvalReport};

/// `threshold,precision,recall,fmeasure` rows of an aspect-ratio sweep.
pub fn write_threshold_sweep_csv_to<W: Write>(
    rows: &[(f64, EvalReport)],
    mut w: W,
) -> Result<()> {
    writeln!(w, "threshold,precision,recall,fmeasure")?;
    for (threshold, rep) in rows {
        writeln!(
            w,
            "{threshold},{},{},{}",
            rep.precision, rep.recall, rep.f_measure
        )?;
    }
    Ok(())
}

pub fn write_threshold_sweep_csv(rows: &[(f64, EvalReport)], path: impl AsRef<Path>) -> Result<()> {
    let mut buf = Vec::new();
    write_threshold_sweep_csv_to(rows, &mut buf)?;
    fs::write(path, buf)?;
    Ok(())
}

/// `scale,precision,recall,fmeasure` rows plus a trailing `mean` row.
pub fn write_scale_sweep_csv_to<W: Write>(report: &ScaleSweepReport, mut w: W) -> Result<()> {
    writeln!(w, "scale,precision,recall,fmeasure")?;
    for (scale, point) in report.scales.iter().zip(&report.per_scale) {
        writeln!(
            w,
            "{scale},{},{},{}",
            point.precision, point.recall, point.f_measure
        )?;
    }
    let mean_f = f_measure(report.mean_precision, report.mean_recall)?;
    writeln!(
        w,
        "mean,{},{},{mean_f}",
        report.mean_precision, report.mean_recall
    )?;
    Ok(())
}

pub fn write_scale_sweep_csv(report: &ScaleSweepReport, path: impl AsRef<Path>) -> Result<()> {
    let mut buf = Vec::new();
    write_scale_sweep_csv_to(report, &mut buf)?;
    fs::write(path, buf)?;
    Ok(())
}

/// Single-row report of one evaluation, keyed by its pixel tolerance.
pub fn write_eval_csv_to<W: Write>(report: &EvalReport, mut w: W) -> Result<()> {
    writeln!(w, "tolerance,precision,recall,fmeasure")?;
    writeln!(
        w,
        "{},{},{},{}",
        report.tolerance_px, report.precision, report.recall, report.f_measure
    )?;
    Ok(())
}

pub fn write_eval_csv(report: &EvalReport, path: impl AsRef<Path>) -> Result<()> {
    let mut buf = Vec::new();
    write_eval_csv_to(report, &mut buf)?;
    fs::write(path, buf)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::ScalePoint;

    fn report(p: f64, r: f64, f: f64) -> EvalReport {
        EvalReport {
            precision: p,
            recall: r,
            f_measure: f,
            matched: 0,
            detected_pixels: 0,
            gt_pixels: 0,
            tolerance_px: 4.5,
        }
    }

    #[test]
    fn threshold_rows() {
        let mut buf = Vec::new();
        write_threshold_sweep_csv_to(
            &[(0.1, report(1.0, 0.5, 2.0 / 3.0)), (0.2, report(0.25, 1.0, 0.4))],
            &mut buf,
        )
        .unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "threshold,precision,recall,fmeasure\n0.1,1,0.5,0.6666666666666666\n0.2,0.25,1,0.4\n"
        );
    }

    #[test]
    fn scale_rows_have_trailing_mean() {
        let rep = ScaleSweepReport {
            scales: vec![0.5, 1.0],
            per_scale: vec![
                ScalePoint {
                    precision: 1.0,
                    recall: 1.0,
                    f_measure: 1.0,
                },
                ScalePoint {
                    precision: 0.5,
                    recall: 1.0,
                    f_measure: 2.0 / 3.0,
                },
            ],
            mean_precision: 0.75,
            mean_recall: 1.0,
        };
        let mut buf = Vec::new();
        write_scale_sweep_csv_to(&rep, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[0], "scale,precision,recall,fmeasure");
        assert!(lines[3].starts_with("mean,0.75,1,"));
    }

    #[test]
    fn eval_row() {
        let mut buf = Vec::new();
        write_eval_csv_to(&report(1.0, 1.0, 1.0), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "tolerance,precision,recall,fmeasure\n4.5,1,1,1\n");
    }
}
