use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::{ExperimentError, SweepRow};

pub const CSV_HEADER: &str = "r,c11,c12,c21,c22,s,s_stderr,eta,n_coincidence_min,samples,seed";

/// 17 significant digits, enough to round-trip any `f64`.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn cell(x: Option<f64>) -> String {
    match x {
        Some(v) if v.is_finite() => format_float(v),
        _ => "NA".to_string(),
    }
}

pub fn write_csv_to(mut w: impl Write, rows: &[SweepRow]) -> std::io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for row in rows {
        let [c11, c12, c21, c22] = row.correlations;
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{}",
            format_float(row.r),
            cell(c11),
            cell(c12),
            cell(c21),
            cell(c22),
            cell(row.s),
            cell(row.s_stderr),
            cell(row.eta),
            row.n_coincidence_min,
            row.samples,
            row.seed
        )?;
    }
    w.flush()
}

pub fn write_csv(path: impl AsRef<Path>, rows: &[SweepRow]) -> Result<(), ExperimentError> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| ExperimentError::io(path, e))?;
    write_csv_to(BufWriter::new(file), rows).map_err(|e| ExperimentError::io(path, e))
}
