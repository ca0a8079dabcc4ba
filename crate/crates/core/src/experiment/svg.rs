use std::fmt::Write as _;
use std::path::Path;

use super::{ExperimentError, SweepRow};
use crate::detection::{CLASSICAL_BOUND, TSIRELSON_BOUND};

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 70.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 60.0;
const S_MAX: f64 = 4.0;

struct Frame {
    r_lo: f64,
    r_hi: f64,
}

impl Frame {
    fn x(&self, r: f64) -> f64 {
        LEFT + (r - self.r_lo) / (self.r_hi - self.r_lo) * (WIDTH - LEFT - RIGHT)
    }

    /// Maps `v` in `[0, top]` to a pixel row.
    fn y(&self, v: f64, top: f64) -> f64 {
        HEIGHT - BOTTOM - v / top * (HEIGHT - TOP - BOTTOM)
    }
}

/// Draws one series as polyline runs split at undefined values, plus markers.
fn series(out: &mut String, frame: &Frame, rows: &[SweepRow], id: &str, color: &str, top: f64, value: impl Fn(&SweepRow) -> Option<f64>) {
    let _ = writeln!(out, r#"<g id="{id}" fill="{color}" stroke="{color}">"#);
    let mut run: Vec<(f64, f64)> = Vec::new();
    let flush = |run: &mut Vec<(f64, f64)>, out: &mut String| {
        if run.len() > 1 {
            let pts: Vec<String> = run.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
            let _ = writeln!(out, r#"<polyline fill="none" stroke-width="1.5" points="{}"/>"#, pts.join(" "));
        }
        run.clear();
    };
    for row in rows {
        match value(row).filter(|v| v.is_finite()) {
            Some(v) => run.push((frame.x(row.r), frame.y(v.clamp(0.0, top), top))),
            None => flush(&mut run, out),
        }
    }
    flush(&mut run, out);
    for row in rows {
        if let Some(v) = value(row).filter(|v| v.is_finite()) {
            let _ = writeln!(
                out,
                r#"<circle cx="{:.2}" cy="{:.2}" r="3"/>"#,
                frame.x(row.r),
                frame.y(v.clamp(0.0, top), top)
            );
        }
    }
    out.push_str("</g>\n");
}

/// Renders S(r) on the left axis and the efficiency on the right axis.
pub fn render_svg(rows: &[SweepRow]) -> Result<String, ExperimentError> {
    let plottable = rows.iter().filter(|r| r.s.is_some() || r.eta.is_some()).count();
    if rows.len() < 2 || plottable < 2 {
        return Err(ExperimentError::NotEnoughRows {
            needed: 2,
            got: plottable.min(rows.len()),
        });
    }
    let mut r_lo = rows.iter().map(|r| r.r).fold(f64::INFINITY, f64::min);
    let mut r_hi = rows.iter().map(|r| r.r).fold(f64::NEG_INFINITY, f64::max);
    if r_hi - r_lo < 1e-12 {
        r_lo -= 0.5;
        r_hi += 0.5;
    }
    let frame = Frame { r_lo, r_hi };
    let (x0, x1) = (LEFT, WIDTH - RIGHT);
    let (y0, y1) = (HEIGHT - BOTTOM, TOP);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    out.push_str(r#"<rect width="100%" height="100%" fill="white"/>"#);
    out.push('\n');

    out.push_str("<g id=\"axes\" stroke=\"black\" fill=\"black\">\n");
    let _ = writeln!(out, r#"<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}"/>"#);
    let _ = writeln!(out, r#"<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}"/>"#);
    let _ = writeln!(out, r#"<line x1="{x1}" y1="{y0}" x2="{x1}" y2="{y1}"/>"#);
    for k in 0..=4 {
        let r = r_lo + (r_hi - r_lo) * k as f64 / 4.0;
        let x = frame.x(r);
        let _ = writeln!(out, r#"<line x1="{x:.2}" y1="{y0}" x2="{x:.2}" y2="{}"/>"#, y0 + 5.0);
        let _ = writeln!(out, r#"<text x="{x:.2}" y="{}" stroke="none" text-anchor="middle">{r:.2}</text>"#, y0 + 20.0);
    }
    for k in 0..=4 {
        let s = k as f64;
        let y = frame.y(s, S_MAX);
        let _ = writeln!(out, r#"<text x="{}" y="{:.2}" stroke="none" text-anchor="end">{s:.0}</text>"#, x0 - 8.0, y + 4.0);
        let eta = k as f64 / 4.0;
        let _ = writeln!(out, r#"<text x="{}" y="{:.2}" stroke="none">{eta:.2}</text>"#, x1 + 8.0, y + 4.0);
    }
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{}" stroke="none" text-anchor="middle">squeezing r</text>"#,
        (x0 + x1) / 2.0,
        HEIGHT - 15.0
    );
    let mid = (y0 + y1) / 2.0;
    let _ = writeln!(out, r#"<text x="20" y="{mid:.2}" stroke="none" transform="rotate(-90 20 {mid:.2})" text-anchor="middle">Bell statistic S</text>"#);
    let xr = WIDTH - 20.0;
    let _ = writeln!(out, r#"<text x="{xr}" y="{mid:.2}" stroke="none" transform="rotate(90 {xr} {mid:.2})" text-anchor="middle">coincidence efficiency</text>"#);
    out.push_str("</g>\n");

    out.push_str("<g id=\"reference-lines\" stroke=\"gray\" stroke-dasharray=\"6 4\">\n");
    for (v, label) in [(CLASSICAL_BOUND, "2"), (TSIRELSON_BOUND, "2\u{221a}2")] {
        let y = frame.y(v, S_MAX);
        let _ = writeln!(
            out,
            r#"<line class="reference" data-value="{v}" x1="{x0}" y1="{y:.2}" x2="{x1}" y2="{y:.2}"/>"#
        );
        let _ = writeln!(out, r#"<text x="{}" y="{:.2}" stroke="none" fill="gray">{label}</text>"#, x0 + 4.0, y - 4.0);
    }
    out.push_str("</g>\n");

    series(&mut out, &frame, rows, "series-s", "#1f4e9c", S_MAX, |r| r.s);
    series(&mut out, &frame, rows, "series-eta", "#c0392b", 1.0, |r| r.eta);
    out.push_str("</svg>\n");
    Ok(out)
}

pub fn emit_svg(rows: &[SweepRow], path: impl AsRef<Path>) -> Result<(), ExperimentError> {
    let path = path.as_ref();
    let svg = render_svg(rows)?;
    std::fs::write(path, svg).map_err(|e| ExperimentError::io(path, e))
}
