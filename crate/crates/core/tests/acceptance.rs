//! End-to-end acceptance checks. Run with
//! `cargo test --release --test acceptance`; prints one line per criterion.

use std::f64::consts::SQRT_2;
use std::process::ExitCode;
use std::time::Instant;

use squeezelab::detection::{setting_rotation, SettingLabel, TSIRELSON_BOUND};
use squeezelab::experiment::{moment_deviation, run_sweep, write_csv_to, SweepConfig, SweepRow};
use squeezelab::linalg::random::{random_symmetric, random_symmetric_unitary};
use squeezelab::linalg::{determinant, polar_decompose, svd, ComplexMatrix, PolarForm};
use squeezelab::model::{
    analytic_moments, bogoliubov_transform, empirical_moments, impropriety, log_density,
    log_density_isotropic, sample_vacuum, separability_threshold, two_photon_squeezing,
    SEPARABLE_UNIFORM_ALPHA,
};
use squeezelab::rng::{standard_complex_normal, stream_rng, uniform};
use squeezelab::Complex64;

type Verdict = Result<(bool, String), Box<dyn std::error::Error>>;

const SWEEP_SEED: u64 = 1;

fn reference_sweep_config() -> SweepConfig {
    SweepConfig {
        r_min: 0.0,
        r_max: 3.0,
        r_steps: 31,
        samples: 1 << 20,
        seed: SWEEP_SEED,
        gamma: 1.0,
        sigma2: 0.5,
        ..Default::default()
    }
}

fn csv_bytes(rows: &[SweepRow]) -> Vec<u8> {
    let mut out = Vec::new();
    write_csv_to(&mut out, rows).expect("in-memory write");
    out
}

fn c1_impropriety() -> Verdict {
    let mut rng = stream_rng(101, 0);
    let mut worst = 0.0f64;
    for d in [1usize, 2, 4] {
        for r in [0.1f64, 0.5, 1.0, 2.0] {
            for sigma2 in [0.5, 1.0] {
                for _ in 0..10 {
                    let q = random_symmetric_unitary(&mut rng, d);
                    let m = analytic_moments(&PolarForm::isotropic(r, q)?, sigma2)?;
                    let oracle = (2.0 * r).tanh().powi(2 * d as i32);
                    worst = worst.max((impropriety(&m)? - oracle).abs());
                }
            }
        }
    }
    Ok((worst <= 1e-9, format!("max |I - tanh(2r)^(2d)| = {worst:.2e} (tol 1e-9)")))
}

fn c2_moments() -> Verdict {
    let n = 1 << 20;
    let mut rng = stream_rng(102, 0);
    let mut worst = 0.0f64;
    for k in 0..20u64 {
        let norm = 2.0 * (1.0 - uniform(&mut rng));
        let xi = random_symmetric(&mut rng, 4, norm);
        let polar = polar_decompose(&xi)?;
        let a = sample_vacuum(4, n, 0.5, 1000 + k)?;
        let emp = empirical_moments(&bogoliubov_transform(&a, &polar)?)?;
        worst = worst.max(moment_deviation(&emp, &analytic_moments(&polar, 0.5)?, n));
    }
    Ok((worst < 5.0, format!("max deviation {worst:.2} x sqrt(3 G_ii G_jj / n) (limit 5)")))
}

fn c3_density() -> Verdict {
    let mut rng = stream_rng(103, 0);
    let mut worst = 0.0f64;
    for r in [0.3, 1.0] {
        let q = random_symmetric_unitary(&mut rng, 4);
        let m = analytic_moments(&PolarForm::isotropic(r, q.clone())?, 0.5)?;
        for _ in 0..100 {
            let beta: Vec<Complex64> = (0..4).map(|_| standard_complex_normal(&mut rng)).collect();
            worst = worst.max((log_density(&beta, &m)? - log_density_isotropic(&beta, r, &q, 0.5)?).abs());
        }
    }
    let mut mass_err = 0.0f64;
    for (r, phase) in [(0.3, 0.4), (1.0, -1.1)] {
        let q = ComplexMatrix::from_diag(&[Complex64::from_polar(1.0, phase)]);
        let m = analytic_moments(&PolarForm::isotropic(r, q)?, 0.5)?;
        let (half, steps) = (8.0, 800);
        let h = 2.0 * half / steps as f64;
        let mut total = 0.0;
        for i in 0..steps {
            for j in 0..steps {
                let z = Complex64::new(-half + (i as f64 + 0.5) * h, -half + (j as f64 + 0.5) * h);
                total += log_density(&[z], &m)?.exp();
            }
        }
        mass_err = mass_err.max((total * h * h - 1.0).abs());
    }
    Ok((
        worst <= 1e-9 && mass_err <= 1e-3,
        format!("closed-form gap {worst:.2e} (tol 1e-9), |mass - 1| = {mass_err:.2e} (tol 1e-3)"),
    ))
}

/// First `r` where the series rises through `level`, linearly interpolated.
fn crossing(rows: &[SweepRow], level: f64) -> Option<f64> {
    rows.windows(2).find_map(|w| {
        let (s0, s1) = (w[0].s?, w[1].s?);
        (s0 < level && s1 >= level).then(|| w[0].r + (level - s0) / (s1 - s0) * (w[1].r - w[0].r))
    })
}

fn c4_sweep(rows: &[SweepRow]) -> Verdict {
    let c2 = crossing(rows, 2.0);
    let c22 = crossing(rows, TSIRELSON_BOUND);
    let last = rows.last().and_then(|r| r.s).unwrap_or(f64::NAN);
    let mut monotone = true;
    for w in rows.windows(2) {
        match (w[0].s, w[1].s, w[0].s_stderr, w[1].s_stderr) {
            (Some(a), Some(b), Some(ea), Some(eb)) => monotone &= b >= a - 3.0 * (ea * ea + eb * eb).sqrt(),
            _ => monotone = false,
        }
    }
    let (eta_max, r_at) = rows
        .iter()
        .filter_map(|r| r.eta.map(|e| (e, r.r)))
        .fold((f64::NEG_INFINITY, f64::NAN), |a, b| if b.0 > a.0 { b } else { a });

    let a = c2.is_some_and(|r| (r - 0.5).abs() <= 0.15);
    let b = c22.is_some_and(|r| (r - 1.0).abs() <= 0.2);
    let c = last >= 3.5 && monotone;
    let d = (eta_max - 0.38).abs() <= 0.04 && (r_at - 0.8).abs() <= 0.25;
    let fmt = |x: Option<f64>| x.map_or("none".to_string(), |v| format!("{v:.3}"));
    Ok((
        a && b && c && d,
        format!(
            "(a) S=2 at r={} [{}] (b) S=2sqrt2 at r={} [{}] (c) S(3)={last:.3}, monotone={monotone} [{}] (d) max eta={eta_max:.4} at r={r_at:.2} [{}]",
            fmt(c2),
            ok(a),
            fmt(c22),
            ok(b),
            ok(c),
            ok(d)
        ),
    ))
}

fn c5_separable() -> Verdict {
    let mut worst_sv = 0.0f64;
    let mut worst_det = 0.0f64;
    let mut worst_imp = 0.0f64;
    let mut min_c = f64::INFINITY;
    for r in [0.25, 0.5, 1.0, 2.0] {
        let spec = two_photon_squeezing(SEPARABLE_UNIFORM_ALPHA, r)?;
        let sv = svd(spec.xi())?.d;
        for (got, want) in sv.iter().zip([r, r, 0.0, 0.0]) {
            worst_sv = worst_sv.max((got - want).abs());
        }
        let m = analytic_moments(&spec.polar()?, 0.5)?;
        worst_det = worst_det.max(determinant(&m.c)?.norm());
        min_c = min_c.min(m.c.frobenius_norm());
        worst_imp = worst_imp.max(impropriety(&m)?);
    }
    Ok((
        worst_sv <= 1e-9 && worst_det <= 1e-9 && min_c > 0.0 && worst_imp <= 1e-9,
        format!("sv err {worst_sv:.2e}, |det C| {worst_det:.2e}, min |C| {min_c:.3}, I {worst_imp:.2e}"),
    ))
}

fn c6_null(rows: &[SweepRow]) -> Verdict {
    let row = rows.iter().find(|r| r.r == 0.0).ok_or("no r = 0 row")?;
    let mut within = true;
    let mut ratios = Vec::new();
    for (c, e) in row.correlations.iter().zip(&row.stderrs) {
        let (c, e) = (c.ok_or("undefined C")?, e.ok_or("undefined stderr")?);
        within &= c.abs() <= 5.0 * e;
        ratios.push(c.abs() / e);
    }
    let s = row.s.ok_or("undefined S")?;
    Ok((
        within && s <= 0.1,
        format!("|C|/stderr = {:.2?}, S = {s:.4} (limit 0.1)", ratios),
    ))
}

fn c7_threshold() -> Verdict {
    let mut ok = true;
    for sigma2 in [0.5f64, 0.75, 1.0, 2.0] {
        let t = 0.5 * (2.0 * sigma2).ln();
        ok &= !separability_threshold(sigma2, t - 1e-6).entangled;
        ok &= separability_threshold(sigma2, t + 1e-6).entangled;
        ok &= (separability_threshold(sigma2, 0.0).threshold_r - t.max(0.0)).abs() < 1e-15;
    }
    Ok((ok, "flip at r = log(2 sigma2)/2 for sigma2 in {0.5, 0.75, 1, 2}".into()))
}

fn c8_rotations() -> Verdict {
    let z = ComplexMatrix::from_real_rows(&[&[1.0, 0.0], &[0.0, -1.0]]);
    let s = 1.0 / SQRT_2;
    let x = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
    let b1 = ComplexMatrix::from_real_rows(&[&[s, s], &[s, -s]]);
    let b2 = ComplexMatrix::from_real_rows(&[&[s, -s], &[-s, -s]]);
    let mut worst = 0.0f64;
    for (label, obs) in [(SettingLabel::B1, b1), (SettingLabel::B2, b2), (SettingLabel::A2, x)] {
        let u = setting_rotation(label).rotation;
        worst = worst.max(u.adjoint().matmul(&obs).matmul(&u).distance(&z));
    }
    Ok((worst <= 1e-12, format!("max |U^H O U - Z| = {worst:.2e} (tol 1e-12)")))
}

fn c9_determinism(reference: &[u8]) -> Verdict {
    for threads in [1usize, 4] {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
        let rows = pool.install(|| run_sweep(&reference_sweep_config()))?;
        if csv_bytes(&rows) != reference {
            return Ok((false, format!("CSV differs with {threads} worker thread(s)")));
        }
    }
    Ok((true, format!("{} bytes identical across default, 1 and 4 threads", reference.len())))
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

fn report(id: u32, name: &str, start: Instant, verdict: Verdict) -> bool {
    let secs = start.elapsed().as_secs_f64();
    match verdict {
        Ok((passed, detail)) => {
            println!("{} [{id}] {name}: {detail} ({secs:.1}s)", if passed { "PASS" } else { "FAIL" });
            passed
        }
        Err(e) => {
            println!("FAIL [{id}] {name}: error: {e} ({secs:.1}s)");
            false
        }
    }
}

fn main() -> ExitCode {
    let mut all = true;
    let t = Instant::now();
    all &= report(1, "impropriety closed form", t, c1_impropriety());
    let t = Instant::now();
    all &= report(2, "moment consistency", t, c2_moments());
    let t = Instant::now();
    all &= report(3, "density validity", t, c3_density());

    let t = Instant::now();
    let rows = run_sweep(&reference_sweep_config());
    let sweep_secs = t.elapsed().as_secs_f64();
    let rows = match rows {
        Ok(rows) => rows,
        Err(e) => {
            for (id, name) in [(4, "squeezing sweep"), (6, "null case"), (9, "determinism")] {
                println!("FAIL [{id}] {name}: sweep error: {e}");
            }
            return ExitCode::FAILURE;
        }
    };
    println!("     sweep of {} points x {} samples took {sweep_secs:.1}s", rows.len(), 1 << 20);
    all &= report(4, "squeezing sweep", t, c4_sweep(&rows));
    let t = Instant::now();
    all &= report(5, "separable amplitudes", t, c5_separable());
    let t = Instant::now();
    all &= report(6, "null case", t, c6_null(&rows));
    let t = Instant::now();
    all &= report(7, "separability threshold", t, c7_threshold());
    let t = Instant::now();
    all &= report(8, "setting rotations", t, c8_rotations());
    let t = Instant::now();
    all &= report(9, "determinism", t, c9_determinism(&csv_bytes(&rows)));

    if all {
        println!("all acceptance criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("some acceptance criteria failed");
        ExitCode::FAILURE
    }
}
