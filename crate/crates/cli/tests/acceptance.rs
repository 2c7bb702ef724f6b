//! End-to-end acceptance checks. Each test prints one `PASS`/`FAIL` line to
//! stderr (outside the libtest capture) and then asserts on it.
//!
//! Tests share a lock so the timed ones do not compete for cores.

use std::f64::consts::{PI, TAU};
use std::io::Write;
use std::process::Command;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spincorr::measures::*;
use spincorr::oracle::*;
use spincorr::spin_core::BlochPoint;
use spincorr::SpinNumber;

static LOCK: Mutex<()> = Mutex::new(());

fn serial() -> std::sync::MutexGuard<'static, ()> {
    LOCK.lock().unwrap_or_else(|e| e.into_inner())
}

fn pair(a: u32, b: u32) -> PairConfig {
    PairConfig::new(SpinNumber::from_twice(a), SpinNumber::from_twice(b)).unwrap()
}

/// Collects sub-check results and prints the single summary line.
struct Criterion {
    id: u8,
    title: &'static str,
    start: Instant,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Criterion {
    fn new(id: u8, title: &'static str) -> Self {
        Criterion {
            id,
            title,
            start: Instant::now(),
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if ok {
            self.notes.push(what);
        } else {
            self.failures.push(what);
        }
    }

    fn within(&mut self, label: &str, deviation: f64, tol: f64) {
        self.check(
            deviation.is_finite() && deviation <= tol,
            format!("{label}: {deviation:.3e} (tol {tol:e})"),
        );
    }

    fn budget(&mut self, limit: Duration) {
        let elapsed = self.start.elapsed();
        self.check(
            elapsed < limit,
            format!(
                "runtime {:.2} s (limit {} s)",
                elapsed.as_secs_f64(),
                limit.as_secs()
            ),
        );
    }

    fn finish(self) {
        let passed = self.failures.is_empty();
        let status = if passed { "PASS" } else { "FAIL" };
        let detail = if passed {
            self.notes.join("; ")
        } else {
            self.failures.join("; ")
        };
        let mut err = std::io::stderr().lock();
        let _ = writeln!(
            err,
            "{status} criterion {}: {} | {detail}",
            self.id, self.title
        );
        drop(err);
        assert!(
            passed,
            "criterion {} failed: {}",
            self.id,
            self.failures.join("; ")
        );
    }
}

fn rel(value: f64, expected: f64) -> f64 {
    (value / expected - 1.0).abs()
}

#[test]
fn revival_at_full_period() {
    let _guard = serial();
    let mut c = Criterion::new(1, "revival at one quantum period");
    for (twice, tj) in [(3, 3.0 * PI), (9, 9.0 * PI)] {
        let cfg = pair(twice, twice);
        let tau = DimensionlessTime::from_tj(&cfg, tj).tau;
        let worst = [Measure::I, Measure::Jgg, Measure::Qgg, Measure::Qg]
            .iter()
            .map(|m| m.evaluate(&cfg, tau).unwrap().abs())
            .fold(0.0, f64::max);
        c.within(&format!("S={} max |value|/B", cfg.s1()), worst, 1e-12);
    }
    c.budget(Duration::from_secs(1));
    c.finish();
}

#[test]
fn half_period_values() {
    let _guard = serial();
    let mut c = Criterion::new(2, "half-period values");
    let mut dev: f64 = 0.0;
    for twice in [1, 2, 3, 9] {
        let s = SpinNumber::from_twice(twice);
        dev = dev.max((f(s, PI) - 1.0 / (4.0 * s.value() + 1.0)).abs());
    }
    c.within("f(S, π) vs 1/(4S+1)", dev, 1e-12);

    // (pair, C_O/I, C_G/I, C_GG/I) as reduced fractions.
    type Row = ((u32, u32), Option<f64>, f64, f64);
    let table: [Row; 5] = [
        ((1, 1), Some(1.0 / 2.0), 1.0 / 3.0, 1.0 / 9.0),
        ((1, 3), Some(5.0 / 6.0), 11.0 / 21.0, 11.0 / 63.0),
        ((1, 9), Some(33.0 / 34.0), 257.0 / 323.0, 257.0 / 969.0),
        ((3, 3), None, 13.0 / 35.0, 3.0 / 35.0),
        ((3, 9), None, 259.0 / 361.0, 267.0 / 2527.0),
    ];
    let mut closed: f64 = 0.0;
    let mut exact: f64 = 0.0;
    for ((a, b), co, cg, cgg) in table {
        let cfg = pair(a, b);
        let r = midpoint_ratios(&cfg);
        closed = closed
            .max((r.c_povm_one - cg).abs())
            .max((r.c_povm_both - cgg).abs());
        let i = mutual_info_quantum(&cfg, PI);
        exact = exact
            .max((c_povm_one(&cfg, PI) / i - cg).abs())
            .max((mutual_info_povm(&cfg, PI) / i - cgg).abs());
        if let Some(co) = co {
            closed = closed
                .max((r.c_orth - co).abs())
                .max((r.q_orth - (1.0 - co)).abs());
            exact = exact.max((c_orth(&cfg, PI).unwrap() / i - co).abs());
            exact = exact.max((q_orth(&cfg, PI).unwrap() / i - (1.0 - co)).abs());
        }
    }
    c.within("closed-form fractions", closed, 1e-12);
    c.within("measures at τ=π", exact, 1e-12);
    let r = midpoint_ratios(&pair(1, 1));
    c.within(
        "C_O/I = Q_O/I = 1/2 for two spin-1/2",
        (r.c_orth - 0.5).abs().max((r.q_orth - 0.5).abs()),
        1e-12,
    );
    c.budget(Duration::from_secs(1));
    c.finish();
}

#[test]
fn short_time_laws() {
    let _guard = serial();
    let mut c = Criterion::new(3, "short-time laws");
    let mut dev: f64 = 0.0;
    for (a, b) in [(1, 1), (1, 9), (3, 3), (9, 9)] {
        let cfg = pair(a, b);
        let exp = short_time_asymptotics(&cfg);
        let h = 1e-4;
        dev = dev.max(rel(
            quadratic_coefficient(|t| mutual_info_quantum(&cfg, t), h),
            exp.mutual_info_quantum,
        ));
        dev = dev.max(rel(
            quadratic_coefficient(|t| mutual_info_classical(&cfg, t), h),
            exp.mutual_info_classical,
        ));
        dev = dev.max(rel(
            quadratic_coefficient(|t| mutual_info_povm(&cfg, t), h),
            exp.mutual_info_povm,
        ));
    }
    c.within("quadratic coefficients of I, J_C, J_GG", dev, 1e-6);

    let mut conv: f64 = 0.0;
    for twice in [3, 9, 49] {
        let cfg = pair(twice, twice);
        let s = cfg.s1().value();
        let tau = 1e-4;
        let i = mutual_info_quantum(&cfg, tau);
        conv = conv.max(rel(
            q_povm_both(&cfg, tau) / i,
            (2.0 * s + 1.0) / (s + 1.0).powi(2),
        ));
        conv = conv.max(rel(q_povm_one(&cfg, tau) / i, 1.0 / (s + 1.0)));
    }
    c.within("Q/I at τ=1e-4 vs exact limits", conv, 1e-6);

    for (twice, tol) in [(9, 0.15), (49, 0.03)] {
        let s = SpinNumber::from_twice(twice);
        let exact = small_time_ratios(&pair(twice, twice));
        let (both, one) = small_time_ratios_large_spin(s);
        c.within(
            &format!("S={s} Q_GG/I limit vs 2/S"),
            rel(exact.q_povm_both, both),
            tol,
        );
        c.within(
            &format!("S={s} Q_G/I limit vs 1/S"),
            rel(exact.q_povm_one, one),
            tol,
        );
    }
    c.budget(Duration::from_secs(1));
    c.finish();
}

fn taus(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |k| TAU * k as f64 / (n - 1) as f64)
}

#[test]
fn quantum_oracle_equivalence() {
    let _guard = serial();
    let mut c = Criterion::new(4, "exact quantum mutual information");
    let mut dev: f64 = 0.0;
    let mut compared = 0;
    for (a, b) in [(1, 1), (1, 3), (3, 3), (9, 9)] {
        let cfg = pair(a, b);
        let scale = cfg.s1().casimir() + cfg.s2().casimir();
        for tau in taus(20) {
            let expected = mutual_info_quantum(&cfg, tau);
            if expected <= 1e-8 * scale {
                continue;
            }
            let e = Extrapolation::run(DEFAULT_BETA, |beta| {
                EvolvedState::new(cfg, tau, beta)?.mutual_info_exact()
            })
            .unwrap();
            dev = dev.max(rel(e.extrapolated, expected));
            compared += 1;
        }
    }
    c.check(compared >= 60, format!("{compared} points compared"));
    c.within("extrapolated I relative error", dev, 1e-6);
    c.budget(Duration::from_secs(30));
    c.finish();
}

fn random_point(rng: &mut ChaCha8Rng) -> BlochPoint {
    BlochPoint::new(rng.gen_range(-1.0f64..1.0).acos(), rng.gen_range(0.0..TAU)).unwrap()
}

#[test]
fn povm_and_classical_oracle_equivalence() {
    let _guard = serial();
    let mut c = Criterion::new(5, "coherent-state and classical distributions");
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let pairs = [(1, 1), (1, 3), (2, 2), (3, 3), (3, 9), (9, 9)];
    let mut dev: f64 = 0.0;
    for _ in 0..100 {
        let (a, b) = pairs[rng.gen_range(0..pairs.len())];
        let cfg = pair(a, b);
        let tau = rng.gen_range(0.0..TAU);
        let (p1, p2) = (random_point(&mut rng), random_point(&mut rng));
        let beta = beta_limit(&cfg) / 2.0;
        let state = EvolvedState::new(cfg, tau, beta).unwrap();
        let numeric = povm_coupling_numeric(&state, p1, p2);
        let analytic = (povm_density(&cfg, tau, beta, p1, p2) * 16.0 * PI * PI - 1.0) / beta;
        dev = dev.max((numeric - analytic).abs());
    }
    c.within("POVM coupling term, closed form vs projection", dev, 1e-12);

    let rule = QuadratureRule::default();
    let mut shannon: f64 = 0.0;
    for (a, b) in [(1, 1), (1, 3), (3, 3)] {
        let cfg = pair(a, b);
        for tau in [0.7, 2.0, 4.5] {
            for kind in [DistributionKind::Povm, DistributionKind::Classical] {
                let expected = match kind {
                    DistributionKind::Povm => mutual_info_povm(&cfg, tau),
                    DistributionKind::Classical => mutual_info_classical(&cfg, tau),
                };
                let e = Extrapolation::run(DEFAULT_BETA, |beta| {
                    shannon_mi_quadrature(&AngleDistribution::new(cfg, tau, beta, kind), &rule)
                })
                .unwrap();
                shannon = shannon.max(rel(e.extrapolated, expected));
            }
        }
    }
    c.within("Shannon J_GG and J_C relative error", shannon, 1e-6);

    let mut fdev: f64 = 0.0;
    for twice in [1, 2, 3, 5, 9] {
        let s = SpinNumber::from_twice(twice);
        for tau in [0.0, 0.4, 1.3, PI, 4.0, 5.9] {
            fdev = fdev.max((f(s, tau) - f_quadrature(s, tau, &rule)).abs());
        }
    }
    c.within("f series vs quadrature", fdev, 1e-12);
    c.budget(Duration::from_secs(60));
    c.finish();
}

#[test]
fn orthogonal_measurement() {
    let _guard = serial();
    let mut c = Criterion::new(6, "projective measurement on a spin-1/2");
    let mut dev: f64 = 0.0;
    for b in [1, 3, 9] {
        let cfg = pair(1, b);
        let scale = cfg.s2().casimir();
        for tau in taus(20) {
            let expected = c_orth(&cfg, tau).unwrap();
            if expected <= 1e-8 * scale {
                continue;
            }
            let m =
                OrthMeasurement::new(&EvolvedState::new(cfg, tau, DEFAULT_BETA).unwrap()).unwrap();
            let e = Extrapolation::run(DEFAULT_BETA, |beta| m.classical_correlation(beta)).unwrap();
            dev = dev.max(rel(e.extrapolated, expected));
        }
    }
    c.within("extrapolated C_O relative error", dev, 1e-6);

    let cfg = pair(1, 1);
    let mut split: f64 = 0.0;
    for t in DimensionlessTime::grid(&cfg, TAU * cfg.s2().value(), 401) {
        let half = mutual_info_quantum(&cfg, t.tau) / 2.0;
        split = split.max((c_orth(&cfg, t.tau).unwrap() - half).abs());
        split = split.max((q_orth(&cfg, t.tau).unwrap() - half).abs());
    }
    c.within("C_O = Q_O = I/2 on the grid (units of B)", split, 1e-12);
    c.finish();
}

struct Curve {
    s1: String,
    s2: String,
    tj: Vec<f64>,
    tau: Vec<f64>,
    columns: Vec<(String, Vec<f64>)>,
}

impl Curve {
    fn column(&self, id: &str) -> &[f64] {
        &self.columns.iter().find(|(name, _)| name == id).unwrap().1
    }

    fn midpoint(&self) -> usize {
        self.tau
            .iter()
            .position(|t| (t - PI).abs() < 1e-12)
            .expect("τ = π on the grid")
    }
}

fn figure_curves(id: u8) -> Vec<Curve> {
    let out = Command::new(env!("CARGO_BIN_EXE_spincorr"))
        .args(["figure", &id.to_string()])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "figure {id}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let header: Vec<String> = reader
        .headers()
        .unwrap()
        .iter()
        .map(str::to_string)
        .collect();
    let mut curves: Vec<Curve> = Vec::new();
    for record in reader.records() {
        let record = record.unwrap();
        let (s1, s2) = (record[2].to_string(), record[3].to_string());
        if curves.last().is_none_or(|c| c.s1 != s1 || c.s2 != s2) {
            let columns = header[4..]
                .iter()
                .map(|h| (h.clone(), Vec::new()))
                .collect();
            curves.push(Curve {
                s1: s1.clone(),
                s2: s2.clone(),
                tj: Vec::new(),
                tau: Vec::new(),
                columns,
            });
        }
        let curve = curves.last_mut().unwrap();
        curve.tj.push(record[0].parse().unwrap());
        curve.tau.push(record[1].parse().unwrap());
        for (k, (_, values)) in curve.columns.iter_mut().enumerate() {
            values.push(record[4 + k].parse().unwrap());
        }
    }
    curves
}

#[test]
fn figure_checkpoints() {
    let _guard = serial();
    let mut c = Criterion::new(7, "figure checkpoints");

    let fig1 = figure_curves(1);
    c.check(
        fig1.len() == 2,
        format!("figure 1 has {} curves", fig1.len()),
    );
    for curve in &fig1 {
        let (jc, jgg) = (curve.column("Jc"), curve.column("Jgg"));
        let late = &jc[jc.len() * 3 / 4..];
        let plateau_gap = late.iter().map(|v| (1.0 - v).abs()).fold(0.0, f64::max);
        c.within(
            &format!("S={} J_C plateau over the last quarter", curve.s1),
            plateau_gap,
            0.02,
        );
        let above = jgg
            .iter()
            .zip(jc)
            .map(|(g, j)| g - j)
            .fold(f64::MIN, f64::max);
        c.check(
            above <= 1e-12,
            format!(
                "S={} J_GG <= J_C everywhere (max excess {above:.1e})",
                curve.s1
            ),
        );
        let m = curve.midpoint();
        c.check(
            jgg[m] < 0.5 * jc[m],
            format!("S={} J_GG/J_C at τ=π is {:.3}", curve.s1, jgg[m] / jc[m]),
        );
    }

    let fig2 = figure_curves(2);
    c.check(
        fig2.len() == 2,
        format!("figure 2 has {} curves", fig2.len()),
    );
    for curve in &fig2 {
        let m = curve.midpoint();
        let r = midpoint_ratios(&pair(3, 3));
        let expected = if curve.s1 == "3/2" {
            r
        } else {
            midpoint_ratios(&pair(9, 9))
        };
        let dev = (curve.column("Qgg/I")[m] - expected.q_povm_both()).abs();
        c.within(&format!("S={} Q_GG/I at τ=π", curve.s1), dev, 1e-12);
    }

    let fig3 = figure_curves(3);
    c.check(
        fig3.len() == 3,
        format!("figure 3 has {} curves", fig3.len()),
    );
    let large = fig3.iter().find(|c| c.s2 == "9/2").unwrap();
    let qo = large.column("Qo/I");
    let m = large.midpoint();
    let min_index = (0..qo.len())
        .min_by(|&i, &j| qo[i].total_cmp(&qo[j]))
        .unwrap();
    c.check(
        min_index == m,
        format!("Q_O/I minimum at τ={:.4}", large.tau[min_index]),
    );
    let estimate = q_orth_minimum_large_spin(SpinNumber::from_twice(9));
    c.within(
        &format!(
            "S2=9/2 Q_O/I minimum {:.5} vs 3/(4S2²)={estimate:.5}",
            qo[m]
        ),
        rel(qo[m], estimate),
        0.20,
    );

    let qg = large.column("Qg/I");
    let early = large
        .tj
        .iter()
        .zip(qg.iter().zip(qo))
        .filter(|(tj, _)| **tj < 2.0);
    let worst = early.map(|(_, (g, o))| g - o).fold(f64::MIN, f64::max);
    c.check(
        worst < 0.0,
        format!("S2=9/2 Q_G/I < Q_O/I for Jt<2 (max gap {worst:.3})"),
    );
    c.check(
        qg[m] > qo[m],
        format!("S2=9/2 Q_G/I={:.4} > Q_O/I={:.4} at t=T/2", qg[m], qo[m]),
    );
    c.finish();
}

#[test]
fn verify_suite_passes() {
    let _guard = serial();
    let mut c = Criterion::new(8, "verify --suite all");
    let out = Command::new(env!("CARGO_BIN_EXE_spincorr"))
        .args(["verify", "--suite", "all"])
        .output()
        .unwrap();
    let stdout = String::from_utf8_lossy(&out.stdout);
    let summary = stdout.lines().last().unwrap_or("").to_string();
    c.check(
        out.status.success(),
        format!("exit {:?}, {summary}", out.status.code()),
    );
    for line in stdout.lines().filter(|l| l.starts_with("FAIL")) {
        c.check(false, line.to_string());
    }
    c.budget(Duration::from_secs(120));
    c.finish();
}
