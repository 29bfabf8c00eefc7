//! Differential self-check of the solvers against the brute-force oracles.

use annulus_core::gen::{generate, Distribution, GenSpec};
use annulus_core::oracle::{brute_max_era, brute_max_esa, naive_corridor, DEFAULT_RECT_CAP, DEFAULT_SQUARE_CAP};
use annulus_core::{max_era_with, max_esa, widest_l_corridor, DecisionMode, PointSet};
use serde_json::{json, Value};

use crate::io::points_to_json;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub trials: usize,
    pub n_max: usize,
    pub seed: u64,
    pub mode: DecisionMode,
}

/// A disagreement between a solver and its oracle.
#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub check: &'static str,
    pub points: Vec<(f64, f64)>,
    pub solver: Option<f64>,
    pub oracle: Option<f64>,
}

impl Mismatch {
    pub fn to_json(&self) -> Value {
        let mut doc = points_to_json(&self.points);
        doc["check"] = json!(self.check);
        doc["solver_width"] = json!(self.solver);
        doc["oracle_width"] = json!(self.oracle);
        doc
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerifyReport {
    pub instances: usize,
    pub comparisons: usize,
    pub mismatch: Option<Mismatch>,
}

/// The set `{(0, k) : k = 0..=10}`, where a decision that only checks gap
/// widths certifies a hollow annulus of width 10.
pub fn collinear_regression() -> PointSet {
    let coords: Vec<(f64, f64)> = (0..=10).map(|k| (0.0, f64::from(k))).collect();
    PointSet::from_coords(&coords).expect("finite")
}

fn compare(report: &mut VerifyReport, ps: &PointSet, mode: DecisionMode) {
    report.instances += 1;
    let coords = || ps.points().iter().map(|p| (p.x, p.y)).collect();
    let mut check = |check: &'static str, solver: Option<f64>, oracle: Option<f64>| {
        report.comparisons += 1;
        if solver != oracle && report.mismatch.is_none() {
            report.mismatch = Some(Mismatch { check, points: coords(), solver, oracle });
        }
    };
    if ps.len() <= DEFAULT_RECT_CAP {
        check(
            "rect",
            max_era_with(ps, mode).ok().map(|s| s.width),
            brute_max_era(ps, DEFAULT_RECT_CAP).ok().map(|r| r.width),
        );
    }
    if ps.len() <= DEFAULT_SQUARE_CAP {
        check(
            "square",
            max_esa(ps).ok().map(|s| s.width),
            brute_max_esa(ps, DEFAULT_SQUARE_CAP).ok().map(|r| r.width),
        );
    }
    check("corridor", widest_l_corridor(ps).map(|s| s.width), naive_corridor(ps).map(|(w, _)| w));
}

/// Runs `trials` seeded comparisons on general-position sets of 2 to
/// `n_max` points, preceded by the collinear regression set. Stops at the
/// first mismatch.
pub fn run_verify(cfg: &VerifyConfig) -> VerifyReport {
    let mut report = VerifyReport::default();
    if cfg.trials == 0 {
        return report;
    }
    compare(&mut report, &collinear_regression(), cfg.mode);
    let n_max = cfg.n_max.clamp(2, DEFAULT_RECT_CAP);
    for t in 0..cfg.trials as u64 {
        if report.mismatch.is_some() {
            break;
        }
        let seed = cfg.seed.wrapping_add(t);
        let n = 2 + (seed.wrapping_mul(2654435761) % (n_max as u64 - 1)) as usize;
        let dist = if t % 4 == 3 { Distribution::Clustered } else { Distribution::Uniform };
        compare(&mut report, &generate(&GenSpec::new(dist, n, seed)), cfg.mode);
    }
    report
}
