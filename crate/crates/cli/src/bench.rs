//! Wall-clock timing table for the fast solvers and the capped oracles.

use std::time::Instant;

use annulus_core::gen::{generate, Distribution, GenSpec};
use annulus_core::oracle::{brute_max_era, brute_max_esa, DEFAULT_RECT_CAP, DEFAULT_SQUARE_CAP};
use annulus_core::{max_era, max_esa, Error};

use crate::{solve, Problem};

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub algorithm: &'static str,
    pub millis: f64,
    /// `None` when the input has no valid annulus.
    pub width: Option<f64>,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1e3)
}

/// Times one fast solver on a generated instance.
pub fn time_solver(problem: Problem, n: usize, dist: Distribution, seed: u64) -> BenchRow {
    let ps = generate(&GenSpec::new(dist, n, seed));
    let (width, millis) = timed(|| solve(&ps, problem).map(|s| s.width));
    let algorithm = match problem {
        Problem::Square => "square-fast",
        Problem::Rect => "rect-fast",
    };
    BenchRow { n, algorithm, millis, width: width.ok() }
}

/// One row per size and algorithm; oracle rows only up to their caps.
pub fn run_bench(sizes: &[usize], dist: Distribution, seed: u64) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    for &n in sizes {
        let ps = generate(&GenSpec::new(dist, n, seed));
        let mut push = |algorithm, (w, millis): (Result<f64, Error>, f64)| {
            rows.push(BenchRow { n, algorithm, millis, width: w.ok() });
        };
        push("square-fast", timed(|| max_esa(&ps).map(|s| s.width)));
        push("rect-fast", timed(|| max_era(&ps).map(|s| s.width)));
        if n <= DEFAULT_SQUARE_CAP {
            push("square-oracle", timed(|| brute_max_esa(&ps, DEFAULT_SQUARE_CAP).map(|r| r.width)));
        }
        if n <= DEFAULT_RECT_CAP {
            push("rect-oracle", timed(|| brute_max_era(&ps, DEFAULT_RECT_CAP).map(|r| r.width)));
        }
    }
    rows
}

/// Tab-separated table with a header row.
pub fn to_tsv(rows: &[BenchRow]) -> String {
    let mut out = String::from("n\talgorithm\twall_ms\twidth\n");
    for r in rows {
        let width = r.width.map_or_else(|| "none".to_string(), |w| w.to_string());
        out.push_str(&format!("{}\t{}\t{:.3}\t{}\n", r.n, r.algorithm, r.millis, width));
    }
    out
}
