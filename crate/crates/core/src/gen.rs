//! Seeded point generators for tests, benchmarks and the CLI.
//!
//! Non-integer coordinates lie on a dyadic grid (multiples of `2^-14`
//! offset from the box corner), so for boxes with small dyadic corners every
//! sum, difference and halving the solvers perform is exact. The `uniform`
//! and `clustered` families also keep all x-coordinates distinct and all
//! y-coordinates distinct.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::PointSet;

const STEPS_PER_UNIT: f64 = 16384.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Distribution {
    /// Independent uniform coordinates, general position.
    Uniform,
    /// Gaussian-ish blobs around a few random centers, general position.
    Clustered,
    /// Integer lattice cells; many shared coordinates.
    Grid,
    /// Distinct integer heights on one vertical line.
    Collinear,
}

impl Distribution {
    pub const ALL: [Distribution; 4] =
        [Distribution::Uniform, Distribution::Clustered, Distribution::Grid, Distribution::Collinear];

    pub fn name(self) -> &'static str {
        match self {
            Distribution::Uniform => "uniform",
            Distribution::Clustered => "clustered",
            Distribution::Grid => "grid",
            Distribution::Collinear => "collinear",
        }
    }
}

impl std::str::FromStr for Distribution {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Distribution::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| format!("unknown distribution `{s}`"))
    }
}

/// Axis-parallel box `[x0, x1] × [y0, y1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundingBox {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Default for BoundingBox {
    fn default() -> Self {
        BoundingBox { x0: 0.0, y0: 0.0, x1: 1024.0, y1: 1024.0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenSpec {
    pub dist: Distribution,
    pub n: usize,
    pub seed: u64,
    pub bbox: BoundingBox,
}

impl GenSpec {
    pub fn new(dist: Distribution, n: usize, seed: u64) -> Self {
        GenSpec { dist, n, seed, bbox: BoundingBox::default() }
    }

    /// Rejects boxes that are inverted, non-finite, or too small for `n`
    /// distinct coordinates on the generator's grid.
    pub fn check(&self) -> Result<(), String> {
        let b = self.bbox;
        if ![b.x0, b.y0, b.x1, b.y1].iter().all(|v| v.is_finite()) || b.x0 > b.x1 || b.y0 > b.y1 {
            return Err(format!("invalid bounding box {},{},{},{}", b.x0, b.y0, b.x1, b.y1));
        }
        let room = |extent: f64| (extent * STEPS_PER_UNIT).floor() + 1.0;
        let general = matches!(self.dist, Distribution::Uniform | Distribution::Clustered);
        if general && (room(b.x1 - b.x0) < self.n as f64 || room(b.y1 - b.y0) < self.n as f64) {
            return Err(format!("bounding box too small for {} distinct coordinates", self.n));
        }
        Ok(())
    }
}

/// Generates the point set described by `spec`. Identical specs give
/// identical sets.
///
/// # Panics
/// If [`GenSpec::check`] fails.
pub fn generate(spec: &GenSpec) -> PointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let coords = match spec.dist {
        Distribution::Uniform => uniform(&mut rng, spec),
        Distribution::Clustered => clustered(&mut rng, spec),
        Distribution::Grid => grid(&mut rng, spec),
        Distribution::Collinear => collinear(&mut rng, spec),
    };
    PointSet::from_coords(&coords).expect("generated coordinates are finite")
}

// Distinct grid steps along one axis of length `extent`, drawn by `draw`.
fn distinct_steps(rng: &mut ChaCha8Rng, n: usize, extent: f64, mut draw: impl FnMut(&mut ChaCha8Rng) -> f64) -> Vec<u64> {
    let max_step = (extent.max(0.0) * STEPS_PER_UNIT).floor() as u64;
    assert!(max_step + 1 >= n as u64, "box too small for {n} distinct coordinates");
    let mut seen = HashSet::with_capacity(n);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let step = (draw(rng) * STEPS_PER_UNIT).round().clamp(0.0, max_step as f64) as u64;
        if seen.insert(step) {
            out.push(step);
        } else {
            // Collisions are rare; fall back to a fresh uniform draw.
            let step = rng.gen_range(0..=max_step);
            if seen.insert(step) {
                out.push(step);
            }
        }
    }
    out
}

fn to_coord(origin: f64, step: u64) -> f64 {
    origin + step as f64 / STEPS_PER_UNIT
}

fn uniform(rng: &mut ChaCha8Rng, spec: &GenSpec) -> Vec<(f64, f64)> {
    let b = spec.bbox;
    let (w, h) = (b.x1 - b.x0, b.y1 - b.y0);
    let xs = distinct_steps(rng, spec.n, w, |r| r.gen_range(0.0..=w.max(0.0)));
    let ys = distinct_steps(rng, spec.n, h, |r| r.gen_range(0.0..=h.max(0.0)));
    xs.into_iter()
        .zip(ys)
        .map(|(x, y)| (to_coord(b.x0, x), to_coord(b.y0, y)))
        .collect()
}

fn clustered(rng: &mut ChaCha8Rng, spec: &GenSpec) -> Vec<(f64, f64)> {
    let b = spec.bbox;
    let (w, h) = (b.x1 - b.x0, b.y1 - b.y0);
    let k = (spec.n / 8).clamp(1, 6);
    let centers: Vec<(f64, f64)> = (0..k)
        .map(|_| (rng.gen_range(0.0..=w.max(0.0)), rng.gen_range(0.0..=h.max(0.0))))
        .collect();
    let labels: Vec<usize> = (0..spec.n).map(|_| rng.gen_range(0..k)).collect();
    // Sum of three uniforms: cheap bell-shaped offsets.
    let blob = |r: &mut ChaCha8Rng, c: f64, extent: f64| {
        let s = extent / 16.0;
        c + (0..3).map(|_| r.gen_range(-s..=s)).sum::<f64>()
    };
    let mut li = labels.iter();
    let xs = distinct_steps(rng, spec.n, w, |r| blob(r, centers[*li.next().unwrap_or(&0)].0, w));
    let mut li = labels.iter();
    let ys = distinct_steps(rng, spec.n, h, |r| blob(r, centers[*li.next().unwrap_or(&0)].1, h));
    xs.into_iter()
        .zip(ys)
        .map(|(x, y)| (to_coord(b.x0, x), to_coord(b.y0, y)))
        .collect()
}

fn grid(rng: &mut ChaCha8Rng, spec: &GenSpec) -> Vec<(f64, f64)> {
    let b = spec.bbox;
    let side = ((spec.n as f64).sqrt().ceil() as u64 + 1).max(2);
    let stride = |extent: f64| ((extent / side as f64).floor()).max(1.0);
    let (sx, sy) = (stride(b.x1 - b.x0), stride(b.y1 - b.y0));
    let (ox, oy) = (b.x0.ceil(), b.y0.ceil());
    let mut cells: Vec<u64> = (0..side * side).collect();
    for i in (1..cells.len()).rev() {
        cells.swap(i, rng.gen_range(0..=i));
    }
    cells
        .into_iter()
        .cycle()
        .take(spec.n)
        .map(|c| (ox + (c % side) as f64 * sx, oy + (c / side) as f64 * sy))
        .collect()
}

fn collinear(rng: &mut ChaCha8Rng, spec: &GenSpec) -> Vec<(f64, f64)> {
    let b = spec.bbox;
    let x = ((b.x0 + b.x1) / 2.0).floor();
    let lo = b.y0.ceil() as i64;
    let hi = (b.y1.floor() as i64).max(lo + spec.n as i64 - 1);
    let mut seen = HashSet::with_capacity(spec.n);
    let mut out = Vec::with_capacity(spec.n);
    while out.len() < spec.n {
        let y = rng.gen_range(lo..=hi);
        if seen.insert(y) {
            out.push((x, y as f64));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        for dist in Distribution::ALL {
            let spec = GenSpec::new(dist, 40, 42);
            assert_eq!(generate(&spec).points(), generate(&spec).points());
        }
        assert_ne!(
            generate(&GenSpec::new(Distribution::Uniform, 5, 1)).points(),
            generate(&GenSpec::new(Distribution::Uniform, 5, 2)).points()
        );
    }

    #[test]
    fn general_position_families() {
        for dist in [Distribution::Uniform, Distribution::Clustered] {
            for seed in 0..20 {
                let ps = generate(&GenSpec::new(dist, 50, seed));
                let mut xs: Vec<f64> = ps.points().iter().map(|p| p.x).collect();
                let mut ys: Vec<f64> = ps.points().iter().map(|p| p.y).collect();
                xs.sort_by(f64::total_cmp);
                ys.sort_by(f64::total_cmp);
                xs.dedup();
                ys.dedup();
                assert_eq!((xs.len(), ys.len()), (50, 50));
                assert!(ps.points().iter().all(|p| (0.0..=1024.0).contains(&p.x) && (0.0..=1024.0).contains(&p.y)));
                assert!(ps.points().iter().all(|p| (p.x * STEPS_PER_UNIT).fract() == 0.0));
            }
        }
    }

    #[test]
    fn grid_and_collinear_shapes() {
        let g = generate(&GenSpec::new(Distribution::Grid, 9, 1));
        assert_eq!(g.len(), 9);
        assert!(g.points().iter().all(|p| p.x.fract() == 0.0 && p.y.fract() == 0.0));
        let c = generate(&GenSpec::new(Distribution::Collinear, 11, 0));
        assert_eq!(c.len(), 11);
        assert!(c.points().iter().all(|p| p.x == c.points()[0].x));
        assert_eq!(generate(&GenSpec::new(Distribution::Uniform, 0, 3)).len(), 0);
    }

    #[test]
    fn checks_boxes() {
        let mut spec = GenSpec::new(Distribution::Uniform, 5, 0);
        assert!(spec.check().is_ok());
        spec.bbox = BoundingBox { x0: 1.0, y0: 0.0, x1: 0.0, y1: 1.0 };
        assert!(spec.check().is_err());
        spec.bbox = BoundingBox { x0: 0.0, y0: 0.0, x1: 0.0, y1: 1.0 };
        assert!(spec.check().is_err());
        spec.dist = Distribution::Grid;
        assert!(spec.check().is_ok());
    }

    #[test]
    fn parses_names() {
        assert_eq!("grid".parse::<Distribution>(), Ok(Distribution::Grid));
        assert!("gauss".parse::<Distribution>().is_err());
    }
}
