//! Brute-force references for the solvers and query structures.
//!
//! Nothing here calls into the fast solvers or the range structures; the
//! only shared code is the geometry predicates. Everything is written for
//! clarity over speed, so the annulus oracles refuse inputs above a
//! configurable size.

use crate::error::Error;
use crate::geometry::{is_empty, is_valid, OrthoRect, PointSet, RectAnnulus};
use crate::range::Band;

pub const DEFAULT_RECT_CAP: usize = 30;
pub const DEFAULT_SQUARE_CAP: usize = 25;

const INF: f64 = f64::INFINITY;

/// Outcome of an exhaustive search.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleReport {
    pub width: f64,
    pub annulus: RectAnnulus,
    /// Candidate configurations examined.
    pub candidates: u64,
}

fn check_cap(ps: &PointSet, cap: usize) -> Result<(), Error> {
    if ps.len() > cap {
        Err(Error::OracleCapExceeded { n: ps.len(), cap })
    } else {
        Ok(())
    }
}

fn distinct_sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v.dedup();
    v
}

fn consider(best: &mut Option<(f64, RectAnnulus)>, w: f64, a: RectAnnulus) {
    if best.as_ref().is_none_or(|(bw, _)| w > *bw) {
        *best = Some((w, a));
    }
}

/// Widest valid empty rectangular annulus by enumerating every outer
/// rectangle whose sides are input coordinates or infinite.
///
/// For a fixed outer rectangle the widest empty annulus is uniform, and its
/// width is the smallest margin of any point strictly inside the outer
/// rectangle to the four sides.
pub fn brute_max_era(ps: &PointSet, cap: usize) -> Result<OracleReport, Error> {
    check_cap(ps, cap)?;
    let pts = ps.points();
    let xs = distinct_sorted(pts.iter().map(|p| p.x).collect());
    let ys = distinct_sorted(pts.iter().map(|p| p.y).collect());
    let sides = |vals: &[f64]| {
        let lows: Vec<f64> = std::iter::once(-INF).chain(vals.iter().copied()).collect();
        let highs: Vec<f64> = vals.iter().copied().chain(std::iter::once(INF)).collect();
        let mut pairs = Vec::new();
        for &lo in &lows {
            for &hi in &highs {
                if lo < hi {
                    pairs.push((lo, hi));
                }
            }
        }
        pairs
    };
    let x_sides = sides(&xs);
    let y_sides = sides(&ys);

    let mut best: Option<(f64, RectAnnulus)> = None;
    let mut candidates = 0u64;
    for &(left, right) in &x_sides {
        let columns: Vec<(f64, f64)> = pts
            .iter()
            .filter(|p| left < p.x && p.x < right)
            .map(|p| (p.y, (p.x - left).min(right - p.x)))
            .collect();
        if columns.is_empty() {
            continue;
        }
        for &(bottom, top) in &y_sides {
            candidates += 1;
            let w = columns
                .iter()
                .filter(|&&(y, _)| bottom < y && y < top)
                .map(|&(y, mx)| mx.min(y - bottom).min(top - y))
                .fold(INF, f64::min);
            if w == INF {
                continue;
            }
            let a = RectAnnulus::uniform(OrthoRect::new(left, right, bottom, top), w);
            if is_empty(&a, ps) && is_valid(&a, ps) {
                consider(&mut best, w, a);
            }
        }
    }
    best.map(|(width, annulus)| OracleReport { width, annulus, candidates })
        .ok_or(Error::NoValidAnnulus)
}

/// Widest valid empty square annulus over the three configurations: two
/// opposite outer sides on points, an L-shaped corridor, and a strip.
pub fn brute_max_esa(ps: &PointSet, cap: usize) -> Result<OracleReport, Error> {
    check_cap(ps, cap)?;
    let mut best: Option<(f64, RectAnnulus)> = None;
    let mut candidates = 0u64;

    let coords: Vec<(f64, f64)> = ps.points().iter().map(|p| (p.x, p.y)).collect();
    let swapped: Vec<(f64, f64)> = coords.iter().map(|&(x, y)| (y, x)).collect();
    for (pts, transposed) in [(&coords, false), (&swapped, true)] {
        if let Some((w, a)) = brute_opposite(pts, &mut candidates) {
            consider(&mut best, w, if transposed { a.transpose() } else { a });
        }
    }
    if let Some((w, a)) = naive_corridor(ps) {
        consider(&mut best, w, a);
    }
    if let Some((w, a)) = brute_strip(ps) {
        consider(&mut best, w, a);
    }
    best.map(|(width, annulus)| OracleReport { width, annulus, candidates })
        .ok_or(Error::NoValidAnnulus)
}

// Squares whose top and bottom sides pass through two points.
fn brute_opposite(pts: &[(f64, f64)], candidates: &mut u64) -> Option<(f64, RectAnnulus)> {
    let mut best = None;
    for &(xa, ya) in pts {
        for &(xb, yb) in pts {
            if ya <= yb {
                continue;
            }
            let r = (ya - yb) / 2.0;
            let ell = (ya + yb) / 2.0;
            let (c_lo, c_hi) = (xa.max(xb) - r, xa.min(xb) + r);
            if c_lo > c_hi {
                continue;
            }
            let slab: Vec<(f64, f64)> = pts.iter().copied().filter(|&(_, y)| yb < y && y < ya).collect();
            if slab.is_empty() {
                continue;
            }
            let mut centers = vec![c_lo, c_hi];
            for &(xp, yp) in &slab {
                let dp = (yp - ell).abs();
                centers.extend([xp - r, xp + r, xp, xp - dp, xp + dp]);
                for &(xq, yq) in &slab {
                    let dq = (yq - ell).abs();
                    centers.extend([(xp + xq) / 2.0, xp - dq, xp + dq]);
                }
            }
            for c in centers {
                if c < c_lo || c > c_hi {
                    continue;
                }
                *candidates += 1;
                let inner = slab
                    .iter()
                    .map(|&(x, y)| (x - c).abs().max((y - ell).abs()))
                    .filter(|&d| d < r)
                    .fold(0.0, f64::max);
                let hit = slab.iter().any(|&(x, y)| x == c && y == ell);
                if !(inner > 0.0 || hit) {
                    continue;
                }
                let a = RectAnnulus::new(
                    OrthoRect::new(c - r, c + r, yb, ya),
                    OrthoRect::new(c - inner, c + inner, ell - inner, ell + inner),
                );
                consider(&mut best, r - inner, a);
            }
        }
    }
    best
}

/// Widest empty axis-parallel L-shaped corridor by scanning every grid
/// corner and quadrant against every point.
///
/// Only points strictly inside the open quadrant count; the corridor width
/// is the smaller of their nearest horizontal and vertical offsets.
pub fn naive_corridor(ps: &PointSet) -> Option<(f64, RectAnnulus)> {
    let pts = ps.points();
    let xs = distinct_sorted(pts.iter().map(|p| p.x).collect());
    let ys = distinct_sorted(pts.iter().map(|p| p.y).collect());
    let mut best = None;
    for &ox in &xs {
        for &oy in &ys {
            for (sx, sy) in [(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)] {
                let mut w = INF;
                for p in pts {
                    let (dx, dy) = (sx * (p.x - ox), sy * (p.y - oy));
                    if dx > 0.0 && dy > 0.0 {
                        w = w.min(dx).min(dy);
                    }
                }
                if w == INF {
                    continue;
                }
                let (x_out, x_in) = if sx > 0.0 { ((ox, INF), (ox + w, INF)) } else { ((-INF, ox), (-INF, ox - w)) };
                let (y_out, y_in) = if sy > 0.0 { ((oy, INF), (oy + w, INF)) } else { ((-INF, oy), (-INF, oy - w)) };
                let a = RectAnnulus::new(
                    OrthoRect::new(x_out.0, x_out.1, y_out.0, y_out.1),
                    OrthoRect::new(x_in.0, x_in.1, y_in.0, y_in.1),
                );
                consider(&mut best, w, a);
            }
        }
    }
    best
}

fn brute_strip(ps: &PointSet) -> Option<(f64, RectAnnulus)> {
    let mut best = None;
    for transposed in [false, true] {
        let vals = distinct_sorted(
            ps.points()
                .iter()
                .map(|p| if transposed { p.y } else { p.x })
                .collect(),
        );
        for pair in vals.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let ring = RectAnnulus::new(OrthoRect::new(a, INF, -INF, INF), OrthoRect::new(b, INF, -INF, INF));
            consider(&mut best, b - a, if transposed { ring.transpose() } else { ring });
        }
    }
    best
}

/// Reference for the rectangular decision: is there a valid empty uniform
/// annulus of width `w` with the point at descending-y position `i` on the
/// outer top side and the one at position `j` on the outer bottom side
/// (`None`: bottom at infinity)?
///
/// Mirrors the predicate of the fast decision with plain scans: open bands
/// of height `w` below the top and above the bottom must avoid the open
/// outer x-range; the outer left side is the leftmost feasible position
/// right of the nearest band point, the right side the rightmost; the
/// outer box must be at least `2w` wide and its inner box must hold a point.
pub fn naive_decide(ps: &PointSet, i: usize, j: Option<usize>, w: f64) -> Option<RectAnnulus> {
    let top = *ps.nth_by_y(i);
    let (bottom_y, bottom_x) = match j {
        Some(j) => {
            let b = ps.nth_by_y(j);
            if top.y - b.y < 2.0 * w {
                return None;
            }
            (b.y, b.x)
        }
        None => (-INF, top.x),
    };
    let end = j.unwrap_or(ps.len());
    let active: Vec<(f64, f64)> = ps.by_y()[i + 1..end]
        .iter()
        .map(|&id| (ps.point(id).x, ps.point(id).y))
        .collect();
    let (m, big_m) = (top.x.min(bottom_x), top.x.max(bottom_x));
    let top_band = (top.y - w, top.y);
    let bottom_band = (bottom_y, bottom_y + w);
    let in_band = |y: f64| (top_band.0 < y && y < top_band.1) || (j.is_some() && bottom_band.0 < y && y < bottom_band.1);
    let band_xs: Vec<f64> = active.iter().filter(|&&(_, y)| in_band(y)).map(|&(x, _)| x).collect();
    if band_xs.iter().any(|&x| m < x && x < big_m) {
        return None;
    }
    let left_stop = band_xs.iter().copied().filter(|&x| x <= m).fold(-INF, f64::max);
    let right_stop = band_xs.iter().copied().filter(|&x| x >= big_m).fold(INF, f64::min);

    let values: Vec<f64> = active.iter().map(|&(x, _)| x).collect();
    let l = naive_leftmost_gap(&values, left_stop, m + w, w)?;
    let r = naive_rightmost_gap(&values, big_m - w, right_stop, w)?;
    if r - l < 2.0 * w {
        return None;
    }
    let inner = OrthoRect::new(l + w, r - w, bottom_y + w, top.y - w);
    if !active.iter().any(|&(x, y)| inner.contains_closed(x, y)) {
        return None;
    }
    Some(RectAnnulus::new(OrthoRect::new(l, r, bottom_y, top.y), inner))
}

/// Pointwise envelopes `(G, H, F)` at center abscissa `c` on the line
/// `y = ell`: the largest horizontal offset, vertical offset, and Chebyshev
/// distance of any slab point strictly inside the outer square of radius
/// `r`, or 0 when none is.
pub fn naive_envelopes(slab: &[(f64, f64)], ell: f64, r: f64, c: f64) -> (f64, f64, f64) {
    let mut out = (0.0f64, 0.0f64, 0.0f64);
    for &(x, y) in slab {
        let (dx, dy) = ((x - c).abs(), (y - ell).abs());
        if dx.max(dy) < r {
            out = (out.0.max(dx), out.1.max(dy), out.2.max(dx.max(dy)));
        }
    }
    out
}

fn band_contains(band: &Band, v: f64) -> bool {
    let lo_ok = if band.lo_open { v > band.lo } else { v >= band.lo };
    let hi_ok = if band.hi_open { v < band.hi } else { v <= band.hi };
    lo_ok && hi_ok
}

/// Scan version of the neighbor structure's horizontal queries: the
/// rightmost point with `y` in `band` and `x <= at`, and the leftmost with
/// `x >= at`. Ties prefer the larger (resp. smaller) `(x, y, id)`.
pub fn naive_y_range_x_neighbor(ps: &PointSet, at: f64, band: Band) -> (Option<usize>, Option<usize>) {
    let key = |id: usize| {
        let p = ps.point(id);
        (p.x, p.y, id)
    };
    let cmp = |a: &usize, b: &usize| {
        let (ka, kb) = (key(*a), key(*b));
        ka.0.total_cmp(&kb.0).then(ka.1.total_cmp(&kb.1)).then(ka.2.cmp(&kb.2))
    };
    let in_band = ps.points().iter().filter(|p| band_contains(&band, p.y));
    let left = in_band.clone().filter(|p| p.x <= at).map(|p| p.id).max_by(cmp);
    let right = in_band.filter(|p| p.x >= at).map(|p| p.id).min_by(cmp);
    (left, right)
}

/// Scan version of the vertical queries: highest point with `x` in `band`
/// and `y <= at`, lowest with `y >= at`.
pub fn naive_x_range_y_neighbor(ps: &PointSet, at: f64, band: Band) -> (Option<usize>, Option<usize>) {
    let key = |id: usize| {
        let p = ps.point(id);
        (p.y, p.x, id)
    };
    let cmp = |a: &usize, b: &usize| {
        let (ka, kb) = (key(*a), key(*b));
        ka.0.total_cmp(&kb.0).then(ka.1.total_cmp(&kb.1)).then(ka.2.cmp(&kb.2))
    };
    let in_band = ps.points().iter().filter(|p| band_contains(&band, p.x));
    let below = in_band.clone().filter(|p| p.y <= at).map(|p| p.id).max_by(cmp);
    let above = in_band.filter(|p| p.y >= at).map(|p| p.id).min_by(cmp);
    (below, above)
}

/// Sort-and-scan maximum gap of `{x1, x2} ∪ {v in values : x1 <= v <= x2}`;
/// returns the leftmost widest consecutive pair.
pub fn naive_max_gap(values: &[f64], x1: f64, x2: f64) -> (f64, f64) {
    let mut set: Vec<f64> = values.iter().copied().filter(|&v| x1 <= v && v <= x2).collect();
    set.push(x1);
    set.push(x2);
    set.sort_by(f64::total_cmp);
    let gap = |a: f64, b: f64| if a == b { if a.is_infinite() { INF } else { 0.0 } } else { b - a };
    let mut best = (set[0], set[1]);
    for pair in set.windows(2) {
        if gap(pair[0], pair[1]) > gap(best.0, best.1) {
            best = (pair[0], pair[1]);
        }
    }
    best
}

/// Smallest `l` among `x_lo` and the values above it with `l + w <= x_hi`
/// and no value in the open window `(l, l + w)`.
pub fn naive_leftmost_gap(values: &[f64], x_lo: f64, x_hi: f64, w: f64) -> Option<f64> {
    let mut starts: Vec<f64> = values.iter().copied().filter(|&v| v >= x_lo).collect();
    starts.push(x_lo);
    starts.sort_by(f64::total_cmp);
    starts
        .into_iter()
        .find(|&l| l + w <= x_hi && !values.iter().any(|&v| l < v && v < l + w))
}

/// Largest `r` among `x_hi` and the values below it with `r - w >= x_lo`
/// and no value in `(r - w, r)`.
pub fn naive_rightmost_gap(values: &[f64], x_lo: f64, x_hi: f64, w: f64) -> Option<f64> {
    let mut ends: Vec<f64> = values.iter().copied().filter(|&v| v <= x_hi).collect();
    ends.push(x_hi);
    ends.sort_by(|a, b| b.total_cmp(a));
    ends.into_iter()
        .find(|&r| r - w >= x_lo && !values.iter().any(|&v| r - w < v && v < r))
}
