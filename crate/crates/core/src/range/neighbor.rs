//! Static orthogonal neighbor queries over a whole point set.
//!
//! A query fixes a band in one coordinate and asks for the nearest point on
//! either side of a threshold in the other coordinate. Each band is a
//! contiguous range of the points sorted by the band coordinate, and the
//! nearest-neighbor search inside that range is a range predecessor query
//! on a wavelet matrix of ranks. Build is `O(n log n)`, space `O(n)` words,
//! and each query costs `O(log n)`.

use super::wavelet::WaveletMatrix;
use crate::geometry::PointSet;

/// An interval of one coordinate with independently open or closed ends.
/// Either end may be infinite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Band {
    pub lo: f64,
    pub hi: f64,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl Band {
    pub fn closed(lo: f64, hi: f64) -> Self {
        Band { lo, hi, lo_open: false, hi_open: false }
    }

    pub fn open(lo: f64, hi: f64) -> Self {
        Band { lo, hi, lo_open: true, hi_open: true }
    }

    pub fn contains(&self, v: f64) -> bool {
        let above = if self.lo_open { v > self.lo } else { v >= self.lo };
        let below = if self.hi_open { v < self.hi } else { v <= self.hi };
        above && below
    }
}

/// A query answer: an input point, or a sentinel at infinity when the
/// searched range is empty.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Neighbor {
    Point(usize),
    AtInfinity { x: f64, y: f64 },
}

impl Neighbor {
    pub fn id(self) -> Option<usize> {
        match self {
            Neighbor::Point(id) => Some(id),
            Neighbor::AtInfinity { .. } => None,
        }
    }
}

/// Points sorted by `key`; range queries over `val`.
#[derive(Clone, Debug)]
struct BandIndex {
    keys: Vec<f64>,
    vals: Vec<f64>,
    val_rank_to_id: Vec<usize>,
    matrix: WaveletMatrix,
}

impl BandIndex {
    fn new(ps: &PointSet, key: impl Fn(f64, f64) -> f64, val: impl Fn(f64, f64) -> f64) -> Self {
        let pts = ps.points();
        let kv = |id: usize| (key(pts[id].x, pts[id].y), val(pts[id].x, pts[id].y));
        let mut by_key: Vec<usize> = (0..pts.len()).collect();
        by_key.sort_by(|&a, &b| {
            let ((ka, va), (kb, vb)) = (kv(a), kv(b));
            ka.total_cmp(&kb).then(va.total_cmp(&vb)).then(a.cmp(&b))
        });
        let mut by_val: Vec<usize> = (0..pts.len()).collect();
        by_val.sort_by(|&a, &b| {
            let ((ka, va), (kb, vb)) = (kv(a), kv(b));
            va.total_cmp(&vb).then(ka.total_cmp(&kb)).then(a.cmp(&b))
        });
        let mut val_rank = vec![0; pts.len()];
        for (rank, &id) in by_val.iter().enumerate() {
            val_rank[id] = rank;
        }
        let ranks: Vec<usize> = by_key.iter().map(|&id| val_rank[id]).collect();
        BandIndex {
            keys: by_key.iter().map(|&id| kv(id).0).collect(),
            vals: by_val.iter().map(|&id| kv(id).1).collect(),
            val_rank_to_id: by_val,
            matrix: WaveletMatrix::new(&ranks),
        }
    }

    fn positions(&self, band: &Band) -> (usize, usize) {
        let a = if band.lo_open {
            self.keys.partition_point(|&k| k <= band.lo)
        } else {
            self.keys.partition_point(|&k| k < band.lo)
        };
        let b = if band.hi_open {
            self.keys.partition_point(|&k| k < band.hi)
        } else {
            self.keys.partition_point(|&k| k <= band.hi)
        };
        (a, b.max(a))
    }

    /// Point with the largest value `<= v` (`< v` when not inclusive).
    fn below(&self, band: &Band, v: f64, inclusive: bool) -> Option<usize> {
        let (a, b) = self.positions(band);
        let bound = if inclusive {
            self.vals.partition_point(|&u| u <= v)
        } else {
            self.vals.partition_point(|&u| u < v)
        };
        self.matrix.prev_value(a, b, bound).map(|r| self.val_rank_to_id[r])
    }

    /// The points with the largest value `<= v` and the smallest `> v`.
    fn split(&self, band: &Band, v: f64) -> (Option<usize>, Option<usize>) {
        let (a, b) = self.positions(band);
        let bound = self.vals.partition_point(|&u| u <= v);
        let (lo, hi) = self.matrix.straddle(a, b, bound);
        (lo.map(|r| self.val_rank_to_id[r]), hi.map(|r| self.val_rank_to_id[r]))
    }

    /// Point with the smallest value `>= v` (`> v` when not inclusive).
    fn above(&self, band: &Band, v: f64, inclusive: bool) -> Option<usize> {
        let (a, b) = self.positions(band);
        let bound = if inclusive {
            self.vals.partition_point(|&u| u < v)
        } else {
            self.vals.partition_point(|&u| u <= v)
        };
        self.matrix.next_value(a, b, bound).map(|r| self.val_rank_to_id[r])
    }
}

/// Static neighbor structure over every point of a [`PointSet`]; answers
/// are point ids. It does not change when solvers activate or deactivate
/// points elsewhere.
#[derive(Clone, Debug)]
pub struct NeighborStructure {
    rows: BandIndex,
    cols: BandIndex,
}

impl NeighborStructure {
    pub fn new(ps: &PointSet) -> Self {
        NeighborStructure {
            rows: BandIndex::new(ps, |_, y| y, |x, _| x),
            cols: BandIndex::new(ps, |x, _| x, |_, y| y),
        }
    }

    /// Rightmost point with `y` in `band` and `x <= at` (`x < at` when not
    /// inclusive).
    pub fn rightmost(&self, band: Band, at: f64, inclusive: bool) -> Option<usize> {
        self.rows.below(&band, at, inclusive)
    }

    /// Leftmost point with `y` in `band` and `x >= at` (`x > at` when not
    /// inclusive).
    pub fn leftmost(&self, band: Band, at: f64, inclusive: bool) -> Option<usize> {
        self.rows.above(&band, at, inclusive)
    }

    /// `(rightmost(band, at, true), leftmost(band, at, false))` in one query.
    pub fn split_at(&self, band: Band, at: f64) -> (Option<usize>, Option<usize>) {
        self.rows.split(&band, at)
    }

    /// Highest point with `x` in `band` and `y <= at`.
    pub fn highest(&self, band: Band, at: f64, inclusive: bool) -> Option<usize> {
        self.cols.below(&band, at, inclusive)
    }

    /// Lowest point with `x` in `band` and `y >= at`.
    pub fn lowest(&self, band: Band, at: f64, inclusive: bool) -> Option<usize> {
        self.cols.above(&band, at, inclusive)
    }

    /// The rightmost point in the band with `x <= at` and the leftmost one
    /// with `x >= at`. Missing answers are sentinels at `x = ∓inf` carrying
    /// `y = band.lo`.
    pub fn y_range_x_neighbor(&self, at: f64, band: Band) -> (Neighbor, Neighbor) {
        let wrap = |id: Option<usize>, x: f64| match id {
            Some(id) => Neighbor::Point(id),
            None => Neighbor::AtInfinity { x, y: band.lo },
        };
        (
            wrap(self.rightmost(band, at, true), f64::NEG_INFINITY),
            wrap(self.leftmost(band, at, true), f64::INFINITY),
        )
    }

    /// The highest point in the vertical band with `y <= at` and the lowest
    /// one with `y >= at`; sentinels sit at `y = ∓inf` with `x = band.lo`.
    pub fn x_range_y_neighbor(&self, at: f64, band: Band) -> (Neighbor, Neighbor) {
        let wrap = |id: Option<usize>, y: f64| match id {
            Some(id) => Neighbor::Point(id),
            None => Neighbor::AtInfinity { x: band.lo, y },
        };
        (
            wrap(self.highest(band, at, true), f64::NEG_INFINITY),
            wrap(self.lowest(band, at, true), f64::INFINITY),
        )
    }
}
