//! Widest empty L-shaped corridor: a square annulus whose outer square has
//! grown until two adjacent sides remain at finite positions.
//!
//! The outer corner of an optimal corridor can be moved to a grid point
//! `(x_a, y_b)` of input coordinates. From there the corridor is bounded by
//! the nearest point of the open quadrant horizontally and vertically, two
//! neighbor queries per corner and quadrant.

use crate::geometry::{keep_best, AnnulusSolution, OrthoRect, PointSet, RectAnnulus, Shape};
use crate::range::{Band, NeighborStructure};

const INF: f64 = f64::INFINITY;

/// Which open quadrant of the corner the corridor wraps around.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quadrant {
    TopRight,
    TopLeft,
    BottomLeft,
    BottomRight,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::TopRight, Quadrant::TopLeft, Quadrant::BottomLeft, Quadrant::BottomRight];

    fn opens_right(self) -> bool {
        matches!(self, Quadrant::TopRight | Quadrant::BottomRight)
    }

    fn opens_up(self) -> bool {
        matches!(self, Quadrant::TopRight | Quadrant::TopLeft)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridCorner {
    pub x: f64,
    pub y: f64,
}

/// Width of the corridor at `corner` around `quadrant` and the id of the
/// point that limits it, or `None` when the open quadrant is empty.
pub fn corridor_width_at(ps: &PointSet, ns: &NeighborStructure, corner: GridCorner, quadrant: Quadrant) -> Option<(f64, usize)> {
    let GridCorner { x, y } = corner;
    let ys = if quadrant.opens_up() { Band::open(y, INF) } else { Band::open(-INF, y) };
    let xband = if quadrant.opens_right() { Band::open(x, INF) } else { Band::open(-INF, x) };
    let (hx, dx) = if quadrant.opens_right() {
        let id = ns.leftmost(ys, x, false)?;
        (id, ps.point(id).x - x)
    } else {
        let id = ns.rightmost(ys, x, false)?;
        (id, x - ps.point(id).x)
    };
    let (hy, dy) = if quadrant.opens_up() {
        let id = ns.lowest(xband, y, false)?;
        (id, ps.point(id).y - y)
    } else {
        let id = ns.highest(xband, y, false)?;
        (id, y - ps.point(id).y)
    };
    Some(if dx <= dy { (dx, hx) } else { (dy, hy) })
}

/// The rectangular form of a corridor of width `w`.
pub fn corridor_annulus(corner: GridCorner, quadrant: Quadrant, w: f64) -> RectAnnulus {
    let GridCorner { x, y } = corner;
    let (xo, xi) = if quadrant.opens_right() { ((x, INF), (x + w, INF)) } else { ((-INF, x), (-INF, x - w)) };
    let (yo, yi) = if quadrant.opens_up() { ((y, INF), (y + w, INF)) } else { ((-INF, y), (-INF, y - w)) };
    RectAnnulus::new(OrthoRect::new(xo.0, xo.1, yo.0, yo.1), OrthoRect::new(xi.0, xi.1, yi.0, yi.1))
}

/// Widest empty corridor over all grid corners and quadrants, or `None`
/// when every open quadrant is empty (fewer than two distinct points).
///
/// Witnesses are a point on the vertical outer side, one on the horizontal
/// outer side, and the point limiting the width.
pub fn widest_l_corridor(ps: &PointSet) -> Option<AnnulusSolution> {
    widest_l_corridor_with(ps, &NeighborStructure::new(ps))
}

pub(crate) fn widest_l_corridor_with(ps: &PointSet, ns: &NeighborStructure) -> Option<AnnulusSolution> {
    let column = distinct_firsts(ps.by_x(), |id| ps.point(id).x);
    let mut rows = ps.by_y().to_vec();
    rows.reverse();
    let row = distinct_firsts(&rows, |id| ps.point(id).y);

    let mut best = None;
    for &(x, x_id) in &column {
        for &(y, y_id) in &row {
            let corner = GridCorner { x, y };
            for q in Quadrant::ALL {
                let Some((w, near)) = corridor_width_at(ps, ns, corner, q) else { continue };
                if best.as_ref().is_some_and(|b: &AnnulusSolution| w < b.width) {
                    continue;
                }
                keep_best(
                    &mut best,
                    AnnulusSolution {
                        width: w,
                        shape: Shape::SquareCorner,
                        rect_form: corridor_annulus(corner, q, w),
                        square: None,
                        witness_ids: vec![x_id, y_id, near],
                    },
                );
            }
        }
    }
    best
}

// Distinct coordinate values in ascending order, each with its first id.
fn distinct_firsts(order: &[usize], coord: impl Fn(usize) -> f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    for &id in order {
        let v = coord(id);
        if out.last().is_none_or(|&(u, _)| u != v) {
            out.push((v, id));
        }
    }
    out
}
