//! Widest empty square annulus.
//!
//! Some side of an optimal inner square touches a point, and the outer
//! square either has two opposite sides on points, or is unbounded on two
//! adjacent sides (an L-shaped corridor), or on three (a strip between two
//! consecutive coordinates). Each configuration is solved separately and
//! the widest result wins; opposite sides are tried both horizontally and,
//! after swapping coordinates, vertically.

use crate::corridor::widest_l_corridor_with;
use crate::envelope::{build_f, build_g, build_h, minimize_valid, PairContext};
use crate::error::Error;
use crate::geometry::{keep_best, AnnulusSolution, OrthoRect, PointSet, RectAnnulus, Shape, SquareAnnulus};
use crate::range::NeighborStructure;

const INF: f64 = f64::INFINITY;

/// Widest valid empty square annulus of `ps`.
///
/// # Errors
/// [`Error::NoValidAnnulus`] when fewer than two distinct points exist.
pub fn max_esa(ps: &PointSet) -> Result<AnnulusSolution, Error> {
    let mut best = None;
    for s in [solve_opposite(ps), widest_l_corridor_with(ps, &NeighborStructure::new(ps)), solve_strip(ps)]
        .into_iter()
        .flatten()
    {
        keep_best(&mut best, s);
    }
    best.ok_or(Error::NoValidAnnulus)
}

/// Best annulus whose outer square has a point on two opposite sides.
pub fn solve_opposite(ps: &PointSet) -> Option<AnnulusSolution> {
    let mut best = solve_top_bottom(ps, None);
    let swapped = ps.map(|x, y| (y, x));
    if let Some(s) = solve_top_bottom(&swapped, best.as_ref().map(|b| b.width)) {
        keep_best(
            &mut best,
            AnnulusSolution {
                rect_form: s.rect_form.transpose(),
                square: s.square.map(|q| SquareAnnulus { center: (q.center.1, q.center.0), ..q }),
                ..s
            },
        );
    }
    best
}

// Top and bottom outer sides on points. Pairs whose outer radius is below
// `floor` cannot win and are skipped.
fn solve_top_bottom(ps: &PointSet, floor: Option<f64>) -> Option<AnnulusSolution> {
    let n = ps.len();
    let mut best: Option<AnnulusSolution> = None;
    for i in 0..n {
        for j in i + 2..n {
            let Some(shell) = PairContext::without_slab(ps, i, j) else { continue };
            let bar = best.as_ref().map(|b| b.width).or(floor);
            if !shell.has_centers() || bar.is_some_and(|w| shell.r < w) {
                continue;
            }
            let Some(ctx) = PairContext::new(ps, i, j) else { continue };
            if ctx.slab_ids.is_empty() {
                continue;
            }
            let f = build_f(&build_g(&ctx), &build_h(&ctx));
            let Some(choice) = minimize_valid(&f, &ctx) else { continue };
            let square = SquareAnnulus {
                center: (choice.center_x, ctx.ell_y),
                outer_radius: ctx.r,
                inner_radius: choice.inner_radius,
            };
            let inner_witness = inner_witness(&ctx, square);
            keep_best(
                &mut best,
                AnnulusSolution {
                    width: choice.width,
                    shape: Shape::SquareOpposite,
                    rect_form: square.to_rect(),
                    square: Some(square),
                    witness_ids: vec![ctx.top_id, ctx.bottom_id, inner_witness],
                },
            );
        }
    }
    best
}

// The slab point on the boundary of the inner square (or at its center).
fn inner_witness(ctx: &PairContext, sq: SquareAnnulus) -> usize {
    let (cx, cy) = sq.center;
    let miss = |&(x, y): &(f64, f64)| ((x - cx).abs().max((y - cy).abs()) - sq.inner_radius).abs();
    let k = (0..ctx.slab_ids.len())
        .min_by(|&a, &b| miss(&ctx.slab()[a]).total_cmp(&miss(&ctx.slab()[b])))
        .expect("slab is nonempty");
    ctx.slab_ids[k]
}

/// Best strip: everything on one side of the widest gap between consecutive
/// distinct x- (or y-) coordinates is inside, the rest outside.
pub fn solve_strip(ps: &PointSet) -> Option<AnnulusSolution> {
    let mut rows = ps.by_y().to_vec();
    rows.reverse();
    let mut best = None;
    for (order, vertical) in [(ps.by_x(), false), (&rows[..], true)] {
        let coord = |id: usize| if vertical { ps.point(id).y } else { ps.point(id).x };
        for pair in order.windows(2) {
            let (a, b) = (coord(pair[0]), coord(pair[1]));
            if a == b {
                continue;
            }
            let ring = RectAnnulus::new(OrthoRect::new(a, INF, -INF, INF), OrthoRect::new(b, INF, -INF, INF));
            keep_best(
                &mut best,
                AnnulusSolution {
                    width: b - a,
                    shape: Shape::SquareStrip,
                    rect_form: if vertical { ring.transpose() } else { ring },
                    square: None,
                    witness_ids: vec![pair[0], pair[1]],
                },
            );
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{is_empty, is_valid};

    fn ps(coords: &[(f64, f64)]) -> PointSet {
        PointSet::from_coords(coords).unwrap()
    }

    fn check(coords: &[(f64, f64)], width: f64) {
        let p = ps(coords);
        let s = max_esa(&p).unwrap();
        assert_eq!(s.width, width, "{coords:?}");
        assert!(is_empty(&s.rect_form, &p) && is_valid(&s.rect_form, &p));
    }

    #[test]
    fn opposite_case_examples() {
        let s = solve_opposite(&ps(&[(0.0, 0.0), (4.0, 0.0), (0.0, 4.0), (4.0, 4.0), (2.0, 2.0)])).unwrap();
        assert_eq!(s.width, 2.0);
        assert_eq!(s.square.unwrap().inner_radius, 0.0);
        let s = solve_opposite(&ps(&[(0.0, 10.0), (0.0, 0.0), (6.0, 5.5)])).unwrap();
        assert_eq!((s.width, s.square.unwrap().center), (4.0, (5.0, 5.0)));
        assert!(solve_opposite(&ps(&[(0.0, 0.0), (5.0, 1.0)])).is_none());
    }

    #[test]
    fn strip_examples() {
        assert_eq!(solve_strip(&ps(&[(0.0, 0.0), (2.0, 0.0), (4.0, 0.0)])).unwrap().width, 2.0);
        assert_eq!(solve_strip(&ps(&[(0.0, 0.0), (10.0, 0.0)])).unwrap().width, 10.0);
        assert!(solve_strip(&ps(&[(1.0, 1.0), (1.0, 1.0)])).is_none());
    }

    #[test]
    fn full_examples() {
        check(&[(0.0, 0.0), (4.0, 0.0), (0.0, 4.0), (4.0, 4.0), (2.0, 2.0)], 2.0);
        check(&[(0.0, 0.0), (3.0, 7.0), (7.0, 3.0)], 7.0);
        check(&[(0.0, 0.0), (10.0, 0.0)], 10.0);
        check(&[(0.0, 10.0), (0.0, 0.0), (6.0, 5.5)], 6.0);
        assert_eq!(max_esa(&ps(&[(1.0, 1.0)])), Err(Error::NoValidAnnulus));
    }
}
