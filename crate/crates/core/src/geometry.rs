//! Points, extended-coordinate rectangles and annuli, and the emptiness and
//! validity predicates every solver result is checked against.
//!
//! The interior of an annulus is `interior(outer) \ closed(inner)`: a point
//! lying on any side of either rectangle never violates emptiness.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;

/// An input point. `id` is its index in the input order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
    pub id: usize,
}

impl Point {
    pub fn new(x: f64, y: f64, id: usize) -> Self {
        Point { x, y, id }
    }
}

/// A real number or one of the two symbolic infinities.
///
/// Backed by an `f64` that is never NaN, so the order is total:
/// `-inf < finite < +inf`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtReal(f64);

impl ExtReal {
    pub const NEG_INF: ExtReal = ExtReal(f64::NEG_INFINITY);
    pub const POS_INF: ExtReal = ExtReal(f64::INFINITY);

    /// Wraps `v`. Panics on NaN.
    pub fn new(v: f64) -> Self {
        assert!(!v.is_nan(), "ExtReal cannot hold NaN");
        ExtReal(v)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    /// `hi - lo` for `lo <= hi`, where the distance between two equal
    /// infinities is `+inf` (a side at infinity has unbounded width).
    pub fn span(lo: ExtReal, hi: ExtReal) -> ExtReal {
        ExtReal(span(lo.0, hi.0))
    }
}

impl Eq for ExtReal {}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.partial_cmp(&other.0).expect("ExtReal is never NaN")
    }
}

impl From<f64> for ExtReal {
    fn from(v: f64) -> Self {
        ExtReal::new(v)
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == f64::INFINITY {
            f.write_str("inf")
        } else if self.0 == f64::NEG_INFINITY {
            f.write_str("-inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// `hi - lo` on extended reals; two infinities of the same sign are
/// infinitely far apart.
pub(crate) fn span(lo: f64, hi: f64) -> f64 {
    if lo.is_infinite() && hi.is_infinite() && lo == hi {
        f64::INFINITY
    } else {
        hi - lo
    }
}

/// The input points together with the two sort orders the solvers share.
#[derive(Clone, Debug)]
pub struct PointSet {
    points: Vec<Point>,
    /// Indices sorted by (y descending, x ascending, id ascending).
    by_y: Vec<usize>,
    /// Indices sorted by (x ascending, y ascending, id ascending).
    by_x: Vec<usize>,
}

impl PointSet {
    /// Builds a point set from coordinates; ids follow the slice order.
    pub fn from_coords(coords: &[(f64, f64)]) -> Result<Self, Error> {
        let points = coords
            .iter()
            .enumerate()
            .map(|(id, &(x, y))| Point::new(x, y, id))
            .collect();
        Self::new(points)
    }

    /// Builds a point set. Ids must be `0..n` in order and every
    /// coordinate finite.
    pub fn new(points: Vec<Point>) -> Result<Self, Error> {
        for (k, p) in points.iter().enumerate() {
            if p.id != k {
                return Err(Error::BadId { index: k, id: p.id });
            }
            if !p.x.is_finite() || !p.y.is_finite() {
                return Err(Error::NonFinite { id: k });
            }
        }
        let mut by_y: Vec<usize> = (0..points.len()).collect();
        by_y.sort_by(|&a, &b| {
            let (p, q) = (&points[a], &points[b]);
            q.y.total_cmp(&p.y)
                .then(p.x.total_cmp(&q.x))
                .then(a.cmp(&b))
        });
        let mut by_x: Vec<usize> = (0..points.len()).collect();
        by_x.sort_by(|&a, &b| {
            let (p, q) = (&points[a], &points[b]);
            p.x.total_cmp(&q.x)
                .then(p.y.total_cmp(&q.y))
                .then(a.cmp(&b))
        });
        Ok(PointSet { points, by_y, by_x })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, id: usize) -> &Point {
        &self.points[id]
    }

    pub fn by_y(&self) -> &[usize] {
        &self.by_y
    }

    pub fn by_x(&self) -> &[usize] {
        &self.by_x
    }

    /// The point at position `k` of the descending-y order.
    pub fn nth_by_y(&self, k: usize) -> &Point {
        &self.points[self.by_y[k]]
    }

    /// True when the set has at least two distinct points.
    pub fn has_distinct_points(&self) -> bool {
        match self.points.first() {
            None => false,
            Some(p) => self.points.iter().any(|q| q.x != p.x || q.y != p.y),
        }
    }

    /// Applies `f` to every coordinate pair, keeping ids.
    pub fn map(&self, f: impl Fn(f64, f64) -> (f64, f64)) -> PointSet {
        let points = self
            .points
            .iter()
            .map(|p| {
                let (x, y) = f(p.x, p.y);
                Point::new(x, y, p.id)
            })
            .collect();
        PointSet::new(points).expect("coordinate maps keep points finite")
    }
}

/// An axis-parallel rectangle whose sides may lie at infinity.
///
/// Fields are plain `f64` holding finite values or `±inf`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrthoRect {
    pub left: f64,
    pub right: f64,
    pub bottom: f64,
    pub top: f64,
}

impl OrthoRect {
    pub fn new(left: f64, right: f64, bottom: f64, top: f64) -> Self {
        OrthoRect { left, right, bottom, top }
    }

    /// `left <= right`, `bottom <= top`, and no NaN.
    pub fn is_well_formed(&self) -> bool {
        [self.left, self.right, self.bottom, self.top]
            .iter()
            .all(|v| !v.is_nan())
            && self.left <= self.right
            && self.bottom <= self.top
    }

    pub fn contains_closed(&self, x: f64, y: f64) -> bool {
        self.left <= x && x <= self.right && self.bottom <= y && y <= self.top
    }

    pub fn contains_open(&self, x: f64, y: f64) -> bool {
        self.left < x && x < self.right && self.bottom < y && y < self.top
    }

    /// Exchanges the roles of the two axes.
    pub fn transpose(&self) -> OrthoRect {
        OrthoRect::new(self.bottom, self.top, self.left, self.right)
    }
}

/// Outer rectangle minus the interior of an inner rectangle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RectAnnulus {
    pub outer: OrthoRect,
    pub inner: OrthoRect,
}

/// The four directional widths of a rectangular annulus.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SideWidths {
    pub top: f64,
    pub bottom: f64,
    pub left: f64,
    pub right: f64,
}

impl SideWidths {
    pub fn min(&self) -> f64 {
        self.top.min(self.bottom).min(self.left).min(self.right)
    }
}

impl RectAnnulus {
    pub fn new(outer: OrthoRect, inner: OrthoRect) -> Self {
        RectAnnulus { outer, inner }
    }

    /// The annulus whose inner rectangle is `outer` shrunk by `w` on every
    /// side. Infinite sides stay infinite.
    pub fn uniform(outer: OrthoRect, w: f64) -> Self {
        let inner = OrthoRect::new(outer.left + w, outer.right - w, outer.bottom + w, outer.top - w);
        RectAnnulus { outer, inner }
    }

    /// Both rectangles well formed and `inner ⊆ outer`.
    pub fn is_well_formed(&self) -> bool {
        let (o, i) = (&self.outer, &self.inner);
        o.is_well_formed()
            && i.is_well_formed()
            && o.left <= i.left
            && i.right <= o.right
            && o.bottom <= i.bottom
            && i.top <= o.top
    }

    pub fn side_widths(&self) -> SideWidths {
        let (o, i) = (&self.outer, &self.inner);
        SideWidths {
            top: span(i.top, o.top),
            bottom: span(o.bottom, i.bottom),
            left: span(o.left, i.left),
            right: span(i.right, o.right),
        }
    }

    pub fn transpose(&self) -> RectAnnulus {
        RectAnnulus::new(self.outer.transpose(), self.inner.transpose())
    }
}

/// Minimum of the top, bottom, left and right widths.
pub fn annulus_width(a: &RectAnnulus) -> ExtReal {
    ExtReal::new(a.side_widths().min())
}

/// Splits `ps` into the ids inside-or-on the inner rectangle and the rest.
pub fn partition(a: &RectAnnulus, ps: &PointSet) -> (Vec<usize>, Vec<usize>) {
    ps.points()
        .iter()
        .map(|p| p.id)
        .partition(|&id| {
            let p = ps.point(id);
            a.inner.contains_closed(p.x, p.y)
        })
}

/// No point lies in the open outer rectangle without lying in the closed
/// inner one.
pub fn is_empty(a: &RectAnnulus, ps: &PointSet) -> bool {
    ps.points()
        .iter()
        .all(|p| !a.outer.contains_open(p.x, p.y) || a.inner.contains_closed(p.x, p.y))
}

/// Both sides of the induced partition are nonempty.
pub fn is_valid(a: &RectAnnulus, ps: &PointSet) -> bool {
    let (inside, outside) = partition(a, ps);
    !inside.is_empty() && !outside.is_empty()
}

/// A square annulus: concentric squares sharing `center`, radii measured as
/// half side lengths.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SquareAnnulus {
    pub center: (f64, f64),
    pub outer_radius: f64,
    pub inner_radius: f64,
}

impl SquareAnnulus {
    pub fn width(&self) -> f64 {
        self.outer_radius - self.inner_radius
    }

    pub fn to_rect(&self) -> RectAnnulus {
        let (cx, cy) = self.center;
        let (r, rho) = (self.outer_radius, self.inner_radius);
        RectAnnulus::new(
            OrthoRect::new(cx - r, cx + r, cy - r, cy + r),
            OrthoRect::new(cx - rho, cx + rho, cy - rho, cy + rho),
        )
    }
}

/// Which side of the outer and inner rectangles carries the anchor points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Top,
    Bottom,
    Left,
    Right,
}

impl Direction {
    pub const ALL: [Direction; 4] = [Direction::Top, Direction::Bottom, Direction::Left, Direction::Right];

    pub fn name(self) -> &'static str {
        match self {
            Direction::Top => "top",
            Direction::Bottom => "bottom",
            Direction::Left => "left",
            Direction::Right => "right",
        }
    }
}

/// The configuration a solution was found in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    /// Two opposite outer sides carry points.
    SquareOpposite,
    /// Two adjacent outer sides carry points, the others are at infinity.
    SquareCorner,
    /// One outer side carries a point, the other three are at infinity.
    SquareStrip,
    /// A uniform rectangular annulus anchored on the given side.
    RectAnchored(Direction),
}

impl Shape {
    /// Stable rank used to break width ties between configurations.
    pub fn rank(self) -> usize {
        match self {
            Shape::SquareOpposite => 0,
            Shape::SquareCorner => 1,
            Shape::SquareStrip => 2,
            Shape::RectAnchored(d) => 3 + d as usize,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Shape::SquareOpposite => "opposite",
            Shape::SquareCorner => "corner",
            Shape::SquareStrip => "strip",
            Shape::RectAnchored(Direction::Top) => "top-anchored",
            Shape::RectAnchored(Direction::Bottom) => "bottom-anchored",
            Shape::RectAnchored(Direction::Left) => "left-anchored",
            Shape::RectAnchored(Direction::Right) => "right-anchored",
        }
    }
}

/// A solver result in a uniform representation.
#[derive(Clone, Debug, PartialEq)]
pub struct AnnulusSolution {
    pub width: f64,
    pub shape: Shape,
    /// The annulus as a rectangular annulus; squares are converted.
    pub rect_form: RectAnnulus,
    /// Present for square annuli with a finite center.
    pub square: Option<SquareAnnulus>,
    /// Points on the outer sides followed by one point of the inner region.
    pub witness_ids: Vec<usize>,
}

impl AnnulusSolution {
    /// True when `self` should replace `incumbent`: wider, or equally wide
    /// with a smaller shape rank, or equal rank and smaller witness list.
    pub fn beats(&self, incumbent: &AnnulusSolution) -> bool {
        match self.width.total_cmp(&incumbent.width) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => {
                (self.shape.rank(), &self.witness_ids) < (incumbent.shape.rank(), &incumbent.witness_ids)
            }
        }
    }
}

/// Keeps the better of `best` and `candidate`.
pub(crate) fn keep_best(best: &mut Option<AnnulusSolution>, candidate: AnnulusSolution) {
    match best {
        Some(b) if !candidate.beats(b) => {}
        _ => *best = Some(candidate),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const INF: f64 = f64::INFINITY;

    fn square10(inner: OrthoRect) -> RectAnnulus {
        RectAnnulus::new(OrthoRect::new(0.0, 10.0, 0.0, 10.0), inner)
    }

    #[test]
    fn width_is_minimum_side() {
        let a = square10(OrthoRect::new(2.0, 8.0, 3.0, 7.0));
        assert_eq!(annulus_width(&a).value(), 2.0);
        let same = RectAnnulus::new(a.outer, a.outer);
        assert_eq!(annulus_width(&same).value(), 0.0);
    }

    #[test]
    fn width_with_infinite_sides() {
        let a = RectAnnulus::new(
            OrthoRect::new(-INF, 10.0, 0.0, 10.0),
            OrthoRect::new(-INF, 5.0, 4.0, 6.0),
        );
        let w = a.side_widths();
        assert_eq!(w.left, INF);
        assert_eq!(annulus_width(&a).value(), 4.0);
    }

    #[test]
    fn emptiness_boundaries() {
        let a = square10(OrthoRect::new(4.0, 6.0, 4.0, 6.0));
        let one = |x, y| PointSet::from_coords(&[(x, y)]).unwrap();
        assert!(is_empty(&a, &one(5.0, 5.0)));
        assert!(!is_empty(&a, &one(1.0, 5.0)));
        assert!(is_empty(&a, &one(0.0, 5.0)));
        assert!(is_empty(&a, &one(4.0, 5.0)));
    }

    #[test]
    fn validity_needs_both_sides() {
        let a = square10(OrthoRect::new(4.0, 6.0, 4.0, 6.0));
        let both = PointSet::from_coords(&[(5.0, 5.0), (0.0, 0.0)]).unwrap();
        assert!(is_valid(&a, &both));
        assert!(!is_valid(&a, &PointSet::from_coords(&[(5.0, 5.0)]).unwrap()));
        assert!(!is_valid(&a, &PointSet::from_coords(&[(0.0, 0.0)]).unwrap()));
    }

    #[test]
    fn partition_cases() {
        let a = square10(OrthoRect::new(4.0, 6.0, 4.0, 6.0));
        let ps = PointSet::from_coords(&[(4.0, 4.0), (7.0, 7.0)]).unwrap();
        assert_eq!(partition(&a, &ps), (vec![0], vec![1]));

        let dot = square10(OrthoRect::new(5.0, 5.0, 5.0, 5.0));
        let ps = PointSet::from_coords(&[(5.0, 5.0)]).unwrap();
        assert_eq!(partition(&dot, &ps), (vec![0], vec![]));

        let ps = PointSet::from_coords(&[]).unwrap();
        assert_eq!(partition(&a, &ps), (vec![], vec![]));
    }

    #[test]
    fn sort_orders_break_ties() {
        let ps = PointSet::from_coords(&[(1.0, 0.0), (0.0, 0.0), (0.0, 2.0), (0.0, 0.0)]).unwrap();
        assert_eq!(ps.by_y(), &[2, 1, 3, 0]);
        assert_eq!(ps.by_x(), &[1, 3, 2, 0]);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(PointSet::from_coords(&[(f64::NAN, 0.0)]).is_err());
        assert!(PointSet::from_coords(&[(0.0, INF)]).is_err());
    }

    #[test]
    fn ext_real_order_and_span() {
        assert!(ExtReal::NEG_INF < ExtReal::new(-1e300));
        assert!(ExtReal::new(1e300) < ExtReal::POS_INF);
        assert_eq!(ExtReal::span(ExtReal::NEG_INF, ExtReal::POS_INF), ExtReal::POS_INF);
        assert_eq!(ExtReal::span(ExtReal::NEG_INF, ExtReal::NEG_INF), ExtReal::POS_INF);
        assert_eq!(ExtReal::span(ExtReal::new(1.0), ExtReal::POS_INF), ExtReal::POS_INF);
        assert_eq!(ExtReal::POS_INF.to_string(), "inf");
    }

    #[test]
    fn uniform_shrink_has_that_width() {
        let a = RectAnnulus::uniform(OrthoRect::new(0.0, 8.0, -2.0, 4.0), 1.5);
        assert!(a.is_well_formed());
        assert_eq!(annulus_width(&a).value(), 1.5);
        let b = RectAnnulus::uniform(OrthoRect::new(-INF, 3.0, 0.0, INF), 1.0);
        assert_eq!(annulus_width(&b).value(), 1.0);
    }
}
