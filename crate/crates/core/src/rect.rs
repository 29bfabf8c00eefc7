//! Widest empty rectangular annulus.
//!
//! An optimal annulus can be taken uniform, with a point on some outer side
//! and a point on the inner side facing it. The solver fixes that side by
//! reorienting the plane so it becomes the top, then for every top point
//! `p_i` walks the candidate widths `y_i - y_k` in increasing order while the
//! bottom point `p_j` moves down, asking a logarithmic-time decision query
//! at each step. Everything between the top and the bottom is kept in a
//! [`GapTree`]; band queries go to a static [`NeighborStructure`].

use crate::error::Error;
use crate::geometry::{span, AnnulusSolution, Direction, OrthoRect, PointSet, RectAnnulus, Shape};
use crate::range::{Band, GapTree, NeighborStructure};

const INF: f64 = f64::INFINITY;

/// Which decision predicate the solver uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DecisionMode {
    /// Picks the widest outer box the gaps allow and requires its inner box
    /// to hold a point.
    #[default]
    Strengthened,
    /// Accepts as soon as both side gaps are wide enough, which certifies
    /// hollow annuli on some inputs. Kept for regression tests only.
    #[doc(hidden)]
    Literal,
}

/// Position of the outer bottom side: on the point at a descending-y
/// position, or at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bottom {
    At(usize),
    Infinity,
}

impl Bottom {
    pub fn position(self) -> Option<usize> {
        match self {
            Bottom::At(j) => Some(j),
            Bottom::Infinity => None,
        }
    }
}

/// An accepted decision query.
#[derive(Clone, Debug, PartialEq)]
pub struct Decision {
    pub annulus: RectAnnulus,
    /// Top point, bottom point when finite, then a point of the inner box.
    pub witness_ids: Vec<usize>,
}

/// Solver for annuli whose outer top side holds a point and whose inner top
/// side holds another.
#[derive(Clone, Debug)]
pub struct AnchoredSolver {
    ps: PointSet,
    ns: NeighborStructure,
    gaps: GapTree,
    mode: DecisionMode,
}

impl AnchoredSolver {
    pub fn new(ps: PointSet, mode: DecisionMode) -> Self {
        let ns = NeighborStructure::new(&ps);
        let gaps = GapTree::new(&ps);
        AnchoredSolver { ps, ns, gaps, mode }
    }

    pub fn point_set(&self) -> &PointSet {
        &self.ps
    }

    /// Activates exactly the points strictly between positions `i` and `j`
    /// of the descending-y order, preparing [`Self::decide`] for that pair.
    pub fn load(&mut self, i: usize, j: Bottom) {
        self.gaps.reset();
        let end = j.position().unwrap_or(self.ps.len());
        for &id in &self.ps.by_y()[(i + 1).min(end)..end] {
            self.gaps.activate(id);
        }
    }

    /// Is there a valid empty uniform annulus of width `w` with `p_i` on the
    /// outer top side and `j` as the outer bottom? Assumes the active set is
    /// the points between `i` and `j` (see [`Self::load`]).
    ///
    /// In the strengthened mode the answer is monotone in `w`.
    pub fn decide(&self, i: usize, j: Bottom, w: f64) -> Option<Decision> {
        if w <= 0.0 {
            return None;
        }
        let top = *self.ps.nth_by_y(i);
        let (bottom_x, bottom_y, bottom_id) = match j {
            Bottom::At(j) => {
                let b = self.ps.nth_by_y(j);
                if top.y - b.y < 2.0 * w {
                    return None;
                }
                (b.x, b.y, Some(b.id))
            }
            Bottom::Infinity => (top.x, -INF, None),
        };
        let (m, big_m) = (top.x.min(bottom_x), top.x.max(bottom_x));

        // Nothing may sit in the open bands under the top and over the
        // bottom between the two anchors; the nearest band points outside
        // bound how far the outer box can stretch sideways.
        let bottom_band = bottom_id.map(|_| Band::open(bottom_y, bottom_y + w));
        let (mut left_stop, mut right_stop, mut touches_m) = (-INF, INF, false);
        for band in std::iter::once(Band::open(top.y - w, top.y)).chain(bottom_band) {
            let (below, above) = self.ns.split_at(band, m);
            if let Some(id) = below {
                let x = self.ps.point(id).x;
                left_stop = left_stop.max(x);
                touches_m |= x == m;
            }
            if let Some(id) = above {
                let x = self.ps.point(id).x;
                if x < big_m {
                    return None;
                }
                right_stop = right_stop.min(x);
            }
        }
        if m == big_m && touches_m {
            right_stop = m;
        }

        let witnesses = |inner: Option<usize>| std::iter::once(top.id).chain(bottom_id).chain(inner).collect();
        if self.mode == DecisionMode::Literal {
            let (l, lg) = self.gaps.max_gap(left_stop, m + w);
            let (rg, r) = self.gaps.max_gap(big_m - w, right_stop);
            if span(l, lg) < w || span(rg, r) < w {
                return None;
            }
            return Some(Decision { annulus: uniform(l, r, bottom_y, top.y, w), witness_ids: witnesses(None) });
        }

        let l = self.gaps.leftmost_gap(left_stop, m + w, w)?;
        let r = self.gaps.rightmost_gap(big_m - w, right_stop, w)?;
        if span(l, r) < 2.0 * w {
            return None;
        }
        let inner = Band::closed(bottom_y + w, top.y - w);
        let p = self.ns.leftmost(inner, l + w, true)?;
        if self.ps.point(p).x > r - w {
            return None;
        }
        Some(Decision { annulus: uniform(l, r, bottom_y, top.y, w), witness_ids: witnesses(Some(p)) })
    }

    /// Widest annulus anchored at top `p_i` with width above `floor`, its
    /// decision and its bottom.
    pub fn best_for_top(&mut self, i: usize, floor: f64) -> Option<(f64, Decision, Bottom)> {
        assert!(floor >= 0.0, "floor must be nonnegative");
        let n = self.ps.len();
        if i + 1 >= n {
            return None;
        }
        let top_y = self.ps.nth_by_y(i).y;
        let order = self.ps.by_y();
        let mut k = i + 1 + order[i + 1..].partition_point(|&id| top_y - self.ps.point(id).y <= floor);
        let mut best = None;

        self.gaps.reset();
        self.gaps.activate(order[i + 1]);
        for j in i + 2..n {
            self.climb(i, Bottom::At(j), &mut k, &mut best);
            self.gaps.activate(self.ps.by_y()[j]);
        }
        self.climb(i, Bottom::Infinity, &mut k, &mut best);
        best
    }

    // Raises the width cursor while the decision for bottom `j` accepts.
    fn climb(&self, i: usize, j: Bottom, k: &mut usize, best: &mut Option<(f64, Decision, Bottom)>) {
        let top_y = self.ps.nth_by_y(i).y;
        if let Bottom::At(j) = j {
            // The gate rejects every remaining width; skip the queries.
            if *k < self.ps.len() && top_y - self.ps.nth_by_y(j).y < 2.0 * (top_y - self.ps.nth_by_y(*k).y) {
                return;
            }
        }
        while *k < self.ps.len() {
            let w = top_y - self.ps.nth_by_y(*k).y;
            let Some(d) = self.decide(i, j, w) else { break };
            *best = Some((w, d, j));
            *k += 1;
        }
    }
}

fn uniform(l: f64, r: f64, bottom: f64, top: f64, w: f64) -> RectAnnulus {
    RectAnnulus::new(OrthoRect::new(l, r, bottom, top), OrthoRect::new(l + w, r - w, bottom + w, top - w))
}

// Negation that never yields -0.0, so mapped coordinates print cleanly.
fn neg(v: f64) -> f64 {
    -v + 0.0
}

/// Maps the plane so that side `dir` becomes the top.
pub fn orient(dir: Direction, x: f64, y: f64) -> (f64, f64) {
    match dir {
        Direction::Top => (x, y),
        Direction::Bottom => (x, neg(y)),
        Direction::Left => (y, neg(x)),
        Direction::Right => (neg(y), x),
    }
}

/// Inverse of [`orient`] applied to a rectangle.
pub fn unorient_rect(dir: Direction, r: &OrthoRect) -> OrthoRect {
    match dir {
        Direction::Top => *r,
        Direction::Bottom => OrthoRect::new(r.left, r.right, neg(r.top), neg(r.bottom)),
        Direction::Left => OrthoRect::new(neg(r.top), neg(r.bottom), r.left, r.right),
        Direction::Right => OrthoRect::new(r.bottom, r.top, neg(r.right), neg(r.left)),
    }
}

/// Widest valid empty rectangular annulus of `ps`.
///
/// # Errors
/// [`Error::NoValidAnnulus`] when fewer than two distinct points exist.
pub fn max_era(ps: &PointSet) -> Result<AnnulusSolution, Error> {
    max_era_with(ps, DecisionMode::Strengthened)
}

/// [`max_era`] with an explicit decision predicate.
///
/// Among equally wide annuli the first one found wins, scanning sides in
/// the order top, bottom, left, right and tops from high to low.
pub fn max_era_with(ps: &PointSet, mode: DecisionMode) -> Result<AnnulusSolution, Error> {
    let mut best: Option<AnnulusSolution> = None;
    for dir in Direction::ALL {
        let mut solver = AnchoredSolver::new(ps.map(|x, y| orient(dir, x, y)), mode);
        for i in 0..ps.len().saturating_sub(1) {
            let floor = best.as_ref().map_or(0.0, |b| b.width);
            if let Some((w, d, _)) = solver.best_for_top(i, floor) {
                best = Some(AnnulusSolution {
                    width: w,
                    shape: Shape::RectAnchored(dir),
                    rect_form: RectAnnulus::new(
                        unorient_rect(dir, &d.annulus.outer),
                        unorient_rect(dir, &d.annulus.inner),
                    ),
                    square: None,
                    witness_ids: d.witness_ids,
                });
            }
        }
    }
    best.ok_or(Error::NoValidAnnulus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{annulus_width, is_empty, is_valid};

    fn ps(coords: &[(f64, f64)]) -> PointSet {
        PointSet::from_coords(coords).unwrap()
    }

    fn collinear() -> PointSet {
        let c: Vec<(f64, f64)> = (0..=10).map(|k| (0.0, k as f64)).collect();
        ps(&c)
    }

    fn check(p: &PointSet, width: f64) {
        let s = max_era(p).unwrap();
        assert_eq!(s.width, width);
        assert_eq!(annulus_width(&s.rect_form).value(), width);
        assert!(is_empty(&s.rect_form, p) && is_valid(&s.rect_form, p));
    }

    #[test]
    fn fixtures() {
        check(&ps(&[(0.0, 0.0), (10.0, 0.0), (0.0, 10.0), (10.0, 10.0), (5.0, 5.0)]), 5.0);
        check(&collinear(), 1.0);
        check(&ps(&[(0.0, 0.0), (10.0, 0.0)]), 10.0);
        assert_eq!(max_era(&ps(&[(2.0, 2.0)])), Err(Error::NoValidAnnulus));
        assert_eq!(max_era(&ps(&[(2.0, 2.0), (2.0, 2.0)])), Err(Error::NoValidAnnulus));
    }

    #[test]
    fn decide_examples() {
        let mut s = AnchoredSolver::new(ps(&[(0.0, 10.0), (5.0, 5.0), (0.0, 0.0)]), DecisionMode::Strengthened);
        s.load(0, Bottom::At(2));
        let d = s.decide(0, Bottom::At(2), 5.0).unwrap();
        assert!(is_empty(&d.annulus, s.point_set()) && is_valid(&d.annulus, s.point_set()));
        assert_eq!(s.decide(0, Bottom::At(2), 5.5), None);
    }

    #[test]
    fn hollow_certificate_needs_the_strengthened_check() {
        let mut s = AnchoredSolver::new(collinear(), DecisionMode::Strengthened);
        s.load(0, Bottom::Infinity);
        assert_eq!(s.decide(0, Bottom::Infinity, 10.0), None);
        let mut lit = AnchoredSolver::new(collinear(), DecisionMode::Literal);
        lit.load(0, Bottom::Infinity);
        assert!(lit.decide(0, Bottom::Infinity, 10.0).is_some());
        assert_eq!(max_era_with(&collinear(), DecisionMode::Literal).unwrap().width, 10.0);
    }

    #[test]
    fn per_top_optimum() {
        let mut s = AnchoredSolver::new(ps(&[(0.0, 10.0), (5.0, 5.0), (0.0, 0.0)]), DecisionMode::Strengthened);
        assert_eq!(s.best_for_top(0, 0.0).unwrap().0, 5.0);
        let mut s = AnchoredSolver::new(ps(&[(0.0, 10.0), (100.0, 9.0), (0.5, 5.0), (0.0, 0.0)]), DecisionMode::Strengthened);
        let (w, d, _) = s.best_for_top(0, 0.0).unwrap();
        assert_eq!(w, 5.0);
        assert!(d.annulus.inner.contains_closed(0.5, 5.0));
        assert!(s.best_for_top(3, 0.0).is_none());
    }

    #[test]
    fn orientation_round_trip() {
        let r = OrthoRect::new(1.0, 2.0, 3.0, 4.0);
        for dir in Direction::ALL {
            let corners = [(r.left, r.bottom), (r.right, r.top)];
            let mapped: Vec<(f64, f64)> = corners.iter().map(|&(x, y)| orient(dir, x, y)).collect();
            let m = OrthoRect::new(
                mapped[0].0.min(mapped[1].0),
                mapped[0].0.max(mapped[1].0),
                mapped[0].1.min(mapped[1].1),
                mapped[0].1.max(mapped[1].1),
            );
            assert_eq!(unorient_rect(dir, &m), r, "{dir:?}");
        }
        assert_eq!(orient(Direction::Bottom, 1.0, 2.0), (1.0, -2.0));
    }
}
