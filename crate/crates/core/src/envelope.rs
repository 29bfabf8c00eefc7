//! Piecewise-linear envelopes for square annuli whose outer top and bottom
//! sides pass through two fixed points.
//!
//! With the top point `p_i` and bottom point `p_j` fixed, the outer square
//! has radius `r = (y_i - y_j) / 2` and its center runs along the
//! horizontal line `y = ell_y`. For a center abscissa `c`, each slab point
//! `p` strictly inside the outer square asks for an inner radius of
//! `max(|x_p - c|, |y_p - ell_y|)`. The envelope of the first term is `G`,
//! of the second `H`, and `F = max(G, H)` is the inner radius as a function
//! of `c`.
//!
//! Every point's support is the open interval `(x_p - r, x_p + r)`, so the
//! set of points in support at `c` is a contiguous run of the x-sorted slab
//! that slides monotonically to the right as `c` grows. `G` only needs the
//! two ends of that run and `H` is a sliding-window maximum, so both are
//! built in one linear sweep.

use std::collections::VecDeque;

use crate::geometry::PointSet;

/// An affine piece with slope `-1`, `0` or `+1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Piece {
    /// `a - c`
    Down(f64),
    /// `h`
    Flat(f64),
    /// `c - a`
    Up(f64),
}

impl Piece {
    pub fn eval(self, c: f64) -> f64 {
        match self {
            Piece::Down(a) => a - c,
            Piece::Flat(h) => h,
            Piece::Up(a) => c - a,
        }
    }

    pub fn slope(self) -> i8 {
        match self {
            Piece::Down(_) => -1,
            Piece::Flat(_) => 0,
            Piece::Up(_) => 1,
        }
    }

    /// Abscissa where two pieces of different slopes meet.
    fn crossing(self, other: Piece) -> Option<f64> {
        use Piece::*;
        match (self, other) {
            (Down(b), Flat(h)) | (Flat(h), Down(b)) => Some(b - h),
            (Up(a), Flat(h)) | (Flat(h), Up(a)) => Some(a + h),
            (Down(b), Up(a)) | (Up(a), Down(b)) => Some((a + b) / 2.0),
            _ => None,
        }
    }

    /// Pointwise max of two parallel pieces.
    fn parallel_max(self, other: Piece) -> Piece {
        use Piece::*;
        match (self, other) {
            (Down(a), Down(b)) => Down(a.max(b)),
            (Up(a), Up(b)) => Up(a.min(b)),
            (Flat(a), Flat(b)) => Flat(a.max(b)),
            _ => unreachable!("pieces are not parallel"),
        }
    }
}

const ZERO: Piece = Piece::Flat(0.0);

/// A piecewise-linear function with jumps, zero outside its breakpoints.
///
/// `at[k]` is the value exactly at `breaks[k]`; `pieces[k]` holds on the
/// open interval `(breaks[k], breaks[k + 1])`. Storing the value at each
/// breakpoint separately from both neighbouring pieces keeps one-sided
/// limits intact across jumps.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PlFunction {
    breaks: Vec<f64>,
    at: Vec<f64>,
    pieces: Vec<Piece>,
}

impl PlFunction {
    pub fn zero() -> Self {
        PlFunction::default()
    }

    pub fn breaks(&self) -> &[f64] {
        &self.breaks
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    /// Breakpoints with the function value at each.
    pub fn breakpoints(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.breaks.iter().copied().zip(self.at.iter().copied())
    }

    pub fn eval(&self, c: f64) -> f64 {
        let (first, last) = match (self.breaks.first(), self.breaks.last()) {
            (Some(&f), Some(&l)) => (f, l),
            _ => return 0.0,
        };
        if c < first || c > last {
            return 0.0;
        }
        let k = self.breaks.partition_point(|&b| b < c);
        if self.breaks[k] == c {
            self.at[k]
        } else {
            self.pieces[k - 1].eval(c)
        }
    }

    fn push_break(&mut self, b: f64, value: f64) {
        debug_assert!(self.breaks.last().is_none_or(|&l| l < b));
        self.breaks.push(b);
        self.at.push(value);
    }

    fn push_piece(&mut self, p: Piece) {
        self.pieces.push(p);
    }

    /// Drops breakpoints where the function continues unchanged, and zero
    /// stretches at either end.
    fn simplify(self) -> Self {
        let n = self.breaks.len();
        let mut out = PlFunction::zero();
        let mut last_kept: Option<usize> = None;
        for k in 0..n {
            let (b, v) = (self.breaks[k], self.at[k]);
            if k > 0 && k + 1 < n {
                let (left, right) = (self.pieces[k - 1], self.pieces[k]);
                if left == right && left.eval(b) == v {
                    continue;
                }
            }
            if let Some(prev) = last_kept {
                out.push_piece(self.pieces[prev]);
            }
            out.push_break(b, v);
            last_kept = Some(k);
        }
        while out.breaks.len() > 1 && out.at[0] == 0.0 && out.pieces[0] == ZERO {
            out.breaks.remove(0);
            out.at.remove(0);
            out.pieces.remove(0);
        }
        while out.breaks.len() > 1 && out.at[out.at.len() - 1] == 0.0 && out.pieces[out.pieces.len() - 1] == ZERO {
            out.breaks.pop();
            out.at.pop();
            out.pieces.pop();
        }
        if out.breaks.len() == 1 && out.at[0] == 0.0 {
            return PlFunction::zero();
        }
        out
    }

    /// Pointwise maximum of two functions in one merge pass.
    pub fn upper_envelope(&self, other: &PlFunction) -> PlFunction {
        let mut out = PlFunction::zero();
        let mut cuts: Vec<f64> = Vec::with_capacity(self.breaks.len() + other.breaks.len());
        let (mut a, mut b) = (0, 0);
        while a < self.breaks.len() || b < other.breaks.len() {
            let next = match (self.breaks.get(a), other.breaks.get(b)) {
                (Some(&x), Some(&y)) => x.min(y),
                (Some(&x), None) => x,
                (None, Some(&y)) => y,
                (None, None) => unreachable!(),
            };
            if a < self.breaks.len() && self.breaks[a] == next {
                a += 1;
            }
            if b < other.breaks.len() && other.breaks[b] == next {
                b += 1;
            }
            cuts.push(next);
        }
        let mut wf = Walker::new(self);
        let mut wg = Walker::new(other);
        for (k, &c) in cuts.iter().enumerate() {
            out.push_break(c, wf.value_at(c).max(wg.value_at(c)));
            let Some(&next) = cuts.get(k + 1) else { break };
            let (p, q) = (wf.piece_after(c), wg.piece_after(c));
            if p.slope() == q.slope() {
                out.push_piece(p.parallel_max(q));
                continue;
            }
            let x = p.crossing(q).expect("slopes differ");
            let (lower_slope, higher_slope) = if p.slope() < q.slope() { (p, q) } else { (q, p) };
            if c < x && x < next {
                out.push_piece(lower_slope);
                out.push_break(x, p.eval(x).max(q.eval(x)));
                out.push_piece(higher_slope);
            } else if x <= c {
                out.push_piece(higher_slope);
            } else {
                out.push_piece(lower_slope);
            }
        }
        out.simplify()
    }
}

// Forward-only cursor over a PlFunction for merge passes.
struct Walker<'a> {
    f: &'a PlFunction,
    k: usize,
}

impl<'a> Walker<'a> {
    fn new(f: &'a PlFunction) -> Self {
        Walker { f, k: 0 }
    }

    fn seek(&mut self, c: f64) {
        while self.k < self.f.breaks.len() && self.f.breaks[self.k] < c {
            self.k += 1;
        }
    }

    fn value_at(&mut self, c: f64) -> f64 {
        self.seek(c);
        match self.f.breaks.get(self.k) {
            Some(&b) if b == c => self.f.at[self.k],
            Some(_) if self.k > 0 => self.f.pieces[self.k - 1].eval(c),
            _ => 0.0,
        }
    }

    /// The piece holding just to the right of `c`.
    fn piece_after(&mut self, c: f64) -> Piece {
        self.seek(c);
        let k = match self.f.breaks.get(self.k) {
            Some(&b) if b == c => self.k + 1,
            _ => self.k,
        };
        if k == 0 || k >= self.f.breaks.len() {
            ZERO
        } else {
            self.f.pieces[k - 1]
        }
    }
}

/// Everything fixed once the top point `p_i` and bottom point `p_j` are.
#[derive(Clone, Debug, PartialEq)]
pub struct PairContext {
    /// Positions of the top and bottom points in the descending-y order.
    pub i: usize,
    pub j: usize,
    pub top_id: usize,
    pub bottom_id: usize,
    pub top_y: f64,
    pub bottom_y: f64,
    /// Outer radius.
    pub r: f64,
    /// Height of the line the center moves on.
    pub ell_y: f64,
    /// Closed range of feasible center abscissae; empty when `lo > hi`.
    pub c_lo: f64,
    pub c_hi: f64,
    /// Ids of the points strictly between the two outer sides, x-sorted.
    pub slab_ids: Vec<usize>,
    slab: Vec<(f64, f64)>,
}

impl PairContext {
    /// `None` when the two points share a y-coordinate.
    pub fn new(ps: &PointSet, i: usize, j: usize) -> Option<PairContext> {
        let (top, bottom) = (ps.nth_by_y(i), ps.nth_by_y(j));
        let mut ctx = Self::without_slab(ps, i, j)?;
        for &id in ps.by_x() {
            let p = ps.point(id);
            if bottom.y < p.y && p.y < top.y {
                ctx.slab_ids.push(id);
                ctx.slab.push((p.x, p.y));
            }
        }
        Some(ctx)
    }

    /// The context with an empty slab; used to test feasibility cheaply.
    pub fn without_slab(ps: &PointSet, i: usize, j: usize) -> Option<PairContext> {
        let (top, bottom) = (ps.nth_by_y(i), ps.nth_by_y(j));
        if top.y <= bottom.y {
            return None;
        }
        let r = (top.y - bottom.y) / 2.0;
        Some(PairContext {
            i,
            j,
            top_id: top.id,
            bottom_id: bottom.id,
            top_y: top.y,
            bottom_y: bottom.y,
            r,
            ell_y: (top.y + bottom.y) / 2.0,
            c_lo: top.x.max(bottom.x) - r,
            c_hi: top.x.min(bottom.x) + r,
            slab_ids: Vec::new(),
            slab: Vec::new(),
        })
    }

    pub fn has_centers(&self) -> bool {
        self.c_lo <= self.c_hi
    }

    pub fn slab(&self) -> &[(f64, f64)] {
        &self.slab
    }
}

/// One step of the support sweep: the run `[lo, hi)` of slab points whose
/// support contains either the breakpoint `at` or the open interval
/// `(at, until)`.
enum Window {
    Point { at: f64, lo: usize, hi: usize },
    Span { from: f64, until: f64, lo: usize, hi: usize },
}

fn sweep(ctx: &PairContext) -> Vec<Window> {
    let r = ctx.r;
    let enter: Vec<f64> = ctx.slab.iter().map(|&(x, _)| x - r).collect();
    let leave: Vec<f64> = ctx.slab.iter().map(|&(x, _)| x + r).collect();
    let mut events = Vec::with_capacity(2 * enter.len());
    let (mut a, mut b) = (0, 0);
    while a < enter.len() || b < leave.len() {
        let e = if b == leave.len() || (a < enter.len() && enter[a] <= leave[b]) {
            a += 1;
            enter[a - 1]
        } else {
            b += 1;
            leave[b - 1]
        };
        if events.last() != Some(&e) {
            events.push(e);
        }
    }
    let mut out = Vec::with_capacity(2 * events.len());
    // lo counts leaves already passed, hi counts enters already passed
    let (mut lo, mut hi) = (0, 0);
    for (t, &e) in events.iter().enumerate() {
        while lo < leave.len() && leave[lo] <= e {
            lo += 1;
        }
        while hi < enter.len() && enter[hi] < e {
            hi += 1;
        }
        out.push(Window::Point { at: e, lo, hi: hi.max(lo) });
        if let Some(&next) = events.get(t + 1) {
            while hi < enter.len() && enter[hi] <= e {
                hi += 1;
            }
            out.push(Window::Span { from: e, until: next, lo, hi: hi.max(lo) });
        }
    }
    out
}

/// `G(c) = max |x_p - c|` over slab points whose support contains `c`.
pub fn build_g(ctx: &PairContext) -> PlFunction {
    let xs: Vec<f64> = ctx.slab.iter().map(|&(x, _)| x).collect();
    let mut g = PlFunction::zero();
    for w in sweep(ctx) {
        match w {
            Window::Point { at, lo, hi } => {
                let v = if lo < hi { (at - xs[lo]).max(xs[hi - 1] - at) } else { 0.0 };
                g.push_break(at, v);
            }
            Window::Span { from, until, lo, hi } => {
                if lo == hi {
                    g.push_piece(ZERO);
                    continue;
                }
                let (a, b) = (xs[lo], xs[hi - 1]);
                let mid = (a + b) / 2.0;
                if mid <= from {
                    g.push_piece(Piece::Up(a));
                } else if mid >= until {
                    g.push_piece(Piece::Down(b));
                } else {
                    g.push_piece(Piece::Down(b));
                    g.push_break(mid, b - mid);
                    g.push_piece(Piece::Up(a));
                }
            }
        }
    }
    g.simplify()
}

/// `H(c) = max |y_p - ell_y|` over slab points whose support contains `c`.
pub fn build_h(ctx: &PairContext) -> PlFunction {
    let hs: Vec<f64> = ctx.slab.iter().map(|&(_, y)| (y - ctx.ell_y).abs()).collect();
    let mut h = PlFunction::zero();
    let mut deque: VecDeque<usize> = VecDeque::new();
    let mut pushed = 0;
    let mut window_max = |lo: usize, hi: usize, deque: &mut VecDeque<usize>| {
        while pushed < hi {
            while deque.back().is_some_and(|&k| hs[k] <= hs[pushed]) {
                deque.pop_back();
            }
            deque.push_back(pushed);
            pushed += 1;
        }
        while deque.front().is_some_and(|&k| k < lo) {
            deque.pop_front();
        }
        deque.front().map_or(0.0, |&k| hs[k])
    };
    for w in sweep(ctx) {
        match w {
            Window::Point { at, lo, hi } => {
                let v = window_max(lo, hi, &mut deque);
                h.push_break(at, v);
            }
            Window::Span { lo, hi, .. } => {
                let v = window_max(lo, hi, &mut deque);
                h.push_piece(Piece::Flat(v));
            }
        }
    }
    h.simplify()
}

/// `F = max(G, H)`.
pub fn build_f(g: &PlFunction, h: &PlFunction) -> PlFunction {
    g.upper_envelope(h)
}

/// The best center for a fixed top/bottom pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CenterChoice {
    pub center_x: f64,
    pub inner_radius: f64,
    pub width: f64,
}

/// Minimizes `F` over the feasible centers where the annulus is valid:
/// either `F(c) > 0`, or a slab point sits exactly on the center.
///
/// `F` only takes lower values at its breakpoints than on the adjacent
/// open pieces, so the minimum over any closed range is attained at a
/// breakpoint or a range end. Ties go to the leftmost center.
pub fn minimize_valid(f: &PlFunction, ctx: &PairContext) -> Option<CenterChoice> {
    if !ctx.has_centers() {
        return None;
    }
    let hits: Vec<f64> = ctx
        .slab
        .iter()
        .filter(|&&(_, y)| y == ctx.ell_y)
        .map(|&(x, _)| x)
        .collect();
    let is_hit = |c: f64| hits.binary_search_by(|x| x.total_cmp(&c)).is_ok();
    let in_range = |c: f64| ctx.c_lo <= c && c <= ctx.c_hi;

    let mut best: Option<(f64, f64)> = None;
    let mut consider = |c: f64, v: f64| {
        if !(v > 0.0 || is_hit(c)) {
            return;
        }
        if best.is_none_or(|(bc, bv)| v < bv || (v == bv && c < bc)) {
            best = Some((c, v));
        }
    };
    consider(ctx.c_lo, f.eval(ctx.c_lo));
    consider(ctx.c_hi, f.eval(ctx.c_hi));
    for (c, v) in f.breakpoints().filter(|&(c, _)| in_range(c)) {
        consider(c, v);
    }
    for &c in hits.iter().filter(|&&c| in_range(c)) {
        consider(c, f.eval(c));
    }
    best.map(|(c, v)| CenterChoice { center_x: c, inner_radius: v, width: ctx.r - v })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Context whose top is (0, 2r + ell - r) etc. built from explicit points.
    fn ctx(points: &[(f64, f64)]) -> PairContext {
        let ps = PointSet::from_coords(points).unwrap();
        PairContext::new(&ps, 0, ps.len() - 1).unwrap()
    }

    // top (0, 2), bottom (0, -2): r = 2, ell_y = 0
    fn slab_ctx(slab: &[(f64, f64)]) -> PairContext {
        let mut pts = vec![(0.0, 2.0)];
        pts.extend_from_slice(slab);
        pts.push((0.0, -2.0));
        ctx(&pts)
    }

    #[test]
    fn g_single_point() {
        let g = build_g(&slab_ctx(&[(3.0, 1.0)]));
        assert_eq!(g.eval(1.0), 0.0);
        assert_eq!(g.eval(1.5), 1.5);
        assert_eq!(g.eval(3.0), 0.0);
        assert_eq!(g.eval(4.5), 1.5);
        assert_eq!(g.eval(5.0), 0.0);
        assert_eq!(g.eval(7.0), 0.0);
    }

    #[test]
    fn g_two_points() {
        let g = build_g(&slab_ctx(&[(3.0, 1.0), (4.0, 1.0)]));
        assert_eq!(g.eval(3.5), 0.5);
        assert_eq!(g.eval(3.0), 1.0);
        assert_eq!(g.eval(1.5), 1.5);
    }

    #[test]
    fn empty_slab_gives_zero() {
        let c = slab_ctx(&[]);
        assert_eq!(build_g(&c), PlFunction::zero());
        assert_eq!(build_h(&c), PlFunction::zero());
    }

    #[test]
    fn h_plateaus() {
        let h = build_h(&slab_ctx(&[(3.0, 1.0)]));
        assert_eq!(h.eval(1.0), 0.0);
        assert_eq!(h.eval(1.5), 1.0);
        assert_eq!(h.eval(4.9), 1.0);
        assert_eq!(h.eval(5.0), 0.0);

        let h = build_h(&slab_ctx(&[(3.0, 1.0), (3.5, -1.5)]));
        assert_eq!(h.eval(3.0), 1.5);
        assert_eq!(h.eval(1.2), 1.0);
        assert_eq!(h.eval(5.2), 1.5);

        let h = build_h(&slab_ctx(&[(3.0, 0.0)]));
        assert_eq!(h.eval(3.0), 0.0);
        assert_eq!(h, PlFunction::zero());
    }

    #[test]
    fn f_takes_the_max() {
        let c = slab_ctx(&[(3.0, 1.0)]);
        let (g, h) = (build_g(&c), build_h(&c));
        let f = build_f(&g, &h);
        assert_eq!(f.eval(3.0), 1.0);
        assert_eq!(f.eval(1.5), 1.5);
        assert_eq!(f.eval(0.0), 0.0);
        assert_eq!(build_f(&g, &PlFunction::zero()), g);
    }

    #[test]
    fn minimize_prefers_valid_positions() {
        let c = ctx(&[(0.0, 10.0), (6.0, 5.5), (0.0, 0.0)]);
        assert_eq!((c.r, c.ell_y, c.c_lo, c.c_hi), (5.0, 5.0, -5.0, 5.0));
        let f = build_f(&build_g(&c), &build_h(&c));
        let best = minimize_valid(&f, &c).unwrap();
        assert_eq!(best, CenterChoice { center_x: 5.0, inner_radius: 1.0, width: 4.0 });
    }

    #[test]
    fn minimize_uses_center_hits() {
        let c = ctx(&[(0.0, 4.0), (2.0, 2.0), (0.0, 0.0)]);
        let f = build_f(&build_g(&c), &build_h(&c));
        let best = minimize_valid(&f, &c).unwrap();
        assert_eq!(best, CenterChoice { center_x: 2.0, inner_radius: 0.0, width: 2.0 });
    }

    #[test]
    fn minimize_none_when_nothing_reachable() {
        let c = ctx(&[(0.0, 4.0), (10.0, 2.0), (0.0, 0.0)]);
        let f = build_f(&build_g(&c), &build_h(&c));
        assert_eq!(minimize_valid(&f, &c), None);
    }

    #[test]
    fn empty_center_range() {
        let c = ctx(&[(0.0, 2.0), (0.5, 1.0), (5.0, 0.0)]);
        assert!(!c.has_centers());
        assert_eq!(minimize_valid(&PlFunction::zero(), &c), None);
    }
}
