//! Maximum-gap range tree over activated x-coordinates.
//!
//! The skeleton is a static segment tree over the x-order of every point;
//! points are switched on one at a time and each node keeps the extreme
//! active values of its range together with the widest gap between
//! consecutive active values inside it. Range queries combine the
//! `O(log n)` canonical nodes of a query range and the seams between them.

use crate::geometry::{span, PointSet};

#[derive(Clone, Copy, Debug)]
struct Node {
    lo: f64,
    hi: f64,
    gap: f64,
    gap_lo: f64,
    gap_hi: f64,
}

const EMPTY: Node = Node {
    lo: f64::INFINITY,
    hi: f64::NEG_INFINITY,
    gap: 0.0,
    gap_lo: 0.0,
    gap_hi: 0.0,
};

impl Node {
    fn leaf(x: f64) -> Node {
        Node { lo: x, hi: x, gap: 0.0, gap_lo: x, gap_hi: x }
    }

    fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    fn join(l: &Node, r: &Node) -> Node {
        if l.is_empty() {
            return *r;
        }
        if r.is_empty() {
            return *l;
        }
        let mut out = Node { lo: l.lo, hi: r.hi, ..*l };
        let seam = r.lo - l.hi;
        if seam > out.gap {
            out.gap = seam;
            out.gap_lo = l.hi;
            out.gap_hi = r.lo;
        }
        if r.gap > out.gap {
            out.gap = r.gap;
            out.gap_lo = r.gap_lo;
            out.gap_hi = r.gap_hi;
        }
        out
    }
}

// Canonical node list without allocation: left-side nodes fill the front,
// right-side nodes fill the back in reverse, so both halves read in order.
struct Canonical {
    nodes: [usize; 128],
    left: usize,
    right: usize,
}

impl Canonical {
    fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.nodes[..self.left].iter().chain(&self.nodes[self.right..]).copied()
    }
}

/// Activation-based maximum-gap tree over the x-coordinates of a
/// [`PointSet`]. Queries see only active points.
#[derive(Clone, Debug)]
pub struct GapTree {
    size: usize,
    xs: Vec<f64>,
    rank_of: Vec<usize>,
    active: Vec<bool>,
    nodes: Vec<Node>,
}

impl GapTree {
    pub fn new(ps: &PointSet) -> Self {
        let n = ps.len();
        let size = n.next_power_of_two().max(1);
        let xs: Vec<f64> = ps.by_x().iter().map(|&id| ps.point(id).x).collect();
        let mut rank_of = vec![0; n];
        for (rank, &id) in ps.by_x().iter().enumerate() {
            rank_of[id] = rank;
        }
        GapTree {
            size,
            xs,
            rank_of,
            active: vec![false; n],
            nodes: vec![EMPTY; 2 * size],
        }
    }

    /// Switches point `id` on.
    ///
    /// # Panics
    /// If `id` is already active.
    pub fn activate(&mut self, id: usize) {
        let rank = self.rank_of[id];
        assert!(!self.active[rank], "point {id} activated twice");
        self.active[rank] = true;
        let mut v = rank + self.size;
        self.nodes[v] = Node::leaf(self.xs[rank]);
        while v > 1 {
            v /= 2;
            self.nodes[v] = Node::join(&self.nodes[2 * v], &self.nodes[2 * v + 1]);
        }
    }

    /// Switches every point off.
    pub fn reset(&mut self) {
        self.active.iter_mut().for_each(|a| *a = false);
        self.nodes.iter_mut().for_each(|v| *v = EMPTY);
    }

    pub fn is_active(&self, id: usize) -> bool {
        self.active[self.rank_of[id]]
    }

    pub fn active_count(&self) -> usize {
        self.active.iter().filter(|&&a| a).count()
    }

    /// Widest gap between consecutive active values over the whole tree.
    pub fn root_max_gap(&self) -> f64 {
        self.nodes[1].gap
    }

    /// Canonical nodes covering the active values in `[x1, x2]`, left to
    /// right.
    fn canonical(&self, x1: f64, x2: f64) -> Canonical {
        let a = self.xs.partition_point(|&x| x < x1);
        let b = self.xs.partition_point(|&x| x <= x2).max(a);
        let (mut l, mut r) = (a + self.size, b + self.size);
        let mut out = Canonical { nodes: [0; 128], left: 0, right: 128 };
        while l < r {
            if l & 1 == 1 {
                out.nodes[out.left] = l;
                out.left += 1;
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                out.right -= 1;
                out.nodes[out.right] = r;
            }
            l /= 2;
            r /= 2;
        }
        out
    }

    /// The consecutive pair `(a, b)` with the widest gap in
    /// `{x1, x2} ∪ {active x in [x1, x2]}`; the leftmost such pair on ties.
    pub fn max_gap(&self, x1: f64, x2: f64) -> (f64, f64) {
        assert!(x1 <= x2, "max_gap needs x1 <= x2");
        let mut best = (x1, x1, f64::NEG_INFINITY);
        let mut consider = |a: f64, b: f64, g: f64| {
            if g > best.2 {
                best = (a, b, g);
            }
        };
        let mut prev = x1;
        for v in self.canonical(x1, x2).iter() {
            let node = &self.nodes[v];
            if node.is_empty() {
                continue;
            }
            consider(prev, node.lo, span(prev, node.lo));
            if node.lo < node.hi {
                consider(node.gap_lo, node.gap_hi, node.gap);
            }
            prev = node.hi;
        }
        consider(prev, x2, span(prev, x2));
        (best.0, best.1)
    }

    /// Smallest `l >= x_lo` such that `l + w <= x_hi` and no active value
    /// lies in the open window `(l, l + w)`. `l` is always `x_lo` or an
    /// active value.
    pub fn leftmost_gap(&self, x_lo: f64, x_hi: f64, w: f64) -> Option<f64> {
        if x_lo > x_hi {
            return None;
        }
        let mut prev = x_lo;
        for v in self.canonical(x_lo, x_hi).iter() {
            let node = &self.nodes[v];
            if node.is_empty() {
                continue;
            }
            if span(prev, node.lo) >= w {
                return Some(prev);
            }
            if node.gap >= w {
                return Some(self.descend_left(v, prev, w));
            }
            prev = node.hi;
        }
        (span(prev, x_hi) >= w).then_some(prev)
    }

    /// Largest `r <= x_hi` such that `r - w >= x_lo` and no active value lies
    /// in `(r - w, r)`.
    pub fn rightmost_gap(&self, x_lo: f64, x_hi: f64, w: f64) -> Option<f64> {
        if x_lo > x_hi {
            return None;
        }
        let mut next = x_hi;
        for v in self.canonical(x_lo, x_hi).iter().rev() {
            let node = &self.nodes[v];
            if node.is_empty() {
                continue;
            }
            if span(node.hi, next) >= w {
                return Some(next);
            }
            if node.gap >= w {
                return Some(self.descend_right(v, next, w));
            }
            next = node.lo;
        }
        (span(x_lo, next) >= w).then_some(next)
    }

    // `v` holds an internal gap >= w and no qualifying gap lies left of it.
    fn descend_left(&self, mut v: usize, mut prev: f64, w: f64) -> f64 {
        while v < self.size {
            let (l, r) = (&self.nodes[2 * v], &self.nodes[2 * v + 1]);
            if !l.is_empty() {
                if span(prev, l.lo) >= w {
                    return prev;
                }
                if l.gap >= w {
                    v *= 2;
                    continue;
                }
                prev = l.hi;
            }
            if span(prev, r.lo) >= w {
                return prev;
            }
            v = 2 * v + 1;
        }
        unreachable!("descent reached a leaf without finding the gap")
    }

    fn descend_right(&self, mut v: usize, mut next: f64, w: f64) -> f64 {
        while v < self.size {
            let (l, r) = (&self.nodes[2 * v], &self.nodes[2 * v + 1]);
            if !r.is_empty() {
                if span(r.hi, next) >= w {
                    return next;
                }
                if r.gap >= w {
                    v = 2 * v + 1;
                    continue;
                }
                next = r.lo;
            }
            if span(l.hi, next) >= w {
                return next;
            }
            v *= 2;
        }
        unreachable!("descent reached a leaf without finding the gap")
    }
}
