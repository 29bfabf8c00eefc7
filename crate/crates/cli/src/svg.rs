//! Static SVG rendering of a point set and, optionally, a solution.
//!
//! The viewport covers the points and every finite rectangle side with a
//! margin; sides at infinity are clipped to the viewport and dashed.

use std::fmt::Write;

use annulus_core::{AnnulusSolution, OrthoRect, PointSet};

const CANVAS: f64 = 600.0;

struct Viewport {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
}

impl Viewport {
    fn new(ps: &PointSet, rects: &[OrthoRect]) -> Self {
        let mut xs: Vec<f64> = ps.points().iter().map(|p| p.x).collect();
        let mut ys: Vec<f64> = ps.points().iter().map(|p| p.y).collect();
        for r in rects {
            xs.extend([r.left, r.right].into_iter().filter(|v| v.is_finite()));
            ys.extend([r.bottom, r.top].into_iter().filter(|v| v.is_finite()));
        }
        let range = |v: &[f64]| {
            let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            if lo > hi {
                (0.0, 1.0)
            } else {
                (lo, hi)
            }
        };
        let ((x0, x1), (y0, y1)) = (range(&xs), range(&ys));
        let pad = 0.1 * (x1 - x0).max(y1 - y0).max(1.0);
        Viewport { x0: x0 - pad, y0: y0 - pad, x1: x1 + pad, y1: y1 + pad }
    }

    fn scale(&self) -> f64 {
        CANVAS / (self.x1 - self.x0).max(self.y1 - self.y0)
    }

    fn sx(&self, x: f64) -> f64 {
        (x.clamp(self.x0, self.x1) - self.x0) * self.scale()
    }

    // SVG y grows downward.
    fn sy(&self, y: f64) -> f64 {
        (self.y1 - y.clamp(self.y0, self.y1)) * self.scale()
    }
}

/// Renders `ps` and the solution's outer and inner rectangles.
pub fn render_svg(ps: &PointSet, solution: Option<&AnnulusSolution>) -> String {
    let rects: Vec<OrthoRect> = solution.map(|s| vec![s.rect_form.outer, s.rect_form.inner]).unwrap_or_default();
    let vp = Viewport::new(ps, &rects);
    let (w, h) = ((vp.x1 - vp.x0) * vp.scale(), (vp.y1 - vp.y0) * vp.scale());
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.2}" height="{h:.2}" viewBox="0 0 {w:.2} {h:.2}">"#
    );
    let _ = writeln!(out, r#"  <rect x="0" y="0" width="{w:.2}" height="{h:.2}" fill="white"/>"#);
    if let Some(s) = solution {
        let _ = writeln!(out, "  <title>{} annulus, width {}</title>", s.shape.name(), s.width);
    }
    for (r, (class, color)) in rects.iter().zip([("outer", "#1f4e9c"), ("inner", "#c0392b")]) {
        let _ = writeln!(out, r#"  <g class="{class}" stroke="{color}" stroke-width="2" fill="none">"#);
        let sides = [
            (r.left, r.bottom, r.left, r.top, r.left),
            (r.right, r.bottom, r.right, r.top, r.right),
            (r.left, r.bottom, r.right, r.bottom, r.bottom),
            (r.left, r.top, r.right, r.top, r.top),
        ];
        for (xa, ya, xb, yb, at) in sides {
            let dash = if at.is_finite() { "" } else { r#" stroke-dasharray="6 4""# };
            let _ = writeln!(
                out,
                r#"    <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"{dash}/>"#,
                vp.sx(xa),
                vp.sy(ya),
                vp.sx(xb),
                vp.sy(yb)
            );
        }
        let _ = writeln!(out, "  </g>");
    }
    let _ = writeln!(out, r#"  <g class="points" fill="black">"#);
    for p in ps.points() {
        let _ = writeln!(out, r#"    <circle cx="{:.2}" cy="{:.2}" r="3"/>"#, vp.sx(p.x), vp.sy(p.y));
    }
    let _ = writeln!(out, "  </g>");
    out.push_str("</svg>\n");
    out
}
