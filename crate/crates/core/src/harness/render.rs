//! SVG figures of instances and their certificates.
//!
//! Geometry is exact everywhere else; here it is converted to `f64` and
//! clipped to a padded bounding box of the points, for display only.

use std::fmt::Write;

use crate::geom::Point;
use crate::maxcol::{Color, HalfplaneSide};
use crate::range_count::{Bound, OrientedRect};

use super::io::{Certificate, InstanceFile, SolutionFile};

const CANVAS: f64 = 600.0;
const MARGIN: f64 = 20.0;

type Poly = Vec<(f64, f64)>;

/// Keeps the part of `poly` where `a·x + b·y + c >= 0`.
fn clip(poly: &Poly, a: f64, b: f64, c: f64) -> Poly {
    let side = |p: (f64, f64)| a * p.0 + b * p.1 + c;
    let mut out = Vec::with_capacity(poly.len() + 1);
    for (i, &p) in poly.iter().enumerate() {
        let q = poly[(i + 1) % poly.len()];
        let (sp, sq) = (side(p), side(q));
        if sp >= 0.0 {
            out.push(p);
        }
        if (sp > 0.0 && sq < 0.0) || (sp < 0.0 && sq > 0.0) {
            let t = sp / (sp - sq);
            out.push((p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1)));
        }
    }
    out
}

fn rect_polygon(rect: &OrientedRect, view: &Poly) -> Poly {
    let d = rect.dir();
    let (dx, dy) = (d.dx() as f64, d.dy() as f64);
    // u = (dx, dy)·p and v = (-dy, dx)·p
    let mut poly = view.clone();
    let (u_lo, u_hi) = rect.u_bounds();
    let (v_lo, v_hi) = rect.v_bounds();
    for (bound, (a, b), lower) in [
        (u_lo, (dx, dy), true),
        (u_hi, (dx, dy), false),
        (v_lo, (-dy, dx), true),
        (v_hi, (-dy, dx), false),
    ] {
        if let Bound::Finite(r) = bound {
            let r = r.to_f64();
            poly = if lower {
                clip(&poly, a, b, -r)
            } else {
                clip(&poly, -a, -b, r)
            };
        }
    }
    poly
}

/// Bounding box of the points padded by a tenth of its size, at least 1.
fn view_box(points: &[Point]) -> (f64, f64, f64, f64) {
    if points.is_empty() {
        return (-1.0, -1.0, 1.0, 1.0);
    }
    let xs = points.iter().map(|p| p.x as f64);
    let ys = points.iter().map(|p| p.y as f64);
    let (x0, x1) = (xs.clone().fold(f64::MAX, f64::min), xs.fold(f64::MIN, f64::max));
    let (y0, y1) = (ys.clone().fold(f64::MAX, f64::min), ys.fold(f64::MIN, f64::max));
    let pad = ((x1 - x0).max(y1 - y0) / 10.0).max(1.0);
    (x0 - pad, y0 - pad, x1 + pad, y1 + pad)
}

/// An SVG 1.1 document with one marker per point and, given a solution,
/// one polygon for its rectangle or halfplane.
pub fn render_svg(instance: &InstanceFile, solution: Option<&SolutionFile>) -> String {
    let points = instance.points();
    let (x0, y0, x1, y1) = view_box(&points);
    let scale = (CANVAS - 2.0 * MARGIN) / (x1 - x0).max(y1 - y0);
    let sx = |x: f64| MARGIN + (x - x0) * scale;
    let sy = |y: f64| MARGIN + (y1 - y) * scale;
    let view: Poly = vec![(x0, y0), (x1, y0), (x1, y1), (x0, y1)];

    let mut svg = String::new();
    let w = 2.0 * MARGIN + (x1 - x0) * scale;
    let h = 2.0 * MARGIN + (y1 - y0) * scale;
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.1}" height="{h:.1}" viewBox="0 0 {w:.1} {h:.1}">"#
    );
    let _ = writeln!(svg, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);

    if let Some(sol) = solution {
        let poly = match &sol.certificate {
            Certificate::Rectangle { rect, .. } => rect_polygon(rect, &view),
            Certificate::Halfplane { line, side, .. } => {
                let c: Vec<f64> = line.iter().map(|s| s.parse().unwrap_or(0.0)).collect();
                match side {
                    HalfplaneSide::Above => clip(&view, c[0], c[1], c[2]),
                    HalfplaneSide::Below => clip(&view, -c[0], -c[1], -c[2]),
                }
            }
        };
        let pts: Vec<String> = poly.iter().map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect();
        let _ = writeln!(
            svg,
            r##"<polygon class="certificate" points="{}" fill="#f4d35e" fill-opacity="0.35" stroke="#c08a00" stroke-width="1.5"/>"##,
            pts.join(" ")
        );
    }

    let marker = |svg: &mut String, p: Point, class: &str, fill: &str| {
        let _ = writeln!(
            svg,
            r#"<circle class="{class}" cx="{:.2}" cy="{:.2}" r="4" fill="{fill}"/>"#,
            sx(p.x as f64),
            sy(p.y as f64)
        );
    };
    match instance {
        InstanceFile::Mrr(m) => {
            for &p in &m.red {
                marker(&mut svg, p, "red", "#d1495b");
            }
            for &p in &m.blue {
                marker(&mut svg, p, "blue", "#00798c");
            }
        }
        InstanceFile::MaxCol(m) => {
            for [a, b] in &m.pairs {
                let _ = writeln!(
                    svg,
                    r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#999999" stroke-dasharray="3 3"/>"##,
                    sx(a.x as f64),
                    sy(a.y as f64),
                    sx(b.x as f64),
                    sy(b.y as f64)
                );
            }
            let colors: Vec<(Point, Color)> = match solution.map(|s| &s.certificate) {
                Some(Certificate::Halfplane { coloring, .. }) => coloring.iter().map(|c| (c.point, c.color)).collect(),
                _ => Vec::new(),
            };
            for p in m.pairs.iter().flatten() {
                match colors.iter().find(|c| c.0 == *p).map(|c| c.1) {
                    Some(Color::Red) => marker(&mut svg, *p, "red", "#d1495b"),
                    Some(Color::Blue) => marker(&mut svg, *p, "blue", "#00798c"),
                    None => marker(&mut svg, *p, "point", "#333333"),
                }
            }
        }
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clip_square_by_diagonal() {
        let sq: Poly = vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
        // y >= x
        let half = clip(&sq, -1.0, 1.0, 0.0);
        assert_eq!(half.len(), 3);
    }

    #[test]
    fn unbounded_rect_clips_to_view() {
        let view: Poly = vec![(0.0, 0.0), (10.0, 0.0), (10.0, 10.0), (0.0, 10.0)];
        let r = OrientedRect::plane();
        assert_eq!(rect_polygon(&r, &view).len(), 4);
    }
}
