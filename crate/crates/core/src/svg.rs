//! SVG figures of a domain and a tuple. Exterior boundary pieces are drawn
//! bold and chords dotted. Output depends only on the inputs.

use std::f64::consts::FRAC_PI_2;
use std::fmt::Write;

use crate::geometry::{BoundaryEdge, PlanarDomain, Vec2};
use crate::regions::TupleCandidate;

const CANVAS: f64 = 600.0;
const PAD: f64 = 30.0;

struct View {
    lo: Vec2,
    scale: f64,
    height: f64,
}

impl View {
    fn new(d: &PlanarDomain) -> Self {
        let mut lo = Vec2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        // Sample edges densely enough to catch arc bulges.
        for e in d.edges() {
            for i in 0..=32 {
                let u = e.length() * i as f64 / 32.0;
                let p = e.start() + e.local_from_start(u);
                lo = Vec2::new(lo.x.min(p.x), lo.y.min(p.y));
                hi = Vec2::new(hi.x.max(p.x), hi.y.max(p.y));
            }
        }
        let w = (hi.x - lo.x).max(1e-300);
        let h = (hi.y - lo.y).max(1e-300);
        let scale = (CANVAS - 2.0 * PAD) / w.max(h);
        View {
            lo,
            scale,
            height: h * scale,
        }
    }

    fn map(&self, p: Vec2) -> (f64, f64) {
        (PAD + (p.x - self.lo.x) * self.scale, PAD + self.height - (p.y - self.lo.y) * self.scale)
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" || s.is_empty() {
        "0".into()
    } else {
        s.into()
    }
}

fn point(v: &View, p: Vec2) -> String {
    let (x, y) = v.map(p);
    format!("{} {}", num(x), num(y))
}

/// Path commands continuing from the start of `e`.
fn edge_commands(v: &View, e: &BoundaryEdge, out: &mut String) {
    match e {
        BoundaryEdge::Segment(s) => {
            let _ = write!(out, " L {}", point(v, s.end));
        }
        BoundaryEdge::Arc(a) => {
            let pieces = (a.sweep.abs() / FRAC_PI_2).ceil().max(1.0) as usize;
            let r = num(a.radius * v.scale);
            // The y flip turns counterclockwise into SVG's negative sweep.
            let flag = if a.sweep > 0.0 { 0 } else { 1 };
            for i in 1..=pieces {
                let phi = a.start_angle + a.sweep * i as f64 / pieces as f64;
                let _ = write!(out, " A {r} {r} 0 0 {flag} {}", point(v, a.point_at_angle(phi)));
            }
        }
    }
}

fn path(v: &View, edges: &[BoundaryEdge], close: bool) -> String {
    let mut out = format!("M {}", point(v, edges[0].start()));
    for e in edges {
        edge_commands(v, e, &mut out);
    }
    if close {
        out.push_str(" Z");
    }
    out
}

pub fn render(d: &PlanarDomain, t: Option<&TupleCandidate>) -> String {
    let v = View::new(d);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{c}" height="{c}" viewBox="0 0 {c} {c}">"#,
        c = CANVAS
    );
    let _ = writeln!(out, r##"<rect id="background" width="100%" height="100%" fill="#ffffff"/>"##);
    let _ = writeln!(
        out,
        r##"<path id="domain" d="{}" fill="#f4f4f4" stroke="#888888" stroke-width="1"/>"##,
        path(&v, d.edges(), true)
    );
    if let Some(t) = t {
        for (i, r) in t.regions.iter().enumerate() {
            let _ = writeln!(out, r#"<g id="region-{i}">"#);
            for (j, piece) in r.exterior_intervals(d).into_iter().enumerate() {
                let edges = d.boundary_pieces(piece.0, piece.1);
                if edges.is_empty() {
                    continue;
                }
                let _ = writeln!(
                    out,
                    r##"<path id="region-{i}-exterior-{j}" d="{}" fill="none" stroke="#000000" stroke-width="4"/>"##,
                    path(&v, &edges, false)
                );
            }
            for (j, (a, b)) in r.chords().into_iter().enumerate() {
                let _ = writeln!(
                    out,
                    r##"<path id="region-{i}-chord-{j}" d="M {} L {}" fill="none" stroke="#000000" stroke-width="1.5" stroke-dasharray="2 4"/>"##,
                    point(&v, d.point_at(a)),
                    point(&v, d.point_at(b))
                );
            }
            out.push_str("</g>\n");
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{disk_equal_arc_tuple, inscribed_kgon_tuple};

    #[test]
    fn disk_triangle() {
        let d = PlanarDomain::make_disk(1.0).unwrap();
        let t = disk_equal_arc_tuple(&d, 3, 0.0).unwrap();
        let svg = render(&d, Some(&t));
        assert_eq!(svg.matches("stroke-dasharray").count(), 3);
        assert_eq!(svg.matches("-exterior-").count(), 3);
        assert!(svg.contains(r#"id="region-2-chord-0""#));
        assert_eq!(svg, render(&d, Some(&t)));
    }

    #[test]
    fn hexagon_and_plain_domain() {
        let d = PlanarDomain::make_regular_polygon(6).unwrap();
        let t = inscribed_kgon_tuple(&d, 3).unwrap();
        let svg = render(&d, Some(&t));
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert!(!render(&d, None).contains("region-"));
        assert_eq!(num(-0.00001), "0");
        assert_eq!(num(12.5), "12.5");
    }
}
