//! Pairwise intersections between boundary edges, used for simplicity checks.

use super::edge::{Arc, BoundaryEdge, Segment};
use super::vec2::Vec2;

/// Result of intersecting two edges: isolated crossing/touching points, or an
/// overlap of positive length.
#[derive(Debug, Clone, PartialEq)]
pub enum Contact {
    Points(Vec<Vec2>),
    Overlap,
}

pub fn edge_contacts(e1: &BoundaryEdge, e2: &BoundaryEdge, tol: f64) -> Contact {
    match (e1, e2) {
        (BoundaryEdge::Segment(a), BoundaryEdge::Segment(b)) => segment_segment(a, b, tol),
        (BoundaryEdge::Segment(s), BoundaryEdge::Arc(a)) | (BoundaryEdge::Arc(a), BoundaryEdge::Segment(s)) => {
            Contact::Points(segment_arc(s, a, tol))
        }
        (BoundaryEdge::Arc(a), BoundaryEdge::Arc(b)) => arc_arc(a, b, tol),
    }
}

fn segment_segment(a: &Segment, b: &Segment, tol: f64) -> Contact {
    let d = a.end - a.start;
    let e = b.end - b.start;
    let (ld, le) = (d.norm(), e.norm());
    let denom = d.cross(e);
    let w = b.start - a.start;
    if denom.abs() <= 1e-14 * ld * le {
        // Parallel: only collinear ones can touch.
        if (d.cross(w) / ld).abs() > tol {
            return Contact::Points(Vec::new());
        }
        let dir = d * (1.0 / ld);
        let (b0, b1) = (w.dot(dir), (b.end - a.start).dot(dir));
        let (lo, hi) = (b0.min(b1).max(0.0), b0.max(b1).min(ld));
        return if hi - lo > tol {
            Contact::Overlap
        } else if hi - lo >= -tol {
            Contact::Points(vec![a.start + dir * (0.5 * (lo + hi))])
        } else {
            Contact::Points(Vec::new())
        };
    }
    let t = w.cross(e) / denom;
    let u = w.cross(d) / denom;
    let (tt, tu) = (tol / ld, tol / le);
    if t >= -tt && t <= 1.0 + tt && u >= -tu && u <= 1.0 + tu {
        Contact::Points(vec![a.start + d * t.clamp(0.0, 1.0)])
    } else {
        Contact::Points(Vec::new())
    }
}

/// Points where the line `p + λ·dir` (unit `dir`) meets the circle, as λ values.
pub(crate) fn line_circle(p: Vec2, dir: Vec2, center: Vec2, radius: f64) -> Vec<f64> {
    let w = p - center;
    let b = dir.dot(w);
    let c = w.dot(w) - radius * radius;
    let disc = b * b - c;
    if disc < 0.0 {
        if disc > -1e-14 * radius * radius {
            return vec![-b];
        }
        return Vec::new();
    }
    let s = disc.sqrt();
    // Stable root pair.
    let q = if b > 0.0 { -b - s } else { -b + s };
    if q == 0.0 {
        return vec![0.0];
    }
    let r1 = q;
    let r2 = c / q;
    let (lo, hi) = if r1 < r2 { (r1, r2) } else { (r2, r1) };
    vec![lo, hi]
}

fn segment_arc(s: &Segment, a: &Arc, tol: f64) -> Vec<Vec2> {
    let d = s.end - s.start;
    let len = d.norm();
    let dir = d * (1.0 / len);
    let ang_tol = tol / a.radius;
    line_circle(s.start, dir, a.center, a.radius)
        .into_iter()
        .filter(|&lam| lam >= -tol && lam <= len + tol)
        .map(|lam| s.start + dir * lam.clamp(0.0, len))
        .filter(|p| a.contains_angle((*p - a.center).angle(), ang_tol))
        .collect()
}

fn arc_arc(a: &Arc, b: &Arc, tol: f64) -> Contact {
    let dc = b.center - a.center;
    let dist = dc.norm();
    if dist <= tol && (a.radius - b.radius).abs() <= tol {
        // Same circle: overlap unless the angular ranges only share endpoints.
        let ang_tol = tol / a.radius;
        let mut shared = Vec::new();
        for p in [BoundaryEdge::Arc(*b).start(), BoundaryEdge::Arc(*b).end()] {
            if a.contains_angle((p - a.center).angle(), ang_tol) {
                shared.push(p);
            }
        }
        for p in [BoundaryEdge::Arc(*a).start(), BoundaryEdge::Arc(*a).end()] {
            if b.contains_angle((p - b.center).angle(), ang_tol) {
                shared.push(p);
            }
        }
        // Midpoints inside the other arc mean genuine overlap.
        let mid_a = a.point_at_angle(a.start_angle + a.sweep / 2.0);
        let mid_b = b.point_at_angle(b.start_angle + b.sweep / 2.0);
        if b.contains_angle((mid_a - b.center).angle(), -ang_tol) || a.contains_angle((mid_b - a.center).angle(), -ang_tol) {
            return Contact::Overlap;
        }
        return Contact::Points(shared);
    }
    if dist > a.radius + b.radius + tol || dist < (a.radius - b.radius).abs() - tol || dist == 0.0 {
        return Contact::Points(Vec::new());
    }
    let x = (dist * dist + a.radius * a.radius - b.radius * b.radius) / (2.0 * dist);
    let h2 = a.radius * a.radius - x * x;
    let h = if h2 > 0.0 { h2.sqrt() } else { 0.0 };
    let ex = dc * (1.0 / dist);
    let base = a.center + ex * x;
    let mut cands = vec![base + ex.perp() * h];
    if h > 0.0 {
        cands.push(base - ex.perp() * h);
    }
    let (ta, tb) = (tol / a.radius, tol / b.radius);
    Contact::Points(
        cands
            .into_iter()
            .filter(|p| a.contains_angle((*p - a.center).angle(), ta) && b.contains_angle((*p - b.center).angle(), tb))
            .collect(),
    )
}
