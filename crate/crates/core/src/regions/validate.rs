use std::fmt;

use super::{Cap, Region, TupleCandidate};
use crate::geometry::{BoundaryPoint, PlanarDomain};

/// Whether regions may share chord endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strictness {
    /// Open sets must be disjoint; closures may touch.
    #[default]
    Lenient,
    /// No two regions may share a boundary point.
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    EmptyTuple,
    DegenerateChord,
    ChordNotInterior,
    /// Strip whose inner cap is not strictly inside its outer cap.
    StripNotNested,
    ArcOverlap,
    ChordCrossing,
    /// One region's exterior arc lies inside another's.
    Nesting,
    SharedEndpoint,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationKind::EmptyTuple => "empty tuple",
            ViolationKind::DegenerateChord => "degenerate chord",
            ViolationKind::ChordNotInterior => "chord not interior",
            ViolationKind::StripNotNested => "strip not nested",
            ViolationKind::ArcOverlap => "arc overlap",
            ViolationKind::ChordCrossing => "chord crossing",
            ViolationKind::Nesting => "nesting violation",
            ViolationKind::SharedEndpoint => "shared endpoint",
        };
        f.write_str(s)
    }
}

/// The first problem found, naming the offending pair of regions (equal
/// indices for a single-region problem).
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub regions: (usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (regions {}, {})", self.kind, self.regions.0, self.regions.1)
    }
}

impl std::error::Error for Violation {}

fn chord_check(d: &PlanarDomain, c: &Cap) -> Option<ViolationKind> {
    match d.chord_is_interior(c.a, c.b) {
        Err(_) => Some(ViolationKind::DegenerateChord),
        Ok(false) => Some(ViolationKind::ChordNotInterior),
        Ok(true) => None,
    }
}

/// Checks one region on its own.
pub fn validate_region(d: &PlanarDomain, r: &Region) -> Option<ViolationKind> {
    match r {
        Region::Cap(c) => chord_check(d, c),
        Region::Strip(s) => {
            if let Some(v) = chord_check(d, &s.inner).or_else(|| chord_check(d, &s.outer)) {
                return Some(v);
            }
            let (oa, ia, ib, ob) = (s.outer.a, s.inner.a, s.inner.b, s.outer.b);
            let whole = d.span(oa, ob);
            let to_ia = if d.same_point(oa, ia) { 0.0 } else { d.span(oa, ia) };
            let to_ib = d.span(oa, ib);
            let tail = if d.same_point(ib, ob) { 0.0 } else { d.span(ib, ob) };
            let nested = (to_ia < to_ib || (to_ia == to_ib && before(d, oa, ia, ib))) && to_ib <= whole && to_ia + d.span(ia, ib) + tail <= whole * (1.0 + 1e-12);
            if !nested || (to_ia == 0.0 && tail == 0.0) {
                return Some(ViolationKind::StripNotNested);
            }
            if chords_cross(d, (s.inner.a, s.inner.b), (s.outer.a, s.outer.b)) {
                return Some(ViolationKind::ChordCrossing);
            }
            None
        }
    }
}

/// Whether `x` comes strictly before `y` walking counterclockwise from `base`.
/// Ties in arclength (legs far apart in scale) fall back to the offsets.
fn before(d: &PlanarDomain, base: BoundaryPoint, x: BoundaryPoint, y: BoundaryPoint) -> bool {
    let (sx, sy) = (d.span(base, x), d.span(base, y));
    if sx != sy {
        return sx < sy;
    }
    x.junction == y.junction && x.offset < y.offset
}

/// Whether `x` lies strictly inside the counterclockwise open interval (p, q).
fn inside(d: &PlanarDomain, p: BoundaryPoint, q: BoundaryPoint, x: BoundaryPoint) -> bool {
    if d.same_point(p, x) || d.same_point(q, x) {
        return false;
    }
    before(d, p, x, q)
}

fn intervals_overlap(d: &PlanarDomain, i1: (BoundaryPoint, BoundaryPoint), i2: (BoundaryPoint, BoundaryPoint)) -> bool {
    d.same_point(i1.0, i2.0) || inside(d, i1.0, i1.1, i2.0) || inside(d, i2.0, i2.1, i1.0)
}

fn interval_contains(d: &PlanarDomain, outer: (BoundaryPoint, BoundaryPoint), inner: (BoundaryPoint, BoundaryPoint)) -> bool {
    let start_ok = d.same_point(outer.0, inner.0) || inside(d, outer.0, outer.1, inner.0);
    let end_ok = d.same_point(outer.1, inner.1) || inside(d, outer.0, outer.1, inner.1);
    start_ok && end_ok && d.span(outer.0, inner.0) <= d.span(outer.0, inner.1)
}

/// Proper crossing of two open chords. Coordinates are taken relative to the
/// first endpoint so chords at a shared corner keep their precision.
fn chords_cross(d: &PlanarDomain, c1: (BoundaryPoint, BoundaryPoint), c2: (BoundaryPoint, BoundaryPoint)) -> bool {
    let base = c1.0;
    let p1 = d.displacement(base, c1.1);
    let q0 = d.displacement(base, c2.0);
    let q1 = d.displacement(base, c2.1);
    let e = q1 - q0;
    let (n1, n2) = (p1.norm(), e.norm());
    if n1 == 0.0 || n2 == 0.0 {
        return false;
    }
    let opposite = |u: f64, v: f64, scale: f64| {
        let eps = 1e-12 * scale;
        (u > eps && v < -eps) || (u < -eps && v > eps)
    };
    let s1 = n1 * q0.norm().max(q1.norm());
    let s2 = n2 * q0.norm().max((p1 - q0).norm());
    opposite(p1.cross(q0), p1.cross(q1), s1) && opposite(e.cross(-q0), e.cross(p1 - q0), s2)
}

/// Checks every tuple invariant and reports the first violation.
pub fn validate_tuple(d: &PlanarDomain, t: &TupleCandidate, mode: Strictness) -> Result<(), Violation> {
    if t.regions.is_empty() {
        return Err(Violation {
            kind: ViolationKind::EmptyTuple,
            regions: (0, 0),
        });
    }
    for (i, r) in t.regions.iter().enumerate() {
        if let Some(kind) = validate_region(d, r) {
            return Err(Violation { kind, regions: (i, i) });
        }
    }
    let ivs: Vec<_> = t.regions.iter().map(|r| r.exterior_intervals(d)).collect();
    for i in 0..t.regions.len() {
        for j in (i + 1)..t.regions.len() {
            let fail = |kind| Err(Violation { kind, regions: (i, j) });
            for &a in &ivs[i] {
                for &b in &ivs[j] {
                    if intervals_overlap(d, a, b) {
                        let nested = interval_contains(d, a, b) || interval_contains(d, b, a);
                        return fail(if nested { ViolationKind::Nesting } else { ViolationKind::ArcOverlap });
                    }
                }
            }
            for &c1 in &t.regions[i].chords() {
                for &c2 in &t.regions[j].chords() {
                    if chords_cross(d, c1, c2) {
                        return fail(ViolationKind::ChordCrossing);
                    }
                }
            }
            if mode == Strictness::Strict {
                let shared = t.regions[i]
                    .junction_points()
                    .iter()
                    .any(|&p| t.regions[j].junction_points().iter().any(|&q| d.same_point(p, q)));
                if shared {
                    return fail(ViolationKind::SharedEndpoint);
                }
            }
        }
    }
    Ok(())
}
