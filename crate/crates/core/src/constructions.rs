//! Explicit k-tuples: equal arcs, corner concentration, inscribed k-gons,
//! equal boundary lengths and rectangle stripes.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{BoundaryEdge, BoundaryPoint, PlanarDomain, Vec2};
use crate::regions::{Cap, Region, TupleCandidate};

/// Exponent denominators for the leg-growth schedule δ_j = ε^{-1/(k-j+c)}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DeltaSchedule {
    /// c = 1: faster growth, outermost legs near √ε.
    Steep,
    /// c = 2: outermost legs near ε^{2/3}; excess decays like ε^{1/(k(k+1))}.
    #[default]
    Gentle,
}

impl DeltaSchedule {
    fn offset(self) -> usize {
        match self {
            DeltaSchedule::Steep => 1,
            DeltaSchedule::Gentle => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CornerScheduleParams {
    /// Junction index of the corner.
    pub corner: usize,
    pub k: usize,
    pub epsilon: f64,
    pub schedule: DeltaSchedule,
}

impl CornerScheduleParams {
    pub fn new(corner: usize, k: usize, epsilon: f64) -> Self {
        CornerScheduleParams {
            corner,
            k,
            epsilon,
            schedule: DeltaSchedule::default(),
        }
    }

    /// Cumulative legs t_1 < … < t_k in units of the reach.
    pub fn legs(&self) -> Vec<f64> {
        let (k, eps) = (self.k, self.epsilon);
        let c = self.schedule.offset();
        let mut acc = 1.0;
        let mut legs = vec![eps];
        for j in 1..k {
            acc += eps.powf(-1.0 / (k - j + c) as f64);
            legs.push(eps * acc);
        }
        legs
    }
}

/// Offset along an edge leaving a corner so the point sits at Euclidean
/// distance `t` from the corner. `None` if the edge is not long enough.
fn leg_offset(e: &BoundaryEdge, t: f64) -> Option<f64> {
    let u = match e {
        BoundaryEdge::Segment(_) => t,
        BoundaryEdge::Arc(a) => {
            let x = t / (2.0 * a.radius);
            if x >= 1.0 {
                return None;
            }
            2.0 * a.radius * x.asin()
        }
    };
    (u < e.length()).then_some(u)
}

/// Boundary points at distance `t` from corner `j` on the outgoing and the
/// incoming edge.
pub fn corner_legs(d: &PlanarDomain, j: usize, t: f64) -> Option<(BoundaryPoint, BoundaryPoint)> {
    let m = d.edge_count();
    let out = leg_offset(&d.edges()[j], t)?;
    let inc = leg_offset(&d.edges()[(j + m - 1) % m], t)?;
    Some((d.anchored(j, -inc), d.anchored(j, out)))
}

/// Length of the shorter edge at a corner; corner legs are measured in this unit.
pub fn corner_reach(d: &PlanarDomain, j: usize) -> f64 {
    let m = d.edge_count();
    d.edge_length(j).min(d.edge_length((j + m - 1) % m))
}

/// Nested cap and strips at one corner for absolute legs `t_1 < … < t_k`.
pub fn corner_tuple_from_legs(d: &PlanarDomain, j: usize, legs: &[f64]) -> Option<TupleCandidate> {
    let mut caps = Vec::with_capacity(legs.len());
    for &t in legs {
        let (a, b) = corner_legs(d, j, t)?;
        caps.push(Cap::new(a, b));
    }
    let mut regions = vec![Region::Cap(caps[0])];
    for w in caps.windows(2) {
        regions.push(Region::strip(w[0], w[1]));
    }
    Some(TupleCandidate::new(regions))
}

/// Cap at the corner followed by k−1 strips, legs following the δ-schedule.
/// ε is halved (up to 60 times) until every chord is interior.
pub fn corner_tuple(d: &PlanarDomain, params: CornerScheduleParams) -> Result<TupleCandidate> {
    if params.k == 0 {
        return Err(Error::param("k must be at least 1"));
    }
    if !(params.epsilon > 0.0 && params.epsilon < 1.0) {
        return Err(Error::param(format!("epsilon must lie in (0, 1), got {}", params.epsilon)));
    }
    if params.corner >= d.edge_count() {
        return Err(Error::param(format!("no junction {}", params.corner)));
    }
    let theta = d.interior_angles()[params.corner];
    if theta >= PI - 1e-12 {
        return Err(Error::NotApplicable(format!("corner angle {theta} is not below π")));
    }
    let reach = corner_reach(d, params.corner);
    let mut p = params;
    for _ in 0..=60 {
        let legs: Vec<f64> = p.legs().iter().map(|t| t * reach).collect();
        if let Some(t) = corner_tuple_from_legs(d, p.corner, &legs) {
            if t.validate(d).is_ok() {
                return Ok(t);
            }
        }
        p.epsilon /= 2.0;
    }
    Err(Error::ConstructionFailure(format!(
        "corner {} schedule leaves the domain even after shrinking epsilon",
        params.corner
    )))
}

/// k caps on consecutive boundary intervals of length L/k, the first starting
/// at `offset` (default: midpoint of the longest edge).
pub fn equal_boundary_tuple(d: &PlanarDomain, k: usize, offset: Option<f64>) -> Result<TupleCandidate> {
    if k < 2 {
        return Err(Error::param("equal boundary tuples need k >= 2"));
    }
    let start = offset.unwrap_or_else(|| default_offset(d));
    let l = d.perimeter();
    let pts: Vec<BoundaryPoint> = (0..k).map(|i| d.point(start + l * i as f64 / k as f64)).collect();
    let mut regions = Vec::with_capacity(k);
    for i in 0..k {
        let (a, b) = (pts[i], pts[(i + 1) % k]);
        match d.chord_is_interior(a, b) {
            Ok(true) => regions.push(Region::cap(a, b)),
            _ => {
                return Err(Error::ConstructionFailure(format!(
                    "chord {i} from s={} to s={} is not interior",
                    d.s(a),
                    d.s(b)
                )))
            }
        }
    }
    Ok(TupleCandidate::new(regions))
}

/// Midpoint of the longest edge (first one on ties).
pub fn default_offset(d: &PlanarDomain) -> f64 {
    let mut best = 0;
    for i in 1..d.edge_count() {
        if d.edge_length(i) > d.edge_length(best) * (1.0 + 1e-12) {
            best = i;
        }
    }
    d.edge_start_s(best) + d.edge_length(best) / 2.0
}

/// Equal arcs of length 2πr/k on a disk.
pub fn disk_equal_arc_tuple(d: &PlanarDomain, k: usize, offset: f64) -> Result<TupleCandidate> {
    if !d.is_disk() {
        return Err(Error::NotApplicable("domain is not a disk".into()));
    }
    equal_boundary_tuple(d, k, Some(offset))
}

/// On a regular n-gon with n = ℓk: caps whose chords join every ℓ-th edge midpoint.
pub fn inscribed_kgon_tuple(d: &PlanarDomain, k: usize) -> Result<TupleCandidate> {
    let n = d
        .regular_sides()
        .ok_or_else(|| Error::NotApplicable("domain is not a regular polygon".into()))?;
    if k < 2 || n % k != 0 {
        return Err(Error::NotApplicable(format!("k = {k} does not divide n = {n}")));
    }
    let l = n / k;
    let side = d.perimeter() / n as f64;
    let mids: Vec<BoundaryPoint> = (0..k).map(|i| d.point(d.edge_start_s(i * l) + side / 2.0)).collect();
    let regions = (0..k).map(|i| Region::cap(mids[i], mids[(i + 1) % k])).collect();
    let t = TupleCandidate::new(regions);
    t.validate(d)
        .map_err(|v| Error::ConstructionFailure(format!("inscribed tuple invalid: {v}")))?;
    Ok(t)
}

/// Axis-aligned bounding box of a four-segment axis-aligned rectangle.
fn rectangle_box(d: &PlanarDomain) -> Option<(Vec2, Vec2)> {
    if d.edge_count() != 4 || !d.is_polygon() {
        return None;
    }
    let tol = d.tol_len();
    for e in d.edges() {
        let (p, q) = (e.start(), e.end());
        if (p.x - q.x).abs() > tol && (p.y - q.y).abs() > tol {
            return None;
        }
    }
    let js = d.junctions();
    let lo = Vec2::new(js.iter().map(|p| p.x).fold(f64::INFINITY, f64::min), js.iter().map(|p| p.y).fold(f64::INFINITY, f64::min));
    let hi = Vec2::new(js.iter().map(|p| p.x).fold(f64::NEG_INFINITY, f64::max), js.iter().map(|p| p.y).fold(f64::NEG_INFINITY, f64::max));
    Some((lo, hi))
}

/// k contiguous stripes of the given height, centred along the long axis of
/// an axis-aligned rectangle. Stripes touching an end of the rectangle are caps.
pub fn stripe_tuple(d: &PlanarDomain, k: usize, height: f64) -> Result<TupleCandidate> {
    let (lo, hi) = rectangle_box(d).ok_or_else(|| Error::NotApplicable("domain is not an axis-aligned rectangle".into()))?;
    if k == 0 || !(height > 0.0) {
        return Err(Error::param("need k >= 1 and a positive stripe height"));
    }
    let vertical = hi.y - lo.y >= hi.x - lo.x;
    let (a0, a1) = if vertical { (lo.y, hi.y) } else { (lo.x, hi.x) };
    let total = height * k as f64;
    let tol = d.tol_len();
    if total > a1 - a0 + tol {
        return Err(Error::param(format!("{k} stripes of height {height} do not fit in length {}", a1 - a0)));
    }
    // Cut at coordinate c: the cap on the low side has exterior from the
    // "left" wall to the "right" wall when walking counterclockwise.
    let low_cap = |c: f64| -> Cap {
        if vertical {
            Cap::new(d.project(Vec2::new(lo.x, c)), d.project(Vec2::new(hi.x, c)))
        } else {
            Cap::new(d.project(Vec2::new(c, hi.y)), d.project(Vec2::new(c, lo.y)))
        }
    };
    let high_cap = |c: f64| -> Cap {
        let l = low_cap(c);
        Cap::new(l.b, l.a)
    };
    let start = 0.5 * (a0 + a1) - total / 2.0;
    let mut regions = Vec::with_capacity(k);
    for i in 0..k {
        let (c0, c1) = (start + height * i as f64, start + height * (i + 1) as f64);
        let at_low = c0 <= a0 + tol;
        let at_high = c1 >= a1 - tol;
        regions.push(match (at_low, at_high) {
            (true, true) => {
                return Err(Error::param("a single stripe covering the whole rectangle has no interior boundary"));
            }
            (true, false) => Region::Cap(low_cap(c1)),
            (false, true) => Region::Cap(high_cap(c0)),
            (false, false) => Region::strip(low_cap(c0), low_cap(c1)),
        });
    }
    let t = TupleCandidate::new(regions);
    t.validate(d)
        .map_err(|v| Error::ConstructionFailure(format!("stripe tuple invalid: {v}")))?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disk_value(k: usize) -> f64 {
        let x = PI / k as f64;
        x.sin() / x
    }

    #[test]
    fn disk_equal_arcs() {
        let d = PlanarDomain::make_disk(1.0).unwrap();
        for k in 2..8 {
            for &off in &[0.0, 0.37, 5.0] {
                let t = disk_equal_arc_tuple(&d, k, off).unwrap();
                assert!(t.validate(&d).is_ok());
                assert!((t.max_eta(&d) - disk_value(k)).abs() < 1e-13, "k={k}");
            }
        }
        assert!((disk_value(4) - 0.900316316157).abs() < 1e-11);
        let sq = PlanarDomain::make_regular_polygon(4).unwrap();
        assert!(disk_equal_arc_tuple(&sq, 3, 0.0).is_err());
    }

    #[test]
    fn schedule_legs() {
        let p = CornerScheduleParams {
            corner: 0,
            k: 3,
            epsilon: 1e-6,
            schedule: DeltaSchedule::Steep,
        };
        let legs = p.legs();
        // δ_1 = ε^{-1/3}, δ_2 = ε^{-1/2}
        let expect = [1e-6, 1e-6 * (1.0 + 100.0), 1e-6 * (1.0 + 100.0 + 1000.0)];
        for (a, b) in legs.iter().zip(expect) {
            assert!((a / b - 1.0).abs() < 1e-12);
        }
        let g = CornerScheduleParams::new(0, 3, 1e-12).legs();
        let expect = [1e-12, 1e-12 * (1.0 + 1e3), 1e-12 * (1.0 + 1e3 + 1e4)];
        for (a, b) in g.iter().zip(expect) {
            assert!((a / b - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn corner_tuple_square() {
        let d4 = PlanarDomain::make_regular_polygon(4).unwrap();
        let s = (PI / 4.0).sin();
        let one = corner_tuple(&d4, CornerScheduleParams::new(0, 1, 1e-3)).unwrap();
        assert!((one.max_eta(&d4) - s).abs() < 1e-15);
        let t = corner_tuple(&d4, CornerScheduleParams::new(0, 3, 1e-6)).unwrap();
        let etas = t.etas(&d4);
        assert!((etas[0] - s).abs() < 1e-14);
        assert!(etas[1..].iter().all(|&e| e > etas[0]));
        // Strip values follow sin(θ/2)(t_{j-1}+t_j)/(t_j-t_{j-1}).
        let legs = CornerScheduleParams::new(0, 3, 1e-6).legs();
        for j in 1..3 {
            let f = s * (legs[j - 1] + legs[j]) / (legs[j] - legs[j - 1]);
            assert!((etas[j] / f - 1.0).abs() < 1e-12);
        }
        assert!(t.max_eta(&d4) > s);
        let nonconvex_corner = PlanarDomain::make_polygon(&[
            Vec2::new(0.0, 0.0),
            Vec2::new(2.0, 0.0),
            Vec2::new(2.0, 1.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(1.0, 2.0),
            Vec2::new(0.0, 2.0),
        ])
        .unwrap();
        assert!(matches!(
            corner_tuple(&nonconvex_corner, CornerScheduleParams::new(3, 2, 1e-3)),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn corner_tuple_triangle() {
        let d3 = PlanarDomain::make_regular_polygon(3).unwrap();
        let t = corner_tuple(&d3, CornerScheduleParams::new(0, 2, 1e-8)).unwrap();
        let v = t.max_eta(&d3);
        assert!(v > 0.5 && v < 0.6, "{v}");
    }

    #[test]
    fn corner_tuple_decreases_in_epsilon() {
        let d4 = PlanarDomain::make_regular_polygon(4).unwrap();
        let mut last = f64::INFINITY;
        for e in 3..=12 {
            let v = corner_tuple(&d4, CornerScheduleParams::new(0, 3, 10f64.powi(-e))).unwrap().max_eta(&d4);
            assert!(v < last);
            last = v;
        }
    }

    #[test]
    fn inscribed_matches_closed_form() {
        for &(n, k) in &[(6usize, 3usize), (4, 4), (8, 2), (8, 4), (9, 3), (10, 5), (12, 4)] {
            let d = PlanarDomain::make_regular_polygon(n).unwrap();
            let t = inscribed_kgon_tuple(&d, k).unwrap();
            let (nf, kf) = (n as f64, k as f64);
            let f = (PI / kf).sin() / (PI / nf).tan() * kf / nf;
            let etas = t.etas(&d);
            for e in &etas {
                assert!((e - f).abs() < 1e-12, "n={n} k={k}");
            }
            // Congruent regions.
            let ext: Vec<f64> = t.regions.iter().map(|r| r.exterior_length(&d)).collect();
            assert!(ext.iter().all(|x| (x - ext[0]).abs() < 1e-12));
            let l = (n / k) as f64;
            assert!((ext[0] - 2.0 * l * (PI / nf).sin()).abs() < 1e-12);
            let int = t.regions[0].interior_length(&d);
            assert!((int - 2.0 * (PI / nf).cos() * (PI / kf).sin()).abs() < 1e-12);
        }
        let d7 = PlanarDomain::make_regular_polygon(7).unwrap();
        assert!(matches!(inscribed_kgon_tuple(&d7, 3), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn equal_boundary_hexagon_matches_inscribed() {
        let d6 = PlanarDomain::make_regular_polygon(6).unwrap();
        let t = equal_boundary_tuple(&d6, 3, None).unwrap();
        assert!((t.max_eta(&d6) - 0.75).abs() < 1e-12);
        let d5 = PlanarDomain::make_regular_polygon(5).unwrap();
        let v = equal_boundary_tuple(&d5, 3, None).unwrap().max_eta(&d5);
        assert!(v <= disk_value(3));
    }

    #[test]
    fn equal_boundary_rejects_notch_crossing() {
        let l = PlanarDomain::make_polygon(&[
            Vec2::new(0.0, 0.0),
            Vec2::new(2.0, 0.0),
            Vec2::new(2.0, 1.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(1.0, 2.0),
            Vec2::new(0.0, 2.0),
        ])
        .unwrap();
        assert!(matches!(equal_boundary_tuple(&l, 2, Some(1.5)), Err(Error::ConstructionFailure(_))));
    }

    fn thin(eps: f64, n: f64) -> PlanarDomain {
        PlanarDomain::make_polygon(&[
            Vec2::new(-eps, -n),
            Vec2::new(eps, -n),
            Vec2::new(eps, n),
            Vec2::new(-eps, n),
        ])
        .unwrap()
    }

    #[test]
    fn stripes() {
        let r = thin(0.01, 4.0);
        let t = stripe_tuple(&r, 4, 1.0).unwrap();
        assert!((t.max_eta(&r) - 0.02).abs() < 1e-12);
        assert!(t.regions.iter().all(|x| matches!(x, Region::Strip(_))));
        let r2 = thin(0.1, 4.0);
        assert!((stripe_tuple(&r2, 2, 1.0).unwrap().max_eta(&r2) - 0.2).abs() < 1e-12);
        // Filling the whole length turns the end stripes into caps.
        let full = stripe_tuple(&r, 8, 1.0).unwrap();
        assert!(matches!(full.regions[0], Region::Cap(_)));
        assert!(matches!(full.regions[7], Region::Cap(_)));
        assert!((full.max_eta(&r) - 0.02).abs() < 1e-12);
        assert!(stripe_tuple(&r, 1, 8.0).is_err());
        assert!(stripe_tuple(&r, 9, 1.0).is_err());
    }
}
