use std::f64::consts::{PI, TAU};

use super::edge::{Arc, BoundaryEdge};
use super::intersect::{edge_contacts, line_circle, Contact};
use super::vec2::{signed_angle, Vec2};
use crate::error::{Error, Result};

/// Default tolerance for closure, point identity and tie cases, relative to
/// the perimeter.
pub const TAU_GEOM: f64 = 1e-9;

/// Angular slack used when deciding whether a chord leaves an endpoint into
/// the interior.
const ANGLE_EPS: f64 = 64.0 * f64::EPSILON;

/// Offsets below this multiple of the perimeter are treated as exactly zero.
const SNAP: f64 = 64.0 * f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub geom: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { geom: TAU_GEOM }
    }
}

/// What `make_polygon` does with three consecutive collinear vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CollinearPolicy {
    #[default]
    Collapse,
    Reject,
}

/// A position on the boundary, stored relative to the nearest junction so
/// that points extremely close to a corner keep full relative precision.
/// A positive offset lies on edge `junction`, a negative one on the edge
/// before it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPoint {
    pub junction: usize,
    pub offset: f64,
}

/// A closed, simple, counterclockwise chain of segments and circular arcs.
#[derive(Debug, Clone)]
pub struct PlanarDomain {
    edges: Vec<BoundaryEdge>,
    junctions: Vec<Vec2>,
    cum: Vec<f64>,
    perimeter: f64,
    angles: Vec<f64>,
    tol: Tolerances,
}

impl PlanarDomain {
    pub fn from_edges(edges: Vec<BoundaryEdge>) -> Result<Self> {
        Self::with_tolerances(edges, Tolerances::default())
    }

    pub fn with_tolerances(mut edges: Vec<BoundaryEdge>, tol: Tolerances) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::geometry(0, "domain has no edges"));
        }
        for (i, e) in edges.iter().enumerate() {
            let len = e.length();
            if !(len > 0.0) || !len.is_finite() {
                return Err(Error::geometry(i, "edge has zero or non-finite length"));
            }
            if let BoundaryEdge::Arc(a) = e {
                if a.sweep.abs() > TAU * (1.0 + 1e-12) {
                    return Err(Error::geometry(i, "arc sweeps more than a full turn"));
                }
            }
        }
        let perimeter: f64 = edges.iter().map(|e| e.length()).sum();
        let close_tol = tol.geom * perimeter;
        let m = edges.len();
        for i in 0..m {
            let gap = edges[i].end().distance(edges[(i + 1) % m].start());
            if gap > close_tol {
                return Err(Error::geometry(i, format!("chain not closed: gap {gap:.3e} to next edge")));
            }
        }
        if m == 1 && !matches!(edges[0], BoundaryEdge::Arc(a) if (a.sweep.abs() - TAU).abs() < 1e-12) {
            return Err(Error::geometry(0, "a single edge must be a full circle"));
        }

        let signed: f64 = edges.iter().map(|e| e.area_term()).sum();
        if signed.abs() <= tol.geom * perimeter * perimeter {
            return Err(Error::geometry(0, "boundary encloses no area"));
        }
        if signed < 0.0 {
            edges = edges.iter().rev().map(|e| e.reversed()).collect();
        }

        // Junction j is where edge j starts; arcs win because their endpoints
        // cannot be moved without changing the circle.
        let junctions: Vec<Vec2> = (0..m)
            .map(|j| {
                let prev = &edges[(j + m - 1) % m];
                match (&edges[j], prev) {
                    (BoundaryEdge::Arc(_), _) => edges[j].start(),
                    (_, BoundaryEdge::Arc(_)) => prev.end(),
                    _ => edges[j].start(),
                }
            })
            .collect();
        for j in 0..m {
            if let BoundaryEdge::Segment(s) = &mut edges[j] {
                s.start = junctions[j];
                s.end = junctions[(j + 1) % m];
            }
        }

        let mut cum = Vec::with_capacity(m + 1);
        let mut acc = 0.0;
        cum.push(0.0);
        for e in &edges {
            acc += e.length();
            cum.push(acc);
        }
        let perimeter = acc;

        let mut angles = Vec::with_capacity(m);
        for j in 0..m {
            let tin = edges[(j + m - 1) % m].end_tangent();
            let tout = edges[j].start_tangent();
            let theta = PI - signed_angle(tin, tout);
            if theta <= 1e-12 || theta >= TAU - 1e-12 {
                return Err(Error::geometry(j, "cusp at junction"));
            }
            angles.push(theta);
        }

        let dom = PlanarDomain {
            edges,
            junctions,
            cum,
            perimeter,
            angles,
            tol,
        };
        dom.check_simple()?;
        Ok(dom)
    }

    fn check_simple(&self) -> Result<()> {
        let m = self.edges.len();
        let tol = self.tol.geom * self.perimeter;
        for i in 0..m {
            for j in (i + 1)..m {
                let adjacent_fwd = j == i + 1;
                let adjacent_back = i == 0 && j == m - 1;
                let contact = edge_contacts(&self.edges[i], &self.edges[j], tol);
                let pts = match contact {
                    Contact::Overlap => return Err(Error::geometry(j, format!("edge overlaps edge {i}"))),
                    Contact::Points(p) => p,
                };
                let mut allowed = Vec::new();
                if adjacent_fwd {
                    allowed.push(self.junctions[j]);
                }
                if adjacent_back {
                    allowed.push(self.junctions[0]);
                }
                for p in pts {
                    if !allowed.iter().any(|q| q.distance(p) <= 10.0 * tol) {
                        return Err(Error::geometry(j, format!("edge intersects edge {i}")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn make_regular_polygon(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::param(format!("a regular polygon needs n >= 3, got {n}")));
        }
        let pts: Vec<Vec2> = (0..n).map(|j| Vec2::from_angle(TAU * j as f64 / n as f64)).collect();
        Self::polygon_unchecked(&pts)
    }

    pub fn make_disk(radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::param(format!("disk radius must be positive, got {radius}")));
        }
        let arc = Arc::new(Vec2::ZERO, radius, 0.0, TAU, true)?;
        Self::from_edges(vec![BoundaryEdge::Arc(arc)])
    }

    pub fn make_polygon(points: &[Vec2]) -> Result<Self> {
        Self::make_polygon_with(points, CollinearPolicy::Collapse)
    }

    pub fn make_polygon_with(points: &[Vec2], policy: CollinearPolicy) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::param("a polygon needs at least 3 points"));
        }
        if points.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(Error::param("polygon coordinates must be finite"));
        }
        let scale = points
            .iter()
            .zip(points.iter().cycle().skip(1))
            .map(|(a, b)| a.distance(*b))
            .sum::<f64>();
        let tol = TAU_GEOM * scale;
        let mut pts: Vec<Vec2> = points.to_vec();
        for i in 0..pts.len() {
            if pts[i].distance(pts[(i + 1) % pts.len()]) <= tol {
                return Err(Error::geometry(i, "repeated vertex"));
            }
        }
        loop {
            let n = pts.len();
            if n < 3 {
                return Err(Error::geometry(0, "polygon collapses to a segment"));
            }
            let hit = (0..n).find(|&i| {
                let (a, b, c) = (pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n]);
                let (u, v) = (b - a, c - b);
                (u.cross(v) / (u.norm() * v.norm())).abs() <= TAU_GEOM
            });
            let Some(i) = hit else { break };
            let (a, b, c) = (pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n]);
            if (b - a).dot(c - b) < 0.0 {
                return Err(Error::geometry(i, "polygon folds back on itself"));
            }
            match policy {
                CollinearPolicy::Reject => {
                    return Err(Error::geometry(i, "collinear consecutive vertices"));
                }
                CollinearPolicy::Collapse => {
                    pts.remove(i);
                }
            }
        }
        Self::polygon_unchecked(&pts)
    }

    fn polygon_unchecked(pts: &[Vec2]) -> Result<Self> {
        let n = pts.len();
        let edges = (0..n).map(|i| BoundaryEdge::segment(pts[i], pts[(i + 1) % n])).collect();
        Self::from_edges(edges)
    }

    pub fn edges(&self) -> &[BoundaryEdge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn perimeter(&self) -> f64 {
        self.perimeter
    }

    pub fn tolerances(&self) -> Tolerances {
        self.tol
    }

    /// Absolute length tolerance for this domain.
    pub fn tol_len(&self) -> f64 {
        self.tol.geom * self.perimeter
    }

    pub fn edge_length(&self, i: usize) -> f64 {
        self.cum[i + 1] - self.cum[i]
    }

    /// Arclength at which edge `i` starts.
    pub fn edge_start_s(&self, i: usize) -> f64 {
        self.cum[i]
    }

    pub fn junction(&self, j: usize) -> Vec2 {
        self.junctions[j]
    }

    pub fn junctions(&self) -> &[Vec2] {
        &self.junctions
    }

    /// Interior angle at every junction (π where the boundary is smooth).
    pub fn interior_angles(&self) -> &[f64] {
        &self.angles
    }

    /// Junction indices that are genuine corners.
    pub fn corners(&self) -> Vec<usize> {
        (0..self.angles.len()).filter(|&j| (self.angles[j] - PI).abs() > 1e-12).collect()
    }

    pub fn vertices(&self) -> Vec<Vec2> {
        self.corners().into_iter().map(|j| self.junctions[j]).collect()
    }

    /// Smallest corner angle together with its junction index.
    pub fn smallest_angle(&self) -> Option<(usize, f64)> {
        self.corners()
            .into_iter()
            .map(|j| (j, self.angles[j]))
            .min_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)))
    }

    pub fn is_polygon(&self) -> bool {
        self.edges.iter().all(|e| matches!(e, BoundaryEdge::Segment(_)))
    }

    /// Convex when every corner is at most π and every arc bulges outward.
    pub fn is_convex(&self) -> bool {
        self.angles.iter().all(|&a| a <= PI + 1e-12)
            && self.edges.iter().all(|e| match e {
                BoundaryEdge::Segment(_) => true,
                BoundaryEdge::Arc(a) => a.ccw(),
            })
    }

    pub fn is_disk(&self) -> bool {
        self.edges.len() == 1
    }

    /// `Some(n)` when the domain is a regular n-gon (any size or position).
    pub fn regular_sides(&self) -> Option<usize> {
        let n = self.edges.len();
        if n < 3 || !self.is_polygon() {
            return None;
        }
        let s = self.perimeter / n as f64;
        let interior = PI - TAU / n as f64;
        let ok = (0..n).all(|i| (self.edge_length(i) - s).abs() <= 1e-9 * s && (self.angles[i] - interior).abs() <= 1e-9);
        ok.then_some(n)
    }

    /// Order of the rotation group the enumeration may quotient by, and the
    /// arclength of one rotation step.
    pub fn rotation_symmetry(&self) -> Option<(usize, f64)> {
        if self.is_disk() {
            return None;
        }
        self.regular_sides().map(|n| (n, self.perimeter / n as f64))
    }

    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(Error::param("scale factor must be positive"));
        }
        let edges = self.edges.iter().map(|e| e.map_points(|p| p * lambda, lambda)).collect();
        Self::with_tolerances(edges, self.tol)
    }

    // ---- boundary points ----

    /// Boundary point at arclength `s` (taken modulo the perimeter).
    pub fn point(&self, s: f64) -> BoundaryPoint {
        let l = self.perimeter;
        let mut s = s.rem_euclid(l);
        if s >= l {
            s = 0.0;
        }
        let m = self.edges.len();
        let i = match self.cum[..m].binary_search_by(|c| c.total_cmp(&s)) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        let u = s - self.cum[i];
        let len = self.edge_length(i);
        let (junction, offset) = if u <= len / 2.0 { (i, u) } else { ((i + 1) % m, u - len) };
        let offset = if offset.abs() <= SNAP * l.max(1.0) { 0.0 } else { offset };
        BoundaryPoint { junction, offset }
    }

    /// Boundary point at signed arclength `offset` from junction `j`.
    pub fn anchored(&self, j: usize, offset: f64) -> BoundaryPoint {
        let m = self.edges.len();
        let j = j % m;
        let fwd = self.edge_length(j);
        let back = self.edge_length((j + m - 1) % m);
        if offset <= fwd / 2.0 && offset >= -back / 2.0 {
            BoundaryPoint { junction: j, offset }
        } else {
            self.point(self.cum[j] + offset)
        }
    }

    /// Global arclength of a boundary point, in `[0, L)`.
    pub fn s(&self, p: BoundaryPoint) -> f64 {
        let s = self.cum[p.junction] + p.offset;
        let l = self.perimeter;
        if s < 0.0 {
            s + l
        } else if s >= l {
            s - l
        } else {
            s
        }
    }

    /// Edge holding the point and the arclength along that edge.
    pub fn locate(&self, p: BoundaryPoint) -> (usize, f64) {
        let m = self.edges.len();
        if p.offset >= 0.0 {
            (p.junction, p.offset)
        } else {
            let e = (p.junction + m - 1) % m;
            (e, self.edge_length(e) + p.offset)
        }
    }

    fn local(&self, p: BoundaryPoint) -> Vec2 {
        let m = self.edges.len();
        if p.offset >= 0.0 {
            self.edges[p.junction].local_from_start(p.offset)
        } else {
            self.edges[(p.junction + m - 1) % m].local_from_end(-p.offset)
        }
    }

    pub fn point_at(&self, p: BoundaryPoint) -> Vec2 {
        self.junctions[p.junction] + self.local(p)
    }

    pub fn point_at_s(&self, s: f64) -> Vec2 {
        self.point_at(self.point(s))
    }

    /// `point_at(b) - point_at(a)`, exact to relative precision for two points
    /// near the same junction.
    pub fn displacement(&self, a: BoundaryPoint, b: BoundaryPoint) -> Vec2 {
        if a.junction == b.junction {
            self.local(b) - self.local(a)
        } else {
            self.point_at(b) - self.point_at(a)
        }
    }

    /// Counterclockwise arclength from `a` to `b`, in `[0, L)`.
    pub fn span(&self, a: BoundaryPoint, b: BoundaryPoint) -> f64 {
        let l = self.perimeter;
        let d = if a.junction == b.junction {
            b.offset - a.offset
        } else {
            (self.cum[b.junction] - self.cum[a.junction]) + (b.offset - a.offset)
        };
        let d = d.rem_euclid(l);
        if d >= l {
            // A point a hair before `a`: almost the whole loop, not zero.
            f64::from_bits(l.to_bits() - 1)
        } else {
            d
        }
    }

    /// Shorter boundary distance between two points.
    pub fn gap(&self, a: BoundaryPoint, b: BoundaryPoint) -> f64 {
        let l = self.perimeter;
        let d = if a.junction == b.junction {
            b.offset - a.offset
        } else {
            (self.cum[b.junction] - self.cum[a.junction]) + (b.offset - a.offset)
        };
        let d = d.abs() % l;
        d.min(l - d)
    }

    /// Exact for points on the same junction; otherwise allows rounding in
    /// the cumulative lengths.
    pub fn same_point(&self, a: BoundaryPoint, b: BoundaryPoint) -> bool {
        let g = self.gap(a, b);
        if a.junction == b.junction {
            g == 0.0
        } else {
            g <= 4.0 * f64::EPSILON * self.perimeter
        }
    }

    /// Unit tangent (direction of travel) at a boundary point that is not a corner.
    pub fn tangent(&self, p: BoundaryPoint) -> Vec2 {
        let (e, u) = self.locate(p);
        self.edges[e].tangent_at(u)
    }

    /// Nearest boundary point to `q`.
    pub fn project(&self, q: Vec2) -> BoundaryPoint {
        let mut best = (f64::INFINITY, 0.0);
        for (i, e) in self.edges.iter().enumerate() {
            let u = e.project(q);
            let d = (self.junctions[i] + e.local_from_start(u)).distance(q);
            if d < best.0 {
                best = (d, self.cum[i] + u);
            }
        }
        self.point(best.1)
    }

    /// Boundary pieces traversed counterclockwise from `a` to `b`.
    pub fn boundary_pieces(&self, a: BoundaryPoint, b: BoundaryPoint) -> Vec<BoundaryEdge> {
        let m = self.edges.len();
        let (ea, ua) = self.locate(a);
        let (eb, ub) = self.locate(b);
        let mut out = Vec::new();
        if ea == eb && ub >= ua && self.span(a, b) <= self.edge_length(ea) {
            if ub > ua {
                out.push(self.edges[ea].sub_edge(ua, ub));
            }
            return out;
        }
        let la = self.edge_length(ea);
        if ua < la {
            out.push(self.edges[ea].sub_edge(ua, la));
        }
        let mut e = (ea + 1) % m;
        while e != eb {
            out.push(self.edges[e]);
            e = (e + 1) % m;
        }
        if ub > 0.0 {
            out.push(self.edges[eb].sub_edge(0.0, ub));
        }
        out
    }

    // ---- chords ----

    /// Whether the open segment between two boundary points lies in the open
    /// interior of the domain.
    pub fn chord_is_interior(&self, a: BoundaryPoint, b: BoundaryPoint) -> Result<bool> {
        let gap = self.gap(a, b);
        let scale = if a.junction == b.junction {
            self.perimeter.min(a.offset.abs().max(b.offset.abs()))
        } else {
            self.perimeter
        };
        if gap < self.tol.geom * scale || gap == 0.0 {
            return Err(Error::param("degenerate chord: endpoints coincide"));
        }
        Ok(self.chord_ok(a, b))
    }

    fn chord_ok(&self, a: BoundaryPoint, b: BoundaryPoint) -> bool {
        let d = self.displacement(a, b);
        let dn = d.norm();
        if dn == 0.0 || !dn.is_finite() {
            return false;
        }
        let dir = d * (1.0 / dn);
        let ha = self.endpoint_edges(a, dn);
        let hb = self.endpoint_edges(b, dn);
        if !self.leaves_inward(a, &ha, dir) || !self.leaves_inward(b, &hb, -dir) {
            return false;
        }
        let pa = self.point_at(a);
        let pb = pa + d;
        let touch = 1e-12 * self.perimeter;
        for (i, e) in self.edges.iter().enumerate() {
            let holds_a = ha.contains(i);
            let holds_b = hb.contains(i);
            match e {
                BoundaryEdge::Segment(s) => {
                    if holds_a || holds_b {
                        continue;
                    }
                    if segment_hits(pa, pb, dir, dn, s.start, s.end, touch) {
                        return false;
                    }
                }
                BoundaryEdge::Arc(arc) => {
                    let ang_tol = touch / arc.radius;
                    if holds_a || holds_b {
                        // The only other meeting point of the chord line with the circle.
                        let (base, base_dir, other) = if holds_a { (pa, dir, holds_b) } else { (pb, -dir, holds_a) };
                        let lam = -2.0 * (base - arc.center).dot(base_dir);
                        if other && (lam - dn).abs() <= 1e-9 * dn {
                            continue;
                        }
                        if lam > 1e-9 * dn && lam < dn * (1.0 - 1e-9) {
                            let q = base + base_dir * lam;
                            if arc.contains_angle((q - arc.center).angle(), ang_tol) {
                                return false;
                            }
                        }
                        continue;
                    }
                    for lam in line_circle(pa, dir, arc.center, arc.radius) {
                        if lam >= -touch && lam <= dn + touch {
                            let q = pa + dir * lam;
                            if arc.contains_angle((q - arc.center).angle(), ang_tol) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Edges that contain a chord endpoint. A point negligibly close to a
    /// junction (relative to the chord length) counts as the junction itself.
    fn endpoint_edges(&self, p: BoundaryPoint, chord: f64) -> EndpointEdges {
        let m = self.edges.len();
        let prev = (p.junction + m - 1) % m;
        if p.offset == 0.0 || p.offset.abs() < 1e-9 * chord {
            EndpointEdges::Junction(prev, p.junction)
        } else if p.offset > 0.0 {
            EndpointEdges::Edge(p.junction)
        } else {
            EndpointEdges::Edge(prev)
        }
    }

    fn leaves_inward(&self, p: BoundaryPoint, h: &EndpointEdges, dir: Vec2) -> bool {
        match *h {
            EndpointEdges::Edge(_) => self.tangent(p).cross(dir) > ANGLE_EPS,
            EndpointEdges::Junction(_, next) => {
                let tout = self.edges[next].start_tangent();
                let phi = signed_angle(tout, dir).rem_euclid(TAU);
                phi > ANGLE_EPS && phi < self.angles[p.junction] - ANGLE_EPS
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum EndpointEdges {
    Edge(usize),
    Junction(usize, usize),
}

impl EndpointEdges {
    fn contains(&self, i: usize) -> bool {
        match *self {
            EndpointEdges::Edge(e) => e == i,
            EndpointEdges::Junction(a, b) => a == i || b == i,
        }
    }
}

/// Whether chord `[pa, pb]` touches or crosses segment `[q0, q1]`.
fn segment_hits(pa: Vec2, pb: Vec2, dir: Vec2, dn: f64, q0: Vec2, q1: Vec2, tol: f64) -> bool {
    let o1 = dir.cross(q0 - pa);
    let o2 = dir.cross(q1 - pa);
    if o1.abs() <= tol && o2.abs() <= tol {
        let (t0, t1) = ((q0 - pa).dot(dir), (q1 - pa).dot(dir));
        return t0.max(t1) >= -tol && t0.min(t1) <= dn + tol;
    }
    if (o1 > tol && o2 > tol) || (o1 < -tol && o2 < -tol) {
        return false;
    }
    let e = q1 - q0;
    let en = e.norm();
    let edir = e * (1.0 / en);
    let o3 = edir.cross(pa - q0);
    let o4 = edir.cross(pb - q0);
    !((o3 > tol && o4 > tol) || (o3 < -tol && o4 < -tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> PlanarDomain {
        PlanarDomain::make_polygon(&[
            Vec2::new(0.0, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(0.0, 1.0),
        ])
        .unwrap()
    }

    fn l_shape() -> PlanarDomain {
        PlanarDomain::make_polygon(&[
            Vec2::new(0.0, 0.0),
            Vec2::new(2.0, 0.0),
            Vec2::new(2.0, 1.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(1.0, 2.0),
            Vec2::new(0.0, 2.0),
        ])
        .unwrap()
    }

    #[test]
    fn regular_polygon_shape() {
        let d4 = PlanarDomain::make_regular_polygon(4).unwrap();
        assert!((d4.edge_length(0) - 2f64.sqrt()).abs() < 1e-15);
        for &a in d4.interior_angles() {
            assert!((a - PI / 2.0).abs() < 1e-12);
        }
        let d6 = PlanarDomain::make_regular_polygon(6).unwrap();
        assert!((d6.perimeter() - 6.0).abs() < 1e-12);
        assert_eq!(d6.regular_sides(), Some(6));
        let d3 = PlanarDomain::make_regular_polygon(3).unwrap();
        assert!(((d3.interior_angles()[0] / 2.0).sin() - (PI / 3.0).cos()).abs() < 1e-12);
        assert!(PlanarDomain::make_regular_polygon(2).is_err());
    }

    #[test]
    fn disk_parametrization() {
        assert!(PlanarDomain::make_disk(0.0).is_err());
        let d = PlanarDomain::make_disk(1.0).unwrap();
        assert!((d.perimeter() - TAU).abs() < 1e-15);
        assert!(d.corners().is_empty());
        assert!(d.point_at_s(0.0).distance(Vec2::new(1.0, 0.0)) < 1e-15);
        assert!(d.point_at_s(PI).distance(Vec2::new(-1.0, 0.0)) < 1e-15);
        let d2 = PlanarDomain::make_disk(2.0).unwrap();
        assert!((d2.perimeter() - 4.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn square_points_and_orientation() {
        let sq = square();
        assert!(sq.point_at_s(1.5).distance(Vec2::new(1.0, 0.5)) < 1e-15);
        // Clockwise input keeps its start point and is traversed the other way.
        let cw = PlanarDomain::make_polygon(&[
            Vec2::new(0.0, 0.0),
            Vec2::new(0.0, 1.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(1.0, 0.0),
        ])
        .unwrap();
        assert!(cw.point_at_s(1.5).distance(Vec2::new(1.0, 0.5)) < 1e-15);
        assert!(cw.point_at_s(4.0).distance(Vec2::new(0.0, 0.0)) < 1e-15);
    }

    #[test]
    fn thin_rectangle_perimeter() {
        let r = PlanarDomain::make_polygon(&[
            Vec2::new(-0.01, -4.0),
            Vec2::new(0.01, -4.0),
            Vec2::new(0.01, 4.0),
            Vec2::new(-0.01, 4.0),
        ])
        .unwrap();
        assert!((r.perimeter() - 16.04).abs() < 1e-12);
    }

    #[test]
    fn l_shape_has_one_reflex_corner() {
        let l = l_shape();
        let reflex: Vec<f64> = l.interior_angles().iter().copied().filter(|&a| a > PI).collect();
        assert_eq!(reflex.len(), 1);
        assert!((reflex[0] - 1.5 * PI).abs() < 1e-12);
        let sum: f64 = l.interior_angles().iter().sum();
        assert!((sum - 4.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn collinear_handling() {
        let pts = [
            Vec2::new(0.0, 0.0),
            Vec2::new(0.5, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(0.0, 1.0),
        ];
        assert_eq!(PlanarDomain::make_polygon(&pts).unwrap().edge_count(), 4);
        assert!(matches!(
            PlanarDomain::make_polygon_with(&pts, CollinearPolicy::Reject),
            Err(Error::InvalidGeometry { edge: 1, .. })
        ));
    }

    #[test]
    fn bowtie_rejected() {
        let r = PlanarDomain::make_polygon(&[
            Vec2::new(0.0, 0.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(0.0, 1.0),
        ]);
        assert!(matches!(r, Err(Error::InvalidGeometry { .. })));
    }

    #[test]
    fn open_chain_reports_edge() {
        let edges = vec![
            BoundaryEdge::segment(Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0)),
            BoundaryEdge::segment(Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)),
            BoundaryEdge::segment(Vec2::new(0.0, 1.0), Vec2::new(0.0, 0.1)),
        ];
        assert!(matches!(PlanarDomain::from_edges(edges), Err(Error::InvalidGeometry { edge: 2, .. })));
    }

    #[test]
    fn chord_tests() {
        let sq = square();
        let p = |s| sq.point(s);
        assert!(sq.chord_is_interior(p(0.5), p(2.5)).unwrap());
        assert!(!sq.chord_is_interior(p(0.2), p(0.8)).unwrap());
        // Vertex to vertex across the diagonal, and along an edge.
        assert!(sq.chord_is_interior(p(0.0), p(2.0)).unwrap());
        assert!(!sq.chord_is_interior(p(0.0), p(1.0)).unwrap());
        assert!(sq.chord_is_interior(p(0.0), p(1.5)).unwrap());
        assert!(!sq.chord_is_interior(p(0.0), p(0.5)).unwrap());
        assert!(!sq.chord_is_interior(p(3.5), p(0.0)).unwrap());
        assert!(sq.chord_is_interior(p(0.3), p(1.5)).unwrap());
        assert!(sq.chord_is_interior(p(0.5), p(0.5)).is_err());

        let l = l_shape();
        // From the bottom edge to the top-left edge passes through the notch.
        let a = l.point(1.0);
        let b = l.point_at_s(0.0);
        assert!(b.distance(Vec2::ZERO) < 1e-15);
        let top_right = l.project(Vec2::new(0.5, 2.0));
        let right_low = l.project(Vec2::new(2.0, 0.5));
        assert!(!l.chord_is_interior(right_low, top_right).unwrap());
        assert!(l.chord_is_interior(a, top_right).unwrap());
        // Through the reflex vertex exactly.
        let rv = l.project(Vec2::new(2.0, 0.0));
        let tl = l.project(Vec2::new(0.0, 2.0));
        assert!(!l.chord_is_interior(rv, tl).unwrap());
    }

    #[test]
    fn disk_chords_interior() {
        let d = PlanarDomain::make_disk(1.0).unwrap();
        for &(x, y) in &[(0.0, 0.1), (0.0, 3.0), (1.0, 5.0), (6.0, 0.2)] {
            assert!(d.chord_is_interior(d.point(x), d.point(y)).unwrap());
            assert!(d.chord_is_interior(d.point(y), d.point(x)).unwrap());
        }
    }

    #[test]
    fn tiny_corner_chords() {
        let d4 = PlanarDomain::make_regular_polygon(4).unwrap();
        for &t in &[1e-3, 1e-100, 1e-290] {
            let a = d4.anchored(1, -t);
            let b = d4.anchored(1, t);
            assert!(d4.chord_is_interior(a, b).unwrap(), "t={t}");
            let chord = d4.displacement(a, b).norm();
            assert!((chord / t - 2.0 * (PI / 4.0).sin()).abs() < 1e-12);
        }
    }

    #[test]
    fn concave_arc_blocks_chords() {
        // Square whose top edge bows inward.
        let c = Vec2::new(0.5, 1.5);
        let r = (0.5f64 * 0.5 + 0.5 * 0.5).sqrt();
        let a0 = (Vec2::new(1.0, 1.0) - c).angle();
        let a1 = (Vec2::new(0.0, 1.0) - c).angle();
        let arc = Arc::new(c, r, a0, a1, false).unwrap();
        let dom = PlanarDomain::from_edges(vec![
            BoundaryEdge::segment(Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0)),
            BoundaryEdge::segment(Vec2::new(1.0, 0.0), Vec2::new(1.0, 1.0)),
            BoundaryEdge::Arc(arc),
            BoundaryEdge::segment(Vec2::new(0.0, 1.0), Vec2::new(0.0, 0.0)),
        ])
        .unwrap();
        assert!(!dom.is_convex());
        let left = dom.project(Vec2::new(0.0, 0.95));
        let right = dom.project(Vec2::new(1.0, 0.95));
        assert!(!dom.chord_is_interior(left, right).unwrap());
        let left = dom.project(Vec2::new(0.0, 0.5));
        let right = dom.project(Vec2::new(1.0, 0.5));
        assert!(dom.chord_is_interior(left, right).unwrap());
    }

    #[test]
    fn boundary_pieces_cover_span() {
        let d6 = PlanarDomain::make_regular_polygon(6).unwrap();
        for &(x, y) in &[(0.2, 0.7), (0.7, 0.2), (5.5, 1.5), (1.0, 4.0)] {
            let (a, b) = (d6.point(x), d6.point(y));
            let total: f64 = d6.boundary_pieces(a, b).iter().map(|e| e.length()).sum();
            assert!((total - d6.span(a, b)).abs() < 1e-12);
        }
    }

    #[test]
    fn round_trip_and_anchoring() {
        let d5 = PlanarDomain::make_regular_polygon(5).unwrap();
        for i in 0..50 {
            let s = d5.perimeter() * i as f64 / 50.0 + 0.013;
            let p = d5.point(s);
            assert!((d5.s(p) - s).abs() < 1e-12);
            let q = d5.project(d5.point_at(p));
            assert!((d5.s(q) - s).abs() < 1e-9);
        }
        let p = d5.anchored(2, -1e-30);
        assert_eq!(p.junction, 2);
        assert!((d5.s(p) - 2.0 * d5.edge_length(0)).abs() < 1e-15);
    }
}
