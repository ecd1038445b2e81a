//! Subdomains cut off by chords and the k-tuples built from them.

mod json;
mod validate;

pub use json::{parse_tuple, tuple_to_json, PointJson, RegionJson};
pub use validate::{validate_region, validate_tuple, Strictness, Violation, ViolationKind};

use crate::geometry::{BoundaryEdge, BoundaryPoint, PlanarDomain};

/// Region cut off by the chord `b → a`; its exterior boundary is the
/// counterclockwise boundary arc from `a` to `b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cap {
    pub a: BoundaryPoint,
    pub b: BoundaryPoint,
}

/// The part of `outer` that is not in `inner`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Strip {
    pub inner: Cap,
    pub outer: Cap,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Region {
    Cap(Cap),
    Strip(Strip),
}

impl Cap {
    pub fn new(a: BoundaryPoint, b: BoundaryPoint) -> Self {
        Cap { a, b }
    }

    pub fn from_s(d: &PlanarDomain, a: f64, b: f64) -> Self {
        Cap::new(d.point(a), d.point(b))
    }

    pub fn span(&self, d: &PlanarDomain) -> f64 {
        d.span(self.a, self.b)
    }

    pub fn chord(&self, d: &PlanarDomain) -> f64 {
        d.displacement(self.a, self.b).norm()
    }

    pub fn area(&self, d: &PlanarDomain) -> f64 {
        let origin = d.point_at(self.a);
        let shifted = |e: &BoundaryEdge| e.map_points(|p| p - origin, 1.0).area_term();
        // The closing chord ends at the origin and adds nothing.
        d.boundary_pieces(self.a, self.b).iter().map(shifted).sum()
    }
}

impl Region {
    pub fn cap(a: BoundaryPoint, b: BoundaryPoint) -> Self {
        Region::Cap(Cap::new(a, b))
    }

    pub fn strip(inner: Cap, outer: Cap) -> Self {
        Region::Strip(Strip { inner, outer })
    }

    /// |Σ^∂|
    pub fn exterior_length(&self, d: &PlanarDomain) -> f64 {
        match self {
            Region::Cap(c) => c.span(d),
            Region::Strip(s) => d.span(s.outer.a, s.inner.a) + d.span(s.inner.b, s.outer.b),
        }
    }

    /// |Σ°|
    pub fn interior_length(&self, d: &PlanarDomain) -> f64 {
        match self {
            Region::Cap(c) => c.chord(d),
            Region::Strip(s) => s.inner.chord(d) + s.outer.chord(d),
        }
    }

    /// η^∂ = |Σ°| / |Σ^∂|, infinite when the exterior boundary is empty.
    pub fn eta(&self, d: &PlanarDomain) -> f64 {
        let ext = self.exterior_length(d);
        if ext > 0.0 {
            self.interior_length(d) / ext
        } else {
            f64::INFINITY
        }
    }

    pub fn area(&self, d: &PlanarDomain) -> f64 {
        match self {
            Region::Cap(c) => c.area(d),
            Region::Strip(s) => s.outer.area(d) - s.inner.area(d),
        }
    }

    pub fn chords(&self) -> Vec<(BoundaryPoint, BoundaryPoint)> {
        match self {
            Region::Cap(c) => vec![(c.a, c.b)],
            Region::Strip(s) => vec![(s.inner.a, s.inner.b), (s.outer.a, s.outer.b)],
        }
    }

    /// Γ: the chord endpoints.
    pub fn junction_points(&self) -> Vec<BoundaryPoint> {
        self.chords().into_iter().flat_map(|(a, b)| [a, b]).collect()
    }

    /// Open boundary intervals making up Σ^∂, as counterclockwise (start, end)
    /// pairs. Empty pieces of a strip are dropped.
    pub fn exterior_intervals(&self, d: &PlanarDomain) -> Vec<(BoundaryPoint, BoundaryPoint)> {
        match self {
            Region::Cap(c) => vec![(c.a, c.b)],
            Region::Strip(s) => [(s.outer.a, s.inner.a), (s.inner.b, s.outer.b)]
                .into_iter()
                .filter(|&(p, q)| !d.same_point(p, q))
                .collect(),
        }
    }

    pub fn exterior_pieces(&self, d: &PlanarDomain) -> Vec<BoundaryEdge> {
        self.exterior_intervals(d)
            .into_iter()
            .flat_map(|(p, q)| d.boundary_pieces(p, q))
            .collect()
    }
}

/// An ordered k-tuple of regions in one domain.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TupleCandidate {
    pub regions: Vec<Region>,
}

impl TupleCandidate {
    pub fn new(regions: Vec<Region>) -> Self {
        TupleCandidate { regions }
    }

    pub fn caps(d: &PlanarDomain, cuts: &[(f64, f64)]) -> Self {
        TupleCandidate::new(cuts.iter().map(|&(a, b)| Region::Cap(Cap::from_s(d, a, b))).collect())
    }

    pub fn k(&self) -> usize {
        self.regions.len()
    }

    pub fn etas(&self, d: &PlanarDomain) -> Vec<f64> {
        self.regions.iter().map(|r| r.eta(d)).collect()
    }

    /// max_j η^∂(Ω_j); infinite for an empty tuple.
    pub fn max_eta(&self, d: &PlanarDomain) -> f64 {
        if self.regions.is_empty() {
            return f64::INFINITY;
        }
        self.regions.iter().map(|r| r.eta(d)).fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn validate(&self, d: &PlanarDomain) -> Result<(), Violation> {
        validate_tuple(d, self, Strictness::Lenient)
    }
}

/// η^∂ of a cap given directly by two arclengths.
pub fn cap_eta(d: &PlanarDomain, a: f64, b: f64) -> f64 {
    Region::Cap(Cap::from_s(d, a, b)).eta(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Vec2;
    use std::f64::consts::PI;

    fn disk() -> PlanarDomain {
        PlanarDomain::make_disk(1.0).unwrap()
    }

    #[test]
    fn disk_caps() {
        let d = disk();
        let third = Region::Cap(Cap::from_s(&d, 0.0, 2.0 * PI / 3.0));
        assert!((third.exterior_length(&d) - 2.0 * PI / 3.0).abs() < 1e-15);
        // Circular segment area, computed independently.
        let alpha = 2.0 * PI / 3.0;
        assert!((third.area(&d) - (alpha - alpha.sin()) / 2.0).abs() < 1e-14);
        let half = Region::Cap(Cap::from_s(&d, 0.0, PI));
        assert!((half.interior_length(&d) - 2.0).abs() < 1e-15);
        assert!((half.area(&d) - PI / 2.0).abs() < 1e-14);
        assert!((half.eta(&d) - 2.0 / PI).abs() < 1e-15);
    }

    #[test]
    fn square_caps() {
        let sq = PlanarDomain::make_polygon(&[
            Vec2::new(0.0, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(0.0, 1.0),
        ])
        .unwrap();
        let half = Region::Cap(Cap::from_s(&sq, 0.5, 2.5));
        assert!((half.exterior_length(&sq) - 2.0).abs() < 1e-15);
        assert!((half.area(&sq) - 0.5).abs() < 1e-15);
        let corner = Region::Cap(Cap::from_s(&sq, 0.0, 2.0));
        assert!((corner.area(&sq) - 0.5).abs() < 1e-15);
        // Corner at (1,0) with unit legs is the triangle below the diagonal.
        let tri = Region::Cap(Cap::new(sq.anchored(1, -1.0), sq.anchored(1, 1.0)));
        assert!((tri.area(&sq) - 0.5).abs() < 1e-15);
        assert!((tri.eta(&sq) - (PI / 4.0).sin()).abs() < 1e-15);
    }

    #[test]
    fn hexagon_corner_strip() {
        let d6 = PlanarDomain::make_regular_polygon(6).unwrap();
        let scale = 0.25;
        let inner = Cap::new(d6.anchored(1, -scale), d6.anchored(1, scale));
        let outer = Cap::new(d6.anchored(1, -3.0 * scale), d6.anchored(1, 3.0 * scale));
        let strip = Region::strip(inner, outer);
        assert!((strip.exterior_length(&d6) - 4.0 * scale).abs() < 1e-15);
        let theta: f64 = 2.0 * PI / 3.0;
        let expect = (theta / 2.0).sin() * 4.0 / 2.0;
        assert!((strip.eta(&d6) - expect).abs() < 1e-14);
        assert!((strip.interior_length(&d6) - inner.chord(&d6) - outer.chord(&d6)).abs() < 1e-15);
    }

    #[test]
    fn square_corner_strip_eta() {
        // θ = π/2, legs 1 and 3.
        let sq = PlanarDomain::make_polygon(&[
            Vec2::new(0.0, 0.0),
            Vec2::new(4.0, 0.0),
            Vec2::new(4.0, 4.0),
            Vec2::new(0.0, 4.0),
        ])
        .unwrap();
        let strip = Region::strip(
            Cap::new(sq.anchored(1, -1.0), sq.anchored(1, 1.0)),
            Cap::new(sq.anchored(1, -3.0), sq.anchored(1, 3.0)),
        );
        let by_coords = (2f64.sqrt() + 3.0 * 2f64.sqrt()) / 4.0;
        assert!((strip.eta(&sq) - by_coords).abs() < 1e-14);
        assert!((strip.eta(&sq) - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn empty_exterior_is_infinite() {
        let d = disk();
        let p = d.point(1.0);
        assert!(Region::cap(p, p).eta(&d).is_infinite());
        assert!(TupleCandidate::default().max_eta(&d).is_infinite());
    }
}
