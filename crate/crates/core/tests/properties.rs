use std::f64::consts::PI;

use escobar::constructions::{corner_tuple, disk_equal_arc_tuple, inscribed_kgon_tuple, CornerScheduleParams};
use escobar::exact::{ik_disk, ik_regular_polygon, polygon_upper_bound};
use escobar::geometry::json::{domain_to_json, parse_domain};
use escobar::geometry::{PlanarDomain, Vec2};
use escobar::regions::{parse_tuple, tuple_to_json, Cap, Region, TupleCandidate};
use escobar::search::{enumerate_caps, refine_caps, SearchConfig};
use escobar::symmetry::{centered_cap, symmetrize};
use proptest::prelude::*;

/// Star-shaped polygon: sorted angles, radii in [0.5, 1.5].
fn star_polygon() -> impl Strategy<Value = PlanarDomain> {
    (3usize..=8)
        .prop_flat_map(|n| (prop::collection::vec(0.0..1.0f64, n), prop::collection::vec(0.5..1.5f64, n)))
        .prop_filter_map("degenerate polygon", |(gaps, radii)| {
            let n = gaps.len();
            // Each angular gap at least half the even spacing keeps the vertices apart.
            let w: Vec<f64> = gaps.iter().map(|g| 0.5 + g).collect();
            let total: f64 = w.iter().sum();
            let mut phi = 0.0;
            let pts: Vec<Vec2> = (0..n)
                .map(|i| {
                    let p = Vec2::from_angle(phi).scale(radii[i]);
                    phi += 2.0 * PI * w[i] / total;
                    p
                })
                .collect();
            PlanarDomain::make_polygon(&pts).ok()
        })
}

fn regular() -> impl Strategy<Value = PlanarDomain> {
    (3usize..=12).prop_map(|n| PlanarDomain::make_regular_polygon(n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn perimeter_is_sum_of_edges(d in star_polygon()) {
        let sum: f64 = d.edges().iter().map(|e| e.length()).sum();
        prop_assert!((sum - d.perimeter()).abs() <= 1e-12 * d.perimeter());
        prop_assert!(d.point_at_s(d.perimeter()).distance(d.point_at_s(0.0)) <= 1e-9 * d.perimeter());
        let angles: f64 = d.interior_angles().iter().sum();
        prop_assert!((angles - (d.edge_count() as f64 - 2.0) * PI).abs() < 1e-9);
    }

    #[test]
    fn arclength_round_trip(d in star_polygon(), t in 0.0..1.0f64) {
        let s = t * d.perimeter();
        let back = d.s(d.point(s));
        let err = (back - s).abs().min(d.perimeter() - (back - s).abs());
        prop_assert!(err <= 1e-9 * d.perimeter());
        let q = d.point_at_s(s);
        prop_assert!(d.point_at(d.project(q)).distance(q) <= 1e-9 * d.perimeter());
    }

    #[test]
    fn chord_test_is_symmetric(d in star_polygon(), a in 0.0..1.0f64, b in 0.0..1.0f64) {
        let l = d.perimeter();
        let (pa, pb) = (d.point(a * l), d.point(b * l));
        let ab = d.chord_is_interior(pa, pb);
        let ba = d.chord_is_interior(pb, pa);
        prop_assert_eq!(ab.is_ok(), ba.is_ok());
        if let (Ok(x), Ok(y)) = (ab, ba) {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn scaling(d in star_polygon(), lambda in 0.01..100.0f64, a in 0.0..1.0f64, b in 0.0..1.0f64) {
        let ds = d.scaled(lambda).unwrap();
        prop_assert!((ds.perimeter() - lambda * d.perimeter()).abs() <= 1e-12 * ds.perimeter());
        for (x, y) in d.interior_angles().iter().zip(ds.interior_angles()) {
            prop_assert!((x - y).abs() < 1e-12);
        }
        let c = Cap::from_s(&d, a * d.perimeter(), b * d.perimeter());
        let cs = Cap::from_s(&ds, a * ds.perimeter(), b * ds.perimeter());
        prop_assert!((cs.chord(&ds) - lambda * c.chord(&d)).abs() <= 1e-12 * cs.chord(&ds).max(1e-300));
        let (r, rs) = (Region::Cap(c), Region::Cap(cs));
        if d.chord_is_interior(c.a, c.b).unwrap_or(false) {
            prop_assert!((r.eta(&d) - rs.eta(&ds)).abs() < 1e-12 * r.eta(&d).max(1.0));
        }
    }

    #[test]
    fn span_is_additive(d in star_polygon(), a in 0.0..1.0f64, b in 0.0..1.0f64) {
        let l = d.perimeter();
        let (pa, pb) = (d.point(a * l), d.point(b * l));
        prop_assume!(!d.same_point(pa, pb));
        prop_assert!((d.span(pa, pb) + d.span(pb, pa) - l).abs() <= 1e-12 * l);
        let pieces: f64 = d.boundary_pieces(pa, pb).iter().map(|e| e.length()).sum();
        prop_assert!((pieces - d.span(pa, pb)).abs() <= 1e-9 * l);
    }

    #[test]
    fn disk_cap_ratio(alpha in 1e-3..PI) {
        let d = PlanarDomain::make_disk(1.0).unwrap();
        let r = Region::cap(d.point(0.3), d.point(0.3 + alpha));
        prop_assert!((r.eta(&d) - 2.0 * (alpha / 2.0).sin() / alpha).abs() < 1e-12);
        let wider = Region::cap(d.point(0.3), d.point(0.3 + alpha * 1.01));
        prop_assert!(wider.eta(&d) < r.eta(&d));
    }

    #[test]
    fn tuple_areas_fit(d in regular(), k in 2usize..6) {
        let n = d.regular_sides().unwrap();
        let t = escobar::constructions::equal_boundary_tuple(&d, k, None);
        if let Ok(t) = t {
            let total: f64 = t.regions.iter().map(|r| r.area(&d)).sum();
            let full = 0.5 * n as f64 * (2.0 * PI / n as f64).sin();
            prop_assert!(t.regions.iter().all(|r| r.area(&d) >= 0.0));
            prop_assert!(total <= full + 1e-12);
        }
    }

    #[test]
    fn domain_json_round_trip(d in star_polygon()) {
        let back = parse_domain(&domain_to_json(&d)).unwrap();
        prop_assert_eq!(back.edge_count(), d.edge_count());
        prop_assert!((back.perimeter() - d.perimeter()).abs() <= 1e-12 * d.perimeter());
    }

    #[test]
    fn symmetrization_preserves_length(n in 3usize..=10, c in 0.0..1.0f64, f in 0.01..0.5f64) {
        let d = PlanarDomain::make_regular_polygon(n).unwrap();
        let base = centered_cap(&d, c * d.perimeter(), f * d.perimeter());
        let s = symmetrize(&d, &base).unwrap();
        for cap in [s.base, s.type_i, s.type_ii] {
            prop_assert!((cap.span(&d) - s.length).abs() < 1e-12);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn corner_tuple_invariants(n in 3usize..=8, k in 2usize..=5, e in 3i32..=12) {
        let d = PlanarDomain::make_regular_polygon(n).unwrap();
        let t = corner_tuple(&d, CornerScheduleParams::new(0, k, 10f64.powi(-e))).unwrap();
        prop_assert!(t.validate(&d).is_ok());
        let etas = t.etas(&d);
        prop_assert!(etas[1..].iter().all(|&x| x > etas[0]));
        prop_assert!(t.max_eta(&d) >= (PI / n as f64).cos() - 1e-12);
    }

    #[test]
    fn strip_tends_to_cap(e in 4i32..=200) {
        let d = PlanarDomain::make_regular_polygon(5).unwrap();
        let t = 10f64.powi(-e);
        let (ia, ib) = escobar::constructions::corner_legs(&d, 0, t).unwrap();
        let (oa, ob) = escobar::constructions::corner_legs(&d, 0, 0.3).unwrap();
        let strip = Region::strip(Cap::new(ia, ib), Cap::new(oa, ob));
        let cap = Region::cap(oa, ob);
        prop_assert!((strip.eta(&d) - cap.eta(&d)).abs() <= 10.0 * t);
    }

    #[test]
    fn disk_equal_arcs_offset_invariant(k in 2usize..10, off in 0.0..10.0f64) {
        let d = PlanarDomain::make_disk(1.0).unwrap();
        let t = disk_equal_arc_tuple(&d, k, off).unwrap();
        prop_assert!((t.max_eta(&d) - ik_disk(k).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn tuple_json_round_trip(n in 3usize..=8, k in 1usize..=4) {
        let d = PlanarDomain::make_regular_polygon(n).unwrap();
        let t = corner_tuple(&d, CornerScheduleParams::new(1, k, 1e-9)).unwrap();
        let text = serde_json::to_string(&tuple_to_json(&d, &t)).unwrap();
        let back = parse_tuple(&d, &text).unwrap();
        prop_assert_eq!(back, t);
    }
}

#[test]
fn closed_form_properties() {
    let mut last = 0.0;
    for k in 1..=200 {
        let v = ik_disk(k).unwrap();
        assert!(v < 1.0 && v > last || k == 1);
        last = v;
    }
    for n in 3..=20 {
        let at_n = ik_regular_polygon(n, n).unwrap().value;
        for k in n..n + 5 {
            assert_eq!(ik_regular_polygon(n, k).unwrap().value, at_n);
        }
        let d = PlanarDomain::make_regular_polygon(n).unwrap();
        assert!((polygon_upper_bound(&d).unwrap() - at_n).abs() < 1e-12);
        for a in d.interior_angles() {
            assert!((a - (PI - 2.0 * PI / n as f64)).abs() < 1e-12);
        }
        assert!(at_n <= ik_disk(n).unwrap());
    }
}

#[test]
fn refinement_never_loses_to_enumeration() {
    let cfg = SearchConfig::default();
    for (n, k, m) in [(5, 2, 20), (7, 3, 42), (4, 3, 24)] {
        let d = PlanarDomain::make_regular_polygon(n).unwrap();
        let e = enumerate_caps(&d, k, m, &cfg).unwrap();
        let r = refine_caps(&d, k, &e.witness, &cfg).unwrap();
        assert!(r.value <= e.value);
        assert!(r.witness.validate(&d).is_ok());
    }
}

#[test]
fn inscribed_regions_are_congruent() {
    let d = PlanarDomain::make_regular_polygon(12).unwrap();
    let t: TupleCandidate = inscribed_kgon_tuple(&d, 4).unwrap();
    let first = (t.regions[0].interior_length(&d), t.regions[0].exterior_length(&d));
    for r in &t.regions {
        assert!((r.interior_length(&d) - first.0).abs() < 1e-12);
        assert!((r.exterior_length(&d) - first.1).abs() < 1e-12);
    }
}
