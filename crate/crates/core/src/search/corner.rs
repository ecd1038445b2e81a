use std::f64::consts::PI;

use super::golden::golden_min;
use super::{BoundReport, Method, SearchConfig};
use crate::constructions::{corner_legs, corner_tuple, corner_tuple_from_legs, CornerScheduleParams};
use crate::error::{Error, Result};
use crate::geometry::{BoundaryEdge, PlanarDomain};
use crate::regions::TupleCandidate;

/// Ratio between the smallest and the largest leg.
const DEPTH: f64 = 1e-290;
const GOLDEN_ITERS: usize = 80;

/// Longest Euclidean distance from an end of `e` that still lands on `e`.
fn edge_reach(e: &BoundaryEdge) -> f64 {
    match e {
        BoundaryEdge::Segment(_) => e.length(),
        BoundaryEdge::Arc(a) => {
            let half = (e.length() / (2.0 * a.radius)).min(PI / 2.0);
            2.0 * a.radius * half.sin()
        }
    }
}

fn reach(d: &PlanarDomain, j: usize) -> f64 {
    let m = d.edge_count();
    edge_reach(&d.edges()[j]).min(edge_reach(&d.edges()[(j + m - 1) % m])) * (1.0 - 1e-9)
}

fn geometric_legs(k: usize, t_min: f64, t_max: f64) -> Vec<f64> {
    if k == 1 {
        return vec![t_max];
    }
    let r = (t_max / t_min).ln();
    (0..k).map(|i| t_min * (r * i as f64 / (k - 1) as f64).exp()).collect()
}

/// max η of the nested corner tuple, or ∞ if a chord leaves the domain.
fn quick_value(d: &PlanarDomain, j: usize, legs: &[f64]) -> f64 {
    for &t in legs {
        match corner_legs(d, j, t) {
            Some((a, b)) if matches!(d.chord_is_interior(a, b), Ok(true)) => {}
            _ => return f64::INFINITY,
        }
    }
    corner_tuple_from_legs(d, j, legs).map_or(f64::INFINITY, |t| t.max_eta(d))
}

/// Best geometric leg sequence at one corner.
fn geometric_at(d: &PlanarDomain, j: usize, k: usize, evals: &mut u64) -> Option<TupleCandidate> {
    let r = reach(d, j);
    let t_min = DEPTH * r;
    let lo = if k == 1 { t_min.ln() } else { (t_min * 1e3).ln() };
    let f = |u: f64| quick_value(d, j, &geometric_legs(k, t_min, u.exp()));
    let (u, _) = golden_min(
        |u| {
            *evals += 1;
            f(u)
        },
        lo,
        r.ln(),
        GOLDEN_ITERS,
    );
    // Shrink towards the corner until the full check passes.
    let mut t_max = u.exp();
    for _ in 0..60 {
        if let Some(t) = corner_tuple_from_legs(d, j, &geometric_legs(k, t_min, t_max)) {
            if t.validate(d).is_ok() {
                return Some(t);
            }
        }
        t_max *= 0.5;
        if t_max <= t_min {
            break;
        }
    }
    None
}

/// Best ε for the δ-schedule at one corner.
fn schedule_at(d: &PlanarDomain, j: usize, k: usize, evals: &mut u64) -> Option<TupleCandidate> {
    let value = |u: f64| {
        corner_tuple(d, CornerScheduleParams::new(j, k, u.exp()))
            .map_or(f64::INFINITY, |t| t.max_eta(d))
    };
    let (u, fu) = golden_min(
        |u| {
            *evals += 1;
            value(u)
        },
        DEPTH.ln(),
        0.5f64.ln(),
        GOLDEN_ITERS,
    );
    if !fu.is_finite() {
        return None;
    }
    corner_tuple(d, CornerScheduleParams::new(j, k, u.exp())).ok()
}

/// Nested cap and strips at a single corner, over every corner with angle
/// below π, with geometric legs and with the δ-schedule.
pub fn corner_family_bound(d: &PlanarDomain, k: usize, _cfg: &SearchConfig) -> Result<BoundReport> {
    if k == 0 {
        return Err(Error::param("k must be at least 1"));
    }
    let corners: Vec<usize> = d
        .corners()
        .into_iter()
        .filter(|&j| d.interior_angles()[j] < PI - 1e-12)
        .collect();
    if corners.is_empty() {
        return Err(Error::NotApplicable("no corner with interior angle below π".into()));
    }
    let mut evals = 0u64;
    let mut best: Option<(f64, TupleCandidate)> = None;
    for &j in &corners {
        let found = [geometric_at(d, j, k, &mut evals), schedule_at(d, j, k, &mut evals)];
        for t in found.into_iter().flatten() {
            let v = t.max_eta(d);
            if best.as_ref().is_none_or(|(b, _)| v < *b) {
                best = Some((v, t));
            }
        }
    }
    let (_, witness) = best.ok_or_else(|| Error::ConstructionFailure("no corner tuple fits inside the domain".into()))?;
    let mut report = BoundReport::from_witness(d, witness, Method::CornerFamily, evals);
    report.provenance = "corner concentration".into();
    Ok(report)
}
