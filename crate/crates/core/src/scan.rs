//! Compares bounds for regular polygons against the disk over an (n, k) grid.

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::equal_boundary_tuple;
use crate::error::Result;
use crate::exact::{ik_disk, regular_polygon_formula, TAU_NUM};
use crate::geometry::PlanarDomain;
use crate::report::{fmt_sig, BoundKind};
use crate::search::{estimate_ik, SearchConfig};

/// Offsets per edge tried by the equal-length sweep.
const SWEEP: usize = 32;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRow {
    pub n: usize,
    pub k: usize,
    pub bound: f64,
    pub kind: BoundKind,
    pub disk: f64,
    pub satisfied: bool,
    pub method: String,
}

/// Best equal-length tuple over evenly spaced starting offsets.
pub fn equal_length_sweep(d: &PlanarDomain, k: usize) -> Option<f64> {
    let n = d.edge_count();
    let step = d.perimeter() / (n * SWEEP) as f64;
    (0..SWEEP)
        .filter_map(|i| equal_boundary_tuple(d, k, Some(step * i as f64)).ok())
        .filter(|t| t.validate(d).is_ok())
        .map(|t| t.max_eta(d))
        .reduce(f64::min)
}

pub fn scan_pair(n: usize, k: usize, cfg: &SearchConfig) -> Result<ScanRow> {
    let disk = ik_disk(k)?;
    let (bound, kind, method) = match regular_polygon_formula(n, k) {
        Some(v) => (v, BoundKind::Exact, "closed form".to_string()),
        None => {
            let d = PlanarDomain::make_regular_polygon(n)?;
            let r = estimate_ik(&d, k, cfg)?;
            match equal_length_sweep(&d, k) {
                Some(v) if v < r.value => (v, BoundKind::UpperBound, "equal-length sweep".to_string()),
                _ => (r.value, BoundKind::UpperBound, r.method.to_string()),
            }
        }
    };
    Ok(ScanRow {
        n,
        k,
        bound,
        kind,
        disk,
        satisfied: bound <= disk + TAU_NUM,
        method,
    })
}

pub fn conjecture_scan(ns: &[usize], ks: &[usize], cfg: &SearchConfig) -> Result<Vec<ScanRow>> {
    let pairs: Vec<(usize, usize)> = ns.iter().flat_map(|&n| ks.iter().map(move |&k| (n, k))).collect();
    pairs.par_iter().map(|&(n, k)| scan_pair(n, k, cfg)).collect()
}

pub fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from("n,k,bound_dn,kind,ik_disk,satisfied,method\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.n,
            r.k,
            fmt_sig(r.bound, 12),
            r.kind,
            fmt_sig(r.disk, 12),
            r.satisfied,
            r.method
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_rows() {
        let cfg = SearchConfig::default();
        let r = scan_pair(6, 3, &cfg).unwrap();
        assert_eq!(r.kind, BoundKind::Exact);
        assert!((r.bound - 0.75).abs() < 1e-15 && r.satisfied);
        let r = scan_pair(5, 5, &cfg).unwrap();
        assert!((r.disk - 0.935489283789).abs() < 1e-11 && r.satisfied);
        let r = scan_pair(7, 3, &cfg).unwrap();
        assert_eq!(r.kind, BoundKind::UpperBound);
        assert!(r.satisfied, "{r:?}");
    }
}
