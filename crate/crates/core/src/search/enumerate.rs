use rayon::prelude::*;

use super::{gcd, BoundReport, Method, SearchConfig};
use crate::error::{Error, Result};
use crate::geometry::{BoundaryPoint, PlanarDomain};
use crate::regions::{Cap, Region, TupleCandidate};

/// Starting indices that cover every placement up to rotation.
fn canonical_starts(d: &PlanarDomain, m: usize) -> usize {
    if d.is_disk() {
        return 1;
    }
    match d.rotation_symmetry() {
        Some((n, _)) => m / gcd(n, m),
        None => m,
    }
}

fn binomial(n: usize, r: usize) -> f64 {
    if r > n {
        return 0.0;
    }
    let r = r.min(n - r);
    (0..r).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Number of cap placements the enumeration visits without pruning.
pub fn enumeration_cost(d: &PlanarDomain, k: usize, m: usize) -> f64 {
    canonical_starts(d, m) as f64 * binomial(m + k - 1, 2 * k - 1)
}

struct Search<'a> {
    m: usize,
    k: usize,
    eta: &'a [f64],
    a1: usize,
    bound: f64,
    best: f64,
    best_cuts: Vec<usize>,
    cuts: Vec<usize>,
    evals: u64,
}

impl Search<'_> {
    fn eta(&self, a: usize, b: usize) -> f64 {
        self.eta[(a % self.m) * self.m + b % self.m]
    }

    /// Place cap `i` (0-based) with its start at or after `from`.
    fn dfs(&mut self, i: usize, from: usize, cur: f64) {
        if i == self.k {
            if cur < self.best {
                self.best = cur;
                self.best_cuts.clone_from(&self.cuts);
            }
            return;
        }
        let last = self.a1 + self.m - (self.k - 1 - i);
        for a in from..last {
            for b in (a + 1)..=last {
                self.evals += 1;
                let v = cur.max(self.eta(a, b));
                if v > self.bound || v >= self.best {
                    continue;
                }
                self.cuts.push(a);
                self.cuts.push(b);
                self.dfs(i + 1, b, v);
                self.cuts.truncate(self.cuts.len() - 2);
            }
        }
    }
}

/// Exhaustive minimisation of max η over caps with endpoints on an m-point
/// grid. Caps may share endpoints. Ties go to the lexicographically smallest
/// cut vector.
pub fn enumerate_caps(d: &PlanarDomain, k: usize, m: usize, cfg: &SearchConfig) -> Result<BoundReport> {
    if k == 0 || m < 2 * k {
        return Err(Error::param(format!("grid of {m} points cannot hold {k} caps")));
    }
    let cost = enumeration_cost(d, k, m);
    if cost > cfg.budget {
        return Err(Error::BudgetExceeded {
            required: cost,
            budget: cfg.budget,
        });
    }
    let l = d.perimeter();
    let pts: Vec<BoundaryPoint> = (0..m).map(|i| d.point(cfg.grid_offset + l * i as f64 / m as f64)).collect();
    let eta: Vec<f64> = (0..m * m)
        .into_par_iter()
        .map(|ij| {
            let (i, j) = (ij / m, ij % m);
            if i == j {
                return f64::INFINITY;
            }
            let r = Region::Cap(Cap::new(pts[i], pts[j]));
            match d.chord_is_interior(pts[i], pts[j]) {
                Ok(true) => r.eta(d),
                _ => f64::INFINITY,
            }
        })
        .collect();

    // Equal spacing gives a cheap common upper bound.
    let mut bound = f64::INFINITY;
    if m.is_multiple_of(k) {
        let step = m / k;
        bound = (0..k).map(|i| eta[(i * step) * m + ((i + 1) * step) % m]).fold(0.0, f64::max);
    }

    let starts = canonical_starts(d, m);
    let items: Vec<(usize, usize)> = (0..starts)
        .flat_map(|a1| ((a1 + 1)..=(a1 + m - (k - 1))).map(move |b1| (a1, b1)))
        .collect();
    let results: Vec<(f64, Vec<usize>, u64)> = items
        .par_iter()
        .map(|&(a1, b1)| {
            let mut s = Search {
                m,
                k,
                eta: &eta,
                a1,
                bound,
                best: f64::INFINITY,
                best_cuts: Vec::new(),
                cuts: vec![a1, b1],
                evals: 1,
            };
            let v = s.eta(a1, b1);
            if v <= bound {
                s.dfs(1, b1, v);
            }
            (s.best, s.best_cuts, s.evals)
        })
        .collect();
    let evals: u64 = results.iter().map(|r| r.2).sum();
    let (best, cuts) = results
        .into_iter()
        .filter(|r| r.0.is_finite())
        .map(|r| (r.0, r.1))
        .reduce(|a, b| if b.0 < a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a })
        .ok_or_else(|| Error::NotApplicable(format!("no valid placement of {k} caps on a {m}-point grid")))?;
    let regions = cuts
        .chunks(2)
        .map(|c| Region::Cap(Cap::new(pts[c[0] % m], pts[c[1] % m])))
        .collect();
    let witness = TupleCandidate::new(regions);
    let mut report = BoundReport::from_witness(d, witness, Method::Enumeration, evals);
    debug_assert_eq!(report.value, best);
    report.provenance = format!("enumeration on a {m}-point grid");
    Ok(report)
}
