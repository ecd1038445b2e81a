use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::nelder_mead::{nelder_mead, NmOptions};
use super::{BoundReport, Method, SearchConfig};
use crate::error::{Error, Result};
use crate::geometry::{BoundaryPoint, PlanarDomain};
use crate::regions::{Cap, Region, TupleCandidate};

const PENALTY: f64 = 1e3;

/// Cap tuple as shared boundary points plus, per cap, the indices of its ends.
struct Layout {
    points: Vec<BoundaryPoint>,
    caps: Vec<(usize, usize)>,
    steps: Vec<f64>,
}

impl Layout {
    fn new(d: &PlanarDomain, t: &TupleCandidate) -> Result<Self> {
        let mut points: Vec<BoundaryPoint> = Vec::new();
        let index = |p: BoundaryPoint, points: &mut Vec<BoundaryPoint>| match points.iter().position(|&q| d.same_point(p, q)) {
            Some(i) => i,
            None => {
                points.push(p);
                points.len() - 1
            }
        };
        let mut caps = Vec::new();
        for r in &t.regions {
            match r {
                Region::Cap(c) => {
                    let a = index(c.a, &mut points);
                    let b = index(c.b, &mut points);
                    caps.push((a, b));
                }
                Region::Strip(_) => return Err(Error::param("cap refinement takes caps only")),
            }
        }
        let l = d.perimeter();
        let steps = (0..points.len())
            .map(|i| {
                let g = (0..points.len())
                    .filter(|&j| j != i)
                    .map(|j| d.gap(points[i], points[j]))
                    .fold(l / 2.0, f64::min);
                0.25 * g
            })
            .collect();
        Ok(Layout { points, caps, steps })
    }

    fn build(&self, d: &PlanarDomain, x: &[f64]) -> TupleCandidate {
        let pts: Vec<BoundaryPoint> = self
            .points
            .iter()
            .zip(x)
            .map(|(p, dx)| d.anchored(p.junction, p.offset + dx))
            .collect();
        TupleCandidate::new(self.caps.iter().map(|&(a, b)| Region::Cap(Cap::new(pts[a], pts[b]))).collect())
    }

    fn objective(&self, d: &PlanarDomain, x: &[f64]) -> f64 {
        let t = self.build(d, x);
        if t.validate(d).is_err() {
            return PENALTY;
        }
        t.max_eta(d)
    }
}

/// Local simplex search over the endpoint positions of a cap tuple. Restart 0
/// starts from `initial`; the others from seeded random perturbations of it.
/// Never returns a tuple worse than `initial`.
pub fn refine_caps(d: &PlanarDomain, k: usize, initial: &TupleCandidate, cfg: &SearchConfig) -> Result<BoundReport> {
    if initial.k() != k {
        return Err(Error::param(format!("initial tuple has {} regions, expected {k}", initial.k())));
    }
    initial
        .validate(d)
        .map_err(|v| Error::param(format!("initial tuple is invalid: {v}")))?;
    let layout = Layout::new(d, initial)?;
    let n = layout.points.len();
    let opts = NmOptions {
        max_evals: cfg.max_iterations,
        ..Default::default()
    };
    let runs: Vec<(f64, Vec<f64>, usize)> = (0..=cfg.restarts)
        .into_par_iter()
        .map(|i| {
            let mut x0 = vec![0.0; n];
            let mut evals = 0;
            if i > 0 {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                rng.set_stream(i as u64);
                for _ in 0..20 {
                    let x: Vec<f64> = layout.steps.iter().map(|s| rng.gen_range(-s..=*s)).collect();
                    evals += 1;
                    if layout.objective(d, &x) < PENALTY {
                        x0 = x;
                        break;
                    }
                }
            }
            let r = nelder_mead(|x| layout.objective(d, x), &x0, &layout.steps, opts);
            (r.fx, r.x, evals + r.evals)
        })
        .collect();
    let evals: u64 = runs.iter().map(|r| r.2 as u64).sum();
    let (fx, x, _) = runs
        .into_iter()
        .enumerate()
        .reduce(|a, b| if b.1 .0 < a.1 .0 { b } else { a })
        .map(|(_, r)| r)
        .expect("at least one run");
    let start = initial.max_eta(d);
    let witness = if fx < start { layout.build(d, &x) } else { initial.clone() };
    let mut report = BoundReport::from_witness(d, witness, Method::NelderMead, evals);
    report.provenance = format!("simplex refinement, {} restarts", cfg.restarts);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn improves_perturbed_disk_tuple() {
        let d = PlanarDomain::make_disk(1.0).unwrap();
        let t = TupleCandidate::caps(&d, &[(0.0, 2.5), (2.5, 4.0), (4.0, 2.0 * PI)]);
        let target = (PI / 3.0).sin() / (PI / 3.0);
        let cfg = SearchConfig::default();
        let r = refine_caps(&d, 3, &t, &cfg).unwrap();
        assert!(r.witness.validate(&d).is_ok());
        assert!(r.value < t.max_eta(&d));
        assert!((r.value - target).abs() < 1e-6, "{}", r.value);
        assert_eq!(r, refine_caps(&d, 3, &t, &cfg).unwrap());
    }

    #[test]
    fn never_worse_and_rejects_bad_input() {
        let d = PlanarDomain::make_regular_polygon(6).unwrap();
        let t = crate::constructions::inscribed_kgon_tuple(&d, 3).unwrap();
        let r = refine_caps(&d, 3, &t, &SearchConfig::default()).unwrap();
        assert!(r.value <= t.max_eta(&d));
        assert!(refine_caps(&d, 2, &t, &SearchConfig::default()).is_err());
    }
}
