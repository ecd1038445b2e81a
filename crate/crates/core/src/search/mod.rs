//! Upper bounds on I_k by searching chord tuples: grid enumeration, simplex
//! refinement and corner concentration.

mod corner;
mod enumerate;
pub mod golden;
pub mod nelder_mead;
mod refine;

pub use corner::corner_family_bound;
pub use enumerate::{enumerate_caps, enumeration_cost};
pub use refine::refine_caps;

use serde::{Deserialize, Serialize};

use crate::constructions::equal_boundary_tuple;
use crate::error::{Error, Result};
use crate::exact::{ik_disk, regular_polygon_formula};
use crate::geometry::PlanarDomain;
use crate::regions::{Cap, Region, TupleCandidate};
use crate::report::BoundKind;

/// Convergence threshold for optimisation and for matching known values.
pub const TAU_OPT: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Families {
    pub caps: bool,
    pub corners: bool,
}

impl Default for Families {
    fn default() -> Self {
        Families { caps: true, corners: true }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Grid size for enumeration; `None` picks the largest suitable grid
    /// within `auto_budget`.
    pub grid: Option<usize>,
    /// Arclength of grid point 0.
    pub grid_offset: f64,
    pub families: Families,
    pub restarts: usize,
    /// Objective evaluations per simplex run.
    pub max_iterations: usize,
    pub seed: u64,
    pub tol_opt: f64,
    /// Hard limit on enumerated placements for an explicit grid.
    pub budget: f64,
    /// Placement limit used when choosing the grid automatically.
    pub auto_budget: f64,
    /// Cap refinement is skipped above this many parameters.
    pub max_refine_dim: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            grid: None,
            grid_offset: 0.0,
            families: Families::default(),
            restarts: 4,
            max_iterations: 4000,
            seed: 42,
            tol_opt: TAU_OPT,
            budget: 1e9,
            auto_budget: 2e6,
            max_refine_dim: 24,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Enumeration,
    NelderMead,
    CornerFamily,
    Construction,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Enumeration => "enumeration",
            Method::NelderMead => "nelder-mead",
            Method::CornerFamily => "corner-family",
            Method::Construction => "construction",
        })
    }
}

/// A value attained by a validated witness tuple.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub value: f64,
    pub kind: BoundKind,
    pub witness: TupleCandidate,
    pub method: Method,
    pub evaluations: u64,
    pub provenance: String,
}

impl BoundReport {
    pub(crate) fn from_witness(d: &PlanarDomain, witness: TupleCandidate, method: Method, evaluations: u64) -> Self {
        BoundReport {
            value: witness.max_eta(d),
            kind: BoundKind::Estimate,
            witness,
            method,
            evaluations,
            provenance: method.to_string(),
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Grid sizes must be multiples of this so the natural optima are on the grid.
pub fn grid_base(d: &PlanarDomain, k: usize) -> usize {
    let lcm = |a: usize, b: usize| a / gcd(a, b) * b;
    match d.regular_sides() {
        Some(n) => lcm(2 * n, k).max(2 * k),
        None => 2 * k,
    }
}

/// Largest admissible grid whose enumeration fits in `budget`.
pub fn auto_grid(d: &PlanarDomain, k: usize, budget: f64) -> Option<usize> {
    let base = grid_base(d, k);
    let mut best = None;
    let mut m = base;
    while m <= 240 {
        if m >= 2 * k && enumeration_cost(d, k, m) <= budget {
            best = Some(m);
        } else if best.is_some() {
            break;
        }
        m += base;
    }
    best
}

/// Known closed-form value for this domain, if any.
pub fn known_value(d: &PlanarDomain, k: usize) -> Option<f64> {
    if d.is_disk() {
        ik_disk(k).ok()
    } else {
        d.regular_sides().and_then(|n| regular_polygon_formula(n, k))
    }
}

/// A cap whose complement is a tiny cap at some junction, so η is about 1e-9.
fn thin_complement(d: &PlanarDomain) -> Option<TupleCandidate> {
    let t = 1e-9 * d.perimeter();
    (0..d.edge_count())
        .map(|j| TupleCandidate::new(vec![Region::Cap(Cap::new(d.anchored(j, t), d.anchored(j, -t)))]))
        .find(|w| w.validate(d).is_ok())
}

/// Best upper bound over the enabled families.
pub fn estimate_ik(d: &PlanarDomain, k: usize, cfg: &SearchConfig) -> Result<BoundReport> {
    if k == 0 {
        return Err(Error::param("k must be at least 1"));
    }
    let mut candidates: Vec<BoundReport> = Vec::new();
    if k == 1 {
        if let Some(w) = thin_complement(d) {
            candidates.push(BoundReport::from_witness(d, w, Method::Construction, 1));
        }
    } else if cfg.families.caps {
        let grid = match cfg.grid {
            Some(m) => Some(m),
            None => auto_grid(d, k, cfg.auto_budget),
        };
        let mut start = None;
        if let Some(m) = grid {
            match enumerate_caps(d, k, m, cfg) {
                Ok(r) => {
                    start = Some(r.witness.clone());
                    candidates.push(r);
                }
                Err(e @ Error::BudgetExceeded { .. }) if cfg.grid.is_some() => return Err(e),
                Err(_) => {}
            }
        }
        if start.is_none() {
            if let Ok(t) = equal_boundary_tuple(d, k, None) {
                if t.validate(d).is_ok() {
                    candidates.push(BoundReport::from_witness(d, t.clone(), Method::Construction, 1));
                    start = Some(t);
                }
            }
        }
        if let Some(t) = start {
            if 2 * k <= cfg.max_refine_dim {
                candidates.push(refine_caps(d, k, &t, cfg)?);
            }
        }
    }
    if cfg.families.corners && k >= 2 {
        match corner_family_bound(d, k, cfg) {
            Ok(r) => candidates.push(r),
            Err(Error::NotApplicable(_)) => {}
            Err(e) => return Err(e),
        }
    }
    let evals: u64 = candidates.iter().map(|c| c.evaluations).sum();
    let mut best = candidates
        .into_iter()
        .reduce(|a, b| if b.value < a.value { b } else { a })
        .ok_or_else(|| Error::ConstructionFailure("no family produced a valid tuple".into()))?;
    best.evaluations = evals;
    if let Some(exact) = known_value(d, k) {
        if (best.value - exact).abs() <= cfg.tol_opt {
            best.kind = BoundKind::Exact;
            best.provenance = format!("{} (matches closed form)", best.method);
        }
    }
    Ok(best)
}
