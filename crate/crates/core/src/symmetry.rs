//! Symmetric repositioning of caps on regular polygons and randomized checks
//! of the comparison inequalities between them.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::PlanarDomain;
use crate::regions::Cap;

/// Margin allowed on every inequality in this module.
pub const MARGIN: f64 = 1e-12;

/// A cap together with its two symmetric repositionings of equal exterior length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetrizedRegion {
    pub base: Cap,
    /// Centred at the midpoint of edge 0.
    pub type_i: Cap,
    /// Centred at vertex 0.
    pub type_ii: Cap,
    pub length: f64,
}

fn sides(d: &PlanarDomain) -> Result<(usize, f64)> {
    let n = d
        .regular_sides()
        .ok_or_else(|| Error::NotApplicable("symmetrization needs a regular polygon".into()))?;
    Ok((n, d.perimeter() / n as f64))
}

/// Cap with exterior length `length` centred at arclength `center`.
pub fn centered_cap(d: &PlanarDomain, center: f64, length: f64) -> Cap {
    Cap::new(d.point(center - length / 2.0), d.point(center + length / 2.0))
}

pub fn type_i(d: &PlanarDomain, length: f64) -> Result<Cap> {
    let (_, s) = sides(d)?;
    Ok(centered_cap(d, s / 2.0, length))
}

pub fn type_ii(d: &PlanarDomain, length: f64) -> Result<Cap> {
    sides(d)?;
    Ok(centered_cap(d, 0.0, length))
}

/// η of a cap and whether its chord fails to be a proper interior chord
/// (for example when it runs along an edge).
pub fn cap_ratio(d: &PlanarDomain, c: &Cap) -> (f64, bool) {
    let degenerate = !matches!(d.chord_is_interior(c.a, c.b), Ok(true));
    (c.chord(d) / c.span(d), degenerate)
}

pub fn symmetrize(d: &PlanarDomain, base: &Cap) -> Result<SymmetrizedRegion> {
    let length = base.span(d);
    if length > d.perimeter() / 2.0 + d.tol_len() {
        return Err(Error::NotApplicable(format!(
            "exterior length {length} exceeds half the perimeter {}",
            d.perimeter() / 2.0
        )));
    }
    Ok(SymmetrizedRegion {
        base: *base,
        type_i: type_i(d, length)?,
        type_ii: type_ii(d, length)?,
        length,
    })
}

/// Result of one inequality check: `margin ≥ -MARGIN` means it holds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Check {
    pub margin: f64,
    pub degenerate: bool,
}

impl Check {
    pub fn holds(&self) -> bool {
        self.margin >= -MARGIN
    }
}

/// η(base) − min(η(type I), η(type II)).
pub fn symmetrization_inequality_check(d: &PlanarDomain, base: &Cap) -> Result<Check> {
    let sym = symmetrize(d, base)?;
    let (e0, deg) = cap_ratio(d, base);
    let (e1, _) = cap_ratio(d, &sym.type_i);
    let (e2, _) = cap_ratio(d, &sym.type_ii);
    Ok(Check {
        margin: e0 - e1.min(e2),
        degenerate: deg,
    })
}

/// Both symmetrizations at `l2` are no worse than at `l1 ≤ l2`.
pub fn monotonicity_check(d: &PlanarDomain, l1: f64, l2: f64) -> Result<Check> {
    if !(l1 > 0.0 && l1 <= l2) {
        return Err(Error::param(format!("need 0 < l1 <= l2, got {l1}, {l2}")));
    }
    if l2 > d.perimeter() / 2.0 + d.tol_len() {
        return Err(Error::NotApplicable("length exceeds half the perimeter".into()));
    }
    let eta = |c: Cap| cap_ratio(d, &c).0;
    let m1 = eta(type_i(d, l1)?) - eta(type_i(d, l2)?);
    let m2 = eta(type_ii(d, l1)?) - eta(type_ii(d, l2)?);
    Ok(Check {
        margin: m1.min(m2),
        degenerate: false,
    })
}

/// Exterior length in (s, 2s) at which the two symmetrizations have equal η,
/// for the regular n-gon with unit circumradius.
pub fn crossover_threshold(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::param("n must be at least 3"));
    }
    let c = (PI / n as f64).cos();
    let s = 2.0 * (PI / n as f64).sin();
    Ok(2.0 * s * (1.0 + c) / (1.0 + 2.0 * c))
}

/// η(type I) − η(type II) as a function of the exterior length.
pub fn crossover_gap(d: &PlanarDomain, length: f64) -> Result<f64> {
    Ok(cap_ratio(d, &type_i(d, length)?).0 - cap_ratio(d, &type_ii(d, length)?).0)
}

/// Sign change of `crossover_gap` on [s, 2s], located by bisection.
pub fn crossover_bisect(d: &PlanarDomain) -> Result<f64> {
    let (_, s) = sides(d)?;
    let (mut lo, mut hi) = (s, 2.0 * s);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if crossover_gap(d, mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Sign check against the threshold: type I is no better below it and no
/// worse from it up to 2s.
pub fn crossover_check(d: &PlanarDomain, length: f64) -> Result<Check> {
    let (n, s) = sides(d)?;
    let c = crossover_threshold(n)? * s / (2.0 * (PI / n as f64).sin());
    let gap = crossover_gap(d, length)?;
    let margin = if length < c {
        gap
    } else if length <= 2.0 * s {
        -gap
    } else {
        return Err(Error::NotApplicable("length above 2s".into()));
    };
    Ok(Check { margin, degenerate: false })
}

/// The cap of length L₀ = ℓs whose endpoints are edge midpoints: centred at a
/// midpoint for even ℓ and at a vertex for odd ℓ.
pub fn envelope_cap(d: &PlanarDomain, l0: f64) -> Result<Cap> {
    let (n, s) = sides(d)?;
    let ell = (l0 / s).round();
    if (l0 / s - ell).abs() > 1e-9 || ell < 1.0 || ell > (n / 2) as f64 {
        return Err(Error::NotApplicable(format!(
            "L0 = {l0} is not a multiple ℓs with 1 <= ℓ <= {}",
            n / 2
        )));
    }
    if (ell as usize).is_multiple_of(2) {
        type_i(d, l0)
    } else {
        type_ii(d, l0)
    }
}

pub fn envelope_value(d: &PlanarDomain, l0: f64) -> Result<f64> {
    Ok(cap_ratio(d, &envelope_cap(d, l0)?).0)
}

/// η(base) − η(envelope) for a cap with exterior length below L₀.
pub fn lower_envelope_check(d: &PlanarDomain, l0: f64, base: &Cap) -> Result<Check> {
    let env = envelope_value(d, l0)?;
    let length = base.span(d);
    if length > l0 + d.tol_len() {
        return Err(Error::NotApplicable(format!("cap length {length} exceeds L0 = {l0}")));
    }
    let (e, degenerate) = cap_ratio(d, base);
    Ok(Check {
        margin: e - env,
        degenerate,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Symmetrization,
    Monotonicity,
    Crossover,
    LowerEnvelope,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Symmetrization, Suite::Monotonicity, Suite::Crossover, Suite::LowerEnvelope];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Symmetrization => "symmetrization",
            Suite::Monotonicity => "monotonicity",
            Suite::Crossover => "crossover",
            Suite::LowerEnvelope => "lower-envelope",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteResult {
    pub n: usize,
    pub suite: Suite,
    pub samples: usize,
    pub failures: usize,
    pub degenerate: usize,
    pub worst_margin: f64,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn sample(d: &PlanarDomain, n: usize, suite: Suite, rng: &mut ChaCha8Rng) -> Result<Check> {
    let l = d.perimeter();
    let s = l / n as f64;
    let tau = d.tol_len();
    match suite {
        Suite::Symmetrization => {
            let length = rng.gen_range(tau..l / 2.0);
            let center = rng.gen_range(0.0..l);
            symmetrization_inequality_check(d, &centered_cap(d, center, length))
        }
        Suite::Monotonicity => {
            let a = rng.gen_range(tau..l / 2.0);
            let b = rng.gen_range(tau..l / 2.0);
            monotonicity_check(d, a.min(b), a.max(b))
        }
        Suite::Crossover => crossover_check(d, rng.gen_range(tau..=2.0 * s)),
        Suite::LowerEnvelope => {
            let ell = rng.gen_range(1..=n / 2);
            let l0 = ell as f64 * s;
            let length = rng.gen_range(tau..l0);
            let center = rng.gen_range(0.0..l);
            lower_envelope_check(d, l0, &centered_cap(d, center, length))
        }
    }
}

/// Runs `samples` random checks of one suite on D_n. Sample `i` draws from
/// its own stream, so results do not depend on thread scheduling.
pub fn audit_suite(n: usize, suite: Suite, samples: usize, seed: u64) -> Result<SuiteResult> {
    let d = PlanarDomain::make_regular_polygon(n)?;
    let stream_base = ((n as u64) << 40) | ((suite as u64) << 32);
    let checks: Vec<Check> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(stream_base | i as u64);
            sample(&d, n, suite, &mut rng)
        })
        .collect::<Result<_>>()?;
    Ok(SuiteResult {
        n,
        suite,
        samples,
        failures: checks.iter().filter(|c| !c.holds()).count(),
        degenerate: checks.iter().filter(|c| c.degenerate).count(),
        worst_margin: checks.iter().map(|c| c.margin).fold(f64::INFINITY, f64::min),
    })
}

/// Every suite on D_n.
pub fn audit(n: usize, samples: usize, seed: u64) -> Result<Vec<SuiteResult>> {
    Suite::ALL.iter().map(|&s| audit_suite(n, s, samples, seed)).collect()
}

/// CSV with one row per (n, suite).
pub fn audit_csv(results: &[SuiteResult]) -> String {
    let mut out = String::from("n,suite,samples,failures,degenerate,worst_margin,pass\n");
    for r in results {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.n,
            r.suite.name(),
            r.samples,
            r.failures,
            r.degenerate,
            crate::report::fmt_sig(r.worst_margin, 12),
            r.passed()
        ));
    }
    out
}
