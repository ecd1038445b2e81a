//! Closed-form Escobar constants and the bounds that hold without search.

use std::f64::consts::PI;

use crate::constructions::equal_boundary_tuple;
use crate::error::{Error, Result};
use crate::geometry::PlanarDomain;
use crate::report::{Bound, BoundKind};

/// Tolerance for comparisons between closed-form values.
pub const TAU_NUM: f64 = 1e-9;

/// I_k of a disk: sin(π/k)/(π/k). Gives 0 at k = 1.
pub fn ik_disk(k: usize) -> Result<f64> {
    if k < 1 {
        return Err(Error::param("k must be at least 1"));
    }
    let x = PI / k as f64;
    Ok(if k == 1 { 0.0 } else { x.sin() / x })
}

/// Which closed form applies to (n, k) on a regular n-gon, if any.
pub fn regular_polygon_formula(n: usize, k: usize) -> Option<f64> {
    let (nf, kf) = (n as f64, k as f64);
    if k >= n {
        Some((PI / nf).cos())
    } else if n.is_multiple_of(k) {
        if k == 1 {
            return Some(0.0);
        }
        Some((PI / kf).sin() / (PI / nf).tan() * kf / nf)
    } else {
        None
    }
}

/// I_k of the regular n-gon: exact when k ≥ n or k | n, otherwise the best
/// of the corner bound and the equal-boundary candidate, labelled as an upper bound.
pub fn ik_regular_polygon(n: usize, k: usize) -> Result<Bound> {
    if n < 3 || k < 1 {
        return Err(Error::param(format!("need n >= 3 and k >= 1, got n={n}, k={k}")));
    }
    if k >= n {
        return Ok(Bound::new(regular_polygon_formula(n, k).unwrap(), BoundKind::Exact, "regular polygon with k >= n"));
    }
    if let Some(v) = regular_polygon_formula(n, k) {
        return Ok(Bound::new(v, BoundKind::Exact, "regular polygon with k dividing n"));
    }
    let d = PlanarDomain::make_regular_polygon(n)?;
    let corner = (PI / n as f64).cos();
    let t = equal_boundary_tuple(&d, k, None)?;
    let cand = t.max_eta(&d);
    Ok(if cand < corner {
        Bound::new(cand, BoundKind::UpperBound, "equal-boundary candidate")
    } else {
        Bound::new(corner, BoundKind::UpperBound, "corner bound")
    })
}

/// sin(θ₁/2) for the smallest corner angle θ₁ < π.
pub fn polygon_upper_bound(d: &PlanarDomain) -> Result<f64> {
    let theta = d
        .corners()
        .into_iter()
        .map(|j| d.interior_angles()[j])
        .filter(|&a| a < PI - 1e-12)
        .fold(f64::INFINITY, f64::min);
    if theta.is_infinite() {
        return Err(Error::NotApplicable("no corner with interior angle below π".into()));
    }
    Ok((theta / 2.0).sin())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonotoneViolation {
    pub k: usize,
    pub previous: f64,
    pub value: f64,
}

/// Checks that the values (sorted by k) never decrease by more than τ_num.
pub fn ik_monotone_check(values: &[(usize, f64)]) -> Result<(), MonotoneViolation> {
    for w in values.windows(2) {
        if w[1].1 < w[0].1 - TAU_NUM {
            return Err(MonotoneViolation {
                k: w[1].0,
                previous: w[0].1,
                value: w[1].1,
            });
        }
    }
    Ok(())
}

/// Whether the regular-polygon value does not exceed the disk value.
pub fn disk_dominance_check(n: usize, k: usize) -> Result<bool> {
    Ok(ik_regular_polygon(n, k)?.value <= ik_disk(k)? + TAU_NUM)
}
