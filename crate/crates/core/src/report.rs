//! Bound labels and plain-text output helpers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::geometry::PlanarDomain;
use crate::regions::TupleCandidate;

/// How much a reported number is worth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundKind {
    /// Proven closed-form value.
    Exact,
    /// Attained by an explicit tuple, so never below the true constant.
    UpperBound,
    /// Best value found by search (also attained by its witness).
    Estimate,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Exact => "Exact",
            BoundKind::UpperBound => "UpperBound",
            BoundKind::Estimate => "Estimate",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bound {
    pub value: f64,
    pub kind: BoundKind,
    pub provenance: String,
}

impl Bound {
    pub fn new(value: f64, kind: BoundKind, provenance: impl Into<String>) -> Self {
        Bound {
            value,
            kind,
            provenance: provenance.into(),
        }
    }
}

/// Formats with `digits` significant digits, no exponent for ordinary
/// magnitudes and no locale dependence.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-5..=15).contains(&mag) {
        return format!("{:.*e}", digits.saturating_sub(1), x);
    }
    let decimals = (digits as i32 - 1 - mag).max(0) as usize;
    let s = format!("{:.*}", decimals, x);
    if s.contains('.') {
        let t = s.trim_end_matches('0').trim_end_matches('.');
        if t == "-0" {
            "0".into()
        } else {
            t.into()
        }
    } else {
        s
    }
}

/// CSV with one row per region: index, kind, |Σ°|, |Σ^∂|, η.
pub fn region_table(d: &PlanarDomain, t: &TupleCandidate) -> String {
    let mut out = String::from("region,kind,interior,exterior,eta\n");
    for (i, r) in t.regions.iter().enumerate() {
        let kind = match r {
            crate::regions::Region::Cap(_) => "cap",
            crate::regions::Region::Strip(_) => "strip",
        };
        out.push_str(&format!(
            "{i},{kind},{},{},{}\n",
            fmt_sig(r.interior_length(d), 12),
            fmt_sig(r.exterior_length(d), 12),
            fmt_sig(r.eta(d), 12)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(fmt_sig(0.75, 12), "0.75");
        assert_eq!(fmt_sig(2.0 / std::f64::consts::PI, 12), "0.636619772368");
        assert_eq!(fmt_sig(123456.0, 12), "123456");
        assert_eq!(fmt_sig(-1.5e-9, 3), "-1.50e-9");
        assert_eq!(fmt_sig(0.0, 12), "0");
        assert_eq!(fmt_sig(f64::INFINITY, 12), "inf");
    }
}
