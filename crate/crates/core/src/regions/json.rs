//! Tuple file format: a JSON array of regions.

use serde::{Deserialize, Serialize};

use super::{Cap, Region, TupleCandidate};
use crate::error::{Error, Result};
use crate::geometry::{BoundaryPoint, PlanarDomain};

/// A boundary point is written as its arclength when that reproduces it
/// exactly, and as a junction plus signed offset otherwise.
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum PointJson {
    S(f64),
    Anchored { junction: usize, offset: f64 },
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
pub struct CapJson {
    pub a: PointJson,
    pub b: PointJson,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RegionJson {
    Cap { a: PointJson, b: PointJson },
    Strip { inner: CapJson, outer: CapJson },
}

fn point_out(d: &PlanarDomain, p: BoundaryPoint) -> PointJson {
    let s = d.s(p);
    if d.point(s) == p {
        PointJson::S(s)
    } else {
        PointJson::Anchored {
            junction: p.junction,
            offset: p.offset,
        }
    }
}

fn point_in(d: &PlanarDomain, p: PointJson) -> Result<BoundaryPoint> {
    match p {
        PointJson::S(s) if s.is_finite() => Ok(d.point(s)),
        PointJson::S(_) => Err(Error::Parse("non-finite arclength".into())),
        PointJson::Anchored { junction, offset } => {
            if junction >= d.edge_count() || !offset.is_finite() {
                return Err(Error::Parse(format!("bad anchored point ({junction}, {offset})")));
            }
            Ok(d.anchored(junction, offset))
        }
    }
}

fn cap_out(d: &PlanarDomain, c: &Cap) -> CapJson {
    CapJson {
        a: point_out(d, c.a),
        b: point_out(d, c.b),
    }
}

fn cap_in(d: &PlanarDomain, c: &CapJson) -> Result<Cap> {
    Ok(Cap::new(point_in(d, c.a)?, point_in(d, c.b)?))
}

impl RegionJson {
    pub fn from_region(d: &PlanarDomain, r: &Region) -> Self {
        match r {
            Region::Cap(c) => {
                let j = cap_out(d, c);
                RegionJson::Cap { a: j.a, b: j.b }
            }
            Region::Strip(s) => RegionJson::Strip {
                inner: cap_out(d, &s.inner),
                outer: cap_out(d, &s.outer),
            },
        }
    }

    pub fn to_region(&self, d: &PlanarDomain) -> Result<Region> {
        Ok(match self {
            RegionJson::Cap { a, b } => Region::cap(point_in(d, *a)?, point_in(d, *b)?),
            RegionJson::Strip { inner, outer } => Region::strip(cap_in(d, inner)?, cap_in(d, outer)?),
        })
    }
}

pub fn tuple_to_json(d: &PlanarDomain, t: &TupleCandidate) -> Vec<RegionJson> {
    t.regions.iter().map(|r| RegionJson::from_region(d, r)).collect()
}

pub fn parse_tuple(d: &PlanarDomain, text: &str) -> Result<TupleCandidate> {
    let raw: Vec<RegionJson> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let regions = raw.iter().map(|r| r.to_region(d)).collect::<Result<Vec<_>>>()?;
    Ok(TupleCandidate::new(regions))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_keeps_tiny_offsets() {
        let d4 = PlanarDomain::make_regular_polygon(4).unwrap();
        let c = |t: f64| Cap::new(d4.anchored(2, -t), d4.anchored(2, t));
        let t = TupleCandidate::new(vec![
            Region::Cap(Cap::from_s(&d4, 0.3, 1.0)),
            Region::Cap(c(1e-150)),
            Region::strip(c(1e-150), c(0.25)),
        ]);
        let text = serde_json::to_string(&tuple_to_json(&d4, &t)).unwrap();
        assert!(text.contains("\"kind\":\"strip\""));
        assert!(text.contains("junction"));
        let back = parse_tuple(&d4, &text).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn reads_plain_arclengths() {
        let d = PlanarDomain::make_disk(1.0).unwrap();
        let t = parse_tuple(&d, r#"[{"kind":"cap","a":0,"b":2.0943951023931953}]"#).unwrap();
        assert!((t.max_eta(&d) - 0.826993343133).abs() < 1e-11);
        assert!(parse_tuple(&d, r#"[{"kind":"blob"}]"#).is_err());
    }
}
