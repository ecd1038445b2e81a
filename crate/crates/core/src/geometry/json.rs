//! Domain file format.

use serde::{Deserialize, Serialize};

use super::domain::PlanarDomain;
use super::edge::{Arc, BoundaryEdge};
use super::vec2::Vec2;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum EdgeJson {
    Segment {
        from: Vec2,
        to: Vec2,
    },
    Arc {
        center: Vec2,
        radius: f64,
        start_angle: f64,
        end_angle: f64,
        ccw: bool,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct DomainJson {
    pub edges: Vec<EdgeJson>,
}

impl DomainJson {
    pub fn build(&self) -> Result<PlanarDomain> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, e) in self.edges.iter().enumerate() {
            edges.push(match *e {
                EdgeJson::Segment { from, to } => BoundaryEdge::segment(from, to),
                EdgeJson::Arc {
                    center,
                    radius,
                    start_angle,
                    end_angle,
                    ccw,
                } => BoundaryEdge::Arc(
                    Arc::new(center, radius, start_angle, end_angle, ccw).map_err(|err| Error::geometry(i, err.to_string()))?,
                ),
            });
        }
        PlanarDomain::from_edges(edges)
    }

    pub fn from_domain(d: &PlanarDomain) -> Self {
        let edges = d
            .edges()
            .iter()
            .map(|e| match *e {
                BoundaryEdge::Segment(s) => EdgeJson::Segment { from: s.start, to: s.end },
                BoundaryEdge::Arc(a) => EdgeJson::Arc {
                    center: a.center,
                    radius: a.radius,
                    start_angle: a.start_angle,
                    end_angle: a.end_angle(),
                    ccw: a.ccw(),
                },
            })
            .collect();
        DomainJson { edges }
    }
}

pub fn parse_domain(text: &str) -> Result<PlanarDomain> {
    let raw: DomainJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    raw.build()
}

pub fn domain_to_json(d: &PlanarDomain) -> String {
    serde_json::to_string_pretty(&DomainJson::from_domain(d)).expect("domain serializes")
}

/// Convenience for hand-written polygon files.
pub fn polygon_json(points: &[Vec2]) -> DomainJson {
    let n = points.len();
    DomainJson {
        edges: (0..n)
            .map(|i| EdgeJson::Segment {
                from: points[i],
                to: points[(i + 1) % n],
            })
            .collect(),
    }
}
