//! Planar domains bounded by segments and circular arcs.

mod domain;
mod edge;
mod intersect;
pub mod json;
mod vec2;

pub use domain::{BoundaryPoint, CollinearPolicy, PlanarDomain, Tolerances, TAU_GEOM};
pub use edge::{wrap_angle, Arc, BoundaryEdge, Segment};
pub use intersect::{edge_contacts, Contact};
pub use vec2::{signed_angle, Vec2};
