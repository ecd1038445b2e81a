use std::f64::consts::TAU;

use super::vec2::Vec2;
use crate::error::{Error, Result};

/// Straight boundary piece.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub start: Vec2,
    pub end: Vec2,
}

/// Circular boundary piece. `sweep` is signed: positive runs counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arc {
    pub center: Vec2,
    pub radius: f64,
    pub start_angle: f64,
    pub sweep: f64,
}

impl Arc {
    /// Builds an arc from start/end angles and a turning direction. An end
    /// angle behind the start (in the turning direction) wraps once around.
    pub fn new(center: Vec2, radius: f64, start_angle: f64, end_angle: f64, ccw: bool) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::param(format!("arc radius must be positive, got {radius}")));
        }
        if !start_angle.is_finite() || !end_angle.is_finite() {
            return Err(Error::param("arc angles must be finite"));
        }
        let raw = if ccw { end_angle - start_angle } else { start_angle - end_angle };
        if raw == 0.0 {
            return Err(Error::param("arc has zero angular extent"));
        }
        let mut mag = if raw > 0.0 { raw } else { raw.rem_euclid(TAU) };
        if mag == 0.0 {
            mag = TAU;
        }
        if mag > TAU * (1.0 + 1e-12) {
            return Err(Error::param("arc sweeps more than a full turn"));
        }
        let mag = mag.min(TAU);
        Ok(Arc {
            center,
            radius,
            start_angle,
            sweep: if ccw { mag } else { -mag },
        })
    }

    #[inline]
    pub fn ccw(&self) -> bool {
        self.sweep > 0.0
    }

    #[inline]
    pub fn end_angle(&self) -> f64 {
        self.start_angle + self.sweep
    }

    #[inline]
    fn sign(&self) -> f64 {
        self.sweep.signum()
    }

    pub fn point_at_angle(&self, phi: f64) -> Vec2 {
        self.center + Vec2::from_angle(phi) * self.radius
    }

    /// Whether the polar angle `phi` (about the center) falls on the arc,
    /// allowing `tol` radians of slack at both ends.
    pub fn contains_angle(&self, phi: f64, tol: f64) -> bool {
        let rel = ((phi - self.start_angle) * self.sign()).rem_euclid(TAU);
        rel <= self.sweep.abs() + tol || rel >= TAU - tol
    }

    /// Arclength from the arc start to the point at polar angle `phi`.
    pub fn arclength_to_angle(&self, phi: f64) -> f64 {
        let rel = ((phi - self.start_angle) * self.sign()).rem_euclid(TAU);
        let rel = if rel > self.sweep.abs() + (TAU - self.sweep.abs()) / 2.0 { 0.0 } else { rel.min(self.sweep.abs()) };
        rel * self.radius
    }
}

/// One piece of a domain boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryEdge {
    Segment(Segment),
    Arc(Arc),
}

impl BoundaryEdge {
    pub fn segment(start: Vec2, end: Vec2) -> Self {
        BoundaryEdge::Segment(Segment { start, end })
    }

    pub fn length(&self) -> f64 {
        match self {
            BoundaryEdge::Segment(s) => s.start.distance(s.end),
            BoundaryEdge::Arc(a) => a.radius * a.sweep.abs(),
        }
    }

    pub fn start(&self) -> Vec2 {
        match self {
            BoundaryEdge::Segment(s) => s.start,
            BoundaryEdge::Arc(a) => a.point_at_angle(a.start_angle),
        }
    }

    pub fn end(&self) -> Vec2 {
        match self {
            BoundaryEdge::Segment(s) => s.end,
            BoundaryEdge::Arc(a) => a.point_at_angle(a.end_angle()),
        }
    }

    /// Displacement from the edge start to the point at arclength `u` from the start.
    /// Accurate to relative precision even when `u` is tiny.
    pub fn local_from_start(&self, u: f64) -> Vec2 {
        match self {
            BoundaryEdge::Segment(s) => (s.end - s.start).normalized() * u,
            BoundaryEdge::Arc(a) => {
                let delta = a.sign() * u / a.radius;
                Vec2::from_angle(a.start_angle + delta / 2.0).perp() * (2.0 * a.radius * (delta / 2.0).sin())
            }
        }
    }

    /// Displacement from the edge end to the point at arclength `u` before the end.
    pub fn local_from_end(&self, u: f64) -> Vec2 {
        match self {
            BoundaryEdge::Segment(s) => (s.start - s.end).normalized() * u,
            BoundaryEdge::Arc(a) => {
                let delta = -a.sign() * u / a.radius;
                Vec2::from_angle(a.end_angle() + delta / 2.0).perp() * (2.0 * a.radius * (delta / 2.0).sin())
            }
        }
    }

    /// Unit tangent (direction of travel) at arclength `u` from the start.
    pub fn tangent_at(&self, u: f64) -> Vec2 {
        match self {
            BoundaryEdge::Segment(s) => (s.end - s.start).normalized(),
            BoundaryEdge::Arc(a) => {
                let phi = a.start_angle + a.sign() * u / a.radius;
                Vec2::from_angle(phi).perp() * a.sign()
            }
        }
    }

    pub fn start_tangent(&self) -> Vec2 {
        self.tangent_at(0.0)
    }

    pub fn end_tangent(&self) -> Vec2 {
        self.tangent_at(self.length())
    }

    /// The piece of this edge between arclengths `u0 <= u1` from its start.
    pub fn sub_edge(&self, u0: f64, u1: f64) -> BoundaryEdge {
        match self {
            BoundaryEdge::Segment(s) => {
                let dir = (s.end - s.start).normalized();
                BoundaryEdge::segment(s.start + dir * u0, s.start + dir * u1)
            }
            BoundaryEdge::Arc(a) => BoundaryEdge::Arc(Arc {
                center: a.center,
                radius: a.radius,
                start_angle: a.start_angle + a.sign() * u0 / a.radius,
                sweep: a.sign() * (u1 - u0) / a.radius,
            }),
        }
    }

    pub fn reversed(&self) -> BoundaryEdge {
        match self {
            BoundaryEdge::Segment(s) => BoundaryEdge::segment(s.end, s.start),
            BoundaryEdge::Arc(a) => BoundaryEdge::Arc(Arc {
                center: a.center,
                radius: a.radius,
                start_angle: a.end_angle(),
                sweep: -a.sweep,
            }),
        }
    }

    /// Contribution of this edge to `½∮ x dy − y dx` (exact for both kinds).
    pub fn area_term(&self) -> f64 {
        match self {
            BoundaryEdge::Segment(s) => 0.5 * s.start.cross(s.end),
            BoundaryEdge::Arc(a) => {
                let p0 = self.start();
                let p1 = self.end();
                0.5 * (a.center.cross(p1 - p0) + a.radius * a.radius * a.sweep)
            }
        }
    }

    pub fn map_points(&self, f: impl Fn(Vec2) -> Vec2, scale: f64) -> BoundaryEdge {
        match self {
            BoundaryEdge::Segment(s) => BoundaryEdge::segment(f(s.start), f(s.end)),
            BoundaryEdge::Arc(a) => BoundaryEdge::Arc(Arc {
                center: f(a.center),
                radius: a.radius * scale,
                ..*a
            }),
        }
    }

    /// Nearest point on the edge to `q`, as arclength from the edge start.
    pub fn project(&self, q: Vec2) -> f64 {
        match self {
            BoundaryEdge::Segment(s) => {
                let d = s.end - s.start;
                let len2 = d.dot(d);
                let t = ((q - s.start).dot(d) / len2).clamp(0.0, 1.0);
                t * len2.sqrt()
            }
            BoundaryEdge::Arc(a) => {
                let phi = (q - a.center).angle();
                if a.contains_angle(phi, 0.0) {
                    a.arclength_to_angle(phi)
                } else {
                    let ds = q.distance(self.start());
                    let de = q.distance(self.end());
                    if ds <= de {
                        0.0
                    } else {
                        self.length()
                    }
                }
            }
        }
    }
}

/// Normalizes an angle to `[0, 2π)`.
pub fn wrap_angle(phi: f64) -> f64 {
    let w = phi.rem_euclid(TAU);
    if w >= TAU {
        0.0
    } else {
        w
    }
}
