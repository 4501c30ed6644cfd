//! Planar bases of tube domains: the unit disc and axis-aligned ellipses.
//!
//! Both are bounded, strongly convex and symmetric about the origin, and
//! both have a Gauss map with a closed-form inverse.

use std::fmt;
use std::str::FromStr;

use crate::vec2::{self, Vec2};
use crate::{Error, Result};

/// Tolerance on the defining equation of the boundary.
pub const BOUNDARY_TOL: f64 = 1e-12;
/// Tolerance on `‖u‖ = 1` for Gauss-map inputs.
pub const UNIT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConvexBasis {
    UnitBall,
    /// `x₁²/p² + x₂²/q² < 1`.
    Ellipse {
        p: f64,
        q: f64,
    },
}

/// A point on the boundary of a basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPoint(Vec2);

impl BoundaryPoint {
    pub fn coords(self) -> Vec2 {
        self.0
    }
}

impl From<BoundaryPoint> for Vec2 {
    fn from(p: BoundaryPoint) -> Vec2 {
        p.0
    }
}

impl ConvexBasis {
    pub fn ellipse(p: f64, q: f64) -> Result<Self> {
        if p > 0.0 && q > 0.0 && p.is_finite() && q.is_finite() {
            Ok(Self::Ellipse { p, q })
        } else {
            Err(Error::SemiAxes(p, q))
        }
    }

    /// Value of the defining function `ρ(x) = x₁²/p² + x₂²/q² − 1`.
    pub fn defining_function(&self, x: Vec2) -> f64 {
        match *self {
            Self::UnitBall => x[0] * x[0] + x[1] * x[1] - 1.0,
            Self::Ellipse { p, q } => (x[0] / p).powi(2) + (x[1] / q).powi(2) - 1.0,
        }
    }

    /// Validates that `x` lies on the boundary.
    pub fn boundary_point(&self, x: Vec2) -> Result<BoundaryPoint> {
        let rho = self.defining_function(x);
        if rho.abs() <= BOUNDARY_TOL {
            Ok(BoundaryPoint(x))
        } else {
            Err(Error::NotOnBoundary(x[0], x[1]))
        }
    }

    /// Unit outer normal at a boundary point.
    pub fn gauss_map(&self, x: Vec2) -> Result<Vec2> {
        let x = self.boundary_point(x)?.0;
        let grad = match *self {
            Self::UnitBall => x,
            Self::Ellipse { p, q } => [x[0] / (p * p), x[1] / (q * q)],
        };
        Ok(vec2::scale(grad, 1.0 / vec2::norm(grad)))
    }

    /// The unique boundary point whose outer normal is `u`.
    pub fn gauss_inverse(&self, u: Vec2) -> Result<BoundaryPoint> {
        if (vec2::norm(u) - 1.0).abs() > UNIT_TOL || !u[0].is_finite() || !u[1].is_finite() {
            return Err(Error::NotUnit(u[0], u[1]));
        }
        Ok(BoundaryPoint(self.gauss_inverse_unchecked(u)))
    }

    pub(crate) fn gauss_inverse_unchecked(&self, u: Vec2) -> Vec2 {
        match *self {
            Self::UnitBall => u,
            Self::Ellipse { p, q } => {
                let w = [p * p * u[0], q * q * u[1]];
                let s = (p * p * u[0] * u[0] + q * q * u[1] * u[1]).sqrt();
                vec2::scale(w, 1.0 / s)
            }
        }
    }

    /// Boundary points with outer normals `u` and `−u`.
    pub fn antipodal_pair(&self, u: Vec2) -> Result<(BoundaryPoint, BoundaryPoint)> {
        let x = self.gauss_inverse(u)?;
        let y = self.gauss_inverse(vec2::scale(u, -1.0))?;
        Ok((x, y))
    }

    /// Membership in the open set.
    pub fn contains(&self, x: Vec2) -> bool {
        self.defining_function(x) < 0.0
    }

    /// Every supported basis satisfies `Ω = −Ω`.
    pub fn is_symmetric(&self) -> bool {
        true
    }
}

impl fmt::Display for ConvexBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UnitBall => write!(f, "ball"),
            Self::Ellipse { p, q } => write!(f, "ellipse:{p},{q}"),
        }
    }
}

/// Parses `ball` or `ellipse:p,q`.
impl FromStr for ConvexBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "basis",
            input: s.to_string(),
        };
        let s = s.trim();
        if s == "ball" {
            return Ok(Self::UnitBall);
        }
        let axes = s.strip_prefix("ellipse:").ok_or_else(err)?;
        let (p, q) = axes.split_once(',').ok_or_else(err)?;
        let p: f64 = p.trim().parse().map_err(|_| err())?;
        let q: f64 = q.trim().parse().map_err(|_| err())?;
        Self::ellipse(p, q)
    }
}
