//! Geometry of tube domains over planar convex bases: complex geodesics,
//! the Kobayashi indicatrix of the ball tube, Schwarz-lemma tests for
//! harmonic self-maps of the disc, and a numerical instrument for bivalent
//! harmonic maps.
//!
//! ```
//! use tubegeo::kobayashi::{kappa_ball_origin, TangentVector};
//!
//! let v = TangentVector::new([1.0, 0.0], [0.0, 0.0]);
//! let kappa = kappa_ball_origin(&v).unwrap();
//! assert!((kappa.r - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
//! ```

pub mod basis;
mod error;
pub mod geodesic;
pub mod harmonic;
pub mod kobayashi;
pub mod numeric;
pub mod vec2;

pub use basis::{BoundaryPoint, ConvexBasis};
pub use error::{Error, Result};
pub use geodesic::{GeodesicClass, GeodesicKind, GeodesicParams};
pub use harmonic::{BivalenceReport, BoundaryMap, HarmonicField};
pub use kobayashi::{KappaResult, TangentVector, WirtingerPair};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/elliptic.md")]
    mod elliptic {}
    #[doc = include_str!("../../../book/src/basis.md")]
    mod basis {}
    #[doc = include_str!("../../../book/src/geodesics.md")]
    mod geodesics {}
    #[doc = include_str!("../../../book/src/kobayashi.md")]
    mod kobayashi {}
    #[doc = include_str!("../../../book/src/schwarz.md")]
    mod schwarz {}
    #[doc = include_str!("../../../book/src/harmonic.md")]
    mod harmonic {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
