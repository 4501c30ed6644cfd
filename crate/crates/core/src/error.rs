use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("elliptic modulus {0} is outside the admissible range")]
    Modulus(f64),
    #[error("periodic quadrature needs at least 4 samples, got {0}")]
    TooFewSamples(usize),
    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("({0}, {1}) is not on the boundary of the basis")]
    NotOnBoundary(f64, f64),
    #[error("({0}, {1}) is not a unit vector")]
    NotUnit(f64, f64),
    #[error("points are not antipodal")]
    NotAntipodal,
    #[error("semi-axes must be positive and finite, got ({0}, {1})")]
    SemiAxes(f64, f64),
    #[error("zero tangent vector")]
    ZeroVector,
    #[error("geodesic boundary map is singular at t = {0}")]
    SingularAngle(f64),
    #[error("|λ| = {0} is not inside the unit disc")]
    OutsideDisc(f64),
    #[error("invalid geodesic parameters: {0}")]
    InvalidParams(&'static str),
    #[error("angle {0} is outside the allowed range")]
    AngleOutOfRange(f64),
    #[error("grid size {got} is invalid: {reason}")]
    Grid { got: usize, reason: &'static str },
    #[error("boundary samples must be finite")]
    NonFinite,
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;
