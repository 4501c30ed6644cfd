//! Kobayashi–Royden metric of the tube `T_{B₂}` at the origin.
//!
//! The geodesics through `0` with `a = (cos θ, i sin θ)` have derivatives
//! `f_θ′(0) = (Ψ₁(θ), iΨ₂(θ))`, where
//!
//! ```text
//! Ψ(θ) = (4/π) ( (E − t²K)/(1 − t²),  t (K − E)/(1 − t²) ),
//!     t = tan θ,  K = K(k),  E = E(k),  k = √(1 − t²).
//! ```
//!
//! As `θ` runs over `[0, π/4]`, `Ψ` traces the part of the boundary of the
//! planar indicatrix section `𝔎 = {(x, y) : κ(0; (x, iy)) ≤ 1}` with
//! `x ≥ y ≥ 0`. Any tangent vector `X + iY` reduces, by a phase rotation and
//! a real rotation, to `(α, iβ)` with `α ≥ β ≥ 0`, and then
//! `κ(0; X + iY) = r` where `r Ψ(θ) = (α, β)`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use num_complex::Complex64;
use serde::Serialize;

use crate::numeric::{complete_integrals, find_root_monotone, periodic_quadrature};
use crate::vec2::{self, Vec2};
use crate::{Error, Result};

/// Bracket width for the extremal angle.
pub const THETA_TOL: f64 = 1e-12;
/// Closed-indicatrix membership tolerance on `κ ≤ 1`.
pub const MEMBERSHIP_TOL: f64 = 1e-10;
/// Within this distance of `π/4` the closed form loses digits to
/// cancellation and the quadrature evaluator takes over.
const NEAR_DIAGONAL: f64 = 0.03;
/// Trapezoidal nodes for the quadrature evaluator near `π/4`, where the
/// integrand is analytic in a wide strip.
const NEAR_DIAGONAL_GRID: usize = 256;
/// Minimum grid for [`f_theta_prime_quadrature`].
pub const MIN_QUADRATURE_GRID: usize = 256;

const FOUR_OVER_PI: f64 = 4.0 / PI;

/// The vector `X + iY ∈ ℂ²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentVector {
    pub x: Vec2,
    pub y: Vec2,
}

impl TangentVector {
    pub fn new(x: Vec2, y: Vec2) -> Self {
        Self { x, y }
    }

    /// From complex coordinates `(v₁, v₂)`.
    pub fn from_complex(v: [Complex64; 2]) -> Self {
        Self {
            x: [v[0].re, v[1].re],
            y: [v[0].im, v[1].im],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x == [0.0, 0.0] && self.y == [0.0, 0.0]
    }

    /// `e^{iφ}(X + iY)`.
    pub fn rotate_phase(&self, phi: f64) -> Self {
        let (s, c) = phi.sin_cos();
        Self {
            x: vec2::sub(vec2::scale(self.x, c), vec2::scale(self.y, s)),
            y: vec2::add(vec2::scale(self.y, c), vec2::scale(self.x, s)),
        }
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self {
            x: vec2::scale(self.x, c),
            y: vec2::scale(self.y, c),
        }
    }
}

/// Canonical form `(α, iβ)` of a tangent vector, `α ≥ β ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReducedDirection {
    pub alpha: f64,
    pub beta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IndicatrixSample {
    pub theta: f64,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KappaResult {
    /// The metric value `κ(0; X + iY)`.
    pub r: f64,
    /// Extremal parameter in `[0, π/4]`.
    pub theta: f64,
    pub alpha: f64,
    pub beta: f64,
}

/// Wirtinger derivatives `(∂u, ∂̄u)` of a planar map at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WirtingerPair {
    pub d: Complex64,
    pub dbar: Complex64,
}

impl WirtingerPair {
    /// `(|∂u| + |∂̄u|, ||∂u| − |∂̄u||)`.
    pub fn indicatrix_point(&self) -> (f64, f64) {
        let (a, b) = (self.d.norm(), self.dbar.norm());
        (a + b, (a - b).abs())
    }
}

/// `α² = ½√(4⟨X,Y⟩² + (‖X‖² − ‖Y‖²)²) + ½(‖X‖² + ‖Y‖²)` and `β` with the
/// opposite sign on the square root.
///
/// `β` is recovered from `αβ = |X₁Y₂ − X₂Y₁|`, which avoids the
/// cancellation in the difference form.
pub fn reduce_direction(v: &TangentVector) -> Result<ReducedDirection> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let (x, y) = (v.x, v.y);
    let (xx, yy, xy) = (vec2::dot(x, x), vec2::dot(y, y), vec2::dot(x, y));
    let disc = (4.0 * xy * xy + (xx - yy).powi(2)).sqrt();
    let alpha = (0.5 * disc + 0.5 * (xx + yy)).sqrt();
    let beta = vec2::cross(x, y).abs() / alpha;
    Ok(ReducedDirection {
        alpha,
        beta: beta.min(alpha),
    })
}

/// A phase `θ₀` for which `e^{iθ₀}(X + iY)` has orthogonal real and
/// imaginary parts: `cos 2θ₀ ⟨X,Y⟩ + ½ sin 2θ₀ (‖X‖² − ‖Y‖²) = 0`.
///
/// Returns the solution with `2θ₀ ∈ (−π/2, π/2]`.
pub fn orthogonalize_phase(v: &TangentVector) -> Result<f64> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let xy = vec2::dot(v.x, v.y);
    let diff = vec2::dot(v.x, v.x) - vec2::dot(v.y, v.y);
    Ok(if xy == 0.0 {
        0.0
    } else if diff == 0.0 {
        FRAC_PI_4
    } else {
        0.5 * (-2.0 * xy / diff).atan()
    })
}

/// Closed-form `Ψ(θ)` away from the diagonal.
fn psi_closed(theta: f64) -> (f64, f64) {
    if theta == 0.0 {
        return (FOUR_OVER_PI, 0.0);
    }
    let t = theta.tan();
    let k2 = (1.0 - t) * (1.0 + t);
    let (big_k, big_e) = complete_integrals(k2.sqrt(), t);
    (
        FOUR_OVER_PI * (big_e - t * t * big_k) / k2,
        FOUR_OVER_PI * t * (big_k - big_e) / k2,
    )
}

/// `(1/π) ∫₀^{2π} (cos θ cos²t, sin θ sin²t) / √(cos²θ cos²t + sin²θ sin²t) dt`.
fn psi_quadrature(theta: f64, grid_size: usize) -> (f64, f64) {
    let (st, ct) = theta.sin_cos();
    let step = TAU / grid_size as f64;
    let (xs, ys): (Vec<f64>, Vec<f64>) = (0..grid_size)
        .map(|j| {
            let (s, c) = (j as f64 * step).sin_cos();
            let denom = (ct * ct * c * c + st * st * s * s).sqrt();
            (ct * c * c / denom, st * s * s / denom)
        })
        .unzip();
    let quad = |v: &[f64]| periodic_quadrature(v, TAU).expect("grid has at least 4 nodes") / PI;
    (quad(&xs), quad(&ys))
}

fn psi(theta: f64) -> (f64, f64) {
    if theta == FRAC_PI_4 {
        (1.0, 1.0)
    } else if (theta - FRAC_PI_4).abs() < NEAR_DIAGONAL {
        psi_quadrature(theta, NEAR_DIAGONAL_GRID)
    } else {
        psi_closed(theta)
    }
}

/// `Ψ(θ) = (x, y)` with `f_θ′(0) = (x, iy)`, for `θ ∈ [0, π/4]`.
pub fn f_theta_prime(theta: f64) -> Result<(f64, f64)> {
    if !(0.0..=FRAC_PI_4).contains(&theta) {
        return Err(Error::AngleOutOfRange(theta));
    }
    Ok(psi(theta))
}

/// Direct trapezoidal evaluation of the integral defining `f_θ′(0)`, for
/// `θ ∈ (0, π/2)`.
pub fn f_theta_prime_quadrature(theta: f64, grid_size: usize) -> Result<(f64, f64)> {
    if !(theta > 0.0 && theta < FRAC_PI_2) {
        return Err(Error::AngleOutOfRange(theta));
    }
    if grid_size < MIN_QUADRATURE_GRID {
        return Err(Error::Grid {
            got: grid_size,
            reason: "quadrature grid must be at least 256",
        });
    }
    Ok(psi_quadrature(theta, grid_size))
}

/// `Ψ` on `n` equally spaced angles covering `[0, π/4]`.
pub fn indicatrix_samples(n: usize) -> Result<Vec<IndicatrixSample>> {
    if n < 2 {
        return Err(Error::Grid {
            got: n,
            reason: "need at least two indicatrix samples",
        });
    }
    Ok((0..n)
        .map(|i| {
            let theta = if i == n - 1 {
                FRAC_PI_4
            } else {
                FRAC_PI_4 * i as f64 / (n - 1) as f64
            };
            let (x, y) = psi(theta);
            IndicatrixSample { theta, x, y }
        })
        .collect())
}

/// `κ_{T_{B₂}}(0; X + iY)`.
pub fn kappa_ball_origin(v: &TangentVector) -> Result<KappaResult> {
    let ReducedDirection { alpha, beta } = reduce_direction(v)?;
    let result = |r, theta| KappaResult {
        r,
        theta,
        alpha,
        beta,
    };
    if beta <= 1e-15 * alpha {
        return Ok(result(alpha * PI / 4.0, 0.0));
    }
    if alpha - beta <= 1e-15 * alpha {
        return Ok(result(alpha, FRAC_PI_4));
    }
    let target = beta / alpha;
    let theta = find_root_monotone(
        |th| {
            let (x, y) = psi(th);
            y / x - target
        },
        0.0,
        FRAC_PI_4,
        THETA_TOL,
    )?;
    Ok(result(alpha / psi(theta).0, theta))
}

/// Membership of `(x, y)` in the closed set `𝔎`.
pub fn in_indicatrix(x: f64, y: f64) -> bool {
    if !(x.is_finite() && y.is_finite()) {
        return false;
    }
    if x == 0.0 && y == 0.0 {
        return true;
    }
    let v = TangentVector::new([x.abs(), 0.0], [0.0, y.abs()]);
    kappa_ball_origin(&v).is_ok_and(|k| k.r <= 1.0 + MEMBERSHIP_TOL)
}

/// Whether some harmonic `u: 𝔻 → 𝔻` with `u(0) = 0` has `∂u(0) = d` and
/// `∂̄u(0) = dbar`.
pub fn schwarz_admissible(d: Complex64, dbar: Complex64) -> bool {
    let (x, y) = WirtingerPair { d, dbar }.indicatrix_point();
    in_indicatrix(x, y)
}

/// `|d| + |dbar| ≤ 4/π`, with the closed-set tolerance of [`in_indicatrix`].
pub fn schwarz_necessary(d: Complex64, dbar: Complex64) -> bool {
    d.norm() + dbar.norm() <= FOUR_OVER_PI * (1.0 + MEMBERSHIP_TOL)
}

/// `max(|d|, |dbar|) ≤ 2/π`.
pub fn schwarz_sufficient(d: Complex64, dbar: Complex64) -> bool {
    d.norm().max(dbar.norm()) <= 2.0 / PI
}
