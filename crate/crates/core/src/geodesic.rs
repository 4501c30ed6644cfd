//! Complex geodesics of the tube `T_Ω = Ω + iℝ²` over a planar basis.
//!
//! A geodesic is determined by `a ∈ ℂ²`, `a ≠ 0`, and `b ∈ ℝ²`. On the unit
//! circle its real part is
//!
//! ```text
//! Re f(e^{it}) = Φ⁻¹( F̃(t) / ‖F̃(t)‖ ),    F̃(t) = 2 Re(e^{it} a) + b,
//! ```
//!
//! where `Φ` is the Gauss map of `Ω`. The value inside the disc follows
//! from the Schwarz–Poisson integral of that boundary data.

use std::f64::consts::{FRAC_2_PI, PI, TAU};
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::basis::{BoundaryPoint, ConvexBasis};
use crate::numeric::periodic_quadrature;
use crate::vec2::{self, Vec2};
use crate::{Error, Result};

/// `‖F̃(t)‖` at or below this value is treated as a zero of `F̃`.
pub const SINGULAR_TOL: f64 = 1e-12;
/// Relative tolerance on `det[Re a | Im a]` for linear independence.
const RANK_TOL: f64 = 1e-12;
/// Tolerance on the position of the origin relative to the traced ellipse.
const ELLIPSE_TOL: f64 = 1e-12;
/// Tolerance on `gauss_map(x) = −gauss_map(y)`.
const ANTIPODAL_TOL: f64 = 1e-10;
/// Smallest grid accepted by [`extend_poisson`].
pub const MIN_POISSON_GRID: usize = 64;

/// The pair `(a, b)` of a geodesic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicParams {
    a: [Complex64; 2],
    b: Vec2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeodesicKind {
    /// `F` embeds the circle into the sphere.
    EmbeddedCircle,
    /// `F` runs over a closed arc of a great circle twice.
    FoldedArc,
    /// `F̃` vanishes once; `F` jumps to the opposite point there.
    SemicircleJump,
    /// `F̃` vanishes twice; `F` takes two opposite constant values.
    TwoPointAntipodal,
}

impl fmt::Display for GeodesicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::EmbeddedCircle => "EmbeddedCircle",
            Self::FoldedArc => "FoldedArc",
            Self::SemicircleJump => "SemicircleJump",
            Self::TwoPointAntipodal => "TwoPointAntipodal",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeodesicClass {
    pub kind: GeodesicKind,
    /// Angles in `[0, 2π)` where `F̃` vanishes, sorted.
    pub singular_angles: Vec<f64>,
}

impl GeodesicParams {
    /// Fails when `a = 0` or when `F` is constant on the circle.
    pub fn new(a: [Complex64; 2], b: Vec2) -> Result<Self> {
        let params = Self { a, b };
        params.analyse()?;
        Ok(params)
    }

    /// `a = (re₁ + i im₁, re₂ + i im₂)`.
    pub fn from_parts(a: [f64; 4], b: Vec2) -> Result<Self> {
        Self::new([Complex64::new(a[0], a[1]), Complex64::new(a[2], a[3])], b)
    }

    pub fn a(&self) -> [Complex64; 2] {
        self.a
    }

    pub fn b(&self) -> Vec2 {
        self.b
    }

    fn re_a(&self) -> Vec2 {
        [self.a[0].re, self.a[1].re]
    }

    fn im_a(&self) -> Vec2 {
        [self.a[0].im, self.a[1].im]
    }

    /// `F̃(t) = 2 Re(e^{it} a) + b = 2(cos t Re a − sin t Im a) + b`.
    pub fn traced_point(&self, t: f64) -> Vec2 {
        let (s, c) = t.sin_cos();
        let (u, v) = (self.re_a(), self.im_a());
        [
            2.0 * (c * u[0] - s * v[0]) + self.b[0],
            2.0 * (c * u[1] - s * v[1]) + self.b[1],
        ]
    }

    /// `F(t) = F̃(t)/‖F̃(t)‖`, or `None` at a singular angle.
    pub fn direction(&self, t: f64) -> Option<Vec2> {
        let w = self.traced_point(t);
        let n = vec2::norm(w);
        (n > SINGULAR_TOL).then(|| vec2::scale(w, 1.0 / n))
    }

    fn analyse(&self) -> Result<GeodesicClass> {
        let (u, v, b) = (self.re_a(), self.im_a(), self.b);
        let scale = vec2::dot(u, u) + vec2::dot(v, v);
        if scale == 0.0 || !scale.is_finite() {
            return Err(Error::InvalidParams("a must be non-zero"));
        }
        let det = vec2::cross(u, v);
        if det.abs() > RANK_TOL * scale {
            // Ellipse centred at b. Solve 2(c u − s v) = −b for (c, s).
            let det_m = -4.0 * det;
            let c = vec2::cross([-b[0], -b[1]], [-2.0 * v[0], -2.0 * v[1]]) / det_m;
            let s = vec2::cross([2.0 * u[0], 2.0 * u[1]], [-b[0], -b[1]]) / det_m;
            let rho = c * c + s * s;
            return Ok(if (rho - 1.0).abs() <= ELLIPSE_TOL {
                GeodesicClass {
                    kind: GeodesicKind::SemicircleJump,
                    singular_angles: vec![normalize_angle(s.atan2(c))],
                }
            } else if rho < 1.0 {
                GeodesicClass {
                    kind: GeodesicKind::EmbeddedCircle,
                    singular_angles: Vec::new(),
                }
            } else {
                GeodesicClass {
                    kind: GeodesicKind::FoldedArc,
                    singular_angles: Vec::new(),
                }
            });
        }
        // Segment b + s e, |s| ≤ 2R.
        let dominant = if vec2::dot(u, u) >= vec2::dot(v, v) {
            u
        } else {
            v
        };
        let e = vec2::scale(dominant, 1.0 / vec2::norm(dominant));
        let (cu, cv) = (vec2::dot(u, e), vec2::dot(v, e));
        let radius = cu.hypot(cv);
        let phase = cv.atan2(cu);
        let off_line = vec2::cross(e, b);
        if off_line.abs() > RANK_TOL * (scale.sqrt() + vec2::norm(b)) {
            return Ok(GeodesicClass {
                kind: GeodesicKind::FoldedArc,
                singular_angles: Vec::new(),
            });
        }
        let along = vec2::dot(b, e);
        if along.abs() >= 2.0 * radius * (1.0 - ELLIPSE_TOL) {
            return Err(Error::InvalidParams("the image of F is a single point"));
        }
        let spread = (-along / (2.0 * radius)).acos();
        let mut angles = vec![
            normalize_angle(-phase + spread),
            normalize_angle(-phase - spread),
        ];
        angles.sort_by(f64::total_cmp);
        Ok(GeodesicClass {
            kind: GeodesicKind::TwoPointAntipodal,
            singular_angles: angles,
        })
    }
}

fn normalize_angle(t: f64) -> f64 {
    let r = t.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Which of the four boundary behaviours the geodesic has.
pub fn classify(params: &GeodesicParams) -> Result<GeodesicClass> {
    params.analyse()
}

/// `Re f(e^{it})` on the boundary of the basis.
pub fn boundary_real_part(
    params: &GeodesicParams,
    basis: &ConvexBasis,
    t: f64,
) -> Result<BoundaryPoint> {
    let u = params.direction(t).ok_or(Error::SingularAngle(t))?;
    basis.gauss_inverse(u)
}

/// Uniform grid of `n` angles avoiding zeros of `F̃`.
///
/// Returns the grid phase (`0` or half a step) and the boundary values of
/// `Re f` at `phase + 2πj/n`.
pub fn boundary_samples(
    params: &GeodesicParams,
    basis: &ConvexBasis,
    n: usize,
) -> (f64, Vec<Vec2>) {
    let step = TAU / n as f64;
    let hits_singularity = (0..n).any(|j| params.direction(j as f64 * step).is_none());
    let phase = if hits_singularity { 0.5 * step } else { 0.0 };
    let samples = (0..n)
        .map(|j| {
            let t = phase + j as f64 * step;
            let u = params
                .direction(t)
                .expect("half-step grid avoids the at most two zeros of F̃");
            basis.gauss_inverse_unchecked(u)
        })
        .collect();
    (phase, samples)
}

/// The geodesic `f(λ)` inside the disc, normalised by `Im f(0) = 0`.
///
/// The Schwarz–Poisson integral is evaluated on `grid_size` nodes with the
/// rule that is exact for trigonometric polynomials up to the Nyquist
/// frequency: the kernel `(e^{it} + λ)/(e^{it} − λ) = 1 + 2Σ (λe^{−it})^m`
/// is summed in closed form up to `m = grid_size/2`. The plain trapezoidal
/// sum of the kernel aliases by `≈ 2|λ|^N`, which is not small near the
/// circle.
pub fn extend_poisson(
    params: &GeodesicParams,
    basis: &ConvexBasis,
    lambda: Complex64,
    grid_size: usize,
) -> Result<[Complex64; 2]> {
    if lambda.norm() >= 1.0 || !lambda.norm().is_finite() {
        return Err(Error::OutsideDisc(lambda.norm()));
    }
    if grid_size < MIN_POISSON_GRID || !grid_size.is_multiple_of(2) {
        return Err(Error::Grid {
            got: grid_size,
            reason: "Poisson grid must be even and at least 64",
        });
    }
    let (phase, samples) = boundary_samples(params, basis, grid_size);
    let step = TAU / grid_size as f64;
    let nyquist = grid_size / 2;
    let weights: Vec<Complex64> = (0..grid_size)
        .map(|j| {
            let t = phase + j as f64 * step;
            let z = lambda * Complex64::from_polar(1.0, -t);
            truncated_kernel(z, nyquist)
        })
        .collect();

    let mut out = [Complex64::new(0.0, 0.0); 2];
    for (ch, slot) in out.iter_mut().enumerate() {
        let re: Vec<f64> = weights
            .iter()
            .zip(&samples)
            .map(|(w, g)| w.re * g[ch])
            .collect();
        let im: Vec<f64> = weights
            .iter()
            .zip(&samples)
            .map(|(w, g)| w.im * g[ch])
            .collect();
        *slot = Complex64::new(
            periodic_quadrature(&re, TAU)? / TAU,
            periodic_quadrature(&im, TAU)? / TAU,
        );
    }
    Ok(out)
}

/// `1 + 2Σ_{m=1}^{M−1} z^m + z^M`.
fn truncated_kernel(z: Complex64, nyquist: usize) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let z_top = z.powu(nyquist as u32);
    let denom = one - z;
    let geometric = if denom.norm() > 1e-3 {
        // Σ_{m=1}^{M−1} z^m = (z − z^M)/(1 − z)
        (z - z_top) / denom
    } else {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut p = one;
        for _ in 1..nyquist {
            p *= z;
            acc += p;
        }
        acc
    };
    one + 2.0 * geometric + z_top
}

/// `f′(0) = (1/π) ∫₀^{2π} e^{−it} Re f(e^{it}) dt`, by the trapezoidal rule.
pub fn derivative_at_origin(
    params: &GeodesicParams,
    basis: &ConvexBasis,
    grid_size: usize,
) -> Result<[Complex64; 2]> {
    if grid_size < MIN_POISSON_GRID {
        return Err(Error::Grid {
            got: grid_size,
            reason: "derivative grid must be at least 64",
        });
    }
    let (phase, samples) = boundary_samples(params, basis, grid_size);
    let step = TAU / grid_size as f64;
    let mut out = [Complex64::new(0.0, 0.0); 2];
    for (ch, slot) in out.iter_mut().enumerate() {
        let (re, im): (Vec<f64>, Vec<f64>) = samples
            .iter()
            .enumerate()
            .map(|(j, g)| {
                let (s, c) = (phase + j as f64 * step).sin_cos();
                (c * g[ch], -s * g[ch])
            })
            .unzip();
        *slot = Complex64::new(
            periodic_quadrature(&re, TAU)? / PI,
            periodic_quadrature(&im, TAU)? / PI,
        );
    }
    Ok(out)
}

/// Boundary points with parallel tangent lines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntipodalPair {
    x: BoundaryPoint,
    y: BoundaryPoint,
}

impl AntipodalPair {
    pub fn new(basis: &ConvexBasis, x: Vec2, y: Vec2) -> Result<Self> {
        let nx = basis.gauss_map(x)?;
        let ny = basis.gauss_map(y)?;
        if vec2::norm(vec2::add(nx, ny)) > ANTIPODAL_TOL {
            return Err(Error::NotAntipodal);
        }
        Ok(Self {
            x: basis.boundary_point(x)?,
            y: basis.boundary_point(y)?,
        })
    }

    /// The pair with outer normals `u` at `x` and `−u` at `y`.
    pub fn from_normal(basis: &ConvexBasis, u: Vec2) -> Result<Self> {
        let (x, y) = basis.antipodal_pair(u)?;
        Ok(Self { x, y })
    }

    pub fn x(&self) -> BoundaryPoint {
        self.x
    }

    pub fn y(&self) -> BoundaryPoint {
        self.y
    }
}

/// Conformal map of the disc onto the strip `{−1 < Re w < 1}`,
/// `w = (2i/π) log((1 + λ)/(1 − λ))`.
pub fn disc_to_strip(lambda: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    Complex64::new(0.0, FRAC_2_PI) * ((one + lambda) / (one - lambda)).ln()
}

/// Inverse of [`disc_to_strip`]: `λ = tanh(−iπw/4)`.
pub fn strip_to_disc(w: Complex64) -> Complex64 {
    (Complex64::new(0.0, -PI / 4.0) * w).tanh()
}

/// The one-dimensional geodesic through the antipodal pair,
/// `f(λ) = (x + y)/2 + ((y − x)/2) · (2i/π) log((1 + λ)/(1 − λ))`.
pub fn antipodal_geodesic(pair: &AntipodalPair, lambda: Complex64) -> Result<[Complex64; 2]> {
    if lambda.norm() >= 1.0 || !lambda.norm().is_finite() {
        return Err(Error::OutsideDisc(lambda.norm()));
    }
    let (x, y) = (pair.x.coords(), pair.y.coords());
    let w = disc_to_strip(lambda);
    Ok([0, 1].map(|j| Complex64::new(0.5 * (x[j] + y[j]), 0.0) + 0.5 * (y[j] - x[j]) * w))
}
