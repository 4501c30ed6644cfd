//! Complete elliptic integrals and the scalar numerics behind the kappa
//! solver.
//!
//! The elliptic integrals use the Legendre convention with modulus `k`:
//!
//! ```text
//! K(k) = ∫₀^{π/2} dt / √(1 − k² sin²t)
//! E(k) = ∫₀^{π/2} √(1 − k² sin²t) dt
//! ```
//!
//! Both are evaluated with the arithmetic-geometric mean, which reaches
//! machine precision in a handful of iterations.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::{Error, Result};

const AGM_EPS: f64 = 1e-15;
const AGM_MAX_ITER: usize = 64;

/// Elliptic modulus `k ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EllipticModulus(f64);

impl EllipticModulus {
    pub fn new(k: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&k) {
            Ok(Self(k))
        } else {
            Err(Error::Modulus(k))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Complementary modulus `√(1 − k²)`, computed without cancellation.
    pub fn complement(self) -> f64 {
        ((1.0 - self.0) * (1.0 + self.0)).sqrt()
    }

    /// Complete integral of the first kind. Fails at `k = 1`.
    pub fn first_kind(self) -> Result<f64> {
        if self.0 == 1.0 {
            return Err(Error::Modulus(1.0));
        }
        Ok(complete_integrals(self.0, self.complement()).0)
    }

    pub fn second_kind(self) -> f64 {
        complete_integrals(self.0, self.complement()).1
    }
}

impl TryFrom<f64> for EllipticModulus {
    type Error = Error;

    fn try_from(k: f64) -> Result<Self> {
        Self::new(k)
    }
}

/// Complete elliptic integral of the first kind `K(k)` for `0 ≤ k < 1`.
pub fn elliptic_k(k: f64) -> Result<f64> {
    EllipticModulus::new(k)?.first_kind()
}

/// Complete elliptic integral of the second kind `E(k)` for `0 ≤ k ≤ 1`.
pub fn elliptic_e(k: f64) -> Result<f64> {
    Ok(EllipticModulus::new(k)?.second_kind())
}

/// `(K, E)` from the modulus and its complement.
///
/// Callers that know `k' = √(1 − k²)` exactly (for instance `k' = tan θ`)
/// should pass it directly: near `k = 1` recomputing it from `k` loses
/// every significant digit of `K`.
pub(crate) fn complete_integrals(k: f64, k_prime: f64) -> (f64, f64) {
    if k == 0.0 {
        return (FRAC_PI_2, FRAC_PI_2);
    }
    if k_prime == 0.0 {
        return (f64::INFINITY, 1.0);
    }
    let mut a = 1.0;
    let mut b = k_prime;
    let mut c = k;
    // E/K = 1 − Σ 2^{n−1} c_n²
    let mut weight = 0.5;
    let mut sum = weight * c * c;
    for _ in 0..AGM_MAX_ITER {
        if (a - b).abs() <= AGM_EPS * a {
            break;
        }
        let a_next = 0.5 * (a + b);
        c = 0.5 * (a - b);
        b = (a * b).sqrt();
        a = a_next;
        weight *= 2.0;
        sum += weight * c * c;
    }
    let big_k = PI / (2.0 * a);
    (big_k, big_k * (1.0 - sum))
}

/// Trapezoidal rule over one period of a periodic function sampled on a
/// uniform grid. Spectrally accurate for smooth periodic integrands.
pub fn periodic_quadrature(samples: &[f64], period: f64) -> Result<f64> {
    if samples.len() < 4 {
        return Err(Error::TooFewSamples(samples.len()));
    }
    let sum: f64 = samples.iter().sum();
    Ok(sum * period / samples.len() as f64)
}

/// Bisection for a continuous, strictly monotone `g` with a sign change on
/// `[lo, hi]`. Returns the midpoint of a bracket no wider than `tol`.
pub fn find_root_monotone<F>(mut g: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let (mut lo, mut hi) = (lo.min(hi), lo.max(hi));
    let mut g_lo = g(lo);
    let g_hi = g(hi);
    if g_lo == 0.0 {
        return Ok(lo);
    }
    if g_hi == 0.0 {
        return Ok(hi);
    }
    if g_lo.signum() == g_hi.signum() || g_lo.is_nan() || g_hi.is_nan() {
        return Err(Error::NoSignChange { lo, hi });
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let g_mid = g(mid);
        if g_mid == 0.0 {
            return Ok(mid);
        }
        if g_mid.signum() == g_lo.signum() {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
