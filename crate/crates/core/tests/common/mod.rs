//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const GK_NODES: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const KRONROD_WEIGHTS: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_728,
];
const GAUSS_WEIGHTS: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Adaptive Gauss–Kronrod (7, 15) quadrature to absolute tolerance `tol`.
pub fn adaptive_quad(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn panel(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
        let (c, h) = (0.5 * (a + b), 0.5 * (b - a));
        let fc = f(c);
        let (mut kronrod, mut gauss) = (KRONROD_WEIGHTS[7] * fc, GAUSS_WEIGHTS[3] * fc);
        for i in 0..7 {
            let s = f(c - h * GK_NODES[i]) + f(c + h * GK_NODES[i]);
            kronrod += KRONROD_WEIGHTS[i] * s;
            if i % 2 == 1 {
                gauss += GAUSS_WEIGHTS[i / 2] * s;
            }
        }
        (kronrod * h, ((kronrod - gauss) * h).abs())
    }
    fn recurse(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
        let (value, err) = panel(f, a, b);
        if err <= tol || err <= 1e-14 * value.abs() || depth == 0 {
            return value;
        }
        let m = 0.5 * (a + b);
        recurse(f, a, m, 0.5 * tol, depth - 1) + recurse(f, m, b, 0.5 * tol, depth - 1)
    }
    recurse(f, a, b, tol, 40)
}

/// `K(k)` from its defining integral.
pub fn elliptic_k_oracle(k: f64) -> f64 {
    adaptive_quad(
        &|t: f64| 1.0 / (1.0 - (k * t.sin()).powi(2)).sqrt(),
        0.0,
        FRAC_PI_2,
        1e-14,
    )
}

/// `E(k)` from its defining integral.
pub fn elliptic_e_oracle(k: f64) -> f64 {
    adaptive_quad(
        &|t: f64| (1.0 - (k * t.sin()).powi(2)).sqrt(),
        0.0,
        FRAC_PI_2,
        1e-14,
    )
}

/// `(1/2π) ∫ P(λ, t) g(t) dt` with the Poisson kernel
/// `P = (1 − |λ|²)/|e^{it} − λ|²`, by adaptive quadrature.
pub fn poisson_oracle(g: &dyn Fn(f64) -> [f64; 2], lambda: Complex64) -> [f64; 2] {
    let kernel = |t: f64| {
        let e = Complex64::from_polar(1.0, t);
        (1.0 - lambda.norm_sqr()) / (e - lambda).norm_sqr()
    };
    [0, 1].map(|ch| adaptive_quad(&|t| kernel(t) * g(t)[ch], 0.0, TAU, 1e-13) / TAU)
}

/// `(4/π) ∫₀^{π/2} (cos θ cos²t, sin θ sin²t) / √(cos²θ cos²t + sin²θ sin²t) dt`.
pub fn psi_oracle(theta: f64) -> (f64, f64) {
    let (s, c) = theta.sin_cos();
    let denom = |t: f64| ((c * t.cos()).powi(2) + (s * t.sin()).powi(2)).sqrt();
    let x = adaptive_quad(&|t| c * t.cos().powi(2) / denom(t), 0.0, FRAC_PI_2, 1e-14);
    let y = adaptive_quad(&|t| s * t.sin().powi(2) / denom(t), 0.0, FRAC_PI_2, 1e-14);
    (4.0 / PI * x, 4.0 / PI * y)
}

pub fn random_unit(rng: &mut impl Rng) -> [f64; 2] {
    let t: f64 = rng.gen_range(0.0..TAU);
    [t.cos(), t.sin()]
}

pub fn random_in_disc(rng: &mut impl Rng, r_max: f64) -> Complex64 {
    let r = r_max * rng.gen::<f64>().sqrt();
    Complex64::from_polar(r, rng.gen_range(0.0..TAU))
}

/// A random zero-mean trigonometric polynomial `𝕋 → ℝ²` of degree at most
/// six, scaled so that `max |g| = 1`.
pub fn random_disc_boundary(rng: &mut impl Rng) -> impl Fn(f64) -> [f64; 2] {
    let degree = rng.gen_range(1..=6);
    let coeffs: Vec<[f64; 4]> = (0..degree)
        .map(|_| [(); 4].map(|_| rng.gen_range(-1.0..1.0)))
        .collect();
    let raw = move |t: f64| {
        coeffs.iter().enumerate().fold([0.0, 0.0], |acc, (k, c)| {
            let (s, co) = ((k + 1) as f64 * t).sin_cos();
            [acc[0] + c[0] * co + c[1] * s, acc[1] + c[2] * co + c[3] * s]
        })
    };
    let modulus = |t: f64| {
        let v = raw(t);
        v[0].hypot(v[1])
    };
    let n = 4096;
    let step = TAU / n as f64;
    let best = (0..n)
        .map(|j| j as f64 * step)
        .max_by(|a, b| modulus(*a).total_cmp(&modulus(*b)))
        .unwrap();
    let (mut lo, mut hi) = (best - step, best + step);
    for _ in 0..100 {
        let (m1, m2) = (lo + (hi - lo) / 3.0, hi - (hi - lo) / 3.0);
        if modulus(m1) < modulus(m2) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    let peak = modulus(0.5 * (lo + hi));
    move |t| {
        let v = raw(t);
        [v[0] / peak, v[1] / peak]
    }
}
