//! Harmonic extensions of planar boundary data and a numerical instrument
//! for bivalent harmonic maps of the disc.
//!
//! Boundary data on a uniform grid of `N` angles is expanded in a discrete
//! Fourier series. Each channel `u_j` of the extension is stored as the real
//! part of its analytic completion
//!
//! ```text
//! h_j(z) = c₀ + 2 Σ_{k=1}^{N/2−1} c_k z^k + c_{N/2} z^{N/2},
//! ```
//!
//! which is harmonic by construction and reproduces the samples at the grid
//! nodes. Derivatives follow term by term: `u_x = Re h′`, `u_y = −Im h′`.

use std::collections::{HashMap, VecDeque};
use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;
use serde::Serialize;

use crate::basis::ConvexBasis;
use crate::geodesic::{boundary_samples, GeodesicParams};
use crate::kobayashi::WirtingerPair;
use crate::vec2::{self, Vec2};
use crate::{Error, Result};

pub const MIN_BOUNDARY_GRID: usize = 64;
pub const MIN_PREIMAGE_RESOLUTION: usize = 64;
pub const MIN_DEGENERACY_RESOLUTION: usize = 128;
/// Targets swept by [`bivalence_experiment`].
pub const SWEEP_TARGETS: usize = 500;
/// Refined roots with a larger residual are discarded.
const ROOT_RESIDUAL: f64 = 1e-9;
/// Trailing Fourier coefficients below this fraction of the largest are
/// dropped.
const TAIL_CUTOFF: f64 = 1e-15;

/// Samples of `f: 𝕋 → ℝ²` at `phase + 2πj/N`, `N` a power of two `≥ 64`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryMap {
    samples: Vec<Vec2>,
    phase: f64,
}

impl BoundaryMap {
    pub fn new(samples: Vec<Vec2>) -> Result<Self> {
        Self::with_phase(samples, 0.0)
    }

    pub fn with_phase(samples: Vec<Vec2>, phase: f64) -> Result<Self> {
        let n = samples.len();
        if n < MIN_BOUNDARY_GRID || !n.is_power_of_two() {
            return Err(Error::Grid {
                got: n,
                reason: "boundary grid must be a power of two and at least 64",
            });
        }
        if !phase.is_finite() || samples.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { samples, phase })
    }

    /// Samples `f(t)` on `n` equally spaced angles starting at `0`.
    pub fn from_fn(n: usize, f: impl Fn(f64) -> Vec2) -> Result<Self> {
        let step = TAU / n as f64;
        Self::new((0..n).map(|j| f(j as f64 * step)).collect())
    }

    /// Boundary values of the real part of a geodesic.
    pub fn from_geodesic(params: &GeodesicParams, basis: &ConvexBasis, n: usize) -> Result<Self> {
        if n < MIN_BOUNDARY_GRID || !n.is_power_of_two() {
            return Err(Error::Grid {
                got: n,
                reason: "boundary grid must be a power of two and at least 64",
            });
        }
        let (phase, samples) = boundary_samples(params, basis, n);
        Self::with_phase(samples, phase)
    }

    pub fn samples(&self) -> &[Vec2] {
        &self.samples
    }

    pub fn grid_size(&self) -> usize {
        self.samples.len()
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn angle(&self, j: usize) -> f64 {
        self.phase + TAU * j as f64 / self.samples.len() as f64
    }

    /// Angles where the boundary curve reverses direction.
    pub fn turning_angles(&self) -> Vec<f64> {
        let n = self.samples.len();
        let step = |j: usize| vec2::sub(self.samples[(j + 1) % n], self.samples[j % n]);
        (0..n)
            .filter(|&j| vec2::dot(step(j + n - 1), step(j)) < 0.0)
            .map(|j| self.angle(j))
            .collect()
    }
}

/// First derivatives of `u = (u₁, u₂)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Derivatives {
    /// `[u₁ₓ, u₂ₓ]`
    pub dx: Vec2,
    /// `[u₁ᵧ, u₂ᵧ]`
    pub dy: Vec2,
}

impl Derivatives {
    pub fn jacobian(&self) -> f64 {
        self.dx[0] * self.dy[1] - self.dy[0] * self.dx[1]
    }

    /// `∂u = ½(u₁ₓ − u₂ᵧ + i(u₂ₓ + u₁ᵧ))`, `∂̄u = ½(u₁ₓ + u₂ᵧ + i(u₂ₓ − u₁ᵧ))`.
    pub fn wirtinger(&self) -> WirtingerPair {
        let (dx, dy) = (self.dx, self.dy);
        WirtingerPair {
            d: 0.5 * Complex64::new(dx[0] - dy[1], dx[1] + dy[0]),
            dbar: 0.5 * Complex64::new(dx[0] + dy[1], dx[1] - dy[0]),
        }
    }
}

/// A harmonic map `𝔻 → ℝ²` stored through the Taylor coefficients of the
/// analytic completions of its two channels.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicField {
    coeffs: [Vec<Complex64>; 2],
}

impl HarmonicField {
    /// From Taylor coefficients `h_j(z) = Σ_k coeffs[j][k] z^k`; the field is
    /// `u_j = Re h_j`.
    pub fn from_taylor(coeffs: [Vec<Complex64>; 2]) -> Self {
        Self { coeffs }
    }

    pub fn taylor(&self) -> &[Vec<Complex64>; 2] {
        &self.coeffs
    }

    fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64, Complex64) {
        let zero = Complex64::new(0.0, 0.0);
        let (mut h, mut dh, mut ddh) = (zero, zero, zero);
        for &c in coeffs.iter().rev() {
            ddh = ddh * z + 2.0 * dh;
            dh = dh * z + h;
            h = h * z + c;
        }
        (h, dh, ddh)
    }

    /// Analytic completion `f = u + iv` with `v(0) = 0`.
    pub fn analytic(&self, lambda: Complex64) -> [Complex64; 2] {
        [0, 1].map(|j| Self::horner(&self.coeffs[j], lambda).0)
    }

    /// `u(λ)` for `|λ| ≤ 1`.
    pub fn value(&self, lambda: Complex64) -> Vec2 {
        let f = self.analytic(lambda);
        [f[0].re, f[1].re]
    }

    fn value_and_derivatives(&self, lambda: Complex64) -> (Vec2, Derivatives) {
        let (h1, d1, _) = Self::horner(&self.coeffs[0], lambda);
        let (h2, d2, _) = Self::horner(&self.coeffs[1], lambda);
        (
            [h1.re, h2.re],
            Derivatives {
                dx: [d1.re, d2.re],
                dy: [-d1.im, -d2.im],
            },
        )
    }

    pub fn derivatives(&self, lambda: Complex64) -> Result<Derivatives> {
        check_inside(lambda)?;
        Ok(self.value_and_derivatives(lambda).1)
    }

    /// `J = Im(h₁′ conj h₂′)` and its gradient.
    fn jacobian_with_gradient(&self, lambda: Complex64) -> (f64, Vec2) {
        let (_, d1, dd1) = Self::horner(&self.coeffs[0], lambda);
        let (_, d2, dd2) = Self::horner(&self.coeffs[1], lambda);
        let jac = (d1 * d2.conj()).im;
        let gx = (dd1 * d2.conj() + d1 * dd2.conj()).im;
        let gy = (dd1 * d2.conj() - d1 * dd2.conj()).re;
        (jac, [gx, gy])
    }
}

fn check_inside(lambda: Complex64) -> Result<()> {
    let r = lambda.norm();
    if r < 1.0 {
        Ok(())
    } else {
        Err(Error::OutsideDisc(r))
    }
}

/// Harmonic extension of boundary samples by their discrete Fourier series.
pub fn harmonic_extend(bmap: &BoundaryMap) -> HarmonicField {
    let n = bmap.grid_size();
    let half = n / 2;
    let fft = FftPlanner::<f64>::new().plan_fft_forward(n);
    let coeffs = [0, 1].map(|ch| {
        let mut buf: Vec<Complex64> = bmap
            .samples
            .iter()
            .map(|g| Complex64::new(g[ch], 0.0))
            .collect();
        fft.process(&mut buf);
        let mut c: Vec<Complex64> = (0..=half)
            .map(|k| {
                let c = buf[k] / n as f64 * Complex64::from_polar(1.0, -(k as f64) * bmap.phase);
                if k == 0 || k == half {
                    c
                } else {
                    2.0 * c
                }
            })
            .collect();
        // a tail below rounding noise only costs evaluation time
        let scale = c.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let keep = c
            .iter()
            .rposition(|z| z.norm() > TAIL_CUTOFF * scale)
            .map_or(1, |k| k + 1);
        c.truncate(keep);
        c
    });
    HarmonicField { coeffs }
}

/// `(∂u(λ), ∂̄u(λ))`.
pub fn wirtinger_at(field: &HarmonicField, lambda: Complex64) -> Result<WirtingerPair> {
    Ok(field.derivatives(lambda)?.wirtinger())
}

/// `u₁ₓu₂ᵧ − u₁ᵧu₂ₓ` at `λ`.
pub fn jacobian_det(field: &HarmonicField, lambda: Complex64) -> Result<f64> {
    Ok(field.derivatives(lambda)?.jacobian())
}

/// `u` sampled on a polar grid of `resolution` radii `(i + ½)/resolution`
/// and `resolution` angles `2πj/resolution`.
#[derive(Debug, Clone)]
pub struct ImageGrid {
    resolution: usize,
    nodes: Vec<Complex64>,
    values: Vec<Vec2>,
}

impl ImageGrid {
    pub fn sample(field: &HarmonicField, resolution: usize) -> Result<Self> {
        if resolution < MIN_PREIMAGE_RESOLUTION {
            return Err(Error::Grid {
                got: resolution,
                reason: "preimage grid needs resolution at least 64",
            });
        }
        let nodes: Vec<Complex64> = (0..resolution * resolution)
            .map(|idx| {
                let (i, j) = (idx / resolution, idx % resolution);
                let r = (i as f64 + 0.5) / resolution as f64;
                Complex64::from_polar(r, TAU * j as f64 / resolution as f64)
            })
            .collect();
        let values = nodes.par_iter().map(|&z| field.value(z)).collect();
        Ok(Self {
            resolution,
            nodes,
            values,
        })
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn values(&self) -> &[Vec2] {
        &self.values
    }

    pub fn nodes(&self) -> &[Complex64] {
        &self.nodes
    }

    fn neighbours(&self, idx: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.resolution;
        let (i, j) = ((idx / n) as isize, (idx % n) as isize);
        (-1isize..=1)
            .flat_map(move |di| (-1isize..=1).map(move |dj| (di, dj)))
            .filter(|&d| d != (0, 0))
            .filter_map(move |(di, dj)| {
                let ii = i + di;
                if ii < 0 || ii >= n as isize {
                    return None;
                }
                let jj = (j + dj).rem_euclid(n as isize);
                Some(ii as usize * n + jj as usize)
            })
    }

    /// Distinct preimages of `target`, refined from the grid.
    ///
    /// Grid nodes within `radius_tol` of the target are grouped into
    /// connected clusters; every local minimum of the residual inside a
    /// cluster seeds a damped Newton refinement, and refined roots closer
    /// than two radial grid steps are merged.
    pub fn preimages(
        &self,
        field: &HarmonicField,
        target: Vec2,
        radius_tol: f64,
    ) -> Vec<Complex64> {
        let residual: Vec<f64> = self.values.iter().map(|&v| vec2::dist(v, target)).collect();
        let hit: Vec<bool> = residual.iter().map(|&d| d < radius_tol).collect();
        let mut label = vec![usize::MAX; hit.len()];
        let mut seeds = Vec::new();
        let mut cluster = 0;
        for start in 0..hit.len() {
            if !hit[start] || label[start] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            label[start] = cluster;
            while let Some(idx) = queue.pop_front() {
                let is_min = self
                    .neighbours(idx)
                    .filter(|&nb| hit[nb])
                    .all(|nb| residual[nb] >= residual[idx]);
                if is_min {
                    seeds.push(idx);
                }
                for nb in self.neighbours(idx) {
                    if hit[nb] && label[nb] == usize::MAX {
                        label[nb] = cluster;
                        queue.push_back(nb);
                    }
                }
            }
            cluster += 1;
        }
        seeds.sort_unstable();

        let merge = 2.0 / self.resolution as f64;
        let mut roots: Vec<Complex64> = Vec::new();
        for idx in seeds {
            if let Some(z) = refine_preimage(field, target, self.nodes[idx]) {
                if roots.iter().all(|r| (r - z).norm() >= merge) {
                    roots.push(z);
                }
            }
        }
        roots
    }
}

/// Levenberg–Marquardt on `‖u(λ) − target‖²`, restricted to the disc.
fn refine_preimage(field: &HarmonicField, target: Vec2, start: Complex64) -> Option<Complex64> {
    let mut z = start;
    let (mut val, mut der) = field.value_and_derivatives(z);
    let mut res = vec2::sub(val, target);
    let mut cost = vec2::dot(res, res);
    let mut mu = 1e-6;
    for _ in 0..200 {
        if cost.sqrt() < 1e-14 {
            break;
        }
        // JᵀJ + μI with J = [[u₁ₓ, u₁ᵧ], [u₂ₓ, u₂ᵧ]]
        let (a, b) = ([der.dx[0], der.dy[0]], [der.dx[1], der.dy[1]]);
        let g = [
            -(a[0] * res[0] + b[0] * res[1]),
            -(a[1] * res[0] + b[1] * res[1]),
        ];
        let m00 = a[0] * a[0] + b[0] * b[0];
        let m11 = a[1] * a[1] + b[1] * b[1];
        let m01 = a[0] * a[1] + b[0] * b[1];
        let damp = mu * (m00 + m11).max(1e-300);
        let det = (m00 + damp) * (m11 + damp) - m01 * m01;
        if det == 0.0 || !det.is_finite() {
            break;
        }
        let step = Complex64::new(
            ((m11 + damp) * g[0] - m01 * g[1]) / det,
            ((m00 + damp) * g[1] - m01 * g[0]) / det,
        );
        if step.norm() < 1e-16 {
            break;
        }
        let trial = z + step;
        if trial.norm() < 1.0 {
            let (tv, td) = field.value_and_derivatives(trial);
            let tres = vec2::sub(tv, target);
            let tcost = vec2::dot(tres, tres);
            if tcost < cost {
                z = trial;
                (val, der, res, cost) = (tv, td, tres, tcost);
                mu = (mu / 3.0).max(1e-12);
                continue;
            }
        }
        mu *= 4.0;
        if mu > 1e12 {
            break;
        }
    }
    let _ = val;
    (cost.sqrt() < ROOT_RESIDUAL).then_some(z)
}

/// Number of distinct preimages of `target` found on a polar grid.
pub fn count_preimages(
    field: &HarmonicField,
    target: Vec2,
    resolution: usize,
    radius_tol: f64,
) -> Result<usize> {
    let grid = ImageGrid::sample(field, resolution)?;
    Ok(grid.preimages(field, target, radius_tol).len())
}

/// Default degeneracy threshold for a given grid resolution.
pub fn default_degeneracy_tol(resolution: usize) -> f64 {
    10.0 / resolution as f64
}

/// Points of the disc where the Jacobian vanishes, ordered along a chain.
///
/// Nodes of a `resolution × resolution` Cartesian grid with `|J| < tol` are
/// projected onto `J = 0` by Newton steps along `∇J`, thinned to one point
/// per grid step, and chained by nearest neighbours starting from an
/// extremity.
pub fn degeneracy_curve(
    field: &HarmonicField,
    resolution: usize,
    tol: f64,
) -> Result<Vec<Complex64>> {
    if resolution < MIN_DEGENERACY_RESOLUTION {
        return Err(Error::Grid {
            got: resolution,
            reason: "degeneracy grid needs resolution at least 128",
        });
    }
    let h = 2.0 / resolution as f64;
    let r_max = 1.0 - 0.5 / resolution as f64;
    let nodes: Vec<Complex64> = (0..resolution * resolution)
        .map(|idx| {
            let (i, j) = (idx / resolution, idx % resolution);
            Complex64::new(-1.0 + (j as f64 + 0.5) * h, -1.0 + (i as f64 + 0.5) * h)
        })
        .filter(|z| z.norm() < r_max)
        .collect();
    let projected: Vec<Option<Complex64>> = nodes
        .par_iter()
        .map(|&z| {
            let (jac, _) = field.jacobian_with_gradient(z);
            if jac.abs() >= tol {
                return None;
            }
            project_to_degeneracy(field, z, r_max, 2.0 * h)
        })
        .collect();

    // one representative per grid cell
    let mut cells: HashMap<(i64, i64), Complex64> = HashMap::new();
    let mut kept = Vec::new();
    for z in projected.into_iter().flatten() {
        let key = ((z.re / h).floor() as i64, (z.im / h).floor() as i64);
        let near = (-1..=1).any(|dx| {
            (-1..=1).any(|dy| {
                cells
                    .get(&(key.0 + dx, key.1 + dy))
                    .is_some_and(|w| (w - z).norm() < h)
            })
        });
        if !near {
            cells.insert(key, z);
            kept.push(z);
        }
    }
    Ok(chain_nearest(kept))
}

fn project_to_degeneracy(
    field: &HarmonicField,
    start: Complex64,
    r_max: f64,
    max_move: f64,
) -> Option<Complex64> {
    let mut z = start;
    for _ in 0..30 {
        let (jac, grad) = field.jacobian_with_gradient(z);
        if jac.abs() < 1e-13 {
            return Some(z);
        }
        let g2 = vec2::dot(grad, grad);
        if g2 == 0.0 || !g2.is_finite() {
            return None;
        }
        z -= Complex64::new(grad[0], grad[1]) * (jac / g2);
        if z.norm() >= r_max || (z - start).norm() > max_move {
            return None;
        }
    }
    let (jac, _) = field.jacobian_with_gradient(z);
    (jac.abs() < 1e-10).then_some(z)
}

fn chain_nearest(mut points: Vec<Complex64>) -> Vec<Complex64> {
    if points.len() < 2 {
        return points;
    }
    let farthest = |from: Complex64, pts: &[Complex64]| {
        pts.iter()
            .enumerate()
            .max_by(|a, b| (a.1 - from).norm().total_cmp(&(b.1 - from).norm()))
            .map(|(i, _)| i)
            .unwrap_or(0)
    };
    let start = farthest(points[0], &points);
    let mut chain = vec![points.swap_remove(start)];
    while !points.is_empty() {
        let last = *chain.last().unwrap();
        let next = points
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1 - last).norm().total_cmp(&(b.1 - last).norm()))
            .map(|(i, _)| i)
            .unwrap();
        chain.push(points.swap_remove(next));
    }
    chain
}

/// Outcome of [`bivalence_experiment`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BivalenceReport {
    pub max_preimage_count: usize,
    /// Ordered points of the degeneracy chain, as `[re, im]`.
    pub degeneracy_points: Vec<[f64; 2]>,
    /// Probe points inside the convex hull of the boundary image that no
    /// image sample comes near.
    pub excluded_region_witnesses: Vec<[f64; 2]>,
    /// Distances from the chain ends to the two turning points of the
    /// boundary map; empty when either is missing.
    pub endpoint_gaps: Vec<f64>,
}

/// Image-space tolerance used by the experiment at a given resolution.
pub fn experiment_radius_tol(resolution: usize) -> f64 {
    16.0 / resolution as f64
}

/// Deterministic sweep of interior points: a sunflower spiral of `count`
/// points filling `|λ| < 0.95`.
pub fn sweep_points(count: usize) -> Vec<Complex64> {
    let golden = PI * (3.0 - 5f64.sqrt());
    (0..count)
        .map(|k| {
            let r = 0.95 * ((k as f64 + 0.5) / count as f64).sqrt();
            Complex64::from_polar(r, golden * k as f64)
        })
        .collect()
}

/// Runs the bivalence checks on the harmonic extension of `bmap`.
///
/// Maps that violate the hypotheses are not rejected; the report records
/// what was found.
pub fn bivalence_experiment(bmap: &BoundaryMap, resolution: usize) -> Result<BivalenceReport> {
    if resolution < MIN_DEGENERACY_RESOLUTION {
        return Err(Error::Grid {
            got: resolution,
            reason: "experiment needs resolution at least 128",
        });
    }
    let field = harmonic_extend(bmap);
    let grid = ImageGrid::sample(&field, resolution)?;
    let radius_tol = experiment_radius_tol(resolution);

    let max_preimage_count = sweep_points(SWEEP_TARGETS)
        .par_iter()
        .map(|&z| grid.preimages(&field, field.value(z), radius_tol).len())
        .max()
        .unwrap_or(0);

    let chain = degeneracy_curve(&field, resolution, default_degeneracy_tol(resolution))?;
    let witnesses = excluded_region_witnesses(bmap, &grid, radius_tol);

    let turning = bmap.turning_angles();
    let endpoint_gaps = match (chain.first(), chain.last(), turning.as_slice()) {
        (Some(&s), Some(&e), &[tp, tq]) => {
            let (p, q) = (
                Complex64::from_polar(1.0, tp),
                Complex64::from_polar(1.0, tq),
            );
            let direct = (s - p).norm() + (e - q).norm();
            let swapped = (e - p).norm() + (s - q).norm();
            if direct <= swapped {
                vec![(s - p).norm(), (e - q).norm()]
            } else {
                vec![(e - p).norm(), (s - q).norm()]
            }
        }
        _ => Vec::new(),
    };

    Ok(BivalenceReport {
        max_preimage_count,
        degeneracy_points: chain.iter().map(|z| [z.re, z.im]).collect(),
        excluded_region_witnesses: witnesses,
        endpoint_gaps,
    })
}

/// Probe points of a 64 × 64 lattice inside the convex hull of the boundary
/// image, at least `radius_tol` from the boundary curve and from every image
/// sample.
fn excluded_region_witnesses(
    bmap: &BoundaryMap,
    grid: &ImageGrid,
    radius_tol: f64,
) -> Vec<[f64; 2]> {
    const PROBES: usize = 64;
    let boundary = bmap.samples();
    let hull = convex_hull(boundary);
    if hull.len() < 3 {
        return Vec::new();
    }
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in &hull {
        for c in 0..2 {
            lo[c] = lo[c].min(p[c]);
            hi[c] = hi[c].max(p[c]);
        }
    }

    let cell = radius_tol;
    let key = |p: Vec2| ((p[0] / cell).floor() as i64, (p[1] / cell).floor() as i64);
    let mut buckets: HashMap<(i64, i64), Vec<Vec2>> = HashMap::new();
    for &v in grid.values() {
        buckets.entry(key(v)).or_default().push(v);
    }
    let covered = |p: Vec2| {
        let (kx, ky) = key(p);
        (-1..=1).any(|dx| {
            (-1..=1).any(|dy| {
                buckets
                    .get(&(kx + dx, ky + dy))
                    .is_some_and(|vs| vs.iter().any(|&v| vec2::dist(v, p) <= radius_tol))
            })
        })
    };
    let near_boundary = |p: Vec2| {
        let n = boundary.len();
        (0..n).any(|j| vec2::dist_to_segment(p, boundary[j], boundary[(j + 1) % n]) <= radius_tol)
    };

    let probes: Vec<Vec2> = (0..PROBES * PROBES)
        .map(|idx| {
            let (i, j) = (idx / PROBES, idx % PROBES);
            [
                lo[0] + (hi[0] - lo[0]) * (j as f64 + 0.5) / PROBES as f64,
                lo[1] + (hi[1] - lo[1]) * (i as f64 + 0.5) / PROBES as f64,
            ]
        })
        .collect();
    probes
        .par_iter()
        .filter(|&&p| inside_convex(&hull, p) && !covered(p) && !near_boundary(p))
        .copied()
        .collect()
}

/// Counter-clockwise convex hull (monotone chain).
fn convex_hull(points: &[Vec2]) -> Vec<Vec2> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let turn = |o: Vec2, a: Vec2, b: Vec2| vec2::cross(vec2::sub(a, o), vec2::sub(b, o));
    let mut hull: Vec<Vec2> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Vec2>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2
                && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

fn inside_convex(hull: &[Vec2], p: Vec2) -> bool {
    let n = hull.len();
    (0..n).all(|i| vec2::cross(vec2::sub(hull[(i + 1) % n], hull[i]), vec2::sub(p, hull[i])) > 0.0)
}
