//! Shared numeric primitives: grids, composite Gauss–Legendre quadrature,
//! Fourier transforms and Fourier series coefficients, and `C^∞` bumps.
//!
//! The transform convention is `f̂(y) = ∫ e^{-iyx} f(x) dx` on the line and
//! `f̃(k) = (1/2π) ∫₀^{2π} f(t) e^{-ikt} dt` for `2π`-periodic functions.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance for identities that hold in exact algebra.
pub const TOL_ALGEBRA: f64 = 1e-12;
/// Tolerance for closed-form-vs-closed-form comparisons.
pub const TOL_CLOSED_FORM: f64 = 1e-10;
/// Tolerance for quadrature-backed comparisons.
pub const TOL_QUADRATURE: f64 = 1e-6;

/// `e^{it}`.
#[inline]
pub fn cis(t: f64) -> Complex64 {
    Complex64::from_polar(1.0, t)
}

// ---------------------------------------------------------------------------
// Gauss–Legendre rule
// ---------------------------------------------------------------------------

const GL_ORDER: usize = 16;

/// Legendre `P_n` and `P_n'` at `x` by the three-term recurrence.
fn legendre_with_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 2..=n {
        let kf = k as f64;
        let p_next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = p_next;
    }
    let dp = (n as f64) * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// Nodes and weights of the 16-point rule on `[-1, 1]`.
fn gl_rule() -> &'static ([f64; GL_ORDER], [f64; GL_ORDER]) {
    static RULE: OnceLock<([f64; GL_ORDER], [f64; GL_ORDER])> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = GL_ORDER;
        let mut nodes = [0.0; GL_ORDER];
        let mut weights = [0.0; GL_ORDER];
        for i in 0..n {
            // Chebyshev-like initial guess, then Newton.
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..64 {
                let (p, dp) = legendre_with_deriv(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_deriv(n, x);
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        (nodes, weights)
    })
}

/// Abscissae and weights of the composite rule on `[lo, hi]`.
fn panel_nodes(lo: f64, hi: f64, panels: usize) -> Vec<(f64, f64)> {
    let (nodes, weights) = gl_rule();
    let width = (hi - lo) / panels as f64;
    let half = 0.5 * width;
    let mut out = Vec::with_capacity(panels * GL_ORDER);
    for p in 0..panels {
        let center = lo + (p as f64 + 0.5) * width;
        for i in 0..GL_ORDER {
            out.push((center + half * nodes[i], half * weights[i]));
        }
    }
    out
}

/// Composite 16-point Gauss–Legendre approximation of `∫_lo^hi f`.
pub fn quad_integrate<F>(f: F, lo: f64, hi: f64, panels: usize) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    if !(lo < hi) {
        return Err(Error::contract(format!(
            "quad_integrate requires lo < hi, got [{lo}, {hi}]"
        )));
    }
    if panels == 0 {
        return Err(Error::contract("quad_integrate requires panels >= 1"));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for (x, w) in panel_nodes(lo, hi, panels) {
        let v = f(x);
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(Error::NonFinite { abscissa: x });
        }
        acc += w * v;
    }
    Ok(acc)
}

/// `∫_lo^hi e^{-iyx} f(x) dx` for every `y` in `ys`.
///
/// The integrand is evaluated once per quadrature node and reused across all
/// frequencies. `panels` must resolve both `f` and the fastest oscillation
/// (roughly five panels per unit length per unit of `max |y|`).
pub fn transform_fn<F>(f: F, lo: f64, hi: f64, panels: usize, ys: &[f64]) -> Result<Vec<Complex64>>
where
    F: Fn(f64) -> Complex64,
{
    transform_fn_segments(f, &[(lo, hi, panels)], ys)
}

/// [`transform_fn`] over a union of disjoint intervals; regions where the
/// integrand is known to vanish can simply be left out.
pub fn transform_fn_segments<F>(
    f: F,
    segments: &[(f64, f64, usize)],
    ys: &[f64],
) -> Result<Vec<Complex64>>
where
    F: Fn(f64) -> Complex64,
{
    let mut samples = Vec::new();
    for &(lo, hi, panels) in segments {
        if !(lo < hi) {
            return Err(Error::contract(format!(
                "transform segment requires lo < hi, got [{lo}, {hi}]"
            )));
        }
        if panels == 0 {
            return Err(Error::contract("transform segments require panels >= 1"));
        }
        for (x, w) in panel_nodes(lo, hi, panels) {
            let v = f(x);
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::NonFinite { abscissa: x });
            }
            samples.push((x, w * v));
        }
    }

    // On a uniformly spaced frequency grid the phasor e^{-iyx} advances by a
    // constant rotation per step, so each node needs one sin/cos per block
    // instead of one per frequency. The block length is capped so that the
    // accumulated spacing deviation times max|x| stays below 1e-12 radians.
    let x_max = samples.iter().fold(0.0f64, |m, &(x, _)| m.max(x.abs()));
    let block = (ys.len() >= 16).then(|| ys[1] - ys[0]).and_then(|delta| {
        let dev = ys
            .windows(2)
            .map(|w| (w[1] - w[0] - delta).abs())
            .fold(0.0f64, f64::max);
        if dev > 1e-12 * delta.abs().max(1e-300) {
            return None; // not uniform
        }
        let cap = if dev * x_max > 0.0 { 1e-12 / (dev * x_max) } else { 256.0 };
        Some((delta, (cap as usize).clamp(16, 256)))
    });
    let mut out = vec![Complex64::new(0.0, 0.0); ys.len()];
    match block {
        Some((delta, block)) => {
            for &(x, wv) in &samples {
                let step = cis(-delta * x);
                let mut j = 0;
                while j < ys.len() {
                    let mut phase = cis(-ys[j] * x);
                    let end = (j + block).min(ys.len());
                    for slot in &mut out[j..end] {
                        *slot += wv * phase;
                        phase *= step;
                    }
                    j = end;
                }
            }
        }
        None => {
            for (slot, &y) in out.iter_mut().zip(ys) {
                *slot = samples.iter().map(|&(x, wv)| wv * cis(-y * x)).sum();
            }
        }
    }
    Ok(out)
}

/// Panel count that resolves `e^{-iyx}` on an interval of length `len`
/// for `|y| <= max_abs_y`.
pub fn oscillation_panels(len: f64, max_abs_y: f64) -> usize {
    ((len * (0.75 + max_abs_y / 5.0)).ceil() as usize).max(8)
}

/// Panel count that additionally resolves integrand features (bumps) of
/// width `feature_width`.
pub fn feature_panels(len: f64, feature_width: f64, max_abs_y: f64) -> usize {
    let feat = (len * 8.0 / feature_width).ceil() as usize;
    oscillation_panels(len, max_abs_y).max(feat)
}

/// `f̃(k) = (1/2π) ∫₀^{2π} f(t) e^{-ikt} dt`.
pub fn fourier_coeff_periodic<F>(f: F, k: i64, panels: usize) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    let v = quad_integrate(|t| f(t) * cis(-(k as f64) * t), 0.0, 2.0 * PI, panels)?;
    Ok(v / (2.0 * PI))
}

/// All `f̃(k)` for `|k| <= k_max`, sharing one set of node evaluations.
///
/// Integration runs over `[lo, hi] ⊆ [0, 2π]`, which must contain the
/// support of `f` within the base period. Index `i` holds `k = i - k_max`.
pub fn fourier_coeffs_batch<F>(
    f: F,
    lo: f64,
    hi: f64,
    k_max: i64,
    panels: usize,
) -> Result<Vec<Complex64>>
where
    F: Fn(f64) -> Complex64,
{
    if !(0.0 <= lo && lo < hi && hi <= 2.0 * PI + 1e-12) {
        return Err(Error::contract(format!(
            "fourier_coeffs_batch requires 0 <= lo < hi <= 2π, got [{lo}, {hi}]"
        )));
    }
    let mut samples = Vec::with_capacity(panels * GL_ORDER);
    for (x, w) in panel_nodes(lo, hi, panels) {
        let v = f(x);
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(Error::NonFinite { abscissa: x });
        }
        samples.push((x, w * v));
    }
    let scale = 1.0 / (2.0 * PI);
    Ok((-k_max..=k_max)
        .map(|k| {
            samples
                .iter()
                .map(|&(x, wv)| wv * cis(-(k as f64) * x))
                .sum::<Complex64>()
                * scale
        })
        .collect())
}

// ---------------------------------------------------------------------------
// Grids and sampled functions
// ---------------------------------------------------------------------------

/// Uniform sampling grid with a fractional in-cell offset.
///
/// Sample points are `lo + (i + offset)·(hi - lo)/count` for `i < count`.
/// The default offset `0.5` keeps samples off interval endpoints, step
/// discontinuities, and binary rationals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
    pub offset: f64,
}

impl Grid {
    pub fn new(lo: f64, hi: f64, count: usize, offset: f64) -> Result<Self> {
        if !(lo < hi) {
            return Err(Error::contract(format!("grid requires lo < hi, got [{lo}, {hi}]")));
        }
        if count < 2 {
            return Err(Error::contract("grid requires count >= 2"));
        }
        if !(0.0..1.0).contains(&offset) {
            return Err(Error::contract(format!(
                "grid offset must lie in [0, 1), got {offset}"
            )));
        }
        Ok(Grid { lo, hi, count, offset })
    }

    /// Default frequency grid for Fourier-side checks: `[-50, 50]`, 4001
    /// points, offset 1/2 (avoids `y = 0` and dyadic coincidences).
    pub fn default_y() -> Self {
        Grid { lo: -50.0, hi: 50.0, count: 4001, offset: 0.5 }
    }

    pub fn step(&self) -> f64 {
        (self.hi - self.lo) / self.count as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        self.lo + (i as f64 + self.offset) * self.step()
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.count).map(|i| self.point(i)).collect()
    }
}

/// Complex samples on a [`Grid`], optionally tagged with a support interval.
///
/// Values at sample points outside the support interval must be exactly zero.
#[derive(Debug, Clone)]
pub struct SampledFunction {
    pub grid: Grid,
    pub values: Vec<Complex64>,
    pub support_hint: Option<(f64, f64)>,
}

impl SampledFunction {
    pub fn new(grid: Grid, values: Vec<Complex64>, support_hint: Option<(f64, f64)>) -> Result<Self> {
        if values.len() != grid.count {
            return Err(Error::contract(format!(
                "value count {} does not match grid count {}",
                values.len(),
                grid.count
            )));
        }
        Ok(SampledFunction { grid, values, support_hint })
    }

    pub fn from_fn<F>(grid: Grid, f: F, support_hint: Option<(f64, f64)>) -> Self
    where
        F: Fn(f64) -> Complex64,
    {
        let values = (0..grid.count).map(|i| f(grid.point(i))).collect();
        SampledFunction { grid, values, support_hint }
    }

    /// Piecewise-cubic interpolation of the samples; zero outside the grid
    /// range and outside the support interval.
    pub fn eval(&self, x: f64) -> Complex64 {
        if let Some((lo, hi)) = self.support_hint {
            if x < lo || x > hi {
                return Complex64::new(0.0, 0.0);
            }
        }
        if x < self.grid.lo || x > self.grid.hi {
            return Complex64::new(0.0, 0.0);
        }
        let n = self.grid.count;
        if n < 4 {
            // Too coarse for a cubic stencil; nearest sample.
            let h = self.grid.step();
            let i = (((x - self.grid.point(0)) / h).round().max(0.0) as usize).min(n - 1);
            return self.values[i];
        }
        let h = self.grid.step();
        let rel = (x - self.grid.point(0)) / h;
        let cell = (rel.floor() as isize).clamp(0, n as isize - 2) as usize;
        let start = cell.saturating_sub(1).min(n - 4);
        let t = rel - start as f64;
        let l0 = -(t - 1.0) * (t - 2.0) * (t - 3.0) / 6.0;
        let l1 = t * (t - 2.0) * (t - 3.0) / 2.0;
        let l2 = -t * (t - 1.0) * (t - 3.0) / 2.0;
        let l3 = t * (t - 1.0) * (t - 2.0) / 6.0;
        self.values[start] * l0
            + self.values[start + 1] * l1
            + self.values[start + 2] * l2
            + self.values[start + 3] * l3
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Midpoint-rule `L²` norm. Spectrally accurate on offset grids when the
    /// samples come from a smooth function supported inside the grid range.
    pub fn norm_l2(&self) -> f64 {
        let s: f64 = self.values.iter().map(|v| v.norm_sqr()).sum();
        (s * self.grid.step()).sqrt()
    }

    /// Midpoint-rule inner product `∫ f ḡ`.
    pub fn inner(&self, other: &SampledFunction) -> Result<Complex64> {
        if self.grid != other.grid {
            return Err(Error::contract("inner product requires identical grids"));
        }
        let s: Complex64 = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b.conj())
            .sum();
        Ok(s * self.grid.step())
    }

    pub fn scaled(&self, factor: Complex64) -> SampledFunction {
        SampledFunction {
            grid: self.grid,
            values: self.values.iter().map(|v| v * factor).collect(),
            support_hint: self.support_hint,
        }
    }
}

/// `f̂` of a sampled function with bounded support, on the points of `y_grid`.
///
/// The samples are interpolated piecewise-cubically and integrated over the
/// support interval. Step functions and closed forms should use
/// [`transform_fn`] or dedicated closed forms instead; interpolation only
/// serves the smooth constructions.
pub fn fourier_transform(f: &SampledFunction, y_grid: &Grid) -> Result<SampledFunction> {
    let panels = default_transform_panels(f, y_grid)?;
    fourier_transform_with_panels(f, y_grid, panels)
}

pub fn default_transform_panels(f: &SampledFunction, y_grid: &Grid) -> Result<usize> {
    let (lo, hi) = clamped_support(f)?;
    let max_y = y_grid.lo.abs().max(y_grid.hi.abs());
    // At least one panel per four samples, so the quadrature resolves
    // whatever structure the grid itself resolves.
    let support_samples = (hi - lo) / f.grid.step();
    Ok(oscillation_panels(hi - lo, max_y).max((support_samples / 4.0).ceil() as usize))
}

pub fn fourier_transform_with_panels(
    f: &SampledFunction,
    y_grid: &Grid,
    panels: usize,
) -> Result<SampledFunction> {
    let (lo, hi) = clamped_support(f)?;
    let ys = y_grid.points();
    let values = transform_fn(|x| f.eval(x), lo, hi, panels, &ys)?;
    SampledFunction::new(*y_grid, values, None)
}

fn clamped_support(f: &SampledFunction) -> Result<(f64, f64)> {
    let (lo, hi) = f.support_hint.ok_or_else(|| {
        Error::contract("fourier_transform requires a bounded support_hint")
    })?;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::contract(format!(
            "fourier_transform requires a bounded support interval, got [{lo}, {hi}]"
        )));
    }
    Ok((lo.max(f.grid.lo), hi.min(f.grid.hi)))
}

// ---------------------------------------------------------------------------
// Smooth bumps
// ---------------------------------------------------------------------------

/// `C^∞` bump supported exactly on `(lo, hi)`: the mollifier profile
/// `amplitude · exp(-1/(t(1-t)))` with `t = (x-lo)/(hi-lo)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SmoothBump {
    pub lo: f64,
    pub hi: f64,
    pub amplitude: f64,
}

impl SmoothBump {
    pub fn new(lo: f64, hi: f64, amplitude: f64) -> Result<Self> {
        if !(lo < hi) {
            return Err(Error::contract(format!("bump requires lo < hi, got ({lo}, {hi})")));
        }
        if !(amplitude > 0.0) {
            return Err(Error::contract("bump amplitude must be positive"));
        }
        Ok(SmoothBump { lo, hi, amplitude })
    }

    pub fn eval(&self, x: f64) -> f64 {
        let t = (x - self.lo) / (self.hi - self.lo);
        if t <= 0.0 || t >= 1.0 {
            return 0.0;
        }
        self.amplitude * (-1.0 / (t * (1.0 - t))).exp()
    }

    pub fn interval(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }
}
