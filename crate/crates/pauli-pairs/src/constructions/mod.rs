//! Non-step Pauli-pair constructions: symmetric-profile (Moroz–Perelomov)
//! pairs, the Ismagilov family `f_a = ĝ·φ(·-a)`, the interleaving operator
//! `f_{a,b}` with its UZD lines, and Pauli-state pairs assembled from UZD
//! sets.

mod interleave;

pub use interleave::{uzd_line, InterleaveSpec};

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{
    cis, fourier_coeffs_batch, quad_integrate, Grid, SampledFunction, SmoothBump,
};
use crate::verify::{FunctionPair, Provenance};

/// Real-valued evaluable function.
pub type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
/// Complex-valued evaluable function.
pub type ComplexFn = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;

// ---------------------------------------------------------------------------
// Symmetric-profile pairs
// ---------------------------------------------------------------------------

/// Profile `ρ >= 0` with a reflection symmetry `ρ(x) = ρ(a-x)`, a real phase
/// `φ`, and the symmetry parameter `a`.
pub struct MpParams {
    pub rho: RealFn,
    pub phi: RealFn,
    pub a: f64,
    /// Interval carrying the support of `ρ`.
    pub support: (f64, f64),
}

/// The pair `f₁ = ρ e^{iφ}` and `f₂(x) = ρ(x) e^{-iφ(a-x)}`, sampled on
/// `grid`. Fails when the symmetry hypothesis `ρ(x) = ρ(a-x)` is violated
/// beyond 1e-10 at the sample points.
pub fn mp_pair(params: &MpParams, grid: &Grid) -> Result<FunctionPair> {
    let sup: f64 = grid
        .points()
        .iter()
        .map(|&x| (params.rho)(x).abs())
        .fold(0.0, f64::max);
    let mut worst = (0.0, grid.point(0));
    for &x in &grid.points() {
        let d = ((params.rho)(x) - (params.rho)(params.a - x)).abs();
        if d > worst.0 {
            worst = (d, x);
        }
    }
    if worst.0 > 1e-10 * (1.0 + sup) {
        return Err(Error::contract(format!(
            "profile is not symmetric about a/2: deviation {} at x = {}",
            worst.0, worst.1
        )));
    }

    let f1 = SampledFunction::from_fn(
        *grid,
        |x| Complex64::from_polar((params.rho)(x), (params.phi)(x)),
        Some(params.support),
    );
    let f2 = SampledFunction::from_fn(
        *grid,
        |x| Complex64::from_polar((params.rho)(x), -(params.phi)(params.a - x)),
        Some(params.support),
    );
    FunctionPair::sampled(f1, f2, Provenance::new("mp").with_num("a", params.a))
}

// ---------------------------------------------------------------------------
// Ismagilov family
// ---------------------------------------------------------------------------

/// A `2π`-periodic unimodular phase, a window `g` supported on an interval
/// of length at most one, a translation, and the series cutoff for the
/// phase's Fourier coefficients (computed once at construction).
#[derive(Clone)]
pub struct IsmagilovParams {
    phase: ComplexFn,
    pub window: SmoothBump,
    pub shift: f64,
    pub coeff_cutoff: usize,
    coeffs: Arc<Vec<Complex64>>,
}

impl IsmagilovParams {
    pub fn new(
        phase: ComplexFn,
        window: SmoothBump,
        shift: f64,
        coeff_cutoff: usize,
    ) -> Result<Self> {
        if window.length() > 1.0 + 1e-12 {
            return Err(Error::contract(format!(
                "window support length must be at most 1, got {}",
                window.length()
            )));
        }
        let probe = Grid::new(0.0, 2.0 * PI, 64, 0.5)?;
        for &t in &probe.points() {
            let m = (phase)(t).norm();
            if (m - 1.0).abs() > 1e-12 {
                return Err(Error::contract(format!(
                    "phase must be unimodular; |phase({t})| = {m}"
                )));
            }
        }
        let k = coeff_cutoff as i64;
        let pad = 8i64;
        let panels = (4 * (coeff_cutoff + pad as usize)).max(64);
        let coeffs = fourier_coeffs_batch(|t| (phase)(t), 0.0, 2.0 * PI, k + pad, panels)?;
        let tail: f64 = coeffs
            .iter()
            .enumerate()
            .filter(|(i, _)| (*i as i64 - (k + pad)).abs() > k)
            .map(|(_, c)| c.norm())
            .sum();
        if tail >= 1e-9 {
            return Err(Error::Cutoff(format!(
                "phase coefficients past |k| = {coeff_cutoff} still carry mass {tail:e}"
            )));
        }
        Ok(IsmagilovParams { phase, window, shift, coeff_cutoff, coeffs: Arc::new(coeffs) })
    }

    /// Same phase and window, different translation; the cached coefficients
    /// are shared.
    pub fn with_shift(&self, shift: f64) -> Self {
        IsmagilovParams { shift, ..self.clone() }
    }

    /// `c_k` of the phase; zero past the cutoff.
    pub fn coeff(&self, k: i64) -> Complex64 {
        let center = self.coeff_cutoff as i64 + 8;
        if k.abs() > self.coeff_cutoff as i64 {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[(k + center) as usize]
        }
    }

    /// `ĝ(x)` by quadrature over the window support.
    pub fn g_hat(&self, x: f64) -> Complex64 {
        let (lo, hi) = self.window.interval();
        let panels = ((hi - lo) * (1.0 + x.abs() / 5.0)).ceil().max(16.0) as usize;
        quad_integrate(|t| Complex64::new(self.window.eval(t), 0.0) * cis(-x * t), lo, hi, panels)
            .expect("bump integrand is finite")
    }

    /// `f_a(x) = ĝ(x)·phase(x - a)`.
    pub fn eval(&self, x: f64) -> Complex64 {
        self.g_hat(x) * (self.phase)(x - self.shift)
    }

    /// The phase factor alone.
    pub fn phase_at(&self, t: f64) -> Complex64 {
        (self.phase)(t)
    }

    /// Closed form `|f̂_a(y)| = 2π Σ_k |c_k| |g(-k-y)|`.
    ///
    /// The summands have pairwise disjoint supports; more than one nonzero
    /// term means the window is too wide.
    pub fn fourier_abs_closed(&self, y: f64) -> Result<f64> {
        let k = self.coeff_cutoff as i64;
        let mut total = 0.0;
        let mut live = 0usize;
        for kk in -k..=k {
            let g = self.window.eval(-(kk as f64) - y);
            if g != 0.0 {
                live += 1;
                total += self.coeff(kk).norm() * g;
            }
        }
        if live > 1 {
            return Err(Error::contract(
                "window support length exceeds 1: overlapping summands",
            ));
        }
        Ok(2.0 * PI * total)
    }
}

// ---------------------------------------------------------------------------
// Combinations of UZD families
// ---------------------------------------------------------------------------

/// `Σ_n w_n c_n f_n` on the common grid; `c_n > 0`, `w_n` unimodular or any
/// complex weights.
pub fn pauli_combine(
    fs: &[SampledFunction],
    c: &[f64],
    w: &[Complex64],
) -> Result<SampledFunction> {
    if fs.is_empty() || fs.len() != c.len() || fs.len() != w.len() {
        return Err(Error::contract(
            "pauli_combine needs equally many functions, magnitudes and weights",
        ));
    }
    if c.iter().any(|&x| !(x > 0.0)) {
        return Err(Error::contract("pauli_combine magnitudes must be positive"));
    }
    let grid = fs[0].grid;
    if fs.iter().any(|f| f.grid != grid) {
        return Err(Error::contract("pauli_combine requires a common grid"));
    }
    let mut values = vec![Complex64::new(0.0, 0.0); grid.count];
    for ((f, &cn), &wn) in fs.iter().zip(c).zip(w) {
        for (acc, v) in values.iter_mut().zip(&f.values) {
            *acc += wn * cn * v;
        }
    }
    let support = union_support(fs);
    SampledFunction::new(grid, values, support)
}

/// From `2m` unit-norm UZD members and coefficients `(c_1..c_m)`, build the
/// pair `f = Σ c_n (f_{2n-1}+f_{2n})/√2`, `g = Σ c_n (f_{2n-1}-f_{2n})/√2`.
pub fn pauli_state_pair(fs: &[SampledFunction], coeffs: &[Complex64]) -> Result<FunctionPair> {
    if fs.len() < 2 || fs.len() % 2 != 0 || fs.len() != 2 * coeffs.len() {
        return Err(Error::contract(
            "pauli_state_pair needs 2m members and m coefficients",
        ));
    }
    if coeffs.iter().all(|z| z.norm() == 0.0) {
        return Err(Error::contract("pauli_state_pair coefficients must not all vanish"));
    }
    let grid = fs[0].grid;
    if fs.iter().any(|f| f.grid != grid) {
        return Err(Error::contract("pauli_state_pair requires a common grid"));
    }
    for (k, f) in fs.iter().enumerate() {
        let norm = f.norm_l2();
        if (norm - 1.0).abs() > 1e-6 {
            return Err(Error::contract(format!(
                "member {k} must have unit norm; got {norm}"
            )));
        }
    }
    let half = Complex64::new(1.0 / 2f64.sqrt(), 0.0);
    let mut f_vals = vec![Complex64::new(0.0, 0.0); grid.count];
    let mut g_vals = vec![Complex64::new(0.0, 0.0); grid.count];
    for (n, &cn) in coeffs.iter().enumerate() {
        let (odd, even) = (&fs[2 * n], &fs[2 * n + 1]);
        for i in 0..grid.count {
            f_vals[i] += cn * half * (odd.values[i] + even.values[i]);
            g_vals[i] += cn * half * (odd.values[i] - even.values[i]);
        }
    }
    let support = union_support(fs);
    let mut prov = Provenance::new("pauli-state").with_num("m", coeffs.len() as f64);
    for (n, z) in coeffs.iter().enumerate() {
        prov = prov.with_text(&format!("c{}", n + 1), &format!("{}:{}", z.re, z.im));
    }
    FunctionPair::sampled(
        SampledFunction::new(grid, f_vals, support)?,
        SampledFunction::new(grid, g_vals, support)?,
        prov,
    )
}

fn union_support(fs: &[SampledFunction]) -> Option<(f64, f64)> {
    fs.iter().filter_map(|f| f.support_hint).fold(None, |acc, (lo, hi)| {
        Some(match acc {
            None => (lo, hi),
            Some((alo, ahi)) => (f64::min(alo, lo), f64::max(ahi, hi)),
        })
    })
}
