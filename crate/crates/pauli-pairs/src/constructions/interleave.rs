//! The interleaving operator `f_{a,b}(x) = Σ_k â(k) b(x+k)` for `a`
//! supported on `[0,2π]` and `b` on `[0,1]`, and the UZD lines it generates:
//! disjoint supports of the `a`-factors kill the transforms pairwise,
//! disjoint supports of the `b`-factors kill the functions pairwise.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::ComplexFn;
use crate::error::{Error, Result};
use crate::numerics::{cis, fourier_coeffs_batch, quad_integrate, Grid, SampledFunction, SmoothBump};

/// Mass beyond the cutoff must stay below this fraction of the total
/// coefficient energy.
const TAIL_FRACTION: f64 = 1e-18;

/// One interleaved function, with `â(k)` cached at construction.
#[derive(Clone)]
pub struct InterleaveSpec {
    a_fn: ComplexFn,
    pub a_support: (f64, f64),
    b_fn: ComplexFn,
    pub b_support: (f64, f64),
    pub k_cutoff: usize,
    a_hat: Vec<Complex64>,
}

impl InterleaveSpec {
    pub fn new(
        a_fn: ComplexFn,
        a_support: (f64, f64),
        b_fn: ComplexFn,
        b_support: (f64, f64),
        k_cutoff: usize,
    ) -> Result<Self> {
        if !(0.0 <= a_support.0 && a_support.0 < a_support.1 && a_support.1 <= 2.0 * PI) {
            return Err(Error::contract(format!(
                "a must be supported inside [0, 2π], got [{}, {}]",
                a_support.0, a_support.1
            )));
        }
        if !(0.0 <= b_support.0 && b_support.0 < b_support.1 && b_support.1 <= 1.0) {
            return Err(Error::contract(format!(
                "b must be supported inside [0, 1], got [{}, {}]",
                b_support.0, b_support.1
            )));
        }
        let k = k_cutoff as i64;
        let pad = 16i64;
        let len = a_support.1 - a_support.0;
        let panels = ((len * (1.0 + (k + pad) as f64 / 5.0)).ceil() as usize).max(32);
        // â(k) = 2π·ã(k); integrate over the support only.
        let tilde = fourier_coeffs_batch(
            |t| (a_fn)(t),
            a_support.0,
            a_support.1,
            k + pad,
            panels,
        )?;
        let full: Vec<Complex64> = tilde.iter().map(|c| 2.0 * PI * c).collect();
        let center = (k + pad) as usize;
        let kept: f64 = (-k..=k).map(|kk| full[(kk + k + pad) as usize].norm_sqr()).sum();
        let tail: f64 = full
            .iter()
            .enumerate()
            .filter(|(i, _)| (*i as i64 - center as i64).abs() > k)
            .map(|(_, c)| c.norm_sqr())
            .sum();
        if tail > TAIL_FRACTION * (kept + tail) {
            return Err(Error::Cutoff(format!(
                "Σ_{{|k|>{k_cutoff}}}|â(k)|² = {tail:e} exceeds {TAIL_FRACTION:e} of the total"
            )));
        }
        let a_hat = full[(center - k as usize)..=(center + k as usize)].to_vec();
        Ok(InterleaveSpec { a_fn, a_support, b_fn, b_support, k_cutoff, a_hat })
    }

    /// `â(k)`; zero past the cutoff.
    pub fn a_hat(&self, k: i64) -> Complex64 {
        if k.abs() > self.k_cutoff as i64 {
            Complex64::new(0.0, 0.0)
        } else {
            self.a_hat[(k + self.k_cutoff as i64) as usize]
        }
    }

    /// `f_{a,b}(x)`: at most one translate of `b` covers `x`.
    pub fn eval(&self, x: f64) -> Complex64 {
        let k_lo = (self.b_support.0 - x).ceil() as i64 - 1;
        let mut value = Complex64::new(0.0, 0.0);
        let mut live = 0usize;
        for k in k_lo..=k_lo + 2 {
            let t = x + k as f64;
            if t < self.b_support.0 || t > self.b_support.1 {
                continue;
            }
            let b = (self.b_fn)(t);
            if b.norm() != 0.0 {
                live += 1;
                value = self.a_hat(k) * b;
            }
        }
        debug_assert!(live <= 1, "overlapping b-translates at x = {x}");
        value
    }

    /// `2π`-periodization of `a` evaluated at `y`.
    pub fn a_per(&self, y: f64) -> Complex64 {
        (self.a_fn)(y.rem_euclid(2.0 * PI))
    }

    /// `b̂(y)` by quadrature over the support of `b`.
    pub fn b_hat(&self, y: f64) -> Complex64 {
        let (lo, hi) = self.b_support;
        let panels = (((hi - lo) * (1.0 + y.abs() / 5.0)).ceil() as usize).max(8);
        quad_integrate(|t| (self.b_fn)(t) * cis(-y * t), lo, hi, panels)
            .expect("b integrand is finite")
    }

    /// Closed form `f̂_{a,b}(y) = 2π·b̂(y)·a_per(y)`.
    pub fn fourier(&self, y: f64) -> Complex64 {
        2.0 * PI * self.b_hat(y) * self.a_per(y)
    }

    /// Closed-form transform on many frequencies, sharing the `b̂` node
    /// evaluations.
    pub fn fourier_batch(&self, ys: &[f64]) -> Result<Vec<Complex64>> {
        let (lo, hi) = self.b_support;
        let max_y = ys.iter().fold(0.0f64, |m, y| m.max(y.abs()));
        let panels = (((hi - lo) * (1.0 + max_y / 5.0)).ceil() as usize).max(8);
        let b_hats =
            crate::numerics::transform_fn(|t| (self.b_fn)(t), lo, hi, panels, ys)?;
        Ok(ys
            .iter()
            .zip(b_hats)
            .map(|(&y, bh)| 2.0 * PI * bh * self.a_per(y))
            .collect())
    }

    /// Sample `f_{a,b}` on a grid. The support is the union of the live
    /// translates of `b`'s support.
    pub fn sample(&self, grid: &Grid) -> SampledFunction {
        let k = self.k_cutoff as f64;
        let support = (self.b_support.0 - k, self.b_support.1 + k);
        SampledFunction::from_fn(*grid, |x| self.eval(x), Some(support))
    }

    /// Smallest `K'` such that `|â(k)| <= rel_tol·max|â|` for `|k| > K'`;
    /// translates beyond it carry no numerically relevant mass.
    pub fn effective_cutoff(&self, rel_tol: f64) -> i64 {
        let max = self.a_hat.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
        let k = self.k_cutoff as i64;
        let mut reach = 0i64;
        for kk in -k..=k {
            if self.a_hat(kk).norm() > rel_tol * max {
                reach = reach.max(kk.abs());
            }
        }
        reach
    }

    /// Quadrature segments covering the numerically live translates of the
    /// `b`-window (the function vanishes identically between them), sized
    /// for frequencies up to `max_abs_y`.
    pub fn live_segments(&self, rel_tol: f64, max_abs_y: f64) -> Vec<(f64, f64, usize)> {
        let reach = self.effective_cutoff(rel_tol);
        let width = self.b_support.1 - self.b_support.0;
        let panels = crate::numerics::oscillation_panels(width, max_abs_y);
        (-reach..=reach)
            .map(|k| {
                (
                    self.b_support.0 - k as f64,
                    self.b_support.1 - k as f64,
                    panels,
                )
            })
            .collect()
    }

    /// Builds with the first cutoff from `ladder` whose coefficient tail
    /// passes the energy bound.
    pub fn with_cutoff_ladder(
        a_fn: ComplexFn,
        a_support: (f64, f64),
        b_fn: ComplexFn,
        b_support: (f64, f64),
        ladder: &[usize],
    ) -> Result<Self> {
        for &k_cutoff in ladder {
            match InterleaveSpec::new(
                a_fn.clone(),
                a_support,
                b_fn.clone(),
                b_support,
                k_cutoff,
            ) {
                Ok(spec) => return Ok(spec),
                Err(Error::Cutoff(_)) => continue,
                Err(e) => return Err(e),
            }
        }
        Err(Error::Cutoff(format!(
            "no cutoff in {ladder:?} meets the tail bound for a-support [{}, {}]",
            a_support.0, a_support.1
        )))
    }
}

/// `m` interleaved functions whose `a`-windows tile `(0, 2π)` and whose
/// `b`-windows tile `(0, 1)`, uniformly with 20%-width guard gaps; their
/// pairwise products vanish in space exactly and in frequency up to
/// quadrature noise.
pub fn uzd_line(m: usize) -> Result<Vec<InterleaveSpec>> {
    if !(2..=64).contains(&m) {
        return Err(Error::contract(format!(
            "uzd_line supports 2..=64 members, got {m}"
        )));
    }
    let mut out = Vec::with_capacity(m);
    for n in 0..m {
        let cell = 1.0 / m as f64;
        let b_lo = (n as f64 + 0.1) * cell;
        let b_hi = (n as f64 + 0.9) * cell;
        let a_lo = 2.0 * PI * (n as f64 + 0.1) * cell;
        let a_hi = 2.0 * PI * (n as f64 + 0.9) * cell;
        let a_bump = SmoothBump::new(a_lo, a_hi, 1.0)?;
        let b_bump = SmoothBump::new(b_lo, b_hi, 1.0)?;
        // Narrow a-windows need a larger cutoff to meet the tail bound;
        // climb the ladder until construction succeeds.
        out.push(InterleaveSpec::with_cutoff_ladder(
            std::sync::Arc::new(move |t| Complex64::new(a_bump.eval(t), 0.0)),
            (a_lo, a_hi),
            std::sync::Arc::new(move |t| Complex64::new(b_bump.eval(t), 0.0)),
            (b_lo, b_hi),
            &[64, 128, 192, 256, 384],
        )?);
    }
    Ok(out)
}
