//! UZD sets in `L²[0,2π]`: Rademacher functions, the dyadic modulations
//! `a^{[j]}(x) = a(x)·r_j(x/2π)`, and their Fourier-coefficient vanishing
//! patterns.
//!
//! `r_j` reads the `j`-th binary digit, so its sign flips at multiples of
//! `2^{-j}`. For a `(2π/2ⁿ)`-periodic base and `j >= 1`, `a^{[j]}` is then
//! `(2π/2^{j-1})`-periodic and `(2π/2^j)`-antiperiodic, which confines its
//! nonzero Fourier coefficients to `k ≡ 2^{j-1} (mod 2^j)` (all multiples
//! of `2ⁿ` for `j = 0`). Distinct `j` therefore produce
//! coefficientwise-disjoint functions.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;

use crate::constructions::ComplexFn;
use crate::error::{Error, Result};
use crate::numerics::{fourier_coeffs_batch, Grid, SmoothBump};
use crate::verify::VerificationReport;

/// Resolution of the binary-rational test: `frac` counts as dyadic when
/// `2^DYADIC_BITS·frac` is an integer. 24 bits covers every deliberately
/// dyadic input while keeping the accidental-hit probability of computed
/// values (whose trailing mantissa bits are effectively random) near zero;
/// a full-width test would flag about half of all doubles.
const DYADIC_BITS: i32 = 24;

/// Is `frac ∈ [0,1)` a binary rational at the working resolution?
fn is_dyadic(frac: f64) -> bool {
    let scaled = frac * 2f64.powi(DYADIC_BITS);
    scaled == scaled.trunc()
}

/// Rademacher function `r_j`: reads the `j`-th binary digit of the
/// fractional part. `r_0 ≡ 1`; binary rationals map to 0; digit 0 maps to
/// +1 and digit 1 to -1.
pub fn rademacher(j: u32, x: f64) -> i32 {
    if j == 0 {
        return 1;
    }
    let frac = x.rem_euclid(1.0);
    if is_dyadic(frac) {
        return 0;
    }
    // Digit j of {x} is floor(2^j·{x}) mod 2.
    let digit = (frac * 2f64.powi(j as i32)).floor() as i64 & 1;
    if digit == 0 {
        1
    } else {
        -1
    }
}

/// A `(2π/2ⁿ)`-periodic base together with the Rademacher index of its
/// modulation `a^{[j]}(x) = a(x)·r_j(x/2π)`.
#[derive(Clone)]
pub struct PeriodicModulation {
    base: ComplexFn,
    pub j: u32,
    pub n: u32,
}

impl PeriodicModulation {
    /// Checks `0 <= j <= n-1` and the `(2π/2ⁿ)`-periodicity of the base at
    /// sample points (tolerance 1e-10).
    pub fn new(base: ComplexFn, j: u32, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::contract("n must be positive"));
        }
        if j >= n {
            return Err(Error::contract(format!(
                "the Rademacher index must satisfy 0 <= j <= n-1, got j = {j}, n = {n}"
            )));
        }
        let period = 2.0 * PI / 2f64.powi(n as i32);
        let probe = Grid::new(0.0, period, 33, 0.5)?;
        for &t in &probe.points() {
            let d = ((base)(t + period) - (base)(t)).norm();
            if d > 1e-10 {
                return Err(Error::contract(format!(
                    "base is not {period}-periodic: deviation {d} at t = {t}"
                )));
            }
        }
        Ok(PeriodicModulation { base, j, n })
    }

    /// `a^{[j]}(x) = a(x)·r_j(x/2π)`.
    pub fn eval(&self, x: f64) -> Complex64 {
        let r = rademacher(self.j, x / (2.0 * PI));
        (self.base)(x) * r as f64
    }

    pub fn base_at(&self, x: f64) -> Complex64 {
        (self.base)(x)
    }
}

/// May `ã^{[j]}(k)` be nonzero? For `j = 0`: multiples of `2ⁿ`. For
/// `j >= 1`: `2^{j-1} | k` but `2^j ∤ k` (the digit-based `r_j` flips at
/// multiples of `2^{-j}`, one octave below the sign-of-sine convention).
pub fn allowed_index(j: u32, n: u32, k: i64) -> bool {
    if j == 0 {
        k.rem_euclid(1i64 << n) == 0
    } else {
        k.rem_euclid(1i64 << (j - 1)) == 0 && k.rem_euclid(1i64 << j) != 0
    }
}

/// Fourier coefficients of `a^{[j]}` for `|k| <= k_max`, as a batch; the
/// panel count is a power of two so panel boundaries align with the dyadic
/// cells where the Rademacher factor jumps (the base vanishes there).
pub fn modulation_coeffs(pm: &PeriodicModulation, k_max: i64) -> Result<Vec<Complex64>> {
    let mut panels = 256usize;
    while (panels as i64) < 8 * k_max {
        panels *= 2;
    }
    fourier_coeffs_batch(|t| pm.eval(t), 0.0, 2.0 * PI, k_max, panels)
}

/// Check the vanishing pattern of `a^{[j]}`'s Fourier coefficients: every
/// coefficient at a forbidden index must have modulus at most
/// `tol·(max coefficient modulus)`.
pub fn vanishing_pattern_check(
    pm: &PeriodicModulation,
    k_max: i64,
    tol: f64,
) -> Result<VerificationReport> {
    if k_max < (1i64 << pm.n) {
        return Err(Error::contract(format!(
            "k_max must be at least 2^n = {}, got {k_max}",
            1i64 << pm.n
        )));
    }
    let coeffs = modulation_coeffs(pm, k_max)?;
    let max_coeff = coeffs.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    if max_coeff <= tol {
        return Err(Error::contract(
            "all coefficients vanish; the base is degenerate",
        ));
    }
    let mut forbidden_max = 0.0f64;
    let mut forbidden_at = None;
    let mut allowed_max = 0.0f64;
    for (i, c) in coeffs.iter().enumerate() {
        let k = i as i64 - k_max;
        let m = c.norm();
        if allowed_index(pm.j, pm.n, k) {
            allowed_max = allowed_max.max(m);
        } else if m > forbidden_max {
            forbidden_max = m;
            forbidden_at = Some(k as f64);
        }
    }
    let mut report = VerificationReport::new();
    report.push(
        "forbidden_indices",
        forbidden_max,
        tol * (max_coeff + 1e-300),
        forbidden_at,
    );
    // Informational: the largest allowed-index coefficient (its own bound),
    // and the truncation tail mass (largest coefficient in the outermost
    // octave of the computed range, relative bound 1).
    report.push("allowed_index_max", allowed_max, allowed_max, None);
    let edge = coeffs
        .iter()
        .enumerate()
        .filter(|(i, _)| (*i as i64 - k_max).abs() > k_max - (1 << pm.n))
        .map(|(_, c)| c.norm())
        .fold(0.0f64, f64::max);
    report.push("truncation_tail", edge, max_coeff, None);
    Ok(report)
}

/// Member of a periodic UZD set: the modulated function plus its sampled
/// coefficients.
pub struct PeriodicUzdMember {
    pub modulation: PeriodicModulation,
    pub bump: SmoothBump,
}

impl PeriodicUzdMember {
    pub fn eval(&self, x: f64) -> Complex64 {
        self.modulation.eval(x)
    }
}

/// A `(2π/period)`-train of copies of a bump.
pub fn bump_train(bump: SmoothBump, period: f64) -> ComplexFn {
    Arc::new(move |x: f64| Complex64::new(bump.eval(x.rem_euclid(period)), 0.0))
}

/// An `n`-element UZD set in `L²[0,2π]`: bump trains on disjoint windows
/// inside `(0, 2π/2ⁿ)`, modulated by Rademacher functions of increasing
/// index. Space products vanish by support disjointness; coefficient
/// supports are disjoint by the vanishing pattern.
pub fn uzd_periodic(n: u32) -> Result<Vec<PeriodicUzdMember>> {
    if !(2..=8).contains(&n) {
        return Err(Error::contract(format!(
            "uzd_periodic supports 2..=8 members, got {n}"
        )));
    }
    let period = 2.0 * PI / 2f64.powi(n as i32);
    let cell = period / n as f64;
    let mut out = Vec::with_capacity(n as usize);
    for j in 0..n {
        let lo = (j as f64 + 0.1) * cell;
        let hi = (j as f64 + 0.9) * cell;
        let bump = SmoothBump::new(lo, hi, 1.0)?;
        let modulation = PeriodicModulation::new(bump_train(bump, period), j, n)?;
        out.push(PeriodicUzdMember { modulation, bump });
    }
    Ok(out)
}
