//! Uniform verdicts: is a candidate pair a Pauli pair numerically, is a set
//! a UZD set, are two functions linearly independent.
//!
//! "Almost everywhere" is operationalized as grid-maximum comparison on
//! offset grids; every exceptional set in the constructions handled here
//! (step discontinuities, dyadic rationals) is explicit and countable, and
//! the offset grids avoid them.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{
    default_transform_panels, fourier_transform, fourier_transform_with_panels, Grid,
    SampledFunction,
};
use crate::steppairs::{step_fourier_abs, StepVector};

/// Scale-free rank threshold: two value rows are independent when
/// `σ_min/σ_max` of the 2×N matrix is at least this ratio.
pub const INDEPENDENCE_RATIO: f64 = 1e-8;

/// One named check: `passed ⇔ max_deviation <= tolerance`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub worst_point: Option<f64>,
}

/// Pass/fail summary of a family of checks.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn new() -> Self {
        VerificationReport { checks: Vec::new(), overall: true }
    }

    pub fn push(
        &mut self,
        name: impl Into<String>,
        max_deviation: f64,
        tolerance: f64,
        worst_point: Option<f64>,
    ) {
        let passed = max_deviation <= tolerance;
        self.overall &= passed;
        self.checks.push(Check {
            name: name.into(),
            passed,
            max_deviation,
            tolerance,
            worst_point,
        });
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(
                f,
                "{}  {:<32} deviation {:.16e}  tolerance {:.16e}",
                if c.passed { "pass" } else { "FAIL" },
                c.name,
                c.max_deviation,
                c.tolerance
            )?;
            match c.worst_point {
                Some(p) => writeln!(f, "  worst at {:.16e}", p)?,
                None => writeln!(f)?,
            }
        }
        writeln!(f, "overall: {}", if self.overall { "pass" } else { "FAIL" })
    }
}

/// Parameter value recorded in a pair's provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Num(f64),
    Text(String),
}

/// Which construction produced a pair, and with what parameters.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Provenance {
    pub construction: String,
    pub parameters: BTreeMap<String, ParamValue>,
}

impl Provenance {
    pub fn new(construction: impl Into<String>) -> Self {
        Provenance { construction: construction.into(), parameters: BTreeMap::new() }
    }

    pub fn with_num(mut self, key: &str, value: f64) -> Self {
        self.parameters.insert(key.to_string(), ParamValue::Num(value));
        self
    }

    pub fn with_text(mut self, key: &str, value: &str) -> Self {
        self.parameters.insert(key.to_string(), ParamValue::Text(value.to_string()));
        self
    }
}

/// The two members of a candidate Pauli pair, in one of the two
/// representations the crate works with.
#[derive(Debug, Clone)]
pub enum PairData {
    Step { left: StepVector, right: StepVector },
    Sampled { left: SampledFunction, right: SampledFunction },
}

/// A candidate Pauli pair plus its provenance.
#[derive(Debug, Clone)]
pub struct FunctionPair {
    pub data: PairData,
    pub provenance: Provenance,
}

impl FunctionPair {
    pub fn step(left: StepVector, right: StepVector, provenance: Provenance) -> Result<Self> {
        if left.len() != right.len() {
            return Err(Error::contract("pair members must have the same length"));
        }
        Ok(FunctionPair { data: PairData::Step { left, right }, provenance })
    }

    pub fn sampled(
        left: SampledFunction,
        right: SampledFunction,
        provenance: Provenance,
    ) -> Result<Self> {
        if left.grid != right.grid {
            return Err(Error::contract("pair members must share a grid"));
        }
        Ok(FunctionPair { data: PairData::Sampled { left, right }, provenance })
    }
}

/// Smallest/largest singular value ratio of the 2×N matrix with rows
/// `f` and `g`, computed from the 2×2 Gram matrix.
pub fn singular_ratio(f: &[Complex64], g: &[Complex64]) -> f64 {
    let gff: f64 = f.iter().map(|v| v.norm_sqr()).sum();
    let ggg: f64 = g.iter().map(|v| v.norm_sqr()).sum();
    let gfg: Complex64 = f.iter().zip(g).map(|(a, b)| a * b.conj()).sum();
    if gff == 0.0 && ggg == 0.0 {
        return 0.0;
    }
    let tr = gff + ggg;
    let det = (gff * ggg - gfg.norm_sqr()).max(0.0);
    let disc = (tr * tr - 4.0 * det).max(0.0).sqrt();
    let lam_max = 0.5 * (tr + disc);
    let lam_min = (0.5 * (tr - disc)).max(0.0);
    if lam_max == 0.0 {
        0.0
    } else {
        (lam_min / lam_max).sqrt()
    }
}

/// Scale-free numeric rank test; a zero function is dependent by convention.
pub fn linear_independence(f: &[Complex64], g: &[Complex64]) -> bool {
    singular_ratio(f, g) >= INDEPENDENCE_RATIO
}

fn push_independence(report: &mut VerificationReport, f: &[Complex64], g: &[Complex64]) {
    // Margin form keeps the report invariant: passed ⇔ deviation <= 0.
    let ratio = singular_ratio(f, g);
    report.push("independence", INDEPENDENCE_RATIO - ratio, 0.0, None);
}

/// Verify the Pauli-pair conditions for a candidate pair.
///
/// Three checks: modulus equality on the spatial side, Fourier-modulus
/// equality on `y_grid`, and linear independence. Frequency-side deviations
/// are compared against `tol_freq` times the larger of the two
/// Fourier-modulus sup-norms on the grid; spatial deviations against
/// `tol_space` directly. Sampled pairs additionally carry a half-resolution
/// quadrature self-check.
pub fn verify_pair(
    pair: &FunctionPair,
    y_grid: &Grid,
    tol_space: f64,
    tol_freq: f64,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    match &pair.data {
        PairData::Step { left, right } => {
            if left.len() != right.len() {
                return Err(Error::contract("pair members must have the same length"));
            }
            let (dev, worst) = max_at((0..left.len()).map(|j| {
                (
                    (left.entries[j].norm() - right.entries[j].norm()).abs(),
                    (j + 1) as f64,
                )
            }));
            report.push("space_modulus", dev, tol_space, worst);

            let lhat: Vec<f64> = y_grid
                .points()
                .iter()
                .map(|&y| step_fourier_abs(left, y))
                .collect::<Result<_>>()?;
            let rhat: Vec<f64> = y_grid
                .points()
                .iter()
                .map(|&y| step_fourier_abs(right, y))
                .collect::<Result<_>>()?;
            push_freq_check(&mut report, y_grid, &lhat, &rhat, tol_freq);
            push_independence(&mut report, &left.entries, &right.entries);
        }
        PairData::Sampled { left, right } => {
            if left.grid != right.grid {
                return Err(Error::contract("pair members must share a grid"));
            }
            let (dev, worst) = max_at(
                left.values
                    .iter()
                    .zip(&right.values)
                    .enumerate()
                    .map(|(i, (a, b))| ((a.norm() - b.norm()).abs(), left.grid.point(i))),
            );
            report.push("space_modulus", dev, tol_space, worst);

            let panels = default_transform_panels(left, y_grid)?;
            let lhat = fourier_transform_with_panels(left, y_grid, panels)?;
            let rhat = fourier_transform(right, y_grid)?;
            let labs: Vec<f64> = lhat.values.iter().map(|v| v.norm()).collect();
            let rabs: Vec<f64> = rhat.values.iter().map(|v| v.norm()).collect();
            push_freq_check(&mut report, y_grid, &labs, &rabs, tol_freq);

            // Half-resolution self-check: the quadrature has converged when
            // halving the panel count barely moves the transform.
            let lhalf = fourier_transform_with_panels(left, y_grid, (panels / 2).max(1))?;
            let scale = labs.iter().fold(0.0f64, |a, &b| a.max(b)) + 1e-300;
            let (dev, worst) = max_at(
                lhat.values
                    .iter()
                    .zip(&lhalf.values)
                    .enumerate()
                    .map(|(i, (a, b))| ((a - b).norm(), y_grid.point(i))),
            );
            report.push("freq_self_check", dev, tol_freq * scale, worst);

            push_independence(&mut report, &left.values, &right.values);
        }
    }
    Ok(report)
}

fn push_freq_check(
    report: &mut VerificationReport,
    y_grid: &Grid,
    lhat: &[f64],
    rhat: &[f64],
    tol_freq: f64,
) {
    let sup_l = lhat.iter().fold(0.0f64, |a, &b| a.max(b));
    let sup_r = rhat.iter().fold(0.0f64, |a, &b| a.max(b));
    let scale = sup_l.max(sup_r) + 1e-300;
    let (dev, worst) = max_at(
        lhat.iter()
            .zip(rhat)
            .enumerate()
            .map(|(i, (a, b))| ((a - b).abs(), y_grid.point(i))),
    );
    report.push("freq_modulus", dev, tol_freq * scale, worst);
}

fn max_at(it: impl Iterator<Item = (f64, f64)>) -> (f64, Option<f64>) {
    let mut best = 0.0;
    let mut at = None;
    for (v, p) in it {
        if v > best || at.is_none() {
            best = v;
            at = Some(p);
        }
    }
    (best, at)
}

/// Verify the UZD conditions for a family of functions given by samples on a
/// common spatial grid and samples of their transforms on a common frequency
/// grid (for periodic members, the frequency samples are the Fourier
/// coefficients on an integer grid).
///
/// Per unordered pair, `max |f·g|` and `max |f̂·ĝ|` must stay below `tol`
/// times the product of the corresponding sup-norms; each member must be
/// nonzero (sup-norm above `tol`).
pub fn verify_uzd(
    space: &[SampledFunction],
    freq: &[SampledFunction],
    tol: f64,
) -> Result<VerificationReport> {
    if space.len() < 2 {
        return Err(Error::contract("verify_uzd requires at least two members"));
    }
    if space.len() != freq.len() {
        return Err(Error::contract("verify_uzd requires one transform per member"));
    }
    for w in space.windows(2) {
        if w[0].grid != w[1].grid {
            return Err(Error::contract("verify_uzd requires a common spatial grid"));
        }
    }
    for w in freq.windows(2) {
        if w[0].grid != w[1].grid {
            return Err(Error::contract("verify_uzd requires a common frequency grid"));
        }
    }

    let mut report = VerificationReport::new();
    let sup_space: Vec<f64> = space.iter().map(|f| f.sup_norm()).collect();
    let sup_freq: Vec<f64> = freq.iter().map(|f| f.sup_norm()).collect();
    for (k, &s) in sup_space.iter().enumerate() {
        // Margin form: nonzero ⇔ tol - sup <= 0.
        report.push(format!("member({k})_nonzero"), tol - s, 0.0, None);
    }
    for i in 0..space.len() {
        for j in (i + 1)..space.len() {
            let (dev, worst) = max_at(
                space[i]
                    .values
                    .iter()
                    .zip(&space[j].values)
                    .enumerate()
                    .map(|(idx, (a, b))| ((a * b).norm(), space[i].grid.point(idx))),
            );
            report.push(
                format!("pair({i},{j})_space_product"),
                dev,
                tol * sup_space[i] * sup_space[j],
                worst,
            );
            let (dev, worst) = max_at(
                freq[i]
                    .values
                    .iter()
                    .zip(&freq[j].values)
                    .enumerate()
                    .map(|(idx, (a, b))| ((a * b).norm(), freq[i].grid.point(idx))),
            );
            report.push(
                format!("pair({i},{j})_freq_product"),
                dev,
                tol * sup_freq[i] * sup_freq[j],
                worst,
            );
        }
    }
    Ok(report)
}
