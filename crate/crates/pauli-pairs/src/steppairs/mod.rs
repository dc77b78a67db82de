//! Pauli pairs of step functions.
//!
//! For `c ∈ ℂⁿ` the step function `h_c` is constant `c_j` on `[j-1, j)` and
//! zero elsewhere. Two step functions form a Pauli pair exactly when their
//! entrywise moduli agree and their autocorrelations
//! `ρ_k(b) = Σ_j b_{k+j} b̄_j` agree for `k = 1..n-1`; this module implements
//! that criterion, the complete four-step solution families, the MP¹/MP²
//! classifier, the collinearity lemma behind the four-step case analysis,
//! and a numerical oracle that enumerates all partners of a given vector.

mod families;
mod solve;

pub use families::{
    family_sol2, family_sol3, match_family, FamilyMatch, FamilyParamsSol2, FamilyParamsSol3,
};
pub use solve::{solve_partners, solve_partners3, SolverOptions};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::verify::{linear_independence, VerificationReport};

/// Finite complex vector `c` encoding the step function `h_c`.
#[derive(Debug, Clone, PartialEq)]
pub struct StepVector {
    pub entries: Vec<Complex64>,
}

impl StepVector {
    pub fn new(entries: Vec<Complex64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::contract("a step vector needs at least one entry"));
        }
        Ok(StepVector { entries })
    }

    pub fn from_reals(entries: &[f64]) -> Self {
        StepVector {
            entries: entries.iter().map(|&re| Complex64::new(re, 0.0)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Pointwise value of `h_c`: `c_j` on `[j-1, j)`, zero outside `[0, n)`.
    pub fn eval(&self, x: f64) -> Complex64 {
        if x < 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let j = x.floor() as usize;
        if j < self.entries.len() {
            self.entries[j]
        } else {
            Complex64::new(0.0, 0.0)
        }
    }

    pub fn moduli(&self) -> Vec<f64> {
        self.entries.iter().map(|z| z.norm()).collect()
    }
}

/// `ρ_k(b)` for `k = 0..n-1`; the bilateral extension is Hermitian,
/// `ρ_{-k} = ρ̄_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct AutocorrelationVector {
    pub rho: Vec<Complex64>,
}

impl AutocorrelationVector {
    /// `ρ_k` for any `|k| < n` using Hermitian symmetry.
    pub fn bilateral(&self, k: i64) -> Complex64 {
        let idx = k.unsigned_abs() as usize;
        if k >= 0 {
            self.rho[idx]
        } else {
            self.rho[idx].conj()
        }
    }
}

/// `ρ_k(b) = Σ_{j=1}^{n-k} b_{k+j} b̄_j` in exact complex arithmetic.
pub fn autocorrelation(b: &StepVector) -> AutocorrelationVector {
    let n = b.len();
    let e = &b.entries;
    let rho = (0..n)
        .map(|k| (0..n - k).map(|j| e[k + j] * e[j].conj()).sum())
        .collect();
    AutocorrelationVector { rho }
}

/// `Σ_{k=1-n}^{n-1} ρ_k(b) e^{iky}` evaluated as a real number; equals
/// `|Σ_j b_j e^{ijy}|²`.
///
/// Conjugate terms are summed pairwise so the imaginary parts cancel
/// exactly; the Hermitian-symmetry assertion guards the arithmetic.
pub fn step_trig_poly(b: &StepVector, y: f64) -> Result<f64> {
    let ac = autocorrelation(b);
    let mut total = ac.rho[0];
    for k in 1..b.len() {
        let phase = Complex64::from_polar(1.0, k as f64 * y);
        total += ac.rho[k] * phase + ac.rho[k].conj() * phase.conj();
    }
    if total.im.abs() >= 1e-12 * total.re.abs() + 1e-300 {
        return Err(Error::internal(format!(
            "trig polynomial lost Hermitian symmetry: {} + {}i at y = {y}",
            total.re, total.im
        )));
    }
    Ok(total.re)
}

/// `|2 sin(y/2) / y| · sqrt(Σ_k ρ_k e^{iky})`; the sinc factor is 1 at
/// `y = 0`.
///
/// Under the transform convention `f̂(y) = ∫ e^{-iyx} f(x) dx` this equals
/// `|ĥ_b(-y)|` (the factorization carries the `e^{+ijy}` sum). Every
/// comparison in the crate is reflection-invariant, so the two members of a
/// pair are always compared at the same sign.
pub fn step_fourier_abs(b: &StepVector, y: f64) -> Result<f64> {
    let chi = if y == 0.0 { 1.0 } else { (2.0 * (0.5 * y).sin() / y).abs() };
    let poly = step_trig_poly(b, y)?.max(0.0);
    Ok(chi * poly.sqrt())
}

/// The step-pair Pauli criterion: passes iff `max_j ||b_j| - |c_j|| <= tol`
/// and `max_{k=1..n-1} |ρ_k(b) - ρ_k(c)| <= tol`.
///
/// The report also records the Parseval-redundant `ρ₀` deviation, which is
/// implied by the modulus check (its tolerance is scaled accordingly).
pub fn lemma_stepa_check(b: &StepVector, c: &StepVector, tol: f64) -> Result<VerificationReport> {
    if b.len() != c.len() {
        return Err(Error::contract(format!(
            "step vectors must have equal length, got {} and {}",
            b.len(),
            c.len()
        )));
    }
    let n = b.len();
    let mut report = VerificationReport::new();

    let mut mod_dev = 0.0;
    let mut mod_at = None;
    for j in 0..n {
        let d = (b.entries[j].norm() - c.entries[j].norm()).abs();
        if d > mod_dev || mod_at.is_none() {
            mod_dev = d;
            mod_at = Some((j + 1) as f64);
        }
    }
    report.push("moduli", mod_dev, tol, mod_at);

    let rb = autocorrelation(b);
    let rc = autocorrelation(c);
    let mut rho_dev = 0.0;
    let mut rho_at = None;
    for k in 1..n {
        let d = (rb.rho[k] - rc.rho[k]).norm();
        if d > rho_dev || rho_at.is_none() {
            rho_dev = d;
            rho_at = Some(k as f64);
        }
    }
    report.push("autocorrelation", rho_dev, tol, rho_at);

    // ρ₀ equality follows from the moduli via Parseval; recorded, with the
    // implied tolerance tol·Σ(|b_j|+|c_j|).
    let scale: f64 = b.moduli().iter().sum::<f64>() + c.moduli().iter().sum::<f64>();
    let rho0_dev = (rb.rho[0] - rc.rho[0]).norm();
    report.push(
        "parseval_rho0",
        rho0_dev,
        tol * scale + 1e-12 * (1.0 + rb.rho[0].norm()),
        None,
    );
    Ok(report)
}

/// Classification flags of a step Pauli pair per the MP taxonomy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairClass {
    /// `c = z·b` for some unimodular `z`.
    pub trivial: bool,
    /// `|b_j| = |b_{n+1-j}|` for all `j` (the common modulus graph has a
    /// vertical symmetry line).
    pub mp1: bool,
    /// `c_j = w·b̄_j` for all `j`, for one unimodular `w`.
    pub mp2: bool,
}

/// Compute the MP flags of a pair that already satisfies the step-pair
/// criterion at `tol` and has `b₁c₁bₙcₙ ≠ 0`.
pub fn classify_pair(b: &StepVector, c: &StepVector, tol: f64) -> Result<PairClass> {
    let check = lemma_stepa_check(b, c, tol)?;
    if !(check.check("moduli").unwrap().passed && check.check("autocorrelation").unwrap().passed) {
        return Err(Error::contract(
            "classify_pair requires a pair passing the step criterion",
        ));
    }
    let n = b.len();
    for (name, z) in [
        ("b_1", b.entries[0]),
        ("c_1", c.entries[0]),
        ("b_n", b.entries[n - 1]),
        ("c_n", c.entries[n - 1]),
    ] {
        if z.norm() == 0.0 {
            return Err(Error::contract(format!(
                "classify_pair requires b_1 c_1 b_n c_n != 0; {name} is zero"
            )));
        }
    }

    let trivial = !linear_independence(&b.entries, &c.entries);

    let mods = b.moduli();
    let mp1 = (0..n).all(|j| (mods[j] - mods[n - 1 - j]).abs() <= tol);

    let w = {
        let raw = c.entries[0] / b.entries[0].conj();
        raw / raw.norm()
    };
    let mp2 = (0..n).all(|j| (c.entries[j] - w * b.entries[j].conj()).norm() <= tol);

    Ok(PairClass { trivial, mp1, mp2 })
}

fn require_unimodular(z: Complex64, name: &str) -> Result<()> {
    if (z.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::contract(format!(
            "{name} must be unimodular, got modulus {}",
            z.norm()
        )));
    }
    Ok(())
}

/// Geometric test: do `0`, `α-β` and `1/γ-1/δ` lie on one line?
///
/// Cross-product form: `|Im((α-β)·conj(1/γ-1/δ))| <= tol·|α-β|·|1/γ-1/δ|`.
pub fn collinear_unimodular(
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
    delta: Complex64,
    tol: f64,
) -> Result<bool> {
    for (z, name) in [(alpha, "alpha"), (beta, "beta"), (gamma, "gamma"), (delta, "delta")] {
        require_unimodular(z, name)?;
    }
    let p = alpha - beta;
    let q = 1.0 / gamma - 1.0 / delta;
    let cross = (p * q.conj()).im;
    Ok(cross.abs() <= tol * p.norm() * q.norm())
}

/// Algebraic side of the collinearity equivalence:
/// `α=β` or `γ=δ` or `αβγδ=1`.
///
/// The product clause uses `2·tol`: the geometric residual normalized by
/// `|α-β||1/γ-1/δ|` equals `|sin(Σ/2)| = |αβγδ - 1|/2`, so this matches
/// [`collinear_unimodular`] at the same `tol`.
pub fn cheva_algebraic(
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
    delta: Complex64,
    tol: f64,
) -> Result<bool> {
    for (z, name) in [(alpha, "alpha"), (beta, "beta"), (gamma, "gamma"), (delta, "delta")] {
        require_unimodular(z, name)?;
    }
    Ok((alpha - beta).norm() <= tol
        || (gamma - delta).norm() <= tol
        || (alpha * beta * gamma * delta - 1.0).norm() <= 2.0 * tol)
}

/// Is every unordered pair of `vs` a Pauli pair (criterion + independence)?
pub fn is_pauli_set(vs: &[StepVector], tol: f64) -> Result<VerificationReport> {
    if vs.len() < 2 {
        return Err(Error::contract("a Pauli set needs at least two members"));
    }
    let n = vs[0].len();
    if vs.iter().any(|v| v.len() != n) {
        return Err(Error::contract("all members must have the same length"));
    }
    let mut report = VerificationReport::new();
    for i in 0..vs.len() {
        for j in (i + 1)..vs.len() {
            let sub = lemma_stepa_check(&vs[i], &vs[j], tol)?;
            let dev = sub
                .check("moduli")
                .unwrap()
                .max_deviation
                .max(sub.check("autocorrelation").unwrap().max_deviation);
            report.push(format!("pair({i},{j})_stepa"), dev, tol, None);
            let ratio = crate::verify::singular_ratio(&vs[i].entries, &vs[j].entries);
            report.push(
                format!("pair({i},{j})_independence"),
                crate::verify::INDEPENDENCE_RATIO - ratio,
                0.0,
                None,
            );
        }
    }
    Ok(report)
}

/// Does `c` match the reflected-conjugate construction
/// `c_j = w·|b_j|·b̄_{n+1-j}/|b_{n+1-j}|` for some unimodular `w`?
///
/// Together with palindromic moduli this is exactly the step-function form
/// of a symmetric-profile pair.
pub fn is_mp1_relative(b: &StepVector, c: &StepVector, tol: f64) -> bool {
    if b.len() != c.len() {
        return false;
    }
    let n = b.len();
    let mods = b.moduli();
    if (0..n).any(|j| (mods[j] - mods[n - 1 - j]).abs() > tol) {
        return false;
    }
    let reference: Vec<Complex64> = (0..n)
        .map(|j| {
            let m_r = mods[n - 1 - j];
            if m_r <= tol {
                Complex64::new(0.0, 0.0)
            } else {
                mods[j] * b.entries[n - 1 - j].conj() / m_r
            }
        })
        .collect();
    match_up_to_unimodular(&reference, &c.entries, tol)
}

/// Does `c` match `c_j = w·b̄_j` for some unimodular `w`?
pub fn is_mp2_relative(b: &StepVector, c: &StepVector, tol: f64) -> bool {
    if b.len() != c.len() {
        return false;
    }
    let reference: Vec<Complex64> = b.entries.iter().map(|z| z.conj()).collect();
    match_up_to_unimodular(&reference, &c.entries, tol)
}

/// Is `c` proportional to `b` by a unimodular factor?
pub fn is_trivial_relative(b: &StepVector, c: &StepVector, tol: f64) -> bool {
    b.len() == c.len() && match_up_to_unimodular(&b.entries, &c.entries, tol)
}

fn match_up_to_unimodular(reference: &[Complex64], target: &[Complex64], tol: f64) -> bool {
    let Some(pivot) = reference.iter().position(|z| z.norm() > tol) else {
        return target.iter().all(|z| z.norm() <= tol);
    };
    if target[pivot].norm() <= tol {
        return false;
    }
    let raw = target[pivot] / reference[pivot];
    if raw.norm() == 0.0 {
        return false;
    }
    let w = raw / raw.norm();
    reference
        .iter()
        .zip(target)
        .all(|(r, t)| (t - w * r).norm() <= tol)
}
