//! Numerical enumeration of all step-function partners of a given vector:
//! for `b` with `b₁ = 1`, find every `c` with `c₁ = 1`, `|c_j| = |b_j|` and
//! matching autocorrelations.
//!
//! The moduli are forced entrywise and the top autocorrelation forces
//! `c_n = b_n`, so only the interior phases remain unknown: one for `n = 3`,
//! two for `n = 4`. Seeds on a uniform phase lattice are refined by damped
//! Gauss–Newton on the stacked real residuals, then deduplicated and sorted
//! so the output order is reproducible.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{autocorrelation, StepVector};
use crate::error::{Error, Result};
use crate::numerics::cis;

/// Moduli below this are treated as exact zeros (their phases are
/// meaningless and excluded from the unknowns).
const ZERO_MODULUS: f64 = 1e-12;

/// Knobs for the partner search.
#[derive(Debug, Clone, Copy)]
pub struct SolverOptions {
    /// Lattice resolution per phase axis.
    pub grid: usize,
    /// Solutions closer than this in max circular phase distance collapse.
    pub dedup_tol: f64,
    /// Convergence: residual norm below `newton_tol · (1 + Σ|b_j|²)`.
    pub newton_tol: f64,
    pub max_iter: usize,
    /// Seeds with residual norm below `seed_threshold · (1 + Σ|b_j|²)` are
    /// refined (in addition to all lattice-local minima).
    pub seed_threshold: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            grid: 360,
            dedup_tol: 1e-7,
            newton_tol: 1e-12,
            max_iter: 60,
            seed_threshold: 0.15,
        }
    }
}

/// All partners of a four-step `b` with `b₁ = 1` and `b₄ ≠ 0`.
pub fn solve_partners(b: &StepVector, options: &SolverOptions) -> Result<Vec<StepVector>> {
    if b.len() != 4 {
        return Err(Error::contract("solve_partners expects exactly 4 steps"));
    }
    solve_phase_system(b, options)
}

/// The three-step analog of [`solve_partners`] (one free phase).
pub fn solve_partners3(b: &StepVector, options: &SolverOptions) -> Result<Vec<StepVector>> {
    if b.len() != 3 {
        return Err(Error::contract("solve_partners3 expects exactly 3 steps"));
    }
    solve_phase_system(b, options)
}

struct PhaseProblem {
    b: Vec<Complex64>,
    rho_b: Vec<Complex64>,
    moduli: Vec<f64>,
    /// 0-based positions of the free interior phases.
    unknowns: Vec<usize>,
    scale: f64,
}

impl PhaseProblem {
    fn candidate(&self, phases: &[f64]) -> Vec<Complex64> {
        let n = self.b.len();
        let mut c = vec![Complex64::new(0.0, 0.0); n];
        c[0] = Complex64::new(1.0, 0.0);
        c[n - 1] = self.b[n - 1];
        for (&j, &gamma) in self.unknowns.iter().zip(phases) {
            c[j] = self.moduli[j] * cis(gamma);
        }
        c
    }

    /// Stacked real residuals of ρ_k(c) = ρ_k(b) for k = 1..n-2.
    fn residual(&self, c: &[Complex64]) -> Vec<f64> {
        let n = c.len();
        let mut out = Vec::with_capacity(2 * (n - 2));
        for k in 1..=n - 2 {
            let rho_c: Complex64 = (0..n - k).map(|l| c[l + k] * c[l].conj()).sum();
            let d = rho_c - self.rho_b[k];
            out.push(d.re);
            out.push(d.im);
        }
        out
    }

    fn residual_norm(&self, c: &[Complex64]) -> f64 {
        self.residual(c).iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Real Jacobian of the stacked residuals with respect to the unknown
    /// phases: dρ_k/dγ_j = i·c_j·c̄_{j-k} (if j-k >= 0) - i·c_{j+k}·c̄_j
    /// (if j+k <= n-1).
    fn jacobian(&self, c: &[Complex64]) -> Vec<Vec<f64>> {
        let n = c.len();
        let i_unit = Complex64::new(0.0, 1.0);
        let mut rows = vec![vec![0.0; self.unknowns.len()]; 2 * (n - 2)];
        for k in 1..=n - 2 {
            for (col, &j) in self.unknowns.iter().enumerate() {
                let mut d = Complex64::new(0.0, 0.0);
                if j >= k {
                    d += i_unit * c[j] * c[j - k].conj();
                }
                if j + k <= n - 1 {
                    d -= i_unit * c[j + k] * c[j].conj();
                }
                rows[2 * (k - 1)][col] = d.re;
                rows[2 * (k - 1) + 1][col] = d.im;
            }
        }
        rows
    }
}

fn solve_phase_system(b: &StepVector, options: &SolverOptions) -> Result<Vec<StepVector>> {
    let n = b.len();
    if (b.entries[0] - 1.0).norm() > 1e-12 {
        return Err(Error::contract("the partner search requires b_1 = 1"));
    }
    if b.entries[n - 1].norm() < 1e-9 {
        return Err(Error::contract("the partner search requires |b_n| >= 1e-9"));
    }
    if options.grid < 4 {
        return Err(Error::contract("solver grid must be at least 4"));
    }

    let moduli: Vec<f64> = b.entries.iter().map(|z| z.norm()).collect();
    let unknowns: Vec<usize> = (1..n - 1).filter(|&j| moduli[j] > ZERO_MODULUS).collect();
    let scale = 1.0 + moduli.iter().map(|m| m * m).sum::<f64>();
    let problem = PhaseProblem {
        b: b.entries.clone(),
        rho_b: autocorrelation(b).rho,
        moduli,
        unknowns,
        scale,
    };

    let mut solutions: Vec<Vec<f64>> = Vec::new();
    if problem.unknowns.is_empty() {
        let c = problem.candidate(&[]);
        if problem.residual_norm(&c) > options.newton_tol * scale {
            return Err(Error::internal(
                "zero-phase candidate must solve the system when no phase is free",
            ));
        }
        solutions.push(Vec::new());
    } else {
        for seed in select_seeds(&problem, options) {
            if let Some(sol) = refine(&problem, seed, options) {
                solutions.push(sol);
            }
        }
    }

    let mut reps: Vec<Vec<f64>> = Vec::new();
    'outer: for sol in solutions {
        for rep in &reps {
            let dist = rep
                .iter()
                .zip(&sol)
                .map(|(&a, &b)| circular_distance(a, b))
                .fold(0.0f64, f64::max);
            if dist < options.dedup_tol {
                continue 'outer;
            }
        }
        reps.push(sol);
    }
    reps.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));

    if reps.is_empty() {
        return Err(Error::internal(
            "partner search returned nothing; c = b always solves the system",
        ));
    }
    Ok(reps
        .into_iter()
        .map(|phases| StepVector { entries: problem.candidate(&phases) })
        .collect())
}

fn select_seeds(problem: &PhaseProblem, options: &SolverOptions) -> Vec<Vec<f64>> {
    let g = options.grid;
    let axis: Vec<f64> = (0..g).map(|i| -PI + (i as f64 + 0.5) * 2.0 * PI / g as f64).collect();
    let m = problem.unknowns.len();
    let threshold = options.seed_threshold * problem.scale;

    let mut norms = vec![0.0f64; g.pow(m as u32)];
    let mut phases = vec![0.0f64; m];
    for (idx, norm) in norms.iter_mut().enumerate() {
        decode_lattice(idx, g, &axis, &mut phases);
        *norm = problem.residual_norm(&problem.candidate(&phases));
    }

    let mut picked: Vec<usize> = Vec::new();
    let mut below: Vec<usize> = (0..norms.len()).filter(|&i| norms[i] <= threshold).collect();
    // Keep the search bounded on near-degenerate inputs.
    if below.len() > 2048 {
        below.sort_by(|&a, &b| norms[a].partial_cmp(&norms[b]).unwrap());
        below.truncate(2048);
    }
    picked.extend(below);

    // Every lattice-local minimum is also refined; each solution basin
    // contains one.
    for idx in 0..norms.len() {
        let v = norms[idx];
        let is_min = match m {
            1 => {
                let i = idx;
                v <= norms[(i + 1) % g] && v <= norms[(i + g - 1) % g]
            }
            _ => {
                let (i, j) = (idx / g, idx % g);
                let mut ok = true;
                for di in [g - 1, 0, 1] {
                    for dj in [g - 1, 0, 1] {
                        if di == 0 && dj == 0 {
                            continue;
                        }
                        let nb = ((i + di) % g) * g + (j + dj) % g;
                        ok &= v <= norms[nb];
                    }
                }
                ok
            }
        };
        if is_min {
            picked.push(idx);
        }
    }
    picked.sort_unstable();
    picked.dedup();
    picked
        .into_iter()
        .map(|idx| {
            let mut p = vec![0.0; m];
            decode_lattice(idx, g, &axis, &mut p);
            p
        })
        .collect()
}

fn decode_lattice(mut idx: usize, g: usize, axis: &[f64], out: &mut [f64]) {
    for slot in out.iter_mut().rev() {
        *slot = axis[idx % g];
        idx /= g;
    }
}

/// Damped Gauss–Newton from a seed; `None` when the iteration fails to
/// reach the convergence tolerance (the seed is simply discarded).
fn refine(problem: &PhaseProblem, mut phases: Vec<f64>, options: &SolverOptions) -> Option<Vec<f64>> {
    let m = phases.len();
    let tol = options.newton_tol * problem.scale;
    let mut lambda = 0.0f64;
    for _ in 0..options.max_iter {
        let c = problem.candidate(&phases);
        let r = problem.residual(&c);
        let norm = r.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm <= tol {
            return Some(canonical_phases(&phases));
        }
        let jac = problem.jacobian(&c);
        // Normal equations (m <= 2): (JᵀJ + λI) δ = -Jᵀ r.
        let mut a = [[0.0f64; 2]; 2];
        let mut gvec = [0.0f64; 2];
        for row in 0..r.len() {
            for x in 0..m {
                gvec[x] += jac[row][x] * r[row];
                for y in 0..m {
                    a[x][y] += jac[row][x] * jac[row][y];
                }
            }
        }
        let mut improved = false;
        for _ in 0..10 {
            let delta = match m {
                1 => {
                    let d = a[0][0] + lambda;
                    if d.abs() < 1e-300 {
                        return None;
                    }
                    vec![-gvec[0] / d]
                }
                _ => {
                    let a00 = a[0][0] + lambda;
                    let a11 = a[1][1] + lambda;
                    let det = a00 * a11 - a[0][1] * a[1][0];
                    if det.abs() < 1e-300 {
                        return None;
                    }
                    vec![
                        (-gvec[0] * a11 + gvec[1] * a[0][1]) / det,
                        (-gvec[1] * a00 + gvec[0] * a[1][0]) / det,
                    ]
                }
            };
            let trial: Vec<f64> = phases.iter().zip(&delta).map(|(p, d)| p + d).collect();
            let trial_norm = problem.residual_norm(&problem.candidate(&trial));
            if trial_norm < norm {
                phases = trial;
                lambda *= 0.25;
                improved = true;
                break;
            }
            lambda = (lambda * 10.0).max(1e-8 * (a[0][0] + a[1][1]).max(1e-30));
        }
        if !improved {
            return None;
        }
    }
    let c = problem.candidate(&phases);
    if problem.residual_norm(&c) <= tol {
        Some(canonical_phases(&phases))
    } else {
        None
    }
}

/// Phases reported in (-π, π].
fn canonical_phases(phases: &[f64]) -> Vec<f64> {
    phases
        .iter()
        .map(|&p| {
            let mut v = p.rem_euclid(2.0 * PI);
            if v > PI {
                v -= 2.0 * PI;
            }
            if v <= -PI {
                v += 2.0 * PI;
            }
            v
        })
        .collect()
}

fn circular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    d.min(2.0 * PI - d)
}
