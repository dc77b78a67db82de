//! The `pauli` command line: construct pairs and sets, verify, classify,
//! enumerate step partners, and export curves for plotting.
//!
//! Exit codes: 0 success (and verification pass), 1 verification failure,
//! 2 usage error, 3 i/o or file-format failure.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use crate::constructions::{
    mp_pair, pauli_combine, uzd_line, IsmagilovParams, MpParams,
};
use crate::error::{Error, Result};
use crate::io::{parse_complex_list, read_json, write_json, PairFile, SetFile};
use crate::numerics::{cis, Grid, SampledFunction, SmoothBump};
use crate::periodic::{modulation_coeffs, uzd_periodic};
use crate::steppairs::{
    classify_pair, family_sol2, family_sol3, is_pauli_set, match_family, solve_partners,
    step_fourier_abs, FamilyParamsSol2, FamilyParamsSol3, SolverOptions, StepVector,
};
use crate::verify::{verify_pair, verify_uzd, FunctionPair, PairData, Provenance};

#[derive(Parser, Debug)]
#[command(
    name = "pauli",
    version,
    about = "Construct and numerically verify Pauli pairs and ultimate-zero-divisor sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a pair or set file from one of the constructions.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Verify the Pauli-pair conditions of a pair file.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 50.0, allow_negative_numbers = true)]
        ymax: f64,
        #[arg(long, default_value_t = 4001)]
        ypoints: usize,
        #[arg(long = "tol-freq", default_value_t = 1e-6, allow_negative_numbers = true)]
        tol_freq: f64,
        #[arg(long = "tol-space", default_value_t = 1e-10, allow_negative_numbers = true)]
        tol_space: f64,
    },
    /// Print the trivial/MP1/MP2 flags of a step pair file.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1e-8, allow_negative_numbers = true)]
        tol: f64,
    },
    /// Enumerate all partners of a four-step vector.
    Solve {
        /// Comma-separated entries, re:im each; the first must be 1.
        #[arg(long)]
        b: String,
        #[arg(long, default_value_t = 360)]
        grid: usize,
    },
    /// Verify a set file (Pauli set or UZD set, by kind).
    CheckSet {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1e-8, allow_negative_numbers = true)]
        tol: f64,
    },
    /// Export |f|, |g|, |f̂|, |ĝ| curves to CSV.
    Sample {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 50.0, allow_negative_numbers = true)]
        ymax: f64,
        #[arg(long, default_value_t = 1001)]
        ypoints: usize,
    },
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// Equal-modulus four-step family.
    Sol2 {
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[command(flatten)]
        angles: AngleArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Second four-step family (requires r·sinφ·sinψ·sin(ψ-φ) ≠ 0).
    Sol3 {
        #[arg(long, allow_negative_numbers = true)]
        r: f64,
        #[command(flatten)]
        angles: AngleArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Symmetric-profile pair: bump modulus, phase from a fixed menu.
    Mp {
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        lo: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        hi: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        amplitude: f64,
        /// Phase function: quadratic, cubic, sine, or linear.
        #[arg(long, default_value = "quadratic")]
        phase: String,
        #[arg(long, default_value_t = 2001)]
        xpoints: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Translation pair of the window-times-periodic-phase family.
    Ismagilov {
        #[arg(long = "shift-a", default_value_t = 0.0, allow_negative_numbers = true)]
        shift_a: f64,
        #[arg(long = "shift-b", default_value_t = 0.3, allow_negative_numbers = true)]
        shift_b: f64,
        #[arg(long, default_value_t = 64)]
        cutoff: usize,
        #[arg(long, default_value_t = 120.0, allow_negative_numbers = true)]
        xmax: f64,
        #[arg(long, default_value_t = 6001)]
        xpoints: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Pair of weighted combinations over a UZD line.
    Interleave {
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Weights of the second member, comma-separated re:im (first
        /// member uses all ones).
        #[arg(long, default_value = "1:0,-1:0")]
        weights: String,
        /// Interpolated transforms of the narrow windows need a dense grid.
        #[arg(long, default_value_t = 48001)]
        xpoints: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// UZD line recipe on the real line.
    Uzd {
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Periodic UZD recipe in L²[0,2π].
    PeriodicUzd {
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args, Debug)]
struct AngleArgs {
    /// Radians.
    #[arg(long, allow_negative_numbers = true)]
    phi: f64,
    /// Radians.
    #[arg(long, allow_negative_numbers = true)]
    psi: f64,
    /// Radians.
    #[arg(long, allow_negative_numbers = true)]
    theta: f64,
}

/// Entry point used by the binary and by tests.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io { .. } | Error::Format { .. } => 3,
                Error::Contract(_) => 2,
                _ => 1,
            }
        }
    }
}

pub fn run_from_env() -> i32 {
    run(std::env::args_os())
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Construct { what } => construct(what),
        Command::Verify { input, ymax, ypoints, tol_freq, tol_space } => {
            let pair = load_pair(&input)?;
            let y_grid = Grid::new(-ymax, ymax, ypoints, 0.5)?;
            let report = verify_pair(&pair, &y_grid, tol_space, tol_freq)?;
            print!("{report}");
            Ok(if report.overall { 0 } else { 1 })
        }
        Command::Classify { input, tol } => {
            let pair = load_pair(&input)?;
            let PairData::Step { left, right } = &pair.data else {
                return Err(Error::contract("classify expects a step pair file"));
            };
            let class = classify_pair(left, right, tol)?;
            println!(
                "trivial:{} mp1:{} mp2:{}",
                class.trivial, class.mp1, class.mp2
            );
            Ok(0)
        }
        Command::Solve { b, grid } => {
            let entries = parse_complex_list(&b)?;
            if entries.len() != 4 {
                return Err(Error::contract(format!(
                    "solve expects exactly 4 entries, got {}",
                    entries.len()
                )));
            }
            let b = StepVector::new(entries)?;
            let options = SolverOptions { grid, ..Default::default() };
            let partners = solve_partners(&b, &options)?;
            println!("{} partner(s) of b = {}", partners.len(), render_vector(&b));
            for c in &partners {
                let family = match match_family(&b, c, 1e-6) {
                    Some(f) => f.to_string(),
                    None => "unmatched".to_string(),
                };
                println!("c = {}  family={}", render_vector(c), family);
            }
            Ok(0)
        }
        Command::CheckSet { input, tol } => {
            let set: SetFile = read_json(&input)?;
            let report = check_set(&set, tol)?;
            print!("{report}");
            Ok(if report.overall { 0 } else { 1 })
        }
        Command::Sample { input, out, ymax, ypoints } => {
            let pair = load_pair(&input)?;
            let y_grid = Grid::new(-ymax, ymax, ypoints, 0.5)?;
            let csv = sample_csv(&pair, &y_grid)?;
            std::fs::write(&out, csv)
                .map_err(|e| Error::Io { path: out.clone(), source: e })?;
            Ok(0)
        }
    }
}

fn load_pair(path: &Path) -> Result<FunctionPair> {
    let file: PairFile = read_json(path)?;
    file.to_pair().map_err(|e| match e {
        Error::Contract(message) => Error::Format { path: path.to_path_buf(), message },
        other => other,
    })
}

fn render_vector(v: &StepVector) -> String {
    v.entries
        .iter()
        .map(|&z| format!("{:.16e}:{:.16e}", z.re, z.im))
        .collect::<Vec<_>>()
        .join(",")
}

fn construct(what: Construct) -> Result<i32> {
    match what {
        Construct::Sol2 { p, angles, out } => {
            let params = FamilyParamsSol2 { p, phi: angles.phi, psi: angles.psi, theta: angles.theta };
            let (b, c) = family_sol2(&params);
            let prov = Provenance::new("sol2")
                .with_num("p", p)
                .with_num("phi", angles.phi)
                .with_num("psi", angles.psi)
                .with_num("theta", angles.theta);
            let pair = FunctionPair::step(b, c, prov)?;
            write_json(&out, &PairFile::from_pair(&pair))?;
            Ok(0)
        }
        Construct::Sol3 { r, angles, out } => {
            let params = FamilyParamsSol3 { r, phi: angles.phi, psi: angles.psi, theta: angles.theta };
            let (b, c) = family_sol3(&params)?;
            let prov = Provenance::new("sol3")
                .with_num("r", r)
                .with_num("phi", angles.phi)
                .with_num("psi", angles.psi)
                .with_num("theta", angles.theta);
            let pair = FunctionPair::step(b, c, prov)?;
            write_json(&out, &PairFile::from_pair(&pair))?;
            Ok(0)
        }
        Construct::Mp { lo, hi, amplitude, phase, xpoints, out } => {
            let bump = SmoothBump::new(lo, hi, amplitude)?;
            let a = lo + hi;
            let phi: Arc<dyn Fn(f64) -> f64 + Send + Sync> = match phase.as_str() {
                "quadratic" => Arc::new(|x: f64| x * x),
                "cubic" => Arc::new(|x: f64| x * x * x),
                "sine" => Arc::new(|x: f64| (3.0 * x).sin()),
                "linear" => Arc::new(|x: f64| x),
                other => {
                    return Err(Error::contract(format!(
                        "unknown phase '{other}' (expected quadratic, cubic, sine or linear)"
                    )))
                }
            };
            let params = MpParams {
                rho: Arc::new(move |x| bump.eval(x)),
                phi,
                a,
                support: (lo, hi),
            };
            let margin = 0.25 * (hi - lo);
            let grid = Grid::new(lo - margin, hi + margin, xpoints, 0.5)?;
            let mut pair = mp_pair(&params, &grid)?;
            pair.provenance = pair.provenance.clone().with_text("phase", &phase);
            write_json(&out, &PairFile::from_pair(&pair))?;
            Ok(0)
        }
        Construct::Ismagilov { shift_a, shift_b, cutoff, xmax, xpoints, out } => {
            let window = SmoothBump::new(0.0, 1.0, 1.0)?;
            let fa = IsmagilovParams::new(
                Arc::new(|t: f64| cis(t.cos())),
                window,
                shift_a,
                cutoff,
            )?;
            let fb = fa.with_shift(shift_b);
            let grid = Grid::new(-xmax, xmax, xpoints, 0.5)?;
            let left = SampledFunction::from_fn(grid, |x| fa.eval(x), Some((-xmax, xmax)));
            let right = SampledFunction::from_fn(grid, |x| fb.eval(x), Some((-xmax, xmax)));
            let prov = Provenance::new("ismagilov")
                .with_num("shift_a", shift_a)
                .with_num("shift_b", shift_b)
                .with_num("cutoff", cutoff as f64)
                .with_text("phase", "exp(i cos t)");
            let pair = FunctionPair::sampled(left, right, prov)?;
            write_json(&out, &PairFile::from_pair(&pair))?;
            Ok(0)
        }
        Construct::Interleave { m, weights, xpoints, out } => {
            let w = parse_complex_list(&weights)?;
            if w.len() != m {
                return Err(Error::contract(format!(
                    "expected {m} weights, got {}",
                    w.len()
                )));
            }
            let specs = uzd_line(m)?;
            let reach = specs
                .iter()
                .map(|s| s.effective_cutoff(1e-14) as f64)
                .fold(0.0f64, f64::max);
            let grid = Grid::new(-reach - 1.0, reach + 2.0, xpoints, 0.5)?;
            let fs: Vec<SampledFunction> = specs.iter().map(|s| s.sample(&grid)).collect();
            let ones = vec![Complex64::new(1.0, 0.0); m];
            let mags = vec![1.0; m];
            let left = pauli_combine(&fs, &mags, &ones)?;
            let right = pauli_combine(&fs, &mags, &w)?;
            let prov = Provenance::new("interleave")
                .with_num("m", m as f64)
                .with_text("weights", &weights);
            let pair = FunctionPair::sampled(left, right, prov)?;
            write_json(&out, &PairFile::from_pair(&pair))?;
            Ok(0)
        }
        Construct::Uzd { m, out } => {
            uzd_line(m)?; // validate the recipe before writing it
            write_json(&out, &SetFile::uzd_line(m))?;
            Ok(0)
        }
        Construct::PeriodicUzd { n, out } => {
            uzd_periodic(n)?;
            write_json(&out, &SetFile::uzd_periodic(n))?;
            Ok(0)
        }
    }
}

fn check_set(set: &SetFile, tol: f64) -> Result<crate::verify::VerificationReport> {
    match set.kind.as_str() {
        "step-set" => is_pauli_set(&set.step_vectors()?, tol),
        "uzd-line" => {
            let m = set.num_param("m")? as usize;
            let specs = uzd_line(m)?;
            let reach = specs
                .iter()
                .map(|s| s.effective_cutoff(1e-12) as f64)
                .fold(0.0f64, f64::max);
            let x_grid = Grid::new(-reach - 1.0, reach + 2.0, 4001, 0.5)?;
            let y_grid = Grid::new(-20.0, 20.0, 1201, 0.5)?;
            let space: Vec<SampledFunction> =
                specs.iter().map(|s| s.sample(&x_grid)).collect();
            let freq: Result<Vec<SampledFunction>> = specs
                .iter()
                .map(|s| {
                    let values = s.fourier_batch(&y_grid.points())?;
                    SampledFunction::new(y_grid, values, None)
                })
                .collect();
            verify_uzd(&space, &freq?, tol)
        }
        "uzd-periodic" => {
            let n = set.num_param("n")? as u32;
            let members = uzd_periodic(n)?;
            // Not a power of two: keeps x/2π off the dyadic lattice where
            // the Rademacher factors vanish.
            let x_grid = Grid::new(0.0, 2.0 * std::f64::consts::PI, 4001, 0.5)?;
            let k_max = 64i64;
            let k_grid = Grid::new(-(k_max as f64), k_max as f64 + 1.0, (2 * k_max + 1) as usize, 0.0)?;
            let space: Vec<SampledFunction> = members
                .iter()
                .map(|mb| SampledFunction::from_fn(x_grid, |x| mb.eval(x), None))
                .collect();
            let freq: Result<Vec<SampledFunction>> = members
                .iter()
                .map(|mb| {
                    let coeffs = modulation_coeffs(&mb.modulation, k_max)?;
                    SampledFunction::new(k_grid, coeffs, None)
                })
                .collect();
            verify_uzd(&space, &freq?, tol)
        }
        other => Err(Error::contract(format!("unknown set kind '{other}'"))),
    }
}

fn sample_csv(pair: &FunctionPair, y_grid: &Grid) -> Result<String> {
    let fmt = |v: f64| format!("{v:.16e}");
    let (xs, fx, gx, fy, gy) = match &pair.data {
        PairData::Step { left, right } => {
            let n = left.len() as f64;
            let x_grid = Grid::new(-1.0, n + 1.0, 1001, 0.5)?;
            let xs = x_grid.points();
            let fx: Vec<f64> = xs.iter().map(|&x| left.eval(x).norm()).collect();
            let gx: Vec<f64> = xs.iter().map(|&x| right.eval(x).norm()).collect();
            let fy: Vec<f64> = y_grid
                .points()
                .iter()
                .map(|&y| step_fourier_abs(left, y))
                .collect::<Result<_>>()?;
            let gy: Vec<f64> = y_grid
                .points()
                .iter()
                .map(|&y| step_fourier_abs(right, y))
                .collect::<Result<_>>()?;
            (xs, fx, gx, fy, gy)
        }
        PairData::Sampled { left, right } => {
            let xs = left.grid.points();
            let fx: Vec<f64> = left.values.iter().map(|v| v.norm()).collect();
            let gx: Vec<f64> = right.values.iter().map(|v| v.norm()).collect();
            let lhat = crate::numerics::fourier_transform(left, y_grid)?;
            let rhat = crate::numerics::fourier_transform(right, y_grid)?;
            let fy: Vec<f64> = lhat.values.iter().map(|v| v.norm()).collect();
            let gy: Vec<f64> = rhat.values.iter().map(|v| v.norm()).collect();
            (xs, fx, gx, fy, gy)
        }
    };
    let ys = y_grid.points();
    let rows = xs.len().max(ys.len());
    let mut csv = String::from("x,|f|,|g|,y,|fhat|,|ghat|\n");
    for i in 0..rows {
        let (a, b, c) = if i < xs.len() {
            (fmt(xs[i]), fmt(fx[i]), fmt(gx[i]))
        } else {
            (String::new(), String::new(), String::new())
        };
        let (d, e, f) = if i < ys.len() {
            (fmt(ys[i]), fmt(fy[i]), fmt(gy[i]))
        } else {
            (String::new(), String::new(), String::new())
        };
        csv.push_str(&format!("{a},{b},{c},{d},{e},{f}\n"));
    }
    Ok(csv)
}
