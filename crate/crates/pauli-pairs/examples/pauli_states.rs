//! A subspace of Pauli states: combine a four-member UZD line into
//! `φ_n = (f_{2n-1}+f_{2n})/√2`; every vector in their span pairs with its
//! `ψ`-counterpart.
//!
//! ```bash
//! cargo run --example pauli_states
//! ```

use num_complex::Complex64;
use pauli_pairs::constructions::{pauli_state_pair, uzd_line};
use pauli_pairs::numerics::{Grid, SampledFunction};
use pauli_pairs::verify::{linear_independence, PairData};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let specs = uzd_line(4)?;
    let reach = specs.iter().map(|s| s.effective_cutoff(1e-10)).max().unwrap() as f64;
    let grid = Grid::new(-reach - 1.0, reach + 2.0, 13_001, 0.5)?;
    let members: Vec<SampledFunction> = specs
        .iter()
        .map(|s| {
            let f = s.sample(&grid);
            let norm = f.norm_l2();
            f.scaled(Complex64::new(1.0 / norm, 0.0))
        })
        .collect();
    println!("4 unit-norm UZD members sampled on [{:.1}, {:.1}]", grid.lo, grid.hi);

    let coeffs = [Complex64::new(0.6, 0.0), Complex64::new(0.8, 0.0)];
    let pair = pauli_state_pair(&members, &coeffs)?;
    let PairData::Sampled { left, right } = &pair.data else { unreachable!() };

    let space_dev = left
        .values
        .iter()
        .zip(&right.values)
        .map(|(a, b)| (a.norm() - b.norm()).abs())
        .fold(0.0f64, f64::max);
    println!("coefficients (0.6, 0.8):");
    println!("  max | |f| - |g| |      = {space_dev:.3e}");
    println!("  |<f, g>|               = {:.3e}", left.inner(right)?.norm());
    println!("  ||f||, ||g||           = {:.8}, {:.8}", left.norm_l2(), right.norm_l2());
    println!(
        "  linearly independent   = {}",
        linear_independence(&left.values, &right.values)
    );
    Ok(())
}
