//! Symmetric-profile pairs `f₁ = ρe^{iφ}`, `f₂ = ρ(x)e^{-iφ(a-x)}`: a
//! genuine Pauli pair for a curved phase, a dependent pair for a linear one.
//!
//! ```bash
//! cargo run --example mp_pair
//! ```

use std::sync::Arc;

use pauli_pairs::constructions::{mp_pair, MpParams};
use pauli_pairs::numerics::{Grid, SmoothBump};
use pauli_pairs::verify::verify_pair;

fn run(phase: &str, phi: Arc<dyn Fn(f64) -> f64 + Send + Sync>) -> Result<(), Box<dyn std::error::Error>> {
    let bump = SmoothBump::new(0.0, 1.0, 1.0)?;
    let params = MpParams {
        rho: Arc::new(move |x| bump.eval(x)),
        phi,
        a: 1.0,
        support: (0.0, 1.0),
    };
    let grid = Grid::new(-0.5, 1.5, 2001, 0.5)?;
    let pair = mp_pair(&params, &grid)?;
    let report = verify_pair(&pair, &Grid::new(-30.0, 30.0, 401, 0.5)?, 1e-10, 1e-6)?;
    println!("phase {phase}:\n{report}");
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run("x^2 (curved: Pauli pair)", Arc::new(|x: f64| x * x))?;
    // Linear phase: e^{i(φ(x)+φ(a-x))} is constant, so the two members are
    // proportional and only the independence check fails.
    run("x (linear: dependent pair)", Arc::new(|x: f64| x))?;
    Ok(())
}
