//! Below four steps the solution space is rigid: every partner of a
//! three-step vector is a trivial multiple or a symmetric/conjugate-type
//! relative.
//!
//! ```bash
//! cargo run --example three_step_rigidity
//! ```

use num_complex::Complex64;
use pauli_pairs::numerics::cis;
use pauli_pairs::steppairs::{
    is_mp1_relative, is_mp2_relative, is_trivial_relative, solve_partners3, SolverOptions,
    StepVector,
};

fn label(b: &StepVector, c: &StepVector) -> &'static str {
    if is_trivial_relative(b, c, 1e-6) {
        "trivial"
    } else if is_mp1_relative(b, c, 1e-6) {
        "symmetric-profile relative"
    } else if is_mp2_relative(b, c, 1e-6) {
        "conjugate relative"
    } else {
        "OUTSIDE the known classes"
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let options = SolverOptions::default();

    // A unimodular last entry makes the moduli palindromic, so the
    // reflected partner exists.
    let b = StepVector::new(vec![Complex64::new(1.0, 0.0), 1.7 * cis(0.9), cis(-2.1)])?;
    println!("b = (1, 1.7e^{{0.9i}}, e^{{-2.1i}}):");
    for c in solve_partners3(&b, &options)? {
        println!("  partner {:?} -> {}", c.entries, label(&b, &c));
    }

    // A non-unimodular last entry leaves only the trivial partner.
    let b = StepVector::new(vec![Complex64::new(1.0, 0.0), 1.3 * cis(0.4), 2.0 * cis(1.0)])?;
    println!("\nb = (1, 1.3e^{{0.4i}}, 2e^{{i}}):");
    for c in solve_partners3(&b, &options)? {
        println!("  partner {:?} -> {}", c.entries, label(&b, &c));
    }
    Ok(())
}
