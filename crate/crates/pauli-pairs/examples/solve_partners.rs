//! Enumerate all step-function partners of a given four-step vector and
//! label each with the solution family it belongs to.
//!
//! ```bash
//! cargo run --example solve_partners
//! ```

use std::f64::consts::PI;

use pauli_pairs::steppairs::{
    family_sol3, match_family, solve_partners, FamilyParamsSol3, SolverOptions, StepVector,
};

fn show(b: &StepVector, partners: &[StepVector]) {
    println!("{} partner(s):", partners.len());
    for c in partners {
        let label = match match_family(b, c, 1e-6) {
            Some(f) => f.to_string(),
            None => "unmatched".into(),
        };
        let rendered: Vec<String> = c
            .entries
            .iter()
            .map(|z| format!("{:.4}{:+.4}i", z.re, z.im))
            .collect();
        println!("  [{}]  {}", rendered.join(", "), label);
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let options = SolverOptions::default();

    // Zero middle steps admit only the trivial partner.
    let b = StepVector::from_reals(&[1.0, 0.0, 0.0, 1.0]);
    println!("b = (1, 0, 0, 1)");
    show(&b, &solve_partners(&b, &options)?);

    let b = StepVector::from_reals(&[1.0, 1.0, 1.0, -1.0]);
    println!("\nb = (1, 1, 1, -1)");
    show(&b, &solve_partners(&b, &options)?);

    // The non-symmetric four-step example: its partner set contains the
    // real-entry companion (1, 3/2, 3, -2).
    let params = FamilyParamsSol3 { r: 2.0, phi: PI / 3.0, psi: 2.0 * PI / 3.0, theta: PI / 3.0 };
    let (b, _) = family_sol3(&params)?;
    println!("\nb = sol3(2, pi/3, 2pi/3, pi/3) left member");
    show(&b, &solve_partners(&b, &options)?);
    Ok(())
}
