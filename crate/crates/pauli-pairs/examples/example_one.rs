//! The four-step Pauli pair that is neither trivial nor of symmetric or
//! conjugate type: family `sol3` at `r = 2`, `φ = θ = π/3`, `ψ = 2π/3`.
//!
//! ```bash
//! cargo run --example example_one
//! ```

use std::f64::consts::PI;

use pauli_pairs::numerics::Grid;
use pauli_pairs::steppairs::{
    autocorrelation, classify_pair, family_sol3, lemma_stepa_check, FamilyParamsSol3,
};
use pauli_pairs::verify::{verify_pair, FunctionPair, Provenance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = FamilyParamsSol3 { r: 2.0, phi: PI / 3.0, psi: 2.0 * PI / 3.0, theta: PI / 3.0 };
    let (b, c) = family_sol3(&params)?;

    println!("b = {:?}", b.entries);
    println!("c = {:?}", c.entries);
    println!("rho(b) = {:?}", autocorrelation(&b).rho);
    println!("rho(c) = {:?}", autocorrelation(&c).rho);

    let lemma = lemma_stepa_check(&b, &c, 1e-12)?;
    println!("\nstep-pair criterion at 1e-12:\n{lemma}");

    let pair = FunctionPair::step(b.clone(), c.clone(), Provenance::new("sol3"))?;
    let report = verify_pair(&pair, &Grid::default_y(), 1e-12, 1e-10)?;
    println!("full verification:\n{report}");

    let class = classify_pair(&b, &c, 1e-8)?;
    println!(
        "classification: trivial:{} mp1:{} mp2:{}",
        class.trivial, class.mp1, class.mp2
    );
    println!("=> a bounded-support Pauli pair outside both symmetric-profile classes");
    Ok(())
}
