//! The two four-parameter families of four-step Pauli pairs: random draws
//! through the autocorrelation criterion, plus their MP flags.
//!
//! ```bash
//! cargo run --example step_families
//! ```

use std::f64::consts::PI;

use pauli_pairs::steppairs::{
    classify_pair, family_sol2, family_sol3, lemma_stepa_check, FamilyParamsSol2,
    FamilyParamsSol3,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);

    let mut worst2 = 0.0f64;
    for _ in 0..200 {
        let params = FamilyParamsSol2 {
            p: rng.gen_range(0.0..2.5),
            phi: rng.gen_range(-PI..PI),
            psi: rng.gen_range(-PI..PI),
            theta: rng.gen_range(-PI..PI),
        };
        let (b, c) = family_sol2(&params);
        let rep = lemma_stepa_check(&b, &c, 1e-10)?;
        assert!(rep.overall);
        worst2 = worst2.max(rep.check("autocorrelation").unwrap().max_deviation);
    }
    println!("sol2: 200 random draws pass; worst rho deviation {worst2:.3e}");

    let mut worst3 = 0.0f64;
    let mut drawn = 0;
    while drawn < 200 {
        let params = FamilyParamsSol3 {
            r: rng.gen_range(0.3..2.0),
            phi: rng.gen_range(-PI..PI),
            psi: rng.gen_range(-PI..PI),
            theta: rng.gen_range(-PI..PI),
        };
        if params.phi.sin().abs() < 0.1
            || params.psi.sin().abs() < 0.1
            || (params.psi - params.phi).sin().abs() < 0.1
        {
            continue;
        }
        let (b, c) = family_sol3(&params)?;
        let rep = lemma_stepa_check(&b, &c, 1e-10)?;
        assert!(rep.overall);
        worst3 = worst3.max(rep.check("autocorrelation").unwrap().max_deviation);
        drawn += 1;
    }
    println!("sol3: 200 random draws pass; worst rho deviation {worst3:.3e}");

    // sol2 pairs always carry a vertical symmetry of the modulus profile.
    let (b, c) = family_sol2(&FamilyParamsSol2 { p: 1.3, phi: 0.4, psi: -1.1, theta: 2.0 });
    let class = classify_pair(&b, &c, 1e-10)?;
    println!("\nsol2 sample: trivial:{} mp1:{} mp2:{}", class.trivial, class.mp1, class.mp2);

    // sol3 with e^{2iθ} = 1 is exactly the conjugate-pair class.
    let (b, c) = family_sol3(&FamilyParamsSol3 { r: 0.7, phi: -0.8, psi: 1.9, theta: PI })?;
    let class = classify_pair(&b, &c, 1e-8)?;
    println!("sol3 at theta = pi: trivial:{} mp1:{} mp2:{}", class.trivial, class.mp1, class.mp2);
    Ok(())
}
