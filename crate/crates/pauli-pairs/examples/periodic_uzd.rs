//! UZD sets of 2π-periodic smooth functions: Rademacher-modulated bump
//! trains with pairwise disjoint supports and pairwise disjoint Fourier
//! coefficient indices.
//!
//! ```bash
//! cargo run --example periodic_uzd
//! ```

use pauli_pairs::periodic::{
    allowed_index, modulation_coeffs, rademacher, uzd_periodic, vanishing_pattern_check,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("Rademacher samples: r_1(0.3) = {}, r_1(0.75) = {}, r_2(0.3) = {}",
        rademacher(1, 0.3), rademacher(1, 0.75), rademacher(2, 0.3));

    for n in [2u32, 3] {
        println!("\nn = {n}:");
        let members = uzd_periodic(n)?;
        for (j, member) in members.iter().enumerate() {
            let report = vanishing_pattern_check(&member.modulation, 64, 1e-10)?;
            let live: Vec<i64> = (-10..=10)
                .filter(|&k| allowed_index(j as u32, n, k))
                .collect();
            println!(
                "  member {j}: vanishing pattern {}; allowed |k| <= 10: {live:?}",
                if report.overall { "pass" } else { "FAIL" }
            );
        }
        // Index-support disjointness across members.
        let coeffs: Vec<Vec<_>> = members
            .iter()
            .map(|m| modulation_coeffs(&m.modulation, 64))
            .collect::<Result<_, _>>()?;
        let mut collisions = 0;
        for i in 0..coeffs.len() {
            let ti = 1e-10 * coeffs[i].iter().map(|c| c.norm()).fold(0.0f64, f64::max);
            for j in (i + 1)..coeffs.len() {
                let tj = 1e-10 * coeffs[j].iter().map(|c| c.norm()).fold(0.0f64, f64::max);
                for idx in 0..coeffs[i].len() {
                    if coeffs[i][idx].norm() > ti && coeffs[j][idx].norm() > tj {
                        collisions += 1;
                    }
                }
            }
        }
        println!("  coefficient-index collisions for |k| <= 64: {collisions}");
    }
    Ok(())
}
