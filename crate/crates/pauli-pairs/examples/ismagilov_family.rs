//! The window-times-periodic-phase family `f_a = ĝ·φ(·-a)`: translating
//! the phase never changes `|f_a|` or `|f̂_a|`.
//!
//! ```bash
//! cargo run --example ismagilov_family
//! ```

use std::sync::Arc;

use pauli_pairs::constructions::IsmagilovParams;
use pauli_pairs::numerics::{cis, oscillation_panels, transform_fn, SmoothBump};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // exp(i cos t): unimodular, 2π-periodic, with infinitely many nonzero
    // Fourier coefficients (Bessel values), so no translate is a scalar
    // multiple of another.
    let base = IsmagilovParams::new(
        Arc::new(|t: f64| cis(t.cos())),
        SmoothBump::new(0.0, 1.0, 1.0)?,
        0.0,
        48,
    )?;
    println!("phase coefficients |c_k| for k = 0..6:");
    for k in 0..=6 {
        println!("  |c_{k}| = {:.6e}", base.coeff(k).norm());
    }

    // |f_a(x)| = |ĝ(x)| independently of the shift.
    for &x in &[-2.0, 0.4, 3.7] {
        let m0 = base.eval(x).norm();
        let m1 = base.with_shift(0.3).eval(x).norm();
        println!("x = {x:5}: |f_0| = {m0:.8e}, |f_0.3| = {m1:.8e}");
    }

    // The transform modulus from the disjoint-support closed form against
    // direct quadrature of the truncated function.
    let ys: Vec<f64> = (0..9).map(|i| -2.0 + 0.5 * i as f64 + 0.013).collect();
    let x_max = 150.0;
    let hat = transform_fn(
        |x| base.eval(x),
        -x_max,
        x_max,
        oscillation_panels(2.0 * x_max, 2.5),
        &ys,
    )?;
    println!("\n        y     closed form      quadrature");
    for (&y, v) in ys.iter().zip(&hat) {
        println!("  {y:7.3}  {:.8e}  {:.8e}", base.fourier_abs_closed(y)?, v.norm());
    }
    Ok(())
}
