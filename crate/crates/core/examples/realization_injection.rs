//! Compares E₁ with the E₁ of the C₂-equivariant slice spectral sequence,
//! whose coefficients are the Bredon cohomology of a point.
//!
//!     cargo run --example realization_injection

use slice_ss::coeff::{bredon_point_dim, check_realization_injection, equivariant_e1_dim, motivic_point_dim};
use slice_ss::monomial::e1_dim;
use slice_ss::{SpectrumSpec, Tridegree, Window};

fn main() -> slice_ss::Result<()> {
    println!("coefficients at (p, w), motivic / Bredon:");
    for w in (-4..=2).rev() {
        let row: Vec<String> = (-4..=4)
            .map(|p| format!("{}/{}", motivic_point_dim(p, w), bredon_point_dim(p, w)))
            .collect();
        println!("  w = {w:>2}: {}", row.join("  "));
    }

    let spec = SpectrumSpec::bp2();
    for t in [Tridegree::new(0, 0, -2), Tridegree::new(4, 2, -2), Tridegree::new(2, 0, 0)] {
        println!("{t}: motivic {}, equivariant {}", e1_dim(spec, t), equivariant_e1_dim(spec, t));
    }

    let win = Window::new(-16, 24, 10, -12, 4)?;
    for spec in [SpectrumSpec::bp2(), SpectrumSpec::kgl2()] {
        let report = check_realization_injection(spec, &win);
        println!("{spec}: {} tridegrees verified, {} violations", report.verified.len(), report.violations.len());
    }
    Ok(())
}
