//! First differentials on a few monomials, and which ones survive to E∞.
//!
//!     cargo run --example permanent_cycles

use slice_ss::engine::differential::first_differential;
use slice_ss::engine::survives_forever;
use slice_ss::{Monomial, SpectrumSpec};

fn main() {
    let monomials = [
        Monomial::rho(1),
        Monomial::tau(1),
        Monomial::tau(2),
        Monomial::tau(4),
        Monomial::tau(8),
        Monomial::v(2).with_tau(4),
        Monomial::new(4, 2, [(2, 1)]),
    ];
    for spec in [SpectrumSpec::bp2(), SpectrumSpec::kgl2()] {
        println!("{spec}");
        for m in &monomials {
            if !m.fits(spec) {
                println!("  {m} is not in E1");
                continue;
            }
            let d = match first_differential(spec, m) {
                Some(a) => format!("d{}({m}) = {}", a.page, a.target),
                None => format!("no differential on {m}"),
            };
            println!("  {d:<40} survives: {}", survives_forever(spec, m));
        }
    }
}
