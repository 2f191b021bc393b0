//! Lists the E₁ basis at a few tridegrees and checks the closed form.
//!
//!     cargo run --example e1_page

use slice_ss::monomial::{e1_dim, monomials_at, partition_count};
use slice_ss::{SpectrumSpec, Tridegree};

fn main() -> slice_ss::Result<()> {
    for spec in [SpectrumSpec::bp2(), SpectrumSpec::bpn(2)?, SpectrumSpec::kgl2()] {
        println!("{spec}: partitions of q into 2^i - 1");
        let counts: Vec<u64> = (0..=10).map(|q| partition_count(spec, q)).collect::<Result<_, _>>()?;
        println!("  q = 0..10: {counts:?}");
        for t in [Tridegree::new(0, 0, -2), Tridegree::new(6, 3, -3), Tridegree::new(8, 5, -9)] {
            let basis = monomials_at(spec, t);
            let names: Vec<String> = basis.iter().map(|m| m.to_string()).collect();
            println!("  E1{t}: dim {} = {}", e1_dim(spec, t), names.join(" + "));
            assert_eq!(basis.len() as u64, e1_dim(spec, t));
        }
    }
    Ok(())
}
