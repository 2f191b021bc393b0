//! Counts normal forms of the E∞ presentation and compares with the engine.
//!
//!     cargo run --example presentation_oracle

use slice_ss::engine::run_matching;
use slice_ss::verify::presentation::{presentation_basis, presentation_dim};
use slice_ss::{SpectrumSpec, Tridegree, Window};

fn main() -> slice_ss::Result<()> {
    let spec = SpectrumSpec::bpn(2)?;
    let t = Tridegree::new(2, 2, -12);
    for w in presentation_basis(spec, t) {
        println!("{t}: ρ^{} τ^{} t^{} v{:?}", w.rho, w.tau, w.t, w.vs);
    }

    let win = Window::new(-6, 12, 6, -8, 0)?;
    for spec in [SpectrumSpec::bp2(), SpectrumSpec::kgl2(), SpectrumSpec::bpn(2)?] {
        let res = run_matching(spec, &win);
        let mut agree = 0;
        for t in win.occupied().into_iter().filter(|&t| res.certified(t)) {
            assert_eq!(res.dim(t) as u64, presentation_dim(spec, t), "{spec} {t}");
            agree += 1;
        }
        println!("{spec}: engine and presentation agree on {agree} tridegrees");
    }
    Ok(())
}
