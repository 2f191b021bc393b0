//! Runs the matching and linear-algebra backends on the same window and
//! compares their E∞ dimensions.
//!
//!     cargo run --release --example backend_crosscheck

use std::time::Instant;

use slice_ss::cli::output::cross_check;
use slice_ss::engine::{run_linalg, run_matching};
use slice_ss::{SpectrumSpec, Window};

fn main() -> slice_ss::Result<()> {
    let win = Window::new(-8, 16, 8, -10, 2)?;
    for spec in [SpectrumSpec::bp2(), SpectrumSpec::bpn(1)?, SpectrumSpec::bpn(2)?, SpectrumSpec::bpn(3)?] {
        let t0 = Instant::now();
        let m = run_matching(spec, &win);
        let t1 = Instant::now();
        let l = run_linalg(spec, &win)?;
        let t2 = Instant::now();
        let check = cross_check(&m, &l);
        println!(
            "{spec:>7}: {} tridegrees, {} disagreements, pages {:?}, matching {:?}, linalg {:?}",
            check.compared,
            check.disagreements.len(),
            m.pages,
            t1 - t0,
            t2 - t1
        );
    }
    Ok(())
}
