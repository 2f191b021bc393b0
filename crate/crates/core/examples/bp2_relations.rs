//! Checks the relations of the BP/2 E∞ presentation on a window.
//!
//!     cargo run --example bp2_relations

use slice_ss::engine::run_matching;
use slice_ss::verify::{check_einf_relations, CheckStatus};
use slice_ss::{SpectrumSpec, Window};

fn main() -> slice_ss::Result<()> {
    let spec = SpectrumSpec::bp2();
    let win = Window::new(-16, 24, 10, -12, 4)?;
    let res = run_matching(spec, &win);
    let report = check_einf_relations(spec, &res);
    for c in report.checks.iter().filter(|c| c.status != CheckStatus::Untested).take(20) {
        println!("{:?}  {:?}", c.status, c.relation);
    }
    println!(
        "{} pass, {} fail, {} fall outside {win}",
        report.count(CheckStatus::Pass),
        report.count(CheckStatus::Fail),
        report.count(CheckStatus::Untested)
    );
    assert!(report.passed());
    Ok(())
}
