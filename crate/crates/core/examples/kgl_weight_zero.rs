//! Weight-zero E∞ of kgl/2 and its comparison with K_*(ℝ; ℤ/2).
//!
//!     cargo run --example kgl_weight_zero

use slice_ss::engine::{e_infinity, run_matching};
use slice_ss::verify::{compare_suslin, SuslinStatus};
use slice_ss::{SpectrumSpec, Window};

fn main() -> slice_ss::Result<()> {
    let d_max = 23;
    let win = Window::new(0, d_max, d_max, 0, 0)?;
    let res = run_matching(SpectrumSpec::kgl2(), &win);
    let report = e_infinity(&res);

    println!("stem  E∞ dim  reps");
    for p in 0..=15 {
        let mut reps = Vec::new();
        for q in 0..=win.q_max {
            if let Some(e) = report.entries.get(&slice_ss::Tridegree::new(p, q, 0)) {
                reps.extend(e.reps.iter().map(|r| r[0].to_string()));
            }
        }
        println!("{p:>4}  {:>6}  {}", report.stem_dim(p, 0), reps.join(", "));
    }

    println!("\ndegree  |E∞|  |K_d|  status");
    for row in compare_suslin(&res, d_max as u32)? {
        let status = match row.status {
            SuslinStatus::Match => "match",
            SuslinStatus::ExtensionRequired => "extension",
            SuslinStatus::Mismatch => "MISMATCH",
        };
        println!("{:>6}  {:>4}  {:>5}  {status}", row.degree, row.einf_order, row.expected_order);
    }
    Ok(())
}
