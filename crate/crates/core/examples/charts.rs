//! Draws E₁ and E∞ at one weight, as text and as SVG.
//!
//!     cargo run --example charts

use slice_ss::cli::chart::{chart_data, render_svg, render_txt, Page};
use slice_ss::engine::run_matching;
use slice_ss::{SpectrumSpec, Window};

fn main() -> slice_ss::Result<()> {
    let win = Window::new(-4, 10, 6, -4, -4)?;
    let res = run_matching(SpectrumSpec::bp2(), &win);
    for page in [Page::R(1), Page::R(3), Page::Infinity] {
        let data = chart_data(&res, page, -4)?;
        println!("{}", render_txt(&data));
        for ((p, q), (tp, tq), n) in &data.arrows {
            println!("  d: ({p},{q}) -> ({tp},{tq}) x{n}");
        }
    }
    let path = std::env::temp_dir().join("bp2-weight-minus-4-e1.svg");
    std::fs::write(&path, render_svg(&chart_data(&res, Page::R(1), -4)?))?;
    println!("wrote {}", path.display());
    Ok(())
}
