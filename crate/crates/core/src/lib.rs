//! A trigraded spectral-sequence engine for the motivic slice spectral
//! sequence of BP/2 and BP⟨n⟩/2 over a real closed field.
//!
//! The E₁-page is `F₂[ρ, τ, v₁, v₂, …]` (truncated to `v₁, …, vₙ` at finite
//! height) with differentials `d_{2^k−1}(τ^{2^k}) = vₖ ρ^{2^{k+1}−1}`. The
//! crate runs those differentials page by page with two independent
//! backends ([`engine::run_matching`], [`engine::run_linalg`]), extracts a
//! certified E∞-page, and checks it against the known E∞ presentations and,
//! for kgl/2 in weight zero, against the mod-2 K-theory of ℝ.
//!
//! ```
//! use slice_ss::{engine, SpectrumSpec, Window};
//!
//! let win = Window::new(0, 7, 8, 0, 0).unwrap();
//! let res = engine::run_matching(SpectrumSpec::kgl2(), &win);
//! let report = engine::e_infinity(&res);
//! let dims: Vec<usize> = (0..8).map(|p| report.stem_dim(p, 0)).collect();
//! assert_eq!(dims, [1, 1, 2, 1, 1, 0, 0, 0]);
//! ```

pub mod cli;
pub mod coeff;
pub mod engine;
pub mod error;
pub mod gf2;
pub mod monomial;
pub mod verify;

pub use engine::{Backend, SsResult};
pub use error::{Error, Result};
pub use monomial::{Monomial, SpectrumSpec, Tridegree, Window};
