//! The single-arrow differential rule and window inflation.
//!
//! On generators, `d_{2^k−1}(τ^{2^k}) = vₖ ρ^{2^{k+1}−1}` and nothing shorter.
//! Over F₂ squares are cycles, so on `ρ^a τ^b v^e` only the lowest binary
//! digit of `b` at position ≥ 1 carries a differential: with
//! `k = ν₂(b − (b mod 2))`,
//!
//! ```text
//! d_{2^k−1}(ρ^a τ^b v^e) = ρ^{a + 2^{k+1} − 1} τ^{b − 2^k} vₖ v^e
//! ```
//!
//! At finite height `n`, `k > n` means the monomial is a power of the
//! permanent cycle `τ^{2^{n+1}}` times lower terms, and there is no arrow.
//!
//! Every arrow moves `(p, q, w)` by `(−1, r, 0)`. Since `b` is constant on a
//! tridegree, so is the page.

use serde::{Deserialize, Serialize};

use crate::monomial::{Monomial, SpectrumSpec, Tridegree, Window};

/// A nonzero `d_r` from `source` to `target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub page: u32,
    pub source: Monomial,
    pub target: Monomial,
}

/// Page `2^k − 1`.
pub fn page_of_index(k: u32) -> u32 {
    (1u32 << k) - 1
}

/// Shift in tridegree along a `d_r`.
pub fn arrow_shift(r: u32) -> Tridegree {
    Tridegree::new(-1, i64::from(r), 0)
}

/// The index `k` of the generator hit by the differential on a τ-exponent
/// `b`, if there is one.
pub fn differential_index(spec: SpectrumSpec, b: i64) -> Option<u32> {
    if b <= 1 {
        return None;
    }
    let even = b - (b & 1);
    let k = even.trailing_zeros();
    match spec.height() {
        Some(n) if k > n => None,
        _ => Some(k),
    }
}

/// Page of the differential leaving any monomial at `t`, if any.
pub fn page_at(spec: SpectrumSpec, t: Tridegree) -> Option<u32> {
    differential_index(spec, t.tau_exponent()).map(page_of_index)
}

pub fn first_differential(spec: SpectrumSpec, m: &Monomial) -> Option<Arrow> {
    let b = m.tau_exp();
    let k = differential_index(spec, i64::from(b))?;
    let target = m
        .clone()
        .with_rho(m.rho_exp() + (1 << (k + 1)) - 1)
        .with_tau(b - (1 << k))
        .bump_v(k, 1);
    Some(Arrow {
        page: page_of_index(k),
        source: m.clone(),
        target,
    })
}

/// Longest page of any differential leaving a tridegree of `win`.
pub fn max_page_from(spec: SpectrumSpec, win: &Window) -> u32 {
    win.occupied()
        .into_iter()
        .filter_map(|t| page_at(spec, t))
        .max()
        .unwrap_or(0)
}

/// Enlarges `win` so that the fate of every requested tridegree is decided
/// inside it.
///
/// With `R` the longest page leaving the request, the result is
/// `p ∈ [p_min − 1, p_max + q_max + R]`, `q ∈ [0, q_max + R]`, same weights.
/// A class at `(p, q)` depends on its target at `(p − 1, q + r)`, on the
/// chain of earlier sources that may have hit that target (each one step up
/// in `p` and strictly down in `q`), and on the chain of sources hitting
/// itself; all of these stay inside the enlarged box.
pub fn inflate_window(spec: SpectrumSpec, win: &Window) -> Window {
    let reach = i64::from(max_page_from(spec, win));
    let q_max = win.q_max + reach;
    Window {
        p_min: win.p_min - 1,
        p_max: win.p_max + q_max,
        q_max,
        w_min: win.w_min,
        w_max: win.w_max,
    }
}

/// Whether the dependency cone of `t` lies inside `computed`.
#[allow(clippy::int_plus_one)]
pub fn is_certified(spec: SpectrumSpec, t: Tridegree, computed: &Window) -> bool {
    if !computed.contains(t) || t.p + t.q > computed.p_max {
        return false;
    }
    match page_at(spec, t) {
        None => true,
        Some(r) => {
            let r = i64::from(r);
            t.p - 1 >= computed.p_min
                && t.q + r <= computed.q_max
                && t.p - 1 + t.q + r <= computed.p_max
        }
    }
}
