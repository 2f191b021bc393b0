//! Dimensions of the E∞ presentations, computed without the engine.
//!
//! The E∞-page of BP/2 is presented additively as `F₂[ρ, τ, vᵢ(j)]` modulo
//!
//! ```text
//! τ² = 0
//! ρ^{2^{i+1}−1} vᵢ(j) = 0
//! vᵢ(j) · vₖ(ℓ) = vᵢ(j + 2^{k−i} ℓ) · vₖ(0)      (k ≥ i)
//! ```
//!
//! and for BP⟨n⟩/2 with an extra generator `t_{n+1}` and
//! `vᵢ(j) = t_{n+1} · vᵢ(j − 2^{n−i})` for `j ≥ 2^{n−i}`.
//!
//! This module enumerates every formal product of generators landing in a
//! tridegree, rewrites each with the relations read left to right (the
//! product rule pushes decorations onto the smallest index present) and
//! counts the distinct nonzero normal forms. It shares nothing with the
//! engine beyond the plain `Tridegree` and `SpectrumSpec` data types.

use std::collections::{BTreeSet, HashSet};

use crate::monomial::{SpectrumSpec, Tridegree};

fn pow2(k: u32) -> i64 {
    1i64 << k
}

/// Tridegree of `vᵢ(j)`, i.e. of `τ^{2^{i+1} j} vᵢ`.
pub fn vij_degree(i: u32, j: u32) -> Tridegree {
    let q = pow2(i) - 1;
    Tridegree::new(2 * q, q, q - pow2(i + 1) * i64::from(j))
}

/// A formal product `ρ^rho τ^tau t^t Π vᵢ(j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub rho: u32,
    pub tau: u32,
    pub t: u32,
    /// `(i, j)` factors, sorted.
    pub vs: Vec<(u32, u32)>,
}

impl Word {
    pub fn degree(&self, spec: SpectrumSpec) -> Tridegree {
        let mut d = Tridegree::new(-i64::from(self.rho), 0, -i64::from(self.rho) - i64::from(self.tau));
        if let Some(n) = spec.height() {
            d.w -= pow2(n + 1) * i64::from(self.t);
        }
        for &(i, j) in &self.vs {
            d = d + vij_degree(i, j);
        }
        d
    }
}

/// Rewrites `word` to normal form, or `None` if it is zero.
pub fn normal_form(spec: SpectrumSpec, mut word: Word) -> Option<Word> {
    loop {
        word.vs.sort_unstable();
        if word.tau >= 2 {
            return None;
        }
        if word.vs.iter().any(|&(i, _)| i64::from(word.rho) >= pow2(i + 1) - 1) {
            return None;
        }
        if let Some(n) = spec.height() {
            let mut moved = false;
            for f in word.vs.iter_mut() {
                let period = pow2(n - f.0) as u32;
                while f.1 >= period {
                    f.1 -= period;
                    word.t += 1;
                    moved = true;
                }
            }
            if moved {
                continue;
            }
        }
        if !merge_once(&mut word.vs) {
            return Some(word);
        }
    }
}

/// One application of `vᵢ(j)·vₖ(ℓ) → vᵢ(j + 2^{k−i}ℓ)·vₖ(0)`, if any applies.
fn merge_once(vs: &mut [(u32, u32)]) -> bool {
    for x in 0..vs.len() {
        for y in 0..vs.len() {
            if x == y {
                continue;
            }
            let ((i, j), (k, l)) = (vs[x], vs[y]);
            if i <= k && l > 0 && (i < k || j > 0) {
                vs[x].1 = j + (1u32 << (k - i)) * l;
                vs[y].1 = 0;
                return true;
            }
        }
    }
    false
}

/// Multisets of v-indices with `Σ (2^i − 1) = q`, as counts per index.
fn index_multisets(spec: SpectrumSpec, q: i64) -> Vec<Vec<(u32, u32)>> {
    fn go(spec: SpectrumSpec, i: u32, rem: i64, cur: &mut Vec<(u32, u32)>, out: &mut Vec<Vec<(u32, u32)>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        let part = pow2(i) - 1;
        if part > rem || !spec.height().is_none_or(|n| i <= n) {
            return;
        }
        for c in 0..=(rem / part) {
            if c > 0 {
                cur.push((i, c as u32));
            }
            go(spec, i + 1, rem - c * part, cur, out);
            if c > 0 {
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if q >= 0 {
        go(spec, 1, q, &mut Vec::new(), &mut out);
    }
    out
}

/// Multisets of `parts` nonnegative integers summing to `total`, as
/// nondecreasing sequences.
fn bounded_partitions(total: u32, parts: u32) -> Vec<Vec<u32>> {
    fn go(total: u32, parts: u32, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut x = min;
        while x * parts <= total {
            cur.push(x);
            go(total - x, parts - 1, x, cur, out);
            cur.pop();
            x += 1;
        }
    }
    let mut out = Vec::new();
    go(total, parts, 0, &mut Vec::new(), &mut out);
    out
}

/// Every formal product of generators whose degree is `t`.
pub fn formal_products(spec: SpectrumSpec, t: Tridegree) -> Vec<Word> {
    let rho = 2 * t.q - t.p;
    let budget = t.p - t.q - t.w;
    if t.q < 0 || rho < 0 || budget < 0 {
        return Vec::new();
    }
    let t_step = spec.height().map(|n| pow2(n + 1));
    let mut out = Vec::new();
    for counts in index_multisets(spec, t.q) {
        let max_t = t_step.map_or(0, |s| budget / s);
        for nt in 0..=max_t {
            let rem = budget - t_step.map_or(0, |s| s * nt);
            decorate(&counts, 0, rem, Vec::new(), &mut |vs, left| {
                out.push(Word {
                    rho: rho as u32,
                    tau: left as u32,
                    t: nt as u32,
                    vs,
                });
            });
        }
    }
    out
}

/// Distributes τ-weight over the v-factors: index `i` absorbs multiples of
/// `2^{i+1}`. Calls `emit` with the decorated factors and the weight left
/// for plain τ.
fn decorate(counts: &[(u32, u32)], at: usize, rem: i64, acc: Vec<(u32, u32)>, emit: &mut dyn FnMut(Vec<(u32, u32)>, i64)) {
    if at == counts.len() {
        emit(acc, rem);
        return;
    }
    let (i, c) = counts[at];
    let unit = pow2(i + 1);
    for s in 0..=(rem / unit) {
        for js in bounded_partitions(s as u32, c) {
            let mut next = acc.clone();
            next.extend(js.into_iter().map(|j| (i, j)));
            decorate(counts, at + 1, rem - s * unit, next, emit);
        }
    }
}

/// Distinct nonzero normal forms at `t`.
pub fn presentation_basis(spec: SpectrumSpec, t: Tridegree) -> BTreeSet<Word> {
    let mut seen = HashSet::new();
    let mut basis = BTreeSet::new();
    for w in formal_products(spec, t) {
        if !seen.insert(w.clone()) {
            continue;
        }
        if let Some(nf) = normal_form(spec, w) {
            basis.insert(nf);
        }
    }
    basis
}

/// Dimension at `t` of the presented E∞ algebra.
pub fn presentation_dim(spec: SpectrumSpec, t: Tridegree) -> u64 {
    presentation_basis(spec, t).len() as u64
}
