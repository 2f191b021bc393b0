//! Page-by-page cancellation of (source, target) monomial pairs.
//!
//! Each monomial has at most one outgoing arrow, so a page is a partial
//! matching between alive sources and alive targets. A source whose target
//! already died as the target of an earlier page is a permanent cycle and is
//! never looked at again.

use std::collections::BTreeMap;

use crate::engine::differential::{arrow_shift, first_differential, page_at};
use crate::engine::{Kill, WeightRun};
use crate::monomial::{enumerate_window, Monomial, SpectrumSpec, Tridegree, Window};

struct CellState {
    basis: Vec<Monomial>,
    alive: Vec<bool>,
}

pub(crate) fn run_weight(spec: SpectrumSpec, inflated: &Window) -> WeightRun {
    let e1 = enumerate_window(spec, inflated);
    let index: BTreeMap<Tridegree, usize> = e1.keys().enumerate().map(|(i, &t)| (t, i)).collect();
    let mut cells: Vec<CellState> = e1
        .into_values()
        .map(|basis| {
            let alive = vec![true; basis.len()];
            CellState { basis, alive }
        })
        .collect();

    let mut by_page: BTreeMap<u32, Vec<(Tridegree, Tridegree)>> = BTreeMap::new();
    for &t in index.keys() {
        if let Some(r) = page_at(spec, t) {
            let target = t + arrow_shift(r);
            if index.contains_key(&target) {
                by_page.entry(r).or_default().push((t, target));
            }
        }
    }

    let mut kills = Vec::new();
    let mut losses: BTreeMap<u32, BTreeMap<Tridegree, usize>> = BTreeMap::new();
    for (&r, pairs) in &by_page {
        for &(src_t, tgt_t) in pairs {
            let (src, tgt) = pair_mut(&mut cells, index[&src_t], index[&tgt_t]);
            let mut killed = 0;
            for i in 0..src.basis.len() {
                if !src.alive[i] {
                    continue;
                }
                let arrow = first_differential(spec, &src.basis[i]).expect("page is constant on a tridegree");
                debug_assert_eq!(arrow.page, r);
                let j = tgt
                    .basis
                    .binary_search(&arrow.target)
                    .expect("arrow target lies in the E1 basis");
                if tgt.alive[j] {
                    src.alive[i] = false;
                    tgt.alive[j] = false;
                    killed += 1;
                    kills.push(Kill {
                        page: r,
                        source: arrow.source,
                        target: arrow.target,
                    });
                }
            }
            if killed > 0 {
                let page_losses = losses.entry(r).or_default();
                *page_losses.entry(src_t).or_default() += killed;
                *page_losses.entry(tgt_t).or_default() += killed;
            }
        }
    }

    let survivors = index
        .keys()
        .zip(cells)
        .map(|(&t, c)| {
            let alive = c
                .basis
                .iter()
                .zip(&c.alive)
                .filter(|(_, &a)| a)
                .map(|(m, _)| m.clone())
                .collect();
            (t, (c.basis, alive))
        })
        .collect();

    WeightRun::matching(survivors, kills, losses, by_page.keys().copied().collect())
}

fn pair_mut<T>(v: &mut [T], i: usize, j: usize) -> (&mut T, &mut T) {
    assert_ne!(i, j, "a cell cannot be its own target");
    if i < j {
        let (lo, hi) = v.split_at_mut(j);
        (&mut lo[i], &mut hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(i);
        (&mut hi[0], &mut lo[j])
    }
}
