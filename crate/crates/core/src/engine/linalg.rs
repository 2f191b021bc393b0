//! Page homology by linear algebra over F₂.
//!
//! Each tridegree carries nested subspaces `B ⊆ Z` of its E₁ vector space,
//! the boundaries and cycles accumulated so far, so that `E_r = Z / B`. A
//! page builds the matrix of `d_r` on canonical representatives of `Z / B`,
//! reduced into the target's `Z / B`, then shrinks `Z` at the source to the
//! kernel and grows `B` at the target by the image.

use std::collections::BTreeMap;

use crate::engine::differential::{arrow_shift, first_differential, page_at};
use crate::engine::{Subquotient, WeightRun};
use crate::error::Result;
use crate::gf2::{image_basis, kernel_basis, Echelon, Gf2Matrix, Gf2Vector};
use crate::monomial::{enumerate_window, monomials_at, Monomial, SpectrumSpec, Tridegree, Window};

struct CellState {
    basis: Vec<Monomial>,
    cycles: Echelon,
    boundaries: Echelon,
}

impl CellState {
    fn new(basis: Vec<Monomial>) -> Self {
        let n = basis.len();
        let full = Gf2Matrix::identity(n);
        Self {
            cycles: Echelon::from_vectors(n, full.rows()).expect("lengths agree"),
            boundaries: Echelon::new(n),
            basis,
        }
    }

    /// Canonical basis of `Z / B`: cycles reduced modulo boundaries, then
    /// echelonized.
    fn quotient_reps(&self) -> Vec<Gf2Vector> {
        let mut e = Echelon::new(self.basis.len());
        for z in self.cycles.rows() {
            let r = self.boundaries.reduce(z).expect("lengths agree");
            e.insert(r).expect("lengths agree");
        }
        e.into_rows()
    }
}

/// Index in `target_basis` of the image of each monomial of `source_basis`
/// under `d_r`, or `None` when that monomial has no `d_r`.
fn arrow_map(spec: SpectrumSpec, r: u32, source_basis: &[Monomial], target_basis: &[Monomial]) -> Vec<Option<usize>> {
    source_basis
        .iter()
        .map(|m| {
            first_differential(spec, m)
                .filter(|a| a.page == r)
                .map(|a| {
                    target_basis
                        .binary_search(&a.target)
                        .expect("arrow target lies in the E1 basis")
                })
        })
        .collect()
}

fn push_forward(v: &Gf2Vector, map: &[Option<usize>], target_len: usize) -> Gf2Vector {
    let mut out = Gf2Vector::zeros(target_len);
    for i in v.ones() {
        if let Some(j) = map[i] {
            out.flip(j);
        }
    }
    out
}

/// The monomial-level matrix of `d_r` leaving `source`, with its target
/// tridegree. Columns index the source basis, rows the target basis. Entries
/// are zero unless the arrows at `source` live on page `r`.
pub fn differential_matrix(spec: SpectrumSpec, source: Tridegree, r: u32) -> (Tridegree, Gf2Matrix) {
    let target = source + arrow_shift(r);
    let src = monomials_at(spec, source);
    let tgt = monomials_at(spec, target);
    let map = arrow_map(spec, r, &src, &tgt);
    let columns: Vec<Gf2Vector> = (0..src.len())
        .map(|i| push_forward(&Gf2Vector::unit(src.len(), i), &map, tgt.len()))
        .collect();
    let m = Gf2Matrix::from_columns(tgt.len(), &columns).expect("lengths agree");
    (target, m)
}

struct PageUpdate {
    source: Tridegree,
    target: Tridegree,
    new_cycles: Vec<Gf2Vector>,
    image: Vec<Gf2Vector>,
    lost_at_source: usize,
}

fn page_update(spec: SpectrumSpec, r: u32, source: Tridegree, target: Tridegree, src: &CellState, tgt: &CellState) -> Result<PageUpdate> {
    let reps = src.quotient_reps();
    let map = arrow_map(spec, r, &src.basis, &tgt.basis);
    let n = tgt.basis.len();
    let columns = reps
        .iter()
        .map(|rep| tgt.boundaries.reduce(&push_forward(rep, &map, n)))
        .collect::<Result<Vec<_>>>()?;
    let d = Gf2Matrix::from_columns(n, &columns)?;
    let kernel = kernel_basis(&d);
    let image = image_basis(&d);

    let mut new_cycles: Vec<Gf2Vector> = src.boundaries.rows().to_vec();
    for k in &kernel {
        let mut z = Gf2Vector::zeros(src.basis.len());
        for i in k.ones() {
            z.add_assign(&reps[i]);
        }
        new_cycles.push(z);
    }
    Ok(PageUpdate {
        source,
        target,
        new_cycles,
        lost_at_source: reps.len() - kernel.len(),
        image,
    })
}

pub(crate) fn run_weight(spec: SpectrumSpec, inflated: &Window) -> Result<WeightRun> {
    let mut cells: BTreeMap<Tridegree, CellState> = enumerate_window(spec, inflated)
        .into_iter()
        .map(|(t, basis)| (t, CellState::new(basis)))
        .collect();

    let mut by_page: BTreeMap<u32, Vec<(Tridegree, Tridegree)>> = BTreeMap::new();
    for &t in cells.keys() {
        if let Some(r) = page_at(spec, t) {
            let target = t + arrow_shift(r);
            if cells.contains_key(&target) {
                by_page.entry(r).or_default().push((t, target));
            }
        }
    }

    let mut losses: BTreeMap<u32, BTreeMap<Tridegree, usize>> = BTreeMap::new();
    for (&r, pairs) in &by_page {
        let updates = pairs
            .iter()
            .map(|&(s, t)| page_update(spec, r, s, t, &cells[&s], &cells[&t]))
            .collect::<Result<Vec<_>>>()?;
        for u in updates {
            let page_losses = losses.entry(r).or_default();
            if u.lost_at_source > 0 {
                *page_losses.entry(u.source).or_default() += u.lost_at_source;
                *page_losses.entry(u.target).or_default() += u.image.len();
            }
            let src = cells.get_mut(&u.source).expect("cell present");
            src.cycles = Echelon::from_vectors(src.basis.len(), &u.new_cycles)?;
            let tgt = cells.get_mut(&u.target).expect("cell present");
            for v in u.image {
                tgt.boundaries.insert(v)?;
            }
        }
        losses.retain(|_, m| !m.is_empty());
    }

    let survivors = cells
        .into_iter()
        .map(|(t, c)| {
            let reps = c.quotient_reps();
            let sq = Subquotient {
                cycles: c.cycles.into_rows(),
                boundaries: c.boundaries.into_rows(),
                reps,
            };
            (t, (c.basis, sq))
        })
        .collect();

    Ok(WeightRun::linalg(survivors, losses, by_page.keys().copied().collect()))
}
