//! The slice spectral sequence computation: two backends over a window of
//! tridegrees, certification of the result, and E∞ extraction.
//!
//! Differentials preserve weight, so every weight of a window is run
//! independently (in parallel when rayon has threads to spare) and the
//! results are merged in weight order.

pub mod differential;
pub mod linalg;
pub mod matching;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use differential::{first_differential, inflate_window, is_certified, page_at, Arrow};

use crate::error::{Error, Result};
use crate::gf2::{Echelon, Gf2Vector};
use crate::monomial::{Monomial, SpectrumSpec, Tridegree, Window};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Matching,
    Linalg,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Matching => "matching",
            Backend::Linalg => "linalg",
        })
    }
}

impl FromStr for Backend {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "matching" => Ok(Backend::Matching),
            "linalg" => Ok(Backend::Linalg),
            other => Err(Error::Usage(format!("unknown backend {other:?}"))),
        }
    }
}

/// One cancelled pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Kill {
    pub page: u32,
    pub source: Monomial,
    pub target: Monomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    Source,
    Target,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KillRecord {
    pub monomial: Monomial,
    pub page: u32,
    pub role: Role,
    pub partner: Monomial,
}

/// `Z / B` at one tridegree, as vectors over the E₁ monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subquotient {
    pub cycles: Vec<Gf2Vector>,
    pub boundaries: Vec<Gf2Vector>,
    /// Canonical representatives of a basis of `Z / B`.
    pub reps: Vec<Gf2Vector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Survivors {
    Monomials(Vec<Monomial>),
    Classes(Subquotient),
}

impl Survivors {
    pub fn dim(&self) -> usize {
        match self {
            Survivors::Monomials(ms) => ms.len(),
            Survivors::Classes(sq) => sq.reps.len(),
        }
    }
}

/// The computed state of one tridegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub e1: Vec<Monomial>,
    pub survivors: Survivors,
    pub certified: bool,
}

impl Cell {
    pub fn dim(&self) -> usize {
        self.survivors.dim()
    }

    /// Surviving classes written as sums of E₁ monomials.
    pub fn representatives(&self) -> Vec<Vec<Monomial>> {
        match &self.survivors {
            Survivors::Monomials(ms) => ms.iter().map(|m| vec![m.clone()]).collect(),
            Survivors::Classes(sq) => sq
                .reps
                .iter()
                .map(|v| v.ones().map(|i| self.e1[i].clone()).collect())
                .collect(),
        }
    }

    /// Whether `m` (which must lie in this cell's basis) is zero in E∞:
    /// either it supports a differential or it is hit by one.
    fn is_dead(&self, m: &Monomial) -> Option<bool> {
        let i = self.e1.binary_search(m).ok()?;
        Some(match &self.survivors {
            Survivors::Monomials(ms) => ms.binary_search(m).is_err(),
            Survivors::Classes(sq) => {
                let v = Gf2Vector::unit(self.e1.len(), i);
                let z = Echelon::from_vectors(v.len(), &sq.cycles).ok()?;
                let b = Echelon::from_vectors(v.len(), &sq.boundaries).ok()?;
                !z.contains(&v).ok()? || b.contains(&v).ok()?
            }
        })
    }
}

/// Output of one weight; merged into an [`SsResult`].
pub(crate) struct WeightRun {
    cells: BTreeMap<Tridegree, (Vec<Monomial>, Survivors)>,
    kills: Vec<Kill>,
    losses: BTreeMap<u32, BTreeMap<Tridegree, usize>>,
    pages: BTreeSet<u32>,
}

impl WeightRun {
    pub(crate) fn matching(
        cells: BTreeMap<Tridegree, (Vec<Monomial>, Vec<Monomial>)>,
        kills: Vec<Kill>,
        losses: BTreeMap<u32, BTreeMap<Tridegree, usize>>,
        pages: BTreeSet<u32>,
    ) -> Self {
        Self {
            cells: cells
                .into_iter()
                .map(|(t, (e1, alive))| (t, (e1, Survivors::Monomials(alive))))
                .collect(),
            kills,
            losses,
            pages,
        }
    }

    pub(crate) fn linalg(
        cells: BTreeMap<Tridegree, (Vec<Monomial>, Subquotient)>,
        losses: BTreeMap<u32, BTreeMap<Tridegree, usize>>,
        pages: BTreeSet<u32>,
    ) -> Self {
        Self {
            cells: cells
                .into_iter()
                .map(|(t, (e1, sq))| (t, (e1, Survivors::Classes(sq))))
                .collect(),
            kills: Vec::new(),
            losses,
            pages,
        }
    }
}

/// A finished run over a window.
#[derive(Clone, Debug)]
pub struct SsResult {
    pub spec: SpectrumSpec,
    pub backend: Backend,
    /// The requested window.
    pub window: Window,
    /// The window actually computed.
    pub inflated: Window,
    /// Cancelled pairs, sorted by page, then source.
    pub kills: Vec<Kill>,
    /// Every tridegree of the inflated window with nonzero E₁.
    pub cells: BTreeMap<Tridegree, Cell>,
    /// Dimension lost at each tridegree on each page.
    pub page_losses: BTreeMap<u32, BTreeMap<Tridegree, usize>>,
    /// Pages on which some differential was possible.
    pub pages: Vec<u32>,
}

impl SsResult {
    fn assemble(spec: SpectrumSpec, backend: Backend, window: Window, inflated: Window, runs: Vec<WeightRun>) -> Self {
        let mut cells = BTreeMap::new();
        let mut kills = Vec::new();
        let mut page_losses: BTreeMap<u32, BTreeMap<Tridegree, usize>> = BTreeMap::new();
        let mut pages = BTreeSet::new();
        for run in runs {
            for (t, (e1, survivors)) in run.cells {
                let certified = is_certified(spec, t, &inflated);
                cells.insert(t, Cell { e1, survivors, certified });
            }
            kills.extend(run.kills);
            for (r, m) in run.losses {
                page_losses.entry(r).or_default().extend(m);
            }
            pages.extend(run.pages);
        }
        kills.sort_by(|x, y| {
            (x.page, x.source.tridegree(), &x.source).cmp(&(y.page, y.source.tridegree(), &y.source))
        });
        Self {
            spec,
            backend,
            window,
            inflated,
            kills,
            cells,
            page_losses,
            pages: pages.into_iter().collect(),
        }
    }

    /// Kill pairs as paired source/target records.
    pub fn kill_records(&self) -> Vec<KillRecord> {
        self.kills
            .iter()
            .flat_map(|k| {
                [
                    KillRecord {
                        monomial: k.source.clone(),
                        page: k.page,
                        role: Role::Source,
                        partner: k.target.clone(),
                    },
                    KillRecord {
                        monomial: k.target.clone(),
                        page: k.page,
                        role: Role::Target,
                        partner: k.source.clone(),
                    },
                ]
            })
            .collect()
    }

    pub fn cell(&self, t: Tridegree) -> Option<&Cell> {
        self.cells.get(&t)
    }

    /// `dim E∞` at `t`; zero where E₁ is zero.
    pub fn dim(&self, t: Tridegree) -> usize {
        self.cells.get(&t).map_or(0, Cell::dim)
    }

    pub fn e1_dim(&self, t: Tridegree) -> usize {
        self.cells.get(&t).map_or(0, |c| c.e1.len())
    }

    /// `dim E_r` at `t`, before the `d_r` differentials act.
    pub fn dim_at_page(&self, t: Tridegree, r: u32) -> usize {
        let lost: usize = self
            .page_losses
            .range(..r)
            .filter_map(|(_, m)| m.get(&t))
            .sum();
        self.e1_dim(t) - lost
    }

    pub fn certified(&self, t: Tridegree) -> bool {
        is_certified(self.spec, t, &self.inflated)
    }

    /// Whether `m` is zero in E∞. `None` if its tridegree was not computed
    /// or is not certified.
    pub fn is_dead(&self, m: &Monomial) -> Option<bool> {
        let t = m.tridegree();
        if !self.certified(t) {
            return None;
        }
        match self.cells.get(&t) {
            Some(c) => c.is_dead(m),
            None => None,
        }
    }

    pub fn survives(&self, m: &Monomial) -> Option<bool> {
        self.is_dead(m).map(|d| !d)
    }

    /// Per-tridegree E∞ dimensions on the requested window.
    pub fn dims(&self) -> BTreeMap<Tridegree, usize> {
        self.cells
            .iter()
            .filter(|(t, _)| self.window.contains(**t))
            .map(|(&t, c)| (t, c.dim()))
            .collect()
    }
}

fn thread_split<F>(spec: SpectrumSpec, win: &Window, backend: Backend, run: F) -> Result<SsResult>
where
    F: Fn(SpectrumSpec, &Window) -> Result<WeightRun> + Sync,
{
    let inflated = inflate_window(spec, win);
    let weights: Vec<i64> = inflated.weights().collect();
    let runs = weights
        .par_iter()
        .map(|&w| run(spec, &inflated.with_weight(w)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SsResult::assemble(spec, backend, *win, inflated, runs))
}

/// Runs the matching backend on the inflated window of `win`.
pub fn run_matching(spec: SpectrumSpec, win: &Window) -> SsResult {
    thread_split(spec, win, Backend::Matching, |s, w| Ok(matching::run_weight(s, w)))
        .expect("matching backend is infallible")
}

/// Runs the linear-algebra backend on the inflated window of `win`.
pub fn run_linalg(spec: SpectrumSpec, win: &Window) -> Result<SsResult> {
    thread_split(spec, win, Backend::Linalg, linalg::run_weight)
}

pub fn run(spec: SpectrumSpec, win: &Window, backend: Backend) -> Result<SsResult> {
    match backend {
        Backend::Matching => Ok(run_matching(spec, win)),
        Backend::Linalg => run_linalg(spec, win),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EInfEntry {
    pub dim: usize,
    /// Each class as a sum of E₁ monomials.
    pub reps: Vec<Vec<Monomial>>,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EInfinityReport {
    pub spec: SpectrumSpec,
    pub backend: Backend,
    pub window: Window,
    pub entries: BTreeMap<Tridegree, EInfEntry>,
    /// Requested tridegrees whose answer could change under enlargement.
    pub uncertified: Vec<Tridegree>,
}

impl EInfinityReport {
    pub fn dim(&self, t: Tridegree) -> usize {
        self.entries.get(&t).map_or(0, |e| e.dim)
    }

    pub fn contains_rep(&self, m: &Monomial) -> bool {
        self.entries
            .get(&m.tridegree())
            .is_some_and(|e| e.reps.iter().any(|r| r.len() == 1 && &r[0] == m))
    }

    /// Total dimension at weight `w` and stem `p`, summed over filtrations.
    pub fn stem_dim(&self, p: i64, w: i64) -> usize {
        self.entries
            .iter()
            .filter(|(t, _)| t.p == p && t.w == w)
            .map(|(_, e)| e.dim)
            .sum()
    }
}

/// Restricts `res` to its requested window.
pub fn e_infinity(res: &SsResult) -> EInfinityReport {
    let mut entries = BTreeMap::new();
    let mut uncertified = Vec::new();
    for (&t, cell) in &res.cells {
        if !res.window.contains(t) {
            continue;
        }
        if !cell.certified {
            uncertified.push(t);
        }
        entries.insert(
            t,
            EInfEntry {
                dim: cell.dim(),
                reps: cell.representatives(),
                certified: cell.certified,
            },
        );
    }
    EInfinityReport {
        spec: res.spec,
        backend: res.backend,
        window: res.window,
        entries,
        uncertified,
    }
}

/// Whether `m` survives to E∞, decided on a window holding its whole
/// dependency cone. A monomial outside E₁ of `spec` (a `vᵢ` above the
/// height) is not a class and does not survive.
pub fn survives_forever(spec: SpectrumSpec, m: &Monomial) -> bool {
    if !m.fits(spec) {
        return false;
    }
    let t = m.tridegree();
    let win = Window::around(t).expect("single-tridegree window is well formed");
    run_matching(spec, &win)
        .survives(m)
        .expect("requested tridegree is certified")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weight_zero_kgl() -> Window {
        Window::new(0, 15, 12, 0, 0).unwrap()
    }

    fn stem_dims(res: &SsResult) -> Vec<usize> {
        let report = e_infinity(res);
        (0..=15).map(|p| report.stem_dim(p, 0)).collect()
    }

    #[test]
    fn weight_zero_kgl_both_backends() {
        let expected = vec![1, 1, 2, 1, 1, 0, 0, 0, 1, 1, 2, 1, 1, 0, 0, 0];
        let m = run_matching(SpectrumSpec::kgl2(), &weight_zero_kgl());
        assert_eq!(stem_dims(&m), expected);
        let l = run_linalg(SpectrumSpec::kgl2(), &weight_zero_kgl()).unwrap();
        assert_eq!(stem_dims(&l), expected);
    }

    #[test]
    fn unit_always_survives() {
        for spec in [SpectrumSpec::Bp, SpectrumSpec::Truncated(1), SpectrumSpec::Truncated(3)] {
            let win = Window::new(-2, 3, 2, -2, 1).unwrap();
            for res in [run_matching(spec, &win), run_linalg(spec, &win).unwrap()] {
                let report = e_infinity(&res);
                assert_eq!(report.dim(Tridegree::default()), 1);
                assert!(res.survives(&Monomial::unit()).unwrap());
            }
        }
    }

    #[test]
    fn escalated_source_survives_dead_target() {
        // ρ⁴τ²v₂ kills ρ⁷v₁v₂ on page 1, so τ⁴v₁ has nothing left to hit on page 3.
        let bp = SpectrumSpec::bp2();
        let src = Monomial::new(4, 2, [(2, 1)]);
        let tgt = Monomial::new(7, 0, [(1, 1), (2, 1)]);
        let tau4v1 = Monomial::new(0, 4, [(1, 1)]);
        assert_eq!(first_differential(bp, &tau4v1).unwrap().target, tgt);

        let t = tau4v1.tridegree();
        let win = Window::new(t.p - 1, t.p + 1, t.q + 3, t.w, t.w).unwrap();
        let res = run_matching(bp, &win);
        assert!(res.kills.contains(&Kill { page: 1, source: src, target: tgt.clone() }));
        assert!(!res.kills.iter().any(|k| k.page == 3 && k.target == tgt));
        assert!(res.survives(&tau4v1).unwrap());

        let lin = run_linalg(bp, &win).unwrap();
        assert_eq!(lin.survives(&tau4v1), Some(true));
        assert_eq!(lin.dim(t), res.dim(t));
    }

    #[test]
    fn unsupported_cells_in_filtration_zero_keep_e1() {
        // Nothing lands in q = 0, so a cell there without an arrow of its own
        // is untouched.
        let win = Window::new(-3, 0, 0, -4, 1).unwrap();
        for spec in [SpectrumSpec::Bp, SpectrumSpec::kgl2()] {
            let m = run_matching(spec, &win);
            let l = run_linalg(spec, &win).unwrap();
            for t in win.occupied().into_iter().filter(|&t| page_at(spec, t).is_none()) {
                assert_eq!(m.dim(t), m.e1_dim(t), "{t}");
                assert_eq!(l.dim(t), l.e1_dim(t), "{t}");
            }
        }
    }

    #[test]
    fn tau_squared_dies() {
        let t = Monomial::tau(2).tridegree();
        let win = Window::around(t).unwrap();
        let res = run_linalg(SpectrumSpec::bp2(), &win).unwrap();
        assert_eq!(res.dim_at_page(t, 1), 1);
        assert_eq!(res.dim_at_page(t, 2), 0);
        assert_eq!(res.dim(t), 0);
    }

    #[test]
    fn e_infinity_reports() {
        let win = Window::new(-6, 2, 3, -8, 0).unwrap();
        let report = e_infinity(&run_matching(SpectrumSpec::bp2(), &win));
        assert!(report.uncertified.is_empty());
        assert!(report.contains_rep(&Monomial::unit()));
        for a in 0..=6 {
            assert!(report.contains_rep(&Monomial::rho(a)), "ρ^{a}");
        }
        assert!(report.contains_rep(&Monomial::tau(1)));
        assert!(!report.contains_rep(&Monomial::tau(2)));
        assert_eq!(report.dim(Monomial::tau(2).tridegree()), 0);
    }

    #[test]
    fn survives_forever_examples() {
        let bp = SpectrumSpec::bp2();
        assert!(survives_forever(bp, &Monomial::rho(5)));
        assert!(!survives_forever(bp, &Monomial::tau(2)));
        for i in 1..=3u32 {
            for j in 0..=2u32 {
                let rep = Monomial::new(0, (1 << (i + 1)) * j, [(i, 1)]);
                assert!(survives_forever(bp, &rep), "v{i}({j})");
            }
        }
        assert!(!survives_forever(SpectrumSpec::kgl2(), &Monomial::v(2)));
    }

    #[test]
    fn kill_records_pair_up() {
        let res = run_matching(SpectrumSpec::bp2(), &Window::new(-4, 8, 4, -6, 0).unwrap());
        let recs = res.kill_records();
        assert_eq!(recs.len(), 2 * res.kills.len());
        for pair in recs.chunks(2) {
            assert_eq!(pair[0].role, Role::Source);
            assert_eq!(pair[1].role, Role::Target);
            assert_eq!(pair[0].page, pair[1].page);
            assert_eq!(pair[0].monomial, pair[1].partner);
            assert_eq!(pair[1].monomial, pair[0].partner);
            assert!(pair[0].page >= 1);
        }
    }
}
