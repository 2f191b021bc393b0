//! Weight-zero abutment of kgl/2 against the mod-2 K-theory of ℝ.
//!
//! `K_d(ℝ; ℤ/2)` has order 2 for `d ≡ 0, 1, 3, 4 (mod 8)`, order 4 for
//! `d ≡ 2 (mod 8)` and vanishes otherwise. The E∞-page only sees an
//! associated graded, so an order-4 group arriving as two F₂ classes is an
//! extension to be resolved elsewhere, not a disagreement.

use serde::{Deserialize, Serialize};

use crate::engine::SsResult;
use crate::error::{Error, Result};
use crate::monomial::{SpectrumSpec, Tridegree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuslinEntry {
    pub degree: u32,
    pub order: u32,
}

/// Orders of `K_d(ℝ; ℤ/2)` for `d mod 8`.
pub const SUSLIN_PERIOD: [u32; 8] = [2, 2, 4, 2, 2, 1, 1, 1];

pub fn suslin_order(d: u32) -> u32 {
    SUSLIN_PERIOD[(d % 8) as usize]
}

pub fn suslin_table(d_max: u32) -> Vec<SuslinEntry> {
    (0..=d_max)
        .map(|degree| SuslinEntry { degree, order: suslin_order(degree) })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SuslinStatus {
    Match,
    ExtensionRequired,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuslinRow {
    pub degree: u32,
    /// `2^(dim E∞)` summed over filtrations at weight 0.
    pub einf_order: u64,
    pub expected_order: u32,
    /// Filtrations contributing a class, with their dimensions.
    pub classes: Vec<(i64, usize)>,
    pub status: SuslinStatus,
}

/// Compares weight-zero E∞ orders of a height-1 run with Suslin's table on
/// stems `0..=d_max`.
pub fn compare_suslin(res: &SsResult, d_max: u32) -> Result<Vec<SuslinRow>> {
    if res.spec != SpectrumSpec::Truncated(1) {
        return Err(Error::Domain(format!("Suslin comparison needs kgl2, got {}", res.spec)));
    }
    let w = &res.window;
    let d = i64::from(d_max);
    if !(w.w_min..=w.w_max).contains(&0) || w.p_min > 0 || w.p_max < d || w.q_max < d {
        return Err(Error::Domain(format!(
            "window {w} does not cover weight 0, stems 0..={d_max} with q_max ≥ {d_max}"
        )));
    }
    let mut rows = Vec::new();
    for degree in 0..=d_max {
        let p = i64::from(degree);
        let classes: Vec<(i64, usize)> = (0..=w.q_max)
            .map(|q| (q, res.dim(Tridegree::new(p, q, 0))))
            .filter(|&(_, dim)| dim > 0)
            .collect();
        let total: usize = classes.iter().map(|c| c.1).sum();
        let einf_order = 1u64 << total;
        let expected_order = suslin_order(degree);
        let status = if einf_order != u64::from(expected_order) {
            SuslinStatus::Mismatch
        } else if expected_order <= 2 {
            SuslinStatus::Match
        } else if classes.len() == 2 && classes.iter().all(|c| c.1 == 1) {
            SuslinStatus::ExtensionRequired
        } else {
            SuslinStatus::Mismatch
        };
        rows.push(SuslinRow {
            degree,
            einf_order,
            expected_order,
            classes,
            status,
        });
    }
    Ok(rows)
}
