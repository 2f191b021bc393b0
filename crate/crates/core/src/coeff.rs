//! Mod-2 cohomology of a point, motivic and C₂-equivariant, and the
//! dimension-level comparison of the two E₁-pages.
//!
//! Homological bidegrees `(p, w)`. Motivic side: `F₂[τ, ρ]` with τ at
//! `(0, −1)` and ρ at `(−1, −1)`. Bredon side: the positive cone
//! `F₂[u_σ, a_σ]` with u_σ at `(0, −1)` and a_σ at `(−1, −1)`, plus the
//! negative cone `θ / (u_σ^i a_σ^j)` with θ at `(2, 0)`, which lands at
//! `(2 + j, i + j)`.
//!
//! Realization sends τ to u_σ and ρ to a_σ, so the motivic point is the
//! positive cone.

use serde::{Deserialize, Serialize};

use crate::monomial::{e1_dim, partition_count, SpectrumSpec, Tridegree, Window};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Cone {
    Positive,
    Negative,
}

/// A basis element of the Bredon cohomology of a point: `u_σ^i a_σ^j` in the
/// positive cone, `θ / (u_σ^i a_σ^j)` in the negative cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PointClass {
    pub cone: Cone,
    pub i: u32,
    pub j: u32,
}

impl PointClass {
    /// Homological bidegree `(p, w)`.
    pub fn bidegree(&self) -> (i64, i64) {
        let (i, j) = (i64::from(self.i), i64::from(self.j));
        match self.cone {
            Cone::Positive => (-j, -i - j),
            Cone::Negative => (2 + j, i + j),
        }
    }

    /// Products of two negative-cone classes vanish.
    pub fn product_vanishes(&self, other: &PointClass) -> bool {
        self.cone == Cone::Negative && other.cone == Cone::Negative
    }
}

/// The Bredon basis element at `(p, w)`, if any. Each bidegree holds at most
/// one class.
pub fn bredon_class_at(p: i64, w: i64) -> Option<PointClass> {
    if p <= 0 && w <= p {
        Some(PointClass {
            cone: Cone::Positive,
            i: (p - w) as u32,
            j: (-p) as u32,
        })
    } else if p >= 2 && w >= p - 2 {
        Some(PointClass {
            cone: Cone::Negative,
            i: (w - p + 2) as u32,
            j: (p - 2) as u32,
        })
    } else {
        None
    }
}

/// Dimension of `F₂[τ, ρ]` at `(p, w)`: 1 iff some `ρ^a τ^b` sits there.
pub fn motivic_point_dim(p: i64, w: i64) -> u32 {
    u32::from(p <= 0 && w <= p)
}

/// Dimension of the Bredon cohomology of a point at `(p, w)`.
pub fn bredon_point_dim(p: i64, w: i64) -> u32 {
    u32::from(bredon_class_at(p, w).is_some())
}

fn positive_cone_dim(p: i64, w: i64) -> u32 {
    u32::from(matches!(bredon_class_at(p, w), Some(c) if c.cone == Cone::Positive))
}

/// Dimension of the equivariant E₁-page: one copy of the point's cohomology,
/// shifted by `(2q, q)`, for every v-monomial of filtration `q`.
pub fn equivariant_e1_dim(spec: SpectrumSpec, t: Tridegree) -> u64 {
    if t.q < 0 {
        return 0;
    }
    let summands = partition_count(spec, t.q).unwrap_or(0);
    summands * u64::from(bredon_point_dim(t.p - 2 * t.q, t.w - t.q))
}

fn positive_e1_dim(spec: SpectrumSpec, t: Tridegree) -> u64 {
    if t.q < 0 {
        return 0;
    }
    let summands = partition_count(spec, t.q).unwrap_or(0);
    summands * u64::from(positive_cone_dim(t.p - 2 * t.q, t.w - t.q))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectionViolation {
    pub tridegree: Tridegree,
    pub motivic: u64,
    pub equivariant: u64,
    pub positive_cone: u64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct InjectionReport {
    pub verified: Vec<Tridegree>,
    pub violations: Vec<InjectionViolation>,
}

impl InjectionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `dim E₁ ≤ dim E₁^equiv` and `dim E₁ = positive-cone part` on every
/// tridegree of `win`.
pub fn check_realization_injection(spec: SpectrumSpec, win: &Window) -> InjectionReport {
    let mut report = InjectionReport::default();
    for p in win.p_min..=win.p_max {
        for q in 0..=win.q_max {
            for w in win.weights() {
                let t = Tridegree::new(p, q, w);
                let motivic = e1_dim(spec, t);
                let equivariant = equivariant_e1_dim(spec, t);
                let positive_cone = positive_e1_dim(spec, t);
                if motivic <= equivariant && motivic == positive_cone {
                    report.verified.push(t);
                } else {
                    report.violations.push(InjectionViolation {
                        tridegree: t,
                        motivic,
                        equivariant,
                        positive_cone,
                    });
                }
            }
        }
    }
    report
}
