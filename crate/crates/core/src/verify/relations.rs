//! The named E∞ classes and checks of the relations they satisfy.

use serde::{Deserialize, Serialize};

use crate::engine::SsResult;
use crate::monomial::{multiply, Monomial, SpectrumSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassKind {
    Rho,
    Tau,
    /// `vᵢ(j)`.
    ViJ(u32, u32),
    /// `t_{n+1}` at height `n`.
    TNext,
}

/// A named E∞ class with its E₁ representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EInfClass {
    pub kind: ClassKind,
    pub representative: Monomial,
}

impl EInfClass {
    pub fn rho() -> Self {
        Self { kind: ClassKind::Rho, representative: Monomial::rho(1) }
    }

    pub fn tau() -> Self {
        Self { kind: ClassKind::Tau, representative: Monomial::tau(1) }
    }

    /// `vᵢ(j)`, represented by `τ^{2^{i+1} j} vᵢ`.
    pub fn v(i: u32, j: u32) -> Self {
        Self {
            kind: ClassKind::ViJ(i, j),
            representative: vij_rep(i, j),
        }
    }

    /// `t_{n+1}`, represented by `τ^{2^{n+1}}`.
    pub fn t_next(n: u32) -> Self {
        Self {
            kind: ClassKind::TNext,
            representative: Monomial::tau(1 << (n + 1)),
        }
    }
}

pub fn vij_rep(i: u32, j: u32) -> Monomial {
    Monomial::new(0, (1u32 << (i + 1)) * j, [(i, 1)])
}

/// `vᵢ(j)·vₖ(ℓ)` and `vᵢ(j + 2^{k−i}ℓ)·vₖ(0)` have the same representative.
pub fn product_identity_holds(i: u32, j: u32, k: u32, l: u32) -> bool {
    assert!(1 <= i && i <= k, "product relation needs 1 ≤ i ≤ k");
    let lhs = multiply(&vij_rep(i, j), &vij_rep(k, l));
    let rhs = multiply(&vij_rep(i, j + (1 << (k - i)) * l), &vij_rep(k, 0));
    lhs == rhs
}

/// At height `n`, `vᵢ(j)` and `t_{n+1}·vᵢ(j − 2^{n−i})` have the same
/// representative.
pub fn truncation_identity_holds(n: u32, i: u32, j: u32) -> bool {
    assert!(1 <= i && i <= n && j >= 1 << (n - i), "truncation relation out of range");
    let lhs = vij_rep(i, j);
    let rhs = multiply(&EInfClass::t_next(n).representative, &vij_rep(i, j - (1 << (n - i))));
    lhs == rhs
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "relation", rename_all = "snake_case")]
pub enum Relation {
    /// `τ² = 0`.
    TauSquared,
    /// `ρ^{2^{i+1}−1} vᵢ(j) = 0`.
    RhoTorsion { i: u32, j: u32 },
    /// `vᵢ(j)·vₖ(ℓ) = vᵢ(j + 2^{k−i}ℓ)·vₖ(0)`.
    Product { i: u32, j: u32, k: u32, l: u32 },
    /// `vᵢ(j) = t_{n+1} vᵢ(j − 2^{n−i})`.
    Truncation { i: u32, j: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Outside the computed window.
    Untested,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationCheck {
    #[serde(flatten)]
    pub relation: Relation,
    pub status: CheckStatus,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(CheckStatus::Fail) == 0
    }
}

/// Search range for relation parameters.
const MAX_INDEX: u32 = 4;
const MAX_DECORATION: u32 = 6;

fn dead_status(res: &SsResult, m: &Monomial) -> CheckStatus {
    if !res.window.contains(m.tridegree()) {
        return CheckStatus::Untested;
    }
    match res.is_dead(m) {
        Some(true) => CheckStatus::Pass,
        Some(false) => CheckStatus::Fail,
        None => CheckStatus::Untested,
    }
}

fn identity_status(res: &SsResult, m: &Monomial, holds: bool) -> CheckStatus {
    if !res.window.contains(m.tridegree()) {
        CheckStatus::Untested
    } else if holds {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

/// Checks every relation instance with indices up to 4 and decorations up
/// to 6 against `res`. Instances whose tridegree falls outside the
/// requested window are reported as untested.
pub fn check_einf_relations(spec: SpectrumSpec, res: &SsResult) -> RelationReport {
    let mut checks = Vec::new();
    let top = spec.height().unwrap_or(MAX_INDEX).min(MAX_INDEX);

    checks.push(RelationCheck {
        relation: Relation::TauSquared,
        status: dead_status(res, &Monomial::tau(2)),
    });

    for i in 1..=top {
        for j in 0..=MAX_DECORATION {
            let m = multiply(&Monomial::rho((1 << (i + 1)) - 1), &vij_rep(i, j));
            checks.push(RelationCheck {
                relation: Relation::RhoTorsion { i, j },
                status: dead_status(res, &m),
            });
        }
    }

    for i in 1..=top {
        for k in i..=top {
            for j in 0..=MAX_DECORATION {
                for l in 0..=MAX_DECORATION {
                    let m = multiply(&vij_rep(i, j), &vij_rep(k, l));
                    checks.push(RelationCheck {
                        relation: Relation::Product { i, j, k, l },
                        status: identity_status(res, &m, product_identity_holds(i, j, k, l)),
                    });
                }
            }
        }
    }

    if let Some(n) = spec.height() {
        for i in 1..=top {
            let period = 1u32 << (n - i);
            for j in period..=period + MAX_DECORATION {
                let m = vij_rep(i, j);
                checks.push(RelationCheck {
                    relation: Relation::Truncation { i, j },
                    status: identity_status(res, &m, truncation_identity_holds(n, i, j)),
                });
            }
        }
    }

    RelationReport { checks }
}
