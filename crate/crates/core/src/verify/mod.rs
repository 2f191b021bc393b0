//! Checks of engine output against the known E∞ presentations and against
//! Suslin's computation of the mod-2 K-theory of ℝ.

pub mod presentation;
pub mod relations;
pub mod suslin;

pub use presentation::presentation_dim;
pub use relations::{check_einf_relations, CheckStatus, EInfClass, Relation, RelationReport};
pub use suslin::{compare_suslin, suslin_order, SuslinRow, SuslinStatus};
