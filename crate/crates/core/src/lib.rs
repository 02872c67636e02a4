//! Projections onto shift-invariant subspaces of the Hardy space of the
//! polydisc, truncated Toeplitz operators on their model spaces, and
//! numerical audits of the symbolic criteria governing both.

pub mod audit;
pub mod error;
pub mod generate;
pub mod kernel;
pub mod report;
pub mod symbol;
pub mod truncated;
pub mod verdict;

pub use audit::{numeric_audit, random_audit, AuditConfig, AuditReport, Band, CheckKind};
pub use error::{Error, Result};
pub use symbol::{Complex, DiskZero, InnerSymbol, SeparatedDecomposition, VariableFactor};
pub use verdict::{
    commuting_verdict, finite_rank_verdict, intersection_symbol, tto_isometry_verdict,
    tto_partial_isometry_verdict, CommutingVerdict, FiniteRankVerdict, TtoVerdict,
};
