//! Symbolic decisions: commutation of inner projections, finiteness of the
//! rank of products of model-space projections, and partial isometry /
//! isometry of truncated Toeplitz operators with inner symbols.
//!
//! Nothing here looks at a matrix; the numeric audit lives in `audit`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::symbol::{InnerSymbol, SeparatedDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DivisibilityDirection {
    FirstDividesSecond,
    SecondDividesFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CommutingReason {
    ConstantSymbol,
    Divisibility { direction: DivisibilityDirection },
    SeparatedDecomposition,
    NoDecomposition,
}

/// Whether `P_{φ₁H²}` and `P_{φ₂H²}` commute.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommutingVerdict {
    pub commutes: bool,
    pub witness: Option<SeparatedDecomposition>,
    pub reason: CommutingReason,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FiniteRankReason {
    NotCommuting,
    ConstantSymbol,
    OneVariableDivisibility,
    SeparatedFiniteBlaschke,
    NonConstantCommonFactor,
    HigherDimensionNonzeroProduct,
}

/// Whether `P_{Q(φ₁)} P_{Q(φ₂)}` is a projection, and if so whether its
/// rank is finite.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FiniteRankVerdict {
    pub is_projection: bool,
    pub finite: bool,
    pub rank: Option<usize>,
    pub reason: FiniteRankReason,
}

/// Partial isometry and isometry of `T^{φ₁}_{φ₂}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TtoVerdict {
    pub partial_isometry: bool,
    pub isometry: bool,
    pub witness: Option<SeparatedDecomposition>,
}

fn check_same_n(a: &InnerSymbol, b: &InnerSymbol) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    Ok(())
}

pub fn commuting_verdict(phi1: &InnerSymbol, phi2: &InnerSymbol) -> Result<CommutingVerdict> {
    check_same_n(phi1, phi2)?;
    let witness = phi1.separated_decomposition(phi2)?;
    let reason = if phi1.is_constant() || phi2.is_constant() {
        CommutingReason::ConstantSymbol
    } else if phi1.n() == 1 {
        if phi1.divides(phi2)? {
            CommutingReason::Divisibility {
                direction: DivisibilityDirection::FirstDividesSecond,
            }
        } else if phi2.divides(phi1)? {
            CommutingReason::Divisibility {
                direction: DivisibilityDirection::SecondDividesFirst,
            }
        } else {
            CommutingReason::NoDecomposition
        }
    } else if witness.is_some() {
        CommutingReason::SeparatedDecomposition
    } else {
        CommutingReason::NoDecomposition
    };
    let commutes = reason != CommutingReason::NoDecomposition;
    // in one variable a nonconstant pair is never separated, so the
    // decomposition exists exactly when one symbol divides the other
    debug_assert_eq!(commutes, witness.is_some());
    Ok(CommutingVerdict {
        commutes,
        witness: if commutes { witness } else { None },
        reason,
    })
}

/// Symbol `χ` with `φ₁H² ∩ φ₂H² = χH²` for commuting pairs. When one
/// symbol divides the other the larger one is returned as is; otherwise
/// `χ = ψ·φ̃₁·φ̃₂` normalized to constant 1.
pub fn intersection_symbol(phi1: &InnerSymbol, phi2: &InnerSymbol) -> Result<Option<InnerSymbol>> {
    check_same_n(phi1, phi2)?;
    if phi1.divides(phi2)? {
        return Ok(Some(phi2.clone()));
    }
    if phi2.divides(phi1)? {
        return Ok(Some(phi1.clone()));
    }
    let Some(d) = phi1.separated_decomposition(phi2)? else {
        return Ok(None);
    };
    let chi = d
        .common_factor
        .multiply(&d.first_cofactor)?
        .multiply(&d.second_cofactor)?;
    Ok(Some(chi.normalized()))
}

pub fn finite_rank_verdict(phi1: &InnerSymbol, phi2: &InnerSymbol) -> Result<FiniteRankVerdict> {
    let commuting = commuting_verdict(phi1, phi2)?;
    let verdict = |is_projection, finite, rank, reason| FiniteRankVerdict {
        is_projection,
        finite,
        rank,
        reason,
    };
    if !commuting.commutes {
        return Ok(verdict(false, false, None, FiniteRankReason::NotCommuting));
    }
    if phi1.is_constant() || phi2.is_constant() {
        return Ok(verdict(true, true, Some(0), FiniteRankReason::ConstantSymbol));
    }
    let degree = |s: &InnerSymbol| s.blaschke_degree().total as usize;
    Ok(match phi1.n() {
        1 => {
            // Q(φ₁) ∩ Q(φ₂) is the model space of the divisor
            let divisor = if phi1.divides(phi2)? { phi1 } else { phi2 };
            verdict(true, true, Some(degree(divisor)), FiniteRankReason::OneVariableDivisibility)
        }
        2 => {
            if phi1.is_separated(phi2)? {
                let rank = degree(phi1) * degree(phi2);
                verdict(true, true, Some(rank), FiniteRankReason::SeparatedFiniteBlaschke)
            } else {
                // Q(ψ) sits inside the intersection and is infinite dimensional
                verdict(true, false, None, FiniteRankReason::NonConstantCommonFactor)
            }
        }
        // for n > 2 the intersection always contains a nonzero tensor
        // factor in a free variable or Q(ψ), so the product is never zero
        // and the rank is never finite
        _ => verdict(true, false, None, FiniteRankReason::HigherDimensionNonzeroProduct),
    })
}

fn tto_verdict(phi1: &InnerSymbol, phi2: &InnerSymbol) -> Result<TtoVerdict> {
    let commuting = commuting_verdict(phi1, phi2)?;
    let constant = phi1.is_constant() || phi2.is_constant();
    let isometry = constant || (phi1.n() >= 2 && phi1.is_separated(phi2)?);
    Ok(TtoVerdict {
        partial_isometry: commuting.commutes,
        isometry,
        witness: commuting.witness,
    })
}

/// Partial isometry holds exactly when the projections commute: by
/// divisibility in one variable, by a separated decomposition otherwise.
/// A constant `φ₁` gives the zero operator on `Q = {0}`; a constant `φ₂`
/// gives a unimodular multiple of the identity.
pub fn tto_partial_isometry_verdict(phi1: &InnerSymbol, phi2: &InnerSymbol) -> Result<TtoVerdict> {
    tto_verdict(phi1, phi2)
}

/// Isometry holds exactly for separated symbols in two or more variables;
/// in one variable only the degenerate constant cases qualify.
pub fn tto_isometry_verdict(phi1: &InnerSymbol, phi2: &InnerSymbol) -> Result<TtoVerdict> {
    tto_verdict(phi1, phi2)
}
