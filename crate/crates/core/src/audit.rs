//! Numeric cross-examination of the symbolic verdicts.
//!
//! Each check computes an interior residual on a box truncation, sorts it
//! into a pass / fail / inconclusive band, and compares the band with the
//! verdict's prediction. Audits never change a verdict.
//!
//! The TTO checks use the defect forms from `truncated`, which substitute
//! `M*M = I` so that mass pushed out of the box does not masquerade as a
//! failure of the identity being tested.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generate::{PairKind, SymbolSampler};
use crate::symbol::InnerSymbol;
use crate::truncated::{
    self, commutator_residual, isometry_defect, model_from_range, mult_operator,
    partial_isometry_defect, BoxBasis, InteriorMask, TruncatedOperator,
};
use crate::verdict::{
    commuting_verdict, finite_rank_verdict, intersection_symbol, tto_isometry_verdict,
    CommutingVerdict, FiniteRankVerdict, TtoVerdict,
};

pub const DEFAULT_PASS_THRESHOLD: f64 = 1e-3;
pub const DEFAULT_FAIL_THRESHOLD: f64 = 1e-1;
pub const DEFAULT_MAX_BASIS: usize = 20_000;
/// Singular values above this count towards the numeric rank.
pub const RANK_CUTOFF: f64 = 0.5;

/// Default per-variable degree cap for `n` variables.
pub fn default_degree(n: usize) -> usize {
    match n {
        0 | 1 => 48,
        2 => 24,
        3 => 10,
        _ => 4,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CheckKind {
    #[serde(rename = "commutator")]
    Commutator,
    #[serde(rename = "tto_partial_isometry_12")]
    TtoPartialIsometry12,
    #[serde(rename = "tto_partial_isometry_21")]
    TtoPartialIsometry21,
    #[serde(rename = "tto_isometry_12")]
    TtoIsometry12,
    #[serde(rename = "tto_isometry_21")]
    TtoIsometry21,
    #[serde(rename = "intersection_projection")]
    IntersectionProjection,
    #[serde(rename = "douglas_rank")]
    DouglasRank,
}

impl CheckKind {
    pub const ALL: [CheckKind; 7] = [
        CheckKind::Commutator,
        CheckKind::TtoPartialIsometry12,
        CheckKind::TtoPartialIsometry21,
        CheckKind::TtoIsometry12,
        CheckKind::TtoIsometry21,
        CheckKind::IntersectionProjection,
        CheckKind::DouglasRank,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckKind::Commutator => "commutator",
            CheckKind::TtoPartialIsometry12 => "tto_partial_isometry_12",
            CheckKind::TtoPartialIsometry21 => "tto_partial_isometry_21",
            CheckKind::TtoIsometry12 => "tto_isometry_12",
            CheckKind::TtoIsometry21 => "tto_isometry_21",
            CheckKind::IntersectionProjection => "intersection_projection",
            CheckKind::DouglasRank => "douglas_rank",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Band {
    Pass,
    Fail,
    Inconclusive,
}

impl Band {
    /// `< pass` passes, `> fail` fails, anything else (NaN included) is
    /// inconclusive.
    pub fn classify(residual: f64, pass: f64, fail: f64) -> Band {
        if residual < pass {
            Band::Pass
        } else if residual > fail {
            Band::Fail
        } else {
            Band::Inconclusive
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AuditConfig {
    /// Per-variable degree cap; `None` picks [`default_degree`].
    pub degree: Option<usize>,
    /// Interior margin; `None` picks `⌈D/4⌉`.
    pub margin: Option<usize>,
    pub pass_threshold: f64,
    pub fail_threshold: f64,
    pub max_basis: usize,
    pub seed: Option<u64>,
    pub checks: Vec<CheckKind>,
}

impl Default for AuditConfig {
    fn default() -> Self {
        Self {
            degree: None,
            margin: None,
            pass_threshold: DEFAULT_PASS_THRESHOLD,
            fail_threshold: DEFAULT_FAIL_THRESHOLD,
            max_basis: DEFAULT_MAX_BASIS,
            seed: None,
            checks: CheckKind::ALL.to_vec(),
        }
    }
}

/// The configuration actually used for an `n`-variable audit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResolvedConfig {
    pub n: usize,
    pub degree: usize,
    pub margin: usize,
    pub basis_size: usize,
    pub pass_threshold: f64,
    pub fail_threshold: f64,
    pub max_basis: usize,
    pub seed: Option<u64>,
}

impl AuditConfig {
    pub fn validate(&self) -> Result<()> {
        let (p, f) = (self.pass_threshold, self.fail_threshold);
        if !(p.is_finite() && f.is_finite() && p > 0.0 && p <= f) {
            return Err(Error::Config(format!(
                "thresholds must satisfy 0 < pass ({p}) <= fail ({f})"
            )));
        }
        if self.checks.is_empty() {
            return Err(Error::Config("no checks selected".into()));
        }
        Ok(())
    }

    pub fn resolve(&self, n: usize) -> Result<ResolvedConfig> {
        self.validate()?;
        let degree = self.degree.unwrap_or_else(|| default_degree(n));
        let margin = match self.margin {
            Some(b) => InteriorMask::new(b, degree)?.margin(),
            None => InteriorMask::default_for(degree).margin(),
        };
        let basis_size = (degree + 1).checked_pow(n as u32).unwrap_or(usize::MAX);
        if basis_size > self.max_basis {
            return Err(Error::ResourceLimit {
                size: basis_size,
                limit: self.max_basis,
            });
        }
        Ok(ResolvedConfig {
            n,
            degree,
            margin,
            basis_size,
            pass_threshold: self.pass_threshold,
            fail_threshold: self.fail_threshold,
            max_basis: self.max_basis,
            seed: self.seed,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditInputs {
    pub phi1: InnerSymbol,
    pub phi2: InnerSymbol,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymbolicVerdicts {
    pub commuting: CommutingVerdict,
    pub finite_rank: FiniteRankVerdict,
    pub tto_12: TtoVerdict,
    pub tto_21: TtoVerdict,
    pub intersection: Option<InnerSymbol>,
}

impl SymbolicVerdicts {
    pub fn compute(phi1: &InnerSymbol, phi2: &InnerSymbol) -> Result<Self> {
        Ok(Self {
            commuting: commuting_verdict(phi1, phi2)?,
            finite_rank: finite_rank_verdict(phi1, phi2)?,
            tto_12: tto_isometry_verdict(phi1, phi2)?,
            tto_21: tto_isometry_verdict(phi2, phi1)?,
            intersection: intersection_symbol(phi1, phi2)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub check: CheckKind,
    pub residual: f64,
    pub band: Band,
    /// What the symbolic verdict predicts: `true` means the residual should
    /// vanish, `false` that it should not.
    pub expected: bool,
    /// `None` when the band is inconclusive.
    pub agrees: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric_rank: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub inputs: AuditInputs,
    pub config: ResolvedConfig,
    pub symbolic: SymbolicVerdicts,
    pub numeric: Vec<CheckOutcome>,
    pub agreement: bool,
}

impl AuditReport {
    pub fn disagreements(&self) -> usize {
        self.numeric.iter().filter(|c| c.agrees == Some(false)).count()
    }

    pub fn inconclusive(&self) -> usize {
        self.numeric.iter().filter(|c| c.band == Band::Inconclusive).count()
    }

    pub fn all_inconclusive(&self) -> bool {
        !self.numeric.is_empty() && self.inconclusive() == self.numeric.len()
    }

    pub fn to_json(&self) -> Result<String> {
        crate::report::to_json_pretty(self)
    }
}

/// Singular values, in decreasing order, of `P_{Q(φ₁)} P_{Q(φ₂)}` on the
/// box `[0..degree]ⁿ`.
pub fn projection_product_singular_values(
    phi1: &InnerSymbol,
    phi2: &InnerSymbol,
    degree: usize,
    max_basis: usize,
) -> Result<Vec<f64>> {
    let basis = Arc::new(BoxBasis::with_limit(phi1.n(), degree, max_basis)?);
    let q1 = truncated::model_projection(phi1, &basis)?;
    let q2 = truncated::model_projection(phi2, &basis)?;
    sorted_singular_values(&q1.compose(&q2)?)
}

fn sorted_singular_values(op: &TruncatedOperator) -> Result<Vec<f64>> {
    let mut s = op.singular_values()?;
    s.sort_by(|a, b| b.total_cmp(a));
    Ok(s)
}

/// Distance of a spectrum from `r` ones followed by zeros.
fn rank_residual(sorted: &[f64], rank: usize) -> f64 {
    let head = sorted
        .iter()
        .take(rank)
        .map(|s| (1.0 - s).abs())
        .fold(0.0, f64::max);
    let next = if rank < sorted.len() { sorted[rank] } else { 0.0 };
    head.max(next)
}

struct Operators {
    basis: Arc<BoxBasis>,
    mask: InteriorMask,
    m1: TruncatedOperator,
    m2: TruncatedOperator,
    p1: TruncatedOperator,
    p2: TruncatedOperator,
    q1: TruncatedOperator,
    q2: TruncatedOperator,
}

impl Operators {
    fn build(phi1: &InnerSymbol, phi2: &InnerSymbol, config: &ResolvedConfig) -> Result<Self> {
        let basis = Arc::new(BoxBasis::with_limit(config.n, config.degree, config.max_basis)?);
        let mask = InteriorMask::new(config.margin, config.degree)?;
        let m1 = mult_operator(phi1, &basis)?;
        let m2 = mult_operator(phi2, &basis)?;
        let p1 = truncated::range_projection(phi1, &basis)?;
        let p2 = truncated::range_projection(phi2, &basis)?;
        let q1 = model_from_range(&p1, phi1);
        let q2 = model_from_range(&p2, phi2);
        Ok(Self {
            basis,
            mask,
            m1,
            m2,
            p1,
            p2,
            q1,
            q2,
        })
    }
}

pub fn numeric_audit(
    phi1: &InnerSymbol,
    phi2: &InnerSymbol,
    config: &AuditConfig,
) -> Result<AuditReport> {
    if phi1.n() != phi2.n() {
        return Err(Error::DimensionMismatch {
            expected: phi1.n(),
            found: phi2.n(),
        });
    }
    let resolved = config.resolve(phi1.n())?;
    let symbolic = SymbolicVerdicts::compute(phi1, phi2)?;
    let ops = Operators::build(phi1, phi2, &resolved)?;
    let mask = &ops.mask;

    let mut checks = config.checks.clone();
    checks.sort();
    checks.dedup();

    let mut numeric = Vec::new();
    for kind in checks {
        let mut numeric_rank = None;
        let (residual, expected) = match kind {
            CheckKind::Commutator => (
                commutator_residual(&ops.p1, &ops.p2, mask)?,
                symbolic.commuting.commutes,
            ),
            CheckKind::TtoPartialIsometry12 => (
                partial_isometry_defect(&ops.p1, &ops.m2, &ops.q1, mask)?,
                symbolic.tto_12.partial_isometry,
            ),
            CheckKind::TtoPartialIsometry21 => (
                partial_isometry_defect(&ops.p2, &ops.m1, &ops.q2, mask)?,
                symbolic.tto_21.partial_isometry,
            ),
            CheckKind::TtoIsometry12 => (
                isometry_defect(&ops.p1, &ops.m2, &ops.q1, mask)?,
                symbolic.tto_12.isometry,
            ),
            CheckKind::TtoIsometry21 => (
                isometry_defect(&ops.p2, &ops.m1, &ops.q2, mask)?,
                symbolic.tto_21.isometry,
            ),
            CheckKind::IntersectionProjection => {
                // only meaningful when the intersection is χH²
                let Some(chi) = &symbolic.intersection else {
                    continue;
                };
                let product = restricted_product(&ops.p1, &ops.p2, mask);
                let pc = truncated::range_projection(chi, &ops.basis)?;
                let rows = ops.basis.interior_positions(mask);
                let target = truncated::gather(pc.matrix(), &rows, &rows);
                (truncated::frobenius((&product - &target).as_ref()), true)
            }
            CheckKind::DouglasRank => {
                let Some(rank) = symbolic.finite_rank.rank else {
                    continue;
                };
                let sv = sorted_singular_values(&ops.q1.compose(&ops.q2)?)?;
                numeric_rank = Some(sv.iter().filter(|&&s| s > RANK_CUTOFF).count());
                (rank_residual(&sv, rank), true)
            }
        };
        let band = Band::classify(residual, resolved.pass_threshold, resolved.fail_threshold);
        let agrees = match band {
            Band::Pass => Some(expected),
            Band::Fail => Some(!expected),
            Band::Inconclusive => None,
        };
        numeric.push(CheckOutcome {
            check: kind,
            residual,
            band,
            expected,
            agrees,
            numeric_rank,
        });
    }
    let agreement = numeric.iter().all(|c| c.agrees != Some(false));
    Ok(AuditReport {
        inputs: AuditInputs {
            phi1: phi1.clone(),
            phi2: phi2.clone(),
        },
        config: resolved,
        symbolic,
        numeric,
        agreement,
    })
}

fn restricted_product(
    a: &TruncatedOperator,
    b: &TruncatedOperator,
    mask: &InteriorMask,
) -> faer::Mat<faer::c64> {
    let rows = a.basis().interior_positions(mask);
    let all: Vec<usize> = (0..a.basis().size()).collect();
    let left = truncated::gather(a.matrix(), &rows, &all);
    let right = truncated::gather(b.matrix(), &all, &rows);
    &left * &right
}

// ---------------------------------------------------------------------------
// Campaigns

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignRow {
    pub trial: usize,
    pub n: usize,
    pub kind: PairKind,
    pub phi1: InnerSymbol,
    pub phi2: InnerSymbol,
    pub commutes: bool,
    pub agreement: bool,
    pub inconclusive_checks: Vec<CheckKind>,
    pub disagreeing_checks: Vec<CheckKind>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignSummary {
    pub seed: u64,
    pub trials: usize,
    pub dimensions: Vec<usize>,
    pub disagreements: usize,
    pub inconclusive_pairs: usize,
    pub inconclusive_rate: f64,
    pub rows: Vec<CampaignRow>,
}

impl CampaignSummary {
    pub fn to_json(&self) -> Result<String> {
        crate::report::to_json_pretty(self)
    }
}

/// Audits `trials` seeded pairs, cycling through `dimensions`. A pair
/// counts as inconclusive when any of its checks is.
pub fn random_audit(
    trials: usize,
    seed: u64,
    dimensions: &[usize],
    config: &AuditConfig,
) -> Result<CampaignSummary> {
    if trials == 0 {
        return Err(Error::Config("a campaign needs at least one trial".into()));
    }
    if dimensions.is_empty() || dimensions.contains(&0) {
        return Err(Error::Config("dimensions must be a nonempty list of positive integers".into()));
    }
    for &n in dimensions {
        config.resolve(n)?;
    }
    let mut sampler = SymbolSampler::new(seed);
    let mut config = config.clone();
    config.seed = Some(seed);
    let mut rows = Vec::with_capacity(trials);
    for trial in 0..trials {
        let n = dimensions[trial % dimensions.len()];
        let (phi1, phi2, kind) = sampler.pair(n);
        let report = numeric_audit(&phi1, &phi2, &config)?;
        let pick = |f: &dyn Fn(&CheckOutcome) -> bool| {
            report.numeric.iter().filter(|c| f(c)).map(|c| c.check).collect::<Vec<_>>()
        };
        rows.push(CampaignRow {
            trial,
            n,
            kind,
            commutes: report.symbolic.commuting.commutes,
            agreement: report.agreement,
            inconclusive_checks: pick(&|c| c.band == Band::Inconclusive),
            disagreeing_checks: pick(&|c| c.agrees == Some(false)),
            phi1,
            phi2,
        });
    }
    let disagreements = rows.iter().filter(|r| !r.agreement).count();
    let inconclusive_pairs = rows.iter().filter(|r| !r.inconclusive_checks.is_empty()).count();
    Ok(CampaignSummary {
        seed,
        trials,
        dimensions: dimensions.to_vec(),
        disagreements,
        inconclusive_pairs,
        inconclusive_rate: inconclusive_pairs as f64 / trials as f64,
        rows,
    })
}
