//! The fixed example suite behind `hardyops reproduce`.
//!
//! Every row names the statement it exercises with a tag from this
//! vocabulary:
//!
//! * `commuting/one-variable-divisibility`: in one variable the range
//!   projections commute iff one symbol divides the other.
//! * `commuting/separated-decomposition`: in several variables they commute
//!   iff the symbols are ψ·φ̃₁ and ψ·φ̃₂ with separated cofactors.
//! * `douglas/one-variable-rank`: a commuting one-variable pair gives a
//!   projection of rank equal to the degree of the divisor.
//! * `douglas/separated-finite-rank`: separated finite Blaschke products in
//!   two variables give rank equal to the product of the zero counts.
//! * `tto/partial-isometry-divisor`: in one variable the truncated Toeplitz
//!   operator is a partial isometry iff its symbol divides the model symbol.
//! * `tto/partial-isometry-commuting`: in several variables it is a partial
//!   isometry iff the two range projections commute.
//! * `tto/isometry-separated`: it is an isometry iff the symbols are
//!   separated (or one of them is constant).

use std::fs;
use std::path::Path;

use hardyops_core::audit::{numeric_audit, AuditConfig, Band, CheckKind};
use hardyops_core::kernel::product_rank;
use hardyops_core::report::{format_float, to_json_pretty};
use hardyops_core::{Complex, InnerSymbol, Result};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub suite: &'static str,
    pub case: String,
    pub tag: &'static str,
    pub phi1: InnerSymbol,
    pub phi2: InnerSymbol,
    pub check: CheckKind,
    /// Symbolic prediction: the residual should vanish.
    pub expected_zero: bool,
    pub residual: f64,
    pub band: Band,
    pub exact_rank: Option<usize>,
    pub numeric_rank: Option<usize>,
    pub consistent: bool,
}

#[derive(Serialize)]
struct Bundle<'a> {
    pass_threshold: f64,
    fail_threshold: f64,
    rows: &'a [Row],
}

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

fn z(n: usize, var: usize, k: u32) -> InnerSymbol {
    InnerSymbol::monomial(n, var, k).expect("valid monomial")
}

fn b(n: usize, var: usize, alpha: Complex) -> InnerSymbol {
    InnerSymbol::blaschke(n, var, alpha).expect("valid Blaschke factor")
}

fn mul(a: &InnerSymbol, b: &InnerSymbol) -> InnerSymbol {
    a.multiply(b).expect("same number of variables")
}

fn audit_rows(
    suite: &'static str,
    case: String,
    phi1: &InnerSymbol,
    phi2: &InnerSymbol,
    checks: &[(CheckKind, &'static str)],
    exact_rank: Option<usize>,
) -> Result<Vec<Row>> {
    let config = AuditConfig {
        checks: checks.iter().map(|&(k, _)| k).collect(),
        ..AuditConfig::default()
    };
    let report = numeric_audit(phi1, phi2, &config)?;
    let rows = report
        .numeric
        .iter()
        .map(|o| {
            let tag = checks.iter().find(|(k, _)| *k == o.check).expect("requested check").1;
            let rank_ok = match o.check {
                CheckKind::DouglasRank => o.numeric_rank.is_some() && o.numeric_rank == exact_rank,
                _ => true,
            };
            Row {
                suite,
                case: case.clone(),
                tag,
                phi1: phi1.clone(),
                phi2: phi2.clone(),
                check: o.check,
                expected_zero: o.expected,
                residual: o.residual,
                band: o.band,
                exact_rank: if o.check == CheckKind::DouglasRank { exact_rank } else { None },
                numeric_rank: o.numeric_rank,
                consistent: o.agrees == Some(true) && rank_ok,
            }
        })
        .collect();
    Ok(rows)
}

/// All rows of the suite, in a fixed order.
pub fn rows() -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    let half = c(0.5, 0.0);
    let third = c(0.3, 0.0);

    rows.extend(audit_rows(
        "noncommuting_pair",
        "distinct Blaschke factors".into(),
        &b(1, 0, half),
        &b(1, 0, third),
        &[(CheckKind::Commutator, "commuting/one-variable-divisibility")],
        None,
    )?);

    rows.extend(audit_rows(
        "common_factor_pair",
        "shared factor z0, separated cofactors".into(),
        &mul(&z(2, 0, 1), &b(2, 0, half)),
        &mul(&z(2, 0, 1), &b(2, 1, third)),
        &[(CheckKind::Commutator, "commuting/separated-decomposition")],
        None,
    )?);

    let first = [c(0.5, 0.0), c(0.0, -0.4), c(-0.3, 0.3)];
    let second = [c(0.0, 0.0), c(0.0, 0.6), c(-0.5, 0.0)];
    for m1 in 1..=3 {
        for m2 in 1..=3 {
            let phi1 = InnerSymbol::blaschke_product(2, 0, &first[..m1])?;
            let phi2 = InnerSymbol::blaschke_product(2, 1, &second[..m2])?;
            let exact = product_rank(&phi1, &phi2)?.rank;
            rows.extend(audit_rows(
                "douglas_rank_table",
                format!("({m1},{m2}) zeros"),
                &phi1,
                &phi2,
                &[(CheckKind::DouglasRank, "douglas/separated-finite-rank")],
                Some(exact),
            )?);
        }
    }

    let singles = [
        ("z", z(1, 0, 1)),
        ("b(0.5)", b(1, 0, half)),
        ("z*b(0.5)", mul(&z(1, 0, 1), &b(1, 0, half))),
        ("b(0.5)*b(-0.3)", mul(&b(1, 0, half), &b(1, 0, c(-0.3, 0.0)))),
    ];
    for (name1, phi1) in &singles {
        for (name2, phi2) in &singles {
            let divisor = if phi1.divides(phi2)? {
                Some(phi1.blaschke_degree().total as usize)
            } else if phi2.divides(phi1)? {
                Some(phi2.blaschke_degree().total as usize)
            } else {
                None
            };
            let mut checks = vec![(CheckKind::Commutator, "commuting/one-variable-divisibility")];
            if divisor.is_some() {
                checks.push((CheckKind::DouglasRank, "douglas/one-variable-rank"));
            }
            rows.extend(audit_rows(
                "one_variable_divisibility",
                format!("{name1} vs {name2}"),
                phi1,
                phi2,
                &checks,
                divisor,
            )?);
        }
    }

    let tto_cases = [
        ("z^2 with symbol z", z(1, 0, 2), z(1, 0, 1), "tto/partial-isometry-divisor"),
        ("b(0.5) with symbol b(0.3)", b(1, 0, half), b(1, 0, third), "tto/partial-isometry-divisor"),
        (
            "z0*b(0.5)(z0) with symbol z0*b(0.3)(z1)",
            mul(&z(2, 0, 1), &b(2, 0, half)),
            mul(&z(2, 0, 1), &b(2, 1, third)),
            "tto/partial-isometry-commuting",
        ),
        (
            "b(0.5)(z0) with symbol b(0.3)(z0)",
            b(2, 0, half),
            b(2, 0, third),
            "tto/partial-isometry-commuting",
        ),
    ];
    for (case, phi1, phi2, tag) in tto_cases {
        rows.extend(audit_rows(
            "tto",
            case.into(),
            &phi1,
            &phi2,
            &[
                (CheckKind::TtoPartialIsometry12, tag),
                (CheckKind::TtoIsometry12, "tto/isometry-separated"),
            ],
            None,
        )?);
    }
    let separated = [
        ("b(0.5)(z0) with symbol z1", b(2, 0, half), z(2, 1, 1)),
        ("z0^2 with symbol b(-0.3i)(z1)", z(2, 0, 2), b(2, 1, c(0.0, -0.3))),
    ];
    for (case, phi1, phi2) in separated {
        rows.extend(audit_rows(
            "tto",
            case.into(),
            &phi1,
            &phi2,
            &[(CheckKind::TtoIsometry12, "tto/isometry-separated")],
            None,
        )?);
    }
    Ok(rows)
}

fn csv_error(e: csv::Error) -> hardyops_core::Error {
    hardyops_core::Error::Config(format!("CSV output failed: {e}"))
}

/// CSV rendering of the rows; floats use the same 17-digit format as JSON.
pub fn to_csv(rows: &[Row]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record([
            "suite", "case", "tag", "phi1", "phi2", "check", "expected_zero", "residual", "band",
            "exact_rank", "numeric_rank", "consistent",
        ])
        .map_err(csv_error)?;
    let opt = |v: Option<usize>| v.map(|r| r.to_string()).unwrap_or_default();
    for row in rows {
        writer
            .write_record([
                row.suite.to_string(),
                row.case.clone(),
                row.tag.to_string(),
                row.phi1.to_string(),
                row.phi2.to_string(),
                row.check.as_str().to_string(),
                row.expected_zero.to_string(),
                format_float(row.residual),
                format!("{:?}", row.band).to_lowercase(),
                opt(row.exact_rank),
                opt(row.numeric_rank),
                row.consistent.to_string(),
            ])
            .map_err(csv_error)?;
    }
    let bytes = writer.into_inner().map_err(|e| csv_error(e.into_error().into()))?;
    Ok(String::from_utf8(bytes).expect("CSV of UTF-8 fields"))
}

/// Writes `report.csv` and `report.json` into `dir`, creating it if needed.
pub fn write_bundle(dir: &Path) -> std::result::Result<Vec<Row>, String> {
    let rows = rows().map_err(|e| e.to_string())?;
    let defaults = AuditConfig::default();
    let json = to_json_pretty(&Bundle {
        pass_threshold: defaults.pass_threshold,
        fail_threshold: defaults.fail_threshold,
        rows: &rows,
    })
    .map_err(|e| e.to_string())?;
    let csv = to_csv(&rows).map_err(|e| e.to_string())?;
    let write = |name: &str, text: &str| {
        let path = dir.join(name);
        fs::write(&path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
    };
    fs::create_dir_all(dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
    write("report.csv", &csv)?;
    write("report.json", &json)?;
    Ok(rows)
}
