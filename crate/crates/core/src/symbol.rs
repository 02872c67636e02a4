//! Blaschke–monomial inner functions on the polydisc.
//!
//! A symbol is a unimodular constant times a product of one-variable
//! factors `z_i^k · ∏ b_α(z_i)^m`, where `b_α(z) = (z − α)/(1 − ᾱz)`.
//! The class is closed under products, exact division and gcd, which is
//! what makes the divisibility and separation questions decidable.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Complex = Complex64;

/// Zeros must satisfy `|α| ≤ 1 − ZERO_MARGIN`.
pub const ZERO_MARGIN: f64 = 1e-12;
/// Tolerance on `|constant| = 1` for programmatic construction.
pub const CONSTANT_TOLERANCE: f64 = 1e-12;
/// Looser tolerance applied when parsing symbol documents.
pub const PARSE_CONSTANT_TOLERANCE: f64 = 1e-9;

/// A zero of a Blaschke factor, with multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskZero {
    value: Complex,
    multiplicity: u32,
}

impl DiskZero {
    pub fn new(value: Complex, multiplicity: u32) -> Result<Self> {
        if !(value.re.is_finite() && value.im.is_finite()) {
            return Err(Error::invalid("zero", "value is not finite"));
        }
        if value.norm() > 1.0 - ZERO_MARGIN {
            return Err(Error::invalid(
                "zero",
                format!("|zero| = {} must be < 1", value.norm()),
            ));
        }
        if multiplicity == 0 {
            return Err(Error::invalid("zero", "multiplicity must be at least 1"));
        }
        Ok(Self {
            value,
            multiplicity,
        })
    }

    pub fn simple(value: Complex) -> Result<Self> {
        Self::new(value, 1)
    }

    pub fn value(&self) -> Complex {
        self.value
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }
}

/// The Blaschke factor `b_α(z) = (z − α)/(1 − ᾱz)`.
pub fn blaschke_factor(alpha: Complex, z: Complex) -> Complex {
    (z - alpha) / (Complex::new(1.0, 0.0) - alpha.conj() * z)
}

/// Power series of `b_α` to degree `cap`: `c₀ = −α`, `c_k = (1 − |α|²) ᾱ^{k−1}`.
pub fn blaschke_series(alpha: Complex, cap: usize) -> Vec<Complex> {
    let mut out = Vec::with_capacity(cap + 1);
    out.push(-alpha);
    let scale = 1.0 - alpha.norm_sqr();
    let mut power = Complex::new(1.0, 0.0);
    for _ in 1..=cap {
        out.push(power * scale);
        power *= alpha.conj();
    }
    out
}

/// Truncated Cauchy product of two one-variable series.
pub fn convolve_truncated(a: &[Complex], b: &[Complex], cap: usize) -> Vec<Complex> {
    let mut out = vec![Complex::new(0.0, 0.0); cap + 1];
    for (i, &x) in a.iter().enumerate().take(cap + 1) {
        if x == Complex::new(0.0, 0.0) {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(cap + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn zero_order(a: &Complex, b: &Complex) -> std::cmp::Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

/// The part of a symbol that depends on a single variable.
#[derive(Debug, Clone, PartialEq)]
pub struct VariableFactor {
    variable_index: usize,
    monomial_exponent: u32,
    zeros: Vec<DiskZero>,
}

impl VariableFactor {
    /// Builds a factor in canonical form. Zeros at the origin are moved
    /// into the monomial exponent and repeated values are merged.
    pub fn new(
        variable_index: usize,
        monomial_exponent: u32,
        zeros: impl IntoIterator<Item = DiskZero>,
    ) -> Self {
        let mut exponent = monomial_exponent;
        let mut list: Vec<DiskZero> = Vec::new();
        for z in zeros {
            if z.value == Complex::new(0.0, 0.0) {
                exponent += z.multiplicity;
            } else {
                list.push(z);
            }
        }
        list.sort_by(|a, b| zero_order(&a.value, &b.value));
        let mut merged: Vec<DiskZero> = Vec::with_capacity(list.len());
        for z in list {
            match merged.last_mut() {
                Some(last) if last.value == z.value => last.multiplicity += z.multiplicity,
                _ => merged.push(z),
            }
        }
        Self {
            variable_index,
            monomial_exponent: exponent,
            zeros: merged,
        }
    }

    pub fn variable_index(&self) -> usize {
        self.variable_index
    }

    pub fn monomial_exponent(&self) -> u32 {
        self.monomial_exponent
    }

    pub fn zeros(&self) -> &[DiskZero] {
        &self.zeros
    }

    pub fn is_trivial(&self) -> bool {
        self.monomial_exponent == 0 && self.zeros.is_empty()
    }

    /// Number of zeros in the disc counted with multiplicity, origin included.
    pub fn degree(&self) -> u32 {
        self.monomial_exponent + self.zeros.iter().map(|z| z.multiplicity).sum::<u32>()
    }

    pub fn evaluate(&self, z: Complex) -> Complex {
        let mut value = z.powu(self.monomial_exponent);
        for zero in &self.zeros {
            value *= blaschke_factor(zero.value, z).powu(zero.multiplicity);
        }
        value
    }

    /// Taylor coefficients of the factor up to degree `cap`.
    pub fn series(&self, cap: usize) -> Vec<Complex> {
        let mut out = vec![Complex::new(0.0, 0.0); cap + 1];
        let shift = self.monomial_exponent as usize;
        if shift > cap {
            return out;
        }
        let mut series = vec![Complex::new(0.0, 0.0); cap + 1 - shift];
        series[0] = Complex::new(1.0, 0.0);
        let inner_cap = cap - shift;
        for zero in &self.zeros {
            let factor = blaschke_series(zero.value, inner_cap);
            for _ in 0..zero.multiplicity {
                series = convolve_truncated(&series, &factor, inner_cap);
            }
        }
        out[shift..].copy_from_slice(&series);
        out
    }

    fn multiplicity_of(&self, value: Complex) -> u32 {
        self.zeros
            .iter()
            .find(|z| z.value == value)
            .map_or(0, |z| z.multiplicity)
    }

    fn product(&self, other: &Self) -> Self {
        Self::new(
            self.variable_index,
            self.monomial_exponent + other.monomial_exponent,
            self.zeros.iter().chain(other.zeros.iter()).copied(),
        )
    }

    fn quotient(&self, divisor: &Self) -> Option<Self> {
        if divisor.monomial_exponent > self.monomial_exponent {
            return None;
        }
        for z in &divisor.zeros {
            if self.multiplicity_of(z.value) < z.multiplicity {
                return None;
            }
        }
        let zeros = self.zeros.iter().filter_map(|z| {
            let left = z.multiplicity - divisor.multiplicity_of(z.value);
            (left > 0).then_some(DiskZero {
                value: z.value,
                multiplicity: left,
            })
        });
        Some(Self::new(
            self.variable_index,
            self.monomial_exponent - divisor.monomial_exponent,
            zeros,
        ))
    }

    fn common(&self, other: &Self) -> Self {
        let zeros = self.zeros.iter().filter_map(|z| {
            let m = z.multiplicity.min(other.multiplicity_of(z.value));
            (m > 0).then_some(DiskZero {
                value: z.value,
                multiplicity: m,
            })
        });
        Self::new(
            self.variable_index,
            self.monomial_exponent.min(other.monomial_exponent),
            zeros,
        )
    }
}

/// A Blaschke–monomial inner function on the polydisc `𝔻ⁿ`.
///
/// Only nontrivial factors are stored, so two symbols are equal exactly
/// when they have the same constant and the same canonical factors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "SymbolDoc", try_from = "SymbolDoc")]
pub struct InnerSymbol {
    n: usize,
    constant: Complex,
    factors: BTreeMap<usize, VariableFactor>,
}

/// Per-variable and total zero counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCounts {
    pub per_variable: Vec<u32>,
    pub total: u32,
}

/// Witness that two symbols share the common factor `psi` and that their
/// cofactors are separated.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeparatedDecomposition {
    #[serde(rename = "psi")]
    pub common_factor: InnerSymbol,
    #[serde(rename = "phi1_tilde")]
    pub first_cofactor: InnerSymbol,
    #[serde(rename = "phi2_tilde")]
    pub second_cofactor: InnerSymbol,
}

impl InnerSymbol {
    pub fn new(
        n: usize,
        constant: Complex,
        factors: impl IntoIterator<Item = VariableFactor>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("n", "number of variables must be at least 1"));
        }
        if !(constant.re.is_finite() && constant.im.is_finite())
            || (constant.norm() - 1.0).abs() > CONSTANT_TOLERANCE
        {
            return Err(Error::invalid(
                "constant",
                format!("|constant| = {} must equal 1", constant.norm()),
            ));
        }
        let mut map: BTreeMap<usize, VariableFactor> = BTreeMap::new();
        for f in factors {
            if f.variable_index >= n {
                return Err(Error::invalid(
                    "factors",
                    format!("variable index {} is not below n = {n}", f.variable_index),
                ));
            }
            let merged = match map.remove(&f.variable_index) {
                Some(existing) => existing.product(&f),
                None => f,
            };
            map.insert(merged.variable_index, merged);
        }
        map.retain(|_, f| !f.is_trivial());
        Ok(Self {
            n,
            constant,
            factors: map,
        })
    }

    /// The constant function 1.
    pub fn one(n: usize) -> Self {
        assert!(n >= 1, "number of variables must be at least 1");
        Self {
            n,
            constant: Complex::new(1.0, 0.0),
            factors: BTreeMap::new(),
        }
    }

    pub fn unimodular(n: usize, constant: Complex) -> Result<Self> {
        Self::new(n, constant, [])
    }

    /// `z_var^exponent`.
    pub fn monomial(n: usize, var: usize, exponent: u32) -> Result<Self> {
        Self::new(
            n,
            Complex::new(1.0, 0.0),
            [VariableFactor::new(var, exponent, [])],
        )
    }

    /// The single Blaschke factor `b_α(z_var)`.
    pub fn blaschke(n: usize, var: usize, alpha: Complex) -> Result<Self> {
        Self::new(
            n,
            Complex::new(1.0, 0.0),
            [VariableFactor::new(var, 0, [DiskZero::simple(alpha)?])],
        )
    }

    /// One-variable Blaschke product with the given zeros (simple zeros,
    /// repeated entries add multiplicity).
    pub fn blaschke_product(n: usize, var: usize, zeros: &[Complex]) -> Result<Self> {
        let zeros = zeros
            .iter()
            .map(|&z| DiskZero::simple(z))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, Complex::new(1.0, 0.0), [VariableFactor::new(var, 0, zeros)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn constant(&self) -> Complex {
        self.constant
    }

    /// The factor in variable `var`, if nontrivial.
    pub fn factor(&self, var: usize) -> Option<&VariableFactor> {
        self.factors.get(&var)
    }

    pub fn factors(&self) -> impl Iterator<Item = &VariableFactor> {
        self.factors.values()
    }

    pub fn is_constant(&self) -> bool {
        self.factors.is_empty()
    }

    /// Variables the symbol actually depends on.
    pub fn support(&self) -> BTreeSet<usize> {
        self.factors.keys().copied().collect()
    }

    /// The same symbol with constant 1.
    pub fn normalized(&self) -> Self {
        Self {
            constant: Complex::new(1.0, 0.0),
            ..self.clone()
        }
    }

    /// Structural equality ignoring the unimodular constant.
    pub fn same_up_to_constant(&self, other: &Self) -> bool {
        self.n == other.n && self.factors == other.factors
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn evaluate(&self, point: &[Complex]) -> Result<Complex> {
        if point.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: point.len(),
            });
        }
        for (index, p) in point.iter().enumerate() {
            let modulus = p.norm();
            if !modulus.is_finite() || modulus > 1.0 + 1e-12 {
                return Err(Error::Domain { index, modulus });
            }
        }
        Ok(self
            .factors
            .values()
            .fold(self.constant, |acc, f| acc * f.evaluate(point[f.variable_index])))
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut factors = self.factors.clone();
        for (var, f) in &other.factors {
            let merged = match factors.remove(var) {
                Some(existing) => existing.product(f),
                None => f.clone(),
            };
            factors.insert(*var, merged);
        }
        Ok(Self {
            n: self.n,
            constant: self.constant * other.constant,
            factors,
        })
    }

    /// Exact quotient `self / divisor` when `divisor` divides `self`.
    pub fn try_divide(&self, divisor: &Self) -> Result<Option<Self>> {
        self.check_same_n(divisor)?;
        let mut factors = BTreeMap::new();
        for (var, d) in &divisor.factors {
            let Some(f) = self.factors.get(var) else {
                return Ok(None);
            };
            if f.quotient(d).is_none() {
                return Ok(None);
            }
        }
        for (var, f) in &self.factors {
            let q = match divisor.factors.get(var) {
                Some(d) => f.quotient(d).expect("containment checked above"),
                None => f.clone(),
            };
            if !q.is_trivial() {
                factors.insert(*var, q);
            }
        }
        Ok(Some(Self {
            n: self.n,
            constant: self.constant / divisor.constant,
            factors,
        }))
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.try_divide(self)?.is_some())
    }

    /// Greatest common divisor, normalized to constant 1.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let factors = self
            .factors
            .iter()
            .filter_map(|(var, f)| {
                let g = f.common(other.factors.get(var)?);
                (!g.is_trivial()).then_some((*var, g))
            })
            .collect();
        Ok(Self {
            n: self.n,
            constant: Complex::new(1.0, 0.0),
            factors,
        })
    }

    /// True when the two symbols depend on disjoint sets of variables.
    pub fn is_separated(&self, other: &Self) -> Result<bool> {
        self.check_same_n(other)?;
        Ok(self.factors.keys().all(|k| !other.factors.contains_key(k)))
    }

    /// Splits `(self, other)` as `(ψ·ã, ψ·b̃)` with `ã`, `b̃` separated,
    /// taking `ψ = gcd(self, other)`. Returns `None` when the cofactors
    /// share a variable; within this class no other choice of `ψ` can
    /// succeed in that case.
    pub fn separated_decomposition(&self, other: &Self) -> Result<Option<SeparatedDecomposition>> {
        let common = self.gcd(other)?;
        let first = self.try_divide(&common)?.expect("gcd divides its arguments");
        let second = other.try_divide(&common)?.expect("gcd divides its arguments");
        if !first.is_separated(&second)? {
            return Ok(None);
        }
        Ok(Some(SeparatedDecomposition {
            common_factor: common,
            first_cofactor: first,
            second_cofactor: second,
        }))
    }

    pub fn blaschke_degree(&self) -> DegreeCounts {
        let per_variable: Vec<u32> = (0..self.n)
            .map(|v| self.factors.get(&v).map_or(0, VariableFactor::degree))
            .collect();
        let total = per_variable.iter().sum();
        DegreeCounts {
            per_variable,
            total,
        }
    }

    /// One-variable series of the factor in `var` (without the constant).
    pub fn variable_series(&self, var: usize, cap: usize) -> Vec<Complex> {
        match self.factors.get(&var) {
            Some(f) => f.series(cap),
            None => {
                let mut s = vec![Complex::new(0.0, 0.0); cap + 1];
                s[0] = Complex::new(1.0, 0.0);
                s
            }
        }
    }

    /// Taylor coefficients on the box `[0..cap]ⁿ`.
    pub fn taylor_coefficients(&self, cap: usize) -> CoefficientTensor {
        let series: Vec<Vec<Complex>> =
            (0..self.n).map(|v| self.variable_series(v, cap)).collect();
        let side = cap + 1;
        let len = side.pow(self.n as u32);
        let mut data = vec![self.constant; len];
        for (pos, value) in data.iter_mut().enumerate() {
            let mut rest = pos;
            // row-major: the last variable varies fastest
            for v in (0..self.n).rev() {
                *value *= series[v][rest % side];
                rest /= side;
            }
        }
        CoefficientTensor {
            n: self.n,
            cap,
            data,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SymbolDoc = serde_json::from_str(text)
            .map_err(|e| Error::invalid("document", e.to_string()))?;
        Self::try_from(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("symbol serialization is infallible")
    }
}

impl fmt::Display for InnerSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.constant != Complex::new(1.0, 0.0) || self.factors.is_empty() {
            parts.push(format!("({})", self.constant));
        }
        for factor in self.factors.values() {
            let var = factor.variable_index;
            match factor.monomial_exponent {
                0 => {}
                1 => parts.push(format!("z{var}")),
                k => parts.push(format!("z{var}^{k}")),
            }
            for zero in &factor.zeros {
                let base = format!("b[{}](z{var})", zero.value);
                if zero.multiplicity == 1 {
                    parts.push(base);
                } else {
                    parts.push(format!("{base}^{}", zero.multiplicity));
                }
            }
        }
        write!(f, "{}", parts.join("·"))
    }
}

/// Coefficients of a power series on the box `[0..cap]ⁿ`, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTensor {
    n: usize,
    cap: usize,
    data: Vec<Complex>,
}

impl CoefficientTensor {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn as_slice(&self) -> &[Complex] {
        &self.data
    }

    pub fn get(&self, index: &[usize]) -> Complex {
        assert_eq!(index.len(), self.n);
        let side = self.cap + 1;
        let pos = index.iter().fold(0, |acc, &k| {
            assert!(k <= self.cap, "multi-index outside the box");
            acc * side + k
        });
        self.data[pos]
    }

    /// ℓ² mass of the stored coefficients.
    pub fn norm_sqr(&self) -> f64 {
        self.data.iter().map(|c| c.norm_sqr()).sum()
    }
}

// ---------------------------------------------------------------------------
// JSON document form

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymbolDoc {
    pub n: usize,
    pub constant: [f64; 2],
    #[serde(default)]
    pub factors: BTreeMap<String, FactorDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorDoc {
    #[serde(default)]
    pub exp: u32,
    #[serde(default)]
    pub zeros: Vec<ZeroDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZeroDoc {
    pub re: f64,
    pub im: f64,
    #[serde(default = "default_multiplicity")]
    pub mult: u32,
}

fn default_multiplicity() -> u32 {
    1
}

impl From<InnerSymbol> for SymbolDoc {
    fn from(s: InnerSymbol) -> Self {
        let factors = s
            .factors
            .values()
            .map(|f| {
                (
                    f.variable_index.to_string(),
                    FactorDoc {
                        exp: f.monomial_exponent,
                        zeros: f
                            .zeros
                            .iter()
                            .map(|z| ZeroDoc {
                                re: z.value.re,
                                im: z.value.im,
                                mult: z.multiplicity,
                            })
                            .collect(),
                    },
                )
            })
            .collect();
        SymbolDoc {
            n: s.n,
            constant: [s.constant.re, s.constant.im],
            factors,
        }
    }
}

impl TryFrom<SymbolDoc> for InnerSymbol {
    type Error = Error;

    fn try_from(doc: SymbolDoc) -> Result<Self> {
        if doc.n == 0 {
            return Err(Error::invalid("n", "number of variables must be at least 1"));
        }
        let constant = Complex::new(doc.constant[0], doc.constant[1]);
        let modulus = constant.norm();
        if !modulus.is_finite() || (modulus - 1.0).abs() > PARSE_CONSTANT_TOLERANCE {
            return Err(Error::invalid(
                "constant",
                format!("|constant| = {modulus} must equal 1"),
            ));
        }
        let mut factors = Vec::with_capacity(doc.factors.len());
        for (key, fd) in &doc.factors {
            let var: usize = key.parse().map_err(|_| {
                Error::invalid(format!("factors.{key}"), "key must be a variable index")
            })?;
            if var >= doc.n {
                return Err(Error::invalid(
                    format!("factors.{key}"),
                    format!("variable index must be below n = {}", doc.n),
                ));
            }
            let mut zeros = Vec::with_capacity(fd.zeros.len());
            for (i, zd) in fd.zeros.iter().enumerate() {
                let field = format!("factors.{key}.zeros[{i}]");
                let value = Complex::new(zd.re, zd.im);
                let zero = DiskZero::new(value, zd.mult).map_err(|e| match e {
                    Error::InvalidSymbol { message, .. } => Error::invalid(field.clone(), message),
                    other => other,
                })?;
                zeros.push(zero);
            }
            factors.push(VariableFactor::new(var, fd.exp, zeros));
        }
        InnerSymbol::new(doc.n, constant / modulus, factors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex {
        Complex::new(re, 0.0)
    }

    fn b(n: usize, var: usize, alpha: f64) -> InnerSymbol {
        InnerSymbol::blaschke(n, var, c(alpha)).unwrap()
    }

    fn z(n: usize, var: usize, k: u32) -> InnerSymbol {
        InnerSymbol::monomial(n, var, k).unwrap()
    }

    // Direct evaluation of z·(z − α)/(1 − ᾱz), independent of the factor code.
    fn reference_z_times_blaschke(alpha: f64, p: f64) -> f64 {
        p * (p - alpha) / (1.0 - alpha * p)
    }

    #[test]
    fn evaluate_blaschke_values() {
        let s = b(1, 0, 0.5);
        assert!(s.evaluate(&[c(0.5)]).unwrap().norm() < 1e-15);
        assert!((s.evaluate(&[c(0.0)]).unwrap() - c(-0.5)).norm() < 1e-15);
        let t = z(2, 0, 1).multiply(&b(2, 0, 0.5)).unwrap();
        let v = t.evaluate(&[c(0.8), c(0.1)]).unwrap();
        assert!((v - c(0.4)).norm() < 1e-15);
        assert!((v.re - reference_z_times_blaschke(0.5, 0.8)).abs() < 1e-15);
    }

    #[test]
    fn evaluate_rejects_points_outside_polydisc() {
        let s = b(2, 0, 0.5);
        let err = s.evaluate(&[c(0.2), c(1.5)]).unwrap_err();
        assert!(matches!(err, Error::Domain { index: 1, .. }));
        assert!(s.evaluate(&[c(0.2)]).is_err());
        // the boundary itself is allowed
        let v = s.evaluate(&[Complex::from_polar(1.0, 0.3), c(1.0)]).unwrap();
        assert!((v.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_invariants() {
        assert!(DiskZero::simple(c(1.0)).is_err());
        assert!(DiskZero::simple(c(1.0 - 1e-13)).is_err());
        assert!(DiskZero::simple(c(0.999)).is_ok());
        assert!(DiskZero::new(c(0.5), 0).is_err());
        assert!(InnerSymbol::unimodular(1, c(1.1)).is_err());
        assert!(InnerSymbol::monomial(2, 2, 1).is_err());
    }

    #[test]
    fn canonical_form_merges_and_orders_zeros() {
        let f = VariableFactor::new(
            0,
            1,
            [
                DiskZero::simple(Complex::new(0.3, 0.1)).unwrap(),
                DiskZero::simple(Complex::new(-0.2, 0.0)).unwrap(),
                DiskZero::simple(Complex::new(0.3, -0.1)).unwrap(),
                DiskZero::simple(Complex::new(0.3, 0.1)).unwrap(),
                DiskZero::simple(c(0.0)).unwrap(),
            ],
        );
        assert_eq!(f.monomial_exponent(), 2);
        let values: Vec<_> = f.zeros().iter().map(|z| (z.value(), z.multiplicity())).collect();
        assert_eq!(
            values,
            vec![
                (Complex::new(-0.2, 0.0), 1),
                (Complex::new(0.3, -0.1), 1),
                (Complex::new(0.3, 0.1), 2)
            ]
        );
        assert_eq!(f.degree(), 6);
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(z(1, 0, 1).multiply(&z(1, 0, 1)).unwrap(), z(1, 0, 2));
        let p = b(2, 0, 0.5).multiply(&b(2, 1, 0.3)).unwrap();
        assert_eq!(p.factor(0).unwrap().zeros()[0].value(), c(0.5));
        assert_eq!(p.factor(1).unwrap().zeros()[0].value(), c(0.3));
        assert!(z(1, 0, 1).multiply(&z(2, 0, 1)).is_err());
    }

    #[test]
    fn divide_examples() {
        let num = z(1, 0, 2).multiply(&b(1, 0, 0.5)).unwrap();
        let q = num.try_divide(&z(1, 0, 1)).unwrap().unwrap();
        assert_eq!(q, z(1, 0, 1).multiply(&b(1, 0, 0.5)).unwrap());
        assert_eq!(b(1, 0, 0.5).try_divide(&b(1, 0, 0.3)).unwrap(), None);
        let two = z(2, 0, 1).multiply(&b(2, 1, 0.3)).unwrap();
        assert_eq!(two.try_divide(&b(2, 1, 0.3)).unwrap().unwrap(), z(2, 0, 1));
    }

    #[test]
    fn divide_tracks_constants() {
        let i = Complex::new(0.0, 1.0);
        let num = InnerSymbol::unimodular(1, i).unwrap().multiply(&b(1, 0, 0.5)).unwrap();
        let den = InnerSymbol::unimodular(1, c(-1.0)).unwrap().multiply(&b(1, 0, 0.5)).unwrap();
        let q = num.try_divide(&den).unwrap().unwrap();
        assert!(q.is_constant());
        assert!((q.constant() - Complex::new(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn gcd_examples() {
        let a = z(2, 0, 1).multiply(&b(2, 0, 0.5)).unwrap();
        let bb = z(2, 0, 1).multiply(&b(2, 1, 0.3)).unwrap();
        assert_eq!(a.gcd(&bb).unwrap(), z(2, 0, 1));
        let phi = InnerSymbol::unimodular(1, Complex::new(0.0, 1.0))
            .unwrap()
            .multiply(&b(1, 0, 0.2))
            .unwrap();
        assert_eq!(phi.gcd(&phi).unwrap(), phi.normalized());
        assert!(b(2, 0, 0.5).gcd(&b(2, 1, 0.3)).unwrap().is_constant());
    }

    #[test]
    fn separation_examples() {
        assert!(b(2, 0, 0.5).is_separated(&b(2, 1, 0.3)).unwrap());
        let z1z2 = z(2, 0, 1).multiply(&z(2, 1, 1)).unwrap();
        assert!(!z(2, 0, 1).is_separated(&z1z2).unwrap());
        assert!(InnerSymbol::one(2).is_separated(&z1z2).unwrap());
    }

    #[test]
    fn decomposition_examples() {
        let a = z(2, 0, 1).multiply(&b(2, 0, 0.5)).unwrap();
        let bb = z(2, 0, 1).multiply(&b(2, 1, 0.3)).unwrap();
        let d = a.separated_decomposition(&bb).unwrap().unwrap();
        assert_eq!(d.common_factor, z(2, 0, 1));
        assert_eq!(d.first_cofactor, b(2, 0, 0.5));
        assert_eq!(d.second_cofactor, b(2, 1, 0.3));

        assert!(b(1, 0, 0.5).separated_decomposition(&b(1, 0, 0.3)).unwrap().is_none());

        let d = a.separated_decomposition(&a).unwrap().unwrap();
        assert_eq!(d.common_factor, a);
        assert!(d.first_cofactor.is_constant() && d.second_cofactor.is_constant());
    }

    #[test]
    fn taylor_examples() {
        let t = z(1, 0, 3).taylor_coefficients(5);
        let expected = [0.0, 0.0, 0.0, 1.0, 0.0, 0.0];
        for (k, e) in expected.iter().enumerate() {
            assert_eq!(t.get(&[k]), c(*e));
        }
        let t = b(1, 0, 0.5).taylor_coefficients(3);
        for (k, e) in [-0.5, 0.75, 0.375, 0.1875].iter().enumerate() {
            assert!((t.get(&[k]) - c(*e)).norm() < 1e-15);
        }
    }

    #[test]
    fn taylor_series_matches_evaluation_on_small_circle() {
        let s = b(1, 0, 0.5);
        let coeffs = s.taylor_coefficients(80);
        for j in 0..20 {
            let p = Complex::from_polar(0.5, j as f64 * std::f64::consts::TAU / 20.0);
            let mut sum = Complex::new(0.0, 0.0);
            let mut power = Complex::new(1.0, 0.0);
            for &ck in coeffs.as_slice() {
                sum += ck * power;
                power *= p;
            }
            assert!((sum - s.evaluate(&[p]).unwrap()).norm() < 1e-13);
        }
    }

    #[test]
    fn degree_examples() {
        let s = z(1, 0, 2).multiply(&b(1, 0, 0.5)).unwrap();
        assert_eq!(s.blaschke_degree().total, 3);
        assert_eq!(InnerSymbol::one(3).blaschke_degree().total, 0);
        let t = z(2, 0, 1).multiply(&b(2, 1, 0.3)).unwrap();
        let d = t.blaschke_degree();
        assert_eq!(d.per_variable, vec![1, 1]);
        assert_eq!(d.total, 2);
    }

    #[test]
    fn json_round_trip_and_schema() {
        let s = z(2, 0, 1)
            .multiply(&InnerSymbol::blaschke(2, 1, Complex::new(0.3, -0.2)).unwrap())
            .unwrap();
        let text = s.to_json();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["n"], 2);
        assert_eq!(value["factors"]["0"]["exp"], 1);
        assert_eq!(value["factors"]["1"]["zeros"][0]["mult"], 1);
        assert_eq!(InnerSymbol::from_json(&text).unwrap(), s);
    }

    #[test]
    fn json_validation_names_the_field() {
        let bad = r#"{"n":1,"constant":[1,0],"factors":{"0":{"exp":0,"zeros":[{"re":1.2,"im":0,"mult":1}]}}}"#;
        match InnerSymbol::from_json(bad).unwrap_err() {
            Error::InvalidSymbol { field, .. } => assert_eq!(field, "factors.0.zeros[0]"),
            e => panic!("unexpected error {e:?}"),
        }
        let bad_constant = r#"{"n":1,"constant":[0.5,0],"factors":{}}"#;
        assert!(matches!(
            InnerSymbol::from_json(bad_constant),
            Err(Error::InvalidSymbol { ref field, .. }) if field == "constant"
        ));
        let bad_var = r#"{"n":1,"constant":[1,0],"factors":{"3":{"exp":1}}}"#;
        assert!(InnerSymbol::from_json(bad_var).is_err());
        // within the parse tolerance the constant is renormalized
        let near = r#"{"n":1,"constant":[1.0000000001,0],"factors":{}}"#;
        assert_eq!(InnerSymbol::from_json(near).unwrap().constant(), c(1.0));
    }
}
