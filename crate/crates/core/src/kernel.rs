//! Exact finite-dimensional model spaces of one-variable symbols.
//!
//! `Q_σ` for a finite Blaschke product with simple zeros is spanned by the
//! Szegő kernels at those zeros; for `z^k` it is spanned by `1, …, z^{k−1}`.

use faer::{c64, Mat, MatRef, Side};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::symbol::{Complex, InnerSymbol, ZERO_MARGIN};

/// Largest accepted condition number of a kernel Gram matrix.
pub const MAX_GRAM_CONDITION: f64 = 1e12;

/// A point of the open unit disc, used as a kernel centre.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelPoint {
    alpha: Complex,
}

impl Serialize for KernelPoint {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.alpha.re, self.alpha.im].serialize(serializer)
    }
}

impl KernelPoint {
    pub fn new(alpha: Complex) -> Result<Self> {
        if !(alpha.re.is_finite() && alpha.im.is_finite()) || alpha.norm() > 1.0 - ZERO_MARGIN {
            return Err(Error::invalid(
                "alpha",
                format!("kernel point must lie in the open disc, got modulus {}", alpha.norm()),
            ));
        }
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> Complex {
        self.alpha
    }

    /// `S(z, α) = 1/(1 − ᾱz)`.
    pub fn kernel_at(&self, z: Complex) -> Complex {
        Complex::new(1.0, 0.0) / (Complex::new(1.0, 0.0) - self.alpha.conj() * z)
    }
}

/// `G_ij = ⟨S_i, S_j⟩ = 1/(1 − conj(α_i)·α_j)`.
pub fn szego_gram(points: &[KernelPoint]) -> Result<Mat<c64>> {
    for (i, p) in points.iter().enumerate() {
        if points[..i].iter().any(|q| q.alpha == p.alpha) {
            return Err(Error::UnsupportedMultiplicity(format!(
                "kernel point {} appears more than once",
                p.alpha
            )));
        }
    }
    let one = c64::new(1.0, 0.0);
    Ok(Mat::from_fn(points.len(), points.len(), |i, j| {
        one / (one - points[i].alpha.conj() * points[j].alpha)
    }))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModelRegime {
    /// Span of the Szegő kernels at pairwise distinct points.
    Kernel { points: Vec<KernelPoint> },
    /// Span of `1, z, …, z^{exponent−1}`.
    Monomial { exponent: usize },
}

/// Exact representation of a one-variable model space.
#[derive(Debug, Clone)]
pub struct ExactModelSpace {
    variable_index: usize,
    regime: ModelRegime,
    gram: Mat<c64>,
    // Cholesky factor of the evaluation matrix E_il = S_l(α_i) = conj(G_il);
    // the orthonormal basis is e_j = Σ_l S_l (L^{-H})_{lj}, so e_j(α_i) = L_ij.
    chol: Mat<c64>,
    chol_inv: Mat<c64>,
}

impl ExactModelSpace {
    pub fn variable_index(&self) -> usize {
        self.variable_index
    }

    pub fn regime(&self) -> &ModelRegime {
        &self.regime
    }

    pub fn gram(&self) -> MatRef<'_, c64> {
        self.gram.as_ref()
    }

    pub fn dimension(&self) -> usize {
        self.gram.nrows()
    }

    /// Coordinates in the orthonormal basis of a function in `Q`, given its
    /// values at the kernel points (kernel regime) or its first Taylor
    /// coefficients (monomial regime).
    pub fn coordinates(&self, data: &[Complex]) -> Result<Vec<Complex>> {
        if data.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                found: data.len(),
            });
        }
        Ok(match self.regime {
            ModelRegime::Monomial { .. } => data.to_vec(),
            ModelRegime::Kernel { .. } => (0..data.len())
                .map(|j| (0..=j).map(|l| self.chol_inv[(j, l)] * data[l]).sum())
                .collect(),
        })
    }

    /// Taylor coefficients up to `cap` of the orthonormal basis vectors.
    pub fn basis_series(&self, cap: usize) -> Vec<Vec<Complex>> {
        let m = self.dimension();
        match &self.regime {
            ModelRegime::Monomial { .. } => (0..m)
                .map(|j| {
                    let mut s = vec![Complex::new(0.0, 0.0); cap + 1];
                    if j <= cap {
                        s[j] = Complex::new(1.0, 0.0);
                    }
                    s
                })
                .collect(),
            ModelRegime::Kernel { points } => (0..m)
                .map(|j| {
                    (0..=cap)
                        .map(|k| {
                            points
                                .iter()
                                .enumerate()
                                .map(|(l, p)| p.alpha.conj().powu(k as u32) * self.chol_inv[(j, l)].conj())
                                .sum()
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

fn condition_number(gram: &Mat<c64>) -> Result<f64> {
    let eig = gram
        .self_adjoint_eigenvalues(Side::Lower)
        .map_err(|e| Error::Numerical(format!("{e:?}")))?;
    let lo = eig.first().copied().unwrap_or(1.0);
    let hi = eig.last().copied().unwrap_or(1.0);
    if lo <= 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(hi / lo)
}

fn lower_inverse(l: MatRef<'_, c64>) -> Mat<c64> {
    let m = l.nrows();
    let mut inv = Mat::<c64>::zeros(m, m);
    for col in 0..m {
        for row in col..m {
            let mut acc = if row == col { c64::new(1.0, 0.0) } else { c64::new(0.0, 0.0) };
            for k in col..row {
                acc -= l[(row, k)] * inv[(k, col)];
            }
            inv[(row, col)] = acc / l[(row, row)];
        }
    }
    inv
}

/// Model space of a symbol depending on at most one variable, as a subspace
/// of the one-variable Hardy space of that variable.
pub fn exact_model_space(symbol: &InnerSymbol) -> Result<ExactModelSpace> {
    let mut factors = symbol.factors();
    let factor = factors.next();
    if factors.next().is_some() {
        return Err(Error::UnsupportedRegime(
            "exact model spaces need a symbol in a single variable".into(),
        ));
    }
    let Some(factor) = factor else {
        // Q of a constant is {0}
        return Ok(ExactModelSpace {
            variable_index: 0,
            regime: ModelRegime::Monomial { exponent: 0 },
            gram: Mat::zeros(0, 0),
            chol: Mat::zeros(0, 0),
            chol_inv: Mat::zeros(0, 0),
        });
    };
    let variable_index = factor.variable_index();
    let exponent = factor.monomial_exponent() as usize;
    if factor.zeros().is_empty() {
        return Ok(ExactModelSpace {
            variable_index,
            regime: ModelRegime::Monomial { exponent },
            gram: Mat::identity(exponent, exponent),
            chol: Mat::identity(exponent, exponent),
            chol_inv: Mat::identity(exponent, exponent),
        });
    }
    if exponent >= 2 {
        return Err(Error::UnsupportedRegime(format!(
            "monomial exponent {exponent} combined with Blaschke zeros"
        )));
    }
    if let Some(z) = factor.zeros().iter().find(|z| z.multiplicity() > 1) {
        return Err(Error::UnsupportedRegime(format!(
            "zero {} has multiplicity {}",
            z.value(),
            z.multiplicity()
        )));
    }
    let mut points = Vec::with_capacity(exponent + factor.zeros().len());
    if exponent == 1 {
        points.push(KernelPoint::new(Complex::new(0.0, 0.0))?);
    }
    for z in factor.zeros() {
        points.push(KernelPoint::new(z.value())?);
    }
    let gram = szego_gram(&points)?;
    let cond = condition_number(&gram)?;
    if !(cond <= MAX_GRAM_CONDITION) {
        return Err(Error::IllConditioned(cond));
    }
    let evaluation = Mat::from_fn(gram.nrows(), gram.ncols(), |i, j| gram[(i, j)].conj());
    let llt = evaluation
        .llt(Side::Lower)
        .map_err(|e| Error::Numerical(format!("{e:?}")))?;
    let chol = llt.L().to_owned();
    let chol_inv = lower_inverse(chol.as_ref());
    Ok(ExactModelSpace {
        variable_index,
        regime: ModelRegime::Kernel { points },
        gram,
        chol,
        chol_inv,
    })
}

/// Tensor product of one-variable model spaces on distinct variables.
#[derive(Debug, Clone)]
pub struct TensorModelSpace {
    components: Vec<ExactModelSpace>,
    gram: Mat<c64>,
}

impl TensorModelSpace {
    pub fn new(components: Vec<ExactModelSpace>) -> Result<Self> {
        for (i, c) in components.iter().enumerate() {
            if components[..i]
                .iter()
                .any(|d| d.variable_index == c.variable_index)
            {
                return Err(Error::NotSeparated(format!(
                    "two components act on variable {}",
                    c.variable_index
                )));
            }
        }
        let mut gram = Mat::<c64>::identity(1, 1);
        for c in &components {
            gram = kron(gram.as_ref(), c.gram.as_ref());
        }
        Ok(Self { components, gram })
    }

    pub fn components(&self) -> &[ExactModelSpace] {
        &self.components
    }

    pub fn gram(&self) -> MatRef<'_, c64> {
        self.gram.as_ref()
    }

    pub fn dimension(&self) -> usize {
        self.components.iter().map(|c| c.dimension()).product()
    }
}

fn kron(a: MatRef<'_, c64>, b: MatRef<'_, c64>) -> Mat<c64> {
    let (br, bc) = (b.nrows(), b.ncols());
    Mat::from_fn(a.nrows() * br, a.ncols() * bc, |i, j| {
        a[(i / br, j / bc)] * b[(i % br, j % bc)]
    })
}

/// Rank of `P_{Q(φ₁)} P_{Q(φ₂)}` for separated two-variable symbols.
#[derive(Debug, Clone)]
pub struct ProductRank {
    pub rank: usize,
    /// Basis of `Q(φ₁) ∩ Q(φ₂)`; absent when either model space is trivial.
    pub space: Option<TensorModelSpace>,
}

pub fn product_rank(phi1: &InnerSymbol, phi2: &InnerSymbol) -> Result<ProductRank> {
    if phi1.n() != phi2.n() {
        return Err(Error::DimensionMismatch {
            expected: phi1.n(),
            found: phi2.n(),
        });
    }
    if phi1.is_constant() || phi2.is_constant() {
        return Ok(ProductRank {
            rank: 0,
            space: None,
        });
    }
    if phi1.n() != 2 {
        return Err(Error::UnsupportedRegime(format!(
            "exact product ranks are computed for two variables, not {}",
            phi1.n()
        )));
    }
    if !phi1.is_separated(phi2)? {
        return Err(Error::NotSeparated(
            "the symbols share a variable; use the numeric audit".into(),
        ));
    }
    let mut first = exact_model_space(phi1)?;
    let mut second = exact_model_space(phi2)?;
    if first.variable_index > second.variable_index {
        std::mem::swap(&mut first, &mut second);
    }
    let space = TensorModelSpace::new(vec![first, second])?;
    Ok(ProductRank {
        rank: space.dimension(),
        space: Some(space),
    })
}

/// Matrix of the truncated Toeplitz operator `T^{φ₁}_{φ₂}` in the
/// orthonormal basis of `Q(φ₁)`, for one-variable `φ₁` in an exact regime.
pub fn exact_tto(phi1: &InnerSymbol, phi2: &InnerSymbol) -> Result<Mat<c64>> {
    if phi1.n() != phi2.n() {
        return Err(Error::DimensionMismatch {
            expected: phi1.n(),
            found: phi2.n(),
        });
    }
    if phi1.n() != 1 {
        return Err(Error::UnsupportedRegime(
            "exact truncated Toeplitz matrices need a one-variable model space".into(),
        ));
    }
    let space = exact_model_space(phi1)?;
    let m = space.dimension();
    match &space.regime {
        ModelRegime::Monomial { .. } => {
            let series = phi2.variable_series(0, m);
            let c = phi2.constant();
            Ok(Mat::from_fn(m, m, |i, j| {
                if i >= j {
                    c * series[i - j]
                } else {
                    c64::new(0.0, 0.0)
                }
            }))
        }
        ModelRegime::Kernel { points } => {
            // T e_j has the values φ₂(α_i)·e_j(α_i) at the kernel points
            let values: Vec<Complex> = points
                .iter()
                .map(|p| phi2.evaluate(&[p.alpha]))
                .collect::<Result<_>>()?;
            let scaled = Mat::from_fn(m, m, |i, j| values[i] * space.chol[(i, j)]);
            Ok(&space.chol_inv * &scaled)
        }
    }
}

/// `|Σ_{k≤cap} c_k α^k − value|`, the defect of the reproducing identity
/// `⟨f, S(·,α)⟩ = f(α)` computed from a truncated series.
pub fn reproducing_check(
    coefficients: &[Complex],
    point: KernelPoint,
    cap: usize,
    value: Complex,
) -> f64 {
    let mut power = Complex::new(1.0, 0.0);
    let mut sum = Complex::new(0.0, 0.0);
    for c in coefficients.iter().take(cap + 1) {
        sum += c * power;
        power *= point.alpha;
    }
    (sum - value).norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::truncated::{tto_numeric, BoxBasis};
    use std::sync::Arc;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn pt(re: f64, im: f64) -> KernelPoint {
        KernelPoint::new(c(re, im)).unwrap()
    }

    fn b1(alpha: f64) -> InnerSymbol {
        InnerSymbol::blaschke(1, 0, c(alpha, 0.0)).unwrap()
    }

    fn z1(k: u32) -> InnerSymbol {
        InnerSymbol::monomial(1, 0, k).unwrap()
    }

    fn inner(a: &[Complex], b: &[Complex]) -> Complex {
        a.iter().zip(b).map(|(x, y)| x * y.conj()).sum()
    }

    fn kernel_series(alpha: Complex, cap: usize) -> Vec<Complex> {
        (0..=cap).map(|k| alpha.conj().powu(k as u32)).collect()
    }

    #[test]
    fn kernel_point_validation() {
        assert!(KernelPoint::new(c(1.0, 0.0)).is_err());
        assert!(KernelPoint::new(c(f64::NAN, 0.0)).is_err());
        assert_eq!(pt(0.0, 0.0).kernel_at(c(0.7, 0.1)), c(1.0, 0.0));
    }

    #[test]
    fn gram_examples() {
        let g = szego_gram(&[pt(0.0, 0.0)]).unwrap();
        assert_eq!(g[(0, 0)], c(1.0, 0.0));
        let g = szego_gram(&[pt(0.0, 0.0), pt(0.5, 0.0)]).unwrap();
        let expected = [[1.0, 1.0], [1.0, 4.0 / 3.0]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((g[(i, j)] - c(expected[i][j], 0.0)).norm() < 1e-15);
            }
        }
        assert!(matches!(
            szego_gram(&[pt(0.5, 0.0), pt(0.5, 0.0)]),
            Err(Error::UnsupportedMultiplicity(_))
        ));
    }

    #[test]
    fn gram_matches_series_inner_products() {
        let points = [pt(0.3, -0.2), pt(-0.5, 0.1), pt(0.0, 0.6)];
        let g = szego_gram(&points).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let s = inner(
                    &kernel_series(points[i].alpha, 200),
                    &kernel_series(points[j].alpha, 200),
                );
                assert!((g[(i, j)] - s).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn model_space_regimes() {
        let s = exact_model_space(&z1(3)).unwrap();
        assert_eq!(s.regime(), &ModelRegime::Monomial { exponent: 3 });
        assert_eq!(s.dimension(), 3);

        let s = exact_model_space(&z1(1).multiply(&b1(0.5)).unwrap()).unwrap();
        match s.regime() {
            ModelRegime::Kernel { points } => {
                let alphas: Vec<_> = points.iter().map(|p| p.alpha()).collect();
                assert_eq!(alphas, vec![c(0.0, 0.0), c(0.5, 0.0)]);
            }
            other => panic!("unexpected regime {other:?}"),
        }
        assert_eq!(s.dimension(), 2);

        let sq = b1(0.5).multiply(&b1(0.5)).unwrap();
        assert!(matches!(exact_model_space(&sq), Err(Error::UnsupportedRegime(_))));
        let mixed = z1(2).multiply(&b1(0.5)).unwrap();
        assert!(matches!(exact_model_space(&mixed), Err(Error::UnsupportedRegime(_))));
        assert_eq!(exact_model_space(&InnerSymbol::one(1)).unwrap().dimension(), 0);

        let two = InnerSymbol::blaschke(2, 1, c(0.2, 0.0)).unwrap();
        assert_eq!(exact_model_space(&two).unwrap().variable_index(), 1);
    }

    #[test]
    fn clustered_kernels_are_rejected() {
        let s = InnerSymbol::blaschke_product(1, 0, &[c(0.5, 0.0), c(0.5 + 1e-9, 0.0)]).unwrap();
        assert!(matches!(exact_model_space(&s), Err(Error::IllConditioned(_))));
    }

    #[test]
    fn basis_is_orthonormal() {
        let s = InnerSymbol::blaschke_product(1, 0, &[c(0.4, 0.1), c(-0.3, 0.5), c(0.0, -0.6)])
            .unwrap()
            .multiply(&z1(1))
            .unwrap();
        let space = exact_model_space(&s).unwrap();
        let basis = space.basis_series(300);
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((inner(&basis[i], &basis[j]) - c(expected, 0.0)).norm() < 1e-12);
            }
            // each basis vector lies in Q: orthogonal to s·z^k
            let series = s.variable_series(0, 300);
            for k in 0..5 {
                let mut shifted = vec![c(0.0, 0.0); 301];
                shifted[k..].copy_from_slice(&series[..301 - k]);
                assert!(inner(&basis[i], &shifted).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn product_rank_examples() {
        let z = |v, k| InnerSymbol::monomial(2, v, k).unwrap();
        assert_eq!(product_rank(&z(0, 1), &z(1, 1)).unwrap().rank, 1);
        let phi1 = z(0, 1)
            .multiply(&InnerSymbol::blaschke(2, 0, c(0.5, 0.0)).unwrap())
            .unwrap();
        let r = product_rank(&phi1, &z(1, 3)).unwrap();
        assert_eq!(r.rank, 6);
        let space = r.space.unwrap();
        assert_eq!(space.dimension(), 6);
        let eig = space.gram().to_owned().self_adjoint_eigenvalues(Side::Lower).unwrap();
        assert!(eig[0] > 0.0);
        assert_eq!(product_rank(&InnerSymbol::one(2), &z(1, 3)).unwrap().rank, 0);
        assert!(matches!(product_rank(&z(0, 1), &phi1), Err(Error::NotSeparated(_))));
    }

    #[test]
    fn exact_tto_examples() {
        let t = exact_tto(&z1(2), &z1(1)).unwrap();
        let expected = [[0.0, 0.0], [1.0, 0.0]];
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(t[(i, j)], c(expected[i][j], 0.0));
            }
        }
        let ttt = &(&t * t.adjoint()) * &t;
        assert_eq!(ttt, t);

        let phi1 = z1(1).multiply(&b1(0.5)).unwrap();
        let t = exact_tto(&phi1, &z1(1)).unwrap();
        let mut eig: Vec<Complex> = t.adjoint().to_owned().eigenvalues().unwrap();
        eig.sort_by(|a, b| a.re.total_cmp(&b.re));
        assert!(eig[0].norm() < 1e-14);
        assert!((eig[1] - c(0.5, 0.0)).norm() < 1e-14);

        let t = exact_tto(&phi1, &phi1).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!(t[(i, j)].norm() < 1e-14);
            }
        }
        let two = InnerSymbol::monomial(2, 0, 1).unwrap();
        assert!(matches!(exact_tto(&two, &two), Err(Error::UnsupportedRegime(_))));
    }

    // compare against the truncated matrix compressed to the exact basis
    fn check_against_numeric(phi1: &InnerSymbol, phi2: &InnerSymbol, cap: usize, tol: f64) {
        let exact = exact_tto(phi1, phi2).unwrap();
        let basis = Arc::new(BoxBasis::new(1, cap).unwrap());
        let numeric = tto_numeric(phi1, phi2, &basis).unwrap();
        let e = exact_model_space(phi1).unwrap().basis_series(cap);
        let m = e.len();
        for i in 0..m {
            for j in 0..m {
                let mut te = vec![c(0.0, 0.0); cap + 1];
                for r in 0..=cap {
                    for k in 0..=cap {
                        te[r] += numeric.matrix()[(r, k)] * e[j][k];
                    }
                }
                let v = inner(&te, &e[i]);
                assert!((v - exact[(i, j)]).norm() < tol, "({i},{j}): {v} vs {}", exact[(i, j)]);
            }
        }
    }

    #[test]
    fn exact_tto_matches_numeric_compression() {
        check_against_numeric(&z1(1).multiply(&b1(0.5)).unwrap(), &z1(1), 48, 1e-10);
        let phi1 = InnerSymbol::blaschke_product(1, 0, &[c(0.3, 0.3), c(-0.5, 0.0)]).unwrap();
        check_against_numeric(&phi1, &b1(0.4), 60, 1e-10);
        check_against_numeric(&z1(4), &b1(-0.6), 10, 1e-15);
    }

    #[test]
    fn monomial_regime_is_exact_truncation() {
        let basis = Arc::new(BoxBasis::new(1, 5).unwrap());
        let phi2 = b1(0.3).multiply(&z1(1)).unwrap();
        let numeric = tto_numeric(&z1(3), &phi2, &basis).unwrap();
        let exact = exact_tto(&z1(3), &phi2).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!((numeric.matrix()[(i, j)] - exact[(i, j)]).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn eigen_relation() {
        // ⟨φ·S_i, S_j⟩ = φ(α_j)·G_ij
        let points = [pt(0.3, 0.2), pt(-0.4, 0.0), pt(0.1, -0.5)];
        let g = szego_gram(&points).unwrap();
        let phi = InnerSymbol::blaschke_product(1, 0, &[c(0.5, 0.0), c(-0.2, 0.3)])
            .unwrap()
            .multiply(&z1(1))
            .unwrap();
        let phi_series = phi.variable_series(0, 300);
        for i in 0..3 {
            let product = crate::symbol::convolve_truncated(
                &phi_series,
                &kernel_series(points[i].alpha, 300),
                300,
            );
            for j in 0..3 {
                let lhs = phi.constant() * inner(&product, &kernel_series(points[j].alpha, 300));
                let rhs = phi.evaluate(&[points[j].alpha]).unwrap() * g[(i, j)];
                assert!((lhs - rhs).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn coordinates_round_trip() {
        let phi1 = InnerSymbol::blaschke_product(1, 0, &[c(0.3, 0.3), c(-0.5, 0.0)]).unwrap();
        let space = exact_model_space(&phi1).unwrap();
        let e = space.basis_series(200);
        let ModelRegime::Kernel { points } = space.regime() else { unreachable!() };
        for (j, ej) in e.iter().enumerate() {
            let values: Vec<Complex> = points
                .iter()
                .map(|p| ej.iter().enumerate().map(|(k, c)| c * p.alpha.powu(k as u32)).sum())
                .collect();
            let x = space.coordinates(&values).unwrap();
            for (i, xi) in x.iter().enumerate() {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((xi - c(expected, 0.0)).norm() < 1e-12);
            }
        }
        assert!(space.coordinates(&[c(1.0, 0.0)]).is_err());
    }

    #[test]
    fn reproducing_examples() {
        let one = [c(1.0, 0.0)];
        assert_eq!(reproducing_check(&one, pt(0.4, 0.2), 0, c(1.0, 0.0)), 0.0);
        let b = b1(0.5);
        let series = b.variable_series(0, 60);
        let value = (c(0.3, 0.0) - c(0.5, 0.0)) / (c(1.0, 0.0) - c(0.15, 0.0));
        assert!(reproducing_check(&series, pt(0.3, 0.0), 60, value) < 1e-12);
        let z3 = z1(3).variable_series(0, 5);
        assert_eq!(reproducing_check(&z3, pt(0.0, 0.0), 5, c(0.0, 0.0)), 0.0);
    }
}
