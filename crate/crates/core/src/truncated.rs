//! Dense matrices of Hardy-space operators on a box-truncated monomial basis.
//!
//! Multiplication by an analytic symbol is lower triangular with respect to
//! the componentwise order on multi-indices, so the box compression of
//! `M_φ M_φ*` is exact; products of compressions are not, and residuals are
//! measured only on an interior sub-box to keep truncation error out.

use std::fmt;
use std::sync::Arc;

use faer::{c64, Mat, MatRef};

use crate::error::{Error, Result};
use crate::symbol::InnerSymbol;

/// Multi-indices `[0..cap]ⁿ` in graded-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxBasis {
    n: usize,
    cap: usize,
    // flattened multi-indices, `n` entries per basis element
    indices: Vec<usize>,
    // row-major code of a multi-index -> position in `indices`
    positions: Vec<usize>,
}

impl BoxBasis {
    pub fn new(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Config("a basis needs at least one variable".into()));
        }
        let side = cap + 1;
        let size = side
            .checked_pow(n as u32)
            .ok_or_else(|| Error::Config("basis size overflows".into()))?;
        let mut order: Vec<(usize, usize)> = (0..size)
            .map(|code| {
                let mut rest = code;
                let mut degree = 0;
                for _ in 0..n {
                    degree += rest % side;
                    rest /= side;
                }
                (degree, code)
            })
            .collect();
        // row-major codes already compare lexicographically
        order.sort_unstable();
        let mut indices = vec![0; size * n];
        let mut positions = vec![0; size];
        for (pos, &(_, code)) in order.iter().enumerate() {
            positions[code] = pos;
            let mut rest = code;
            for v in (0..n).rev() {
                indices[pos * n + v] = rest % side;
                rest /= side;
            }
        }
        Ok(Self {
            n,
            cap,
            indices,
            positions,
        })
    }

    /// Like [`BoxBasis::new`] but refuses bases larger than `limit`.
    pub fn with_limit(n: usize, cap: usize, limit: usize) -> Result<Self> {
        let size = (cap + 1).checked_pow(n as u32).unwrap_or(usize::MAX);
        if size > limit {
            return Err(Error::ResourceLimit { size, limit });
        }
        Self::new(n, cap)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn size(&self) -> usize {
        self.positions.len()
    }

    pub fn multi_index(&self, pos: usize) -> &[usize] {
        &self.indices[pos * self.n..(pos + 1) * self.n]
    }

    pub fn position(&self, index: &[usize]) -> Option<usize> {
        if index.len() != self.n || index.iter().any(|&k| k > self.cap) {
            return None;
        }
        let side = self.cap + 1;
        Some(self.positions[index.iter().fold(0, |acc, &k| acc * side + k)])
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> {
        self.indices.chunks(self.n)
    }

    /// Positions whose every coordinate is at most `cap − margin`.
    pub fn interior_positions(&self, mask: &InteriorMask) -> Vec<usize> {
        let limit = self.cap.saturating_sub(mask.margin);
        (0..self.size())
            .filter(|&p| self.multi_index(p).iter().all(|&k| k <= limit))
            .collect()
    }
}

/// Selects the sub-box `[0..D−B]ⁿ` on which residuals are measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InteriorMask {
    margin: usize,
}

impl InteriorMask {
    pub fn new(margin: usize, cap: usize) -> Result<Self> {
        if margin > 0 && margin >= cap {
            return Err(Error::Config(format!(
                "interior margin {margin} must be smaller than the degree cap {cap}"
            )));
        }
        Ok(Self { margin })
    }

    /// Default margin `⌈D/4⌉`, clamped so the interior stays nonempty.
    pub fn default_for(cap: usize) -> Self {
        Self {
            margin: cap.div_ceil(4).min(cap.saturating_sub(1)),
        }
    }

    pub fn margin(&self) -> usize {
        self.margin
    }
}

/// How an operator was built, kept for reports.
#[derive(Debug, Clone, PartialEq)]
pub enum Recipe {
    Multiplication(InnerSymbol),
    Adjoint(Box<Recipe>),
    RangeProjection(InnerSymbol),
    ModelProjection(InnerSymbol),
    TruncatedToeplitz {
        model: InnerSymbol,
        symbol: InnerSymbol,
    },
    Product(Box<Recipe>, Box<Recipe>),
    Matrix,
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Multiplication(s) => write!(f, "M[{s}]"),
            Recipe::Adjoint(r) => write!(f, "({r})*"),
            Recipe::RangeProjection(s) => write!(f, "P[{s}·H2]"),
            Recipe::ModelProjection(s) => write!(f, "P[Q({s})]"),
            Recipe::TruncatedToeplitz { model, symbol } => write!(f, "T[Q({model}); {symbol}]"),
            Recipe::Product(a, b) => write!(f, "{a}·{b}"),
            Recipe::Matrix => write!(f, "matrix"),
        }
    }
}

/// A dense complex matrix acting on a [`BoxBasis`].
#[derive(Debug, Clone)]
pub struct TruncatedOperator {
    basis: Arc<BoxBasis>,
    matrix: Mat<c64>,
    recipe: Recipe,
}

impl TruncatedOperator {
    pub fn from_matrix(basis: Arc<BoxBasis>, matrix: Mat<c64>) -> Result<Self> {
        if matrix.nrows() != basis.size() || matrix.ncols() != basis.size() {
            return Err(Error::Config(format!(
                "matrix is {}x{} but the basis has {} elements",
                matrix.nrows(),
                matrix.ncols(),
                basis.size()
            )));
        }
        Ok(Self {
            basis,
            matrix,
            recipe: Recipe::Matrix,
        })
    }

    pub fn identity(basis: Arc<BoxBasis>) -> Self {
        let size = basis.size();
        Self {
            basis,
            matrix: Mat::identity(size, size),
            recipe: Recipe::Matrix,
        }
    }

    pub fn basis(&self) -> &Arc<BoxBasis> {
        &self.basis
    }

    pub fn matrix(&self) -> MatRef<'_, c64> {
        self.matrix.as_ref()
    }

    pub fn into_matrix(self) -> Mat<c64> {
        self.matrix
    }

    pub fn recipe(&self) -> &Recipe {
        &self.recipe
    }

    pub fn entry(&self, row: &[usize], col: &[usize]) -> Option<c64> {
        Some(self.matrix[(self.basis.position(row)?, self.basis.position(col)?)])
    }

    fn check_basis(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.basis, &other.basis) || self.basis == other.basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch)
        }
    }

    pub fn adjoint(&self) -> Self {
        Self {
            basis: self.basis.clone(),
            matrix: self.matrix.adjoint().to_owned(),
            recipe: Recipe::Adjoint(Box::new(self.recipe.clone())),
        }
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_basis(other)?;
        Ok(Self {
            basis: self.basis.clone(),
            matrix: &self.matrix * &other.matrix,
            recipe: Recipe::Product(Box::new(self.recipe.clone()), Box::new(other.recipe.clone())),
        })
    }

    /// Frobenius norm of the interior block of `self − other`.
    pub fn interior_distance(&self, other: &Self, mask: &InteriorMask) -> Result<f64> {
        self.check_basis(other)?;
        let rows = self.basis.interior_positions(mask);
        let diff = &gather(self.matrix(), &rows, &rows) - &gather(other.matrix(), &rows, &rows);
        Ok(frobenius(diff.as_ref()))
    }

    pub fn singular_values(&self) -> Result<Vec<f64>> {
        self.matrix
            .singular_values()
            .map_err(|e| Error::Numerical(format!("{e:?}")))
    }
}

/// Submatrix on the given rows and columns.
pub fn gather(m: MatRef<'_, c64>, rows: &[usize], cols: &[usize]) -> Mat<c64> {
    Mat::from_fn(rows.len(), cols.len(), |i, j| m[(rows[i], cols[j])])
}

fn gather_rows(m: MatRef<'_, c64>, rows: &[usize]) -> Mat<c64> {
    Mat::from_fn(rows.len(), m.ncols(), |i, j| m[(rows[i], j)])
}

fn gather_cols(m: MatRef<'_, c64>, cols: &[usize]) -> Mat<c64> {
    Mat::from_fn(m.nrows(), cols.len(), |i, j| m[(i, cols[j])])
}

pub fn frobenius(m: MatRef<'_, c64>) -> f64 {
    let mut sum = 0.0;
    for j in 0..m.ncols() {
        for i in 0..m.nrows() {
            sum += m[(i, j)].norm_sqr();
        }
    }
    sum.sqrt()
}

fn check_dims(symbol: &InnerSymbol, basis: &BoxBasis) -> Result<()> {
    if symbol.n() != basis.n() {
        return Err(Error::DimensionMismatch {
            expected: basis.n(),
            found: symbol.n(),
        });
    }
    Ok(())
}

/// Matrix of `f ↦ truncate(φ·f)` on the box.
pub fn mult_operator(symbol: &InnerSymbol, basis: &Arc<BoxBasis>) -> Result<TruncatedOperator> {
    check_dims(symbol, basis)?;
    let cap = basis.cap();
    let series: Vec<Vec<c64>> = (0..basis.n())
        .map(|v| symbol.variable_series(v, cap))
        .collect();
    let constant = symbol.constant();
    let size = basis.size();
    let matrix = Mat::from_fn(size, size, |row, col| {
        let i = basis.multi_index(row);
        let k = basis.multi_index(col);
        let mut value = constant;
        for v in 0..i.len() {
            if i[v] < k[v] {
                return c64::new(0.0, 0.0);
            }
            value *= series[v][i[v] - k[v]];
        }
        value
    });
    Ok(TruncatedOperator {
        basis: basis.clone(),
        matrix,
        recipe: Recipe::Multiplication(symbol.clone()),
    })
}

fn hermitian_part(m: &Mat<c64>) -> Mat<c64> {
    Mat::from_fn(m.nrows(), m.ncols(), |i, j| (m[(i, j)] + m[(j, i)].conj()) * 0.5)
}

/// `M_φ M_φ*` on the box, the projection onto `φH²`.
pub fn range_projection(symbol: &InnerSymbol, basis: &Arc<BoxBasis>) -> Result<TruncatedOperator> {
    let m = mult_operator(symbol, basis)?;
    let product = &m.matrix * m.matrix.adjoint();
    Ok(TruncatedOperator {
        basis: basis.clone(),
        matrix: hermitian_part(&product),
        recipe: Recipe::RangeProjection(symbol.clone()),
    })
}

/// `I − M_φ M_φ*`, the projection onto the model space `Q_φ`.
pub fn model_projection(symbol: &InnerSymbol, basis: &Arc<BoxBasis>) -> Result<TruncatedOperator> {
    let p = range_projection(symbol, basis)?;
    Ok(model_from_range(&p, symbol))
}

/// `I − P` for an already computed range projection of `symbol`.
pub fn model_from_range(range: &TruncatedOperator, symbol: &InnerSymbol) -> TruncatedOperator {
    let size = range.basis.size();
    let matrix = Mat::from_fn(size, size, |i, j| {
        let id = if i == j { 1.0 } else { 0.0 };
        c64::new(id, 0.0) - range.matrix[(i, j)]
    });
    TruncatedOperator {
        basis: range.basis.clone(),
        matrix,
        recipe: Recipe::ModelProjection(symbol.clone()),
    }
}

/// `P_Q(φ₁) · M_φ₂ · P_Q(φ₁)`, the truncated Toeplitz operator padded by zero
/// off the model space.
pub fn tto_numeric(
    model: &InnerSymbol,
    symbol: &InnerSymbol,
    basis: &Arc<BoxBasis>,
) -> Result<TruncatedOperator> {
    if model.n() != symbol.n() {
        return Err(Error::DimensionMismatch {
            expected: model.n(),
            found: symbol.n(),
        });
    }
    let q = model_projection(model, basis)?;
    let m = mult_operator(symbol, basis)?;
    compress(&q, &m)
}

/// `Q·M·Q` from precomputed factors; `q` must be a model projection and `m`
/// a multiplication operator on the same basis.
pub fn compress(q: &TruncatedOperator, m: &TruncatedOperator) -> Result<TruncatedOperator> {
    q.check_basis(m)?;
    let (Recipe::ModelProjection(model), Recipe::Multiplication(symbol)) = (&q.recipe, &m.recipe)
    else {
        return Err(Error::Config("compress expects a model projection and a multiplication".into()));
    };
    let matrix = &(&q.matrix * &m.matrix) * &q.matrix;
    Ok(TruncatedOperator {
        basis: q.basis.clone(),
        matrix,
        recipe: Recipe::TruncatedToeplitz {
            model: model.clone(),
            symbol: symbol.clone(),
        },
    })
}

/// Interior Frobenius norm of `AB − BA`.
pub fn commutator_residual(
    a: &TruncatedOperator,
    b: &TruncatedOperator,
    mask: &InteriorMask,
) -> Result<f64> {
    a.check_basis(b)?;
    let rows = a.basis.interior_positions(mask);
    let ab = &gather_rows(a.matrix(), &rows) * &gather_cols(b.matrix(), &rows);
    let ba = &gather_rows(b.matrix(), &rows) * &gather_cols(a.matrix(), &rows);
    Ok(frobenius((&ab - &ba).as_ref()))
}

/// Interior Frobenius norm of `A*B − BA*`.
pub fn adjoint_commutator_residual(
    a: &TruncatedOperator,
    b: &TruncatedOperator,
    mask: &InteriorMask,
) -> Result<f64> {
    a.check_basis(b)?;
    let rows = a.basis.interior_positions(mask);
    let a_star_b = &gather_cols(a.matrix(), &rows).adjoint() * &gather_cols(b.matrix(), &rows);
    let b_a_star = &gather_rows(b.matrix(), &rows) * gather_rows(a.matrix(), &rows).adjoint();
    Ok(frobenius((&a_star_b - &b_a_star).as_ref()))
}

/// Interior Frobenius norm of `TT*T − T`.
pub fn partial_isometry_residual(t: &TruncatedOperator, mask: &InteriorMask) -> f64 {
    let rows = t.basis.interior_positions(mask);
    let cols_block = gather_cols(t.matrix(), &rows);
    let t_star_t = t.matrix.adjoint() * &cols_block;
    let ttt = &gather_rows(t.matrix(), &rows) * &t_star_t;
    let own = gather(t.matrix(), &rows, &rows);
    frobenius((&ttt - &own).as_ref())
}

/// Interior Frobenius norm of `T*T − E`, where `E` is the projection onto
/// the intended initial space (the identity for a plain isometry).
pub fn isometry_residual(
    t: &TruncatedOperator,
    initial: &TruncatedOperator,
    mask: &InteriorMask,
) -> Result<f64> {
    t.check_basis(initial)?;
    let rows = t.basis.interior_positions(mask);
    let cols_block = gather_cols(t.matrix(), &rows);
    let gram = cols_block.adjoint() * &cols_block;
    let own = gather(initial.matrix(), &rows, &rows);
    Ok(frobenius((&gram - &own).as_ref()))
}

/// Interior Frobenius norm of `T*T − Q` for `T = Q·M·Q`, evaluated as
/// `−Q M* P M Q` with `P = I − Q`.
///
/// The two agree because `M` is an isometry, but the second form avoids
/// the mass that `M` pushes out of the box: on interior columns `M Q` is
/// exact and `P` barely couples the box to its outside.
pub fn isometry_defect(
    range: &TruncatedOperator,
    mult: &TruncatedOperator,
    model: &TruncatedOperator,
    mask: &InteriorMask,
) -> Result<f64> {
    range.check_basis(mult)?;
    range.check_basis(model)?;
    let cols = range.basis.interior_positions(mask);
    let mq = &mult.matrix * &gather_cols(model.matrix(), &cols);
    let pmq = &range.matrix * &mq;
    let defect = pmq.adjoint() * &pmq;
    Ok(frobenius(defect.as_ref()))
}

/// Interior Frobenius norm of `TT*T − T` for `T = Q·M·Q`, evaluated as
/// `−T X*X` with `X = P M Q`, which follows from `T*T = Q − X*X`.
pub fn partial_isometry_defect(
    range: &TruncatedOperator,
    mult: &TruncatedOperator,
    model: &TruncatedOperator,
    mask: &InteriorMask,
) -> Result<f64> {
    range.check_basis(mult)?;
    range.check_basis(model)?;
    let rows = range.basis.interior_positions(mask);
    let mq = &mult.matrix * &model.matrix;
    let x = &range.matrix * &mq;
    let xx = x.adjoint() * gather_cols(x.as_ref(), &rows);
    // rows of T = Q M Q on the interior
    let t_rows = &(&gather_rows(model.matrix(), &rows) * &mult.matrix) * &model.matrix;
    let product = &t_rows * &xx;
    Ok(frobenius(product.as_ref()))
}

// ---------------------------------------------------------------------------
// Tail bounds

// Relative inflation absorbing floating-point rounding in the bound itself.
const TAIL_SLACK: f64 = 1e-10;

#[derive(Clone)]
struct TailProfile {
    // l2[d] bounds the ℓ² norm of coefficients beyond degree d
    l2: Vec<f64>,
    // l1[d] bounds the ℓ¹ norm of coefficients beyond degree d
    l1: Vec<f64>,
    // bound on the full ℓ¹ norm
    l1_total: f64,
}

impl TailProfile {
    fn unit() -> Self {
        Self::monomial(0, 0)
    }

    fn monomial(exponent: usize, cap: usize) -> Self {
        let tail = |d: usize| if d >= exponent { 0.0 } else { 1.0 };
        Self {
            l2: (0..=cap).map(tail).collect(),
            l1: (0..=cap).map(tail).collect(),
            l1_total: 1.0,
        }
    }

    fn blaschke(modulus: f64, cap: usize) -> Self {
        let r = modulus;
        Self {
            l2: (0..=cap)
                .map(|d| (1.0 - r * r).sqrt() * r.powi(d as i32))
                .collect(),
            l1: (0..=cap).map(|d| (1.0 + r) * r.powi(d as i32)).collect(),
            l1_total: 1.0 + 2.0 * r,
        }
    }

    fn at(values: &[f64], d: usize) -> f64 {
        values.get(d).copied().unwrap_or(0.0)
    }

    // Splitting g = g_≤d + g_>d and h likewise at D − d:
    //   ‖(gh)_>D‖₂ ≤ ‖g_>d‖₂ + (1 + ‖g_>d‖₁)·‖h_>D−d‖₂
    // because |g| = |h| = 1 on the torus, and
    //   ‖(gh)_>D‖₁ ≤ ‖g_>d‖₁·‖h‖₁ + ‖g‖₁·‖h_>D−d‖₁.
    fn combine(&self, other: &Self, cap: usize) -> Self {
        let mut l2 = Vec::with_capacity(cap + 1);
        let mut l1 = Vec::with_capacity(cap + 1);
        for total in 0..=cap {
            let mut best2 = f64::INFINITY;
            let mut best1 = f64::INFINITY;
            for d in 0..=total {
                let g2 = Self::at(&self.l2, d);
                let g1 = Self::at(&self.l1, d);
                let h2 = Self::at(&other.l2, total - d);
                let h1 = Self::at(&other.l1, total - d);
                best2 = best2.min(g2 + (1.0 + g1) * h2);
                best1 = best1.min(g1 * other.l1_total + self.l1_total * h1);
            }
            l2.push(best2.min(1.0));
            l1.push(best1);
        }
        Self {
            l2,
            l1,
            l1_total: self.l1_total * other.l1_total,
        }
    }
}

/// Certified upper bound on the ℓ² norm of the Taylor coefficients of the
/// symbol lying outside the box `[0..cap]ⁿ`.
pub fn tail_bound(symbol: &InnerSymbol, cap: usize) -> f64 {
    let mut mass = 0.0;
    for factor in symbol.factors() {
        let mut profile = TailProfile::unit();
        if factor.monomial_exponent() > 0 {
            profile = TailProfile::monomial(factor.monomial_exponent() as usize, cap);
        }
        for zero in factor.zeros() {
            let single = TailProfile::blaschke(zero.value().norm(), cap);
            for _ in 0..zero.multiplicity() {
                profile = profile.combine(&single, cap);
            }
        }
        let t = TailProfile::at(&profile.l2, cap);
        mass += t * t;
    }
    // Outside-box mass is 1 − ∏(1 − τᵥ²) ≤ Σ τᵥ² for separable symbols.
    mass.sqrt().min(1.0) * (1.0 + TAIL_SLACK)
}
