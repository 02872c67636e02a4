//! Seeded random symbols for property tests and audit campaigns.
//!
//! Zeros are drawn from a fixed palette of eight points (moduli 0.3 and 0.6
//! on the four axis directions). Distinct palette points are far enough
//! apart that non-commuting pairs never look numerically commuting.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::symbol::{Complex, DiskZero, InnerSymbol, VariableFactor};

pub const PALETTE_RADII: [f64; 2] = [0.3, 0.6];

/// Largest number of zeros (origin included) per variable.
pub const MAX_DEGREE: u32 = 3;

fn degree(s: &InnerSymbol, var: usize) -> u32 {
    s.blaschke_degree().per_variable[var]
}

/// The eight palette zeros.
pub fn palette() -> Vec<Complex> {
    let mut points = Vec::with_capacity(8);
    for r in PALETTE_RADII {
        // exact axis points, no cos/sin rounding
        points.extend([
            Complex::new(r, 0.0),
            Complex::new(0.0, r),
            Complex::new(-r, 0.0),
            Complex::new(0.0, -r),
        ]);
    }
    points
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    /// Two independent draws.
    Random,
    /// Commuting by construction: a divisibility pair in one variable, a
    /// common factor times separated cofactors otherwise.
    Structured,
    /// Separated nonconstant symbols.
    Separated,
}

/// Deterministic symbol generator.
pub struct SymbolSampler {
    rng: ChaCha8Rng,
    palette: Vec<Complex>,
}

impl SymbolSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            palette: palette(),
        }
    }

    fn phase(&mut self) -> Complex {
        if self.rng.random_bool(0.5) {
            Complex::new(1.0, 0.0)
        } else {
            Complex::from_polar(1.0, self.rng.random_range(0.0..2.0 * PI))
        }
    }

    /// Exponent 0 or 1 and up to two palette zeros, never trivial, with
    /// total degree at most `budget` (which must be positive).
    fn factor(&mut self, var: usize, budget: u32) -> VariableFactor {
        let exponent = self.rng.random_range(0..=1u32);
        let lo = if exponent == 0 { 1 } else { 0 };
        let hi = (budget - exponent).min(2).max(lo);
        let count = self.rng.random_range(lo..=hi);
        let zeros = (0..count)
            .map(|_| {
                let alpha = self.palette[self.rng.random_range(0..self.palette.len())];
                DiskZero::simple(alpha).expect("palette points lie in the disc")
            })
            .collect::<Vec<_>>();
        VariableFactor::new(var, exponent, zeros)
    }

    fn symbol_with_budget(&mut self, n: usize, budget: u32) -> InnerSymbol {
        let mut factors = Vec::new();
        for var in 0..n {
            if n == 1 || self.rng.random_bool(0.5) {
                factors.push(self.factor(var, budget));
            }
        }
        if factors.is_empty() {
            let var = self.rng.random_range(0..n);
            factors.push(self.factor(var, budget));
        }
        let phase = self.phase();
        InnerSymbol::new(n, phase, factors).expect("valid symbol")
    }

    /// Random nonconstant symbol in `n` variables; in several variables
    /// each one is present with probability one half.
    pub fn symbol(&mut self, n: usize) -> InnerSymbol {
        self.symbol_with_budget(n, MAX_DEGREE)
    }

    /// Nonconstant symbol depending only on `var`.
    pub fn single_variable(&mut self, n: usize, var: usize) -> InnerSymbol {
        self.single_variable_with_budget(n, var, MAX_DEGREE)
    }

    fn single_variable_with_budget(&mut self, n: usize, var: usize, budget: u32) -> InnerSymbol {
        let factor = self.factor(var, budget);
        let phase = self.phase();
        InnerSymbol::new(n, phase, [factor]).expect("valid symbol")
    }

    /// Two nonconstant symbols on disjoint variables (`n ≥ 2`).
    pub fn separated_pair(&mut self, n: usize) -> (InnerSymbol, InnerSymbol) {
        assert!(n >= 2, "separated nonconstant pairs need two variables");
        let v = self.rng.random_range(0..n);
        let w = (v + self.rng.random_range(1..n)) % n;
        (self.single_variable(n, v), self.single_variable(n, w))
    }

    /// A pair mixing the three [`PairKind`]s with equal weight; in one
    /// variable the separated kind is replaced by a structured pair.
    pub fn pair(&mut self, n: usize) -> (InnerSymbol, InnerSymbol, PairKind) {
        let kind = match self.rng.random_range(0..3) {
            0 => PairKind::Random,
            1 => PairKind::Structured,
            _ if n == 1 => PairKind::Structured,
            _ => PairKind::Separated,
        };
        let (a, b) = match kind {
            PairKind::Random => (self.symbol(n), self.symbol(n)),
            PairKind::Separated => self.separated_pair(n),
            PairKind::Structured if n == 1 => {
                let a = self.symbol_with_budget(1, MAX_DEGREE - 1);
                let c = self.symbol_with_budget(1, MAX_DEGREE - degree(&a, 0));
                let ac = a.multiply(&c).expect("same n");
                if self.rng.random_bool(0.5) {
                    (a, ac)
                } else {
                    (ac, a)
                }
            }
            PairKind::Structured => {
                let psi = self.symbol_with_budget(n, MAX_DEGREE - 1);
                let v = self.rng.random_range(0..n);
                let w = (v + self.rng.random_range(1..n)) % n;
                let a = self.single_variable_with_budget(n, v, MAX_DEGREE - degree(&psi, v));
                let b = self.single_variable_with_budget(n, w, MAX_DEGREE - degree(&psi, w));
                (psi.multiply(&a).expect("same n"), psi.multiply(&b).expect("same n"))
            }
        };
        (a, b, kind)
    }
}
