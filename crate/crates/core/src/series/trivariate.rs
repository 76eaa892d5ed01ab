//! The three-variable truncation assembled from exhaustive tree statistics,
//! and the first-order PDE it must satisfy.
//!
//! The function is `F(x, y, z) = sum_t x^leaves(t) y^minpath(t) z^size(t) /
//! size(t)!` over all binary increasing trees `t`. The one-step growth of
//! trees forces
//!
//! ```text
//! (1 - x - y) F - x y  =  x (1 - 2x) F_x + (x z - 1) F_z
//! ```
//!
//! with `F(x, y, 0) = 0`, and a truncation built from an exhaustive scan must
//! satisfy it with residual exactly zero through one order below the
//! truncation.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, Signed, Zero};

use super::univariate::factorial;
use crate::tree::{enumerate_levels, TreeError, DEFAULT_SIZE_BOUND};

/// Monomial exponents `(x, y, z)` = (leaf marker, min-path marker, size).
type Monomial = (usize, usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivariateTruncation {
    order: usize,
    /// Nonzero coefficients of `x^o y^l z^n`, already divided by `n!`.
    coeffs: BTreeMap<Monomial, BigRational>,
}

impl TrivariateTruncation {
    /// Assembles the truncation through `z^order` by enumerating every tree.
    pub fn from_tree_statistics(order: usize) -> Result<Self, TreeError> {
        let levels = enumerate_levels(order, DEFAULT_SIZE_BOUND.max(order))?;
        let mut counts: BTreeMap<Monomial, u64> = BTreeMap::new();
        for (i, level) in levels.iter().enumerate() {
            let n = i + 1;
            for tree in level {
                let s = tree.statistics();
                *counts.entry((s.leaves, s.min_path_len, n)).or_default() += 1;
            }
        }
        let coeffs = counts
            .into_iter()
            .map(|((o, l, n), count)| {
                let c = BigRational::new(BigInt::from(count), factorial(n));
                ((o, l, n), c)
            })
            .collect();
        Ok(TrivariateTruncation { order, coeffs })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `x^o y^l z^n`; zero when absent.
    pub fn coeff(&self, o: usize, l: usize, n: usize) -> BigRational {
        self.coeffs.get(&(o, l, n)).cloned().unwrap_or_default()
    }

    /// `n! * [x^o y^l z^n]`, the number of trees with those statistics.
    pub fn scaled_count(&self, o: usize, l: usize, n: usize) -> BigInt {
        let v = self.coeff(o, l, n) * BigRational::from(factorial(n));
        assert!(v.is_integer(), "tree counts are integers");
        v.to_integer()
    }

    /// True when no monomial is free of `z`, i.e. `F(x, y, 0) = 0`.
    pub fn vanishes_at_z_zero(&self) -> bool {
        self.coeffs.keys().all(|&(_, _, n)| n > 0)
    }

    /// Largest absolute coefficient of
    /// `(1 - x - y) F - x y - x (1 - 2x) F_x - (x z - 1) F_z`
    /// over all monomials of `z`-degree at most `order - 1` (higher degrees
    /// would need coefficients beyond the truncation). Expected to be exactly
    /// zero.
    pub fn pde_residual(&self) -> BigRational {
        let mut residual: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        let mut bump = |key: Monomial, delta: BigRational| {
            let slot = residual.entry(key).or_default();
            *slot += delta;
            if slot.is_zero() {
                residual.remove(&key);
            }
        };
        // - x y
        bump((1, 1, 0), -BigRational::from(BigInt::from(1)));
        for (&(o, l, n), c) in &self.coeffs {
            let big = |v: usize| BigRational::from(BigInt::from(v));
            // (1 - x - y) F
            bump((o, l, n), c.clone());
            bump((o + 1, l, n), -c);
            bump((o, l + 1, n), -c);
            // - x (1 - 2x) F_x = - x F_x + 2 x^2 F_x
            bump((o, l, n), -(c * big(o)));
            bump((o + 1, l, n), c * big(2 * o));
            // - (x z - 1) F_z = - x z F_z + F_z
            bump((o + 1, l, n), -(c * big(n)));
            if n >= 1 {
                bump((o, l, n - 1), c * big(n));
            }
        }
        residual
            .into_iter()
            .filter(|&((_, _, n), _)| n + 1 <= self.order)
            .map(|(_, c)| c.abs())
            .max()
            .unwrap_or_default()
    }
}
