//! Series in `z` whose coefficients are polynomials in a marker `y`.

use num::{BigInt, BigRational, One, Zero};

use super::univariate::{factorial, TruncatedSeries};

/// Truncated series `sum_{k,j} c_{k,j} y^j z^k`, exact through `z^order`.
/// Built as `exp(y * L)` for a univariate `L` with zero constant term, so the
/// `y`-degree at `z^k` never exceeds `k` when `L` has valuation one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    /// `coeffs[k][j]` is the coefficient of `y^j z^k`; inner vectors may be
    /// shorter than `k + 1` but never longer than the `y` bound.
    coeffs: Vec<Vec<BigRational>>,
}

impl BivariateSeries {
    /// `exp(y * base)` expanded as `sum_m y^m base^m / m!`, keeping `y`
    /// powers up to `y_max`.
    pub fn exp_y_times(base: &TruncatedSeries, y_max: usize) -> Self {
        assert!(
            base.coeff(0).is_zero(),
            "exp(y * L) needs L with zero constant term"
        );
        let order = base.order();
        let mut coeffs = vec![Vec::new(); order + 1];
        let mut power = TruncatedSeries::one(order);
        for m in 0..=y_max {
            if m > 0 {
                power = power.mul(base);
                if power.is_zero() {
                    break;
                }
            }
            let inv_factorial = BigRational::new(BigInt::one(), factorial(m));
            for (k, row) in coeffs.iter_mut().enumerate() {
                let c = power.coeff(k) * &inv_factorial;
                if !c.is_zero() {
                    if row.len() <= m {
                        row.resize(m + 1, BigRational::zero());
                    }
                    row[m] = c;
                }
            }
        }
        BivariateSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `y^j z^k`; zero when absent.
    pub fn coeff(&self, k: usize, j: usize) -> BigRational {
        assert!(k <= self.order(), "z-order {k} beyond truncation");
        self.coeffs[k].get(j).cloned().unwrap_or_default()
    }

    /// `k! * [y^j z^k]` when it is an integer.
    pub fn egf_integer(&self, k: usize, j: usize) -> Option<BigInt> {
        let scaled = self.coeff(k, j) * BigRational::from(factorial(k));
        scaled.is_integer().then(|| scaled.to_integer())
    }

    /// Degree in `y` of the coefficient of `z^k`.
    pub fn y_degree(&self, k: usize) -> usize {
        self.coeffs[k].len().saturating_sub(1)
    }

    /// The univariate series `[y^m] self`.
    pub fn y_slice(&self, m: usize) -> TruncatedSeries {
        TruncatedSeries::from_coeffs((0..=self.order()).map(|k| self.coeff(k, m)).collect())
    }

    /// Substitutes `y = 1`.
    pub fn at_y_one(&self) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(
            self.coeffs
                .iter()
                .map(|row| row.iter().sum::<BigRational>())
                .collect(),
        )
    }

    /// The `y`-derivative evaluated at `y = 1`: termwise `sum_j j * c_{k,j}`.
    pub fn d_dy_at_one(&self) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(
            self.coeffs
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .map(|(j, c)| c * BigRational::from(BigInt::from(j)))
                        .sum::<BigRational>()
                })
                .collect(),
        )
    }
}
