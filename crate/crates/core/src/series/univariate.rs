//! Truncated power series with exact rational coefficients.
//!
//! A series holds the coefficients `c_0..c_N` of `sum c_k z^k`; every
//! operation is exact through the stated truncation order. Binary operations
//! on mismatching orders truncate to the smaller one. Preconditions
//! (nonzero constant term for a reciprocal, zero constant term for `exp`
//! and composition, unit constant term for `log`) are asserted: violating
//! them is a programming error, not a data condition.

use num::{BigInt, BigRational, One, Zero};

/// `k!` as a big integer.
pub fn factorial(k: usize) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=k {
        f *= i;
    }
    f
}

/// Binomial coefficient `C(n, k)` as a big integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut c = BigInt::one();
    for i in 0..k.min(n - k) {
        c = c * (n - i) / (i + 1);
    }
    c
}

fn ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    /// `coeffs[k]` is the coefficient of `z^k`; never empty.
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// `c * z^k + O(z^(order+1))`.
    pub fn monomial(order: usize, k: usize, c: BigRational) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least order 0");
        TruncatedSeries { coeffs }
    }

    /// `sin z` through the given order.
    pub fn sin(order: usize) -> Self {
        let mut s = Self::zero(order);
        for k in (1..=order).step_by(2) {
            let sign = if k % 4 == 1 { 1 } else { -1 };
            s.coeffs[k] = ratio(BigInt::from(sign), factorial(k));
        }
        s
    }

    /// `cos z` through the given order.
    pub fn cos(order: usize) -> Self {
        let mut s = Self::zero(order);
        for k in (0..=order).step_by(2) {
            let sign = if k % 4 == 0 { 1 } else { -1 };
            s.coeffs[k] = ratio(BigInt::from(sign), factorial(k));
        }
        s
    }

    /// Truncation order: coefficients are exact for exponents `<= order`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        assert!(
            k <= self.order(),
            "coefficient of z^{k} is beyond the truncation order {}",
            self.order()
        );
        &self.coeffs[k]
    }

    /// `k! * c_k`, the reading of an exponential generating function.
    pub fn egf(&self, k: usize) -> BigRational {
        self.coeff(k) * ratio(factorial(k), BigInt::one())
    }

    /// `k! * c_k` when it is an integer.
    pub fn egf_integer(&self, k: usize) -> Option<BigInt> {
        let v = self.egf(k);
        v.is_integer().then(|| v.to_integer())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops coefficients above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=keep].to_vec(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn pow(&self, exponent: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..exponent {
            acc = acc.mul(self);
        }
        acc
    }

    /// Termwise derivative; the result is exact one order lower.
    pub fn differentiate(&self) -> Self {
        assert!(self.order() >= 1, "differentiating loses one order");
        TruncatedSeries {
            coeffs: (1..=self.order())
                .map(|k| &self.coeffs[k] * ratio(BigInt::from(k), BigInt::one()))
                .collect(),
        }
    }

    /// Antiderivative with zero constant term; exact one order higher.
    pub fn integrate(&self) -> Self {
        let mut coeffs = vec![BigRational::zero(); self.order() + 2];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k + 1] = c * ratio(BigInt::one(), BigInt::from(k + 1));
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn reciprocal(&self) -> Self {
        let c0 = &self.coeffs[0];
        assert!(!c0.is_zero(), "reciprocal needs a nonzero constant term");
        let inv0 = c0.recip();
        let mut coeffs = vec![BigRational::zero(); self.order() + 1];
        coeffs[0] = inv0.clone();
        for n in 1..=self.order() {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc += &self.coeffs[k] * &coeffs[n - k];
            }
            coeffs[n] = -acc * &inv0;
        }
        TruncatedSeries { coeffs }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.reciprocal())
    }

    /// `log` of a series with constant term one, via `log f = ∫ f'/f`.
    pub fn log(&self) -> Self {
        assert!(
            self.coeffs[0].is_one(),
            "log needs a series with constant term one"
        );
        if self.order() == 0 {
            return Self::zero(0);
        }
        self.differentiate().div(&self.truncate(self.order() - 1)).integrate()
    }

    /// `exp` of a series with zero constant term, via `h' = g' h`.
    pub fn exp(&self) -> Self {
        assert!(
            self.coeffs[0].is_zero(),
            "exp needs a series with zero constant term"
        );
        let mut coeffs = vec![BigRational::zero(); self.order() + 1];
        coeffs[0] = BigRational::one();
        for n in 1..=self.order() {
            let mut acc = BigRational::zero();
            for j in 1..=n {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc += &self.coeffs[j] * ratio(BigInt::from(j), BigInt::one()) * &coeffs[n - j];
            }
            coeffs[n] = acc * ratio(BigInt::one(), BigInt::from(n));
        }
        TruncatedSeries { coeffs }
    }

    /// Composition `self(inner)`; the inner series must have zero constant
    /// term so that finitely many terms contribute at each order.
    pub fn compose(&self, inner: &Self) -> Self {
        assert!(
            inner.coeffs[0].is_zero(),
            "composition needs an inner series with zero constant term"
        );
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for k in (0..=order).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += &self.coeffs[k];
        }
        acc
    }

    /// Dump format: one line `k <numerator>/<denominator>` per order, plus
    /// `k! * coeff = <integer>` whenever the scaled coefficient is integral.
    pub fn dump_lines(&self) -> Vec<String> {
        let mut lines = Vec::new();
        for k in 0..=self.order() {
            let c = &self.coeffs[k];
            lines.push(format!("{k} {}/{}", c.numer(), c.denom()));
            if let Some(scaled) = self.egf_integer(k) {
                lines.push(format!("{k}! * coeff = {scaled}"));
            }
        }
        lines
    }
}
