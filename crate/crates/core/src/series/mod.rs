//! Exact truncated power series and the named generating functions behind the
//! count tables.
//!
//! All coefficients are arbitrary-precision rationals; no floating point is
//! used anywhere. The univariate engine supplies `sec z + tan z` (the Euler
//! number EGF) and `-ln(1 - sin z)`; the bivariate `(1/(1 - sin z))^y`
//! refines the Euler numbers by the left-to-right minima statistic.

mod bivariate;
mod trivariate;
mod univariate;

use num::{BigInt, BigRational, BigUint, One, Signed, Zero};
use thiserror::Error;

pub use bivariate::BivariateSeries;
pub use trivariate::TrivariateTruncation;
pub use univariate::{binomial, factorial, TruncatedSeries};

use crate::table::{CountTable, Engine, Statistic};

/// Cap on requested truncation orders. Everything the crate checks needs
/// order at most 12; the cap leaves headroom at negligible cost.
pub const MAX_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation order {requested} exceeds the configured bound {max}")]
    OrderExceeded { requested: usize, max: usize },
}

fn check_order(requested: usize) -> Result<(), SeriesError> {
    if requested > MAX_ORDER {
        return Err(SeriesError::OrderExceeded {
            requested,
            max: MAX_ORDER,
        });
    }
    Ok(())
}

/// `sec z + tan z`, the exponential generating function of the Euler numbers.
pub fn euler_egf(order: usize) -> Result<TruncatedSeries, SeriesError> {
    check_order(order)?;
    let sin = TruncatedSeries::sin(order);
    let sec = TruncatedSeries::cos(order).reciprocal();
    Ok(sec.add(&sin.mul(&sec)))
}

/// `-ln(1 - sin z)`; its scaled coefficients count a root with one optional
/// subtree hanging below it.
pub fn neg_log_one_minus_sin(order: usize) -> Result<TruncatedSeries, SeriesError> {
    check_order(order)?;
    Ok(TruncatedSeries::one(order)
        .sub(&TruncatedSeries::sin(order))
        .log()
        .neg())
}

/// Euler numbers `e_1..=e_count` with `e_n = (n-1)! [z^(n-1)] (sec z + tan z)`:
/// 1, 1, 1, 2, 5, 16, 61, ... The value `e_n` also counts binary increasing
/// trees with `n - 1` nodes.
pub fn euler_numbers(count: usize) -> Result<Vec<BigInt>, SeriesError> {
    assert!(count >= 1);
    let egf = euler_egf(count - 1)?;
    Ok((1..=count)
        .map(|n| {
            egf.egf_integer(n - 1)
                .expect("Euler numbers are integers")
        })
        .collect())
}

/// The bivariate refinement `(1/(1 - sin z))^y = exp(y * -ln(1 - sin z))`,
/// with `y` powers kept up to `y_max`. At `y = 1` it reduces to the shifted
/// Euler EGF.
pub fn ftilde(order: usize, y_max: usize) -> Result<BivariateSeries, SeriesError> {
    check_order(order)?;
    let base = neg_log_one_minus_sin(order)?;
    Ok(BivariateSeries::exp_y_times(&base, y_max))
}

/// Counts of size-`n` restrictions with `m` left-to-right minima, read off
/// the bivariate series: entry `(n, m) = (n-1)! [y^(m-1) z^(n-1)]`.
pub fn table_lr_from_series(n_max: usize) -> Result<CountTable, SeriesError> {
    assert!(n_max >= 1);
    let order = n_max - 1;
    let f = ftilde(order, order)?;
    let mut table = CountTable::new(Statistic::LeftToRightMinima, Engine::Series, n_max);
    for n in 1..=n_max {
        for m in 1..=n {
            let value = f.coeff(n - 1, m - 1) * BigRational::from(factorial(n - 1));
            assert!(
                value.is_integer() && !value.is_negative(),
                "series table entries are nonnegative integers"
            );
            let count = value.to_integer().to_biguint().expect("nonnegative");
            table.add(n, m, count);
        }
    }
    Ok(table)
}

/// Checks, through `z^order`, that raising the Euler EGF-without-constant to
/// the `m`-th power reproduces column `m + 1` of the left-to-right table:
///
/// ```text
/// (1/m!) (sum_{n>=1} e_n z^n / n!)^m  =  sum_{n>=m} count(n+1, m+1) z^n / n!
/// ```
///
/// together with the intermediate step that `[y^m]` of the bivariate series
/// is `(-ln(1 - sin z))^m / m!`.
pub fn euler_power_identity(m: usize, order: usize) -> Result<bool, SeriesError> {
    assert!(m >= 1);
    check_order(order)?;
    let inv_m_factorial = BigRational::new(BigInt::one(), factorial(m));

    // left side, built from the Euler number sequence itself
    let numbers = euler_numbers(order)?;
    let mut coeffs = vec![BigRational::zero(); order + 1];
    for (i, e) in numbers.iter().enumerate() {
        let n = i + 1;
        coeffs[n] = BigRational::new(e.clone(), factorial(n));
    }
    let lhs = TruncatedSeries::from_coeffs(coeffs)
        .pow(m)
        .scale(&inv_m_factorial);

    // right side, read out of the bivariate table
    let table = table_lr_from_series(order + 1)?;
    let rhs = TruncatedSeries::from_coeffs(
        (0..=order)
            .map(|n| {
                let count = table.get(n + 1, m + 1);
                BigRational::new(BigInt::from(count), factorial(n))
            })
            .collect(),
    );

    // intermediate step: the y-slice is a pure log power
    let slice = ftilde(order, m)?.y_slice(m);
    let log_power = neg_log_one_minus_sin(order)?
        .pow(m)
        .scale(&inv_m_factorial);

    Ok(lhs == rhs && slice == log_power)
}

/// `-ln(1 - sin z) / (1 - sin z)`: the EGF of the total number of cycles over
/// all cycle-up-down permutations, and the `y`-derivative of the bivariate
/// series at `y = 1`.
pub fn cycle_egf(order: usize) -> Result<TruncatedSeries, SeriesError> {
    check_order(order)?;
    let one_minus_sin = TruncatedSeries::one(order).sub(&TruncatedSeries::sin(order));
    Ok(one_minus_sin.log().neg().mul(&one_minus_sin.reciprocal()))
}

/// EGF of trees whose max-path has length exactly two, built from the
/// decomposition at the root: a nonempty subtree under the smaller child and
/// a node with an optional subtree under the larger one, merged in
/// `C(n + m - 1, m)` ways:
///
/// ```text
/// f2(z) = sum_{n,m >= 1} a_n b_m C(n+m-1, m) z^(n+m+1) / (n+m+1)!
/// ```
///
/// with `a_n = n! [z^n] (sec + tan - 1)` and `b_m = m! [z^m] ∫(sec + tan)`.
pub fn f2_series(order: usize) -> Result<TruncatedSeries, SeriesError> {
    check_order(order)?;
    let a = euler_egf(order)?.sub(&TruncatedSeries::one(order));
    let b = euler_egf(order)?.integrate().truncate(order);
    let mut coeffs = vec![BigRational::zero(); order + 1];
    for n in 1..=order {
        let a_n = a.egf(n);
        if a_n.is_zero() {
            continue;
        }
        for m in 1..=order {
            let s = n + m + 1;
            if s > order {
                break;
            }
            let merges = BigRational::from(binomial(n + m - 1, m));
            let b_m = b.egf(m);
            coeffs[s] += &a_n * b_m * merges / BigRational::from(factorial(s));
        }
    }
    Ok(TruncatedSeries::from_coeffs(coeffs))
}

/// Verifies every step of the simplification chain for the second column of
/// the max-path table, exactly, through `z^(order-2)`:
///
/// 1. `∫(sec + tan)` equals its three-logarithm closed form and
///    `-ln(1 - sin z)`;
/// 2. `(sec + tan - 1)'` equals `sec (sec + tan)` and `1/(1 - sin z)`;
/// 3. `f2''` equals the product of the two, and that product equals
///    [`cycle_egf`].
pub fn f2_identity_check(order: usize) -> Result<bool, SeriesError> {
    assert!(order >= 3, "the second derivative needs order at least 3");
    check_order(order)?;

    let sin = TruncatedSeries::sin(order);
    let cos = TruncatedSeries::cos(order);
    let one = TruncatedSeries::one(order);
    let half = TruncatedSeries::monomial(order, 1, BigRational::new(1.into(), 2.into()));
    let sin_half = sin.compose(&half);
    let cos_half = cos.compose(&half);

    // step 1: the antiderivative and its closed forms
    let integral = euler_egf(order - 1)?.integrate();
    let three_logs = cos
        .log()
        .neg()
        .sub(&cos_half.sub(&sin_half).log())
        .add(&cos_half.add(&sin_half).log());
    let neg_log = neg_log_one_minus_sin(order)?;
    let single_log = one
        .add(&sin)
        .mul(&cos.mul(&cos).reciprocal())
        .log();
    let step1 = integral == three_logs && integral == neg_log && integral == single_log;

    // step 2: the derivative of sec + tan - 1
    let sec = cos.reciprocal();
    let derivative = euler_egf(order)?
        .sub(&TruncatedSeries::one(order))
        .differentiate();
    let product_form = sec.mul(&euler_egf(order)?).truncate(order - 1);
    let reciprocal_form = one.sub(&sin).reciprocal().truncate(order - 1);
    let step2 = derivative == product_form && derivative == reciprocal_form;

    // step 3: f2'' against the product and the cycle EGF
    let compare = order - 2;
    let f2_second = f2_series(order)?.differentiate().differentiate();
    let product = integral.mul(&derivative).truncate(compare);
    let cycles = cycle_egf(order)?.truncate(compare);
    let step3 = f2_second == product && f2_second == cycles;

    Ok(step1 && step2 && step3)
}

/// The series column `(n, 2)` of the max-path table as exact integers:
/// `n! [z^n] f2`.
pub fn f2_counts(n_max: usize) -> Result<Vec<BigUint>, SeriesError> {
    let f2 = f2_series(n_max)?;
    Ok((1..=n_max)
        .map(|n| {
            let v = f2.egf(n);
            assert!(
                v.is_integer() && !v.is_negative(),
                "f2 counts are nonnegative integers"
            );
            v.to_integer().to_biguint().expect("nonnegative")
        })
        .collect())
}
