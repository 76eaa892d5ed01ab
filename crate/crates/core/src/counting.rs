//! The counting engines and the harness comparing them.
//!
//! Three independent routes produce the same triangles:
//!
//! * brute force — enumerate every tree and tally its statistics;
//! * succession rules — grow labels level by level, aggregating
//!   multiplicities per distinct label instead of per tree;
//! * the series engine (left-to-right statistic) and a polynomial recursion
//!   (right-to-left statistic).
//!
//! Brute force is authoritative: any mismatch is reported, never patched.

use std::collections::BTreeMap;

use num::{BigInt, BigUint, One, Signed, Zero};
use thiserror::Error;

use crate::perm::{cycle_up_down_cycle_count, PermError};
use crate::series::{self, SeriesError};
use crate::table::{CountTable, Engine, Statistic};
use crate::tree::{enumerate_levels, MaxPathEnd, TreeError, DEFAULT_SIZE_BOUND};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountingError {
    #[error("succession rule hit a negative exponent at size {size} (leaves {leaves})")]
    NegativeExponent { size: usize, leaves: usize },
    #[error("class-A label with no unary node at size {size}; the rules never produce one")]
    UnaryClassWithoutSlack { size: usize },
    #[error("division by the unary marker leaves a remainder at step {step}")]
    InexactUnaryDivision { step: usize },
    #[error("negative coefficient in the step-{step} polynomial")]
    NegativeCoefficient { step: usize },
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Succession-rule label for the min-path statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LrLabel {
    pub leaves: usize,
    pub min_path_len: usize,
    pub size: usize,
}

/// Succession-rule label for the max-path statistic. `unary` is redundant
/// (`size - 2 * leaves + 1`) but carried so the rules can be read directly
/// off the label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RlLabel {
    pub leaves: usize,
    pub max_path_len: usize,
    pub size: usize,
    pub end: MaxPathEnd,
    pub unary: usize,
}

/// One level of a generating tree, aggregated: how many trees carry each
/// label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelState<L> {
    size: usize,
    multiplicities: BTreeMap<L, BigUint>,
}

impl<L: Ord + Copy> LevelState<L> {
    fn start(size: usize, label: L) -> Self {
        let mut multiplicities = BTreeMap::new();
        multiplicities.insert(label, BigUint::one());
        LevelState {
            size,
            multiplicities,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> impl Iterator<Item = (&L, &BigUint)> {
        self.multiplicities.iter()
    }

    pub fn total(&self) -> BigUint {
        self.multiplicities.values().sum()
    }

    fn add(&mut self, label: L, count: BigUint) {
        if !count.is_zero() {
            *self.multiplicities.entry(label).or_default() += count;
        }
    }
}

/// Whether the min-path rule runs as stated or with a deliberate overcount,
/// used to demonstrate that the cross-checking harness localizes a bad rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LrRuleMode {
    #[default]
    Standard,
    /// Fires `leaves` copies of the first production instead of
    /// `leaves - 1`. Counts inflate from size 2 on.
    OvercountFault,
}

fn eco_lr_next(
    level: &LevelState<LrLabel>,
    mode: LrRuleMode,
) -> Result<LevelState<LrLabel>, CountingError> {
    let size = level.size + 1;
    let mut next = LevelState {
        size,
        multiplicities: BTreeMap::new(),
    };
    for (&label, count) in level.labels() {
        let LrLabel {
            leaves,
            min_path_len,
            size: n,
        } = label;
        if n + 1 < 2 * leaves {
            return Err(CountingError::NegativeExponent { size: n, leaves });
        }
        let unary = n + 1 - 2 * leaves;
        let same_copies = match mode {
            LrRuleMode::Standard => leaves - 1,
            LrRuleMode::OvercountFault => leaves,
        };
        // attach below a leaf off the min-path: statistics unchanged
        next.add(
            LrLabel {
                leaves,
                min_path_len,
                size: n + 1,
            },
            count * same_copies,
        );
        // attach below the min-path's terminal leaf: the path grows
        next.add(
            LrLabel {
                leaves,
                min_path_len: min_path_len + 1,
                size: n + 1,
            },
            count.clone(),
        );
        // attach below a unary node: one more leaf
        next.add(
            LrLabel {
                leaves: leaves + 1,
                min_path_len,
                size: n + 1,
            },
            count * unary,
        );
    }
    Ok(next)
}

/// Level expansion of the min-path succession rule
/// `(o, l, n) -> (o, l, n+1)^(o-1) (o, l+1, n+1) (o+1, l, n+1)^(n-2o+1)`
/// from the start label `(1, 1, 1)`.
pub fn eco_lr_expand(n_max: usize) -> Result<CountTable, CountingError> {
    eco_lr_expand_with_mode(n_max, LrRuleMode::Standard)
}

pub fn eco_lr_expand_with_mode(
    n_max: usize,
    mode: LrRuleMode,
) -> Result<CountTable, CountingError> {
    assert!(n_max >= 1);
    let mut table = CountTable::new(Statistic::LeftToRightMinima, Engine::Eco, n_max);
    let mut level = LevelState::start(
        1,
        LrLabel {
            leaves: 1,
            min_path_len: 1,
            size: 1,
        },
    );
    loop {
        for (label, count) in level.labels() {
            table.add(level.size, label.min_path_len, count.clone());
        }
        if level.size == n_max {
            break;
        }
        level = eco_lr_next(&level, mode)?;
    }
    Ok(table)
}

fn eco_rl_next(level: &LevelState<RlLabel>) -> Result<LevelState<RlLabel>, CountingError> {
    let size = level.size + 1;
    let mut next = LevelState {
        size,
        multiplicities: BTreeMap::new(),
    };
    for (&label, count) in level.labels() {
        let RlLabel {
            leaves,
            max_path_len,
            size: n,
            end,
            unary,
        } = label;
        debug_assert_eq!(unary, n + 1 - 2 * leaves);
        match end {
            MaxPathEnd::Unary => {
                if unary == 0 {
                    return Err(CountingError::UnaryClassWithoutSlack { size: n });
                }
                // attach below any leaf: path and class unchanged
                next.add(
                    RlLabel {
                        leaves,
                        max_path_len,
                        size: n + 1,
                        end: MaxPathEnd::Unary,
                        unary: unary + 1,
                    },
                    count * leaves,
                );
                // attach below the terminal unary node: the path grows and
                // now ends at the fresh leaf
                next.add(
                    RlLabel {
                        leaves: leaves + 1,
                        max_path_len: max_path_len + 1,
                        size: n + 1,
                        end: MaxPathEnd::Leaf,
                        unary: unary - 1,
                    },
                    count.clone(),
                );
                // attach below any other unary node: off-path, class kept
                next.add(
                    RlLabel {
                        leaves: leaves + 1,
                        max_path_len,
                        size: n + 1,
                        end: MaxPathEnd::Unary,
                        unary: unary - 1,
                    },
                    count * (unary - 1),
                );
            }
            MaxPathEnd::Leaf => {
                // attach below a leaf off the max-path
                next.add(
                    RlLabel {
                        leaves,
                        max_path_len,
                        size: n + 1,
                        end: MaxPathEnd::Leaf,
                        unary: unary + 1,
                    },
                    count * (leaves - 1),
                );
                // attach below the terminal leaf: it turns unary, class flips
                next.add(
                    RlLabel {
                        leaves,
                        max_path_len,
                        size: n + 1,
                        end: MaxPathEnd::Unary,
                        unary: unary + 1,
                    },
                    count.clone(),
                );
                // attach below a unary node (never on the max-path here)
                if unary > 0 {
                    next.add(
                        RlLabel {
                            leaves: leaves + 1,
                            max_path_len,
                            size: n + 1,
                            end: MaxPathEnd::Leaf,
                            unary: unary - 1,
                        },
                        count * unary,
                    );
                }
            }
        }
    }
    Ok(next)
}

/// Level expansion of the max-path succession rules from the start label
/// `(1, 1, 1)` in class B with no unary node.
pub fn eco_rl_expand(n_max: usize) -> Result<CountTable, CountingError> {
    assert!(n_max >= 1);
    let mut table = CountTable::new(Statistic::RightToLeftMinima, Engine::Eco, n_max);
    let mut level = LevelState::start(
        1,
        RlLabel {
            leaves: 1,
            max_path_len: 1,
            size: 1,
            end: MaxPathEnd::Leaf,
            unary: 0,
        },
    );
    loop {
        for (label, count) in level.labels() {
            table.add(level.size, label.max_path_len, count.clone());
        }
        if level.size == n_max {
            break;
        }
        level = eco_rl_next(&level)?;
    }
    Ok(table)
}

/// Exposes the aggregated levels themselves, for invariant checks.
pub fn eco_lr_levels(n_max: usize) -> Result<Vec<LevelState<LrLabel>>, CountingError> {
    eco_lr_levels_with_mode(n_max, LrRuleMode::Standard)
}

pub fn eco_lr_levels_with_mode(
    n_max: usize,
    mode: LrRuleMode,
) -> Result<Vec<LevelState<LrLabel>>, CountingError> {
    let mut levels = vec![LevelState::start(
        1,
        LrLabel {
            leaves: 1,
            min_path_len: 1,
            size: 1,
        },
    )];
    while levels.len() < n_max {
        let next = eco_lr_next(levels.last().expect("nonempty"), mode)?;
        levels.push(next);
    }
    Ok(levels)
}

pub fn eco_rl_levels(n_max: usize) -> Result<Vec<LevelState<RlLabel>>, CountingError> {
    let mut levels = vec![LevelState::start(
        1,
        RlLabel {
            leaves: 1,
            max_path_len: 1,
            size: 1,
            end: MaxPathEnd::Leaf,
            unary: 0,
        },
    )];
    while levels.len() < n_max {
        let next = eco_rl_next(levels.last().expect("nonempty"))?;
        levels.push(next);
    }
    Ok(levels)
}

/// Monomial exponents of the three markers: leaves, max-path length, unary
/// nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StatMonomial {
    pub leaves: usize,
    pub max_path_len: usize,
    pub unary: usize,
}

/// An integer polynomial in the three markers at a fixed step (the step is
/// the size, and would be the z-degree of every term).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatPolynomial {
    step: usize,
    terms: BTreeMap<StatMonomial, BigInt>,
}

impl StatPolynomial {
    pub fn zero(step: usize) -> Self {
        StatPolynomial {
            step,
            terms: BTreeMap::new(),
        }
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn terms(&self) -> impl Iterator<Item = (&StatMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, monomial: StatMonomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(monomial).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&monomial);
        }
    }

    fn accumulate(&mut self, other: &StatPolynomial, sign: i32) {
        for (&m, c) in &other.terms {
            self.add_term(m, c * sign);
        }
    }

    /// Drops every term free of the unary marker (the `v = 0` slice).
    fn without_unary_free_part(&self) -> StatPolynomial {
        StatPolynomial {
            step: self.step,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.unary >= 1)
                .map(|(&m, c)| (m, c.clone()))
                .collect(),
        }
    }

    /// Divides by the unary marker; exact only when every term carries it.
    fn div_unary(&self) -> Result<StatPolynomial, CountingError> {
        let mut out = StatPolynomial::zero(self.step);
        for (&m, c) in &self.terms {
            if m.unary == 0 {
                return Err(CountingError::InexactUnaryDivision { step: self.step });
            }
            out.add_term(
                StatMonomial {
                    unary: m.unary - 1,
                    ..m
                },
                c.clone(),
            );
        }
        Ok(out)
    }

    /// Derivative with respect to the unary marker.
    fn d_unary(&self) -> StatPolynomial {
        let mut out = StatPolynomial::zero(self.step);
        for (&m, c) in &self.terms {
            if m.unary >= 1 {
                out.add_term(
                    StatMonomial {
                        unary: m.unary - 1,
                        ..m
                    },
                    c * BigInt::from(m.unary),
                );
            }
        }
        out
    }

    /// Derivative with respect to the leaf marker.
    fn d_leaves(&self) -> StatPolynomial {
        let mut out = StatPolynomial::zero(self.step);
        for (&m, c) in &self.terms {
            if m.leaves >= 1 {
                out.add_term(
                    StatMonomial {
                        leaves: m.leaves - 1,
                        ..m
                    },
                    c * BigInt::from(m.leaves),
                );
            }
        }
        out
    }

    /// Multiplies by markers: leaf marker `dl` times, path marker `dw`
    /// times, unary marker `dv` times.
    fn shift(&self, dl: usize, dw: usize, dv: usize) -> StatPolynomial {
        StatPolynomial {
            step: self.step,
            terms: self
                .terms
                .iter()
                .map(|(&m, c)| {
                    (
                        StatMonomial {
                            leaves: m.leaves + dl,
                            max_path_len: m.max_path_len + dw,
                            unary: m.unary + dv,
                        },
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    fn with_step(mut self, step: usize) -> StatPolynomial {
        self.step = step;
        self
    }

    fn check_nonnegative(self) -> Result<StatPolynomial, CountingError> {
        if self.terms.values().any(|c| c.is_negative()) {
            return Err(CountingError::NegativeCoefficient { step: self.step });
        }
        Ok(self)
    }

    /// Sums coefficients by the max-path marker degree.
    pub fn counts_by_path_len(&self) -> BTreeMap<usize, BigInt> {
        let mut out: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (m, c) in &self.terms {
            *out.entry(m.max_path_len).or_default() += c;
        }
        out
    }
}

/// Step-1 polynomials: no class-A tree, and the single node is in class B
/// with one leaf, path length one, no unary node.
pub fn g_seed() -> (StatPolynomial, StatPolynomial) {
    let mut class_b = StatPolynomial::zero(1);
    class_b.add_term(
        StatMonomial {
            leaves: 1,
            max_path_len: 1,
            unary: 0,
        },
        BigInt::one(),
    );
    (StatPolynomial::zero(1), class_b)
}

/// One step of the polynomial recursion, `(G_A, G_B)` at size `n` to size
/// `n + 1`:
///
/// ```text
/// G_A' = (-xz/v)(G_A - G_A|v=0) + xz d/dv G_A + xvz d/dx G_A + vz G_B
/// G_B' = (xwz/v)(G_A - G_A|v=0) + xz d/dv G_B + xvz d/dx G_B - vz G_B
/// ```
///
/// The `v = 0` slice is removed before dividing, so the division is exact;
/// a remainder or a negative output coefficient is a hard error.
pub fn g_step(
    class_a: &StatPolynomial,
    class_b: &StatPolynomial,
) -> Result<(StatPolynomial, StatPolynomial), CountingError> {
    assert_eq!(class_a.step(), class_b.step(), "steps must match");
    let step = class_a.step() + 1;
    let a_over_unary = class_a.without_unary_free_part().div_unary()?;

    let mut next_a = StatPolynomial::zero(step);
    next_a.accumulate(&a_over_unary.shift(1, 0, 0), -1);
    next_a.accumulate(&class_a.d_unary().shift(1, 0, 0), 1);
    next_a.accumulate(&class_a.d_leaves().shift(1, 0, 1), 1);
    next_a.accumulate(&class_b.shift(0, 0, 1), 1);

    let mut next_b = StatPolynomial::zero(step);
    next_b.accumulate(&a_over_unary.shift(1, 1, 0), 1);
    next_b.accumulate(&class_b.d_unary().shift(1, 0, 0), 1);
    next_b.accumulate(&class_b.d_leaves().shift(1, 0, 1), 1);
    next_b.accumulate(&class_b.shift(0, 0, 1), -1);

    Ok((
        next_a.with_step(step).check_nonnegative()?,
        next_b.with_step(step).check_nonnegative()?,
    ))
}

/// Iterates the recursion and reads off the table: entry `(n, r)` sums the
/// coefficients of path-marker degree `r` in `G_A + G_B` at step `n`.
pub fn g_table(n_max: usize) -> Result<CountTable, CountingError> {
    assert!(n_max >= 1);
    let mut table = CountTable::new(Statistic::RightToLeftMinima, Engine::Recursion, n_max);
    let (mut class_a, mut class_b) = g_seed();
    loop {
        let step = class_a.step();
        for poly in [&class_a, &class_b] {
            for (r, coeff) in poly.counts_by_path_len() {
                let count = coeff
                    .to_biguint()
                    .expect("recursion coefficients are nonnegative");
                table.add(step, r, count);
            }
        }
        if step == n_max {
            break;
        }
        let next = g_step(&class_a, &class_b)?;
        class_a = next.0;
        class_b = next.1;
    }
    Ok(table)
}

/// The exact polynomials the recursion must reproduce, read off the trees of
/// size `n` directly.
pub fn brute_stat_polynomials(
    n: usize,
) -> Result<(StatPolynomial, StatPolynomial), CountingError> {
    let levels = enumerate_levels(n, DEFAULT_SIZE_BOUND.max(n))?;
    let mut class_a = StatPolynomial::zero(n);
    let mut class_b = StatPolynomial::zero(n);
    for tree in levels.last().expect("at least one level") {
        let s = tree.statistics();
        let monomial = StatMonomial {
            leaves: s.leaves,
            max_path_len: s.max_path_len,
            unary: s.unary,
        };
        match s.end {
            MaxPathEnd::Unary => class_a.add_term(monomial, BigInt::one()),
            MaxPathEnd::Leaf => class_b.add_term(monomial, BigInt::one()),
        }
    }
    Ok((class_a, class_b))
}

/// Ground truth: tally every tree of each size by the chosen statistic.
pub fn brute_table(statistic: Statistic, n_max: usize) -> Result<CountTable, CountingError> {
    brute_table_bounded(statistic, n_max, DEFAULT_SIZE_BOUND)
}

pub fn brute_table_bounded(
    statistic: Statistic,
    n_max: usize,
    bound: usize,
) -> Result<CountTable, CountingError> {
    let levels = enumerate_levels(n_max, bound)?;
    let mut table = CountTable::new(statistic, Engine::Brute, n_max);
    for (i, level) in levels.iter().enumerate() {
        let n = i + 1;
        for tree in level {
            let s = tree.statistics();
            let value = match statistic {
                Statistic::LeftToRightMinima => s.min_path_len,
                Statistic::RightToLeftMinima => s.max_path_len,
            };
            table.add(n, value, BigUint::one());
        }
    }
    Ok(table)
}

/// The series route for the max-path statistic covers columns 1 and 2 only:
/// column 1 is the Euler sequence, column 2 the scaled coefficients of the
/// length-two EGF.
pub fn series_rl_table(n_max: usize) -> Result<CountTable, CountingError> {
    let mut table = CountTable::new(Statistic::RightToLeftMinima, Engine::Series, n_max)
        .with_stat_bound(2);
    for (i, e) in series::euler_numbers(n_max)?.into_iter().enumerate() {
        table.add(
            i + 1,
            1,
            e.to_biguint().expect("Euler numbers are nonnegative"),
        );
    }
    for (i, count) in series::f2_counts(n_max)?.into_iter().enumerate() {
        table.add(i + 1, 2, count);
    }
    Ok(table)
}

/// The full left-to-right table from the series engine; see
/// [`series::table_lr_from_series`].
pub fn series_lr_table(n_max: usize) -> Result<CountTable, CountingError> {
    Ok(series::table_lr_from_series(n_max)?)
}

/// One disagreeing cell between two counting routes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub statistic: Statistic,
    pub size: usize,
    pub stat: usize,
    pub left_engine: String,
    pub right_engine: String,
    pub left: BigUint,
    pub right: BigUint,
}

impl std::fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} entry ({}, {}): {} says {}, {} says {}",
            self.statistic,
            self.size,
            self.stat,
            self.left_engine,
            self.left,
            self.right_engine,
            self.right
        )
    }
}

/// Outcome of comparing every engine pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub n_max: usize,
    /// Human-readable descriptions of the comparisons performed.
    pub comparisons: Vec<String>,
    /// First disagreement found, if any.
    pub discrepancy: Option<Discrepancy>,
}

impl CrossCheckReport {
    pub fn agreed(&self) -> bool {
        self.discrepancy.is_none()
    }
}

/// Compares every engine against brute force on both statistics, plus the
/// shifted cycle-up-down identity: the total cycle count over cycle-up-down
/// permutations of size `k` must equal the max-path count at `(k + 2, 2)`.
pub fn cross_check(n_max: usize) -> Result<CrossCheckReport, CountingError> {
    cross_check_with_lr_mode(n_max, LrRuleMode::Standard)
}

pub fn cross_check_with_lr_mode(
    n_max: usize,
    mode: LrRuleMode,
) -> Result<CrossCheckReport, CountingError> {
    let mut comparisons = Vec::new();
    let mut discrepancy = None;

    let record = |statistic: Statistic,
                      reference: &CountTable,
                      candidate: &CountTable,
                      comparisons: &mut Vec<String>,
                      discrepancy: &mut Option<Discrepancy>| {
        comparisons.push(format!(
            "{statistic}: {} vs {} (n <= {n_max})",
            candidate.engine(),
            reference.engine()
        ));
        if discrepancy.is_none() {
            if let Some(diff) = candidate.first_difference(reference) {
                *discrepancy = Some(Discrepancy {
                    statistic,
                    size: diff.size,
                    stat: diff.stat,
                    left_engine: candidate.engine().to_string(),
                    right_engine: reference.engine().to_string(),
                    left: diff.left,
                    right: diff.right,
                });
            }
        }
    };

    let lr_brute = brute_table(Statistic::LeftToRightMinima, n_max)?;
    let lr_eco = eco_lr_expand_with_mode(n_max, mode)?;
    let lr_series = series_lr_table(n_max)?;
    record(
        Statistic::LeftToRightMinima,
        &lr_brute,
        &lr_eco,
        &mut comparisons,
        &mut discrepancy,
    );
    record(
        Statistic::LeftToRightMinima,
        &lr_brute,
        &lr_series,
        &mut comparisons,
        &mut discrepancy,
    );

    let rl_brute = brute_table(Statistic::RightToLeftMinima, n_max)?;
    let rl_eco = eco_rl_expand(n_max)?;
    let rl_recursion = g_table(n_max)?;
    let rl_series = series_rl_table(n_max)?;
    record(
        Statistic::RightToLeftMinima,
        &rl_brute,
        &rl_eco,
        &mut comparisons,
        &mut discrepancy,
    );
    record(
        Statistic::RightToLeftMinima,
        &rl_brute,
        &rl_recursion,
        &mut comparisons,
        &mut discrepancy,
    );
    record(
        Statistic::RightToLeftMinima,
        &rl_brute,
        &rl_series,
        &mut comparisons,
        &mut discrepancy,
    );

    // shifted identity against the permutation-level scan
    let cycle_max = 8.min(n_max.saturating_sub(2));
    if cycle_max >= 1 {
        comparisons.push(format!(
            "rl column 2 vs cycle-up-down cycle scan (k <= {cycle_max}, shift 2)"
        ));
        for k in 1..=cycle_max {
            let scanned = BigUint::from(cycle_up_down_cycle_count(k)?);
            let tabled = rl_brute.get(k + 2, 2);
            if discrepancy.is_none() && scanned != tabled {
                discrepancy = Some(Discrepancy {
                    statistic: Statistic::RightToLeftMinima,
                    size: k + 2,
                    stat: 2,
                    left_engine: "cycle-up-down scan".to_string(),
                    right_engine: Engine::Brute.to_string(),
                    left: scanned,
                    right: tabled,
                });
            }
        }
    }

    Ok(CrossCheckReport {
        n_max,
        comparisons,
        discrepancy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::{lr_reference, rl_reference, tree_count};

    fn monomial(leaves: usize, max_path_len: usize, unary: usize) -> StatMonomial {
        StatMonomial {
            leaves,
            max_path_len,
            unary,
        }
    }

    #[test]
    fn lr_level_two_is_a_single_label() {
        let levels = eco_lr_levels(2).unwrap();
        let labels: Vec<_> = levels[1].labels().collect();
        assert_eq!(labels.len(), 1);
        assert_eq!(
            labels[0].0,
            &LrLabel {
                leaves: 1,
                min_path_len: 2,
                size: 2
            }
        );
        assert_eq!(labels[0].1, &BigUint::one());
    }

    #[test]
    fn lr_expansion_reproduces_reference_entries() {
        let table = eco_lr_expand(9).unwrap();
        assert_eq!(table.get(2, 2), BigUint::from(1u32));
        assert_eq!(table.get(4, 3), BigUint::from(3u32));
        assert_eq!(table.get(9, 2), BigUint::from(272u32));
        for n in 1..=9 {
            for m in 1..=9 {
                assert_eq!(table.get(n, m), BigUint::from(lr_reference(n, m)));
            }
        }
    }

    #[test]
    fn rl_expansion_reproduces_reference_entries() {
        let table = eco_rl_expand(10).unwrap();
        assert_eq!(table.get(3, 2), BigUint::from(1u32));
        assert_eq!(table.get(6, 2), BigUint::from(38u32));
        assert_eq!(table.get(10, 5), BigUint::from(21u32));
        for n in 1..=10 {
            for r in 1..=10 {
                assert_eq!(table.get(n, r), BigUint::from(rl_reference(n, r)));
            }
        }
    }

    #[test]
    fn level_totals_match_tree_counts() {
        for level in &eco_lr_levels(12).unwrap() {
            assert_eq!(level.total(), BigUint::from(tree_count(level.size())));
        }
        for level in &eco_rl_levels(12).unwrap() {
            assert_eq!(level.total(), BigUint::from(tree_count(level.size())));
            for (label, _) in level.labels() {
                assert_eq!(label.unary, label.size + 1 - 2 * label.leaves);
                if label.end == MaxPathEnd::Unary {
                    assert!(label.unary >= 1, "class-A label without a unary node");
                }
            }
        }
    }

    #[test]
    fn overcount_fault_inflates_the_second_level() {
        let table = eco_lr_expand_with_mode(3, LrRuleMode::OvercountFault).unwrap();
        // the faulty rule invents a tree with an unchanged min-path at size 2
        assert_eq!(table.get(2, 1), BigUint::one());
        assert_eq!(eco_lr_expand(3).unwrap().get(2, 1), BigUint::zero());
    }

    #[test]
    fn g_recursion_first_steps() {
        let (a1, b1) = g_seed();
        assert!(a1.is_zero());
        let (a2, b2) = g_step(&a1, &b1).unwrap();
        let mut expected_a2 = StatPolynomial::zero(2);
        expected_a2.add_term(monomial(1, 1, 1), BigInt::one());
        assert_eq!(a2, expected_a2);
        assert!(b2.is_zero());

        let (a3, b3) = g_step(&a2, &b2).unwrap();
        let mut expected_a3 = StatPolynomial::zero(3);
        expected_a3.add_term(monomial(1, 1, 2), BigInt::one());
        let mut expected_b3 = StatPolynomial::zero(3);
        expected_b3.add_term(monomial(2, 2, 0), BigInt::one());
        assert_eq!(a3, expected_a3);
        assert_eq!(b3, expected_b3);
    }

    #[test]
    fn g_step_of_zero_is_zero() {
        let zero = StatPolynomial::zero(4);
        let (a, b) = g_step(&zero, &zero.clone()).unwrap();
        assert!(a.is_zero() && b.is_zero());
        assert_eq!(a.step(), 5);
    }

    #[test]
    fn g_steps_match_brute_polynomials() {
        let (mut a, mut b) = g_seed();
        for n in 1..=8 {
            let (brute_a, brute_b) = brute_stat_polynomials(n).unwrap();
            assert_eq!(a, brute_a, "class A at size {n}");
            assert_eq!(b, brute_b, "class B at size {n}");
            let next = g_step(&a, &b).unwrap();
            a = next.0;
            b = next.1;
        }
    }

    #[test]
    fn g_table_entries() {
        let table = g_table(10).unwrap();
        assert_eq!(table.get(5, 3), BigUint::one());
        assert_eq!(table.get(8, 4), BigUint::from(13u32));
        assert_eq!(table.get(6, 4), BigUint::zero());
        for n in 1..=10 {
            for r in 1..=10 {
                assert_eq!(table.get(n, r), BigUint::from(rl_reference(n, r)));
            }
        }
    }

    #[test]
    fn brute_tables_match_the_reference() {
        let lr = brute_table(Statistic::LeftToRightMinima, 6).unwrap();
        assert_eq!(lr.get(6, 4), BigUint::from(25u32));
        assert_eq!(lr.get(1, 1), BigUint::one());
        let rl = brute_table(Statistic::RightToLeftMinima, 9).unwrap();
        assert_eq!(rl.get(9, 4), BigUint::from(136u32));
    }

    #[test]
    fn series_rl_table_covers_two_columns() {
        let table = series_rl_table(8).unwrap();
        assert_eq!(table.stat_bound(), Some(2));
        for n in 1..=8 {
            assert_eq!(table.get(n, 1), BigUint::from(rl_reference(n, 1)));
            assert_eq!(table.get(n, 2), BigUint::from(rl_reference(n, 2)));
        }
    }

    #[test]
    fn cross_check_agrees_and_localizes_faults() {
        let report = cross_check(6).unwrap();
        assert!(report.agreed(), "{:?}", report.discrepancy);
        assert_eq!(report.comparisons.len(), 6);

        let faulty = cross_check_with_lr_mode(6, LrRuleMode::OvercountFault).unwrap();
        let diff = faulty.discrepancy.expect("fault must be detected");
        assert_eq!((diff.size, diff.stat), (2, 1));
        assert_eq!(diff.statistic, Statistic::LeftToRightMinima);
        assert_eq!(diff.left_engine, "eco");
    }
}
