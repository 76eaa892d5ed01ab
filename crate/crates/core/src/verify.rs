//! One driver for every invariant the crate promises.
//!
//! Each property runs bounded by `n_max` (and by its own cost cap) and
//! reports pass/fail with a locating detail on failure. A fault can be
//! injected to demonstrate that a wrong rule is caught and localized rather
//! than silently absorbed.

use std::collections::BTreeSet;

use itertools::Itertools;
use num::{BigInt, BigUint, Signed, Zero};

use crate::counting::{
    brute_stat_polynomials, brute_table, cross_check_with_lr_mode, eco_lr_levels_with_mode,
    eco_rl_levels, g_seed, g_step, CountingError, LrRuleMode,
};
use crate::perm::{
    andre_set, cycle_up_down_cycle_count, extension_witness, in_res, phi, phi_collapse,
    phi_inverse, res_set, Permutation,
};
use crate::reference::{lr_reference, rl_reference, tree_count, CYCLE_UP_DOWN_CYCLES, RES_5};
use crate::series::{
    cycle_egf, euler_numbers, euler_power_identity, f2_identity_check, f2_series, ftilde,
    TrivariateTruncation, TruncatedSeries,
};
use crate::table::Statistic;
use crate::tree::{enumerate_levels, IncreasingTree, MaxPathEnd, Orientation};

/// Deliberate defects for exercising the harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaultInjection {
    /// Runs the min-path succession rule with an inflated first production.
    EcoLrOvercount,
}

#[derive(Debug, Clone)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// Empty on success; a locating message on failure.
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub n_max: usize,
    pub outcomes: Vec<PropertyOutcome>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.outcomes.iter().filter(|o| o.passed).count()
    }
}

type Check = Result<(), String>;

fn fail(message: String) -> Check {
    Err(message)
}

/// Runs the whole property suite with sweeps capped at `n_max`.
pub fn run_verification(
    n_max: usize,
    fault: Option<FaultInjection>,
) -> Result<VerificationReport, CountingError> {
    assert!(n_max >= 1);
    let lr_mode = match fault {
        Some(FaultInjection::EcoLrOvercount) => LrRuleMode::OvercountFault,
        None => LrRuleMode::Standard,
    };
    // Shared enumeration for everything brute-force.
    let deep = n_max.min(11);
    let levels = enumerate_levels(deep, deep.max(12))?;
    let take = |cap: usize| &levels[..deep.min(cap)];

    let mut outcomes = Vec::new();
    let mut run = |name: &'static str, check: Check| {
        let (passed, detail) = match check {
            Ok(()) => (true, String::new()),
            Err(detail) => (false, detail),
        };
        outcomes.push(PropertyOutcome {
            name,
            passed,
            detail,
        });
    };

    run("tree-counts", check_tree_counts(take(11)));
    run("node-count-identities", check_node_counts(take(10)));
    run("paths-increasing", check_paths_increasing(take(9)));
    run("generating-tree-partition", check_partition(take(9)));
    run(
        "collapse-agrees-with-traversal",
        check_collapse(take(9)),
    );
    run("phi-round-trip", check_round_trip(take(9)));
    run("lr-minima-are-min-path", check_lr_minima(take(9)));
    run("rl-minima-are-max-path", check_rl_minima(take(9)));
    run("res-membership-sweep", check_membership(n_max.min(8)));
    run("witness-soundness", check_witnesses(take(7)));
    run("res-not-contained-in-andre", check_non_inclusion(n_max));
    run("res5-extensional", check_res5(n_max));
    run("series-algebra", check_series_algebra());
    run("lr-table-vs-reference", check_lr_tables(n_max.min(10), lr_mode));
    run("rl-table-vs-reference", check_rl_tables(n_max.min(10)));
    run("cycle-egf-is-y-derivative", check_cycle_derivative());
    run("pde-residual", check_pde(n_max.min(8)));
    run("euler-power-identity", check_euler_powers());
    run("f2-identity-chain", check_f2_chain());
    run("eco-level-totals", check_level_totals(n_max.min(12), lr_mode));
    run("rl-rule-label-invariants", check_rl_labels(n_max.min(12)));
    run(
        "g-matches-brute-polynomials",
        check_g_polynomials(take(10)),
    );
    run("table-first-columns", check_first_columns(n_max.min(10)));
    run(
        "cross-engine-agreement",
        check_cross_engines(n_max.min(10), lr_mode),
    );
    run("cycle-up-down-shift", check_cycle_shift(n_max));

    Ok(VerificationReport { n_max, outcomes })
}

fn check_tree_counts(levels: &[Vec<IncreasingTree>]) -> Check {
    for (i, level) in levels.iter().enumerate() {
        let n = i + 1;
        if level.len() as u64 != tree_count(n) {
            return fail(format!(
                "size {n}: enumerated {} trees, expected {}",
                level.len(),
                tree_count(n)
            ));
        }
    }
    Ok(())
}

fn check_node_counts(levels: &[Vec<IncreasingTree>]) -> Check {
    for level in levels {
        for tree in level {
            let s = tree.statistics();
            let ok = s.leaves + s.unary + s.binary == s.size
                && s.leaves == s.binary + 1
                && s.unary == s.size + 1 - 2 * s.leaves
                && (s.end != MaxPathEnd::Unary || s.unary >= 1);
            if !ok {
                return fail(format!("tree {tree} violates the node-count identities"));
            }
        }
    }
    Ok(())
}

fn check_paths_increasing(levels: &[Vec<IncreasingTree>]) -> Check {
    for level in levels {
        for tree in level {
            for path in [tree.min_path(), tree.max_path()] {
                if !path.windows(2).all(|w| w[0] < w[1]) {
                    return fail(format!("tree {tree} has a non-increasing path {path:?}"));
                }
            }
        }
    }
    Ok(())
}

fn check_partition(levels: &[Vec<IncreasingTree>]) -> Check {
    for (i, level) in levels.iter().enumerate() {
        let n = i + 1;
        let mut seen = BTreeSet::new();
        for tree in level {
            for successor in tree.successors() {
                if !seen.insert(successor.clone()) {
                    return fail(format!("duplicate successor {successor} at size {}", n + 1));
                }
            }
        }
        if n + 1 <= 12 && seen.len() as u64 != tree_count(n + 1) {
            return fail(format!(
                "successors of size {n} give {} trees, expected {}",
                seen.len(),
                tree_count(n + 1)
            ));
        }
    }
    Ok(())
}

fn check_collapse(levels: &[Vec<IncreasingTree>]) -> Check {
    for level in levels {
        for tree in level {
            for orientation in [Orientation::Standard, Orientation::LeftOriented] {
                let drawing = tree.drawing(orientation);
                if phi(&drawing) != phi_collapse(&drawing) {
                    return fail(format!("collapse disagrees on {tree} ({orientation})"));
                }
            }
        }
    }
    Ok(())
}

fn check_round_trip(levels: &[Vec<IncreasingTree>]) -> Check {
    for level in levels {
        for tree in level {
            for orientation in [Orientation::Standard, Orientation::LeftOriented] {
                let pi = phi(&tree.drawing(orientation));
                match phi_inverse(&pi, orientation) {
                    Ok(back) if &back == tree => {}
                    Ok(back) => {
                        return fail(format!(
                            "round trip of {tree} ({orientation}) gave {back}"
                        ))
                    }
                    Err(e) => {
                        return fail(format!("round trip of {tree} ({orientation}) failed: {e}"))
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_lr_minima(levels: &[Vec<IncreasingTree>]) -> Check {
    for level in levels {
        for tree in level {
            let pi = phi(&tree.drawing(Orientation::LeftOriented));
            let expected: BTreeSet<usize> = tree.min_path().into_iter().collect();
            if pi.lr_minima() != expected {
                return fail(format!(
                    "tree {tree}: left-to-right minima of {pi} differ from the min-path"
                ));
            }
        }
    }
    Ok(())
}

fn check_rl_minima(levels: &[Vec<IncreasingTree>]) -> Check {
    for level in levels {
        for tree in level {
            let pi = phi(&tree.drawing(Orientation::LeftOriented));
            let expected: BTreeSet<usize> = tree.max_path().into_iter().collect();
            if pi.rl_minima() != expected {
                return fail(format!(
                    "tree {tree}: right-to-left minima of {pi} differ from the max-path"
                ));
            }
        }
    }
    Ok(())
}

fn check_membership(n_max: usize) -> Check {
    for n in 1..=n_max {
        let expected: BTreeSet<Permutation> =
            res_set(n).map_err(|e| e.to_string())?.into_iter().collect();
        let mut found = 0usize;
        for entries in (1..=n).permutations(n) {
            let pi = Permutation::new(entries).expect("generated permutations are valid");
            let member = in_res(&pi);
            if member != expected.contains(&pi) {
                return fail(format!(
                    "membership of {pi} is {member}, the enumerated class says otherwise"
                ));
            }
            if member {
                found += 1;
            }
        }
        if found != expected.len() {
            return fail(format!(
                "size {n}: sweep found {found} members, enumeration {}",
                expected.len()
            ));
        }
    }
    Ok(())
}

fn check_witnesses(levels: &[Vec<IncreasingTree>]) -> Check {
    for level in levels {
        for tree in level {
            let pi = phi(&tree.drawing(Orientation::LeftOriented));
            let n = pi.size();
            let witness = extension_witness(&pi)
                .map_err(|e| format!("witness for {pi} failed: {e}"))?;
            let back = phi_inverse(&witness, Orientation::Standard)
                .map_err(|e| format!("witness {witness} is not an André image: {e}"))?;
            if !back.is_strictly_binary() {
                return fail(format!("witness {witness} is not strictly binary"));
            }
            if witness.restriction(n).map_err(|e| e.to_string())? != pi {
                return fail(format!("witness {witness} does not restrict to {pi}"));
            }
        }
    }
    Ok(())
}

fn check_non_inclusion(n_max: usize) -> Check {
    if n_max < 6 {
        return Ok(()); // needs size six; vacuous below that
    }
    let pi = Permutation::new(vec![3, 2, 6, 5, 1, 4]).expect("literal");
    if !in_res(&pi) {
        return fail("3 2 6 5 1 4 must be a restriction".to_string());
    }
    if andre_set(6).map_err(|e| e.to_string())?.contains(&pi) {
        return fail("3 2 6 5 1 4 must not be an André permutation".to_string());
    }
    Ok(())
}

fn check_res5(n_max: usize) -> Check {
    if n_max < 5 {
        return Ok(());
    }
    let got: BTreeSet<Permutation> = res_set(5).map_err(|e| e.to_string())?.into_iter().collect();
    let want: BTreeSet<Permutation> = RES_5
        .iter()
        .map(|p| Permutation::new(p.to_vec()).expect("literal"))
        .collect();
    if got != want {
        return fail(format!("restriction class of size 5 is {got:?}"));
    }
    Ok(())
}

fn check_series_algebra() -> Check {
    let order = 16;
    let sin = TruncatedSeries::sin(order);
    let cos = TruncatedSeries::cos(order);
    let sec = cos.reciprocal();
    let tan = sin.mul(&sec);
    if sin.mul(&sec) != tan {
        return fail("sin * sec != tan".to_string());
    }
    if sec.mul(&sec).sub(&tan.mul(&tan)) != TruncatedSeries::one(order) {
        return fail("sec^2 - tan^2 != 1".to_string());
    }
    let f = sec.add(&tan);
    if f.integrate().differentiate() != f {
        return fail("d/dz of the antiderivative is not the identity".to_string());
    }
    Ok(())
}

fn check_lr_tables(n_max: usize, mode: LrRuleMode) -> Check {
    let brute = brute_table(Statistic::LeftToRightMinima, n_max).map_err(|e| e.to_string())?;
    let eco = crate::counting::eco_lr_expand_with_mode(n_max, mode).map_err(|e| e.to_string())?;
    let series = crate::counting::series_lr_table(n_max).map_err(|e| e.to_string())?;
    for n in 1..=n_max {
        for m in 1..=n_max {
            let expected = BigUint::from(lr_reference(n, m));
            for table in [&brute, &eco, &series] {
                if table.get(n, m) != expected {
                    return fail(format!(
                        "{} lr entry ({n}, {m}) is {}, expected {expected}",
                        table.engine(),
                        table.get(n, m)
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_rl_tables(n_max: usize) -> Check {
    let brute = brute_table(Statistic::RightToLeftMinima, n_max).map_err(|e| e.to_string())?;
    let eco = crate::counting::eco_rl_expand(n_max).map_err(|e| e.to_string())?;
    let recursion = crate::counting::g_table(n_max).map_err(|e| e.to_string())?;
    for n in 1..=n_max {
        for r in 1..=n_max {
            let expected = BigUint::from(rl_reference(n, r));
            for table in [&brute, &eco, &recursion] {
                if table.get(n, r) != expected {
                    return fail(format!(
                        "{} rl entry ({n}, {r}) is {}, expected {expected}",
                        table.engine(),
                        table.get(n, r)
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_cycle_derivative() -> Check {
    let order = 12;
    let direct = cycle_egf(order).map_err(|e| e.to_string())?;
    let derived = ftilde(order, order).map_err(|e| e.to_string())?.d_dy_at_one();
    if direct != derived {
        return fail("cycle EGF differs from the y-derivative at y = 1".to_string());
    }
    for (i, &expected) in CYCLE_UP_DOWN_CYCLES[..order].iter().enumerate() {
        if direct.egf_integer(i + 1) != Some(BigInt::from(expected)) {
            return fail(format!("cycle EGF coefficient {} is off", i + 1));
        }
    }
    Ok(())
}

fn check_pde(order: usize) -> Check {
    let f = TrivariateTruncation::from_tree_statistics(order).map_err(|e| e.to_string())?;
    if !f.vanishes_at_z_zero() {
        return fail("F(x, y, 0) != 0".to_string());
    }
    let residual = f.pde_residual();
    if !residual.is_zero() {
        return fail(format!("PDE residual at order {order} is {residual}"));
    }
    Ok(())
}

fn check_euler_powers() -> Check {
    for m in 1..=5 {
        if !euler_power_identity(m, 11).map_err(|e| e.to_string())? {
            return fail(format!("power identity fails at exponent {m}"));
        }
    }
    Ok(())
}

fn check_f2_chain() -> Check {
    if !f2_identity_check(12).map_err(|e| e.to_string())? {
        return fail("the length-two chain does not close".to_string());
    }
    let f2 = f2_series(10).map_err(|e| e.to_string())?;
    for s in 3..=10 {
        let expected = BigInt::from(rl_reference(s, 2));
        if f2.egf_integer(s) != Some(expected) {
            return fail(format!("f2 coefficient at order {s} is off"));
        }
    }
    Ok(())
}

fn check_level_totals(n_max: usize, mode: LrRuleMode) -> Check {
    // an injected rule fault must be visible here too
    for level in eco_lr_levels_with_mode(n_max, mode).map_err(|e| e.to_string())? {
        if level.total() != BigUint::from(tree_count(level.size())) {
            return fail(format!(
                "lr level {} totals {}, expected {}",
                level.size(),
                level.total(),
                tree_count(level.size())
            ));
        }
    }
    for level in eco_rl_levels(n_max).map_err(|e| e.to_string())? {
        if level.total() != BigUint::from(tree_count(level.size())) {
            return fail(format!(
                "rl level {} totals {}, expected {}",
                level.size(),
                level.total(),
                tree_count(level.size())
            ));
        }
    }
    Ok(())
}

fn check_rl_labels(n_max: usize) -> Check {
    for level in eco_rl_levels(n_max).map_err(|e| e.to_string())? {
        for (label, _) in level.labels() {
            if label.unary != label.size + 1 - 2 * label.leaves {
                return fail(format!("label {label:?} carries an inconsistent unary count"));
            }
            if label.end == MaxPathEnd::Unary && label.unary == 0 {
                return fail(format!("class-A label {label:?} has no unary node"));
            }
        }
    }
    Ok(())
}

fn check_g_polynomials(levels: &[Vec<IncreasingTree>]) -> Check {
    let (mut class_a, mut class_b) = g_seed();
    for n in 1..=levels.len() {
        let (brute_a, brute_b) = brute_stat_polynomials(n).map_err(|e| e.to_string())?;
        if class_a != brute_a || class_b != brute_b {
            return fail(format!("recursion polynomials diverge at size {n}"));
        }
        if class_a.terms().any(|(_, c)| c.is_negative())
            || class_b.terms().any(|(_, c)| c.is_negative())
        {
            return fail(format!("negative coefficient at size {n}"));
        }
        let next = g_step(&class_a, &class_b).map_err(|e| e.to_string())?;
        class_a = next.0;
        class_b = next.1;
    }
    Ok(())
}

fn check_first_columns(n_max: usize) -> Check {
    let numbers = euler_numbers(n_max).map_err(|e| e.to_string())?;
    let rl = brute_table(Statistic::RightToLeftMinima, n_max).map_err(|e| e.to_string())?;
    let lr = brute_table(Statistic::LeftToRightMinima, n_max).map_err(|e| e.to_string())?;
    for n in 1..=n_max {
        let e_n = numbers[n - 1].to_biguint().expect("nonnegative");
        if rl.get(n, 1) != e_n {
            return fail(format!("rl column 1 at size {n} is not the Euler number"));
        }
        if n >= 2 {
            let e_prev = numbers[n - 2].to_biguint().expect("nonnegative");
            if lr.get(n, 2) != e_prev {
                return fail(format!(
                    "lr column 2 at size {n} is not the shifted Euler number"
                ));
            }
        }
    }
    Ok(())
}

fn check_cross_engines(n_max: usize, mode: LrRuleMode) -> Check {
    let report = cross_check_with_lr_mode(n_max, mode).map_err(|e| e.to_string())?;
    match report.discrepancy {
        None => Ok(()),
        Some(diff) => fail(diff.to_string()),
    }
}

fn check_cycle_shift(n_max: usize) -> Check {
    let cap = 8.min(n_max.saturating_sub(2));
    for k in 1..=cap {
        let scanned = cycle_up_down_cycle_count(k).map_err(|e| e.to_string())?;
        let expected = rl_reference(k + 2, 2);
        if scanned != expected {
            return fail(format!(
                "cycle scan at size {k} gives {scanned}, table says {expected}"
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_at_small_bound() {
        let report = run_verification(6, None).unwrap();
        for outcome in &report.outcomes {
            assert!(outcome.passed, "{}: {}", outcome.name, outcome.detail);
        }
    }

    #[test]
    fn suite_is_vacuous_but_passing_at_size_one() {
        let report = run_verification(1, None).unwrap();
        assert!(report.all_passed());
    }

    #[test]
    fn injected_fault_is_caught_and_located() {
        let report = run_verification(5, Some(FaultInjection::EcoLrOvercount)).unwrap();
        assert!(!report.all_passed());
        let failing: Vec<&str> = report
            .outcomes
            .iter()
            .filter(|o| !o.passed)
            .map(|o| o.name)
            .collect();
        assert!(failing.contains(&"cross-engine-agreement"));
        assert!(failing.contains(&"eco-level-totals"));
        let cross = report
            .outcomes
            .iter()
            .find(|o| o.name == "cross-engine-agreement")
            .expect("present");
        assert!(cross.detail.contains("(2, 1)"), "{}", cross.detail);
    }
}
