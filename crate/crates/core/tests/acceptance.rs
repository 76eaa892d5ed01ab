//! Acceptance suite: every headline claim of the crate, checked end to end
//! with exact integer equality and explicit time budgets. One PASS/FAIL line
//! is printed per criterion (run with `--nocapture` to see them on success).

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num::{BigInt, BigUint, Signed, Zero};

use andre_core::counting::{brute_table, eco_lr_expand, eco_rl_expand, g_table, series_lr_table};
use andre_core::perm::{
    andre_set, cycle_up_down_cycle_count, in_res, phi, phi_collapse, phi_inverse, res_set,
    Permutation,
};
use andre_core::reference::{lr_reference, rl_reference, CYCLE_UP_DOWN_CYCLES, EULER, RES_5};
use andre_core::series::{
    cycle_egf, euler_numbers, euler_power_identity, f2_identity_check, f2_series,
    TrivariateTruncation,
};
use andre_core::tree::enumerate_trees;
use andre_core::{CountTable, Orientation, Statistic};

fn criterion<F>(number: usize, description: &str, budget: Option<Duration>, body: F)
where
    F: FnOnce() -> Result<(), String>,
{
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let over_budget = budget.filter(|limit| elapsed > *limit);
    match (&result, over_budget) {
        (Ok(()), None) => {
            println!("acceptance {number:02} PASS ({elapsed:.2?}) — {description}");
        }
        (Ok(()), Some(limit)) => {
            println!(
                "acceptance {number:02} FAIL ({elapsed:.2?}) — {description}: exceeded the {limit:?} budget"
            );
            panic!("criterion {number} exceeded its {limit:?} budget ({elapsed:.2?})");
        }
        (Err(detail), _) => {
            println!("acceptance {number:02} FAIL ({elapsed:.2?}) — {description}: {detail}");
            panic!("criterion {number} failed: {detail}");
        }
    }
}

fn check_lr_table(table: &CountTable) -> Result<(), String> {
    for n in 2..=10 {
        for m in 2..=10 {
            let expected = BigUint::from(lr_reference(n, m));
            let got = table.get(n, m);
            if got != expected {
                return Err(format!(
                    "{} entry ({n}, {m}) is {got}, expected {expected}",
                    table.engine()
                ));
            }
        }
    }
    Ok(())
}

fn check_rl_table(table: &CountTable) -> Result<(), String> {
    for n in 1..=10 {
        for r in 1..=10 {
            let expected = BigUint::from(rl_reference(n, r));
            let got = table.get(n, r);
            if got != expected {
                return Err(format!(
                    "{} entry ({n}, {r}) is {got}, expected {expected}",
                    table.engine()
                ));
            }
        }
    }
    Ok(())
}

#[test]
fn criterion_01_lr_triangle_by_three_engines() {
    criterion(
        1,
        "left-to-right minima triangle (2 <= m <= n <= 10) by brute force, succession rule and series",
        Some(Duration::from_secs(60)),
        || {
            let brute =
                brute_table(Statistic::LeftToRightMinima, 10).map_err(|e| e.to_string())?;
            let eco = eco_lr_expand(10).map_err(|e| e.to_string())?;
            let series = series_lr_table(10).map_err(|e| e.to_string())?;
            check_lr_table(&brute)?;
            check_lr_table(&eco)?;
            check_lr_table(&series)?;
            Ok(())
        },
    );
}

#[test]
fn criterion_02_rl_triangle_by_three_engines() {
    criterion(
        2,
        "right-to-left minima triangle (1 <= n <= 10) by brute force, succession rules and recursion",
        Some(Duration::from_secs(120)),
        || {
            let brute =
                brute_table(Statistic::RightToLeftMinima, 10).map_err(|e| e.to_string())?;
            let eco = eco_rl_expand(10).map_err(|e| e.to_string())?;
            let recursion = g_table(10).map_err(|e| e.to_string())?;
            check_rl_table(&brute)?;
            check_rl_table(&eco)?;
            check_rl_table(&recursion)?;
            Ok(())
        },
    );
}

#[test]
fn criterion_03_euler_sequence() {
    criterion(3, "Euler number sequence through index 12", None, || {
        let numbers = euler_numbers(12).map_err(|e| e.to_string())?;
        let expected: Vec<BigInt> = EULER[..12].iter().map(|&v| BigInt::from(v)).collect();
        if numbers != expected {
            return Err(format!("got {numbers:?}"));
        }
        // prefix cross-checked against column 1 of the right-to-left table
        for n in 1..=9 {
            if numbers[n - 1] != BigInt::from(rl_reference(n, 1)) {
                return Err(format!("index {n} disagrees with the rl column"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_04_res5_extensional() {
    criterion(4, "the sixteen size-5 restrictions, extensionally", None, || {
        let got: BTreeSet<Permutation> = res_set(5)
            .map_err(|e| e.to_string())?
            .into_iter()
            .collect();
        let want: BTreeSet<Permutation> = RES_5
            .iter()
            .map(|p| Permutation::new(p.to_vec()).expect("literal"))
            .collect();
        if got != want {
            return Err(format!("enumerated {} permutations: {got:?}", got.len()));
        }
        Ok(())
    });
}

#[test]
fn criterion_05_minima_propositions() {
    criterion(
        5,
        "minima statistics equal the path label sets for every tree of size at most 9",
        Some(Duration::from_secs(30)),
        || {
            for n in 1..=9 {
                for tree in enumerate_trees(n).map_err(|e| e.to_string())? {
                    let pi = phi(&tree.drawing(Orientation::LeftOriented));
                    let min_path: BTreeSet<usize> = tree.min_path().into_iter().collect();
                    let max_path: BTreeSet<usize> = tree.max_path().into_iter().collect();
                    if pi.lr_minima() != min_path {
                        return Err(format!("left-to-right minima of {pi} off at tree {tree}"));
                    }
                    if pi.rl_minima() != max_path {
                        return Err(format!("right-to-left minima of {pi} off at tree {tree}"));
                    }
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_06_non_inclusion_witness() {
    criterion(
        6,
        "3 2 6 5 1 4 is a restriction but not an André permutation",
        None,
        || {
            let pi = Permutation::new(vec![3, 2, 6, 5, 1, 4]).expect("literal");
            if !in_res(&pi) {
                return Err("not recognized as a restriction".to_string());
            }
            if andre_set(6).map_err(|e| e.to_string())?.contains(&pi) {
                return Err("wrongly contained in the André class".to_string());
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_07_pde_residual() {
    criterion(
        7,
        "the brute-force trivariate series satisfies its PDE exactly at order 8",
        None,
        || {
            let f = TrivariateTruncation::from_tree_statistics(8).map_err(|e| e.to_string())?;
            if !f.vanishes_at_z_zero() {
                return Err("F(x, y, 0) != 0".to_string());
            }
            let residual = f.pde_residual();
            if !residual.is_zero() {
                return Err(format!("residual {residual}"));
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_08_euler_power_identity() {
    criterion(
        8,
        "powers of the Euler EGF reproduce the table columns (exponents 1..=5, order 11)",
        None,
        || {
            for m in 1..=5 {
                if !euler_power_identity(m, 11).map_err(|e| e.to_string())? {
                    return Err(format!("fails at exponent {m}"));
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_09_cycle_up_down_equinumerosity() {
    criterion(
        9,
        "cycle counts of cycle-up-down permutations match the shifted rl column and the EGF",
        Some(Duration::from_secs(10)),
        || {
            for n in 1..=8 {
                let scanned = cycle_up_down_cycle_count(n).map_err(|e| e.to_string())?;
                let expected = rl_reference(n + 2, 2);
                if scanned != expected {
                    return Err(format!("scan at size {n}: {scanned} vs {expected}"));
                }
            }
            let egf = cycle_egf(12).map_err(|e| e.to_string())?;
            for (i, &expected) in CYCLE_UP_DOWN_CYCLES.iter().enumerate() {
                if egf.egf_integer(i + 1) != Some(BigInt::from(expected)) {
                    return Err(format!("EGF coefficient {} is off", i + 1));
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_10_f2_chain() {
    criterion(
        10,
        "the length-two decomposition chain closes and matches the rl column 2",
        None,
        || {
            if !f2_identity_check(12).map_err(|e| e.to_string())? {
                return Err("identity chain broken".to_string());
            }
            let f2 = f2_series(10).map_err(|e| e.to_string())?;
            for s in 3..=10 {
                let got = f2.egf(s);
                if got.is_negative() || !got.is_integer() {
                    return Err(format!("coefficient at order {s} is not a count"));
                }
                if f2.egf_integer(s) != Some(BigInt::from(rl_reference(s, 2))) {
                    return Err(format!("order {s}: {got} vs {}", rl_reference(s, 2)));
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_11_round_trips() {
    criterion(
        11,
        "permutation-tree round trips and collapse/traversal agreement for sizes at most 9",
        None,
        || {
            for n in 1..=9 {
                for tree in enumerate_trees(n).map_err(|e| e.to_string())? {
                    for orientation in [Orientation::Standard, Orientation::LeftOriented] {
                        let drawing = tree.drawing(orientation);
                        let pi = phi(&drawing);
                        if phi_collapse(&drawing) != pi {
                            return Err(format!("collapse off for {tree} ({orientation})"));
                        }
                        match phi_inverse(&pi, orientation) {
                            Ok(back) if back == tree => {}
                            Ok(back) => {
                                return Err(format!(
                                    "{tree} ({orientation}) came back as {back}"
                                ))
                            }
                            Err(e) => {
                                return Err(format!("{tree} ({orientation}) failed: {e}"))
                            }
                        }
                    }
                }
            }
            Ok(())
        },
    );
}
