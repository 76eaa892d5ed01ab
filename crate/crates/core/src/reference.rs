//! Frozen reference values the engines must reproduce.
//!
//! The two triangles were computed by exhaustive tree enumeration and are
//! cross-checked against the series and succession-rule engines by the test
//! suite; their row sums are the Euler numbers (OEIS A000111), and the second
//! column of the max-path triangle is OEIS A186367 (number of cycles in all
//! cycle-up-down permutations).

/// Euler numbers indexed from 1: `EULER[n-1]` is the number of binary
/// increasing trees with `n - 1` nodes, equivalently
/// `(n-1)! * [z^(n-1)] (sec z + tan z)`.
///
/// Prefix of OEIS A000111.
pub const EULER: [u64; 13] = [
    1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765,
];

/// Number of binary increasing trees with `n` nodes, `n = 1..=12`.
pub fn tree_count(n: usize) -> u64 {
    assert!((1..=12).contains(&n), "tree_count tabulated for n <= 12");
    EULER[n]
}

/// Triangle of counts by size and number of left-to-right minima.
///
/// `LR_TRIANGLE[i]` holds row `n = i + 2`; the entry at column offset `j`
/// counts permutations of size `n` that are restrictions of strictly-binary
/// André permutations and have exactly `m = j + 2` left-to-right minima.
/// Row `n` below the main diagonal is zero and is omitted.
pub const LR_TRIANGLE: [&[u64]; 9] = [
    &[1],
    &[1, 1],
    &[1, 3, 1],
    &[2, 7, 6, 1],
    &[5, 20, 25, 10, 1],
    &[16, 70, 105, 65, 15, 1],
    &[61, 287, 490, 385, 140, 21, 1],
    &[272, 1356, 2548, 2345, 1120, 266, 28, 1],
    &[1385, 7248, 14698, 15204, 8715, 2772, 462, 36, 1],
];

/// Triangle of counts by size and number of right-to-left minima.
///
/// `RL_TRIANGLE[i]` holds row `n = i + 1`; the entry at column offset `j`
/// is the count for exactly `r = j + 1` right-to-left minima. Trailing zero
/// columns are omitted.
pub const RL_TRIANGLE: [&[u64]; 10] = [
    &[1],
    &[1],
    &[1, 1],
    &[2, 3],
    &[5, 10, 1],
    &[16, 38, 7],
    &[61, 165, 45, 1],
    &[272, 812, 288, 13],
    &[1385, 4478, 1936, 136, 1],
    &[7936, 27408, 13836, 1320, 21],
];

/// Expected count for `(size, left-to-right minima)`; zero outside the
/// tabulated triangle.
pub fn lr_reference(n: usize, m: usize) -> u64 {
    if n == 1 && m == 1 {
        return 1;
    }
    if !(2..=10).contains(&n) || m < 2 {
        return 0;
    }
    let row = LR_TRIANGLE[n - 2];
    row.get(m - 2).copied().unwrap_or(0)
}

/// Expected count for `(size, right-to-left minima)`; zero outside the
/// tabulated triangle.
pub fn rl_reference(n: usize, r: usize) -> u64 {
    if !(1..=10).contains(&n) || r < 1 {
        return 0;
    }
    let row = RL_TRIANGLE[n - 1];
    row.get(r - 1).copied().unwrap_or(0)
}

/// Total number of cycles over all cycle-up-down permutations of size `n`,
/// `n = 1..=12` (prefix of OEIS A186367).
pub const CYCLE_UP_DOWN_CYCLES: [u64; 12] = [
    1,
    3,
    10,
    38,
    165,
    812,
    4478,
    27408,
    184529,
    1356256,
    10809786,
    92892928,
];

/// The sixteen restrictions of strictly-binary André permutations of size 5,
/// in one-line notation.
pub const RES_5: [[usize; 5]; 16] = [
    [3, 2, 5, 1, 4],
    [4, 2, 5, 1, 3],
    [2, 1, 4, 3, 5],
    [3, 2, 4, 1, 5],
    [5, 3, 2, 4, 1],
    [3, 2, 5, 4, 1],
    [4, 3, 2, 5, 1],
    [3, 2, 1, 5, 4],
    [4, 2, 1, 5, 3],
    [5, 2, 1, 4, 3],
    [4, 3, 2, 1, 5],
    [5, 3, 2, 1, 4],
    [5, 4, 2, 1, 3],
    [2, 1, 5, 4, 3],
    [4, 3, 5, 2, 1],
    [5, 4, 3, 2, 1],
];

/// The five André permutations of size 4 (images of all trees with 4 nodes
/// under the standard drawing).
pub const ANDRE_4: [[usize; 4]; 5] = [
    [2, 3, 1, 4],
    [1, 2, 3, 4],
    [2, 1, 3, 4],
    [1, 3, 2, 4],
    [2, 4, 1, 3],
];
