//! Permutations and the maps connecting them to binary increasing trees.
//!
//! A drawn tree is read off as a permutation in symmetric order (left subtree,
//! node, right subtree); [`phi_collapse`] implements the equivalent
//! leaf-collapse procedure and is kept as a differential-test reference.
//! Reading left-oriented drawings produces exactly the permutations that are
//! restrictions of strictly-binary André permutations; reading standard
//! drawings produces the André permutations themselves.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

use crate::tree::{
    enumerate_trees, IncreasingTree, OrderedDrawing, Orientation, TreeError,
};

/// Brute-force cap for the cycle-up-down scan over all of S_n.
pub const CYCLE_BRUTE_BOUND: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("entries {0:?} are not a permutation of 1..=n")]
    NotAPermutation(Vec<usize>),
    #[error("cannot parse {0:?} as one-line notation")]
    Parse(String),
    #[error("restriction level {k} out of range 1..={n}")]
    RestrictionOutOfRange { k: usize, n: usize },
    #[error("cycle-up-down counting scans all of S_n; size {requested} exceeds {bound}")]
    CycleBoundExceeded { requested: usize, bound: usize },
}

/// Why a permutation cannot come from a drawing of the given orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ViolationKind {
    #[error("an only child sits on the wrong side")]
    OnlyChildMisplaced,
    #[error("the left sibling subtree must contain the smaller minimum")]
    SiblingsOutOfOrder,
}

/// Failure of [`phi_inverse`], carrying the factor at which the slot rules
/// broke down.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{orientation} slot rules violated at factor {factor:?}: {kind}")]
pub struct SlotRuleViolation {
    pub orientation: Orientation,
    pub kind: ViolationKind,
    pub factor: Vec<usize>,
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<usize>,
}

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self, PermError> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        if n == 0 {
            return Err(PermError::NotAPermutation(entries));
        }
        for &v in &entries {
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotAPermutation(entries));
            }
            seen[v] = true;
        }
        Ok(Permutation { entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// The subsequence formed by the values `1..=k`, itself a permutation of
    /// `1..=k`.
    pub fn restriction(&self, k: usize) -> Result<Permutation, PermError> {
        let n = self.size();
        if k == 0 || k > n {
            return Err(PermError::RestrictionOutOfRange { k, n });
        }
        Ok(Permutation {
            entries: self.entries.iter().copied().filter(|&v| v <= k).collect(),
        })
    }

    /// Values that are smaller than everything to their left. Always contains
    /// the first entry and the value 1.
    pub fn lr_minima(&self) -> BTreeSet<usize> {
        let mut minima = BTreeSet::new();
        let mut best = usize::MAX;
        for &v in &self.entries {
            if v < best {
                minima.insert(v);
                best = v;
            }
        }
        minima
    }

    /// Values that are smaller than everything to their right. Always contains
    /// the last entry and the value 1.
    pub fn rl_minima(&self) -> BTreeSet<usize> {
        let mut minima = BTreeSet::new();
        let mut best = usize::MAX;
        for &v in self.entries.iter().rev() {
            if v < best {
                minima.insert(v);
                best = v;
            }
        }
        minima
    }
}

impl fmt::Display for Permutation {
    /// Space-separated one-line notation, e.g. `3 2 5 1 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let entries: Result<Vec<usize>, _> = s.split_whitespace().map(str::parse).collect();
        match entries {
            Ok(entries) => Permutation::new(entries),
            Err(_) => Err(PermError::Parse(s.to_string())),
        }
    }
}

/// Reads a drawing in symmetric order: left subtree, node, right subtree.
pub fn phi(drawing: &OrderedDrawing) -> Permutation {
    fn walk(d: &OrderedDrawing, label: usize, out: &mut Vec<usize>) {
        if let Some(left) = d.left_child(label) {
            walk(d, left, out);
        }
        out.push(label);
        if let Some(right) = d.right_child(label) {
            walk(d, right, out);
        }
    }
    let mut out = Vec::with_capacity(drawing.size());
    walk(drawing, 1, &mut out);
    Permutation::new(out).expect("symmetric order visits every label exactly once")
}

/// The literal collapse procedure: every leaf merges into its parent, whose
/// written label receives the left child's sequence on the left and the right
/// child's on the right; rounds repeat until a single node carries the whole
/// permutation. Agrees with [`phi`] on every drawing.
pub fn phi_collapse(drawing: &OrderedDrawing) -> Permutation {
    let n = drawing.size();
    let mut seq: Vec<Option<Vec<usize>>> = (1..=n).map(|l| Some(vec![l])).collect();
    let mut left: Vec<Option<usize>> = (1..=n).map(|l| drawing.left_child(l)).collect();
    let mut right: Vec<Option<usize>> = (1..=n).map(|l| drawing.right_child(l)).collect();
    let mut parent: Vec<usize> = vec![0; n + 1];
    for l in 1..=n {
        if let Some(c) = left[l - 1] {
            parent[c] = l;
        }
        if let Some(c) = right[l - 1] {
            parent[c] = l;
        }
    }
    loop {
        let round: Vec<usize> = (2..=n)
            .filter(|&l| seq[l - 1].is_some() && left[l - 1].is_none() && right[l - 1].is_none())
            .collect();
        if round.is_empty() {
            break;
        }
        for l in round {
            let p = parent[l];
            let piece = seq[l - 1].take().expect("leaf not yet collapsed");
            let target = seq[p - 1].as_mut().expect("parent still present");
            if left[p - 1] == Some(l) {
                let mut merged = piece;
                merged.extend(target.iter().copied());
                *target = merged;
                left[p - 1] = None;
            } else {
                target.extend(piece);
                right[p - 1] = None;
            }
        }
    }
    Permutation::new(seq[0].take().expect("root carries the result"))
        .expect("collapse preserves the label set")
}

/// Rebuilds the tree whose drawing reads as `pi`: the minimum of each factor
/// becomes the subtree root, the pieces left and right of it become its
/// subtrees. Fails when a factor shape is impossible under the orientation's
/// slot rules: a lone subtree on the wrong side, or two subtrees whose minima
/// are out of order.
pub fn phi_inverse(
    pi: &Permutation,
    orientation: Orientation,
) -> Result<IncreasingTree, SlotRuleViolation> {
    let n = pi.size();
    let mut parents = vec![0usize; n.saturating_sub(1)];
    build_subtree(pi.entries(), orientation, &mut parents)?;
    Ok(IncreasingTree::from_parents(parents)
        .expect("factor decomposition yields a valid increasing tree"))
}

fn build_subtree(
    factor: &[usize],
    orientation: Orientation,
    parents: &mut [usize],
) -> Result<usize, SlotRuleViolation> {
    let (pos, &root) = factor
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .expect("factor is nonempty");
    let left = &factor[..pos];
    let right = &factor[pos + 1..];
    let violation = |kind| SlotRuleViolation {
        orientation,
        kind,
        factor: factor.to_vec(),
    };
    match (left.is_empty(), right.is_empty()) {
        (true, true) => {}
        (true, false) => {
            if orientation == Orientation::LeftOriented {
                return Err(violation(ViolationKind::OnlyChildMisplaced));
            }
            let child = build_subtree(right, orientation, parents)?;
            parents[child - 2] = root;
        }
        (false, true) => {
            if orientation == Orientation::Standard {
                return Err(violation(ViolationKind::OnlyChildMisplaced));
            }
            let child = build_subtree(left, orientation, parents)?;
            parents[child - 2] = root;
        }
        (false, false) => {
            let left_min = *left.iter().min().expect("nonempty");
            let right_min = *right.iter().min().expect("nonempty");
            if left_min > right_min {
                return Err(violation(ViolationKind::SiblingsOutOfOrder));
            }
            let a = build_subtree(left, orientation, parents)?;
            let b = build_subtree(right, orientation, parents)?;
            parents[a - 2] = root;
            parents[b - 2] = root;
        }
    }
    Ok(root)
}

/// True when `pi` is a restriction of some strictly-binary André permutation,
/// i.e. when it reads off a left-oriented drawing.
pub fn in_res(pi: &Permutation) -> bool {
    phi_inverse(pi, Orientation::LeftOriented).is_ok()
}

/// All restrictions of strictly-binary André permutations of size `n`,
/// in tree-enumeration order.
pub fn res_set(n: usize) -> Result<Vec<Permutation>, TreeError> {
    Ok(enumerate_trees(n)?
        .iter()
        .map(|t| phi(&t.drawing(Orientation::LeftOriented)))
        .collect())
}

/// All André permutations of the second kind of size `n` (images of standard
/// drawings), in tree-enumeration order.
pub fn andre_set(n: usize) -> Result<Vec<Permutation>, TreeError> {
    Ok(enumerate_trees(n)?
        .iter()
        .map(|t| phi(&t.drawing(Orientation::Standard)))
        .collect())
}

/// The André permutations coming from strictly binary trees. Empty for even
/// `n`: a tree without unary nodes has odd size.
pub fn strict_andre_set(n: usize) -> Result<Vec<Permutation>, TreeError> {
    Ok(enumerate_trees(n)?
        .iter()
        .filter(|t| t.is_strictly_binary())
        .map(|t| phi(&t.drawing(Orientation::Standard)))
        .collect())
}

/// For `pi` in the restriction class, produces a strictly-binary André
/// permutation restricting to `pi`: every unary node of the left-oriented
/// tree of `pi` receives one fresh child, labels `n+1, n+2, ...` assigned in
/// ascending host order.
pub fn extension_witness(pi: &Permutation) -> Result<Permutation, SlotRuleViolation> {
    let tree = phi_inverse(pi, Orientation::LeftOriented)?;
    let n = tree.size();
    let mut parents = tree.parent_map().to_vec();
    for host in (1..=n).filter(|&v| tree.outdegree(v) == 1) {
        parents.push(host);
    }
    let extended =
        IncreasingTree::from_parents(parents).expect("completing unary nodes keeps the tree valid");
    debug_assert!(extended.is_strictly_binary());
    Ok(phi(&extended.drawing(Orientation::Standard)))
}

/// Total number of cycles over all cycle-up-down permutations of size `n`,
/// by scanning S_n. A permutation is cycle-up-down when each cycle, written
/// from its smallest element, alternates rise, fall, rise, ...
pub fn cycle_up_down_cycle_count(n: usize) -> Result<u64, PermError> {
    if n == 0 || n > CYCLE_BRUTE_BOUND {
        return Err(PermError::CycleBoundExceeded {
            requested: n,
            bound: CYCLE_BRUTE_BOUND,
        });
    }
    let mut total = 0u64;
    for image in (1..=n).permutations(n) {
        if let Some(cycles) = cycle_up_down_cycles(&image) {
            total += cycles;
        }
    }
    Ok(total)
}

/// Number of cycles if `image` (the one-line notation of a permutation) is
/// cycle-up-down, else `None`.
fn cycle_up_down_cycles(image: &[usize]) -> Option<u64> {
    let n = image.len();
    let mut visited = vec![false; n + 1];
    let mut cycles = 0u64;
    for start in 1..=n {
        if visited[start] {
            continue;
        }
        // Scanning starts in ascending order, so `start` is the smallest
        // element of its cycle.
        let mut cycle = vec![start];
        visited[start] = true;
        let mut current = image[start - 1];
        while current != start {
            visited[current] = true;
            cycle.push(current);
            current = image[current - 1];
        }
        let alternates = cycle
            .windows(2)
            .enumerate()
            .all(|(i, w)| if i % 2 == 0 { w[0] < w[1] } else { w[0] > w[1] });
        if !alternates {
            return None;
        }
        cycles += 1;
    }
    Some(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::{ANDRE_4, RES_5};
    use std::collections::BTreeSet;

    fn perm(entries: &[usize]) -> Permutation {
        Permutation::new(entries.to_vec()).unwrap()
    }

    /// The 14-node tree used as the running example: edges toward the root
    /// are 2,3 -> 1; 4,12 -> 3; 5 -> 2; 6,8 -> 5; 7,9 -> 6; 10 -> 9;
    /// 11 -> 7; 13,14 -> 4.
    fn example_tree() -> IncreasingTree {
        IncreasingTree::from_parents(vec![1, 1, 3, 2, 5, 6, 5, 6, 9, 7, 3, 4, 4]).unwrap()
    }

    const EXAMPLE_PERM: [usize; 14] = [11, 7, 6, 10, 9, 5, 8, 2, 1, 13, 4, 14, 3, 12];

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![]).is_err());
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![2, 3]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
    }

    #[test]
    fn one_line_notation_round_trip() {
        let p: Permutation = "3 2 5 1 4".parse().unwrap();
        assert_eq!(p, perm(&[3, 2, 5, 1, 4]));
        assert_eq!(p.to_string(), "3 2 5 1 4");
        assert!("3 2 x".parse::<Permutation>().is_err());
        assert!("3 2".parse::<Permutation>().is_err());
    }

    #[test]
    fn phi_of_singleton() {
        let t = IncreasingTree::singleton();
        assert_eq!(phi(&t.drawing(Orientation::Standard)), perm(&[1]));
    }

    #[test]
    fn phi_images_of_size_four_trees() {
        let got: BTreeSet<Permutation> = andre_set(4).unwrap().into_iter().collect();
        let want: BTreeSet<Permutation> = ANDRE_4.iter().map(|p| perm(p)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn left_oriented_reading_of_the_example_tree() {
        let t = example_tree();
        let pi = phi(&t.drawing(Orientation::LeftOriented));
        assert_eq!(pi, perm(&EXAMPLE_PERM));
        assert_eq!(phi_collapse(&t.drawing(Orientation::LeftOriented)), pi);
    }

    #[test]
    fn example_minima_match_the_paths() {
        let t = example_tree();
        let pi = perm(&EXAMPLE_PERM);
        assert_eq!(
            pi.lr_minima(),
            BTreeSet::from([11, 7, 6, 5, 2, 1]),
        );
        assert_eq!(pi.rl_minima(), BTreeSet::from([1, 3, 12]));
        assert_eq!(t.min_path(), vec![1, 2, 5, 6, 7, 11]);
        assert_eq!(t.max_path(), vec![1, 3, 12]);
    }

    #[test]
    fn minima_of_the_identity() {
        let id = perm(&[1, 2, 3, 4, 5, 6]);
        assert_eq!(id.lr_minima(), BTreeSet::from([1]));
        assert_eq!(id.rl_minima(), BTreeSet::from([1, 2, 3, 4, 5, 6]));
    }

    #[test]
    fn restriction_examples() {
        let p = perm(&[3, 2, 6, 5, 7, 1, 4]);
        assert_eq!(p.restriction(6).unwrap(), perm(&[3, 2, 6, 5, 1, 4]));
        assert_eq!(p.restriction(7).unwrap(), p);
        assert_eq!(perm(&[2, 4, 1, 3]).restriction(2).unwrap(), perm(&[2, 1]));
        assert!(p.restriction(0).is_err());
        assert!(p.restriction(8).is_err());
    }

    #[test]
    fn phi_inverse_round_trips_on_singletons() {
        for orientation in [Orientation::Standard, Orientation::LeftOriented] {
            let t = phi_inverse(&perm(&[1]), orientation).unwrap();
            assert_eq!(t, IncreasingTree::singleton());
        }
    }

    #[test]
    fn phi_inverse_recovers_the_example_tree() {
        let t = phi_inverse(&perm(&EXAMPLE_PERM), Orientation::LeftOriented).unwrap();
        assert_eq!(t, example_tree());
    }

    #[test]
    fn identity_is_not_left_oriented() {
        let err = phi_inverse(&perm(&[1, 2, 3, 4, 5]), Orientation::LeftOriented).unwrap_err();
        assert_eq!(err.kind, ViolationKind::OnlyChildMisplaced);
        assert_eq!(err.factor, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn res_membership_examples() {
        assert!(in_res(&perm(&[3, 2, 5, 1, 4])));
        assert!(in_res(&perm(&[2, 1, 4, 3, 5])));
        assert!(in_res(&perm(&[3, 2, 6, 5, 1, 4])));
        assert!(!in_res(&perm(&[1, 2, 3, 4, 5])));
    }

    #[test]
    fn res_five_matches_the_expected_sixteen() {
        let got: BTreeSet<Permutation> = res_set(5).unwrap().into_iter().collect();
        assert_eq!(got.len(), 16);
        let want: BTreeSet<Permutation> = RES_5.iter().map(|p| perm(p)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn res_sizes_follow_tree_counts() {
        assert_eq!(res_set(1).unwrap(), vec![perm(&[1])]);
        assert_eq!(res_set(6).unwrap().len(), 61);
    }

    #[test]
    fn strict_andre_sets() {
        assert_eq!(strict_andre_set(3).unwrap(), vec![perm(&[2, 1, 3])]);
        // sizes of the strictly binary classes: zero at even sizes
        let sizes: Vec<usize> = (1..=9)
            .map(|n| strict_andre_set(n).unwrap().len())
            .collect();
        assert_eq!(sizes, vec![1, 0, 1, 0, 4, 0, 34, 0, 496]);
    }

    #[test]
    fn restriction_witness_from_the_definitions() {
        // (3 2 6 5 1 4) restricts a strictly-binary André permutation of size
        // 7 but is itself not André.
        let p = perm(&[3, 2, 6, 5, 1, 4]);
        assert!(in_res(&p));
        assert!(!andre_set(6).unwrap().contains(&p));
    }

    #[test]
    fn extension_witness_examples() {
        assert_eq!(extension_witness(&perm(&[1])).unwrap(), perm(&[1]));
        let w = extension_witness(&perm(&[2, 1])).unwrap();
        assert_eq!(w, perm(&[2, 1, 3]));
        assert_eq!(w.restriction(2).unwrap(), perm(&[2, 1]));
        let w = extension_witness(&perm(&[3, 2, 6, 5, 1, 4])).unwrap();
        assert_eq!(w, perm(&[3, 2, 6, 5, 7, 1, 4]));
        assert!(extension_witness(&perm(&[1, 2, 3])).is_err());
    }

    #[test]
    fn cycle_up_down_counts() {
        assert_eq!(cycle_up_down_cycle_count(1).unwrap(), 1);
        assert_eq!(cycle_up_down_cycle_count(2).unwrap(), 3);
        assert_eq!(cycle_up_down_cycle_count(3).unwrap(), 10);
        assert_eq!(cycle_up_down_cycle_count(4).unwrap(), 38);
        assert!(cycle_up_down_cycle_count(10).is_err());
        assert!(cycle_up_down_cycle_count(0).is_err());
    }

    #[test]
    fn collapse_matches_traversal_on_small_sizes() {
        for n in 1..=6 {
            for t in enumerate_trees(n).unwrap() {
                for orientation in [Orientation::Standard, Orientation::LeftOriented] {
                    let d = t.drawing(orientation);
                    assert_eq!(phi(&d), phi_collapse(&d), "tree {t} {orientation}");
                }
            }
        }
    }
}
