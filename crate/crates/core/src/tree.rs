//! Binary increasing trees and their statistics.
//!
//! A binary increasing tree on `n` nodes is a rooted, un-ordered tree whose
//! nodes carry the labels `1..=n`, every node has at most two children, and
//! labels strictly increase along every root-to-leaf path (so label 1 is the
//! root). Trees are stored as a parent map; plane drawings are a derived
//! value, see [`OrderedDrawing`].

use std::fmt;

use thiserror::Error;

/// Default cap on enumeration size (about 2.7 million trees at size 12).
pub const DEFAULT_SIZE_BOUND: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("requested size {requested} exceeds the enumeration bound {bound}")]
    SizeBoundExceeded { requested: usize, bound: usize },
    #[error("node {child} has parent {parent}, but parents must carry smaller labels")]
    ParentNotSmaller { child: usize, parent: usize },
    #[error("node {label} would have more than two children")]
    OutdegreeExceeded { label: usize },
    #[error("size must be at least 1")]
    EmptySize,
}

/// Which side an only child hangs on when a tree is drawn in the plane.
///
/// Both conventions place the smaller of two siblings on the left; they
/// differ only on nodes with a single child.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// An only child is drawn on the right of its parent.
    Standard,
    /// An only child is drawn on the left of its parent.
    LeftOriented,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orientation::Standard => write!(f, "standard"),
            Orientation::LeftOriented => write!(f, "left-oriented"),
        }
    }
}

/// Whether the max-path of a tree stops at a node with one child or at a
/// leaf. The distinction matters for the succession rules: only a path ending
/// at a unary node can be extended by a later insertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MaxPathEnd {
    /// Terminal node of the max-path has exactly one child (class A).
    Unary,
    /// Terminal node of the max-path is a leaf (class B).
    Leaf,
}

impl fmt::Display for MaxPathEnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaxPathEnd::Unary => write!(f, "A"),
            MaxPathEnd::Leaf => write!(f, "B"),
        }
    }
}

/// A binary increasing tree, stored as the parent of each label `2..=n`.
///
/// Two trees are equal exactly when their parent maps are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncreasingTree {
    /// `parents[i]` is the parent label of label `i + 2`.
    parents: Vec<usize>,
}

impl IncreasingTree {
    /// The unique tree with a single node.
    pub fn singleton() -> Self {
        IncreasingTree { parents: Vec::new() }
    }

    /// Builds a tree from the parent of each label `2..=n` (index 0 holds the
    /// parent of label 2). Fails if some parent is not smaller than its child
    /// or some node would get more than two children.
    pub fn from_parents(parents: Vec<usize>) -> Result<Self, TreeError> {
        let n = parents.len() + 1;
        let mut outdegree = vec![0usize; n + 1];
        for (i, &p) in parents.iter().enumerate() {
            let child = i + 2;
            if p == 0 || p >= child {
                return Err(TreeError::ParentNotSmaller { child, parent: p });
            }
            outdegree[p] += 1;
            if outdegree[p] > 2 {
                return Err(TreeError::OutdegreeExceeded { label: p });
            }
        }
        Ok(IncreasingTree { parents })
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        self.parents.len() + 1
    }

    /// Parent of `label`, or `None` for the root.
    pub fn parent(&self, label: usize) -> Option<usize> {
        if label >= 2 && label <= self.size() {
            Some(self.parents[label - 2])
        } else {
            None
        }
    }

    /// The parent of each label `2..=n`, in label order.
    pub fn parent_map(&self) -> &[usize] {
        &self.parents
    }

    /// Children of `label` in ascending label order.
    pub fn children(&self, label: usize) -> Vec<usize> {
        self.parents
            .iter()
            .enumerate()
            .filter(|&(_, &p)| p == label)
            .map(|(i, _)| i + 2)
            .collect()
    }

    /// Children of every label, indexed by `label - 1`, each list ascending.
    pub fn child_table(&self) -> Vec<Vec<usize>> {
        let mut table = vec![Vec::new(); self.size()];
        for (i, &p) in self.parents.iter().enumerate() {
            table[p - 1].push(i + 2);
        }
        table
    }

    pub fn outdegree(&self, label: usize) -> usize {
        self.parents.iter().filter(|&&p| p == label).count()
    }

    /// All trees obtained by attaching a node labelled `n + 1` below a node
    /// with fewer than two children, in ascending order of the attachment
    /// label. A tree with `o` leaves and `p` unary nodes has exactly `o + p`
    /// successors, pairwise distinct.
    pub fn successors(&self) -> Vec<IncreasingTree> {
        let n = self.size();
        let mut outdegree = vec![0usize; n + 1];
        for &p in &self.parents {
            outdegree[p] += 1;
        }
        (1..=n)
            .filter(|&label| outdegree[label] < 2)
            .map(|label| {
                let mut parents = self.parents.clone();
                parents.push(label);
                IncreasingTree { parents }
            })
            .collect()
    }

    /// Node counts, path lengths and the max-path class, all in one pass.
    pub fn statistics(&self) -> TreeStatistics {
        let n = self.size();
        let mut outdegree = vec![0usize; n + 1];
        for &p in &self.parents {
            outdegree[p] += 1;
        }
        let leaves = (1..=n).filter(|&v| outdegree[v] == 0).count();
        let unary = (1..=n).filter(|&v| outdegree[v] == 1).count();
        let binary = n - leaves - unary;
        let min_path_len = self.min_path().len();
        let max_path = self.max_path();
        let end = if outdegree[*max_path.last().expect("max-path is nonempty")] == 1 {
            MaxPathEnd::Unary
        } else {
            MaxPathEnd::Leaf
        };
        TreeStatistics {
            size: n,
            leaves,
            unary,
            binary,
            min_path_len,
            max_path_len: max_path.len(),
            end,
        }
    }

    /// Labels on the walk that starts at the root and always descends to the
    /// least-labelled child, ending at a leaf.
    pub fn min_path(&self) -> Vec<usize> {
        let table = self.child_table();
        let mut path = vec![1];
        let mut current = 1;
        while let Some(&next) = table[current - 1].first() {
            path.push(next);
            current = next;
        }
        path
    }

    /// Labels on the walk that starts at the root and descends to the
    /// largest-labelled child, but only while the current node has two
    /// children. The terminal node (with zero or one child) is included.
    ///
    /// Note the asymmetry with [`min_path`](Self::min_path): a unary node
    /// stops this walk.
    pub fn max_path(&self) -> Vec<usize> {
        let table = self.child_table();
        let mut path = vec![1];
        let mut current = 1;
        while table[current - 1].len() == 2 {
            let next = table[current - 1][1];
            path.push(next);
            current = next;
        }
        path
    }

    /// Class of the tree: where its max-path stops.
    pub fn max_path_end(&self) -> MaxPathEnd {
        let terminal = *self.max_path().last().expect("max-path is nonempty");
        if self.outdegree(terminal) == 1 {
            MaxPathEnd::Unary
        } else {
            MaxPathEnd::Leaf
        }
    }

    /// True when no node has exactly one child.
    pub fn is_strictly_binary(&self) -> bool {
        let n = self.size();
        let mut outdegree = vec![0usize; n + 1];
        for &p in &self.parents {
            outdegree[p] += 1;
        }
        (1..=n).all(|v| outdegree[v] != 1)
    }

    /// The unique plane drawing of this tree under the given orientation.
    pub fn drawing(&self, orientation: Orientation) -> OrderedDrawing {
        let table = self.child_table();
        let slots = table
            .iter()
            .map(|children| match children.as_slice() {
                [] => (None, None),
                [only] => match orientation {
                    Orientation::Standard => (None, Some(*only)),
                    Orientation::LeftOriented => (Some(*only), None),
                },
                [small, large] => (Some(*small), Some(*large)),
                _ => unreachable!("outdegree is at most two"),
            })
            .collect();
        OrderedDrawing { orientation, slots }
    }
}

impl fmt::Display for IncreasingTree {
    /// Compact parent-map notation: `[p2,p3,...,pn]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parents.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Node counts and path statistics of one tree.
///
/// For every tree: `leaves = binary + 1`, `leaves + unary + binary = size`,
/// and `unary = size - 2 * leaves + 1`. The `unary` count is the parameter
/// the max-path succession rules recurse on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeStatistics {
    pub size: usize,
    /// Nodes with no children.
    pub leaves: usize,
    /// Nodes with exactly one child.
    pub unary: usize,
    /// Nodes with two children.
    pub binary: usize,
    /// Length of the min-path; equals the number of left-to-right minima of
    /// the permutation read off the left-oriented drawing.
    pub min_path_len: usize,
    /// Length of the max-path; equals the number of right-to-left minima of
    /// the same permutation.
    pub max_path_len: usize,
    /// Where the max-path stops.
    pub end: MaxPathEnd,
}

/// A binary increasing tree drawn in the plane: each node has a left and a
/// right child slot, filled according to an [`Orientation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedDrawing {
    orientation: Orientation,
    /// `slots[label - 1]` is the `(left, right)` pair of child labels.
    slots: Vec<(Option<usize>, Option<usize>)>,
}

impl OrderedDrawing {
    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn size(&self) -> usize {
        self.slots.len()
    }

    pub fn left_child(&self, label: usize) -> Option<usize> {
        self.slots[label - 1].0
    }

    pub fn right_child(&self, label: usize) -> Option<usize> {
        self.slots[label - 1].1
    }
}

/// All binary increasing trees with `n` nodes under the default size bound.
///
/// Successive levels are produced by attaching the next label below every
/// node with fewer than two children, so each tree of size `n + 1` appears
/// exactly once; order is deterministic.
pub fn enumerate_trees(n: usize) -> Result<Vec<IncreasingTree>, TreeError> {
    enumerate_trees_bounded(n, DEFAULT_SIZE_BOUND)
}

/// Same as [`enumerate_trees`] with an explicit size cap.
pub fn enumerate_trees_bounded(n: usize, bound: usize) -> Result<Vec<IncreasingTree>, TreeError> {
    if n == 0 {
        return Err(TreeError::EmptySize);
    }
    if n > bound {
        return Err(TreeError::SizeBoundExceeded {
            requested: n,
            bound,
        });
    }
    let mut level = vec![IncreasingTree::singleton()];
    for _ in 1..n {
        level = level.iter().flat_map(IncreasingTree::successors).collect();
    }
    Ok(level)
}

/// All levels `1..=n` at once, sharing the level-by-level growth.
pub fn enumerate_levels(n: usize, bound: usize) -> Result<Vec<Vec<IncreasingTree>>, TreeError> {
    if n == 0 {
        return Err(TreeError::EmptySize);
    }
    if n > bound {
        return Err(TreeError::SizeBoundExceeded {
            requested: n,
            bound,
        });
    }
    let mut levels = vec![vec![IncreasingTree::singleton()]];
    for _ in 1..n {
        let next = levels
            .last()
            .expect("at least one level")
            .iter()
            .flat_map(IncreasingTree::successors)
            .collect();
        levels.push(next);
    }
    Ok(levels)
}
