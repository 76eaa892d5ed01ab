//! Exact enumeration of binary increasing trees and of the permutations that
//! arise as restrictions of strictly-binary André permutations of the second
//! kind.
//!
//! Everything in this crate is exact: counts are arbitrary-precision integers,
//! series coefficients are arbitrary-precision rationals, and every quantity of
//! interest is computed by at least two independent routes that are compared
//! bit for bit.
//!
//! The main pieces:
//!
//! * [`tree`] — binary increasing trees, their recursive construction (attach
//!   the next label below any node with fewer than two children), and the
//!   statistics attached to them: leaf/unary/binary node counts, the min-path
//!   and the max-path.
//! * [`perm`] — the tree-to-permutation map (symmetric-order reading of a
//!   canonical drawing, equivalently the leaf-collapse procedure), its inverse,
//!   restrictions, minima statistics, and the cycle-up-down counting oracle.
//! * [`series`] — truncated power series over exact rationals: the Euler
//!   number generating function `sec z + tan z`, the bivariate
//!   `(1/(1-sin z))^y`, and the identities connecting them to the count
//!   tables.
//! * [`counting`] — succession-rule level expansion, the class-A/class-B
//!   polynomial recursion for the max-path statistic, brute-force tables, and
//!   the cross-checking harness.
//! * [`verify`] — a single driver that runs every invariant the crate promises
//!   and reports pass/fail per property.

pub mod counting;
pub mod perm;
pub mod reference;
pub mod series;
pub mod table;
pub mod tree;
pub mod verify;

pub use perm::Permutation;
pub use table::{CountTable, Engine, Statistic};
pub use tree::{IncreasingTree, MaxPathEnd, Orientation, OrderedDrawing, TreeStatistics};
