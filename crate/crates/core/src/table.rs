//! Count tables indexed by `(size, statistic value)`, tagged with the engine
//! that produced them.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use num::{BigUint, Zero};
use serde_json::{json, Value};

/// Which permutation statistic a table counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Statistic {
    LeftToRightMinima,
    RightToLeftMinima,
}

impl Statistic {
    pub fn tag(self) -> &'static str {
        match self {
            Statistic::LeftToRightMinima => "lr",
            Statistic::RightToLeftMinima => "rl",
        }
    }

    /// Column symbol used in pretty headers.
    pub fn column_symbol(self) -> char {
        match self {
            Statistic::LeftToRightMinima => 'm',
            Statistic::RightToLeftMinima => 'r',
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Statistic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lr" => Ok(Statistic::LeftToRightMinima),
            "rl" => Ok(Statistic::RightToLeftMinima),
            other => Err(format!("unknown statistic {other:?}, expected lr or rl")),
        }
    }
}

/// Which route produced a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Engine {
    /// Exhaustive tree enumeration; the ground truth the others are compared
    /// against.
    Brute,
    /// Level-by-level succession-rule expansion.
    Eco,
    /// Coefficient extraction from exact generating functions.
    Series,
    /// The class-A/class-B polynomial recursion (max-path statistic only).
    Recursion,
}

impl Engine {
    pub fn tag(self) -> &'static str {
        match self {
            Engine::Brute => "brute",
            Engine::Eco => "eco",
            Engine::Series => "series",
            Engine::Recursion => "recursion",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "brute" => Ok(Engine::Brute),
            "eco" => Ok(Engine::Eco),
            "series" => Ok(Engine::Series),
            "recursion" => Ok(Engine::Recursion),
            other => Err(format!(
                "unknown engine {other:?}, expected brute, eco, series or recursion"
            )),
        }
    }
}

/// A triangle of exact counts: `entries[(n, s)]` is the number of objects of
/// size `n` whose statistic equals `s`. Only nonzero entries are stored; a
/// table may declare that it covers only statistic values up to `stat_bound`
/// (the series route for the max-path statistic covers columns 1 and 2 only).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    statistic: Statistic,
    engine: Engine,
    n_max: usize,
    stat_bound: Option<usize>,
    entries: BTreeMap<(usize, usize), BigUint>,
}

impl CountTable {
    pub fn new(statistic: Statistic, engine: Engine, n_max: usize) -> Self {
        CountTable {
            statistic,
            engine,
            n_max,
            stat_bound: None,
            entries: BTreeMap::new(),
        }
    }

    /// Restricts the columns this table claims to cover.
    pub fn with_stat_bound(mut self, bound: usize) -> Self {
        self.stat_bound = Some(bound);
        self
    }

    pub fn statistic(&self) -> Statistic {
        self.statistic
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn stat_bound(&self) -> Option<usize> {
        self.stat_bound
    }

    /// True when this table covers the given statistic column.
    pub fn covers(&self, stat: usize) -> bool {
        self.stat_bound.is_none_or(|b| stat <= b)
    }

    pub fn add(&mut self, n: usize, stat: usize, count: BigUint) {
        assert!(n >= 1 && stat >= 1, "indices are 1-based");
        if count.is_zero() {
            return;
        }
        *self.entries.entry((n, stat)).or_default() += count;
    }

    /// Count at `(n, stat)`; absent entries are zero.
    pub fn get(&self, n: usize, stat: usize) -> BigUint {
        self.entries.get(&(n, stat)).cloned().unwrap_or_default()
    }

    pub fn row_sum(&self, n: usize) -> BigUint {
        self.entries
            .range((n, 0)..=(n, usize::MAX))
            .map(|(_, c)| c)
            .sum()
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (&(usize, usize), &BigUint)> {
        self.entries.iter()
    }

    /// First cell where the two tables disagree, scanning rows then columns
    /// and skipping columns not covered by both; `None` means agreement.
    pub fn first_difference(&self, other: &CountTable) -> Option<TableDiff> {
        let n_max = self.n_max.min(other.n_max);
        for n in 1..=n_max {
            for stat in 1..=n_max {
                if !self.covers(stat) || !other.covers(stat) {
                    continue;
                }
                let left = self.get(n, stat);
                let right = other.get(n, stat);
                if left != right {
                    return Some(TableDiff {
                        size: n,
                        stat,
                        left,
                        right,
                    });
                }
            }
        }
        None
    }

    fn stat_limit(&self) -> usize {
        self.stat_bound.map_or(self.n_max, |b| b.min(self.n_max))
    }

    /// CSV with header `n,stat,count,engine`, rows by ascending size then
    /// ascending statistic, zeros included up to the printed bound.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,stat,count,engine\n");
        for n in 1..=self.n_max {
            for stat in 1..=self.stat_limit() {
                let _ = writeln!(out, "{n},{stat},{},{}", self.get(n, stat), self.engine);
            }
        }
        out
    }

    /// JSON value with counts as decimal strings (entries can exceed what a
    /// double, and hence many JSON consumers, can hold exactly).
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = (1..=self.n_max)
            .flat_map(|n| {
                (1..=self.stat_limit()).map(move |stat| {
                    json!({
                        "n": n,
                        "stat": stat,
                        "count": self.get(n, stat).to_string(),
                    })
                })
            })
            .collect();
        json!({
            "statistic": self.statistic.tag(),
            "engine": self.engine.tag(),
            "n_max": self.n_max,
            "stat_bound": self.stat_bound,
            "entries": entries,
        })
    }

    /// Plain-text triangle, rows by size, columns by statistic value.
    pub fn to_pretty(&self) -> String {
        let limit = self.stat_limit();
        let header: Vec<String> = (1..=limit).map(|s| s.to_string()).collect();
        let corner = format!("n/{}", self.statistic.column_symbol());
        let mut width = corner.len().max(1);
        for cell in &header {
            width = width.max(cell.len());
        }
        for count in self.entries.values() {
            width = width.max(count.to_string().len());
        }
        width += 2;
        let mut out = String::new();
        let _ = write!(out, "{corner:>width$}");
        for cell in &header {
            let _ = write!(out, "{cell:>width$}");
        }
        out.push('\n');
        for n in 1..=self.n_max {
            let _ = write!(out, "{n:>width$}");
            for stat in 1..=limit {
                let cell = self.get(n, stat).to_string();
                let _ = write!(out, "{cell:>width$}");
            }
            out.push('\n');
        }
        out
    }
}

/// One disagreeing cell between two tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDiff {
    pub size: usize,
    pub stat: usize,
    pub left: BigUint,
    pub right: BigUint,
}
