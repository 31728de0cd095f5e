use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer partition, parts weakly decreasing and positive. The empty partition is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped, so `(1, 0)` is accepted as `(1)`.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn num_cols(&self) -> usize {
        self.part(0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        Partition((0..self.num_cols()).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Column lengths, left to right.
    pub fn column_lengths(&self) -> Vec<usize> {
        self.conjugate().0
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.num_rows() <= self.num_rows() && other.0.iter().enumerate().all(|(i, &p)| p <= self.part(i))
    }

    pub fn is_rectangle(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// Smallest rectangle containing the shape.
    pub fn rectangle_hull(&self) -> Partition {
        Partition::rectangle(self.num_rows(), self.num_cols())
    }

    /// Cells `(row, col)`, 0-based, in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// All partitions of `n` in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions fitting inside a `rows x cols` box.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn rec(row: usize, rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if row == rows {
                out.push(Partition::new(cur.clone()).expect("weakly decreasing by construction"));
                return;
            }
            for p in 0..=max {
                cur.push(p);
                rec(row + 1, rows, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(0, rows, cols, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn hook_length_count(&self) -> u128 {
        let conj = self.conjugate();
        let n = self.size() as u128;
        let mut num: u128 = (1..=n).product();
        let mut hooks: Vec<u128> = self
            .cells()
            .map(|(r, c)| (self.part(r) - c - 1 + conj.part(c) - r - 1 + 1) as u128)
            .collect();
        // divide as we go to stay well inside u128
        hooks.sort_unstable();
        for h in hooks {
            num /= h;
        }
        num
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::MalformedTableau(format!("bad shape {s:?}: {e}")))?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}
