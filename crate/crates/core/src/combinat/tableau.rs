use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::pairs::{check_part, noncrossing_pair_unchecked};
use super::partition::Partition;
use super::reading::Reading;
use crate::error::{Error, Result};

/// An ordered list of columns, each strictly increasing. Columns need not be disjoint,
/// which lets the same type carry semistandard fillings and bitableau halves.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Tableau {
    columns: Vec<Vec<u32>>,
}

/// Colexicographic comparison of equal-length parts: decided at the largest differing index.
pub fn colex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

/// Canonical column order: longer first, then colex ascending.
fn column_order(a: &Vec<u32>, b: &Vec<u32>) -> Ordering {
    b.len().cmp(&a.len()).then_with(|| colex_cmp(a, b))
}

impl Tableau {
    pub fn new(columns: Vec<Vec<u32>>) -> Result<Self> {
        for c in &columns {
            if c.is_empty() {
                return Err(Error::MalformedTableau("empty column".into()));
            }
            check_part(c)?;
        }
        Ok(Tableau { columns })
    }

    /// Builds a tableau from the rows of a Young diagram filling.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::MalformedTableau("row lengths must weakly decrease".into()));
        }
        let width = rows.first().map_or(0, Vec::len);
        let columns = (0..width)
            .map(|j| rows.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect())
            .collect();
        Tableau::new(columns)
    }

    pub fn empty() -> Self {
        Tableau { columns: Vec::new() }
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<Vec<u32>> {
        self.columns
    }

    pub fn column_lengths(&self) -> Vec<usize> {
        self.columns.iter().map(Vec::len).collect()
    }

    /// Number of entries.
    pub fn size(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// All entries, sorted, with repetition.
    pub fn entries(&self) -> Vec<u32> {
        let mut e: Vec<u32> = self.columns.iter().flatten().copied().collect();
        e.sort_unstable();
        e
    }

    pub fn max_entry(&self) -> u32 {
        self.columns.iter().flatten().copied().max().unwrap_or(0)
    }

    /// The partition whose conjugate is the multiset of column lengths.
    pub fn shape(&self) -> Partition {
        let mut lens = self.column_lengths();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lens).expect("sorted lengths").conjugate()
    }

    /// Column lengths weakly decrease left to right.
    pub fn has_young_shape(&self) -> bool {
        self.columns.windows(2).all(|w| w[0].len() >= w[1].len())
    }

    /// Entries are exactly `1..=N` without repetition.
    pub fn is_set_partition(&self) -> bool {
        let e = self.entries();
        e.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Columns reordered: longer first, equal lengths in colex order.
    pub fn canonical(&self) -> Tableau {
        let mut columns = self.columns.clone();
        columns.sort_by(column_order);
        Tableau { columns }
    }

    pub fn is_canonical(&self) -> bool {
        self.columns.windows(2).all(|w| column_order(&w[0], &w[1]) != Ordering::Greater)
    }

    /// Rows of the Young diagram view (top row first).
    pub fn rows(&self) -> Vec<Vec<u32>> {
        let height = self.columns.iter().map(Vec::len).max().unwrap_or(0);
        (0..height)
            .map(|r| self.columns.iter().filter_map(|c| c.get(r).copied()).collect())
            .collect()
    }

    /// Young shape and rows weakly increasing left to right.
    pub fn is_semistandard(&self) -> bool {
        self.has_young_shape()
            && self.columns.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(b, a)| a <= b))
    }

    /// A semistandard set partition of `1..=N`.
    pub fn is_standard(&self) -> bool {
        self.is_set_partition() && self.is_semistandard()
    }

    /// Every pair of columns is non-crossing in the given order.
    pub fn is_noncrossing(&self) -> bool {
        let c = &self.columns;
        (0..c.len()).all(|i| (i + 1..c.len()).all(|j| noncrossing_pair_unchecked(&c[i], &c[j])))
    }

    /// A non-crossing set partition of `1..=N` with Young shape.
    pub fn is_nct(&self) -> bool {
        self.is_set_partition() && self.has_young_shape() && self.is_noncrossing()
    }

    /// Reading: each point labelled by its row.
    pub fn reading(&self) -> Result<Reading> {
        if !self.is_set_partition() {
            return Err(Error::MalformedTableau("reading needs a set partition of 1..N".into()));
        }
        let mut labels = vec![0u32; self.size()];
        for c in &self.columns {
            for (r, &v) in c.iter().enumerate() {
                labels[v as usize - 1] = r as u32 + 1;
            }
        }
        Reading::new(labels)
    }

    /// Relabels entries through `f` and re-sorts every column, returning the sign of the
    /// column sorting permutations.
    pub fn relabel<F: Fn(u32) -> u32>(&self, f: F) -> Result<(Tableau, i32)> {
        let mut sign = 1;
        let mut columns = Vec::with_capacity(self.columns.len());
        for c in &self.columns {
            let mut col: Vec<u32> = c.iter().map(|&v| f(v)).collect();
            sign *= sort_sign(&mut col);
            if col.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::MalformedTableau(format!("relabelled column {col:?} repeats")));
            }
            columns.push(col);
        }
        Ok((Tableau { columns }, sign))
    }

    /// Text rendering as a Young diagram.
    pub fn render(&self) -> String {
        let width = self.max_entry().to_string().len();
        let mut out = String::new();
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Sorts in place and returns the sign of the sorting permutation.
pub fn sort_sign(v: &mut [u32]) -> i32 {
    let mut sign = 1;
    // insertion sort counts transpositions directly
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    sign
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self
            .columns
            .iter()
            .map(|c| {
                let s: Vec<String> = c.iter().map(ToString::to_string).collect();
                format!("({})", s.join(","))
            })
            .collect();
        write!(f, "{{{}}}", cols.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    #[serde(default)]
    shape: Option<Vec<usize>>,
    columns: Vec<Vec<u32>>,
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauRepr { shape: Some(self.shape().into()), columns: self.columns.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = TableauRepr::deserialize(d)?;
        let t = Tableau::new(repr.columns).map_err(serde::de::Error::custom)?;
        if let Some(shape) = repr.shape {
            let shape = Partition::new(shape).map_err(serde::de::Error::custom)?;
            if shape != t.shape() {
                return Err(serde::de::Error::custom(format!(
                    "declared shape {shape} does not match columns of shape {}",
                    t.shape()
                )));
            }
        }
        Ok(t)
    }
}

/// Distinct values in a tableau.
pub fn support(t: &Tableau) -> BTreeSet<u32> {
    t.columns.iter().flatten().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(cols: &[&[u32]]) -> Tableau {
        Tableau::new(cols.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn readings_by_definition() {
        assert_eq!(t(&[&[1, 2]]).reading().unwrap().labels(), &[1, 2]);
        assert_eq!(t(&[&[1, 3], &[2, 4]]).reading().unwrap().labels(), &[1, 1, 2, 2]);
        assert_eq!(t(&[&[1, 4], &[2, 3]]).reading().unwrap().labels(), &[1, 1, 2, 2]);
    }

    #[test]
    fn canonical_order() {
        let x = t(&[&[1, 4], &[5], &[2, 3]]).canonical();
        assert_eq!(x.columns(), &[vec![2, 3], vec![1, 4], vec![5]]);
        assert!(x.is_canonical());
    }

    #[test]
    fn standard_and_noncrossing() {
        let syt = t(&[&[1, 3], &[2, 4]]);
        assert!(syt.is_standard());
        assert!(!syt.is_nct());
        let nct = t(&[&[2, 3], &[1, 4]]);
        assert!(nct.is_nct());
        assert!(!nct.is_standard());
    }

    #[test]
    fn rows_roundtrip() {
        let x = t(&[&[1, 3, 5], &[2, 4]]);
        assert_eq!(x.rows(), vec![vec![1, 2], vec![3, 4], vec![5]]);
        assert_eq!(Tableau::from_rows(&x.rows()).unwrap(), x);
        assert_eq!(x.shape(), Partition::new(vec![2, 2, 1]).unwrap());
    }

    #[test]
    fn relabel_sign() {
        let (y, s) = t(&[&[1, 2]]).relabel(|v| 3 - v).unwrap();
        assert_eq!(y, t(&[&[1, 2]]));
        assert_eq!(s, -1);
    }

    #[test]
    fn json_roundtrip() {
        let x = t(&[&[1, 3], &[2]]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"shape":[2,1],"columns":[[1,3],[2]]}"#);
        assert_eq!(serde_json::from_str::<Tableau>(&s).unwrap(), x);
        assert!(serde_json::from_str::<Tableau>(r#"{"shape":[2],"columns":[[1,3],[2]]}"#).is_err());
        assert!(serde_json::from_str::<Tableau>(r#"{"columns":[[3,1]]}"#).is_err());
    }

    #[test]
    fn render_young_diagram() {
        assert_eq!(t(&[&[1, 3], &[2]]).render(), "1 2\n3\n");
    }
}
