use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use super::tableau::Tableau;
use crate::error::{Error, Result};

/// A standard filling of the skew shape `outer / inner` with `n+1..=|outer|`, where
/// `n = |inner|` and `outer` is a rectangle.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Filling {
    inner: Partition,
    outer: Partition,
    /// `(row, col)` (0-based) to value.
    cells: BTreeMap<(usize, usize), u32>,
}

fn check_shapes(inner: &Partition, outer: &Partition) -> Result<()> {
    if !outer.is_rectangle() {
        return Err(Error::NotRectangular(outer.parts().to_vec()));
    }
    if !outer.contains(inner) {
        return Err(Error::ShapeContainment { inner: inner.parts().to_vec(), outer: outer.parts().to_vec() });
    }
    Ok(())
}

fn skew_cells(inner: &Partition, outer: &Partition) -> Vec<(usize, usize)> {
    outer.cells().filter(|&(r, c)| c >= inner.part(r)).collect()
}

impl Filling {
    /// Validates a filling given cell by cell.
    pub fn new(inner: Partition, outer: Partition, cells: BTreeMap<(usize, usize), u32>) -> Result<Self> {
        check_shapes(&inner, &outer)?;
        let skew = skew_cells(&inner, &outer);
        let n = inner.size() as u32;
        let mut values: Vec<u32> = cells.values().copied().collect();
        values.sort_unstable();
        let expected: Vec<u32> = (n + 1..=outer.size() as u32).collect();
        if cells.len() != skew.len() || !skew.iter().all(|c| cells.contains_key(c)) {
            return Err(Error::InvalidFilling("cells do not cover the skew shape".into()));
        }
        if values != expected {
            return Err(Error::InvalidFilling(format!("values must be exactly {}..={}", n + 1, outer.size())));
        }
        for (&(r, c), &v) in &cells {
            let right = cells.get(&(r, c + 1));
            let below = cells.get(&(r + 1, c));
            if right.is_some_and(|&w| w <= v) || below.is_some_and(|&w| w <= v) {
                return Err(Error::InvalidFilling(format!("entries must increase away from cell ({r},{c})")));
            }
        }
        Ok(Filling { inner, outer, cells })
    }

    /// Default filling: skew cells numbered column by column, left to right and top to
    /// bottom. `outer` defaults to the smallest rectangle containing `inner`.
    pub fn canonical(inner: &Partition, outer: Option<&Partition>) -> Result<Self> {
        let outer = outer.cloned().unwrap_or_else(|| inner.rectangle_hull());
        check_shapes(inner, &outer)?;
        let mut skew = skew_cells(inner, &outer);
        skew.sort_by_key(|&(r, c)| (c, r));
        Self::numbered(inner.clone(), outer, skew)
    }

    /// Skew cells numbered row by row.
    pub fn row_major(inner: &Partition, outer: Option<&Partition>) -> Result<Self> {
        let outer = outer.cloned().unwrap_or_else(|| inner.rectangle_hull());
        check_shapes(inner, &outer)?;
        let skew = skew_cells(inner, &outer);
        Self::numbered(inner.clone(), outer, skew)
    }

    fn numbered(inner: Partition, outer: Partition, order: Vec<(usize, usize)>) -> Result<Self> {
        let n = inner.size() as u32;
        let cells = order.into_iter().zip(n + 1..).collect();
        Filling::new(inner, outer, cells)
    }

    /// Every standard filling of the skew shape.
    pub fn all(inner: &Partition, outer: Option<&Partition>) -> Result<Vec<Self>> {
        let outer = outer.cloned().unwrap_or_else(|| inner.rectangle_hull());
        check_shapes(inner, &outer)?;
        let rows = outer.num_rows();
        let mut filled: Vec<usize> = (0..rows).map(|r| inner.part(r)).collect();
        let mut order = Vec::new();
        let mut out = Vec::new();
        all_rec(&outer, &mut filled, &mut order, &mut |ord| {
            out.push(Self::numbered(inner.clone(), outer.clone(), ord.to_vec()).expect("standard by construction"));
        });
        Ok(out)
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    /// `n = |inner|`.
    pub fn n(&self) -> usize {
        self.inner.size()
    }

    /// `N = |outer|`.
    pub fn total(&self) -> usize {
        self.outer.size()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &BTreeMap<(usize, usize), u32> {
        &self.cells
    }

    /// Values in column `j`, top to bottom.
    pub fn column_values(&self, j: usize) -> Vec<u32> {
        self.cells.iter().filter(|((_, c), _)| *c == j).map(|(_, &v)| v).collect::<Vec<_>>()
    }

    /// Row labels (1-based) of the values `n+1..=N`, in order of value.
    pub fn labels(&self) -> Vec<u32> {
        let mut by_value: Vec<(u32, u32)> = self.cells.iter().map(|(&(r, _), &v)| (v, r as u32 + 1)).collect();
        by_value.sort_unstable();
        by_value.into_iter().map(|(_, l)| l).collect()
    }

    /// Attaches the filling to a tableau of shape `inner` given in Young column order,
    /// producing a tableau of shape `outer`.
    pub fn complete(&self, t: &Tableau) -> Result<Tableau> {
        let lens = self.inner.column_lengths();
        if t.column_lengths() != lens {
            return Err(Error::MalformedTableau(format!(
                "expected column lengths {lens:?}, got {:?}",
                t.column_lengths()
            )));
        }
        let columns = (0..self.outer.num_cols())
            .map(|j| {
                let mut col = t.columns().get(j).cloned().unwrap_or_default();
                col.extend(self.column_values(j));
                col
            })
            .collect();
        Tableau::new(columns)
    }

    /// Removes the filling from a tableau of shape `outer`, returning the `inner`-shaped
    /// tableau in Young column order. Fails unless every filling column sits at the bottom
    /// of some column of `t`.
    pub fn strip(&self, t: &Tableau) -> Result<Tableau> {
        let n = self.n() as u32;
        let lens = self.inner.column_lengths();
        let p = self.outer.num_rows();
        if t.columns().len() != self.outer.num_cols() || t.columns().iter().any(|c| c.len() != p) {
            return Err(Error::FillingDisagreement);
        }
        let mut slots: Vec<Option<Vec<u32>>> = vec![None; lens.len()];
        let mut full = Vec::new();
        for c in t.columns() {
            let split = c.partition_point(|&v| v <= n);
            let (head, tail) = c.split_at(split);
            if tail.is_empty() {
                full.push(head.to_vec());
                continue;
            }
            let j = (0..self.outer.num_cols())
                .find(|&j| self.column_values(j) == tail)
                .ok_or(Error::FillingDisagreement)?;
            if head.is_empty() {
                continue;
            }
            if j >= slots.len() || slots[j].is_some() {
                return Err(Error::FillingDisagreement);
            }
            slots[j] = Some(head.to_vec());
        }
        let mut full = full.into_iter();
        let columns: Option<Vec<Vec<u32>>> = slots
            .into_iter()
            .zip(&lens)
            .map(|(s, &len)| if len == p { full.next() } else { s })
            .collect();
        let columns = columns.ok_or(Error::FillingDisagreement)?;
        if full.next().is_some() {
            return Err(Error::FillingDisagreement);
        }
        Tableau::new(columns)
    }

    /// `t` (of shape `outer`) carries the filling.
    pub fn agrees(&self, t: &Tableau) -> bool {
        self.strip(t).is_ok()
    }
}

fn all_rec(
    outer: &Partition,
    filled: &mut Vec<usize>,
    order: &mut Vec<(usize, usize)>,
    emit: &mut dyn FnMut(&[(usize, usize)]),
) {
    let width = outer.num_cols();
    let mut done = true;
    for r in 0..filled.len() {
        if filled[r] < width {
            done = false;
            if r == 0 || filled[r - 1] > filled[r] {
                order.push((r, filled[r]));
                filled[r] += 1;
                all_rec(outer, filled, order, emit);
                filled[r] -= 1;
                order.pop();
            }
        }
    }
    if done {
        emit(order);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn canonical_is_column_major() {
        let f = Filling::canonical(&p(&[3, 1, 1]), None).unwrap();
        assert_eq!(f.outer(), &p(&[3, 3, 3]));
        assert_eq!(f.column_values(1), vec![6, 7]);
        assert_eq!(f.column_values(2), vec![8, 9]);
        assert_eq!(f.labels(), vec![2, 3, 2, 3]);
    }

    #[test]
    fn row_major_variant() {
        let f = Filling::row_major(&p(&[3, 1, 1]), None).unwrap();
        assert_eq!(f.column_values(1), vec![6, 8]);
        assert_eq!(f.column_values(2), vec![7, 9]);
    }

    #[test]
    fn fillings_increase_by_scan() {
        for n in 0..=6 {
            for lam in Partition::all(n) {
                for f in Filling::all(&lam, None).unwrap() {
                    for (&(r, c), &v) in f.cells() {
                        if let Some(&w) = f.cells().get(&(r, c + 1)) {
                            assert!(w > v);
                        }
                        if let Some(&w) = f.cells().get(&(r + 1, c)) {
                            assert!(w > v);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn empty_when_rectangular() {
        assert!(Filling::canonical(&p(&[2, 2]), None).unwrap().is_empty());
        assert!(Filling::canonical(&p(&[1]), None).unwrap().is_empty());
        assert!(Filling::canonical(&Partition::empty(), None).unwrap().is_empty());
    }

    #[test]
    fn containment_errors() {
        assert!(matches!(
            Filling::canonical(&p(&[3]), Some(&p(&[2, 2]))),
            Err(Error::ShapeContainment { .. })
        ));
        assert!(matches!(Filling::canonical(&p(&[1]), Some(&p(&[2, 1]))), Err(Error::NotRectangular(_))));
    }

    #[test]
    fn complete_then_strip() {
        let f = Filling::canonical(&p(&[2, 1, 1]), None).unwrap();
        let t = Tableau::new(vec![vec![1, 2, 4], vec![3]]).unwrap();
        let full = f.complete(&t).unwrap();
        assert_eq!(full.columns(), &[vec![1, 2, 4], vec![3, 5, 6]]);
        assert_eq!(f.strip(&full).unwrap(), t);
        let bad = Tableau::new(vec![vec![1, 2, 5], vec![3, 4, 6]]).unwrap();
        assert!(!f.agrees(&bad));
    }

    #[test]
    fn counts_of_skew_fillings() {
        // (2,1) in a 2x2 box: one cell; (1) in 2x2: two fillings
        assert_eq!(Filling::all(&p(&[2, 1]), None).unwrap().len(), 1);
        assert_eq!(Filling::all(&p(&[1]), Some(&p(&[2, 2]))).unwrap().len(), 2);
        assert_eq!(Filling::all(&p(&[3, 1, 1]), None).unwrap().len(), 2);
    }

    #[test]
    fn wider_box_completion() {
        let f = Filling::canonical(&p(&[1]), Some(&p(&[2, 2]))).unwrap();
        let full = f.complete(&Tableau::new(vec![vec![1]]).unwrap()).unwrap();
        assert_eq!(full.columns(), &[vec![1, 2], vec![3, 4]]);
        assert_eq!(f.strip(&full).unwrap(), Tableau::new(vec![vec![1]]).unwrap());
    }
}
