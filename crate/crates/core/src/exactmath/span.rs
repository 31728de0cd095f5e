use std::collections::{BTreeMap, BTreeSet};

use super::matrix::{bareiss_echelon, integerize, Matrix};
use super::scalar::ExactField;
use crate::error::{Error, Result};

/// Exact rank of a family of sparse vectors.
pub fn rank_of<K: Ord + Clone, F: ExactField>(vectors: &[BTreeMap<K, F>]) -> usize {
    let index = key_index(vectors);
    let mut rows = dense_integer_rows(vectors, &index);
    bareiss_echelon(&mut rows, index.len()).len()
}

fn key_index<K: Ord + Clone, F>(vectors: &[BTreeMap<K, F>]) -> Vec<K> {
    let keys: BTreeSet<&K> = vectors.iter().flat_map(|v| v.keys()).collect();
    keys.into_iter().cloned().collect()
}

fn dense_integer_rows<K: Ord, F: ExactField>(
    vectors: &[BTreeMap<K, F>],
    index: &[K],
) -> Vec<Vec<F::Int>> {
    let pos: BTreeMap<&K, usize> = index.iter().enumerate().map(|(i, k)| (k, i)).collect();
    vectors
        .iter()
        .map(|v| {
            let mut row = vec![F::zero(); index.len()];
            for (k, c) in v {
                row[pos[k]] = c.clone();
            }
            integerize(&row)
        })
        .collect()
}

/// A linearly independent family of sparse vectors, prepared for repeated coordinate
/// solves. A square subsystem on pivot keys is selected once; every solve is then checked
/// against the full vectors, so a target outside the span is always detected.
#[derive(Clone, Debug)]
pub struct SpanBasis<K: Ord, F> {
    vectors: Vec<BTreeMap<K, F>>,
    pivot_keys: Vec<K>,
    system: Matrix<F>,
}

impl<K: Ord + Clone, F: ExactField> SpanBasis<K, F> {
    pub fn new(vectors: Vec<BTreeMap<K, F>>) -> Result<Self> {
        let index = key_index(&vectors);
        let mut rows = dense_integer_rows(&vectors, &index);
        // eliminate on the transpose-free layout: rows are the vectors, so pivot columns are keys
        let pivots = bareiss_echelon(&mut rows, index.len());
        if pivots.len() < vectors.len() {
            return Err(Error::DependentFamily { rank: pivots.len(), len: vectors.len() });
        }
        let pivot_keys: Vec<K> = pivots.iter().map(|&c| index[c].clone()).collect();
        let system_rows = pivot_keys
            .iter()
            .map(|k| vectors.iter().map(|v| v.get(k).cloned().unwrap_or_else(F::zero)).collect())
            .collect();
        let system = Matrix::from_rows(system_rows)?;
        Ok(SpanBasis { vectors, pivot_keys, system })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[BTreeMap<K, F>] {
        &self.vectors
    }

    /// Unique coordinates of `target`, or `None` when it lies outside the span.
    pub fn coordinates(&self, target: &BTreeMap<K, F>) -> Option<Vec<F>> {
        if self.vectors.is_empty() {
            return target.values().all(|c| c.is_zero()).then(Vec::new);
        }
        let rhs: Vec<F> = self
            .pivot_keys
            .iter()
            .map(|k| target.get(k).cloned().unwrap_or_else(F::zero))
            .collect();
        let coords = self.system.solve(&rhs).ok()??;
        let mut residual: BTreeMap<K, F> = target.clone();
        for (v, c) in self.vectors.iter().zip(&coords) {
            if c.is_zero() {
                continue;
            }
            for (k, a) in v {
                let e = residual.entry(k.clone()).or_insert_with(F::zero);
                *e = e.clone() - a.clone() * c.clone();
            }
        }
        residual.values().all(|c| c.is_zero()).then_some(coords)
    }
}
