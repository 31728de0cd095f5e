//! Slow reference enumerations by exhaustive search and predicate filtering. They share no
//! construction code with the fast paths and serve as oracles in tests and verify suites.

use std::collections::BTreeSet;

use crate::combinat::{Partition, Tableau};

/// Every way to split `1..=n` into consecutive blocks of the given sizes (block order
/// matters, each block sorted).
pub fn ordered_set_partitions(n: u32, sizes: &[usize]) -> Vec<Vec<Vec<u32>>> {
    fn rec(rest: &[u32], sizes: &[usize], cur: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        let Some((&k, more)) = sizes.split_first() else {
            if rest.is_empty() {
                out.push(cur.clone());
            }
            return;
        };
        for block in subsets(rest, k) {
            let left: Vec<u32> = rest.iter().copied().filter(|v| !block.contains(v)).collect();
            cur.push(block);
            rec(&left, more, cur, out);
            cur.pop();
        }
    }
    let all: Vec<u32> = (1..=n).collect();
    let mut out = Vec::new();
    rec(&all, sizes, &mut Vec::new(), &mut out);
    out
}

/// All `k`-element subsets of `items`, each in increasing order.
pub fn subsets(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in subsets(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

fn tableaux_of_shape(lambda: &Partition) -> impl Iterator<Item = Tableau> {
    ordered_set_partitions(lambda.size() as u32, &lambda.column_lengths())
        .into_iter()
        .map(|cols| Tableau::new(cols).expect("sorted blocks"))
}

/// Standard Young tableaux: fillings whose rows increase.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    tableaux_of_shape(lambda)
        .filter(|t| t.rows().iter().all(|r| r.windows(2).all(|w| w[0] < w[1])))
        .collect()
}

/// Non-crossing tableaux under the filling-free pairwise definition, columns in canonical
/// order.
pub fn noncrossing_tableaux(lambda: &Partition) -> Vec<Tableau> {
    tableaux_of_shape(lambda).filter(|t| t.is_canonical() && t.is_noncrossing()).collect()
}

/// All compositions of `n` with positive parts and at most `max_parts` parts.
pub fn compositions(n: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max_parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() == max_parts {
            return;
        }
        for k in 1..=n {
            cur.push(k);
            rec(n - k, max_parts, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_parts, &mut Vec::new(), &mut out);
    out
}

/// All distinct arrangements of a multiset.
pub fn multiset_permutations(items: &[u32]) -> Vec<Vec<u32>> {
    let mut sorted = items.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next-permutation walk
    loop {
        let Some(i) = (1..sorted.len()).rev().find(|&i| sorted[i - 1] < sorted[i]) else {
            return out;
        };
        let j = (i..sorted.len()).rev().find(|&j| sorted[j] > sorted[i - 1]).expect("exists");
        sorted.swap(i - 1, j);
        sorted[i..].reverse();
        out.push(sorted.clone());
    }
}

fn value_multiset(weight: &[usize]) -> Vec<u32> {
    weight.iter().enumerate().flat_map(|(v, &w)| std::iter::repeat_n(v as u32 + 1, w)).collect()
}

/// Semistandard tableaux of the given shape and weight: every placement of the values,
/// kept when rows weakly and columns strictly increase.
pub fn semistandard_tableaux(lambda: &Partition, weight: &[usize]) -> Vec<Tableau> {
    let values = value_multiset(weight);
    if values.len() != lambda.size() {
        return Vec::new();
    }
    let cells: Vec<(usize, usize)> = lambda.cells().collect();
    let mut out = Vec::new();
    for arrangement in multiset_permutations(&values) {
        let mut rows: Vec<Vec<u32>> = lambda.parts().iter().map(|&l| vec![0; l]).collect();
        for (&(r, c), &v) in cells.iter().zip(&arrangement) {
            rows[r][c] = v;
        }
        let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(b, a)| a < b));
        if rows_ok && cols_ok {
            out.push(Tableau::from_rows(&rows).expect("checked"));
        }
    }
    out
}

/// Every column-strict filling of `lambda` with the given weight, as a set of columns in
/// canonical order.
pub fn column_strict_tableaux(lambda: &Partition, weight: &[usize]) -> Vec<Tableau> {
    let values = value_multiset(weight);
    if values.len() != lambda.size() {
        return Vec::new();
    }
    let lengths = lambda.column_lengths();
    let mut out = BTreeSet::new();
    for arrangement in multiset_permutations(&values) {
        let mut cols = Vec::new();
        let mut at = 0;
        for &k in &lengths {
            cols.push(arrangement[at..at + k].to_vec());
            at += k;
        }
        if cols.iter().all(|c| c.windows(2).all(|w| w[0] < w[1])) {
            out.insert(Tableau::new(cols).expect("strict columns").canonical());
        }
    }
    out.into_iter().collect()
}

/// Classes of non-crossing tableaux with at most one point of each weight segment per
/// column, modulo permutations inside segments. A class is identified by its columns with
/// every point replaced by its segment index, sorted.
pub fn snct_classes(lambda: &Partition, weight: &[usize]) -> BTreeSet<Vec<Vec<u32>>> {
    let seg = value_multiset(weight);
    let mut out = BTreeSet::new();
    if seg.len() != lambda.size() {
        return out;
    }
    for t in noncrossing_tableaux(lambda) {
        let mut cols: Vec<Vec<u32>> =
            t.columns().iter().map(|c| c.iter().map(|&v| seg[v as usize - 1]).collect()).collect();
        if cols.iter().all(|c| c.windows(2).all(|w| w[0] < w[1])) {
            cols.sort();
            out.insert(cols);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_sizes() {
        assert_eq!(subsets(&[1, 2, 3, 4], 2).len(), 6);
        assert_eq!(ordered_set_partitions(4, &[2, 2]).len(), 6);
        assert_eq!(compositions(4, 4).len(), 8);
        assert_eq!(multiset_permutations(&[1, 1, 2]).len(), 3);
    }

    #[test]
    fn known_counts() {
        let p = Partition::new(vec![2, 2, 2]).unwrap();
        assert_eq!(standard_tableaux(&p).len(), 5);
        assert_eq!(noncrossing_tableaux(&p).len(), 5);
        assert_eq!(semistandard_tableaux(&Partition::new(vec![2, 1]).unwrap(), &[1, 1, 1]).len(), 2);
    }
}
