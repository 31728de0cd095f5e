use serde::{Deserialize, Serialize};

use super::partition::Partition;
use super::tableau::Tableau;
use crate::error::{Error, Result};

/// Labels `l(1..N)` of points on a line; `l(i)` is the row in which `i` sits.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "ReadingRepr", into = "ReadingRepr")]
pub struct Reading {
    labels: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct ReadingRepr {
    labels: Vec<u32>,
}

impl TryFrom<ReadingRepr> for Reading {
    type Error = Error;
    fn try_from(r: ReadingRepr) -> Result<Self> {
        Reading::new(r.labels)
    }
}

impl From<Reading> for ReadingRepr {
    fn from(r: Reading) -> Self {
        ReadingRepr { labels: r.labels }
    }
}

/// Checks the Yamanouchi property of a label word; labels start at 1.
pub fn is_yamanouchi(labels: &[u32]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &l in labels {
        if l == 0 {
            return false;
        }
        let l = l as usize;
        if counts.len() < l {
            counts.resize(l, 0);
        }
        counts[l - 1] += 1;
        if l > 1 && counts[l - 1] > counts[l - 2] {
            return false;
        }
    }
    true
}

/// How points labelled `i` are matched to points labelled `i+1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Matching {
    /// k-th `i` with k-th `i+1`.
    Queue,
    /// each `i+1` with the nearest unmatched `i` to its left.
    Stack,
}

impl Reading {
    pub fn new(labels: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = labels.iter().find(|&&l| l == 0) {
            return Err(Error::InvalidReading(labels.clone(), format!("label {bad} is not positive")));
        }
        if !is_yamanouchi(&labels) {
            return Err(Error::InvalidReading(labels, "not a Yamanouchi word".into()));
        }
        Ok(Reading { labels })
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Label of point `i` (1-based).
    pub fn label(&self, i: u32) -> Option<u32> {
        self.labels.get((i as usize).checked_sub(1)?).copied()
    }

    /// Row lengths of any tableau with this reading.
    pub fn content(&self) -> Partition {
        let max = self.labels.iter().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0usize; max];
        for &l in &self.labels {
            counts[l as usize - 1] += 1;
        }
        Partition::new(counts).expect("Yamanouchi words have partition content")
    }

    /// The unique standard (non-nesting) tableau with this reading.
    pub fn to_syt(&self) -> Tableau {
        self.assemble(Matching::Queue)
    }

    /// The unique non-crossing tableau with this reading.
    pub fn to_nct(&self) -> Tableau {
        self.assemble(Matching::Stack)
    }

    fn assemble(&self, how: Matching) -> Tableau {
        let n = self.labels.len();
        let max = self.labels.iter().copied().max().unwrap_or(0);
        let mut next: Vec<Option<usize>> = vec![None; n];
        for i in 1..max {
            let mut pending: std::collections::VecDeque<usize> = Default::default();
            for (pos, &l) in self.labels.iter().enumerate() {
                if l == i {
                    pending.push_back(pos);
                } else if l == i + 1 {
                    let from = match how {
                        Matching::Queue => pending.pop_front(),
                        Matching::Stack => pending.pop_back(),
                    }
                    .expect("Yamanouchi words always have an unmatched smaller label");
                    next[from] = Some(pos);
                }
            }
        }
        let columns = (0..n)
            .filter(|&p| self.labels[p] == 1)
            .map(|start| {
                let mut col = vec![start as u32 + 1];
                let mut cur = start;
                while let Some(nx) = next[cur] {
                    col.push(nx as u32 + 1);
                    cur = nx;
                }
                col
            })
            .collect();
        Tableau::new(columns).expect("chains are increasing and disjoint").canonical()
    }
}

/// All Yamanouchi words with the given content, in lexicographic order.
pub fn yamanouchi_words(content: &Partition) -> Vec<Reading> {
    let mut out = Vec::new();
    let mut remaining: Vec<usize> = content.parts().to_vec();
    let mut used = vec![0usize; remaining.len()];
    let mut word = Vec::with_capacity(content.size());
    yamanouchi_rec(&mut remaining, &mut used, &mut word, content.size(), &mut |w| {
        out.push(Reading { labels: w.to_vec() });
    });
    out
}

fn yamanouchi_rec(
    remaining: &mut [usize],
    used: &mut [usize],
    word: &mut Vec<u32>,
    total: usize,
    emit: &mut dyn FnMut(&[u32]),
) {
    if word.len() == total {
        emit(word);
        return;
    }
    for l in 0..remaining.len() {
        if remaining[l] == 0 || (l > 0 && used[l] >= used[l - 1]) {
            continue;
        }
        remaining[l] -= 1;
        used[l] += 1;
        word.push(l as u32 + 1);
        yamanouchi_rec(remaining, used, word, total, emit);
        word.pop();
        used[l] -= 1;
        remaining[l] += 1;
    }
}

/// Yamanouchi words of the given content whose labels weakly decrease inside every
/// segment of `weight` (the lexicographically largest word in each orbit of the Young
/// subgroup), in lexicographic order.
pub fn lexmax_words(content: &Partition, weight: &[usize]) -> Result<Vec<Reading>> {
    if weight.iter().sum::<usize>() != content.size() {
        return Err(Error::WeightMismatch { weight: weight.to_vec(), size: content.size() });
    }
    let mut seg_start = vec![false; content.size()];
    let mut pos = 0;
    for &w in weight {
        if w > 0 {
            seg_start[pos] = true;
        }
        pos += w;
    }
    let rows = content.num_rows();
    let mut used = vec![0usize; rows];
    let mut word: Vec<u32> = Vec::with_capacity(content.size());
    let mut out = Vec::new();
    lexmax_rec(content.parts(), &seg_start, &mut used, &mut word, &mut out);
    Ok(out)
}

fn lexmax_rec(
    content: &[usize],
    seg_start: &[bool],
    used: &mut [usize],
    word: &mut Vec<u32>,
    out: &mut Vec<Reading>,
) {
    let pos = word.len();
    if pos == seg_start.len() {
        out.push(Reading { labels: word.clone() });
        return;
    }
    let cap = if seg_start[pos] { content.len() } else { word[pos - 1] as usize };
    for l in 0..cap {
        if used[l] == content[l] || (l > 0 && used[l] >= used[l - 1]) {
            continue;
        }
        used[l] += 1;
        word.push(l as u32 + 1);
        lexmax_rec(content, seg_start, used, word, out);
        word.pop();
        used[l] -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &[u32]) -> Reading {
        Reading::new(v.to_vec()).unwrap()
    }

    fn cols(t: &Tableau) -> Vec<Vec<u32>> {
        t.columns().to_vec()
    }

    #[test]
    fn rejects_non_yamanouchi() {
        assert!(matches!(Reading::new(vec![2, 1]), Err(Error::InvalidReading(..))));
        assert!(matches!(Reading::new(vec![1, 0]), Err(Error::InvalidReading(..))));
    }

    #[test]
    fn small_bijection_examples() {
        assert_eq!(cols(&r(&[1, 1, 2, 2]).to_syt()), vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(cols(&r(&[1, 1, 2, 2]).to_nct()), vec![vec![2, 3], vec![1, 4]]);
        assert_eq!(cols(&r(&[1, 2]).to_syt()), vec![vec![1, 2]]);
        assert_eq!(cols(&r(&[1, 2]).to_nct()), vec![vec![1, 2]]);
        assert_eq!(cols(&r(&[1, 1, 2, 1, 2, 2]).to_syt()), vec![vec![1, 3], vec![2, 5], vec![4, 6]]);
        assert_eq!(cols(&r(&[1, 1, 2, 2, 1, 2]).to_nct()), vec![vec![2, 3], vec![1, 4], vec![5, 6]]);
    }

    #[test]
    fn word_counts_match_hook_lengths() {
        for n in 0..=8 {
            for p in Partition::all(n) {
                assert_eq!(yamanouchi_words(&p).len() as u128, p.hook_length_count(), "{p}");
            }
        }
    }

    #[test]
    fn words_are_sorted() {
        let w = yamanouchi_words(&Partition::new(vec![3, 2, 1]).unwrap());
        assert!(w.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn lexmax_examples() {
        let p21 = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(lexmax_words(&p21, &[1, 1, 1]).unwrap().len(), 2);
        assert_eq!(lexmax_words(&p21, &[2, 1]).unwrap(), vec![r(&[1, 1, 2])]);
        assert!(lexmax_words(&p21, &[2, 2]).is_err());
    }
}
