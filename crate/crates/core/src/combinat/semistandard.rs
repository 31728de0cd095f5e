use super::partition::Partition;
use super::reading::{lexmax_words, Reading};
use super::tableau::Tableau;
use crate::error::{Error, Result};

fn check_weight(lambda: &Partition, weight: &[usize]) -> Result<()> {
    if weight.iter().sum::<usize>() != lambda.size() {
        return Err(Error::WeightMismatch { weight: weight.to_vec(), size: lambda.size() });
    }
    Ok(())
}

/// Segment index (1-based value) of every point `1..=n` for the given weight.
fn segment_values(weight: &[usize]) -> Vec<u32> {
    weight.iter().enumerate().flat_map(|(v, &w)| std::iter::repeat_n(v as u32 + 1, w)).collect()
}

/// Semistandard tableaux of shape `lambda` whose value `v` occurs `weight[v-1]` times.
pub fn enumerate_ssyt(lambda: &Partition, weight: &[usize]) -> Result<Vec<Tableau>> {
    check_weight(lambda, weight)?;
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); lambda.num_rows()];
    strips(lambda, weight, 0, &mut rows, &mut out);
    Ok(out)
}

/// Adds value `v+1` as a horizontal strip in every possible way.
fn strips(lambda: &Partition, weight: &[usize], v: usize, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
    if v == weight.len() {
        let filled: Vec<Vec<u32>> = rows.iter().filter(|r| !r.is_empty()).cloned().collect();
        out.push(Tableau::from_rows(&filled).expect("semistandard by construction"));
        return;
    }
    // distribute weight[v] cells over rows, bottom row first so rows above are known
    fn place(
        lambda: &Partition,
        weight: &[usize],
        v: usize,
        row: usize,
        left: usize,
        before: &[usize],
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<Tableau>,
    ) {
        if row == rows.len() {
            if left == 0 {
                strips(lambda, weight, v + 1, rows, out);
            }
            return;
        }
        let len = rows[row].len();
        // cells added in this row must sit under cells filled before this value
        let cap_above = if row == 0 { lambda.part(0) } else { before[row - 1] };
        let room = lambda.part(row).min(cap_above).saturating_sub(len);
        for k in 0..=room.min(left) {
            rows[row].extend(std::iter::repeat_n(v as u32 + 1, k));
            place(lambda, weight, v, row + 1, left - k, before, rows, out);
            rows[row].truncate(len);
        }
    }
    let before: Vec<usize> = rows.iter().map(Vec::len).collect();
    place(lambda, weight, v, 0, weight[v], &before, rows, out);
}

pub fn count_ssyt(lambda: &Partition, weight: &[usize]) -> Result<usize> {
    Ok(enumerate_ssyt(lambda, weight)?.len())
}

/// Semi-non-crossing tableaux of shape `lambda` and weight `weight`, one representative
/// per class, ordered by their lexicographically largest readings.
pub fn enumerate_snct(lambda: &Partition, weight: &[usize]) -> Result<Vec<Tableau>> {
    let words = lexmax_words(lambda, weight)?;
    let values = segment_values(weight);
    words.iter().map(|w| collapse(&w.to_nct(), &values)).collect()
}

pub fn count_snct(lambda: &Partition, weight: &[usize]) -> Result<usize> {
    Ok(lexmax_words(lambda, weight)?.len())
}

/// Replaces each point by the index of its segment.
fn collapse(t: &Tableau, values: &[u32]) -> Result<Tableau> {
    let (out, _) = t.relabel(|v| values[v as usize - 1])?;
    Ok(out)
}

/// The lexicographically largest reading compatible with a semistandard filling: the rows
/// of the copies of each value, listed in decreasing order.
fn lexmax_reading(t: &Tableau) -> Result<(Reading, Vec<usize>)> {
    let max = t.max_entry() as usize;
    let mut rows_of: Vec<Vec<u32>> = vec![Vec::new(); max];
    for c in t.columns() {
        for (r, &v) in c.iter().enumerate() {
            rows_of[v as usize - 1].push(r as u32 + 1);
        }
    }
    let weight: Vec<usize> = rows_of.iter().map(Vec::len).collect();
    let labels: Vec<u32> = rows_of
        .into_iter()
        .flat_map(|mut r| {
            r.sort_unstable_by(|a, b| b.cmp(a));
            r
        })
        .collect();
    Ok((Reading::new(labels)?, weight))
}

/// Bijection from semistandard Young tableaux to semi-non-crossing tableaux with the same
/// shape and weight.
pub fn ssyt_to_snct(t: &Tableau) -> Result<Tableau> {
    if !t.is_semistandard() || t.columns().iter().flatten().any(|&v| v == 0) {
        return Err(Error::Classification { expected: "semistandard Young tableau" });
    }
    let (w, weight) = lexmax_reading(t)?;
    collapse(&w.to_nct(), &segment_values(&weight))
}

/// Whether a tableau with repeated values is a semi-non-crossing tableau, in any column
/// order. The copies of each value are cloned into distinct points by giving the lower copies
/// the earlier points; the tableau qualifies when that lift is non-crossing.
pub fn is_semi_noncrossing(t: &Tableau) -> bool {
    semi_lift(t).is_some()
}

/// The non-crossing tableau on `1..=n` whose collapse is `t`, if there is one.
pub fn semi_lift(t: &Tableau) -> Option<Tableau> {
    if t.columns().iter().flatten().any(|&v| v == 0) {
        return None;
    }
    let (w, weight) = lexmax_reading(t).ok()?;
    let lift = w.to_nct();
    let back = collapse(&lift, &segment_values(&weight)).ok()?;
    (back.canonical() == t.canonical()).then_some(lift)
}

/// Inverse of [`ssyt_to_snct`].
pub fn snct_to_ssyt(t: &Tableau) -> Result<Tableau> {
    let err = || Error::Classification { expected: "semi-non-crossing tableau" };
    if t.columns().iter().flatten().any(|&v| v == 0) {
        return Err(err());
    }
    let (w, weight) = lexmax_reading(t).map_err(|_| err())?;
    let values = segment_values(&weight);
    if collapse(&w.to_nct(), &values)? != *t {
        return Err(err());
    }
    collapse(&w.to_syt(), &values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute;
    use std::collections::BTreeSet;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_ssyt(&p(&[1]), &[1]).unwrap(), 1);
        assert_eq!(count_snct(&p(&[1]), &[1]).unwrap(), 1);
        assert_eq!(count_ssyt(&p(&[2, 1]), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(count_snct(&p(&[2, 1]), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(count_ssyt(&p(&[2, 1]), &[2, 1]).unwrap(), 1);
        assert_eq!(count_snct(&p(&[2, 1]), &[2, 1]).unwrap(), 1);
        assert!(matches!(count_snct(&p(&[2, 1]), &[2]), Err(Error::WeightMismatch { .. })));
    }

    #[test]
    fn ssyt_enumeration_matches_brute_force() {
        for n in 0..=5 {
            for lam in Partition::all(n) {
                for weight in brute::compositions(n, 4) {
                    let fast: BTreeSet<Tableau> = enumerate_ssyt(&lam, &weight).unwrap().into_iter().collect();
                    let slow: BTreeSet<Tableau> = brute::semistandard_tableaux(&lam, &weight).into_iter().collect();
                    assert_eq!(fast, slow, "{lam} {weight:?}");
                }
            }
        }
    }

    #[test]
    fn snct_matches_class_definition() {
        for n in 0..=5 {
            for lam in Partition::all(n) {
                for weight in brute::compositions(n, n) {
                    let classes = brute::snct_classes(&lam, &weight);
                    let reps: BTreeSet<Tableau> = enumerate_snct(&lam, &weight).unwrap().into_iter().collect();
                    assert_eq!(reps.len(), classes.len(), "{lam} {weight:?}");
                    let key = |t: &Tableau| {
                        let mut c = t.columns().to_vec();
                        c.sort();
                        c
                    };
                    let rep_keys: BTreeSet<_> = reps.iter().map(key).collect();
                    assert_eq!(rep_keys, classes, "{lam} {weight:?}");
                }
            }
        }
    }

    #[test]
    fn semi_noncrossing_predicate_matches_classes() {
        for n in 0..=5 {
            for lam in Partition::all(n) {
                for weight in brute::compositions(n, n) {
                    let classes = brute::snct_classes(&lam, &weight);
                    let values: Vec<u32> =
                        weight.iter().enumerate().flat_map(|(v, &k)| std::iter::repeat_n(v as u32 + 1, k)).collect();
                    for t in brute::noncrossing_tableaux(&lam).iter().chain(&brute::standard_tableaux(&lam)) {
                        let Ok((c, _)) = t.relabel(|v| values[v as usize - 1]) else { continue };
                        let mut key = c.columns().to_vec();
                        key.sort();
                        assert_eq!(is_semi_noncrossing(&c), classes.contains(&key), "{c}");
                        if let Some(lift) = semi_lift(&c) {
                            assert!(lift.is_nct());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bijection_preserves_shape_and_content() {
        for n in 0..=5 {
            for lam in Partition::all(n) {
                for weight in brute::compositions(n, 3) {
                    let snct: BTreeSet<Tableau> = enumerate_snct(&lam, &weight).unwrap().into_iter().collect();
                    for s in enumerate_ssyt(&lam, &weight).unwrap() {
                        let t = ssyt_to_snct(&s).unwrap();
                        assert!(snct.contains(&t));
                        assert_eq!(t.entries(), s.entries());
                        assert_eq!(t.shape(), s.shape());
                        assert_eq!(snct_to_ssyt(&t).unwrap(), s);
                    }
                }
            }
        }
    }
}
