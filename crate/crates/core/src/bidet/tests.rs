use std::collections::BTreeSet;

use super::*;
use crate::brute;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn bt(pairs: &[(&[u32], &[u32])]) -> Bitableau {
    Bitableau::from_pairs(&pairs.iter().map(|(a, b)| (a.to_vec(), b.to_vec())).collect::<Vec<_>>()).unwrap()
}

fn content(v: &[u32]) -> Content {
    content_from_values(v).unwrap()
}

/// Every multiset of `size` values from `1..=max`.
fn contents(size: usize, max: u32) -> Vec<Content> {
    weak_compositions(size, max as usize)
        .into_iter()
        .map(|w| w.iter().enumerate().filter(|(_, &k)| k > 0).map(|(v, &k)| (v as u32 + 1, k)).collect())
        .collect()
}

#[test]
fn minors() {
    let x = GenericMatrix::new(3, 3);
    assert_eq!(minor(&x, &[1], &[2]).unwrap(), x.entry(1, 2).unwrap());
    let two = x.entry(1, 1).unwrap() * x.entry(2, 2).unwrap() - x.entry(1, 2).unwrap() * x.entry(2, 1).unwrap();
    assert_eq!(minor(&x, &[1, 2], &[1, 2]).unwrap(), two);
    let full = minor(&x, &[1, 2, 3], &[1, 2, 3]).unwrap();
    assert_eq!(full.len(), 6);
    // cofactor expansion along the first row
    let mut cof = ExactPoly::zero();
    for (j, rest, s) in [(1, [2, 3], 1), (2, [1, 3], -1), (3, [1, 2], 1)] {
        cof = cof + (x.entry(1, j).unwrap() * minor(&x, &[2, 3], &rest).unwrap()).scale(&q(s));
    }
    assert_eq!(full, cof);
    assert!(minor(&x, &[1, 2], &[1]).is_err());
    assert!(minor(&x, &[4], &[1]).is_err());
}

#[test]
fn bideterminant_examples() {
    let x = GenericMatrix::new(2, 2);
    assert_eq!(bt(&[(&[1], &[2])]).bideterminant(&x).unwrap(), x.entry(1, 2).unwrap());
    let cube = bt(&[(&[2], &[1]), (&[2], &[1]), (&[2], &[1])]);
    assert_eq!(cube.bideterminant(&x).unwrap(), x.entry(2, 1).unwrap().pow(3));
    assert_eq!(cube.content(), (content(&[2, 2, 2]), content(&[1, 1, 1])));
    let two = bt(&[(&[1], &[1]), (&[2], &[2])]);
    assert_eq!(two.bideterminant(&x).unwrap(), x.entry(1, 1).unwrap() * x.entry(2, 2).unwrap());
    assert_eq!(two.shape(), p(&[2]));
    assert!(bt(&[(&[3], &[1])]).bideterminant(&x).is_err());
}

#[test]
fn predicates_on_small_cases() {
    let col = bt(&[(&[1, 2], &[1, 3])]);
    assert!(col.is_standard() && col.is_noncrossing());
    let diag = bt(&[(&[1], &[1]), (&[2], &[2])]);
    assert!(diag.is_standard() && diag.is_noncrossing());
    let anti = bt(&[(&[1], &[2]), (&[2], &[1])]);
    assert!(!anti.is_standard() && !anti.is_noncrossing());
}

#[test]
fn two_by_two_identity() {
    // x12 x21 = x11 x22 - (x11 x22 - x12 x21)
    let anti = bt(&[(&[1], &[2]), (&[2], &[1])]);
    let d = decompose_bideterminant(&anti).unwrap();
    assert_eq!(d.len(), 2);
    assert_eq!(d.coeff(&bt(&[(&[1], &[1]), (&[2], &[2])])), q(1));
    assert_eq!(d.coeff(&bt(&[(&[1, 2], &[1, 2])])), q(-1));
    let x = GenericMatrix::new(2, 2);
    assert_eq!(realize(&d, &x).unwrap(), anti.bideterminant(&x).unwrap());
}

#[test]
fn bitableau_counts_against_brute_force() {
    for n in 1..=4 {
        for lam in Partition::all(n) {
            for alpha in contents(n, 4) {
                let wa = weight_of(&alpha);
                let left = brute::column_strict_tableaux(&lam, &wa);
                for beta in contents(n, 4) {
                    if (n == 4) && (alpha.len() < 3 || beta.len() < 2) && alpha != beta {
                        continue;
                    }
                    let right = brute::column_strict_tableaux(&lam, &weight_of(&beta));
                    let mut all = BTreeSet::new();
                    for l in &left {
                        for r in &right {
                            // every pairing of equal-length columns
                            for r2 in column_orders(r) {
                                if let Ok(b) = Bitableau::new(l.clone(), r2) {
                                    all.insert(b);
                                }
                            }
                        }
                    }
                    let std: BTreeSet<_> = all.iter().filter(|b| b.is_standard()).cloned().collect();
                    let nc: BTreeSet<_> = all.iter().filter(|b| b.is_noncrossing()).cloned().collect();
                    assert_eq!(std.len(), nc.len(), "{lam} {alpha:?} {beta:?}");
                    let fast_std: BTreeSet<_> =
                        enumerate_bitableaux(&lam, &alpha, &beta, BitableauKind::Standard).unwrap().into_iter().collect();
                    let fast_nc: BTreeSet<_> =
                        enumerate_bitableaux(&lam, &alpha, &beta, BitableauKind::Noncrossing).unwrap().into_iter().collect();
                    assert_eq!(fast_std, std, "{lam} {alpha:?} {beta:?}");
                    assert_eq!(fast_nc, nc, "{lam} {alpha:?} {beta:?}");
                }
            }
        }
    }
}

/// All orders of the columns of `t` that keep lengths weakly decreasing.
fn column_orders(t: &Tableau) -> Vec<Tableau> {
    let cols = t.columns().to_vec();
    let mut out = BTreeSet::new();
    for perm in brute::multiset_permutations(&(0..cols.len() as u32).collect::<Vec<_>>()) {
        let c: Vec<Vec<u32>> = perm.iter().map(|&i| cols[i as usize].clone()).collect();
        if c.windows(2).all(|w| w[0].len() >= w[1].len()) {
            out.insert(c);
        }
    }
    out.into_iter().map(|c| Tableau::new(c).unwrap()).collect()
}

#[test]
fn counting_examples() {
    let one = content(&[1, 2]);
    for lam in [p(&[1, 1]), p(&[2])] {
        let s = count_bitableaux(&lam, &one, &one, BitableauKind::Standard).unwrap();
        let c = count_bitableaux(&lam, &one, &one, BitableauKind::Noncrossing).unwrap();
        assert_eq!(s, c, "{lam}");
    }
    let col = content(&[1, 2, 3]);
    assert_eq!(count_bitableaux(&p(&[1, 1, 1]), &col, &col, BitableauKind::Noncrossing).unwrap(), 1);
}

#[test]
fn noncrossing_bitableaux_are_a_basis() {
    for n in 1..=3 {
        for alpha in contents(n, 3) {
            for beta in contents(n, 3) {
                let nc = bitableaux_of_content(&alpha, &beta, BitableauKind::Noncrossing).unwrap();
                let st = bitableaux_of_content(&alpha, &beta, BitableauKind::Standard).unwrap();
                assert_eq!(nc.len(), st.len());
                let x = GenericMatrix::new(3, 3);
                assert_eq!(bideterminant_rank(&nc, &x).unwrap(), nc.len(), "{alpha:?} {beta:?}");
                assert_eq!(bideterminant_rank(&st, &x).unwrap(), st.len(), "{alpha:?} {beta:?}");
                let mut both = nc.clone();
                both.extend(st.iter().cloned());
                assert_eq!(bideterminant_rank(&both, &x).unwrap(), nc.len());
            }
        }
    }
}

#[test]
fn decompositions_realize_exactly() {
    let x = GenericMatrix::new(3, 3);
    let crossing = bt(&[(&[1, 3], &[1, 2]), (&[2, 3], &[2, 3])]);
    let mut samples = vec![crossing, bt(&[(&[1, 2], &[2, 3]), (&[3], &[1])]), bt(&[(&[2], &[3]), (&[3], &[1]), (&[1], &[2])])];
    samples.push(bt(&[(&[1, 2], &[1, 3]), (&[1], &[2])]));
    for b in samples {
        let d = decompose_bideterminant(&b).unwrap();
        assert!(d.keys().all(Bitableau::is_noncrossing));
        assert_eq!(realize(&d, &x).unwrap(), b.bideterminant(&x).unwrap(), "{b}");
    }
    let nc = bt(&[(&[1, 2], &[1, 2]), (&[3], &[3])]);
    assert!(nc.is_noncrossing());
    assert_eq!(decompose_bideterminant(&nc).unwrap(), LinComb::unit(nc));
}

#[test]
fn cloning() {
    let x = GenericMatrix::new(3, 3);
    let free = Cloning::new(&x, &content(&[1, 2]), &content(&[3])).unwrap();
    assert_eq!(free.matrix, x);
    let alpha = content(&[1, 1, 2, 2, 3, 4, 4, 5, 6, 6, 6, 7]);
    let beta = content(&[1, 1, 2, 2, 2, 3, 4, 5, 5, 5, 6, 7]);
    let c = Cloning::new(&GenericMatrix::new(7, 7), &alpha, &beta).unwrap();
    assert_eq!(c.matrix, GenericMatrix::new(12, 12));
    assert_eq!(c.row_of(), &[1, 1, 2, 2, 3, 4, 4, 5, 6, 6, 6, 7]);
    assert_eq!(c.col_of(), &[1, 1, 2, 2, 2, 3, 4, 5, 5, 5, 6, 7]);
}

#[test]
fn cloned_decomposition_specializes() {
    let x = GenericMatrix::new(2, 3);
    let samples = [
        bt(&[(&[1], &[2]), (&[1], &[1])]),
        bt(&[(&[1, 2], &[2, 3]), (&[1], &[1])]),
        bt(&[(&[2], &[1]), (&[1], &[2]), (&[2], &[2])]),
        bt(&[(&[1, 2], &[1, 3]), (&[2], &[1])]),
    ];
    for b in samples {
        let (alpha, beta) = b.content();
        let c = Cloning::new(&x, &alpha, &beta).unwrap();
        let lifted = c.lift(&b).unwrap();
        assert_eq!(c.specialize_poly(&lifted.bideterminant(&c.matrix).unwrap()), b.bideterminant(&x).unwrap());
        let on_clone = decompose_bideterminant(&lifted).unwrap();
        let mut back: LinComb<Bitableau, Rational> = LinComb::zero();
        for (t, coeff) in &on_clone {
            let zero = c.specialize_poly(&t.bideterminant(&c.matrix).unwrap()).is_zero();
            match c.specialize(t) {
                Some(s) => {
                    assert!(s.is_noncrossing(), "{t} -> {s}");
                    back.add_term(s, coeff.clone());
                }
                None => assert!(zero),
            }
        }
        assert_eq!(realize(&back, &x).unwrap(), b.bideterminant(&x).unwrap());
        assert_eq!(back, decompose_bideterminant(&b).unwrap(), "{b}");
    }
}

#[test]
fn gl_examples() {
    let r = |v: &[usize], n, m| gl_module_basis(&p(v), n, m).unwrap();
    assert_eq!(r(&[1], 2, 2).noncrossing_rank, 2);
    assert_eq!(r(&[1, 1], 2, 2).noncrossing_rank, 1);
    assert_eq!(r(&[2], 2, 2).noncrossing_rank, 3);
    assert!(r(&[2], 2, 2).holds());
    assert!(matches!(gl_module_basis(&p(&[1, 1, 1]), 2, 3), Err(Error::TooTall { .. })));
    assert_eq!(row_filled(&p(&[2, 1])).columns(), &[vec![1, 2], vec![1]]);
}

#[test]
fn gl_ranks_agree() {
    for n in 1..=4 {
        for lam in Partition::all(n) {
            if lam.num_rows() > 3 {
                continue;
            }
            let rep = gl_module_basis(&lam, 3, 3).unwrap();
            assert!(rep.holds(), "{rep:?}");
        }
    }
}

#[test]
fn json_shape() {
    let b = bt(&[(&[1, 2], &[1, 3]), (&[2], &[2])]);
    let v = serde_json::to_value(&b).unwrap();
    assert_eq!(v, serde_json::json!({"shape": [2, 1], "T": [[1, 2], [2]], "Tprime": [[1, 3], [2]]}));
    assert_eq!(serde_json::from_value::<Bitableau>(v).unwrap(), b);
    let bad = serde_json::json!({"shape": [3], "T": [[1, 2], [2]], "Tprime": [[1, 3], [2]]});
    assert!(serde_json::from_value::<Bitableau>(bad).is_err());
}
