use super::*;
use crate::combinat::{enumerate_nct, enumerate_syt};

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn t(cols: &[&[u32]]) -> Tableau {
    Tableau::new(cols.iter().map(|c| c.to_vec()).collect()).unwrap()
}

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn x(i: u32) -> ExactPoly {
    ExactPoly::var(i)
}

#[test]
fn polynomials_by_definition() {
    assert_eq!(specht_poly(&t(&[&[1, 2]])).unwrap(), x(1) - x(2));
    let expected = (x(1) - x(3)) * (x(2) - x(4));
    assert_eq!(specht_poly(&t(&[&[1, 3], &[2, 4]])).unwrap(), expected);
}

#[test]
fn displayed_left_hand_side() {
    // x, y, z, t, u, w are x1..x6
    let (xx, y, z, tt, u, w) = (x(1), x(2), x(3), x(4), x(5), x(6));
    let lhs = (y.clone() - u.clone())
        * (tt.clone() - u.clone())
        * (y.clone() - tt.clone())
        * (xx.clone() - w.clone())
        * (z.clone() - w.clone())
        * (xx.clone() - z.clone());
    assert_eq!(specht_poly(&t(&[&[1, 3, 6], &[2, 4, 5]])).unwrap(), lhs);
}

#[test]
fn displayed_identity_decomposition() {
    let lam = p(&[2, 2, 2]);
    let f = Filling::canonical(&lam, None).unwrap();
    let lhs = t(&[&[1, 3, 6], &[2, 4, 5]]);
    let d = decompose_into_nct(&lhs, &f).unwrap();
    assert_eq!(d.len(), 3);
    assert_eq!(d.coeff(&t(&[&[1, 2, 6], &[3, 4, 5]]).canonical()), q(1));
    assert_eq!(d.coeff(&t(&[&[1, 2, 3], &[4, 5, 6]]).canonical()), q(-1));
    assert_eq!(d.coeff(&t(&[&[1, 4, 5], &[2, 3, 6]]).canonical()), q(1));
    assert_eq!(d.realize().unwrap(), specht_poly(&lhs).unwrap());
}

#[test]
fn permutation_action() {
    let col = t(&[&[1, 2]]);
    assert_eq!(permute_tableau(&[1, 2], &col, 2).unwrap(), (col.clone(), 1));
    assert_eq!(permute_tableau(&[2, 1], &col, 2).unwrap(), (col.clone(), -1));
    assert!(matches!(permute_tableau(&[1, 3, 2], &col, 2), Err(Error::ActionDomain(3, 2))));
    assert!(permute_tableau(&[1, 1], &col, 2).is_err());
}

#[test]
fn action_matches_polynomial_substitution() {
    let tab = t(&[&[1, 3, 5], &[2, 4]]);
    let omega = [3, 1, 5, 2, 4];
    let (image, sign) = permute_tableau(&omega, &tab, 5).unwrap();
    let substituted = specht_poly(&tab).unwrap().map_vars(|v| omega[v as usize - 1]);
    assert_eq!(specht_poly(&image).unwrap().scale(&q(sign.into())), substituted);
}

#[test]
fn action_preserves_filling_agreement() {
    let lam = p(&[2, 1, 1]);
    let f = Filling::canonical(&lam, None).unwrap();
    for tab in enumerate_syt_full(&f) {
        for omega in [[2, 1, 3, 4], [1, 3, 2, 4], [4, 2, 3, 1]] {
            let (image, _) = permute_tableau(&omega, &tab, 4).unwrap();
            assert!(f.agrees(&image));
        }
        assert!(permute_tableau(&[1, 2, 3, 4, 6, 5], &tab, 4).is_err());
    }
}

#[test]
fn standard_input_is_fixed() {
    let lam = p(&[2, 2]);
    let f = Filling::canonical(&lam, None).unwrap();
    let syt = t(&[&[1, 3], &[2, 4]]);
    let g = garnir_expand(&syt, &f).unwrap();
    assert_eq!(g.len(), 1);
    assert_eq!(g.coeff(&syt), q(1));
    let nct = t(&[&[2, 3], &[1, 4]]);
    let d = decompose_into_nct(&nct, &f).unwrap();
    assert_eq!(d.len(), 1);
    assert_eq!(d.coeff(&nct), q(1));
}

#[test]
fn garnir_on_two_by_two_matches_solve() {
    let lam = p(&[2, 2]);
    let f = Filling::canonical(&lam, None).unwrap();
    let tab = t(&[&[1, 4], &[2, 3]]);
    let g = garnir_expand(&tab, &f).unwrap();
    let oracle = PolyBasis::syt(&f).unwrap().decompose(&tab).unwrap();
    assert_eq!(g, oracle);
    assert_eq!(g.realize().unwrap(), specht_poly(&tab).unwrap());
}

#[test]
fn garnir_identities_hold_without_fallback() {
    for n in 1..=6 {
        for lam in Partition::all(n) {
            for tab in fillings_of_shape(&lam) {
                let combo = straighten(&tab).unwrap();
                assert!(combo.keys().all(Tableau::is_standard));
                let lam_poly = SpechtElement::from_terms(combo).realize().unwrap();
                assert_eq!(lam_poly, specht_poly(&tab).unwrap(), "{tab}");
            }
        }
    }
}

#[test]
fn garnir_lifts_hold_modulo_relations() {
    for n in 1..=5 {
        for lam in Partition::all(n) {
            let f = Filling::canonical(&lam, None).unwrap();
            let relations = Relations::new(&f).unwrap();
            for tab in fillings_of_shape(&lam) {
                let full = f.complete(&tab).unwrap();
                let lifted: LinComb<Tableau, Rational> =
                    straighten(&tab).unwrap().iter().map(|(k, c)| (f.complete(k).unwrap(), c.clone())).collect();
                let rest = specht_poly(&full).unwrap() - SpechtElement::from_terms(lifted.clone()).realize().unwrap();
                assert!(relations.contains(&rest), "{full}");
                assert_eq!(garnir_expand(&full, &f).unwrap().terms(), &lifted);
            }
        }
    }
}

#[test]
fn relation_counts() {
    let counts = |v: &[usize]| {
        let lam = p(v);
        relation_tableaux(&Filling::canonical(&lam, None).unwrap()).len()
    };
    assert_eq!(counts(&[2, 2]), 0);
    assert_eq!(counts(&[2, 1, 1]), 0);
    assert_eq!(counts(&[3, 1]), 2);
    assert_eq!(counts(&[4, 1]), 10);
    assert_eq!(counts(&[3, 1, 1]), 10);
}

#[test]
fn garnir_two_one_all_fillings() {
    let lam = p(&[2, 1]);
    let f = Filling::canonical(&lam, None).unwrap();
    let oracle = PolyBasis::syt(&f).unwrap();
    for tab in fillings_of_shape(&lam) {
        let g = garnir_expand(&tab, &f).unwrap();
        assert_eq!(g, oracle.decompose(&tab).unwrap());
        assert!(g.terms().keys().all(|k| f.agrees(k)));
    }
}

#[test]
fn syt_of_211_over_nct() {
    let lam = p(&[2, 1, 1]);
    let f = Filling::canonical(&lam, None).unwrap();
    let basis = PolyBasis::nct(&f).unwrap();
    assert_eq!(basis.tableaux().len(), 3);
    for s in enumerate_syt(&lam, &f).unwrap() {
        let d = basis.decompose(&s).unwrap();
        assert!(!d.is_empty());
        assert_eq!(d.realize().unwrap(), specht_poly(&f.complete(&s).unwrap()).unwrap());
    }
}

#[test]
fn reading_points() {
    let col = t(&[&[1, 2]]);
    let pt = reading_evaluation(&col).unwrap();
    assert_eq!(pt, BTreeMap::from([(1, q(1)), (2, q(2))]));
    assert_eq!(specht_eval(&col, &pt).unwrap(), q(-1));
    let f = Filling::canonical(&p(&[2, 2]), None).unwrap();
    for s in enumerate_nct_full(&f) {
        assert_ne!(specht_eval(&s, &reading_evaluation(&s).unwrap()).unwrap(), q(0));
    }
}

#[test]
fn module_ranks() {
    assert_eq!(module_rank(&p(&[1, 1]), None).unwrap(), 1);
    assert_eq!(module_rank(&p(&[2, 1]), None).unwrap(), 2);
    assert_eq!(module_rank(&p(&[2, 2, 2]), None).unwrap(), 5);
}

#[test]
fn rank_with_and_without_filling() {
    for n in 1..=5 {
        for lam in Partition::all(n) {
            let f = Filling::canonical(&lam, None).unwrap();
            let plain = module_rank(&lam, None).unwrap();
            assert_eq!(plain as u128, lam.hook_length_count(), "{lam}");
            assert_eq!(module_rank(&lam, Some(&f)).unwrap(), plain, "{lam}");
        }
    }
    // without the relations, swapping the two single-box columns fixes P_T but not the
    // completed polynomial, and the completions span too much
    let lam = p(&[3, 1]);
    let f = Filling::canonical(&lam, None).unwrap();
    let completed: Vec<Tableau> = fillings_of_shape(&lam).iter().map(|t| f.complete(t).unwrap()).collect();
    assert_eq!(family_rank(&completed).unwrap(), 5);
    let a = f.complete(&t(&[&[1, 2], &[3], &[4]])).unwrap();
    let b = f.complete(&t(&[&[1, 2], &[4], &[3]])).unwrap();
    let diff = specht_poly(&a).unwrap() - specht_poly(&b).unwrap();
    assert!(!diff.is_zero());
    assert!(Relations::new(&f).unwrap().contains(&diff));
}

#[test]
fn standard_and_noncrossing_spans_coincide() {
    for n in 1..=5 {
        for lam in Partition::all(n) {
            let f = Filling::canonical(&lam, None).unwrap();
            let nct = PolyBasis::nct(&f).unwrap();
            for s in enumerate_syt_full(&f) {
                let d = nct.decompose(&s).unwrap();
                let rest = nct.remainder(&specht_poly(&s).unwrap()).unwrap();
                assert_eq!(rest, specht_poly(&s).unwrap() - d.realize().unwrap());
            }
            let mut both = enumerate_syt_full(&f);
            let k = both.len();
            both.extend(enumerate_nct_full(&f));
            both.extend(relation_tableaux(&f));
            assert_eq!(family_rank(&both).unwrap(), k + nct.relations().len(), "{lam}");
        }
    }
}

#[test]
fn basis_and_triangularity() {
    for n in 1..=5 {
        for lam in Partition::all(n) {
            let f = Filling::canonical(&lam, None).unwrap();
            let nct = enumerate_nct_full(&f);
            assert_eq!(family_rank(&nct).unwrap(), nct.len(), "{lam}");
            assert_eq!(family_rank(&enumerate_syt_full(&f)).unwrap(), nct.len(), "{lam}");
            assert!(triangularity_violations(&f).unwrap().is_empty(), "{lam}");
        }
    }
}

#[test]
fn closed_under_transpositions() {
    for n in 2..=5u32 {
        for lam in Partition::all(n as usize) {
            let f = Filling::canonical(&lam, None).unwrap();
            let basis = PolyBasis::nct(&f).unwrap();
            let relations = Relations::new(&f).unwrap();
            for tab in basis.tableaux().to_vec() {
                for i in 1..n {
                    let mut omega: Vec<u32> = (1..=n).collect();
                    omega.swap(i as usize - 1, i as usize);
                    let (image, sign) = permute_tableau(&omega, &tab, n).unwrap();
                    let d = basis.decompose(&image).unwrap();
                    let moved = specht_poly(&tab).unwrap().map_vars(|v| if v <= n { omega[v as usize - 1] } else { v });
                    let rest = moved - d.realize().unwrap().scale(&q(sign.into()));
                    assert!(relations.contains(&rest), "{lam} {tab}");
                    if relations.is_empty() {
                        assert!(rest.is_zero());
                    }
                }
            }
        }
    }
}

#[test]
fn nct_keys_match_enumeration() {
    let lam = p(&[3, 1, 1]);
    let f = Filling::canonical(&lam, None).unwrap();
    let basis = PolyBasis::nct(&f).unwrap();
    let stripped: Vec<Tableau> = basis.tableaux().iter().map(|k| f.strip(k).unwrap().canonical()).collect();
    assert_eq!(stripped, enumerate_nct(&lam, &f).unwrap());
}

#[test]
fn json_shape() {
    let e = SpechtElement::from_terms(LinComb::single(t(&[&[1, 2]]), q(-2)));
    let v = serde_json::to_value(&e).unwrap();
    assert_eq!(v, serde_json::json!([{"coeff": "-2/1", "tableau": {"shape": [1, 1], "columns": [[1, 2]]}}]));
}

