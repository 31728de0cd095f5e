use proptest::prelude::*;

use super::*;

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn mono(factors: &[&[u32]]) -> PlueckerMonomial {
    let m = factors.first().map_or(2, |f| f.len());
    PlueckerMonomial::from_lists(m, &factors.iter().map(|f| f.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn idx(j: &[u32]) -> PlueckerIndex {
    PlueckerIndex::new(j.to_vec()).unwrap()
}

fn g(m: usize, n: usize) -> Grassmannian {
    Grassmannian::new(m, n).unwrap()
}

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

#[test]
fn three_term_relation_from_shuffles() {
    let gr = g(2, 2);
    let r = gr.pluecker_relation(&[1, 3], &[2, 4], 1).unwrap();
    let support: Vec<String> = r.keys().map(|x| x.to_string()).collect();
    assert_eq!(support, ["P12P34", "P13P24", "P14P23"]);
    assert_eq!(r.coeff(&mono(&[&[1, 3], &[2, 4]])), -r.coeff(&mono(&[&[1, 2], &[3, 4]])));
    assert_eq!(r.coeff(&mono(&[&[1, 3], &[2, 4]])), -r.coeff(&mono(&[&[1, 4], &[2, 3]])));
    assert!(gr.expand_element(&r).unwrap().is_zero());
    let three = three_term_relation(&idx(&[1, 3]), &idx(&[2, 4])).unwrap();
    assert!(three == r || three == r.scale(&q(-1)));
}

#[test]
fn repeated_index_terms_vanish() {
    let gr = g(2, 2);
    // moving {1, 2, 1}: only the split keeping the two 1s apart survives, and it cancels
    let r = gr.pluecker_relation(&[1, 2], &[1, 3], 1).unwrap();
    assert!(r.is_zero(), "{}", element_string(&r));
    assert!(gr.pluecker_relation(&[1, 2], &[3, 5], 1).is_err());
    assert!(gr.pluecker_relation(&[1, 2], &[3, 4], 3).is_err());
}

#[test]
fn relations_vanish_on_generic_matrices() {
    for (m, n) in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (1, 3)] {
        let gr = g(m, n);
        let rels = gr.all_pluecker_relations().unwrap();
        assert_eq!(rels.is_empty(), m == 1 || n == 0);
        for r in rels {
            assert!(gr.expand_element(&r).unwrap().is_zero(), "G({m},{n}) {}", element_string(&r));
        }
    }
    let r = g(3, 3).pluecker_relation(&[1, 2, 3], &[4, 5, 6], 2).unwrap();
    assert!(!r.is_zero());
    assert!(g(3, 3).expand_element(&r).unwrap().is_zero());
}

#[test]
fn standard_and_noncrossing_predicates() {
    assert!(mono(&[&[2, 4]]).is_standard() && mono(&[&[2, 4]]).is_noncrossing());
    let cross = mono(&[&[1, 3], &[2, 4]]);
    assert!(cross.is_standard() && !cross.is_noncrossing());
    let nest = mono(&[&[1, 4], &[2, 3]]);
    assert!(!nest.is_standard() && nest.is_noncrossing());
    assert!(mono(&[&[1, 2], &[3, 4]]).is_standard());
    assert!(mono(&[&[1, 3], &[1, 3], &[2, 4]]).crossing_pairs().len() == 2);
    assert!(mono(&[&[1, 3, 5], &[2, 4, 6]]).crossing_pairs() == [(0, 1)]);
    // no pattern between the factors, yet not non-crossing once the shared 3 is resolved
    let shared = mono(&[&[1, 3, 5], &[2, 3, 4]]);
    assert!(shared.crossing_pairs().is_empty());
    assert!(!shared.is_noncrossing());
}

#[test]
fn pattern_and_predicate_agree_for_two_rows() {
    for n in 1..=4 {
        for d in 1..=3 {
            for mon in g(2, n).monomials(d) {
                assert_eq!(mon.is_noncrossing(), mon.crossing_pairs().is_empty(), "{mon}");
            }
        }
    }
}

#[test]
fn weights_and_order() {
    assert_eq!(weight(&idx(&[1, 3])).unwrap(), 2);
    let a = mono(&[&[1, 3], &[2, 4]]);
    let b = mono(&[&[1, 4], &[2, 3]]);
    assert_eq!(monomial_weight(&a).unwrap(), BigUint::from(4u32));
    assert_eq!(monomial_weight(&b).unwrap(), BigUint::from(3u32));
    assert_eq!(precedes(&a, &b).unwrap(), Ordering::Less);
    let (c, d) = (mono(&[&[1, 2], &[3, 4]]), mono(&[&[2, 3], &[3, 4]]));
    assert_eq!(precedes(&c, &d).unwrap(), Ordering::Less);
    assert_eq!(precedes(&d, &c).unwrap(), Ordering::Greater);
    assert_eq!(precedes(&c, &c).unwrap(), Ordering::Equal);
    assert!(matches!(weight(&idx(&[1, 2, 3])), Err(Error::Unsupported(_))));
}

#[test]
fn initial_terms() {
    let a = mono(&[&[1, 3], &[2, 4]]);
    assert_eq!(initial_term(&LinComb::unit(a.clone())).unwrap(), a);
    let rel = three_term_relation(&idx(&[1, 3]), &idx(&[2, 4])).unwrap();
    assert_eq!(initial_term(&rel).unwrap(), a);
    assert_eq!(initial_term(&GrassElement::zero()), Err(Error::ZeroElement));
}

#[test]
fn crossing_quadratics_are_initial() {
    for n in 2..=8u32 {
        let gr = g(2, n as usize);
        for mon in gr.monomials(2) {
            let (j, k) = (&mon.factors()[0], &mon.factors()[1]);
            match three_term_relation(j, k) {
                Ok(rel) => {
                    assert!(!mon.is_noncrossing());
                    assert_eq!(initial_term(&rel).unwrap(), mon);
                    for other in rel.keys().filter(|x| **x != mon) {
                        assert!(other.is_noncrossing());
                    }
                }
                Err(_) => assert!(mon.is_noncrossing()),
            }
        }
    }
}

#[test]
fn straightening_examples() {
    let nc = mono(&[&[1, 4], &[2, 3]]);
    assert_eq!(straighten_g2n(&nc).unwrap(), LinComb::unit(nc.clone()));
    let s = straighten_g2n(&mono(&[&[1, 3], &[2, 4]])).unwrap();
    let mut expect = LinComb::unit(mono(&[&[1, 2], &[3, 4]]));
    expect.add_term(nc, q(1));
    assert_eq!(s, expect);
    let gr = g(2, 2);
    let cube = mono(&[&[1, 3], &[1, 3], &[2, 4]]);
    let s = straighten_g2n(&cube).unwrap();
    assert!(s.keys().all(PlueckerMonomial::is_noncrossing));
    assert_eq!(gr.expand_element(&s).unwrap(), gr.expand(&cube).unwrap());
    assert_eq!(s, gr.decompose(&cube, MonomialKind::Noncrossing).unwrap());
    assert!(straighten_g2n(&mono(&[&[1, 2, 4], &[1, 3, 5]])).is_err());
}

#[test]
fn straightening_matches_solve() {
    for n in 2..=6 {
        let gr = g(2, n);
        for d in 1..=3 {
            if n == 6 && d == 3 {
                continue;
            }
            for (mon, solved) in gr.decompose_all(d, MonomialKind::Noncrossing).unwrap() {
                let s = straighten_g2n(&mon).unwrap();
                assert!(s.keys().all(PlueckerMonomial::is_noncrossing));
                assert_eq!(s, solved, "{mon}");
            }
        }
    }
}

#[test]
fn graded_dimensions() {
    let d1 = g(2, 2).graded_dimension(1).unwrap();
    assert_eq!((d1.standard, d1.noncrossing, d1.rank), (6, 6, 6));
    let d2 = g(2, 2).graded_dimension(2).unwrap();
    assert_eq!((d2.monomials, d2.standard, d2.noncrossing, d2.rank), (21, 20, 20, 20));
    for n in 1..=4 {
        for d in 1..=3 {
            let gd = g(2, n).graded_dimension(d).unwrap();
            assert!(gd.holds(), "{gd:?}");
        }
    }
    for d in 1..=2 {
        let gd = g(3, 3).graded_dimension(d).unwrap();
        assert!(gd.holds(), "{gd:?}");
    }
}

#[test]
fn standard_decomposition() {
    let gr = g(2, 2);
    let nest = mono(&[&[1, 4], &[2, 3]]);
    let s = gr.decompose(&nest, MonomialKind::Standard).unwrap();
    assert!(s.keys().all(PlueckerMonomial::is_standard));
    assert_eq!(gr.expand_element(&s).unwrap(), gr.expand(&nest).unwrap());
}

#[test]
fn relevance() {
    let gr = g(2, 2);
    assert!(gr.indices().iter().all(|j| gr.relevant_to(j, &Partition::empty()).unwrap()));
    let lam = p(&[1]);
    assert!(!gr.relevant_to(&idx(&[3, 4]), &lam).unwrap());
    assert_eq!(gr.schubert_index(&lam).unwrap(), idx(&[2, 4]));
    assert_eq!(gr.schubert_counts(&lam, 1).unwrap(), (5, 5));
    for lam in Partition::all_in_box(2, 2) {
        let top = gr.schubert_index(&lam).unwrap();
        assert!(gr.relevant_to(&top, &lam).unwrap());
    }
    assert!(gr.schubert_index(&p(&[3])).is_err());
    assert!(gr.schubert_index(&p(&[1, 1, 1])).is_err());
}

#[test]
fn relevant_standard_monomials_extend_by_the_schubert_index() {
    let gr = g(2, 3);
    for lam in Partition::all_in_box(2, 3) {
        let top = gr.schubert_index(&lam).unwrap();
        for mon in gr.monomials_of_kind(2, MonomialKind::Standard) {
            // P_I goes last in the chain
            let last_below = mon.factors().last().unwrap().entries().iter().zip(top.entries()).all(|(a, b)| a <= b);
            assert_eq!(gr.monomial_relevant_to(&mon, &lam).unwrap(), last_below);
        }
    }
}

#[test]
fn schubert_counts_and_independence() {
    for n in 2..=5 {
        let gr = g(2, n - 2);
        for lam in Partition::all_in_box(2, n - 2) {
            for d in 1..=2 {
                let (sm, ncm) = gr.schubert_counts(&lam, d).unwrap();
                assert_eq!(sm, ncm, "{lam} {d}");
                assert!(gr.schubert_independent(&lam, d).unwrap(), "{lam} {d}");
            }
        }
    }
}

#[test]
fn exploration_for_three_rows() {
    let gr = g(3, 3);
    let mon = mono(&[&[1, 3, 5], &[2, 4, 6]]);
    let e = gr.explore_rewrite(&mon, 100).unwrap();
    assert!(e.finished);
    assert_eq!(e.steps.len(), 1);
    assert!(e.result.keys().all(PlueckerMonomial::is_noncrossing));
    assert_eq!(gr.expand_element(&e.result).unwrap(), gr.expand(&mon).unwrap());
    let two = g(2, 4).explore_rewrite(&mono(&[&[1, 4], &[2, 5], &[3, 6]]), 100).unwrap();
    assert!(two.finished);
    assert_eq!(two.result, straighten_g2n(&mono(&[&[1, 4], &[2, 5], &[3, 6]])).unwrap());
}

#[test]
fn json_shapes() {
    let mon = mono(&[&[2, 4], &[1, 3]]);
    let v = serde_json::to_value(&mon).unwrap();
    assert_eq!(v, serde_json::json!({"m": 2, "factors": [[1, 3], [2, 4]]}));
    assert_eq!(serde_json::from_value::<PlueckerMonomial>(v).unwrap(), mon);
    assert!(serde_json::from_value::<PlueckerMonomial>(serde_json::json!({"m": 2, "factors": [[3, 1]]})).is_err());
    assert!(serde_json::from_value::<PlueckerMonomial>(serde_json::json!({"m": 3, "factors": [[1, 2]]})).is_err());
    let e = LinComb::single(mon, q(-1));
    let v = serde_json::to_value(GrassElementJson(&e)).unwrap();
    assert_eq!(v, serde_json::json!([{"coeff": "-1/1", "monomial": {"m": 2, "factors": [[1, 3], [2, 4]]}}]));
    assert_eq!(element_string(&straighten_g2n(&mono(&[&[1, 3], &[2, 4]])).unwrap()), "P12P34 + P14P23");
}

fn arb_monomial() -> impl Strategy<Value = (usize, PlueckerMonomial)> {
    (2usize..=5).prop_flat_map(|n| {
        let idx = g(2, n).indices();
        prop::collection::vec(prop::sample::select(idx), 1..=3)
            .prop_map(move |f| (n, PlueckerMonomial::new(2, f).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn straightening_preserves_the_polynomial((n, mon) in arb_monomial()) {
        let gr = g(2, n);
        let s = straighten_g2n(&mon).unwrap();
        prop_assert!(s.keys().all(PlueckerMonomial::is_noncrossing));
        prop_assert!(s.keys().all(|x| x.content() == mon.content()));
        prop_assert_eq!(gr.expand_element(&s).unwrap(), gr.expand(&mon).unwrap());
    }

    #[test]
    fn tie_break_does_not_change_initial_terms(n in 2usize..=6, flip in any::<bool>()) {
        // reversing the tie-break order must not move the initial term of any 3-term relation
        let gr = g(2, n);
        for mon in gr.monomials(2).into_iter().filter(|x| !x.is_noncrossing()) {
            let rel = three_term_relation(&mon.factors()[0], &mon.factors()[1]).unwrap();
            let heaviest = rel.keys().max_by(|a, b| {
                let o = monomial_weight(a).unwrap().cmp(&monomial_weight(b).unwrap());
                if flip { o.then_with(|| b.cmp(a)) } else { o.then_with(|| a.cmp(b)) }
            }).unwrap();
            prop_assert_eq!(heaviest, &mon);
        }
    }
}

