//! Specht modules in the polynomial model: `P_T` is the product of `x_i - x_j` over pairs
//! with `i` above `j` in a column of `T`.

use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::Serialize;
use serde_json::json;

use crate::combinat::tableau::sort_sign;
use crate::combinat::{
    enumerate_nct_full, enumerate_syt_full, enumerate_syt_restated, fillings_of_shape, Filling, Partition, Tableau,
};
use crate::error::{Error, Result};
use crate::exactmath::{difference_product, rank_of, LinComb, Monomial, SpanBasis};
use crate::json::rational_string;
use crate::{ExactPoly, Rational};

/// Upper bound on Garnir replacements for a single expansion.
const GARNIR_CAP: usize = 1_000_000;

/// A rational combination of tableaux, realized through [`specht_poly`].
#[derive(Clone, Debug, PartialEq, Default)]
pub struct SpechtElement {
    terms: LinComb<Tableau, Rational>,
}

impl SpechtElement {
    pub fn from_terms(terms: LinComb<Tableau, Rational>) -> Self {
        SpechtElement { terms }
    }

    pub fn terms(&self) -> &LinComb<Tableau, Rational> {
        &self.terms
    }

    pub fn coeff(&self, t: &Tableau) -> Rational {
        self.terms.coeff(t)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn realize(&self) -> Result<ExactPoly> {
        let mut acc = ExactPoly::zero();
        for (t, c) in &self.terms {
            acc = acc + specht_poly(t)?.scale(c);
        }
        Ok(acc)
    }
}

impl Serialize for SpechtElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (t, c) in &self.terms {
            seq.serialize_element(&json!({"coeff": rational_string(c), "tableau": t}))?;
        }
        seq.end()
    }
}

fn column_pairs(t: &Tableau) -> Vec<(u32, u32)> {
    t.columns()
        .iter()
        .flat_map(|c| (0..c.len()).flat_map(move |i| (i + 1..c.len()).map(move |j| (c[i], c[j]))))
        .collect()
}

pub fn specht_poly(t: &Tableau) -> Result<ExactPoly> {
    difference_product(&column_pairs(t))
}

/// `P_T` evaluated at a point, without expanding.
pub fn specht_eval(t: &Tableau, point: &BTreeMap<u32, Rational>) -> Result<Rational> {
    let mut acc = Rational::from_integer(1.into());
    for (i, j) in column_pairs(t) {
        let xi = point.get(&i).ok_or(Error::MissingAssignment(i))?;
        let xj = point.get(&j).ok_or(Error::MissingAssignment(j))?;
        acc *= xi - xj;
    }
    Ok(acc)
}

/// Applies a permutation given in one-line notation (`omega[i-1]` is the image of `i`,
/// entries past its length fixed). Only `1..=acting` may move. Returns the relabelled
/// tableau with sorted columns and the sign picked up by sorting, so that
/// `omega * P_T = sign * P_{result}`.
pub fn permute_tableau(omega: &[u32], t: &Tableau, acting: u32) -> Result<(Tableau, i32)> {
    let k = omega.len() as u32;
    let mut seen = vec![false; omega.len()];
    for &v in omega {
        if v == 0 || v > k || seen[v as usize - 1] {
            return Err(Error::OutOfRange(format!("{omega:?} is not a permutation")));
        }
        seen[v as usize - 1] = true;
    }
    if let Some(i) = (acting + 1..=k).find(|&i| omega[i as usize - 1] != i) {
        return Err(Error::ActionDomain(i, acting));
    }
    t.relabel(|v| if v <= k { omega[v as usize - 1] } else { v })
}

/// Brings a tableau into the `outer` shape of `f`: a tableau of shape `f.inner()` in Young
/// column order is completed, a tableau of the outer shape must already carry `f`.
pub fn lift(t: &Tableau, f: &Filling) -> Result<Tableau> {
    if t.size() == f.total() && f.agrees(t) {
        return Ok(t.clone());
    }
    if t.size() == f.n() && t.has_young_shape() && &t.shape() == f.inner() {
        return f.complete(t);
    }
    Err(Error::FillingDisagreement)
}

/// One Garnir relation for the first row descent between adjacent columns, written as
/// `P_T = sum c * P_{T'}`; `None` when `T` is standard.
pub fn garnir_relation(t: &Tableau) -> Option<Vec<(Tableau, i32)>> {
    let cols = t.columns();
    let (j, r) = (0..cols.len().saturating_sub(1)).find_map(|j| {
        let (a, b) = (&cols[j], &cols[j + 1]);
        (0..b.len().min(a.len())).find(|&r| a[r] > b[r]).map(|r| (j, r))
    })?;
    let (a, b) = (&cols[j], &cols[j + 1]);
    let big_a = &a[r..];
    let big_b = &b[..=r];
    let mut reference: Vec<u32> = big_a.iter().chain(big_b).copied().collect();
    let ref_sign = sort_sign(&mut reference);
    let e = reference;
    let mut out = Vec::new();
    for s in subsets(&e, big_a.len()) {
        if s == big_a {
            continue;
        }
        let rest: Vec<u32> = e.iter().copied().filter(|v| !s.contains(v)).collect();
        let mut word: Vec<u32> = s.iter().chain(&rest).copied().collect();
        let pi_sign = ref_sign * sort_sign(&mut word);
        let mut cj: Vec<u32> = a[..r].iter().chain(&s).copied().collect();
        let mut ck: Vec<u32> = rest.iter().chain(&b[r + 1..]).copied().collect();
        let sign = pi_sign * sort_sign(&mut cj) * sort_sign(&mut ck);
        let mut columns = cols.to_vec();
        columns[j] = cj;
        columns[j + 1] = ck;
        out.push((Tableau::new(columns).expect("sorted disjoint columns"), -sign));
    }
    Some(out)
}

fn subsets(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(items: &[u32], k: usize, from: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

/// Rewrites a tableau of Young shape over standard tableaux by Garnir relations.
pub fn straighten(t: &Tableau) -> Result<LinComb<Tableau, Rational>> {
    if !t.has_young_shape() {
        return Err(Error::Classification { expected: "tableau with Young column order" });
    }
    let mut done = LinComb::zero();
    let mut work: LinComb<Tableau, Rational> = LinComb::unit(t.clone());
    let mut steps = 0usize;
    // largest key first: Garnir images are smaller in the column-word order
    while let Some((key, c)) = pop_last(&mut work) {
        match garnir_relation(&key) {
            None => done.add_term(key, c),
            Some(terms) => {
                steps += 1;
                if steps > GARNIR_CAP {
                    return Err(Error::Internal(format!("Garnir straightening of {t} exceeded {GARNIR_CAP} steps")));
                }
                for (k, s) in terms {
                    work.add_term(k, c.clone() * Rational::from_integer(s.into()));
                }
            }
        }
    }
    Ok(done)
}

fn pop_last(l: &mut LinComb<Tableau, Rational>) -> Option<(Tableau, Rational)> {
    let k = l.keys().next_back()?.clone();
    let c = l.remove(&k)?;
    Some((k, c))
}

/// Expansion of `P_T` over standard tableaux agreeing with `f`. The Garnir expansion of
/// the stripped tableau is completed and checked modulo the relations of `f`; if that
/// check fails, the coordinates are solved for instead.
pub fn garnir_expand(t: &Tableau, f: &Filling) -> Result<SpechtElement> {
    let full = lift(t, f)?;
    let inner = f.strip(&full)?;
    let target = specht_poly(&full)?;
    let combo = straighten(&inner)?;
    let lifted = SpechtElement::from_terms(
        combo.iter().map(|(k, c)| Ok((f.complete(k)?, c.clone()))).collect::<Result<_>>()?,
    );
    let rest = target - lifted.realize()?;
    if rest.is_zero() || Relations::new(f)?.contains(&rest) {
        return Ok(lifted);
    }
    PolyBasis::syt(f)?.decompose(&full)
}

/// Standard tableaux of the outer shape whose large entries part from `f` upwards: scanning
/// the values of `f` from the largest down, the first one standing in a different row than
/// in `f` stands higher. Their polynomials span the subspace that `S^{λ,F}` is taken modulo.
pub fn relation_tableaux(f: &Filling) -> Vec<Tableau> {
    if f.is_empty() {
        return Vec::new();
    }
    let f_row: BTreeMap<u32, usize> = f.cells().iter().map(|(&(r, _), &v)| (v, r + 1)).collect();
    enumerate_syt_restated(f.outer()).into_iter().filter(|t| parts_upwards(t, &f_row)).collect()
}

fn parts_upwards(t: &Tableau, f_row: &BTreeMap<u32, usize>) -> bool {
    for (&v, &row) in f_row.iter().rev() {
        let col = t.columns().iter().find(|c| c.contains(&v)).expect("standard tableau holds every value");
        let r = col.iter().filter(|&&x| x <= v).count();
        if r != row {
            return r < row;
        }
    }
    false
}

/// The relation subspace of a filling, spanned by the polynomials of [`relation_tableaux`].
#[derive(Clone, Debug)]
pub struct Relations {
    tableaux: Vec<Tableau>,
    span: SpanBasis<Monomial, Rational>,
}

impl Relations {
    pub fn new(f: &Filling) -> Result<Self> {
        let tableaux = relation_tableaux(f);
        let span = SpanBasis::new(polys_of(&tableaux)?)?;
        Ok(Relations { tableaux, span })
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    /// Whether `p` vanishes in the quotient.
    pub fn contains(&self, p: &ExactPoly) -> bool {
        self.span.coordinates(p.as_map()).is_some()
    }
}

fn polys_of(tableaux: &[Tableau]) -> Result<Vec<BTreeMap<Monomial, Rational>>> {
    tableaux.iter().map(|t| Ok(specht_poly(t)?.into_terms())).collect()
}

/// A basis of `S^{λ,F}` given by Specht polynomials of a family of tableaux, taken modulo
/// the relations of the filling.
#[derive(Clone, Debug)]
pub struct PolyBasis {
    filling: Filling,
    tableaux: Vec<Tableau>,
    relations: Vec<Tableau>,
    span: SpanBasis<Monomial, Rational>,
}

impl PolyBasis {
    /// Fails with `DependentFamily` when the family is dependent modulo the relations.
    pub fn new(filling: Filling, tableaux: Vec<Tableau>) -> Result<Self> {
        let relations = relation_tableaux(&filling);
        let mut vectors = polys_of(&tableaux)?;
        vectors.extend(polys_of(&relations)?);
        let span = SpanBasis::new(vectors)?;
        Ok(PolyBasis { filling, tableaux, relations, span })
    }

    /// Non-crossing tableaux agreeing with `f`, in reading order.
    pub fn nct(f: &Filling) -> Result<Self> {
        Self::new(f.clone(), enumerate_nct_full(f))
    }

    /// Standard tableaux agreeing with `f`, in reading order.
    pub fn syt(f: &Filling) -> Result<Self> {
        Self::new(f.clone(), enumerate_syt_full(f))
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn relations(&self) -> &[Tableau] {
        &self.relations
    }

    pub fn filling(&self) -> &Filling {
        &self.filling
    }

    /// Unique coordinates of `P_T` modulo the relations. The solve checks the full
    /// residual, so `P_T` minus the realized element is exactly a relation.
    pub fn decompose(&self, t: &Tableau) -> Result<SpechtElement> {
        let full = lift(t, &self.filling)?;
        self.decompose_poly(&specht_poly(&full)?)
    }

    pub fn decompose_poly(&self, p: &ExactPoly) -> Result<SpechtElement> {
        let coords = self.span.coordinates(p.as_map()).ok_or(Error::NotInSpan)?;
        Ok(SpechtElement::from_terms(self.tableaux.iter().cloned().zip(coords).collect()))
    }

    /// The part of `p` the basis does not account for; a combination of relation
    /// polynomials whenever `p` is in the module.
    pub fn remainder(&self, p: &ExactPoly) -> Result<ExactPoly> {
        Ok(p.clone() - self.decompose_poly(p)?.realize()?)
    }
}

/// Coordinates of `P_T` in the basis of non-crossing tableaux agreeing with `f`.
pub fn decompose_into_nct(t: &Tableau, f: &Filling) -> Result<SpechtElement> {
    PolyBasis::nct(f)?.decompose(t)
}

/// The point `x_i = l(i)` read off the reading of `t`.
pub fn reading_evaluation(t: &Tableau) -> Result<BTreeMap<u32, Rational>> {
    let r = t.reading()?;
    Ok(r.labels().iter().enumerate().map(|(i, &l)| (i as u32 + 1, Rational::from_integer(l.into()))).collect())
}

/// Exact rank of the Specht polynomials of a family.
pub fn family_rank(tableaux: &[Tableau]) -> Result<usize> {
    let vectors = tableaux.iter().map(|t| Ok(specht_poly(t)?.into_terms())).collect::<Result<Vec<_>>>()?;
    Ok(rank_of(&vectors))
}

/// Rank of `{P_T}` over all fillings `T` of `lambda`; with `f`, the fillings are completed
/// and the rank is taken modulo the relations of `f`.
pub fn module_rank(lambda: &Partition, f: Option<&Filling>) -> Result<usize> {
    let family = fillings_of_shape(lambda);
    let Some(f) = f else {
        return family_rank(&family);
    };
    if f.inner() != lambda {
        return Err(Error::DimensionMismatch(format!("filling completes {} not {lambda}", f.inner())));
    }
    let relations = relation_tableaux(f);
    let mut all: Vec<Tableau> = family.iter().map(|t| f.complete(t)).collect::<Result<_>>()?;
    all.extend(relations.iter().cloned());
    Ok(family_rank(&all)? - relations.len())
}

/// Pairs `(S, T)` of distinct non-crossing tableaux where `P_T` survives the reading
/// evaluation of `S` although `T` has the larger reading. Empty when triangularity holds.
pub fn triangularity_violations(f: &Filling) -> Result<Vec<(Tableau, Tableau)>> {
    let family = enumerate_nct_full(f);
    let readings = family.iter().map(Tableau::reading).collect::<Result<Vec<_>>>()?;
    let mut bad = Vec::new();
    for (s, rs) in family.iter().zip(&readings) {
        let point = reading_evaluation(s)?;
        if specht_eval(s, &point)? == Rational::from_integer(0.into()) {
            bad.push((s.clone(), s.clone()));
        }
        for (t, rt) in family.iter().zip(&readings) {
            if t != s && rt > rs && specht_eval(t, &point)? != Rational::from_integer(0.into()) {
                bad.push((s.clone(), t.clone()));
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests;
