//! The coordinate ring of the Grassmannian `G(m, n)` of `m`-planes in `C^{m+n}`, presented
//! by Plücker coordinates.
//!
//! Initial terms follow the convention that the initial monomial of `f` is the
//! *smallest* supported monomial for the weight order, not the largest.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::bidet::{minor, GenericMatrix};
use crate::brute::subsets;
use crate::combinat::{is_semi_noncrossing, Partition, Tableau};
use crate::error::{Error, Result};
use crate::exactmath::{rank_of, LinComb, Monomial, SpanBasis};
use crate::json::rational_string;
use crate::{ExactPoly, Rational};

/// Strictly increasing column indices `j_1 < ... < j_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct PlueckerIndex(Vec<u32>);

impl TryFrom<Vec<u32>> for PlueckerIndex {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        PlueckerIndex::new(v)
    }
}

impl From<PlueckerIndex> for Vec<u32> {
    fn from(j: PlueckerIndex) -> Self {
        j.0
    }
}

impl PlueckerIndex {
    pub fn new(j: Vec<u32>) -> Result<Self> {
        if j.is_empty() || j[0] == 0 || j.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MalformedPart(j));
        }
        Ok(PlueckerIndex(j))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for PlueckerIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        let sep = if self.0.iter().any(|&v| v > 9) { "," } else { "" };
        write!(f, "P{}", parts.join(sep))
    }
}

/// A product `P_{J^1} ... P_{J^h}`, factors kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MonomialJson", into = "MonomialJson")]
pub struct PlueckerMonomial {
    m: usize,
    factors: Vec<PlueckerIndex>,
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    m: usize,
    factors: Vec<Vec<u32>>,
}

impl TryFrom<MonomialJson> for PlueckerMonomial {
    type Error = Error;

    fn try_from(j: MonomialJson) -> Result<Self> {
        let factors = j.factors.into_iter().map(PlueckerIndex::new).collect::<Result<Vec<_>>>()?;
        PlueckerMonomial::new(j.m, factors)
    }
}

impl From<PlueckerMonomial> for MonomialJson {
    fn from(mon: PlueckerMonomial) -> Self {
        MonomialJson { m: mon.m, factors: mon.factors.into_iter().map(|j| j.0).collect() }
    }
}

impl PlueckerMonomial {
    pub fn new(m: usize, mut factors: Vec<PlueckerIndex>) -> Result<Self> {
        if m == 0 {
            return Err(Error::OutOfRange("m must be positive".into()));
        }
        if let Some(j) = factors.iter().find(|j| j.len() != m) {
            return Err(Error::DimensionMismatch(format!("{j} is not an {m}-tuple")));
        }
        factors.sort();
        Ok(PlueckerMonomial { m, factors })
    }

    /// Shorthand for tests and the command line: `[[1,3],[2,4]]`.
    pub fn from_lists(m: usize, factors: &[Vec<u32>]) -> Result<Self> {
        PlueckerMonomial::new(m, factors.iter().cloned().map(PlueckerIndex::new).collect::<Result<_>>()?)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn factors(&self) -> &[PlueckerIndex] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    /// Multiset of all column indices used.
    pub fn content(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.factors.iter().flat_map(|j| j.0.iter().copied()).collect();
        v.sort_unstable();
        v
    }

    /// The `h x m` array with row `k` the factor `J^k`; standard iff its columns weakly
    /// increase (after sorting the rows lexicographically).
    pub fn is_standard(&self) -> bool {
        self.factors.windows(2).all(|w| w[0].0.iter().zip(&w[1].0).all(|(a, b)| a <= b))
    }

    /// Non-crossing as the bitableau whose right tableau has the factors as columns. For
    /// `m = 2` this is the same as having no [`crossing_pairs`](Self::crossing_pairs); for
    /// larger `m` repeated entries can hide a crossing from the pairwise pattern.
    pub fn is_noncrossing(&self) -> bool {
        if self.factors.is_empty() {
            return true;
        }
        let t = Tableau::new(self.factors.iter().map(|j| j.0.clone()).collect()).expect("strict factors");
        is_semi_noncrossing(&t)
    }

    /// Positions `(p, q)` of factor pairs showing `j_k^p < j_k^q < j_{k+1}^p < j_{k+1}^q`.
    pub fn crossing_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (p, a) in self.factors.iter().enumerate() {
            for (q, b) in self.factors.iter().enumerate() {
                if p != q && (0..self.m - 1).any(|k| a.0[k] < b.0[k] && b.0[k] < a.0[k + 1] && a.0[k + 1] < b.0[k + 1]) {
                    out.push((p, q));
                }
            }
        }
        out
    }

    fn replace(&self, p: usize, q: usize, new: &[PlueckerIndex]) -> PlueckerMonomial {
        let mut factors: Vec<PlueckerIndex> =
            self.factors.iter().enumerate().filter(|&(i, _)| i != p && i != q).map(|(_, j)| j.clone()).collect();
        factors.extend(new.iter().cloned());
        factors.sort();
        PlueckerMonomial { m: self.m, factors }
    }
}

impl fmt::Display for PlueckerMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for j in &self.factors {
            write!(f, "{j}")?;
        }
        Ok(())
    }
}

pub type GrassElement = LinComb<PlueckerMonomial, Rational>;

/// JSON wrapper: a list of `{"coeff","monomial"}`.
pub struct GrassElementJson<'a>(pub &'a GrassElement);

impl Serialize for GrassElementJson<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (mon, c) in self.0 {
            seq.serialize_element(&json!({"coeff": rational_string(c), "monomial": mon}))?;
        }
        seq.end()
    }
}

pub fn element_string(e: &GrassElement) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (mon, c)) in e.iter().enumerate() {
        let neg = c < &Rational::from_integer(0.into());
        let abs = if neg { -c.clone() } else { c.clone() };
        out.push_str(match (i, neg) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        });
        if abs != Rational::from_integer(1.into()) {
            out.push_str(&crate::json::rational_short(&abs));
        }
        out.push_str(&mon.to_string());
    }
    out
}

fn one() -> Rational {
    Rational::from_integer(1.into())
}

/// Which monomials to solve against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialKind {
    Standard,
    Noncrossing,
}

impl MonomialKind {
    fn test(self, mon: &PlueckerMonomial) -> bool {
        match self {
            MonomialKind::Standard => mon.is_standard(),
            MonomialKind::Noncrossing => mon.is_noncrossing(),
        }
    }
}

/// Dimension of one graded piece, computed three ways.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDimension {
    pub m: usize,
    pub n: usize,
    pub degree: usize,
    pub monomials: usize,
    pub standard: usize,
    pub noncrossing: usize,
    pub rank: usize,
}

impl GradedDimension {
    pub fn holds(&self) -> bool {
        self.standard == self.rank && self.noncrossing == self.rank
    }
}

/// `G(m, n)` together with the generic `m x (m+n)` matrix its coordinates are minors of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grassmannian {
    pub m: usize,
    pub n: usize,
}

impl Grassmannian {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || m > crate::bidet::MAX_MINOR {
            return Err(Error::OutOfRange(format!("m = {m} outside 1..={}", crate::bidet::MAX_MINOR)));
        }
        Ok(Grassmannian { m, n })
    }

    pub fn columns(&self) -> u32 {
        (self.m + self.n) as u32
    }

    pub fn matrix(&self) -> GenericMatrix {
        GenericMatrix::new(self.m as u32, self.columns())
    }

    pub fn check_index(&self, j: &PlueckerIndex) -> Result<()> {
        if j.len() != self.m || j.0.last().is_some_and(|&v| v > self.columns()) {
            return Err(Error::OutOfRange(format!("{j} is not a coordinate of G({},{})", self.m, self.n)));
        }
        Ok(())
    }

    pub fn check(&self, mon: &PlueckerMonomial) -> Result<()> {
        if mon.m != self.m {
            return Err(Error::DimensionMismatch(format!("monomial with m = {} on G({},{})", mon.m, self.m, self.n)));
        }
        mon.factors.iter().try_for_each(|j| self.check_index(j))
    }

    /// All coordinates, lexicographically.
    pub fn indices(&self) -> Vec<PlueckerIndex> {
        let cols: Vec<u32> = (1..=self.columns()).collect();
        subsets(&cols, self.m).into_iter().map(PlueckerIndex).collect()
    }

    /// All monomials of degree `d`, sorted.
    pub fn monomials(&self, d: usize) -> Vec<PlueckerMonomial> {
        let idx = self.indices();
        let mut out = Vec::new();
        let mut pick = Vec::with_capacity(d);
        fn rec(idx: &[PlueckerIndex], from: usize, d: usize, m: usize, pick: &mut Vec<PlueckerIndex>, out: &mut Vec<PlueckerMonomial>) {
            if pick.len() == d {
                out.push(PlueckerMonomial { m, factors: pick.clone() });
                return;
            }
            for i in from..idx.len() {
                pick.push(idx[i].clone());
                rec(idx, i, d, m, pick, out);
                pick.pop();
            }
        }
        rec(&idx, 0, d, self.m, &mut pick, &mut out);
        out
    }

    pub fn monomials_of_kind(&self, d: usize, kind: MonomialKind) -> Vec<PlueckerMonomial> {
        self.monomials(d).into_iter().filter(|mon| kind.test(mon)).collect()
    }

    /// `P_J` as a maximal minor of the generic matrix.
    pub fn coordinate(&self, j: &PlueckerIndex) -> Result<ExactPoly> {
        self.check_index(j)?;
        let rows: Vec<u32> = (1..=self.m as u32).collect();
        minor(&self.matrix(), &rows, &j.0)
    }

    pub fn expand(&self, mon: &PlueckerMonomial) -> Result<ExactPoly> {
        self.check(mon)?;
        let mut out = ExactPoly::constant(one());
        for j in &mon.factors {
            out = out.mul_ref(&self.coordinate(j)?);
        }
        Ok(out)
    }

    pub fn expand_element(&self, e: &GrassElement) -> Result<ExactPoly> {
        let mut out = ExactPoly::zero();
        for (mon, c) in e {
            out = out + self.expand(mon)?.scale(c);
        }
        Ok(out)
    }

    /// The relation obtained by alternating over `i_l, ..., i_m, j_1, ..., j_l`: a sum over
    /// the ways of sending `m - l + 1` of these `m + 1` indices to the first factor and the
    /// rest to the second, each term signed by the shuffle. Terms with a repeated index
    /// vanish; the others are rewritten on increasing indices.
    pub fn pluecker_relation(&self, i: &[u32], j: &[u32], l: usize) -> Result<GrassElement> {
        let m = self.m;
        if i.len() != m || j.len() != m {
            return Err(Error::DimensionMismatch(format!("tuples {i:?}, {j:?} must have length {m}")));
        }
        if l == 0 || l > m {
            return Err(Error::OutOfRange(format!("l = {l} outside 1..={m}")));
        }
        if let Some(&v) = i.iter().chain(j).find(|&&v| v == 0 || v > self.columns()) {
            return Err(Error::OutOfRange(format!("index {v} outside 1..={}", self.columns())));
        }
        let moving: Vec<u32> = i[l - 1..].iter().chain(&j[..l]).copied().collect();
        let positions: Vec<u32> = (0..moving.len() as u32).collect();
        let mut out = GrassElement::zero();
        for first in subsets(&positions, m - l + 1) {
            let second: Vec<u32> = positions.iter().copied().filter(|p| !first.contains(p)).collect();
            let mut perm: Vec<u32> = first.clone();
            perm.extend(&second);
            let mut a: Vec<u32> = i[..l - 1].to_vec();
            a.extend(first.iter().map(|&p| moving[p as usize]));
            let mut b: Vec<u32> = second.iter().map(|&p| moving[p as usize]).collect();
            b.extend(&j[l..]);
            let (Some((sa, a)), Some((sb, b))) = (sort_signed(a), sort_signed(b)) else { continue };
            let sign = permutation_sign(&perm) * sa * sb;
            out.add_term(PlueckerMonomial::new(m, vec![a, b])?, Rational::from_integer(sign.into()));
        }
        Ok(out)
    }

    /// Every relation from [`Grassmannian::pluecker_relation`] over ordered pairs of
    /// coordinates and all `l`, dropping those that cancel to zero.
    pub fn all_pluecker_relations(&self) -> Result<Vec<GrassElement>> {
        let idx = self.indices();
        let mut out = BTreeSet::new();
        for a in &idx {
            for b in &idx {
                for l in 1..=self.m {
                    let r = self.pluecker_relation(&a.0, &b.0, l)?;
                    if !r.is_zero() {
                        out.insert(r.into_iter().collect::<Vec<_>>());
                    }
                }
            }
        }
        Ok(out.into_iter().map(|terms| terms.into_iter().collect()).collect())
    }

    /// Coordinates of `mon` in the monomials of `kind` with the same content, by exact solve
    /// on the minor expansion.
    pub fn decompose(&self, mon: &PlueckerMonomial, kind: MonomialKind) -> Result<GrassElement> {
        self.check(mon)?;
        if kind.test(mon) {
            return Ok(LinComb::unit(mon.clone()));
        }
        let content = mon.content();
        let family: Vec<PlueckerMonomial> =
            self.monomials_of_kind(mon.degree(), kind).into_iter().filter(|f| f.content() == content).collect();
        let vectors = family.iter().map(|f| Ok(self.expand(f)?.into_terms())).collect::<Result<Vec<_>>>()?;
        let span = SpanBasis::new(vectors)?;
        let coords = span.coordinates(self.expand(mon)?.as_map()).ok_or(Error::NotInSpan)?;
        Ok(family.into_iter().zip(coords).collect())
    }

    /// [`Grassmannian::decompose`] for every degree-`d` monomial, sharing one solve basis
    /// per content.
    pub fn decompose_all(&self, d: usize, kind: MonomialKind) -> Result<BTreeMap<PlueckerMonomial, GrassElement>> {
        let mut by_content: BTreeMap<Vec<u32>, Vec<PlueckerMonomial>> = BTreeMap::new();
        for mon in self.monomials(d) {
            by_content.entry(mon.content()).or_default().push(mon);
        }
        let mut out = BTreeMap::new();
        for group in by_content.into_values() {
            let family: Vec<&PlueckerMonomial> = group.iter().filter(|x| kind.test(x)).collect();
            let vectors = family.iter().map(|f| Ok(self.expand(f)?.into_terms())).collect::<Result<Vec<_>>>()?;
            let span = SpanBasis::new(vectors)?;
            for mon in &group {
                let coords = span.coordinates(self.expand(mon)?.as_map()).ok_or(Error::NotInSpan)?;
                out.insert(mon.clone(), family.iter().map(|&f| f.clone()).zip(coords).collect());
            }
        }
        Ok(out)
    }

    /// Dimension of the degree-`d` piece of the coordinate ring: standard monomials,
    /// non-crossing monomials, and the exact rank of all monomials.
    pub fn graded_dimension(&self, d: usize) -> Result<GradedDimension> {
        let all = self.monomials(d);
        let mut by_content: BTreeMap<Vec<u32>, Vec<BTreeMap<Monomial, Rational>>> = BTreeMap::new();
        for mon in &all {
            by_content.entry(mon.content()).or_default().push(self.expand(mon)?.into_terms());
        }
        // different contents have disjoint supports, so ranks add up
        let rank = by_content.values().map(|v| rank_of(v)).sum();
        Ok(GradedDimension {
            m: self.m,
            n: self.n,
            degree: d,
            monomials: all.len(),
            standard: all.iter().filter(|x| x.is_standard()).count(),
            noncrossing: all.iter().filter(|x| x.is_noncrossing()).count(),
            rank,
        })
    }

    fn check_shape(&self, lambda: &Partition) -> Result<()> {
        if lambda.num_rows() > self.m || lambda.part(0) > self.n {
            return Err(Error::ShapeContainment {
                inner: lambda.parts().to_vec(),
                outer: Partition::rectangle(self.m, self.n).parts().to_vec(),
            });
        }
        Ok(())
    }

    /// The index `i_k = n + k - λ_k`, the largest coordinate relevant to `λ`.
    pub fn schubert_index(&self, lambda: &Partition) -> Result<PlueckerIndex> {
        self.check_shape(lambda)?;
        PlueckerIndex::new((1..=self.m).map(|k| (self.n + k - lambda.part(k - 1)) as u32).collect())
    }

    /// `j_k <= n + k - λ_k` for every `k`.
    pub fn relevant_to(&self, j: &PlueckerIndex, lambda: &Partition) -> Result<bool> {
        self.check_index(j)?;
        let top = self.schubert_index(lambda)?;
        Ok(j.0.iter().zip(&top.0).all(|(a, b)| a <= b))
    }

    pub fn monomial_relevant_to(&self, mon: &PlueckerMonomial, lambda: &Partition) -> Result<bool> {
        for j in &mon.factors {
            if !self.relevant_to(j, lambda)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Numbers of standard and of non-crossing degree-`d` monomials relevant to `λ`.
    pub fn schubert_counts(&self, lambda: &Partition, d: usize) -> Result<(usize, usize)> {
        let (mut sm, mut ncm) = (0, 0);
        for mon in self.monomials(d) {
            if self.monomial_relevant_to(&mon, lambda)? {
                sm += mon.is_standard() as usize;
                ncm += mon.is_noncrossing() as usize;
            }
        }
        Ok((sm, ncm))
    }

    /// Writes every relevant non-crossing monomial in the standard basis and keeps only the
    /// relevant standard coordinates; the images are independent iff this matrix has full
    /// rank.
    pub fn schubert_independent(&self, lambda: &Partition, d: usize) -> Result<bool> {
        let mut rows = Vec::new();
        for mon in self.monomials_of_kind(d, MonomialKind::Noncrossing) {
            if !self.monomial_relevant_to(&mon, lambda)? {
                continue;
            }
            let mut row: BTreeMap<PlueckerMonomial, Rational> = BTreeMap::new();
            for (s, c) in self.decompose(&mon, MonomialKind::Standard)? {
                if self.monomial_relevant_to(&s, lambda)? {
                    row.insert(s, c);
                }
            }
            rows.push(row);
        }
        Ok(rank_of(&rows) == rows.len())
    }

    /// Rewrites crossing pairs of factors into non-crossing pairs until no crossing is left
    /// or `max_steps` rewrites were made. Each step replaces `P_J P_J'` by its non-crossing
    /// expansion. For `m = 2` this always finishes; beyond that it is an experiment.
    pub fn explore_rewrite(&self, mon: &PlueckerMonomial, max_steps: usize) -> Result<Exploration> {
        self.check(mon)?;
        let mut work: GrassElement = LinComb::unit(mon.clone());
        let mut steps = Vec::new();
        let mut cache: BTreeMap<PlueckerMonomial, GrassElement> = BTreeMap::new();
        while steps.len() < max_steps {
            let Some((cur, c)) = work.iter().find(|(x, _)| !x.is_noncrossing()).map(|(x, c)| (x.clone(), c.clone()))
            else {
                return Ok(Exploration { result: work, steps, finished: true });
            };
            let pairs = (0..cur.degree()).flat_map(|p| (p + 1..cur.degree()).map(move |q| (p, q)));
            let mut found = None;
            for (p, q) in pairs {
                let pair = PlueckerMonomial::new(self.m, vec![cur.factors[p].clone(), cur.factors[q].clone()])?;
                if !pair.is_noncrossing() {
                    found = Some((p, q, pair));
                    break;
                }
            }
            // every pair is fine but the whole monomial is not: no pairwise move applies
            let Some((p, q, pair)) = found else {
                return Ok(Exploration { result: work, steps, finished: false });
            };
            let replacement = match cache.get(&pair) {
                Some(r) => r.clone(),
                None => {
                    let r = self.decompose(&pair, MonomialKind::Noncrossing)?;
                    cache.insert(pair.clone(), r.clone());
                    r
                }
            };
            work.remove(&cur);
            for (new, k) in &replacement {
                work.add_term(cur.replace(p, q, new.factors()), c.clone() * k.clone());
            }
            steps.push(RewriteStep { monomial: cur, pair, replacement: replacement.iter().map(|(a, b)| (a.clone(), b.clone())).collect() });
        }
        let finished = work.keys().all(PlueckerMonomial::is_noncrossing);
        Ok(Exploration { result: work, steps, finished })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RewriteStep {
    pub monomial: PlueckerMonomial,
    pub pair: PlueckerMonomial,
    pub replacement: Vec<(PlueckerMonomial, Rational)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Exploration {
    pub result: GrassElement,
    pub steps: Vec<RewriteStep>,
    pub finished: bool,
}

/// Sorts `v`, returning the sign of the sorting permutation; `None` on a repeated entry.
fn sort_signed(mut v: Vec<u32>) -> Option<(i64, PlueckerIndex)> {
    let mut sign = 1;
    for i in 0..v.len() {
        for k in 0..v.len() - 1 - i {
            if v[k] > v[k + 1] {
                v.swap(k, k + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, PlueckerIndex(v)))
}

fn permutation_sign(p: &[u32]) -> i64 {
    let inv = (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum::<usize>();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn require_two(m: usize) -> Result<()> {
    if m != 2 {
        return Err(Error::Unsupported(format!("the weight order is defined for m = 2, not m = {m}")));
    }
    Ok(())
}

/// `w(J) = j_2 - j_1`.
pub fn weight(j: &PlueckerIndex) -> Result<u32> {
    require_two(j.len())?;
    Ok(j.0[1] - j.0[0])
}

/// Product of the factor weights.
pub fn monomial_weight(mon: &PlueckerMonomial) -> Result<BigUint> {
    require_two(mon.m)?;
    mon.factors.iter().try_fold(BigUint::from(1u32), |acc, j| Ok(acc * weight(j)?))
}

/// The order `≺`: larger weight is smaller; equal weights fall back to the lexicographic
/// order of the sorted factor lists. `Less` means `a ≺ b`.
pub fn precedes(a: &PlueckerMonomial, b: &PlueckerMonomial) -> Result<Ordering> {
    Ok(monomial_weight(b)?.cmp(&monomial_weight(a)?).then_with(|| a.factors.cmp(&b.factors)))
}

/// The `≺`-smallest supported monomial.
pub fn initial_term(f: &GrassElement) -> Result<PlueckerMonomial> {
    let mut best: Option<&PlueckerMonomial> = None;
    for mon in f.keys() {
        best = match best {
            Some(b) if precedes(b, mon)? != Ordering::Greater => Some(b),
            _ => Some(mon),
        };
    }
    best.cloned().ok_or(Error::ZeroElement)
}

/// For crossing `J = (j1, j2)`, `J' = (j1', j2')` with `j1 < j1' < j2 < j2'`:
/// `P_{j1 j1'} P_{j2 j2'} - P_{j1 j2} P_{j1' j2'} + P_{j1 j2'} P_{j1' j2}`.
pub fn three_term_relation(j: &PlueckerIndex, jp: &PlueckerIndex) -> Result<GrassElement> {
    require_two(j.len())?;
    require_two(jp.len())?;
    let (a, b) = if j <= jp { (j, jp) } else { (jp, j) };
    let [j1, j2] = [a.0[0], a.0[1]];
    let [k1, k2] = [b.0[0], b.0[1]];
    if !(j1 < k1 && k1 < j2 && j2 < k2) {
        return Err(Error::OutOfRange(format!("{a} and {b} do not cross")));
    }
    let mon = |x: [u32; 2], y: [u32; 2]| PlueckerMonomial::from_lists(2, &[x.to_vec(), y.to_vec()]);
    let mut out = GrassElement::zero();
    out.add_term(mon([j1, k1], [j2, k2])?, one());
    out.add_term(mon([j1, j2], [k1, k2])?, -one());
    out.add_term(mon([j1, k2], [k1, j2])?, one());
    Ok(out)
}

/// Bound on rewrites before [`straighten_g2n`] gives up and reports an internal error.
pub const MAX_REWRITES: usize = 1 << 20;

/// Writes a monomial of `G(2, n)` in non-crossing monomials. The heaviest crossing monomial
/// is rewritten first, at its `≺`-smallest crossing pair, by
/// `P_{j1 j2} P_{j1' j2'} = P_{j1 j1'} P_{j2 j2'} + P_{j1 j2'} P_{j1' j2}`.
/// Both new pairs are lighter, so the product of weights strictly drops.
pub fn straighten_g2n(mon: &PlueckerMonomial) -> Result<GrassElement> {
    straighten_element(&LinComb::unit(mon.clone()))
}

pub fn straighten_element(e: &GrassElement) -> Result<GrassElement> {
    let mut work = e.clone();
    if let Some(mon) = work.keys().next() {
        require_two(mon.m)?;
    }
    for _ in 0..MAX_REWRITES {
        let mut heaviest: Option<(BigUint, PlueckerMonomial)> = None;
        for mon in work.keys().filter(|x| !x.is_noncrossing()) {
            let w = monomial_weight(mon)?;
            if heaviest.as_ref().is_none_or(|(hw, _)| &w > hw) {
                heaviest = Some((w, mon.clone()));
            }
        }
        let Some((_, cur)) = heaviest else { return Ok(work) };
        let c = work.remove(&cur).expect("chosen from the support");
        let mut best: Option<(usize, usize, PlueckerMonomial)> = None;
        for (p, q) in cur.crossing_pairs() {
            let pair = PlueckerMonomial::new(2, vec![cur.factors[p].clone(), cur.factors[q].clone()])?;
            let better = match &best {
                None => true,
                Some((_, _, b)) => precedes(&pair, b)? == Ordering::Less,
            };
            if better {
                best = Some((p, q, pair));
            }
        }
        let (p, q, _) = best.expect("crossing monomial has a crossing pair");
        let (j, k) = (&cur.factors[p].0, &cur.factors[q].0);
        let (j, k) = if j < k { (j, k) } else { (k, j) };
        for new in [[[j[0], k[0]], [j[1], k[1]]], [[j[0], k[1]], [k[0], j[1]]]] {
            let pair: Vec<PlueckerIndex> = new.iter().map(|x| PlueckerIndex(x.to_vec())).collect();
            work.add_term(cur.replace(p, q, &pair), c.clone());
        }
    }
    Err(Error::Internal(format!("straightening did not finish within {MAX_REWRITES} rewrites")))
}

#[cfg(test)]
mod tests;
