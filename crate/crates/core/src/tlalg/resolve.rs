use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::Serialize;

use super::diagram::{tl_product, TLDiagram, TLElement};
use super::matching::Matching;
use crate::combinat::Tableau;
use crate::error::{Error, Result};
use crate::exactmath::LinComb;
use crate::Rational;

/// Loop value of `TL(-2)`.
pub const XI: i64 = -2;

/// Crossing count above which the `2^c` smoothing enumeration is refused.
pub const MAX_CROSSINGS: usize = 24;

/// A reduced word `s_{i_1} ... s_{i_k}` for `w` (one-line notation, composition right to
/// left), found by bubble sort.
pub fn reduced_word(w: &[u32]) -> Result<Vec<u32>> {
    check_permutation(w)?;
    let mut v = w.to_vec();
    let mut word = Vec::new();
    // w = v s_i ... ; sorting v by adjacent swaps of positions peels generators off the right
    loop {
        let Some(i) = (1..v.len()).find(|&i| v[i - 1] > v[i]) else { break };
        v.swap(i - 1, i);
        word.push(i as u32);
    }
    word.reverse();
    Ok(word)
}

fn check_permutation(w: &[u32]) -> Result<()> {
    let mut seen = vec![false; w.len()];
    for &v in w {
        if v == 0 || v as usize > w.len() || std::mem::replace(&mut seen[v as usize - 1], true) {
            return Err(Error::OutOfRange(format!("{w:?} is not a permutation")));
        }
    }
    Ok(())
}

/// Permutation `s_{i_1} ... s_{i_k}` of `1..=l` in one-line notation.
pub fn word_permutation(word: &[u32], l: u32) -> Result<Vec<u32>> {
    let mut w: Vec<u32> = (1..=l).collect();
    for &i in word {
        if i == 0 || i >= l {
            return Err(Error::OutOfRange(format!("s_{i} in S_{l}")));
        }
        // right multiplication by s_i swaps positions i and i+1
        w.swap(i as usize - 1, i as usize);
    }
    Ok(w)
}

pub fn inversions(w: &[u32]) -> usize {
    (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Theta {
    pub word: Vec<u32>,
    pub reduced: bool,
    #[serde(skip)]
    pub element: TLElement<Rational>,
}

/// `prod (t_i + 1)` over the word, expanded in the diagram basis of `TL_l(-2)`. Words that
/// are not reduced are expanded anyway and flagged.
pub fn theta(word: &[u32], l: u32) -> Result<Theta> {
    let w = word_permutation(word, l)?;
    let xi = Rational::from_integer(XI.into());
    let mut acc: TLElement<Rational> = LinComb::unit(TLDiagram::identity(l));
    for &i in word {
        let mut factor = LinComb::unit(TLDiagram::identity(l));
        factor.add_term(TLDiagram::generator(i, l)?, Rational::from_integer(1.into()));
        acc = tl_product(&acc, &factor, &xi)?;
    }
    Ok(Theta { word: word.to_vec(), reduced: inversions(&w) == word.len(), element: acc })
}

/// One way of smoothing every crossing of a matching.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Uncrossing {
    pub matching: Matching,
    pub cycles: u32,
}

impl Uncrossing {
    pub fn tableau(&self) -> Tableau {
        self.matching.to_tableau()
    }

    /// `(-2)^cycles`.
    pub fn weight(&self) -> Rational {
        Rational::from_integer((XI.pow(self.cycles)).into())
    }
}

type Q = Ratio<i128>;

/// Every smoothing of the crossings of a two-row tableau drawn with semicircular arcs.
pub fn uncrossings(t: &Tableau) -> Result<Vec<Uncrossing>> {
    let m = Matching::from_tableau(t)?;
    let crossings = m.crossings();
    if crossings.len() > MAX_CROSSINGS {
        return Err(Error::OutOfRange(format!("{} crossings exceed {MAX_CROSSINGS}", crossings.len())));
    }
    let arcs = m.arcs();
    let index: BTreeMap<(u32, u32), usize> = arcs.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let order = crossing_order(&arcs, &crossings);
    // segment k of arc a runs between its k-th and (k+1)-th crossing
    let mut base = vec![0usize; arcs.len() + 1];
    for (a, along) in order.iter().enumerate() {
        base[a + 1] = base[a] + along.len() + 1;
    }
    let ends: Vec<[usize; 4]> = crossings
        .iter()
        .enumerate()
        .map(|(x, (p, q))| {
            let (a, b) = (index[p], index[q]);
            let i = order[a].iter().position(|&y| y == x).expect("crossing on its arc");
            let j = order[b].iter().position(|&y| y == x).expect("crossing on its arc");
            [base[a] + i, base[a] + i + 1, base[b] + j, base[b] + j + 1]
        })
        .collect();
    let mut out = Vec::with_capacity(1 << crossings.len());
    for mask in 0u64..1 << crossings.len() {
        let mut uf = UnionFind::new(base[arcs.len()]);
        for (x, e) in ends.iter().enumerate() {
            if mask >> x & 1 == 0 {
                uf.union(e[0], e[2]);
                uf.union(e[1], e[3]);
            } else {
                uf.union(e[0], e[3]);
                uf.union(e[1], e[2]);
            }
        }
        let mut at_point: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for (a, &(lo, hi)) in arcs.iter().enumerate() {
            at_point.entry(uf.find(base[a])).or_default().push(lo);
            at_point.entry(uf.find(base[a + 1] - 1)).or_default().push(hi);
        }
        let components = (0..base[arcs.len()]).filter(|&s| uf.find(s) == s).count();
        let pairs: Vec<(u32, u32)> = at_point.values().map(|v| (v[0], v[1])).collect();
        out.push(Uncrossing { matching: Matching::new(&pairs)?, cycles: (components - pairs.len()) as u32 });
    }
    Ok(out)
}

/// For every arc, the crossings on it ordered from its left end. Arcs are semicircles over
/// slightly convex positions; the perturbation is changed until no two crossings coincide.
fn crossing_order(arcs: &[(u32, u32)], crossings: &[((u32, u32), (u32, u32))]) -> Vec<Vec<usize>> {
    for denom in 1000i128.. {
        let pos = |v: u32| Q::new(v as i128 * denom * 1000 + (v as i128).pow(2), denom * 1000);
        let mut along: Vec<Vec<(Q, usize)>> = vec![Vec::new(); arcs.len()];
        for (x, &((a, c), (b, d))) in crossings.iter().enumerate() {
            let (a, b, c, d) = (pos(a), pos(b), pos(c), pos(d));
            let at = (b * d - a * c) / (b + d - a - c);
            for arc in [(a, c), (b, d)] {
                let k = arcs.iter().position(|&(lo, hi)| (pos(lo), pos(hi)) == arc).expect("arc");
                along[k].push((at, x));
            }
        }
        let mut ok = true;
        for v in &mut along {
            v.sort();
            ok &= v.windows(2).all(|w| w[0].0 != w[1].0);
        }
        if ok {
            return along.into_iter().map(|v| v.into_iter().map(|(_, x)| x).collect()).collect();
        }
    }
    unreachable!("some perturbation separates the crossings")
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

/// Coefficients of the non-crossing tableaux in `P_T`: each smoothing contributes
/// `(-2)^cycles` to its underlying tableau.
pub fn resolve_crossings(t: &Tableau) -> Result<LinComb<Tableau, Rational>> {
    Ok(uncrossings(t)?.into_iter().map(|u| (u.tableau(), u.weight())).collect())
}

/// Resolution one crossing at a time, `(a1,a2)(b1,b2) -> (a1,b1)(a2,b2) + (a1,b2)(b1,a2)`,
/// with `pick` choosing which crossing of the current matching to resolve.
pub fn resolve_sequential<F>(t: &Tableau, pick: &mut F) -> Result<LinComb<Tableau, Rational>>
where
    F: FnMut(&[((u32, u32), (u32, u32))]) -> usize,
{
    let mut work: Vec<(Matching, i64)> = vec![(Matching::from_tableau(t)?, 1)];
    let mut out = LinComb::zero();
    while let Some((m, c)) = work.pop() {
        let crossings = m.crossings();
        if crossings.is_empty() {
            out.add_term(m.to_tableau(), Rational::from_integer(c.into()));
            continue;
        }
        let ((a1, a2), (b1, b2)) = crossings[pick(&crossings) % crossings.len()];
        let rest: Vec<(u32, u32)> =
            m.arcs().into_iter().filter(|&x| x != (a1, a2) && x != (b1, b2)).collect();
        for new in [[(a1, b1), (a2, b2)], [(a1, b2), (b1, a2)]] {
            let mut arcs = rest.clone();
            arcs.extend(new);
            work.push((Matching::new(&arcs)?, c));
        }
    }
    Ok(out)
}

/// The permutation drawn by a matching joining `1..=l` to `l+1..=2l`: bottom `j` (the point
/// `2l + 1 - j`) is joined to top `w(j)`. With this reading, stacking diagrams composes
/// permutations right to left.
pub fn wiring_permutation(m: &Matching) -> Result<Vec<u32>> {
    let n = m.points();
    let l = n / 2;
    (1..=l)
        .map(|j| {
            let p = m.partner(n + 1 - j);
            if p > l {
                Err(Error::NotWiringDiagram(format!("arc ({},{p}) stays in one half of {m}", n + 1 - j)))
            } else {
                Ok(p)
            }
        })
        .collect()
}

/// Compares the resolution of `t` with `theta(omega(t))`, both read as vectors over
/// non-crossing matchings.
pub fn tl_coefficient_check(t: &Tableau) -> Result<bool> {
    let m = Matching::from_tableau(t)?;
    let w = wiring_permutation(&m)?;
    let th = theta(&reduced_word(&w)?, m.points() / 2)?;
    let from_theta: LinComb<Tableau, Rational> =
        th.element.iter().map(|(d, c)| (d.matching().to_tableau(), c.clone())).collect();
    Ok(from_theta == resolve_crossings(t)?)
}
