use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::Ring;
use crate::error::{Error, Result};

/// Sparse exponent vector: `(variable, exponent)` pairs, variables strictly increasing,
/// exponents positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: u32) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs, merging repeats and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn exponent(&self, var: u32) -> u32 {
        self.0
            .binary_search_by_key(&var, |&(v, _)| v)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn variables(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }
}

/// Graded lexicographic order with x1 > x2 > ...
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let deg = self.degree().cmp(&other.degree());
        if deg != Ordering::Equal {
            return deg;
        }
        let (a, b) = (&self.0, &other.0);
        let mut i = 0;
        loop {
            match (a.get(i), b.get(i)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va != vb {
                        // the one carrying the smaller variable is larger
                        return vb.cmp(&va);
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
            }
            i += 1;
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial over a ring. No zero coefficients are stored, so
/// structural equality is ring equality.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<R> {
    terms: BTreeMap<Monomial, R>,
}

impl<R: Ring> Poly<R> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn constant(c: R) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::var(v), R::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, R)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &R)> {
        self.terms.iter().rev()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, R> {
        self.terms
    }

    pub fn as_map(&self) -> &BTreeMap<Monomial, R> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> R {
        self.terms.get(m).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &R)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())))
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(R::one());
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Full evaluation. Every variable that occurs must be assigned.
    pub fn eval(&self, assignment: &BTreeMap<u32, R>) -> Result<R> {
        let mut total = R::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.exponents() {
                let x = assignment.get(&v).ok_or(Error::MissingAssignment(v))?;
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            total = total + t;
        }
        Ok(total)
    }

    /// Substitutes the assigned variables and leaves the rest symbolic.
    pub fn partial_eval(&self, assignment: &BTreeMap<u32, R>) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in m.exponents() {
                match assignment.get(&v) {
                    Some(x) => {
                        for _ in 0..e {
                            t = t * x.clone();
                        }
                    }
                    None => rest.push((v, e)),
                }
            }
            out.add_term(Monomial(rest), t);
        }
        out
    }

    /// Renames variables; collisions merge exponents.
    pub fn map_vars<F: Fn(u32) -> u32>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            (Monomial::from_pairs(m.exponents().iter().map(|&(v, e)| (f(v), e))), c.clone())
        }))
    }

    pub fn variables(&self) -> std::collections::BTreeSet<u32> {
        self.terms.keys().flat_map(|m| m.variables()).collect()
    }

    pub fn fmt_with<N: Fn(u32) -> String>(&self, name: N) -> String
    where
        R: fmt::Display,
    {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let body: Vec<String> = m
                .exponents()
                .iter()
                .map(|&(v, e)| if e > 1 { format!("{}^{e}", name(v)) } else { name(v) })
                .collect();
            if body.is_empty() {
                s.push_str(&mag);
            } else {
                if mag != "1" {
                    s.push_str(&mag);
                    s.push('*');
                }
                s.push_str(&body.join("*"));
            }
        }
        s
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(|v| format!("x{v}")))
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly::constant(R::one())
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Poly<R>;
    fn add(mut self, rhs: Poly<R>) -> Poly<R> {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<R: Ring> Add<&Poly<R>> for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        self.clone() + rhs.clone()
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Poly<R>;
    fn sub(mut self, rhs: Poly<R>) -> Poly<R> {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl<R: Ring> Sub<&Poly<R>> for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        self.clone() - rhs.clone()
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Poly<R>) -> Poly<R> {
        self.mul_ref(&rhs)
    }
}

impl<R: Ring> Mul<&Poly<R>> for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        self.mul_ref(rhs)
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

/// Expanded product of `(x_i - x_j)` over the given pairs.
pub fn difference_product<R: Ring>(pairs: &[(u32, u32)]) -> Result<Poly<R>> {
    let mut acc = Poly::constant(R::one());
    for &(i, j) in pairs {
        if i == j {
            return Err(Error::DegenerateFactor(i));
        }
        let factor = Poly::var(i) - Poly::var(j);
        acc = acc.mul_ref(&factor);
    }
    Ok(acc)
}
