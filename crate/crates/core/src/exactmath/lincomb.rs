use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::ops::Add;

use super::scalar::Ring;

/// Formal linear combination of keys with ring coefficients; zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Debug)]
pub struct LinComb<K: Ord, R> {
    terms: BTreeMap<K, R>,
}

impl<K: Ord + Clone, R: Ring> Default for LinComb<K, R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone, R: Ring> LinComb<K, R> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn single(k: K, c: R) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn unit(k: K) -> Self {
        Self::single(k, R::one())
    }

    pub fn add_term(&mut self, k: K, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &R) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone() * c.clone());
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn coeff(&self, k: &K) -> R {
        self.terms.get(k).cloned().unwrap_or_else(R::zero)
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

    pub fn iter(&self) -> btree_map::Iter<'_, K, R> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, R> {
        self.terms.keys()
    }

    pub fn remove(&mut self, k: &K) -> Option<R> {
        self.terms.remove(k)
    }

    pub fn pop_first(&mut self) -> Option<(K, R)> {
        self.terms.pop_first()
    }

    pub fn map_keys<K2: Ord + Clone, F: Fn(&K) -> K2>(&self, f: F) -> LinComb<K2, R> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Realizes the combination through a linear map on keys.
    pub fn realize<V, F>(&self, f: F) -> V
    where
        V: Add<Output = V> + num_traits::Zero,
        F: Fn(&K, &R) -> V,
    {
        self.terms.iter().fold(V::zero(), |acc, (k, c)| acc + f(k, c))
    }
}

impl<K: Ord + Clone, R: Ring> FromIterator<(K, R)> for LinComb<K, R> {
    fn from_iter<I: IntoIterator<Item = (K, R)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone, R: Ring> IntoIterator for LinComb<K, R> {
    type Item = (K, R);
    type IntoIter = btree_map::IntoIter<K, R>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord + Clone, R: Ring> IntoIterator for &'a LinComb<K, R> {
    type Item = (&'a K, &'a R);
    type IntoIter = btree_map::Iter<'a, K, R>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone, R: Ring> Add for LinComb<K, R> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}
