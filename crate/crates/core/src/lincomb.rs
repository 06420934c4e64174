use std::collections::BTreeMap;
use std::fmt;

use crate::qring::{Coeff, Laurent};

/// Finite linear combination of basis keys with Laurent coefficients.
///
/// No zero coefficient is ever stored; iteration follows the key order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord, C> {
    terms: BTreeMap<K, Laurent<C>>,
}

impl<K: Ord + Clone, C: Coeff> Default for LinComb<K, C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone, C: Coeff> LinComb<K, C> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, Laurent::one())
    }

    pub fn term(k: K, c: Laurent<C>) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn add_term(&mut self, k: K, c: Laurent<C>) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `c·v^e` to the coefficient of `k`.
    pub fn add_monomial(&mut self, k: K, v_exp: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k.clone()).or_insert_with(Laurent::zero);
        slot.add_term(v_exp, c);
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn get(&self, k: &K) -> Option<&Laurent<C>> {
        self.terms.get(k)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&K, &Laurent<C>)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Laurent<C>) -> Self {
        let mut out = Self::zero();
        if c.is_zero() {
            return out;
        }
        for (k, x) in &self.terms {
            out.add_term(k.clone(), x * c);
        }
        out
    }

    pub fn scale_coeff(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (k, x) in &self.terms {
            out.add_term(k.clone(), x.scale(c));
        }
        out
    }

    /// Multiplies every coefficient by `v^e`.
    pub fn shift(&self, v_exp: i64) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c.shift(v_exp)))
                .collect(),
        }
    }

    pub fn add_assign(&mut self, rhs: &Self) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, rhs: &Self, c: &Laurent<C>) {
        if c.is_zero() {
            return;
        }
        for (k, x) in &rhs.terms {
            self.add_term(k.clone(), x * c);
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }

    pub fn neg(&self) -> Self {
        LinComb {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn map_keys<K2: Ord + Clone>(&self, f: impl Fn(&K) -> K2) -> LinComb<K2, C> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&Laurent<C>) -> Laurent<D>) -> LinComb<K, D> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Coeff>(
        &self,
        f: impl Fn(&Laurent<C>) -> Option<Laurent<D>>,
    ) -> Option<LinComb<K, D>> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c)?);
        }
        Some(out)
    }

    pub fn into_terms(self) -> BTreeMap<K, Laurent<C>> {
        self.terms
    }
}

impl<K: Ord + Clone, C: Coeff> FromIterator<(K, Laurent<C>)> for LinComb<K, C> {
    fn from_iter<I: IntoIterator<Item = (K, Laurent<C>)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone + fmt::Debug, C: Coeff> fmt::Debug for LinComb<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{k:?}")?;
        }
        Ok(())
    }
}
