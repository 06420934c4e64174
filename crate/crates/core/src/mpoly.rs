//! A small multivariate polynomial type over dense exponent vectors.
//!
//! Only what the bialternant and q-Vandermonde checks need: ring operations
//! and exact division by the lexicographic leading-term algorithm.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::qring::{Coeff, HalfLaurent};

pub trait RingElem: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn try_div(&self, rhs: &Self) -> Option<Self>;
}

impl RingElem for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        Coeff::try_div(self, rhs)
    }
}

impl RingElem for HalfLaurent {
    fn zero() -> Self {
        HalfLaurent::zero()
    }
    fn one() -> Self {
        HalfLaurent::one()
    }
    fn is_zero(&self) -> bool {
        HalfLaurent::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        self.exact_divide(rhs).ok()
    }
}

pub type Exponent = Vec<u32>;

#[derive(Clone, PartialEq)]
pub struct MPoly<R> {
    nvars: usize,
    terms: BTreeMap<Exponent, R>,
}

impl<R: RingElem> MPoly<R> {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], R::one())
    }

    pub fn monomial(exp: Exponent, c: R) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, R::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exp: Exponent, c: R) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
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

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> Option<&R> {
        self.terms.get(exp)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x.mul(c));
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x.mul(y));
            }
        }
        out
    }

    /// Exact quotient `self / g`, `None` if `g` does not divide `self`.
    pub fn exact_div(&self, g: &Self) -> Option<Self> {
        let (g_lead, g_lc) = g.terms.iter().next_back()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((lead, lc)) = rem.terms.iter().next_back() {
            if lead.iter().zip(g_lead).any(|(a, b)| a < b) {
                return None;
            }
            let shift: Exponent = lead.iter().zip(g_lead).map(|(a, b)| a - b).collect();
            let c = lc.try_div(g_lc)?;
            for (ge, gc) in &g.terms {
                let e = ge.iter().zip(&shift).map(|(a, b)| a + b).collect();
                rem.add_term(e, gc.mul(&c).neg());
            }
            quot.add_term(shift, c);
        }
        Some(quot)
    }
}

impl<R: RingElem> fmt::Debug for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Iterates over all permutations of `0..n` together with their sign,
/// in Heap's-algorithm order.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1i8;
    let mut out = vec![(a.clone(), sign)];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            out.push((a.clone(), sign));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Inversion count of a permutation.
pub fn inversions(p: &[usize]) -> usize {
    (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count()
}

/// The Vandermonde product `∏_{i<j} (x_i - x_j)`.
pub fn vandermonde(n: usize) -> MPoly<BigInt> {
    let mut out = MPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            out = out.mul(&MPoly::var(n, i).sub(&MPoly::var(n, j)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_signs_match_inversions() {
        for n in 0..=5 {
            let perms = signed_permutations(n);
            assert_eq!(perms.len(), (1..=n).product::<usize>().max(1));
            for (p, s) in &perms {
                let expect = if inversions(p).is_multiple_of(2) {
                    1
                } else {
                    -1
                };
                assert_eq!(*s, expect, "{p:?}");
            }
        }
    }

    #[test]
    fn division_round_trip() {
        let x = MPoly::<BigInt>::var(3, 0);
        let y = MPoly::<BigInt>::var(3, 1);
        let z = MPoly::<BigInt>::var(3, 2);
        let f = x.add(&y).mul(&y.sub(&z)).mul(&x.add(&z));
        let g = y.sub(&z);
        assert_eq!(f.exact_div(&g).unwrap(), x.add(&y).mul(&x.add(&z)));
        assert!(x.exact_div(&y).is_none());
        let v = vandermonde(3);
        assert_eq!(v.mul(&f).exact_div(&v).unwrap(), f);
    }
}
