//! Laurent polynomials in `v`, where `v² = q`.
//!
//! Exponents are stored in units of `v` so that the half-integral powers of
//! `q` carried by the Cartan currents fit the same ring as everything else.
//! Values whose exponents are all even print in terms of `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::{Error, Result};

/// Coefficient ring of a [`Laurent`] polynomial.
pub trait Coeff:
    Clone
    + PartialEq
    + Eq
    + std::hash::Hash
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
{
    fn mul_ref(&self, rhs: &Self) -> Self;
    /// Exact quotient, `None` when `rhs` does not divide `self` in the ring.
    fn try_div(&self, rhs: &Self) -> Option<Self>;
    fn from_i64(n: i64) -> Self;
    fn is_neg(&self) -> bool;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

fn int_json(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(x) => {
            if let Some(i) = x.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = x.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(Error::Json(format!("non-integral coefficient {x}")))
            }
        }
        Value::String(s) => s
            .trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Json(format!("bad integer {s:?}"))),
        other => Err(Error::Json(format!("expected integer, got {other}"))),
    }
}

impl Coeff for BigInt {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }

    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }

    fn is_neg(&self) -> bool {
        self.is_negative()
    }

    fn to_json(&self) -> Value {
        int_json(self)
    }

    fn from_json(v: &Value) -> Result<Self> {
        int_from_json(v)
    }
}

impl Coeff for BigRational {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn try_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn is_neg(&self) -> bool {
        self.is_negative()
    }

    fn to_json(&self) -> Value {
        if self.is_integer() {
            int_json(self.numer())
        } else {
            Value::String(self.to_string())
        }
    }

    fn from_json(v: &Value) -> Result<Self> {
        if let Value::String(s) = v {
            if let Some((n, d)) = s.split_once('/') {
                let n: BigInt = n.trim().parse().map_err(|_| Error::Json(s.clone()))?;
                let d: BigInt = d.trim().parse().map_err(|_| Error::Json(s.clone()))?;
                if d.is_zero() {
                    return Err(Error::Json(s.clone()));
                }
                return Ok(BigRational::new(n, d));
            }
        }
        int_from_json(v).map(BigRational::from_integer)
    }
}

/// Finite sum `Σ c_e v^e` with no zero coefficient stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent<C> {
    terms: BTreeMap<i64, C>,
}

/// Integer Laurent polynomial in `v = q^{1/2}`.
pub type HalfLaurent = Laurent<BigInt>;
/// Rational-coefficient variant used by the power-sum oracle.
pub type RatHalfLaurent = Laurent<BigRational>;

impl<C: Coeff> Laurent<C> {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }

    /// `c · v^e`.
    pub fn monomial(c: C, v_exp: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(v_exp, c);
        out
    }

    /// `v^e`.
    pub fn v_pow(v_exp: i64) -> Self {
        Self::monomial(C::one(), v_exp)
    }

    /// `q^k = v^{2k}`.
    pub fn q_pow(k: i64) -> Self {
        Self::v_pow(2 * k)
    }

    /// Builds from `(v-exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    /// Builds from `(q-exponent, coefficient)` pairs.
    pub fn from_q_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        Self::from_terms(terms.into_iter().map(|(e, c)| (2 * e, C::from_i64(c))))
    }

    pub fn add_term(&mut self, v_exp: i64, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(v_exp) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += &c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing v-exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, v_exp: i64) -> Option<&C> {
        self.terms.get(&v_exp)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// True when every exponent is even, i.e. the value lies in `ℤ[q, q⁻¹]`.
    pub fn is_integral_in_q(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(e, x)| (*e, x.mul_ref(c))).collect(),
        }
    }

    /// Multiplication by `v^e`.
    pub fn shift(&self, v_exp: i64) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + v_exp, c.clone()))
                .collect(),
        }
    }

    /// Bar involution `v ↦ v⁻¹`.
    pub fn bar(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Specialization at `v = 1` (hence `q = 1`).
    pub fn at_one(&self) -> C {
        let mut s = C::zero();
        for c in self.terms.values() {
            s += c;
        }
        s
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        Laurent::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    pub fn try_map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> Option<D>) -> Option<Laurent<D>> {
        let mut out = Laurent::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, f(c)?);
        }
        Some(out)
    }

    /// Exact division: `h` with `self = g·h`, or [`Error::InexactDivision`].
    pub fn exact_divide(&self, g: &Self) -> Result<Self> {
        let (g_hi, g_lo) = match (g.max_exp(), g.min_exp()) {
            (Some(hi), Some(lo)) => (hi, lo),
            _ => return Err(Error::DivisionByZero),
        };
        let Some(f_lo) = self.min_exp() else {
            return Ok(Self::zero());
        };
        let lead = g.terms[&g_hi].clone();
        let q_lo = f_lo - g_lo;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(r_hi) = rem.max_exp() {
            let e = r_hi - g_hi;
            if e < q_lo {
                return Err(Error::InexactDivision);
            }
            let c = rem.terms[&r_hi]
                .try_div(&lead)
                .ok_or(Error::InexactDivision)?;
            for (ge, gc) in &g.terms {
                let mut t = gc.mul_ref(&c);
                t = -t;
                rem.add_term(ge + e, t);
            }
            quot.add_term(e, c);
        }
        Ok(quot)
    }

    pub fn to_json(&self) -> Value {
        let mut map = serde_json::Map::new();
        for (e, c) in self.terms.iter().rev() {
            map.insert(e.to_string(), c.to_json());
        }
        Value::Object(map)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let Value::Object(map) = v else {
            return Err(Error::Json(format!("expected Laurent object, got {v}")));
        };
        let mut out = Self::zero();
        for (k, c) in map {
            let e: i64 = k
                .parse()
                .map_err(|_| Error::Json(format!("bad exponent {k:?}")))?;
            out.add_term(e, C::from_json(c)?);
        }
        Ok(out)
    }
}

impl HalfLaurent {
    pub fn to_rational(&self) -> RatHalfLaurent {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }
}

impl RatHalfLaurent {
    /// Clears to integer coefficients when every coefficient is integral.
    pub fn to_integer(&self) -> Option<HalfLaurent> {
        self.try_map_coeffs(|c| c.is_integer().then(|| c.to_integer()))
    }
}

impl<C: Coeff> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let in_q = self.is_integral_in_q();
        let (var, scale) = if in_q { ("q", 2) } else { ("v", 1) };
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let k = e / scale;
            let neg = c.is_neg();
            let mag = if neg { -c.clone() } else { c.clone() };
            let body = match (k, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => var.to_string(),
                (_, true) => format!("{var}^{k}"),
                (1, false) => format!("{mag}*{var}"),
                (_, false) => format!("{mag}*{var}^{k}"),
            };
            match (i, neg) {
                (0, false) => f.write_str(&body)?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl<C: Coeff> Serialize for Laurent<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in self.terms.iter().rev() {
            map.serialize_entry(&e.to_string(), &c.to_json())?;
        }
        map.end()
    }
}

impl<'de, C: Coeff> Deserialize<'de> for Laurent<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        Self::from_json(&v).map_err(D::Error::custom)
    }
}

impl<C: Coeff> AddAssign<&Laurent<C>> for Laurent<C> {
    fn add_assign(&mut self, rhs: &Laurent<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<C: Coeff> SubAssign<&Laurent<C>> for Laurent<C> {
    fn sub_assign(&mut self, rhs: &Laurent<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<C: Coeff> Add for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: Self) -> Laurent<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coeff> Add for Laurent<C> {
    type Output = Laurent<C>;
    fn add(mut self, rhs: Self) -> Laurent<C> {
        self += &rhs;
        self
    }
}

impl<C: Coeff> Sub for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: Self) -> Laurent<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coeff> Sub for Laurent<C> {
    type Output = Laurent<C>;
    fn sub(mut self, rhs: Self) -> Laurent<C> {
        self -= &rhs;
        self
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<C: Coeff> Mul for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Self) -> Laurent<C> {
        let mut out = Laurent::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x.mul_ref(y));
            }
        }
        out
    }
}

impl<C: Coeff> Mul for Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Self) -> Laurent<C> {
        &self * &rhs
    }
}

impl<C: Coeff> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<C: Coeff> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -self.clone()
    }
}

/// Quantum integer `[n] = (qⁿ - q⁻ⁿ)/(q - q⁻¹) = q^{n-1} + q^{n-3} + … + q^{1-n}`.
pub fn qint(n: i64) -> Result<HalfLaurent> {
    if n < 0 {
        return Err(Error::Negative {
            what: "qint",
            value: n,
        });
    }
    Ok(HalfLaurent::from_q_terms(
        (0..n).map(|k| (n - 1 - 2 * k, 1)),
    ))
}

/// `[n]! = [n][n-1]…[1]`, with `[0]! = 1`.
pub fn qfactorial(n: i64) -> Result<HalfLaurent> {
    if n < 0 {
        return Err(Error::Negative {
            what: "qfactorial",
            value: n,
        });
    }
    let mut out = HalfLaurent::one();
    for k in 2..=n {
        out = &out * &qint(k)?;
    }
    Ok(out)
}

/// Gaussian binomial `[n]!/([m]![n-m]!)`, computed by exact division.
pub fn qbinomial(n: i64, m: i64) -> Result<HalfLaurent> {
    if m < 0 || n < m {
        return Err(Error::BinomialRange { n, m });
    }
    let den = &qfactorial(m)? * &qfactorial(n - m)?;
    qfactorial(n)?.exact_divide(&den)
}

/// Exact quotient of integer Laurent polynomials.
pub fn exact_divide(f: &HalfLaurent, g: &HalfLaurent) -> Result<HalfLaurent> {
    f.exact_divide(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(terms: &[(i64, i64)]) -> HalfLaurent {
        HalfLaurent::from_q_terms(terms.iter().copied())
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(qint(0).unwrap(), HalfLaurent::zero());
        assert_eq!(qint(1).unwrap(), HalfLaurent::one());
        assert_eq!(qint(2).unwrap(), q(&[(1, 1), (-1, 1)]));
        assert_eq!(qint(3).unwrap(), q(&[(2, 1), (0, 1), (-2, 1)]));
        assert!(qint(-1).is_err());
    }

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(qfactorial(0).unwrap(), HalfLaurent::one());
        assert_eq!(qfactorial(2).unwrap(), q(&[(1, 1), (-1, 1)]));
        assert_eq!(qbinomial(2, 1).unwrap(), q(&[(1, 1), (-1, 1)]));
        // [4]!/([2]![2]!) expanded by hand: [4][3]/[2] = (q²+q⁻²)(q²+1+q⁻²)
        assert_eq!(
            qbinomial(4, 2).unwrap(),
            q(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)])
        );
        assert_eq!(qbinomial(1, 2), Err(Error::BinomialRange { n: 1, m: 2 }));
    }

    #[test]
    fn binomial_symmetries() {
        for n in 0..=8 {
            for m in 0..=n {
                let b = qbinomial(n, m).unwrap();
                assert_eq!(b, qbinomial(n, n - m).unwrap());
                assert_eq!(b, b.bar());
                let classical = (0..m).fold(BigInt::one(), |acc, k| acc * (n - k) / (k + 1));
                assert_eq!(b.at_one(), classical);
            }
        }
    }

    #[test]
    fn exact_division_examples() {
        let num = q(&[(2, 1), (-2, -1)]);
        let den = q(&[(1, 1), (-1, -1)]);
        assert_eq!(exact_divide(&num, &den).unwrap(), q(&[(1, 1), (-1, 1)]));
        let two = q(&[(1, 1), (-1, 1)]);
        assert_eq!(exact_divide(&two, &two).unwrap(), HalfLaurent::one());
        assert_eq!(
            exact_divide(&HalfLaurent::one(), &two),
            Err(Error::InexactDivision)
        );
        assert_eq!(
            exact_divide(&two, &HalfLaurent::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            exact_divide(&HalfLaurent::from_int(3), &HalfLaurent::from_int(2)),
            Err(Error::InexactDivision)
        );
    }

    #[test]
    fn text_form() {
        assert_eq!(q(&[(2, 1), (0, 1), (-2, 1)]).to_string(), "q^2 + 1 + q^-2");
        assert_eq!(q(&[(1, -3), (0, 2)]).to_string(), "-3*q + 2");
        assert_eq!(HalfLaurent::zero().to_string(), "0");
        let half = HalfLaurent::from_terms([(1, BigInt::from(1)), (-3, BigInt::from(-1))]);
        assert_eq!(half.to_string(), "v - v^-3");
        let r = RatHalfLaurent::monomial(BigRational::new(3.into(), 2.into()), 4);
        assert_eq!(r.to_string(), "3/2*q^2");
    }

    #[test]
    fn json_form() {
        let x = q(&[(2, 1), (0, 1), (-2, 1)]);
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            r#"{"4":"1","0":"1","-4":"1"}"#
        );
        let back: HalfLaurent = serde_json::from_str(r#"{"-4":"1","0":1,"4":1}"#).unwrap();
        assert_eq!(back, x);
        let r = RatHalfLaurent::monomial(BigRational::new((-3).into(), 2.into()), 1);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"1":"-3/2"}"#);
        assert_eq!(serde_json::from_str::<RatHalfLaurent>(&s).unwrap(), r);
    }

    fn arb_laurent() -> impl Strategy<Value = HalfLaurent> {
        prop::collection::vec((-6i64..=6, -5i64..=5), 0..5)
            .prop_map(|v| HalfLaurent::from_terms(v.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn divide_undoes_multiply(f in arb_laurent(), g in arb_laurent()) {
            prop_assume!(!g.is_zero());
            prop_assert_eq!(exact_divide(&(&f * &g), &g).unwrap(), f);
        }

        #[test]
        fn json_round_trip(f in arb_laurent()) {
            let s = serde_json::to_string(&f).unwrap();
            prop_assert_eq!(serde_json::from_str::<HalfLaurent>(&s).unwrap(), f);
        }
    }
}
