//! The level-one modules `V(Λ₀)`, `V(Λ₁)` on the Schur basis
//! `s_λ e^{mα} e^{iα/2}` and the closed-form actions of the algebra.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::lincomb::LinComb;
use crate::oracle::{self, PowerState};
use crate::qring::{qfactorial, HalfLaurent};
use crate::schur::{laurent_text, lr_product, SchurPoly};
use crate::shapes::{horizontal_strips, straighten, Partition, StraightenResult};
use crate::{Error, Result};

/// A finite sum `Σ c_{m,λ} s_λ e^{mα} e^{iα/2}` in one sector `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FockVector {
    pub sector: u8,
    pub terms: LinComb<(i64, Partition), BigInt>,
}

fn qp(k: i64) -> HalfLaurent {
    HalfLaurent::q_pow(k)
}

fn sign_of(b: bool) -> HalfLaurent {
    HalfLaurent::from_int(if b { -1 } else { 1 })
}

fn binom2(r: i64) -> i64 {
    r * (r - 1) / 2
}

impl FockVector {
    pub fn zero(sector: u8) -> Self {
        FockVector {
            sector,
            terms: LinComb::zero(),
        }
    }

    /// `e^{mα} e^{iα/2}`.
    pub fn vacuum(sector: u8, charge: i64) -> Self {
        Self::basis(sector, charge, Partition::empty())
    }

    pub fn basis(sector: u8, charge: i64, lambda: Partition) -> Self {
        FockVector {
            sector,
            terms: LinComb::basis((charge, lambda)),
        }
    }

    pub fn term(sector: u8, charge: i64, lambda: Partition, c: HalfLaurent) -> Self {
        FockVector {
            sector,
            terms: LinComb::term((charge, lambda), c),
        }
    }

    /// `Σ c_λ s_λ e^{mα}` from a Schur polynomial.
    pub fn from_schur(sector: u8, charge: i64, f: &SchurPoly) -> Self {
        FockVector {
            sector,
            terms: f
                .iter()
                .map(|(l, c)| ((charge, l.clone()), c.clone()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        FockVector {
            sector: self.sector,
            terms: self.terms.add(&rhs.terms),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        FockVector {
            sector: self.sector,
            terms: self.terms.sub(&rhs.terms),
        }
    }

    pub fn neg(&self) -> Self {
        FockVector {
            sector: self.sector,
            terms: self.terms.neg(),
        }
    }

    pub fn scale(&self, c: &HalfLaurent) -> Self {
        FockVector {
            sector: self.sector,
            terms: self.terms.scale(c),
        }
    }

    /// Scales each basis term by a coefficient depending on its charge and partition.
    pub fn scale_by(&self, f: impl Fn(i64, &Partition) -> HalfLaurent) -> Self {
        let mut out = Self::zero(self.sector);
        for ((m, l), c) in self.terms.iter() {
            out.terms.add_term((*m, l.clone()), c * &f(*m, l));
        }
        out
    }

    /// Divides every coefficient exactly by `d`.
    pub fn exact_divide(&self, d: &HalfLaurent) -> Result<Self> {
        let mut out = Self::zero(self.sector);
        for (k, c) in self.terms.iter() {
            out.terms.add_term(k.clone(), c.exact_divide(d)?);
        }
        Ok(out)
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = (i64, &Partition, &HalfLaurent)> {
        self.terms.iter().map(|((m, l), c)| (*m, l, c))
    }

    /// Applies a linear map defined on basis vectors.
    pub fn map_basis(&self, f: impl Fn(i64, &Partition) -> FockVector) -> FockVector {
        let mut out = Self::zero(self.sector);
        for ((m, l), c) in self.terms.iter() {
            out.terms.add_scaled(&f(*m, l).terms, c);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|((m, l), c)| json!({ "charge": m, "partition": l, "coeff": c.to_json() }))
            .collect();
        json!({ "sector": self.sector, "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Json(format!("FockVector: {what}"));
        let sector = v["sector"]
            .as_u64()
            .filter(|s| *s <= 1)
            .ok_or_else(|| bad("sector"))? as u8;
        let terms = v["terms"].as_array().ok_or_else(|| bad("terms"))?;
        let mut out = Self::zero(sector);
        for t in terms {
            let m = t["charge"].as_i64().ok_or_else(|| bad("charge"))?;
            let l: Partition = serde_json::from_value(t["partition"].clone())
                .map_err(|e| Error::Json(e.to_string()))?;
            out.terms
                .add_term((m, l), HalfLaurent::from_json(&t["coeff"])?);
        }
        Ok(out)
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let half = if self.sector == 1 { "+a/2" } else { "" };
        for (i, ((m, l), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{} * ", laurent_text(c))?;
            if !l.is_empty() {
                write!(f, "s[{l}] ")?;
            }
            write!(f, "e^{{{m}a{half}}}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[i={}] {}", self.sector, self)
    }
}

impl Serialize for FockVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FockVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        Self::from_json(&v).map_err(D::Error::custom)
    }
}

fn strip_sum(rho: &Partition, j: usize, conjugate: bool) -> impl Iterator<Item = Partition> {
    horizontal_strips(rho, j)
        .into_iter()
        .map(move |l| if conjugate { l.conjugate() } else { l })
}

/// `X⁺_n` on one basis vector.
fn x_plus_basis(n: i64, sector: u8, m: i64, mu: &Partition) -> FockVector {
    let i = sector as i64;
    let len = mu.len() as i64;
    let mut out = FockVector::zero(sector);
    let a0 = -2 * m - n - 1 - i;
    let mut j = 0i64;
    while a0 - j + len >= 0 {
        let mut t = vec![a0 - j];
        t.extend(mu.to_tuple());
        if let StraightenResult::Signed { sign, partition } = straighten(&t) {
            let c = qp(a0 - 2 * j).scale(&BigInt::from(sign));
            for lambda in strip_sum(&partition, j as usize, false) {
                out.terms.add_term((m + 1, lambda), c.clone());
            }
        }
        j += 1;
    }
    out
}

/// `X⁻_n` on one basis vector.
fn x_minus_basis(n: i64, sector: u8, m: i64, nu: &Partition) -> FockVector {
    let i = sector as i64;
    let mu = nu.conjugate();
    let len = mu.len() as i64;
    let mut out = FockVector::zero(sector);
    let a0 = 2 * m - n - 1 + i;
    let parity = sign_of((n + 1 + i).rem_euclid(2) == 1);
    let mut j = 0i64;
    while a0 - j + len >= 0 {
        let mut t = vec![a0 - j];
        t.extend(mu.to_tuple());
        if let StraightenResult::Signed { sign, partition } = straighten(&t) {
            let c = (&parity * &qp(2 * j)).scale(&BigInt::from(sign));
            for kappa in strip_sum(&partition, j as usize, true) {
                out.terms.add_term((m - 1, kappa), c.clone());
            }
        }
        j += 1;
    }
    out
}

/// `Σ_{l(λ)≤r} q^{∓2|λ|} s_λ · s_{(−λ−2δ−c·1, μ)}`, the common core of the
/// divided-power formulas. With `minus` set, the weight sign flips and each
/// product is conjugated.
fn divided_core(r: usize, c: i64, mu: &Partition, minus: bool) -> SchurPoly {
    let mut out = SchurPoly::zero();
    let bound = mu.len() as i64 + 1 - r as i64 - c;
    if bound < 0 {
        return out;
    }
    for lambda in Partition::in_box(r, bound as usize) {
        let mut t: Vec<i64> = (0..r)
            .map(|k| -(lambda.part(k) as i64) - 2 * (r - 1 - k) as i64 - c)
            .collect();
        t.extend(mu.to_tuple());
        let StraightenResult::Signed { sign, partition } = straighten(&t) else {
            continue;
        };
        let w = lambda.weight() as i64;
        let coeff = qp(if minus { 2 * w } else { -2 * w }).scale(&BigInt::from(sign));
        let prod = lr_product(&lambda, &partition);
        let prod = if minus {
            prod.map_keys(Partition::conjugate)
        } else {
            prod
        };
        out.add_scaled(&prod, &coeff);
    }
    out
}

fn plus_divided_basis(
    prefactor: HalfLaurent,
    r: usize,
    c: i64,
    sector: u8,
    m: i64,
    mu: &Partition,
) -> FockVector {
    let core = divided_core(r, c, mu, false);
    FockVector::from_schur(sector, m + r as i64, &core).scale(&prefactor)
}

fn minus_divided_basis(
    prefactor: HalfLaurent,
    r: usize,
    c: i64,
    sector: u8,
    m: i64,
    nu: &Partition,
) -> FockVector {
    let core = divided_core(r, c, &nu.conjugate(), true);
    FockVector::from_schur(sector, m - r as i64, &core).scale(&prefactor)
}

/// `X⁺_n v`.
pub fn x_plus(n: i64, v: &FockVector) -> FockVector {
    v.map_basis(|m, mu| x_plus_basis(n, v.sector, m, mu))
}

/// `X⁻_n v`.
pub fn x_minus(n: i64, v: &FockVector) -> FockVector {
    v.map_basis(|m, nu| x_minus_basis(n, v.sector, m, nu))
}

fn check_power(r: u32) -> Result<usize> {
    if r == 0 {
        return Err(Error::DividedPower(0));
    }
    Ok(r as usize)
}

/// The divided power `X⁺_n^{(r)} = (X⁺_n)^r / [r]!`.
pub fn x_plus_divided(n: i64, r: u32, v: &FockVector) -> Result<FockVector> {
    let r = check_power(r)?;
    let i = v.sector as i64;
    let ri = r as i64;
    Ok(v.map_basis(|m, mu| {
        let c = n + 1 + 2 * m + i;
        plus_divided_basis(qp(-3 * binom2(ri) - ri * c), r, c, v.sector, m, mu)
    }))
}

/// The divided power `X⁻_n^{(r)} = (X⁻_n)^r / [r]!`.
pub fn x_minus_divided(n: i64, r: u32, v: &FockVector) -> Result<FockVector> {
    let r = check_power(r)?;
    let i = v.sector as i64;
    let ri = r as i64;
    let pre = &sign_of((ri * (n + 1 + i)).rem_euclid(2) == 1) * &qp(binom2(ri));
    Ok(v.map_basis(|m, nu| {
        let c = n + 1 - 2 * m - i;
        minus_divided_basis(pre.clone(), r, c, v.sector, m, nu)
    }))
}

/// Generators of `U_q(ŝl₂)` acting on the module, plus the degree operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    E0,
    E1,
    F0,
    F1,
    K0,
    K1,
    K0Inv,
    K1Inv,
    Qd,
    QdInv,
}

impl Generator {
    pub const ALL: [Generator; 10] = [
        Generator::E0,
        Generator::E1,
        Generator::F0,
        Generator::F1,
        Generator::K0,
        Generator::K1,
        Generator::K0Inv,
        Generator::K1Inv,
        Generator::Qd,
        Generator::QdInv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Generator::E0 => "e0",
            Generator::E1 => "e1",
            Generator::F0 => "f0",
            Generator::F1 => "f1",
            Generator::K0 => "K0",
            Generator::K1 => "K1",
            Generator::K0Inv => "K0inv",
            Generator::K1Inv => "K1inv",
            Generator::Qd => "qd",
            Generator::QdInv => "qdinv",
        }
    }

    pub fn is_chevalley(self) -> bool {
        matches!(
            self,
            Generator::E0 | Generator::E1 | Generator::F0 | Generator::F1
        )
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Generator::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("unknown generator {s:?}"),
            })
    }
}

/// One factor of a word: a generator with its divided-power exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Token {
    pub generator: Generator,
    pub power: u32,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.power == 1 {
            write!(f, "{}", self.generator)
        } else {
            write!(f, "{}^({})", self.generator, self.power)
        }
    }
}

/// A product of tokens; the rightmost token acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Token>);

impl FromStr for Word {
    type Err = Error;

    /// Parses whitespace-separated tokens; error positions are 1-based token indices.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        for (k, raw) in s.split_whitespace().enumerate() {
            let position = k + 1;
            let err = |message: String| Error::Parse { position, message };
            let (name, power) = match raw.split_once('^') {
                None => (raw, None),
                Some((name, exp)) => {
                    let inner = exp
                        .strip_prefix('(')
                        .and_then(|e| e.strip_suffix(')'))
                        .ok_or_else(|| err(format!("malformed exponent in {raw:?}")))?;
                    let r: i64 = inner
                        .trim()
                        .parse()
                        .map_err(|_| err(format!("malformed exponent in {raw:?}")))?;
                    (name, Some(r))
                }
            };
            let generator: Generator = name
                .parse()
                .map_err(|_| err(format!("unknown generator {name:?}")))?;
            let power = match power {
                None => 1,
                Some(_) if !generator.is_chevalley() => {
                    return Err(err(format!("{generator} takes no exponent")));
                }
                Some(r) if r < 1 => {
                    return Err(err(format!("divided power must be at least 1, got {r}")))
                }
                Some(r) => u32::try_from(r).map_err(|_| err(format!("exponent {r} too large")))?,
            };
            out.push(Token { generator, power });
        }
        Ok(Word(out))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// `K_i^{±1}`: `K₁ = q^∂`, `K₀ = q^{1−∂}`.
pub fn k_action(i: u8, exponent: i64, v: &FockVector) -> FockVector {
    let sector = v.sector as i64;
    v.scale_by(|m, _| {
        let d = 2 * m + sector;
        qp(exponent * if i == 1 { d } else { 1 - d })
    })
}

/// `q^{±d}` with `d` acting on `s_λ e^{mα} e^{iα/2}` as `−(|λ| + m² + mi)`.
pub fn qd_action(exponent: i64, v: &FockVector) -> FockVector {
    let i = v.sector as i64;
    v.scale_by(|m, l| qp(-exponent * (l.weight() as i64 + m * m + m * i)))
}

/// Divided powers of the Chevalley generators, `e₁ = X⁺₀`, `f₁ = X⁻₀`,
/// `e₀ = X⁻₁ q^{−∂}`, `f₀ = q^∂ X⁺₋₁`.
pub fn chevalley(g: Generator, r: u32, v: &FockVector) -> Result<FockVector> {
    let r = check_power(r)?;
    let ri = r as i64;
    let i = v.sector as i64;
    let s = v.sector;
    let out = match g {
        Generator::E1 => v.map_basis(|m, mu| {
            let c = 2 * m + 1 + i;
            plus_divided_basis(qp(-3 * binom2(ri) - ri * (2 * m + i + 1)), r, c, s, m, mu)
        }),
        Generator::F1 => v.map_basis(|m, nu| {
            let pre = &sign_of((ri * (1 + i)).rem_euclid(2) == 1) * &qp(binom2(ri));
            minus_divided_basis(pre, r, 1 - 2 * m - i, s, m, nu)
        }),
        Generator::F0 => {
            v.map_basis(|m, mu| plus_divided_basis(qp(ri * (5 - ri) / 2), r, 2 * m + i, s, m, mu))
        }
        Generator::E0 => v.map_basis(|m, nu| {
            let pre =
                &sign_of((ri * i).rem_euclid(2) == 1) * &qp(3 * binom2(ri) - ri * (2 * m + i));
            minus_divided_basis(pre, r, 2 - 2 * m - i, s, m, nu)
        }),
        other => {
            return Err(Error::Parse {
                position: 0,
                message: format!("{other} is not a Chevalley generator"),
            })
        }
    };
    Ok(out)
}

/// The closed-form actions, abstracted so that relation suites can be run
/// against deliberately perturbed implementations.
pub trait Actions: Sync {
    fn x_plus(&self, n: i64, v: &FockVector) -> FockVector {
        x_plus(n, v)
    }
    fn x_minus(&self, n: i64, v: &FockVector) -> FockVector {
        x_minus(n, v)
    }
    fn x_plus_divided(&self, n: i64, r: u32, v: &FockVector) -> Result<FockVector> {
        x_plus_divided(n, r, v)
    }
    fn x_minus_divided(&self, n: i64, r: u32, v: &FockVector) -> Result<FockVector> {
        x_minus_divided(n, r, v)
    }
    fn chevalley(&self, g: Generator, r: u32, v: &FockVector) -> Result<FockVector> {
        chevalley(g, r, v)
    }

    fn apply_token(&self, t: Token, v: &FockVector) -> Result<FockVector> {
        Ok(match t.generator {
            Generator::K0 => k_action(0, 1, v),
            Generator::K1 => k_action(1, 1, v),
            Generator::K0Inv => k_action(0, -1, v),
            Generator::K1Inv => k_action(1, -1, v),
            Generator::Qd => qd_action(1, v),
            Generator::QdInv => qd_action(-1, v),
            g => self.chevalley(g, t.power, v)?,
        })
    }

    fn apply_word(&self, w: &Word, v: &FockVector) -> Result<FockVector> {
        let mut out = v.clone();
        for t in w.0.iter().rev() {
            if out.is_zero() {
                break;
            }
            out = self.apply_token(*t, &out)?;
        }
        Ok(out)
    }
}

/// The actions as derived in closed form.
#[derive(Clone, Copy, Debug, Default)]
pub struct ClosedForm;

impl Actions for ClosedForm {}

/// Applies a word to a vector, rightmost token first.
pub fn apply_word(w: &Word, v: &FockVector) -> Result<FockVector> {
    ClosedForm.apply_word(w, v)
}

/// `[r]! · X^{(r)}` as the r-fold iterate, for comparison with the divided forms.
pub fn iterate(r: u32, v: &FockVector, f: impl Fn(&FockVector) -> FockVector) -> FockVector {
    (0..r).fold(v.clone(), |acc, _| f(&acc))
}

/// `v ↦ (f(v))/[r]!` with exact division.
pub fn divided_by_factorial(r: u32, v: &FockVector) -> Result<FockVector> {
    v.exact_divide(&qfactorial(r as i64)?)
}

/// `ψ_k` on Schur vectors, evaluated through the power-sum oracle.
pub fn psi(k: i64, v: &FockVector) -> Result<FockVector> {
    oracle::via_power(v, |s: &PowerState| oracle::psi_component(k, s))
}

/// `φ_k` on Schur vectors, evaluated through the power-sum oracle.
pub fn phi(k: i64, v: &FockVector) -> Result<FockVector> {
    oracle::via_power(v, |s: &PowerState| oracle::phi_component(k, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn q(terms: &[(i64, i64)]) -> HalfLaurent {
        HalfLaurent::from_q_terms(terms.iter().copied())
    }

    fn fv(sector: u8, terms: &[(i64, Partition, HalfLaurent)]) -> FockVector {
        let mut out = FockVector::zero(sector);
        for (m, l, c) in terms {
            out.terms.add_term((*m, l.clone()), c.clone());
        }
        out
    }

    #[test]
    fn x_minus_example() {
        let v = FockVector::basis(0, 1, part![1]);
        let expect = fv(
            0,
            &[(0, part![2], q(&[(0, -1)])), (0, part![1, 1], q(&[(4, 1)]))],
        );
        assert_eq!(x_minus(0, &v), expect);
        assert_eq!(x_minus_divided(0, 1, &v).unwrap(), expect);
        assert_eq!(
            x_minus(-1, &FockVector::vacuum(0, 0)),
            FockVector::vacuum(0, -1)
        );
        assert!(x_minus(1, &FockVector::vacuum(0, 0)).is_zero());
    }

    #[test]
    fn x_plus_examples() {
        let e = FockVector::vacuum(0, -1);
        assert_eq!(
            x_plus(0, &e),
            FockVector::term(0, 0, part![1], q(&[(1, 1), (-1, 1)]))
        );
        let v = FockVector::basis(0, -1, part![2, 1]);
        let expect = fv(
            0,
            &[
                (0, part![2, 2, 1], q(&[(2, 1)])),
                (0, part![3, 1, 1], q(&[(-2, -1)])),
                (0, part![2, 1, 1, 1], q(&[(-2, -1)])),
                (0, part![5], q(&[(-6, 1)])),
                (0, part![4, 1], q(&[(-6, 1)])),
            ],
        );
        assert_eq!(x_plus(-1, &v), expect);
    }

    #[test]
    fn divided_minus_example() {
        let v = FockVector::vacuum(0, 1);
        assert_eq!(
            x_minus_divided(0, 2, &v).unwrap(),
            FockVector::term(0, -1, part![], q(&[(1, -1)]))
        );
    }

    #[test]
    fn chevalley_examples() {
        let vac = FockVector::vacuum(0, 0);
        let f0 = chevalley(Generator::F0, 1, &vac).unwrap();
        assert_eq!(f0, FockVector::term(0, 1, part![], q(&[(2, 1)])));
        assert_eq!(
            chevalley(Generator::F1, 1, &f0).unwrap(),
            FockVector::term(0, 0, part![1], q(&[(2, -1), (4, -1)]))
        );
        assert_eq!(
            chevalley(Generator::F1, 1, &FockVector::vacuum(1, 0)).unwrap(),
            FockVector::vacuum(1, -1)
        );
    }

    #[test]
    fn k_and_degree() {
        for i in 0..2u8 {
            for m in -2..=2 {
                let v = FockVector::basis(i, m, part![2, 1]);
                let d = 2 * m + i as i64;
                assert_eq!(k_action(1, 1, &v), v.scale(&qp(d)));
                assert_eq!(k_action(0, 1, &k_action(1, 1, &v)), v.scale(&qp(1)));
                assert_eq!(k_action(0, -1, &k_action(0, 1, &v)), v);
            }
        }
        let v = FockVector::basis(0, 0, part![1]);
        assert_eq!(qd_action(1, &v), v.scale(&qp(-1)));
    }

    #[test]
    fn words() {
        let w: Word = "f0 f1^(2) f0".parse().unwrap();
        assert_eq!(w.0.len(), 3);
        assert_eq!(
            w.0[1],
            Token {
                generator: Generator::F1,
                power: 2
            }
        );
        assert_eq!(w.to_string(), "f0 f1^(2) f0");
        assert_eq!("".parse::<Word>().unwrap(), Word::default());
        for bad in ["f2", "K0^(2)", "e1^(0)", "f1^2", "qd^(1)"] {
            let Err(Error::Parse { position, .. }) = bad.parse::<Word>() else {
                panic!("{bad} parsed");
            };
            assert_eq!(position, 1);
        }
        let Err(Error::Parse { position, .. }) = "f0 f1 e7".parse::<Word>() else {
            panic!()
        };
        assert_eq!(position, 3);
    }

    #[test]
    fn rendering() {
        let v = FockVector::term(0, 1, part![], q(&[(2, 1)]));
        assert_eq!(v.to_string(), "q^2 * e^{1a}");
        let w = x_minus(0, &FockVector::basis(0, 1, part![1]));
        assert_eq!(w.to_string(), "-1 * s[2] e^{0a} + q^4 * s[1,1] e^{0a}");
        assert_eq!(FockVector::vacuum(1, -1).to_string(), "1 * e^{-1a+a/2}");
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(serde_json::from_str::<FockVector>(&s).unwrap(), w);
        assert_eq!(
            s,
            r#"{"sector":0,"terms":[{"charge":0,"partition":[2],"coeff":{"0":"-1"}},{"charge":0,"partition":[1,1],"coeff":{"8":"1"}}]}"#
        );
    }

    #[test]
    fn e0_divided_prefactor() {
        let alternative = |r: i64, v: &FockVector| {
            let i = v.sector as i64;
            v.map_basis(|m, nu| {
                let pre = &sign_of((r * i).rem_euclid(2) == 1) * &qp(-binom2(r) - r * (2 * m + i));
                minus_divided_basis(pre, r as usize, 2 - 2 * m - i, v.sector, m, nu)
            })
        };
        let step = |w: &FockVector| x_minus(1, &w.scale_by(|m, _| qp(-(2 * m + w.sector as i64))));
        let fact = |r: u32| crate::qring::qfactorial(r as i64).unwrap();
        let basis: Vec<FockVector> = (0..2u8)
            .flat_map(|i| {
                (-1..=2).flat_map(move |m| {
                    Partition::up_to(2)
                        .into_iter()
                        .map(move |l| FockVector::basis(i, m, l))
                })
            })
            .collect();
        for r in 1..=3u32 {
            let mut alternative_agrees = true;
            for v in &basis {
                let composite = iterate(r, v, step);
                assert_eq!(
                    chevalley(Generator::E0, r, v).unwrap().scale(&fact(r)),
                    composite
                );
                alternative_agrees &= alternative(r as i64, v).scale(&fact(r)) == composite;
            }
            assert_eq!(alternative_agrees, r == 1, "r = {r}");
        }
    }
}
