//! Symmetric functions in the Schur and power-sum bases.
//!
//! Complete homogeneous functions are written `h_n` (the vertex-operator
//! literature writes `s_n`), elementary ones `e_n`, power sums `p_λ`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::lincomb::LinComb;
use crate::mpoly::{signed_permutations, MPoly};
use crate::qring::{Coeff, HalfLaurent, Laurent, RatHalfLaurent};
use crate::shapes::{horizontal_strips, straighten, vertical_strips, Partition, StraightenResult};
use crate::{Error, Result};

/// Finite combination `Σ c_λ s_λ` with integer Laurent coefficients.
pub type SchurPoly = LinComb<Partition, BigInt>;
/// Finite combination `Σ c_λ p_λ` with rational Laurent coefficients.
pub type PowerPoly = LinComb<Partition, BigRational>;

/// A signed product of complete homogeneous functions, `sign · h_{ν₁}…h_{ν_k}`.
/// `ν` is stored as a partition (zero indices dropped since `h_0 = 1`).
pub type HMonomial = (i64, Partition);

pub(crate) type Memo<K, V> = OnceLock<Mutex<HashMap<K, Arc<V>>>>;

fn cache<K, V>(cell: &'static Memo<K, V>) -> &'static Mutex<HashMap<K, Arc<V>>> {
    cell.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached<K, V>(cell: &'static Memo<K, V>, key: K, compute: impl FnOnce() -> V) -> Arc<V>
where
    K: std::hash::Hash + Eq,
{
    if let Some(v) = cache(cell).lock().unwrap().get(&key) {
        return v.clone();
    }
    let v = Arc::new(compute());
    cache(cell).lock().unwrap().entry(key).or_insert(v).clone()
}

/// `s_ρ` as a one-term Schur polynomial.
pub fn schur(rho: Partition) -> SchurPoly {
    SchurPoly::basis(rho)
}

/// `h_n · s_ρ = Σ s_λ` over horizontal `n`-strips `λ/ρ`.
pub fn pieri_h(n: usize, rho: &Partition) -> SchurPoly {
    horizontal_strips(rho, n)
        .into_iter()
        .map(|l| (l, HalfLaurent::one()))
        .collect()
}

/// `e_n · s_ρ = Σ s_λ` over vertical `n`-strips `λ/ρ`.
pub fn pieri_e(n: usize, rho: &Partition) -> SchurPoly {
    vertical_strips(rho, n)
        .into_iter()
        .map(|l| (l, HalfLaurent::one()))
        .collect()
}

/// `h_n · f`, extended linearly.
pub fn mul_h<C: Coeff>(n: usize, f: &LinComb<Partition, C>) -> LinComb<Partition, C> {
    let mut out = LinComb::zero();
    for (rho, c) in f.iter() {
        for lambda in horizontal_strips(rho, n) {
            out.add_term(lambda, c.clone());
        }
    }
    out
}

/// `e_n · f`, extended linearly.
pub fn mul_e<C: Coeff>(n: usize, f: &LinComb<Partition, C>) -> LinComb<Partition, C> {
    let mut out = LinComb::zero();
    for (rho, c) in f.iter() {
        for lambda in vertical_strips(rho, n) {
            out.add_term(lambda, c.clone());
        }
    }
    out
}

/// Leibniz expansion of `det(h_{λ_i - i + j})`, with `h_k = 0` for `k < 0`.
/// Equal h-monomials are merged; zero totals are dropped.
pub fn jacobi_trudi(lambda: &Partition) -> Vec<HMonomial> {
    let l = lambda.len();
    let mut acc: BTreeMap<Partition, i64> = BTreeMap::new();
    let mut used = vec![false; l];
    let mut idx = Vec::with_capacity(l);
    fn rec(
        row: usize,
        lambda: &Partition,
        used: &mut [bool],
        idx: &mut Vec<usize>,
        sign: i64,
        acc: &mut BTreeMap<Partition, i64>,
    ) {
        let l = lambda.len();
        if row == l {
            let mut parts: Vec<usize> = idx.iter().copied().filter(|&k| k > 0).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            *acc.entry(Partition::from_sorted(parts)).or_insert(0) += sign;
            return;
        }
        for col in 0..l {
            if used[col] {
                continue;
            }
            let k = lambda.part(row) as i64 - row as i64 + col as i64;
            if k < 0 {
                continue;
            }
            // sign flips once per unused column skipped to the left
            let skipped = used[..col].iter().filter(|u| !**u).count();
            let s = if skipped % 2 == 0 { sign } else { -sign };
            used[col] = true;
            idx.push(k as usize);
            rec(row + 1, lambda, used, idx, s, acc);
            idx.pop();
            used[col] = false;
        }
    }
    rec(0, lambda, &mut used, &mut idx, 1, &mut acc);
    acc.into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(p, c)| (c, p))
        .collect()
}

/// `s_λ s_μ` by the matrix-count form of the Littlewood–Richardson rule.
///
/// `s_λ s_μ = Σ_k s_{(λ + M(k), μ − N(k))}` over nonnegative integer matrices
/// `k` with row sums `M` and column sums `N`, each juxtaposed tuple
/// straightened. Columns are processed one at a time and matrices with the same
/// partial margins are merged. A column sum is only allowed while the
/// corresponding entry stays straightenable (`μ_j − N_j + (L − 1 − pos) ≥ 0`
/// and distinct from the entries already fixed), which bounds the sum.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> SchurPoly {
    static CACHE: Memo<(Partition, Partition), SchurPoly> = OnceLock::new();
    let key = (lambda.clone(), mu.clone());
    (*cached(&CACHE, key, || lr_product_uncached(lambda, mu))).clone()
}

fn lr_product_uncached(lambda: &Partition, mu: &Partition) -> SchurPoly {
    let a = lambda.len();
    let b = mu.len();
    let total = (a + b) as i64;
    // state: (λ-block after partial row sums, shifted μ-block values fixed so far)
    let mut states: HashMap<(Vec<i64>, Vec<i64>), BigInt> = HashMap::new();
    states.insert((lambda.to_tuple(), Vec::new()), BigInt::one());
    for j in 0..b {
        let pos = (a + j) as i64;
        let shift = total - 1 - pos;
        let top = mu.part(j) as i64 + shift;
        let mut next: HashMap<(Vec<i64>, Vec<i64>), BigInt> = HashMap::new();
        for ((rows, fixed), count) in &states {
            for n_j in 0..=top {
                let u = top - n_j;
                if fixed.contains(&u) {
                    continue;
                }
                if a == 0 && n_j > 0 {
                    break;
                }
                let mut fixed2 = fixed.clone();
                fixed2.push(u);
                for_each_composition(n_j as usize, a, &mut |comp| {
                    let rows2: Vec<i64> =
                        rows.iter().zip(comp).map(|(r, k)| r + *k as i64).collect();
                    *next
                        .entry((rows2, fixed2.clone()))
                        .or_insert_with(BigInt::zero) += count;
                });
            }
        }
        states = next;
    }
    let mut out = SchurPoly::zero();
    for ((rows, fixed), count) in states {
        let mut t = rows;
        t.extend(
            fixed
                .iter()
                .enumerate()
                .map(|(j, u)| u - (total - 1 - (a + j) as i64)),
        );
        if let StraightenResult::Signed { sign, partition } = straighten(&t) {
            let c = if sign > 0 { count } else { -count };
            out.add_term(partition, HalfLaurent::constant(c));
        }
    }
    out
}

fn for_each_composition(n: usize, parts: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(rest: usize, i: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        let parts = cur.len();
        if i + 1 == parts {
            cur[i] = rest;
            f(cur);
            return;
        }
        for k in 0..=rest {
            cur[i] = k;
            rec(rest - k, i + 1, cur, f);
        }
    }
    if parts == 0 {
        if n == 0 {
            f(&[]);
        }
        return;
    }
    let mut cur = vec![0; parts];
    rec(n, 0, &mut cur, f);
}

/// `s_λ s_μ` by expanding `s_μ` with Jacobi–Trudi and applying Pieri's rule.
pub fn lr_product_oracle(lambda: &Partition, mu: &Partition) -> SchurPoly {
    let mut out = SchurPoly::zero();
    for (sign, hs) in jacobi_trudi(mu) {
        let mut f = schur(lambda.clone());
        for &n in hs.parts() {
            f = mul_h(n, &f);
        }
        out.add_scaled(&f, &HalfLaurent::from_int(sign));
    }
    out
}

/// `∏_{i,j} (1 − R_ij)^{-1} s_{(λ, μ)}` with `R_ij` moving one unit from part
/// `j` of the μ-block to part `i` of the λ-block. Terms whose μ-block entry can
/// no longer straighten to a nonzero value are dropped as they arise.
pub fn raising_operator_product(lambda: &Partition, mu: &Partition) -> SchurPoly {
    let a = lambda.len();
    let b = mu.len();
    let total = a + b;
    let mut start = lambda.to_tuple();
    start.extend(mu.to_tuple());
    let mut tuples: HashMap<Vec<i64>, BigInt> = HashMap::new();
    tuples.insert(start, BigInt::one());
    for i in 0..a {
        for j in a..total {
            let floor = -((total - 1 - j) as i64);
            let mut next: HashMap<Vec<i64>, BigInt> = HashMap::new();
            for (t, c) in &tuples {
                let mut t2 = t.clone();
                while t2[j] >= floor {
                    *next.entry(t2.clone()).or_insert_with(BigInt::zero) += c;
                    t2[i] += 1;
                    t2[j] -= 1;
                }
            }
            tuples = next;
        }
    }
    let mut out = SchurPoly::zero();
    for (t, c) in tuples {
        if let StraightenResult::Signed { sign, partition } = straighten(&t) {
            out.add_term(
                partition,
                HalfLaurent::constant(if sign > 0 { c } else { -c }),
            );
        }
    }
    out
}

/// Product of two Schur polynomials, bilinear extension of [`lr_product`].
pub fn multiply(f: &SchurPoly, g: &SchurPoly) -> SchurPoly {
    let mut out = SchurPoly::zero();
    for (l, a) in f.iter() {
        for (m, b) in g.iter() {
            out.add_scaled(&lr_product(l, m), &(a * b));
        }
    }
    out
}

/// Applies `ω: s_λ ↦ s_λ'` termwise.
pub fn omega(f: &SchurPoly) -> SchurPoly {
    f.map_keys(Partition::conjugate)
}

/// Power-sum expansion of `h_ν` with rational coefficients.
fn h_monomial_in_p(nu: &Partition) -> Arc<BTreeMap<Partition, BigRational>> {
    static CACHE: Memo<Partition, BTreeMap<Partition, BigRational>> = OnceLock::new();
    cached(&CACHE, nu.clone(), || {
        if nu.is_empty() {
            return BTreeMap::from([(Partition::empty(), BigRational::one())]);
        }
        let first = nu.part(0);
        let rest = Partition::from_sorted(nu.parts()[1..].to_vec());
        let tail = h_monomial_in_p(&rest);
        let mut out: BTreeMap<Partition, BigRational> = BTreeMap::new();
        // h_n = Σ_{ρ ⊢ n} p_ρ / z_ρ
        for rho in Partition::all(first) {
            let w = BigRational::new(BigInt::one(), rho.z_lambda());
            for (sigma, c) in tail.iter() {
                let key = merge_parts(&rho, sigma);
                let slot = out.entry(key).or_insert_with(BigRational::zero);
                *slot += &w * c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    })
}

fn merge_parts(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<usize> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::from_sorted(parts)
}

/// Power-sum expansion `s_λ = Σ_μ c_{λμ} p_μ`.
pub fn schur_in_p(lambda: &Partition) -> Arc<BTreeMap<Partition, BigRational>> {
    static CACHE: Memo<Partition, BTreeMap<Partition, BigRational>> = OnceLock::new();
    cached(&CACHE, lambda.clone(), || {
        let mut out: BTreeMap<Partition, BigRational> = BTreeMap::new();
        for (sign, nu) in jacobi_trudi(lambda) {
            let s = BigRational::from_integer(BigInt::from(sign));
            for (mu, c) in h_monomial_in_p(&nu).iter() {
                *out.entry(mu.clone()).or_insert_with(BigRational::zero) += &s * c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    })
}

/// Character table of degree `n`: `χ^λ(μ) = z_μ c_{λμ}`, indexed `[λ][μ]`.
fn characters(n: usize) -> Arc<HashMap<Partition, Vec<(Partition, BigInt)>>> {
    static CACHE: Memo<usize, HashMap<Partition, Vec<(Partition, BigInt)>>> = OnceLock::new();
    cached(&CACHE, n, || {
        // transpose: for each μ, the list of (λ, χ^λ(μ))
        let mut by_mu: HashMap<Partition, Vec<(Partition, BigInt)>> = HashMap::new();
        for lambda in Partition::all(n) {
            for (mu, c) in schur_in_p(&lambda).iter() {
                let chi = c * BigRational::from_integer(mu.z_lambda());
                debug_assert!(chi.is_integer());
                by_mu
                    .entry(mu.clone())
                    .or_default()
                    .push((lambda.clone(), chi.to_integer()));
            }
        }
        by_mu
    })
}

/// Schur → power-sum basis, via Jacobi–Trudi and `h_n = Σ_{λ⊢n} p_λ/z_λ`.
pub fn schur_to_power(f: &SchurPoly) -> PowerPoly {
    let mut out = PowerPoly::zero();
    for (lambda, c) in f.iter() {
        let c = c.to_rational();
        for (mu, x) in schur_in_p(lambda).iter() {
            out.add_term(mu.clone(), c.scale(x));
        }
    }
    out
}

/// Power-sum → Schur basis with rational coefficients, using
/// `p_μ = Σ_λ z_μ c_{λμ} s_λ` (orthonormality of the Schur basis).
pub fn power_to_schur_rational(g: &PowerPoly) -> LinComb<Partition, BigRational> {
    let mut out = LinComb::zero();
    for (mu, c) in g.iter() {
        let table = characters(mu.weight());
        if let Some(row) = table.get(mu) {
            for (lambda, chi) in row {
                out.add_term(
                    lambda.clone(),
                    c.scale(&BigRational::from_integer(chi.clone())),
                );
            }
        }
    }
    out
}

/// Power-sum → Schur basis; fails if the result is not integral.
pub fn power_to_schur(g: &PowerPoly) -> Result<SchurPoly> {
    power_to_schur_rational(g)
        .try_map_coeffs(|c| c.to_integer())
        .ok_or(Error::InexactDivision)
}

/// Hall inner product on the power-sum basis: `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ`.
pub fn hall_inner_power(f: &PowerPoly, g: &PowerPoly) -> RatHalfLaurent {
    let mut out = RatHalfLaurent::zero();
    for (lambda, a) in f.iter() {
        if let Some(b) = g.get(lambda) {
            let z = BigRational::from_integer(lambda.z_lambda());
            out += &(a * b).scale(&z);
        }
    }
    out
}

/// Hall inner product of Schur polynomials, evaluated through the power-sum
/// expansion.
pub fn hall_inner(f: &SchurPoly, g: &SchurPoly) -> HalfLaurent {
    hall_inner_power(&schur_to_power(f), &schur_to_power(g))
        .to_integer()
        .expect("Hall inner product of integral Schur polynomials is integral")
}

/// Deformed form on the power-sum basis as an exact fraction
/// `(numerator, denominator)`: `(z_λ, ∏_j (1 + q^{2λ_j}))` when `λ = μ`,
/// else `(0, 1)`. Charges are compared by the caller.
pub fn deformed_inner(lambda: &Partition, mu: &Partition) -> (HalfLaurent, HalfLaurent) {
    if lambda != mu {
        return (HalfLaurent::zero(), HalfLaurent::one());
    }
    let den = lambda.parts().iter().fold(HalfLaurent::one(), |acc, &p| {
        &acc * &(&HalfLaurent::one() + &HalfLaurent::q_pow(2 * p as i64))
    });
    (HalfLaurent::constant(lambda.z_lambda()), den)
}

/// `S_{-μ₁}…S_{-μ_l} S*_{ν₁}…S*_{ν_k}·1` as a signed Schur function.
///
/// `S*_ν·1 = (−1)^{|ν|} sgn(ν) s_{π(ν)'}` where `π(ν)` straightens `ν`; the
/// creation operators then juxtapose `μ` in front of `π(ν)'` and the result is
/// straightened again. For a partition `ν` this is `(−1)^{|ν|} s_{π(μ, ν')}`.
pub fn mixed_product(mu: &[i64], nu: &[i64]) -> StraightenResult {
    let weight: i64 = nu.iter().sum();
    let (sign, rho) = match straighten(nu) {
        StraightenResult::Zero => return StraightenResult::Zero,
        StraightenResult::Signed { sign, partition } => (sign, partition.conjugate()),
    };
    let mut t = mu.to_vec();
    t.extend(rho.to_tuple());
    let out = straighten(&t);
    if (weight.rem_euclid(2) == 1) != (sign < 0) {
        out.negate()
    } else {
        out
    }
}

/// Schur polynomial `s_λ(x_1, …, x_n)` as the Weyl bialternant
/// `a_{λ+δ} / a_δ`, with `a_β = Σ_σ sgn(σ) x^{σ(β)}`.
///
/// The quotient is symmetric, so it is solved for on dominant monomials:
/// comparing coefficients of `x^{κ+δ}` in `a_δ · s = a_{λ+δ}` gives
/// `Σ_σ sgn(σ) c_{sort(κ+δ−σ(δ))} = [κ = λ]`, and every `σ ≠ id` term refers
/// to a partition strictly above `κ` in dominance order.
pub fn weyl_bialternant(lambda: &Partition, n: usize) -> Result<MPoly<BigInt>> {
    static CACHE: Memo<(Partition, usize), MPoly<BigInt>> = OnceLock::new();
    if lambda.len() > n {
        return Err(Error::Index(n as i64));
    }
    let key = (lambda.clone(), n);
    if let Some(v) = cache(&CACHE).lock().unwrap().get(&key) {
        return Ok((**v).clone());
    }
    let pad = |p: &Partition| -> Vec<i64> { (0..n).map(|i| p.part(i) as i64).collect() };
    let mut kappas: Vec<Vec<i64>> = Partition::all(lambda.weight())
        .into_iter()
        .filter(|k| k.len() <= n)
        .map(|k| pad(&k))
        .collect();
    kappas.sort_unstable_by(|x, y| y.cmp(x));
    let shifts: Vec<(Vec<i64>, i8)> = signed_permutations(n)
        .into_iter()
        .filter(|(sigma, _)| sigma.iter().enumerate().any(|(i, &s)| i != s))
        .map(|(sigma, sign)| {
            // δ − σ(δ), with δ = (n−1, …, 0)
            let d: Vec<i64> = (0..n).map(|i| sigma[i] as i64 - i as i64).collect();
            (d, sign)
        })
        .collect();
    let target = pad(lambda);
    let mut dominant: HashMap<Vec<i64>, BigInt> = HashMap::new();
    let mut beta = vec![0i64; n];
    for kappa in &kappas {
        let mut c = if *kappa == target {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        for (d, sign) in &shifts {
            let mut ok = true;
            for i in 0..n {
                beta[i] = kappa[i] + d[i];
                ok &= beta[i] >= 0;
            }
            if !ok {
                continue;
            }
            beta.sort_unstable_by(|x, y| y.cmp(x));
            if let Some(x) = dominant.get(&beta) {
                if *sign > 0 {
                    c -= x;
                } else {
                    c += x;
                }
            }
        }
        if !c.is_zero() {
            dominant.insert(kappa.clone(), c);
        }
    }
    let mut out = MPoly::zero(n);
    for (kappa, c) in dominant {
        let mut e: Vec<u32> = kappa.iter().rev().map(|&x| x as u32).collect();
        loop {
            out.add_term(e.clone(), c.clone());
            if !next_permutation(&mut e) {
                break;
            }
        }
    }
    cache(&CACHE)
        .lock()
        .unwrap()
        .insert(key, Arc::new(out.clone()));
    Ok(out)
}

/// Advances to the next lexicographic permutation; `false` after the last one.
fn next_permutation(e: &mut [u32]) -> bool {
    let Some(i) = (1..e.len()).rev().find(|&i| e[i - 1] < e[i]) else {
        return false;
    };
    let j = (i..e.len())
        .rev()
        .find(|&j| e[j] > e[i - 1])
        .expect("a larger element exists");
    e.swap(i - 1, j);
    e[i..].reverse();
    true
}

fn coeff_text<C: Coeff>(c: &Laurent<C>) -> String {
    if c.len() > 1 {
        format!("({c})")
    } else {
        c.to_string()
    }
}

/// Renders `c * s[λ]` terms joined by ` + `, in basis order.
pub struct Display<'a, C: Coeff>(pub &'a LinComb<Partition, C>, pub &'a str);

impl<C: Coeff> fmt::Display for Display<'_, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{} * {}[{}]", coeff_text(c), self.1, lambda)?;
        }
        Ok(())
    }
}

pub fn schur_text(f: &SchurPoly) -> String {
    Display(f, "s").to_string()
}

pub fn power_text(g: &PowerPoly) -> String {
    Display(g, "p").to_string()
}

pub(crate) fn laurent_text<C: Coeff>(c: &Laurent<C>) -> String {
    coeff_text(c)
}

impl<C: Coeff> Serialize for LinComb<Partition, C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for (lambda, c) in self.iter() {
            seq.serialize_element(&json!({ "partition": lambda, "coeff": c.to_json() }))?;
        }
        seq.end()
    }
}

impl<'de, C: Coeff> Deserialize<'de> for LinComb<Partition, C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        let Value::Array(items) = v else {
            return Err(D::Error::custom("expected an array of terms"));
        };
        let mut out = LinComb::zero();
        for item in items {
            let lambda: Partition =
                serde_json::from_value(item["partition"].clone()).map_err(D::Error::custom)?;
            let c = Laurent::<C>::from_json(&item["coeff"]).map_err(D::Error::custom)?;
            out.add_term(lambda, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn sp(terms: &[(Partition, i64)]) -> SchurPoly {
        terms
            .iter()
            .map(|(p, c)| (p.clone(), HalfLaurent::from_int(*c)))
            .collect()
    }

    fn rat(n: i64, d: i64) -> RatHalfLaurent {
        RatHalfLaurent::constant(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn lr_examples() {
        let one_one = sp(&[(part![2], 1), (part![1, 1], 1)]);
        assert_eq!(lr_product(&part![1], &part![1]), one_one);
        let expect = sp(&[(part![3, 1], 1), (part![2, 2], 1), (part![2, 1, 1], 1)]);
        assert_eq!(lr_product(&part![2, 1], &part![1]), expect);
        assert_eq!(lr_product_oracle(&part![2, 1], &part![1]), expect);
        let square = sp(&[
            (part![4, 2], 1),
            (part![4, 1, 1], 1),
            (part![3, 3], 1),
            (part![3, 2, 1], 2),
            (part![3, 1, 1, 1], 1),
            (part![2, 2, 2], 1),
            (part![2, 2, 1, 1], 1),
        ]);
        assert_eq!(lr_product(&part![2, 1], &part![2, 1]), square);
        assert_eq!(lr_product_oracle(&part![2, 1], &part![2, 1]), square);
        assert_eq!(raising_operator_product(&part![2, 1], &part![2, 1]), square);
        assert_eq!(lr_product(&part![], &part![2, 1]), schur(part![2, 1]));
        assert_eq!(lr_product(&part![2, 1], &part![]), schur(part![2, 1]));
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(
            pieri_h(2, &part![1, 1, 1]),
            sp(&[(part![3, 1, 1], 1), (part![2, 1, 1, 1], 1)])
        );
        assert_eq!(pieri_h(0, &part![3, 1]), schur(part![3, 1]));
        assert_eq!(
            pieri_e(2, &part![1]),
            sp(&[(part![2, 1], 1), (part![1, 1, 1], 1)])
        );
        assert_eq!(omega(&pieri_h(2, &part![1])), pieri_e(2, &part![1]));
    }

    #[test]
    fn pieri_agrees_with_lr() {
        for rho in Partition::up_to(6) {
            for n in 0..=5 {
                assert_eq!(pieri_h(n, &rho), lr_product(&Partition::row(n), &rho));
                assert_eq!(pieri_e(n, &rho), lr_product(&Partition::column(n), &rho));
            }
        }
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert_eq!(
            jacobi_trudi(&part![2, 1]),
            vec![(-1, part![3]), (1, part![2, 1])]
        );
        assert_eq!(jacobi_trudi(&part![4]), vec![(1, part![4])]);
        assert_eq!(
            jacobi_trudi(&part![1, 1]),
            vec![(-1, part![2]), (1, part![1, 1])]
        );
        assert_eq!(jacobi_trudi(&part![]), vec![(1, part![])]);
    }

    #[test]
    fn power_sum_conversions() {
        let p = |l: Partition, c: RatHalfLaurent| PowerPoly::term(l, c);
        assert_eq!(schur_to_power(&schur(part![1])), p(part![1], rat(1, 1)));
        assert_eq!(
            schur_to_power(&schur(part![2])),
            p(part![1, 1], rat(1, 2)).add(&p(part![2], rat(1, 2)))
        );
        assert_eq!(
            schur_to_power(&schur(part![1, 1])),
            p(part![1, 1], rat(1, 2)).add(&p(part![2], rat(-1, 2)))
        );
        assert_eq!(
            schur_to_power(&schur(part![2, 1])),
            p(part![1, 1, 1], rat(1, 3)).add(&p(part![3], rat(-1, 3)))
        );
        for lambda in Partition::up_to(8) {
            let f = schur(lambda);
            assert_eq!(power_to_schur(&schur_to_power(&f)).unwrap(), f);
        }
    }

    #[test]
    fn hall_orthonormality() {
        let all = Partition::up_to(7);
        for l in &all {
            for m in &all {
                let expect = if l == m {
                    HalfLaurent::one()
                } else {
                    HalfLaurent::zero()
                };
                assert_eq!(hall_inner(&schur(l.clone()), &schur(m.clone())), expect);
            }
        }
        let p2 = PowerPoly::basis(part![2]);
        let p11 = PowerPoly::basis(part![1, 1]);
        assert_eq!(hall_inner_power(&p2, &p2), rat(2, 1));
        assert!(hall_inner_power(&p11, &p2).is_zero());
    }

    #[test]
    fn deformed_form() {
        let (n, d) = deformed_inner(&part![1], &part![1]);
        assert_eq!(
            (n, d),
            (
                HalfLaurent::one(),
                HalfLaurent::from_q_terms([(0, 1), (2, 1)])
            )
        );
        let (n, d) = deformed_inner(&part![2, 1], &part![2, 1]);
        assert_eq!(n, HalfLaurent::from_int(2));
        assert_eq!(
            d,
            &HalfLaurent::from_q_terms([(0, 1), (4, 1)])
                * &HalfLaurent::from_q_terms([(0, 1), (2, 1)])
        );
        assert_eq!(
            deformed_inner(&part![2], &part![1, 1]),
            (HalfLaurent::zero(), HalfLaurent::one())
        );
    }

    #[test]
    fn mixed_products() {
        assert_eq!(
            mixed_product(&[1], &[2, 1, 1, 1]),
            StraightenResult::Signed {
                sign: 1,
                partition: part![3, 2, 1]
            }
        );
        assert_eq!(mixed_product(&[1], &[2, 2]), StraightenResult::Zero);
        for lambda in Partition::up_to(6) {
            let sign = if lambda.weight() % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                mixed_product(&[], &lambda.to_tuple()),
                StraightenResult::Signed {
                    sign,
                    partition: lambda.conjugate()
                }
            );
        }
    }

    #[test]
    fn bialternants() {
        let x = |i| MPoly::<BigInt>::var(2, i);
        assert_eq!(weyl_bialternant(&part![1], 2).unwrap(), x(0).add(&x(1)));
        assert_eq!(weyl_bialternant(&part![], 3).unwrap(), MPoly::one(3));
        let x1x2 = x(0).mul(&x(1));
        assert_eq!(
            weyl_bialternant(&part![2, 1], 2).unwrap(),
            x1x2.mul(&x(0)).add(&x1x2.mul(&x(1)))
        );
        assert!(weyl_bialternant(&part![1, 1, 1], 2).is_err());
    }

    fn bialternant_by_division(lambda: &Partition, n: usize) -> MPoly<BigInt> {
        let shifted: Vec<u32> = (0..n)
            .map(|i| (lambda.part(i) + n - 1 - i) as u32)
            .collect();
        let mut num = MPoly::zero(n);
        for (sigma, sign) in signed_permutations(n) {
            let mut e = vec![0u32; n];
            for (i, &s) in sigma.iter().enumerate() {
                e[s] = shifted[i];
            }
            num.add_term(e, BigInt::from(sign));
        }
        for i in 0..n {
            for j in i + 1..n {
                let factor = MPoly::var(n, i).sub(&MPoly::var(n, j));
                num = num.exact_div(&factor).unwrap();
            }
        }
        num
    }

    #[test]
    fn bialternant_matches_long_division() {
        for n in 1..=4 {
            for lambda in Partition::up_to(5).into_iter().filter(|l| l.len() <= n) {
                assert_eq!(
                    weyl_bialternant(&lambda, n).unwrap(),
                    bialternant_by_division(&lambda, n),
                    "{lambda} in {n}"
                );
            }
        }
    }

    #[test]
    fn json_shape() {
        let f = sp(&[(part![1, 1], -1), (part![2], 1)]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"[{"partition":[2],"coeff":{"0":"1"}},{"partition":[1,1],"coeff":{"0":"-1"}}]"#
        );
        assert_eq!(serde_json::from_str::<SchurPoly>(&s).unwrap(), f);
        assert_eq!(schur_text(&f), "1 * s[2] + -1 * s[1,1]");
    }
}
