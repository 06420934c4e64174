//! Brute-force evaluation of vertex-operator components on the Fock space in
//! the power-sum basis.
//!
//! States are finite sums of `b_{-λ} e^{mα} e^{iα/2}` with rational Laurent
//! coefficients, where `b_{-n} = a_{-n}` and `b_n = (1 + q^{2n}) a_n` satisfy
//! the undeformed relations `[b_m, b_n] = m δ_{m,-n}`. A vertex operator is
//!
//! ```text
//! exp(Σ c⁺_n b_{-n} zⁿ / n) · exp(Σ c⁻_n b_n z^{d·n} / n) · e^{tα} · z^{ε∂} · q^{κ∂}
//! ```
//!
//! and a component is the coefficient of one power of `z`. The annihilation
//! exponential acts on a monomial as the substitution `p_n ↦ p_n + c⁻_n z^{d·n}`,
//! which is exact and finite.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::fock::FockVector;
use crate::lincomb::LinComb;
use crate::qring::RatHalfLaurent;
use crate::schur::{power_to_schur, schur_in_p};
use crate::shapes::Partition;
use crate::{Error, Result};

/// A vector of the Fock space in the power-sum basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerState {
    pub sector: u8,
    pub terms: LinComb<(i64, Partition), BigRational>,
}

impl PowerState {
    pub fn zero(sector: u8) -> Self {
        PowerState {
            sector,
            terms: LinComb::zero(),
        }
    }

    /// `e^{mα} e^{iα/2}`.
    pub fn vacuum(sector: u8, charge: i64) -> Self {
        Self::basis(sector, charge, Partition::empty())
    }

    /// `b_{-λ} e^{mα} e^{iα/2}`.
    pub fn basis(sector: u8, charge: i64, lambda: Partition) -> Self {
        PowerState {
            sector,
            terms: LinComb::basis((charge, lambda)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        PowerState {
            sector: self.sector,
            terms: self.terms.add(&rhs.terms),
        }
    }

    pub fn scale(&self, c: &RatHalfLaurent) -> Self {
        PowerState {
            sector: self.sector,
            terms: self.terms.scale(c),
        }
    }
}

fn insert_part(lambda: &Partition, n: usize) -> Partition {
    let mut parts = lambda.parts().to_vec();
    let at = parts.iter().position(|&p| p < n).unwrap_or(parts.len());
    parts.insert(at, n);
    Partition::new(parts).expect("inserting a positive part keeps a partition")
}

fn merge(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<usize> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts).expect("merged parts are positive")
}

/// Action of a single Heisenberg generator: `b_{-n}` multiplies, `b_n` acts
/// as `n ∂/∂b_{-n}`.
pub fn apply_b(n: i64, s: &PowerState) -> Result<PowerState> {
    if n == 0 {
        return Err(Error::Index(0));
    }
    let k = n.unsigned_abs() as usize;
    let mut out = PowerState::zero(s.sector);
    for ((m, lambda), c) in s.terms.iter() {
        if n < 0 {
            out.terms.add_term((*m, insert_part(lambda, k)), c.clone());
            continue;
        }
        let mult = lambda.parts().iter().filter(|&&p| p == k).count();
        if mult == 0 {
            continue;
        }
        let mut parts = lambda.parts().to_vec();
        let at = parts.iter().position(|&p| p == k).unwrap();
        parts.remove(at);
        let factor = BigRational::from_integer(BigInt::from(mult as i64 * n));
        out.terms
            .add_term((*m, Partition::new(parts).unwrap()), c.scale(&factor));
    }
    Ok(out)
}

/// Data of a normally ordered vertex operator in `b`-coordinates.
#[derive(Clone, Copy)]
pub struct VertexSpec {
    /// `c⁺_n`, the coefficient of `b_{-n} zⁿ / n`.
    pub creation: fn(usize) -> RatHalfLaurent,
    /// `c⁻_n`, the coefficient of `b_n z^{d·n} / n`.
    pub annihilation: fn(usize) -> RatHalfLaurent,
    /// `d`: `-1` for the usual `z^{-n}` annihilation factor.
    pub annihilation_dir: i64,
    /// `t` in `e^{tα}`.
    pub shift: i64,
    /// `ε` in `z^{ε∂}`, evaluated before the lattice shift.
    pub epsilon: i64,
    /// `κ` in the trailing scalar `q^{κ∂}`.
    pub charge_scalar: i64,
    /// Component `k` is the coefficient of `z^{a·k + b}` for `(a, b) = index`.
    pub index: (i64, i64),
}

fn rat(terms: &[(i64, i64)]) -> RatHalfLaurent {
    RatHalfLaurent::from_terms(
        terms
            .iter()
            .map(|&(e, c)| (e, BigRational::from_integer(BigInt::from(c)))),
    )
}

fn n_i64(n: usize) -> i64 {
    n as i64
}

impl VertexSpec {
    /// `S(z) = Σ S_n z^{-n}`.
    pub fn s() -> Self {
        VertexSpec {
            creation: |_| RatHalfLaurent::one(),
            annihilation: |_| -RatHalfLaurent::one(),
            annihilation_dir: -1,
            shift: 0,
            epsilon: 0,
            charge_scalar: 0,
            index: (-1, 0),
        }
    }

    /// `S*(z) = Σ S*_n zⁿ` with the annihilation factor in `z^{-n}`.
    pub fn s_star() -> Self {
        VertexSpec {
            creation: |_| -RatHalfLaurent::one(),
            annihilation: |_| RatHalfLaurent::one(),
            annihilation_dir: -1,
            shift: 0,
            epsilon: 0,
            charge_scalar: 0,
            index: (1, 0),
        }
    }

    /// `S*(z)` read with both exponential factors in `z^{+n}`.
    pub fn s_star_positive() -> Self {
        VertexSpec {
            annihilation_dir: 1,
            ..Self::s_star()
        }
    }

    /// `X⁺(z) = Σ X⁺_n z^{-n-1}`.
    pub fn x_plus() -> Self {
        VertexSpec {
            creation: |n| rat(&[(2 * n_i64(n), 1), (-2 * n_i64(n), 1)]),
            annihilation: |n| rat(&[(-2 * n_i64(n), -1)]),
            annihilation_dir: -1,
            shift: 1,
            epsilon: 1,
            charge_scalar: 0,
            index: (-1, -1),
        }
    }

    /// `X⁻(z) = Σ X⁻_n z^{-n-1}`.
    pub fn x_minus() -> Self {
        VertexSpec {
            creation: |n| rat(&[(0, -1), (4 * n_i64(n), -1)]),
            annihilation: |_| RatHalfLaurent::one(),
            annihilation_dir: -1,
            shift: -1,
            epsilon: -1,
            charge_scalar: 0,
            index: (-1, -1),
        }
    }

    /// `Ψ(z) = Σ_{k≥0} ψ_k z^{-k}`.
    pub fn psi() -> Self {
        VertexSpec {
            creation: |_| RatHalfLaurent::zero(),
            annihilation: |n| rat(&[(n_i64(n), 1), (-3 * n_i64(n), -1)]),
            annihilation_dir: -1,
            shift: 0,
            epsilon: 0,
            charge_scalar: 1,
            index: (-1, 0),
        }
    }

    /// `Φ(z) = Σ_{k≤0} φ_k z^{-k}`.
    pub fn phi() -> Self {
        VertexSpec {
            creation: |n| rat(&[(-3 * n_i64(n), 1), (5 * n_i64(n), -1)]),
            annihilation: |_| RatHalfLaurent::zero(),
            annihilation_dir: -1,
            shift: 0,
            epsilon: 0,
            charge_scalar: -1,
            index: (-1, 0),
        }
    }
}

/// `exp(Σ cₙ b_{-n} zⁿ / n)` restricted to `z^a`: `Σ_{ρ⊢a} (∏ c_{ρ_j}) p_ρ / z_ρ`.
fn creation_terms(spec: &VertexSpec, a: usize) -> Vec<(Partition, RatHalfLaurent)> {
    let mut out = Vec::new();
    for rho in Partition::all(a) {
        let mut c = RatHalfLaurent::one();
        for &p in rho.parts() {
            c = &c * &(spec.creation)(p);
            if c.is_zero() {
                break;
            }
        }
        if c.is_zero() {
            continue;
        }
        let z = BigRational::new(BigInt::one(), rho.z_lambda());
        out.push((rho, c.scale(&z)));
    }
    out
}

/// Expands `∏_j (p_{λ_j} + c_{λ_j} z^{λ_j})` as `(remaining monomial, removed weight, coefficient)`.
fn annihilation_terms(
    spec: &VertexSpec,
    lambda: &Partition,
) -> Vec<(Partition, usize, RatHalfLaurent)> {
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &p in lambda.parts() {
        match groups.last_mut() {
            Some((q, k)) if *q == p => *k += 1,
            _ => groups.push((p, 1)),
        }
    }
    let mut out = vec![(Vec::<usize>::new(), 0usize, RatHalfLaurent::one())];
    for (n, k) in groups {
        let c = (spec.annihilation)(n);
        let mut next = Vec::new();
        for (kept, w, coeff) in &out {
            let mut power = RatHalfLaurent::one();
            let mut binom = BigInt::one();
            for r in 0..=k {
                if r > 0 {
                    power = &power * &c;
                    binom = binom * BigInt::from(k - r + 1) / BigInt::from(r);
                }
                if power.is_zero() {
                    break;
                }
                let mut kept2 = kept.clone();
                kept2.extend(std::iter::repeat_n(n, k - r));
                let c2 = (coeff * &power).scale(&BigRational::from_integer(binom.clone()));
                next.push((kept2, w + n * r, c2));
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(kept, w, c)| (Partition::new(kept).unwrap(), w, c))
        .collect()
}

/// The `k`-th component of the vertex operator described by `spec`, applied to `s`.
pub fn apply_vertex_component(spec: &VertexSpec, k: i64, s: &PowerState) -> PowerState {
    let target = spec.index.0 * k + spec.index.1;
    let i = s.sector as i64;
    let mut lowered: BTreeMap<(i64, usize), LinComb<Partition, BigRational>> = BTreeMap::new();
    for ((m, lambda), c) in s.terms.iter() {
        let d = 2 * m + i;
        let rest = target - spec.epsilon * d;
        let c = c * &RatHalfLaurent::v_pow(2 * spec.charge_scalar * d);
        for (kept, w, ac) in annihilation_terms(spec, lambda) {
            if rest - spec.annihilation_dir * (w as i64) < 0 {
                continue;
            }
            lowered.entry((*m, w)).or_default().add_term(kept, &c * &ac);
        }
    }
    let mut creation_cache: HashMap<usize, Vec<(Partition, RatHalfLaurent)>> = HashMap::new();
    let mut out = PowerState::zero(s.sector);
    for ((m, w), terms) in lowered {
        let d = 2 * m + i;
        let a = (target - spec.epsilon * d - spec.annihilation_dir * w as i64) as usize;
        let creation = creation_cache
            .entry(a)
            .or_insert_with(|| creation_terms(spec, a));
        for (kept, base) in terms.iter() {
            for (rho, cc) in creation.iter() {
                out.terms
                    .add_term((m + spec.shift, merge(kept, rho)), base * cc);
            }
        }
    }
    out
}

pub fn s_component(k: i64, s: &PowerState) -> PowerState {
    apply_vertex_component(&VertexSpec::s(), k, s)
}

pub fn s_star_component(k: i64, s: &PowerState) -> PowerState {
    apply_vertex_component(&VertexSpec::s_star(), k, s)
}

pub fn x_plus_component(k: i64, s: &PowerState) -> PowerState {
    apply_vertex_component(&VertexSpec::x_plus(), k, s)
}

pub fn x_minus_component(k: i64, s: &PowerState) -> PowerState {
    apply_vertex_component(&VertexSpec::x_minus(), k, s)
}

/// `ψ_k`, zero for `k < 0`.
pub fn psi_component(k: i64, s: &PowerState) -> PowerState {
    if k < 0 {
        return PowerState::zero(s.sector);
    }
    apply_vertex_component(&VertexSpec::psi(), k, s)
}

/// `φ_k`, zero for `k > 0`.
pub fn phi_component(k: i64, s: &PowerState) -> PowerState {
    if k > 0 {
        return PowerState::zero(s.sector);
    }
    apply_vertex_component(&VertexSpec::phi(), k, s)
}

/// Rewrites a Schur-basis vector in the power-sum basis.
pub fn to_power(v: &FockVector) -> PowerState {
    let mut out = PowerState::zero(v.sector);
    for ((m, lambda), c) in v.terms.iter() {
        let c = c.to_rational();
        for (mu, x) in schur_in_p(lambda).iter() {
            out.terms.add_term((*m, mu.clone()), c.scale(x));
        }
    }
    out
}

/// Rewrites a power-sum state in the Schur basis; fails unless every
/// coefficient is an integer Laurent polynomial.
pub fn to_schur(s: &PowerState) -> Result<FockVector> {
    let mut by_charge: HashMap<i64, LinComb<Partition, BigRational>> = HashMap::new();
    for ((m, lambda), c) in s.terms.iter() {
        by_charge
            .entry(*m)
            .or_default()
            .add_term(lambda.clone(), c.clone());
    }
    let mut out = FockVector::zero(s.sector);
    for (m, g) in by_charge {
        for (lambda, c) in power_to_schur(&g)?.iter() {
            out.terms.add_term((m, lambda.clone()), c.clone());
        }
    }
    Ok(out)
}

/// Runs a power-sum operator on a Schur-basis vector and converts back.
pub fn via_power(v: &FockVector, op: impl Fn(&PowerState) -> PowerState) -> Result<FockVector> {
    to_schur(&op(&to_power(v)))
}

/// `S_{k_1} ⋯ S_{k_r}` applied to the vacuum of charge 0, rightmost first.
pub fn s_word(ks: &[i64]) -> PowerState {
    let mut s = PowerState::vacuum(0, 0);
    for &k in ks.iter().rev() {
        s = s_component(k, &s);
        if s.is_zero() {
            break;
        }
    }
    s
}

/// A q-free symmetric function in the power-sum basis.
pub type RatPower = HashMap<Partition, BigRational>;

fn add_rat(out: &mut RatPower, key: Partition, c: BigRational) {
    use std::collections::hash_map::Entry;
    match out.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn h_in_p(a: usize) -> Arc<Vec<(Partition, BigRational)>> {
    static CACHE: crate::schur::Memo<usize, Vec<(Partition, BigRational)>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&a) {
        return v.clone();
    }
    let terms: Vec<_> = Partition::all(a)
        .into_iter()
        .map(|rho| {
            let z = BigRational::new(BigInt::one(), rho.z_lambda());
            (rho, z)
        })
        .collect();
    let terms = Arc::new(terms);
    cache.lock().unwrap().insert(a, terms.clone());
    terms
}

/// `S_k` on a q-free power-sum expansion: the substitution `p_n ↦ p_n − z^{-n}`
/// followed by multiplication with `h_a = Σ_{ρ ⊢ a} p_ρ / z_ρ`. Agrees with
/// [`s_component`] on the charge-zero sector and avoids Laurent coefficients.
pub fn s_component_rational(k: i64, f: &RatPower) -> RatPower {
    let target = -k;
    let mut by_weight: std::collections::BTreeMap<usize, RatPower> = Default::default();
    for (lambda, c) in f {
        let mut groups: Vec<(usize, usize)> = Vec::new();
        for &p in lambda.parts() {
            match groups.last_mut() {
                Some((q, k)) if *q == p => *k += 1,
                _ => groups.push((p, 1)),
            }
        }
        let mut removals = vec![(Vec::<usize>::new(), 0usize, BigInt::one())];
        for (n, m) in groups {
            let mut next = Vec::with_capacity(removals.len() * (m + 1));
            for (kept, w, coeff) in &removals {
                let mut binom = BigInt::one();
                for r in 0..=m {
                    if r > 0 {
                        binom = binom * BigInt::from(m - r + 1) / BigInt::from(r);
                    }
                    let mut kept2 = kept.clone();
                    kept2.extend(std::iter::repeat_n(n, m - r));
                    let sign = if r % 2 == 0 {
                        coeff * &binom
                    } else {
                        -(coeff * &binom)
                    };
                    next.push((kept2, w + n * r, sign));
                }
            }
            removals = next;
        }
        for (kept, w, coeff) in removals {
            if target + (w as i64) < 0 {
                continue;
            }
            let kept = Partition::new(kept).expect("kept parts are positive");
            add_rat(
                by_weight.entry(w).or_default(),
                kept,
                c * BigRational::from_integer(coeff),
            );
        }
    }
    let mut out = RatPower::new();
    for (w, lowered) in by_weight {
        let a = (target + w as i64) as usize;
        let h = h_in_p(a);
        for (kept, c) in lowered {
            for (rho, z) in h.iter() {
                add_rat(&mut out, merge(&kept, rho), &c * z);
            }
        }
    }
    out
}

/// `± s_λ` in the power-sum basis, for comparison with [`s_component_rational`].
pub fn schur_rational(sign: i8, lambda: &Partition) -> RatPower {
    let s = BigRational::from_integer(BigInt::from(sign));
    schur_in_p(lambda)
        .iter()
        .map(|(mu, c)| (mu.clone(), c * &s))
        .collect()
}
