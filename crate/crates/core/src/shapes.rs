//! Partitions, integer tuples and the straightening rule.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A weakly decreasing list of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates the parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        Ok(Partition { parts })
    }

    /// Caller guarantees the parts are positive and weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_sorted(vec![n])
    }

    /// The one-column partition `(1ⁿ)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// `λ'_i = #{j : λ_j ≥ i}`.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Young-diagram containment `self ⊇ other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z_lambda(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut run = 0usize;
        for (k, &p) in self.parts.iter().enumerate() {
            run = if k > 0 && self.parts[k - 1] == p {
                run + 1
            } else {
                1
            };
            z *= p * run;
        }
        z
    }

    pub fn to_tuple(&self) -> Vec<i64> {
        self.parts.iter().map(|&p| p as i64).collect()
    }

    /// All partitions of `n`, in [`Ord`] order (lexicographically decreasing).
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of weight at most `n`.
    pub fn up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all).collect()
    }

    /// Partitions fitting in a `rows × cols` box (at most `rows` parts, each `≤ cols`).
    pub fn in_box(rows: usize, cols: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition { parts: cur.clone() });
            if cur.len() == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(rows, p, cur, out);
                cur.pop();
            }
        }
        rec(rows, cols, &mut cur, &mut out);
        out.sort();
        out
    }
}

impl Ord for Partition {
    /// Weight ascending, then lexicographically decreasing parts.
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = parse_tuple(s)?;
        if t.iter().any(|&x| x < 0) {
            return Err(Error::InvalidPartition(t));
        }
        Partition::new(t.into_iter().map(|x| x as usize).collect())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

/// Shorthand for building partitions in tests and tables; panics on bad input.
#[macro_export]
macro_rules! part {
    () => { $crate::shapes::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::shapes::Partition::new(vec![$($p),+]).expect("valid partition")
    };
}

/// An arbitrary finite integer sequence (operator subscripts, shifted weights).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tuple(pub Vec<i64>);

impl FromStr for Tuple {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_tuple(s).map(Tuple)
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

/// Comma-separated integers; the empty string is the empty tuple.
pub fn parse_tuple(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .enumerate()
        .map(|(i, tok)| {
            tok.trim().parse::<i64>().map_err(|_| Error::Parse {
                position: i + 1,
                message: format!("expected integer, found {:?}", tok.trim()),
            })
        })
        .collect()
}

/// Outcome of straightening a tuple: zero, or `±s_λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StraightenResult {
    Zero,
    Signed { sign: i8, partition: Partition },
}

impl StraightenResult {
    pub fn is_zero(&self) -> bool {
        matches!(self, StraightenResult::Zero)
    }

    pub fn negate(self) -> Self {
        match self {
            StraightenResult::Zero => StraightenResult::Zero,
            StraightenResult::Signed { sign, partition } => StraightenResult::Signed {
                sign: -sign,
                partition,
            },
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            StraightenResult::Zero => serde_json::json!({ "sign": 0, "partition": null }),
            StraightenResult::Signed { sign, partition } => {
                serde_json::json!({ "sign": sign, "partition": partition })
            }
        }
    }
}

/// Normalizes `s_t` for an arbitrary integer tuple `t` of length `l`.
///
/// With `δ = (l-1, …, 1, 0)` and `u = t + δ`: zero if `u` has a repeated or a
/// negative entry, otherwise `sgn(σ)·s_λ` where `σ` sorts `u` strictly
/// decreasingly and `λ = σ(u) - δ`.
pub fn straighten(t: &[i64]) -> StraightenResult {
    let l = t.len();
    let mut u: Vec<i64> = t
        .iter()
        .enumerate()
        .map(|(k, &x)| x + (l - 1 - k) as i64)
        .collect();
    if u.iter().any(|&x| x < 0) {
        return StraightenResult::Zero;
    }
    // insertion sort, counting transpositions
    let mut swaps = 0usize;
    for i in 1..l {
        let mut j = i;
        while j > 0 && u[j - 1] <= u[j] {
            if u[j - 1] == u[j] {
                return StraightenResult::Zero;
            }
            u.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
        if j > 0 && u[j - 1] == u[j] {
            return StraightenResult::Zero;
        }
    }
    let parts = u
        .iter()
        .enumerate()
        .map(|(k, &x)| (x - (l - 1 - k) as i64) as usize)
        .collect();
    StraightenResult::Signed {
        sign: if swaps.is_multiple_of(2) { 1 } else { -1 },
        partition: Partition::from_sorted(parts),
    }
}

/// Partition conjugate.
pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

pub fn z_lambda(lambda: &Partition) -> BigInt {
    lambda.z_lambda()
}

/// True iff `λ ⊇ ρ` and `λ/ρ` has at most one box in each column.
pub fn is_horizontal_strip(lambda: &Partition, rho: &Partition) -> bool {
    lambda.contains(rho) && (1..lambda.len()).all(|i| lambda.part(i) <= rho.part(i - 1))
}

/// True iff `λ ⊇ ρ` and `λ/ρ` has at most one box in each row.
pub fn is_vertical_strip(lambda: &Partition, rho: &Partition) -> bool {
    lambda.contains(rho) && (0..lambda.len()).all(|i| lambda.part(i) - rho.part(i) <= 1)
}

/// All `λ` with `λ/ρ` a horizontal `n`-strip, sorted.
pub fn horizontal_strips(rho: &Partition, n: usize) -> Vec<Partition> {
    // λ interlaces ρ: λ_1 ≥ ρ_1 ≥ λ_2 ≥ ρ_2 ≥ … ≥ λ_{l+1} ≥ 0
    let l = rho.len();
    let mut out = Vec::new();
    let mut cur = vec![0usize; l + 1];
    fn rec(i: usize, rest: usize, rho: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let l = rho.len();
        if i == l + 1 {
            if rest == 0 {
                out.push(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        let lo = rho.part(i);
        if i == 0 {
            // the first row is unbounded above
            for first in 0..=rest {
                cur[0] = lo + first;
                rec(1, rest - first, rho, cur, out);
            }
            return;
        }
        let hi = rho.part(i - 1);
        for add in 0..=(hi - lo).min(rest) {
            cur[i] = lo + add;
            rec(i + 1, rest - add, rho, cur, out);
        }
    }
    rec(0, n, rho, &mut cur, &mut out);
    out.sort();
    out
}

/// All `λ` with `λ/ρ` a vertical `n`-strip, sorted.
pub fn vertical_strips(rho: &Partition, n: usize) -> Vec<Partition> {
    // choose n distinct rows among the first l(ρ)+n to receive one box
    let rows = rho.len() + n;
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..rows).map(|i| rho.part(i)).collect();
    fn rec(i: usize, rest: usize, rho: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        if i == cur.len() {
            return;
        }
        // row i may grow only if the row above is strictly longer afterwards-or-equal
        if i == 0 || cur[i - 1] > rho.part(i) {
            cur[i] += 1;
            rec(i + 1, rest - 1, rho, cur, out);
            cur[i] -= 1;
        }
        rec(i + 1, rest, rho, cur, out);
    }
    rec(0, n, rho, &mut cur, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn signed(sign: i8, p: Partition) -> StraightenResult {
        StraightenResult::Signed { sign, partition: p }
    }

    #[test]
    fn straighten_examples() {
        assert_eq!(straighten(&[1, 4, 1]), signed(-1, part![3, 2, 1]));
        assert_eq!(straighten(&[1, 2, 2]), StraightenResult::Zero);
        assert_eq!(straighten(&[-1, 1]), signed(-1, part![]));
        assert_eq!(straighten(&[]), signed(1, part![]));
        assert_eq!(straighten(&[0, 0, 0]), signed(1, part![]));
        assert_eq!(straighten(&[-2]), StraightenResult::Zero);
        assert_eq!(straighten(&[1, 2]), StraightenResult::Zero);
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&part![3, 2, 1]), part![3, 2, 1]);
        assert_eq!(conjugate(&part![4, 1]), part![2, 1, 1, 1]);
        assert_eq!(conjugate(&part![]), part![]);
        for p in Partition::up_to(10) {
            assert_eq!(p.conjugate().conjugate(), p);
            assert_eq!(p.conjugate().weight(), p.weight());
        }
    }

    #[test]
    fn strip_enumeration() {
        assert_eq!(
            horizontal_strips(&part![1, 1, 1], 2),
            vec![part![3, 1, 1], part![2, 1, 1, 1]]
        );
        assert_eq!(horizontal_strips(&part![1], 4), vec![part![5], part![4, 1]]);
        assert_eq!(horizontal_strips(&part![2, 1], 0), vec![part![2, 1]]);
        assert_eq!(
            vertical_strips(&part![1], 2),
            vec![part![2, 1], part![1, 1, 1]]
        );
        assert_eq!(vertical_strips(&part![2, 1], 0), vec![part![2, 1]]);
    }

    #[test]
    fn strip_predicates() {
        assert!(!is_horizontal_strip(&part![2, 2, 1], &part![1, 1, 1]));
        assert!(is_horizontal_strip(&part![3, 1, 1], &part![1, 1, 1]));
        let rho = part![2, 1];
        assert!(is_horizontal_strip(&rho, &rho) && is_vertical_strip(&rho, &rho));
        assert!(!is_horizontal_strip(&part![1], &part![2]));
    }

    #[test]
    fn strips_match_exhaustive_predicates() {
        for rho in Partition::up_to(5) {
            for n in 0..=4 {
                let w = rho.weight() + n;
                let h: Vec<_> = Partition::all(w)
                    .into_iter()
                    .filter(|l| is_horizontal_strip(l, &rho))
                    .collect();
                let v: Vec<_> = Partition::all(w)
                    .into_iter()
                    .filter(|l| is_vertical_strip(l, &rho))
                    .collect();
                let mut hs = horizontal_strips(&rho, n);
                let mut vs = vertical_strips(&rho, n);
                hs.sort();
                vs.sort();
                let mut h = h;
                let mut v = v;
                h.sort();
                v.sort();
                assert_eq!(hs, h, "horizontal {rho:?} {n}");
                assert_eq!(vs, v, "vertical {rho:?} {n}");
                let mut via_conj: Vec<_> = horizontal_strips(&rho.conjugate(), n)
                    .iter()
                    .map(Partition::conjugate)
                    .collect();
                via_conj.sort();
                assert_eq!(vs, via_conj);
            }
        }
    }

    #[test]
    fn z_lambda_values() {
        assert_eq!(z_lambda(&part![2, 2, 1]), BigInt::from(8));
        assert_eq!(z_lambda(&part![3, 1, 1]), BigInt::from(6));
        assert_eq!(z_lambda(&Partition::column(5)), BigInt::from(120));
        assert_eq!(z_lambda(&part![]), BigInt::from(1));
    }

    #[test]
    fn ordering_and_text() {
        let all = Partition::all(3);
        assert_eq!(all, vec![part![3], part![2, 1], part![1, 1, 1]]);
        assert!(part![5] < part![1, 1, 1, 1, 1, 1]);
        assert_eq!("3,2,1".parse::<Partition>().unwrap(), part![3, 2, 1]);
        assert_eq!("".parse::<Partition>().unwrap(), part![]);
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(part![3, 2, 1].to_string(), "3,2,1");
        assert_eq!(
            straighten(&[1, 4, 1]).to_json().to_string(),
            r#"{"sign":-1,"partition":[3,2,1]}"#
        );
    }

    #[test]
    fn in_box_counts() {
        // binomial(rows + cols, rows)
        assert_eq!(Partition::in_box(2, 3).len(), 10);
        assert_eq!(Partition::in_box(3, 0).len(), 1);
    }

    #[test]
    fn straighten_permutation_orbits() {
        // σ(λ+δ)-δ straightens back to λ with sign (-1)^{ℓ(σ)}
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        for l in 1..=4usize {
            for lambda in Partition::up_to(6).into_iter().filter(|p| p.len() <= l) {
                let u: Vec<i64> = (0..l)
                    .map(|k| lambda.part(k) as i64 + (l - 1 - k) as i64)
                    .collect();
                for sigma in perms(l) {
                    let inv = (0..l)
                        .flat_map(|a| (a + 1..l).map(move |b| (a, b)))
                        .filter(|&(a, b)| sigma[a] > sigma[b])
                        .count();
                    let t: Vec<i64> = (0..l).map(|k| u[sigma[k]] - (l - 1 - k) as i64).collect();
                    let sign = if inv % 2 == 0 { 1 } else { -1 };
                    assert_eq!(straighten(&t), signed(sign, lambda.clone()));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn padding_with_zeros_is_identity(
            parts in prop::collection::vec(1usize..6, 0..5),
            zeros in 0usize..4,
        ) {
            let mut parts = parts;
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let lambda = Partition::new(parts).unwrap();
            let mut t = lambda.to_tuple();
            t.extend(std::iter::repeat_n(0, zeros));
            prop_assert_eq!(straighten(&t), signed(1, lambda));
        }

        #[test]
        fn adjacent_exchange_is_antisymmetric(
            t in prop::collection::vec(-4i64..7, 2..6),
            pos in 0usize..5,
        ) {
            prop_assume!(pos + 1 < t.len());
            let mut swapped = t.clone();
            swapped[pos] = t[pos + 1] - 1;
            swapped[pos + 1] = t[pos] + 1;
            prop_assert_eq!(straighten(&t), straighten(&swapped).negate());
        }

        #[test]
        fn straightening_preserves_weight(t in prop::collection::vec(-4i64..7, 0..6)) {
            if let StraightenResult::Signed { partition, .. } = straighten(&t) {
                prop_assert_eq!(partition.weight() as i64, t.iter().sum::<i64>());
            }
        }
    }
}
