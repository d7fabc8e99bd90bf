//! Regular and reverse values of multiple zeta functions and multiple zeta
//! star functions at non-positive integer points.
//!
//! A point is written through its index tuple `l`, so the value is taken at
//! `(-l_1, ..., -l_r)`. Regular values let the last variable reach its limit
//! first; reverse values start with the first variable.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num_traits::{One, Zero};

use crate::bernoulli::{zeta_neg, zeta_star_neg};
use crate::error::{out_of_range, Error, Result};
use crate::exact::{big, binomial, factorial, int, sign_pow, Rational};
use crate::stirling::{stirling_first, stirling_first_at, stirling_second_at};

/// Non-empty tuple of non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple(Vec<u32>);

impl IndexTuple {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return out_of_range("index tuple must have depth >= 1");
        }
        Ok(IndexTuple(entries))
    }

    /// The all-zero tuple of depth `r` (`r >= 1`).
    pub fn zeros(r: usize) -> Self {
        assert!(r >= 1, "depth must be positive");
        IndexTuple(vec![0; r])
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    /// `|l| = l_1 + ... + l_r`.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `L_0, L_1, ..., L_r`.
    pub fn partial_sums(&self) -> Vec<u32> {
        let mut out = vec![0];
        for &x in &self.0 {
            out.push(out.last().unwrap() + x);
        }
        out
    }

    /// Every tuple of depth `1..=max_depth` and weight `<= max_weight`, in
    /// depth-then-lexicographic order.
    pub fn all_up_to(max_depth: usize, max_weight: u32) -> Vec<IndexTuple> {
        let mut out = Vec::new();
        for r in 1..=max_depth {
            let mut cur = Vec::with_capacity(r);
            fill(r, max_weight, &mut cur, &mut out);
        }
        out
    }
}

fn fill(r: usize, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<IndexTuple>) {
    if cur.len() == r {
        out.push(IndexTuple(cur.clone()));
        return;
    }
    for x in 0..=budget {
        cur.push(x);
        fill(r, budget - x, cur, out);
        cur.pop();
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for IndexTuple {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = t
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse {
                what: "index tuple",
                input: s.to_string(),
            })?;
        IndexTuple::new(entries)
    }
}

impl TryFrom<&[u32]> for IndexTuple {
    type Error = Error;
    fn try_from(v: &[u32]) -> Result<Self> {
        IndexTuple::new(v.to_vec())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ValueKind {
    MzfRegular,
    MzfReverse,
    MzsfRegular,
    MzsfReverse,
}

impl ValueKind {
    pub const ALL: [ValueKind; 4] = [
        ValueKind::MzfRegular,
        ValueKind::MzfReverse,
        ValueKind::MzsfRegular,
        ValueKind::MzsfReverse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ValueKind::MzfRegular => "mzf-reg",
            ValueKind::MzfReverse => "mzf-rev",
            ValueKind::MzsfRegular => "mzsf-reg",
            ValueKind::MzsfReverse => "mzsf-rev",
        }
    }

    pub fn is_star(self) -> bool {
        matches!(self, ValueKind::MzsfRegular | ValueKind::MzsfReverse)
    }

    pub fn is_reverse(self) -> bool {
        matches!(self, ValueKind::MzfReverse | ValueKind::MzsfReverse)
    }
}

impl fmt::Display for ValueKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ValueKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ValueKind::ALL
            .into_iter()
            .find(|k| k.name() == s.trim())
            .ok_or_else(|| Error::Parse {
                what: "value kind",
                input: s.to_string(),
            })
    }
}

type Memo = HashMap<(ValueKind, Vec<u32>), Rational>;
static MEMO: RwLock<Option<Memo>> = RwLock::new(None);

fn memo_get(kind: ValueKind, l: &[u32]) -> Option<Rational> {
    MEMO.read()
        .unwrap()
        .as_ref()
        .and_then(|m| m.get(&(kind, l.to_vec())).cloned())
}

fn memo_put(kind: ValueKind, l: &[u32], v: Rational) {
    MEMO.write()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert((kind, l.to_vec()), v);
}

/// Copy of every memoized value, sorted by kind and tuple.
pub fn memo_snapshot() -> Vec<(ValueKind, IndexTuple, Rational)> {
    let guard = MEMO.read().unwrap();
    let mut out: Vec<_> = guard
        .iter()
        .flat_map(|m| m.iter())
        .map(|((k, l), v)| (*k, IndexTuple(l.clone()), v.clone()))
        .collect();
    out.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    out
}

/// Seeds the memo with a known value, e.g. from a persisted cache.
pub fn memo_seed(kind: ValueKind, l: &IndexTuple, v: Rational) {
    memo_put(kind, l.entries(), v);
}

pub fn value(kind: ValueKind, l: &IndexTuple) -> Rational {
    eval(kind, l.entries())
}

fn eval(kind: ValueKind, l: &[u32]) -> Rational {
    if l.len() == 1 {
        return zeta_neg(l[0]);
    }
    if let Some(v) = memo_get(kind, l) {
        return v;
    }
    let v = match kind {
        ValueKind::MzfRegular => regular_step(kind, l, zeta_neg),
        ValueKind::MzsfRegular => regular_step(kind, l, zeta_star_neg),
        ValueKind::MzfReverse => reverse_step(kind, l, zeta_neg, -Rational::one()),
        ValueKind::MzsfReverse => reverse_step(kind, l, zeta_star_neg, Rational::one()),
    };
    memo_put(kind, l, v.clone());
    v
}

// Eliminates the last variable:
// -1/(l_r+1) f(.., l_{r-1}+l_r+1) + sum_k C(l_r,k) f(.., l_{r-1}+l_r-k) w(k)
fn regular_step(kind: ValueKind, l: &[u32], w: fn(u32) -> Rational) -> Rational {
    let r = l.len();
    let (lp, lr) = (l[r - 2], l[r - 1]);
    let mut t = l[..r - 1].to_vec();
    t[r - 2] = lp + lr + 1;
    let mut v = -eval(kind, &t) / int(lr as i64 + 1);
    for k in 0..=lr {
        let wk = w(k);
        if wk.is_zero() {
            continue;
        }
        t[r - 2] = lp + lr - k;
        v += big(&binomial(lr, k)) * eval(kind, &t) * wk;
    }
    v
}

// Eliminates the first variable:
// 1/(l_1+1) f(l_1+l_2+1, ..) - sum_k C(l_1,k) f(l_1+l_2-k, ..) w(k)
//   + zeta(-l_1) f(l_2, ..) + sign * f(l_1+l_2, ..)
fn reverse_step(kind: ValueKind, l: &[u32], w: fn(u32) -> Rational, sign: Rational) -> Rational {
    let (l1, l2) = (l[0], l[1]);
    let mut t = l[1..].to_vec();
    t[0] = l1 + l2 + 1;
    let mut v = eval(kind, &t) / int(l1 as i64 + 1);
    for k in 0..=l1 {
        let wk = w(k);
        if wk.is_zero() {
            continue;
        }
        t[0] = l1 + l2 - k;
        v -= big(&binomial(l1, k)) * eval(kind, &t) * wk;
    }
    let z = zeta_neg(l1);
    if !z.is_zero() {
        v += z * eval(kind, &l[1..]);
    }
    t[0] = l1 + l2;
    v += sign * eval(kind, &t);
    v
}

pub fn mzf_reg(l: &IndexTuple) -> Rational {
    value(ValueKind::MzfRegular, l)
}

pub fn mzf_rev(l: &IndexTuple) -> Rational {
    value(ValueKind::MzfReverse, l)
}

pub fn mzsf_reg(l: &IndexTuple) -> Rational {
    value(ValueKind::MzsfRegular, l)
}

pub fn mzsf_rev(l: &IndexTuple) -> Rational {
    value(ValueKind::MzsfReverse, l)
}

/// Visits every `k` with `0 <= k_j <= l_j`, passing `k` and the weight built
/// by `factor(j, l_j, k_j, K_{j-1})` multiplied over `j = 1..=r`.
pub(crate) fn for_each_k(
    l: &[u32],
    factor: &dyn Fn(usize, u32, u32, u32) -> Rational,
    visit: &mut dyn FnMut(&[u32], Rational),
) {
    fn go(
        l: &[u32],
        factor: &dyn Fn(usize, u32, u32, u32) -> Rational,
        visit: &mut dyn FnMut(&[u32], Rational),
        k: &mut Vec<u32>,
        ksum: u32,
        acc: Rational,
    ) {
        let j = k.len();
        if j == l.len() {
            visit(k, acc);
            return;
        }
        for kj in 0..=l[j] {
            let f = factor(j + 1, l[j], kj, ksum);
            if f.is_zero() {
                continue;
            }
            k.push(kj);
            go(l, factor, visit, k, ksum + kj, &acc * f);
            k.pop();
        }
    }
    go(l, factor, visit, &mut Vec::new(), 0, Rational::one());
}

/// `(K_j + j - 1)! / (K_{j-1} + j - 1)!`.
fn factorial_ratio(j: usize, kj: u32, kprev: u32) -> Rational {
    let lo = kprev + j as u32 - 1;
    let hi = lo + kj;
    Rational::from_integer((lo + 1..=hi).fold(One::one(), |a: num_bigint::BigInt, x| a * x))
}

/// Stirling weight `c(k, l)` tying an arbitrary point to origin values at
/// depth `r + K_r`.
pub fn stirling_weight(j: usize, lj: u32, kj: u32, kprev: u32) -> Rational {
    stirling_second_at(lj, kj, (kprev + j as u32) as i64) * factorial_ratio(j, kj, kprev)
}

fn star_weight(j: usize, lj: u32, kj: u32, kprev: u32) -> Rational {
    sign_pow((lj - kj) as i64)
        * stirling_second_at(lj, kj, (kprev + j as u32 - 1) as i64)
        * factorial_ratio(j, kj, kprev)
}

fn closed_form(
    l: &IndexTuple,
    kind: ValueKind,
    weight: fn(usize, u32, u32, u32) -> Rational,
) -> Rational {
    let r = l.depth();
    let mut total = Rational::zero();
    for_each_k(l.entries(), &weight, &mut |k, c| {
        let d = r + k.iter().sum::<u32>() as usize;
        total += c * value(kind, &IndexTuple::zeros(d));
    });
    total
}

/// Reverse value through the Stirling-polynomial closed form: a weighted sum
/// of origin values `zeta^rev_{r+K_r}(0, ..., 0)`.
pub fn mzf_rev_stirling(l: &IndexTuple) -> Rational {
    closed_form(l, ValueKind::MzfReverse, stirling_weight)
}

/// Star analogue of [`mzf_rev_stirling`].
pub fn mzsf_rev_stirling(l: &IndexTuple) -> Rational {
    closed_form(l, ValueKind::MzsfReverse, star_weight)
}

/// `zeta_r^reg(-l, 0, ..., 0) = -(1/r!) sum_k (-1)^k k s(r,k) zeta(-l-k+1)`.
pub fn akiyama_tanigawa_reg(r: u32, l: u32) -> Result<Rational> {
    if r == 0 {
        return out_of_range("depth r must be >= 1");
    }
    let mut acc = Rational::zero();
    for k in 1..=r {
        acc +=
            sign_pow(k as i64) * int(k as i64) * big(&stirling_first(r, k)) * zeta_neg(l + k - 1);
    }
    Ok(-acc / big(&factorial(r)))
}

/// `zeta_r^rev(0, ..., 0, -l) = (1/(r-1)!) sum_k s(r,k) zeta(-l-k+1)`.
pub fn akiyama_tanigawa_rev(r: u32, l: u32) -> Result<Rational> {
    if r == 0 {
        return out_of_range("depth r must be >= 1");
    }
    let mut acc = Rational::zero();
    for k in 1..=r {
        acc += big(&stirling_first(r, k)) * zeta_neg(l + k - 1);
    }
    Ok(acc / big(&factorial(r - 1)))
}

/// Checks `zeta^reg(-l) = (-1)^{r+|l|} zeta*^reg(-l)` (or the reverse pair).
/// Requires `l_1 >= 1`; the identity genuinely fails for `(0, odd)`.
pub fn sign_theorem_check(l: &IndexTuple, reverse: bool) -> Result<bool> {
    if l.entries()[0] == 0 {
        return out_of_range("sign theorem needs l_1 >= 1");
    }
    let sign = sign_pow((l.depth() as u32 + l.weight()) as i64);
    Ok(if reverse {
        mzf_rev(l) == sign * mzsf_rev(l)
    } else {
        mzf_reg(l) == sign * mzsf_reg(l)
    })
}

/// Checks the zero-padding identity
/// `sum_k prod_j s(l_j,k_j,L_{j-1}+j) zeta^rev(-k_1,..,-k_{r-1},-k_r+s)
///   = prod_j (L_j+j-1)!/(L_{j-1}+j-1)! zeta^rev_{r+L_r}(0,..,0,s)`
/// at a non-positive integer `s`.
pub fn prop_zero_padding_check(l: &IndexTuple, s: i64) -> Result<bool> {
    if s > 0 {
        return out_of_range(format!("s must be a non-positive integer, got {s}"));
    }
    let shift = (-s) as u32;
    let ls = l.partial_sums();
    let mut lhs = Rational::zero();
    let factor = |j: usize, lj: u32, kj: u32, _k: u32| {
        stirling_first_at(lj, kj, (ls[j - 1] + j as u32) as i64)
    };
    for_each_k(l.entries(), &factor, &mut |k, c| {
        let mut t = k.to_vec();
        *t.last_mut().unwrap() += shift;
        lhs += c * value(ValueKind::MzfReverse, &IndexTuple(t));
    });
    let r = l.depth();
    let total = ls[r];
    let mut ratio = Rational::one();
    for j in 1..=r {
        ratio *= Rational::new(
            factorial(ls[j] + j as u32 - 1),
            factorial(ls[j - 1] + j as u32 - 1),
        );
    }
    let mut t = vec![0; r + total as usize];
    *t.last_mut().unwrap() = shift;
    Ok(lhs == ratio * value(ValueKind::MzfReverse, &IndexTuple(t)))
}
