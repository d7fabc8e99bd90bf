//! Generalized Gregory coefficients `G_{m,n}`, the coefficients of
//! `(y log^2(1+x) - x log^2(1+y)) / (log(1+x) - log(1+y))`, and the
//! combinatorics expressing reverse values through them.

use std::sync::RwLock;

use num_traits::Zero;

use super::{asym_coeff, c_ir, DirectionVector, ShiftVector};
use crate::error::{out_of_range, Result};
use crate::exact::{Rational, Series, Var};
use crate::values::{for_each_k, mzf_rev, stirling_weight, IndexTuple};

static TABLE: RwLock<Option<Series>> = RwLock::new(None);

fn build(order: u32) -> Series {
    let lx = Series::log_one_plus(Var::X, order);
    let ly = Series::log_one_plus(Var::Y, order);
    let x = Series::var(order, Var::X);
    let y = Series::var(order, Var::Y);
    let num = y
        .mul(&lx.mul(&lx).unwrap())
        .unwrap()
        .sub(&x.mul(&ly.mul(&ly).unwrap()).unwrap())
        .unwrap();
    let den = lx.sub(&ly).unwrap();
    let num = Series::div_xy_difference(&num).expect("numerator vanishes on y = x");
    let den = Series::div_xy_difference(&den).expect("denominator vanishes on y = x");
    Series::div_unit(&num, &den).expect("reduced denominator starts with 1")
}

/// The truncated generating function, valid through total degree `order`.
pub fn gregory_table(order: u32) -> Series {
    if let Some(s) = TABLE.read().unwrap().as_ref() {
        if s.order() >= order {
            return s.truncate(order);
        }
    }
    // Two spare degrees: each division by (x - y) costs one.
    let s = build(order + 2);
    let out = s.truncate(order);
    let mut guard = TABLE.write().unwrap();
    if guard.as_ref().is_none_or(|t| t.order() < s.order()) {
        *guard = Some(s);
    }
    out
}

/// `G_{m,n}`, the coefficient of `x^m y^n`.
pub fn gregory(m: u32, n: u32) -> Rational {
    if let Some(s) = TABLE.read().unwrap().as_ref() {
        if s.order() >= m + n {
            return s.coeff(m, n);
        }
    }
    gregory_table(m + n).coeff(m, n)
}

/// Checks `C_{i,r}(0; 1) = G_{i, r-i+2}` for every `1 <= i <= r`.
pub fn gregory_origin_check(r: usize) -> Result<bool> {
    if r == 0 {
        return out_of_range("r must be >= 1");
    }
    let z = IndexTuple::zeros(r);
    let one = ShiftVector::ones(r);
    for i in 1..=r {
        if c_ir(i, &z, &one)? != gregory(i as u32, (r - i + 2) as u32) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A pair of compositions `(m, n)` with `j + 1` parts each.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CompositionPair {
    pub m: Vec<u32>,
    pub n: Vec<u32>,
}

impl CompositionPair {
    /// `prod_p G_{m_p, n_p - m_p + 2}`.
    pub fn gregory_product(&self) -> Rational {
        self.m
            .iter()
            .zip(&self.n)
            .map(|(&m, &n)| gregory(m, n - m + 2))
            .product()
    }
}

fn check_jk(j: usize, k: usize, r: usize) -> Result<()> {
    if r == 0 {
        return out_of_range("r must be >= 1");
    }
    if 2 * j > r - 1 || k + 2 * j > r - 1 {
        return out_of_range(format!(
            "need 0 <= j <= (r-1)/2 and 0 <= k <= r-1-2j, got j = {j}, k = {k}, r = {r}"
        ));
    }
    Ok(())
}

fn compositions(total: u32, parts: usize, min_first: u32, min_rest: u32) -> Vec<Vec<u32>> {
    fn go(
        left: u32,
        parts: usize,
        lo: &dyn Fn(usize) -> u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        let idx = cur.len();
        if idx + 1 == parts {
            if left >= lo(idx) {
                cur.push(left);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        let reserve: u32 = (idx + 1..parts).map(lo).sum();
        if left < reserve {
            return;
        }
        for x in lo(idx)..=left - reserve {
            cur.push(x);
            go(left - x, parts, lo, cur, out);
            cur.pop();
        }
    }
    let lo = move |p: usize| if p == 0 { min_first } else { min_rest };
    let mut out = Vec::new();
    go(total, parts, &lo, &mut Vec::new(), &mut out);
    out
}

/// `J(j, k)` at depth `r`: pairs of compositions with `sum m = 2j+1+k`,
/// `sum n = r`, `m_p <= n_p`, `m_1 >= 1` and `m_p >= 2` for `p >= 2`.
pub fn enumerate_j(j: usize, k: usize, r: usize) -> Result<Vec<CompositionPair>> {
    check_jk(j, k, r)?;
    let ms = compositions((2 * j + 1 + k) as u32, j + 1, 1, 2);
    let ns = compositions(r as u32, j + 1, 1, 1);
    let mut out = Vec::new();
    for m in &ms {
        for n in &ns {
            if m.iter().zip(n).all(|(a, b)| a <= b) {
                out.push(CompositionPair {
                    m: m.clone(),
                    n: n.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// The two statistics classifying a direction vector: the number of
/// `(0, 1)` adjacencies, and the number of ones not preceded by a zero
/// (a leading one counts).
pub fn i_statistics(d: &DirectionVector) -> (usize, usize) {
    let b = d.bits();
    let j = b.windows(2).filter(|w| !w[0] && w[1]).count();
    let k = (0..b.len())
        .filter(|&m| b[m] && (m == 0 || b[m - 1]))
        .count();
    (j, k)
}

/// `I_r(j, k)`: direction vectors of length `r - 1` with statistics `(j, k)`.
pub fn enumerate_i(j: usize, k: usize, r: usize) -> Result<Vec<DirectionVector>> {
    check_jk(j, k, r)?;
    Ok(DirectionVector::all(r - 1)
        .into_iter()
        .filter(|d| i_statistics(d) == (j, k))
        .collect())
}

fn admissible_jk(r: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=(r - 1) / 2).flat_map(move |j| (0..r - 2 * j).map(move |k| (j, k)))
}

/// Checks that the sets `I_r(j, k)` are disjoint and cover `{0,1}^(r-1)`.
pub fn i_partition_check(r: usize) -> Result<bool> {
    if r == 0 {
        return out_of_range("r must be >= 1");
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut count = 0usize;
    for (j, k) in admissible_jk(r) {
        for d in enumerate_i(j, k, r)? {
            count += 1;
            seen.insert(d);
        }
    }
    Ok(count == seen.len() && count == 1usize << (r - 1))
}

fn origin_coeff(d: &DirectionVector) -> Rational {
    let r = d.len() + 1;
    asym_coeff(&IndexTuple::zeros(r), d, &ShiftVector::ones(r)).expect("lengths agree")
}

/// Checks that at the origin, a `(0, 1)` pair at positions `(k, k+1)` splits
/// `C^(d)` into `C^(d_1..d_{k-1}) * C^(1, d_{k+2}..)`, over all such
/// placements in depth `r`.
pub fn decomposition_check(r: usize) -> bool {
    if r < 3 {
        return true;
    }
    for d in DirectionVector::all(r - 1) {
        let b = d.bits();
        for k in 1..r - 1 {
            if b[k - 1] || !b[k] {
                continue;
            }
            let left = DirectionVector::new(b[..k - 1].to_vec());
            let mut right = vec![true];
            right.extend_from_slice(&b[k + 1..]);
            let rhs = origin_coeff(&left) * origin_coeff(&DirectionVector::new(right));
            if origin_coeff(&d) != rhs {
                return false;
            }
        }
    }
    true
}

/// Checks `sum_{d in I_r(j,k)} C^(d)(0) = sum_{(m,n) in J(j,k)} prod_p G_{m_p, n_p-m_p+2}`
/// for every admissible `(j, k)`.
pub fn bundling_check(r: usize) -> Result<bool> {
    for (j, k) in admissible_jk(r) {
        let lhs: Rational = enumerate_i(j, k, r)?.iter().map(origin_coeff).sum();
        let rhs: Rational = enumerate_j(j, k, r)?
            .iter()
            .map(CompositionPair::gregory_product)
            .sum();
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `sum_{j,k} sum_{(m,n) in J(j,k)} prod_p G_{m_p, n_p-m_p+2}` at depth `r`,
/// which equals the reverse value at the origin of depth `r`.
pub fn gregory_origin_sum(r: usize) -> Rational {
    assert!(r >= 1, "depth must be positive");
    let mut total = Rational::zero();
    for (j, k) in admissible_jk(r) {
        for pair in enumerate_j(j, k, r).expect("admissible") {
            total += pair.gregory_product();
        }
    }
    total
}

/// Checks `zeta_r^rev(0, ..., 0)` against [`gregory_origin_sum`].
pub fn origin_identity_check(r: usize) -> bool {
    mzf_rev(&IndexTuple::zeros(r)) == gregory_origin_sum(r)
}

/// Reverse value at any point, assembled from Gregory coefficients: the
/// Stirling weights of the closed form times Gregory sums at depth `r + K_r`.
pub fn rev_via_gregory(l: &IndexTuple) -> Rational {
    let r = l.depth();
    let mut total = Rational::zero();
    for_each_k(l.entries(), &stirling_weight, &mut |k, c| {
        total += c * gregory_origin_sum(r + k.iter().sum::<u32>() as usize);
    });
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn coefficients() {
        assert_eq!(gregory(1, 1), int(1));
        assert_eq!(gregory(1, 2), rat(-1, 2));
        assert_eq!(gregory(2, 2), rat(1, 12));
        assert_eq!(gregory(1, 3), rat(1, 3));
        assert_eq!(gregory(0, 5), int(0));
    }

    #[test]
    fn table_grows() {
        let small = gregory_table(3);
        assert_eq!(small.order(), 3);
        let big = gregory_table(9);
        assert_eq!(big.truncate(3), small);
    }

    #[test]
    fn origin_theorem() {
        for r in 1..=4 {
            assert!(gregory_origin_check(r).unwrap());
        }
        assert!(gregory_origin_check(0).is_err());
    }

    #[test]
    fn j_sets() {
        let one = |m: &[u32], n: &[u32]| CompositionPair {
            m: m.to_vec(),
            n: n.to_vec(),
        };
        assert_eq!(enumerate_j(0, 0, 1).unwrap(), vec![one(&[1], &[1])]);
        assert_eq!(enumerate_j(0, 1, 2).unwrap(), vec![one(&[2], &[2])]);
        assert_eq!(enumerate_j(0, 0, 2).unwrap(), vec![one(&[1], &[2])]);
        assert!(enumerate_j(1, 0, 2).is_err());
        assert!(enumerate_j(0, 2, 2).is_err());
    }

    #[test]
    fn i_sets() {
        let d = |s: &str| s.parse::<DirectionVector>().unwrap();
        assert_eq!(enumerate_i(0, 0, 2).unwrap(), vec![d("0")]);
        assert_eq!(enumerate_i(0, 1, 2).unwrap(), vec![d("1")]);
        assert_eq!(enumerate_i(0, 0, 1).unwrap(), vec![d("")]);
        assert_eq!(enumerate_i(0, 0, 3).unwrap(), vec![d("0,0")]);
        assert_eq!(enumerate_i(0, 1, 3).unwrap(), vec![d("1,0")]);
        assert_eq!(enumerate_i(0, 2, 3).unwrap(), vec![d("1,1")]);
        assert_eq!(enumerate_i(1, 0, 3).unwrap(), vec![d("0,1")]);
    }

    #[test]
    fn lemmas_small_depth() {
        for r in 1..=4 {
            assert!(i_partition_check(r).unwrap());
            assert!(decomposition_check(r));
            assert!(bundling_check(r).unwrap());
            assert!(origin_identity_check(r));
        }
        assert_eq!(gregory_origin_sum(3), rat(-3, 8));
    }

    #[test]
    fn reverse_values() {
        let t = |v: &[u32]| IndexTuple::new(v.to_vec()).unwrap();
        assert_eq!(rev_via_gregory(&t(&[0])), rat(-1, 2));
        assert_eq!(rev_via_gregory(&t(&[0, 0])), rat(5, 12));
        assert_eq!(rev_via_gregory(&t(&[1, 1])), rat(1, 240));
    }
}
