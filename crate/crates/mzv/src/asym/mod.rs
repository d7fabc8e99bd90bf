//! Asymptotic coefficients `C^(d)(-l; a)` of Hurwitz-type multiple zeta
//! functions near non-positive integer points, the staircase coefficients
//! `C_{i,r}`, and the identities relating them.

mod gregory;

pub use gregory::{
    bundling_check, decomposition_check, enumerate_i, enumerate_j, gregory, gregory_origin_check,
    gregory_origin_sum, gregory_table, i_partition_check, origin_identity_check, rev_via_gregory,
    CompositionPair,
};

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::bernoulli::bernoulli_eval;
use crate::error::{out_of_range, Error, Result};
use crate::exact::{big, binomial, factorial, falling, int, parse_rational, sign_pow, Rational};
use crate::values::IndexTuple;

/// Element of `{0,1}^(r-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectionVector(Vec<bool>);

impl DirectionVector {
    pub fn new(bits: Vec<bool>) -> Self {
        DirectionVector(bits)
    }

    pub fn zeros(len: usize) -> Self {
        DirectionVector(vec![false; len])
    }

    /// `(1, ..., 1, 0, ..., 0)` of length `r - 1` with `i - 1` ones.
    pub fn staircase(i: usize, r: usize) -> Self {
        DirectionVector((1..r).map(|j| j < i).collect())
    }

    /// All `2^len` vectors, in binary counting order.
    pub fn all(len: usize) -> Vec<DirectionVector> {
        (0..1u64 << len)
            .map(|m| DirectionVector((0..len).map(|b| m >> (len - 1 - b) & 1 == 1).collect()))
            .collect()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for DirectionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self.0.iter().map(|&b| if b { "1" } else { "0" }).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for DirectionVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if t.is_empty() {
            return Ok(DirectionVector(Vec::new()));
        }
        t.split(',')
            .map(|p| match p.trim() {
                "0" => Ok(false),
                "1" => Ok(true),
                _ => Err(Error::Parse {
                    what: "direction vector",
                    input: s.to_string(),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(DirectionVector)
    }
}

/// Hurwitz shifts `(a_1, ..., a_r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShiftVector(Vec<Rational>);

impl ShiftVector {
    /// Requires every partial sum `a_1 + ... + a_j` to be positive.
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        let mut s = Rational::zero();
        for (j, a) in entries.iter().enumerate() {
            s += a;
            if !s.is_positive() {
                return out_of_range(format!("shift partial sum {} is not positive", j + 1));
            }
        }
        Ok(ShiftVector(entries))
    }

    /// Only requires partial sums to be non-negative. Used for unit vectors
    /// `e_p` and reflected shifts `1 - a`.
    pub fn relaxed(entries: Vec<Rational>) -> Result<Self> {
        let mut s = Rational::zero();
        for a in &entries {
            s += a;
            if s.is_negative() {
                return out_of_range("shift partial sums must be non-negative");
            }
        }
        Ok(ShiftVector(entries))
    }

    /// `(1, ..., 1)`: the Euler-Zagier case.
    pub fn ones(r: usize) -> Self {
        ShiftVector(vec![Rational::one(); r])
    }

    /// `(1, 0, ..., 0)`: the star case.
    pub fn star(r: usize) -> Self {
        Self::unit(r, 1)
    }

    /// `e_p` (1-based).
    pub fn unit(r: usize, p: usize) -> Self {
        ShiftVector(
            (1..=r)
                .map(|q| {
                    if q == p {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect(),
        )
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `1 - a` componentwise.
    pub fn reflect(&self) -> Result<Self> {
        Self::relaxed(self.0.iter().map(|a| Rational::one() - a).collect())
    }
}

impl FromStr for ShiftVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let v = t
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        ShiftVector::new(v)
    }
}

impl fmt::Display for ShiftVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

fn check_lengths(l: &IndexTuple, d: &DirectionVector, a: &ShiftVector) -> Result<()> {
    let r = l.depth();
    if d.len() + 1 != r {
        return Err(Error::LengthMismatch {
            expected: r - 1,
            got: d.len(),
        });
    }
    if a.len() != r {
        return Err(Error::LengthMismatch {
            expected: r,
            got: a.len(),
        });
    }
    Ok(())
}

/// All `n` with `sum n = r + |l|` and, for each `j < r`, the tail condition
/// picked by `d_j`: `n_{j+1}+..+n_r <= r-j+l_{j+1}+..+l_r` when `d_j = 0`,
/// and `>= r-j+1+l_j+..+l_r` when `d_j = 1`.
pub fn admissible_n_set(l: &IndexTuple, d: &DirectionVector) -> Result<Vec<Vec<u32>>> {
    let r = l.depth();
    if d.len() + 1 != r {
        return Err(Error::LengthMismatch {
            expected: r - 1,
            got: d.len(),
        });
    }
    let le = l.entries();
    // ltail[j] = l_{j+1} + ... + l_r (0-based: sum of le[j..])
    let mut ltail = vec![0u32; r + 1];
    for j in (0..r).rev() {
        ltail[j] = ltail[j + 1] + le[j];
    }
    let total = r as u32 + ltail[0];
    let mut out = Vec::new();
    // Fill n from the back so that tails are known.
    #[allow(clippy::too_many_arguments)]
    fn go(
        j: usize,
        tail: u32,
        total: u32,
        r: usize,
        ltail: &[u32],
        d: &[bool],
        n: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        // n currently holds n_{j+1..r} reversed; tail is their sum.
        if j < r {
            // constraint for index j (1-based), i.e. on the tail n_{j+1..r}
            let jj = j as u32;
            let ok = if d[j - 1] {
                tail >= r as u32 - jj + 1 + ltail[j - 1]
            } else {
                tail <= r as u32 - jj + ltail[j]
            };
            if !ok {
                return;
            }
        }
        if j == 1 {
            let mut v = n.clone();
            v.push(total - tail);
            v.reverse();
            out.push(v);
            return;
        }
        for x in 0..=total - tail {
            n.push(x);
            go(j - 1, tail + x, total, r, ltail, d, n, out);
            n.pop();
        }
    }
    go(r, 0, total, r, &ltail, d.bits(), &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// `C^(d)(-l; a) = (-1)^{r+|l|} sum_{n in S^d(l)} prod_j B_{n_j}(a_j)/n_j! *
/// (sum_{k<=j}(l_k - n_k) + j - 1)_{l_j}`. Depth one is `-B_{l+1}(a)/(l+1)`.
pub fn asym_coeff(l: &IndexTuple, d: &DirectionVector, a: &ShiftVector) -> Result<Rational> {
    check_lengths(l, d, a)?;
    let le = l.entries();
    let r = le.len();
    if r == 1 {
        return Ok(-bernoulli_eval(le[0] + 1, &a.0[0]) / int(le[0] as i64 + 1));
    }
    let mut total = Rational::zero();
    for n in admissible_n_set(l, d)? {
        let mut p = Rational::one();
        let mut run: i64 = 0;
        for j in 0..r {
            run += le[j] as i64 - n[j] as i64;
            let f = falling(&int(run + j as i64), le[j]);
            if f.is_zero() {
                p = Rational::zero();
                break;
            }
            let b = bernoulli_eval(n[j], &a.0[j]);
            if b.is_zero() {
                p = Rational::zero();
                break;
            }
            p *= b * f / big(&factorial(n[j]));
        }
        total += p;
    }
    Ok(sign_pow((r as u32 + l.weight()) as i64) * total)
}

fn check_i(i: usize, l: &IndexTuple, a: &ShiftVector) -> Result<()> {
    let r = l.depth();
    if i == 0 || i > r {
        return out_of_range(format!("need 1 <= i <= r = {r}, got i = {i}"));
    }
    if a.len() != r {
        return Err(Error::LengthMismatch {
            expected: r,
            got: a.len(),
        });
    }
    Ok(())
}

/// `C_{i,r}(-l; a)`: the coefficient for the staircase direction with
/// `i - 1` leading ones.
pub fn c_ir(i: usize, l: &IndexTuple, a: &ShiftVector) -> Result<Rational> {
    check_i(i, l, a)?;
    asym_coeff(l, &DirectionVector::staircase(i, l.depth()), a)
}

fn depth_one(l: u32, a: &Rational) -> Rational {
    -bernoulli_eval(l + 1, a) / int(l as i64 + 1)
}

/// `C_{2,2}(-x, -m; a) = (-1)^x x! m! B_{x+m+2}(a_2) / (x+m+2)!`.
fn c22(x: u32, m: u32, a2: &Rational) -> Rational {
    sign_pow(x as i64)
        * Rational::new(factorial(x) * factorial(m), factorial(x + m + 2))
        * bernoulli_eval(x + m + 2, a2)
}

fn rec(i: usize, l: &[u32], a: &[Rational]) -> Rational {
    let r = l.len();
    if r == 1 {
        return depth_one(l[0], &a[0]);
    }
    if i < r {
        // peel off the last slot
        let lr = l[r - 1];
        let mut t = l[..r - 1].to_vec();
        let base = t[r - 2];
        let mut acc = Rational::zero();
        for k in 0..=lr + 1 {
            let b = bernoulli_eval(lr + 1 - k, &a[r - 1]);
            if b.is_zero() {
                continue;
            }
            t[r - 2] = base + k;
            acc += big(&binomial(lr + 1, k)) * rec(i, &t, &a[..r - 1]) * b;
        }
        return -acc / int(lr as i64 + 1);
    }
    if r == 2 {
        return c22(l[0], l[1], &a[1]);
    }
    // i == r >= 3: peel off the first slot
    let l1 = l[0];
    let mut t = l[1..].to_vec();
    let base = t[0];
    let refl = Rational::one() - &a[1];
    let mut acc = Rational::zero();
    for k in 0..=l1 + 1 {
        let b = bernoulli_eval(l1 + 1 - k, &refl);
        if b.is_zero() {
            continue;
        }
        t[0] = base + k;
        acc += big(&binomial(l1 + 1, k)) * rec(i - 1, &t, &a[1..]) * b;
    }
    acc / int(l1 as i64 + 1)
}

/// `C_{i,r}` through the depth-lowering recurrences: the last slot is peeled
/// off while `i < r`, the first slot once `i = r`.
pub fn c_ir_recurrence(i: usize, l: &IndexTuple, a: &ShiftVector) -> Result<Rational> {
    check_i(i, l, a)?;
    Ok(rec(i, l.entries(), a.entries()))
}

/// `C_{i,r}` by the fully unrolled formula, valid for `r >= 3` and
/// `1 <= i <= r - 1`.
pub fn c_ir_explicit(i: usize, l: &IndexTuple, a: &ShiftVector) -> Result<Rational> {
    check_i(i, l, a)?;
    let r = l.depth();
    if r < 3 || i >= r {
        return out_of_range(format!(
            "explicit formula covers r >= 3 and 1 <= i <= r-1, got i = {i}, r = {r}"
        ));
    }
    let le = l.entries();
    let av = a.entries();
    // k[0..=r+1], k[0] = k[r+1] = 0
    let mut k = vec![0u32; r + 2];
    let mut total = Rational::zero();
    right(r, i, le, av, &mut k, Rational::one(), &mut total);
    Ok(sign_pow((r - i) as i64) * total)
}

// P2: j = r down to i+1, k_j in 0..=k_{j+1}+l_j+1,
// factor C(m, k_j) B_{m-k_j}(a_j)/m with m = k_{j+1}+l_j+1.
fn right(
    j: usize,
    i: usize,
    l: &[u32],
    a: &[Rational],
    k: &mut [u32],
    acc: Rational,
    total: &mut Rational,
) {
    if j == i {
        left(1, i, l, a, k, acc, total);
        return;
    }
    let m = k[j + 1] + l[j - 1] + 1;
    for kj in 0..=m {
        let b = bernoulli_eval(m - kj, &a[j - 1]);
        if b.is_zero() {
            continue;
        }
        k[j] = kj;
        let f = big(&binomial(m, kj)) * b / int(m as i64);
        right(j - 1, i, l, a, k, &acc * f, total);
    }
    k[j] = 0;
}

// P1: j = 1 up to i-2, k_j in 0..=k_{j-1}+l_j+1,
// factor C(m, k_j) B_{m-k_j}(1-a_{j+1})/m with m = k_{j-1}+l_j+1.
fn left(
    j: usize,
    i: usize,
    l: &[u32],
    a: &[Rational],
    k: &mut [u32],
    acc: Rational,
    total: &mut Rational,
) {
    if j + 1 >= i {
        let mid = if i == 1 {
            depth_one(l[0] + k[2], &a[0])
        } else {
            let x = l[i - 2] + k[i - 2];
            c22(x, l[i - 1] + k[i + 1], &a[i - 1])
        };
        *total += acc * mid;
        return;
    }
    let m = k[j - 1] + l[j - 1] + 1;
    let refl = Rational::one() - &a[j];
    for kj in 0..=m {
        let b = bernoulli_eval(m - kj, &refl);
        if b.is_zero() {
            continue;
        }
        k[j] = kj;
        let f = big(&binomial(m, kj)) * b / int(m as i64);
        left(j + 1, i, l, a, k, &acc * f, total);
    }
    k[j] = 0;
}

/// Checks `C_{i,r}(-l; a) = (-1)^{r+|l|} C_{i,r}(-l; 1-a)` for shifts with
/// `0 <= a_j <= 1`.
pub fn parity_check(i: usize, l: &IndexTuple, a: &ShiftVector) -> Result<bool> {
    check_i(i, l, a)?;
    if a.0.iter().any(|x| x.is_negative() || x > &Rational::one()) {
        return out_of_range("parity check needs 0 <= a_j <= 1");
    }
    let b = a.reflect()?;
    let sign = sign_pow((l.depth() as u32 + l.weight()) as i64);
    Ok(c_ir(i, l, a)? == sign * c_ir(i, l, &b)?)
}

/// Checks the coefficient-level sign relation between the shift `e_p` and
/// the all-ones shift:
///
/// * `p = i` (with `l_i >= 1`) or `p = 1`:
///   `C_{i,r}(-l; e_p) = (-1)^{r+|l|} C_{i,r}(-l; 1)`;
/// * otherwise, with `l'` merging `l_{p-1} + l_p`:
///   `C_{i,r}(-l; e_p) - (-1)^{r+|l|} C_{i,r}(-l; 1) = (-1)^{r+|l|} C_{i',r-1}(-l'; 1)`,
///   where `i' = i - 1` for `p < i - 1` and `i' = i` for `p > i + 1`.
pub fn star_coeff_relation_check(i: usize, p: usize, l: &IndexTuple) -> Result<bool> {
    let r = l.depth();
    if i < 2 || i > r {
        return out_of_range(format!("need 2 <= i <= r = {r}, got i = {i}"));
    }
    if p == 0 || p > r {
        return out_of_range(format!("need 1 <= p <= r = {r}, got p = {p}"));
    }
    if p != 1 && (p + 1 == i || p == i + 1) {
        return out_of_range(format!("p = {p} is adjacent to i = {i}"));
    }
    let le = l.entries();
    if p == i && p != 1 && le[i - 1] == 0 {
        return out_of_range("p = i needs l_i >= 1");
    }
    let sign = sign_pow((r as u32 + l.weight()) as i64);
    let ones = ShiftVector::ones(r);
    let ep = ShiftVector::unit(r, p);
    let lhs = c_ir(i, l, &ep)? - &sign * c_ir(i, l, &ones)?;
    if p == 1 || p == i {
        return Ok(lhs.is_zero());
    }
    let mut merged = le.to_vec();
    let tail = merged.remove(p - 1);
    merged[p - 2] += tail;
    let ip = if p < i { i - 1 } else { i };
    let rhs = sign * c_ir(ip, &IndexTuple::new(merged)?, &ShiftVector::ones(r - 1))?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn t(v: &[u32]) -> IndexTuple {
        IndexTuple::new(v.to_vec()).unwrap()
    }
    fn dv(s: &str) -> DirectionVector {
        s.parse().unwrap()
    }

    #[test]
    fn admissible_sets() {
        assert_eq!(admissible_n_set(&t(&[0]), &dv("")).unwrap(), vec![vec![1]]);
        assert_eq!(
            admissible_n_set(&t(&[0, 0]), &dv("0")).unwrap(),
            vec![vec![1, 1], vec![2, 0]]
        );
        assert_eq!(
            admissible_n_set(&t(&[0, 0]), &dv("1")).unwrap(),
            vec![vec![0, 2]]
        );
        assert!(admissible_n_set(&t(&[0, 0]), &dv("1,0")).is_err());
    }

    #[test]
    fn example_coefficients() {
        let one2 = ShiftVector::ones(2);
        assert_eq!(
            asym_coeff(&t(&[0, 1]), &dv("0"), &one2).unwrap(),
            rat(1, 12)
        );
        assert_eq!(asym_coeff(&t(&[0, 1]), &dv("1"), &one2).unwrap(), int(0));
        assert_eq!(
            asym_coeff(&t(&[1, 1]), &dv("0"), &one2).unwrap(),
            rat(1, 360)
        );
        assert_eq!(
            asym_coeff(&t(&[1, 1]), &dv("1"), &one2).unwrap(),
            rat(1, 720)
        );
    }

    #[test]
    fn staircase_coefficients() {
        assert_eq!(
            c_ir(1, &t(&[1, 1]), &ShiftVector::ones(2)).unwrap(),
            rat(1, 360)
        );
        assert_eq!(
            c_ir(1, &t(&[0]), &ShiftVector::ones(1)).unwrap(),
            rat(-1, 2)
        );
        assert_eq!(
            c_ir(2, &t(&[0, 0]), &ShiftVector::ones(2)).unwrap(),
            rat(1, 12)
        );
        assert!(c_ir(3, &t(&[0, 0]), &ShiftVector::ones(2)).is_err());
        assert!(c_ir(0, &t(&[0, 0]), &ShiftVector::ones(2)).is_err());
    }

    #[test]
    fn recurrence_path() {
        let one2 = ShiftVector::ones(2);
        assert_eq!(c_ir_recurrence(1, &t(&[0, 1]), &one2).unwrap(), rat(1, 12));
        assert_eq!(c_ir_recurrence(2, &t(&[1, 1]), &one2).unwrap(), rat(1, 720));
        let z = t(&[0, 0, 0]);
        let one3 = ShiftVector::ones(3);
        assert_eq!(
            c_ir_recurrence(1, &z, &one3).unwrap(),
            c_ir(1, &z, &one3).unwrap()
        );
    }

    #[test]
    fn explicit_path() {
        let one3 = ShiftVector::ones(3);
        let z = t(&[0, 0, 0]);
        assert_eq!(
            c_ir_explicit(1, &z, &one3).unwrap(),
            c_ir(1, &z, &one3).unwrap()
        );
        let l = t(&[1, 0, 0]);
        assert_eq!(
            c_ir_explicit(2, &l, &one3).unwrap(),
            c_ir(2, &l, &one3).unwrap()
        );
        let s = ShiftVector::star(3);
        assert_eq!(c_ir_explicit(1, &z, &s).unwrap(), c_ir(1, &z, &s).unwrap());
        assert!(c_ir_explicit(3, &z, &one3).is_err());
        assert!(c_ir_explicit(1, &t(&[0, 0]), &ShiftVector::ones(2)).is_err());
    }

    #[test]
    fn parity() {
        let half = ShiftVector::new(vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert!(parity_check(1, &t(&[0, 1]), &half).unwrap());
        assert!(parity_check(1, &t(&[1, 1]), &ShiftVector::ones(2)).unwrap());
        let a = ShiftVector::new(vec![rat(1, 3), rat(2, 3)]).unwrap();
        assert!(parity_check(2, &t(&[0, 0]), &a).unwrap());
        let big_a = ShiftVector::new(vec![int(2), int(1)]).unwrap();
        assert!(parity_check(1, &t(&[0, 0]), &big_a).is_err());
    }

    #[test]
    fn star_relation() {
        assert!(star_coeff_relation_check(2, 1, &t(&[1, 1])).unwrap());
        assert!(star_coeff_relation_check(2, 2, &t(&[0, 1, 0])).unwrap());
        assert!(star_coeff_relation_check(3, 1, &t(&[2, 0, 0])).unwrap());
        assert!(star_coeff_relation_check(4, 2, &t(&[1, 0, 2, 1])).unwrap());
        assert!(star_coeff_relation_check(2, 4, &t(&[1, 0, 2, 1])).unwrap());
        assert!(star_coeff_relation_check(2, 3, &t(&[1, 1, 1])).is_err());
        assert!(star_coeff_relation_check(2, 2, &t(&[1, 0, 1])).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(dv("1,0").bits(), &[true, false]);
        assert!(dv("").is_empty());
        assert!("2".parse::<DirectionVector>().is_err());
        assert_eq!(
            "1,1/2".parse::<ShiftVector>().unwrap().entries()[1],
            rat(1, 2)
        );
        assert!("0,1".parse::<ShiftVector>().is_err());
        assert_eq!(DirectionVector::all(2).len(), 4);
        assert_eq!(DirectionVector::staircase(2, 4), dv("1,0,0"));
    }
}
