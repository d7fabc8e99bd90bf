//! Bernoulli numbers and polynomials (ordinary and higher order), zeta values
//! at non-positive integers, and Choi's Hurwitz-type zeta at `s = -l`.
//!
//! Convention: `B_1 = -1/2`, i.e. the coefficients of `X / (e^X - 1)`.

use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::{One, Signed, Zero};

use crate::error::{out_of_range, Result};
use crate::exact::{big, binomial, factorial, int, sign_pow, Poly, Rational};

/// Coefficient lists of `(X / (e^X - 1))^m` indexed by `m`.
static POWERS: RwLock<Vec<Vec<Rational>>> = RwLock::new(Vec::new());
static POLYS: RwLock<Option<HashMap<(u32, u32), Poly>>> = RwLock::new(None);

fn inv_fact(k: u32) -> Rational {
    Rational::new(One::one(), factorial(k))
}

/// Series coefficients of `X / (e^X - 1)` up to `X^len-1`, by dividing 1 by
/// `(e^X - 1)/X = sum X^k / (k+1)!`.
fn base_series(len: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(len);
    for n in 0..len {
        if n == 0 {
            b.push(Rational::one());
            continue;
        }
        let mut v = Rational::zero();
        for k in 1..=n {
            v -= &b[n - k] * inv_fact(k as u32 + 1);
        }
        b.push(v);
    }
    b
}

fn mul_trunc(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    (0..len)
        .map(|n| {
            (0..=n)
                .filter(|&k| !a[k].is_zero() && !b[n - k].is_zero())
                .map(|k| &a[k] * &b[n - k])
                .sum()
        })
        .collect()
}

/// `[X^n] (X / (e^X - 1))^m`.
fn power_coeff(n: u32, m: u32) -> Rational {
    let (n, m) = (n as usize, m as usize);
    if let Some(row) = POWERS.read().unwrap().get(m) {
        if row.len() > n {
            return row[n].clone();
        }
    }
    let mut rows = POWERS.write().unwrap();
    let cur = rows.first().map_or(0, Vec::len);
    if cur <= n {
        let len = (n + 1).max(2 * cur).max(16);
        let mut one = vec![Rational::zero(); len];
        one[0] = Rational::one();
        let count = rows.len().max(2);
        *rows = vec![one, base_series(len)];
        while rows.len() < count {
            let next = mul_trunc(rows.last().unwrap(), &rows[1], len);
            rows.push(next);
        }
    }
    while rows.len() <= m {
        let len = rows[0].len();
        if rows.len() == 1 {
            rows.push(base_series(len));
            continue;
        }
        let next = mul_trunc(rows.last().unwrap(), &rows[1], len);
        rows.push(next);
    }
    rows[m][n].clone()
}

/// `B_n`, with `B_1 = -1/2`.
pub fn bernoulli_number(n: u32) -> Rational {
    power_coeff(n, 1) * big(&factorial(n))
}

/// Bernoulli number of order `m`: `B_n^(m) = B_n^(m)(0)`.
pub fn bernoulli_number_higher(n: u32, m: u32) -> Rational {
    power_coeff(n, m) * big(&factorial(n))
}

/// `B_n^(m)(z)`, the coefficient of `X^n/n!` in `X^m e^{zX} / (e^X - 1)^m`.
pub fn bernoulli_higher_order(n: u32, m: u32) -> Poly {
    if let Some(p) = POLYS.read().unwrap().as_ref().and_then(|t| t.get(&(n, m))) {
        return p.clone();
    }
    let p = Poly::new(
        (0..=n)
            .map(|k| big(&binomial(n, k)) * bernoulli_number_higher(n - k, m))
            .collect(),
    );
    POLYS
        .write()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert((n, m), p.clone());
    p
}

/// `B_n(z)`.
pub fn bernoulli_poly(n: u32) -> Poly {
    bernoulli_higher_order(n, 1)
}

/// `B_n(a)` for a rational `a`.
pub fn bernoulli_eval(n: u32, a: &Rational) -> Rational {
    bernoulli_poly(n).eval(a)
}

/// `zeta(-l) = -B_{l+1}(1) / (l+1)`.
pub fn zeta_neg(l: u32) -> Rational {
    -bernoulli_eval(l + 1, &Rational::one()) / int(l as i64 + 1)
}

/// Weight used inside the star recurrences: `1/2` at `0`, `zeta(-l)` otherwise.
pub fn zeta_star_neg(l: u32) -> Rational {
    if l == 0 {
        Rational::new(1.into(), 2.into())
    } else {
        zeta_neg(l)
    }
}

/// Choi's Hurwitz zeta of depth `r` at `s = -l`:
/// `(-1)^r l! / (r+l)! * B_{r+l}^(r)(z)`.
pub fn choi_value(r: u32, l: u32, z: &Rational) -> Result<Rational> {
    if r == 0 {
        return out_of_range("choi_value needs depth r >= 1");
    }
    if !z.is_positive() {
        return out_of_range(format!("choi_value needs z > 0, got {z}"));
    }
    let c = Rational::new(factorial(l), factorial(r + l));
    Ok(sign_pow(r as i64) * c * bernoulli_higher_order(r + l, r).eval(z))
}

/// Checks `zeta(r; -l; z) = sum_k C(m, k) zeta(r-m+k; -l; z+k)`.
pub fn choi_identity_check(r: u32, m: u32, l: u32, z: &Rational) -> Result<bool> {
    if m == 0 || m >= r {
        return out_of_range(format!("need 1 <= m < r, got m={m}, r={r}"));
    }
    let lhs = choi_value(r, l, z)?;
    let mut rhs = Rational::zero();
    for k in 0..=m {
        rhs += big(&binomial(m, k)) * choi_value(r - m + k, l, &(z + int(k as i64)))?;
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn numbers() {
        assert_eq!(bernoulli_number(0), int(1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(7), int(0));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
        assert_eq!(bernoulli_number(20), rat(-174611, 330));
    }

    #[test]
    fn polynomials() {
        assert_eq!(bernoulli_poly(0), Poly::constant(int(1)));
        assert_eq!(bernoulli_poly(1), Poly::new(vec![rat(-1, 2), int(1)]));
        assert_eq!(bernoulli_poly(2).eval(&int(0)), bernoulli_number(2));
        for n in 0..15 {
            assert_eq!(
                bernoulli_eval(n, &int(1)),
                sign_pow(n as i64) * bernoulli_number(n)
            );
        }
    }

    #[test]
    fn higher_order() {
        assert_eq!(bernoulli_higher_order(0, 3), Poly::constant(int(1)));
        assert_eq!(bernoulli_higher_order(2, 0), Poly::monomial(int(1), 2));
        assert_eq!(
            bernoulli_higher_order(1, 2),
            Poly::new(vec![int(-1), int(1)])
        );
        for n in 0..10 {
            assert_eq!(bernoulli_higher_order(n, 1), bernoulli_poly(n));
        }
    }

    #[test]
    fn zeta_values() {
        assert_eq!(zeta_neg(0), rat(-1, 2));
        assert_eq!(zeta_neg(1), rat(-1, 12));
        assert_eq!(zeta_neg(3), rat(1, 120));
        assert_eq!(zeta_neg(4), int(0));
        assert_eq!(zeta_star_neg(0), rat(1, 2));
        assert_eq!(zeta_star_neg(1), rat(-1, 12));
        assert_eq!(zeta_star_neg(2), int(0));
    }

    #[test]
    fn choi() {
        assert_eq!(choi_value(1, 0, &int(1)).unwrap(), rat(-1, 2));
        assert_eq!(choi_value(1, 1, &int(1)).unwrap(), rat(-1, 12));
        let want = rat(1, 2) * bernoulli_higher_order(2, 2).eval(&int(2));
        assert_eq!(choi_value(2, 0, &int(2)).unwrap(), want);
        assert!(choi_value(2, 0, &int(0)).is_err());
        assert!(choi_value(0, 0, &int(1)).is_err());
        assert!(choi_identity_check(2, 1, 0, &int(1)).unwrap());
        assert!(choi_identity_check(3, 2, 1, &rat(1, 2)).unwrap());
        assert!(choi_identity_check(4, 1, 3, &int(2)).unwrap());
        assert!(choi_identity_check(2, 2, 0, &int(1)).is_err());
    }
}
