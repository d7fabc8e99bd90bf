//! Stirling numbers and Stirling polynomials of both kinds.
//!
//! `s(n, m, Y)` is the coefficient of `X^m` in `(X - Y)_n`, and `S(n, m, Y)`
//! is the coefficient of `(X)_m` when `(X + Y)^n` is written in falling
//! factorials. At `Y = 0` they reduce to the signed Stirling numbers of the
//! first kind and the Stirling numbers of the second kind.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{big, binomial, int, Poly, Rational};

type Rows = RwLock<Vec<Vec<BigInt>>>;

static FIRST: Rows = RwLock::new(Vec::new());
static SECOND: Rows = RwLock::new(Vec::new());

fn lookup(table: &Rows, n: u32, m: u32, step: fn(&[BigInt], usize) -> Vec<BigInt>) -> BigInt {
    if m > n {
        return BigInt::zero();
    }
    let (n, m) = (n as usize, m as usize);
    if let Some(row) = table.read().unwrap().get(n) {
        return row[m].clone();
    }
    let mut rows = table.write().unwrap();
    if rows.is_empty() {
        rows.push(vec![BigInt::one()]);
    }
    while rows.len() <= n {
        let k = rows.len();
        let next = step(&rows[k - 1], k);
        rows.push(next);
    }
    rows[n][m].clone()
}

// s(n, m) = s(n-1, m-1) - (n-1) s(n-1, m)
fn first_row(prev: &[BigInt], n: usize) -> Vec<BigInt> {
    (0..=n)
        .map(|m| {
            let up = if m >= 1 {
                prev[m - 1].clone()
            } else {
                BigInt::zero()
            };
            let same = prev.get(m).cloned().unwrap_or_default();
            up - same * (n - 1)
        })
        .collect()
}

// S(n, m) = m S(n-1, m) + S(n-1, m-1)
fn second_row(prev: &[BigInt], n: usize) -> Vec<BigInt> {
    (0..=n)
        .map(|m| {
            let up = if m >= 1 {
                prev[m - 1].clone()
            } else {
                BigInt::zero()
            };
            let same = prev.get(m).cloned().unwrap_or_default();
            up + same * m
        })
        .collect()
}

/// Signed Stirling number of the first kind.
pub fn stirling_first(n: u32, m: u32) -> BigInt {
    lookup(&FIRST, n, m, first_row)
}

/// Stirling number of the second kind.
pub fn stirling_second(n: u32, m: u32) -> BigInt {
    lookup(&SECOND, n, m, second_row)
}

/// `s(n, m, Y) = sum_k C(m+k, m) s(n, m+k) (-Y)^k`.
pub fn stirling_poly_first(n: u32, m: u32) -> Poly {
    if m > n {
        return Poly::zero();
    }
    Poly::new(
        (0..=n - m)
            .map(|k| {
                let c = binomial(m + k, m) * stirling_first(n, m + k);
                if k % 2 == 1 {
                    -big(&c)
                } else {
                    big(&c)
                }
            })
            .collect(),
    )
}

/// `S(n, m, Y) = sum_k C(n, k) S(n-k, m) Y^k`.
pub fn stirling_poly_second(n: u32, m: u32) -> Poly {
    if m > n {
        return Poly::zero();
    }
    Poly::new(
        (0..=n - m)
            .map(|k| big(&(binomial(n, k) * stirling_second(n - k, m))))
            .collect(),
    )
}

/// `S(n, m, y)` at an integer argument, skipping the polynomial.
pub fn stirling_second_at(n: u32, m: u32, y: i64) -> Rational {
    if m > n {
        return Rational::zero();
    }
    let y = BigInt::from(y);
    let mut acc = BigInt::zero();
    let mut yp = BigInt::one();
    for k in 0..=n - m {
        acc += binomial(n, k) * stirling_second(n - k, m) * &yp;
        yp *= &y;
    }
    big(&acc)
}

/// `s(n, m, y)` at an integer argument.
pub fn stirling_first_at(n: u32, m: u32, y: i64) -> Rational {
    if m > n {
        return Rational::zero();
    }
    let y = BigInt::from(-y);
    let mut acc = BigInt::zero();
    let mut yp = BigInt::one();
    for k in 0..=n - m {
        acc += binomial(m + k, m) * stirling_first(n, m + k) * &yp;
        yp *= &y;
    }
    big(&acc)
}

/// Which kernel a Stirling transform applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformDirection {
    /// `b_n = sum_k s(n, k, y) a_k`.
    SecondToFirst,
    /// `b_n = sum_k S(n, k, y) a_k`.
    FirstToSecond,
}

/// Applies the Stirling polynomial transform with shift `y`. The two
/// directions are mutually inverse.
pub fn stirling_transform(dir: TransformDirection, a: &[Rational], y: &Rational) -> Vec<Rational> {
    (0..a.len())
        .map(|n| {
            let mut acc = Rational::zero();
            for (k, ak) in a.iter().enumerate().take(n + 1) {
                if ak.is_zero() {
                    continue;
                }
                let p = match dir {
                    TransformDirection::SecondToFirst => stirling_poly_first(n as u32, k as u32),
                    TransformDirection::FirstToSecond => stirling_poly_second(n as u32, k as u32),
                };
                acc += p.eval(y) * ak;
            }
            acc
        })
        .collect()
}

/// Falling factorial `(X)_n` as a polynomial in `X`.
pub fn falling_poly(n: u32) -> Poly {
    Poly::new((0..=n).map(|m| big(&stirling_first(n, m))).collect())
}

/// `(X + c)^n`, used to check the second-kind expansion.
pub fn shifted_power(n: u32, c: &Rational) -> Poly {
    let mut p = Poly::constant(int(1));
    let lin = Poly::new(vec![c.clone(), int(1)]);
    for _ in 0..n {
        p = &p * &lin;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn numbers() {
        assert_eq!(stirling_first(0, 0), bi(1));
        assert_eq!(stirling_first(2, 1), bi(-1));
        assert_eq!(stirling_first(1, 5), bi(0));
        assert_eq!(stirling_first(4, 2), bi(11));
        assert_eq!(stirling_second(0, 0), bi(1));
        assert_eq!(stirling_second(3, 2), bi(3));
        assert_eq!(stirling_second(2, 4), bi(0));
        assert_eq!(stirling_second(5, 0), bi(0));
        assert_eq!(stirling_second(6, 3), bi(90));
    }

    #[test]
    fn polynomials() {
        assert_eq!(stirling_poly_first(1, 0), Poly::new(vec![int(0), int(-1)]));
        assert_eq!(stirling_poly_first(2, 1), Poly::new(vec![int(-1), int(-2)]));
        assert_eq!(stirling_poly_first(0, 0), Poly::constant(int(1)));
        assert_eq!(stirling_poly_second(1, 0), Poly::new(vec![int(0), int(1)]));
        assert_eq!(stirling_poly_second(2, 1).to_string(), "2*Y + 1");
        assert!(stirling_poly_second(3, 5).is_zero());
    }

    #[test]
    fn integer_evaluators_agree_with_polynomials() {
        for n in 0..8 {
            for m in 0..=n + 1 {
                for y in [-3, 0, 2, 5] {
                    let yr = int(y);
                    assert_eq!(
                        stirling_first_at(n, m, y),
                        stirling_poly_first(n, m).eval(&yr)
                    );
                    assert_eq!(
                        stirling_second_at(n, m, y),
                        stirling_poly_second(n, m).eval(&yr)
                    );
                }
            }
        }
    }

    #[test]
    fn transforms() {
        let a = vec![int(1), int(2), int(5)];
        let y = int(3);
        let b = stirling_transform(TransformDirection::SecondToFirst, &a, &y);
        assert_eq!(
            stirling_transform(TransformDirection::FirstToSecond, &b, &y),
            a
        );

        let unit = vec![int(1), int(0), int(0), int(0)];
        let y = rat(2, 5);
        let col = stirling_transform(TransformDirection::SecondToFirst, &unit, &y);
        for (n, v) in col.iter().enumerate() {
            assert_eq!(v, &stirling_poly_first(n as u32, 0).eval(&y));
        }

        let delta = vec![int(0), int(1), int(0), int(0), int(0)];
        let col = stirling_transform(TransformDirection::SecondToFirst, &delta, &int(0));
        for (n, v) in col.iter().enumerate() {
            assert_eq!(v, &big(&stirling_first(n as u32, 1)));
        }
    }

    #[test]
    fn defining_expansions() {
        // (X - y)_n = sum_m s(n, m, y) X^m at several y
        for n in 0..7 {
            for y in [int(0), int(2), rat(-1, 3)] {
                let mut lhs = Poly::constant(int(1));
                for i in 0..n {
                    lhs = &lhs * &Poly::new(vec![-(y.clone() + int(i as i64)), int(1)]);
                }
                let rhs = Poly::new(
                    (0..=n)
                        .map(|m| stirling_poly_first(n, m).eval(&y))
                        .collect(),
                );
                assert_eq!(lhs, rhs);
                // (X + y)^n = sum_m S(n, m, y) (X)_m
                let mut acc = Poly::zero();
                for m in 0..=n {
                    acc = &acc + &falling_poly(m).scale(&stirling_poly_second(n, m).eval(&y));
                }
                assert_eq!(acc, shifted_power(n, &y));
            }
        }
    }
}
