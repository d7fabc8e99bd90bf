//! Exact arithmetic substrate: rationals, univariate polynomials and
//! bivariate power series truncated by total degree.

mod poly;
mod series;

pub use poly::Poly;
pub use series::{Series, Var};

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` in lowest terms. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn big(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// `(-1)^n` as a rational.
pub fn sign_pow(n: i64) -> Rational {
    if n.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// `(x)_n = x (x-1) ... (x-n+1)`.
pub fn falling(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut t = x.clone();
    for _ in 0..n {
        acc *= &t;
        t -= Rational::one();
    }
    acc
}

/// Parses `"p"`, `"p/q"` or `"-p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse {
        what: "rational",
        input: s.to_string(),
    };
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Canonical text form. Integers print without `/1` unless `force_den`.
pub fn to_pq(x: &Rational, force_den: bool) -> String {
    if x.is_integer() && !force_den {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Approximate decimal rendering rounded half away from zero to `digits`
/// places. Only for display; never parsed back.
pub fn decimal_approx(x: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = x.abs() * Rational::from_integer(scale.clone());
    let half = rat(1, 2);
    let rounded = (scaled + half).floor().to_integer();
    let (ip, fp) = rounded.div_rem(&scale);
    let neg = x.is_negative() && !(ip.is_zero() && fp.is_zero());
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&ip.to_string());
    if digits > 0 {
        let f = fp.to_string();
        out.push('.');
        out.extend(std::iter::repeat_n('0', digits - f.len()));
        out.push_str(&f);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_is_structural() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(3, -6), rat(-1, 2));
        let z = rat(0, 5);
        assert_eq!(z.denom(), &BigInt::one());
    }

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["0", "-1/2", "1/240", "17", "-5"] {
            assert_eq!(to_pq(&parse_rational(s).unwrap(), false), s);
        }
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert_eq!(to_pq(&int(3), true), "3/1");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal_approx(&rat(1, 240), 6), "0.004167");
        assert_eq!(decimal_approx(&rat(-1, 2), 2), "-0.50");
        assert_eq!(decimal_approx(&rat(-1, 3000), 2), "0.00");
        assert_eq!(decimal_approx(&int(7), 0), "7");
    }

    #[test]
    fn combinatorial_helpers() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(falling(&int(5), 3), int(60));
        assert_eq!(falling(&int(-1), 2), int(2));
        assert_eq!(falling(&int(2), 0), int(1));
        assert_eq!(sign_pow(-3), int(-1));
    }
}
