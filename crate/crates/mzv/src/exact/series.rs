use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{int, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Power series in `x, y` truncated at total degree `order`. Storage is
/// sparse; absent exponents are zero and zeros are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    order: u32,
    coeffs: BTreeMap<(u32, u32), Rational>,
}

impl Series {
    pub fn zero(order: u32) -> Self {
        Series {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::monomial(order, 0, 0, Rational::one())
    }

    /// `c x^i y^j`, dropped if `i + j` exceeds the order.
    pub fn monomial(order: u32, i: u32, j: u32, c: Rational) -> Self {
        let mut s = Self::zero(order);
        s.set(i, j, c);
        s
    }

    pub fn var(order: u32, v: Var) -> Self {
        match v {
            Var::X => Self::monomial(order, 1, 0, Rational::one()),
            Var::Y => Self::monomial(order, 0, 1, Rational::one()),
        }
    }

    /// Builds from `(i, j, c)` triples; later entries for the same exponent
    /// add up.
    pub fn from_terms(order: u32, terms: impl IntoIterator<Item = (u32, u32, Rational)>) -> Self {
        let mut s = Self::zero(order);
        for (i, j, c) in terms {
            let v = s.coeff(i, j) + c;
            s.set(i, j, v);
        }
        s
    }

    /// `log(1 + t) = t - t^2/2 + t^3/3 - ...` in the chosen variable.
    pub fn log_one_plus(v: Var, order: u32) -> Self {
        let terms = (1..=order).map(|k| {
            let c = Rational::new((if k % 2 == 1 { 1 } else { -1 }).into(), k.into());
            match v {
                Var::X => (k, 0, c),
                Var::Y => (0, k, c),
            }
        });
        Self::from_terms(order, terms)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.coeffs
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> {
        self.coeffs.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn set(&mut self, i: u32, j: u32, c: Rational) {
        if i + j > self.order {
            return;
        }
        if c.is_zero() {
            self.coeffs.remove(&(i, j));
        } else {
            self.coeffs.insert((i, j), c);
        }
    }

    /// Same series cut down to a lower order.
    pub fn truncate(&self, order: u32) -> Self {
        let order = order.min(self.order);
        Series {
            order,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&(i, j), _)| i + j <= order)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    fn check(&self, o: &Series) -> Result<()> {
        if self.order != o.order {
            return Err(Error::OrderMismatch(self.order, o.order));
        }
        Ok(())
    }

    pub fn add(&self, o: &Series) -> Result<Series> {
        self.check(o)?;
        let mut out = self.clone();
        for (&(i, j), c) in &o.coeffs {
            let v = out.coeff(i, j) + c;
            out.set(i, j, v);
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Series) -> Result<Series> {
        self.add(&o.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Series {
        let mut out = Series::zero(self.order);
        for (&(i, j), a) in &self.coeffs {
            out.set(i, j, a * c);
        }
        out
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, o: &Series) -> Result<Series> {
        self.check(o)?;
        let mut acc: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
        for (&(i, j), a) in &self.coeffs {
            for (&(k, l), b) in &o.coeffs {
                if i + j + k + l > self.order {
                    continue;
                }
                *acc.entry((i + k, j + l)).or_insert_with(Rational::zero) += a * b;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Series {
            order: self.order,
            coeffs: acc,
        })
    }

    /// `num / den` for `den` with nonzero constant term, solving degree by
    /// degree in graded lexicographic order.
    pub fn div_unit(num: &Series, den: &Series) -> Result<Series> {
        num.check(den)?;
        let d0 = den.coeff(0, 0);
        if d0.is_zero() {
            return Err(Error::NonUnitDenominator);
        }
        let n = num.order;
        let mut q = Series::zero(n);
        for deg in 0..=n {
            for a in (0..=deg).rev() {
                let b = deg - a;
                let mut v = num.coeff(a, b);
                for (&(i, j), dc) in &den.coeffs {
                    if (i, j) == (0, 0) || i > a || j > b {
                        continue;
                    }
                    if let Some(qc) = q.coeffs.get(&(a - i, b - j)) {
                        v -= dc * qc;
                    }
                }
                q.set(a, b, v / &d0);
            }
        }
        Ok(q)
    }

    /// Exact quotient by `x - y`. The result has order one less than `num`.
    /// Fails at the first total degree whose coefficients do not sum to zero
    /// along the diagonal `y = x`.
    pub fn div_xy_difference(num: &Series) -> Result<Series> {
        let n = num.order;
        if n == 0 {
            return Err(Error::OutOfRange(
                "division by (x - y) needs order >= 1".into(),
            ));
        }
        let c00 = num.coeff(0, 0);
        if !c00.is_zero() {
            return Err(Error::NotDivisible {
                degree: 0,
                residual: c00,
            });
        }
        let mut q = Series::zero(n - 1);
        for deg in 1..=n {
            // coefficient of x^a y^b in (x - y) q is q[a-1][b] - q[a][b-1]
            let mut prev = num.coeff(deg, 0);
            q.set(deg - 1, 0, prev.clone());
            for a in (1..deg).rev() {
                let b = deg - a;
                prev = num.coeff(a, b) + prev;
                q.set(a - 1, b, prev.clone());
            }
            let residual = num.coeff(0, deg) + prev;
            if !residual.is_zero() {
                return Err(Error::NotDivisible {
                    degree: deg,
                    residual,
                });
            }
        }
        Ok(q)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 + O({})", self.order + 1);
        }
        let mut first = true;
        let mut keys: Vec<_> = self.coeffs.iter().collect();
        keys.sort_by_key(|(&(i, j), _)| (i + j, std::cmp::Reverse(i)));
        for (&(i, j), c) in keys {
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            let mut parts = Vec::new();
            if !a.is_one() || i + j == 0 {
                parts.push(a.to_string());
            }
            for (v, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => parts.push(v.into()),
                    _ => parts.push(format!("{v}^{e}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        write!(f, " + O({})", self.order + 1)
    }
}
