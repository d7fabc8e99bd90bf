//! Executable identity suites. Each suite checks a family of exact
//! identities over a bounded grid and reports how many held, together with
//! the first counterexample if any failed.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::asym::{
    self, asym_coeff, c_ir, c_ir_explicit, c_ir_recurrence, parity_check,
    star_coeff_relation_check, DirectionVector, ShiftVector,
};
use crate::bernoulli::{
    bernoulli_eval, bernoulli_higher_order, bernoulli_number, bernoulli_number_higher,
    bernoulli_poly, choi_identity_check, zeta_neg,
};
use crate::error::{Error, Result};
use crate::exact::{big, binomial, factorial, int, rat, sign_pow, Poly, Rational};
use crate::stirling::{stirling_first, stirling_poly_first, stirling_poly_second, stirling_second};
use crate::values::{
    akiyama_tanigawa_reg, akiyama_tanigawa_rev, mzf_reg, mzf_rev, mzf_rev_stirling, mzsf_reg,
    mzsf_rev, mzsf_rev_stirling, prop_zero_padding_check, sign_theorem_check, IndexTuple,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Stirling,
    Bernoulli,
    Choi,
    Values,
    Sign,
    Asym,
    Gregory,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = [
        "stirling",
        "bernoulli",
        "choi",
        "values",
        "sign",
        "asym",
        "gregory",
        "all",
    ];

    /// The concrete suites, in report order.
    pub const CONCRETE: [Suite; 7] = [
        Suite::Stirling,
        Suite::Bernoulli,
        Suite::Choi,
        Suite::Values,
        Suite::Sign,
        Suite::Asym,
        Suite::Gregory,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Stirling => "stirling",
            Suite::Bernoulli => "bernoulli",
            Suite::Choi => "choi",
            Suite::Values => "values",
            Suite::Sign => "sign",
            Suite::Asym => "asym",
            Suite::Gregory => "gregory",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::CONCRETE
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse {
                what: "suite name",
                input: s.to_string(),
            })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Grid bounds. `None` picks each suite's default.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bounds {
    pub max_depth: Option<usize>,
    pub max_weight: Option<u32>,
    pub max_r: Option<usize>,
    /// Adds randomized spot checks beyond the grid, reproducible per seed.
    pub seed: Option<u64>,
    pub samples: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub checked: usize,
    pub first_failure: Option<String>,
    pub failures: usize,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_failure {
            None => write!(f, "{}: {} identities verified", self.suite, self.checked),
            Some(c) => write!(
                f,
                "{}: {} of {} identities FAILED; first counterexample: {}",
                self.suite, self.failures, self.checked, c
            ),
        }
    }
}

struct Tally {
    suite: Suite,
    checked: usize,
    failures: usize,
    first: Option<String>,
}

impl Tally {
    fn new(suite: Suite) -> Self {
        Tally {
            suite,
            checked: 0,
            failures: 0,
            first: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }

    fn eq(&mut self, lhs: &Rational, rhs: &Rational, what: impl FnOnce() -> String) {
        self.check(lhs == rhs, || format!("{}: {} != {}", what(), lhs, rhs));
    }

    fn done(self) -> Report {
        Report {
            suite: self.suite,
            checked: self.checked,
            first_failure: self.first,
            failures: self.failures,
        }
    }
}

/// Runs one suite, or all of them (in parallel) for [`Suite::All`]. Reports
/// come back sorted by suite.
pub fn run(suite: Suite, b: &Bounds) -> Vec<Report> {
    if suite != Suite::All {
        return vec![run_one(suite, b)];
    }
    let mut out: Vec<Report> = std::thread::scope(|s| {
        let handles: Vec<_> = Suite::CONCRETE
            .into_iter()
            .map(|x| s.spawn(move || run_one(x, b)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite panicked"))
            .collect()
    });
    out.sort_by_key(|r| r.suite);
    out
}

fn run_one(suite: Suite, b: &Bounds) -> Report {
    match suite {
        Suite::Stirling => stirling_suite(),
        Suite::Bernoulli => bernoulli_suite(),
        Suite::Choi => choi_suite(),
        Suite::Values => values_suite(b),
        Suite::Sign => sign_suite(b),
        Suite::Asym => asym_suite(b),
        Suite::Gregory => gregory_suite(b),
        Suite::All => unreachable!("expanded by run"),
    }
}

fn sample_tuples(b: &Bounds, depth: usize, weight: u32) -> Vec<IndexTuple> {
    let Some(seed) = b.seed else {
        return Vec::new();
    };
    let mut rng = StdRng::seed_from_u64(seed);
    (0..b.samples)
        .map(|_| {
            let r = rng.random_range(1..=depth + 1);
            let mut left = weight + 2;
            let v = (0..r)
                .map(|_| {
                    let x = rng.random_range(0..=left);
                    left -= x;
                    x
                })
                .collect();
            IndexTuple::new(v).expect("depth >= 1")
        })
        .collect()
}

// ---------------------------------------------------------------- stirling

/// Coefficients of `e^{cX}` up to `X^len-1`.
fn exp_series(c: &Rational, len: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(len);
    let mut p = Rational::one();
    for n in 0..len {
        out.push(&p / big(&factorial(n as u32)));
        p *= c;
    }
    out
}

fn mul_series(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    (0..a.len())
        .map(|n| (0..=n).map(|k| &a[k] * &b[n - k]).sum())
        .collect()
}

pub fn stirling_orthogonality(n_max: u32, y: &Rational) -> bool {
    (0..=n_max).all(|n| {
        (0..=n).all(|m| {
            let delta = if n == m {
                Rational::one()
            } else {
                Rational::zero()
            };
            let a: Rational = (m..=n)
                .map(|k| stirling_poly_second(n, k).eval(y) * stirling_poly_first(k, m).eval(y))
                .sum();
            let b: Rational = (m..=n)
                .map(|k| stirling_poly_first(n, k).eval(y) * stirling_poly_second(k, m).eval(y))
                .sum();
            a == delta && b == delta
        })
    })
}

/// `n! [X^n] (e^X - 1)^k e^{yX} / k! = S(n, k, y)` for `n <= n_max`.
pub fn stirling_generating_function(k: u32, n_max: u32, y: &Rational) -> bool {
    let len = n_max as usize + 1;
    let mut em1 = exp_series(&Rational::one(), len);
    em1[0] = Rational::zero();
    let mut acc = exp_series(y, len);
    for _ in 0..k {
        acc = mul_series(&acc, &em1);
    }
    (0..=n_max).all(|n| {
        let c = &acc[n as usize] * big(&factorial(n)) / big(&factorial(k));
        c == stirling_poly_second(n, k).eval(y)
    })
}

/// `Y S(n,m,Y) = S(n+1,m,Y) - S(n,m-1,Y+1)`.
pub fn stirling_recurrence(n: u32, m: u32) -> bool {
    let y = Poly::monomial(Rational::one(), 1);
    let lhs = &y * &stirling_poly_second(n, m);
    let shifted = if m == 0 {
        Poly::zero()
    } else {
        stirling_poly_second(n, m - 1).shift(&Rational::one())
    };
    lhs == &stirling_poly_second(n + 1, m) - &shifted
}

/// `S(n,k,X) = sum_i S(m,i,X+k-i) S(n-m,k-i,X)`.
pub fn stirling_convolution(n: u32, m: u32, k: u32, x: &Rational) -> bool {
    let lhs = stirling_poly_second(n, k).eval(x);
    let rhs: Rational = (0..=m.min(k))
        .map(|i| {
            let xi = x + int(k as i64 - i as i64);
            stirling_poly_second(m, i).eval(&xi) * stirling_poly_second(n - m, k - i).eval(x)
        })
        .sum();
    lhs == rhs
}

fn stirling_suite() -> Report {
    let mut t = Tally::new(Suite::Stirling);
    for y in [int(0), int(1), int(-2), rat(7, 3)] {
        t.check(stirling_orthogonality(12, &y), || {
            format!("orthogonality at Y = {y}")
        });
    }
    for k in 0..=6 {
        for y in [int(0), int(1), rat(5, 2)] {
            t.check(stirling_generating_function(k, 10, &y), || {
                format!("generating function k = {k}, Y = {y}")
            });
        }
    }
    for n in 0..=12 {
        for m in 0..=12 {
            t.check(stirling_recurrence(n, m), || {
                format!("recurrence n = {n}, m = {m}")
            });
        }
    }
    for n in 0..=10 {
        for m in 0..=n {
            for k in 0..=n {
                for x in [int(0), int(1), int(-1), rat(3, 4)] {
                    t.check(stirling_convolution(n, m, k, &x), || {
                        format!("convolution n = {n}, m = {m}, k = {k}, X = {x}")
                    });
                }
            }
        }
    }
    for n in 0..=15 {
        for m in 0..=15 {
            let z = Rational::zero();
            t.eq(
                &stirling_poly_first(n, m).eval(&z),
                &big(&stirling_first(n, m)),
                || format!("s({n},{m},0)"),
            );
            t.eq(
                &stirling_poly_second(n, m).eval(&z),
                &big(&stirling_second(n, m)),
                || format!("S({n},{m},0)"),
            );
        }
    }
    t.done()
}

// ---------------------------------------------------------------- bernoulli

fn bernoulli_suite() -> Report {
    let mut t = Tally::new(Suite::Bernoulli);
    for n in 0..=20 {
        let refl = reflect(&bernoulli_poly(n));
        let rhs = bernoulli_poly(n).scale(&sign_pow(n as i64));
        t.check(refl == rhs, || format!("reflection n = {n}"));
        t.eq(
            &bernoulli_eval(n, &Rational::one()),
            &(sign_pow(n as i64) * bernoulli_number(n)),
            || format!("B_{n}(1)"),
        );
    }
    for m1 in 0..=3 {
        for m2 in 0..=3 {
            for n in 0..=10 {
                let mut rhs = Poly::zero();
                for k in 0..=n {
                    let c = big(&binomial(n, k)) * bernoulli_number_higher(n - k, m2);
                    rhs = &rhs + &bernoulli_higher_order(k, m1).scale(&c);
                }
                t.check(bernoulli_higher_order(n, m1 + m2) == rhs, || {
                    format!("order additivity m1 = {m1}, m2 = {m2}, n = {n}")
                });
            }
        }
    }
    for k in 1..=10 {
        t.eq(&zeta_neg(2 * k), &Rational::zero(), || {
            format!("zeta(-{})", 2 * k)
        });
    }
    for l in 0..=12 {
        let d1 = IndexTuple::new(vec![l]).expect("non-empty");
        t.eq(&zeta_neg(l), &mzf_reg(&d1), || {
            format!("depth-1 value at {l}")
        });
    }
    t.done()
}

/// `p(1 - a)` as a polynomial in `a`.
fn reflect(p: &Poly) -> Poly {
    let neg = Poly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c * sign_pow(k as i64))
            .collect(),
    );
    neg.shift(&-Rational::one())
}

// ---------------------------------------------------------------- choi

fn choi_suite() -> Report {
    let mut t = Tally::new(Suite::Choi);
    for r in 2..=5 {
        for m in 1..r {
            for l in 0..=4 {
                for z in [int(1), rat(1, 2), int(3), rat(7, 5)] {
                    let ok = choi_identity_check(r, m, l, &z).unwrap_or(false);
                    t.check(ok, || {
                        format!("combinatorial relation r = {r}, m = {m}, l = {l}, z = {z}")
                    });
                }
            }
        }
    }
    t.done()
}

// ---------------------------------------------------------------- values

fn values_suite(b: &Bounds) -> Report {
    let mut t = Tally::new(Suite::Values);
    let depth = b.max_depth.unwrap_or(4);
    let weight = b.max_weight.unwrap_or(6);
    let mut grid = IndexTuple::all_up_to(depth, weight);
    grid.extend(sample_tuples(b, depth, weight));
    for l in &grid {
        t.eq(&mzf_rev_stirling(l), &mzf_rev(l), || {
            format!("Stirling form of mzf-rev({l})")
        });
        t.eq(&mzsf_rev_stirling(l), &mzsf_rev(l), || {
            format!("Stirling form of mzsf-rev({l})")
        });
    }
    for r in 1..=5u32 {
        for l in 0..=6u32 {
            let mut v = vec![0; r as usize];
            v[0] = l;
            let reg = IndexTuple::new(v.clone()).expect("non-empty");
            v.reverse();
            let rev = IndexTuple::new(v).expect("non-empty");
            let at_reg = akiyama_tanigawa_reg(r, l).expect("r >= 1");
            let at_rev = akiyama_tanigawa_rev(r, l).expect("r >= 1");
            t.eq(&at_reg, &mzf_reg(&reg), || {
                format!("explicit regular formula r = {r}, l = {l}")
            });
            t.eq(&at_rev, &mzf_rev(&rev), || {
                format!("explicit reverse formula r = {r}, l = {l}")
            });
        }
    }
    for l in IndexTuple::all_up_to(depth.min(3), weight.min(4)) {
        for s in [0, -1, -2, -3] {
            let ok = prop_zero_padding_check(&l, s).unwrap_or(false);
            t.check(ok, || format!("zero padding at {l}, s = {s}"));
        }
    }
    t.done()
}

// ---------------------------------------------------------------- sign

fn sign_suite(b: &Bounds) -> Report {
    let mut t = Tally::new(Suite::Sign);
    let depth = b.max_depth.unwrap_or(4);
    let weight = b.max_weight.unwrap_or(6);
    let mut grid = IndexTuple::all_up_to(depth, weight);
    grid.extend(sample_tuples(b, depth, weight));
    for l in grid.iter().filter(|l| l.entries()[0] >= 1) {
        for reverse in [false, true] {
            let ok = sign_theorem_check(l, reverse).unwrap_or(false);
            t.check(ok, || {
                let kind = if reverse { "reverse" } else { "regular" };
                format!("sign relation ({kind}) at {l}")
            });
        }
    }
    for l2 in (1..=9).step_by(2) {
        let l = IndexTuple::new(vec![0, l2]).expect("non-empty");
        let star = mzsf_reg(&l);
        let plain = mzf_reg(&l);
        t.check(
            star.is_zero() && plain == -zeta_neg(l2) && !plain.is_zero(),
            || format!("exceptional pattern (0,{l2}): star {star}, plain {plain}"),
        );
    }
    t.done()
}

// ---------------------------------------------------------------- asym

fn asym_suite(b: &Bounds) -> Report {
    let mut t = Tally::new(Suite::Asym);
    let depth = b.max_depth.unwrap_or(3).min(4);
    let weight = b.max_weight.unwrap_or(4);
    let ex = |v: &[u32]| IndexTuple::new(v.to_vec()).expect("non-empty");
    let one2 = ShiftVector::ones(2);
    for (l, d, want) in [
        (ex(&[0, 1]), "0", rat(1, 12)),
        (ex(&[0, 1]), "1", int(0)),
        (ex(&[1, 1]), "0", rat(1, 360)),
        (ex(&[1, 1]), "1", rat(1, 720)),
    ] {
        let dv: DirectionVector = d.parse().expect("valid");
        let got = asym_coeff(&l, &dv, &one2).expect("valid");
        t.eq(&got, &want, || format!("C^({d})({l})"));
    }
    for l in IndexTuple::all_up_to(depth, weight) {
        let r = l.depth();
        let ones = ShiftVector::ones(r);
        let star = ShiftVector::star(r);
        let dirs = DirectionVector::all(r - 1);
        let sum = |a: &ShiftVector| -> Rational {
            dirs.iter()
                .map(|d| asym_coeff(&l, d, a).expect("valid"))
                .sum()
        };
        let zero_d = DirectionVector::zeros(r - 1);
        t.eq(&sum(&ones), &mzf_rev(&l), || {
            format!("coefficient sum vs mzf-rev({l})")
        });
        t.eq(
            &asym_coeff(&l, &zero_d, &ones).expect("valid"),
            &mzf_reg(&l),
            || format!("leading coefficient vs mzf-reg({l})"),
        );
        t.eq(
            &asym_coeff(&l, &zero_d, &star).expect("valid"),
            &mzsf_reg(&l),
            || format!("star leading coefficient vs mzsf-reg({l})"),
        );
        t.eq(&sum(&star), &mzsf_rev(&l), || {
            format!("star coefficient sum vs mzsf-rev({l})")
        });
    }
    for l in IndexTuple::all_up_to(4, 4) {
        let r = l.depth();
        for a in [ShiftVector::ones(r), ShiftVector::star(r)] {
            for i in 1..=r {
                let def = c_ir(i, &l, &a).expect("valid");
                let rec = c_ir_recurrence(i, &l, &a).expect("valid");
                t.eq(&rec, &def, || format!("recurrence C_{{{i},{r}}}({l}; {a})"));
                if r >= 3 && i < r {
                    let exp = c_ir_explicit(i, &l, &a).expect("valid");
                    t.eq(&exp, &def, || format!("explicit C_{{{i},{r}}}({l}; {a})"));
                }
            }
        }
    }
    for l in IndexTuple::all_up_to(3, 4) {
        let r = l.depth();
        let shifts = [
            ShiftVector::ones(r),
            ShiftVector::new(vec![rat(1, 2); r]).expect("positive"),
            ShiftVector::new((1..=r).map(|j| rat(j as i64, 5)).collect()).expect("positive"),
        ];
        for a in &shifts {
            for i in 1..=r {
                let ok = parity_check(i, &l, a).unwrap_or(false);
                t.check(ok, || format!("reflection of C_{{{i},{r}}}({l}; {a})"));
            }
        }
    }
    for l in IndexTuple::all_up_to(4, 4)
        .into_iter()
        .filter(|l| l.depth() >= 2)
    {
        let r = l.depth();
        for i in 2..=r {
            for p in 1..=r {
                if p != 1 && (p + 1 == i || p == i + 1) {
                    continue;
                }
                if p == i && l.entries()[i - 1] == 0 {
                    continue;
                }
                let ok = star_coeff_relation_check(i, p, &l).unwrap_or(false);
                t.check(ok, || {
                    format!("unit-shift relation i = {i}, p = {p}, l = {l}")
                });
            }
        }
    }
    t.done()
}

// ---------------------------------------------------------------- gregory

fn gregory_suite(b: &Bounds) -> Report {
    let mut t = Tally::new(Suite::Gregory);
    let max_r = b.max_r.unwrap_or(6);
    for r in 1..=max_r {
        t.check(asym::gregory_origin_check(r).unwrap_or(false), || {
            format!("C_{{i,{r}}}(0) vs Gregory coefficients")
        });
        t.check(asym::i_partition_check(r).unwrap_or(false), || {
            format!("partition at r = {r}")
        });
        t.check(asym::origin_identity_check(r), || {
            format!("origin value at depth {r}")
        });
    }
    for r in 1..=max_r.min(5) {
        t.check(asym::decomposition_check(r), || {
            format!("origin factorization at r = {r}")
        });
        t.check(asym::bundling_check(r).unwrap_or(false), || {
            format!("bundling at r = {r}")
        });
    }
    let depth = b.max_depth.unwrap_or(3).min(3);
    let weight = b.max_weight.unwrap_or(4).min(4);
    for l in IndexTuple::all_up_to(depth, weight) {
        t.eq(&asym::rev_via_gregory(&l), &mzf_rev(&l), || {
            format!("Gregory route for mzf-rev({l})")
        });
    }
    t.done()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_parse() {
        for n in Suite::NAMES {
            assert_eq!(n.parse::<Suite>().unwrap().name(), n);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let b = Bounds {
            max_depth: Some(2),
            max_weight: Some(3),
            max_r: Some(3),
            ..Bounds::default()
        };
        for s in [Suite::Choi, Suite::Values, Suite::Sign, Suite::Gregory] {
            let r = &run(s, &b)[0];
            assert!(r.passed(), "{r}");
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn seeded_samples_are_reproducible() {
        let b = Bounds {
            seed: Some(7),
            samples: 5,
            ..Bounds::default()
        };
        assert_eq!(sample_tuples(&b, 2, 2), sample_tuples(&b, 2, 2));
        assert_eq!(sample_tuples(&b, 2, 2).len(), 5);
        assert!(sample_tuples(&Bounds::default(), 2, 2).is_empty());
    }

    #[test]
    fn reflection_helper() {
        let p = Poly::new(vec![int(1), int(2), int(3)]);
        for a in [int(0), rat(1, 3), int(4)] {
            assert_eq!(reflect(&p).eval(&a), p.eval(&(Rational::one() - &a)));
        }
    }
}
