use mzv::{
    c_ir, c_ir_recurrence, int, mzf_rev, mzf_rev_stirling, mzsf_rev, mzsf_rev_stirling,
    parse_rational, prop_zero_padding_check, rat, sign_theorem_check, stirling_transform,
    IndexTuple, Poly, Rational, Series, ShiftVector, TransformDirection,
};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn series(order: u32) -> impl Strategy<Value = Series> {
    let n = ((order + 1) * (order + 2) / 2) as usize;
    proptest::collection::vec(-3i64..=3, n).prop_map(move |cs| {
        let mut terms = Vec::new();
        let mut it = cs.into_iter();
        for deg in 0..=order {
            for i in 0..=deg {
                terms.push((i, deg - i, int(it.next().unwrap())));
            }
        }
        Series::from_terms(order, terms)
    })
}

fn poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec(small_rat(), 0..6).prop_map(Poly::new)
}

fn tuple(max_depth: usize, max_entry: u32) -> impl Strategy<Value = IndexTuple> {
    proptest::collection::vec(0..=max_entry, 1..=max_depth)
        .prop_map(|v| IndexTuple::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn series_ring_laws((a, b, c) in (0u32..6).prop_flat_map(|o| (series(o), series(o), series(o)))) {
        let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
        let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_division_round_trips(num in series(8), mut den in series(8), c0 in 1i64..=3) {
        den = den.add(&Series::monomial(8, 0, 0, int(c0) - den.coeff(0, 0))).unwrap();
        let q = Series::div_unit(&num, &den).unwrap();
        prop_assert_eq!(q.mul(&den).unwrap(), num);
    }

    #[test]
    fn difference_division_round_trips(p in series(9)) {
        let xy = Series::var(10, mzv::Var::X).sub(&Series::var(10, mzv::Var::Y)).unwrap();
        let prod = Series::from_terms(10, p.terms().map(|(i, j, c)| (i, j, c.clone())))
            .mul(&xy)
            .unwrap();
        let back = Series::div_xy_difference(&prod).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn rational_text_round_trips(n in any::<i64>(), d in 1i64..=i64::MAX) {
        let x = rat(n, d);
        let text = format!("{}/{}", x.numer(), x.denom());
        prop_assert_eq!(parse_rational(&text).unwrap(), x);
    }

    #[test]
    fn stirling_transform_inverts(a in proptest::collection::vec(small_rat(), 1..10), y in small_rat()) {
        let b = stirling_transform(TransformDirection::FirstToSecond, &a, &y);
        let back = stirling_transform(TransformDirection::SecondToFirst, &b, &y);
        prop_assert_eq!(back, a);
    }

    #[test]
    fn poly_ring_laws(p in poly(), q in poly(), r in poly(), x in small_rat()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
        prop_assert_eq!(p.shift(&x).eval(&int(0)), p.eval(&x));
    }

    #[test]
    fn sign_theorem_on_random_tuples(l in tuple(4, 3)) {
        prop_assume!(l.entries()[0] >= 1);
        prop_assert!(sign_theorem_check(&l, false).unwrap());
        prop_assert!(sign_theorem_check(&l, true).unwrap());
    }

    #[test]
    fn stirling_closed_forms_on_random_tuples(l in tuple(3, 3)) {
        prop_assert_eq!(mzf_rev_stirling(&l), mzf_rev(&l));
        prop_assert_eq!(mzsf_rev_stirling(&l), mzsf_rev(&l));
    }

    #[test]
    fn zero_padding_on_random_tuples(l in tuple(3, 2), s in -3i64..=0) {
        prop_assert!(prop_zero_padding_check(&l, s).unwrap());
    }

    #[test]
    fn coefficient_recurrence_on_random_shifts(l in tuple(3, 2), a in proptest::collection::vec(1i64..=5, 3)) {
        let r = l.depth();
        let a = ShiftVector::new(a[..r].iter().map(|&x| rat(x, 2)).collect()).unwrap();
        for i in 1..=r {
            prop_assert_eq!(c_ir_recurrence(i, &l, &a).unwrap(), c_ir(i, &l, &a).unwrap());
        }
    }
}
