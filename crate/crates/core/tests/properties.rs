mod common;

use common::{nonzero_poly_strategy, poly_strategy};
use pascal_det::cli::parse_poly;
use pascal_det::exactalg::{binom_poly, pochhammer_poly, rat, ratfunc_eq, ratio, MPoly, RatFunc, Rational, Var};
use pascal_det::series2d::{series_coeff, series_from_ratfunc, Series2D};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in poly_strategy(), q in poly_strategy(), r in poly_strategy()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division_inverts_product(p in poly_strategy(), q in nonzero_poly_strategy()) {
        prop_assert_eq!((&p * &q).exact_div(&q).unwrap(), p);
    }

    #[test]
    fn binomial_pascal_rule(p in poly_strategy(), k in 1i64..5) {
        let lower = &p - &MPoly::one();
        prop_assert_eq!(binom_poly(&p, k), &binom_poly(&lower, k - 1) + &binom_poly(&lower, k));
    }

    #[test]
    fn pochhammer_step(p in poly_strategy(), m in 0u32..5) {
        let step = &p + &MPoly::int(m as i64);
        prop_assert_eq!(pochhammer_poly(&p, m + 1), &pochhammer_poly(&p, m) * &step);
    }

    #[test]
    fn ratfunc_equivalence(
        (n1, d1) in (poly_strategy(), nonzero_poly_strategy()),
        s in nonzero_poly_strategy(),
        t in nonzero_poly_strategy(),
    ) {
        let f = RatFunc::new(n1.clone(), d1.clone()).unwrap();
        let g = RatFunc::new(&n1 * &s, &d1 * &s).unwrap();
        let h = RatFunc::new(&(&n1 * &s) * &t, &(&d1 * &s) * &t).unwrap();
        prop_assert!(ratfunc_eq(&f, &f));
        prop_assert_eq!(ratfunc_eq(&f, &g), ratfunc_eq(&g, &f));
        prop_assert!(ratfunc_eq(&f, &g) && ratfunc_eq(&g, &h) && ratfunc_eq(&f, &h));
        let shifted = RatFunc::new(&n1 + &d1, d1.clone()).unwrap();
        prop_assert!(!ratfunc_eq(&f, &shifted));
    }

    #[test]
    fn render_parse_round_trip(p in poly_strategy(), c in -7i64..=7, d in 1i64..=4) {
        let p = p.scale(&ratio(c, d));
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn series_reconstruction(
        num in prop::collection::vec(-4i64..=4, 1..5),
        den in prop::collection::vec(-3i64..=3, 0..4),
    ) {
        let (u, v) = (MPoly::var(Var::U), MPoly::var(Var::V));
        let bivar = |cs: &[i64]| cs.iter().enumerate().fold(MPoly::zero(), |acc, (k, &c)| {
            &acc + &(&u.pow(k as u32 % 2) * &v.pow(k as u32 / 2)).scale(&rat(c))
        });
        let num = bivar(&num);
        let den = &MPoly::one() + &(&bivar(&den) * &u);
        let order = 4;
        let s = series_from_ratfunc(&num, &den, order).unwrap();
        prop_assert_eq!(Series2D::from_poly(&den, order).mul(&s), Series2D::from_poly(&num, order));
    }

    /// `[u^N] P(u)/(1 - q u) = q^N P(1/q)` for `deg P <= N`.
    #[test]
    fn geometric_coefficient_extraction(
        coeffs in prop::collection::vec(-6i64..=6, 1..=9),
        qn in prop_oneof![-5i64..=-1, 1i64..=5],
        qd in 1i64..=4,
        extra in 0usize..=8,
    ) {
        let u = MPoly::var(Var::U);
        let q = ratio(qn, qd);
        let deg = coeffs.len() - 1;
        let big_n = (deg + extra).min(8).max(deg);
        let p = coeffs.iter().enumerate().fold(MPoly::zero(), |acc, (k, &c)| &acc + &u.pow(k as u32).scale(&rat(c)));
        let den = &MPoly::one() - &u.scale(&q);
        let s = series_from_ratfunc(&p, &den, big_n).unwrap();
        let lhs = series_coeff(&s, big_n, 0).unwrap();
        let at = p.eval(&[(Var::U, q.recip())]).unwrap();
        let rhs: Rational = &q.pow(big_n as u32) * &at;
        prop_assert_eq!(lhs, MPoly::constant(rhs));
    }
}
