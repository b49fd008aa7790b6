use bilaguerre::arith::{pochhammer, rational, Integer, Rational};
use bilaguerre::congruence::{Case, Location, Sides};
use bilaguerre::poly::json::{parse, serialize};
use bilaguerre::poly::{BiPoly, IntBiPoly, Monomial, Poly1, Var};
use bilaguerre::structure::kronecker_irreducible;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rational(n, d))
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0u32..5, 0u32..5), small_rational()), 0..=8).prop_map(|terms| {
        BiPoly::from_terms(terms.into_iter().map(|((x, y), c)| (Monomial::new(x, y), c)))
    })
}

fn int_bipoly() -> impl Strategy<Value = IntBiPoly> {
    prop::collection::vec(((0u32..5, 0u32..5), -50i64..=50), 0..=8).prop_map(|terms| {
        IntBiPoly::from_terms(
            terms
                .into_iter()
                .map(|((x, y), c)| (Monomial::new(x, y), Integer::from(c))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in bipoly(), b in bipoly(), c in bipoly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn mixed_partials_commute(p in bipoly()) {
        prop_assert_eq!(
            p.partial(Var::Y).partial(Var::X),
            p.partial(Var::X).partial(Var::Y)
        );
    }

    #[test]
    fn diagonal_is_a_ring_homomorphism(a in bipoly(), b in bipoly()) {
        prop_assert_eq!(
            (&a * &b).substitute_diagonal(),
            &a.substitute_diagonal() * &b.substitute_diagonal()
        );
        prop_assert_eq!(
            (&a + &b).substitute_diagonal(),
            &a.substitute_diagonal() + &b.substitute_diagonal()
        );
    }

    #[test]
    fn diagonal_agrees_with_evaluation(p in bipoly(), x in small_rational()) {
        prop_assert_eq!(p.substitute_diagonal().eval(&x), p.eval(&x, &x));
    }

    #[test]
    fn reduction_respects_ring_operations(a in int_bipoly(), b in int_bipoly(), g in 1i64..=12) {
        let g = Integer::from(g);
        let r = |p: &IntBiPoly| p.reduce_mod(&g).unwrap();
        prop_assert_eq!(r(&(&a + &b)), r(&(&r(&a) + &r(&b))));
        prop_assert_eq!(r(&(&a * &b)), r(&(&r(&a) * &r(&b))));
        prop_assert!(r(&a).terms().all(|(_, c)| *c >= Integer::from(0) && *c < g));
    }

    #[test]
    fn json_round_trip(p in bipoly()) {
        prop_assert_eq!(parse(&serialize(&p)).unwrap(), p);
    }

    #[test]
    fn pochhammer_splits(x in small_rational(), a in 0u32..=10, b in 0u32..=10) {
        let shifted = &x + Rational::from_integer(a.into());
        prop_assert_eq!(pochhammer(&x, a + b), pochhammer(&x, a) * pochhammer(&shifted, b));
    }

    #[test]
    fn products_of_quadratics_are_reducible(
        a in -9i64..=9, b in -9i64..=9, c in -9i64..=9, d in -9i64..=9,
    ) {
        let f = Poly1::from_coeffs([rational(b, 1), rational(a, 1), rational(1, 1)]);
        let g = Poly1::from_coeffs([rational(d, 1), rational(c, 1), rational(1, 1)]);
        prop_assert!(!kronecker_irreducible(&(&f * &g)).unwrap());
    }

    /// Harness soundness: a unit change to one left-hand coefficient of a
    /// congruence with modulus >= 2 is reported at exactly that monomial.
    #[test]
    fn perturbation_is_always_caught(
        n in 0i64..=3, m in 0i64..=3, p in 1i64..=6, q in 1i64..=6, pick in 0usize..64,
    ) {
        let mut c = Case::Main { n, m, p, q }.congruence().unwrap();
        prop_assume!(c.modulus >= Integer::from(2));
        let Sides::Poly { lhs, .. } = &c.sides else { unreachable!() };
        let support: Vec<Monomial> = lhs.terms().map(|(mono, _)| mono).collect();
        let at = support[pick % support.len()];
        c.perturb_lhs(at);
        let report = c.decide();
        prop_assert!(!report.holds);
        prop_assert_eq!(report.witness.unwrap().at, Location::Monomial([at.x, at.y]));
    }

    #[test]
    fn scalar_perturbation_is_caught(
        n in 0i64..=4, m in 0i64..=4, p in -6i64..=6, q in 2i64..=6,
    ) {
        prop_assume!(p != 0);
        let mut c = Case::Pochhammer { n, m, t: n / 2, l: m / 2, p, q }.congruence().unwrap();
        prop_assume!(c.modulus >= Integer::from(2));
        prop_assert!(c.decide().holds);
        c.perturb_lhs(Monomial::ONE);
        prop_assert_eq!(c.decide().witness.unwrap().at, Location::Scalar);
    }
}
