use proptest::prelude::*;

use jack_core::combinatorics::{composition_lt, compositions, sort_to_partition, Composition};
use jack_core::jack::{build_e, check_e_eigen};
use jack_core::polyalg::{
    antisymmetrize, apply_transposition, cherednik_apply, divided_difference, is_antisymmetric, is_symmetric,
    symmetrize, MultiPoly, QPoly,
};
use jack_core::scalars::{check_all, gen_factorial_identities, hook_identities, IntPoly};
use jack_core::{AlphaRational, Field, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn qpoly(n: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=3, n), rational()), 0..5)
        .prop_map(move |terms| QPoly::from_terms(n, terms))
}

fn n_and_poly() -> impl Strategy<Value = (usize, QPoly)> {
    (2usize..=3).prop_flat_map(|n| (Just(n), qpoly(n)))
}

fn n_and_two_polys() -> impl Strategy<Value = (usize, QPoly, QPoly)> {
    (2usize..=3).prop_flat_map(|n| (Just(n), qpoly(n), qpoly(n)))
}

fn int_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-4i64..=4, 1..4).prop_map(|c| IntPoly::new(c.into_iter().map(Into::into).collect()))
}

fn alpha_rational() -> impl Strategy<Value = AlphaRational> {
    (int_poly(), int_poly())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| AlphaRational::new(n, d).expect("nonzero denominator"))
}

fn composition(max_n: usize, max_part: u32) -> impl Strategy<Value = Composition> {
    prop::collection::vec(0..=max_part, 1..=max_n).prop_map(Composition::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn alpha_rational_text_round_trip(x in alpha_rational()) {
        let back: AlphaRational = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn alpha_rational_json_round_trip(x in alpha_rational()) {
        let back: AlphaRational = serde_json::from_str(&serde_json::to_string(&x).unwrap()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn field_laws(x in alpha_rational(), y in alpha_rational(), z in alpha_rational()) {
        prop_assert_eq!(x.times(&y.plus(&z)), x.times(&y).plus(&x.times(&z)));
        prop_assert_eq!(x.plus(&y).minus(&y), x.clone());
        if !x.is_zero() {
            prop_assert!(x.times(&x.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(x in alpha_rational(), y in alpha_rational(), a in rational()) {
        let (ex, ey) = (x.eval_at(&a), y.eval_at(&a));
        prop_assume!(ex.is_ok() && ey.is_ok());
        let (ex, ey) = (ex.unwrap(), ey.unwrap());
        prop_assert_eq!(x.times(&y).eval_at(&a).unwrap(), &ex * &ey);
        prop_assert_eq!(x.plus(&y).eval_at(&a).unwrap(), &ex + &ey);
    }

    #[test]
    fn composition_text_round_trip(c in composition(5, 6)) {
        let back: Composition = c.to_string().parse().unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn poly_json_round_trip((_, f) in n_and_poly()) {
        let f: MultiPoly = f.map_coeffs(AlphaRational::from_rational);
        let back: MultiPoly = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn divided_difference_leibniz((n, f, g) in n_and_two_polys(), i in 1usize..3) {
        prop_assume!(i < n);
        let dd = |p: &QPoly| divided_difference(p, i, i + 1).unwrap();
        let s = |p: &QPoly| apply_transposition(p, i, i + 1).unwrap();
        let lhs = dd(&(&f * &g));
        let rhs = &(&dd(&f) * &g) + &(&s(&f) * &dd(&g));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cherednik_operators_commute((n, f) in n_and_poly(), a in rational()) {
        prop_assume!(!a.is_zero());
        for i in 1..=n {
            for j in (i + 1)..=n {
                let ij = cherednik_apply(&cherednik_apply(&f, j, &a).unwrap(), i, &a).unwrap();
                let ji = cherednik_apply(&cherednik_apply(&f, i, &a).unwrap(), j, &a).unwrap();
                prop_assert_eq!(ij, ji);
            }
        }
    }

    #[test]
    fn symmetrizers_are_idempotent_up_to_n_factorial((n, f) in n_and_poly()) {
        let nfact = Rational::from_i64((1..=n as i64).product());
        let sym = symmetrize(&f);
        let asym = antisymmetrize(&f);
        prop_assert!(is_symmetric(&sym));
        prop_assert!(is_antisymmetric(&asym));
        prop_assert_eq!(symmetrize(&sym), sym.scale(&nfact));
        prop_assert_eq!(antisymmetrize(&asym), asym.scale(&nfact));
    }

    #[test]
    fn diagram_identities(eta in composition(5, 5)) {
        prop_assert!(check_all(&hook_identities(&eta)).is_ok());
        prop_assert!(check_all(&gen_factorial_identities(&eta)).is_ok());
    }

    #[test]
    fn composition_order_is_strict(eta in composition(3, 3)) {
        let same_modulus = compositions(eta.modulus(), eta.n());
        for nu in &same_modulus {
            let (a, b) = (composition_lt(nu, &eta).unwrap(), composition_lt(&eta, nu).unwrap());
            prop_assert!(!(a && b));
            if nu == &eta {
                prop_assert!(!a);
            }
        }
        prop_assert_eq!(sort_to_partition(&eta).modulus(), eta.modulus());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn built_e_is_an_eigenfunction(eta in composition(3, 3)) {
        prop_assert!(check_e_eigen(&build_e(&eta), &eta).is_ok());
    }
}
