//! Property-based invariants for the exact-arithmetic stack.

use proptest::prelude::*;

use polyconj_core::arith::{Field, PrimeField, Rational, Rationals};
use polyconj_core::factor_fp;
use polyconj_core::factor_qq;
use polyconj_core::numfield::NumberField;
use polyconj_core::poly::{self, Poly};
use polyconj_core::rng::SplitMix64;

const QQ: Rationals = Rationals;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::from_pair(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn rational_poly(max_deg: usize) -> impl Strategy<Value = Poly<Rational>> {
    proptest::collection::vec(-9i64..10, 1..=max_deg + 1)
        .prop_map(|coeffs| poly::from_i64(&QQ, &coeffs))
}

fn nonzero_rational_poly(max_deg: usize) -> impl Strategy<Value = Poly<Rational>> {
    rational_poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    // --- field axioms on randomized triples ---

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        let ab_c = QQ.mul(&QQ.add(&a, &b), &c);
        let ac_bc = QQ.add(&QQ.mul(&a, &c), &QQ.mul(&b, &c));
        prop_assert_eq!(ab_c, ac_bc);
        prop_assert_eq!(QQ.mul(&QQ.mul(&a, &b), &c), QQ.mul(&a, &QQ.mul(&b, &c)));
        prop_assert_eq!(QQ.add(&QQ.add(&a, &b), &c), QQ.add(&a, &QQ.add(&b, &c)));
    }

    #[test]
    fn rational_inverse(a in nonzero_rational()) {
        prop_assert_eq!(QQ.mul(&a, &QQ.inv(&a).unwrap()), Rational::one());
    }

    #[test]
    fn prime_field_axioms(p in proptest::sample::select(vec![2u64, 3, 5, 7, 11, 97]),
                          x in 0i64..100, y in 0i64..100, z in 0i64..100) {
        let f = PrimeField::new(p).unwrap();
        let (a, b, c) = (f.from_i64(x), f.from_i64(y), f.from_i64(z));
        prop_assert_eq!(
            f.mul(&f.add(&a, &b), &c),
            f.add(&f.mul(&a, &c), &f.mul(&b, &c))
        );
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        if !f.is_zero(&a) {
            prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
        }
    }

    #[test]
    fn rational_normalize_idempotent(n in -1000i64..1000, d in 1i64..1000) {
        let r = Rational::from_pair(n, d);
        let again = Rational::new(r.numer().clone(), r.denom().clone()).unwrap();
        prop_assert_eq!(r, again);
    }

    // --- univariate polynomial invariants ---

    #[test]
    fn divmod_round_trip(a in rational_poly(6), b in nonzero_rational_poly(4)) {
        let (q, r) = poly::divmod(&QQ, &a, &b).unwrap();
        let back = poly::add(&QQ, &poly::mul(&QQ, &q, &b), &r);
        prop_assert_eq!(back, a);
        if !r.is_zero() {
            prop_assert!(r.degree().unwrap() < b.degree().unwrap());
        }
    }

    #[test]
    fn gcd_symmetric_and_divides(a in nonzero_rational_poly(5), b in nonzero_rational_poly(5)) {
        let g1 = poly::gcd(&QQ, &a, &b).unwrap();
        let g2 = poly::gcd(&QQ, &b, &a).unwrap();
        prop_assert_eq!(&g1, &g2);
        prop_assert!(poly::rem(&QQ, &a, &g1).unwrap().is_zero());
        prop_assert!(poly::rem(&QQ, &b, &g1).unwrap().is_zero());
    }

    #[test]
    fn resultant_multiplicative(a in nonzero_rational_poly(3),
                                b in nonzero_rational_poly(2),
                                c in nonzero_rational_poly(2)) {
        let bc = poly::mul(&QQ, &b, &c);
        let lhs = poly::resultant(&QQ, &a, &bc).unwrap();
        let rhs = QQ.mul(
            &poly::resultant(&QQ, &a, &b).unwrap(),
            &poly::resultant(&QQ, &a, &c).unwrap(),
        );
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn resultant_zero_iff_common_factor(a in nonzero_rational_poly(4),
                                        b in nonzero_rational_poly(4)) {
        let res = poly::resultant(&QQ, &a, &b).unwrap();
        let g = poly::gcd(&QQ, &a, &b).unwrap();
        prop_assert_eq!(res.is_zero(), !g.is_constant());
    }

    // --- factorization invariants ---

    #[test]
    fn factor_mod_p_multiplies_back(p in proptest::sample::select(vec![2u64, 3, 5, 7, 13]),
                                    coeffs in proptest::collection::vec(0i64..13, 2..8),
                                    seed in any::<u64>()) {
        let field = PrimeField::new(p).unwrap();
        let a = poly::from_i64(&field, &coeffs);
        prop_assume!(!a.is_zero() && a.degree().unwrap() >= 1);
        let factors = factor_fp::factor_mod_p(&field, &a, seed).unwrap();
        let mut back = poly::constant(&field, *a.leading_coefficient().unwrap());
        for (f, m) in &factors {
            prop_assert!(factor_fp::is_irreducible_mod_p(&field, f).unwrap());
            back = poly::mul(&field, &back, &poly::pow(&field, f, *m));
        }
        prop_assert_eq!(back, a);
    }

    #[test]
    fn factor_over_q_multiplies_back(coeffs in proptest::collection::vec(-6i64..7, 2..7),
                                     seed in any::<u64>()) {
        let a = poly::from_i64(&QQ, &coeffs);
        prop_assume!(a.degree().is_some_and(|d| d >= 1));
        let factors = factor_qq::factor_over_q(&a, seed).unwrap();
        let mut back = poly::constant(&QQ, a.leading_coefficient().unwrap().clone());
        for (f, m) in &factors {
            back = poly::mul(&QQ, &back, &poly::pow(&QQ, f, *m));
        }
        prop_assert_eq!(back, a);
    }

    // --- number field invariants ---

    #[test]
    fn norm_multiplicative_in_gaussian_field(ar in -9i64..10, ai in -9i64..10,
                                             br in -9i64..10, bi in -9i64..10) {
        let k = NumberField::new(poly::from_i64(&QQ, &[1, 0, 1]), 0).unwrap();
        let a = k.from_poly(&poly::from_i64(&QQ, &[ar, ai]));
        let b = k.from_poly(&poly::from_i64(&QQ, &[br, bi]));
        prop_assert_eq!(
            k.norm(&k.mul(&a, &b)),
            QQ.mul(&k.norm(&a), &k.norm(&b))
        );
    }

    #[test]
    fn minimal_polynomial_annihilates(coords in proptest::collection::vec(-5i64..6, 4)) {
        let k = NumberField::new(poly::from_i64(&QQ, &[1, 0, 0, 0, 1]), 0).unwrap();
        let a = k.from_poly(&poly::from_i64(&QQ, &coords));
        let mp = k.minimal_polynomial(&a);
        let value = poly::eval(&k, &k.lift_poly(&mp), &a);
        prop_assert!(k.is_zero(&value));
        prop_assert_eq!(k.degree() % mp.degree().unwrap(), 0);
        if mp.degree().unwrap() > 1 {
            prop_assert!(factor_qq::is_irreducible_over_q(&mp).unwrap());
        }
    }
}

// Deterministic randomized checks that do not fit proptest's shrinking
// model well (they build multi-second structures); driven by SplitMix.

#[test]
fn factor_product_of_two_random_irreducibles() {
    let mut rng = SplitMix64::new(2024);
    let mut done = 0;
    while done < 25 {
        let da = 1 + (rng.below(3) as usize);
        let db = 1 + (rng.below(3) as usize);
        let mk = |rng: &mut SplitMix64, d: usize| {
            let mut coeffs: Vec<i64> = (0..d).map(|_| rng.below(9) as i64 - 4).collect();
            coeffs.push(1);
            poly::from_i64(&QQ, &coeffs)
        };
        let f = mk(&mut rng, da);
        let g = mk(&mut rng, db);
        if f == g {
            continue;
        }
        if !factor_qq::is_irreducible_over_q(&f).unwrap()
            || !factor_qq::is_irreducible_over_q(&g).unwrap()
        {
            continue;
        }
        let product = poly::mul(&QQ, &f, &g);
        let factors = factor_qq::factor_over_q(&product, rng.next_u64()).unwrap();
        let mut expected = vec![(f.clone(), 1), (g.clone(), 1)];
        expected.sort_by(|(a, _), (b, _)| a.canonical_cmp(b));
        assert_eq!(factors, expected);
        done += 1;
    }
}

#[test]
fn values_are_shareable_across_threads() {
    // Immutable values, freely sendable: the whole stack is Send + Sync.
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Rational>();
    assert_send_sync::<polyconj_core::PrimeFieldElement>();
    assert_send_sync::<Poly<Rational>>();
    assert_send_sync::<NumberField>();
    assert_send_sync::<polyconj_core::NFElement>();
    assert_send_sync::<polyconj_core::SplittingField>();
    assert_send_sync::<polyconj_core::ConjugateSetting<Rationals>>();
    assert_send_sync::<polyconj_core::ConjugateSetting<PrimeField>>();
    assert_send_sync::<polyconj_core::MonogenicRing>();

    // And verification really can run in parallel.
    let f = poly::from_i64(&QQ, &[1, 1, 1, 1, 1]);
    let m = polyconj_core::build_splitting_field(&f, 0).unwrap();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..4u64)
            .map(|i| {
                let m = &m;
                scope.spawn(move || {
                    let setting = polyconj_core::ConjugateSetting::over_rationals(
                        m,
                        &polyconj_core::DivisorSpec::RootIndices(vec![i as usize]),
                        i,
                    )
                    .unwrap();
                    setting.verify_theorem().unwrap().pass()
                })
            })
            .collect();
        for h in handles {
            assert!(h.join().unwrap());
        }
    });
}

#[test]
fn tower_degree_multiplies() {
    // Q(sqrt2) then sqrt3: degrees 2 * 2 = 4; adjoining a cube root of 5
    // to Q gives 3.
    let q = NumberField::rationals();
    let sqrt2 = q.adjoin_root(&q.lift_poly(&poly::from_i64(&QQ, &[-2, 0, 1]))).unwrap();
    assert_eq!(sqrt2.field.degree(), 2);
    let rel = sqrt2.field.lift_poly(&poly::from_i64(&QQ, &[-3, 0, 1]));
    let both = sqrt2.field.adjoin_root(&rel).unwrap();
    assert_eq!(both.field.degree(), 4);

    let cbrt5 = q.adjoin_root(&q.lift_poly(&poly::from_i64(&QQ, &[-5, 0, 0, 1]))).unwrap();
    assert_eq!(cbrt5.field.degree(), 3);
}

#[test]
fn trager_factors_are_irreducible_and_exact() {
    let k = NumberField::new(poly::from_i64(&QQ, &[1, 0, 1]), 0).unwrap();
    let mut rng = SplitMix64::new(7);
    for _ in 0..10 {
        let coeffs: Vec<i64> = (0..4).map(|_| rng.below(7) as i64 - 3).collect();
        let a = poly::add(
            &k,
            &k.lift_poly(&poly::from_i64(&QQ, &coeffs)),
            &poly::monomial(&k, k.one(), 4),
        );
        let factors = k.trager_factor(&a, rng.next_u64()).unwrap();
        let mut back = poly::one(&k);
        for (f, m) in &factors {
            back = poly::mul(&k, &back, &poly::pow(&k, f, *m));
            // Re-factoring an irreducible factor returns itself.
            let again = k.trager_factor(f, 0).unwrap();
            assert_eq!(again, vec![(f.clone(), 1)]);
        }
        assert_eq!(back, a);
    }
}
