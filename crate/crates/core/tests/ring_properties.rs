mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use stabchar::bcd::{self, newell_littlewood};
use stabchar::rational::seeded_rng;
use stabchar::schur::{self, lr_coefficient};
use stabchar::{Basis, FormalSum, Partition};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn schur_ring_axioms(
        a in formal_sum(Basis::Schur, 3, 3),
        b in formal_sum(Basis::Schur, 3, 3),
        c in formal_sum(Basis::Schur, 2, 2),
    ) {
        let m = |x: &FormalSum, y: &FormalSum| schur::multiply(x, y).unwrap();
        prop_assert_eq!(m(&a, &b), m(&b, &a));
        prop_assert_eq!(m(&m(&a, &b), &c), m(&a, &m(&b, &c)));
        prop_assert_eq!(m(&a, &b.add(&c).unwrap()), m(&a, &b).add(&m(&a, &c)).unwrap());
        prop_assert_eq!(m(&a, &FormalSum::one(Basis::Schur)), a.clone());
        prop_assert!(m(&a, &FormalSum::zero(Basis::Schur)).is_zero());
    }

    #[test]
    fn omega_is_a_ring_automorphism(
        a in formal_sum(Basis::Schur, 4, 3),
        b in formal_sum(Basis::Schur, 4, 3),
    ) {
        let ab = schur::multiply(&a, &b).unwrap();
        prop_assert_eq!(schur::omega(&ab), schur::multiply(&a.omega(), &b.omega()).unwrap());
        prop_assert_eq!(a.omega().omega(), a);
    }

    #[test]
    fn bcd_ring_axioms(
        a in formal_sum(Basis::Sp, 3, 3),
        b in formal_sum(Basis::Sp, 3, 3),
        c in formal_sum(Basis::Sp, 2, 2),
    ) {
        let m = |x: &FormalSum, y: &FormalSum| bcd::multiply(x, y).unwrap();
        prop_assert_eq!(m(&a, &b), m(&b, &a));
        prop_assert_eq!(m(&a, &b.add(&c).unwrap()), m(&a, &b).add(&m(&a, &c)).unwrap());
        prop_assert_eq!(m(&a, &FormalSum::one(Basis::Sp)), a.clone());
        let o = |x: &FormalSum| x.relabel(Basis::O);
        prop_assert_eq!(bcd::multiply(&o(&a), &o(&b)).unwrap(), o(&m(&a, &b)));
    }

    #[test]
    fn lr_coefficients_are_symmetric(
        mu in partition_up_to(4),
        nu in partition_up_to(4),
    ) {
        for lambda in Partition::all_of(mu.size() + nu.size()) {
            let c = lr_coefficient(&lambda, &mu, &nu);
            prop_assert_eq!(c, lr_coefficient(&lambda, &nu, &mu));
            prop_assert_eq!(c, lr_coefficient(&lambda.transpose(), &mu.transpose(), &nu.transpose()));
        }
    }

    #[test]
    fn coefficient_extraction_matches_product(
        a in formal_sum(Basis::Sp, 3, 3),
        b in formal_sum(Basis::Sp, 3, 3),
        target in partition_up_to(5),
    ) {
        let full = bcd::multiply(&a, &b).unwrap();
        prop_assert_eq!(bcd::product_coefficient(&a, &b, &target).unwrap(), full.coefficient(&target));
    }
}

#[test]
fn newell_littlewood_top_degree_is_lr() {
    for n in 0..=8 {
        for m in 0..=n {
            for mu in Partition::all_of(m) {
                for nu in Partition::all_of(n - m) {
                    for lambda in Partition::all_of(n) {
                        assert_eq!(
                            newell_littlewood(&lambda, &mu, &nu),
                            lr_coefficient(&lambda, &mu, &nu),
                            "{lambda} {mu} {nu}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn newell_littlewood_parity_and_symmetry() {
    let shapes = Partition::all_up_to(5);
    for l in &shapes {
        for m in &shapes {
            for n in &shapes {
                let d = newell_littlewood(l, m, n);
                if (l.size() + m.size() + n.size()) % 2 == 1 {
                    assert_eq!(d, 0);
                }
                assert_eq!(d, newell_littlewood(m, l, n));
                assert_eq!(d, newell_littlewood(n, m, l));
                assert_eq!(d, newell_littlewood(l, n, m));
            }
        }
    }
}

#[test]
fn newell_littlewood_unit() {
    let shapes = Partition::all_up_to(5);
    let empty = Partition::empty();
    for m in &shapes {
        for n in &shapes {
            assert_eq!(
                newell_littlewood(&empty, m, n),
                u64::from(m == n),
                "{m} {n}"
            );
        }
    }
}

#[test]
fn bcd_multiplication_is_associative_on_seeded_triples() {
    let shapes = Partition::all_up_to(4);
    let mut rng = seeded_rng(2024);
    for _ in 0..100 {
        let mut pick =
            || FormalSum::basis_element(Basis::Sp, shapes[rng.gen_range(0..shapes.len())].clone());
        let (a, b, c) = (pick(), pick(), pick());
        let ab_c = bcd::multiply(&bcd::multiply(&a, &b).unwrap(), &c).unwrap();
        let a_bc = bcd::multiply(&a, &bcd::multiply(&b, &c).unwrap()).unwrap();
        assert_eq!(ab_c, a_bc, "{a} {b} {c}");
    }
}

#[test]
fn ring_operations_reject_mixed_bases() {
    let s = FormalSum::one(Basis::Schur);
    let sp = FormalSum::one(Basis::Sp);
    let o = FormalSum::one(Basis::O);
    assert!(schur::multiply(&s, &sp).is_err());
    assert!(bcd::multiply(&sp, &o).is_err());
    assert!(bcd::multiply(&s, &s).is_err());
}
