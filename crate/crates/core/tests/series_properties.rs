mod common;

use common::*;
use proptest::prelude::*;
use stabchar::rational::{int, ratio, seeded_rng, Rational};
use stabchar::schur;
use stabchar::series::*;
use stabchar::{part, Basis, FormalSum, Partition};

fn poly(c: &[i64]) -> Series {
    Series::polynomial(c.iter().map(|&x| int(x)).collect()).unwrap()
}

fn series_strategy() -> impl Strategy<Value = Series> {
    prop::collection::vec(small_rational(), 1..=3).prop_map(|mut c| {
        c.insert(0, int(1));
        Series::polynomial(c).unwrap()
    })
}

fn check_duality(p: &Series, n: usize) {
    let q = p.dual(n).unwrap();
    assert_eq!(
        kappa_expansion(&q, n).unwrap(),
        kappa_expansion(p, n).unwrap().omega(),
        "{p}"
    );
    assert!(q.dual(n).unwrap().agrees_through(p, n).unwrap(), "{p}");
}

#[test]
fn duality_on_named_series() {
    let mut rng = seeded_rng(11);
    let random = Series::random_polynomial(&mut rng, 2, false);
    for p in [Series::one(), Series::geom(8), poly(&[1, 1]), random] {
        check_duality(&p, 8);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn duality_on_random_series(p in series_strategy()) {
        let q = p.dual(6).unwrap();
        prop_assert_eq!(kappa_expansion(&q, 6).unwrap(), kappa_expansion(&p, 6).unwrap().omega());
        prop_assert!(q.dual(6).unwrap().agrees_through(&p, 6).unwrap());
    }

    #[test]
    fn omega_of_product_is_product_of_inverse(p in series_strategy()) {
        let n = 6;
        let inv = p.negate_x().reciprocal(n).unwrap();
        let pp = product_expansion(&p, n).unwrap();
        let pinv = product_expansion(&inv, n).unwrap();
        prop_assert_eq!(pp.omega(), pinv.clone());
        // s_λ ↦ (−1)^{|λ|} s_λ turns ∏ 1/p(−xᵢ) into ∏ 1/p(xᵢ)
        let mut signed = FormalSum::zero(Basis::Schur);
        for (l, c) in pinv.total().iter() {
            signed.add_term(l.clone(), c * stabchar::rational::sign_power(l.size()));
        }
        let one = schur::multiply_truncated(&pp.total(), &signed, n).unwrap();
        prop_assert_eq!(one, FormalSum::one(Basis::Schur));
    }

    #[test]
    fn negative_real_roots_give_positive_products(
        roots in prop::collection::vec((1i64..=9, 1i64..=4), 1..=3)
    ) {
        let mut p = Series::one();
        for &(n, d) in &roots {
            let factor = Series::polynomial(vec![int(1), ratio(n, d)]).unwrap();
            p = p.mul(&factor, roots.len()).unwrap();
        }
        let p = Series::polynomial(p.coeffs().to_vec()).unwrap();
        prop_assert!(real_negative_roots(&p).unwrap());
        prop_assert!(is_product_s_positive(&p, 6).unwrap().is_positive());
    }

    #[test]
    fn boundary_comparison_agrees_with_float(a in 0i64..=40, b in -10i64..=60) {
        let (a, b) = (ratio(a, 40), ratio(b, 40));
        let af = a.numer().to_string().parse::<f64>().unwrap() / a.denom().to_string().parse::<f64>().unwrap();
        let bf = b.numer().to_string().parse::<f64>().unwrap() / b.denom().to_string().parse::<f64>().unwrap();
        let edge = quadratic_boundary(af);
        let ord = boundary_comparison(&a, &b).unwrap();
        if (bf - edge).abs() > 1e-9 {
            prop_assert_eq!(ord, bf.partial_cmp(&edge).unwrap());
        }
    }
}

#[test]
fn littlewood_identities_through_twelve() {
    let n = 12;
    let cases: [(Series, fn(&Partition) -> bool); 3] = [
        (Series::one(), Partition::all_even_columns),
        (Series::geom2(n), Partition::all_even_rows),
        (Series::geom(n), |_| true),
    ];
    for (p, rule) in cases {
        let k = kappa_expansion(&p, n).unwrap();
        for lambda in Partition::all_up_to(n) {
            let expected = int(rule(&lambda) as i64);
            assert_eq!(k.coefficient(&lambda).unwrap(), expected, "{p} {lambda}");
        }
    }
}

#[test]
fn product_expansion_matches_evaluation() {
    // ∏ p(xᵢ) = Σ a_λ s_λ(x) in three variables, through the truncation degree
    let p = poly(&[1, 2, -1, 3]);
    let xs = points(3);
    let exact: Rational = xs
        .iter()
        .map(|x| int(1) + int(2) * x - x * x + int(3) * x * x * x)
        .product();
    // a cubic allows at most three columns; shapes with more than three rows
    // vanish in three variables, and all others have size at most 9
    let expansion = product_expansion(&p, 9).unwrap().total();
    assert!(expansion.iter().all(|(l, _)| l.part(0) <= 3));
    assert_eq!(eval_schur(&expansion, &xs), exact);
}

#[test]
fn sturm_flags_only_negative_real_roots() {
    assert!(real_negative_roots(&poly(&[1, 1])).unwrap());
    assert!(real_negative_roots(&poly(&[1, 3, 2])).unwrap());
    assert!(real_negative_roots(&poly(&[1, 3, 3, 1])).unwrap());
    assert!(!real_negative_roots(&poly(&[1, 1, 1])).unwrap());
    assert!(!real_negative_roots(&poly(&[1, -1])).unwrap());
    let v = is_product_s_positive(&poly(&[1, 1, 1]), 8).unwrap();
    assert_eq!(
        v,
        Verdict::Violation {
            shape: part![1, 1, 1],
            coeff: int(-1)
        }
    );
}
