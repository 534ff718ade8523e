#![allow(dead_code)]

use num_traits::{One, Zero};
use proptest::prelude::*;
use stabchar::rational::{int, Rational};
use stabchar::{Basis, FormalSum, Partition};

/// Exact determinant by Gaussian elimination with row swaps.
pub fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut out = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            out = -out;
        }
        out *= m[c][c].clone();
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let v = &f * &m[c][k];
                m[r][k] -= v;
            }
        }
    }
    out
}

fn pow(x: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// `s_λ(x₁, …, x_n)` as a ratio of alternants.
pub fn schur_poly(lambda: &Partition, xs: &[Rational]) -> Rational {
    let n = xs.len();
    if lambda.len() > n {
        return Rational::zero();
    }
    let alt = |shift: &dyn Fn(usize) -> i64| {
        det(xs
            .iter()
            .map(|x| (0..n).map(|j| pow(x, shift(j))).collect())
            .collect())
    };
    alt(&|j| (lambda.part(j) + n - 1 - j) as i64) / alt(&|j| (n - 1 - j) as i64)
}

/// The irreducible `Sp(2n)` character with highest weight `λ`, `n = xs.len()`.
pub fn sp_char(lambda: &Partition, xs: &[Rational]) -> Rational {
    let n = xs.len();
    assert!(lambda.len() <= n);
    let alt = |shift: &dyn Fn(usize) -> i64| {
        det(xs
            .iter()
            .map(|x| {
                (0..n)
                    .map(|j| pow(x, shift(j)) - pow(x, -shift(j)))
                    .collect()
            })
            .collect())
    };
    alt(&|j| (lambda.part(j) + n - j) as i64) / alt(&|j| (n - j) as i64)
}

/// The irreducible `SO(2n+1)` character at eigenvalues `tᵢ²`, `n = ts.len()`.
pub fn so_odd_char(lambda: &Partition, ts: &[Rational]) -> Rational {
    let n = ts.len();
    assert!(lambda.len() <= n);
    let alt = |shift: &dyn Fn(usize) -> i64| {
        det(ts
            .iter()
            .map(|t| {
                (0..n)
                    .map(|j| pow(t, shift(j)) - pow(t, -shift(j)))
                    .collect()
            })
            .collect())
    };
    alt(&|j| (2 * (lambda.part(j) + n - j) - 1) as i64) / alt(&|j| (2 * (n - j) - 1) as i64)
}

/// Distinct evaluation points away from `±1`.
pub fn points(n: usize) -> Vec<Rational> {
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        .iter()
        .take(n)
        .map(|&p| int(p))
        .collect()
}

/// Schur sum evaluated at `xs`.
pub fn eval_schur(a: &FormalSum, xs: &[Rational]) -> Rational {
    assert_eq!(a.basis(), Basis::Schur);
    a.iter().map(|(l, c)| c * schur_poly(l, xs)).sum()
}

pub fn eval_sp(a: &FormalSum, xs: &[Rational]) -> Rational {
    a.iter().map(|(l, c)| c * sp_char(l, xs)).sum()
}

pub fn eval_so(a: &FormalSum, ts: &[Rational]) -> Rational {
    a.iter().map(|(l, c)| c * so_odd_char(l, ts)).sum()
}

pub fn partition_up_to(n: usize) -> impl Strategy<Value = Partition> {
    prop::sample::select(Partition::all_up_to(n))
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| stabchar::rational::ratio(n, d))
}

/// Formal sums with a few terms of size at most `n`.
pub fn formal_sum(basis: Basis, n: usize, terms: usize) -> impl Strategy<Value = FormalSum> {
    prop::collection::vec((partition_up_to(n), small_rational()), 0..=terms)
        .prop_map(move |ts| FormalSum::from_terms(basis, ts))
}
