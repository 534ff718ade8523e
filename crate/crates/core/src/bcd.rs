//! The stable ring shared by types B, C and D.
//!
//! Structure constants are the Newell–Littlewood numbers
//!
//! ```text
//! d^λ_{μν} = Σ_{α,β,γ} c^μ_{αβ} c^ν_{αγ} c^λ_{βγ}
//! ```
//!
//! so that `sp_μ · sp_ν = Σ_α s_{μ/α} · s_{ν/α}` read back in the `sp`
//! basis. The same constants serve the `o` basis.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cache::{bcd_product_table, nl_table, Expansion};
use crate::error::{Error, Result};
use crate::formal::{Basis, FormalSum};
use crate::partition::Partition;
use crate::rational::Rational;
use crate::schur::{lr_coefficient, product_lr, skew_lr};

/// `d^λ_{μν}`, memoized on the unordered triple.
pub fn newell_littlewood(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let (l, m, n) = (lambda.size(), mu.size(), nu.size());
    // the formula is symmetric in the three arguments, so every size obeys
    // the triangle inequality and the total is even
    if (l + m + n) % 2 == 1 || l > m + n || m > l + n || n > l + m {
        return 0;
    }
    let mut key = [lambda.clone(), mu.clone(), nu.clone()];
    key.sort();
    nl_table().get_or_insert_with(&key, || nl_triple_sum(&key[0], &key[1], &key[2]))
}

fn nl_triple_sum(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    // |α| = (|μ| + |ν| − |λ|) / 2 is forced
    let alpha_size = (mu.size() + nu.size() - lambda.size()) / 2;
    let mut total = 0;
    for alpha in intersection(mu, nu).subpartitions() {
        if alpha.size() != alpha_size {
            continue;
        }
        let left = skew_lr(mu, &alpha);
        let right = skew_lr(nu, &alpha);
        for (beta, cb) in left.iter() {
            if !lambda.contains(beta) {
                continue;
            }
            for (gamma, cg) in right.iter() {
                let c = lr_coefficient(lambda, beta, gamma);
                total += cb * cg * c;
            }
        }
    }
    total
}

/// Row-wise minimum, the largest diagram inside both arguments.
fn intersection(a: &Partition, b: &Partition) -> Partition {
    Partition::from_unsorted(
        (0..a.len().min(b.len()))
            .map(|i| a.part(i).min(b.part(i)))
            .collect(),
    )
}

/// `sp_μ · sp_ν` as an integer expansion, memoized.
pub fn bcd_product_lr(mu: &Partition, nu: &Partition) -> Expansion {
    if mu.is_empty() {
        return Arc::new(vec![(nu.clone(), 1)]);
    }
    if nu.is_empty() {
        return Arc::new(vec![(mu.clone(), 1)]);
    }
    let (a, b) = if mu >= nu { (mu, nu) } else { (nu, mu) };
    bcd_product_table().get_or_insert_with(&(a.clone(), b.clone()), || {
        let mut acc: BTreeMap<Partition, u64> = BTreeMap::new();
        for alpha in intersection(a, b).subpartitions() {
            let left = skew_lr(a, &alpha);
            let right = skew_lr(b, &alpha);
            for (beta, cb) in left.iter() {
                for (gamma, cg) in right.iter() {
                    for (lambda, c) in product_lr(beta, gamma).iter() {
                        *acc.entry(lambda.clone()).or_insert(0) += cb * cg * c;
                    }
                }
            }
        }
        Arc::new(acc.into_iter().collect())
    })
}

/// Product in the stable B/C/D ring. Both operands must carry the same `sp`
/// or `o` tag.
pub fn multiply(a: &FormalSum, b: &FormalSum) -> Result<FormalSum> {
    check(a, b)?;
    Ok(FormalSum::bilinear(a.basis(), a, b, |mu, nu| {
        Some(bcd_product_lr(mu, nu))
    }))
}

/// Coefficient of `target` in `a · b`, without forming the full product.
pub fn product_coefficient(a: &FormalSum, b: &FormalSum, target: &Partition) -> Result<Rational> {
    check(a, b)?;
    let mut total = Rational::from_integer(0.into());
    for (mu, x) in a.iter() {
        for (nu, y) in b.iter() {
            let d = newell_littlewood(target, mu, nu);
            if d != 0 {
                total += x * y * Rational::from_integer(d.into());
            }
        }
    }
    Ok(total)
}

fn check(a: &FormalSum, b: &FormalSum) -> Result<()> {
    if !a.basis().is_bcd() {
        return Err(Error::BasisMismatch(a.basis(), Basis::Sp));
    }
    if a.basis() != b.basis() {
        return Err(Error::BasisMismatch(a.basis(), b.basis()));
    }
    Ok(())
}
