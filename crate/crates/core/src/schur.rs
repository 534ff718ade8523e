//! The type-A ring: Littlewood–Richardson coefficients, Schur products, skew
//! expansions and a ring-generic dual Jacobi–Trudi evaluator.
//!
//! Two independent LR routines live here. [`skew_expand`] fills the skew
//! diagram `λ/μ` cell by cell in reading order, keeping the reverse reading
//! word a lattice word. [`multiply`] grows `μ` by one horizontal strip per
//! row of `ν`. The test suite checks each against the other.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::One;

use crate::cache::{product_table, skew_table, Expansion};
use crate::error::{Error, Result};
use crate::formal::{Basis, FormalSum};
use crate::partition::Partition;
use crate::rational::Rational;

/// `c^λ_{μν}`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    skew_lr(lambda, mu)
        .iter()
        .find(|(p, _)| p == nu)
        .map_or(0, |(_, c)| *c)
}

/// `Σ_ν c^λ_{μν} ν`, memoized. Empty when `μ ⊄ λ`.
pub fn skew_lr(lambda: &Partition, mu: &Partition) -> Expansion {
    if !lambda.contains(mu) {
        return Arc::new(Vec::new());
    }
    if mu.is_empty() {
        return Arc::new(vec![(lambda.clone(), 1)]);
    }
    if lambda == mu {
        return Arc::new(vec![(Partition::empty(), 1)]);
    }
    skew_table().get_or_insert_with(&(lambda.clone(), mu.clone()), || {
        Arc::new(enumerate_skew(lambda, mu))
    })
}

/// `Σ_λ c^λ_{μν} λ`, memoized.
pub fn product_lr(mu: &Partition, nu: &Partition) -> Expansion {
    if nu.is_empty() {
        return Arc::new(vec![(mu.clone(), 1)]);
    }
    if mu.is_empty() {
        return Arc::new(vec![(nu.clone(), 1)]);
    }
    // strip insertion is cheaper when the inserted shape is the smaller one
    let (big, small) = if mu >= nu { (mu, nu) } else { (nu, mu) };
    product_table().get_or_insert_with(&(big.clone(), small.clone()), || {
        Arc::new(enumerate_product(big, small))
    })
}

/// The skew Schur function `s_{λ/μ}` in the Schur basis.
pub fn skew_expand(lambda: &Partition, mu: &Partition) -> FormalSum {
    expansion_to_sum(Basis::Schur, &skew_lr(lambda, mu))
}

/// Schur-basis product, bilinear in both arguments.
pub fn multiply(a: &FormalSum, b: &FormalSum) -> Result<FormalSum> {
    multiply_truncated(a, b, usize::MAX)
}

/// Schur product keeping only terms of degree `≤ max_degree`.
pub fn multiply_truncated(a: &FormalSum, b: &FormalSum, max_degree: usize) -> Result<FormalSum> {
    require_schur(a)?;
    require_schur(b)?;
    Ok(FormalSum::bilinear(Basis::Schur, a, b, |mu, nu| {
        (mu.size() + nu.size() <= max_degree).then(|| product_lr(mu, nu))
    }))
}

/// The involution `s_λ ↦ s_{λ'}`.
pub fn omega(a: &FormalSum) -> FormalSum {
    a.omega()
}

/// `h_n = s_(n)`.
pub fn h(n: usize) -> FormalSum {
    FormalSum::basis_element(Basis::Schur, Partition::row(n))
}

/// `e_n = s_(1^n)`.
pub fn e(n: usize) -> FormalSum {
    FormalSum::basis_element(Basis::Schur, Partition::column(n))
}

/// Evaluates `det(gen(λ'_i − i + j))` over an arbitrary commutative ring of
/// formal sums. `gen` is only called for nonnegative indices; negative
/// indices are the zero entry and every permutation touching one is pruned.
/// `gen(0)` must be the ring unit.
pub fn dual_jacobi_trudi<G, M>(lambda: &Partition, gen: G, mult: M) -> Result<FormalSum>
where
    G: FnMut(usize) -> Result<FormalSum>,
    M: FnMut(&FormalSum, &FormalSum) -> Result<FormalSum>,
{
    dual_jacobi_trudi_pruned(lambda, gen, mult, |_, _| true)
}

/// [`dual_jacobi_trudi`] with a term filter applied after each matrix row.
///
/// `keep(ν, rows_left)` may discard a partial-product term `ν` when no
/// product with `rows_left` further entries can reach the terms the caller
/// is interested in. The result is then exact only on those terms.
pub fn dual_jacobi_trudi_pruned<G, M, K>(
    lambda: &Partition,
    mut gen: G,
    mut mult: M,
    mut keep: K,
) -> Result<FormalSum>
where
    G: FnMut(usize) -> Result<FormalSum>,
    M: FnMut(&FormalSum, &FormalSum) -> Result<FormalSum>,
    K: FnMut(&Partition, usize) -> bool,
{
    let conj = lambda.transpose();
    let r = conj.len();
    if r > 63 {
        return Err(Error::Precondition(format!(
            "{r} columns exceed the determinant limit"
        )));
    }
    let unit = gen(0)?;
    let mut entries: BTreeMap<usize, FormalSum> = BTreeMap::new();
    entries.insert(0, unit.clone());

    // permutations are built row by row; `mask` records the columns taken
    let mut layer: BTreeMap<u64, FormalSum> = BTreeMap::new();
    layer.insert(0, unit);
    for i in 0..r {
        // row i+1 only reaches columns j ≥ i+1 − λ'_{i+1}, and later rows
        // reach even fewer, so a lower column left free can never be filled
        let needed = if i + 1 < r {
            (1u64 << (i + 1).saturating_sub(conj.part(i + 1))) - 1
        } else {
            0
        };
        let mut next: BTreeMap<u64, FormalSum> = BTreeMap::new();
        for (mask, acc) in &layer {
            for j in 0..r {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let k = conj.part(i) as isize - i as isize + j as isize;
                if k < 0 {
                    continue;
                }
                if (mask | (1 << j)) & needed != needed {
                    continue;
                }
                let k = k as usize;
                if !entries.contains_key(&k) {
                    entries.insert(k, gen(k)?);
                }
                let entry = &entries[&k];
                if entry.is_zero() {
                    continue;
                }
                let inversions = (mask >> (j + 1)).count_ones();
                let mut term = mult(acc, entry)?;
                if inversions % 2 == 1 {
                    term = term.neg();
                }
                let rows_left = r - i - 1;
                term = term.filter(|nu| keep(nu, rows_left));
                let slot = next
                    .entry(mask | (1 << j))
                    .or_insert_with(|| FormalSum::zero(term.basis()));
                slot.add_scaled(&term, &Rational::one())?;
            }
        }
        next.retain(|_, v| !v.is_zero());
        layer = next;
    }
    Ok(layer
        .into_values()
        .next()
        .unwrap_or_else(|| FormalSum::zero(entries[&0].basis())))
}

fn require_schur(a: &FormalSum) -> Result<()> {
    if a.basis() != Basis::Schur {
        return Err(Error::BasisMismatch(a.basis(), Basis::Schur));
    }
    Ok(())
}

pub(crate) fn expansion_to_sum(basis: Basis, exp: &[(Partition, u64)]) -> FormalSum {
    FormalSum::from_terms(
        basis,
        exp.iter()
            .map(|(p, c)| (p.clone(), Rational::from_integer((*c).into()))),
    )
}

/// Fills `λ/μ` in reading order (rows top to bottom, each right to left).
fn enumerate_skew(lambda: &Partition, mu: &Partition) -> Vec<(Partition, u64)> {
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|r| (mu.part(r)..lambda.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u8>> = (0..lambda.len()).map(|r| vec![0; lambda.part(r)]).collect();
    let mut counts = vec![0usize; lambda.len() + 2];
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    fill_skew(lambda, mu, &cells, 0, &mut grid, &mut counts, &mut out);
    out.into_iter().collect()
}

fn fill_skew(
    lambda: &Partition,
    mu: &Partition,
    cells: &[(usize, usize)],
    idx: usize,
    grid: &mut [Vec<u8>],
    counts: &mut [usize],
    out: &mut BTreeMap<Partition, u64>,
) {
    if idx == cells.len() {
        let content: Vec<usize> = counts[1..].iter().copied().take_while(|&c| c > 0).collect();
        *out.entry(Partition::from_parts_unchecked(content))
            .or_insert(0) += 1;
        return;
    }
    let (r, c) = cells[idx];
    let mut hi = counts[1..].iter().take_while(|&&c| c > 0).count() + 1;
    if c + 1 < lambda.part(r) {
        hi = hi.min(grid[r][c + 1] as usize);
    }
    let lo = if r > 0 && c >= mu.part(r - 1) {
        grid[r - 1][c] as usize + 1
    } else {
        1
    };
    for v in lo..=hi {
        if v > 1 && counts[v] + 1 > counts[v - 1] {
            continue;
        }
        grid[r][c] = v as u8;
        counts[v] += 1;
        fill_skew(lambda, mu, cells, idx + 1, grid, counts, out);
        counts[v] -= 1;
    }
    grid[r][c] = 0;
}

/// Adds the rows of `nu` to `mu` one horizontal strip at a time.
fn enumerate_product(mu: &Partition, nu: &Partition) -> Vec<(Partition, u64)> {
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    let shape: Vec<usize> = mu.parts().to_vec();
    // letter_rows[i][r]: number of cells labelled i+1 in row r
    let mut letter_rows: Vec<Vec<usize>> = Vec::new();
    add_letter(nu, 0, shape, &mut letter_rows, &mut out);
    out.into_iter().collect()
}

fn add_letter(
    nu: &Partition,
    letter: usize,
    shape: Vec<usize>,
    letter_rows: &mut Vec<Vec<usize>>,
    out: &mut BTreeMap<Partition, u64>,
) {
    if letter == nu.len() {
        *out.entry(Partition::from_parts_unchecked(shape))
            .or_insert(0) += 1;
        return;
    }
    let rows = shape.len() + 1;
    let mut added = vec![0usize; rows];
    strip_rows(
        nu,
        letter,
        &shape,
        0,
        nu.part(letter),
        0,
        0,
        &mut added,
        letter_rows,
        out,
    );
}

#[allow(clippy::too_many_arguments)]
fn strip_rows(
    nu: &Partition,
    letter: usize,
    shape: &[usize],
    row: usize,
    remaining: usize,
    cum_this: usize,
    cum_prev_before: usize,
    added: &mut Vec<usize>,
    letter_rows: &mut Vec<Vec<usize>>,
    out: &mut BTreeMap<Partition, u64>,
) {
    if remaining == 0 {
        let mut new_shape: Vec<usize> = shape.to_vec();
        new_shape.push(0);
        for (r, a) in added.iter().enumerate() {
            new_shape[r] += a;
        }
        while new_shape.last() == Some(&0) {
            new_shape.pop();
        }
        letter_rows.push(added.clone());
        add_letter(nu, letter + 1, new_shape, letter_rows, out);
        letter_rows.pop();
        return;
    }
    if row > shape.len() {
        return;
    }
    let current = shape.get(row).copied().unwrap_or(0);
    // horizontal strip: a row may not pass the old length of the row above
    let room = if row == 0 {
        remaining
    } else {
        shape[row - 1] - current
    };
    // lattice: letters of this kind in rows ≤ row stay within the previous
    // letter's count in rows < row
    let lattice_room = if letter == 0 {
        usize::MAX
    } else {
        cum_prev_before.saturating_sub(cum_this)
    };
    let max_here = room.min(remaining).min(lattice_room);
    let prev_here = if letter == 0 {
        0
    } else {
        letter_rows[letter - 1].get(row).copied().unwrap_or(0)
    };
    for n in (0..=max_here).rev() {
        added[row] = n;
        strip_rows(
            nu,
            letter,
            shape,
            row + 1,
            remaining - n,
            cum_this + n,
            cum_prev_before + prev_here,
            added,
            letter_rows,
            out,
        );
    }
    added[row] = 0;
}
