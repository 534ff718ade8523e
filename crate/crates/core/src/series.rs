//! Power series `p(x) = 1 + a₁x + a₂x² + ⋯`, the Schur expansions of
//! `∏ p(xᵢ)` and `κ_p = ∏ p(xᵢ) / ∏_{i<j} (1 − xᵢxⱼ)`, and positivity tests.
//!
//! A [`Series`] is either an exact polynomial or a series known through a
//! finite order. Every routine that needs coefficients past the known order
//! fails with [`Error::Truncated`] instead of padding with zeros.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::formal::{Basis, FormalSum};
use crate::partition::Partition;
use crate::rational::{self, Rational};
use crate::schur;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    /// A polynomial; coefficients past the stored ones are zero.
    Exact,
    /// Coefficients are known through this order only.
    Through(usize),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
    precision: Precision,
}

impl Series {
    /// The polynomial with the given coefficients, constant term first.
    pub fn polynomial(mut coeffs: Vec<Rational>) -> Result<Series> {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        check_constant(&coeffs)?;
        Ok(Series {
            coeffs,
            precision: Precision::Exact,
        })
    }

    /// `1 + r₁x + … + r_d x^d` with seeded random coefficients; only even
    /// powers when `even` is set.
    pub fn random_polynomial<R: Rng>(rng: &mut R, degree: usize, even: bool) -> Series {
        let coeffs = (0..=degree)
            .map(|k| match k {
                0 => Rational::one(),
                _ if even && k % 2 == 1 => Rational::zero(),
                _ => rational::random(rng),
            })
            .collect();
        Series::polynomial(coeffs).expect("constant term is 1")
    }

    /// A series known through order `coeffs.len() − 1`.
    pub fn truncated(coeffs: Vec<Rational>) -> Result<Series> {
        check_constant(&coeffs)?;
        let n = coeffs.len() - 1;
        Ok(Series {
            coeffs,
            precision: Precision::Through(n),
        })
    }

    pub fn one() -> Series {
        Series {
            coeffs: vec![Rational::one()],
            precision: Precision::Exact,
        }
    }

    /// `1/(1 − x)` through `order`.
    pub fn geom(order: usize) -> Series {
        Series {
            coeffs: vec![Rational::one(); order + 1],
            precision: Precision::Through(order),
        }
    }

    /// `1/(1 − x²)` through `order`.
    pub fn geom2(order: usize) -> Series {
        let coeffs = (0..=order)
            .map(|k| {
                if k % 2 == 0 {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Series {
            coeffs,
            precision: Precision::Through(order),
        }
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    /// Highest order with known coefficients; `None` for polynomials.
    pub fn order(&self) -> Option<usize> {
        match self.precision {
            Precision::Exact => None,
            Precision::Through(n) => Some(n),
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.precision == Precision::Exact
    }

    /// Stored coefficients, constant term first.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Result<Rational> {
        match self.precision {
            Precision::Exact => Ok(self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)),
            Precision::Through(n) if k <= n => Ok(self.coeffs[k].clone()),
            Precision::Through(n) => Err(Error::Truncated {
                needed: k,
                available: n,
            }),
        }
    }

    pub fn require_order(&self, n: usize) -> Result<()> {
        match self.precision {
            Precision::Through(m) if m < n => Err(Error::Truncated {
                needed: n,
                available: m,
            }),
            _ => Ok(()),
        }
    }

    /// Known through order `n`; polynomials are cut as well.
    pub fn truncate(&self, n: usize) -> Result<Series> {
        self.require_order(n)?;
        let coeffs = (0..=n).map(|k| self.coeff(k)).collect::<Result<_>>()?;
        Ok(Series {
            coeffs,
            precision: Precision::Through(n),
        })
    }

    /// Whether the two series agree on every coefficient through order `n`.
    pub fn agrees_through(&self, other: &Series, n: usize) -> Result<bool> {
        for k in 0..=n {
            if self.coeff(k)? != other.coeff(k)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `p(−x)`.
    pub fn negate_x(&self) -> Series {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        Series {
            coeffs,
            precision: self.precision,
        }
    }

    /// `1/p(x)` through `order`.
    pub fn reciprocal(&self, order: usize) -> Result<Series> {
        self.require_order(order)?;
        let a: Vec<Rational> = (0..=order).map(|k| self.coeff(k)).collect::<Result<_>>()?;
        let mut q = vec![Rational::one()];
        for n in 1..=order {
            let s: Rational = (1..=n).map(|k| &a[k] * &q[n - k]).sum();
            q.push(-s);
        }
        Series::truncated(q)
    }

    /// Product through `order`.
    pub fn mul(&self, other: &Series, order: usize) -> Result<Series> {
        let a: Vec<Rational> = (0..=order).map(|k| self.coeff(k)).collect::<Result<_>>()?;
        let b: Vec<Rational> = (0..=order).map(|k| other.coeff(k)).collect::<Result<_>>()?;
        let c = (0..=order)
            .map(|n| (0..=n).map(|k| &a[k] * &b[n - k]).sum())
            .collect();
        Series::truncated(c)
    }

    /// The dual series `q(x) = 1 / ((1 − x²) p(−x))` through `order`.
    pub fn dual(&self, order: usize) -> Result<Series> {
        self.require_order(order)?;
        let one_minus_x2 =
            Series::polynomial(vec![Rational::one(), Rational::zero(), -Rational::one()])?;
        self.negate_x().mul(&one_minus_x2, order)?.reciprocal(order)
    }

    /// Only even powers of `x` are nonzero.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// Parses a preset (`one`, `geom`, `geom2`) or a comma-separated list of
    /// rationals starting with `1`. Presets that are not polynomials are
    /// produced through `order`.
    pub fn parse(text: &str, order: usize) -> Result<Series> {
        match text.trim() {
            "one" => Ok(Series::one()),
            "geom" => Ok(Series::geom(order)),
            "geom2" => Ok(Series::geom2(order)),
            t => {
                let coeffs = t
                    .split(',')
                    .map(rational::parse)
                    .collect::<Result<Vec<_>>>()?;
                Series::polynomial(coeffs)
            }
        }
    }
}

fn check_constant(coeffs: &[Rational]) -> Result<()> {
    match coeffs.first() {
        Some(c) if c.is_one() => Ok(()),
        Some(c) => Err(Error::Parse(format!(
            "constant term must be 1, got {}",
            rational::to_text(c)
        ))),
        None => Err(Error::Parse("empty series".into())),
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.coeffs.iter().map(rational::to_text).collect();
        f.write_str(&text.join(","))?;
        if let Precision::Through(n) = self.precision {
            write!(f, " + O(x^{})", n + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A Schur expansion graded by degree, exact through `cutoff`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaExpansion {
    cutoff: usize,
    graded: Vec<FormalSum>,
}

impl KappaExpansion {
    fn from_sum(sum: &FormalSum, cutoff: usize) -> KappaExpansion {
        let graded = (0..=cutoff).map(|d| sum.component(d)).collect();
        KappaExpansion { cutoff, graded }
    }

    /// `κ₁ = Σ s_{(2μ)'}` through `n`, the expansion for `p = 1`.
    pub fn even_columns(n: usize) -> KappaExpansion {
        KappaExpansion::from_sum(&even_columns_sum(n), n)
    }

    /// `Σ s_{2μ}` through `n`, the expansion for `p = 1/(1 − x²)`.
    pub fn even_rows(n: usize) -> KappaExpansion {
        KappaExpansion::from_sum(&even_rows_sum(n), n)
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn degree(&self, d: usize) -> Result<&FormalSum> {
        self.graded.get(d).ok_or(Error::DegreeExceeded {
            needed: d,
            cutoff: self.cutoff,
        })
    }

    pub fn graded(&self) -> &[FormalSum] {
        &self.graded
    }

    pub fn coefficient(&self, lambda: &Partition) -> Result<Rational> {
        Ok(self.degree(lambda.size())?.coefficient(lambda))
    }

    /// All degrees summed into one formal sum.
    pub fn total(&self) -> FormalSum {
        let mut out = FormalSum::zero(Basis::Schur);
        for g in &self.graded {
            out.add_scaled(g, &Rational::one())
                .expect("all components are Schur");
        }
        out
    }

    pub fn omega(&self) -> KappaExpansion {
        KappaExpansion {
            cutoff: self.cutoff,
            graded: self.graded.iter().map(FormalSum::omega).collect(),
        }
    }

    /// First negative coefficient in canonical order.
    pub fn verdict(&self) -> Verdict {
        for g in &self.graded {
            if let Some((l, c)) = g.first_negative() {
                return Verdict::Violation {
                    shape: l.clone(),
                    coeff: c.clone(),
                };
            }
        }
        Verdict::Positive {
            through: self.cutoff,
        }
    }
}

/// Outcome of a bounded positivity check. `Positive` makes no claim past
/// `through`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Positive { through: usize },
    Violation { shape: Partition, coeff: Rational },
}

impl Verdict {
    pub fn is_positive(&self) -> bool {
        matches!(self, Verdict::Positive { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Positive { through } => write!(f, "positive through degree {through}"),
            Verdict::Violation { shape, coeff } => {
                write!(
                    f,
                    "violation: s{} coeff {}",
                    shape.bracketed(),
                    rational::to_text(coeff)
                )
            }
        }
    }
}

/// Determinant by fraction-carrying Gaussian elimination.
pub(crate) fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Coefficient of `s_λ` in `∏ p(xᵢ)`: the determinant `det(a_{λᵢ − i + j})`.
pub fn product_coefficient(p: &Series, lambda: &Partition) -> Result<Rational> {
    let r = lambda.len();
    let mut m = vec![vec![Rational::zero(); r]; r];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let k = lambda.part(i) as isize - i as isize + j as isize;
            if k >= 0 {
                *entry = p.coeff(k as usize)?;
            }
        }
    }
    Ok(determinant(m))
}

/// Schur expansion of `∏ p(xᵢ)` through total degree `n`.
pub fn product_expansion(p: &Series, n: usize) -> Result<KappaExpansion> {
    p.require_order(n)?;
    let mut graded = Vec::with_capacity(n + 1);
    for d in 0..=n {
        let mut g = FormalSum::zero(Basis::Schur);
        for lambda in Partition::all_of(d) {
            let c = product_coefficient(p, &lambda)?;
            g.add_term(lambda, c);
        }
        graded.push(g);
    }
    Ok(KappaExpansion { cutoff: n, graded })
}

/// `κ₁ = Σ s_{(2μ)'}`, the partitions with only even columns, through `n`.
pub fn even_columns_sum(n: usize) -> FormalSum {
    FormalSum::from_terms(
        Basis::Schur,
        (0..=n / 2)
            .flat_map(Partition::all_of)
            .map(|mu| (mu.scale(2).transpose(), Rational::one())),
    )
}

/// `Σ s_{2μ}`, the partitions with only even rows, through `n`.
pub fn even_rows_sum(n: usize) -> FormalSum {
    even_columns_sum(n).omega()
}

/// `κ_p` through degree `n`: `∏ p(xᵢ)` times `κ₁`.
pub fn kappa_expansion(p: &Series, n: usize) -> Result<KappaExpansion> {
    let prod = product_expansion(p, n)?;
    let k1 = even_columns_sum(n);
    let sum = schur::multiply_truncated(&prod.total(), &k1, n)?;
    Ok(KappaExpansion::from_sum(&sum, n))
}

pub fn is_kappa_positive(p: &Series, n: usize) -> Result<Verdict> {
    Ok(kappa_expansion(p, n)?.verdict())
}

pub fn is_product_s_positive(p: &Series, n: usize) -> Result<Verdict> {
    Ok(product_expansion(p, n)?.verdict())
}

// Dense polynomial helpers, coefficients constant term first.

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn derivative(p: &[Rational]) -> Vec<Rational> {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(k.into()))
            .collect(),
    )
}

/// Remainder of `a` by nonzero `b`.
fn poly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let factor = r[r.len() - 1].clone() / &lead;
        for (k, c) in b.iter().enumerate() {
            r[shift + k] -= &factor * c;
        }
        r = trim(r);
    }
    r
}

fn poly_div(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    if r.len() <= db {
        return Vec::new();
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let factor = r[r.len() - 1].clone() / &b[db];
        for (k, c) in b.iter().enumerate() {
            r[shift + k] -= &factor * c;
        }
        q[shift] = factor;
        r = trim(r);
    }
    trim(q)
}

fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let s: Vec<i32> = signs.filter(|&s| s != 0).collect();
    s.windows(2).filter(|w| w[0] != w[1]).count()
}

fn sign(r: &Rational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// Whether every complex root of the polynomial `p` is real and strictly
/// negative, decided exactly with a Sturm sequence on the square-free part.
pub fn real_negative_roots(p: &Series) -> Result<bool> {
    if !p.is_polynomial() {
        return Err(Error::NotPolynomial(format!(
            "series known only through order {:?}",
            p.order()
        )));
    }
    let poly = trim(p.coeffs().to_vec());
    if poly.len() <= 1 {
        return Ok(true);
    }
    let g = poly_gcd(&poly, &derivative(&poly));
    let squarefree = poly_div(&poly, &g);
    let degree = squarefree.len() - 1;
    let mut chain = vec![squarefree.clone(), derivative(&squarefree)];
    loop {
        let n = chain.len();
        let r = poly_rem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    let at_neg_inf = chain.iter().map(|q| {
        let d = q.len() - 1;
        let s = sign(&q[d]);
        if d % 2 == 1 {
            -s
        } else {
            s
        }
    });
    let at_zero = chain.iter().map(|q| sign(&q[0]));
    // p(0) = 1, so 0 is never a root and the count covers (−∞, 0)
    let negative_roots = sign_changes(at_neg_inf) - sign_changes(at_zero);
    Ok(negative_roots == degree)
}

/// `a √(a+2) / (a+1)` in floating point, for display only.
pub fn quadratic_boundary(a: f64) -> f64 {
    a * (a + 2.0).sqrt() / (a + 1.0)
}

/// Exact comparison of `b` with `a √(a+2) / (a+1)` for `a ≥ 0`.
pub fn boundary_comparison(a: &Rational, b: &Rational) -> Option<Ordering> {
    if a.is_negative() {
        return None;
    }
    if b.is_negative() {
        return Some(Ordering::Less);
    }
    let one = Rational::one();
    let lhs = b * b * (a + &one) * (a + &one);
    let rhs = a * a * (a + Rational::from_integer(2.into()));
    Some(lhs.cmp(&rhs))
}

/// The real root of `2z³ + 3z² + z − 1`, bracketed by bisection to width
/// below `10^-digits`. Returns `(lo, hi)` with `f(lo) < 0 < f(hi)`.
pub fn root_of_critical_cubic(digits: u32) -> (Rational, Rational) {
    let f = |z: &Rational| {
        let two = Rational::from_integer(2.into());
        let three = Rational::from_integer(3.into());
        &two * z * z * z + &three * z * z + z - Rational::one()
    };
    let width = Rational::new(1.into(), num_bigint::BigInt::from(10).pow(digits));
    let (mut lo, mut hi) = (Rational::zero(), Rational::one());
    while &hi - &lo >= width {
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        if f(&mid).is_negative() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Data from one point `p = 1 + bx + ax²` of the quadratic family.
#[derive(Debug, Clone)]
pub struct QuadraticReport {
    pub a: Rational,
    pub b: Rational,
    pub cutoff: usize,
    /// Smallest coefficient in each degree, with the first shape attaining it.
    pub min_by_degree: Vec<(usize, Partition, Rational)>,
    /// Most negative coefficient overall, if any coefficient is negative.
    pub binding: Option<(Partition, Rational)>,
    /// Coefficient of `s_(3,2,2,1,1)`; `None` when the cutoff is below 9.
    pub coeff_32211: Option<Rational>,
    /// Coefficients of `s_(2^t, 1^t)` for `3t ≤ cutoff`.
    pub hooks: Vec<(usize, Rational)>,
    /// `b` against the boundary `a √(a+2) / (a+1)`, when `a ≥ 0`.
    pub boundary: Option<Ordering>,
    pub boundary_approx: f64,
}

pub fn shape_32211() -> Partition {
    Partition::from_unsorted(vec![3, 2, 2, 1, 1])
}

/// `(2^t, 1^t)`.
pub fn double_hook(t: usize) -> Partition {
    let mut parts = vec![2; t];
    parts.extend(std::iter::repeat(1).take(t));
    Partition::from_unsorted(parts)
}

pub fn quadratic_scan(a: &Rational, b: &Rational, n: usize) -> Result<QuadraticReport> {
    let p = Series::polynomial(vec![Rational::one(), b.clone(), a.clone()])?;
    let kappa = kappa_expansion(&p, n)?;
    let mut min_by_degree = Vec::new();
    let mut binding: Option<(Partition, Rational)> = None;
    for (d, g) in kappa.graded().iter().enumerate() {
        if let Some((l, c)) = g.iter().min_by(|x, y| x.1.cmp(y.1)) {
            min_by_degree.push((d, l.clone(), c.clone()));
        }
        for (l, c) in g.iter() {
            if c.is_negative() && binding.as_ref().is_none_or(|(_, m)| c < m) {
                binding = Some((l.clone(), c.clone()));
            }
        }
    }
    let hooks = (1..=n / 3)
        .map(|t| Ok((t, kappa.coefficient(&double_hook(t))?)))
        .collect::<Result<_>>()?;
    Ok(QuadraticReport {
        coeff_32211: if n >= 9 {
            Some(kappa.coefficient(&shape_32211())?)
        } else {
            None
        },
        a: a.clone(),
        b: b.clone(),
        cutoff: n,
        min_by_degree,
        binding,
        hooks,
        boundary: boundary_comparison(a, b),
        boundary_approx: quadratic_boundary(a.to_f64().unwrap_or(f64::NAN)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::rational::{int, ratio};

    fn poly(c: &[i64]) -> Series {
        Series::polynomial(c.iter().map(|&x| int(x)).collect()).unwrap()
    }

    #[test]
    fn product_expansion_examples() {
        let e = product_expansion(&poly(&[1, 1]), 6).unwrap();
        for d in 0..=6 {
            let expected = FormalSum::basis_element(Basis::Schur, Partition::column(d));
            assert_eq!(e.degree(d).unwrap(), &expected);
        }
        let e = product_expansion(&poly(&[1, 1, 1]), 3).unwrap();
        assert_eq!(e.coefficient(&part![1, 1, 1]).unwrap(), int(-1));
        let e = product_expansion(&Series::one(), 5).unwrap();
        assert_eq!(e.total(), FormalSum::one(Basis::Schur));
    }

    #[test]
    fn kappa_examples() {
        let k = kappa_expansion(&Series::one(), 4).unwrap();
        let expected = FormalSum::from_terms(
            Basis::Schur,
            [part![], part![1, 1], part![2, 2], part![1, 1, 1, 1]]
                .into_iter()
                .map(|p| (p, int(1))),
        );
        assert_eq!(k.total(), expected);
        let k = kappa_expansion(&Series::geom2(4), 4).unwrap();
        let expected = FormalSum::from_terms(
            Basis::Schur,
            [part![], part![2], part![4], part![2, 2]]
                .into_iter()
                .map(|p| (p, int(1))),
        );
        assert_eq!(k.total(), expected);
        let k = kappa_expansion(&Series::geom(3), 3).unwrap();
        let expected = FormalSum::from_terms(
            Basis::Schur,
            Partition::all_up_to(3).into_iter().map(|p| (p, int(1))),
        );
        assert_eq!(k.total(), expected);
    }

    #[test]
    fn closed_forms_match_general_route() {
        assert_eq!(
            kappa_expansion(&Series::one(), 8).unwrap(),
            KappaExpansion::even_columns(8)
        );
        assert_eq!(
            kappa_expansion(&Series::geom2(8), 8).unwrap(),
            KappaExpansion::even_rows(8)
        );
    }

    #[test]
    fn truncation_is_enforced() {
        assert_eq!(
            kappa_expansion(&Series::geom(3), 4),
            Err(Error::Truncated {
                needed: 4,
                available: 3
            })
        );
        assert!(Series::geom(3).dual(5).is_err());
        assert!(Series::geom(5).coeff(6).is_err());
        assert_eq!(Series::one().coeff(100).unwrap(), int(0));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(Series::one().dual(6).unwrap(), Series::geom2(6));
        assert_eq!(Series::geom(6).dual(6).unwrap(), Series::geom(6));
        assert_eq!(
            Series::geom2(6).dual(6).unwrap(),
            Series::one().truncate(6).unwrap()
        );
    }

    #[test]
    fn positivity_examples() {
        assert!(is_kappa_positive(&Series::geom(10), 10)
            .unwrap()
            .is_positive());
        assert_eq!(
            is_kappa_positive(&poly(&[1, 0, 2]), 2).unwrap(),
            Verdict::Violation {
                shape: part![1, 1],
                coeff: int(-1)
            }
        );
        assert!(is_kappa_positive(&Series::one(), 7).unwrap().is_positive());
        assert!(is_product_s_positive(&poly(&[1, 3, 2]), 10)
            .unwrap()
            .is_positive());
        assert_eq!(
            is_product_s_positive(&poly(&[1, 1, 1]), 3).unwrap(),
            Verdict::Violation {
                shape: part![1, 1, 1],
                coeff: int(-1)
            }
        );
        assert!(is_product_s_positive(&Series::one(), 4)
            .unwrap()
            .is_positive());
        assert_eq!(
            is_kappa_positive(&poly(&[1, 0, 2]), 2).unwrap().to_string(),
            "violation: s[1,1] coeff -1"
        );
    }

    #[test]
    fn sturm_examples() {
        assert!(real_negative_roots(&poly(&[1, 3, 2])).unwrap());
        assert!(!real_negative_roots(&poly(&[1, 1, 1])).unwrap());
        assert!(!real_negative_roots(&poly(&[1, -1])).unwrap());
        assert!(real_negative_roots(&poly(&[1, 3, 3, 1])).unwrap());
        assert!(real_negative_roots(&poly(&[1])).unwrap());
        // (1+x)^2 (1+x^2): a repeated real root plus a complex pair
        assert!(!real_negative_roots(&poly(&[1, 2, 2, 2, 1])).unwrap());
        assert!(matches!(
            real_negative_roots(&Series::geom(4)),
            Err(Error::NotPolynomial(_))
        ));
    }

    #[test]
    fn critical_cubic_root() {
        let (lo, hi) = root_of_critical_cubic(8);
        let lo = lo.to_f64().unwrap();
        let hi = hi.to_f64().unwrap();
        assert!(hi - lo < 1e-8);
        assert_eq!(format!("{:.5}", lo), "0.39816");
    }

    #[test]
    fn boundary_is_exact_at_quarter() {
        assert_eq!(
            boundary_comparison(&ratio(1, 4), &ratio(3, 10)),
            Some(Ordering::Equal)
        );
        assert_eq!(
            boundary_comparison(&ratio(1, 4), &ratio(1, 4)),
            Some(Ordering::Less)
        );
        assert_eq!(
            boundary_comparison(&ratio(1, 4), &ratio(1, 2)),
            Some(Ordering::Greater)
        );
        assert!((quadratic_boundary(0.25) - 0.3).abs() < 1e-12);
    }

    #[test]
    fn reciprocal_and_parse() {
        let p = Series::parse("1,1/2,0,3", 0).unwrap();
        assert!(p.is_polynomial());
        assert_eq!(p.coeff(1).unwrap(), ratio(1, 2));
        assert!(Series::parse("2,1", 0).is_err());
        let inv = p.reciprocal(6).unwrap();
        let prod = p.mul(&inv, 6).unwrap();
        assert_eq!(prod, Series::one().truncate(6).unwrap());
        assert_eq!(Series::parse("geom2", 3).unwrap(), Series::geom2(3));
    }
}
