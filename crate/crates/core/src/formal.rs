//! Finite rational linear combinations of partition-indexed basis elements.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cache::Expansion;
use crate::error::{Error, Result};
use crate::partition::{display_order, Partition};
use crate::rational::{self, Rational};

/// Which family of universal characters a [`FormalSum`] is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Schur functions `s_λ`.
    Schur,
    /// Symplectic universal characters `sp_λ`.
    Sp,
    /// Orthogonal universal characters `o_λ`.
    O,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Schur => "s",
            Basis::Sp => "sp",
            Basis::O => "o",
        }
    }

    pub fn is_bcd(self) -> bool {
        matches!(self, Basis::Sp | Basis::O)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Schur => "schur",
            Basis::Sp => "sp",
            Basis::O => "o",
        })
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "s" | "schur" => Ok(Basis::Schur),
            "sp" => Ok(Basis::Sp),
            "o" => Ok(Basis::O),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

/// A finite sum `Σ c_λ b_λ` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FormalSum {
    basis: Basis,
    terms: BTreeMap<Partition, Rational>,
}

impl FormalSum {
    pub fn zero(basis: Basis) -> Self {
        FormalSum {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `b_∅`.
    pub fn one(basis: Basis) -> Self {
        FormalSum::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        FormalSum::monomial(basis, lambda, Rational::one())
    }

    pub fn monomial(basis: Basis, lambda: Partition, coeff: Rational) -> Self {
        let mut out = FormalSum::zero(basis);
        out.add_term(lambda, coeff);
        out
    }

    pub fn from_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut out = FormalSum::zero(basis);
        for (l, c) in terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order (size ascending, descending lexicographic).
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    /// Terms in output order (size descending, descending lexicographic).
    pub fn sorted_terms(&self) -> Vec<(&Partition, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| display_order(a.0, b.0));
        v
    }

    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    /// `self += scale * other`.
    pub fn add_scaled(&mut self, other: &FormalSum, scale: &Rational) -> Result<()> {
        self.check_basis(other)?;
        if scale.is_zero() {
            return Ok(());
        }
        for (l, c) in &other.terms {
            self.add_term(l.clone(), c * scale);
        }
        Ok(())
    }

    pub fn add(&self, other: &FormalSum) -> Result<FormalSum> {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one())?;
        Ok(out)
    }

    pub fn sub(&self, other: &FormalSum) -> Result<FormalSum> {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one())?;
        Ok(out)
    }

    pub fn scale(&self, k: &Rational) -> FormalSum {
        if k.is_zero() {
            return FormalSum::zero(self.basis);
        }
        FormalSum {
            basis: self.basis,
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c * k)).collect(),
        }
    }

    pub fn neg(&self) -> FormalSum {
        self.scale(&-Rational::one())
    }

    /// Same coefficients, new basis tag.
    pub fn relabel(&self, basis: Basis) -> FormalSum {
        FormalSum {
            basis,
            terms: self.terms.clone(),
        }
    }

    /// Replaces every basis partition by its transpose; the basis tag is kept.
    pub fn omega(&self) -> FormalSum {
        FormalSum {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.transpose(), c.clone()))
                .collect(),
        }
    }

    /// The homogeneous component of degree `d`.
    pub fn component(&self, d: usize) -> FormalSum {
        self.filter(|l| l.size() == d)
    }

    /// Drops every term of degree above `d`.
    pub fn truncate(&self, d: usize) -> FormalSum {
        self.filter(|l| l.size() <= d)
    }

    pub fn filter(&self, mut keep: impl FnMut(&Partition) -> bool) -> FormalSum {
        FormalSum {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| keep(l))
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    /// First negative coefficient in canonical order.
    pub fn first_negative(&self) -> Option<(&Partition, &Rational)> {
        self.terms.iter().find(|(_, c)| c.is_negative())
    }

    /// Integer numerators over the least common denominator.
    fn over_common_denominator(&self) -> (Vec<(&Partition, BigInt)>, BigInt) {
        let den = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = self
            .terms
            .iter()
            .map(|(l, c)| (l, c.numer() * (&den / c.denom())))
            .collect();
        (nums, den)
    }

    /// Extends integer structure constants bilinearly. `product(μ, ν)` may
    /// return `None` to skip a pair. Sums are accumulated over a common
    /// denominator and reduced once per output term.
    pub(crate) fn bilinear<F>(
        basis: Basis,
        a: &FormalSum,
        b: &FormalSum,
        mut product: F,
    ) -> FormalSum
    where
        F: FnMut(&Partition, &Partition) -> Option<Expansion>,
    {
        let (xs, da) = a.over_common_denominator();
        let (ys, db) = b.over_common_denominator();
        let mut acc: HashMap<Partition, BigInt> = HashMap::new();
        for (mu, x) in &xs {
            for (nu, y) in &ys {
                let Some(exp) = product(mu, nu) else { continue };
                let xy = x * y;
                for (lambda, c) in exp.iter() {
                    let term = if *c == 1 { xy.clone() } else { &xy * c };
                    match acc.get_mut(lambda) {
                        Some(slot) => *slot += term,
                        None => {
                            acc.insert(lambda.clone(), term);
                        }
                    }
                }
            }
        }
        let den = da * db;
        let terms = acc
            .into_iter()
            .filter(|(_, z)| !z.is_zero())
            .map(|(l, z)| (l, Rational::new(z, den.clone())))
            .collect();
        FormalSum { basis, terms }
    }

    pub(crate) fn check_basis(&self, other: &FormalSum) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(self.basis, other.basis));
        }
        Ok(())
    }

    /// JSON term list `[{"mu": [...], "coeff": "p/q"}, ...]` in output order.
    pub fn json_terms(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.sorted_terms()
                .into_iter()
                .map(|(l, c)| serde_json::json!({ "mu": l, "coeff": rational::to_text(c) }))
                .collect(),
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": 1,
            "basis": self.basis,
            "terms": self.json_terms(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<FormalSum> {
        #[derive(Deserialize)]
        struct Term {
            mu: Partition,
            coeff: String,
        }
        #[derive(Deserialize)]
        struct Doc {
            basis: Basis,
            terms: Vec<Term>,
        }
        let doc: Doc =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = FormalSum::zero(doc.basis);
        for t in doc.terms {
            out.add_term(t.mu, rational::parse(&t.coeff)?);
        }
        Ok(out)
    }
}

impl fmt::Display for FormalSum {
    /// `s[3,1,1] + 2*s[2,2,1] - 1/2*s[]`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{}*", rational::to_text(&abs))?;
            }
            write!(f, "{}{}", self.basis.symbol(), l.bracketed())?;
        }
        Ok(())
    }
}

impl fmt::Debug for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
