//! Ring maps `f` from the type-A ring into the stable B/C/D ring with
//! `f(s_λ) = sp_λ + Σ_{μ<λ} m_{λμ} sp_μ`.
//!
//! Two independent constructions are provided:
//!
//! * [`SkewEmbedding`] skews `s_λ` by `κ_p` and relabels `s_μ ↦ sp_μ`.
//! * [`f_image_table`] applies `f` to the dual Jacobi–Trudi determinant,
//!   with `f(e_k) = Σ_j m_{kj} sp_(1^j)` read from an [`EmbeddingTable`] and
//!   products taken with Newell–Littlewood multiplication.
//!
//! For a table built by [`EmbeddingTable::from_series`] the two agree; the
//! test suite uses each as the oracle for the other.

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;
use serde::Deserialize;

use crate::bcd;
use crate::error::{Error, Result};
use crate::formal::{Basis, FormalSum};
use crate::partition::Partition;
use crate::rational::{self, Rational};
use crate::schur;
use crate::series::{kappa_expansion, KappaExpansion, Series};

/// The constants `m_{ij} = m_{(1^i),(1^j)}` for `0 ≤ j ≤ i ≤ cutoff`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingTable {
    cutoff: usize,
    // rows[i][j] for j < i; the diagonal is implicitly 1
    rows: Vec<Vec<Rational>>,
}

impl EmbeddingTable {
    /// `m_{ij} = δ_{ij}`.
    pub fn identity(cutoff: usize) -> Self {
        EmbeddingTable::from_fn(cutoff, |_, _| Rational::zero())
    }

    /// Entries below the diagonal from `entry(i, j)`.
    pub fn from_fn(cutoff: usize, mut entry: impl FnMut(usize, usize) -> Rational) -> Self {
        let rows = (0..=cutoff)
            .map(|i| (0..i).map(|j| entry(i, j)).collect())
            .collect();
        EmbeddingTable { cutoff, rows }
    }

    /// The table of `f_p`: `m_{ij} = b_{i−j}` where `q = Σ b_k x^k` is the
    /// dual of `p`.
    pub fn from_series(p: &Series, cutoff: usize) -> Result<Self> {
        let q = p.dual(cutoff)?;
        let b: Vec<Rational> = (0..=cutoff).map(|k| q.coeff(k)).collect::<Result<_>>()?;
        Ok(EmbeddingTable::from_fn(cutoff, |i, j| b[i - j].clone()))
    }

    /// Random table that depends only on `i − j` below diagonal `d`, with
    /// independent random entries from diagonal `d` on.
    pub fn random_constant_below<R: Rng>(d: usize, cutoff: usize, rng: &mut R) -> Self {
        let b: Vec<Rational> = (0..d).map(|_| rational::random(rng)).collect();
        EmbeddingTable::from_fn(cutoff, |i, j| {
            if i - j < d {
                b[i - j].clone()
            } else {
                rational::random(rng)
            }
        })
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn get(&self, i: usize, j: usize) -> Result<Rational> {
        if i > self.cutoff {
            return Err(Error::CutoffExceeded {
                needed: i,
                cutoff: self.cutoff,
            });
        }
        Ok(match j.cmp(&i) {
            std::cmp::Ordering::Less => self.rows[i][j].clone(),
            std::cmp::Ordering::Equal => Rational::one(),
            std::cmp::Ordering::Greater => Rational::zero(),
        })
    }

    /// Sets `m_{ij}` for `j < i ≤ cutoff`.
    pub fn set(&mut self, i: usize, j: usize, value: Rational) -> Result<()> {
        if i > self.cutoff {
            return Err(Error::CutoffExceeded {
                needed: i,
                cutoff: self.cutoff,
            });
        }
        if j >= i {
            return Err(Error::Precondition(format!(
                "m[{i}][{j}] is not below the diagonal"
            )));
        }
        self.rows[i][j] = value;
        Ok(())
    }

    /// `α_d = m_{d,0}`.
    pub fn alpha(&self, d: usize) -> Result<Rational> {
        self.get(d, 0)
    }

    /// `β_d = m_{d+1,1} − m_{d,0}`.
    pub fn beta(&self, d: usize) -> Result<Rational> {
        Ok(self.get(d + 1, 1)? - self.get(d, 0)?)
    }

    /// Whether `m_{ij}` depends only on `i − j` for all `0 < i − j < d`.
    pub fn constant_below(&self, d: usize) -> bool {
        (1..d).all(|diag| {
            let first = self.rows.get(diag).map(|r| &r[0]);
            (diag..=self.cutoff).all(|i| Some(&self.rows[i][i - diag]) == first)
        })
    }

    /// `f(e_k) = Σ_j m_{kj} sp_(1^j)`.
    pub fn generator(&self, k: usize) -> Result<FormalSum> {
        if k > self.cutoff {
            return Err(Error::CutoffExceeded {
                needed: k,
                cutoff: self.cutoff,
            });
        }
        let mut out = FormalSum::basis_element(Basis::Sp, Partition::column(k));
        for (j, m) in self.rows[k].iter().enumerate() {
            out.add_term(Partition::column(j), m.clone());
        }
        Ok(out)
    }

    /// `{"schema": 1, "cutoff": K, "m": [[i, j, "p/q"], ...]}`; zero entries
    /// are omitted.
    pub fn to_json(&self) -> serde_json::Value {
        let mut m = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    m.push(serde_json::json!([i, j, rational::to_text(v)]));
                }
            }
        }
        serde_json::json!({ "schema": 1, "cutoff": self.cutoff, "m": m })
    }

    /// Reads the JSON form. Omitted entries default to `δ_{ij}`.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Doc {
            schema: Option<u32>,
            cutoff: usize,
            #[serde(default)]
            m: Vec<(usize, usize, String)>,
        }
        let doc: Doc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if let Some(s) = doc.schema {
            if s != 1 {
                return Err(Error::Parse(format!("unsupported table schema {s}")));
            }
        }
        let mut t = EmbeddingTable::identity(doc.cutoff);
        for (i, j, v) in doc.m {
            let v = rational::parse(&v)?;
            if i == j {
                if !v.is_one() {
                    return Err(Error::Parse(format!(
                        "diagonal entry m[{i}][{i}] must be 1"
                    )));
                }
                continue;
            }
            if j > i {
                return Err(Error::Parse(format!(
                    "entry m[{i}][{j}] lies above the diagonal"
                )));
            }
            if i > doc.cutoff {
                return Err(Error::Parse(format!(
                    "entry m[{i}][{j}] exceeds cutoff {}",
                    doc.cutoff
                )));
            }
            t.rows[i][j] = v;
        }
        Ok(t)
    }
}

/// The image `f(s_λ) = Σ_μ m_{λμ} b_μ` in the `sp` or `o` basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Decomposition {
    source: Partition,
    sum: FormalSum,
}

impl Decomposition {
    pub fn new(source: Partition, sum: FormalSum) -> Self {
        Decomposition { source, sum }
    }

    pub fn source(&self) -> &Partition {
        &self.source
    }

    pub fn sum(&self) -> &FormalSum {
        &self.sum
    }

    pub fn basis(&self) -> Basis {
        self.sum.basis()
    }

    /// `m_{λμ}`, zero when absent.
    pub fn coefficient(&self, mu: &Partition) -> Rational {
        self.sum.coefficient(mu)
    }

    pub fn relabel(&self, basis: Basis) -> Decomposition {
        Decomposition {
            source: self.source.clone(),
            sum: self.sum.relabel(basis),
        }
    }

    /// `{"schema":1, "lambda":[...], "basis":"sp", "terms":[{"mu":[...],"coeff":"1"}, ...]}`
    /// with terms in output order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": 1,
            "lambda": self.source,
            "basis": self.sum.basis(),
            "terms": self.sum.json_terms(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Decomposition> {
        let source: Partition = serde_json::from_value(v["lambda"].clone())
            .map_err(|e| Error::Parse(format!("bad lambda: {e}")))?;
        Ok(Decomposition {
            source,
            sum: FormalSum::from_json(v)?,
        })
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.sum, f)
    }
}

impl fmt::Debug for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f(s{}) = {}", self.source.bracketed(), self.sum)
    }
}

/// `f_p` computed by skewing with a precomputed `κ_p`.
#[derive(Debug, Clone)]
pub struct SkewEmbedding {
    kappa: KappaExpansion,
}

impl SkewEmbedding {
    /// Prepares `f_p` for every `λ` with `|λ| ≤ max_size`.
    pub fn new(p: &Series, max_size: usize) -> Result<Self> {
        Ok(SkewEmbedding {
            kappa: kappa_expansion(p, max_size)?,
        })
    }

    /// Uses an already computed `κ_p`.
    pub fn from_kappa(kappa: KappaExpansion) -> Self {
        SkewEmbedding { kappa }
    }

    pub fn kappa(&self) -> &KappaExpansion {
        &self.kappa
    }

    /// `f_p(s_λ) = Σ_{μ⊆λ} ⟨κ_p, s_μ⟩ s_{λ/μ}`, relabelled to `sp`.
    pub fn image(&self, lambda: &Partition) -> Result<Decomposition> {
        if lambda.size() > self.kappa.cutoff() {
            return Err(Error::DegreeExceeded {
                needed: lambda.size(),
                cutoff: self.kappa.cutoff(),
            });
        }
        let mut out = FormalSum::zero(Basis::Schur);
        for mu in lambda.subpartitions() {
            let k = self.kappa.coefficient(&mu)?;
            if k.is_zero() {
                continue;
            }
            out.add_scaled(&schur::skew_expand(lambda, &mu), &k)?;
        }
        Ok(Decomposition::new(lambda.clone(), out.relabel(Basis::Sp)))
    }

    /// `f_p` applied to an arbitrary Schur-basis element.
    pub fn apply(&self, a: &FormalSum) -> Result<FormalSum> {
        if a.basis() != Basis::Schur {
            return Err(Error::BasisMismatch(a.basis(), Basis::Schur));
        }
        let mut out = FormalSum::zero(Basis::Sp);
        for (lambda, c) in a.iter() {
            out.add_scaled(self.image(lambda)?.sum(), c)?;
        }
        Ok(out)
    }
}

/// `f_p(s_λ)` by skewing with `κ_p`.
pub fn f_image_skew(p: &Series, lambda: &Partition) -> Result<Decomposition> {
    SkewEmbedding::new(p, lambda.size())?.image(lambda)
}

/// Largest `e`-index in the dual Jacobi–Trudi matrix of `λ`:
/// `λ'₁ + ℓ(λ') − 1`, or 0 for the empty partition.
pub fn required_cutoff(lambda: &Partition) -> usize {
    if lambda.is_empty() {
        return 0;
    }
    let conj = lambda.transpose();
    conj.part(0) + conj.len() - 1
}

/// `f(s_λ)` from the table by the dual Jacobi–Trudi formula.
pub fn f_image_table(table: &EmbeddingTable, lambda: &Partition) -> Result<Decomposition> {
    let need = required_cutoff(lambda);
    if need > table.cutoff() {
        return Err(Error::CutoffExceeded {
            needed: need,
            cutoff: table.cutoff(),
        });
    }
    let sum = schur::dual_jacobi_trudi(lambda, |k| table.generator(k), bcd::multiply)?;
    Ok(Decomposition::new(lambda.clone(), sum))
}

/// `m_{λμ}` from the table, dropping partial products that cannot reach `μ`.
///
/// Multiplying by a column `sp_(1^j)` changes each row length by at most one,
/// so a partial product more than `rows_left` away from `μ` in some row
/// contributes nothing to the coefficient of `sp_μ`.
pub fn table_coefficient(
    table: &EmbeddingTable,
    lambda: &Partition,
    mu: &Partition,
) -> Result<Rational> {
    let need = required_cutoff(lambda);
    if need > table.cutoff() {
        return Err(Error::CutoffExceeded {
            needed: need,
            cutoff: table.cutoff(),
        });
    }
    let near = |nu: &Partition, rows_left: usize| {
        (0..nu.len().max(mu.len())).all(|i| nu.part(i).abs_diff(mu.part(i)) <= rows_left)
    };
    let sum = schur::dual_jacobi_trudi_pruned(lambda, |k| table.generator(k), bcd::multiply, near)?;
    Ok(sum.coefficient(mu))
}

/// Both sides of the two linear identities for `m_{(k),(1^{k−d})}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearReport {
    pub d: usize,
    pub k: usize,
    /// `m_{(k),(1^{k−d})}` computed from the table.
    pub lhs1: Rational,
    /// `(−1)^{k−1}(m_{k,k−d} − 2m_{k−1,k−1−d} + m_{k−2,k−2−d})`.
    pub rhs1: Rational,
    /// `m_{(k−1,k−1),(k−2,1^{k−d})}`, expected to be `−lhs1`.
    pub lhs2: Rational,
    pub equal: bool,
}

fn check_diagonal_hypothesis(table: &EmbeddingTable, d: usize, k: usize) -> Result<()> {
    if d < 1 {
        return Err(Error::Precondition("d must be at least 1".into()));
    }
    if k < d + 2 {
        return Err(Error::Precondition(format!(
            "k = {k} must be at least d + 2 = {}",
            d + 2
        )));
    }
    if !table.constant_below(d) {
        return Err(Error::Precondition(format!(
            "table entries m_ij are not constant along diagonals i - j < {d}"
        )));
    }
    Ok(())
}

pub fn verify_prop_linear(table: &EmbeddingTable, d: usize, k: usize) -> Result<LinearReport> {
    check_diagonal_hypothesis(table, d, k)?;
    if table.cutoff() < k {
        return Err(Error::CutoffExceeded {
            needed: k,
            cutoff: table.cutoff(),
        });
    }
    let lhs1 = table_coefficient(table, &Partition::row(k), &Partition::column(k - d))?;
    let two = Rational::from_integer(2.into());
    let rhs1 = rational::sign_power(k - 1)
        * (table.get(k, k - d)? - two * table.get(k - 1, k - 1 - d)?
            + table.get(k - 2, k - 2 - d)?);

    let f = |n: usize| f_image_table(table, &Partition::row(n)).map(|x| x.sum().clone());
    let (fk, fk1, fk2) = (f(k)?, f(k - 1)?, f(k - 2)?);
    let mut target = vec![k - 2];
    target.extend(std::iter::repeat(1).take(k - d));
    let target = Partition::new(target)?;
    let lhs2 = bcd::product_coefficient(&fk1, &fk1, &target)?
        - bcd::product_coefficient(&fk, &fk2, &target)?;
    let equal = lhs1 == rhs1 && lhs2 == -lhs1.clone();
    Ok(LinearReport {
        d,
        k,
        lhs1,
        rhs1,
        lhs2,
        equal,
    })
}

/// Both sides of `m_{(k^d),((k−1)^d)} = k·m_{d,0} − (k−1)·m_{d+1,1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantReport {
    pub d: usize,
    pub k: usize,
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
}

pub fn verify_prop_constant(table: &EmbeddingTable, d: usize, k: usize) -> Result<ConstantReport> {
    check_diagonal_hypothesis(table, d, k)?;
    let lambda = Partition::rectangle(d, k);
    let mu = Partition::rectangle(d, k - 1);
    let lhs = table_coefficient(table, &lambda, &mu)?;
    let kk = Rational::from_integer(k.into());
    let rhs = &kk * table.get(d, 0)? - (kk - Rational::one()) * table.get(d + 1, 1)?;
    Ok(ConstantReport {
        d,
        k,
        equal: lhs == rhs,
        lhs,
        rhs,
    })
}

/// `m_{(2k+1,1),∅}` against `a_{2k} − a_{2k+2}` for an even series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityReport {
    pub k: usize,
    pub computed: Rational,
    pub expected: Rational,
    pub equal: bool,
}

pub fn parity_coefficient(p: &Series, k: usize) -> Result<ParityReport> {
    if !p.is_even() {
        return Err(Error::Precondition(format!(
            "series {p} has a nonzero odd coefficient"
        )));
    }
    p.require_order(2 * k + 2)?;
    let lambda = Partition::new(vec![2 * k + 1, 1])?;
    let computed = f_image_skew(p, &lambda)?.coefficient(&Partition::empty());
    let expected = p.coeff(2 * k)? - p.coeff(2 * k + 2)?;
    Ok(ParityReport {
        k,
        equal: computed == expected,
        computed,
        expected,
    })
}

/// Whether both constructions give the same `f_p(s_λ)`.
pub fn check_oracle(
    skew: &SkewEmbedding,
    table: &EmbeddingTable,
    lambda: &Partition,
) -> Result<bool> {
    Ok(skew.image(lambda)? == f_image_table(table, lambda)?)
}

/// Whether `f(s_μ s_ν) = f(s_μ) · f(s_ν)` for the skewing map.
pub fn check_ring_hom(skew: &SkewEmbedding, mu: &Partition, nu: &Partition) -> Result<bool> {
    let smu = FormalSum::basis_element(Basis::Schur, mu.clone());
    let snu = FormalSum::basis_element(Basis::Schur, nu.clone());
    let lhs = skew.apply(&schur::multiply(&smu, &snu)?)?;
    let rhs = bcd::multiply(skew.image(mu)?.sum(), skew.image(nu)?.sum())?;
    Ok(lhs == rhs)
}
