//! Kirillov–Reshetikhin style characters `W(λ)` in the stable limit.
//!
//! `W(λ)` is only ever a decomposition `Σ m_{λμ} V(μ)`; type C uses the
//! even-rows skewing map in the `sp` basis and types B/D the even-columns map
//! in the `o` basis. Everything here assumes the rank exceeds `ℓ(λ) + 2`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bcd;
use crate::embeddings::{Decomposition, SkewEmbedding};
use crate::error::{Error, Result};
use crate::formal::{Basis, FormalSum};
use crate::partition::Partition;
use crate::rational;
use crate::series::KappaExpansion;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    C,
    BD,
}

impl Family {
    pub fn basis(self) -> Basis {
        match self {
            Family::C => Basis::Sp,
            Family::BD => Basis::O,
        }
    }

    /// Orientation of the dominoes removed from a rectangle.
    pub fn orientation(self) -> Orientation {
        match self {
            Family::C => Orientation::Horizontal,
            Family::BD => Orientation::Vertical,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::C => "C",
            Family::BD => "BD",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "C" => Ok(Family::C),
            "BD" => Ok(Family::BD),
            _ => Err(Error::Parse(format!(
                "unknown family {s:?}, expected C or BD"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `1 × 2`, two cells of one row.
    Horizontal,
    /// `2 × 1`, two cells of one column.
    Vertical,
}

fn remove_one(lambda: &Partition, orientation: Orientation) -> Vec<Partition> {
    let parts = lambda.parts();
    let mut out = Vec::new();
    for i in 0..parts.len() {
        let next = lambda.part(i + 1);
        let mut p = parts.to_vec();
        match orientation {
            Orientation::Horizontal => {
                if parts[i] >= next + 2 {
                    p[i] -= 2;
                } else {
                    continue;
                }
            }
            Orientation::Vertical => {
                if parts[i] == next && lambda.part(i + 2) < next {
                    p[i] -= 1;
                    p[i + 1] -= 1;
                } else {
                    continue;
                }
            }
        }
        out.push(Partition::from_unsorted(p));
    }
    out
}

/// Every shape reachable from `λ` by removing dominoes of one orientation,
/// `λ` included.
pub fn domino_removals(lambda: &Partition, orientation: Orientation) -> BTreeSet<Partition> {
    let mut seen = BTreeSet::from([lambda.clone()]);
    let mut stack = vec![lambda.clone()];
    while let Some(p) = stack.pop() {
        for q in remove_one(&p, orientation) {
            if seen.insert(q.clone()) {
                stack.push(q);
            }
        }
    }
    seen
}

/// `W(λ)` restricted to shapes of size at most `max_size`.
#[derive(Debug, Clone)]
pub struct WCharacters {
    family: Family,
    skew: SkewEmbedding,
}

impl WCharacters {
    pub fn new(family: Family, max_size: usize) -> Self {
        let kappa = match family {
            Family::C => KappaExpansion::even_rows(max_size),
            Family::BD => KappaExpansion::even_columns(max_size),
        };
        WCharacters {
            family,
            skew: SkewEmbedding::from_kappa(kappa),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn get(&self, lambda: &Partition) -> Result<Decomposition> {
        Ok(self.skew.image(lambda)?.relabel(self.family.basis()))
    }
}

/// The multiplicities of `V(μ)` in `W(λ)`.
pub fn w_decomposition(lambda: &Partition, family: Family) -> Result<Decomposition> {
    WCharacters::new(family, lambda.size()).get(lambda)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrReport {
    pub ell: usize,
    pub m: usize,
    pub family: Family,
    pub lhs: Decomposition,
    pub rhs: BTreeSet<Partition>,
    pub matches: bool,
}

/// `W(m ω_ℓ)` against the domino closure of the `ℓ × m` rectangle.
pub fn kr_rectangle_check(ell: usize, m: usize, family: Family) -> Result<KrReport> {
    if ell == 0 || m == 0 {
        return Err(Error::Precondition(
            "rectangle sides must be at least 1".into(),
        ));
    }
    let rect = Partition::rectangle(ell, m);
    let lhs = w_decomposition(&rect, family)?;
    let rhs = domino_removals(&rect, family.orientation());
    let matches = lhs.sum().len() == rhs.len()
        && lhs
            .sum()
            .iter()
            .all(|(mu, c)| c.is_one() && rhs.contains(mu));
    Ok(KrReport {
        ell,
        m,
        family,
        lhs,
        rhs,
        matches,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqQuadReport {
    pub ell: usize,
    pub m: usize,
    pub family: Family,
    pub lhs: FormalSum,
    pub rhs: FormalSum,
    pub holds: bool,
}

/// `W(m^ℓ)² = W((m+1)^ℓ)·W((m−1)^ℓ) + W(m^{ℓ−1})·W(m^{ℓ+1})`.
pub fn eq_quad_check(ell: usize, m: usize, family: Family) -> Result<EqQuadReport> {
    if ell == 0 || m == 0 {
        return Err(Error::Precondition("ell and m must be at least 1".into()));
    }
    let w = WCharacters::new(family, (ell + 1) * (m + 1));
    let get = |rows: usize, cols: usize| {
        w.get(&Partition::rectangle(rows, cols))
            .map(|d| d.sum().clone())
    };
    let mid = get(ell, m)?;
    let lhs = bcd::multiply(&mid, &mid)?;
    let rhs = bcd::multiply(&get(ell, m + 1)?, &get(ell, m - 1)?)?
        .add(&bcd::multiply(&get(ell - 1, m)?, &get(ell + 1, m)?)?)?;
    Ok(EqQuadReport {
        ell,
        m,
        family,
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

/// [`kr_rectangle_check`] for every `ℓ, m ≤ max` and both families, in
/// `(family, ℓ, m)` order.
pub fn kr_sweep(max: usize) -> Result<Vec<KrReport>> {
    sweep(max, kr_rectangle_check)
}

/// [`eq_quad_check`] for every `ℓ, m ≤ max` and both families.
pub fn eq_quad_sweep(max: usize) -> Result<Vec<EqQuadReport>> {
    sweep(max, eq_quad_check)
}

fn sweep<T: Send>(
    max: usize,
    check: impl Fn(usize, usize, Family) -> Result<T> + Sync,
) -> Result<Vec<T>> {
    let cases: Vec<(Family, usize, usize)> = [Family::C, Family::BD]
        .into_iter()
        .flat_map(|f| (1..=max).flat_map(move |l| (1..=max).map(move |m| (f, l, m))))
        .collect();
    cases
        .into_par_iter()
        .map(|(f, l, m)| check(l, m, f))
        .collect()
}

/// `λ = Σ c_ℓ ω_ℓ` with `c_ℓ = λ_ℓ − λ_{ℓ+1}`; only positive `c_ℓ` are kept.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    /// `(ℓ, c_ℓ)` pairs with `ℓ` increasing.
    pub fundamental: Vec<(usize, usize)>,
}

impl Weight {
    pub fn of(lambda: &Partition) -> Weight {
        let fundamental = (1..=lambda.len())
            .map(|l| (l, lambda.part(l - 1) - lambda.part(l)))
            .filter(|&(_, c)| c > 0)
            .collect();
        Weight { fundamental }
    }

    pub fn to_partition(&self) -> Result<Partition> {
        let rows = self.fundamental.iter().map(|&(l, _)| l).max().unwrap_or(0);
        let mut parts = vec![0; rows];
        for &(l, c) in &self.fundamental {
            if l == 0 {
                return Err(Error::Parse(
                    "fundamental weights are numbered from 1".into(),
                ));
            }
            for p in &mut parts[..l] {
                *p += c;
            }
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Weight {
    /// `w1 + 2*w3`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.fundamental.is_empty() {
            return f.write_str("0");
        }
        for (i, &(l, c)) in self.fundamental.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c != 1 {
                write!(f, "{c}*")?;
            }
            write!(f, "w{l}")?;
        }
        Ok(())
    }
}

pub fn weight_notation(lambda: &Partition) -> Weight {
    Weight::of(lambda)
}

/// A decomposition as `V(w1 + 2*w3) + 2*V(w2)`, in output order.
pub fn format_weights(sum: &FormalSum) -> String {
    if sum.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (mu, c)) in sum.sorted_terms().into_iter().enumerate() {
        let sep = match (i, c.is_negative()) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        out.push_str(sep);
        let abs = c.abs();
        if !abs.is_one() {
            out.push_str(&format!("{}*", rational::to_text(&abs)));
        }
        out.push_str(&format!("V({})", Weight::of(mu)));
    }
    out
}

/// The rank condition under which a stable decomposition of `λ` applies.
pub fn validity_note(lambda: &Partition) -> String {
    format!("valid for rank > {}", lambda.len() + 2)
}
