//! Integer partitions (Young diagrams) and the order relations on them.
//!
//! A [`Partition`] never stores trailing zeros, so the empty partition is the
//! empty vector and equality is structural.
//!
//! The [`Ord`] instance is the canonical enumeration order used everywhere in
//! the crate: size ascending, then descending lexicographic within a size.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any other zero or an increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::Parse(format!(
                "parts {parts:?} contain an interior zero"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given parts into a partition. Zeros are discarded.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Caller guarantees the parts are weakly decreasing and positive.
    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single row `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::rectangle(1, n)
    }

    /// The single column `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition::rectangle(n, 1)
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![cols; rows],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Extended dominance order: every partial sum of `self` is bounded by the
    /// corresponding partial sum of `other`, padding `other` with zeros. Sizes
    /// need not agree.
    pub fn leq_extended(&self, other: &Partition) -> bool {
        let mut mine = 0;
        let mut theirs = 0;
        for (k, &p) in self.parts.iter().enumerate() {
            mine += p;
            theirs += other.part(k);
            if mine > theirs {
                return false;
            }
        }
        true
    }

    /// Diagram containment `inner ⊆ self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Every column has even height.
    pub fn all_even_columns(&self) -> bool {
        self.transpose().all_even_rows()
    }

    /// Every row has even length.
    pub fn all_even_rows(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    /// Each part multiplied by `k`.
    pub fn scale(&self, k: usize) -> Partition {
        if k == 0 {
            return Partition::empty();
        }
        Partition {
            parts: self.parts.iter().map(|p| p * k).collect(),
        }
    }

    /// All partitions of `n` in descending lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        descend(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of size at most `n`, in canonical order.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of).collect()
    }

    /// Partitions of `n` containing `inner`, in descending lexicographic order.
    pub fn all_of_containing(n: usize, inner: &Partition) -> Vec<Partition> {
        let mut out = Vec::new();
        if inner.size() > n {
            return out;
        }
        let mut cur = Vec::new();
        descend_above(n, n, inner, &mut cur, &mut out);
        out
    }

    /// Subpartitions `mu ⊆ self`, in canonical order.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        descend_below(self, usize::MAX, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Text form used by the command line: `3,2,2`, with `-` for the empty
    /// partition.
    pub fn to_text(&self) -> String {
        if self.is_empty() {
            "-".to_string()
        } else {
            join(&self.parts)
        }
    }

    /// Bracketed form used inside formal sums: `[3,2,2]`, `[]` for empty.
    pub fn bracketed(&self) -> String {
        format!("[{}]", join(&self.parts))
    }
}

fn join(parts: &[usize]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn descend(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=rem.min(max)).rev() {
        cur.push(p);
        descend(rem - p, p, cur, out);
        cur.pop();
    }
}

fn descend_above(
    rem: usize,
    max: usize,
    inner: &Partition,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    let i = cur.len();
    // the remaining rows of `inner` still have to fit
    let needed: usize = inner.parts.iter().skip(i).sum();
    if needed > rem {
        return;
    }
    if rem == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    let lo = inner.part(i).max(1);
    for p in (lo..=rem.min(max)).rev() {
        cur.push(p);
        descend_above(rem - p, p, inner, cur, out);
        cur.pop();
    }
}

fn descend_below(outer: &Partition, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    out.push(Partition { parts: cur.clone() });
    let i = cur.len();
    let hi = outer.part(i).min(max);
    for p in 1..=hi {
        cur.push(p);
        descend_below(outer, p, cur, out);
        cur.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Output order for formal sums and decompositions: size descending, then
/// descending lexicographic.
pub fn display_order(a: &Partition, b: &Partition) -> Ordering {
    b.size().cmp(&a.size()).then_with(|| b.parts.cmp(&a.parts))
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" || s == "[]" {
            return Ok(Partition::empty());
        }
        let s = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(s);
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?} in partition {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.parts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.bracketed())
    }
}

/// Shorthand for literals in tests and examples: `part![3, 2, 2]`.
#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}
