//! Integer partitions and the dominance (majorization) order.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers. It is
//! the common currency of the crate: rank sequences, Young diagram shapes and
//! the prefix shapes of certificates are all partitions. Trailing zeros are
//! never stored; every operation pads with zeros internally where needed.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has an interior zero"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts `parts` decreasingly and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The rectangular partition `(width^height)`.
    pub fn rectangle(width: usize, height: usize) -> Self {
        if width == 0 {
            return Partition::empty();
        }
        Partition(vec![width; height])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`, the sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part (0-based), reading zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> usize {
        self.part(0)
    }

    /// Number of parts equal to `value`.
    pub fn multiplicity(&self, value: usize) -> usize {
        self.0.iter().filter(|&&p| p == value).count()
    }

    /// Prefix sums `σ_1, …, σ_len`.
    pub fn prefix_sums(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// Zero-padded copy of the parts with exactly `len` entries (truncating if shorter).
    pub fn padded(&self, len: usize) -> Vec<usize> {
        (0..len).map(|i| self.part(i)).collect()
    }

    /// Young diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    /// Whether the diagram fits in `rows` rows of width `cols`.
    pub fn fits_in(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.largest() <= cols
    }

    /// `self ≼ other` in dominance order.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        dominance_leq(self, other)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.largest();
        Partition(
            (1..=width)
                .map(|c| self.0.iter().take_while(|&&p| p >= c).count())
                .collect(),
        )
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Dominance order: `a ≼ b` iff `|a| = |b|` and every prefix sum of `a` is at
/// most the corresponding prefix sum of `b`.
pub fn dominance_leq(a: &Partition, b: &Partition) -> bool {
    if a.size() != b.size() {
        return false;
    }
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0, 0);
    for i in 0..len {
        sa += a.part(i);
        sb += b.part(i);
        if sa > sb {
            return false;
        }
    }
    true
}

/// A chain `a = L⁰ ≼ L¹ ≼ … ≼ Lⁿ = b` in which consecutive members differ by
/// one unit move: `+1` at the first position where the current member differs
/// from `b` and `-1` at the last such position.
pub fn majorization_chain(a: &Partition, b: &Partition) -> Result<Vec<Partition>> {
    if !dominance_leq(a, b) {
        return Err(Error::NotDominated {
            smaller: a.to_string(),
            larger: b.to_string(),
        });
    }
    let len = a.len().max(b.len());
    let target = b.padded(len);
    let mut current = a.padded(len);
    let mut chain = vec![a.clone()];
    while current != target {
        let first = (0..len).find(|&i| current[i] != target[i]).unwrap();
        let last = (0..len).rev().find(|&i| current[i] != target[i]).unwrap();
        current[first] += 1;
        current[last] -= 1;
        chain.push(Partition::new(current.clone())?);
    }
    Ok(chain)
}

/// The complement `λ* = (M−λ_N, …, M−λ_1)` of `λ` inside the `N×M` rectangle
/// (`N` rows of width `M`).
pub fn dual_in_rectangle(lambda: &Partition, m: usize, n: usize) -> Result<Partition> {
    if !lambda.fits_in(n, m) {
        return Err(Error::DoesNotFit {
            partition: lambda.to_string(),
            rows: n,
            cols: m,
        });
    }
    Partition::new((0..n).rev().map(|i| m - lambda.part(i)).collect())
}

/// All partitions of `n` with at most `max_len` parts, each at most
/// `max_part`, in reverse lexicographic order (largest first).
///
/// Reverse lexicographic order is a linear extension of dominance: if
/// `a ≻ b` then `a` is listed before `b`.
pub fn partitions_of(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    fn rec(
        remaining: usize,
        cap: usize,
        slots: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        if slots == 0 || cap * slots < remaining {
            return;
        }
        for part in (1..=cap.min(remaining)).rev() {
            current.push(part);
            rec(remaining - part, part, slots - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}
