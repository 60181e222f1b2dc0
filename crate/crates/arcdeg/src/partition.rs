use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Trailing zeros are stripped on construction, so the empty partition is
/// represented by an empty part list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from a weakly decreasing sequence. Zeros are allowed
    /// at the tail and removed; an increase anywhere is an error.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts: Vec<u32> = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order, discarding zeros.
    pub fn from_unsorted(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts: Vec<u32> = parts.into();
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part with 0-based indexing; 0 beyond the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.part(0)
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Conjugate partition: the k-th part counts the original parts that are >= k.
    pub fn conjugate(&self) -> Partition {
        let mut conj = Vec::with_capacity(self.first() as usize);
        for k in 1..=self.first() {
            conj.push(self.parts.iter().filter(|&&p| p >= k).count() as u32);
        }
        Partition { parts: conj }
    }

    /// The moment sum(i * lambda_{i+1}) over 0-based i, a standard statistic
    /// entering the orbit dimension count.
    pub fn moment(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }

    /// Dominance order on partitions of the same size: every prefix sum of
    /// `self` is at most the corresponding prefix sum of `other`.
    pub fn leq_dominance(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let n = self.len().max(other.len());
        let mut acc_self = 0u64;
        let mut acc_other = 0u64;
        for i in 0..n {
            acc_self += self.part(i) as u64;
            acc_other += other.part(i) as u64;
            if acc_self > acc_other {
                return false;
            }
        }
        true
    }

    /// Containment of Young diagrams: self_i <= other_i for every row.
    pub fn contains(outer: &Partition, inner: &Partition) -> bool {
        (0..inner.len()).all(|i| inner.part(i) <= outer.part(i))
    }

    /// Whether `outer / inner` is a horizontal strip: the skew diagram exists
    /// and has at most one box per column, i.e. outer_{i+1} <= inner_i.
    pub fn horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
        Partition::contains(outer, inner) && (0..outer.len()).all(|i| outer.part(i + 1) <= inner.part(i))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts "5,4,3", "(5,4,3)", "[5, 4, 3]", or "" for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        if trimmed.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<u32> = trimmed
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Malformed(format!("bad part {tok:?}: {e}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}
