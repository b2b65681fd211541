//! Partitions and dominant GL(k) weights: construction, conjugation, and
//! bounded enumeration.

use std::fmt;

use crate::error::{Error, Result};

/// A dominant weight of GL(k): a weakly decreasing integer vector of fixed
/// length. Entries may be negative.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantWeight {
    entries: Vec<i64>,
}

impl DominantWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(entries));
        }
        Ok(DominantWeight { entries })
    }

    /// The zero weight of the given rank.
    pub fn zero(rank: usize) -> Self {
        DominantWeight {
            entries: vec![0; rank],
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Adds `d` to every entry (a determinant twist).
    pub fn shifted(&self, d: i64) -> Self {
        DominantWeight {
            entries: self.entries.iter().map(|&e| e + d).collect(),
        }
    }

    /// The highest weight of the dual representation: negated and reversed.
    pub fn dual(&self) -> Self {
        DominantWeight {
            entries: self.entries.iter().rev().map(|&e| -e).collect(),
        }
    }

    pub fn check_rank(&self, k: usize) -> Result<()> {
        if self.rank() != k {
            return Err(Error::LengthMismatch {
                expected: k,
                found: self.rank(),
            });
        }
        Ok(())
    }

    /// Converts to a partition; fails when an entry is negative.
    pub fn to_partition(&self) -> Result<Partition> {
        if self.entries.iter().any(|&e| e < 0) {
            return Err(Error::NotPartition(self.entries.clone()));
        }
        Partition::new(
            self.entries
                .iter()
                .take_while(|&&e| e > 0)
                .map(|&e| e as u64)
                .collect(),
        )
    }
}

impl fmt::Debug for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A partition: a weakly decreasing vector of positive integers.
/// Trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.last() == Some(&0) {
            return Err(Error::NotPartition(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from a weakly decreasing vector that may carry
    /// trailing zeros.
    pub fn from_padded(parts: &[u64]) -> Result<Self> {
        let trimmed: Vec<u64> = parts.iter().copied().take_while(|&p| p > 0).collect();
        if parts[trimmed.len()..].iter().any(|&p| p != 0) {
            return Err(Error::NotPartition(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        Partition::new(trimmed)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Total number of boxes of the Young diagram.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn part(&self, row: usize) -> u64 {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// Entries padded with zeros to length `len`; fails when the partition
    /// has more than `len` parts.
    pub fn to_weight(&self, len: usize) -> Result<DominantWeight> {
        if self.parts.len() > len {
            return Err(Error::LengthMismatch {
                expected: len,
                found: self.parts.len(),
            });
        }
        let mut entries: Vec<i64> = self.parts.iter().map(|&p| p as i64).collect();
        entries.resize(len, 0);
        DominantWeight::new(entries)
    }

    /// Whether the diagram fits in a `rows x cols` box.
    pub fn fits_in_box(&self, rows: usize, cols: u64) -> bool {
        self.parts.len() <= rows && self.parts.first().copied().unwrap_or(0) <= cols
    }
}

impl fmt::Debug for Partition {
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

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Counts boxes per column of `p`; an involution.
pub fn conjugate(p: &Partition) -> Partition {
    let mut cols = Vec::new();
    let width = p.part(0);
    for c in 0..width {
        let height = p.parts().iter().filter(|&&row| row > c).count() as u64;
        cols.push(height);
    }
    Partition { parts: cols }
}

/// All partitions with at most `rows` parts, each at most `cols`, listed in
/// ascending lexicographic order of their part vectors.
pub fn enumerate_in_box(rows: usize, cols: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack: Vec<u64> = Vec::new();
    fn rec(rows: usize, cols: u64, stack: &mut Vec<u64>, out: &mut Vec<Partition>) {
        out.push(Partition {
            parts: stack.clone(),
        });
        if stack.len() == rows {
            return;
        }
        let max = stack.last().copied().unwrap_or(cols);
        for next in 1..=max {
            stack.push(next);
            rec(rows, cols, stack, out);
            stack.pop();
        }
    }
    rec(rows, cols, &mut stack, &mut out);
    out.sort();
    out
}

/// All weakly decreasing integer vectors of length `k` with every entry in
/// the half-open interval `[lo, hi)`, in ascending lexicographic order.
pub fn enumerate_dominant_in_interval(k: usize, lo: i64, hi: i64) -> Result<Vec<DominantWeight>> {
    if lo >= hi {
        return Err(Error::EmptyInterval { lo, hi });
    }
    let mut out = Vec::new();
    let mut stack: Vec<i64> = Vec::new();
    fn rec(k: usize, lo: i64, hi: i64, stack: &mut Vec<i64>, out: &mut Vec<DominantWeight>) {
        if stack.len() == k {
            out.push(DominantWeight {
                entries: stack.clone(),
            });
            return;
        }
        let max = stack.last().copied().unwrap_or(hi - 1);
        for next in lo..=max {
            stack.push(next);
            rec(k, lo, hi, stack, out);
            stack.pop();
        }
    }
    rec(k, lo, hi, &mut stack, &mut out);
    out.sort();
    Ok(out)
}
