//! Integer partitions: enumeration, constrained counting and the predicates
//! that classify Jordan types of nilpotent elements in classical algebras.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact count type for partition numbers. Every addition is checked.
pub type Count = u128;

/// Up to this total, [`count_partitions`] counts by enumeration; above it, by
/// dynamic programming. Both routes are compared on the overlap in tests.
pub const ENUMERATION_COUNT_CAP: u32 = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive, got {0:?}")]
    NonPositivePart(Vec<u32>),
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("partition count for n = {0} overflows 128 bits")]
    Overflow(u32),
}

/// A weakly decreasing sequence of positive integers. The empty sequence is the
/// unique partition of 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::NonPositivePart(parts));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn multiplicity(&self, value: u32) -> usize {
        self.0.iter().filter(|&&p| p == value).count()
    }

    pub fn contains_part(&self, value: u32) -> bool {
        self.0.contains(&value)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let largest = self.0.first().copied().unwrap_or(0);
        let parts = (1..=largest)
            .map(|i| self.0.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Every odd part occurs an even number of times.
    pub fn is_symplectic(&self) -> bool {
        self.distinct_values()
            .filter(|v| v % 2 == 1)
            .all(|v| self.multiplicity(v) % 2 == 0)
    }

    /// Every even part occurs an even number of times.
    pub fn is_orthogonal(&self) -> bool {
        self.distinct_values()
            .filter(|v| v % 2 == 0)
            .all(|v| self.multiplicity(v) % 2 == 0)
    }

    pub fn satisfies(&self, constraint: PartitionConstraint) -> bool {
        let distinct = self.0.windows(2).all(|w| w[0] > w[1]);
        match constraint {
            PartitionConstraint::Unrestricted => true,
            PartitionConstraint::DistinctParts => distinct,
            PartitionConstraint::DistinctOddParts => distinct && self.0.iter().all(|p| p % 2 == 1),
        }
    }

    fn distinct_values(&self) -> impl Iterator<Item = u32> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|&(i, p)| i == 0 || self.0[i - 1] != *p)
            .map(|(_, &p)| p)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
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

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionConstraint {
    Unrestricted,
    DistinctParts,
    DistinctOddParts,
}

impl PartitionConstraint {
    fn allows_part(self, part: u32) -> bool {
        !matches!(self, PartitionConstraint::DistinctOddParts) || part % 2 == 1
    }

    fn distinct(self) -> bool {
        !matches!(self, PartitionConstraint::Unrestricted)
    }
}

/// All partitions of `n` satisfying `constraint`, in lexicographically
/// decreasing order. The number of results grows like `exp(pi*sqrt(2n/3))`,
/// so use [`count_partitions`] when only the count is needed.
pub fn enumerate_partitions(n: u32, constraint: PartitionConstraint) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    enumerate_into(n, n, constraint, &mut prefix, &mut out);
    out
}

fn enumerate_into(
    remaining: u32,
    max_part: u32,
    constraint: PartitionConstraint,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition(prefix.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        if !constraint.allows_part(part) {
            continue;
        }
        prefix.push(part);
        let next_max = if constraint.distinct() { part - 1 } else { part };
        enumerate_into(remaining - part, next_max, constraint, prefix, out);
        prefix.pop();
    }
}

/// Number of partitions of `n` satisfying `constraint`.
pub fn count_partitions(n: u32, constraint: PartitionConstraint) -> Result<Count, PartitionError> {
    if n <= ENUMERATION_COUNT_CAP {
        return Ok(enumerate_partitions(n, constraint).len() as Count);
    }
    Ok(partition_count_table(n, constraint)?[n as usize])
}

/// `table[m]` is the number of partitions of `m` under `constraint`, for every
/// `0 <= m <= n`, computed by the coin-change recurrence.
pub fn partition_count_table(
    n: u32,
    constraint: PartitionConstraint,
) -> Result<Vec<Count>, PartitionError> {
    let n = n as usize;
    let mut table = vec![0 as Count; n + 1];
    table[0] = 1;
    for part in 1..=n {
        if !constraint.allows_part(part as u32) {
            continue;
        }
        if constraint.distinct() {
            // descending sweep uses each part at most once
            for s in (part..=n).rev() {
                table[s] = checked_add(table[s], table[s - part], s)?;
            }
        } else {
            for s in part..=n {
                table[s] = checked_add(table[s], table[s - part], s)?;
            }
        }
    }
    Ok(table)
}

fn checked_add(a: Count, b: Count, at: usize) -> Result<Count, PartitionError> {
    a.checked_add(b).ok_or(PartitionError::Overflow(at as u32))
}
