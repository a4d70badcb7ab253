//! Nilpotent orbits: counts for every simple type, type-A classification by
//! Jordan type with the orbit-dimension formula, a brute-force centralizer
//! computation to check that formula, and subregular orbit data.
//!
//! Counting convention: the zero orbit is included for every type. For `D_m`
//! the pair-of-partitions count is used as is; very even Jordan types are not
//! counted twice.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{q, Matrix};
use crate::partitions::{
    enumerate_partitions, partition_count_table, Count, Partition, PartitionConstraint, PartitionError,
};
use crate::rootsys::{Family, LieType, RootSystemError};

/// Largest `n` accepted by [`classify_nilpotent_orbits_type_a`].
pub const TYPE_A_CLASSIFY_CAP: u32 = 30;
/// Largest matrix size accepted by [`centralizer_dimension_oracle`].
pub const CENTRALIZER_ORACLE_CAP: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("{what} = {value} exceeds the supported maximum {cap}")]
    Capacity {
        what: &'static str,
        value: u32,
        cap: u32,
    },
    #[error("the orbit dimension formula needs a nonempty partition")]
    EmptyPartition,
    #[error("subregular Jordan types are only tabulated for A_r (r >= 2), D_l (l >= 4) and B3, not {0}")]
    UnsupportedSubregular(LieType),
    #[error("orbit count overflow for {0}")]
    Overflow(LieType),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountMethod {
    PartitionFormula,
    ExceptionalTable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitCount {
    pub lie_type: LieType,
    pub count: Count,
    pub method: CountMethod,
    /// Always true: the zero orbit is part of every count.
    pub includes_zero_orbit: bool,
    /// Set for type D, whose count is the plain pair formula without the
    /// doubling of very even Jordan types.
    pub d_pair_formula_uncorrected: bool,
}

/// Number of nilpotent orbits in the simple Lie algebra of type `t`.
///
/// * `A_n`: partitions of `n+1`.
/// * `B_m`: pairs `(lambda, mu)` with `2|lambda| + |mu| = 2m+1`, `mu` distinct odd parts.
/// * `C_m`: pairs with `|lambda| + |mu| = m`, `mu` distinct parts.
/// * `D_m`: pairs with `2|lambda| + |mu| = 2m`, `mu` distinct odd parts.
/// * `G2, F4, E6, E7, E8`: 5, 16, 21, 45, 70.
pub fn nilpotent_orbit_count(t: LieType) -> Result<OrbitCount, OrbitError> {
    let m = t.rank();
    let (count, method) = match t.family() {
        Family::A => {
            let table = partition_count_table(m + 1, PartitionConstraint::Unrestricted)?;
            (table[(m + 1) as usize], CountMethod::PartitionFormula)
        }
        Family::B => (
            weighted_pair_count(t, 2 * m + 1, 2, PartitionConstraint::DistinctOddParts)?,
            CountMethod::PartitionFormula,
        ),
        Family::C => (
            weighted_pair_count(t, m, 1, PartitionConstraint::DistinctParts)?,
            CountMethod::PartitionFormula,
        ),
        Family::D => (
            weighted_pair_count(t, 2 * m, 2, PartitionConstraint::DistinctOddParts)?,
            CountMethod::PartitionFormula,
        ),
        Family::G => (5, CountMethod::ExceptionalTable),
        Family::F => (16, CountMethod::ExceptionalTable),
        Family::E => (
            match m {
                6 => 21,
                7 => 45,
                _ => 70,
            },
            CountMethod::ExceptionalTable,
        ),
    };
    Ok(OrbitCount {
        lie_type: t,
        count,
        method,
        includes_zero_orbit: true,
        d_pair_formula_uncorrected: t.family() == Family::D,
    })
}

/// Number of pairs `(lambda, mu)` with `weight*|lambda| + |mu| = total`,
/// `lambda` unrestricted and `mu` under `mu_constraint`.
fn weighted_pair_count(
    t: LieType,
    total: u32,
    weight: u32,
    mu_constraint: PartitionConstraint,
) -> Result<Count, OrbitError> {
    let lambdas = partition_count_table(total / weight, PartitionConstraint::Unrestricted)?;
    let mus = partition_count_table(total, mu_constraint)?;
    let mut sum: Count = 0;
    for (k, &pk) in lambdas.iter().enumerate() {
        let rest = total as usize - weight as usize * k;
        let term = pk.checked_mul(mus[rest]).ok_or(OrbitError::Overflow(t))?;
        sum = sum.checked_add(term).ok_or(OrbitError::Overflow(t))?;
    }
    Ok(sum)
}

/// Jordan types labelling the nilpotent orbits of `sl_{n+1}`: all partitions
/// of `n+1` in canonical order.
pub fn classify_nilpotent_orbits_type_a(n: u32) -> Result<Vec<Partition>, OrbitError> {
    if n > TYPE_A_CLASSIFY_CAP {
        return Err(OrbitError::Capacity {
            what: "type A rank",
            value: n,
            cap: TYPE_A_CLASSIFY_CAP,
        });
    }
    Ok(enumerate_partitions(n + 1, PartitionConstraint::Unrestricted))
}

/// `sum_i (conj(p)_i)^2`, the centralizer dimension in `gl_k` of a nilpotent
/// matrix with Jordan type `p`.
pub fn centralizer_dimension_formula(p: &Partition) -> u64 {
    p.conjugate()
        .parts()
        .iter()
        .map(|&c| u64::from(c) * u64::from(c))
        .sum()
}

/// Dimension of the nilpotent orbit of Jordan type `p` in `sl_k`, `k = |p|`:
/// `k^2 - sum_i (conj(p)_i)^2`.
pub fn orbit_dimension_type_a(p: &Partition) -> Result<u64, OrbitError> {
    if p.is_empty() {
        return Err(OrbitError::EmptyPartition);
    }
    let k = u64::from(p.total());
    Ok(k * k - centralizer_dimension_formula(p))
}

/// Codimension of the orbit of Jordan type `p` in `sl_k`.
pub fn orbit_codimension_type_a(p: &Partition) -> Result<u64, OrbitError> {
    let k = u64::from(p.total());
    Ok(k * k - 1 - orbit_dimension_type_a(p)?)
}

/// The nilpotent matrix in Jordan form with block sizes `p`, as a dense 0/1
/// matrix with ones on the superdiagonal inside each block.
pub fn jordan_nilpotent(p: &Partition) -> Vec<Vec<i64>> {
    let k = p.total() as usize;
    let mut m = vec![vec![0; k]; k];
    let mut start = 0;
    for &block in p.parts() {
        let block = block as usize;
        for i in start..start + block - 1 {
            m[i][i + 1] = 1;
        }
        start += block;
    }
    m
}

/// Dimension of `{Y : NY = YN}` for the Jordan nilpotent `N` of type `p`,
/// from the exact kernel of the `k^2 x k^2` commutator system.
pub fn centralizer_dimension_oracle(p: &Partition) -> Result<u64, OrbitError> {
    let k = p.total();
    if k > CENTRALIZER_ORACLE_CAP {
        return Err(OrbitError::Capacity {
            what: "matrix size",
            value: k,
            cap: CENTRALIZER_ORACLE_CAP,
        });
    }
    let k = k as usize;
    if k == 0 {
        return Ok(0);
    }
    let n = jordan_nilpotent(p);
    // unknown Y[a][b] sits at column a*k + b; row (i, j) encodes (NY - YN)[i][j]
    let mut system = Matrix::zeros(k * k, k * k);
    for i in 0..k {
        for j in 0..k {
            let row = i * k + j;
            for l in 0..k {
                if n[i][l] != 0 {
                    let col = l * k + j;
                    let v = system.get(row, col) + q(n[i][l]);
                    system.set(row, col, v);
                }
                if n[l][j] != 0 {
                    let col = i * k + l;
                    let v = system.get(row, col) - q(n[l][j]);
                    system.set(row, col, v);
                }
            }
        }
    }
    Ok(system.nullity() as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubregularDatum {
    pub lie_type: LieType,
    pub partition: Option<Partition>,
    pub codimension: u32,
}

/// Jordan type of the subregular orbit: `(r,1)` in `A_r`, `(2l-3,3)` in `D_l`,
/// `(5,1,1)` in `B_3`.
pub fn subregular_partition(t: LieType) -> Result<Partition, OrbitError> {
    let parts = match (t.family(), t.rank()) {
        (Family::A, r) if r >= 2 => vec![r, 1],
        (Family::D, l) if l >= 4 => vec![2 * l - 3, 3],
        (Family::B, 3) => vec![5, 1, 1],
        _ => return Err(OrbitError::UnsupportedSubregular(t)),
    };
    Ok(Partition::new(parts)?)
}

/// The subregular orbit has codimension `rank + 2`; the Jordan type is filled
/// in where [`subregular_partition`] knows it.
pub fn subregular_datum(t: LieType) -> SubregularDatum {
    SubregularDatum {
        lie_type: t,
        partition: subregular_partition(t).ok(),
        codimension: t.rank() + 2,
    }
}
