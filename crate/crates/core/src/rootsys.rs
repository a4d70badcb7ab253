//! Root systems of the simple Lie algebras.
//!
//! Positive roots are generated from the Cartan matrix by root strings, which
//! yields each root's expansion in simple roots directly. For the classical
//! families the roots are also realized in the usual ambient coordinates
//! (`A_n` in `n+1` coordinates summing to zero, `B/C/D` in `n` coordinates) and
//! the independently written ambient list is required to match the generated
//! one root for root. Exceptional roots are reported in simple-root
//! coordinates.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("invalid Lie type {family}{rank}: {constraint}")]
    InvalidRank {
        family: Family,
        rank: u32,
        constraint: &'static str,
    },
    #[error("cannot parse Lie type {0:?}: expected an uppercase letter A-G followed by a positive integer, e.g. B3")]
    Parse(String),
    #[error("{root:?} is not a positive root of {lie_type}")]
    NotARoot { lie_type: LieType, root: Vec<i64> },
    #[error("internal consistency failure while building {lie_type}: {detail}")]
    Inconsistent { lie_type: LieType, detail: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Simple Lie type. Constructed through [`LieType::new`], which canonicalizes
/// the low-rank coincidences `C_2 = B_2` and `D_3 = A_3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct LieType {
    family: Family,
    rank: u32,
}

impl LieType {
    pub fn new(family: Family, rank: u32) -> Result<Self, RootSystemError> {
        let invalid = |constraint| RootSystemError::InvalidRank {
            family,
            rank,
            constraint,
        };
        let canonical = match family {
            Family::A if rank >= 1 => (Family::A, rank),
            Family::A => return Err(invalid("A requires rank >= 1")),
            Family::B if rank >= 2 => (Family::B, rank),
            Family::B => return Err(invalid("B requires rank >= 2")),
            Family::C if rank == 2 => (Family::B, 2),
            Family::C if rank >= 3 => (Family::C, rank),
            Family::C => return Err(invalid("C requires rank >= 2")),
            Family::D if rank == 3 => (Family::A, 3),
            Family::D if rank >= 4 => (Family::D, rank),
            Family::D => return Err(invalid("D requires rank >= 3")),
            Family::E if (6..=8).contains(&rank) => (Family::E, rank),
            Family::E => return Err(invalid("E requires rank 6, 7 or 8")),
            Family::F if rank == 4 => (Family::F, 4),
            Family::F => return Err(invalid("F requires rank 4")),
            Family::G if rank == 2 => (Family::G, 2),
            Family::G => return Err(invalid("G requires rank 2")),
        };
        Ok(LieType {
            family: canonical.0,
            rank: canonical.1,
        })
    }

    pub fn a(rank: u32) -> Result<Self, RootSystemError> {
        Self::new(Family::A, rank)
    }
    pub fn b(rank: u32) -> Result<Self, RootSystemError> {
        Self::new(Family::B, rank)
    }
    pub fn c(rank: u32) -> Result<Self, RootSystemError> {
        Self::new(Family::C, rank)
    }
    pub fn d(rank: u32) -> Result<Self, RootSystemError> {
        Self::new(Family::D, rank)
    }
    pub fn e(rank: u32) -> Result<Self, RootSystemError> {
        Self::new(Family::E, rank)
    }
    pub fn f4() -> Self {
        LieType { family: Family::F, rank: 4 }
    }
    pub fn g2() -> Self {
        LieType { family: Family::G, rank: 2 }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> u32 {
        self.rank
    }

    pub fn is_exceptional(self) -> bool {
        matches!(self.family, Family::E | Family::F | Family::G)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Strict grammar: one uppercase letter `A`-`G` and a positive decimal integer
/// with no sign, whitespace or leading zeros.
impl FromStr for LieType {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = || RootSystemError::Parse(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(parse_err()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
            return Err(parse_err());
        }
        let rank: u32 = digits.parse().map_err(|_| parse_err())?;
        LieType::new(family, rank)
    }
}

impl TryFrom<String> for LieType {
    type Error = RootSystemError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<LieType> for String {
    fn from(t: LieType) -> Self {
        t.to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    lie_type: LieType,
    /// `cartan[i][j] = <alpha_i, alpha_j^vee> = 2(alpha_i, alpha_j)/(alpha_j, alpha_j)`.
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    coefficients: Vec<Vec<u32>>,
    heights: Vec<u32>,
    index: HashMap<Vec<i64>, usize>,
}

impl RootSystem {
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    /// Ordered by height, then lexicographically by coordinates.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Expansion of each positive root in simple roots, aligned with
    /// [`RootSystem::positive_roots`].
    pub fn coefficients(&self) -> &[Vec<u32>] {
        &self.coefficients
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn height(&self, root: &[i64]) -> Option<u32> {
        self.index.get(root).map(|&i| self.heights[i])
    }

    pub fn is_positive_root(&self, root: &[i64]) -> bool {
        self.index.contains_key(root)
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive_roots.last().expect("root systems are nonempty")
    }

    pub fn dimension(&self) -> usize {
        2 * self.positive_roots.len() + self.rank()
    }
}

pub fn build_root_system(t: LieType) -> Result<RootSystem, RootSystemError> {
    let n = t.rank as usize;
    let (cartan, ambient_simple) = match t.family {
        Family::A | Family::B | Family::C | Family::D => {
            let simple = classical_simple_roots(t);
            (cartan_from_inner_products(&simple), Some(simple))
        }
        _ => (exceptional_cartan(t), None),
    };
    let coefficients = generate_positive_roots(&cartan);

    let (simple_roots, positive_roots) = match ambient_simple {
        Some(simple) => {
            let sparse_simple: Vec<_> = simple.iter().map(|r| sparse(r)).collect();
            let dim = simple[0].len();
            let realized: Vec<Vec<i64>> = coefficients
                .iter()
                .map(|c| combine(&sparse_simple, dim, c))
                .collect();
            check_against_standard_list(t, &realized)?;
            (simple, realized)
        }
        None => {
            let simple = (0..n)
                .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
                .collect();
            let coords = coefficients
                .iter()
                .map(|c| c.iter().map(|&v| i64::from(v)).collect())
                .collect();
            (simple, coords)
        }
    };

    let mut order: Vec<usize> = (0..positive_roots.len()).collect();
    let height_of = |c: &Vec<u32>| c.iter().sum::<u32>();
    order.sort_by(|&a, &b| {
        height_of(&coefficients[a])
            .cmp(&height_of(&coefficients[b]))
            .then_with(|| positive_roots[a].cmp(&positive_roots[b]))
    });
    let positive_roots: Vec<Vec<i64>> = order.iter().map(|&i| positive_roots[i].clone()).collect();
    let coefficients: Vec<Vec<u32>> = order.iter().map(|&i| coefficients[i].clone()).collect();
    let heights: Vec<u32> = coefficients.iter().map(height_of).collect();

    let mut index = HashMap::with_capacity(positive_roots.len());
    for (i, r) in positive_roots.iter().enumerate() {
        if index.insert(r.clone(), i).is_some() {
            return Err(RootSystemError::Inconsistent {
                lie_type: t,
                detail: format!("root {r:?} generated twice"),
            });
        }
    }

    Ok(RootSystem {
        lie_type: t,
        cartan,
        simple_roots,
        positive_roots,
        coefficients,
        heights,
        index,
    })
}

/// Dimension of the simple Lie algebra: number of roots plus rank.
pub fn group_dimension(t: LieType) -> Result<u64, RootSystemError> {
    let rs = build_root_system(t)?;
    Ok(rs.dimension() as u64)
}

/// Eigenvalue of the principal semisimple element on the root space of `root`:
/// twice the height. It equals 2 exactly on simple roots.
pub fn principal_h_eigenvalue(rs: &RootSystem, root: &[i64]) -> Result<u32, RootSystemError> {
    rs.height(root)
        .map(|h| 2 * h)
        .ok_or_else(|| RootSystemError::NotARoot {
            lie_type: rs.lie_type,
            root: root.to_vec(),
        })
}

/// Dimension `N - n` of the adjoint orbit of a regular element.
pub fn regular_orbit_dimension(t: LieType) -> Result<u64, RootSystemError> {
    Ok(group_dimension(t)? - u64::from(t.rank))
}

fn unit(dim: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v
}

fn classical_simple_roots(t: LieType) -> Vec<Vec<i64>> {
    let n = t.rank as usize;
    let dim = if t.family == Family::A { n + 1 } else { n };
    let diff = |i: usize| {
        let mut v = unit(dim, i);
        v[i + 1] = -1;
        v
    };
    let mut roots: Vec<Vec<i64>> = (0..n - 1).map(diff).collect();
    let last = match t.family {
        Family::A => diff(n - 1),
        Family::B => unit(dim, n - 1),
        Family::C => {
            let mut v = unit(dim, n - 1);
            v[n - 1] = 2;
            v
        }
        Family::D => {
            let mut v = unit(dim, n - 1);
            v[n - 2] = 1;
            v
        }
        _ => unreachable!("classical families only"),
    };
    roots.push(last);
    roots
}

/// The standard list of positive roots: `e_i - e_j` for `A`, plus `e_i + e_j`
/// and `e_i` (B), `2e_i` (C) or nothing else (D).
fn standard_positive_roots(t: LieType) -> Vec<Vec<i64>> {
    let n = t.rank as usize;
    let dim = if t.family == Family::A { n + 1 } else { n };
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let mut v = vec![0; dim];
            v[i] = 1;
            v[j] = -1;
            out.push(v.clone());
            if t.family != Family::A {
                v[j] = 1;
                out.push(v);
            }
        }
    }
    match t.family {
        Family::B => out.extend((0..n).map(|i| unit(dim, i))),
        Family::C => out.extend((0..n).map(|i| {
            let mut v = vec![0; dim];
            v[i] = 2;
            v
        })),
        _ => {}
    }
    out
}

fn check_against_standard_list(t: LieType, realized: &[Vec<i64>]) -> Result<(), RootSystemError> {
    let standard = standard_positive_roots(t);
    let mut a = standard.clone();
    let mut b = realized.to_vec();
    a.sort();
    b.sort();
    if a != b {
        return Err(RootSystemError::Inconsistent {
            lie_type: t,
            detail: format!(
                "standard list has {} positive roots, Cartan generation produced {}",
                standard.len(),
                realized.len()
            ),
        });
    }
    Ok(())
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn combine(simple: &[Vec<(usize, i64)>], dim: usize, coeffs: &[u32]) -> Vec<i64> {
    let mut v = vec![0; dim];
    for (root, &c) in simple.iter().zip(coeffs) {
        for &(k, x) in root {
            v[k] += i64::from(c) * x;
        }
    }
    v
}

fn sparse(v: &[i64]) -> Vec<(usize, i64)> {
    v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(k, &x)| (k, x)).collect()
}

fn cartan_from_inner_products(simple: &[Vec<i64>]) -> Vec<Vec<i64>> {
    simple
        .iter()
        .map(|ai| {
            simple
                .iter()
                .map(|aj| 2 * dot(ai, aj) / dot(aj, aj))
                .collect()
        })
        .collect()
}

/// Bourbaki numbering; `E` is the chain 1-3-4-5-6(-7-8) with node 2 on node 4.
fn exceptional_cartan(t: LieType) -> Vec<Vec<i64>> {
    match (t.family, t.rank) {
        (Family::G, 2) => vec![vec![2, -1], vec![-3, 2]],
        (Family::F, 4) => vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -2, 0],
            vec![0, -1, 2, -1],
            vec![0, 0, -1, 2],
        ],
        (Family::E, n) => {
            let n = n as usize;
            let mut edges = vec![(0, 2), (1, 3), (2, 3)];
            edges.extend((3..n - 1).map(|i| (i, i + 1)));
            let mut m = vec![vec![0; n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 2;
            }
            for (i, j) in edges {
                m[i][j] = -1;
                m[j][i] = -1;
            }
            m
        }
        _ => unreachable!("exceptional families only"),
    }
}

/// Positive roots as simple-root coefficient vectors, layer by layer in
/// height. For a root `beta` and simple root `alpha_i`, `beta + alpha_i` is a
/// root iff `p - <beta, alpha_i^vee> > 0`, where `p` is the length of the
/// `alpha_i`-string below `beta`. A root of height `h+1` is reached from every
/// root `beta` of height `h` with `root - beta` simple, so `p` is known from the
/// parent that discovered it.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<u32>> {
    let n = cartan.len();
    // per root: coefficients, pairings <beta, alpha_i^vee>, string lengths p_i
    let mut coeffs: Vec<Vec<u32>> = Vec::new();
    let mut pairings: Vec<Vec<i64>> = Vec::new();
    let mut strings: Vec<Vec<u32>> = Vec::new();
    for i in 0..n {
        let mut c = vec![0; n];
        c[i] = 1;
        coeffs.push(c);
        pairings.push((0..n).map(|k| cartan[i][k]).collect());
        strings.push(vec![0; n]);
    }
    let mut layer: Vec<usize> = (0..n).collect();
    while !layer.is_empty() {
        let mut next: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut next_layer = Vec::new();
        for &b in &layer {
            for i in 0..n {
                let q = i64::from(strings[b][i]) - pairings[b][i];
                if q <= 0 {
                    continue;
                }
                let mut c = coeffs[b].clone();
                c[i] += 1;
                let idx = match next.get(&c) {
                    Some(&idx) => idx,
                    None => {
                        let idx = coeffs.len();
                        let pairing = (0..n).map(|k| pairings[b][k] + cartan[i][k]).collect();
                        coeffs.push(c.clone());
                        pairings.push(pairing);
                        strings.push(vec![0; n]);
                        next.insert(c, idx);
                        next_layer.push(idx);
                        idx
                    }
                };
                strings[idx][i] = strings[b][i] + 1;
            }
        }
        layer = next_layer;
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn small_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.positive_roots().len(), 1);
        assert_eq!(a1.dimension(), 3);
        let g2 = rs("G2");
        assert_eq!(g2.positive_roots().len(), 6);
        assert_eq!(g2.dimension(), 14);
        let d4 = rs("D4");
        assert_eq!(d4.positive_roots().len(), 12);
        assert_eq!(d4.dimension(), 28);
    }

    #[test]
    fn dimensions_of_named_types() {
        let dim = |s: &str| group_dimension(s.parse().unwrap()).unwrap();
        assert_eq!(dim("B3"), 21);
        assert_eq!(dim("G2"), 14);
        assert_eq!(dim("E6"), 78);
        assert_eq!(dim("F4"), 52);
        assert_eq!(dim("E7"), 133);
        assert_eq!(dim("E8"), 248);
        assert_eq!(dim("A1"), 3);
        assert_eq!(dim("C3"), 21);
    }

    #[test]
    fn principal_eigenvalues() {
        let a2 = rs("A2");
        assert_eq!(principal_h_eigenvalue(&a2, &[1, -1, 0]).unwrap(), 2);
        assert_eq!(principal_h_eigenvalue(&a2, &[1, 0, -1]).unwrap(), 4);
        let g2 = rs("G2");
        assert_eq!(principal_h_eigenvalue(&g2, g2.highest_root()).unwrap(), 10);
        assert!(matches!(
            principal_h_eigenvalue(&a2, &[0, 1, 1]),
            Err(RootSystemError::NotARoot { .. })
        ));
    }

    #[test]
    fn regular_orbit_dimensions() {
        let reg = |s: &str| regular_orbit_dimension(s.parse().unwrap()).unwrap();
        assert_eq!(reg("A1"), 2);
        assert_eq!(reg("A3"), 12);
        assert_eq!(reg("E6"), 72);
    }

    #[test]
    fn parse_is_strict() {
        for bad in ["Z9", "b3", "B 3", "B", "B03", "B-3", " B3", "A0", "E9", "G3", "B1", "D2", "C1"] {
            assert!(bad.parse::<LieType>().is_err(), "{bad} should not parse");
        }
        assert_eq!("C2".parse::<LieType>().unwrap(), LieType::b(2).unwrap());
        assert_eq!("D3".parse::<LieType>().unwrap(), LieType::a(3).unwrap());
        assert_eq!("E7".parse::<LieType>().unwrap().to_string(), "E7");
    }

    #[test]
    fn canonicalized_types_give_identical_data() {
        assert_eq!(rs("C2"), rs("B2"));
        assert_eq!(rs("D3"), rs("A3"));
    }

    #[test]
    fn invalid_rank_names_the_constraint() {
        let err = LieType::new(Family::E, 5).unwrap_err();
        assert!(err.to_string().contains("rank 6, 7 or 8"));
    }

    #[test]
    fn ordering_is_by_height_then_coordinates() {
        let b3 = rs("B3");
        let hs = b3.heights();
        assert!(hs.windows(2).all(|w| w[0] <= w[1]));
        let mut simple = b3.simple_roots().to_vec();
        simple.sort();
        assert_eq!(&b3.positive_roots()[..3], simple.as_slice());
    }

    #[test]
    fn g2_highest_root_expansion() {
        let g2 = rs("G2");
        assert_eq!(g2.coefficients().last().unwrap(), &vec![3, 2]);
        assert_eq!(g2.cartan_matrix(), &[vec![2, -1], vec![-3, 2]]);
    }
}
