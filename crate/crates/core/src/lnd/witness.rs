use num_traits::{One, Signed, Zero};

use super::derivation::{is_in_kernel, Derivation};
use super::poly::MultiPoly;
use super::ring::{format_rational, QuotientRing};
use super::LndError;
use crate::linalg::{Matrix, Q};
use std::collections::BTreeMap;

/// Largest product degree tried when callers do not supply one.
pub const DEFAULT_WITNESS_DEGREE: u32 = 3;

/// One summand `coefficient * (K1 monomial) * (K2 monomial)` of a witness.
/// Exponent vectors index into the two kernel lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessTerm {
    pub coefficient: Q,
    pub left: Vec<u32>,
    pub right: Vec<u32>,
}

/// An explicit expression of `1` as a linear combination of products of
/// kernel elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Smallest monomial degree bound at which the search succeeded.
    pub degree: u32,
    pub terms: Vec<WitnessTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessOutcome {
    Found(Witness),
    NotFound { degree: u32 },
}

impl Witness {
    /// `1 = a1*b2 - a2*b1` style rendering, factors printed with the ring's
    /// formatter and parenthesized when they have more than one term.
    pub fn render(&self, ring: &QuotientRing, k1: &[MultiPoly], k2: &[MultiPoly]) -> String {
        let mut s = String::from("1 = ");
        for (i, t) in self.terms.iter().enumerate() {
            match (i, t.coefficient.is_negative()) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let abs = t.coefficient.abs();
            let mut factors = Vec::new();
            if !abs.is_one() {
                factors.push(format_rational(&abs));
            }
            factors.extend(render_power_product(ring, k1, &t.left));
            factors.extend(render_power_product(ring, k2, &t.right));
            s.push_str(&factors.join("*"));
        }
        s
    }

    /// Recomputes `sum coefficient * left * right` in the ring.
    pub fn evaluate(&self, ring: &QuotientRing, k1: &[MultiPoly], k2: &[MultiPoly]) -> MultiPoly {
        let mut acc = ring.zero();
        for t in &self.terms {
            let prod = &power_product(ring, k1, &t.left) * &power_product(ring, k2, &t.right);
            acc.add_scaled(&prod, &t.coefficient);
        }
        ring.normal_form(&acc)
    }
}

fn render_power_product(ring: &QuotientRing, elems: &[MultiPoly], exps: &[u32]) -> Vec<String> {
    elems
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|(f, &e)| {
            let body = ring.format(f);
            let body = if f.num_terms() > 1 { format!("({body})") } else { body };
            if e == 1 {
                body
            } else {
                format!("{body}^{e}")
            }
        })
        .collect()
}

fn power_product(ring: &QuotientRing, elems: &[MultiPoly], exps: &[u32]) -> MultiPoly {
    let mut acc = ring.one();
    for (f, &e) in elems.iter().zip(exps) {
        if e > 0 {
            acc = ring.normal_form(&(&acc * &f.pow(e)));
        }
    }
    acc
}

/// Exponent vectors over `len` elements with total degree in `1..=max_degree`,
/// ordered by degree, then lexicographically decreasing.
fn exponent_vectors(len: usize, max_degree: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for deg in 1..=max_degree {
        let mut cur = vec![0; len];
        fill(&mut cur, 0, deg, &mut out);
    }
    out
}

fn fill(cur: &mut Vec<u32>, i: usize, remaining: u32, out: &mut Vec<Vec<u32>>) {
    if i == cur.len() {
        if remaining == 0 {
            out.push(cur.clone());
        }
        return;
    }
    for e in (0..=remaining).rev() {
        cur[i] = e;
        fill(cur, i + 1, remaining - e, out);
    }
    cur[i] = 0;
}

/// Searches `Span(K1 * K2)` for the constant `1`.
///
/// Products `f*g` are formed from monomials `f` in the elements of `k1` and `g`
/// in the elements of `k2`, each of total degree `1..=D`, for `D = 1, 2, ...,
/// max_degree` in turn. For each `D` the normal forms are written in monomial
/// coordinates and the linear system `sum c_fg * f*g = 1` is solved exactly.
/// The first solution found is returned.
pub fn verify_semicompatibility_witness(
    ring: &QuotientRing,
    d1: &Derivation,
    k1: &[MultiPoly],
    d2: &Derivation,
    k2: &[MultiPoly],
    max_degree: u32,
) -> Result<WitnessOutcome, LndError> {
    for (elems, d, which) in [(k1, d1, 1u8), (k2, d2, 2u8)] {
        for f in elems {
            ring.check_arity(f)?;
            if !is_in_kernel(ring, d, f) {
                return Err(LndError::NotInKernel {
                    element: ring.format(f),
                    which,
                });
            }
        }
    }
    if k1.is_empty() || k2.is_empty() {
        return Ok(WitnessOutcome::NotFound { degree: max_degree });
    }

    for degree in 1..=max_degree {
        let lefts = exponent_vectors(k1.len(), degree);
        let rights = exponent_vectors(k2.len(), degree);
        let left_polys: Vec<MultiPoly> = lefts.iter().map(|e| power_product(ring, k1, e)).collect();
        let right_polys: Vec<MultiPoly> = rights.iter().map(|e| power_product(ring, k2, e)).collect();

        let mut columns = Vec::new();
        let mut labels = Vec::new();
        for (i, lp) in left_polys.iter().enumerate() {
            for (j, rp) in right_polys.iter().enumerate() {
                columns.push(ring.normal_form(&(lp * rp)));
                labels.push((i, j));
            }
        }

        let one = ring.one();
        let mut rows: BTreeMap<_, usize> = BTreeMap::new();
        for m in columns.iter().chain(std::iter::once(&one)).flat_map(|p| p.terms().map(|(m, _)| m.clone())) {
            let next = rows.len();
            rows.entry(m).or_insert(next);
        }
        let mut a = Matrix::zeros(rows.len(), columns.len());
        for (c, poly) in columns.iter().enumerate() {
            for (m, v) in poly.terms() {
                a.set(rows[m], c, v.clone());
            }
        }
        let mut rhs = vec![Q::zero(); rows.len()];
        let (const_monomial, _) = one.terms().next().expect("one is nonzero");
        rhs[rows[const_monomial]] = Q::one();

        if let Some(x) = a.solve(&rhs) {
            let terms = x
                .into_iter()
                .zip(&labels)
                .filter(|(c, _)| !c.is_zero())
                .map(|(coefficient, &(i, j))| WitnessTerm {
                    coefficient,
                    left: lefts[i].clone(),
                    right: rights[j].clone(),
                })
                .collect();
            let witness = Witness { degree, terms };
            assert_eq!(
                witness.evaluate(ring, k1, k2),
                ring.one(),
                "linear solve returned a combination that does not evaluate to 1"
            );
            return Ok(WitnessOutcome::Found(witness));
        }
    }
    Ok(WitnessOutcome::NotFound { degree: max_degree })
}
