use thiserror::Error;

use super::derivation::Derivation;
use super::poly::{MultiPoly, TermOrder};
use super::ring::QuotientRing;

/// Weights of `a1, a2, b1, b2` under right multiplication by
/// `diag(t^-1, t)`: the first column scales by `t^-1`, the second by `t`.
pub const SL2_TORUS_WEIGHTS: [i64; 4] = [-1, 1, -1, 1];

/// `Q[a1, a2, b1, b2] / (a1*b2 - a2*b1 - 1)` with the matrix
/// `[[a1, a2], [b1, b2]]`. Degree-lex order with `a1 > a2 > b1 > b2` makes
/// `a1*b2` the leading monomial of the determinant relation.
pub fn sl2_coordinate_ring() -> QuotientRing {
    QuotientRing::with_text_rules(&["a1", "a2", "b1", "b2"], TermOrder::DegLex, &[("a1*b2", "a2*b1 + 1")])
        .expect("the determinant rule is well formed")
}

/// `(d1, d2)` with `d1 = a1 d/db1 + a2 d/db2` and `d2 = b1 d/da1 + b2 d/da2`.
pub fn sl2_standard_derivations() -> (Derivation, Derivation) {
    let r = sl2_coordinate_ring();
    let d1 = Derivation::from_text(&r, &[("b1", "a1"), ("b2", "a2")]).expect("valid images");
    let d2 = Derivation::from_text(&r, &[("a1", "b1"), ("a2", "b2")]).expect("valid images");
    (d1, d2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusWeight(pub i64);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("the zero polynomial has no weight")]
    Zero,
    #[error("monomials of different weights")]
    NotHomogeneous,
    #[error("expected a polynomial in 4 generators")]
    Arity,
}

/// Common torus weight of every monomial of `f`, or a non-homogeneity flag.
pub fn diagonal_torus_weight(f: &MultiPoly) -> Result<TorusWeight, WeightError> {
    if f.nvars() != SL2_TORUS_WEIGHTS.len() {
        return Err(WeightError::Arity);
    }
    let mut weight = None;
    for (m, _) in f.terms() {
        let w: i64 = m
            .exponents()
            .iter()
            .zip(SL2_TORUS_WEIGHTS)
            .map(|(&e, w)| i64::from(e) * w)
            .sum();
        match weight {
            None => weight = Some(w),
            Some(prev) if prev != w => return Err(WeightError::NotHomogeneous),
            Some(_) => {}
        }
    }
    weight.map(TorusWeight).ok_or(WeightError::Zero)
}

/// Outcome of the invariant-hypersurface checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfaceCheck {
    /// `u*v - z^2 + 1/4` with the invariants substituted, in normal form.
    pub residue: String,
    pub reduces_to_zero: bool,
    pub sign_flip_invariant: bool,
    /// Torus weights of `u`, `v`, `z`.
    pub invariant_weights: [Option<i64>; 3],
}

impl HypersurfaceCheck {
    pub fn holds(&self) -> bool {
        self.reduces_to_zero && self.sign_flip_invariant && self.invariant_weights.iter().all(|w| *w == Some(0))
    }
}

/// Checks that `u = a1*a2`, `v = b1*b2`, `z = a2*b1 + 1/2` satisfy
/// `u*v - z^2 + 1/4 = 0` in the coordinate ring, and that
/// `(u, v, z) -> (-u, -v, -z)` fixes `u*v - z^2 + 1/4`.
pub fn hypersurface_check() -> HypersurfaceCheck {
    let uvz = QuotientRing::polynomial_ring(&["u", "v", "z"], TermOrder::DegLex).expect("valid names");
    let equation = uvz.parse("u*v - z^2 + 1/4").expect("valid polynomial");

    let r = sl2_coordinate_ring();
    let invariants: Vec<MultiPoly> = ["a1*a2", "b1*b2", "a2*b1 + 1/2"]
        .iter()
        .map(|s| r.parse(s).expect("valid polynomial"))
        .collect();
    let residue = r.normal_form(&equation.substitute(&invariants));

    let flipped: Vec<MultiPoly> = (0..3).map(|i| -&MultiPoly::var(3, i)).collect();
    let sign_flip_invariant = equation.substitute(&flipped) == equation;

    let weight = |f: &MultiPoly| diagonal_torus_weight(f).ok().map(|w| w.0);
    HypersurfaceCheck {
        residue: r.format(&residue),
        reduces_to_zero: residue.is_zero(),
        sign_flip_invariant,
        invariant_weights: [weight(&invariants[0]), weight(&invariants[1]), weight(&invariants[2])],
    }
}

pub fn verify_invariant_hypersurface() -> bool {
    hypersurface_check().holds()
}
