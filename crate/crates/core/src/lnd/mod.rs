//! Exact calculus of derivations on polynomial quotient rings.
//!
//! The main instance is the coordinate ring of `SL_2`,
//! `Q[a1, a2, b1, b2] / (a1*b2 - a2*b1 - 1)`, with the two locally nilpotent
//! derivations coming from left multiplication by lower and upper unipotent
//! matrices. Everything is exact: coefficients are arbitrary-precision
//! rationals.

mod derivation;
mod poly;
mod ring;
mod sl2;
mod witness;

use thiserror::Error;

pub use derivation::{
    apply_derivation, delta_degree, is_in_kernel, is_locally_nilpotent_on_generators,
    preserves_relations, verify_compatibility_condition2, Derivation, DEFAULT_DEGREE_CAP,
};
pub use poly::{Monomial, MultiPoly, TermOrder};
pub use ring::{format_rational, QuotientRing, RewriteRule};
pub use sl2::{
    diagonal_torus_weight, hypersurface_check, sl2_coordinate_ring, sl2_standard_derivations,
    verify_invariant_hypersurface, HypersurfaceCheck, TorusWeight, WeightError, SL2_TORUS_WEIGHTS,
};
pub use witness::{
    verify_semicompatibility_witness, Witness, WitnessOutcome, WitnessTerm, DEFAULT_WITNESS_DEGREE,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LndError {
    #[error("parse error in {input:?} at byte {position}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("invalid or duplicate generator name {0:?}")]
    BadGeneratorName(String),
    #[error("expected a polynomial in {expected} generators, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("a rewrite rule's lead monomial must exceed every monomial of its replacement")]
    RuleNotDecreasing,
    #[error("rewrite rule lead {0:?} is not a single monic monomial")]
    RuleLeadNotMonomial(String),
    #[error("derivation images given for {given} generators, ring has {expected}")]
    DerivationArity { expected: usize, given: usize },
    #[error("the degree of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("{poly} is not killed by {cap} applications of the derivation (not locally nilpotent, or cap too small)")]
    NotNilpotentWithinCap { poly: String, cap: u32 },
    #[error("{element} is not in the kernel of derivation {which}")]
    NotInKernel { element: String, which: u8 },
}
