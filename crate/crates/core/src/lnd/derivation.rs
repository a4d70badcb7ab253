use num_traits::One;

use super::poly::{Monomial, MultiPoly};
use super::ring::QuotientRing;
use super::LndError;
use crate::linalg::Q;

/// Iteration cap used when callers do not supply one.
pub const DEFAULT_DEGREE_CAP: u32 = 64;

/// A derivation determined by the images of the generators. Extended to the
/// whole ring by linearity and the Leibniz rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    images: Vec<MultiPoly>,
}

impl Derivation {
    pub fn new(ring: &QuotientRing, images: Vec<MultiPoly>) -> Result<Self, LndError> {
        if images.len() != ring.nvars() {
            return Err(LndError::DerivationArity {
                expected: ring.nvars(),
                given: images.len(),
            });
        }
        for img in &images {
            ring.check_arity(img)?;
        }
        Ok(Derivation { images })
    }

    /// Builds a derivation from `(generator, image)` text pairs; generators
    /// not mentioned map to zero.
    pub fn from_text(ring: &QuotientRing, pairs: &[(&str, &str)]) -> Result<Self, LndError> {
        let mut images = vec![ring.zero(); ring.nvars()];
        for (name, image) in pairs {
            let i = ring
                .generator_index(name)
                .ok_or_else(|| LndError::UnknownGenerator(name.to_string()))?;
            images[i] = ring.normal_form(&ring.parse(image)?);
        }
        Ok(Derivation { images })
    }

    pub fn image(&self, generator: usize) -> &MultiPoly {
        &self.images[generator]
    }

    pub fn images(&self) -> &[MultiPoly] {
        &self.images
    }
}

/// `d(f)` by the Leibniz rule, reduced to normal form.
pub fn apply_derivation(ring: &QuotientRing, d: &Derivation, f: &MultiPoly) -> MultiPoly {
    let n = ring.nvars();
    let mut out = MultiPoly::zero(n);
    for (m, c) in f.terms() {
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 || d.images[i].is_zero() {
                continue;
            }
            let mut lowered = m.exponents().to_vec();
            lowered[i] -= 1;
            let cofactor = Monomial::new(lowered);
            let coeff = c * Q::from_integer(e.into());
            out = &out + &d.images[i].mul_monomial(&cofactor, &coeff);
        }
    }
    ring.normal_form(&out)
}

pub fn is_in_kernel(ring: &QuotientRing, d: &Derivation, f: &MultiPoly) -> bool {
    apply_derivation(ring, d, &ring.normal_form(f)).is_zero()
}

/// `n - 1` for the least `n` with `d^n(f) = 0`, trying `n = 1..=cap`.
pub fn delta_degree(ring: &QuotientRing, d: &Derivation, f: &MultiPoly, cap: u32) -> Result<u32, LndError> {
    let mut g = ring.normal_form(f);
    if g.is_zero() {
        return Err(LndError::ZeroPolynomial);
    }
    for n in 1..=cap {
        g = apply_derivation(ring, d, &g);
        if g.is_zero() {
            return Ok(n - 1);
        }
    }
    Err(LndError::NotNilpotentWithinCap {
        poly: ring.format(&ring.normal_form(f)),
        cap,
    })
}

/// Every generator is killed within `cap` applications. For a derivation this
/// implies local nilpotence on the whole ring.
pub fn is_locally_nilpotent_on_generators(
    ring: &QuotientRing,
    d: &Derivation,
    cap: u32,
) -> Result<Vec<u32>, LndError> {
    (0..ring.nvars())
        .map(|i| {
            let g = MultiPoly::var(ring.nvars(), i);
            if ring.normal_form(&g).is_zero() {
                Ok(0)
            } else {
                delta_degree(ring, d, &g, cap)
            }
        })
        .collect()
}

/// `d(lead - replacement)` reduces to zero for every relation, so `d` descends
/// to the quotient.
pub fn preserves_relations(ring: &QuotientRing, d: &Derivation) -> bool {
    ring.rules().iter().all(|rule| {
        let lead = MultiPoly::monomial(rule.lead.clone(), Q::one());
        let relation = &lead - &rule.replacement;
        apply_derivation(ring, d, &relation).is_zero()
    })
}

/// Degree condition for a compatible pair of locally nilpotent derivations:
/// `deg_{d1}(a) = 1` and `deg_{d2}(a) <= 1`. Both derivations must first be
/// certified locally nilpotent on the generators within `cap`.
pub fn verify_compatibility_condition2(
    ring: &QuotientRing,
    d1: &Derivation,
    d2: &Derivation,
    a: &MultiPoly,
    cap: u32,
) -> Result<bool, LndError> {
    is_locally_nilpotent_on_generators(ring, d1, cap)?;
    is_locally_nilpotent_on_generators(ring, d2, cap)?;
    let deg1 = delta_degree(ring, d1, a, cap)?;
    let deg2 = delta_degree(ring, d2, a, cap)?;
    Ok(deg1 == 1 && deg2 <= 1)
}
