#![allow(dead_code)]

use liedens::linalg::Q;
use liedens::lnd::{Monomial, MultiPoly};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Exponent vector in `nvars` variables with total degree at most `max_degree`.
pub fn random_monomial(rng: &mut impl Rng, nvars: usize, max_degree: u32) -> Monomial {
    let target = rng.random_range(0..=max_degree);
    let mut e = vec![0u32; nvars];
    for _ in 0..target {
        e[rng.random_range(0..nvars)] += 1;
    }
    Monomial::new(e)
}

/// Nonzero rational with small numerator and denominator.
pub fn random_coefficient(rng: &mut impl Rng) -> Q {
    let mut n: i64 = rng.random_range(-6..=6);
    if n == 0 {
        n = 1;
    }
    Q::new(n.into(), rng.random_range(1i64..=4).into())
}

/// Nonzero polynomial with 1 to 4 terms of total degree at most `max_degree`.
pub fn random_poly(rng: &mut impl Rng, nvars: usize, max_degree: u32) -> MultiPoly {
    loop {
        let terms = rng.random_range(1..=4);
        let p = MultiPoly::from_terms(
            nvars,
            (0..terms).map(|_| (random_monomial(rng, nvars, max_degree), random_coefficient(rng))),
        );
        if !p.is_zero() {
            return p;
        }
    }
}

/// Single term `c * m`, homogeneous for any grading.
pub fn random_term(rng: &mut impl Rng, nvars: usize, max_degree: u32) -> MultiPoly {
    MultiPoly::monomial(random_monomial(rng, nvars, max_degree), random_coefficient(rng))
}

/// `p(0..=n)` by Euler's pentagonal recurrence, independent of any
/// enumeration or coin-change table.
pub fn pentagonal_partition_counts(n: usize) -> Vec<u128> {
    let mut p = vec![0u128; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc: i128 = 0;
        for k in 1i64.. {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[m - g1] as i128;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                acc += sign * p[m - g2] as i128;
            }
        }
        p[m] = acc as u128;
    }
    p
}
