//! Seeded random inputs for the cocycle and invariance checks.
//!
//! Sample `s` under seed `x` draws from `ChaCha8Rng::seed_from_u64(x)` with
//! its stream set to `s`, so each sample is independent of every other and
//! of how samples are spread over threads. Integer draws use fixed-width
//! ranges, keeping the streams identical across platforms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trivalent_core::poly::Polynomial;
use trivalent_core::symplectic::{CubicTensor, QuadraticHamiltonian, SymplecticSpace};
use trivalent_core::Rational;

/// Terms per random polynomial.
pub const TERMS_PER_SAMPLE: u32 = 3;

pub fn sample_rng(seed: u64, sample: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(sample);
    rng
}

/// Numerator in `-5..=5`, denominator in `1..=4`.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let num = rng.random_range(-5i64..=5);
    let den = rng.random_range(1i64..=4);
    Rational::new(num.into(), den.into())
}

/// Sum of [`TERMS_PER_SAMPLE`] random monomials of degrees in `lo..=hi`.
pub fn random_polynomial<R: Rng>(rng: &mut R, space: &SymplecticSpace, lo: u32, hi: u32) -> Polynomial {
    let vars = space.dim();
    let mut p = Polynomial::zero(vars);
    for _ in 0..TERMS_PER_SAMPLE {
        let deg = rng.random_range(lo..=hi);
        let mut e = vec![0u32; vars];
        for _ in 0..deg {
            e[rng.random_range(0..vars as u32) as usize] += 1;
        }
        p = &p + &Polynomial::monomial(vars, e, random_rational(rng));
    }
    p
}

/// `count` random elements of `Ham¹` truncated at `max_degree`.
pub fn random_hamiltonians(seed: u64, sample: u64, space: &SymplecticSpace, count: usize, max_degree: u32) -> Vec<Polynomial> {
    let mut rng = sample_rng(seed, sample);
    (0..count).map(|_| random_polynomial(&mut rng, space, 3, max_degree)).collect()
}

/// A random quadratic Hamiltonian and `count` random cubic tensors.
pub fn random_sp_sample(
    seed: u64,
    sample: u64,
    space: &SymplecticSpace,
    count: usize,
) -> (QuadraticHamiltonian, Vec<CubicTensor>) {
    let mut rng = sample_rng(seed, sample);
    let x = QuadraticHamiltonian::from_polynomial(&random_polynomial(&mut rng, space, 2, 2));
    let tensors = (0..count).map(|_| CubicTensor::from_polynomial(&random_polynomial(&mut rng, space, 3, 3))).collect();
    (x, tensors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let s = SymplecticSpace::new(2).unwrap();
        let a = random_hamiltonians(7, 3, &s, 3, 7);
        assert_eq!(a, random_hamiltonians(7, 3, &s, 3, 7));
        assert_ne!(a, random_hamiltonians(7, 4, &s, 3, 7));
        assert_ne!(a, random_hamiltonians(8, 3, &s, 3, 7));
        for p in &a {
            assert!(p.min_degree().is_none_or(|d| d >= 3));
            assert!(p.degree().is_none_or(|d| d <= 7));
        }
    }
}
