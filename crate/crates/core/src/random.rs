//! Seeded sampling of test inputs. ChaCha8 keeps streams identical across
//! platforms, so a printed seed reproduces a failure anywhere.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::monomial::Monomial;
use crate::perm::Permutation;
use crate::poly::Polynomial;
use crate::structure::{DMonomial, IndexSet};

pub type SuiteRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed for trial `trial` of a suite started from `seed`.
pub fn trial_seed(seed: u64, trial: u64) -> u64 {
    seed ^ trial.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Nonzero integer in `[-bound, bound]`.
pub fn nonzero_coeff(rng: &mut SuiteRng, bound: i64) -> BigInt {
    assert!(bound > 0);
    let v = rng.random_range(1..=bound);
    BigInt::from(if rng.random_bool(0.5) { v } else { -v })
}

/// A monomial of exactly the given total degree.
pub fn monomial_of_degree(rng: &mut SuiteRng, n: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u32; n];
    for _ in 0..degree {
        exps[rng.random_range(0..n)] += 1;
    }
    Monomial::new(exps).expect("n > 0")
}

pub fn monomial(rng: &mut SuiteRng, n: usize, max_degree: u32) -> Monomial {
    let degree = rng.random_range(0..=max_degree);
    monomial_of_degree(rng, n, degree)
}

/// Up to `max_terms` terms of degree at most `max_degree`, coefficients
/// nonzero in `[-bound, bound]`. Repeated monomials merge, so the result
/// may be shorter or zero.
pub fn polynomial(
    rng: &mut SuiteRng,
    n: usize,
    max_degree: u32,
    max_terms: usize,
    bound: i64,
) -> Polynomial {
    let count = rng.random_range(0..=max_terms);
    let terms: Vec<_> = (0..count)
        .map(|_| (monomial(rng, n, max_degree), nonzero_coeff(rng, bound)))
        .collect();
    Polynomial::from_terms(n, terms).expect("consistent n")
}

pub fn nonzero_polynomial(
    rng: &mut SuiteRng,
    n: usize,
    max_degree: u32,
    max_terms: usize,
    bound: i64,
) -> Polynomial {
    loop {
        let u = polynomial(rng, n, max_degree, max_terms.max(1), bound);
        if !u.is_zero() {
            return u;
        }
    }
}

pub fn permutation(rng: &mut SuiteRng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_zero_based(images).expect("shuffle is a bijection")
}

pub fn index_set(rng: &mut SuiteRng, n: usize) -> IndexSet {
    let mut members: Vec<usize> = (1..n).filter(|_| rng.random_bool(0.5)).collect();
    members.push(n);
    IndexSet::new(n, members).expect("n is a member")
}

/// A `d_I`-monomial with each power in `0..=max_power`.
pub fn dmonomial(rng: &mut SuiteRng, index_set: &IndexSet, max_power: u32) -> DMonomial {
    let powers: Vec<_> = index_set
        .members()
        .iter()
        .map(|&i| (i, rng.random_range(0..=max_power)))
        .collect();
    DMonomial::new(index_set, powers).expect("support inside I")
}

/// A `d`-monomial over all of `d_1..d_n`.
pub fn full_dmonomial(rng: &mut SuiteRng, n: usize, max_power: u32) -> DMonomial {
    let all = IndexSet::new(n, (1..=n).collect()).expect("full set");
    dmonomial(rng, &all, max_power)
}
