//! The structure theorem with generators other than `e'_I`.

mod common;

use common::*;
use symstruct::decomp::{decompose, recompose, Decomposition, GeneratorTable};
use symstruct::oracle::graded_basis_check;
use symstruct::random;
use symstruct::structure::IndexSet;
use symstruct::{Error, GeneratorViolation, Polynomial};

fn perturbed_table(seed: u64, n: usize, homogeneous: bool) -> GeneratorTable {
    let perms = brute_permutations(n);
    let mut rng = random::rng(seed);
    let mut table = GeneratorTable::new(n);
    for s in IndexSet::all(n) {
        table
            .insert(perturbed_generator(&mut rng, &s, homogeneous, &perms))
            .unwrap();
    }
    table
}

#[test]
fn graded_bijectivity_with_homogeneous_perturbations() {
    for n in 1..=4 {
        for seed in 0..3 {
            let table = perturbed_table(seed * 31 + n as u64, n, true);
            for degree in 0..=7 {
                let r = graded_basis_check(n, degree, Some(&table)).unwrap();
                assert!(r.status.passed(), "n={n} degree={degree}: {:?}", r.failure);
            }
        }
    }
}

#[test]
fn round_trip_with_perturbations() {
    for homogeneous in [true, false] {
        for n in 1..=4 {
            let table = perturbed_table(100 + n as u64, n, homogeneous);
            let out = run_suite(n as u64, 80, |rng, out, s| {
                let u = random::polynomial(rng, n, 6, 12, 9);
                let d = decompose(&u, Some(&table)).unwrap();
                out.check(recompose(&d) == u, || format!("seed {s}: {u}"));
                out.check(independent_recompose(&d) == u, || format!("seed {s}: independent {u}"));
                let back = Decomposition::from_json(&d.to_json(), Some(&table)).unwrap();
                out.check(back == d, || format!("seed {s}: JSON round trip"));
            });
            assert!(out.passed(), "homogeneous={homogeneous} n={n}: {}", out.summary());
        }
    }
}

#[test]
fn invalid_generators_are_rejected() {
    let parse = |t: &str, n| symstruct::parse_polynomial::<num_bigint::BigInt>(t, n).unwrap();
    let s = IndexSet::new(3, vec![1, 3]).unwrap();
    // Two leading monomials.
    assert_eq!(
        symstruct::validate_generator(&parse("x1 + x2", 3), &s),
        Err(Error::InvalidGenerator(GeneratorViolation::LeadingSet))
    );
    let spec = symstruct::validate_generator(&parse("3 - x1", 3), &s).unwrap();
    assert_eq!(spec.leading_inverse(), &num_bigint::BigInt::from(-1));
    assert_eq!(
        symstruct::validate_generator(&parse("x1 + 1 + x2", 3), &s),
        Err(Error::InvalidGenerator(GeneratorViolation::LeadingSet))
    );
    let s23 = IndexSet::new(3, vec![2, 3]).unwrap();
    assert_eq!(
        symstruct::validate_generator(&parse("x1*x2 + x1", 3), &s23),
        Err(Error::InvalidGenerator(GeneratorViolation::Stabilizer))
    );
    assert_eq!(
        symstruct::validate_generator(&parse("2*x1*x2", 3), &s23),
        Err(Error::InvalidGenerator(GeneratorViolation::NonUnit))
    );
    assert!(matches!(
        symstruct::validate_generator(&Polynomial::<num_bigint::BigInt>::zero(3), &s23),
        Err(Error::Precondition(_))
    ));
    assert!(matches!(
        symstruct::validate_generator(&parse("x1", 2), &s23),
        Err(Error::DimensionMismatch { .. })
    ));
}
