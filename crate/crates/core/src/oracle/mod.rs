//! Independent checks of the structure theorem.
//!
//! Nothing here calls [`decompose`](crate::decomp::decompose) except the
//! round-trip suite, whose verdict is plain polynomial equality. Bijectivity
//! is checked degree by degree with an exact rank computation on the images
//! of a basis of the domain of `φ`.

mod rank;

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::decomp::{decompose, recompose, GeneratorTable};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::perm::{checked_binomial, transversal, MAX_ENUMERATED_DEGREE, MAX_FACTORIAL_ARG};
use crate::poly::{elementary_symmetric, Polynomial};
use crate::random;
use crate::structure::{dmonomial_expand, e_prime, module_dimension, DMonomial, IndexSet};

pub use rank::{row_rank, RankOutcome, SparseRow};

/// Largest graded component the rank check will build.
pub const MAX_GRADED_DIMENSION: u128 = 50_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Status::Pass
    }
}

/// Why a graded check failed. Count problems point at dimension
/// bookkeeping; rank problems point at injectivity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GradedFailure {
    CountMismatch { expected: u128, found: usize },
    RankDeficient {
        rank: usize,
        /// `(candidate label, coefficient)` pairs summing to zero.
        dependency: Vec<(String, String)>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedReport {
    pub n: usize,
    pub degree: u32,
    pub expected_dim: u128,
    pub candidate_count: usize,
    pub rank: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<GradedFailure>,
}

/// Most index sets a single check will enumerate.
pub const MAX_INDEX_SETS: u128 = 1 << 20;

/// Index sets with `deg e'_I <= bound`, refusing before enumeration when
/// there would be more than [`MAX_INDEX_SETS`].
fn index_sets_up_to(n: usize, bound: u64) -> Result<Vec<IndexSet>> {
    // Subset-sum counts over {1, ..., n-1}, saturating at the cap.
    let width = bound.min((n * n) as u64) as usize + 1;
    let mut counts = vec![0u128; width];
    counts[0] = 1;
    for i in 1..n {
        for s in (i..width).rev() {
            counts[s] = (counts[s] + counts[s - i]).min(MAX_INDEX_SETS + 1);
        }
    }
    let total: u128 = counts.iter().fold(0, |a, &c| (a + c).min(MAX_INDEX_SETS + 1));
    if total > MAX_INDEX_SETS {
        return Err(Error::Capacity(format!(
            "more than {MAX_INDEX_SETS} index sets for n = {n} up to degree {bound}"
        )));
    }
    Ok(IndexSet::with_e_prime_degree_at_most(n, bound))
}

/// Every `d_I`-monomial of the given degree in `S`.
pub fn dmonomials_of_degree(index_set: &IndexSet, degree: u64) -> Vec<DMonomial> {
    fn walk(
        members: &[usize],
        remaining: u64,
        powers: &mut Vec<(usize, u32)>,
        out: &mut Vec<Vec<(usize, u32)>>,
    ) {
        match members.split_first() {
            None => {
                if remaining == 0 {
                    out.push(powers.clone());
                }
            }
            Some((&i, rest)) => {
                for t in 0..=remaining / i as u64 {
                    powers.push((i, t as u32));
                    walk(rest, remaining - t * i as u64, powers, out);
                    powers.pop();
                }
            }
        }
    }
    let mut raw = Vec::new();
    walk(index_set.members(), degree, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|p| DMonomial::new(index_set, p).expect("support inside I"))
        .collect()
}

/// All monomials of total degree `degree` in `n` variables.
pub fn monomials_of_degree(n: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn walk(i: usize, remaining: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == exps.len() {
            exps[i] = remaining;
            out.push(Monomial::new(exps.clone()).expect("n > 0"));
            return;
        }
        for e in (0..=remaining).rev() {
            exps[i] = e;
            walk(i + 1, remaining - e, exps, out);
        }
    }
    walk(0, degree, &mut exps, &mut out);
    out
}

/// `dim S_degree`, or a capacity error past [`MAX_GRADED_DIMENSION`].
/// The dimension grows with the degree, so checking the top degree of a
/// suite covers every lower one.
fn check_graded_capacity(n: usize, degree: u32) -> Result<u128> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let dim = checked_binomial(degree as usize + n - 1, n - 1).unwrap_or(u128::MAX);
    if dim > MAX_GRADED_DIMENSION {
        return Err(Error::Capacity(format!(
            "dim S_{degree} = {dim} for n = {n} exceeds {MAX_GRADED_DIMENSION}"
        )));
    }
    Ok(dim)
}

/// Builds the images `r * (g * e_I)` of every basis element of the domain
/// of `φ` landing in degree `degree` and checks they form a basis of `S_d`.
pub fn graded_basis_check(
    n: usize,
    degree: u32,
    generators: Option<&GeneratorTable>,
) -> Result<GradedReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let expected_dim = check_graded_capacity(n, degree)?;
    let mut table = generators.cloned().unwrap_or_else(|| GeneratorTable::new(n));
    let columns: HashMap<Monomial, usize> = monomials_of_degree(n, degree)
        .into_iter()
        .enumerate()
        .map(|(k, m)| (m, k))
        .collect();

    let mut labels = Vec::new();
    let mut rows: Vec<SparseRow> = Vec::new();
    let mut off_degree = false;
    for index_set in index_sets_up_to(n, degree as u64)? {
        let Some(r_degree) = (degree as u64).checked_sub(index_set.e_prime_degree()) else {
            continue;
        };
        let basis = table.get_or_default(&index_set);
        for r in dmonomials_of_degree(&index_set, r_degree) {
            let expanded: Polynomial = dmonomial_expand(&r);
            for (k, (g, v)) in basis.entries().enumerate() {
                let image = expanded.mul(v).expect("same ring");
                let mut row: SparseRow = Vec::with_capacity(image.len());
                for (m, c) in image.terms() {
                    match columns.get(m) {
                        Some(&col) => row.push((col, c.clone())),
                        None => off_degree = true,
                    }
                }
                row.sort_unstable_by_key(|(col, _)| *col);
                rows.push(row);
                labels.push(format!("{r} ⊗ {g}·e_{index_set} [rep {k}]"));
            }
        }
    }
    if off_degree {
        return Err(Error::InvalidArgument(
            "graded_basis_check needs homogeneous generators".into(),
        ));
    }

    let outcome = row_rank(&rows, false);
    let count_ok = rows.len() as u128 == expected_dim;
    let rank_ok = outcome.rank == rows.len();
    let failure = if !count_ok {
        Some(GradedFailure::CountMismatch {
            expected: expected_dim,
            found: rows.len(),
        })
    } else if !rank_ok {
        let witness = row_rank(&rows, true).dependency.unwrap_or_default();
        Some(GradedFailure::RankDeficient {
            rank: outcome.rank,
            dependency: witness
                .into_iter()
                .map(|(i, c)| (labels[i].clone(), c.to_string()))
                .collect(),
        })
    } else {
        None
    };
    Ok(GradedReport {
        n,
        degree,
        expected_dim,
        candidate_count: rows.len(),
        rank: outcome.rank,
        status: Status::from_bool(count_ok && rank_ok && outcome.rank as u128 == expected_dim),
        failure,
    })
}

/// Runs [`graded_basis_check`] for each degree in `0..=max_degree`, in
/// parallel, returning reports in degree order.
pub fn graded_suite(n: usize, max_degree: u32) -> Result<Vec<GradedReport>> {
    check_graded_capacity(n, max_degree)?;
    (0..=max_degree)
        .into_par_iter()
        .map(|d| graded_basis_check(n, d, None))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub n: usize,
    pub max_degree: u32,
    pub lhs: Vec<u128>,
    pub rhs: Vec<u128>,
    pub first_mismatch: Option<usize>,
    pub status: Status,
}

/// Largest degree [`hilbert_check`] will expand to.
pub const MAX_SERIES_DEGREE: u32 = 4096;

/// Compares `sum_I dim V_I * t^{deg e'_I} / prod_{i in I} (1 - t^i)`
/// against `(1 - t)^{-n}` up to `t^max_degree`.
pub fn hilbert_check(n: usize, max_degree: u32) -> Result<SeriesReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let overflow = || Error::Capacity(format!("series coefficients for n = {n} overflow u128"));
    if n > MAX_FACTORIAL_ARG || max_degree > MAX_SERIES_DEGREE {
        return Err(overflow());
    }
    let len = max_degree as usize + 1;
    let mut lhs = vec![0u128; len];
    for index_set in index_sets_up_to(n, max_degree as u64)? {
        let mut series = vec![0u128; len];
        series[0] = 1;
        for &i in index_set.members() {
            for k in i..len {
                series[k] = series[k].checked_add(series[k - i]).ok_or_else(overflow)?;
            }
        }
        let shift = index_set.e_prime_degree() as usize;
        let dim = module_dimension(&index_set);
        for k in shift..len {
            let term = dim.checked_mul(series[k - shift]).ok_or_else(overflow)?;
            lhs[k] = lhs[k].checked_add(term).ok_or_else(overflow)?;
        }
    }
    let rhs = (0..len)
        .map(|d| checked_binomial(d + n - 1, n - 1).ok_or_else(overflow))
        .collect::<Result<Vec<u128>>>()?;
    let first_mismatch = lhs.iter().zip(&rhs).position(|(a, b)| a != b);
    Ok(SeriesReport {
        n,
        max_degree,
        status: Status::from_bool(first_mismatch.is_none()),
        lhs,
        rhs,
        first_mismatch,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionEntry {
    #[serde(rename = "I")]
    pub index_set: Vec<usize>,
    pub formula: u128,
    pub enumerated: usize,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub n: usize,
    pub entries: Vec<DimensionEntry>,
    pub status: Status,
}

/// Closed-form `dim V_I` against the enumerated transversal of `e'_I`.
pub fn dimension_audit(n: usize) -> Result<DimensionReport> {
    if n == 0 || n > MAX_ENUMERATED_DEGREE {
        return Err(Error::Capacity(format!(
            "dimension audit is limited to 1..={MAX_ENUMERATED_DEGREE}"
        )));
    }
    let entries: Vec<DimensionEntry> = IndexSet::all(n)
        .into_iter()
        .map(|s| {
            let formula = module_dimension(&s);
            let enumerated = transversal(&e_prime(&s)).len();
            DimensionEntry {
                index_set: s.members().to_vec(),
                formula,
                enumerated,
                status: Status::from_bool(formula == enumerated as u128),
            }
        })
        .collect();
    let status = Status::from_bool(entries.iter().all(|e| e.status.passed()));
    Ok(DimensionReport { n, entries, status })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundtripFailure {
    pub trial: u64,
    pub seed: u64,
    pub input: String,
    pub output: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundtripReport {
    pub n: usize,
    pub max_degree: u32,
    pub trials: u64,
    pub seed: u64,
    /// `0` and each `d_i`, checked before the random trials.
    pub fixed_cases: usize,
    pub passed: u64,
    pub failures: Vec<RoundtripFailure>,
    pub status: Status,
}

/// Coefficients in `[-9, 9]`, at most this many terms per sample.
pub const ROUNDTRIP_MAX_TERMS: usize = 20;
pub const ROUNDTRIP_COEFF_BOUND: i64 = 9;

/// `recompose(decompose(u)) == u` on seeded random integer polynomials.
pub fn roundtrip_suite(n: usize, max_degree: u32, trials: u64, seed: u64) -> Result<RoundtripReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let check = |u: &Polynomial| -> Result<Option<Polynomial>> {
        let back = recompose(&decompose(u, None)?);
        Ok((back != *u).then_some(back))
    };

    let mut failures = Vec::new();
    let mut fixed: Vec<Polynomial> = vec![Polynomial::zero(n)];
    for i in 1..=n {
        fixed.push(elementary_symmetric(n, i)?);
    }
    for u in &fixed {
        if let Some(back) = check(u)? {
            failures.push(RoundtripFailure {
                trial: u64::MAX,
                seed,
                input: u.to_string(),
                output: back.to_string(),
            });
        }
    }

    let outcomes: Vec<Result<Option<RoundtripFailure>>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let s = random::trial_seed(seed, trial);
            let mut rng = random::rng(s);
            let u = random::polynomial(
                &mut rng,
                n,
                max_degree,
                ROUNDTRIP_MAX_TERMS,
                ROUNDTRIP_COEFF_BOUND,
            );
            Ok(check(&u)?.map(|back| RoundtripFailure {
                trial,
                seed: s,
                input: u.to_string(),
                output: back.to_string(),
            }))
        })
        .collect();
    let mut passed = 0;
    for outcome in outcomes {
        match outcome? {
            None => passed += 1,
            Some(f) => failures.push(f),
        }
    }
    Ok(RoundtripReport {
        n,
        max_degree,
        trials,
        seed,
        fixed_cases: fixed.len(),
        passed,
        status: Status::from_bool(failures.is_empty()),
        failures,
    })
}

/// Everything `verify` runs, merged in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub max_degree: u32,
    pub seed: u64,
    pub trials: u64,
    pub graded: Vec<GradedReport>,
    pub hilbert: SeriesReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimensions: Option<DimensionReport>,
    pub roundtrip: RoundtripReport,
    pub status: Status,
}

pub fn verify(n: usize, max_degree: u32, seed: u64, trials: u64) -> Result<VerifyReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    check_graded_capacity(n, max_degree)?;
    let graded = graded_suite(n, max_degree)?;
    let hilbert = hilbert_check(n, max_degree)?;
    let dimensions = if n <= MAX_ENUMERATED_DEGREE {
        Some(dimension_audit(n)?)
    } else {
        None
    };
    let roundtrip = roundtrip_suite(n, max_degree, trials, seed)?;
    let ok = graded.iter().all(|g| g.status.passed())
        && hilbert.status.passed()
        && dimensions.as_ref().is_none_or(|d| d.status.passed())
        && roundtrip.status.passed();
    Ok(VerifyReport {
        n,
        max_degree,
        seed,
        trials,
        graded,
        hilbert,
        dimensions,
        roundtrip,
        status: Status::from_bool(ok),
    })
}
