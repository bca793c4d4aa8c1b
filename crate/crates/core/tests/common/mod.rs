//! Brute-force oracles and seeded lemma suites shared by the integration
//! tests and the acceptance runner. The oracles work on raw exponent
//! vectors and never call the ordering or reduction code they check.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;
use std::sync::Arc;

use symstruct::decomp::{decompose, equivariance_apply, recompose, Decomposition};
use symstruct::ordering::{canonical, glm};
use symstruct::perm::Permutation;
use symstruct::random::{self, SuiteRng};
use symstruct::reduction::reduce;
use symstruct::structure::{
    e_prime, module_basis, validate_generator, DMonomial, GeneratorSpec, IndexSet, ModuleBasis,
    ModuleElement,
};
use symstruct::{Monomial, Polynomial};

pub const LEMMA_TRIALS: u64 = 500;
pub const LEMMA_MAX_N: usize = 5;

// ---------------------------------------------------------------------------
// Oracles

/// Every permutation of `0..n` as a zero-based image vector, by Heap's
/// algorithm.
pub fn brute_permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            a.swap(j, k - 1);
        }
    }
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out
}

/// `g * exps` under `g * x_i = x_{g(i)}`.
pub fn act(images: &[usize], exps: &[u32]) -> Vec<u32> {
    let mut out = vec![0; exps.len()];
    for (i, &e) in exps.iter().enumerate() {
        out[images[i]] = e;
    }
    out
}

/// Lex-greatest element of the orbit of `exps`, found by trying every
/// permutation.
pub fn brute_canonical(exps: &[u32], perms: &[Vec<usize>]) -> Vec<u32> {
    perms.iter().map(|g| act(g, exps)).max().expect("at least one permutation")
}

pub fn brute_orbit(exps: &[u32], perms: &[Vec<usize>]) -> BTreeSet<Vec<u32>> {
    perms.iter().map(|g| act(g, exps)).collect()
}

/// The reduced form straight from its definition: the values are replaced
/// by `0..a` preserving strict order.
pub fn brute_reduce(exps: &[u32]) -> Vec<u32> {
    exps.iter()
        .map(|e| {
            let below: BTreeSet<u32> = exps.iter().copied().filter(|x| x < e).collect();
            below.len() as u32
        })
        .collect()
}

/// The greatest monomials of `u` under the orbit-maximum order, by brute
/// force.
pub fn brute_glm(u: &Polynomial, perms: &[Vec<usize>]) -> BTreeSet<Vec<u32>> {
    let keyed: Vec<(Vec<u32>, Vec<u32>)> = u
        .monomials()
        .map(|m| (brute_canonical(m.exps(), perms), m.exps().to_vec()))
        .collect();
    let Some(top) = keyed.iter().map(|(k, _)| k.clone()).max() else {
        return BTreeSet::new();
    };
    keyed
        .into_iter()
        .filter(|(k, _)| *k == top)
        .map(|(_, m)| m)
        .collect()
}

pub fn exps_set(ms: &[Monomial]) -> BTreeSet<Vec<u32>> {
    ms.iter().map(|m| m.exps().to_vec()).collect()
}

pub fn mono(exps: Vec<u32>) -> Monomial {
    Monomial::new(exps).expect("nonempty")
}

/// `d_i` built term by term from subsets.
pub fn brute_elementary(n: usize, i: usize) -> Polynomial {
    let terms = (0u32..1 << n).filter(|mask| mask.count_ones() as usize == i).map(|mask| {
        let exps = (0..n).map(|j| (mask >> j) & 1).collect();
        (mono(exps), BigInt::one())
    });
    Polynomial::from_terms(n, terms).expect("consistent n")
}

/// Recomposition that uses only the wire data: `r` as a product of
/// [`brute_elementary`] and each coordinate as a permuted generator.
pub fn independent_recompose(d: &Decomposition) -> Polynomial {
    let n = d.n();
    let mut out = Polynomial::zero(n);
    for (_, component) in d.components() {
        let basis = component.basis();
        let generator = &basis.spec().generator;
        for (r, v) in component.terms() {
            let mut factor = Polynomial::one(n);
            for (i, t) in r.powers() {
                for _ in 0..t {
                    factor = factor.mul(&brute_elementary(n, i)).unwrap();
                }
            }
            for (&k, c) in v.coords() {
                let g = basis.rep(k).images_one_based();
                let zero_based: Vec<usize> = g.iter().map(|x| x - 1).collect();
                let moved = Polynomial::from_terms(
                    n,
                    generator
                        .terms()
                        .map(|(m, a)| (mono(act(&zero_based, m.exps())), a.clone())),
                )
                .unwrap();
                out.add_scaled(c, &factor.mul(&moved).unwrap()).unwrap();
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Samplers

pub fn sample_n(rng: &mut SuiteRng) -> usize {
    rng.random_range(1..=LEMMA_MAX_N)
}

pub fn small_poly(rng: &mut SuiteRng, n: usize) -> Polynomial {
    random::nonzero_polynomial(rng, n, 5, 6, 9)
}

/// Sum of the distinct images of `m` under the stabilizer of `lead`.
fn stabilizer_orbit_sum(m: &[u32], lead: &[u32], perms: &[Vec<usize>]) -> Polynomial {
    let images: BTreeSet<Vec<u32>> = perms
        .iter()
        .filter(|g| act(g, lead) == lead)
        .map(|g| act(g, m))
        .collect();
    Polynomial::from_terms(
        lead.len(),
        images.into_iter().map(|e| (mono(e), BigInt::one())),
    )
    .unwrap()
}

/// A generator `e'_I + sum c * (stabilizer orbit sum of some m ≺ e'_I)`,
/// homogeneous when `homogeneous` is set. Falls back to `e'_I` when no
/// smaller monomial exists.
pub fn perturbed_generator(
    rng: &mut SuiteRng,
    index_set: &IndexSet,
    homogeneous: bool,
    perms: &[Vec<usize>],
) -> GeneratorSpec {
    let n = index_set.n();
    let lead = e_prime(index_set);
    let lead_key = brute_canonical(lead.exps(), perms);
    let degree = lead.degree() as u32;
    let mut u = Polynomial::from_monomial(lead.clone());
    for _ in 0..rng.random_range(1..=3) {
        let m = if homogeneous {
            random::monomial_of_degree(rng, n, degree)
        } else {
            random::monomial(rng, n, degree + 2)
        };
        if brute_canonical(m.exps(), perms) >= lead_key {
            continue;
        }
        let c = random::nonzero_coeff(rng, 4);
        u.add_scaled(&c, &stabilizer_orbit_sum(m.exps(), lead.exps(), perms))
            .unwrap();
    }
    if rng.random_bool(0.5) {
        u = u.neg();
    }
    validate_generator(&u, index_set).expect("perturbation keeps the generator valid")
}

pub fn random_element(rng: &mut SuiteRng, basis: &Arc<ModuleBasis>) -> ModuleElement {
    loop {
        let mut coords: Vec<(usize, BigInt)> = Vec::new();
        for k in 0..basis.dim() {
            if rng.random_bool(0.4) {
                coords.push((k, random::nonzero_coeff(rng, 5)));
            }
        }
        let v = ModuleElement::new(basis.clone(), coords).unwrap();
        if !v.is_zero() {
            return v;
        }
    }
}

pub fn random_basis(rng: &mut SuiteRng, index_set: &IndexSet, perms: &[Vec<usize>]) -> Arc<ModuleBasis> {
    let spec = if rng.random_bool(0.5) {
        let homogeneous = rng.random_bool(0.5);
        perturbed_generator(rng, index_set, homogeneous, perms)
    } else {
        symstruct::structure::default_generator(index_set)
    };
    Arc::new(module_basis(spec))
}

pub fn random_perm(rng: &mut SuiteRng, n: usize) -> (Permutation, Vec<usize>) {
    let g = random::permutation(rng, n);
    let zero: Vec<usize> = g.images_one_based().iter().map(|x| x - 1).collect();
    (g, zero)
}

// ---------------------------------------------------------------------------
// Suites

#[derive(Debug, Default)]
pub struct SuiteOutcome {
    pub trials: u64,
    pub failures: Vec<String>,
    /// Free-form counters, e.g. how often a precondition held.
    pub notes: BTreeMap<&'static str, u64>,
}

impl SuiteOutcome {
    pub fn check(&mut self, ok: bool, context: impl FnOnce() -> String) {
        if !ok && self.failures.len() < 20 {
            self.failures.push(context());
        } else if !ok {
            self.failures.push(String::new());
        }
    }

    pub fn note(&mut self, key: &'static str) {
        *self.notes.entry(key).or_default() += 1;
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        let notes: Vec<String> = self.notes.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut s = format!("{} trials, {} failures", self.trials, self.failures.len());
        if !notes.is_empty() {
            s.push_str(&format!(" ({})", notes.join(", ")));
        }
        if let Some(first) = self.failures.first() {
            s.push_str(&format!("; first: {first}"));
        }
        s
    }
}

/// Runs `body` once per trial with an independent seeded generator.
pub fn run_suite(
    seed: u64,
    trials: u64,
    mut body: impl FnMut(&mut SuiteRng, &mut SuiteOutcome, u64),
) -> SuiteOutcome {
    let mut out = SuiteOutcome::default();
    for trial in 0..trials {
        let s = random::trial_seed(seed, trial);
        let mut rng = random::rng(s);
        body(&mut rng, &mut out, s);
        out.trials += 1;
    }
    out
}

fn perms_by_n() -> Vec<Vec<Vec<usize>>> {
    (0..=LEMMA_MAX_N).map(brute_permutations).collect()
}

/// All seven parts of the leading-set lemma, with the library `glm`
/// checked against [`brute_glm`] on every sample.
pub fn glm_lemma_suite(seed: u64, trials: u64) -> SuiteOutcome {
    let perms = perms_by_n();
    run_suite(seed, trials, |rng, out, s| {
        let n = sample_n(rng);
        let p = &perms[n];
        let u = small_poly(rng, n);
        let v = if rng.random_bool(0.3) {
            // Share monomials with u so that overlap cases occur.
            let shared = random::nonzero_coeff(rng, 3);
            u.scale(&shared).add(&small_poly(rng, n)).unwrap()
        } else {
            small_poly(rng, n)
        };
        let d = random::full_dmonomial(rng, n, 2);
        let dpoly: Polynomial = symstruct::structure::dmonomial_expand(&d);
        let (g, gz) = random_perm(rng, n);
        let key = |m: &Monomial| brute_canonical(m.exps(), p);

        let glm_u = glm(&u);
        out.check(exps_set(&glm_u) == brute_glm(&u, p), || format!("seed {s}: glm({u}) disagrees with brute force"));

        // (1) lmlex is multiplicative.
        if !v.is_zero() {
            let uv = u.mul(&v).unwrap();
            let lhs = uv.lmlex().unwrap().clone();
            let rhs = u.lmlex().unwrap().mul(v.lmlex().unwrap());
            out.check(lhs == rhs, || format!("seed {s}: lmlex(uv) != lmlex(u)lmlex(v) for u={u}, v={v}"));
        }

        // (2), (3) the leading set of a d-monomial is the orbit of its lmlex.
        let lm_d = dpoly.lmlex().unwrap().clone();
        let glm_d = glm(&dpoly);
        out.check(glm_d.iter().all(|x| key(x) == key(&lm_d)), || format!("seed {s}: Glm({d}) not ≈ lmlex"));
        out.check(exps_set(&glm_d) == brute_orbit(lm_d.exps(), p), || format!("seed {s}: Glm({d}) is not the orbit of lmlex"));

        // (4) Glm(u) ≈ Glm(gu).
        let gu = g.apply_poly(&u).unwrap();
        let glm_gu = glm(&gu);
        out.check(key(&glm_u[0]) == key(&glm_gu[0]), || format!("seed {s}: Glm(u) not ≈ Glm(gu), g={g}"));

        // (5) Glm(u) = Gm ∩ M(u) for any m in Glm(u).
        let m = &glm_u[rng.random_range(0..glm_u.len())];
        let support: BTreeSet<Vec<u32>> = u.monomials().map(|x| x.exps().to_vec()).collect();
        let meet: BTreeSet<Vec<u32>> = brute_orbit(m.exps(), p).intersection(&support).cloned().collect();
        out.check(exps_set(&glm_u) == meet, || format!("seed {s}: Glm(u) != Gm ∩ M(u) for u={u}"));

        // (6) disjoint leading sets.
        let glm_v = glm(&v);
        let (su, sv) = (exps_set(&glm_u), exps_set(&glm_v));
        if !v.is_zero() && su.is_disjoint(&sv) {
            out.note("disjoint");
            let w = u.add(&v).unwrap();
            let sw = exps_set(&glm(&w));
            let union: BTreeSet<_> = su.union(&sv).cloned().collect();
            out.check(!w.is_zero() && sw.is_subset(&union), || format!("seed {s}: Glm(u+v) escapes Glm(u) ∪ Glm(v)"));
            let top = key(&mono(sw.iter().next().unwrap().clone()));
            out.check(top == key(&glm_u[0]) || top == key(&glm_v[0]), || format!("seed {s}: Glm(u+v) matches neither class"));
        } else {
            out.note("overlapping");
        }

        // (7) Glm(gu) = g Glm(u).
        let moved: BTreeSet<Vec<u32>> = glm_u.iter().map(|x| act(&gz, x.exps())).collect();
        out.check(exps_set(&glm_gu) == moved, || format!("seed {s}: Glm(gu) != g Glm(u), g={g}"));
    })
}

/// Every nonzero element of `V_I` has its leading set in the class of
/// `e'_I`; generators are random, sometimes perturbed.
pub fn module_glm_suite(seed: u64, trials: u64) -> SuiteOutcome {
    let perms = perms_by_n();
    run_suite(seed, trials, |rng, out, s| {
        let n = sample_n(rng);
        let p = &perms[n];
        let index_set = random::index_set(rng, n);
        let basis = random_basis(rng, &index_set, p);
        let v = random_element(rng, &basis).expand();
        let target = brute_canonical(e_prime(&index_set).exps(), p);
        let lead = glm(&v);
        out.check(
            !lead.is_empty() && lead.iter().all(|x| brute_canonical(x.exps(), p) == target),
            || format!("seed {s}: Glm({v}) not ≈ e'_{index_set}"),
        );
    })
}

/// `Glm(d u) ≈ lmlex(d) e'_I` for `d` a `d_I`-monomial, `u` in `V_I`.
pub fn dmodule_glm_suite(seed: u64, trials: u64) -> SuiteOutcome {
    let perms = perms_by_n();
    run_suite(seed, trials, |rng, out, s| {
        let n = sample_n(rng).min(4);
        let p = &perms[n];
        let index_set = random::index_set(rng, n);
        let basis = random_basis(rng, &index_set, p);
        let u = random_element(rng, &basis).expand();
        let d = random::dmonomial(rng, &index_set, 2);
        let du = symstruct::structure::dmonomial_expand::<BigInt>(&d).mul(&u).unwrap();
        let target = brute_canonical(d.lmlex().mul(&e_prime(&index_set)).exps(), p);
        out.check(
            glm(&du).iter().all(|x| brute_canonical(x.exps(), p) == target),
            || format!("seed {s}: Glm(({d}) * u) not ≈ lmlex(d) e'_{index_set}"),
        );
    })
}

/// `Red(m) = Red(r)` exactly when `m` and `r` order their exponents the
/// same way. Half of the pairs are built to share an order so both
/// directions are exercised.
pub fn reduction_order_suite(seed: u64, trials: u64) -> SuiteOutcome {
    run_suite(seed, trials, |rng, out, s| {
        let n = sample_n(rng);
        let m = random::monomial(rng, n, 8);
        let r = if rng.random_bool(0.5) {
            // A strictly increasing relabelling of the exponent values.
            let mut values: Vec<u32> = m.exps().to_vec();
            values.sort_unstable();
            values.dedup();
            let mut next = rng.random_range(0..3);
            let map: BTreeMap<u32, u32> = values
                .into_iter()
                .map(|v| {
                    let out = next;
                    next += rng.random_range(1..4);
                    (v, out)
                })
                .collect();
            mono(m.exps().iter().map(|e| map[e]).collect())
        } else {
            random::monomial(rng, n, 8)
        };
        let same_order = (0..n).all(|i| {
            (0..n).all(|j| (m.exps()[i] > m.exps()[j]) == (r.exps()[i] > r.exps()[j]))
        });
        let same_red = reduce(&m) == reduce(&r);
        out.note(if same_red { "equal" } else { "distinct" });
        out.check(same_red == same_order, || format!("seed {s}: Red({m}) vs Red({r}) disagrees with the exponent order"));
        out.check(reduce(&m).exps() == brute_reduce(m.exps()).as_slice(), || format!("seed {s}: Red({m}) disagrees with the definition"));
    })
}

/// `Red(g m) = g Red(m)`.
pub fn reduction_equivariance_suite(seed: u64, trials: u64) -> SuiteOutcome {
    run_suite(seed, trials, |rng, out, s| {
        let n = sample_n(rng);
        let m = random::monomial(rng, n, 10);
        let (g, gz) = random_perm(rng, n);
        let lhs = reduce(&g.apply(&m).unwrap());
        let rhs = act(&gz, reduce(&m).exps());
        out.check(lhs.exps() == rhs.as_slice(), || format!("seed {s}: Red(g{m}) != g Red({m}) for g={g}"));
    })
}

/// `Red(lmlex(d) e'_I) = e'_I` for every `d_I`-monomial `d`.
pub fn reduction_corollary_suite(seed: u64, trials: u64) -> SuiteOutcome {
    run_suite(seed, trials, |rng, out, s| {
        let n = sample_n(rng);
        let index_set = random::index_set(rng, n);
        let d = random::dmonomial(rng, &index_set, 4);
        let lead = e_prime(&index_set);
        let m = d.lmlex().mul(&lead);
        out.check(reduce(&m) == lead, || format!("seed {s}: Red(lmlex({d}) e'_{index_set}) = {} ≠ {lead}", reduce(&m)));
    })
}

/// For distinct `d_I`-monomials `r, r_1..r_k` and nonzero `u, u_i` in
/// `V_I`, `Glm(r u)` and `Glm(sum r_i u_i)` lie in different classes.
pub fn disjointness_suite(seed: u64, trials: u64) -> SuiteOutcome {
    let perms = perms_by_n();
    run_suite(seed, trials, |rng, out, s| {
        let n = sample_n(rng).min(4);
        let p = &perms[n];
        let index_set = random::index_set(rng, n);
        let basis = random_basis(rng, &index_set, p);
        let mut rs: BTreeSet<DMonomial> = BTreeSet::new();
        let want = rng.random_range(2..=4);
        for _ in 0..20 {
            if rs.len() == want {
                break;
            }
            rs.insert(random::dmonomial(rng, &index_set, 2));
        }
        if rs.len() < 2 {
            // Only one d_I-monomial of small degree exists (I = {n}, n = 1).
            out.note("degenerate");
            return;
        }
        let mut rs: Vec<DMonomial> = rs.into_iter().collect();
        let r = rs.remove(rng.random_range(0..rs.len()));
        let expand = |d: &DMonomial| symstruct::structure::dmonomial_expand::<BigInt>(d);
        let ru = expand(&r).mul(&random_element(rng, &basis).expand()).unwrap();
        let mut rest = Polynomial::zero(n);
        for ri in &rs {
            let term = expand(ri).mul(&random_element(rng, &basis).expand()).unwrap();
            rest.add_scaled(&BigInt::one(), &term).unwrap();
        }
        let a = glm(&ru);
        let b = glm(&rest);
        out.check(
            !a.is_empty() && !b.is_empty() && brute_canonical(a[0].exps(), p) != brute_canonical(b[0].exps(), p),
            || format!("seed {s}: Glm(r u) ≈ Glm(Σ r_i u_i) with r={r}"),
        );
        // The sum itself is nonzero, so the intersection claim is not vacuous.
        out.check(!ru.add(&rest).unwrap().is_zero(), || format!("seed {s}: r u + Σ r_i u_i vanished"));
    })
}

/// `decompose(g u) = g · decompose(u)`.
pub fn equivariance_suite(seed: u64, trials: u64) -> SuiteOutcome {
    run_suite(seed, trials, |rng, out, s| {
        let n = rng.random_range(1..=4);
        let u = random::polynomial(rng, n, 6, 12, 9);
        let (g, _) = random_perm(rng, n);
        let lhs = decompose(&g.apply_poly(&u).unwrap(), None).unwrap();
        let rhs = equivariance_apply(&g, &decompose(&u, None).unwrap()).unwrap();
        out.check(lhs == rhs && lhs.to_json() == rhs.to_json(), || format!("seed {s}: decompose(g u) != g decompose(u) for g={g}, u={u}"));
    })
}

/// Round trip through both the library and the independent recomposition.
pub fn independent_roundtrip_suite(seed: u64, trials: u64, n: usize, max_degree: u32) -> SuiteOutcome {
    run_suite(seed, trials, |rng, out, s| {
        let u = random::polynomial(rng, n, max_degree, 20, 9);
        let d = decompose(&u, None).unwrap();
        out.check(recompose(&d) == u, || format!("seed {s}: recompose(decompose({u})) != u"));
        out.check(independent_recompose(&d) == u, || format!("seed {s}: independent expansion of decompose({u}) != u"));
    })
}

/// Exhaustive comparison of `canonical` with the orbit maximum.
pub fn canonical_exhaustive(max_n: usize, max_degree: u32) -> SuiteOutcome {
    let mut out = SuiteOutcome::default();
    for n in 1..=max_n {
        let perms = brute_permutations(n);
        for degree in 0..=max_degree {
            for m in symstruct::oracle::monomials_of_degree(n, degree) {
                out.trials += 1;
                let expected = brute_canonical(m.exps(), &perms);
                out.check(canonical(&m).monomial().exps() == expected.as_slice(), || format!("canonical({m})"));
            }
        }
    }
    out
}
