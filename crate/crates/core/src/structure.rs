//! Index sets, `d_I`-monomials, generators `e_I` and the modules `V_I`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::coeff::Coefficient;
use crate::error::{Error, GeneratorViolation, Result};
use crate::monomial::Monomial;
use crate::ordering::glm;
use crate::perm::{
    factorial, stabilizer_generators, stabilizer_order, transversal, Permutation, Transversal,
    MAX_FACTORIAL_ARG,
};
use crate::poly::{elementary_symmetric, Polynomial};

/// Orbits of candidate generators are explored only up to this size.
const MAX_GENERATOR_ORBIT: u128 = 1 << 21;

/// A subset `I` of `{1, ..., n}` containing `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet {
    n: usize,
    members: Vec<usize>,
}

impl IndexSet {
    pub fn new(n: usize, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        let invalid = |reason| Error::InvalidIndexSet {
            n,
            members: members.clone(),
            reason,
        };
        if n == 0 {
            return Err(invalid("n must be positive"));
        }
        if members.first() == Some(&0) || members.last().is_some_and(|&i| i > n) {
            return Err(invalid("members must lie in 1..=n"));
        }
        if members.last() != Some(&n) {
            return Err(invalid("n must be a member"));
        }
        Ok(IndexSet { n, members })
    }

    /// `{n}`.
    pub fn top(n: usize) -> Self {
        IndexSet {
            n,
            members: vec![n],
        }
    }

    /// Every index set containing `n`, ordered by member list.
    pub fn all(n: usize) -> Vec<IndexSet> {
        assert!(n > 0 && n < 64, "n out of range");
        let mut sets: Vec<IndexSet> = (0u64..1 << (n - 1))
            .map(|mask| {
                let mut members: Vec<usize> =
                    (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                members.push(n);
                IndexSet { n, members }
            })
            .collect();
        sets.sort();
        sets
    }

    /// Index sets whose `e'_I` has degree at most `bound`, ordered by
    /// member list. Only these can contribute below degree `bound + 1`.
    pub fn with_e_prime_degree_at_most(n: usize, bound: u64) -> Vec<IndexSet> {
        fn walk(next: usize, n: usize, left: u64, members: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
            let mut full = members.clone();
            full.push(n);
            out.push(IndexSet { n, members: full });
            for i in next..n {
                if i as u64 > left {
                    break;
                }
                members.push(i);
                walk(i + 1, n, left - i as u64, members, out);
                members.pop();
            }
        }
        assert!(n > 0, "n must be positive");
        let mut out = Vec::new();
        walk(1, n, bound, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted, one-based, always ending in `n`.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// Total degree of `e'_I`.
    pub fn e_prime_degree(&self) -> u64 {
        self.members[..self.members.len() - 1]
            .iter()
            .map(|&i| i as u64)
            .sum()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.members.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", body.join(","))
    }
}

/// `e'_I = lmlex(d~_I) / d_n`: the product of `x1...xi` over `i` in `I \ {n}`.
pub fn e_prime(index_set: &IndexSet) -> Monomial {
    let n = index_set.n;
    let mut exps = vec![0u32; n];
    for &i in &index_set.members[..index_set.members.len() - 1] {
        for e in &mut exps[..i] {
            *e += 1;
        }
    }
    Monomial::from_vec_unchecked(exps)
}

/// `n! / (i1! (i2-i1)! ... (n-i_{m-1})!)`, the rank of `V_I`.
pub fn module_dimension(index_set: &IndexSet) -> u128 {
    assert!(index_set.n <= MAX_FACTORIAL_ARG, "n too large for exact dimension");
    let mut denom = 1u128;
    let mut prev = 0;
    for &i in &index_set.members {
        denom *= factorial(i - prev);
        prev = i;
    }
    factorial(index_set.n) / denom
}

/// `d_1^{t_1} ... d_n^{t_n}` with support inside an index set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DMonomial {
    index_set: IndexSet,
    /// `exps[i - 1]` is the power of `d_i`.
    exps: Vec<u32>,
}

impl DMonomial {
    pub fn one(index_set: &IndexSet) -> Self {
        DMonomial {
            exps: vec![0; index_set.n],
            index_set: index_set.clone(),
        }
    }

    /// From `(i, t_i)` pairs with one-based `i`; zero powers are dropped.
    pub fn new<I>(index_set: &IndexSet, powers: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, u32)>,
    {
        let mut r = DMonomial::one(index_set);
        for (i, t) in powers {
            if t == 0 {
                continue;
            }
            if !index_set.contains(i) {
                return Err(Error::InvalidArgument(format!(
                    "d{i} is not in the index set {index_set}"
                )));
            }
            r.exps[i - 1] += t;
        }
        Ok(r)
    }

    pub fn index_set(&self) -> &IndexSet {
        &self.index_set
    }

    pub fn power(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    /// Nonzero `(i, t_i)` pairs, ascending in `i`.
    pub fn powers(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &t)| t > 0)
            .map(|(i, &t)| (i + 1, t))
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&t| t == 0)
    }

    /// Degree as an element of `S`: `sum i * t_i`.
    pub fn degree(&self) -> u64 {
        self.powers().map(|(i, t)| i as u64 * t as u64).sum()
    }

    pub fn mul(&self, other: &DMonomial) -> DMonomial {
        debug_assert_eq!(self.index_set, other.index_set);
        DMonomial {
            index_set: self.index_set.clone(),
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// `prod lmlex(d_i)^{t_i}`: `x_j` carries `sum_{i >= j} t_i`.
    pub fn lmlex(&self) -> Monomial {
        let mut exps = vec![0u32; self.exps.len()];
        let mut running = 0;
        for j in (0..self.exps.len()).rev() {
            running += self.exps[j];
            exps[j] = running;
        }
        Monomial::from_vec_unchecked(exps)
    }
}

impl fmt::Display for DMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .powers()
            .map(|(i, t)| if t == 1 { format!("d{i}") } else { format!("d{i}^{t}") })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// Expands `prod d_i^{t_i}` into `S`.
pub fn dmonomial_expand<C: Coefficient>(r: &DMonomial) -> Polynomial<C> {
    let n = r.index_set.n;
    let mut acc = Polynomial::one(n);
    for (i, t) in r.powers() {
        let d: Polynomial<C> = elementary_symmetric(n, i).expect("index within 1..=n");
        acc = acc.mul(&d.pow(t)).expect("same ring");
    }
    acc
}

/// An element of `k[d_I]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DPolynomial<C = BigInt> {
    index_set: IndexSet,
    terms: BTreeMap<DMonomial, C>,
}

impl<C: Coefficient> DPolynomial<C> {
    pub fn zero(index_set: &IndexSet) -> Self {
        DPolynomial {
            index_set: index_set.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, r: DMonomial, c: C) -> Result<()> {
        if r.index_set != self.index_set {
            return Err(Error::InvalidArgument(format!(
                "{r} is over {} not {}",
                r.index_set, self.index_set
            )));
        }
        let sum = self.terms.remove(&r).unwrap_or_else(C::zero) + c;
        if !sum.is_zero() {
            self.terms.insert(r, sum);
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DMonomial, &C)> {
        self.terms.iter()
    }

    pub fn expand(&self) -> Polynomial<C> {
        let mut out = Polynomial::zero(self.index_set.n);
        for (r, c) in &self.terms {
            out.add_scaled(c, &dmonomial_expand(r)).expect("same ring");
        }
        out
    }
}

/// A validated generator `e_I` of `V_I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec<C = BigInt> {
    pub index_set: IndexSet,
    pub generator: Polynomial<C>,
    /// `e'_I`, the single `≽`-leading monomial of the generator.
    pub leading: Monomial,
    leading_inverse: C,
}

impl<C: Coefficient> GeneratorSpec<C> {
    /// Inverse of the coefficient of `e'_I` in the generator.
    pub fn leading_inverse(&self) -> &C {
        &self.leading_inverse
    }

    pub fn is_default(&self) -> bool {
        self.generator.len() == 1 && self.leading_inverse.is_one()
    }

    #[cfg(test)]
    pub(crate) fn unchecked_for_tests(index_set: IndexSet, generator: Polynomial<C>) -> Self {
        GeneratorSpec {
            leading: e_prime(&index_set),
            index_set,
            generator,
            leading_inverse: C::one(),
        }
    }
}

/// `e_I = e'_I` with coefficient one.
pub fn default_generator<C: Coefficient>(index_set: &IndexSet) -> GeneratorSpec<C> {
    let leading = e_prime(index_set);
    GeneratorSpec {
        index_set: index_set.clone(),
        generator: Polynomial::from_monomial(leading.clone()),
        leading,
        leading_inverse: C::one(),
    }
}

/// Checks that `candidate` can serve as `e_I`, reporting the first failed
/// condition in the order: leading set, stabilizer, unit.
pub fn validate_generator<C: Coefficient>(
    candidate: &Polynomial<C>,
    index_set: &IndexSet,
) -> Result<GeneratorSpec<C>> {
    crate::error::check_dims(index_set.n, candidate.n())?;
    if candidate.is_zero() {
        return Err(Error::Precondition("the generator must be nonzero".into()));
    }
    let leading = e_prime(index_set);
    if glm(candidate) != [leading.clone()] {
        return Err(Error::InvalidGenerator(GeneratorViolation::LeadingSet));
    }

    // stab(candidate) ⊆ stab(leading) always holds because Glm is
    // equivariant, so generator invariance gives equality; the orbit count
    // confirms it independently.
    let fixes_all = stabilizer_generators(&leading)
        .iter()
        .all(|g| g.apply_poly(candidate).expect("same ring") == *candidate);
    if !fixes_all {
        return Err(Error::InvalidGenerator(GeneratorViolation::Stabilizer));
    }
    let n = index_set.n;
    let expected_orbit = factorial(n) / stabilizer_order(&leading);
    if expected_orbit > MAX_GENERATOR_ORBIT {
        return Err(Error::Capacity(format!(
            "generator orbit of size {expected_orbit} is too large to check"
        )));
    }
    if polynomial_orbit_size(candidate, expected_orbit + 1) != expected_orbit {
        return Err(Error::InvalidGenerator(GeneratorViolation::Stabilizer));
    }

    let leading_inverse = candidate
        .coeff(&leading)
        .and_then(C::unit_inverse)
        .ok_or(Error::InvalidGenerator(GeneratorViolation::NonUnit))?;
    Ok(GeneratorSpec {
        index_set: index_set.clone(),
        generator: candidate.clone(),
        leading,
        leading_inverse,
    })
}

/// Size of the `Sym(n)`-orbit of `u`, found by closing under adjacent
/// transpositions. Stops once `limit` elements are found.
fn polynomial_orbit_size<C: Coefficient>(u: &Polynomial<C>, limit: u128) -> u128 {
    let n = u.n();
    let moves: Vec<Permutation> = (0..n.saturating_sub(1))
        .map(|i| Permutation::transposition(n, i, i + 1))
        .collect();
    let mut seen: HashSet<Polynomial<C>> = HashSet::from([u.clone()]);
    let mut queue = VecDeque::from([u.clone()]);
    while let Some(v) = queue.pop_front() {
        for s in &moves {
            let w = s.apply_poly(&v).expect("same ring");
            if seen.insert(w.clone()) {
                if seen.len() as u128 >= limit {
                    return seen.len() as u128;
                }
                queue.push_back(w);
            }
        }
    }
    seen.len() as u128
}

/// The basis `{g * e_I : g in T}` of `V_I`, `T` the canonical transversal of
/// `stab(e'_I)`. Entry `k` corresponds to the orbit element `images[k]`.
#[derive(Debug)]
pub struct ModuleBasis<C = BigInt> {
    spec: GeneratorSpec<C>,
    transversal: Transversal,
    polys: Vec<Polynomial<C>>,
    position: HashMap<Monomial, usize>,
}

impl<C: Coefficient> ModuleBasis<C> {
    pub fn spec(&self) -> &GeneratorSpec<C> {
        &self.spec
    }

    pub fn index_set(&self) -> &IndexSet {
        &self.spec.index_set
    }

    pub fn dim(&self) -> usize {
        self.polys.len()
    }

    pub fn transversal(&self) -> &Transversal {
        &self.transversal
    }

    pub fn rep(&self, k: usize) -> &Permutation {
        &self.transversal.reps[k]
    }

    /// `rep(k) * e_I`.
    pub fn poly(&self, k: usize) -> &Polynomial<C> {
        &self.polys[k]
    }

    /// `(rep, rep * e_I)` pairs in basis order.
    pub fn entries(&self) -> impl Iterator<Item = (&Permutation, &Polynomial<C>)> {
        self.transversal.reps.iter().zip(&self.polys)
    }

    /// Basis index whose `g * e'_I` equals `image`.
    pub fn position_of(&self, image: &Monomial) -> Option<usize> {
        self.position.get(image).copied()
    }

    /// Index `j` with `g * (rep(k) * e_I) = rep(j) * e_I`.
    pub fn act(&self, g: &Permutation, k: usize) -> usize {
        let image = g.apply_unchecked(&self.transversal.images[k]);
        self.position[&image]
    }
}

pub fn module_basis<C: Coefficient>(spec: GeneratorSpec<C>) -> ModuleBasis<C> {
    let transversal = transversal(&spec.leading);
    let polys = transversal
        .reps
        .iter()
        .map(|g| g.apply_poly(&spec.generator).expect("same ring"))
        .collect();
    let position = transversal
        .images
        .iter()
        .enumerate()
        .map(|(k, m)| (m.clone(), k))
        .collect();
    ModuleBasis {
        spec,
        transversal,
        polys,
        position,
    }
}

/// `sum_g λ_g * g * e_I`, held in transversal coordinates.
#[derive(Debug, Clone)]
pub struct ModuleElement<C = BigInt> {
    basis: Arc<ModuleBasis<C>>,
    coords: BTreeMap<usize, C>,
}

impl<C: Coefficient> ModuleElement<C> {
    pub fn new<I>(basis: Arc<ModuleBasis<C>>, coords: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, C)>,
    {
        let mut v = ModuleElement {
            basis,
            coords: BTreeMap::new(),
        };
        for (k, c) in coords {
            if k >= v.basis.dim() {
                return Err(Error::InvalidArgument(format!(
                    "basis index {k} out of range for dimension {}",
                    v.basis.dim()
                )));
            }
            v.add_coord(k, c);
        }
        Ok(v)
    }

    pub fn zero(basis: Arc<ModuleBasis<C>>) -> Self {
        ModuleElement {
            basis,
            coords: BTreeMap::new(),
        }
    }

    pub(crate) fn add_coord(&mut self, k: usize, c: C) {
        let sum = self.coords.remove(&k).unwrap_or_else(C::zero) + c;
        if !sum.is_zero() {
            self.coords.insert(k, sum);
        }
    }

    pub fn basis(&self) -> &Arc<ModuleBasis<C>> {
        &self.basis
    }

    pub fn coords(&self) -> &BTreeMap<usize, C> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn expand(&self) -> Polynomial<C> {
        let mut out = Polynomial::zero(self.basis.index_set().n);
        for (&k, c) in &self.coords {
            out.add_scaled(c, self.basis.poly(k)).expect("same ring");
        }
        out
    }

    /// `g * self`, permuting cosets.
    pub fn act(&self, g: &Permutation) -> ModuleElement<C> {
        ModuleElement {
            basis: self.basis.clone(),
            coords: self
                .coords
                .iter()
                .map(|(&k, c)| (self.basis.act(g, k), c.clone()))
                .collect(),
        }
    }
}

impl<C: Coefficient> PartialEq for ModuleElement<C> {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.basis.spec == other.basis.spec
    }
}

impl<C: Coefficient> Eq for ModuleElement<C> {}
