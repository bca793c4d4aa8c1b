//! Decomposition of `S = k[x1..xn]` into `⊕_I k[d_I] ⊗ V_I` and the
//! multiplication map back.
//!
//! `decompose` repeatedly takes the lex-greatest member `m` of `Glm(u)`,
//! finds `(I, r, g)` with `Glm(r * g * e_I) = {m}`, and subtracts the right
//! multiple. Each step strictly lowers `Glm(u)` in the well-founded order
//! "orbit class first, then strict inclusion", which is checked as it runs.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::coeff::Coefficient;
use crate::error::{check_dims, Error, Result};
use crate::monomial::Monomial;
use crate::ordering::{canonical, glm_with_class};
use crate::perm::{binomial, canonical_mover, Permutation};
use crate::poly::Polynomial;
use crate::structure::{
    default_generator, dmonomial_expand, e_prime, module_basis, DMonomial, GeneratorSpec,
    IndexSet, ModuleBasis, ModuleElement,
};

/// `(I, r, g)` with `Glm(r * g * e_I) = {m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub index_set: IndexSet,
    pub r: DMonomial,
    pub g: Permutation,
}

/// Writes the sorted exponents of `m` as `prod lmlex(d_i)^{t_i}` and splits
/// off `e'_I`: `r = d_n^{t_n} * prod_{i in I, i < n} d_i^{t_i - 1}`.
pub fn leading_witness(m: &Monomial) -> Witness {
    let sorted = canonical(m).into_monomial();
    let c = sorted.exps();
    let n = m.n();
    let steps: Vec<u32> = (0..n)
        .map(|i| if i + 1 < n { c[i] - c[i + 1] } else { c[i] })
        .collect();
    let mut members: Vec<usize> = (1..n).filter(|&i| steps[i - 1] != 0).collect();
    members.push(n);
    let index_set = IndexSet::new(n, members).expect("n is a member");
    let powers = index_set.members().iter().map(|&i| {
        if i == n {
            (i, steps[i - 1])
        } else {
            (i, steps[i - 1] - 1)
        }
    });
    let r = DMonomial::new(&index_set, powers).expect("support inside I");
    let g = canonical_mover(&sorted, m).expect("m is in the orbit of its sort");
    Witness { index_set, r, g }
}

/// The generators `e_I` in use, one module basis per index set. Missing
/// entries fall back to `e_I = e'_I`.
#[derive(Debug, Clone)]
pub struct GeneratorTable<C = BigInt> {
    n: usize,
    bases: BTreeMap<IndexSet, Arc<ModuleBasis<C>>>,
}

impl<C: Coefficient> GeneratorTable<C> {
    pub fn new(n: usize) -> Self {
        GeneratorTable {
            n,
            bases: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, spec: GeneratorSpec<C>) -> Result<()> {
        check_dims(self.n, spec.index_set.n())?;
        self.bases
            .insert(spec.index_set.clone(), Arc::new(module_basis(spec)));
        Ok(())
    }

    pub fn get(&self, index_set: &IndexSet) -> Option<&Arc<ModuleBasis<C>>> {
        self.bases.get(index_set)
    }

    pub fn get_or_default(&mut self, index_set: &IndexSet) -> Arc<ModuleBasis<C>> {
        self.bases
            .entry(index_set.clone())
            .or_insert_with(|| Arc::new(module_basis(default_generator(index_set))))
            .clone()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IndexSet, &Arc<ModuleBasis<C>>)> {
        self.bases.iter()
    }

    /// True when every stored generator is homogeneous; defaults always are.
    pub fn is_homogeneous(&self) -> bool {
        self.bases
            .values()
            .all(|b| b.spec().generator.is_homogeneous())
    }
}

/// One summand `k[d_I] ⊗ V_I` of a decomposition.
#[derive(Debug, Clone)]
pub struct Component<C = BigInt> {
    basis: Arc<ModuleBasis<C>>,
    terms: BTreeMap<DMonomial, ModuleElement<C>>,
}

impl<C: Coefficient> Component<C> {
    pub fn basis(&self) -> &Arc<ModuleBasis<C>> {
        &self.basis
    }

    /// `(r, v)` pairs with distinct `r` and nonzero `v`.
    pub fn terms(&self) -> impl Iterator<Item = (&DMonomial, &ModuleElement<C>)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> PartialEq for Component<C> {
    fn eq(&self, other: &Self) -> bool {
        self.basis.spec() == other.basis.spec() && self.terms == other.terms
    }
}

/// An element of `⊕_{I ∋ n} k[d_I] ⊗ V_I`.
#[derive(Debug, Clone)]
pub struct Decomposition<C = BigInt> {
    n: usize,
    components: BTreeMap<IndexSet, Component<C>>,
}

impl<C: Coefficient> PartialEq for Decomposition<C> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.components == other.components
    }
}

impl<C: Coefficient> Eq for Decomposition<C> {}

impl<C: Coefficient> Decomposition<C> {
    pub fn empty(n: usize) -> Self {
        Decomposition {
            n,
            components: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&IndexSet, &Component<C>)> {
        self.components.iter()
    }

    pub fn component(&self, index_set: &IndexSet) -> Option<&Component<C>> {
        self.components.get(index_set)
    }

    /// Total number of `(I, r)` entries.
    pub fn term_count(&self) -> usize {
        self.components.values().map(Component::len).sum()
    }

    /// The bases referenced by this decomposition.
    pub fn generators(&self) -> GeneratorTable<C> {
        GeneratorTable {
            n: self.n,
            bases: self
                .components
                .iter()
                .map(|(i, c)| (i.clone(), c.basis.clone()))
                .collect(),
        }
    }

    /// Adds `r ⊗ v`, merging with an existing entry for the same `r`.
    pub fn insert(&mut self, r: DMonomial, v: ModuleElement<C>) -> Result<()> {
        check_dims(self.n, r.index_set().n())?;
        if r.index_set() != v.basis().index_set() {
            return Err(Error::InvalidArgument(format!(
                "{r} and the module element live over different index sets"
            )));
        }
        for (&k, c) in v.coords() {
            self.insert_coord(v.basis(), r.clone(), k, c.clone())?;
        }
        Ok(())
    }

    /// Adds `c * (r ⊗ rep(k) e_I)`.
    pub fn insert_coord(
        &mut self,
        basis: &Arc<ModuleBasis<C>>,
        r: DMonomial,
        k: usize,
        c: C,
    ) -> Result<()> {
        let index_set = basis.index_set().clone();
        let component = self
            .components
            .entry(index_set.clone())
            .or_insert_with(|| Component {
                basis: basis.clone(),
                terms: BTreeMap::new(),
            });
        if component.basis.spec() != basis.spec() {
            return Err(Error::InvalidArgument(format!(
                "conflicting generators for {index_set}"
            )));
        }
        if k >= basis.dim() {
            return Err(Error::InvalidArgument(format!("basis index {k} out of range")));
        }
        let entry = component
            .terms
            .entry(r.clone())
            .or_insert_with(|| ModuleElement::zero(basis.clone()));
        entry.add_coord(k, c);
        if entry.is_zero() {
            component.terms.remove(&r);
        }
        if component.terms.is_empty() {
            self.components.remove(&index_set);
        }
        Ok(())
    }
}

/// Decomposes `u` using `generators` where given and `e'_I` elsewhere.
pub fn decompose<C: Coefficient>(
    u: &Polynomial<C>,
    generators: Option<&GeneratorTable<C>>,
) -> Result<Decomposition<C>> {
    let n = u.n();
    let mut table = match generators {
        Some(t) => {
            check_dims(t.n, n)?;
            t.clone()
        }
        None => GeneratorTable::new(n),
    };
    let mut out = Decomposition::empty(n);
    let mut cache = HashMap::new();
    if table.is_homogeneous() {
        for (degree, piece) in u.homogeneous_components() {
            let cap = binomial(degree as usize + n - 1, n - 1);
            reduce_piece(piece, Some(cap), &mut table, &mut out, &mut cache);
        }
    } else {
        reduce_piece(u.clone(), None, &mut table, &mut out, &mut cache);
    }
    Ok(out)
}

fn reduce_piece<C: Coefficient>(
    mut u: Polynomial<C>,
    cap: Option<u128>,
    table: &mut GeneratorTable<C>,
    out: &mut Decomposition<C>,
    cache: &mut HashMap<DMonomial, Polynomial<C>>,
) {
    let mut processed: HashSet<Monomial> = HashSet::new();
    let mut current = glm_with_class(&u);
    while let Some((class, leading)) = current {
        let m = leading[0].clone();
        assert!(
            processed.insert(m.clone()),
            "decompose revisited {m}; the leading set failed to decrease"
        );
        if let Some(cap) = cap {
            assert!(
                processed.len() as u128 <= cap,
                "decompose exceeded {cap} iterations"
            );
        }
        let lambda = u.coeff(&m).expect("m is in the support").clone();
        let w = leading_witness(&m);
        let basis = table.get_or_default(&w.index_set);
        let k = basis
            .position_of(&w.g.apply_unchecked(&e_prime(&w.index_set)))
            .expect("g * e'_I lies in the orbit");
        let c = lambda * basis.spec().leading_inverse().clone();
        let expanded = cache
            .entry(w.r.clone())
            .or_insert_with(|| dmonomial_expand(&w.r));
        let term = expanded.mul(basis.poly(k)).expect("same ring");
        u.add_scaled(&-c.clone(), &term).expect("same ring");
        out.insert_coord(&basis, w.r, k, c)
            .expect("witness data is consistent");

        let next = glm_with_class(&u);
        if let Some((next_class, next_leading)) = &next {
            let decreased = *next_class < class
                || (*next_class == class
                    && next_leading.len() < leading.len()
                    && next_leading.iter().all(|x| leading.contains(x)));
            assert!(decreased, "Glm did not decrease after removing {m}");
        }
        current = next;
    }
}

/// `φ`: sums `expand(r) * v` over every entry.
pub fn recompose<C: Coefficient>(d: &Decomposition<C>) -> Polynomial<C> {
    let mut out = Polynomial::zero(d.n);
    for component in d.components.values() {
        for (r, v) in &component.terms {
            let product = dmonomial_expand::<C>(r).mul(&v.expand()).expect("same ring");
            out.add_scaled(&C::one(), &product).expect("same ring");
        }
    }
    out
}

/// `g` acting on every module element; `d_I`-monomials are invariant.
pub fn equivariance_apply<C: Coefficient>(g: &Permutation, d: &Decomposition<C>) -> Result<Decomposition<C>> {
    check_dims(d.n, g.n())?;
    Ok(Decomposition {
        n: d.n,
        components: d
            .components
            .iter()
            .map(|(i, comp)| {
                let terms = comp.terms.iter().map(|(r, v)| (r.clone(), v.act(g))).collect();
                (
                    i.clone(),
                    Component {
                        basis: comp.basis.clone(),
                        terms,
                    },
                )
            })
            .collect(),
    })
}

impl<C: Coefficient> Decomposition<C> {
    /// Human-readable form, e.g. `d1 ⊗ x1 − d2 ⊗ 1`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for component in self.components.values() {
            for (r, v) in &component.terms {
                for (&k, c) in v.coords() {
                    let negative = c.is_negative();
                    let magnitude = if negative { -c.clone() } else { c.clone() };
                    match (out.is_empty(), negative) {
                        (true, true) => out.push('−'),
                        (true, false) => {}
                        (false, true) => out.push_str(" − "),
                        (false, false) => out.push_str(" + "),
                    }
                    match (magnitude.is_one(), r.is_one()) {
                        (true, _) => write!(out, "{r}").unwrap(),
                        (false, true) => write!(out, "{magnitude}").unwrap(),
                        (false, false) => write!(out, "{magnitude}*{r}").unwrap(),
                    }
                    let basis_poly = component.basis.poly(k);
                    if basis_poly.len() > 1 {
                        write!(out, " ⊗ ({basis_poly})").unwrap();
                    } else {
                        write!(out, " ⊗ {basis_poly}").unwrap();
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoordJson {
    pub rep: usize,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DTermJson {
    pub d_exps: BTreeMap<String, u32>,
    pub coords: Vec<CoordJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    #[serde(rename = "I")]
    pub index_set: Vec<usize>,
    pub terms: Vec<DTermJson>,
}

/// Wire form; `rep` indexes the module basis ordering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub n: usize,
    pub components: Vec<ComponentJson>,
}

impl<C: Coefficient> From<&Decomposition<C>> for DecompositionJson {
    fn from(d: &Decomposition<C>) -> Self {
        DecompositionJson {
            n: d.n,
            components: d
                .components
                .iter()
                .map(|(i, comp)| ComponentJson {
                    index_set: i.members().to_vec(),
                    terms: comp
                        .terms
                        .iter()
                        .map(|(r, v)| DTermJson {
                            d_exps: r.powers().map(|(i, t)| (i.to_string(), t)).collect(),
                            coords: v
                                .coords()
                                .iter()
                                .map(|(&rep, c)| CoordJson {
                                    rep,
                                    coeff: c.to_decimal(),
                                })
                                .collect(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

impl<C: Coefficient> Decomposition<C> {
    pub fn to_json_value(&self) -> DecompositionJson {
        DecompositionJson::from(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("plain data serializes")
    }

    /// Reads the wire form; coordinates refer to `generators` where given and
    /// to the default bases elsewhere.
    pub fn from_json_value(
        wire: DecompositionJson,
        generators: Option<&GeneratorTable<C>>,
    ) -> Result<Self> {
        let n = wire.n;
        if n == 0 {
            return Err(Error::Json("n must be positive".into()));
        }
        let mut table = generators.cloned().unwrap_or_else(|| GeneratorTable::new(n));
        check_dims(table.n, n)?;
        let mut out = Decomposition::empty(n);
        for comp in wire.components {
            let index_set = IndexSet::new(n, comp.index_set)?;
            let basis = table.get_or_default(&index_set);
            for term in comp.terms {
                let powers = term
                    .d_exps
                    .iter()
                    .map(|(i, &t)| {
                        i.parse::<usize>()
                            .map(|i| (i, t))
                            .map_err(|_| Error::Json(format!("bad d index {i:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let r = DMonomial::new(&index_set, powers)?;
                for coord in term.coords {
                    let c = C::from_decimal(&coord.coeff)
                        .ok_or_else(|| Error::Json(format!("bad coefficient {:?}", coord.coeff)))?;
                    out.insert_coord(&basis, r.clone(), coord.rep, c)?;
                }
            }
        }
        Ok(out)
    }

    pub fn from_json(text: &str, generators: Option<&GeneratorTable<C>>) -> Result<Self> {
        let wire: DecompositionJson = serde_json::from_str(text)?;
        Self::from_json_value(wire, generators)
    }
}
