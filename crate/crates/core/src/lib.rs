//! Decomposition of multivariate polynomials under the symmetric group.
//!
//! Every `u` in `k[x1..xn]` is written uniquely as a sum over index sets
//! `I ∋ n` of terms `r ⊗ v` with `r` a monomial in the elementary symmetric
//! polynomials `d_i (i in I)` and `v` in the cyclic module `V_I` spanned by
//! the orbit of a generator `e_I`.
//!
//! ```
//! use symstruct::{decompose, parse_polynomial, recompose, Polynomial};
//!
//! let u: Polynomial = parse_polynomial("x1^2", 2).unwrap();
//! let d = decompose(&u, None).unwrap();
//! assert_eq!(d.render(), "d1 ⊗ x1 − d2 ⊗ 1");
//! assert_eq!(recompose(&d), u);
//! ```

pub mod cli;
pub mod coeff;
pub mod decomp;
pub mod error;
pub mod monomial;
pub mod oracle;
pub mod ordering;
pub mod parser;
pub mod perm;
pub mod poly;
pub mod random;
pub mod reduction;
pub mod structure;

pub use coeff::Coefficient;
pub use decomp::{
    decompose, equivariance_apply, leading_witness, recompose, Component, Decomposition,
    GeneratorTable, Witness,
};
pub use error::{Error, GeneratorViolation, ParseDiagnostic, Result};
pub use monomial::Monomial;
pub use ordering::{approx, canonical, glm, succ_compare, OrbitClass};
pub use parser::{parse_monomial, parse_permutation, parse_polynomial, render_polynomial};
pub use perm::{Permutation, Transversal};
pub use poly::{elementary_symmetric, Polynomial};
pub use reduction::{classify_reduced, reduce, reduce_set, ReducedClassification};
pub use structure::{
    default_generator, e_prime, module_basis, module_dimension, validate_generator, DMonomial,
    DPolynomial, GeneratorSpec, IndexSet, ModuleBasis, ModuleElement,
};
