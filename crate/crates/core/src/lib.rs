//! Exact Schubert polynomials over the integers.
//!
//! Polynomials are computed by divided differences and, independently, as
//! sums over reduced pipe dreams. On top of that sit expansions in the
//! standard elementary monomial (SEM) and complete homogeneous monomial
//! (CHM) bases and exhaustive checks of the pattern-avoidance
//! characterizations of single-term expansions.

pub mod bases;
pub mod error;
pub mod linalg;
pub mod perm;
pub mod pipedream;
pub mod poly;
pub mod schubert;
pub mod verify;

pub use bases::{
    chm_product, constructive_sem, sem_expand, sem_product, single_chm_of, single_monomial_of,
    single_sem_of, ChmVector, SemConstruction, SemExpansion, SemVector,
};
pub use error::{Error, Result};
pub use perm::{lehmer_rules_check, motzkin_path, LehmerCode, MeanderPath, Permutation, RuleReport};
pub use pipedream::{enumerate_reduced, schubert_from_pipedreams, LadderGraph, PipeDream};
pub use poly::{ExponentVector, IntPolynomial};
pub use schubert::{
    expand_schubert_basis, monk_expansion, monk_products, schubert, schubert_divdiff, verify_monk,
    Method, SchubertCache, SchubertExpansion,
};
pub use verify::{classify, conjecture_scan, count_scan, run_suite, theorem_scan, ScanConfig, ScanReport};
