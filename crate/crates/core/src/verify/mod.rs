//! Seeded fixtures, brute-force oracles, and property suites.

pub mod generate;
pub mod lemma;
pub mod suites;

pub use generate::{
    build_col_zero_fixture, build_row_zero_fixture, gen_hermitian, gen_isotropic, gen_matrix,
    gen_quaternion, gen_scalar_matrix, Seed,
};
pub use lemma::{check_lemma_tn, LemmaOutcome};
pub use suites::{run_suite, Failure, SuiteConfig, SuiteName, SuiteReport};
