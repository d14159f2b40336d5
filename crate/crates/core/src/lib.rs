//! Exact row and column immanants of square matrices over a generalized
//! quaternion algebra H(a, b) over ℚ.
//!
//! Entries live in [`algebra::Quaternion`]; the row and column immanants,
//! determinants and permanents are in [`immanant`], weighted by class
//! functions from [`characters`]. The [`verify`] module holds seeded fixture
//! generators and property suites for the algebraic identities these
//! functionals satisfy.

pub mod algebra;
pub mod characters;
pub mod document;
pub mod error;
pub mod immanant;
pub mod matrix;
pub mod permgroup;
pub mod rational;
pub mod verify;

pub use algebra::{AlgebraParams, Mat2, Quaternion};
pub use characters::{CharacterSpec, Partition};
pub use error::{Error, Result};
pub use immanant::{
    all_immanants, class_sums, classical_immanant, col_det, col_immanant, col_per,
    hermitian_immanant, row_det, row_immanant, row_per, EvalOptions, ImmanantResult, Side,
    Strategy, VerifyLevel,
};
pub use matrix::MatrixH;
pub use permgroup::{CycleType, OrderedCycles, Orientation, Permutation};
pub use rational::Rational;
