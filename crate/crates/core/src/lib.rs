//! Few-qubit states as division-algebra spinors.
//!
//! One, two and three qubits are read as pairs over ℂ, ℍ and 𝕆. From there the
//! crate builds the three Hopf maps onto S², S⁴ and S⁸, the matching light cones
//! in 3+1, 5+1 and 9+1 dimensions, the Clifford generators and split-preserving
//! group actions, the two-qubit Weyl/Dirac/Maxwell constructions, and a small
//! set of entanglement-entropy utilities.
//!
//! Every identity the constructions rely on is exposed as a function returning a
//! residual, and [`check`] bundles them into randomized invariant suites.

pub mod algebra;
pub mod check;
pub mod entropy;
pub mod error;
pub mod fields;
pub mod hopf;
pub mod report;
pub mod spacetime;
pub mod spin;
pub mod states;
pub mod tolerance;

pub use algebra::{DivisionAlgebra, Octonion, Quaternion};
pub use error::{Error, Result};
pub use hopf::{HopfVector, Level};
pub use spacetime::{HermitianRep, IntervalClass, MinkowskiVector};
pub use fields::{DiracState, FieldTensor, KVector};
pub use spin::{GenerationElement, SpinGenerator, SplitElement};

pub use num_complex::Complex64;

pub use states::{DensityMatrix, PureState};
pub use tolerance::Tolerances;
