//! Exact computations with Hom-associative algebras and their duals.
//!
//! Everything here works over the rationals with arbitrary precision; there is
//! no floating point anywhere in the crate.
//!
//! * [`exact_math`]: rational scalars, dense matrices, RREF and kernels.
//! * [`homalg`]: structure-constant Hom-algebras, Hom-coalgebras, right
//!   Hom-(co)modules, axiom verifiers, finite duality and morphism checks.
//! * [`sweedler`]: finite-codimensional quotient presentations and the
//!   Sweedler dual coalgebra computed on them.
//! * [`qplane`]: the k-twisted quantum plane and q-combinatorics.
//! * [`recseq`]: Hom-deformed binary linearly recursive sequences.
//! * [`cli`]: the JSON front end used by the `homdual` binary.

pub mod cli;
pub mod error;
pub mod exact_math;
pub mod homalg;
pub mod qplane;
pub mod recseq;
pub mod sweedler;

pub use error::{Error, Result};
pub use exact_math::{Matrix, Rational};
