//! Finite-dimensional Hom-structures given by structure constants.
//!
//! Conventions used throughout: a twist matrix `A` acts on basis vectors by
//! columns, `α(e_i) = Σ_j A[j][i] e_j`; a linear map `F: V → W` is a
//! `dim W × dim V` matrix with the same column convention.

mod algebra;
mod coalgebra;
mod modules;
mod morphism;
pub mod zoo;

use std::fmt;

pub use algebra::{verify_hom_algebra, yau_twist, HomAlgebra};
pub use coalgebra::{dualize_algebra, verify_hom_coalgebra, HomCoalgebra};
pub use modules::{
    dualize_module, regular_module, verify_hom_comodule, verify_hom_module, HomComodule,
    HomModule,
};
pub use morphism::{
    check_algebra_morphism, check_coalgebra_morphism, check_comodule_morphism,
    check_module_morphism, dualize_algebra_morphism, dualize_module_morphism, LinearMap,
};

use crate::exact_math::{format_rational, Rational};

/// One failed instance of an axiom: which identity, at which basis tuple, and
/// the two sides as coordinate vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub axiom: &'static str,
    pub indices: Vec<usize>,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
}

/// Outcome of an exhaustive axiom check. Every violating tuple is recorded.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn compare(
        &mut self,
        axiom: &'static str,
        indices: &[usize],
        lhs: Vec<Rational>,
        rhs: Vec<Rational>,
    ) {
        if lhs != rhs {
            self.violations.push(Violation {
                axiom,
                indices: indices.to_vec(),
                lhs,
                rhs,
            });
        }
    }

    pub fn merge(mut self, other: AxiomReport) -> AxiomReport {
        self.violations.extend(other.violations);
        self
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "passed");
        }
        writeln!(f, "failed with {} violation(s)", self.violations.len())?;
        for v in &self.violations {
            let show = |xs: &[Rational]| {
                xs.iter().map(format_rational).collect::<Vec<_>>().join(", ")
            };
            writeln!(
                f,
                "  {} at {:?}: [{}] != [{}]",
                v.axiom,
                v.indices,
                show(&v.lhs),
                show(&v.rhs)
            )?;
        }
        Ok(())
    }
}

/// Outer product `u ⊗ v` flattened row-major, accumulated into `out` with
/// weight `w`.
pub(crate) fn add_outer(out: &mut [Rational], w: &Rational, u: &[Rational], v: &[Rational]) {
    use num_traits::Zero;
    for (a, x) in u.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let wx = w * x;
        for (b, y) in v.iter().enumerate() {
            if !y.is_zero() {
                out[a * v.len() + b] += &wx * y;
            }
        }
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Rational> {
    use num_traits::{One, Zero};
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}
