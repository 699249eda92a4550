use num_traits::Zero;

use super::AxiomReport;
use crate::error::{Error, Result};
use crate::exact_math::{Matrix, Rational};

/// A finite-dimensional Hom-algebra `(G, μ, α)`.
///
/// `μ(e_i ⊗ e_j) = Σ_k c[i][j][k] e_k`, with `c` stored flat as
/// `c[(i·n + j)·n + k]`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomAlgebra {
    dim: usize,
    mul: Vec<Rational>,
    twist: Matrix,
}

impl HomAlgebra {
    pub fn new(dim: usize, mul: Vec<Rational>, twist: Matrix) -> Result<Self> {
        if mul.len() != dim * dim * dim {
            return Err(Error::Shape(format!(
                "algebra of dimension {dim} needs {} structure constants, got {}",
                dim * dim * dim,
                mul.len()
            )));
        }
        if twist.rows() != dim || twist.cols() != dim {
            return Err(Error::Shape(format!(
                "twist is {}x{}, expected {dim}x{dim}",
                twist.rows(),
                twist.cols()
            )));
        }
        Ok(HomAlgebra { dim, mul, twist })
    }

    /// Builds the table from a closure returning `μ(e_i ⊗ e_j)` as a
    /// coordinate vector.
    pub fn from_products(
        dim: usize,
        twist: Matrix,
        mut product: impl FnMut(usize, usize) -> Vec<Rational>,
    ) -> Result<Self> {
        let mut mul = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                if v.len() != dim {
                    return Err(Error::Shape(format!(
                        "product e{i}*e{j} has length {}, expected {dim}",
                        v.len()
                    )));
                }
                mul.extend(v);
            }
        }
        HomAlgebra::new(dim, mul, twist)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn structure_constants(&self) -> &[Rational] {
        &self.mul
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.mul[(i * self.dim + j) * self.dim + k]
    }

    pub fn set_structure_constant(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        let n = self.dim;
        self.mul[(i * n + j) * n + k] = value;
    }

    /// `μ(e_i ⊗ e_j)`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        let start = (i * self.dim + j) * self.dim;
        &self.mul[start..start + self.dim]
    }

    pub fn product(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (o, c) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if !c.is_zero() {
                        *o += &ab * c;
                    }
                }
            }
        }
        out
    }

    pub fn apply_twist(&self, v: &[Rational]) -> Vec<Rational> {
        self.twist.apply(v)
    }

    pub fn with_twist(&self, twist: Matrix) -> Result<Self> {
        HomAlgebra::new(self.dim, self.mul.clone(), twist)
    }
}

/// Checks Hom-associativity `α(g)(hk) = (gh)α(k)` on every basis triple and
/// multiplicativity `α(hk) = α(h)α(k)` on every basis pair.
pub fn verify_hom_algebra(a: &HomAlgebra) -> AxiomReport {
    let n = a.dim;
    let twisted: Vec<Vec<Rational>> = (0..n).map(|i| a.twist.column(i)).collect();
    let mut report = AxiomReport::default();
    for i in 0..n {
        for j in 0..n {
            let gh = a.basis_product(i, j);
            for k in 0..n {
                let lhs = a.product(&twisted[i], a.basis_product(j, k));
                let rhs = a.product(gh, &twisted[k]);
                report.compare("hom-associativity", &[i, j, k], lhs, rhs);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = a.apply_twist(a.basis_product(i, j));
            let rhs = a.product(&twisted[i], &twisted[j]);
            report.compare("multiplicativity", &[i, j], lhs, rhs);
        }
    }
    report
}

/// Turns an associative algebra (identity twist) and an algebra endomorphism
/// `φ` into the Hom-algebra with product `φ∘μ` and twist `φ`.
pub fn yau_twist(assoc: &HomAlgebra, endo: &Matrix) -> Result<HomAlgebra> {
    let n = assoc.dim;
    if !assoc.twist.is_identity() {
        return Err(Error::Input(
            "yau_twist expects an associative algebra with identity twist".into(),
        ));
    }
    if endo.rows() != n || endo.cols() != n {
        return Err(Error::Shape(format!(
            "endomorphism is {}x{}, expected {n}x{n}",
            endo.rows(),
            endo.cols()
        )));
    }
    let assoc_report = verify_hom_algebra(assoc);
    if let Some(v) = assoc_report.violations.first() {
        return Err(Error::Input(format!(
            "algebra is not associative: {} fails at {:?}",
            v.axiom, v.indices
        )));
    }
    let images: Vec<Vec<Rational>> = (0..n).map(|i| endo.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = endo.apply(assoc.basis_product(i, j));
            let rhs = assoc.product(&images[i], &images[j]);
            if lhs != rhs {
                return Err(Error::Input(format!(
                    "endomorphism is not multiplicative on basis pair ({i}, {j})"
                )));
            }
        }
    }
    HomAlgebra::from_products(n, endo.clone(), |i, j| endo.apply(assoc.basis_product(i, j)))
}
