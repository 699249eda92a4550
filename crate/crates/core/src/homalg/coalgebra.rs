use num_traits::Zero;

use super::{add_outer, AxiomReport, HomAlgebra};
use crate::error::{Error, Result};
use crate::exact_math::{Matrix, Rational};

/// A finite-dimensional Hom-coalgebra `(C, Δ, β)` without counit.
///
/// `Δ(e_k) = Σ_{i,j} d[k][i][j] e_i ⊗ e_j`, stored flat as `d[(k·n + i)·n + j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomCoalgebra {
    dim: usize,
    comul: Vec<Rational>,
    twist: Matrix,
}

impl HomCoalgebra {
    pub fn new(dim: usize, comul: Vec<Rational>, twist: Matrix) -> Result<Self> {
        if comul.len() != dim * dim * dim {
            return Err(Error::Shape(format!(
                "coalgebra of dimension {dim} needs {} constants, got {}",
                dim * dim * dim,
                comul.len()
            )));
        }
        if twist.rows() != dim || twist.cols() != dim {
            return Err(Error::Shape(format!(
                "twist is {}x{}, expected {dim}x{dim}",
                twist.rows(),
                twist.cols()
            )));
        }
        Ok(HomCoalgebra { dim, comul, twist })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn structure_constants(&self) -> &[Rational] {
        &self.comul
    }

    pub fn structure_constant(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.comul[(k * self.dim + i) * self.dim + j]
    }

    pub fn set_structure_constant(&mut self, k: usize, i: usize, j: usize, value: Rational) {
        let n = self.dim;
        self.comul[(k * n + i) * n + j] = value;
    }

    /// `Δ(e_k)` as an `n × n` row-major coefficient block.
    pub fn basis_coproduct(&self, k: usize) -> &[Rational] {
        let n = self.dim;
        &self.comul[k * n * n..(k + 1) * n * n]
    }

    pub fn coproduct(&self, v: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n * n];
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, d) in out.iter_mut().zip(self.basis_coproduct(k)) {
                if !d.is_zero() {
                    *o += c * d;
                }
            }
        }
        out
    }

    pub fn apply_twist(&self, v: &[Rational]) -> Vec<Rational> {
        self.twist.apply(v)
    }
}

/// Checks `(β⊗Δ)∘Δ = (Δ⊗β)∘Δ` and `Δ∘β = (β⊗β)∘Δ` on every basis element.
pub fn verify_hom_coalgebra(c: &HomCoalgebra) -> AxiomReport {
    let n = c.dim;
    let twisted: Vec<Vec<Rational>> = (0..n).map(|i| c.twist.column(i)).collect();
    let mut report = AxiomReport::default();
    for k in 0..n {
        let delta = c.basis_coproduct(k);
        let mut lhs = vec![Rational::zero(); n * n * n];
        let mut rhs = vec![Rational::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                let w = &delta[i * n + j];
                if w.is_zero() {
                    continue;
                }
                add_outer(&mut lhs, w, &twisted[i], c.basis_coproduct(j));
                add_outer(&mut rhs, w, c.basis_coproduct(i), &twisted[j]);
            }
        }
        report.compare("hom-coassociativity", &[k], lhs, rhs);
    }
    for k in 0..n {
        let lhs = c.coproduct(&twisted[k]);
        let delta = c.basis_coproduct(k);
        let mut rhs = vec![Rational::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let w = &delta[i * n + j];
                if !w.is_zero() {
                    add_outer(&mut rhs, w, &twisted[i], &twisted[j]);
                }
            }
        }
        report.compare("comultiplicativity", &[k], lhs, rhs);
    }
    report
}

/// The dual coalgebra `(G*, μ*, α*)` in the dual basis: `d[k][i][j] = c[i][j][k]`
/// and `β = Aᵀ`.
pub fn dualize_algebra(a: &HomAlgebra) -> HomCoalgebra {
    let n = a.dim();
    let mut comul = vec![Rational::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            for (k, c) in a.basis_product(i, j).iter().enumerate() {
                comul[(k * n + i) * n + j] = c.clone();
            }
        }
    }
    HomCoalgebra {
        dim: n,
        comul,
        twist: a.twist().transpose(),
    }
}
