use num_traits::Zero;

use super::{add_outer, AxiomReport, HomAlgebra, HomCoalgebra, HomComodule, HomModule};
use crate::error::{Error, Result};
use crate::exact_math::{Matrix, Rational};

/// A linear map `V → W` as a `dim W × dim V` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap {
    source_dim: usize,
    target_dim: usize,
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap {
            source_dim: matrix.cols(),
            target_dim: matrix.rows(),
            matrix,
        }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap::new(Matrix::identity(n))
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        LinearMap::new(Matrix::identity(n).scale(c))
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.apply(v)
    }

    fn image(&self, i: usize) -> Vec<Rational> {
        self.matrix.column(i)
    }

    fn expect_shape(&self, source: usize, target: usize) -> Result<()> {
        if self.source_dim != source || self.target_dim != target {
            return Err(Error::Shape(format!(
                "map is {}→{}, expected {source}→{target}",
                self.source_dim, self.target_dim
            )));
        }
        Ok(())
    }
}

/// Checks `μ'∘(f⊗f) = f∘μ` on basis pairs and `f∘α = α'∘f` on basis vectors.
pub fn check_algebra_morphism(
    source: &HomAlgebra,
    target: &HomAlgebra,
    f: &LinearMap,
) -> Result<AxiomReport> {
    let n = source.dim();
    f.expect_shape(n, target.dim())?;
    let images: Vec<Vec<Rational>> = (0..n).map(|i| f.image(i)).collect();
    let mut report = AxiomReport::default();
    for i in 0..n {
        for j in 0..n {
            let lhs = target.product(&images[i], &images[j]);
            let rhs = f.apply(source.basis_product(i, j));
            report.compare("morphism-product", &[i, j], lhs, rhs);
        }
    }
    for i in 0..n {
        let lhs = f.apply(&source.twist().column(i));
        let rhs = target.apply_twist(&images[i]);
        report.compare("morphism-twist", &[i], lhs, rhs);
    }
    Ok(report)
}

/// Checks `(f⊗f)∘Δ = Δ'∘f` and `f∘β = β'∘f` on every basis vector.
pub fn check_coalgebra_morphism(
    source: &HomCoalgebra,
    target: &HomCoalgebra,
    f: &LinearMap,
) -> Result<AxiomReport> {
    let (n, t) = (source.dim(), target.dim());
    f.expect_shape(n, t)?;
    let images: Vec<Vec<Rational>> = (0..n).map(|i| f.image(i)).collect();
    let mut report = AxiomReport::default();
    for k in 0..n {
        let delta = source.basis_coproduct(k);
        let mut lhs = vec![Rational::zero(); t * t];
        for i in 0..n {
            for j in 0..n {
                let w = &delta[i * n + j];
                if !w.is_zero() {
                    add_outer(&mut lhs, w, &images[i], &images[j]);
                }
            }
        }
        let rhs = target.coproduct(&images[k]);
        report.compare("morphism-coproduct", &[k], lhs, rhs);
    }
    for k in 0..n {
        let lhs = f.apply(&source.twist().column(k));
        let rhs = target.apply_twist(&images[k]);
        report.compare("morphism-twist", &[k], lhs, rhs);
    }
    Ok(report)
}

/// Checks `σ∘ψ = ψ̃∘(σ⊗α)` and `γ̃∘σ = σ∘γ` for `σ: M → N`.
pub fn check_module_morphism(
    source: &HomModule,
    target: &HomModule,
    sigma: &LinearMap,
) -> Result<AxiomReport> {
    if source.algebra() != target.algebra() {
        return Err(Error::Input(
            "module morphism check needs both modules over the same algebra".into(),
        ));
    }
    let alg = source.algebra();
    let (n, m) = (alg.dim(), source.mdim());
    sigma.expect_shape(m, target.mdim())?;
    let images: Vec<Vec<Rational>> = (0..m).map(|a| sigma.image(a)).collect();
    let alpha: Vec<Vec<Rational>> = (0..n).map(|i| alg.twist().column(i)).collect();
    let mut report = AxiomReport::default();
    for a in 0..m {
        for i in 0..n {
            let lhs = sigma.apply(source.basis_action(a, i));
            let rhs = target.act(&images[a], &alpha[i]);
            report.compare("morphism-action", &[a, i], lhs, rhs);
        }
    }
    for a in 0..m {
        let lhs = target.twist().apply(&images[a]);
        let rhs = sigma.apply(&source.twist().column(a));
        report.compare("morphism-twist", &[a], lhs, rhs);
    }
    Ok(report)
}

/// Checks `φ'∘F = (F⊗β)∘φ` and `ε'∘F = F∘ε` for `F: A → A'` over the same
/// coalgebra. This is the shape of the dual of a module morphism.
pub fn check_comodule_morphism(
    source: &HomComodule,
    target: &HomComodule,
    f: &LinearMap,
) -> Result<AxiomReport> {
    if source.coalgebra() != target.coalgebra() {
        return Err(Error::Input(
            "comodule morphism check needs both comodules over the same coalgebra".into(),
        ));
    }
    let co = source.coalgebra();
    let (n, m, t) = (co.dim(), source.mdim(), target.mdim());
    f.expect_shape(m, t)?;
    let images: Vec<Vec<Rational>> = (0..m).map(|a| f.image(a)).collect();
    let beta: Vec<Vec<Rational>> = (0..n).map(|i| co.twist().column(i)).collect();
    let mut report = AxiomReport::default();
    for a in 0..m {
        let lhs = target.coact(&images[a]);
        let phi = source.basis_coaction(a);
        let mut rhs = vec![Rational::zero(); t * n];
        for b in 0..m {
            for i in 0..n {
                let w = &phi[b * n + i];
                if !w.is_zero() {
                    add_outer(&mut rhs, w, &images[b], &beta[i]);
                }
            }
        }
        report.compare("morphism-coaction", &[a], lhs, rhs);
    }
    for a in 0..m {
        let lhs = target.twist().apply(&images[a]);
        let rhs = f.apply(&source.twist().column(a));
        report.compare("morphism-twist", &[a], lhs, rhs);
    }
    Ok(report)
}

/// `f*: W* → V*`, the transpose in the dual bases.
pub fn dualize_algebra_morphism(f: &LinearMap) -> LinearMap {
    LinearMap::new(f.matrix.transpose())
}

/// `σ°: N* → M*`, the transpose in the dual bases.
pub fn dualize_module_morphism(sigma: &LinearMap) -> LinearMap {
    LinearMap::new(sigma.matrix.transpose())
}
