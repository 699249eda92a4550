use num_traits::Zero;

use super::{add_outer, dualize_algebra, AxiomReport, HomAlgebra, HomCoalgebra};
use crate::error::{Error, Result};
use crate::exact_math::{Matrix, Rational};

/// A right Hom-module `(M, ψ, γ)` over a finite Hom-algebra.
///
/// `ψ(m_a ⊗ e_i) = Σ_b d[a][i][b] m_b`, stored flat as `d[(a·n + i)·m + b]`
/// where `n` is the algebra dimension and `m` the module dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct HomModule {
    algebra: HomAlgebra,
    mdim: usize,
    action: Vec<Rational>,
    mtwist: Matrix,
}

impl HomModule {
    pub fn new(
        algebra: HomAlgebra,
        mdim: usize,
        action: Vec<Rational>,
        mtwist: Matrix,
    ) -> Result<Self> {
        let n = algebra.dim();
        if action.len() != mdim * n * mdim {
            return Err(Error::Shape(format!(
                "module action needs {} constants, got {}",
                mdim * n * mdim,
                action.len()
            )));
        }
        if mtwist.rows() != mdim || mtwist.cols() != mdim {
            return Err(Error::Shape(format!(
                "module twist is {}x{}, expected {mdim}x{mdim}",
                mtwist.rows(),
                mtwist.cols()
            )));
        }
        Ok(HomModule {
            algebra,
            mdim,
            action,
            mtwist,
        })
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn mdim(&self) -> usize {
        self.mdim
    }

    pub fn twist(&self) -> &Matrix {
        &self.mtwist
    }

    pub fn structure_constants(&self) -> &[Rational] {
        &self.action
    }

    pub fn set_structure_constant(&mut self, a: usize, i: usize, b: usize, value: Rational) {
        let (n, m) = (self.algebra.dim(), self.mdim);
        self.action[(a * n + i) * m + b] = value;
    }

    /// `ψ(m_a ⊗ e_i)`.
    pub fn basis_action(&self, a: usize, i: usize) -> &[Rational] {
        let (n, m) = (self.algebra.dim(), self.mdim);
        let start = (a * n + i) * m;
        &self.action[start..start + m]
    }

    pub fn act(&self, mv: &[Rational], gv: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.mdim];
        for (a, x) in mv.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, y) in gv.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (o, d) in out.iter_mut().zip(self.basis_action(a, i)) {
                    if !d.is_zero() {
                        *o += &xy * d;
                    }
                }
            }
        }
        out
    }
}

/// A right Hom-comodule `(A, φ, ε)` over a finite Hom-coalgebra.
///
/// `φ(m_a) = Σ_{b,i} e[a][b][i] m_b ⊗ c_i`, stored flat as `e[(a·m + b)·n + i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomComodule {
    coalgebra: HomCoalgebra,
    mdim: usize,
    coaction: Vec<Rational>,
    mtwist: Matrix,
}

impl HomComodule {
    pub fn new(
        coalgebra: HomCoalgebra,
        mdim: usize,
        coaction: Vec<Rational>,
        mtwist: Matrix,
    ) -> Result<Self> {
        let n = coalgebra.dim();
        if coaction.len() != mdim * mdim * n {
            return Err(Error::Shape(format!(
                "comodule coaction needs {} constants, got {}",
                mdim * mdim * n,
                coaction.len()
            )));
        }
        if mtwist.rows() != mdim || mtwist.cols() != mdim {
            return Err(Error::Shape(format!(
                "comodule twist is {}x{}, expected {mdim}x{mdim}",
                mtwist.rows(),
                mtwist.cols()
            )));
        }
        Ok(HomComodule {
            coalgebra,
            mdim,
            coaction,
            mtwist,
        })
    }

    pub fn coalgebra(&self) -> &HomCoalgebra {
        &self.coalgebra
    }

    pub fn mdim(&self) -> usize {
        self.mdim
    }

    pub fn twist(&self) -> &Matrix {
        &self.mtwist
    }

    pub fn structure_constants(&self) -> &[Rational] {
        &self.coaction
    }

    pub fn set_structure_constant(&mut self, a: usize, b: usize, i: usize, value: Rational) {
        let (n, m) = (self.coalgebra.dim(), self.mdim);
        self.coaction[(a * m + b) * n + i] = value;
    }

    /// `φ(m_a)` as an `m × n` row-major block.
    pub fn basis_coaction(&self, a: usize) -> &[Rational] {
        let (n, m) = (self.coalgebra.dim(), self.mdim);
        &self.coaction[a * m * n..(a + 1) * m * n]
    }

    pub fn coact(&self, v: &[Rational]) -> Vec<Rational> {
        let (n, m) = (self.coalgebra.dim(), self.mdim);
        let mut out = vec![Rational::zero(); m * n];
        for (a, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (o, e) in out.iter_mut().zip(self.basis_coaction(a)) {
                if !e.is_zero() {
                    *o += x * e;
                }
            }
        }
        out
    }
}

/// Checks `ψ∘(ψ⊗α) = ψ∘(γ⊗μ)` on all `(m_a, e_i, e_j)` and
/// `ψ∘(γ⊗α) = γ∘ψ` on all `(m_a, e_i)`.
pub fn verify_hom_module(module: &HomModule) -> AxiomReport {
    let alg = &module.algebra;
    let (n, m) = (alg.dim(), module.mdim);
    let alpha: Vec<Vec<Rational>> = (0..n).map(|i| alg.twist().column(i)).collect();
    let gamma: Vec<Vec<Rational>> = (0..m).map(|a| module.mtwist.column(a)).collect();
    let mut report = AxiomReport::default();
    for a in 0..m {
        for i in 0..n {
            let mg = module.basis_action(a, i);
            for j in 0..n {
                let lhs = module.act(mg, &alpha[j]);
                let rhs = module.act(&gamma[a], alg.basis_product(i, j));
                report.compare("module-hom-associativity", &[a, i, j], lhs, rhs);
            }
        }
    }
    for a in 0..m {
        for i in 0..n {
            let lhs = module.act(&gamma[a], &alpha[i]);
            let rhs = module.mtwist.apply(module.basis_action(a, i));
            report.compare("module-twist-compatibility", &[a, i], lhs, rhs);
        }
    }
    report
}

/// Checks `(φ⊗β)∘φ = (ε⊗Δ)∘φ` and `(ε⊗β)∘φ = φ∘ε` on every module basis
/// element.
pub fn verify_hom_comodule(comodule: &HomComodule) -> AxiomReport {
    let co = &comodule.coalgebra;
    let (n, m) = (co.dim(), comodule.mdim);
    let beta: Vec<Vec<Rational>> = (0..n).map(|i| co.twist().column(i)).collect();
    let eps: Vec<Vec<Rational>> = (0..m).map(|a| comodule.mtwist.column(a)).collect();
    let mut report = AxiomReport::default();
    for a in 0..m {
        let phi = comodule.basis_coaction(a);
        let mut lhs = vec![Rational::zero(); m * n * n];
        let mut rhs = vec![Rational::zero(); m * n * n];
        for b in 0..m {
            for i in 0..n {
                let w = &phi[b * n + i];
                if w.is_zero() {
                    continue;
                }
                add_outer(&mut lhs, w, comodule.basis_coaction(b), &beta[i]);
                add_outer(&mut rhs, w, &eps[b], co.basis_coproduct(i));
            }
        }
        report.compare("comodule-hom-coassociativity", &[a], lhs, rhs);
    }
    for a in 0..m {
        let phi = comodule.basis_coaction(a);
        let mut lhs = vec![Rational::zero(); m * n];
        for b in 0..m {
            for i in 0..n {
                let w = &phi[b * n + i];
                if !w.is_zero() {
                    add_outer(&mut lhs, w, &eps[b], &beta[i]);
                }
            }
        }
        let rhs = comodule.coact(&eps[a]);
        report.compare("comodule-twist-compatibility", &[a], lhs, rhs);
    }
    report
}

/// `(M*, ψ*, γ*)` over `(G*, μ*, α*)`: `e[a][b][i] = d[b][i][a]`, `ε = Γᵀ`.
pub fn dualize_module(module: &HomModule) -> HomComodule {
    let (n, m) = (module.algebra.dim(), module.mdim);
    let mut coaction = vec![Rational::zero(); m * m * n];
    for b in 0..m {
        for i in 0..n {
            for (a, d) in module.basis_action(b, i).iter().enumerate() {
                coaction[(a * m + b) * n + i] = d.clone();
            }
        }
    }
    HomComodule {
        coalgebra: dualize_algebra(&module.algebra),
        mdim: m,
        coaction,
        mtwist: module.mtwist.transpose(),
    }
}

/// The algebra acting on itself: `ψ = μ`, `γ = α`.
pub fn regular_module(algebra: &HomAlgebra) -> HomModule {
    HomModule {
        algebra: algebra.clone(),
        mdim: algebra.dim(),
        action: algebra.structure_constants().to_vec(),
        mtwist: algebra.twist().clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::rat;
    use crate::homalg::zoo;

    #[test]
    fn regular_module_passes() {
        for a in [zoo::dual_numbers(), zoo::truncated_poly(4, rat(2))] {
            assert!(verify_hom_module(&regular_module(&a)).passed());
        }
    }

    #[test]
    fn perturbed_action_fails() {
        let mut m = regular_module(&zoo::truncated_poly(3, rat(2)));
        m.set_structure_constant(1, 1, 2, rat(5));
        assert!(!verify_hom_module(&m).passed());
    }

    #[test]
    fn zero_module_passes() {
        let m = HomModule::new(
            zoo::dual_numbers(),
            3,
            vec![rat(0); 3 * 2 * 3],
            Matrix::zeros(3, 3),
        )
        .unwrap();
        assert!(verify_hom_module(&m).passed());
        let c = dualize_module(&m);
        assert!(c.structure_constants().iter().all(Zero::is_zero));
        assert!(verify_hom_comodule(&c).passed());
    }

    #[test]
    fn dual_of_regular_modules() {
        for a in [zoo::dual_numbers(), zoo::truncated_poly(4, rat(2))] {
            let c = dualize_module(&regular_module(&a));
            assert!(verify_hom_comodule(&c).passed());
        }
    }

    #[test]
    fn perturbed_coaction_fails() {
        let mut c = dualize_module(&regular_module(&zoo::truncated_poly(3, rat(2))));
        c.set_structure_constant(3, 1, 2, rat(7));
        assert!(!verify_hom_comodule(&c).passed());
    }
}
