//! Sweedler duality computed on finite-codimensional quotients.
//!
//! An infinite-dimensional Hom-algebra `G` is handled through a quotient `G/J`
//! by a monomial ideal `J` that is two-sided for the twisted product and stable
//! under the twist. A functional `f` with `f(J) = 0` is a coordinate vector in
//! the dual basis of `G/J`, and its coproduct is read straight off the quotient
//! multiplication table: `Δ(f) = Σ_{i,j} f(ē_i·ē_j) ē_i* ⊗ ē_j*`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_math::{pow, Matrix, Rational};
use crate::homalg::{
    check_algebra_morphism, AxiomReport, HomAlgebra, HomCoalgebra, LinearMap,
};
use crate::qplane::{self, QParams, QPoly};

const LETTERS: &[u8] = b"xyzwabcdefghijklmnopqrstuv";

/// A monomial of one of the ambient algebras.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Monomial {
    /// `x^a` in `K[x]`.
    Power(usize),
    /// A word in the tensor algebra, letters given by index.
    Word(Vec<usize>),
    /// `x^a y^b` in the quantum plane.
    Plane(usize, usize),
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monomial::Power(a) => write!(f, "{}", qplane::monomial_string(*a, 0)),
            Monomial::Plane(a, b) => write!(f, "{}", qplane::monomial_string(*a, *b)),
            Monomial::Word(w) if w.is_empty() => write!(f, "1"),
            Monomial::Word(w) => {
                for &l in w {
                    write!(f, "{}", LETTERS[l] as char)?;
                }
                Ok(())
            }
        }
    }
}

/// Which ambient algebra and ideal a quotient comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum QuotientFamily {
    /// `K[x]/(x^{N+1})` with twist `x^i ↦ k^i x^i`.
    Poly { degree: usize, k: Rational },
    /// Tensor algebra on `alphabet` letters modulo words longer than `length`.
    Tensor {
        alphabet: usize,
        length: usize,
        twists: Vec<Rational>,
    },
    /// Quantum plane modulo `(x^{R+1}, y^{S+1})`.
    QPlane {
        r: usize,
        s: usize,
        q: Rational,
        k: Rational,
    },
}

/// A finite-dimensional quotient `G/J` with its basis labels, multiplication
/// table (twist factors included) and twist.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    family: QuotientFamily,
    labels: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    algebra: HomAlgebra,
}

impl PartialEq for QuotientPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family
    }
}

impl QuotientPresentation {
    fn build(
        family: QuotientFamily,
        labels: Vec<Monomial>,
        twist_weight: impl Fn(&Monomial) -> Rational,
        product: impl Fn(&Monomial, &Monomial) -> Option<(Rational, Monomial)>,
    ) -> Self {
        let n = labels.len();
        let index: HashMap<Monomial, usize> = labels
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let weights: Vec<Rational> = labels.iter().map(&twist_weight).collect();
        let algebra = HomAlgebra::from_products(n, Matrix::diagonal(&weights), |i, j| {
            let mut v = vec![Rational::zero(); n];
            if let Some((c, m)) = product(&labels[i], &labels[j]) {
                if let Some(&t) = index.get(&m) {
                    v[t] = c;
                }
            }
            v
        })
        .expect("square table");
        QuotientPresentation {
            family,
            labels,
            index,
            algebra,
        }
    }

    pub fn family(&self) -> &QuotientFamily {
        &self.family
    }

    pub fn labels(&self) -> &[Monomial] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// The quotient as a finite Hom-algebra `(G/J, qmul, qtwist)`.
    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Image of an ambient monomial in `G/J`: a unit vector, or zero when the
    /// monomial lies in `J`.
    pub fn project(&self, m: &Monomial) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        if let Some(i) = self.index_of(m) {
            v[i] = Rational::one();
        }
        v
    }

    /// The twisted product of two ambient monomials, computed in the ambient
    /// algebra (no truncation).
    pub fn ambient_product(&self, u: &Monomial, v: &Monomial) -> Result<(Rational, Monomial)> {
        match (&self.family, u, v) {
            (QuotientFamily::Poly { k, .. }, Monomial::Power(a), Monomial::Power(b)) => {
                Ok((pow(k, (a + b) as i64), Monomial::Power(a + b)))
            }
            (QuotientFamily::Tensor { twists, .. }, Monomial::Word(x), Monomial::Word(y)) => {
                let w = word_weight(twists, x) * word_weight(twists, y);
                let mut xy = x.clone();
                xy.extend_from_slice(y);
                Ok((w, Monomial::Word(xy)))
            }
            (QuotientFamily::QPlane { q, k, .. }, Monomial::Plane(a, b), Monomial::Plane(c, d)) => {
                let params = QParams::new(q.clone(), k.clone())?;
                let lhs = QPoly::monomial(params.clone(), *a, *b, Rational::one());
                let rhs = QPoly::monomial(params, *c, *d, Rational::one());
                let prod = qplane::hom_product(&lhs, &rhs)?;
                let ((m, n), coeff) = prod
                    .terms()
                    .iter()
                    .next()
                    .map(|(e, c)| (*e, c.clone()))
                    .expect("product of monomials is a single term");
                Ok((coeff, Monomial::Plane(m, n)))
            }
            _ => Err(Error::Input(format!(
                "monomials {u} and {v} do not belong to this quotient family"
            ))),
        }
    }

    /// Ambient twist of a monomial: `α(m) = weight·m`.
    pub fn ambient_twist(&self, m: &Monomial) -> Result<Rational> {
        match (&self.family, m) {
            (QuotientFamily::Poly { k, .. }, Monomial::Power(a)) => Ok(pow(k, *a as i64)),
            (QuotientFamily::Tensor { twists, .. }, Monomial::Word(w)) => {
                Ok(word_weight(twists, w))
            }
            (QuotientFamily::QPlane { k, .. }, Monomial::Plane(a, b)) => {
                Ok(pow(k, (a + b) as i64))
            }
            _ => Err(Error::Input(format!(
                "monomial {m} does not belong to this quotient family"
            ))),
        }
    }

    /// All ambient monomials of degree at most `bound` in each grading
    /// direction (including those in `J`).
    pub fn ambient_monomials(&self, bound: usize) -> Vec<Monomial> {
        match &self.family {
            QuotientFamily::Poly { .. } => (0..=bound).map(Monomial::Power).collect(),
            QuotientFamily::Tensor { alphabet, .. } => all_words(*alphabet, bound),
            QuotientFamily::QPlane { .. } => (0..=bound)
                .flat_map(|a| (0..=bound).map(move |b| Monomial::Plane(a, b)))
                .collect(),
        }
    }

    /// Checks that `J` is a two-sided ideal stable under the twist, on every
    /// pair of ambient monomials up to `bound`: `π(u·v) = π(u)·π(v)` and
    /// `π(α(u)) = α(π(u))`.
    pub fn check_ideal_stability(&self, bound: usize) -> Result<AxiomReport> {
        let monomials = self.ambient_monomials(bound);
        let mut report = AxiomReport::default();
        for (i, u) in monomials.iter().enumerate() {
            let pu = self.project(u);
            for (j, v) in monomials.iter().enumerate() {
                let (c, uv) = self.ambient_product(u, v)?;
                let lhs: Vec<Rational> = self.project(&uv).into_iter().map(|x| x * &c).collect();
                let rhs = self.algebra.product(&pu, &self.project(v));
                report.compare("ideal-product", &[i, j], lhs, rhs);
            }
            let w = self.ambient_twist(u)?;
            let lhs: Vec<Rational> = pu.iter().map(|x| x * &w).collect();
            let rhs = self.algebra.apply_twist(&pu);
            report.compare("ideal-twist", &[i], lhs, rhs);
        }
        Ok(report)
    }
}

fn word_weight(twists: &[Rational], w: &[usize]) -> Rational {
    w.iter().map(|&l| twists[l].clone()).product()
}

/// Words of length at most `max_len`, ordered by length then lexicographically.
fn all_words(alphabet: usize, max_len: usize) -> Vec<Monomial> {
    let mut out = vec![Monomial::Word(Vec::new())];
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet);
        for w in &layer {
            for l in 0..alphabet {
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(Monomial::Word));
        layer = next;
    }
    out
}

fn nonzero(name: &str, v: &Rational) -> Result<()> {
    if v.is_zero() {
        Err(Error::Input(format!("{name} must be nonzero")))
    } else {
        Ok(())
    }
}

/// `K[x]/(x^{N+1})` with `x^a·x^b = k^{a+b} x^{a+b}` and `α(x^a) = k^a x^a`.
pub fn make_poly_quotient(degree: usize, k: Rational) -> Result<QuotientPresentation> {
    nonzero("k", &k)?;
    let labels = (0..=degree).map(Monomial::Power).collect();
    let kk = k.clone();
    Ok(QuotientPresentation::build(
        QuotientFamily::Poly { degree, k },
        labels,
        |m| match m {
            Monomial::Power(a) => pow(&kk, *a as i64),
            _ => unreachable!(),
        },
        |u, v| match (u, v) {
            (Monomial::Power(a), Monomial::Power(b)) => {
                Some((pow(&kk, (a + b) as i64), Monomial::Power(a + b)))
            }
            _ => None,
        },
    ))
}

/// Truncated tensor algebra on `alphabet` letters with per-letter twists and
/// product `u·v = α(u)α(v)` (concatenation), zero past length `length`.
pub fn make_tensor_quotient(
    alphabet: usize,
    length: usize,
    twists: Vec<Rational>,
) -> Result<QuotientPresentation> {
    if alphabet == 0 || alphabet > LETTERS.len() {
        return Err(Error::Input(format!(
            "alphabet size must be in 1..={}",
            LETTERS.len()
        )));
    }
    if twists.len() != alphabet {
        return Err(Error::Input(format!(
            "expected {alphabet} letter twists, got {}",
            twists.len()
        )));
    }
    for t in &twists {
        nonzero("letter twist", t)?;
    }
    let labels = all_words(alphabet, length);
    let tw = twists.clone();
    Ok(QuotientPresentation::build(
        QuotientFamily::Tensor {
            alphabet,
            length,
            twists,
        },
        labels,
        |m| match m {
            Monomial::Word(w) => word_weight(&tw, w),
            _ => unreachable!(),
        },
        |u, v| match (u, v) {
            (Monomial::Word(x), Monomial::Word(y)) => {
                let mut xy = x.clone();
                xy.extend_from_slice(y);
                Some((word_weight(&tw, x) * word_weight(&tw, y), Monomial::Word(xy)))
            }
            _ => None,
        },
    ))
}

/// Quantum plane `yx = qxy` with twist `α(x^i y^j) = k^{i+j} x^i y^j`, modulo
/// `(x^{R+1}, y^{S+1})`.
pub fn make_qplane_quotient(
    r: usize,
    s: usize,
    q: Rational,
    k: Rational,
) -> Result<QuotientPresentation> {
    nonzero("q", &q)?;
    nonzero("k", &k)?;
    let labels = (0..=r)
        .flat_map(|a| (0..=s).map(move |b| Monomial::Plane(a, b)))
        .collect();
    let (qq, kk) = (q.clone(), k.clone());
    Ok(QuotientPresentation::build(
        QuotientFamily::QPlane { r, s, q, k },
        labels,
        |m| match m {
            Monomial::Plane(a, b) => pow(&kk, (a + b) as i64),
            _ => unreachable!(),
        },
        |u, v| match (u, v) {
            (Monomial::Plane(a, b), Monomial::Plane(c, d)) => Some((
                pow(&kk, (a + b + c + d) as i64) * pow(&qq, (b * c) as i64),
                Monomial::Plane(a + c, b + d),
            )),
            _ => None,
        },
    ))
}

/// A functional on `G` vanishing on `J`, in the dual basis of the quotient
/// labels.
#[derive(Clone, Debug, PartialEq)]
pub struct SweedlerFunctional {
    family: QuotientFamily,
    coeffs: Vec<Rational>,
}

impl SweedlerFunctional {
    pub fn new(q: &QuotientPresentation, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != q.dim() {
            return Err(Error::Shape(format!(
                "functional has {} coefficients, quotient has dimension {}",
                coeffs.len(),
                q.dim()
            )));
        }
        Ok(SweedlerFunctional {
            family: q.family.clone(),
            coeffs,
        })
    }

    /// The dual basis functional `ē_i*`.
    pub fn basis(q: &QuotientPresentation, i: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); q.dim()];
        coeffs[i] = Rational::one();
        SweedlerFunctional {
            family: q.family.clone(),
            coeffs,
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn family(&self) -> &QuotientFamily {
        &self.family
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `f(m)` for an ambient monomial; zero whenever `m ∈ J`.
    pub fn evaluate(&self, q: &QuotientPresentation, m: &Monomial) -> Result<Rational> {
        expect_family(q, &self.family)?;
        Ok(q.index_of(m)
            .map_or_else(Rational::zero, |i| self.coeffs[i].clone()))
    }

    pub fn evaluate_vector(&self, v: &[Rational]) -> Rational {
        self.coeffs.iter().zip(v).map(|(a, b)| a * b).sum()
    }
}

/// An element of `G° ⊗ G°` over one quotient, as sparse coefficients on pairs
/// of dual basis functionals. No zero coefficients are stored.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorFunctional {
    family: QuotientFamily,
    terms: BTreeMap<(usize, usize), Rational>,
}

impl TensorFunctional {
    fn from_dense(family: QuotientFamily, n: usize, dense: Vec<Rational>) -> Self {
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| ((idx / n, idx % n), c))
            .collect();
        TensorFunctional { family, terms }
    }

    /// `(coefficient, left index, right index)` in index order.
    pub fn terms(&self) -> Vec<(Rational, usize, usize)> {
        self.terms
            .iter()
            .map(|(&(i, j), c)| (c.clone(), i, j))
            .collect()
    }

    pub fn coefficient(&self, i: usize, j: usize) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn to_dense(&self, n: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); n * n];
        for (&(i, j), c) in &self.terms {
            out[i * n + j] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

fn expect_family(q: &QuotientPresentation, family: &QuotientFamily) -> Result<()> {
    if &q.family != family {
        return Err(Error::ParamMismatch(
            "functional belongs to a different quotient".into(),
        ));
    }
    Ok(())
}

/// `Δ(f) = f∘μ = Σ_{i,j} k_{ij} ē_i* ⊗ ē_j*` with `k_{ij} = f(ē_i·ē_j)`.
pub fn sweedler_delta(q: &QuotientPresentation, f: &SweedlerFunctional) -> Result<TensorFunctional> {
    expect_family(q, &f.family)?;
    let n = q.dim();
    let alg = q.algebra();
    let mut dense = vec![Rational::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            dense[i * n + j] = f.evaluate_vector(alg.basis_product(i, j));
        }
    }
    Ok(TensorFunctional::from_dense(q.family.clone(), n, dense))
}

/// `α°(f) = f∘α`.
pub fn sweedler_twist(q: &QuotientPresentation, f: &SweedlerFunctional) -> Result<SweedlerFunctional> {
    expect_family(q, &f.family)?;
    Ok(SweedlerFunctional {
        family: q.family.clone(),
        coeffs: q.algebra().twist().transpose().apply(&f.coeffs),
    })
}

/// The finite Hom-coalgebra `((G/J)*, Δ, α°)` with `Δ` taken from
/// [`sweedler_delta`] on each dual basis functional.
pub fn quotient_dual_coalgebra(q: &QuotientPresentation) -> HomCoalgebra {
    let n = q.dim();
    let mut comul = Vec::with_capacity(n * n * n);
    for k in 0..n {
        let delta = sweedler_delta(q, &SweedlerFunctional::basis(q, k)).expect("same quotient");
        comul.extend(delta.to_dense(n));
    }
    HomCoalgebra::new(n, comul, q.algebra().twist().transpose()).expect("shape")
}

fn morphism_between(
    src: &QuotientPresentation,
    tgt: &QuotientPresentation,
    induced: &Matrix,
) -> Result<LinearMap> {
    let map = LinearMap::new(induced.clone());
    let report = check_algebra_morphism(src.algebra(), tgt.algebra(), &map)?;
    if !report.passed() {
        return Err(Error::NotMorphism {
            context: "induced quotient map".into(),
            report,
        });
    }
    Ok(map)
}

/// `f° (φ) = φ∘F` for the quotient-level morphism `F: src → tgt`.
pub fn pullback_functional(
    src: &QuotientPresentation,
    tgt: &QuotientPresentation,
    induced: &Matrix,
    f: &SweedlerFunctional,
) -> Result<SweedlerFunctional> {
    expect_family(tgt, &f.family)?;
    let map = morphism_between(src, tgt, induced)?;
    Ok(SweedlerFunctional {
        family: src.family.clone(),
        coeffs: map.matrix().transpose().apply(&f.coeffs),
    })
}

/// Checks `Δ_src∘F° = (F°⊗F°)∘Δ_tgt` and `α°_src∘F° = F°∘α°_tgt` on every
/// dual basis functional of the target.
pub fn check_pullback_naturality(
    src: &QuotientPresentation,
    tgt: &QuotientPresentation,
    induced: &Matrix,
) -> Result<AxiomReport> {
    let map = morphism_between(src, tgt, induced)?;
    let ft = map.matrix().transpose();
    let (ns, nt) = (src.dim(), tgt.dim());
    let mut report = AxiomReport::default();
    for k in 0..nt {
        let phi = SweedlerFunctional::basis(tgt, k);
        let pulled = pullback_functional(src, tgt, induced, &phi)?;

        let lhs = sweedler_delta(src, &pulled)?.to_dense(ns);
        let delta_t = sweedler_delta(tgt, &phi)?;
        let mut rhs = vec![Rational::zero(); ns * ns];
        for (c, i, j) in delta_t.terms() {
            crate::homalg::add_outer(&mut rhs, &c, &ft.column(i), &ft.column(j));
        }
        report.compare("pullback-coproduct", &[k], lhs, rhs);

        let lhs = sweedler_twist(src, &pulled)?.coeffs;
        let rhs = pullback_functional(src, tgt, induced, &sweedler_twist(tgt, &phi)?)?.coeffs;
        report.compare("pullback-twist", &[k], lhs, rhs);
    }
    Ok(report)
}

/// The quotient by a monomial ideal contained in both `J₁` and `J₂`
/// (componentwise largest truncation bounds). Parameters other than the
/// bounds must agree.
pub fn common_refinement(
    a: &QuotientPresentation,
    b: &QuotientPresentation,
) -> Result<QuotientPresentation> {
    use QuotientFamily::*;
    match (&a.family, &b.family) {
        (Poly { degree: d1, k: k1 }, Poly { degree: d2, k: k2 }) if k1 == k2 => {
            make_poly_quotient(*d1.max(d2), k1.clone())
        }
        (
            Tensor {
                alphabet: a1,
                length: l1,
                twists: t1,
            },
            Tensor {
                alphabet: a2,
                length: l2,
                twists: t2,
            },
        ) if a1 == a2 && t1 == t2 => make_tensor_quotient(*a1, *l1.max(l2), t1.clone()),
        (
            QPlane {
                r: r1,
                s: s1,
                q: q1,
                k: k1,
            },
            QPlane {
                r: r2,
                s: s2,
                q: q2,
                k: k2,
            },
        ) if q1 == q2 && k1 == k2 => {
            make_qplane_quotient(*r1.max(r2), *s1.max(s2), q1.clone(), k1.clone())
        }
        _ => Err(Error::ParamMismatch(
            "quotients come from different ambient algebras".into(),
        )),
    }
}

/// Re-expresses `f` (vanishing on the ideal of `from`) over the finer quotient
/// `to`.
pub fn lift_functional(
    f: &SweedlerFunctional,
    from: &QuotientPresentation,
    to: &QuotientPresentation,
) -> Result<SweedlerFunctional> {
    expect_family(from, &f.family)?;
    let mut coeffs = vec![Rational::zero(); to.dim()];
    for (label, c) in from.labels.iter().zip(&f.coeffs) {
        match to.index_of(label) {
            Some(i) => coeffs[i] = c.clone(),
            None if c.is_zero() => {}
            None => {
                return Err(Error::Input(format!(
                    "target quotient kills {label}, on which the functional is nonzero"
                )))
            }
        }
    }
    SweedlerFunctional::new(to, coeffs)
}

/// `f + g` for functionals over two quotients of the same algebra, returned
/// over their common refinement.
pub fn add_functionals(
    qf: &QuotientPresentation,
    f: &SweedlerFunctional,
    qg: &QuotientPresentation,
    g: &SweedlerFunctional,
) -> Result<(QuotientPresentation, SweedlerFunctional)> {
    let q = common_refinement(qf, qg)?;
    let lf = lift_functional(f, qf, &q)?;
    let lg = lift_functional(g, qg, &q)?;
    let coeffs = lf.coeffs.iter().zip(&lg.coeffs).map(|(a, b)| a + b).collect();
    let sum = SweedlerFunctional::new(&q, coeffs)?;
    Ok((q, sum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::{rat, ratio};
    use crate::homalg::{verify_hom_algebra, verify_hom_coalgebra};

    fn delta_terms(q: &QuotientPresentation, label: &Monomial) -> Vec<(Rational, String, String)> {
        let f = SweedlerFunctional::basis(q, q.index_of(label).unwrap());
        sweedler_delta(q, &f)
            .unwrap()
            .terms()
            .into_iter()
            .map(|(c, i, j)| (c, q.labels()[i].to_string(), q.labels()[j].to_string()))
            .collect()
    }

    #[test]
    fn poly_quotient_examples() {
        let q = make_poly_quotient(2, rat(1)).unwrap();
        assert!(verify_hom_algebra(q.algebra()).passed());
        let q = make_poly_quotient(3, rat(2)).unwrap();
        assert_eq!(q.algebra().basis_product(1, 2), &[rat(0), rat(0), rat(0), rat(8)]);
        assert!(verify_hom_algebra(q.algebra()).passed());
        let q = make_poly_quotient(0, ratio(7, 3)).unwrap();
        assert_eq!(q.algebra().basis_product(0, 0), &[rat(1)]);
        assert!(make_poly_quotient(3, rat(0)).is_err());
    }

    #[test]
    fn tensor_quotient_examples() {
        let q = make_tensor_quotient(2, 2, vec![rat(1), rat(1)]).unwrap();
        let x = Monomial::Word(vec![0]);
        let y = Monomial::Word(vec![1]);
        let xy = Monomial::Word(vec![0, 1]);
        let prod = q
            .algebra()
            .product(&q.project(&x), &q.project(&y));
        assert_eq!(prod, q.project(&xy));
        let prod = q.algebra().product(&q.project(&xy), &q.project(&x));
        assert!(prod.iter().all(Zero::is_zero));

        let q = make_tensor_quotient(2, 2, vec![rat(2), rat(3)]).unwrap();
        let prod = q.algebra().product(&q.project(&x), &q.project(&y));
        let i = q.index_of(&xy).unwrap();
        assert_eq!(prod[i], rat(6));
        assert!(verify_hom_algebra(q.algebra()).passed());
        assert!(make_tensor_quotient(2, 2, vec![rat(1), rat(0)]).is_err());
    }

    #[test]
    fn one_letter_tensor_matches_poly() {
        let t = make_tensor_quotient(1, 4, vec![rat(3)]).unwrap();
        let p = make_poly_quotient(4, rat(3)).unwrap();
        assert_eq!(t.algebra(), p.algebra());
    }

    #[test]
    fn qplane_quotient_examples() {
        let y = Monomial::Plane(0, 1);
        let x = Monomial::Plane(1, 0);
        let xy = Monomial::Plane(1, 1);
        for (r, q, k, expected) in [
            (1, rat(1), rat(1), rat(1)),
            (2, rat(2), rat(1), rat(2)),
            (2, rat(2), rat(3), rat(18)),
        ] {
            let qq = make_qplane_quotient(r, r, q, k).unwrap();
            let prod = qq.algebra().product(&qq.project(&y), &qq.project(&x));
            assert_eq!(prod[qq.index_of(&xy).unwrap()], expected);
            assert!(verify_hom_algebra(qq.algebra()).passed());
        }
    }

    #[test]
    fn ideal_stability_holds() {
        let qs = [
            make_poly_quotient(4, ratio(-2, 3)).unwrap(),
            make_tensor_quotient(2, 2, vec![rat(2), rat(-1)]).unwrap(),
            make_qplane_quotient(2, 1, ratio(5, 3), rat(2)).unwrap(),
        ];
        for q in &qs {
            let report = q.check_ideal_stability(4).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn delta_examples() {
        let q = make_poly_quotient(3, rat(1)).unwrap();
        let terms = delta_terms(&q, &Monomial::Power(2));
        assert_eq!(
            terms,
            vec![
                (rat(1), "1".into(), "x^2".into()),
                (rat(1), "x".into(), "x".into()),
                (rat(1), "x^2".into(), "1".into()),
            ]
        );
        let q = make_poly_quotient(3, rat(2)).unwrap();
        let terms = delta_terms(&q, &Monomial::Power(2));
        assert!(terms.iter().all(|(c, _, _)| *c == rat(4)));
        assert_eq!(terms.len(), 3);

        let q = make_tensor_quotient(2, 2, vec![rat(1), rat(1)]).unwrap();
        let terms = delta_terms(&q, &Monomial::Word(vec![0, 1]));
        assert_eq!(
            terms,
            vec![
                (rat(1), "1".into(), "xy".into()),
                (rat(1), "x".into(), "y".into()),
                (rat(1), "xy".into(), "1".into()),
            ]
        );
    }

    #[test]
    fn twist_examples() {
        let q = make_poly_quotient(3, rat(1)).unwrap();
        let f = SweedlerFunctional::new(&q, vec![rat(1), rat(2), rat(3), rat(4)]).unwrap();
        assert_eq!(sweedler_twist(&q, &f).unwrap(), f);

        let q = make_poly_quotient(3, rat(2)).unwrap();
        let f = SweedlerFunctional::basis(&q, 2);
        assert_eq!(sweedler_twist(&q, &f).unwrap().coeffs(), &[rat(0), rat(0), rat(4), rat(0)]);

        let q = make_tensor_quotient(2, 2, vec![rat(2), rat(3)]).unwrap();
        let i = q.index_of(&Monomial::Word(vec![0, 1])).unwrap();
        let out = sweedler_twist(&q, &SweedlerFunctional::basis(&q, i)).unwrap();
        assert_eq!(out.coeffs()[i], rat(6));
        assert_eq!(out.coeffs().iter().filter(|c| !c.is_zero()).count(), 1);
    }

    #[test]
    fn mismatched_quotient_is_error() {
        let q1 = make_poly_quotient(3, rat(1)).unwrap();
        let q2 = make_poly_quotient(3, rat(2)).unwrap();
        let f = SweedlerFunctional::basis(&q1, 0);
        assert!(matches!(sweedler_delta(&q2, &f), Err(Error::ParamMismatch(_))));
        assert!(sweedler_twist(&q2, &f).is_err());
    }

    #[test]
    fn dual_coalgebras_verify() {
        for q in [
            make_poly_quotient(5, rat(1)).unwrap(),
            make_poly_quotient(5, rat(3)).unwrap(),
            make_qplane_quotient(2, 2, rat(2), rat(1)).unwrap(),
        ] {
            assert!(verify_hom_coalgebra(&quotient_dual_coalgebra(&q)).passed());
        }
    }

    fn square_map(n: usize) -> Matrix {
        Matrix::from_fn(n + 1, n + 1, |row, col| if row == 2 * col { rat(1) } else { rat(0) })
    }

    #[test]
    fn pullback_examples() {
        let q = make_poly_quotient(6, rat(1)).unwrap();
        let f = SweedlerFunctional::basis(&q, 4);
        assert_eq!(pullback_functional(&q, &q, &Matrix::identity(7), &f).unwrap(), f);
        let pulled = pullback_functional(&q, &q, &square_map(6), &f).unwrap();
        assert_eq!(pulled, SweedlerFunctional::basis(&q, 2));
        let pulled = pullback_functional(&q, &q, &square_map(6), &SweedlerFunctional::basis(&q, 3))
            .unwrap();
        assert!(pulled.is_zero());
    }

    #[test]
    fn pullback_rejects_non_morphism() {
        let q = make_poly_quotient(3, rat(1)).unwrap();
        let err = pullback_functional(
            &q,
            &q,
            &Matrix::identity(4).scale(&rat(2)),
            &SweedlerFunctional::basis(&q, 1),
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotMorphism { .. }));
    }

    #[test]
    fn addition_over_refinement() {
        let q1 = make_poly_quotient(2, rat(2)).unwrap();
        let q2 = make_poly_quotient(4, rat(2)).unwrap();
        let f = SweedlerFunctional::basis(&q1, 2);
        let g = SweedlerFunctional::basis(&q2, 4);
        let (q, sum) = add_functionals(&q1, &f, &q2, &g).unwrap();
        assert_eq!(q.dim(), 5);
        for m in 0..8 {
            let mono = Monomial::Power(m);
            let expected = f.evaluate(&q1, &mono).unwrap() + g.evaluate(&q2, &mono).unwrap();
            assert_eq!(sum.evaluate(&q, &mono).unwrap(), expected);
        }
        let other = make_poly_quotient(2, rat(3)).unwrap();
        assert!(common_refinement(&q1, &other).is_err());
    }
}
