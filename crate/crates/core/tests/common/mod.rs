#![allow(dead_code)]

//! Brute-force oracles shared by the integration tests. None of these call
//! the library's own expansion or recursion code.

use std::collections::BTreeMap;

use homdual::exact_math::{pow, rat, ratio};
use homdual::homalg::{HomAlgebra, HomCoalgebra};
use homdual::recseq::{BiPoly, BiSequence, CaseId};
use homdual::Rational;
use num_traits::{One, Zero};
use rand::Rng;

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

pub fn random_nonzero<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = random_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn binomial(n: usize, i: usize) -> Rational {
    let mut c = Rational::one();
    for t in 0..i {
        c = c * rat((n - t) as i64) / rat((t + 1) as i64);
    }
    c
}

/// `binom(n, i)_q` as the inversion generating function over 0/1 words with
/// `i` ones.
pub fn qbinom_by_inversions(n: usize, i: usize, q: &Rational) -> Rational {
    let mut total = Rational::zero();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != i {
            continue;
        }
        let mut inversions = 0;
        for a in 0..n {
            for b in a + 1..n {
                if mask >> a & 1 == 1 && mask >> b & 1 == 0 {
                    inversions += 1;
                }
            }
        }
        total += pow(q, inversions);
    }
    total
}

pub fn delannoy(m: usize, n: usize) -> Rational {
    (0..=m.min(n))
        .map(|t| binomial(m, t) * binomial(n, t) * pow(&rat(2), t as i64))
        .sum()
}

/// A linear combination of words in `x` (b'x') and `y` (b'y').
#[derive(Clone, Debug, Default)]
pub struct WordSum(pub Vec<(Rational, Vec<u8>)>);

impl WordSum {
    pub fn word(w: &[u8]) -> Self {
        WordSum(vec![(Rational::one(), w.to_vec())])
    }

    pub fn monomial(m: usize, n: usize) -> Self {
        let mut w = vec![b'x'; m];
        w.extend(std::iter::repeat_n(b'y', n));
        WordSum::word(&w)
    }

    pub fn bipoly(h: &BiPoly) -> Self {
        let mut out = WordSum::monomial(h.r(), h.s());
        for i in 0..=h.r() {
            for j in 0..=h.s() {
                if (i, j) != (0, 0) {
                    let c = h.h(i, j).clone();
                    let (_, w) = WordSum::monomial(h.r() - i, h.s() - j).0.remove(0);
                    out.0.push((-c, w));
                }
            }
        }
        out
    }

    /// `a·b = α(a)α(b)` with `α` scaling a word of length `ℓ` by `k^ℓ`.
    pub fn hom_mul(&self, other: &WordSum, k: &Rational) -> WordSum {
        let mut out = Vec::new();
        for (c, u) in &self.0 {
            for (d, v) in &other.0 {
                let mut uv = u.clone();
                uv.extend_from_slice(v);
                out.push((c * d * pow(k, (u.len() + v.len()) as i64), uv));
            }
        }
        WordSum(out)
    }

    /// Normal form using `yx = q xy`: each `y` standing left of an `x`
    /// contributes one factor `q`.
    pub fn normal_form(&self, q: &Rational) -> BTreeMap<(usize, usize), Rational> {
        let mut out: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (c, w) in &self.0 {
            let mut ys_seen = 0i64;
            let mut inversions = 0i64;
            for &l in w {
                match l {
                    b'y' => ys_seen += 1,
                    b'x' => inversions += ys_seen,
                    _ => panic!("letter {l}"),
                }
            }
            let xs = w.iter().filter(|&&l| l == b'x').count();
            let e = out.entry((xs, w.len() - xs)).or_insert_with(Rational::zero);
            *e += c * pow(q, inversions);
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn evaluate(&self, f: &BiSequence, q: &Rational) -> Rational {
        self.normal_form(q)
            .iter()
            .map(|(&(m, n), c)| c * f.get(m, n).expect("inside table"))
            .sum()
    }
}

/// The case condition at `(m, n)`, expanded and evaluated word by word.
pub fn oracle_residual(
    f: &BiSequence,
    h: &BiPoly,
    case: CaseId,
    m: usize,
    n: usize,
    q: &Rational,
    k: &Rational,
) -> Rational {
    let hw = WordSum::bipoly(h);
    let xs = WordSum::monomial(m - h.r(), 0);
    let ys = WordSum::monomial(0, n - h.s());
    let expr = match case {
        CaseId::One => xs.hom_mul(&hw, k).hom_mul(&ys, k),
        CaseId::Two => xs.hom_mul(&ys, k).hom_mul(&hw, k),
        CaseId::Three => hw.hom_mul(&xs, k).hom_mul(&ys, k),
    };
    expr.evaluate(f, q)
}

/// The stencil weight printed for each case at `k = 1`.
pub fn display_weight(h: &BiPoly, case: CaseId, q: &Rational, m: usize, n: usize, i: usize, j: usize) -> Rational {
    let factor = match case {
        CaseId::One => Rational::one(),
        CaseId::Two => pow(q, -((i * (n - h.s())) as i64)),
        CaseId::Three => pow(q, -((j * (m - h.r())) as i64)),
    };
    factor * h.h(i, j)
}

/// Both sides of `α(e_i)(e_j e_l) = (e_i e_j)α(e_l)` by raw index sums over
/// the structure constants.
pub fn hom_assoc_sides(a: &HomAlgebra, i: usize, j: usize, l: usize) -> (Vec<Rational>, Vec<Rational>) {
    let n = a.dim();
    let c = |x: usize, y: usize, z: usize| a.structure_constant(x, y, z).clone();
    let t = |row: usize, col: usize| a.twist()[(row, col)].clone();
    let mut lhs = vec![Rational::zero(); n];
    let mut rhs = vec![Rational::zero(); n];
    for p in 0..n {
        for b in 0..n {
            for (z, out) in lhs.iter_mut().enumerate() {
                *out += t(p, i) * c(j, l, b) * c(p, b, z);
            }
            for (z, out) in rhs.iter_mut().enumerate() {
                *out += c(i, j, p) * t(b, l) * c(p, b, z);
            }
        }
    }
    (lhs, rhs)
}

/// Both sides of `α(e_i e_j) = α(e_i)α(e_j)`.
pub fn multiplicativity_sides(a: &HomAlgebra, i: usize, j: usize) -> (Vec<Rational>, Vec<Rational>) {
    let n = a.dim();
    let c = |x: usize, y: usize, z: usize| a.structure_constant(x, y, z).clone();
    let t = |row: usize, col: usize| a.twist()[(row, col)].clone();
    let mut lhs = vec![Rational::zero(); n];
    let mut rhs = vec![Rational::zero(); n];
    for (z, out) in lhs.iter_mut().enumerate() {
        for p in 0..n {
            *out += t(z, p) * c(i, j, p);
        }
    }
    for p in 0..n {
        for b in 0..n {
            for (z, out) in rhs.iter_mut().enumerate() {
                *out += t(p, i) * t(b, j) * c(p, b, z);
            }
        }
    }
    (lhs, rhs)
}

pub fn oracle_is_hom_algebra(a: &HomAlgebra) -> bool {
    let n = a.dim();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let (l, r) = multiplicativity_sides(a, i, j);
            l == r && (0..n).all(|k| {
                let (l, r) = hom_assoc_sides(a, i, j, k);
                l == r
            })
        })
    })
}

/// `⟨f, u·v⟩` straight from the algebra's constants.
pub fn pair_product(a: &HomAlgebra, f: &[Rational], u: &[Rational], v: &[Rational]) -> Rational {
    let n = a.dim();
    let mut acc = Rational::zero();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                acc += &f[k] * &u[i] * &v[j] * a.structure_constant(i, j, k);
            }
        }
    }
    acc
}

/// `⟨Δ(f), u⊗v⟩` straight from the coalgebra's constants.
pub fn pair_coproduct(c: &HomCoalgebra, f: &[Rational], u: &[Rational], v: &[Rational]) -> Rational {
    let n = c.dim();
    let mut acc = Rational::zero();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                acc += &f[k] * &u[i] * &v[j] * c.structure_constant(k, i, j);
            }
        }
    }
    acc
}
