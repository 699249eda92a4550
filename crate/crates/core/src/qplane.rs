//! The k-twisted quantum plane `K_q[x, y]`, `yx = qxy`, with twist
//! `α(x^i y^j) = k^{i+j} x^i y^j` and Hom-product `p·r = α(p)α(r)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_math::{pow, Rational};
use crate::recseq::BiSequence;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QParams {
    q: Rational,
    k: Rational,
}

impl QParams {
    pub fn new(q: Rational, k: Rational) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::Input("q must be nonzero".into()));
        }
        if k.is_zero() {
            return Err(Error::Input("k must be nonzero".into()));
        }
        Ok(QParams { q, k })
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn k(&self) -> &Rational {
        &self.k
    }
}

/// An element of the quantum plane in normal form `Σ c_{m,n} x^m y^n`.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    params: QParams,
    terms: BTreeMap<(usize, usize), Rational>,
}

impl QPoly {
    pub fn zero(params: QParams) -> Self {
        QPoly {
            params,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(params: QParams) -> Self {
        QPoly::monomial(params, 0, 0, Rational::one())
    }

    pub fn monomial(params: QParams, m: usize, n: usize, coeff: Rational) -> Self {
        let mut p = QPoly::zero(params);
        p.add_term(m, n, coeff);
        p
    }

    pub fn x(params: QParams) -> Self {
        QPoly::monomial(params, 1, 0, Rational::one())
    }

    pub fn y(params: QParams) -> Self {
        QPoly::monomial(params, 0, 1, Rational::one())
    }

    pub fn from_terms(
        params: QParams,
        terms: impl IntoIterator<Item = ((usize, usize), Rational)>,
    ) -> Self {
        let mut p = QPoly::zero(params);
        for ((m, n), c) in terms {
            p.add_term(m, n, c);
        }
        p
    }

    pub fn params(&self) -> &QParams {
        &self.params
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), Rational> {
        &self.terms
    }

    pub fn coefficient(&self, m: usize, n: usize) -> Rational {
        self.terms.get(&(m, n)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: usize, n: usize, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((m, n)).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(m, n));
        }
    }

    pub fn add(&self, other: &QPoly) -> Result<QPoly> {
        same_params(self, other)?;
        let mut out = self.clone();
        for (&(m, n), c) in &other.terms {
            out.add_term(m, n, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> QPoly {
        QPoly::from_terms(
            self.params.clone(),
            self.terms.iter().map(|(&e, v)| (e, v * c)),
        )
    }

    pub fn max_exponents(&self) -> (usize, usize) {
        self.terms.keys().fold((0, 0), |(a, b), &(m, n)| (a.max(m), b.max(n)))
    }
}

fn same_params(a: &QPoly, b: &QPoly) -> Result<()> {
    if a.params != b.params {
        return Err(Error::ParamMismatch(format!(
            "quantum-plane elements with (q, k) = ({}, {}) and ({}, {})",
            a.params.q, a.params.k, b.params.q, b.params.k
        )));
    }
    Ok(())
}

/// `x^m y^n` written the way reports print it: `1`, `x`, `x^2*y`, ...
pub fn monomial_string(m: usize, n: usize) -> String {
    let part = |var: &str, e: usize| match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    };
    let parts: Vec<String> = [part("x", m), part("y", n)].into_iter().flatten().collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for QPoly {
    /// Terms by descending total degree, then descending power of `x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&(usize, usize)> = self.terms.keys().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
        for (idx, &&(m, n)) in keys.iter().enumerate() {
            let c = &self.terms[&(m, n)];
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = monomial_string(m, n);
            if m + n == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    X,
    Y,
}

pub fn parse_word(word: &str) -> Result<Vec<Letter>> {
    word.chars()
        .filter(|c| !c.is_whitespace() && *c != '*')
        .map(|c| match c {
            'x' => Ok(Letter::X),
            'y' => Ok(Letter::Y),
            other => Err(Error::Input(format!("word letter {other:?} is not x or y"))),
        })
        .collect()
}

/// Rewrites a word to `q^{inv} x^{#x} y^{#y}`, where `inv` counts the pairs
/// with a `y` before an `x`.
pub fn normal_order(word: &[Letter], params: &QParams) -> QPoly {
    let mut ys_seen = 0usize;
    let mut inversions = 0usize;
    let mut xs = 0usize;
    for l in word {
        match l {
            Letter::X => {
                xs += 1;
                inversions += ys_seen;
            }
            Letter::Y => ys_seen += 1,
        }
    }
    QPoly::monomial(
        params.clone(),
        xs,
        ys_seen,
        pow(&params.q, inversions as i64),
    )
}

/// The undeformed quantum-plane product:
/// `(x^a y^b)(x^c y^d) = q^{bc} x^{a+c} y^{b+d}`.
pub fn classical_product(p1: &QPoly, p2: &QPoly) -> Result<QPoly> {
    same_params(p1, p2)?;
    let q = &p1.params.q;
    let mut out = QPoly::zero(p1.params.clone());
    for (&(a, b), c1) in &p1.terms {
        for (&(c, d), c2) in &p2.terms {
            out.add_term(a + c, b + d, c1 * c2 * pow(q, (b * c) as i64));
        }
    }
    Ok(out)
}

/// `α(p)`: each term `x^m y^n` scaled by `k^{m+n}`.
pub fn twist(p: &QPoly) -> QPoly {
    let k = &p.params.k;
    QPoly::from_terms(
        p.params.clone(),
        p.terms
            .iter()
            .map(|(&(m, n), c)| ((m, n), c * pow(k, (m + n) as i64))),
    )
}

/// `p₁·p₂ = α(p₁)α(p₂)`.
pub fn hom_product(p1: &QPoly, p2: &QPoly) -> Result<QPoly> {
    classical_product(&twist(p1), &twist(p2))
}

/// Left-nested Hom-power: `p^0 = 1`, `p^1 = p`, `p^n = p^{n-1}·p`.
pub fn hom_power_left(p: &QPoly, n: usize) -> QPoly {
    match n {
        0 => QPoly::one(p.params.clone()),
        _ => (1..n).fold(p.clone(), |acc, _| {
            hom_product(&acc, p).expect("same parameters")
        }),
    }
}

/// `(n)_q = 1 + q + ... + q^{n-1}`.
pub fn q_integer(n: usize, q: &Rational) -> Rational {
    (0..n).map(|i| pow(q, i as i64)).sum()
}

/// `(n)!_q = (1)_q (2)_q ... (n)_q`.
pub fn q_factorial(n: usize, q: &Rational) -> Rational {
    (1..=n).map(|i| q_integer(i, q)).product()
}

/// Gaussian binomial `binom(n, i)_q` by the q-Pascal rule
/// `binom(n, i) = binom(n-1, i-1) + q^i binom(n-1, i)`. Defined for every
/// nonzero `q`, roots of unity included.
pub fn qbinom(n: usize, i: usize, q: &Rational) -> Result<Rational> {
    if i > n {
        return Err(Error::Input(format!("binom({n}, {i}) needs i <= n")));
    }
    if q.is_zero() {
        return Err(Error::Input("q must be nonzero".into()));
    }
    let mut row = vec![Rational::one()];
    for m in 1..=n {
        let mut next = vec![Rational::one(); m + 1];
        for j in 1..m {
            next[j] = &row[j - 1] + pow(q, j as i64) * &row[j];
        }
        row = next;
    }
    Ok(row.swap_remove(i))
}

/// The closed form `Σ_i binom(n, i)_q k^{(n-1)(n+2)/2} x^i y^{n-i}`, taken
/// literally (so `n = 0` carries the factor `k^{-1}`).
pub fn quantum_binomial_expand(n: usize, params: &QParams) -> QPoly {
    let n_i = n as i64;
    let kfac = pow(&params.k, (n_i - 1) * (n_i + 2) / 2);
    let mut out = QPoly::zero(params.clone());
    for i in 0..=n {
        let b = qbinom(n, i, &params.q).expect("i <= n and q nonzero");
        out.add_term(i, n - i, b * &kfac);
    }
    out
}

/// `f(p) = Σ c_{m,n} f_{m,n}` for a functional given by its table of values on
/// normal monomials.
pub fn eval_functional(table: &BiSequence, p: &QPoly) -> Result<Rational> {
    let mut acc = Rational::zero();
    for (&(m, n), c) in &p.terms {
        let v = table.get(m, n).ok_or_else(|| {
            Error::OutOfRange(format!(
                "x^{m} y^{n} lies outside the table (M = {}, N = {})",
                table.m_max(),
                table.n_max()
            ))
        })?;
        acc += c * v;
    }
    Ok(acc)
}

/// `f` on a word in `x, y`, after normal ordering.
pub fn eval_word(table: &BiSequence, word: &[Letter], params: &QParams) -> Result<Rational> {
    eval_functional(table, &normal_order(word, params))
}
