//! Hom-deformed binary linearly recursive sequences.
//!
//! A table `f_{m,n} = f(x^m y^n)` is annihilated by a monic `h(x, y)` in one of
//! three bracketings of the twisted quantum-plane product. [`generate_sequence`]
//! fills tables with the textbook case stencils; [`annihilation_residual`]
//! re-derives every factor from the product itself and serves as the oracle.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_math::{pow, Matrix, Rational};
use crate::qplane::{self, hom_product, qbinom, QParams, QPoly};

/// `h(x, y) = x^r y^s − Σ_{(i,j) ≠ (0,0)} h_{i,j} x^{r−i} y^{s−j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    r: usize,
    s: usize,
    /// `h_{i,j}` at `i·(s+1) + j`; the `(0, 0)` slot is always zero.
    coeffs: Vec<Rational>,
}

impl BiPoly {
    pub fn from_fn(r: usize, s: usize, mut h: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut coeffs = Vec::with_capacity((r + 1) * (s + 1));
        for i in 0..=r {
            for j in 0..=s {
                coeffs.push(if (i, j) == (0, 0) {
                    Rational::zero()
                } else {
                    h(i, j)
                });
            }
        }
        BiPoly { r, s, coeffs }
    }

    /// From an `(r+1) × (s+1)` grid; the `[0][0]` entry must be absent.
    pub fn from_grid(grid: Vec<Vec<Option<Rational>>>) -> Result<Self> {
        let r = grid.len().checked_sub(1).ok_or_else(|| {
            Error::Input("bipoly coefficient grid must have at least one row".into())
        })?;
        let s = grid[0].len().checked_sub(1).ok_or_else(|| {
            Error::Input("bipoly coefficient grid must have at least one column".into())
        })?;
        if grid.iter().any(|row| row.len() != s + 1) {
            return Err(Error::Shape("ragged bipoly coefficient grid".into()));
        }
        if grid[0][0].is_some() {
            return Err(Error::Input(
                "bipoly grid entry [0][0] is the implicit leading 1 and must be null".into(),
            ));
        }
        let mut missing = None;
        let h = BiPoly::from_fn(r, s, |i, j| match &grid[i][j] {
            Some(v) => v.clone(),
            None => {
                missing.get_or_insert((i, j));
                Rational::zero()
            }
        });
        if let Some((i, j)) = missing {
            return Err(Error::Input(format!("bipoly coefficient h[{i}][{j}] is missing")));
        }
        Ok(h)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn h(&self, i: usize, j: usize) -> &Rational {
        &self.coeffs[i * (self.s + 1) + j]
    }

    /// Grid view with `None` in the `(0, 0)` slot.
    pub fn grid(&self) -> Vec<Vec<Option<Rational>>> {
        (0..=self.r)
            .map(|i| {
                (0..=self.s)
                    .map(|j| ((i, j) != (0, 0)).then(|| self.h(i, j).clone()))
                    .collect()
            })
            .collect()
    }

    /// Index pairs `(i, j) ≠ (0, 0)` in row-major order.
    pub fn support(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..=self.r)
            .flat_map(move |i| (0..=self.s).map(move |j| (i, j)))
            .filter(|&p| p != (0, 0))
    }

    pub fn to_qpoly(&self, params: &QParams) -> QPoly {
        let mut p = QPoly::monomial(params.clone(), self.r, self.s, Rational::one());
        for (i, j) in self.support() {
            p.add_term(self.r - i, self.s - j, -self.h(i, j).clone());
        }
        p
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = QParams::new(Rational::one(), Rational::one()).expect("nonzero");
        write!(f, "{}", self.to_qpoly(&params))
    }
}

/// Which bracketing of the annihilation condition is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseId {
    /// `f((x^{m−r}·h)·y^{n−s}) = 0`
    One,
    /// `f((x^{m−r}·y^{n−s})·h) = 0`
    Two,
    /// `f((h·x^{m−r})·y^{n−s}) = 0`
    Three,
}

impl CaseId {
    pub const ALL: [CaseId; 3] = [CaseId::One, CaseId::Two, CaseId::Three];

    pub fn number(self) -> u8 {
        match self {
            CaseId::One => 1,
            CaseId::Two => 2,
            CaseId::Three => 3,
        }
    }
}

impl TryFrom<u8> for CaseId {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            1 => Ok(CaseId::One),
            2 => Ok(CaseId::Two),
            3 => Ok(CaseId::Three),
            _ => Err(Error::Input(format!("case must be 1, 2 or 3, got {v}"))),
        }
    }
}

/// A fully populated table `f_{m,n}`, `0 ≤ m ≤ M`, `0 ≤ n ≤ N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSequence {
    m_max: usize,
    n_max: usize,
    entries: Vec<Rational>,
}

impl BiSequence {
    pub fn from_fn(m_max: usize, n_max: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity((m_max + 1) * (n_max + 1));
        for m in 0..=m_max {
            for n in 0..=n_max {
                entries.push(f(m, n));
            }
        }
        BiSequence {
            m_max,
            n_max,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let m_max = rows
            .len()
            .checked_sub(1)
            .ok_or_else(|| Error::Input("table has no rows".into()))?;
        let n_max = rows[0]
            .len()
            .checked_sub(1)
            .ok_or_else(|| Error::Input("table has no columns".into()))?;
        if rows.iter().any(|r| r.len() != n_max + 1) {
            return Err(Error::Shape("ragged table rows".into()));
        }
        Ok(BiSequence {
            m_max,
            n_max,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn get(&self, m: usize, n: usize) -> Option<&Rational> {
        (m <= self.m_max && n <= self.n_max).then(|| &self.entries[m * (self.n_max + 1) + n])
    }

    pub fn set(&mut self, m: usize, n: usize, v: Rational) {
        assert!(m <= self.m_max && n <= self.n_max, "table index out of range");
        self.entries[m * (self.n_max + 1) + n] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries
            .chunks(self.n_max + 1)
            .map(<[Rational]>::to_vec)
            .collect()
    }

    /// Row parallel to the x-axis: `p ↦ f_{p,n}`.
    pub fn x_row(&self, n: usize) -> Vec<Rational> {
        (0..=self.m_max).map(|m| self.get(m, n).unwrap().clone()).collect()
    }

    /// Row parallel to the y-axis: `p ↦ f_{m,p}`.
    pub fn y_row(&self, m: usize) -> Vec<Rational> {
        (0..=self.n_max).map(|n| self.get(m, n).unwrap().clone()).collect()
    }

    fn at(&self, m: usize, n: usize) -> Result<&Rational> {
        self.get(m, n).ok_or_else(|| {
            Error::OutOfRange(format!(
                "f[{m}][{n}] is outside the table (M = {}, N = {})",
                self.m_max, self.n_max
            ))
        })
    }
}

/// Initial values on the L-shaped region `{m < r or n < s}`; every other
/// cell is `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Boundary {
    m_max: usize,
    n_max: usize,
    cells: Vec<Option<Rational>>,
}

impl Boundary {
    pub fn from_rows(rows: Vec<Vec<Option<Rational>>>) -> Result<Self> {
        let m_max = rows
            .len()
            .checked_sub(1)
            .ok_or_else(|| Error::Input("boundary has no rows".into()))?;
        let n_max = rows[0]
            .len()
            .checked_sub(1)
            .ok_or_else(|| Error::Input("boundary has no columns".into()))?;
        if rows.iter().any(|r| r.len() != n_max + 1) {
            return Err(Error::Shape("ragged boundary rows".into()));
        }
        Ok(Boundary {
            m_max,
            n_max,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    /// `value` on the L-shape of `(r, s)`, `None` elsewhere.
    pub fn constant(r: usize, s: usize, m_max: usize, n_max: usize, value: &Rational) -> Self {
        Boundary::from_fn(r, s, m_max, n_max, |_, _| value.clone())
    }

    pub fn from_fn(
        r: usize,
        s: usize,
        m_max: usize,
        n_max: usize,
        mut f: impl FnMut(usize, usize) -> Rational,
    ) -> Self {
        let mut cells = Vec::with_capacity((m_max + 1) * (n_max + 1));
        for m in 0..=m_max {
            for n in 0..=n_max {
                cells.push((m < r || n < s).then(|| f(m, n)));
            }
        }
        Boundary {
            m_max,
            n_max,
            cells,
        }
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn get(&self, m: usize, n: usize) -> Option<&Rational> {
        self.cells[m * (self.n_max + 1) + n].as_ref()
    }

    pub fn rows(&self) -> Vec<Vec<Option<Rational>>> {
        self.cells
            .chunks(self.n_max + 1)
            .map(<[Option<Rational>]>::to_vec)
            .collect()
    }
}

/// Weights of `f_{m,n} = Σ w(i,j) f_{m−i,n−j}` at one index `(m, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursionStencil {
    pub m: usize,
    pub n: usize,
    pub weights: BTreeMap<(usize, usize), Rational>,
}

impl RecursionStencil {
    pub fn weight(&self, i: usize, j: usize) -> Rational {
        self.weights.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    fn apply(&self, table: &BiSequence) -> Rational {
        self.weights
            .iter()
            .map(|(&(i, j), w)| w * table.get(self.m - i, self.n - j).unwrap())
            .sum()
    }
}

fn check_q(q: &Rational) -> Result<()> {
    if q.is_zero() {
        return Err(Error::Input("q must be nonzero".into()));
    }
    Ok(())
}

fn check_index(h: &BiPoly, m: usize, n: usize) -> Result<()> {
    if m < h.r || n < h.s {
        return Err(Error::Input(format!(
            "recursion index ({m}, {n}) must satisfy m >= r = {}, n >= s = {}",
            h.r, h.s
        )));
    }
    Ok(())
}

/// The case stencils exactly as displayed for the three cases: weight `h_{i,j}`
/// (case 1), `q^{−i(n−s)} h_{i,j}` (case 2), `q^{−j(m−r)} h_{i,j}` (case 3).
/// No twist factors appear.
pub fn case_stencil(
    h: &BiPoly,
    case: CaseId,
    q: &Rational,
    m: usize,
    n: usize,
) -> Result<RecursionStencil> {
    check_q(q)?;
    check_index(h, m, n)?;
    let weights = h
        .support()
        .map(|(i, j)| {
            let factor = match case {
                CaseId::One => Rational::one(),
                CaseId::Two => pow(q, -((i * (n - h.s)) as i64)),
                CaseId::Three => pow(q, -((j * (m - h.r)) as i64)),
            };
            ((i, j), factor * h.h(i, j))
        })
        .filter(|(_, w)| !w.is_zero())
        .collect();
    Ok(RecursionStencil { m, n, weights })
}

fn fill(
    h: &BiPoly,
    boundary: &Boundary,
    mut stencil: impl FnMut(usize, usize) -> Result<RecursionStencil>,
) -> Result<BiSequence> {
    let (mm, nn) = (boundary.m_max, boundary.n_max);
    if mm < h.r || nn < h.s {
        return Err(Error::Input(format!(
            "table bounds (M, N) = ({mm}, {nn}) must be at least (r, s) = ({}, {})",
            h.r, h.s
        )));
    }
    for m in 0..=mm {
        for n in 0..=nn {
            let in_l = m < h.r || n < h.s;
            match (in_l, boundary.get(m, n)) {
                (true, None) => {
                    return Err(Error::Input(format!("missing boundary value at ({m}, {n})")))
                }
                (false, Some(_)) => {
                    return Err(Error::Input(format!(
                        "boundary value given at interior cell ({m}, {n})"
                    )))
                }
                _ => {}
            }
        }
    }
    let mut table = BiSequence::from_fn(mm, nn, |m, n| {
        boundary.get(m, n).cloned().unwrap_or_else(Rational::zero)
    });
    for m in h.r..=mm {
        for n in h.s..=nn {
            let v = stencil(m, n)?.apply(&table);
            table.set(m, n, v);
        }
    }
    Ok(table)
}

/// Fills the interior `m ≥ r, n ≥ s` in row-major order with [`case_stencil`].
pub fn generate_sequence(
    h: &BiPoly,
    case: CaseId,
    q: &Rational,
    boundary: &Boundary,
) -> Result<BiSequence> {
    check_q(q)?;
    fill(h, boundary, |m, n| case_stencil(h, case, q, m, n))
}

/// Like [`generate_sequence`] but with the stencil from [`derive_recursion`],
/// which carries the twist factors for general `k`.
pub fn generate_sequence_derived(
    h: &BiPoly,
    case: CaseId,
    params: &QParams,
    boundary: &Boundary,
) -> Result<BiSequence> {
    fill(h, boundary, |m, n| derive_recursion(h, case, m, n, params))
}

/// The bracketed Hom-product expression of the case condition at `(m, n)`,
/// expanded in normal form.
pub fn case_expression(
    h: &BiPoly,
    case: CaseId,
    m: usize,
    n: usize,
    params: &QParams,
) -> Result<QPoly> {
    check_index(h, m, n)?;
    let hp = h.to_qpoly(params);
    let xs = QPoly::monomial(params.clone(), m - h.r, 0, Rational::one());
    let ys = QPoly::monomial(params.clone(), 0, n - h.s, Rational::one());
    match case {
        CaseId::One => hom_product(&hom_product(&xs, &hp)?, &ys),
        CaseId::Two => hom_product(&hom_product(&xs, &ys)?, &hp),
        CaseId::Three => hom_product(&hom_product(&hp, &xs)?, &ys),
    }
}

/// `f` applied to the case expression at `(m, n)`. Zero exactly when the table
/// satisfies the case condition there.
pub fn annihilation_residual(
    f: &BiSequence,
    h: &BiPoly,
    case: CaseId,
    m: usize,
    n: usize,
    params: &QParams,
) -> Result<Rational> {
    qplane::eval_functional(f, &case_expression(h, case, m, n, params)?)
}

/// Residuals at every `(m, n)` with `r ≤ m ≤ M`, `s ≤ n ≤ N`, row-major.
pub fn annihilation_residuals(
    f: &BiSequence,
    h: &BiPoly,
    case: CaseId,
    params: &QParams,
) -> Result<Vec<(usize, usize, Rational)>> {
    let mut out = Vec::new();
    for m in h.r..=f.m_max {
        for n in h.s..=f.n_max {
            out.push((m, n, annihilation_residual(f, h, case, m, n, params)?));
        }
    }
    Ok(out)
}

/// Solves the case condition at `(m, n)` for `f_{m,n}`: expands the case
/// expression and divides by its `x^m y^n` coefficient.
pub fn derive_recursion(
    h: &BiPoly,
    case: CaseId,
    m: usize,
    n: usize,
    params: &QParams,
) -> Result<RecursionStencil> {
    let expr = case_expression(h, case, m, n, params)?;
    let lead = expr.coefficient(m, n);
    debug_assert!(!lead.is_zero(), "leading coefficient is a monomial in q, k");
    let weights = expr
        .terms()
        .iter()
        .filter(|(&e, _)| e != (m, n))
        .map(|(&(a, b), c)| ((m - a, n - b), -c / &lead))
        .collect();
    Ok(RecursionStencil { m, n, weights })
}

/// `h_{m,n} = Σ_{0≤t≤n} binom(n,t)_q f_{m+t,n−t} g_{m,t}` on `0..=M × 0..=N`.
pub fn quantum_convolution(
    f: &BiSequence,
    g: &BiSequence,
    q: &Rational,
    m_max: usize,
    n_max: usize,
) -> Result<BiSequence> {
    check_q(q)?;
    if f.m_max < m_max + n_max || f.n_max < n_max {
        return Err(Error::OutOfRange(format!(
            "left factor must extend to ({}, {n_max}), has ({}, {})",
            m_max + n_max,
            f.m_max,
            f.n_max
        )));
    }
    if g.m_max < m_max || g.n_max < n_max {
        return Err(Error::OutOfRange(format!(
            "right factor must extend to ({m_max}, {n_max}), has ({}, {})",
            g.m_max, g.n_max
        )));
    }
    let binoms: Vec<Vec<Rational>> = (0..=n_max)
        .map(|n| (0..=n).map(|t| qbinom(n, t, q).expect("t <= n")).collect())
        .collect();
    let mut out = BiSequence::from_fn(m_max, n_max, |_, _| Rational::zero());
    for m in 0..=m_max {
        for n in 0..=n_max {
            let mut acc = Rational::zero();
            for t in 0..=n {
                acc += &binoms[n][t] * f.at(m + t, n - t)? * g.at(m, t)?;
            }
            out.set(m, n, acc);
        }
    }
    Ok(out)
}

/// The first `h` of bidegree `(r, s)` annihilating `f` in the case-1 sense,
/// searching by increasing `r + s`, ties by smaller `r`. Among several
/// solutions for the same bidegree the one with zero free coordinates (in
/// the RREF of the system) is returned.
pub fn minimal_bipoly(f: &BiSequence, rmax: usize, smax: usize) -> Result<Option<BiPoly>> {
    if f.m_max < 2 * rmax || f.n_max < 2 * smax {
        return Err(Error::Input(format!(
            "table bounds ({}, {}) are too small for rmax = {rmax}, smax = {smax}",
            f.m_max, f.n_max
        )));
    }
    for total in 0..=rmax + smax {
        for r in 0..=total.min(rmax) {
            let s = total - r;
            if s > smax {
                continue;
            }
            if let Some(h) = solve_bidegree(f, r, s) {
                return Ok(Some(h));
            }
        }
    }
    Ok(None)
}

fn solve_bidegree(f: &BiSequence, r: usize, s: usize) -> Option<BiPoly> {
    let unknowns: Vec<(usize, usize)> = (0..=r)
        .flat_map(|i| (0..=s).map(move |j| (i, j)))
        .filter(|&p| p != (0, 0))
        .collect();
    let cols = unknowns.len() + 1;
    let mut rows = Vec::new();
    for m in r..=f.m_max {
        for n in s..=f.n_max {
            let mut row: Vec<Rational> = unknowns
                .iter()
                .map(|&(i, j)| f.get(m - i, n - j).unwrap().clone())
                .collect();
            row.push(-f.get(m, n).unwrap().clone());
            rows.push(row);
        }
    }
    let system = Matrix::from_rows(rows).ok()?;
    debug_assert_eq!(system.cols(), cols);
    let solution = system
        .kernel()
        .into_iter()
        .find(|v| !v[cols - 1].is_zero())?;
    let lead = solution[cols - 1].clone();
    let values: BTreeMap<(usize, usize), Rational> = unknowns
        .iter()
        .zip(&solution)
        .map(|(&p, v)| (p, v / &lead))
        .collect();
    Some(BiPoly::from_fn(r, s, |i, j| values[&(i, j)].clone()))
}

/// A monic univariate polynomial, coefficients from constant term upward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicPoly {
    coeffs: Vec<Rational>,
}

impl MonicPoly {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Result<Self> {
        match coeffs.last() {
            Some(c) if c.is_one() => Ok(MonicPoly { coeffs }),
            _ => Err(Error::Input("polynomial is not monic".into())),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Renders with the given variable name, e.g. `x^2 - x - 1`.
    pub fn render(&self, var: &str) -> String {
        let params = QParams::new(Rational::one(), Rational::one()).expect("nonzero");
        let p = QPoly::from_terms(
            params,
            self.coeffs.iter().enumerate().map(|(e, c)| ((e, 0), c.clone())),
        );
        p.to_string().replace('x', var)
    }
}

/// The monic `p` of least degree `d ≤ max_degree` with
/// `Σ_t p_t s_{i+t} = 0` for every window inside `seq`, found by sweeping `d`
/// upward and solving the Hankel system exactly.
pub fn minimal_annihilator(seq: &[Rational], max_degree: usize) -> Option<MonicPoly> {
    for d in 0..=max_degree.min(seq.len()) {
        let rows: Vec<Vec<Rational>> = (0..seq.len() - d)
            .map(|p| {
                let mut row: Vec<Rational> = (1..=d).map(|t| seq[p + d - t].clone()).collect();
                row.push(-seq[p + d].clone());
                row
            })
            .collect();
        if rows.is_empty() {
            return None;
        }
        let system = Matrix::from_rows(rows).expect("rectangular");
        let Some(sol) = system.kernel().into_iter().find(|v| !v[d].is_zero()) else {
            continue;
        };
        let lead = sol[d].clone();
        // x^d − c_1 x^{d−1} − … − c_d
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = Rational::one();
        for t in 1..=d {
            coeffs[d - t] = -&sol[t - 1] / &lead;
        }
        return Some(MonicPoly { coeffs });
    }
    None
}

/// Minimal annihilators of every row of a table, degree bound half the row
/// length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowMinimalPolys {
    /// For each `n`, the annihilator of `p ↦ f_{p,n}` (a polynomial in `x`).
    pub x_rows: Vec<Option<MonicPoly>>,
    /// For each `m`, the annihilator of `p ↦ f_{m,p}` (a polynomial in `y`).
    pub y_rows: Vec<Option<MonicPoly>>,
}

pub fn row_minimal_polys(f: &BiSequence) -> Result<RowMinimalPolys> {
    if f.m_max < 1 || f.n_max < 1 {
        return Err(Error::Input(
            "rows need at least two entries in each direction".into(),
        ));
    }
    let x_rows = (0..=f.n_max)
        .map(|n| minimal_annihilator(&f.x_row(n), f.m_max.div_ceil(2)))
        .collect();
    let y_rows = (0..=f.m_max)
        .map(|m| minimal_annihilator(&f.y_row(m), f.n_max.div_ceil(2)))
        .collect();
    Ok(RowMinimalPolys { x_rows, y_rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::{rat, ratio};

    fn delannoy_h() -> BiPoly {
        BiPoly::from_fn(1, 1, |_, _| rat(1))
    }

    fn ones(h: &BiPoly, m: usize, n: usize) -> Boundary {
        Boundary::constant(h.r(), h.s(), m, n, &rat(1))
    }

    fn unit_params() -> QParams {
        QParams::new(rat(1), rat(1)).unwrap()
    }

    #[test]
    fn delannoy_case_one() {
        let h = delannoy_h();
        let t = generate_sequence(&h, CaseId::One, &rat(1), &ones(&h, 3, 3)).unwrap();
        assert_eq!(t.get(1, 1), Some(&rat(3)));
        assert_eq!(t.get(2, 2), Some(&rat(13)));
        assert_eq!(t.get(3, 3), Some(&rat(63)));
    }

    #[test]
    fn case_two_and_three_examples() {
        let h = delannoy_h();
        let t = generate_sequence(&h, CaseId::Two, &rat(2), &ones(&h, 3, 3)).unwrap();
        assert_eq!(t.get(1, 1), Some(&rat(3)));
        assert_eq!(t.get(1, 2), Some(&rat(4)));
        let t = generate_sequence(&h, CaseId::Three, &rat(2), &ones(&h, 3, 3)).unwrap();
        assert_eq!(t.get(1, 1), Some(&rat(3)));
        assert_eq!(t.get(2, 1), Some(&rat(4)));
    }

    #[test]
    fn boundary_errors() {
        let h = delannoy_h();
        let mut rows = ones(&h, 2, 2).rows();
        rows[0][1] = None;
        let b = Boundary::from_rows(rows).unwrap();
        assert!(generate_sequence(&h, CaseId::One, &rat(1), &b).is_err());
        let mut rows = ones(&h, 2, 2).rows();
        rows[2][2] = Some(rat(0));
        let b = Boundary::from_rows(rows).unwrap();
        assert!(generate_sequence(&h, CaseId::One, &rat(1), &b).is_err());
        assert!(generate_sequence(&h, CaseId::One, &rat(0), &ones(&h, 2, 2)).is_err());
    }

    #[test]
    fn residual_examples() {
        let h = delannoy_h();
        let t = generate_sequence(&h, CaseId::One, &rat(1), &ones(&h, 4, 4)).unwrap();
        assert_eq!(
            annihilation_residual(&t, &h, CaseId::One, 2, 2, &unit_params()).unwrap(),
            rat(0)
        );
        let mut bad = t.clone();
        bad.set(2, 2, rat(14));
        assert_eq!(
            annihilation_residual(&bad, &h, CaseId::One, 2, 2, &unit_params()).unwrap(),
            rat(1)
        );
        let k2 = QParams::new(rat(1), rat(2)).unwrap();
        assert_ne!(
            annihilation_residual(&t, &h, CaseId::One, 2, 2, &k2).unwrap(),
            rat(0)
        );
        assert!(annihilation_residual(&t, &h, CaseId::One, 5, 2, &unit_params()).is_err());
    }

    #[test]
    fn derived_stencils() {
        let h = BiPoly::from_fn(2, 1, |i, j| rat((3 * i + j) as i64));
        let s = derive_recursion(&h, CaseId::One, 3, 2, &QParams::new(ratio(5, 3), rat(1)).unwrap())
            .unwrap();
        for (i, j) in h.support() {
            assert_eq!(s.weight(i, j), *h.h(i, j));
        }
        let hd = delannoy_h();
        let s = derive_recursion(&hd, CaseId::Two, 2, 2, &QParams::new(rat(3), rat(1)).unwrap())
            .unwrap();
        assert_eq!(s.weight(1, 0), ratio(1, 3));
        assert_eq!(s.weight(0, 1), rat(1));
        assert_eq!(s.weight(1, 1), ratio(1, 3));
        let s = derive_recursion(&h, CaseId::One, 4, 3, &QParams::new(rat(2), rat(2)).unwrap())
            .unwrap();
        for (i, j) in h.support() {
            assert_eq!(s.weight(i, j), h.h(i, j) * pow(&rat(2), -2 * (i + j) as i64));
        }
    }

    #[test]
    fn convolution_examples() {
        let f = BiSequence::from_fn(8, 4, |m, n| rat((m * 10 + n) as i64));
        let g = BiSequence::from_fn(4, 4, |_, n| if n == 0 { rat(1) } else { rat(0) });
        let h = quantum_convolution(&f, &g, &rat(3), 4, 4).unwrap();
        for m in 0..=4 {
            for n in 0..=4 {
                assert_eq!(h.get(m, n), f.get(m, n));
            }
        }
        let g2 = BiSequence::from_fn(4, 4, |m, n| rat((m + 2 * n + 1) as i64));
        let h = quantum_convolution(&f, &g2, &rat(2), 4, 4).unwrap();
        for m in 0..=4 {
            assert_eq!(h.get(m, 0).unwrap(), &(f.get(m, 0).unwrap() * g2.get(m, 0).unwrap()));
        }
        assert!(quantum_convolution(&g2, &g2, &rat(2), 4, 4).is_err());
    }

    #[test]
    fn minimal_bipoly_examples() {
        let h = delannoy_h();
        let t = generate_sequence(&h, CaseId::One, &rat(1), &ones(&h, 7, 7)).unwrap();
        assert_eq!(minimal_bipoly(&t, 3, 3).unwrap(), Some(h));
        // all ones: (0, 1) precedes (1, 0) under the (r + s, r) order
        let ones_t = BiSequence::from_fn(7, 7, |_, _| rat(1));
        let found = minimal_bipoly(&ones_t, 3, 3).unwrap().unwrap();
        assert_eq!((found.r(), found.s()), (0, 1));
        assert_eq!(found.h(0, 1), &rat(1));
        let zero = BiSequence::from_fn(4, 4, |_, _| rat(0));
        let found = minimal_bipoly(&zero, 2, 2).unwrap().unwrap();
        assert_eq!((found.r(), found.s()), (0, 0));
        assert!(minimal_bipoly(&t, 4, 3).is_err());
    }

    #[test]
    fn row_annihilators() {
        let t = BiSequence::from_fn(7, 7, |m, n| {
            let fib = [1, 1, 2, 3, 5, 8, 13, 21];
            match n {
                0 => rat(1),
                1 => rat(1 << m),
                _ => rat(fib[m]),
            }
        });
        let rows = row_minimal_polys(&t).unwrap();
        assert_eq!(rows.x_rows[0].as_ref().unwrap().render("x"), "x - 1");
        assert_eq!(rows.x_rows[1].as_ref().unwrap().render("x"), "x - 2");
        assert_eq!(rows.x_rows[2].as_ref().unwrap().render("x"), "x^2 - x - 1");
        assert!(row_minimal_polys(&BiSequence::from_fn(0, 3, |_, _| rat(1))).is_err());
    }

    #[test]
    fn bipoly_grid_roundtrip() {
        let h = BiPoly::from_fn(2, 1, |i, j| ratio(i as i64 + 1, j as i64 + 2));
        assert_eq!(BiPoly::from_grid(h.grid()).unwrap(), h);
        let mut g = h.grid();
        g[0][0] = Some(rat(1));
        assert!(BiPoly::from_grid(g).is_err());
        assert_eq!(delannoy_h().to_string(), "x*y - x - y - 1");
    }
}
