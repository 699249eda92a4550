//! Small, known-good instances used as test and acceptance fixtures.
//!
//! Random Hom-algebras are awkward to generate directly, so property tests draw
//! from this list: classical associative algebras, their Yau twists, and the
//! quotient families from [`crate::sweedler`].

use num_traits::{One, Zero};

use super::{unit, yau_twist, HomAlgebra, HomCoalgebra};
use crate::exact_math::{rat, ratio, Matrix, Rational};
use crate::sweedler::{make_poly_quotient, make_qplane_quotient, make_tensor_quotient};

/// `K[x]/(x²)` with identity twist.
pub fn dual_numbers() -> HomAlgebra {
    truncated_poly(1, rat(1))
}

/// `Kⁿ` with componentwise product.
pub fn diagonal_algebra(n: usize) -> HomAlgebra {
    HomAlgebra::from_products(n, Matrix::identity(n), |i, j| {
        if i == j {
            unit(n, i)
        } else {
            vec![Rational::zero(); n]
        }
    })
    .expect("square table")
}

/// `M₂(K)` in the basis `E11, E12, E21, E22`.
pub fn matrix_algebra_2x2() -> HomAlgebra {
    HomAlgebra::from_products(4, Matrix::identity(4), |i, j| {
        let (a, b) = (i / 2, i % 2);
        let (c, d) = (j / 2, j % 2);
        if b == c {
            unit(4, 2 * a + d)
        } else {
            vec![Rational::zero(); 4]
        }
    })
    .expect("square table")
}

pub fn zero_product(n: usize) -> HomAlgebra {
    HomAlgebra::new(n, vec![Rational::zero(); n * n * n], Matrix::identity(n)).expect("shape")
}

/// `K[x]/(x^{N+1})` with product `x^a·x^b = k^{a+b} x^{a+b}` and twist
/// `x^a ↦ k^a x^a`.
pub fn truncated_poly(n: usize, k: Rational) -> HomAlgebra {
    make_poly_quotient(n, k)
        .expect("nonzero twist parameter")
        .algebra()
        .clone()
}

pub fn qplane_truncation(r: usize, s: usize, q: Rational, k: Rational) -> HomAlgebra {
    make_qplane_quotient(r, s, q, k)
        .expect("nonzero parameters")
        .algebra()
        .clone()
}

/// Classical divided-power coalgebra `Δ(e_n) = Σ_{i+j=n} e_i ⊗ e_j` on
/// `e_0..e_N`, identity twist.
pub fn divided_power_coalgebra(n: usize) -> HomCoalgebra {
    let dim = n + 1;
    let mut comul = vec![Rational::zero(); dim * dim * dim];
    for k in 0..dim {
        for i in 0..=k {
            comul[(k * dim + i) * dim + (k - i)] = Rational::one();
        }
    }
    HomCoalgebra::new(dim, comul, Matrix::identity(dim)).expect("shape")
}

/// The automorphism `X ↦ P X P⁻¹` of `M₂(K)` as a 4×4 matrix. Panics if `p`
/// is singular.
pub fn conjugation_2x2(p: [[i64; 2]; 2]) -> Matrix {
    let pm = Matrix::from_i64(&[&p[0], &p[1]]);
    let pinv = pm.inverse().expect("invertible conjugator");
    // column 2a+b holds P E_ab P⁻¹, whose (c, d) entry is P[c][a]·P⁻¹[b][d]
    Matrix::from_fn(4, 4, |row, col| {
        let (c, d) = (row / 2, row % 2);
        let (a, b) = (col / 2, col % 2);
        &pm[(c, a)] * &pinv[(b, d)]
    })
}

/// The endomorphism of the classical algebra `K[x]/(x^{N+1})` sending `x` to
/// the polynomial `p` (coefficients low to high, `p[0]` must be zero).
pub fn poly_substitution(n: usize, p: &[Rational]) -> Matrix {
    assert!(p.first().is_none_or(Zero::is_zero), "p(0) must vanish");
    let dim = n + 1;
    let mul = |u: &[Rational], v: &[Rational]| {
        let mut out = vec![Rational::zero(); dim];
        for (i, a) in u.iter().enumerate() {
            for (j, b) in v.iter().enumerate() {
                if i + j < dim && !a.is_zero() && !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        out
    };
    let mut px = vec![Rational::zero(); dim];
    for (i, c) in p.iter().enumerate().take(dim) {
        px[i] = c.clone();
    }
    let mut columns = Vec::with_capacity(dim);
    let mut power = unit(dim, 0);
    for _ in 0..dim {
        columns.push(power.clone());
        power = mul(&power, &px);
    }
    Matrix::from_fn(dim, dim, |i, j| columns[j][i].clone())
}

/// A classical associative algebra together with a valid endomorphism.
pub struct YauSeed {
    pub name: &'static str,
    pub algebra: HomAlgebra,
    pub endo: Matrix,
}

pub fn yau_seeds() -> Vec<YauSeed> {
    let cyclic3 = Matrix::from_i64(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
    let project3 = Matrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
    vec![
        YauSeed {
            name: "dual numbers, x -> 3x",
            algebra: dual_numbers(),
            endo: Matrix::from_i64(&[&[1, 0], &[0, 3]]),
        },
        YauSeed {
            name: "K^3, cyclic permutation",
            algebra: diagonal_algebra(3),
            endo: cyclic3,
        },
        YauSeed {
            name: "K^3, projection onto e0",
            algebra: diagonal_algebra(3),
            endo: project3,
        },
        YauSeed {
            name: "M2, conjugation by [[1,1],[0,1]]",
            algebra: matrix_algebra_2x2(),
            endo: conjugation_2x2([[1, 1], [0, 1]]),
        },
        YauSeed {
            name: "M2, conjugation by [[2,0],[1,-1]]",
            algebra: matrix_algebra_2x2(),
            endo: conjugation_2x2([[2, 0], [1, -1]]),
        },
        YauSeed {
            name: "M2, zero endomorphism",
            algebra: matrix_algebra_2x2(),
            endo: Matrix::zeros(4, 4),
        },
        YauSeed {
            name: "K[x]/(x^5), x -> 2x + x^2",
            algebra: truncated_poly(4, rat(1)),
            endo: poly_substitution(4, &[rat(0), rat(2), rat(1)]),
        },
        YauSeed {
            name: "K[x]/(x^7), x -> x^2",
            algebra: truncated_poly(6, rat(1)),
            endo: poly_substitution(6, &[rat(0), rat(0), rat(1)]),
        },
    ]
}

/// Every shipped Hom-algebra instance, all of dimension at most 12.
pub fn instance_zoo() -> Vec<(String, HomAlgebra)> {
    let mut zoo: Vec<(String, HomAlgebra)> = vec![
        ("dual numbers".into(), dual_numbers()),
        ("K^3".into(), diagonal_algebra(3)),
        ("M2".into(), matrix_algebra_2x2()),
        ("zero product, dim 3".into(), zero_product(3)),
    ];
    for (n, k) in [
        (3, rat(2)),
        (5, ratio(3, 2)),
        (10, rat(-1)),
        (11, ratio(1, 2)),
    ] {
        zoo.push((format!("poly N={n} k={k}"), truncated_poly(n, k)));
    }
    for (r, s) in [(1, 1), (2, 2), (2, 3)] {
        for (q, k) in [(rat(2), rat(1)), (rat(2), rat(3))] {
            zoo.push((
                format!("qplane R={r} S={s} q={q} k={k}"),
                qplane_truncation(r, s, q.clone(), k.clone()),
            ));
        }
    }
    zoo.push((
        "tensor a=2 n=2 twists (2,3)".into(),
        make_tensor_quotient(2, 2, vec![rat(2), rat(3)])
            .expect("nonzero twists")
            .algebra()
            .clone(),
    ));
    zoo.push((
        "tensor a=3 n=1 twists (1,-1,1/2)".into(),
        make_tensor_quotient(3, 1, vec![rat(1), rat(-1), ratio(1, 2)])
            .expect("nonzero twists")
            .algebra()
            .clone(),
    ));
    for seed in yau_seeds() {
        let twisted = yau_twist(&seed.algebra, &seed.endo).expect("seed endomorphisms are valid");
        zoo.push((format!("Yau twist of {}", seed.name), twisted));
    }
    zoo
}
