//! Non-degenerate bilinear forms over ℚ: asymmetry, discriminant,
//! reconstruction of forms from a prescribed asymmetry, and the Clifford
//! algebra C(V,b) = T(V)/⟨a_b(v)⊗v − b(v,v)⟩ with its even part.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::exactmath::{invariant_factors, q_int, square_class, QMatrix, Rational, SquareClass};
use crate::tensor::{
    quotient, EngineConfig, IdealGenerators, QuotientAlgebra, TensorElement, Word,
};

/// A non-degenerate bilinear form b(x,y) = xᵀ·B·y on V = ℚⁿ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: QMatrix,
}

impl BilinearForm {
    pub fn new(matrix: QMatrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::ShapeMismatch);
        }
        if matrix.det().is_zero() {
            return Err(Error::DegenerateForm);
        }
        Ok(BilinearForm { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        self.matrix.at(i, j)
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let by = self.matrix.mul_vec(y);
        x.iter()
            .zip(&by)
            .map(|(a, b)| a * b)
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix == self.matrix.transpose()
    }

    pub fn scale(&self, c: &Rational) -> Result<BilinearForm> {
        if c.is_zero() {
            return Err(Error::DegenerateForm);
        }
        Ok(BilinearForm {
            matrix: self.matrix.scale(c),
        })
    }
}

/// The asymmetry of a non-degenerate form: the unique operator with
/// b(x,y) = b(y, a(x)) for all x, y.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormAsymmetry {
    matrix: QMatrix,
}

impl FormAsymmetry {
    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    /// Column i is the image of basis vector i.
    pub fn apply_basis(&self, i: usize) -> Vec<Rational> {
        self.matrix.col(i)
    }
}

/// a = B⁻¹·Bᵀ. Determinant 1 and conjugacy to the inverse are structural;
/// both are asserted.
pub fn asymmetry(form: &BilinearForm) -> FormAsymmetry {
    let b = form.matrix();
    let a = &b.inverse().expect("non-degenerate by construction") * &b.transpose();
    debug_assert!(a.det().is_one(), "asymmetry must have determinant 1");
    debug_assert_eq!(&(b * &a), &b.transpose(), "defining identity B·A = Bᵀ");
    debug_assert!(
        invariant_factors(&a) == invariant_factors(&a.inverse().expect("unit determinant")),
        "asymmetry must be conjugate to its inverse"
    );
    FormAsymmetry { matrix: a }
}

/// Square class of (−1)^{n(n−1)/2}·det B.
pub fn discriminant(form: &BilinearForm) -> Result<SquareClass> {
    let n = form.dim();
    let sign = if (n * (n - 1) / 2) % 2 == 0 {
        q_int(1)
    } else {
        q_int(-1)
    };
    square_class(&(sign * form.matrix().det()))
}

/// Default seed for the randomized search in [`form_from_asymmetry`].
pub const FORM_SEARCH_SEED: u64 = 0x11d5_c0de;

/// Solve B·A = Bᵀ for a non-degenerate B, trying random small-height
/// combinations of a kernel basis of the linear system. The search is seeded
/// and deterministic; `NoNondegenerateSolution` after `attempts` tries (or
/// when the solution space is trivial) signals that A is not the asymmetry
/// of any non-degenerate form.
pub fn form_from_asymmetry(a: &QMatrix, attempts: usize) -> Result<BilinearForm> {
    form_from_asymmetry_seeded(a, attempts, FORM_SEARCH_SEED)
}

pub fn form_from_asymmetry_seeded(a: &QMatrix, attempts: usize, seed: u64) -> Result<BilinearForm> {
    assert_eq!(a.rows(), a.cols());
    let n = a.rows();
    // linear operator B ↦ B·A − Bᵀ on n×n matrices, entries flattened row-major
    let op = QMatrix::from_fn(n * n, n * n, |row, colv| {
        let (i, j) = (row / n, row % n);
        let (p, q) = (colv / n, colv % n);
        // coefficient of B[p][q] in (B·A)[i][j] − Bᵀ[i][j]
        let mut c = if p == i {
            a.at(q, j).clone()
        } else {
            Rational::zero()
        };
        if (p, q) == (j, i) {
            c -= Rational::one();
        }
        c
    });
    let kernel = op.kernel();
    if kernel.is_empty() {
        return Err(Error::NoNondegenerateSolution);
    }
    let unflatten = |v: &[Rational]| QMatrix::from_fn(n, n, |i, j| v[i * n + j].clone());
    // single kernel vectors first
    for v in &kernel {
        let b = unflatten(v);
        if !b.det().is_zero() {
            return Ok(BilinearForm { matrix: b });
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts {
        let coeffs: Vec<Rational> = (0..kernel.len())
            .map(|_| q_int((rng.next_u64() % 21) as i64 - 10))
            .collect();
        let mut flat = vec![Rational::zero(); n * n];
        for (c, v) in coeffs.iter().zip(&kernel) {
            if c.is_zero() {
                continue;
            }
            for (slot, entry) in flat.iter_mut().zip(v) {
                *slot += c * entry;
            }
        }
        let b = unflatten(&flat);
        if !b.det().is_zero() {
            return Ok(BilinearForm { matrix: b });
        }
    }
    Err(Error::NoNondegenerateSolution)
}

/// The polarized generator family of the ideal ⟨a(v)⊗v − b(v,v)⟩: for each
/// i the element a(eᵢ)⊗eᵢ − b(eᵢ,eᵢ), and for i < j the element
/// a(eᵢ)⊗eⱼ + a(eⱼ)⊗eᵢ − b(eᵢ,eⱼ) − b(eⱼ,eᵢ). Equivalent to the
/// universally quantified family in characteristic ≠ 2.
pub fn clifford_generators(form: &BilinearForm) -> IdealGenerators {
    let n = form.dim();
    let asym = asymmetry(form);
    let letter_image = |i: usize| -> TensorElement {
        let mut t = TensorElement::zero();
        for (k, c) in asym.apply_basis(i).into_iter().enumerate() {
            t.add_term(Word::letter(k), c);
        }
        t
    };
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut g = letter_image(i).mul(&TensorElement::from_word(Word::letter(j)));
            let scalar = if i == j {
                form.entry(i, i).clone()
            } else {
                g = g.add(&letter_image(j).mul(&TensorElement::from_word(Word::letter(i))));
                form.entry(i, j) + form.entry(j, i)
            };
            g.add_term(Word::empty(), -scalar);
            gens.push(g);
        }
    }
    IdealGenerators::new(n, gens).expect("generators are degree ≤ 2 by construction")
}

/// The Clifford algebra C(V,b) as a certified quotient. The result carries
/// the parity flag: the generators are homogeneous of degrees {2, 0}.
pub fn clifford_form(form: &BilinearForm, cfg: &EngineConfig) -> Result<QuotientAlgebra> {
    let q = quotient(&clifford_generators(form), cfg)?;
    assert!(
        q.dim() <= 1usize << form.dim(),
        "Clifford algebras of non-degenerate forms have dimension ≤ 2^n"
    );
    Ok(q)
}

/// The even part C₀(V,b).
pub fn even_clifford(form: &BilinearForm, cfg: &EngineConfig) -> Result<QuotientAlgebra> {
    clifford_form(form, cfg)?.even_part()
}
