//! The Clifford algebra C(A,σ) = T(A̲)/(J₁ + J₂) of an antiautomorphism of a
//! degree-2 central simple algebra, its classification as a quadratic
//! algebra, and the structural verification routines: the degree-2 closed
//! form, invariance under conjugation, and the split-case identification
//! with the even Clifford algebra of a plane form.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::csa::Antiaut;
use crate::error::{Error, Result};
use crate::exactmath::{q, q_int, square_class, QMatrix, Rational, SquareClass};
use crate::forms::{clifford_generators, even_clifford, BilinearForm};
use crate::tensor::{
    ideal_slice, quotient, EngineConfig, IdealGenerators, QuotientAlgebra, SliceSpan,
    TensorElement, Word,
};

/// J₁: for each basis vector s of Sym(A̲, γ_σ), the element s − ½Trd(s).
/// The algebra unit enters as the letter 1_A, distinct from the tensor unit.
pub fn build_j1(antiaut: &Antiaut) -> Vec<TensorElement> {
    antiaut
        .sym_basis()
        .into_iter()
        .map(|s| {
            let mut g = TensorElement::zero();
            for (p, c) in s.iter().enumerate() {
                g.add_term(Word::letter(p), c.clone());
            }
            let trd = antiaut.algebra().trd(&s);
            g.add_term(Word::empty(), -(trd / q_int(2)));
            g
        })
        .collect()
}

/// J₂: for each basis vector u of Sym(A̲⊗A̲, γ_σ̃,2), the element
/// u − ½μ_σ(u), with u written over two-letter words and μ_σ(u) over
/// letters.
pub fn build_j2(antiaut: &Antiaut) -> Vec<TensorElement> {
    let g2 = antiaut.gamma2_tilde();
    let sym = (&g2 - &QMatrix::identity(16)).kernel();
    sym.into_iter()
        .map(|u| {
            let mut g = TensorElement::zero();
            for (idx, c) in u.iter().enumerate() {
                if !c.is_zero() {
                    g.add_term(Word::from_letters(&[idx / 4, idx % 4]), c.clone());
                }
            }
            let mu = antiaut.mu(&u);
            for (p, c) in mu.iter().enumerate() {
                g.add_term(Word::letter(p), -(c / q_int(2)));
            }
            g
        })
        .collect()
}

/// The defining ideal J₁ ∪ J₂ over the 4-letter alphabet of A̲.
pub fn clifford_ideal(antiaut: &Antiaut) -> IdealGenerators {
    let mut gens = build_j1(antiaut);
    gens.extend(build_j2(antiaut));
    IdealGenerators::new(4, gens).expect("J₁ and J₂ have degree ≤ 2")
}

/// C(A,σ) as a certified quotient. The dimension bound 2^{deg A − 1} = 2 is
/// asserted.
pub fn clifford_antiaut(antiaut: &Antiaut, cfg: &EngineConfig) -> Result<QuotientAlgebra> {
    let q = quotient(&clifford_ideal(antiaut), cfg)?;
    assert!(
        q.dim() <= 2,
        "degree-2 Clifford algebras have dimension ≤ 2"
    );
    Ok(q)
}

/// Isomorphism class of a 2-dimensional commutative unital algebra
/// F[X]/(X² + pX + q) over ℚ: determined by the square class of the
/// discriminant of a generator's minimal polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuadraticAlgebraClass {
    /// F[X]/(X²): discriminant zero.
    DualNumbers,
    /// F × F: discriminant a nonzero square.
    Split,
    /// The quadratic field ℚ(√d): discriminant in a nontrivial class.
    Field(SquareClass),
}

impl QuadraticAlgebraClass {
    pub fn from_discriminant(class: SquareClass) -> QuadraticAlgebraClass {
        match class {
            SquareClass::Zero => QuadraticAlgebraClass::DualNumbers,
            c if c.is_trivial() => QuadraticAlgebraClass::Split,
            c => QuadraticAlgebraClass::Field(c),
        }
    }

    pub fn label(&self) -> String {
        match self {
            QuadraticAlgebraClass::DualNumbers => String::from("dual_numbers"),
            QuadraticAlgebraClass::Split => String::from("split"),
            QuadraticAlgebraClass::Field(c) => alloc::format!("field({c})"),
        }
    }
}

/// Classify a 2-dimensional commutative quotient by the discriminant of the
/// minimal polynomial of any generator; the class does not depend on the
/// choice since g ↦ α + βg scales the discriminant by β².
pub fn classify_quadratic(q: &QuotientAlgebra) -> Result<QuadraticAlgebraClass> {
    if q.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: q.dim(),
        });
    }
    for i in 0..2 {
        for j in 0..2 {
            if q.structure_constant(i, j) != q.structure_constant(j, i) {
                return Err(Error::NotCommutative);
            }
        }
    }
    let unit = q.unit_index().expect("2-dimensional algebras are unital");
    let generator = q.basis_vector(1 - unit);
    let minpoly = q.minpoly_vec(&generator);
    let disc = minpoly
        .quadratic_discriminant()
        .expect("generator of a 2-dimensional algebra has a quadratic minimal polynomial");
    Ok(QuadraticAlgebraClass::from_discriminant(square_class(
        &disc,
    )?))
}

/// The class predicted by the degree-2 closed form: Nrd(a+1)·disc σ, read
/// as dual numbers when the product vanishes.
pub fn predicted_class(antiaut: &Antiaut) -> Result<QuadraticAlgebraClass> {
    let algebra = antiaut.algebra();
    let mut a_plus_one = antiaut.asymmetry().to_vec();
    for (slot, u) in a_plus_one.iter_mut().zip(&algebra.unit()) {
        *slot += u;
    }
    let nrd = algebra.nrd(&a_plus_one);
    if nrd.is_zero() {
        return Ok(QuadraticAlgebraClass::DualNumbers);
    }
    let class = square_class(&nrd)?.mul(&antiaut.disc()?);
    Ok(QuadraticAlgebraClass::from_discriminant(class))
}

/// Outcome of computing C(A,σ) and comparing it with the degree-2 closed
/// form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordReport {
    pub description: String,
    /// Coordinates of the asymmetry over the algebra basis.
    pub asymmetry: Vec<Rational>,
    pub disc: SquareClass,
    pub algebra: QuotientAlgebra,
    /// Present exactly when the computed algebra is 2-dimensional.
    pub classification: Option<QuadraticAlgebraClass>,
    pub predicted: QuadraticAlgebraClass,
    pub matches: bool,
}

impl CliffordReport {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// Compute C(A,σ), classify it when 2-dimensional, and compare with the
/// class of Nrd(a+1)·disc σ.
pub fn verify_deg2(
    antiaut: &Antiaut,
    cfg: &EngineConfig,
    description: &str,
) -> Result<CliffordReport> {
    let algebra = clifford_antiaut(antiaut, cfg)?;
    let classification = match classify_quadratic(&algebra) {
        Ok(c) => Some(c),
        Err(Error::WrongDimension { .. }) => None,
        Err(e) => return Err(e),
    };
    let predicted = predicted_class(antiaut)?;
    let matches = classification.as_ref() == Some(&predicted);
    Ok(CliffordReport {
        description: String::from(description),
        asymmetry: antiaut.asymmetry().to_vec(),
        disc: antiaut.disc()?,
        algebra,
        classification,
        predicted,
        matches,
    })
}

/// Compare C(A,σ) and C(A, Int(w)∘σ∘Int(w)⁻¹): equal dimensions and equal
/// classifications (both absent counts as equal for dimensions ≠ 2).
pub fn invariance_check(antiaut: &Antiaut, w: &[Rational], cfg: &EngineConfig) -> Result<bool> {
    let conjugated = antiaut.conjugate(w)?;
    let left = clifford_antiaut(antiaut, cfg)?;
    let right = clifford_antiaut(&conjugated, cfg)?;
    if left.dim() != right.dim() {
        return Ok(false);
    }
    if left.dim() != 2 {
        return Ok(true);
    }
    Ok(classify_quadratic(&left)? == classify_quadratic(&right)?)
}

/// The matrix of φ: V⊗V → A̲ = End(V), v⊗w ↦ (x ↦ v·b(w,x)), with pair
/// coordinates (i,j) ↦ i·2+j and End(V) on the E-basis.
pub fn phi_map(form: &BilinearForm) -> QMatrix {
    assert_eq!(form.dim(), 2, "φ is set up for plane forms");
    // φ(e_i ⊗ e_j) = Σ_k b(e_j, e_k)·E_{ik}
    QMatrix::from_fn(4, 4, |end_idx, pair| {
        let (r, c) = (end_idx / 2, end_idx % 2);
        let (i, j) = (pair / 2, pair % 2);
        if r == i {
            form.entry(j, c).clone()
        } else {
            Rational::zero()
        }
    })
}

/// Substitute pair-letters through φ: an even-length word v₁v₂…v₂ᵣ over the
/// form's basis becomes the product φ(v₁⊗v₂)·…·φ(v₂ᵣ₋₁⊗v₂ᵣ) in T(A̲).
fn phi_substitute(phi: &QMatrix, elt: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (w, coeff) in elt.terms() {
        let letters: Vec<usize> = w.letters().collect();
        assert!(letters.len() % 2 == 0, "even slice words pair up");
        let mut factor = TensorElement::scalar(coeff.clone());
        for pair in letters.chunks(2) {
            let col = phi.col(pair[0] * 2 + pair[1]);
            let mut image = TensorElement::zero();
            for (p, c) in col.into_iter().enumerate() {
                image.add_term(Word::letter(p), c);
            }
            factor = factor.mul(&image);
        }
        out = out.add(&factor);
    }
    out
}

/// Everything the split-case comparison produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitReport {
    pub csa_dim: usize,
    pub even_dim: usize,
    pub csa_class: Option<QuadraticAlgebraClass>,
    /// Classification of C₀(V, ½b), the side the identification targets.
    pub even_half_class: Option<QuadraticAlgebraClass>,
    /// Classification of C₀(V, b), recorded to document scaling behavior.
    pub even_full_class: Option<QuadraticAlgebraClass>,
    pub class_match: bool,
    pub slice_match: bool,
}

impl SplitReport {
    pub fn passed(&self) -> bool {
        self.class_match && self.slice_match
    }
}

/// Verify the split-case identification for a plane form: C(End V, σ_b)
/// against C₀(V, ½b) by (a) dimension and classification and (b) the
/// correspondence of degree-≤2 ideal slices under the word-level
/// substitution v⊗w ↦ φ(v⊗w).
pub fn split_check(form: &BilinearForm, cfg: &EngineConfig) -> Result<SplitReport> {
    let adjoint = Antiaut::adjoint(form)?;
    let csa = clifford_antiaut(&adjoint, cfg)?;
    let half = form.scale(&q(1, 2))?;
    let even_half = even_clifford(&half, cfg)?;
    let even_full = even_clifford(form, cfg)?;

    let classify_opt = |alg: &QuotientAlgebra| -> Result<Option<QuadraticAlgebraClass>> {
        match classify_quadratic(alg) {
            Ok(c) => Ok(Some(c)),
            Err(Error::WrongDimension { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    };
    let csa_class = classify_opt(&csa)?;
    let even_half_class = classify_opt(&even_half)?;
    let even_full_class = classify_opt(&even_full)?;
    let class_match = csa.dim() == even_half.dim() && csa_class == even_half_class;

    // ideal-slice correspondence: the degree-≤2 slice of (J₁+J₂) must equal
    // the image under φ of the even degree-≤4 slice of the C(V,½b) ideal
    let slice_j = ideal_slice(&clifford_ideal(&adjoint), 2, cfg.slack_cap);
    let slice_i = ideal_slice(&clifford_generators(&half), 4, 2 * cfg.slack_cap);
    let phi = phi_map(form);
    let mapped: Vec<TensorElement> = slice_i
        .rows()
        .into_iter()
        .filter(|row| row.homogeneous_parity() == Some(0))
        .map(|row| phi_substitute(&phi, &row))
        .collect();
    let mapped_span = SliceSpan::from_elements(2, &mapped);
    let slice_match = mapped.iter().all(|row| slice_j.contains(row))
        && slice_j.rows().iter().all(|row| mapped_span.contains(row));

    Ok(SplitReport {
        csa_dim: csa.dim(),
        even_dim: even_half.dim(),
        csa_class,
        even_half_class,
        even_full_class,
        class_match,
        slice_match,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csa::StructAlgebra;
    use crate::exactmath::QPoly;
    use crate::forms::asymmetry;
    use alloc::vec;

    fn cfg4() -> EngineConfig {
        EngineConfig::for_alphabet(4)
    }

    fn hamilton() -> StructAlgebra {
        StructAlgebra::quaternion(q_int(-1), q_int(-1)).unwrap()
    }

    fn skewed_plane_form() -> BilinearForm {
        BilinearForm::new(
            QMatrix::from_rows(vec![vec![q_int(0), q_int(1)], vec![q(1, 2), q_int(0)]]).unwrap(),
        )
        .unwrap()
    }

    fn span_of(deg: usize, vectors: &[TensorElement]) -> SliceSpan {
        SliceSpan::from_elements(deg, vectors)
    }

    #[test]
    fn j1_of_canonical_involution_is_pure_quaternions() {
        let rho = Antiaut::canonical_involution(hamilton());
        let j1 = build_j1(&rho);
        assert_eq!(j1.len(), 3);
        let expected: Vec<TensorElement> = (1..4)
            .map(|l| TensorElement::from_word(Word::letter(l)))
            .collect();
        let span = span_of(1, &expected);
        for g in &j1 {
            assert!(span.contains(g));
        }
    }

    #[test]
    fn j1_of_non_involutive_quaternion_case() {
        // σ = Int(1+i)∘ρ on (α,β): J₁ spans {i + α·1_A − α·ε, j, k}
        for (alpha, beta) in [(-1i64, -1i64), (2, 3)] {
            let a = StructAlgebra::quaternion(q_int(alpha), q_int(beta)).unwrap();
            let s = Antiaut::from_u(a.clone(), &a.from_i64(&[1, 1, 0, 0])).unwrap();
            let j1 = build_j1(&s);
            assert_eq!(j1.len(), 3);
            let mut lead = TensorElement::from_word(Word::letter(1));
            lead.add_term(Word::letter(0), q_int(alpha));
            lead.add_term(Word::empty(), q_int(-alpha));
            let expected = vec![
                lead,
                TensorElement::from_word(Word::letter(2)),
                TensorElement::from_word(Word::letter(3)),
            ];
            let span = span_of(1, &expected);
            for g in &j1 {
                assert!(span.contains(g));
            }
            let back = span_of(1, &j1);
            for e in &expected {
                assert!(back.contains(e));
            }
        }
    }

    #[test]
    fn j1_of_orthogonal_adjoint_matches_sigma_symmetric_space() {
        // symmetric form: Sym(γ) = Sym(σ)
        let f = BilinearForm::new(QMatrix::identity(2)).unwrap();
        let s = Antiaut::adjoint(&f).unwrap();
        let sym_gamma = (s.gamma() - &QMatrix::identity(4)).kernel();
        let sym_sigma = (s.sigma() - &QMatrix::identity(4)).kernel();
        assert_eq!(sym_gamma.len(), sym_sigma.len());
        let to_elems = |vs: &[Vec<Rational>]| -> Vec<TensorElement> {
            vs.iter()
                .map(|v| {
                    let mut t = TensorElement::zero();
                    for (p, c) in v.iter().enumerate() {
                        t.add_term(Word::letter(p), c.clone());
                    }
                    t
                })
                .collect()
        };
        let span1 = span_of(1, &to_elems(&sym_gamma));
        for e in to_elems(&sym_sigma) {
            assert!(span1.contains(&e));
        }
    }

    #[test]
    fn j2_of_canonical_involution() {
        let h = hamilton();
        let rho = Antiaut::canonical_involution(h.clone());
        let j2 = build_j2(&rho);
        // Sym(γ̃₂) = ker μ has dimension 12 and the μ-corrections vanish
        assert_eq!(j2.len(), 12);
        for g in &j2 {
            assert_eq!(g.homogeneous_parity(), Some(0));
            assert_eq!(g.degree(), Some(2));
        }
        // αβ·1⊗1 + k⊗k is symmetric with μ = 0, so it equals its generator
        let mut u = vec![q_int(0); 16];
        u[0] = q_int(1); // αβ = 1 for Hamilton
        u[15] = q_int(1);
        let g2 = rho.gamma2_tilde();
        assert_eq!(g2.mul_vec(&u), u);
        assert!(rho.mu(&u).iter().all(Zero::is_zero));
        let mut elem = TensorElement::from_word(Word::from_letters(&[0, 0]));
        elem.add_term(Word::from_letters(&[3, 3]), q_int(1));
        let span = span_of(2, &j2);
        assert!(span.contains(&elem));
    }

    #[test]
    fn j2_of_orthogonal_involution_matches_classical_construction() {
        // a = 1: γ̃₂ coincides with the involution σ₂ defined by
        // Sand(σ₂(u)) = Sand(u)∘σ
        let a23 = StructAlgebra::quaternion(q_int(2), q_int(3)).unwrap();
        let s = Antiaut::from_u(a23.clone(), &a23.basis_element(1)).unwrap();
        let sand = a23.sandwich_matrix();
        let sand_inv = sand.inverse().unwrap();
        let compose = QMatrix::from_fn(16, 16, |out, inp| {
            let (r, c) = (out / 4, out % 4);
            let (i, j) = (inp / 4, inp % 4);
            if r == i {
                s.sigma().at(j, c).clone()
            } else {
                Rational::zero()
            }
        });
        let classical = &(&sand_inv * &compose) * &sand;
        assert_eq!(s.gamma2_tilde(), classical);
    }

    #[test]
    fn clifford_of_canonical_involution_is_dual_numbers() {
        for (alpha, beta) in [(-1i64, -1i64), (2, 3)] {
            let a = StructAlgebra::quaternion(q_int(alpha), q_int(beta)).unwrap();
            let rho = Antiaut::canonical_involution(a);
            let c = clifford_antiaut(&rho, &cfg4()).unwrap();
            assert_eq!(c.dim(), 2);
            assert_eq!(c.basis()[1], Word::letter(0));
            // 1_A² = 0
            let one_a = c.basis_vector(1);
            assert!(c.mul_vec(&one_a, &one_a).iter().all(Zero::is_zero));
            assert_eq!(c.minpoly_vec(&one_a), QPoly::from_i64_coeffs(&[0, 0, 1]));
            assert_eq!(
                classify_quadratic(&c).unwrap(),
                QuadraticAlgebraClass::DualNumbers
            );
        }
    }

    #[test]
    fn clifford_of_orthogonal_involution_is_disc_extension() {
        for (alpha, beta) in [(-1i64, -1i64), (2, 3), (5, -2)] {
            let a = StructAlgebra::quaternion(q_int(alpha), q_int(beta)).unwrap();
            let s = Antiaut::from_u(a.clone(), &a.basis_element(1)).unwrap();
            let c = clifford_antiaut(&s, &cfg4()).unwrap();
            assert_eq!(c.dim(), 2);
            let expected = QuadraticAlgebraClass::from_discriminant(SquareClass::of_int(alpha));
            assert_eq!(classify_quadratic(&c).unwrap(), expected);
            let report = verify_deg2(&s, &cfg4(), "orthogonal").unwrap();
            assert!(report.matches);
        }
    }

    /// For non-involutive σ the two-sided ideal J₁+J₂ contains the tensor
    /// unit: two symmetric tensors reduce to incompatible relations for
    /// 1_A². The certificate is assembled from generator products alone;
    /// the engine confirms independently.
    #[test]
    fn non_involutive_quaternion_collapse_certificate() {
        let h = hamilton();
        let s = Antiaut::from_u(h.clone(), &h.from_i64(&[1, 1, 0, 0])).unwrap();

        // two explicit elements of Sym(γ̃₂)
        let g2 = s.gamma2_tilde();
        let mut u_a = vec![q_int(0); 16];
        u_a[0] = q_int(1); // 1⊗1
        u_a[5] = q_int(1); // i⊗i
        assert_eq!(g2.mul_vec(&u_a), u_a);
        assert!(s.mu(&u_a).iter().all(Zero::is_zero));
        let mut u_d = vec![q_int(0); 16];
        u_d[1] = q_int(1); // 1⊗i
        u_d[10] = q_int(1); // j⊗j
        assert_eq!(g2.mul_vec(&u_d), u_d);
        assert_eq!(s.mu(&u_d), vec![q_int(1), q_int(-1), q_int(0), q_int(0)]);

        // their J₂ generators
        let ga = {
            let mut e = TensorElement::from_word(Word::from_letters(&[0, 0]));
            e.add_term(Word::from_letters(&[1, 1]), q_int(1));
            e
        };
        let gd = {
            let mut e = TensorElement::from_word(Word::from_letters(&[0, 1]));
            e.add_term(Word::from_letters(&[2, 2]), q_int(1));
            e.add_term(Word::letter(0), q(-1, 2));
            e.add_term(Word::letter(1), q(1, 2));
            e
        };
        let j2 = build_j2(&s);
        let span = span_of(2, &j2);
        assert!(span.contains(&ga));
        assert!(span.contains(&gd));

        // J₁ generator 1_A − i − ε and the letter j
        let h1 = {
            let mut e = TensorElement::from_word(Word::letter(0));
            e.add_term(Word::letter(1), q_int(-1));
            e.add_term(Word::empty(), q_int(-1));
            e
        };
        let h2 = TensorElement::from_word(Word::letter(2));
        let j1 = build_j1(&s);
        let span1 = span_of(1, &j1);
        assert!(span1.contains(&h1));
        assert!(span1.contains(&h2));

        // certificate: 2·gd − 2·(h2·j) − (ga + h1·i − 1_A·h1) + 2·h1 = −2·ε,
        // so the tensor unit lies in the ideal
        let e0 = Word::letter(0);
        let e1 = Word::letter(1);
        let d1 = h1.word_mul_left(&e0); // 1_A · h1
        let d2 = h1.word_mul_right(&e1); // h1 · i
        let d3 = h2.word_mul_right(&Word::letter(2)); // j·j word
        let e1_comb = ga.add(&d2).sub(&d1);
        let cert = gd
            .scale(&q_int(2))
            .sub(&d3.scale(&q_int(2)))
            .sub(&e1_comb)
            .add(&h1.scale(&q_int(2)));
        assert_eq!(cert, TensorElement::scalar(q_int(-2)));

        // the engine agrees: C(A, Int(1+i)∘ρ) = 0
        let c = clifford_antiaut(&s, &cfg4()).unwrap();
        assert_eq!(c.dim(), 0);
    }

    #[test]
    fn split_adjoint_of_skewed_plane_collapses() {
        let s = Antiaut::adjoint(&skewed_plane_form()).unwrap();
        let c = clifford_antiaut(&s, &cfg4()).unwrap();
        assert_eq!(c.dim(), 0);
        let report = verify_deg2(&s, &cfg4(), "skewed plane adjoint").unwrap();
        assert_eq!(report.classification, None);
        assert_eq!(report.predicted, QuadraticAlgebraClass::Split);
        assert!(!report.matches);
    }

    #[test]
    fn symplectic_adjoint_is_dual_numbers() {
        let f = BilinearForm::new(QMatrix::from_i64(&[&[0, 1], &[-1, 0]])).unwrap();
        let s = Antiaut::adjoint(&f).unwrap();
        let report = verify_deg2(&s, &cfg4(), "symplectic adjoint").unwrap();
        assert_eq!(report.dim(), 2);
        assert_eq!(
            report.classification,
            Some(QuadraticAlgebraClass::DualNumbers)
        );
        assert!(report.matches);
    }

    #[test]
    fn classify_synthetic_cases() {
        // g² = 3g: split (discriminant 9)
        let cfg = EngineConfig::for_alphabet(1);
        let split = {
            let mut g = TensorElement::from_word(Word::from_letters(&[0, 0]));
            g.add_term(Word::letter(0), q_int(-3));
            quotient(&IdealGenerators::new(1, vec![g]).unwrap(), &cfg).unwrap()
        };
        assert_eq!(
            classify_quadratic(&split).unwrap(),
            QuadraticAlgebraClass::Split
        );

        // g² = 0: dual numbers
        let dual = {
            let g = TensorElement::from_word(Word::from_letters(&[0, 0]));
            quotient(&IdealGenerators::new(1, vec![g]).unwrap(), &cfg).unwrap()
        };
        assert_eq!(
            classify_quadratic(&dual).unwrap(),
            QuadraticAlgebraClass::DualNumbers
        );

        // minpoly X² − 3X + 1: field of discriminant 5
        let field = {
            let mut g = TensorElement::from_word(Word::from_letters(&[0, 0]));
            g.add_term(Word::letter(0), q_int(-3));
            g.add_term(Word::empty(), q_int(1));
            quotient(&IdealGenerators::new(1, vec![g]).unwrap(), &cfg).unwrap()
        };
        assert_eq!(
            classify_quadratic(&field).unwrap(),
            QuadraticAlgebraClass::Field(SquareClass::of_int(5))
        );

        // wrong dimension
        let four = quotient(
            &clifford_generators(&BilinearForm::new(QMatrix::identity(2)).unwrap()),
            &EngineConfig::for_alphabet(2),
        )
        .unwrap();
        assert!(matches!(
            classify_quadratic(&four),
            Err(Error::WrongDimension { .. })
        ));
    }

    #[test]
    fn verify_deg2_canonical_involution_matches() {
        let rho = Antiaut::canonical_involution(hamilton());
        let report = verify_deg2(&rho, &cfg4(), "canonical involution").unwrap();
        assert_eq!(
            report.classification,
            Some(QuadraticAlgebraClass::DualNumbers)
        );
        assert_eq!(report.predicted, QuadraticAlgebraClass::DualNumbers);
        assert!(report.matches);
    }

    #[test]
    fn invariance_trivial_and_conjugated() {
        let h = hamilton();
        let s = Antiaut::from_u(h.clone(), &h.from_i64(&[1, 1, 0, 0])).unwrap();
        assert!(invariance_check(&s, &h.unit(), &cfg4()).unwrap());
        assert!(invariance_check(&s, &h.basis_element(2), &cfg4()).unwrap());
        let rho = Antiaut::canonical_involution(h.clone());
        assert!(invariance_check(&rho, &h.from_i64(&[1, 0, 1, 1]), &cfg4()).unwrap());
    }

    #[test]
    fn phi_lemma_identities() {
        let f = skewed_plane_form();
        let s = Antiaut::adjoint(&f).unwrap();
        let phi = phi_map(&f);
        let a = asymmetry(&f);
        // σ∘φ(v⊗w) = φ(a(w)⊗v) on all basis pairs
        for v in 0..2 {
            for w in 0..2 {
                let lhs = s.apply(&phi.col(v * 2 + w));
                let mut rhs = vec![q_int(0); 4];
                for (k, c) in a.apply_basis(w).iter().enumerate() {
                    for (slot, e) in rhs.iter_mut().zip(phi.col(k * 2 + v)) {
                        *slot += c * &e;
                    }
                }
                assert_eq!(lhs, rhs);
            }
        }
        // γ_σ̃,2(φ(v⊗w)⊗φ(s⊗t)) = φ(v⊗a(s))⊗φ(a⁻¹(w)⊗t) on all basis 4-tuples
        let g2 = s.gamma2_tilde();
        let a_inv = a.matrix().inverse().unwrap();
        let algebra_tensor = |x: &[Rational], y: &[Rational]| -> Vec<Rational> {
            let mut out = vec![q_int(0); 16];
            for p in 0..4 {
                for qq in 0..4 {
                    out[p * 4 + qq] = &x[p] * &y[qq];
                }
            }
            out
        };
        for v in 0..2usize {
            for w in 0..2usize {
                for sv in 0..2usize {
                    for t in 0..2usize {
                        let lhs =
                            g2.mul_vec(&algebra_tensor(&phi.col(v * 2 + w), &phi.col(sv * 2 + t)));
                        // φ(v ⊗ a(s)) = Σ_k a[k][s]·φ(v⊗k)
                        let mut left = vec![q_int(0); 4];
                        for k in 0..2 {
                            let c = a.matrix().at(k, sv);
                            for (slot, e) in left.iter_mut().zip(phi.col(v * 2 + k)) {
                                *slot += c * &e;
                            }
                        }
                        let mut right = vec![q_int(0); 4];
                        for k in 0..2 {
                            let c = a_inv.at(k, w);
                            for (slot, e) in right.iter_mut().zip(phi.col(k * 2 + t)) {
                                *slot += c * &e;
                            }
                        }
                        assert_eq!(lhs, algebra_tensor(&left, &right));
                    }
                }
            }
        }
    }

    #[test]
    fn orthogonal_adjoint_class_is_the_discriminant() {
        // for symmetric forms the adjoint is an orthogonal involution and
        // the classification of C(A,σ_b) is the class of disc σ
        for rows in [
            [[1i64, 0], [0, 1]],
            [[2, 0], [0, 3]],
            [[1, 1], [1, 3]],
            [[-1, 2], [2, 1]],
        ] {
            let f = BilinearForm::new(QMatrix::from_i64(&[&rows[0], &rows[1]])).unwrap();
            let s = Antiaut::adjoint(&f).unwrap();
            assert!(s.is_involution());
            let c = clifford_antiaut(&s, &cfg4()).unwrap();
            let expected = QuadraticAlgebraClass::from_discriminant(s.disc().unwrap());
            assert_eq!(classify_quadratic(&c).unwrap(), expected);
            assert_eq!(s.disc().unwrap(), crate::forms::discriminant(&f).unwrap());
        }
    }

    #[test]
    fn split_check_identity_form() {
        // C(End V, σ_b) for b = I₂ is the quadratic algebra of class −1 and
        // C₀(V, ½b) has a generator of square −1/4
        let f = BilinearForm::new(QMatrix::identity(2)).unwrap();
        let report = split_check(&f, &cfg4()).unwrap();
        assert_eq!(report.csa_dim, 2);
        assert_eq!(report.even_dim, 2);
        assert_eq!(
            report.csa_class,
            Some(QuadraticAlgebraClass::Field(SquareClass::minus_one()))
        );
        assert!(report.passed());
    }

    #[test]
    fn split_check_skewed_plane() {
        // both sides collapse to the zero algebra; the identification holds
        let report = split_check(&skewed_plane_form(), &cfg4()).unwrap();
        assert_eq!(report.csa_dim, 0);
        assert_eq!(report.even_dim, 0);
        assert!(report.passed());
    }

    #[test]
    fn split_check_unipotent_minus() {
        let f = BilinearForm::new(
            QMatrix::from_rows(vec![vec![q_int(0), q_int(1)], vec![q_int(-1), q(-1, 2)]]).unwrap(),
        )
        .unwrap();
        let report = split_check(&f, &cfg4()).unwrap();
        assert_eq!(report.csa_dim, report.even_dim);
        assert!(report.passed());
    }
}
