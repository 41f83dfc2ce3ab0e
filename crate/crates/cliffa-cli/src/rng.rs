//! Seeded instance generators for the self-test and acceptance suites.

use cliffa_core::csa::{Antiaut, StructAlgebra};
use cliffa_core::exactmath::{q_int, Rational};
use cliffa_core::forms::BilinearForm;
use cliffa_core::QMatrix;
use num_traits::Zero;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform integer in [−height, height].
pub fn gen_int(rng: &mut ChaCha8Rng, height: i64) -> i64 {
    (rng.next_u64() % (2 * height as u64 + 1)) as i64 - height
}

/// Rational with numerator and denominator of height ≤ h (denominator ≥ 1).
pub fn gen_rational(rng: &mut ChaCha8Rng, h: i64) -> Rational {
    let num = gen_int(rng, h);
    let den = 1 + (rng.next_u64() % h as u64) as i64;
    Rational::new(num.into(), den.into())
}

/// Non-degenerate n×n form with rational entries of height ≤ h.
pub fn gen_form(rng: &mut ChaCha8Rng, n: usize, h: i64) -> BilinearForm {
    loop {
        let m = QMatrix::from_fn(n, n, |_, _| gen_rational(rng, h));
        if let Ok(f) = BilinearForm::new(m) {
            return f;
        }
    }
}

/// Non-degenerate symmetric n×n form with integer entries of height ≤ h.
pub fn gen_symmetric_form(rng: &mut ChaCha8Rng, n: usize, h: i64) -> BilinearForm {
    loop {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            for j in i..n {
                let v = q_int(gen_int(rng, h));
                m.set(i, j, v.clone());
                m.set(j, i, v);
            }
        }
        if let Ok(f) = BilinearForm::new(m) {
            return f;
        }
    }
}

/// Invertible element of a quaternion algebra with integer coordinates of
/// height ≤ h.
pub fn gen_invertible(rng: &mut ChaCha8Rng, algebra: &StructAlgebra, h: i64) -> Vec<Rational> {
    loop {
        let x: Vec<Rational> = (0..4).map(|_| q_int(gen_int(rng, h))).collect();
        if !algebra.nrd(&x).is_zero() {
            return x;
        }
    }
}

/// An antiautomorphism Int(u)∘ρ with u of height ≤ h.
pub fn gen_quaternion_antiaut(rng: &mut ChaCha8Rng, algebra: &StructAlgebra, h: i64) -> Antiaut {
    let u = gen_invertible(rng, algebra, h);
    Antiaut::from_u(algebra.clone(), &u).expect("u was checked invertible")
}

/// The four quaternion parameter pairs exercised throughout the suites.
pub const QUATERNION_PAIRS: [(i64, i64); 4] = [(-1, -1), (2, 3), (-1, 3), (5, -2)];
