//! Univariate polynomials over ℚ, minimal polynomials of matrices, and
//! invariant factors (Smith form of XI − A over ℚ[X]) for exact similarity
//! tests.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::matrix::QMatrix;
use super::rational::Rational;

/// Dense polynomial with rational coefficients, ascending degree order.
/// Canonical form: empty for zero, nonzero leading coefficient otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        QPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = QPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| super::rational::q_int(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(l) => {
                let inv = l.recip();
                QPoly::from_coeffs(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        QPoly::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        QPoly::from_coeffs((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: self = q·div + r with deg r < deg div.
    pub fn divmod(&self, div: &QPoly) -> (QPoly, QPoly) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dd = div.degree().unwrap();
        let lead_inv = div.leading().unwrap().recip();
        let mut rem = self.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let f = rem.leading().unwrap() * &lead_inv;
            let shift = dr - dd;
            quot[shift] = f.clone();
            for (i, c) in div.coeffs.iter().enumerate() {
                let v = rem.coeff(shift + i) - c * &f;
                rem.coeffs[shift + i] = v;
            }
            rem.normalize();
        }
        (QPoly::from_coeffs(quot), rem)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluate at a square matrix (Horner).
    pub fn eval_matrix(&self, m: &QMatrix) -> QMatrix {
        assert_eq!(m.rows(), m.cols());
        let n = m.rows();
        let mut acc = QMatrix::zero(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &QMatrix::identity(n).scale(c);
        }
        acc
    }

    /// For a monic quadratic X² + pX + q, the discriminant p² − 4q.
    pub fn quadratic_discriminant(&self) -> Option<Rational> {
        if self.degree() != Some(2) || !self.is_monic() {
            return None;
        }
        let p = self.coeff(1);
        let q = self.coeff(0);
        Some(&p * &p - Rational::from_integer(4.into()) * q)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag_one = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                1 => {
                    if mag_one {
                        write!(f, "X")?
                    } else {
                        write!(f, "{mag}X")?
                    }
                }
                _ => {
                    if mag_one {
                        write!(f, "X^{i}")?
                    } else {
                        write!(f, "{mag}X^{i}")?
                    }
                }
            }
        }
        Ok(())
    }
}

/// Incrementally detects the first linear dependency in a sequence of
/// vectors. `push` returns the coefficients expressing the new vector over
/// the previously accepted ones as soon as it is dependent.
pub struct DependencyTracker {
    dim: usize,
    // reduced rows with their pivot column, plus the expression of each row
    // over the pushed vectors
    rows: Vec<(usize, Vec<Rational>, Vec<Rational>)>,
    pushed: usize,
}

impl DependencyTracker {
    pub fn new(dim: usize) -> Self {
        DependencyTracker {
            dim,
            rows: Vec::new(),
            pushed: 0,
        }
    }

    pub fn push(&mut self, v: Vec<Rational>) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.dim);
        let mut vec = v;
        let mut combo = vec![Rational::zero(); self.pushed + 1];
        combo[self.pushed] = Rational::one();
        for (pivot, row, expr) in &self.rows {
            let c = vec[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                let t = &row[j] * &c;
                vec[j] -= t;
            }
            for (j, e) in expr.iter().enumerate() {
                let t = e * &c;
                combo[j] -= t;
            }
        }
        self.pushed += 1;
        match vec.iter().position(|c| !c.is_zero()) {
            None => {
                // dependent: vec_new = -sum of earlier contributions
                combo.pop();
                Some(combo.iter().map(|c| -c).collect())
            }
            Some(pivot) => {
                let inv = vec[pivot].recip();
                for c in vec.iter_mut() {
                    *c = &*c * &inv;
                }
                for c in combo.iter_mut() {
                    *c = &*c * &inv;
                }
                combo.resize(self.pushed, Rational::zero());
                self.rows.push((pivot, vec, combo));
                None
            }
        }
    }
}

/// Monic polynomial of least degree annihilating the matrix, computed from
/// the first linear dependency among I, M, M², …
pub fn minimal_polynomial(m: &QMatrix) -> QPoly {
    assert_eq!(m.rows(), m.cols(), "minimal polynomial of a square matrix");
    let n = m.rows();
    let mut tracker = DependencyTracker::new(n * n);
    let mut power = QMatrix::identity(n);
    loop {
        let mut flat = Vec::with_capacity(n * n);
        for i in 0..n {
            flat.extend(power.row(i).iter().cloned());
        }
        if let Some(combo) = tracker.push(flat) {
            let k = combo.len();
            let mut coeffs = vec![Rational::zero(); k + 1];
            coeffs[k] = Rational::one();
            for (i, c) in combo.into_iter().enumerate() {
                coeffs[i] = -c;
            }
            return QPoly::from_coeffs(coeffs);
        }
        power = &power * m;
    }
}

/// Invariant factors of a square matrix: the nonunit diagonal entries of the
/// Smith normal form of XI − A over ℚ[X], normalized monic and listed in
/// divisibility order. Two matrices are similar iff these lists agree.
pub fn invariant_factors(m: &QMatrix) -> Vec<QPoly> {
    assert_eq!(m.rows(), m.cols());
    let n = m.rows();
    // P = XI - A as a polynomial matrix
    let mut p: Vec<Vec<QPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let a = QPoly::constant(-m.at(i, j).clone());
                    if i == j {
                        a.add(&QPoly::x())
                    } else {
                        a
                    }
                })
                .collect()
        })
        .collect();

    let mut factors = Vec::new();
    for t in 0..n {
        loop {
            // pick the nonzero entry of minimal degree in the submatrix
            let mut best: Option<(usize, usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if let Some(d) = p[i][j].degree() {
                        if best.map_or(true, |(_, _, bd)| d < bd) {
                            best = Some((i, j, d));
                        }
                    }
                }
            }
            let Some((bi, bj, _)) = best else {
                // submatrix is zero
                return normalize_factors(factors);
            };
            p.swap(t, bi);
            for row in p.iter_mut() {
                row.swap(t, bj);
            }
            // clear column t and row t by division; restart if a remainder
            // of smaller degree appears
            let mut dirty = false;
            for i in t + 1..n {
                if !p[i][t].is_zero() {
                    let (q, r) = p[i][t].divmod(&p[t][t]);
                    for j in t..n {
                        let sub = q.mul(&p[t][j]);
                        p[i][j] = p[i][j].sub(&sub);
                    }
                    if !r.is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..n {
                if !p[t][j].is_zero() {
                    let (q, r) = p[t][j].divmod(&p[t][t]);
                    for i in t..n {
                        let sub = q.mul(&p[i][t]);
                        p[i][j] = p[i][j].sub(&sub);
                    }
                    if !r.is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide every remaining entry
            let mut fixed = true;
            'scan: for i in t + 1..n {
                for j in t + 1..n {
                    if !p[i][j].is_zero() {
                        let (_, r) = p[i][j].divmod(&p[t][t]);
                        if !r.is_zero() {
                            // fold row i into row t and retry
                            for jj in t..n {
                                let add = p[i][jj].clone();
                                p[t][jj] = p[t][jj].add(&add);
                            }
                            fixed = false;
                            break 'scan;
                        }
                    }
                }
            }
            if fixed {
                break;
            }
        }
        factors.push(p[t][t].clone());
    }
    normalize_factors(factors)
}

fn normalize_factors(factors: Vec<QPoly>) -> Vec<QPoly> {
    factors
        .into_iter()
        .map(|f| f.monic())
        .filter(|f| f.degree().is_some_and(|d| d > 0))
        .collect()
}

/// Exact similarity test via invariant factors.
pub fn is_similar(a: &QMatrix, b: &QMatrix) -> bool {
    a.rows() == b.rows() && invariant_factors(a) == invariant_factors(b)
}
