//! Rational scalars and canonical square classes in ℚ×/(ℚ×)² ∪ {0}.

use alloc::string::String;
use alloc::string::ToString;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. `num_rational` keeps the invariants we need:
/// positive denominator and gcd(|numerator|, denominator) = 1.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn q_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for n/d.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Trial-division bound used by [`square_class`].
pub const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;

/// An element of ℚ×/(ℚ×)² ∪ {0}, canonicalized as a sign together with a
/// squarefree positive integer (the radical), or zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SquareClass {
    Zero,
    NonZero { negative: bool, radical: BigUint },
}

impl SquareClass {
    pub fn one() -> Self {
        SquareClass::NonZero {
            negative: false,
            radical: BigUint::one(),
        }
    }

    pub fn minus_one() -> Self {
        SquareClass::NonZero {
            negative: true,
            radical: BigUint::one(),
        }
    }

    /// Square class of a small integer, for tests and golden values.
    pub fn of_int(n: i64) -> Self {
        square_class(&q_int(n)).expect("small integer square class")
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SquareClass::Zero)
    }

    /// The trivial class (+1, 1), i.e. the class of nonzero squares.
    pub fn is_trivial(&self) -> bool {
        match self {
            SquareClass::Zero => false,
            SquareClass::NonZero { negative, radical } => !negative && radical.is_one(),
        }
    }

    /// Product in the square-class group (zero absorbs).
    pub fn mul(&self, other: &SquareClass) -> SquareClass {
        match (self, other) {
            (SquareClass::Zero, _) | (_, SquareClass::Zero) => SquareClass::Zero,
            (
                SquareClass::NonZero {
                    negative: n1,
                    radical: r1,
                },
                SquareClass::NonZero {
                    negative: n2,
                    radical: r2,
                },
            ) => {
                let g = num_integer::gcd(r1.clone(), r2.clone());
                SquareClass::NonZero {
                    negative: n1 ^ n2,
                    radical: (r1 / &g) * (r2 / &g),
                }
            }
        }
    }

    /// Signed label, e.g. "-3", "2", "1", "0".
    pub fn label(&self) -> String {
        match self {
            SquareClass::Zero => "0".to_string(),
            SquareClass::NonZero { negative, radical } => {
                if *negative {
                    alloc::format!("-{radical}")
                } else {
                    radical.to_string()
                }
            }
        }
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Canonical square class of a rational, with the default trial bound.
pub fn square_class(value: &Rational) -> Result<SquareClass> {
    square_class_bounded(value, DEFAULT_TRIAL_BOUND)
}

/// Canonical square class of a rational.
///
/// p/q and p·q differ by the square q², so the class is computed from the
/// squarefree part of |numerator·denominator|. Factoring is by trial division
/// up to `bound`; a surviving cofactor is certified squarefree when it is not
/// a perfect square and is below `bound`³ (all its prime factors exceed
/// `bound`, so it has at most two of them). Anything bigger raises
/// [`Error::FactorizationLimit`]: honest failure beats a wrong class.
pub fn square_class_bounded(value: &Rational, bound: u64) -> Result<SquareClass> {
    if value.is_zero() {
        return Ok(SquareClass::Zero);
    }
    let negative = value.is_negative();
    let n = (value.numer() * value.denom()).abs().to_biguint().unwrap();
    let radical = squarefree_part(n, bound)?;
    Ok(SquareClass::NonZero { negative, radical })
}

fn squarefree_part(n: BigUint, bound: u64) -> Result<BigUint> {
    if let Some(small) = n.to_u128() {
        return squarefree_u128(small, bound).map(BigUint::from);
    }
    squarefree_big(n, bound)
}

fn squarefree_u128(mut n: u128, bound: u64) -> Result<u128> {
    let mut radical: u128 = 1;
    let mut d: u128 = 2;
    while d <= bound as u128 && d * d <= n {
        if n % d == 0 {
            let mut exp = 0u32;
            while n % d == 0 {
                n /= d;
                exp += 1;
            }
            if exp % 2 == 1 {
                radical *= d;
            }
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    Ok(radical * certify_cofactor_u128(n, d, bound)?)
}

/// Decide the squarefree part of a cofactor whose prime factors all exceed
/// the last trial divisor. Returns the cofactor's contribution to the radical.
fn certify_cofactor_u128(n: u128, next_d: u128, bound: u64) -> Result<u128> {
    if n == 1 {
        return Ok(1);
    }
    if next_d * next_d > n {
        // no divisor up to √n: prime
        return Ok(n);
    }
    let s = n.sqrt();
    if s * s == n {
        return Ok(1);
    }
    let b = bound as u128;
    if n < b * b * b {
        // at most two prime factors, not a square: squarefree
        return Ok(n);
    }
    Err(Error::FactorizationLimit)
}

fn squarefree_big(mut n: BigUint, bound: u64) -> Result<BigUint> {
    let mut radical = BigUint::one();
    let mut d: u64 = 2;
    loop {
        let db = BigUint::from(d);
        if d > bound || &db * &db > n {
            break;
        }
        if (&n % &db).is_zero() {
            let mut exp = 0u32;
            while (&n % &db).is_zero() {
                n /= &db;
                exp += 1;
            }
            if exp % 2 == 1 {
                radical *= &db;
            }
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    if n.is_one() {
        return Ok(radical);
    }
    let db = BigUint::from(d);
    if &db * &db > n {
        return Ok(radical * n);
    }
    let s = n.sqrt();
    if &s * &s == n {
        return Ok(radical);
    }
    let b = BigUint::from(bound);
    if n < &b * &b * &b {
        return Ok(radical * n);
    }
    Err(Error::FactorizationLimit)
}
