//! Words, tensor elements and ideal generators for the free tensor algebra
//! T(W) over an indexed alphabet, plus the quotient engine that computes
//! finite-dimensional quotients by two-sided ideals generated in degree ≤ 2.

mod engine;

pub use engine::{ideal_slice, quotient, QuotientAlgebra, SliceSpan};

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::Rational;

/// A word over letters 0..m, i.e. a monomial of T(W). The empty word is the
/// unit of T(W) and is distinct from every letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: usize) -> Self {
        Word(alloc::vec![l as u8])
    }

    pub fn from_letters(letters: &[usize]) -> Self {
        Word(letters.iter().map(|&l| l as u8).collect())
    }

    pub fn letters(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.0.iter().map(|&l| l as usize)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn append(&self, letter: usize) -> Word {
        let mut v = self.0.clone();
        v.push(letter as u8);
        Word(v)
    }

    /// Label with a name per letter; the empty word prints as "1".
    pub fn label(&self, names: &[String]) -> String {
        if self.is_empty() {
            return String::from("1");
        }
        let mut out = String::new();
        for (i, l) in self.letters().enumerate() {
            if i > 0 {
                out.push('*');
            }
            out.push_str(&names[l]);
        }
        out
    }
}

/// Degree-lexicographic order: by length first, then lexicographically by
/// letter index. The termination argument of the reduction engine rests on
/// this being a well-order compatible with concatenation.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "e{l}")?;
        }
        Ok(())
    }
}

/// A finite rational linear combination of words; the computational form of
/// an element of T(W). No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<Word, Rational>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    pub fn unit() -> Self {
        TensorElement::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        let mut t = TensorElement::zero();
        t.add_term(w, num_traits::One::one());
        t
    }

    pub fn scalar(c: Rational) -> Self {
        let mut t = TensorElement::zero();
        t.add_term(Word::empty(), c);
        t
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub(crate) fn into_terms(self) -> BTreeMap<Word, Rational> {
        self.terms
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest word with nonzero coefficient, in deg-lex order.
    pub fn leading(&self) -> Option<(&Word, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Maximum word length, `None` for the zero element.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (w, c) in other.terms.iter() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (w, c) in other.terms.iter() {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> TensorElement {
        if c.is_zero() {
            return TensorElement::zero();
        }
        TensorElement {
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    /// Concatenation product in T(W).
    pub fn mul(&self, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (wa, ca) in self.terms.iter() {
            for (wb, cb) in other.terms.iter() {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }

    pub fn word_mul_left(&self, x: &Word) -> TensorElement {
        TensorElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (x.concat(w), c.clone()))
                .collect(),
        }
    }

    pub fn word_mul_right(&self, y: &Word) -> TensorElement {
        TensorElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.concat(y), c.clone()))
                .collect(),
        }
    }

    /// `Some(parity)` when all words have lengths of one parity.
    pub fn homogeneous_parity(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|w| w.len() % 2);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn label(&self, names: &[String]) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            out.push_str(&alloc::format!("{}·{}", c, w.label(names)));
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{w}")?;
        }
        Ok(())
    }
}

/// Generators of a two-sided ideal of T(W), each of degree ≤ 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealGenerators {
    alphabet: usize,
    gens: Vec<TensorElement>,
}

impl IdealGenerators {
    pub fn new(alphabet: usize, gens: Vec<TensorElement>) -> Result<Self> {
        for g in &gens {
            if g.is_zero() {
                return Err(Error::ShapeMismatch);
            }
            if g.degree().unwrap_or(0) > 2 {
                return Err(Error::DegreeOverflow {
                    degree: g.degree().unwrap(),
                    max: 2,
                });
            }
            if g.terms().any(|(w, _)| w.letters().any(|l| l >= alphabet)) {
                return Err(Error::ShapeMismatch);
            }
        }
        Ok(IdealGenerators { alphabet, gens })
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn generators(&self) -> &[TensorElement] {
        &self.gens
    }

    /// True when every generator is parity-homogeneous with even word
    /// lengths; the quotient is then ℤ/2-graded and has an even part.
    pub fn parity_even(&self) -> bool {
        self.gens.iter().all(|g| g.homogeneous_parity() == Some(0))
    }
}

/// Caps for the quotient engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineConfig {
    /// Largest working degree D tried before giving up.
    pub degree_cap: usize,
    /// Largest slack k tried at each working degree.
    pub slack_cap: usize,
    /// Largest accepted quotient dimension.
    pub dim_cap: usize,
}

impl EngineConfig {
    /// Defaults for an alphabet of size m: degree cap m + 4, slack cap 4,
    /// dimension cap 2^m (the bound for Clifford quotients of non-degenerate
    /// forms).
    pub fn for_alphabet(m: usize) -> Self {
        EngineConfig {
            degree_cap: m + 4,
            slack_cap: 4,
            dim_cap: 1usize.checked_shl(m as u32).unwrap_or(usize::MAX),
        }
    }
}
