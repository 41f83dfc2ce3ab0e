//! The quotient engine.
//!
//! For a two-sided ideal I generated in degree ≤ 2, the degree-≤D slice of I
//! is approximated by the span S(D+k) of all products x·g·y of top degree
//! ≤ D+k, row-reduced over words in deg-lex order. Echelon rows whose
//! leading word has length ≤ D are supported entirely on T_{≤D}(W) and span
//! exactly S(D+k) ∩ T_{≤D}(W). Normal forms eliminate every occurrence of a
//! leading word; since tails are strictly deg-lex smaller, reduction
//! terminates and the normal form is the canonical representative modulo the
//! computed slice.
//!
//! A working pair (D, k) is accepted once the candidate basis (the non-lead
//! words of length ≤ D) is unchanged from (D−1, k) and (D, k−1) and every
//! basis word extended by a letter reduces back into the basis span. The
//! result is certified after tabulation: all generators reduce to zero and
//! the multiplication table is associative on every basis triple; failures
//! surface as a resource-cap error, never as a wrong table.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{DependencyTracker, QPoly, Rational};

use super::{EngineConfig, IdealGenerators, TensorElement, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
struct EchelonRow {
    /// Top degree of the product span this row first appeared in.
    birth: usize,
    /// The row is lead + tail with tail strictly deg-lex below the lead.
    tail: TensorElement,
}

/// Echelon basis of an ideal slice: monic rows keyed by leading word.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub(crate) struct Echelon {
    rows: BTreeMap<Word, EchelonRow>,
}

impl Echelon {
    fn new() -> Self {
        Echelon::default()
    }

    /// Canonical normal form modulo the rows with birth ≤ level: every
    /// occurrence of a leading word is eliminated, largest first.
    fn reduce(&self, elt: &TensorElement, level: usize) -> TensorElement {
        let mut work: BTreeMap<Word, Rational> = elt.clone().into_terms();
        let mut out = TensorElement::zero();
        while let Some((w, c)) = work.pop_last() {
            if c.is_zero() {
                continue;
            }
            match self.rows.get(&w).filter(|r| r.birth <= level) {
                Some(row) => {
                    // w ≡ −tail
                    for (tw, tc) in row.tail.terms() {
                        let delta = &c * tc;
                        use alloc::collections::btree_map::Entry;
                        match work.entry(tw.clone()) {
                            Entry::Vacant(e) => {
                                e.insert(-delta);
                            }
                            Entry::Occupied(mut e) => {
                                *e.get_mut() -= delta;
                                if e.get().is_zero() {
                                    e.remove();
                                }
                            }
                        }
                    }
                }
                None => out.add_term(w, c),
            }
        }
        out
    }

    /// Reduce and, if nonzero, install as a new monic row born at `level`.
    /// Returns the new leading word.
    fn insert(&mut self, elt: &TensorElement, level: usize) -> Option<Word> {
        let nf = self.reduce(elt, level);
        let (lead, coeff) = nf.leading()?;
        let lead = lead.clone();
        let inv = coeff.recip();
        let mut tail = nf.scale(&inv);
        tail.add_term(lead.clone(), -Rational::one());
        self.rows
            .insert(lead.clone(), EchelonRow { birth: level, tail });
        Some(lead)
    }

    fn row_element(&self, lead: &Word) -> TensorElement {
        let mut e = self.rows[lead].tail.clone();
        e.add_term(lead.clone(), Rational::one());
        e
    }

    fn is_lead(&self, w: &Word, level: usize) -> bool {
        self.rows.get(w).is_some_and(|r| r.birth <= level)
    }

    fn lead_count_up_to(&self, max_len: usize, level: usize) -> usize {
        self.rows
            .iter()
            .filter(|(w, r)| w.len() <= max_len && r.birth <= level)
            .count()
    }

    fn filtered(&self, level: usize) -> Echelon {
        Echelon {
            rows: self
                .rows
                .iter()
                .filter(|(_, r)| r.birth <= level)
                .map(|(w, r)| (w.clone(), r.clone()))
                .collect(),
        }
    }

    fn rows_with_lead_up_to(&self, max_len: usize, level: usize) -> Vec<TensorElement> {
        self.rows
            .iter()
            .filter(|(w, r)| w.len() <= max_len && r.birth <= level)
            .map(|(w, r)| {
                let mut e = r.tail.clone();
                e.add_term(w.clone(), Rational::one());
                e
            })
            .collect()
    }
}

/// Iterate all words of exactly `len` letters in lexicographic order.
fn for_each_word(alphabet: usize, len: usize, mut f: impl FnMut(&Word)) {
    if len == 0 {
        f(&Word::empty());
        return;
    }
    if alphabet == 0 {
        return;
    }
    let mut counters = vec![0usize; len];
    loop {
        f(&Word::from_letters(&counters));
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            counters[i] += 1;
            if counters[i] < alphabet {
                break;
            }
            counters[i] = 0;
        }
    }
}

fn words_up_to(alphabet: usize, max_len: usize) -> Option<usize> {
    if alphabet == 0 {
        return Some(1);
    }
    let mut total: usize = 0;
    let mut pow: usize = 1;
    for _ in 0..=max_len {
        total = total.checked_add(pow)?;
        pow = pow.checked_mul(alphabet)?;
    }
    Some(total)
}

struct EngineState<'a> {
    gens: &'a IdealGenerators,
    cfg: EngineConfig,
    echelon: Echelon,
    next_level: usize,
    /// Rows not yet extended by letters on both sides.
    pending: Vec<Word>,
    /// Candidate bases per (D, k); `None` marks "over the dimension cap".
    bases: BTreeMap<(usize, usize), Option<Vec<Word>>>,
}

impl<'a> EngineState<'a> {
    fn new(gens: &'a IdealGenerators, cfg: EngineConfig) -> Self {
        EngineState {
            gens,
            cfg,
            echelon: Echelon::new(),
            next_level: 0,
            pending: Vec::new(),
            bases: BTreeMap::new(),
        }
    }

    /// Grow the echelon to cover the span of all products x·g·y of top
    /// degree ≤ level. Incrementally, the degree-t span is the degree-(t−1)
    /// span extended by one letter on either side, plus the generators of
    /// top degree exactly t; extending the fresh echelon rows of the
    /// previous step covers the extensions of the whole span.
    fn advance(&mut self, level: usize) {
        let alphabet = self.gens.alphabet();
        while self.next_level <= level {
            let t = self.next_level;
            let mut fresh: Vec<Word> = Vec::new();
            for g in self.gens.generators() {
                if g.degree().unwrap_or(0) == t {
                    fresh.extend(self.echelon.insert(g, t));
                }
            }
            let to_extend = core::mem::take(&mut self.pending);
            for lead in to_extend {
                let row = self.echelon.row_element(&lead);
                for l in 0..alphabet {
                    let letter = Word::letter(l);
                    fresh.extend(self.echelon.insert(&row.word_mul_left(&letter), t));
                    fresh.extend(self.echelon.insert(&row.word_mul_right(&letter), t));
                }
            }
            // rows born during this step are extended at the next one
            fresh.sort();
            self.pending = fresh;
            self.next_level += 1;
        }
    }

    /// Candidate basis at working degree D with slack k: the non-lead words
    /// of length ≤ D in the echelon of S(D+k). `None` when it would exceed
    /// the dimension cap.
    fn basis(&mut self, d: usize, k: usize) -> Option<Vec<Word>> {
        let key = (d, k);
        if let Some(cached) = self.bases.get(&key) {
            return cached.clone();
        }
        let level = d + k;
        self.advance(level);
        let candidate_count = words_up_to(self.gens.alphabet(), d)
            .map(|total| total - self.echelon.lead_count_up_to(d, level));
        let value = match candidate_count {
            Some(count) if count <= self.cfg.dim_cap => {
                let mut basis = Vec::with_capacity(count);
                for len in 0..=d {
                    for_each_word(self.gens.alphabet(), len, |w| {
                        if !self.echelon.is_lead(w, level) {
                            basis.push(w.clone());
                        }
                    });
                }
                Some(basis)
            }
            _ => None,
        };
        self.bases.insert(key, value.clone());
        value
    }

    /// Closure, tabulation and certification at an accepted (D, k). Returns
    /// `None` when closure or certification fails, so the scan continues.
    fn try_finalize(&mut self, basis: &[Word], d: usize, k: usize) -> Option<QuotientAlgebra> {
        let level = d + k;
        let dim = basis.len();
        let index: BTreeMap<Word, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();

        let coords_of = |nf: &TensorElement| -> Option<Vec<Rational>> {
            let mut v = vec![Rational::zero(); dim];
            for (w, c) in nf.terms() {
                v[*index.get(w)?] = c.clone();
            }
            Some(v)
        };

        // closure: every basis word extended by a letter reduces into the span
        let mut letter_action = Vec::with_capacity(self.gens.alphabet());
        for l in 0..self.gens.alphabet() {
            let mut cols = Vec::with_capacity(dim);
            for w in basis {
                let nf = self
                    .echelon
                    .reduce(&TensorElement::from_word(w.append(l)), level);
                cols.push(coords_of(&nf)?);
            }
            letter_action.push(cols);
        }

        let unit = index.get(&Word::empty()).copied();

        // tabulate products by concatenation + reduction, one letter at a time
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let mut v = vec![Rational::zero(); dim];
                v[i] = Rational::one();
                for l in basis[j].letters() {
                    let mut next = vec![Rational::zero(); dim];
                    for (w, c) in v.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for (r, e) in letter_action[l][w].iter().enumerate() {
                            if !e.is_zero() {
                                next[r] += c * e;
                            }
                        }
                    }
                    v = next;
                }
                table[i][j] = v;
            }
        }

        let algebra = QuotientAlgebra {
            alphabet: self.gens.alphabet(),
            basis: basis.to_vec(),
            index,
            unit,
            table,
            letters: Some(
                (0..self.gens.alphabet())
                    .map(|l| match unit {
                        Some(u) => letter_action[l][u].clone(),
                        None => vec![],
                    })
                    .collect(),
            ),
            echelon: self.echelon.filtered(level),
            level,
            degree: d,
            parity_graded: self.gens.parity_even(),
        };

        // certification: generators vanish, table is unital and associative
        for g in self.gens.generators() {
            if !self.echelon.reduce(g, level).is_zero() {
                return None;
            }
        }
        if !algebra.verify_table() {
            return None;
        }
        Some(algebra)
    }
}

/// Compute the quotient T(W)/(gens) as a finite-dimensional algebra with a
/// certified multiplication table.
pub fn quotient(gens: &IdealGenerators, cfg: &EngineConfig) -> Result<QuotientAlgebra> {
    let mut state = EngineState::new(gens, *cfg);
    for d in 2..=cfg.degree_cap {
        for k in 0..=cfg.slack_cap {
            let Some(basis) = state.basis(d, k) else {
                continue;
            };
            if k == 0 {
                continue;
            }
            let prev_degree = state.basis(d.saturating_sub(1), k);
            let prev_slack = state.basis(d, k - 1);
            if prev_degree.as_deref() != Some(&basis) || prev_slack.as_deref() != Some(&basis) {
                continue;
            }
            if let Some(algebra) = state.try_finalize(&basis, d, k) {
                return Ok(algebra);
            }
        }
    }
    Err(Error::ResourceCap {
        degree_cap: cfg.degree_cap,
        slack_cap: cfg.slack_cap,
        dim_cap: cfg.dim_cap,
    })
}

/// Echelon basis of the degree-≤`degree` slice of the ideal, computed from
/// products of top degree ≤ degree + slack. The span grows with slack and is
/// exactly the slice once the slack saturates.
pub fn ideal_slice(gens: &IdealGenerators, degree: usize, slack: usize) -> SliceSpan {
    let mut state = EngineState::new(gens, EngineConfig::for_alphabet(gens.alphabet()));
    state.advance(degree + slack);
    SliceSpan {
        echelon: state.echelon,
        degree,
        level: degree + slack,
    }
}

/// A computed slice of an ideal: a subspace of T_{≤degree}(W) presented by
/// echelon rows.
#[derive(Debug, Clone)]
pub struct SliceSpan {
    echelon: Echelon,
    degree: usize,
    level: usize,
}

impl SliceSpan {
    /// The rows supported on words of length ≤ degree.
    pub fn rows(&self) -> Vec<TensorElement> {
        self.echelon.rows_with_lead_up_to(self.degree, self.level)
    }

    /// Membership test against the computed slice.
    pub fn contains(&self, elt: &TensorElement) -> bool {
        if elt.degree().unwrap_or(0) > self.degree {
            return false;
        }
        self.reduce(elt).is_zero()
    }

    pub fn reduce(&self, elt: &TensorElement) -> TensorElement {
        self.echelon.reduce(elt, self.level)
    }

    /// Build a slice span directly from explicit elements (all of degree ≤
    /// `degree`), for subspace comparisons.
    pub fn from_elements(degree: usize, elements: &[TensorElement]) -> SliceSpan {
        let mut echelon = Echelon::new();
        for e in elements {
            assert!(e.degree().unwrap_or(0) <= degree, "slice element too deep");
            echelon.insert(e, 0);
        }
        SliceSpan {
            echelon,
            degree,
            level: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon.lead_count_up_to(self.degree, self.level)
    }
}

/// A finite-dimensional quotient of a tensor algebra: basis of normal-form
/// words, certified structure constants, letter images and the quotient map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientAlgebra {
    alphabet: usize,
    basis: Vec<Word>,
    index: BTreeMap<Word, usize>,
    unit: Option<usize>,
    table: Vec<Vec<Vec<Rational>>>,
    /// Coordinate vector of each letter; `None` for derived subalgebras
    /// whose letters do not live in the algebra.
    letters: Option<Vec<Vec<Rational>>>,
    echelon: Echelon,
    level: usize,
    degree: usize,
    parity_graded: bool,
}

impl QuotientAlgebra {
    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn basis_index(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn unit_index(&self) -> Option<usize> {
        self.unit
    }

    pub fn unit_vector(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        if let Some(u) = self.unit {
            v[u] = Rational::one();
        }
        v
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    /// Structure constants: the coordinates of basis[i]·basis[j].
    pub fn structure_constant(&self, i: usize, j: usize) -> &[Rational] {
        &self.table[i][j]
    }

    pub fn letter_image(&self, l: usize) -> Option<&[Rational]> {
        self.letters.as_ref().map(|ls| ls[l].as_slice())
    }

    /// Stabilized working degree D.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn parity_graded(&self) -> bool {
        self.parity_graded
    }

    /// Normal-form coordinates of a tensor element of degree ≤ D.
    pub fn element_image(&self, t: &TensorElement) -> Result<Vec<Rational>> {
        let deg = t.degree().unwrap_or(0);
        if deg > self.degree {
            return Err(Error::DegreeOverflow {
                degree: deg,
                max: self.degree,
            });
        }
        let nf = self.echelon.reduce(t, self.level);
        let mut v = vec![Rational::zero(); self.dim()];
        for (w, c) in nf.terms() {
            let i = self
                .index
                .get(w)
                .expect("normal form supported on the basis");
            v[*i] = c.clone();
        }
        Ok(v)
    }

    /// Bilinear product from the structure-constant table.
    pub fn mul_vec(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let dim = self.dim();
        assert!(u.len() == dim && v.len() == dim, "vector length mismatch");
        let mut out = vec![Rational::zero(); dim];
        for (i, cu) in u.iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            for (j, cv) in v.iter().enumerate() {
                if cv.is_zero() {
                    continue;
                }
                let f = cu * cv;
                for (r, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[r] += &f * t;
                    }
                }
            }
        }
        out
    }

    /// Monic minimal polynomial of an element, from the first linear
    /// dependency among its powers.
    pub fn minpoly_vec(&self, u: &[Rational]) -> QPoly {
        let mut tracker = DependencyTracker::new(self.dim());
        let mut power = self.unit_vector();
        loop {
            if let Some(combo) = tracker.push(power.clone()) {
                let k = combo.len();
                let mut coeffs = vec![Rational::zero(); k + 1];
                coeffs[k] = Rational::one();
                for (i, c) in combo.into_iter().enumerate() {
                    coeffs[i] = -c;
                }
                return QPoly::from_coeffs(coeffs);
            }
            power = self.mul_vec(&power, u);
        }
    }

    /// Exhaustive unit and associativity check of the table. Exposed so the
    /// verification suites can re-certify any algebra.
    pub fn verify_table(&self) -> bool {
        let dim = self.dim();
        if let Some(u) = self.unit {
            for j in 0..dim {
                if self.table[u][j] != self.basis_vector(j)
                    || self.table[j][u] != self.basis_vector(j)
                {
                    return false;
                }
            }
        } else if dim != 0 {
            return false;
        }
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    // (e_i e_j) e_k vs e_i (e_j e_k)
                    let mut lhs = vec![Rational::zero(); dim];
                    for (r, c) in self.table[i][j].iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for (s, t) in self.table[r][k].iter().enumerate() {
                            if !t.is_zero() {
                                lhs[s] += c * t;
                            }
                        }
                    }
                    let mut rhs = vec![Rational::zero(); dim];
                    for (r, c) in self.table[j][k].iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for (s, t) in self.table[i][r].iter().enumerate() {
                            if !t.is_zero() {
                                rhs[s] += c * t;
                            }
                        }
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True when every generator of the defining ideal maps to zero.
    pub fn generators_vanish(&self, gens: &IdealGenerators) -> bool {
        gens.generators()
            .iter()
            .all(|g| self.echelon.reduce(g, self.level).is_zero())
    }

    /// The even subalgebra, re-tabulated standalone. Requires the defining
    /// ideal to be parity-graded.
    pub fn even_part(&self) -> Result<QuotientAlgebra> {
        if !self.parity_graded {
            return Err(Error::NotGraded);
        }
        let even: Vec<usize> = (0..self.dim())
            .filter(|&i| self.basis[i].len() % 2 == 0)
            .collect();
        let basis: Vec<Word> = even.iter().map(|&i| self.basis[i].clone()).collect();
        let index: BTreeMap<Word, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let mut table = vec![vec![Vec::new(); even.len()]; even.len()];
        for (a, &i) in even.iter().enumerate() {
            for (b, &j) in even.iter().enumerate() {
                let full = &self.table[i][j];
                let mut v = vec![Rational::zero(); even.len()];
                for (r, c) in full.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    match index.get(&self.basis[r]) {
                        Some(&s) => v[s] = c.clone(),
                        // parity gradedness makes products of even words even
                        None => return Err(Error::NotGraded),
                    }
                }
                table[a][b] = v;
            }
        }
        let unit = self.unit.and_then(|u| index.get(&self.basis[u]).copied());
        Ok(QuotientAlgebra {
            alphabet: self.alphabet,
            basis,
            index,
            unit,
            table,
            letters: None,
            echelon: self.echelon.clone(),
            level: self.level,
            degree: self.degree,
            parity_graded: true,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::{EngineConfig, IdealGenerators, TensorElement, Word};
    use super::*;
    use crate::exactmath::{q, q_int};

    fn elem(terms: &[(&[usize], (i64, i64))]) -> TensorElement {
        let mut e = TensorElement::zero();
        for (letters, (n, d)) in terms {
            e.add_term(Word::from_letters(letters), q(*n, *d));
        }
        e
    }

    fn rank_one_clifford() -> IdealGenerators {
        // e0⊗e0 − 1
        IdealGenerators::new(1, alloc::vec![elem(&[(&[0, 0], (1, 1)), (&[], (-1, 1))])]).unwrap()
    }

    #[test]
    fn rank_one() {
        let gens = rank_one_clifford();
        let q = quotient(&gens, &EngineConfig::for_alphabet(1)).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.basis(), &[Word::empty(), Word::letter(0)]);
        assert_eq!(q.unit_index(), Some(0));
        // e0·e0 = 1
        assert_eq!(q.structure_constant(1, 1), &[q_int(1), q_int(0)]);
        assert_eq!(
            q.minpoly_vec(&q.basis_vector(1)),
            crate::exactmath::QPoly::from_i64_coeffs(&[-1, 0, 1])
        );
        // generators and the unit map where they must
        assert!(q
            .element_image(&gens.generators()[0])
            .unwrap()
            .iter()
            .all(num_traits::Zero::is_zero));
        assert_eq!(
            q.element_image(&TensorElement::unit()).unwrap(),
            q.unit_vector()
        );
    }

    #[test]
    fn minpoly_of_unit_is_linear() {
        let q = quotient(&rank_one_clifford(), &EngineConfig::for_alphabet(1)).unwrap();
        assert_eq!(
            q.minpoly_vec(&q.unit_vector()),
            crate::exactmath::QPoly::from_i64_coeffs(&[-1, 1])
        );
    }

    fn classical_plane() -> IdealGenerators {
        // e_i² = 1, e0e1 + e1e0 = 0: the Clifford algebra of ⟨1,1⟩
        IdealGenerators::new(
            2,
            alloc::vec![
                elem(&[(&[0, 0], (1, 1)), (&[], (-1, 1))]),
                elem(&[(&[1, 1], (1, 1)), (&[], (-1, 1))]),
                elem(&[(&[0, 1], (1, 1)), (&[1, 0], (1, 1))]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn classical_plane_quotient() {
        let gens = classical_plane();
        let q = quotient(&gens, &EngineConfig::for_alphabet(2)).unwrap();
        assert_eq!(q.dim(), 4);
        let e01 = q.basis_index(&Word::from_letters(&[0, 1])).unwrap();
        let e10 = q
            .element_image(&TensorElement::from_word(Word::from_letters(&[1, 0])))
            .unwrap();
        // e1·e0 = −e0·e1
        let mut expect = alloc::vec![q_int(0); 4];
        expect[e01] = q_int(-1);
        assert_eq!(e10, expect);
        // (e0e1)² = −1
        let sq = q.mul_vec(&q.basis_vector(e01), &q.basis_vector(e01));
        let mut minus_one = alloc::vec![q_int(0); 4];
        minus_one[q.unit_index().unwrap()] = q_int(-1);
        assert_eq!(sq, minus_one);
        assert!(q.parity_graded());
        let even = q.even_part().unwrap();
        assert_eq!(even.dim(), 2);
        let g = even.basis_vector(1);
        let gsq = even.mul_vec(&g, &g);
        let mut m1 = alloc::vec![q_int(0); 2];
        m1[0] = q_int(-1);
        assert_eq!(gsq, m1);
    }

    #[test]
    fn grassmann_plane() {
        // e_i² = 0, anticommuting: the exterior algebra, dimension 4
        let gens = IdealGenerators::new(
            2,
            alloc::vec![
                elem(&[(&[0, 0], (1, 1))]),
                elem(&[(&[1, 1], (1, 1))]),
                elem(&[(&[0, 1], (1, 1)), (&[1, 0], (1, 1))]),
            ],
        )
        .unwrap();
        let q = quotient(&gens, &EngineConfig::for_alphabet(2)).unwrap();
        assert_eq!(q.dim(), 4);
        let even = q.even_part().unwrap();
        assert_eq!(even.dim(), 2);
        let g = even.basis_vector(1);
        assert!(even.mul_vec(&g, &g).iter().all(num_traits::Zero::is_zero));
        assert_eq!(
            even.minpoly_vec(&g),
            crate::exactmath::QPoly::from_i64_coeffs(&[0, 0, 1])
        );
    }

    /// Generators of the ideal for the non-symmetric plane form with
    /// asymmetry eigenvalues (2, 1/2): 2·e0e0, ½·e1e1,
    /// 2·e0e1 + ½·e1e0 − 3/2.
    fn skewed_plane() -> IdealGenerators {
        IdealGenerators::new(
            2,
            alloc::vec![
                elem(&[(&[0, 0], (2, 1))]),
                elem(&[(&[1, 1], (1, 2))]),
                elem(&[(&[0, 1], (2, 1)), (&[1, 0], (1, 2)), (&[], (-3, 2))]),
            ],
        )
        .unwrap()
    }

    /// The two-sided ideal of the skewed plane contains 1: an explicit
    /// certificate built from generator products alone. The one-sided
    /// rewriting j·i → 3 − 4·i·j suggests a 4-dimensional quotient, but the
    /// overlap between the mixed relation and e0e0 forces e0, then 1, into
    /// the ideal.
    #[test]
    fn skewed_plane_unit_certificate() {
        let gens = skewed_plane();
        let g0 = &gens.generators()[0];
        let g2 = &gens.generators()[2];
        let e0 = Word::letter(0);
        let e1 = Word::letter(1);
        // i·g2 − g0·j = ½·iji − 3/2·i
        let y1 = g2.word_mul_left(&e0).sub(&g0.word_mul_right(&e1));
        // g2·i − ¼·(j·g0) = 2·iji − 3/2·i
        let y2 = g2
            .word_mul_right(&e0)
            .sub(&g0.word_mul_left(&e1).scale(&q(1, 4)));
        // y2 − 4·y1 = 9/2·i
        let z = y2.sub(&y1.scale(&q_int(4)));
        assert_eq!(z, elem(&[(&[0], (9, 2))]));
        // hence e0 lies in the ideal; substituting into the mixed generator
        // leaves −3/2·1
        let e0_member = z.scale(&q(2, 9));
        let eps = g2
            .sub(&e0_member.word_mul_right(&e1).scale(&q_int(2)))
            .sub(&e0_member.word_mul_left(&e1).scale(&q(1, 2)));
        assert_eq!(eps, elem(&[(&[], (-3, 2))]));
    }

    #[test]
    fn skewed_plane_quotient_is_zero() {
        let q = quotient(&skewed_plane(), &EngineConfig::for_alphabet(2)).unwrap();
        assert_eq!(q.dim(), 0);
        assert_eq!(q.unit_index(), None);
        assert!(q.verify_table());
        // every element reduces to nothing
        let img = q
            .element_image(&TensorElement::from_word(Word::from_letters(&[1, 0])))
            .unwrap();
        assert!(img.is_empty());
    }

    #[test]
    fn deterministic_and_order_independent() {
        let gens = classical_plane();
        let cfg = EngineConfig::for_alphabet(2);
        let q1 = quotient(&gens, &cfg).unwrap();
        let q2 = quotient(&gens, &cfg).unwrap();
        assert_eq!(q1, q2);
        // shuffled generator order: identical public data
        let shuffled = IdealGenerators::new(
            2,
            alloc::vec![
                gens.generators()[2].clone(),
                gens.generators()[0].clone(),
                gens.generators()[1].clone(),
            ],
        )
        .unwrap();
        let q3 = quotient(&shuffled, &cfg).unwrap();
        assert_eq!(q1.basis(), q3.basis());
        for i in 0..q1.dim() {
            for j in 0..q1.dim() {
                assert_eq!(q1.structure_constant(i, j), q3.structure_constant(i, j));
            }
        }
        let probe = elem(&[(&[1, 0], (1, 1)), (&[0], (2, 1))]);
        assert_eq!(
            q1.element_image(&probe).unwrap(),
            q3.element_image(&probe).unwrap()
        );
    }

    #[test]
    fn mixed_parity_has_no_even_part() {
        // e0e0 − e0 mixes degrees 2 and 1
        let gens =
            IdealGenerators::new(1, alloc::vec![elem(&[(&[0, 0], (1, 1)), (&[0], (-1, 1))])])
                .unwrap();
        let q = quotient(&gens, &EngineConfig::for_alphabet(1)).unwrap();
        assert!(!q.parity_graded());
        assert_eq!(q.even_part(), Err(crate::error::Error::NotGraded));
    }

    #[test]
    fn degree_overflow() {
        let q = quotient(&rank_one_clifford(), &EngineConfig::for_alphabet(1)).unwrap();
        let deep = TensorElement::from_word(Word::from_letters(&[0; 12]));
        assert!(matches!(
            q.element_image(&deep),
            Err(crate::error::Error::DegreeOverflow { .. })
        ));
    }

    #[test]
    fn free_algebra_hits_resource_cap() {
        let gens = IdealGenerators::new(1, alloc::vec![]).unwrap();
        let err = quotient(&gens, &EngineConfig::for_alphabet(1)).unwrap_err();
        assert!(matches!(err, crate::error::Error::ResourceCap { .. }));
    }

    #[test]
    fn scalar_generator_collapses_everything() {
        let gens = IdealGenerators::new(1, alloc::vec![elem(&[(&[], (2, 1))])]).unwrap();
        let q = quotient(&gens, &EngineConfig::for_alphabet(1)).unwrap();
        assert_eq!(q.dim(), 0);
    }

    #[test]
    fn element_image_is_linear_and_multiplicative() {
        let alg = quotient(&classical_plane(), &EngineConfig::for_alphabet(2)).unwrap();
        let w1 = TensorElement::from_word(Word::from_letters(&[1]));
        let w2 = TensorElement::from_word(Word::from_letters(&[1, 0]));
        // linear
        let combo = w1.scale(&q_int(3)).add(&w2.scale(&q(1, 2)));
        let img_combo = alg.element_image(&combo).unwrap();
        let img1 = alg.element_image(&w1).unwrap();
        let img2 = alg.element_image(&w2).unwrap();
        for i in 0..alg.dim() {
            assert_eq!(img_combo[i], &img1[i] * q_int(3) + &img2[i] * q(1, 2));
        }
        // multiplicative on concatenation within the stabilized degree
        let prod = w1.mul(&w2);
        assert_eq!(alg.element_image(&prod).unwrap(), alg.mul_vec(&img1, &img2));
    }

    #[test]
    fn slice_span_membership() {
        let gens = classical_plane();
        let slice = ideal_slice(&gens, 2, 2);
        for g in gens.generators() {
            assert!(slice.contains(g));
        }
        // e0e1 alone is not in the ideal
        assert!(!slice.contains(&TensorElement::from_word(Word::from_letters(&[0, 1]))));
    }
}
