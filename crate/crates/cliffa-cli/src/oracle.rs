//! Independent classical Clifford construction for symmetric forms, used as
//! an oracle against the quotient engine. Elements are kept over strictly
//! increasing words and products are computed by direct term rewriting
//! (e_k·e_l = 2b(k,l) − e_l·e_k for k > l, e_k·e_k = b(k,k)), with no shared
//! code with the engine's linear-algebra route.

use std::collections::BTreeMap;

use cliffa_core::exactmath::{q_int, Rational};
use cliffa_core::forms::BilinearForm;
use num_traits::Zero;

type Expr = BTreeMap<Vec<usize>, Rational>;

fn add_term(expr: &mut Expr, word: Vec<usize>, coeff: Rational) {
    if coeff.is_zero() {
        return;
    }
    let entry = expr.entry(word).or_insert_with(Rational::zero);
    *entry += coeff;
    if entry.is_zero() {
        expr.retain(|_, c| !c.is_zero());
    }
}

/// Multiply an increasing word by a single letter on the right.
fn word_times_letter(form: &BilinearForm, word: &[usize], letter: usize) -> Expr {
    let mut out = Expr::new();
    match word.last() {
        None => {
            add_term(&mut out, vec![letter], q_int(1));
        }
        Some(&last) if last < letter => {
            let mut w = word.to_vec();
            w.push(letter);
            add_term(&mut out, w, q_int(1));
        }
        Some(&last) if last == letter => {
            // e_k·e_k = b(k,k)
            let head = &word[..word.len() - 1];
            add_term(&mut out, head.to_vec(), form.entry(letter, letter).clone());
        }
        Some(&last) => {
            // e_last·e_letter = 2b(last,letter) − e_letter·e_last
            let head = &word[..word.len() - 1];
            let twice_b = form.entry(last, letter) + form.entry(letter, last);
            add_term(&mut out, head.to_vec(), twice_b);
            let swapped = word_times_letter(form, head, letter);
            for (w, c) in expr_times_letter(form, &swapped, last) {
                add_term(&mut out, w, -c);
            }
        }
    }
    out
}

fn expr_times_letter(form: &BilinearForm, expr: &Expr, letter: usize) -> Expr {
    let mut out = Expr::new();
    for (w, c) in expr {
        for (rw, rc) in word_times_letter(form, w, letter) {
            add_term(&mut out, rw, rc * c);
        }
    }
    out
}

/// The full classical Clifford algebra of a symmetric non-degenerate form,
/// tabulated over strictly increasing words in (size, lex) order — the same
/// order the engine's deg-lex basis uses for those words.
pub struct ClassicalClifford {
    pub basis: Vec<Vec<usize>>,
    pub table: Vec<Vec<Vec<Rational>>>,
}

pub fn classical_clifford(form: &BilinearForm) -> ClassicalClifford {
    assert!(form.is_symmetric(), "the classical oracle needs symmetry");
    let n = form.dim();
    let mut basis: Vec<Vec<usize>> = (0u32..(1 << n))
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    basis.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let index: BTreeMap<Vec<usize>, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();
    let dim = basis.len();
    let mut table = vec![vec![vec![Rational::zero(); dim]; dim]; dim];
    #[allow(clippy::needless_range_loop)]
    for i in 0..dim {
        for j in 0..dim {
            let mut acc = Expr::new();
            add_term(&mut acc, basis[i].clone(), q_int(1));
            for &l in &basis[j] {
                acc = expr_times_letter(form, &acc, l);
            }
            for (w, c) in acc {
                table[i][j][index[&w]] = c;
            }
        }
    }
    ClassicalClifford { basis, table }
}
