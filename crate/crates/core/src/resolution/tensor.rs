//! Normal-form elements of `A (x) Abar^{(x) r} (x) A` (tensors over `K`).
//!
//! A term `(w, j) -> c` stands for `c (x) x^{w_1} (x) ... (x) x^{w_r} (x) x^j`
//! with `c` in `A`, letters `1 <= w_i < n` and `0 <= j < n`. Every `K`-coefficient
//! is pushed to the left factor; a coefficient `mu` crossing the word `w`
//! leftwards becomes `alpha^{|w|}(mu)`.
//!
//! The small resolution `A_{alpha^s} (x) A` uses the same representation with an
//! empty word and `offset = s`: the twist a coefficient picks up is always
//! `offset + |w|`.

use std::collections::BTreeMap;

use crate::algebra::MonogenicData;
use crate::linalg::{vector, Scalar};

pub type Word = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResElem {
    pub offset: usize,
    pub terms: BTreeMap<(Word, usize), Vec<Scalar>>,
}

impl ResElem {
    pub fn zero(offset: usize) -> Self {
        ResElem {
            offset,
            terms: BTreeMap::new(),
        }
    }

    /// `1 (x) w (x) 1`.
    pub fn generator(a: &MonogenicData, offset: usize, w: &[usize]) -> Self {
        let mut e = Self::zero(offset);
        e.add_term(a, w.to_vec(), 0, &a.a_one());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: &MonogenicData, w: Word, j: usize, c: &[Scalar]) {
        if vector::is_zero(c) {
            return;
        }
        let f = a.field();
        let key = (w, j);
        let remove = match self.terms.get_mut(&key) {
            Some(v) => {
                vector::add_assign(f, v, c);
                vector::is_zero(v)
            }
            None => {
                self.terms.insert(key.clone(), c.to_vec());
                false
            }
        };
        if remove {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, a: &MonogenicData, other: &ResElem, s: &Scalar) {
        let f = a.field();
        for ((w, j), c) in &other.terms {
            self.add_term(a, w.clone(), *j, &vector::scale(f, c, s));
        }
    }

    pub fn add(&mut self, a: &MonogenicData, other: &ResElem) {
        self.add_scaled(a, other, &a.field().one());
    }

    pub fn scaled(&self, a: &MonogenicData, s: &Scalar) -> ResElem {
        let mut out = ResElem::zero(self.offset);
        out.add_scaled(a, self, s);
        out
    }

    pub fn neg(&self, a: &MonogenicData) -> ResElem {
        self.scaled(a, &a.field().from_i64(-1))
    }

    pub fn sub(&self, a: &MonogenicData, other: &ResElem) -> ResElem {
        let mut out = self.clone();
        out.add_scaled(a, other, &a.field().from_i64(-1));
        out
    }

    /// `b * self` for `b` in `A`.
    pub fn left_mul(&self, a: &MonogenicData, b: &[Scalar]) -> ResElem {
        let mut out = ResElem::zero(self.offset);
        for ((w, j), c) in &self.terms {
            out.add_term(a, w.clone(), *j, &a.a_mul(b, c));
        }
        out
    }

    /// `self * b` for `b` in `A`: `x^j b = sum mu_q x^q`, and `mu_q` moves to the front.
    pub fn right_mul(&self, a: &MonogenicData, b: &[Scalar]) -> ResElem {
        let mut out = ResElem::zero(self.offset);
        for ((w, j), c) in &self.terms {
            let prod = a.a_mul(&a.x_pow(*j), b);
            let twist = self.offset + w.iter().sum::<usize>();
            for q in 0..a.n() {
                let mu = a.a_component(&prod, q);
                if vector::is_zero(&mu) {
                    continue;
                }
                let moved = a.k_to_a(&a.alpha_pow_apply(twist, &mu));
                out.add_term(a, w.clone(), q, &a.a_mul(c, &moved));
            }
        }
        out
    }

    /// `c (x) w (x) x^j  ->  c (x) w (x) x^j (x) 1`: the right factor becomes a bar
    /// letter (its `x^0` part dies in `Abar`).
    pub fn close_right(&self, a: &MonogenicData) -> ResElem {
        let mut out = ResElem::zero(self.offset);
        for ((w, j), c) in &self.terms {
            if *j == 0 {
                continue;
            }
            let mut w2 = w.clone();
            w2.push(*j);
            out.add_term(a, w2, 0, c);
        }
        out
    }

    /// Largest degree `deg(c) + |w| + j` over the terms; `None` for zero.
    pub fn degree(&self, a: &MonogenicData) -> Option<usize> {
        self.terms
            .iter()
            .filter_map(|((w, j), c)| a.a_degree(c).map(|d| d + w.iter().sum::<usize>() + j))
            .max()
    }
}

/// All words of length `r` over `1 ..= n-1`, in lexicographic order.
pub fn words(n: usize, r: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        let mut next = Vec::with_capacity(out.len() * (n - 1));
        for w in &out {
            for e in 1..n {
                let mut w2 = w.clone();
                w2.push(e);
                next.push(w2);
            }
        }
        out = next;
    }
    out
}

/// Position of `w` in `words(n, w.len())`.
pub fn word_index(n: usize, w: &[usize]) -> usize {
    w.iter().fold(0, |acc, &e| acc * (n - 1) + (e - 1))
}

/// Degree of a monomial tensor `lambda x^{i_0} (x) x^{i_1} ... (x) x^{i_r}`.
pub fn monomial_degree(i0: usize, w: &[usize]) -> usize {
    i0 + w.iter().sum::<usize>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures;

    #[test]
    fn word_enumeration() {
        let ws = words(3, 2);
        assert_eq!(ws, vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        for (t, w) in ws.iter().enumerate() {
            assert_eq!(word_index(3, w), t);
        }
        assert_eq!(words(2, 3).len(), 1);
    }

    #[test]
    fn right_mul_moves_coefficients() {
        // Sweedler: (1 (x) x (x) 1) * g = alpha(g) (x) x (x) 1 = -g (x) x (x) 1
        let a = fixtures::sweedler();
        let g = a.k_to_a(&a.base().basis(1));
        let e = ResElem::generator(&a, 0, &[1]).right_mul(&a, &g);
        let want = a.a_mul(&g, &a.k_to_a(&vector::scale(a.field(), a.base().unit(), &a.field().from_i64(-1))));
        assert_eq!(e.terms.get(&(vec![1], 0)), Some(&want));
    }

    #[test]
    fn degree_is_maximum() {
        let a = fixtures::truncated(3);
        let mut e = ResElem::zero(0);
        e.add_term(&a, vec![1], 0, &a.x_pow(1));
        e.add_term(&a, vec![1], 0, &a.x_pow(2));
        assert_eq!(e.degree(&a), Some(3));
        assert_eq!(ResElem::zero(0).degree(&a), None);
        assert_eq!(monomial_degree(2, &[1]), 3);
    }
}
