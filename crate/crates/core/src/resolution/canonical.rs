//! The small resolution `A^2_{alpha^{s_r}}` with `d'`, the normalized bar
//! resolution with `b'`, the comparison maps `phi'`, `psi'` and the homotopy `omega'`.
//!
//! All maps are `A`-bimodule maps given on generators `1 (x) 1` (small side) or
//! `1 (x) w (x) 1` (bar side) and extended by `F(c g x^j) = c F(g) x^j`.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::algebra::MonogenicData;
use crate::linalg::vector;
use crate::small::cs_twist;

use super::tensor::{words, ResElem, Word};

/// Apply a generator-defined bimodule map term by term.
pub fn extend_bimodule(a: &MonogenicData, x: &ResElem, offset: usize, gen: impl Fn(&[usize]) -> ResElem) -> ResElem {
    let mut out = ResElem::zero(offset);
    for ((w, j), c) in &x.terms {
        let g = gen(w);
        out.add(a, &g.left_mul(a, c).right_mul(a, &a.x_pow(*j)));
    }
    out
}

/// `d'_r(1 (x) 1)` in `A^2_{alpha^{s_{r-1}}}`.
pub fn small_d_generator(a: &MonogenicData, r: usize) -> ResElem {
    let f = a.field();
    let n = a.n();
    let mut out = ResElem::zero(cs_twist(n, r - 1));
    if r % 2 == 1 {
        out.add_term(a, Vec::new(), 0, &a.x_pow(1));
        out.add_term(a, Vec::new(), 1, &vector::neg(f, &a.a_one()));
    } else {
        for i in 1..=n {
            let lam = a.lambda(n - i);
            for l in 0..i {
                out.add_term(a, Vec::new(), i - l - 1, &a.k_times_x(&lam, l));
            }
        }
    }
    out
}

/// `d'_r` on an element of `A^2_{alpha^{s_r}}`.
pub fn small_d(a: &MonogenicData, r: usize, x: &ResElem) -> ResElem {
    let g = small_d_generator(a, r);
    extend_bimodule(a, x, g.offset, |_| g.clone())
}

/// `b'` on an element of `A (x) Abar^r (x) A`, `r >= 1`.
pub fn bar_b(a: &MonogenicData, x: &ResElem) -> ResElem {
    let f = a.field();
    let mut out = ResElem::zero(0);
    for ((w, j), c) in &x.terms {
        let r = w.len();
        assert!(r >= 1, "b' is defined from degree 1");
        // i = 0: c x^{w_1}
        out.add_term(a, w[1..].to_vec(), *j, &a.a_mul(c, &a.x_pow(w[0])));
        // 0 < i < r: merge letters i and i+1
        for i in 1..r {
            let sign = if i % 2 == 0 { f.one() } else { f.from_i64(-1) };
            let prod = a.x_pow(w[i - 1] + w[i]);
            let prefix: usize = w[..i - 1].iter().sum();
            for p in 1..a.n() {
                let mu = a.a_component(&prod, p);
                if vector::is_zero(&mu) {
                    continue;
                }
                let coeff = a.a_mul(c, &a.k_to_a(&a.alpha_pow_apply(prefix, &mu)));
                let mut w2 = w[..i - 1].to_vec();
                w2.push(p);
                w2.extend_from_slice(&w[i + 1..]);
                out.add_term(a, w2, *j, &vector::scale(f, &coeff, &sign));
            }
        }
        // i = r: last letter into the right factor
        let sign = if r % 2 == 0 { f.one() } else { f.from_i64(-1) };
        let mut t = ResElem::zero(0);
        t.add_term(a, w[..r - 1].to_vec(), 0, c);
        let t = t.right_mul(a, &a.x_pow(w[r - 1] + j));
        out.add_scaled(a, &t, &sign);
    }
    out
}

/// Which recursion builds `omega'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaRecursion {
    /// `omega'_{r+1}(x (x) 1) = (-1)^{r+1} phi'psi'(x (x) 1) (x) 1 + omega'_r(x) (x) 1`,
    /// obtained from the contracting homotopy `(-1)^{r+1} (- (x) 1)`; satisfies
    /// `b' omega' + omega' b' = phi' psi' - id`.
    Corrected,
    /// `(-1)^r phi'psi'(x (x) 1) (x) 1 - omega'_r(x) (x) 1`, kept for comparison only.
    AsDisplayed,
}

/// Comparison maps and homotopy, with the generator images cached.
pub struct Comparison<'a> {
    a: &'a MonogenicData,
    phi_cache: RefCell<HashMap<usize, ResElem>>,
    omega_cache: RefCell<HashMap<Word, ResElem>>,
    recursion: OmegaRecursion,
}

impl<'a> Comparison<'a> {
    pub fn new(a: &'a MonogenicData) -> Self {
        Comparison {
            a,
            phi_cache: RefCell::new(HashMap::new()),
            omega_cache: RefCell::new(HashMap::new()),
            recursion: OmegaRecursion::Corrected,
        }
    }

    pub fn with_recursion(a: &'a MonogenicData, recursion: OmegaRecursion) -> Self {
        let mut c = Self::new(a);
        c.recursion = recursion;
        c
    }

    pub fn recursion(&self) -> OmegaRecursion {
        self.recursion
    }

    pub fn algebra(&self) -> &MonogenicData {
        self.a
    }

    /// `phi'_r(1 (x) 1)`.
    pub fn phi_generator(&self, r: usize) -> ResElem {
        if let Some(e) = self.phi_cache.borrow().get(&r) {
            return e.clone();
        }
        let a = self.a;
        let n = a.n();
        let m = r / 2;
        let mut out = ResElem::zero(0);
        // i in [1, n]^m, l_j in [1, i_j)
        let mut stack: Vec<(Vec<usize>, Vec<usize>)> = vec![(Vec::new(), Vec::new())];
        for _ in 0..m {
            let mut next = Vec::new();
            for (is, ls) in &stack {
                for i in 2..=n {
                    for l in 1..i {
                        let mut is2 = is.clone();
                        is2.push(i);
                        let mut ls2 = ls.clone();
                        ls2.push(l);
                        next.push((is2, ls2));
                    }
                }
            }
            stack = next;
        }
        for (is, ls) in stack {
            let mut lam = a.base().unit().to_vec();
            for &i in &is {
                lam = a.base().mul(&lam, &a.lambda(n - i));
            }
            if vector::is_zero(&lam) {
                continue;
            }
            let e: usize = is.iter().zip(&ls).map(|(i, l)| i - l - 1).sum();
            let coeff = a.a_mul(&a.k_to_a(&lam), &a.x_pow(e));
            // word (1, l_m, 1, l_{m-1}, ..., 1, l_1), plus a trailing 1 when r is odd
            let mut w = Vec::with_capacity(r);
            for l in ls.iter().rev() {
                w.push(1);
                w.push(*l);
            }
            if r % 2 == 1 {
                w.push(1);
            }
            out.add_term(a, w, 0, &coeff);
        }
        self.phi_cache.borrow_mut().insert(r, out.clone());
        out
    }

    /// `phi'_r` on an element of `A^2_{alpha^{s_r}}`.
    pub fn phi(&self, r: usize, x: &ResElem) -> ResElem {
        let g = self.phi_generator(r);
        extend_bimodule(self.a, x, 0, |_| g.clone())
    }

    /// `psi'_r(1 (x) w (x) 1)` with `|w| = r`.
    pub fn psi_generator(&self, w: &[usize]) -> ResElem {
        let a = self.a;
        let r = w.len();
        let mut q = a.a_one();
        for k in 0..r / 2 {
            q = a.a_mul(&q, &a.x_pow_quotient(w[2 * k] + w[2 * k + 1]));
        }
        let mut out = ResElem::zero(cs_twist(a.n(), r));
        if r % 2 == 0 {
            out.add_term(a, Vec::new(), 0, &q);
        } else {
            let i = w[r - 1];
            for l in 0..i {
                out.add_term(a, Vec::new(), i - l - 1, &a.a_mul(&q, &a.x_pow(l)));
            }
        }
        out
    }

    pub fn psi(&self, r: usize, x: &ResElem) -> ResElem {
        extend_bimodule(self.a, x, cs_twist(self.a.n(), r), |w| self.psi_generator(w))
    }

    /// `omega'_{r+1}(1 (x) w (x) 1)` with `|w| = r`.
    pub fn omega_generator(&self, w: &[usize]) -> ResElem {
        if w.is_empty() {
            return ResElem::zero(0);
        }
        if let Some(e) = self.omega_cache.borrow().get(w) {
            return e.clone();
        }
        let a = self.a;
        let f = a.field();
        let r = w.len();
        let gen = ResElem::generator(a, 0, w);
        let pp = self.phi(r, &self.psi(r, &gen));
        let odd = r % 2 == 1;
        let (lead, tail) = match self.recursion {
            OmegaRecursion::Corrected => (if odd { f.one() } else { f.from_i64(-1) }, f.one()),
            OmegaRecursion::AsDisplayed => (if odd { f.from_i64(-1) } else { f.one() }, f.from_i64(-1)),
        };
        let mut t = pp.scaled(a, &lead);
        // omega'_r(1 (x) w_{<r} (x) x^{w_r})
        let prev = self.omega_generator(&w[..r - 1]).right_mul(a, &a.x_pow(w[r - 1]));
        t.add_scaled(a, &prev, &tail);
        let out = t.close_right(a);
        self.omega_cache.borrow_mut().insert(w.to_vec(), out.clone());
        out
    }

    /// `omega'_{r+1}` on an element of `A (x) Abar^r (x) A`.
    pub fn omega(&self, x: &ResElem) -> ResElem {
        extend_bimodule(self.a, x, 0, |w| self.omega_generator(w))
    }
}

/// Per-degree results of the resolution-level identity checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionReport {
    pub max_r: usize,
    pub d_squared: bool,
    pub b_squared: bool,
    pub phi_chain: bool,
    pub psi_chain: bool,
    pub psi_phi_identity: bool,
    pub homotopy: bool,
    /// `F(g) lambda = alpha^{twist}(lambda) F(g)` for every generator map.
    pub balanced: bool,
    /// `deg omega'(1 (x) w (x) 1) <= |w|`.
    pub degree_bound: bool,
    pub failures: Vec<String>,
}

impl ResolutionReport {
    pub fn all_pass(&self) -> bool {
        self.d_squared
            && self.b_squared
            && self.phi_chain
            && self.psi_chain
            && self.psi_phi_identity
            && self.homotopy
            && self.balanced
            && self.degree_bound
    }
}

fn balanced_on(a: &MonogenicData, img: &ResElem, twist: usize) -> bool {
    let k = a.base();
    (0..k.dim()).all(|b| {
        let lam = k.basis(b);
        let right = img.right_mul(a, &a.k_to_a(&lam));
        let left = img.left_mul(a, &a.k_to_a(&a.alpha_pow_apply(twist, &lam)));
        right == left
    })
}

/// Checks every resolution-level identity on generators up to degree `max_r`;
/// the bar-side checks use every word of length `<= max_r`.
pub fn check_resolution(cmp: &Comparison, max_r: usize) -> ResolutionReport {
    let a = cmp.algebra();
    let n = a.n();
    let mut rep = ResolutionReport {
        max_r,
        d_squared: true,
        b_squared: true,
        phi_chain: true,
        psi_chain: true,
        psi_phi_identity: true,
        homotopy: true,
        balanced: true,
        degree_bound: true,
        failures: Vec::new(),
    };
    for r in 0..=max_r {
        let s = cs_twist(n, r);
        let g = ResElem::generator(a, s, &[]);
        if r >= 2 && !small_d(a, r - 1, &small_d(a, r, &g)).is_zero() {
            rep.d_squared = false;
            rep.failures.push(format!("d'_{} d'_{} != 0", r - 1, r));
        }
        if r >= 1 && !balanced_on(a, &small_d_generator(a, r), s) {
            rep.balanced = false;
            rep.failures.push(format!("d'_{} not balanced", r));
        }
        let phi_g = cmp.phi_generator(r);
        if !balanced_on(a, &phi_g, s) {
            rep.balanced = false;
            rep.failures.push(format!("phi'_{} not balanced", r));
        }
        if r >= 1 {
            let lhs = bar_b(a, &phi_g);
            let rhs = cmp.phi(r - 1, &small_d(a, r, &g));
            if lhs != rhs {
                rep.phi_chain = false;
                rep.failures.push(format!("b' phi'_{} != phi'_{} d'_{}", r, r - 1, r));
            }
        }
        if cmp.psi(r, &phi_g) != g {
            rep.psi_phi_identity = false;
            rep.failures.push(format!("psi'_{0} phi'_{0} != id", r));
        }
        for w in words(n, r) {
            let gw = ResElem::generator(a, 0, &w);
            let len: usize = w.iter().sum();
            let psi_g = cmp.psi_generator(&w);
            if !balanced_on(a, &psi_g, len) {
                rep.balanced = false;
                rep.failures.push(format!("psi' not balanced on {:?}", w));
            }
            let om = cmp.omega(&gw);
            if !balanced_on(a, &om, len) {
                rep.balanced = false;
                rep.failures.push(format!("omega' not balanced on {:?}", w));
            }
            if let Some(d) = om.degree(a) {
                if d > len {
                    rep.degree_bound = false;
                    rep.failures.push(format!("deg omega'({:?}) = {}", w, d));
                }
            }
            if r >= 1 {
                let bg = bar_b(a, &gw);
                if r >= 2 && !bar_b(a, &bg).is_zero() {
                    rep.b_squared = false;
                    rep.failures.push(format!("b' b' != 0 on {:?}", w));
                }
                if small_d(a, r, &psi_g) != cmp.psi(r - 1, &bg) {
                    rep.psi_chain = false;
                    rep.failures.push(format!("d' psi' != psi' b' on {:?}", w));
                }
            }
            // b' omega' + omega' b' = phi' psi' - id
            let mut lhs = bar_b(a, &om);
            if r >= 1 {
                lhs.add(a, &cmp.omega(&bar_b(a, &gw)));
            }
            let rhs = cmp.phi(r, &psi_g).sub(a, &gw);
            if lhs != rhs {
                rep.homotopy = false;
                rep.failures.push(format!("homotopy identity fails on {:?}", w));
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures;

    #[test]
    fn d_prime_generators() {
        let a = fixtures::truncated(3);
        let d1 = small_d_generator(&a, 1);
        assert_eq!(d1.terms.len(), 2);
        let d2 = small_d_generator(&a, 2);
        // 1 (x) x^2 + x (x) x + x^2 (x) 1
        assert_eq!(d2.terms.len(), 3);
        assert_eq!(d2.terms[&(vec![], 2)], a.a_one());
        assert_eq!(d2.terms[&(vec![], 1)], a.x_pow(1));
        assert_eq!(d2.terms[&(vec![], 0)], a.x_pow(2));
    }

    #[test]
    fn comparison_low_degrees() {
        let a = fixtures::sweedler();
        let c = Comparison::new(&a);
        let p1 = c.phi_generator(1);
        assert_eq!(p1.terms.len(), 1);
        assert_eq!(p1.terms[&(vec![1], 0)], a.a_one());
        // psi'_2(1 (x) x (x) x (x) 1) = 1 (x) 1
        let q = c.psi_generator(&[1, 1]);
        assert_eq!(q.terms.len(), 1);
        assert_eq!(q.terms[&(vec![], 0)], a.a_one());
        assert!(c.omega_generator(&[]).is_zero());
    }

    #[test]
    fn displayed_recursion_breaks_homotopy() {
        let a = fixtures::truncated(3);
        let c = Comparison::with_recursion(&a, OmegaRecursion::AsDisplayed);
        assert!(!check_resolution(&c, 3).homotopy);
    }

    #[test]
    fn resolution_identities_small_fixtures() {
        for a in [fixtures::sweedler(), fixtures::truncated(3), fixtures::rank_one_c4()] {
            let c = Comparison::new(&a);
            let rep = check_resolution(&c, 4);
            assert!(rep.all_pass(), "{:?}", rep.failures);
        }
    }
}
