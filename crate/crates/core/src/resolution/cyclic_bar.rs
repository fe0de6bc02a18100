//! `M (x) Abar^{(x) r} (x)` realized as `(+)_w M / [M,K]_{alpha^{|w|}}`, the
//! Hochschild boundary, Connes' `B` (for `M = A`) and the maps induced by the
//! comparison maps through `m (x)_{A^e} (c (x) w (x) x^j) -> [x^j m c (x) w]`.

use std::cell::{OnceCell, RefCell};
use std::collections::HashMap;
use std::rc::Rc;

use crate::algebra::{BimoduleData, MonogenicData};
use crate::chain::{ChainComplex, ChainError};
use crate::linalg::{vector, Matrix, Scalar, SubquotientSpace};
use crate::small::{cs_space, cs_twist};

use super::canonical::{bar_b, Comparison};
use super::tensor::{word_index, words, ResElem, Word};

/// A direct sum of blocks `M / [M,K]_{alpha^{offset + |w|}}` indexed by words.
/// Ambient coordinate of `(block t, m-coordinate i)` is `t * dim M + i`.
/// The assembled quotient is only built when asked for.
#[derive(Clone, Debug)]
pub struct CyclicSpace {
    pub offset: usize,
    pub words: Vec<Word>,
    pub block_dim: usize,
    pub parts: Vec<SubquotientSpace>,
    space: OnceCell<SubquotientSpace>,
}

impl CyclicSpace {
    pub fn new(offset: usize, words: Vec<Word>, block_dim: usize, parts: Vec<SubquotientSpace>) -> Self {
        CyclicSpace {
            offset,
            words,
            block_dim,
            parts,
            space: OnceCell::new(),
        }
    }

    pub fn space(&self) -> &SubquotientSpace {
        self.space.get_or_init(|| {
            let refs: Vec<&SubquotientSpace> = self.parts.iter().collect();
            SubquotientSpace::direct_sum(self.parts[0].field(), &refs)
        })
    }

    pub fn dim(&self) -> usize {
        self.parts.iter().map(|p| p.quotient_dim()).sum()
    }

    /// Whether an ambient vector is zero in the quotient, block by block.
    pub fn is_zero_class(&self, v: &[Scalar]) -> bool {
        self.words.iter().enumerate().all(|(t, _)| {
            let b = &v[t * self.block_dim..(t + 1) * self.block_dim];
            vector::is_zero(b) || self.parts[t].contains(b)
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.words.len() * self.block_dim
    }

    fn block_index(&self, w: &[usize], n: usize) -> usize {
        if self.words.len() == 1 {
            assert_eq!(self.words[0].as_slice(), w, "word outside the space");
            0
        } else {
            word_index(n, w)
        }
    }

    /// Nonzero blocks of an ambient vector.
    pub fn blocks<'v>(&'v self, v: &'v [Scalar]) -> impl Iterator<Item = (&'v Word, &'v [Scalar])> + 'v {
        self.words
            .iter()
            .enumerate()
            .map(move |(t, w)| (w, &v[t * self.block_dim..(t + 1) * self.block_dim]))
            .filter(|(_, b)| !vector::is_zero(b))
    }

    fn add_block(&self, v: &mut [Scalar], w: &[usize], n: usize, m: &[Scalar], f: &crate::linalg::FieldDescriptor) {
        let t = self.block_index(w, n);
        vector::add_assign(f, &mut v[t * self.block_dim..(t + 1) * self.block_dim], m);
    }
}

/// Lazily built spaces and maps for a bimodule `M` over `A`.
pub struct BarWorkspace<'a> {
    a: &'a MonogenicData,
    m: BimoduleData,
    regular: bool,
    cmp: Comparison<'a>,
    blocks: RefCell<HashMap<usize, SubquotientSpace>>,
    bar: RefCell<HashMap<usize, Rc<CyclicSpace>>>,
    small: RefCell<HashMap<usize, Rc<CyclicSpace>>>,
}

impl<'a> BarWorkspace<'a> {
    pub fn new(a: &'a MonogenicData, m: BimoduleData) -> Self {
        BarWorkspace {
            a,
            m,
            regular: false,
            cmp: Comparison::new(a),
            blocks: RefCell::new(HashMap::new()),
            bar: RefCell::new(HashMap::new()),
            small: RefCell::new(HashMap::new()),
        }
    }

    /// `M = A`, the only case where Connes' `B` is available.
    pub fn regular(a: &'a MonogenicData) -> Self {
        let mut w = Self::new(a, BimoduleData::regular(a));
        w.regular = true;
        w
    }

    pub fn algebra(&self) -> &MonogenicData {
        self.a
    }

    pub fn bimodule(&self) -> &BimoduleData {
        &self.m
    }

    pub fn comparison(&self) -> &Comparison<'a> {
        &self.cmp
    }

    pub fn is_regular(&self) -> bool {
        self.regular
    }

    fn block_space(&self, twist: usize) -> SubquotientSpace {
        let key = self.a.twist_class(twist);
        if let Some(s) = self.blocks.borrow().get(&key) {
            return s.clone();
        }
        let s = cs_space(self.a, &self.m, twist);
        self.blocks.borrow_mut().insert(key, s.clone());
        s
    }

    /// `M (x) Abar^{(x) r} (x)`.
    pub fn bar_space(&self, r: usize) -> Rc<CyclicSpace> {
        if let Some(s) = self.bar.borrow().get(&r) {
            return s.clone();
        }
        let ws = words(self.a.n(), r);
        let parts: Vec<SubquotientSpace> = ws.iter().map(|w| self.block_space(w.iter().sum())).collect();
        let cs = Rc::new(CyclicSpace::new(0, ws, self.m.dim(), parts));
        self.bar.borrow_mut().insert(r, cs.clone());
        cs
    }

    /// `C^S_r(A, M) = M / [M,K]_{alpha^{s_r}}` as a one-block space.
    pub fn small_space(&self, r: usize) -> Rc<CyclicSpace> {
        if let Some(s) = self.small.borrow().get(&r) {
            return s.clone();
        }
        let offset = cs_twist(self.a.n(), r);
        let cs = Rc::new(CyclicSpace::new(offset, vec![Vec::new()], self.m.dim(), vec![self.block_space(offset)]));
        self.small.borrow_mut().insert(r, cs.clone());
        cs
    }

    /// `[m (x) w] -> sum [x^j m c (x) w']` over the terms `c (x) w' (x) x^j` of `gen(w)`.
    pub fn push_induced(&self, src: &CyclicSpace, tgt: &CyclicSpace, v: &[Scalar], gen: impl Fn(&[usize]) -> ResElem) -> Vec<Scalar> {
        let f = self.a.field();
        let n = self.a.n();
        let mut out = vector::zero(f, tgt.ambient_dim());
        for (w, mv) in src.blocks(v) {
            let g = gen(w);
            for ((w2, j), c) in &g.terms {
                let img = self.m.act_left(&self.a.x_pow(*j), &self.m.act_right(mv, c));
                tgt.add_block(&mut out, w2, n, &img, f);
            }
        }
        out
    }

    /// Matrix in quotient coordinates of an ambient-level map.
    pub fn matrix_of(&self, src: &CyclicSpace, tgt: &CyclicSpace, map: impl Fn(&[Scalar]) -> Vec<Scalar>) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..src.dim())
            .map(|t| tgt.space().project(&map(&src.space().basis_lift(t))))
            .collect();
        Matrix::from_columns(self.a.field(), tgt.dim(), &cols)
    }

    /// Hochschild boundary computed directly on `M (x) Abar^r (x)`.
    pub fn b_ambient(&self, r: usize, v: &[Scalar]) -> Vec<Scalar> {
        let a = self.a;
        let f = a.field();
        let n = a.n();
        let src = self.bar_space(r);
        let tgt = self.bar_space(r - 1);
        let mut out = vector::zero(f, tgt.ambient_dim());
        let minus = f.from_i64(-1);
        for (w, mv) in src.blocks(v) {
            // m x^{w_1}
            tgt.add_block(&mut out, &w[1..], n, &self.m.act_right(mv, &a.x_pow(w[0])), f);
            for i in 1..r {
                let prod = a.x_pow(w[i - 1] + w[i]);
                let prefix: usize = w[..i - 1].iter().sum();
                for p in 1..n {
                    let mu = a.a_component(&prod, p);
                    if vector::is_zero(&mu) {
                        continue;
                    }
                    let mut img = self.m.act_right_k(mv, &a.alpha_pow_apply(prefix, &mu));
                    if i % 2 == 1 {
                        img = vector::neg(f, &img);
                    }
                    let mut w2 = w[..i - 1].to_vec();
                    w2.push(p);
                    w2.extend_from_slice(&w[i + 1..]);
                    tgt.add_block(&mut out, &w2, n, &img, f);
                }
            }
            let mut last = self.m.act_left(&a.x_pow(w[r - 1]), mv);
            if r % 2 == 1 {
                last = vector::scale(f, &last, &minus);
            }
            tgt.add_block(&mut out, &w[..r - 1], n, &last, f);
        }
        out
    }

    /// `b_0` is the zero map into the zero space.
    pub fn b_matrix(&self, r: usize) -> Matrix {
        if r == 0 {
            return Matrix::zeros(self.a.field(), 0, self.bar_space(0).dim());
        }
        let (src, tgt) = (self.bar_space(r), self.bar_space(r - 1));
        self.matrix_of(&src, &tgt, |v| self.b_ambient(r, v))
    }

    /// The same boundary obtained from `b'` through the identification above.
    pub fn b_induced_matrix(&self, r: usize) -> Matrix {
        let (src, tgt) = (self.bar_space(r), self.bar_space(r - 1));
        self.matrix_of(&src, &tgt, |v| {
            self.push_induced(&src, &tgt, v, |w| bar_b(self.a, &ResElem::generator(self.a, 0, w)))
        })
    }

    /// `(M (x) Abar^* (x), b)` in degrees `0 ..= max_r`.
    pub fn bar_complex(&self, max_r: usize) -> Result<ChainComplex, ChainError> {
        let spaces = (0..=max_r).map(|r| self.bar_space(r).space().clone()).collect();
        let bs = (1..=max_r).map(|r| self.b_matrix(r)).collect();
        ChainComplex::new(self.a.field(), spaces, bs)
    }

    /// Connes' `B` on `A (x) Abar^r (x)`, ambient coordinates.
    pub fn connes_b_ambient(&self, r: usize, v: &[Scalar]) -> Vec<Scalar> {
        assert!(self.regular, "Connes' B needs M = A");
        let a = self.a;
        let f = a.field();
        let n = a.n();
        let dk = a.dim_k();
        let src = self.bar_space(r);
        let tgt = self.bar_space(r + 1);
        let mut out = vector::zero(f, tgt.ambient_dim());
        for (w, mv) in src.blocks(v) {
            for e0 in 1..n {
                let lam = &mv[e0 * dk..(e0 + 1) * dk];
                if vector::is_zero(lam) {
                    continue;
                }
                // [1 (x) a_i .. a_r (x) a_0 (x) a_1 .. a_{i-1}], lambda moved to the front
                for i in 0..=r {
                    let (head, tail) = if i == 0 { (&w[..0], &w[..]) } else { (&w[i - 1..], &w[..i - 1]) };
                    let twist: usize = head.iter().sum();
                    let mut w2 = head.to_vec();
                    w2.push(e0);
                    w2.extend_from_slice(tail);
                    let mut img = a.k_to_a(&a.alpha_pow_apply(twist, lam));
                    if (i * r) % 2 == 1 {
                        img = vector::neg(f, &img);
                    }
                    tgt.add_block(&mut out, &w2, n, &img, f);
                }
            }
        }
        out
    }

    pub fn connes_b_matrix(&self, r: usize) -> Matrix {
        let (src, tgt) = (self.bar_space(r), self.bar_space(r + 1));
        self.matrix_of(&src, &tgt, |v| self.connes_b_ambient(r, v))
    }

    /// `phi_r : C^S_r -> M (x) Abar^r (x)`.
    pub fn phi_ambient(&self, r: usize, v: &[Scalar]) -> Vec<Scalar> {
        let g = self.cmp.phi_generator(r);
        self.push_induced(&self.small_space(r), &self.bar_space(r), v, |_| g.clone())
    }

    pub fn psi_ambient(&self, r: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.push_induced(&self.bar_space(r), &self.small_space(r), v, |w| self.cmp.psi_generator(w))
    }

    /// `omega_{r+1} : M (x) Abar^r (x) -> M (x) Abar^{r+1} (x)`.
    pub fn omega_ambient(&self, r: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.push_induced(&self.bar_space(r), &self.bar_space(r + 1), v, |w| self.cmp.omega_generator(w))
    }

    pub fn phi_matrix(&self, r: usize) -> Matrix {
        self.matrix_of(&self.small_space(r), &self.bar_space(r), |v| self.phi_ambient(r, v))
    }

    pub fn psi_matrix(&self, r: usize) -> Matrix {
        self.matrix_of(&self.bar_space(r), &self.small_space(r), |v| self.psi_ambient(r, v))
    }

    pub fn omega_matrix(&self, r: usize) -> Matrix {
        self.matrix_of(&self.bar_space(r), &self.bar_space(r + 1), |v| self.omega_ambient(r, v))
    }

    /// Degree of an ambient coordinate of `A (x) Abar^r (x)`: x-power plus letters.
    pub fn coordinate_degree(&self, space: &CyclicSpace, coord: usize) -> usize {
        let t = coord / space.block_dim;
        let p = coord % space.block_dim;
        let letters: usize = space.words[t].iter().sum();
        p / self.a.dim_k() + letters
    }

    /// Degree of the class of an ambient vector, computed block by block
    /// (`None` for zero). Avoids assembling the whole quotient.
    pub fn ambient_degree(&self, space: &CyclicSpace, v: &[Scalar]) -> Option<usize> {
        let dk = self.a.dim_k();
        space
            .words
            .iter()
            .enumerate()
            .filter_map(|(t, w)| {
                let b = &v[t * space.block_dim..(t + 1) * space.block_dim];
                if vector::is_zero(b) {
                    return None;
                }
                let part = &space.parts[t];
                let letters: usize = w.iter().sum();
                part.project(b)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(q, _)| part.free_coordinates()[q] / dk + letters)
                    .max()
            })
            .max()
    }

    /// Degree of a class given in quotient coordinates (`None` for zero).
    pub fn class_degree(&self, space: &CyclicSpace, q: &[Scalar]) -> Option<usize> {
        let free = space.space().free_coordinates();
        q.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(t, _)| self.coordinate_degree(space, free[t]))
            .max()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures;
    use crate::small::build_cs;

    #[test]
    fn bar_dims_and_boundary() {
        let a = fixtures::truncated(3);
        let w = BarWorkspace::regular(&a);
        assert_eq!(w.bar_space(1).dim(), 6);
        let c = w.bar_complex(5).unwrap();
        assert_eq!(c.homology_dims(), vec![3, 2, 2, 2, 2]);
        for r in 1..=4 {
            assert_eq!(w.b_matrix(r), w.b_induced_matrix(r));
        }
    }

    #[test]
    fn sweedler_oracle() {
        let a = fixtures::sweedler();
        let w = BarWorkspace::regular(&a);
        let bar = w.bar_complex(6).unwrap().homology_dims();
        let small = build_cs(&a, &BimoduleData::regular(&a), 6).unwrap().complex.homology_dims();
        assert_eq!(bar, small);
        for r in 0..4 {
            let b1 = w.connes_b_matrix(r);
            let b2 = w.connes_b_matrix(r + 1);
            assert!(b2.mul(&b1).is_zero());
            if r >= 1 {
                let lhs = w.b_matrix(r + 1).mul(&b1).add(&w.connes_b_matrix(r - 1).mul(&w.b_matrix(r)));
                assert!(lhs.is_zero());
            }
        }
    }

    #[test]
    fn induced_maps() {
        for a in [fixtures::sweedler(), fixtures::truncated(3)] {
            let w = BarWorkspace::regular(&a);
            for r in 0..4 {
                let pp = w.psi_matrix(r).mul(&w.phi_matrix(r));
                assert!(pp.is_identity(), "psi phi at {}", r);
                let id = Matrix::identity(a.field(), w.bar_space(r).dim());
                let mut lhs = w.b_matrix(r + 1).mul(&w.omega_matrix(r));
                if r >= 1 {
                    lhs = lhs.add(&w.omega_matrix(r - 1).mul(&w.b_matrix(r)));
                }
                assert_eq!(lhs, w.phi_matrix(r).mul(&w.psi_matrix(r)).sub(&id), "homotopy at {}", r);
            }
        }
    }
}
