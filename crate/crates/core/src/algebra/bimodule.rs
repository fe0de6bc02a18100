//! Finite-dimensional `A`-bimodules given by action matrices of the generators.

use crate::linalg::{vector, Matrix, Scalar};

use super::extension::MonogenicData;
use super::AlgebraError;

/// An `A`-bimodule `M` with chosen basis. The action of `K` is given per basis
/// element of `K`, the action of `x` by one matrix on each side.
#[derive(Clone, Debug)]
pub struct BimoduleData {
    dim: usize,
    left_k: Vec<Matrix>,
    left_x: Matrix,
    right_k: Vec<Matrix>,
    right_x: Matrix,
    /// Left and right action matrices of every `k`-basis element of `A`.
    left_a: Vec<Matrix>,
    right_a: Vec<Matrix>,
    labels: Vec<String>,
}

impl BimoduleData {
    /// Validates the action matrices against the relations of `A`.
    pub fn new(
        a: &MonogenicData,
        left_k: Vec<Matrix>,
        left_x: Matrix,
        right_k: Vec<Matrix>,
        right_x: Matrix,
        labels: Option<Vec<String>>,
    ) -> Result<Self, AlgebraError> {
        let dim = left_x.rows();
        let bad = |m: &Matrix| m.rows() != dim || m.cols() != dim;
        if left_k.len() != a.dim_k() || right_k.len() != a.dim_k() {
            return Err(AlgebraError::InvalidBimodule(format!(
                "need one action matrix per basis element of K ({})",
                a.dim_k()
            )));
        }
        if left_k.iter().chain(right_k.iter()).any(bad) || bad(&right_x) || bad(&left_x) {
            return Err(AlgebraError::InvalidBimodule(format!("action matrices must be {0}x{0}", dim)));
        }
        let labels = labels.unwrap_or_else(|| (0..dim).map(|i| format!("m{}", i)).collect());
        let m = Self::assemble(a, dim, left_k, left_x, right_k, right_x, labels);
        m.validate(a)?;
        Ok(m)
    }

    fn assemble(
        a: &MonogenicData,
        dim: usize,
        left_k: Vec<Matrix>,
        left_x: Matrix,
        right_k: Vec<Matrix>,
        right_x: Matrix,
        labels: Vec<String>,
    ) -> Self {
        let f = a.field();
        let mut lx_pows = vec![Matrix::identity(f, dim)];
        let mut rx_pows = vec![Matrix::identity(f, dim)];
        for _ in 1..a.n() {
            lx_pows.push(left_x.mul(lx_pows.last().unwrap()));
            rx_pows.push(right_x.mul(rx_pows.last().unwrap()));
        }
        let dk = a.dim_k();
        let mut left_a = Vec::with_capacity(a.dim_a());
        let mut right_a = Vec::with_capacity(a.dim_a());
        for p in 0..a.dim_a() {
            let (i, b) = (p / dk, p % dk);
            left_a.push(left_k[b].mul(&lx_pows[i]));
            right_a.push(rx_pows[i].mul(&right_k[b]));
        }
        BimoduleData {
            dim,
            left_k,
            left_x,
            right_k,
            right_x,
            left_a,
            right_a,
            labels,
        }
    }

    /// `M = A` with multiplication on both sides.
    pub fn regular(a: &MonogenicData) -> Self {
        let k = a.base();
        let left_k = (0..a.dim_k()).map(|b| a.a_left_matrix(&a.k_to_a(&k.basis(b)))).collect();
        let right_k = (0..a.dim_k()).map(|b| a.a_right_matrix(&a.k_to_a(&k.basis(b)))).collect();
        let x = a.x_pow(1);
        let labels = (0..a.dim_a())
            .map(|p| {
                let (i, b) = (p / a.dim_k(), p % a.dim_k());
                let kl = &k.labels()[b];
                match i {
                    0 => kl.clone(),
                    1 => format!("{}x", kl),
                    _ => format!("{}x^{}", kl, i),
                }
            })
            .collect();
        Self::assemble(
            a,
            a.dim_a(),
            left_k,
            a.a_left_matrix(&x),
            right_k,
            a.a_right_matrix(&x),
            labels,
        )
    }

    fn validate(&self, a: &MonogenicData) -> Result<(), AlgebraError> {
        let k = a.base();
        let f = a.field();
        let dk = a.dim_k();
        let id = Matrix::identity(f, self.dim);
        let combo = |ms: &[Matrix], v: &[Scalar]| -> Matrix {
            let mut out = Matrix::zeros(f, self.dim, self.dim);
            for (b, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    out = out.add(&ms[b].scale(c));
                }
            }
            out
        };
        let err = |s: String| Err(AlgebraError::InvalidBimodule(s));
        if combo(&self.left_k, k.unit()) != id || combo(&self.right_k, k.unit()) != id {
            return err("unit of K does not act as the identity".into());
        }
        for b in 0..dk {
            for c in 0..dk {
                let prod = k.basis_product(b, c);
                if self.left_k[b].mul(&self.left_k[c]) != combo(&self.left_k, &prod) {
                    return err(format!("left K-action not associative on ({}, {})", k.labels()[b], k.labels()[c]));
                }
                if self.right_k[c].mul(&self.right_k[b]) != combo(&self.right_k, &prod) {
                    return err(format!("right K-action not associative on ({}, {})", k.labels()[b], k.labels()[c]));
                }
            }
            let ab = a.alpha().apply(&k.basis(b));
            if self.left_x.mul(&self.left_k[b]) != combo(&self.left_k, &ab).mul(&self.left_x) {
                return err(format!("left action violates x {} = alpha({}) x", k.labels()[b], k.labels()[b]));
            }
            if self.right_k[b].mul(&self.right_x) != self.right_x.mul(&combo(&self.right_k, &ab)) {
                return err(format!("right action violates x {} = alpha({}) x", k.labels()[b], k.labels()[b]));
            }
        }
        let n = a.n();
        let mut lf = Matrix::zeros(f, self.dim, self.dim);
        let mut rf = Matrix::zeros(f, self.dim, self.dim);
        let mut lx = id.clone();
        let mut rx = id.clone();
        for s in 0..=n {
            // coefficient of x^s in f is lambda_{n-s}
            let lam = a.lambda(n - s);
            lf = lf.add(&combo(&self.left_k, &lam).mul(&lx));
            rf = rf.add(&rx.mul(&combo(&self.right_k, &lam)));
            lx = self.left_x.mul(&lx);
            rx = self.right_x.mul(&rx);
        }
        if !lf.is_zero() || !rf.is_zero() {
            return err("f does not act as zero".into());
        }
        let lefts: Vec<&Matrix> = self.left_k.iter().chain(std::iter::once(&self.left_x)).collect();
        let rights: Vec<&Matrix> = self.right_k.iter().chain(std::iter::once(&self.right_x)).collect();
        for l in &lefts {
            for r in &rights {
                if l.mul(r) != r.mul(l) {
                    return err("left and right actions do not commute".into());
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn left_k(&self, b: usize) -> &Matrix {
        &self.left_k[b]
    }

    pub fn right_k(&self, b: usize) -> &Matrix {
        &self.right_k[b]
    }

    pub fn left_x(&self) -> &Matrix {
        &self.left_x
    }

    pub fn right_x(&self) -> &Matrix {
        &self.right_x
    }

    /// Left action matrix of the `p`-th `k`-basis element of `A`.
    pub fn left_basis(&self, p: usize) -> &Matrix {
        &self.left_a[p]
    }

    pub fn right_basis(&self, p: usize) -> &Matrix {
        &self.right_a[p]
    }

    /// `a m` for `a` in `A`.
    pub fn act_left(&self, a: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        let f = self.left_x.field();
        let mut out = vector::zero(f, self.dim);
        for (p, c) in a.iter().enumerate() {
            if !c.is_zero() {
                vector::axpy(f, &mut out, c, &self.left_a[p].apply(m));
            }
        }
        out
    }

    /// `m a` for `a` in `A`.
    pub fn act_right(&self, m: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        let f = self.left_x.field();
        let mut out = vector::zero(f, self.dim);
        for (p, c) in a.iter().enumerate() {
            if !c.is_zero() {
                vector::axpy(f, &mut out, c, &self.right_a[p].apply(m));
            }
        }
        out
    }

    /// `lambda m` for `lambda` in `K`.
    pub fn act_left_k(&self, lambda: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        let f = self.left_x.field();
        let mut out = vector::zero(f, self.dim);
        for (b, c) in lambda.iter().enumerate() {
            if !c.is_zero() {
                vector::axpy(f, &mut out, c, &self.left_k[b].apply(m));
            }
        }
        out
    }

    /// `m lambda` for `lambda` in `K`.
    pub fn act_right_k(&self, m: &[Scalar], lambda: &[Scalar]) -> Vec<Scalar> {
        let f = self.left_x.field();
        let mut out = vector::zero(f, self.dim);
        for (b, c) in lambda.iter().enumerate() {
            if !c.is_zero() {
                vector::axpy(f, &mut out, c, &self.right_k[b].apply(m));
            }
        }
        out
    }

    /// Matrix of `m -> a m b`.
    pub fn sandwich_matrix(&self, a: &[Scalar], b: &[Scalar]) -> Matrix {
        let f = self.left_x.field();
        let mut la = Matrix::zeros(f, self.dim, self.dim);
        for (p, c) in a.iter().enumerate() {
            if !c.is_zero() {
                la = la.add(&self.left_a[p].scale(c));
            }
        }
        let mut rb = Matrix::zeros(f, self.dim, self.dim);
        for (p, c) in b.iter().enumerate() {
            if !c.is_zero() {
                rb = rb.add(&self.right_a[p].scale(c));
            }
        }
        la.mul(&rb)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures;

    #[test]
    fn regular_bimodule_validates() {
        for a in [fixtures::sweedler(), fixtures::truncated(3), fixtures::rank_one_c4()] {
            let m = BimoduleData::regular(&a);
            m.validate(&a).unwrap();
            assert_eq!(m.dim(), a.dim_a());
        }
    }

    #[test]
    fn broken_action_rejected() {
        let a = fixtures::sweedler();
        let m = BimoduleData::regular(&a);
        // scale the left x action: x^2 still acts as zero but x g = -g x on the left stays,
        // so swap left and right x to break commutation instead
        let res = BimoduleData::new(
            &a,
            m.left_k.clone(),
            m.right_x.clone(),
            m.right_k.clone(),
            m.right_x.clone(),
            None,
        );
        assert!(res.is_err());
    }
}
