//! The monogenic extension `A = K[x, alpha] / <f>` and its normal-form arithmetic.
//!
//! `A` has the left `K`-basis `1, x, ..., x^{n-1}`; as a `k`-space its basis
//! is `e_a x^i`, flattened to index `i * dim K + a`. Coefficients are always
//! written on the left and moved past `x` with `x lambda = alpha(lambda) x`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::linalg::{vector, FieldDescriptor, Matrix, Scalar};

use super::base::BaseAlgebra;
use super::endomorphism::AlgebraEndomorphism;
use super::AlgebraError;

/// Largest order searched for when detecting `alpha^v = id`.
const MAX_ALPHA_ORDER: usize = 720;

/// Validated data `(K, alpha, n, lambda_1..lambda_n)` with precomputed tables.
#[derive(Clone, Debug)]
pub struct MonogenicData {
    base: BaseAlgebra,
    alpha: AlgebraEndomorphism,
    n: usize,
    lambdas: Vec<Vec<Scalar>>,
    alpha_order: Option<usize>,
    powers: Arc<Mutex<HashMap<usize, Matrix>>>,
    table: Arc<Vec<Vec<Scalar>>>,
}

/// Polynomial in `x` with left coefficients in `K`, element of `K[x, alpha]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KPoly {
    pub coeffs: Vec<Vec<Scalar>>,
}

/// An element of `A` in normal form: the `K`-coefficients of `x^0 .. x^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AElement {
    pub coeffs: Vec<Vec<Scalar>>,
}

/// Checks every coefficient condition and builds the extension.
pub fn validate_monogenic(
    base: BaseAlgebra,
    alpha: AlgebraEndomorphism,
    n: usize,
    lambdas: Vec<Vec<Scalar>>,
) -> Result<MonogenicData, AlgebraError> {
    let mut problems = Vec::new();
    if n < 2 {
        problems.push(format!("degree n = {} but a monic polynomial of degree n >= 2 is required", n));
    }
    if lambdas.len() != n {
        problems.push(format!("expected {} coefficients lambda_1..lambda_n, got {}", n, lambdas.len()));
    }
    if lambdas.iter().any(|l| l.len() != base.dim()) {
        problems.push("coefficient vector of wrong length".to_string());
    }
    if !problems.is_empty() {
        return Err(AlgebraError::InvalidExtension(problems));
    }
    let k = &base;
    let powers: Vec<Matrix> = {
        let mut p = vec![Matrix::identity(k.field(), k.dim())];
        for _ in 1..n {
            let next = alpha.matrix().mul(p.last().unwrap());
            p.push(next);
        }
        p
    };
    for (idx, lam) in lambdas.iter().enumerate() {
        let i = idx + 1;
        if alpha.apply(lam) != *lam {
            problems.push(format!(
                "alpha(lambda_{i}) = {} differs from lambda_{i} = {}",
                k.format(&alpha.apply(lam)),
                k.format(lam)
            ));
        }
        let alpha_i = if i < n { powers[i].clone() } else { alpha.matrix().mul(&powers[n - 1]) };
        for b in 0..k.dim() {
            let e = k.basis(b);
            let lhs = k.mul(lam, &e);
            let rhs = k.mul(&alpha_i.apply(&e), lam);
            if lhs != rhs {
                problems.push(format!(
                    "lambda_{i} {} != alpha^{i}({}) lambda_{i}",
                    k.labels()[b],
                    k.labels()[b]
                ));
            }
        }
    }
    if !problems.is_empty() {
        return Err(AlgebraError::InvalidExtension(problems));
    }
    Ok(MonogenicData::build(base, alpha, n, lambdas))
}

impl MonogenicData {
    fn build(base: BaseAlgebra, alpha: AlgebraEndomorphism, n: usize, lambdas: Vec<Vec<Scalar>>) -> Self {
        let id = Matrix::identity(base.field(), base.dim());
        let mut alpha_order = None;
        let mut cur = alpha.matrix().clone();
        for v in 1..=MAX_ALPHA_ORDER {
            if cur == id {
                alpha_order = Some(v);
                break;
            }
            cur = alpha.matrix().mul(&cur);
        }
        let mut data = MonogenicData {
            base,
            alpha,
            n,
            lambdas,
            alpha_order,
            powers: Arc::new(Mutex::new(HashMap::new())),
            table: Arc::new(Vec::new()),
        };
        data.table = Arc::new(data.compute_table());
        data
    }

    fn compute_table(&self) -> Vec<Vec<Scalar>> {
        let dk = self.dim_k();
        let da = self.dim_a();
        let mut t = Vec::with_capacity(da * da);
        for p in 0..da {
            let (i, a) = (p / dk, p % dk);
            for q in 0..da {
                let (j, b) = (q / dk, q % dk);
                // e_a x^i e_b x^j = e_a alpha^i(e_b) x^{i+j}
                let c = self.base.mul(&self.base.basis(a), &self.alpha_pow_apply(i, &self.base.basis(b)));
                let mut poly = vec![self.base.zero(); i + j + 1];
                poly[i + j] = c;
                t.push(self.reduce(&KPoly { coeffs: poly }));
            }
        }
        t
    }

    pub fn field(&self) -> &FieldDescriptor {
        self.base.field()
    }

    pub fn base(&self) -> &BaseAlgebra {
        &self.base
    }

    pub fn alpha(&self) -> &AlgebraEndomorphism {
        &self.alpha
    }

    /// Degree of `f`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim_k(&self) -> usize {
        self.base.dim()
    }

    pub fn dim_a(&self) -> usize {
        self.n * self.base.dim()
    }

    /// `lambda_i` for `0 <= i <= n`, with `lambda_0 = 1`.
    pub fn lambda(&self, i: usize) -> Vec<Scalar> {
        if i == 0 {
            self.base.unit().to_vec()
        } else {
            self.lambdas[i - 1].clone()
        }
    }

    pub fn lambdas(&self) -> &[Vec<Scalar>] {
        &self.lambdas
    }

    pub fn lambda_n(&self) -> Vec<Scalar> {
        self.lambda(self.n)
    }

    /// Smallest `v >= 1` with `alpha^v = id`, if one exists (searched up to 720).
    pub fn alpha_order(&self) -> Option<usize> {
        self.alpha_order
    }

    /// Smallest `v >= 1` with `alpha^{n v} = id`.
    pub fn alpha_n_order(&self) -> Option<usize> {
        self.alpha_order.map(|v| v / gcd(v, self.n))
    }

    /// Canonical exponent: `s` reduced modulo the order of `alpha`, if finite.
    pub fn twist_class(&self, s: usize) -> usize {
        match self.alpha_order {
            Some(v) => s % v,
            None => s,
        }
    }

    pub fn alpha_pow(&self, s: usize) -> Matrix {
        let s = self.twist_class(s);
        if s == 0 {
            return Matrix::identity(self.field(), self.dim_k());
        }
        if s == 1 {
            return self.alpha.matrix().clone();
        }
        if let Some(m) = self.powers.lock().expect("alpha cache").get(&s) {
            return m.clone();
        }
        let half = self.alpha_pow(s / 2);
        let mut m = half.mul(&half);
        if s % 2 == 1 {
            m = self.alpha.matrix().mul(&m);
        }
        self.powers.lock().expect("alpha cache").insert(s, m.clone());
        m
    }

    pub fn alpha_pow_apply(&self, s: usize, v: &[Scalar]) -> Vec<Scalar> {
        if self.twist_class(s) == 0 {
            return v.to_vec();
        }
        self.alpha_pow(s).apply(v)
    }

    // ---- A as a k-space ----

    pub fn a_index(&self, power: usize, k_index: usize) -> usize {
        power * self.dim_k() + k_index
    }

    pub fn a_zero(&self) -> Vec<Scalar> {
        vector::zero(self.field(), self.dim_a())
    }

    pub fn a_one(&self) -> Vec<Scalar> {
        self.k_to_a(self.base.unit())
    }

    pub fn a_basis(&self, p: usize) -> Vec<Scalar> {
        vector::unit(self.field(), self.dim_a(), p)
    }

    /// `lambda x^power` as an element of `A` (`power < n`).
    pub fn k_times_x(&self, lambda: &[Scalar], power: usize) -> Vec<Scalar> {
        assert!(power < self.n);
        let mut v = self.a_zero();
        let dk = self.dim_k();
        v[power * dk..(power + 1) * dk].clone_from_slice(lambda);
        v
    }

    pub fn k_to_a(&self, lambda: &[Scalar]) -> Vec<Scalar> {
        self.k_times_x(lambda, 0)
    }

    /// `x^e` in normal form, for any `e`.
    pub fn x_pow(&self, e: usize) -> Vec<Scalar> {
        let mut poly = vec![self.base.zero(); e + 1];
        poly[e] = self.base.unit().to_vec();
        self.reduce(&KPoly { coeffs: poly })
    }

    /// The `K`-coefficient of `x^power` in an element of `A`.
    pub fn a_component(&self, a: &[Scalar], power: usize) -> Vec<Scalar> {
        let dk = self.dim_k();
        a[power * dk..(power + 1) * dk].to_vec()
    }

    pub fn a_basis_product(&self, p: usize, q: usize) -> &[Scalar] {
        &self.table[p * self.dim_a() + q]
    }

    /// Product in `A` of two normal-form vectors.
    pub fn a_mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let da = self.dim_a();
        let mut out = self.a_zero();
        for (p, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (q, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = f.mul(x, y);
                for (r, c) in self.table[p * da + q].iter().enumerate() {
                    if !c.is_zero() {
                        f.add_mul_assign(&mut out[r], &xy, c);
                    }
                }
            }
        }
        out
    }

    pub fn a_multiply(&self, a: &AElement, b: &AElement) -> AElement {
        self.to_element(&self.a_mul(&self.from_element(a), &self.from_element(b)))
    }

    pub fn to_element(&self, v: &[Scalar]) -> AElement {
        AElement {
            coeffs: (0..self.n).map(|i| self.a_component(v, i)).collect(),
        }
    }

    pub fn from_element(&self, a: &AElement) -> Vec<Scalar> {
        a.coeffs.iter().flatten().cloned().collect()
    }

    /// Matrix of left multiplication by `a` on `A`.
    pub fn a_left_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim_a()).map(|q| self.a_mul(a, &self.a_basis(q))).collect();
        Matrix::from_columns(self.field(), self.dim_a(), &cols)
    }

    /// Matrix of right multiplication by `a` on `A`.
    pub fn a_right_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim_a()).map(|q| self.a_mul(&self.a_basis(q), a)).collect();
        Matrix::from_columns(self.field(), self.dim_a(), &cols)
    }

    /// Largest power of `x` with a nonzero coefficient (None for zero).
    pub fn a_degree(&self, a: &[Scalar]) -> Option<usize> {
        (0..self.n).rev().find(|&i| !vector::is_zero(&self.a_component(a, i)))
    }

    // ---- polynomials in K[x, alpha] ----

    /// Product in the Ore extension: `(a x^i)(b x^j) = a alpha^i(b) x^{i+j}`.
    pub fn poly_mul(&self, p: &KPoly, q: &KPoly) -> KPoly {
        let f = self.field();
        if p.coeffs.is_empty() || q.coeffs.is_empty() {
            return KPoly { coeffs: Vec::new() };
        }
        let mut out = vec![self.base.zero(); p.coeffs.len() + q.coeffs.len() - 1];
        for (i, a) in p.coeffs.iter().enumerate() {
            if vector::is_zero(a) {
                continue;
            }
            for (j, b) in q.coeffs.iter().enumerate() {
                if vector::is_zero(b) {
                    continue;
                }
                let c = self.base.mul(a, &self.alpha_pow_apply(i, b));
                vector::add_assign(f, &mut out[i + j], &c);
            }
        }
        KPoly { coeffs: out }
    }

    /// `f` itself as a polynomial of degree `n`.
    pub fn f_poly(&self) -> KPoly {
        KPoly {
            coeffs: (0..=self.n).map(|s| self.lambda(self.n - s)).collect(),
        }
    }

    /// Left division `P = quotient * f + remainder`, `deg(remainder) < n`.
    pub fn divide_by_f(&self, p: &KPoly) -> (KPoly, KPoly) {
        let f = self.field();
        let n = self.n;
        let mut rem = p.coeffs.clone();
        let qlen = rem.len().saturating_sub(n);
        let mut quot = vec![self.base.zero(); qlen];
        for s in (n..rem.len()).rev() {
            let c = std::mem::replace(&mut rem[s], self.base.zero());
            if vector::is_zero(&c) {
                continue;
            }
            // c x^s = c x^{s-n} f - sum_l c lambda_l x^{s-l}, using alpha(lambda_l) = lambda_l
            for l in 1..=n {
                let lam = &self.lambdas[l - 1];
                if vector::is_zero(lam) {
                    continue;
                }
                let t = self.base.mul(&c, lam);
                rem[s - l] = vector::sub(f, &rem[s - l], &t);
            }
            quot[s - n] = c;
        }
        rem.truncate(n.min(rem.len()));
        (KPoly { coeffs: quot }, KPoly { coeffs: rem })
    }

    /// Normal form in `A` of a polynomial.
    pub fn reduce(&self, p: &KPoly) -> Vec<Scalar> {
        let (_, r) = self.divide_by_f(p);
        let mut v = self.a_zero();
        for (i, c) in r.coeffs.iter().enumerate() {
            v[i * self.dim_k()..(i + 1) * self.dim_k()].clone_from_slice(c);
        }
        v
    }

    /// The division quotient of `x^e` by `f`, reduced into `A`.
    pub fn x_pow_quotient(&self, e: usize) -> Vec<Scalar> {
        let mut poly = vec![self.base.zero(); e + 1];
        poly[e] = self.base.unit().to_vec();
        let (q, _) = self.divide_by_f(&KPoly { coeffs: poly });
        self.reduce(&q)
    }

    /// Formal derivative `f' = sum (n - i) lambda_i x^{n-i-1}` in `A`.
    pub fn f_derivative(&self) -> Vec<Scalar> {
        let f = self.field();
        let mut v = self.a_zero();
        for i in 0..self.n {
            let c = vector::scale(f, &self.lambda(i), &f.from_i64((self.n - i) as i64));
            let term = self.k_times_x(&c, self.n - i - 1);
            v = vector::add(f, &v, &term);
        }
        v
    }

    pub fn format_a(&self, a: &[Scalar]) -> String {
        let mut parts = Vec::new();
        for i in 0..self.n {
            let c = self.a_component(a, i);
            if vector::is_zero(&c) {
                continue;
            }
            let k = self.base.format(&c);
            parts.push(match i {
                0 => k,
                1 => format!("({})x", k),
                _ => format!("({})x^{}", k, i),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl KPoly {
    pub fn monomial(coeff: Vec<Scalar>, power: usize, zero: Vec<Scalar>) -> Self {
        let mut coeffs = vec![zero; power + 1];
        coeffs[power] = coeff;
        KPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| vector::is_zero(c))
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures;

    #[test]
    fn truncated_division() {
        let a = fixtures::truncated(3);
        let k = a.base();
        let one = k.unit().to_vec();
        let x2 = KPoly::monomial(one.clone(), 2, k.zero());
        let (q, r) = a.divide_by_f(&x2);
        assert!(q.is_zero());
        assert_eq!(r, KPoly::monomial(one.clone(), 2, k.zero()));
        let x4 = KPoly::monomial(one.clone(), 4, k.zero());
        let (q, r) = a.divide_by_f(&x4);
        assert_eq!(q, KPoly::monomial(one, 1, k.zero()));
        assert!(r.is_zero());
    }

    #[test]
    fn rank_one_division_of_x_cubed() {
        let a = fixtures::rank_one_c4();
        let k = a.base();
        let f = a.field();
        let x3 = KPoly::monomial(k.unit().to_vec(), 3, k.zero());
        let (q, r) = a.divide_by_f(&x3);
        assert_eq!(q, KPoly::monomial(k.unit().to_vec(), 1, k.zero()));
        // remainder (g^2 - 1) x
        let mut g2m1 = k.zero();
        g2m1[0] = f.from_i64(-1);
        g2m1[2] = f.one();
        assert_eq!(r.coeffs[1], g2m1);
        assert!(vector::is_zero(&r.coeffs[0]));
    }

    #[test]
    fn sweedler_products() {
        let a = fixtures::sweedler();
        let f = a.field();
        let g = a.base().basis(1);
        let gx = a.k_times_x(&g, 1);
        assert!(vector::is_zero(&a.a_mul(&gx, &gx)));
        let x = a.x_pow(1);
        // x g = -g x
        assert_eq!(a.a_mul(&x, &a.k_to_a(&g)), vector::neg(f, &gx));
    }

    #[test]
    fn rank_one_x_squared() {
        let a = fixtures::rank_one_c4();
        let x = a.x_pow(1);
        let f = a.field();
        let mut g2m1 = a.base().zero();
        g2m1[0] = f.from_i64(-1);
        g2m1[2] = f.one();
        assert_eq!(a.a_mul(&x, &x), a.k_to_a(&g2m1));
        assert!(vector::is_zero(&a.a_mul(&a.x_pow(1), &a.x_pow(2))) || a.n() != 3);
    }

    #[test]
    fn truncated_x_times_x2_vanishes() {
        let a = fixtures::truncated(3);
        assert!(vector::is_zero(&a.a_mul(&a.x_pow(1), &a.x_pow(2))));
    }

    #[test]
    fn invalid_lambda_reported() {
        let err = fixtures::sweedler_with_lambda2_minus_g().unwrap_err();
        match err {
            AlgebraError::InvalidExtension(p) => assert!(p.iter().any(|m| m.contains("alpha(lambda_2)"))),
            e => panic!("unexpected error {e}"),
        }
    }
}
