//! Exact scalars: the rationals and cyclotomic fields `Q(zeta_d)`.
//!
//! A cyclotomic element is stored as its residue polynomial in `zeta`
//! modulo the cyclotomic polynomial `Phi_d`, with rational coefficients.
//! Every [`Scalar`] of a given field has exactly `deg(Phi_d)` coefficients,
//! so structural equality is field equality.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    Cyclotomic,
}

#[derive(Debug, PartialEq, Eq)]
struct FieldInner {
    order: usize,
    /// Coefficients of `Phi_d`, lowest degree first. Monic.
    modulus: Vec<BigInt>,
}

/// Descriptor of the ground field. Cheap to clone.
#[derive(Clone, Debug)]
pub struct FieldDescriptor {
    inner: Arc<FieldInner>,
}

impl PartialEq for FieldDescriptor {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for FieldDescriptor {}

/// An element of a [`FieldDescriptor`]'s field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    coeffs: Vec<Rational>,
}

fn poly_mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of integer polynomials by a monic divisor. Panics if the
/// remainder is nonzero.
fn poly_div_exact_int(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    if rem.len() <= dd {
        assert!(rem.iter().all(Zero::is_zero));
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (t, d) in den.iter().enumerate() {
            rem[k + t] -= &c * d;
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "division not exact");
    quot
}

/// `Phi_d` by exact division of `x^d - 1` by `Phi_e` for every proper divisor `e`.
pub fn cyclotomic_polynomial(d: usize) -> Vec<BigInt> {
    assert!(d >= 1);
    let mut num = vec![BigInt::zero(); d + 1];
    num[0] = -BigInt::one();
    num[d] = BigInt::one();
    let mut den = vec![BigInt::one()];
    for e in 1..d {
        if d % e == 0 {
            den = poly_mul_int(&den, &cyclotomic_polynomial(e));
        }
    }
    poly_div_exact_int(&num, &den)
}

pub fn euler_phi(d: usize) -> usize {
    (1..=d).filter(|k| gcd(*k, d) == 1).count()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Builds a field descriptor. `cyclotomic` of order 1 is the rationals.
pub fn make_field(kind: FieldKind, d: usize) -> FieldDescriptor {
    match kind {
        FieldKind::Rationals => FieldDescriptor::rationals(),
        FieldKind::Cyclotomic => FieldDescriptor::cyclotomic(d),
    }
}

impl FieldDescriptor {
    pub fn rationals() -> Self {
        Self::cyclotomic(1)
    }

    pub fn cyclotomic(d: usize) -> Self {
        assert!(d >= 1, "cyclotomic order must be positive");
        FieldDescriptor {
            inner: Arc::new(FieldInner {
                order: d,
                modulus: cyclotomic_polynomial(d),
            }),
        }
    }

    pub fn kind(&self) -> FieldKind {
        if self.inner.order == 1 {
            FieldKind::Rationals
        } else {
            FieldKind::Cyclotomic
        }
    }

    /// The order `d` of the adjoined root of unity (1 for the rationals).
    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.inner.modulus
    }

    /// Degree of the field over the rationals.
    pub fn degree(&self) -> usize {
        self.inner.modulus.len() - 1
    }

    pub fn zero(&self) -> Scalar {
        Scalar {
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_rational(Rational::one())
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_rational(Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(&self, v: Rational) -> Scalar {
        let mut s = self.zero();
        s.coeffs[0] = v;
        s
    }

    pub fn from_fraction(&self, num: i64, den: i64) -> Scalar {
        self.from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Builds an element from coefficients in powers of `zeta`; any length is
    /// accepted and reduced modulo `Phi_d`.
    pub fn from_coeffs(&self, coeffs: Vec<Rational>) -> Scalar {
        self.reduce(coeffs)
    }

    pub fn zeta(&self) -> Scalar {
        self.zeta_pow(1)
    }

    /// `zeta_d^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> Scalar {
        let d = self.inner.order as i64;
        let e = k.rem_euclid(d) as usize;
        let mut c = vec![Rational::zero(); e + 1];
        c[e] = Rational::one();
        self.reduce(c)
    }

    fn reduce(&self, mut c: Vec<Rational>) -> Scalar {
        let deg = self.degree();
        let m = &self.inner.modulus;
        while c.len() > deg {
            let top = c.pop().unwrap();
            if !top.is_zero() {
                let shift = c.len() - deg;
                for (t, mc) in m.iter().enumerate().take(deg) {
                    if !mc.is_zero() {
                        c[shift + t] -= &top * Rational::from_integer(mc.clone());
                    }
                }
            }
        }
        c.resize(deg, Rational::zero());
        Scalar { coeffs: c }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        Scalar {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        Scalar {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        Scalar {
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let deg = self.degree();
        if deg == 1 {
            return Scalar {
                coeffs: vec![&a.coeffs[0] * &b.coeffs[0]],
            };
        }
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut prod = vec![Rational::zero(); 2 * deg - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce(prod)
    }

    /// `a += b * c`
    pub fn add_mul_assign(&self, a: &mut Scalar, b: &Scalar, c: &Scalar) {
        if self.degree() == 1 {
            if !b.coeffs[0].is_zero() && !c.coeffs[0].is_zero() {
                a.coeffs[0] += &b.coeffs[0] * &c.coeffs[0];
            }
            return;
        }
        let p = self.mul(b, c);
        for (x, y) in a.coeffs.iter_mut().zip(p.coeffs) {
            *x += y;
        }
    }

    pub fn scale_rational(&self, a: &Scalar, q: &Rational) -> Scalar {
        Scalar {
            coeffs: a.coeffs.iter().map(|x| x * q).collect(),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        if self.degree() == 1 {
            return Some(Scalar {
                coeffs: vec![a.coeffs[0].recip()],
            });
        }
        // Extended Euclid in Q[x]: find s with s*a = 1 mod Phi.
        let modulus: Vec<Rational> = self
            .inner
            .modulus
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let mut r0 = modulus;
        let mut r1 = trim(a.coeffs.clone());
        let mut s0: Vec<Rational> = vec![Rational::zero()];
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !(r1.len() == 1 && r1[0].is_zero()) {
            let (q, r) = poly_divrem_q(&r0, &r1);
            let s2 = poly_sub_q(&s0, &poly_mul_q(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        // r0 is a nonzero constant since Phi is irreducible.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip();
        let s: Vec<Rational> = s0.iter().map(|x| x * &c).collect();
        Some(self.reduce(s))
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Embeds a scalar of a subfield `Q(zeta_e)` (with `e | d`) into this field.
    pub fn embed(&self, other: &FieldDescriptor, s: &Scalar) -> Option<Scalar> {
        let d = self.order();
        let e = other.order();
        if d % e != 0 {
            return None;
        }
        let step = (d / e) as i64;
        let mut acc = self.zero();
        for (k, c) in s.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let z = self.zeta_pow(step * k as i64);
                acc = self.add(&acc, &self.scale_rational(&z, c));
            }
        }
        Some(acc)
    }

    /// Parses `"p/q"` (or an integer) as a rational element.
    pub fn parse_rational(&self, text: &str) -> Result<Scalar, String> {
        let t = text.trim();
        let q: Rational = t.parse().map_err(|_| format!("'{}' is not a rational number p/q", text))?;
        Ok(self.from_rational(q))
    }

    /// Parses coefficients of `1, zeta, zeta^2, ...`, reduced modulo the cyclotomic polynomial.
    pub fn parse_coefficients(&self, texts: &[String]) -> Result<Scalar, String> {
        if texts.is_empty() {
            return Err("empty coefficient array".into());
        }
        if self.kind() == FieldKind::Rationals && texts.len() > 1 {
            return Err("coefficient arrays longer than 1 need a cyclotomic field".into());
        }
        let mut coeffs = Vec::with_capacity(texts.len());
        for t in texts {
            coeffs.push(t.trim().parse::<Rational>().map_err(|_| format!("'{}' is not a rational number p/q", t))?);
        }
        Ok(self.from_coeffs(coeffs))
    }

    pub fn format(&self, s: &Scalar) -> String {
        s.to_string()
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    if p.is_empty() {
        p.push(Rational::zero());
    }
    p
}

fn poly_mul_q(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub_q(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let z = Rational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
            .collect(),
    )
}

fn poly_divrem_q(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = trim(a.to_vec());
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (vec![Rational::zero()], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (t, bc) in b.iter().enumerate() {
            rem[k + t] -= &c * bc;
        }
        quot[k] = c;
    }
    (trim(quot), trim(rem))
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The rational value, if this scalar lies in the prime field.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Rough size measure used for pivot selection.
    pub(crate) fn height(&self) -> u64 {
        self.coeffs
            .iter()
            .map(|c| c.numer().bits() + c.denom().bits())
            .sum()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{}", q);
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, abs) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{}", k),
            };
            if k == 0 {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", abs, mono)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|x| BigInt::from(*x)).collect()
    }

    #[test]
    fn cyclotomic_moduli() {
        let f1 = make_field(FieldKind::Cyclotomic, 1);
        assert_eq!(f1.kind(), FieldKind::Rationals);
        assert_eq!(f1.modulus(), ints(&[-1, 1]).as_slice());
        assert_eq!(make_field(FieldKind::Cyclotomic, 4).modulus(), ints(&[1, 0, 1]).as_slice());
        assert_eq!(make_field(FieldKind::Cyclotomic, 6).modulus(), ints(&[1, -1, 1]).as_slice());
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        for d in 1..=20 {
            assert_eq!(cyclotomic_polynomial(d).len() - 1, euler_phi(d));
        }
    }

    #[test]
    fn zeta_relations() {
        for d in [2usize, 3, 4, 5, 6, 8] {
            let f = FieldDescriptor::cyclotomic(d);
            let z = f.zeta();
            assert!(f.pow(&z, d as u64).is_one());
            // sum of all d-th roots of unity vanishes for d > 1
            let mut s = f.zero();
            for k in 0..d as i64 {
                s = f.add(&s, &f.zeta_pow(k));
            }
            assert!(s.is_zero());
        }
    }

    #[test]
    fn inverse_in_q_zeta3() {
        let f = FieldDescriptor::cyclotomic(3);
        let a = f.add(&f.one(), &f.from_i64(2));
        let a = f.add(&a, &f.zeta());
        let ai = f.inv(&a).unwrap();
        assert!(f.mul(&a, &ai).is_one());
        assert!(f.inv(&f.zero()).is_none());
    }

    #[test]
    fn embedding_subfield() {
        let f4 = FieldDescriptor::cyclotomic(4);
        let f2 = FieldDescriptor::cyclotomic(2);
        let m1 = f2.zeta();
        let e = f4.embed(&f2, &m1).unwrap();
        assert_eq!(e, f4.from_i64(-1));
    }
}
