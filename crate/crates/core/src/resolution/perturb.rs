//! Homological perturbation on finite graded windows.
//!
//! Convention: `i : Y -> X`, `p : X -> Y`, `h : X_N -> X_{N+1}` with
//! `i p - 1 = d h + h d`. A perturbation `delta` of `d` gives
//! `Delta = sum_k (delta h)^k delta` and
//! `d_Y^1 = d_Y + p Delta i`, `i^1 = i + h Delta i`, `p^1 = p + p Delta h`,
//! `h^1 = h + h Delta h`.

use thiserror::Error;

use crate::linalg::{FieldDescriptor, Matrix};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PerturbError {
    #[error("delta h is not nilpotent in degree {0}")]
    NotNilpotent(usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// Degrees `0 ..= top`. `dx[N] : X_N -> X_{N-1}` (`dx[0]` is the zero map into a
/// zero space); `h[N]` exists for `N < top`.
#[derive(Clone, Debug)]
pub struct Retract {
    pub field: FieldDescriptor,
    pub dx: Vec<Matrix>,
    pub dy: Vec<Matrix>,
    pub i: Vec<Matrix>,
    pub p: Vec<Matrix>,
    pub h: Vec<Matrix>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RetractReport {
    pub squares: bool,
    pub i_chain: bool,
    pub p_chain: bool,
    pub pi_identity: bool,
    pub homotopy: bool,
    pub hi_zero: bool,
    pub ph_zero: bool,
    pub hh_zero: bool,
}

impl RetractReport {
    pub fn is_retract(&self) -> bool {
        self.squares && self.i_chain && self.p_chain && self.pi_identity && self.homotopy
    }

    pub fn is_special(&self) -> bool {
        self.is_retract() && self.hi_zero && self.ph_zero && self.hh_zero
    }
}

impl Retract {
    pub fn top(&self) -> usize {
        self.dx.len() - 1
    }

    pub fn dim_x(&self, n: usize) -> usize {
        self.dx[n].cols()
    }

    pub fn dim_y(&self, n: usize) -> usize {
        self.dy[n].cols()
    }

    fn validate(&self) -> Result<(), PerturbError> {
        let top = self.top();
        if self.dy.len() != top + 1 || self.i.len() != top + 1 || self.p.len() != top + 1 || self.h.len() != top {
            return Err(PerturbError::Shape("graded pieces of different lengths".into()));
        }
        for n in 0..=top {
            let (x, y) = (self.dim_x(n), self.dim_y(n));
            if self.i[n].rows() != x || self.i[n].cols() != y || self.p[n].rows() != y || self.p[n].cols() != x {
                return Err(PerturbError::Shape(format!("i/p in degree {}", n)));
            }
            if n < top && (self.h[n].rows() != self.dim_x(n + 1) || self.h[n].cols() != x) {
                return Err(PerturbError::Shape(format!("h in degree {}", n)));
            }
        }
        Ok(())
    }

    pub fn check(&self) -> RetractReport {
        let top = self.top();
        let id = |d: usize| Matrix::identity(&self.field, d);
        let mut rep = RetractReport {
            squares: true,
            i_chain: true,
            p_chain: true,
            pi_identity: true,
            homotopy: true,
            hi_zero: true,
            ph_zero: true,
            hh_zero: true,
        };
        for n in 0..=top {
            if n >= 2 && (!self.dx[n - 1].mul(&self.dx[n]).is_zero() || !self.dy[n - 1].mul(&self.dy[n]).is_zero()) {
                rep.squares = false;
            }
            if n >= 1 {
                if self.dx[n].mul(&self.i[n]) != self.i[n - 1].mul(&self.dy[n]) {
                    rep.i_chain = false;
                }
                if self.dy[n].mul(&self.p[n]) != self.p[n - 1].mul(&self.dx[n]) {
                    rep.p_chain = false;
                }
            }
            if !self.p[n].mul(&self.i[n]).is_identity() {
                rep.pi_identity = false;
            }
            if n < top {
                let mut rhs = self.dx[n + 1].mul(&self.h[n]);
                if n >= 1 {
                    rhs = rhs.add(&self.h[n - 1].mul(&self.dx[n]));
                }
                if self.i[n].mul(&self.p[n]).sub(&id(self.dim_x(n))) != rhs {
                    rep.homotopy = false;
                }
                if !self.h[n].mul(&self.i[n]).is_zero() {
                    rep.hi_zero = false;
                }
                if !self.p[n + 1].mul(&self.h[n]).is_zero() {
                    rep.ph_zero = false;
                }
                if n + 1 < top && !self.h[n + 1].mul(&self.h[n]).is_zero() {
                    rep.hh_zero = false;
                }
            }
        }
        rep
    }

    /// Replaces `h` by `pi h pi` (`pi = 1 - ip`) and then by `-h d h`, which gives
    /// `h i = 0`, `p h = 0` and `h h = 0` when `p i = 1`.
    pub fn make_special(&self) -> Retract {
        let top = self.top();
        let pis: Vec<Matrix> = (0..=top)
            .map(|n| Matrix::identity(&self.field, self.dim_x(n)).sub(&self.i[n].mul(&self.p[n])))
            .collect();
        let h1: Vec<Matrix> = (0..top).map(|n| pis[n + 1].mul(&self.h[n]).mul(&pis[n])).collect();
        let h2: Vec<Matrix> = (0..top).map(|n| h1[n].mul(&self.dx[n + 1]).mul(&h1[n]).neg()).collect();
        Retract { h: h2, ..self.clone() }
    }
}

/// `Delta_N = sum_k (delta_N h_{N-1})^k delta_N` for `N = 1 ..= top`.
fn big_delta(r: &Retract, delta: &[Matrix]) -> Result<Vec<Matrix>, PerturbError> {
    let top = r.top();
    let mut out = vec![Matrix::zeros(&r.field, 0, r.dim_x(0))];
    for n in 1..=top {
        let dh = delta[n].mul(&r.h[n - 1]);
        let mut term = delta[n].clone();
        let mut acc = delta[n].clone();
        let mut steps = 0;
        loop {
            term = dh.mul(&term);
            if term.is_zero() {
                break;
            }
            acc = acc.add(&term);
            steps += 1;
            if steps > r.dim_x(n - 1) + 1 {
                return Err(PerturbError::NotNilpotent(n));
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// The perturbed data on degrees `0 ..= top - 1`.
pub fn perturb(r: &Retract, delta: &[Matrix]) -> Result<Retract, PerturbError> {
    r.validate()?;
    let top = r.top();
    if delta.len() != top + 1 {
        return Err(PerturbError::Shape("delta needs one map per degree".into()));
    }
    for n in 0..=top {
        if delta[n].cols() != r.dim_x(n) || delta[n].rows() != r.dx[n].rows() {
            return Err(PerturbError::Shape(format!("delta in degree {}", n)));
        }
    }
    let big = big_delta(r, delta)?;
    let new_top = top - 1;
    let mut dx = Vec::new();
    let mut dy = Vec::new();
    let mut i = Vec::new();
    let mut p = Vec::new();
    let mut h = Vec::new();
    for n in 0..=new_top {
        dx.push(r.dx[n].add(&delta[n]));
        if n == 0 {
            dy.push(r.dy[0].clone());
            i.push(r.i[0].clone());
        } else {
            let di = big[n].mul(&r.i[n]);
            dy.push(r.dy[n].add(&r.p[n - 1].mul(&di)));
            i.push(r.i[n].add(&r.h[n - 1].mul(&di)));
        }
        let dh = big[n + 1].mul(&r.h[n]);
        p.push(r.p[n].add(&r.p[n].mul(&dh)));
        if n < new_top {
            h.push(r.h[n].add(&r.h[n].mul(&dh)));
        }
    }
    Ok(Retract {
        field: r.field.clone(),
        dx,
        dy,
        i,
        p,
        h,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rationals()
    }

    // X = Y (+) (k --1--> k) in degrees 1, 0, with Y = k in degrees 0 and 1, d_Y = 0.
    fn toy() -> Retract {
        let f = q();
        let dx1 = Matrix::from_i64(&f, &[&[0, 0], &[0, 1]]);
        let z = |r: usize, c: usize| Matrix::zeros(&f, r, c);
        let inc = Matrix::from_i64(&f, &[&[1], &[0]]);
        let proj = Matrix::from_i64(&f, &[&[1, 0]]);
        // i p - 1 = diag(0, -1) on both degrees; d h + h d with h = [[0,0],[0,-1]]
        let h0 = Matrix::from_i64(&f, &[&[0, 0], &[0, -1]]);
        Retract {
            field: f.clone(),
            dx: vec![z(0, 2), dx1, z(2, 0)],
            dy: vec![z(0, 1), z(1, 1), z(1, 0)],
            i: vec![inc.clone(), inc, z(0, 0)],
            p: vec![proj.clone(), proj, z(0, 0)],
            h: vec![h0, z(0, 2)],
        }
    }

    #[test]
    fn toy_is_special() {
        let r = toy();
        let rep = r.check();
        assert!(rep.is_special(), "{:?}", rep);
    }

    #[test]
    fn zero_perturbation_is_identity() {
        let r = toy();
        let delta: Vec<Matrix> = r.dx.iter().map(|d| Matrix::zeros(&r.field, d.rows(), d.cols())).collect();
        let p = perturb(&r, &delta).unwrap();
        assert_eq!(p.dy[1], r.dy[1]);
        assert_eq!(p.i[1], r.i[1]);
        assert_eq!(p.h[0], r.h[0]);
    }

    #[test]
    fn perturbation_transfers_a_differential() {
        let f = q();
        let r = toy();
        // delta sends the Y-part of X_1 onto the Y-part of X_0: (d + delta)^2 = 0 trivially
        let delta = vec![
            Matrix::zeros(&f, 0, 2),
            Matrix::from_i64(&f, &[&[1, 0], &[0, 0]]),
            Matrix::zeros(&f, 2, 0),
        ];
        let p = perturb(&r, &delta).unwrap();
        assert_eq!(p.dy[1], Matrix::from_i64(&f, &[&[1]]));
        let rep = p.check();
        assert!(rep.is_special(), "{:?}", rep);
    }

    #[test]
    fn special_replacement() {
        let f = q();
        let mut r = toy();
        // the extra Y_0 -> Y_1 term is invisible to d h + h d but breaks h i = 0
        r.h[0] = Matrix::from_i64(&f, &[&[1, 0], &[0, -1]]);
        let rep = r.check();
        assert!(rep.is_retract() && !rep.hi_zero, "{:?}", rep);
        let s = r.make_special();
        assert!(s.check().is_special(), "{:?}", s.check());
    }
}
