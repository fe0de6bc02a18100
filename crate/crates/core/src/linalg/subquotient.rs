//! Quotients of a coordinate space by a computed subspace.

use super::field::{FieldDescriptor, Scalar};
use super::matrix::{vector, Matrix};

/// `k^ambient / span(sub_basis)`, with explicit projection and section.
///
/// The section sends the `t`-th quotient basis vector to the `t`-th non-pivot
/// coordinate vector of the ambient space.
#[derive(Clone, Debug)]
pub struct SubquotientSpace {
    field: FieldDescriptor,
    ambient_dim: usize,
    /// Reduced echelon basis of the subspace, one row each.
    sub_basis: Matrix,
    pivots: Vec<usize>,
    /// Non-pivot ambient coordinates, in increasing order.
    free: Vec<usize>,
    projection: Matrix,
}

impl SubquotientSpace {
    pub fn new(field: &FieldDescriptor, ambient_dim: usize, spanning: &[Vec<Scalar>]) -> Self {
        let (sub_basis, pivots) = if spanning.is_empty() {
            (Matrix::zeros(field, 0, ambient_dim), Vec::new())
        } else {
            let (r, p) = Matrix::from_rows(field, spanning.to_vec(), ambient_dim).rref();
            (r.block(0, 0, p.len(), ambient_dim), p)
        };
        let mut is_pivot = vec![false; ambient_dim];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..ambient_dim).filter(|&c| !is_pivot[c]).collect();
        let mut projection = Matrix::zeros(field, free.len(), ambient_dim);
        for (t, &c) in free.iter().enumerate() {
            projection.set(t, c, field.one());
        }
        for (i, &p) in pivots.iter().enumerate() {
            for (t, &c) in free.iter().enumerate() {
                let e = sub_basis.get(i, c);
                if !e.is_zero() {
                    projection.set(t, p, field.neg(e));
                }
            }
        }
        SubquotientSpace {
            field: field.clone(),
            ambient_dim,
            sub_basis,
            pivots,
            free,
            projection,
        }
    }

    /// Block direct sum; ambient and quotient coordinates are concatenated in order.
    pub fn direct_sum(field: &FieldDescriptor, parts: &[&SubquotientSpace]) -> Self {
        let ambient_dim: usize = parts.iter().map(|p| p.ambient_dim).sum();
        let sub_dim: usize = parts.iter().map(|p| p.sub_dim()).sum();
        let quot_dim: usize = parts.iter().map(|p| p.quotient_dim()).sum();
        let mut sub_basis = Matrix::zeros(field, sub_dim, ambient_dim);
        let mut projection = Matrix::zeros(field, quot_dim, ambient_dim);
        let mut pivots = Vec::with_capacity(sub_dim);
        let mut free = Vec::with_capacity(quot_dim);
        let (mut a0, mut s0, mut q0) = (0, 0, 0);
        for p in parts {
            sub_basis.set_block(s0, a0, &p.sub_basis);
            projection.set_block(q0, a0, &p.projection);
            pivots.extend(p.pivots.iter().map(|c| c + a0));
            free.extend(p.free.iter().map(|c| c + a0));
            a0 += p.ambient_dim;
            s0 += p.sub_dim();
            q0 += p.quotient_dim();
        }
        SubquotientSpace {
            field: field.clone(),
            ambient_dim,
            sub_basis,
            pivots,
            free,
            projection,
        }
    }

    /// The whole ambient space (nothing quotiented out).
    pub fn full(field: &FieldDescriptor, ambient_dim: usize) -> Self {
        Self::new(field, ambient_dim, &[])
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn quotient_dim(&self) -> usize {
        self.free.len()
    }

    pub fn sub_dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn sub_basis(&self) -> &Matrix {
        &self.sub_basis
    }

    pub fn free_coordinates(&self) -> &[usize] {
        &self.free
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    pub fn section(&self) -> Matrix {
        let mut s = Matrix::zeros(&self.field, self.ambient_dim, self.free.len());
        for (t, &c) in self.free.iter().enumerate() {
            s.set(c, t, self.field.one());
        }
        s
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.apply(v)
    }

    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        let mut v = vector::zero(&self.field, self.ambient_dim);
        for (t, &c) in self.free.iter().enumerate() {
            v[c] = q[t].clone();
        }
        v
    }

    /// Lift of the `t`-th quotient basis vector.
    pub fn basis_lift(&self, t: usize) -> Vec<Scalar> {
        vector::unit(&self.field, self.ambient_dim, self.free[t])
    }

    /// Whether `v` lies in the subspace being quotiented out.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        vector::is_zero(&self.project(v))
    }

    /// Whether the subspace is everything.
    pub fn is_everything(&self) -> bool {
        self.free.is_empty()
    }
}

/// Free-function form of [`SubquotientSpace::new`].
pub fn subquotient(field: &FieldDescriptor, ambient_dim: usize, spanning: &[Vec<Scalar>]) -> SubquotientSpace {
    SubquotientSpace::new(field, ambient_dim, spanning)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(f: &FieldDescriptor, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|x| f.from_i64(*x)).collect()
    }

    #[test]
    fn basic_quotients() {
        let f = FieldDescriptor::rationals();
        let q = subquotient(&f, 3, &[v(&f, &[1, 1, 0])]);
        assert_eq!(q.quotient_dim(), 2);
        assert!(q.projection().mul(&q.section()).is_identity());
        assert!(q.contains(&v(&f, &[2, 2, 0])));
        assert!(!q.contains(&v(&f, &[1, 0, 0])));

        let q = subquotient(&f, 4, &[]);
        assert!(q.projection().is_identity());

        let q = subquotient(&f, 2, &[v(&f, &[1, 0]), v(&f, &[0, 1])]);
        assert_eq!(q.quotient_dim(), 0);
    }

    #[test]
    fn direct_sum_matches_joint_construction() {
        let f = FieldDescriptor::rationals();
        let a = subquotient(&f, 3, &[v(&f, &[1, 1, 0])]);
        let b = subquotient(&f, 2, &[v(&f, &[2, 0])]);
        let s = SubquotientSpace::direct_sum(&f, &[&a, &b]);
        let joint = subquotient(&f, 5, &[v(&f, &[1, 1, 0, 0, 0]), v(&f, &[0, 0, 0, 2, 0])]);
        assert_eq!(s.projection(), joint.projection());
        assert_eq!(s.free_coordinates(), joint.free_coordinates());
        assert!(s.projection().mul(&s.section()).is_identity());
    }
}
