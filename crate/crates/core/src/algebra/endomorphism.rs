use crate::linalg::{Matrix, Scalar};

use super::base::BaseAlgebra;
use super::AlgebraError;

/// An algebra endomorphism of `K`; column `j` of the matrix is `alpha(basis_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraEndomorphism {
    matrix: Matrix,
}

impl AlgebraEndomorphism {
    /// Checks `alpha(1) = 1` and multiplicativity on all basis pairs.
    pub fn new(k: &BaseAlgebra, matrix: Matrix) -> Result<Self, AlgebraError> {
        let d = k.dim();
        if matrix.rows() != d || matrix.cols() != d {
            return Err(AlgebraError::Malformed(format!("endomorphism matrix must be {0}x{0}", d)));
        }
        let e = AlgebraEndomorphism { matrix };
        if e.apply(k.unit()) != k.unit() {
            return Err(AlgebraError::NotEndomorphism("alpha(1) != 1".into()));
        }
        for i in 0..d {
            for j in 0..d {
                let lhs = e.apply(&k.basis_product(i, j));
                let rhs = k.mul(&e.apply(&k.basis(i)), &e.apply(&k.basis(j)));
                if lhs != rhs {
                    return Err(AlgebraError::NotEndomorphism(format!(
                        "alpha({} {}) != alpha({}) alpha({})",
                        k.labels()[i],
                        k.labels()[j],
                        k.labels()[i],
                        k.labels()[j]
                    )));
                }
            }
        }
        Ok(e)
    }

    pub fn identity(k: &BaseAlgebra) -> Self {
        AlgebraEndomorphism {
            matrix: Matrix::identity(k.field(), k.dim()),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// Diagonal entries, if the matrix is diagonal.
    pub fn diagonal(&self) -> Option<Vec<Scalar>> {
        let d = self.matrix.rows();
        for r in 0..d {
            for c in 0..d {
                if r != c && !self.matrix.get(r, c).is_zero() {
                    return None;
                }
            }
        }
        Some((0..d).map(|i| self.matrix.get(i, i).clone()).collect())
    }
}

/// `alpha(g) = chi(g) g` on a group algebra.
pub fn character_endomorphism(k: &BaseAlgebra, chi: &[Scalar]) -> Result<AlgebraEndomorphism, AlgebraError> {
    let g = k
        .group()
        .ok_or_else(|| AlgebraError::Malformed("character twist requires a group algebra".into()))?;
    let f = k.field();
    if chi.len() != g.order() {
        return Err(AlgebraError::Malformed(format!(
            "character has {} values, group has order {}",
            chi.len(),
            g.order()
        )));
    }
    for a in 0..g.order() {
        if chi[a].is_zero() {
            return Err(AlgebraError::NotMultiplicative(format!("chi({}) = 0", g.label(a))));
        }
        for b in 0..g.order() {
            if f.mul(&chi[a], &chi[b]) != chi[g.mul(a, b)] {
                return Err(AlgebraError::NotMultiplicative(format!(
                    "chi({}) chi({}) != chi({})",
                    g.label(a),
                    g.label(b),
                    g.label(g.mul(a, b))
                )));
            }
        }
    }
    let mut m = Matrix::zeros(f, g.order(), g.order());
    for (a, c) in chi.iter().enumerate() {
        m.set(a, a, c.clone());
    }
    AlgebraEndomorphism::new(k, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::base::group_algebra_of;
    use crate::algebra::group::FiniteGroup;
    use crate::linalg::FieldDescriptor;

    #[test]
    fn sign_character_on_c2() {
        let f = FieldDescriptor::rationals();
        let k = group_algebra_of(&FiniteGroup::cyclic(2, "g"), &f);
        let a = character_endomorphism(&k, &[f.one(), f.from_i64(-1)]).unwrap();
        assert_eq!(a.diagonal().unwrap(), vec![f.one(), f.from_i64(-1)]);
        assert!(character_endomorphism(&k, &[f.one(), f.from_i64(2)]).is_err());
    }

    #[test]
    fn reflection_character_on_d6() {
        let f = FieldDescriptor::rationals();
        let d6 = FiniteGroup::dihedral(3);
        let k = group_algebra_of(&d6, &f);
        let chi: Vec<Scalar> = d6
            .labels()
            .iter()
            .map(|l| if l.contains('h') { f.from_i64(-1) } else { f.one() })
            .collect();
        let a = character_endomorphism(&k, &chi).unwrap();
        let diag = a.diagonal().unwrap();
        for (i, l) in d6.labels().iter().enumerate() {
            assert_eq!(diag[i], if l.contains('h') { f.from_i64(-1) } else { f.one() });
        }
    }
}
