//! Finite-dimensional base algebras `K` given by structure constants.

use crate::linalg::{vector, FieldDescriptor, Matrix, Scalar};

use super::group::FiniteGroup;
use super::AlgebraError;

/// Sparse coordinate vector: `(basis index, coefficient)` pairs.
type Sparse = Vec<(usize, Scalar)>;

/// An associative unital algebra with a chosen basis.
#[derive(Clone, Debug)]
pub struct BaseAlgebra {
    field: FieldDescriptor,
    labels: Vec<String>,
    /// `structure[i][j]` = coordinates of `basis_i * basis_j`.
    structure: Vec<Vec<Sparse>>,
    unit: Vec<Scalar>,
    group: Option<FiniteGroup>,
}

impl BaseAlgebra {
    /// Builds an algebra from dense structure constants and verifies
    /// associativity and the unit on all basis triples.
    pub fn from_structure_constants(
        field: &FieldDescriptor,
        labels: Vec<String>,
        constants: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
    ) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        if dim == 0 {
            return Err(AlgebraError::Malformed("algebra of dimension 0".into()));
        }
        if constants.len() != dim || constants.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim)) {
            return Err(AlgebraError::Malformed(format!("structure constants must be {0}x{0}x{0}", dim)));
        }
        if unit.len() != dim {
            return Err(AlgebraError::Malformed("unit has wrong length".into()));
        }
        let structure = constants
            .into_iter()
            .map(|row| row.into_iter().map(|v| to_sparse(&v)).collect())
            .collect();
        let alg = BaseAlgebra {
            field: field.clone(),
            labels,
            structure,
            unit,
            group: None,
        };
        alg.check_axioms()?;
        Ok(alg)
    }

    fn check_axioms(&self) -> Result<(), AlgebraError> {
        let d = self.dim();
        for i in 0..d {
            let e = self.basis(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(AlgebraError::NotUnital(format!(
                    "unit is not a two-sided identity on '{}'",
                    self.labels[i]
                )));
            }
        }
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for k in 0..d {
                    let left = self.mul_sparse_basis(&ij, k);
                    let jk = self.basis_product(j, k);
                    let right = self.mul_basis_sparse(i, &jk);
                    if left != right {
                        return Err(AlgebraError::NotAssociative(format!(
                            "({} {}) {} != {} ({} {})",
                            self.labels[i], self.labels[j], self.labels[k], self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn group(&self) -> Option<&FiniteGroup> {
        self.group.as_ref()
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        vector::unit(&self.field, self.dim(), i)
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vector::zero(&self.field, self.dim())
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = self.zero();
        for (k, c) in &self.structure[i][j] {
            v[*k] = c.clone();
        }
        v
    }

    fn mul_sparse_basis(&self, a: &[Scalar], k: usize) -> Vec<Scalar> {
        self.mul(a, &self.basis(k))
    }

    fn mul_basis_sparse(&self, i: usize, b: &[Scalar]) -> Vec<Scalar> {
        self.mul(&self.basis(i), b)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = f.mul(x, y);
                for (k, c) in &self.structure[i][j] {
                    f.add_mul_assign(&mut out[*k], &xy, c);
                }
            }
        }
        out
    }

    /// Matrix of `v -> a v`.
    pub fn left_mul_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_columns(&self.field, self.dim(), &cols)
    }

    /// Matrix of `v -> v a`.
    pub fn right_mul_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.mul(&self.basis(j), a)).collect();
        Matrix::from_columns(&self.field, self.dim(), &cols)
    }

    pub fn is_central(&self, a: &[Scalar]) -> bool {
        (0..self.dim()).all(|j| {
            let e = self.basis(j);
            self.mul(a, &e) == self.mul(&e, a)
        })
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..self.dim()).all(|j| self.structure[i][j] == self.structure[j][i]))
    }

    /// Whether `a` has a two-sided inverse.
    pub fn is_invertible(&self, a: &[Scalar]) -> bool {
        self.left_mul_matrix(a).is_invertible()
    }

    pub fn format(&self, a: &[Scalar]) -> String {
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.labels[i].clone()
                } else {
                    format!("({})*{}", c, self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn to_sparse(v: &[Scalar]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// The group algebra `k[G]` with the group elements as basis.
pub fn group_algebra(
    labels: Vec<String>,
    multiplication_table: &[Vec<String>],
    field: &FieldDescriptor,
) -> Result<BaseAlgebra, AlgebraError> {
    let g = FiniteGroup::from_table(labels, multiplication_table)?;
    Ok(group_algebra_of(&g, field))
}

pub fn group_algebra_of(g: &FiniteGroup, field: &FieldDescriptor) -> BaseAlgebra {
    let n = g.order();
    let structure = (0..n)
        .map(|a| (0..n).map(|b| vec![(g.mul(a, b), field.one())]).collect())
        .collect();
    BaseAlgebra {
        field: field.clone(),
        labels: g.labels().to_vec(),
        structure,
        unit: vector::unit(field, n, g.identity()),
        group: Some(g.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> String {
        x.to_string()
    }

    #[test]
    fn c2_algebra() {
        let f = FieldDescriptor::rationals();
        let k = group_algebra(
            vec![s("e"), s("g")],
            &[vec![s("e"), s("g")], vec![s("g"), s("e")]],
            &f,
        )
        .unwrap();
        assert_eq!(k.dim(), 2);
        let g = k.basis(1);
        assert_eq!(k.mul(&g, &g), k.basis(0));
    }

    #[test]
    fn d6_associativity_exhaustive() {
        let f = FieldDescriptor::rationals();
        let d6 = FiniteGroup::dihedral(3);
        let table: Vec<Vec<String>> = d6
            .table()
            .iter()
            .map(|r| r.iter().map(|&c| d6.label(c).to_string()).collect())
            .collect();
        let k = group_algebra(d6.labels().to_vec(), &table, &f).unwrap();
        assert_eq!(k.dim(), 6);
        assert!(!k.is_commutative());
        k.check_axioms().unwrap();
    }

    #[test]
    fn non_associative_structure_constants_rejected() {
        let f = FieldDescriptor::rationals();
        // basis {1, a} with a*a = 1 + a but 1 acting wrongly on the right
        let one = vec![f.one(), f.zero()];
        let a = vec![f.zero(), f.one()];
        let constants = vec![vec![one.clone(), a.clone()], vec![a.clone(), a.clone()]];
        assert!(BaseAlgebra::from_structure_constants(&f, vec![s("1"), s("a")], constants, one.clone()).is_ok());
        let bad = vec![vec![one.clone(), a.clone()], vec![one.clone(), a.clone()]];
        assert!(BaseAlgebra::from_structure_constants(&f, vec![s("1"), s("a")], bad, one).is_err());
    }
}
