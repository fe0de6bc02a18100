//! Finite windows of chain complexes over exact fields, and their homology.

use thiserror::Error;

use crate::linalg::{vector, FieldDescriptor, Matrix, Scalar, SubquotientSpace};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ChainError {
    #[error("degree {degree} outside the computed window 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("d_{0} d_{1} is not zero", .degree, .degree + 1)]
    NotAComplex { degree: usize },
    #[error("dimension mismatch at degree {0}")]
    DimensionMismatch(usize),
}

/// Spaces `C_0 .. C_max` (each a subquotient of a coordinate space) and
/// boundaries `d_r : C_r -> C_{r-1}` written in quotient coordinates.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    field: FieldDescriptor,
    spaces: Vec<SubquotientSpace>,
    /// `boundaries[r]` for `r >= 1`; index 0 holds the zero map to the zero space.
    boundaries: Vec<Matrix>,
}

#[derive(Clone, Debug)]
pub struct HomologyReport {
    pub degree: usize,
    pub dimension: usize,
    /// True when `d_{r+1}` is outside the window, so only the kernel was computed.
    pub kernel_only: bool,
    /// Cycles in quotient coordinates whose classes form a basis.
    pub representatives: Vec<Vec<Scalar>>,
    /// The same cycles lifted to ambient coordinates through the section.
    pub ambient_representatives: Vec<Vec<Scalar>>,
}

impl ChainComplex {
    /// `boundaries[r - 1]` is `d_r` for `r = 1 ..= spaces.len() - 1`.
    pub fn new(field: &FieldDescriptor, spaces: Vec<SubquotientSpace>, boundaries: Vec<Matrix>) -> Result<Self, ChainError> {
        assert_eq!(boundaries.len() + 1, spaces.len(), "one boundary per positive degree");
        let mut all = vec![Matrix::zeros(field, 0, spaces[0].quotient_dim())];
        all.extend(boundaries);
        for r in 1..spaces.len() {
            if all[r].rows() != spaces[r - 1].quotient_dim() || all[r].cols() != spaces[r].quotient_dim() {
                return Err(ChainError::DimensionMismatch(r));
            }
        }
        let c = ChainComplex {
            field: field.clone(),
            spaces,
            boundaries: all,
        };
        c.check_squares()?;
        Ok(c)
    }

    /// A complex whose spaces are plain coordinate spaces of the given dimensions.
    pub fn from_matrices(field: &FieldDescriptor, dims: &[usize], boundaries: Vec<Matrix>) -> Result<Self, ChainError> {
        let spaces = dims.iter().map(|&d| SubquotientSpace::full(field, d)).collect();
        Self::new(field, spaces, boundaries)
    }

    pub fn check_squares(&self) -> Result<(), ChainError> {
        for r in 1..self.max_degree() {
            if !self.boundaries[r].mul(&self.boundaries[r + 1]).is_zero() {
                return Err(ChainError::NotAComplex { degree: r });
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn max_degree(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn space(&self, r: usize) -> &SubquotientSpace {
        &self.spaces[r]
    }

    pub fn dim(&self, r: usize) -> usize {
        self.spaces[r].quotient_dim()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.quotient_dim()).collect()
    }

    /// `d_r`; for `r = 0` the zero map into the zero space.
    pub fn boundary(&self, r: usize) -> &Matrix {
        &self.boundaries[r]
    }

    pub fn homology(&self, r: usize) -> Result<HomologyReport, ChainError> {
        if r > self.max_degree() {
            return Err(ChainError::DegreeOutOfRange {
                degree: r,
                max: self.max_degree(),
            });
        }
        let f = &self.field;
        let n = self.dim(r);
        let kernel = self.boundaries[r].kernel_basis();
        let kernel_only = r == self.max_degree();
        let image: Vec<Vec<Scalar>> = if kernel_only {
            Vec::new()
        } else {
            let d = &self.boundaries[r + 1];
            (0..d.cols()).map(|c| d.column(c)).filter(|v| !vector::is_zero(v)).collect()
        };
        let representatives = independent_modulo(f, n, &image, &kernel);
        let ambient_representatives = representatives.iter().map(|v| self.spaces[r].lift(v)).collect();
        Ok(HomologyReport {
            degree: r,
            dimension: representatives.len(),
            kernel_only,
            representatives,
            ambient_representatives,
        })
    }

    /// Homology in degrees `0 ..= max_degree - 1` (the top degree is left out).
    pub fn homology_dims(&self) -> Vec<usize> {
        (0..self.max_degree())
            .map(|r| self.homology(r).expect("in range").dimension)
            .collect()
    }

    pub fn is_cycle(&self, r: usize, v: &[Scalar]) -> bool {
        vector::is_zero(&self.boundaries[r].apply(v))
    }

    /// Coordinates of the class of the cycle `z` in the basis given by `report`.
    /// Returns `None` if `z` is not a cycle.
    pub fn class_coordinates(&self, report: &HomologyReport, z: &[Scalar]) -> Option<Vec<Scalar>> {
        let r = report.degree;
        if !self.is_cycle(r, z) {
            return None;
        }
        let f = &self.field;
        let n = self.dim(r);
        let image: Vec<Vec<Scalar>> = if r < self.max_degree() {
            let d = &self.boundaries[r + 1];
            (0..d.cols()).map(|c| d.column(c)).collect()
        } else {
            Vec::new()
        };
        let q = SubquotientSpace::new(f, n, &image);
        if report.representatives.is_empty() {
            return if q.contains(z) { Some(Vec::new()) } else { None };
        }
        let cols: Vec<Vec<Scalar>> = report.representatives.iter().map(|v| q.project(v)).collect();
        let m = Matrix::from_columns(f, q.quotient_dim(), &cols);
        m.solve(&q.project(z))
    }

    /// Whether `z` is a boundary in degree `r`.
    pub fn is_boundary(&self, r: usize, z: &[Scalar]) -> bool {
        if vector::is_zero(z) {
            return true;
        }
        if r >= self.max_degree() {
            return false;
        }
        self.boundaries[r + 1].solve(z).is_some()
    }
}

/// Vectors from `candidates` that are independent modulo `span(base)`, chosen greedily.
pub fn independent_modulo(f: &FieldDescriptor, n: usize, base: &[Vec<Scalar>], candidates: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let q = SubquotientSpace::new(f, n, base);
    let mut chosen: Vec<Vec<Scalar>> = Vec::new();
    let mut projected: Vec<Vec<Scalar>> = Vec::new();
    let mut rank = 0;
    for c in candidates {
        let p = q.project(c);
        if vector::is_zero(&p) {
            continue;
        }
        projected.push(p);
        let new_rank = vector::rank_of(f, q.quotient_dim(), &projected);
        if new_rank > rank {
            rank = new_rank;
            chosen.push(c.clone());
        } else {
            projected.pop();
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_boundary() {
        // interval: C_1 = k (edge), C_0 = k^2 (vertices), d = (-1, 1)^T
        let f = FieldDescriptor::rationals();
        let d1 = Matrix::from_i64(&f, &[&[-1], &[1]]);
        let c = ChainComplex::from_matrices(&f, &[2, 1], vec![d1]).unwrap();
        assert_eq!(c.homology(0).unwrap().dimension, 1);
        let h1 = c.homology(1).unwrap();
        assert_eq!(h1.dimension, 0);
        assert!(h1.kernel_only);
    }

    #[test]
    fn non_complex_rejected() {
        let f = FieldDescriptor::rationals();
        let one = Matrix::from_i64(&f, &[&[1]]);
        assert!(ChainComplex::from_matrices(&f, &[1, 1, 1], vec![one.clone(), one]).is_err());
    }

    #[test]
    fn class_coordinates_of_boundary_vanish() {
        let f = FieldDescriptor::rationals();
        let d1 = Matrix::from_i64(&f, &[&[1], &[1], &[0]]);
        let c = ChainComplex::from_matrices(&f, &[3, 1], vec![d1]).unwrap();
        let h0 = c.homology(0).unwrap();
        assert_eq!(h0.dimension, 2);
        let z = vec![f.one(), f.one(), f.zero()];
        let coords = c.class_coordinates(&h0, &z).unwrap();
        assert!(vector::is_zero(&coords));
    }
}
