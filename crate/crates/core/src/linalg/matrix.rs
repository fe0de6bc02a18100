//! Dense matrices over an exact field, with row reduction and kernels.

use std::fmt;

use super::field::{FieldDescriptor, Scalar};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldDescriptor,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(field: &FieldDescriptor, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &FieldDescriptor, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &FieldDescriptor, rows: Vec<Vec<Scalar>>, cols: usize) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        Matrix {
            field: field.clone(),
            rows: nrows,
            cols,
            data,
        }
    }

    /// Builds a `rows x columns.len()` matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: &FieldDescriptor, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    m.set(i, j, v.clone());
                }
            }
        }
        m
    }

    pub fn from_i64(field: &FieldDescriptor, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|v| field.from_i64(*v)).collect())
                .collect(),
            cols,
        )
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if !v.is_zero() {
                    t.set(c, r, v.clone());
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        f.add_mul_assign(&mut out.data[idx], a, b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, k);
                if !a.is_zero() {
                    f.add_mul_assign(o, a, x);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, s)).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.neg(a)).collect(),
        }
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            for c in 0..block.cols {
                let v = block.get(r, c);
                if !v.is_zero() {
                    self.set(r0 + r, c0 + c, v.clone());
                }
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(&self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = self.get(r0 + r, c0 + c);
                if !v.is_zero() {
                    m.set(r, c, v.clone());
                }
            }
        }
        m
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = &self.field;
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..self.cols {
            if prow == rows.len() {
                break;
            }
            // smallest-height nonzero entry keeps intermediate growth down
            let best = (prow..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .min_by_key(|&r| rows[r][col].height());
            let Some(best) = best else { continue };
            rows.swap(prow, best);
            let inv = f.inv(&rows[prow][col]).expect("nonzero pivot");
            let pivot_row: Vec<Scalar> = rows[prow].iter().map(|v| f.mul(v, &inv)).collect();
            let support: Vec<usize> = (col..self.cols).filter(|&c| !pivot_row[c].is_zero()).collect();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == prow || row[col].is_zero() {
                    continue;
                }
                let factor = f.neg(&row[col]);
                for &c in &support {
                    let mut v = std::mem::replace(&mut row[c], f.zero());
                    f.add_mul_assign(&mut v, &factor, &pivot_row[c]);
                    row[c] = v;
                }
            }
            rows[prow] = pivot_row;
            pivots.push(col);
            prow += 1;
        }
        (Matrix::from_rows(f, rows, self.cols), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space `{v : self * v = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &p) in pivots.iter().enumerate() {
                let e = r.get(i, free);
                if !e.is_zero() {
                    v[p] = f.neg(e);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = b`, returning one solution if it exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let f = &self.field;
        let mut aug = Matrix::zeros(f, self.rows, self.cols + 1);
        aug.set_block(0, 0, self);
        for (i, v) in b.iter().enumerate() {
            aug.set(i, self.cols, v.clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

/// Small helpers on coordinate vectors.
pub mod vector {
    use super::super::field::{FieldDescriptor, Scalar};

    pub fn zero(f: &FieldDescriptor, n: usize) -> Vec<Scalar> {
        vec![f.zero(); n]
    }

    pub fn unit(f: &FieldDescriptor, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = zero(f, n);
        v[i] = f.one();
        v
    }

    pub fn is_zero(v: &[Scalar]) -> bool {
        v.iter().all(Scalar::is_zero)
    }

    pub fn add(f: &FieldDescriptor, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
    }

    pub fn sub(f: &FieldDescriptor, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
    }

    pub fn scale(f: &FieldDescriptor, a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
        a.iter().map(|x| f.mul(x, s)).collect()
    }

    pub fn neg(f: &FieldDescriptor, a: &[Scalar]) -> Vec<Scalar> {
        a.iter().map(|x| f.neg(x)).collect()
    }

    /// `acc += s * v`
    pub fn axpy(f: &FieldDescriptor, acc: &mut [Scalar], s: &Scalar, v: &[Scalar]) {
        if s.is_zero() {
            return;
        }
        for (a, x) in acc.iter_mut().zip(v) {
            if !x.is_zero() {
                f.add_mul_assign(a, s, x);
            }
        }
    }

    pub fn add_assign(f: &FieldDescriptor, acc: &mut [Scalar], v: &[Scalar]) {
        for (a, x) in acc.iter_mut().zip(v) {
            if !x.is_zero() {
                *a = f.add(a, x);
            }
        }
    }

    /// Rank of a family of vectors of common length `n`.
    pub fn rank_of(f: &FieldDescriptor, n: usize, vs: &[Vec<Scalar>]) -> usize {
        if vs.is_empty() {
            return 0;
        }
        super::Matrix::from_rows(f, vs.to_vec(), n).rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_rank_one() {
        let f = FieldDescriptor::rationals();
        let m = Matrix::from_i64(&f, &[&[1, 2], &[2, 4]]);
        let (_, p) = m.rref();
        assert_eq!(p, vec![0]);
        let id = Matrix::identity(&f, 3);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1, 2]);
    }

    #[test]
    fn rref_over_q_i() {
        let f = FieldDescriptor::cyclotomic(4);
        let z = f.zeta();
        let m = Matrix::from_rows(
            &f,
            vec![vec![z.clone(), f.one()], vec![f.one(), f.neg(&z)]],
            2,
        );
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernels() {
        let f = FieldDescriptor::rationals();
        assert_eq!(Matrix::zeros(&f, 2, 3).kernel_basis().len(), 3);
        assert!(Matrix::identity(&f, 3).kernel_basis().is_empty());
        let m = Matrix::from_i64(&f, &[&[1, 1, 0]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(vector::is_zero(&m.apply(v)));
        }
        assert_eq!(k[0], vec![f.from_i64(-1), f.one(), f.zero()]);
        assert_eq!(k[1], vec![f.zero(), f.zero(), f.one()]);
    }

    #[test]
    fn solve_consistent_and_not() {
        let f = FieldDescriptor::rationals();
        let m = Matrix::from_i64(&f, &[&[1, 1], &[1, 1]]);
        assert!(m.solve(&[f.from_i64(2), f.from_i64(2)]).is_some());
        assert!(m.solve(&[f.from_i64(1), f.from_i64(2)]).is_none());
    }
}
