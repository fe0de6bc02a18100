//! The small complex `C^S(A, M)`, its collapsed and eigen-decomposed forms,
//! and closed-form predictions for Hochschild homology.

use thiserror::Error;

use crate::algebra::{
    check_collapse, eigen_split, k_twisted_commutators, twisted_commutator_subspace, BimoduleData, MonogenicData,
    RankOneCase,
};
use crate::chain::{ChainComplex, ChainError};
use crate::linalg::{vector, FieldDescriptor, Matrix, Scalar, SubquotientSpace};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SmallError {
    #[error("collapse hypothesis not verified ({0}); use the generic complex")]
    CollapseNotVerified(String),
    #[error("{0}")]
    NotDiagonal(String),
    #[error("hypothesis not verified: {0}")]
    Hypothesis(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

/// Twist exponent of the `r`-th space: `mn` for `r = 2m`, `mn + 1` for `r = 2m + 1`.
pub fn cs_twist(n: usize, r: usize) -> usize {
    (r / 2) * n + r % 2
}

/// Twist exponent of the denominator in the collapsed `r`-th space:
/// `mn` for `r = 2m`, `(m + 1) n` for `r = 2m + 1`.
pub fn collapsed_twist(n: usize, r: usize) -> usize {
    (r / 2 + r % 2) * n
}

/// `M / [M, K]_{alpha^s}`.
pub fn cs_space(a: &MonogenicData, m: &BimoduleData, s: usize) -> SubquotientSpace {
    SubquotientSpace::new(a.field(), m.dim(), &twisted_commutator_subspace(m, a, s))
}

/// `C^S(A, M)` in degrees `0 ..= max_degree`.
#[derive(Clone, Debug)]
pub struct SmallComplex {
    pub complex: ChainComplex,
    pub twists: Vec<usize>,
}

/// Builds the small complex with `d_{2m+1}[m] = [mx - xm]` and
/// `d_{2m}[m] = sum_i sum_l [lambda_{n-i} x^{i-l-1} m x^l]`.
pub fn build_cs(a: &MonogenicData, m: &BimoduleData, max_degree: usize) -> Result<SmallComplex, SmallError> {
    let n = a.n();
    let twists: Vec<usize> = (0..=max_degree).map(|r| cs_twist(n, r)).collect();
    let mut cache: Vec<(usize, SubquotientSpace)> = Vec::new();
    let mut spaces = Vec::new();
    for &s in &twists {
        let key = a.twist_class(s);
        let sp = match cache.iter().find(|(k, _)| *k == key) {
            Some((_, sp)) => sp.clone(),
            None => {
                let sp = cs_space(a, m, s);
                cache.push((key, sp.clone()));
                sp
            }
        };
        spaces.push(sp);
    }
    let odd = m.right_x().sub(m.left_x());
    let even = even_operator(a, m);
    let mut boundaries = Vec::new();
    for r in 1..=max_degree {
        let op = if r % 2 == 1 { &odd } else { &even };
        boundaries.push(spaces[r - 1].projection().mul(op).mul(&spaces[r].section()));
    }
    Ok(SmallComplex {
        complex: ChainComplex::new(a.field(), spaces, boundaries)?,
        twists,
    })
}

/// Matrix on `M` of `m -> sum_i sum_l lambda_{n-i} x^{i-l-1} m x^l`.
pub fn even_operator(a: &MonogenicData, m: &BimoduleData) -> Matrix {
    let f = a.field();
    let n = a.n();
    let mut op = Matrix::zeros(f, m.dim(), m.dim());
    for i in 1..=n {
        let lam = a.lambda(n - i);
        if vector::is_zero(&lam) {
            continue;
        }
        for l in 0..i {
            let left = a.a_mul(&a.k_to_a(&lam), &a.x_pow(i - l - 1));
            op = op.add(&m.sandwich_matrix(&left, &a.x_pow(l)));
        }
    }
    op
}

/// Spanning set of `[K,K]_{alpha^j}` restricted to the coordinates `indices`.
pub fn restricted_commutators(a: &MonogenicData, indices: &[usize], j: usize) -> Vec<Vec<Scalar>> {
    k_twisted_commutators(a, j)
        .iter()
        .map(|v| restrict(v, indices))
        .filter(|v| !vector::is_zero(v))
        .collect()
}

pub fn restrict(v: &[Scalar], indices: &[usize]) -> Vec<Scalar> {
    indices.iter().map(|&i| v[i].clone()).collect()
}

pub fn extend(f: &FieldDescriptor, v: &[Scalar], indices: &[usize], dim: usize) -> Vec<Scalar> {
    let mut out = vector::zero(f, dim);
    for (t, &i) in indices.iter().enumerate() {
        out[i] = v[t].clone();
    }
    out
}

/// Largest twist exponent the collapsed complex up to `max_degree` relies on.
fn collapse_window(a: &MonogenicData, max_degree: usize) -> usize {
    let bound = (max_degree / 2 + 2) * a.n();
    match a.alpha_order() {
        Some(v) => bound.min(v.max(a.n()) * a.n()),
        None => bound,
    }
}

pub fn require_collapse(a: &MonogenicData, max_degree: usize) -> Result<(), SmallError> {
    let report = check_collapse(a, collapse_window(a, max_degree));
    if report.holds {
        Ok(())
    } else {
        let bad: Vec<String> = report
            .entries
            .iter()
            .filter(|(_, c)| *c > 0)
            .map(|(j, c)| format!("dim K/[K,K]_alpha^{} = {}", j, c))
            .collect();
        Err(SmallError::CollapseNotVerified(bad.join(", ")))
    }
}

/// Collapsed complex: `K/[K,K]_{alpha^{mn}}` in degree `2m`,
/// `K/[K,K]_{alpha^{(m+1)n}} x^{n-1}` in degree `2m+1`.
#[derive(Clone, Debug)]
pub struct CollapsedComplex {
    pub complex: ChainComplex,
    pub twists: Vec<usize>,
}

pub fn build_cs_collapsed(a: &MonogenicData, max_degree: usize) -> Result<CollapsedComplex, SmallError> {
    require_collapse(a, max_degree)?;
    let all: Vec<usize> = (0..a.dim_k()).collect();
    let (complex, twists) = component_complex(a, &all, None, max_degree)?;
    Ok(CollapsedComplex { complex, twists })
}

/// Builds the collapsed complex on the coordinates `indices` of `K`. With an
/// eigenvalue given, boundaries use the scalar forms of the decomposed complex.
fn component_complex(
    a: &MonogenicData,
    indices: &[usize],
    eigenvalue: Option<&Scalar>,
    max_degree: usize,
) -> Result<(ChainComplex, Vec<usize>), SmallError> {
    let f = a.field();
    let n = a.n();
    let d = indices.len();
    let dk = a.dim_k();
    let twists: Vec<usize> = (0..=max_degree).map(|r| collapsed_twist(n, r)).collect();
    let spaces: Vec<SubquotientSpace> = twists
        .iter()
        .map(|&s| SubquotientSpace::new(f, d, &restricted_commutators(a, indices, s)))
        .collect();
    let lam_n = a.lambda_n();
    let k = a.base();
    let mut boundaries = Vec::new();
    for r in 1..=max_degree {
        let mut cols = Vec::new();
        for t in 0..spaces[r].quotient_dim() {
            let lam = extend(f, &spaces[r].basis_lift(t), indices, dk);
            let image = if r % 2 == 1 {
                match eigenvalue {
                    Some(w) => {
                        let c = f.sub(w, &f.one());
                        vector::scale(f, &k.mul(&lam, &lam_n), &c)
                    }
                    None => k.mul(&vector::sub(f, &a.alpha().apply(&lam), &lam), &lam_n),
                }
            } else {
                match eigenvalue {
                    Some(w) => {
                        let mut c = f.zero();
                        for l in 0..n {
                            c = f.add(&c, &f.pow(w, l as u64));
                        }
                        vector::scale(f, &lam, &c)
                    }
                    None => {
                        let mut acc = k.zero();
                        for l in 0..n {
                            acc = vector::add(f, &acc, &a.alpha_pow_apply(l, &lam));
                        }
                        acc
                    }
                }
            };
            cols.push(spaces[r - 1].project(&restrict(&image, indices)));
        }
        boundaries.push(Matrix::from_columns(f, spaces[r - 1].quotient_dim(), &cols));
    }
    Ok((ChainComplex::new(f, spaces, boundaries)?, twists))
}

/// One summand `C^{S, omega}(A)` of the eigen-decomposition.
#[derive(Clone, Debug)]
pub struct ComponentComplex {
    pub value: Scalar,
    /// Basis indices of `K` spanning `K^omega`.
    pub indices: Vec<usize>,
    pub complex: ChainComplex,
    pub twists: Vec<usize>,
}

/// Splits the collapsed complex by the eigenvalues of a basis-diagonal `alpha`.
pub fn decompose(a: &MonogenicData, max_degree: usize) -> Result<Vec<ComponentComplex>, SmallError> {
    let comps = eigen_split(a.base(), a.alpha()).map_err(|e| SmallError::NotDiagonal(e.to_string()))?;
    require_collapse(a, max_degree)?;
    comps
        .into_iter()
        .map(|c| {
            let (complex, twists) = component_complex(a, &c.indices, Some(&c.value), max_degree)?;
            Ok(ComponentComplex {
                value: c.value,
                indices: c.indices,
                complex,
                twists,
            })
        })
        .collect()
}

/// `dim (N + D) / D` for spanning sets `N`, `D` of an ambient space of dimension `dim`.
pub fn quotient_dim(f: &FieldDescriptor, dim: usize, numerator: &[Vec<Scalar>], denominator: &[Vec<Scalar>]) -> usize {
    let mut all = numerator.to_vec();
    all.extend_from_slice(denominator);
    vector::rank_of(f, dim, &all) - vector::rank_of(f, dim, denominator)
}

/// Basis of `{lambda : T(lambda) in span(target)}` for a linear map `T` given by its columns.
pub fn preimage(f: &FieldDescriptor, dim: usize, columns: &[Vec<Scalar>], target_dim: usize, target: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let q = SubquotientSpace::new(f, target_dim, target);
    let cols: Vec<Vec<Scalar>> = columns.iter().map(|c| q.project(c)).collect();
    let m = Matrix::from_columns(f, q.quotient_dim(), &cols);
    if q.quotient_dim() == 0 {
        return (0..dim).map(|i| vector::unit(f, dim, i)).collect();
    }
    m.kernel_basis()
}

/// Which displayed formula to evaluate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HhCase {
    /// Collapsed complex formulas.
    Collapse,
    /// Per-eigenvalue formulas.
    Eigen,
    /// `alpha = id`: quotients of `A` by `[A,A]` and `f'`.
    AlphaIdentity,
    /// Rank one group-algebra extensions; carries `g_1^n - 1` in `K`.
    RankOne(RankOneCase, Vec<Scalar>),
}

/// Dimensions predicted by the chosen formula in degrees `0 .. max_degree`.
pub fn hh_closed_form(a: &MonogenicData, case: &HhCase, max_degree: usize) -> Result<Vec<usize>, SmallError> {
    match case {
        HhCase::Collapse => {
            require_collapse(a, max_degree)?;
            Ok((0..max_degree).map(|r| cor_collapse(a, r)).collect())
        }
        HhCase::Eigen => {
            let comps = eigen_split(a.base(), a.alpha()).map_err(|e| SmallError::NotDiagonal(e.to_string()))?;
            require_collapse(a, max_degree)?;
            Ok((0..max_degree)
                .map(|r| comps.iter().map(|c| cor_eigen(a, &c.value, &c.indices, r)).sum())
                .collect())
        }
        HhCase::AlphaIdentity => {
            if !a.alpha().is_identity() {
                return Err(SmallError::Hypothesis("alpha is not the identity".into()));
            }
            Ok((0..max_degree).map(|r| cor_alpha_identity(a, r)).collect())
        }
        HhCase::RankOne(kind, g1n) => {
            let comps = eigen_split(a.base(), a.alpha()).map_err(|e| SmallError::NotDiagonal(e.to_string()))?;
            require_collapse(a, max_degree)?;
            Ok((0..max_degree).map(|r| rank_one_hh(a, &comps_of(&comps), *kind, g1n, r)).collect())
        }
    }
}

pub(crate) fn comps_of(comps: &[crate::algebra::EigenComponent]) -> Vec<(Scalar, Vec<usize>)> {
    comps.iter().map(|c| (c.value.clone(), c.indices.clone())).collect()
}

fn cor_collapse(a: &MonogenicData, r: usize) -> usize {
    let f = a.field();
    let k = a.base();
    let dk = a.dim_k();
    let n = a.n();
    let lam_n = a.lambda_n();
    let basis: Vec<Vec<Scalar>> = (0..dk).map(|b| k.basis(b)).collect();
    let im_alpha_minus_id: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|l| k.mul(&vector::sub(f, &a.alpha().apply(l), l), &lam_n))
        .collect();
    let norm: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|l| {
            let mut acc = k.zero();
            for i in 0..n {
                acc = vector::add(f, &acc, &a.alpha_pow_apply(i, l));
            }
            acc
        })
        .collect();
    let m = r / 2;
    if r == 0 {
        let mut den = k_twisted_commutators(a, 0);
        den.extend(im_alpha_minus_id);
        return quotient_dim(f, dk, &basis, &den);
    }
    if r % 2 == 1 {
        let num = preimage(f, dk, &im_alpha_minus_id, dk, &k_twisted_commutators(a, m * n));
        let mut den = k_twisted_commutators(a, (m + 1) * n);
        den.extend(norm);
        quotient_dim(f, dk, &num, &den)
    } else {
        let m = m - 1;
        let num = preimage(f, dk, &norm, dk, &k_twisted_commutators(a, (m + 1) * n));
        let mut den = k_twisted_commutators(a, (m + 1) * n);
        den.extend(im_alpha_minus_id);
        quotient_dim(f, dk, &num, &den)
    }
}

/// Spanning set of `K^omega z^e` in `K^omega` coordinates.
pub(crate) fn times_power(a: &MonogenicData, indices: &[usize], z: &[Scalar], e: usize) -> Vec<Vec<Scalar>> {
    column_images(a, indices, z, e)
        .into_iter()
        .filter(|v| !vector::is_zero(v))
        .collect()
}

pub(crate) fn is_root_of_unity(f: &FieldDescriptor, w: &Scalar, n: usize) -> bool {
    f.pow(w, n as u64).is_one()
}

fn cor_eigen(a: &MonogenicData, w: &Scalar, indices: &[usize], r: usize) -> usize {
    let f = a.field();
    let d = indices.len();
    let n = a.n();
    let full: Vec<Vec<Scalar>> = (0..d).map(|i| vector::unit(f, d, i)).collect();
    let lam_n = a.lambda_n();
    let h_one = w.is_one();
    let special = !h_one && is_root_of_unity(f, w, n);
    if r == 0 {
        let mut den = restricted_commutators(a, indices, 0);
        if !h_one {
            den.extend(times_power(a, indices, &lam_n, 1));
        }
        return quotient_dim(f, d, &full, &den);
    }
    if !special {
        return 0;
    }
    let m = (r - 1) / 2;
    if r % 2 == 1 {
        let num = preimage(
            f,
            d,
            &column_images(a, indices, &lam_n, 1),
            d,
            &restricted_commutators(a, indices, m * n),
        );
        quotient_dim(f, d, &num, &restricted_commutators(a, indices, (m + 1) * n))
    } else {
        let mut den = restricted_commutators(a, indices, (m + 1) * n);
        den.extend(times_power(a, indices, &lam_n, 1));
        quotient_dim(f, d, &full, &den)
    }
}

/// Columns of `lambda -> lambda z^e` on `K^omega`, in `K^omega` coordinates.
pub(crate) fn column_images(a: &MonogenicData, indices: &[usize], z: &[Scalar], e: usize) -> Vec<Vec<Scalar>> {
    let k = a.base();
    let mut p = k.unit().to_vec();
    for _ in 0..e {
        p = k.mul(&p, z);
    }
    indices.iter().map(|&b| restrict(&k.mul(&k.basis(b), &p), indices)).collect()
}

fn cor_alpha_identity(a: &MonogenicData, r: usize) -> usize {
    let f = a.field();
    let da = a.dim_a();
    let mut comm = Vec::new();
    for p in 0..da {
        for q in 0..da {
            let v = vector::sub(f, a.a_basis_product(p, q), a.a_basis_product(q, p));
            if !vector::is_zero(&v) {
                comm.push(v);
            }
        }
    }
    let full: Vec<Vec<Scalar>> = (0..da).map(|i| a.a_basis(i)).collect();
    let fp = a.f_derivative();
    let fp_cols: Vec<Vec<Scalar>> = (0..da).map(|i| a.a_mul(&fp, &a.a_basis(i))).collect();
    if r == 0 {
        quotient_dim(f, da, &full, &comm)
    } else if r % 2 == 1 {
        let mut den = comm.clone();
        den.extend(fp_cols);
        quotient_dim(f, da, &full, &den)
    } else {
        let num = preimage(f, da, &fp_cols, da, &comm);
        quotient_dim(f, da, &num, &comm)
    }
}

fn rank_one_hh(a: &MonogenicData, comps: &[(Scalar, Vec<usize>)], kind: RankOneCase, g1n: &[Scalar], r: usize) -> usize {
    let f = a.field();
    let n = a.n();
    let mut total = 0;
    for (w, idx) in comps {
        let d = idx.len();
        let full: Vec<Vec<Scalar>> = (0..d).map(|i| vector::unit(f, d, i)).collect();
        let nontrivial_root = !w.is_one() && is_root_of_unity(f, w, n);
        match kind {
            RankOneCase::XiZero | RankOneCase::Quotient => {
                if r == 0 {
                    total += quotient_dim(f, d, &full, &restricted_commutators(a, idx, 0));
                } else if nontrivial_root {
                    let m = (r - 1) / 2;
                    total += quotient_dim(f, d, &full, &restricted_commutators(a, idx, (m + 1) * n));
                }
            }
            RankOneCase::ChiPowerTrivial => {
                let comm = restricted_commutators(a, idx, 0);
                if r == 0 {
                    if w.is_one() {
                        total += quotient_dim(f, d, &full, &comm);
                    } else if nontrivial_root {
                        let mut den = comm.clone();
                        den.extend(times_power(a, idx, g1n, 1));
                        total += quotient_dim(f, d, &full, &den);
                    }
                } else if nontrivial_root {
                    if r % 2 == 1 {
                        let num = preimage(f, d, &column_images(a, idx, g1n, 1), d, &comm);
                        total += quotient_dim(f, d, &num, &comm);
                    } else {
                        let mut den = comm.clone();
                        den.extend(times_power(a, idx, g1n, 1));
                        total += quotient_dim(f, d, &full, &den);
                    }
                }
            }
        }
    }
    total
}

/// Checks `dims[2m+1] = dims[2(m+v)+1]` and `dims[2m+2] = dims[2(m+v)+2]` for `m <= max_m`
/// wherever both degrees are available. Requires `alpha^{nv} = id`.
pub fn periodicity_check(a: &MonogenicData, dims: &[usize], v: usize, max_m: usize) -> Result<bool, SmallError> {
    if v == 0 || !a.alpha_pow(a.n() * v).is_identity() {
        return Err(SmallError::Hypothesis(format!("alpha^{} is not the identity", a.n() * v)));
    }
    let mut ok = true;
    for m in 0..=max_m {
        for (r, r2) in [(2 * m + 1, 2 * (m + v) + 1), (2 * m + 2, 2 * (m + v) + 2)] {
            if r2 < dims.len() && dims[r] != dims[r2] {
                ok = false;
            }
        }
    }
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures;

    fn generic(a: &MonogenicData, max: usize) -> Vec<usize> {
        build_cs(a, &BimoduleData::regular(a), max).unwrap().complex.homology_dims()
    }

    #[test]
    fn truncated_three() {
        let a = fixtures::truncated(3);
        assert_eq!(generic(&a, 6), vec![3, 2, 2, 2, 2, 2]);
        assert_eq!(hh_closed_form(&a, &HhCase::AlphaIdentity, 6).unwrap(), vec![3, 2, 2, 2, 2, 2]);
        assert!(build_cs_collapsed(&a, 6).is_err());
    }

    #[test]
    fn taft_values() {
        for n in [2, 3] {
            let a = fixtures::taft(n);
            let mut want = vec![n - 1; 6];
            want[0] = n;
            assert_eq!(generic(&a, 6), want);
            assert_eq!(build_cs_collapsed(&a, 6).unwrap().complex.homology_dims(), want);
            let comps = decompose(&a, 6).unwrap();
            let mut total = vec![0; 6];
            for c in &comps {
                for (t, d) in c.complex.homology_dims().into_iter().enumerate() {
                    total[t] += d;
                }
            }
            assert_eq!(total, want);
            assert_eq!(hh_closed_form(&a, &HhCase::Collapse, 6).unwrap(), want);
            assert_eq!(hh_closed_form(&a, &HhCase::Eigen, 6).unwrap(), want);
        }
    }

    #[test]
    fn twists() {
        assert_eq!((0..5).map(|r| cs_twist(3, r)).collect::<Vec<_>>(), vec![0, 1, 3, 4, 6]);
        assert_eq!((0..5).map(|r| collapsed_twist(3, r)).collect::<Vec<_>>(), vec![0, 3, 3, 6, 6]);
    }
}
