//! The standard example extensions used throughout the tests and the command line.

use crate::linalg::{FieldDescriptor, Scalar};

use super::base::group_algebra_of;
use super::endomorphism::{character_endomorphism, AlgebraEndomorphism};
use super::extension::{validate_monogenic, MonogenicData};
use super::group::FiniteGroup;
use super::rank_one::{rank_one_extension, RankOneExtension};
use super::AlgebraError;

/// `K = k`, `alpha = id`, `f = x^n`.
pub fn truncated(n: usize) -> MonogenicData {
    let f = FieldDescriptor::rationals();
    let k = group_algebra_of(&FiniteGroup::cyclic(1, "g"), &f);
    let alpha = AlgebraEndomorphism::identity(&k);
    let lambdas = vec![k.zero(); n];
    validate_monogenic(k, alpha, n, lambdas).expect("truncated polynomial algebra")
}

/// Taft algebra: `K = k(zeta_n)[C_n]`, `alpha(g) = zeta_n g`, `f = x^n`.
pub fn taft(n: usize) -> MonogenicData {
    let (group, chi, f) = taft_group(n);
    rank_one_extension(&f, &group, &chi, 0, n, &f.zero())
        .expect("taft algebra")
        .data
}

pub fn taft_group(n: usize) -> (FiniteGroup, Vec<Scalar>, FieldDescriptor) {
    let f = if n == 2 {
        FieldDescriptor::rationals()
    } else {
        FieldDescriptor::cyclotomic(n)
    };
    let g = FiniteGroup::cyclic(n, "g");
    let chi = (0..n)
        .map(|i| {
            if n == 2 {
                f.from_i64(if i == 0 { 1 } else { -1 })
            } else {
                f.zeta_pow(i as i64)
            }
        })
        .collect();
    (g, chi, f)
}

/// Sweedler's algebra, the `n = 2` Taft algebra.
pub fn sweedler() -> MonogenicData {
    taft(2)
}

/// `K = Q[C_4]`, `alpha(g) = -g`, `f = x^2 - (g^2 - 1)`.
pub fn rank_one_c4() -> MonogenicData {
    rank_one_c4_full().data
}

pub fn rank_one_c4_full() -> RankOneExtension {
    let f = FieldDescriptor::rationals();
    let g = FiniteGroup::cyclic(4, "g");
    let chi: Vec<Scalar> = (0..4).map(|i| f.from_i64(if i % 2 == 0 { 1 } else { -1 })).collect();
    rank_one_extension(&f, &g, &chi, 1, 2, &f.one()).expect("rank one C4")
}

/// `G = C_4 x C_4 = <a, b>`, `chi(a) = zeta_4`, `chi(b) = -1`, `g_1 = b`, `n = 2`, `xi = 1`.
/// Since `chi^2(a) = -1`, this is rewritten over `k[G / <b^2>]` with `f = x^2`.
pub fn rank_one_noncentral() -> RankOneExtension {
    let (group, chi, f) = rank_one_noncentral_group();
    let g1 = group.index_of("b").expect("b");
    rank_one_extension(&f, &group, &chi, g1, 2, &f.one()).expect("rank one quotient case")
}

pub fn rank_one_noncentral_group() -> (FiniteGroup, Vec<Scalar>, FieldDescriptor) {
    let f = FieldDescriptor::cyclotomic(4);
    let group = FiniteGroup::cyclic(4, "a").product(&FiniteGroup::cyclic(4, "b"));
    let chi = (0..16)
        .map(|idx| {
            let (i, j) = (idx / 4, idx % 4);
            f.zeta_pow(i as i64 + 2 * j as i64)
        })
        .collect();
    (group, chi, f)
}

/// `K = Q[D_{2u}]`, `chi(g^j h^l) = (-1)^l`, `f = x^2`.
pub fn dihedral(u: usize) -> MonogenicData {
    let (group, chi, f) = dihedral_group(u);
    let k = group_algebra_of(&group, &f);
    let alpha = character_endomorphism(&k, &chi).expect("reflection character");
    let lambdas = vec![k.zero(); 2];
    validate_monogenic(k, alpha, 2, lambdas).expect("dihedral extension")
}

pub fn dihedral_group(u: usize) -> (FiniteGroup, Vec<Scalar>, FieldDescriptor) {
    let f = FieldDescriptor::rationals();
    let group = FiniteGroup::dihedral(u);
    let chi = (0..2 * u).map(|idx| f.from_i64(if idx >= u { -1 } else { 1 })).collect();
    (group, chi, f)
}

/// Sweedler data with `f = x^2 - g`, which violates `alpha(lambda_2) = lambda_2`.
pub fn sweedler_with_lambda2_minus_g() -> Result<MonogenicData, AlgebraError> {
    let f = FieldDescriptor::rationals();
    let k = group_algebra_of(&FiniteGroup::cyclic(2, "g"), &f);
    let alpha = character_endomorphism(&k, &[f.one(), f.from_i64(-1)])?;
    let mut l2 = k.zero();
    l2[1] = f.from_i64(-1);
    validate_monogenic(k.clone(), alpha, 2, vec![k.zero(), l2])
}
