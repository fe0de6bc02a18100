//! Extensions of group algebras by `x^n - xi (g_1^n - 1)`, including the
//! rewrite over `k[G / <g_1^n>]` when `chi^n` is not trivial.

use crate::linalg::{vector, FieldDescriptor, Scalar};

use super::base::group_algebra_of;
use super::endomorphism::character_endomorphism;
use super::extension::{validate_monogenic, MonogenicData};
use super::group::FiniteGroup;
use super::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankOneCase {
    /// `xi = 0`: `f = x^n` over `k[G]`.
    XiZero,
    /// `xi != 0` and `chi^n = 1`: `f = x^n - xi (g_1^n - 1)` over `k[G]`.
    ChiPowerTrivial,
    /// `xi != 0` and `chi^n != 1`: rewritten as `x^n` over `k[G / <g_1^n>]`.
    Quotient,
}

#[derive(Clone, Debug)]
pub struct RankOneExtension {
    pub data: MonogenicData,
    pub case: RankOneCase,
    pub group: FiniteGroup,
    pub character: Vec<Scalar>,
    /// `g_1^n - 1` as an element of the final `K`.
    pub g1n_minus_one: Vec<Scalar>,
    /// Human-readable account of any rewrite performed.
    pub note: Option<String>,
}

/// Builds `k[G][x, alpha] / <x^n - xi (g_1^n - 1)>` with `alpha(g) = chi(g) g`.
pub fn rank_one_extension(
    field: &FieldDescriptor,
    group: &FiniteGroup,
    chi: &[Scalar],
    g1: usize,
    n: usize,
    xi: &Scalar,
) -> Result<RankOneExtension, AlgebraError> {
    if g1 >= group.order() {
        return Err(AlgebraError::Malformed("g_1 is not a group element".into()));
    }
    let chi_n_trivial = chi.iter().all(|c| field.pow(c, n as u64).is_one());
    let g1n = group.pow(g1, n);
    if xi.is_zero() || chi_n_trivial {
        let k = group_algebra_of(group, field);
        let alpha = character_endomorphism(&k, chi)?;
        let mut g1n_minus_one = k.basis(g1n);
        g1n_minus_one = vector::sub(field, &g1n_minus_one, k.unit());
        let mut lambdas = vec![k.zero(); n];
        lambdas[n - 1] = vector::scale(field, &g1n_minus_one, &field.neg(xi));
        let data = validate_monogenic(k, alpha, n, lambdas)?;
        let case = if xi.is_zero() {
            RankOneCase::XiZero
        } else {
            RankOneCase::ChiPowerTrivial
        };
        return Ok(RankOneExtension {
            data,
            case,
            group: group.clone(),
            character: chi.to_vec(),
            g1n_minus_one,
            note: None,
        });
    }
    if !chi[g1n].is_one() {
        return Err(AlgebraError::InvalidExtension(vec![format!(
            "chi({}) != 1, so alpha does not descend to the quotient by <g_1^{}>",
            group.label(g1n),
            n
        )]));
    }
    let (q, coset) = group.quotient_by_central(g1n)?;
    let mut qchi = vec![field.zero(); q.order()];
    for (g, &c) in coset.iter().enumerate() {
        qchi[c] = chi[g].clone();
    }
    let k = group_algebra_of(&q, field);
    let alpha = character_endomorphism(&k, &qchi)?;
    let lambdas = vec![k.zero(); n];
    let data = validate_monogenic(k.clone(), alpha, n, lambdas)?;
    let note = format!(
        "chi^{n} is not trivial, so <x^{n} - xi(g_1^{n} - 1)> = <x^{n}, g_1^{n} - 1>; rewritten over k[G/<{}>] (order {}) with f = x^{n}",
        group.label(g1n),
        q.order()
    );
    Ok(RankOneExtension {
        data,
        case: RankOneCase::Quotient,
        group: q,
        character: qchi,
        g1n_minus_one: k.zero(),
        note: Some(note),
    })
}
