//! Twisted commutators and the hypothesis checks behind the collapsed and decomposed complexes.

use crate::linalg::{vector, Scalar};

use super::base::BaseAlgebra;
use super::bimodule::BimoduleData;
use super::endomorphism::AlgebraEndomorphism;
use super::extension::MonogenicData;
use super::AlgebraError;

/// Spanning set of `[M, K]_{alpha^j}`: all `m alpha^j(lambda) - lambda m` on basis pairs.
pub fn twisted_commutator_subspace(m: &BimoduleData, a: &MonogenicData, j: usize) -> Vec<Vec<Scalar>> {
    let f = a.field();
    let k = a.base();
    let mut out = Vec::with_capacity(m.dim() * k.dim());
    for t in 0..k.dim() {
        let lam = k.basis(t);
        let tw = a.alpha_pow_apply(j, &lam);
        for s in 0..m.dim() {
            let e = vector::unit(f, m.dim(), s);
            let v = vector::sub(f, &m.act_right_k(&e, &tw), &m.act_left_k(&lam, &e));
            if !vector::is_zero(&v) {
                out.push(v);
            }
        }
    }
    out
}

/// Spanning set of `[K, K]_{alpha^j}` inside `K`.
pub fn k_twisted_commutators(a: &MonogenicData, j: usize) -> Vec<Vec<Scalar>> {
    let k = a.base();
    let f = a.field();
    let mut out = Vec::new();
    for t in 0..k.dim() {
        let lam = k.basis(t);
        let tw = a.alpha_pow_apply(j, &lam);
        for s in 0..k.dim() {
            let mu = k.basis(s);
            let v = vector::sub(f, &k.mul(&mu, &tw), &k.mul(&lam, &mu));
            if !vector::is_zero(&v) {
                out.push(v);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseReport {
    /// `(j, dim K/[K,K]_{alpha^j})` for each tested `j` not divisible by `n`.
    pub entries: Vec<(usize, usize)>,
    pub holds: bool,
}

/// Checks `[K,K]_{alpha^j} = K` for every `1 <= j <= max_j` with `j` not divisible by `n`.
pub fn check_collapse(a: &MonogenicData, max_j: usize) -> CollapseReport {
    let mut entries = Vec::new();
    for j in 1..=max_j {
        if j % a.n() == 0 {
            continue;
        }
        let rank = vector::rank_of(a.field(), a.dim_k(), &k_twisted_commutators(a, j));
        entries.push((j, a.dim_k() - rank));
    }
    let holds = entries.iter().all(|&(_, c)| c == 0);
    CollapseReport { entries, holds }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaBreveCheck {
    pub holds: bool,
    pub failure: Option<String>,
}

/// Checks that the candidate is central, fixed by `alpha^n`, and that
/// `candidate - alpha^i(candidate)` is invertible for `1 <= i < n`.
pub fn verify_lambda_breve(a: &MonogenicData, candidate: &[Scalar]) -> LambdaBreveCheck {
    let k = a.base();
    let fail = |s: String| LambdaBreveCheck {
        holds: false,
        failure: Some(s),
    };
    if candidate.len() != k.dim() {
        return fail("candidate has wrong length".into());
    }
    if !k.is_central(candidate) {
        return fail("not central in K".into());
    }
    if a.alpha_pow_apply(a.n(), candidate) != candidate {
        return fail(format!("alpha^{}(candidate) differs from candidate", a.n()));
    }
    for i in 1..a.n() {
        let d = vector::sub(a.field(), candidate, &a.alpha_pow_apply(i, candidate));
        if !k.is_invertible(&d) {
            return fail(format!("candidate - alpha^{}(candidate) is not invertible", i));
        }
    }
    LambdaBreveCheck {
        holds: true,
        failure: None,
    }
}

/// An eigenspace of a basis-diagonal `alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenComponent {
    pub value: Scalar,
    /// Basis indices of `K` spanning the eigenspace.
    pub indices: Vec<usize>,
}

/// Groups the basis of `K` by the diagonal value of `alpha`; the eigenvalue 1 comes first.
pub fn eigen_split(k: &BaseAlgebra, alpha: &AlgebraEndomorphism) -> Result<Vec<EigenComponent>, AlgebraError> {
    let diag = alpha
        .diagonal()
        .ok_or_else(|| AlgebraError::NotDiagonal("alpha is not diagonal on the basis of K".into()))?;
    let mut comps: Vec<EigenComponent> = Vec::new();
    let one = k.field().one();
    comps.push(EigenComponent {
        value: one.clone(),
        indices: Vec::new(),
    });
    for (i, v) in diag.into_iter().enumerate() {
        match comps.iter_mut().find(|c| c.value == v) {
            Some(c) => c.indices.push(i),
            None => comps.push(EigenComponent {
                value: v,
                indices: vec![i],
            }),
        }
    }
    if comps[0].indices.is_empty() {
        comps.remove(0);
    }
    Ok(comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures;

    #[test]
    fn sweedler_commutators() {
        let a = fixtures::sweedler();
        assert!(k_twisted_commutators(&fixtures::truncated(3), 1).is_empty());
        assert_eq!(vector::rank_of(a.field(), 2, &k_twisted_commutators(&a, 1)), 2);
        assert_eq!(vector::rank_of(a.field(), 2, &k_twisted_commutators(&a, 2)), 0);
    }

    #[test]
    fn collapse_status() {
        assert!(check_collapse(&fixtures::sweedler(), 6).holds);
        assert!(!check_collapse(&fixtures::truncated(3), 6).holds);
    }

    #[test]
    fn lambda_breve_candidates() {
        let a = fixtures::sweedler();
        let g = a.base().basis(1);
        assert!(verify_lambda_breve(&a, &g).holds);
        assert!(!verify_lambda_breve(&a, a.base().unit()).holds);
        let t = fixtures::taft(3);
        assert!(verify_lambda_breve(&t, &t.base().basis(1)).holds);
    }

    #[test]
    fn eigen_split_sweedler() {
        let a = fixtures::sweedler();
        let comps = eigen_split(a.base(), a.alpha()).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps[0].value.is_one());
        assert_eq!(comps[0].indices, vec![0]);
        assert_eq!(comps[1].indices, vec![1]);
    }
}
