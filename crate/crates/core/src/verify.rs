//! Runs every identity suite on one algebra and collects pass/fail entries.

use crate::algebra::{BimoduleData, MonogenicData};
use crate::cyclic::{build_mixed_unchecked, collapsed_embedding_check, d_versus_bar, transfer_check};
use crate::linalg::Matrix;
use crate::resolution::{check_resolution, omega_degree_bound, vanishing_check, BarWorkspace};
use crate::small::{build_cs, require_collapse};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyEntry {
    pub name: String,
    /// Degrees covered, as `lo..=hi`.
    pub window: (usize, usize),
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub entries: Vec<VerifyEntry>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn entry(&self, name: &str) -> Option<&VerifyEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    fn push(&mut self, name: &str, window: (usize, usize), pass: bool, detail: impl Into<String>) {
        self.entries.push(VerifyEntry {
            name: name.to_string(),
            window,
            pass,
            detail: detail.into(),
        });
    }
}

/// Windows used by `verify`; the defaults follow `max_degree` but cap the
/// bar-side work, which grows like `(n-1)^r`.
#[derive(Clone, Copy, Debug)]
pub struct VerifyWindows {
    pub small: usize,
    pub resolution: usize,
    pub bar: usize,
    pub omega_exhaustive: usize,
    pub omega_samples: usize,
    pub vanishing_j: usize,
    pub vanishing_r: usize,
    pub transfer_top: usize,
}

impl VerifyWindows {
    pub fn for_degree(max_degree: usize) -> Self {
        let max_degree = max_degree.max(2);
        VerifyWindows {
            small: max_degree,
            resolution: max_degree.min(5),
            bar: max_degree.min(5),
            omega_exhaustive: 3,
            omega_samples: 200,
            vanishing_j: 2,
            vanishing_r: 3,
            transfer_top: max_degree.min(6),
        }
    }

    /// Shrinks the dense bar-side windows until `M (x) Abar^r` stays under
    /// `AMBIENT_BUDGET` coordinates in every degree a matrix is built for.
    pub fn for_algebra(a: &MonogenicData, max_degree: usize) -> Self {
        let mut w = Self::for_degree(max_degree);
        let fits = |r: usize| bar_fits(a, a.dim_a(), r);
        while w.bar > 1 && !fits(w.bar + 1) {
            w.bar -= 1;
        }
        while w.transfer_top > 2 && !fits(w.transfer_top + 1) {
            w.transfer_top -= 1;
        }
        w
    }
}

/// Largest ambient dimension of a bar space turned into a dense matrix.
pub const AMBIENT_BUDGET: usize = 1200;

/// Whether `M (x) Abar^{(x) r}` with `dim M = module_dim` fits in `AMBIENT_BUDGET`.
pub fn bar_fits(a: &MonogenicData, module_dim: usize, r: usize) -> bool {
    let words = (0..r).try_fold(1usize, |acc, _| acc.checked_mul(a.n() - 1));
    words
        .and_then(|c| c.checked_mul(module_dim))
        .map_or(false, |d| d <= AMBIENT_BUDGET)
}

const SEED: u64 = 0x5eed;

fn failed(list: &[usize]) -> String {
    if list.is_empty() {
        String::new()
    } else {
        format!("fails in degrees {:?}", list)
    }
}

pub fn verify(a: &MonogenicData, max_degree: usize) -> VerifyReport {
    verify_with(a, VerifyWindows::for_algebra(a, max_degree))
}

pub fn verify_with(a: &MonogenicData, w: VerifyWindows) -> VerifyReport {
    let mut rep = VerifyReport::default();
    let f = a.field();

    match build_cs(a, &BimoduleData::regular(a), w.small) {
        Ok(cs) => {
            let ok = cs.complex.check_squares().is_ok();
            rep.push("small d^2 = 0", (0, w.small), ok, "");
        }
        Err(e) => rep.push("small d^2 = 0", (0, w.small), false, e.to_string()),
    }

    let ws = BarWorkspace::regular(a);
    let res = check_resolution(ws.comparison(), w.resolution);
    let win = (0, w.resolution);
    let detail = res.failures.join("; ");
    rep.push("resolution d^2 = 0", win, res.d_squared, detail.clone());
    rep.push("resolution b'^2 = 0", win, res.b_squared, detail.clone());
    rep.push("phi' chain map", win, res.phi_chain, detail.clone());
    rep.push("psi' chain map", win, res.psi_chain, detail.clone());
    rep.push("psi' phi' = id", win, res.psi_phi_identity, detail.clone());
    rep.push("b' omega' + omega' b' = phi' psi' - id", win, res.homotopy, detail.clone());
    rep.push("comparison maps K-balanced", win, res.balanced, detail.clone());
    rep.push("omega' degree bound (generators)", win, res.degree_bound, detail);

    let bar_b: Vec<Matrix> = (0..=w.bar + 1).map(|r| ws.b_matrix(r)).collect();
    let big_b: Vec<Matrix> = (0..=w.bar).map(|r| ws.connes_b_matrix(r)).collect();
    let (mut b2, mut bb2, mut mixed, mut pp, mut hom) = (vec![], vec![], vec![], vec![], vec![]);
    for r in 0..=w.bar {
        if r >= 1 && !bar_b[r].mul(&bar_b[r + 1]).is_zero() {
            b2.push(r);
        }
        if r >= 1 && !big_b[r].mul(&big_b[r - 1]).is_zero() {
            bb2.push(r);
        }
        let mut anti = bar_b[r + 1].mul(&big_b[r]);
        if r >= 1 {
            anti = anti.add(&big_b[r - 1].mul(&bar_b[r]));
        }
        if !anti.is_zero() {
            mixed.push(r);
        }
        let phi = ws.phi_matrix(r);
        let psi = ws.psi_matrix(r);
        if !psi.mul(&phi).is_identity() {
            pp.push(r);
        }
        let mut lhs = bar_b[r + 1].mul(&ws.omega_matrix(r));
        if r >= 1 {
            lhs = lhs.add(&ws.omega_matrix(r - 1).mul(&bar_b[r]));
        }
        if lhs != phi.mul(&psi).sub(&Matrix::identity(f, phi.rows())) {
            hom.push(r);
        }
    }
    let win = (0, w.bar);
    rep.push("bar b^2 = 0", win, b2.is_empty(), failed(&b2));
    rep.push("bar B^2 = 0", win, bb2.is_empty(), failed(&bb2));
    rep.push("bar bB + Bb = 0", win, mixed.is_empty(), failed(&mixed));
    rep.push("psi phi = id", win, pp.is_empty(), failed(&pp));
    rep.push("b omega + omega b = phi psi - id", win, hom.is_empty(), failed(&hom));

    match build_mixed_unchecked(a, w.small) {
        Ok(_) => rep.push("small mixed identities", (0, w.small), true, "d^2 = 0, D^2 = 0, dD + Dd = 0"),
        Err(e) => rep.push("small mixed identities", (0, w.small), false, e.to_string()),
    }

    match d_versus_bar(&ws, w.bar) {
        Ok(list) => {
            let bad: Vec<usize> = list.iter().filter(|(_, ok)| !ok).map(|(r, _)| *r).collect();
            rep.push("D = psi B phi", (0, w.bar), bad.is_empty(), failed(&bad));
        }
        Err(e) => rep.push("D = psi B phi", (0, w.bar), false, e.to_string()),
    }

    let deg = omega_degree_bound(&ws, w.omega_exhaustive, w.omega_samples, SEED);
    rep.push(
        "omega degree bound",
        (0, w.omega_exhaustive + usize::from(w.omega_samples > 0)),
        deg.all_pass(),
        format!(
            "exhaustive to r = {}, {} sampled in r = {}; {} violations",
            w.omega_exhaustive,
            w.omega_samples,
            w.omega_exhaustive + 1,
            deg.violations.len()
        ),
    );

    let van = vanishing_check(&ws, w.vanishing_j, w.vanishing_r);
    let bad: Vec<String> = van
        .entries
        .iter()
        .filter(|e| !(e.zero && e.degree_ok))
        .map(|e| format!("(r={}, j={}, zero={}, degree={})", e.r, e.j, e.zero, e.degree_ok))
        .collect();
    rep.push(
        "psi (B omega)^j B phi = 0",
        (0, w.vanishing_r),
        van.all_pass(),
        if bad.is_empty() {
            format!("j <= {}", w.vanishing_j)
        } else {
            format!("j <= {}; {}", w.vanishing_j, bad.join(" "))
        },
    );

    match transfer_check(a, w.transfer_top) {
        Ok(t) => {
            let win = (0, w.transfer_top - 1);
            let detail = if t.input.is_retract() { String::new() } else { format!("{:?}", t.input) };
            rep.push("input retract", (0, w.transfer_top), t.input.is_retract(), detail);
            rep.push("special retract identities", (0, w.transfer_top), t.special_input.is_special(), "");
            rep.push("perturbed retract identities", win, t.perturbed.is_retract(), "");
            rep.push("perturbed special retract identities", win, t.special_perturbed.is_special(), "");
            rep.push("transferred differential = d + D", win, t.matches_mixed, "");
            rep.push(
                "transferred HC = HC",
                win,
                t.transferred_hc == t.hc,
                format!("{:?} vs {:?}", t.transferred_hc, t.hc),
            );
        }
        Err(e) => rep.push("perturbation transfer", (0, w.transfer_top), false, e.to_string()),
    }

    if require_collapse(a, w.small).is_ok() {
        match collapsed_embedding_check(a, w.small) {
            Ok(ok) => rep.push("collapsed complex embeds", (0, w.small), ok, ""),
            Err(e) => rep.push("collapsed complex embeds", (0, w.small), false, e.to_string()),
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures;

    #[test]
    fn sweedler_all_pass() {
        let rep = verify(&fixtures::sweedler(), 6);
        assert!(rep.all_pass(), "{:#?}", rep.entries.iter().filter(|e| !e.pass).collect::<Vec<_>>());
        assert!(rep.entry("collapsed complex embeds").is_some());
    }

    #[test]
    fn truncated_skips_collapse() {
        let rep = verify_with(&fixtures::truncated(3), VerifyWindows::for_degree(4));
        assert!(rep.all_pass());
        assert!(rep.entry("collapsed complex embeds").is_none());
    }
}
