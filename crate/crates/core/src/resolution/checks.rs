//! Degree bounds for the induced homotopy and the vanishing condition behind the
//! transfer of Connes' `B` to the small complex.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::linalg::{vector, Scalar};

use super::cyclic_bar::BarWorkspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingEntry {
    pub r: usize,
    pub j: usize,
    /// `psi_{r+2j+1} (B omega)^j B phi_r` is the zero map.
    pub zero: bool,
    /// `deg((B omega)^j B phi_r(v)) <= deg(phi_r(v))` on the monomial basis, and
    /// `< mn + n` when `r = 2m`.
    pub degree_ok: bool,
    /// Largest degree seen before applying `psi`.
    pub max_degree: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VanishingReport {
    pub entries: Vec<VanishingEntry>,
}

impl VanishingReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.zero && e.degree_ok)
    }
}

/// Applies the composite to each monomial basis vector of `C^S_r` and checks it vanishes.
pub fn vanishing_check(ws: &BarWorkspace, j_max: usize, r_max: usize) -> VanishingReport {
    let a = ws.algebra();
    let n = a.n();
    let mut rep = VanishingReport::default();
    for r in 0..=r_max {
        let src = ws.small_space(r);
        let starts: Vec<Vec<Scalar>> = (0..src.dim())
            .map(|t| ws.phi_ambient(r, &src.space().basis_lift(t)))
            .collect();
        let mut current: Vec<Vec<Scalar>> = starts.iter().map(|v| ws.connes_b_ambient(r, v)).collect();
        let base_degrees: Vec<Option<usize>> = starts.iter().map(|v| ws.ambient_degree(&ws.bar_space(r), v)).collect();
        let mut deg = r + 1;
        for j in 1..=j_max {
            current = current
                .iter()
                .map(|v| {
                    let up = ws.omega_ambient(deg, v);
                    ws.connes_b_ambient(deg + 1, &up)
                })
                .collect();
            deg += 2;
            let space = ws.bar_space(deg);
            let target = ws.small_space(deg);
            let mut zero = true;
            let mut degree_ok = true;
            let mut max_degree = None;
            for (v, base) in current.iter().zip(&base_degrees) {
                let d = ws.ambient_degree(&space, v);
                max_degree = max_degree.max(d);
                if let (Some(d), Some(b)) = (d, base) {
                    if d > *b || (r % 2 == 0 && d >= (r / 2) * n + n) {
                        degree_ok = false;
                    }
                } else if d.is_some() {
                    degree_ok = false;
                }
                let img = ws.psi_ambient(deg, v);
                if !target.is_zero_class(&img) {
                    zero = false;
                }
            }
            rep.entries.push(VanishingEntry {
                r,
                j,
                zero,
                degree_ok,
                max_degree,
            });
        }
    }
    rep
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBoundReport {
    /// Arity checked and number of monomials tried.
    pub checked: Vec<(usize, usize)>,
    pub violations: Vec<(usize, usize)>,
}

impl DegreeBoundReport {
    pub fn all_pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `deg(omega(a)) <= deg(a)` on `A (x) Abar^r (x)`: every ambient monomial for
/// `r <= exhaustive_r`, then `samples` seeded random monomials in arity
/// `exhaustive_r + 1`.
pub fn omega_degree_bound(ws: &BarWorkspace, exhaustive_r: usize, samples: usize, seed: u64) -> DegreeBoundReport {
    let f = ws.algebra().field();
    let mut rep = DegreeBoundReport {
        checked: Vec::new(),
        violations: Vec::new(),
    };
    let try_coord = |r: usize, c: usize, rep: &mut DegreeBoundReport| {
        let space = ws.bar_space(r);
        let e = vector::unit(f, space.ambient_dim(), c);
        let img = ws.omega_ambient(r, &e);
        if let Some(d) = ws.ambient_degree(&ws.bar_space(r + 1), &img) {
            if d > ws.coordinate_degree(&space, c) {
                rep.violations.push((r, c));
            }
        }
    };
    for r in 0..=exhaustive_r {
        let dim = ws.bar_space(r).ambient_dim();
        for c in 0..dim {
            try_coord(r, c, &mut rep);
        }
        rep.checked.push((r, dim));
    }
    if samples > 0 {
        let r = exhaustive_r + 1;
        let dim = ws.bar_space(r).ambient_dim();
        let mut rng = StdRng::seed_from_u64(seed);
        for _ in 0..samples {
            try_coord(r, rng.gen_range(0..dim), &mut rep);
        }
        rep.checked.push((r, samples));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures;

    #[test]
    fn sweedler_vanishing() {
        let a = fixtures::sweedler();
        let ws = BarWorkspace::regular(&a);
        let rep = vanishing_check(&ws, 2, 3);
        assert!(rep.all_pass(), "{:?}", rep);
        assert_eq!(rep.entries.len(), 8);
    }

    #[test]
    fn truncated_vanishing_and_degrees() {
        let a = fixtures::truncated(3);
        let ws = BarWorkspace::regular(&a);
        assert!(vanishing_check(&ws, 2, 2).all_pass());
        let d = omega_degree_bound(&ws, 3, 50, 7);
        assert!(d.all_pass(), "{:?}", d.violations);
    }
}
