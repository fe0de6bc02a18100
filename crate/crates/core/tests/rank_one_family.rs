//! Small rank-one extensions of cyclic group algebras: `G = C_m`, `n | m`,
//! `chi(g) = zeta_n`, `xi` in {0, 1}.

use monogenic::algebra::{check_collapse, rank_one_extension, BimoduleData, FiniteGroup, RankOneExtension};
use monogenic::cyclic::{d_versus_bar, hc_bar_dims, hc_closed_form, hc_dims};
use monogenic::linalg::FieldDescriptor;
use monogenic::resolution::BarWorkspace;
use monogenic::small::{build_cs, hh_closed_form, HhCase};
use monogenic::verify::bar_fits;
use proptest::prelude::*;

fn build(m: usize, n: usize, xi: i64) -> RankOneExtension {
    let f = if n == 2 { FieldDescriptor::rationals() } else { FieldDescriptor::cyclotomic(n) };
    let g = FiniteGroup::cyclic(m, "g");
    let chi: Vec<_> = (0..m).map(|i| if n == 2 { f.from_i64(if i % 2 == 0 { 1 } else { -1 }) } else { f.zeta_pow(i as i64) }).collect();
    rank_one_extension(&f, &g, &chi, 1, n, &f.from_i64(xi)).unwrap()
}

fn bar_window(ext: &RankOneExtension, cap: usize) -> usize {
    let a = &ext.data;
    let dim_a = a.dim_k() * a.n();
    (1..=cap).take_while(|&r| bar_fits(a, dim_a, r + 1)).last().unwrap_or(1)
}

fn check(m: usize, n: usize, xi: i64) {
    let ext = build(m, n, xi);
    let a = &ext.data;
    let w = bar_window(&ext, 4);
    let small = build_cs(a, &BimoduleData::regular(a), w).unwrap().complex.homology_dims()[..w].to_vec();
    let ws = BarWorkspace::regular(a);
    let bar = ws.bar_complex(w).unwrap().homology_dims()[..w].to_vec();
    assert_eq!(small, bar, "HH C_{} n={} xi={}", m, n, xi);

    let hc = hc_dims(a, w).unwrap();
    assert_eq!(hc, hc_bar_dims(a, w).unwrap(), "HC C_{} n={} xi={}", m, n, xi);

    if check_collapse(a, 2 * n * m).holds {
        let case = HhCase::RankOne(ext.case, ext.g1n_minus_one.clone());
        let len = 6;
        let generic = build_cs(a, &BimoduleData::regular(a), len).unwrap().complex.homology_dims()[..len].to_vec();
        assert_eq!(hh_closed_form(a, &case, len).unwrap(), generic, "HH closed form C_{} n={} xi={}", m, n, xi);
        let pred = hc_closed_form(a, &case, len).unwrap();
        assert_eq!(pred.cycle_reading, hc_dims(a, len).unwrap(), "HC closed form C_{} n={} xi={}", m, n, xi);
    }

    assert!(d_versus_bar(&ws, 2).unwrap().iter().all(|(_, ok)| *ok), "D C_{} n={} xi={}", m, n, xi);
}

#[test]
fn named_members() {
    check(2, 2, 0);
    check(2, 2, 1);
    check(4, 2, 1);
    check(3, 3, 0);
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 8, ..ProptestConfig::default() })]
    #[test]
    fn random_members((m, n) in prop::sample::select(vec![(2usize, 2usize), (4, 2), (6, 2), (3, 3), (6, 3), (4, 4)]),
                      xi in 0i64..=1) {
        check(m, n, xi);
    }
}
