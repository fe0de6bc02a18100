//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the libtest
//! harness so the lines are always printed.

use std::time::{Duration, Instant};

use monogenic::algebra::{BimoduleData, MonogenicData};
use monogenic::cyclic::{d_versus_bar, hc_bar_dims, hc_dims, sbi_check};
use monogenic::resolution::BarWorkspace;
use monogenic::small::{build_cs, periodicity_check};
use monogenic_cli::{cmd_hc, cmd_hh, cmd_verify, example_spec, Flags, ParsedSpec};

const ALL: &[&str] = &[
    "trunc:2", "trunc:3", "trunc:4", "sweedler", "taft:2", "taft:3", "rank1:c4", "rank1nc:c2xc4", "dihedral:3", "dihedral:4",
];
/// `trunc:4` in degree 6 needs a 2916-dimensional dense bar space; its HH oracle stops at degree 4.
const HH_ORACLE: &[&str] = &[
    "trunc:2", "trunc:3", "sweedler", "taft:2", "taft:3", "rank1:c4", "rank1nc:c2xc4", "dihedral:3", "dihedral:4",
];
const RUNTIME_LIMIT: Duration = Duration::from_secs(120);

struct Outcome {
    pass: bool,
    lines: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, lines: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: String) {
        if !ok {
            self.pass = false;
        }
        self.lines.push(format!("{} {}", if ok { "ok  " } else { "FAIL" }, what));
    }
}

fn spec(name: &str) -> ParsedSpec {
    example_spec(name).unwrap_or_else(|e| panic!("{}: {:#}", name, e))
}

fn generic_hh(a: &MonogenicData, degrees: usize) -> Vec<usize> {
    build_cs(a, &BimoduleData::regular(a), degrees).unwrap().complex.homology_dims()[..degrees].to_vec()
}

fn alternating(even: usize, odd: usize, len: usize) -> Vec<usize> {
    (0..len).map(|r| if r % 2 == 0 { even } else { odd }).collect()
}

fn first_then(first: usize, rest: usize, len: usize) -> Vec<usize> {
    (0..len).map(|r| if r == 0 { first } else { rest }).collect()
}

fn identity_suite() -> Outcome {
    let mut o = Outcome::new();
    for name in ALL {
        let s = spec(name);
        let t = Instant::now();
        let rep = cmd_verify(&s, 6).unwrap();
        let elapsed = t.elapsed();
        let failed: Vec<&str> = rep.identities.iter().filter(|i| !i.pass).map(|i| i.name.as_str()).collect();
        o.check(
            rep.passes() && elapsed <= RUNTIME_LIMIT,
            format!(
                "{}: {} identities, failures {:?}, {:.1}s",
                name,
                rep.identities.len(),
                failed,
                elapsed.as_secs_f64()
            ),
        );
    }
    o
}

fn hh_oracle() -> Outcome {
    let mut o = Outcome::new();
    for name in HH_ORACLE {
        let s = spec(name);
        let a = &s.algebra;
        let small = generic_hh(a, 6);
        let bar = BarWorkspace::regular(a).bar_complex(6).unwrap().homology_dims()[..6].to_vec();
        o.check(small == bar, format!("{}: small {:?}, bar {:?}", name, small, bar));
    }
    o
}

fn hc_oracle() -> Outcome {
    let mut o = Outcome::new();
    for name in ALL {
        let a = spec(name).algebra;
        let small = hc_dims(&a, 5).unwrap();
        let bar = hc_bar_dims(&a, 5).unwrap();
        o.check(small == bar, format!("{}: small {:?}, bar {:?}", name, small, bar));
    }
    o
}

fn closed_form_flags() -> Flags {
    Flags {
        closed_form: true,
        ..Flags::default()
    }
}

fn closed_forms() -> Outcome {
    let mut o = Outcome::new();
    let len = 6;
    let hh_check = |o: &mut Outcome, name: &str, want: Vec<usize>| {
        let s = spec(name);
        let rep = cmd_hh(&s, len, closed_form_flags()).unwrap();
        let generic = rep.dimensions.as_ref().unwrap().dims.clone();
        let cf = rep.comparison("closed form").unwrap();
        let formula = cf.rows[1].dims.clone();
        o.check(
            generic == want && formula == want && cf.agrees,
            format!("{} HH: generic {:?}, formula {:?}, expected {:?}", name, generic, formula, want),
        );
    };
    let hc_check = |o: &mut Outcome, name: &str, want: Vec<usize>| {
        let s = spec(name);
        let rep = cmd_hc(&s, len, closed_form_flags()).unwrap();
        let generic = rep.dimensions.as_ref().unwrap().dims.clone();
        let cf = rep.comparison("closed form").unwrap();
        let (cycle, shown) = (cf.rows[1].dims.clone(), cf.rows[2].dims.clone());
        o.check(
            generic == want && cycle == want,
            format!(
                "{} HC: generic {:?}, cycle reading {:?}, displayed reading {:?}, expected {:?}",
                name, generic, cycle, shown, want
            ),
        );
    };
    for n in [2, 3, 4] {
        hh_check(&mut o, &format!("trunc:{}", n), first_then(n, n - 1, len));
    }
    for n in [2, 3] {
        hh_check(&mut o, &format!("taft:{}", n), first_then(n, n - 1, len));
        hc_check(&mut o, &format!("taft:{}", n), alternating(n, n - 1, len));
    }
    hh_check(&mut o, "rank1:c4", first_then(3, 1, len));
    hc_check(&mut o, "rank1:c4", alternating(3, 1, len));
    o
}

fn connes_operator() -> Outcome {
    let mut o = Outcome::new();
    for name in ALL {
        let a = spec(name).algebra;
        let ws = BarWorkspace::regular(&a);
        let res = d_versus_bar(&ws, 5).unwrap();
        let bad: Vec<usize> = res.iter().filter(|(_, ok)| !ok).map(|(r, _)| *r).collect();
        o.check(bad.is_empty(), format!("{}: D = psi B phi for r = 0..=5, failing {:?}", name, bad));
    }
    o
}

fn sbi() -> Outcome {
    let mut o = Outcome::new();
    for name in ["taft:2", "taft:3"] {
        let a = spec(name).algebra;
        let rep = sbi_check(&a, 2).unwrap();
        let mut parts = Vec::new();
        for item in ["1", "a", "b", "c", "d", "e", "f"] {
            let pass = rep.item_passes(item);
            parts.push(format!("{}:{}({})", item, if pass { "pass" } else { "fail" }, rep.count(item)));
            let required = item == "1" || rep.count(item) > 0;
            o.check(pass && required, format!("{} item {} on {} instances", name, item, rep.count(item)));
        }
        o.lines.push(format!("     {} summary {}", name, parts.join(" ")));
    }
    o
}

fn dihedral() -> Outcome {
    let mut o = Outcome::new();
    let flags = Flags {
        oracle: true,
        ..Flags::default()
    };
    for name in ["dihedral:3", "dihedral:4"] {
        let s = spec(name);
        let hh = cmd_hh(&s, 6, flags).unwrap();
        let hc = cmd_hc(&s, 6, flags).unwrap();
        for rep in [&hh, &hc] {
            let oracle = rep.comparison("oracle").map_or(false, |c| c.agrees);
            let table = rep.comparison("dihedral display");
            let rows = table.map(|t| format!("{:?} vs displayed {:?}", t.rows[0].dims, t.rows[1].dims));
            o.check(
                oracle && table.is_some(),
                format!(
                    "{} {}: collapse {}, generic {:?}, oracle agrees {}, table {}",
                    name,
                    rep.command,
                    rep.hypotheses.collapse,
                    rep.dimensions.as_ref().unwrap().dims,
                    oracle,
                    rows.unwrap_or_else(|| "missing".into())
                ),
            );
        }
    }
    o
}

fn periodicity() -> Outcome {
    let mut o = Outcome::new();
    let max_m = 2;
    for name in ALL {
        let a = spec(name).algebra;
        let Some(v) = a.alpha_n_order() else {
            o.lines.push(format!("     {}: alpha^n of unknown order, skipped", name));
            continue;
        };
        let len = 2 * (max_m + v) + 3;
        let hh = generic_hh(&a, len);
        let hc = hc_dims(&a, len).unwrap();
        let ok_hh = periodicity_check(&a, &hh, v, max_m).unwrap();
        let ok_hc = periodicity_check(&a, &hc, v, max_m).unwrap();
        o.check(ok_hh && ok_hc, format!("{}: v = {}, HH {:?}, HC {:?}", name, v, hh, hc));
    }
    o
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("identity suite at max degree 6, within 2 minutes per fixture", identity_suite),
        ("HH small complex = bar complex, degrees 0-5", hh_oracle),
        ("HC small mixed complex = bar mixed complex, degrees 0-4", hc_oracle),
        ("closed-form regression", closed_forms),
        ("Connes operator D = psi B phi, degrees 0-5", connes_operator),
        ("SBI statements on taft:2 and taft:3, m <= 2", sbi),
        ("dihedral audit", dihedral),
        ("periodicity of HH and HC, m <= 2", periodicity),
    ];
    let mut all = true;
    let mut summary = Vec::new();
    for (i, (title, run)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let o = run();
        for l in &o.lines {
            println!("  [{}] {}", i + 1, l);
        }
        let line = format!(
            "criterion {}: {} ({}) [{:.1}s]",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            title,
            t.elapsed().as_secs_f64()
        );
        println!("{}", line);
        summary.push(line);
        all &= o.pass;
    }
    println!("\nacceptance summary");
    for l in &summary {
        println!("{}", l);
    }
    if !all {
        std::process::exit(1);
    }
}
