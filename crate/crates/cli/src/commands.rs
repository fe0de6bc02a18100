//! The `hh`, `hc` and `verify` commands.

use anyhow::{anyhow, bail, Result};

use monogenic::algebra::{BimoduleData, MonogenicData};
use monogenic::chain::HomologyReport;
use monogenic::cyclic::{build_mixed_components, build_mixed_unchecked, hc_closed_form, MixedComplexData};
use monogenic::dihedral::DihedralDisplay;
use monogenic::resolution::BarWorkspace;
use monogenic::small::{build_cs, decompose, hh_closed_form, HhCase};
use monogenic::verify::{bar_fits, verify};

use crate::report::{Comparison, DegreeBasis, DimensionRow, IdentityRow, ResultReport};
use crate::spec::ParsedSpec;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub decompose: bool,
    pub closed_form: bool,
    pub oracle: bool,
    pub basis: bool,
}

fn row(label: &str, mode: &str, dims: Vec<usize>) -> DimensionRow {
    DimensionRow {
        label: label.into(),
        mode: mode.into(),
        dims,
    }
}

fn base_report(spec: &ParsedSpec, command: &str, max_degree: usize) -> ResultReport {
    let a = &spec.algebra;
    let mut warnings = Vec::new();
    if !spec.hypotheses.collapse {
        warnings.push("collapse condition fails; dimensions come from the generic small complex".into());
    }
    if let Some(lb) = &spec.hypotheses.lambda_breve {
        if !lb.holds {
            warnings.push(format!("lambda_breve candidate {} rejected", lb.element));
        }
    }
    ResultReport {
        command: command.into(),
        algebra: spec.label(),
        field: field_name(a),
        dim_k: a.dim_k(),
        n: a.n(),
        max_degree,
        hypotheses: spec.hypotheses.clone(),
        notes: spec.notes.clone(),
        warnings,
        dimensions: None,
        components: Vec::new(),
        representatives: Vec::new(),
        comparisons: Vec::new(),
        identities: Vec::new(),
    }
}

fn field_name(a: &MonogenicData) -> String {
    let d = a.field().order();
    if d <= 2 {
        "Q".into()
    } else {
        format!("Q(zeta_{})", d)
    }
}

/// The formula that applies to the algebra, or why none does.
fn hh_case(spec: &ParsedSpec) -> Result<(HhCase, &'static str)> {
    let h = &spec.hypotheses;
    if let Some(r) = &spec.rank_one {
        return Ok((HhCase::RankOne(r.case, r.g1n_minus_one.clone()), "rank-one group algebra formulas"));
    }
    if h.alpha_identity {
        return Ok((HhCase::AlphaIdentity, "alpha = id formulas (A/[A,A] and f')"));
    }
    if h.collapse && h.diagonalizable {
        return Ok((HhCase::Eigen, "per-eigenvalue collapsed formulas"));
    }
    if h.collapse {
        return Ok((HhCase::Collapse, "collapsed formulas"));
    }
    bail!("--closed-form refused: no displayed formula applies (collapse fails and alpha != id)")
}

fn oracle_window(a: &MonogenicData, module_dim: usize, max_degree: usize) -> usize {
    let mut r = max_degree;
    while r > 1 && !bar_fits(a, module_dim, r) {
        r -= 1;
    }
    r
}

fn dihedral_table(spec: &ParsedSpec, generic: &[usize], hc: bool) -> Option<Comparison> {
    let u = spec.dihedral?;
    let d = DihedralDisplay::new(u);
    let shown = if hc { d.hc(generic.len()) } else { d.hh(generic.len()) };
    let mut notes = vec![format!(
        "displayed pieces: dim k[<g>]/(g^j - g^(u-j)) = {}, dim k[<g>]h/k[<g>](g^2-1)h = {}",
        d.rotation_part, d.reflection_part
    )];
    if !spec.hypotheses.collapse {
        notes.push(format!(
            "the displayed formulas assume the collapse condition, which fails here ({}); the generic dims are authoritative",
            spec.hypotheses.collapse_failures.join(", ")
        ));
    }
    Some(Comparison {
        title: format!("dihedral display (u = {})", u),
        agrees: shown == generic,
        rows: vec![row("computed", "generic", generic.to_vec()), row("displayed", "display", shown)],
        binding: false,
        notes,
    })
}

fn format_module(spec: &ParsedSpec, m: &BimoduleData, v: &[monogenic::linalg::Scalar]) -> String {
    if spec.bimodule.is_none() {
        return spec.algebra.format_a(v);
    }
    let terms: Vec<String> = v
        .iter()
        .zip(m.labels())
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| format!("({}){}", c, l))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn cmd_hh(spec: &ParsedSpec, max_degree: usize, flags: Flags) -> Result<ResultReport> {
    let a = &spec.algebra;
    let regular = spec.bimodule.is_none();
    let m = spec.bimodule.clone().unwrap_or_else(|| BimoduleData::regular(a));
    let mut rep = base_report(spec, "hh", max_degree);
    let cs = build_cs(a, &m, max_degree)?;
    let generic: Vec<usize> = cs.complex.homology_dims()[..max_degree].to_vec();
    rep.dimensions = Some(row("HH", "generic", generic.clone()));

    if flags.basis {
        for r in 0..max_degree {
            let h: HomologyReport = cs.complex.homology(r)?;
            rep.representatives.push(DegreeBasis {
                degree: r,
                classes: h.ambient_representatives.iter().map(|v| format_module(spec, &m, v)).collect(),
            });
        }
    }
    if flags.decompose {
        if !regular {
            bail!("--decompose refused: only available for M = A");
        }
        let comps = decompose(a, max_degree).map_err(|e| anyhow!("--decompose refused: {}", e))?;
        let mut total = vec![0; max_degree];
        for c in comps {
            let dims = c.complex.homology_dims()[..max_degree].to_vec();
            for (t, d) in dims.iter().enumerate() {
                total[t] += d;
            }
            rep.components.push(row(&format!("omega = {}", c.value), "decomposed", dims));
        }
        rep.comparisons.push(Comparison {
            title: "sum of eigen-components".into(),
            agrees: total == generic,
            rows: vec![row("HH", "generic", generic.clone()), row("sum", "decomposed", total)],
            binding: true,
            notes: Vec::new(),
        });
    }
    if flags.closed_form {
        if !regular {
            bail!("--closed-form refused: only available for M = A");
        }
        let (case, what) = hh_case(spec)?;
        let cf = hh_closed_form(a, &case, max_degree).map_err(|e| anyhow!("--closed-form refused: {}", e))?;
        rep.comparisons.push(Comparison {
            title: format!("closed form ({})", what),
            agrees: cf == generic,
            rows: vec![row("HH", "generic", generic.clone()), row("formula", "closed-form", cf)],
            binding: true,
            notes: Vec::new(),
        });
    }
    if flags.oracle {
        let top = oracle_window(a, m.dim(), max_degree);
        let ws = BarWorkspace::new(a, m.clone());
        let bar = ws.bar_complex(top)?.homology_dims()[..top].to_vec();
        let mut notes = Vec::new();
        if top < max_degree {
            notes.push(format!("bar complex limited to degrees < {} by its dense size", top));
        }
        rep.comparisons.push(Comparison {
            title: "oracle (normalized bar complex)".into(),
            agrees: bar == generic[..top],
            rows: vec![row("HH", "generic", generic[..top].to_vec()), row("bar", "oracle", bar)],
            binding: true,
            notes,
        });
    }
    if regular {
        rep.comparisons.extend(dihedral_table(spec, &generic, false));
    }
    Ok(rep)
}

fn tot_representative(a: &MonogenicData, mixed: &MixedComplexData, n: usize, z: &[monogenic::linalg::Scalar]) -> String {
    let parts: Vec<String> = (0..=n / 2)
        .filter_map(|p| {
            let x = mixed.column(n, p, z);
            let lifted = mixed.spaces[n - 2 * p].lift(&x);
            let s = a.format_a(&lifted);
            (s != "0").then(|| format!("[col {}] {}", p, s))
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ; ")
    }
}

pub fn cmd_hc(spec: &ParsedSpec, max_degree: usize, flags: Flags) -> Result<ResultReport> {
    let a = &spec.algebra;
    if spec.bimodule.is_some() {
        bail!("hc needs M = A; the spec declares another bimodule");
    }
    let mut rep = base_report(spec, "hc", max_degree);
    let mixed = build_mixed_unchecked(a, max_degree)?;
    let reports = mixed.hc()?;
    let generic: Vec<usize> = reports.iter().map(|h| h.dimension).collect();
    rep.dimensions = Some(row("HC", "generic", generic.clone()));

    if flags.basis {
        for h in &reports {
            rep.representatives.push(DegreeBasis {
                degree: h.degree,
                classes: h
                    .representatives
                    .iter()
                    .map(|z| tot_representative(a, &mixed, h.degree, z))
                    .collect(),
            });
        }
    }
    if flags.decompose {
        let comps = build_mixed_components(a, max_degree).map_err(|e| anyhow!("--decompose refused: {}", e))?;
        let mut total = vec![0; max_degree];
        for c in comps {
            let dims = c.mixed.hc_dims()?;
            for (t, d) in dims.iter().enumerate() {
                total[t] += d;
            }
            rep.components.push(row(&format!("omega = {}", c.value), "decomposed", dims));
        }
        rep.comparisons.push(Comparison {
            title: "sum of eigen-components".into(),
            agrees: total == generic,
            rows: vec![row("HC", "generic", generic.clone()), row("sum", "decomposed", total)],
            binding: true,
            notes: Vec::new(),
        });
    }
    if flags.closed_form {
        let case = match &spec.rank_one {
            Some(r) => HhCase::RankOne(r.case, r.g1n_minus_one.clone()),
            None if spec.hypotheses.collapse && spec.hypotheses.diagonalizable => HhCase::Eigen,
            None => bail!("--closed-form refused: the cyclic formulas need collapse and a diagonalizable alpha"),
        };
        let p = hc_closed_form(a, &case, max_degree).map_err(|e| anyhow!("--closed-form refused: {}", e))?;
        let mut notes = vec![
            "odd degrees: the displayed numerator uses lambda lambda_n^m in [K,K]; the cycle condition of the \
             total complex gives lambda lambda_n^(m+1). Both readings are shown; the cycle reading is the one compared."
                .to_string(),
        ];
        notes.push(if p.readings_agree() {
            "the two readings coincide for this algebra".into()
        } else {
            "the two readings differ for this algebra".into()
        });
        rep.comparisons.push(Comparison {
            title: "closed form (cyclic formulas)".into(),
            agrees: p.cycle_reading == generic,
            rows: vec![
                row("HC", "generic", generic.clone()),
                row("cycle reading", "closed-form", p.cycle_reading),
                row("displayed reading", "closed-form", p.displayed_reading),
            ],
            binding: true,
            notes,
        });
    }
    if flags.oracle {
        let top = oracle_window(a, a.dim_a(), max_degree);
        let ws = BarWorkspace::regular(a);
        let bar = monogenic::cyclic::bar_mixed(&ws, top)?.hc_dims()?;
        let mut notes = Vec::new();
        if top < max_degree {
            notes.push(format!("bar mixed complex limited to degrees < {} by its dense size", top));
        }
        rep.comparisons.push(Comparison {
            title: "oracle (cyclic bar complex, BC total)".into(),
            agrees: bar == generic[..top],
            rows: vec![row("HC", "generic", generic[..top].to_vec()), row("bar", "oracle", bar)],
            binding: true,
            notes,
        });
    }
    rep.comparisons.extend(dihedral_table(spec, &generic, true));
    Ok(rep)
}

pub fn cmd_verify(spec: &ParsedSpec, max_degree: usize) -> Result<ResultReport> {
    let mut rep = base_report(spec, "verify", max_degree);
    let v = verify(&spec.algebra, max_degree);
    rep.identities = v
        .entries
        .into_iter()
        .map(|e| IdentityRow {
            name: e.name,
            degrees: e.window,
            pass: e.pass,
            detail: e.detail,
        })
        .collect();
    if spec.bimodule.is_some() {
        rep.notes.push("identities are checked for M = A".into());
    }
    Ok(rep)
}
