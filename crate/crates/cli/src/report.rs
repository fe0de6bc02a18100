//! The result report shared by `hh`, `hc` and `verify`, in JSON and as text tables.

use std::fmt::Write as _;

use serde::Serialize;

use crate::spec::HypothesisSummary;

/// Dimensions in degrees `0 .. dims.len()` and the computation that produced them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionRow {
    pub label: String,
    /// `generic`, `collapsed`, `decomposed`, `closed-form`, `oracle`, `transfer` or `display`.
    pub mode: String,
    pub dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub title: String,
    pub rows: Vec<DimensionRow>,
    /// Whether the rows that are meant to agree with the generic dims do.
    pub agrees: bool,
    /// False for informational tables whose disagreement is not a failure.
    pub binding: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeBasis {
    pub degree: usize,
    pub classes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityRow {
    pub name: String,
    pub degrees: (usize, usize),
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResultReport {
    pub command: String,
    pub algebra: String,
    pub field: String,
    pub dim_k: usize,
    pub n: usize,
    pub max_degree: usize,
    pub hypotheses: HypothesisSummary,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimensions: Option<DimensionRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<DimensionRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub representatives: Vec<DegreeBasis>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub comparisons: Vec<Comparison>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub identities: Vec<IdentityRow>,
}

impl ResultReport {
    /// Every binding comparison agrees and every identity passes.
    pub fn passes(&self) -> bool {
        self.comparisons.iter().all(|c| !c.binding || c.agrees) && self.identities.iter().all(|i| i.pass)
    }

    pub fn comparison(&self, title_prefix: &str) -> Option<&Comparison> {
        self.comparisons.iter().find(|c| c.title.starts_with(title_prefix))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} for {}", self.command, self.algebra);
        let _ = writeln!(
            out,
            "field {}, dim K = {}, n = {}, max degree {}",
            self.field, self.dim_k, self.n, self.max_degree
        );
        let h = &self.hypotheses;
        let _ = writeln!(out, "\nhypotheses");
        let mut hyp: Vec<(String, String)> = vec![(
            "collapse".into(),
            if h.collapse {
                format!("holds (j <= {})", h.collapse_checked_to)
            } else {
                format!("fails: {}", h.collapse_failures.join(", "))
            },
        )];
        if let Some(lb) = &h.lambda_breve {
            hyp.push((
                "lambda_breve".into(),
                format!(
                    "{} ({}): {}",
                    lb.element,
                    lb.source,
                    if lb.holds {
                        "accepted".to_string()
                    } else {
                        format!("rejected, {}", lb.failure.clone().unwrap_or_default())
                    }
                ),
            ));
        }
        hyp.push(("alpha = id".into(), h.alpha_identity.to_string()));
        hyp.push((
            "diagonalizable".into(),
            if h.diagonalizable {
                format!("true, eigenvalues {}", h.eigenvalues.join(", "))
            } else {
                "false".into()
            },
        ));
        let ord = |o: Option<usize>| o.map_or("unknown".to_string(), |v| v.to_string());
        hyp.push(("order of alpha".into(), ord(h.alpha_order)));
        hyp.push(("order of alpha^n".into(), ord(h.alpha_n_order)));
        if let Some(c) = &h.chi_n_case {
            hyp.push(("rank-one case".into(), c.clone()));
        }
        let w = hyp.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in hyp {
            let _ = writeln!(out, "  {:<w$}  {}", k, v, w = w);
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {}", n);
        }
        for n in &self.warnings {
            let _ = writeln!(out, "warning: {}", n);
        }
        if let Some(d) = &self.dimensions {
            let _ = writeln!(out);
            out.push_str(&table(&format!("{} ({})", d.label, d.mode), &[d.clone()]));
        }
        if !self.components.is_empty() {
            let _ = writeln!(out);
            out.push_str(&table("eigen-components", &self.components));
        }
        for c in &self.comparisons {
            let _ = writeln!(out);
            let verdict = match (c.agrees, c.binding) {
                (true, _) => "agrees",
                (false, true) => "DISAGREES",
                (false, false) => "differs (informational)",
            };
            out.push_str(&table(&format!("{}: {}", c.title, verdict), &c.rows));
            for n in &c.notes {
                let _ = writeln!(out, "  note: {}", n);
            }
        }
        if !self.representatives.is_empty() {
            let _ = writeln!(out, "\nrepresentatives");
            for b in &self.representatives {
                for (i, c) in b.classes.iter().enumerate() {
                    let _ = writeln!(out, "  degree {} #{}: {}", b.degree, i, c);
                }
            }
        }
        if !self.identities.is_empty() {
            let _ = writeln!(out, "\nidentities");
            let w = self.identities.iter().map(|i| i.name.len()).max().unwrap_or(0);
            for i in &self.identities {
                let _ = writeln!(
                    out,
                    "  {:<4}  {:<w$}  degrees {}..={}{}",
                    if i.pass { "ok" } else { "FAIL" },
                    i.name,
                    i.degrees.0,
                    i.degrees.1,
                    if i.detail.is_empty() { String::new() } else { format!("  ({})", i.detail) },
                    w = w
                );
            }
        }
        out
    }
}

fn table(title: &str, rows: &[DimensionRow]) -> String {
    let mut out = format!("{}\n", title);
    let width = rows.iter().map(|r| r.dims.len()).max().unwrap_or(0);
    let lw = rows
        .iter()
        .map(|r| r.label.len() + r.mode.len() + 3)
        .max()
        .unwrap_or(0)
        .max("degree".len());
    let cell = rows
        .iter()
        .flat_map(|r| r.dims.iter().map(|d| d.to_string().len()))
        .chain((0..width).map(|d| d.to_string().len()))
        .max()
        .unwrap_or(1);
    let _ = write!(out, "  {:<lw$}", "degree", lw = lw);
    for d in 0..width {
        let _ = write!(out, " {:>cell$}", d, cell = cell);
    }
    out.push('\n');
    for r in rows {
        let _ = write!(out, "  {:<lw$}", format!("{} [{}]", r.label, r.mode), lw = lw);
        for d in &r.dims {
            let _ = write!(out, " {:>cell$}", d, cell = cell);
        }
        out.push('\n');
    }
    out
}
