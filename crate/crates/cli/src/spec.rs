//! Algebra spec files: the JSON document, its parsing into validated core
//! objects, and the hypothesis summary attached to every report.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use monogenic::algebra::{
    character_endomorphism, check_collapse, eigen_split, group_algebra_of, rank_one_extension, validate_monogenic,
    verify_lambda_breve, AlgebraEndomorphism, BaseAlgebra, BimoduleData, FiniteGroup, MonogenicData, RankOneCase,
    RankOneExtension,
};
use monogenic::linalg::{FieldDescriptor, FieldKind, Matrix, Scalar};

/// A scalar: `"p/q"` text, or coefficients of `1, zeta, zeta^2, ...` in a cyclotomic field.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarSpec {
    Text(String),
    Coefficients(Vec<String>),
}

/// An element of `K` as `label -> coefficient`; absent labels are zero.
pub type ElementSpec = BTreeMap<String, ScalarSpec>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FieldSpec {
    Rational,
    Cyclotomic { order: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum BaseSpec {
    /// Group algebra of a group given by its multiplication table (`table[a][b] = a b`).
    Group { labels: Vec<String>, table: Vec<Vec<String>> },
    /// `products[i][j] = e_i e_j`.
    StructureConstants {
        labels: Vec<String>,
        unit: ElementSpec,
        products: Vec<Vec<ElementSpec>>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum EndomorphismSpec {
    Identity,
    /// `alpha(g) = chi(g) g` on a group basis.
    Character { values: BTreeMap<String, ScalarSpec> },
    /// Row-major matrix; column `j` is `alpha(e_j)`.
    Matrix { rows: Vec<Vec<ScalarSpec>> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankOneSpec {
    pub g1: String,
    pub xi: ScalarSpec,
}

/// `f = x^n + lambda_1 x^{n-1} + ... + lambda_n`; with `rank_one`, `f = x^n - xi (g_1^n - 1)`.
/// Omitting both gives `f = x^n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionSpec {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<ElementSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank_one: Option<RankOneSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum BimoduleSpec {
    Regular,
    /// Action matrices (row-major) on a module of dimension `labels.len()`.
    Matrices {
        labels: Vec<String>,
        left_k: Vec<Vec<Vec<ScalarSpec>>>,
        left_x: Vec<Vec<ScalarSpec>>,
        right_k: Vec<Vec<Vec<ScalarSpec>>>,
        right_x: Vec<Vec<ScalarSpec>>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpecDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: FieldSpec,
    pub base_algebra: BaseSpec,
    pub endomorphism: EndomorphismSpec,
    pub extension: ExtensionSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_breve: Option<ElementSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bimodule: Option<BimoduleSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaBreveSummary {
    /// `"spec"` or `"g_1"` when defaulted from the rank-one data.
    pub source: String,
    pub element: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisSummary {
    /// `[K,K]_{alpha^j} = K` for every `j` not divisible by `n`.
    pub collapse: bool,
    /// Largest `j` tested; exhaustive when `alpha` has finite order.
    pub collapse_checked_to: usize,
    pub collapse_failures: Vec<String>,
    pub lambda_breve: Option<LambdaBreveSummary>,
    pub alpha_identity: bool,
    pub diagonalizable: bool,
    pub eigenvalues: Vec<String>,
    pub alpha_order: Option<usize>,
    pub alpha_n_order: Option<usize>,
    /// Rank-one case: `xi = 0`, `chi^n = id` or the quotient rewrite.
    pub chi_n_case: Option<String>,
}

#[derive(Clone, Debug)]
pub struct ParsedSpec {
    pub name: Option<String>,
    pub algebra: MonogenicData,
    pub rank_one: Option<RankOneExtension>,
    pub bimodule: Option<BimoduleData>,
    pub hypotheses: HypothesisSummary,
    pub notes: Vec<String>,
    /// `u` when the algebra is the dihedral extension in its standard presentation.
    pub dihedral: Option<usize>,
}

impl ParsedSpec {
    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| "(unnamed)".into())
    }
}

fn scalar(f: &FieldDescriptor, s: &ScalarSpec, at: &str) -> Result<Scalar> {
    let r = match s {
        ScalarSpec::Text(t) => f.parse_rational(t),
        ScalarSpec::Coefficients(cs) => f.parse_coefficients(cs),
    };
    r.map_err(|e| anyhow!("{}: {}", at, e))
}

fn element(f: &FieldDescriptor, labels: &[String], e: &ElementSpec, at: &str) -> Result<Vec<Scalar>> {
    let mut v = vec![f.zero(); labels.len()];
    for (label, c) in e {
        let i = labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| anyhow!("{}: unknown basis label '{}'", at, label))?;
        v[i] = scalar(f, c, &format!("{}.{}", at, label))?;
    }
    Ok(v)
}

fn matrix(f: &FieldDescriptor, rows: &[Vec<ScalarSpec>], dim: usize, at: &str) -> Result<Matrix> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        bail!("{}: expected a {}x{} matrix", at, dim, dim);
    }
    let mut m = Matrix::zeros(f, dim, dim);
    for (i, row) in rows.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            m.set(i, j, scalar(f, c, &format!("{}[{}][{}]", at, i, j))?);
        }
    }
    Ok(m)
}

/// Parses a JSON document; syntax errors carry line and column.
pub fn parse_document(text: &str) -> Result<AlgebraSpecDocument> {
    serde_json::from_str(text).map_err(|e| anyhow!("spec parse error at line {}, column {}: {}", e.line(), e.column(), e))
}

pub fn load(path: &str) -> Result<ParsedSpec> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path))?;
    parse_spec(&parse_document(&text)?)
}

/// Validates a document into core objects and runs every hypothesis check.
pub fn parse_spec(doc: &AlgebraSpecDocument) -> Result<ParsedSpec> {
    let f = match doc.field {
        FieldSpec::Rational => FieldDescriptor::rationals(),
        FieldSpec::Cyclotomic { order } => {
            if order == 0 {
                bail!("field.order: must be positive");
            }
            FieldDescriptor::cyclotomic(order)
        }
    };
    let (base, group) = match &doc.base_algebra {
        BaseSpec::Group { labels, table } => {
            let g = FiniteGroup::from_table(labels.clone(), table).map_err(|e| anyhow!("base_algebra.table: {}", e))?;
            (group_algebra_of(&g, &f), Some(g))
        }
        BaseSpec::StructureConstants { labels, unit, products } => {
            let unit_v = element(&f, labels, unit, "base_algebra.unit")?;
            if products.len() != labels.len() {
                bail!("base_algebra.products: expected {} rows", labels.len());
            }
            let mut consts = Vec::new();
            for (i, row) in products.iter().enumerate() {
                if row.len() != labels.len() {
                    bail!("base_algebra.products[{}]: expected {} entries", i, labels.len());
                }
                let mut r = Vec::new();
                for (j, e) in row.iter().enumerate() {
                    r.push(element(&f, labels, e, &format!("base_algebra.products[{}][{}]", i, j))?);
                }
                consts.push(r);
            }
            let k = BaseAlgebra::from_structure_constants(&f, labels.clone(), consts, unit_v)
                .map_err(|e| anyhow!("base_algebra: {}", e))?;
            (k, None)
        }
    };
    let labels = base.labels().to_vec();
    let chi = match &doc.endomorphism {
        EndomorphismSpec::Character { values } => {
            if group.is_none() {
                bail!("endomorphism: a character needs a group base algebra");
            }
            let mut chi = Vec::new();
            for l in &labels {
                let c = values
                    .get(l)
                    .ok_or_else(|| anyhow!("endomorphism.values: missing value for '{}'", l))?;
                chi.push(scalar(&f, c, &format!("endomorphism.values.{}", l))?);
            }
            for k in values.keys() {
                if !labels.contains(k) {
                    bail!("endomorphism.values: unknown group element '{}'", k);
                }
            }
            Some(chi)
        }
        _ => None,
    };
    let alpha = match &doc.endomorphism {
        EndomorphismSpec::Identity => AlgebraEndomorphism::identity(&base),
        EndomorphismSpec::Character { .. } => {
            character_endomorphism(&base, chi.as_ref().unwrap()).map_err(|e| anyhow!("endomorphism: {}", e))?
        }
        EndomorphismSpec::Matrix { rows } => {
            let m = matrix(&f, rows, base.dim(), "endomorphism.rows")?;
            AlgebraEndomorphism::new(&base, m).map_err(|e| anyhow!("endomorphism: {}", e))?
        }
    };

    let ext = &doc.extension;
    if ext.n < 2 {
        bail!(
            "extension.n: degree n = {} but a monic polynomial of degree n >= 2 is required",
            ext.n
        );
    }
    let mut notes = Vec::new();
    let (algebra, rank_one) = match (&ext.lambda, &ext.rank_one) {
        (Some(_), Some(_)) => bail!("extension: give either lambda or rank_one, not both"),
        (_, Some(ro)) => {
            let (g, chi) = match (&group, &chi) {
                (Some(g), Some(c)) => (g, c),
                _ => bail!("extension.rank_one: needs a group base algebra and a character"),
            };
            let g1 = g
                .index_of(&ro.g1)
                .ok_or_else(|| anyhow!("extension.rank_one.g1: unknown group element '{}'", ro.g1))?;
            let xi = scalar(&f, &ro.xi, "extension.rank_one.xi")?;
            let r = rank_one_extension(&f, g, chi, g1, ext.n, &xi).map_err(|e| anyhow!("extension: {}", e))?;
            if let Some(n) = &r.note {
                notes.push(n.clone());
            }
            (r.data.clone(), Some(r))
        }
        (lambda, None) => {
            let lambdas = match lambda {
                Some(ls) => {
                    if ls.len() != ext.n {
                        bail!("extension.lambda: expected {} coefficients lambda_1..lambda_n, got {}", ext.n, ls.len());
                    }
                    ls.iter()
                        .enumerate()
                        .map(|(i, e)| element(&f, &labels, e, &format!("extension.lambda[{}]", i)))
                        .collect::<Result<Vec<_>>>()?
                }
                None => vec![base.zero(); ext.n],
            };
            let a = validate_monogenic(base.clone(), alpha, ext.n, lambdas).map_err(|e| anyhow!("extension: {}", e))?;
            (a, None)
        }
    };

    let bimodule = match &doc.bimodule {
        None | Some(BimoduleSpec::Regular) => None,
        Some(BimoduleSpec::Matrices {
            labels: ml,
            left_k,
            left_x,
            right_k,
            right_x,
        }) => {
            let d = ml.len();
            let mats = |ms: &[Vec<Vec<ScalarSpec>>], at: &str| -> Result<Vec<Matrix>> {
                ms.iter()
                    .enumerate()
                    .map(|(i, m)| matrix(&f, m, d, &format!("{}[{}]", at, i)))
                    .collect()
            };
            let m = BimoduleData::new(
                &algebra,
                mats(left_k, "bimodule.left_k")?,
                matrix(&f, left_x, d, "bimodule.left_x")?,
                mats(right_k, "bimodule.right_k")?,
                matrix(&f, right_x, d, "bimodule.right_x")?,
                Some(ml.clone()),
            )
            .map_err(|e| anyhow!("bimodule: {}", e))?;
            Some(m)
        }
    };

    let final_labels = algebra.base().labels().to_vec();
    let lambda_breve = match (&doc.lambda_breve, &rank_one) {
        (Some(e), _) => Some(("spec".to_string(), element(&f, &final_labels, e, "lambda_breve")?)),
        (None, Some(r)) => {
            let g = group.as_ref().unwrap();
            let g1 = g.index_of(&doc.extension.rank_one.as_ref().unwrap().g1).unwrap();
            let image = if r.case == RankOneCase::Quotient {
                let (_, coset) = g.quotient_by_central(g.pow(g1, ext.n)).map_err(|e| anyhow!("{}", e))?;
                coset[g1]
            } else {
                g1
            };
            Some(("g_1".to_string(), algebra.base().basis(image)))
        }
        _ => None,
    };
    let hypotheses = summarize(&algebra, rank_one.as_ref(), lambda_breve);
    let dihedral = detect_dihedral(&algebra, group.as_ref(), chi.as_deref());
    Ok(ParsedSpec {
        name: doc.name.clone(),
        algebra,
        rank_one,
        bimodule,
        hypotheses,
        notes,
        dihedral,
    })
}

fn summarize(a: &MonogenicData, rank_one: Option<&RankOneExtension>, lambda_breve: Option<(String, Vec<Scalar>)>) -> HypothesisSummary {
    let n = a.n();
    // twisted commutators depend on (j mod order(alpha), j mod n)
    let max_j = a.alpha_order().map_or(8 * n, |v| v * n);
    let collapse = check_collapse(a, max_j);
    let collapse_failures = collapse
        .entries
        .iter()
        .filter(|(_, c)| *c > 0)
        .map(|(j, c)| format!("dim K/[K,K]_alpha^{} = {}", j, c))
        .collect();
    let lb = lambda_breve.map(|(source, v)| {
        let c = verify_lambda_breve(a, &v);
        LambdaBreveSummary {
            source,
            element: a.base().format(&v),
            holds: c.holds,
            failure: c.failure,
        }
    });
    let (diagonalizable, eigenvalues) = match eigen_split(a.base(), a.alpha()) {
        Ok(cs) => (true, cs.iter().map(|c| c.value.to_string()).collect()),
        Err(_) => (false, Vec::new()),
    };
    HypothesisSummary {
        collapse: collapse.holds,
        collapse_checked_to: max_j,
        collapse_failures,
        lambda_breve: lb,
        alpha_identity: a.alpha().is_identity(),
        diagonalizable,
        eigenvalues,
        alpha_order: a.alpha_order(),
        alpha_n_order: a.alpha_n_order(),
        chi_n_case: rank_one.map(|r| {
            match r.case {
                RankOneCase::XiZero => "xi = 0",
                RankOneCase::ChiPowerTrivial => "xi != 0, chi^n = id",
                RankOneCase::Quotient => "xi != 0, chi^n != id (rewritten over k[G/<g_1^n>])",
            }
            .to_string()
        }),
    }
}

/// Recognizes `Q[D_{2u}]` with `chi(g^j h^l) = (-1)^l` and `f = x^2` in the
/// presentation produced by `example dihedral:u`.
fn detect_dihedral(a: &MonogenicData, group: Option<&FiniteGroup>, chi: Option<&[Scalar]>) -> Option<usize> {
    let (g, chi) = (group?, chi?);
    if g.order() % 2 != 0 || g.order() < 2 || a.n() != 2 || a.field().kind() != FieldKind::Rationals {
        return None;
    }
    if a.lambdas().iter().any(|l| l.iter().any(|c| !c.is_zero())) {
        return None;
    }
    let u = g.order() / 2;
    let d = FiniteGroup::dihedral(u);
    if d.labels() != g.labels() || d.table() != g.table() {
        return None;
    }
    let f = a.field();
    let ok = chi
        .iter()
        .enumerate()
        .all(|(i, c)| *c == f.from_i64(if i >= u { -1 } else { 1 }));
    ok.then_some(u)
}

pub fn scalar_spec(s: &Scalar) -> ScalarSpec {
    match s.as_rational() {
        Some(q) => ScalarSpec::Text(q.to_string()),
        None => ScalarSpec::Coefficients(s.coeffs().iter().map(|c| c.to_string()).collect()),
    }
}

pub fn group_spec(g: &FiniteGroup) -> BaseSpec {
    BaseSpec::Group {
        labels: g.labels().to_vec(),
        table: g
            .table()
            .iter()
            .map(|row| row.iter().map(|&c| g.label(c).to_string()).collect())
            .collect(),
    }
}

pub fn field_spec(f: &FieldDescriptor) -> FieldSpec {
    match f.kind() {
        FieldKind::Rationals => FieldSpec::Rational,
        FieldKind::Cyclotomic => FieldSpec::Cyclotomic { order: f.order() },
    }
}
