//! The shipped example spec documents.

use std::collections::BTreeMap;

use anyhow::{bail, Result};

use monogenic::algebra::fixtures;
use monogenic::algebra::FiniteGroup;
use monogenic::linalg::Scalar;

use crate::spec::{
    field_spec, group_spec, scalar_spec, AlgebraSpecDocument, BaseSpec, ElementSpec, EndomorphismSpec, ExtensionSpec,
    FieldSpec, RankOneSpec, ScalarSpec,
};

pub const EXAMPLE_NAMES: &[&str] = &["trunc:n", "sweedler", "taft:n", "rank1:c4", "rank1nc:c2xc4", "dihedral:u"];

fn text(s: &str) -> ScalarSpec {
    ScalarSpec::Text(s.to_string())
}

fn character(g: &FiniteGroup, chi: &[Scalar]) -> EndomorphismSpec {
    EndomorphismSpec::Character {
        values: g
            .labels()
            .iter()
            .zip(chi)
            .map(|(l, c)| (l.clone(), scalar_spec(c)))
            .collect(),
    }
}

fn single(label: &str) -> ElementSpec {
    let mut e = BTreeMap::new();
    e.insert(label.to_string(), text("1"));
    e
}

fn size(name: &str, arg: &str, min: usize) -> Result<usize> {
    match arg.parse::<usize>() {
        Ok(v) if v >= min => Ok(v),
        _ => bail!("example {}: expected an integer >= {}, got '{}'", name, min, arg),
    }
}

fn taft(n: usize, name: String) -> AlgebraSpecDocument {
    let (g, chi, f) = fixtures::taft_group(n);
    AlgebraSpecDocument {
        name: Some(name),
        field: field_spec(&f),
        base_algebra: group_spec(&g),
        endomorphism: character(&g, &chi),
        extension: ExtensionSpec {
            n,
            lambda: None,
            rank_one: Some(RankOneSpec {
                g1: "g".into(),
                xi: text("0"),
            }),
        },
        lambda_breve: Some(single("g")),
        bimodule: None,
    }
}

/// The spec document for a shipped example name.
pub fn example(name: &str) -> Result<AlgebraSpecDocument> {
    let (head, arg) = match name.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (name, None),
    };
    Ok(match (head, arg) {
        ("trunc", Some(a)) => {
            // n is not range-checked here so that invalid degrees reach validation
            let n = size("trunc", a, 0)?;
            AlgebraSpecDocument {
                name: Some(format!("trunc:{}", n)),
                field: FieldSpec::Rational,
                base_algebra: BaseSpec::Group {
                    labels: vec!["e".into()],
                    table: vec![vec!["e".into()]],
                },
                endomorphism: EndomorphismSpec::Identity,
                extension: ExtensionSpec {
                    n,
                    lambda: None,
                    rank_one: None,
                },
                lambda_breve: None,
                bimodule: None,
            }
        }
        ("sweedler", None) => taft(2, "sweedler".into()),
        ("taft", Some(a)) => {
            let n = size("taft", a, 2)?;
            taft(n, format!("taft:{}", n))
        }
        ("rank1", Some("c4")) => {
            let r = fixtures::rank_one_c4_full();
            AlgebraSpecDocument {
                name: Some("rank1:c4".into()),
                field: FieldSpec::Rational,
                base_algebra: group_spec(&r.group),
                endomorphism: character(&r.group, &r.character),
                extension: ExtensionSpec {
                    n: 2,
                    lambda: None,
                    rank_one: Some(RankOneSpec {
                        g1: "g".into(),
                        xi: text("1"),
                    }),
                },
                lambda_breve: Some(single("g")),
                bimodule: None,
            }
        }
        ("rank1nc", None) | ("rank1nc", Some("c2xc4")) => {
            let (g, chi, f) = fixtures::rank_one_noncentral_group();
            AlgebraSpecDocument {
                name: Some("rank1nc:c2xc4".into()),
                field: field_spec(&f),
                base_algebra: group_spec(&g),
                endomorphism: character(&g, &chi),
                extension: ExtensionSpec {
                    n: 2,
                    lambda: None,
                    rank_one: Some(RankOneSpec {
                        g1: "b".into(),
                        xi: text("1"),
                    }),
                },
                // defaults to the image of g_1 in the rewritten K
                lambda_breve: None,
                bimodule: None,
            }
        }
        ("dihedral", Some(a)) => {
            let u = size("dihedral", a, 1)?;
            let (g, chi, f) = fixtures::dihedral_group(u);
            AlgebraSpecDocument {
                name: Some(format!("dihedral:{}", u)),
                field: field_spec(&f),
                base_algebra: group_spec(&g),
                endomorphism: character(&g, &chi),
                extension: ExtensionSpec {
                    n: 2,
                    lambda: None,
                    rank_one: None,
                },
                lambda_breve: None,
                bimodule: None,
            }
        }
        _ => bail!("unknown example '{}'; known: {}", name, EXAMPLE_NAMES.join(", ")),
    })
}
