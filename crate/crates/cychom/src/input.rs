//! TOML input formats for algebras and actions.
//!
//! Two file kinds, discriminated by a top-level `kind` key:
//!
//! ```toml
//! # kind = "algebra" — explicit structure constants.
//! kind = "algebra"
//! name = "dual-numbers"            # optional
//! labels = ["1", "x"]
//! unit = ["1", "0"]                # fractions as strings
//! structure = [                    # e_i · e_j = Σ coeff · e_k
//!     [0, 0, 0, "1"],
//!     [0, 1, 1, "1"],
//!     [1, 0, 1, "1"],
//! ]
//! ```
//!
//! ```toml
//! # kind = "group_algebra" — shorthand for a product of cyclic groups.
//! kind = "group_algebra"
//! orders = [2]
//! ```
//!
//! ```toml
//! # kind = "action" — a Hopf algebra acting on an algebra.
//! kind = "action"
//! mode = "verbatim"                # or "diagonal"
//! trace = ["1", "1"]               # optional default trace
//!
//! [hopf]
//! orders = [2]                     # group Hopf shorthand, or the full
//!                                  # presentation (labels/structure/unit/
//!                                  # comult/counit/antipode)
//!
//! [algebra]
//! labels = ["(1,0)", "(0,1)"]
//! unit = ["1", "1"]
//! structure = [[0, 0, 0, "1"], [1, 1, 1, "1"]]
//!
//! [action]
//! matrix = [                       # dim A rows × (dim H · dim A) columns;
//!     ["1", "0", "0", "1"],        # column h·dimA + a holds h ▷ e_a
//!     ["0", "1", "1", "0"],
//! ]
//! ```
//!
//! All numeric entries are exact fractions written as strings (`"1"`,
//! `"-2/3"`). Every loaded object passes the same validation as the
//! programmatic constructors.

use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use crate::module::{AlgebraPresentation, CoalgebraPresentation, ModuleError};
use crate::pairing::{EquivarianceMode, EquivariantAction, HopfAlgebraPresentation, PairingError};
use crate::qmat::{parse_q, QMat};
use crate::Q;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("TOML parse error: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("invalid fraction {text:?}: {message}")]
    Fraction { text: String, message: String },
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Pairing(#[from] PairingError),
}

fn fraction(text: &str) -> Result<Q, InputError> {
    parse_q(text).map_err(|message| InputError::Fraction {
        text: text.to_string(),
        message,
    })
}

fn vector(texts: &[String]) -> Result<Vec<Q>, InputError> {
    texts.iter().map(|t| fraction(t)).collect()
}

fn matrix(rows: &[Vec<String>], what: &str) -> Result<QMat, InputError> {
    if rows.is_empty() {
        return Err(InputError::Invalid(format!("{what}: no rows")));
    }
    let cols = rows[0].len();
    if rows.iter().any(|r| r.len() != cols) {
        return Err(InputError::Invalid(format!("{what}: ragged rows")));
    }
    let mut entries = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            entries.push((i, j, fraction(cell)?));
        }
    }
    Ok(QMat::from_triplets(rows.len(), cols, entries))
}

// ---------------------------------------------------------------------------
// Serde shapes.
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum InputDoc {
    Algebra(AlgebraDoc),
    GroupAlgebra(GroupAlgebraDoc),
    Action(Box<ActionDoc>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc {
    #[serde(default)]
    name: Option<String>,
    labels: Vec<String>,
    unit: Vec<String>,
    structure: Vec<(usize, usize, usize, String)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupAlgebraDoc {
    #[serde(default)]
    name: Option<String>,
    orders: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ActionDoc {
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    mode: Option<String>,
    #[serde(default)]
    trace: Option<Vec<String>>,
    hopf: HopfDoc,
    algebra: AlgebraTableDoc,
    action: ActionMatrixDoc,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ActionMatrixDoc {
    matrix: Vec<Vec<String>>,
}

/// Either the group shorthand or a full presentation.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HopfDoc {
    #[serde(default)]
    orders: Option<Vec<usize>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
    #[serde(default)]
    unit: Option<Vec<String>>,
    #[serde(default)]
    structure: Option<Vec<(usize, usize, usize, String)>>,
    #[serde(default)]
    comult: Option<Vec<Vec<String>>>,
    #[serde(default)]
    counit: Option<Vec<String>>,
    #[serde(default)]
    antipode: Option<Vec<Vec<String>>>,
}

/// An algebra given inline: either explicit structure or group shorthand.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraTableDoc {
    #[serde(default)]
    orders: Option<Vec<usize>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
    #[serde(default)]
    unit: Option<Vec<String>>,
    #[serde(default)]
    structure: Option<Vec<(usize, usize, usize, String)>>,
}

// ---------------------------------------------------------------------------
// Builders.
// ---------------------------------------------------------------------------

fn build_algebra(doc: &AlgebraDoc) -> Result<AlgebraPresentation, InputError> {
    let mut triples = Vec::with_capacity(doc.structure.len());
    for (i, j, k, coeff) in &doc.structure {
        triples.push((*i, *j, *k, fraction(coeff)?));
    }
    Ok(AlgebraPresentation::new(
        doc.labels.clone(),
        &triples,
        vector(&doc.unit)?,
    )?)
}

fn build_algebra_table(doc: &AlgebraTableDoc) -> Result<AlgebraPresentation, InputError> {
    match (&doc.orders, &doc.labels, &doc.unit, &doc.structure) {
        (Some(orders), None, None, None) => Ok(AlgebraPresentation::group_algebra(orders)),
        (None, Some(labels), Some(unit), Some(structure)) => build_algebra(&AlgebraDoc {
            name: None,
            labels: labels.clone(),
            unit: unit.clone(),
            structure: structure.clone(),
        }),
        _ => Err(InputError::Invalid(
            "algebra table needs either `orders` or all of `labels`, `unit`, `structure`".into(),
        )),
    }
}

fn build_hopf(doc: &HopfDoc) -> Result<HopfAlgebraPresentation, InputError> {
    if let Some(orders) = &doc.orders {
        if doc.labels.is_some()
            || doc.unit.is_some()
            || doc.structure.is_some()
            || doc.comult.is_some()
            || doc.counit.is_some()
            || doc.antipode.is_some()
        {
            return Err(InputError::Invalid(
                "hopf table: `orders` shorthand excludes the explicit fields".into(),
            ));
        }
        return Ok(HopfAlgebraPresentation::group_hopf(orders));
    }
    let (labels, unit, structure, comult, counit, antipode) = match (
        &doc.labels,
        &doc.unit,
        &doc.structure,
        &doc.comult,
        &doc.counit,
        &doc.antipode,
    ) {
        (Some(l), Some(u), Some(s), Some(cm), Some(cu), Some(a)) => (l, u, s, cm, cu, a),
        _ => {
            return Err(InputError::Invalid(
                "hopf table needs `orders` or all of `labels`, `unit`, `structure`, \
                 `comult`, `counit`, `antipode`"
                    .into(),
            ))
        }
    };
    let algebra = build_algebra(&AlgebraDoc {
        name: None,
        labels: labels.clone(),
        unit: unit.clone(),
        structure: structure.clone(),
    })?;
    let comult = matrix(comult, "comult")?;
    let counit_row = QMat::from_fn(1, counit.len(), {
        let parsed = vector(counit)?;
        move |_, j| parsed[j].clone()
    });
    let coalgebra = CoalgebraPresentation::new(labels.clone(), comult, counit_row)?;
    let antipode = matrix(antipode, "antipode")?;
    Ok(HopfAlgebraPresentation::new(algebra, coalgebra, antipode)?)
}

/// A loaded action file: the validated equivariant action plus the
/// optional default trace.
pub struct ActionInput {
    pub name: Option<String>,
    pub action: EquivariantAction,
    pub trace: Option<Vec<Q>>,
}

fn build_action(doc: &ActionDoc) -> Result<ActionInput, InputError> {
    let mode = match doc.mode.as_deref() {
        None | Some("verbatim") => EquivarianceMode::Verbatim,
        Some("diagonal") => EquivarianceMode::Diagonal,
        Some(other) => {
            return Err(InputError::Invalid(format!(
                "unknown mode {other:?} (expected \"verbatim\" or \"diagonal\")"
            )))
        }
    };
    let hopf = build_hopf(&doc.hopf)?;
    let algebra = build_algebra_table(&doc.algebra)?;
    let act = matrix(&doc.action.matrix, "action matrix")?;
    let action = EquivariantAction::new(hopf, algebra, act, mode)?;
    let trace = match &doc.trace {
        Some(t) => {
            let t = vector(t)?;
            if t.len() != action.measuring().algebra().dim() {
                return Err(InputError::Invalid(format!(
                    "trace length {} does not match algebra dimension {}",
                    t.len(),
                    action.measuring().algebra().dim()
                )));
            }
            Some(t)
        }
        None => None,
    };
    Ok(ActionInput {
        name: doc.name.clone(),
        action,
        trace,
    })
}

// ---------------------------------------------------------------------------
// Entry points.
// ---------------------------------------------------------------------------

/// A loaded algebra file: the validated presentation plus its optional
/// display name.
pub struct AlgebraInput {
    pub name: Option<String>,
    pub algebra: AlgebraPresentation,
}

/// Parses an algebra from TOML text (`kind = "algebra"` or
/// `kind = "group_algebra"`).
pub fn parse_algebra_str(text: &str) -> Result<AlgebraInput, InputError> {
    match toml::from_str::<InputDoc>(text)? {
        InputDoc::Algebra(doc) => Ok(AlgebraInput {
            name: doc.name.clone(),
            algebra: build_algebra(&doc)?,
        }),
        InputDoc::GroupAlgebra(doc) => Ok(AlgebraInput {
            name: doc.name,
            algebra: AlgebraPresentation::group_algebra(&doc.orders),
        }),
        InputDoc::Action(_) => Err(InputError::Invalid(
            "this is an action file; an algebra file was expected".into(),
        )),
    }
}

/// Parses an action from TOML text (`kind = "action"`).
pub fn parse_action_str(text: &str) -> Result<ActionInput, InputError> {
    match toml::from_str::<InputDoc>(text)? {
        InputDoc::Action(doc) => build_action(&doc),
        _ => Err(InputError::Invalid(
            "this is an algebra file; an action file was expected".into(),
        )),
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Loads an algebra file.
pub fn load_algebra(path: &Path) -> Result<AlgebraInput, InputError> {
    parse_algebra_str(&read(path)?)
}

/// Loads an action file.
pub fn load_action(path: &Path) -> Result<ActionInput, InputError> {
    parse_action_str(&read(path)?)
}
