//! JSON file formats. Scalars are stored as canonical scalar literals;
//! omitted sparse entries are zero.
//!
//! Sparse matrices use `{i, j, c}` for row i, column j, so for the antipode
//! `S(b_j) = Σ_i c b_i`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{HopfError, Result};
use crate::exact_math::{parse_scalar, FieldSpec, Matrix, Scalar, Vector};
use crate::hopf_core::{FiniteHopfAlgebra, TensorEntry};
use crate::powers_exponents::{verify_automorphism, HopfAutomorphism};
use crate::representations::{verify_representation, Representation};
use crate::smash::{verify_action, GroupTable, HopfAction};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub cyclotomic_order: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry3 {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry2 {
    pub i: usize,
    pub j: usize,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfFile {
    pub name: String,
    pub field: FieldJson,
    pub dimension: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub counit: Vec<String>,
    #[serde(default)]
    pub mult: Vec<Entry3>,
    #[serde(default)]
    pub comult: Vec<Entry3>,
    #[serde(default)]
    pub antipode: Vec<Entry2>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismFile {
    pub algebra: String,
    pub matrix: Vec<Entry2>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionFile {
    pub algebra: String,
    pub group: GroupJson,
    pub matrices: BTreeMap<String, Vec<Entry2>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationFile {
    pub algebra: String,
    pub rank: usize,
    pub matrices: Vec<Vec<Entry2>>,
}

fn format_err(e: impl std::fmt::Display) -> HopfError {
    HopfError::Format(e.to_string())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(format_err)
}

fn scalars(items: &[String], field: &FieldSpec) -> Result<Vector> {
    items.iter().map(|s| parse_scalar(s, field)).collect()
}

fn sparse(m: &Matrix) -> Vec<Entry2> {
    m.entries()
        .filter(|(_, _, c)| !c.is_zero())
        .map(|(i, j, c)| Entry2 { i, j, c: c.to_string() })
        .collect()
}

fn dense(entries: &[Entry2], field: &FieldSpec, rows: usize, cols: usize) -> Result<Matrix> {
    let mut m = Matrix::zeros(field, rows, cols);
    for e in entries {
        if e.i >= rows || e.j >= cols {
            return Err(HopfError::IndexOutOfRange {
                index: e.i.max(e.j),
                dim: rows.max(cols),
            });
        }
        let c: Scalar = parse_scalar(&e.c, field)?;
        m.add_at(e.i, e.j, &c);
    }
    Ok(m)
}

fn entries3(entries: Vec<TensorEntry>) -> Vec<Entry3> {
    entries
        .into_iter()
        .map(|e| Entry3 {
            i: e.i,
            j: e.j,
            k: e.k,
            c: e.c.to_string(),
        })
        .collect()
}

pub fn hopf_to_file(h: &FiniteHopfAlgebra) -> HopfFile {
    let lits = |v: &[Scalar]| v.iter().map(Scalar::to_string).collect();
    HopfFile {
        name: h.name().to_string(),
        field: FieldJson {
            cyclotomic_order: i64::from(h.field().order()),
        },
        dimension: h.dim(),
        basis: h.labels().to_vec(),
        unit: lits(h.unit()),
        counit: lits(h.counit()),
        mult: entries3(h.mult_entries()),
        comult: entries3(h.comult_entries()),
        antipode: sparse(h.antipode()),
    }
}

pub fn hopf_to_json(h: &FiniteHopfAlgebra) -> String {
    to_json(&hopf_to_file(h))
}

/// Parses an algebra without checking the Hopf axioms.
pub fn hopf_from_file(file: &HopfFile) -> Result<FiniteHopfAlgebra> {
    let field = FieldSpec::new(file.field.cyclotomic_order)?;
    let d = file.dimension;
    if file.basis.len() != d {
        return Err(HopfError::DimensionMismatch(format!(
            "{} basis labels for dimension {d}",
            file.basis.len()
        )));
    }
    let tensor = |entries: &[Entry3]| -> Result<Vec<TensorEntry>> {
        entries
            .iter()
            .map(|e| Ok(TensorEntry::new(e.i, e.j, e.k, parse_scalar(&e.c, &field)?)))
            .collect()
    };
    FiniteHopfAlgebra::new(
        file.name.clone(),
        &field,
        file.basis.clone(),
        tensor(&file.mult)?,
        tensor(&file.comult)?,
        scalars(&file.unit, &field)?,
        scalars(&file.counit, &field)?,
        dense(&file.antipode, &field, d, d)?,
    )
}

pub fn hopf_from_json(text: &str) -> Result<FiniteHopfAlgebra> {
    hopf_from_file(&from_json(text)?)
}

pub fn automorphism_to_json(algebra: &str, aut: &HopfAutomorphism) -> String {
    to_json(&AutomorphismFile {
        algebra: algebra.to_string(),
        matrix: sparse(aut.matrix()),
    })
}

/// Parses and verifies an automorphism of `h`.
pub fn automorphism_from_json(text: &str, h: &FiniteHopfAlgebra) -> Result<HopfAutomorphism> {
    let file: AutomorphismFile = from_json(text)?;
    let m = dense(&file.matrix, h.field(), h.dim(), h.dim())?;
    verify_automorphism(h, &m)
}

pub fn action_to_json(algebra: &str, action: &HopfAction) -> String {
    let g = action.group();
    to_json(&ActionFile {
        algebra: algebra.to_string(),
        group: GroupJson {
            order: g.order(),
            table: g.table().to_vec(),
            identity: g.identity(),
        },
        matrices: (0..g.order())
            .map(|x| (x.to_string(), sparse(action.aut(x).matrix())))
            .collect(),
    })
}

/// Parses and verifies a group action on `h`.
pub fn action_from_json(text: &str, h: &FiniteHopfAlgebra) -> Result<HopfAction> {
    let file: ActionFile = from_json(text)?;
    if file.group.table.len() != file.group.order {
        return Err(HopfError::InvalidGroup(format!(
            "order {} but table has {} rows",
            file.group.order,
            file.group.table.len()
        )));
    }
    let group = GroupTable::new(file.group.table, file.group.identity)?;
    let mut matrices = Vec::with_capacity(group.order());
    for x in 0..group.order() {
        let entries = file.matrices.get(&x.to_string()).ok_or_else(|| {
            HopfError::InvalidAction(format!("no matrix for group element {x}"))
        })?;
        matrices.push(dense(entries, h.field(), h.dim(), h.dim())?);
    }
    verify_action(h, &group, &matrices)
}

pub fn representation_to_json(algebra: &str, rep: &Representation) -> String {
    to_json(&RepresentationFile {
        algebra: algebra.to_string(),
        rank: rep.rank(),
        matrices: rep.matrices().iter().map(sparse).collect(),
    })
}

/// Parses and verifies a representation of `h`.
pub fn representation_from_json(text: &str, h: &FiniteHopfAlgebra) -> Result<Representation> {
    let file: RepresentationFile = from_json(text)?;
    let matrices = file
        .matrices
        .iter()
        .map(|m| dense(m, h.field(), file.rank, file.rank))
        .collect::<Result<Vec<_>>>()?;
    verify_representation(h, matrices)
}
