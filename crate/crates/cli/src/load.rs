//! Resolution of command-line inputs: `catalog:` names or JSON files.

use std::fs;
use std::path::Path;

use hopfsmash::catalog::{self, CatalogEntry};
use hopfsmash::formats::{
    action_from_json, automorphism_from_json, hopf_from_json, hopf_to_json, representation_from_json,
};
use hopfsmash::powers_exponents::HopfAutomorphism;
use hopfsmash::representations::Representation;
use hopfsmash::smash::{cyclic_action, HopfAction};
use hopfsmash::FiniteHopfAlgebra;

use crate::report::{InputDigest, RunReport};

/// Input or usage error; reported with exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

pub type Loaded<T> = Result<T, InputError>;

pub struct Source {
    pub algebra: FiniteHopfAlgebra,
    pub entry: Option<CatalogEntry>,
}

fn read(path: &str, report: &mut RunReport) -> Loaded<String> {
    let bytes = fs::read(path).map_err(|e| InputError(format!("{path}: {e}")))?;
    report.input(InputDigest::of(path, &bytes));
    String::from_utf8(bytes).map_err(|e| InputError(format!("{path}: {e}")))
}

fn is_file(spec: &str) -> bool {
    Path::new(spec).is_file()
}

/// Loads an algebra without checking the axioms.
pub fn algebra_unchecked(spec: &str, report: &mut RunReport) -> Loaded<Source> {
    if spec.starts_with("catalog:") {
        let entry = catalog::lookup(spec)?;
        report.input(InputDigest::of(spec, hopf_to_json(&entry.algebra).as_bytes()));
        return Ok(Source {
            algebra: entry.algebra.clone(),
            entry: Some(entry),
        });
    }
    let text = read(spec, report)?;
    let algebra = hopf_from_json(&text).map_err(|e| InputError(format!("{spec}: {e}")))?;
    Ok(Source { algebra, entry: None })
}

/// Loads an algebra and rejects it unless every axiom holds.
pub fn algebra(spec: &str, report: &mut RunReport) -> Loaded<Source> {
    let mut source = algebra_unchecked(spec, report)?;
    if source.entry.is_none() {
        source.algebra = source.algebra.validated()?;
    }
    Ok(source)
}

/// An automorphism file, a catalog automorphism name, or the identity.
pub fn automorphism(source: &Source, spec: Option<&str>, report: &mut RunReport) -> Loaded<HopfAutomorphism> {
    let Some(spec) = spec else {
        return Ok(HopfAutomorphism::identity(&source.algebra));
    };
    if is_file(spec) {
        let text = read(spec, report)?;
        return automorphism_from_json(&text, &source.algebra).map_err(|e| InputError(format!("{spec}: {e}")));
    }
    match &source.entry {
        Some(entry) => Ok(catalog::resolve_automorphism(entry, spec)?),
        None if spec == "id" => Ok(HopfAutomorphism::identity(&source.algebra)),
        None => Err(InputError(format!("{spec}: no such file"))),
    }
}

/// A representation file or a catalog representation name.
pub fn representation(source: &Source, spec: &str, report: &mut RunReport) -> Loaded<Representation> {
    if is_file(spec) {
        let text = read(spec, report)?;
        return representation_from_json(&text, &source.algebra).map_err(|e| InputError(format!("{spec}: {e}")));
    }
    let named = source.entry.as_ref().and_then(|e| e.representation(spec));
    match (named, &source.entry) {
        (Some(rep), _) => Ok(rep.clone()),
        (None, Some(entry)) => Err(InputError(format!("{} has no representation named {spec}", entry.name))),
        (None, None) => Err(InputError(format!("{spec}: no such file"))),
    }
}

/// An action file, or an automorphism generating a cyclic group action.
pub fn action(source: &Source, spec: &str, report: &mut RunReport) -> Loaded<HopfAction> {
    if is_file(spec) {
        let text = read(spec, report)?;
        let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| InputError(format!("{spec}: {e}")))?;
        if value.get("group").is_some() {
            return action_from_json(&text, &source.algebra).map_err(|e| InputError(format!("{spec}: {e}")));
        }
    }
    let tau = automorphism(source, Some(spec), report)?;
    Ok(cyclic_action(&source.algebra, &tau)?)
}
