//! Built-in molecules: benzene, naphthalene, anthracene and phenanthrene
//! with experimentally derived relative bond strength orders and their
//! point-group equivalence classes.

use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{EquivalenceClasses, MoleculeGraph};
use crate::molfile;

const SOURCES: [(&str, &str); 4] = [
    ("benzene", include_str!("catalog/benzene.toml")),
    ("naphthalene", include_str!("catalog/naphthalene.toml")),
    ("anthracene", include_str!("catalog/anthracene.toml")),
    ("phenanthrene", include_str!("catalog/phenanthrene.toml")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    SOURCES.iter().map(|&(n, _)| n)
}

pub fn is_catalog(name: &str) -> bool {
    SOURCES.iter().any(|&(n, _)| n.eq_ignore_ascii_case(name))
}

pub fn catalog_molecule(name: &str) -> Result<MoleculeGraph> {
    let (_, src) = SOURCES
        .iter()
        .find(|&&(n, _)| n.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownMolecule(name.to_string()))?;
    molfile::parse_molecule(src)
}

/// Resolves a catalog name, or failing that, a path to a molecule file.
pub fn load_molecule(name_or_path: &str) -> Result<MoleculeGraph> {
    if is_catalog(name_or_path) {
        return catalog_molecule(name_or_path);
    }
    let path = Path::new(name_or_path);
    if path.is_file() {
        molfile::read_molecule(path)
    } else {
        Err(Error::UnknownMolecule(name_or_path.to_string()))
    }
}

pub fn equivalence_classes(name: &str) -> Result<EquivalenceClasses> {
    Ok(catalog_molecule(name)?.classes().clone())
}

pub fn all() -> Vec<MoleculeGraph> {
    names()
        .map(|n| catalog_molecule(n).expect("built-in catalog parses"))
        .collect()
}
