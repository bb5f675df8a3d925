//! TOML molecule and matrix files.
//!
//! A molecule file:
//!
//! ```toml
//! name = "ethylene-dimer"
//! nodes = 4
//! edges = [[1, 2, 1.9], [2, 3, 1.1], [3, 4, 1.9]]
//! classes = [[1, 4], [2, 3]]          # optional
//! labels = ["Ca", "Cb", "Cc", "Cd"]   # optional
//! ```
//!
//! Indices are 1-based. Weights may be written as integers or decimals.
//!
//! A matrix file for the bond-order tools holds square row-list matrices
//! `f`, and optionally `g`, `d` and the eigenvalue list `lambda`.

use std::path::Path;

use nalgebra::{DMatrix, DVector};
use serde::Deserialize;
use toml::Value;

use crate::error::{Error, Result};
use crate::graph::{EquivalenceClasses, MoleculeGraph};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MoleculeFile {
    name: String,
    nodes: usize,
    edges: Vec<Vec<Value>>,
    classes: Option<Vec<Vec<usize>>>,
    labels: Option<Vec<String>>,
}

fn as_number(v: &Value) -> Option<f64> {
    match v {
        Value::Integer(i) => Some(*i as f64),
        Value::Float(f) => Some(*f),
        _ => None,
    }
}

fn as_index(v: &Value) -> Option<usize> {
    match v {
        Value::Integer(i) if *i >= 1 => Some(*i as usize),
        _ => None,
    }
}

pub fn parse_molecule(text: &str) -> Result<MoleculeGraph> {
    let file: MoleculeFile =
        toml::from_str(text).map_err(|e| Error::MalformedFile(e.message().to_string()))?;

    let mut edges = Vec::with_capacity(file.edges.len());
    for (k, row) in file.edges.iter().enumerate() {
        let bad = || Error::MalformedFile(format!("edge #{} must be [i, j, weight]", k + 1));
        if row.len() != 3 {
            return Err(bad());
        }
        let i = as_index(&row[0]).ok_or_else(bad)?;
        let j = as_index(&row[1]).ok_or_else(bad)?;
        let w = as_number(&row[2]).ok_or_else(bad)?;
        edges.push((i - 1, j - 1, w));
    }

    let mut graph = MoleculeGraph::new(file.name, file.nodes, edges)?;
    if let Some(classes) = file.classes {
        if classes.iter().flatten().any(|&n| n == 0) {
            return Err(Error::MalformedFile("class members are 1-based".into()));
        }
        let classes = classes
            .into_iter()
            .map(|c| c.into_iter().map(|n| n - 1).collect())
            .collect();
        graph = graph.with_classes(EquivalenceClasses::new(file.nodes, classes)?)?;
    }
    if let Some(labels) = file.labels {
        graph = graph.with_labels(labels)?;
    }
    Ok(graph)
}

pub fn read_molecule(path: &Path) -> Result<MoleculeGraph> {
    let text = std::fs::read_to_string(path)?;
    parse_molecule(&text)
}

/// Matrices for the Wilson GF utilities.
#[derive(Debug, Clone)]
pub struct MatrixSet {
    pub f: DMatrix<f64>,
    pub g: Option<DMatrix<f64>>,
    pub d: Option<DMatrix<f64>>,
    pub lambda: Option<DVector<f64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    f: Vec<Vec<Value>>,
    g: Option<Vec<Vec<Value>>>,
    d: Option<Vec<Vec<Value>>>,
    lambda: Option<Vec<Value>>,
}

fn to_matrix(field: &str, rows: &[Vec<Value>]) -> Result<DMatrix<f64>> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::MalformedFile(format!("matrix `{field}` is empty")));
    }
    let mut m = DMatrix::zeros(n, n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedFile(format!(
                "matrix `{field}` row {} has {} entries, expected {n}",
                i + 1,
                row.len()
            )));
        }
        for (j, v) in row.iter().enumerate() {
            m[(i, j)] = as_number(v).ok_or_else(|| {
                Error::MalformedFile(format!(
                    "matrix `{field}` entry ({}, {}) is not a number",
                    i + 1,
                    j + 1
                ))
            })?;
        }
    }
    Ok(m)
}

pub fn parse_matrices(text: &str) -> Result<MatrixSet> {
    let file: MatrixFile =
        toml::from_str(text).map_err(|e| Error::MalformedFile(e.message().to_string()))?;
    let lambda = match file.lambda {
        Some(values) => {
            let v: Option<Vec<f64>> = values.iter().map(as_number).collect();
            let v = v.ok_or_else(|| Error::MalformedFile("`lambda` must be numbers".into()))?;
            Some(DVector::from_vec(v))
        }
        None => None,
    };
    Ok(MatrixSet {
        f: to_matrix("f", &file.f)?,
        g: file.g.as_deref().map(|m| to_matrix("g", m)).transpose()?,
        d: file.d.as_deref().map(|m| to_matrix("d", m)).transpose()?,
        lambda,
    })
}

pub fn read_matrices(path: &Path) -> Result<MatrixSet> {
    parse_matrices(&std::fs::read_to_string(path)?)
}
