//! Bond-order-weighted molecular graphs.
//!
//! Node indices are 0-based inside the library. Files, CSV output and
//! carbon labels use the 1-based numbering of the usual ring diagrams, so
//! node `3` here is carbon `C4`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// One undirected bond. `a < b` always holds after construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub weight: f64,
}

/// Weighted undirected graph over the conjugated carbon skeleton.
#[derive(Debug, Clone, PartialEq)]
pub struct MoleculeGraph {
    name: String,
    node_count: usize,
    edges: Vec<Edge>,
    labels: Vec<String>,
    classes: EquivalenceClasses,
    // neighbours sorted by index, paired with the bond weight
    neighbors: Vec<Vec<(usize, f64)>>,
}

impl MoleculeGraph {
    /// Builds and validates a graph. Edges use 0-based indices; labels
    /// default to `C1..CN` and classes default to singletons.
    pub fn new(
        name: impl Into<String>,
        node_count: usize,
        edges: impl IntoIterator<Item = (usize, usize, f64)>,
    ) -> Result<Self> {
        let name = name.into();
        if node_count == 0 {
            return Err(Error::InvalidGraph("graph has no nodes".into()));
        }
        let mut seen = BTreeMap::new();
        let mut list = Vec::new();
        for (i, j, w) in edges {
            for n in [i, j] {
                if n >= node_count {
                    return Err(Error::NodeOutOfRange {
                        node: n + 1,
                        node_count,
                    });
                }
            }
            if i == j {
                return Err(Error::InvalidGraph(format!("self-loop at node {}", i + 1)));
            }
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::InvalidGraph(format!(
                    "edge ({}, {}) has non-positive weight {w}",
                    i + 1,
                    j + 1
                )));
            }
            let (a, b) = if i < j { (i, j) } else { (j, i) };
            if seen.insert((a, b), w).is_some() {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge ({}, {})",
                    a + 1,
                    b + 1
                )));
            }
            list.push(Edge { a, b, weight: w });
        }

        let mut neighbors = vec![Vec::new(); node_count];
        for e in &list {
            neighbors[e.a].push((e.b, e.weight));
            neighbors[e.b].push((e.a, e.weight));
        }
        for n in &mut neighbors {
            n.sort_by_key(|&(k, _)| k);
        }

        let components = count_components(&neighbors);
        if components != 1 {
            return Err(Error::Disconnected { components });
        }

        Ok(Self {
            name,
            node_count,
            edges: list,
            labels: (1..=node_count).map(|i| format!("C{i}")).collect(),
            classes: EquivalenceClasses::singletons(node_count),
            neighbors,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.node_count {
            return Err(Error::InvalidGraph(format!(
                "{} labels for {} nodes",
                labels.len(),
                self.node_count
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn with_classes(mut self, classes: EquivalenceClasses) -> Result<Self> {
        if classes.node_count() != self.node_count {
            return Err(Error::InvalidGraph(format!(
                "classes cover {} nodes, graph has {}",
                classes.node_count(),
                self.node_count
            )));
        }
        self.classes = classes;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn label(&self, node: usize) -> &str {
        &self.labels[node]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn classes(&self) -> &EquivalenceClasses {
        &self.classes
    }

    /// Neighbours of `node` in ascending index order with their bond weights.
    pub fn neighbors(&self, node: usize) -> &[(usize, f64)] {
        &self.neighbors[node]
    }

    /// Number of incident bonds.
    pub fn degree(&self, node: usize) -> usize {
        self.neighbors[node].len()
    }

    /// Sum of incident bond weights.
    pub fn weighted_degree(&self, node: usize) -> f64 {
        self.neighbors[node].iter().map(|&(_, w)| w).sum()
    }

    pub fn edge_weight(&self, i: usize, j: usize) -> Option<f64> {
        self.neighbors
            .get(i)?
            .iter()
            .find(|&&(k, _)| k == j)
            .map(|&(_, w)| w)
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        if node < self.node_count {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node: node + 1,
                node_count: self.node_count,
            })
        }
    }

    pub fn adjacency(&self) -> AdjacencyMatrix {
        let n = self.node_count;
        let mut a = DMatrix::zeros(n, n);
        for e in &self.edges {
            a[(e.a, e.b)] = e.weight;
            a[(e.b, e.a)] = e.weight;
        }
        AdjacencyMatrix(a)
    }

    /// Diagonal matrix of weighted degrees.
    pub fn degree_matrix(&self) -> DMatrix<f64> {
        DMatrix::from_diagonal(&self.adjacency().row_sums().into())
    }

    /// `L = D - A` with weighted degrees on the diagonal.
    pub fn laplacian(&self) -> DMatrix<f64> {
        let a = self.adjacency();
        let mut l = -a.0;
        for i in 0..self.node_count {
            l[(i, i)] = self.weighted_degree(i);
        }
        l
    }
}

impl fmt::Display for MoleculeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (N={}, {} edges)",
            self.name,
            self.node_count,
            self.edges.len()
        )
    }
}

fn count_components(neighbors: &[Vec<(usize, f64)>]) -> usize {
    let n = neighbors.len();
    let mut seen = vec![false; n];
    let mut components = 0;
    for root in 0..n {
        if seen[root] {
            continue;
        }
        components += 1;
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &(y, _) in &neighbors[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    components
}

/// Weighted adjacency matrix: `A_ij` is the bond order of `(i, j)` or 0.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjacencyMatrix(DMatrix<f64>);

impl AdjacencyMatrix {
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.0
    }

    pub fn into_inner(self) -> DMatrix<f64> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    /// Weighted degrees.
    pub fn row_sums(&self) -> Vec<f64> {
        self.0.row_iter().map(|r| r.sum()).collect()
    }
}

/// Partition of the nodes into symmetry-equivalent groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceClasses {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl EquivalenceClasses {
    /// Validates that `classes` (0-based) partition `0..node_count`.
    /// Members are sorted and classes ordered by their smallest member.
    pub fn new(node_count: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut class_of = vec![usize::MAX; node_count];
        let mut classes: Vec<Vec<usize>> = classes
            .into_iter()
            .filter(|c| !c.is_empty())
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        classes.sort_by_key(|c| c[0]);
        for (id, class) in classes.iter().enumerate() {
            for &n in class {
                if n >= node_count {
                    return Err(Error::NodeOutOfRange {
                        node: n + 1,
                        node_count,
                    });
                }
                if class_of[n] != usize::MAX {
                    return Err(Error::InvalidGraph(format!(
                        "node {} appears in more than one class",
                        n + 1
                    )));
                }
                class_of[n] = id;
            }
        }
        if let Some(missing) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidGraph(format!(
                "node {} is not in any class",
                missing + 1
            )));
        }
        Ok(Self { classes, class_of })
    }

    pub fn singletons(node_count: usize) -> Self {
        Self {
            classes: (0..node_count).map(|i| vec![i]).collect(),
            class_of: (0..node_count).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn node_count(&self) -> usize {
        self.class_of.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, node: usize) -> usize {
        self.class_of[node]
    }

    /// Smallest member of each class.
    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }
}
