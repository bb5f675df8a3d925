//! Quantum walks on bond-order-weighted graphs of polycyclic aromatic
//! hydrocarbons.
//!
//! Nodes are 0-based in the API and 1-based in files, labels and CSV
//! output.

pub mod bond_order;
pub mod catalog;
pub mod ctqw;
pub mod dtqw;
pub mod error;
pub mod export;
pub mod graph;
pub mod metrics;
pub mod molfile;
pub mod simulation;

pub use catalog::{catalog_molecule, equivalence_classes, load_molecule};
pub use ctqw::{
    evolve_ensemble, time_series, Hamiltonian, ProbabilityMatrix, Propagator, TimeGrid,
};
pub use error::{Error, Result};
pub use graph::{AdjacencyMatrix, Edge, EquivalenceClasses, MoleculeGraph};
pub use simulation::{simulate, SimConfig, Simulation};
