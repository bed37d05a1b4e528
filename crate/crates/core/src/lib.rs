//! Betti-table sizes of binomial edge ideals.
//!
//! For a simple graph `G` on `[n]` the binomial edge ideal `J_G ⊂ K[x_1..x_n, y_1..y_n]`
//! is generated by `x_i y_j - x_j y_i` over the edges `{i, j}`. This crate computes its
//! projective dimension and regularity through the squarefree lex initial ideal and
//! Hochster's formula, builds graphs realising prescribed `(pd, reg)` pairs, checks the
//! known bounds and characterisations, and enumerates small graphs exhaustively.
//!
//! ```
//! use bettisize::{pd_reg, Field, Graph, PdRegPair};
//!
//! let p4 = Graph::path(4).unwrap();
//! assert_eq!(pd_reg(&p4, Field::Rationals).unwrap(), PdRegPair::new(2, 4));
//! ```

pub mod atlas;
pub mod betti;
pub mod canonical;
pub mod complex;
pub mod error;
pub mod families;
pub mod field;
pub mod graph;
pub mod graph6;
pub mod ideal;
pub mod linalg;
pub mod report;
pub mod theorems;

pub use atlas::{
    compute_atlas, enumerate_graphs, probe_conjecture, verify_main_theorem, Atlas, AtlasRecord,
    PdRegSet,
};
pub use betti::{
    betti_table_hochster, betti_table_koszul, depth_of_quotient, initial_betti_table, pd_reg,
    BettiTable, PdRegPair,
};
pub use complex::{reduced_homology_ranks, stanley_reisner, SimplicialComplex};
pub use error::{Error, Result};
pub use families::{pdreg_closed_form, realize, D5Reason, GTWitness, RealizeCert};
pub use field::Field;
pub use graph::{GluingSplit, Graph, StandardKind, VertexKind, VertexSet};
pub use ideal::{
    colon_path_generators, edge_generators, initial_ideal, AdmissiblePath, MonomialIdeal,
    SquarefreeMonomial,
};
pub use report::ReportDocument;
pub use theorems::{CheckReport, Composition, Suite};

/// Exact rationals for the dense oracle.
pub type Rational = num_rational::BigRational;
/// Two-element field for the dense oracle.
pub type Gf2 = linalg::Fp<2>;
/// Machine-word fraction-free elimination (rank over ℚ).
pub type MachineRationals = linalg::MachineRationals;
/// Arbitrary-precision fraction-free elimination (rank over ℚ).
pub type WideRationals = linalg::WideRationals;
