//! First and second homology invariants of Artin and Coxeter groups,
//! computed from Coxeter graphs.
//!
//! The main entry points are [`invariant_profile`] and [`homology_summary`].
//! [`omega_sets`] builds explicit free-group words representing generators
//! of the second homology for both the Artin and the Coxeter presentation.
//!
//! ```
//! use artin_homology::{from_catalog, homology_summary};
//!
//! let g = from_catalog("~D4").unwrap();
//! let s = homology_summary(&g);
//! assert_eq!(s.h2_artin_mod2_rank, 6);
//! assert_eq!(s.h2_artin_integral.unwrap().torsion2_rank, 6);
//! ```

pub mod chains;
pub mod check;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod oracle;
pub mod words;

use num_bigint::BigInt;

pub use chains::{
    boundary, boundary_matrix, even_boundary_check, fundamental_cycle_basis, gf2_rank,
    is_dw_member, mod2_reduce, xi_reduce, BitVector, Coefficient, EdgeChain, FundamentalBasis,
    IntMatrix, Mod2Cycle, VertexChain,
};
pub use error::{ChainError, GraphError, OracleError, ParseError, WordError};
pub use graph::{from_catalog, CatalogType, CoxeterGraph, CoxeterLabel, PlainGraph, VertexPair};
pub use invariants::{
    commuting_pairs, homology_summary, invariant_profile, pair_classes, stability_scan,
    AbelianDescriptor, CorollaryConditions, HomologySummary, InvariantProfile, PairClass,
    PairPartition, StabilityReport,
};
pub use words::{
    abelianize, alternating_word, commutator, free_reduce, in_commutator_subgroup, omega_sets,
    presentation_relators, project_word, relator, AbelianVector, Flavor, Letter, OmegaSets, Word,
};

/// Integral 1-chain with arbitrary-precision coefficients.
pub type Chain1 = EdgeChain<BigInt>;
/// Integral 0-chain with arbitrary-precision coefficients.
pub type Chain0 = VertexChain<BigInt>;
/// Fundamental cycle basis with arbitrary-precision coefficients.
pub type CycleBasis = FundamentalBasis<BigInt>;
/// Integral 1-chain on machine integers, for hot loops over small graphs.
pub type SmallChain1 = EdgeChain<i64>;
/// Boundary matrix with arbitrary-precision entries.
pub type BoundaryMatrix = IntMatrix<BigInt>;
