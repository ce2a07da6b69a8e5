//! Homological and combinatorial invariants of squarefree monomial ideals,
//! with closed forms for closed neighborhood ideals of squared paths
//! `NI(P_n^2)` and a harness that checks the closed forms against an exact
//! Betti-table engine.

pub mod caps;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod homology;
pub mod ideal;
mod io;
pub mod resolution;
pub mod simplicial;
pub mod transversal;
pub mod verify;
pub mod vertex_set;

pub use caps::Caps;
pub use error::{Error, Result};
pub use graph::{graph_square, minimal_dominating_sets, path_graph, DominationSummary, Graph};
pub use homology::{reduced_homology, Field, HomologyProfile};
pub use ideal::{ni_pn2, PrimeList, SquarefreeIdeal};
pub use resolution::{BettiTable, Engine, Invariants, SeqCm};
pub use simplicial::{FHVectors, SimplicialComplex};
pub use vertex_set::VertexSet;
