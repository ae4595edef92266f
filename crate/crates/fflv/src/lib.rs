//! FFLV (Feigin–Fourier–Littelmann–Vinberg) polytopes for the Lie types A and C.
//!
//! Given a dominant integral weight, this crate builds the corresponding FFLV
//! polytope as an exact rational halfspace system, enumerates its lattice
//! points, and classifies its vertices on three levels:
//!
//! * all vertices, via antichain tuples in the straddling posets;
//! * permutation vertices, via intersection-closed segment families and the
//!   bijection with (signed) permutations;
//! * simple vertices, via laminar families, with large Schröder counts.
//!
//! Every combinatorial classification can be cross-checked against an
//! independent polyhedral oracle ([`oracle`]) that works directly on the
//! halfspace system with exact rational arithmetic: rank tests for vertexhood,
//! double description for tangent cones, fraction-free determinants for
//! simpliciality, and pruned box search for lattice counts.

pub mod error;
pub mod oracle;
pub mod perm;
pub mod polytope_a;
pub mod polytope_c;
pub mod rat;
pub mod segments;
pub mod vertices_a;
pub mod weights;

pub use error::Error;
