//! Homology-level model of mapping class groups.

pub mod surfaces;
pub mod symplectic;

pub use surfaces::{block_wreath_embed, genus_steps, wreath_genus, BlockError, GenusError, GenusSteps, SurfaceSpec};
pub use symplectic::{
    check_relations, curve_system_from_graph, is_symplectic, pairing, raag_symplectic_rep, symplectic_inverse,
    transvection, CurveClass, PairReport, RelationReport, SymplecticError, SymplecticSpace, TwistRep,
};
