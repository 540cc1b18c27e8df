//! Finitely presented groups at desk scale: words and presentations,
//! word-problem solvers, presentation compilers, decision-problem reductions
//! and a homology-level model of Dehn twists.

pub mod constructions;
pub mod graph;
pub mod hom;
pub mod matrix;
pub mod mcg;
pub mod oracle;
pub mod presentation;
pub mod reductions;
pub mod solvers;
pub mod word;

pub use graph::Graph;
pub use hom::{apply_hom, GroupHom};
pub use matrix::IntMatrix;
pub use oracle::{Verdict, WordProblemOracle};
pub use presentation::{parse_presentation, serialize_presentation, Presentation};
pub use word::{free_reduce, Letter, Sign, Word};
