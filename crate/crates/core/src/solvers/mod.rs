//! Word-problem and quantitative solvers.

pub mod dehn;
pub mod raag;
pub mod search;
pub mod small_cancellation;
pub mod snf;

pub use dehn::{dehn_solve, DehnError, DehnSolver, DehnVerdict};
pub use raag::{raag_equal, raag_normal_form};
pub use search::{
    area_estimate, brute_force_trivial, AreaBudget, AreaResult, AreaStatus, BruteBudget, BruteForceOracle,
    BruteResult,
};
pub use small_cancellation::{
    check_small_cancellation, symmetrize, CancellationReport, ElementRef, PieceWitness, SmallCancellationError,
    SymmetrizedSet,
};
pub use snf::{abelianization, relation_matrix, smith_normal_form, Abelianization, SmithForm};
