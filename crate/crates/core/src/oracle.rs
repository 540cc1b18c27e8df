//! Word-problem oracles: `word -> {trivial, nontrivial, unknown}`.
//!
//! Oracles are deterministic per input and must be callable from several
//! threads at once.

use serde::{Deserialize, Serialize};

use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Trivial,
    Nontrivial,
    Unknown,
}

pub trait WordProblemOracle: Sync {
    fn decide(&self, w: &Word) -> Verdict;
}

impl<F> WordProblemOracle for F
where
    F: Fn(&Word) -> Verdict + Sync,
{
    fn decide(&self, w: &Word) -> Verdict {
        self(w)
    }
}

/// Exact for free groups: a reduced word is trivial iff it is empty.
#[derive(Debug, Clone, Copy, Default)]
pub struct FreeGroupOracle;

impl WordProblemOracle for FreeGroupOracle {
    fn decide(&self, w: &Word) -> Verdict {
        if w.is_empty() {
            Verdict::Trivial
        } else {
            Verdict::Nontrivial
        }
    }
}

/// Exact for free abelian groups of the given rank: trivial iff all
/// exponent sums vanish.
#[derive(Debug, Clone, Copy)]
pub struct FreeAbelianOracle {
    pub rank: usize,
}

impl WordProblemOracle for FreeAbelianOracle {
    fn decide(&self, w: &Word) -> Verdict {
        if w.exponent_sums(self.rank).iter().all(|&e| e == 0) {
            Verdict::Trivial
        } else {
            Verdict::Nontrivial
        }
    }
}

/// Never answers; useful for exercising unknown propagation.
#[derive(Debug, Clone, Copy, Default)]
pub struct SilentOracle;

impl WordProblemOracle for SilentOracle {
    fn decide(&self, _: &Word) -> Verdict {
        Verdict::Unknown
    }
}
