//! Dehn's algorithm for certified C'(1/6) presentations.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::small_cancellation::{check_small_cancellation, CancellationReport, SmallCancellationError};
use crate::oracle::{Verdict, WordProblemOracle};
use crate::presentation::Presentation;
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DehnError {
    #[error("presentation is not C'(1/6): max piece {max_piece} against shortest relator {min_len}")]
    NotCertified { max_piece: usize, min_len: usize },
    #[error(transparent)]
    SmallCancellation(#[from] SmallCancellationError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DehnVerdict {
    Trivial,
    Nontrivial,
}

/// Reusable solver: certification happens once in [`DehnSolver::new`].
#[derive(Debug, Clone)]
pub struct DehnSolver {
    presentation: Presentation,
    report: CancellationReport,
    /// Relators and inverse relators, shortest first.
    cycles: Vec<Vec<Letter>>,
}

impl DehnSolver {
    pub fn new(p: &Presentation) -> Result<Self, DehnError> {
        let report = check_small_cancellation(p, Ratio::new(1, 6))?;
        if !report.passes(Ratio::new(1, 6)) {
            return Err(DehnError::NotCertified {
                max_piece: report.max_piece_length,
                min_len: report.min_relator_length,
            });
        }
        let mut cycles: Vec<Vec<Letter>> = p
            .relators()
            .iter()
            .flat_map(|r| [r.letters().to_vec(), r.inverse().into_letters()])
            .collect();
        cycles.sort_by_key(Vec::len);
        Ok(DehnSolver {
            presentation: p.clone(),
            report,
            cycles,
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn report(&self) -> &CancellationReport {
        &self.report
    }

    /// Finds the leftmost subword matching more than half of a symmetrized
    /// relator (longest match first) and returns `(start, len, replacement)`.
    fn find_majority(&self, w: &[Letter]) -> Option<(usize, usize, Vec<Letter>)> {
        for start in 0..w.len() {
            let avail = w.len() - start;
            let mut found: Option<(usize, Vec<Letter>)> = None;
            for cyc in &self.cycles {
                let n = cyc.len();
                if n >= 2 * avail {
                    // Even a full match of the remaining suffix is not a majority.
                    break;
                }
                for off in 0..n {
                    if cyc[off] != w[start] {
                        continue;
                    }
                    let mut k = 0;
                    while k < n && k < avail && cyc[(off + k) % n] == w[start + k] {
                        k += 1;
                    }
                    if 2 * k > n && found.as_ref().map_or(true, |(best, _)| k > *best) {
                        // Complement t follows s in the cycle; s is replaced by t^-1.
                        let repl: Vec<Letter> = (k..n)
                            .rev()
                            .map(|q| cyc[(off + q) % n].inverse())
                            .collect();
                        found = Some((k, repl));
                    }
                }
            }
            if let Some((k, repl)) = found {
                return Some((start, k, repl));
            }
        }
        None
    }

    /// Runs Dehn's algorithm; returns the verdict and the Dehn-reduced word.
    pub fn reduce(&self, w: &Word) -> (DehnVerdict, Word) {
        let mut cur = w.clone();
        while let Some((start, len, repl)) = self.find_majority(cur.letters()) {
            let l = cur.letters();
            let next = l[..start]
                .iter()
                .chain(repl.iter())
                .chain(l[start + len..].iter())
                .copied();
            cur = Word::reduce(next);
        }
        let v = if cur.is_empty() {
            DehnVerdict::Trivial
        } else {
            DehnVerdict::Nontrivial
        };
        (v, cur)
    }

    pub fn solve(&self, w: &Word) -> DehnVerdict {
        self.reduce(w).0
    }
}

impl WordProblemOracle for DehnSolver {
    fn decide(&self, w: &Word) -> Verdict {
        match self.solve(w) {
            DehnVerdict::Trivial => Verdict::Trivial,
            DehnVerdict::Nontrivial => Verdict::Nontrivial,
        }
    }
}

/// One-shot Dehn's algorithm; certifies `p` first.
pub fn dehn_solve(w: &Word, p: &Presentation) -> Result<DehnVerdict, DehnError> {
    Ok(DehnSolver::new(p)?.solve(w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surface() -> Presentation {
        Presentation::parse("gens: a b c d\nrel: [a,b][c,d]").unwrap()
    }

    #[test]
    fn relator_is_trivial() {
        let p = surface();
        assert_eq!(dehn_solve(&p.relators()[0], &p), Ok(DehnVerdict::Trivial));
    }

    #[test]
    fn generator_is_nontrivial() {
        let p = surface();
        assert_eq!(dehn_solve(&Word::generator(0), &p), Ok(DehnVerdict::Nontrivial));
    }

    #[test]
    fn conjugated_relator_is_trivial() {
        let p = surface();
        let theta = p.parse_word("a c^-1 b").unwrap();
        let w = p.relators()[0].conjugate_by(&theta);
        assert_eq!(dehn_solve(&w, &p), Ok(DehnVerdict::Trivial));
        let w = p.relators()[0].rotate(3).conjugate_by(&theta).concat(&p.relators()[0].inverse());
        assert_eq!(dehn_solve(&w, &p), Ok(DehnVerdict::Trivial));
    }

    #[test]
    fn uncertified_presentation_is_rejected() {
        let p = Presentation::parse("gens: a b\nrel: [a,b]").unwrap();
        assert!(matches!(dehn_solve(&Word::identity(), &p), Err(DehnError::NotCertified { .. })));
    }
}
