//! Exhaustive searches over relator applications: the brute-force
//! word-problem oracle and pointwise Dehn-function area.
//!
//! One move replaces a subword `s` of the current (freely reduced) word by
//! `t^-1`, where `st` is an element of the symmetrized relator set, then
//! freely reduces. `s` may be empty (inserting a whole relator) or the whole
//! element (deleting one).

use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::small_cancellation::symmetrize;
use crate::oracle::{Verdict, WordProblemOracle};
use crate::presentation::Presentation;
use crate::word::{Letter, Word};

struct MoveSet {
    elements: Vec<Vec<Letter>>,
}

impl MoveSet {
    fn new(p: &Presentation) -> Self {
        let elements = match symmetrize(p) {
            Ok(s) => s.elements.into_iter().map(Word::into_letters).collect(),
            Err(_) => Vec::new(),
        };
        MoveSet { elements }
    }

    /// Calls `f` on every neighbour of `w` of length at most `max_len`.
    /// Returns true if some neighbour was dropped because of the length cap.
    fn for_each_neighbour<F: FnMut(Word)>(&self, w: &[Letter], max_len: usize, mut f: F) -> bool {
        let mut capped = false;
        for i in 0..=w.len() {
            for r in &self.elements {
                let n = r.len();
                let mut k = 0;
                loop {
                    // s = r[..k] sits at w[i..i+k]; replace it by (r[k..])^-1.
                    let out_len_bound = w.len() - k + (n - k);
                    let fresh = Word::reduce(
                        w[..i]
                            .iter()
                            .copied()
                            .chain(r[k..].iter().rev().map(|l| l.inverse()))
                            .chain(w[i + k..].iter().copied()),
                    );
                    if fresh.len() <= max_len {
                        f(fresh);
                    } else if out_len_bound > max_len {
                        capped = true;
                    }
                    if k == n || i + k >= w.len() || w[i + k] != r[k] {
                        break;
                    }
                    k += 1;
                }
            }
        }
        capped
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteBudget {
    pub max_len: usize,
    pub max_states: usize,
    #[serde(skip)]
    pub timeout: Option<Duration>,
}

impl BruteBudget {
    pub fn new(max_len: usize, max_states: usize) -> Self {
        BruteBudget {
            max_len,
            max_states,
            timeout: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum BruteResult {
    /// A derivation to the empty word with `steps` relator applications.
    Trivial { steps: usize },
    /// No derivation found. `exhausted` is set when one side of the search
    /// ran out of words of length at most `max_len`.
    NontrivialWithinBudget { exhausted: bool },
    /// The search could not run: the word is longer than `max_len`, or the timeout expired.
    Unknown,
}

/// Bidirectional breadth-first search between `w` and the empty word.
/// A `Trivial` answer is definitive.
pub fn brute_force_trivial(w: &Word, p: &Presentation, budget: BruteBudget) -> BruteResult {
    if w.is_empty() {
        return BruteResult::Trivial { steps: 0 };
    }
    if w.len() > budget.max_len {
        return BruteResult::Unknown;
    }
    let moves = MoveSet::new(p);
    let deadline = budget.timeout.map(|t| Instant::now() + t);

    let mut dist: [HashMap<Word, usize>; 2] = [HashMap::new(), HashMap::new()];
    dist[0].insert(w.clone(), 0);
    dist[1].insert(Word::identity(), 0);
    let mut frontier: [Vec<Word>; 2] = [vec![w.clone()], vec![Word::identity()]];

    loop {
        if frontier[0].is_empty() || frontier[1].is_empty() {
            return BruteResult::NontrivialWithinBudget { exhausted: true };
        }
        let side = usize::from(frontier[1].len() < frontier[0].len());
        let other = 1 - side;
        let layer = std::mem::take(&mut frontier[side]);
        let mut next = Vec::new();
        for u in &layer {
            if deadline.is_some_and(|d| Instant::now() > d) {
                return BruteResult::Unknown;
            }
            let du = dist[side][u];
            let mut met: Option<usize> = None;
            moves.for_each_neighbour(u.letters(), budget.max_len, |v| {
                if met.is_some() {
                    return;
                }
                if let Some(&dv) = dist[other].get(&v) {
                    met = Some(du + 1 + dv);
                    return;
                }
                if !dist[side].contains_key(&v) {
                    dist[side].insert(v.clone(), du + 1);
                    next.push(v);
                }
            });
            if let Some(steps) = met {
                return BruteResult::Trivial { steps };
            }
            if dist[0].len() + dist[1].len() > budget.max_states {
                return BruteResult::NontrivialWithinBudget { exhausted: false };
            }
        }
        frontier[side] = next;
    }
}

/// Brute-force search as a word-problem oracle. Only `Trivial` is definitive;
/// a failed search answers `Unknown`.
#[derive(Debug, Clone)]
pub struct BruteForceOracle {
    pub presentation: Presentation,
    pub budget: BruteBudget,
}

impl WordProblemOracle for BruteForceOracle {
    fn decide(&self, w: &Word) -> Verdict {
        match brute_force_trivial(w, &self.presentation, self.budget) {
            BruteResult::Trivial { .. } => Verdict::Trivial,
            _ => Verdict::Unknown,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AreaBudget {
    pub max_area: usize,
    pub max_len: usize,
    pub max_states: usize,
    #[serde(skip)]
    pub timeout: Option<Duration>,
}

impl AreaBudget {
    pub fn new(max_area: usize, max_len: usize) -> Self {
        AreaBudget {
            max_area,
            max_len,
            max_states: 5_000_000,
            timeout: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AreaStatus {
    /// `value` is the least number of relator applications within the length cap.
    Exact,
    /// No derivation with fewer than `value` applications exists within the cap.
    AtLeast,
    /// The state budget or timeout ran out; `value` is a lower bound.
    ExceededBudget,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AreaResult {
    pub status: AreaStatus,
    pub value: usize,
    pub budget: AreaBudget,
    /// Whether some derivation was cut off by `max_len` before the answer was
    /// reached. When false an exact value is the unrestricted minimum of the search.
    pub cap_binding: bool,
    pub states: usize,
}

/// Uniform-cost (breadth-first) search for the least number of relator
/// applications that reduce `w` to the empty word.
pub fn area_estimate(w: &Word, p: &Presentation, budget: AreaBudget) -> AreaResult {
    let result = |status, value, cap_binding, states| AreaResult {
        status,
        value,
        budget,
        cap_binding,
        states,
    };
    if w.is_empty() {
        return result(AreaStatus::Exact, 0, false, 1);
    }
    if w.len() > budget.max_len {
        return result(AreaStatus::ExceededBudget, 1, true, 0);
    }
    let moves = MoveSet::new(p);
    let deadline = budget.timeout.map(|t| Instant::now() + t);
    let mut seen: HashSet<Word> = HashSet::new();
    seen.insert(w.clone());
    let mut frontier = vec![w.clone()];
    let mut cap_binding = false;

    for depth in 1..=budget.max_area {
        let mut next = Vec::new();
        let mut found = false;
        for u in &frontier {
            if deadline.is_some_and(|d| Instant::now() > d) {
                return result(AreaStatus::ExceededBudget, depth, cap_binding, seen.len());
            }
            let capped = moves.for_each_neighbour(u.letters(), budget.max_len, |v| {
                if v.is_empty() {
                    found = true;
                } else if !found && seen.insert(v.clone()) {
                    next.push(v);
                }
            });
            cap_binding |= capped;
            if found {
                return result(AreaStatus::Exact, depth, cap_binding, seen.len());
            }
            if seen.len() > budget.max_states {
                return result(AreaStatus::ExceededBudget, depth, cap_binding, seen.len());
            }
        }
        if next.is_empty() {
            return result(AreaStatus::AtLeast, depth, cap_binding, seen.len());
        }
        frontier = next;
    }
    result(AreaStatus::AtLeast, budget.max_area + 1, cap_binding, seen.len())
}
