//! Symmetrized relator sets and the metric small-cancellation condition C'(λ).
//!
//! A piece is a common prefix of two distinct elements of the symmetrized
//! set. The checker never materialises the symmetrized set: relators are
//! scanned as cyclic sequences of syllables `x^k`, which keeps it fast on the
//! very long relators produced by the Rips construction.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::presentation::Presentation;
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmallCancellationError {
    #[error("presentation has no relators")]
    NoRelators,
    #[error("lambda must lie in (0, 1], got {0}")]
    BadLambda(String),
}

/// All cyclic permutations of all relators and their inverses, deduplicated
/// and sorted shortlex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetrizedSet {
    pub base: Presentation,
    pub elements: Vec<Word>,
}

pub fn symmetrize(p: &Presentation) -> Result<SymmetrizedSet, SmallCancellationError> {
    if p.relators().is_empty() {
        return Err(SmallCancellationError::NoRelators);
    }
    let mut set = BTreeSet::new();
    for r in p.relators() {
        let inv = r.inverse();
        for k in 0..r.len() {
            set.insert(r.rotate(k));
            set.insert(inv.rotate(k));
        }
    }
    Ok(SymmetrizedSet {
        base: p.clone(),
        elements: set.into_iter().collect(),
    })
}

/// Identifies one symmetrized element: relator `relator` (inverted if
/// `inverse`), rotated to start at letter `offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRef {
    pub relator: usize,
    pub inverse: bool,
    pub offset: usize,
}

impl ElementRef {
    pub fn materialize(&self, p: &Presentation) -> Word {
        let r = &p.relators()[self.relator];
        let base = if self.inverse { r.inverse() } else { r.clone() };
        base.rotate(self.offset)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceWitness {
    pub piece: Word,
    pub first: ElementRef,
    pub second: ElementRef,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CancellationReport {
    pub max_piece_length: usize,
    pub min_relator_length: usize,
    /// `max_piece_length / min_relator_length`, exact.
    #[serde(with = "ratio_string")]
    pub ratio: Ratio<i64>,
    /// Keyed by `"p/q"`: true iff `max_piece_length < λ · |r|` for every relator.
    pub passes_lambda: BTreeMap<String, bool>,
    /// `None` when no two distinct elements share a first letter.
    pub witness: Option<PieceWitness>,
}

impl CancellationReport {
    pub fn passes(&self, lambda: Ratio<i64>) -> bool {
        passes(self.max_piece_length, self.min_relator_length, lambda)
    }
}

mod ratio_string {
    use num_rational::Ratio;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio<i64>, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_ratio(&s).ok_or_else(|| serde::de::Error::custom(format!("bad ratio `{s}`")))
    }
}

pub fn parse_ratio(s: &str) -> Option<Ratio<i64>> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse().ok()?, d.trim().parse().ok()?),
        None => (s.trim().parse().ok()?, 1),
    };
    if d == 0 {
        return None;
    }
    Some(Ratio::new(n, d))
}

fn ratio_key(r: Ratio<i64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn passes(max_piece: usize, min_len: usize, lambda: Ratio<i64>) -> bool {
    (max_piece as i128) * i128::from(*lambda.denom()) < i128::from(*lambda.numer()) * (min_len as i128)
}

/// One relator or inverse relator as a cyclic sequence of maximal syllables.
struct CyclicSyllables {
    relator: usize,
    inverse: bool,
    len: usize,
    /// Letter offset (in the original element) where syllable 0 begins.
    shift: usize,
    letters: Vec<Letter>,
    exps: Vec<usize>,
    /// Offset of each syllable start relative to `shift`.
    starts: Vec<usize>,
}

impl CyclicSyllables {
    fn new(relator: usize, inverse: bool, w: &Word) -> Self {
        let l = w.letters();
        let n = l.len();
        // Find a syllable boundary so syllables are maximal cyclically.
        let shift = (0..n).find(|&i| l[i] != l[(i + n - 1) % n]).unwrap_or(0);
        let mut letters = Vec::new();
        let mut exps = Vec::new();
        let mut starts = Vec::new();
        let mut k = 0;
        while k < n {
            let x = l[(shift + k) % n];
            let start = k;
            while k < n && l[(shift + k) % n] == x {
                k += 1;
            }
            letters.push(x);
            exps.push(k - start);
            starts.push(start);
        }
        CyclicSyllables {
            relator,
            inverse,
            len: n,
            shift,
            letters,
            exps,
            starts,
        }
    }

    fn is_power(&self) -> bool {
        self.letters.len() == 1
    }

    fn syllables(&self) -> usize {
        self.letters.len()
    }

    /// Element starting inside syllable `s` with `rem` letters of it remaining.
    fn element(&self, s: usize, rem: usize) -> ElementRef {
        let start_in_frame = self.starts[s] + self.exps[s] - rem;
        ElementRef {
            relator: self.relator,
            inverse: self.inverse,
            offset: (self.shift + start_in_frame) % self.len,
        }
    }
}

/// Common prefix length of the letter sequences starting at syllable
/// boundaries `i` of `a` and `j` of `b`, stopping once `cap` is reached.
fn boundary_lcp(a: &CyclicSyllables, i: usize, b: &CyclicSyllables, j: usize, cap: usize) -> usize {
    let mut acc = 0;
    let (mut i, mut j) = (i, j);
    while acc < cap {
        if a.letters[i] != b.letters[j] {
            break;
        }
        let (ea, eb) = (a.exps[i], b.exps[j]);
        if ea != eb {
            acc += ea.min(eb);
            break;
        }
        acc += ea;
        i = (i + 1) % a.syllables();
        j = (j + 1) % b.syllables();
    }
    acc.min(cap)
}

struct Best {
    len: usize,
    first: ElementRef,
    second: ElementRef,
}

fn consider(best: &mut Option<Best>, len: usize, first: ElementRef, second: ElementRef) {
    if len == 0 {
        return;
    }
    if best.as_ref().map_or(true, |b| len > b.len) {
        *best = Some(Best { len, first, second });
    }
}

/// Longest piece of the symmetrized closure of `p`.
fn max_piece(p: &Presentation) -> Option<Best> {
    let mut seqs = Vec::new();
    for (idx, r) in p.relators().iter().enumerate() {
        seqs.push(CyclicSyllables::new(idx, false, r));
        seqs.push(CyclicSyllables::new(idx, true, &r.inverse()));
    }

    // Bucket syllables by letter so only same-letter pairs are compared.
    let mut by_letter: BTreeMap<Letter, Vec<(usize, usize)>> = BTreeMap::new();
    for (si, s) in seqs.iter().enumerate() {
        for k in 0..s.syllables() {
            by_letter.entry(s.letters[k]).or_default().push((si, k));
        }
    }

    let mut best: Option<Best> = None;

    // Two starts inside one syllable with different remainders.
    for s in &seqs {
        if s.is_power() {
            continue;
        }
        for k in 0..s.syllables() {
            if s.exps[k] >= 2 {
                let e = s.exps[k];
                consider(&mut best, e - 1, s.element(k, e), s.element(k, e - 1));
            }
        }
    }

    for bucket in by_letter.values() {
        for (x, &(sa, ia)) in bucket.iter().enumerate() {
            for &(sb, ib) in &bucket[x + 1..] {
                let (a, b) = (&seqs[sa], &seqs[sb]);
                let cap = a.len.min(b.len);
                let rem = a.exps[ia].min(b.exps[ib]);
                let first = a.element(ia, rem);
                let second = b.element(ib, rem);
                if a.is_power() || b.is_power() {
                    // x^k against anything: the prefix stops when either side
                    // leaves the letter x or the power runs out.
                    let identical = a.is_power() && b.is_power() && a.len == b.len;
                    if !identical {
                        consider(&mut best, rem.min(cap), first, second);
                    }
                    continue;
                }
                let lcp = rem
                    + boundary_lcp(
                        a,
                        (ia + 1) % a.syllables(),
                        b,
                        (ib + 1) % b.syllables(),
                        cap - rem,
                    );
                if lcp >= cap && a.len == b.len {
                    // Same element reached from two positions (periodic relator
                    // or a relator repeated in the input).
                    continue;
                }
                consider(&mut best, lcp, first, second);
            }
        }
    }
    best
}

/// Computes the longest piece and tests C'(λ) for `lambda` and the standard
/// thresholds 1/4, 1/6 and 1/8.
pub fn check_small_cancellation(
    p: &Presentation,
    lambda: Ratio<i64>,
) -> Result<CancellationReport, SmallCancellationError> {
    if p.relators().is_empty() {
        return Err(SmallCancellationError::NoRelators);
    }
    if lambda <= Ratio::from_integer(0) || lambda > Ratio::from_integer(1) {
        return Err(SmallCancellationError::BadLambda(ratio_key(lambda)));
    }
    let min_len = p.relators().iter().map(Word::len).min().unwrap_or(0);
    let best = max_piece(p);
    let max_piece_length = best.as_ref().map_or(0, |b| b.len);
    let witness = best.map(|b| {
        let piece = b.first.materialize(p).subword(0, b.len);
        PieceWitness {
            piece,
            first: b.first,
            second: b.second,
        }
    });
    let mut passes_lambda = BTreeMap::new();
    for l in [Ratio::new(1, 4), Ratio::new(1, 6), Ratio::new(1, 8), lambda] {
        passes_lambda.insert(ratio_key(l), passes(max_piece_length, min_len, l));
    }
    Ok(CancellationReport {
        max_piece_length,
        min_relator_length: min_len,
        ratio: Ratio::new(max_piece_length as i64, min_len as i64),
        passes_lambda,
        witness,
    })
}

/// Quadratic scan over the materialised symmetrized set. Independent of the
/// syllable-based checker; used to cross-check it.
pub fn max_piece_by_scan(set: &SymmetrizedSet) -> usize {
    let mut best = 0;
    for (i, u) in set.elements.iter().enumerate() {
        for v in &set.elements[i + 1..] {
            let lcp = u
                .letters()
                .iter()
                .zip(v.letters())
                .take_while(|(a, b)| a == b)
                .count();
            best = best.max(lcp);
        }
    }
    best
}
