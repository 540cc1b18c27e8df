//! Membership in fibre products and the conjugacy reduction built on it.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::fibre::{FibreData, PairWord};
use crate::constructions::rips::RipsOutput;
use crate::oracle::{Verdict, WordProblemOracle};
use crate::word::{Letter, Sign, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Membership {
    Member,
    NonMember,
    Unknown,
}

/// `(u, v) ∈ P` iff `p(u v^-1) = 1` in Q, as decided by `oracle`.
pub fn membership_query(pw: &PairWord, f: &FibreData, oracle: &dyn WordProblemOracle) -> Membership {
    let diff = pw.left.concat(&pw.right.inverse());
    match oracle.decide(&f.p.apply(&diff)) {
        Verdict::Trivial => Membership::Member,
        Verdict::Nontrivial => Membership::NonMember,
        Verdict::Unknown => Membership::Unknown,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("expected {expected} entries, got {got}")]
    EntryCount { expected: usize, got: usize },
    #[error("entry {0} uses a letter outside the inner alphabet")]
    OutOfRange(usize),
}

/// Words `u_{b,ε,a}` over the inner alphabet `A` with `b^ε a b^-ε = u_{b,ε,a}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugationTable {
    pub outer: Vec<String>,
    pub inner: Vec<String>,
    /// Indexed by `(2b + [ε = -1]) · |A| + a`.
    entries: Vec<Word>,
}

impl ConjugationTable {
    pub fn new(outer: Vec<String>, inner: Vec<String>, entries: Vec<Word>) -> Result<Self, TableError> {
        let expected = 2 * outer.len() * inner.len();
        if entries.len() != expected {
            return Err(TableError::EntryCount {
                expected,
                got: entries.len(),
            });
        }
        if let Some(i) = entries.iter().position(|w| w.rank_bound() > inner.len()) {
            return Err(TableError::OutOfRange(i));
        }
        Ok(ConjugationTable { outer, inner, entries })
    }

    pub fn entry(&self, b: usize, sign: Sign, a: usize) -> &Word {
        let row = 2 * b + usize::from(sign == Sign::Neg);
        &self.entries[row * self.inner.len() + a]
    }

    /// Longest entry, at least 1.
    pub fn max_entry_len(&self) -> usize {
        self.entries.iter().map(Word::len).max().unwrap_or(0).max(1)
    }

    /// Table for a Rips group: `B` is the Γ alphabet, `A = {a_1, a_2}`.
    pub fn from_rips(out: &RipsOutput) -> Self {
        let [a1, a2] = out.kernel_letters();
        let inner_index = |g: usize| if g == a1 { 0 } else { 1 };
        let to_inner = |w: &Word| Word::reduce(w.letters().iter().map(|l| Letter::new(inner_index(l.generator()), l.sign())));
        let alphabet = out.gamma.alphabet();
        let m = out.quotient().rank();
        let mut entries = Vec::new();
        for b in 0..alphabet.len() {
            for sign in [Sign::Pos, Sign::Neg] {
                for l in 0..2 {
                    let w = if b < m {
                        out.padding_word(out.conjugation_index(b, l, sign))
                    } else {
                        let x = Word::letter(Letter::new(b, sign));
                        Word::generator([a1, a2][l]).conjugate_by(&x)
                    };
                    entries.push(to_inner(&w));
                }
            }
        }
        ConjugationTable::new(
            alphabet.to_vec(),
            vec![alphabet[a1].clone(), alphabet[a2].clone()],
            entries,
        )
        .expect("Rips conjugation table is total")
    }

    /// Table for the product: outer `B ⊔ B`, inner `A ⊔ A`; the two factors commute.
    pub fn squared(&self) -> Self {
        let (nb, na) = (self.outer.len(), self.inner.len());
        let suffix = |names: &[String]| -> Vec<String> {
            let mut out: Vec<String> = names.iter().map(|n| format!("{n}_1")).collect();
            out.extend(names.iter().map(|n| format!("{n}_2")));
            out
        };
        let shift = |w: &Word, by: usize| Word::reduce(w.letters().iter().map(|l| Letter::new(l.generator() + by, l.sign())));
        let mut entries = Vec::with_capacity(8 * nb * na);
        for side in 0..2 {
            for b in 0..nb {
                for sign in [Sign::Pos, Sign::Neg] {
                    for a_side in 0..2 {
                        for a in 0..na {
                            entries.push(if side == a_side {
                                shift(self.entry(b, sign, a), side * na)
                            } else {
                                Word::generator(a_side * na + a)
                            });
                        }
                    }
                }
            }
        }
        ConjugationTable::new(suffix(&self.outer), suffix(&self.inner), entries)
            .expect("squared table is total")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyRewrite {
    /// `w'` over the inner alphabet.
    pub word: Word,
    /// Length after peeling `0, 1, .., |w|` letters of `w`.
    pub lengths: Vec<usize>,
    /// `|a| · C^|w|` with `C` the longest table entry (saturating).
    pub envelope: u128,
}

impl ConjugacyRewrite {
    pub fn within_envelope(&self) -> bool {
        (self.word.len() as u128) <= self.envelope
    }
}

/// Rewrites `w a w^-1` as a word over `A` by peeling the letters of `w` from the
/// inside out, substituting `b^ε α b^-ε ↦ u_{b,ε,α}` letter by letter.
pub fn conjugacy_rewrite(w: &Word, a: &Word, tbl: &ConjugationTable) -> ConjugacyRewrite {
    let mut cur = a.clone();
    let mut lengths = vec![cur.len()];
    for &b in w.letters().iter().rev() {
        cur = cur.substitute(|alpha| {
            let u = tbl.entry(b.generator(), b.sign(), alpha.generator());
            match alpha.sign() {
                Sign::Pos => u.clone(),
                Sign::Neg => u.inverse(),
            }
        });
        lengths.push(cur.len());
    }
    let c = tbl.max_entry_len() as u128;
    let envelope = (0..w.len()).fold(a.len() as u128, |acc, _| acc.saturating_mul(c));
    ConjugacyRewrite {
        word: cur,
        lengths,
        envelope,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConjugacyVerdict {
    ConjugateInP,
    NotConjugate,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyAnswer {
    pub verdict: ConjugacyVerdict,
    pub rewrite: ConjugacyRewrite,
    /// `h ∈ P` with `h^-1 a h = w'` when the verdict is positive (`h = w^-1`).
    pub witness: Option<PairWord>,
}

/// Decides whether `w' = conjugacy_rewrite(w, a)` is conjugate to `a` in `P`.
/// `w` is a word over the `Γ × Γ` alphabet (left copy first), `tbl` the
/// squared table, and the answer follows the membership of `w` in `P`.
pub fn conjugacy_reduction_query(
    w: &Word,
    a: &Word,
    f: &FibreData,
    tbl: &ConjugationTable,
    oracle: &dyn WordProblemOracle,
) -> ConjugacyAnswer {
    let rewrite = conjugacy_rewrite(w, a, tbl);
    let pw = PairWord::from_product_word(w, f.p.source().rank());
    let (verdict, witness) = match membership_query(&pw, f, oracle) {
        Membership::Member => (ConjugacyVerdict::ConjugateInP, Some(pw.inverse())),
        Membership::NonMember => (ConjugacyVerdict::NotConjugate, None),
        Membership::Unknown => (ConjugacyVerdict::Unknown, None),
    };
    ConjugacyAnswer {
        verdict,
        rewrite,
        witness,
    }
}
