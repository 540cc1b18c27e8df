//! The classical small-cancellation Rips construction.
//!
//! Given `Q = <x_1..x_m | r_1..r_k>` the output is
//! `Γ = <x_1..x_m, a_1, a_2 | r_i u_i^-1, x_j^ε a_l x_j^-ε w_{j,l,ε}^-1>`
//! with padding words `u`, `w` over `{a_1, a_2}`, together with the
//! epimorphism `p: Γ -> Q` killing `a_1`, `a_2`.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hom::GroupHom;
use crate::presentation::Presentation;
use crate::solvers::small_cancellation::{check_small_cancellation, CancellationReport};
use crate::word::{Letter, Sign, Word};

pub const MIN_BLOCKS: usize = 8;
const MAX_DOUBLINGS: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RipsError {
    #[error("the quotient presentation has no generators")]
    NoGenerators,
    #[error("block count must be at least {MIN_BLOCKS}, got {0}")]
    TooFewBlocks(usize),
    #[error("no certified padding found up to {0} blocks")]
    NotCertified(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaddingParams {
    /// Block count `L` actually used.
    pub blocks: usize,
    pub requested_blocks: usize,
    pub doublings: u32,
    /// Offset `o_t` of padding word `t`; word `t` uses `a_2`-exponents
    /// `o_t, o_t + 1, .., o_t + L - 1`.
    pub offsets: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RipsOutput {
    pub gamma: Presentation,
    pub p: GroupHom,
    pub kernel_gens: Vec<Word>,
    pub padding: PaddingParams,
    pub report: CancellationReport,
}

/// `∏_{s<L} a1 · a2^(offset+s)`.
pub fn padding_word(blocks: usize, offset: u64, a1: usize, a2: usize) -> Word {
    let mut letters = Vec::new();
    for s in 0..blocks as u64 {
        letters.push(Letter::pos(a1));
        letters.extend(std::iter::repeat(Letter::pos(a2)).take((offset + s) as usize));
    }
    Word::reduce(letters)
}

fn fresh_name(base: &str, taken: &[String]) -> String {
    let mut name = base.to_string();
    while taken.iter().any(|g| *g == name) {
        name.push('_');
    }
    name
}

/// Offsets for `count` padding words: `o_0 = L + 1`, `o_t = o_{t-1} + L`.
pub fn offset_schedule(blocks: usize, count: usize) -> Vec<u64> {
    let l = blocks as u64;
    (0..count as u64).map(|t| l + 1 + t * l).collect()
}

impl RipsOutput {
    pub fn quotient(&self) -> &Presentation {
        self.p.target()
    }

    /// Generator indices of `a_1`, `a_2` in Γ.
    pub fn kernel_letters(&self) -> [usize; 2] {
        let m = self.quotient().rank();
        [m, m + 1]
    }

    /// Index of the padding word used for `x_j^ε a_l x_j^-ε`.
    pub fn conjugation_index(&self, j: usize, l: usize, sign: Sign) -> usize {
        self.quotient().relators().len() + 4 * j + 2 * l + usize::from(sign == Sign::Neg)
    }

    pub fn padding_word(&self, t: usize) -> Word {
        let [a1, a2] = self.kernel_letters();
        padding_word(self.padding.blocks, self.padding.offsets[t], a1, a2)
    }
}

fn assemble(q: &Presentation, blocks: usize, a_names: &[String; 2]) -> (Presentation, Vec<u64>) {
    let m = q.rank();
    let (a1, a2) = (m, m + 1);
    let count = q.relators().len() + 4 * m;
    let offsets = offset_schedule(blocks, count);
    let pad = |t: usize| padding_word(blocks, offsets[t], a1, a2);

    let mut relators = Vec::with_capacity(count);
    for (i, r) in q.relators().iter().enumerate() {
        relators.push(r.concat(&pad(i).inverse()));
    }
    let mut t = q.relators().len();
    for j in 0..m {
        for a in [a1, a2] {
            for sign in [Sign::Pos, Sign::Neg] {
                let x = Word::letter(Letter::new(j, sign));
                let lhs = Word::generator(a).conjugate_by(&x);
                relators.push(lhs.concat(&pad(t).inverse()));
                t += 1;
            }
        }
    }
    let mut alphabet = q.alphabet().to_vec();
    alphabet.extend(a_names.iter().cloned());
    let base = if q.name().is_empty() { "Q" } else { q.name() };
    let gamma = Presentation::new(format!("rips({base})"), alphabet, relators)
        .expect("Rips generator names are fresh");
    (gamma, offsets)
}

/// Builds Γ with `blocks` padding blocks, doubling until the checker
/// certifies C'(1/6).
pub fn rips(q: &Presentation, blocks: usize) -> Result<RipsOutput, RipsError> {
    if q.rank() == 0 {
        return Err(RipsError::NoGenerators);
    }
    if blocks < MIN_BLOCKS {
        return Err(RipsError::TooFewBlocks(blocks));
    }
    let a_names = [fresh_name("a1", q.alphabet()), fresh_name("a2", q.alphabet())];
    let mut l = blocks;
    for doublings in 0..=MAX_DOUBLINGS {
        let (gamma, offsets) = assemble(q, l, &a_names);
        let report = check_small_cancellation(&gamma, Ratio::new(1, 6))
            .expect("Rips output always has relators");
        if report.passes(Ratio::new(1, 6)) {
            let m = q.rank();
            let mut images: Vec<Word> = (0..m).map(Word::generator).collect();
            images.extend([Word::identity(), Word::identity()]);
            let p = GroupHom::new(gamma.clone(), q.clone(), images).expect("projection is well formed");
            return Ok(RipsOutput {
                gamma,
                p,
                kernel_gens: vec![Word::generator(m), Word::generator(m + 1)],
                padding: PaddingParams {
                    blocks: l,
                    requested_blocks: blocks,
                    doublings,
                    offsets,
                },
                report,
            });
        }
        l *= 2;
    }
    Err(RipsError::NotCertified(l / 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relator_counts() {
        let q = Presentation::parse("gens: x\nrel: x^2").unwrap();
        let out = rips(&q, 8).unwrap();
        assert_eq!(out.gamma.rank(), 3);
        assert_eq!(out.gamma.relators().len(), 5);
        assert!(out.report.passes(Ratio::new(1, 6)));

        let f2 = Presentation::free("F2", &["x", "y"]);
        let out = rips(&f2, 8).unwrap();
        assert_eq!(out.gamma.rank(), 4);
        assert_eq!(out.gamma.relators().len(), 8);
    }

    #[test]
    fn offsets_are_disjoint_and_above_block_count() {
        let o = offset_schedule(8, 5);
        assert!(o[0] > 8);
        for w in o.windows(2) {
            assert_eq!(w[1], w[0] + 8);
        }
    }

    #[test]
    fn kernel_letters_die_in_the_quotient() {
        let q = Presentation::parse("gens: x y\nrel: [x,y]").unwrap();
        let out = rips(&q, 8).unwrap();
        for k in &out.kernel_gens {
            assert!(out.p.apply(k).is_empty());
        }
        // Every Γ relator maps to a conjugate of a Q relator or to the identity.
        for r in out.gamma.relators() {
            let image = out.p.apply(r);
            assert!(image.is_empty() || image.cyclic_reduce().0.len() == 4);
        }
    }

    #[test]
    fn name_collisions_are_avoided() {
        let q = Presentation::free("Q", &["a1", "a2"]);
        let out = rips(&q, 8).unwrap();
        assert_eq!(out.gamma.alphabet()[2], "a1_");
    }
}
