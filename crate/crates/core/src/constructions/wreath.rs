//! Wreath products `K ≀ G` for a finite index set `G` and the standard
//! embedding `H -> K ≀ (H/K)` attached to a coset table.
//!
//! Elements act on the right: `top[c]` is the image of `c`, and
//! `(σ, k) · (τ, l) = (τ ∘ σ, c ↦ k[c] · l[σ(c)])`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::coset::CosetTable;
use crate::matrix::IntMatrix;
use crate::word::Word;

/// Base-group elements usable as wreath bottoms.
pub trait WreathBase: Clone + PartialEq {
    fn compose(&self, other: &Self) -> Self;
}

impl WreathBase for Word {
    fn compose(&self, other: &Self) -> Self {
        self.concat(other)
    }
}

impl WreathBase for IntMatrix {
    fn compose(&self, other: &Self) -> Self {
        self * other
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WreathError {
    #[error("top is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("expected {expected} bottom entries, got {got}")]
    BottomLength { expected: usize, got: usize },
    #[error("transversal has {got} entries for {expected} cosets")]
    TransversalLength { expected: usize, got: usize },
    #[error("transversal word {0} does not lie in its coset")]
    TransversalMismatch(usize),
    #[error("transversal word 0 must be the identity")]
    TransversalBase,
    #[error("bottom entry {0} does not fix coset 0")]
    BottomOutsideSubgroup(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathElement<B> {
    pub top: Vec<usize>,
    pub bottom: Vec<B>,
}

impl<B: WreathBase> WreathElement<B> {
    pub fn new(top: Vec<usize>, bottom: Vec<B>) -> Result<Self, WreathError> {
        let n = top.len();
        let mut hit = vec![false; n];
        for &t in &top {
            if t >= n || std::mem::replace(&mut hit[t], true) {
                return Err(WreathError::NotAPermutation(n));
            }
        }
        if bottom.len() != n {
            return Err(WreathError::BottomLength {
                expected: n,
                got: bottom.len(),
            });
        }
        Ok(WreathElement { top, bottom })
    }

    pub fn degree(&self) -> usize {
        self.top.len()
    }

    pub fn compose(&self, other: &Self) -> Self {
        let top = self.top.iter().map(|&c| other.top[c]).collect();
        let bottom = self
            .bottom
            .iter()
            .zip(&self.top)
            .map(|(k, &c)| k.compose(&other.bottom[c]))
            .collect();
        WreathElement { top, bottom }
    }
}

/// `h ↦ (c ↦ c·h, c ↦ t_c h t_{c·h}^-1)`. Each bottom entry fixes coset 0,
/// so it lies in the subgroup `K` the table enumerates.
pub fn wreath_embed(h: &Word, t: &CosetTable, transversal: &[Word]) -> Result<WreathElement<Word>, WreathError> {
    let n = t.index();
    if transversal.len() != n {
        return Err(WreathError::TransversalLength {
            expected: n,
            got: transversal.len(),
        });
    }
    if !transversal[0].is_empty() {
        return Err(WreathError::TransversalBase);
    }
    if let Some(c) = (0..n).find(|&c| t.act_word(0, &transversal[c]) != c) {
        return Err(WreathError::TransversalMismatch(c));
    }
    let top: Vec<usize> = (0..n).map(|c| t.act_word(c, h)).collect();
    let mut bottom = Vec::with_capacity(n);
    for c in 0..n {
        let k = transversal[c].concat(h).concat(&transversal[top[c]].inverse());
        if t.act_word(0, &k) != 0 {
            return Err(WreathError::BottomOutsideSubgroup(c));
        }
        bottom.push(k);
    }
    WreathElement::new(top, bottom)
}
