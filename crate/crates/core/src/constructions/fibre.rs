//! Fibre products `P = {(x, y) : p(x) = p(y)} < Γ × Γ`, at the level of generators.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::rips::RipsOutput;
use crate::hom::GroupHom;
use crate::oracle::{Verdict, WordProblemOracle};
use crate::word::{Letter, Sign, Word};

/// An element of Γ × Γ written componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PairWord {
    pub left: Word,
    pub right: Word,
}

impl PairWord {
    pub fn new(left: Word, right: Word) -> Self {
        PairWord { left, right }
    }

    pub fn identity() -> Self {
        PairWord::new(Word::identity(), Word::identity())
    }

    pub fn diagonal(w: &Word) -> Self {
        PairWord::new(w.clone(), w.clone())
    }

    pub fn mul(&self, other: &PairWord) -> PairWord {
        PairWord::new(self.left.concat(&other.left), self.right.concat(&other.right))
    }

    pub fn inverse(&self) -> PairWord {
        PairWord::new(self.left.inverse(), self.right.inverse())
    }

    /// Splits a word over the product alphabet of `Γ × Γ` (left copy first,
    /// `rank` generators each) into its components.
    pub fn from_product_word(w: &Word, rank: usize) -> PairWord {
        let left = Word::reduce(w.letters().iter().copied().filter(|l| l.generator() < rank));
        let right = Word::reduce(
            w.letters()
                .iter()
                .filter(|l| l.generator() >= rank)
                .map(|l| Letter::new(l.generator() - rank, l.sign())),
        );
        PairWord::new(left, right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FibreError {
    #[error("kernel generator {index} is not certified trivial in the quotient ({verdict:?})")]
    KernelNotCertified { index: usize, verdict: Verdict },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibreData {
    pub p: GroupHom,
    pub kernel_gens: Vec<Word>,
    /// `(x, 1)` for every Γ generator, then `(1, x)`.
    pub pair_alphabet: Vec<PairWord>,
}

impl FibreData {
    /// Checks every kernel generator against the quotient oracle.
    pub fn new(p: GroupHom, kernel_gens: Vec<Word>, oracle: &dyn WordProblemOracle) -> Result<Self, FibreError> {
        for (index, k) in kernel_gens.iter().enumerate() {
            let verdict = oracle.decide(&p.apply(k));
            if verdict != Verdict::Trivial {
                return Err(FibreError::KernelNotCertified { index, verdict });
            }
        }
        let rank = p.source().rank();
        let mut pair_alphabet: Vec<PairWord> = (0..rank)
            .map(|x| PairWord::new(Word::generator(x), Word::identity()))
            .collect();
        pair_alphabet.extend((0..rank).map(|x| PairWord::new(Word::identity(), Word::generator(x))));
        Ok(FibreData {
            p,
            kernel_gens,
            pair_alphabet,
        })
    }

    /// Kernel generators of a Rips output die in Q by construction (they map
    /// to the empty word).
    pub fn from_rips(out: &RipsOutput) -> Self {
        let free = crate::oracle::FreeGroupOracle;
        FibreData::new(out.p.clone(), out.kernel_gens.clone(), &free).expect("a_1, a_2 map to the empty word")
    }
}

/// `{(a, 1) : a kernel generator} ∪ {(x, x) : x a Γ generator}`.
pub fn fibre_product_generators(f: &FibreData) -> Vec<PairWord> {
    let mut gens: Vec<PairWord> = f
        .kernel_gens
        .iter()
        .map(|a| PairWord::new(a.clone(), Word::identity()))
        .collect();
    gens.extend((0..f.p.source().rank()).map(|x| PairWord::diagonal(&Word::generator(x))));
    gens
}

/// Writes `(u, v)` as a product of fibre-product generators when `u v^-1`
/// maps to the empty word under `p` and every kernel generator is a single
/// letter. Uses `(u, v) = (u v^-1, 1) (v, v)` and expands `u v^-1` as a
/// product of conjugates `θ a^±1 θ^-1`. Returns signed generator indices into
/// [`fibre_product_generators`], or `None` outside that case.
pub fn express_in_generators(pw: &PairWord, f: &FibreData) -> Option<Vec<(usize, Sign)>> {
    let kernel_letter: Vec<usize> = f
        .kernel_gens
        .iter()
        .map(|k| (k.len() == 1 && k.letters()[0].is_positive()).then(|| k.letters()[0].generator()))
        .collect::<Option<_>>()?;
    let k = kernel_letter.len();
    let diff = pw.left.concat(&pw.right.inverse());
    if !f.p.apply(&diff).is_empty() {
        return None;
    }
    let diag = |l: Letter| (k + l.generator(), l.sign());
    let mut out = Vec::new();
    // Letters not in the kernel alphabet, as a reduced prefix θ.
    let mut theta: Vec<Letter> = Vec::new();
    for &l in diff.letters() {
        match kernel_letter.iter().position(|&g| g == l.generator()) {
            Some(idx) => {
                out.extend(theta.iter().map(|&t| diag(t)));
                out.push((idx, l.sign()));
                out.extend(theta.iter().rev().map(|&t| diag(t.inverse())));
            }
            None => {
                if theta.last().is_some_and(|&t| t.cancels(l)) {
                    theta.pop();
                } else {
                    theta.push(l);
                }
            }
        }
    }
    if !theta.is_empty() {
        return None;
    }
    out.extend(pw.right.letters().iter().map(|&l| diag(l)));
    Some(out)
}

/// Multiplies out signed generator indices.
pub fn evaluate_generators(gens: &[PairWord], word: &[(usize, Sign)]) -> PairWord {
    word.iter().fold(PairWord::identity(), |acc, &(i, s)| {
        let g = match s {
            Sign::Pos => gens[i].clone(),
            Sign::Neg => gens[i].inverse(),
        };
        acc.mul(&g)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::rips::rips;
    use crate::presentation::Presentation;

    #[test]
    fn generators_of_rips_fibre() {
        let q = Presentation::parse("gens: x\nrel: x^2").unwrap();
        let out = rips(&q, 8).unwrap();
        let f = FibreData::from_rips(&out);
        let gens = fibre_product_generators(&f);
        assert_eq!(gens.len(), 2 + 3);
        assert_eq!(gens[0], PairWord::new(Word::generator(1), Word::identity()));
        assert_eq!(gens[2], PairWord::diagonal(&Word::generator(0)));
    }

    #[test]
    fn identity_quotient_gives_diagonal() {
        let g = Presentation::free("G", &["x", "y"]);
        let id = GroupHom::new(g.clone(), g, vec![Word::generator(0), Word::generator(1)]).unwrap();
        let f = FibreData::new(id, vec![], &crate::oracle::FreeGroupOracle).unwrap();
        let gens = fibre_product_generators(&f);
        assert!(gens.iter().all(|g| g.left == g.right));
    }

    #[test]
    fn uncertified_kernel_is_rejected() {
        let g = Presentation::free("G", &["x"]);
        let id = GroupHom::new(g.clone(), g, vec![Word::generator(0)]).unwrap();
        let err = FibreData::new(id, vec![Word::generator(0)], &crate::oracle::FreeGroupOracle);
        assert!(err.is_err());
    }

    #[test]
    fn express_round_trip() {
        let q = Presentation::free("F", &["x"]);
        let out = rips(&q, 8).unwrap();
        let f = FibreData::from_rips(&out);
        let gens = fibre_product_generators(&f);
        let u = Word::from_signed(&[1, 2, -1, 3]);
        let v = Word::from_signed(&[1, -3, -1]);
        // p(u v^-1) = x x^-1 x x^-1 = 1 in the free group.
        let pw = PairWord::new(u, v);
        let expr = express_in_generators(&pw, &f).unwrap();
        assert_eq!(evaluate_generators(&gens, &expr), pw);
    }
}
