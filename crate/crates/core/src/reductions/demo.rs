//! A decidable instance for the conjugacy reduction: the mapping torus
//! `Γ = F(a1, a2) ⋊ <t>` of `φ: a1 ↦ a2, a2 ↦ a1 a2`, with `p: Γ -> Z` reading
//! the `t`-exponent. Kernel `F(a1, a2)` is finitely generated and normal.
//! Elements have the exact normal form `u · t^k`, `u` a reduced word in `a1, a2`.

use crate::constructions::fibre::FibreData;
use crate::hom::GroupHom;
use crate::oracle::{FreeAbelianOracle, Verdict, WordProblemOracle};
use crate::presentation::Presentation;
use crate::reductions::fibre::ConjugationTable;
use crate::word::{Letter, Sign, Word};

pub const A1: usize = 0;
pub const A2: usize = 1;
pub const TT: usize = 2;

#[derive(Debug, Clone)]
pub struct MappingTorus {
    /// Images of `a1`, `a2` under `φ` and under `φ^-1`.
    forward: [Word; 2],
    backward: [Word; 2],
}

impl Default for MappingTorus {
    fn default() -> Self {
        MappingTorus {
            forward: [Word::generator(A2), Word::from_signed(&[1, 2])],
            backward: [Word::from_signed(&[2, -1]), Word::generator(A1)],
        }
    }
}

impl MappingTorus {
    /// `<a1, a2, t | t a_l t^-1 = φ(a_l)>`.
    pub fn presentation(&self) -> Presentation {
        let relators = (0..2)
            .map(|l| Word::generator(l).conjugate_by(&Word::generator(TT)).concat(&self.forward[l].inverse()))
            .collect();
        Presentation::new("F2xphiZ", vec!["a1".into(), "a2".into(), "t".into()], relators)
            .expect("static presentation")
    }

    /// `φ^k` applied to a word over `a1, a2`.
    pub fn twist(&self, w: &Word, k: i64) -> Word {
        let images = if k >= 0 { &self.forward } else { &self.backward };
        (0..k.unsigned_abs()).fold(w.clone(), |acc, _| {
            acc.substitute(|l| match l.sign() {
                Sign::Pos => images[l.generator()].clone(),
                Sign::Neg => images[l.generator()].inverse(),
            })
        })
    }

    /// `(u, k)` with `w = u · t^k`.
    pub fn normal_form(&self, w: &Word) -> (Word, i64) {
        let mut u = Word::identity();
        let mut k = 0i64;
        for &l in w.letters() {
            if l.generator() == TT {
                k += l.sign().as_i64();
            } else {
                // t^k α = φ^k(α) t^k
                u = u.concat(&self.twist(&Word::letter(l), k));
            }
        }
        (u, k)
    }

    pub fn projection(&self) -> GroupHom {
        let z = Presentation::free("Z", &["t"]);
        GroupHom::new(
            self.presentation(),
            z,
            vec![Word::identity(), Word::identity(), Word::generator(0)],
        )
        .expect("projection is well formed")
    }

    pub fn fibre_data(&self) -> FibreData {
        FibreData::new(
            self.projection(),
            vec![Word::generator(A1), Word::generator(A2)],
            &FreeAbelianOracle { rank: 1 },
        )
        .expect("a1, a2 have zero t-exponent")
    }

    /// `B = {a1, a2, t}`, `A = {a1, a2}`.
    pub fn conjugation_table(&self) -> ConjugationTable {
        let mut entries = Vec::new();
        for b in 0..3 {
            for sign in [Sign::Pos, Sign::Neg] {
                for a in 0..2 {
                    entries.push(if b == TT {
                        self.twist(&Word::generator(a), sign.as_i64())
                    } else {
                        Word::generator(a).conjugate_by(&Word::letter(Letter::new(b, sign)))
                    });
                }
            }
        }
        ConjugationTable::new(
            vec!["a1".into(), "a2".into(), "t".into()],
            vec!["a1".into(), "a2".into()],
            entries,
        )
        .expect("table is total")
    }
}

impl WordProblemOracle for MappingTorus {
    fn decide(&self, w: &Word) -> Verdict {
        let (u, k) = self.normal_form(w);
        if u.is_empty() && k == 0 {
            Verdict::Trivial
        } else {
            Verdict::Nontrivial
        }
    }
}
