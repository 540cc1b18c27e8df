//! Reidemeister–Schreier presentations of finite-index subgroups.
//!
//! Schreier generators are the non-tree pairs `(c, x)` of the breadth-first
//! spanning tree, named `{x}_{c}`, standing for `t_c x t_{c·x}^-1`.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use super::coset::CosetTable;
use crate::hom::GroupHom;
use crate::presentation::Presentation;
use crate::word::{Letter, Sign, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchreierError {
    #[error("word does not lie in the subgroup: it sends coset 0 to coset {0}")]
    NotInSubgroup(usize),
    #[error("coset table does not close the presentation")]
    TableMismatch,
}

/// Numbering of Schreier generators for one table.
#[derive(Debug, Clone)]
pub struct SchreierBasis {
    /// `index[(coset, generator)]` for non-tree pairs.
    index: HashMap<(usize, usize), usize>,
    pairs: Vec<(usize, usize)>,
    transversal: Vec<Word>,
}

impl SchreierBasis {
    pub fn new(t: &CosetTable) -> Self {
        let tree: BTreeSet<(usize, usize)> = t.tree_edges().into_iter().collect();
        let mut pairs = Vec::new();
        for c in 0..t.index() {
            for x in 0..t.rank {
                if !tree.contains(&(c, x)) {
                    pairs.push((c, x));
                }
            }
        }
        let index = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        SchreierBasis {
            index,
            pairs,
            transversal: t.transversal(),
        }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn transversal(&self) -> &[Word] {
        &self.transversal
    }

    /// `t_c x t_{c·x}^-1` as a word in the ambient group.
    pub fn generator_word(&self, t: &CosetTable, i: usize) -> Word {
        let (c, x) = self.pairs[i];
        let d = t.act(c, Letter::pos(x));
        self.transversal[c]
            .concat(&Word::generator(x))
            .concat(&self.transversal[d].inverse())
    }

    /// Rewrites `w` read from coset `start`; returns the Schreier word and the end coset.
    pub fn rewrite_from(&self, t: &CosetTable, start: usize, w: &Word) -> (Word, usize) {
        let mut c = start;
        let mut out = Vec::new();
        for &l in w.letters() {
            let x = l.generator();
            match l.sign() {
                Sign::Pos => {
                    if let Some(&i) = self.index.get(&(c, x)) {
                        out.push(Letter::pos(i));
                    }
                    c = t.act(c, l);
                }
                Sign::Neg => {
                    let d = t.act(c, l);
                    if let Some(&i) = self.index.get(&(d, x)) {
                        out.push(Letter::neg(i));
                    }
                    c = d;
                }
            }
        }
        (Word::reduce(out), c)
    }
}

fn generator_names(p: &Presentation, basis: &SchreierBasis) -> Vec<String> {
    basis
        .pairs
        .iter()
        .map(|&(c, x)| format!("{}_{}", p.alphabet()[x], c))
        .collect()
}

/// Presentation of the subgroup whose cosets `t` enumerates, with the inclusion
/// into `p`. Relators are the rewritten conjugates `t_c r t_c^-1`,
/// deduplicated, in order of coset then relator.
pub fn reidemeister_schreier(p: &Presentation, t: &CosetTable) -> Result<(Presentation, GroupHom), SchreierError> {
    if !t.verify(p) {
        return Err(SchreierError::TableMismatch);
    }
    let basis = SchreierBasis::new(t);
    let mut seen = BTreeSet::new();
    let mut relators = Vec::new();
    for c in 0..t.index() {
        for r in p.relators() {
            let (w, end) = basis.rewrite_from(t, c, r);
            debug_assert_eq!(end, c);
            let core = w.cyclic_reduce().0;
            if !core.is_empty() && seen.insert(core.clone()) {
                relators.push(core);
            }
        }
    }
    let names = generator_names(p, &basis);
    let base = if p.name().is_empty() { "G" } else { p.name() };
    let sub = Presentation::new(format!("{base}_index{}", t.index()), names, relators)
        .expect("Schreier generator names are distinct");
    let images = (0..basis.pairs.len()).map(|i| basis.generator_word(t, i)).collect();
    let inclusion = GroupHom::new(sub.clone(), p.clone(), images).expect("inclusion is well formed");
    Ok((sub, inclusion))
}

/// Expresses a subgroup word in Schreier generators, matching the numbering
/// of [`reidemeister_schreier`].
pub fn schreier_rewrite(w: &Word, t: &CosetTable) -> Result<Word, SchreierError> {
    SchreierBasis::new(t).rewrite(t, w)
}

impl SchreierBasis {
    pub fn rewrite(&self, t: &CosetTable, w: &Word) -> Result<Word, SchreierError> {
        let (out, end) = self.rewrite_from(t, 0, w);
        if end != 0 {
            return Err(SchreierError::NotInSubgroup(end));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::coset::todd_coxeter;
    use crate::solvers::snf::abelianization;

    #[test]
    fn kernel_onto_z2_is_free_of_rank_three() {
        let f2 = Presentation::free("F2", &["a", "b"]);
        let t = CosetTable::from_permutations(&[vec![1, 0], vec![1, 0]]).unwrap();
        let (sub, inc) = reidemeister_schreier(&f2, &t).unwrap();
        assert_eq!(sub.rank(), 3);
        assert!(sub.relators().is_empty());
        assert_eq!(inc.images().len(), 3);
    }

    #[test]
    fn cyclic_subgroup_of_z6() {
        let p = Presentation::parse("gens: a\nrel: a^6").unwrap();
        let t = todd_coxeter(&p, &[p.parse_word("a^2").unwrap()], 100).unwrap();
        let (sub, _) = reidemeister_schreier(&p, &t).unwrap();
        let ab = abelianization(&sub);
        assert_eq!((ab.free_rank, ab.torsion), (0, vec![3]));
    }

    #[test]
    fn index_one_keeps_the_presentation() {
        let p = Presentation::parse("gens: a b\nrel: [a,b]^2").unwrap();
        let t = todd_coxeter(&p, &[Word::generator(0), Word::generator(1)], 10).unwrap();
        let (sub, inc) = reidemeister_schreier(&p, &t).unwrap();
        assert_eq!(sub.alphabet(), &["a_0".to_string(), "b_0".to_string()]);
        assert_eq!(sub.relators(), p.relators());
        assert_eq!(inc.images(), &[Word::generator(0), Word::generator(1)]);
    }

    #[test]
    fn rewrite_then_include_is_identity() {
        let p = Presentation::free("F1", &["a"]);
        let t = CosetTable::from_permutations(&[vec![1, 0]]).unwrap();
        let (_, inc) = reidemeister_schreier(&p, &t).unwrap();
        let w = Word::from_signed(&[1, 1]);
        let s = schreier_rewrite(&w, &t).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(inc.apply(&s), w);
        assert!(schreier_rewrite(&Word::generator(0), &t).is_err());
        assert_eq!(schreier_rewrite(&Word::identity(), &t).unwrap(), Word::identity());
    }
}
