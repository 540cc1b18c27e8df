//! Homomorphisms between presented groups, given on generators.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::oracle::{Verdict, WordProblemOracle};
use crate::presentation::Presentation;
use crate::word::{Sign, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("image of generator {index} leaves the target alphabet")]
    ImageOutOfRange { index: usize },
}

/// A map `source -> target` given by one target word per source generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupHom {
    source: Presentation,
    target: Presentation,
    images: Vec<Word>,
}

impl GroupHom {
    pub fn new(source: Presentation, target: Presentation, images: Vec<Word>) -> Result<Self, HomError> {
        if images.len() != source.rank() {
            return Err(HomError::ImageCount {
                expected: source.rank(),
                got: images.len(),
            });
        }
        if let Some(index) = images.iter().position(|w| w.rank_bound() > target.rank()) {
            return Err(HomError::ImageOutOfRange { index });
        }
        Ok(GroupHom {
            source,
            target,
            images,
        })
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Substitutes generator images (inverted for negative letters) and reduces.
    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(|l| match l.sign() {
            Sign::Pos => self.images[l.generator()].clone(),
            Sign::Neg => self.images[l.generator()].inverse(),
        })
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupHom) -> GroupHom {
        GroupHom {
            source: self.source.clone(),
            target: other.target.clone(),
            images: self.images.iter().map(|w| other.apply(w)).collect(),
        }
    }

    /// Checks that every source relator maps to a word the oracle calls trivial.
    /// Returns the verdict per relator.
    pub fn check_relators(&self, oracle: &dyn WordProblemOracle) -> Vec<Verdict> {
        self.source
            .relators()
            .iter()
            .map(|r| oracle.decide(&self.apply(r)))
            .collect()
    }

    pub fn is_well_defined(&self, oracle: &dyn WordProblemOracle) -> bool {
        self.check_relators(oracle)
            .iter()
            .all(|v| *v == Verdict::Trivial)
    }
}

/// Convenience wrapper around [`GroupHom::apply`].
pub fn apply_hom(h: &GroupHom, w: &Word) -> Word {
    h.apply(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::FreeGroupOracle;
    use proptest::prelude::*;

    fn to_z() -> GroupHom {
        let src = Presentation::free("F2", &["a", "b"]);
        let tgt = Presentation::free("Z", &["t"]);
        GroupHom::new(src, tgt, vec![Word::generator(0), Word::identity()]).unwrap()
    }

    #[test]
    fn abelianization_to_z_example() {
        let h = to_z();
        assert_eq!(h.apply(&Word::identity()), Word::identity());
        let w = Word::from_signed(&[1, 2, 1, -2]);
        assert_eq!(h.apply(&w), Word::from_signed(&[1, 1]));
    }

    #[test]
    fn image_count_checked() {
        let src = Presentation::free("F2", &["a", "b"]);
        let tgt = Presentation::free("Z", &["t"]);
        assert!(matches!(
            GroupHom::new(src.clone(), tgt.clone(), vec![Word::generator(0)]),
            Err(HomError::ImageCount { .. })
        ));
        assert!(matches!(
            GroupHom::new(src, tgt, vec![Word::generator(1), Word::identity()]),
            Err(HomError::ImageOutOfRange { index: 0 })
        ));
    }

    #[test]
    fn free_source_is_always_well_defined() {
        assert!(to_z().is_well_defined(&FreeGroupOracle));
    }

    proptest! {
        #[test]
        fn apply_is_a_monoid_map(u in prop::collection::vec(prop_oneof![Just(1), Just(-1), Just(2), Just(-2)], 0..12),
                                 v in prop::collection::vec(prop_oneof![Just(1), Just(-1), Just(2), Just(-2)], 0..12)) {
            let src = Presentation::free("F2", &["a", "b"]);
            let tgt = Presentation::free("F2", &["x", "y"]);
            let h = GroupHom::new(src, tgt, vec![Word::from_signed(&[1, 2, 1]), Word::from_signed(&[-2, 1])]).unwrap();
            let (u, v) = (Word::from_signed(&u), Word::from_signed(&v));
            prop_assert_eq!(h.apply(&u.concat(&v)), h.apply(&u).concat(&h.apply(&v)));
        }
    }
}
