//! RAAG presentations and direct products.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::hom::GroupHom;
use crate::presentation::{Presentation, PresentationError};
use crate::word::Word;

/// Generator names used for RAAG vertices.
pub fn raag_generator_name(i: usize) -> String {
    format!("v{i}")
}

/// `<v_0..v_{n-1} | [v_i, v_j] for each edge>`, edges in sorted order.
pub fn build_raag(g: &Graph) -> Presentation {
    let alphabet = (0..g.n()).map(raag_generator_name).collect();
    let relators = g
        .edges()
        .map(|(i, j)| Word::commutator(&Word::generator(i), &Word::generator(j)))
        .collect();
    Presentation::new(format!("A(n={},e={})", g.n(), g.edge_count()), alphabet, relators)
        .expect("RAAG generator names are distinct")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectProduct {
    pub product: Presentation,
    pub left: GroupHom,
    pub right: GroupHom,
}

/// `p1 × p2`: disjoint alphabets, both relator sets and every cross commutator
/// `[x, y]` (x from `p1` in the outer loop). Colliding names get `_1` / `_2`
/// suffixes on every generator.
pub fn direct_product(p1: &Presentation, p2: &Presentation) -> Result<DirectProduct, PresentationError> {
    let names1: HashSet<&str> = p1.alphabet().iter().map(String::as_str).collect();
    let collide = p2.alphabet().iter().any(|g| names1.contains(g.as_str()));
    let rename = |alpha: &[String], suffix: &str| -> Vec<String> {
        alpha
            .iter()
            .map(|g| if collide { format!("{g}{suffix}") } else { g.clone() })
            .collect()
    };
    let mut alphabet = rename(p1.alphabet(), "_1");
    alphabet.extend(rename(p2.alphabet(), "_2"));

    let m = p1.rank();
    let shift = |w: &Word| w.substitute(|l| Word::letter(crate::word::Letter::new(l.generator() + m, l.sign())));
    let mut relators: Vec<Word> = p1.relators().to_vec();
    relators.extend(p2.relators().iter().map(shift));
    for x in 0..m {
        for y in 0..p2.rank() {
            relators.push(Word::commutator(&Word::generator(x), &Word::generator(m + y)));
        }
    }
    let product = Presentation::new(format!("{}x{}", p1.name(), p2.name()), alphabet, relators)?;
    let left = GroupHom::new(p1.clone(), product.clone(), (0..m).map(Word::generator).collect())
        .expect("left injection is well formed");
    let right = GroupHom::new(
        p2.clone(),
        product.clone(),
        (0..p2.rank()).map(|y| Word::generator(m + y)).collect(),
    )
    .expect("right injection is well formed");
    Ok(DirectProduct { product, left, right })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn raag_examples() {
        assert!(build_raag(&Graph::empty(2)).relators().is_empty());
        assert_eq!(build_raag(&Graph::complete(3)).relators().len(), 3);
        let z2 = build_raag(&Graph::complete(2));
        assert_eq!(z2.relators(), &[Word::from_signed(&[1, 2, -1, -2])]);
    }

    #[test]
    fn products() {
        let f2 = Presentation::free("F2", &["a", "b"]);
        let d = direct_product(&f2, &f2).unwrap();
        assert_eq!(d.product.rank(), 4);
        assert_eq!(d.product.relators().len(), 4);
        assert_eq!(d.product.alphabet()[0], "a_1");
        let z = Presentation::free("Z", &["t"]);
        let zz = direct_product(&z, &Presentation::free("Z", &["s"])).unwrap();
        assert_eq!(zz.product.alphabet(), &["t".to_string(), "s".to_string()]);
        assert_eq!(zz.product.relators().len(), 1);
    }

    #[test]
    fn product_of_raags_is_raag_of_join() {
        for g1 in Graph::isomorphism_classes(3) {
            for g2 in Graph::isomorphism_classes(2) {
                let d = direct_product(&build_raag(&g1), &build_raag(&g2)).unwrap();
                let joined = build_raag(&g1.join(&g2));
                let a: BTreeSet<_> = d.product.relators().iter().cloned().collect();
                let b: BTreeSet<_> = joined.relators().iter().cloned().collect();
                assert_eq!(a, b);
            }
        }
    }
}
