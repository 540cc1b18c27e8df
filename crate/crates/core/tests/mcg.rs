use proptest::prelude::*;

use forge_core::constructions::WreathElement;
use forge_core::matrix::IntMatrix;
use forge_core::mcg::{
    block_wreath_embed, curve_system_from_graph, is_symplectic, pairing, raag_symplectic_rep, transvection,
    wreath_genus, CurveClass,
};
use forge_core::Graph;

fn primitive(dim: usize) -> impl Strategy<Value = CurveClass> {
    prop::collection::vec(-3i64..=3, dim)
        .prop_map(CurveClass::new)
        .prop_filter_map("primitive", |c| c.ok().filter(|c| c.primitive))
}

proptest! {
    #[test]
    fn transvections_are_symplectic_and_additive(c in primitive(4), n in -3i64..=3, m in -3i64..=3) {
        let tn = transvection(&c, n).unwrap();
        let tm = transvection(&c, m).unwrap();
        prop_assert!(is_symplectic(&tn));
        prop_assert_eq!(&tn * &tm, transvection(&c, n + m).unwrap());
    }

    #[test]
    fn transvection_action(c in primitive(4), x in prop::collection::vec(-4i64..=4, 4), n in -3i64..=3) {
        let t = transvection(&c, n).unwrap();
        let k = n * pairing(&c.vector, &x);
        for i in 0..4 {
            let image: i64 = (0..4).map(|j| t[(i, j)] * x[j]).sum();
            prop_assert_eq!(image, x[i] + k * c.vector[i]);
        }
    }
}

#[test]
fn pairing_pattern_on_all_graphs_up_to_six_vertices() {
    for n in 1..=6 {
        for g in Graph::all_labelled(n) {
            let (space, curves) = curve_system_from_graph(&g);
            assert_eq!(space.dim(), 2 * n);
            for i in 0..n {
                assert!(curves[i].primitive);
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    let p = pairing(&curves[i].vector, &curves[j].vector);
                    if g.has_edge(i, j) {
                        assert_eq!(p, 0);
                    } else {
                        assert_eq!(p.abs(), 1);
                    }
                }
            }
        }
    }
}

#[test]
fn commutation_iff_zero_pairing() {
    for n in 2..=4 {
        for g in Graph::isomorphism_classes(n) {
            for power in 1..=3 {
                let rep = raag_symplectic_rep(&g, power);
                for i in 0..n {
                    assert!(is_symplectic(&rep.matrices[i]));
                    for j in i + 1..n {
                        let (x, y) = (&rep.matrices[i], &rep.matrices[j]);
                        let zero = pairing(&rep.curves[i].vector, &rep.curves[j].vector) == 0;
                        assert_eq!(x * y == y * x, zero);
                    }
                }
            }
        }
    }
}

#[test]
fn block_embedding_is_injective_on_samples() {
    let t = IntMatrix::two_by_two(1, 1, 0, 1);
    let s = IntMatrix::two_by_two(0, -1, 1, 0);
    let blocks = [IntMatrix::identity(2), t.clone(), s.clone(), &t * &s];
    let tops = [vec![0, 1], vec![1, 0]];
    let mut seen = std::collections::HashMap::new();
    for top in &tops {
        for b0 in &blocks {
            for b1 in &blocks {
                let w = WreathElement::new(top.clone(), vec![b0.clone(), b1.clone()]).unwrap();
                let m = block_wreath_embed(&w, 2).unwrap();
                assert!(seen.insert(m, w).is_none());
            }
        }
    }
    assert_eq!(seen.len(), 32);
}

#[test]
fn wreath_genus_grid() {
    for gs in 0..4 {
        for b in 1..4 {
            for h in 0..4 {
                for m in 1..5 {
                    let g = wreath_genus(gs, b, h, m).unwrap();
                    assert!(g >= h && g >= gs, "{gs} {b} {h} {m}");
                    assert_eq!(wreath_genus(gs + 1, b, h, m).unwrap() - g, m);
                }
            }
        }
    }
    assert_eq!(wreath_genus(0, 1, 5, 1), Ok(5));
}
