mod common;

use proptest::prelude::*;

use common::*;
use forge_core::constructions::coset::todd_coxeter;
use forge_core::constructions::schreier::reidemeister_schreier;
use forge_core::constructions::{direct_product, rips, wreath_embed};
use forge_core::oracle::Verdict;
use forge_core::solvers::abelianization;
use forge_core::solvers::search::{BruteBudget, BruteForceOracle};
use forge_core::{free_reduce, Letter, Word, WordProblemOracle};

#[test]
fn rips_relators_map_to_trivial_words() {
    for name in ["z2", "s3", "q8", "t2", "bs12"] {
        let q = load(name);
        let out = rips(&q, 8).unwrap();
        let oracle = BruteForceOracle {
            presentation: q.clone(),
            budget: BruteBudget::new(12, 200_000),
        };
        for r in out.gamma.relators() {
            assert_eq!(oracle.decide(&out.p.apply(r)), Verdict::Trivial, "{name}");
        }
    }
}

#[test]
fn rips_conjugation_relators_have_kernel_right_hand_sides() {
    for name in ["z", "f2", "s3", "surface2"] {
        let q = load(name);
        let out = rips(&q, 8).unwrap();
        let [a1, a2] = out.kernel_letters();
        let m = q.rank();
        let conj = &out.gamma.relators()[q.relators().len()..];
        assert_eq!(conj.len(), 4 * m, "{name}");
        for r in conj {
            let l = r.letters();
            assert!(l[0].generator() < m, "{name}");
            assert!([a1, a2].contains(&l[1].generator()) && l[1].is_positive(), "{name}");
            assert_eq!(l[2], l[0].inverse(), "{name}");
            assert!(l[3..].iter().all(|x| x.generator() == a1 || x.generator() == a2), "{name}");
        }
    }
}

#[test]
fn coset_counts_match_permutation_models() {
    for (name, perms, order) in finite_models() {
        let p = load(name);
        let n = perms[0].len();
        assert_eq!(closure(&perms, n).len(), order, "{name}");
        let t = todd_coxeter(&p, &[], 10_000).unwrap();
        assert_eq!(t.index(), order, "{name}");
        assert!(t.verify(&p), "{name}");
        for g in 0..p.rank() {
            let sub = [Word::generator(g)];
            let want = brute_coset_count(&perms, &[perm_eval(&sub[0], &perms)], n);
            assert_eq!(todd_coxeter(&p, &sub, 10_000).unwrap().index(), want, "{name} <{g}>");
        }
    }
}

#[test]
fn subgroup_abelianizations() {
    // (group, subgroup generators, free rank, torsion) of the subgroup itself
    let cases: [(&str, &str, usize, Vec<i64>); 8] = [
        ("s3", "b", 0, vec![3]),
        ("q8", "i", 0, vec![4]),
        ("d4", "r", 0, vec![4]),
        ("a4", "a; b a b^-1", 0, vec![2, 2]),
        ("z2", "a^2; b", 2, vec![]),
        ("f2", "a^2; a b; b^2", 3, vec![]),
        ("q8", "", 0, vec![]),
        ("s3xz8", "c", 0, vec![8]),
    ];
    for (name, gens, rank, torsion) in cases {
        let p = load(name);
        let gens: Vec<Word> = gens
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|s| p.parse_word(s).unwrap())
            .collect();
        let t = todd_coxeter(&p, &gens, 10_000).unwrap();
        let (h, inc) = reidemeister_schreier(&p, &t).unwrap();
        let ab = abelianization(&h);
        assert_eq!((ab.free_rank, ab.torsion), (rank, torsion), "{name} <{gens:?}>");
        for img in inc.images() {
            assert_eq!(t.act_word(0, img), 0, "{name}");
        }
    }
}

fn f2_index2() -> (forge_core::constructions::CosetTable, Vec<Word>) {
    let p = load("f2");
    let gens: Vec<Word> = ["a^2", "a b", "b^2"].iter().map(|s| p.parse_word(s).unwrap()).collect();
    let t = todd_coxeter(&p, &gens, 100).unwrap();
    let tr = t.transversal();
    (t, tr)
}

#[test]
fn wreath_embed_is_injective_on_short_words() {
    let (t, tr) = f2_index2();
    let words = reduced_words(2, 4);
    let mut seen = std::collections::HashMap::new();
    for w in &words {
        let e = wreath_embed(w, &t, &tr).unwrap();
        if let Some(prev) = seen.insert((e.top, e.bottom), w.clone()) {
            panic!("{prev:?} and {w:?} share an image");
        }
    }
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=2i32, any::<bool>()), 0..max_len).prop_map(|v| {
        let raw: Vec<Letter> = v.into_iter().map(|(g, n)| Letter::from_signed(if n { -g } else { g })).collect();
        free_reduce(&raw)
    })
}

proptest! {
    #[test]
    fn wreath_embed_is_a_homomorphism(u in word(10), v in word(10)) {
        let (t, tr) = f2_index2();
        let eu = wreath_embed(&u, &t, &tr).unwrap();
        let ev = wreath_embed(&v, &t, &tr).unwrap();
        let euv = wreath_embed(&u.concat(&v), &t, &tr).unwrap();
        prop_assert_eq!(euv, eu.compose(&ev));
    }
}

#[test]
fn direct_product_abelianizes_to_the_sum() {
    let d = direct_product(&load("c6"), &load("s3")).unwrap();
    let ab = abelianization(&d.product);
    assert_eq!((ab.free_rank, ab.torsion), (0, vec![2, 6]));
    assert_eq!(todd_coxeter(&d.product, &[], 1000).unwrap().index(), 36);
}
