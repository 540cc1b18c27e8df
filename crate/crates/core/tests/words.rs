mod common;

use forge_core::{apply_hom, free_reduce, GroupHom, Letter, Presentation, Word};
use proptest::prelude::*;

fn raw_letters(rank: i32, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((1..=rank, any::<bool>()), 0..max_len)
        .prop_map(|v| v.into_iter().map(|(g, neg)| Letter::from_signed(if neg { -g } else { g })).collect())
}

fn word(rank: i32, max_len: usize) -> impl Strategy<Value = Word> {
    raw_letters(rank, max_len).prop_map(|v| free_reduce(&v))
}

proptest! {
    #[test]
    fn free_reduce_is_idempotent_and_shortens(raw in raw_letters(3, 40)) {
        let w = free_reduce(&raw);
        prop_assert!(w.len() <= raw.len());
        prop_assert_eq!(free_reduce(w.letters()), w.clone());
        prop_assert!(w.letters().windows(2).all(|p| !p[0].cancels(p[1])));
    }

    #[test]
    fn free_reduce_respects_concatenation(u in raw_letters(3, 20), v in raw_letters(3, 20)) {
        let joined: Vec<Letter> = u.iter().chain(&v).copied().collect();
        let lhs = free_reduce(&joined);
        let rhs = free_reduce(&u).concat(&free_reduce(&v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn apply_hom_is_a_monoid_map(u in word(2, 12), v in word(2, 12), imgs in prop::collection::vec(word(3, 5), 2)) {
        let src = Presentation::free("F2", &["x", "y"]);
        let dst = Presentation::free("F3", &["a", "b", "c"]);
        let h = GroupHom::new(src, dst, imgs).unwrap();
        prop_assert_eq!(apply_hom(&h, &u.concat(&v)), apply_hom(&h, &u).concat(&apply_hom(&h, &v)));
        prop_assert!(apply_hom(&h, &Word::identity()).is_empty());
    }

    #[test]
    fn inverse_cancels(w in word(3, 20)) {
        prop_assert!(w.concat(&w.inverse()).is_empty());
        prop_assert_eq!(w.inverse().inverse(), w);
    }
}

#[test]
fn corpus_round_trip() {
    let corpus = common::corpus();
    assert!(corpus.len() >= 20, "corpus has {} entries", corpus.len());
    for (name, p) in corpus {
        let text = p.serialize();
        let back = Presentation::parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(back, p, "{name}");
        assert_eq!(back.serialize(), text, "{name}");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<Presentation>(&json).unwrap(), p, "{name}");
    }
}

#[test]
fn parse_errors_carry_positions() {
    let err = Presentation::parse("gens: a b\nrel: a c").unwrap_err().to_string();
    assert!(err.contains("line 2"), "{err}");
    assert!(Presentation::parse("rel: a").is_err());
    assert!(Presentation::parse("gens: a a").is_err());
}
