//! Letters and freely reduced words over an indexed alphabet.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Exponent sign of a letter. `Pos` sorts before `Neg`, so `a < a^-1 < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.as_i64() as i8
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> Result<Self, Self::Error> {
        match v {
            1 => Ok(Sign::Pos),
            -1 => Ok(Sign::Neg),
            _ => Err(format!("sign must be 1 or -1, got {v}")),
        }
    }
}

/// A generator index together with an exponent sign.
///
/// Ordering is by generator index first, then sign, which is the
/// letter order used for every shortlex comparison in the crate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Letter {
    generator: u32,
    sign: Sign,
}

impl Letter {
    pub fn new(generator: usize, sign: Sign) -> Self {
        let generator = u32::try_from(generator).expect("generator index exceeds u32");
        Letter { generator, sign }
    }

    pub fn pos(generator: usize) -> Self {
        Letter::new(generator, Sign::Pos)
    }

    pub fn neg(generator: usize) -> Self {
        Letter::new(generator, Sign::Neg)
    }

    /// `+k` is generator `k-1`, `-k` its inverse.
    pub fn from_signed(v: i32) -> Self {
        assert!(v != 0, "signed letter code must be non-zero");
        let g = v.unsigned_abs() as usize - 1;
        if v > 0 {
            Letter::pos(g)
        } else {
            Letter::neg(g)
        }
    }

    pub fn generator(self) -> usize {
        self.generator as usize
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn is_positive(self) -> bool {
        self.sign == Sign::Pos
    }

    pub fn inverse(self) -> Self {
        Letter {
            generator: self.generator,
            sign: self.sign.flip(),
        }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.sign != other.sign
    }

    /// Column index in tables that store a generator and its inverse side by side.
    pub fn column(self) -> usize {
        2 * self.generator() + usize::from(self.sign == Sign::Neg)
    }

    pub fn from_column(col: usize) -> Self {
        if col % 2 == 0 {
            Letter::pos(col / 2)
        } else {
            Letter::neg(col / 2)
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "g{}", self.generator),
            Sign::Neg => write!(f, "g{}^-1", self.generator),
        }
    }
}

/// Freely reduced word. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Freely reduces `raw` into a word.
    pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in raw {
            push_reducing(&mut out, l);
        }
        Word(out)
    }

    pub fn from_signed(codes: &[i32]) -> Self {
        Word::reduce(codes.iter().map(|&c| Letter::from_signed(c)))
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn generator(g: usize) -> Self {
        Word(vec![Letter::pos(g)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// Largest generator index plus one (0 for the identity).
    pub fn rank_bound(&self) -> usize {
        self.0.iter().map(|l| l.generator() + 1).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        for &l in &other.0 {
            push_reducing(&mut out, l);
        }
        Word(out)
    }

    /// `self^n`; negative exponents invert, zero gives the identity.
    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// `u v u^-1 v^-1`.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.concat(v).concat(&u.inverse()).concat(&v.inverse())
    }

    pub fn conjugate_by(&self, g: &Word) -> Word {
        g.concat(self).concat(&g.inverse())
    }

    /// Splits into `(core, conjugator)` with `self = conjugator * core * conjugator^-1`
    /// and `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let n = self.0.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.0[k].cancels(self.0[n - 1 - k]) {
            k += 1;
        }
        (
            Word(self.0[k..n - k].to_vec()),
            Word(self.0[..k].to_vec()),
        )
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.first(), self.last()) {
            (Some(a), Some(b)) => self.0.len() == 1 || !a.cancels(b),
            _ => true,
        }
    }

    /// Rotation starting at `offset` (the word must be cyclically reduced).
    pub fn rotate(&self, offset: usize) -> Word {
        if self.0.is_empty() {
            return Word::identity();
        }
        let k = offset % self.0.len();
        let mut v = Vec::with_capacity(self.0.len());
        v.extend_from_slice(&self.0[k..]);
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    /// Substitutes `image(letter)` for every letter, then reduces.
    pub fn substitute<F>(&self, mut image: F) -> Word
    where
        F: FnMut(Letter) -> Word,
    {
        let mut out = Vec::new();
        for &l in &self.0 {
            for &m in image(l).letters() {
                push_reducing(&mut out, m);
            }
        }
        Word(out)
    }

    /// Exponent sum per generator, over `rank` generators.
    pub fn exponent_sums(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0i64; rank];
        for l in &self.0 {
            v[l.generator()] += l.sign().as_i64();
        }
        v
    }

    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// Compares lexicographically, ignoring length.
    pub fn cmp_lex(&self, other: &Word) -> Ordering {
        self.0.cmp(&other.0)
    }
}

/// Free reduction of a raw letter sequence.
pub fn free_reduce(raw: &[Letter]) -> Word {
    Word::reduce(raw.iter().copied())
}

fn push_reducing(out: &mut Vec<Letter>, l: Letter) {
    if let Some(&last) = out.last() {
        if last.cancels(l) {
            out.pop();
            return;
        }
    }
    out.push(l);
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shortlex: shorter words first, then lexicographic by letter order.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "Word(1)");
        }
        write!(f, "Word(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l:?}")?;
        }
        write!(f, ")")
    }
}

impl std::ops::Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

/// Formats a word with generator names, grouping runs as `x^k`.
pub fn format_word(w: &Word, names: &[String]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    let letters = w.letters();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut j = i + 1;
        while j < letters.len() && letters[j] == l {
            j += 1;
        }
        let run = (j - i) as i64 * l.sign().as_i64();
        let name = &names[l.generator()];
        if run == 1 {
            parts.push(name.clone());
        } else {
            parts.push(format!("{name}^{run}"));
        }
        i = j;
    }
    parts.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(c: &[i32]) -> Word {
        Word::from_signed(c)
    }

    #[test]
    fn free_reduce_examples() {
        let a = Letter::pos(0);
        let b = Letter::pos(1);
        assert_eq!(free_reduce(&[a, b, b.inverse()]), Word::letter(a));
        assert_eq!(free_reduce(&[a, a.inverse()]), Word::identity());
        let comm = [a, b, a.inverse(), b.inverse()];
        assert_eq!(free_reduce(&comm).letters(), &comm);
    }

    #[test]
    fn cyclic_reduce_examples() {
        let (core, conj) = w(&[1, 2, -1]).cyclic_reduce();
        assert_eq!(core, w(&[2]));
        assert_eq!(conj, w(&[1]));

        let comm = Word::commutator(&w(&[1]), &w(&[2]));
        let (core, conj) = comm.cyclic_reduce();
        assert_eq!(core, comm);
        assert!(conj.is_empty());

        let (core, conj) = w(&[1, 1, 2, -1, -1]).cyclic_reduce();
        assert_eq!(core, w(&[2]));
        assert_eq!(conj, w(&[1, 1]));
    }

    #[test]
    fn algebra_examples() {
        assert_eq!(w(&[1, 2]).inverse(), w(&[-2, -1]));
        assert_eq!(Word::commutator(&w(&[1]), &w(&[2])), w(&[1, 2, -1, -2]));
        let c = Word::commutator(&w(&[1]), &w(&[2]));
        assert_eq!(c.pow(3).len(), 12);
        assert_eq!(c.pow(0), Word::identity());
        assert_eq!(c.pow(-1), c.inverse());
    }

    #[test]
    fn formatting_groups_runs() {
        let names: Vec<String> = ["a", "b"].iter().map(|s| s.to_string()).collect();
        assert_eq!(format_word(&w(&[1, 1, -2]), &names), "a^2 b^-1");
        assert_eq!(format_word(&Word::identity(), &names), "1");
    }

    #[test]
    fn letter_order_is_shortlex_alphabet_order() {
        assert!(Letter::pos(0) < Letter::neg(0));
        assert!(Letter::neg(0) < Letter::pos(1));
        assert!(w(&[2]) < w(&[1, 1]));
    }

    fn raw_letters() -> impl Strategy<Value = Vec<Letter>> {
        prop::collection::vec((0usize..3, any::<bool>()), 0..24).prop_map(|v| {
            v.into_iter()
                .map(|(g, p)| if p { Letter::pos(g) } else { Letter::neg(g) })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn reduction_is_idempotent_and_shrinks(raw in raw_letters()) {
            let r = free_reduce(&raw);
            prop_assert!(r.len() <= raw.len());
            prop_assert_eq!(free_reduce(r.letters()), r.clone());
            prop_assert!(r.letters().windows(2).all(|p| !p[0].cancels(p[1])));
        }

        #[test]
        fn reduction_respects_concatenation(u in raw_letters(), v in raw_letters()) {
            let mut uv = u.clone();
            uv.extend(v.iter().copied());
            prop_assert_eq!(free_reduce(&uv), free_reduce(&u).concat(&free_reduce(&v)));
        }

        #[test]
        fn inverse_of_product(u in raw_letters(), v in raw_letters()) {
            let (u, v) = (free_reduce(&u), free_reduce(&v));
            prop_assert_eq!(u.concat(&v).inverse(), v.inverse().concat(&u.inverse()));
        }

        #[test]
        fn cyclic_reduce_conjugates_back(raw in raw_letters()) {
            let w = free_reduce(&raw);
            let (core, conj) = w.cyclic_reduce();
            prop_assert!(core.is_cyclically_reduced());
            prop_assert_eq!(core.conjugate_by(&conj), w);
        }
    }
}
