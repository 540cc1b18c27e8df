//! Shortlex normal forms in right-angled Artin groups.

use crate::graph::Graph;
use crate::word::{Letter, Word};

fn commute(g: &Graph, x: Letter, y: Letter) -> bool {
    x.generator() == y.generator() || g.has_edge(x.generator(), y.generator())
}

/// Cancels pairs `x^e u x^-e` where every letter of `u` commutes with `x`,
/// until none remain. The result is a geodesic for the RAAG of `g`.
fn cancel_across_commuting(g: &Graph, letters: &mut Vec<Letter>) {
    'restart: loop {
        for i in 0..letters.len() {
            for j in i + 1..letters.len() {
                let (x, y) = (letters[i], letters[j]);
                if x.cancels(y) {
                    letters.remove(j);
                    letters.remove(i);
                    continue 'restart;
                }
                if !commute(g, x, y) {
                    break;
                }
            }
        }
        return;
    }
}

/// Shortlex-least word equal to `w` in the RAAG defined by `g`.
///
/// Vertex `i` of the graph is generator `i`. Two words are equal in the group
/// iff their normal forms coincide.
pub fn raag_normal_form(w: &Word, g: &Graph) -> Word {
    let mut rest = w.letters().to_vec();
    cancel_across_commuting(g, &mut rest);

    // Greedy lexicographic linearisation: repeatedly emit the least letter
    // that commutes with everything in front of it.
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for k in 0..rest.len() {
            if best.is_some_and(|b| rest[k] >= rest[b]) {
                continue;
            }
            if rest[..k].iter().all(|&x| commute(g, x, rest[k])) {
                best = Some(k);
            }
        }
        let k = best.expect("the first letter is always available");
        out.push(rest.remove(k));
    }
    Word::reduce(out)
}

/// Equality in the RAAG via normal forms.
pub fn raag_equal(u: &Word, v: &Word, g: &Graph) -> bool {
    raag_normal_form(u, g) == raag_normal_form(v, g)
}
