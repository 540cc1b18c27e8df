//! HLT coset enumeration for right cosets `H g`.
//!
//! Tables are standardized: cosets are renumbered in breadth-first order from
//! coset 0, scanning columns `x_0, x_0^-1, x_1, ..` so output is reproducible.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::presentation::Presentation;
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CosetError {
    #[error("index not determined <= {max_cosets} cosets")]
    IndexNotDetermined { max_cosets: usize },
    #[error("subgroup generator {0} leaves the alphabet")]
    SubgroupOutOfRange(usize),
    #[error("permutation {0} is not a bijection of the point set")]
    NotAPermutation(usize),
    #[error("action on coset 0 is not transitive")]
    NotTransitive,
}

/// Complete right-coset action table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetTable {
    pub n_cosets: usize,
    pub rank: usize,
    /// `action[column][coset]`, column `2g` for `x_g` and `2g + 1` for `x_g^-1`.
    pub action: Vec<Vec<usize>>,
    pub subgroup_gens: Vec<Word>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.n_cosets
    }

    pub fn act(&self, coset: usize, l: Letter) -> usize {
        self.action[l.column()][coset]
    }

    pub fn act_word(&self, coset: usize, w: &Word) -> usize {
        w.letters().iter().fold(coset, |c, &l| self.act(c, l))
    }

    /// Table of a transitive permutation action on `0..n`, with stabilizer of
    /// point 0 as the subgroup (recorded without generators).
    pub fn from_permutations(perms: &[Vec<usize>]) -> Result<CosetTable, CosetError> {
        let n = perms.first().map_or(1, Vec::len);
        let mut action = Vec::with_capacity(2 * perms.len());
        for (g, perm) in perms.iter().enumerate() {
            let mut inv = vec![usize::MAX; n];
            if perm.len() != n {
                return Err(CosetError::NotAPermutation(g));
            }
            for (i, &j) in perm.iter().enumerate() {
                if j >= n || inv[j] != usize::MAX {
                    return Err(CosetError::NotAPermutation(g));
                }
                inv[j] = i;
            }
            action.push(perm.clone());
            action.push(inv);
        }
        let raw = CosetTable {
            n_cosets: n,
            rank: perms.len(),
            action,
            subgroup_gens: Vec::new(),
        };
        let (order, _) = raw.bfs_order();
        if order.len() != n {
            return Err(CosetError::NotTransitive);
        }
        Ok(raw.renumbered(&order))
    }

    /// Breadth-first discovery order from coset 0, and for every coset other
    /// than 0 the tree edge `(parent, letter)` that reached it.
    fn bfs_order(&self) -> (Vec<usize>, Vec<Option<(usize, Letter)>>) {
        let mut parent = vec![None; self.n_cosets];
        let mut seen = vec![false; self.n_cosets];
        let mut order = vec![0];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(c) = queue.pop_front() {
            for col in 0..2 * self.rank {
                let d = self.action[col][c];
                if !seen[d] {
                    seen[d] = true;
                    parent[d] = Some((c, Letter::from_column(col)));
                    order.push(d);
                    queue.push_back(d);
                }
            }
        }
        (order, parent)
    }

    fn renumbered(&self, order: &[usize]) -> CosetTable {
        let mut new_of = vec![0; self.n_cosets];
        for (new, &old) in order.iter().enumerate() {
            new_of[old] = new;
        }
        let action = self
            .action
            .iter()
            .map(|row| order.iter().map(|&old| new_of[row[old]]).collect())
            .collect();
        CosetTable {
            n_cosets: order.len(),
            rank: self.rank,
            action,
            subgroup_gens: self.subgroup_gens.clone(),
        }
    }

    /// Shortlex breadth-first transversal: `t_0 = 1`, `t_d = t_c · l` along tree edges.
    pub fn transversal(&self) -> Vec<Word> {
        let (order, parent) = self.bfs_order();
        let mut t = vec![Word::identity(); self.n_cosets];
        for &d in order.iter().skip(1) {
            let (c, l) = parent[d].expect("reachable coset has a parent");
            t[d] = t[c].concat(&Word::letter(l));
        }
        t
    }

    /// Tree edges as `(coset, positive generator)` pairs: `c · x_g` is the
    /// tree edge joining `c` and its image.
    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        let (_, parent) = self.bfs_order();
        let mut edges: Vec<(usize, usize)> = parent
            .iter()
            .enumerate()
            .filter_map(|(d, e)| {
                e.map(|(c, l)| {
                    if l.is_positive() {
                        (c, l.generator())
                    } else {
                        (d, l.generator())
                    }
                })
            })
            .collect();
        edges.sort_unstable();
        edges
    }

    /// Closed under the relators of `p`, inverse columns consistent, subgroup
    /// generators fix coset 0.
    pub fn verify(&self, p: &Presentation) -> bool {
        if p.rank() != self.rank || self.action.len() != 2 * self.rank {
            return false;
        }
        for g in 0..self.rank {
            for c in 0..self.n_cosets {
                let d = self.action[2 * g][c];
                if d >= self.n_cosets || self.action[2 * g + 1][d] != c {
                    return false;
                }
            }
        }
        let relators_close = p
            .relators()
            .iter()
            .all(|r| (0..self.n_cosets).all(|c| self.act_word(c, r) == c));
        relators_close && self.subgroup_gens.iter().all(|h| self.act_word(0, h) == 0)
    }
}

struct Enumerator {
    cols: usize,
    table: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    live: usize,
    queue: Vec<usize>,
    max_cosets: usize,
    max_defined: usize,
}

fn inv_col(col: usize) -> usize {
    col ^ 1
}

impl Enumerator {
    fn is_live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = c;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    fn define(&mut self, c: usize, col: usize) -> Result<(), CosetError> {
        if self.live >= self.max_cosets || self.table.len() >= self.max_defined {
            return Err(CosetError::IndexNotDetermined {
                max_cosets: self.max_cosets,
            });
        }
        let d = self.table.len();
        self.table.push(vec![None; self.cols]);
        self.parent.push(d);
        self.live += 1;
        self.table[c][col] = Some(d);
        self.table[d][inv_col(col)] = Some(c);
        Ok(())
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, lose) = (a.min(b), a.max(b));
        self.parent[lose] = keep;
        self.live -= 1;
        self.queue.push(lose);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for col in 0..self.cols {
                let Some(f) = self.table[e][col] else { continue };
                self.table[f][inv_col(col)] = None;
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                if let Some(g) = self.table[e1][col] {
                    let g = self.rep(g);
                    self.merge(f1, g);
                } else if let Some(g) = self.table[f1][inv_col(col)] {
                    let g = self.rep(g);
                    self.merge(e1, g);
                } else {
                    self.table[e1][col] = Some(f1);
                    self.table[f1][inv_col(col)] = Some(e1);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Result<(), CosetError> {
        if w.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = w.len() - 1;
        loop {
            while i <= j {
                match self.table[f][w[i]] {
                    Some(next) => {
                        f = next;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i {
                match self.table[b][inv_col(w[j])] {
                    Some(next) => {
                        b = next;
                        if j == 0 {
                            // j < i only when i == 0; handled below.
                            self.coincidence(f, b);
                            return Ok(());
                        }
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                self.table[f][w[i]] = Some(b);
                self.table[b][inv_col(w[i])] = Some(f);
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }
}

/// HLT enumeration of the cosets of `⟨subgroup_gens⟩` in the group of `p`.
/// `max_cosets` bounds the number of live cosets; at most `64 · max_cosets`
/// cosets are ever defined.
pub fn todd_coxeter(p: &Presentation, subgroup_gens: &[Word], max_cosets: usize) -> Result<CosetTable, CosetError> {
    let rank = p.rank();
    if let Some(i) = subgroup_gens.iter().position(|h| h.rank_bound() > rank) {
        return Err(CosetError::SubgroupOutOfRange(i));
    }
    let cols = 2 * rank;
    let to_cols = |w: &Word| -> Vec<usize> { w.letters().iter().map(|l| l.column()).collect() };
    let relators: Vec<Vec<usize>> = p.relators().iter().map(to_cols).collect();
    let gens: Vec<Vec<usize>> = subgroup_gens.iter().map(to_cols).collect();

    let mut e = Enumerator {
        cols,
        table: vec![vec![None; cols]],
        parent: vec![0],
        live: 1,
        queue: Vec::new(),
        max_cosets: max_cosets.max(1),
        max_defined: max_cosets.max(1).saturating_mul(64),
    };
    for h in &gens {
        e.scan_and_fill(0, h)?;
    }
    let mut c = 0;
    while c < e.table.len() {
        if e.is_live(c) {
            for r in &relators {
                e.scan_and_fill(c, r)?;
                if !e.is_live(c) {
                    break;
                }
            }
            if e.is_live(c) {
                for col in 0..cols {
                    if e.table[c][col].is_none() {
                        e.define(c, col)?;
                    }
                }
            }
        }
        c += 1;
    }

    let live: Vec<usize> = (0..e.table.len()).filter(|&c| e.is_live(c)).collect();
    let mut compact = vec![usize::MAX; e.table.len()];
    for (k, &c) in live.iter().enumerate() {
        compact[c] = k;
    }
    let mut action = vec![vec![0; live.len()]; cols];
    for (k, &c) in live.iter().enumerate() {
        for (col, row) in action.iter_mut().enumerate() {
            let d = e.table[c][col].expect("enumeration leaves a complete table");
            row[k] = compact[e.rep(d)];
        }
    }
    let raw = CosetTable {
        n_cosets: live.len(),
        rank,
        action,
        subgroup_gens: subgroup_gens.to_vec(),
    };
    let (order, _) = raw.bfs_order();
    Ok(raw.renumbered(&order))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tc(text: &str, gens: &[&str]) -> CosetTable {
        let p = Presentation::parse(text).unwrap();
        let h: Vec<Word> = gens.iter().map(|g| p.parse_word(g).unwrap()).collect();
        let t = todd_coxeter(&p, &h, 10_000).unwrap();
        assert!(t.verify(&p));
        t
    }

    #[test]
    fn cyclic_groups() {
        assert_eq!(tc("gens: a\nrel: a^6", &["a^2"]).index(), 2);
        assert_eq!(tc("gens: a\nrel: a^6", &[]).index(), 6);
        assert_eq!(tc("gens: a\nrel: a^6", &["a^4"]).index(), 2);
        assert_eq!(tc("gens: a\nrel: a^6", &["a^3"]).index(), 3);
    }

    #[test]
    fn symmetric_group() {
        let s3 = "gens: s t\nrel: s^2\nrel: t^2\nrel: (s t)^3";
        assert_eq!(tc(s3, &["s"]).index(), 3);
        assert_eq!(tc(s3, &[]).index(), 6);
    }

    #[test]
    fn larger_groups() {
        assert_eq!(tc("gens: a b\nrel: a^2\nrel: b^3\nrel: (a b)^5", &[]).index(), 60);
        assert_eq!(tc("gens: a b\nrel: a^2\nrel: b^3\nrel: (a b)^4", &["b"]).index(), 8);
    }

    #[test]
    fn infinite_index_is_reported() {
        let p = Presentation::parse("gens: a b\nrel: [a,b]").unwrap();
        let err = todd_coxeter(&p, &[Word::generator(0)], 50).unwrap_err();
        assert_eq!(err, CosetError::IndexNotDetermined { max_cosets: 50 });
    }

    #[test]
    fn table_is_standard_and_deterministic() {
        let s3 = "gens: s t\nrel: s^2\nrel: t^2\nrel: (s t)^3";
        let a = tc(s3, &[]);
        let b = tc(s3, &[]);
        assert_eq!(a, b);
        let t = a.transversal();
        for (c, w) in t.iter().enumerate() {
            assert_eq!(a.act_word(0, w), c);
        }
        assert_eq!(a.tree_edges().len(), a.index() - 1);
    }

    #[test]
    fn permutation_tables() {
        let swap = vec![1, 0];
        let t = CosetTable::from_permutations(&[swap.clone(), swap]).unwrap();
        assert_eq!(t.index(), 2);
        assert!(CosetTable::from_permutations(&[vec![0, 0]]).is_err());
        assert_eq!(
            CosetTable::from_permutations(&[vec![0, 1]]).unwrap_err(),
            CosetError::NotTransitive
        );
    }
}
