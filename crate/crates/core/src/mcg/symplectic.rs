//! Curves as integer homology classes and Dehn twists as transvections.
//!
//! Basis order `a_1, b_1, .., a_g, b_g`; `⟨x, y⟩ = xᵀ J y` with `⟨a_i, b_i⟩ = 1`.
//! The `N`-th twist power about `c` acts by `x ↦ x + N ⟨c, x⟩ c`.

use num_integer::gcd;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymplecticError {
    #[error("curve class {0:?} is not primitive")]
    NotPrimitive(Vec<i64>),
    #[error("vector has odd length {0}")]
    OddDimension(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymplecticSpace {
    pub genus: usize,
}

impl SymplecticSpace {
    pub fn new(genus: usize) -> Self {
        SymplecticSpace { genus }
    }

    pub fn dim(&self) -> usize {
        2 * self.genus
    }

    pub fn form(&self) -> IntMatrix {
        IntMatrix::symplectic_form(self.genus)
    }

    pub fn a(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.dim()];
        v[2 * i] = 1;
        v
    }

    pub fn b(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.dim()];
        v[2 * i + 1] = 1;
        v
    }
}

/// `⟨x, y⟩ = Σ_i x_{a_i} y_{b_i} - x_{b_i} y_{a_i}`.
pub fn pairing(x: &[i64], y: &[i64]) -> i64 {
    x.chunks(2).zip(y.chunks(2)).map(|(p, q)| p[0] * q[1] - p[1] * q[0]).sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveClass {
    pub vector: Vec<i64>,
    pub primitive: bool,
}

impl CurveClass {
    pub fn new(vector: Vec<i64>) -> Result<Self, SymplecticError> {
        if vector.len() % 2 != 0 {
            return Err(SymplecticError::OddDimension(vector.len()));
        }
        let primitive = vector.iter().fold(0, |g, &x| gcd(g, x)) == 1;
        Ok(CurveClass { vector, primitive })
    }
}

/// `c_i = a_i + Σ_{j<i, (i,j) ∉ E} b_j` on genus `n`, so that for `i ≠ j`
/// `⟨c_i, c_j⟩ = 0` on edges and `±1` on non-edges.
pub fn curve_system_from_graph(g: &Graph) -> (SymplecticSpace, Vec<CurveClass>) {
    let space = SymplecticSpace::new(g.n());
    let curves = (0..g.n())
        .map(|i| {
            let mut v = space.a(i);
            for j in (0..i).filter(|&j| !g.has_edge(i, j)) {
                v[2 * j + 1] += 1;
            }
            CurveClass::new(v).expect("even dimension")
        })
        .collect();
    (space, curves)
}

/// Matrix of `x ↦ x + N ⟨c, x⟩ c` acting on column vectors.
pub fn transvection(c: &CurveClass, n: i64) -> Result<IntMatrix, SymplecticError> {
    if !c.primitive {
        return Err(SymplecticError::NotPrimitive(c.vector.clone()));
    }
    let d = c.vector.len();
    let mut m = IntMatrix::identity(d);
    // ⟨c, e_k⟩ for each basis vector e_k.
    let row: Vec<i64> = (0..d)
        .map(|k| {
            let mut e = vec![0; d];
            e[k] = 1;
            pairing(&c.vector, &e)
        })
        .collect();
    for i in 0..d {
        for (k, &r) in row.iter().enumerate() {
            m[(i, k)] += n * c.vector[i] * r;
        }
    }
    Ok(m)
}

/// Inverse of a symplectic matrix: `J^-1 Mᵀ J` with `J^-1 = -J`.
pub fn symplectic_inverse(m: &IntMatrix) -> IntMatrix {
    let j = IntMatrix::symplectic_form(m.rows() / 2);
    &(&j.scale(-1) * &m.transpose()) * &j
}

/// `Mᵀ J M = J`.
pub fn is_symplectic(m: &IntMatrix) -> bool {
    if !m.is_square() || m.rows() % 2 != 0 {
        return false;
    }
    let j = IntMatrix::symplectic_form(m.rows() / 2);
    &(&m.transpose() * &j) * m == j
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistRep {
    pub space: SymplecticSpace,
    pub curves: Vec<CurveClass>,
    pub power: i64,
    pub matrices: Vec<IntMatrix>,
}

/// `v_i ↦ transvection(c_i, N)`.
pub fn raag_symplectic_rep(g: &Graph, n: i64) -> TwistRep {
    let (space, curves) = curve_system_from_graph(g);
    let matrices = curves
        .iter()
        .map(|c| transvection(c, n).expect("curve system classes are primitive"))
        .collect();
    TwistRep {
        space,
        curves,
        power: n,
        matrices,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub i: usize,
    pub j: usize,
    pub edge: bool,
    pub pairing: i64,
    pub commute: bool,
    /// For non-edges: a nontrivial reduced word in `M_i`, `M_j` (signed codes
    /// `±1`, `±2`) that evaluates to the identity, if one was found.
    pub relation: Option<Vec<i32>>,
    pub words_checked: usize,
    /// Commutation on edges, no commutation and no relation on non-edges.
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub word_len_cap: usize,
    pub pairs: Vec<PairReport>,
    pub consistent: bool,
}

fn commutator_is_identity(x: &IntMatrix, y: &IntMatrix) -> bool {
    x * y == y * x
}

/// Depth-first search over nontrivial reduced words of length `<= cap` in
/// `x`, `y`; returns the first word evaluating to the identity and the count.
fn find_relation(x: &IntMatrix, y: &IntMatrix, cap: usize) -> (Option<Vec<i32>>, usize) {
    let gens = [x.clone(), symplectic_inverse(x), y.clone(), symplectic_inverse(y)];
    let codes = [1, -1, 2, -2];
    let mut count = 0;
    let mut word = Vec::new();
    fn go(
        gens: &[IntMatrix; 4],
        codes: &[i32; 4],
        cur: &IntMatrix,
        last: Option<usize>,
        word: &mut Vec<i32>,
        cap: usize,
        count: &mut usize,
    ) -> Option<Vec<i32>> {
        if word.len() == cap {
            return None;
        }
        for k in 0..4 {
            if last.is_some_and(|l| l ^ 1 == k) {
                continue;
            }
            let next = cur * &gens[k];
            word.push(codes[k]);
            *count += 1;
            if next.is_identity() {
                return Some(word.clone());
            }
            if let Some(found) = go(gens, codes, &next, Some(k), word, cap, count) {
                return Some(found);
            }
            word.pop();
        }
        None
    }
    let id = IntMatrix::identity(x.rows());
    let found = go(&gens, &codes, &id, None, &mut word, cap, &mut count);
    (found, count)
}

pub fn check_relations(rep: &TwistRep, g: &Graph, word_len_cap: usize) -> RelationReport {
    let mut pairs = Vec::new();
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            let (x, y) = (&rep.matrices[i], &rep.matrices[j]);
            let edge = g.has_edge(i, j);
            let commute = commutator_is_identity(x, y);
            let (relation, words_checked) = if edge {
                (None, 0)
            } else {
                find_relation(x, y, word_len_cap)
            };
            let consistent = if edge { commute } else { !commute && relation.is_none() };
            pairs.push(PairReport {
                i,
                j,
                edge,
                pairing: pairing(&rep.curves[i].vector, &rep.curves[j].vector),
                commute,
                relation,
                words_checked,
                consistent,
            });
        }
    }
    let consistent = pairs.iter().all(|p| p.consistent);
    RelationReport {
        word_len_cap,
        pairs,
        consistent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_examples() {
        let (_, c) = curve_system_from_graph(&Graph::complete(2));
        assert_eq!(c[0].vector, vec![1, 0, 0, 0]);
        assert_eq!(c[1].vector, vec![0, 0, 1, 0]);
        let (_, c) = curve_system_from_graph(&Graph::empty(2));
        assert_eq!(c[1].vector, vec![0, 1, 1, 0]);
        assert_eq!(pairing(&c[0].vector, &c[1].vector), 1);
        let (_, c) = curve_system_from_graph(&Graph::path(3));
        assert_eq!(pairing(&c[0].vector, &c[1].vector), 0);
        assert_eq!(pairing(&c[1].vector, &c[2].vector), 0);
        assert_eq!(pairing(&c[0].vector, &c[2].vector).abs(), 1);
    }

    #[test]
    fn transvection_examples() {
        let space = SymplecticSpace::new(1);
        let a1 = CurveClass::new(space.a(0)).unwrap();
        let m = transvection(&a1, 1).unwrap();
        // b1 ↦ b1 + a1, a1 ↦ a1 (columns are images).
        assert_eq!(m.to_rows(), vec![vec![1, 1], vec![0, 1]]);
        assert!(transvection(&a1, 0).unwrap().is_identity());
        assert_eq!(transvection(&a1, 3).unwrap(), transvection(&a1, 1).unwrap().pow(3));
        assert!(is_symplectic(&m));
        let fat = CurveClass::new(vec![2, 0]).unwrap();
        assert!(transvection(&fat, 1).is_err());
    }

    #[test]
    fn inverse_is_exact() {
        let rep = raag_symplectic_rep(&Graph::path(3), 2);
        for m in &rep.matrices {
            assert!((m * &symplectic_inverse(m)).is_identity());
        }
    }

    #[test]
    fn relation_checks() {
        let r = check_relations(&raag_symplectic_rep(&Graph::complete(3), 2), &Graph::complete(3), 8);
        assert!(r.consistent && r.pairs.iter().all(|p| p.commute));
        let g = Graph::empty(2);
        let r = check_relations(&raag_symplectic_rep(&g, 2), &g, 8);
        assert!(r.consistent);
        assert!(r.pairs[0].relation.is_none());
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let r = check_relations(&raag_symplectic_rep(&g, 2), &g, 6);
        let pattern: Vec<bool> = r.pairs.iter().map(|p| p.commute).collect();
        assert_eq!(pattern, vec![true, false, false]);
    }

    #[test]
    fn unit_twists_satisfy_the_braid_relation() {
        // With N = 1 two curves meeting once give x y x = y x y, a relation of length 6.
        let g = Graph::empty(2);
        let r = check_relations(&raag_symplectic_rep(&g, 1), &g, 6);
        assert!(!r.consistent);
        assert!(r.pairs[0].relation.is_some());
    }
}
