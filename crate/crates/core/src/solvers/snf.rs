//! Smith normal form over the integers and abelianization of presentations.

use serde::{Deserialize, Serialize};

use crate::matrix::IntMatrix;
use crate::presentation::Presentation;

/// `u * m * v = d` with `u`, `v` unimodular and `d` diagonal, `d[i] | d[i+1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)]).collect()
    }

    /// Number of non-zero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|&&x| x != 0).count()
    }
}

fn min_nonzero(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = d[(i, j)];
            if x != 0 && best.map_or(true, |(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (r, c) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);

    for t in 0..r.min(c) {
        loop {
            let Some((pi, pj)) = min_nonzero(&d, t) else {
                return SmithForm { u, d, v };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = d[(t, t)];
            let mut clean = true;
            for i in t + 1..r {
                let q = d[(i, t)] / p;
                if q != 0 {
                    d.add_row_multiple(i, t, -q);
                    u.add_row_multiple(i, t, -q);
                }
                clean &= d[(i, t)] == 0;
            }
            for j in t + 1..c {
                let q = d[(t, j)] / p;
                if q != 0 {
                    d.add_col_multiple(j, t, -q);
                    v.add_col_multiple(j, t, -q);
                }
                clean &= d[(t, j)] == 0;
            }
            if !clean {
                continue;
            }
            // Divisibility: fold a row with a non-multiple into row t and retry.
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| d[(i, j)] % p != 0));
            match bad {
                Some(i) => {
                    d.add_row_multiple(t, i, 1);
                    u.add_row_multiple(t, i, 1);
                }
                None => break,
            }
        }
        if d[(t, t)] < 0 {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { u, d, v }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Abelianization {
    pub free_rank: usize,
    /// Invariant factors greater than one, in divisibility order.
    pub torsion: Vec<i64>,
}

/// Rows are relators, columns generators; entries are exponent sums.
pub fn relation_matrix(p: &Presentation) -> IntMatrix {
    let rows: Vec<Vec<i64>> = p.relators().iter().map(|r| r.exponent_sums(p.rank())).collect();
    let mut m = IntMatrix::zeros(rows.len(), p.rank());
    for (i, row) in rows.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            m[(i, j)] = x;
        }
    }
    m
}

pub fn abelianization(p: &Presentation) -> Abelianization {
    let snf = smith_normal_form(&relation_matrix(p));
    let diag = snf.diagonal();
    let nonzero = diag.iter().filter(|&&x| x != 0).count();
    Abelianization {
        free_rank: p.rank() - nonzero,
        torsion: diag.into_iter().filter(|&x| x > 1).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d);
        assert_eq!(s.u.det().abs(), 1);
        assert_eq!(s.v.det().abs(), 1);
        let diag = s.diagonal();
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert_eq!(s.d[(i, j)], 0);
                }
            }
        }
        for w in diag.windows(2) {
            if w[0] != 0 {
                assert_eq!(w[1] % w[0], 0, "divisibility chain {diag:?}");
            } else {
                assert_eq!(w[1], 0);
            }
        }
        s
    }

    #[test]
    fn examples() {
        let s = check(&IntMatrix::two_by_two(2, 0, 0, 3));
        assert_eq!(s.diagonal(), vec![1, 6]);
        let s = check(&IntMatrix::zeros(1, 1));
        assert_eq!(s.diagonal(), vec![0]);
        let s = check(&IntMatrix::two_by_two(2, 4, 6, 8));
        assert_eq!(s.diagonal(), vec![2, 4]);
    }

    #[test]
    fn rectangular_and_degenerate() {
        check(&IntMatrix::from_rows(&[vec![4, 6, 10], vec![6, 9, 15]]).unwrap());
        check(&IntMatrix::from_rows(&[vec![0, 0], vec![0, 7], vec![3, 0]]).unwrap());
        check(&IntMatrix::zeros(0, 3));
    }

    #[test]
    fn abelianization_examples() {
        let t3 = Presentation::parse("gens: a b\nrel: [a,b]^3").unwrap();
        assert_eq!(abelianization(&t3), Abelianization { free_rank: 2, torsion: vec![] });
        let c3 = Presentation::parse("gens: a\nrel: a^3").unwrap();
        assert_eq!(abelianization(&c3), Abelianization { free_rank: 0, torsion: vec![3] });
        let f2 = Presentation::free("F2", &["a", "b"]);
        assert_eq!(abelianization(&f2), Abelianization { free_rank: 2, torsion: vec![] });
    }

    #[test]
    fn z2_two_ways() {
        let a = Presentation::parse("gens: a b\nrel: [a,b]").unwrap();
        let b = Presentation::parse("gens: x y z\nrel: [x,y]\nrel: z x^-1 y^-1").unwrap();
        assert_eq!(abelianization(&a), abelianization(&b));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn random_matrices(rows in 1usize..5, cols in 1usize..5, seed in prop::collection::vec(-9i64..10, 25)) {
                let mut m = IntMatrix::zeros(rows, cols);
                for i in 0..rows {
                    for j in 0..cols {
                        m[(i, j)] = seed[i * 5 + j];
                    }
                }
                check(&m);
            }
        }
    }
}
