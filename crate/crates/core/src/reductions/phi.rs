//! A surjection `Γ₀(N) -> Z` for prime `N`, computed through the image of
//! `Γ₀(N)` in `PSL(2, Z) = <s, u | s^2, u^3>` with `s = S`, `u = S T`.
//!
//! Evaluation: matrix -> word in `S, T` -> word in `s, u` (`S ↦ s`,
//! `T ↦ s^-1 u`, exact in `SL(2, Z)`) -> Schreier word -> weighted exponent sum.
//! `±m` give the same value since the pipeline runs in `PSL(2, Z)`.

use num_integer::gcd;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::sl2::{check_sl2, gamma0_membership, sl2z_word, Sl2Error, S};
use crate::constructions::coset::{todd_coxeter, CosetError, CosetTable};
use crate::constructions::schreier::{reidemeister_schreier, SchreierBasis, SchreierError};
use crate::hom::GroupHom;
use crate::matrix::IntMatrix;
use crate::presentation::Presentation;
use crate::solvers::snf::{relation_matrix, smith_normal_form, Abelianization};
use crate::word::{Letter, Sign, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PhiError {
    #[error("level {0} is not prime")]
    NotPrime(i64),
    #[error(transparent)]
    Coset(#[from] CosetError),
    #[error(transparent)]
    Schreier(#[from] SchreierError),
    #[error(transparent)]
    Sl2(#[from] Sl2Error),
    #[error("coset enumeration gave index {enumerated}, projective line has {expected} points")]
    IndexMismatch { enumerated: usize, expected: usize },
    #[error("abelianization has free rank 0: no surjection to Z")]
    NoSurjection,
    #[error("matrix is not in Γ₀({0})")]
    NotInSubgroup(i64),
}

/// `<s, u | s^2, u^3>`.
pub fn psl2z_presentation() -> Presentation {
    Presentation::parse("name: PSL2Z\ngens: s u\nrel: s^2\nrel: u^3").expect("static presentation")
}

pub fn psl_generator_matrices() -> [IntMatrix; 2] {
    [IntMatrix::two_by_two(0, -1, 1, 0), IntMatrix::two_by_two(0, -1, 1, 1)]
}

fn is_prime(n: i64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Index of `(x : y)` on `P^1(F_p)`: `x/y` for `y ≠ 0`, `p` for `∞`.
fn point_index(x: i64, y: i64, p: i64) -> usize {
    let (x, y) = (x.rem_euclid(p), y.rem_euclid(p));
    if y == 0 {
        return p as usize;
    }
    let inv = (1..p).find(|k| (k * y) % p == 1).expect("p prime");
    ((x * inv) % p) as usize
}

fn point(i: usize, p: i64) -> (i64, i64) {
    if i as i64 == p {
        (1, 0)
    } else {
        (i as i64, 1)
    }
}

/// Right action of `s` and `u` on `P^1(F_p)` via row vectors; point 0 is `(0 : 1)`,
/// whose stabilizer is `Γ₀(p)`.
pub fn projective_line_permutations(p: i64) -> [Vec<usize>; 2] {
    psl_generator_matrices().map(|m| {
        (0..=p as usize)
            .map(|i| {
                let (x, y) = point(i, p);
                point_index(x * m[(0, 0)] + y * m[(1, 0)], x * m[(0, 1)] + y * m[(1, 1)], p)
            })
            .collect()
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PhiMap {
    pub level: i64,
    pub psl: Presentation,
    /// Size of the orbit of `(0 : 1)` on the projective line.
    pub oracle_index: usize,
    pub table: CosetTable,
    pub subgroup: Presentation,
    pub inclusion: GroupHom,
    pub abelianization: Abelianization,
    /// Coordinate of the relation-matrix SNF used for φ.
    pub coordinate: usize,
    /// φ on the Schreier generators.
    pub weights: Vec<i64>,
    pub hom: GroupHom,
}

pub fn build_phi(level: i64) -> Result<PhiMap, PhiError> {
    if !is_prime(level) {
        return Err(PhiError::NotPrime(level));
    }
    let psl = psl2z_presentation();
    let oracle = CosetTable::from_permutations(&projective_line_permutations(level))?;
    let basis = SchreierBasis::new(&oracle);
    let gens: Vec<Word> = (0..basis.pairs().len()).map(|i| basis.generator_word(&oracle, i)).collect();

    let table = todd_coxeter(&psl, &gens, 16 * (level as usize + 1))?;
    if table.index() != oracle.index() {
        return Err(PhiError::IndexMismatch {
            enumerated: table.index(),
            expected: oracle.index(),
        });
    }
    let (subgroup, inclusion) = reidemeister_schreier(&psl, &table)?;

    let rel = relation_matrix(&subgroup);
    let snf = smith_normal_form(&rel);
    let diag = snf.diagonal();
    let rank = diag.iter().filter(|&&d| d != 0).count();
    let abelianization = Abelianization {
        free_rank: subgroup.rank() - rank,
        torsion: diag.iter().copied().filter(|&d| d > 1).collect(),
    };
    let coordinate = (0..subgroup.rank())
        .find(|&j| diag.get(j).map_or(true, |&d| d == 0))
        .ok_or(PhiError::NoSurjection)?;
    let weights: Vec<i64> = (0..subgroup.rank()).map(|i| snf.v[(i, coordinate)]).collect();
    let kills_relators = (0..rel.rows()).all(|r| (0..rel.cols()).map(|c| rel[(r, c)] * weights[c]).sum::<i64>() == 0);
    if !kills_relators || weights.iter().fold(0, |g, &w| gcd(g, w)) != 1 {
        return Err(PhiError::NoSurjection);
    }
    let z = Presentation::free("Z", &["t"]);
    let images = weights.iter().map(|&w| Word::generator(0).pow(w)).collect();
    let hom = GroupHom::new(subgroup.clone(), z, images).expect("φ images are over Z");

    Ok(PhiMap {
        level,
        psl,
        oracle_index: oracle.index(),
        table,
        subgroup,
        inclusion,
        abelianization,
        coordinate,
        weights,
        hom,
    })
}

/// `S ↦ s`, `T ↦ s^-1 u`.
pub fn st_to_psl(w: &Word) -> Word {
    w.substitute(|l| {
        let image = if l.generator() == S {
            Word::generator(0)
        } else {
            Word::reduce([Letter::neg(0), Letter::pos(1)])
        };
        match l.sign() {
            Sign::Pos => image,
            Sign::Neg => image.inverse(),
        }
    })
}

impl PhiMap {
    /// Schreier word of a `Γ₀(level)` matrix.
    pub fn schreier_word(&self, m: &IntMatrix) -> Result<Word, PhiError> {
        check_sl2(m)?;
        if !gamma0_membership(m, self.level)? {
            return Err(PhiError::NotInSubgroup(self.level));
        }
        let w = st_to_psl(&sl2z_word(m)?);
        Ok(SchreierBasis::new(&self.table).rewrite(&self.table, &w)?)
    }

    pub fn evaluate(&self, m: &IntMatrix) -> Result<i64, PhiError> {
        let s = self.schreier_word(m)?;
        Ok(s.exponent_sums(self.subgroup.rank())
            .iter()
            .zip(&self.weights)
            .map(|(e, w)| e * w)
            .sum())
    }
}
