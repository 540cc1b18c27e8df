//! `SL(2, Z)` arithmetic: congruence membership, torsion orders and words in
//! `S = [[0,-1],[1,0]]`, `T = [[1,1],[0,1]]`.

use thiserror::Error;

use crate::matrix::IntMatrix;
use crate::presentation::Presentation;
use crate::word::{Letter, Sign, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Sl2Error {
    #[error("expected a 2x2 matrix, got {0}x{1}")]
    Shape(usize, usize),
    #[error("determinant is {0}, not 1")]
    Determinant(i128),
    #[error("level must be positive")]
    Level,
    #[error("word evaluation does not reproduce the matrix")]
    Certification,
}

pub const S: usize = 0;
pub const T: usize = 1;

/// `<S, T | S^4, S^2 (S T)^-3>`.
pub fn sl2z_presentation() -> Presentation {
    Presentation::parse("name: SL2Z\ngens: S T\nrel: S^4\nrel: S^2 (S T)^-3").expect("static presentation")
}

pub fn check_sl2(m: &IntMatrix) -> Result<(), Sl2Error> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Sl2Error::Shape(m.rows(), m.cols()));
    }
    match m.det() {
        1 => Ok(()),
        d => Err(Sl2Error::Determinant(d)),
    }
}

/// True iff `level` divides the bottom-left entry.
pub fn gamma0_membership(m: &IntMatrix, level: i64) -> Result<bool, Sl2Error> {
    check_sl2(m)?;
    if level <= 0 {
        return Err(Sl2Error::Level);
    }
    Ok(m[(1, 0)] % level == 0)
}

/// Least `n <= max_n` with `m^n = I`.
pub fn torsion_order(m: &IntMatrix, max_n: u32) -> Result<Option<u32>, Sl2Error> {
    check_sl2(m)?;
    let mut p = m.clone();
    for n in 1..=max_n {
        if p.is_identity() {
            return Ok(Some(n));
        }
        match p.checked_mul(m) {
            Ok(next) => p = next,
            Err(_) => return Ok(None),
        }
    }
    Ok(None)
}

pub fn letter_matrix(l: Letter) -> IntMatrix {
    match (l.generator(), l.sign()) {
        (S, Sign::Pos) => IntMatrix::two_by_two(0, -1, 1, 0),
        (S, Sign::Neg) => IntMatrix::two_by_two(0, 1, -1, 0),
        (_, Sign::Pos) => IntMatrix::two_by_two(1, 1, 0, 1),
        (_, Sign::Neg) => IntMatrix::two_by_two(1, -1, 0, 1),
    }
}

/// Product of the letter matrices, left to right.
pub fn eval_sl2_word(w: &Word) -> IntMatrix {
    w.letters()
        .iter()
        .fold(IntMatrix::identity(2), |acc, &l| &acc * &letter_matrix(l))
}

/// Euclid on the first column: left-multiply by `T^-q` and `S^-1` until the
/// bottom-left entry vanishes, leaving `±T^k`; `-I` is `S^2`. The result is
/// certified by evaluation.
pub fn sl2z_word(m: &IntMatrix) -> Result<Word, Sl2Error> {
    check_sl2(m)?;
    let mut cur = m.clone();
    let mut letters: Vec<Letter> = Vec::new();
    let t_pow = |k: i64| -> Vec<Letter> {
        let l = if k >= 0 { Letter::pos(T) } else { Letter::neg(T) };
        vec![l; k.unsigned_abs() as usize]
    };
    while cur[(1, 0)] != 0 {
        let q = cur[(0, 0)] / cur[(1, 0)];
        if q != 0 {
            cur = &IntMatrix::two_by_two(1, -q, 0, 1) * &cur;
            letters.extend(t_pow(q));
        }
        cur = &letter_matrix(Letter::neg(S)) * &cur;
        letters.push(Letter::pos(S));
    }
    let eps = cur[(0, 0)];
    if eps == -1 {
        letters.extend([Letter::pos(S), Letter::pos(S)]);
    }
    letters.extend(t_pow(eps * cur[(0, 1)]));
    let w = Word::reduce(letters);
    if eval_sl2_word(&w) != *m {
        return Err(Sl2Error::Certification);
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gamma() -> IntMatrix {
        IntMatrix::two_by_two(4, -1, 17, -4)
    }

    #[test]
    fn congruence_examples() {
        assert_eq!(gamma0_membership(&gamma(), 17), Ok(true));
        assert_eq!(gamma0_membership(&IntMatrix::two_by_two(1, 1, 0, 1), 17), Ok(true));
        assert_eq!(gamma0_membership(&IntMatrix::two_by_two(1, 0, 1, 1), 17), Ok(false));
        assert!(gamma0_membership(&IntMatrix::two_by_two(2, 0, 0, 1), 17).is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(torsion_order(&gamma(), 12), Ok(Some(4)));
        assert_eq!(&gamma() * &gamma(), IntMatrix::identity(2).scale(-1));
        assert_eq!(torsion_order(&IntMatrix::identity(2).scale(-1), 12), Ok(Some(2)));
        assert_eq!(torsion_order(&IntMatrix::two_by_two(1, 1, 0, 1), 12), Ok(None));
    }

    #[test]
    fn words() {
        let s = sl2z_word(&IntMatrix::two_by_two(0, -1, 1, 0)).unwrap();
        assert_eq!(eval_sl2_word(&s), IntMatrix::two_by_two(0, -1, 1, 0));
        assert_eq!(sl2z_word(&IntMatrix::two_by_two(1, 1, 0, 1)).unwrap(), Word::generator(T));
        assert_eq!(sl2z_word(&IntMatrix::identity(2)).unwrap(), Word::identity());
        let lower = IntMatrix::two_by_two(1, 0, 1, 1);
        assert_eq!(eval_sl2_word(&sl2z_word(&lower).unwrap()), lower);
        assert_eq!(eval_sl2_word(&sl2z_word(&gamma()).unwrap()), gamma());
    }

    #[test]
    fn presentation_relators_hold() {
        for r in sl2z_presentation().relators() {
            assert!(eval_sl2_word(r).is_identity());
        }
    }
}
