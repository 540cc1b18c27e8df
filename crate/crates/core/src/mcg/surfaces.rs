//! Surface bookkeeping for wreath-product actions and the block-matrix
//! realization of wreath elements with symplectic bottoms.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::symplectic::is_symplectic;
use crate::constructions::wreath::WreathElement;
use crate::matrix::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub genus: i64,
    pub boundary: i64,
}

impl SurfaceSpec {
    pub fn new(genus: i64, boundary: i64) -> Self {
        SurfaceSpec { genus, boundary }
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus - self.boundary
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenusError {
    #[error("surface must have at least one boundary component")]
    NoBoundary,
    #[error("orbit count m must be at least 1")]
    NoOrbits,
    #[error("genus {0} and orbit count must be non-negative")]
    Negative(i64),
    #[error("Euler characteristic {0} is odd")]
    Parity(i64),
    #[error("stepwise and closed-form genus disagree: {stepwise} vs {closed}")]
    Mismatch { stepwise: i64, closed: i64 },
}

/// Stepwise Euler characteristics of the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusSteps {
    /// `S` with a one-holed torus glued to all but one boundary circle.
    pub capped: i64,
    /// `S_h` with `m` discs removed.
    pub punctured_base: i64,
    /// The closed result.
    pub closed: i64,
    pub genus: i64,
}

/// Each gluing along a circle adds Euler characteristics.
pub fn genus_steps(g_s: i64, b: i64, h: i64, m: i64) -> Result<GenusSteps, GenusError> {
    if b < 1 {
        return Err(GenusError::NoBoundary);
    }
    if m < 1 {
        return Err(GenusError::NoOrbits);
    }
    if let Some(&x) = [g_s, h].iter().find(|&&x| x < 0) {
        return Err(GenusError::Negative(x));
    }
    let one_holed_torus = SurfaceSpec::new(1, 1).euler_characteristic();
    let capped = SurfaceSpec::new(g_s, b).euler_characteristic() + (b - 1) * one_holed_torus;
    let punctured_base = SurfaceSpec::new(h, m).euler_characteristic();
    let closed = punctured_base + m * capped;
    if closed % 2 != 0 {
        return Err(GenusError::Parity(closed));
    }
    Ok(GenusSteps {
        capped,
        punctured_base,
        closed,
        genus: (2 - closed) / 2,
    })
}

/// Genus of `S_h` with `m` discs replaced by copies of the capped `S`:
/// `h + m (g_S + b - 1)`, checked against the stepwise count.
pub fn wreath_genus(g_s: i64, b: i64, h: i64, m: i64) -> Result<i64, GenusError> {
    let steps = genus_steps(g_s, b, h, m)?;
    let closed = h + m * (g_s + b - 1);
    if steps.genus != closed {
        return Err(GenusError::Mismatch {
            stepwise: steps.genus,
            closed,
        });
    }
    Ok(closed)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("bottom {index} is {rows}x{cols}, expected {dim}x{dim}")]
    Dimension { index: usize, rows: usize, cols: usize, dim: usize },
    #[error("bottom {0} is not symplectic")]
    NotSymplectic(usize),
}

/// Block `(c, top[c])` holds `bottom[c]`; all other blocks vanish.
/// Composition of wreath elements maps to the matrix product.
pub fn block_wreath_embed(w: &WreathElement<IntMatrix>, block_dim: usize) -> Result<IntMatrix, BlockError> {
    for (index, m) in w.bottom.iter().enumerate() {
        if m.rows() != block_dim || m.cols() != block_dim {
            return Err(BlockError::Dimension {
                index,
                rows: m.rows(),
                cols: m.cols(),
                dim: block_dim,
            });
        }
        if !is_symplectic(m) {
            return Err(BlockError::NotSymplectic(index));
        }
    }
    let n = w.degree();
    let mut out = IntMatrix::zeros(n * block_dim, n * block_dim);
    for (c, m) in w.bottom.iter().enumerate() {
        let (r0, c0) = (c * block_dim, w.top[c] * block_dim);
        for i in 0..block_dim {
            for j in 0..block_dim {
                out[(r0 + i, c0 + j)] = m[(i, j)];
            }
        }
    }
    Ok(out)
}
