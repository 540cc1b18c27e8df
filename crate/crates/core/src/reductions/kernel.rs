//! Kernels of maps `G_1 × .. × G_n -> Z` that restrict to given surjections
//! on each factor.

use num_integer::gcd;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hom::GroupHom;
use crate::presentation::Presentation;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZKernelError {
    #[error("{factors} factors but {weights} weight vectors")]
    FactorCount { factors: usize, weights: usize },
    #[error("factor {factor}: expected {expected} weights, got {got}")]
    WeightCount { factor: usize, expected: usize, got: usize },
    #[error("factor {factor}: weights do not kill relator {relator}")]
    NotAHom { factor: usize, relator: usize },
    #[error("factor {0}: weights have gcd != 1, so the map is not onto Z")]
    NotSurjective(usize),
    #[error("tuple has {got} coordinates, expected {expected}")]
    TupleLength { expected: usize, got: usize },
}

/// One weight per generator per factor; `φ_i(w)` is the weighted exponent sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZKernelSpec {
    pub factors: Vec<Presentation>,
    pub weights: Vec<Vec<i64>>,
}

fn weighted(w: &Word, weights: &[i64]) -> i64 {
    w.exponent_sums(weights.len()).iter().zip(weights).map(|(e, k)| e * k).sum()
}

impl ZKernelSpec {
    pub fn new(factors: Vec<Presentation>, weights: Vec<Vec<i64>>) -> Result<Self, ZKernelError> {
        if factors.len() != weights.len() {
            return Err(ZKernelError::FactorCount {
                factors: factors.len(),
                weights: weights.len(),
            });
        }
        for (i, (p, w)) in factors.iter().zip(&weights).enumerate() {
            if w.len() != p.rank() {
                return Err(ZKernelError::WeightCount {
                    factor: i,
                    expected: p.rank(),
                    got: w.len(),
                });
            }
            if let Some(r) = p.relators().iter().position(|r| weighted(r, w) != 0) {
                return Err(ZKernelError::NotAHom { factor: i, relator: r });
            }
            if w.iter().fold(0, |g, &x| gcd(g, x)) != 1 {
                return Err(ZKernelError::NotSurjective(i));
            }
        }
        Ok(ZKernelSpec { factors, weights })
    }

    /// `n` copies of one factor with the same weights.
    pub fn power(factor: Presentation, weights: Vec<i64>, n: usize) -> Result<Self, ZKernelError> {
        ZKernelSpec::new(vec![factor; n], vec![weights; n])
    }

    pub fn phi(&self, i: usize, w: &Word) -> i64 {
        weighted(w, &self.weights[i])
    }

    pub fn phi_hom(&self, i: usize) -> GroupHom {
        let z = Presentation::free("Z", &["t"]);
        let images = self.weights[i].iter().map(|&k| Word::generator(0).pow(k)).collect();
        GroupHom::new(self.factors[i].clone(), z, images).expect("weights give images over Z")
    }
}

/// Member iff `Σ φ_i(tuple[i]) = 0`.
pub fn z_kernel_membership(tuple: &[Word], spec: &ZKernelSpec) -> Result<bool, ZKernelError> {
    if tuple.len() != spec.factors.len() {
        return Err(ZKernelError::TupleLength {
            expected: spec.factors.len(),
            got: tuple.len(),
        });
    }
    Ok(tuple.iter().enumerate().map(|(i, w)| spec.phi(i, w)).sum::<i64>() == 0)
}
