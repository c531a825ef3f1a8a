//! Finite-dimensional representation data: dimensions, characters, tensor
//! product multiplicities, and the semistability probe built on them.

mod freudenthal;
mod klimyk;
mod kostant;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

pub use freudenthal::weight_multiplicities;
pub use klimyk::{tensor_decomposition, tensor_multiplicity};
pub use kostant::{kostant_multiplicity, kostant_partition, KOSTANT_MAX_HEIGHT, KOSTANT_MAX_RANK};

/// Default cap on the number of weights any single character may hold.
pub const DEFAULT_MAX_WEIGHTS: usize = 100_000;

/// Limits on how much work a multiplicity computation may do.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WorkBound {
    /// Maximum size of a character's support (dominant weights and full
    /// orbits are both counted against it).
    pub max_weights: usize,
}

impl Default for WorkBound {
    fn default() -> Self {
        WorkBound {
            max_weights: DEFAULT_MAX_WEIGHTS,
        }
    }
}

/// Weight multiplicities of an irreducible representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    pub highest_weight: Weight,
    pub mults: BTreeMap<Weight, BigUint>,
}

impl CharacterTable {
    pub fn multiplicity(&self, mu: &Weight) -> BigUint {
        self.mults.get(mu).cloned().unwrap_or_default()
    }

    pub fn dimension(&self) -> BigUint {
        self.mults.values().sum()
    }

    pub fn support_len(&self) -> usize {
        self.mults.len()
    }
}

pub(crate) fn require_dominant(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    lambda.check_len(rs.rank())?;
    if lambda.is_dominant() {
        Ok(())
    } else {
        Err(Error::NotDominant(lambda.0.clone()))
    }
}

/// Weyl's dimension formula, `prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha)`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<BigUint> {
    require_dominant(rs, lambda)?;
    let shifted = lambda + &rs.rho();
    let rho = rs.rho();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for alpha in rs.positive_roots() {
        num *= rs.pair_weight_root(&shifted, alpha) as u64;
        den *= rs.pair_weight_root(&rho, alpha) as u64;
    }
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

/// `dim [V(lambda) (x) V(mu) (x) V(nu)]^G`, computed as the multiplicity of
/// `V(-w0 lambda)` in `V(mu) (x) V(nu)`.
pub fn triple_invariant_dim(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    bound: WorkBound,
) -> Result<BigUint> {
    require_dominant(rs, lambda)?;
    let w0 = crate::weyl::longest_element(rs);
    let dual = -crate::weyl::apply(rs, &w0, lambda)?;
    tensor_multiplicity(rs, mu, nu, &dual, bound)
}

/// One-sided evidence for a nonempty semistable locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ProbeOutcome {
    /// Invariants exist in degree `n`, the least such `n` tried.
    NonEmpty { n: u32 },
    /// No invariants in any degree up to `n_max`; says nothing beyond it.
    EmptyUpTo { n_max: u32 },
}

/// Searches `N = 1..=n_max` for nonzero `dim [V(N lambda) (x) V(N mu) (x) V(N nu)]^G`.
pub fn semistable_probe(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    n_max: u32,
    bound: WorkBound,
) -> Result<ProbeOutcome> {
    for w in [lambda, mu, nu] {
        w.check_len(rs.rank())?;
        if !w.is_dominant_regular() {
            return Err(Error::NotDominantRegular(w.0.clone()));
        }
    }
    for n in 1..=n_max {
        let k = n as i64;
        let dim = triple_invariant_dim(rs, &lambda.scale(k), &mu.scale(k), &nu.scale(k), bound)
            .map_err(|e| Error::ProbeAborted {
                n,
                source: Box::new(e),
            })?;
        if !dim.is_zero() {
            return Ok(ProbeOutcome::NonEmpty { n });
        }
    }
    Ok(ProbeOutcome::EmptyUpTo { n_max })
}
