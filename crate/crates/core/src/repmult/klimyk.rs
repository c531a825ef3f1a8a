//! Tensor product multiplicities by Klimyk's formula: iterate over the
//! weights `xi` of one factor, move `other + xi + rho` into the dominant
//! chamber with the rho-shifted action, and accumulate signed multiplicities.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use super::{require_dominant, weight_multiplicities, weyl_dimension, CharacterTable, WorkBound};
use crate::error::Result;
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::to_dominant;

/// Where the shifted weight `v` (already including rho) lands after
/// reflecting into the dominant chamber: `None` when `v` lies on a wall
/// (fixed by some reflection, contributing zero), else the highest weight
/// `w(v) - rho` and the sign of `w`.
pub(crate) fn dot_reflect(rs: &RootSystem, v: &Weight) -> Option<(Weight, i8)> {
    let (dom, steps) = to_dominant(rs, v);
    if dom.coords().contains(&0) {
        return None;
    }
    let sign = if steps % 2 == 0 { 1 } else { -1 };
    Some((&dom - &rs.rho(), sign))
}

// The factor with the smaller dimension is iterated; ties go to `mu`.
fn split_factors<'a>(
    rs: &RootSystem,
    lambda: &'a Weight,
    mu: &'a Weight,
) -> Result<(&'a Weight, &'a Weight)> {
    let dl = weyl_dimension(rs, lambda)?;
    let dm = weyl_dimension(rs, mu)?;
    Ok(if dl < dm { (lambda, mu) } else { (mu, lambda) })
}

fn accumulate(
    rs: &RootSystem,
    fixed: &Weight,
    character: &CharacterTable,
    mut visit: impl FnMut(Weight, BigInt),
) {
    let base = fixed + &rs.rho();
    for (xi, m) in &character.mults {
        if let Some((target, sign)) = dot_reflect(rs, &(&base + xi)) {
            let m = BigInt::from(m.clone());
            visit(target, if sign > 0 { m } else { -m });
        }
    }
}

/// Multiplicity of `V(nu)` in `V(lambda) (x) V(mu)`.
pub fn tensor_multiplicity(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    bound: WorkBound,
) -> Result<BigUint> {
    require_dominant(rs, lambda)?;
    require_dominant(rs, mu)?;
    require_dominant(rs, nu)?;
    let (iterated, fixed) = split_factors(rs, lambda, mu)?;
    let character = weight_multiplicities(rs, iterated, bound)?;
    let mut total = BigInt::zero();
    accumulate(rs, fixed, &character, |target, m| {
        if &target == nu {
            total += m;
        }
    });
    debug_assert!(!total.is_negative());
    Ok(total.to_biguint().unwrap_or_default())
}

/// Full decomposition of `V(lambda) (x) V(mu)` into irreducibles.
pub fn tensor_decomposition(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    bound: WorkBound,
) -> Result<BTreeMap<Weight, BigUint>> {
    require_dominant(rs, lambda)?;
    require_dominant(rs, mu)?;
    let (iterated, fixed) = split_factors(rs, lambda, mu)?;
    let character = weight_multiplicities(rs, iterated, bound)?;
    let mut acc: BTreeMap<Weight, BigInt> = BTreeMap::new();
    accumulate(rs, fixed, &character, |target, m| {
        *acc.entry(target).or_default() += m;
    });
    Ok(acc
        .into_iter()
        .filter(|(_, m)| !m.is_zero())
        .map(|(w, m)| (w, m.to_biguint().expect("nonnegative multiplicity")))
        .collect())
}
