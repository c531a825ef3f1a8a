use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{require_dominant, CharacterTable, WorkBound};
use crate::error::{Error, Result};
use crate::rootsys::{RootCoords, RootSystem, Weight};
use crate::weyl::{reflect_weight, to_dominant};

/// Dominant weights of `V(lambda)` with their depth `lambda - mu` in root
/// coordinates. Covering relations among dominant weights are differences
/// of positive roots, so subtracting positive roots from `lambda` while
/// staying dominant reaches all of them.
fn dominant_weights(
    rs: &RootSystem,
    lambda: &Weight,
    bound: WorkBound,
) -> Result<Vec<(Weight, RootCoords)>> {
    let roots: Vec<(Weight, &RootCoords)> = rs
        .positive_roots()
        .iter()
        .map(|a| (rs.root_to_weight_coords(a).expect("rank-length"), a))
        .collect();
    let mut seen: HashSet<Weight> = HashSet::from([lambda.clone()]);
    let mut out = vec![(lambda.clone(), RootCoords::zero(rs.rank()))];
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        let (mu, depth) = out[k].clone();
        for (alpha_w, alpha) in &roots {
            let next = &mu - alpha_w;
            if next.is_dominant() && seen.insert(next.clone()) {
                if out.len() >= bound.max_weights {
                    return Err(Error::WorkBoundExceeded {
                        what: "dominant weights",
                        reached: out.len() + 1,
                        limit: bound.max_weights,
                    });
                }
                out.push((next, &depth + alpha));
                queue.push_back(out.len() - 1);
            }
        }
    }
    Ok(out)
}

/// Multiplicities of the dominant weights of `V(lambda)` by Freudenthal's
/// recursion.
pub(crate) fn dominant_multiplicities(
    rs: &RootSystem,
    lambda: &Weight,
    bound: WorkBound,
) -> Result<BTreeMap<Weight, BigUint>> {
    require_dominant(rs, lambda)?;
    let mut dominant = dominant_weights(rs, lambda, bound)?;
    dominant.sort_by_key(|(_, depth)| depth.height());

    let shifted = lambda + &rs.rho();
    let roots: Vec<(Weight, &RootCoords)> = rs
        .positive_roots()
        .iter()
        .map(|a| (rs.root_to_weight_coords(a).expect("rank-length"), a))
        .collect();

    let mut mult: HashMap<Weight, BigInt> = HashMap::with_capacity(dominant.len());
    mult.insert(lambda.clone(), BigInt::one());
    for (mu, depth) in dominant.iter().skip(1) {
        let mut sum = BigInt::zero();
        for (alpha_w, alpha) in &roots {
            let mut up = mu + alpha_w;
            loop {
                let (rep, _) = to_dominant(rs, &up);
                let Some(m) = mult.get(&rep) else { break };
                sum += m * rs.pair_weight_root(&up, alpha);
                up = &up + alpha_w;
            }
        }
        // (lambda + rho)^2 - (mu + rho)^2 with mu = lambda - depth.
        let denom = 2 * rs.pair_weight_root(&shifted, depth) - rs.pair_roots(depth, depth);
        debug_assert!(denom > 0);
        let num: BigInt = sum * 2;
        let denom = BigInt::from(denom);
        debug_assert!((&num % &denom).is_zero());
        mult.insert(mu.clone(), num / &denom);
    }
    Ok(mult
        .into_iter()
        .map(|(w, m)| (w, m.to_biguint().expect("multiplicities are positive")))
        .collect())
}

/// Full character of `V(lambda)`: Freudenthal on the dominant chamber,
/// spread over Weyl orbits.
pub fn weight_multiplicities(
    rs: &RootSystem,
    lambda: &Weight,
    bound: WorkBound,
) -> Result<CharacterTable> {
    let dominant = dominant_multiplicities(rs, lambda, bound)?;
    let mut mults = BTreeMap::new();
    for (mu, m) in dominant {
        let mut queue = VecDeque::from([mu.clone()]);
        let mut orbit = HashSet::from([mu]);
        while let Some(v) = queue.pop_front() {
            for i in 0..rs.rank() {
                let mut next = v.0.clone();
                reflect_weight(rs, i, &mut next);
                let next = Weight(next);
                if orbit.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
            if mults.len() + orbit.len() > bound.max_weights {
                return Err(Error::WorkBoundExceeded {
                    what: "character support",
                    reached: mults.len() + orbit.len(),
                    limit: bound.max_weights,
                });
            }
        }
        for v in orbit {
            mults.insert(v, m.clone());
        }
    }
    Ok(CharacterTable {
        highest_weight: lambda.clone(),
        mults,
    })
}
