//! Brute-force Kostant partition function, used as an independent check on
//! the Freudenthal recursion.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rootsys::{RootCoords, RootSystem, Weight};
use crate::weyl::{self, DEFAULT_SIZE_BOUND};

pub const KOSTANT_MAX_RANK: usize = 3;
pub const KOSTANT_MAX_HEIGHT: i64 = 40;

fn count(rest: &mut [i64], roots: &[RootCoords]) -> u64 {
    let Some((first, others)) = roots.split_first() else {
        return u64::from(rest.iter().all(|&c| c == 0));
    };
    let mut total = 0;
    let mut used = 0;
    loop {
        total += count(rest, others);
        if rest.iter().zip(first.coords()).any(|(r, a)| r < a) {
            break;
        }
        rest.iter_mut()
            .zip(first.coords())
            .for_each(|(r, a)| *r -= a);
        used += 1;
    }
    for _ in 0..used {
        rest.iter_mut()
            .zip(first.coords())
            .for_each(|(r, a)| *r += a);
    }
    total
}

/// Number of ways to write `v` as a sum of positive roots, with repetition.
pub fn kostant_partition(rs: &RootSystem, v: &RootCoords) -> Result<u64> {
    v.check_len(rs.rank())?;
    if rs.rank() > KOSTANT_MAX_RANK {
        return Err(Error::WorkBoundExceeded {
            what: "rank for partition enumeration",
            reached: rs.rank(),
            limit: KOSTANT_MAX_RANK,
        });
    }
    if v.height() > KOSTANT_MAX_HEIGHT {
        return Err(Error::WorkBoundExceeded {
            what: "height for partition enumeration",
            reached: v.height() as usize,
            limit: KOSTANT_MAX_HEIGHT as usize,
        });
    }
    if v.coords().iter().any(|&c| c < 0) {
        return Ok(0);
    }
    let mut rest = v.0.clone();
    Ok(count(&mut rest, rs.positive_roots()))
}

/// Kostant's multiplicity formula
/// `m_lambda(mu) = sum_w sign(w) P(w(lambda + rho) - (mu + rho))`.
pub fn kostant_multiplicity(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<BigInt> {
    let shifted_lambda = lambda + &rs.rho();
    let shifted_mu = mu + &rs.rho();
    let mut total = BigInt::from(0);
    for w in weyl::enumerate(rs, DEFAULT_SIZE_BOUND)? {
        let image = weyl::apply(rs, &w, &shifted_lambda)?;
        let Some(diff) = rs.weight_to_root_coords(&(&image - &shifted_mu))? else {
            continue;
        };
        let p = kostant_partition(rs, &diff)?;
        if w.length() % 2 == 0 {
            total += p;
        } else {
            total -= p;
        }
    }
    Ok(total)
}
