//! Brute-force oracles shared by the integration tests. None of them go
//! through Hermite or Smith forms.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;
use rand::Rng;

use tripleflag::repmult::{weight_multiplicities, WorkBound};
use tripleflag::{RootSystem, Weight};

/// Determinant by cofactor expansion.
pub fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        n => (0..n)
            .filter(|&j| m[0][j] != 0)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

/// All `k`-element subsets of `0..n`, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Rank of the span of `gens` and the gcd of its maximal nonzero minors
/// (the product of the elementary divisors).
pub fn determinantal_divisor(gens: &[Vec<i64>], dim: usize) -> (usize, i128) {
    for r in (1..=gens.len().min(dim)).rev() {
        let mut g: i128 = 0;
        for rows in combinations(gens.len(), r) {
            for cols in combinations(dim, r) {
                let m: Vec<Vec<i128>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| gens[i][j] as i128).collect())
                    .collect();
                g = g.gcd(&det(&m));
            }
        }
        if g != 0 {
            return (r, g);
        }
    }
    (0, 1)
}

/// `v` lies in the lattice spanned by `gens` iff adjoining it changes
/// neither the rank nor the determinantal divisor.
pub fn lattice_contains(gens: &[Vec<i64>], dim: usize, v: &[i64]) -> bool {
    let base = determinantal_divisor(gens, dim);
    let mut more = gens.to_vec();
    more.push(v.to_vec());
    base == determinantal_divisor(&more, dim)
}

/// `[Z^dim : span(gens)]`, or `None` when the span is not of full rank.
pub fn lattice_index(gens: &[Vec<i64>], dim: usize) -> Option<i128> {
    match determinantal_divisor(gens, dim) {
        (r, d) if r == dim => Some(d),
        _ => None,
    }
}

/// Every integer point of `[-r, r]^dim`.
pub fn box_points(dim: usize, r: i64) -> Vec<Vec<i64>> {
    let side = (2 * r + 1) as usize;
    let total = side.pow(dim as u32);
    (0..total)
        .map(|mut k| {
            (0..dim)
                .map(|_| {
                    let c = (k % side) as i64 - r;
                    k /= side;
                    c
                })
                .collect()
        })
        .collect()
}

pub fn random_generators(rng: &mut impl Rng, dim: usize, count: usize, max: i64) -> Vec<Vec<i64>> {
    (0..count)
        .map(|_| (0..dim).map(|_| rng.gen_range(-max..=max)).collect())
        .collect()
}

/// Simple reflection straight from the Cartan matrix:
/// `s_i(lambda) = lambda - lambda_i alpha_i`, with `alpha_i` the i-th column.
pub fn reflect(rs: &RootSystem, i: usize, lambda: &[i64]) -> Vec<i64> {
    let a = rs.cartan();
    (0..lambda.len())
        .map(|j| lambda[j] - lambda[i] * a[j][i])
        .collect()
}

/// Dominant weights with coordinates in `0..=max`.
pub fn dominant_box(rank: usize, max: i64) -> Vec<Weight> {
    let side = (max + 1) as usize;
    (0..side.pow(rank as u32))
        .map(|mut k| {
            Weight(
                (0..rank)
                    .map(|_| {
                        let c = (k % side) as i64;
                        k /= side;
                        c
                    })
                    .collect(),
            )
        })
        .collect()
}

pub fn character(rs: &RootSystem, lambda: &Weight) -> BTreeMap<Weight, i64> {
    weight_multiplicities(rs, lambda, WorkBound::default())
        .unwrap()
        .mults
        .into_iter()
        .map(|(w, m)| (w, i64::try_from(&m).unwrap()))
        .collect()
}

// Strictly increasing along every positive root.
fn level(rs: &RootSystem, w: &Weight) -> i64 {
    rs.positive_roots()
        .iter()
        .map(|a| rs.pair_weight_root(w, a))
        .sum()
}

pub type CharacterCache = HashMap<Weight, BTreeMap<Weight, i64>>;

fn cached<'a>(
    rs: &RootSystem,
    cache: &'a mut CharacterCache,
    lambda: &Weight,
) -> &'a BTreeMap<Weight, i64> {
    cache
        .entry(lambda.clone())
        .or_insert_with(|| character(rs, lambda))
}

/// Decomposes `V(lambda) (x) V(mu)` by multiplying characters and peeling
/// off the highest remaining weight.
pub fn product_decomposition(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
) -> BTreeMap<Weight, i64> {
    product_decomposition_cached(rs, lambda, mu, &mut HashMap::new())
}

pub fn product_decomposition_cached(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    cache: &mut CharacterCache,
) -> BTreeMap<Weight, i64> {
    let a = cached(rs, cache, lambda).clone();
    let b = cached(rs, cache, mu);
    let mut product: HashMap<Weight, i64> = HashMap::new();
    for (x, m) in &a {
        for (y, n) in b {
            *product.entry(x + y).or_default() += m * n;
        }
    }
    let mut out = BTreeMap::new();
    loop {
        product.retain(|_, m| *m != 0);
        let Some(top) = product
            .keys()
            .max_by_key(|w| (level(rs, w), w.coords().to_vec()))
            .cloned()
        else {
            break;
        };
        let k = product[&top];
        assert!(
            k > 0 && top.is_dominant(),
            "peeling reached {top:?} with {k}"
        );
        for (w, m) in cached(rs, cache, &top) {
            *product.entry(w.clone()).or_default() -= k * m;
        }
        out.insert(top, k);
    }
    out
}
