//! Root data for the simple types.
//!
//! Conventions: nodes are numbered as in Bourbaki, and the Cartan matrix is
//! stored so that `cartan[i][j] = <alpha_j, alpha_i^vee>`. Column `j` is then
//! the simple root `alpha_j` written over the fundamental weights, and
//! converting root coordinates to weight coordinates is a single product.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    /// Whether `(self, rank)` names a simple type this crate can build.
    pub fn admits(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            _ => Err(Error::TypeSyntax(s.to_string())),
        }
    }
}

/// Parses a type label such as `"B3"` into family and rank.
pub fn parse_type(label: &str) -> Result<(Family, usize)> {
    let label = label.trim();
    let mut chars = label.chars();
    let head = chars
        .next()
        .ok_or_else(|| Error::TypeSyntax(label.to_string()))?;
    let family: Family = head.to_string().parse()?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::TypeSyntax(label.to_string()))?;
    Ok((family, rank))
}

macro_rules! int_vector {
    ($name:ident) => {
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub Vec<i64>);

        impl $name {
            pub fn new(coords: Vec<i64>) -> Self {
                Self(coords)
            }

            pub fn zero(rank: usize) -> Self {
                Self(vec![0; rank])
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }

            pub fn scale(&self, k: i64) -> Self {
                Self(self.0.iter().map(|c| c * k).collect())
            }

            pub fn check_len(&self, rank: usize) -> Result<()> {
                if self.0.len() == rank {
                    Ok(())
                } else {
                    Err(Error::DimensionMismatch {
                        expected: rank,
                        found: self.0.len(),
                    })
                }
            }
        }

        impl From<Vec<i64>> for $name {
            fn from(v: Vec<i64>) -> Self {
                Self(v)
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                debug_assert_eq!(self.0.len(), rhs.0.len());
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Add for $name {
            type Output = $name;
            fn add(self, rhs: $name) -> $name {
                &self + &rhs
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                debug_assert_eq!(self.0.len(), rhs.0.len());
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Sub for $name {
            type Output = $name;
            fn sub(self, rhs: $name) -> $name {
                &self - &rhs
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|c| -c).collect())
            }
        }

        impl Neg for $name {
            type Output = $name;
            fn neg(self) -> $name {
                -&self
            }
        }

        impl Mul<&$name> for i64 {
            type Output = $name;
            fn mul(self, rhs: &$name) -> $name {
                rhs.scale(self)
            }
        }
    };
}

int_vector!(Weight);
int_vector!(RootCoords);

impl Weight {
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_dominant_regular(&self) -> bool {
        self.0.iter().all(|&c| c >= 1)
    }
}

impl RootCoords {
    /// Sum of the coefficients over the simple roots.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Self(v)
    }
}

/// An irreducible reduced root system together with the data the descent
/// conditions need (highest root and the lcm of its coefficients).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<RootCoords>,
    theta: RootCoords,
    d: u64,
    symmetrizer: Vec<i64>,
    cartan_det: i64,
    // det(A) * A^{-1}
    cartan_adj: Vec<Vec<i64>>,
    root_index: HashMap<RootCoords, usize>,
}

#[derive(Serialize)]
struct RootSystemJson<'a> {
    family: Family,
    rank: usize,
    cartan: &'a [Vec<i64>],
    positive_roots: &'a [RootCoords],
    theta: &'a RootCoords,
    d: u64,
}

impl Serialize for RootSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RootSystemJson {
            family: self.family,
            rank: self.rank,
            cartan: &self.cartan,
            positive_roots: &self.positive_roots,
            theta: &self.theta,
            d: self.d,
        }
        .serialize(s)
    }
}

fn cartan_matrix(family: Family, rank: usize) -> Vec<Vec<i64>> {
    let n = rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match family {
        Family::A => (0..n.saturating_sub(1)).for_each(|i| link(i, i + 1)),
        Family::B | Family::C => (0..n - 1).for_each(|i| link(i, i + 1)),
        Family::D => {
            (0..n - 2).for_each(|i| link(i, i + 1));
            link(n - 3, n - 1);
        }
        Family::E => {
            link(0, 2);
            link(1, 3);
            (2..n - 1).for_each(|i| link(i, i + 1));
        }
        Family::F => (0..3).for_each(|i| link(i, i + 1)),
        Family::G => link(0, 1),
    }
    // Double and triple bonds: the long root pairs to -2 (-3) against the
    // short coroot.
    match family {
        Family::B => a[n - 1][n - 2] = -2,
        Family::C => a[n - 2][n - 1] = -2,
        Family::F => a[2][1] = -2,
        Family::G => a[0][1] = -3,
        _ => {}
    }
    a
}

fn determinant(m: &[Vec<i64>]) -> i64 {
    // Bareiss fraction-free elimination.
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

fn adjugate(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![1]];
    }
    let mut adj = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i64>> = m
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != j)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != i)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[i][j] = sign * determinant(&minor);
        }
    }
    adj
}

fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    // d_i a_ij = d_j a_ji, propagated along the (connected) Dynkin diagram as
    // fractions num/den, then cleared of denominators.
    let n = cartan.len();
    let mut frac: Vec<Option<(i64, i64)>> = vec![None; n];
    frac[0] = Some((1, 1));
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        let (num, den) = frac[i].unwrap();
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && frac[j].is_none() {
                let (p, q) = (num * cartan[i][j], den * cartan[j][i]);
                let g = p.gcd(&q);
                let (p, q) = (p / g, q / g);
                let (p, q) = if q < 0 { (-p, -q) } else { (p, q) };
                frac[j] = Some((p, q));
                stack.push(j);
            }
        }
    }
    let frac: Vec<(i64, i64)> = frac.into_iter().map(Option::unwrap).collect();
    let l = frac.iter().fold(1i64, |acc, &(_, q)| acc.lcm(&q));
    let ints: Vec<i64> = frac.iter().map(|&(p, q)| p * (l / q)).collect();
    let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    ints.into_iter().map(|x| x / g).collect()
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.admits(rank) {
            return Err(Error::InvalidType { family, rank });
        }
        let cartan = cartan_matrix(family, rank);
        let symmetrizer = symmetrizer(&cartan);
        let cartan_det = determinant(&cartan);
        let cartan_adj = adjugate(&cartan);

        let mut rs = RootSystem {
            family,
            rank,
            cartan,
            positive_roots: Vec::new(),
            theta: RootCoords::zero(rank),
            d: 1,
            symmetrizer,
            cartan_det,
            cartan_adj,
            root_index: HashMap::new(),
        };
        rs.positive_roots = rs.close_positive_roots();
        rs.theta = rs
            .positive_roots
            .last()
            .cloned()
            .expect("nonempty root system");
        rs.d = rs
            .theta
            .coords()
            .iter()
            .fold(1u64, |acc, &c| acc.lcm(&(c as u64)));
        rs.root_index = rs
            .positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        Ok(rs)
    }

    /// Builds from a label such as `"E8"`.
    pub fn from_label(label: &str) -> Result<Self> {
        let (family, rank) = parse_type(label)?;
        Self::new(family, rank)
    }

    // Height-graded closure: beta + alpha_i is a root iff the alpha_i-string
    // through beta extends upward, i.e. p - <beta, alpha_i^vee> > 0.
    fn close_positive_roots(&self) -> Vec<RootCoords> {
        let n = self.rank;
        let mut all: Vec<RootCoords> = (0..n).map(|i| RootCoords::simple(n, i)).collect();
        let mut known: std::collections::HashSet<RootCoords> = all.iter().cloned().collect();
        let mut layer = all.clone();
        while !layer.is_empty() {
            let mut next = std::collections::BTreeSet::new();
            for beta in &layer {
                let pairing = self.coroot_pairings(beta);
                for (i, &pair) in pairing.iter().enumerate() {
                    let mut p = 0i64;
                    loop {
                        let mut down = beta.clone();
                        down.0[i] -= p + 1;
                        if known.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - pair > 0 {
                        let mut up = beta.clone();
                        up.0[i] += 1;
                        next.insert(up);
                    }
                }
            }
            // Descending lexicographic within a height, so simple roots come
            // out in node order.
            layer = next.into_iter().rev().collect();
            known.extend(layer.iter().cloned());
            all.extend(layer.iter().cloned());
        }
        all
    }

    /// `<beta, alpha_i^vee>` for every i, i.e. `beta` in weight coordinates.
    fn coroot_pairings(&self, beta: &RootCoords) -> Vec<i64> {
        self.cartan
            .iter()
            .map(|row| row.iter().zip(beta.coords()).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[RootCoords] {
        &self.positive_roots
    }

    /// The highest root.
    pub fn theta(&self) -> &RootCoords {
        &self.theta
    }

    /// Least common multiple of the coefficients of the highest root.
    pub fn d(&self) -> u64 {
        self.d
    }

    /// Positive integers `d_i` with `diag(d_i) * cartan` symmetric; short
    /// roots get `d_i = 1`.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn cartan_determinant(&self) -> i64 {
        self.cartan_det
    }

    pub fn is_root(&self, r: &RootCoords) -> bool {
        self.root_index.contains_key(r) || self.root_index.contains_key(&-r)
    }

    pub fn is_positive_root(&self, r: &RootCoords) -> bool {
        self.root_index.contains_key(r)
    }

    pub fn simple_root(&self, i: usize) -> RootCoords {
        RootCoords::simple(self.rank, i)
    }

    /// The same lattice vector expressed over the fundamental weights.
    pub fn root_to_weight_coords(&self, r: &RootCoords) -> Result<Weight> {
        r.check_len(self.rank)?;
        Ok(Weight(self.coroot_pairings(r)))
    }

    /// Inverse of [`root_to_weight_coords`](Self::root_to_weight_coords);
    /// `None` when the weight is not in the root lattice.
    pub fn weight_to_root_coords(&self, w: &Weight) -> Result<Option<RootCoords>> {
        w.check_len(self.rank)?;
        let mut out = Vec::with_capacity(self.rank);
        for row in &self.cartan_adj {
            let num: i64 = row.iter().zip(w.coords()).map(|(a, b)| a * b).sum();
            if num % self.cartan_det != 0 {
                return Ok(None);
            }
            out.push(num / self.cartan_det);
        }
        Ok(Some(RootCoords(out)))
    }

    /// Half the sum of the positive roots: all ones over the fundamental
    /// weights.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    /// Fundamental weight `varpi_i` (0-based).
    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        Weight(v)
    }

    /// `(lambda, beta)` for a weight and a root-lattice vector, in the
    /// normalization where short simple roots have `(alpha, alpha) = 2`.
    pub fn pair_weight_root(&self, lambda: &Weight, beta: &RootCoords) -> i64 {
        lambda
            .coords()
            .iter()
            .zip(beta.coords())
            .zip(&self.symmetrizer)
            .map(|((l, b), d)| l * b * d)
            .sum()
    }

    /// `(beta, gamma)` for two root-lattice vectors, same normalization.
    pub fn pair_roots(&self, beta: &RootCoords, gamma: &RootCoords) -> i64 {
        let as_weight = Weight(self.coroot_pairings(gamma));
        self.pair_weight_root(&as_weight, beta)
    }

    /// Coxeter number `h`; for every simple type `height(theta) + 1 = h`.
    pub fn coxeter_number(&self) -> u64 {
        let l = self.rank as u64;
        match self.family {
            Family::A => l + 1,
            Family::B | Family::C => 2 * l,
            Family::D => 2 * l - 2,
            Family::E => match l {
                6 => 12,
                7 => 18,
                _ => 30,
            },
            Family::F => 12,
            Family::G => 6,
        }
    }

    /// `|W|` from the product formula, saturating at `u128::MAX`.
    pub fn weyl_group_order(&self) -> u128 {
        let l = self.rank as u128;
        let fact = |k: u128| (1..=k).try_fold(1u128, |acc, x| acc.checked_mul(x));
        let pow2 = |k: u128| 1u128.checked_shl(k as u32);
        let order = match self.family {
            Family::A => fact(l + 1),
            Family::B | Family::C => fact(l).and_then(|f| pow2(l).and_then(|p| f.checked_mul(p))),
            Family::D => fact(l).and_then(|f| pow2(l - 1).and_then(|p| f.checked_mul(p))),
            Family::E => Some(match l {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            }),
            Family::F => Some(1152),
            Family::G => Some(12),
        };
        order.unwrap_or(u128::MAX)
    }

    /// Expected `|R^+|` for the type.
    pub fn expected_positive_root_count(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1) / 2,
            Family::B | Family::C => l * l,
            Family::D => l * (l - 1),
            Family::E => match l {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_small_types() -> Vec<RootSystem> {
        let mut out = Vec::new();
        for l in 1..=6 {
            out.push(RootSystem::new(Family::A, l).unwrap());
        }
        for l in 2..=6 {
            out.push(RootSystem::new(Family::B, l).unwrap());
            out.push(RootSystem::new(Family::C, l).unwrap());
        }
        for l in 4..=7 {
            out.push(RootSystem::new(Family::D, l).unwrap());
        }
        for l in 6..=8 {
            out.push(RootSystem::new(Family::E, l).unwrap());
        }
        out.push(RootSystem::new(Family::F, 4).unwrap());
        out.push(RootSystem::new(Family::G, 2).unwrap());
        out
    }

    #[test]
    fn a2_roots() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let roots: Vec<Vec<i64>> = rs.positive_roots().iter().map(|r| r.0.clone()).collect();
        assert_eq!(roots, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(rs.theta().coords(), &[1, 1]);
        assert_eq!(rs.d(), 1);
    }

    #[test]
    fn e8_theta_and_d() {
        let rs = RootSystem::new(Family::E, 8).unwrap();
        assert_eq!(rs.theta().coords(), &[2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(rs.d(), 60);
        assert_eq!(rs.positive_roots().len(), 120);
    }

    #[test]
    fn g2_theta_and_d() {
        let rs = RootSystem::new(Family::G, 2).unwrap();
        assert_eq!(rs.theta().coords(), &[3, 2]);
        assert_eq!(rs.d(), 6);
        assert_eq!(rs.positive_roots().len(), 6);
    }

    #[test]
    fn inadmissible_types() {
        for (f, l) in [
            (Family::A, 0),
            (Family::B, 1),
            (Family::C, 1),
            (Family::D, 3),
            (Family::E, 5),
            (Family::E, 9),
            (Family::F, 3),
            (Family::G, 3),
        ] {
            assert_eq!(
                RootSystem::new(f, l),
                Err(Error::InvalidType { family: f, rank: l })
            );
        }
        assert!(RootSystem::new(Family::B, 2).is_ok());
    }

    #[test]
    fn parse_labels() {
        assert_eq!(parse_type("B3").unwrap(), (Family::B, 3));
        assert_eq!(parse_type("e8").unwrap(), (Family::E, 8));
        assert!(parse_type("X3").is_err());
        assert!(parse_type("A").is_err());
        assert!(parse_type("").is_err());
    }

    #[test]
    fn root_to_weight_examples() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        assert_eq!(
            rs.root_to_weight_coords(&RootCoords(vec![1, 0])).unwrap(),
            Weight(vec![2, -1])
        );
        assert_eq!(
            rs.root_to_weight_coords(&RootCoords(vec![1, 1])).unwrap(),
            Weight(vec![1, 1])
        );
        assert_eq!(
            rs.root_to_weight_coords(&RootCoords::zero(2)).unwrap(),
            Weight::zero(2)
        );
        assert!(matches!(
            rs.root_to_weight_coords(&RootCoords(vec![1])),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn rho_is_half_sum_of_positive_roots() {
        for rs in all_small_types() {
            let total = rs
                .positive_roots()
                .iter()
                .fold(RootCoords::zero(rs.rank()), |acc, r| &acc + r);
            let two_rho = rs.root_to_weight_coords(&total).unwrap();
            assert_eq!(two_rho, rs.rho().scale(2), "{}", rs.label());
        }
    }

    #[test]
    fn b3_two_rho_by_direct_summation() {
        let rs = RootSystem::new(Family::B, 3).unwrap();
        assert_eq!(rs.positive_roots().len(), 9);
        let total = rs
            .positive_roots()
            .iter()
            .fold(RootCoords::zero(3), |acc, r| &acc + r);
        assert_eq!(total.coords(), &[5, 8, 9]);
        assert_eq!(
            rs.root_to_weight_coords(&total).unwrap(),
            Weight(vec![2, 2, 2])
        );
        assert_eq!(rs.rho(), Weight(vec![1, 1, 1]));
    }

    #[test]
    fn a1_rho() {
        assert_eq!(
            RootSystem::new(Family::A, 1).unwrap().rho(),
            Weight(vec![1])
        );
    }

    #[test]
    fn structural_invariants_hold_for_every_type() {
        for rs in all_small_types() {
            let a = rs.cartan();
            let n = rs.rank();
            for i in 0..n {
                assert_eq!(a[i][i], 2);
                for j in 0..n {
                    if i != j {
                        assert!(a[i][j] <= 0);
                        assert_eq!(a[i][j] == 0, a[j][i] == 0);
                    }
                }
            }
            assert!(rs.cartan_determinant() > 0, "{}", rs.label());
            let dsym = rs.symmetrizer();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(dsym[i] * a[i][j], dsym[j] * a[j][i], "{}", rs.label());
                }
            }
            // Leading principal minors of diag(d) A are positive.
            for k in 1..=n {
                let minor: Vec<Vec<i64>> = (0..k)
                    .map(|i| (0..k).map(|j| dsym[i] * a[i][j]).collect())
                    .collect();
                assert!(determinant(&minor) > 0, "{}", rs.label());
            }
            assert_eq!(
                rs.positive_roots().len(),
                rs.expected_positive_root_count(),
                "{}",
                rs.label()
            );
            let theta_w = rs.root_to_weight_coords(rs.theta()).unwrap();
            assert!(theta_w.is_dominant(), "{}", rs.label());
            assert_eq!(rs.theta().height() as u64 + 1, rs.coxeter_number());
            for i in 0..n {
                let up = rs.theta() + &rs.simple_root(i);
                assert!(!rs.is_root(&up));
            }
            let lcm = rs
                .theta()
                .coords()
                .iter()
                .fold(1u64, |acc, &c| acc.lcm(&(c as u64)));
            assert_eq!(lcm, rs.d());
        }
    }

    #[test]
    fn positive_roots_are_height_graded_then_lexicographic() {
        for rs in all_small_types() {
            for pair in rs.positive_roots().windows(2) {
                let (a, b) = (&pair[0], &pair[1]);
                assert!(a.height() < b.height() || (a.height() == b.height() && a.0 > b.0));
            }
        }
    }

    #[test]
    fn weight_to_root_inverts_conversion() {
        let rs = RootSystem::new(Family::E, 6).unwrap();
        for r in rs.positive_roots() {
            let w = rs.root_to_weight_coords(r).unwrap();
            assert_eq!(rs.weight_to_root_coords(&w).unwrap().as_ref(), Some(r));
        }
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        assert_eq!(a2.weight_to_root_coords(&Weight(vec![1, 0])).unwrap(), None);
        assert_eq!(
            a2.weight_to_root_coords(&Weight(vec![1, 1])).unwrap(),
            Some(RootCoords(vec![1, 1]))
        );
    }

    #[test]
    fn weyl_orders() {
        let order = |f, l| RootSystem::new(f, l).unwrap().weyl_group_order();
        assert_eq!(order(Family::A, 2), 6);
        assert_eq!(order(Family::B, 3), 48);
        assert_eq!(order(Family::D, 4), 192);
        assert_eq!(order(Family::F, 4), 1152);
        assert_eq!(order(Family::E, 8), 696_729_600);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn conversion_is_additive_and_injective(
                a in proptest::collection::vec(-20i64..20, 4),
                b in proptest::collection::vec(-20i64..20, 4),
                which in 0usize..4,
            ) {
                let label = ["A4", "B4", "C4", "F4"][which];
                let rs = RootSystem::from_label(label).unwrap();
                let (ra, rb) = (RootCoords(a), RootCoords(b));
                let wa = rs.root_to_weight_coords(&ra).unwrap();
                let wb = rs.root_to_weight_coords(&rb).unwrap();
                prop_assert_eq!(rs.root_to_weight_coords(&(&ra + &rb)).unwrap(), &wa + &wb);
                prop_assert_eq!(wa == wb, ra == rb);
            }
        }
    }
}
