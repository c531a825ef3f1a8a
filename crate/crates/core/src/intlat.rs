//! Finitely generated subgroups of `Z^n` with exact arithmetic.
//!
//! Every lattice is kept in row-style Hermite normal form: basis rows in
//! echelon order, positive pivots, and entries above each pivot reduced into
//! `[0, pivot)`. That form is unique, so two lattices are equal exactly when
//! their bases are.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type BigVec = Vec<BigInt>;

/// Result of a row Hermite reduction `U * M = H`.
struct Reduction {
    /// Nonzero rows of `H`.
    basis: Vec<BigVec>,
    pivots: Vec<usize>,
    /// Rows of `U` whose images are zero: a basis of the left kernel of `M`.
    kernel: Vec<BigVec>,
}

fn combine(
    rows: &mut [BigVec],
    p: usize,
    i: usize,
    (x, y, u, v): (&BigInt, &BigInt, &BigInt, &BigInt),
) {
    // row_p <- x row_p + y row_i ; row_i <- u row_p + v row_i
    let (head, tail) = rows.split_at_mut(i);
    let (rp, ri) = (&mut head[p], &mut tail[0]);
    for (a, b) in rp.iter_mut().zip(ri.iter_mut()) {
        let na = x * &*a + y * &*b;
        let nb = u * &*a + v * &*b;
        *a = na;
        *b = nb;
    }
}

fn hermite_reduce(mut rows: Vec<BigVec>, ncols: usize, track: bool) -> Reduction {
    let m = rows.len();
    let mut transform: Vec<BigVec> = if track {
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        if i == j {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    } else {
        Vec::new()
    };
    let mut pivots = Vec::new();
    let mut p = 0usize;
    for c in 0..ncols {
        if p == m {
            break;
        }
        for i in p + 1..m {
            if rows[i][c].is_zero() {
                continue;
            }
            let a = rows[p][c].clone();
            let b = rows[i][c].clone();
            let eg = a.extended_gcd(&b);
            let g = eg.gcd;
            let coeffs = (&eg.x, &eg.y, &(-(&b / &g)), &(&a / &g));
            combine(&mut rows, p, i, coeffs);
            if track {
                combine(&mut transform, p, i, coeffs);
            }
        }
        if rows[p][c].is_zero() {
            continue;
        }
        if rows[p][c].is_negative() {
            rows[p].iter_mut().for_each(|x| *x = -&*x);
            if track {
                transform[p].iter_mut().for_each(|x| *x = -&*x);
            }
        }
        let pivot = rows[p][c].clone();
        for k in 0..p {
            let q = rows[k][c].div_floor(&pivot);
            if q.is_zero() {
                continue;
            }
            let (head, tail) = rows.split_at_mut(p);
            for (x, y) in head[k].iter_mut().zip(&tail[0]) {
                *x -= &q * y;
            }
            if track {
                let (head, tail) = transform.split_at_mut(p);
                for (x, y) in head[k].iter_mut().zip(&tail[0]) {
                    *x -= &q * y;
                }
            }
        }
        pivots.push(c);
        p += 1;
    }
    let kernel = if track {
        transform.split_off(p)
    } else {
        Vec::new()
    };
    rows.truncate(p);
    Reduction {
        basis: rows,
        pivots,
        kernel,
    }
}

/// Nonzero invariant factors of an integer matrix, each dividing the next.
pub fn smith_invariant_factors(matrix: &[BigVec]) -> Vec<BigInt> {
    let mut a: Vec<BigVec> = matrix.to_vec();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if !a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return finish_divisibility(diag);
            };
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            let pivot = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..m {
                let q = a[i][t].div_floor(&pivot);
                if !q.is_zero() {
                    let (head, tail) = a.split_at_mut(i);
                    for (x, y) in tail[0].iter_mut().zip(&head[t]) {
                        *x -= &q * y;
                    }
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                let q = a[t][j].div_floor(&pivot);
                if !q.is_zero() {
                    for row in a.iter_mut() {
                        let y = row[t].clone();
                        row[j] -= &q * y;
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if clean {
                diag.push(pivot.abs());
                break;
            }
        }
    }
    finish_divisibility(diag)
}

fn finish_divisibility(mut d: Vec<BigInt>) -> Vec<BigInt> {
    // diag(a, b) is equivalent to diag(gcd, lcm).
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

/// A finitely generated subgroup of `Z^n`.
#[derive(Clone)]
pub struct IntegerLattice {
    ambient_dim: usize,
    generators: Vec<BigVec>,
    basis: Vec<BigVec>,
    pivots: Vec<usize>,
    // Copy of the basis when every entry fits comfortably in i64.
    small_basis: Option<Vec<Vec<i64>>>,
}

impl PartialEq for IntegerLattice {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis == other.basis
    }
}

impl Eq for IntegerLattice {}

impl fmt::Debug for IntegerLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IntegerLattice")
            .field("ambient_dim", &self.ambient_dim)
            .field("basis", &self.basis_strings())
            .finish()
    }
}

/// `[sup : sub]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(BigInt),
    Infinite,
}

impl LatticeIndex {
    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            LatticeIndex::Finite(k) => Some(k),
            LatticeIndex::Infinite => None,
        }
    }
}

impl fmt::Display for LatticeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeIndex::Finite(k) => write!(f, "{k}"),
            LatticeIndex::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for LatticeIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            LatticeIndex::Finite(k) => big_json::serialize_one(k, s),
            LatticeIndex::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// Abelian group structure `Z^free_rank + (+)_i Z/invariant_factors[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientStructure {
    pub free_rank: usize,
    #[serde(serialize_with = "big_json::serialize_vec")]
    pub invariant_factors: Vec<BigInt>,
}

impl QuotientStructure {
    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.invariant_factors.iter().product())
    }
}

fn to_big(v: &[i64]) -> BigVec {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

const SMALL_LIMIT: i64 = 1 << 40;

impl IntegerLattice {
    pub fn from_generators<V: AsRef<[i64]>>(ambient_dim: usize, vectors: &[V]) -> Result<Self> {
        let big: Vec<BigVec> = vectors.iter().map(|v| to_big(v.as_ref())).collect();
        Self::from_big_generators(ambient_dim, big)
    }

    pub fn from_big_generators(ambient_dim: usize, generators: Vec<BigVec>) -> Result<Self> {
        for g in &generators {
            if g.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: g.len(),
                });
            }
        }
        let red = hermite_reduce(generators.clone(), ambient_dim, false);
        let small_basis = red
            .basis
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.to_i64().filter(|v| v.abs() < SMALL_LIMIT))
                    .collect::<Option<Vec<i64>>>()
            })
            .collect::<Option<Vec<_>>>();
        Ok(IntegerLattice {
            ambient_dim,
            generators,
            basis: red.basis,
            pivots: red.pivots,
            small_basis,
        })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self::from_big_generators(ambient_dim, Vec::new()).expect("no generators")
    }

    /// `k Z^n`.
    pub fn scaled_standard(ambient_dim: usize, k: i64) -> Self {
        let gens: Vec<Vec<i64>> = (0..ambient_dim)
            .map(|i| {
                (0..ambient_dim)
                    .map(|j| if i == j { k } else { 0 })
                    .collect()
            })
            .collect();
        Self::from_generators(ambient_dim, &gens).expect("square generators")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn generators(&self) -> &[BigVec] {
        &self.generators
    }

    /// Canonical Hermite basis.
    pub fn basis(&self) -> &[BigVec] {
        &self.basis
    }

    pub fn basis_strings(&self) -> Vec<Vec<String>> {
        self.basis
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect()
    }

    /// Basis rows as `i64`, if every entry fits.
    pub fn basis_i64(&self) -> Option<Vec<Vec<i64>>> {
        self.basis
            .iter()
            .map(|r| r.iter().map(ToPrimitive::to_i64).collect())
            .collect()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.ambient_dim
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n == self.ambient_dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: n,
            })
        }
    }

    /// Coefficients of `v` over the canonical basis, if `v` is in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Result<Option<BigVec>> {
        self.check_dim(v.len())?;
        let mut rest = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.rank());
        for (row, &c) in self.basis.iter().zip(&self.pivots) {
            if rest[..c].iter().any(|x| !x.is_zero()) {
                return Ok(None);
            }
            let (q, r) = rest[c].div_rem(&row[c]);
            if !r.is_zero() {
                return Ok(None);
            }
            if !q.is_zero() {
                for (x, y) in rest.iter_mut().zip(row) {
                    *x -= &q * y;
                }
            }
            coeffs.push(q);
        }
        Ok(rest.iter().all(Zero::is_zero).then_some(coeffs))
    }

    pub fn contains_big(&self, v: &[BigInt]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        self.check_dim(v.len())?;
        if let Some(small) = &self.small_basis {
            if v.iter().all(|x| x.abs() < SMALL_LIMIT) {
                return Ok(contains_small(small, &self.pivots, v));
            }
        }
        self.contains_big(&to_big(v))
    }

    pub fn is_sublattice_of(&self, sup: &IntegerLattice) -> Result<bool> {
        sup.check_dim(self.ambient_dim)?;
        for row in &self.basis {
            if !sup.contains_big(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &IntegerLattice) -> Result<IntegerLattice> {
        self.check_dim(other.ambient_dim)?;
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        Self::from_big_generators(self.ambient_dim, gens)
    }

    /// Intersection via the left kernel of the stacked bases: rows `(x, y)`
    /// with `x A + y B = 0` give the common vectors `x A`.
    pub fn intersect(&self, other: &IntegerLattice) -> Result<IntegerLattice> {
        self.check_dim(other.ambient_dim)?;
        let r1 = self.rank();
        let mut stacked = self.basis.clone();
        stacked.extend(other.basis.iter().cloned());
        let red = hermite_reduce(stacked, self.ambient_dim, true);
        let gens: Vec<BigVec> = red
            .kernel
            .iter()
            .map(|k| {
                let mut v = vec![BigInt::zero(); self.ambient_dim];
                for (coef, row) in k[..r1].iter().zip(&self.basis) {
                    if coef.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(row) {
                        *x += coef * y;
                    }
                }
                v
            })
            .collect();
        Self::from_big_generators(self.ambient_dim, gens)
    }

    pub fn scale(&self, k: i64) -> IntegerLattice {
        let k = BigInt::from(k);
        let gens = self
            .basis
            .iter()
            .map(|r| r.iter().map(|x| x * &k).collect())
            .collect();
        Self::from_big_generators(self.ambient_dim, gens).expect("same dimension")
    }

    /// Structure of the abelian group `self / sub`.
    pub fn quotient_structure(&self, sub: &IntegerLattice) -> Result<QuotientStructure> {
        self.check_dim(sub.ambient_dim)?;
        let mut coords = Vec::with_capacity(sub.rank());
        for row in &sub.basis {
            match self.coordinates(row)? {
                Some(c) => coords.push(c),
                None => return Err(Error::NotASublattice),
            }
        }
        let factors = if coords.is_empty() || self.rank() == 0 {
            Vec::new()
        } else {
            smith_invariant_factors(&coords)
        };
        Ok(QuotientStructure {
            free_rank: self.rank() - factors.len(),
            invariant_factors: factors.into_iter().filter(|d| !d.is_one()).collect(),
        })
    }

    /// `[sup : self]`.
    pub fn index_in(&self, sup: &IntegerLattice) -> Result<LatticeIndex> {
        let q = sup.quotient_structure(self)?;
        Ok(match q.order() {
            Some(k) => LatticeIndex::Finite(k),
            None => LatticeIndex::Infinite,
        })
    }
}

fn contains_small(basis: &[Vec<i64>], pivots: &[usize], v: &[i64]) -> bool {
    let mut rest: Vec<i128> = v.iter().map(|&x| x as i128).collect();
    for (row, &c) in basis.iter().zip(pivots) {
        if rest[..c].iter().any(|&x| x != 0) {
            return false;
        }
        let p = row[c] as i128;
        if rest[c] % p != 0 {
            return false;
        }
        let q = rest[c] / p;
        if q != 0 {
            for (x, &y) in rest.iter_mut().zip(row) {
                *x -= q * y as i128;
            }
        }
    }
    rest.iter().all(|&x| x == 0)
}

#[derive(Serialize, Deserialize)]
struct LatticeJson {
    ambient_dim: usize,
    #[serde(
        serialize_with = "big_json::serialize_rows",
        deserialize_with = "big_json::deserialize_rows"
    )]
    basis: Vec<BigVec>,
}

impl Serialize for IntegerLattice {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LatticeJson {
            ambient_dim: self.ambient_dim,
            basis: self.basis.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntegerLattice {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = LatticeJson::deserialize(d)?;
        IntegerLattice::from_big_generators(raw.ambient_dim, raw.basis).map_err(de::Error::custom)
    }
}

/// JSON encoding for big integers: a plain number when it fits in `i64`,
/// otherwise a decimal string.
pub(crate) mod big_json {
    use super::*;

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum NumOrString {
        Num(i64),
        Str(String),
    }

    impl NumOrString {
        fn into_big<E: de::Error>(self) -> std::result::Result<BigInt, E> {
            match self {
                NumOrString::Num(n) => Ok(BigInt::from(n)),
                NumOrString::Str(s) => s.parse().map_err(E::custom),
            }
        }
    }

    pub fn serialize_one<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        match x.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&x.to_string()),
        }
    }

    struct One<'a>(&'a BigInt);

    impl Serialize for One<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
            serialize_one(self.0, s)
        }
    }

    pub fn serialize_vec<S: Serializer>(
        v: &[BigInt],
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(One))
    }

    pub fn serialize_rows<S: Serializer>(
        rows: &[BigVec],
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(rows.iter().map(|r| r.iter().map(One).collect::<Vec<_>>()))
    }

    pub fn deserialize_rows<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<BigVec>, D::Error> {
        let raw: Vec<Vec<NumOrString>> = Vec::deserialize(d)?;
        raw.into_iter()
            .map(|r| r.into_iter().map(NumOrString::into_big).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(dim: usize, gens: &[&[i64]]) -> IntegerLattice {
        IntegerLattice::from_generators(dim, gens).unwrap()
    }

    fn ints(v: &[i64]) -> BigVec {
        to_big(v)
    }

    #[test]
    fn hnf_examples() {
        assert_eq!(lat(2, &[&[2, 0], &[3, 0]]).basis(), &[ints(&[1, 0])]);
        let z = lat(2, &[]);
        assert_eq!(z.rank(), 0);
        assert_eq!(z, IntegerLattice::zero(2));
        let q = lat(2, &[&[2, -1], &[-1, 2]]);
        assert_eq!(q.rank(), 2);
        let det: BigInt = q.basis()[0][0].clone() * &q.basis()[1][1];
        assert_eq!(det, BigInt::from(3));
    }

    #[test]
    fn hnf_is_reduced_above_pivots() {
        let l = lat(3, &[&[3, 5, 7], &[0, 4, 9], &[1, 1, 1]]);
        for (k, (row, &c)) in l.basis.iter().zip(&l.pivots).enumerate() {
            assert!(row[c].is_positive());
            for above in &l.basis[..k] {
                assert!(!above[c].is_negative() && above[c] < row[c]);
            }
        }
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(
            IntegerLattice::from_generators(2, &[vec![1, 2, 3]]),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        ));
        let l = lat(2, &[&[1, 0]]);
        assert!(l.contains(&[1]).is_err());
        assert!(l.sum(&IntegerLattice::zero(3)).is_err());
        assert!(l.intersect(&IntegerLattice::zero(3)).is_err());
    }

    #[test]
    fn membership_examples() {
        let q = lat(2, &[&[2, -1], &[-1, 2]]);
        assert!(q.contains(&[2, -1]).unwrap());
        assert!(!q.contains(&[1, 0]).unwrap());
        assert!(q.contains(&[0, 0]).unwrap());
        assert!(IntegerLattice::zero(2).contains(&[0, 0]).unwrap());
        assert!(!IntegerLattice::zero(2).contains(&[0, 1]).unwrap());
    }

    #[test]
    fn index_examples() {
        let q = lat(2, &[&[2, -1], &[-1, 2]]);
        let full = IntegerLattice::scaled_standard(2, 1);
        assert_eq!(q.index_in(&full).unwrap(), LatticeIndex::Finite(3.into()));
        for n in 1..=4 {
            let q = IntegerLattice::scaled_standard(n, 1);
            assert_eq!(
                q.scale(2).index_in(&q).unwrap(),
                LatticeIndex::Finite(BigInt::from(1u64 << n))
            );
        }
        let a1 = lat(2, &[&[2, -1]]);
        assert_eq!(a1.index_in(&q).unwrap(), LatticeIndex::Infinite);
        assert_eq!(full.index_in(&q), Err(Error::NotASublattice));
    }

    #[test]
    fn sum_and_intersection_examples() {
        let a = lat(2, &[&[2, 0]]);
        let b = lat(2, &[&[0, 2]]);
        assert_eq!(a.sum(&b).unwrap(), IntegerLattice::scaled_standard(2, 2));
        let x = lat(2, &[&[1, 0]]);
        let y = lat(2, &[&[0, 1]]);
        assert_eq!(x.intersect(&y).unwrap(), IntegerLattice::zero(2));
        let two = IntegerLattice::scaled_standard(2, 2);
        let three = IntegerLattice::scaled_standard(2, 3);
        assert_eq!(
            two.intersect(&three).unwrap(),
            IntegerLattice::scaled_standard(2, 6)
        );
    }

    #[test]
    fn quotient_examples() {
        let full = IntegerLattice::scaled_standard(2, 1);
        let qs = full
            .quotient_structure(&IntegerLattice::scaled_standard(2, 2))
            .unwrap();
        assert_eq!(qs.free_rank, 0);
        assert_eq!(qs.invariant_factors, ints(&[2, 2]));
        let q = lat(2, &[&[2, -1], &[-1, 2]]);
        assert_eq!(
            full.quotient_structure(&q).unwrap().invariant_factors,
            ints(&[3])
        );
        let qs = full.quotient_structure(&lat(2, &[&[1, 0]])).unwrap();
        assert_eq!(qs.free_rank, 1);
        assert!(qs.invariant_factors.is_empty());
        assert_eq!(
            full.quotient_structure(&IntegerLattice::zero(2))
                .unwrap()
                .free_rank,
            2
        );
    }

    #[test]
    fn smith_divisibility_chain() {
        let m = vec![ints(&[2, 0, 0]), ints(&[0, 3, 0]), ints(&[0, 0, 4])];
        assert_eq!(smith_invariant_factors(&m), ints(&[1, 2, 12]));
        let m = vec![ints(&[6, 4]), ints(&[4, 6])];
        assert_eq!(smith_invariant_factors(&m), ints(&[2, 10]));
        let m = vec![ints(&[0, 0]), ints(&[0, 0])];
        assert!(smith_invariant_factors(&m).is_empty());
    }

    #[test]
    fn large_entries_stay_exact() {
        let big = 60i64.pow(6);
        let l = lat(3, &[&[big, 1, 0], &[0, big, 1], &[1, 0, big]]);
        let v: Vec<i64> = vec![big, 1, 0];
        assert!(l.contains(&v).unwrap());
        let scaled = l.scale(big);
        assert!(scaled.is_sublattice_of(&l).unwrap());
        assert!(!l.is_sublattice_of(&scaled).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let l = lat(3, &[&[4, 2, 0], &[0, 6, 3]]);
        let s = serde_json::to_string(&l).unwrap();
        let back: IntegerLattice = serde_json::from_str(&s).unwrap();
        assert_eq!(back, l);
        let huge = l.scale(i64::MAX);
        let s = serde_json::to_string(&huge).unwrap();
        assert!(s.contains('"'));
        let back: IntegerLattice = serde_json::from_str(&s).unwrap();
        assert_eq!(back, huge);
    }
}
