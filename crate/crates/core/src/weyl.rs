//! Weyl group elements as words in simple reflections.
//!
//! An element `w` is pinned down by the regular weight `w(rho)`, so no matrix
//! representation is stored. The canonical word is the lexicographically
//! smallest reduced word, read off greedily: the smallest left descent of `w`
//! is the smallest `i` with `<w(rho), alpha_i^vee> < 0`.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootsys::{RootCoords, RootSystem, Weight};

/// Default cap on `|W|` for exhaustive enumeration.
pub const DEFAULT_SIZE_BOUND: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    // Canonical reduced word, 0-based reflection indices.
    word: Vec<usize>,
}

impl Serialize for WeylElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.one_based_word())
    }
}

impl<'de> Deserialize<'de> for WeylElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<usize> = Vec::deserialize(d)?;
        if raw.contains(&0) {
            return Err(serde::de::Error::custom("reflection indices are 1-based"));
        }
        Ok(WeylElement {
            word: raw.into_iter().map(|i| i - 1).collect(),
        })
    }
}

/// `s_i` on a weight in fundamental-weight coordinates.
pub(crate) fn reflect_weight(rs: &RootSystem, i: usize, v: &mut [i64]) {
    let c = v[i];
    if c != 0 {
        for (j, row) in rs.cartan().iter().enumerate() {
            v[j] -= c * row[i];
        }
    }
}

/// `s_i` on a vector in simple-root coordinates.
pub(crate) fn reflect_root(rs: &RootSystem, i: usize, v: &mut [i64]) {
    let pairing: i64 = rs.cartan()[i]
        .iter()
        .zip(v.iter())
        .map(|(a, b)| a * b)
        .sum();
    v[i] -= pairing;
}

/// Moves a weight into the dominant chamber by simple reflections and
/// returns it with the number of reflections used.
pub fn to_dominant(rs: &RootSystem, lambda: &Weight) -> (Weight, usize) {
    let mut v = lambda.0.clone();
    let mut steps = 0;
    while let Some(i) = v.iter().position(|&c| c < 0) {
        reflect_weight(rs, i, &mut v);
        steps += 1;
    }
    (Weight(v), steps)
}

fn canonical_word_from_image(rs: &RootSystem, image_of_rho: Vec<i64>) -> Vec<usize> {
    let mut v = image_of_rho;
    let mut word = Vec::new();
    while let Some(i) = v.iter().position(|&c| c < 0) {
        word.push(i);
        reflect_weight(rs, i, &mut v);
    }
    word
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { word: Vec::new() }
    }

    /// `s_i`, 0-based.
    pub fn simple(rs: &RootSystem, i: usize) -> Result<Self> {
        Self::from_word(rs, &[i])
    }

    /// Element named by an arbitrary (possibly non-reduced) 0-based word.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        for &i in word {
            if i >= rs.rank() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    rank: rs.rank(),
                });
            }
        }
        let mut v = rs.rho().0;
        for &i in word.iter().rev() {
            reflect_weight(rs, i, &mut v);
        }
        Ok(WeylElement {
            word: canonical_word_from_image(rs, v),
        })
    }

    /// Same as [`from_word`](Self::from_word) with 1-based indices.
    pub fn from_one_based(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let zero_based = word
            .iter()
            .map(|&i| {
                i.checked_sub(1).ok_or(Error::IndexOutOfRange {
                    index: 0,
                    rank: rs.rank(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_word(rs, &zero_based)
    }

    /// Canonical reduced word, 0-based.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn one_based_word(&self) -> Vec<usize> {
        self.word.iter().map(|i| i + 1).collect()
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// `self * other`.
    pub fn compose(&self, rs: &RootSystem, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Self::from_word(rs, &word).expect("indices already validated")
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let word: Vec<usize> = self.word.iter().rev().copied().collect();
        Self::from_word(rs, &word).expect("indices already validated")
    }
}

fn check_indices(rs: &RootSystem, w: &WeylElement) -> Result<()> {
    match w.word.iter().find(|&&i| i >= rs.rank()) {
        Some(&i) => Err(Error::IndexOutOfRange {
            index: i,
            rank: rs.rank(),
        }),
        None => Ok(()),
    }
}

/// `w(lambda)`; the word acts right to left.
pub fn apply(rs: &RootSystem, w: &WeylElement, lambda: &Weight) -> Result<Weight> {
    check_indices(rs, w)?;
    lambda.check_len(rs.rank())?;
    let mut v = lambda.0.clone();
    for &i in w.word.iter().rev() {
        reflect_weight(rs, i, &mut v);
    }
    Ok(Weight(v))
}

/// `w(beta)` for a root `beta`.
pub fn apply_to_root(rs: &RootSystem, w: &WeylElement, beta: &RootCoords) -> Result<RootCoords> {
    check_indices(rs, w)?;
    beta.check_len(rs.rank())?;
    if !rs.is_root(beta) {
        return Err(Error::NotARoot(beta.0.clone()));
    }
    Ok(apply_to_vector(rs, w, beta))
}

fn apply_to_vector(rs: &RootSystem, w: &WeylElement, beta: &RootCoords) -> RootCoords {
    let mut v = beta.0.clone();
    for &i in w.word.iter().rev() {
        reflect_root(rs, i, &mut v);
    }
    RootCoords(v)
}

/// `R(w) = { beta > 0 : w(beta) < 0 }`, in the order of `rs.positive_roots()`.
pub fn inversion_set(rs: &RootSystem, w: &WeylElement) -> Vec<RootCoords> {
    rs.positive_roots()
        .iter()
        .filter(|beta| apply_to_vector(rs, w, beta).is_negative())
        .cloned()
        .collect()
}

/// The longest element `w0`, characterised by `w0(rho) = -rho`.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    WeylElement {
        word: canonical_word_from_image(rs, (-rs.rho()).0),
    }
}

/// Breadth-first walk of the Cayley graph, one canonical element per group
/// element, in order of nondecreasing length.
pub struct WeylEnumeration<'a> {
    rs: &'a RootSystem,
    queue: VecDeque<Vec<i64>>,
    seen: HashSet<Vec<i64>>,
}

impl Iterator for WeylEnumeration<'_> {
    type Item = WeylElement;

    fn next(&mut self) -> Option<WeylElement> {
        let image = self.queue.pop_front()?;
        for i in 0..self.rs.rank() {
            let mut next = image.clone();
            reflect_weight(self.rs, i, &mut next);
            if self.seen.insert(next.clone()) {
                self.queue.push_back(next);
            }
        }
        Some(WeylElement {
            word: canonical_word_from_image(self.rs, image),
        })
    }
}

/// Every element of `W`, or `GroupTooLarge` when `|W|` exceeds `size_bound`.
pub fn enumerate(rs: &RootSystem, size_bound: u128) -> Result<WeylEnumeration<'_>> {
    let order = rs.weyl_group_order();
    if order > size_bound {
        return Err(Error::GroupTooLarge {
            order,
            bound: size_bound,
        });
    }
    let start = rs.rho().0;
    Ok(WeylEnumeration {
        rs,
        queue: VecDeque::from([start.clone()]),
        seen: HashSet::from([start]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn rs(label: &str) -> RootSystem {
        RootSystem::from_label(label).unwrap()
    }

    #[test]
    fn apply_examples() {
        let a1 = rs("A1");
        let s1 = WeylElement::simple(&a1, 0).unwrap();
        assert_eq!(apply(&a1, &s1, &a1.rho()).unwrap(), Weight(vec![-1]));
        let a2 = rs("A2");
        let w0 = longest_element(&a2);
        assert_eq!(apply(&a2, &w0, &a2.rho()).unwrap(), Weight(vec![-1, -1]));
        let s1 = WeylElement::simple(&a2, 0).unwrap();
        assert_eq!(
            apply(&a2, &s1, &Weight(vec![1, 0])).unwrap(),
            Weight(vec![-1, 1])
        );
    }

    #[test]
    fn bad_indices() {
        let a2 = rs("A2");
        assert_eq!(
            WeylElement::from_word(&a2, &[0, 2]),
            Err(Error::IndexOutOfRange { index: 2, rank: 2 })
        );
        let foreign = WeylElement::from_word(&rs("A3"), &[2]).unwrap();
        assert!(matches!(
            apply(&a2, &foreign, &a2.rho()),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(WeylElement::from_one_based(&a2, &[0]).is_err());
    }

    #[test]
    fn apply_to_root_examples() {
        let a2 = rs("A2");
        let s1 = WeylElement::simple(&a2, 0).unwrap();
        let a1 = RootCoords(vec![1, 0]);
        let a2r = RootCoords(vec![0, 1]);
        assert_eq!(
            apply_to_root(&a2, &s1, &a1).unwrap(),
            RootCoords(vec![-1, 0])
        );
        assert_eq!(
            apply_to_root(&a2, &s1, &a2r).unwrap(),
            RootCoords(vec![1, 1])
        );
        let e = WeylElement::identity();
        assert_eq!(apply_to_root(&a2, &e, &a2r).unwrap(), a2r);
        assert_eq!(
            apply_to_root(&a2, &e, &RootCoords(vec![2, 0])),
            Err(Error::NotARoot(vec![2, 0]))
        );
    }

    #[test]
    fn inversion_set_examples() {
        let a2 = rs("A2");
        assert!(inversion_set(&a2, &WeylElement::identity()).is_empty());
        let s1 = WeylElement::simple(&a2, 0).unwrap();
        assert_eq!(inversion_set(&a2, &s1), vec![RootCoords(vec![1, 0])]);
        let w0 = longest_element(&a2);
        assert_eq!(inversion_set(&a2, &w0), a2.positive_roots().to_vec());
    }

    #[test]
    fn longest_element_examples() {
        let a1 = rs("A1");
        assert_eq!(longest_element(&a1).word(), &[0]);
        assert_eq!(longest_element(&rs("A2")).length(), 3);
        let b3 = rs("B3");
        let w0 = longest_element(&b3);
        assert_eq!(w0.length(), 9);
        for lambda in [vec![1, 0, 0], vec![3, -2, 5], vec![0, 7, 1]] {
            let lambda = Weight(lambda);
            assert_eq!(apply(&b3, &w0, &lambda).unwrap(), -&lambda);
        }
    }

    #[test]
    fn longest_element_properties_every_type() {
        for label in [
            "A1", "A4", "B2", "B4", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2",
        ] {
            let r = rs(label);
            let w0 = longest_element(&r);
            assert_eq!(w0.length(), r.positive_roots().len(), "{label}");
            assert!(w0.compose(&r, &w0).is_identity(), "{label}");
            assert_eq!(apply(&r, &w0, &r.rho()).unwrap(), -r.rho());
            // -w0 permutes the fundamental weights.
            for i in 0..r.rank() {
                let img = -apply(&r, &w0, &r.fundamental_weight(i)).unwrap();
                assert!(img.is_dominant() && img.coords().iter().sum::<i64>() == 1);
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate(&rs("A2"), DEFAULT_SIZE_BOUND).unwrap().count(), 6);
        assert_eq!(
            enumerate(&rs("F4"), DEFAULT_SIZE_BOUND).unwrap().count(),
            1152
        );
        assert_eq!(
            enumerate(&rs("G2"), DEFAULT_SIZE_BOUND).unwrap().count(),
            12
        );
        assert!(matches!(
            enumerate(&rs("E8"), DEFAULT_SIZE_BOUND),
            Err(Error::GroupTooLarge {
                order: 696_729_600,
                ..
            })
        ));
    }

    #[test]
    fn enumeration_is_duplicate_free_and_canonical() {
        let r = rs("B3");
        let all: Vec<WeylElement> = enumerate(&r, DEFAULT_SIZE_BOUND).unwrap().collect();
        let distinct: HashSet<&WeylElement> = all.iter().collect();
        assert_eq!(distinct.len(), 48);
        for pair in all.windows(2) {
            assert!(pair[0].length() <= pair[1].length());
        }
        for w in &all {
            assert_eq!(&WeylElement::from_word(&r, w.word()).unwrap(), w);
        }
    }

    #[test]
    fn canonical_word_is_lexicographically_minimal() {
        // Brute force: every word of length l(w) over the alphabet, keep the
        // reduced ones naming w, take the minimum.
        let r = rs("A3");
        for w in enumerate(&r, DEFAULT_SIZE_BOUND).unwrap() {
            let len = w.length();
            let mut best: Option<Vec<usize>> = None;
            let total = 3usize.pow(len as u32);
            for code in 0..total {
                let word: Vec<usize> = (0..len)
                    .map(|k| (code / 3usize.pow(k as u32)) % 3)
                    .rev()
                    .collect();
                if WeylElement::from_word(&r, &word).unwrap() == w
                    && best.as_ref().is_none_or(|b| &word < b)
                {
                    best = Some(word);
                }
            }
            assert_eq!(best.unwrap(), w.word());
        }
    }

    #[test]
    fn length_equals_inversion_count() {
        for label in ["A3", "B3", "D4"] {
            let r = rs(label);
            for w in enumerate(&r, DEFAULT_SIZE_BOUND).unwrap() {
                assert_eq!(w.length(), inversion_set(&r, &w).len(), "{label}");
            }
        }
    }

    #[test]
    fn action_preserves_invariant_form() {
        let r = rs("F4");
        let roots = r.positive_roots();
        for (k, w) in enumerate(&r, DEFAULT_SIZE_BOUND)
            .unwrap()
            .enumerate()
            .step_by(37)
        {
            let b = &roots[k % roots.len()];
            let c = &roots[(k * 7 + 3) % roots.len()];
            let wb = apply_to_root(&r, &w, b).unwrap();
            let wc = apply_to_root(&r, &w, c).unwrap();
            assert_eq!(r.pair_roots(&wb, &wc), r.pair_roots(b, c));
        }
    }

    #[test]
    fn inverse_and_composition() {
        let r = rs("C3");
        let w = WeylElement::from_word(&r, &[0, 1, 2, 1]).unwrap();
        assert!(w.compose(&r, &w.inverse(&r)).is_identity());
        let lambda = Weight(vec![2, -1, 3]);
        let wl = apply(&r, &w, &lambda).unwrap();
        assert_eq!(apply(&r, &w.inverse(&r), &wl).unwrap(), lambda);
    }

    #[test]
    fn to_dominant_counts_reflections() {
        let a2 = rs("A2");
        let (dom, steps) = to_dominant(&a2, &Weight(vec![-1, -1]));
        assert_eq!(dom, Weight(vec![1, 1]));
        assert_eq!(steps, 3);
        assert_eq!(to_dominant(&a2, &Weight(vec![2, 0])).1, 0);
        let g2 = RootSystem::new(Family::G, 2).unwrap();
        assert!(to_dominant(&g2, &Weight(vec![-3, 1])).0.is_dominant());
    }

    #[test]
    fn serializes_as_one_based_word() {
        let a2 = rs("A2");
        let w0 = longest_element(&a2);
        assert_eq!(serde_json::to_string(&w0).unwrap(), "[1,2,1]");
        let back: WeylElement = serde_json::from_str("[1,2,1]").unwrap();
        assert_eq!(back, w0);
        assert!(serde_json::from_str::<WeylElement>("[0]").is_err());
    }
}
