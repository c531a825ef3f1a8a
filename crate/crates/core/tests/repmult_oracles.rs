mod common;

use num_bigint::{BigInt, BigUint};

use common::{dominant_box, product_decomposition};
use tripleflag::repmult::{
    kostant_multiplicity, semistable_probe, tensor_decomposition, tensor_multiplicity,
    triple_invariant_dim, weight_multiplicities, weyl_dimension, ProbeOutcome, WorkBound,
};
use tripleflag::{RootSystem, Weight};

fn rs(label: &str) -> RootSystem {
    RootSystem::from_label(label).unwrap()
}

fn small_weights(rs: &RootSystem, max_dim: u32) -> Vec<Weight> {
    dominant_box(rs.rank(), 6)
        .into_iter()
        .filter(|w| weyl_dimension(rs, w).unwrap() <= BigUint::from(max_dim))
        .collect()
}

#[test]
fn klimyk_matches_character_products() {
    for label in ["A2", "C2"] {
        let r = rs(label);
        let weights = small_weights(&r, 20);
        for l in &weights {
            for m in &weights {
                let expected = product_decomposition(&r, l, m);
                let got = tensor_decomposition(&r, l, m, WorkBound::default()).unwrap();
                let got: Vec<(Weight, i64)> = got
                    .into_iter()
                    .map(|(w, k)| (w, i64::try_from(&k).unwrap()))
                    .collect();
                let expected: Vec<(Weight, i64)> = expected.into_iter().collect();
                assert_eq!(got, expected, "{label}: {l:?} x {m:?}");
            }
        }
    }
}

#[test]
fn freudenthal_matches_kostant() {
    for label in ["A2", "B2", "G2", "A3"] {
        let r = rs(label);
        for lambda in dominant_box(r.rank(), 2) {
            let ch = weight_multiplicities(&r, &lambda, WorkBound::default()).unwrap();
            for (mu, m) in &ch.mults {
                let k = kostant_multiplicity(&r, &lambda, mu).unwrap();
                assert_eq!(BigInt::from(m.clone()), k, "{label} {lambda:?} at {mu:?}");
            }
            // Just outside the support the alternating sum vanishes.
            for beta in r.positive_roots() {
                let above = &lambda + &r.root_to_weight_coords(beta).unwrap();
                assert_eq!(
                    kostant_multiplicity(&r, &lambda, &above).unwrap(),
                    BigInt::from(0)
                );
            }
        }
    }
}

#[test]
fn invariant_dimension_is_symmetric() {
    let r = rs("B2");
    let ws = small_weights(&r, 40);
    let b = WorkBound::default();
    for l in ws.iter().take(6) {
        for m in ws.iter().take(6) {
            for n in ws.iter().take(6) {
                let x = triple_invariant_dim(&r, l, m, n, b).unwrap();
                assert_eq!(x, triple_invariant_dim(&r, m, n, l, b).unwrap());
                assert_eq!(x, triple_invariant_dim(&r, n, m, l, b).unwrap());
            }
        }
    }
}

#[test]
fn cartan_component_appears_once() {
    let b = WorkBound::default();
    for label in ["A3", "B3", "C3", "G2", "D4"] {
        let r = rs(label);
        let ws = small_weights(&r, 60);
        for l in ws.iter().take(5) {
            for m in ws.iter().take(5) {
                let top = l + m;
                let k = tensor_multiplicity(&r, l, m, &top, b).unwrap();
                assert_eq!(k, BigUint::from(1u32), "{label}: {l:?} + {m:?}");
            }
        }
    }
}

#[test]
fn probe_is_monotone_under_scaling() {
    // A nonempty answer at N stays nonempty at every multiple of N.
    let r = rs("A2");
    let b = WorkBound::default();
    for (l, m, n) in [
        (vec![1, 1], vec![1, 1], vec![1, 1]),
        (vec![2, 1], vec![1, 1], vec![1, 2]),
        (vec![3, 1], vec![1, 1], vec![1, 1]),
    ] {
        let (l, m, n) = (Weight(l), Weight(m), Weight(n));
        if let ProbeOutcome::NonEmpty { n: k } = semistable_probe(&r, &l, &m, &n, 4, b).unwrap() {
            for mult in 1..=3 {
                let s = (k * mult) as i64;
                let dim =
                    triple_invariant_dim(&r, &l.scale(s), &m.scale(s), &n.scale(s), b).unwrap();
                assert!(dim > BigUint::from(0u32));
            }
        }
    }
    // The sum (4, 3) lies outside the root lattice until it is tripled.
    let outcome = semistable_probe(
        &r,
        &Weight(vec![2, 1]),
        &Weight(vec![1, 1]),
        &Weight(vec![1, 1]),
        6,
        b,
    )
    .unwrap();
    assert_eq!(outcome, ProbeOutcome::NonEmpty { n: 3 });
    // V(1, 3) is not a summand of V(1, 1) (x) V(1, 1), nor are its multiples.
    let outcome = semistable_probe(
        &r,
        &Weight(vec![3, 1]),
        &Weight(vec![1, 1]),
        &Weight(vec![1, 1]),
        6,
        b,
    )
    .unwrap();
    assert_eq!(outcome, ProbeOutcome::EmptyUpTo { n_max: 6 });
}
