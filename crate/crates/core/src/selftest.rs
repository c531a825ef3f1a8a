//! Embedded example suite: small, deterministic checks of the worked
//! examples (highest-root table, SL(2) and SL(3) criteria, stabilizers,
//! the Cartan component, Gamma memberships).

use serde::Serialize;

use crate::descent::{self, Outcome, Rule, StabilizerStructure, VerdictOptions};
use crate::lattices::{d_weight_lattice, gamma_lattice, root_lattice};
use crate::repmult::{triple_invariant_dim, WorkBound};
use crate::rootsys::{RootCoords, RootSystem, Weight};
use crate::tables::{default_root_systems, theta_family_rows, theta_row};
use crate::weyl;

pub const TABLE2_GOLDEN: &str = include_str!("../data/table2.golden");
pub const TABLE2_FAMILIES_GOLDEN: &str = include_str!("../data/table2_families.golden");

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelfTestReport {
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<CaseResult>,
}

impl SelfTestReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

type Check = fn() -> Result<String, String>;

const CASES: &[(&str, Check)] = &[
    ("theta-table", theta_table),
    ("theta-family-rows", theta_family_table),
    ("sl2-parity", sl2_parity),
    ("sl3-cube-root", sl3_cube_root),
    ("sl2-stabilizers", sl2_stabilizers),
    ("sl3-stabilizers", sl3_stabilizers),
    ("cartan-component", cartan_component),
    ("cartan-component-outside-type-a", cartan_outside_type_a),
    ("gamma-between-dq-and-q", gamma_chain),
    ("d4-gamma-predicate", d4_predicate),
    ("b3-two-omega1", b3_two_omega1),
];

pub fn case_names() -> Vec<&'static str> {
    CASES.iter().map(|(n, _)| *n).collect()
}

pub fn run() -> SelfTestReport {
    let cases: Vec<CaseResult> = CASES
        .iter()
        .map(|(name, check)| match check() {
            Ok(detail) => CaseResult {
                name,
                passed: true,
                detail,
            },
            Err(detail) => CaseResult {
                name,
                passed: false,
                detail,
            },
        })
        .collect();
    let passed = cases.iter().filter(|c| c.passed).count();
    SelfTestReport {
        passed,
        failed: cases.len() - passed,
        cases,
    }
}

fn rs(label: &str) -> Result<RootSystem, String> {
    RootSystem::from_label(label).map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: crate::Error) -> String {
    e.to_string()
}

fn theta_table() -> Result<String, String> {
    let systems = default_root_systems();
    let expected: Vec<&str> = TABLE2_GOLDEN.lines().collect();
    ensure(expected.len() == systems.len(), || {
        "golden row count".into()
    })?;
    for (r, want) in systems.iter().zip(&expected) {
        let got = theta_row(r);
        ensure(got == *want, || {
            format!("{}: got {got:?}, want {want:?}", r.label())
        })?;
    }
    Ok(format!("{} rows", systems.len()))
}

fn theta_family_table() -> Result<String, String> {
    let rows = theta_family_rows();
    let expected: Vec<&str> = TABLE2_FAMILIES_GOLDEN.lines().collect();
    ensure(rows == expected, || format!("got {rows:?}"))?;
    Ok(format!("{} rows", rows.len()))
}

fn sl2_parity() -> Result<String, String> {
    let a1 = rs("A1")?;
    let mut count = 0;
    for b1 in 1..=6 {
        for b2 in 1..=6 {
            for b3 in 1..=6 {
                let v = descent::verdict(
                    &a1,
                    &Weight(vec![b1]),
                    &Weight(vec![b2]),
                    &Weight(vec![b3]),
                    VerdictOptions::default(),
                )
                .map_err(err)?;
                let want = if (b1 + b2 + b3) % 2 == 0 {
                    Outcome::Descends
                } else {
                    Outcome::DoesNotDescend
                };
                ensure(v.outcome == want, || {
                    format!("({b1},{b2},{b3}): {:?}", v.outcome)
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} triples"))
}

fn sl3_cube_root() -> Result<String, String> {
    let a2 = rs("A2")?;
    let mut count = 0;
    let range = 1..=3i64;
    let weights: Vec<Weight> = range
        .clone()
        .flat_map(|p| range.clone().map(move |q| Weight(vec![p, q])))
        .collect();
    for l in &weights {
        for m in &weights {
            for n in &weights {
                // (a - b) w1 + b w2 with a = p + q, b = q.
                let exponent: i64 = [l, m, n].iter().map(|w| w.0[0] + 2 * w.0[1]).sum();
                let nec = descent::necessary_condition(&a2, l, m, n).map_err(err)?;
                ensure(nec == (exponent % 3 == 0), || {
                    format!("{l:?} {m:?} {n:?}: necessary = {nec}")
                })?;
                let v = descent::verdict(&a2, l, m, n, VerdictOptions::default()).map_err(err)?;
                ensure(v.outcome != Outcome::Unknown, || {
                    format!("{l:?} {m:?} {n:?}: Unknown")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} triples"))
}

fn subset_structures(r: &RootSystem) -> Result<Vec<StabilizerStructure>, String> {
    let roots = r.positive_roots();
    let mut out: Vec<StabilizerStructure> = Vec::new();
    for mask in 0u32..(1 << roots.len()) {
        let subset: Vec<RootCoords> = (0..roots.len())
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| roots[k].clone())
            .collect();
        let s = descent::stabilizer_structure(r, &subset).map_err(err)?;
        if !out.contains(&s) {
            out.push(s);
        }
    }
    Ok(out)
}

fn structure(torus_rank: usize, finite_factors: Vec<u64>) -> StabilizerStructure {
    StabilizerStructure {
        torus_rank,
        divisible: finite_factors.is_empty(),
        finite_factors,
    }
}

fn same_set(got: &[StabilizerStructure], want: &[StabilizerStructure]) -> bool {
    got.len() == want.len() && want.iter().all(|w| got.contains(w))
}

fn sl2_stabilizers() -> Result<String, String> {
    let got = subset_structures(&rs("A1")?)?;
    // T and {+-I}.
    let want = [structure(1, vec![]), structure(0, vec![2])];
    ensure(same_set(&got, &want), || format!("got {got:?}"))?;
    Ok("T, {±I}".into())
}

fn sl3_stabilizers() -> Result<String, String> {
    let got = subset_structures(&rs("A2")?)?;
    // T, C* and the group of cube roots of unity.
    let want = [
        structure(2, vec![]),
        structure(1, vec![]),
        structure(0, vec![3]),
    ];
    ensure(same_set(&got, &want), || format!("got {got:?}"))?;
    Ok("T, ℂ*, μ₃".into())
}

fn cartan_component() -> Result<String, String> {
    for label in ["A1", "A2", "B3", "C2", "G2"] {
        let r = rs(label)?;
        let rho = r.rho();
        let two_rho = rho.scale(2);
        for n in [1, 2] {
            let dim = triple_invariant_dim(
                &r,
                &two_rho.scale(n),
                &rho.scale(n),
                &rho.scale(n),
                WorkBound::default(),
            )
            .map_err(err)?;
            ensure(dim == 1u32.into(), || {
                format!("{label}, N = {n}: dim {dim}")
            })?;
        }
        let w0 = weyl::longest_element(&r);
        let pairing =
            descent::pairing_character(&r, &two_rho, &rho, &rho, &w0, &w0).map_err(err)?;
        ensure(pairing.is_zero(), || {
            format!("{label}: pairing {pairing:?}")
        })?;
    }
    Ok("A1 A2 B3 C2 G2".into())
}

fn cartan_outside_type_a() -> Result<String, String> {
    for label in ["A1", "A2", "B3", "C2", "G2"] {
        let r = rs(label)?;
        let rho = r.rho();
        let v = descent::verdict(&r, &rho.scale(2), &rho, &rho, VerdictOptions::default())
            .map_err(err)?;
        ensure(v.rule_result(Rule::NecessaryQ) == Some(true), || {
            format!("{label}: necessary condition fails")
        })?;
        let thm56 = v.rule_result(Rule::SufficientThm56) == Some(true);
        if label.starts_with('A') {
            ensure(v.outcome == Outcome::Descends, || {
                format!("{label}: {:?}", v.outcome)
            })?;
        } else {
            ensure(!thm56, || {
                format!("{label}: lattice condition unexpectedly holds")
            })?;
            ensure(v.outcome != Outcome::DoesNotDescend, || {
                format!("{label}: refuted")
            })?;
        }
    }
    Ok("necessary condition holds; lattice condition fails outside type A".into())
}

fn gamma_chain() -> Result<String, String> {
    let systems = default_root_systems();
    for r in &systems {
        let gamma = gamma_lattice(r).map_err(err)?;
        let q = root_lattice(r);
        let dq = q.scale(r.d() as i64);
        let ok =
            dq.is_sublattice_of(&gamma).map_err(err)? && gamma.is_sublattice_of(&q).map_err(err)?;
        ensure(ok, || format!("{}: dQ ⊆ Γ ⊆ Q fails", r.label()))?;
        let dl = d_weight_lattice(r);
        let ok = match r.label().as_str() {
            "G2" | "F4" => dl.is_sublattice_of(&gamma),
            _ => gamma.is_sublattice_of(&dl),
        }
        .map_err(err)?;
        ensure(ok, || format!("{}: comparison with dΛ fails", r.label()))?;
    }
    Ok(format!("{} types", systems.len()))
}

fn d4_predicate() -> Result<String, String> {
    let r = rs("D4")?;
    let gamma = gamma_lattice(&r).map_err(err)?;
    let mut count = 0;
    for i in 0..625i64 {
        let c: Vec<i64> = (0..4).map(|k| (i / 5i64.pow(k)) % 5 - 2).collect();
        let expected = c[1] % 2 == 0 && (c[0] + c[2] + c[3]) % 2 == 0;
        let w = r
            .root_to_weight_coords(&RootCoords(c.clone()))
            .map_err(err)?;
        let got = gamma.contains(w.coords()).map_err(err)?;
        ensure(got == expected, || format!("{c:?}: {got}"))?;
        count += 1;
    }
    Ok(format!("{count} points"))
}

fn b3_two_omega1() -> Result<String, String> {
    let r = rs("B3")?;
    let l = Weight(vec![2, 0, 0]);
    let ok = descent::sufficient_thm56(&r, &l, &l, &l).map_err(err)?;
    ensure(ok, || "2ϖ₁ triple fails the lattice condition".into())?;
    Ok("2ϖ₁ + 2ϖ₁ + 2ϖ₁ ∈ Γ".into())
}
