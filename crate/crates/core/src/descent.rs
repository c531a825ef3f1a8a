//! Descent of `L(lambda, mu, nu)` to the GIT quotient `(G/B)^3 // G`.
//!
//! One refutation rule (the sum must lie in the root lattice) and three
//! sufficient rules (membership in `d Lambda` and `Gamma`, membership of all
//! three weights in `Gamma`, and the all-pairs check of `lambda + w1 mu +
//! w2 nu` against `Gamma` over `W x W`). Anything the rules cannot settle is
//! reported as `Unknown`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intlat::IntegerLattice;
use crate::lattices::{d_weight_lattice, gamma_lattice, root_lattice};
use crate::repmult::{semistable_probe, ProbeOutcome, WorkBound};
use crate::rootsys::{Family, RootCoords, RootSystem, Weight};
use crate::weyl::{self, WeylElement, DEFAULT_SIZE_BOUND};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    Descends,
    DoesNotDescend,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    NecessaryQ,
    SufficientThm56,
    SufficientGammaCor,
    Thm22AllPairs,
    SemistableProbe,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LatticeName {
    #[serde(rename = "Q")]
    RootLattice,
    #[serde(rename = "dLambda")]
    DWeightLattice,
    #[serde(rename = "Gamma")]
    Gamma,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipCheck {
    pub vector: Weight,
    pub lattice: LatticeName,
    pub member: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Memberships {
        checks: Vec<MembershipCheck>,
    },
    AllPairsHold {
        pairs_checked: u64,
    },
    Counterexample {
        w1: WeylElement,
        w2: WeylElement,
        pairing: Weight,
    },
    Probe {
        outcome: ProbeReport,
    },
    Skipped {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleRecord {
    pub rule: Rule,
    /// `None` when the rule was not evaluated or is inconclusive.
    pub result: Option<bool>,
    pub witness: Witness,
}

/// Semistability probe result as attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ProbeReport {
    NonEmpty { n: u32 },
    EmptyUpTo { n_max: u32 },
    Aborted { n: u32, error: String },
}

impl From<ProbeOutcome> for ProbeReport {
    fn from(p: ProbeOutcome) -> Self {
        match p {
            ProbeOutcome::NonEmpty { n } => ProbeReport::NonEmpty { n },
            ProbeOutcome::EmptyUpTo { n_max } => ProbeReport::EmptyUpTo { n_max },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentVerdict {
    #[serde(rename = "type")]
    pub family: Family,
    pub rank: usize,
    pub lambda: Weight,
    pub mu: Weight,
    pub nu: Weight,
    pub outcome: Outcome,
    pub reasons: Vec<RuleRecord>,
    pub probe: Option<ProbeReport>,
}

impl DescentVerdict {
    pub fn reason(&self, rule: Rule) -> Option<&RuleRecord> {
        self.reasons.iter().find(|r| r.rule == rule)
    }

    pub fn rule_result(&self, rule: Rule) -> Option<bool> {
        self.reason(rule).and_then(|r| r.result)
    }
}

/// Torus-kernel structure `T_S = intersection of ker(e^alpha), alpha in S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerStructure {
    pub torus_rank: usize,
    pub finite_factors: Vec<u64>,
    pub divisible: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerdictOptions {
    pub n_max: u32,
    pub size_bound: u128,
    pub run_probe: bool,
    pub work_bound: WorkBound,
}

impl Default for VerdictOptions {
    fn default() -> Self {
        VerdictOptions {
            n_max: 8,
            size_bound: DEFAULT_SIZE_BOUND,
            run_probe: false,
            work_bound: WorkBound::default(),
        }
    }
}

fn require_regular(rs: &RootSystem, weights: [&Weight; 3]) -> Result<()> {
    for w in weights {
        w.check_len(rs.rank())?;
        if !w.is_dominant_regular() {
            return Err(Error::NotDominantRegular(w.0.clone()));
        }
    }
    Ok(())
}

fn check_lengths(rs: &RootSystem, weights: [&Weight; 3]) -> Result<()> {
    weights.iter().try_for_each(|w| w.check_len(rs.rank()))
}

fn membership(lat: &IntegerLattice, v: &Weight, name: LatticeName) -> MembershipCheck {
    MembershipCheck {
        vector: v.clone(),
        lattice: name,
        member: lat.contains(v.coords()).expect("rank-length vector"),
    }
}

fn sum3(a: &Weight, b: &Weight, c: &Weight) -> Weight {
    &(a + b) + c
}

fn necessary_record(rs: &RootSystem, lambda: &Weight, mu: &Weight, nu: &Weight) -> RuleRecord {
    let check = membership(
        &root_lattice(rs),
        &sum3(lambda, mu, nu),
        LatticeName::RootLattice,
    );
    RuleRecord {
        rule: Rule::NecessaryQ,
        result: Some(check.member),
        witness: Witness::Memberships {
            checks: vec![check],
        },
    }
}

fn thm56_record(rs: &RootSystem, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<RuleRecord> {
    let gamma = gamma_lattice(rs)?;
    let d_lambda = d_weight_lattice(rs);
    let mut checks: Vec<MembershipCheck> = [lambda, mu, nu]
        .into_iter()
        .map(|w| membership(&d_lambda, w, LatticeName::DWeightLattice))
        .collect();
    checks.push(membership(
        &gamma,
        &sum3(lambda, mu, nu),
        LatticeName::Gamma,
    ));
    Ok(RuleRecord {
        rule: Rule::SufficientThm56,
        result: Some(checks.iter().all(|c| c.member)),
        witness: Witness::Memberships { checks },
    })
}

fn gamma_cor_record(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
) -> Result<RuleRecord> {
    let gamma = gamma_lattice(rs)?;
    let checks: Vec<MembershipCheck> = [lambda, mu, nu]
        .into_iter()
        .map(|w| membership(&gamma, w, LatticeName::Gamma))
        .collect();
    Ok(RuleRecord {
        rule: Rule::SufficientGammaCor,
        result: Some(checks.iter().all(|c| c.member)),
        witness: Witness::Memberships { checks },
    })
}

/// Necessary condition: `lambda + mu + nu` lies in the root lattice.
pub fn necessary_condition(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
) -> Result<bool> {
    require_regular(rs, [lambda, mu, nu])?;
    Ok(necessary_record(rs, lambda, mu, nu).result == Some(true))
}

/// Sufficient condition: each weight in `d Lambda` and the sum in `Gamma`.
pub fn sufficient_thm56(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
) -> Result<bool> {
    check_lengths(rs, [lambda, mu, nu])?;
    Ok(thm56_record(rs, lambda, mu, nu)?.result == Some(true))
}

/// Sufficient condition: all three weights in `Gamma`.
pub fn sufficient_gamma_cor(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
) -> Result<bool> {
    check_lengths(rs, [lambda, mu, nu])?;
    Ok(gamma_cor_record(rs, lambda, mu, nu)?.result == Some(true))
}

/// `lambda + w1(mu) + w2(nu)`.
pub fn pairing_character(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    w1: &WeylElement,
    w2: &WeylElement,
) -> Result<Weight> {
    check_lengths(rs, [lambda, mu, nu])?;
    Ok(sum3(
        lambda,
        &weyl::apply(rs, w1, mu)?,
        &weyl::apply(rs, w2, nu)?,
    ))
}

/// Lattice spanned (in weight coordinates) by a set of roots; `{0}` for the
/// empty set.
pub fn root_span(rs: &RootSystem, roots: &[RootCoords]) -> Result<IntegerLattice> {
    let mut gens = Vec::with_capacity(roots.len());
    for r in roots {
        r.check_len(rs.rank())?;
        if !rs.is_root(r) {
            return Err(Error::NotARoot(r.0.clone()));
        }
        gens.push(rs.root_to_weight_coords(r)?.0);
    }
    IntegerLattice::from_generators(rs.rank(), &gens)
}

/// `L_x` for a generic point over `(w1, w2)`: the span of
/// `R(w1^{-1}) u R(w2^{-1})`.
pub fn generic_pair_lattice(
    rs: &RootSystem,
    w1: &WeylElement,
    w2: &WeylElement,
) -> Result<IntegerLattice> {
    let mut roots = weyl::inversion_set(rs, &w1.inverse(rs));
    for r in weyl::inversion_set(rs, &w2.inverse(rs)) {
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    root_span(rs, &roots)
}

/// Outcome of the exhaustive `W x W` check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllPairsReport {
    pub holds: bool,
    pub pairs_checked: u64,
    /// First failing pair in enumeration order.
    pub counterexample: Option<(WeylElement, WeylElement, Weight)>,
}

/// Checks `lambda + w1 mu + w2 nu` in `Gamma` for every `(w1, w2)` in `W x W`.
/// `size_bound` caps `|W x W|`.
pub fn thm22_all_pairs_report(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    size_bound: u128,
) -> Result<AllPairsReport> {
    check_lengths(rs, [lambda, mu, nu])?;
    let order = rs.weyl_group_order();
    let pairs = order.saturating_mul(order);
    if pairs > size_bound {
        return Err(Error::GroupTooLarge {
            order: pairs,
            bound: size_bound,
        });
    }
    let gamma = gamma_lattice(rs)?;
    let elements: Vec<WeylElement> = weyl::enumerate(rs, size_bound)?.collect();

    // Pairs with equal images give equal sums; keep the first element per
    // image so the reported counterexample is the first in enumeration order.
    let orbit = |v: &Weight| -> Result<Vec<(usize, Weight)>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (k, w) in elements.iter().enumerate() {
            let img = weyl::apply(rs, w, v)?;
            if seen.insert(img.clone()) {
                out.push((k, img));
            }
        }
        Ok(out)
    };
    let mu_images = orbit(mu)?;
    let nu_images = orbit(nu)?;
    let mut checked = 0u64;
    for (i, wmu) in &mu_images {
        let partial = lambda + wmu;
        for (j, wnu) in &nu_images {
            checked += 1;
            let total = &partial + wnu;
            if !gamma.contains(total.coords())? {
                return Ok(AllPairsReport {
                    holds: false,
                    pairs_checked: checked,
                    counterexample: Some((elements[*i].clone(), elements[*j].clone(), total)),
                });
            }
        }
    }
    Ok(AllPairsReport {
        holds: true,
        pairs_checked: checked,
        counterexample: None,
    })
}

pub fn thm22_all_pairs(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    size_bound: u128,
) -> Result<bool> {
    Ok(thm22_all_pairs_report(rs, lambda, mu, nu, size_bound)?.holds)
}

/// Structure of the subgroup of `T` cut out by the characters in `roots`:
/// `Hom(Lambda / Z S, C*)`, a torus of rank `rank - rank(Z S)` times finite
/// cyclic factors.
pub fn stabilizer_structure(rs: &RootSystem, roots: &[RootCoords]) -> Result<StabilizerStructure> {
    let span = root_span(rs, roots)?;
    let full = IntegerLattice::scaled_standard(rs.rank(), 1);
    let q = full.quotient_structure(&span)?;
    let finite_factors: Vec<u64> = q
        .invariant_factors
        .iter()
        .map(|f| u64::try_from(f).expect("factor divides det of a Cartan submatrix"))
        .collect();
    Ok(StabilizerStructure {
        torus_rank: q.free_rank,
        divisible: finite_factors.is_empty(),
        finite_factors,
    })
}

/// Runs every rule and assembles an explainable verdict.
pub fn verdict(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    options: VerdictOptions,
) -> Result<DescentVerdict> {
    require_regular(rs, [lambda, mu, nu])?;
    let mut reasons = vec![necessary_record(rs, lambda, mu, nu)];
    let necessary = reasons[0].result == Some(true);

    let incomplete = |reasons: &Vec<RuleRecord>, e: Error| Error::VerdictIncomplete {
        reasons: reasons.clone(),
        source: Box::new(e),
    };
    let thm56 = thm56_record(rs, lambda, mu, nu).map_err(|e| incomplete(&reasons, e))?;
    reasons.push(thm56);
    let cor = gamma_cor_record(rs, lambda, mu, nu).map_err(|e| incomplete(&reasons, e))?;
    reasons.push(cor);
    let cheap_hit = reasons[1..].iter().any(|r| r.result == Some(true));

    let skipped = |reason: &str| RuleRecord {
        rule: Rule::Thm22AllPairs,
        result: None,
        witness: Witness::Skipped {
            reason: reason.to_string(),
        },
    };
    let all_pairs = if !necessary {
        skipped("necessary condition fails")
    } else if cheap_hit {
        skipped("an earlier sufficient rule holds")
    } else {
        match thm22_all_pairs_report(rs, lambda, mu, nu, options.size_bound) {
            Ok(rep) => RuleRecord {
                rule: Rule::Thm22AllPairs,
                result: Some(rep.holds),
                witness: match rep.counterexample {
                    Some((w1, w2, pairing)) => Witness::Counterexample { w1, w2, pairing },
                    None => Witness::AllPairsHold {
                        pairs_checked: rep.pairs_checked,
                    },
                },
            },
            Err(e @ Error::GroupTooLarge { .. }) => skipped(&e.to_string()),
            Err(e) => return Err(incomplete(&reasons, e)),
        }
    };
    reasons.push(all_pairs);

    let outcome = if !necessary {
        Outcome::DoesNotDescend
    } else if reasons[1..].iter().any(|r| r.result == Some(true)) {
        Outcome::Descends
    } else {
        Outcome::Unknown
    };

    let probe = options.run_probe.then(|| {
        let report = match semistable_probe(rs, lambda, mu, nu, options.n_max, options.work_bound) {
            Ok(p) => ProbeReport::from(p),
            Err(Error::ProbeAborted { n, source }) => ProbeReport::Aborted {
                n,
                error: source.to_string(),
            },
            Err(e) => ProbeReport::Aborted {
                n: 0,
                error: e.to_string(),
            },
        };
        reasons.push(RuleRecord {
            rule: Rule::SemistableProbe,
            result: match report {
                ProbeReport::NonEmpty { .. } => Some(true),
                _ => None,
            },
            witness: Witness::Probe {
                outcome: report.clone(),
            },
        });
        report
    });

    Ok(DescentVerdict {
        family: rs.family(),
        rank: rs.rank(),
        lambda: lambda.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        outcome,
        reasons,
        probe,
    })
}
