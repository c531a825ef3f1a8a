//! Text and JSON renderings of the highest-root table and the Gamma table.

use serde::Serialize;

use crate::error::Result;
use crate::intlat::{IntegerLattice, LatticeIndex};
use crate::lattices::{gamma_lattice, gamma_spec, root_lattice, GammaSpec};
use crate::rootsys::{Family, RootCoords, RootSystem};

/// Types listed by default: every family at a few ranks covered by the
/// Gamma table.
pub const DEFAULT_TYPES: &[&str] = &[
    "A1", "A2", "A3", "A4", "A5", "B3", "B4", "B5", "C2", "C3", "C4", "D4", "D5", "D6", "G2", "F4",
    "E6", "E7", "E8",
];

pub fn default_root_systems() -> Vec<RootSystem> {
    DEFAULT_TYPES
        .iter()
        .map(|t| RootSystem::from_label(t).expect("admissible type"))
        .collect()
}

fn subscript(n: usize) -> String {
    n.to_string()
        .chars()
        .map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap()).unwrap())
        .collect()
}

fn term(coef: i64, index: &str) -> String {
    match coef {
        1 => format!("α{index}"),
        -1 => format!("-α{index}"),
        c => format!("{c}α{index}"),
    }
}

/// `2α₁ + 3α₂ + ...` for a vector in simple-root coordinates.
pub fn root_expression(r: &RootCoords) -> String {
    let terms: Vec<String> = r
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| term(c, &subscript(i + 1)))
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

/// `B3: θ = α₁ + 2α₂ + 2α₃, d = 2`.
pub fn theta_row(rs: &RootSystem) -> String {
    format!(
        "{}{}: θ = {}, d = {}",
        rs.family(),
        subscript(rs.rank()),
        root_expression(rs.theta()),
        rs.d()
    )
}

// Leading and trailing terms kept visible in the rank-generic row of a
// classical family.
fn generic_layout(family: Family) -> Option<(usize, usize)> {
    match family {
        Family::A => Some((2, 1)),
        Family::B => Some((3, 1)),
        Family::C => Some((2, 2)),
        Family::D => Some((2, 3)),
        _ => None,
    }
}

fn tail_index(from_end: usize) -> String {
    match from_end {
        0 => "_ℓ".to_string(),
        k => format!("_{{ℓ−{k}}}"),
    }
}

/// One row per family; classical families are written for general rank
/// `ℓ`, with coefficients taken from a rank-8 instance.
pub fn theta_family_rows() -> Vec<String> {
    let mut rows = Vec::new();
    for family in [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::G,
        Family::F,
    ] {
        rows.push(family_row(family));
    }
    for rank in 6..=8 {
        rows.push(theta_row(&RootSystem::new(Family::E, rank).expect("E6-E8")));
    }
    rows
}

fn family_row(family: Family) -> String {
    let Some((head, tail)) = generic_layout(family) else {
        let rank = if family == Family::G { 2 } else { 4 };
        return theta_row(&RootSystem::new(family, rank).expect("exceptional type"));
    };
    let rs = RootSystem::new(family, 8).expect("classical type");
    let c = rs.theta().coords();
    let n = c.len();
    let mut terms: Vec<String> = (0..head).map(|i| term(c[i], &subscript(i + 1))).collect();
    terms.push("⋯".to_string());
    terms.extend((0..tail).rev().map(|k| term(c[n - 1 - k], &tail_index(k))));
    format!("{}_ℓ: θ = {}, d = {}", family, terms.join(" + "), rs.d())
}

/// How Gamma is defined for the type, e.g. `2Q`, `6Λ`, `ℤ{6α₁, 2α₂}`.
pub fn gamma_definition(rs: &RootSystem) -> Result<String> {
    Ok(match gamma_spec(rs)? {
        GammaSpec::ScaledWeightLattice(k) => format!("{k}Λ"),
        GammaSpec::RootGenerators(gens) => {
            let uniform = gens.len() == rs.rank()
                && gens.iter().enumerate().all(|(i, g)| {
                    let k = gens[0].coords()[0];
                    *g == rs.simple_root(i).scale(k)
                });
            if uniform {
                match gens[0].coords()[0] {
                    1 => "Q".to_string(),
                    k => format!("{k}Q"),
                }
            } else {
                let parts: Vec<String> = gens
                    .iter()
                    .map(|g| root_expression(g).replace(" + ", "+"))
                    .collect();
                format!("ℤ{{{}}}", parts.join(", "))
            }
        }
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct GammaRow {
    #[serde(rename = "type")]
    pub label: String,
    pub family: Family,
    pub rank: usize,
    pub definition: String,
    pub basis: IntegerLattice,
    pub index_in_q: LatticeIndex,
}

pub fn gamma_row(rs: &RootSystem) -> Result<GammaRow> {
    let gamma = gamma_lattice(rs)?;
    let index_in_q = gamma.index_in(&root_lattice(rs))?;
    Ok(GammaRow {
        label: rs.label(),
        family: rs.family(),
        rank: rs.rank(),
        definition: gamma_definition(rs)?,
        basis: gamma,
        index_in_q,
    })
}

fn basis_text(lat: &IntegerLattice) -> String {
    let rows: Vec<String> = lat
        .basis_strings()
        .iter()
        .map(|r| format!("({})", r.join(",")))
        .collect();
    rows.join(" ")
}

/// Aligned text table of Gamma rows.
pub fn gamma_text(rows: &[GammaRow]) -> String {
    let headers = ["type", "Gamma", "[Q:Gamma]", "basis (weight coordinates)"];
    let cells: Vec<[String; 4]> = rows
        .iter()
        .map(|r| {
            [
                r.label.clone(),
                r.definition.clone(),
                r.index_in_q.to_string(),
                basis_text(&r.basis),
            ]
        })
        .collect();
    let width = |k: usize| {
        cells
            .iter()
            .map(|c| c[k].chars().count())
            .chain([headers[k].len()])
            .max()
            .unwrap_or(0)
    };
    let widths = [width(0), width(1), width(2)];
    let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w - s.chars().count()));
    let mut out = String::new();
    let line = |c: [&str; 4]| {
        format!(
            "{}  {}  {}  {}",
            pad(c[0], widths[0]),
            pad(c[1], widths[1]),
            pad(c[2], widths[2]),
            c[3]
        )
        .trim_end()
        .to_string()
    };
    out.push_str(&line(headers));
    out.push('\n');
    for c in &cells {
        out.push_str(&line([&c[0], &c[1], &c[2], &c[3]]));
        out.push('\n');
    }
    out
}
