//! Named lattices in fundamental-weight coordinates (`Z^rank` ambient).
//!
//! The weight lattice is all of `Z^rank`; the root lattice is spanned by the
//! columns of the Cartan matrix. `Gamma` is the intersection of all
//! finite-index lattices spanned by sets of positive roots, given here by an
//! explicit generating set per type.

use crate::error::{Error, Result};
use crate::intlat::IntegerLattice;
use crate::rootsys::{Family, RootCoords, RootSystem};

/// Root lattice `Q`.
pub fn root_lattice(rs: &RootSystem) -> IntegerLattice {
    let gens: Vec<Vec<i64>> = (0..rs.rank())
        .map(|i| {
            rs.root_to_weight_coords(&rs.simple_root(i))
                .expect("rank-length vector")
                .0
        })
        .collect();
    IntegerLattice::from_generators(rs.rank(), &gens).expect("rank-length generators")
}

/// Weight lattice `Lambda`.
pub fn weight_lattice(rs: &RootSystem) -> IntegerLattice {
    IntegerLattice::scaled_standard(rs.rank(), 1)
}

/// `k * Lambda`.
pub fn scaled_weight_lattice(rs: &RootSystem, k: u64) -> IntegerLattice {
    assert!(k >= 1, "scale factor must be positive");
    IntegerLattice::scaled_standard(rs.rank(), k as i64)
}

/// `d * Lambda` with `d` the lcm of the highest root's coefficients.
pub fn d_weight_lattice(rs: &RootSystem) -> IntegerLattice {
    scaled_weight_lattice(rs, rs.d())
}

/// Whether the Gamma table covers this type.
pub fn in_gamma_table(rs: &RootSystem) -> bool {
    match rs.family() {
        Family::B => rs.rank() >= 3,
        _ => true,
    }
}

/// How Gamma is specified for a type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GammaSpec {
    /// Spanned by these vectors in simple-root coordinates.
    RootGenerators(Vec<RootCoords>),
    /// `k * Lambda`.
    ScaledWeightLattice(u64),
}

pub fn gamma_spec(rs: &RootSystem) -> Result<GammaSpec> {
    if !in_gamma_table(rs) {
        return Err(Error::RankOutOfTableRange {
            family: rs.family(),
            rank: rs.rank(),
        });
    }
    let n = rs.rank();
    let simple = |i: usize, k: i64| rs.simple_root(i).scale(k);
    let scaled_all = |k: i64| (0..n).map(|i| simple(i, k)).collect::<Vec<_>>();
    Ok(match rs.family() {
        Family::A => GammaSpec::RootGenerators(scaled_all(1)),
        Family::B => GammaSpec::RootGenerators(scaled_all(2)),
        Family::C => GammaSpec::ScaledWeightLattice(2),
        Family::D if n == 4 => GammaSpec::RootGenerators(vec![
            simple(0, 2),
            simple(1, 2),
            &simple(0, 1) + &simple(2, 1),
            &simple(0, 1) + &simple(3, 1),
        ]),
        Family::D => {
            let mut gens: Vec<RootCoords> = (0..n - 2).map(|i| simple(i, 2)).collect();
            gens.push(&simple(n - 2, 1) + &simple(n - 1, 1));
            gens.push(simple(n - 2, 2));
            GammaSpec::RootGenerators(gens)
        }
        Family::G => GammaSpec::RootGenerators(vec![simple(0, 6), simple(1, 2)]),
        Family::F => GammaSpec::RootGenerators(vec![
            simple(0, 6),
            simple(1, 6),
            simple(2, 12),
            simple(3, 12),
        ]),
        Family::E => match n {
            6 => GammaSpec::ScaledWeightLattice(6),
            7 => GammaSpec::ScaledWeightLattice(12),
            _ => GammaSpec::RootGenerators(scaled_all(60)),
        },
    })
}

/// The lattice `Gamma`, in weight coordinates.
pub fn gamma_lattice(rs: &RootSystem) -> Result<IntegerLattice> {
    Ok(match gamma_spec(rs)? {
        GammaSpec::ScaledWeightLattice(k) => scaled_weight_lattice(rs, k),
        GammaSpec::RootGenerators(gens) => {
            let weights: Vec<Vec<i64>> = gens
                .iter()
                .map(|g| rs.root_to_weight_coords(g).expect("rank-length").0)
                .collect();
            IntegerLattice::from_generators(rs.rank(), &weights)?
        }
    })
}

/// Weight-coordinate generators of Gamma (the generating set the lattice was
/// built from, not its Hermite basis).
pub fn gamma_generators(rs: &RootSystem) -> Result<Vec<Vec<i64>>> {
    Ok(match gamma_spec(rs)? {
        GammaSpec::ScaledWeightLattice(k) => (0..rs.rank())
            .map(|i| rs.fundamental_weight(i).scale(k as i64).0)
            .collect(),
        GammaSpec::RootGenerators(gens) => gens
            .iter()
            .map(|g| rs.root_to_weight_coords(g).expect("rank-length").0)
            .collect(),
    })
}
