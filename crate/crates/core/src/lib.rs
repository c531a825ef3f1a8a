//! Descent of line bundles on the GIT quotient `(G/B)^3 // G` for a simple
//! group `G`, together with the root-system, lattice, Weyl-group and
//! representation machinery the decision rules rely on.

pub mod descent;
pub mod error;
pub mod intlat;
pub mod lattices;
pub mod repmult;
pub mod rootsys;
pub mod selftest;
pub mod tables;
pub mod weyl;

pub use descent::{DescentVerdict, Outcome, Rule, StabilizerStructure, VerdictOptions};
pub use error::{Error, Result};
pub use intlat::{IntegerLattice, LatticeIndex, QuotientStructure};
pub use rootsys::{Family, RootCoords, RootSystem, Weight};
pub use weyl::WeylElement;
