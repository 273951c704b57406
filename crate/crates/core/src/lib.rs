//! Combinatorial invariants of discrete Hodge algebras and algebras with
//! straightening laws.
//!
//! The crate works entirely on the combinatorial side: finite posets and their
//! order complexes, Stanley-Reisner complexes of squarefree monomial ideals,
//! polarization of arbitrary monomial ideals, and the doubled poset `P ⊎ Q`
//! that generates the Rees algebra of a discrete ASL. All arithmetic is exact.

pub mod detsym;
pub mod error;
pub mod face;
pub mod field;
pub mod invariants;
pub mod monomial;
pub mod polynomial;
pub mod poset;
pub mod rank;
pub mod rees;
pub mod simplicial;
pub mod sweep;

pub use error::{Error, Result};
pub use face::Face;
pub use field::FieldSpec;
pub use poset::{Endpoint, IdealRefFile, Poset, PosetFile, PosetIdeal};
pub use simplicial::{BettiVector, SimplicialComplex};
