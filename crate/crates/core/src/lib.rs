//! Canonical bases of the level-one q-deformed Fock space and their
//! transition matrices.

pub mod laurent;
pub mod partition;
pub mod symfunc;
pub mod wedge;
pub mod fock;
pub mod canonical;
pub mod cli;
