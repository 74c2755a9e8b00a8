//! Exact-arithmetic verification of the catalog of four-dimensional real Lie
//! superalgebras: quasi-Frobenius forms, Lagrangian (T*/PiT*) extensions,
//! flat torsion-free connections, and left-symmetric / Novikov /
//! Balinsky-Novikov product tables.

pub mod catalog;
pub mod cert;
pub mod connect;
pub mod error;
pub mod lie;
pub mod linear;
pub mod lsa;
pub mod report;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
