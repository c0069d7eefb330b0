//! Lehmer codes for finite Coxeter groups of types A, B, D, H3 and I2(m),
//! the M-complexes of multicomplexes, and Poincaré polynomials of lower
//! Bruhat intervals.

pub mod codes;
pub mod coxeter;
pub mod error;
pub mod input;
pub mod intervals;
pub mod multicomplex;
pub mod poly;
pub mod schubert;
pub mod simplicial;
pub mod verify;

pub use coxeter::{BruhatPoset, Canonical, CoxeterSystem, ElementId, Group, TypeLabel};
pub use error::{Error, Result};
pub use poly::IntPolynomial;
