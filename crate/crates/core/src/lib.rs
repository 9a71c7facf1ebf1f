//! Degree cones of simple Lie algebras and quantum groups.
//!
//! The crate is `no_std` and only needs `alloc`. It covers root systems and
//! Weyl group combinatorics, exact arithmetic, quantum PBW root vectors and
//! their straightening relations, strict polyhedral cones, monomial bases of
//! simple modules and lattice polytopes.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cone;
pub mod error;
pub mod exact;
pub mod poly;
pub mod qpbw;
pub mod rep;
pub mod roots;

pub use error::{Error, Result};
