//! Exact combinatorial engines for invariants of numerical semigroup
//! rings k[[s, t^H]], their staircase (monomial) ideals, tangent cones,
//! resolution dual graphs of normal surface singularities, and diagonal
//! hypersurface rings.
//!
//! Everything here is integer arithmetic over owned buffers; the crate
//! is `no_std` + `alloc`. IO, report formats, and the CLI live in the
//! companion `srplab` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cone;
pub mod hyper;
pub mod ideal;
pub mod lattice;
pub mod semigroup;
pub mod srp;
