//! Exact-arithmetic toolkit for towers of toric weighted blowups.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in this crate. The library is organized around
//! five layers:
//!
//! * [`lattice`] — overlattices `Z^d + Zv`, membership, index, primitivity,
//!   and cyclic-quotient types.
//! * [`cone`] — simplicial cones, star subdivision along a vector, weights
//!   of vectors in cones, interchangeability, and tower reversal.
//! * [`poly`] — monomial supports, semi-invariance, weight functions, and
//!   re-embedding bookkeeping.
//! * [`tworay`] — the 2-ray-game numerics: pullback coefficients, nefness
//!   criteria, and discrepancy propagation along towers.
//! * [`catalog`] — parameterized encodings of the case families together
//!   with the master verification routine.
//!
//! The [`oracle`] module holds independent brute-force reference
//! implementations used by the test suites; it is not part of the normal
//! computation path.

pub mod catalog;
pub mod cone;
pub mod lattice;
mod linalg;
pub mod oracle;
pub mod poly;
pub mod tworay;

pub use lattice::{LatticeVector, Overlattice, QuotientType, Rational};
