//! Exact computation of symbolic powers of monomial ideals.
//!
//! The crate is organised bottom-up:
//!
//! * [`monomial`] – monomials with arbitrary-precision exponents and the
//!   arithmetic of monomial ideals (membership, intersection, products).
//! * [`decomposition`] – irreducible decompositions, associated primes,
//!   big-height, the localized ideals `Q_{⊆P}` and `σ(I)`.
//! * [`symbolic`] – symbolic powers computed without localization and the
//!   containment checks comparing symbolic and ordinary powers.
//! * [`geometry`] – Newton polyhedra, the symbolic polyhedron and an exact
//!   rational simplex solver.
//! * [`invariants`] – `α`, `β`, the Waldschmidt constant and the
//!   Chudnovsky-type checks.
//! * [`random`] – seeded generators for fuzzing corpora.
//!
//! All values are immutable once built and every operation is exact.

pub mod check;
pub mod decomposition;
pub mod error;
pub mod geometry;
mod index;
pub mod invariants;
pub mod monomial;
pub mod random;
pub mod symbolic;

pub use check::{CheckKind, CheckResult, ParamValue, Verdict};
pub use decomposition::{Decomposition, IrreducibleComponent, MonomialPrime};
pub use error::{Error, Result};
pub use geometry::{NewtonPolyhedron, Rational, SymbolicPolyhedron};
pub use monomial::{Limits, Monomial, MonomialIdeal};
pub use symbolic::SymbolicContext;
