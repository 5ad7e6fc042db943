//! Exact computation of automorphism-group orbits of theta characteristics.
//!
//! The pipeline runs entirely over exact arithmetic:
//!
//! 1. [`perm`] — finite permutation groups (closure, conjugacy, subnormality).
//! 2. [`cover`] — the regular branched cover attached to a group, a signature
//!    and a generating vector, realised as a combinatorial surface; a canonical
//!    symplectic basis of its first homology; and the integer symplectic matrix
//!    of every deck transformation.
//! 3. [`theta`] — the induced affine action on `GF(2)^{2g}`, parity of
//!    characteristics, orbit decompositions and invariant counts.
//! 4. [`ramification`] — signature-level reasoning: Riemann–Hurwitz, the
//!    subnormal-odd-cyclic (SOC) criterion, and feature extraction.
//! 5. [`dolgachev`] — the linearised Picard group of a genus-zero quotient and
//!    the invariant-characteristic counts for Hurwitz curves with simple
//!    automorphism group.
//!
//! [`gf2`] and [`intmat`] supply the underlying exact linear algebra (packed
//! word-parallel GF(2) elimination, and Smith normal form over the integers).

pub mod cover;
pub mod dolgachev;
pub mod gf2;
pub mod intmat;
pub mod perm;
pub mod ramification;
pub mod theta;

mod error;

pub use error::{Error, Result};
