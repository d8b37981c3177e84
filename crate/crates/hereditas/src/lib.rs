//! hereditas: an exact-arithmetic workbench for homological certificates
//! over concrete computable rings.
//!
//! The crate decides and certifies splitting properties of matrices and
//! finitely presented modules over Z, Z/n, prime fields and
//! finite-dimensional algebras: pseudo-cokernel chains, semi-hereditary
//! witnesses, projective-dimension bounds, Ext/Tor values, character-module
//! dualities and bounded torsion-class verification. Every positive answer
//! comes with a certificate that re-verifies by plain matrix
//! multiplication; every negative answer carries a concrete witness.

pub mod abgroup;
pub mod error;
pub mod fplin;
pub mod fpmod;
pub mod homdual;
pub mod job;
pub mod linear;
pub mod mat;
pub mod matcat;
pub mod ring;
pub mod torsionlab;
pub mod zlin;

pub use error::Error;
pub use mat::Mat;
pub use ring::{Elem, RingSpec};
