//! Symbolic workbench for the K-theoretic Hall algebra of a quiver.
//!
//! The crate is organized around exact arithmetic ([`coeff`]), quiver and shift
//! bookkeeping ([`quiver`]), the graded algebra of generator words with its
//! rewriting engine ([`algebra`]), r-matrix degree tables ([`rmatrix`]),
//! simple-object labels ([`simples`]), independent equivariant-character models
//! that certify the rewrite rules ([`oracle`]), and finite linear-algebra models
//! of derived kernels ([`dkernel`]).

pub mod algebra;
pub mod coeff;
pub mod dkernel;
pub mod oracle;
pub mod quiver;
pub mod rmatrix;
pub mod simples;
