//! Exact computation in right-sided combinatorial Hopf algebras.
//!
//! A right-sided combinatorial Hopf algebra is a tensor coalgebra `T(R)` with
//! the deconcatenation coproduct and an associative product `⋆` for which
//! every `T^{≥p}(R)` is a right ideal. The product is determined by a brace
//! structure `M_{1q} : R ⊗ R^{⊗q} → R`, and this crate evaluates it from any
//! [`BraceSystem`](engine::BraceSystem).
//!
//! Modules:
//!
//! - [`linear`]: exact scalars, words, formal linear combinations,
//!   deconcatenation and the dual pairing.
//! - [`engine`]: the generic `⋆` product (recursive and closed forms), brace
//!   relation and right-sidedness checks, and the brute-force dual brace
//!   oracle built from a primal coproduct.
//! - [`trees`]: the free brace algebra on decorated planar rooted trees, the
//!   grafting enumerator, and the `ι`/`μ` lifting.
//! - [`fdb`]: the noncommutative Faà di Bruno algebra.
//! - [`qed`]: the noncommutative charge-renormalization algebra on planar
//!   binary trees.
//! - [`pinter`]: the noncommutative Pinter algebra over a pluggable
//!   bialgebra.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod combinat;
pub mod engine;
mod error;
pub mod fdb;
pub mod linear;
pub mod pinter;
pub mod qed;
pub mod trees;

pub use engine::{Alphabet, BraceSystem, CoproductSystem, LawReport, Verdict};
pub use error::Error;
pub use linear::{Element, Letter, Scalar, TensorElement, Word};

pub type Result<T> = core::result::Result<T, Error>;
