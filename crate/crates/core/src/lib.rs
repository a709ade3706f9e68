//! Canonical bases of irreducible modules over quantized enveloping
//! algebras, computed from Littelmann paths.
//!
//! `V(lambda)` is realized inside a tensor product of fundamental modules
//! whose canonical bases are known. For every path `pi` of weight `nu` the
//! adapted monomial `F_pi` is read off the path; the vectors
//! `F_pi v_lambda` are then corrected triangularly into the canonical basis
//! elements `G(b_pi)`.
//!
//! ```
//! use uqcanon::{canonical::Realization, CartanDatum, RootVector, Weight};
//!
//! let a2: CartanDatum = "A2".parse().unwrap();
//! let r = Realization::builtin(&a2, &Weight(vec![1, 1])).unwrap();
//! let block = r.canonical_block(&RootVector(vec![1, 1])).unwrap();
//! assert_eq!(block.len(), 2);
//! ```

pub mod canonical;
pub mod cli;
pub mod error;
pub mod laurent;
pub mod module;
pub mod path;
pub mod rootdata;
pub mod type_a;

pub use canonical::{CanonicalElement, Realization, WeightBlock};
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use module::{ModuleRep, TensorSpace, TensorVector};
pub use path::{AdaptedMonomial, LsPath, PathCrystal, PathLabel};
pub use rootdata::{CartanDatum, RootVector, Weight, WeylWord};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/laurent.md")]
    mod laurent {}
    #[doc = include_str!("../../../book/src/rootdata.md")]
    mod rootdata {}
    #[doc = include_str!("../../../book/src/paths.md")]
    mod paths {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/canonical.md")]
    mod canonical {}
    #[doc = include_str!("../../../book/src/type_a.md")]
    mod type_a {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
