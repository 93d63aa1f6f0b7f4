//! Exact computation in the limit groups `BS(m, xi)` of Baumslag-Solitar
//! groups, where `xi` is an m-adic integer.
//!
//! Each limit group is an HNN extension of a free abelian group `E` of
//! countable rank. The modules follow that structure:
//!
//! - [`madic`]: parameters `(m, xi)`, digit sequences `r_i`, polynomials `P_h`.
//! - [`lattice`]: the base group `E`, its subgroups and the stable-letter map.
//! - [`group`]: words, Britton reduction, normal forms, word and conjugacy problems.
//! - [`bsclassic`]: the classical groups `BS(p, q)`.
//! - [`markedspace`]: relators, distances between marked groups, isomorphism
//!   and recovery of parameters from a word-problem oracle.
//! - [`morphisms`]: the wreath-product quotient and (endo)morphisms.
//!
//! ```
//! use bsl_core::{group::{parse_word, WordMode, is_trivial}, lattice::GroupCtx, madic::*};
//!
//! let ctx = GroupCtx::new(MarkedGroupSpec::new(2, XiSpec::int(3)).unwrap());
//! let w = parse_word("babbABaBBA", WordMode::Compact).unwrap();
//! assert!(is_trivial(&ctx, &w).unwrap());
//! ```

pub mod bsclassic;
pub mod error;
pub mod exec;
pub mod group;
mod intlin;
pub mod lattice;
pub mod madic;
pub mod markedspace;
pub mod morphisms;
pub mod poly;

pub use error::{Error, Result};
