//! GF(2^11) arithmetic and an explicit additive representation of the
//! Mathieu group M23 on the field, built by extending permutations of the
//! 23-element multiplicative subgroup `C` to GF(2)-linear maps.
//!
//! The crate is organized bottom-up:
//!
//! - [`poly`] and [`field`]: GF(2)\[x\] and GF(2^n) arithmetic, log tables,
//!   primitivity and irreducibility checks.
//! - [`matrix`]: bit-packed GF(2) matrices.
//! - [`subgroup`]: `C = <alpha>`, the `alpha`/`beta` exponent algebra and the
//!   bases A and chi.
//! - [`perm`]: permutations in cycle notation and Schreier-Sims.
//! - [`extension`]: the permutation-to-linear-map extension procedure.
//! - [`group`]: orders, closure enumeration, `C`-preservation, spinning.
//! - [`tables`] and [`report`]: table regeneration, diffs against the
//!   published transcriptions, and the JSON verification report.

pub mod extension;
pub mod field;
pub mod group;
pub mod matrix;
pub mod perm;
pub mod poly;
pub mod report;
pub mod subgroup;
pub mod tables;

pub use field::{FieldElement, FieldError, FieldSpec, LogTable};
pub use matrix::BitMatrix;
pub use perm::Permutation;
pub use subgroup::{CExponent, CSubgroup, SubgroupSpec};
