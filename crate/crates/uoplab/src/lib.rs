//! Exact computations with Iwahori-Hecke algebras of split p-adic groups.
//!
//! The crate is organised by layer:
//!
//! - [`coeffs`]: Laurent polynomials in `v = q^{1/2}` and the group algebra of a coweight lattice.
//! - [`rootdata`]: root data, finite and extended affine Weyl groups, the dot action.
//! - [`hecke`]: the Iwahori-Hecke algebra, Bernstein elements and the Satake transform.
//! - [`uops`]: U-operators and their integrality certificates.
//! - [`tree`]: the rank-1 Bruhat-Tits tree with successor, fiber and trace operators.
//! - [`cli`]: the verification driver behind the `uoplab` binary.
//!
//! Runnable walkthroughs live in `examples/`:
//!
//! ```text
//! cargo run --example laurent_arithmetic
//! cargo run --example weyl_groups
//! cargo run --example hecke_products
//! cargo run --example bernstein_satake
//! cargo run --example gl2_certificate
//! cargo run --example sp4_certificate
//! cargo run --example tree_operators
//! cargo run --example trace_relation
//! cargo run --example custom_datum
//! ```

pub mod cli;
pub mod coeffs;
pub mod error;
pub mod hecke;
pub mod rootdata;
pub mod tree;
pub mod uops;

pub use error::{Error, Result};
