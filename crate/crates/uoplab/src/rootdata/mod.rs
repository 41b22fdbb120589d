//! Root data, finite Weyl groups, the extended affine Weyl group and the dot action.

mod affine;
mod datum;
mod dot;
pub mod presets;
mod weyl;

pub use affine::{
    coweight_box, ext_length, Decomposition, ExtAffWeylElt, ExtendedAffineWeyl, Generator,
    GeneratorKind,
};
pub use datum::{is_antidominant, pair, Component, DatumSpec, RootDatum};
pub use dot::{antidominant_rep, cexp, dot_act, dot_orbit_sum, is_dot_invariant, orbit};
pub use presets::{preset, PRESET_NAMES};
pub use weyl::{weyl_group, FiniteWeylElt, WeylGroup, DEFAULT_WEYL_BOUND, WEYL_BOUND_ENV};
