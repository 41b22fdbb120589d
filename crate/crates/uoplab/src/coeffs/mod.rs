//! Exact coefficient arithmetic: integers, Laurent polynomials in `v`
//! (with `v^2 = q`), lattice vectors and the group algebra over them.

mod coweight;
mod group_alg;
mod int;
mod laurent;
mod scalars;

pub use coweight::Coweight;
pub use group_alg::{ga_mul, GroupAlgElt};
pub use int::Int;
pub use laurent::{lp_eval_q, lp_mul, LaurentPoly};
pub use scalars::{Coefficient, LaurentScalars, Scalars, SpecializedScalars};
