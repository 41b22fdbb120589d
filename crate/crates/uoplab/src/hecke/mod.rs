//! The Iwahori–Hecke algebra, its Bernstein presentation, the spherical
//! subalgebra and the Satake transform.

mod algebra;
mod bernstein;
mod elt;
mod spherical;

pub use algebra::{hk_mul, t_inverse, HeckeAlgebra};
pub use bernstein::{bernstein_form, BernsteinForm};
pub use elt::HeckeElt;
pub use spherical::{LambdaFunction, SphericalCombination};
