//! Bernstein normal forms, the spherical basis, the Satake transform into
//! dot-invariants and its inverse.

use uoplab::coeffs::Coweight;
use uoplab::hecke::HeckeAlgebra;
use uoplab::rootdata::{dot_orbit_sum, is_dot_invariant, preset};

fn main() -> uoplab::Result<()> {
    let alg = HeckeAlgebra::from_datum(preset("gl2")?)?;
    let g = alg.group();
    let s = g.generators()[0].elt.clone();
    let lambda: Coweight = "1,0".parse()?;
    let x = g.mul(&g.translation(&lambda), &s);
    let form = alg.bernstein_form(&alg.basis(x.clone()))?;
    println!("T_{} = {}", g.render(&x), form.render(g));

    for name in ["gl2", "gl3", "sp4"] {
        let alg = HeckeAlgebra::from_datum(preset(name)?)?;
        let lambda: Coweight = match name {
            "gl2" => "1,0",
            "gl3" => "1,0,0",
            _ => "1,0",
        }
        .parse()?;
        let h = alg.spherical_elt(&lambda)?;
        let image = alg.satake(&h)?;
        println!("\n{name}: sph{lambda} has {} T-terms", h.len());
        println!("  Satake image {image}");
        println!("  dot-invariant: {}", is_dot_invariant(alg.datum(), &image));
        println!("  inverse: {}", alg.satake_inverse(&image)?);
        let orbit = dot_orbit_sum(alg.datum(), &lambda);
        println!(
            "  orbit sum {orbit} comes from {}",
            alg.satake_inverse(&orbit)?
        );
        let sq = alg.spherical_mul(&h, &h)?;
        println!(
            "  sph{lambda}² = {}",
            alg.satake_inverse(&alg.satake(&sq)?)?
        );
    }
    Ok(())
}
