//! Products in the Iwahori-Hecke algebra: the quadratic relation, length-zero
//! elements, inverses and Bernstein elements `θ_λ`.

use uoplab::coeffs::Coweight;
use uoplab::hecke::HeckeAlgebra;
use uoplab::rootdata::preset;

fn main() -> uoplab::Result<()> {
    let alg = HeckeAlgebra::from_datum(preset("gl2")?)?;
    let g = alg.group();
    let s = g.generators()[0].elt.clone();
    let s0 = g.generators()[1].elt.clone();
    let ts = alg.basis(s.clone());
    println!("T_s   = {}", ts.render(g));
    println!("T_s^2 = {}", alg.mul(&ts, &ts).render(g));
    println!("T_s^-1 = {}", alg.t_inverse(&s).render(g));

    let omega = g.translation(&"1,0".parse()?);
    let omega = g.mul(&omega, &s);
    println!("ℓ(ω) = {} for ω = {}", g.length(&omega), g.render(&omega));
    let conj = alg.mul(
        &alg.mul(&alg.basis(omega.clone()), &alg.basis(s0)),
        &alg.t_inverse(&omega),
    );
    println!("T_ω T_s₀ T_ω⁻¹ = {}", conj.render(g));

    for lambda in ["1,0", "0,1", "-1,0"] {
        let lambda: Coweight = lambda.parse()?;
        println!("θ_{lambda} = {}", alg.theta(&lambda)?.render(g));
    }
    let a: Coweight = "1,0".parse()?;
    let b: Coweight = "0,1".parse()?;
    let prod = alg.mul(&*alg.theta(&a)?, &*alg.theta(&b)?);
    println!(
        "θ_(1,0) θ_(0,1) = θ_(1,1): {}",
        prod == *alg.theta(&(&a + &b))?
    );
    Ok(())
}
