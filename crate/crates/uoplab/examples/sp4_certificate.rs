//! Integrality certificates beyond rank one: `gl3` at `(1,0,0)` and `sp4` at
//! the short fundamental coweight `(1,0)`.

use std::time::Instant;

use uoplab::coeffs::Coweight;
use uoplab::hecke::HeckeAlgebra;
use uoplab::rootdata::preset;
use uoplab::uops::{integrality_certificate, DEFAULT_SPECIALIZATIONS};

fn main() -> uoplab::Result<()> {
    for (group, lambda) in [("gl3", "1,0,0"), ("sp4", "1,0")] {
        let start = Instant::now();
        let alg = HeckeAlgebra::from_datum(preset(group)?)?;
        let lambda: Coweight = lambda.parse()?;
        let cert = integrality_certificate(&alg, &lambda, &DEFAULT_SPECIALIZATIONS)?;
        println!("{group} λ = {lambda}, degree {}", cert.degree);
        println!("  {}", cert.polynomial());
        println!("  checks: {:?}", cert.checks);
        let qs: Vec<u64> = cert.q_specializations.iter().map(|s| s.q).collect();
        println!("  re-verified at q = {qs:?} in {:.2?}", start.elapsed());
    }
    Ok(())
}
