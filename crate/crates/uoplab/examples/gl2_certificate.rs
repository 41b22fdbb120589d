//! The `GL2` relation `u² − T∘u + q·S = 0`, produced as an integrality
//! certificate and then checked directly on the tree.

use uoplab::cli::checks::gl2_tree_bridge;
use uoplab::coeffs::Coweight;
use uoplab::hecke::HeckeAlgebra;
use uoplab::rootdata::preset;
use uoplab::tree::TreeModel;
use uoplab::uops::{integrality_certificate, orbit_char_poly, UOperator, DEFAULT_SPECIALIZATIONS};

fn main() -> uoplab::Result<()> {
    let d = preset("gl2")?;
    let lambda: Coweight = "1,0".parse()?;
    println!("u = {}", UOperator::basis(&d, lambda.clone())?);
    for (k, c) in orbit_char_poly(&d, &lambda)?.iter().enumerate() {
        println!("  coefficient of X^{k}: {c}");
    }

    let alg = HeckeAlgebra::from_datum(d)?;
    let cert = integrality_certificate(&alg, &lambda, &DEFAULT_SPECIALIZATIONS)?;
    println!("certificate: {}", cert.polynomial());
    println!("checks: {:?}", cert.checks);

    for q in [2, 3, 5] {
        let t = TreeModel::new(q, 7)?;
        let outcome = gl2_tree_bridge(&cert, &t)?;
        println!(
            "q = {q}: {} ({})",
            if outcome.passed { "holds" } else { "fails" },
            outcome.detail
        );
    }
    println!("\n{}", cert.to_json());
    Ok(())
}
