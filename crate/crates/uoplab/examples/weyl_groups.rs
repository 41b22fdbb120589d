//! Finite and extended affine Weyl groups of the preset root data: orders,
//! simple affine reflections, lengths and greedy reduced decompositions.

use std::sync::Arc;

use uoplab::coeffs::Coweight;
use uoplab::rootdata::{antidominant_rep, preset, ExtendedAffineWeyl, PRESET_NAMES};

fn main() -> uoplab::Result<()> {
    for name in PRESET_NAMES {
        let d = preset(name)?;
        let g = ExtendedAffineWeyl::new(Arc::new(d.clone()))?;
        println!(
            "{name}: rank {}, |W₀| = {}, 2ρ = {}, {} simple affine reflections",
            d.rank(),
            d.weyl().order(),
            d.two_rho(),
            g.generators().len()
        );
    }

    let d = preset("gl3")?;
    let g = ExtendedAffineWeyl::new(Arc::new(d.clone()))?;
    println!("\ngl3 elements of W₀:");
    for e in d.weyl().elements() {
        println!(
            "  {:<8} length {}  matrix {}",
            e.to_string(),
            e.length,
            e.render_matrix(3)
        );
    }

    for lambda in ["2,0,-1", "0,0,1", "1,1,0"] {
        let lambda: Coweight = lambda.parse()?;
        let x = g.translation(&lambda);
        let dec = g.decompose(&x);
        println!(
            "t_{lambda}: length {}, ω = {}, word {:?}",
            g.length(&x),
            g.render(&dec.omega),
            dec.word
        );
        let (rep, w) = antidominant_rep(&d, &lambda);
        println!(
            "  antidominant representative {rep} (via {})",
            d.weyl().element(w)
        );
    }
    Ok(())
}
