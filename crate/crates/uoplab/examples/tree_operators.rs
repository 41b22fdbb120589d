//! The successor `u`, predecessor `v` and Hecke operator `T` on the truncated
//! tree, fiber operators from the retraction, and the filtration operators.

use uoplab::tree::{
    apply_u, apply_v, beta_filtration, fiber_operator_u, hecke_t, noncommuting_vertex, retraction,
    TreeModel, VertexSum,
};

fn main() -> uoplab::Result<()> {
    let t = TreeModel::new(2, 6)?;
    let o = VertexSum::delta(t.origin());
    let u = apply_u(&t, &o)?;
    println!("u(origin)   = {u}");
    println!("v(origin)   = {}", apply_v(&t, &o)?);
    println!("T(origin)   = {}", hecke_t(&t, &o)?);
    println!("v(u(origin)) = {}", apply_v(&t, &u)?);
    println!("u(v(origin)) = {}", apply_u(&t, &apply_v(&t, &o)?)?);
    if let Some(w) = noncommuting_vertex(&t)? {
        println!("T∘u ≠ u∘T at {w}");
    }

    let b = t.parse_vertex("21")?;
    for k in 1..=3 {
        let fiber = fiber_operator_u(&t, k, &VertexSum::delta(b.clone()))?;
        let beta = beta_filtration(&t, k, &b)?;
        println!(
            "𝒰_{k}([{b}]) has {} vertices, equal to β_{k}: {}",
            fiber.len(),
            fiber == beta
        );
    }
    for a in ["-", "0", "11", "010", "101"] {
        let v = t.parse_vertex(a)?;
        println!("retraction({v}) = {}", retraction(&v));
    }
    println!("JSON: {}", u.to_json());
    Ok(())
}
