//! Conductors for the inert, ramified and split configurations, and the trace
//! relation `Tr(z) = T(z') − z''` on conductor spheres.

use uoplab::tree::{conductor, trace_orbit, BaseConfig, TreeModel};

fn main() -> uoplab::Result<()> {
    let t = TreeModel::new(3, 7)?;
    for cfg in BaseConfig::ALL {
        let mut counts = vec![0usize; t.depth() as usize + 1];
        for v in t.vertices(t.depth()) {
            counts[conductor(cfg, &v) as usize] += 1;
        }
        println!("{cfg:<9} vertices per conductor: {counts:?}");
        let z = t.parse_vertex("2101")?;
        let orbit = trace_orbit(&t, cfg, &z)?;
        println!("  c({z}) = {}, Tr = {orbit}", conductor(cfg, &z));
    }
    match trace_orbit(&t, BaseConfig::Inert, &t.parse_vertex("2")?) {
        Ok(o) => println!("unexpected orbit {o}"),
        Err(e) => println!("conductor 1: {e}"),
    }
    Ok(())
}
