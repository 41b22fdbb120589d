//! Hecke, successor and predecessor operators, the retraction onto the marked
//! apartment and the fiber and filtration operators built from it.

use super::model::{TreeModel, TreeVertex, VertexSum};
use crate::error::{Error, Result};

/// The `q + 1` neighbours of `v`.
pub fn neighbors(t: &TreeModel, v: &TreeVertex) -> Result<Vec<TreeVertex>> {
    if v.len() >= t.depth() as usize {
        return Err(Error::BoundaryClipped(v.address()));
    }
    let top = if v.is_origin() { t.q() } else { t.q() - 1 };
    let mut out: Vec<TreeVertex> = v.parent().into_iter().collect();
    out.extend((0..=top).map(|d| v.child(d as u8)));
    Ok(out)
}

/// `T(Σ c_v v) = Σ c_v Σ_{w ~ v} w`.
pub fn hecke_t(t: &TreeModel, x: &VertexSum) -> Result<VertexSum> {
    x.map_linear(|v| Ok(neighbors(t, v)?.into_iter().collect()))
}

/// The `q` neighbours one horocycle level further from the marked end.
pub fn successor_u(t: &TreeModel, v: &TreeVertex) -> Result<VertexSum> {
    let h = v.level();
    Ok(neighbors(t, v)?
        .into_iter()
        .filter(|w| w.level() == h + 1)
        .collect())
}

fn predecessor_raw(v: &TreeVertex) -> TreeVertex {
    if v.zero_prefix() == v.len() {
        v.child(0)
    } else {
        v.parent().expect("non-origin vertex")
    }
}

/// The unique neighbour one level closer to the marked end.
pub fn predecessor_v(t: &TreeModel, v: &TreeVertex) -> Result<TreeVertex> {
    let p = predecessor_raw(v);
    if p.len() > t.depth() as usize {
        return Err(Error::BoundaryClipped(v.address()));
    }
    Ok(p)
}

/// `u` extended linearly.
pub fn apply_u(t: &TreeModel, x: &VertexSum) -> Result<VertexSum> {
    x.map_linear(|v| successor_u(t, v))
}

/// `v` extended linearly.
pub fn apply_v(t: &TreeModel, x: &VertexSum) -> Result<VertexSum> {
    x.map_linear(|v| Ok(VertexSum::delta(predecessor_v(t, v)?)))
}

/// Retraction onto the marked apartment centred at the alcove `{origin, 0}`.
pub fn retraction(v: &TreeVertex) -> TreeVertex {
    let n = v.len();
    let mut out = TreeVertex::origin();
    match v.digits().first() {
        None => {}
        Some(0) => {
            for _ in 0..n {
                out = out.child(0);
            }
        }
        Some(_) => {
            out = out.child(1);
            for _ in 1..n {
                out = out.child(0);
            }
        }
    }
    out
}

/// Vertices at distance exactly `k` from `b` reached without passing through `avoid`.
fn sphere_avoiding(
    t: &TreeModel,
    b: &TreeVertex,
    k: u32,
    avoid: Option<&TreeVertex>,
) -> Result<Vec<TreeVertex>> {
    let mut frontier: Vec<(TreeVertex, Option<TreeVertex>)> = vec![(b.clone(), avoid.cloned())];
    for _ in 0..k {
        let mut next = Vec::with_capacity(frontier.len() * t.q() as usize);
        for (c, prev) in &frontier {
            for n in neighbors(t, c)? {
                if Some(&n) != prev.as_ref() {
                    next.push((n, Some(c.clone())));
                }
            }
        }
        frontier = next;
    }
    Ok(frontier.into_iter().map(|(v, _)| v).collect())
}

/// `𝒰_k`: the fiber, over the point `k` steps out along the apartment, of the
/// retraction centred at the alcove `{b, v(b)}`, summed over `x`.
pub fn fiber_operator_u(t: &TreeModel, k: u32, x: &VertexSum) -> Result<VertexSum> {
    x.map_linear(|b| {
        let back = predecessor_v(t, b)?;
        Ok(sphere_avoiding(t, b, k, Some(&back))?.into_iter().collect())
    })
}

/// `β_k(b)`: all vertices whose ray toward the marked end passes through `b`
/// after exactly `k` steps.
pub fn beta_filtration(t: &TreeModel, k: u32, b: &TreeVertex) -> Result<VertexSum> {
    Ok(sphere_avoiding(t, b, k, None)?
        .into_iter()
        .filter(|a| {
            let mut cur = a.clone();
            for _ in 0..k {
                cur = predecessor_raw(&cur);
            }
            cur == *b
        })
        .collect())
}

/// The sphere operator: `v ↦` the sum of vertices at distance exactly `k`.
pub fn sphere(t: &TreeModel, k: u32, x: &VertexSum) -> Result<VertexSum> {
    x.map_linear(|b| Ok(sphere_avoiding(t, b, k, None)?.into_iter().collect()))
}

/// A vertex `w` with `T(u(w)) ≠ u(T(w))`, searched among vertices at least two
/// steps from the boundary.
pub fn noncommuting_vertex(t: &TreeModel) -> Result<Option<TreeVertex>> {
    for w in t.interior(2) {
        let d = VertexSum::delta(w.clone());
        if hecke_t(t, &apply_u(t, &d)?)? != apply_u(t, &hecke_t(t, &d)?)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Whether `T ∘ u ≠ u ∘ T` is witnessed and `u² − T∘u + q = 0` holds on every
/// vertex at least two steps from the boundary.
pub fn noncommutativity_witness(t: &TreeModel) -> Result<bool> {
    if t.depth() < 4 {
        return Err(Error::ConfigError(
            "the witness search needs depth at least 4".into(),
        ));
    }
    if noncommuting_vertex(t)?.is_none() {
        return Ok(false);
    }
    let q = t.q() as i64;
    for w in t.interior(2) {
        let d = VertexSum::delta(w);
        let u = apply_u(t, &d)?;
        let lhs = apply_u(t, &u)?.sub(&hecke_t(t, &u)?).add(&d.scale(q));
        if !lhs.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> TreeVertex {
        s.parse().unwrap()
    }

    #[test]
    fn neighbour_counts() {
        let t = TreeModel::new(2, 4).unwrap();
        assert_eq!(neighbors(&t, &t.origin()).unwrap().len(), 3);
        let t3 = TreeModel::new(3, 4).unwrap();
        let n = neighbors(&t3, &v("0")).unwrap();
        assert_eq!(n.len(), 4);
        assert!(n.contains(&t3.origin()));
        assert!(matches!(
            neighbors(&t, &v("0000")),
            Err(Error::BoundaryClipped(_))
        ));
    }

    #[test]
    fn hecke_operator() {
        let t = TreeModel::new(2, 5).unwrap();
        let o = VertexSum::delta(t.origin());
        let t1 = hecke_t(&t, &o).unwrap();
        assert_eq!(t1.len(), 3);
        assert!(t1.terms().all(|(_, c)| c == 1));
        assert_eq!(hecke_t(&t, &t1).unwrap().coeff(&t.origin()), 3);
        assert_eq!(hecke_t(&t, &o.scale(2)).unwrap(), t1.scale(2));
    }

    #[test]
    fn successor_and_predecessor() {
        let t = TreeModel::new(2, 5).unwrap();
        let u = successor_u(&t, &t.origin()).unwrap();
        assert_eq!(u, [v("1"), v("2")].into_iter().collect());
        assert_eq!(predecessor_v(&t, &t.origin()).unwrap(), v("0"));
        assert_eq!(predecessor_v(&t, &v("01")).unwrap(), v("0"));
        assert_eq!(
            successor_u(&t, &v("00")).unwrap(),
            [v("0"), v("001")].into_iter().collect()
        );
    }

    #[test]
    fn retraction_examples() {
        assert_eq!(retraction(&v("2")), v("1"));
        for a in ["-", "0", "00", "1", "100"] {
            assert_eq!(retraction(&v(a)), v(a));
        }
        assert_eq!(retraction(&v("011")), v("000"));
        assert_eq!(retraction(&v("210")), v("100"));
    }

    #[test]
    fn fibers_match_successor_iterates() {
        let t = TreeModel::new(2, 6).unwrap();
        let o = VertexSum::delta(t.origin());
        assert_eq!(
            fiber_operator_u(&t, 1, &o).unwrap(),
            apply_u(&t, &o).unwrap()
        );
        let f3 = fiber_operator_u(&t, 3, &o).unwrap();
        assert_eq!(f3.len(), 8);
        let target = v("100");
        let fiber: VertexSum = t
            .vertices(3)
            .into_iter()
            .filter(|a| retraction(a) == target)
            .collect();
        assert_eq!(f3, fiber);
        assert_eq!(beta_filtration(&t, 1, &v("0")).unwrap().len(), 2);
    }

    #[test]
    fn noncommutativity() {
        let t = TreeModel::new(2, 6).unwrap();
        assert_eq!(noncommuting_vertex(&t).unwrap(), Some(t.origin()));
        assert!(noncommutativity_witness(&t).unwrap());
        assert!(noncommutativity_witness(&TreeModel::new(2, 3).unwrap()).is_err());
    }
}
