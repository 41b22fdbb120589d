//! Conductors relative to the three torus fixed-point geometries and the
//! trace relation `Tr(z) = T(z') − z''`.

use std::fmt;
use std::str::FromStr;

use super::model::{TreeModel, TreeVertex, VertexSum};
use super::operators::{hecke_t, neighbors};
use crate::error::{Error, Result};

/// Fixed-point set of the torus: a vertex, an edge or a whole apartment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseConfig {
    /// The origin.
    Inert,
    /// The marked alcove `{origin, 0}`.
    Ramified,
    /// The marked apartment.
    Split,
}

impl BaseConfig {
    pub const ALL: [BaseConfig; 3] = [BaseConfig::Inert, BaseConfig::Ramified, BaseConfig::Split];
}

impl fmt::Display for BaseConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaseConfig::Inert => "inert",
            BaseConfig::Ramified => "ramified",
            BaseConfig::Split => "split",
        })
    }
}

impl FromStr for BaseConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inert" => Ok(BaseConfig::Inert),
            "ramified" => Ok(BaseConfig::Ramified),
            "split" => Ok(BaseConfig::Split),
            other => Err(Error::ConfigError(format!(
                "unknown base configuration {other:?}"
            ))),
        }
    }
}

/// Distance from `v` to the base set of `cfg`.
pub fn conductor(cfg: BaseConfig, v: &TreeVertex) -> u32 {
    let n = v.len() as u32;
    match cfg {
        BaseConfig::Inert => n,
        BaseConfig::Ramified => match v.digits().first() {
            Some(0) => n - 1,
            _ => n,
        },
        BaseConfig::Split => {
            let on_a = (0..=v.len())
                .rev()
                .find(|&k| TreeVertex(v.0[..k].into()).on_apartment())
                .unwrap_or(0);
            n - on_a as u32
        }
    }
}

/// The neighbours of `v` one step further from the base set.
pub fn base_successor(t: &TreeModel, cfg: BaseConfig, v: &TreeVertex) -> Result<VertexSum> {
    let c = conductor(cfg, v);
    Ok(neighbors(t, v)?
        .into_iter()
        .filter(|w| conductor(cfg, w) == c + 1)
        .collect())
}

/// The Galois orbit of a vertex of conductor `n ≥ 2`, computed as the
/// conductor-`n` neighbours of its conductor-`(n−1)` neighbour `z'`, and checked
/// against `T(z') − z''`.
pub fn trace_orbit(t: &TreeModel, cfg: BaseConfig, z: &TreeVertex) -> Result<VertexSum> {
    let n = conductor(cfg, z);
    if n < 2 {
        return Err(Error::ConductorTooSmall(n));
    }
    let unique = |v: &TreeVertex, c: u32| -> Result<TreeVertex> {
        let found: Vec<TreeVertex> = neighbors(t, v)?
            .into_iter()
            .filter(|w| conductor(cfg, w) == c)
            .collect();
        match found.as_slice() {
            [w] => Ok(w.clone()),
            _ => Err(Error::CheckFailure {
                layer: "trace".into(),
                detail: format!("{v} has {} neighbours of conductor {c}", found.len()),
            }),
        }
    };
    let z1 = unique(z, n - 1)?;
    let z2 = unique(&z1, n - 2)?;
    let orbit = base_successor(t, cfg, &z1)?;
    let expected = hecke_t(t, &VertexSum::delta(z1.clone()))?.sub(&VertexSum::delta(z2));
    if orbit != expected || orbit.coeff(z) != 1 {
        return Err(Error::CheckFailure {
            layer: "trace".into(),
            detail: format!("Tr({z}) = {orbit} but T(z') − z'' = {expected}"),
        });
    }
    Ok(orbit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> TreeVertex {
        s.parse().unwrap()
    }

    #[test]
    fn conductor_values() {
        assert_eq!(conductor(BaseConfig::Inert, &v("-")), 0);
        for a in ["-", "0", "000", "1", "10"] {
            assert_eq!(conductor(BaseConfig::Split, &v(a)), 0);
        }
        assert_eq!(conductor(BaseConfig::Split, &v("0010")), 2);
        assert_eq!(conductor(BaseConfig::Split, &v("21")), 2);
        assert_eq!(conductor(BaseConfig::Ramified, &v("01")), 1);
        assert_eq!(conductor(BaseConfig::Ramified, &v("21")), 2);
    }

    #[test]
    fn inert_sphere_sizes() {
        let t = TreeModel::new(3, 5).unwrap();
        for n in 1..=5u32 {
            let count = t
                .vertices(5)
                .iter()
                .filter(|w| conductor(BaseConfig::Inert, w) == n)
                .count();
            assert_eq!(count as u32, 4 * 3u32.pow(n - 1));
        }
    }

    #[test]
    fn trace_examples() {
        let t = TreeModel::new(2, 6).unwrap();
        let tr = trace_orbit(&t, BaseConfig::Inert, &v("21")).unwrap();
        assert_eq!(tr.len(), 2);
        let tr = trace_orbit(&t, BaseConfig::Split, &v("21")).unwrap();
        assert_eq!(tr.len(), 2);
        assert!(matches!(
            trace_orbit(&t, BaseConfig::Inert, &v("2")),
            Err(Error::ConductorTooSmall(1))
        ));
    }
}
