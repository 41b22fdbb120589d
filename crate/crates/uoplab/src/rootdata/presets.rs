//! Built-in root data.
//!
//! | name | lattice | roots |
//! |------|---------|-------|
//! | `gl2`, `gl3` | `Z^n` | `e_i − e_j` |
//! | `sl2` | coroot lattice `Z α^∨` | `α = 2` |
//! | `pgl2` | coweight lattice `Z ϖ^∨` | `α = 1`, `α^∨ = 2` |
//! | `sl3` | coroot lattice, basis `α₁^∨, α₂^∨` | characters in fundamental-weight coordinates |
//! | `sp4` | `Z^2` | `e1−e2, 2e2, e1+e2, 2e1` |

use super::datum::RootDatum;
use crate::coeffs::Coweight;
use crate::error::{Error, Result};

pub const PRESET_NAMES: [&str; 6] = ["gl2", "sl2", "pgl2", "gl3", "sl3", "sp4"];

fn vecs(v: &[&[i32]]) -> Vec<Coweight> {
    v.iter().map(|x| Coweight::from(*x)).collect()
}

fn gl(n: usize) -> Result<RootDatum> {
    let e = |i: usize, j: usize| {
        let mut v = vec![0; n];
        v[i] = 1;
        v[j] = -1;
        Coweight::from(v)
    };
    let simple: Vec<Coweight> = (0..n - 1).map(|i| e(i, i + 1)).collect();
    let mut pos = vec![];
    for len in 1..n {
        for i in 0..n - len {
            pos.push(e(i, i + len));
        }
    }
    RootDatum::new(format!("gl{n}"), n, simple, pos.clone(), pos)
}

/// Looks up a preset by name.
pub fn preset(name: &str) -> Result<RootDatum> {
    match name {
        "gl2" => gl(2),
        "gl3" => gl(3),
        "sl2" => RootDatum::new("sl2", 1, vecs(&[&[2]]), vecs(&[&[2]]), vecs(&[&[1]])),
        "pgl2" => RootDatum::new("pgl2", 1, vecs(&[&[1]]), vecs(&[&[1]]), vecs(&[&[2]])),
        "sl3" => RootDatum::new(
            "sl3",
            2,
            vecs(&[&[2, -1], &[-1, 2]]),
            vecs(&[&[2, -1], &[-1, 2], &[1, 1]]),
            vecs(&[&[1, 0], &[0, 1], &[1, 1]]),
        ),
        "sp4" => RootDatum::new(
            "sp4",
            2,
            vecs(&[&[1, -1], &[0, 2]]),
            vecs(&[&[1, -1], &[0, 2], &[1, 1], &[2, 0]]),
            vecs(&[&[1, -1], &[0, 1], &[1, 1], &[1, 0]]),
        ),
        other => Err(Error::ConfigError(format!(
            "unknown preset {other:?}; expected one of {}",
            PRESET_NAMES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_presets_validate() {
        for name in PRESET_NAMES {
            let d = preset(name).unwrap();
            assert_eq!(d.name(), name);
        }
        assert!(matches!(preset("e8"), Err(Error::ConfigError(_))));
    }

    #[test]
    fn two_rho_values() {
        assert_eq!(preset("gl2").unwrap().two_rho(), &Coweight::from([1, -1]));
        assert_eq!(
            preset("gl3").unwrap().two_rho(),
            &Coweight::from([2, 0, -2])
        );
        assert_eq!(preset("sp4").unwrap().two_rho(), &Coweight::from([4, 2]));
        assert_eq!(preset("sl3").unwrap().two_rho(), &Coweight::from([2, 2]));
    }

    #[test]
    fn highest_roots() {
        let d = preset("sp4").unwrap();
        let c = &d.components()[0];
        assert_eq!(d.positive_roots()[c.highest_root], Coweight::from([2, 0]));
        assert_eq!(d.positive_coroots()[c.highest_root], Coweight::from([1, 0]));
        let g = preset("gl3").unwrap();
        assert_eq!(
            g.positive_roots()[g.components()[0].highest_root],
            Coweight::from([1, 0, -1])
        );
    }

    #[test]
    fn antidominance() {
        let d = preset("gl2").unwrap();
        assert!(d.is_antidominant(&Coweight::from([1, 0])));
        assert!(!d.is_antidominant(&Coweight::from([0, 1])));
        assert!(d.is_antidominant(&Coweight::from([1, 1])));
    }
}
