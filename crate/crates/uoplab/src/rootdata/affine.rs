//! The extended affine Weyl group `W̃ = Λ ⋊ W₀`.

use std::fmt;
use std::sync::Arc;

use super::datum::{pair, RootDatum};
use super::weyl::WeylGroup;
use crate::coeffs::Coweight;
use crate::error::{Error, Result};

/// The element `t_λ w`, acting on the apartment by `x ↦ λ + w x`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtAffWeylElt {
    pub lambda: Coweight,
    pub w: u32,
}

impl ExtAffWeylElt {
    pub fn new(lambda: Coweight, w: u32) -> Self {
        ExtAffWeylElt { lambda, w }
    }
}

impl fmt::Debug for ExtAffWeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | w{})", self.lambda, self.w)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    /// The simple reflection `s_i` of `W₀`.
    Finite(usize),
    /// The affine reflection `s₀ = t_{θ^∨} s_θ` of an irreducible component.
    Affine(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub elt: ExtAffWeylElt,
    pub kind: GeneratorKind,
}

/// `x = ω · g_{word[0]} ⋯ g_{word[k-1]}` with `ℓ(x) = k` and `ℓ(ω) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub omega: ExtAffWeylElt,
    pub word: Vec<usize>,
}

/// `W̃` for a root datum, with its simple affine reflections.
#[derive(Clone, Debug)]
pub struct ExtendedAffineWeyl {
    datum: Arc<RootDatum>,
    generators: Vec<Generator>,
}

impl ExtendedAffineWeyl {
    pub fn new(datum: Arc<RootDatum>) -> Result<Self> {
        let w = datum.weyl();
        let n = datum.rank();
        let mut generators: Vec<Generator> = (0..w.simple_count())
            .map(|i| Generator {
                elt: ExtAffWeylElt::new(Coweight::zero(n), w.simple(i)),
                kind: GeneratorKind::Finite(i),
            })
            .collect();
        for (c, comp) in datum.components().iter().enumerate() {
            let theta = &datum.positive_roots()[comp.highest_root];
            let theta_vee = &datum.positive_coroots()[comp.highest_root];
            let s_theta = w.reflection(theta, theta_vee).ok_or_else(|| {
                Error::InvalidDatum(format!("reflection in {theta} is not in the Weyl group"))
            })?;
            generators.push(Generator {
                elt: ExtAffWeylElt::new(theta_vee.clone(), s_theta),
                kind: GeneratorKind::Affine(c),
            });
        }
        let g = ExtendedAffineWeyl { datum, generators };
        for gen in &g.generators {
            if g.length(&gen.elt) != 1 {
                return Err(Error::InvalidDatum(format!(
                    "simple affine reflection {} does not have length 1",
                    g.render(&gen.elt)
                )));
            }
        }
        Ok(g)
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn datum_arc(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn weyl(&self) -> &WeylGroup {
        self.datum.weyl()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn identity(&self) -> ExtAffWeylElt {
        ExtAffWeylElt::new(Coweight::zero(self.rank()), 0)
    }

    pub fn translation(&self, lambda: &Coweight) -> ExtAffWeylElt {
        ExtAffWeylElt::new(lambda.clone(), 0)
    }

    pub fn finite(&self, w: u32) -> ExtAffWeylElt {
        ExtAffWeylElt::new(Coweight::zero(self.rank()), w)
    }

    /// `(λ, w)(μ, u) = (λ + w·μ, wu)`.
    pub fn mul(&self, x: &ExtAffWeylElt, y: &ExtAffWeylElt) -> ExtAffWeylElt {
        let wy = self.weyl().act(x.w, &y.lambda);
        ExtAffWeylElt::new(&x.lambda + &wy, self.weyl().mul(x.w, y.w))
    }

    pub fn inverse(&self, x: &ExtAffWeylElt) -> ExtAffWeylElt {
        let winv = self.weyl().inverse(x.w);
        let l = self.weyl().act(winv, &x.lambda);
        ExtAffWeylElt::new(-&l, winv)
    }

    /// Iwahori–Matsumoto length.
    pub fn length(&self, x: &ExtAffWeylElt) -> u32 {
        let mask = self.weyl().inv_neg_mask(x.w);
        let mut total: i64 = 0;
        for (j, a) in self.datum.positive_roots().iter().enumerate() {
            let p = pair(&x.lambda, a);
            total += if mask >> j & 1 == 1 {
                (p - 1).abs()
            } else {
                p.abs()
            };
        }
        total as u32
    }

    /// Right multiplication by the `g`-th simple affine reflection.
    pub fn mul_gen(&self, x: &ExtAffWeylElt, g: usize) -> ExtAffWeylElt {
        self.mul(x, &self.generators[g].elt)
    }

    /// Left multiplication by the `g`-th simple affine reflection.
    pub fn gen_mul(&self, g: usize, x: &ExtAffWeylElt) -> ExtAffWeylElt {
        self.mul(&self.generators[g].elt, x)
    }

    /// Greedy descent: strip simple affine reflections from the right until a
    /// length-zero element remains.
    pub fn decompose(&self, x: &ExtAffWeylElt) -> Decomposition {
        let mut cur = x.clone();
        let mut len = self.length(&cur);
        let mut rev = Vec::with_capacity(len as usize);
        while len > 0 {
            let (g, next) = (0..self.generators.len())
                .map(|g| (g, self.mul_gen(&cur, g)))
                .find(|(_, y)| self.length(y) < len)
                .expect("every element of positive length has a right descent");
            cur = next;
            rev.push(g);
            len -= 1;
        }
        rev.reverse();
        Decomposition {
            omega: cur,
            word: rev,
        }
    }

    /// All elements `(λ, w)` with `|λ_i| ≤ radius` and `ℓ ≤ max_len`.
    pub fn elements_in_box(&self, radius: i32, max_len: u32) -> Vec<ExtAffWeylElt> {
        let mut out = vec![];
        for lambda in coweight_box(self.rank(), radius) {
            for w in 0..self.weyl().order() as u32 {
                let x = ExtAffWeylElt::new(lambda.clone(), w);
                if self.length(&x) <= max_len {
                    out.push(x);
                }
            }
        }
        out
    }

    /// `(λ | w)` with `w` written as a reduced word.
    pub fn render(&self, x: &ExtAffWeylElt) -> String {
        let w = self
            .weyl()
            .elements()
            .get(x.w as usize)
            .map_or("e".to_string(), |e| e.to_string());
        format!("({} | {})", x.lambda, w)
    }
}

/// All coweights of rank `n` with coordinates in `[-radius, radius]`, lexicographic.
pub fn coweight_box(n: usize, radius: i32) -> Vec<Coweight> {
    let mut out = vec![Coweight::zero(0)];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * (2 * radius as usize + 1));
        for p in &out {
            for x in -radius..=radius {
                let mut v = p.clone();
                v.0.push(x);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Free-function form of [`ExtendedAffineWeyl::length`].
pub fn ext_length(g: &ExtendedAffineWeyl, x: &ExtAffWeylElt) -> u32 {
    g.length(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::presets::{preset, PRESET_NAMES};

    fn group(name: &str) -> ExtendedAffineWeyl {
        ExtendedAffineWeyl::new(Arc::new(preset(name).unwrap())).unwrap()
    }

    #[test]
    fn length_examples() {
        let g = group("gl2");
        assert_eq!(g.length(&g.translation(&Coweight::from([1, 0]))), 1);
        assert_eq!(g.length(&g.identity()), 0);
        let omega = ExtAffWeylElt::new(Coweight::from([1, 0]), g.weyl().simple(0));
        assert_eq!(g.length(&omega), 0);
        let g3 = group("gl3");
        assert_eq!(g3.length(&g3.translation(&Coweight::from([1, 0, 0]))), 2);
    }

    #[test]
    fn group_law_and_inverse() {
        for name in PRESET_NAMES {
            let g = group(name);
            for x in g.elements_in_box(1, 3) {
                let xi = g.inverse(&x);
                assert_eq!(g.mul(&x, &xi), g.identity());
                assert_eq!(g.length(&x), g.length(&xi), "{name} {x:?}");
            }
        }
    }

    #[test]
    fn generators_change_length_by_one() {
        for name in PRESET_NAMES {
            let g = group(name);
            for x in g.elements_in_box(2, 8) {
                let l = g.length(&x) as i64;
                for s in 0..g.generators().len() {
                    let d = g.length(&g.mul_gen(&x, s)) as i64 - l;
                    assert_eq!(d.abs(), 1, "{name} {x:?} gen {s}");
                }
            }
        }
    }

    #[test]
    fn decomposition_reassembles() {
        for name in PRESET_NAMES {
            let g = group(name);
            for x in g.elements_in_box(2, 6) {
                let d = g.decompose(&x);
                assert_eq!(g.length(&d.omega), 0);
                assert_eq!(d.word.len() as u32, g.length(&x));
                let back = d
                    .word
                    .iter()
                    .fold(d.omega.clone(), |acc, &s| g.mul_gen(&acc, s));
                assert_eq!(back, x);
            }
        }
    }

    #[test]
    fn gl2_length_zero_elements() {
        let g = group("gl2");
        let zeros: Vec<_> = g
            .elements_in_box(2, 0)
            .into_iter()
            .map(|x| g.render(&x))
            .collect();
        assert!(zeros.contains(&"([1,0] | s1)".to_string()));
        assert!(zeros.contains(&"([0,0] | e)".to_string()));
        assert!(zeros.contains(&"([1,1] | e)".to_string()));
    }
}
