//! Finite Weyl groups generated by simple reflections.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use super::datum::{pair, RootDatum};
use crate::coeffs::Coweight;
use crate::error::{Error, Result};

/// Default bound on the size of a finite Weyl group.
pub const DEFAULT_WEYL_BOUND: usize = 10_000;

/// Environment variable overriding [`DEFAULT_WEYL_BOUND`].
pub const WEYL_BOUND_ENV: &str = "UOPLAB_MAX_WEYL";

const TABLE_LIMIT: usize = 1024;

/// An element of the finite Weyl group, acting on coweights by an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteWeylElt {
    pub index: u32,
    /// Row-major `n x n` matrix acting on coweights (column vectors).
    pub action: Vec<i32>,
    /// Row-major matrix acting on characters, preserving the pairing.
    pub char_action: Vec<i32>,
    pub length: u32,
    /// A reduced word in the simple reflections (0-based positions), leftmost first.
    pub word: Vec<u8>,
}

impl FiniteWeylElt {
    pub fn render_matrix(&self, n: usize) -> String {
        let rows: Vec<String> = self
            .action
            .chunks(n)
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

impl fmt::Display for FiniteWeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        for s in &self.word {
            write!(f, "s{}", s + 1)?;
        }
        Ok(())
    }
}

/// The finite Weyl group `W₀` with multiplication and root-action tables.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    rank: usize,
    elements: Vec<FiniteWeylElt>,
    lookup: HashMap<Vec<i32>, u32>,
    inverse: Vec<u32>,
    table: Option<Vec<u32>>,
    simple: Vec<u32>,
    /// `inv_neg[w]` has bit `j` set iff `w⁻¹ α_j < 0`.
    inv_neg: Vec<u64>,
    longest: u32,
}

fn mat_mul(a: &[i32], b: &[i32], n: usize) -> Vec<i32> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik != 0 {
                for j in 0..n {
                    out[i * n + j] += aik * b[k * n + j];
                }
            }
        }
    }
    out
}

fn mat_vec(a: &[i32], x: &[i32], n: usize) -> Coweight {
    Coweight(
        (0..n)
            .map(|i| (0..n).map(|j| a[i * n + j] * x[j]).sum())
            .collect(),
    )
}

fn identity(n: usize) -> Vec<i32> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

/// Matrix of `x ↦ x − ⟨x, a⟩ b` on column vectors.
fn reflection_matrix(a: &[i32], b: &[i32], n: usize) -> Vec<i32> {
    let mut m = identity(n);
    for r in 0..n {
        for c in 0..n {
            m[r * n + c] -= b[r] * a[c];
        }
    }
    m
}

impl WeylGroup {
    /// The bound from `UOPLAB_MAX_WEYL`, or [`DEFAULT_WEYL_BOUND`].
    pub fn default_bound() -> usize {
        std::env::var(WEYL_BOUND_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_WEYL_BOUND)
    }

    pub(crate) fn trivial(rank: usize) -> Self {
        WeylGroup {
            rank,
            elements: vec![],
            lookup: HashMap::new(),
            inverse: vec![],
            table: None,
            simple: vec![],
            inv_neg: vec![],
            longest: 0,
        }
    }

    pub(crate) fn generate(d: &RootDatum, bound: usize) -> Result<Self> {
        let n = d.rank();
        let gens: Vec<(Vec<i32>, Vec<i32>)> = d
            .simple_roots()
            .zip(d.simple_coroots())
            .map(|(a, c)| (reflection_matrix(a, c, n), reflection_matrix(c, a, n)))
            .collect();
        let mut elements = vec![FiniteWeylElt {
            index: 0,
            action: identity(n),
            char_action: identity(n),
            length: 0,
            word: vec![],
        }];
        let mut lookup = HashMap::from([(identity(n), 0u32)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (k, (g, gc)) in gens.iter().enumerate() {
                let m = mat_mul(&elements[i].action, g, n);
                if lookup.contains_key(&m) {
                    continue;
                }
                if elements.len() >= bound {
                    return Err(Error::NotFiniteType { bound });
                }
                let idx = elements.len() as u32;
                let mut word = elements[i].word.clone();
                word.push(k as u8);
                let elt = FiniteWeylElt {
                    index: idx,
                    action: m.clone(),
                    char_action: mat_mul(&elements[i].char_action, gc, n),
                    length: elements[i].length + 1,
                    word,
                };
                lookup.insert(m, idx);
                elements.push(elt);
                queue.push_back(idx as usize);
            }
        }

        let order = elements.len();
        let simple: Vec<u32> = gens.iter().map(|(g, _)| lookup[g]).collect();
        let mut wg = WeylGroup {
            rank: n,
            elements,
            lookup,
            inverse: vec![0; order],
            table: None,
            simple,
            inv_neg: vec![0; order],
            longest: 0,
        };
        for i in 0..order {
            let inv = wg.elements[i]
                .word
                .iter()
                .rev()
                .fold(0u32, |acc, &s| wg.mul_slow(acc, wg.simple[s as usize]));
            wg.inverse[i] = inv;
        }
        if order <= TABLE_LIMIT {
            let mut t = vec![0u32; order * order];
            for a in 0..order {
                for b in 0..order {
                    t[a * order + b] = wg.mul_slow(a as u32, b as u32);
                }
            }
            wg.table = Some(t);
        }
        let roots = d.positive_roots();
        for w in 0..order {
            let winv = &wg.elements[wg.inverse[w] as usize];
            let mut mask = 0u64;
            for (j, r) in roots.iter().enumerate() {
                let img = mat_vec(&winv.char_action, r, n);
                if pair(&img, d.two_rho_vee()) < 0 {
                    mask |= 1 << j;
                }
            }
            if mask.count_ones() != wg.elements[w].length {
                return Err(Error::InvalidDatum(format!(
                    "Weyl element {} has inconsistent length",
                    wg.elements[w]
                )));
            }
            wg.inv_neg[w] = mask;
        }
        wg.longest = (0..order as u32)
            .max_by_key(|&w| wg.elements[w as usize].length)
            .unwrap_or(0);
        Ok(wg)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let m = mat_mul(
            &self.elements[a as usize].action,
            &self.elements[b as usize].action,
            self.rank,
        );
        self.lookup[&m]
    }

    pub fn order(&self) -> usize {
        self.elements.len().max(1)
    }

    pub fn elements(&self) -> &[FiniteWeylElt] {
        &self.elements
    }

    pub fn element(&self, w: u32) -> &FiniteWeylElt {
        &self.elements[w as usize]
    }

    pub fn identity(&self) -> u32 {
        0
    }

    /// Index of the `i`-th simple reflection.
    pub fn simple(&self, i: usize) -> u32 {
        self.simple[i]
    }

    pub fn simple_count(&self) -> usize {
        self.simple.len()
    }

    pub fn longest(&self) -> u32 {
        self.longest
    }

    pub fn length(&self, w: u32) -> u32 {
        self.elements.get(w as usize).map_or(0, |e| e.length)
    }

    pub fn inverse(&self, w: u32) -> u32 {
        self.inverse.get(w as usize).copied().unwrap_or(0)
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if self.elements.is_empty() {
            return 0;
        }
        match &self.table {
            Some(t) => t[a as usize * self.elements.len() + b as usize],
            None => self.mul_slow(a, b),
        }
    }

    /// Bitmask of positive roots `α_j` with `w⁻¹ α_j < 0`.
    pub fn inv_neg_mask(&self, w: u32) -> u64 {
        self.inv_neg.get(w as usize).copied().unwrap_or(0)
    }

    /// `w · λ` on coweights.
    pub fn act(&self, w: u32, lambda: &[i32]) -> Coweight {
        if self.elements.is_empty() {
            return Coweight::from(lambda);
        }
        mat_vec(&self.elements[w as usize].action, lambda, self.rank)
    }

    /// `w · β` on characters.
    pub fn act_char(&self, w: u32, beta: &[i32]) -> Coweight {
        if self.elements.is_empty() {
            return Coweight::from(beta);
        }
        mat_vec(&self.elements[w as usize].char_action, beta, self.rank)
    }

    /// Index of the element acting on coweights by `matrix`.
    pub fn find(&self, matrix: &[i32]) -> Option<u32> {
        if self.elements.is_empty() {
            return (matrix == identity(self.rank).as_slice()).then_some(0);
        }
        self.lookup.get(matrix).copied()
    }

    /// The reflection `x ↦ x − ⟨x, β⟩ β^∨`.
    pub fn reflection(&self, beta: &[i32], beta_vee: &[i32]) -> Option<u32> {
        self.find(&reflection_matrix(beta, beta_vee, self.rank))
    }

    /// Element from a word in simple reflections (0-based positions).
    pub fn from_word(&self, word: &[usize]) -> u32 {
        word.iter().fold(0, |acc, &s| self.mul(acc, self.simple[s]))
    }
}

/// The complete list of Weyl group elements of `d`.
pub fn weyl_group(d: &RootDatum) -> &[FiniteWeylElt] {
    d.weyl().elements()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::presets;

    #[test]
    fn orders() {
        for (name, order) in [
            ("gl2", 2),
            ("sl2", 2),
            ("pgl2", 2),
            ("gl3", 6),
            ("sl3", 6),
            ("sp4", 8),
        ] {
            let d = presets::preset(name).unwrap();
            assert_eq!(weyl_group(&d).len(), order, "{name}");
        }
    }

    #[test]
    fn closure_and_lengths() {
        let d = presets::preset("sp4").unwrap();
        let w = d.weyl();
        for a in 0..w.order() as u32 {
            assert_eq!(w.mul(a, w.inverse(a)), 0);
            for b in 0..w.order() as u32 {
                let ab = w.mul(a, b);
                assert!((ab as usize) < w.order());
            }
        }
        assert_eq!(w.length(w.longest()), 4);
        let lengths: Vec<u32> = w.elements().iter().map(|e| e.length).collect();
        assert_eq!(lengths.iter().filter(|&&l| l == 2).count(), 2);
    }

    #[test]
    fn bound_is_enforced() {
        let d = presets::preset("gl3").unwrap();
        let spec = d.to_spec();
        let conv = |v: &Vec<Vec<i32>>| v.iter().map(|x| Coweight::from(x.clone())).collect();
        let err = RootDatum::with_weyl_bound(
            "gl3",
            3,
            conv(&spec.simple_roots),
            conv(&spec.positive_roots),
            conv(&spec.positive_coroots),
            5,
        )
        .unwrap_err();
        assert_eq!(err, Error::NotFiniteType { bound: 5 });
    }
}
