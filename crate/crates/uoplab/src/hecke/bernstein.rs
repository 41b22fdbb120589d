//! The Bernstein presentation `h = Σ c_{m,w} θ_m T_w`.
//!
//! Forms are built by letting `T_x` act on the left of `θ_0 T_e`, one simple
//! affine reflection at a time. Finite reflections pass through `θ_m` by the
//! Bernstein–Lusztig relation; affine reflections and length-zero elements are
//! rewritten as `θ_λ T_u⁻¹` with `λ` antidominant and `u` finite.

use std::collections::hash_map::Entry;
use std::sync::{Arc, Mutex};

use rustc_hash::FxHashMap;

use super::algebra::HeckeAlgebra;
use super::elt::HeckeElt;
use crate::coeffs::{Coefficient, Coweight, Scalars};
use crate::error::{Error, Result};
use crate::rootdata::{pair, ExtAffWeylElt, ExtendedAffineWeyl};

/// `Σ c_{m,w} θ_m T_w`, keyed by `(m, w)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BernsteinForm<C> {
    terms: FxHashMap<(Coweight, u32), C>,
}

impl<C: Coefficient> Default for BernsteinForm<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> BernsteinForm<C> {
    pub fn zero() -> Self {
        BernsteinForm {
            terms: FxHashMap::default(),
        }
    }

    /// `c θ_m T_w`.
    pub fn monomial(m: Coweight, w: u32, c: C) -> Self {
        let mut out = Self::zero();
        out.add_term(m, w, c);
        out
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Coweight, u32, &C)> {
        self.terms.iter().map(|((m, w), c)| (m, *w, c))
    }

    pub fn sorted_terms(&self) -> Vec<(&Coweight, u32, &C)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        v
    }

    pub fn coeff(&self, m: &Coweight, w: u32) -> C {
        self.terms
            .get(&(m.clone(), w))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, m: Coweight, w: u32, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((m, w)) {
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        for ((m, w), d) in &other.terms {
            self.add_term(m.clone(), *w, d.mul_ref(c));
        }
    }

    pub fn render(&self, g: &ExtendedAffineWeyl) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.sorted_terms()
            .into_iter()
            .map(|(m, w, c)| format!("({c}) θ{m} T{}", g.render(&g.finite(w))))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Per-algebra caches of `BF(T_x)` and of its image in the polynomial module.
pub(crate) struct BernsteinCaches<C> {
    forms: Mutex<FxHashMap<ExtAffWeylElt, Arc<BernsteinForm<C>>>>,
    collapsed: Mutex<FxHashMap<ExtAffWeylElt, Arc<BernsteinForm<C>>>>,
}

impl<C> Default for BernsteinCaches<C> {
    fn default() -> Self {
        BernsteinCaches {
            forms: Mutex::default(),
            collapsed: Mutex::default(),
        }
    }
}

fn q_pow<S: Scalars>(s: &S, k: i64) -> S::C {
    let mut out = S::C::one();
    for _ in 0..k.unsigned_abs() {
        out = if k > 0 {
            s.mul_q(&out)
        } else {
            s.mul_q_inv(&out)
        };
    }
    out
}

impl<S: Scalars> HeckeAlgebra<S> {
    /// `T_{s_i} θ_m = Σ c θ_k T_{s_i}^ε` as triples `(k, c, ε)`.
    pub fn bernstein_lusztig(&self, i: usize, m: &Coweight) -> Vec<(Coweight, S::C, bool)> {
        let d = self.datum();
        let idx = d.simple_indices()[i];
        let alpha = &d.positive_roots()[idx];
        let alpha_vee = &d.positive_coroots()[idx];
        let k = pair(m, alpha);
        let s = self.scalars();
        let sm = m - &alpha_vee.scaled(k as i32);
        let mut out = vec![(sm, q_pow(s, k), true)];
        if k > 0 {
            for j in 0..k {
                let c = s.mul_q_minus_one(&q_pow(s, j));
                out.push((m - &alpha_vee.scaled(j as i32), c, false));
            }
        } else if k < 0 {
            for j in 1..=-k {
                let c = s.mul_q_minus_one(&q_pow(s, -j)).neg_ref();
                out.push((m + &alpha_vee.scaled(j as i32), c, false));
            }
        }
        out
    }

    /// `T_{s_i} · f`. In collapsed forms `T_w` acts as `q^{ℓ(w)}`.
    fn left_finite(
        &self,
        i: usize,
        f: &BernsteinForm<S::C>,
        collapse: bool,
    ) -> BernsteinForm<S::C> {
        let weyl = self.group().weyl();
        let s = weyl.simple(i);
        let sc = self.scalars();
        let mut out = BernsteinForm::zero();
        for (m, w, c) in f.terms() {
            for (k, b, with_s) in self.bernstein_lusztig(i, m) {
                let c = b.mul_ref(c);
                if !with_s {
                    out.add_term(k, w, c);
                } else if collapse {
                    out.add_term(k, w, sc.mul_q(&c));
                } else {
                    let sw = weyl.mul(s, w);
                    if weyl.length(sw) > weyl.length(w) {
                        out.add_term(k, sw, c);
                    } else {
                        out.add_term(k.clone(), sw, sc.mul_q(&c));
                        out.add_term(k, w, sc.mul_q_minus_one(&c));
                    }
                }
            }
        }
        out
    }

    /// `T_{s_i}⁻¹ · f = q⁻¹ T_{s_i} f + (q⁻¹ − 1) f`.
    fn left_finite_inv(
        &self,
        i: usize,
        f: &BernsteinForm<S::C>,
        collapse: bool,
    ) -> BernsteinForm<S::C> {
        let sc = self.scalars();
        let mut out = BernsteinForm::zero();
        out.add_scaled(
            &self.left_finite(i, f, collapse),
            &sc.mul_q_inv(&S::C::one()),
        );
        out.add_scaled(f, &sc.mul_q_inv_minus_one(&S::C::one()));
        out
    }

    /// Writes `T_x = θ_λ T_{u⁻¹}⁻¹` for `x = (λ, u)`, returning `λ` and a reduced
    /// word of `u⁻¹`. Valid when `λ` is antidominant and `ℓ(t_λ) = ℓ(x) + ℓ(u⁻¹)`.
    fn translation_factor(&self, x: &ExtAffWeylElt) -> Result<(Coweight, Vec<usize>)> {
        let g = self.group();
        let uinv = g.weyl().inverse(x.w);
        let lt = g.length(&g.translation(&x.lambda));
        if !self.datum().is_antidominant(&x.lambda) || lt != g.length(x) + g.weyl().length(uinv) {
            return Err(Error::SolveFailure(format!(
                "{} is not a translation times a finite inverse",
                g.render(x)
            )));
        }
        let word = if !g.weyl().elements().is_empty() {
            g.weyl()
                .element(uinv)
                .word
                .iter()
                .map(|&s| s as usize)
                .collect()
        } else {
            vec![]
        };
        Ok((x.lambda.clone(), word))
    }

    /// `T_x · f` for `x` of length zero or a simple affine reflection.
    fn left_factor(
        &self,
        x: &ExtAffWeylElt,
        f: &BernsteinForm<S::C>,
        collapse: bool,
    ) -> Result<BernsteinForm<S::C>> {
        if x.lambda.is_zero() {
            if x.w == 0 {
                return Ok(f.clone());
            }
            let weyl = self.group().weyl();
            if let Some(i) = (0..weyl.simple_count()).find(|&i| weyl.simple(i) == x.w) {
                return Ok(self.left_finite(i, f, collapse));
            }
        }
        let (lambda, word) = self.translation_factor(x)?;
        let mut cur = f.clone();
        for &i in &word {
            cur = self.left_finite_inv(i, &cur, collapse);
        }
        let mut out = BernsteinForm::zero();
        for (m, w, c) in cur.terms() {
            out.add_term(&lambda + m, w, c.clone());
        }
        Ok(out)
    }

    fn form_of(&self, x: &ExtAffWeylElt, collapse: bool) -> Result<Arc<BernsteinForm<S::C>>> {
        let cache = if collapse {
            &self.bernstein.collapsed
        } else {
            &self.bernstein.forms
        };
        let g = self.group();
        let mut path = vec![];
        let mut cur = x.clone();
        let mut base = loop {
            if let Some(f) = cache.lock().unwrap().get(&cur) {
                break f.clone();
            }
            let len = g.length(&cur);
            if len == 0 {
                let unit = BernsteinForm::monomial(Coweight::zero(g.rank()), 0, S::C::one());
                let f = Arc::new(self.left_factor(&cur, &unit, collapse)?);
                cache.lock().unwrap().insert(cur.clone(), f.clone());
                break f;
            }
            let (gen, next) = (0..g.generators().len())
                .map(|k| (k, g.gen_mul(k, &cur)))
                .find(|(_, y)| g.length(y) < len)
                .expect("every element of positive length has a left descent");
            path.push((gen, cur));
            cur = next;
        };
        while let Some((gen, y)) = path.pop() {
            let elt = g.generators()[gen].elt.clone();
            let f = Arc::new(self.left_factor(&elt, &base, collapse)?);
            cache.lock().unwrap().insert(y, f.clone());
            base = f;
        }
        Ok(base)
    }

    /// `BF(T_x)` (cached).
    pub fn bernstein_of_basis(&self, x: &ExtAffWeylElt) -> Result<Arc<BernsteinForm<S::C>>> {
        self.form_of(x, false)
    }

    /// The image of `T_x` under `θ_m T_w ↦ q^{ℓ(w)} e_m` (cached).
    pub fn satake_functional(&self, x: &ExtAffWeylElt) -> Result<Arc<BernsteinForm<S::C>>> {
        self.form_of(x, true)
    }

    /// The unique expansion `h = Σ c_{m,w} θ_m T_w`.
    pub fn bernstein_form(&self, h: &HeckeElt<S::C>) -> Result<BernsteinForm<S::C>> {
        let mut out = BernsteinForm::zero();
        for (x, c) in h.terms() {
            out.add_scaled(&*self.bernstein_of_basis(x)?, c);
        }
        Ok(out)
    }

    /// Expands every `θ_m T_w` back into the `T`-basis.
    pub fn expand(&self, f: &BernsteinForm<S::C>) -> Result<HeckeElt<S::C>> {
        let mut out = HeckeElt::zero();
        for (m, w, c) in f.terms() {
            out.add_scaled(&*self.theta_finite(m, w)?, c);
        }
        Ok(out)
    }
}

/// Free-function form of [`HeckeAlgebra::bernstein_form`].
pub fn bernstein_form<S: Scalars>(
    alg: &HeckeAlgebra<S>,
    h: &HeckeElt<S::C>,
) -> Result<BernsteinForm<S::C>> {
    alg.bernstein_form(h)
}
