//! Elements of the Iwahori–Hecke algebra in the `T`-basis.

use std::collections::hash_map::Entry;

use rustc_hash::FxHashMap;

use crate::coeffs::{Coefficient, LaurentPoly};
use crate::rootdata::{ExtAffWeylElt, ExtendedAffineWeyl};

/// `Σ c_x T_x`; the coefficient of `T_x` is the function value on `IxI`.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeElt<C = LaurentPoly> {
    terms: FxHashMap<ExtAffWeylElt, C>,
}

impl<C: Coefficient> Default for HeckeElt<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> HeckeElt<C> {
    pub fn zero() -> Self {
        HeckeElt {
            terms: FxHashMap::default(),
        }
    }

    pub fn with_capacity(n: usize) -> Self {
        let mut terms = FxHashMap::default();
        terms.reserve(n);
        HeckeElt { terms }
    }

    /// `T_x`.
    pub fn basis(x: ExtAffWeylElt) -> Self {
        Self::monomial(x, C::one())
    }

    pub fn monomial(x: ExtAffWeylElt, c: C) -> Self {
        let mut out = Self::zero();
        out.add_term(x, c);
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

    pub fn terms(&self) -> impl Iterator<Item = (&ExtAffWeylElt, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (ExtAffWeylElt, C)> {
        self.terms.into_iter()
    }

    /// Terms in a deterministic order (lexicographic on `(λ, w)`).
    pub fn sorted_terms(&self) -> Vec<(&ExtAffWeylElt, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn coeff(&self, x: &ExtAffWeylElt) -> C {
        self.terms.get(x).cloned().unwrap_or_else(C::zero)
    }

    pub fn get(&self, x: &ExtAffWeylElt) -> Option<&C> {
        self.terms.get(x)
    }

    pub fn add_term(&mut self, x: ExtAffWeylElt, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(x) {
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
        for (x, d) in &other.terms {
            self.add_term(x.clone(), d.mul_ref(c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (x, d) in &other.terms {
            out.add_term(x.clone(), d.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (x, d) in &other.terms {
            out.add_term(x.clone(), d.neg_ref());
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::with_capacity(self.len());
        for (x, d) in &self.terms {
            out.add_term(x.clone(), d.mul_ref(c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        HeckeElt {
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (x.clone(), c.neg_ref()))
                .collect(),
        }
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs<D: Coefficient, E>(
        &self,
        mut f: impl FnMut(&C) -> Result<D, E>,
    ) -> Result<HeckeElt<D>, E> {
        let mut out = HeckeElt::with_capacity(self.len());
        for (x, c) in &self.terms {
            out.add_term(x.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Human-readable rendering, e.g. `1*v^0 T([1,0] | e) + ...`.
    pub fn render(&self, g: &ExtendedAffineWeyl) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.sorted_terms()
            .into_iter()
            .map(|(x, c)| format!("({c}) T{}", g.render(x)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<C: Coefficient> FromIterator<(ExtAffWeylElt, C)> for HeckeElt<C> {
    fn from_iter<I: IntoIterator<Item = (ExtAffWeylElt, C)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (x, c) in iter {
            out.add_term(x, c);
        }
        out
    }
}
