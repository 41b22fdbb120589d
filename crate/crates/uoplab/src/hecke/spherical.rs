//! The spherical subalgebra `H_K`, the projection to `I\G/K` and the Satake transform.

use std::collections::BTreeMap;
use std::fmt;

use super::algebra::HeckeAlgebra;
use super::elt::HeckeElt;
use crate::coeffs::{Coefficient, Coweight, GroupAlgElt, LaurentPoly, LaurentScalars, Scalars};
use crate::error::{Error, Result};
use crate::rootdata::{antidominant_rep, is_dot_invariant, orbit, ExtAffWeylElt};

/// A finitely supported function on `I\G/K ≅ Λ`.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaFunction<C = LaurentPoly> {
    terms: BTreeMap<Coweight, C>,
}

impl<C: Coefficient> LambdaFunction<C> {
    pub fn zero() -> Self {
        LambdaFunction {
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Coweight, &C)> {
        self.terms.iter()
    }

    pub fn value(&self, lambda: &Coweight) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, lambda: Coweight, c: &C) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(lambda.clone()).or_insert_with(C::zero);
        e.add_assign_ref(c);
        if e.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    /// Canonical rendering `{coweight: value}` used in certificate files.
    pub fn rendered(&self) -> BTreeMap<String, String> {
        self.terms
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect()
    }
}

impl<C: Coefficient> FromIterator<(Coweight, C)> for LambdaFunction<C> {
    fn from_iter<I: IntoIterator<Item = (Coweight, C)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, &c);
        }
        out
    }
}

impl<C: Coefficient> fmt::Display for LambdaFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, v)| format!("{k} ↦ {v}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `Σ c_λ sph(λ)` over antidominant `λ`, sorted by coweight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphericalCombination {
    pub terms: Vec<(Coweight, LaurentPoly)>,
}

impl SphericalCombination {
    pub fn single(lambda: Coweight, c: LaurentPoly) -> Self {
        SphericalCombination {
            terms: vec![(lambda, c)],
        }
    }

    pub fn weight(&self, lambda: &Coweight) -> LaurentPoly {
        self.terms
            .iter()
            .find(|(k, _)| k == lambda)
            .map_or_else(LaurentPoly::zero, |(_, c)| c.clone())
    }

    pub fn to_hecke<S: Scalars>(&self, alg: &HeckeAlgebra<S>) -> Result<HeckeElt<S::C>> {
        let mut out = HeckeElt::zero();
        for (lambda, c) in &self.terms {
            let c = alg.scalars().convert(c)?;
            out.add_scaled(&alg.spherical_elt(lambda)?, &c);
        }
        Ok(out)
    }
}

impl fmt::Display for SphericalCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                if c.len() > 1 {
                    format!("({c}) sph{k}")
                } else {
                    format!("{c} sph{k}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<S: Scalars> HeckeAlgebra<S> {
    /// `1_{K t_λ K} = Σ_{x ∈ W₀ t_λ W₀} T_x`.
    pub fn spherical_elt(&self, lambda: &Coweight) -> Result<HeckeElt<S::C>> {
        self.datum().check_rank(lambda)?;
        if !self.datum().is_antidominant(lambda) {
            return Err(Error::NotAntidominant(lambda.to_string()));
        }
        let order = self.group().weyl().order() as u32;
        let mut out = HeckeElt::with_capacity(order as usize * order as usize);
        for mu in orbit(self.datum(), lambda) {
            for w in 0..order {
                out.add_term(ExtAffWeylElt::new(mu.clone(), w), S::C::one());
            }
        }
        Ok(out)
    }

    /// Whether the coefficients are invariant under left and right
    /// multiplication of the index by every finite simple reflection.
    pub fn is_spherical(&self, h: &HeckeElt<S::C>) -> bool {
        let g = self.group();
        let weyl = g.weyl();
        h.terms().all(|(x, c)| {
            (0..weyl.simple_count()).all(|i| {
                let s = g.finite(weyl.simple(i));
                h.coeff(&g.mul(&s, x)) == *c && h.coeff(&g.mul(x, &s)) == *c
            })
        })
    }

    /// The product of `H_K`, whose unit is `e_K`: `(a ∗ b) / P_{W₀}(q)`.
    pub fn spherical_mul(&self, a: &HeckeElt<S::C>, b: &HeckeElt<S::C>) -> Result<HeckeElt<S::C>> {
        let p = self.poincare();
        self.mul(a, b).map_coeffs(|c| {
            c.div_exact(&p)
                .ok_or_else(|| Error::SolveFailure(format!("{c} is not divisible by {p}")))
        })
    }

    /// `h ↦ h ∗ e_K`, read as a function of `λ` on the cosets `t_λ W₀`.
    pub fn project_ik(&self, h: &HeckeElt<S::C>) -> Result<LambdaFunction<S::C>> {
        let g = self.group();
        let order = g.weyl().order() as u32;
        let prod = self.mul(h, &self.e_k());
        let mut out = LambdaFunction::zero();
        for (x, c) in prod.terms() {
            if x.w != 0 {
                continue;
            }
            for w in 1..order {
                let y = ExtAffWeylElt::new(x.lambda.clone(), w);
                if prod.coeff(&y) != *c {
                    return Err(Error::NotRightKInvariant(g.render(&y)));
                }
            }
            out.add_term(x.lambda.clone(), c);
        }
        if prod
            .terms()
            .any(|(x, _)| prod.get(&g.translation(&x.lambda)).is_none())
        {
            return Err(Error::NotRightKInvariant(
                "coset without an identity representative".to_string(),
            ));
        }
        Ok(out)
    }

    /// `Σ_x c_x · sat(x) / P_{W₀}(q)` with values in the coefficient ring.
    pub fn satake_values(&self, h: &HeckeElt<S::C>) -> Result<LambdaFunction<S::C>> {
        if !self.is_spherical(h) {
            return Err(Error::NotSpherical(h.render(self.group())));
        }
        let mut raw = LambdaFunction::zero();
        for (x, c) in h.terms() {
            for (m, _, d) in self.satake_functional(x)?.terms() {
                raw.add_term(m.clone(), &d.mul_ref(c));
            }
        }
        let p = self.poincare();
        raw.terms()
            .map(|(m, c)| {
                c.div_exact(&p).map(|v| (m.clone(), v)).ok_or_else(|| {
                    Error::SolveFailure(format!("Satake value at {m} is not divisible by {p}"))
                })
            })
            .collect()
    }
}

impl HeckeAlgebra<LaurentScalars> {
    /// The twisted Satake transform `H_K → R^{Ẇ}`, normalized so that `e_K ↦ e_0`.
    pub fn satake(&self, h: &HeckeElt) -> Result<GroupAlgElt> {
        let vals = self.satake_values(h)?;
        GroupAlgElt::from_terms(
            self.datum().rank(),
            vals.terms().map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Writes a dot-invariant `r` in the spherical basis through `π(Θ(r))`.
    pub fn satake_inverse(&self, r: &GroupAlgElt) -> Result<SphericalCombination> {
        let d = self.datum();
        if r.rank() != d.rank() {
            return Err(Error::RankMismatch {
                expected: d.rank(),
                found: r.rank(),
            });
        }
        if !is_dot_invariant(d, r) {
            return Err(Error::NotInvariant(r.to_string()));
        }
        let mut f = self.project_ik(&self.theta_of(r)?)?;
        let mut terms = vec![];
        let points: Vec<Coweight> = f
            .terms()
            .map(|(k, _)| k.clone())
            .filter(|k| d.is_antidominant(k))
            .collect();
        for lambda in points {
            let c = f.value(&lambda);
            if c.is_zero() {
                continue;
            }
            for mu in orbit(d, &lambda) {
                f.add_term(mu, &-&c);
            }
            terms.push((lambda, c));
        }
        if !f.is_zero() {
            return Err(Error::NotIntegral(format!("remainder {f}")));
        }
        Ok(SphericalCombination { terms })
    }

    /// The antidominant representative of the `W₀`-orbit of `λ`.
    pub fn antidominant(&self, lambda: &Coweight) -> Coweight {
        antidominant_rep(self.datum(), lambda).0
    }
}
