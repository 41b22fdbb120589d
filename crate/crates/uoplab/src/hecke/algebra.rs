//! Multiplication in the `T`-basis, inverses and Bernstein elements `θ_λ`.

use std::sync::{Arc, Mutex};

use rustc_hash::FxHashMap;

use super::elt::HeckeElt;
use crate::coeffs::{Coefficient, Coweight, GroupAlgElt, LaurentScalars, Scalars};
use crate::error::{Error, Result};
use crate::rootdata::{
    antidominant_rep, Decomposition, ExtAffWeylElt, ExtendedAffineWeyl, RootDatum,
};

type Cache<K, V> = Mutex<FxHashMap<K, Arc<V>>>;

/// The Iwahori–Hecke algebra of `W̃` over the coefficient ring `S`.
pub struct HeckeAlgebra<S: Scalars = LaurentScalars> {
    group: Arc<ExtendedAffineWeyl>,
    scalars: S,
    decompositions: Cache<ExtAffWeylElt, Decomposition>,
    thetas: Cache<Coweight, HeckeElt<S::C>>,
    theta_finite: Cache<(Coweight, u32), HeckeElt<S::C>>,
    pub(super) bernstein: super::bernstein::BernsteinCaches<S::C>,
}

impl HeckeAlgebra<LaurentScalars> {
    /// The generic algebra over `Z[v, v^-1]` for a root datum.
    pub fn from_datum(d: RootDatum) -> Result<Self> {
        Ok(Self::new(
            Arc::new(ExtendedAffineWeyl::new(Arc::new(d))?),
            LaurentScalars,
        ))
    }
}

impl<S: Scalars> HeckeAlgebra<S> {
    pub fn new(group: Arc<ExtendedAffineWeyl>, scalars: S) -> Self {
        HeckeAlgebra {
            group,
            scalars,
            decompositions: Mutex::default(),
            thetas: Mutex::default(),
            theta_finite: Mutex::default(),
            bernstein: Default::default(),
        }
    }

    pub fn group(&self) -> &ExtendedAffineWeyl {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<ExtendedAffineWeyl> {
        &self.group
    }

    pub fn datum(&self) -> &RootDatum {
        self.group.datum()
    }

    pub fn scalars(&self) -> &S {
        &self.scalars
    }

    pub fn one(&self) -> HeckeElt<S::C> {
        HeckeElt::basis(self.group.identity())
    }

    pub fn basis(&self, x: ExtAffWeylElt) -> HeckeElt<S::C> {
        HeckeElt::basis(x)
    }

    pub fn length(&self, x: &ExtAffWeylElt) -> u32 {
        self.group.length(x)
    }

    pub fn decomposition(&self, x: &ExtAffWeylElt) -> Arc<Decomposition> {
        if let Some(d) = self.decompositions.lock().unwrap().get(x) {
            return d.clone();
        }
        let d = Arc::new(self.group.decompose(x));
        self.decompositions
            .lock()
            .unwrap()
            .insert(x.clone(), d.clone());
        d
    }

    fn check_rank(&self, lambda: &Coweight) -> Result<()> {
        self.datum().check_rank(lambda)
    }

    /// `h · T_g` for the `g`-th simple affine reflection.
    pub fn right_mul_gen(&self, h: &HeckeElt<S::C>, g: usize) -> HeckeElt<S::C> {
        let s = &self.scalars;
        let mut out = HeckeElt::with_capacity(h.len() * 2);
        for (x, c) in h.terms() {
            let xg = self.group.mul_gen(x, g);
            if self.group.length(&xg) > self.group.length(x) {
                out.add_term(xg, c.clone());
            } else {
                out.add_term(xg, s.mul_q(c));
                out.add_term(x.clone(), s.mul_q_minus_one(c));
            }
        }
        out
    }

    /// `h · T_g⁻¹`, using `T_g⁻¹ = q⁻¹ T_g + (q⁻¹ − 1)`.
    pub fn right_mul_gen_inv(&self, h: &HeckeElt<S::C>, g: usize) -> HeckeElt<S::C> {
        let s = &self.scalars;
        let mut out = HeckeElt::with_capacity(h.len() * 2);
        for (x, c) in h.terms() {
            let xg = self.group.mul_gen(x, g);
            if self.group.length(&xg) > self.group.length(x) {
                out.add_term(xg, s.mul_q_inv(c));
                out.add_term(x.clone(), s.mul_q_inv_minus_one(c));
            } else {
                out.add_term(xg, c.clone());
            }
        }
        out
    }

    /// `T_g · h`.
    pub fn left_mul_gen(&self, g: usize, h: &HeckeElt<S::C>) -> HeckeElt<S::C> {
        let s = &self.scalars;
        let mut out = HeckeElt::with_capacity(h.len() * 2);
        for (x, c) in h.terms() {
            let gx = self.group.gen_mul(g, x);
            if self.group.length(&gx) > self.group.length(x) {
                out.add_term(gx, c.clone());
            } else {
                out.add_term(gx, s.mul_q(c));
                out.add_term(x.clone(), s.mul_q_minus_one(c));
            }
        }
        out
    }

    /// `h · T_ω` for a length-zero `ω`.
    pub fn right_shift(&self, h: &HeckeElt<S::C>, omega: &ExtAffWeylElt) -> HeckeElt<S::C> {
        if *omega == self.group.identity() {
            return h.clone();
        }
        h.terms()
            .map(|(x, c)| (self.group.mul(x, omega), c.clone()))
            .collect()
    }

    /// `T_ω · h` for a length-zero `ω`.
    pub fn left_shift(&self, omega: &ExtAffWeylElt, h: &HeckeElt<S::C>) -> HeckeElt<S::C> {
        if *omega == self.group.identity() {
            return h.clone();
        }
        h.terms()
            .map(|(x, c)| (self.group.mul(omega, x), c.clone()))
            .collect()
    }

    /// `h · T_y`.
    pub fn right_mul_basis(&self, h: &HeckeElt<S::C>, y: &ExtAffWeylElt) -> HeckeElt<S::C> {
        let d = self.decomposition(y);
        let mut out = self.right_shift(h, &d.omega);
        for &g in &d.word {
            out = self.right_mul_gen(&out, g);
        }
        out
    }

    /// `T_y · h`.
    pub fn left_mul_basis(&self, y: &ExtAffWeylElt, h: &HeckeElt<S::C>) -> HeckeElt<S::C> {
        let d = self.decomposition(y);
        let mut out = h.clone();
        for &g in d.word.iter().rev() {
            out = self.left_mul_gen(g, &out);
        }
        self.left_shift(&d.omega, &out)
    }

    /// `h · T_y⁻¹`.
    pub fn right_mul_basis_inv(&self, h: &HeckeElt<S::C>, y: &ExtAffWeylElt) -> HeckeElt<S::C> {
        let d = self.decomposition(y);
        let mut out = h.clone();
        for &g in d.word.iter().rev() {
            out = self.right_mul_gen_inv(&out, g);
        }
        self.right_shift(&out, &self.group.inverse(&d.omega))
    }

    /// `T_x⁻¹`.
    pub fn t_inverse(&self, x: &ExtAffWeylElt) -> HeckeElt<S::C> {
        self.right_mul_basis_inv(&self.one(), x)
    }

    /// Convolution product. The factor with fewer terms is decomposed into
    /// generators and applied to the other one.
    pub fn mul(&self, a: &HeckeElt<S::C>, b: &HeckeElt<S::C>) -> HeckeElt<S::C> {
        let mut out = HeckeElt::zero();
        if a.is_zero() || b.is_zero() {
            return out;
        }
        if b.len() <= a.len() {
            for (y, c) in b.terms() {
                out.add_scaled(&self.right_mul_basis(a, y), c);
            }
        } else {
            for (x, c) in a.terms() {
                out.add_scaled(&self.left_mul_basis(x, b), c);
            }
        }
        out
    }

    /// Auxiliary `μ` for `θ_λ = T_{t_{λ+μ}} T_{t_μ}⁻¹`: antidominant with `λ+μ`
    /// antidominant and `⟨2ρ, μ⟩` small.
    pub fn theta_aux(&self, lambda: &Coweight) -> Coweight {
        let d = self.datum();
        let step = d.two_rho_vee();
        let search = |start: Coweight| {
            let mut mu = start;
            while !(d.is_antidominant(&mu) && d.is_antidominant(&(lambda + &mu))) {
                mu = &mu + step;
            }
            mu
        };
        let (nu, _) = antidominant_rep(d, &-lambda);
        let a = search(nu);
        let b = search(Coweight::zero(d.rank()));
        if d.two_rho_pairing(&b) < d.two_rho_pairing(&a) {
            b
        } else {
            a
        }
    }

    /// `θ_λ` computed with an explicit auxiliary `μ`.
    pub fn theta_with(&self, lambda: &Coweight, mu: &Coweight) -> Result<HeckeElt<S::C>> {
        self.check_rank(lambda)?;
        self.check_rank(mu)?;
        let shifted = lambda + mu;
        for v in [mu, &shifted] {
            if !self.datum().is_antidominant(v) {
                return Err(Error::NotAntidominant(v.to_string()));
            }
        }
        let top = self.basis(self.group.translation(&shifted));
        Ok(self.right_mul_basis_inv(&top, &self.group.translation(mu)))
    }

    /// The Bernstein element `θ_λ` (cached).
    pub fn theta(&self, lambda: &Coweight) -> Result<Arc<HeckeElt<S::C>>> {
        self.check_rank(lambda)?;
        if let Some(t) = self.thetas.lock().unwrap().get(lambda) {
            return Ok(t.clone());
        }
        let t = Arc::new(self.theta_with(lambda, &self.theta_aux(lambda))?);
        self.thetas
            .lock()
            .unwrap()
            .insert(lambda.clone(), t.clone());
        Ok(t)
    }

    /// `h · θ_λ`, evaluated as `h · T_{t_{λ+μ}} · T_{t_μ}⁻¹`.
    pub fn mul_theta(&self, h: &HeckeElt<S::C>, lambda: &Coweight) -> Result<HeckeElt<S::C>> {
        self.check_rank(lambda)?;
        let mu = self.theta_aux(lambda);
        let up = self.right_mul_basis(h, &self.group.translation(&(lambda + &mu)));
        Ok(self.right_mul_basis_inv(&up, &self.group.translation(&mu)))
    }

    /// `θ_λ T_w` (cached).
    pub fn theta_finite(&self, lambda: &Coweight, w: u32) -> Result<Arc<HeckeElt<S::C>>> {
        let key = (lambda.clone(), w);
        if let Some(t) = self.theta_finite.lock().unwrap().get(&key) {
            return Ok(t.clone());
        }
        let theta = self.theta(lambda)?;
        let t = Arc::new(self.right_mul_basis(&theta, &self.group.finite(w)));
        self.theta_finite.lock().unwrap().insert(key, t.clone());
        Ok(t)
    }

    /// Linear extension `Σ c_λ e_λ ↦ Σ c_λ θ_λ`.
    pub fn theta_of(&self, r: &GroupAlgElt) -> Result<HeckeElt<S::C>> {
        if r.rank() != self.datum().rank() {
            return Err(Error::RankMismatch {
                expected: self.datum().rank(),
                found: r.rank(),
            });
        }
        let mut out = HeckeElt::zero();
        for (lambda, c) in r.terms() {
            let c = self.scalars.convert(c)?;
            out.add_scaled(&*self.theta(lambda)?, &c);
        }
        Ok(out)
    }

    /// Converts a universal element into this algebra's coefficients.
    pub fn specialize(&self, h: &HeckeElt<crate::coeffs::LaurentPoly>) -> Result<HeckeElt<S::C>> {
        h.map_coeffs(|c| self.scalars.convert(c))
    }

    /// `Σ_{w ∈ W₀} T_w`.
    pub fn e_k(&self) -> HeckeElt<S::C> {
        (0..self.group.weyl().order() as u32)
            .map(|w| (self.group.finite(w), S::C::one()))
            .collect()
    }

    /// Poincaré value `Σ_{w ∈ W₀} q^{ℓ(w)}`.
    pub fn poincare(&self) -> S::C {
        let mut total = S::C::zero();
        for w in 0..self.group.weyl().order() as u32 {
            let mut t = S::C::one();
            for _ in 0..self.group.weyl().length(w) {
                t = self.scalars.mul_q(&t);
            }
            total.add_assign_ref(&t);
        }
        total
    }
}

/// Free-function form of [`HeckeAlgebra::mul`].
pub fn hk_mul<S: Scalars>(
    alg: &HeckeAlgebra<S>,
    a: &HeckeElt<S::C>,
    b: &HeckeElt<S::C>,
) -> HeckeElt<S::C> {
    alg.mul(a, b)
}

/// Free-function form of [`HeckeAlgebra::t_inverse`].
pub fn t_inverse<S: Scalars>(alg: &HeckeAlgebra<S>, x: &ExtAffWeylElt) -> HeckeElt<S::C> {
    alg.t_inverse(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::LaurentPoly;
    use crate::rootdata::preset;

    fn alg(name: &str) -> HeckeAlgebra {
        HeckeAlgebra::from_datum(preset(name).unwrap()).unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let a = alg("gl2");
        let s = a.group().finite(a.group().weyl().simple(0));
        let ts = a.basis(s.clone());
        let sq = a.mul(&ts, &ts);
        let expected: HeckeElt = [
            (s, lp("v^2 + -1")),
            (a.group().identity(), LaurentPoly::q()),
        ]
        .into_iter()
        .collect();
        assert_eq!(sq, expected);
    }

    #[test]
    fn inverse_of_simple_reflection() {
        let a = alg("gl2");
        let s = a.group().finite(a.group().weyl().simple(0));
        let expected: HeckeElt = [
            (s.clone(), LaurentPoly::q_pow(-1)),
            (a.group().identity(), lp("v^-2 + -1")),
        ]
        .into_iter()
        .collect();
        assert_eq!(a.t_inverse(&s), expected);
        assert_eq!(a.t_inverse(&a.group().identity()), a.one());
    }

    #[test]
    fn antidominant_translations_multiply() {
        let a = alg("gl2");
        let t10 = a.basis(a.group().translation(&Coweight::from([1, 0])));
        let t20 = a.basis(a.group().translation(&Coweight::from([2, 0])));
        assert_eq!(a.mul(&t10, &t10), t20);
        assert_eq!(*a.theta(&Coweight::from([1, 0])).unwrap(), t10);
        assert_eq!(*a.theta(&Coweight::from([0, 0])).unwrap(), a.one());
    }

    #[test]
    fn theta_independent_of_aux() {
        let a = alg("gl2");
        let l = Coweight::from([0, 1]);
        let t1 = a.theta_with(&l, &Coweight::from([1, 0])).unwrap();
        let t2 = a.theta_with(&l, &Coweight::from([2, 0])).unwrap();
        assert_eq!(t1, t2);
        assert!(t1.len() >= 2);
        assert!(matches!(
            a.theta_with(&l, &Coweight::from([0, 1])),
            Err(Error::NotAntidominant(_))
        ));
    }

    #[test]
    fn inverse_round_trip() {
        for name in ["gl2", "sl3", "sp4"] {
            let a = alg(name);
            for x in a.group().elements_in_box(1, 4) {
                let inv = a.t_inverse(&x);
                let b = a.basis(x.clone());
                assert_eq!(a.mul(&b, &inv), a.one(), "{name} {x:?}");
                assert_eq!(a.mul(&inv, &b), a.one(), "{name} {x:?}");
                assert!(inv.terms().all(|(_, c)| c.terms().all(|(e, _)| e % 2 == 0)));
            }
        }
    }
}
