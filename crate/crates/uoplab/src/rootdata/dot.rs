//! The `q`-twisted (dot) action of `W₀` on the group algebra.

use std::collections::BTreeSet;

use super::datum::RootDatum;
use crate::coeffs::{Coweight, GroupAlgElt, LaurentPoly};

/// `cexp(λ, w) = (⟨2ρ, λ⟩ − ⟨2ρ, wλ⟩) / 2`.
pub fn cexp(d: &RootDatum, lambda: &Coweight, w: u32) -> i64 {
    let wl = d.weyl().act(w, lambda);
    let diff = d.two_rho_pairing(lambda) - d.two_rho_pairing(&wl);
    debug_assert!(diff % 2 == 0, "odd c-exponent for {lambda}");
    diff / 2
}

/// `e_λ ↦ v^{2 cexp(λ, w)} e_{wλ}`, extended linearly.
pub fn dot_act(d: &RootDatum, w: u32, r: &GroupAlgElt) -> GroupAlgElt {
    let mut out = GroupAlgElt::zero(r.rank());
    for (lambda, c) in r.terms() {
        let wl = d.weyl().act(w, lambda);
        let e = d.two_rho_pairing(lambda) - d.two_rho_pairing(&wl);
        out.add_term(wl, &c.shift(e as i32));
    }
    out
}

/// The distinct points of `W₀ λ`, sorted.
pub fn orbit(d: &RootDatum, lambda: &Coweight) -> Vec<Coweight> {
    let set: BTreeSet<Coweight> = (0..d.weyl().order() as u32)
        .map(|w| d.weyl().act(w, lambda))
        .collect();
    set.into_iter().collect()
}

/// `Σ_{w ∈ W₀/W_λ} dot_act(w, e_λ)`.
pub fn dot_orbit_sum(d: &RootDatum, lambda: &Coweight) -> GroupAlgElt {
    let base = d.two_rho_pairing(lambda);
    let mut out = GroupAlgElt::zero(lambda.rank());
    for mu in orbit(d, lambda) {
        let e = base - d.two_rho_pairing(&mu);
        out.add_term(mu, &LaurentPoly::v_pow(e as i32));
    }
    out
}

/// Invariance under every simple reflection, hence under `W₀`.
pub fn is_dot_invariant(d: &RootDatum, r: &GroupAlgElt) -> bool {
    (0..d.weyl().simple_count()).all(|i| dot_act(d, d.weyl().simple(i), r) == *r)
}

/// The antidominant point `μ` of `W₀ λ` with some `w` such that `w μ = λ`.
pub fn antidominant_rep(d: &RootDatum, lambda: &Coweight) -> (Coweight, u32) {
    let w = d.weyl();
    (0..w.order() as u32)
        .map(|x| (w.act(w.inverse(x), lambda), x))
        .find(|(mu, _)| d.is_antidominant(mu))
        .expect("every W-orbit meets the antidominant cone")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::presets::preset;

    fn e(v: &[i32]) -> GroupAlgElt {
        GroupAlgElt::basis(Coweight::from(v))
    }

    #[test]
    fn gl2_reflection() {
        let d = preset("gl2").unwrap();
        let s = d.weyl().simple(0);
        assert_eq!(
            dot_act(&d, s, &e(&[1, 0])),
            e(&[0, 1]).scale(&LaurentPoly::q())
        );
        assert_eq!(dot_act(&d, s, &e(&[3, 3])), e(&[3, 3]));
        let r = &e(&[2, -1]) + &e(&[0, 5]);
        assert_eq!(dot_act(&d, 0, &r), r);
    }

    #[test]
    fn orbit_sums() {
        let d = preset("gl2").unwrap();
        assert_eq!(
            dot_orbit_sum(&d, &Coweight::from([1, 0])),
            &e(&[1, 0]) + &e(&[0, 1]).scale(&LaurentPoly::q())
        );
        assert_eq!(dot_orbit_sum(&d, &Coweight::from([1, 1])), e(&[1, 1]));
        let d3 = preset("gl3").unwrap();
        let expected = &(&e(&[1, 1, 0]) + &e(&[1, 0, 1]).scale(&LaurentPoly::q()))
            + &e(&[0, 1, 1]).scale(&LaurentPoly::q_pow(2));
        assert_eq!(dot_orbit_sum(&d3, &Coweight::from([1, 1, 0])), expected);
        assert!(is_dot_invariant(&d3, &expected));
    }

    #[test]
    fn antidominant_representatives() {
        let d = preset("sp4").unwrap();
        let lambda = Coweight::from([-2, 1]);
        let (mu, w) = antidominant_rep(&d, &lambda);
        assert!(d.is_antidominant(&mu));
        assert_eq!(d.weyl().act(w, &mu), lambda);
        assert_eq!(orbit(&d, &Coweight::from([1, 0])).len(), 4);
    }
}
