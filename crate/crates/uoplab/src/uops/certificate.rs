use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::coeffs::{Coweight, GroupAlgElt, LaurentPoly, Scalars, SpecializedScalars};
use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElt, SphericalCombination};
use crate::rootdata::{is_dot_invariant, orbit, RootDatum};

/// Values of `q` at which the identities are re-checked in rational arithmetic.
pub const DEFAULT_SPECIALIZATIONS: [u64; 3] = [2, 4, 9];

/// `∏_{μ ∈ W₀λ} (X − v^{⟨2ρ,λ⟩−⟨2ρ,μ⟩} e_μ)` as the coefficient list of `X^0..X^d`.
pub fn orbit_char_poly(d: &RootDatum, lambda: &Coweight) -> Result<Vec<GroupAlgElt>> {
    d.check_rank(lambda)?;
    if !d.is_antidominant(lambda) {
        return Err(Error::NotAntidominant(lambda.to_string()));
    }
    let n = d.rank();
    let base = d.two_rho_pairing(lambda);
    let mut coeffs = vec![GroupAlgElt::one(n)];
    for mu in orbit(d, lambda) {
        let e = base - d.two_rho_pairing(&mu);
        let root = GroupAlgElt::monomial(mu, LaurentPoly::v_pow(e as i32));
        let mut next = vec![GroupAlgElt::zero(n); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] = &next[k + 1] + c;
            next[k] = &next[k] - &c.try_mul(&root)?;
        }
        coeffs = next;
    }
    for (k, c) in coeffs.iter().enumerate() {
        if !is_dot_invariant(d, c) {
            return Err(Error::CheckFailure {
                layer: "invariance".to_string(),
                detail: format!("coefficient of X^{k} is not dot-invariant: {c}"),
            });
        }
    }
    Ok(coeffs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphericalTerm {
    pub coweight: Vec<i32>,
    pub weight: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateCoefficient {
    pub power: usize,
    pub spherical: Vec<SphericalTerm>,
    /// The values of `Θ(c_k) ∗ e_K` on `I\G/K`.
    pub lambda_function: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateChecks {
    /// `Σ θ_λ^k ∗ Θ(c_k) = 0` in `H_I`.
    pub hecke_identity: bool,
    /// `Σ (θ_λ^k ∗ Θ(c_k)) ∗ e_K = 0`, each summand projected separately.
    pub projected_identity: bool,
    /// `satake(h_k) = c_k` for the emitted spherical coefficients `h_k`.
    pub satake_roundtrip: bool,
    /// `Σ θ_λ^k ∗ h_k = 0` with the emitted spherical coefficients.
    pub spherical_identity: bool,
}

impl CertificateChecks {
    pub fn all_passed(&self) -> bool {
        self.hecke_identity
            && self.projected_identity
            && self.satake_roundtrip
            && self.spherical_identity
    }

    fn first_failure(&self) -> Option<&'static str> {
        [
            ("hecke_identity", self.hecke_identity),
            ("projected_identity", self.projected_identity),
            ("satake_roundtrip", self.satake_roundtrip),
            ("spherical_identity", self.spherical_identity),
        ]
        .into_iter()
        .find(|(_, ok)| !ok)
        .map(|(name, _)| name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QSpecialization {
    pub q: u64,
    pub hecke_identity: bool,
    pub projected_identity: bool,
    pub spherical_identity: bool,
}

/// A monic polynomial over the spherical Hecke algebra annihilating `u_λ`,
/// with the outcome of every verification layer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralityCertificate {
    pub group: String,
    pub lambda: Vec<i32>,
    pub degree: usize,
    pub coefficients: Vec<CertificateCoefficient>,
    pub checks: CertificateChecks,
    pub q_specializations: Vec<QSpecialization>,
}

impl IntegralityCertificate {
    /// The spherical combination emitted for `X^k`.
    pub fn spherical(&self, k: usize) -> Result<SphericalCombination> {
        let c = self
            .coefficients
            .iter()
            .find(|c| c.power == k)
            .ok_or_else(|| Error::ConfigError(format!("no coefficient for X^{k}")))?;
        let terms = c
            .spherical
            .iter()
            .map(|t| Ok((Coweight::from(t.coweight.clone()), t.weight.parse()?)))
            .collect::<Result<_>>()?;
        Ok(SphericalCombination { terms })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    /// Human-readable polynomial, highest power first.
    pub fn polynomial(&self) -> String {
        let mut parts = vec![];
        for c in self.coefficients.iter().rev() {
            let Ok(s) = self.spherical(c.power) else {
                continue;
            };
            let x = match c.power {
                0 => String::new(),
                1 => " X".to_string(),
                k => format!(" X^{k}"),
            };
            parts.push(format!("[{s}]{x}"));
        }
        parts.join(" + ")
    }
}

/// The three identities checked at the Hecke-algebra level.
struct Identities {
    hecke: bool,
    projected: bool,
    spherical: bool,
}

fn check_identities<S: Scalars>(
    alg: &HeckeAlgebra<S>,
    lambda: &Coweight,
    coeffs: &[GroupAlgElt],
    spherical: &[SphericalCombination],
) -> Result<Identities> {
    let e_k = alg.e_k();
    let mut power = alg.one();
    let mut hecke = HeckeElt::zero();
    let mut projected = HeckeElt::zero();
    let mut sph = HeckeElt::zero();
    for (k, (c, h)) in coeffs.iter().zip(spherical).enumerate() {
        if k > 0 {
            power = alg.mul_theta(&power, lambda)?;
        }
        let term = alg.mul(&power, &alg.theta_of(c)?);
        projected = projected.add(&alg.mul(&term, &e_k));
        hecke = hecke.add(&term);
        sph = sph.add(&alg.mul(&power, &h.to_hecke(alg)?));
    }
    Ok(Identities {
        hecke: hecke.is_zero(),
        projected: projected.is_zero(),
        spherical: sph.is_zero(),
    })
}

/// Builds `P_λ`, verifies it annihilates `θ_λ` and rewrites it over `H_K`.
/// Fails with [`Error::CheckFailure`] naming the first layer that does not hold.
pub fn integrality_certificate(
    alg: &HeckeAlgebra,
    lambda: &Coweight,
    specializations: &[u64],
) -> Result<IntegralityCertificate> {
    let d = alg.datum();
    let coeffs = orbit_char_poly(d, lambda)?;
    let mut spherical = Vec::with_capacity(coeffs.len());
    let mut entries = Vec::with_capacity(coeffs.len());
    let mut roundtrip = true;
    for (k, c) in coeffs.iter().enumerate() {
        let s = alg.satake_inverse(c)?;
        let h = s.to_hecke(alg)?;
        roundtrip &= alg.satake(&h)? == *c;
        let lf = alg.project_ik(&alg.theta_of(c)?)?;
        entries.push(CertificateCoefficient {
            power: k,
            spherical: s
                .terms
                .iter()
                .map(|(m, w)| SphericalTerm {
                    coweight: m.to_vec(),
                    weight: w.to_string(),
                })
                .collect(),
            lambda_function: lf.rendered(),
        });
        spherical.push(s);
    }
    let ids = check_identities(alg, lambda, &coeffs, &spherical)?;
    let checks = CertificateChecks {
        hecke_identity: ids.hecke,
        projected_identity: ids.projected,
        satake_roundtrip: roundtrip,
        spherical_identity: ids.spherical,
    };
    if let Some(layer) = checks.first_failure() {
        return Err(Error::CheckFailure {
            layer: layer.to_string(),
            detail: format!("{} at λ = {lambda}", d.name()),
        });
    }
    let mut q_specializations = vec![];
    for &q in specializations {
        let sq = HeckeAlgebra::new(alg.group_arc().clone(), SpecializedScalars::new(q));
        let ids = check_identities(&sq, lambda, &coeffs, &spherical)?;
        if !(ids.hecke && ids.projected && ids.spherical) {
            return Err(Error::CheckFailure {
                layer: format!("q_specialization({q})"),
                detail: format!("{} at λ = {lambda}", d.name()),
            });
        }
        q_specializations.push(QSpecialization {
            q,
            hecke_identity: ids.hecke,
            projected_identity: ids.projected,
            spherical_identity: ids.spherical,
        });
    }
    Ok(IntegralityCertificate {
        group: d.name().to_string(),
        lambda: lambda.to_vec(),
        degree: coeffs.len() - 1,
        coefficients: entries,
        checks,
        q_specializations,
    })
}
