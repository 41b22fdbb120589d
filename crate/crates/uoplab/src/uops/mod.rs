//! U-operators and the monic polynomials over the spherical Hecke algebra
//! that annihilate them.

mod certificate;
mod operator;

pub use certificate::{
    integrality_certificate, orbit_char_poly, CertificateChecks, CertificateCoefficient,
    IntegralityCertificate, QSpecialization, SphericalTerm, DEFAULT_SPECIALIZATIONS,
};
pub use operator::{u_ring_product, UOperator};
