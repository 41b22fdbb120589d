use std::fmt;

use crate::coeffs::{Coweight, GroupAlgElt};
use crate::error::{Error, Result};
use crate::rootdata::RootDatum;

/// An element `Σ c_m u_m` of the U-operator ring, stored as `Σ c_m e_m` with
/// every `m` antidominant.
#[derive(Clone, PartialEq, Eq)]
pub struct UOperator {
    r: GroupAlgElt,
}

impl UOperator {
    pub fn new(d: &RootDatum, r: GroupAlgElt) -> Result<Self> {
        if r.rank() != d.rank() {
            return Err(Error::RankMismatch {
                expected: d.rank(),
                found: r.rank(),
            });
        }
        if let Some(m) = r.support().find(|m| !d.is_antidominant(m)) {
            return Err(Error::NotAntidominant(m.to_string()));
        }
        Ok(UOperator { r })
    }

    /// `u_m`.
    pub fn basis(d: &RootDatum, m: Coweight) -> Result<Self> {
        Self::new(d, GroupAlgElt::basis(m))
    }

    pub fn one(d: &RootDatum) -> Self {
        UOperator {
            r: GroupAlgElt::one(d.rank()),
        }
    }

    pub fn element(&self) -> &GroupAlgElt {
        &self.r
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(UOperator {
            r: self.r.try_mul(&other.r)?,
        })
    }
}

impl fmt::Display for UOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.r.to_string().replace(" * e", " * u"))
    }
}

impl fmt::Debug for UOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `u_m u_{m'} = u_{m+m'}`, extended bilinearly. The cone is closed under
/// addition so the product stays in the ring.
pub fn u_ring_product(a: &UOperator, b: &UOperator) -> Result<UOperator> {
    a.mul(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::preset;

    #[test]
    fn products() {
        let d = preset("gl2").unwrap();
        let u = |v: [i32; 2]| UOperator::basis(&d, Coweight::from(v)).unwrap();
        assert_eq!(u_ring_product(&u([1, 0]), &u([1, 0])).unwrap(), u([2, 0]));
        assert_eq!(u_ring_product(&u([1, 0]), &u([1, 1])).unwrap(), u([2, 1]));
        assert_eq!(
            u_ring_product(&UOperator::one(&d), &u([1, 1])).unwrap(),
            u([1, 1])
        );
        assert!(matches!(
            UOperator::basis(&d, Coweight::from([0, 1])),
            Err(Error::NotAntidominant(_))
        ));
        assert_eq!(u([1, 0]).to_string(), "1*v^0 * u[1,0]");
    }
}
