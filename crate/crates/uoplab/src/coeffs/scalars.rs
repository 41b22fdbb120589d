//! Coefficient rings for Hecke algebra computations.
//!
//! [`LaurentScalars`] is the universal ring `Z[v, v^-1]`; [`SpecializedScalars`]
//! evaluates everything at a fixed integer `q` in exact rational arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use crate::error::Result;

/// Exact commutative ring element used as a Hecke algebra coefficient.
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, o: &Self);
    fn sub_assign_ref(&mut self, o: &Self);
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Inverse when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;
    fn div_exact(&self, d: &Self) -> Option<Self>;
}

impl Coefficient for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self -= o;
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn unit_inverse(&self) -> Option<Self> {
        LaurentPoly::unit_inverse(self)
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        LaurentPoly::div_exact(self, d)
    }
}

impl Coefficient for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self -= o;
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn unit_inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        (!Zero::is_zero(d)).then(|| self / d)
    }
}

/// A coefficient ring together with its distinguished element `q`.
pub trait Scalars: Clone + fmt::Debug + Send + Sync + 'static {
    type C: Coefficient;

    fn convert(&self, p: &LaurentPoly) -> Result<Self::C>;
    fn q(&self) -> Self::C;
    fn label(&self) -> String;

    fn mul_q(&self, c: &Self::C) -> Self::C {
        c.mul_ref(&self.q())
    }

    fn mul_q_minus_one(&self, c: &Self::C) -> Self::C {
        let mut out = self.mul_q(c);
        out.sub_assign_ref(c);
        out
    }

    fn mul_q_inv(&self, c: &Self::C) -> Self::C {
        let qinv = self.q().unit_inverse().expect("q is a unit");
        c.mul_ref(&qinv)
    }

    fn mul_q_inv_minus_one(&self, c: &Self::C) -> Self::C {
        let mut out = self.mul_q_inv(c);
        out.sub_assign_ref(c);
        out
    }
}

/// The universal coefficient ring `Z[v, v^-1]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LaurentScalars;

impl Scalars for LaurentScalars {
    type C = LaurentPoly;

    fn convert(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        Ok(p.clone())
    }

    fn q(&self) -> LaurentPoly {
        LaurentPoly::q()
    }

    fn label(&self) -> String {
        "Z[v,v^-1]".to_string()
    }

    fn mul_q(&self, c: &LaurentPoly) -> LaurentPoly {
        c.shift(2)
    }

    fn mul_q_minus_one(&self, c: &LaurentPoly) -> LaurentPoly {
        &c.shift(2) - c
    }

    fn mul_q_inv(&self, c: &LaurentPoly) -> LaurentPoly {
        c.shift(-2)
    }

    fn mul_q_inv_minus_one(&self, c: &LaurentPoly) -> LaurentPoly {
        &c.shift(-2) - c
    }
}

/// Exact rational arithmetic at a fixed integer value of `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializedScalars {
    q: u64,
    qv: BigRational,
}

impl SpecializedScalars {
    pub fn new(q: u64) -> Self {
        SpecializedScalars {
            q,
            qv: BigRational::from_integer(BigInt::from(q)),
        }
    }

    pub fn q_value(&self) -> u64 {
        self.q
    }
}

impl Scalars for SpecializedScalars {
    type C = BigRational;

    fn convert(&self, p: &LaurentPoly) -> Result<BigRational> {
        p.eval_q(self.q)
    }

    fn q(&self) -> BigRational {
        self.qv.clone()
    }

    fn label(&self) -> String {
        format!("q={}", self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shortcuts_agree_with_generic_rules() {
        let c: LaurentPoly = "3*v^-1 + -2*v^4".parse().unwrap();
        let s = LaurentScalars;
        let q = LaurentPoly::q();
        assert_eq!(s.mul_q(&c), &c * &q);
        assert_eq!(s.mul_q_minus_one(&c), &c * &(&q - &LaurentPoly::one()));
        let qinv = LaurentPoly::q_pow(-1);
        assert_eq!(s.mul_q_inv(&c), &c * &qinv);
        assert_eq!(
            s.mul_q_inv_minus_one(&c),
            &c * &(&qinv - &LaurentPoly::one())
        );
    }

    #[test]
    fn specialized_rules() {
        let s = SpecializedScalars::new(3);
        let one = <BigRational as One>::one();
        assert_eq!(s.mul_q_minus_one(&one), BigRational::from_integer(2.into()));
        assert_eq!(
            s.mul_q_inv_minus_one(&one),
            BigRational::new((-2).into(), 3.into())
        );
        assert!(s.convert(&LaurentPoly::v_pow(1)).is_err());
        assert!(SpecializedScalars::new(4)
            .convert(&LaurentPoly::v_pow(1))
            .is_ok());
    }
}
