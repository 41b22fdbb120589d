//! Laurent polynomials in `v` with integer coefficients, where `v^2 = q`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Zero};
use smallvec::SmallVec;

use super::int::Int;
use crate::error::{Error, Result};

type Terms = SmallVec<[(i32, Int); 2]>;

/// Sparse Laurent polynomial, terms sorted by exponent with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Terms,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: Terms::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, Int::ONE)
    }

    pub fn constant(c: impl Into<Int>) -> Self {
        Self::monomial(0, c.into())
    }

    pub fn monomial(exp: i32, coeff: Int) -> Self {
        let mut terms = Terms::new();
        if !coeff.is_zero() {
            terms.push((exp, coeff));
        }
        LaurentPoly { terms }
    }

    /// `v^k`.
    pub fn v_pow(k: i32) -> Self {
        Self::monomial(k, Int::ONE)
    }

    /// `q = v^2`.
    pub fn q() -> Self {
        Self::v_pow(2)
    }

    /// `q^k = v^{2k}`.
    pub fn q_pow(k: i32) -> Self {
        Self::v_pow(2 * k)
    }

    /// Builds a polynomial from arbitrary (exponent, coefficient) pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (i32, Int)>>(iter: I) -> Self {
        let mut raw: Terms = iter.into_iter().collect();
        raw.sort_unstable_by_key(|(e, _)| *e);
        let mut terms = Terms::new();
        for (e, c) in raw {
            match terms.last_mut() {
                Some((le, lc)) if *le == e => *lc += &c,
                _ => terms.push((e, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        LaurentPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Int)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
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

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn coeff(&self, exp: i32) -> Int {
        match self.terms.binary_search_by_key(&exp, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Int::ZERO,
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|(e, _)| *e)
    }

    pub fn has_only_even_exponents(&self) -> bool {
        self.terms.iter().all(|(e, _)| e % 2 == 0)
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Int) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// `Some((k, sign))` when the polynomial is `±v^k`.
    pub fn as_unit(&self) -> Option<(i32, bool)> {
        match self.terms.as_slice() {
            [(e, c)] if c.is_one() => Some((*e, false)),
            [(e, c)] if (-c).is_one() => Some((*e, true)),
            _ => None,
        }
    }

    pub fn unit_inverse(&self) -> Option<Self> {
        self.as_unit().map(|(e, neg)| {
            let c = if neg { Int::from(-1) } else { Int::ONE };
            Self::monomial(-e, c)
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient in `Z[v, v^-1]`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dmin, dmax) = (d.min_exp()?, d.max_exp()?);
        let (nmin, nmax) = (self.min_exp()?, self.max_exp()?);
        let dd: Vec<Int> = (dmin..=dmax).map(|e| d.coeff(e)).collect();
        let mut rem: Vec<Int> = (nmin..=nmax).map(|e| self.coeff(e)).collect();
        if rem.len() < dd.len() {
            return None;
        }
        let qlen = rem.len() - dd.len() + 1;
        let lead = dd.last()?;
        let mut quot = vec![Int::ZERO; qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + dd.len() - 1];
            if top.is_zero() {
                continue;
            }
            let c = top.div_exact(lead)?;
            for (j, dj) in dd.iter().enumerate() {
                let t = &c * dj;
                rem[i + j] -= &t;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let shift = nmin - dmin;
        Some(Self::from_terms(
            quot.into_iter()
                .enumerate()
                .map(|(i, c)| (i as i32 + shift, c)),
        ))
    }

    /// Exact value at `v = sqrt(q)`.
    pub fn eval_q(&self, q: u64) -> Result<BigRational> {
        let mut root = None;
        if !self.has_only_even_exponents() {
            let r = q.sqrt();
            if r * r != q {
                return Err(Error::OddExponentAtNonSquare { q });
            }
            root = Some(r);
        }
        let mut total = BigRational::zero();
        for (e, c) in self.terms() {
            let (base, exp) = match root {
                Some(r) => (BigInt::from(r), e),
                None => (BigInt::from(q), e / 2),
            };
            let p = num_traits::pow(base, exp.unsigned_abs() as usize);
            let val = if exp >= 0 {
                BigRational::from_integer(p)
            } else {
                BigRational::new(BigInt::one(), p)
            };
            total += val * BigRational::from_integer(c.to_bigint());
        }
        Ok(total)
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Terms::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let take_b = |c: &Int| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, take_b(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(e, c)| (*e, take_b(c))));
        LaurentPoly { terms: out }
    }
}

/// Exact product of two Laurent polynomials.
pub fn lp_mul(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    a * b
}

/// Specialization `v^2 = q`.
pub fn lp_eval_q(a: &LaurentPoly, q: u64) -> Result<BigRational> {
    a.eval_q(q)
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.merge(rhs, true)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if let [(e, c)] = rhs.terms.as_slice() {
            return LaurentPoly {
                terms: self.terms.iter().map(|(f, d)| (e + f, c * d)).collect(),
            };
        }
        if let [(e, c)] = self.terms.as_slice() {
            return LaurentPoly {
                terms: rhs.terms.iter().map(|(f, d)| (e + f, c * d)).collect(),
            };
        }
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .flat_map(|(e, c)| rhs.terms.iter().map(move |(f, d)| (e + f, c * d))),
        )
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if let [(e, c)] = rhs.terms.as_slice() {
            match self.terms.binary_search_by_key(e, |(f, _)| *f) {
                Ok(i) => {
                    self.terms[i].1 += c;
                    if self.terms[i].1.is_zero() {
                        self.terms.remove(i);
                    }
                }
                Err(i) => self.terms.insert(i, (*e, c.clone())),
            }
            return;
        }
        *self = self.merge(rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.merge(rhs, true);
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*v^{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts the canonical rendering (`c*v^k` terms joined by `+`) as well as
    /// bare constants `c` and bare monomials `v^k` / `-v^k`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseError(format!("not a Laurent polynomial: {s:?}"));
        let s = s.trim();
        if s == "0" {
            return Ok(LaurentPoly::zero());
        }
        let mut terms = Vec::new();
        for raw in s.split('+') {
            let t: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
            if t.is_empty() {
                return Err(bad());
            }
            let (coeff, exp) = match t.split_once('v') {
                None => (t.as_str(), "0"),
                Some((c, rest)) => {
                    let c = c.strip_suffix('*').unwrap_or(c);
                    let e = if rest.is_empty() {
                        "1"
                    } else {
                        rest.strip_prefix('^').ok_or_else(bad)?
                    };
                    (c, e)
                }
            };
            let coeff: Int = match coeff {
                "" => Int::ONE,
                "-" => Int::from(-1),
                c => c.parse().map_err(|_| bad())?,
            };
            let exp: i32 = exp.parse().map_err(|_| bad())?;
            terms.push((exp, coeff));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = lp("v + -1");
        let b = lp("v + 1");
        assert_eq!(lp_mul(&a, &b), lp("v^2 + -1"));
        assert_eq!(lp_mul(&a, &b).to_string(), "-1*v^0 + 1*v^2");
    }

    #[test]
    fn identity_and_cancellation() {
        let x = lp("3*v^-2 + -1*v^0 + 5*v^7");
        assert_eq!(lp_mul(&LaurentPoly::one(), &x), x);
        assert_eq!(
            lp_mul(&lp("2*v^2"), &lp("3*v^-2")),
            LaurentPoly::constant(6)
        );
    }

    #[test]
    fn no_zero_terms_survive() {
        let x = lp("v + -1*v");
        assert!(x.is_zero());
        let mut y = lp("1 + v^2");
        y -= &lp("v^2");
        assert_eq!(y, LaurentPoly::one());
        assert!(y.terms().all(|(_, c)| !c.is_zero()));
    }

    #[test]
    fn evaluation() {
        use num_rational::BigRational;
        let r = |n: i64| BigRational::from_integer(n.into());
        assert_eq!(lp_eval_q(&lp("v^4"), 3).unwrap(), r(9));
        assert_eq!(lp_eval_q(&lp("v^2 + -1"), 2).unwrap(), r(1));
        assert_eq!(
            lp_eval_q(&lp("v"), 2),
            Err(Error::OddExponentAtNonSquare { q: 2 })
        );
        assert_eq!(lp_eval_q(&lp("v^3"), 4).unwrap(), r(8));
        assert_eq!(
            lp_eval_q(&lp("v^-2"), 2).unwrap(),
            BigRational::new(1.into(), 2.into())
        );
    }

    #[test]
    fn exact_division() {
        let p = lp("1 + v^2 + v^4");
        let d = lp("1 + v^2");
        let prod = &p * &d;
        assert_eq!(prod.div_exact(&d), Some(p.clone()));
        assert_eq!(p.div_exact(&d), None);
        let shifted = prod.shift(-5);
        assert_eq!(shifted.div_exact(&d), Some(p.shift(-5)));
        assert_eq!(lp("2*v^3").div_exact(&lp("-v")), Some(lp("-2*v^2")));
    }

    #[test]
    fn units() {
        assert_eq!(lp("-v^-3").unit_inverse(), Some(lp("-v^3")));
        assert_eq!(lp("2*v").unit_inverse(), None);
        assert_eq!(lp("v + 1").unit_inverse(), None);
    }

    #[test]
    fn render_round_trip() {
        let x = lp("-4*v^-3 + 1*v^0 + 12*v^9");
        assert_eq!(x.to_string(), "-4*v^-3 + 1*v^0 + 12*v^9");
        assert_eq!(lp(&x.to_string()), x);
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
