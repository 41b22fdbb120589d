//! The group algebra `Z[v, v^-1][Λ]` of a coweight lattice.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::coweight::Coweight;
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// A finite sum `Σ c_λ e_λ`, keyed lexicographically so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupAlgElt {
    rank: usize,
    terms: BTreeMap<Coweight, LaurentPoly>,
}

impl GroupAlgElt {
    pub fn zero(rank: usize) -> Self {
        GroupAlgElt {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::basis(Coweight::zero(rank))
    }

    /// `e_λ`.
    pub fn basis(lambda: Coweight) -> Self {
        Self::monomial(lambda, LaurentPoly::one())
    }

    pub fn monomial(lambda: Coweight, c: LaurentPoly) -> Self {
        let mut out = Self::zero(lambda.rank());
        out.add_term(lambda, &c);
        out
    }

    pub fn from_terms<I>(rank: usize, iter: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Coweight, LaurentPoly)>,
    {
        let mut out = Self::zero(rank);
        for (lambda, c) in iter {
            if lambda.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: lambda.rank(),
                });
            }
            out.add_term(lambda, &c);
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Coweight, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Coweight> {
        self.terms.keys()
    }

    pub fn coeff(&self, lambda: &Coweight) -> LaurentPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
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

    pub fn add_term(&mut self, lambda: Coweight, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(lambda.rank(), self.rank);
        match self.terms.get_mut(&lambda) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&lambda);
                }
            }
            None => {
                self.terms.insert(lambda, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.rank);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &(v * c));
        }
        out
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Convolution product `e_λ e_μ = e_{λ+μ}`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a + b, &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.rank);
        for _ in 0..k {
            acc = acc.try_mul(self).expect("same rank");
        }
        acc
    }
}

/// Group-algebra product; fails when the lattice ranks differ.
pub fn ga_mul(a: &GroupAlgElt, b: &GroupAlgElt) -> Result<GroupAlgElt> {
    a.try_mul(b)
}

impl<'a> Add<&'a GroupAlgElt> for &'a GroupAlgElt {
    type Output = GroupAlgElt;
    /// Panics on a rank mismatch; use [`GroupAlgElt::try_add`] for a checked sum.
    fn add(self, rhs: &'a GroupAlgElt) -> GroupAlgElt {
        self.try_add(rhs)
            .expect("rank mismatch in group algebra sum")
    }
}

impl<'a> Sub<&'a GroupAlgElt> for &'a GroupAlgElt {
    type Output = GroupAlgElt;
    fn sub(self, rhs: &'a GroupAlgElt) -> GroupAlgElt {
        self.try_sub(rhs)
            .expect("rank mismatch in group algebra difference")
    }
}

impl Neg for &GroupAlgElt {
    type Output = GroupAlgElt;
    fn neg(self) -> GroupAlgElt {
        GroupAlgElt {
            rank: self.rank,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl fmt::Display for GroupAlgElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if v.len() > 1 {
                write!(f, "({v}) * e{k}")?;
            } else {
                write!(f, "{v} * e{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupAlgElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
