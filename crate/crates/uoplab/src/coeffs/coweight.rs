//! Integer lattice vectors.

use std::fmt;
use std::ops::{Add, Deref, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A point of a coweight (or weight) lattice in coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coweight(pub SmallVec<[i32; 4]>);

impl Coweight {
    pub fn zero(n: usize) -> Self {
        Coweight(SmallVec::from_elem(0, n))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn scaled(&self, k: i32) -> Self {
        Coweight(self.0.iter().map(|x| x * k).collect())
    }

    pub fn dot(&self, other: &[i32]) -> i64 {
        self.0
            .iter()
            .zip(other)
            .map(|(a, b)| *a as i64 * *b as i64)
            .sum()
    }

    pub fn max_abs(&self) -> i32 {
        self.0.iter().map(|x| x.abs()).max().unwrap_or(0)
    }
}

impl Deref for Coweight {
    type Target = [i32];
    fn deref(&self) -> &[i32] {
        &self.0
    }
}

impl From<&[i32]> for Coweight {
    fn from(v: &[i32]) -> Self {
        Coweight(v.iter().copied().collect())
    }
}

impl<const N: usize> From<[i32; N]> for Coweight {
    fn from(v: [i32; N]) -> Self {
        Coweight(v.iter().copied().collect())
    }
}

impl From<Vec<i32>> for Coweight {
    fn from(v: Vec<i32>) -> Self {
        Coweight(v.into_iter().collect())
    }
}

impl<'a> Add<&'a Coweight> for &'a Coweight {
    type Output = Coweight;
    fn add(self, rhs: &'a Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a Coweight> for &'a Coweight {
    type Output = Coweight;
    fn sub(self, rhs: &'a Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Coweight {
    type Output = Coweight;
    fn neg(self) -> Coweight {
        Coweight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Coweight {
    type Err = Error;

    /// Parses `1,0`, `[1,0]` or `(1, 0)`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')']);
        if inner.trim().is_empty() {
            return Err(Error::ParseError(format!("empty coweight {s:?}")));
        }
        inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::ParseError(format!("bad coweight entry {t:?} in {s:?}")))
            })
            .collect::<Result<SmallVec<_>>>()
            .map(Coweight)
    }
}
