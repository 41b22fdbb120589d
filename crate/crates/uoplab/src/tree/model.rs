use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest residue cardinality whose digits render as single base-36 characters.
pub const MAX_Q: u32 = 35;

/// The `(q+1)`-regular tree truncated at distance `depth` from the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeModel {
    q: u32,
    depth: u32,
}

/// A vertex `s₁s₂⋯s_n`, with `s₁ ∈ 0..=q` and `s_i ∈ 0..q` afterwards.
/// The empty address is the origin; the ray `0, 00, 000, …` points to the marked end.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeVertex(pub SmallVec<[u8; 16]>);

/// A finite formal sum of vertices with integer weights.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct VertexSum {
    terms: BTreeMap<TreeVertex, i64>,
}

impl TreeModel {
    pub fn new(q: u32, depth: u32) -> Result<Self> {
        if !(2..=MAX_Q).contains(&q) {
            return Err(Error::ConfigError(format!(
                "q must lie in 2..={MAX_Q}, got {q}"
            )));
        }
        if depth < 2 {
            return Err(Error::ConfigError(format!(
                "depth must be at least 2, got {depth}"
            )));
        }
        Ok(TreeModel { q, depth })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn origin(&self) -> TreeVertex {
        TreeVertex::origin()
    }

    /// Validates an address against the digit ranges and the truncation depth.
    pub fn vertex(&self, digits: &[u8]) -> Result<TreeVertex> {
        if digits.len() > self.depth as usize {
            return Err(Error::BoundaryClipped(render(digits)));
        }
        for (i, &d) in digits.iter().enumerate() {
            let bound = if i == 0 { self.q } else { self.q - 1 };
            if d as u32 > bound {
                return Err(Error::ConfigError(format!(
                    "digit {d} at position {} exceeds {bound}",
                    i + 1
                )));
            }
        }
        Ok(TreeVertex(SmallVec::from_slice(digits)))
    }

    pub fn parse_vertex(&self, s: &str) -> Result<TreeVertex> {
        let v: TreeVertex = s.parse()?;
        self.vertex(&v.0)
    }

    /// All vertices with address length at most `max_len`, shortest first.
    pub fn vertices(&self, max_len: u32) -> Vec<TreeVertex> {
        let max_len = max_len.min(self.depth);
        let mut out = vec![TreeVertex::origin()];
        let mut layer = vec![TreeVertex::origin()];
        for _ in 0..max_len {
            let mut next = vec![];
            for v in &layer {
                let top = if v.is_origin() { self.q } else { self.q - 1 };
                for d in 0..=top {
                    next.push(v.child(d as u8));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Vertices whose distance to the truncation boundary is at least `margin`.
    pub fn interior(&self, margin: u32) -> Vec<TreeVertex> {
        self.vertices(self.depth.saturating_sub(margin))
    }
}

fn digit_char(d: u8) -> char {
    std::char::from_digit(d as u32, 36).expect("digit below 36")
}

fn render(digits: &[u8]) -> String {
    if digits.is_empty() {
        return "-".to_string();
    }
    digits.iter().map(|&d| digit_char(d)).collect()
}

impl TreeVertex {
    pub fn origin() -> Self {
        TreeVertex(SmallVec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_origin(&self) -> bool {
        self.0.is_empty()
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn child(&self, d: u8) -> Self {
        let mut v = self.0.clone();
        v.push(d);
        TreeVertex(v)
    }

    pub fn parent(&self) -> Option<Self> {
        if self.0.is_empty() {
            return None;
        }
        Some(TreeVertex(SmallVec::from_slice(
            &self.0[..self.0.len() - 1],
        )))
    }

    /// Length of the longest all-zero prefix.
    pub fn zero_prefix(&self) -> usize {
        self.0.iter().take_while(|&&d| d == 0).count()
    }

    /// Horocycle level relative to the marked end: `n − 2·(zero prefix)`.
    pub fn level(&self) -> i64 {
        self.len() as i64 - 2 * self.zero_prefix() as i64
    }

    /// Whether the vertex lies on the marked apartment `{0^k} ∪ {1·0^k}`.
    pub fn on_apartment(&self) -> bool {
        match self.0.split_first() {
            None => true,
            Some((&first, rest)) => (first == 0 || first == 1) && rest.iter().all(|&d| d == 0),
        }
    }

    /// Graph distance between two vertices.
    pub fn distance(&self, other: &Self) -> usize {
        let common = self
            .0
            .iter()
            .zip(other.0.iter())
            .take_while(|(a, b)| a == b)
            .count();
        self.len() + other.len() - 2 * common
    }

    /// Address string: base-36 digits, `-` for the origin.
    pub fn address(&self) -> String {
        render(&self.0)
    }
}

impl fmt::Display for TreeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.address())
    }
}

impl fmt::Debug for TreeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v[{}]", self.address())
    }
}

impl FromStr for TreeVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(TreeVertex::origin());
        }
        s.chars()
            .map(|c| {
                c.to_digit(36)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::ParseError(format!("bad address digit {c:?}")))
            })
            .collect::<Result<SmallVec<_>>>()
            .map(TreeVertex)
    }
}

impl VertexSum {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `δ_v`.
    pub fn delta(v: TreeVertex) -> Self {
        Self::monomial(v, 1)
    }

    pub fn monomial(v: TreeVertex, c: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(v, c);
        out
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

    pub fn terms(&self) -> impl Iterator<Item = (&TreeVertex, i64)> {
        self.terms.iter().map(|(v, c)| (v, *c))
    }

    pub fn support(&self) -> impl Iterator<Item = &TreeVertex> {
        self.terms.keys()
    }

    pub fn coeff(&self, v: &TreeVertex) -> i64 {
        self.terms.get(v).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, v: TreeVertex, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(v.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&v);
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: i64) {
        for (v, d) in other.terms() {
            self.add_term(v.clone(), d * c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, 1);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, -1);
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Extends `f` linearly.
    pub fn map_linear(&self, mut f: impl FnMut(&TreeVertex) -> Result<VertexSum>) -> Result<Self> {
        let mut out = Self::zero();
        for (v, c) in self.terms() {
            out.add_scaled(&f(v)?, c);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("vertex sums serialize")
    }
}

impl FromIterator<TreeVertex> for VertexSum {
    fn from_iter<I: IntoIterator<Item = TreeVertex>>(iter: I) -> Self {
        let mut out = Self::zero();
        for v in iter {
            out.add_term(v, 1);
        }
        out
    }
}

impl Serialize for VertexSum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (v, c) in &self.terms {
            map.serialize_entry(&v.address(), c)?;
        }
        map.end()
    }
}

impl fmt::Display for VertexSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(v, c)| format!("{c}·[{v}]"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for VertexSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn addresses_round_trip() {
        let t = TreeModel::new(3, 4).unwrap();
        let v = t.parse_vertex("302").unwrap();
        assert_eq!(v.address(), "302");
        assert_eq!(t.parse_vertex("-").unwrap(), t.origin());
        assert!(t.parse_vertex("33").is_err());
        assert!(matches!(
            t.parse_vertex("00000"),
            Err(Error::BoundaryClipped(_))
        ));
        assert!(TreeModel::new(1, 4).is_err());
        assert!(TreeModel::new(2, 1).is_err());
    }

    #[test]
    fn vertex_counts() {
        let t = TreeModel::new(2, 5).unwrap();
        assert_eq!(t.vertices(0).len(), 1);
        assert_eq!(t.vertices(1).len(), 4);
        assert_eq!(t.vertices(2).len(), 1 + 3 + 6);
        assert_eq!(t.interior(2).len(), t.vertices(3).len());
    }

    #[test]
    fn levels_and_apartment() {
        let v = |s: &str| s.parse::<TreeVertex>().unwrap();
        assert_eq!(v("-").level(), 0);
        assert_eq!(v("00").level(), -2);
        assert_eq!(v("2").level(), 1);
        assert_eq!(v("01").level(), 0);
        assert!(v("100").on_apartment());
        assert!(!v("20").on_apartment());
        assert_eq!(v("012").distance(&v("1")), 4);
    }

    #[test]
    fn json_rendering() {
        let s: VertexSum = ["1", "2", "1"].iter().map(|a| a.parse().unwrap()).collect();
        assert_eq!(s.to_json(), r#"{"1":2,"2":1}"#);
        assert_eq!(
            VertexSum::delta(TreeVertex::origin()).to_json(),
            r#"{"-":1}"#
        );
    }
}
