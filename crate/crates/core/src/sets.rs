//! Finite sets of integers and their sumsets.
//!
//! [`IntSet`] is the central object: a non-empty, strictly increasing list of
//! integers whose magnitudes stay within `2^62`. Every arithmetic step that
//! could leave that range is checked and reported as [`Error::Overflow`].

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest admissible magnitude of any element or coordinate.
pub const MAX_MAGNITUDE: i64 = 1 << 62;

pub(crate) fn check_magnitude(x: i64) -> Result<i64> {
    if x.unsigned_abs() > MAX_MAGNITUDE as u64 {
        Err(Error::Overflow)
    } else {
        Ok(x)
    }
}

pub(crate) fn checked_add(x: i64, y: i64) -> Result<i64> {
    x.checked_add(y)
        .ok_or(Error::Overflow)
        .and_then(check_magnitude)
}

pub(crate) fn checked_mul(x: i64, y: i64) -> Result<i64> {
    x.checked_mul(y)
        .ok_or(Error::Overflow)
        .and_then(check_magnitude)
}

/// A finite, non-empty, strictly increasing set of integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct IntSet {
    elements: Vec<i64>,
}

impl IntSet {
    /// Builds a set from elements that are already strictly increasing.
    pub fn new(elements: Vec<i64>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::Empty);
        }
        for &x in &elements {
            check_magnitude(x)?;
        }
        if let Some(w) = elements.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing {
                prev: w[0],
                next: w[1],
            });
        }
        Ok(IntSet { elements })
    }

    /// Sorts and deduplicates arbitrary input.
    pub fn from_unsorted(mut elements: Vec<i64>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        IntSet::new(elements)
    }

    /// The interval `{0, 1, ..., k-1}`.
    pub fn interval(k: usize) -> Self {
        assert!(k >= 1, "interval needs at least one element");
        IntSet {
            elements: (0..k as i64).collect(),
        }
    }

    pub(crate) fn from_sorted_unchecked(elements: Vec<i64>) -> Self {
        debug_assert!(!elements.is_empty());
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        IntSet { elements }
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn min_element(&self) -> i64 {
        self.elements[0]
    }

    pub fn max_element(&self) -> i64 {
        self.elements[self.elements.len() - 1]
    }

    /// `max - min`.
    pub fn diameter(&self) -> i64 {
        self.max_element() - self.min_element()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.elements.iter().copied()
    }

    /// `self ∪ {x}`.
    pub fn with(&self, x: i64) -> Result<Self> {
        check_magnitude(x)?;
        match self.elements.binary_search(&x) {
            Ok(_) => Ok(self.clone()),
            Err(pos) => {
                let mut elements = self.elements.clone();
                elements.insert(pos, x);
                Ok(IntSet { elements })
            }
        }
    }

    /// The image under `x ↦ scale·x + shift`, with `scale ≠ 0`.
    pub fn affine_image(&self, scale: i64, shift: i64) -> Result<Self> {
        if scale == 0 {
            return Err(Error::InvalidParams("affine scale must be non-zero".into()));
        }
        let image = self
            .elements
            .iter()
            .map(|&x| checked_mul(x, scale).and_then(|y| checked_add(y, shift)))
            .collect::<Result<Vec<_>>>()?;
        IntSet::from_unsorted(image)
    }

    pub fn sumset(&self, other: &IntSet) -> Result<IntSet> {
        sumset(self, other)
    }

    /// `2A = A + A`.
    pub fn doubled(&self) -> Result<IntSet> {
        sumset(self, self)
    }

    /// Comma-separated elements without braces, e.g. `0,1,3`.
    pub fn to_csv(&self) -> String {
        let parts: Vec<String> = self.elements.iter().map(|x| x.to_string()).collect();
        parts.join(",")
    }
}

impl TryFrom<Vec<i64>> for IntSet {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        IntSet::new(v)
    }
}

impl From<IntSet> for Vec<i64> {
    fn from(s: IntSet) -> Vec<i64> {
        s.elements
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_csv())
    }
}

/// Accepts `{a,b,c}`, bare `a,b,c`, or a JSON array `[a,b,c]`.
/// Elements must be given in strictly increasing order.
impl FromStr for IntSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('[') {
            let v: Vec<i64> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
            return IntSet::new(v);
        }
        let inner = match (s.strip_prefix('{'), s.ends_with('}')) {
            (Some(rest), true) => &rest[..rest.len() - 1],
            (None, false) => s,
            _ => return Err(Error::Parse(format!("unbalanced braces in {s:?}"))),
        };
        if inner.trim().is_empty() {
            return Err(Error::Empty);
        }
        let elements = inner
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("{tok:?} is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        IntSet::new(elements)
    }
}

/// `{x + y : x ∈ a, y ∈ b}`.
///
/// Each `x ∈ a` contributes the sorted row `x + b`; the rows are merged with a
/// heap so the output comes out sorted without hashing.
pub fn sumset(a: &IntSet, b: &IntSet) -> Result<IntSet> {
    let (rows, cols) = (a.elements(), b.elements());
    let mut heap = BinaryHeap::with_capacity(rows.len());
    for (r, &x) in rows.iter().enumerate() {
        heap.push(Reverse((checked_add(x, cols[0])?, r, 0usize)));
    }
    let mut out: Vec<i64> = Vec::with_capacity(rows.len() * cols.len());
    while let Some(Reverse((value, r, c))) = heap.pop() {
        if out.last() != Some(&value) {
            out.push(value);
        }
        if c + 1 < cols.len() {
            heap.push(Reverse((checked_add(rows[r], cols[c + 1])?, r, c + 1)));
        }
    }
    Ok(IntSet::from_sorted_unchecked(out))
}

/// `T = |2A|` together with the exact doubling coefficient `T/k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoublingStats {
    pub k: usize,
    pub t: usize,
    #[serde(serialize_with = "ratio_as_string")]
    pub coefficient: Ratio<u64>,
}

fn ratio_as_string<S: Serializer>(r: &Ratio<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub fn doubling_stats(a: &IntSet) -> Result<DoublingStats> {
    let t = a.doubled()?.len();
    let k = a.len();
    Ok(DoublingStats {
        k,
        t,
        coefficient: Ratio::new(t as u64, k as u64),
    })
}

/// `{max(b) − x : x ∈ b}`.
pub fn sym(b: &IntSet) -> IntSet {
    let top = b.max_element();
    let reflected: Vec<i64> = b.elements.iter().rev().map(|&x| top - x).collect();
    IntSet::from_sorted_unchecked(reflected)
}

/// Canonical representative under affine maps `x ↦ px + q`: minimum moved to
/// zero, differences divided by their gcd, then the lexicographically smaller
/// of the set and its reflection.
pub fn normalize(a: &IntSet) -> IntSet {
    let lo = a.min_element();
    let g = a.elements.iter().fold(0i64, |g, &x| g.gcd(&(x - lo)));
    if g == 0 {
        return IntSet::from_sorted_unchecked(vec![0]);
    }
    let scaled = IntSet::from_sorted_unchecked(a.elements.iter().map(|&x| (x - lo) / g).collect());
    let reflected = sym(&scaled);
    if reflected.elements < scaled.elements {
        reflected
    } else {
        scaled
    }
}

/// True when consecutive differences are all equal; sets of size ≤ 2 qualify.
pub fn is_arithmetic_progression(a: &IntSet) -> bool {
    let e = a.elements();
    e.len() <= 2 || e.windows(2).all(|w| w[1] - w[0] == e[1] - e[0])
}
