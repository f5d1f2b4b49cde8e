//! Finite point sets in `Z^d`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::sets::{check_magnitude, checked_add, IntSet};

/// Distinct points of `Z^d`.
///
/// The order of `points` is a labeling: when a lattice set is produced as the
/// image of an [`IntSet`], `points[i]` is the image of the `i`-th smallest
/// element. Equality compares labelings, use [`LatticeSet::sorted_points`] for
/// plain set comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawLattice")]
pub struct LatticeSet {
    dim: usize,
    points: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct RawLattice {
    dim: usize,
    points: Vec<Vec<i64>>,
}

impl TryFrom<RawLattice> for LatticeSet {
    type Error = Error;
    fn try_from(raw: RawLattice) -> Result<Self> {
        LatticeSet::new(raw.dim, raw.points)
    }
}

impl LatticeSet {
    pub fn new(dim: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if points.is_empty() {
            return Err(Error::Empty);
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
            for &x in p {
                check_magnitude(x)?;
            }
        }
        let mut seen = BTreeSet::new();
        for p in &points {
            if !seen.insert(p) {
                return Err(Error::DuplicatePoint(p.clone()));
            }
        }
        Ok(LatticeSet { dim, points })
    }

    /// The set viewed on the line, labels in increasing order.
    pub fn from_int_set(a: &IntSet) -> Self {
        LatticeSet {
            dim: 1,
            points: a.iter().map(|x| vec![x]).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn sorted_points(&self) -> Vec<Vec<i64>> {
        let mut pts = self.points.clone();
        pts.sort();
        pts
    }

    /// Back to an [`IntSet`] when `dim == 1`.
    pub fn to_int_set(&self) -> Option<IntSet> {
        (self.dim == 1)
            .then(|| IntSet::from_unsorted(self.points.iter().map(|p| p[0]).collect()).ok())
            .flatten()
    }

    /// Dimension of the smallest affine subspace containing the points.
    pub fn affine_dimension(&self) -> usize {
        let base = &self.points[0];
        let diffs: Vec<Vec<i64>> = self.points[1..]
            .iter()
            .map(|p| p.iter().zip(base).map(|(x, y)| x - y).collect())
            .collect();
        linalg::rank(&diffs)
    }

    /// `2S = S + S` as a sorted list of points.
    pub fn doubled(&self) -> Result<Vec<Vec<i64>>> {
        let mut sums = BTreeSet::new();
        for (i, p) in self.points.iter().enumerate() {
            for q in &self.points[i..] {
                let s = p
                    .iter()
                    .zip(q)
                    .map(|(&x, &y)| checked_add(x, y))
                    .collect::<Result<Vec<_>>>()?;
                sums.insert(s);
            }
        }
        Ok(sums.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert_eq!(LatticeSet::new(0, vec![vec![]]), Err(Error::ZeroDimension));
        assert_eq!(
            LatticeSet::new(2, vec![vec![0, 0], vec![1]]),
            Err(Error::DimensionMismatch {
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            LatticeSet::new(1, vec![vec![3], vec![3]]),
            Err(Error::DuplicatePoint(vec![3]))
        );
    }

    #[test]
    fn affine_dimension_and_doubling() {
        let tri = LatticeSet::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(tri.affine_dimension(), 2);
        assert_eq!(tri.doubled().unwrap().len(), 6);
        let line = LatticeSet::new(3, vec![vec![0, 0, 0], vec![1, 1, 1], vec![3, 3, 3]]).unwrap();
        assert_eq!(line.affine_dimension(), 1);
        let single = LatticeSet::new(2, vec![vec![4, 4]]).unwrap();
        assert_eq!(single.affine_dimension(), 0);
    }

    #[test]
    fn serde_roundtrip_rejects_duplicates() {
        let s = LatticeSet::new(2, vec![vec![0, 0], vec![2, 1]]).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(serde_json::from_str::<LatticeSet>(&json).unwrap(), s);
        assert!(serde_json::from_str::<LatticeSet>(r#"{"dim":1,"points":[[1],[1]]}"#).is_err());
    }
}
