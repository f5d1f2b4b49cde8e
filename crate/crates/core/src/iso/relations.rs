//! Relation lattice, Freiman dimension, and the universal model.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::iso::pattern::{relation_vector, SumTable};
use crate::lattice::LatticeSet;
use crate::linalg;
use crate::sets::IntSet;

/// Integer row lattice spanned by `e_i + e_j − e_p − e_q` over all identities
/// of a set's quadruple pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationLattice {
    pub k: usize,
    pub basis: Vec<Vec<i64>>,
    pub rank: usize,
}

impl RelationLattice {
    pub fn of(a: &IntSet) -> Self {
        Self::from_table(&SumTable::from_int_set(a))
    }

    pub fn from_table(table: &SumTable) -> Self {
        let pattern = table.pattern();
        let basis: Vec<Vec<i64>> = pattern
            .equalities
            .iter()
            .map(|&(p, q)| relation_vector(table.k(), p, q))
            .collect();
        let rank = linalg::rank(&basis);
        RelationLattice {
            k: table.k(),
            basis,
            rank,
        }
    }

    /// `k − 1 − rank`, zero for a single point.
    pub fn corank(&self) -> usize {
        self.k.saturating_sub(1) - self.rank
    }
}

/// Freiman dimension computed from a sum table.
pub fn dimension_of(table: &SumTable) -> usize {
    if table.k() <= 1 {
        return 0;
    }
    table.k() - 1 - linalg::rank(&table.relation_generators())
}

/// `d(A) = k − 1 − rank R(A)`: the largest affine dimension of an image of
/// `A` under an order-2 isomorphism.
pub fn freiman_dimension(a: &IntSet) -> usize {
    dimension_of(&SumTable::from_int_set(a))
}

/// Realizes the torsion-free quotient of `Z^k` by the saturated relation
/// lattice as a labeled point set in `Z^{d(A)}`.
///
/// `points[i]` is the image of the `i`-th label; the first label sits at the
/// origin. The image has exactly the identities of the input, nothing more.
pub fn universal_model_of(table: &SumTable) -> Result<LatticeSet> {
    let k = table.k();
    if k < 2 {
        return Err(Error::TooSmall(k));
    }
    // Sum-zero vectors have coordinates in the basis e_i − e_0 (i ≥ 1) equal to
    // their own coordinates 1..k, so dropping column 0 changes basis.
    let rows: Vec<Vec<i64>> = table
        .relation_generators()
        .into_iter()
        .map(|mut r| {
            r.remove(0);
            r
        })
        .collect();
    let echelon = linalg::column_echelon(&rows, k - 1);
    let d = k - 1 - echelon.rank;
    let mut points = vec![vec![0i64; d]];
    for i in 0..k - 1 {
        let coords = echelon
            .quotient_coordinates(i)
            .iter()
            .map(|&x| i64::try_from(x).map_err(|_| Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        points.push(coords);
    }
    LatticeSet::new(d, points)
}

pub fn universal_model(a: &IntSet) -> Result<LatticeSet> {
    universal_model_of(&SumTable::from_int_set(a))
}
