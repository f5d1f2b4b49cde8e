//! Exact minimization of `V(A)` for one-dimensional sets.

use serde::Serialize;

use crate::enumerate::for_each_subset_with_ends;
use crate::error::{Error, Result};
use crate::iso::{dimension_of, find_isomorphism, ClassMap, SumTable};
use crate::lattice::LatticeSet;
use crate::sets::IntSet;

/// A minimal image certified by exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VolumeResult {
    /// `V(A)`: lattice points in the hull of the best image.
    pub value: u64,
    /// `witness.points()[i]` is the image of the `i`-th smallest element.
    pub witness: LatticeSet,
    /// Every image of diameter below this value was ruled out.
    pub exhausted_bound: u64,
}

impl VolumeResult {
    pub fn witness_set(&self) -> IntSet {
        self.witness
            .to_int_set()
            .expect("volume witnesses are one-dimensional")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum VolumeSearch {
    Found(VolumeResult),
    BoundExceeded { bound: u64 },
}

impl VolumeSearch {
    pub fn found(self) -> Option<VolumeResult> {
        match self {
            VolumeSearch::Found(r) => Some(r),
            VolumeSearch::BoundExceeded { .. } => None,
        }
    }

    pub fn value(&self) -> Option<u64> {
        match self {
            VolumeSearch::Found(r) => Some(r.value),
            VolumeSearch::BoundExceeded { .. } => None,
        }
    }
}

fn singleton() -> VolumeSearch {
    VolumeSearch::Found(VolumeResult {
        value: 1,
        witness: LatticeSet::new(1, vec![vec![0]]).unwrap(),
        exhausted_bound: 0,
    })
}

fn require_line(table: &SumTable) -> Result<()> {
    match dimension_of(table) {
        1 => Ok(()),
        d => Err(Error::NotOneDimensional(d)),
    }
}

/// Assigns images in `[0, diameter]` element by element (input order),
/// keeping the sum-class ↔ sum-value correspondence a partial bijection.
struct ImageSearch<'a> {
    table: &'a SumTable,
    diameter: i64,
    image: Vec<i64>,
    used: Vec<bool>,
    sums: ClassMap,
}

impl ImageSearch<'_> {
    fn new(table: &SumTable, diameter: i64) -> ImageSearch<'_> {
        ImageSearch {
            table,
            diameter,
            image: vec![0; table.k()],
            used: vec![false; diameter as usize + 1],
            sums: ClassMap::new(table.sum_count(), 2 * diameter as usize + 1),
        }
    }

    fn run(&mut self) -> bool {
        self.extend(0)
    }

    fn extend(&mut self, x: usize) -> bool {
        let k = self.table.k();
        let missing_ends =
            usize::from(!self.used[0]) + usize::from(!self.used[self.diameter as usize]);
        if k - x < missing_ends {
            return false;
        }
        if x == k {
            return true;
        }
        // Reflection y ↦ D − y maps solutions to solutions.
        let top = if x == 0 {
            self.diameter / 2
        } else {
            self.diameter
        };
        for v in 0..=top {
            if self.used[v as usize] {
                continue;
            }
            let mark = self.sums.mark();
            self.image[x] = v;
            let consistent = (0..=x).all(|z| {
                let w = if z == x { v } else { self.image[z] };
                self.sums.bind(self.table.class(x, z), (v + w) as u32)
            });
            if consistent {
                self.used[v as usize] = true;
                if self.extend(x + 1) {
                    return true;
                }
                self.used[v as usize] = false;
            }
            self.sums.undo(mark);
        }
        false
    }
}

/// Exact `V(A)` over images in `Z`, by iterative deepening on the image
/// diameter `D = k−1, k, …, bound`. The first diameter admitting a
/// pattern-identical image gives `V = D + 1`.
pub fn volume_exact_1d(a: &IntSet, bound: u64) -> Result<VolumeSearch> {
    let table = SumTable::from_int_set(a);
    volume_exact_of(&table, bound)
}

pub(crate) fn volume_exact_of(table: &SumTable, bound: u64) -> Result<VolumeSearch> {
    let k = table.k();
    if k == 1 {
        return Ok(singleton());
    }
    require_line(table)?;
    for diameter in (k as u64 - 1)..=bound {
        let mut search = ImageSearch::new(table, diameter as i64);
        if search.run() {
            let witness = LatticeSet::new(1, search.image.iter().map(|&x| vec![x]).collect())?;
            return Ok(VolumeSearch::Found(VolumeResult {
                value: diameter + 1,
                witness,
                exhausted_bound: diameter,
            }));
        }
    }
    Ok(VolumeSearch::BoundExceeded { bound })
}

/// Brute-force reference for [`volume_exact_1d`]: scans subsets of
/// `[0, bound]` containing `0` by increasing maximum and returns the first
/// one isomorphic to `a`. Only practical for `k ≤ 7`, `bound ≲ 16`.
pub fn volume_oracle(a: &IntSet, bound: u64) -> Result<VolumeSearch> {
    let table = SumTable::from_int_set(a);
    let k = table.k();
    if k == 1 {
        return Ok(singleton());
    }
    require_line(&table)?;
    for diameter in (k as u64 - 1)..=bound {
        let mut found = None;
        for_each_subset_with_ends(k, diameter as i64, |candidate| {
            let cand = IntSet::new(candidate.to_vec()).expect("subsets are increasing");
            match find_isomorphism(&table, &SumTable::from_int_set(&cand)) {
                Some(w) => {
                    found = Some(w.iter().map(|&j| vec![candidate[j]]).collect::<Vec<_>>());
                    false
                }
                None => true,
            }
        });
        if let Some(points) = found {
            return Ok(VolumeSearch::Found(VolumeResult {
                value: diameter + 1,
                witness: LatticeSet::new(1, points)?,
                exhausted_bound: diameter,
            }));
        }
    }
    Ok(VolumeSearch::BoundExceeded { bound })
}
