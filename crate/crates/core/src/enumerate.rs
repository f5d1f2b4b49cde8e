//! Exhaustive enumeration of small integer sets.
//!
//! Scans visit one representative per affine class: minimum 0, gcd of the
//! elements 1, and not lexicographically larger than its reflection. The work
//! is split into [`Partition`]s keyed by diameter and second element so that
//! workers can run independently and results can be merged in a fixed order.

use num_integer::Integer;
use serde::Serialize;

use crate::sets::IntSet;

/// Calls `f` on every increasing `k`-subset of `[0, diameter]` that contains
/// both `0` and `diameter`, in lexicographic order. Stops when `f` returns
/// false.
pub fn for_each_subset_with_ends(k: usize, diameter: i64, mut f: impl FnMut(&[i64]) -> bool) {
    match k {
        0 => {}
        1 => {
            if diameter == 0 {
                f(&[0]);
            }
        }
        _ => {
            if diameter < k as i64 - 1 {
                return;
            }
            let mut buf = vec![0i64; k];
            buf[k - 1] = diameter;
            fill(&mut buf, 1, 1, diameter, &mut f);
        }
    }
}

/// Chooses `buf[pos..k-1]` from `[lo, top)`; returns false to stop.
fn fill(
    buf: &mut [i64],
    pos: usize,
    lo: i64,
    top: i64,
    f: &mut impl FnMut(&[i64]) -> bool,
) -> bool {
    let k = buf.len();
    if pos == k - 1 {
        return f(buf);
    }
    let remaining = (k - 1 - pos) as i64;
    for v in lo..=top - remaining {
        buf[pos] = v;
        if !fill(buf, pos + 1, v + 1, top, f) {
            return false;
        }
    }
    true
}

/// True for the representative this crate scans: min 0, gcd 1, and no
/// larger than its reflection.
pub fn is_normalized(e: &[i64]) -> bool {
    if e[0] != 0 {
        return false;
    }
    if e.len() == 1 {
        return true;
    }
    let g = e.iter().fold(0i64, |g, x| g.gcd(x));
    if g != 1 {
        return false;
    }
    let top = e[e.len() - 1];
    let reflected = e.iter().rev().map(|&x| top - x);
    e.iter().copied().le(reflected)
}

/// Sets sharing a diameter and second element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Partition {
    pub k: usize,
    pub diameter: i64,
    pub second: i64,
}

impl Partition {
    /// Visits the normalized sets of this partition in lexicographic order.
    pub fn for_each(&self, mut f: impl FnMut(&[i64])) {
        let k = self.k;
        if k == 1 {
            f(&[0]);
            return;
        }
        let mut buf = vec![0i64; k];
        buf[k - 1] = self.diameter;
        if k == 2 {
            if is_normalized(&buf) {
                f(&buf);
            }
            return;
        }
        buf[1] = self.second;
        fill(&mut buf, 2, self.second + 1, self.diameter, &mut |s| {
            if is_normalized(s) {
                f(s);
            }
            true
        });
    }

    pub fn sets(&self) -> Vec<IntSet> {
        let mut out = Vec::new();
        self.for_each(|s| out.push(IntSet::new(s.to_vec()).expect("increasing")));
        out
    }
}

/// All partitions for `k`-sets of diameter at most `max_diameter`, in order.
pub fn partitions(k: usize, max_diameter: i64) -> Vec<Partition> {
    let mut out = Vec::new();
    match k {
        0 => {}
        1 => out.push(Partition {
            k,
            diameter: 0,
            second: 0,
        }),
        2 => {
            if max_diameter >= 1 {
                out.push(Partition {
                    k,
                    diameter: 1,
                    second: 1,
                });
            }
        }
        _ => {
            for diameter in (k as i64 - 1)..=max_diameter {
                // Reflection-canonical sets have second ≤ diameter − (k−2)-th.
                for second in 1..=diameter - (k as i64 - 2) {
                    out.push(Partition {
                        k,
                        diameter,
                        second,
                    });
                }
            }
        }
    }
    out
}

/// Every normalized `k`-set with diameter at most `max_diameter`.
pub fn normalized_sets(k: usize, max_diameter: i64) -> Vec<IntSet> {
    partitions(k, max_diameter)
        .iter()
        .flat_map(Partition::sets)
        .collect()
}
