use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::lattice::LatticeSet;
use crate::sets::IntSet;

/// Unordered index pair `{i, j}` stored with `i ≤ j`.
pub type Pair = (usize, usize);

/// Labeled pairwise-sum structure of a set: `class(i, j) == class(p, q)`
/// exactly when `x_i + x_j = x_p + x_q`.
///
/// Class ids follow the order of the sums themselves, so two tables built
/// from the same labeled set are identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumTable {
    k: usize,
    class: Vec<u32>,
    class_sizes: Vec<u32>,
}

impl SumTable {
    fn from_keys<K: Ord>(k: usize, key: impl Fn(usize, usize) -> K) -> Self {
        let mut groups: BTreeMap<K, Vec<Pair>> = BTreeMap::new();
        for i in 0..k {
            for j in i..k {
                groups.entry(key(i, j)).or_default().push((i, j));
            }
        }
        let mut class = vec![0u32; k * k];
        let mut class_sizes = Vec::with_capacity(groups.len());
        for (id, pairs) in groups.into_values().enumerate() {
            class_sizes.push(pairs.len() as u32);
            for (i, j) in pairs {
                class[i * k + j] = id as u32;
                class[j * k + i] = id as u32;
            }
        }
        SumTable {
            k,
            class,
            class_sizes,
        }
    }

    pub fn from_int_set(a: &IntSet) -> Self {
        let e = a.elements();
        Self::from_keys(e.len(), |i, j| e[i] as i128 + e[j] as i128)
    }

    pub fn from_lattice(s: &LatticeSet) -> Self {
        let p = s.points();
        Self::from_keys(p.len(), |i, j| {
            p[i].iter()
                .zip(&p[j])
                .map(|(&x, &y)| x as i128 + y as i128)
                .collect::<Vec<_>>()
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of distinct pairwise sums, i.e. `|2A|`.
    pub fn sum_count(&self) -> usize {
        self.class_sizes.len()
    }

    #[inline]
    pub fn class(&self, i: usize, j: usize) -> u32 {
        self.class[i * self.k + j]
    }

    /// Number of unordered pairs sharing a sum class.
    #[inline]
    pub fn class_size(&self, c: u32) -> u32 {
        self.class_sizes[c as usize]
    }

    /// Sorted multiplicities of the sums element `i` takes part in.
    pub fn fingerprint(&self, i: usize) -> Vec<u32> {
        let mut f: Vec<u32> = (0..self.k)
            .map(|j| self.class_size(self.class(i, j)))
            .collect();
        f.sort_unstable();
        f
    }

    /// Pairs grouped by sum class, each group sorted.
    pub(crate) fn classes(&self) -> Vec<Vec<Pair>> {
        let mut out = vec![Vec::new(); self.class_sizes.len()];
        for i in 0..self.k {
            for j in i..self.k {
                out[self.class(i, j) as usize].push((i, j));
            }
        }
        out
    }

    pub fn pattern(&self) -> QuadruplePattern {
        let mut equalities = Vec::new();
        for group in self.classes() {
            for (x, &p) in group.iter().enumerate() {
                for &q in &group[x + 1..] {
                    equalities.push((p, q));
                }
            }
        }
        equalities.sort_unstable();
        QuadruplePattern {
            k: self.k,
            equalities,
        }
    }

    /// A generating set for the relation lattice: within each sum class the
    /// first pair minus every other pair. Spans the same lattice as all
    /// identities of the pattern.
    pub(crate) fn relation_generators(&self) -> Vec<Vec<i64>> {
        let mut rows = Vec::new();
        for group in self.classes() {
            let Some((&first, rest)) = group.split_first() else {
                continue;
            };
            for &other in rest {
                rows.push(relation_vector(self.k, first, other));
            }
        }
        rows
    }
}

/// `e_i + e_j − e_p − e_q` for the identity `{i,j} ~ {p,q}`.
pub(crate) fn relation_vector(k: usize, (i, j): Pair, (p, q): Pair) -> Vec<i64> {
    let mut v = vec![0i64; k];
    v[i] += 1;
    v[j] += 1;
    v[p] -= 1;
    v[q] -= 1;
    v
}

/// Every nontrivial identity `a_i + a_j = a_p + a_q` of a labeled set, each
/// stored once as `({i,j}, {p,q})` with `{i,j} < {p,q}`, in sorted order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct QuadruplePattern {
    pub k: usize,
    pub equalities: Vec<(Pair, Pair)>,
}

impl QuadruplePattern {
    pub fn is_empty(&self) -> bool {
        self.equalities.is_empty()
    }

    pub fn len(&self) -> usize {
        self.equalities.len()
    }
}

impl fmt::Display for QuadruplePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .equalities
            .iter()
            .map(|((i, j), (p, q))| format!("{{{i},{j}}}~{{{p},{q}}}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The quadruple pattern of an integer set, labels in increasing order.
pub fn quadruple_pattern(a: &IntSet) -> QuadruplePattern {
    SumTable::from_int_set(a).pattern()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[i64]) -> IntSet {
        IntSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn pattern_examples() {
        assert!(quadruple_pattern(&set(&[0, 1, 3])).is_empty());
        let p = quadruple_pattern(&set(&[0, 1, 2]));
        assert_eq!(p.equalities, vec![((0, 2), (1, 1))]);
        let p = quadruple_pattern(&set(&[0, 1, 2, 3]));
        assert_eq!(
            p.equalities,
            vec![((0, 2), (1, 1)), ((0, 3), (1, 2)), ((1, 3), (2, 2))]
        );
        assert_eq!(p.to_string(), "{0,2}~{1,1} {0,3}~{1,2} {1,3}~{2,2}");
    }

    #[test]
    fn pattern_is_presentation_independent() {
        let a = set(&[0, 1, 2, 5]);
        let shifted = a.affine_image(3, -7).unwrap();
        assert_eq!(quadruple_pattern(&a), quadruple_pattern(&shifted));
    }

    #[test]
    fn table_counts_sums() {
        let t = SumTable::from_int_set(&set(&[0, 1, 2, 3, 4, 7, 14, 28]));
        assert_eq!(t.sum_count(), 26);
        assert_eq!(t.fingerprint(0).len(), 8);
    }

    #[test]
    fn lattice_table_matches_line() {
        let a = set(&[0, 2, 3, 7]);
        let line = LatticeSet::from_int_set(&a);
        assert_eq!(SumTable::from_lattice(&line), SumTable::from_int_set(&a));
    }
}
