//! Backtracking search for Freiman isomorphisms of order 2.

use crate::iso::pattern::SumTable;
use crate::sets::IntSet;

/// Partial bijection between the sum classes of two tables.
///
/// Assigning element `x ↦ y` forces class `(x, z)` of the source onto class
/// `(y, φ(z))` of the target for every assigned `z`; the map must stay
/// injective in both directions, which is exactly the order-2 isomorphism
/// condition restricted to the assigned elements.
pub(crate) struct ClassMap {
    forward: Vec<Option<u32>>,
    backward: Vec<Option<u32>>,
    trail: Vec<u32>,
}

impl ClassMap {
    pub(crate) fn new(source_classes: usize, target_classes: usize) -> Self {
        ClassMap {
            forward: vec![None; source_classes],
            backward: vec![None; target_classes],
            trail: Vec::new(),
        }
    }

    pub(crate) fn mark(&self) -> usize {
        self.trail.len()
    }

    /// Binds source class `s` to target class `t`; false on conflict.
    pub(crate) fn bind(&mut self, s: u32, t: u32) -> bool {
        match (self.forward[s as usize], self.backward[t as usize]) {
            (Some(f), _) => f == t,
            (None, Some(_)) => false,
            (None, None) => {
                self.forward[s as usize] = Some(t);
                self.backward[t as usize] = Some(s);
                self.trail.push(s);
                true
            }
        }
    }

    pub(crate) fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let s = self.trail.pop().unwrap();
            let t = self.forward[s as usize].take().unwrap();
            self.backward[t as usize] = None;
        }
    }
}

struct Search<'a> {
    a: &'a SumTable,
    b: &'a SumTable,
    candidates: Vec<Vec<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
    classes: ClassMap,
}

impl Search<'_> {
    fn extend(&mut self, x: usize) -> bool {
        if x == self.a.k() {
            return true;
        }
        for ci in 0..self.candidates[x].len() {
            let y = self.candidates[x][ci];
            if self.used[y] {
                continue;
            }
            let mark = self.classes.mark();
            self.image[x] = y;
            let consistent = (0..=x).all(|z| {
                let yz = if z == x { y } else { self.image[z] };
                self.classes.bind(self.a.class(x, z), self.b.class(y, yz))
            });
            if consistent {
                self.used[y] = true;
                if self.extend(x + 1) {
                    return true;
                }
                self.used[y] = false;
            }
            self.classes.undo(mark);
        }
        false
    }
}

/// Finds the lexicographically first index bijection `φ` with
/// `φ(i) = witness[i]` preserving all pairwise-sum coincidences both ways.
pub fn find_isomorphism(a: &SumTable, b: &SumTable) -> Option<Vec<usize>> {
    let k = a.k();
    if k != b.k() || a.sum_count() != b.sum_count() {
        return None;
    }
    let fa: Vec<Vec<u32>> = (0..k).map(|i| a.fingerprint(i)).collect();
    let fb: Vec<Vec<u32>> = (0..k).map(|i| b.fingerprint(i)).collect();
    let mut sorted_a = fa.clone();
    let mut sorted_b = fb.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    let candidates = fa
        .iter()
        .map(|f| (0..k).filter(|&y| &fb[y] == f).collect())
        .collect();
    let mut search = Search {
        a,
        b,
        candidates,
        image: vec![0; k],
        used: vec![false; k],
        classes: ClassMap::new(a.sum_count(), b.sum_count()),
    };
    search.extend(0).then_some(search.image)
}

/// Witness bijection between two integer sets, if one exists. `witness[i]`
/// is the index in `b` of the image of the `i`-th smallest element of `a`.
pub fn isomorphism(a: &IntSet, b: &IntSet) -> Option<Vec<usize>> {
    find_isomorphism(&SumTable::from_int_set(a), &SumTable::from_int_set(b))
}

pub fn is_isomorphic(a: &IntSet, b: &IntSet) -> bool {
    isomorphism(a, b).is_some()
}
