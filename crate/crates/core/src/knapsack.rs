//! Exact feasibility of `a_1 x_1 + … + a_m x_m = b` with `x_i ∈ {0, 1}` and
//! distinct positive `a_i`.
//!
//! The baseline is a forward reachable-sum DP over a packed bit array. Items
//! are processed in increasing order; as soon as the reachable set of a prefix
//! contains a run `[L, R]` that every later item can extend without leaving a
//! gap, all of `[L, R + rest]` is known to be reachable and the remaining items
//! are placed greedily. Witnesses are rebuilt by re-running the prefix DP.

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::sets::MAX_MAGNITUDE;

/// Largest total of summands accepted.
pub const MAX_TOTAL: u64 = 1 << 40;
/// Largest bit table the DP will allocate (512 MiB).
pub const MAX_TABLE_BITS: u64 = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instance {
    summands: Vec<u64>,
    target: u64,
}

#[derive(Deserialize)]
struct JsonInstance {
    a: Vec<u64>,
    b: u64,
}

impl Instance {
    /// Summands must be distinct and positive; any order is accepted and
    /// solution indices refer to the order given.
    pub fn new(summands: Vec<u64>, target: u64) -> Result<Self> {
        if summands.contains(&0) {
            return Err(Error::InvalidParams("summands must be positive".into()));
        }
        let distinct: BTreeSet<u64> = summands.iter().copied().collect();
        if distinct.len() != summands.len() {
            return Err(Error::InvalidParams("summands must be distinct".into()));
        }
        let total = summands
            .iter()
            .try_fold(0u64, |acc, &x| acc.checked_add(x))
            .filter(|&s| s <= MAX_MAGNITUDE as u64)
            .ok_or(Error::Overflow)?;
        if target > MAX_MAGNITUDE as u64 || total == 0 && !summands.is_empty() {
            return Err(Error::Overflow);
        }
        Ok(Instance { summands, target })
    }

    /// JSON `{"a":[...],"b":N}`, or whitespace-separated integers where the
    /// last one is the target.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.starts_with('{') {
            let raw: JsonInstance =
                serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
            return Instance::new(raw.a, raw.b);
        }
        let mut nums = trimmed
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u64>()
                    .map_err(|_| Error::Parse(format!("{tok:?} is not a non-negative integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        let target = nums.pop().ok_or(Error::Parse("empty instance".into()))?;
        Instance::new(nums, target)
    }

    pub fn summands(&self) -> &[u64] {
        &self.summands
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    pub fn total(&self) -> u64 {
        self.summands.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    /// Indices into the instance's summands, ascending.
    pub selection: Vec<usize>,
}

impl Solution {
    pub fn sum(&self, inst: &Instance) -> u64 {
        self.selection.iter().map(|&i| inst.summands[i]).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Feasible(Solution),
    Infeasible,
}

impl Outcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Outcome::Feasible(_))
    }
}

impl Serialize for Outcome {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            feasible: bool,
            selection: &'a [usize],
        }
        match self {
            Outcome::Feasible(sol) => Wire {
                feasible: true,
                selection: &sol.selection,
            },
            Outcome::Infeasible => Wire {
                feasible: false,
                selection: &[],
            },
        }
        .serialize(s)
    }
}

/// Growable bit array of reachable sums `0..len`.
struct Reach {
    words: Vec<u64>,
    len: u64,
}

impl Reach {
    fn new() -> Self {
        Reach {
            words: vec![1],
            len: 1,
        }
    }

    fn grow(&mut self, len: u64) -> Result<()> {
        if len > MAX_TABLE_BITS {
            return Err(Error::Capacity(format!(
                "needs a {len}-bit reachable-sum table, limit is {MAX_TABLE_BITS}"
            )));
        }
        if len > self.len {
            self.words.resize(len.div_ceil(64) as usize, 0);
            self.len = len;
        }
        Ok(())
    }

    #[inline]
    fn get(&self, i: u64) -> bool {
        i < self.len && (self.words[(i / 64) as usize] >> (i % 64)) & 1 == 1
    }

    /// `reach |= reach << shift`, truncated to `len` bits.
    fn shift_or(&mut self, shift: u64) {
        let ws = (shift / 64) as usize;
        let bs = (shift % 64) as u32;
        let n = self.words.len();
        for w in (ws..n).rev() {
            let src = w - ws;
            let mut v = self.words[src] << bs;
            if bs > 0 && src > 0 {
                v |= self.words[src - 1] >> (64 - bs);
            }
            self.words[w] |= v;
        }
        let tail = self.len % 64;
        if tail != 0 {
            self.words[n - 1] &= (1u64 << tail) - 1;
        }
    }

    /// Longest run of reachable sums as `(start, end)` inclusive.
    fn longest_run(&self) -> (u64, u64) {
        let (mut best, mut best_len) = ((0, 0), 0u64);
        let (mut start, mut run) = (0u64, 0u64);
        for (wi, &word) in self.words.iter().enumerate() {
            let base = wi as u64 * 64;
            let valid = (self.len - base).min(64) as u32;
            let mut pos = 0u32;
            while pos < valid {
                let rest = word >> pos;
                let ones = rest.trailing_ones().min(valid - pos);
                if ones > 0 {
                    if run == 0 {
                        start = base + pos as u64;
                    }
                    run += ones as u64;
                    pos += ones;
                    if run > best_len {
                        best_len = run;
                        best = (start, start + run - 1);
                    }
                } else {
                    run = 0;
                    pos += rest.trailing_zeros().min(valid - pos);
                }
            }
        }
        best
    }
}

/// Smallest prefix length after which `target` is reachable, found by
/// re-running the DP over `items[..limit]`.
fn first_prefix_reaching(items: &[(u64, usize)], limit: usize, target: u64) -> Result<usize> {
    let mut reach = Reach::new();
    reach.grow(target + 1)?;
    if reach.get(target) {
        return Ok(0);
    }
    for (j, &(a, _)) in items[..limit].iter().enumerate() {
        reach.shift_or(a);
        if reach.get(target) {
            return Ok(j + 1);
        }
    }
    unreachable!("target was reachable within the prefix")
}

/// Rebuilds a subset of `items[..limit]` summing to `target`.
fn reconstruct(items: &[(u64, usize)], mut limit: usize, mut target: u64) -> Result<Vec<usize>> {
    let mut picked = Vec::new();
    while target > 0 {
        let p = first_prefix_reaching(items, limit, target)?;
        let (a, idx) = items[p - 1];
        picked.push(idx);
        target -= a;
        limit = p - 1;
    }
    Ok(picked)
}

/// Solves the 0-1 equation exactly. Infeasibility is a normal outcome.
pub fn solve(inst: &Instance) -> Result<Outcome> {
    let total = inst.total();
    if total > MAX_TOTAL {
        return Err(Error::Capacity(format!(
            "summands total {total} exceeds {MAX_TOTAL}"
        )));
    }
    if inst.target > total {
        return Ok(Outcome::Infeasible);
    }
    // Subset sums are symmetric under complement; work with the smaller side.
    let complemented = total - inst.target < inst.target;
    let t = if complemented {
        total - inst.target
    } else {
        inst.target
    };

    let mut items: Vec<(u64, usize)> = inst
        .summands
        .iter()
        .enumerate()
        .filter(|&(_, &a)| a <= t)
        .map(|(i, &a)| (a, i))
        .collect();
    items.sort_unstable();

    let mut picked = None;
    if t == 0 {
        picked = Some(Vec::new());
    }
    let suffix: Vec<u64> = {
        let mut s = vec![0u64; items.len() + 1];
        for j in (0..items.len()).rev() {
            s[j] = s[j + 1] + items[j].0;
        }
        s
    };
    let mut reach = Reach::new();
    let mut prefix = 0u64;
    let mut last_chain_len = 0u64;
    let mut j = 0;
    while picked.is_none() && j < items.len() {
        let a = items[j].0;
        prefix += a;
        reach.grow(prefix.min(t) + 1)?;
        reach.shift_or(a);
        j += 1;
        if reach.get(t) {
            picked = Some(reconstruct(&items, j, t)?);
            break;
        }
        if j == items.len() {
            break;
        }
        let (lo, hi) = reach.longest_run();
        let run = hi - lo + 1;
        if run < items[j].0 || run < 2 * last_chain_len || t < lo || t > hi + suffix[j] {
            continue;
        }
        last_chain_len = run;
        let mut len = run;
        let chain_ok = items[j..].iter().all(|&(x, _)| {
            let ok = x <= len;
            len += x;
            ok
        });
        if !chain_ok {
            continue;
        }
        let mut cur = t;
        let mut chosen = Vec::new();
        for &(x, idx) in items[j..].iter().rev() {
            if cur >= lo + x {
                cur -= x;
                chosen.push(idx);
            }
        }
        debug_assert!(reach.get(cur));
        chosen.extend(reconstruct(&items, j, cur)?);
        picked = Some(chosen);
    }

    let Some(picked) = picked else {
        return Ok(Outcome::Infeasible);
    };
    let mut selection: Vec<usize> = if complemented {
        let taken: BTreeSet<usize> = picked.into_iter().collect();
        (0..inst.summands.len())
            .filter(|i| !taken.contains(i))
            .collect()
    } else {
        picked
    };
    selection.sort_unstable();
    let sol = Solution { selection };
    debug_assert_eq!(sol.sum(inst), inst.target);
    Ok(Outcome::Feasible(sol))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DensityProfile {
    pub m: usize,
    pub max_a: u64,
    #[serde(serialize_with = "ratio_string")]
    pub density: Ratio<u64>,
    /// `m² ≥ max_a`: a rule of thumb for when sums fill intervals, not a
    /// guarantee of feasibility.
    pub dense: bool,
}

fn ratio_string<S: Serializer>(r: &Ratio<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub fn density_profile(inst: &Instance) -> DensityProfile {
    let m = inst.summands.len();
    let max_a = inst.summands.iter().copied().max().unwrap_or(0);
    let density = if max_a == 0 {
        Ratio::from_integer(0)
    } else {
        Ratio::new(m as u64, max_a)
    };
    let dense = (m as u128) * (m as u128) >= max_a as u128;
    DensityProfile {
        m,
        max_a,
        density,
        dense,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(a: &[u64], b: u64) -> Instance {
        Instance::new(a.to_vec(), b).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            solve(&inst(&[3, 5, 7], 12)).unwrap(),
            Outcome::Feasible(Solution {
                selection: vec![1, 2]
            })
        );
        assert_eq!(solve(&inst(&[3, 5, 7], 1)).unwrap(), Outcome::Infeasible);
        assert_eq!(solve(&inst(&[2, 4, 6], 7)).unwrap(), Outcome::Infeasible);
        assert_eq!(
            solve(&inst(&[2, 4, 6], 0)).unwrap(),
            Outcome::Feasible(Solution { selection: vec![] })
        );
        assert_eq!(solve(&inst(&[2, 4, 6], 13)).unwrap(), Outcome::Infeasible);
        let full = solve(&inst(&[2, 4, 6], 12)).unwrap();
        assert_eq!(
            full,
            Outcome::Feasible(Solution {
                selection: vec![0, 1, 2]
            })
        );
    }

    #[test]
    fn validation_and_parsing() {
        assert!(Instance::new(vec![1, 1], 2).is_err());
        assert!(Instance::new(vec![0, 1], 1).is_err());
        let j = Instance::parse(r#"{"a":[3,5,7],"b":12}"#).unwrap();
        assert_eq!(j, inst(&[3, 5, 7], 12));
        let t = Instance::parse("3 5\n7   12\n").unwrap();
        assert_eq!(t, j);
        assert!(Instance::parse("").is_err());
        assert!(Instance::parse("3 -5 2").is_err());
    }

    #[test]
    fn interval_shortcut_is_exact() {
        // 1..=40 fills [0, 820]; every target must be reachable.
        let a: Vec<u64> = (1..=40).collect();
        for b in [0, 1, 17, 400, 410, 819, 820] {
            let i = inst(&a, b);
            match solve(&i).unwrap() {
                Outcome::Feasible(s) => assert_eq!(s.sum(&i), b),
                Outcome::Infeasible => panic!("{b} should be reachable"),
            }
        }
        // Gap right below a large item: {1,2,4,100}: 8..=99 unreachable.
        let i = inst(&[1, 2, 4, 100], 50);
        assert_eq!(solve(&i).unwrap(), Outcome::Infeasible);
    }

    #[test]
    fn serialization() {
        let o = solve(&inst(&[3, 5, 7], 12)).unwrap();
        assert_eq!(
            serde_json::to_string(&o).unwrap(),
            r#"{"feasible":true,"selection":[1,2]}"#
        );
        assert_eq!(
            serde_json::to_string(&Outcome::Infeasible).unwrap(),
            r#"{"feasible":false,"selection":[]}"#
        );
    }

    #[test]
    fn density_examples() {
        let p = density_profile(&inst(&[3, 5, 7], 1));
        assert_eq!((p.m, p.max_a, p.dense), (3, 7, true));
        assert_eq!(p.density, Ratio::new(3, 7));
        let sparse = density_profile(&inst(&[1_000_000_000, 2_000_000_000], 1));
        assert!(!sparse.dense);
    }

    #[test]
    fn capacity_guard() {
        let i = inst(&[1 << 41, 3], 3);
        assert!(matches!(solve(&i), Err(Error::Capacity(_))));
    }
}
