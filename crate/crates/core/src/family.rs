//! The binary family of extremal sets grown from base sets `B(m)`.
//!
//! A node `B(s)` of size `s < k` has two children: `B' = B(s) ∪ {2^{s−m+1}a}`
//! and `B'' = sym(B')`. Expanding every base set to depth `k − m` gives
//! `2^{k−m}·p_m` leaves, where `p_m` is the number of base sets.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::enumerate::for_each_subset_with_ends;
use crate::error::{Error, Result};
use crate::extremal::{predicted_t, predicted_v, ExtremalParams};
use crate::par::{map_ordered, Threads};
use crate::sets::{checked_mul, sym, IntSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Choice {
    Prime,
    Sym,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyNode {
    pub set: IntSet,
    pub s: usize,
    pub path: Vec<Choice>,
    pub base_index: usize,
}

impl FamilyNode {
    pub fn base(set: IntSet, base_index: usize) -> Self {
        FamilyNode {
            s: set.len(),
            set,
            path: Vec::new(),
            base_index,
        }
    }
}

/// Every `B` with `|B| = m`, `min B = 0`, `max B = m − 1 + b` and
/// `|2B| = 2m − 1 + b`, in lexicographic order.
pub fn enumerate_base_sets(m: usize, b: usize) -> Result<Vec<IntSet>> {
    if m < 3 || b > m - 3 {
        return Err(Error::InvalidParams(format!(
            "requires m ≥ 3 and 0 ≤ b ≤ m−3, got m = {m}, b = {b}"
        )));
    }
    let target = 2 * m - 1 + b;
    let mut out = Vec::new();
    let mut failure = None;
    for_each_subset_with_ends(m, (m - 1 + b) as i64, |s| {
        let set = IntSet::new(s.to_vec()).expect("increasing");
        match set.doubled() {
            Ok(d) if d.len() == target => out.push(set),
            Ok(_) => {}
            Err(e) => {
                failure = Some(e);
                return false;
            }
        }
        true
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// The two children of a node: adjoin `2^{s−m+1}·a`, and reflect that.
pub fn children(node: &FamilyNode, params: &ExtremalParams) -> Result<(FamilyNode, FamilyNode)> {
    if node.s >= params.k {
        return Err(Error::InvalidParams(format!(
            "node already has {} ≥ k = {} elements",
            node.s, params.k
        )));
    }
    if node.s < params.m {
        return Err(Error::InvalidParams(format!(
            "node has {} < m = {} elements",
            node.s, params.m
        )));
    }
    let shift = (node.s - params.m + 1) as u32;
    let scale = 1i64
        .checked_shl(shift)
        .filter(|&x| x > 0)
        .ok_or(Error::Overflow)?;
    let grown = node.set.with(checked_mul(scale, params.a as i64)?)?;
    let reflected = sym(&grown);
    let child = |set: IntSet, choice: Choice| {
        let mut path = node.path.clone();
        path.push(choice);
        FamilyNode {
            s: set.len(),
            set,
            path,
            base_index: node.base_index,
        }
    };
    Ok((child(grown, Choice::Prime), child(reflected, Choice::Sym)))
}

fn expand(node: FamilyNode, params: &ExtremalParams, out: &mut Vec<FamilyNode>) -> Result<()> {
    if node.s == params.k {
        out.push(node);
        return Ok(());
    }
    let (prime, sym) = children(&node, params)?;
    expand(prime, params, out)?;
    expand(sym, params, out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Family {
    pub params: ExtremalParams,
    pub base_sets: Vec<IntSet>,
    /// Leaves in order (base index, then path with prime before sym).
    pub nodes: Vec<FamilyNode>,
    /// Pairs of leaf indices holding the same set; reported, not removed.
    pub duplicates: Vec<(usize, usize)>,
}

/// Expands every base set to size `k`. Base sets are expanded independently
/// and concatenated in base order.
pub fn enumerate_family(params: &ExtremalParams, threads: Threads) -> Result<Family> {
    let base_sets = enumerate_base_sets(params.m, params.b)?;
    let indexed: Vec<(usize, &IntSet)> = base_sets.iter().enumerate().collect();
    let per_base = map_ordered(&indexed, threads, |&(i, set)| {
        let mut out = Vec::new();
        expand(FamilyNode::base(set.clone(), i), params, &mut out).map(|_| out)
    });
    let mut nodes = Vec::new();
    for r in per_base {
        nodes.extend(r?);
    }
    let mut first_seen: BTreeMap<&IntSet, usize> = BTreeMap::new();
    let mut duplicates = Vec::new();
    for (i, n) in nodes.iter().enumerate() {
        if let Some(&j) = first_seen.get(&n.set) {
            duplicates.push((j, i));
        } else {
            first_seen.insert(&n.set, i);
        }
    }
    Ok(Family {
        params: *params,
        base_sets,
        nodes,
        duplicates,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeStats {
    pub t: usize,
    pub max: i64,
    pub t_matches: bool,
    pub max_matches: bool,
}

/// `|2B|` and `max B` per node, checked against the predicted `T` and `V − 1`.
pub fn family_stats(nodes: &[FamilyNode], params: &ExtremalParams) -> Result<Vec<NodeStats>> {
    let t_pred = predicted_t(params) as usize;
    let max_pred = predicted_v(params)? as i64 - 1;
    nodes
        .iter()
        .map(|n| {
            let t = n.set.doubled()?.len();
            let max = n.set.max_element();
            Ok(NodeStats {
                t,
                max,
                t_matches: t == t_pred,
                max_matches: max == max_pred,
            })
        })
        .collect()
}
