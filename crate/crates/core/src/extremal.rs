//! Parameterized extremal sets and their exact doubling and volume.
//!
//! For `3 ≤ m ≤ k`, `c = k + 2 − m` and `0 ≤ b ≤ m − 3`, the base set is
//! `{0, 1, …, m−2} ∪ {a, 2a, 4a, …, 2^{c−2}a}` with `a = m − 1 + b`. Its
//! doubling is `T = ck − (c² + c − 4)/2 + b` and it sits in a segment of
//! `2^{c−2}a + 1` points.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::LatticeSet;
use crate::sets::{checked_mul, IntSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ExtremalParams {
    pub k: usize,
    pub m: usize,
    pub c: usize,
    pub b: usize,
    /// `a_{m−1} = m − 1 + b`.
    pub a: u64,
}

impl ExtremalParams {
    /// Parameters from `(k, c, b)`, with `m = k + 2 − c`.
    pub fn new(k: usize, c: usize, b: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidParams(format!("requires k ≥ 3, got k = {k}")));
        }
        if c < 2 || c > k - 1 {
            return Err(Error::InvalidParams(format!(
                "requires 2 ≤ c ≤ k−1, got c = {c} with k = {k}"
            )));
        }
        let m = k + 2 - c;
        if b > k - c - 1 {
            return Err(Error::InvalidParams(format!(
                "requires 0 ≤ b ≤ k−c−1 = {}, got b = {b}",
                k - c - 1
            )));
        }
        Ok(ExtremalParams {
            k,
            m,
            c,
            b,
            a: (m - 1 + b) as u64,
        })
    }

    /// Parameters from `(k, m, b)`, with `c = k + 2 − m`.
    pub fn from_block(k: usize, m: usize, b: usize) -> Result<Self> {
        if m < 3 || m > k {
            return Err(Error::InvalidParams(format!(
                "requires 3 ≤ m ≤ k, got m = {m} with k = {k}"
            )));
        }
        if b > m - 3 {
            return Err(Error::InvalidParams(format!(
                "requires 0 ≤ b ≤ m−3 = {}, got b = {b}",
                m - 3
            )));
        }
        ExtremalParams::new(k, k + 2 - m, b)
    }

    /// Every valid parameter triple for a given `k`, ordered by `(c, b)`.
    pub fn all_for(k: usize) -> Vec<ExtremalParams> {
        if k < 3 {
            return Vec::new();
        }
        (2..k)
            .flat_map(|c| (0..k - c).map(move |b| ExtremalParams::new(k, c, b).unwrap()))
            .collect()
    }
}

/// `T = Σ_{j=m}^{k−1} j + 2m − 1 + b`, in closed form.
pub fn predicted_t(p: &ExtremalParams) -> u64 {
    let (k, c, b) = (p.k as u64, p.c as u64, p.b as u64);
    c * k - (c * c + c - 4) / 2 + b
}

/// `V = 2^{c−2}·a + 1`.
pub fn predicted_v(p: &ExtremalParams) -> Result<u64> {
    let scale = 1u64.checked_shl(p.c as u32 - 2).ok_or(Error::Overflow)?;
    let top = checked_mul(scale as i64, p.a as i64)?;
    Ok(top as u64 + 1)
}

/// `{0, …, m−2} ∪ {2^j·a : 0 ≤ j ≤ c−2}`.
pub fn construct_base(p: &ExtremalParams) -> Result<IntSet> {
    let mut elements: Vec<i64> = (0..p.m as i64 - 1).collect();
    let mut x = p.a as i64;
    elements.push(x);
    for _ in 0..p.c - 2 {
        x = checked_mul(x, 2)?;
        elements.push(x);
    }
    IntSet::new(elements)
}

/// Inclusive range of `T` covered by the parameterization for this `k`.
pub fn t_range(k: usize) -> Option<(u64, u64)> {
    (k >= 3).then(|| {
        let k = k as u64;
        (2 * k - 1, (k * k - k + 4) / 2)
    })
}

/// Recovers `(c, b)` from `(k, T)`. When `b` would equal `k − c − 1` the
/// equivalent `(c + 1, 0)` is returned instead; both give the same `V`.
pub fn decompose_t(k: usize, t: u64) -> Result<ExtremalParams> {
    let (lo, hi) = t_range(k).ok_or_else(|| {
        Error::InvalidParams(format!("requires k ≥ 3 to decompose T, got k = {k}"))
    })?;
    if t < lo || t > hi {
        return Err(Error::InvalidParams(format!(
            "requires 2k−1 ≤ T ≤ (k²−k+4)/2, i.e. {lo} ≤ T ≤ {hi}, got T = {t}"
        )));
    }
    let mut chosen = ExtremalParams::new(k, 2, 0)?;
    for c in 3..k {
        let p = ExtremalParams::new(k, c, 0)?;
        if predicted_t(&p) > t {
            break;
        }
        chosen = p;
    }
    ExtremalParams::new(k, chosen.c, (t - predicted_t(&chosen)) as usize)
}

/// `k + (k−1) + … + (k−d+2)`: the sums a `d`-dimensional lift adds to `2A'`.
pub fn multi_extra_sums(k: usize, d: usize) -> u64 {
    (0..d.saturating_sub(1)).map(|j| (k - j) as u64).sum()
}

/// `A' e_1 ∪ {e_2, …, e_d}` where `A'` is the base set with `k' = k − d + 1`
/// elements and `|2A'| = T − (k + (k−1) + … + (k−d+2))`.
pub fn construct_multi(k: usize, t: u64, d: usize) -> Result<LatticeSet> {
    if d < 2 {
        return Err(Error::InvalidParams(format!("requires d ≥ 2, got d = {d}")));
    }
    if k < d + 2 {
        return Err(Error::InvalidParams(format!(
            "requires k − d + 1 ≥ 3, got k = {k}, d = {d}"
        )));
    }
    let k_prime = k - d + 1;
    let extra = multi_extra_sums(k, d);
    let t_prime = t.checked_sub(extra).ok_or_else(|| {
        Error::InvalidParams(format!(
            "T = {t} is below the {extra} sums added by the lift"
        ))
    })?;
    let base = construct_base(&decompose_t(k_prime, t_prime)?)?;
    let mut points: Vec<Vec<i64>> = base
        .iter()
        .map(|x| {
            let mut p = vec![0; d];
            p[0] = x;
            p
        })
        .collect();
    for axis in 1..d {
        let mut e = vec![0; d];
        e[axis] = 1;
        points.push(e);
    }
    LatticeSet::new(d, points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: usize, c: usize, b: usize) -> ExtremalParams {
        ExtremalParams::new(k, c, b).unwrap()
    }

    #[test]
    fn formula_examples() {
        assert_eq!(predicted_t(&p(8, 4, 2)), 26);
        assert_eq!(predicted_t(&p(8, 2, 0)), 15);
        assert_eq!(predicted_t(&p(5, 4, 0)), 12);
        assert_eq!(predicted_v(&p(8, 4, 2)).unwrap(), 29);
        assert_eq!(predicted_v(&p(8, 2, 0)).unwrap(), 8);
        assert_eq!(predicted_v(&p(5, 4, 0)).unwrap(), 9);
    }

    #[test]
    fn base_examples() {
        let s = |v: &[i64]| IntSet::new(v.to_vec()).unwrap();
        assert_eq!(
            construct_base(&p(8, 4, 2)).unwrap(),
            s(&[0, 1, 2, 3, 4, 7, 14, 28])
        );
        assert_eq!(construct_base(&p(4, 2, 0)).unwrap(), s(&[0, 1, 2, 3]));
        assert_eq!(construct_base(&p(5, 4, 0)).unwrap(), s(&[0, 1, 2, 4, 8]));
    }

    #[test]
    fn parameter_validation() {
        assert!(ExtremalParams::new(8, 1, 0).is_err());
        assert!(ExtremalParams::new(8, 8, 0).is_err());
        let err = ExtremalParams::new(8, 4, 4).unwrap_err();
        assert!(err.to_string().contains("0 ≤ b ≤ k−c−1"), "{err}");
        assert!(ExtremalParams::new(8, 4, 3).is_ok());
        assert_eq!(ExtremalParams::from_block(8, 6, 2).unwrap(), p(8, 4, 2));
        assert!(ExtremalParams::from_block(8, 2, 0).is_err());
        assert!(ExtremalParams::from_block(8, 6, 4).is_err());
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose_t(8, 26).unwrap(), p(8, 4, 2));
        for k in 3..10 {
            assert_eq!(decompose_t(k, 2 * k as u64 - 1).unwrap(), p(k, 2, 0));
        }
        assert_eq!(decompose_t(8, 24).unwrap(), p(8, 4, 0));
        // b = k−c−1 lands on (c+1, 0).
        assert_eq!(
            decompose_t(8, predicted_t(&p(8, 4, 3))).unwrap(),
            p(8, 5, 0)
        );
        assert!(decompose_t(8, 14).is_err());
        assert!(decompose_t(8, 31).is_err());
        assert!(decompose_t(8, 30).is_ok());
        assert!(decompose_t(2, 3).is_err());
    }

    #[test]
    fn multi_examples() {
        let a = construct_multi(6, 18, 2).unwrap();
        let expected: Vec<Vec<i64>> = vec![
            vec![0, 0],
            vec![1, 0],
            vec![2, 0],
            vec![4, 0],
            vec![8, 0],
            vec![0, 1],
        ];
        assert_eq!(a.points(), expected.as_slice());
        assert_eq!(a.doubled().unwrap().len(), 18);
        let b = construct_multi(7, 25, 3).unwrap();
        assert_eq!(b.len(), 7);
        assert_eq!(b.doubled().unwrap().len(), 25);
        assert!(construct_multi(6, 18, 1).is_err());
        assert!(construct_multi(4, 18, 3).is_err());
    }
}
