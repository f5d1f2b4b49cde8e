//! Volume of a set: lattice points in the hull of its best isomorphic image.

mod exact;
mod hull;

use serde::Serialize;

use crate::error::{Error, Result};

pub(crate) use exact::volume_exact_of;
pub use exact::{volume_exact_1d, volume_oracle, VolumeResult, VolumeSearch};
pub use hull::hull_point_count;

/// A box `[0,h_1) × … × [0,h_d)` given by its edge lengths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Parallelepiped {
    pub edges: Vec<u64>,
}

impl Parallelepiped {
    pub fn dim(&self) -> usize {
        self.edges.len()
    }

    pub fn volume(&self) -> Result<u64> {
        self.edges
            .iter()
            .try_fold(1u64, |acc, &h| acc.checked_mul(h))
            .ok_or(Error::Overflow)
    }
}

/// The box `(V(A'), 2, …, 2)` that holds the `d`-dimensional extremal set
/// built from `A'`; its volume is `2^{d−1}·V(A')`.
pub fn parallelepiped_upper(a_prime_volume: u64, d: usize) -> Result<Parallelepiped> {
    if d == 0 {
        return Err(Error::InvalidParams("requires d ≥ 1".into()));
    }
    if a_prime_volume == 0 || (d >= 2 && a_prime_volume < 2) {
        return Err(Error::InvalidParams(format!(
            "V(A') = {a_prime_volume} is too small for a {d}-dimensional box (edges must be ≥ 2)"
        )));
    }
    let mut edges = vec![a_prime_volume];
    edges.resize(d, 2);
    Ok(Parallelepiped { edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn upper_boxes() {
        assert_eq!(parallelepiped_upper(29, 1).unwrap().volume().unwrap(), 29);
        let p = parallelepiped_upper(29, 3).unwrap();
        assert_eq!(p.edges, vec![29, 2, 2]);
        assert_eq!(p.volume().unwrap(), 116);
        assert_eq!(parallelepiped_upper(9, 2).unwrap().volume().unwrap(), 18);
        assert!(parallelepiped_upper(1, 2).is_err());
        assert!(parallelepiped_upper(5, 0).is_err());
        assert_eq!(
            parallelepiped_upper(u64::MAX, 2).unwrap().volume(),
            Err(Error::Overflow)
        );
    }
}
