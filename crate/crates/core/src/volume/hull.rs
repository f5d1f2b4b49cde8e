//! Lattice points in convex hulls of small point sets.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lattice::LatticeSet;

type P3 = [i128; 3];

fn sub(a: &P3, b: &P3) -> P3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot(a: &P3, b: &P3) -> i128 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: &P3, b: &P3) -> P3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn lift(s: &LatticeSet) -> Vec<P3> {
    s.points()
        .iter()
        .map(|p| {
            let mut q = [0i128; 3];
            for (slot, &x) in q.iter_mut().zip(p) {
                *slot = x as i128;
            }
            q
        })
        .collect()
}

/// Lattice points on the segment spanned by collinear points.
fn collinear_count(pts: &[P3]) -> u64 {
    let lo = pts.iter().min().unwrap();
    let hi = pts.iter().max().unwrap();
    let d = sub(hi, lo);
    let g = d.iter().fold(0i128, |g, x| g.gcd(x));
    (g + 1) as u64
}

/// Andrew's monotone chain; returns hull vertices counter-clockwise.
fn convex_hull_2d(pts: &[P3]) -> Vec<P3> {
    let mut p: Vec<P3> = pts.to_vec();
    p.sort();
    p.dedup();
    let turn =
        |o: &P3, a: &P3, b: &P3| (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    let mut hull: Vec<P3> = Vec::with_capacity(2 * p.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &P3>> = if pass == 0 {
            Box::new(p.iter())
        } else {
            Box::new(p.iter().rev())
        };
        for q in iter {
            while hull.len() >= start + 2
                && turn(&hull[hull.len() - 2], &hull[hull.len() - 1], q) <= 0
            {
                hull.pop();
            }
            hull.push(*q);
        }
        hull.pop();
    }
    hull
}

/// Pick's relation: `points = area + boundary/2 + 1`.
fn polygon_count(pts: &[P3]) -> u64 {
    let hull = convex_hull_2d(pts);
    let n = hull.len();
    let mut area2 = 0i128;
    let mut boundary = 0i128;
    for i in 0..n {
        let (a, b) = (&hull[i], &hull[(i + 1) % n]);
        area2 += a[0] * b[1] - a[1] * b[0];
        boundary += (b[0] - a[0]).gcd(&(b[1] - a[1]));
    }
    ((area2.abs() + boundary) / 2 + 1) as u64
}

/// Half-spaces `n·x ≤ h` (plus equalities) whose intersection is the hull.
struct HullMembership {
    equalities: Vec<(P3, i128)>,
    halfspaces: Vec<(P3, i128)>,
}

impl HullMembership {
    fn contains(&self, x: &P3) -> bool {
        self.equalities.iter().all(|(n, h)| dot(n, x) == *h)
            && self.halfspaces.iter().all(|(n, h)| dot(n, x) <= *h)
    }

    /// Keeps `n·x ≤ n·anchor` when every point satisfies it (flipping `n` if
    /// every point satisfies the reverse).
    fn support(&mut self, pts: &[P3], n: P3, anchor: &P3) {
        let (mut lo, mut hi) = (0i128, 0i128);
        for p in pts {
            let s = dot(&n, &sub(p, anchor));
            lo = lo.min(s);
            hi = hi.max(s);
        }
        if hi <= 0 {
            self.halfspaces.push((n, dot(&n, anchor)));
        } else if lo >= 0 {
            let m = [-n[0], -n[1], -n[2]];
            self.halfspaces.push((m, dot(&m, anchor)));
        }
    }

    fn build(pts: &[P3], affine_rank: usize) -> Self {
        let mut hm = HullMembership {
            equalities: Vec::new(),
            halfspaces: Vec::new(),
        };
        let n = pts.len();
        if affine_rank == 3 {
            for i in 0..n {
                for j in i + 1..n {
                    for l in j + 1..n {
                        let normal = cross(&sub(&pts[j], &pts[i]), &sub(&pts[l], &pts[i]));
                        if normal != [0, 0, 0] {
                            hm.support(pts, normal, &pts[i]);
                        }
                    }
                }
            }
        } else {
            let plane = (0..n)
                .flat_map(|j| (j + 1..n).map(move |l| (j, l)))
                .map(|(j, l)| cross(&sub(&pts[j], &pts[0]), &sub(&pts[l], &pts[0])))
                .find(|v| *v != [0, 0, 0])
                .expect("affine rank 2 has a non-degenerate triangle");
            hm.equalities.push((plane, dot(&plane, &pts[0])));
            for i in 0..n {
                for j in i + 1..n {
                    let edge_normal = cross(&plane, &sub(&pts[j], &pts[i]));
                    if edge_normal != [0, 0, 0] {
                        hm.support(pts, edge_normal, &pts[i]);
                    }
                }
            }
        }
        hm
    }
}

fn box_count(pts: &[P3], affine_rank: usize) -> u64 {
    let hm = HullMembership::build(pts, affine_rank);
    let mut lo = pts[0];
    let mut hi = pts[0];
    for p in pts {
        for c in 0..3 {
            lo[c] = lo[c].min(p[c]);
            hi[c] = hi[c].max(p[c]);
        }
    }
    let mut count = 0u64;
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            for z in lo[2]..=hi[2] {
                if hm.contains(&[x, y, z]) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Number of integer points in the convex hull of `s`, for `dim(s) ≤ 3`.
///
/// Lines use the extreme points, planar sets use Pick's relation on the hull
/// polygon, and three-dimensional sets enumerate their bounding box against
/// exact supporting half-spaces. Degenerate inputs drop to the lower case.
pub fn hull_point_count(s: &LatticeSet) -> Result<u64> {
    if s.dim() > 3 {
        return Err(Error::UnsupportedDimension(s.dim()));
    }
    let pts = lift(s);
    let rank = s.affine_dimension();
    Ok(match (s.dim(), rank) {
        (_, 0) => 1,
        (_, 1) => collinear_count(&pts),
        (2, 2) => polygon_count(&pts),
        (_, r) => box_count(&pts, r),
    })
}
