//! Brute-force oracles shared by the integration tests. Each one is written
//! directly from the definition and shares no code with the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub fn brute_sumset(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = BTreeSet::new();
    for &x in a {
        for &y in b {
            out.insert(x + y);
        }
    }
    out.into_iter().collect()
}

/// `out[i][j] = p_i + p_j` for a labeled point list.
fn sum_index(points: &[Vec<i64>]) -> Vec<Vec<Vec<i64>>> {
    points
        .iter()
        .map(|p| {
            points
                .iter()
                .map(|q| p.iter().zip(q).map(|(x, y)| x + y).collect())
                .collect()
        })
        .collect()
}

fn same_relations(a: &[Vec<i64>], b: &[Vec<i64>], perm: &[usize]) -> bool {
    let sa = sum_index(a);
    let sb = sum_index(b);
    let k = a.len();
    for i in 0..k {
        for j in i..k {
            for p in 0..k {
                for q in p..k {
                    let ea = sa[i][j] == sa[p][q];
                    let eb = sb[perm[i]][perm[j]] == sb[perm[p]][perm[q]];
                    if ea != eb {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// Tries every bijection.
pub fn brute_isomorphic(a: &[i64], b: &[i64]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let pa: Vec<Vec<i64>> = a.iter().map(|&x| vec![x]).collect();
    let pb: Vec<Vec<i64>> = b.iter().map(|&x| vec![x]).collect();
    permutations(a.len())
        .iter()
        .any(|perm| same_relations(&pa, &pb, perm))
}

/// Points of the search box, padded with zeros to four coordinates.
type P = [i64; 4];

fn add(x: &P, y: &P) -> P {
    [x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]]
}

/// Exact rank of the differences `p − points[0]`, by fraction-free elimination.
fn affine_rank(points: &[P]) -> usize {
    let mut rows: Vec<[i128; 4]> = points
        .iter()
        .skip(1)
        .map(|p| std::array::from_fn(|c| (p[c] - points[0][c]) as i128))
        .collect();
    let mut rank = 0;
    for col in 0..4 {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let pivot = rows[rank];
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[col];
            for c in 0..4 {
                row[c] = row[c] * pivot[col] - f * pivot[c];
            }
        }
        rank += 1;
    }
    rank
}

/// Box radius used when looking for an image in `Z^n`.
pub fn oracle_radius(n: usize) -> i64 {
    match n {
        2 => 3,
        3 => 2,
        _ => 1,
    }
}

/// Whether some labeled image of `a` in `[−r, r]^n` (first point at the
/// origin) has exactly the same sum coincidences and affine dimension `n`.
pub fn embeds_in(a: &[i64], n: usize, r: i64) -> bool {
    assert!(n <= 4);
    let side = (2 * r + 1) as usize;
    let mut box_points = Vec::new();
    for idx in 0..side.pow(n as u32) {
        let mut p = [0i64; 4];
        let mut x = idx;
        for c in p.iter_mut().take(n) {
            *c = (x % side) as i64 - r;
            x /= side;
        }
        if p != [0; 4] {
            box_points.push(p);
        }
    }
    let mut assigned: Vec<Option<P>> = vec![None; a.len()];
    assigned[0] = Some([0; 4]);
    search(a, n, &box_points, &mut assigned)
}

fn consistent(a: &[i64], assigned: &[Option<P>], l: usize) -> bool {
    let pl = assigned[l].unwrap();
    let placed: Vec<(usize, P)> = assigned
        .iter()
        .enumerate()
        .filter_map(|(i, p)| p.map(|p| (i, p)))
        .collect();
    for &(j, pj) in &placed {
        let s1 = add(&pl, &pj);
        for (x, &(p, pp)) in placed.iter().enumerate() {
            for &(q, pq) in &placed[x..] {
                if (a[l] + a[j] == a[p] + a[q]) != (s1 == add(&pp, &pq)) {
                    return false;
                }
            }
        }
    }
    true
}

/// A point forced for label `l` by an identity whose other labels are placed;
/// `Some(None)` when that identity has no integral solution.
fn forced(a: &[i64], assigned: &[Option<P>], l: usize) -> Option<Option<P>> {
    let k = a.len();
    for j in 0..k {
        for p in 0..k {
            for q in p..k {
                if a[l] + a[j] != a[p] + a[q] || p == l || q == l {
                    continue;
                }
                let (Some(pp), Some(pq)) = (assigned[p], assigned[q]) else {
                    continue;
                };
                let s = add(&pp, &pq);
                if j == l {
                    if s.iter().any(|x| x % 2 != 0) {
                        return Some(None);
                    }
                    return Some(Some(s.map(|x| x / 2)));
                }
                if let Some(pj) = assigned[j] {
                    return Some(Some(std::array::from_fn(|c| s[c] - pj[c])));
                }
            }
        }
    }
    None
}

fn search(a: &[i64], n: usize, box_points: &[P], assigned: &mut Vec<Option<P>>) -> bool {
    let open: Vec<usize> = (0..a.len()).filter(|&i| assigned[i].is_none()).collect();
    let placed: Vec<P> = assigned.iter().flatten().copied().collect();
    if affine_rank(&placed) + open.len() < n {
        return false;
    }
    if open.is_empty() {
        return true;
    }
    for &l in &open {
        if let Some(f) = forced(a, assigned, l) {
            let Some(p) = f else { return false };
            assigned[l] = Some(p);
            let ok = consistent(a, assigned, l) && search(a, n, box_points, assigned);
            assigned[l] = None;
            return ok;
        }
    }
    let l = open[0];
    for &p in box_points {
        assigned[l] = Some(p);
        if consistent(a, assigned, l) && search(a, n, box_points, assigned) {
            assigned[l] = None;
            return true;
        }
    }
    assigned[l] = None;
    false
}

/// Largest `n ≤ max_n` for which [`embeds_in`] finds an image.
pub fn embedding_dimension(a: &[i64], max_n: usize) -> usize {
    if a.len() == 1 {
        return 0;
    }
    (2..=max_n)
        .rev()
        .find(|&n| embeds_in(a, n, oracle_radius(n)))
        .unwrap_or(1)
}

fn cross(o: &[i64], a: &[i64], b: &[i64]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn in_triangle(p: &[i64], a: &[i64], b: &[i64], c: &[i64]) -> bool {
    let d1 = cross(a, b, p);
    let d2 = cross(b, c, p);
    let d3 = cross(c, a, p);
    let neg = d1 < 0 || d2 < 0 || d3 < 0;
    let pos = d1 > 0 || d2 > 0 || d3 > 0;
    !(neg && pos)
}

fn on_segment(p: &[i64], a: &[i64], b: &[i64]) -> bool {
    cross(a, b, p) == 0
        && p[0] >= a[0].min(b[0])
        && p[0] <= a[0].max(b[0])
        && p[1] >= a[1].min(b[1])
        && p[1] <= a[1].max(b[1])
}

/// Lattice points of the planar hull: a point is inside exactly when some
/// triangle or segment of input points contains it.
pub fn brute_hull_2d(points: &[Vec<i64>]) -> u64 {
    let lo: Vec<i64> = (0..2)
        .map(|c| points.iter().map(|p| p[c]).min().unwrap())
        .collect();
    let hi: Vec<i64> = (0..2)
        .map(|c| points.iter().map(|p| p[c]).max().unwrap())
        .collect();
    let mut count = 0;
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            let p = [x, y];
            let m = points.len();
            let mut inside = points.iter().any(|q| q[..] == p[..]);
            'outer: for i in 0..m {
                for j in i + 1..m {
                    if inside {
                        break 'outer;
                    }
                    if on_segment(&p, &points[i], &points[j]) {
                        inside = true;
                        break 'outer;
                    }
                    for l in j + 1..m {
                        if cross(&points[i], &points[j], &points[l]) != 0
                            && in_triangle(&p, &points[i], &points[j], &points[l])
                        {
                            inside = true;
                            break 'outer;
                        }
                    }
                }
            }
            if inside {
                count += 1;
            }
        }
    }
    count
}

/// Lists all `2^m` subset sums.
pub fn brute_subset_sum(a: &[u64], b: u64) -> bool {
    let mut sums = vec![0u64];
    for &x in a {
        let shifted: Vec<u64> = sums.iter().map(|s| s + x).collect();
        sums.extend(shifted);
    }
    sums.contains(&b)
}

/// Smallest diameter `D` such that some subset of `[0, D]` containing `0`
/// and `D` is isomorphic to `a`, scanning up to `bound`.
pub fn brute_volume(a: &[i64], bound: i64) -> Option<i64> {
    let k = a.len();
    if k == 1 {
        return Some(1);
    }
    for d in (k as i64 - 1)..=bound {
        let inner: Vec<i64> = (1..d).collect();
        let mut found = false;
        choose(&inner, k - 2, &mut Vec::new(), &mut |mid| {
            if found {
                return;
            }
            let mut cand = vec![0];
            cand.extend_from_slice(mid);
            cand.push(d);
            if brute_isomorphic(a, &cand) {
                found = true;
            }
        });
        if found {
            return Some(d + 1);
        }
    }
    None
}

fn choose(pool: &[i64], r: usize, cur: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
    if cur.len() == r {
        f(cur);
        return;
    }
    let need = r - cur.len();
    let start = pool
        .iter()
        .position(|&x| cur.last().is_none_or(|&l| x > l))
        .unwrap_or(pool.len());
    for i in start..pool.len() {
        if pool.len() - i < need {
            break;
        }
        cur.push(pool[i]);
        choose(pool, r, cur, f);
        cur.pop();
    }
}
