//! Exact integer elimination.
//!
//! All arithmetic is done in `i128` with overflow checks. Rows are divided by
//! the gcd of their entries after every elimination step, which keeps entries
//! small for the sparse `{-2..2}` relation matrices this crate produces.

use num_integer::Integer;

fn primitive(row: &mut [i128]) {
    let g = row.iter().fold(0i128, |g, x| g.gcd(x));
    if g > 1 {
        row.iter_mut().for_each(|x| *x /= g);
    }
}

fn mul_sub(a: i128, x: i128, b: i128, y: i128) -> i128 {
    a.checked_mul(x)
        .zip(b.checked_mul(y))
        .and_then(|(p, q)| p.checked_sub(q))
        .expect("i128 overflow in integer elimination")
}

/// Rank over the rationals, computed by fraction-free row elimination.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(r, p);
        let (head, tail) = m.split_at_mut(r + 1);
        let pivot = &head[r];
        for row in tail.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            let lead = pivot[col];
            for j in col..width {
                row[j] = mul_sub(lead, row[j], f, pivot[j]);
            }
            primitive(row);
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Result of reducing a row lattice with unimodular column operations.
#[derive(Debug, Clone)]
pub struct ColumnEchelon {
    /// Rank of the row lattice.
    pub rank: usize,
    /// Unimodular `n × n` matrix `V` such that `rows · V` is supported on the
    /// first `rank` columns.
    pub transform: Vec<Vec<i128>>,
}

impl ColumnEchelon {
    /// Coordinates of the `i`-th standard basis vector in the torsion-free
    /// quotient `Z^n / saturation(rows)`, i.e. row `i` of `V` past the rank.
    pub fn quotient_coordinates(&self, i: usize) -> &[i128] {
        &self.transform[i][self.rank..]
    }
}

/// Column-style echelon reduction of a row lattice in `Z^width`.
///
/// Because the reduced rows vanish outside the first `rank` columns and have
/// full rank there, the rational span of the rows meets `Z^width` exactly in
/// the first `rank` transformed coordinates. Projecting onto the remaining
/// coordinates therefore realizes the quotient by the saturated lattice.
pub fn column_echelon(rows: &[Vec<i64>], width: usize) -> ColumnEchelon {
    let mut w: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), width, "row width mismatch");
            r.iter().map(|&x| x as i128).collect()
        })
        .collect();
    let mut v: Vec<Vec<i128>> = (0..width)
        .map(|i| (0..width).map(|j| i128::from(i == j)).collect())
        .collect();

    fn swap_cols(m: &mut [Vec<i128>], a: usize, b: usize) {
        m.iter_mut().for_each(|row| row.swap(a, b));
    }
    // col_dst -= q * col_src
    fn sub_col(m: &mut [Vec<i128>], dst: usize, src: usize, q: i128) {
        for row in m.iter_mut() {
            row[dst] = mul_sub(1, row[dst], q, row[src]);
        }
    }

    let mut pc = 0;
    for t in 0..w.len() {
        if pc == width {
            break;
        }
        loop {
            let best = (pc..width)
                .filter(|&j| w[t][j] != 0)
                .min_by_key(|&j| w[t][j].unsigned_abs());
            let Some(best) = best else { break };
            if best != pc {
                swap_cols(&mut w, pc, best);
                swap_cols(&mut v, pc, best);
            }
            let lead = w[t][pc];
            let mut done = true;
            for j in pc + 1..width {
                let x = w[t][j];
                if x == 0 {
                    continue;
                }
                let q = Integer::div_floor(&x, &lead);
                sub_col(&mut w, j, pc, q);
                sub_col(&mut v, j, pc, q);
                if w[t][j] != 0 {
                    done = false;
                }
            }
            if done {
                pc += 1;
                break;
            }
        }
    }
    ColumnEchelon {
        rank: pc,
        transform: v,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat_mul(a: &[Vec<i64>], v: &[Vec<i128>]) -> Vec<Vec<i128>> {
        a.iter()
            .map(|row| {
                (0..v[0].len())
                    .map(|j| {
                        row.iter()
                            .enumerate()
                            .map(|(i, &x)| x as i128 * v[i][j])
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn rank_basic() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0, 0]]), 0);
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(
            rank(&[vec![1, -2, 1, 0], vec![0, 1, -2, 1], vec![1, -1, -1, 1]]),
            2
        );
        assert_eq!(rank(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5]]), 3);
    }

    #[test]
    fn echelon_support_and_rank() {
        let rows = vec![vec![2, -1, 0], vec![-2, 0, 1], vec![0, -1, 1]];
        let e = column_echelon(&rows, 3);
        assert_eq!(e.rank, 2);
        let w = mat_mul(&rows, &e.transform);
        for row in &w {
            assert!(row[e.rank..].iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn echelon_saturates_torsion() {
        // 2·e1 lies in the lattice, e1 does not; the quotient coordinate of
        // e1 must still vanish because the torsion is removed.
        let e = column_echelon(&[vec![2, 0]], 2);
        assert_eq!(e.rank, 1);
        assert!(e.quotient_coordinates(0).iter().all(|&x| x == 0));
        assert!(e.quotient_coordinates(1).iter().any(|&x| x != 0));
    }
}
