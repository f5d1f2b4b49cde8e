//! Structural checks over exhaustively enumerated small sets: the doubling
//! lower bound by dimension, the dimension-one threshold, and the volume
//! upper bound as a function of `(k, T)`.

use std::time::Instant;

use serde::Serialize;

use crate::enumerate::{partitions, Partition};
use crate::error::{Error, Result};
use crate::extremal::{decompose_t, predicted_v, t_range};
use crate::iso::{dimension_of, SumTable};
use crate::lattice::LatticeSet;
use crate::par::{map_ordered, Threads};
use crate::sets::IntSet;
use crate::volume::volume_exact_of;

/// `(n+1)k − n(n+1)/2`, the least `|2A|` for a `k`-set of dimension `n`.
pub fn lemma_bound(k: usize, n: usize) -> Result<u64> {
    if n < 1 || k < n + 1 {
        return Err(Error::InvalidParams(format!(
            "requires n ≥ 1 and k ≥ n+1, got k = {k}, n = {n}"
        )));
    }
    let (k, n) = (k as u64, n as u64);
    Ok((n + 1) * k - n * (n + 1) / 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    pub k: usize,
    pub dimension: usize,
    pub t: usize,
    pub bound: u64,
    pub holds: bool,
}

fn lemma_from_table(table: &SumTable) -> LemmaCheck {
    let k = table.k();
    let d = dimension_of(table);
    let t = table.sum_count();
    let bound = if k == 1 {
        1
    } else {
        lemma_bound(k, d).expect("d ≤ k−1")
    };
    LemmaCheck {
        k,
        dimension: d,
        t,
        bound,
        holds: t as u64 >= bound,
    }
}

/// Compares `|2A|` with the lower bound for the set's Freiman dimension.
pub fn check_lemma(a: &IntSet) -> LemmaCheck {
    lemma_from_table(&SumTable::from_int_set(a))
}

/// Same as [`check_lemma`] for a point set. A lattice set carries the same
/// identities as its universal model, so its own sumset is used directly.
pub fn check_lemma_lattice(s: &LatticeSet) -> LemmaCheck {
    lemma_from_table(&SumTable::from_lattice(s))
}

fn run_partitions<R: Send>(
    k: usize,
    bound: i64,
    threads: Threads,
    f: impl Fn(&Partition) -> R + Sync + Send,
) -> Vec<R> {
    map_ordered(&partitions(k, bound), threads, f)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdReport {
    pub k: usize,
    pub bound: i64,
    pub threshold: i64,
    pub scanned: usize,
    pub below_threshold: usize,
    /// Sets with `|2A| ≤ 3k − 4` whose dimension is not 1.
    pub violations: Vec<IntSet>,
}

/// Checks that every normalized `k`-set of diameter `≤ bound` with
/// `|2A| ≤ 3k − 4` has Freiman dimension 1.
pub fn dim1_threshold_scan(k: usize, bound: i64, threads: Threads) -> ThresholdReport {
    let threshold = 3 * k as i64 - 4;
    let parts = run_partitions(k, bound, threads, |p| {
        let (mut scanned, mut below, mut bad) = (0usize, 0usize, Vec::new());
        p.for_each(|e| {
            scanned += 1;
            let set = IntSet::new(e.to_vec()).expect("increasing");
            let table = SumTable::from_int_set(&set);
            if table.sum_count() as i64 <= threshold {
                below += 1;
                if dimension_of(&table) != 1 {
                    bad.push(set);
                }
            }
        });
        (scanned, below, bad)
    });
    let mut report = ThresholdReport {
        k,
        bound,
        threshold,
        scanned: 0,
        below_threshold: 0,
        violations: vec![],
    };
    for (s, b, v) in parts {
        report.scanned += s;
        report.below_threshold += b;
        report.violations.extend(v);
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub set: IntSet,
    pub t: usize,
    pub v: u64,
    pub bound: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedT {
    pub set: IntSet,
    pub t: usize,
}

/// Sets with `3k−3 ≤ T ≤ 4k−7` compared with a segment of `2k−3+2b` points
/// (`b = T − (3k−4)`), and with the one-longer reading `2k−2+2b`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PartialCaseSummary {
    pub sets: usize,
    pub exceed_points_reading: Vec<Violation>,
    pub exceed_interval_reading: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub k: usize,
    pub bound: i64,
    pub scanned: usize,
    pub one_dimensional: usize,
    pub checked: usize,
    pub immediate_passes: usize,
    pub searched: usize,
    pub violations: Vec<Violation>,
    #[serde(rename = "skipped_T")]
    pub skipped_t: Vec<SkippedT>,
    pub lemma_failures: Vec<IntSet>,
    pub partial_case: PartialCaseSummary,
    pub coverage_note: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl ScanReport {
    /// Drops the timing so reports from different runs compare byte for byte.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }
}

#[derive(Default)]
struct PartitionTally {
    scanned: usize,
    one_dimensional: usize,
    checked: usize,
    immediate: usize,
    searched: usize,
    violations: Vec<Violation>,
    skipped: Vec<SkippedT>,
    lemma_failures: Vec<IntSet>,
    partial: PartialCaseSummary,
}

fn scan_set(k: usize, e: &[i64], tally: &mut PartitionTally) -> Result<()> {
    tally.scanned += 1;
    let set = IntSet::new(e.to_vec())?;
    let table = SumTable::from_int_set(&set);
    let lemma = lemma_from_table(&table);
    if !lemma.holds {
        tally.lemma_failures.push(set.clone());
    }
    if lemma.dimension != 1 {
        return Ok(());
    }
    tally.one_dimensional += 1;
    let t = table.sum_count();
    let diameter = set.diameter() as u64;

    let mut volume: Option<u64> = None;
    let mut exact_volume = |tally: &mut PartitionTally| -> Result<u64> {
        if let Some(v) = volume {
            return Ok(v);
        }
        tally.searched += 1;
        let v = volume_exact_of(&table, diameter)?
            .value()
            .expect("the set itself is an image within its own diameter");
        volume = Some(v);
        Ok(v)
    };

    let (lo, hi) = t_range(k).expect("scans start at k ≥ 3");
    if (t as u64) < lo || t as u64 > hi {
        tally.skipped.push(SkippedT {
            set: set.clone(),
            t,
        });
    } else {
        tally.checked += 1;
        let f = predicted_v(&decompose_t(k, t as u64)?)?;
        if diameter < f {
            tally.immediate += 1;
        } else {
            let v = exact_volume(tally)?;
            if v > f {
                tally.violations.push(Violation {
                    set: set.clone(),
                    t,
                    v,
                    bound: f,
                });
            }
        }
    }

    let (pc_lo, pc_hi) = (3 * k as i64 - 3, 4 * k as i64 - 7);
    if (pc_lo..=pc_hi).contains(&(t as i64)) {
        tally.partial.sets += 1;
        let b = t as u64 - (3 * k as u64 - 4);
        let points = 2 * k as u64 - 3 + 2 * b;
        if diameter + 1 > points {
            let v = exact_volume(tally)?;
            if v > points {
                let row = Violation {
                    set: set.clone(),
                    t,
                    v,
                    bound: points,
                };
                tally.partial.exceed_points_reading.push(row);
            }
            if v > points + 1 {
                let row = Violation {
                    set,
                    t,
                    v,
                    bound: points + 1,
                };
                tally.partial.exceed_interval_reading.push(row);
            }
        }
    }
    Ok(())
}

/// Checks the conjectured volume bound `V(A) ≤ f(k, T)` on every normalized
/// one-dimensional `k`-set with diameter `≤ bound`.
///
/// A set whose own diameter already satisfies `D + 1 ≤ f` passes outright;
/// the rest get an exact volume search capped at their own diameter.
pub fn hypothesis_scan(k: usize, bound: i64, threads: Threads) -> Result<ScanReport> {
    if k < 3 {
        return Err(Error::InvalidParams(format!("requires k ≥ 3, got k = {k}")));
    }
    let started = Instant::now();
    let tallies = run_partitions(k, bound, threads, |p| {
        let mut tally = PartitionTally::default();
        let mut failure = None;
        p.for_each(|e| {
            if failure.is_none() {
                if let Err(err) = scan_set(k, e, &mut tally) {
                    failure = Some(err);
                }
            }
        });
        failure.map_or(Ok(tally), Err)
    });

    let (lo, hi) = t_range(k).expect("k ≥ 3");
    let mut report = ScanReport {
        k,
        bound,
        scanned: 0,
        one_dimensional: 0,
        checked: 0,
        immediate_passes: 0,
        searched: 0,
        violations: vec![],
        skipped_t: vec![],
        lemma_failures: vec![],
        partial_case: PartialCaseSummary::default(),
        coverage_note: String::new(),
        elapsed_ms: None,
    };
    for tally in tallies {
        let t = tally?;
        report.scanned += t.scanned;
        report.one_dimensional += t.one_dimensional;
        report.checked += t.checked;
        report.immediate_passes += t.immediate;
        report.searched += t.searched;
        report.violations.extend(t.violations);
        report.skipped_t.extend(t.skipped);
        report.lemma_failures.extend(t.lemma_failures);
        report.partial_case.sets += t.partial.sets;
        report
            .partial_case
            .exceed_points_reading
            .extend(t.partial.exceed_points_reading);
        report
            .partial_case
            .exceed_interval_reading
            .extend(t.partial.exceed_interval_reading);
    }
    report.coverage_note = format!(
        "every affine class of {k}-sets whose normalized representative has diameter <= {bound}: \
         {} classes, {} of Freiman dimension 1, {} checked against the bound, {} with T outside \
         [{lo}, {hi}] not checked; classes whose minimal representative is wider than {bound} \
         are not covered",
        report.scanned,
        report.one_dimensional,
        report.checked,
        report.skipped_t.len()
    );
    report.elapsed_ms = Some(started.elapsed().as_millis() as u64);
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartialCase {
    pub set: IntSet,
    pub t: usize,
    pub predicted_t: u64,
    pub agrees: bool,
}

/// `{0, 1, …, k−3, k−2+b, 2(k−2+b)}` with its sumset size next to `3k−4+b`.
pub fn partial_case_form(k: usize, b: usize) -> Result<PartialCase> {
    if k < 3 || b > k - 3 {
        return Err(Error::InvalidParams(format!(
            "requires k ≥ 3 and 0 ≤ b ≤ k−3, got k = {k}, b = {b}"
        )));
    }
    let a = (k - 2 + b) as i64;
    let mut elements: Vec<i64> = (0..=k as i64 - 3).collect();
    elements.extend([a, 2 * a]);
    let set = IntSet::new(elements)?;
    let t = set.doubled()?.len();
    let predicted_t = (3 * k - 4 + b) as u64;
    Ok(PartialCase {
        set,
        t,
        predicted_t,
        agrees: t as u64 == predicted_t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::construct_multi;

    fn set(v: &[i64]) -> IntSet {
        IntSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lemma_bounds() {
        for k in 3..12 {
            assert_eq!(lemma_bound(k, 2).unwrap(), 3 * k as u64 - 3);
            assert_eq!(lemma_bound(k, 1).unwrap(), 2 * k as u64 - 1);
        }
        for k in 4..12 {
            assert_eq!(lemma_bound(k, 3).unwrap(), 4 * k as u64 - 6);
        }
        assert!(lemma_bound(3, 3).is_err());
        assert!(lemma_bound(3, 0).is_err());
    }

    #[test]
    fn lemma_examples() {
        let sidon = check_lemma(&set(&[0, 1, 3]));
        assert_eq!(
            (sidon.dimension, sidon.t, sidon.bound, sidon.holds),
            (2, 6, 6, true)
        );
        let ap = check_lemma(&IntSet::interval(6));
        assert_eq!((ap.t, ap.bound), (11, 11));
        let multi = check_lemma_lattice(&construct_multi(6, 18, 2).unwrap());
        assert_eq!((multi.t, multi.bound, multi.holds), (18, 15, true));
        assert!(check_lemma(&set(&[4])).holds);
    }

    #[test]
    fn threshold_small_scans() {
        for (k, bound) in [(3, 8), (4, 10)] {
            let r = dim1_threshold_scan(k, bound, Threads::SEQUENTIAL);
            assert!(r.violations.is_empty());
            assert!(r.below_threshold > 0);
        }
        // {0,1,3} has T = 6 > 3k−4 = 5 and so is never tested.
        let r = dim1_threshold_scan(3, 3, Threads::SEQUENTIAL);
        assert_eq!((r.scanned, r.below_threshold), (2, 1));
    }

    #[test]
    fn hypothesis_k3() {
        let r = hypothesis_scan(3, 10, Threads::SEQUENTIAL).unwrap();
        assert_eq!(r.one_dimensional, 1);
        assert_eq!(r.checked, 1);
        assert!(r.violations.is_empty());
        assert!(hypothesis_scan(2, 10, Threads::SEQUENTIAL).is_err());
    }

    #[test]
    fn partial_case_examples() {
        let p = partial_case_form(5, 0).unwrap();
        assert_eq!((p.set, p.t, p.agrees), (set(&[0, 1, 2, 3, 6]), 11, true));
        let p = partial_case_form(5, 2).unwrap();
        assert_eq!((p.set, p.t, p.agrees), (set(&[0, 1, 2, 5, 10]), 13, true));
        let p = partial_case_form(4, 0).unwrap();
        assert_eq!((p.set, p.t), (set(&[0, 1, 2, 4]), 8));
        assert!(partial_case_form(5, 3).is_err());
    }
}
