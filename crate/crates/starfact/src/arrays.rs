//! Balanced star arrays: accounting of the differences covered by the
//! developed Part I factors, completion of the remainder, and emission of
//! the Part II factors.
//!
//! Let `D' = {1, .., (v-2)/2}` minus the multiples of 6. Every edge of
//! `K_v - I` with difference `d ∈ D'` belongs to exactly one of six
//! (difference, tail-class) cells of `v/6` edges. The array `T_i` for class
//! `i` partitions `D'` into rows of five slots, slot `j` holding values
//! ≡ j (mod 6): the covered part `T¹` records what Part I already did, the
//! full rows of `T²` generate one Part II factor each via the base star
//! `(i; i+d_1, .., i+d_5)` developed by +6.
//!
//! Multiples of 6 never enter the arrays: each is covered exactly once per
//! tail class by the lifted pure and mixed-pure edges, hence exactly `v`
//! times across the developed Part I factors.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{edge_difference, tail_of, Factor, Star, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArrayError {
    #[error("expected {expected} developed factors for v={v}, got {got}")]
    OrbitLength { v: u32, expected: u32, got: usize },
    #[error(
        "double coverage in factor {factor}: difference {diff} hits tail class {class} \
         via {{{u1}, {w1}}} and {{{u2}, {w2}}}"
    )]
    DoubleCoverage {
        factor: usize,
        class: u8,
        diff: u32,
        u1: Vertex,
        w1: Vertex,
        u2: Vertex,
        w2: Vertex,
    },
    #[error("difference {diff} at tail class {class} covered by {got} edges, not 0 or {orbit}")]
    PartialCell {
        class: u8,
        diff: u32,
        got: u32,
        orbit: u32,
    },
    #[error("multiple-of-6 difference {diff} covered {got} times, expected exactly {expected}")]
    Mult6Coverage { diff: u32, got: u64, expected: u64 },
    #[error("factor edge {{{u}, {w}}} lies on the removed one-factor")]
    HalfPeriodEdge { u: Vertex, w: Vertex },
    #[error("class {class} leftovers split unevenly by residue: {sizes:?}")]
    UnequalBuckets { class: u8, sizes: [usize; 5] },
    #[error("edge error: {0}")]
    Edge(#[from] crate::graph::EdgeError),
}

/// Which differences the Part I factors cover, per tail residue class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceLedger {
    pub v: u32,
    covered: [BTreeSet<u32>; 6],
}

impl DifferenceLedger {
    /// Differences `d ∈ D'` covered at tail class `class`.
    pub fn covered(&self, class: u8) -> &BTreeSet<u32> {
        &self.covered[class as usize]
    }

    /// `(v - 2) / 2`: the largest difference off the one-factor.
    pub fn max_diff(&self) -> u32 {
        (self.v - 2) / 2
    }

    /// The set `D'` this ledger accounts for.
    pub fn ledgered_diffs(&self) -> impl Iterator<Item = u32> + '_ {
        (1..=self.max_diff()).filter(|d| d % 6 != 0)
    }
}

/// Tally the developed Part I factors into a ledger.
///
/// Expects the full orbit (`v/6` factors). Each non-multiple-of-6 difference
/// cell must be hit at most once per factor and, over the whole orbit,
/// either not at all or by all of its `v/6` edges; each multiple-of-6
/// difference must be covered exactly `v` times in total. Factor edges on
/// the one-factor itself are rejected.
pub fn ledger_from_factors(v: u32, part1: &[Factor]) -> Result<DifferenceLedger, ArrayError> {
    let orbit = v / 6;
    if part1.len() as u32 != orbit {
        return Err(ArrayError::OrbitLength {
            v,
            expected: orbit,
            got: part1.len(),
        });
    }
    let mut cell_counts: BTreeMap<(u8, u32), u32> = BTreeMap::new();
    let mut mult6_totals: BTreeMap<u32, u64> = BTreeMap::new();
    for (fi, factor) in part1.iter().enumerate() {
        let mut seen_here: BTreeMap<(u8, u32), (Vertex, Vertex)> = BTreeMap::new();
        for (u, w) in factor.edges() {
            let geom = edge_difference(u, w, v)?;
            if 2 * geom.diff == v {
                return Err(ArrayError::HalfPeriodEdge { u, w });
            }
            if geom.diff % 6 == 0 {
                *mult6_totals.entry(geom.diff).or_insert(0) += 1;
                continue;
            }
            let class = (tail_of(u, w, v)? % 6) as u8;
            if let Some(&(u1, w1)) = seen_here.get(&(class, geom.diff)) {
                return Err(ArrayError::DoubleCoverage {
                    factor: fi,
                    class,
                    diff: geom.diff,
                    u1,
                    w1,
                    u2: u,
                    w2: w,
                });
            }
            seen_here.insert((class, geom.diff), (u, w));
            *cell_counts.entry((class, geom.diff)).or_insert(0) += 1;
        }
    }
    let mut covered: [BTreeSet<u32>; 6] = Default::default();
    for (&(class, diff), &count) in &cell_counts {
        if count != orbit {
            return Err(ArrayError::PartialCell {
                class,
                diff,
                got: count,
                orbit,
            });
        }
        covered[class as usize].insert(diff);
    }
    let max_diff = (v - 2) / 2;
    for d in (6..=max_diff).step_by(6) {
        let got = mult6_totals.remove(&d).unwrap_or(0);
        if got != u64::from(v) {
            return Err(ArrayError::Mult6Coverage {
                diff: d,
                got,
                expected: u64::from(v),
            });
        }
    }
    if let Some((&d, &got)) = mult6_totals.iter().next() {
        return Err(ArrayError::Mult6Coverage {
            diff: d,
            got,
            expected: 0,
        });
    }
    Ok(DifferenceLedger { v, covered })
}

/// One row of a balanced star array: five slots, slot `j` (0-based) holding
/// a difference ≡ j+1 (mod 6) or empty.
pub type ArrayRow = [Option<u32>; 5];

/// The balanced star array of one residue class: covered rows `T¹` and
/// completion rows `T²` (never empty-slotted). The union of all entries
/// over both parts is exactly `D'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedStarArray {
    pub class: u8,
    pub t1_rows: Vec<ArrayRow>,
    pub t2_rows: Vec<[u32; 5]>,
}

impl BalancedStarArray {
    /// Multiset of all entries (both parts), ascending.
    pub fn entries(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .t1_rows
            .iter()
            .flatten()
            .flatten()
            .copied()
            .chain(self.t2_rows.iter().flatten().copied())
            .collect();
        out.sort_unstable();
        out
    }
}

/// Group a set of differences into rows: bucket by residue mod 6 and zip
/// the ascending buckets column-wise.
fn zip_rows(diffs: &BTreeSet<u32>) -> ([Vec<u32>; 5], usize) {
    let mut buckets: [Vec<u32>; 5] = Default::default();
    for &d in diffs {
        debug_assert!(d % 6 != 0);
        buckets[(d % 6 - 1) as usize].push(d);
    }
    let rows = buckets.iter().map(Vec::len).max().unwrap_or(0);
    (buckets, rows)
}

/// Complete the ledger into the six balanced star arrays.
///
/// Per class, the uncovered part of `D'` is bucketed by residue mod 6; the
/// five buckets must be equally long (a construction-defect signal when
/// they are not), and row `k` of `T²` takes the `k`-th element of each
/// bucket. `T¹` rows regroup the covered differences the same way, with
/// empty slots where a bucket runs short.
pub fn complete_arrays(ledger: &DifferenceLedger) -> Result<Vec<BalancedStarArray>, ArrayError> {
    let mut arrays = Vec::with_capacity(6);
    for class in 0..6u8 {
        let covered = ledger.covered(class);
        let leftover: BTreeSet<u32> = ledger
            .ledgered_diffs()
            .filter(|d| !covered.contains(d))
            .collect();
        let (buckets, rows) = zip_rows(&leftover);
        let sizes = [
            buckets[0].len(),
            buckets[1].len(),
            buckets[2].len(),
            buckets[3].len(),
            buckets[4].len(),
        ];
        if sizes.iter().any(|&s| s != rows) {
            return Err(ArrayError::UnequalBuckets { class, sizes });
        }
        let t2_rows: Vec<[u32; 5]> = (0..rows)
            .map(|k| {
                [
                    buckets[0][k],
                    buckets[1][k],
                    buckets[2][k],
                    buckets[3][k],
                    buckets[4][k],
                ]
            })
            .collect();
        let (cov_buckets, cov_rows) = zip_rows(covered);
        let t1_rows: Vec<ArrayRow> = (0..cov_rows)
            .map(|k| {
                [
                    cov_buckets[0].get(k).copied(),
                    cov_buckets[1].get(k).copied(),
                    cov_buckets[2].get(k).copied(),
                    cov_buckets[3].get(k).copied(),
                    cov_buckets[4].get(k).copied(),
                ]
            })
            .collect();
        arrays.push(BalancedStarArray {
            class,
            t1_rows,
            t2_rows,
        });
    }
    Ok(arrays)
}

/// Emit the Part II factors: for each class `i` and each `T²` row
/// `(d_1, .., d_5)`, one factor consisting of the whole +6 orbit of the
/// base star `(i; i+d_1, .., i+d_5)`.
///
/// Because `d_k ≡ k (mod 6)`, the `v/6` translates are vertex-disjoint and
/// span `Z_v`, and together they cover exactly the `v/6` edges of each
/// difference `d_k` whose tail lies in class `i`.
pub fn part2_factors(arrays: &[BalancedStarArray], v: u32) -> Vec<Factor> {
    let mut out = Vec::new();
    for array in arrays {
        let i = u32::from(array.class);
        for row in &array.t2_rows {
            let star = Star::new(i, row.map(|d| i + d));
            let orbit: Vec<Star> = (0..v / 6).map(|j| star.translate(6 * j, v)).collect();
            out.push(Factor::new(orbit));
        }
    }
    out
}

impl fmt::Display for BalancedStarArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "T_{}", self.class)?;
        let cell = |x: Option<u32>| match x {
            Some(d) => format!("{d:>4}"),
            None => format!("{:>4}", "*"),
        };
        for (k, row) in self.t1_rows.iter().enumerate() {
            let label = if k == 0 { "T^1" } else { "   " };
            writeln!(f, "{label} {}", row.iter().map(|&x| cell(x)).collect::<String>())?;
        }
        for (k, row) in self.t2_rows.iter().enumerate() {
            let label = if k == 0 { "T^2" } else { "   " };
            writeln!(
                f,
                "{label} {}",
                row.iter().map(|&x| cell(Some(x))).collect::<String>()
            )?;
        }
        Ok(())
    }
}
