//! Admissibility of an order and edge-exact verification of claimed
//! decompositions.
//!
//! The verifier shares nothing with the construction pipeline beyond the
//! certificate types, so it can serve as an internal oracle: it tracks raw
//! vertex pairs over an indexed membership structure covering all
//! `v(v-1)/2` edges and reports every failure it finds, not just the first.

use std::fmt;

use crate::graph::{Decomposition, Vertex};

/// Why an order is rejected, in the order the conditions are checked:
/// the single 1-factor forces `v` even, 5-star factors force `6 | v`, and
/// the factor count `3(v-2)/5` forces `5 | v - 2`. Together these say
/// `v ≡ 12 (mod 30)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdmissibilityReason {
    Ok,
    Odd,
    NotDivisibleBySix,
    MinusTwoNotDivisibleByFive,
}

impl fmt::Display for AdmissibilityReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Ok => write!(f, "admissible"),
            Self::Odd => write!(f, "v is odd"),
            Self::NotDivisibleBySix => write!(f, "v not divisible by 6"),
            Self::MinusTwoNotDivisibleByFive => write!(f, "v-2 not divisible by 5"),
        }
    }
}

/// Result of the admissibility check, with the base parameters when the
/// order is supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdmissibilityResult {
    pub admissible: bool,
    pub reason: AdmissibilityReason,
    /// `(g, m, t)` with `g = v/6`, `m = g/30` (floor), `t = g mod 6`.
    pub params: Option<(u32, u32, u8)>,
}

/// Check `v ≡ 12 (mod 30)` via the divisibility chain, reporting the first
/// failing condition.
pub fn admissible(v: u32) -> AdmissibilityResult {
    if !v.is_multiple_of(2) {
        return AdmissibilityResult {
            admissible: false,
            reason: AdmissibilityReason::Odd,
            params: None,
        };
    }
    if !v.is_multiple_of(6) {
        return AdmissibilityResult {
            admissible: false,
            reason: AdmissibilityReason::NotDivisibleBySix,
            params: None,
        };
    }
    if !(v + 3).is_multiple_of(5) {
        // v ≥ 2 is implied by the two divisibilities once v > 0; using
        // v + 3 ≡ 0 (mod 5) avoids underflow at v = 0.
        return AdmissibilityResult {
            admissible: false,
            reason: AdmissibilityReason::MinusTwoNotDivisibleByFive,
            params: None,
        };
    }
    let g = v / 6;
    AdmissibilityResult {
        admissible: true,
        reason: AdmissibilityReason::Ok,
        params: Some((g, g / 30, (g % 6) as u8)),
    }
}

/// Number of 5-star factors in a decomposition of `K_v - I`: `3(v-2)/5`.
///
/// `None` for inadmissible orders.
pub fn factor_count(v: u32) -> Option<u64> {
    if admissible(v).admissible {
        Some(3 * (u64::from(v) - 2) / 5)
    } else {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyCode {
    LabelOutOfRange,
    InadmissibleOrder,
    MatchingSize,
    MatchingDegenerate,
    MatchingNotPerfect,
    FactorStarCount,
    StarLeafCount,
    StarLeafCollision,
    FactorNotSpanning,
    EdgeDoubleCover,
    EdgeMissing,
    FactorCountMismatch,
    OrderTooLarge,
}

/// Largest order the verifier will take on; the edge bitset for it is
/// around 256 MiB. Keeps hostile certificates from forcing giant
/// allocations.
pub const MAX_VERIFIABLE_ORDER: u32 = 1 << 16;

/// One verification failure: a machine-checkable code, a human-readable
/// message, and the witness object that triggered it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyError {
    pub code: VerifyCode,
    pub message: String,
    pub witness: String,
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {} [{}]", self.code, self.message, self.witness)
    }
}

/// Aggregate statistics of a verification run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyStats {
    /// Distinct edges covered across the matching and all factors.
    pub edge_total: u64,
    pub factor_count: usize,
    /// Differences `1..=v/2` whose edge orbit is fully covered exactly once.
    pub complete_differences: u32,
    /// All differences `1..=v/2`.
    pub total_differences: u32,
}

/// Outcome of verifying one certificate. `valid` iff `errors` is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    pub errors: Vec<VerifyError>,
    pub stats: VerifyStats,
}

impl VerifyReport {
    pub fn has(&self, code: VerifyCode) -> bool {
        self.errors.iter().any(|e| e.code == code)
    }
}

/// Membership bitset over the `v(v-1)/2` unordered vertex pairs.
struct PairSet {
    v: u64,
    bits: Vec<u64>,
}

impl PairSet {
    fn new(v: u32) -> Self {
        let n = u64::from(v) * (u64::from(v) - 1) / 2;
        Self {
            v: u64::from(v),
            bits: vec![0; (n as usize).div_ceil(64)],
        }
    }

    fn index(&self, u: Vertex, w: Vertex) -> u64 {
        let (a, b) = (u64::from(u.min(w)), u64::from(u.max(w)));
        a * self.v - a * (a + 1) / 2 + (b - a - 1)
    }

    /// Insert; returns false when the pair was already present.
    fn insert(&mut self, u: Vertex, w: Vertex) -> bool {
        let i = self.index(u, w);
        let slot = &mut self.bits[(i / 64) as usize];
        let mask = 1u64 << (i % 64);
        let fresh = *slot & mask == 0;
        *slot |= mask;
        fresh
    }

    fn count(&self) -> u64 {
        self.bits.iter().map(|b| u64::from(b.count_ones())).sum()
    }

    fn first_missing(&self) -> Option<(Vertex, Vertex)> {
        let mut i: u64 = 0;
        for u in 0..self.v as u32 {
            for w in (u + 1)..self.v as u32 {
                if self.bits[(i / 64) as usize] & (1u64 << (i % 64)) == 0 {
                    return Some((u, w));
                }
                i += 1;
            }
        }
        None
    }
}

/// Edge-exact verification of a claimed decomposition of `K_v - I`.
///
/// Checks, collecting all failures: vertex labels in range; the matching is
/// perfect; each factor consists of `v/6` stars with 5 distinct leaves whose
/// vertex sets partition `Z_v`; the matching plus all factor edges cover
/// every edge of `K_v` exactly once; the factor count is `3(v-2)/5`. Hostile
/// input never panics; problems come back in the report.
pub fn verify_decomposition(d: &Decomposition) -> VerifyReport {
    let mut errors = Vec::new();
    let v = d.v;
    let adm = admissible(v);
    if !adm.admissible {
        errors.push(VerifyError {
            code: VerifyCode::InadmissibleOrder,
            message: format!("order {v} admits no such decomposition: {}", adm.reason),
            witness: format!("v={v}"),
        });
    }
    if v == 0 {
        return VerifyReport {
            valid: false,
            errors,
            stats: VerifyStats::default(),
        };
    }
    if v > MAX_VERIFIABLE_ORDER {
        errors.push(VerifyError {
            code: VerifyCode::OrderTooLarge,
            message: format!("order {v} exceeds the verification bound {MAX_VERIFIABLE_ORDER}"),
            witness: format!("v={v}"),
        });
        return VerifyReport {
            valid: false,
            errors,
            stats: VerifyStats::default(),
        };
    }

    // (1) Vertex labels in range.
    let mut labels_ok = true;
    let mut check_label = |x: Vertex, place: String, errors: &mut Vec<VerifyError>| {
        if x >= v {
            labels_ok = false;
            errors.push(VerifyError {
                code: VerifyCode::LabelOutOfRange,
                message: format!("vertex {x} out of range 0..{v}"),
                witness: place,
            });
        }
    };
    for (k, &(u, w)) in d.one_factor.iter().enumerate() {
        check_label(u, format!("one_factor[{k}]"), &mut errors);
        check_label(w, format!("one_factor[{k}]"), &mut errors);
    }
    for (fi, factor) in d.factors.iter().enumerate() {
        for (si, star) in factor.stars.iter().enumerate() {
            check_label(star.center, format!("factor {fi} star {si}"), &mut errors);
            for &l in &star.leaves {
                check_label(l, format!("factor {fi} star {si}"), &mut errors);
            }
        }
    }

    // (2) The one-factor is a perfect matching.
    if d.one_factor.len() as u64 != u64::from(v) / 2 {
        errors.push(VerifyError {
            code: VerifyCode::MatchingSize,
            message: format!("matching has {} pairs, expected {}", d.one_factor.len(), v / 2),
            witness: String::new(),
        });
    }
    let mut matched = vec![0u32; v as usize];
    for &(u, w) in &d.one_factor {
        if u == w {
            errors.push(VerifyError {
                code: VerifyCode::MatchingDegenerate,
                message: format!("matching pair ({u}, {w}) is degenerate"),
                witness: format!("({u}, {w})"),
            });
            continue;
        }
        for x in [u, w] {
            if x < v {
                matched[x as usize] += 1;
            }
        }
    }
    if labels_ok {
        for x in 0..v {
            if matched[x as usize] != 1 {
                errors.push(VerifyError {
                    code: VerifyCode::MatchingNotPerfect,
                    message: format!("vertex {x} matched {} times", matched[x as usize]),
                    witness: format!("vertex {x}"),
                });
            }
        }
    }

    // (3) Factor structure: v/6 stars of 5 distinct leaves partitioning Z_v.
    let mut occupancy = vec![0u32; v as usize];
    for (fi, factor) in d.factors.iter().enumerate() {
        if v.is_multiple_of(6) && factor.stars.len() as u32 != v / 6 {
            errors.push(VerifyError {
                code: VerifyCode::FactorStarCount,
                message: format!(
                    "factor {fi} has {} stars, expected {}",
                    factor.stars.len(),
                    v / 6
                ),
                witness: format!("factor {fi}"),
            });
        }
        occupancy.iter_mut().for_each(|c| *c = 0);
        for (si, star) in factor.stars.iter().enumerate() {
            if star.leaves.len() != 5 {
                errors.push(VerifyError {
                    code: VerifyCode::StarLeafCount,
                    message: format!(
                        "factor {fi} star {si} has {} leaves, expected 5",
                        star.leaves.len()
                    ),
                    witness: format!("factor {fi} star {si}"),
                });
            }
            if !star.vertices_distinct() {
                errors.push(VerifyError {
                    code: VerifyCode::StarLeafCollision,
                    message: format!("factor {fi} star {si} repeats a vertex"),
                    witness: format!("{star}"),
                });
            }
            for x in star.vertices() {
                if x < v {
                    occupancy[x as usize] += 1;
                }
            }
        }
        if labels_ok {
            for x in 0..v {
                if occupancy[x as usize] != 1 {
                    errors.push(VerifyError {
                        code: VerifyCode::FactorNotSpanning,
                        message: format!(
                            "factor {fi} covers vertex {x} {} times",
                            occupancy[x as usize]
                        ),
                        witness: format!("factor {fi}, vertex {x}"),
                    });
                }
            }
        }
    }

    // (4) Edge multiset equals E(K_v) exactly once.
    let mut stats = VerifyStats {
        factor_count: d.factors.len(),
        total_differences: v / 2,
        ..VerifyStats::default()
    };
    if labels_ok {
        let mut pairs = PairSet::new(v);
        let mut diff_counts = vec![0u64; (v / 2 + 1) as usize];
        let mut cover = |u: Vertex, w: Vertex, place: String, errors: &mut Vec<VerifyError>| {
            if u == w {
                return; // degenerate pairs already reported
            }
            let span = u.abs_diff(w);
            let diff = span.min(v - span);
            diff_counts[diff as usize] += 1;
            if !pairs.insert(u, w) {
                errors.push(VerifyError {
                    code: VerifyCode::EdgeDoubleCover,
                    message: format!("edge {{{u}, {w}}} covered more than once"),
                    witness: place,
                });
            }
        };
        for &(u, w) in &d.one_factor {
            cover(u, w, "one_factor".into(), &mut errors);
        }
        for (fi, factor) in d.factors.iter().enumerate() {
            for (u, w) in factor.edges() {
                cover(u, w, format!("factor {fi}"), &mut errors);
            }
        }
        stats.edge_total = pairs.count();
        let full = u64::from(v) * (u64::from(v) - 1) / 2;
        if stats.edge_total != full {
            let (u, w) = pairs.first_missing().expect("undercovered pair exists");
            errors.push(VerifyError {
                code: VerifyCode::EdgeMissing,
                message: format!(
                    "{} of {} edges covered; first missing edge {{{u}, {w}}}",
                    stats.edge_total, full
                ),
                witness: format!("{{{u}, {w}}}"),
            });
        }
        for dff in 1..=v / 2 {
            let expected = if 2 * dff == v { u64::from(v) / 2 } else { u64::from(v) };
            if diff_counts[dff as usize] == expected {
                stats.complete_differences += 1;
            }
        }
    }

    // (5) Factor count.
    if let Some(expected) = factor_count(v) {
        if d.factors.len() as u64 != expected {
            errors.push(VerifyError {
                code: VerifyCode::FactorCountMismatch,
                message: format!("{} factors listed, expected {expected}", d.factors.len()),
                witness: format!("{}", d.factors.len()),
            });
        }
    }

    VerifyReport {
        valid: errors.is_empty(),
        errors,
        stats,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::direct::{direct_12, half_period_matching};
    use crate::graph::{Factor, Star};

    #[test]
    fn admissibility_chain() {
        let r = admissible(42);
        assert!(r.admissible);
        assert_eq!(r.params, Some((7, 0, 1)));

        let r = admissible(30);
        assert_eq!(r.reason, AdmissibilityReason::MinusTwoNotDivisibleByFive);

        let r = admissible(11);
        assert_eq!(r.reason, AdmissibilityReason::Odd);

        let r = admissible(40);
        assert_eq!(r.reason, AdmissibilityReason::NotDivisibleBySix);

        // The full residue characterisation.
        for v in 1..=600u32 {
            assert_eq!(admissible(v).admissible, v % 30 == 12, "v={v}");
        }
    }

    #[test]
    fn factor_counts() {
        assert_eq!(factor_count(12), Some(6));
        assert_eq!(factor_count(42), Some(24));
        assert_eq!(factor_count(102), Some(60));
        assert_eq!(factor_count(40), None);
    }

    #[test]
    fn valid_certificate_passes() {
        let report = verify_decomposition(&direct_12());
        assert!(report.valid);
        assert_eq!(report.stats.edge_total, 66);
        assert_eq!(report.stats.complete_differences, 6);
    }

    #[test]
    fn repeated_leaf_detected() {
        let mut d = direct_12();
        d.factors[1].stars[0].leaves[4] = d.factors[1].stars[0].leaves[3];
        let report = verify_decomposition(&d);
        assert!(!report.valid);
        assert!(report.has(VerifyCode::StarLeafCollision));
    }

    #[test]
    fn duplicate_edge_detected() {
        let mut d = direct_12();
        // Factor 0 covers {0, 1}; rewire the factor-1 star centered at 1 to
        // cover it again.
        let star = &mut d.factors[1].stars[0];
        assert_eq!(star.center, 1);
        star.leaves[0] = 0;
        let report = verify_decomposition(&d);
        assert!(!report.valid);
        assert!(report.has(VerifyCode::EdgeDoubleCover));
    }

    #[test]
    fn missing_vertex_detected() {
        let mut d = direct_12();
        d.factors[0].stars[0].leaves[0] = 4; // vertex 5 vanishes, 4 doubles
        let report = verify_decomposition(&d);
        assert!(!report.valid);
        assert!(report.has(VerifyCode::FactorNotSpanning));
        assert!(report.has(VerifyCode::StarLeafCollision));
    }

    #[test]
    fn hostile_labels_reported_without_panic() {
        let d = Decomposition {
            v: 12,
            one_factor: vec![(0, 600)],
            factors: vec![Factor::new(vec![Star::new(99, [1, 2, 3, 4, 5])])],
        };
        let report = verify_decomposition(&d);
        assert!(!report.valid);
        assert!(report.has(VerifyCode::LabelOutOfRange));
        assert!(report.has(VerifyCode::MatchingSize));
    }

    #[test]
    fn wrong_matching_detected() {
        let mut d = direct_12();
        d.one_factor[0] = (1, 7); // duplicates pair 1 and drops {0, 6}
        let report = verify_decomposition(&d);
        assert!(!report.valid);
        assert!(report.has(VerifyCode::MatchingNotPerfect));
        assert!(report.has(VerifyCode::EdgeDoubleCover));
        assert!(report.has(VerifyCode::EdgeMissing));
    }

    #[test]
    fn inadmissible_order_reported() {
        let d = Decomposition {
            v: 18,
            one_factor: half_period_matching(18),
            factors: vec![],
        };
        let report = verify_decomposition(&d);
        assert!(report.has(VerifyCode::InadmissibleOrder));
    }

    #[test]
    fn oversized_order_rejected_without_allocation() {
        let d = Decomposition {
            v: 3_000_000_012,
            one_factor: vec![],
            factors: vec![],
        };
        let report = verify_decomposition(&d);
        assert!(!report.valid);
        assert!(report.has(VerifyCode::OrderTooLarge));
    }
}
