//! Core domain types and difference arithmetic on cyclic vertex sets.
//!
//! A *base graph* lives on `g` points `0..g` and a *lifted* complete graph
//! on `v = 6g` vertices `0..v`. The difference of an edge `{u, w}` with
//! `u < w` on `n` points is `min(w - u, n - (w - u))`; the edge is *forward*
//! when the minimum is realised by `w - u` and *wrap-around* otherwise.
//! Differences index the orbits of the cyclic translation action, which is
//! what makes develop-by-translation constructions work: translating an edge
//! preserves its difference.
//!
//! For an edge of difference `d < n/2`, exactly one endpoint `x` satisfies
//! `x + d ≡ other (mod n)`; we call it the *tail*. The tail's residue class
//! mod 6 decides which balanced star array accounts for the edge.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Vertex index on `Z_n`, 0-based.
pub type Vertex = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeError {
    #[error("degenerate edge: both endpoints are {0}")]
    DegenerateEdge(Vertex),
    /// Difference exactly `n/2`: both endpoints satisfy the tail equation.
    /// Such edges belong to the removed one-factor and are never ledgered.
    #[error("edge {{{0}, {1}}} has half-period difference: tail is ambiguous")]
    AmbiguousTail(Vertex, Vertex),
    #[error("vertex {0} out of range on {1} points")]
    VertexOutOfRange(Vertex, u32),
}

/// Whether a difference is realised going forward (`w - u`) or wrapping
/// around the cycle (`n - (w - u)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Forward,
    WrapAround,
}

/// Difference metadata of one edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeGeometry {
    pub diff: u32,
    pub orientation: Orientation,
}

/// Pure/prime label carried by base-graph edges.
///
/// A forward difference may occur at most twice in an almost 5-star factor;
/// the two occurrences are distinguished as pure (`d`) and prime (`d'`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeLabel {
    Pure,
    Prime,
}

/// One base-graph edge together with its difference data and label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabeledEdge {
    pub u: Vertex,
    pub w: Vertex,
    pub diff: u32,
    pub orientation: Orientation,
    pub label: EdgeLabel,
}

/// Difference of the edge `{u, w}` on `n` points.
///
/// Returns `min(|w-u|, n - |w-u|)` with its orientation; a half-period edge
/// (`|w-u| = n/2`) counts as forward by convention.
///
/// # Errors
/// `DegenerateEdge` when `u = w`, `VertexOutOfRange` when an endpoint is
/// not a point of the graph.
pub fn edge_difference(u: Vertex, w: Vertex, n: u32) -> Result<EdgeGeometry, EdgeError> {
    if u >= n {
        return Err(EdgeError::VertexOutOfRange(u, n));
    }
    if w >= n {
        return Err(EdgeError::VertexOutOfRange(w, n));
    }
    if u == w {
        return Err(EdgeError::DegenerateEdge(u));
    }
    let span = u.abs_diff(w);
    let wrap = n - span;
    if span <= wrap {
        Ok(EdgeGeometry {
            diff: span,
            orientation: Orientation::Forward,
        })
    } else {
        Ok(EdgeGeometry {
            diff: wrap,
            orientation: Orientation::WrapAround,
        })
    }
}

/// The tail of the edge `{u, w}` on `Z_v`: the unique endpoint `x` with
/// `x + d ≡ other (mod v)` where `d` is the edge difference.
///
/// # Errors
/// `AmbiguousTail` for half-period edges (`d = v/2`), plus the range and
/// degeneracy errors of [`edge_difference`].
pub fn tail_of(u: Vertex, w: Vertex, v: u32) -> Result<Vertex, EdgeError> {
    let geom = edge_difference(u, w, v)?;
    if 2 * geom.diff == v {
        return Err(EdgeError::AmbiguousTail(u, w));
    }
    if (u + geom.diff) % v == w {
        Ok(u)
    } else {
        Ok(w)
    }
}

/// Residue class mod 6 of the edge's tail. Only defined off the one-factor.
pub fn tail_class(u: Vertex, w: Vertex, v: u32) -> Result<u8, EdgeError> {
    Ok((tail_of(u, w, v)? % 6) as u8)
}

/// A star: one center and an ordered list of leaves.
///
/// Factor stars carry exactly 5 leaves; a little star on `t` excluded
/// vertices carries `t - 1` (an edge when `t = 2`). Leaf order is
/// significant while a star still lives on the base graph (prime-star leaf
/// slots pick up distinct residue offsets when lifted); once a star lives on
/// `Z_v` inside a factor, order is cosmetic and gets normalized.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Star {
    pub center: Vertex,
    pub leaves: Vec<Vertex>,
}

impl Star {
    pub fn new(center: Vertex, leaves: impl Into<Vec<Vertex>>) -> Self {
        Self {
            center,
            leaves: leaves.into(),
        }
    }

    /// Edges of the star as `(center, leaf)` pairs.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.leaves.iter().map(move |&l| (self.center, l))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        std::iter::once(self.center).chain(self.leaves.iter().copied())
    }

    /// All of `{center} ∪ leaves` pairwise distinct.
    pub fn vertices_distinct(&self) -> bool {
        let set: BTreeSet<Vertex> = self.vertices().collect();
        set.len() == self.leaves.len() + 1
    }

    /// Translate by `delta` modulo `modulus`.
    pub fn translate(&self, delta: u32, modulus: u32) -> Star {
        Star {
            center: (self.center + delta) % modulus,
            leaves: self
                .leaves
                .iter()
                .map(|&l| (l + delta) % modulus)
                .collect(),
        }
    }

    /// Sort leaves in descending order (the serialization convention).
    pub fn normalize(&mut self) {
        self.leaves.sort_unstable_by(|a, b| b.cmp(a));
    }
}

impl fmt::Display for Star {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.center)?;
        for l in &self.leaves {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

/// The mixed star of an almost 5-star factor: three pure leaves and two
/// prime leaves. The first prime leaf takes residue offset `i+1` when
/// lifted, the second `i+2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedStar {
    pub center: Vertex,
    pub pure_leaves: [Vertex; 3],
    pub prime_leaves: [Vertex; 2],
}

impl MixedStar {
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        std::iter::once(self.center)
            .chain(self.pure_leaves.iter().copied())
            .chain(self.prime_leaves.iter().copied())
    }
}

/// An almost 5-star factor on `g` points: 5-stars spanning all but `t`
/// vertices, the `t` leftovers forming one little star.
///
/// Each forward difference occurs at most once with a pure label and at most
/// once with a prime label, and no edge wraps around; these properties are
/// what [`crate::base::validate_base`] certifies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostStarFactor {
    /// Number of base points.
    pub g: u32,
    /// Isolated-vertex count, `t ≡ g (mod 6)`, `0 ≤ t ≤ 5`.
    pub t: u8,
    pub pure_stars: Vec<Star>,
    pub mixed_star: Option<MixedStar>,
    pub prime_stars: Vec<Star>,
    /// The `(t-1)`-star on the isolated vertices, present for `t ≥ 2`.
    pub little_star: Option<Star>,
    pub isolated: BTreeSet<Vertex>,
}

impl AlmostStarFactor {
    /// Stars that span `{0..g} \ isolated` (little star excluded).
    pub fn spanning_star_count(&self) -> usize {
        self.pure_stars.len() + self.prime_stars.len() + usize::from(self.mixed_star.is_some())
    }

    /// Every edge with its pure/prime label and difference data.
    ///
    /// Little-star edges count as prime: their differences participate in
    /// the prime-distinctness requirement even though the little star itself
    /// is never lifted.
    pub fn labeled_edges(&self) -> Result<Vec<LabeledEdge>, EdgeError> {
        let mut out = Vec::new();
        let mut push = |u: Vertex, w: Vertex, label: EdgeLabel| -> Result<(), EdgeError> {
            let geom = edge_difference(u, w, self.g)?;
            out.push(LabeledEdge {
                u,
                w,
                diff: geom.diff,
                orientation: geom.orientation,
                label,
            });
            Ok(())
        };
        for s in &self.pure_stars {
            for (u, w) in s.edges() {
                push(u, w, EdgeLabel::Pure)?;
            }
        }
        if let Some(m) = &self.mixed_star {
            for &l in &m.pure_leaves {
                push(m.center, l, EdgeLabel::Pure)?;
            }
            for &l in &m.prime_leaves {
                push(m.center, l, EdgeLabel::Prime)?;
            }
        }
        for s in &self.prime_stars {
            for (u, w) in s.edges() {
                push(u, w, EdgeLabel::Prime)?;
            }
        }
        if let Some(s) = &self.little_star {
            for (u, w) in s.edges() {
                push(u, w, EdgeLabel::Prime)?;
            }
        }
        Ok(out)
    }
}

/// A spanning set of 5-stars on `Z_v`: exactly `v/6` stars whose vertex
/// sets partition `0..v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Factor {
    pub stars: Vec<Star>,
}

impl Factor {
    /// Build a factor in normal form: leaves descending, stars by center.
    pub fn new(mut stars: Vec<Star>) -> Self {
        for s in &mut stars {
            s.normalize();
        }
        stars.sort_unstable_by_key(|s| s.center);
        Self { stars }
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.stars.iter().flat_map(|s| s.edges())
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.stars.iter().flat_map(|s| s.vertices())
    }
}

/// A full certificate: the order `v`, one perfect matching, and the list of
/// 5-star factors. Valid exactly when the matching plus all factor edges
/// cover `E(K_v)` once each and `|factors| = 3(v-2)/5`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Decomposition {
    pub v: u32,
    pub one_factor: Vec<(Vertex, Vertex)>,
    pub factors: Vec<Factor>,
}

/// Pure/prime occurrence counts per forward difference of a base graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceCensus {
    /// `counts[d]` = (pure occurrences, prime occurrences) of difference `d`;
    /// index 0 unused.
    counts: Vec<(u8, u8)>,
}

impl DifferenceCensus {
    pub fn new(max_diff: u32) -> Self {
        Self {
            counts: vec![(0, 0); max_diff as usize + 1],
        }
    }

    pub fn record(&mut self, diff: u32, label: EdgeLabel) {
        let slot = &mut self.counts[diff as usize];
        match label {
            EdgeLabel::Pure => slot.0 += 1,
            EdgeLabel::Prime => slot.1 += 1,
        }
    }

    pub fn pure_count(&self, diff: u32) -> u8 {
        self.counts.get(diff as usize).map_or(0, |c| c.0)
    }

    pub fn prime_count(&self, diff: u32) -> u8 {
        self.counts.get(diff as usize).map_or(0, |c| c.1)
    }

    /// Differences with at least one pure occurrence, ascending.
    pub fn pure_diffs(&self) -> Vec<u32> {
        (1..self.counts.len() as u32)
            .filter(|&d| self.pure_count(d) > 0)
            .collect()
    }

    /// Differences with at least one prime occurrence, ascending.
    pub fn prime_diffs(&self) -> Vec<u32> {
        (1..self.counts.len() as u32)
            .filter(|&d| self.prime_count(d) > 0)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_wrap_edge() {
        // 35 -> 0 wraps: min(35, 7) = 7.
        let geom = edge_difference(0, 35, 42).unwrap();
        assert_eq!(geom.diff, 7);
        assert_eq!(geom.orientation, Orientation::WrapAround);
    }

    #[test]
    fn difference_of_forward_edge() {
        let geom = edge_difference(36, 37, 42).unwrap();
        assert_eq!(geom.diff, 1);
        assert_eq!(geom.orientation, Orientation::Forward);
    }

    #[test]
    fn difference_half_period_is_forward_by_convention() {
        let geom = edge_difference(0, 21, 42).unwrap();
        assert_eq!(geom.diff, 21);
        assert_eq!(geom.orientation, Orientation::Forward);
    }

    #[test]
    fn difference_is_symmetric_and_bounded() {
        for n in [7u32, 12, 42, 57] {
            for u in 0..n {
                for w in 0..n {
                    if u == w {
                        assert!(edge_difference(u, w, n).is_err());
                        continue;
                    }
                    let a = edge_difference(u, w, n).unwrap();
                    let b = edge_difference(w, u, n).unwrap();
                    assert_eq!(a, b);
                    assert!(a.diff >= 1 && a.diff <= n / 2);
                }
            }
        }
    }

    #[test]
    fn realized_difference_is_min_of_forward_and_wrap() {
        let n = 42;
        for u in 0..n {
            for w in (u + 1)..n {
                let forward = w - u;
                let wrap = n - forward;
                assert_eq!(forward + wrap, n);
                let geom = edge_difference(u, w, n).unwrap();
                assert_eq!(geom.diff, forward.min(wrap));
                match geom.orientation {
                    Orientation::Forward => assert!(forward <= wrap),
                    Orientation::WrapAround => assert!(wrap < forward),
                }
            }
        }
    }

    #[test]
    fn degenerate_edge_rejected() {
        assert_eq!(
            edge_difference(3, 3, 12).unwrap_err(),
            EdgeError::DegenerateEdge(3)
        );
    }

    #[test]
    fn tail_of_wrap_edge_is_wrapping_endpoint() {
        // {0, 35} on Z_42 has difference 7 and 35 + 7 = 42 ≡ 0.
        assert_eq!(tail_of(0, 35, 42).unwrap(), 35);
        assert_eq!(tail_class(0, 35, 42).unwrap(), 5);
    }

    #[test]
    fn tail_of_forward_edge_is_smaller_endpoint() {
        assert_eq!(tail_of(36, 37, 42).unwrap(), 36);
        assert_eq!(tail_class(36, 37, 42).unwrap(), 0);
    }

    #[test]
    fn tail_of_difference_14_wrap() {
        // {1, 29} has difference 14 (wrap) and 29 + 14 ≡ 1.
        assert_eq!(tail_of(1, 29, 42).unwrap(), 29);
        assert_eq!(tail_class(1, 29, 42).unwrap(), 5);
    }

    #[test]
    fn tail_of_half_period_edge_is_ambiguous() {
        assert_eq!(
            tail_of(0, 21, 42).unwrap_err(),
            EdgeError::AmbiguousTail(0, 21)
        );
    }

    #[test]
    fn tails_partition_each_difference_class_evenly() {
        // For every d < v/2, the v edges {u, u+d} are distinct and split
        // into 6 tail classes of exactly v/6 edges each.
        for v in [12u32, 42, 102, 162] {
            for d in 1..(v / 2) {
                let mut per_class = [0u32; 6];
                for u in 0..v {
                    let w = (u + d) % v;
                    let tail = tail_of(u, w, v).unwrap();
                    per_class[(tail % 6) as usize] += 1;
                }
                assert_eq!(per_class, [v / 6; 6], "v={v} d={d}");
            }
        }
    }

    #[test]
    fn star_translation_and_normal_form() {
        let s = Star::new(40, [41, 0, 1, 2, 3]);
        let t = s.translate(6, 42);
        assert_eq!(t, Star::new(4, [5, 6, 7, 8, 9]));
        let mut n = t;
        n.normalize();
        assert_eq!(n.leaves, vec![9, 8, 7, 6, 5]);
    }

    #[test]
    fn factor_normal_form_sorts_stars_by_center() {
        let f = Factor::new(vec![Star::new(6, [7, 8, 9, 10, 11]), Star::new(0, [1, 2, 3, 4, 5])]);
        assert_eq!(f.stars[0].center, 0);
        assert_eq!(f.stars[1].center, 6);
        assert_eq!(f.stars[0].leaves, vec![5, 4, 3, 2, 1]);
    }
}
