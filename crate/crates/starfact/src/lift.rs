//! Lifting an almost 5-star factor on `g` points to a base block of 5-stars
//! on `v = 6g` vertices, patching the excluded blocks, and developing the
//! block cyclically into `v/6` factors.
//!
//! Write `V_i = {x : x ≡ i (mod 6)}`. A pure star lifts to six copies, copy
//! `i` living entirely inside `V_i`; its edge differences are six times the
//! base differences, so pure edges own all differences ≡ 0 (mod 6). Prime
//! stars keep their center in `V_i` but push leaf slot `j` into residue
//! `(i + j) mod 6`, so slot-`j` edges have difference ≡ j (mod 6). The mixed
//! star does the same for its two prime leaves with offsets `i+1` and `i+2`.
//!
//! The `6t` lifted copies of the `t` excluded vertices are covered by `t`
//! hand-arranged patch stars. Development is translation by +6 (mod v): each
//! base edge's orbit consists of the `v/6` edges with its difference whose
//! tails exhaust one residue class, so the block's (difference, tail-class)
//! cells are exactly what the orbit covers.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{
    edge_difference, tail_of, AlmostStarFactor, Factor, MixedStar, Star, Vertex,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LiftError {
    #[error("lift defect: vertex {0} covered {1} times by the base block")]
    NotSpanning(Vertex, u32),
    #[error("lift defect: edge {{{0}, {1}}} has the half-period difference {2}")]
    HalfPeriodEdge(Vertex, Vertex, u32),
    #[error("lift defect: two block edges share difference {diff} and tail class {class}")]
    CellCollision { class: u8, diff: u32 },
    #[error("patch shape mismatch: t={t} with {given} excluded vertices")]
    PatchShape { t: u8, given: usize },
    #[error("edge error: {0}")]
    Edge(#[from] crate::graph::EdgeError),
}

/// Where a base-block star came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    PureLift,
    MixedLift,
    PrimeLift,
    Patch,
}

/// A spanning factor of 5-stars on `Z_v` remembered star-by-star, used as
/// the seed of the development orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseBlock {
    pub v: u32,
    pub stars: Vec<(Star, Provenance)>,
}

impl BaseBlock {
    pub fn star_list(&self) -> Vec<Star> {
        self.stars.iter().map(|(s, _)| s.clone()).collect()
    }
}

/// Copy `i` of a pure star: everything scaled by 6 and shifted into `V_i`.
pub fn lift_pure(s: &Star, i: u8) -> Star {
    let i = u32::from(i);
    Star::new(
        6 * s.center + i,
        s.leaves.iter().map(|&l| 6 * l + i).collect::<Vec<_>>(),
    )
}

/// Copy `i` of the mixed star: pure leaves shift like a pure star, the two
/// prime leaves take residue offsets `(i+1) mod 6` and `(i+2) mod 6`.
pub fn lift_mixed(m: &MixedStar, i: u8) -> Star {
    let i = u32::from(i);
    let mut leaves: Vec<Vertex> = m.pure_leaves.iter().map(|&l| 6 * l + i).collect();
    leaves.push(6 * m.prime_leaves[0] + (i + 1) % 6);
    leaves.push(6 * m.prime_leaves[1] + (i + 2) % 6);
    Star::new(6 * m.center + i, leaves)
}

/// Copy `i` of a prime star: center in `V_i`, leaf slot `j` (1-based) in
/// residue `(i + j) mod 6`.
///
/// The center is `6c + i`; with a shared center the six copies could not be
/// vertex-disjoint within one factor, so the spanning requirement forces the
/// `+ i`.
pub fn lift_prime(p: &Star, i: u8) -> Star {
    let i = u32::from(i);
    Star::new(
        6 * p.center + i,
        p.leaves
            .iter()
            .enumerate()
            .map(|(slot, &l)| 6 * l + (i + slot as u32 + 1) % 6)
            .collect::<Vec<_>>(),
    )
}

/// The `t` patch stars covering `{6x, .., 6x+5}` for each excluded vertex
/// `x`, transcribed per case on the ascending excluded vertices `x_1 < x_2 <
/// ...`.
///
/// Two arrangements deviate from the obvious per-case pattern:
///
/// * `t = 2`: the second star's last leaf is `6x_2` (a `6x_2 + 1` there
///   would double-cover that vertex and leave `6x_2` uncovered).
/// * `t = 3` with `6(x_3 - x_1) + 3 = v/2`: the three-star arrangement used
///   otherwise would put the edge `{6x_1 + 1, 6x_3 + 4}` on the removed
///   one-factor. The replacement keeps every edge off the half-period and
///   off the difference/tail-class cells owned by the lifted stars.
pub fn patch_stars(t: u8, excluded: &BTreeSet<Vertex>, g: u32) -> Result<Vec<Star>, LiftError> {
    if excluded.len() != t as usize {
        return Err(LiftError::PatchShape {
            t,
            given: excluded.len(),
        });
    }
    let x: Vec<u32> = excluded.iter().copied().collect();
    Ok(match t {
        0 => vec![],
        1 => {
            let b = 6 * x[0];
            vec![Star::new(b, [b + 1, b + 2, b + 3, b + 4, b + 5])]
        }
        2 => {
            let (a, b) = (6 * x[0], 6 * x[1]);
            vec![
                Star::new(a, [b + 1, b + 2, b + 3, b + 4, b + 5]),
                Star::new(a + 1, [a + 2, a + 3, a + 4, a + 5, b]),
            ]
        }
        3 => {
            let (a, b, c) = (6 * x[0], 6 * x[1], 6 * x[2]);
            if 6 * (x[2] - x[0]) + 3 == 3 * g {
                vec![
                    Star::new(a, [b + 1, b + 2, b + 3, b + 4, b + 5]),
                    Star::new(a + 1, [a + 2, a + 3, a + 4, a + 5, b]),
                    Star::new(c, [c + 1, c + 2, c + 3, c + 4, c + 5]),
                ]
            } else {
                vec![
                    Star::new(a, [b + 1, b + 2, b + 3, b + 4, b + 5]),
                    Star::new(a + 1, [c, c + 2, c + 3, c + 4, c + 5]),
                    Star::new(a + 2, [a + 3, a + 4, a + 5, b, c + 1]),
                ]
            }
        }
        4 => {
            let (a, b, c, d) = (6 * x[0], 6 * x[1], 6 * x[2], 6 * x[3]);
            vec![
                Star::new(a, [b + 1, b + 2, b + 3, b + 4, b + 5]),
                Star::new(a + 1, [c + 2, c + 3, c + 4, c + 5, c]),
                Star::new(a + 2, [d + 3, d + 4, d + 5, d, d + 1]),
                Star::new(a + 3, [a + 4, a + 5, b, c + 1, d + 2]),
            ]
        }
        5 => {
            let (a, b, c, d, e) = (6 * x[0], 6 * x[1], 6 * x[2], 6 * x[3], 6 * x[4]);
            vec![
                Star::new(a, [b + 1, b + 2, b + 3, b + 4, b + 5]),
                Star::new(a + 1, [c, c + 2, c + 3, c + 4, c + 5]),
                Star::new(a + 2, [d, d + 1, d + 3, d + 4, d + 5]),
                Star::new(a + 3, [e, e + 1, e + 2, e + 4, e + 5]),
                Star::new(a + 4, [a + 5, b, c + 1, d + 2, e + 3]),
            ]
        }
        _ => {
            return Err(LiftError::PatchShape {
                t,
                given: excluded.len(),
            })
        }
    })
}

/// Assemble the base block on `v = 6g` vertices: all six copies of every
/// spanning star plus the patch stars.
///
/// Validates that the result partitions `Z_v`, avoids the half-period
/// difference, and never covers a (difference, tail-class) cell twice; the
/// last property is what makes the development orbit edge-exact.
pub fn build_base_block(f: &AlmostStarFactor) -> Result<BaseBlock, LiftError> {
    let v = 6 * f.g;
    let mut stars: Vec<(Star, Provenance)> = Vec::with_capacity(f.g as usize);
    for i in 0..6u8 {
        for s in &f.pure_stars {
            stars.push((lift_pure(s, i), Provenance::PureLift));
        }
        if let Some(m) = &f.mixed_star {
            stars.push((lift_mixed(m, i), Provenance::MixedLift));
        }
        for p in &f.prime_stars {
            stars.push((lift_prime(p, i), Provenance::PrimeLift));
        }
    }
    for s in patch_stars(f.t, &f.isolated, f.g)? {
        stars.push((s, Provenance::Patch));
    }

    // Partition of Z_v.
    let mut cover = vec![0u32; v as usize];
    for (s, _) in &stars {
        for x in s.vertices() {
            cover[x as usize] += 1;
        }
    }
    for x in 0..v {
        if cover[x as usize] != 1 {
            return Err(LiftError::NotSpanning(x, cover[x as usize]));
        }
    }

    // No half-period edges; one edge per (difference, tail class) cell.
    let mut cells = BTreeSet::new();
    for (s, _) in &stars {
        for (u, w) in s.edges() {
            let geom = edge_difference(u, w, v)?;
            if 2 * geom.diff == v {
                return Err(LiftError::HalfPeriodEdge(u, w, geom.diff));
            }
            let class = (tail_of(u, w, v)? % 6) as u8;
            if !cells.insert((class, geom.diff)) {
                return Err(LiftError::CellCollision {
                    class,
                    diff: geom.diff,
                });
            }
        }
    }

    Ok(BaseBlock { v, stars })
}

/// Translate a factor-shaped block by +6 (mod v), `count` times, returning
/// the factors in orbit order (j = 0 is the block itself). `count` may not
/// exceed the orbit length `v/6`.
pub fn develop(block: &[Star], v: u32, count: u32) -> Vec<Factor> {
    debug_assert!(6 * count <= v);
    (0..count)
        .map(|j| Factor::new(block.iter().map(|s| s.translate(6 * j, v)).collect()))
        .collect()
}
