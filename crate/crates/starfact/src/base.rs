//! Construction of almost 5-star factors on `g` points, one family per
//! isolated-vertex count `t ∈ {0,..,5}` with `g` as below, each with two
//! branches depending on the parity of `m`:
//!
//! | t | g       | m ≥ | declared max difference |
//! |---|---------|-----|-------------------------|
//! | 0 | 30m+12  | 0   | 15m+5                   |
//! | 1 | 30m+7   | 1   | 15m+3                   |
//! | 2 | 30m+2   | 1   | 15m                     |
//! | 3 | 30m+27  | 0   | 15m+13                  |
//! | 4 | 30m+22  | 0   | 15m+10                  |
//! | 5 | 30m+17  | 1   | 15m+8                   |
//!
//! Each factor combines closed-form pure stars (descending runs covering the
//! low vertices plus step-6 runs absorbing the multiples of 6), at most one
//! mixed star, a little star on the isolated vertices, and a greedy fill of
//! prime stars over whatever is left. Every constructor validates its output
//! before returning it: each difference in the declared range appears at
//! least once, at most once per label, prime differences are pairwise
//! distinct, no edge wraps, and the stars partition the non-isolated points.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{
    AlmostStarFactor, DifferenceCensus, EdgeLabel, MixedStar, Orientation, Star, Vertex,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BaseError {
    /// Parameters below the family's bound; the corresponding lifted orders
    /// (v = 12, 42, 102) are served by the direct constructions instead.
    #[error("no base factor for t={t}, m={m} (g={g}); order v={v} is handled directly")]
    UnsupportedParams { t: u8, m: u32, g: u32, v: u32 },
    #[error("g={0} does not match any base-factor family (need g ≡ 2 mod 5)")]
    UnsupportedOrder(u32),
    /// Leftover vertex count not divisible by 6, so the greedy fill cannot
    /// make 5-stars. Signals a defect in the closed-form stars.
    #[error("greedy fill got {0} leftover vertices, not a multiple of 6")]
    LeftoverSize(usize),
    /// A bulleted property of the construction failed; carries the violated
    /// property. Never emitted for supported parameters unless a transcription
    /// is wrong, so this is a defect signal, not a user error.
    #[error("construction defect for t={t}, m={m}: {defect}")]
    Defect { t: u8, m: u32, defect: Defect },
}

/// The specific validation failure inside a [`BaseError::Defect`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Defect {
    #[error("vertex {0} covered {1} times by the spanning stars")]
    NotAPartition(Vertex, u32),
    #[error("wrap-around edge {{{0}, {1}}}")]
    WrapEdge(Vertex, Vertex),
    #[error("difference {0} missing from the declared range 1..={1}")]
    MissingDifference(u32, u32),
    #[error("pure difference {0} occurs {1} times")]
    PureOvercount(u32, u8),
    #[error("prime difference {0} occurs {1} times")]
    PrimeOvercount(u32, u8),
    #[error("star has {0} leaves where {1} expected")]
    WrongLeafCount(usize, usize),
    #[error("isolated set has {0} vertices where t={1}")]
    WrongIsolatedCount(usize, u8),
    #[error("little star does not sit exactly on the isolated vertices")]
    LittleStarMismatch,
    #[error("edge error: {0}")]
    Edge(#[from] crate::graph::EdgeError),
}

/// Family parameters: base order `g = 30m + c(t)` with `t ≡ g (mod 6)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaseParams {
    pub g: u32,
    pub m: u32,
    pub t: u8,
}

/// Additive constant of the family: g = 30m + `family_offset(t)`.
pub const fn family_offset(t: u8) -> u32 {
    match t {
        0 => 12,
        1 => 7,
        2 => 2,
        3 => 27,
        4 => 22,
        5 => 17,
        _ => unreachable!(),
    }
}

/// Smallest `m` the family covers; below it the lifted order is one of the
/// directly constructed cases.
pub const fn family_min_m(t: u8) -> u32 {
    match t {
        1 | 2 | 5 => 1,
        0 | 3 | 4 => 0,
        _ => unreachable!(),
    }
}

/// Largest difference the family guarantees covered.
pub const fn declared_max_diff(t: u8, m: u32) -> u32 {
    match t {
        0 => 15 * m + 5,
        1 => 15 * m + 3,
        2 => 15 * m,
        3 => 15 * m + 13,
        4 => 15 * m + 10,
        5 => 15 * m + 8,
        _ => unreachable!(),
    }
}

impl BaseParams {
    /// Derive parameters from the base order.
    pub fn from_g(g: u32) -> Result<Self, BaseError> {
        if g % 5 != 2 {
            return Err(BaseError::UnsupportedOrder(g));
        }
        let t = (g % 6) as u8;
        let offset = family_offset(t);
        if g < offset || !(g - offset).is_multiple_of(30) {
            return Err(BaseError::UnsupportedOrder(g));
        }
        let m = (g - offset) / 30;
        if m < family_min_m(t) {
            return Err(BaseError::UnsupportedParams { t, m, g, v: 6 * g });
        }
        Ok(Self { g, m, t })
    }

    pub fn from_t_m(t: u8, m: u32) -> Result<Self, BaseError> {
        if t > 5 {
            return Err(BaseError::UnsupportedOrder(t as u32));
        }
        let g = 30 * m + family_offset(t);
        if m < family_min_m(t) {
            return Err(BaseError::UnsupportedParams { t, m, g, v: 6 * g });
        }
        Ok(Self { g, m, t })
    }

    pub fn declared_max_diff(&self) -> u32 {
        declared_max_diff(self.t, self.m)
    }
}

/// Descending run star `(c; top, top-1, top-2, top-3, top-4)`.
fn star_descending(center: u32, top: u32) -> Star {
    Star::new(center, [top, top - 1, top - 2, top - 3, top - 4])
}

/// Step-6 run star `(c; top, top-6, top-12, top-18, top-24)`; its five
/// differences are consecutive multiples of 6.
fn star_step6(center: u32, top: u32) -> Star {
    Star::new(center, [top, top - 6, top - 12, top - 18, top - 24])
}

/// Greedy prime-star fill: repeatedly take the smallest remaining vertex as
/// center and the five largest as leaves (stored descending).
///
/// Across the returned stars all forward differences are pairwise distinct:
/// star k+1's center is larger and its leaves smaller than star k's, so its
/// whole difference range sits strictly below star k's.
///
/// # Errors
/// `LeftoverSize` when `|available|` is not a multiple of 6.
pub fn greedy_prime_stars(available: &BTreeSet<Vertex>) -> Result<Vec<Star>, BaseError> {
    if !available.len().is_multiple_of(6) {
        return Err(BaseError::LeftoverSize(available.len()));
    }
    let mut pool = available.clone();
    let mut stars = Vec::with_capacity(pool.len() / 6);
    while !pool.is_empty() {
        let center = *pool.iter().next().expect("pool nonempty");
        pool.remove(&center);
        let leaves: Vec<Vertex> = pool.iter().rev().take(5).copied().collect();
        for l in &leaves {
            pool.remove(l);
        }
        stars.push(Star::new(center, leaves));
    }
    Ok(stars)
}

/// Dispatch to the per-`t` constructor; the result has passed
/// [`validate_base`] against the family's declared difference range.
pub fn build_base_factor(params: &BaseParams) -> Result<AlmostStarFactor, BaseError> {
    match params.t {
        0 => build_t0(params.m),
        1 => build_t1(params.m),
        2 => build_t2(params.m),
        3 => build_t3(params.m),
        4 => build_t4(params.m),
        5 => build_t5(params.m),
        _ => Err(BaseError::UnsupportedOrder(params.t as u32)),
    }
}

/// Shared tail of the six constructors: fill the yet-uncovered vertices with
/// greedy prime stars, then validate everything.
fn finish(
    t: u8,
    m: u32,
    g: u32,
    pure_stars: Vec<Star>,
    mixed_star: Option<MixedStar>,
    little_star: Option<Star>,
    isolated: BTreeSet<Vertex>,
) -> Result<AlmostStarFactor, BaseError> {
    let mut remaining: BTreeSet<Vertex> = (0..g).collect();
    for s in &pure_stars {
        for x in s.vertices() {
            remaining.remove(&x);
        }
    }
    if let Some(mx) = &mixed_star {
        for x in mx.vertices() {
            remaining.remove(&x);
        }
    }
    for x in &isolated {
        remaining.remove(x);
    }
    let prime_stars = greedy_prime_stars(&remaining)?;
    let factor = AlmostStarFactor {
        g,
        t,
        pure_stars,
        mixed_star,
        prime_stars,
        little_star,
        isolated,
    };
    validate_base(&factor, declared_max_diff(t, m)).map_err(|defect| BaseError::Defect {
        t,
        m,
        defect,
    })?;
    Ok(factor)
}

/// t = 0 on g = 30m+12 points: no isolated vertices, no mixed star.
pub fn build_t0(m: u32) -> Result<AlmostStarFactor, BaseError> {
    let g = 30 * m + 12;
    let mut pure = Vec::new();
    if m % 2 == 1 {
        pure.push(Star::new(
            15 * m + 6,
            [30 * m + 11, 30 * m + 10, 30 * m + 9, 30 * m + 3, 30 * m - 3],
        ));
        for i in 1..=(5 * m).div_ceil(2) {
            pure.push(star_descending(i - 1, 15 * m + 7 - 5 * i));
        }
        for i in 1..=m.saturating_sub(1) / 2 {
            pure.push(star_step6(15 * m + 6 + i, 30 * m + 21 - 29 * i));
        }
    } else {
        for i in 1..=(5 * m + 2) / 2 {
            pure.push(star_descending(i - 1, 15 * m + 10 - 5 * i));
        }
        for i in 1..=m / 2 {
            pure.push(star_step6(15 * m + 5 + i, 30 * m + 35 - 29 * i));
        }
    }
    finish(0, m, g, pure, None, None, BTreeSet::new())
}

/// t = 1 on g = 30m+7 points, m ≥ 1: one isolated vertex, one mixed star.
pub fn build_t1(m: u32) -> Result<AlmostStarFactor, BaseError> {
    if m < 1 {
        return Err(BaseError::UnsupportedParams { t: 1, m, g: 7, v: 42 });
    }
    let g = 30 * m + 7;
    let mut pure = Vec::new();
    let (mixed, isolated_vertex);
    if m % 2 == 1 {
        for i in 1..=(5 * m).div_ceil(2) {
            pure.push(star_descending(i - 1, 15 * m + 7 - 5 * i));
        }
        for i in 1..=(m - 1) / 2 {
            pure.push(star_step6(15 * m + 3 + i, 30 * m + 18 - 29 * i));
        }
        mixed = MixedStar {
            center: 15 * m + 3,
            pure_leaves: [30 * m + 6, 30 * m, 30 * m - 6],
            prime_leaves: [30 * m + 4, 30 * m + 3],
        };
        isolated_vertex = 30 * m + 5;
    } else {
        for i in 1..=5 * m / 2 {
            pure.push(star_descending(i - 1, 15 * m + 4 - 5 * i));
        }
        // The step-6 centers run consecutively from 15m and skip the mixed
        // star's center 15m+3, hence the split formula past i = 3.
        for i in 1..=(m / 2).min(3) {
            pure.push(star_step6(15 * m - 1 + i, 30 * m + 29 - 29 * i));
        }
        for i in 4..=m / 2 {
            pure.push(star_step6(15 * m + i, 30 * m + 30 - 29 * i));
        }
        mixed = MixedStar {
            center: 15 * m + 3,
            pure_leaves: [30 * m + 6, 30 * m + 5, 30 * m + 4],
            prime_leaves: [30 * m + 3, 30 * m + 2],
        };
        isolated_vertex = 30 * m + 1;
    }
    finish(
        1,
        m,
        g,
        pure,
        Some(mixed),
        None,
        BTreeSet::from([isolated_vertex]),
    )
}

/// t = 2 on g = 30m+2 points, m ≥ 1: the two isolated vertices carry one
/// prime edge.
pub fn build_t2(m: u32) -> Result<AlmostStarFactor, BaseError> {
    if m < 1 {
        return Err(BaseError::UnsupportedParams { t: 2, m, g: 2, v: 12 });
    }
    let g = 30 * m + 2;
    let mut pure = Vec::new();
    let little = if m % 2 == 1 {
        pure.push(Star::new(
            15 * m + 1,
            [30 * m + 1, 30 * m, 30 * m - 1, 30 * m - 2, 30 * m - 8],
        ));
        for i in 1..=(5 * m - 1) / 2 {
            pure.push(star_descending(i - 1, 15 * m + 1 - 5 * i));
        }
        for i in 1..=(m - 1) / 2 {
            pure.push(star_step6(15 * m + 1 + i, 30 * m + 16 - 29 * i));
        }
        Star::new(15 * m - 3, [30 * m - 3])
    } else {
        for i in 1..=5 * m / 2 {
            pure.push(star_descending(i - 1, 15 * m + 4 - 5 * i));
        }
        for i in 1..=m / 2 {
            pure.push(star_step6(15 * m + i, 30 * m + 30 - 29 * i));
        }
        Star::new(15 * m, [30 * m])
    };
    let isolated: BTreeSet<Vertex> = little.vertices().collect();
    finish(2, m, g, pure, None, Some(little), isolated)
}

/// t = 3 on g = 30m+27 points: the three isolated vertices form a prime
/// 2-star; one mixed star.
pub fn build_t3(m: u32) -> Result<AlmostStarFactor, BaseError> {
    let g = 30 * m + 27;
    let mut pure = Vec::new();
    let (mixed, little);
    if m % 2 == 1 {
        pure.push(star_descending(15 * m + 13, 30 * m + 26));
        for i in 1..=(5 * m + 3) / 2 {
            pure.push(star_descending(i - 1, 15 * m + 13 - 5 * i));
        }
        // Step-6 centers skip the descending star's center 15m+13.
        for i in 1..=((m - 1) / 2).min(2) {
            pure.push(star_step6(15 * m + 10 + i, 30 * m + 25 - 29 * i));
        }
        for i in 3..=(m - 1) / 2 {
            pure.push(star_step6(15 * m + 11 + i, 30 * m + 26 - 29 * i));
        }
        mixed = MixedStar {
            center: 15 * m + 10,
            pure_leaves: [30 * m + 13, 30 * m + 7, 30 * m + 1],
            prime_leaves: [30 * m + 19, 30 * m + 18],
        };
        little = Star::new(15 * m + 9, [30 * m + 21, 30 * m + 20]);
    } else {
        for i in 1..=(5 * m + 4) / 2 {
            pure.push(star_descending(i - 1, 15 * m + 16 - 5 * i));
        }
        for i in 1..=m / 2 {
            pure.push(star_step6(15 * m + 13 + i, 30 * m + 43 - 29 * i));
        }
        mixed = MixedStar {
            center: 15 * m + 12,
            pure_leaves: [30 * m + 25, 30 * m + 24, 30 * m + 18],
            prime_leaves: [30 * m + 22, 30 * m + 23],
        };
        little = Star::new(15 * m + 13, [30 * m + 21, 30 * m + 26]);
    }
    let isolated: BTreeSet<Vertex> = little.vertices().collect();
    finish(3, m, g, pure, Some(mixed), Some(little), isolated)
}

/// t = 4 on g = 30m+22 points: the four isolated vertices form a prime
/// 3-star; no mixed star.
pub fn build_t4(m: u32) -> Result<AlmostStarFactor, BaseError> {
    let g = 30 * m + 22;
    let mut pure = Vec::new();
    let little = if m % 2 == 1 {
        pure.push(Star::new(
            15 * m + 11,
            [30 * m + 21, 30 * m + 20, 30 * m + 14, 30 * m + 8, 30 * m + 2],
        ));
        for i in 1..=(5 * m + 3) / 2 {
            pure.push(star_descending(i - 1, 15 * m + 13 - 5 * i));
        }
        // Centers 15m+11+i continue from the five-leaf star's center 15m+11;
        // with 15m+12+i the step stars would repeat the odd differences
        // 15m+14-30i-6k instead of exhausting the multiples of 6.
        for i in 1..=(m.saturating_sub(1)) / 2 {
            pure.push(star_step6(15 * m + 11 + i, 30 * m + 26 - 29 * i));
        }
        Star::new(15 * m + 9, [30 * m + 19, 30 * m + 18, 30 * m + 17])
    } else {
        pure.push(star_descending(15 * m + 11, 30 * m + 21));
        for i in 1..=(5 * m + 2) / 2 {
            pure.push(star_descending(i - 1, 15 * m + 10 - 5 * i));
        }
        for i in 1..=m / 2 {
            pure.push(star_step6(15 * m + 11 + i, 30 * m + 41 - 29 * i));
        }
        Star::new(15 * m + 6, [30 * m + 16, 30 * m + 15, 30 * m + 14])
    };
    let isolated: BTreeSet<Vertex> = little.vertices().collect();
    finish(4, m, g, pure, None, Some(little), isolated)
}

/// t = 5 on g = 30m+17 points, m ≥ 1: the five isolated vertices form a
/// prime 4-star; one mixed star.
pub fn build_t5(m: u32) -> Result<AlmostStarFactor, BaseError> {
    if m < 1 {
        return Err(BaseError::UnsupportedParams { t: 5, m, g: 17, v: 102 });
    }
    let g = 30 * m + 17;
    let mut pure = Vec::new();
    let (mixed, little);
    if m % 2 == 1 {
        for i in 1..=(5 * m + 3) / 2 {
            pure.push(star_descending(i - 1, 15 * m + 13 - 5 * i));
        }
        for i in 1..=(m - 1) / 2 {
            pure.push(star_step6(15 * m + 10 + i, 30 * m + 25 - 29 * i));
        }
        mixed = MixedStar {
            center: 15 * m + 10,
            pure_leaves: [30 * m + 13, 30 * m + 7, 30 * m + 1],
            prime_leaves: [30 * m + 11, 30 * m + 10],
        };
        little = Star::new(
            15 * m + 9,
            [30 * m + 16, 30 * m + 15, 30 * m + 14, 30 * m + 12],
        );
    } else {
        for i in 1..=(5 * m + 2) / 2 {
            pure.push(star_descending(i - 1, 15 * m + 10 - 5 * i));
        }
        // First step star sits at center 15m+7; later ones skip the isolated
        // vertex 15m+8, hence the +i centers starting from i = 2.
        pure.push(star_step6(15 * m + 7, 30 * m + 7));
        for i in 2..=m / 2 {
            pure.push(star_step6(15 * m + 7 + i, 30 * m + 37 - 29 * i));
        }
        mixed = MixedStar {
            center: 15 * m + 6,
            pure_leaves: [30 * m + 14, 30 * m + 13, 30 * m + 12],
            prime_leaves: [30 * m + 11, 30 * m + 10],
        };
        little = Star::new(
            15 * m + 8,
            [30 * m + 16, 30 * m + 15, 30 * m + 9, 30 * m + 8],
        );
    }
    let isolated: BTreeSet<Vertex> = little.vertices().collect();
    finish(5, m, g, pure, Some(mixed), Some(little), isolated)
}

/// Check every structural property of an almost 5-star factor and return its
/// difference census.
///
/// Asserted: spanning stars partition `{0..g} \ isolated`; star shapes (5
/// leaves per factor star, `t-1` per little star, isolated set of size `t`
/// equal to the little star's vertices); no wrap-around edges; every
/// difference in `1..=declared_max_diff` covered at least once; at most one
/// pure and one prime occurrence per difference (little-star edges count as
/// prime).
pub fn validate_base(
    f: &AlmostStarFactor,
    declared_max_diff: u32,
) -> Result<DifferenceCensus, Defect> {
    // Shape checks.
    for s in f.pure_stars.iter().chain(f.prime_stars.iter()) {
        if s.leaves.len() != 5 {
            return Err(Defect::WrongLeafCount(s.leaves.len(), 5));
        }
    }
    if f.isolated.len() != f.t as usize {
        return Err(Defect::WrongIsolatedCount(f.isolated.len(), f.t));
    }
    match (&f.little_star, f.t) {
        (None, 0 | 1) => {}
        (Some(ls), t) if t >= 2 => {
            if ls.leaves.len() != t as usize - 1 {
                return Err(Defect::WrongLeafCount(ls.leaves.len(), t as usize - 1));
            }
            let on: BTreeSet<Vertex> = ls.vertices().collect();
            if on != f.isolated {
                return Err(Defect::LittleStarMismatch);
            }
        }
        _ => return Err(Defect::LittleStarMismatch),
    }

    // Partition of {0..g} \ isolated by the spanning stars.
    let mut cover = vec![0u32; f.g as usize];
    let mut mark = |x: Vertex| {
        cover[x as usize] += 1;
    };
    for s in &f.pure_stars {
        s.vertices().for_each(&mut mark);
    }
    if let Some(mx) = &f.mixed_star {
        mx.vertices().for_each(&mut mark);
    }
    for s in &f.prime_stars {
        s.vertices().for_each(&mut mark);
    }
    for x in 0..f.g {
        let expected = u32::from(!f.isolated.contains(&x));
        if cover[x as usize] != expected {
            return Err(Defect::NotAPartition(x, cover[x as usize]));
        }
    }

    // Differences: no wraps, per-label occurrence bounds, range coverage.
    let mut census = DifferenceCensus::new(f.g / 2);
    for e in f.labeled_edges()? {
        if e.orientation == Orientation::WrapAround {
            return Err(Defect::WrapEdge(e.u, e.w));
        }
        census.record(e.diff, e.label);
        match e.label {
            EdgeLabel::Pure => {
                if census.pure_count(e.diff) > 1 {
                    return Err(Defect::PureOvercount(e.diff, census.pure_count(e.diff)));
                }
            }
            EdgeLabel::Prime => {
                if census.prime_count(e.diff) > 1 {
                    return Err(Defect::PrimeOvercount(e.diff, census.prime_count(e.diff)));
                }
            }
        }
    }
    for d in 1..=declared_max_diff {
        if census.pure_count(d) + census.prime_count(d) == 0 {
            return Err(Defect::MissingDifference(d, declared_max_diff));
        }
    }
    Ok(census)
}
