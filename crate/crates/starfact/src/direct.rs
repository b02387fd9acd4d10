//! Hand-listed decompositions for v = 12, 42 and 102, the three orders
//! whose base parameters sit below the general families' bounds.
//!
//! For v = 42 and v = 102 the listed stars form one spanning factor that is
//! developed by +6 like every other base block; the balanced star arrays
//! then complete the decomposition. v = 12 is small enough that all six
//! factors are listed outright.

use crate::arrays::{complete_arrays, ledger_from_factors, part2_factors, ArrayError};
use crate::graph::{Decomposition, Factor, Star};
use crate::lift::develop;

/// The half-period matching `{{u, u + v/2}}` removed from `K_v`.
pub fn half_period_matching(v: u32) -> Vec<(u32, u32)> {
    (0..v / 2).map(|u| (u, u + v / 2)).collect()
}

/// All six factors for v = 12, listed directly; no development, no arrays.
pub fn direct_12() -> Decomposition {
    let mut factors = Vec::with_capacity(6);
    for i in 1..=6u32 {
        let first = Star::new(i - 1, [i, i + 1, i + 2, i + 3, i + 4]);
        let second = Star::new(
            i + 5,
            [
                (i + 6) % 12,
                (i + 7) % 12,
                (i + 8) % 12,
                (i + 9) % 12,
                (i + 10) % 12,
            ],
        );
        factors.push(Factor::new(vec![first, second]));
    }
    Decomposition {
        v: 12,
        one_factor: half_period_matching(12),
        factors,
    }
}

/// Base-block stars for v = 42.
pub fn v42_base_stars() -> Vec<Star> {
    vec![
        Star::new(36, [37, 38, 39, 40, 41]),
        Star::new(0, [6, 12, 18, 28, 35]),
        Star::new(1, [7, 13, 19, 29, 30]),
        Star::new(2, [8, 14, 20, 24, 31]),
        Star::new(3, [9, 15, 21, 25, 32]),
        Star::new(4, [10, 16, 22, 26, 33]),
        Star::new(5, [11, 17, 23, 27, 34]),
    ]
}

/// Base-block stars for v = 102 (three groups of hand-listed stars).
pub fn v102_base_stars() -> Vec<Star> {
    let mut stars = Vec::with_capacity(17);
    for k in 0..6u32 {
        stars.push(Star::new(k, [k + 6, k + 12, k + 18, k + 24, k + 30]));
    }
    stars.push(Star::new(36, [72, 78, 84, 94, 101]));
    stars.push(Star::new(37, [73, 79, 85, 95, 96]));
    stars.push(Star::new(38, [74, 80, 86, 90, 97]));
    stars.push(Star::new(39, [75, 81, 87, 91, 98]));
    stars.push(Star::new(40, [76, 82, 88, 92, 99]));
    stars.push(Star::new(41, [77, 83, 89, 93, 100]));
    stars.push(Star::new(42, [49, 50, 51, 52, 53]));
    stars.push(Star::new(43, [54, 56, 57, 58, 59]));
    stars.push(Star::new(44, [60, 61, 63, 64, 65]));
    stars.push(Star::new(45, [66, 67, 68, 70, 71]));
    stars.push(Star::new(46, [47, 48, 55, 62, 69]));
    stars
}

fn develop_and_complete(v: u32, block: Vec<Star>) -> Result<Decomposition, ArrayError> {
    let mut factors = develop(&block, v, v / 6);
    let ledger = ledger_from_factors(v, &factors)?;
    let arrays = complete_arrays(&ledger)?;
    factors.extend(part2_factors(&arrays, v));
    Ok(Decomposition {
        v,
        one_factor: half_period_matching(v),
        factors,
    })
}

/// v = 42: 7 Part I factors by development, 17 more from the arrays.
pub fn direct_42() -> Result<Decomposition, ArrayError> {
    develop_and_complete(42, v42_base_stars())
}

/// v = 102: 17 Part I factors by development, 43 more from the arrays.
pub fn direct_102() -> Result<Decomposition, ArrayError> {
    develop_and_complete(102, v102_base_stars())
}
