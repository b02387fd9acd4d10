//! Top-level dispatcher: route an admissible order to its direct
//! construction or through the general base-factor pipeline, and verify the
//! result before handing it out.

use thiserror::Error;

use crate::arrays::{complete_arrays, ledger_from_factors, part2_factors, ArrayError};
use crate::base::{build_base_factor, BaseError, BaseParams};
use crate::direct::{direct_102, direct_12, direct_42, half_period_matching};
use crate::graph::Decomposition;
use crate::lift::{build_base_block, develop, LiftError};
use crate::verify::{admissible, factor_count, verify_decomposition, AdmissibilityReason};

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("v = {v} is not admissible: {reason}")]
    Inadmissible {
        v: u32,
        reason: AdmissibilityReason,
    },
    #[error(transparent)]
    Base(#[from] BaseError),
    #[error(transparent)]
    Lift(#[from] LiftError),
    #[error(transparent)]
    Arrays(#[from] ArrayError),
    /// The built decomposition failed its own verification; surfaced
    /// verbatim, never silently repaired.
    #[error("self-verification failed for v = {v}: {first_error}")]
    SelfVerification { v: u32, first_error: String },
}

/// Which construction serves an order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Direct12,
    Direct42,
    Direct102,
    General { t: u8, m: u32 },
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Direct12 => write!(f, "direct-12"),
            Self::Direct42 => write!(f, "direct-42"),
            Self::Direct102 => write!(f, "direct-102"),
            Self::General { t, m } => write!(f, "general(t={t}, m={m})"),
        }
    }
}

/// The routing decision plus the factor counts it will produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructPlan {
    pub v: u32,
    pub route: Route,
    pub part1_factors: u64,
    pub part2_factors: u64,
}

/// Work out the route for an order without building anything.
pub fn plan(v: u32) -> Result<ConstructPlan, ConstructError> {
    let adm = admissible(v);
    if !adm.admissible {
        return Err(ConstructError::Inadmissible {
            v,
            reason: adm.reason,
        });
    }
    let total = factor_count(v).expect("admissible order has a factor count");
    let (route, part1) = match v {
        12 => (Route::Direct12, 6),
        42 => (Route::Direct42, 7),
        102 => (Route::Direct102, 17),
        _ => {
            let (g, m, t) = adm.params.expect("admissible order has params");
            (Route::General { t, m }, u64::from(g))
        }
    };
    Ok(ConstructPlan {
        v,
        route,
        part1_factors: part1,
        part2_factors: total - part1,
    })
}

/// Build the decomposition of `K_v - I` into 5-star factors, where `I` is
/// the half-period matching.
///
/// Every result passes [`verify_decomposition`] before being returned.
pub fn construct(v: u32) -> Result<Decomposition, ConstructError> {
    let plan = plan(v)?;
    let decomposition = match plan.route {
        Route::Direct12 => direct_12(),
        Route::Direct42 => direct_42()?,
        Route::Direct102 => direct_102()?,
        Route::General { t, m } => {
            let params = BaseParams::from_t_m(t, m)?;
            let base = build_base_factor(&params)?;
            let block = build_base_block(&base)?;
            let mut factors = develop(&block.star_list(), v, v / 6);
            let ledger = ledger_from_factors(v, &factors)?;
            let arrays = complete_arrays(&ledger)?;
            factors.extend(part2_factors(&arrays, v));
            Decomposition {
                v,
                one_factor: half_period_matching(v),
                factors,
            }
        }
    };
    let report = verify_decomposition(&decomposition);
    if !report.valid {
        return Err(ConstructError::SelfVerification {
            v,
            first_error: report
                .errors
                .first()
                .map(ToString::to_string)
                .unwrap_or_default(),
        });
    }
    Ok(decomposition)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plan_routes() {
        assert_eq!(plan(12).unwrap().route, Route::Direct12);
        assert_eq!(plan(42).unwrap().route, Route::Direct42);
        assert_eq!(plan(102).unwrap().route, Route::Direct102);
        assert_eq!(plan(72).unwrap().route, Route::General { t: 0, m: 0 });
        assert_eq!(plan(192).unwrap().route, Route::General { t: 2, m: 1 });
        assert_eq!(plan(222).unwrap().route, Route::General { t: 1, m: 1 });
        assert!(matches!(
            plan(40),
            Err(ConstructError::Inadmissible { .. })
        ));
    }

    #[test]
    fn construct_72_first_general_order() {
        let d = construct(72).unwrap();
        assert_eq!(d.factors.len(), 42);
        assert_eq!(plan(72).unwrap().part1_factors, 12);
    }

    #[test]
    fn construct_192_uses_t2() {
        let d = construct(192).unwrap();
        assert_eq!(d.factors.len(), 114);
    }

    #[test]
    fn construct_162_uses_t3_even_branch() {
        // The smallest order exercising the replacement t=3 patch stars.
        let d = construct(162).unwrap();
        assert_eq!(d.factors.len(), 96);
    }
}
