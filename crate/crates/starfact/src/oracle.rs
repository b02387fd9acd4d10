//! Independent brute-force existence search for tiny orders.
//!
//! Backtracking over 5-star factors: the least vertex not yet covered by
//! the current factor is placed either as a center (choosing 5 leaves) or
//! as a leaf (choosing a center and 4 co-leaves), with edge-availability
//! and center-quota pruning. Over the whole decomposition each vertex is a
//! center exactly `(v-2)/10` times — its degree in `K_v - I` is `v - 2` and
//! each factor contributes 5 or 1 — which prunes hard.
//!
//! This module deliberately shares nothing with the constructive pipeline;
//! it leans only on the certificate types and the verifier.

use crate::graph::{Decomposition, Factor, Star, Vertex};
use crate::verify::verify_decomposition;

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub v: u32,
    pub node_budget: u64,
    /// The matching removed from `K_v`; defaults to the half-period one.
    pub matching: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("search requires v even and divisible by 6, got {0}")]
    BadOrder(u32),
}

impl SearchConfig {
    pub fn new(v: u32) -> Result<Self, OracleError> {
        if v == 0 || !v.is_multiple_of(6) {
            return Err(OracleError::BadOrder(v));
        }
        Ok(Self {
            v,
            node_budget: 10_000_000,
            matching: (0..v / 2).map(|u| (u, u + v / 2)).collect(),
        })
    }

    pub fn with_budget(mut self, nodes: u64) -> Self {
        self.node_budget = nodes;
        self
    }
}

/// What the search established.
#[derive(Debug)]
pub enum SearchOutcome {
    /// A decomposition that has passed the verifier.
    Found(Box<Decomposition>),
    /// No decomposition exists; carries the arithmetic witness.
    Nonexistent { reason: String },
    /// Search space not exhausted within the node budget: no conclusion.
    BudgetExhausted { nodes: u64 },
}

struct Searcher {
    v: usize,
    num_factors: usize,
    stars_per_factor: usize,
    /// Free edges of `K_v - I` not used by any placed star.
    free: Vec<bool>,
    /// Remaining times each vertex may serve as a center.
    quota: Vec<u32>,
    assigned: Vec<bool>,
    assigned_count: usize,
    partial: Vec<Star>,
    completed: Vec<Factor>,
    nodes: u64,
    budget: u64,
}

struct OutOfBudget;

impl Searcher {
    fn edge_index(&self, a: usize, b: usize) -> usize {
        let (a, b) = (a.min(b), a.max(b));
        a * self.v - a * (a + 1) / 2 + (b - a - 1)
    }

    fn place(&mut self, star: &Star) {
        self.quota[star.center as usize] -= 1;
        self.assigned[star.center as usize] = true;
        for &l in &star.leaves {
            self.assigned[l as usize] = true;
            let idx = self.edge_index(star.center as usize, l as usize);
            self.free[idx] = false;
        }
        self.assigned_count += 6;
        self.partial.push(star.clone());
    }

    fn unplace(&mut self) {
        let star = self.partial.pop().expect("a star to remove");
        self.quota[star.center as usize] += 1;
        self.assigned[star.center as usize] = false;
        for &l in &star.leaves {
            self.assigned[l as usize] = false;
            let idx = self.edge_index(star.center as usize, l as usize);
            self.free[idx] = true;
        }
        self.assigned_count -= 6;
    }

    fn try_star(&mut self, star: Star) -> Result<bool, OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OutOfBudget);
        }
        self.place(&star);
        let found = self.step()?;
        if !found {
            self.unplace();
        }
        Ok(found)
    }

    /// Enumerate k-subsets of `cands` in lexicographic order, appending each
    /// to `star.leaves`, and recurse.
    fn choose_leaves(
        &mut self,
        center: Vertex,
        fixed: &[Vertex],
        cands: &[Vertex],
        k: usize,
    ) -> Result<bool, OutOfBudget> {
        let mut idx: Vec<usize> = (0..k).collect();
        if cands.len() < k {
            return Ok(false);
        }
        loop {
            let mut leaves = fixed.to_vec();
            leaves.extend(idx.iter().map(|&i| cands[i]));
            if self.try_star(Star::new(center, leaves))? {
                return Ok(true);
            }
            // Next lexicographic k-subset.
            let mut pos = k;
            while pos > 0 {
                pos -= 1;
                if idx[pos] != pos + cands.len() - k {
                    idx[pos] += 1;
                    for j in pos + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
                if pos == 0 {
                    return Ok(false);
                }
            }
        }
    }

    fn step(&mut self) -> Result<bool, OutOfBudget> {
        if self.assigned_count == self.v {
            // Current factor complete; move to the next one. The partial
            // stack is kept aside in placement order so that a failed
            // sub-search restores the exact place/unplace pairing.
            debug_assert_eq!(self.partial.len(), self.stars_per_factor);
            let stars = std::mem::take(&mut self.partial);
            self.completed.push(Factor::new(stars.clone()));
            if self.completed.len() == self.num_factors {
                return Ok(true);
            }
            self.assigned.fill(false);
            self.assigned_count = 0;
            if self.step()? {
                return Ok(true);
            }
            self.completed.pop();
            for star in &stars {
                for x in star.vertices() {
                    self.assigned[x as usize] = true;
                }
            }
            self.assigned_count = self.v;
            self.partial = stars;
            return Ok(false);
        }

        let u = (0..self.v)
            .find(|&x| !self.assigned[x])
            .expect("an unassigned vertex") as Vertex;

        // u as center.
        if self.quota[u as usize] > 0 {
            let cands: Vec<Vertex> = (0..self.v as Vertex)
                .filter(|&w| {
                    w != u
                        && !self.assigned[w as usize]
                        && self.free[self.edge_index(u as usize, w as usize)]
                })
                .collect();
            if self.choose_leaves(u, &[], &cands, 5)? {
                return Ok(true);
            }
        }

        // u as a leaf of some center c.
        for c in 0..self.v as Vertex {
            if c == u
                || self.assigned[c as usize]
                || self.quota[c as usize] == 0
                || !self.free[self.edge_index(c as usize, u as usize)]
            {
                continue;
            }
            let cands: Vec<Vertex> = (0..self.v as Vertex)
                .filter(|&w| {
                    w != u
                        && w != c
                        && !self.assigned[w as usize]
                        && self.free[self.edge_index(c as usize, w as usize)]
                })
                .collect();
            if self.choose_leaves(c, &[u], &cands, 4)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Run the backtracking search.
///
/// Returns immediately with the counting witness when `5 ∤ 3(v-2)`; then
/// either a verified decomposition, exhaustion of the whole space
/// (nonexistence), or exhaustion of the node budget (no conclusion).
pub fn exhaustive_search(cfg: &SearchConfig) -> SearchOutcome {
    let v = cfg.v;
    if (3 * (u64::from(v) - 2)) % 5 != 0 {
        return SearchOutcome::Nonexistent {
            reason: format!(
                "a decomposition would need 3(v-2)/5 factors, but 3({v}-2) = {} is not divisible by 5",
                3 * (u64::from(v) - 2)
            ),
        };
    }
    let n = v as usize;
    let num_factors = (3 * (n - 2)) / 5;
    let mut searcher = Searcher {
        v: n,
        num_factors,
        stars_per_factor: n / 6,
        free: vec![true; n * (n - 1) / 2],
        quota: vec![(v - 2) / 10; n],
        assigned: vec![false; n],
        assigned_count: 0,
        partial: Vec::new(),
        completed: Vec::new(),
        nodes: 0,
        budget: cfg.node_budget,
    };
    // v even and 5 | 3(v-2) make the per-vertex center count (v-2)/10
    // integral, so the quota above is exact.
    for &(u, w) in &cfg.matching {
        let idx = searcher.edge_index(u as usize, w as usize);
        searcher.free[idx] = false;
    }
    match searcher.step() {
        Err(OutOfBudget) => SearchOutcome::BudgetExhausted {
            nodes: searcher.nodes,
        },
        Ok(true) => {
            let d = Decomposition {
                v,
                one_factor: cfg.matching.clone(),
                factors: searcher.completed,
            };
            let report = verify_decomposition(&d);
            assert!(
                report.valid,
                "search produced an invalid decomposition: {:?}",
                report.errors
            );
            SearchOutcome::Found(Box::new(d))
        }
        Ok(false) => SearchOutcome::Nonexistent {
            reason: "search space exhausted without finding a decomposition".into(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v6_nonexistent_by_counting() {
        let cfg = SearchConfig::new(6).unwrap();
        match exhaustive_search(&cfg) {
            SearchOutcome::Nonexistent { reason } => {
                assert!(reason.contains("not divisible by 5"), "{reason}");
            }
            other => panic!("expected nonexistence, got {other:?}"),
        }
    }

    #[test]
    fn v18_nonexistent_by_counting() {
        let cfg = SearchConfig::new(18).unwrap();
        assert!(matches!(
            exhaustive_search(&cfg),
            SearchOutcome::Nonexistent { .. }
        ));
    }

    #[test]
    fn v12_found_and_verified() {
        let cfg = SearchConfig::new(12).unwrap();
        match exhaustive_search(&cfg) {
            SearchOutcome::Found(d) => {
                assert_eq!(d.factors.len(), 6);
                assert!(verify_decomposition(&d).valid);
            }
            other => panic!("expected a decomposition, got {other:?}"),
        }
    }

    #[test]
    fn rejects_orders_off_the_lattice() {
        assert_eq!(SearchConfig::new(10).unwrap_err(), OracleError::BadOrder(10));
        assert_eq!(SearchConfig::new(0).unwrap_err(), OracleError::BadOrder(0));
    }
}
