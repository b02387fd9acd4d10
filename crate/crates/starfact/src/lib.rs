//! Star factorizations of `K_v` minus a one-factor.
//!
//! For every order `v ≡ 12 (mod 30)` this crate constructs a decomposition
//! of the complete graph `K_v` minus the perfect matching
//! `I = {{u, u + v/2}}` into `3(v-2)/5` spanning factors of vertex-disjoint
//! 5-stars, and it verifies any claimed decomposition edge-exactly. No other
//! even order admits one: a single 1-factor forces `v` even, spanning
//! 5-star factors force `6 | v`, and the factor count forces `5 | v - 2`.
//!
//! The construction is the difference-method pipeline exposed module by
//! module:
//!
//! * [`base`] builds an *almost 5-star factor* on `g = v/6` points,
//! * [`lift`] lifts it to a spanning base block on `Z_v` and develops the
//!   block by +6 into `v/6` factors (Part I),
//! * [`arrays`] accounts the differences Part I covered in balanced star
//!   arrays and turns every completed row into one more factor (Part II),
//! * [`direct`] hardcodes the three orders (12, 42, 102) below the general
//!   families' parameter bounds,
//! * [`mod@construct`] routes an order to the right path and self-verifies,
//! * [`verify`] checks admissibility and certificates independently of the
//!   construction path,
//! * [`oracle`] is a brute-force existence search for desk-size orders,
//! * [`cert`] fixes the JSON certificate format and a text rendering.

pub mod arrays;
pub mod base;
pub mod cert;
pub mod construct;
pub mod direct;
pub mod graph;
pub mod lift;
pub mod oracle;
pub mod verify;

pub use construct::{construct, plan, ConstructError, ConstructPlan, Route};
pub use graph::{Decomposition, Factor, Star, Vertex};
pub use verify::{admissible, factor_count, verify_decomposition, VerifyReport};
