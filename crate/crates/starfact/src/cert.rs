//! Certificate serialization.
//!
//! The JSON schema is bit-exact and stable:
//!
//! ```json
//! {"v": 12,
//!  "one_factor": [[0, 6], [1, 7], ...],
//!  "factors": [[{"center": 0, "leaves": [5, 4, 3, 2, 1]}, ...], ...]}
//! ```
//!
//! with `one_factor` sorted by first endpoint, stars sorted by center within
//! each factor, and leaves descending — the normal form every constructed
//! decomposition already carries, so serialize ∘ parse is the identity on
//! constructed certificates.
//!
//! The text format is for reading, one star per line as `c; l1 l2 l3 l4 l5`
//! with a blank line between factors; it is not parsed back.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Decomposition;

#[derive(Debug, Error)]
pub enum CertError {
    #[error("invalid certificate: {0}")]
    Json(#[from] serde_json::Error),
}

pub fn to_json(d: &Decomposition) -> String {
    serde_json::to_string(d).expect("decomposition serializes")
}

pub fn from_json(text: &str) -> Result<Decomposition, CertError> {
    Ok(serde_json::from_str(text)?)
}

pub fn to_text(d: &Decomposition) -> String {
    let mut out = String::new();
    writeln!(out, "v {}", d.v).unwrap();
    write!(out, "I:").unwrap();
    for &(u, w) in &d.one_factor {
        write!(out, " {u}-{w}").unwrap();
    }
    writeln!(out).unwrap();
    for factor in &d.factors {
        writeln!(out).unwrap();
        for star in &factor.stars {
            writeln!(out, "{star}").unwrap();
        }
    }
    out
}
