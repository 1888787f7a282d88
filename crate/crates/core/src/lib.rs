//! Exact lattice-path counting inside `m x ∞` tables.
//!
//! * [`pathtable`]: count tables and a brute-force path enumerator
//! * [`deltaops`]: multiplier polynomials in the difference operator
//! * [`recurrence`]: reduced transfer matrices and minimal recurrences
//! * [`gfmatrix`]: multiplicative order of the reduced matrices over GF(q)

pub mod classical;
pub mod cli;
pub mod deltaops;
pub mod error;
pub mod factor;
pub mod gfmatrix;
pub mod linalg;
pub mod pathtable;
pub mod poly;
pub mod recurrence;
pub mod serde_big;
pub mod verify;

pub use error::{Error, Result};
