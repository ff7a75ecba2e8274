//! Canonical presentations, Mahonian statistics and Foata-type bijections on
//! the symmetric group `S_n`, the alternating group `A_{n+1}` and the
//! parabolic quotients used for the `q`-generalisation.
//!
//! Permutations are one-line words on `1..=n`. Products compose right to
//! left, so right multiplication by `s_i` swaps the letters in positions `i`
//! and `i + 1`.

pub mod bijections;
pub mod canonical;
pub mod covering;
pub mod error;
pub mod foata;
pub mod harness;
pub mod patterns;
pub mod perm;
pub mod stats;

pub use error::{Error, Result};
pub use perm::{alternating_group, symmetric_group, Permutation};
