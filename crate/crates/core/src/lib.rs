//! Runs (maximal repetitions) in words, exact sums of their exponents, and
//! the handle sets attached to each run.
//!
//! The crate is `#![no_std]` and needs only `alloc`. File formats, the
//! command line front end and table rendering live in the `runexp` crate.
//!
//! Positions reported by this crate are 1-based: the first letter of a word
//! is position 1, and inter-position `k` sits between letters `k` and `k + 1`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bounds;
pub mod error;
pub mod exact;
pub mod families;
pub mod handles;
pub mod lce;
pub mod periods;
pub mod runs;
pub mod suffix_array;
pub mod word;

pub use error::{Error, Result};
pub use families::{paper_w, FamilySource, FamilySpec};
pub use handles::{handles_of_run, verify_handle_properties, HandleReport, HandleSet};
pub use periods::{border_table, rotation_extremes, shortest_period, RotationExtremes};
pub use runs::{find_runs, find_runs_bruteforce, run_stats, Exponent, Run, RunStats};
pub use word::{Alphabet, Morphism, Word};
