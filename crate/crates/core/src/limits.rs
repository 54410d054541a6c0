//! Size guards.
//!
//! Every constructor that can blow up exponentially checks its output size
//! against these bounds. The defaults keep the full verification suite in
//! the seconds range; they can be raised per call site or, in the CLI, via
//! `MTKIT_MAX_*` environment variables.

use crate::error::{Error, Result};

/// Largest carrier (lattice, powerset, downset family, cut family) we will
/// materialize.
pub const MAX_CARRIER: usize = 1 << 16;

/// Largest atom set for an MT-algebra; the carrier is its powerset.
pub const MAX_ATOMS: usize = 16;

/// Largest candidate count for brute-force morphism enumeration.
pub const MAX_CANDIDATES: usize = 1 << 12;

pub fn guard_carrier(size: usize, bound: usize) -> Result<()> {
    if size > bound {
        Err(Error::TooLarge { size, bound })
    } else {
        Ok(())
    }
}
