//! Exact construction of multi-indexed Laguerre, Jacobi, Wilson and
//! Askey-Wilson polynomials and verification of their recurrence relations
//! with constant coefficients.

pub mod algebra;
pub mod darboux;
pub mod error;
pub mod families;
pub mod recurrence;

pub use error::{Error, Result};
pub mod rings;
pub mod xbuilder;

use std::sync::atomic::{AtomicBool, Ordering};

static CHECKED: AtomicBool = AtomicBool::new(false);

/// Enables the per-call ring verifications (always on in debug builds).
pub fn set_checked(on: bool) {
    CHECKED.store(on, Ordering::Relaxed);
}

pub fn checked() -> bool {
    cfg!(debug_assertions) || CHECKED.load(Ordering::Relaxed)
}
