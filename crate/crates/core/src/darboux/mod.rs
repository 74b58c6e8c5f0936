//! Multi-indexed systems: `Xi_D` and `P_{D,n}` from seed Wronskians
//! (single-step `F-hat` for the shift families), the shift operators
//! `F-hat`, `B-hat` and the round-trip calibration of their constants.

mod calibrate;
mod operators;
mod system;
mod wronskian;

pub use calibrate::{c_f_candidates, calibrate, calibrate_with, Calibration, CALIBRATION_N};
pub use operators::{apply_b, apply_f, BOutcome, Step};
pub use system::{BChain, Conventions, MultiIndexedSystem, TableFn};
pub use wronskian::{b_poly, eta_determinant, raw_p, raw_xi, twisted_wronskian, x_ring_cross_check, TwistedColumn};
