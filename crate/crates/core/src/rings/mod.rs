//! Function rings: derivation rings for the continuous families and shift
//! rings with check-function extraction for the discrete-shift families.

mod idqm;
mod laurent;
mod oqm;

pub use idqm::{
    difference_quotient, shift_product, shift_sum, staggered_quotient, weighted_pair, AwRing,
    ShiftRing, WilsonRing,
};
pub use laurent::Laurent;
pub use oqm::{apply_derivation, DerivationRing, JElem};
