//! Family data: classical polynomials and energies, virtual-state seeds,
//! the shift-operator tables and the printed `X_min` anchors.

mod anchors;
mod classical;
mod seeds;
mod spec;
mod tables;

pub use anchors::{printed_x_min, AnchorCase};
pub use classical::{
    askey_wilson, classical_poly, eigen_energy, factorial, jacobi, laguerre, poch, qpoch, wilson,
};
pub use seeds::{
    check_energy_gap, virtual_candidates, virtual_seed, virtual_seed_with, Prefactor,
    SeedDescriptor,
};
pub use spec::{Family, FamilySpec, IndexSet, Params, Seed, SeedType};
pub use tables::{operator_table, IdqmShift, IdqmTable, OperatorTable, OqmTable};
