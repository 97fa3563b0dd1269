//! The sums `S_F^(G)` and `R_F^(G)` and the catalog of named identities.

mod identities;
mod sums;

pub use identities::{
    decompose_n_d, named_identity, r2_adjacent_prime_power, square_minus_one_h, Identity,
    IdentityArgs, IdentityReport, ParamValue, IDENTITY_NAMES,
};
pub use sums::{sum_r_direct, sum_r_formula, sum_s_direct, sum_s_formula, MenonInstance};
