//! Polynomial congruences: parsing, the Chinese remainder theorem, the counts
//! `N_G` / `eta_G`, and closed forms for special systems.

mod closed;
mod count;
mod crt;
mod poly;

pub use closed::{
    count_jth_roots_of_unity, count_power_roots_zero, count_square_roots_of_unity, eta_linear,
    eta_quadratic,
};
pub use count::{count_coprime_solutions, count_solutions};
pub use crt::{crt_solve, CrtOutcome};
pub use poly::{parse_poly, IntPoly, PolySystem, COEFF_CAP, MAX_DEGREE};
