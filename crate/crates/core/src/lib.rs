//! Exact evaluation of Menon-type gcd sums in several variables.
//!
//! The crate computes the averages
//!
//! ```text
//! S(m_1..m_r) = 1/M       * sum_{k <= M}              prod_i f_i(gcd(g_i(k), m_i))
//! R(m_1..m_r) = 1/phi(M)  * sum_{k <= M, (k, M) = 1}  prod_i f_i(gcd(g_i(k), m_i))
//! ```
//!
//! both by direct summation and through divisor-sum formulas driven by the
//! congruence counts `N_G` and `eta_G`, together with a catalog of classical
//! identities (Menon, Richards, Sury, ...) and three independent ways of
//! counting the cyclic subgroups of `C_{m_1} x ... x C_{m_r}`.
//!
//! All values are exact: integers are `u64`/`i128` and fractions are
//! [`Rational`]. Nothing is ever rounded or wrapped.

pub mod arith;
pub mod congruence;
pub mod error;
pub mod groups;
pub mod menon;
pub mod multifunc;
pub mod rational;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Rational;

/// Work caps for the brute-force parts of the crate.
///
/// Each cap bounds one kind of loop; exceeding it yields [`Error::Budget`]
/// instead of an unbounded computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Residues examined per congruence count (summed over prime-power blocks).
    pub residues: u64,
    /// Terms of a direct sum (the big modulus `M`, or `n^s` for multi-index sums).
    pub direct_terms: u64,
    /// Size of a divisor grid `tau(m_1) * ... * tau(m_r)`.
    pub divisor_grid: u64,
    /// Elements enumerated by the cyclic-subgroup oracle.
    pub enumeration: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            residues: 10_000_000,
            direct_terms: 10_000_000,
            divisor_grid: 10_000_000,
            enumeration: 100_000,
        }
    }
}

impl Limits {
    pub(crate) fn check(what: &'static str, needed: u128, limit: u64) -> Result<()> {
        if needed > limit as u128 {
            Err(Error::Budget {
                what,
                needed,
                limit,
            })
        } else {
            Ok(())
        }
    }
}
