//! Closed forms for the congruence counts of special systems.

use crate::arith::{self, gcd, gcd_signed, is_prime};
use crate::error::{Error, Result};

/// `eta` of the linear system `(x - a_1, ..., x - a_r)`: 1 iff every
/// `gcd(d_i, a_i) = 1` and every `gcd(d_i, d_j)` divides `a_i - a_j`, else 0.
pub fn eta_linear(shifts: &[i64], moduli: &[u64]) -> Result<u64> {
    if shifts.len() != moduli.len() {
        return Err(Error::Arity {
            expected: moduli.len(),
            got: shifts.len(),
        });
    }
    if moduli.contains(&0) {
        return Err(Error::invalid("moduli must be positive"));
    }
    for (&a, &d) in shifts.iter().zip(moduli) {
        if gcd_signed(a as i128, d) != 1 {
            return Ok(0);
        }
    }
    for (i, (&ai, &di)) in shifts.iter().zip(moduli).enumerate() {
        for (&aj, &dj) in shifts[i + 1..].iter().zip(&moduli[i + 1..]) {
            let g = gcd(di, dj);
            if (ai as i128 - aj as i128).rem_euclid(g as i128) != 0 {
                return Ok(0);
            }
        }
    }
    Ok(1)
}

/// Coprime roots of `x^2 = a (mod n)` for odd `n` coprime to `a`: `prod_{p | n} (1 + (a/p))`.
pub fn eta_quadratic(a: i64, n: u64) -> Result<u64> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::invalid(format!(
            "eta_quadratic: n = {n} must be odd"
        )));
    }
    if gcd_signed(a as i128, n) != 1 {
        return Err(Error::invalid(format!(
            "eta_quadratic: gcd({a}, {n}) must be 1"
        )));
    }
    let f = arith::factorize(n)?;
    let mut acc = 1u64;
    for p in f.primes() {
        acc *= (1 + arith::legendre_symbol(a, p)?) as u64;
    }
    Ok(acc)
}

fn require_prime(p: u64, op: &str) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::invalid(format!("{op}: {p} is not prime")))
    }
}

fn prime_power(p: u64, a: u32, op: &'static str) -> Result<u64> {
    p.checked_pow(a).ok_or(Error::Overflow(op))
}

/// Solutions of `x^j = 0 (mod p^a)`: `p^floor((j-1) a / j)`.
pub fn count_power_roots_zero(j: u32, p: u64, a: u32) -> Result<u64> {
    if j == 0 || a == 0 {
        return Err(Error::invalid(
            "count_power_roots_zero: j and a must be positive",
        ));
    }
    require_prime(p, "count_power_roots_zero")?;
    let e = ((j as u64 - 1) * a as u64 / j as u64) as u32;
    prime_power(p, e, "count_power_roots_zero")
}

/// Solutions of `x^2 = 1 (mod p^a)`: 2 for odd `p`; 1, 2, 4 for `2`, `4`, `2^a` with `a >= 3`.
pub fn count_square_roots_of_unity(p: u64, a: u32) -> Result<u64> {
    if a == 0 {
        return Err(Error::invalid(
            "count_square_roots_of_unity: a must be positive",
        ));
    }
    require_prime(p, "count_square_roots_of_unity")?;
    Ok(match (p, a) {
        (2, 1) => 1,
        (2, 2) => 2,
        (2, _) => 4,
        _ => 2,
    })
}

/// Solutions of `x^j = 1 (mod p^a)` for an odd prime `p`.
///
/// The unit group mod `p^a` is cyclic of order `p^(a-1) (p-1)`, so the count is
/// `gcd(j, p^(a-1) (p-1))`. This is `gcd(j, p-1)` unless `p | j` and `a >= 2`.
pub fn count_jth_roots_of_unity(j: u64, p: u64, a: u32) -> Result<u64> {
    if j == 0 || a == 0 {
        return Err(Error::invalid(
            "count_jth_roots_of_unity: j and a must be positive",
        ));
    }
    require_prime(p, "count_jth_roots_of_unity")?;
    if p == 2 {
        return Err(Error::invalid("count_jth_roots_of_unity: p must be odd"));
    }
    let order = prime_power(p, a - 1, "count_jth_roots_of_unity")?
        .checked_mul(p - 1)
        .ok_or(Error::Overflow("count_jth_roots_of_unity"))?;
    Ok(gcd(j, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::{count_coprime_solutions, IntPoly, PolySystem};
    use crate::Limits;

    fn brute(modulus: u64, pred: impl Fn(u64) -> bool) -> u64 {
        (0..modulus).filter(|&x| pred(x)).count() as u64
    }

    #[test]
    fn eta_linear_examples() {
        assert_eq!(eta_linear(&[1, 2], &[2, 3]).unwrap(), 1);
        assert_eq!(eta_linear(&[0, 0], &[1, 2]).unwrap(), 0);
        assert_eq!(eta_linear(&[0, 0, 0], &[1, 1, 1]).unwrap(), 1);
        assert_eq!(eta_linear(&[1, 1], &[2, 4]).unwrap(), 1);
        assert_eq!(eta_linear(&[1, 3], &[4, 4]).unwrap(), 0);
        assert_eq!(eta_linear(&[-1, 3], &[2, 4]).unwrap(), 1);
        assert!(eta_linear(&[1], &[2, 3]).is_err());
    }

    #[test]
    fn eta_linear_matches_brute_force_pairs() {
        let l = Limits::default();
        for d1 in 1..=12u64 {
            for d2 in 1..=12u64 {
                for a1 in -5i64..=5 {
                    for a2 in -5i64..=5 {
                        let g = PolySystem::linear(&[a1, a2]).unwrap();
                        assert_eq!(
                            eta_linear(&[a1, a2], &[d1, d2]).unwrap(),
                            count_coprime_solutions(&g, &[d1, d2], &l).unwrap(),
                            "a=({a1},{a2}) d=({d1},{d2})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn eta_quadratic_examples() {
        assert_eq!(eta_quadratic(1, 15).unwrap(), 4);
        assert_eq!(eta_quadratic(5, 1).unwrap(), 1);
        assert_eq!(eta_quadratic(2, 9).unwrap(), 0);
        assert!(eta_quadratic(1, 8).is_err());
        assert!(eta_quadratic(3, 9).is_err());
        let l = Limits::default();
        for a in -10i64..=10 {
            for n in (1..200u64).step_by(2) {
                if gcd_signed(a as i128, n) != 1 {
                    continue;
                }
                let g = PolySystem::new(vec![IntPoly::new(vec![-a, 0, 1]).unwrap()]).unwrap();
                assert_eq!(
                    eta_quadratic(a, n).unwrap(),
                    count_coprime_solutions(&g, &[n], &l).unwrap(),
                    "a={a} n={n}"
                );
            }
        }
    }

    #[test]
    fn power_roots_zero() {
        assert_eq!(count_power_roots_zero(1, 5, 3).unwrap(), 1);
        assert_eq!(count_power_roots_zero(2, 2, 2).unwrap(), 2);
        assert_eq!(count_power_roots_zero(3, 3, 2).unwrap(), 3);
        for j in 1..=6u32 {
            for p in [2u64, 3, 5, 7] {
                for a in 1..=6u32 {
                    let q = p.pow(a);
                    if q > 20_000 {
                        continue;
                    }
                    let b = brute(q, |x| arith::pow_mod(x, j as u64, q) == 0);
                    assert_eq!(
                        count_power_roots_zero(j, p, a).unwrap(),
                        b,
                        "j={j} p^a={p}^{a}"
                    );
                }
            }
        }
        assert!(count_power_roots_zero(2, 4, 1).is_err());
    }

    #[test]
    fn square_roots_of_unity() {
        assert_eq!(count_square_roots_of_unity(2, 1).unwrap(), 1);
        assert_eq!(count_square_roots_of_unity(2, 2).unwrap(), 2);
        assert_eq!(count_square_roots_of_unity(7, 2).unwrap(), 2);
        for p in [2u64, 3, 5, 7, 11] {
            for a in 1..=8u32 {
                let q = p.pow(a);
                if q > 50_000 {
                    continue;
                }
                let b = brute(q, |x| (x as u128 * x as u128 % q as u128) as u64 == 1 % q);
                assert_eq!(count_square_roots_of_unity(p, a).unwrap(), b);
            }
        }
    }

    #[test]
    fn jth_roots_of_unity() {
        assert_eq!(count_jth_roots_of_unity(1, 5, 3).unwrap(), 1);
        assert_eq!(count_jth_roots_of_unity(2, 7, 1).unwrap(), 2);
        assert_eq!(count_jth_roots_of_unity(6, 7, 2).unwrap(), 6);
        // 3 | j and 9 | modulus: 1, 4, 7 are cube roots of unity mod 9
        assert_eq!(count_jth_roots_of_unity(3, 3, 2).unwrap(), 3);
        assert!(count_jth_roots_of_unity(2, 2, 3).is_err());
        for j in 1..=12u64 {
            for p in [3u64, 5, 7, 11, 13] {
                for a in 1..=4u32 {
                    let q = p.pow(a);
                    let b = brute(q, |x| arith::pow_mod(x, j, q) == 1);
                    assert_eq!(
                        count_jth_roots_of_unity(j, p, a).unwrap(),
                        b,
                        "j={j} p^a={p}^{a}"
                    );
                    if j % p != 0 || a == 1 {
                        assert_eq!(b, gcd(j, p - 1));
                    }
                }
            }
        }
    }
}
