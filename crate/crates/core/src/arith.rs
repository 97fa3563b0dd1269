//! Integer primitives and the classical one-variable arithmetic functions.
//!
//! Everything here works on `u64` arguments below 2^63 and produces exact
//! values; anything that could leave the 128-bit range is checked and
//! reported as [`Error::Overflow`].

use crate::error::{Error, Result};

/// Largest argument accepted by [`factorize`] and the functions built on it.
pub const MAX_ARG: u64 = (1 << 63) - 1;

/// Prime factorization `n = p_1^e_1 * ... * p_k^e_k` with `p_1 < ... < p_k`.
///
/// The empty factorization represents 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    /// Builds a factorization from `(prime, exponent)` pairs, checking the invariants.
    pub fn from_pairs(pairs: Vec<(u64, u32)>) -> Result<Self> {
        for w in pairs.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::invalid("primes must be strictly increasing"));
            }
        }
        for &(p, e) in &pairs {
            if e == 0 {
                return Err(Error::invalid(format!("exponent of {p} must be positive")));
            }
            if !is_prime(p) {
                return Err(Error::invalid(format!("{p} is not prime")));
            }
        }
        Ok(Factorization { pairs })
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    /// Exponent of `p` in the factorization, zero when `p` does not divide.
    pub fn exponent(&self, p: u64) -> u32 {
        self.pairs
            .binary_search_by_key(&p, |&(q, _)| q)
            .map(|i| self.pairs[i].1)
            .unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Multiplies the factorization back out.
    pub fn value(&self) -> Result<u64> {
        self.pairs.iter().try_fold(1u64, |acc, &(p, e)| {
            p.checked_pow(e)
                .and_then(|pe| acc.checked_mul(pe))
                .ok_or(Error::Overflow("Factorization::value"))
        })
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// `gcd(|a|, n)`, with `gcd(0, n) = n`.
pub fn gcd_signed(a: i128, n: u64) -> u64 {
    let r = a.rem_euclid(n.max(1) as i128) as u64;
    gcd(r, n)
}

pub fn lcm(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / gcd(a, b)).checked_mul(b).ok_or(Error::Overflow("lcm"))
}

/// Least common multiple of a slice; the empty slice gives 1.
pub fn lcm_all(values: &[u64]) -> Result<u64> {
    values.iter().try_fold(1u64, |acc, &v| lcm(acc, v))
}

pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0u64, |acc, &v| gcd(acc, v))
}

fn check_arg(n: u64, op: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid(format!("{op}: argument must be positive")));
    }
    if n > MAX_ARG {
        return Err(Error::invalid(format!(
            "{op}: argument {n} is not below 2^63"
        )));
    }
    Ok(())
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Trial-division factorization of `1 <= n < 2^63`.
pub fn factorize(n: u64) -> Result<Factorization> {
    check_arg(n, "factorize")?;
    let mut pairs = Vec::new();
    let mut m = n;
    let mut push = |p: u64, m: &mut u64| {
        let mut e = 0;
        while (*m).is_multiple_of(p) {
            *m /= p;
            e += 1;
        }
        if e > 0 {
            pairs.push((p, e));
        }
    };
    push(2, &mut m);
    let mut p = 3u64;
    while p <= m / p {
        push(p, &mut m);
        p += 2;
    }
    if m > 1 {
        pairs.push((m, 1));
    }
    Ok(Factorization { pairs })
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    Ok(divisors_of(&factorize(n)?))
}

pub fn divisors_of(f: &Factorization) -> Vec<u64> {
    let mut out = vec![1u64];
    for &(p, e) in f.pairs() {
        let len = out.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn tau(n: u64) -> Result<u64> {
    Ok(factorize(n)?
        .pairs()
        .iter()
        .map(|&(_, e)| e as u64 + 1)
        .product())
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.pairs()
        .iter()
        .map(|&(p, e)| p.pow(e - 1) * (p - 1))
        .product())
}

/// Jordan's totient `n^t * prod_{p | n} (1 - p^-t)` for a nonnegative integer `t`.
///
/// At `t = 0` this is 1 for `n = 1` and 0 otherwise, matching `mu * id_0`.
pub fn jordan_phi(t: u32, n: u64) -> Result<i128> {
    let f = factorize(n)?;
    let mut acc: i128 = 1;
    for &(p, e) in f.pairs() {
        let pt = checked_pow_i128(p as i128, t).ok_or(Error::Overflow("jordan_phi"))?;
        let head = checked_pow_i128(pt, e - 1).ok_or(Error::Overflow("jordan_phi"))?;
        acc = acc
            .checked_mul(head)
            .and_then(|a| a.checked_mul(pt - 1))
            .ok_or(Error::Overflow("jordan_phi"))?;
    }
    Ok(acc)
}

pub fn mobius(n: u64) -> Result<i32> {
    let f = factorize(n)?;
    if f.pairs().iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if f.pairs().len() % 2 == 0 { 1 } else { -1 })
}

/// Divisor power sum `sigma_k(n) = sum_{d | n} d^k`.
pub fn sigma(k: u32, n: u64) -> Result<i128> {
    let f = factorize(n)?;
    let mut acc: i128 = 1;
    for &(p, e) in f.pairs() {
        let pk = checked_pow_i128(p as i128, k).ok_or(Error::Overflow("sigma"))?;
        let mut term: i128 = 1;
        let mut pw: i128 = 1;
        for _ in 0..e {
            pw = pw.checked_mul(pk).ok_or(Error::Overflow("sigma"))?;
            term = term.checked_add(pw).ok_or(Error::Overflow("sigma"))?;
        }
        acc = acc.checked_mul(term).ok_or(Error::Overflow("sigma"))?;
    }
    Ok(acc)
}

/// Number of divisors `d` of `n` with `gcd(d, a) = 1`.
pub fn tau_coprime(n: u64, a: i64) -> Result<u64> {
    let f = factorize(n)?;
    let a = a.unsigned_abs();
    Ok(f.pairs()
        .iter()
        .map(|&(p, e)| if a.is_multiple_of(p) { 1 } else { e as u64 + 1 })
        .product())
}

pub fn omega(n: u64) -> Result<u32> {
    Ok(factorize(n)?.pairs().len() as u32)
}

/// Legendre symbol `(a/p)` for an odd prime `p`, by Euler's criterion.
pub fn legendre_symbol(a: i64, p: u64) -> Result<i32> {
    if p == 2 || !is_prime(p) {
        return Err(Error::invalid(format!(
            "legendre_symbol: modulus {p} is not an odd prime"
        )));
    }
    let r = (a as i128).rem_euclid(p as i128) as u64;
    if r == 0 {
        return Ok(0);
    }
    Ok(if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    })
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut b = (base % m) as u128;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

pub(crate) fn checked_pow_i128(base: i128, exp: u32) -> Option<i128> {
    base.checked_pow(exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_phi(n: u64) -> u64 {
        (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().is_one());
        assert_eq!(factorize(97).unwrap().pairs(), &[(97, 1)]);
        assert_eq!(factorize(360).unwrap().pairs(), &[(2, 3), (3, 2), (5, 1)]);
        assert!(factorize(0).is_err());
        assert!(factorize(1 << 63).is_err());
    }

    #[test]
    fn factorize_large_prime_and_round_trip() {
        let p = 2_147_483_647u64;
        assert_eq!(factorize(p).unwrap().pairs(), &[(p, 1)]);
        for n in 1..=1_000_000u64 {
            assert_eq!(factorize(n).unwrap().value().unwrap(), n);
        }
    }

    #[test]
    fn from_pairs_rejects_bad_input() {
        assert!(Factorization::from_pairs(vec![(3, 1), (2, 1)]).is_err());
        assert!(Factorization::from_pairs(vec![(2, 0)]).is_err());
        assert!(Factorization::from_pairs(vec![(4, 1)]).is_err());
        assert_eq!(
            Factorization::from_pairs(vec![(2, 2), (3, 1)])
                .unwrap()
                .value()
                .unwrap(),
            12
        );
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(97).unwrap(), vec![1, 97]);
        for n in 1..=500u64 {
            let brute: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(divisors(n).unwrap(), brute);
            assert_eq!(tau(n).unwrap(), brute.len() as u64);
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(12).unwrap(), 4);
        assert_eq!(euler_phi(101).unwrap(), 100);
        for n in 1..=2000u64 {
            assert_eq!(euler_phi(n).unwrap(), brute_phi(n));
        }
    }

    #[test]
    fn jordan_examples() {
        for n in 1..=10_000u64 {
            assert_eq!(jordan_phi(1, n).unwrap(), euler_phi(n).unwrap() as i128);
        }
        assert_eq!(jordan_phi(2, 6).unwrap(), 24);
        for t in 0..5 {
            assert_eq!(jordan_phi(t, 1).unwrap(), 1);
        }
        assert_eq!(jordan_phi(0, 7).unwrap(), 0);
        // phi_2(n) counts pairs (a, b) mod n with gcd(a, b, n) = 1
        for n in 1..=40u64 {
            let count = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|&(a, b)| gcd(gcd(a, b), n) == 1)
                .count() as i128;
            assert_eq!(jordan_phi(2, n).unwrap(), count);
        }
        assert_eq!(jordan_phi(81, 3), Err(Error::Overflow("jordan_phi")));
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1).unwrap(), 1);
        assert_eq!(mobius(12).unwrap(), 0);
        assert_eq!(mobius(6).unwrap(), 1);
        assert_eq!(mobius(30).unwrap(), -1);
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(1, 4).unwrap(), 7);
        assert_eq!(sigma(1, 6).unwrap(), 12);
        for n in 1..=300u64 {
            assert_eq!(sigma(0, n).unwrap(), tau(n).unwrap() as i128);
            let brute: i128 = (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| (d * d) as i128)
                .sum();
            assert_eq!(sigma(2, n).unwrap(), brute);
        }
    }

    #[test]
    fn tau_coprime_examples() {
        for n in 1..=200u64 {
            assert_eq!(tau_coprime(n, 1).unwrap(), tau(n).unwrap());
        }
        assert_eq!(tau_coprime(12, 2).unwrap(), 2);
        assert_eq!(tau_coprime(10, 3).unwrap(), 4);
        assert_eq!(tau_coprime(10, -2).unwrap(), 2);
        // gcd(d, 0) = d, so only d = 1 survives
        assert_eq!(tau_coprime(12, 0).unwrap(), 1);
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_symbol(1, 7).unwrap(), 1);
        assert_eq!(legendre_symbol(2, 7).unwrap(), 1);
        assert_eq!(legendre_symbol(3, 7).unwrap(), -1);
        assert_eq!(legendre_symbol(14, 7).unwrap(), 0);
        assert_eq!(legendre_symbol(-1, 5).unwrap(), 1);
        assert!(legendre_symbol(1, 2).is_err());
        assert!(legendre_symbol(1, 9).is_err());
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
            for a in -30i64..30 {
                let r = a.rem_euclid(p as i64) as u64;
                let expected = if r == 0 {
                    0
                } else if (1..p).any(|x| x * x % p == r) {
                    1
                } else {
                    -1
                };
                assert_eq!(legendre_symbol(a, p).unwrap(), expected);
            }
        }
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(1).unwrap(), 0);
        assert_eq!(omega(12).unwrap(), 2);
        assert_eq!(omega(30).unwrap(), 3);
    }

    #[test]
    fn divisor_sum_identities() {
        for n in 1..=10_000u64 {
            let ds = divisors(n).unwrap();
            let phi_sum: u64 = ds.iter().map(|&d| euler_phi(d).unwrap()).sum();
            assert_eq!(phi_sum, n);
            let mu_sum: i32 = ds.iter().map(|&d| mobius(d).unwrap()).sum();
            assert_eq!(mu_sum, i32::from(n == 1));
        }
    }

    #[test]
    fn phi_gcd_lcm_product() {
        for a in 1..=300u64 {
            for b in 1..=300u64 {
                let lhs = euler_phi(a).unwrap() * euler_phi(b).unwrap();
                let rhs = euler_phi(gcd(a, b)).unwrap() * euler_phi(lcm(a, b).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn signed_gcd_convention() {
        assert_eq!(gcd_signed(0, 12), 12);
        assert_eq!(gcd_signed(-4, 12), 4);
        assert_eq!(gcd_signed(-1, 12), 1);
        assert_eq!(gcd_all(&[]), 0);
        assert_eq!(lcm_all(&[]).unwrap(), 1);
        assert_eq!(lcm_all(&[4, 6, 10]).unwrap(), 60);
    }
}
