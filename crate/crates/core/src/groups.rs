//! Cyclic subgroups of `C_{m_1} x ... x C_{m_r}`, counted three independent ways.

use std::collections::HashSet;

use crate::arith::{self, divisors, euler_phi, gcd};
use crate::error::{Error, Result};
use crate::multifunc::for_each_index;
use crate::Limits;

/// The group `C_{m_1} x ... x C_{m_r}` given by its factor orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectProductSpec {
    orders: Vec<u64>,
}

impl DirectProductSpec {
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::invalid("a direct product needs at least one factor"));
        }
        if orders.contains(&0) {
            return Err(Error::invalid("factor orders must be positive"));
        }
        Ok(DirectProductSpec { orders })
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// `m_1 * ... * m_r`.
    pub fn group_order(&self) -> Result<u64> {
        self.orders
            .iter()
            .try_fold(1u64, |acc, &m| acc.checked_mul(m))
            .ok_or(Error::Overflow("group order"))
    }
}

/// `sum_{d_i | m_i} phi(d_1) ... phi(d_r) / phi(lcm[d])`.
pub fn cyclic_count_formula(spec: &DirectProductSpec, limits: &Limits) -> Result<u64> {
    let lists = spec
        .orders
        .iter()
        .map(|&m| divisors(m))
        .collect::<Result<Vec<_>>>()?;
    Limits::check(
        "divisor grid",
        lists.iter().map(|l| l.len() as u128).product(),
        limits.divisor_grid,
    )?;
    let phis = lists
        .iter()
        .map(|l| l.iter().map(|&d| euler_phi(d)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let mut total: u64 = 0;
    let mut d = vec![0u64; lists.len()];
    for_each_index(&lists, |idx| {
        let mut num: u128 = 1;
        for (i, &j) in idx.iter().enumerate() {
            d[i] = lists[i][j];
            num *= phis[i][j] as u128;
        }
        let den = euler_phi(arith::lcm_all(&d)?)? as u128;
        if !num.is_multiple_of(den) {
            return Err(Error::NonExact(format!(
                "phi product over phi(lcm) at {d:?}"
            )));
        }
        total = u64::try_from(num / den)
            .ok()
            .and_then(|t| total.checked_add(t))
            .ok_or(Error::Overflow("cyclic_count_formula"))?;
        Ok(())
    })?;
    Ok(total)
}

/// Orbit count of the unit group acting by powers:
/// `(1/phi(q)) sum_{k <= q, gcd(k, q) = 1} prod_i gcd(k - 1, m_i)` with `q = prod m_i`.
pub fn cyclic_count_burnside(spec: &DirectProductSpec, limits: &Limits) -> Result<u64> {
    let q = spec.group_order()?;
    Limits::check("burnside sum", q as u128, limits.direct_terms)?;
    let mut fixed: u128 = 0;
    for k in (1..=q).filter(|&k| gcd(k, q) == 1) {
        let mut prod: u128 = 1;
        for &m in &spec.orders {
            prod *= gcd(k - 1, m) as u128;
        }
        fixed += prod;
    }
    let units = euler_phi(q)? as u128;
    if !fixed.is_multiple_of(units) {
        return Err(Error::NonExact(format!(
            "fixed-point total {fixed} is not divisible by phi({q}) = {units}"
        )));
    }
    Ok((fixed / units) as u64)
}

/// Materializes every cyclic subgroup `<g>` as a sorted element list and counts the distinct lists.
pub fn cyclic_count_enumerate(spec: &DirectProductSpec, limits: &Limits) -> Result<u64> {
    let q = spec.group_order()?;
    Limits::check("subgroup enumeration", q as u128, limits.enumeration)?;
    let orders = &spec.orders;
    let r = orders.len();
    // mixed-radix encoding of (x_1, ..., x_r), x_i in Z_{m_i}
    let encode = |x: &[u64]| -> u64 { x.iter().zip(orders).fold(0, |acc, (&xi, &m)| acc * m + xi) };
    let decode = |mut code: u64, out: &mut [u64]| {
        for i in (0..r).rev() {
            out[i] = code % orders[i];
            code /= orders[i];
        }
    };
    let mut seen = vec![false; q as usize];
    let mut subgroups: HashSet<Vec<u64>> = HashSet::new();
    let mut g = vec![0u64; r];
    let mut h = vec![0u64; r];
    for code in 0..q {
        if seen[code as usize] {
            continue;
        }
        decode(code, &mut g);
        let mut elements = Vec::new();
        h.iter_mut().for_each(|x| *x = 0);
        loop {
            elements.push(encode(&h));
            for i in 0..r {
                h[i] = (h[i] + g[i]) % orders[i];
            }
            if h.iter().all(|&x| x == 0) {
                break;
            }
        }
        // elements[k] = k * g; the generators of <g> are the k * g of full order
        let n = elements.len() as u64;
        for (k, &e) in elements.iter().enumerate() {
            if gcd(k as u64, n) == 1 {
                seen[e as usize] = true;
            }
        }
        elements.sort_unstable();
        subgroups.insert(elements);
    }
    Ok(subgroups.len() as u64)
}

/// `c(C_{p^u} x C_{p^v}) = 2 (1 + p + ... + p^(v-1)) + (u - v + 1) p^v` for `u >= v >= 1`.
pub fn cyclic_count_prime_power_pair(p: u64, u: u32, v: u32) -> Result<u64> {
    if !arith::is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    if v == 0 || u < v {
        return Err(Error::invalid(format!(
            "prime-power pair formula needs u >= v >= 1, got u = {u}, v = {v}"
        )));
    }
    let overflow = || Error::Overflow("cyclic_count_prime_power_pair");
    let mut geometric: u64 = 0;
    let mut pk: u64 = 1;
    for _ in 0..v {
        geometric = geometric.checked_add(pk).ok_or_else(overflow)?;
        pk = pk.checked_mul(p).ok_or_else(overflow)?;
    }
    // pk == p^v here
    geometric
        .checked_mul(2)
        .and_then(|a| {
            pk.checked_mul((u - v + 1) as u64)
                .and_then(|b| a.checked_add(b))
        })
        .ok_or_else(overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(orders: &[u64]) -> DirectProductSpec {
        DirectProductSpec::new(orders.to_vec()).unwrap()
    }

    fn all(orders: &[u64]) -> [u64; 3] {
        let l = Limits::default();
        let s = spec(orders);
        [
            cyclic_count_formula(&s, &l).unwrap(),
            cyclic_count_burnside(&s, &l).unwrap(),
            cyclic_count_enumerate(&s, &l).unwrap(),
        ]
    }

    #[test]
    fn small_groups() {
        assert_eq!(all(&[6]), [4, 4, 4]);
        assert_eq!(all(&[2, 2]), [4, 4, 4]);
        assert_eq!(all(&[4, 2]), [6, 6, 6]);
        assert_eq!(all(&[7]), [2, 2, 2]);
        assert_eq!(all(&[1, 1, 1]), [1, 1, 1]);
        assert_eq!(all(&[9, 9]), [17, 17, 17]);
    }

    #[test]
    fn cyclic_group_has_tau_subgroups() {
        for n in 1..=300u64 {
            let t = arith::tau(n).unwrap();
            assert_eq!(all(&[n]), [t, t, t]);
        }
    }

    #[test]
    fn prime_power_pairs() {
        assert_eq!(cyclic_count_prime_power_pair(2, 1, 1).unwrap(), 4);
        assert_eq!(cyclic_count_prime_power_pair(2, 2, 1).unwrap(), 6);
        assert_eq!(cyclic_count_prime_power_pair(3, 2, 2).unwrap(), 17);
        assert!(cyclic_count_prime_power_pair(2, 1, 2).is_err());
        assert!(cyclic_count_prime_power_pair(2, 1, 0).is_err());
        assert!(cyclic_count_prime_power_pair(6, 2, 1).is_err());
    }

    #[test]
    fn budgets_and_validation() {
        let tight = Limits {
            enumeration: 10,
            ..Limits::default()
        };
        assert!(matches!(
            cyclic_count_enumerate(&spec(&[4, 4]), &tight),
            Err(Error::Budget { .. })
        ));
        assert!(cyclic_count_formula(&spec(&[4, 4]), &tight).is_ok());
        assert!(DirectProductSpec::new(vec![]).is_err());
        assert!(DirectProductSpec::new(vec![3, 0]).is_err());
    }
}
