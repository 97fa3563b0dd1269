//! The averages `S_F^(G)` and `R_F^(G)`, by direct summation and by divisor-sum formula.

use std::collections::HashMap;

use crate::arith::{self, euler_phi, gcd};
use crate::congruence::{count_coprime_solutions, count_solutions, PolySystem};
use crate::error::{Error, Result};
use crate::multifunc::{for_each_index, FuncSpec};
use crate::rational::Rational;
use crate::Limits;

/// One evaluation point: functions `F`, polynomials `G`, moduli `m` and the
/// summation range `M`, a multiple of `lcm[m]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MenonInstance {
    funcs: Vec<FuncSpec>,
    polys: PolySystem,
    moduli: Vec<u64>,
    big_modulus: u64,
}

impl MenonInstance {
    /// `big_modulus` defaults to `lcm[m_1, ..., m_r]`.
    pub fn new(
        funcs: Vec<FuncSpec>,
        polys: PolySystem,
        moduli: Vec<u64>,
        big_modulus: Option<u64>,
    ) -> Result<Self> {
        let r = moduli.len();
        if r == 0 {
            return Err(Error::invalid("at least one modulus is required"));
        }
        if funcs.len() != r || polys.len() != r {
            return Err(Error::invalid(format!(
                "funcs, polys and moduli must have equal length (got {}, {}, {r})",
                funcs.len(),
                polys.len()
            )));
        }
        if moduli.contains(&0) {
            return Err(Error::invalid("moduli must be positive"));
        }
        let m = arith::lcm_all(&moduli)?;
        let big = big_modulus.unwrap_or(m);
        if big == 0 || !big.is_multiple_of(m) {
            return Err(Error::invalid(format!(
                "M = {big} must be a positive multiple of lcm[m] = {m}"
            )));
        }
        Ok(MenonInstance {
            funcs,
            polys,
            moduli,
            big_modulus: big,
        })
    }

    pub fn funcs(&self) -> &[FuncSpec] {
        &self.funcs
    }

    pub fn polys(&self) -> &PolySystem {
        &self.polys
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn big_modulus(&self) -> u64 {
        self.big_modulus
    }

    pub fn arity(&self) -> usize {
        self.moduli.len()
    }

    /// Same instance with another summation range.
    pub fn with_big_modulus(&self, big: u64) -> Result<Self> {
        MenonInstance::new(
            self.funcs.clone(),
            self.polys.clone(),
            self.moduli.clone(),
            Some(big),
        )
    }

    pub fn with_moduli(&self, moduli: Vec<u64>) -> Result<Self> {
        MenonInstance::new(self.funcs.clone(), self.polys.clone(), moduli, None)
    }

    fn divisor_lists(&self, limits: &Limits) -> Result<Vec<Vec<u64>>> {
        let lists = self
            .moduli
            .iter()
            .map(|&m| arith::divisors(m))
            .collect::<Result<Vec<_>>>()?;
        let size: u128 = lists.iter().map(|l| l.len() as u128).product();
        Limits::check("divisor grid", size, limits.divisor_grid)?;
        Ok(lists)
    }

    /// Sums `prod_i f_i(gcd(g_i(k), m_i))` over `1 <= k <= M`, optionally only over units.
    ///
    /// Each `k` is mapped to the tuple of gcds (an index into the divisor grid)
    /// and tallied; the function values are applied once per grid cell.
    fn direct_total(&self, units_only: bool, limits: &Limits) -> Result<Rational> {
        let big = self.big_modulus;
        Limits::check("direct sum", big as u128, limits.direct_terms)?;
        let lists = self.divisor_lists(limits)?;
        let index: Vec<HashMap<u64, usize>> = lists
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, &d)| (d, i)).collect())
            .collect();
        let mut strides = vec![1usize; lists.len()];
        for i in (0..lists.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * lists[i + 1].len();
        }
        let cells: usize = lists.iter().map(Vec::len).product();
        let mut tally = vec![0u64; cells];
        for k in 1..=big {
            if units_only && gcd(k, big) != 1 {
                continue;
            }
            let mut cell = 0usize;
            for (i, (g, &m)) in self.polys.polys().iter().zip(&self.moduli).enumerate() {
                let d = gcd(g.eval_mod(k, m), m);
                cell += strides[i] * index[i][&d];
            }
            tally[cell] += 1;
        }
        let values = lists
            .iter()
            .zip(&self.funcs)
            .map(|(l, f)| l.iter().map(|&d| f.eval(d)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let mut total = Rational::ZERO;
        for_each_index(&lists, |idx| {
            let cell: usize = idx.iter().zip(&strides).map(|(i, s)| i * s).sum();
            let count = tally[cell];
            if count == 0 {
                return Ok(());
            }
            let prod =
                Rational::try_product(idx.iter().enumerate().map(|(i, &j)| Ok(values[i][j])))?;
            total = total.checked_add(&prod.checked_mul_int(count as i128)?)?;
            Ok(())
        })?;
        Ok(total)
    }

    /// Grid sum `sum_d prod_i (mu * f_i)(d_i) / weight(lcm[d]) * count(d)`.
    fn formula_total(
        &self,
        weight: impl Fn(u64) -> Result<u64>,
        count: impl Fn(&[u64]) -> Result<u64>,
        limits: &Limits,
    ) -> Result<Rational> {
        let lists = self.divisor_lists(limits)?;
        let kernels = lists
            .iter()
            .zip(&self.funcs)
            .map(|(l, f)| l.iter().map(|&d| f.mu_star(d)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let mut total = Rational::ZERO;
        let mut d = vec![0u64; lists.len()];
        for_each_index(&lists, |idx| {
            let coeff =
                Rational::try_product(idx.iter().enumerate().map(|(i, &j)| Ok(kernels[i][j])))?;
            if coeff.is_zero() {
                return Ok(());
            }
            for (i, &j) in idx.iter().enumerate() {
                d[i] = lists[i][j];
            }
            let c = count(&d)?;
            if c == 0 {
                return Ok(());
            }
            let w = weight(arith::lcm_all(&d)?)?;
            let term = coeff
                .checked_mul_int(c as i128)?
                .checked_div_int(w as i128)?;
            total = total.checked_add(&term)?;
            Ok(())
        })?;
        Ok(total)
    }
}

/// `S = (1/M) sum_{k=1}^{M} prod_i f_i(gcd(g_i(k), m_i))`, summed term by term.
pub fn sum_s_direct(inst: &MenonInstance, limits: &Limits) -> Result<Rational> {
    inst.direct_total(false, limits)?
        .checked_div_int(inst.big_modulus as i128)
}

/// `S = sum_{d_i | m_i} prod_i (mu * f_i)(d_i) / lcm[d] * N_G(d)`.
pub fn sum_s_formula(inst: &MenonInstance, limits: &Limits) -> Result<Rational> {
    inst.formula_total(Ok, |d| count_solutions(&inst.polys, d, limits), limits)
}

/// `R = (1/phi(M)) sum_{k <= M, gcd(k, M) = 1} prod_i f_i(gcd(g_i(k), m_i))`.
pub fn sum_r_direct(inst: &MenonInstance, limits: &Limits) -> Result<Rational> {
    let phi = euler_phi(inst.big_modulus)?;
    inst.direct_total(true, limits)?
        .checked_div_int(phi as i128)
}

/// `R = sum_{d_i | m_i} prod_i (mu * f_i)(d_i) / phi(lcm[d]) * eta_G(d)`.
pub fn sum_r_formula(inst: &MenonInstance, limits: &Limits) -> Result<Rational> {
    inst.formula_total(
        euler_phi,
        |d| count_coprime_solutions(&inst.polys, d, limits),
        limits,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(funcs: &str, polys: &str, moduli: &[u64], big: Option<u64>) -> MenonInstance {
        let funcs = funcs.split(',').map(|f| f.parse().unwrap()).collect();
        MenonInstance::new(funcs, polys.parse().unwrap(), moduli.to_vec(), big).unwrap()
    }

    fn q(n: i128, d: i128) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn pillai_type_s_sum() {
        let l = Limits::default();
        let i = inst("id,id", "x,x", &[4, 6], Some(12));
        assert_eq!(sum_s_direct(&i, &l).unwrap(), q(35, 6));
        assert_eq!(sum_s_formula(&i, &l).unwrap(), q(35, 6));
        // A(4) = (1 + 2 + 1 + 4) / 4 = phi(1)/1 + phi(2)/2 + phi(4)/4
        let a = inst("id", "x", &[4], None);
        assert_eq!(sum_s_direct(&a, &l).unwrap(), q(2, 1));
        assert_eq!(sum_s_formula(&a, &l).unwrap(), q(2, 1));
        for m in 1..=200u64 {
            let a = inst("id", "x", &[m], None);
            let expected = crate::arith::divisors(m)
                .unwrap()
                .into_iter()
                .map(|d| q(crate::arith::euler_phi(d).unwrap() as i128, d as i128))
                .fold(Rational::ZERO, |acc, x| acc.checked_add(&x).unwrap());
            assert_eq!(sum_s_direct(&a, &l).unwrap(), expected);
        }
    }

    #[test]
    fn constant_one_gives_one() {
        let l = Limits::default();
        for m in 1..=30u64 {
            let i = inst("one", "x^2+x+7", &[m], None);
            assert_eq!(sum_s_direct(&i, &l).unwrap(), Rational::ONE);
            assert_eq!(sum_s_formula(&i, &l).unwrap(), Rational::ONE);
            assert_eq!(sum_r_direct(&i, &l).unwrap(), Rational::ONE);
            assert_eq!(sum_r_formula(&i, &l).unwrap(), Rational::ONE);
        }
    }

    #[test]
    fn menon_r_sums() {
        let l = Limits::default();
        let i = inst("id", "x-1", &[12], Some(12));
        assert_eq!(sum_r_direct(&i, &l).unwrap(), Rational::from_int(6));
        assert_eq!(sum_r_formula(&i, &l).unwrap(), Rational::from_int(6));
        let j = inst("id,id", "x-1,x-1", &[2, 4], Some(4));
        assert_eq!(sum_r_direct(&j, &l).unwrap(), Rational::from_int(6));
        assert_eq!(sum_r_formula(&j, &l).unwrap(), Rational::from_int(6));
    }

    #[test]
    fn unit_moduli_give_one() {
        let l = Limits::default();
        let i = inst("id,phi,id^2", "x,x-3,x^2-2", &[1, 1, 1], Some(5));
        for f in [sum_s_direct, sum_s_formula, sum_r_direct, sum_r_formula] {
            assert_eq!(f(&i, &l).unwrap(), Rational::ONE);
        }
    }

    #[test]
    fn pillai_grid_matches_phi_over_lcm() {
        let l = Limits::default();
        for m1 in 1..=12u64 {
            for m2 in 1..=12u64 {
                let i = inst("id,id", "x,x", &[m1, m2], None);
                let mut expected = Rational::ZERO;
                for d1 in arith::divisors(m1).unwrap() {
                    for d2 in arith::divisors(m2).unwrap() {
                        let t = q(
                            (euler_phi(d1).unwrap() * euler_phi(d2).unwrap()) as i128,
                            arith::lcm(d1, d2).unwrap() as i128,
                        );
                        expected = expected.checked_add(&t).unwrap();
                    }
                }
                assert_eq!(sum_s_formula(&i, &l).unwrap(), expected);
            }
        }
    }

    #[test]
    fn instance_validation() {
        let p: PolySystem = "x".parse().unwrap();
        assert!(MenonInstance::new(vec![FuncSpec::id()], p.clone(), vec![4], Some(6)).is_err());
        assert!(MenonInstance::new(vec![FuncSpec::id()], p.clone(), vec![0], None).is_err());
        assert!(MenonInstance::new(vec![], p.clone(), vec![4], None).is_err());
        assert!(MenonInstance::new(vec![FuncSpec::id()], p, vec![4, 2], None).is_err());
        assert_eq!(inst("id,id", "x,x", &[4, 6], None).big_modulus(), 12);
    }

    #[test]
    fn budgets() {
        let tight = Limits {
            direct_terms: 10,
            ..Limits::default()
        };
        let i = inst("id", "x", &[12], None);
        assert!(matches!(
            sum_s_direct(&i, &tight),
            Err(Error::Budget { .. })
        ));
        assert!(sum_s_formula(&i, &tight).is_ok());
        let tbl = MenonInstance::new(
            vec![FuncSpec::table(vec![Rational::ONE; 3]).unwrap()],
            "x".parse().unwrap(),
            vec![4],
            None,
        )
        .unwrap();
        assert!(matches!(
            sum_s_direct(&tbl, &Limits::default()),
            Err(Error::TableBound { .. })
        ));
    }
}
