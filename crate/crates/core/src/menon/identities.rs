//! Catalog of named Menon-type identities.
//!
//! Every identity is evaluated twice: the left side by its own direct
//! summation loop and the right side by its closed form. The two paths share
//! nothing above [`crate::arith`] and the congruence closed forms, so a match
//! is a genuine cross-check.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{
    self, divisors, euler_phi, factorize, gcd, gcd_signed, jordan_phi, lcm_all, sigma, tau_coprime,
    Factorization,
};
use crate::congruence::{
    count_coprime_solutions, count_power_roots_zero, eta_linear, IntPoly, PolySystem,
};
use crate::error::{Error, Result};
use crate::multifunc::{for_each_index, FuncSpec};
use crate::rational::Rational;
use crate::Limits;

/// Stable names of the catalog, in declaration order.
pub const IDENTITY_NAMES: [&str; 17] = [
    "menon_classic",
    "sita_ramaiah",
    "nageswara_rao",
    "richards",
    "sury",
    "general_menon",
    "general_menon_t",
    "r2_same_shift",
    "pairwise_coprime",
    "r2_offsets",
    "r2_adjacent",
    "quadratic_legendre",
    "linear_bk_minus_a",
    "square_minus_one",
    "power_j",
    "power_6",
    "gcd_kj",
];

/// A parameter echoed back in an [`IdentityReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Ints(Vec<i64>),
    Text(String),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Ints(v) => {
                let parts: Vec<String> = v.iter().map(i64::to_string).collect();
                write!(f, "{}", parts.join(","))
            }
            ParamValue::Text(s) => write!(f, "{s}"),
        }
    }
}

/// Both sides of one identity instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_name: String,
    pub parameters: BTreeMap<String, ParamValue>,
    pub lhs: Rational,
    pub rhs: Rational,
    #[serde(rename = "match")]
    pub matched: bool,
}

/// Loose parameter bag used to build an [`Identity`] from its name.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdentityArgs {
    pub n: Option<u64>,
    pub moduli: Vec<u64>,
    pub shifts: Vec<i64>,
    pub exponents: Vec<u32>,
    pub j: Option<u32>,
    pub r: Option<u32>,
    pub a: Option<i64>,
    pub b: Option<i64>,
    pub poly: Option<IntPoly>,
    pub func: Option<FuncSpec>,
    pub big_modulus: Option<u64>,
}

/// One instance of a catalog identity with typed parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Identity {
    /// `sum_{(k,n)=1} gcd(k-1, n) = phi(n) tau(n)`.
    MenonClassic {
        n: u64,
    },
    /// `sum_{(k,n)=1} f(gcd(k-1, n)) = phi(n) sum_{d|n} (mu*f)(d)/phi(d)`.
    SitaRamaiah {
        n: u64,
        f: FuncSpec,
    },
    /// `s = shifts.len()` nested indices with `gcd(k_1..k_s, n) = 1`.
    NageswaraRao {
        n: u64,
        shifts: Vec<i64>,
    },
    /// `sum_{(k,n)=1} gcd(g(k), n) = phi(n) sum_{d|n} eta_g(d)`.
    Richards {
        n: u64,
        g: IntPoly,
    },
    /// `r` nested indices, `sum gcd(k_1-1, k_2, ..., k_r, n) = phi(n) sigma_{r-1}(n)`.
    Sury {
        n: u64,
        r: u32,
    },
    GeneralMenon {
        moduli: Vec<u64>,
        shifts: Vec<i64>,
        big_modulus: Option<u64>,
    },
    GeneralMenonT {
        moduli: Vec<u64>,
        shifts: Vec<i64>,
        exponents: Vec<u32>,
        big_modulus: Option<u64>,
    },
    R2SameShift {
        moduli: [u64; 2],
        shift: i64,
        big_modulus: Option<u64>,
    },
    PairwiseCoprime {
        moduli: Vec<u64>,
        shifts: Vec<i64>,
    },
    R2Offsets {
        moduli: [u64; 2],
        shifts: [i64; 2],
        big_modulus: Option<u64>,
    },
    R2Adjacent {
        moduli: [u64; 2],
        shifts: [i64; 2],
        big_modulus: Option<u64>,
    },
    /// `g_1 = g_2 = x^2 - a`, `m = lcm[m_1, m_2]` odd, `gcd(a, m) = 1`.
    QuadraticLegendre {
        moduli: [u64; 2],
        a: i64,
    },
    LinearBkMinusA {
        n: u64,
        b: i64,
        a: i64,
    },
    SquareMinusOne {
        n: u64,
    },
    PowerJ {
        n: u64,
        j: u32,
    },
    Power6 {
        n: u64,
    },
    /// `(1/n) sum_k gcd(k^j, n) = sum_{d|n} phi(d) N^(j)(d) / d`.
    GcdKj {
        n: u64,
        j: u32,
    },
}

fn need<T: Clone>(v: &Option<T>, name: &str, what: &str) -> Result<T> {
    v.clone()
        .ok_or_else(|| Error::invalid(format!("{name}: missing parameter `{what}`")))
}

fn pair<T: Copy>(v: &[T], name: &str, what: &str) -> Result<[T; 2]> {
    match v {
        [x, y] => Ok([*x, *y]),
        _ => Err(Error::invalid(format!(
            "{name}: `{what}` needs exactly two entries, got {}",
            v.len()
        ))),
    }
}

impl Identity {
    /// Builds an identity from its catalog name and a parameter bag.
    ///
    /// Shifts default to all ones and exponents to all ones when omitted.
    pub fn from_args(name: &str, args: &IdentityArgs) -> Result<Self> {
        let shifts_or_ones = |len: usize| {
            if args.shifts.is_empty() {
                vec![1; len]
            } else {
                args.shifts.clone()
            }
        };
        let id = match name {
            "menon_classic" => Identity::MenonClassic {
                n: need(&args.n, name, "n")?,
            },
            "sita_ramaiah" => Identity::SitaRamaiah {
                n: need(&args.n, name, "n")?,
                f: args.func.clone().unwrap_or_else(FuncSpec::id),
            },
            "nageswara_rao" => Identity::NageswaraRao {
                n: need(&args.n, name, "n")?,
                shifts: if args.shifts.is_empty() {
                    vec![1; args.r.unwrap_or(1) as usize]
                } else {
                    args.shifts.clone()
                },
            },
            "richards" => Identity::Richards {
                n: need(&args.n, name, "n")?,
                g: need(&args.poly, name, "poly")?,
            },
            "sury" => Identity::Sury {
                n: need(&args.n, name, "n")?,
                r: need(&args.r, name, "r")?,
            },
            "general_menon" => Identity::GeneralMenon {
                moduli: args.moduli.clone(),
                shifts: shifts_or_ones(args.moduli.len()),
                big_modulus: args.big_modulus,
            },
            "general_menon_t" => Identity::GeneralMenonT {
                moduli: args.moduli.clone(),
                shifts: shifts_or_ones(args.moduli.len()),
                exponents: if args.exponents.is_empty() {
                    vec![1; args.moduli.len()]
                } else {
                    args.exponents.clone()
                },
                big_modulus: args.big_modulus,
            },
            "r2_same_shift" => Identity::R2SameShift {
                moduli: pair(&args.moduli, name, "moduli")?,
                shift: args.a.unwrap_or(1),
                big_modulus: args.big_modulus,
            },
            "pairwise_coprime" => Identity::PairwiseCoprime {
                moduli: args.moduli.clone(),
                shifts: shifts_or_ones(args.moduli.len()),
            },
            "r2_offsets" => Identity::R2Offsets {
                moduli: pair(&args.moduli, name, "moduli")?,
                shifts: pair(&args.shifts, name, "shifts")?,
                big_modulus: args.big_modulus,
            },
            "r2_adjacent" => Identity::R2Adjacent {
                moduli: pair(&args.moduli, name, "moduli")?,
                shifts: pair(&args.shifts, name, "shifts")?,
                big_modulus: args.big_modulus,
            },
            "quadratic_legendre" => Identity::QuadraticLegendre {
                moduli: pair(&args.moduli, name, "moduli")?,
                a: args.a.unwrap_or(1),
            },
            "linear_bk_minus_a" => Identity::LinearBkMinusA {
                n: need(&args.n, name, "n")?,
                b: args.b.unwrap_or(1),
                a: args.a.unwrap_or(1),
            },
            "square_minus_one" => Identity::SquareMinusOne {
                n: need(&args.n, name, "n")?,
            },
            "power_j" => Identity::PowerJ {
                n: need(&args.n, name, "n")?,
                j: need(&args.j, name, "j")?,
            },
            "power_6" => Identity::Power6 {
                n: need(&args.n, name, "n")?,
            },
            "gcd_kj" => Identity::GcdKj {
                n: need(&args.n, name, "n")?,
                j: need(&args.j, name, "j")?,
            },
            other => {
                return Err(Error::invalid(format!(
                    "unknown identity {other:?}; known: {}",
                    IDENTITY_NAMES.join(", ")
                )))
            }
        };
        Ok(id)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Identity::MenonClassic { .. } => "menon_classic",
            Identity::SitaRamaiah { .. } => "sita_ramaiah",
            Identity::NageswaraRao { .. } => "nageswara_rao",
            Identity::Richards { .. } => "richards",
            Identity::Sury { .. } => "sury",
            Identity::GeneralMenon { .. } => "general_menon",
            Identity::GeneralMenonT { .. } => "general_menon_t",
            Identity::R2SameShift { .. } => "r2_same_shift",
            Identity::PairwiseCoprime { .. } => "pairwise_coprime",
            Identity::R2Offsets { .. } => "r2_offsets",
            Identity::R2Adjacent { .. } => "r2_adjacent",
            Identity::QuadraticLegendre { .. } => "quadratic_legendre",
            Identity::LinearBkMinusA { .. } => "linear_bk_minus_a",
            Identity::SquareMinusOne { .. } => "square_minus_one",
            Identity::PowerJ { .. } => "power_j",
            Identity::Power6 { .. } => "power_6",
            Identity::GcdKj { .. } => "gcd_kj",
        }
    }

    fn parameters(&self) -> BTreeMap<String, ParamValue> {
        fn ints<T: Copy + TryInto<i64>>(v: &[T]) -> ParamValue {
            ParamValue::Ints(
                v.iter()
                    .map(|&x| x.try_into().unwrap_or(i64::MAX))
                    .collect(),
            )
        }
        fn int<T: TryInto<i64>>(v: T) -> ParamValue {
            ParamValue::Int(v.try_into().unwrap_or(i64::MAX))
        }
        let mut p = BTreeMap::new();
        let mut put = |k: &str, v: ParamValue| {
            p.insert(k.to_string(), v);
        };
        match self {
            Identity::MenonClassic { n }
            | Identity::SquareMinusOne { n }
            | Identity::Power6 { n } => put("n", int(*n)),
            Identity::SitaRamaiah { n, f } => {
                put("n", int(*n));
                put("f", ParamValue::Text(f.to_string()));
            }
            Identity::NageswaraRao { n, shifts } => {
                put("n", int(*n));
                put("shifts", ints(shifts));
            }
            Identity::Richards { n, g } => {
                put("n", int(*n));
                put("g", ParamValue::Text(g.to_string()));
            }
            Identity::Sury { n, r } => {
                put("n", int(*n));
                put("r", int(*r));
            }
            Identity::GeneralMenon {
                moduli,
                shifts,
                big_modulus,
            } => {
                put("moduli", ints(moduli));
                put("shifts", ints(shifts));
                if let Some(m) = big_modulus {
                    put("M", int(*m));
                }
            }
            Identity::GeneralMenonT {
                moduli,
                shifts,
                exponents,
                big_modulus,
            } => {
                put("moduli", ints(moduli));
                put("shifts", ints(shifts));
                put("exponents", ints(exponents));
                if let Some(m) = big_modulus {
                    put("M", int(*m));
                }
            }
            Identity::R2SameShift {
                moduli,
                shift,
                big_modulus,
            } => {
                put("moduli", ints(moduli));
                put("a", int(*shift));
                if let Some(m) = big_modulus {
                    put("M", int(*m));
                }
            }
            Identity::PairwiseCoprime { moduli, shifts } => {
                put("moduli", ints(moduli));
                put("shifts", ints(shifts));
            }
            Identity::R2Offsets {
                moduli,
                shifts,
                big_modulus,
            }
            | Identity::R2Adjacent {
                moduli,
                shifts,
                big_modulus,
            } => {
                put("moduli", ints(moduli));
                put("shifts", ints(shifts));
                if let Some(m) = big_modulus {
                    put("M", int(*m));
                }
            }
            Identity::QuadraticLegendre { moduli, a } => {
                put("moduli", ints(moduli));
                put("a", int(*a));
            }
            Identity::LinearBkMinusA { n, b, a } => {
                put("n", int(*n));
                put("b", int(*b));
                put("a", int(*a));
            }
            Identity::PowerJ { n, j } | Identity::GcdKj { n, j } => {
                put("n", int(*n));
                put("j", int(*j));
            }
        }
        p
    }

    /// Computes both sides and reports whether they agree.
    pub fn evaluate(&self, limits: &Limits) -> Result<IdentityReport> {
        let (lhs, rhs) = self.sides(limits)?;
        Ok(IdentityReport {
            identity_name: self.name().to_string(),
            parameters: self.parameters(),
            lhs,
            rhs,
            matched: lhs == rhs,
        })
    }

    fn sides(&self, limits: &Limits) -> Result<(Rational, Rational)> {
        let name = self.name();
        match self {
            Identity::MenonClassic { n } => {
                let n = positive(*n, name)?;
                let lhs = unit_sum(n, limits, |k| Ok(gcd_signed(k as i128 - 1, n) as i128))?;
                let rhs = phi(n)? * arith::tau(n)? as i128;
                Ok((int(lhs), int(rhs)))
            }
            Identity::SitaRamaiah { n, f } => {
                let n = positive(*n, name)?;
                let lhs = unit_sum_rational(n, limits, |k| f.eval(gcd_signed(k as i128 - 1, n)))?;
                let inner = Rational::try_sum(
                    divisors(n)?
                        .into_iter()
                        .map(|d| f.mu_star(d)?.checked_div_int(phi(d)?)),
                )?;
                Ok((lhs, inner.checked_mul_int(phi(n)?)?))
            }
            Identity::NageswaraRao { n, shifts } => {
                let n = positive(*n, name)?;
                let s = shifts.len() as u32;
                if s == 0 {
                    return Err(Error::invalid(format!("{name}: need at least one shift")));
                }
                let g = shifts
                    .iter()
                    .fold(n, |acc, &a| gcd(acc, gcd_signed(a as i128, n)));
                if g != 1 {
                    return Err(Error::invalid(format!(
                        "{name}: requires gcd(a_1, ..., a_s, n) = 1"
                    )));
                }
                let lhs = nageswara_lhs(n, shifts, limits)?;
                let rhs = jordan_phi(s, n)?
                    .checked_mul(arith::tau(n)? as i128)
                    .ok_or(Error::Overflow(name_static(name)))?;
                Ok((int(lhs), int(rhs)))
            }
            Identity::Richards { n, g } => {
                let n = positive(*n, name)?;
                let lhs = unit_sum(n, limits, |k| Ok(gcd(g.eval_mod(k, n), n) as i128))?;
                let system = PolySystem::new(vec![g.clone()])?;
                let mut eta_sum: i128 = 0;
                for d in divisors(n)? {
                    eta_sum += count_coprime_solutions(&system, &[d], limits)? as i128;
                }
                Ok((int(lhs), int(phi(n)? * eta_sum)))
            }
            Identity::Sury { n, r } => {
                let n = positive(*n, name)?;
                if *r == 0 {
                    return Err(Error::invalid(format!("{name}: r must be at least 1")));
                }
                let lhs = sury_lhs(n, *r, limits)?;
                let rhs = phi(n)?
                    .checked_mul(sigma(r - 1, n)?)
                    .ok_or(Error::Overflow("sury"))?;
                Ok((int(lhs), int(rhs)))
            }
            Identity::GeneralMenon {
                moduli,
                shifts,
                big_modulus,
            } => {
                let ones = vec![1; moduli.len()];
                general_t(name, moduli, shifts, &ones, *big_modulus, limits)
            }
            Identity::GeneralMenonT {
                moduli,
                shifts,
                exponents,
                big_modulus,
            } => general_t(name, moduli, shifts, exponents, *big_modulus, limits),
            Identity::R2SameShift {
                moduli,
                shift,
                big_modulus,
            } => {
                let m = check_moduli(name, moduli)?;
                if gcd_signed(*shift as i128, m) != 1 {
                    return Err(Error::invalid(format!("{name}: requires gcd(a, m) = 1")));
                }
                let big = check_big(name, m, *big_modulus)?;
                let lhs = unit_sum(big, limits, |k| {
                    Ok(moduli
                        .iter()
                        .map(|&mi| gcd_signed(k as i128 - *shift as i128, mi) as i128)
                        .product())
                })?;
                let mut grid: i128 = 0;
                for d1 in divisors(moduli[0])? {
                    for d2 in divisors(moduli[1])? {
                        grid += phi(gcd(d1, d2))?;
                    }
                }
                Ok((int(lhs), int(phi(big)? * grid)))
            }
            Identity::PairwiseCoprime { moduli, shifts } => {
                check_moduli(name, moduli)?;
                same_len(name, moduli.len(), shifts.len())?;
                for (i, &a) in moduli.iter().enumerate() {
                    for &b in &moduli[i + 1..] {
                        if gcd(a, b) != 1 {
                            return Err(Error::invalid(format!(
                                "{name}: moduli must be pairwise coprime"
                            )));
                        }
                    }
                }
                let m: u64 = moduli.iter().product();
                let lhs = unit_sum(m, limits, |k| shifted_gcd_product(k, moduli, shifts))?;
                let mut rhs = phi(m)?;
                for (&mi, &ai) in moduli.iter().zip(shifts) {
                    rhs *= tau_coprime(mi, ai)? as i128;
                }
                Ok((int(lhs), int(rhs)))
            }
            Identity::R2Offsets {
                moduli,
                shifts,
                big_modulus,
            } => {
                let m = check_moduli(name, moduli)?;
                let big = check_big(name, m, *big_modulus)?;
                let lhs = unit_sum(big, limits, |k| shifted_gcd_product(k, moduli, shifts))?;
                let mut rhs: i128 = 0;
                for d1 in divisors(moduli[0])? {
                    for d2 in divisors(moduli[1])? {
                        let g = gcd(d1, d2);
                        if gcd_signed(shifts[0] as i128, d1) == 1
                            && gcd_signed(shifts[1] as i128, d2) == 1
                            && (shifts[0] as i128 - shifts[1] as i128).rem_euclid(g as i128) == 0
                        {
                            rhs += phi(g)?;
                        }
                    }
                }
                Ok((normalized(lhs, big)?, int(rhs)))
            }
            Identity::R2Adjacent {
                moduli,
                shifts,
                big_modulus,
            } => {
                let m = check_moduli(name, moduli)?;
                if (shifts[0] as i128 - shifts[1] as i128).abs() != 1 {
                    return Err(Error::invalid(format!("{name}: requires |a_1 - a_2| = 1")));
                }
                let big = check_big(name, m, *big_modulus)?;
                let lhs = unit_sum(big, limits, |k| shifted_gcd_product(k, moduli, shifts))?;
                let f1 = factorize(moduli[0])?;
                let f2 = factorize(moduli[1])?;
                let mut rhs: i128 = 1;
                for p in factorize(m)?.primes() {
                    rhs *= r2_adjacent_prime_power(p, f1.exponent(p), f2.exponent(p), *shifts)?
                        as i128;
                }
                Ok((normalized(lhs, big)?, int(rhs)))
            }
            Identity::QuadraticLegendre { moduli, a } => {
                let m = check_moduli(name, moduli)?;
                if m % 2 == 0 {
                    return Err(Error::invalid(format!("{name}: lcm[m_1, m_2] must be odd")));
                }
                if gcd_signed(*a as i128, m) != 1 {
                    return Err(Error::invalid(format!("{name}: requires gcd(a, m) = 1")));
                }
                let a = *a;
                let lhs = unit_sum(m, limits, |k| {
                    let v = (k as i128) * (k as i128) - a as i128;
                    Ok(moduli.iter().map(|&mi| gcd_signed(v, mi) as i128).product())
                })?;
                let mut grid: i128 = 0;
                for d1 in divisors(moduli[0])? {
                    for d2 in divisors(moduli[1])? {
                        let l = arith::lcm(d1, d2)?;
                        let weight: i128 = if a == 1 {
                            1 << arith::omega(l)?
                        } else {
                            let mut w = 1i128;
                            for p in factorize(l)?.primes() {
                                w *= (1 + arith::legendre_symbol(a, p)?) as i128;
                            }
                            w
                        };
                        grid += phi(gcd(d1, d2))? * weight;
                    }
                }
                Ok((int(lhs), int(phi(m)? * grid)))
            }
            Identity::LinearBkMinusA { n, b, a } => {
                let n = positive(*n, name)?;
                if gcd_signed(*b as i128, n) != 1 {
                    return Err(Error::invalid(format!("{name}: requires gcd(b, n) = 1")));
                }
                let lhs = unit_sum(n, limits, |k| {
                    Ok(gcd_signed(*b as i128 * k as i128 - *a as i128, n) as i128)
                })?;
                Ok((int(lhs), int(phi(n)? * tau_coprime(n, *a)? as i128)))
            }
            Identity::SquareMinusOne { n } => {
                let n = positive(*n, name)?;
                let lhs = unit_sum(n, limits, |k| {
                    Ok(gcd_signed(k as i128 * k as i128 - 1, n) as i128)
                })?;
                Ok((int(lhs), int(phi(n)? * square_minus_one_h(n)? as i128)))
            }
            Identity::PowerJ { n, j } => {
                let n = odd(name, *n)?;
                if *j == 0 {
                    return Err(Error::invalid(format!("{name}: j must be positive")));
                }
                let lhs = unit_sum(n, limits, |k| power_minus_one_gcd(k, *j, n))?;
                let mut rhs = phi(n)?;
                for (d, nd) in decompose_n_d(n, *j)? {
                    rhs = rhs
                        .checked_mul(tau_of_power(&factorize(nd)?, d)? as i128)
                        .ok_or(Error::Overflow("power_j"))?;
                }
                Ok((int(lhs), int(rhs)))
            }
            Identity::Power6 { n } => {
                let n = odd(name, *n)?;
                let lhs = unit_sum(n, limits, |k| power_minus_one_gcd(k, 6, n))?;
                let f = factorize(n)?;
                let a_part: Vec<(u64, u32)> = f
                    .pairs()
                    .iter()
                    .copied()
                    .filter(|&(p, _)| p % 6 == 1)
                    .collect();
                let b_part: Vec<(u64, u32)> = f
                    .pairs()
                    .iter()
                    .copied()
                    .filter(|&(p, _)| p % 6 != 1)
                    .collect();
                let tau_a6 = tau_of_power(&Factorization::from_pairs(a_part)?, 6)?;
                let tau_b2 = tau_of_power(&Factorization::from_pairs(b_part)?, 2)?;
                Ok((int(lhs), int(phi(n)? * (tau_a6 * tau_b2) as i128)))
            }
            Identity::GcdKj { n, j } => {
                let n = positive(*n, name)?;
                if *j == 0 {
                    return Err(Error::invalid(format!("{name}: j must be positive")));
                }
                Limits::check("direct sum", n as u128, limits.direct_terms)?;
                let mut total: i128 = 0;
                for k in 1..=n {
                    total += gcd(arith::pow_mod(k, *j as u64, n), n) as i128;
                }
                let lhs = Rational::new(total, n as i128)?;
                let rhs = Rational::try_sum(divisors(n)?.into_iter().map(|d| {
                    let mut nj: u64 = 1;
                    for &(p, e) in factorize(d)?.pairs() {
                        nj *= count_power_roots_zero(*j, p, e)?;
                    }
                    Rational::new(phi(d)? * nj as i128, d as i128)
                }))?;
                Ok((lhs, rhs))
            }
        }
    }
}

fn name_static(name: &str) -> &'static str {
    IDENTITY_NAMES
        .iter()
        .copied()
        .find(|n| *n == name)
        .unwrap_or("identity")
}

/// Evaluates a catalog identity by name.
pub fn named_identity(name: &str, args: &IdentityArgs, limits: &Limits) -> Result<IdentityReport> {
    Identity::from_args(name, args)?.evaluate(limits)
}

/// Splits odd `n` as `prod_{d | j} n_d`, where `n_d` collects the prime powers
/// `p^k || n` with `gcd(p - 1, j) = d`. Every divisor of `j` appears as a key.
pub fn decompose_n_d(n: u64, j: u32) -> Result<BTreeMap<u64, u64>> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::invalid(format!(
            "decompose_n_d: n = {n} must be odd"
        )));
    }
    if j == 0 {
        return Err(Error::invalid("decompose_n_d: j must be positive"));
    }
    let mut out: BTreeMap<u64, u64> = divisors(j as u64)?.into_iter().map(|d| (d, 1)).collect();
    for &(p, e) in factorize(n)?.pairs() {
        let d = gcd(p - 1, j as u64);
        *out.get_mut(&d).expect("gcd divides j") *= p.pow(e);
    }
    Ok(out)
}

/// Value of `R_2^{(a_1, a_2)}(p^u, p^v)` for `|a_1 - a_2| = 1`.
pub fn r2_adjacent_prime_power(p: u64, u: u32, v: u32, shifts: [i64; 2]) -> Result<u64> {
    if !arith::is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    let p1 = shifts[0].rem_euclid(p as i64) == 0;
    let p2 = shifts[1].rem_euclid(p as i64) == 0;
    Ok(match (p1, p2) {
        (false, false) => (u + v + 1) as u64,
        (false, true) => (u + 1) as u64,
        (true, false) => (v + 1) as u64,
        (true, true) => 1,
    })
}

/// `h(n)` with `sum_{(k,n)=1} gcd(k^2 - 1, n) = phi(n) h(n)`.
pub fn square_minus_one_h(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    let ell = f.exponent(2);
    let odd =
        Factorization::from_pairs(f.pairs().iter().copied().filter(|&(p, _)| p != 2).collect())?;
    let t = tau_of_power(&odd, 2)?;
    Ok(match ell {
        0 => t,
        1 => 2 * t,
        _ => 4 * (ell as u64 - 1) * t,
    })
}

/// `tau(m^k)` from the factorization of `m`.
fn tau_of_power(f: &Factorization, k: u64) -> Result<u64> {
    f.pairs().iter().try_fold(1u64, |acc, &(_, e)| {
        acc.checked_mul(k * e as u64 + 1)
            .ok_or(Error::Overflow("tau of a power"))
    })
}

fn positive(n: u64, name: &str) -> Result<u64> {
    if n == 0 {
        Err(Error::invalid(format!("{name}: n must be positive")))
    } else {
        Ok(n)
    }
}

fn odd(name: &str, n: u64) -> Result<u64> {
    if n == 0 || n.is_multiple_of(2) {
        Err(Error::invalid(format!("{name}: n must be odd")))
    } else {
        Ok(n)
    }
}

fn same_len(name: &str, a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "{name}: {a} moduli but {b} shifts/exponents"
        )))
    }
}

fn check_moduli(name: &str, moduli: &[u64]) -> Result<u64> {
    if moduli.is_empty() || moduli.contains(&0) {
        return Err(Error::invalid(format!(
            "{name}: moduli must be positive and nonempty"
        )));
    }
    lcm_all(moduli)
}

fn check_big(name: &str, m: u64, big: Option<u64>) -> Result<u64> {
    let big = big.unwrap_or(m);
    if big == 0 || !big.is_multiple_of(m) {
        return Err(Error::invalid(format!(
            "{name}: M = {big} must be a positive multiple of {m}"
        )));
    }
    Ok(big)
}

fn phi(n: u64) -> Result<i128> {
    Ok(euler_phi(n)? as i128)
}

fn int(v: i128) -> Rational {
    Rational::from_int(v)
}

fn normalized(total: i128, big: u64) -> Result<Rational> {
    Rational::new(total, phi(big)?)
}

fn shifted_gcd_product(k: u64, moduli: &[u64], shifts: &[i64]) -> Result<i128> {
    let mut acc: i128 = 1;
    for (&m, &a) in moduli.iter().zip(shifts) {
        acc *= gcd_signed(k as i128 - a as i128, m) as i128;
    }
    Ok(acc)
}

fn power_minus_one_gcd(k: u64, j: u32, n: u64) -> Result<i128> {
    let v = (arith::pow_mod(k, j as u64, n) + n - 1) % n;
    Ok(gcd(v, n) as i128)
}

/// `sum_{1 <= k <= n, gcd(k, n) = 1} term(k)` with an exact integer accumulator.
fn unit_sum(n: u64, limits: &Limits, term: impl Fn(u64) -> Result<i128>) -> Result<i128> {
    Limits::check("direct sum", n as u128, limits.direct_terms)?;
    let mut acc: i128 = 0;
    for k in 1..=n {
        if gcd(k, n) == 1 {
            acc = acc
                .checked_add(term(k)?)
                .ok_or(Error::Overflow("direct sum"))?;
        }
    }
    Ok(acc)
}

fn unit_sum_rational(
    n: u64,
    limits: &Limits,
    term: impl Fn(u64) -> Result<Rational>,
) -> Result<Rational> {
    Limits::check("direct sum", n as u128, limits.direct_terms)?;
    let mut acc = Rational::ZERO;
    for k in 1..=n {
        if gcd(k, n) == 1 {
            acc = acc.checked_add(&term(k)?)?;
        }
    }
    Ok(acc)
}

fn nested_budget(n: u64, s: u32, limits: &Limits) -> Result<()> {
    let terms = (n as u128).checked_pow(s).unwrap_or(u128::MAX);
    Limits::check("multi-index sum", terms, limits.direct_terms)
}

/// `sum_{k_1..k_s <= n, gcd(k_1..k_s, n) = 1} gcd(k_1 - a_1, ..., k_s - a_s, n)^s`.
fn nageswara_lhs(n: u64, shifts: &[i64], limits: &Limits) -> Result<i128> {
    let s = shifts.len() as u32;
    nested_budget(n, s, limits)?;
    let axis: Vec<u64> = (1..=n).collect();
    let lists = vec![axis; s as usize];
    let mut acc: i128 = 0;
    for_each_index(&lists, |idx| {
        let mut unit = n;
        let mut g = n;
        for (&i, &a) in idx.iter().zip(shifts) {
            let k = i as u64 + 1;
            unit = gcd(unit, k);
            g = gcd(g, gcd_signed(k as i128 - a as i128, n));
        }
        if unit == 1 {
            let term = (g as i128)
                .checked_pow(s)
                .ok_or(Error::Overflow("nageswara_rao"))?;
            acc = acc
                .checked_add(term)
                .ok_or(Error::Overflow("nageswara_rao"))?;
        }
        Ok(())
    })?;
    Ok(acc)
}

/// `sum_{k_1..k_r <= n, gcd(k_1, n) = 1} gcd(k_1 - 1, k_2, ..., k_r, n)`.
fn sury_lhs(n: u64, r: u32, limits: &Limits) -> Result<i128> {
    nested_budget(n, r, limits)?;
    let axis: Vec<u64> = (1..=n).collect();
    let rest = vec![axis; r as usize - 1];
    let mut acc: i128 = 0;
    for k1 in (1..=n).filter(|&k| gcd(k, n) == 1) {
        let g1 = gcd(k1 - 1, n);
        if rest.is_empty() {
            acc += g1 as i128;
            continue;
        }
        for_each_index(&rest, |idx| {
            let g = idx.iter().fold(g1, |g, &i| gcd(g, i as u64 + 1));
            acc += g as i128;
            Ok(())
        })?;
    }
    Ok(acc)
}

fn general_t(
    name: &str,
    moduli: &[u64],
    shifts: &[i64],
    exponents: &[u32],
    big_modulus: Option<u64>,
    limits: &Limits,
) -> Result<(Rational, Rational)> {
    let m = check_moduli(name, moduli)?;
    same_len(name, moduli.len(), shifts.len())?;
    same_len(name, moduli.len(), exponents.len())?;
    let big = check_big(name, m, big_modulus)?;
    let lhs = unit_sum(big, limits, |k| {
        let mut acc: i128 = 1;
        for ((&mi, &a), &t) in moduli.iter().zip(shifts).zip(exponents) {
            let g = gcd_signed(k as i128 - a as i128, mi) as i128;
            acc = g
                .checked_pow(t)
                .and_then(|v| acc.checked_mul(v))
                .ok_or(Error::Overflow("general_menon"))?;
        }
        Ok(acc)
    })?;
    let lists = moduli
        .iter()
        .map(|&mi| divisors(mi))
        .collect::<Result<Vec<_>>>()?;
    Limits::check(
        "divisor grid",
        lists.iter().map(|l| l.len() as u128).product(),
        limits.divisor_grid,
    )?;
    let mut rhs = Rational::ZERO;
    let mut d = vec![0u64; lists.len()];
    for_each_index(&lists, |idx| {
        for (i, &j) in idx.iter().enumerate() {
            d[i] = lists[i][j];
        }
        if eta_linear(shifts, &d)? == 0 {
            return Ok(());
        }
        let mut num: i128 = 1;
        for (&di, &t) in d.iter().zip(exponents) {
            num = num
                .checked_mul(jordan_phi(t, di)?)
                .ok_or(Error::Overflow("general_menon"))?;
        }
        let term = Rational::new(num, phi(lcm_all(&d)?)?)?;
        rhs = rhs.checked_add(&term)?;
        Ok(())
    })?;
    Ok((normalized(lhs, big)?, rhs))
}
