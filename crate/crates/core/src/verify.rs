//! Property sweeps: every identity and invariant in the crate checked over explicit grids.
//!
//! Each sweep returns an [`Outcome`] listing the number of cases checked and a
//! sorted list of failures with their full inputs. The CLI `verify` command and
//! the acceptance tests both drive these sweeps.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{self, divisors, euler_phi, gcd, gcd_signed, lcm_all};
use crate::congruence::{
    count_coprime_solutions, count_solutions, eta_linear, IntPoly, PolySystem,
};
use crate::error::Result;
use crate::groups::{
    cyclic_count_burnside, cyclic_count_enumerate, cyclic_count_formula,
    cyclic_count_prime_power_pair, DirectProductSpec,
};
use crate::menon::{
    sum_r_direct, sum_r_formula, sum_s_direct, sum_s_formula, Identity, MenonInstance,
};
use crate::multifunc::{check_multiplicative, FuncSpec, MultiFunc};
use crate::rational::Rational;
use crate::Limits;

/// Tally of one sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub name: String,
    pub checked: u64,
    pub failures: Vec<String>,
}

impl Outcome {
    pub fn new(name: impl Into<String>) -> Self {
        Outcome {
            name: name.into(),
            ..Outcome::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    fn error(&mut self, context: impl fmt::Display, err: crate::Error) {
        self.checked += 1;
        self.failures.push(format!("{context}: error: {err}"));
    }

    fn finish(mut self) -> Self {
        self.failures.sort();
        self
    }

    /// Merges several outcomes under one name.
    pub fn combine(name: impl Into<String>, parts: Vec<Outcome>) -> Self {
        let mut out = Outcome::new(name);
        for p in parts {
            out.checked += p.checked;
            out.failures
                .extend(p.failures.into_iter().map(|f| format!("[{}] {f}", p.name)));
        }
        out.finish()
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({} checked, {} failed)",
            self.name,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checked,
            self.failures.len()
        )
    }
}

/// Fixed seed for every randomized grid, so reruns are identical.
pub const SEED: u64 = 0x4d45_4e4f_4e00_0001;

const RANDOM_FUNCS: [&str; 4] = ["id", "id^2", "one", "phi"];

fn random_poly(rng: &mut ChaCha8Rng, max_degree: usize) -> IntPoly {
    let degree = rng.gen_range(0..=max_degree);
    let mut coeffs: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-5..=5)).collect();
    if coeffs[degree] == 0 {
        coeffs[degree] = 1;
    }
    IntPoly::new(coeffs).expect("small coefficients")
}

/// Random instance with `r <= 3`, `m_i <= max_modulus`, `deg g_i <= 2`, `F` from `{id, id^2, one, phi}`.
pub fn random_instance(rng: &mut ChaCha8Rng, max_modulus: u64) -> MenonInstance {
    let r = rng.gen_range(1..=3);
    let funcs = (0..r)
        .map(|_| {
            RANDOM_FUNCS[rng.gen_range(0..RANDOM_FUNCS.len())]
                .parse()
                .unwrap()
        })
        .collect();
    let polys = PolySystem::new((0..r).map(|_| random_poly(rng, 2)).collect()).unwrap();
    let moduli = (0..r).map(|_| rng.gen_range(1..=max_modulus)).collect();
    MenonInstance::new(funcs, polys, moduli, None).expect("valid random instance")
}

fn describe(inst: &MenonInstance) -> String {
    let funcs: Vec<String> = inst.funcs().iter().map(|f| f.to_string()).collect();
    format!(
        "F=({}) G=({}) m={:?} M={}",
        funcs.join(","),
        inst.polys(),
        inst.moduli(),
        inst.big_modulus()
    )
}

/// Direct sum versus divisor-sum formula for `S` and `R` on `count` random
/// instances, each at `M = m, 2m, 3m`; also checks that the direct `R` does not
/// depend on `M` and that `R` with every `f_i = id` is a positive integer.
pub fn theorems(count: usize, max_modulus: u64, limits: &Limits) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut s_out = Outcome::new("theorem-S");
    let mut r_out = Outcome::new("theorem-R");
    let mut m_out = Outcome::new("M-independence");
    let mut int_out = Outcome::new("integrality");
    for _ in 0..count {
        let base = random_instance(&mut rng, max_modulus);
        let m = base.big_modulus();
        let s_formula = sum_s_formula(&base, limits);
        let r_formula = sum_r_formula(&base, limits);
        let mut r_values = Vec::new();
        for factor in [1, 2, 3] {
            let inst = base.with_big_modulus(m * factor).expect("multiple of m");
            match (s_formula.as_ref(), sum_s_direct(&inst, limits).as_ref()) {
                (Ok(f), Ok(d)) => s_out.check(f == d, || {
                    format!("{}: formula {f} != direct {d}", describe(&inst))
                }),
                (Err(e), _) | (_, Err(e)) => s_out.error(describe(&inst), e.clone()),
            }
            match (r_formula.as_ref(), sum_r_direct(&inst, limits).as_ref()) {
                (Ok(f), Ok(d)) => {
                    r_out.check(f == d, || {
                        format!("{}: formula {f} != direct {d}", describe(&inst))
                    });
                    r_values.push(*d);
                }
                (Err(e), _) | (_, Err(e)) => r_out.error(describe(&inst), e.clone()),
            }
        }
        m_out.check(
            r_values.len() == 3 && r_values.windows(2).all(|w| w[0] == w[1]),
            || {
                format!(
                    "{}: direct R over M=m,2m,3m gave {r_values:?}",
                    describe(&base)
                )
            },
        );

        let ids = MenonInstance::new(
            vec![FuncSpec::id(); base.arity()],
            base.polys().clone(),
            base.moduli().to_vec(),
            None,
        )
        .expect("same shape");
        match sum_r_formula(&ids, limits) {
            Ok(v) => int_out.check(v.is_integer() && v.is_positive(), || {
                format!("{}: R = {v} is not a positive integer", describe(&ids))
            }),
            Err(e) => int_out.error(describe(&ids), e),
        }
    }
    Outcome::combine("theorems", vec![s_out, r_out, m_out, int_out])
}

/// Bounds for the identity catalog sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogBounds {
    /// Single-variable identities run for every valid `n <= max_n`.
    pub max_n: u64,
    /// Multi-variable identities run for every `m_i <= max_m`.
    pub max_m: u64,
    /// Shifts range over `-max_shift..=max_shift`.
    pub max_shift: i64,
    /// Three-modulus sweeps use `m_i <= max_m3`.
    pub max_m3: u64,
}

impl CatalogBounds {
    pub fn from_limit(limit: u64) -> Self {
        CatalogBounds {
            max_n: limit,
            max_m: limit.min(20),
            max_shift: 3,
            max_m3: limit.min(12),
        }
    }
}

/// A rational, non-multiplicative test function `f(k) = (k^2 - 3k + 5) / (k + 1)`.
pub fn sample_table(bound: u64) -> FuncSpec {
    FuncSpec::table(
        (1..=bound as i128)
            .map(|k| Rational::new(k * k - 3 * k + 5, k + 1).unwrap())
            .collect(),
    )
    .unwrap()
}

/// Polynomials used for the single-variable `g` sweeps.
pub const SAMPLE_POLYS: [&str; 8] = [
    "x", "x-1", "x+1", "x^2-1", "x^2+1", "2x+3", "x^2+x+1", "x^3-2",
];

/// Calls `visit` with every catalog instance inside `bounds`. Instances whose
/// parameters violate the hypotheses of their identity are not generated.
pub fn for_each_catalog_instance(bounds: CatalogBounds, mut visit: impl FnMut(Identity)) {
    let shifts: Vec<i64> = (-bounds.max_shift..=bounds.max_shift).collect();
    let funcs: Vec<FuncSpec> = ["id", "id^2", "one", "phi", "tau", "sigma_1"]
        .iter()
        .map(|s| s.parse().unwrap())
        .chain(std::iter::once(sample_table(bounds.max_n.max(1))))
        .collect();
    let polys: Vec<IntPoly> = SAMPLE_POLYS.iter().map(|s| s.parse().unwrap()).collect();

    for n in 1..=bounds.max_n {
        visit(Identity::MenonClassic { n });
        for f in &funcs {
            visit(Identity::SitaRamaiah { n, f: f.clone() });
        }
        for &a in &shifts {
            if gcd_signed(a as i128, n) == 1 {
                visit(Identity::NageswaraRao { n, shifts: vec![a] });
            }
            for &b in &shifts {
                if gcd(gcd_signed(a as i128, n), gcd_signed(b as i128, n)) == 1 {
                    visit(Identity::NageswaraRao {
                        n,
                        shifts: vec![a, b],
                    });
                }
                if gcd_signed(b as i128, n) == 1 {
                    visit(Identity::LinearBkMinusA { n, b, a });
                }
            }
        }
        if n <= 30 {
            visit(Identity::NageswaraRao {
                n,
                shifts: vec![1, 1, 1],
            });
            visit(Identity::NageswaraRao {
                n,
                shifts: vec![1, 0, -1],
            });
        }
        for g in &polys {
            visit(Identity::Richards { n, g: g.clone() });
        }
        for r in 1..=2 {
            visit(Identity::Sury { n, r });
        }
        if n <= 60 {
            visit(Identity::Sury { n, r: 3 });
        }
        visit(Identity::SquareMinusOne { n });
        for j in 1..=5 {
            visit(Identity::GcdKj { n, j });
        }
        if n % 2 == 1 {
            for j in 1..=6 {
                visit(Identity::PowerJ { n, j });
            }
            visit(Identity::Power6 { n });
        }
    }

    let max_m = bounds.max_m;
    for m1 in 1..=max_m {
        for m2 in 1..=max_m {
            let m = arith::lcm(m1, m2).unwrap();
            for &a1 in &shifts {
                for &a2 in &shifts {
                    visit(Identity::GeneralMenon {
                        moduli: vec![m1, m2],
                        shifts: vec![a1, a2],
                        big_modulus: None,
                    });
                    visit(Identity::R2Offsets {
                        moduli: [m1, m2],
                        shifts: [a1, a2],
                        big_modulus: None,
                    });
                    if (a1 - a2).abs() == 1 {
                        visit(Identity::R2Adjacent {
                            moduli: [m1, m2],
                            shifts: [a1, a2],
                            big_modulus: None,
                        });
                    }
                    if gcd(m1, m2) == 1 {
                        visit(Identity::PairwiseCoprime {
                            moduli: vec![m1, m2],
                            shifts: vec![a1, a2],
                        });
                    }
                    for t1 in 0..=2 {
                        for t2 in 0..=2 {
                            visit(Identity::GeneralMenonT {
                                moduli: vec![m1, m2],
                                shifts: vec![a1, a2],
                                exponents: vec![t1, t2],
                                big_modulus: None,
                            });
                        }
                    }
                }
                if gcd_signed(a1 as i128, m) == 1 {
                    for factor in [1, 2] {
                        visit(Identity::R2SameShift {
                            moduli: [m1, m2],
                            shift: a1,
                            big_modulus: Some(m * factor),
                        });
                    }
                    if m % 2 == 1 {
                        visit(Identity::QuadraticLegendre {
                            moduli: [m1, m2],
                            a: a1,
                        });
                    }
                }
            }
            visit(Identity::GeneralMenon {
                moduli: vec![m1, m2],
                shifts: vec![1, 2],
                big_modulus: Some(2 * m),
            });
        }
    }

    // three moduli: sorted triples suffice because permuting moduli and shifts together
    // permutes the factors of every term
    let max_m3 = bounds.max_m3;
    for m1 in 1..=max_m3 {
        for m2 in m1..=max_m3 {
            for m3 in m2..=max_m3 {
                let coprime = gcd(m1, m2) == 1 && gcd(m1, m3) == 1 && gcd(m2, m3) == 1;
                for &a1 in &shifts {
                    for &a2 in &shifts {
                        for &a3 in &shifts {
                            let moduli = vec![m1, m2, m3];
                            let sh = vec![a1, a2, a3];
                            if coprime {
                                visit(Identity::PairwiseCoprime {
                                    moduli: moduli.clone(),
                                    shifts: sh.clone(),
                                });
                            }
                            visit(Identity::GeneralMenon {
                                moduli,
                                shifts: sh,
                                big_modulus: None,
                            });
                        }
                    }
                }
            }
        }
    }
}

/// Runs the whole catalog sweep.
pub fn identities(bounds: CatalogBounds, limits: &Limits) -> Outcome {
    let mut out = Outcome::new("identities");
    for_each_catalog_instance(bounds, |id| match id.evaluate(limits) {
        Ok(rep) => out.check(rep.matched, || {
            let params: Vec<String> = rep
                .parameters
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            format!(
                "{} {}: lhs {} != rhs {}",
                rep.identity_name,
                params.join(" "),
                rep.lhs,
                rep.rhs
            )
        }),
        Err(e) => out.error(format!("{id:?}"), e),
    });
    out.finish()
}

/// Three-way agreement of the cyclic-subgroup counts for every order tuple with
/// `r <= 3` and `m_1 ... m_r <= max_order`, plus the two-factor and prime-power closed forms.
pub fn groups(max_order: u64, limits: &Limits) -> Outcome {
    let mut three = Outcome::new("three-way");
    for_each_order_tuple(max_order, |orders| {
        let spec = DirectProductSpec::new(orders.to_vec()).unwrap();
        let f = cyclic_count_formula(&spec, limits);
        let b = cyclic_count_burnside(&spec, limits);
        let e = cyclic_count_enumerate(&spec, limits);
        match (f, b, e) {
            (Ok(f), Ok(b), Ok(e)) => three.check(f == b && b == e, || {
                format!("orders {orders:?}: formula {f}, burnside {b}, enumerate {e}")
            }),
            (Err(err), _, _) | (_, Err(err), _) | (_, _, Err(err)) => {
                three.error(format!("orders {orders:?}"), err)
            }
        }
    });

    let mut two = Outcome::new("two-factor");
    let bound = max_order.min(40);
    for m1 in 1..=bound {
        for m2 in 1..=bound {
            let spec = DirectProductSpec::new(vec![m1, m2]).unwrap();
            match (cyclic_count_formula(&spec, limits), gcd_phi_grid(m1, m2)) {
                (Ok(c), Ok(g)) => two.check(c == g, || {
                    format!("orders ({m1},{m2}): formula {c}, phi(gcd) grid {g}")
                }),
                (Err(e), _) | (_, Err(e)) => two.error(format!("orders ({m1},{m2})"), e),
            }
        }
    }

    let mut pp = Outcome::new("prime-power-pair");
    for p in [2u64, 3, 5] {
        for u in 1..=4u32 {
            for v in 1..=u {
                let spec = DirectProductSpec::new(vec![p.pow(u), p.pow(v)]).unwrap();
                match (
                    cyclic_count_prime_power_pair(p, u, v),
                    cyclic_count_formula(&spec, limits),
                ) {
                    (Ok(c), Ok(f)) => pp.check(c == f, || {
                        format!("p={p} u={u} v={v}: closed form {c}, formula {f}")
                    }),
                    (Err(e), _) | (_, Err(e)) => pp.error(format!("p={p} u={u} v={v}"), e),
                }
            }
        }
    }
    Outcome::combine("groups", vec![three, two, pp])
}

fn gcd_phi_grid(m1: u64, m2: u64) -> Result<u64> {
    let mut total = 0;
    for d1 in divisors(m1)? {
        for d2 in divisors(m2)? {
            total += euler_phi(gcd(d1, d2))?;
        }
    }
    Ok(total)
}

/// Every ordered tuple of length 1..=3 with positive entries and product `<= max_order`.
pub fn for_each_order_tuple(max_order: u64, mut visit: impl FnMut(&[u64])) {
    for a in 1..=max_order {
        visit(&[a]);
        for b in 1..=max_order / a {
            visit(&[a, b]);
            for c in 1..=max_order / (a * b) {
                visit(&[a, b, c]);
            }
        }
    }
}

/// Counts solutions by scanning every `x` modulo `lcm[d]` in one pass, with no prime-power splitting.
pub fn count_unsplit(system: &PolySystem, moduli: &[u64], coprime: bool) -> Result<u64> {
    let l = lcm_all(moduli)?;
    let mut count = 0;
    for x in 0..l {
        if coprime && moduli.iter().any(|&d| gcd(x, d) != 1) {
            continue;
        }
        if system
            .polys()
            .iter()
            .zip(moduli)
            .all(|(g, &d)| g.eval_mod(x, d) == 0)
        {
            count += 1;
        }
    }
    Ok(count)
}

/// Multiplicativity of `N_G` and `eta_G` on random systems (`deg <= 3`, `r <= 3`)
/// and random coprime tuple pairs with components `<= max_component`, each value
/// computed by a single unsplit scan and also compared with the split count.
pub fn lemma_multiplicativity(samples: usize, max_component: u64, limits: &Limits) -> Outcome {
    let mut out = Outcome::new("lemma-multiplicative");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x1);
    let mut done = 0;
    while done < samples {
        let r = rng.gen_range(1..=3);
        let system = PolySystem::new((0..r).map(|_| random_poly(&mut rng, 3)).collect()).unwrap();
        let m: Vec<u64> = (0..r).map(|_| rng.gen_range(1..=max_component)).collect();
        let n: Vec<u64> = (0..r).map(|_| rng.gen_range(1..=max_component)).collect();
        if gcd(m.iter().product(), n.iter().product()) != 1 {
            continue;
        }
        let mn: Vec<u64> = m.iter().zip(&n).map(|(a, b)| a * b).collect();
        if lcm_all(&mn).unwrap() > 300_000 {
            continue;
        }
        done += 1;
        for coprime in [false, true] {
            let split = |d: &[u64]| {
                if coprime {
                    count_coprime_solutions(&system, d, limits)
                } else {
                    count_solutions(&system, d, limits)
                }
            };
            let label = if coprime { "eta_G" } else { "N_G" };
            let vals = (
                count_unsplit(&system, &m, coprime),
                count_unsplit(&system, &n, coprime),
                count_unsplit(&system, &mn, coprime),
                split(&mn),
            );
            match vals {
                (Ok(a), Ok(b), Ok(c), Ok(s)) => out.check(a * b == c && c == s, || {
                    format!(
                        "{label} G=({system}) m={m:?} n={n:?}: {a} * {b} vs {c} (split count {s})"
                    )
                }),
                (Err(e), ..) | (_, Err(e), ..) | (_, _, Err(e), _) | (.., Err(e)) => {
                    out.error(format!("{label} G=({system}) m={m:?} n={n:?}"), e)
                }
            }
        }
    }
    out.finish()
}

/// `#{k <= n : k = x (mod d), gcd(k, n) = 1} = phi(n) / phi(d)` for all `n <= max_n`,
/// `d | n` and `x` coprime to `d`.
pub fn lemma_unit_count(max_n: u64) -> Outcome {
    let mut out = Outcome::new("lemma-unit-count");
    for n in 1..=max_n {
        let phi_n = euler_phi(n).unwrap();
        for d in divisors(n).unwrap() {
            let phi_d = euler_phi(d).unwrap();
            for x in (1..=d).filter(|&x| gcd(x, d) == 1) {
                let count = (x..=n)
                    .step_by(d as usize)
                    .filter(|&k| gcd(k, n) == 1)
                    .count() as u64;
                out.check(count * phi_d == phi_n, || {
                    format!("n={n} d={d} x={x}: count {count}, phi(n)/phi(d) = {phi_n}/{phi_d}")
                });
            }
        }
    }
    out.finish()
}

/// Closed form of `eta` for linear systems against the congruence count, over
/// `r <= 3`, `d_i <= max_d`, `a_i in [-max_shift, max_shift]`.
pub fn eta_linear_grid(max_d: u64, max_shift: i64, limits: &Limits) -> Outcome {
    let mut out = Outcome::new("eta-linear");
    let shifts: Vec<i64> = (-max_shift..=max_shift).collect();
    let ds: Vec<u64> = (1..=max_d).collect();
    for r in 1..=3usize {
        let mut a = vec![0i64; r];
        let mut d = vec![0u64; r];
        let a_lists = vec![shifts.clone(); r];
        let d_lists = vec![ds.clone(); r];
        let _ = crate::multifunc::for_each_index(&d_lists, |di| {
            for (k, &i) in di.iter().enumerate() {
                d[k] = d_lists[k][i];
            }
            crate::multifunc::for_each_index(&a_lists, |ai| {
                for (k, &i) in ai.iter().enumerate() {
                    a[k] = a_lists[k][i];
                }
                let system = PolySystem::linear(&a).unwrap();
                match (
                    eta_linear(&a, &d),
                    count_coprime_solutions(&system, &d, limits),
                ) {
                    (Ok(c), Ok(b)) => out.check(c == b, || {
                        format!("a={a:?} d={d:?}: closed form {c}, count {b}")
                    }),
                    (Err(e), _) | (_, Err(e)) => out.error(format!("a={a:?} d={d:?}"), e),
                }
                Ok(())
            })
        });
    }
    out.finish()
}

pub fn lemmas(limit: u64, limits: &Limits) -> Outcome {
    Outcome::combine(
        "lemmas",
        vec![
            lemma_multiplicativity(limit as usize, 30, limits),
            lemma_unit_count(limit),
            eta_linear_grid(limit.min(12), 5, limits),
        ],
    )
}

/// `m -> S(m)` and `m -> R(m)` for multiplicative `F` and `m -> c(C_m1 x ... )`,
/// each checked with [`check_multiplicative`] at the given bound and arity.
pub fn multiplicativity(arity: usize, bound: u64, limits: &Limits) -> Outcome {
    let mut out = Outcome::new("multiplicativity");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x2);
    let limits = *limits;
    let mut cases: Vec<(String, MultiFunc)> = Vec::new();
    for _ in 0..2 {
        let funcs: Vec<FuncSpec> = (0..arity)
            .map(|_| {
                RANDOM_FUNCS[rng.gen_range(0..RANDOM_FUNCS.len())]
                    .parse()
                    .unwrap()
            })
            .collect();
        let polys =
            PolySystem::new((0..arity).map(|_| random_poly(&mut rng, 2)).collect()).unwrap();
        let template =
            MenonInstance::new(funcs, polys, vec![1; arity], None).expect("valid template");
        let label = describe(&template);
        let t = template.clone();
        cases.push((
            format!("S {label}"),
            MultiFunc::new(arity, move |m| {
                sum_s_formula(&t.with_moduli(m.to_vec())?, &limits)
            }),
        ));
        let t = template;
        cases.push((
            format!("R {label}"),
            MultiFunc::new(arity, move |m| {
                sum_r_formula(&t.with_moduli(m.to_vec())?, &limits)
            }),
        ));
    }
    cases.push((
        format!("cyclic subgroups r={arity}"),
        MultiFunc::new(arity, move |m| {
            let spec = DirectProductSpec::new(m.to_vec())?;
            Ok(Rational::from(cyclic_count_formula(&spec, &limits)?))
        }),
    ));
    for (label, f) in cases {
        match check_multiplicative(&f, bound) {
            Ok(ce) => {
                out.checked += 1;
                out.failures
                    .extend(ce.iter().take(5).map(|c| format!("{label}: {c}")));
            }
            Err(e) => out.error(label, e),
        }
    }
    out.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_tuples() {
        let mut n = 0;
        for_each_order_tuple(4, |t| {
            assert!(t.iter().product::<u64>() <= 4);
            n += 1;
        });
        // r=1: 4; r=2: 8; r=3: 13
        assert_eq!(n, 25);
    }

    #[test]
    fn small_sweeps_pass() {
        let l = Limits::default();
        assert!(theorems(20, 12, &l).passed());
        assert!(groups(60, &l).passed());
        assert!(lemmas(30, &l).passed());
        let out = identities(
            CatalogBounds {
                max_n: 8,
                max_m: 4,
                max_shift: 1,
                max_m3: 3,
            },
            &l,
        );
        assert!(out.passed(), "{:?}", out.failures);
        assert!(multiplicativity(1, 10, &l).passed());
    }

    #[test]
    fn unsplit_count() {
        let g: PolySystem = "x^2-1".parse().unwrap();
        assert_eq!(count_unsplit(&g, &[8], false).unwrap(), 4);
        assert_eq!(count_unsplit(&g, &[24], true).unwrap(), 8);
    }
}
