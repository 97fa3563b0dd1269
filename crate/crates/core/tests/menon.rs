use menon_core::arith::{divisors, euler_phi, factorize, gcd, gcd_signed, pow_mod, tau};
use menon_core::menon::{
    decompose_n_d, named_identity, r2_adjacent_prime_power, square_minus_one_h, sum_r_direct,
    sum_r_formula, sum_s_direct, sum_s_formula, Identity, IdentityArgs, MenonInstance,
    IDENTITY_NAMES,
};
use menon_core::verify::{multiplicativity, random_instance, theorems, SEED};
use menon_core::{Limits, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn formulas_match_direct_sums() {
    let out = theorems(200, 24, &Limits::default());
    assert!(out.passed(), "{:?}", out.failures);
}

#[test]
fn both_sums_independent_of_big_modulus() {
    let l = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x77);
    for _ in 0..150 {
        let inst = random_instance(&mut rng, 24);
        let m = inst.big_modulus();
        let s = sum_s_formula(&inst, &l).unwrap();
        let r = sum_r_formula(&inst, &l).unwrap();
        for factor in [1, 2, 6] {
            let big = inst.with_big_modulus(m * factor).unwrap();
            assert_eq!(sum_s_direct(&big, &l).unwrap(), s);
            assert_eq!(sum_r_direct(&big, &l).unwrap(), r);
        }
    }
}

#[test]
fn sums_are_multiplicative_in_the_moduli() {
    let l = Limits::default();
    for r in 1..=2 {
        let out = multiplicativity(r, 10, &l);
        assert!(out.passed(), "{:?}", out.failures);
    }
}

#[test]
fn identity_r_sum_terms_are_integers() {
    // phi(d_1) phi(d_2) phi(d_3) / phi(lcm) is an integer for every divisor triple
    for m in [12u64, 30, 36, 60] {
        for d1 in divisors(m).unwrap() {
            for d2 in divisors(m).unwrap() {
                for d3 in divisors(m).unwrap() {
                    let l = menon_core::arith::lcm_all(&[d1, d2, d3]).unwrap();
                    let num =
                        euler_phi(d1).unwrap() * euler_phi(d2).unwrap() * euler_phi(d3).unwrap();
                    assert_eq!(num % euler_phi(l).unwrap(), 0);
                }
            }
        }
    }
}

#[test]
fn every_catalog_name_parses_and_matches_on_a_sample() {
    let l = Limits::default();
    let args = IdentityArgs {
        n: Some(35),
        moduli: vec![5, 7],
        shifts: vec![1, 2],
        j: Some(2),
        r: Some(2),
        poly: Some("x^2+1".parse().unwrap()),
        ..IdentityArgs::default()
    };
    for name in IDENTITY_NAMES {
        let rep = named_identity(name, &args, &l).unwrap();
        assert!(rep.matched, "{name}: {} vs {}", rep.lhs, rep.rhs);
        assert_eq!(rep.identity_name, name);
    }
}

#[test]
fn documented_identity_values() {
    let l = Limits::default();
    let rep = Identity::MenonClassic { n: 12 }.evaluate(&l).unwrap();
    assert_eq!((rep.lhs, rep.rhs), (Rational::from(24), Rational::from(24)));
    let rep = Identity::PowerJ { n: 15, j: 2 }.evaluate(&l).unwrap();
    assert_eq!(
        (rep.lhs, rep.rhs, rep.matched),
        (Rational::from(72), Rational::from(72), true)
    );
}

#[test]
fn r2_adjacent_table_matches_sum() {
    let l = Limits::default();
    for p in [2u64, 3, 5] {
        for u in 1..=3u32 {
            for v in 1..=3u32 {
                for shifts in [
                    [1i64, 2],
                    [2, 1],
                    [0, 1],
                    [1, 0],
                    [-1, 0],
                    [p as i64, p as i64 + 1],
                    [p as i64 - 1, p as i64],
                ] {
                    let (m1, m2) = (p.pow(u), p.pow(v));
                    let inst = MenonInstance::new(
                        vec!["id".parse().unwrap(), "id".parse().unwrap()],
                        menon_core::congruence::PolySystem::linear(&shifts).unwrap(),
                        vec![m1, m2],
                        None,
                    )
                    .unwrap();
                    let table = r2_adjacent_prime_power(p, u, v, shifts).unwrap();
                    assert_eq!(
                        sum_r_direct(&inst, &l).unwrap(),
                        Rational::from(table),
                        "p={p} u={u} v={v} a={shifts:?}"
                    );
                }
            }
        }
    }
    assert_eq!(r2_adjacent_prime_power(3, 1, 1, [1, 2]).unwrap(), 3);
}

#[test]
fn decomposition_covers_n() {
    for n in (1..=999u64).step_by(2) {
        for j in 1..=12u32 {
            let parts = decompose_n_d(n, j).unwrap();
            assert_eq!(parts.values().product::<u64>(), n);
            for (&d, &nd) in &parts {
                assert_eq!(j as u64 % d, 0);
                for &(p, _) in factorize(nd).unwrap().pairs() {
                    assert_eq!(gcd(p - 1, j as u64), d);
                }
            }
        }
    }
    assert!(decompose_n_d(10, 2).is_err());
}

#[test]
fn square_minus_one_h_counts_roots() {
    for n in 1..=2000u64 {
        let lhs: u64 = (1..=n)
            .filter(|&k| gcd(k, n) == 1)
            .map(|k| gcd((k * k - 1) % n, n))
            .sum();
        assert_eq!(
            lhs,
            euler_phi(n).unwrap() * square_minus_one_h(n).unwrap(),
            "n={n}"
        );
    }
}

/// For `g = x^j - 1` the general identity gives `phi(n) sum_{d | n} eta(d)` with
/// `eta(p^a) = gcd(j, phi(p^a))`, which holds for every odd `n`, including those where
/// the `power_j` closed form (built on `gcd(j, p - 1)`) does not.
#[test]
fn power_sum_with_exact_root_counts() {
    for j in 1..=6u64 {
        for n in (1..=300u64).step_by(2) {
            let lhs: u64 = (1..=n)
                .filter(|&k| gcd(k, n) == 1)
                .map(|k| gcd_signed(pow_mod(k, j, n) as i128 - 1, n))
                .sum();
            let eta_sum: u64 = divisors(n)
                .unwrap()
                .into_iter()
                .map(|d| {
                    factorize(d)
                        .unwrap()
                        .pairs()
                        .iter()
                        .map(|&(p, a)| gcd(j, euler_phi(p.pow(a)).unwrap()))
                        .product::<u64>()
                })
                .sum();
            assert_eq!(lhs, euler_phi(n).unwrap() * eta_sum, "j={j} n={n}");
        }
    }
}

#[test]
fn power_j_closed_form_holds_when_no_prime_square_divides_both() {
    let l = Limits::default();
    for j in 1..=6u32 {
        for n in (1..=300u64).step_by(2) {
            let exempt = factorize(n)
                .unwrap()
                .pairs()
                .iter()
                .all(|&(p, a)| !(j as u64).is_multiple_of(p) || a == 1);
            let rep = Identity::PowerJ { n, j }.evaluate(&l).unwrap();
            assert_eq!(
                rep.matched, exempt,
                "j={j} n={n}: {} vs {}",
                rep.lhs, rep.rhs
            );
        }
    }
    // smallest case outside: 9 | n and 3 | j
    let rep = Identity::Power6 { n: 9 }.evaluate(&l).unwrap();
    assert_eq!((rep.lhs, rep.rhs), (Rational::from(54), Rational::from(30)));
}

#[test]
fn menon_classic_is_phi_tau() {
    let l = Limits::default();
    for n in 1..=500u64 {
        let rep = Identity::MenonClassic { n }.evaluate(&l).unwrap();
        assert!(rep.matched);
        assert_eq!(
            rep.rhs,
            Rational::from(euler_phi(n).unwrap() * tau(n).unwrap())
        );
    }
}
