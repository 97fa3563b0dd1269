use std::collections::BTreeSet;

use crate::arith::{factorize, gcd};
use crate::congruence::poly::PolySystem;
use crate::error::{Error, Result};
use crate::Limits;

/// One prime-power block of a modulus tuple: the prime and its exponent in each `d_i`.
struct Block {
    exps: Vec<u32>,
    powers: Vec<u64>,
    span: u64,
}

fn blocks(system: &PolySystem, moduli: &[u64], limits: &Limits) -> Result<Vec<Block>> {
    if system.len() != moduli.len() {
        return Err(Error::Arity {
            expected: system.len(),
            got: moduli.len(),
        });
    }
    let facts = moduli
        .iter()
        .map(|&d| factorize(d))
        .collect::<Result<Vec<_>>>()?;
    let primes: BTreeSet<u64> = facts.iter().flat_map(|f| f.primes()).collect();
    let mut out = Vec::with_capacity(primes.len());
    let mut work: u128 = 0;
    for p in primes {
        let exps: Vec<u32> = facts.iter().map(|f| f.exponent(p)).collect();
        let powers: Vec<u64> = exps.iter().map(|&e| p.pow(e)).collect();
        let span = *powers.iter().max().expect("nonempty system");
        work += span as u128;
        out.push(Block { exps, powers, span });
    }
    Limits::check("congruence count", work, limits.residues)?;
    Ok(out)
}

fn count(system: &PolySystem, moduli: &[u64], coprime: bool, limits: &Limits) -> Result<u64> {
    let mut total: u64 = 1;
    for block in blocks(system, moduli, limits)? {
        let mut hits = 0u64;
        for x in 0..block.span {
            // every block has span > 1, so coprimality to the block means x is a unit mod span
            if coprime && gcd(x, block.span) != 1 {
                continue;
            }
            let ok = system
                .polys()
                .iter()
                .zip(&block.powers)
                .zip(&block.exps)
                .all(|((g, &q), &e)| e == 0 || g.eval_mod(x, q) == 0);
            if ok {
                hits += 1;
            }
        }
        if hits == 0 {
            return Ok(0);
        }
        total = total
            .checked_mul(hits)
            .ok_or(Error::Overflow("congruence count"))?;
    }
    Ok(total)
}

/// `N_G(d_1, ..., d_r)`: residues `x mod lcm[d]` with `g_i(x) = 0 (mod d_i)` for all `i`.
///
/// Splits the moduli into prime-power blocks, brute-forces each block and
/// multiplies the block counts.
pub fn count_solutions(system: &PolySystem, moduli: &[u64], limits: &Limits) -> Result<u64> {
    count(system, moduli, false, limits)
}

/// `eta_G(d_1, ..., d_r)`: as [`count_solutions`], restricted to `x` coprime to every `d_i`.
pub fn count_coprime_solutions(
    system: &PolySystem,
    moduli: &[u64],
    limits: &Limits,
) -> Result<u64> {
    count(system, moduli, true, limits)
}
