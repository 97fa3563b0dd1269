use crate::arith::gcd;
use crate::error::{Error, Result};

/// Result of solving `x = a_i (mod d_i)` simultaneously.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrtOutcome {
    NoSolution,
    /// `x = residue (mod modulus)` with `0 <= residue < modulus = lcm[d_i]`.
    Solution {
        residue: u64,
        modulus: u64,
    },
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

/// Solves a system of linear congruences.
///
/// The system is solvable iff `gcd(d_i, d_j) | a_i - a_j` for every pair; the
/// solution is then unique modulo `lcm[d_1, ..., d_r]`.
pub fn crt_solve(pairs: &[(i64, u64)]) -> Result<CrtOutcome> {
    if pairs.is_empty() {
        return Err(Error::invalid("crt_solve needs at least one congruence"));
    }
    let mut residue: i128 = 0;
    let mut modulus: i128 = 1;
    for &(a, d) in pairs {
        if d == 0 {
            return Err(Error::invalid("moduli must be positive"));
        }
        let d = d as i128;
        let a = (a as i128).rem_euclid(d);
        let g = gcd(modulus as u64, d as u64) as i128;
        if (a - residue).rem_euclid(g) != 0 {
            return Ok(CrtOutcome::NoSolution);
        }
        // residue + modulus * t = a (mod d)  =>  t = ((a - residue)/g) * inv(modulus/g) (mod d/g)
        let (_, inv, _) = ext_gcd(modulus / g, d / g);
        let step = d / g;
        let t = ((a - residue) / g).rem_euclid(step) * inv.rem_euclid(step) % step;
        let new_mod = modulus
            .checked_mul(step)
            .filter(|&m| m <= u64::MAX as i128)
            .ok_or(Error::Overflow("crt_solve"))?;
        residue = (residue + modulus * t).rem_euclid(new_mod);
        modulus = new_mod;
    }
    Ok(CrtOutcome::Solution {
        residue: residue as u64,
        modulus: modulus as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::lcm_all;

    #[test]
    fn examples() {
        assert_eq!(
            crt_solve(&[(1, 2), (2, 3)]).unwrap(),
            CrtOutcome::Solution {
                residue: 5,
                modulus: 6
            }
        );
        assert_eq!(
            crt_solve(&[(0, 2), (1, 2)]).unwrap(),
            CrtOutcome::NoSolution
        );
        assert_eq!(
            crt_solve(&[(-3, 7)]).unwrap(),
            CrtOutcome::Solution {
                residue: 4,
                modulus: 7
            }
        );
        assert_eq!(
            crt_solve(&[(3, 4), (1, 6)]).unwrap(),
            CrtOutcome::Solution {
                residue: 7,
                modulus: 12
            }
        );
        assert!(crt_solve(&[]).is_err());
        assert!(crt_solve(&[(1, 0)]).is_err());
    }

    #[test]
    fn agrees_with_brute_force() {
        for d1 in 1..=12u64 {
            for d2 in 1..=12u64 {
                for d3 in [1u64, 4, 9, 10] {
                    for a1 in -4i64..4 {
                        for a2 in -4i64..4 {
                            let a3 = a1 + a2;
                            let sys = [(a1, d1), (a2, d2), (a3, d3)];
                            let l = lcm_all(&[d1, d2, d3]).unwrap();
                            let sols: Vec<u64> = (0..l)
                                .filter(|&x| {
                                    sys.iter()
                                        .all(|&(a, d)| (x as i64 - a).rem_euclid(d as i64) == 0)
                                })
                                .collect();
                            let pairwise = sys.iter().all(|&(ai, di)| {
                                sys.iter()
                                    .all(|&(aj, dj)| (ai - aj).rem_euclid(gcd(di, dj) as i64) == 0)
                            });
                            match crt_solve(&sys).unwrap() {
                                CrtOutcome::NoSolution => {
                                    assert!(sols.is_empty());
                                    assert!(!pairwise);
                                }
                                CrtOutcome::Solution { residue, modulus } => {
                                    assert!(pairwise);
                                    assert_eq!(modulus, l);
                                    assert_eq!(sols, vec![residue]);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
