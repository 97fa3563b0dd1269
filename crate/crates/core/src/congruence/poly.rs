//! Integer polynomials in one variable and their text form.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*'? unary)*        implicit product before `x` or `(`
//! unary   := ('+' | '-') unary | power
//! power   := primary ('^' integer)?
//! primary := integer | 'x' | '(' expr ')'
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = 16;
/// Coefficients must satisfy `|c| < COEFF_CAP`.
pub const COEFF_CAP: i64 = 1 << 31;

/// `c_0 + c_1 x + ... + c_d x^d`, stored ascending with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Result<Self> {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.len() > MAX_DEGREE + 1 {
            return Err(Error::invalid(format!(
                "degree {} exceeds the cap of {MAX_DEGREE}",
                coeffs.len() - 1
            )));
        }
        if let Some(c) = coeffs.iter().find(|c| c.unsigned_abs() >= COEFF_CAP as u64) {
            return Err(Error::invalid(format!(
                "coefficient {c} exceeds 2^31 in size"
            )));
        }
        Ok(IntPoly { coeffs })
    }

    /// `x - a`.
    pub fn linear_shift(a: i64) -> Result<Self> {
        IntPoly::new(vec![-a, 1])
    }

    pub fn monomial(j: usize) -> Result<Self> {
        let mut c = vec![0; j + 1];
        c[j] = 1;
        IntPoly::new(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `g(x) mod n` in `[0, n)`, by Horner's scheme with reduction at every step.
    pub fn eval_mod(&self, x: u64, n: u64) -> u64 {
        debug_assert!(n >= 1);
        let n = n as i128;
        let x = x as i128 % n;
        let mut acc: i128 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = (acc * x + c as i128).rem_euclid(n);
        }
        acc as u64
    }

    /// Exact value `g(x)`, or `None` on 128-bit overflow.
    pub fn eval(&self, x: i128) -> Option<i128> {
        self.coeffs
            .iter()
            .rev()
            .try_fold(0i128, |acc, &c| acc.checked_mul(x)?.checked_add(c as i128))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            write!(f, "{sign}")?;
            match (deg, mag) {
                (0, _) => write!(f, "{mag}")?,
                (_, 1) => {}
                _ => write!(f, "{mag}*")?,
            }
            match deg {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{deg}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

pub fn parse_poly(text: &str) -> Result<IntPoly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.error("empty polynomial"));
    }
    let value = p.expr()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected character {:?}", c as char)));
    }
    let coeffs = value
        .iter()
        .map(|&c| {
            if c.unsigned_abs() >= COEFF_CAP as u128 {
                Err(Error::Parse {
                    pos: 0,
                    msg: format!("coefficient {c} exceeds 2^31 in size"),
                })
            } else {
                Ok(c as i64)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    IntPoly::new(coeffs)
}

// Intermediate values are wider than the final coefficient cap.
type Dense = Vec<i128>;

const WIDE_CAP: i128 = 1 << 100;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Dense> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.add(&acc, &t, 1)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.add(&acc, &t, -1)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Dense> {
        let mut acc = self.unary()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.unary()?;
                    acc = self.mul(&acc, &f)?;
                }
                Some(b'x') | Some(b'(') => {
                    let f = self.unary()?;
                    acc = self.mul(&acc, &f)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Dense> {
        self.skip_ws();
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let v = self.unary()?;
                Ok(v.into_iter().map(|c| -c).collect())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Dense> {
        let base = self.primary()?;
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let e = self.integer()?;
        if e > MAX_DEGREE as u128 {
            return Err(Error::Parse {
                pos: start,
                msg: format!("exponent {e} exceeds the cap of {MAX_DEGREE}"),
            });
        }
        let mut acc: Dense = vec![1];
        for _ in 0..e {
            acc = self.mul(&acc, &base)?;
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<Dense> {
        self.skip_ws();
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(vec![0, 1])
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(vec![v as i128])
            }
            Some(c) => Err(self.error(format!("unexpected character {:?}", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<u128> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits
            .parse::<u128>()
            .ok()
            .filter(|&v| v < WIDE_CAP as u128)
            .ok_or(Error::Parse {
                pos: start,
                msg: format!("integer {digits} is too large"),
            })
    }

    fn add(&self, a: &Dense, b: &Dense, sign: i128) -> Result<Dense> {
        let n = a.len().max(b.len());
        (0..n)
            .map(|i| {
                let v = a.get(i).copied().unwrap_or(0) + sign * b.get(i).copied().unwrap_or(0);
                self.capped(v)
            })
            .collect()
    }

    fn mul(&self, a: &Dense, b: &Dense) -> Result<Dense> {
        let degree = trimmed_len(a) + trimmed_len(b);
        if degree > MAX_DEGREE + 2 {
            return Err(self.error(format!("degree exceeds the cap of {MAX_DEGREE}")));
        }
        let mut out = vec![0i128; a.len() + b.len()];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                let prod = x
                    .checked_mul(y)
                    .ok_or_else(|| self.error("coefficient overflow"))?;
                out[i + j] = self.capped(out[i + j] + prod)?;
            }
        }
        Ok(out)
    }

    fn capped(&self, v: i128) -> Result<i128> {
        if v.abs() >= WIDE_CAP {
            Err(self.error("coefficient overflow"))
        } else {
            Ok(v)
        }
    }
}

fn trimmed_len(v: &Dense) -> usize {
    v.iter().rposition(|&c| c != 0).map_or(0, |i| i + 1)
}

/// A system `G = (g_1, ..., g_r)` with `r >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolySystem {
    polys: Vec<IntPoly>,
}

impl PolySystem {
    pub fn new(polys: Vec<IntPoly>) -> Result<Self> {
        if polys.is_empty() {
            return Err(Error::invalid(
                "a polynomial system needs at least one polynomial",
            ));
        }
        Ok(PolySystem { polys })
    }

    /// `(x - a_1, ..., x - a_r)`.
    pub fn linear(shifts: &[i64]) -> Result<Self> {
        PolySystem::new(
            shifts
                .iter()
                .map(|&a| IntPoly::linear_shift(a))
                .collect::<Result<_>>()?,
        )
    }

    /// `r` copies of the same polynomial.
    pub fn repeated(g: IntPoly, r: usize) -> Result<Self> {
        PolySystem::new(vec![g; r])
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }
}

impl fmt::Display for PolySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.polys.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Comma-separated list of polynomials.
impl FromStr for PolySystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PolySystem::new(s.split(',').map(parse_poly).collect::<Result<_>>()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse_poly("x-1").unwrap().coeffs(), &[-1, 1]);
        assert_eq!(parse_poly("x^2-1").unwrap().coeffs(), &[-1, 0, 1]);
        assert_eq!(
            parse_poly("x^6-1").unwrap().coeffs(),
            &[-1, 0, 0, 0, 0, 0, 1]
        );
        assert_eq!(parse_poly(" 3 * x - 5 ").unwrap().coeffs(), &[-5, 3]);
        assert_eq!(parse_poly("x").unwrap().coeffs(), &[0, 1]);
        assert_eq!(parse_poly("2x+3").unwrap().coeffs(), &[3, 2]);
        assert_eq!(parse_poly("(x+1)^2").unwrap().coeffs(), &[1, 2, 1]);
        assert_eq!(parse_poly("-x^2").unwrap().coeffs(), &[0, 0, -1]);
        assert_eq!(parse_poly("x-x").unwrap().coeffs(), &[] as &[i64]);
        assert_eq!(parse_poly("2^3*x").unwrap().coeffs(), &[0, 8]);
        assert_eq!(parse_poly("x^0").unwrap().coeffs(), &[1]);
    }

    #[test]
    fn parse_errors_carry_position() {
        assert_eq!(
            parse_poly("x^17"),
            Err(Error::Parse {
                pos: 2,
                msg: "exponent 17 exceeds the cap of 16".into()
            })
        );
        match parse_poly("x+*2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
        match parse_poly("x^2 y") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_poly("").is_err());
        assert!(parse_poly("(x+1").is_err());
        assert!(parse_poly("x^").is_err());
        assert!(parse_poly("(x^4)^5").is_err());
        assert!(parse_poly("4294967296*x").is_err());
    }

    #[test]
    fn printing() {
        assert_eq!(parse_poly("x^2-1").unwrap().to_string(), "x^2-1");
        assert_eq!(parse_poly("-5+3x").unwrap().to_string(), "3*x-5");
        assert_eq!(parse_poly("-x^3 + 2 x").unwrap().to_string(), "-x^3+2*x");
        assert_eq!(parse_poly("0").unwrap().to_string(), "0");
        assert_eq!(parse_poly("7").unwrap().to_string(), "7");
    }

    #[test]
    fn eval_mod_matches_exact_eval() {
        let g = parse_poly("3x^3 - 7x + 11").unwrap();
        for n in 1..40u64 {
            for x in 0..60u64 {
                let exact = g.eval(x as i128).unwrap();
                assert_eq!(g.eval_mod(x, n) as i128, exact.rem_euclid(n as i128));
            }
        }
    }

    #[test]
    fn eval_mod_large_modulus() {
        let g = IntPoly::new(vec![-(COEFF_CAP - 1); MAX_DEGREE + 1]).unwrap();
        let n = (1u64 << 62) + 7;
        let v = g.eval_mod(n - 1, n);
        assert!(v < n);
    }

    #[test]
    fn system_text() {
        let s: PolySystem = "x, x-1 ,x^2+1".parse().unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_string(), "x,x-1,x^2+1");
        assert!(PolySystem::new(vec![]).is_err());
    }

    proptest! {
        #[test]
        fn print_parse_idempotent(coeffs in proptest::collection::vec(-1000i64..1000, 0..8)) {
            let p = IntPoly::new(coeffs).unwrap();
            let printed = p.to_string();
            let q = parse_poly(&printed).unwrap();
            prop_assert_eq!(&q, &p);
            prop_assert_eq!(q.to_string(), printed);
        }
    }
}
