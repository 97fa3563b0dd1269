//! Arithmetic functions of one and of several variables.
//!
//! [`FuncSpec`] names the one-variable functions `f_i` that appear inside the
//! gcd sums. [`MultiFunc`] is an arbitrary exact-valued function of `r`
//! variables, with the `r`-fold Dirichlet convolution and an exhaustive
//! multiplicativity check.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use crate::arith::{self, gcd};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A one-variable arithmetic function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FuncSpec {
    /// `n -> n^t`; `IdPow(1)` is the identity.
    IdPow(u32),
    /// The constant function 1.
    ConstOne,
    EulerPhi,
    /// Number of divisors.
    Tau,
    /// `sigma_k(n) = sum_{d | n} d^k`.
    Sigma(u32),
    /// Explicit values `f(1), ..., f(bound)`.
    Table(Arc<Vec<Rational>>),
}

impl FuncSpec {
    pub fn id() -> Self {
        FuncSpec::IdPow(1)
    }

    /// Table-backed function defined on `1..=values.len()`.
    pub fn table(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::invalid("table function needs at least f(1)"));
        }
        Ok(FuncSpec::Table(Arc::new(values)))
    }

    /// Reads a table file of whitespace-separated `n value` lines.
    ///
    /// The indices must cover exactly `1..=bound` (in any order); values are
    /// integers or `p/q`. Blank lines and `#` comments are ignored.
    pub fn load_table(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse_table(&text)
    }

    pub fn parse_table(text: &str) -> Result<Self> {
        let mut entries: Vec<(u64, Rational)> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let (Some(n), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(Error::invalid(format!(
                    "table line {}: expected `n value`",
                    lineno + 1
                )));
            };
            let n: u64 = n.parse().ok().filter(|&n| n >= 1).ok_or_else(|| {
                Error::invalid(format!("table line {}: bad index {n:?}", lineno + 1))
            })?;
            let v: Rational = v.parse()?;
            entries.push((n, v));
        }
        entries.sort_by_key(|&(n, _)| n);
        for (i, &(n, _)) in entries.iter().enumerate() {
            if n != i as u64 + 1 {
                return Err(Error::invalid(format!(
                    "table indices must cover 1..=bound exactly; problem at {n}"
                )));
            }
        }
        Self::table(entries.into_iter().map(|(_, v)| v).collect())
    }

    /// Evaluates `f(n)`.
    pub fn eval(&self, n: u64) -> Result<Rational> {
        if n == 0 {
            return Err(Error::invalid("arithmetic functions are defined on n >= 1"));
        }
        Ok(match self {
            FuncSpec::IdPow(t) => {
                Rational::from_int((n as i128).checked_pow(*t).ok_or(Error::Overflow("id^t"))?)
            }
            FuncSpec::ConstOne => Rational::ONE,
            FuncSpec::EulerPhi => Rational::from(arith::euler_phi(n)?),
            FuncSpec::Tau => Rational::from(arith::tau(n)?),
            FuncSpec::Sigma(k) => Rational::from_int(arith::sigma(*k, n)?),
            FuncSpec::Table(values) => *values.get((n - 1) as usize).ok_or(Error::TableBound {
                n,
                bound: values.len() as u64,
            })?,
        })
    }

    /// `(mu * f)(d) = sum_{e | d} mu(d / e) f(e)`.
    pub fn mu_star(&self, d: u64) -> Result<Rational> {
        let mut acc = Rational::ZERO;
        for e in arith::divisors(d)? {
            let mu = arith::mobius(d / e)?;
            if mu == 0 {
                continue;
            }
            let term = self.eval(e)?.checked_mul_int(mu as i128)?;
            acc = acc.checked_add(&term)?;
        }
        Ok(acc)
    }

    /// Whether the function is multiplicative by construction.
    pub fn is_multiplicative(&self) -> bool {
        !matches!(self, FuncSpec::Table(_))
    }
}

pub fn eval_func(f: &FuncSpec, n: u64) -> Result<Rational> {
    f.eval(n)
}

pub fn mu_star(f: &FuncSpec, d: u64) -> Result<Rational> {
    f.mu_star(d)
}

impl fmt::Display for FuncSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FuncSpec::IdPow(1) => write!(f, "id"),
            FuncSpec::IdPow(t) => write!(f, "id^{t}"),
            FuncSpec::ConstOne => write!(f, "one"),
            FuncSpec::EulerPhi => write!(f, "phi"),
            FuncSpec::Tau => write!(f, "tau"),
            FuncSpec::Sigma(k) => write!(f, "sigma_{k}"),
            FuncSpec::Table(v) => write!(f, "table[1..={}]", v.len()),
        }
    }
}

/// Parses the text form `id`, `id^t`, `one`, `phi`, `tau`, `sigma_k` or `table:<path>`.
impl FromStr for FuncSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::invalid(format!("unknown function {s:?}"));
        if let Some(path) = s.strip_prefix("table:") {
            return FuncSpec::load_table(Path::new(path));
        }
        match s {
            "id" => return Ok(FuncSpec::IdPow(1)),
            "one" | "1" => return Ok(FuncSpec::ConstOne),
            "phi" => return Ok(FuncSpec::EulerPhi),
            "tau" => return Ok(FuncSpec::Tau),
            _ => {}
        }
        if let Some(t) = s.strip_prefix("id^") {
            return t.trim().parse().map(FuncSpec::IdPow).map_err(|_| bad());
        }
        if let Some(k) = s.strip_prefix("sigma_") {
            return k.trim().parse().map(FuncSpec::Sigma).map_err(|_| bad());
        }
        if s == "sigma" {
            return Ok(FuncSpec::Sigma(1));
        }
        Err(bad())
    }
}

type Evaluator = dyn Fn(&[u64]) -> Result<Rational> + Send + Sync;

/// An exact-valued arithmetic function of `arity` variables.
#[derive(Clone)]
pub struct MultiFunc {
    arity: usize,
    eval: Arc<Evaluator>,
}

impl fmt::Debug for MultiFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultiFunc")
            .field("arity", &self.arity)
            .finish()
    }
}

impl MultiFunc {
    pub fn new<F>(arity: usize, eval: F) -> Self
    where
        F: Fn(&[u64]) -> Result<Rational> + Send + Sync + 'static,
    {
        assert!(arity >= 1, "a MultiFunc needs at least one variable");
        MultiFunc {
            arity,
            eval: Arc::new(eval),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn eval(&self, args: &[u64]) -> Result<Rational> {
        if args.len() != self.arity {
            return Err(Error::Arity {
                expected: self.arity,
                got: args.len(),
            });
        }
        if args.contains(&0) {
            return Err(Error::invalid("arguments must be positive"));
        }
        (self.eval)(args)
    }

    /// The convolution identity: 1 at `(1, ..., 1)`, 0 elsewhere.
    pub fn epsilon(arity: usize) -> Self {
        MultiFunc::new(arity, |m| {
            Ok(if m.iter().all(|&x| x == 1) {
                Rational::ONE
            } else {
                Rational::ZERO
            })
        })
    }

    /// `(m_1, ..., m_r) -> f_1(m_1) ... f_r(m_r)`.
    pub fn product_of(funcs: Vec<FuncSpec>) -> Self {
        let arity = funcs.len();
        MultiFunc::new(arity, move |m| {
            Rational::try_product(funcs.iter().zip(m).map(|(f, &x)| f.eval(x)))
        })
    }

    /// `(m_1, ..., m_r) -> h(gcd(m_1, ..., m_r))`.
    pub fn of_gcd(arity: usize, h: FuncSpec) -> Self {
        MultiFunc::new(arity, move |m| h.eval(arith::gcd_all(m)))
    }

    /// `(m_1, ..., m_r) -> h(lcm[m_1, ..., m_r])`.
    pub fn of_lcm(arity: usize, h: FuncSpec) -> Self {
        MultiFunc::new(arity, move |m| h.eval(arith::lcm_all(m)?))
    }
}

/// `(f * g)(m) = sum_{d_i | m_i} f(d) g(m / d)`.
pub fn convolve(f: &MultiFunc, g: &MultiFunc) -> Result<MultiFunc> {
    if f.arity != g.arity {
        return Err(Error::Arity {
            expected: f.arity,
            got: g.arity,
        });
    }
    let (f, g) = (f.clone(), g.clone());
    Ok(MultiFunc::new(f.arity, move |m| {
        let divs = m
            .iter()
            .map(|&x| arith::divisors(x))
            .collect::<Result<Vec<_>>>()?;
        let mut acc = Rational::ZERO;
        let mut d = vec![0u64; m.len()];
        let mut q = vec![0u64; m.len()];
        for_each_index(&divs, |idx| {
            for (i, &j) in idx.iter().enumerate() {
                d[i] = divs[i][j];
                q[i] = m[i] / d[i];
            }
            let term = f.eval(&d)?.checked_mul(&g.eval(&q)?)?;
            acc = acc.checked_add(&term)?;
            Ok(())
        })?;
        Ok(acc)
    }))
}

/// Calls `visit` with every index tuple of the cartesian product of `lists`.
pub(crate) fn for_each_index<T>(
    lists: &[Vec<T>],
    mut visit: impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if lists.iter().any(|l| l.is_empty()) {
        return Ok(());
    }
    let mut idx = vec![0usize; lists.len()];
    loop {
        visit(&idx)?;
        let mut pos = lists.len();
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < lists[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// A failed multiplicativity check: `f(m n) != f(m) f(n)` for coprime tuples `m`, `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub m: Vec<u64>,
    pub n: Vec<u64>,
    pub f_m: Rational,
    pub f_n: Rational,
    pub f_mn: Rational,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "f({:?})={} f({:?})={} but f(product)={}",
            self.m, self.f_m, self.n, self.f_n, self.f_mn
        )
    }
}

/// Exhaustively checks `f(m n) = f(m) f(n)` over all pairs of tuples with
/// components in `1..=bound` whose component products are coprime.
///
/// Returns every violation found; an empty list means the check passed.
/// Evaluation errors are propagated.
pub fn check_multiplicative(f: &MultiFunc, bound: u64) -> Result<Vec<Counterexample>> {
    let r = f.arity();
    let axis: Vec<u64> = (1..=bound).collect();
    let lists = vec![axis; r];
    let mut tuples: Vec<(Vec<u64>, u64, Rational)> = Vec::new();
    for_each_index(&lists, |idx| {
        let t: Vec<u64> = idx.iter().map(|&i| i as u64 + 1).collect();
        let prod = t.iter().product::<u64>();
        let v = f.eval(&t)?;
        tuples.push((t, prod, v));
        Ok(())
    })?;
    let mut out = Vec::new();
    for (m, pm, fm) in &tuples {
        for (n, pn, fn_) in &tuples {
            if gcd(*pm, *pn) != 1 {
                continue;
            }
            let mn: Vec<u64> = m.iter().zip(n).map(|(a, b)| a * b).collect();
            let f_mn = f.eval(&mn)?;
            if f_mn != fm.checked_mul(fn_)? {
                out.push(Counterexample {
                    m: m.clone(),
                    n: n.clone(),
                    f_m: *fm,
                    f_n: *fn_,
                    f_mn,
                });
            }
        }
    }
    Ok(out)
}
