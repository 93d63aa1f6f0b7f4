//! m-adic parameters and their digit sequences.
//!
//! A parameter `xi` in the m-adic integers is described finitely: as an
//! integer, as a rational whose denominator is prime to `m`, or directly by
//! its digit sequence `r_1, r_2, ...`. For rational parameters the digits come
//! from the recurrence `xi * s_{i-1} = m * s_i + r_i` with `s_0 = 1` and
//! `0 <= r_i < |m|`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use parking_lot::{Mutex, RwLock};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum XiSpec {
    Int(BigInt),
    /// `p / q`; kept reduced with `q > 0` once attached to a modulus.
    Rat(BigInt, BigInt),
    RSeqFinite(Vec<u64>),
    RSeqPeriodic { preperiod: Vec<u64>, period: Vec<u64> },
}

impl XiSpec {
    pub fn int(n: i64) -> Self {
        XiSpec::Int(BigInt::from(n))
    }

    pub fn rat(p: i64, q: i64) -> Self {
        XiSpec::Rat(BigInt::from(p), BigInt::from(q))
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, XiSpec::Int(_) | XiSpec::Rat(..))
    }

    fn as_rational(&self) -> Option<BigRational> {
        match self {
            XiSpec::Int(n) => Some(BigRational::from_integer(n.clone())),
            XiSpec::Rat(p, q) => Some(BigRational::new(p.clone(), q.clone())),
            _ => None,
        }
    }

    fn negated(&self) -> Self {
        match self {
            XiSpec::Int(n) => XiSpec::Int(-n),
            XiSpec::Rat(p, q) => XiSpec::Rat(-p, q.clone()),
            other => other.clone(),
        }
    }
}

fn parse_digits(text: &str, base: usize) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    let mut offset = base;
    for part in text.split(',') {
        if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::parse(offset, format!("expected a decimal digit value, found {part:?}")));
        }
        let d = part
            .parse::<u64>()
            .map_err(|_| Error::parse(offset, "digit value out of range"))?;
        out.push(d);
        offset += part.len() + 1;
    }
    Ok(out)
}

fn parse_bigint(text: &str, offset: usize) -> Result<BigInt> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(offset, format!("expected a decimal integer, found {text:?}")));
    }
    text.parse::<BigInt>().map_err(|e| Error::parse(offset, e.to_string()))
}

impl FromStr for XiSpec {
    type Err = Error;

    /// `int:<n>`, `rat:<p>/<q>`, `rseq:<d1>,...,<dk>` or `rseq:<pre>;<period>`.
    fn from_str(s: &str) -> Result<Self> {
        if let Some(rest) = s.strip_prefix("int:") {
            return Ok(XiSpec::Int(parse_bigint(rest, 4)?));
        }
        if let Some(rest) = s.strip_prefix("rat:") {
            let (p, q) = rest
                .split_once('/')
                .ok_or_else(|| Error::parse(s.len(), "expected '/' in rational"))?;
            let p = parse_bigint(p, 4)?;
            let q = parse_bigint(q, 5 + rest.find('/').unwrap_or(0))?;
            if q.is_zero() {
                return Err(Error::InvalidSpec("zero denominator".into()));
            }
            return Ok(XiSpec::Rat(p, q));
        }
        if let Some(rest) = s.strip_prefix("rseq:") {
            return match rest.split_once(';') {
                None => Ok(XiSpec::RSeqFinite(parse_digits(rest, 5)?)),
                Some((pre, per)) => {
                    let preperiod = if pre.is_empty() { Vec::new() } else { parse_digits(pre, 5)? };
                    let period = parse_digits(per, 6 + pre.len())?;
                    Ok(XiSpec::RSeqPeriodic { preperiod, period })
                }
            };
        }
        Err(Error::parse(0, "expected one of int:, rat:, rseq:"))
    }
}

fn join(ds: &[u64]) -> String {
    ds.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for XiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XiSpec::Int(n) => write!(f, "int:{n}"),
            XiSpec::Rat(p, q) => write!(f, "rat:{p}/{q}"),
            XiSpec::RSeqFinite(d) => write!(f, "rseq:{}", join(d)),
            XiSpec::RSeqPeriodic { preperiod, period } => {
                write!(f, "rseq:{};{}", join(preperiod), join(period))
            }
        }
    }
}

/// A marked limit group, identified by `(m, xi)`.
///
/// Stored normalized as `(|m|, sign(m) * xi)`; digit sequences are taken as
/// digits of the normalized parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedGroupSpec {
    m: u64,
    negative_m: bool,
    xi: XiSpec,
}

impl MarkedGroupSpec {
    pub fn new(m: i64, xi: XiSpec) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidSpec("m must be nonzero".into()));
        }
        let abs = m.unsigned_abs();
        let xi = match xi {
            XiSpec::Rat(p, q) => {
                if q.is_zero() {
                    return Err(Error::InvalidSpec("zero denominator".into()));
                }
                if !q.gcd(&BigInt::from(abs)).is_one() {
                    return Err(Error::NonInvertibleDenominator { q: q.to_string(), m: abs });
                }
                let r = BigRational::new(p, q);
                if r.is_integer() {
                    XiSpec::Int(r.to_integer())
                } else {
                    XiSpec::Rat(r.numer().clone(), r.denom().clone())
                }
            }
            XiSpec::RSeqPeriodic { ref period, .. } if period.is_empty() => {
                return Err(Error::InvalidSpec("empty period".into()));
            }
            other => other,
        };
        if let XiSpec::RSeqFinite(ds) | XiSpec::RSeqPeriodic { preperiod: ds, .. } = &xi {
            check_digits(ds, abs)?;
        }
        if let XiSpec::RSeqPeriodic { period, .. } = &xi {
            check_digits(period, abs)?;
        }
        let xi = if m < 0 { xi.negated() } else { xi };
        Ok(MarkedGroupSpec { m: abs, negative_m: m < 0, xi })
    }

    /// `|m|`
    pub fn m(&self) -> u64 {
        self.m
    }

    /// The modulus as given on construction (sign included).
    pub fn signed_m(&self) -> i64 {
        if self.negative_m {
            -(self.m as i64)
        } else {
            self.m as i64
        }
    }

    /// The normalized parameter `sign(m) * xi`.
    pub fn xi(&self) -> &XiSpec {
        &self.xi
    }

    /// Digit sequences whose first digit is not prime to `m` are admitted
    /// without a guarantee that some parameter realizes them.
    pub fn unverified_realizability(&self) -> bool {
        match &self.xi {
            XiSpec::RSeqFinite(d) => d.first().is_some_and(|&r| r.gcd(&self.m) != 1),
            XiSpec::RSeqPeriodic { preperiod, period } => {
                let r = preperiod.first().or(period.first()).copied().unwrap_or(0);
                r.gcd(&self.m) != 1
            }
            _ => false,
        }
    }
}

fn check_digits(ds: &[u64], m: u64) -> Result<()> {
    match ds.iter().find(|&&d| d >= m) {
        Some(d) => Err(Error::InvalidSpec(format!("digit {d} outside [0, {m})"))),
        None => Ok(()),
    }
}

impl fmt::Display for MarkedGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, xi={})", self.m, self.xi)
    }
}

/// Lazily extended, memoized digit sequence of a spec.
///
/// Readers take a published snapshot; extension is serialized by a mutex
/// that also holds the rational recurrence state, so the digits behave as
/// if computed once regardless of which thread asks first.
pub struct RDigitStream {
    spec: MarkedGroupSpec,
    limit: Option<usize>,
    published: RwLock<Arc<Vec<u64>>>,
    state: Mutex<Option<BigRational>>,
}

impl RDigitStream {
    pub fn new(spec: MarkedGroupSpec) -> Self {
        Self::with_budget(spec, None)
    }

    /// A stream that refuses to produce digits past index `budget`.
    pub fn with_budget(spec: MarkedGroupSpec, budget: Option<usize>) -> Self {
        let natural = match &spec.xi {
            XiSpec::RSeqFinite(d) => Some(d.len()),
            _ => None,
        };
        let limit = match (natural, budget) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        RDigitStream {
            spec,
            limit,
            published: RwLock::new(Arc::new(Vec::new())),
            state: Mutex::new(None),
        }
    }

    pub fn spec(&self) -> &MarkedGroupSpec {
        &self.spec
    }

    pub fn limit(&self) -> Option<usize> {
        self.limit
    }

    /// Snapshot holding at least `n` digits.
    pub fn prefix(&self, n: usize) -> Result<Arc<Vec<u64>>> {
        if let Some(limit) = self.limit {
            if n > limit {
                return Err(Error::RDigitBudgetExceeded { index: limit + 1 });
            }
        }
        let snap = self.published.read().clone();
        if snap.len() >= n {
            return Ok(snap);
        }
        let mut state = self.state.lock();
        let snap = self.published.read().clone();
        if snap.len() >= n {
            return Ok(snap);
        }
        let mut digits = (*snap).clone();
        self.extend(&mut digits, &mut state, n);
        let snap = Arc::new(digits);
        *self.published.write() = snap.clone();
        Ok(snap)
    }

    /// Digit `r_i`, 1-based.
    pub fn digit(&self, i: usize) -> Result<u64> {
        assert!(i >= 1, "digits are indexed from 1");
        Ok(self.prefix(i)?[i - 1])
    }

    fn extend(&self, digits: &mut Vec<u64>, state: &mut Option<BigRational>, n: usize) {
        let m = self.spec.m;
        match &self.spec.xi {
            XiSpec::RSeqFinite(ds) => digits.extend_from_slice(&ds[digits.len()..n]),
            XiSpec::RSeqPeriodic { preperiod, period } => {
                for i in digits.len()..n {
                    let d = if i < preperiod.len() {
                        preperiod[i]
                    } else {
                        period[(i - preperiod.len()) % period.len()]
                    };
                    digits.push(d);
                }
            }
            xi => {
                if m == 1 {
                    digits.resize(n, 0);
                    return;
                }
                let xi = xi.as_rational().expect("rational kind");
                let s = state.get_or_insert_with(BigRational::one);
                while digits.len() < n {
                    let (r, next) = step(&xi, s, m);
                    digits.push(r);
                    *s = next;
                }
            }
        }
    }
}

impl fmt::Debug for RDigitStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RDigitStream")
            .field("spec", &self.spec)
            .field("limit", &self.limit)
            .field("cached", &self.published.read().len())
            .finish()
    }
}

/// One step of the recurrence: returns `(r_i, s_i)` from `s_{i-1}`.
fn step(xi: &BigRational, s: &BigRational, m: u64) -> (u64, BigRational) {
    let t = xi * s;
    let mm = BigInt::from(m);
    let inv = mod_inverse(&t.denom().mod_floor(&mm), &mm).expect("denominator prime to m");
    let r = (t.numer() * inv).mod_floor(&mm);
    let next = (t - BigRational::from_integer(r.clone())) / BigRational::from_integer(mm);
    (r.to_u64().expect("digit fits"), next)
}

pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else if m.is_one() {
        Some(BigInt::zero())
    } else {
        None
    }
}

/// `[r_1, ..., r_count]`
pub fn r_digits(spec: &MarkedGroupSpec, count: usize) -> Result<Vec<u64>> {
    let stream = RDigitStream::new(spec.clone());
    Ok(stream.prefix(count)?[..count].to_vec())
}

/// `[s_1, ..., s_count]`, available only for rational parameters.
pub fn s_values(spec: &MarkedGroupSpec, count: usize) -> Result<Vec<BigRational>> {
    let xi = spec
        .xi
        .as_rational()
        .ok_or(Error::UnsupportedSpecKind("s-values need an integer or rational parameter"))?;
    let mut s = BigRational::one();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        s = if spec.m == 1 { &xi * &s } else { step(&xi, &s, spec.m).1 };
        out.push(s.clone());
    }
    Ok(out)
}

/// `gcd(|m|, r_1)`, with `gcd(|m|, 0) = |m|`.
pub fn gcd_with_m(spec: &MarkedGroupSpec) -> Result<u64> {
    if spec.m == 1 {
        return Ok(1);
    }
    let r1 = RDigitStream::new(spec.clone()).digit(1)?;
    Ok(spec.m.gcd(&r1))
}

/// `[P_0, ..., P_h]` with `P_0 = |m|` and `P_k = X P_{k-1} - r_k`.
pub fn p_polys(spec: &MarkedGroupSpec, h: usize) -> Result<Vec<IntPoly>> {
    let digits = r_digits(spec, h)?;
    Ok(p_polys_from_digits(spec.m, &digits))
}

pub(crate) fn p_polys_from_digits(m: u64, digits: &[u64]) -> Vec<IntPoly> {
    let mut out = Vec::with_capacity(digits.len() + 1);
    let mut p = IntPoly::constant(m);
    out.push(p.clone());
    for &r in digits {
        p = &p.mul_x() - &IntPoly::constant(r);
        out.push(p.clone());
    }
    out
}

/// Divides out `d = gcd(m, xi)`: returns `(m/d, xi/d)`, the zero spec over
/// the zero ring when `d = |m|`, and the input itself when `d = 1`.
pub fn project_unit(spec: &MarkedGroupSpec) -> Result<MarkedGroupSpec> {
    let d = gcd_with_m(spec)?;
    if d == 1 {
        return Ok(spec.clone());
    }
    let m_hat = spec.m / d;
    if m_hat == 1 {
        return MarkedGroupSpec::new(1, XiSpec::int(0));
    }
    let dd = BigInt::from(d);
    let xi = match &spec.xi {
        XiSpec::Int(n) => XiSpec::Int(n / &dd),
        XiSpec::Rat(p, q) => XiSpec::Rat(p / &dd, q.clone()),
        _ => return Err(Error::UnsupportedSpecKind("projection needs an integer or rational parameter")),
    };
    MarkedGroupSpec::new(m_hat as i64, xi)
}

/// Digits of an integer parameter by plain integer recurrence.
pub(crate) fn int_digits(n: &BigInt, m: u64, count: usize) -> Vec<u64> {
    if m == 1 {
        return vec![0; count];
    }
    let mm = BigInt::from(m);
    let mut s = BigInt::one();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let (q, r) = (n * &s).div_mod_floor(&mm);
        out.push(r.to_u64().expect("digit fits"));
        s = q;
    }
    out
}

/// The unique unit residue `n mod |m|^h` whose first `h` digits are `prefix`.
///
/// Returns `(n, |m|^h)`. Found by scanning all residues coprime to `m`.
pub fn xi_from_prefix(m: i64, prefix: &[u64]) -> Result<(BigInt, BigInt)> {
    if m == 0 {
        return Err(Error::InvalidSpec("m must be nonzero".into()));
    }
    let abs = m.unsigned_abs();
    check_digits(prefix, abs)?;
    let modulus = BigInt::from(abs).pow(prefix.len() as u32);
    if let Some(&r1) = prefix.first() {
        if r1.gcd(&abs) != 1 {
            return Err(Error::NoUnitRealization);
        }
    }
    let mm = BigInt::from(abs);
    let mut n = BigInt::zero();
    while n < modulus {
        if n.gcd(&mm).is_one() && int_digits(&n, abs, prefix.len()) == prefix {
            return Ok((n, modulus));
        }
        n += 1;
    }
    Err(Error::NoUnitRealization)
}

/// Euler's totient.
pub fn euler_phi(m: u64) -> u64 {
    let mut result = m;
    let mut n = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Exact comparison of the full digit streams of two specs with equal `|m|`.
///
/// Rational pairs: equal iff they share `d = gcd(m, xi)` and either `m/d = 1`
/// or `xi/d = xi'/d` (a nonzero rational prime to `m` is nonzero in every
/// p-adic factor). Periodic pairs compare enough digits to cover both
/// preperiods and a common period.
pub fn same_digit_stream(a: &MarkedGroupSpec, b: &MarkedGroupSpec) -> Result<bool> {
    if a.m != b.m {
        return Ok(false);
    }
    if a.m == 1 {
        return Ok(true);
    }
    match (&a.xi, &b.xi) {
        (XiSpec::RSeqFinite(_), _) | (_, XiSpec::RSeqFinite(_)) => Err(Error::UndecidableSpec),
        (x, y) if x.is_rational() && y.is_rational() => {
            let d = gcd_with_m(a)?;
            if d != gcd_with_m(b)? {
                return Ok(false);
            }
            if d == a.m {
                return Ok(true);
            }
            Ok(x.as_rational() == y.as_rational())
        }
        (
            XiSpec::RSeqPeriodic { preperiod: p1, period: q1 },
            XiSpec::RSeqPeriodic { preperiod: p2, period: q2 },
        ) => {
            let n = p1.len().max(p2.len()) + q1.len().lcm(&q2.len());
            Ok(r_digits(a, n)? == r_digits(b, n)?)
        }
        _ => Err(Error::UndecidableSpec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(m: i64, xi: &str) -> MarkedGroupSpec {
        MarkedGroupSpec::new(m, xi.parse().unwrap()).unwrap()
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn digits_examples() {
        assert_eq!(r_digits(&spec(2, "int:3"), 5).unwrap(), vec![1, 1, 1, 1, 1]);
        assert_eq!(r_digits(&spec(2, "int:0"), 4).unwrap(), vec![0, 0, 0, 0]);
        assert_eq!(r_digits(&spec(3, "rat:1/2"), 3).unwrap(), vec![2, 2, 0]);
        assert_eq!(r_digits(&spec(2, "int:1"), 3).unwrap(), vec![1, 0, 0]);
        assert_eq!(r_digits(&spec(2, "int:5"), 3).unwrap(), vec![1, 0, 1]);
    }

    #[test]
    fn s_values_examples() {
        let one = BigRational::one();
        assert_eq!(s_values(&spec(2, "int:3"), 3).unwrap(), vec![one.clone(), one.clone(), one]);
        assert!(s_values(&spec(2, "int:1"), 3).unwrap().iter().all(Zero::is_zero));
        assert_eq!(s_values(&spec(3, "rat:1/2"), 3).unwrap(), vec![rat(-1, 2), rat(-3, 4), rat(-1, 8)]);
        assert_eq!(
            s_values(&spec(2, "rseq:1,1"), 1),
            Err(Error::UnsupportedSpecKind("s-values need an integer or rational parameter"))
        );
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_with_m(&spec(4, "int:6")).unwrap(), 2);
        assert_eq!(gcd_with_m(&spec(2, "int:3")).unwrap(), 1);
        assert_eq!(gcd_with_m(&spec(3, "int:0")).unwrap(), 3);
    }

    #[test]
    fn p_poly_examples() {
        let ps = p_polys(&spec(2, "int:3"), 2).unwrap();
        let shown: Vec<String> = ps.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["2", "2X - 1", "2X^2 - X - 1"]);
        let ps = p_polys(&spec(5, "int:0"), 2).unwrap();
        let shown: Vec<String> = ps.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["5", "5X", "5X^2"]);
        let shown: Vec<String> =
            p_polys(&spec(3, "rat:1/2"), 1).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["3", "3X - 2"]);
    }

    #[test]
    fn projection_examples() {
        assert_eq!(project_unit(&spec(4, "int:6")).unwrap(), spec(2, "int:3"));
        assert_eq!(project_unit(&spec(2, "int:3")).unwrap(), spec(2, "int:3"));
        assert_eq!(project_unit(&spec(4, "int:0")).unwrap(), spec(1, "int:0"));
    }

    #[test]
    fn prefix_inversion_examples() {
        assert_eq!(xi_from_prefix(2, &[1, 1]).unwrap(), (3.into(), 4.into()));
        assert_eq!(xi_from_prefix(2, &[1]).unwrap(), (1.into(), 2.into()));
        assert_eq!(xi_from_prefix(2, &[0]), Err(Error::NoUnitRealization));
    }

    #[test]
    fn negative_modulus_normalizes() {
        let a = spec(-2, "int:-3");
        assert_eq!(a.m(), 2);
        assert_eq!(a.xi(), &XiSpec::int(3));
        assert_eq!(a.signed_m(), -2);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(
            MarkedGroupSpec::new(2, XiSpec::rat(1, 2)),
            Err(Error::NonInvertibleDenominator { .. })
        ));
        assert!(MarkedGroupSpec::new(0, XiSpec::int(1)).is_err());
        assert!(MarkedGroupSpec::new(2, "rseq:1,2".parse().unwrap()).is_err());
        assert_eq!("abc".parse::<XiSpec>().unwrap_err().code(), "parse");
        assert!("rseq:1;".parse::<XiSpec>().is_err());
    }

    #[test]
    fn finite_sequences_run_out() {
        let s = spec(2, "rseq:1,0");
        assert_eq!(r_digits(&s, 2).unwrap(), vec![1, 0]);
        assert_eq!(r_digits(&s, 3), Err(Error::RDigitBudgetExceeded { index: 3 }));
        let stream = RDigitStream::with_budget(spec(2, "int:3"), Some(4));
        assert_eq!(stream.digit(5), Err(Error::RDigitBudgetExceeded { index: 5 }));
    }

    #[test]
    fn periodic_digits() {
        let s = spec(3, "rseq:2;1,0");
        assert_eq!(r_digits(&s, 6).unwrap(), vec![2, 1, 0, 1, 0, 1]);
        assert!(spec(4, "rseq:2;1").unverified_realizability());
    }

    #[test]
    fn grammar_round_trips() {
        for text in ["int:-17", "rat:3/5", "rseq:1,0,1", "rseq:2;1,0", "rseq:;1"] {
            assert_eq!(text.parse::<XiSpec>().unwrap().to_string(), text);
        }
    }

    #[test]
    fn stream_comparison() {
        assert!(same_digit_stream(&spec(2, "int:3"), &spec(2, "rat:3/1")).unwrap());
        assert!(!same_digit_stream(&spec(2, "int:1"), &spec(2, "int:3")).unwrap());
        assert!(same_digit_stream(&spec(4, "int:4"), &spec(4, "int:0")).unwrap());
        assert!(same_digit_stream(&spec(2, "rseq:1;1"), &spec(2, "rseq:;1,1")).unwrap());
        assert_eq!(same_digit_stream(&spec(2, "rseq:1"), &spec(2, "int:1")), Err(Error::UndecidableSpec));
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(12), 4);
    }
}
