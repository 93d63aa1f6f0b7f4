//! The base group `E`, free abelian on `e_0, e_1, ...`, with its two
//! distinguished subgroups and the stable-letter isomorphism between them.
//!
//! `E_1` is spanned by `e_1, e_2, ...`. `E_{m,xi}` is the index-`|m|`
//! subgroup cut out by `b_0 + sum b_i r_i = 0 (mod |m|)`. Conjugation by `a`
//! maps `E_{m,xi}` onto `E_1` via `m e_0 -> e_1` and
//! `e_i - r_i e_0 -> e_{i+1}`.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::madic::{p_polys_from_digits, MarkedGroupSpec, RDigitStream};
use crate::poly::IntPoly;

/// Finitely supported integer vector over `e_0, e_1, ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EVec {
    entries: BTreeMap<usize, BigInt>,
}

impl EVec {
    pub fn zero() -> Self {
        EVec::default()
    }

    /// `k * e_i`
    pub fn basis(i: usize, k: impl Into<BigInt>) -> Self {
        let mut v = EVec::zero();
        v.add_at(i, &k.into());
        v
    }

    pub fn from_pairs<K: Into<BigInt>>(pairs: impl IntoIterator<Item = (usize, K)>) -> Self {
        let mut v = EVec::zero();
        for (i, k) in pairs {
            v.add_at(i, &k.into());
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.entries.get(&i).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, i: usize) -> Option<&BigInt> {
        self.entries.get(&i)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, usize, BigInt> {
        self.entries.iter()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn add_at(&mut self, i: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        match self.entries.entry(i) {
            btree_map::Entry::Vacant(slot) => {
                slot.insert(k.clone());
            }
            btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += k;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &BigInt) -> EVec {
        if k.is_zero() {
            return EVec::zero();
        }
        EVec { entries: self.entries.iter().map(|(&i, c)| (i, c * k)).collect() }
    }

    /// Splits off the `e_0` coefficient.
    pub fn without_e0(&self) -> EVec {
        let mut v = self.clone();
        v.entries.remove(&0);
        v
    }
}

impl AddAssign<&EVec> for EVec {
    fn add_assign(&mut self, rhs: &EVec) {
        for (&i, k) in &rhs.entries {
            self.add_at(i, k);
        }
    }
}

impl SubAssign<&EVec> for EVec {
    fn sub_assign(&mut self, rhs: &EVec) {
        for (&i, k) in &rhs.entries {
            self.add_at(i, &-k);
        }
    }
}

impl Add for &EVec {
    type Output = EVec;
    fn add(self, rhs: &EVec) -> EVec {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &EVec {
    type Output = EVec;
    fn sub(self, rhs: &EVec) -> EVec {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &EVec {
    type Output = EVec;
    fn neg(self) -> EVec {
        EVec { entries: self.entries.iter().map(|(&i, c)| (i, -c)).collect() }
    }
}

impl Neg for EVec {
    type Output = EVec;
    fn neg(mut self) -> EVec {
        for c in self.entries.values_mut() {
            *c = -&*c;
        }
        self
    }
}

impl fmt::Display for EVec {
    /// `e0^2 e3^-1`; the zero vector prints as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (i, k)) in self.entries.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            if k.is_one() {
                write!(f, "e{i}")?;
            } else {
                write!(f, "e{i}^{k}")?;
            }
        }
        Ok(())
    }
}

/// Parses one `e<i>^<k>` token starting at byte `offset` of the input.
pub(crate) fn parse_e_token(tok: &str, offset: usize) -> Result<(usize, BigInt)> {
    let body = tok
        .strip_prefix('e')
        .ok_or_else(|| Error::parse(offset, format!("expected e<i>^<k>, found {tok:?}")))?;
    let (idx, exp) = match body.split_once('^') {
        Some((i, k)) => (i, Some(k)),
        None => (body, None),
    };
    if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(offset + 1, format!("bad basis index in {tok:?}")));
    }
    let i = idx.parse::<usize>().map_err(|_| Error::parse(offset + 1, "basis index too large"))?;
    let k = match exp {
        None => BigInt::one(),
        Some(k) => {
            let at = offset + 2 + idx.len();
            let digits = k.strip_prefix('-').unwrap_or(k);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(at, format!("bad exponent in {tok:?}")));
            }
            let k: BigInt = k.parse().map_err(|_| Error::parse(at, "bad exponent"))?;
            if k.is_zero() {
                return Err(Error::parse(at, "exponent must be nonzero"));
            }
            k
        }
    };
    Ok((i, k))
}

/// Whitespace-separated tokens with their byte offsets.
pub(crate) fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_ascii_whitespace()
        .map(move |t| (t.as_ptr() as usize - text.as_ptr() as usize, t))
}

impl FromStr for EVec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut v = EVec::zero();
        for (offset, tok) in tokens(s) {
            let (i, k) = parse_e_token(tok, offset)?;
            v.add_at(i, &k);
        }
        Ok(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subgroup {
    /// Vectors with zero `e_0` coefficient.
    E1,
    /// Kernel of `b_0 + sum b_i r_i (mod |m|)`.
    EmXi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `x -> a^-1 x a`, defined on `E_1`.
    Down,
    /// `x -> a x a^-1`, defined on `E_{m,xi}`.
    Up,
}

/// Number of up-shifts available, or the cap if it was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mu {
    Finite(usize),
    CapReached,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixedInterval {
    pub mu: Mu,
    pub nu: usize,
}

pub const DEFAULT_MU_CAP: usize = 64;

/// Group data for one marked limit group: the spec plus its memoized digits.
#[derive(Debug)]
pub struct GroupCtx {
    digits: RDigitStream,
}

impl GroupCtx {
    pub fn new(spec: MarkedGroupSpec) -> Self {
        GroupCtx { digits: RDigitStream::new(spec) }
    }

    pub fn with_budget(spec: MarkedGroupSpec, budget: Option<usize>) -> Self {
        GroupCtx { digits: RDigitStream::with_budget(spec, budget) }
    }

    pub fn spec(&self) -> &MarkedGroupSpec {
        self.digits.spec()
    }

    /// `|m|`
    pub fn m(&self) -> u64 {
        self.spec().m()
    }

    pub fn digits(&self, n: usize) -> Result<Arc<Vec<u64>>> {
        self.digits.prefix(n)
    }

    /// `b_0 + sum_{i>=1} b_i r_i` (not reduced).
    pub fn em_xi_value(&self, x: &EVec) -> Result<BigInt> {
        let n = x.max_index().unwrap_or(0);
        let r = self.digits(n)?;
        let mut total = BigInt::zero();
        for (&i, k) in x.iter() {
            if i == 0 {
                total += k;
            } else if r[i - 1] != 0 {
                total += k * r[i - 1];
            }
        }
        Ok(total)
    }

    pub fn contains(&self, which: Subgroup, x: &EVec) -> Result<bool> {
        match which {
            Subgroup::E1 => Ok(x.coeff_ref(0).is_none()),
            Subgroup::EmXi => Ok(self.em_xi_value(x)?.is_multiple_of(&BigInt::from(self.m()))),
        }
    }

    /// `a x a^-1` when `x` lies in `E_{m,xi}`.
    pub fn try_up(&self, x: &EVec) -> Result<Option<EVec>> {
        let (k0, rem) = self.em_xi_value(x)?.div_rem(&BigInt::from(self.m()));
        if !rem.is_zero() {
            return Ok(None);
        }
        let mut out = EVec::basis(1, k0);
        for (&i, k) in x.iter() {
            if i >= 1 {
                out.add_at(i + 1, k);
            }
        }
        Ok(Some(out))
    }

    /// `a^-1 x a` when `x` lies in `E_1`.
    pub fn try_down(&self, x: &EVec) -> Result<Option<EVec>> {
        if x.coeff_ref(0).is_some() {
            return Ok(None);
        }
        let n = x.max_index().unwrap_or(0);
        let r = self.digits(n.saturating_sub(1))?;
        let mut c0 = BigInt::zero();
        let mut out = EVec::zero();
        for (&i, k) in x.iter() {
            if i == 1 {
                c0 += k * self.m();
            } else {
                if r[i - 2] != 0 {
                    c0 -= k * r[i - 2];
                }
                out.add_at(i - 1, k);
            }
        }
        out.add_at(0, &c0);
        Ok(Some(out))
    }

    pub fn phi_apply(&self, x: &EVec, direction: Direction) -> Result<EVec> {
        let y = match direction {
            Direction::Up => self.try_up(x)?,
            Direction::Down => self.try_down(x)?,
        };
        y.ok_or(Error::PinchDomainViolation)
    }

    /// `a^n x a^-n`, if every intermediate step stays in the required subgroup.
    pub fn a_conjugate(&self, x: &EVec, n: i64) -> Result<Option<EVec>> {
        let mut cur = x.clone();
        for _ in 0..n.unsigned_abs() {
            let next = if n > 0 { self.try_up(&cur)? } else { self.try_down(&cur)? };
            match next {
                Some(v) => cur = v,
                None => return Ok(None),
            }
        }
        Ok(Some(cur))
    }

    /// `q(x) = b_0 + sum_{i>=1} b_i X P_{i-1}(X)`.
    pub fn q_poly(&self, x: &EVec) -> Result<IntPoly> {
        let n = x.max_index().unwrap_or(0);
        let r = self.digits(n.saturating_sub(1))?;
        let ps = p_polys_from_digits(self.m(), &r[..n.saturating_sub(1)]);
        let mut out = IntPoly::zero();
        for (&i, k) in x.iter() {
            if i == 0 {
                out.add_scaled(&IntPoly::constant(1), k);
            } else {
                out.add_scaled(&ps[i - 1].mul_x(), k);
            }
        }
        Ok(out)
    }

    /// Consecutive up-shifts (`mu`, capped) and down-shifts (`nu`) available to `x`.
    pub fn fixed_interval(&self, x: &EVec, cap: usize) -> Result<FixedInterval> {
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        let nu = self.q_poly(x)?.x_valuation().expect("q is injective");
        let mut mu = 0;
        let mut cur = x.clone();
        while let Some(next) = self.try_up(&cur)? {
            mu += 1;
            if mu >= cap {
                return Ok(FixedInterval { mu: Mu::CapReached, nu });
            }
            cur = next;
        }
        Ok(FixedInterval { mu: Mu::Finite(mu), nu })
    }
}

/// Free-function form of [`GroupCtx::contains`].
pub fn subgroup_membership(ctx: &GroupCtx, x: &EVec, which: Subgroup) -> Result<bool> {
    ctx.contains(which, x)
}
