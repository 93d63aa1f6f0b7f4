//! The quotient onto `Z wr Z`, automorphisms and injective endomorphisms
//! acting on words, and a truncated homomorphism check.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::{is_trivial, GroupWord, Letter};
use crate::lattice::{EVec, GroupCtx};
use crate::madic::MarkedGroupSpec;
use crate::markedspace::b_word;
use crate::poly::{write_terms, IntPoly};

/// Laurent polynomial `sum c_j X^{offset + j}`.
///
/// Normalized: the first and last coefficients are nonzero, and the zero
/// polynomial has no coefficients and offset 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    offset: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn new(offset: i64, coeffs: Vec<BigInt>) -> Self {
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return LaurentPoly::zero();
        }
        let tail = coeffs.iter().rev().take_while(|c| c.is_zero()).count();
        let coeffs = coeffs[lead..coeffs.len() - tail].to_vec();
        LaurentPoly { offset: offset + lead as i64, coeffs }
    }

    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        LaurentPoly::new(k, vec![c.into()])
    }

    pub fn from_poly(p: &IntPoly) -> Self {
        LaurentPoly::new(0, p.coeffs().to_vec())
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        usize::try_from(k - self.offset)
            .ok()
            .and_then(|j| self.coeffs.get(j).cloned())
            .unwrap_or_default()
    }

    /// `X^k * self`
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { offset: self.offset + k, coeffs: self.coeffs.clone() }
    }

    /// Polynomial with only nonnegative exponents, if it is one.
    pub fn to_poly(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let off = usize::try_from(self.offset).ok()?;
        let mut c = vec![BigInt::zero(); off];
        c.extend(self.coeffs.iter().cloned());
        Some(IntPoly::from_coeffs(c))
    }

    fn add_ref(&self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(rhs.offset);
        let hi = (self.offset + self.coeffs.len() as i64).max(rhs.offset + rhs.coeffs.len() as i64);
        let coeffs = (lo..hi).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        LaurentPoly::new(lo, coeffs)
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_ref(rhs)
    }
}

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { offset: self.offset, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let off = self.offset;
        write_terms(f, self.coeffs.iter().enumerate().rev().map(|(j, c)| (off + j as i64, c)))
    }
}

/// Element `(P, s)` of `Z[X^{+-1}] x| Z`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WreathElem {
    pub poly: LaurentPoly,
    pub shift: i64,
}

impl WreathElem {
    pub fn identity() -> Self {
        WreathElem::default()
    }

    pub fn new(poly: LaurentPoly, shift: i64) -> Self {
        WreathElem { poly, shift }
    }

    /// `(P, s)(Q, t) = (P + X^s Q, s + t)`
    pub fn mul(&self, rhs: &WreathElem) -> WreathElem {
        WreathElem { poly: &self.poly + &rhs.poly.shift(self.shift), shift: self.shift + rhs.shift }
    }

    pub fn inverse(&self) -> WreathElem {
        WreathElem { poly: -&self.poly.shift(-self.shift), shift: -self.shift }
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.poly.is_zero()
    }
}

impl fmt::Display for WreathElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.poly, self.shift)
    }
}

/// Image of `w` under `a -> (0, 1)`, `e_0 -> (1, 0)`, `e_i -> (X P_{i-1}, 0)`.
pub fn wreath_image(ctx: &GroupCtx, w: &GroupWord) -> Result<WreathElem> {
    let mut acc = WreathElem::identity();
    for l in w.letters() {
        match l {
            Letter::A(d) => acc.shift += *d as i64,
            Letter::Base(x) => {
                let q = LaurentPoly::from_poly(&ctx.q_poly(x)?);
                acc.poly = &acc.poly + &q.shift(acc.shift);
            }
        }
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutSpec {
    /// `a -> a`, `x -> -x` on `E`.
    J,
    /// `a -> a e`, `E` fixed.
    PhiE(EVec),
    /// `a -> a`, `x -> k x` on `E`; injective, onto only for `k = +-1`.
    ThetaK(i64),
    /// `a -> a`, `b -> b^d`, on words in `a` and `b` only.
    EmbedD(u64),
}

impl AutSpec {
    pub fn validate(&self, m: u64) -> Result<()> {
        match self {
            AutSpec::ThetaK(0) => Err(Error::InvalidAutSpec("theta needs k != 0".into())),
            AutSpec::ThetaK(k) if k.unsigned_abs().gcd(&m) != 1 => {
                Err(Error::InvalidAutSpec(format!("theta needs gcd(k, m) = 1, got k={k}, m={m}")))
            }
            AutSpec::EmbedD(0) => Err(Error::InvalidAutSpec("embedding needs d >= 1".into())),
            _ => Ok(()),
        }
    }
}

/// Letterwise substitution of `spec` into `w`.
pub fn apply_automorphism(ctx: &GroupCtx, spec: &AutSpec, w: &GroupWord) -> Result<GroupWord> {
    spec.validate(ctx.m())?;
    let mut out = Vec::with_capacity(w.len());
    for l in w.letters() {
        match (spec, l) {
            (AutSpec::PhiE(e), Letter::A(1)) => {
                out.push(Letter::A(1));
                if !e.is_zero() {
                    out.push(Letter::Base(e.clone()));
                }
            }
            (AutSpec::PhiE(e), Letter::A(_)) => {
                if !e.is_zero() {
                    out.push(Letter::Base(-e));
                }
                out.push(Letter::A(-1));
            }
            (_, Letter::A(d)) => out.push(Letter::A(*d)),
            (AutSpec::J, Letter::Base(x)) => out.push(Letter::Base(-x)),
            (AutSpec::PhiE(_), Letter::Base(x)) => out.push(Letter::Base(x.clone())),
            (AutSpec::ThetaK(k), Letter::Base(x)) => out.push(Letter::Base(x.scale(&BigInt::from(*k)))),
            (AutSpec::EmbedD(d), Letter::Base(x)) => {
                if x.max_index().is_some_and(|i| i > 0) {
                    return Err(Error::InvalidAutSpec("the b^d embedding acts on words in a and b only".into()));
                }
                out.push(Letter::Base(x.scale(&BigInt::from(*d))));
            }
        }
    }
    Ok(GroupWord::from_letters(out))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCheck {
    pub passed: bool,
    /// Index `i` of the first relator `[b, b_i]` whose image is nontrivial.
    pub failing_index: Option<usize>,
    pub depth: usize,
}

fn substitute(w: &GroupWord, img_a: &GroupWord, img_b: &GroupWord) -> Result<GroupWord> {
    let (inv_a, inv_b) = (img_a.inverse(), img_b.inverse());
    let mut out = GroupWord::empty();
    for l in w.letters() {
        match l {
            Letter::A(1) => out.extend(img_a),
            Letter::A(_) => out.extend(&inv_a),
            Letter::Base(x) => {
                if x.max_index().is_some_and(|i| i > 0) {
                    return Err(Error::PreconditionViolated("relator outside a, b".into()));
                }
                let k = x.coeff(0);
                let n = k.abs().to_usize().ok_or(Error::PreconditionViolated("exponent too large".into()))?;
                let piece = if k.is_negative() { &inv_b } else { img_b };
                for _ in 0..n {
                    out.extend(piece);
                }
            }
        }
    }
    Ok(out)
}

/// Sends `a`, `b` of `src` to the given words of `dst` and tests the
/// relators `[b, b_i]` for `i = 1..=depth`. Passing is evidence only: the
/// presentation is infinite.
pub fn hom_check(
    src: &MarkedGroupSpec,
    dst: &MarkedGroupSpec,
    image_of_a: &GroupWord,
    image_of_b: &GroupWord,
    depth: usize,
) -> Result<HomCheck> {
    if depth == 0 {
        return Err(Error::PreconditionViolated("depth must be at least 1".into()));
    }
    let (cs, cd) = (GroupCtx::new(src.clone()), GroupCtx::new(dst.clone()));
    let b = GroupWord::base(EVec::basis(0, BigInt::one()));
    for i in 1..=depth {
        let rel = GroupWord::commutator(&b, &b_word(&cs, i)?);
        if !is_trivial(&cd, &substitute(&rel, image_of_a, image_of_b)?)? {
            return Ok(HomCheck { passed: false, failing_index: Some(i), depth });
        }
    }
    Ok(HomCheck { passed: true, failing_index: None, depth })
}

/// `Z wr Z` as the limit group with `m = 1`.
pub fn lamplighter_spec() -> MarkedGroupSpec {
    MarkedGroupSpec::new(1, crate::madic::XiSpec::int(0)).expect("m = 1 is valid")
}
