//! Classical Baumslag-Solitar groups `BS(p, q) = <a, b | a b^p a^-1 = b^q>`.
//!
//! Words are held as runs `a^n` and blocks `b^k` with arbitrary-precision
//! exponents, so `b^(n^k)` costs one block rather than `n^k` letters.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::{GroupWord, Letter};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BSSpec {
    p: BigInt,
    q: BigInt,
}

impl BSSpec {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if p.is_zero() || q.is_zero() {
            return Err(Error::InvalidSpec("BS exponents must be nonzero".into()));
        }
        Ok(BSSpec { p, q })
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }
}

impl fmt::Display for BSSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BS({}, {})", self.p, self.q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Block {
    A(BigInt),
    B(BigInt),
}

/// A word over `{a, b}` in run-length form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BsWord {
    blocks: Vec<Block>,
}

impl BsWord {
    pub fn from_blocks(blocks: Vec<Block>) -> Self {
        BsWord { blocks }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Accepts words whose base letters are multiples of `e_0`.
    pub fn from_group_word(w: &GroupWord) -> Result<Self> {
        let mut blocks = Vec::with_capacity(w.len());
        for l in w.letters() {
            blocks.push(match l {
                Letter::A(d) => Block::A(BigInt::from(*d)),
                Letter::Base(x) => {
                    if x.max_index().is_some_and(|i| i > 0) {
                        return Err(Error::PreconditionViolated(
                            "classical BS words use only a and b".into(),
                        ));
                    }
                    Block::B(x.coeff(0))
                }
            });
        }
        Ok(BsWord { blocks })
    }
}

impl fmt::Display for BsWord {
    /// Compact letters for unit blocks, `a^<n>` / `b^<n>` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            let (c, cinv, k) = match b {
                Block::A(k) => ('a', 'A', k),
                Block::B(k) => ('b', 'B', k),
            };
            if k.is_one() {
                write!(f, "{c}")?;
            } else if *k == -BigInt::one() {
                write!(f, "{cinv}")?;
            } else {
                write!(f, "{c}^{k}")?;
            }
        }
        Ok(())
    }
}

/// Compact letters `a A b B`, optionally `a^<signed>` / `b^<signed>`;
/// ASCII whitespace between tokens is ignored.
pub fn parse_bs_word(text: &str) -> Result<BsWord> {
    let bytes = text.as_bytes();
    let mut blocks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let sign = match c {
            b'a' | b'b' => 1,
            b'A' | b'B' => -1,
            c if c.is_ascii_whitespace() => {
                i += 1;
                continue;
            }
            _ => return Err(Error::parse(i, format!("unexpected symbol {:?}", c as char))),
        };
        let mut k = BigInt::from(sign);
        i += 1;
        if bytes.get(i) == Some(&b'^') {
            if sign < 0 {
                return Err(Error::parse(i, "exponent only allowed after a or b"));
            }
            let start = i + 1;
            let mut end = start;
            if bytes.get(end) == Some(&b'-') {
                end += 1;
            }
            while bytes.get(end).is_some_and(u8::is_ascii_digit) {
                end += 1;
            }
            let lit = &text[start..end];
            k = lit.parse().map_err(|_| Error::parse(start, "expected signed decimal exponent"))?;
            i = end;
        }
        let lower = c.to_ascii_lowercase();
        blocks.push(if lower == b'a' { Block::A(k) } else { Block::B(k) });
    }
    Ok(BsWord { blocks })
}

/// Britton reduction on runs: `segments[0] a^{runs[0]} segments[1] ...`.
struct Stack<'a> {
    spec: &'a BSSpec,
    segments: Vec<BigInt>,
    runs: Vec<BigInt>,
}

impl Stack<'_> {
    fn push_b(&mut self, k: &BigInt) {
        *self.segments.last_mut().expect("nonempty") += k;
    }

    fn push_a(&mut self, n: &BigInt) {
        let mut n = n.clone();
        while !n.is_zero() {
            let Some(last) = self.runs.last_mut() else {
                break;
            };
            let seg = self.segments.last().expect("nonempty");
            if seg.is_zero() {
                // adjacent runs merge and the sum is pushed again
                self.segments.pop();
                n += &*last;
                self.runs.pop();
                continue;
            }
            if last.is_positive() == n.is_positive() {
                break;
            }
            // a^s b^k a^-s with s the sign of the last run
            let s = if last.is_positive() { 1 } else { -1 };
            let (num, den) = if s == 1 { (&self.spec.q, &self.spec.p) } else { (&self.spec.p, &self.spec.q) };
            let (quot, rem) = seg.div_rem(den);
            if !rem.is_zero() {
                break;
            }
            let y = quot * num;
            self.segments.pop();
            *last -= s;
            n += s;
            if last.is_zero() {
                self.runs.pop();
                *self.segments.last_mut().expect("nonempty") += y;
            } else {
                self.segments.push(y);
            }
        }
        if !n.is_zero() {
            self.runs.push(n);
            self.segments.push(BigInt::zero());
        }
    }
}

/// Reduced run-length form of `w` in `BS(p, q)`.
pub fn bs_reduce(spec: &BSSpec, w: &BsWord) -> BsWord {
    let mut st = Stack { spec, segments: vec![BigInt::zero()], runs: Vec::new() };
    for b in &w.blocks {
        match b {
            Block::A(n) => st.push_a(n),
            Block::B(k) => st.push_b(k),
        }
    }
    let mut blocks = Vec::new();
    for (i, seg) in st.segments.iter().enumerate() {
        if i > 0 {
            blocks.push(Block::A(st.runs[i - 1].clone()));
        }
        if !seg.is_zero() {
            blocks.push(Block::B(seg.clone()));
        }
    }
    BsWord { blocks }
}

pub fn bs_is_trivial(spec: &BSSpec, w: &BsWord) -> bool {
    bs_reduce(spec, w).blocks.is_empty()
}

/// Largest exponent in the prime factorization of `|m|` (0 for `|m| = 1`).
pub fn max_prime_exponent(m: &BigInt) -> u32 {
    let mut n = m.abs();
    let mut best = 0;
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while n.is_multiple_of(&p) {
            n /= &p;
            e += 1;
        }
        best = best.max(e);
        p += 1;
    }
    if n > BigInt::one() {
        best = best.max(1);
    }
    best
}

fn has_excess_prime_power(m: &BigInt, n: &BigInt) -> bool {
    // some prime divides n more often than it divides m
    let mut rest = n.abs();
    let mut p = BigInt::from(2);
    let check = |p: &BigInt, rest: &mut BigInt| {
        let mut en = 0;
        while rest.is_multiple_of(p) {
            *rest /= p;
            en += 1;
        }
        let mut em = 0;
        let mut mm = m.abs();
        while en > 0 && mm.is_multiple_of(p) {
            mm /= p;
            em += 1;
        }
        en > em
    };
    while &p * &p <= rest {
        if check(&p, &mut rest) {
            return true;
        }
        p += 1;
    }
    rest > BigInt::one() && {
        let q = rest.clone();
        check(&q, &mut rest)
    }
}

/// Least `N` with `a^-N b^(n^k) a^N = b^alpha` and `n` not dividing `alpha`
/// in `BS(m, n)`; returns `(N, alpha)`.
pub fn bs_n_of_k(m: i64, n: i64, k: u32) -> Result<(u64, BigInt)> {
    let (mb, nb) = (BigInt::from(m), BigInt::from(n));
    if m == 0 || n == 0 || m.unsigned_abs() >= n.unsigned_abs() || k == 0 {
        return Err(Error::PreconditionViolated("need 0 < |m| < |n| and k >= 1".into()));
    }
    if !has_excess_prime_power(&mb, &nb) {
        return Err(Error::PreconditionViolated("no prime power divides n but not m".into()));
    }
    let mut alpha = nb.pow(k);
    let mut count = 0;
    while alpha.is_multiple_of(&nb) {
        alpha = alpha / &nb * &mb;
        count += 1;
    }
    Ok((count, alpha))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(p: i64, q: i64) -> BSSpec {
        BSSpec::new(p, q).unwrap()
    }

    fn w(s: &str) -> BsWord {
        parse_bs_word(s).unwrap()
    }

    #[test]
    fn word_problem_examples() {
        assert!(bs_is_trivial(&bs(2, 3), &w("abbABBB")));
        assert!(bs_is_trivial(&bs(2, 3), &w("ab^2Ab^-3")));
        assert!(!bs_is_trivial(&bs(2, 3), &w("abAbaBAB")));
        assert!(bs_is_trivial(&bs(2, 3), &w("babbABaBBA")));
        assert!(bs_is_trivial(&bs(2, 3), &w("")));
        assert!(bs_is_trivial(&bs(2, 3), &w("aaA A")));
    }

    #[test]
    fn big_blocks() {
        // a^-1 b^4 a = b^2 in BS(2,4), so a^-3 b^64 a^3 = b^8
        let s = bs(2, 4);
        assert!(bs_is_trivial(&s, &w("a^-3b^64a^3b^-8")));
        assert!(!bs_is_trivial(&s, &w("a^-3b^64a^3b^-7")));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("a^3b^-2AB").to_string(), "a^3b^-2AB");
        assert!(matches!(parse_bs_word("ab^x"), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(parse_bs_word("abc"), Err(Error::Parse { offset: 2, .. })));
    }

    #[test]
    fn n_of_k_examples() {
        assert_eq!(bs_n_of_k(2, 4, 1).unwrap(), (1, 2.into()));
        assert_eq!(bs_n_of_k(2, 4, 2).unwrap(), (3, 2.into()));
        assert_eq!(bs_n_of_k(2, 6, 1).unwrap(), (1, 2.into()));
        assert!(bs_n_of_k(4, 2, 1).is_err());
        assert!(bs_n_of_k(4, 6, 1).is_ok());
        assert!(bs_n_of_k(6, 12, 0).is_err());
    }

    #[test]
    fn n_of_k_matches_word_problem() {
        // a^-N b^(n^k) a^N b^-alpha is trivial in BS(m, n)
        for (m, n, k) in [(2, 4, 2), (2, 6, 3), (3, 18, 2)] {
            let (big_n, alpha) = bs_n_of_k(m, n, k).unwrap();
            let spec = bs(m, n);
            let word = BsWord::from_blocks(vec![
                Block::A(-BigInt::from(big_n)),
                Block::B(BigInt::from(n).pow(k)),
                Block::A(BigInt::from(big_n)),
                Block::B(-alpha),
            ]);
            assert!(bs_is_trivial(&spec, &word));
        }
    }

    #[test]
    fn prime_exponents() {
        assert_eq!(max_prime_exponent(&2.into()), 1);
        assert_eq!(max_prime_exponent(&72.into()), 3);
        assert_eq!(max_prime_exponent(&1.into()), 0);
    }
}
