//! Marked groups side by side: relators, distances, isomorphism and
//! recovery of parameters from a word-problem oracle.
//!
//! The distance between two marked groups is `e^-n` with `n` the length of
//! a shortest word trivial in exactly one of them; it is reported through
//! the integer `n`, or through integer bounds on it.

pub mod enumerate;
mod relators;

pub use relators::{b_word, relator, v_word, w_word, win_e_word, RelatorKind};

use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::group::GroupWord;
use crate::lattice::GroupCtx;
use crate::madic::{gcd_with_m, same_digit_stream, MarkedGroupSpec, RDigitStream};

/// Largest word length enumerated without an explicit override.
pub const DEFAULT_ENUM_CAP: usize = 14;

/// Digits scanned when looking for the first disagreement.
pub const DIGIT_SCAN_LIMIT: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distinguishing {
    pub len: usize,
    pub word: GroupWord,
}

/// Shortest word trivial in exactly one of the two groups, searched up to
/// `max_len`. Ties at the minimal length go to the lexicographically first
/// canonical word, so the answer does not depend on the strategy.
pub fn shortest_distinguishing(
    g1: &MarkedGroupSpec,
    g2: &MarkedGroupSpec,
    max_len: usize,
) -> Result<Option<Distinguishing>> {
    shortest_distinguishing_with(g1, g2, max_len, Exec::default())
}

pub fn shortest_distinguishing_with(
    g1: &MarkedGroupSpec,
    g2: &MarkedGroupSpec,
    max_len: usize,
    exec: Exec,
) -> Result<Option<Distinguishing>> {
    let c1 = GroupCtx::new(g1.clone());
    let c2 = GroupCtx::new(g2.clone());
    for n in 1..=max_len {
        // words with nontrivial wreath image die in neither group
        let candidates: Vec<Vec<u8>> =
            enumerate::canonical_words_with(n, exec).into_iter().filter(|w| enumerate::wreath_trivial(w)).collect();
        let hit = exec::find_map_first(exec, &candidates, |code| {
            let t1 = match enumerate::code_is_trivial(&c1, code) {
                Ok(t) => t,
                Err(e) => return Some(Err(e)),
            };
            match enumerate::code_is_trivial(&c2, code) {
                Ok(t2) => (t1 != t2).then(|| Ok(code.clone())),
                Err(e) => Some(Err(e)),
            }
        });
        if let Some(found) = hit {
            let code = found?;
            return Ok(Some(Distinguishing { len: n, word: enumerate::code_to_word(&code) }));
        }
    }
    Ok(None)
}

/// Integer exponents bracketing the distance: `e^-lower_exp <= d <= e^-upper_exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistanceBounds {
    pub h: usize,
    pub lower_exp: u64,
    pub upper_exp: u64,
}

impl DistanceBounds {
    /// Bounds for unit parameters with a common digit prefix of length `h`.
    pub fn from_prefix(m: u64, h: usize) -> Self {
        let h64 = h as u64;
        DistanceBounds { h, lower_exp: 2 * (m + 1) * (h64 + 1) + 2 * m + 6, upper_exp: 2 * h64 + 1 }
    }
}

/// Index of the first differing digit (1-based), scanning at most `limit`.
fn first_difference(a: &MarkedGroupSpec, b: &MarkedGroupSpec, limit: usize) -> Result<Option<usize>> {
    let (sa, sb) = (RDigitStream::new(a.clone()), RDigitStream::new(b.clone()));
    let avail = [sa.limit(), sb.limit()].into_iter().flatten().min().unwrap_or(limit).min(limit);
    let (da, db) = (sa.prefix(avail)?, sb.prefix(avail)?);
    Ok((0..avail).find(|&i| da[i] != db[i]).map(|i| i + 1))
}

/// Distance bounds for two unit parameters over the same modulus.
pub fn distance_bounds(g1: &MarkedGroupSpec, g2: &MarkedGroupSpec) -> Result<DistanceBounds> {
    if g1.m() != g2.m() {
        return Err(Error::ModulusMismatch(g1.m(), g2.m()));
    }
    let (d1, d2) = (gcd_with_m(g1)?, gcd_with_m(g2)?);
    if d1 != 1 || d2 != 1 {
        return Err(Error::GcdMismatch(d1, d2));
    }
    if let Ok(true) = same_digit_stream(g1, g2) {
        return Err(Error::SameGroup);
    }
    match first_difference(g1, g2, DIGIT_SCAN_LIMIT)? {
        Some(i) => Ok(DistanceBounds::from_prefix(g1.m(), i - 1)),
        None => Err(Error::SameGroup),
    }
}

/// Abstract isomorphism: equal `|m|` and equal normalized digit streams.
pub fn isomorphic(g1: &MarkedGroupSpec, g2: &MarkedGroupSpec) -> Result<bool> {
    if g1.m() != g2.m() {
        // still reject undecidable kinds consistently
        same_digit_stream(g1, g1)?;
        same_digit_stream(g2, g2)?;
        return Ok(false);
    }
    same_digit_stream(g1, g2)
}

/// Largest modulus tried when recovering `|m|`.
pub const RECOVER_M_LIMIT: i64 = 1 << 12;

/// Reads `|m|` and the first `n` digits off a word-problem oracle.
pub fn recover_parameters<F>(oracle: F, n: usize) -> Result<(u64, Vec<u64>)>
where
    F: Fn(&GroupWord) -> Result<bool>,
{
    let mut m = None;
    for k in 1..=RECOVER_M_LIMIT {
        if oracle(&v_word(k))? {
            m = Some(k);
            break;
        }
    }
    let m = m.ok_or(Error::OracleInconsistent { level: 0 })?;
    let mut digits: Vec<i64> = Vec::with_capacity(n);
    for level in 1..=n {
        let mut found = None;
        for t in 0..m {
            digits.push(t);
            let hit = oracle(&win_e_word(m, &digits))?;
            digits.pop();
            if hit {
                found = Some(t);
                break;
            }
        }
        digits.push(found.ok_or(Error::OracleInconsistent { level })?);
    }
    Ok((m as u64, digits.into_iter().map(|d| d as u64).collect()))
}

/// Word-problem oracle of a concrete group.
pub fn oracle_for(ctx: &GroupCtx) -> impl Fn(&GroupWord) -> Result<bool> + '_ {
    move |w| crate::group::is_trivial(ctx, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::madic::{r_digits, XiSpec};

    fn spec(m: i64, xi: &str) -> MarkedGroupSpec {
        MarkedGroupSpec::new(m, xi.parse().unwrap()).unwrap()
    }

    #[test]
    fn bounds_examples() {
        let b = distance_bounds(&spec(2, "int:1"), &spec(2, "int:3")).unwrap();
        assert_eq!(b, DistanceBounds { h: 1, lower_exp: 22, upper_exp: 3 });
        let b = distance_bounds(&spec(2, "int:1"), &spec(2, "int:5")).unwrap();
        assert_eq!(b, DistanceBounds { h: 2, lower_exp: 28, upper_exp: 5 });
        assert_eq!(distance_bounds(&spec(2, "int:3"), &spec(2, "int:3")), Err(Error::SameGroup));
        assert_eq!(distance_bounds(&spec(4, "int:2"), &spec(4, "int:1")), Err(Error::GcdMismatch(2, 1)));
        assert_eq!(distance_bounds(&spec(2, "int:1"), &spec(3, "int:1")), Err(Error::ModulusMismatch(2, 3)));
    }

    #[test]
    fn isomorphism_examples() {
        assert!(isomorphic(&spec(2, "int:3"), &spec(2, "rat:3/1")).unwrap());
        assert!(!isomorphic(&spec(2, "int:1"), &spec(2, "int:3")).unwrap());
        assert!(isomorphic(&spec(2, "int:3"), &spec(-2, "int:-3")).unwrap());
        assert!(!isomorphic(&spec(2, "int:3"), &spec(-2, "int:3")).unwrap());
        assert_eq!(isomorphic(&spec(2, "rseq:1,1"), &spec(2, "int:3")), Err(Error::UndecidableSpec));
    }

    #[test]
    fn recovery_examples() {
        for (m, xi, n) in [(2, "int:3", 3), (3, "int:0", 2), (2, "int:1", 3)] {
            let s = spec(m, xi);
            let ctx = GroupCtx::new(s.clone());
            let got = recover_parameters(oracle_for(&ctx), n).unwrap();
            assert_eq!(got, (m as u64, r_digits(&s, n).unwrap()));
        }
        let never = |_: &GroupWord| Ok(false);
        assert!(matches!(recover_parameters(never, 1), Err(Error::OracleInconsistent { level: 0 })));
    }

    #[test]
    fn identical_groups_have_no_distinguishing_word() {
        let s = spec(2, "int:3");
        assert_eq!(shortest_distinguishing(&s, &s, 8).unwrap(), None);
    }

    #[test]
    fn different_moduli_separate_quickly() {
        let a = MarkedGroupSpec::new(2, XiSpec::int(3)).unwrap();
        let b = MarkedGroupSpec::new(3, XiSpec::int(1)).unwrap();
        let seq = shortest_distinguishing_with(&a, &b, 12, Exec::Sequential).unwrap().unwrap();
        let par = shortest_distinguishing_with(&a, &b, 12, Exec::Parallel).unwrap().unwrap();
        assert_eq!(seq, par);
        assert_eq!(seq.len, 10); // [a b^2 a^-1, b]
    }
}
