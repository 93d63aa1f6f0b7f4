//! Enumeration of compact words up to rotation and inversion.
//!
//! Letters are coded `0 = a`, `1 = A`, `2 = b`, `3 = B`, so `c ^ 1` is the
//! inverse of `c` and code order is the alphabet order `a < A < b < B`.

use std::sync::LazyLock;

use crate::error::Result;
use crate::exec::{self, Exec};
use crate::group::{GroupWord, Letter, Reducer};
use crate::lattice::{EVec, GroupCtx};

pub const LETTERS: [char; 4] = ['a', 'A', 'b', 'B'];

pub fn code_to_string(code: &[u8]) -> String {
    code.iter().map(|&c| LETTERS[c as usize]).collect()
}

pub fn code_to_word(code: &[u8]) -> GroupWord {
    GroupWord::from_letters(
        code.iter()
            .map(|&c| match c {
                0 => Letter::A(1),
                1 => Letter::A(-1),
                2 => Letter::Base(EVec::basis(0, 1)),
                _ => Letter::Base(EVec::basis(0, -1)),
            })
            .collect(),
    )
}

/// No proper rotation of any extension of `p` can start below `p`.
fn prefix_may_be_minimal(p: &[u8]) -> bool {
    let n = p.len();
    (1..n).all(|i| p[i..] >= p[..n - i])
}

fn is_canonical(w: &[u8]) -> bool {
    let n = w.len();
    if n > 1 && w[0] == w[n - 1] ^ 1 {
        return false;
    }
    let rot_ge = |v: &[u8], i: usize| v[i..].iter().chain(&v[..i]).cmp(w.iter()).is_ge();
    if !(1..n).all(|i| rot_ge(w, i)) {
        return false;
    }
    let inv: Vec<u8> = w.iter().rev().map(|c| c ^ 1).collect();
    (0..n).all(|i| rot_ge(&inv, i))
}

fn dfs(buf: &mut Vec<u8>, n: usize, out: &mut Vec<Vec<u8>>) {
    if buf.len() == n {
        if is_canonical(buf) {
            out.push(buf.clone());
        }
        return;
    }
    for c in 0..4u8 {
        if buf.last().is_some_and(|&l| l == c ^ 1) {
            continue;
        }
        buf.push(c);
        if prefix_may_be_minimal(buf) {
            dfs(buf, n, out);
        }
        buf.pop();
    }
}

/// Cyclically reduced words of length `n` that are lexicographically least
/// among all rotations of themselves and of their inverse, in lex order.
pub fn canonical_words(n: usize) -> Vec<Vec<u8>> {
    canonical_words_with(n, Exec::Sequential)
}

/// Prefix length at which the search tree is split between workers.
const SPLIT_DEPTH: usize = 4;

/// Same as [`canonical_words`], with subtrees below a fixed prefix depth
/// searched under `exec`; the output order does not depend on it.
pub fn canonical_words_with(n: usize, exec: Exec) -> Vec<Vec<u8>> {
    if n == 0 {
        return Vec::new();
    }
    let depth = n.min(SPLIT_DEPTH);
    let mut prefixes = vec![Vec::new()];
    for _ in 0..depth {
        prefixes = prefixes
            .into_iter()
            .flat_map(|p: Vec<u8>| {
                (0..4u8).filter_map(move |c| {
                    if p.last() == Some(&(c ^ 1)) {
                        return None;
                    }
                    let mut q = p.clone();
                    q.push(c);
                    prefix_may_be_minimal(&q).then_some(q)
                })
            })
            .collect();
    }
    exec::map(exec, &prefixes, |p| {
        let mut buf = Vec::with_capacity(n);
        buf.extend_from_slice(p);
        let mut out = Vec::new();
        dfs(&mut buf, n, &mut out);
        out
    })
    .into_iter()
    .flatten()
    .collect()
}

/// All freely reduced words of length `n`, in lex order.
pub fn freely_reduced_words(n: usize) -> Vec<Vec<u8>> {
    let mut words = vec![Vec::new()];
    for _ in 0..n {
        words = words
            .into_iter()
            .flat_map(|w: Vec<u8>| {
                let last = w.last().copied();
                (0..4u8).filter(move |&c| last != Some(c ^ 1)).map(move |c| {
                    let mut v = w.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    words
}

/// Image in the wreath product `Z[X^{+-1}] x| Z` is trivial.
///
/// This quotient is the same for every limit group, so a word failing this
/// test is nontrivial in all of them.
pub(crate) fn wreath_trivial(code: &[u8]) -> bool {
    let n = code.len() as i64;
    let mut coeffs = vec![0i32; 2 * code.len() + 1];
    let mut shift = 0i64;
    for &c in code {
        match c {
            0 => shift += 1,
            1 => shift -= 1,
            2 => coeffs[(shift + n) as usize] += 1,
            _ => coeffs[(shift + n) as usize] -= 1,
        }
    }
    shift == 0 && coeffs.iter().all(|&c| c == 0)
}

static E0: LazyLock<EVec> = LazyLock::new(|| EVec::basis(0, 1));
static E0_INV: LazyLock<EVec> = LazyLock::new(|| EVec::basis(0, -1));

/// Triviality of a coded word, without building a `GroupWord`.
pub fn code_is_trivial(ctx: &GroupCtx, code: &[u8]) -> Result<bool> {
    let mut r = Reducer::new(ctx);
    for &c in code {
        match c {
            0 => r.push_a(1)?,
            1 => r.push_a(-1)?,
            2 => r.push_base(&E0),
            _ => r.push_base(&E0_INV),
        }
    }
    Ok(r.finish().is_identity())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Canonical representative by brute force over all rotations and inverses.
    fn canon(w: &[u8]) -> Vec<u8> {
        let n = w.len();
        let inv: Vec<u8> = w.iter().rev().map(|c| c ^ 1).collect();
        (0..n)
            .flat_map(|i| {
                [
                    w[i..].iter().chain(&w[..i]).copied().collect::<Vec<u8>>(),
                    inv[i..].iter().chain(&inv[..i]).copied().collect(),
                ]
            })
            .min()
            .unwrap()
    }

    #[test]
    fn canonical_matches_brute_force() {
        for n in 1..=7 {
            let cyclic: Vec<Vec<u8>> = freely_reduced_words(n)
                .into_iter()
                .filter(|w| n == 1 || w[0] != w[n - 1] ^ 1)
                .collect();
            let expected: HashSet<Vec<u8>> = cyclic.iter().map(|w| canon(w)).collect();
            let got = canonical_words(n);
            assert_eq!(got.len(), expected.len(), "length {n}");
            assert!(got.iter().all(|w| expected.contains(w)));
            assert!(got.windows(2).all(|p| p[0] < p[1]));
            assert_eq!(canonical_words_with(n, Exec::Parallel), got);
        }
    }

    #[test]
    fn counts() {
        assert_eq!(freely_reduced_words(3).len(), 36);
        assert_eq!(canonical_words(1).len(), 2);
        assert_eq!(code_to_string(&[0, 1, 2, 3]), "aAbB");
    }

    #[test]
    fn wreath_filter() {
        assert!(wreath_trivial(&[2, 0, 2, 2, 1, 3, 0, 3, 3, 1]));
        assert!(!wreath_trivial(&[0, 2, 1]));
        assert!(!wreath_trivial(&[0]));
    }
}
