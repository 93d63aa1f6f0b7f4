use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{parse_e_token, tokens, EVec};

/// A letter of the extended alphabet: `a^{+-1}` or an element of `E`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    /// `a` (`+1`) or `a^-1` (`-1`).
    A(i8),
    Base(EVec),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordMode {
    /// Letters `a, A, b, B` with `A = a^-1`, `B = b^-1` and `b = e_0`.
    Compact,
    /// Whitespace-separated tokens `a`, `a^-1`, `e<i>^<k>`, and `1` for the identity.
    Extended,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn empty() -> Self {
        GroupWord::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        GroupWord { letters }
    }

    pub fn a() -> Self {
        GroupWord { letters: vec![Letter::A(1)] }
    }

    pub fn a_inv() -> Self {
        GroupWord { letters: vec![Letter::A(-1)] }
    }

    /// `a^n`
    pub fn a_pow(n: i64) -> Self {
        let d = if n < 0 { -1 } else { 1 };
        GroupWord { letters: vec![Letter::A(d); n.unsigned_abs() as usize] }
    }

    /// One `Base` letter, or the empty word for `x = 0`.
    pub fn base(x: EVec) -> Self {
        if x.is_zero() {
            return GroupWord::empty();
        }
        GroupWord { letters: vec![Letter::Base(x)] }
    }

    /// `b^k`
    pub fn b_pow(k: impl Into<BigInt>) -> Self {
        let k = k.into();
        if k.is_zero() {
            return GroupWord::empty();
        }
        Self::base(EVec::basis(0, k))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.letters.push(l);
    }

    pub fn extend(&mut self, w: &GroupWord) {
        self.letters.extend(w.letters.iter().cloned());
    }

    pub fn concat(&self, w: &GroupWord) -> GroupWord {
        let mut out = self.clone();
        out.extend(w);
        out
    }

    pub fn inverse(&self) -> GroupWord {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| match l {
                Letter::A(d) => Letter::A(-d),
                Letter::Base(x) => Letter::Base(-x),
            })
            .collect();
        GroupWord { letters }
    }

    /// `x y x^-1 y^-1`
    pub fn commutator(x: &GroupWord, y: &GroupWord) -> GroupWord {
        x.concat(y).concat(&x.inverse()).concat(&y.inverse())
    }

    /// Exponent sum of the `a` letters.
    pub fn sigma(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| match l {
                Letter::A(d) => *d as i64,
                Letter::Base(_) => 0,
            })
            .sum()
    }

    /// Largest basis index appearing in a `Base` letter.
    pub fn max_index(&self) -> Option<usize> {
        self.letters
            .iter()
            .filter_map(|l| match l {
                Letter::Base(x) => x.max_index(),
                Letter::A(_) => None,
            })
            .max()
    }

    /// Compact text, if every `Base` letter is a multiple of `e_0` small
    /// enough to spell out.
    pub fn to_compact(&self) -> Option<String> {
        let mut out = String::new();
        for l in &self.letters {
            match l {
                Letter::A(1) => out.push('a'),
                Letter::A(_) => out.push('A'),
                Letter::Base(x) => {
                    if x.max_index().is_some_and(|i| i > 0) {
                        return None;
                    }
                    let k = x.coeff(0);
                    let n = k.abs().to_usize().filter(|&n| n <= 1 << 20)?;
                    out.extend(std::iter::repeat_n(if k.is_negative() { 'B' } else { 'b' }, n));
                }
            }
        }
        Some(out)
    }

    /// Extended text; parses back to an equal word when no two `Base`
    /// letters are adjacent and none is zero.
    pub fn to_extended(&self) -> String {
        let mut parts = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            match l {
                Letter::A(1) => parts.push("a".to_string()),
                Letter::A(_) => parts.push("a^-1".to_string()),
                Letter::Base(x) if x.is_zero() => {}
                Letter::Base(x) => parts.push(x.to_string()),
            }
        }
        parts.join(" ")
    }

    pub fn format(&self, mode: WordMode) -> Option<String> {
        match mode {
            WordMode::Compact => self.to_compact(),
            WordMode::Extended => Some(self.to_extended()),
        }
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_extended())
    }
}

pub fn parse_word(text: &str, mode: WordMode) -> Result<GroupWord> {
    match mode {
        WordMode::Compact => parse_compact(text),
        WordMode::Extended => parse_extended(text),
    }
}

fn parse_compact(text: &str) -> Result<GroupWord> {
    let mut letters = Vec::with_capacity(text.len());
    for (i, c) in text.char_indices() {
        letters.push(match c {
            'a' => Letter::A(1),
            'A' => Letter::A(-1),
            'b' => Letter::Base(EVec::basis(0, 1)),
            'B' => Letter::Base(EVec::basis(0, -1)),
            _ => return Err(Error::parse(i, format!("unexpected symbol {c:?}"))),
        });
    }
    Ok(GroupWord { letters })
}

/// Adjacent `e` tokens merge into one `Base` letter.
fn parse_extended(text: &str) -> Result<GroupWord> {
    let mut letters = Vec::new();
    let mut pending: Option<EVec> = None;
    let flush = |pending: &mut Option<EVec>, letters: &mut Vec<Letter>| {
        if let Some(x) = pending.take().filter(|x| !x.is_zero()) {
            letters.push(Letter::Base(x));
        }
    };
    for (offset, tok) in tokens(text) {
        match tok {
            "a" | "a^1" => {
                flush(&mut pending, &mut letters);
                letters.push(Letter::A(1));
            }
            "a^-1" => {
                flush(&mut pending, &mut letters);
                letters.push(Letter::A(-1));
            }
            // the identity, as printed for empty forms
            "1" => {}
            _ => {
                let (i, k) = parse_e_token(tok, offset)?;
                pending.get_or_insert_with(EVec::zero).add_at(i, &k);
            }
        }
    }
    flush(&mut pending, &mut letters);
    Ok(GroupWord { letters })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compact_examples() {
        let w = parse_word("abA", WordMode::Compact).unwrap();
        assert_eq!(
            w.letters(),
            &[Letter::A(1), Letter::Base(EVec::basis(0, 1)), Letter::A(-1)]
        );
        assert_eq!(w.to_compact().unwrap(), "abA");
        assert!(matches!(parse_word("abc", WordMode::Compact), Err(Error::Parse { offset: 2, .. })));
    }

    #[test]
    fn extended_examples() {
        let w = parse_word("e1^2 a^-1", WordMode::Extended).unwrap();
        assert_eq!(w.letters(), &[Letter::Base(EVec::basis(1, 2)), Letter::A(-1)]);
        assert_eq!(w.to_extended(), "e1^2 a^-1");
        let w = parse_word("e0^2 e3^-1 a e0", WordMode::Extended).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(parse_word(&w.to_extended(), WordMode::Extended).unwrap(), w);
        assert!(matches!(parse_word("a b", WordMode::Extended), Err(Error::Parse { offset: 2, .. })));
        assert!(parse_word("", WordMode::Extended).unwrap().is_empty());
        assert!(parse_word("1", WordMode::Extended).unwrap().is_empty());
    }

    #[test]
    fn inverse_and_sigma() {
        let w = parse_word("aabAB", WordMode::Compact).unwrap();
        assert_eq!(w.inverse().to_compact().unwrap(), "baBAA");
        assert_eq!(w.sigma(), 1);
        let c = GroupWord::commutator(&GroupWord::a(), &GroupWord::b_pow(1));
        assert_eq!(c.to_compact().unwrap(), "abAB");
    }
}
