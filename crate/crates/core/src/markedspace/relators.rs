use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::group::{GroupWord, Letter};
use crate::lattice::{EVec, GroupCtx};

/// Families of words used as relators and certificates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelatorKind {
    /// `b_1 = a b^m a^-1`, `b_i = a b_{i-1} b^{-r_{i-1}} a^-1`; the relators are `[b, b_i]`.
    B(usize),
    /// `a^{n+1} (m e_0) a^-1 (-t_1 e_0) a^-1 ... (-t_n e_0) a^-1`.
    W { m: i64, t: Vec<i64> },
    /// `[a b^k a^-1, b]`, trivial iff `m` divides `k`.
    V(i64),
    /// `W(m, t) e_0 W(-m, -t) (-e_0)`, trivial iff `t` is a prefix of the digits.
    WinE { m: i64, t: Vec<i64> },
}

/// `b^k` spelled as `|k|` single letters, so compact output stays readable.
pub(crate) fn b_letters(k: i64) -> GroupWord {
    let l = Letter::Base(EVec::basis(0, k.signum()));
    GroupWord::from_letters(vec![l; k.unsigned_abs() as usize])
}

fn b_block(k: i64) -> GroupWord {
    GroupWord::b_pow(BigInt::from(k))
}

/// The word `b_i` of the group described by `ctx` (needs `i - 1` digits).
pub fn b_word(ctx: &GroupCtx, i: usize) -> Result<GroupWord> {
    if i == 0 {
        return Err(Error::PreconditionViolated("relator indices start at 1".into()));
    }
    let digits = ctx.digits(i - 1)?;
    let m = ctx.m() as i64;
    let mut w = GroupWord::a().concat(&b_letters(m)).concat(&GroupWord::a_inv());
    for &r in &digits[..i - 1] {
        w = GroupWord::a().concat(&w).concat(&b_letters(-(r as i64))).concat(&GroupWord::a_inv());
    }
    Ok(w)
}

pub fn w_word(m: i64, t: &[i64]) -> GroupWord {
    let mut w = GroupWord::a_pow(t.len() as i64 + 1);
    w.extend(&b_block(m));
    w.extend(&GroupWord::a_inv());
    for &ti in t {
        w.extend(&b_block(-ti));
        w.extend(&GroupWord::a_inv());
    }
    w
}

pub fn v_word(k: i64) -> GroupWord {
    let x = GroupWord::a().concat(&b_letters(k)).concat(&GroupWord::a_inv());
    GroupWord::commutator(&x, &b_letters(1))
}

pub fn win_e_word(m: i64, t: &[i64]) -> GroupWord {
    let neg: Vec<i64> = t.iter().map(|x| -x).collect();
    w_word(m, t).concat(&b_block(1)).concat(&w_word(-m, &neg)).concat(&b_block(-1))
}

/// Builds the requested word; `ctx` is needed only for `B`.
pub fn relator(kind: &RelatorKind, ctx: Option<&GroupCtx>) -> Result<GroupWord> {
    match kind {
        RelatorKind::B(i) => {
            let ctx = ctx.ok_or_else(|| Error::PreconditionViolated("b_i needs a group".into()))?;
            let bi = b_word(ctx, *i)?;
            Ok(GroupWord::commutator(&b_letters(1), &bi))
        }
        RelatorKind::W { m, t } => Ok(w_word(*m, t)),
        RelatorKind::V(k) => Ok(v_word(*k)),
        RelatorKind::WinE { m, t } => Ok(win_e_word(*m, t)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::is_trivial;
    use crate::madic::{MarkedGroupSpec, XiSpec};

    fn ctx(m: i64, xi: i64) -> GroupCtx {
        GroupCtx::new(MarkedGroupSpec::new(m, XiSpec::int(xi)).unwrap())
    }

    #[test]
    fn word_shapes() {
        let c = ctx(2, 3);
        assert_eq!(b_word(&c, 1).unwrap().to_compact().unwrap(), "abbA");
        assert_eq!(b_word(&c, 2).unwrap().to_compact().unwrap(), "aabbABA");
        assert_eq!(v_word(4).to_compact().unwrap(), "abbbbAbaBBBBAB");
        assert_eq!(w_word(2, &[1]).to_compact().unwrap(), "aabbABA");
        assert_eq!(win_e_word(2, &[1, 0]).to_compact().unwrap().len(), 20);
    }

    #[test]
    fn relators_hold() {
        let c = ctx(2, 3);
        for i in 1..6 {
            assert!(is_trivial(&c, &relator(&RelatorKind::B(i), Some(&c)).unwrap()).unwrap());
        }
        assert!(relator(&RelatorKind::B(1), None).is_err());
    }

    #[test]
    fn win_e_detects_prefix() {
        let c = ctx(2, 1); // digits 1, 0, 0, ...
        assert!(is_trivial(&c, &win_e_word(2, &[1, 0])).unwrap());
        assert!(!is_trivial(&ctx(2, 3), &win_e_word(2, &[1, 0])).unwrap());
        assert!(!is_trivial(&c, &win_e_word(2, &[0])).unwrap());
    }
}
