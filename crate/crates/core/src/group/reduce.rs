use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use super::word::{GroupWord, Letter};
use crate::error::Result;
use crate::lattice::{EVec, GroupCtx};

/// Alternating sequence `x_0 a^{d_1} x_1 ... a^{d_l} x_l` without pinches.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedForm {
    segments: Vec<EVec>,
    deltas: Vec<i8>,
}

impl ReducedForm {
    pub fn identity() -> Self {
        ReducedForm { segments: vec![EVec::zero()], deltas: Vec::new() }
    }

    pub fn from_base(x: EVec) -> Self {
        ReducedForm { segments: vec![x], deltas: Vec::new() }
    }

    /// Builds a form from its parts; `segments.len()` must be `deltas.len() + 1`.
    /// Pinch-freeness is the caller's responsibility.
    pub fn from_parts(segments: Vec<EVec>, deltas: Vec<i8>) -> Self {
        assert_eq!(segments.len(), deltas.len() + 1, "segments must interleave the stable letters");
        assert!(deltas.iter().all(|d| d.abs() == 1));
        ReducedForm { segments, deltas }
    }

    pub fn segments(&self) -> &[EVec] {
        &self.segments
    }

    pub fn deltas(&self) -> &[i8] {
        &self.deltas
    }

    pub fn t_length(&self) -> usize {
        self.deltas.len()
    }

    pub fn sigma(&self) -> i64 {
        self.deltas.iter().map(|&d| d as i64).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.deltas.is_empty() && self.segments[0].is_zero()
    }

    /// The base element, when the t-length is zero.
    pub fn as_base(&self) -> Option<&EVec> {
        self.deltas.is_empty().then(|| &self.segments[0])
    }

    pub fn max_index(&self) -> Option<usize> {
        self.segments.iter().filter_map(EVec::max_index).max()
    }

    pub fn to_word(&self) -> GroupWord {
        let mut w = GroupWord::empty();
        for (i, x) in self.segments.iter().enumerate() {
            if i > 0 {
                w.push(Letter::A(self.deltas[i - 1]));
            }
            if !x.is_zero() {
                w.push(Letter::Base(x.clone()));
            }
        }
        w
    }
}

impl fmt::Display for ReducedForm {
    /// Extended word text.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_word().to_extended())
    }
}

/// Coset representatives used by [`normal_form`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NormalPolicy {
    /// After `a`: `j e_0` with `0 <= j < |m|`. After `a^-1`: `j e_0`, `j` any integer.
    E0Residues,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub form: ReducedForm,
    pub policy: NormalPolicy,
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.form.fmt(f)
    }
}

/// Incremental Britton reduction: the stack always holds a reduced form,
/// and each appended stable letter is checked against the one before it.
pub(crate) struct Reducer<'a> {
    ctx: &'a GroupCtx,
    segments: Vec<EVec>,
    deltas: Vec<i8>,
}

impl<'a> Reducer<'a> {
    pub(crate) fn new(ctx: &'a GroupCtx) -> Self {
        Reducer { ctx, segments: vec![EVec::zero()], deltas: Vec::new() }
    }

    pub(crate) fn push_base(&mut self, x: &EVec) {
        *self.segments.last_mut().expect("nonempty") += x;
    }

    pub(crate) fn push_a(&mut self, d: i8) -> Result<()> {
        if self.deltas.last() == Some(&-d) {
            let x = self.segments.last().expect("nonempty");
            // previous letter a: a x a^-1; previous letter a^-1: a^-1 x a
            let pinched = if d == -1 { self.ctx.try_up(x)? } else { self.ctx.try_down(x)? };
            if let Some(y) = pinched {
                self.segments.pop();
                self.deltas.pop();
                *self.segments.last_mut().expect("nonempty") += &y;
                return Ok(());
            }
        }
        self.deltas.push(d);
        self.segments.push(EVec::zero());
        Ok(())
    }

    pub(crate) fn push_word(&mut self, w: &GroupWord) -> Result<()> {
        for l in w.letters() {
            match l {
                Letter::A(d) => self.push_a(*d)?,
                Letter::Base(x) => self.push_base(x),
            }
        }
        Ok(())
    }

    pub(crate) fn finish(self) -> ReducedForm {
        ReducedForm { segments: self.segments, deltas: self.deltas }
    }
}

pub fn britton_reduce(ctx: &GroupCtx, w: &GroupWord) -> Result<ReducedForm> {
    let mut r = Reducer::new(ctx);
    r.push_word(w)?;
    Ok(r.finish())
}

pub fn is_trivial(ctx: &GroupCtx, w: &GroupWord) -> Result<bool> {
    Ok(britton_reduce(ctx, w)?.is_identity())
}

/// Rewrites a reduced form right to left so every segment after a stable
/// letter is its coset representative.
pub fn normalize(ctx: &GroupCtx, form: &ReducedForm) -> Result<NormalForm> {
    let mut segments = form.segments.clone();
    let m = BigInt::from(ctx.m());
    for i in (1..segments.len()).rev() {
        let x = std::mem::take(&mut segments[i]);
        let (rep, pushed) = if form.deltas[i - 1] == 1 {
            let j = ctx.em_xi_value(&x)?.mod_floor(&m);
            let rep = EVec::basis(0, j);
            let h = &x - &rep;
            (rep, ctx.try_up(&h)?.expect("residue removed"))
        } else {
            let rep = EVec::basis(0, x.coeff(0));
            let h = x.without_e0();
            (rep, ctx.try_down(&h)?.expect("e_0 part removed"))
        };
        segments[i] = rep;
        segments[i - 1] += &pushed;
    }
    Ok(NormalForm {
        form: ReducedForm { segments, deltas: form.deltas.clone() },
        policy: NormalPolicy::E0Residues,
    })
}

pub fn normal_form(ctx: &GroupCtx, w: &GroupWord) -> Result<NormalForm> {
    normalize(ctx, &britton_reduce(ctx, w)?)
}

/// `(sigma, t-length)`
pub fn sigma_and_tlength(ctx: &GroupCtx, w: &GroupWord) -> Result<(i64, usize)> {
    Ok((w.sigma(), britton_reduce(ctx, w)?.t_length()))
}

/// Returns `(u, g)` with `g^-1 w g = u` and `u` cyclically reduced.
///
/// For positive t-length the last segment of `u` is zero.
pub fn cyclic_reduce(ctx: &GroupCtx, w: &GroupWord) -> Result<(ReducedForm, GroupWord)> {
    let mut u = britton_reduce(ctx, w)?;
    let mut g = GroupWord::empty();
    loop {
        let l = u.t_length();
        if l == 0 {
            return Ok((u, g));
        }
        let tail = u.segments[l].clone();
        if !tail.is_zero() {
            // conjugate by the trailing segment: u -> tail u tail^-1
            u.segments[l] = EVec::zero();
            u.segments[0] += &tail;
            g.push(Letter::Base(-&tail));
        }
        let (first, last) = (u.deltas[0], u.deltas[l - 1]);
        let x0 = &u.segments[0];
        let wraps = first == -last
            && if last == 1 { ctx.try_up(x0)?.is_some() } else { ctx.try_down(x0)?.is_some() };
        if !wraps {
            return Ok((u, g));
        }
        let c = GroupWord::from_letters(vec![Letter::A(last)]);
        let conj = c.concat(&u.to_word()).concat(&c.inverse());
        u = britton_reduce(ctx, &conj)?;
        g.extend(&c.inverse());
    }
}
