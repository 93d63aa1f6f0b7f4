//! Words in the limit group and the word and conjugacy problems.
//!
//! The group is the HNN extension of `E` with stable letter `a` conjugating
//! `E_{m,xi}` onto `E_1`; `b` is `e_0`. Pinches are `a x a^-1` with `x` in
//! `E_{m,xi}` and `a^-1 x a` with `x` in `E_1`.

mod conjugacy;
mod reduce;
mod word;

pub use conjugacy::{are_conjugate, base_conjugacy_solve, conjugate_form};
pub(crate) use reduce::Reducer;
pub use reduce::{
    britton_reduce, cyclic_reduce, is_trivial, normal_form, normalize, sigma_and_tlength, NormalForm,
    NormalPolicy, ReducedForm,
};
pub use word::{parse_word, GroupWord, Letter, WordMode};
