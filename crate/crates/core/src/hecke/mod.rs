//! The Hecke algebra `H_{1,n}(q)` of the mixed braid group: the quotient of
//! `Z[q^±1] B_{1,n}` by `g_i^2 = (q-1) g_i + q`, with its two bases of loop
//! monomials times Jones words.

mod element;
mod perm;
mod prime;
mod sigma;

use thiserror::Error;

pub use element::{AlgebraElement, Basis, BasisWord};
pub use perm::{all_perms, JonesBlock, JonesWord, Perm};
pub use prime::{from_sigma_prime, to_sigma_prime};
pub use sigma::{
    basis_word_letters, multiply_normalize, pi_normalize, pi_normalize_randomized, right_mul_perm,
    t_loop_letters, t_prime_loop_letters,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error("elements live on different strand counts ({0} vs {1})")]
    StrandMismatch(usize, usize),
    #[error("elements are expressed in different bases")]
    BasisMismatch,
    #[error("malformed basis word {0:?}")]
    BadBasisWord(String),
    #[error("malformed algebra element ({0})")]
    BadElement(String),
}
