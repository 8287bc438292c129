//! Change of basis between `t_i`-monomials and `t'_i`-monomials.
//!
//! With `J_i = g_i … g_1 g_1 … g_i` we have `t_i = t'_i J_i`. Expanding a
//! `t'`-monomial in the `t` basis gives
//!
//! ```text
//! t'_0^{k_0} … t'_{n-1}^{k_{n-1}} = t^k · U_k + (lower terms)
//! U_k = q^c · Π_{k_i > 0} J_i^-1,  c = Σ_{k_i>0} i(1 - k_i) + Σ_{k_i<0} i|k_i|
//! ```
//!
//! where "lower" compares `(|k_{n-1}|, …, |k_1|)` lexicographically. The
//! conversion to the `t'` basis is triangular elimination along that order;
//! each step checks that the leading loop vector really cancels.

use super::element::{AlgebraElement, Basis, BasisWord};
use super::sigma::{
    add_to, multiply_normalize, pi_normalize, right_mul_perm, t_prime_loop_letters, to_terms, Terms,
};
use crate::braid::{BraidWord, Generator};
use crate::cache::Memo;
use crate::scalars::IntLaurent;

static PRIME_IN_SIGMA: Memo<Vec<i32>, AlgebraElement> = Memo::new();
static UNIT_INV: Memo<Vec<i32>, AlgebraElement> = Memo::new();

/// `t'^k` (identity tail) in the `t` basis.
fn prime_monomial_in_sigma(k: &[i32]) -> AlgebraElement {
    PRIME_IN_SIGMA.get_or_compute(k.to_vec(), || {
        let n = k.len();
        let letters: Vec<Generator> = k
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .flat_map(|(i, &e)| t_prime_loop_letters(i, e))
            .collect();
        pi_normalize(&BraidWord::new(n, letters).expect("indices below n"))
    })
}

/// `U_k^-1 = q^-c · Π_{k_i > 0} J_i`, as an element with no loops.
fn unit_inverse(k: &[i32]) -> AlgebraElement {
    UNIT_INV.get_or_compute(k.to_vec(), || {
        let n = k.len();
        let mut c = 0;
        let mut letters = vec![];
        for (i, &e) in k.iter().enumerate().skip(1) {
            let i32i = i as i32;
            if e > 0 {
                c += i32i * (1 - e);
                letters.extend((1..=i).rev().map(|j| Generator::s(j, 1)));
                letters.extend((1..=i).map(|j| Generator::s(j, 1)));
            } else if e < 0 {
                c += i32i * -e;
            }
        }
        pi_normalize(&BraidWord::new(n, letters).expect("indices below n"))
            .scale(&IntLaurent::q_pow(-c))
    })
}

fn order_key(k: &[i32]) -> (Vec<i32>, Vec<i32>) {
    (
        k.iter().skip(1).rev().map(|e| e.abs()).collect(),
        k.to_vec(),
    )
}

fn loop_part(n: usize, terms: &Terms, k: &[i32]) -> AlgebraElement {
    AlgebraElement::from_terms(
        n,
        super::Basis::Sigma,
        terms.iter().filter(|(w, _)| w.loops == k).map(|(w, c)| {
            (
                BasisWord {
                    loops: vec![0; n],
                    perm: w.perm.clone(),
                },
                c.clone(),
            )
        }),
    )
}

/// Triangular elimination: peels off the leading loop vector of the
/// remainder until nothing is left.
fn eliminate(n: usize, mut rem: Terms) -> AlgebraElement {
    let mut out = Terms::new();
    while let Some(lead) = rem
        .keys()
        .map(|w| &w.loops)
        .max_by_key(|l| order_key(l))
        .cloned()
    {
        let y = loop_part(n, &rem, &lead);
        let z = multiply_normalize(&unit_inverse(&lead), &y).expect("same strands");
        let expansion = prime_monomial_in_sigma(&lead);
        for (w, c) in z.terms() {
            add_to(
                &mut out,
                BasisWord {
                    loops: lead.clone(),
                    perm: w.perm.clone(),
                },
                c.clone(),
            );
            for (v, d) in right_mul_perm(&expansion, &w.perm).terms() {
                add_to(&mut rem, v.clone(), -(c * d));
            }
        }
        let top = order_key(&lead);
        assert!(
            rem.keys().all(|w| order_key(&w.loops) < top),
            "change of basis is not triangular at {lead:?}"
        );
    }
    AlgebraElement::from_terms(n, Basis::SigmaPrime, out)
}

/// Rewrites an element given in the `t_i` basis in the `t'_i` basis.
pub fn to_sigma_prime(x: &AlgebraElement) -> AlgebraElement {
    if x.basis() == Basis::SigmaPrime {
        return x.clone();
    }
    eliminate(x.strands(), to_terms(x))
}

/// Rewrites an element given in the `t'_i` basis in the `t_i` basis.
pub fn from_sigma_prime(x: &AlgebraElement) -> AlgebraElement {
    if x.basis() == Basis::Sigma {
        return x.clone();
    }
    let n = x.strands();
    let mut out = Terms::new();
    for (w, c) in x.terms() {
        let m = prime_monomial_in_sigma(&w.loops);
        for (v, d) in to_terms(&right_mul_perm(&m, &w.perm)) {
            add_to(&mut out, v, c * &d);
        }
    }
    AlgebraElement::from_terms(n, Basis::Sigma, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str, n: usize, b: Basis) -> AlgebraElement {
        AlgebraElement::parse(s, n, b).unwrap()
    }

    #[test]
    fn t1_in_prime_basis() {
        let x = el("[t_1 | 1]", 2, Basis::Sigma);
        assert_eq!(
            to_sigma_prime(&x),
            el("(q - 1)*[t'_1 | g1] + (q)*[t'_1 | 1]", 2, Basis::SigmaPrime)
        );
    }

    #[test]
    fn t_is_unchanged() {
        let x = el("[t | 1]", 3, Basis::Sigma);
        assert_eq!(to_sigma_prime(&x).render(), "[t | 1]");
    }

    #[test]
    fn round_trips() {
        for s in [
            "[t'_1 | 1]",
            "[t^-1 t'_1^2 t'_2^-1 | g2 g1]",
            "(q^2 - 1)*[t'_2 | g1 . g2] + [t^3 | 1]",
        ] {
            let p = el(s, 3, Basis::SigmaPrime);
            let x = from_sigma_prime(&p);
            assert_eq!(to_sigma_prime(&x), p, "{s}");
        }
    }
}
