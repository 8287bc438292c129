//! The Markov trace on `⋃ H_{1,n}(q)` and the invariant `X`.
//!
//! The trace is determined by `tr(ab) = tr(ba)`, `tr(1) = 1`,
//! `tr(a g_n) = z tr(a)` and `tr(a t'_n^k) = s_k tr(a)` for `a ∈ H_{1,n}`.
//! It is computed on `t'`-basis words by removing the top strand `N`:
//!
//! * `P t'_N^k σ`         → `s_k tr(P σ)` (`σ ∈ H_N` commutes with `t'_N`)
//! * `P σ g_N c`          → `z tr(P σ c)`
//! * `P t'_N^k σ g_N c`   → `z tr(P σ t'_{N-1}^k c)` (`t'_N^k g_N = g_N t'_{N-1}^k`)
//!
//! and the last two are renormalized in `H_{1,N}`.

use std::fmt;

use crate::braid::{BraidWord, Generator};
use crate::cache::Memo;
use crate::hecke::{
    from_sigma_prime, multiply_normalize, pi_normalize, right_mul_perm, t_prime_loop_letters,
    to_sigma_prime, AlgebraElement, Basis, BasisWord, JonesWord, Perm,
};
use crate::scalars::{lambda, IntLaurent, RationalFn, SMonomial, TraceValue, XPoly, XScalar};

static TRACE_CACHE: Memo<BasisWord, TraceValue> = Memo::new();

/// Restricts a word to the fewest strands that hold it.
fn trim(w: &BasisWord) -> BasisWord {
    let m = w.top_index().map_or(1, |t| t + 1);
    if m == w.strands() {
        return w.clone();
    }
    BasisWord {
        loops: w.loops[..m].to_vec(),
        perm: Perm::from_images(w.perm.images()[..m].to_vec()).expect("fixes the top strands"),
    }
}

fn trace_sum(x: &AlgebraElement) -> TraceValue {
    debug_assert_eq!(x.basis(), Basis::SigmaPrime);
    let mut acc = TraceValue::zero();
    for (w, c) in x.terms() {
        acc.add_scaled(&trace_prime_word(w), c);
    }
    acc
}

/// Trace of a single `t'`-basis word.
pub fn trace_prime_word(w: &BasisWord) -> TraceValue {
    let w = trim(w);
    if let Some(v) = TRACE_CACHE.get(&w) {
        return v;
    }
    let v = compute(&w);
    TRACE_CACHE.insert(w, v.clone());
    v
}

fn compute(w: &BasisWord) -> TraceValue {
    let n = w.strands();
    if n == 1 {
        return TraceValue::s(w.loops[0]);
    }
    let top = n - 1;
    let k = w.loops[top];
    let mut blocks = w.jones().blocks;
    let last = blocks.last().filter(|b| b.top == top).copied();
    if last.is_some() {
        blocks.pop();
    }
    let lower = BasisWord {
        loops: w.loops[..top].to_vec(),
        perm: JonesWord { blocks }.to_perm(top),
    };
    let Some(block) = last else {
        // k ≠ 0 here (otherwise the word would have been trimmed)
        return trace_prime_word(&lower).mul_monomial(&SMonomial::s(k));
    };
    // c = g_{N-1} … g_{N-len}
    let c: Vec<usize> = (top - block.len..top).rev().collect();
    let reduced = if k == 0 {
        right_mul_perm(
            &AlgebraElement::word(lower, Basis::SigmaPrime),
            &Perm::from_word(top, &c),
        )
    } else {
        let a = from_sigma_prime(&AlgebraElement::word(lower, Basis::SigmaPrime));
        let mut letters = t_prime_loop_letters(top - 1, k);
        letters.extend(c.iter().map(|&i| Generator::s(i, 1)));
        let b = pi_normalize(&BraidWord::new(top, letters).expect("indices below N"));
        to_sigma_prime(&multiply_normalize(&a, &b).expect("same strands"))
    };
    trace_sum(&reduced).scale(&IntLaurent::z())
}

/// The Markov trace of an element given in either basis.
pub fn markov_trace(x: &AlgebraElement) -> TraceValue {
    trace_sum(&to_sigma_prime(x))
}

/// `tr(π(w))`.
pub fn trace_of_word(w: &BraidWord) -> TraceValue {
    markov_trace(&pi_normalize(w))
}

/// `Δ = -(1 - λq) / (√λ (1 - q))`, evaluated as written.
pub fn delta() -> XScalar {
    let one = RationalFn::one();
    let q: RationalFn = IntLaurent::q().into();
    let num = -&(&one - &(lambda() * &q));
    let den = XScalar::new(RationalFn::zero(), &one - &q);
    XScalar::from_rational(num).div(&den).expect("√λ(1-q) ≠ 0")
}

/// `1 / (z √λ)`.
pub fn delta_simplified() -> XScalar {
    XScalar::new(RationalFn::zero(), IntLaurent::z().into())
        .inv()
        .expect("z√λ ≠ 0")
}

/// Value of the invariant on a mixed braid, with the data it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XValue {
    pub value: XPoly,
    pub strands: usize,
    pub exponent_sum: i64,
}

impl fmt::Display for XValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `Δ^{n-1} (√λ)^e`.
pub fn x_prefactor(strands: usize, exponent_sum: i64) -> XScalar {
    let d = delta().pow(strands as i32 - 1).expect("Δ ≠ 0");
    &d * &XScalar::w().pow(exponent_sum as i32).expect("w ≠ 0")
}

/// `X = Δ^{n-1} (√λ)^e tr(π(w))`.
pub fn x_invariant(w: &BraidWord) -> XValue {
    let n = w.strands();
    let e = w.exponent_sum();
    XValue {
        value: trace_of_word(w).to_xpoly().scale(&x_prefactor(n, e)),
        strands: n,
        exponent_sum: e,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::text::{parse_trace, parse_xpoly};

    fn w(s: &str, n: usize) -> BraidWord {
        BraidWord::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn basic_values() {
        assert_eq!(trace_of_word(&w("", 1)), TraceValue::one());
        assert_eq!(trace_of_word(&w("s1", 2)), parse_trace("z").unwrap());
        assert_eq!(trace_of_word(&w("t t", 1)), parse_trace("s_2").unwrap());
        assert_eq!(trace_of_word(&w("t^-1", 3)), parse_trace("s_-1").unwrap());
    }

    #[test]
    fn t1_trace() {
        // t_1 = (q-1) t'_1 g_1 + q t'_1; tr(t'_1 g_1) = z s_1, tr(t'_1) = s_1
        assert_eq!(
            trace_of_word(&w("s1 t s1", 2)),
            parse_trace("(q - 1)*z*s_1 + q*s_1").unwrap()
        );
    }

    #[test]
    fn prime_monomials_trace_to_products() {
        let x = AlgebraElement::parse("[t^2 t'_1^-1 t'_2^3 | 1]", 3, Basis::SigmaPrime).unwrap();
        assert_eq!(markov_trace(&x), parse_trace("s_2*s_-1*s_3").unwrap());
    }

    #[test]
    fn delta_simplifies() {
        assert_eq!(delta(), delta_simplified());
    }

    #[test]
    fn invariant_examples() {
        assert_eq!(x_invariant(&w("", 1)).value, XPoly::one());
        assert_eq!(x_invariant(&w("t", 1)).value, parse_xpoly("s_1").unwrap());
        assert_eq!(x_invariant(&w("s1", 2)).value, XPoly::one());
    }
}
