//! Normalization into the basis `t_0^{k_0} … t_{n-1}^{k_{n-1}} · T_w`.
//!
//! Words are read right to left and each letter multiplies the current
//! element on the left. The looping elements `t_i` commute, `g_i` commutes
//! with `t_j` for `j ∉ {i-1, i}`, and `g_i t_{i-1} t_i = t_{i-1} t_i g_i`,
//! so with `a = t_{i-1}`, `b = t_i`:
//!
//! ```text
//! g a^m b^n = q^{n-m} a^n b^m g + (q-1) D
//! D =  Σ_{j<n-m} q^j a^{m+j} b^{n-j}            (n > m)
//! D = -Σ_{j<m-n} q^{n-m+j} a^{n+j} b^{m-j}      (m > n)
//! ```
//!
//! after which `g_i T_w` is expanded in the finite Hecke algebra.

use std::collections::HashMap;

use rand::Rng;

use super::element::{AlgebraElement, Basis, BasisWord};
use super::perm::Perm;
use super::HeckeError;
use crate::braid::{BraidWord, GenKind, Generator};
use crate::cache::Memo;
use crate::scalars::IntLaurent;

pub(crate) type Terms = HashMap<BasisWord, IntLaurent>;

pub(crate) fn add_to(map: &mut Terms, w: BasisWord, c: IntLaurent) {
    if c.is_zero() {
        return;
    }
    use std::collections::hash_map::Entry;
    match map.entry(w) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn qm1() -> IntLaurent {
    IntLaurent::q() - IntLaurent::one()
}

/// `g_i T_w`.
pub(crate) fn hecke_left(perm: &Perm, i: usize) -> Vec<(Perm, IntLaurent)> {
    let s = perm.left_mul_s(i);
    if perm.left_ascent(i) {
        vec![(s, IntLaurent::one())]
    } else {
        vec![(perm.clone(), qm1()), (s, IntLaurent::q())]
    }
}

/// `T_w g_i`.
pub(crate) fn hecke_right(perm: &Perm, i: usize) -> Vec<(Perm, IntLaurent)> {
    let s = perm.right_mul_s(i);
    if perm.right_ascent(i) {
        vec![(s, IntLaurent::one())]
    } else {
        vec![(perm.clone(), qm1()), (s, IntLaurent::q())]
    }
}

/// Adds `c · g_i · w` to `out`.
fn left_mul_g_word(w: &BasisWord, i: usize, c: &IntLaurent, out: &mut Terms) {
    let (m, n) = (w.loops[i - 1], w.loops[i]);
    let with = |a: i32, b: i32| {
        let mut l = w.loops.clone();
        l[i - 1] = a;
        l[i] = b;
        l
    };
    // leading part: q^{n-m} a^n b^m g_i T_w
    let lead = c * &IntLaurent::q_pow(n - m);
    let loops = with(n, m);
    for (p, k) in hecke_left(&w.perm, i) {
        add_to(
            out,
            BasisWord {
                loops: loops.clone(),
                perm: p,
            },
            &lead * &k,
        );
    }
    let cq = c * &qm1();
    if n > m {
        for j in 0..n - m {
            add_to(
                out,
                BasisWord {
                    loops: with(m + j, n - j),
                    perm: w.perm.clone(),
                },
                &cq * &IntLaurent::q_pow(j),
            );
        }
    } else if m > n {
        for j in 0..m - n {
            add_to(
                out,
                BasisWord {
                    loops: with(n + j, m - j),
                    perm: w.perm.clone(),
                },
                -(&cq * &IntLaurent::q_pow(n - m + j)),
            );
        }
    }
}

/// `g · x` for one letter `g`.
pub(crate) fn left_mul_letter(x: &Terms, g: Generator) -> Terms {
    let mut out = Terms::with_capacity(x.len() * 2);
    match (g.kind, g.sign > 0) {
        (GenKind::Loop, _) => {
            for (w, c) in x {
                let mut w = w.clone();
                w.loops[0] += g.sign as i32;
                add_to(&mut out, w, c.clone());
            }
        }
        (GenKind::Crossing, true) => {
            for (w, c) in x {
                left_mul_g_word(w, g.index, c, &mut out);
            }
        }
        (GenKind::Crossing, false) => {
            // g^-1 = q^-1 g + (q^-1 - 1)
            let qi = IntLaurent::q_pow(-1);
            let k = &qi - &IntLaurent::one();
            for (w, c) in x {
                left_mul_g_word(w, g.index, &(c * &qi), &mut out);
                add_to(&mut out, w.clone(), c * &k);
            }
        }
    }
    out
}

pub(crate) fn identity_terms(n: usize) -> Terms {
    let mut t = Terms::new();
    t.insert(BasisWord::identity(n), IntLaurent::one());
    t
}

pub(crate) fn into_element(n: usize, basis: Basis, t: Terms) -> AlgebraElement {
    AlgebraElement::from_terms(n, basis, t)
}

pub(crate) fn to_terms(x: &AlgebraElement) -> Terms {
    x.terms().map(|(w, c)| (w.clone(), c.clone())).collect()
}

/// Left-multiplies `x` by a word (rightmost letter first).
pub(crate) fn left_mul_word(x: Terms, letters: &[Generator]) -> Terms {
    letters
        .iter()
        .rev()
        .fold(x, |acc, &g| left_mul_letter(&acc, g))
}

static PI_CACHE: Memo<(usize, Vec<Generator>), AlgebraElement> = Memo::new();

/// Image of a braid word in `H_{1,n}(q)`, in the `t_i` basis.
pub fn pi_normalize(w: &BraidWord) -> AlgebraElement {
    let n = w.strands();
    PI_CACHE.get_or_compute((n, w.letters().to_vec()), || {
        into_element(
            n,
            Basis::Sigma,
            left_mul_word(identity_terms(n), w.letters()),
        )
    })
}

/// Same result as [`pi_normalize`], computed along a random route: the word
/// is cut into random pieces that are normalized separately and multiplied
/// back together in a random association order. No caches are consulted.
pub fn pi_normalize_randomized<R: Rng>(w: &BraidWord, rng: &mut R) -> AlgebraElement {
    let n = w.strands();
    let letters = w.letters();
    let mut pieces: Vec<AlgebraElement> = vec![];
    let mut start = 0;
    while start < letters.len() {
        let len = rng.gen_range(1..=letters.len() - start);
        let chunk = &letters[start..start + len];
        pieces.push(into_element(
            n,
            Basis::Sigma,
            left_mul_word(identity_terms(n), chunk),
        ));
        start += len;
    }
    if pieces.is_empty() {
        return AlgebraElement::one(n, Basis::Sigma);
    }
    while pieces.len() > 1 {
        let k = rng.gen_range(0..pieces.len() - 1);
        let y = pieces.remove(k + 1);
        let x = &pieces[k];
        pieces[k] = multiply_normalize(x, &y).expect("same strands");
    }
    pieces.pop().unwrap()
}

/// Product of two elements in the `t_i` basis.
pub fn multiply_normalize(
    x: &AlgebraElement,
    y: &AlgebraElement,
) -> Result<AlgebraElement, HeckeError> {
    if x.strands() != y.strands() {
        return Err(HeckeError::StrandMismatch(x.strands(), y.strands()));
    }
    if x.basis() != Basis::Sigma || y.basis() != Basis::Sigma {
        return Err(HeckeError::BasisMismatch);
    }
    let n = x.strands();
    let ty = to_terms(y);
    let mut out = Terms::new();
    // group x's terms by tail so each T_v · y is computed once
    let mut by_perm: HashMap<&Perm, Vec<(&Vec<i32>, &IntLaurent)>> = HashMap::new();
    for (w, c) in x.terms() {
        by_perm.entry(&w.perm).or_default().push((&w.loops, c));
    }
    for (perm, loops) in by_perm {
        let letters: Vec<Generator> = perm
            .reduced_word()
            .into_iter()
            .map(|i| Generator::s(i, 1))
            .collect();
        let vy = left_mul_word(ty.clone(), &letters);
        for (e, c) in loops {
            for (w, d) in &vy {
                let mut w = w.clone();
                for (a, b) in w.loops.iter_mut().zip(e) {
                    *a += b;
                }
                add_to(&mut out, w, c * d);
            }
        }
    }
    Ok(into_element(n, Basis::Sigma, out))
}

/// `x · T_v` for an element in either basis (only tails change).
pub fn right_mul_perm(x: &AlgebraElement, v: &Perm) -> AlgebraElement {
    let word = v.reduced_word();
    let mut cur = to_terms(x);
    for i in word {
        let mut next = Terms::with_capacity(cur.len() * 2);
        for (w, c) in &cur {
            for (p, k) in hecke_right(&w.perm, i) {
                add_to(
                    &mut next,
                    BasisWord {
                        loops: w.loops.clone(),
                        perm: p,
                    },
                    c * &k,
                );
            }
        }
        cur = next;
    }
    into_element(x.strands(), x.basis(), cur)
}

/// Letters of `t_i^k` as a braid word: `(g_i … g_1 t^{±1} g_1 … g_i)^{|k|}`
/// with all crossings inverted when `k < 0`.
pub fn t_loop_letters(i: usize, k: i32) -> Vec<Generator> {
    let s: i8 = if k > 0 { 1 } else { -1 };
    let mut one: Vec<Generator> = (1..=i).rev().map(|j| Generator::s(j, s)).collect();
    one.push(Generator::t(s));
    one.extend((1..=i).map(|j| Generator::s(j, s)));
    one.iter()
        .copied()
        .cycle()
        .take(one.len() * k.unsigned_abs() as usize)
        .collect()
}

/// Letters of `t'_i^k`: `g_i … g_1 t^k g_1^-1 … g_i^-1`.
pub fn t_prime_loop_letters(i: usize, k: i32) -> Vec<Generator> {
    let mut out: Vec<Generator> = (1..=i).rev().map(|j| Generator::s(j, 1)).collect();
    let s: i8 = if k > 0 { 1 } else { -1 };
    out.extend(std::iter::repeat(Generator::t(s)).take(k.unsigned_abs() as usize));
    out.extend((1..=i).map(|j| Generator::s(j, -1)));
    out
}

/// The literal braid word of a basis word.
pub fn basis_word_letters(w: &BasisWord, basis: Basis) -> BraidWord {
    let mut letters = vec![];
    for (i, k) in w.loop_list() {
        letters.extend(match basis {
            Basis::Sigma => t_loop_letters(i, k),
            Basis::SigmaPrime => t_prime_loop_letters(i, k),
        });
    }
    letters.extend(
        w.perm
            .reduced_word()
            .into_iter()
            .map(|i| Generator::s(i, 1)),
    );
    BraidWord::new(w.strands(), letters).expect("indices below strand count")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::text::parse_laurent;

    fn w(s: &str, n: usize) -> BraidWord {
        BraidWord::parse(s, Some(n)).unwrap()
    }

    fn el(s: &str, n: usize) -> AlgebraElement {
        AlgebraElement::parse(s, n, Basis::Sigma).unwrap()
    }

    #[test]
    fn quadratic_relation() {
        assert_eq!(
            pi_normalize(&w("s1 s1", 2)),
            el("(q - 1)*[1 | g1] + (q)*[1 | 1]", 2)
        );
    }

    #[test]
    fn inverse_crossing() {
        let x = pi_normalize(&w("s1^-1", 2));
        let expected = AlgebraElement::from_terms(
            2,
            Basis::Sigma,
            [
                (
                    BasisWord::parse("1 | g1", 2).unwrap().0,
                    parse_laurent("q^-1").unwrap(),
                ),
                (
                    BasisWord::parse("1 | 1", 2).unwrap().0,
                    parse_laurent("q^-1 - 1").unwrap(),
                ),
            ],
        );
        assert_eq!(x, expected);
    }

    #[test]
    fn looping_elements_are_basis_words() {
        assert_eq!(pi_normalize(&w("s1 t s1", 2)), el("[t_1 | 1]", 2));
        assert_eq!(pi_normalize(&w("s1 t s1 t", 2)), el("[t t_1 | 1]", 2));
        assert_eq!(pi_normalize(&w("s2 s1 t s1 s2", 3)), el("[t_2 | 1]", 3));
    }

    #[test]
    fn loops_commute() {
        let a = pi_normalize(&w("s1 t s1 t", 3));
        let b = pi_normalize(&w("t s1 t s1", 3));
        assert_eq!(a, b);
        let c = pi_normalize(&w("s2 s1 t s1 s2 s1 t s1", 3));
        let d = pi_normalize(&w("s1 t s1 s2 s1 t s1 s2", 3));
        assert_eq!(c, d);
    }

    #[test]
    fn product_matches_concatenation() {
        let u = w("t s1 s2^-1 t^-1 s1", 3);
        let v = w("s2 t s1^-1 s1^-1 t", 3);
        let uv = pi_normalize(&u.concat(&v));
        assert_eq!(
            multiply_normalize(&pi_normalize(&u), &pi_normalize(&v)).unwrap(),
            uv
        );
    }
}
