//! Markov-type moves and braid band moves.

use super::{BraidError, BraidWord, Generator};

fn word(strands: usize, letters: Vec<Generator>) -> BraidWord {
    BraidWord::new(strands, letters).expect("indices in range by construction")
}

/// Shifts all indices up by one: `σ_i ↦ σ_{i+1}`, `t ↦ σ_1 t σ_1`,
/// `t^-1 ↦ σ_1^-1 t^-1 σ_1^-1`.
pub fn shift_up(w: &BraidWord) -> BraidWord {
    let mut out = vec![];
    for &g in w.letters() {
        if g.is_loop() {
            out.extend([Generator::s(1, g.sign), g, Generator::s(1, g.sign)]);
        } else {
            out.push(Generator::s(g.index + 1, g.sign));
        }
    }
    word(w.strands() + 1, out)
}

/// `v^-1 w v`.
pub fn conjugate(w: &BraidWord, v: &BraidWord) -> BraidWord {
    v.inverse().concat(w).concat(v)
}

/// `w σ_n^{±1}` on `n + 1` strands.
pub fn stabilize(w: &BraidWord, sign: i8) -> BraidWord {
    let n = w.strands();
    let mut letters = w.letters().to_vec();
    letters.push(Generator::s(n, sign));
    word(n + 1, letters)
}

/// `t^ε w t^-ε`.
pub fn loop_conjugate(w: &BraidWord, eps: i8) -> BraidWord {
    let mut letters = vec![Generator::t(eps)];
    letters.extend_from_slice(w.letters());
    letters.push(Generator::t(-eps));
    word(w.strands(), letters)
}

fn check_twist(p: i64) -> Result<(), BraidError> {
    if p < 1 {
        Err(BraidError::BadTwist(p))
    } else {
        Ok(())
    }
}

/// Band move on the first strand: `t^p σ_1^{±1} w_+`.
pub fn bbm_first(w: &BraidWord, p: i64, sign: i8) -> Result<BraidWord, BraidError> {
    check_twist(p)?;
    let mut letters = vec![Generator::t(1); p as usize];
    letters.push(Generator::s(1, sign));
    letters.extend_from_slice(shift_up(w).letters());
    Ok(word(w.strands() + 1, letters))
}

/// Band move on strand `i`: bring strand `i` to the first position by
/// conjugating with `σ_{i-1} … σ_1`, then slide it.
pub fn bbm_strand(w: &BraidWord, i: usize, p: i64, sign: i8) -> Result<BraidWord, BraidError> {
    let n = w.strands();
    if i < 1 || i > n {
        return Err(BraidError::StrandOutOfRange {
            index: i,
            strands: n,
        });
    }
    check_twist(p)?;
    let c = word(n, (1..i).rev().map(|j| Generator::s(j, 1)).collect());
    bbm_first(&conjugate(w, &c), p, sign)
}

/// Band move on the last strand: `t'_n^p σ_n^{±1} w'`, where `w'` replaces
/// every `t^{±1}` by `(σ_1^-1 … σ_{n-1}^-1 σ_n^2 σ_{n-1} … σ_1 t)^{±1}`.
pub fn bbm_last(w: &BraidWord, p: i64, sign: i8) -> Result<BraidWord, BraidError> {
    check_twist(p)?;
    let n = w.strands();
    let mut letters: Vec<Generator> = (1..=n).rev().map(|j| Generator::s(j, 1)).collect();
    letters.extend(std::iter::repeat(Generator::t(1)).take(p as usize));
    letters.extend((1..=n).map(|j| Generator::s(j, -1)));
    letters.push(Generator::s(n, sign));

    let mut sub: Vec<Generator> = (1..n).map(|j| Generator::s(j, -1)).collect();
    sub.extend([Generator::s(n, 1), Generator::s(n, 1)]);
    sub.extend((1..n).rev().map(|j| Generator::s(j, 1)));
    sub.push(Generator::t(1));
    let sub_inv: Vec<Generator> = sub.iter().rev().map(|g| g.inverse()).collect();

    for &g in w.letters() {
        if g.is_loop() {
            letters.extend(if g.sign > 0 { &sub } else { &sub_inv });
        } else {
            letters.push(g);
        }
    }
    Ok(word(n + 1, letters))
}

/// Band move on strand `i` through the last strand: conjugate by
/// `σ_i^-1 … σ_{n-1}^-1` so that strand `i` ends up last (passing under the
/// strands above it), then apply [`bbm_last`].
pub fn bbm_strand_via_last(
    w: &BraidWord,
    i: usize,
    p: i64,
    sign: i8,
) -> Result<BraidWord, BraidError> {
    let n = w.strands();
    if i < 1 || i > n {
        return Err(BraidError::StrandOutOfRange {
            index: i,
            strands: n,
        });
    }
    let c = word(n, (i..n).map(|j| Generator::s(j, -1)).collect());
    bbm_last(&conjugate(w, &c), p, sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        BraidWord::parse(s, None).unwrap()
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift_up(&w("t")).render(), "s1 t s1");
        assert_eq!(shift_up(&w("s1")).render(), "s2");
        assert_eq!(shift_up(&w("t^-1 s1")).render(), "s1^-1 t^-1 s1^-1 s2");
    }

    #[test]
    fn first_strand_examples() {
        assert_eq!(bbm_first(&w("t"), 2, 1).unwrap().render(), "t t s1 s1 t s1");
        let e = bbm_first(&w(""), 1, -1).unwrap();
        assert_eq!((e.render().as_str(), e.strands()), ("t s1^-1", 2));
        assert_eq!(bbm_first(&w("s1"), 1, 1).unwrap().render(), "t s1 s2");
        assert_eq!(bbm_first(&w("t"), 0, 1), Err(BraidError::BadTwist(0)));
    }

    #[test]
    fn strand_examples() {
        let x = BraidWord::parse("t s1 t s1", None).unwrap();
        assert_eq!(bbm_strand(&x, 1, 3, -1), bbm_first(&x, 3, -1));
        let c = BraidWord::parse("s1^-1 t s1 t s1 s1", None).unwrap();
        assert_eq!(bbm_strand(&x, 2, 1, 1), bbm_first(&c, 1, 1));
        assert!(bbm_strand(&x, 3, 1, 1).is_err());
    }

    #[test]
    fn last_strand_examples() {
        let e = BraidWord::identity(1);
        assert_eq!(bbm_last(&e, 1, 1).unwrap().render(), "s1 t s1^-1 s1");
        let x = bbm_last(&BraidWord::parse("t", Some(2)).unwrap(), 1, 1).unwrap();
        assert_eq!(x.render(), "s2 s1 t s1^-1 s2^-1 s2 s1^-1 s2 s2 s1 t");
        assert_eq!(x.strands(), 3);
    }

    #[test]
    fn band_move_exponent_sum() {
        let x = w("t s1 t^-1 t^-1 s2^-1");
        for sign in [1, -1] {
            let y = bbm_first(&x, 2, sign).unwrap();
            assert_eq!(
                y.exponent_sum(),
                x.exponent_sum() + 2 * x.loop_exponent() + sign as i64
            );
        }
    }
}
