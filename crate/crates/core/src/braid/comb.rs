//! Artin combing: every word of `B_{1,n}` factors as a free word in the
//! loops `t'_j = σ_j … σ_1 t σ_1^-1 … σ_j^-1` times a pure crossing word.

use std::fmt;

use super::{BraidWord, GenKind, Generator};

/// `t'_index^{sign}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LoopLetter {
    pub index: usize,
    pub sign: i8,
}

impl LoopLetter {
    fn inverse(self) -> Self {
        Self {
            sign: -self.sign,
            ..self
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CombedWord {
    pub strands: usize,
    /// Freely reduced word in the `t'_j`.
    pub loops: Vec<LoopLetter>,
    /// Crossing letters only.
    pub tail: BraidWord,
}

fn push_reduced(out: &mut Vec<LoopLetter>, l: LoopLetter) {
    if out.last() == Some(&l.inverse()) {
        out.pop();
    } else {
        out.push(l);
    }
}

/// Image of `l` under conjugation `x ↦ g x g^-1` by a crossing `g`.
fn act(g: Generator, l: LoopLetter, out: &mut Vec<LoopLetter>) {
    let i = g.index;
    let lt = |index: usize, sign: i8| LoopLetter { index, sign };
    let image: Vec<LoopLetter> = match (g.sign > 0, l.index) {
        (true, j) if j == i - 1 => vec![lt(i, 1)],
        (true, j) if j == i => vec![lt(i, -1), lt(i - 1, 1), lt(i, 1)],
        (false, j) if j == i => vec![lt(i - 1, 1)],
        (false, j) if j == i - 1 => vec![lt(i - 1, 1), lt(i, 1), lt(i - 1, -1)],
        _ => vec![lt(l.index, 1)],
    };
    if l.sign > 0 {
        for x in image {
            push_reduced(out, x);
        }
    } else {
        for x in image.into_iter().rev() {
            push_reduced(out, x.inverse());
        }
    }
}

/// Factors `w = τ' · β` with `τ'` a free word in the `t'_j` and `β` a crossing
/// word, by pushing every loop letter to the left through the crossings
/// preceding it.
pub fn comb(w: &BraidWord) -> CombedWord {
    let mut loops: Vec<LoopLetter> = vec![];
    let mut tail: Vec<Generator> = vec![];
    for &g in w.letters() {
        match g.kind {
            GenKind::Crossing => tail.push(g),
            GenKind::Loop => {
                // tail · t^ε = (tail t^ε tail^-1) · tail
                let mut cur = vec![LoopLetter {
                    index: 0,
                    sign: g.sign,
                }];
                for &c in tail.iter().rev() {
                    let mut next = Vec::with_capacity(cur.len() + 2);
                    for &l in &cur {
                        act(c, l, &mut next);
                    }
                    cur = next;
                }
                for l in cur {
                    push_reduced(&mut loops, l);
                }
            }
        }
    }
    CombedWord {
        strands: w.strands(),
        loops,
        tail: BraidWord::new(w.strands(), tail).expect("crossings come from w"),
    }
}

impl CombedWord {
    /// Expands each `t'_j` into `σ_j … σ_1 t σ_1^-1 … σ_j^-1` and appends the
    /// tail.
    pub fn recombine(&self) -> BraidWord {
        let mut letters = vec![];
        for l in &self.loops {
            letters.extend((1..=l.index).rev().map(|j| Generator::s(j, 1)));
            letters.push(Generator::t(l.sign));
            letters.extend((1..=l.index).map(|j| Generator::s(j, -1)));
        }
        letters.extend_from_slice(self.tail.letters());
        BraidWord::new(self.strands, letters).expect("indices below strand count")
    }

    /// Exponent vector of the loops if they appear as a monomial
    /// `t'_{i_1}^{k_1} t'_{i_2}^{k_2} …` with strictly increasing indices.
    pub fn loop_monomial(&self) -> Option<Vec<(usize, i32)>> {
        let mut out: Vec<(usize, i32)> = vec![];
        for l in &self.loops {
            match out.last_mut() {
                Some((i, k)) if *i == l.index => *k += l.sign as i32,
                Some((i, _)) if *i > l.index => return None,
                _ => out.push((l.index, l.sign as i32)),
            }
        }
        Some(out)
    }
}

impl fmt::Display for CombedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .loops
            .iter()
            .map(|l| {
                let base = if l.index == 0 {
                    "t".to_string()
                } else {
                    format!("t'_{}", l.index)
                };
                if l.sign < 0 {
                    format!("{base}^-1")
                } else {
                    base
                }
            })
            .collect();
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{} | ", parts.join(" "))?;
        if self.tail.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", self.tail)
        }
    }
}
