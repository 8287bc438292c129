//! Mixed braid words in `B_{1,n}`: the loop generator `t` (winding around
//! the fixed strand) and crossings `σ_1 … σ_{n-1}` of the `n` moving strands.

mod artin;
mod comb;
mod moves;

use std::fmt;

use rand::Rng;
use thiserror::Error;

pub use artin::{group_equal, ArtinImage};
pub use comb::{comb, CombedWord, LoopLetter};
pub use moves::{
    bbm_first, bbm_last, bbm_strand, bbm_strand_via_last, conjugate, loop_conjugate, shift_up,
    stabilize,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("unknown token {token:?} at position {pos}")]
    UnknownToken { pos: usize, token: String },
    #[error("crossing s{index} at position {pos} needs more than {strands} strands")]
    IndexOutOfRange {
        pos: usize,
        index: usize,
        strands: usize,
    },
    #[error("strand index {index} outside 1..={strands}")]
    StrandOutOfRange { index: usize, strands: usize },
    #[error("band move twist count must be at least 1, got {0}")]
    BadTwist(i64),
    #[error("strand count must be at least 1")]
    NoStrands,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    Loop,
    Crossing,
}

/// One letter: `t^{±1}` (index 0) or `σ_i^{±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub kind: GenKind,
    pub index: usize,
    pub sign: i8,
}

impl Generator {
    pub fn t(sign: i8) -> Self {
        Self {
            kind: GenKind::Loop,
            index: 0,
            sign,
        }
    }

    pub fn s(index: usize, sign: i8) -> Self {
        assert!(index >= 1, "crossings are numbered from 1");
        Self {
            kind: GenKind::Crossing,
            index,
            sign,
        }
    }

    pub fn inverse(self) -> Self {
        Self {
            sign: -self.sign,
            ..self
        }
    }

    pub fn is_loop(self) -> bool {
        self.kind == GenKind::Loop
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::Loop => write!(f, "t")?,
            GenKind::Crossing => write!(f, "s{}", self.index)?,
        }
        if self.sign < 0 {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A word in the generators of `B_{1,n}` with an explicit strand count.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Generator>,
}

impl BraidWord {
    /// Builds a word, checking crossing indices against the strand count.
    pub fn new(strands: usize, letters: Vec<Generator>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for (pos, g) in letters.iter().enumerate() {
            if g.kind == GenKind::Crossing && g.index >= strands {
                return Err(BraidError::IndexOutOfRange {
                    pos,
                    index: g.index,
                    strands,
                });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        Self::new(strands, vec![]).expect("empty word")
    }

    /// Parses whitespace-separated tokens `t`, `t^-1`, `s<i>`, `s<i>^-1`.
    /// Without `strands`, the count is `1 + max crossing index`.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self, BraidError> {
        let mut letters = vec![];
        let mut positions = vec![];
        let mut rest = text;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            let tok = &tail[..len];
            let pos = offset + start;
            letters.push(parse_token(tok).ok_or_else(|| BraidError::UnknownToken {
                pos,
                token: tok.to_string(),
            })?);
            positions.push(pos);
            offset += start + len;
            rest = &tail[len..];
        }
        let inferred = 1 + letters
            .iter()
            .filter(|g| g.kind == GenKind::Crossing)
            .map(|g| g.index)
            .max()
            .unwrap_or(0);
        let strands = strands.unwrap_or(inferred);
        Self::new(strands, letters).map_err(|e| match e {
            BraidError::IndexOutOfRange {
                pos,
                index,
                strands,
            } => BraidError::IndexOutOfRange {
                pos: positions[pos],
                index,
                strands,
            },
            e => e,
        })
    }

    pub fn render(&self) -> String {
        self.to_string()
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Same letters in a larger ambient group.
    pub fn with_strands(&self, strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, self.letters.clone())
    }

    /// Sum of the signs of the crossings.
    pub fn exponent_sum(&self) -> i64 {
        self.letters
            .iter()
            .filter(|g| g.kind == GenKind::Crossing)
            .map(|g| g.sign as i64)
            .sum()
    }

    /// Net exponent of `t`.
    pub fn loop_exponent(&self) -> i64 {
        self.letters
            .iter()
            .filter(|g| g.is_loop())
            .map(|g| g.sign as i64)
            .sum()
    }

    /// Cancels adjacent inverse pairs.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Generator> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if out.last() == Some(&g.inverse()) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        Self {
            strands: self.strands,
            letters: out,
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    /// Concatenation; the result lives on the larger strand count.
    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self {
            strands: self.strands.max(other.strands),
            letters,
        }
    }

    pub fn push(&mut self, g: Generator) -> Result<(), BraidError> {
        if g.kind == GenKind::Crossing && g.index >= self.strands {
            return Err(BraidError::IndexOutOfRange {
                pos: self.letters.len(),
                index: g.index,
                strands: self.strands,
            });
        }
        self.letters.push(g);
        Ok(())
    }

    /// Uniformly random letters (including `t^{±1}`) of the given length.
    pub fn random<R: Rng>(rng: &mut R, strands: usize, len: usize) -> Self {
        let letters = (0..len)
            .map(|_| {
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                let i = rng.gen_range(0..strands);
                if i == 0 {
                    Generator::t(sign)
                } else {
                    Generator::s(i, sign)
                }
            })
            .collect();
        Self::new(strands, letters).expect("indices in range")
    }
}

fn parse_token(tok: &str) -> Option<Generator> {
    let (base, sign) = match tok.strip_suffix("^-1") {
        Some(b) => (b, -1),
        None => (tok, 1),
    };
    if base == "t" {
        return Some(Generator::t(sign));
    }
    let idx = base.strip_prefix('s')?;
    if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let i: usize = idx.parse().ok()?;
    (i >= 1).then(|| Generator::s(i, sign))
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
