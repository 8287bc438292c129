//! Loop monomials of the solid torus skein module, their ordering, and the
//! braid band move equations presenting the skein module of `L(p,1)`.
//!
//! A loop monomial `t^{k_0} t_1^{k_1} … t_m^{k_m}` is stored as its exponent
//! list. It lies in `L` when no exponent is zero (indices are then
//! consecutive from 0 by construction) and in `Λ` when in addition the
//! exponents are non-increasing.

mod system;

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::braid::{BraidError, BraidWord};
use crate::hecke::t_loop_letters;
use crate::scalars::ModularError;

pub use system::{
    export_system, generate_equation, rank_estimate, SignSet, SkeinEquation, SkeinSystem,
    StrandSet, SystemParams, ENGINE_VERSION,
};

#[derive(Debug, Error)]
pub enum SkeinError {
    #[error("zero exponent at index {0}")]
    ZeroExponent(usize),
    #[error("strand {strand} out of range 1..={strands}")]
    StrandOutOfRange { strand: usize, strands: usize },
    #[error("surgery coefficient must be at least 1, got {0}")]
    BadSurgery(i64),
    #[error("bad monomial '{0}'")]
    BadMonomial(String),
    #[error("malformed system document: {0}")]
    BadDocument(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Modular(#[from] ModularError),
}

/// `t^{k_0} t_1^{k_1} … t_m^{k_m}` with every `k_i ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LambdaMonomial {
    exps: Vec<i32>,
}

impl LambdaMonomial {
    pub fn new(exps: Vec<i32>) -> Result<Self, SkeinError> {
        if let Some(i) = exps.iter().position(|&k| k == 0) {
            return Err(SkeinError::ZeroExponent(i));
        }
        Ok(Self { exps })
    }

    pub fn empty() -> Self {
        Self { exps: vec![] }
    }

    pub fn exponents(&self) -> &[i32] {
        &self.exps
    }

    pub fn level(&self) -> i64 {
        self.exps.iter().map(|&k| k as i64).sum()
    }

    /// Number of moving strands of the monomial's braid (at least one).
    pub fn strands(&self) -> usize {
        self.exps.len().max(1)
    }

    /// Exponents are non-increasing.
    pub fn is_lambda(&self) -> bool {
        self.exps.windows(2).all(|w| w[0] >= w[1])
    }

    /// `(index, exponent)` pairs.
    pub fn loops(&self) -> Vec<(usize, i32)> {
        self.exps.iter().copied().enumerate().collect()
    }

    /// The mixed braid `t^{k_0} t_1^{k_1} …` with
    /// `t_i = σ_i … σ_1 t σ_1 … σ_i`.
    pub fn word(&self) -> BraidWord {
        let letters = self
            .loops()
            .into_iter()
            .flat_map(|(i, k)| t_loop_letters(i, k))
            .collect();
        BraidWord::new(self.strands(), letters).expect("indices below strand count")
    }

    /// Parses `t^2 t_1 t_2^-1`; `1` is the empty monomial.
    pub fn parse(s: &str) -> Result<Self, SkeinError> {
        let bad = || SkeinError::BadMonomial(s.to_string());
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Self::empty());
        }
        let mut exps = vec![];
        for tok in s.split_whitespace() {
            let (base, k) = match tok.split_once('^') {
                Some((b, e)) => (b, e.parse::<i32>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let i = match base {
                "t" => 0,
                _ => base
                    .strip_prefix("t_")
                    .and_then(|r| r.parse::<usize>().ok())
                    .ok_or_else(bad)?,
            };
            if i != exps.len() || k == 0 {
                return Err(bad());
            }
            exps.push(k);
        }
        Ok(Self { exps })
    }
}

impl fmt::Display for LambdaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (i, &k) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match i {
                0 => write!(f, "t")?,
                _ => write!(f, "t_{i}")?,
            }
            if k != 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

impl PartialOrd for LambdaMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LambdaMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_order(&self.loops(), &other.loops())
    }
}

/// Orders loop monomials given as `(index, exponent)` lists with strictly
/// increasing indices and nonzero exponents (gaps allowed):
///
/// 1. smaller exponent sum is smaller;
/// 2. then smaller highest index is smaller (the empty monomial lowest);
/// 3. then at the first differing index the monomial with the *smaller*
///    index is the *greater* one;
/// 4. then compare exponents from the highest index down: at the first
///    difference the smaller `|k|` is smaller, and for `k = -λ` the
///    positive one is smaller.
pub fn compare_order(w: &[(usize, i32)], s: &[(usize, i32)]) -> Ordering {
    let sum = |v: &[(usize, i32)]| v.iter().map(|&(_, k)| k as i64).sum::<i64>();
    let ind = |v: &[(usize, i32)]| v.last().map(|&(i, _)| i);
    sum(w)
        .cmp(&sum(s))
        .then_with(|| ind(w).cmp(&ind(s)))
        .then_with(|| {
            w.iter()
                .zip(s)
                .find(|(a, b)| a.0 != b.0)
                .map_or(Ordering::Equal, |(a, b)| b.0.cmp(&a.0))
        })
        .then_with(|| {
            w.iter()
                .rev()
                .zip(s.iter().rev())
                .find(|(a, b)| a.1 != b.1)
                .map_or(Ordering::Equal, |(a, b)| {
                    a.1.abs().cmp(&b.1.abs()).then(b.1.cmp(&a.1))
                })
        })
}

/// Loop list with consecutive indices from 0 and no zero exponent.
pub fn is_in_l(loops: &[(usize, i32)]) -> bool {
    loops
        .iter()
        .enumerate()
        .all(|(j, &(i, k))| i == j && k != 0)
}

/// [`is_in_l`] with non-increasing exponents.
pub fn is_in_lambda(loops: &[(usize, i32)]) -> bool {
    is_in_l(loops) && loops.windows(2).all(|w| w[0].1 >= w[1].1)
}

/// All `Λ` monomials of exponent sum `level` with highest index at most
/// `max_index` and every `|k_i| ≤ max_abs_exp`, in ascending order.
pub fn enumerate_lambda(level: i64, max_index: usize, max_abs_exp: u32) -> Vec<LambdaMonomial> {
    fn go(
        prefix: &mut Vec<i32>,
        cap: i32,
        rest: i64,
        slots: usize,
        kmax: i32,
        out: &mut Vec<LambdaMonomial>,
    ) {
        if rest == 0 && !prefix.is_empty() {
            out.push(LambdaMonomial {
                exps: prefix.clone(),
            });
        }
        if slots == 0 {
            return;
        }
        // each later exponent lies in [-kmax, k], and there may be none
        for k in (-kmax..=cap.min(kmax)).rev() {
            if k == 0 {
                continue;
            }
            let after = rest - k as i64;
            let left = slots as i64 - 1;
            if after > (left * k as i64).max(0) || after < -left * kmax as i64 {
                continue;
            }
            prefix.push(k);
            go(prefix, k, after, slots - 1, kmax, out);
            prefix.pop();
        }
    }
    let kmax = max_abs_exp.min(i32::MAX as u32) as i32;
    let mut out = vec![];
    if level == 0 {
        out.push(LambdaMonomial::empty());
    }
    go(&mut vec![], kmax, level, max_index + 1, kmax, &mut out);
    out.sort();
    out
}
