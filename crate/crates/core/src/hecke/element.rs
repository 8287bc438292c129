use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::perm::{JonesWord, Perm};
use super::HeckeError;
use crate::scalars::text::parse_laurent;
use crate::scalars::IntLaurent;

/// Which family of looping elements the loop part of a basis word uses:
/// `t_i = g_i … g_1 t g_1 … g_i` or `t'_i = g_i … g_1 t g_1^-1 … g_i^-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Sigma,
    SigmaPrime,
}

/// Basis word `L_0^{k_0} L_1^{k_1} … L_{n-1}^{k_{n-1}} · T_w` where `L_i` is
/// `t_i` or `t'_i`. Loops are stored densely (`k_i = 0` means absent) and the
/// braiding tail as a permutation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisWord {
    pub loops: Vec<i32>,
    pub perm: Perm,
}

impl BasisWord {
    pub fn identity(n: usize) -> Self {
        Self {
            loops: vec![0; n],
            perm: Perm::identity(n),
        }
    }

    pub fn loops_only(loops: Vec<i32>) -> Self {
        let n = loops.len();
        Self {
            loops,
            perm: Perm::identity(n),
        }
    }

    pub fn strands(&self) -> usize {
        self.loops.len()
    }

    /// Nonzero loops as `(index, exponent)`, indices increasing.
    pub fn loop_list(&self) -> Vec<(usize, i32)> {
        self.loops
            .iter()
            .enumerate()
            .filter(|(_, &k)| k != 0)
            .map(|(i, &k)| (i, k))
            .collect()
    }

    pub fn jones(&self) -> JonesWord {
        self.perm.jones()
    }

    /// Highest index carrying a loop or a crossing, if any.
    pub fn top_index(&self) -> Option<usize> {
        let l = self.loops.iter().rposition(|&k| k != 0);
        let c = Some(self.jones().max_index()).filter(|&m| m > 0);
        l.max(c)
    }

    pub fn render(&self, basis: Basis) -> String {
        let loops = self.loop_list();
        let lp = if loops.is_empty() {
            "1".to_string()
        } else {
            loops
                .iter()
                .map(|&(i, k)| {
                    let base = match (i, basis) {
                        (0, _) => "t".to_string(),
                        (_, Basis::Sigma) => format!("t_{i}"),
                        (_, Basis::SigmaPrime) => format!("t'_{i}"),
                    };
                    if k == 1 {
                        base
                    } else {
                        format!("{base}^{k}")
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!("{lp} | {}", self.jones())
    }

    /// Parses `t^2 t_1^-1 | g1 . g2 g1` (or the `t'_i` form); returns the
    /// basis it is written in, if the loops name one.
    pub fn parse(s: &str, n: usize) -> Result<(Self, Option<Basis>), HeckeError> {
        let bad = || HeckeError::BadBasisWord(s.to_string());
        let (lp, tail) = s.split_once('|').ok_or_else(bad)?;
        let mut loops = vec![0; n];
        let mut basis = None;
        let mut last: Option<usize> = None;
        let lp = lp.trim();
        if lp != "1" {
            for tok in lp.split_whitespace() {
                let (base, k) = match tok.split_once('^') {
                    Some((b, e)) => (b, e.parse::<i32>().map_err(|_| bad())?),
                    None => (tok, 1),
                };
                let (i, b) = if base == "t" {
                    (0, None)
                } else if let Some(r) = base.strip_prefix("t'_") {
                    (
                        r.parse::<usize>().map_err(|_| bad())?,
                        Some(Basis::SigmaPrime),
                    )
                } else if let Some(r) = base.strip_prefix("t_") {
                    (r.parse::<usize>().map_err(|_| bad())?, Some(Basis::Sigma))
                } else {
                    return Err(bad());
                };
                if i >= n || k == 0 || last.is_some_and(|l| l >= i) || (i == 0 && b.is_some()) {
                    return Err(bad());
                }
                if b.is_some() {
                    if basis.is_some() && basis != b {
                        return Err(bad());
                    }
                    basis = b;
                }
                last = Some(i);
                loops[i] = k;
            }
        }
        let j = JonesWord::parse(tail).ok_or_else(bad)?;
        if j.max_index() >= n.max(1) {
            return Err(bad());
        }
        Ok((
            Self {
                loops,
                perm: j.to_perm(n),
            },
            basis,
        ))
    }
}

impl fmt::Debug for BasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(Basis::Sigma))
    }
}

/// Linear combination of basis words of one basis of `H_{1,n}(q)`, with
/// coefficients in `Z[q^±1]`.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    strands: usize,
    basis: Basis,
    terms: BTreeMap<BasisWord, IntLaurent>,
}

impl AlgebraElement {
    pub fn zero(strands: usize, basis: Basis) -> Self {
        Self {
            strands,
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(strands: usize, basis: Basis) -> Self {
        Self::word(BasisWord::identity(strands), basis)
    }

    pub fn word(w: BasisWord, basis: Basis) -> Self {
        let mut e = Self::zero(w.strands(), basis);
        e.add_term(w, IntLaurent::one());
        e
    }

    pub fn from_terms(
        strands: usize,
        basis: Basis,
        terms: impl IntoIterator<Item = (BasisWord, IntLaurent)>,
    ) -> Self {
        let mut e = Self::zero(strands, basis);
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisWord, &IntLaurent)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &BasisWord) -> IntLaurent {
        self.terms.get(w).cloned().unwrap_or_else(IntLaurent::zero)
    }

    pub fn add_term(&mut self, w: BasisWord, c: IntLaurent) {
        assert_eq!(
            w.strands(),
            self.strands,
            "basis word on wrong strand count"
        );
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
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

    fn check_compatible(&self, o: &Self) -> Result<(), HeckeError> {
        if self.strands != o.strands {
            return Err(HeckeError::StrandMismatch(self.strands, o.strands));
        }
        if self.basis != o.basis {
            return Err(HeckeError::BasisMismatch);
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self, HeckeError> {
        self.check_compatible(o)?;
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, HeckeError> {
        self.add(&o.scale(&IntLaurent::constant(-1)))
    }

    pub fn scale(&self, k: &IntLaurent) -> Self {
        let mut r = Self::zero(self.strands, self.basis);
        if k.is_zero() {
            return r;
        }
        for (w, c) in &self.terms {
            r.add_term(w.clone(), c * k);
        }
        r
    }

    /// Re-embeds into `H_{1,m}`, `m ≥ n`.
    pub fn embed(&self, m: usize) -> Self {
        assert!(m >= self.strands);
        let mut r = Self::zero(m, self.basis);
        for (w, c) in &self.terms {
            let mut loops = w.loops.clone();
            loops.resize(m, 0);
            let mut img = w.perm.images().to_vec();
            img.extend(self.strands as u8..m as u8);
            r.add_term(
                BasisWord {
                    loops,
                    perm: Perm::from_images(img).expect("extended permutation"),
                },
                c.clone(),
            );
        }
        r
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(w, c)| {
                let word = w.render(self.basis);
                if c.is_one() {
                    format!("[{word}]")
                } else {
                    format!("({c})*[{word}]")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Inverse of [`render`](Self::render).
    pub fn parse(s: &str, strands: usize, basis: Basis) -> Result<Self, HeckeError> {
        let bad = |m: &str| HeckeError::BadElement(format!("{m}: {s}"));
        let mut e = Self::zero(strands, basis);
        let s = s.trim();
        if s == "0" {
            return Ok(e);
        }
        let b = s.as_bytes();
        let mut i = 0;
        loop {
            let coeff = if b.get(i) == Some(&b'(') {
                let mut depth = 0;
                let start = i + 1;
                loop {
                    match b.get(i) {
                        Some(b'(') => depth += 1,
                        Some(b')') => {
                            depth -= 1;
                            if depth == 0 {
                                break;
                            }
                        }
                        None => return Err(bad("unbalanced parentheses")),
                        _ => {}
                    }
                    i += 1;
                }
                let c = parse_laurent(&s[start..i]).map_err(|e| bad(&e.to_string()))?;
                i += 1;
                if b.get(i) != Some(&b'*') {
                    return Err(bad("expected '*'"));
                }
                i += 1;
                c
            } else {
                IntLaurent::constant(BigInt::from(1))
            };
            if b.get(i) != Some(&b'[') {
                return Err(bad("expected '['"));
            }
            let close = s[i..].find(']').ok_or_else(|| bad("expected ']'"))? + i;
            let (w, wb) = BasisWord::parse(&s[i + 1..close], strands)?;
            if wb.is_some_and(|wb| wb != basis) {
                return Err(bad("loop symbols of the other basis"));
            }
            e.add_term(w, coeff);
            i = close + 1;
            if i == b.len() {
                return Ok(e);
            }
            if !s[i..].starts_with(" + ") {
                return Err(bad("expected ' + '"));
            }
            i += 3;
        }
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}
