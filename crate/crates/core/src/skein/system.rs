//! Equations `X(τ) = X(bbm_i(τ))` over bounded sets of `Λ` monomials, their
//! JSON interchange form, and modular rank estimates.

use std::collections::BTreeSet;
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{enumerate_lambda, LambdaMonomial, SkeinError};
use crate::braid::bbm_strand;
use crate::scalars::modular::{inv_mod, mul_mod, sample_point};
use crate::scalars::text::{parse_laurent, render_laurent};
use crate::scalars::{ModularError, RationalFn, SMonomial, XPoly, XScalar};
use crate::trace::x_invariant;

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Which strands of each monomial receive a band move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StrandSet {
    All,
    First,
}

/// Which crossing signs are used in band moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignSet {
    pub plus: bool,
    pub minus: bool,
}

impl SignSet {
    pub const BOTH: Self = Self {
        plus: true,
        minus: true,
    };

    /// In emission order: `+` before `-`.
    pub fn signs(self) -> Vec<i8> {
        let mut v = vec![];
        if self.plus {
            v.push(1);
        }
        if self.minus {
            v.push(-1);
        }
        v
    }

    /// Parses `+,-`, `+`, `-` (also `both`).
    pub fn parse(s: &str) -> Option<Self> {
        if s.trim() == "both" {
            return Some(Self::BOTH);
        }
        let mut r = Self {
            plus: false,
            minus: false,
        };
        for part in s.split(',') {
            match part.trim() {
                "+" => r.plus = true,
                "-" => r.minus = true,
                _ => return None,
            }
        }
        Some(r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemParams {
    /// Surgery coefficient.
    pub p: i64,
    /// Inclusive range of levels (exponent sums); empty when `start > end`.
    pub levels: (i64, i64),
    pub max_index: usize,
    pub max_exp: u32,
    pub strands: StrandSet,
    pub signs: SignSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinEquation {
    pub p: i64,
    pub tau: LambdaMonomial,
    pub strand: usize,
    pub sign: i8,
    pub lhs: XPoly,
    pub rhs: XPoly,
}

impl SkeinEquation {
    /// `lhs - rhs`, the linear form in the `s`-monomials.
    pub fn difference(&self) -> XPoly {
        self.lhs.sub(&self.rhs)
    }
}

/// `X(τ) = X(bbm_i(τ))` with a band move of `p` twists on strand `i`.
pub fn generate_equation(
    tau: &LambdaMonomial,
    strand: usize,
    sign: i8,
    p: i64,
) -> Result<SkeinEquation, SkeinError> {
    if strand < 1 || strand > tau.strands() {
        return Err(SkeinError::StrandOutOfRange {
            strand,
            strands: tau.strands(),
        });
    }
    if p < 1 {
        return Err(SkeinError::BadSurgery(p));
    }
    let w = tau.word();
    Ok(SkeinEquation {
        p,
        tau: tau.clone(),
        strand,
        sign: sign.signum(),
        lhs: x_invariant(&w).value,
        rhs: x_invariant(&bbm_strand(&w, strand, p, sign.signum())?).value,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinSystem {
    pub params: SystemParams,
    pub equations: Vec<SkeinEquation>,
}

/// Generates every equation within the bounds, ordered by `(τ, strand, sign)`.
pub fn export_system(params: &SystemParams) -> Result<SkeinSystem, SkeinError> {
    if params.p < 1 {
        return Err(SkeinError::BadSurgery(params.p));
    }
    let (lo, hi) = params.levels;
    let mut jobs = vec![];
    for level in lo..=hi {
        for tau in enumerate_lambda(level, params.max_index, params.max_exp) {
            let strands = match params.strands {
                StrandSet::All => tau.strands(),
                StrandSet::First => 1,
            };
            for i in 1..=strands {
                for s in params.signs.signs() {
                    jobs.push((tau.clone(), i, s));
                }
            }
        }
    }
    let mut equations = jobs
        .par_iter()
        .map(|(tau, i, s)| generate_equation(tau, *i, *s, params.p))
        .collect::<Result<Vec<_>, _>>()?;
    equations.sort_by(|a, b| {
        a.tau
            .cmp(&b.tau)
            .then(a.strand.cmp(&b.strand))
            .then(b.sign.cmp(&a.sign))
    });
    Ok(SkeinSystem {
        params: params.clone(),
        equations,
    })
}

// ---- interchange format ----

#[derive(Serialize, Deserialize)]
struct Document {
    header: Header,
    equations: Vec<Record>,
}

#[derive(Serialize, Deserialize)]
struct Header {
    format: String,
    engine_version: String,
    truncated: bool,
    params: ParamsDoc,
    conventions: Conventions,
}

#[derive(Serialize, Deserialize)]
struct ParamsDoc {
    p: i64,
    levels: [i64; 2],
    max_index: usize,
    max_exp: u32,
    strands: StrandSet,
    signs: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct Conventions {
    coefficients: String,
    w: String,
    unknowns: String,
    laurent: String,
}

impl Conventions {
    fn standard() -> Self {
        Self {
            coefficients: "a + b*w with a = a_num/a_den, b = b_num/b_den in Q(q, z)".into(),
            w: "square root of lambda = (z - q + 1)/(q*z)".into(),
            unknowns: "s_monomial [[k, m], ...] is the product of s_k^m; s_0 = 1".into(),
            laurent: "Laurent polynomials in q, z; integer coefficients".into(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Record {
    tau: String,
    strand: usize,
    sign: String,
    lhs: Vec<Term>,
    rhs: Vec<Term>,
}

#[derive(Serialize, Deserialize)]
struct Term {
    s_monomial: Vec<[i64; 2]>,
    coeff: CoeffDoc,
}

#[derive(Serialize, Deserialize)]
struct CoeffDoc {
    a_num: String,
    a_den: String,
    b_num: String,
    b_den: String,
}

const FORMAT: &str = "skein-equations/1";

fn sign_str(s: i8) -> String {
    if s > 0 { "+" } else { "-" }.to_string()
}

fn parse_sign(s: &str) -> Result<i8, SkeinError> {
    match s {
        "+" => Ok(1),
        "-" => Ok(-1),
        _ => Err(SkeinError::BadDocument(format!("bad sign '{s}'"))),
    }
}

fn terms_doc(x: &XPoly) -> Vec<Term> {
    x.terms()
        .map(|(m, c)| Term {
            s_monomial: m
                .pairs()
                .iter()
                .map(|&(k, e)| [k as i64, e as i64])
                .collect(),
            coeff: CoeffDoc {
                a_num: render_laurent(c.a.numer()),
                a_den: render_laurent(c.a.denom()),
                b_num: render_laurent(c.b.numer()),
                b_den: render_laurent(c.b.denom()),
            },
        })
        .collect()
}

fn terms_from_doc(v: &[Term]) -> Result<XPoly, SkeinError> {
    let bad = |m: String| SkeinError::BadDocument(m);
    let rat = |n: &str, d: &str| -> Result<RationalFn, SkeinError> {
        let n = parse_laurent(n).map_err(|e| bad(e.to_string()))?;
        let d = parse_laurent(d).map_err(|e| bad(e.to_string()))?;
        RationalFn::new(n, d).map_err(|e| bad(e.to_string()))
    };
    let mut x = XPoly::zero();
    for t in v {
        let pairs = t
            .s_monomial
            .iter()
            .map(|&[k, e]| {
                let k = i32::try_from(k).ok().filter(|&k| k != 0);
                let e = u32::try_from(e).ok().filter(|&e| e > 0);
                k.zip(e).ok_or_else(|| bad("bad s-monomial".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let c = XScalar::new(
            rat(&t.coeff.a_num, &t.coeff.a_den)?,
            rat(&t.coeff.b_num, &t.coeff.b_den)?,
        );
        x.add_term(SMonomial::from_pairs(pairs), c);
    }
    Ok(x)
}

impl SkeinSystem {
    /// Pretty-printed JSON; deterministic for a given system.
    pub fn to_json(&self) -> String {
        let p = &self.params;
        let doc = Document {
            header: Header {
                format: FORMAT.into(),
                engine_version: ENGINE_VERSION.into(),
                truncated: true,
                params: ParamsDoc {
                    p: p.p,
                    levels: [p.levels.0, p.levels.1],
                    max_index: p.max_index,
                    max_exp: p.max_exp,
                    strands: p.strands,
                    signs: p.signs.signs().into_iter().map(sign_str).collect(),
                },
                conventions: Conventions::standard(),
            },
            equations: self
                .equations
                .iter()
                .map(|e| Record {
                    tau: e.tau.to_string(),
                    strand: e.strand,
                    sign: sign_str(e.sign),
                    lhs: terms_doc(&e.lhs),
                    rhs: terms_doc(&e.rhs),
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, SkeinError> {
        let doc: Document =
            serde_json::from_str(s).map_err(|e| SkeinError::BadDocument(e.to_string()))?;
        if doc.header.format != FORMAT {
            return Err(SkeinError::BadDocument(format!(
                "unknown format '{}'",
                doc.header.format
            )));
        }
        let h = doc.header.params;
        let mut signs = SignSet {
            plus: false,
            minus: false,
        };
        for s in &h.signs {
            match parse_sign(s)? {
                1 => signs.plus = true,
                _ => signs.minus = true,
            }
        }
        let params = SystemParams {
            p: h.p,
            levels: (h.levels[0], h.levels[1]),
            max_index: h.max_index,
            max_exp: h.max_exp,
            strands: h.strands,
            signs,
        };
        let equations = doc
            .equations
            .iter()
            .map(|r| {
                Ok(SkeinEquation {
                    p: params.p,
                    tau: LambdaMonomial::parse(&r.tau)?,
                    strand: r.strand,
                    sign: parse_sign(&r.sign)?,
                    lhs: terms_from_doc(&r.lhs)?,
                    rhs: terms_from_doc(&r.rhs)?,
                })
            })
            .collect::<Result<Vec<_>, SkeinError>>()?;
        Ok(Self { params, equations })
    }

    pub fn write(&self, path: &Path) -> Result<(), SkeinError> {
        std::fs::write(path, self.to_json()).map_err(|source| SkeinError::Io {
            path: path.display().to_string(),
            source,
        })
    }

    pub fn read(path: &Path) -> Result<Self, SkeinError> {
        let s = std::fs::read_to_string(path).map_err(|source| SkeinError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&s)
    }
}

// ---- rank ----

fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][c], p).expect("nonzero pivot");
        for x in rows[rank].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot) {
                *x = (*x + p - mul_mod(f, y, p)) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Lower bound on the rank of the system over `Q(q, z)(√λ)`, treating each
/// `s`-monomial as an unknown: the largest rank seen at `trials` random
/// admissible points of `F_prime`.
pub fn rank_estimate(
    system: &SkeinSystem,
    trials: usize,
    prime: u64,
    seed: u64,
) -> Result<usize, SkeinError> {
    const RESAMPLES: usize = 64;
    let diffs: Vec<XPoly> = system
        .equations
        .iter()
        .map(SkeinEquation::difference)
        .collect();
    let cols: Vec<SMonomial> = diffs
        .iter()
        .flat_map(|d| d.terms().map(|(m, _)| m.clone()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if cols.is_empty() {
        // still validate the prime
        sample_point(prime, [], &mut ChaCha8Rng::seed_from_u64(seed))?;
        return Ok(0);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    for _ in 0..trials.max(1) {
        let mut rows = None;
        for _ in 0..RESAMPLES {
            let at = sample_point(prime, [], &mut rng)?;
            let eval: Result<Vec<Vec<u64>>, ModularError> = diffs
                .iter()
                .map(|d| cols.iter().map(|m| at.xscalar(&d.coeff(m))).collect())
                .collect();
            match eval {
                Ok(r) => {
                    rows = Some(r);
                    break;
                }
                Err(ModularError::ZeroDenominator) => continue,
                Err(e) => return Err(e.into()),
            }
        }
        let rows = rows.ok_or(ModularError::NoAdmissiblePoint(RESAMPLES))?;
        best = best.max(rank_mod(rows, prime));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::text::parse_xpoly;

    fn params(
        p: i64,
        levels: (i64, i64),
        m: usize,
        k: u32,
        strands: StrandSet,
        signs: SignSet,
    ) -> SystemParams {
        SystemParams {
            p,
            levels,
            max_index: m,
            max_exp: k,
            strands,
            signs,
        }
    }

    #[test]
    fn equation_for_t() {
        let e = generate_equation(&LambdaMonomial::parse("t").unwrap(), 1, 1, 1).unwrap();
        assert_eq!(e.lhs, parse_xpoly("s_1").unwrap());
        let lam = "((z - q + 1)/(q*z))";
        let want = format!("{lam}*(q^2 - q + 1)*s_2 + {lam}*q*(q - 1)/z*s_1^2");
        assert_eq!(e.rhs, parse_xpoly(&want).unwrap());
        assert!(generate_equation(&LambdaMonomial::parse("t").unwrap(), 2, 1, 1).is_err());
        assert!(generate_equation(&LambdaMonomial::parse("t").unwrap(), 1, 1, 0).is_err());
    }

    #[test]
    fn empty_bounds() {
        let s = export_system(&params(1, (1, 0), 1, 1, StrandSet::All, SignSet::BOTH)).unwrap();
        assert!(s.equations.is_empty());
        assert!(s.to_json().contains("\"truncated\": true"));
        assert_eq!(rank_estimate(&s, 2, 998_244_353, 0).unwrap(), 0);
    }

    #[test]
    fn single_equation_document() {
        let plus = SignSet::parse("+").unwrap();
        let s = export_system(&params(1, (1, 1), 1, 1, StrandSet::First, plus)).unwrap();
        assert_eq!(s.equations.len(), 1);
        let e = generate_equation(&LambdaMonomial::parse("t").unwrap(), 1, 1, 1).unwrap();
        assert_eq!(s.equations[0], e);
        let json = s.to_json();
        let back = SkeinSystem::from_json(&json).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_json(), json);
        assert_eq!(rank_estimate(&s, 3, 998_244_353, 1).unwrap(), 1);
        let doubled = SkeinSystem {
            params: s.params.clone(),
            equations: vec![e.clone(), e],
        };
        assert_eq!(rank_estimate(&doubled, 3, 998_244_353, 1).unwrap(), 1);
    }

    #[test]
    fn rank_rejects_non_primes() {
        let s = export_system(&params(1, (1, 1), 0, 1, StrandSet::First, SignSet::BOTH)).unwrap();
        assert!(rank_estimate(&s, 1, 998_244_354, 0).is_err());
    }

    #[test]
    fn signs_parse() {
        assert_eq!(SignSet::parse("+,-"), Some(SignSet::BOTH));
        assert_eq!(SignSet::parse("-").unwrap().signs(), vec![-1]);
        assert!(SignSet::parse("x").is_none());
    }
}
