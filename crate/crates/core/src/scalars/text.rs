//! Textual interchange format for scalars and `s`-polynomials.
//!
//! Laurent polynomials are grouped by powers of `z` (descending), each group
//! a polynomial in `q` (descending): `(q^2 - q + 1)*z + q^-1`. Monomials in
//! the trace parameters are written `s_-1*s_2^2`, and a term of an
//! `s`-polynomial is `coefficient * monomial`. The formal square root of λ is
//! written `w`. Rendering is canonical; [`parse_laurent`] and friends read it
//! back (and accept any well-formed expression in the same syntax).

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::field::XScalar;
use super::laurent::IntLaurent;
use super::rational::RationalFn;
use super::spoly::{SMonomial, SPoly, TraceValue, XPoly};
use super::ScalarError;

type Piece = (bool, String);

fn var_pow(name: &str, e: i32) -> String {
    match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{e}"),
    }
}

fn monomial_body(c: &BigInt, a: i32, b: i32) -> String {
    let factors: Vec<String> = [var_pow("q", a), var_pow("z", b)]
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect();
    if factors.is_empty() {
        return c.to_string();
    }
    let vars = factors.join("*");
    if c.is_one() {
        vars
    } else {
        format!("{c}*{vars}")
    }
}

fn join(pieces: &[Piece]) -> String {
    if pieces.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (neg, body)) in pieces.iter().enumerate() {
        match (i, neg) {
            (0, true) => {
                out.push('-');
                out.push_str(body);
            }
            (0, false) => out.push_str(body),
            (_, true) => {
                out.push_str(" - ");
                out.push_str(body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(body);
            }
        }
    }
    out
}

fn laurent_pieces(p: &IntLaurent) -> Vec<Piece> {
    // group by z exponent, descending; q descending within a group
    let mut groups: std::collections::BTreeMap<i32, Vec<(i32, BigInt)>> = Default::default();
    for (&(a, b), c) in p.terms() {
        groups.entry(b).or_default().push((a, c.clone()));
    }
    let mut pieces = vec![];
    for (b, mut qs) in groups.into_iter().rev() {
        qs.sort_by(|x, y| y.0.cmp(&x.0));
        if qs.len() == 1 {
            let (a, c) = &qs[0];
            pieces.push((c.is_negative(), monomial_body(&c.abs(), *a, b)));
        } else if b == 0 {
            for (a, c) in qs {
                pieces.push((c.is_negative(), monomial_body(&c.abs(), a, 0)));
            }
        } else {
            let inner: Vec<Piece> = qs
                .into_iter()
                .map(|(a, c)| (c.is_negative(), monomial_body(&c.abs(), a, 0)))
                .collect();
            pieces.push((false, format!("({})*{}", join(&inner), var_pow("z", b))));
        }
    }
    pieces
}

pub fn render_laurent(p: &IntLaurent) -> String {
    join(&laurent_pieces(p))
}

fn atomic(p: &IntLaurent) -> String {
    let pieces = laurent_pieces(p);
    if pieces.len() == 1 && !pieces[0].0 && !pieces[0].1.contains(['*', '/']) {
        pieces[0].1.clone()
    } else {
        format!("({})", join(&pieces))
    }
}

fn rational_pieces(r: &RationalFn) -> Vec<Piece> {
    // Negative powers in a multi-term numerator move into the denominator.
    let (a, b) = r.numer().min_exps();
    let shift = (-a.min(0), -b.min(0));
    let (num, den) = if r.numer().len() > 1 && shift != (0, 0) {
        (
            r.numer().shift(shift.0, shift.1),
            r.denom() * &IntLaurent::monomial(1, shift.0, shift.1),
        )
    } else if let Some(p) = r.as_laurent() {
        return laurent_pieces(p);
    } else {
        (r.numer().clone(), r.denom().clone())
    };
    let num = laurent_pieces(&num);
    let den = atomic(&den);
    if num.len() == 1 {
        let (neg, body) = &num[0];
        vec![(*neg, format!("{body}/{den}"))]
    } else {
        vec![(false, format!("({})/{den}", join(&num)))]
    }
}

pub fn render_rational(r: &RationalFn) -> String {
    join(&rational_pieces(r))
}

fn xscalar_pieces(x: &XScalar) -> Vec<Piece> {
    let mut pieces = rational_pieces(&x.a);
    let b = rational_pieces(&x.b);
    match b.len() {
        0 => {}
        1 => {
            let (neg, body) = &b[0];
            let body = if body == "1" {
                "w".to_string()
            } else {
                format!("{body}*w")
            };
            pieces.push((*neg, body));
        }
        _ => pieces.push((false, format!("({})*w", join(&b)))),
    }
    pieces
}

pub fn render_xscalar(x: &XScalar) -> String {
    join(&xscalar_pieces(x))
}

pub fn render_smonomial(m: &SMonomial) -> String {
    if m.is_one() {
        return "1".into();
    }
    m.pairs()
        .iter()
        .map(|&(k, e)| {
            if e == 1 {
                format!("s_{k}")
            } else {
                format!("s_{k}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn render_spoly_with<C>(p: &SPoly<C>, pieces_of: impl Fn(&C) -> Vec<Piece>) -> String
where
    C: super::spoly::Coeff,
{
    let single = p.len() == 1;
    let mut out: Vec<Piece> = vec![];
    for (m, c) in p.terms() {
        let cp = pieces_of(c);
        if cp.len() == 1 {
            let (neg, body) = &cp[0];
            let body = if m.is_one() {
                body.clone()
            } else if body == "1" {
                render_smonomial(m)
            } else {
                format!("{body} * {}", render_smonomial(m))
            };
            out.push((*neg, body));
        } else if m.is_one() && single {
            out.extend(cp);
        } else if m.is_one() {
            out.push((false, format!("({})", join(&cp))));
        } else {
            out.push((false, format!("({}) * {}", join(&cp), render_smonomial(m))));
        }
    }
    join(&out)
}

pub fn render_trace(p: &TraceValue) -> String {
    render_spoly_with(p, laurent_pieces)
}

pub fn render_xpoly(p: &XPoly) -> String {
    render_spoly_with(p, xscalar_pieces)
}

// ---------------------------------------------------------------------------
// parsing

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    S(i32),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ScalarError> {
    let b = s.as_bytes();
    let mut i = 0;
    let mut out = vec![];
    while i < b.len() {
        let c = b[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '/' => out.push((start, Tok::Slash)),
            '^' => out.push((start, Tok::Caret)),
            '(' => out.push((start, Tok::LParen)),
            ')' => out.push((start, Tok::RParen)),
            '0'..='9' => {
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = s[start..i].parse().expect("digits");
                out.push((start, Tok::Int(n)));
                continue;
            }
            'a'..='z' | 'A'..='Z' => {
                while i < b.len() && (b[i].is_ascii_alphanumeric()) {
                    i += 1;
                }
                let name = &s[start..i];
                if name == "s" && i < b.len() && b[i] == b'_' {
                    i += 1;
                    let ks = i;
                    if i < b.len() && b[i] == b'-' {
                        i += 1;
                    }
                    while i < b.len() && b[i].is_ascii_digit() {
                        i += 1;
                    }
                    let k: i32 = s[ks..i].parse().map_err(|_| ScalarError::Parse {
                        pos: start,
                        msg: "bad s index".into(),
                    })?;
                    out.push((start, Tok::S(k)));
                } else {
                    out.push((start, Tok::Ident(name.to_string())));
                }
                continue;
            }
            _ => {
                return Err(ScalarError::Parse {
                    pos: start,
                    msg: format!("unexpected character {c:?}"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

/// Target rings for the expression parser.
pub trait ExprRing: Sized + Clone {
    fn from_int(n: BigInt) -> Self;
    fn var(name: &str) -> Option<Self>;
    fn s_param(k: i32) -> Option<Self>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, o: &Self) -> Option<Self>;
    fn pow(&self, k: i32) -> Option<Self>;
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |(p, _)| *p)
    }

    fn err<T>(&self, msg: &str) -> Result<T, ScalarError> {
        Err(ScalarError::Parse {
            pos: self.here(),
            msg: msg.to_string(),
        })
    }

    fn expr<R: ExprRing>(&mut self) -> Result<R, ScalarError> {
        let mut acc = self.term::<R>()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term::<R>()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term::<R>()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term<R: ExprRing>(&mut self) -> Result<R, ScalarError> {
        let mut acc = self.unary::<R>()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary::<R>()?);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let d = self.unary::<R>()?;
                    match acc.div(&d) {
                        Some(v) => acc = v,
                        None => return self.err("division not defined in this ring"),
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary<R: ExprRing>(&mut self) -> Result<R, ScalarError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(self.unary::<R>()?.neg());
        }
        self.power()
    }

    fn power<R: ExprRing>(&mut self) -> Result<R, ScalarError> {
        let base = self.atom::<R>()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let Some(Tok::Int(n)) = self.peek().cloned() else {
            return self.err("expected integer exponent");
        };
        self.pos += 1;
        let k: i32 = match i32::try_from(n) {
            Ok(k) => k,
            Err(_) => return self.err("exponent too large"),
        };
        let k = if neg { -k } else { k };
        match base.pow(k) {
            Some(v) => Ok(v),
            None => self.err("power not defined in this ring"),
        }
    }

    fn atom<R: ExprRing>(&mut self) -> Result<R, ScalarError> {
        let Some(tok) = self.peek().cloned() else {
            return self.err("unexpected end of input");
        };
        self.pos += 1;
        match tok {
            Tok::Int(n) => Ok(R::from_int(n)),
            Tok::Ident(name) => match R::var(&name) {
                Some(v) => Ok(v),
                None => {
                    self.pos -= 1;
                    self.err(&format!("unknown symbol {name}"))
                }
            },
            Tok::S(k) => match R::s_param(k) {
                Some(v) => Ok(v),
                None => {
                    self.pos -= 1;
                    self.err("trace parameters not allowed here")
                }
            },
            Tok::LParen => {
                let v = self.expr::<R>()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            _ => {
                self.pos -= 1;
                self.err("unexpected token")
            }
        }
    }
}

pub fn parse_expr<R: ExprRing>(s: &str) -> Result<R, ScalarError> {
    let toks = tokenize(s)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        len: s.len(),
    };
    let v = p.expr::<R>()?;
    if p.pos != toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

pub fn parse_laurent(s: &str) -> Result<IntLaurent, ScalarError> {
    parse_expr(s)
}

pub fn parse_rational(s: &str) -> Result<RationalFn, ScalarError> {
    parse_expr(s)
}

pub fn parse_xscalar(s: &str) -> Result<XScalar, ScalarError> {
    parse_expr(s)
}

pub fn parse_trace(s: &str) -> Result<TraceValue, ScalarError> {
    parse_expr(s)
}

pub fn parse_xpoly(s: &str) -> Result<XPoly, ScalarError> {
    parse_expr(s)
}

fn qz_var(name: &str) -> Option<IntLaurent> {
    match name {
        "q" => Some(IntLaurent::q()),
        "z" => Some(IntLaurent::z()),
        _ => None,
    }
}

impl ExprRing for IntLaurent {
    fn from_int(n: BigInt) -> Self {
        IntLaurent::constant(n)
    }
    fn var(name: &str) -> Option<Self> {
        qz_var(name)
    }
    fn s_param(_: i32) -> Option<Self> {
        None
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, o: &Self) -> Option<Self> {
        Some(self * &o.pow(-1)?)
    }
    fn pow(&self, k: i32) -> Option<Self> {
        IntLaurent::pow(self, k)
    }
}

impl ExprRing for RationalFn {
    fn from_int(n: BigInt) -> Self {
        IntLaurent::constant(n).into()
    }
    fn var(name: &str) -> Option<Self> {
        qz_var(name).map(Into::into)
    }
    fn s_param(_: i32) -> Option<Self> {
        None
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, o: &Self) -> Option<Self> {
        RationalFn::div(self, o).ok()
    }
    fn pow(&self, k: i32) -> Option<Self> {
        RationalFn::pow(self, k).ok()
    }
}

impl ExprRing for XScalar {
    fn from_int(n: BigInt) -> Self {
        IntLaurent::constant(n).into()
    }
    fn var(name: &str) -> Option<Self> {
        if name == "w" {
            return Some(XScalar::w());
        }
        qz_var(name).map(Into::into)
    }
    fn s_param(_: i32) -> Option<Self> {
        None
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, o: &Self) -> Option<Self> {
        XScalar::div(self, o).ok()
    }
    fn pow(&self, k: i32) -> Option<Self> {
        XScalar::pow(self, k).ok()
    }
}

fn as_constant<C: super::spoly::Coeff>(p: &SPoly<C>) -> Option<C> {
    if p.is_zero() {
        return Some(C::zero());
    }
    match p.terms().next() {
        Some((m, c)) if p.len() == 1 && m.is_one() => Some(c.clone()),
        _ => None,
    }
}

impl ExprRing for TraceValue {
    fn from_int(n: BigInt) -> Self {
        SPoly::constant(IntLaurent::constant(n))
    }
    fn var(name: &str) -> Option<Self> {
        qz_var(name).map(SPoly::constant)
    }
    fn s_param(k: i32) -> Option<Self> {
        Some(SPoly::s(k))
    }
    fn add(&self, o: &Self) -> Self {
        SPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        SPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        SPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        SPoly::neg(self)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        let c = as_constant(o)?;
        Some(self.scale(&c.pow(-1)?))
    }
    fn pow(&self, k: i32) -> Option<Self> {
        if k < 0 {
            return Some(SPoly::constant(as_constant(self)?.pow(k)?));
        }
        let mut r = SPoly::one();
        for _ in 0..k {
            r = SPoly::mul(&r, self);
        }
        Some(r)
    }
}

impl ExprRing for XPoly {
    fn from_int(n: BigInt) -> Self {
        SPoly::constant(IntLaurent::constant(n).into())
    }
    fn var(name: &str) -> Option<Self> {
        <XScalar as ExprRing>::var(name).map(SPoly::constant)
    }
    fn s_param(k: i32) -> Option<Self> {
        Some(SPoly::s(k))
    }
    fn add(&self, o: &Self) -> Self {
        SPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        SPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        SPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        SPoly::neg(self)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        let c = as_constant(o)?;
        Some(self.scale(&c.inv().ok()?))
    }
    fn pow(&self, k: i32) -> Option<Self> {
        if k < 0 {
            return Some(SPoly::constant(as_constant(self)?.pow(k).ok()?));
        }
        let mut r = SPoly::one();
        for _ in 0..k {
            r = SPoly::mul(&r, self);
        }
        Some(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_grouped_by_z() {
        let p = parse_laurent("q^2*z - q*z + z").unwrap();
        assert_eq!(render_laurent(&p), "(q^2 - q + 1)*z");
        let t = TraceValue::s(2).scale(&p);
        assert_eq!(render_trace(&t), "(q^2 - q + 1)*z * s_2");
    }

    #[test]
    fn renders_signs_and_constants() {
        assert_eq!(render_laurent(&IntLaurent::zero()), "0");
        assert_eq!(render_laurent(&parse_laurent("1 - q").unwrap()), "-q + 1");
        assert_eq!(
            render_laurent(&parse_laurent("-2*q^-1*z^-2").unwrap()),
            "-2*q^-1*z^-2"
        );
        let t = parse_trace("s_1 - s_1*s_-2 + 3").unwrap();
        assert_eq!(render_trace(&t), "3 + s_1 - s_-2*s_1");
    }

    #[test]
    fn parses_back_what_it_renders() {
        for s in [
            "(q - 1)*z*s_1 + q*s_1",
            "(z + 1 - q)/(q*z)*s_2^2 + w*s_-1",
            "q/(z - q + 1)*w",
            "((q^2 - 1)/(q + 1))*w - 3/q",
        ] {
            let x = parse_xpoly(s).unwrap();
            let r = render_xpoly(&x);
            assert_eq!(parse_xpoly(&r).unwrap(), x, "{s} -> {r}");
            assert_eq!(render_xpoly(&parse_xpoly(&r).unwrap()), r);
        }
    }

    #[test]
    fn reports_parse_position() {
        match parse_laurent("q + $") {
            Err(ScalarError::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_laurent("1/(1 + q)").is_err());
        assert!(parse_laurent("s_1").is_err());
    }
}
