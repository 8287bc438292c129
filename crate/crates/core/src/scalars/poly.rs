//! Dense univariate polynomials over a gcd domain, nested once to get
//! `Z[q][z]`. Only what `RationalFn` needs: exact division and gcd.
//!
//! Gcds first try the heuristic evaluate/interpolate method (evaluate at a
//! large integer, take the gcd of the images, read the candidate back off in
//! balanced base `ξ` and confirm by trial division), and fall back to
//! primitive pseudo-remainder sequences, whose coefficients grow quickly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::laurent::IntLaurent;

pub trait GcdDomain: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `Some(self / o)` if `o` divides `self` exactly.
    fn div_exact(&self, o: &Self) -> Option<Self>;
    /// Greatest common divisor with positive leading sign.
    fn gcd(&self, o: &Self) -> Self;
    /// Sign of the leading coefficient (recursively): +1, -1 or 0.
    fn lead_sign(&self) -> i8;
}

impl GcdDomain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
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
    fn div_exact(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            return None;
        }
        let (d, r) = self.div_rem(o);
        Zero::is_zero(&r).then_some(d)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn lead_sign(&self) -> i8 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPoly<R> {
    /// Coefficients from degree 0 upward; no trailing zeros.
    pub coeffs: Vec<R>,
}

/// Coefficient rings with integer structure, needed by the heuristic gcd.
pub trait IntCoeffs: GcdDomain {
    /// Largest absolute value of an integer coefficient.
    fn max_norm(&self) -> BigInt;
    /// Coefficientwise balanced remainder modulo `m`.
    fn smod(&self, m: &BigInt) -> Self;
    /// Coefficientwise exact division by `m`.
    fn div_int(&self, m: &BigInt) -> Self;
    fn mul_int(&self, m: &BigInt) -> Self;
    /// Gcd of all integer coefficients.
    fn int_content(&self) -> BigInt;
}

impl IntCoeffs for BigInt {
    fn max_norm(&self) -> BigInt {
        self.abs()
    }
    fn smod(&self, m: &BigInt) -> Self {
        let r = self.mod_floor(m);
        if &r * 2 > *m {
            r - m
        } else {
            r
        }
    }
    fn div_int(&self, m: &BigInt) -> Self {
        self / m
    }
    fn mul_int(&self, m: &BigInt) -> Self {
        self * m
    }
    fn int_content(&self) -> BigInt {
        self.abs()
    }
}

impl<R: IntCoeffs> IntCoeffs for UPoly<R> {
    fn max_norm(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.max_norm())
            .max()
            .unwrap_or_default()
    }
    fn smod(&self, m: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.smod(m)).collect())
    }
    fn div_int(&self, m: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.div_int(m)).collect())
    }
    fn mul_int(&self, m: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul_int(m)).collect())
    }
    fn int_content(&self) -> BigInt {
        self.coeffs.iter().fold(<BigInt as Zero>::zero(), |g, c| {
            Integer::gcd(&g, &c.int_content())
        })
    }
}

impl<R: IntCoeffs> UPoly<R> {
    fn eval_int(&self, x: &BigInt) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul_int(x).add(c))
    }

    /// Balanced base-`x` expansion of `v` as a polynomial.
    fn interpolate(mut v: R, x: &BigInt) -> Self {
        let mut coeffs = vec![];
        while !v.is_zero() {
            let c = v.smod(x);
            v = v.sub(&c).div_int(x);
            coeffs.push(c);
        }
        Self::new(coeffs)
    }

    /// Heuristic gcd of two primitive polynomials; `None` if inconclusive.
    fn heuristic_gcd(a: &Self, b: &Self) -> Option<Self> {
        let mut x = a.max_norm().min(b.max_norm()) * 2 + 29;
        for _ in 0..6 {
            let (va, vb) = (a.eval_int(&x), b.eval_int(&x));
            if !va.is_zero() && !vb.is_zero() {
                let g = Self::interpolate(va.gcd(&vb), &x);
                if !g.is_zero() {
                    let g = g.div_int(&g.int_content()).normalized();
                    if a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
                        return Some(g);
                    }
                }
            }
            x = x * 73794 / 27011;
        }
        None
    }
}

impl<R: IntCoeffs> UPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&R> {
        self.coeffs.last()
    }

    fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    fn div_scalar(&self, c: &R) -> Option<Self> {
        self.coeffs
            .iter()
            .map(|x| x.div_exact(c))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    fn shift_mul(&self, c: &R, k: usize) -> Self {
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().map(|x| x.mul(c)));
        Self::new(v)
    }

    pub fn content(&self) -> R {
        let mut it = self.coeffs.iter();
        let Some(first) = it.next() else {
            return R::zero();
        };
        let mut g = first.gcd(first);
        for c in it {
            g = g.gcd(c);
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let c = self.content();
        let p = self
            .div_scalar(&c)
            .expect("content divides every coefficient");
        p.normalized()
    }

    fn normalized(self) -> Self {
        if self.lead_sign() < 0 {
            GcdDomain::neg(&self)
        } else {
            self
        }
    }

    /// Pseudo-remainder of `self` by `b`, up to a power of `lc(b)`.
    fn prem(&self, b: &Self) -> Self {
        let db = b.degree().expect("nonzero divisor");
        let lb = b.lead().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lead().unwrap().clone();
            r = r.scale(&lb).sub(&b.shift_mul(&lr, dr - db));
        }
        r
    }
}

impl<R: IntCoeffs> GcdDomain for UPoly<R> {
    fn zero() -> Self {
        Self { coeffs: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = R::zero();
        Self::new(
            (0..n)
                .map(|i| {
                    self.coeffs
                        .get(i)
                        .unwrap_or(&z)
                        .add(o.coeffs.get(i).unwrap_or(&z))
                })
                .collect(),
        )
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&GcdDomain::neg(o))
    }
    fn mul(&self, o: &Self) -> Self {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return <Self as GcdDomain>::zero();
        }
        let mut v = vec![R::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Self::new(v)
    }
    fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        let db = o.degree()?;
        let lb = o.lead().unwrap();
        let mut r = self.clone();
        let Some(da) = r.degree() else {
            return Some(<Self as GcdDomain>::zero());
        };
        if da < db {
            return None;
        }
        let mut quot = vec![R::zero(); da - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let c = r.lead().unwrap().div_exact(lb)?;
            r = r.sub(&o.shift_mul(&c, dr - db));
            quot[dr - db] = c;
        }
        Some(Self::new(quot))
    }
    fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone().normalized();
        }
        if o.is_zero() {
            return self.clone().normalized();
        }
        let ca = self.content();
        let cb = o.content();
        let c = ca.gcd(&cb);
        let mut a = self.primitive_part();
        let mut b = o.primitive_part();
        if let Some(g) = Self::heuristic_gcd(&a, &b) {
            return g.scale(&c).normalized();
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.primitive_part() };
        }
        a.primitive_part().scale(&c).normalized()
    }
    fn lead_sign(&self) -> i8 {
        self.lead().map_or(0, |c| c.lead_sign())
    }
}

/// `Z[q][z]`: outer variable `z`, inner variable `q`.
pub type BiPoly = UPoly<UPoly<BigInt>>;

/// Converts a Laurent polynomial with nonnegative exponents into `Z[q][z]`.
pub fn to_bipoly(p: &IntLaurent) -> BiPoly {
    let (_, max_b) = p.max_exps();
    let mut rows: Vec<Vec<BigInt>> = vec![vec![]; if p.is_zero() { 0 } else { max_b as usize + 1 }];
    for (&(a, b), c) in p.terms() {
        assert!(a >= 0 && b >= 0, "to_bipoly needs a polynomial");
        let row = &mut rows[b as usize];
        if row.len() <= a as usize {
            row.resize(a as usize + 1, <BigInt as Zero>::zero());
        }
        row[a as usize] = c.clone();
    }
    UPoly::new(rows.into_iter().map(UPoly::new).collect())
}

pub fn from_bipoly(p: &BiPoly) -> IntLaurent {
    IntLaurent::from_terms(p.coeffs.iter().enumerate().flat_map(|(b, row)| {
        row.coeffs
            .iter()
            .enumerate()
            .map(move |(a, c)| ((a as i32, b as i32), c.clone()))
    }))
}

/// Gcd of two polynomials (nonnegative exponents) in `Z[q, z]`.
pub fn poly_gcd(a: &IntLaurent, b: &IntLaurent) -> IntLaurent {
    from_bipoly(&to_bipoly(a).gcd(&to_bipoly(b)))
}

/// Exact quotient `a / b` in `Z[q, z]`, if it exists.
pub fn poly_div_exact(a: &IntLaurent, b: &IntLaurent) -> Option<IntLaurent> {
    to_bipoly(a)
        .div_exact(&to_bipoly(b))
        .map(|p| from_bipoly(&p))
}
