use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use super::laurent::IntLaurent;
use super::rational::RationalFn;
use super::ScalarError;

/// `λ = (z + 1 - q) / (q z)`.
pub fn lambda() -> &'static RationalFn {
    static L: OnceLock<RationalFn> = OnceLock::new();
    L.get_or_init(|| {
        let num = IntLaurent::z() + IntLaurent::one() - IntLaurent::q();
        let den = IntLaurent::monomial(1, 1, 1);
        RationalFn::new(num, den).expect("qz is nonzero")
    })
}

/// Element `a + b·w` of the quadratic extension `Q(q, z)(w)`, `w² = λ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XScalar {
    pub a: RationalFn,
    pub b: RationalFn,
}

impl XScalar {
    pub fn new(a: RationalFn, b: RationalFn) -> Self {
        Self { a, b }
    }

    pub fn zero() -> Self {
        Self::new(RationalFn::zero(), RationalFn::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(RationalFn::one())
    }

    /// The formal square root `w` of `λ`.
    pub fn w() -> Self {
        Self::new(RationalFn::zero(), RationalFn::one())
    }

    pub fn from_rational(a: RationalFn) -> Self {
        Self::new(a, RationalFn::zero())
    }

    pub fn from_laurent(p: IntLaurent) -> Self {
        Self::from_rational(p.into())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// Norm `a² - b² λ` down to `Q(q, z)`.
    pub fn norm(&self) -> RationalFn {
        &(&self.a * &self.a) - &(&(&self.b * &self.b) * lambda())
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.a.clone(), -&self.b)
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = self.norm().inv()?;
        let c = self.conjugate();
        Ok(Self::new(&c.a * &n, &c.b * &n))
    }

    pub fn div(&self, o: &Self) -> Result<Self, ScalarError> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self, ScalarError> {
        let mut base = if k < 0 { self.inv()? } else { self.clone() };
        let mut res = Self::one();
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                res = &res * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(res)
    }
}

impl std::fmt::Debug for XScalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::text::render_xscalar(self))
    }
}

impl std::fmt::Display for XScalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::text::render_xscalar(self))
    }
}

impl From<RationalFn> for XScalar {
    fn from(a: RationalFn) -> Self {
        Self::from_rational(a)
    }
}

impl From<IntLaurent> for XScalar {
    fn from(p: IntLaurent) -> Self {
        Self::from_laurent(p)
    }
}

impl<'a> Add<&'a XScalar> for &'a XScalar {
    type Output = XScalar;
    fn add(self, rhs: &'a XScalar) -> XScalar {
        XScalar::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a XScalar> for &'a XScalar {
    type Output = XScalar;
    fn sub(self, rhs: &'a XScalar) -> XScalar {
        XScalar::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Neg for &XScalar {
    type Output = XScalar;
    fn neg(self) -> XScalar {
        XScalar::new(-&self.a, -&self.b)
    }
}

impl<'a> Mul<&'a XScalar> for &'a XScalar {
    type Output = XScalar;
    fn mul(self, rhs: &'a XScalar) -> XScalar {
        let mut a = &self.a * &rhs.a;
        if !self.b.is_zero() && !rhs.b.is_zero() {
            a = &a + &(&(&self.b * &rhs.b) * lambda());
        }
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        XScalar::new(a, b)
    }
}
