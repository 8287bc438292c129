use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::laurent::IntLaurent;
use super::poly::{poly_div_exact, poly_gcd};
use super::ScalarError;

/// Reduced quotient of two Laurent polynomials in `q, z`.
///
/// Canonical form: the denominator is a polynomial with no monomial factor,
/// numerator and denominator are coprime (integer content included), and the
/// grlex-leading coefficient of the denominator is positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalFn {
    num: IntLaurent,
    den: IntLaurent,
}

impl RationalFn {
    pub fn zero() -> Self {
        Self {
            num: IntLaurent::zero(),
            den: IntLaurent::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(IntLaurent::one())
    }

    pub fn from_laurent(num: IntLaurent) -> Self {
        Self {
            num,
            den: IntLaurent::one(),
        }
    }

    pub fn new(num: IntLaurent, den: IntLaurent) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn numer(&self) -> &IntLaurent {
        &self.num
    }

    pub fn denom(&self) -> &IntLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some` when the denominator is 1.
    pub fn as_laurent(&self) -> Option<&IntLaurent> {
        self.den.is_one().then_some(&self.num)
    }

    fn reduce(num: IntLaurent, den: IntLaurent) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        // Move monomial factors of the denominator into the numerator.
        let (da, db) = den.min_exps();
        let den = den.shift(-da, -db);
        let num = num.shift(-da, -db);
        let (na, nb) = num.min_exps();
        let num_poly = num.shift(-na, -nb);

        let (mut num_poly, mut den) = if den.is_unit() {
            (num_poly, den)
        } else {
            let g = poly_gcd(&num_poly, &den);
            if g.is_one() {
                (num_poly, den)
            } else {
                (
                    poly_div_exact(&num_poly, &g).expect("gcd divides numerator"),
                    poly_div_exact(&den, &g).expect("gcd divides denominator"),
                )
            }
        };
        if den
            .grlex_leading()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false)
        {
            num_poly = -num_poly;
            den = -den;
        }
        Self {
            num: num_poly.shift(na, nb),
            den,
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self, ScalarError> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut res = Self::one();
        for _ in 0..k.unsigned_abs() {
            res = &res * &base;
        }
        Ok(res)
    }
}

impl std::fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::text::render_rational(self))
    }
}

impl std::fmt::Display for RationalFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::text::render_rational(self))
    }
}

impl From<IntLaurent> for RationalFn {
    fn from(p: IntLaurent) -> Self {
        Self::from_laurent(p)
    }
}

impl<'a> Add<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &'a RationalFn) -> RationalFn {
        if self.den == rhs.den {
            return RationalFn::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalFn::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &'a RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<'a> Mul<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &'a RationalFn) -> RationalFn {
        if self.is_zero() || rhs.is_zero() {
            return RationalFn::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFn::from_laurent(&self.num * &rhs.num);
        }
        RationalFn::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::poly::poly_gcd;

    fn lp(terms: &[(i64, i32, i32)]) -> IntLaurent {
        terms.iter().fold(IntLaurent::zero(), |acc, &(c, a, b)| {
            acc + IntLaurent::monomial(c, a, b)
        })
    }

    #[test]
    fn cancels_common_factor_and_monomials() {
        // (q^2 z - q z) / (q^3 - q^2) = z / q
        let r =
            RationalFn::new(lp(&[(1, 2, 1), (-1, 1, 1)]), lp(&[(1, 3, 0), (-1, 2, 0)])).unwrap();
        assert!(r.denom().is_one());
        assert_eq!(r.numer(), &IntLaurent::monomial(1, -1, 1));
    }

    #[test]
    fn sign_of_denominator_is_normalized() {
        let a = RationalFn::new(IntLaurent::one(), lp(&[(1, 0, 0), (-1, 1, 0)])).unwrap();
        let b = RationalFn::new(-IntLaurent::one(), lp(&[(-1, 0, 0), (1, 1, 0)])).unwrap();
        assert_eq!(a, b);
        let (_, c) = a.denom().grlex_leading().unwrap();
        assert!(c.is_positive());
    }

    #[test]
    fn integer_content_cancels() {
        let r = RationalFn::new(lp(&[(4, 1, 0), (6, 0, 0)]), lp(&[(2, 0, 1)])).unwrap();
        assert_eq!(r.denom(), &IntLaurent::one());
        assert_eq!(r.numer(), &lp(&[(2, 1, -1), (3, 0, -1)]));
    }

    #[test]
    fn reduced_parts_are_coprime() {
        let f = lp(&[(1, 0, 1), (1, 0, 0), (-1, 1, 0)]);
        let g = lp(&[(1, 1, 1), (3, 0, 0)]);
        let r = RationalFn::new(&f * &g, &g * &lp(&[(1, 2, 0), (1, 0, 0)])).unwrap();
        let (a, b) = r.numer().min_exps();
        assert!(poly_gcd(&r.numer().shift(-a, -b), r.denom()).is_one());
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert!(RationalFn::new(IntLaurent::one(), IntLaurent::zero()).is_err());
        assert!(RationalFn::zero().inv().is_err());
    }
}
