use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(a, b)` of the monomial `q^a z^b`.
pub type Exp = (i32, i32);

/// Laurent polynomial in `q` and `z` with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so structural equality
/// is mathematical equality.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntLaurent {
    terms: BTreeMap<Exp, BigInt>,
}

impl IntLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, q_exp: i32, z_exp: i32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((q_exp, z_exp), c);
        }
        Self { terms }
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn z() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn q_pow(k: i32) -> Self {
        Self::monomial(1, k, 0)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exp, BigInt)>>(iter: I) -> Self {
        let mut res = Self::zero();
        for (e, c) in iter {
            res.add_term(e, c);
        }
        res
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exp) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: Exp, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// If the polynomial is `c * q^a z^b`, returns the triple.
    pub fn as_monomial(&self) -> Option<(&BigInt, Exp)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    /// `true` when the value is `±q^a z^b`, i.e. a unit of the ring.
    pub fn is_unit(&self) -> bool {
        self.as_monomial().is_some_and(|(c, _)| c.abs().is_one())
    }

    /// Minimum exponents of `q` and `z` over all terms (`(0, 0)` for zero).
    pub fn min_exps(&self) -> Exp {
        let mut it = self.terms.keys();
        let Some(&(a, b)) = it.next() else {
            return (0, 0);
        };
        it.fold((a, b), |(ma, mb), &(x, y)| (ma.min(x), mb.min(y)))
    }

    pub fn max_exps(&self) -> Exp {
        let mut it = self.terms.keys();
        let Some(&(a, b)) = it.next() else {
            return (0, 0);
        };
        it.fold((a, b), |(ma, mb), &(x, y)| (ma.max(x), mb.max(y)))
    }

    /// Multiplies by `q^a z^b`.
    pub fn shift(&self, a: i32, b: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), c)| ((x + a, y + b), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Integer power; negative exponents are only defined for units.
    pub fn pow(&self, k: i32) -> Option<Self> {
        if k < 0 {
            let (c, (a, b)) = self.as_monomial()?;
            if !c.abs().is_one() {
                return None;
            }
            let base = Self::monomial(c.clone(), -a, -b);
            return base.pow(-k);
        }
        let mut res = Self::one();
        let mut base = self.clone();
        let mut k = k as u32;
        while k > 0 {
            if k & 1 == 1 {
                res = &res * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Some(res)
    }

    /// True if no variable `z` occurs.
    pub fn is_q_only(&self) -> bool {
        self.terms.keys().all(|&(_, b)| b == 0)
    }

    /// Gcd of all integer coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Leading exponent under the graded lexicographic order used for
    /// canonical signs: total degree after shifting to nonnegative exponents,
    /// then the `q` exponent, then the `z` exponent.
    pub fn grlex_leading(&self) -> Option<(Exp, &BigInt)> {
        let (ma, mb) = self.min_exps();
        self.terms
            .iter()
            .max_by_key(|(&(a, b), _)| ((a - ma) + (b - mb), a, b))
            .map(|(e, c)| (*e, c))
    }

    /// Substitutes integer values for `q` and `z` (both must be invertible
    /// rationals; used only in tests and diagnostics).
    pub fn eval_f64(&self, q: f64, z: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.terms
            .iter()
            .map(|(&(a, b), c)| c.to_f64().unwrap_or(f64::NAN) * q.powi(a) * z.powi(b))
            .sum()
    }
}

impl std::fmt::Debug for IntLaurent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::text::render_laurent(self))
    }
}

impl std::fmt::Display for IntLaurent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::text::render_laurent(self))
    }
}

impl From<i64> for IntLaurent {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for IntLaurent {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a IntLaurent> for &'a IntLaurent {
    type Output = IntLaurent;
    fn add(self, rhs: &'a IntLaurent) -> IntLaurent {
        let mut res = self.clone();
        res += rhs;
        res
    }
}

impl Add for IntLaurent {
    type Output = IntLaurent;
    fn add(mut self, rhs: IntLaurent) -> IntLaurent {
        self += &rhs;
        self
    }
}

impl AddAssign<&IntLaurent> for IntLaurent {
    fn add_assign(&mut self, rhs: &IntLaurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&IntLaurent> for IntLaurent {
    fn sub_assign(&mut self, rhs: &IntLaurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl<'a> Sub<&'a IntLaurent> for &'a IntLaurent {
    type Output = IntLaurent;
    fn sub(self, rhs: &'a IntLaurent) -> IntLaurent {
        let mut res = self.clone();
        res -= rhs;
        res
    }
}

impl Sub for IntLaurent {
    type Output = IntLaurent;
    fn sub(mut self, rhs: IntLaurent) -> IntLaurent {
        self -= &rhs;
        self
    }
}

impl Neg for &IntLaurent {
    type Output = IntLaurent;
    fn neg(self) -> IntLaurent {
        IntLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for IntLaurent {
    type Output = IntLaurent;
    fn neg(mut self) -> IntLaurent {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<'a> Mul<&'a IntLaurent> for &'a IntLaurent {
    type Output = IntLaurent;
    fn mul(self, rhs: &'a IntLaurent) -> IntLaurent {
        if self.is_zero() || rhs.is_zero() {
            return IntLaurent::zero();
        }
        if let Some((c, (a, b))) = rhs.as_monomial() {
            return IntLaurent {
                terms: self
                    .terms
                    .iter()
                    .map(|(&(x, y), v)| ((x + a, y + b), v * c))
                    .collect(),
            };
        }
        let mut res = IntLaurent::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                res.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        res
    }
}

impl Mul for IntLaurent {
    type Output = IntLaurent;
    fn mul(self, rhs: IntLaurent) -> IntLaurent {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_terms_are_dropped() {
        let a = IntLaurent::q() + IntLaurent::one();
        let b = -IntLaurent::q();
        let s = &a + &b;
        assert!(s.is_one());
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn monomial_inverse_pow() {
        let m = IntLaurent::monomial(-1, 2, -1);
        let inv = m.pow(-1).unwrap();
        assert!((&m * &inv).is_one());
        assert!((IntLaurent::q() + IntLaurent::one()).pow(-1).is_none());
    }

    #[test]
    fn grlex_leading_uses_shifted_degree() {
        // q^-1 z^3 + q^2: shifted degrees are 0+3 and 3+0; tie broken by q.
        let p = IntLaurent::monomial(1, -1, 3) + IntLaurent::monomial(-5, 2, 0);
        let (e, c) = p.grlex_leading().unwrap();
        assert_eq!(e, (2, 0));
        assert_eq!(*c, BigInt::from(-5));
    }
}
