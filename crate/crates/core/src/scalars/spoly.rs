use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::field::XScalar;
use super::laurent::IntLaurent;

/// Monomial in the trace parameters `s_k`, `k ≠ 0`: sorted `(k, multiplicity)`
/// pairs. The empty monomial is the constant `1` (`s_0 = 1`).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SMonomial(Vec<(i32, u32)>);

impl SMonomial {
    pub fn one() -> Self {
        Self(vec![])
    }

    /// `s_k`; `s_0` is the constant `1`.
    pub fn s(k: i32) -> Self {
        if k == 0 {
            Self::one()
        } else {
            Self(vec![(k, 1)])
        }
    }

    pub fn from_pairs<I: IntoIterator<Item = (i32, u32)>>(pairs: I) -> Self {
        let mut m: BTreeMap<i32, u32> = BTreeMap::new();
        for (k, e) in pairs {
            if k != 0 && e != 0 {
                *m.entry(k).or_default() += e;
            }
        }
        Self(m.into_iter().collect())
    }

    pub fn pairs(&self) -> &[(i32, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::from_pairs(self.0.iter().chain(o.0.iter()).copied())
    }
}

impl Ord for SMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for SMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for SMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::text::render_smonomial(self))
    }
}

/// Coefficient rings usable in an [`SPoly`].
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Coeff for IntLaurent {
    fn zero() -> Self {
        IntLaurent::zero()
    }
    fn one() -> Self {
        IntLaurent::one()
    }
    fn is_zero(&self) -> bool {
        IntLaurent::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coeff for XScalar {
    fn zero() -> Self {
        XScalar::zero()
    }
    fn one() -> Self {
        XScalar::one()
    }
    fn is_zero(&self) -> bool {
        XScalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Polynomial in the `s_k` with coefficients in `C`. No zero coefficients are
/// stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SPoly<C> {
    terms: BTreeMap<SMonomial, C>,
}

/// Values of the Markov trace: coefficients in `Z[q^±1, z^±1]`.
pub type TraceValue = SPoly<IntLaurent>;
/// Values of the invariant: coefficients in `Q(q, z)(√λ)`.
pub type XPoly = SPoly<XScalar>;

impl<C: Coeff> SPoly<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(SMonomial::one(), c)
    }

    pub fn term(m: SMonomial, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// `s_k` (or `1` for `k = 0`).
    pub fn s(k: i32) -> Self {
        Self::term(SMonomial::s(k), C::one())
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

    pub fn terms(&self) -> impl Iterator<Item = (&SMonomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &SMonomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, m: SMonomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut res = self.clone();
        res.add_assign(o);
        res
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, o: &Self, k: &C) {
        if k.is_zero() {
            return;
        }
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c.mul(k));
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut res = Self::zero();
        res.add_scaled(self, k);
        res
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut res = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                res.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        res
    }

    /// Multiplies every term by the monomial `m`.
    pub fn mul_monomial(&self, m: &SMonomial) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> SPoly<D> {
        let mut res = SPoly::zero();
        for (m, c) in &self.terms {
            res.add_term(m.clone(), f(c));
        }
        res
    }

    /// All `k` such that `s_k` occurs.
    pub fn s_indices(&self) -> std::collections::BTreeSet<i32> {
        self.terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|&(k, _)| k))
            .collect()
    }
}

impl TraceValue {
    pub fn to_xpoly(&self) -> XPoly {
        self.map_coeffs(|c| XScalar::from_laurent(c.clone()))
    }
}

impl std::fmt::Debug for SPoly<IntLaurent> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::text::render_trace(self))
    }
}

impl std::fmt::Display for SPoly<IntLaurent> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::text::render_trace(self))
    }
}

impl std::fmt::Debug for SPoly<XScalar> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::text::render_xpoly(self))
    }
}

impl std::fmt::Display for SPoly<XScalar> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::text::render_xpoly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lq(c: i64, a: i32, b: i32) -> IntLaurent {
        IntLaurent::monomial(c, a, b)
    }

    #[test]
    fn monomial_product() {
        let s1 = TraceValue::s(1);
        let sq = s1.mul(&s1);
        assert_eq!(sq.len(), 1);
        let (m, c) = sq.terms().next().unwrap();
        assert_eq!(m.pairs(), &[(1, 2)]);
        assert!(c.is_one());
    }

    #[test]
    fn cancellation_removes_zero_term() {
        let s1sq = TraceValue::s(1).mul(&TraceValue::s(1));
        let x = TraceValue::s(2).add(&s1sq);
        let y = x.add(&s1sq.neg());
        assert_eq!(y, TraceValue::s(2));
    }

    #[test]
    fn bilinearity() {
        let a = TraceValue::s(2).scale(&lq(1, 0, 1));
        let b = TraceValue::s(-1).scale(&lq(1, 1, 0));
        let p = a.mul(&b);
        let expected = TraceValue::term(SMonomial::from_pairs([(2, 1), (-1, 1)]), lq(1, 1, 1));
        assert_eq!(p, expected);
    }

    #[test]
    fn s_zero_is_one() {
        assert_eq!(TraceValue::s(0), TraceValue::one());
    }
}
