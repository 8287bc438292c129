//! Evaluation of symbolic values at random points of a prime field.
//!
//! Used for cheap probabilistic identity checks and for rank estimates of the
//! generated equation systems. A point is *admissible* when `q, z` are
//! nonzero, `λ(q, z)` is a nonzero square and `w` is one of its roots.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::Rng;
use thiserror::Error;

use super::field::XScalar;
use super::laurent::IntLaurent;
use super::rational::RationalFn;
use super::spoly::{SMonomial, XPoly};

/// Primes `≡ 1 (mod 4)` used by default.
pub const DEFAULT_PRIMES: [u64; 6] = [
    998_244_353,
    754_974_721,
    167_772_161,
    469_762_049,
    2_013_265_921,
    1_000_000_009,
];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModularError {
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
    #[error("a denominator vanishes at the chosen point; resample")]
    ZeroDenominator,
    #[error("assignment violates w^2 = lambda(q, z)")]
    WConstraint,
    #[error("no value assigned to s_{0}")]
    MissingParameter(i32),
    #[error("no admissible evaluation point found after {0} attempts")]
    NoAdmissiblePoint(usize),
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse modulo a prime; `None` for zero.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    (a != 0).then(|| pow_mod(a, p - 2, p))
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Square root modulo an odd prime (Tonelli–Shanks). `None` if `a` is a
/// non-residue.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

fn reduce_big(c: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((c % &m) + &m) % &m;
    r.to_u64().expect("residue fits")
}

/// A point of `F_p` for `q, z, w` and the `s_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub prime: u64,
    pub q: u64,
    pub z: u64,
    pub w: u64,
    pub s: BTreeMap<i32, u64>,
}

impl Assignment {
    /// `λ(q, z) = (z + 1 - q)/(q z)`, or `None` if `q z ≡ 0`.
    pub fn lambda(&self) -> Option<u64> {
        let p = self.prime;
        let den = inv_mod(mul_mod(self.q, self.z, p), p)?;
        let num = (self.z + 1 + p - self.q % p) % p;
        Some(mul_mod(num, den, p))
    }

    fn check(&self) -> Result<(), ModularError> {
        if !is_prime(self.prime) || self.prime == 2 {
            return Err(ModularError::NotPrime(self.prime));
        }
        let l = self.lambda().ok_or(ModularError::ZeroDenominator)?;
        if mul_mod(self.w, self.w, self.prime) != l {
            return Err(ModularError::WConstraint);
        }
        Ok(())
    }

    pub fn laurent(&self, x: &IntLaurent) -> Result<u64, ModularError> {
        let p = self.prime;
        let qi = inv_mod(self.q, p).ok_or(ModularError::ZeroDenominator)?;
        let zi = inv_mod(self.z, p).ok_or(ModularError::ZeroDenominator)?;
        let mut acc = 0;
        for (&(a, b), c) in x.terms() {
            let qa = if a >= 0 {
                pow_mod(self.q, a as u64, p)
            } else {
                pow_mod(qi, (-a) as u64, p)
            };
            let zb = if b >= 0 {
                pow_mod(self.z, b as u64, p)
            } else {
                pow_mod(zi, (-b) as u64, p)
            };
            let t = mul_mod(mul_mod(reduce_big(c, p), qa, p), zb, p);
            acc = (acc + t) % p;
        }
        Ok(acc)
    }

    pub fn rational(&self, x: &RationalFn) -> Result<u64, ModularError> {
        let n = self.laurent(x.numer())?;
        let d = self.laurent(x.denom())?;
        let di = inv_mod(d, self.prime).ok_or(ModularError::ZeroDenominator)?;
        Ok(mul_mod(n, di, self.prime))
    }

    pub fn xscalar(&self, x: &XScalar) -> Result<u64, ModularError> {
        let a = self.rational(&x.a)?;
        let b = self.rational(&x.b)?;
        Ok((a + mul_mod(b, self.w, self.prime)) % self.prime)
    }

    pub fn smonomial(&self, m: &SMonomial) -> Result<u64, ModularError> {
        let mut acc = 1;
        for &(k, e) in m.pairs() {
            let v = *self.s.get(&k).ok_or(ModularError::MissingParameter(k))?;
            acc = mul_mod(acc, pow_mod(v, e as u64, self.prime), self.prime);
        }
        Ok(acc)
    }
}

/// Evaluates `x` at an admissible point.
pub fn modular_evaluate(x: &XPoly, at: &Assignment) -> Result<u64, ModularError> {
    at.check()?;
    let p = at.prime;
    let mut acc = 0;
    for (m, c) in x.terms() {
        acc = (acc + mul_mod(at.xscalar(c)?, at.smonomial(m)?, p)) % p;
    }
    Ok(acc)
}

/// Draws an admissible point, with random values for the listed `s_k`.
pub fn sample_point<R: Rng>(
    prime: u64,
    s_indices: impl IntoIterator<Item = i32>,
    rng: &mut R,
) -> Result<Assignment, ModularError> {
    const ATTEMPTS: usize = 256;
    if !is_prime(prime) || prime == 2 {
        return Err(ModularError::NotPrime(prime));
    }
    let s_indices: Vec<i32> = s_indices.into_iter().collect();
    for _ in 0..ATTEMPTS {
        let q = rng.gen_range(2..prime);
        let z = rng.gen_range(2..prime);
        let mut a = Assignment {
            prime,
            q,
            z,
            w: 0,
            s: BTreeMap::new(),
        };
        let Some(l) = a.lambda() else { continue };
        if l == 0 {
            continue;
        }
        let Some(w) = sqrt_mod(l, prime) else {
            continue;
        };
        a.w = w;
        for &k in &s_indices {
            a.s.insert(k, rng.gen_range(1..prime));
        }
        return Ok(a);
    }
    Err(ModularError::NoAdmissiblePoint(ATTEMPTS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::field::lambda;
    use crate::scalars::text::parse_xpoly;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn default_primes_are_admissible() {
        for p in DEFAULT_PRIMES {
            assert!(is_prime(p));
            assert_eq!(p % 4, 1);
        }
        assert!(!is_prime(1_000_000_011 * 3));
    }

    #[test]
    fn tonelli_shanks_roots() {
        let p = 998_244_353;
        for a in [1u64, 4, 9, 12345, 998_244_352] {
            if let Some(r) = sqrt_mod(a, p) {
                assert_eq!(mul_mod(r, r, p), a);
            }
        }
        assert_eq!(sqrt_mod(3, 7), None);
    }

    #[test]
    fn evaluation_of_one_and_w_squared() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let pt = sample_point(DEFAULT_PRIMES[0], [], &mut rng).unwrap();
        assert_eq!(modular_evaluate(&XPoly::one(), &pt).unwrap(), 1);
        let w2 = parse_xpoly("w^2").unwrap();
        let l = XPoly::constant(XScalar::from_rational(lambda().clone()));
        assert_eq!(
            modular_evaluate(&w2, &pt).unwrap(),
            modular_evaluate(&l, &pt).unwrap()
        );
    }

    #[test]
    fn bad_w_is_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut pt = sample_point(DEFAULT_PRIMES[1], [], &mut rng).unwrap();
        pt.w = (pt.w + 1) % pt.prime;
        assert_eq!(
            modular_evaluate(&XPoly::one(), &pt),
            Err(ModularError::WConstraint)
        );
    }

    #[test]
    fn zero_denominator_is_reported() {
        let x = parse_xpoly("1/(q - 2)").unwrap();
        let mut pt = Assignment {
            prime: 13,
            q: 2,
            z: 1,
            w: 0,
            s: BTreeMap::new(),
        };
        // λ(2, 1) = 0 mod 13 -> w = 0 is admissible for the constraint
        assert_eq!(pt.lambda(), Some(0));
        assert_eq!(
            modular_evaluate(&x, &pt),
            Err(ModularError::ZeroDenominator)
        );
        pt.s.insert(1, 3);
        assert_eq!(
            pt.smonomial(&SMonomial::s(2)),
            Err(ModularError::MissingParameter(2))
        );
    }
}
