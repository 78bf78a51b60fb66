use super::{fmt_rational, to_f64, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Trial division stops at this prime bound when square-free reducing a radicand.
pub const DEFAULT_FACTOR_BOUND: u64 = 1 << 16;

/// Splits a positive integer `n` as `a²·b`, pulling out square factors of
/// primes up to `bound`. A leftover cofactor that is a perfect square is also
/// pulled out. Returns `(a, b)`; `b` is square-free whenever every prime
/// factor of `n` either is at most `bound` or occurs to the first power.
pub fn reduce_radicand(n: &BigInt, bound: u64) -> (BigInt, BigInt) {
    debug_assert!(n.is_positive());
    if let Some(small) = n.to_u64() {
        let (a, b) = reduce_u64(small, bound);
        return (BigInt::from(a), BigInt::from(b));
    }
    let mut outside = BigInt::one();
    let mut inside = BigInt::one();
    let mut rest = n.clone();
    let mut p: u64 = 2;
    while p <= bound {
        let pb = BigInt::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut count = 0;
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            count += 1;
        }
        for _ in 0..count / 2 {
            outside *= &pb;
        }
        if count % 2 == 1 {
            inside *= &pb;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        (outside * root, inside)
    } else {
        (outside, inside * rest)
    }
}

fn reduce_u64(mut rest: u64, bound: u64) -> (u64, u64) {
    let mut outside: u64 = 1;
    let mut inside: u64 = 1;
    let mut p: u64 = 2;
    while p <= bound && p.saturating_mul(p) <= rest {
        let mut count = 0;
        while rest % p == 0 {
            rest /= p;
            count += 1;
        }
        for _ in 0..count / 2 {
            outside *= p;
        }
        if count % 2 == 1 {
            inside *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let root = rest.sqrt();
    if root * root == rest {
        outside *= root;
    } else {
        inside *= rest;
    }
    (outside, inside)
}

/// The exact real number `q·√g` with `q`, `g` rational and `g > 0`.
///
/// The radicand is kept as an integer with square factors pulled into `q`
/// (up to the trial-division bound), and `g = 1` whenever `q = 0`.
#[derive(Clone, Debug)]
pub struct ScaledRational {
    q: Rational,
    g: Rational,
}

impl ScaledRational {
    pub fn new(q: Rational, g: Rational) -> Result<Self> {
        Self::new_with_bound(q, g, DEFAULT_FACTOR_BOUND)
    }

    pub fn new_with_bound(q: Rational, g: Rational, bound: u64) -> Result<Self> {
        if !g.is_positive() {
            return Err(Error::InvalidRadicand(fmt_rational(&g)));
        }
        if q.is_zero() {
            return Ok(Self::zero());
        }
        // √(a/b) = √(ab)/b
        let n = g.numer() * g.denom();
        let (outside, inside) = reduce_radicand(&n, bound);
        let q = q * Rational::new(outside, g.denom().clone());
        Ok(ScaledRational {
            q,
            g: Rational::from_integer(inside),
        })
    }

    pub fn rational(q: Rational) -> Self {
        ScaledRational {
            q,
            g: Rational::one(),
        }
    }

    /// `√g` for rational `g > 0`.
    pub fn sqrt(g: Rational) -> Result<Self> {
        Self::new(Rational::one(), g)
    }

    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn g(&self) -> &Rational {
        &self.g
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }

    pub fn signum(&self) -> i32 {
        if self.q.is_positive() {
            1
        } else if self.q.is_negative() {
            -1
        } else {
            0
        }
    }

    /// The rational value when the radicand is a perfect square.
    pub fn as_rational(&self) -> Option<Rational> {
        self.g.is_one().then(|| self.q.clone())
    }

    /// `q²·g`, the exact square of the value.
    pub fn squared(&self) -> Rational {
        &self.q * &self.q * &self.g
    }

    pub fn neg(&self) -> Self {
        ScaledRational {
            q: -&self.q,
            g: self.g.clone(),
        }
    }

    pub fn abs(&self) -> Self {
        ScaledRational {
            q: self.q.abs(),
            g: self.g.clone(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        ScaledRational {
            q: &self.q * r,
            g: self.g.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // for square-free g1, g2: √(g1 g2) = d·√(g1 g2 / d²) with d = gcd(g1, g2)
        let g1 = self.g.to_integer();
        let g2 = other.g.to_integer();
        let d = g1.gcd(&g2);
        let inside = (&g1 / &d) * (&g2 / &d);
        let q = &self.q * &other.q * Rational::from_integer(d);
        let candidate = ScaledRational {
            q,
            g: Rational::from_integer(inside),
        };
        // unreduced radicands may still hide squares; renormalize in that case
        let root = candidate.g.to_integer().sqrt();
        if &root * &root == candidate.g.to_integer() {
            return ScaledRational::rational(candidate.q * Rational::from_integer(root));
        }
        candidate
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::precondition("reciprocal of zero"));
        }
        // 1/(q√g) = √g/(q g)
        Ok(ScaledRational {
            q: (&self.q * &self.g).recip(),
            g: self.g.clone(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.recip()?))
    }

    /// `Some(r)` with `r` rational when `self = r·other`, i.e. both share a radicand class.
    pub fn ratio(&self, other: &Self) -> Option<Rational> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Rational::zero());
        }
        let k = square_ratio(&self.g, &other.g)?;
        Some(&self.q * k / &other.q)
    }

    /// Sum, defined when both radicands agree up to a rational square.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        match square_ratio(&self.g, &other.g) {
            Some(k) => {
                let q = &self.q * k + &other.q;
                if q.is_zero() {
                    Ok(Self::zero())
                } else {
                    Ok(ScaledRational {
                        q,
                        g: other.g.clone(),
                    })
                }
            }
            None => Err(Error::RadicandMismatch {
                left: fmt_rational(&self.g),
                right: fmt_rational(&other.g),
            }),
        }
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.q) * to_f64(&self.g).sqrt()
    }
}

/// `Some(k)` with `k > 0` rational when `√a = k·√b`.
fn square_ratio(a: &Rational, b: &Rational) -> Option<Rational> {
    if a == b {
        return Some(Rational::one());
    }
    let r = a / b;
    let num = r.numer().sqrt();
    let den = r.denom().sqrt();
    (&num * &num == *r.numer() && &den * &den == *r.denom()).then(|| Rational::new(num, den))
}

impl PartialEq for ScaledRational {
    fn eq(&self, other: &Self) -> bool {
        self.signum() == other.signum() && self.squared() == other.squared()
    }
}

impl Eq for ScaledRational {}

impl PartialOrd for ScaledRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ScaledRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let (s, t) = (self.signum(), other.signum());
        if s != t {
            return s.cmp(&t);
        }
        let by_square = self.squared().cmp(&other.squared());
        if s < 0 {
            by_square.reverse()
        } else {
            by_square
        }
    }
}

impl From<Rational> for ScaledRational {
    fn from(q: Rational) -> Self {
        ScaledRational::rational(q)
    }
}

impl fmt::Display for ScaledRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.g.is_one() || self.q.is_zero() {
            write!(f, "{}", fmt_rational(&self.q))
        } else if self.q.is_one() {
            write!(f, "√({})", fmt_rational(&self.g))
        } else {
            write!(f, "{}·√({})", fmt_rational(&self.q), fmt_rational(&self.g))
        }
    }
}

/// A finite sum `Σ c_k·√g_k` with radicands grouped by square class.
///
/// Square roots of rationals from distinct square classes are linearly
/// independent over the rationals, so the grouped form decides equality exactly.
#[derive(Clone, Debug, Default)]
pub struct RadicalSum {
    terms: Vec<ScaledRational>,
}

impl RadicalSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: &ScaledRational) {
        if x.is_zero() {
            return;
        }
        for t in self.terms.iter_mut() {
            if let Ok(sum) = t.checked_add(x) {
                *t = sum;
                self.terms.retain(|t| !t.is_zero());
                return;
            }
        }
        self.terms.push(x.clone());
    }

    pub fn sub(&mut self, x: &ScaledRational) {
        self.add(&x.neg());
    }

    pub fn add_sum(&mut self, other: &RadicalSum) {
        for t in &other.terms {
            self.add(t);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[ScaledRational] {
        &self.terms
    }

    /// The sum as a single scaled rational when only one radicand class occurs.
    pub fn single(&self) -> Option<ScaledRational> {
        match self.terms.len() {
            0 => Some(ScaledRational::zero()),
            1 => Some(self.terms[0].clone()),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms.iter().map(ScaledRational::to_f64).sum()
    }
}

impl PartialEq for RadicalSum {
    fn eq(&self, other: &Self) -> bool {
        let mut diff = self.clone();
        for t in &other.terms {
            diff.sub(t);
        }
        diff.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratgeo::{int, rat};

    #[test]
    fn radicand_reduction() {
        let (a, b) = reduce_radicand(&BigInt::from(72), DEFAULT_FACTOR_BOUND);
        assert_eq!((a, b), (BigInt::from(6), BigInt::from(2)));
        let (a, b) = reduce_radicand(&BigInt::from(1), DEFAULT_FACTOR_BOUND);
        assert_eq!((a, b), (BigInt::from(1), BigInt::from(1)));
        // 10007 is prime; its square is found by the perfect-square fallback
        let big = BigInt::from(10007u64 * 10007 * 3);
        let (a, b) = reduce_radicand(&big, 100);
        assert_eq!((a, b), (BigInt::from(10007), BigInt::from(3)));
        let huge = BigInt::from(u64::MAX) * BigInt::from(4);
        let (a, b) = reduce_radicand(&huge, DEFAULT_FACTOR_BOUND);
        assert_eq!(&a * &a * &b, huge);
    }

    #[test]
    fn canonical_forms() {
        let x = ScaledRational::new(int(1), rat(1, 2)).unwrap();
        assert_eq!(x.q(), &rat(1, 2));
        assert_eq!(x.g(), &int(2));
        let y = ScaledRational::sqrt(int(8)).unwrap();
        assert_eq!((y.q(), y.g()), (&int(2), &int(2)));
        assert!(ScaledRational::new(int(1), int(0)).is_err());
        assert!(ScaledRational::new(int(1), int(-3)).is_err());
    }

    #[test]
    fn products_and_sums() {
        let r2 = ScaledRational::sqrt(int(2)).unwrap();
        let r6 = ScaledRational::sqrt(int(6)).unwrap();
        let r3 = ScaledRational::sqrt(int(3)).unwrap();
        assert_eq!(r2.mul(&r2), ScaledRational::rational(int(2)));
        assert_eq!(r2.mul(&r6), ScaledRational::new(int(2), int(3)).unwrap());
        assert_eq!(r2.checked_add(&r2).unwrap(), ScaledRational::new(int(2), int(2)).unwrap());
        assert!(r2.checked_add(&r3).is_err());
        assert_eq!(r2.checked_sub(&r2).unwrap(), ScaledRational::zero());
        assert_eq!(r2.recip().unwrap(), ScaledRational::new(rat(1, 2), int(2)).unwrap());
        assert_eq!(r6.ratio(&r2), None);
        assert_eq!(r2.scale(&int(3)).ratio(&r2), Some(int(3)));
    }

    #[test]
    fn ordering_and_display() {
        let r2 = ScaledRational::sqrt(int(2)).unwrap();
        let three_halves = ScaledRational::rational(rat(3, 2));
        assert!(r2 < three_halves);
        assert!(r2.neg() > three_halves.neg());
        assert!(ScaledRational::zero() < r2);
        assert_eq!(r2.scale(&rat(1, 3)).to_string(), "1/3·√(2)");
        assert_eq!(three_halves.to_string(), "3/2");
    }

    #[test]
    fn radical_sum_groups_classes() {
        let r2 = ScaledRational::sqrt(int(2)).unwrap();
        let r8 = ScaledRational::sqrt(int(8)).unwrap();
        let r3 = ScaledRational::sqrt(int(3)).unwrap();
        let mut s = RadicalSum::new();
        s.add(&r2);
        s.add(&r3);
        s.add(&r8);
        assert_eq!(s.terms().len(), 2);
        let mut t = RadicalSum::new();
        t.add(&r3);
        t.add(&r2.scale(&int(3)));
        assert_eq!(s, t);
        s.sub(&r3);
        assert_eq!(s.single(), Some(r2.scale(&int(3))));
    }
}
