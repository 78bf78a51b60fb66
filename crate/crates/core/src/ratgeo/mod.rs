//! Exact scalars, vectors, matrices and subspaces.

mod linalg;
mod scalar;
mod subspace;

pub use linalg::{kernel_basis, QMatrix};
pub use scalar::{reduce_radicand, RadicalSum, ScaledRational, DEFAULT_FACTOR_BOUND};
pub use subspace::{gram_sqrt, orthogonal_projection, Subspace};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;
pub type QVector = Vec<Rational>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn qvec(entries: &[i64]) -> QVector {
    entries.iter().map(|&x| int(x)).collect()
}

pub fn zero_vec(n: usize) -> QVector {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> QVector {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"-0.25"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.trim_start().starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let num: BigInt = digits.parse().map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let value = Rational::new(num, den);
        return Ok(if negative { -value } else { value });
    }
    let num: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(num))
}

/// Prints integers as `p` and everything else as `p/q`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn norm_sq(a: &[Rational]) -> Rational {
    dot(a, a)
}

pub fn add(a: &[Rational], b: &[Rational]) -> QVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> QVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Rational], s: &Rational) -> QVector {
    a.iter().map(|x| x * s).collect()
}

pub fn neg(a: &[Rational]) -> QVector {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(a: &[Rational]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Positive multiple of `v` with coprime integer entries. Zero stays zero.
pub fn primitive(v: &[Rational]) -> QVector {
    if is_zero_vec(v) {
        return v.to_vec();
    }
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    ints.into_iter()
        .map(|x| Rational::from_integer(x / &g))
        .collect()
}

/// Returns `Some(mu)` with `mu > 0` when `a = mu·b`.
pub fn positive_multiple(a: &[Rational], b: &[Rational]) -> Option<Rational> {
    let k = b.iter().position(|x| !x.is_zero())?;
    let mu = &a[k] / &b[k];
    if !mu.is_positive() {
        return None;
    }
    a.iter()
        .zip(b)
        .all(|(x, y)| *x == &mu * y)
        .then_some(mu)
}

/// Lexicographic comparison used for canonical vertex order.
pub fn lex_cmp(a: &[Rational], b: &[Rational]) -> std::cmp::Ordering {
    a.cmp(b)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_rational_spellings() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational("1.5").unwrap(), rat(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn primitive_scales_to_coprime_integers() {
        let v = vec![rat(1, 2), rat(-3, 4), int(0)];
        assert_eq!(primitive(&v), qvec(&[2, -3, 0]));
        assert_eq!(primitive(&qvec(&[0, 6, 9])), qvec(&[0, 2, 3]));
    }

    #[test]
    fn positive_multiple_detects_rays() {
        assert_eq!(positive_multiple(&qvec(&[2, 4]), &qvec(&[1, 2])), Some(int(2)));
        assert_eq!(positive_multiple(&qvec(&[-2, -4]), &qvec(&[1, 2])), None);
        assert_eq!(positive_multiple(&qvec(&[2, 5]), &qvec(&[1, 2])), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 0), BigInt::from(1));
        assert_eq!(binomial(2, 3), BigInt::from(0));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
