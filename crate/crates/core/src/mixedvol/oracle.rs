//! Independent mixed-volume evaluation by interpolating the volume polynomial.
//!
//! `Vol(λ_1 C_1 + … + λ_n C_n)` is a homogeneous polynomial of degree `n`; its
//! coefficient of `λ_1⋯λ_n` is `n!·V_n(C_1, …, C_n)`. Sampling at the lattice
//! points `{λ ∈ Z_{≥0}^n : Σλ = n}` determines it uniquely.

use crate::error::{Error, Result};
use crate::polytope::{minkowski_sum_all, VPolytope};
use crate::ratgeo::{factorial, QMatrix, Rational};
use num_bigint::BigInt;
use num_traits::{One, Pow};

/// All `a ∈ Z_{≥0}^m` with `Σa = total`, in lexicographic order.
pub fn compositions(m: usize, total: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(m - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn monomial(lambda: &[usize], alpha: &[usize]) -> Rational {
    let mut acc = BigInt::one();
    for (l, a) in lambda.iter().zip(alpha) {
        acc *= Pow::pow(BigInt::from(*l), *a as u32);
    }
    Rational::from_integer(acc)
}

/// `V_n(C_1, …, C_n)` as the normalized coefficient of `λ_1⋯λ_n`.
pub fn mixed_volume_by_interpolation(bodies: &[&VPolytope]) -> Result<Rational> {
    let n = bodies.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    for b in bodies {
        if b.ambient_dim() != n {
            return Err(Error::Arity {
                expected: b.ambient_dim(),
                found: n,
            });
        }
    }
    let monomials = compositions(n, n);
    let samples = compositions(n, n);
    let mut rows = Vec::with_capacity(samples.len());
    let mut values = Vec::with_capacity(samples.len());
    for lambda in &samples {
        rows.push(monomials.iter().map(|a| monomial(lambda, a)).collect());
        let scaled: Vec<VPolytope> = bodies
            .iter()
            .zip(lambda)
            .map(|(b, &l)| b.scale(&Rational::from_integer(BigInt::from(l))))
            .collect();
        let sum = minkowski_sum_all(&scaled.iter().collect::<Vec<_>>(), n)?;
        values.push(sum.volume());
    }
    let m = QMatrix::from_rows(&rows, monomials.len())?;
    let coeffs = m
        .solve(&values)?
        .ok_or_else(|| Error::invariant("volume samples are inconsistent with a polynomial"))?;
    let target = monomials
        .iter()
        .position(|a| a.iter().all(|&x| x == 1))
        .expect("the all-ones exponent has degree n");
    Ok(&coeffs[target] / Rational::from_integer(factorial(n)))
}
