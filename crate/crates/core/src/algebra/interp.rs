use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{MultiPoly, ScaledPoly, Var};
use crate::error::{Error, Result};

/// Fits the unique polynomial of degree at most `degree_bound` through the
/// first `degree_bound + 1` samples and checks it against every remaining
/// sample.
///
/// Coefficients are computed in exact rational arithmetic and must come out
/// integral.
pub fn interpolate_univariate(var: Var, samples: &[(i64, BigInt)], degree_bound: usize) -> Result<MultiPoly> {
    let (fit, check) = split_samples(samples, degree_bound)?;
    let coeffs = newton_coefficients(fit);
    let mut integral = Vec::with_capacity(coeffs.len());
    for (degree, c) in coeffs.into_iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::NonIntegralCoefficient {
                degree,
                coeff: c.to_string(),
            });
        }
        integral.push(c.to_integer());
    }
    let poly = MultiPoly::from_univariate(var, &integral);

    for (t, expected) in check {
        let got = poly.evaluate(&[(var, BigInt::from(*t))])?;
        if &got != expected {
            return Err(Error::InterpolationResidual {
                point: *t,
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }
    Ok(poly)
}

/// Rational-coefficient variant of [`interpolate_univariate`], for counts
/// such as open-polytope Ehrhart polynomials whose coefficients need not be
/// integers.
pub fn interpolate_rational(var: Var, samples: &[(i64, BigInt)], degree_bound: usize) -> Result<ScaledPoly> {
    let (fit, check) = split_samples(samples, degree_bound)?;
    let coeffs = newton_coefficients(fit);
    let denom = coeffs
        .iter()
        .fold(BigInt::from(1), |l, c| num_integer::Integer::lcm(&l, c.denom()));
    let numer: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(denom.clone())).to_integer())
        .collect();
    let numerator = MultiPoly::from_univariate(var, &numer);
    for (t, expected) in check {
        let got = numerator.evaluate(&[(var, BigInt::from(*t))])?;
        if got != expected * &denom {
            return Err(Error::InterpolationResidual {
                point: *t,
                expected: expected.to_string(),
                got: format!("{got}/{denom}"),
            });
        }
    }
    ScaledPoly::new(numerator, denom)
}

type Samples<'a> = &'a [(i64, BigInt)];

/// Fitting points and verification points.
fn split_samples(samples: Samples<'_>, degree_bound: usize) -> Result<(Samples<'_>, Samples<'_>)> {
    let needed = degree_bound + 1;
    if samples.len() < needed {
        return Err(Error::InsufficientSamples {
            needed,
            got: samples.len(),
        });
    }
    let mut seen = BTreeSet::new();
    for (t, _) in samples {
        if !seen.insert(*t) {
            return Err(Error::DuplicateSample(*t));
        }
    }
    Ok(samples.split_at(needed))
}

/// [`interpolate_counts`] with rational coefficients allowed.
pub fn interpolate_counts_rational<F>(var: Var, degree_bound: usize, start: i64, count: F) -> Result<ScaledPoly>
where
    F: FnMut(i64) -> Result<BigInt>,
{
    let samples = sample(degree_bound, start, count)?;
    interpolate_rational(var, &samples, degree_bound)
}

fn sample<F>(degree_bound: usize, start: i64, mut count: F) -> Result<Vec<(i64, BigInt)>>
where
    F: FnMut(i64) -> Result<BigInt>,
{
    (0..degree_bound as i64 + 3)
        .map(|k| {
            let t = start + k;
            count(t).map(|c| (t, c))
        })
        .collect()
}

/// Samples `count` at `start, start+1, ..., start+degree_bound+2` and
/// interpolates; the two extra points verify the degree bound.
pub fn interpolate_counts<F>(var: Var, degree_bound: usize, start: i64, count: F) -> Result<MultiPoly>
where
    F: FnMut(i64) -> Result<BigInt>,
{
    let samples = sample(degree_bound, start, count)?;
    interpolate_univariate(var, &samples, degree_bound)
}

/// Monomial coefficients `c_0..c_d` of the interpolant through `points`.
fn newton_coefficients(points: &[(i64, BigInt)]) -> Vec<BigRational> {
    let n = points.len();
    let xs: Vec<BigRational> = points
        .iter()
        .map(|(t, _)| BigRational::from_integer(BigInt::from(*t)))
        .collect();
    let mut dd: Vec<BigRational> = points
        .iter()
        .map(|(_, v)| BigRational::from_integer(v.clone()))
        .collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner on the Newton basis: c(t) = dd[n-1]; c = c*(t - x_i) + dd[i].
    let mut coeffs = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut shifted = vec![BigRational::zero(); n];
        for d in 0..n {
            if coeffs[d].is_zero() {
                continue;
            }
            if d + 1 < n {
                shifted[d + 1] += &coeffs[d];
            }
            shifted[d] -= &coeffs[d] * &xs[i];
        }
        shifted[0] += &dd[i];
        coeffs = shifted;
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}
