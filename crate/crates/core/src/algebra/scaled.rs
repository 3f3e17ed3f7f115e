use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{MultiPoly, Var};
use crate::error::{Error, Result};

/// A polynomial with rational coefficients, stored as an integer
/// polynomial over a positive common denominator.
///
/// The pair is kept reduced (the content of the numerator is coprime to
/// the denominator), so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScaledPoly {
    numerator: MultiPoly,
    denominator: BigInt,
}

impl ScaledPoly {
    pub fn new(numerator: MultiPoly, denominator: BigInt) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(Self::reduced(numerator, denominator))
    }

    pub fn integral(p: MultiPoly) -> Self {
        ScaledPoly {
            numerator: p,
            denominator: BigInt::one(),
        }
    }

    fn reduced(numerator: MultiPoly, denominator: BigInt) -> Self {
        if numerator.is_zero() {
            return Self::integral(numerator);
        }
        let mut g = denominator.abs();
        for (_, c) in numerator.terms() {
            g = g.gcd(c);
        }
        if denominator.is_negative() {
            g = -g;
        }
        let numerator = MultiPoly::from_terms(numerator.terms().map(|(e, c)| (*e, c / &g)));
        ScaledPoly {
            numerator,
            denominator: denominator / g,
        }
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    /// The integer polynomial, if every coefficient is an integer.
    pub fn to_integral(&self) -> Option<MultiPoly> {
        self.denominator.is_one().then(|| self.numerator.clone())
    }

    /// Like [`ScaledPoly::to_integral`] but reports the offending
    /// denominator.
    pub fn into_integral(self) -> Result<MultiPoly> {
        if self.denominator.is_one() {
            Ok(self.numerator)
        } else {
            Err(Error::NonIntegralCoefficient {
                degree: self.numerator.total_degree() as usize,
                coeff: self.to_string(),
            })
        }
    }

    /// Applies a coefficient-preserving map (substitution, sign flips) to
    /// the numerator.
    pub fn map(&self, f: impl FnOnce(&MultiPoly) -> MultiPoly) -> Self {
        Self::reduced(f(&self.numerator), self.denominator.clone())
    }

    pub fn evaluate(&self, point: &[(Var, BigInt)]) -> Result<BigRational> {
        Ok(BigRational::new(
            self.numerator.evaluate(point)?,
            self.denominator.clone(),
        ))
    }

    pub fn eval_i64(&self, point: &[(Var, i64)]) -> Result<BigRational> {
        Ok(BigRational::new(
            self.numerator.eval_i64(point)?,
            self.denominator.clone(),
        ))
    }

    pub fn partial_eval(&self, point: &[(Var, BigInt)]) -> Self {
        self.map(|p| p.partial_eval(point))
    }

    pub fn rename(&self, from: Var, to: Var) -> Self {
        self.map(|p| p.rename(from, to))
    }

    pub fn negate_vars(&self, vars: &[Var]) -> Self {
        self.map(|p| p.negate_vars(vars))
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Terms as JSON plus the denominator as a decimal string.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "terms": self.numerator.to_json(),
            "denominator": self.denominator.to_string(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let bad = |m: &str| Error::InvalidArgument(format!("scaled polynomial JSON: {m}"));
        let terms = value.get("terms").ok_or_else(|| bad("missing terms"))?;
        let denom = value
            .get("denominator")
            .and_then(|d| d.as_str())
            .ok_or_else(|| bad("missing denominator"))?
            .parse::<BigInt>()
            .map_err(|e| bad(&e.to_string()))?;
        ScaledPoly::new(MultiPoly::from_json(terms)?, denom)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::reduced(self.numerator.scale(c), self.denominator.clone())
    }
}

impl From<MultiPoly> for ScaledPoly {
    fn from(p: MultiPoly) -> Self {
        ScaledPoly::integral(p)
    }
}

impl Add for &ScaledPoly {
    type Output = ScaledPoly;

    fn add(self, rhs: &ScaledPoly) -> ScaledPoly {
        let l = self.denominator.lcm(&rhs.denominator);
        let a = self.numerator.scale(&(&l / &self.denominator));
        let b = rhs.numerator.scale(&(&l / &rhs.denominator));
        ScaledPoly::reduced(a + b, l)
    }
}

impl Mul for &ScaledPoly {
    type Output = ScaledPoly;

    fn mul(self, rhs: &ScaledPoly) -> ScaledPoly {
        ScaledPoly::reduced(&self.numerator * &rhs.numerator, &self.denominator * &rhs.denominator)
    }
}

impl Mul<&MultiPoly> for &ScaledPoly {
    type Output = ScaledPoly;

    fn mul(self, rhs: &MultiPoly) -> ScaledPoly {
        ScaledPoly::reduced(&self.numerator * rhs, self.denominator.clone())
    }
}

impl std::iter::Sum for ScaledPoly {
    fn sum<I: Iterator<Item = ScaledPoly>>(iter: I) -> Self {
        iter.fold(ScaledPoly::integral(MultiPoly::zero()), |acc, p| &acc + &p)
    }
}

impl fmt::Display for ScaledPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({})/{}", self.numerator, self.denominator)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Var;

    #[test]
    fn reduces_to_lowest_terms() {
        let t = MultiPoly::var(Var::T);
        let p = ScaledPoly::new(t.scale(&BigInt::from(4)), BigInt::from(-6)).unwrap();
        assert_eq!(p.to_string(), "(-2*t)/3");
        let half = ScaledPoly::new(t.clone(), BigInt::from(2)).unwrap();
        assert_eq!((&half + &half).to_integral(), Some(t));
    }

    #[test]
    fn json_round_trip() {
        let t = MultiPoly::var(Var::T);
        let p = ScaledPoly::new(&t.pow(2) - &t, BigInt::from(2)).unwrap();
        assert_eq!(ScaledPoly::from_json(&p.to_json()).unwrap(), p);
        assert_eq!(
            p.eval_i64(&[(Var::T, 4)]).unwrap(),
            BigRational::from_integer(BigInt::from(6))
        );
    }

    #[test]
    fn zero_has_unit_denominator() {
        let z = ScaledPoly::new(MultiPoly::zero(), BigInt::from(5)).unwrap();
        assert_eq!(z, ScaledPoly::integral(MultiPoly::zero()));
    }
}
