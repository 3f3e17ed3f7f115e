use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of polynomial variables.
pub const NVARS: usize = 7;

/// Polynomial variables, in the fixed global order used for printing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
    W,
    U,
    V,
    T,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::Y, Var::Z, Var::W, Var::U, Var::V, Var::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["x", "y", "z", "w", "u", "v", "t"][self.index()]
    }

    pub fn from_name(name: &str) -> Result<Var> {
        Var::ALL
            .into_iter()
            .find(|v| v.name() == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub type Exponents = [u32; NVARS];

/// Sparse polynomial with arbitrary-precision integer coefficients.
///
/// No stored coefficient is zero, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

/// JSON form of one term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<u32>,
    pub coeff: String,
}

fn total_degree(e: &Exponents) -> u32 {
    e.iter().sum()
}

/// Graded lexicographic order, largest first.
fn grlex_desc(a: &Exponents, b: &Exponents) -> Ordering {
    total_degree(b).cmp(&total_degree(a)).then_with(|| b.cmp(a))
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term([0; NVARS], c.into());
        p
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::monomial(v, 1)
    }

    /// `v^exp`.
    pub fn monomial(v: Var, exp: u32) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = exp;
        let mut p = MultiPoly::zero();
        p.add_term(e, BigInt::one());
        p
    }

    /// Polynomial in one variable from coefficients `c_0, c_1, ...`.
    pub fn from_univariate(v: Var, coeffs: &[BigInt]) -> Self {
        let mut p = MultiPoly::zero();
        for (d, c) in coeffs.iter().enumerate() {
            let mut e = [0; NVARS];
            e[v.index()] = d as u32;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponents, BigInt)>) -> Self {
        let mut p = MultiPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponents) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Constant term.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(&[0; NVARS])
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|e| e[v.index()]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(total_degree).max().unwrap_or(0)
    }

    /// Variables that occur with a positive exponent.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|v| self.terms.keys().any(|e| e[v.index()] > 0))
            .collect()
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Simultaneous substitution of polynomials for variables.
    pub fn substitute(&self, subs: &[(Var, MultiPoly)]) -> MultiPoly {
        let mut table: [Option<&MultiPoly>; NVARS] = [None; NVARS];
        for (v, p) in subs {
            table[v.index()] = Some(p);
        }
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let mut kept = [0; NVARS];
            let mut term = MultiPoly::one();
            for (i, &k) in e.iter().enumerate() {
                match table[i] {
                    Some(p) if k > 0 => term = &term * &p.pow(k),
                    _ => kept[i] = k,
                }
            }
            let mut mono = MultiPoly::zero();
            mono.add_term(kept, c.clone());
            out += &(&term * &mono);
        }
        out
    }

    /// Substitution addressed by variable name.
    pub fn substitute_named(&self, subs: &[(&str, MultiPoly)]) -> Result<MultiPoly> {
        let resolved = subs
            .iter()
            .map(|(name, p)| Var::from_name(name).map(|v| (v, p.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.substitute(&resolved))
    }

    /// Replaces each listed variable `v` by `-v`.
    pub fn negate_vars(&self, vars: &[Var]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let odd = vars.iter().map(|v| e[v.index()]).sum::<u32>() % 2 == 1;
            out.add_term(*e, if odd { -c } else { c.clone() });
        }
        out
    }

    /// Renames variables (a permutation or an injective relabelling).
    pub fn rename(&self, from: Var, to: Var) -> MultiPoly {
        self.substitute(&[(from, MultiPoly::var(to))])
    }

    /// Replaces the listed variables by integers, keeping the others.
    pub fn partial_eval(&self, point: &[(Var, BigInt)]) -> MultiPoly {
        let subs: Vec<(Var, MultiPoly)> = point
            .iter()
            .map(|(v, c)| (*v, MultiPoly::constant(c.clone())))
            .collect();
        self.substitute(&subs)
    }

    /// Evaluates at an integer point; every occurring variable needs a value.
    /// `0^0` is taken as 1.
    pub fn evaluate(&self, point: &[(Var, BigInt)]) -> Result<BigInt> {
        let mut table: [Option<&BigInt>; NVARS] = [None; NVARS];
        for (v, c) in point {
            table[v.index()] = Some(c);
        }
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let value = table[i].ok_or(Error::UnassignedVariable(Var::ALL[i]))?;
                term *= num_traits::pow(value.clone(), k as usize);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Evaluation at small integers.
    pub fn eval_i64(&self, point: &[(Var, i64)]) -> Result<BigInt> {
        let point: Vec<(Var, BigInt)> = point.iter().map(|(v, c)| (*v, BigInt::from(*c))).collect();
        self.evaluate(&point)
    }

    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.sorted_terms()
            .into_iter()
            .map(|(e, c)| TermJson {
                exps: e.to_vec(),
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[TermJson]) -> Result<MultiPoly> {
        let mut p = MultiPoly::zero();
        for t in terms {
            if t.exps.len() != NVARS {
                return Err(Error::InvalidArgument(format!(
                    "term has {} exponents, expected {NVARS}",
                    t.exps.len()
                )));
            }
            let mut e = [0; NVARS];
            e.copy_from_slice(&t.exps);
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad coefficient `{}`", t.coeff)))?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_json_terms()).expect("terms serialize")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<MultiPoly> {
        let terms: Vec<TermJson> =
            serde_json::from_value(value.clone()).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        MultiPoly::from_json_terms(&terms)
    }

    fn sorted_terms(&self) -> Vec<(&Exponents, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex_desc(a.0, b.0));
        v
    }
}

fn monomial_text(e: &Exponents) -> String {
    let mut parts = Vec::new();
    for v in Var::ALL {
        match e[v.index()] {
            0 => {}
            1 => parts.push(v.name().to_string()),
            k => parts.push(format!("{}^{k}", v.name())),
        }
    }
    parts.join("*")
}

/// Terms in graded lexicographic order, e.g. `x^2 + x + y`, `3*x*y - 1`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let mono = monomial_text(e);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += &rhs;
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for i in 0..NVARS {
                    e[i] += eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(Var::Y)
    }
    fn c(k: i64) -> MultiPoly {
        MultiPoly::constant(k)
    }

    #[test]
    fn negate_vars_of_shifted_product() {
        let p = (x() - c(1)) * (y() - c(1));
        let q = p.negate_vars(&[Var::X, Var::Y]);
        assert_eq!(q, &(&(&x() * &y()) + &x()) + &(&y() + &c(1)));
    }

    #[test]
    fn evaluate_small_point() {
        let p = &(&x().pow(2) + &x()) + &y();
        assert_eq!(p.eval_i64(&[(Var::X, 1), (Var::Y, 1)]).unwrap(), BigInt::from(3));
    }

    #[test]
    fn evaluate_reports_missing_variable() {
        let p = &x() + &y();
        assert!(matches!(
            p.eval_i64(&[(Var::X, 1)]),
            Err(Error::UnassignedVariable(Var::Y))
        ));
    }

    #[test]
    fn zero_to_the_zero_is_one() {
        let p = &MultiPoly::monomial(Var::Z, 0) + &MultiPoly::var(Var::Z);
        assert_eq!(p.eval_i64(&[(Var::Z, 0)]).unwrap(), BigInt::from(1));
    }

    #[test]
    fn linear_shift_substitution() {
        let p = &x() + &c(1);
        let shifted = p.substitute(&[(Var::X, &x() - &c(1)), (Var::Y, &y() - &c(1))]);
        assert_eq!(shifted, x());
    }

    #[test]
    fn substitute_named_rejects_unknown() {
        let p = x();
        assert!(matches!(
            p.substitute_named(&[("q", c(1))]),
            Err(Error::UnknownVariable(_))
        ));
        assert_eq!(p.substitute_named(&[("x", c(4))]).unwrap(), c(4));
    }

    #[test]
    fn display_is_graded_lex() {
        let p = &(&(&y() + &c(3)) + &x().pow(2)) + &x().scale(&BigInt::from(3));
        assert_eq!(p.to_string(), "x^2 + 3*x + y + 3");
        assert_eq!((&x() - &c(1)).to_string(), "x - 1");
        assert_eq!((-&x()).to_string(), "-x");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!((&x() * &y()).to_string(), "x*y");
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..2), -5i64..=5), 0..5).prop_map(|ts| {
            MultiPoly::from_terms(ts.into_iter().map(|((a, b, z), k)| {
                let mut e = [0; NVARS];
                e[0] = a;
                e[1] = b;
                e[2] = z;
                (e, BigInt::from(k))
            }))
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
            for (_, k) in (&a * &b).terms() {
                prop_assert!(!k.is_zero());
            }
        }

        #[test]
        fn json_round_trip(a in arb_poly()) {
            let back = MultiPoly::from_json(&a.to_json()).unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn evaluation_is_a_ring_map(a in arb_poly(), b in arb_poly(), px in -3i64..=3, py in -3i64..=3) {
            let pt = [(Var::X, px), (Var::Y, py), (Var::Z, 2)];
            let ea = a.eval_i64(&pt).unwrap();
            let eb = b.eval_i64(&pt).unwrap();
            prop_assert_eq!((&a * &b).eval_i64(&pt).unwrap(), &ea * &eb);
            prop_assert_eq!((&a + &b).eval_i64(&pt).unwrap(), ea + eb);
        }
    }
}
