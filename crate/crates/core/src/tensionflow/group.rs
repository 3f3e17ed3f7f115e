use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::graph::EdgeSubset;

/// Coefficient domain for edge and vertex functions.
pub trait Coefficients {
    type Elem: Clone + PartialEq + Debug;
    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
    /// `s·a` for a sign `s ∈ {-1, 0, 1}`.
    fn signed(&self, s: i64, a: &Self::Elem) -> Self::Elem {
        match s {
            0 => self.zero(),
            1 => a.clone(),
            _ => self.neg(a),
        }
    }
}

/// The integers, as a coefficient domain.
#[derive(Debug, Clone, Copy, Default)]
pub struct Integers;

impl Coefficients for Integers {
    type Elem = i64;
    fn zero(&self) -> i64 {
        0
    }
    fn add(&self, a: &i64, b: &i64) -> i64 {
        a + b
    }
    fn neg(&self, a: &i64) -> i64 {
        -a
    }
}

/// `Z_{m_1} × ... × Z_{m_k}`; the empty product is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAbelianGroup {
    orders: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if let Some(&m) = orders.iter().find(|&&m| m == 0) {
            return Err(Error::InvalidModulus(m as i64));
        }
        Ok(FiniteAbelianGroup { orders })
    }

    /// `Z_m`. For `m = 1` this is the trivial group.
    pub fn cyclic(m: u64) -> Result<Self> {
        Self::new(vec![m])
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn contains(&self, a: &[i64]) -> bool {
        a.len() == self.orders.len() && a.iter().zip(&self.orders).all(|(&x, &m)| x >= 0 && (x as u64) < m)
    }

    /// Reduces an integer vector into canonical residues.
    pub fn reduce(&self, a: &[i64]) -> Vec<i64> {
        a.iter()
            .zip(&self.orders)
            .map(|(&x, &m)| x.rem_euclid(m as i64))
            .collect()
    }

    /// Embeds an integer along the diagonal `k ↦ (k, ..., k)`.
    pub fn from_integer(&self, k: i64) -> Vec<i64> {
        self.reduce(&vec![k; self.orders.len()])
    }

    /// Element with mixed-radix index `code` (first factor least
    /// significant), for `code < order()`.
    pub fn element(&self, mut code: u64) -> Vec<i64> {
        self.orders
            .iter()
            .map(|&m| {
                let r = code % m;
                code /= m;
                r as i64
            })
            .collect()
    }

    /// Inverse of [`FiniteAbelianGroup::element`] on canonical residues.
    pub fn code(&self, a: &[i64]) -> u64 {
        a.iter()
            .zip(&self.orders)
            .rev()
            .fold(0, |acc, (&x, &m)| acc * m + x as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        (0..self.order()).map(|c| self.element(c))
    }
}

impl Coefficients for FiniteAbelianGroup {
    type Elem = Vec<i64>;
    fn zero(&self) -> Vec<i64> {
        vec![0; self.orders.len()]
    }
    fn add(&self, a: &Vec<i64>, b: &Vec<i64>) -> Vec<i64> {
        a.iter()
            .zip(b)
            .zip(&self.orders)
            .map(|((&x, &y), &m)| (x + y).rem_euclid(m as i64))
            .collect()
    }
    fn neg(&self, a: &Vec<i64>) -> Vec<i64> {
        a.iter()
            .zip(&self.orders)
            .map(|(&x, &m)| (-x).rem_euclid(m as i64))
            .collect()
    }
    fn is_zero(&self, a: &Vec<i64>) -> bool {
        a.iter().all(|&x| x == 0)
    }
}

/// Edge-indexed values in a finite abelian group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElementFunction {
    pub group: FiniteAbelianGroup,
    pub values: Vec<Vec<i64>>,
}

impl GroupElementFunction {
    pub fn zero(group: &FiniteAbelianGroup, edges: usize) -> Self {
        GroupElementFunction {
            values: vec![group.zero(); edges],
            group: group.clone(),
        }
    }

    /// Reduces arbitrary integer tuples into the group.
    pub fn new(group: &FiniteAbelianGroup, values: Vec<Vec<i64>>) -> Self {
        GroupElementFunction {
            values: values.iter().map(|v| group.reduce(v)).collect(),
            group: group.clone(),
        }
    }

    pub fn support(&self) -> EdgeSubset {
        EdgeSubset::from_edges(
            self.values.len(),
            (0..self.values.len()).filter(|&e| !self.group.is_zero(&self.values[e])),
        )
    }

    pub fn kernel(&self) -> EdgeSubset {
        self.support().complement()
    }
}

/// Edge-indexed integers.
pub type IntegerEdgeFunction = Vec<i64>;

pub fn integer_support(h: &[i64]) -> EdgeSubset {
    EdgeSubset::from_edges(h.len(), (0..h.len()).filter(|&e| h[e] != 0))
}

/// A tension `f` together with a flow `g` on the same oriented graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensionFlowPair<T> {
    pub f: T,
    pub g: T,
}
