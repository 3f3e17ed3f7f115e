use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;

use super::poset::IntersectionPoset;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::tensionflow::{Coefficients, FiniteAbelianGroup};

/// Largest ambient order the finite backend materializes.
const MAX_AMBIENT: u128 = 1_000_000;

/// A coset `a + H` inside one finite abelian group, stored by element codes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coset {
    group: FiniteAbelianGroup,
    members: BTreeSet<u64>,
}

impl Coset {
    /// `shift + ⟨generators⟩`.
    pub fn new(group: &FiniteAbelianGroup, generators: &[Vec<i64>], shift: &[i64]) -> Self {
        let zero = group.zero();
        let mut sub: BTreeSet<u64> = BTreeSet::from([group.code(&zero)]);
        let mut queue = VecDeque::from([zero]);
        let gens: Vec<Vec<i64>> = generators.iter().map(|g| group.reduce(g)).collect();
        while let Some(a) = queue.pop_front() {
            for g in &gens {
                let b = group.add(&a, g);
                if sub.insert(group.code(&b)) {
                    queue.push_back(b);
                }
            }
        }
        let shift = group.reduce(shift);
        let members = sub
            .into_iter()
            .map(|c| group.code(&group.add(&group.element(c), &shift)))
            .collect();
        Coset {
            group: group.clone(),
            members,
        }
    }

    pub fn whole(group: &FiniteAbelianGroup) -> Self {
        Coset {
            group: group.clone(),
            members: (0..group.order()).collect(),
        }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: &[i64]) -> bool {
        self.members.contains(&self.group.code(&self.group.reduce(a)))
    }

    pub fn is_subset(&self, other: &Coset) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Intersection of two cosets of the same group: empty, or a coset.
    pub fn intersect(&self, other: &Coset) -> Coset {
        Coset {
            group: self.group.clone(),
            members: self.members.intersection(&other.members).copied().collect(),
        }
    }
}

/// `B_1 × ... × B_n` with each `B_i` a coset in the `i`-th factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetProduct {
    pub factors: Vec<Coset>,
}

impl CosetProduct {
    pub fn new(factors: Vec<Coset>) -> Self {
        CosetProduct { factors }
    }

    pub fn whole(ambient: &[FiniteAbelianGroup]) -> Self {
        CosetProduct {
            factors: ambient.iter().map(Coset::whole).collect(),
        }
    }

    /// Counting measure: the product of factor sizes.
    pub fn size(&self) -> BigInt {
        self.factors.iter().map(|c| BigInt::from(c.len())).product()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.iter().any(Coset::is_empty)
    }

    pub fn contains(&self, point: &[Vec<i64>]) -> bool {
        self.factors.iter().zip(point).all(|(c, a)| c.contains(a))
    }

    pub fn is_subset(&self, other: &CosetProduct) -> bool {
        self.is_empty() || self.factors.iter().zip(&other.factors).all(|(a, b)| a.is_subset(b))
    }

    pub fn intersect(&self, other: &CosetProduct) -> CosetProduct {
        CosetProduct {
            factors: self
                .factors
                .iter()
                .zip(&other.factors)
                .map(|(a, b)| a.intersect(b))
                .collect(),
        }
    }
}

/// Finite family of coset products inside `Ω = Ω_1 × ... × Ω_n`.
#[derive(Debug, Clone)]
pub struct FiniteArrangement {
    pub ambient: Vec<FiniteAbelianGroup>,
    pub members: Vec<CosetProduct>,
}

impl FiniteArrangement {
    pub fn new(ambient: Vec<FiniteAbelianGroup>, members: Vec<CosetProduct>) -> Result<Self> {
        if ambient.is_empty() {
            return Err(Error::EmptyAmbient);
        }
        for (i, m) in members.iter().enumerate() {
            let fits = m.factors.len() == ambient.len() && m.factors.iter().zip(&ambient).all(|(c, g)| c.group() == g);
            if !fits {
                return Err(Error::InvalidArgument(format!(
                    "member {i} does not live in the ambient group"
                )));
            }
        }
        Ok(FiniteArrangement { ambient, members })
    }

    pub fn ambient_order(&self) -> u128 {
        self.ambient.iter().map(|g| g.order() as u128).product()
    }

    fn check_size(&self, limits: &Limits) -> Result<()> {
        limits.check_states("ambient group", self.ambient_order())?;
        if self.ambient_order() > MAX_AMBIENT {
            return Err(Error::SizeGuard {
                what: "ambient group".into(),
                needed: self.ambient_order(),
                limit: MAX_AMBIENT,
            });
        }
        Ok(())
    }
}

/// An element of the semilattice: the whole ambient group, as the
/// intersection of no members, or a non-empty intersection of members.
/// A member equal to the whole group is still a distinct element below
/// [`FiniteFlat::Ambient`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiniteFlat {
    Ambient,
    Meet(CosetProduct),
}

/// The semilattice of all non-empty intersections of members, with the
/// ambient group on top.
pub fn finite_semilattice(arr: &FiniteArrangement, limits: &Limits) -> Result<IntersectionPoset<FiniteFlat>> {
    arr.check_size(limits)?;
    let mut seen: BTreeSet<CosetProduct> = BTreeSet::new();
    let mut queue: VecDeque<CosetProduct> = VecDeque::new();
    for m in &arr.members {
        if !m.is_empty() && seen.insert(m.clone()) {
            queue.push_back(m.clone());
        }
    }
    while let Some(x) = queue.pop_front() {
        for m in &arr.members {
            let y = x.intersect(m);
            if !y.is_empty() && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut elements = vec![FiniteFlat::Ambient];
    elements.extend(seen.into_iter().map(FiniteFlat::Meet));
    Ok(IntersectionPoset::new(elements, 0, |a, b| match (a, b) {
        (_, FiniteFlat::Ambient) => true,
        (FiniteFlat::Ambient, FiniteFlat::Meet(_)) => false,
        (FiniteFlat::Meet(x), FiniteFlat::Meet(y)) => x.is_subset(y),
    }))
}

/// `Σ_X μ(X, Ω) ν(X)` with `ν` the counting measure. The finite groups
/// have rank 0, so every variable of the characteristic polynomial carries
/// exponent 0 and its value is this integer.
pub fn finite_characteristic_value(poset: &IntersectionPoset<FiniteFlat>, arr: &FiniteArrangement) -> BigInt {
    poset
        .elements()
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let size = match x {
                FiniteFlat::Ambient => BigInt::from(arr.ambient_order()),
                FiniteFlat::Meet(c) => c.size(),
            };
            size * poset.mobius(i)
        })
        .sum()
}

/// `|Ω − ∪ members|` by testing every point of `Ω`.
pub fn complement_count(arr: &FiniteArrangement, limits: &Limits) -> Result<BigInt> {
    arr.check_size(limits)?;
    let mut point: Vec<Vec<i64>> = arr.ambient.iter().map(|g| g.zero()).collect();
    let mut count = BigInt::zero();
    for mut code in 0..arr.ambient_order() as u64 {
        for (i, g) in arr.ambient.iter().enumerate() {
            point[i] = g.element(code % g.order());
            code /= g.order();
        }
        if !arr.members.iter().any(|m| m.contains(&point)) {
            count += 1;
        }
    }
    Ok(count)
}

/// `Σ sign · ν(B)` over signed coset products.
pub fn product_valuation(pieces: &[(i64, CosetProduct)]) -> BigInt {
    pieces.iter().map(|(s, b)| b.size() * *s).sum()
}

/// `Σ ν(B)` over pieces that must be pairwise disjoint.
pub fn disjoint_valuation(pieces: &[CosetProduct]) -> Result<BigInt> {
    for i in 0..pieces.len() {
        for j in i + 1..pieces.len() {
            if !pieces[i].intersect(&pieces[j]).is_empty() {
                return Err(Error::OverlappingPieces(i, j));
            }
        }
    }
    Ok(pieces.iter().map(CosetProduct::size).sum())
}
