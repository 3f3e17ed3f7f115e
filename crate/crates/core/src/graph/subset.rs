use std::fmt;

/// Set of edge ids of a graph with at most 64 edges.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeSubset {
    width: usize,
    mask: u64,
}

impl EdgeSubset {
    pub fn empty(width: usize) -> Self {
        assert!(width <= 64, "at most 64 edges");
        EdgeSubset { width, mask: 0 }
    }

    pub fn full(width: usize) -> Self {
        EdgeSubset {
            width,
            mask: full_mask(width),
        }
    }

    pub fn from_mask(width: usize, mask: u64) -> Self {
        assert!(width <= 64, "at most 64 edges");
        debug_assert_eq!(mask & !full_mask(width), 0, "mask exceeds width");
        EdgeSubset { width, mask }
    }

    pub fn from_edges(width: usize, edges: impl IntoIterator<Item = usize>) -> Self {
        let mut s = EdgeSubset::empty(width);
        for e in edges {
            s.insert(e);
        }
        s
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.width && self.mask >> e & 1 == 1
    }

    pub fn insert(&mut self, e: usize) {
        assert!(e < self.width, "edge {e} outside subset width {}", self.width);
        self.mask |= 1 << e;
    }

    pub fn remove(&mut self, e: usize) {
        if e < self.width {
            self.mask &= !(1 << e);
        }
    }

    pub fn complement(&self) -> Self {
        EdgeSubset {
            width: self.width,
            mask: !self.mask & full_mask(self.width),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        EdgeSubset {
            width: self.width,
            mask: self.mask | other.mask,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        EdgeSubset {
            width: self.width,
            mask: self.mask & other.mask,
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        EdgeSubset {
            width: self.width,
            mask: self.mask & !other.mask,
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.mask;
        (0..self.width).filter(move |e| mask >> e & 1 == 1)
    }

    /// Every subset of `0..width`, in mask order.
    pub fn all(width: usize) -> impl Iterator<Item = EdgeSubset> {
        assert!(width < 64, "subset enumeration needs fewer than 64 edges");
        (0..1u64 << width).map(move |mask| EdgeSubset { width, mask })
    }

    /// Every subset of `self`.
    pub fn subsets(&self) -> impl Iterator<Item = EdgeSubset> {
        let width = self.width;
        let full = self.mask;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(EdgeSubset { width, mask: cur })
        })
    }
}

pub(crate) fn full_mask(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_of_mask() {
        let s = EdgeSubset::from_edges(5, [1, 3]);
        let subs: Vec<u64> = s.subsets().map(|x| x.mask()).collect();
        assert_eq!(subs, vec![0, 2, 8, 10]);
        assert_eq!(EdgeSubset::empty(3).subsets().count(), 1);
        assert_eq!(EdgeSubset::all(3).count(), 8);
    }

    #[test]
    fn set_algebra() {
        let a = EdgeSubset::from_edges(4, [0, 1]);
        let b = EdgeSubset::from_edges(4, [1, 2]);
        assert_eq!(a.union(&b).len(), 3);
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), vec![1]);
        assert_eq!(a.complement().iter().collect::<Vec<_>>(), vec![2, 3]);
        assert!(a.intersection(&b).is_subset(&a));
        assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), vec![0]);
    }
}
