/// A finite poset with a top element, and the Möbius values `μ(x, top)`.
#[derive(Debug, Clone)]
pub struct IntersectionPoset<T> {
    elements: Vec<T>,
    /// `leq[i][j]` iff element `i` is contained in element `j`.
    leq: Vec<Vec<bool>>,
    top: usize,
    mobius: Vec<i64>,
}

impl<T> IntersectionPoset<T> {
    /// Builds the poset from its elements and containment relation. `leq`
    /// must be a partial order with `top` as its maximum.
    pub fn new(elements: Vec<T>, top: usize, leq: impl Fn(&T, &T) -> bool) -> Self {
        let n = elements.len();
        let rel: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| i == j || leq(&elements[i], &elements[j])).collect())
            .collect();
        debug_assert!((0..n).all(|i| rel[i][top]));
        // Strictly larger elements have strictly smaller up-sets, so sorting
        // by up-set size visits every z above x before x itself.
        let mut by_upset: Vec<usize> = (0..n).collect();
        by_upset.sort_by_key(|&i| rel[i].iter().filter(|&&b| b).count());
        let mut mobius = vec![0i64; n];
        for &x in &by_upset {
            mobius[x] = if x == top {
                1
            } else {
                -(0..n).filter(|&z| z != x && rel[x][z]).map(|z| mobius[z]).sum::<i64>()
            };
        }
        IntersectionPoset {
            elements,
            leq: rel,
            top,
            mobius,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// `μ(elements[i], top)`.
    pub fn mobius(&self, i: usize) -> i64 {
        self.mobius[i]
    }

    /// `Σ_{x ≤ z} μ(z, top)` for element `x`; zero unless `x` is the top.
    pub fn mobius_row_sum(&self, x: usize) -> i64 {
        (0..self.len())
            .filter(|&z| self.leq[x][z])
            .map(|z| self.mobius[z])
            .sum()
    }
}
