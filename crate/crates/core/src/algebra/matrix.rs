use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_integers(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        RationalMatrix {
            rows,
            cols,
            data: entries
                .iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    /// Submatrix on the given columns.
    pub fn select_columns(&self, cols: &[usize]) -> RationalMatrix {
        let mut out = RationalMatrix::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    /// Rank by fraction-free (Bareiss) elimination after clearing row
    /// denominators.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let row = &self.data[r * self.cols..(r + 1) * self.cols];
                let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
            })
            .collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        let mut prev = BigInt::one();
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for r in rank + 1..rows {
                for k in c + 1..cols {
                    let v = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
                    m[r][k] = v;
                }
                m[r][c] = BigInt::zero();
            }
            prev = m[rank][c].clone();
            rank += 1;
        }
        rank
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        IntMatrix {
            rows,
            cols,
            data: entries.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    /// `row[dst] += k * row[src]`.
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(src, c) * k;
            self.data[dst * self.cols + c] += v;
        }
    }

    /// `col[dst] += k * col[src]`.
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, src) * k;
            self.data[r * self.cols + dst] += v;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// Smith normal form diagonal `d_1 | d_2 | ...`, all non-negative, of
    /// length `min(rows, cols)`.
    pub fn smith_normal_form(&self) -> Vec<BigInt> {
        let mut m = self.clone();
        let n = self.rows.min(self.cols);
        for t in 0..n {
            // Pivot: smallest non-zero magnitude in the trailing block.
            loop {
                let mut best: Option<(usize, usize)> = None;
                for r in t..m.rows {
                    for c in t..m.cols {
                        let v = m.get(r, c);
                        if v.is_zero() {
                            continue;
                        }
                        if best.is_none_or(|(br, bc)| v.abs() < m.get(br, bc).abs()) {
                            best = Some((r, c));
                        }
                    }
                }
                let Some((pr, pc)) = best else {
                    // Trailing block is zero.
                    return finish_diagonal(&m, n);
                };
                m.swap_rows(t, pr);
                m.swap_cols(t, pc);

                let pivot = m.get(t, t).clone();
                let mut clean = true;
                for r in t + 1..m.rows {
                    let q = m.get(r, t).div_floor(&pivot);
                    if !q.is_zero() {
                        m.add_row_multiple(r, t, &-q);
                    }
                    if !m.get(r, t).is_zero() {
                        clean = false;
                    }
                }
                for c in t + 1..m.cols {
                    let q = m.get(t, c).div_floor(&pivot);
                    if !q.is_zero() {
                        m.add_col_multiple(c, t, &-q);
                    }
                    if !m.get(t, c).is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    continue;
                }
                // Divisibility of the trailing block by the pivot.
                let offender = (t + 1..m.rows)
                    .flat_map(|r| (t + 1..m.cols).map(move |c| (r, c)))
                    .find(|&(r, c)| !m.get(r, c).is_multiple_of(&pivot));
                match offender {
                    Some((r, _)) => m.add_row_multiple(t, r, &BigInt::one()),
                    None => break,
                }
            }
        }
        finish_diagonal(&m, n)
    }
}

fn finish_diagonal(m: &IntMatrix, n: usize) -> Vec<BigInt> {
    (0..n).map(|i| m.get(i, i).abs()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RationalMatrix::from_integers(2, 2, &[1, 0, 0, 1]).rank(), 2);
        assert_eq!(RationalMatrix::zeros(3, 4).rank(), 0);
        // Incidence of K3 (rows = vertices), reduced by hand: R2 += R1, R3 += R2 -> zero row.
        let k3 = RationalMatrix::from_integers(3, 3, &[1, 0, -1, -1, 1, 0, 0, -1, 1]);
        assert_eq!(k3.rank(), 2);
    }

    #[test]
    fn rank_with_fractions() {
        let mut m = RationalMatrix::zeros(2, 2);
        m.set(0, 0, BigRational::new(1.into(), 2.into()));
        m.set(0, 1, BigRational::new(1.into(), 3.into()));
        m.set(1, 0, BigRational::new(3.into(), 1.into()));
        m.set(1, 1, BigRational::new(2.into(), 1.into()));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn snf_examples() {
        assert_eq!(
            IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]).smith_normal_form(),
            big(&[1, 6])
        );
        assert_eq!(IntMatrix::identity(3).smith_normal_form(), big(&[1, 1, 1]));
        assert_eq!(
            IntMatrix::from_i64(2, 3, &[2, 4, 4, -6, 6, 12]).smith_normal_form(),
            big(&[2, 6])
        );
        assert_eq!(IntMatrix::zeros(2, 2).smith_normal_form(), big(&[0, 0]));
    }

    fn arb_square() -> impl Strategy<Value = IntMatrix> {
        prop::collection::vec(-4i64..=4, 9).prop_map(|v| IntMatrix::from_i64(3, 3, &v))
    }

    fn det3(m: &IntMatrix) -> BigInt {
        let g = |r, c| m.get(r, c).clone();
        g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1)) - g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0))
            + g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0))
    }

    proptest! {
        #[test]
        fn snf_chain_and_product_under_unimodular_ops(
            m in arb_square(),
            ops in prop::collection::vec((0usize..3, 0usize..3, -3i64..=3, any::<bool>()), 0..8),
        ) {
            let d = m.smith_normal_form();
            for w in d.windows(2) {
                if !w[0].is_zero() {
                    prop_assert!(w[1].is_multiple_of(&w[0]));
                } else {
                    prop_assert!(w[1].is_zero());
                }
            }
            let prod: BigInt = d.iter().product();
            prop_assert_eq!(&prod, &det3(&m).abs());

            let mut n = m.clone();
            for (a, b, k, row) in ops {
                if a == b { continue; }
                if row { n.add_row_multiple(a, b, &BigInt::from(k)); } else { n.add_col_multiple(a, b, &BigInt::from(k)); }
            }
            prop_assert_eq!(n.smith_normal_form(), d);
        }

        #[test]
        fn rank_bounded_and_matches_determinant(v in prop::collection::vec(-3i64..=3, 9)) {
            let m = RationalMatrix::from_integers(3, 3, &v);
            let r = m.rank();
            prop_assert!(r <= 3);
            let im = IntMatrix::from_i64(3, 3, &v);
            prop_assert_eq!(r == 3, !det3(&im).is_zero());
        }
    }
}
