//! Dense matrices over a semiring.

mod counter;
mod star;
mod strassen;

use std::fmt;
use std::ops::{Index, IndexMut};

pub use counter::OpCounter;
pub use star::{
    is_nilpotent, is_star, power_sum, star_block, star_block_with, star_iterative, star_nilpotent, BlockStarOptions,
    Multiplier, Side,
};
pub use strassen::mat_mul_strassen;

use crate::error::{Error, Result};
use crate::semiring::Semiring;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Semiring> Matrix<S> {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::EntryCount {
                expected: rows * cols,
                actual: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::EntryCount {
                expected: c,
                actual: bad.len(),
            });
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn row_vector(entries: Vec<S>) -> Self {
        Matrix {
            rows: 1,
            cols: entries.len(),
            data: entries,
        }
    }

    pub fn column_vector(entries: Vec<S>) -> Self {
        Matrix {
            rows: entries.len(),
            cols: 1,
            data: entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<S> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Copies the `rows × cols` block whose top-left corner is `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols, "block out of range");
        let mut data = Vec::with_capacity(rows * cols);
        for i in r0..r0 + rows {
            data.extend_from_slice(&self.data[i * self.cols + c0..i * self.cols + c0 + cols]);
        }
        Matrix { rows, cols, data }
    }

    /// Reassembles `[[a11, a12], [a21, a22]]`.
    pub fn from_blocks(a11: &Self, a12: &Self, a21: &Self, a22: &Self) -> Self {
        debug_assert_eq!(a11.rows, a12.rows);
        debug_assert_eq!(a21.rows, a22.rows);
        debug_assert_eq!(a11.cols, a21.cols);
        debug_assert_eq!(a12.cols, a22.cols);
        let rows = a11.rows + a21.rows;
        let cols = a11.cols + a12.cols;
        let mut data = Vec::with_capacity(rows * cols);
        for (left, right) in [(a11, a12), (a21, a22)] {
            for i in 0..left.rows {
                data.extend_from_slice(left.row(i));
                data.extend_from_slice(right.row(i));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn map<T: Semiring>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// `self^k` by repeated naive multiplication; `self^0 = I`.
    pub fn pow(&self, k: usize) -> Result<Self> {
        self.require_square()?;
        let mut scratch = OpCounter::new();
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = mat_mul(&acc, self, &mut scratch)?;
        }
        Ok(acc)
    }

    pub(crate) fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;

    fn index(&self, (i, j): (usize, usize)) -> &S {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &self.data[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl<S: Semiring> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>{}x{} ", S::KIND, self.rows, self.cols)?;
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")))
            .finish()
    }
}

impl<S: Semiring> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Entrywise `⊕`. Counts `rows·cols` additions.
pub fn mat_add<S: Semiring>(a: &Matrix<S>, b: &Matrix<S>, ctr: &mut OpCounter) -> Result<Matrix<S>> {
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch {
            op: "addition",
            lhs: a.shape(),
            rhs: b.shape(),
        });
    }
    ctr.adds += a.data.len() as u64;
    Ok(Matrix {
        rows: a.rows,
        cols: a.cols,
        data: a.data.iter().zip(&b.data).map(|(x, y)| x.add(y)).collect(),
    })
}

/// Schoolbook product. An `r×k` by `k×c` product counts `r·c·k`
/// multiplications and `r·c·(k−1)` additions.
pub fn mat_mul<S: Semiring>(a: &Matrix<S>, b: &Matrix<S>, ctr: &mut OpCounter) -> Result<Matrix<S>> {
    if a.cols != b.rows {
        return Err(Error::ShapeMismatch {
            op: "multiplication",
            lhs: a.shape(),
            rhs: b.shape(),
        });
    }
    ctr.products += 1;
    let (r, k, c) = (a.rows, a.cols, b.cols);
    let mut data = Vec::with_capacity(r * c);
    for i in 0..r {
        let row = a.row(i);
        for j in 0..c {
            let mut acc: Option<S> = None;
            for (l, x) in row.iter().enumerate() {
                let term = x.mul(&b.data[l * c + j]);
                acc = Some(match acc {
                    None => term,
                    Some(s) => s.add(&term),
                });
            }
            data.push(acc.unwrap_or_else(S::zero));
        }
    }
    ctr.muls += (r * c * k) as u64;
    ctr.adds += (r * c * k.saturating_sub(1)) as u64;
    Ok(Matrix { rows: r, cols: c, data })
}

/// Uncounted product for callers that only need the value.
pub(crate) fn product<S: Semiring>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    mat_mul(a, b, &mut OpCounter::new()).expect("shapes checked by caller")
}

pub(crate) fn sum<S: Semiring>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    mat_add(a, b, &mut OpCounter::new()).expect("shapes checked by caller")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{Bool, Nat};

    fn bools(rows: &[&[u8]]) -> Matrix<Bool> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Bool(x == 1)).collect()).collect()).unwrap()
    }

    fn nats(rows: &[&[u64]]) -> Matrix<Nat> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Nat::new(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn boolean_addition() {
        let mut ctr = OpCounter::new();
        let sum = mat_add(&bools(&[&[1, 0], &[0, 1]]), &bools(&[&[0, 1], &[0, 0]]), &mut ctr).unwrap();
        assert_eq!(sum, bools(&[&[1, 1], &[0, 1]]));
        assert_eq!(ctr.adds, 4);
    }

    #[test]
    fn zero_is_additive_neutral_and_counts_n_squared() {
        let a = nats(&[&[1, 2, 3, 4], &[5, 6, 7, 8], &[9, 10, 11, 12], &[13, 14, 15, 16]]);
        let mut ctr = OpCounter::new();
        assert_eq!(mat_add(&Matrix::zeros(4, 4), &a, &mut ctr).unwrap(), a);
        assert_eq!(ctr.adds, 16);
    }

    #[test]
    fn naive_product_counts() {
        let a = nats(&[&[1, 2], &[3, 4]]);
        let mut ctr = OpCounter::new();
        let p = mat_mul(&a, &a, &mut ctr).unwrap();
        assert_eq!(p, nats(&[&[7, 10], &[15, 22]]));
        assert_eq!((ctr.muls, ctr.adds, ctr.products), (8, 4, 1));
        assert_eq!(mat_mul(&Matrix::identity(2), &a, &mut ctr).unwrap(), a);
    }

    #[test]
    fn shape_errors() {
        let a = nats(&[&[1, 2, 3]]);
        let b = nats(&[&[1, 2]]);
        let mut ctr = OpCounter::new();
        assert!(matches!(mat_add(&a, &b, &mut ctr), Err(Error::ShapeMismatch { .. })));
        assert!(matches!(mat_mul(&a, &b, &mut ctr), Err(Error::ShapeMismatch { .. })));
        assert!(Matrix::new(2, 2, vec![Nat::new(1)]).is_err());
        assert_eq!(ctr, OpCounter::new());
    }

    #[test]
    fn blocks_round_trip() {
        let a = nats(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let (a11, a12, a21, a22) = (
            a.block(0, 0, 2, 2),
            a.block(0, 2, 2, 1),
            a.block(2, 0, 1, 2),
            a.block(2, 2, 1, 1),
        );
        assert_eq!(a21, nats(&[&[7, 8]]));
        assert_eq!(Matrix::from_blocks(&a11, &a12, &a21, &a22), a);
    }

    #[test]
    fn empty_matrices() {
        let e: Matrix<Nat> = Matrix::identity(0);
        let mut ctr = OpCounter::new();
        assert_eq!(mat_mul(&e, &e, &mut ctr).unwrap().shape(), (0, 0));
        // 2×0 by 0×2 is the zero matrix.
        let p = mat_mul(&Matrix::<Nat>::zeros(2, 0), &Matrix::zeros(0, 2), &mut ctr).unwrap();
        assert!(p.is_zero() && p.shape() == (2, 2));
    }
}
