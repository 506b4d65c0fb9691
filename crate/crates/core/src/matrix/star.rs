//! Stars of square matrices.
//!
//! [`star_block`] is the divide-and-conquer construction: with `M` split as
//! `[[a11, a12], [a21, a22]]`, the right star is
//!
//! ```text
//! A11 = (a11 + a12·a22*·a21)*        A12 = a11*·a12·A22
//! A21 = a22*·a21·A11                 A22 = (a22 + a21·a11*·a12)*
//! ```
//!
//! and the left star replaces the off-diagonal blocks with `A11·a12·a22*` and
//! `A22·a21·a11*`. Even sizes split into equal halves; odd sizes peel off the
//! last row and column so that `a22` is a scalar.
//!
//! Each level performs four recursive stars, eight block products and two
//! block additions, so for `n = 2^m` with schoolbook products the operation
//! count obeys `T(m) = 2·T⁺(m−1) + 8·T×(m−1) + 4·T(m−1)`.

use super::{mat_add, mat_mul, mat_mul_strassen, product, sum, Matrix, OpCounter};
use crate::error::{Error, Result, StarError};
use crate::semiring::Semiring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Side {
    /// `M·N ⊕ I = N`
    #[default]
    Right,
    /// `N·M ⊕ I = N`
    Left,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Multiplier {
    #[default]
    Naive,
    /// Strassen for square block products; rings only.
    Strassen,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BlockStarOptions {
    pub side: Side,
    pub multiplier: Multiplier,
}

/// Block-recursive star with schoolbook block products.
pub fn star_block<S: Semiring>(m: &Matrix<S>, side: Side, ctr: &mut OpCounter) -> Result<Matrix<S>> {
    star_block_with(
        m,
        BlockStarOptions {
            side,
            multiplier: Multiplier::Naive,
        },
        ctr,
    )
}

pub fn star_block_with<S: Semiring>(
    m: &Matrix<S>,
    options: BlockStarOptions,
    ctr: &mut OpCounter,
) -> Result<Matrix<S>> {
    m.require_square()?;
    if options.multiplier == Multiplier::Strassen && !S::descriptor().is_ring {
        return Err(Error::NotARing("Strassen multiplication", S::KIND));
    }
    BlockStar { options, ctr }.star(m)
}

struct BlockStar<'a> {
    options: BlockStarOptions,
    ctr: &'a mut OpCounter,
}

impl BlockStar<'_> {
    fn star<S: Semiring>(&mut self, m: &Matrix<S>) -> Result<Matrix<S>> {
        let n = m.rows();
        match n {
            0 => return Ok(Matrix::identity(0)),
            1 => {
                self.ctr.stars += 1;
                self.ctr.temp_cells += 1;
                let y = m[(0, 0)].star().ok_or(StarError::Undefined(S::KIND))?;
                return Matrix::new(1, 1, vec![y]);
            }
            _ => {}
        }

        let p = if n.is_multiple_of(2) { n / 2 } else { n - 1 };
        let q = n - p;
        let a11 = m.block(0, 0, p, p);
        let a12 = m.block(0, p, p, q);
        let a21 = m.block(p, 0, q, p);
        let a22 = m.block(p, p, q, q);

        let s22 = self.star(&a22)?;
        let s11 = self.star(&a11)?;

        let t = self.mul(&a12, &s22);
        let t = self.mul(&t, &a21);
        let schur = self.add(&a11, &t);
        let big11 = self.star(&schur)?;
        let t = self.mul(&a21, &s11);
        let t = self.mul(&t, &a12);
        let schur = self.add(&a22, &t);
        let big22 = self.star(&schur)?;

        let (big12, big21) = match self.options.side {
            Side::Right => {
                let t = self.mul(&s11, &a12);
                let big12 = self.mul(&t, &big22);
                let t = self.mul(&s22, &a21);
                (big12, self.mul(&t, &big11))
            }
            Side::Left => {
                let t = self.mul(&a12, &s22);
                let big12 = self.mul(&big11, &t);
                let t = self.mul(&a21, &s11);
                (big12, self.mul(&big22, &t))
            }
        };
        Ok(Matrix::from_blocks(&big11, &big12, &big21, &big22))
    }

    fn mul<S: Semiring>(&mut self, a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
        let (r, k, c) = (a.rows(), a.cols(), b.cols());
        self.ctr.temp_cells += (r * k + k * c + r * c) as u64;
        let strassen = self.options.multiplier == Multiplier::Strassen && a.is_square() && a.shape() == b.shape();
        if strassen {
            mat_mul_strassen(a, b, self.ctr)
        } else {
            mat_mul(a, b, self.ctr)
        }
        .expect("block shapes are conformable")
    }

    fn add<S: Semiring>(&mut self, a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
        mat_add(a, b, self.ctr).expect("block shapes agree")
    }
}

/// Least `k ≤ n` with `M^k = 0`, or `None` when `M` is not nilpotent.
///
/// Checking up to the dimension suffices for every built-in semiring: over
/// the zero-sum-free ones nilpotence means an acyclic support graph, and
/// over a field the nilpotency index never exceeds the dimension.
pub fn is_nilpotent<S: Semiring>(m: &Matrix<S>) -> Result<Option<usize>> {
    m.require_square()?;
    let n = m.rows();
    let mut power = m.clone();
    for k in 1..=n.max(1) {
        if power.is_zero() {
            return Ok(Some(k));
        }
        power = product(&power, m);
    }
    Ok(None)
}

/// `Σ_{k<N} M^k` where `N` is the nilpotency index.
pub fn star_nilpotent<S: Semiring>(m: &Matrix<S>, ctr: &mut OpCounter) -> Result<Matrix<S>> {
    let index = is_nilpotent(m)?.ok_or(Error::NotNilpotent)?;
    power_sum_counted(m, index, ctr)
}

/// `Σ_{k<count} M^k`, uncounted.
pub fn power_sum<S: Semiring>(m: &Matrix<S>, count: usize) -> Result<Matrix<S>> {
    power_sum_counted(m, count, &mut OpCounter::new())
}

fn power_sum_counted<S: Semiring>(m: &Matrix<S>, count: usize, ctr: &mut OpCounter) -> Result<Matrix<S>> {
    m.require_square()?;
    let n = m.rows();
    if count == 0 {
        return Ok(Matrix::zeros(n, n));
    }
    let mut total = Matrix::identity(n);
    let mut power = Matrix::identity(n);
    for _ in 1..count {
        power = mat_mul(&power, m, ctr)?;
        total = mat_add(&total, &power, ctr)?;
    }
    Ok(total)
}

/// Partial sums `S_N = Σ_{k≤N} M^k` until `S_{N+1} = S_N`.
///
/// Once two consecutive partial sums agree they agree forever, because
/// `S_{N+1} = I ⊕ M·S_N` in any semiring.
pub fn star_iterative<S: Semiring>(m: &Matrix<S>, max_iter: usize, ctr: &mut OpCounter) -> Result<Matrix<S>> {
    m.require_square()?;
    let n = m.rows();
    let mut total = Matrix::identity(n);
    let mut power = Matrix::identity(n);
    for _ in 0..max_iter {
        power = mat_mul(&power, m, ctr)?;
        let next = mat_add(&total, &power, ctr)?;
        if next == total {
            return Ok(total);
        }
        total = next;
    }
    Err(StarError::NotStationary { iterations: max_iter }.into())
}

/// Checks `M·N ⊕ I = N` (right) or `N·M ⊕ I = N` (left) without counting.
pub fn is_star<S: Semiring>(m: &Matrix<S>, n: &Matrix<S>, side: Side) -> bool {
    if !m.is_square() || m.shape() != n.shape() {
        return false;
    }
    let prod = match side {
        Side::Right => product(m, n),
        Side::Left => product(n, m),
    };
    sum(&prod, &Matrix::identity(m.rows())) == *n
}
