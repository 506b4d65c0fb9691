use super::{mat_add, mat_mul, Matrix, OpCounter};
use crate::error::{Error, Result};
use crate::semiring::Semiring;

/// Strassen's seven-product multiplication of square matrices over a ring.
///
/// Even sizes split into halves; odd sizes peel the last row and column, run
/// Strassen on the even `(n−1)` core and patch the border with thin naive
/// products. Subtraction is counted as an addition.
pub fn mat_mul_strassen<S: Semiring>(a: &Matrix<S>, b: &Matrix<S>, ctr: &mut OpCounter) -> Result<Matrix<S>> {
    if !S::descriptor().is_ring {
        return Err(Error::NotARing("Strassen multiplication", S::KIND));
    }
    if !a.is_square() || a.shape() != b.shape() {
        return Err(Error::ShapeMismatch {
            op: "Strassen multiplication",
            lhs: a.shape(),
            rhs: b.shape(),
        });
    }
    // Internal block products are not reported as separate matrix products.
    let issued = ctr.products;
    let c = strassen(a, b, ctr);
    ctr.products = issued + 1;
    Ok(c)
}

fn sub<S: Semiring>(a: &Matrix<S>, b: &Matrix<S>, ctr: &mut OpCounter) -> Matrix<S> {
    let neg = b.map(|x| x.neg().expect("ring has negation"));
    add(a, &neg, ctr)
}

fn add<S: Semiring>(a: &Matrix<S>, b: &Matrix<S>, ctr: &mut OpCounter) -> Matrix<S> {
    mat_add(a, b, ctr).expect("blocks share a shape")
}

fn naive<S: Semiring>(a: &Matrix<S>, b: &Matrix<S>, ctr: &mut OpCounter) -> Matrix<S> {
    mat_mul(a, b, ctr).expect("blocks are conformable")
}

fn strassen<S: Semiring>(a: &Matrix<S>, b: &Matrix<S>, ctr: &mut OpCounter) -> Matrix<S> {
    let n = a.rows();
    if n <= 1 {
        return naive(a, b, ctr);
    }
    if n % 2 == 1 {
        let p = n - 1;
        let (a11, a12, a21, a22) = (
            a.block(0, 0, p, p),
            a.block(0, p, p, 1),
            a.block(p, 0, 1, p),
            a.block(p, p, 1, 1),
        );
        let (b11, b12, b21, b22) = (
            b.block(0, 0, p, p),
            b.block(0, p, p, 1),
            b.block(p, 0, 1, p),
            b.block(p, p, 1, 1),
        );
        let core = strassen(&a11, &b11, ctr);
        let c11 = add(&core, &naive(&a12, &b21, ctr), ctr);
        let c12 = add(&naive(&a11, &b12, ctr), &naive(&a12, &b22, ctr), ctr);
        let c21 = add(&naive(&a21, &b11, ctr), &naive(&a22, &b21, ctr), ctr);
        let c22 = add(&naive(&a21, &b12, ctr), &naive(&a22, &b22, ctr), ctr);
        return Matrix::from_blocks(&c11, &c12, &c21, &c22);
    }

    let h = n / 2;
    let q = |m: &Matrix<S>, i: usize, j: usize| m.block(i * h, j * h, h, h);
    let (a11, a12, a21, a22) = (q(a, 0, 0), q(a, 0, 1), q(a, 1, 0), q(a, 1, 1));
    let (b11, b12, b21, b22) = (q(b, 0, 0), q(b, 0, 1), q(b, 1, 0), q(b, 1, 1));

    let m1 = {
        let (x, y) = (add(&a11, &a22, ctr), add(&b11, &b22, ctr));
        strassen(&x, &y, ctr)
    };
    let m2 = {
        let x = add(&a21, &a22, ctr);
        strassen(&x, &b11, ctr)
    };
    let m3 = {
        let y = sub(&b12, &b22, ctr);
        strassen(&a11, &y, ctr)
    };
    let m4 = {
        let y = sub(&b21, &b11, ctr);
        strassen(&a22, &y, ctr)
    };
    let m5 = {
        let x = add(&a11, &a12, ctr);
        strassen(&x, &b22, ctr)
    };
    let m6 = {
        let (x, y) = (sub(&a21, &a11, ctr), add(&b11, &b12, ctr));
        strassen(&x, &y, ctr)
    };
    let m7 = {
        let (x, y) = (sub(&a12, &a22, ctr), add(&b21, &b22, ctr));
        strassen(&x, &y, ctr)
    };

    let c11 = {
        let t = add(&m1, &m4, ctr);
        let t = sub(&t, &m5, ctr);
        add(&t, &m7, ctr)
    };
    let c12 = add(&m3, &m5, ctr);
    let c21 = add(&m2, &m4, ctr);
    let c22 = {
        let t = sub(&m1, &m2, ctr);
        let t = add(&t, &m3, ctr);
        add(&t, &m6, ctr)
    };
    Matrix::from_blocks(&c11, &c12, &c21, &c22)
}
