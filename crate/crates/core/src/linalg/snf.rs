//! Smith normal form over the integers.
//!
//! Pivot rule: the nonzero entry of least absolute value in the active
//! submatrix, ties broken by lowest row and then lowest column. Every
//! re-pivot strictly lowers the pivot's absolute value, so the loop ends.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::abelian::FgAbelianGroup;

/// `U · M · V = diag(d)` with `U`, `V` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// `min(rows, cols)` entries: positive factors in divisibility order, then zeros.
    pub d: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    pub fn diagonal(&self) -> IntMatrix {
        IntMatrix::from_diagonal(self.u.rows(), self.v.rows(), &self.d)
    }

    pub fn rank(&self) -> usize {
        self.d.iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let mut work = Reducer::new(m.clone(), true);
    work.run();
    let d = work.diagonal();
    SnfResult {
        d,
        u: work.u.unwrap(),
        v: work.v.unwrap(),
    }
}

/// Invariant factors only, skipping the transform bookkeeping.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let mut work = Reducer::new(m.clone(), false);
    work.run();
    work.diagonal()
}

/// `Z^rows` modulo the column span of `m`.
pub fn cokernel(m: &IntMatrix) -> FgAbelianGroup {
    let d = invariant_factors(m);
    let nonzero = d.iter().filter(|x| !x.is_zero()).count();
    let torsion = d
        .into_iter()
        .filter(|x| *x > BigInt::from(1))
        .map(|x| x.into_parts().1);
    FgAbelianGroup::from_canonical_parts(m.rows() - nonzero, torsion.collect())
}

/// Whether `v` lies in the Z-span of the columns of `m`.
///
/// Appending `v` keeps the span iff the rank and the product of the nonzero
/// invariant factors (the index of the lattice in its saturation) are unchanged.
pub fn column_span_contains(m: &IntMatrix, v: &[BigInt]) -> bool {
    assert_eq!(v.len(), m.rows(), "vector length must match row count");
    let mut ext = m.with_zero_columns(1);
    for (i, x) in v.iter().enumerate() {
        ext[(i, m.cols())] = x.clone();
    }
    let summary = |d: Vec<BigInt>| {
        let nz: Vec<BigInt> = d.into_iter().filter(|x| !x.is_zero()).collect();
        (nz.len(), nz.iter().fold(BigInt::from(1), |acc, x| acc * x))
    };
    summary(invariant_factors(m)) == summary(invariant_factors(&ext))
}

struct Reducer {
    a: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
}

impl Reducer {
    fn new(a: IntMatrix, transforms: bool) -> Self {
        let (u, v) = if transforms {
            (
                Some(IntMatrix::identity(a.rows())),
                Some(IntMatrix::identity(a.cols())),
            )
        } else {
            (None, None)
        };
        Reducer { a, u, v }
    }

    fn diagonal(&self) -> Vec<BigInt> {
        (0..self.a.rows().min(self.a.cols()))
            .map(|i| self.a[(i, i)].clone())
            .collect()
    }

    fn run(&mut self) {
        let (rows, cols) = (self.a.rows(), self.a.cols());
        for k in 0..rows.min(cols) {
            loop {
                let Some((pi, pj)) = self.find_pivot(k) else {
                    return;
                };
                self.swap_rows(k, pi);
                self.swap_cols(k, pj);

                let mut dirty = false;
                for i in k + 1..rows {
                    if self.a[(i, k)].is_zero() {
                        continue;
                    }
                    let q = &self.a[(i, k)] / &self.a[(k, k)];
                    self.row_axpy(i, k, &q);
                    dirty |= !self.a[(i, k)].is_zero();
                }
                for j in k + 1..cols {
                    if self.a[(k, j)].is_zero() {
                        continue;
                    }
                    let q = &self.a[(k, j)] / &self.a[(k, k)];
                    self.col_axpy(j, k, &q);
                    dirty |= !self.a[(k, j)].is_zero();
                }
                if dirty {
                    continue;
                }

                // Row and column k are clear; enforce d_k | rest.
                match self.find_non_multiple(k) {
                    Some(i) => self.row_axpy(k, i, &BigInt::from(-1)),
                    None => break,
                }
            }
            if self.a[(k, k)].is_negative() {
                self.negate_row(k);
            }
        }
    }

    fn find_pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in k..self.a.rows() {
            for j in k..self.a.cols() {
                let v = &self.a[(i, j)];
                if v.is_zero() {
                    continue;
                }
                // Nothing beats a unit, and scan order already respects the tie-break.
                if v.magnitude().is_one() {
                    return Some((i, j));
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => v.magnitude() < self.a[(bi, bj)].magnitude(),
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn find_non_multiple(&self, k: usize) -> Option<usize> {
        let pivot = &self.a[(k, k)];
        for i in k + 1..self.a.rows() {
            for j in k + 1..self.a.cols() {
                if !self.a[(i, j)].is_multiple_of(pivot) {
                    return Some(i);
                }
            }
        }
        None
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.a.swap_rows(a, b);
        if let Some(u) = &mut self.u {
            u.swap_rows(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.a.swap_cols(a, b);
        if let Some(v) = &mut self.v {
            v.swap_cols(a, b);
        }
    }

    /// row[dst] -= q * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        row_axpy(&mut self.a, dst, src, q);
        if let Some(u) = &mut self.u {
            row_axpy(u, dst, src, q);
        }
    }

    /// col[dst] -= q * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        col_axpy(&mut self.a, dst, src, q);
        if let Some(v) = &mut self.v {
            col_axpy(v, dst, src, q);
        }
    }

    fn negate_row(&mut self, k: usize) {
        negate_row(&mut self.a, k);
        if let Some(u) = &mut self.u {
            negate_row(u, k);
        }
    }
}

fn row_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for j in 0..m.cols() {
        if m[(src, j)].is_zero() {
            continue;
        }
        let delta = q * &m[(src, j)];
        m[(dst, j)] -= delta;
    }
}

fn col_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for i in 0..m.rows() {
        if m[(i, src)].is_zero() {
            continue;
        }
        let delta = q * &m[(i, src)];
        m[(i, dst)] -= delta;
    }
}

fn negate_row(m: &mut IntMatrix, k: usize) {
    for j in 0..m.cols() {
        let v = core::mem::take(&mut m[(k, j)]);
        m[(k, j)] = -v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check(m: &IntMatrix) -> SnfResult {
        let r = smith_normal_form(m);
        let lhs = r.u.mul(m).unwrap().mul(&r.v).unwrap();
        assert_eq!(lhs, r.diagonal());
        assert!(r.u.determinant().unwrap().magnitude() == &1u32.into());
        assert!(r.v.determinant().unwrap().magnitude() == &1u32.into());
        r
    }

    #[test]
    fn two_by_two() {
        let r = check(&IntMatrix::from_rows(&[[2, 4], [6, 8]]));
        assert_eq!(r.d, ints(&[2, 4]));
    }

    #[test]
    fn zero_matrix() {
        let r = check(&IntMatrix::zeros(3, 3));
        assert_eq!(r.d, ints(&[0, 0, 0]));
    }

    #[test]
    fn identity() {
        let r = check(&IntMatrix::identity(4));
        assert_eq!(r.d, ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let s = check(&IntMatrix::zeros(r, c));
            assert!(s.d.is_empty());
        }
        assert_eq!(cokernel(&IntMatrix::zeros(3, 0)).to_string(), "Z^3");
    }

    #[test]
    fn rectangular_and_negative() {
        let r = check(&IntMatrix::from_rows(&[[-6, 0, 0], [0, -4, 0]]));
        assert_eq!(r.d, ints(&[2, 12]));
        let r = check(&IntMatrix::from_rows(&[[3], [5], [7]]));
        assert_eq!(r.d, ints(&[1]));
    }

    #[test]
    fn divisibility_fixup() {
        // diag(2, 3) is not in normal form: Z/2 + Z/3 = Z/6.
        let r = check(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(r.d, ints(&[1, 6]));
    }

    #[test]
    fn cokernels() {
        assert_eq!(cokernel(&IntMatrix::zeros(2, 2)).to_string(), "Z^2");
        assert_eq!(
            cokernel(&IntMatrix::scalar(3, BigInt::from(2))).to_string(),
            "Z/2 ⊕ Z/2 ⊕ Z/2"
        );
        assert_eq!(
            cokernel(&IntMatrix::from_rows(&[[2, 4], [6, 8]])).to_string(),
            "Z/2 ⊕ Z/4"
        );
        assert_eq!(
            invariant_factors(&IntMatrix::from_rows(&[[0, 0], [0, 5]])),
            vec![BigInt::from(5), BigInt::zero()]
        );
    }

    #[test]
    fn span_membership() {
        let m = IntMatrix::from_rows(&[[2, 0], [0, 3], [0, 0]]);
        assert!(column_span_contains(&m, &ints(&[4, -3, 0])));
        assert!(!column_span_contains(&m, &ints(&[1, 0, 0])));
        assert!(!column_span_contains(&m, &ints(&[0, 0, 1])));
        assert!(column_span_contains(&m, &ints(&[0, 0, 0])));
    }
}
