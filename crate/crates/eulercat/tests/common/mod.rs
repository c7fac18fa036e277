//! Independent pseudoinverse oracle for cross-checking `RatMatrix::pinv`.
//!
//! Uses the full-rank factorization M = FG (F = pivot columns of M, G =
//! nonzero rows of rref(M)) and the closed form
//!     M⁺ = Gᵀ (G Gᵀ)⁻¹ (Fᵀ F)⁻¹ Fᵀ.
//! Everything here is written from scratch on top of basic matrix arithmetic
//! so it shares no code path with the implementation under test; in
//! particular the inverse below is its own Gauss–Jordan elimination.

#![allow(dead_code)] // shared between test targets; not every target uses everything

use eulercat::ratmat::{rat, RatMatrix, Rational};
use num_traits::Zero;

/// Plain Gauss–Jordan inverse on [M | I], independent of RatMatrix::inverse.
fn gauss_jordan_inverse(m: &RatMatrix) -> RatMatrix {
    let n = m.rows();
    assert_eq!(n, m.cols(), "oracle inverse needs a square matrix");
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = (0..n).map(|j| m.get(i, j).clone()).collect();
            row.extend((0..n).map(|j| if i == j { rat(1, 1) } else { rat(0, 1) }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("oracle inverse applied to a singular matrix");
        a.swap(col, pivot);
        let inv = rat(1, 1) / a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..2 * n {
                    let v = a[r][c].clone() - factor.clone() * a[col][c].clone();
                    a[r][c] = v;
                }
            }
        }
    }
    RatMatrix::from_rows(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Full-rank-factorization pseudoinverse. Rank 0 maps to the zero matrix of
/// transposed shape.
pub fn frf_pinv(m: &RatMatrix) -> RatMatrix {
    let (r, pivots) = m.rref();
    let k = pivots.len();
    if k == 0 {
        return RatMatrix::zeros(m.cols(), m.rows());
    }
    // F: the pivot columns of M, in order. G: the nonzero rows of rref(M).
    let mut f = RatMatrix::zeros(m.rows(), k);
    for (jf, &jm) in pivots.iter().enumerate() {
        for i in 0..m.rows() {
            f.set(i, jf, m.get(i, jm).clone());
        }
    }
    let mut g = RatMatrix::zeros(k, m.cols());
    for i in 0..k {
        for j in 0..m.cols() {
            g.set(i, j, r.get(i, j).clone());
        }
    }
    let gt = g.transpose();
    let ft = f.transpose();
    let ggt_inv = gauss_jordan_inverse(&g.mat_mul(&gt).unwrap());
    let ftf_inv = gauss_jordan_inverse(&ft.mat_mul(&f).unwrap());
    gt.mat_mul(&ggt_inv)
        .unwrap()
        .mat_mul(&ftf_inv)
        .unwrap()
        .mat_mul(&ft)
        .unwrap()
}

/// The four defining equations of the Moore–Penrose pseudoinverse, checked
/// with exact equality.
pub fn penrose_holds(m: &RatMatrix, p: &RatMatrix) -> bool {
    let mp = m.mat_mul(p).unwrap();
    let pm = p.mat_mul(m).unwrap();
    mp.mat_mul(m).unwrap() == *m
        && pm.mat_mul(p).unwrap() == *p
        && pm.transpose() == pm
        && mp.transpose() == mp
}
