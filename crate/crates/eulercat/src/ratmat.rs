//! Exact dense linear algebra over the rationals.
//!
//! Everything here is exact: entries are arbitrary-precision rationals,
//! kept reduced with positive denominator by `num_rational::BigRational`.
//! The pseudoinverse is computed from a row-space basis and a basis of
//! `im(M)^⊥ = Null(Mᵀ)`, so every intermediate value stays rational.

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational scalar. Always stored reduced, denominator > 0.
pub type Rational = BigRational;

/// Shorthand for building a rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(num.into(), den.into())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatError {
    #[error("dimension mismatch: {left_rows}x{left_cols} * {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("block {index} is {rows}x{cols}, not square")]
    NonSquareBlock { index: usize, rows: usize, cols: usize },
    #[error("stacked vector {index} has {cols} columns, expected 1")]
    WidthMismatch { index: usize, cols: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    // Only reachable through a basis-extraction bug: the appendix matrix
    // [Mr_1* ... Mr_k* s_1 ... s_{m-k}] is invertible by construction.
    #[error("internal error: singular matrix where an invertible one was expected")]
    Singular,
}

/// Dense row-major matrix of rationals. `0x0` is allowed (empty category).
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// An ordered list of linearly independent vectors (rows `1xn` or columns `mx1`,
/// depending on which space they span).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisSet {
    pub vectors: Vec<RatMatrix>,
}

impl BasisSet {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

impl std::fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// The `m x 1` all-ones column. `ones(0)` is the empty `0x1` column.
    pub fn ones(m: usize) -> Self {
        RatMatrix {
            rows: m,
            cols: 1,
            entries: vec![Rational::one(); m],
        }
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        RatMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| rat(v, 1)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> RatMatrix {
        RatMatrix {
            rows: 1,
            cols: self.cols,
            entries: self.entries[i * self.cols..(i + 1) * self.cols].to_vec(),
        }
    }

    pub fn col(&self, j: usize) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: 1,
            entries: (0..self.rows).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Sum of all entries; for a column w this is `1ᵀw`.
    pub fn entry_sum(&self) -> Rational {
        self.entries.iter().fold(Rational::zero(), |acc, e| acc + e)
    }

    pub fn scale(&self, s: &Rational) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn mat_mul(&self, other: &RatMatrix) -> Result<RatMatrix, MatError> {
        if self.cols != other.rows {
            return Err(MatError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Reduced row echelon form with the pivot columns in ascending order.
    /// Pivoting takes the first nonzero entry in the current column.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(r) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, r);
            let inv = m.get(pivot_row, col).recip();
            for j in col..m.cols {
                let v = m.get(pivot_row, j) * &inv;
                m.set(pivot_row, j, v);
            }
            for r in 0..m.rows {
                if r == pivot_row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in col..m.cols {
                    let v = m.get(r, j) - &factor * m.get(pivot_row, j);
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of Row(M): the nonzero rows of the RREF, as `1xn` rows.
    pub fn row_space_basis(&self) -> BasisSet {
        let (r, pivots) = self.rref();
        BasisSet {
            vectors: (0..pivots.len()).map(|i| r.row(i)).collect(),
        }
    }

    /// Basis of Null(M) = {x : Mx = 0}, as `nx1` columns, one per free
    /// column of the RREF (free variable set to 1).
    pub fn null_space_basis(&self) -> BasisSet {
        let (r, pivots) = self.rref();
        let mut vectors = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = RatMatrix::zeros(self.cols, 1);
            v.set(free, 0, Rational::one());
            for (row, &p) in pivots.iter().enumerate() {
                v.set(p, 0, -r.get(row, free).clone());
            }
            vectors.push(v);
        }
        BasisSet { vectors }
    }

    /// Exact inverse by Gauss-Jordan on `[M | I]`.
    pub fn inverse(&self) -> Result<RatMatrix, MatError> {
        if !self.is_square() {
            return Err(MatError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = RatMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(MatError::Singular);
        }
        let mut out = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, red.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    /// Moore-Penrose inverse of a square matrix.
    ///
    /// With `{r_1,...,r_k}` a basis of Row(M) and `{s_1,...,s_{m-k}}` a basis
    /// of `im(M)^⊥ = Null(Mᵀ)`, the result is
    /// `[r_1* ... r_k* 0] · [Mr_1* ... Mr_k* s_1 ... s_{m-k}]⁻¹`,
    /// the unique matrix satisfying the four Penrose equations.
    pub fn pinv(&self) -> Result<RatMatrix, MatError> {
        if !self.is_square() {
            return Err(MatError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let m = self.rows;
        if m == 0 {
            return Ok(RatMatrix::zeros(0, 0));
        }
        let row_basis = self.row_space_basis();
        let coimage_basis = self.transpose().null_space_basis();
        let k = row_basis.len();
        debug_assert_eq!(k + coimage_basis.len(), m);

        let mut a = RatMatrix::zeros(m, m);
        let mut b = RatMatrix::zeros(m, m);
        for (idx, r) in row_basis.vectors.iter().enumerate() {
            let r_col = r.transpose();
            let mr = self.mat_mul(&r_col).expect("m x m times m x 1");
            for i in 0..m {
                a.set(i, idx, r_col.get(i, 0).clone());
                b.set(i, idx, mr.get(i, 0).clone());
            }
        }
        for (idx, s) in coimage_basis.vectors.iter().enumerate() {
            for i in 0..m {
                b.set(i, k + idx, s.get(i, 0).clone());
            }
        }
        let b_inv = b.inverse()?;
        a.mat_mul(&b_inv)
    }

    /// Kronecker product, `(a.rows*b.rows) x (a.cols*b.cols)`.
    pub fn kronecker(&self, other: &RatMatrix) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        out.set(i * other.rows + p, j * other.cols + q, a * other.get(p, q));
                    }
                }
            }
        }
        out
    }
}

/// Square matrix with `blocks` on the diagonal and zeros elsewhere.
pub fn block_diag(blocks: &[RatMatrix]) -> Result<RatMatrix, MatError> {
    for (index, b) in blocks.iter().enumerate() {
        if !b.is_square() {
            return Err(MatError::NonSquareBlock {
                index,
                rows: b.rows(),
                cols: b.cols(),
            });
        }
    }
    let n: usize = blocks.iter().map(|b| b.rows()).sum();
    let mut out = RatMatrix::zeros(n, n);
    let mut offset = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                out.set(offset + i, offset + j, b.get(i, j).clone());
            }
        }
        offset += b.rows();
    }
    Ok(out)
}

/// Vertical concatenation `C(v_1, ..., v_m)` of column vectors.
pub fn stack_columns(vs: &[RatMatrix]) -> Result<RatMatrix, MatError> {
    for (index, v) in vs.iter().enumerate() {
        if v.cols() != 1 {
            return Err(MatError::WidthMismatch { index, cols: v.cols() });
        }
    }
    let n: usize = vs.iter().map(|v| v.rows()).sum();
    let mut out = RatMatrix::zeros(n, 1);
    let mut offset = 0;
    for v in vs {
        for i in 0..v.rows() {
            out.set(offset + i, 0, v.get(i, 0).clone());
        }
        offset += v.rows();
    }
    Ok(out)
}
