use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Real, C};

/// Dense complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct CMatrix<T: Real> {
    rows: usize,
    cols: usize,
    data: Vec<C<T>>,
}

/// Dense complex column vector.
#[derive(Clone, PartialEq)]
pub struct CVector<T: Real>(Vec<C<T>>);

impl<T: Real> CMatrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<C<T>>) -> Result<Self> {
        if rows == 0 || cols == 0 || rows * cols != data.len() {
            return Err(Error::DimensionMismatch {
                op: "CMatrix::new",
                expected: format!("{rows}x{cols} entries"),
                found: data.len().to_string(),
            });
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("matrix"));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![C::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { C::one() } else { C::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C<T>) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds from nested rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[C<T>]>>(rows: &[R]) -> Self {
        let cols = rows[0].as_ref().len();
        assert!(rows.iter().all(|r| r.as_ref().len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| rows[i].as_ref()[j])
    }

    /// Builds from `(re, im)` literal pairs.
    pub fn from_pairs<const N: usize>(rows: &[[(f64, f64); N]]) -> Self {
        Self::from_fn(rows.len(), N, |i, j| {
            let (a, b) = rows[i][j];
            Complex::new(T::lit(a), T::lit(b))
        })
    }

    /// Builds from real literals.
    pub fn from_real<const N: usize>(rows: &[[f64; N]]) -> Self {
        Self::from_fn(rows.len(), N, |i, j| Complex::new(T::lit(rows[i][j]), T::zero()))
    }

    pub fn diag(entries: &[C<T>]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i] } else { C::zero() })
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

    pub fn entries(&self) -> &[C<T>] {
        &self.data
    }

    pub fn column(&self, j: usize) -> CVector<T> {
        CVector((0..self.rows).map(|i| self[(i, j)]).collect())
    }

    pub fn row(&self, i: usize) -> CVector<T> {
        CVector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[CVector<T>]) -> Self {
        let n = cols[0].len();
        assert!(cols.iter().all(|c| c.len() == n), "ragged columns");
        Self::from_fn(n, cols.len(), |i, j| cols[j][i])
    }

    pub fn map(&self, f: impl Fn(C<T>) -> C<T>) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&z| f(z)).collect() }
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: C<T>) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_real(&self, s: T) -> Self {
        self.map(|z| z * s)
    }

    pub fn trace(&self) -> C<T> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).fold(C::zero(), |a, b| a + b)
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    /// Largest imaginary magnitude over all entries.
    pub fn max_imag(&self) -> T {
        self.data.iter().map(|z| z.im.abs()).fold(T::zero(), T::max)
    }

    /// Largest real magnitude over all entries.
    pub fn max_real(&self) -> T {
        self.data.iter().map(|z| z.re.abs()).fold(T::zero(), T::max)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "matmul",
                expected: format!("{} rows", self.cols),
                found: format!("{} rows", rhs.rows),
            });
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(C::zero(), |acc, k| acc + self[(i, k)] * rhs[(k, j)])
        }))
    }

    pub fn try_mul_vec(&self, v: &CVector<T>) -> Result<CVector<T>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                op: "matvec",
                expected: self.cols.to_string(),
                found: v.len().to_string(),
            });
        }
        Ok(CVector(
            (0..self.rows).map(|i| (0..self.cols).fold(C::zero(), |acc, k| acc + self[(i, k)] * v[k])).collect(),
        ))
    }

    pub fn mul_vec(&self, v: &CVector<T>) -> CVector<T> {
        self.try_mul_vec(v).expect("matrix-vector dimensions")
    }

    fn try_zip(&self, rhs: &Self, op: &'static str, f: impl Fn(C<T>, C<T>) -> C<T>) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch {
                op,
                expected: format!("{:?}", self.shape()),
                found: format!("{:?}", rhs.shape()),
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.try_zip(rhs, "add", |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_zip(rhs, "sub", |a, b| a - b)
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            self[(i / rhs.rows, j / rhs.cols)] * rhs[(i % rhs.rows, j % rhs.cols)]
        })
    }

    /// Assembles a block matrix. Every block row must share its height and
    /// every block column its width.
    pub fn block(blocks: &[&[&Self]]) -> Result<Self> {
        let heights: Vec<usize> = blocks.iter().map(|r| r[0].rows).collect();
        let widths: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        for (bi, brow) in blocks.iter().enumerate() {
            if brow.len() != widths.len() {
                return Err(Error::DimensionMismatch {
                    op: "block",
                    expected: format!("{} blocks per row", widths.len()),
                    found: brow.len().to_string(),
                });
            }
            for (bj, b) in brow.iter().enumerate() {
                if b.rows != heights[bi] || b.cols != widths[bj] {
                    return Err(Error::DimensionMismatch {
                        op: "block",
                        expected: format!("{}x{}", heights[bi], widths[bj]),
                        found: format!("{}x{}", b.rows, b.cols),
                    });
                }
            }
        }
        let rows = heights.iter().sum();
        let cols = widths.iter().sum();
        let mut out = Self::zeros(rows, cols);
        let mut r0 = 0;
        for (bi, brow) in blocks.iter().enumerate() {
            let mut c0 = 0;
            for (bj, b) in brow.iter().enumerate() {
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out[(r0 + i, c0 + j)] = b[(i, j)];
                    }
                }
                c0 += widths[bj];
            }
            r0 += heights[bi];
        }
        Ok(out)
    }

    /// `[[a, b], [c, d]]` from four equally shaped square blocks.
    pub fn block2(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        Self::block(&[&[a, b], &[c, d]]).expect("block2 shapes")
    }

    pub fn block_diag(a: &Self, d: &Self) -> Self {
        Self::block2(a, &Self::zeros(a.rows, d.cols), &Self::zeros(d.rows, a.cols), d)
    }

    pub fn block_offdiag(b: &Self, c: &Self) -> Self {
        Self::block2(&Self::zeros(c.rows, b.rows), b, c, &Self::zeros(b.rows, c.rows))
    }

    /// Sub-block starting at `(r0, c0)`.
    pub fn sub_block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)])
    }

    /// Row-echelon reduction with partial pivoting. Returns the reduced
    /// matrix, the pivot columns and the sign/scale product for the
    /// determinant.
    fn echelon(&self, tol: T) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..a.cols {
            if r == a.rows {
                break;
            }
            let (best, best_abs) =
                (r..a.rows)
                    .map(|i| (i, a[(i, col)].norm()))
                    .fold((r, T::zero()), |acc, x| if x.1 > acc.1 { x } else { acc });
            if best_abs <= tol {
                continue;
            }
            a.swap_rows(r, best);
            let p = a[(r, col)];
            for j in 0..a.cols {
                a[(r, j)] = a[(r, j)] / p;
            }
            for i in 0..a.rows {
                if i != r {
                    let f = a[(i, col)];
                    if f != C::zero() {
                        for j in 0..a.cols {
                            let v = a[(r, j)];
                            a[(i, j)] = a[(i, j)] - f * v;
                        }
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        (a, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Numerical rank with absolute pivot threshold `tol`.
    pub fn rank(&self, tol: T) -> usize {
        self.echelon(tol).1.len()
    }

    /// Basis of the right nullspace (unnormalized), pivot threshold `tol`.
    pub fn nullspace(&self, tol: T) -> Vec<CVector<T>> {
        let (r, pivots) = self.echelon(tol);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![C::zero(); self.cols];
                v[f] = C::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r[(row, f)];
                }
                CVector(v)
            })
            .collect()
    }

    pub fn det(&self) -> Result<C<T>> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = C::one();
        for col in 0..n {
            let (best, best_abs) =
                (col..n)
                    .map(|i| (i, a[(i, col)].norm()))
                    .fold((col, T::zero()), |acc, x| if x.1 > acc.1 { x } else { acc });
            if best_abs == T::zero() {
                return Ok(C::zero());
            }
            if best != col {
                a.swap_rows(best, col);
                det = -det;
            }
            let p = a[(col, col)];
            det = det * p;
            for i in col + 1..n {
                let f = a[(i, col)] / p;
                for j in col..n {
                    let v = a[(col, j)];
                    a[(i, j)] = a[(i, j)] - f * v;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let aug = Self::block(&[&[self, &Self::identity(n)]])?;
        let (r, pivots) = aug.echelon(T::epsilon());
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(r.sub_block(0, n, n, n))
    }
}

impl<T: Real> Index<(usize, usize)> for CMatrix<T> {
    type Output = C<T>;
    fn index(&self, (i, j): (usize, usize)) -> &C<T> {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }
}

impl<T: Real> IndexMut<(usize, usize)> for CMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C<T> {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl<'a, T: Real> Mul<&'a CMatrix<T>> for &'a CMatrix<T> {
    type Output = CMatrix<T>;
    fn mul(self, rhs: &'a CMatrix<T>) -> CMatrix<T> {
        self.try_mul(rhs).expect("matmul dimensions")
    }
}

impl<'a, T: Real> Mul<&'a CVector<T>> for &'a CMatrix<T> {
    type Output = CVector<T>;
    fn mul(self, rhs: &'a CVector<T>) -> CVector<T> {
        self.mul_vec(rhs)
    }
}

impl<'a, T: Real> Add<&'a CMatrix<T>> for &'a CMatrix<T> {
    type Output = CMatrix<T>;
    fn add(self, rhs: &'a CMatrix<T>) -> CMatrix<T> {
        self.try_add(rhs).expect("add dimensions")
    }
}

impl<'a, T: Real> Sub<&'a CMatrix<T>> for &'a CMatrix<T> {
    type Output = CMatrix<T>;
    fn sub(self, rhs: &'a CMatrix<T>) -> CMatrix<T> {
        self.try_sub(rhs).expect("sub dimensions")
    }
}

impl<T: Real> Neg for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn neg(self) -> CMatrix<T> {
        self.map(|z| -z)
    }
}

impl<T: Real> fmt::Debug for CMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:+.6}{:+.6}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl<T: Real> CVector<T> {
    pub fn new(entries: Vec<C<T>>) -> Self {
        Self(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![C::zero(); n])
    }

    pub fn from_pairs(entries: &[(f64, f64)]) -> Self {
        Self(entries.iter().map(|&(a, b)| Complex::new(T::lit(a), T::lit(b))).collect())
    }

    pub fn from_real(entries: &[f64]) -> Self {
        Self(entries.iter().map(|&a| Complex::new(T::lit(a), T::zero())).collect())
    }

    pub fn basis(n: usize, k: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[k] = C::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[C<T>] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<C<T>> {
        self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = &C<T>> {
        self.0.iter()
    }

    pub fn map(&self, f: impl Fn(C<T>) -> C<T>) -> Self {
        Self(self.0.iter().map(|&z| f(z)).collect())
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn scale(&self, s: C<T>) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_real(&self, s: T) -> Self {
        self.map(|z| z * s)
    }

    /// Hermitian inner product `⟨self, other⟩ = Σ self_i* other_i`.
    pub fn dot(&self, other: &Self) -> C<T> {
        assert_eq!(self.len(), other.len(), "dot dimensions");
        self.0.iter().zip(&other.0).fold(C::zero(), |acc, (a, b)| acc + a.conj() * b)
    }

    pub fn norm(&self) -> T {
        self.0.iter().map(|z| z.norm_sqr()).fold(T::zero(), |a, b| a + b).sqrt()
    }

    pub fn max_abs(&self) -> T {
        self.0.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    pub fn max_imag(&self) -> T {
        self.0.iter().map(|z| z.im.abs()).fold(T::zero(), T::max)
    }

    pub fn max_real(&self) -> T {
        self.0.iter().map(|z| z.re.abs()).fold(T::zero(), T::max)
    }

    /// Entrywise real parts as a complex vector.
    pub fn real_part(&self) -> Self {
        self.map(|z| Complex::new(z.re, T::zero()))
    }

    /// Entrywise imaginary parts as a complex vector.
    pub fn imag_part(&self) -> Self {
        self.map(|z| Complex::new(z.im, T::zero()))
    }

    pub fn kron(&self, other: &Self) -> Self {
        Self(self.0.iter().flat_map(|&a| other.0.iter().map(move |&b| a * b)).collect())
    }

    pub fn concat(a: &Self, b: &Self) -> Self {
        Self(a.0.iter().chain(&b.0).copied().collect())
    }

    /// Splits into `[0, k)` and `[k, len)`.
    pub fn split(&self, k: usize) -> (Self, Self) {
        (Self(self.0[..k].to_vec()), Self(self.0[k..].to_vec()))
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.try_zip(rhs, "vector add", |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_zip(rhs, "vector sub", |a, b| a - b)
    }

    fn try_zip(&self, rhs: &Self, op: &'static str, f: impl Fn(C<T>, C<T>) -> C<T>) -> Result<Self> {
        if self.len() != rhs.len() {
            return Err(Error::DimensionMismatch {
                op,
                expected: self.len().to_string(),
                found: rhs.len().to_string(),
            });
        }
        Ok(Self(self.0.iter().zip(&rhs.0).map(|(&a, &b)| f(a, b)).collect()))
    }

    /// Real embedding `(Re v, Im v)` of length `2n`.
    pub fn realify(&self) -> Vec<T> {
        self.0.iter().map(|z| z.re).chain(self.0.iter().map(|z| z.im)).collect()
    }

    /// Inverse of [`CVector::realify`].
    pub fn from_realified(x: &[T]) -> Self {
        let n = x.len() / 2;
        Self((0..n).map(|k| Complex::new(x[k], x[n + k])).collect())
    }
}

impl<T: Real> Index<usize> for CVector<T> {
    type Output = C<T>;
    fn index(&self, i: usize) -> &C<T> {
        &self.0[i]
    }
}

impl<T: Real> IndexMut<usize> for CVector<T> {
    fn index_mut(&mut self, i: usize) -> &mut C<T> {
        &mut self.0[i]
    }
}

impl<'a, T: Real> Add<&'a CVector<T>> for &'a CVector<T> {
    type Output = CVector<T>;
    fn add(self, rhs: &'a CVector<T>) -> CVector<T> {
        self.try_add(rhs).expect("vector add dimensions")
    }
}

impl<'a, T: Real> Sub<&'a CVector<T>> for &'a CVector<T> {
    type Output = CVector<T>;
    fn sub(self, rhs: &'a CVector<T>) -> CVector<T> {
        self.try_sub(rhs).expect("vector sub dimensions")
    }
}

impl<T: Real> Neg for &CVector<T> {
    type Output = CVector<T>;
    fn neg(self) -> CVector<T> {
        self.map(|z| -z)
    }
}

impl<T: Real> fmt::Debug for CVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, z) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:+.6}{:+.6}i", z.re, z.im)?;
        }
        write!(f, ")")
    }
}

impl<T: Real> FromIterator<C<T>> for CVector<T> {
    fn from_iter<I: IntoIterator<Item = C<T>>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}
