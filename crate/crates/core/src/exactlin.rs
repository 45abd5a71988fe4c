//! Exact dense linear algebra over a generic scalar.
//!
//! Row-major dense matrices, Gaussian elimination with leftmost-pivot
//! preference over a field, and Smith normal form with minimal-absolute-value
//! pivoting over a Euclidean ring. All operations are pure; matrices are
//! immutable from the caller's point of view.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::scalar::{FieldScalar, IntegerScalar, Scalar};
use crate::{Q, Z};

#[derive(Debug, Error, PartialEq)]
pub enum MatError {
    #[error("entry count {got} does not match {rows}x{cols}")]
    EntryCount { rows: usize, cols: usize, got: usize },
    #[error("dimension mismatch: {left} vs {right} in {op}")]
    Dim { op: &'static str, left: String, right: String },
    #[error("ragged rows: row {row} has {got} entries, expected {expected}")]
    Ragged { row: usize, got: usize, expected: usize },
    #[error("matrix is not integral: entry ({row},{col}) has a nontrivial denominator")]
    NotIntegral { row: usize, col: usize },
    #[error("matrix is singular")]
    Singular,
}

/// Dense matrix, row-major. `rows * cols` may be zero in either factor.
#[derive(Clone, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self, MatError> {
        if entries.len() != rows * cols {
            return Err(MatError::EntryCount { rows, cols, got: entries.len() });
        }
        Ok(Mat { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, entries: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(MatError::Ragged { row: i, got: row.len(), expected: c });
            }
        }
        Ok(Mat { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    /// Convenience constructor from integer literals.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let data = rows.iter().map(|r| r.iter().map(|&n| T::from_int(n)).collect()).collect();
        Self::from_rows(data).expect("literal rows are rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn build(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Mat { rows, cols, entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.entries.iter().enumerate().all(|(k, e)| {
                let (i, j) = (k / self.cols, k % self.cols);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
    }

    pub fn transpose(&self) -> Self {
        Self::build(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn neg(&self) -> Self {
        Self::build(self.rows, self.cols, |i, j| -self[(i, j)].clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::build(self.rows, self.cols, |i, j| self[(i, j)].clone() * c.clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatError> {
        self.same_shape(other, "add")?;
        Ok(Self::build(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + other[(i, j)].clone()
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MatError> {
        self.same_shape(other, "sub")?;
        Ok(Self::build(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - other[(i, j)].clone()
        }))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatError> {
        if self.cols != other.rows {
            return Err(MatError::Dim {
                op: "mul",
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}x{}", other.rows, other.cols),
            });
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other[(k, j)].clone();
                    if !b.is_zero() {
                        let prod = a.clone() * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, MatError> {
        if v.len() != self.cols {
            return Err(MatError::Dim {
                op: "mul_vec",
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}", v.len()),
            });
        }
        let mut out = vec![T::zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self[(i, j)].is_zero() && !v[j].is_zero() {
                    out[i] += self[(i, j)].clone() * v[j].clone();
                }
            }
        }
        Ok(out)
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(&T) -> S) -> Mat<S> {
        Mat { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Block matrix [[a, b], [c, d]] with consistent shapes.
    pub fn block2x2(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self, MatError> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(MatError::Dim {
                op: "block2x2",
                left: format!("{}x{} | {}x{}", a.rows, a.cols, b.rows, b.cols),
                right: format!("{}x{} | {}x{}", c.rows, c.cols, d.rows, d.cols),
            });
        }
        Ok(Self::build(a.rows + c.rows, a.cols + b.cols, |i, j| {
            if i < a.rows {
                if j < a.cols {
                    a[(i, j)].clone()
                } else {
                    b[(i, j - a.cols)].clone()
                }
            } else if j < a.cols {
                c[(i - a.rows, j)].clone()
            } else {
                d[(i - a.rows, j - a.cols)].clone()
            }
        }))
    }

    fn same_shape(&self, other: &Self, op: &'static str) -> Result<(), MatError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatError::Dim {
                op,
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}x{}", other.rows, other.cols),
            });
        }
        Ok(())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += c * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, c: &T) {
        for j in 0..self.cols {
            let v = self[(source, j)].clone() * c.clone();
            self[(target, j)] += v;
        }
    }

    /// col[target] += c * col[source]
    fn add_col_multiple(&mut self, target: usize, source: usize, c: &T) {
        for i in 0..self.rows {
            let v = self[(i, source)].clone() * c.clone();
            self[(i, target)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl<T: Scalar> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{}", self[(i, j)])).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

// ---------------------------------------------------------------------------
// Field algorithms: elimination, rank, kernel, solve, inverse, determinant.
// ---------------------------------------------------------------------------

/// Row echelon data: reduced matrix, pivot columns in order, rank.
pub struct Echelon<T> {
    pub rref: Mat<T>,
    pub pivots: Vec<usize>,
}

impl<T: FieldScalar> Mat<T> {
    /// Reduced row echelon form with leftmost-pivot preference. The pivot in
    /// each step is the first nonzero entry scanning the current column top
    /// to bottom, which makes every downstream basis choice deterministic.
    pub fn rref(&self) -> Echelon<T> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = T::one() / m[(r, c)].clone();
            for j in c..m.cols {
                let v = m[(r, j)].clone() * inv.clone();
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let factor = -m[(i, c)].clone();
                    m.add_row_multiple(i, r, &factor);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { rref: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right kernel; deterministic (free columns ascending).
    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        let ech = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &c) in ech.pivots.iter().enumerate() {
                v[c] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![T::zero(); self.cols];
            vec[free] = T::one();
            for (col, slot) in pivot_set.iter().enumerate() {
                if let Some(row) = slot {
                    vec[col] = -ech.rref[(*row, free)].clone();
                }
            }
            basis.push(vec);
        }
        basis
    }

    pub fn rank_kernel(&self) -> (usize, Vec<Vec<T>>) {
        let ech = self.rref();
        let rank = ech.pivots.len();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &c) in ech.pivots.iter().enumerate() {
                v[c] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![T::zero(); self.cols];
            vec[free] = T::one();
            for (col, slot) in pivot_set.iter().enumerate() {
                if let Some(row) = slot {
                    vec[col] = -ech.rref[(*row, free)].clone();
                }
            }
            basis.push(vec);
        }
        (rank, basis)
    }

    /// One solution of `self * x = b` if any, free variables set to zero.
    pub fn solve(&self, b: &[T]) -> Result<Option<Vec<T>>, MatError> {
        if b.len() != self.rows {
            return Err(MatError::Dim {
                op: "solve",
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}", b.len()),
            });
        }
        let mut aug = Mat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let ech = aug.rref();
        if ech.pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![T::zero(); self.cols];
        for (row, &c) in ech.pivots.iter().enumerate() {
            x[c] = ech.rref[(row, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Mat<T>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = T::one();
        }
        let ech = aug.rref();
        if ech.pivots.len() < n || ech.pivots[n - 1] >= n {
            return None;
        }
        Some(Mat::build(n, n, |i, j| ech.rref[(i, n + j)].clone()))
    }

    pub fn det(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return T::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            det *= m[(c, c)].clone();
            let inv = T::one() / m[(c, c)].clone();
            for i in c + 1..n {
                if !m[(i, c)].is_zero() {
                    let factor = -(m[(i, c)].clone() * inv.clone());
                    m.add_row_multiple(i, c, &factor);
                }
            }
        }
        det
    }

    /// Column space basis together with, for each basis vector, its preimage
    /// column expressed in the domain. Used by the SDR splitting.
    pub fn column_space_with_preimages(&self) -> (Vec<Vec<T>>, Vec<Vec<T>>) {
        let mut work = self.clone();
        let mut ops = Mat::<T>::identity(self.cols);
        let mut basis = Vec::new();
        let mut pre = Vec::new();
        let mut next_col = 0;
        for r in 0..self.rows {
            let Some(p) = (next_col..work.cols).find(|&j| !work[(r, j)].is_zero()) else {
                continue;
            };
            work.swap_cols(next_col, p);
            ops.swap_cols(next_col, p);
            let inv = T::one() / work[(r, next_col)].clone();
            for i in 0..work.rows {
                let v = work[(i, next_col)].clone() * inv.clone();
                work[(i, next_col)] = v;
            }
            for i in 0..ops.rows {
                let v = ops[(i, next_col)].clone() * inv.clone();
                ops[(i, next_col)] = v;
            }
            for j in 0..work.cols {
                if j != next_col && !work[(r, j)].is_zero() {
                    let factor = -work[(r, j)].clone();
                    work.add_col_multiple(j, next_col, &factor);
                    ops.add_col_multiple(j, next_col, &factor);
                }
            }
            basis.push(work.col(next_col));
            pre.push(ops.col(next_col));
            next_col += 1;
            if next_col == work.cols {
                break;
            }
        }
        (basis, pre)
    }
}

// ---------------------------------------------------------------------------
// Smith normal form over a Euclidean ring.
// ---------------------------------------------------------------------------

/// U * M * V = S with U, V unimodular and S diagonal, nonnegative, each
/// diagonal entry dividing the next.
#[derive(Clone)]
pub struct SnfResult<T> {
    pub u: Mat<T>,
    pub s: Mat<T>,
    pub v: Mat<T>,
}

impl<T: IntegerScalar> SnfResult<T> {
    pub fn diagonal(&self) -> Vec<T> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s[(i, i)].clone()).collect()
    }

    /// Nonzero diagonal entries (the rank over the fraction field).
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    /// Diagonal entries that are neither zero nor units.
    pub fn torsion(&self) -> Vec<T> {
        self.diagonal().into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect()
    }
}

/// Smith normal form with minimal-absolute-value pivot selection, which keeps
/// coefficient growth tame at the scales this crate works at.
pub fn snf<T: IntegerScalar>(m: &Mat<T>) -> SnfResult<T> {
    let rows = m.rows();
    let cols = m.cols();
    let mut s = m.clone();
    let mut u = Mat::<T>::identity(rows);
    let mut v = Mat::<T>::identity(cols);

    let mut k = 0;
    while k < rows.min(cols) {
        if !pivot_step(&mut s, &mut u, &mut v, k) {
            break;
        }
        k += 1;
    }

    // Sign normalization.
    for i in 0..rows.min(cols) {
        if s[(i, i)].is_negative() {
            s.negate_row(i);
            u.negate_row(i);
        }
    }

    // Divisibility chain: if d_i does not divide d_j (i < j), fold column j
    // into column i and re-reduce from i.
    'chain: loop {
        let n = rows.min(cols);
        for i in 0..n {
            if s[(i, i)].is_zero() {
                continue;
            }
            for j in i + 1..n {
                if s[(j, j)].is_zero() {
                    continue;
                }
                if !s[(j, j)].is_multiple_of(&s[(i, i)]) {
                    let one = T::one();
                    s.add_col_multiple(i, j, &one);
                    v.add_col_multiple(i, j, &one);
                    let mut t = i;
                    while t < n {
                        if !pivot_step(&mut s, &mut u, &mut v, t) {
                            break;
                        }
                        t += 1;
                    }
                    for d in 0..n {
                        if s[(d, d)].is_negative() {
                            s.negate_row(d);
                            u.negate_row(d);
                        }
                    }
                    continue 'chain;
                }
            }
        }
        break;
    }

    SnfResult { u, s, v }
}

/// Clear row and column `k` of `s` using the minimal-absolute-value pivot in
/// the trailing block. Returns false when the block is already zero.
fn pivot_step<T: IntegerScalar>(s: &mut Mat<T>, u: &mut Mat<T>, v: &mut Mat<T>, k: usize) -> bool {
    let rows = s.rows();
    let cols = s.cols();
    loop {
        let mut best: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if s[(i, j)].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if s[(i, j)].abs() < s[(bi, bj)].abs() {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = best else {
            return false;
        };
        s.swap_rows(k, pi);
        u.swap_rows(k, pi);
        s.swap_cols(k, pj);
        v.swap_cols(k, pj);

        let mut dirty = false;
        for i in k + 1..rows {
            if !s[(i, k)].is_zero() {
                let quot = quot_round(&s[(i, k)], &s[(k, k)]);
                if !quot.is_zero() {
                    let c = -quot;
                    s.add_row_multiple(i, k, &c);
                    u.add_row_multiple(i, k, &c);
                }
                if !s[(i, k)].is_zero() {
                    dirty = true;
                }
            }
        }
        for j in k + 1..cols {
            if !s[(k, j)].is_zero() {
                let quot = quot_round(&s[(k, j)], &s[(k, k)]);
                if !quot.is_zero() {
                    let c = -quot;
                    s.add_col_multiple(j, k, &c);
                    v.add_col_multiple(j, k, &c);
                }
                if !s[(k, j)].is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }
        return true;
    }
}

/// Truncated quotient; with min-abs pivoting this is enough for termination.
fn quot_round<T: IntegerScalar>(a: &T, b: &T) -> T {
    let (q, _r) = a.div_rem(b);
    q
}

// ---------------------------------------------------------------------------
// Rational <-> integer conversions.
// ---------------------------------------------------------------------------

impl Mat<Q> {
    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    pub fn to_integer(&self) -> Result<Mat<Z>, MatError> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self[(i, j)].is_integer() {
                    return Err(MatError::NotIntegral { row: i, col: j });
                }
            }
        }
        Ok(self.map(|e| e.to_integer()))
    }

    /// Scale by the lcm of all denominators; returns (integral matrix, lcm).
    pub fn clear_denominators(&self) -> (Mat<Z>, Z) {
        use num_integer::Integer;
        let mut lcm = Z::from(1);
        for e in &self.entries {
            lcm = lcm.lcm(e.denom());
        }
        let scaled = self.map(|e| {
            let v = e * Q::from_integer(lcm.clone());
            v.to_integer()
        });
        (scaled, lcm)
    }
}

impl Mat<Z> {
    pub fn to_rational(&self) -> Mat<Q> {
        self.map(|e| Q::from_integer(e.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use num_integer::Integer;
    use num_traits::{One, Signed};
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn zmat(rows: &[&[i64]]) -> Mat<Z> {
        Mat::from_int_rows(rows)
    }

    fn qmat(rows: &[&[i64]]) -> Mat<Q> {
        Mat::from_int_rows(rows)
    }

    fn check_snf(m: &Mat<Z>) {
        let r = snf(m);
        let umv = r.u.mul(m).unwrap().mul(&r.v).unwrap();
        assert_eq!(umv, r.s, "U M V != S for {:?}", m);
        assert!(r.u.to_rational().det().abs() == rat(1).abs(), "U not unimodular");
        assert!(r.v.to_rational().det().abs() == rat(1).abs(), "V not unimodular");
        let d = r.diagonal();
        for i in 0..d.len() {
            assert!(!d[i].is_negative(), "negative diagonal");
            if i + 1 < d.len() && !d[i].is_zero() && !d[i + 1].is_zero() {
                assert!(d[i + 1].is_multiple_of(&d[i]), "divisibility chain broken: {:?}", d);
            }
            if d[i].is_zero() && i + 1 < d.len() {
                assert!(d[i + 1].is_zero(), "zero before nonzero in diagonal");
            }
        }
        // Off-diagonal entries are zero.
        for i in 0..r.s.rows() {
            for j in 0..r.s.cols() {
                if i != j {
                    assert!(r.s[(i, j)].is_zero());
                }
            }
        }
    }

    #[test]
    fn snf_identity() {
        let m = Mat::<Z>::identity(3);
        let r = snf(&m);
        assert!(r.s.is_identity());
        check_snf(&m);
    }

    #[test]
    fn snf_zero() {
        let m = Mat::<Z>::zero(2, 2);
        let r = snf(&m);
        assert!(r.s.is_zero());
        check_snf(&m);
    }

    #[test]
    fn snf_2x2_example() {
        // gcd of entries is 2, |det| = 16 - 24 = 8, so diag(2, 4).
        let m = zmat(&[&[2, 4], &[6, 8]]);
        let r = snf(&m);
        assert_eq!(r.diagonal(), vec![Z::from(2), Z::from(4)]);
        check_snf(&m);
    }

    #[test]
    fn snf_random_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let rows = rng.gen_range(1..=6);
            let cols = rng.gen_range(1..=6);
            let m = Mat::<Z>::build(rows, cols, |_, _| Z::from(rng.gen_range(-9i64..=9)));
            check_snf(&m);
        }
    }

    #[test]
    fn snf_rank_matches_rational_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..40 {
            let rows = rng.gen_range(1..=5);
            let cols = rng.gen_range(1..=5);
            let m = Mat::<Z>::build(rows, cols, |_, _| Z::from(rng.gen_range(-9i64..=9)));
            assert_eq!(snf(&m).rank(), m.to_rational().rank());
        }
    }

    #[test]
    fn rank_kernel_examples() {
        let (rank, kernel) = Mat::<Q>::identity(4).rank_kernel();
        assert_eq!(rank, 4);
        assert!(kernel.is_empty());

        let (rank, kernel) = Mat::<Q>::zero(3, 2).rank_kernel();
        assert_eq!(rank, 0);
        assert_eq!(kernel.len(), 2);
        assert_eq!(kernel[0], vec![rat(1), rat(0)]);
        assert_eq!(kernel[1], vec![rat(0), rat(1)]);

        let m = qmat(&[&[1, 2], &[2, 4]]);
        let (rank, kernel) = m.rank_kernel();
        assert_eq!(rank, 1);
        assert_eq!(kernel.len(), 1);
        // Kernel is spanned by (2, -1); deterministic output is (-2, 1).
        let k = &kernel[0];
        assert!(m.mul_vec(k).unwrap().iter().all(|x| x.is_zero()));
        assert!(k[0].clone() * rat(1) == -(k[1].clone() * rat(2)));
    }

    #[test]
    fn rank_plus_kernel_is_cols() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..40 {
            let rows = rng.gen_range(1..=6);
            let cols = rng.gen_range(1..=6);
            let m = Mat::<Q>::build(rows, cols, |_, _| rat(rng.gen_range(-9i64..=9)));
            let (rank, kernel) = m.rank_kernel();
            assert_eq!(rank + kernel.len(), cols);
            for k in &kernel {
                assert!(m.mul_vec(k).unwrap().iter().all(|x| x.is_zero()));
            }
        }
    }

    #[test]
    fn solve_examples() {
        let id = Mat::<Q>::identity(3);
        let b = vec![rat(5), rat(-1), rat(7)];
        assert_eq!(id.solve(&b).unwrap().unwrap(), b);

        let m = qmat(&[&[1], &[0]]);
        assert_eq!(m.solve(&[rat(0), rat(1)]).unwrap(), None);

        let m = qmat(&[&[2, 0], &[0, 3]]);
        let x = m.solve(&[rat(1), rat(1)]).unwrap().unwrap();
        assert_eq!(x, vec![crate::scalar::ratio(1, 2), crate::scalar::ratio(1, 3)]);
    }

    #[test]
    fn solve_dimension_mismatch() {
        let m = qmat(&[&[1, 2]]);
        assert!(m.solve(&[rat(1), rat(2)]).is_err());
    }

    #[test]
    fn solve_then_multiply_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..40 {
            let rows = rng.gen_range(1..=5);
            let cols = rng.gen_range(1..=5);
            let m = Mat::<Q>::build(rows, cols, |_, _| rat(rng.gen_range(-5i64..=5)));
            let x: Vec<Q> = (0..cols).map(|_| rat(rng.gen_range(-5i64..=5))).collect();
            let b = m.mul_vec(&x).unwrap();
            let sol = m.solve(&b).unwrap().expect("constructed system is solvable");
            assert_eq!(m.mul_vec(&sol).unwrap(), b);
        }
    }

    #[test]
    fn inverse_and_det() {
        let m = qmat(&[&[2, 1], &[1, 1]]);
        assert!(m.det().is_one());
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert_eq!(qmat(&[&[1, 2], &[2, 4]]).inverse(), None);
    }

    #[test]
    fn column_space_preimages() {
        let m = qmat(&[&[1, 2, 0], &[0, 0, 1]]);
        let (basis, pre) = m.column_space_with_preimages();
        assert_eq!(basis.len(), 2);
        for (b, p) in basis.iter().zip(&pre) {
            assert_eq!(&m.mul_vec(p).unwrap(), b);
        }
    }
}
