//! Dense exact linear algebra over a [`Scalar`] field.
//!
//! Matrices act on column vectors: column `j` holds the image of basis
//! vector `j`.

use std::fmt;

use num_traits::Zero;

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: fmt::Display> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &self.data)
            .finish()
    }
}

impl<S> std::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (r, c): (usize, usize)) -> &S {
        &self.data[r * self.cols + c]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut S {
        &mut self.data[r * self.cols + c]
    }
}

impl<S: Scalar> Matrix<S> {
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

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Build from columns, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Self {
        assert!(columns.iter().all(|c| c.len() == rows), "ragged columns");
        Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<S>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, k: &S) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * k).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b)
                .collect(),
        }
    }

    /// `self - k * I`.
    pub fn sub_scalar(&self, k: &S) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        for i in 0..self.rows {
            m[(i, i)] = m[(i, i)].clone() - k;
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] = out[(r, c)].clone() + a.clone() * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = S::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a.clone() * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// First `(row, col)` where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        (0..self.cols)
            .flat_map(|c| (0..self.rows).map(move |r| (r, c)))
            .find(|&(r, c)| self[(r, c)] != other[(r, c)])
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow == m.rows {
                break;
            }
            // cheapest nonzero pivot in this column
            let Some(best) = (prow..m.rows)
                .filter(|&r| !m[(r, col)].is_zero())
                .min_by_key(|&r| m[(r, col)].complexity())
            else {
                continue;
            };
            m.swap_rows(prow, best);
            let inv = m[(prow, col)].try_inv().expect("nonzero pivot");
            for c in col..m.cols {
                m[(prow, c)] = m[(prow, c)].clone() * &inv;
            }
            for r in 0..m.rows {
                if r == prow || m[(r, col)].is_zero() {
                    continue;
                }
                let f = m[(r, col)].clone();
                for c in col..m.cols {
                    if !m[(prow, c)].is_zero() {
                        m[(r, c)] = m[(r, c)].clone() - f.clone() * &m[(prow, c)];
                    }
                }
            }
            pivots.push(col);
            prow += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        // eliminate along the shorter side
        if self.cols > self.rows {
            return self.transpose().rank();
        }
        let mut sub = Subspace::new(self.rows);
        for c in 0..self.cols {
            sub.insert(self.column(c));
        }
        sub.dim()
    }

    /// Basis of the null space.
    pub fn kernel(&self) -> Vec<Vec<S>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero(); self.cols];
                v[f] = S::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Independent columns spanning the column space, in original order.
    pub fn column_space(&self) -> Vec<Vec<S>> {
        let mut sub = Subspace::new(self.rows);
        let mut out = Vec::new();
        for c in 0..self.cols {
            let col = self.column(c);
            if sub.insert(col.clone()) {
                out.push(col);
            }
        }
        out
    }

    /// Solve `self * X = rhs` when `self` has full column rank. `None` if the
    /// system is inconsistent.
    pub fn solve(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows);
        let aug = Self::from_fn(self.rows, self.cols + rhs.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                rhs[(r, c - self.cols)].clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() != self.cols || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        for r in self.cols..self.rows {
            if (0..rhs.cols).any(|c| !red[(r, self.cols + c)].is_zero()) {
                return None;
            }
        }
        Some(Self::from_fn(self.cols, rhs.cols, |r, c| {
            red[(r, self.cols + c)].clone()
        }))
    }

    /// Entries as canonical strings, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(ToString::to_string).collect())
            .collect()
    }
}

/// An incrementally grown subspace of `S^dim`, kept in reduced echelon form.
#[derive(Clone, Debug)]
pub struct Subspace<S> {
    dim: usize,
    rows: Vec<(usize, Vec<S>)>,
}

impl<S: Scalar> Subspace<S> {
    pub fn new(dim: usize) -> Self {
        Subspace {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn spanned_by<I: IntoIterator<Item = Vec<S>>>(dim: usize, vectors: I) -> Self {
        let mut s = Self::new(dim);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after eliminating against the stored rows.
    pub fn reduce(&self, mut v: Vec<S>) -> Vec<S> {
        assert_eq!(v.len(), self.dim);
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    /// Add `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<S>) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = (0..self.dim)
            .filter(|&i| !r[i].is_zero())
            .min_by_key(|&i| r[i].complexity())
        else {
            return false;
        };
        let inv = r[p].try_inv().expect("nonzero pivot");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * &inv;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y;
                }
            }
        }
        self.rows.push((p, r));
        true
    }

    /// Echelon basis vectors.
    pub fn basis(&self) -> Vec<Vec<S>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    pub fn contains_subspace(&self, other: &Subspace<S>) -> bool {
        other.rows.iter().all(|(_, r)| self.contains(r))
    }

    pub fn same_as(&self, other: &Subspace<S>) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }

    /// Whether `m` (square, ambient-sized) maps the subspace into itself.
    pub fn is_invariant_under(&self, m: &Matrix<S>) -> bool {
        self.rows.iter().all(|(_, r)| self.contains(&m.mul_vec(r)))
    }

    /// Smallest subspace containing `self` and stable under every matrix.
    pub fn closure_under(&self, gens: &[&Matrix<S>]) -> Subspace<S> {
        let mut out = self.clone();
        let mut frontier = self.basis();
        while let Some(v) = frontier.pop() {
            for g in gens {
                let w = g.mul_vec(&v);
                if out.insert(w.clone()) {
                    frontier.push(w);
                }
            }
            if out.dim() == self.dim {
                break;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::RationalFunction as R;
    use num_traits::One;

    fn int(rows: &[&[i64]]) -> Matrix<R> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| R::from_integer(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_kernel() {
        let m = int(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn solve_full_column_rank() {
        let a = int(&[&[1, 0], &[1, 1], &[0, 1]]);
        let b = int(&[&[2], &[5], &[3]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(x, int(&[&[2], &[3]]));
        assert!(a.solve(&int(&[&[1], &[0], &[0]])).is_none());
    }

    #[test]
    fn subspace_closure() {
        // shift operator e0 -> e1 -> e2 -> 0
        let s = int(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        let start = Subspace::spanned_by(3, [vec![R::one(), R::zero(), R::zero()]]);
        assert_eq!(start.closure_under(&[&s]).dim(), 3);
        let tail = Subspace::spanned_by(3, [vec![R::zero(), R::zero(), R::one()]]);
        assert_eq!(tail.closure_under(&[&s]).dim(), 1);
        assert!(tail.is_invariant_under(&s));
    }
}
