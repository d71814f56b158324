//! Dense row-major matrices over an exact field.

use std::fmt;
use std::ops::{Index, IndexMut};

use rand::Rng;

use super::field::Field;
use super::poly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| F::from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Self {
        Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn random<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Self {
        Self::from_fn(rows, cols, |_, _| F::random(rng))
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

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = &self[(r, c)];
                    if r == c { x.is_one() } else { x.is_zero() }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * o.cols + j;
                    out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * s.clone()).collect(),
        }
    }

    pub fn add_scaled(&mut self, o: &Self, s: &F) {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            if !b.is_zero() {
                *a = a.clone() + b.clone() * s.clone();
            }
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| self[(rows[r], cols[c])].clone())
    }

    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows);
        Self::from_fn(self.rows, self.cols + o.cols, |r, c| {
            if c < self.cols { self[(r, c)].clone() } else { o[(r, c - self.cols)].clone() }
        })
    }

    pub fn vstack(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.cols);
        Self::from_fn(self.rows + o.rows, self.cols, |r, c| {
            if r < self.rows { self[(r, c)].clone() } else { o[(r - self.rows, c)].clone() }
        })
    }

    pub fn block_diag(blocks: &[Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self[(r0 + r, c0 + c)] = b[(r, c)].clone();
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].inv().unwrap();
            for c in col..m.cols {
                let v = m[(row, c)].clone();
                if !v.is_zero() {
                    m[(row, c)] = v * inv.clone();
                }
            }
            let pivot_row: Vec<F> = m.row(row)[col..].to_vec();
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m[(r, col)].clone();
                if f.is_zero() {
                    continue;
                }
                for (k, pv) in pivot_row.iter().enumerate() {
                    if !pv.is_zero() {
                        let idx = r * m.cols + col + k;
                        m.data[idx] = m.data[idx].clone() - f.clone() * pv.clone();
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : A v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![F::zero(); self.cols];
            v[f] = F::one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -r[(k, f)].clone();
            }
            out.push(v);
        }
        out
    }

    /// Kernel basis as the columns of a matrix.
    pub fn kernel_matrix(&self) -> Self {
        Self::from_columns(self.cols, &self.kernel())
    }

    /// Linearly independent columns spanning the column space.
    pub fn column_space(&self) -> Self {
        let (_, pivots) = self.rref();
        let all: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&all, &pivots)
    }

    /// A solution of `A x = b`, if one exists.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hstack(&Self::from_columns(self.rows, &[b.to_vec()]));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = r[(k, self.cols)].clone();
        }
        Some(x)
    }

    /// A solution of `A X = B`, if one exists.
    pub fn solve_matrix(&self, b: &Self) -> Option<Self> {
        assert_eq!(b.rows, self.rows);
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(self.cols, b.cols);
        for (k, &p) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x[(p, c)] = r[(k, self.cols + c)].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let (r, pivots) = self.hstack(&Self::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let rows: Vec<usize> = (0..n).collect();
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(r.submatrix(&rows, &cols))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn det(&self) -> F {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = m.rows;
        let mut det = F::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return F::zero();
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pv = m[(col, col)].clone();
            det = det * pv.clone();
            let inv = pv.inv().unwrap();
            for r in col + 1..n {
                let f = m[(r, col)].clone() * inv.clone();
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m[(col, c)].clone();
                    m[(r, c)] = m[(r, c)].clone() - f.clone() * v;
                }
            }
        }
        det
    }

    /// Characteristic polynomial `det(xI - A)` by Hessenberg reduction.
    pub fn charpoly(&self) -> Vec<F> {
        assert!(self.is_square());
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h[(i, m - 1)].is_zero()) else {
                continue;
            };
            if i != m {
                h.swap_rows(i, m);
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + m);
                }
            }
            let t_inv = h[(m, m - 1)].inv().unwrap();
            for i in m + 1..n {
                let u = h[(i, m - 1)].clone() * t_inv.clone();
                if u.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = h[(m, j)].clone();
                    h[(i, j)] = h[(i, j)].clone() - u.clone() * v;
                }
                for j in 0..n {
                    let v = h[(j, i)].clone();
                    h[(j, m)] = h[(j, m)].clone() + u.clone() * v;
                }
            }
        }
        let mut p: Vec<Vec<F>> = vec![vec![F::one()]];
        for m in 0..n {
            let mut next = poly::mul(&[-h[(m, m)].clone(), F::one()], &p[m]);
            let mut t = F::one();
            for i in (0..m).rev() {
                t = t * h[(i + 1, i)].clone();
                let c = h[(i, m)].clone() * t.clone();
                if !c.is_zero() {
                    let term: Vec<F> = p[i].iter().map(|x| x.clone() * c.clone()).collect();
                    next = poly::sub(&next, &term);
                }
            }
            let mut next = next;
            next.resize(m + 2, F::zero());
            p.push(next);
        }
        p.pop().unwrap()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows as u64).is_zero()
    }
}

/// Incremental row reduction, for linear systems assembled one equation at a time.
#[derive(Clone, Debug)]
pub struct RowEchelon<F> {
    n: usize,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> RowEchelon<F> {
    pub fn new(n: usize) -> Self {
        RowEchelon { n, rows: Vec::new() }
    }

    /// Adds a row; returns whether the rank grew.
    pub fn push(&mut self, mut v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.n);
        for (p, r) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for k in *p..self.n {
                if !r[k].is_zero() {
                    v[k] = v[k].clone() - f.clone() * r[k].clone();
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().unwrap();
        for x in v.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn push_sparse(&mut self, entries: &[(usize, F)]) -> bool {
        if entries.iter().all(|(_, c)| c.is_zero()) {
            return false;
        }
        let mut v = vec![F::zero(); self.n];
        for (i, c) in entries {
            v[*i] = v[*i].clone() + c.clone();
        }
        self.push(v)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    pub fn matrix(&self) -> Matrix<F> {
        if self.rows.is_empty() {
            return Matrix::zeros(0, self.n);
        }
        Matrix::from_rows(self.rows.iter().map(|(_, r)| r.clone()).collect())
    }

    pub fn kernel(&self) -> Vec<Vec<F>> {
        if self.rows.is_empty() {
            return (0..self.n)
                .map(|i| {
                    let mut v = vec![F::zero(); self.n];
                    v[i] = F::one();
                    v
                })
                .collect();
        }
        self.matrix().kernel()
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.data[r * self.cols..(r + 1) * self.cols]
                .iter()
                .map(|x| format!("{:?}", x))
                .collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::{Field, Rational, F5};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type Q = Rational;

    #[test]
    fn inverse_and_det() {
        let a = Matrix::<Q>::from_i64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.det(), Q::from_i64(18));
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        let sing = Matrix::<Q>::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
        assert_eq!(sing.rank(), 1);
        assert_eq!(sing.kernel().len(), 1);
    }

    #[test]
    fn charpoly_known() {
        // Kronecker Coxeter matrix [[3,-2],[2,-1]]: (x - 1)^2
        let c = Matrix::<Q>::from_i64(&[&[3, -2], &[2, -1]]);
        let p = c.charpoly();
        assert_eq!(p, vec![Q::from_i64(1), Q::from_i64(-2), Q::from_i64(1)]);
    }

    #[test]
    fn solve_inconsistent() {
        let a = Matrix::<Q>::from_i64(&[&[1, 1], &[1, 1]]);
        assert!(a.solve(&[Q::from_i64(1), Q::from_i64(2)]).is_none());
        let x = a.solve(&[Q::from_i64(3), Q::from_i64(3)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![Q::from_i64(3), Q::from_i64(3)]);
    }

    /// Cayley-Hamilton and det = (-1)^n p(0), checked against cofactor-free elimination.
    fn check_charpoly<F: Field>(a: &Matrix<F>) {
        let n = a.rows();
        let p = a.charpoly();
        assert_eq!(p.len(), n + 1);
        let mut acc = Matrix::<F>::zeros(n, n);
        let mut pw = Matrix::<F>::identity(n);
        for c in &p {
            acc.add_scaled(&pw, c);
            pw = pw.mul(a);
        }
        assert!(acc.is_zero());
        let sign = if n.is_multiple_of(2) { F::one() } else { -F::one() };
        assert_eq!(p[0].clone() * sign, a.det());
    }

    proptest! {
        #[test]
        fn rank_nullity(seed in any::<u64>(), r in 1usize..6, c in 1usize..6) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = Matrix::<F5>::random(r, c, &mut rng);
            let k = a.kernel();
            prop_assert_eq!(a.rank() + k.len(), c);
            for v in &k {
                prop_assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
            }
        }

        #[test]
        fn charpoly_cayley_hamilton(seed in any::<u64>(), n in 1usize..6) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            check_charpoly(&Matrix::<F5>::random(n, n, &mut rng));
            let q = Matrix::<Q>::from_fn(n, n, |_, _| Q::from_i64(rand::Rng::gen_range(&mut rng, -3..4)));
            check_charpoly(&q);
        }
    }
}
