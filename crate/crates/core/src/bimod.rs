//! Bimodule elements over triangular algebras `A = k[W]A2`.
//!
//! The triangular algebra is a basic algebra `A` with Peirce data together with
//! a vertex `e` such that `eAe = k` and `(1-e)Ae = 0`. Then `A2 = (1-e)A(1-e)`,
//! `W = eA(1-e)` and `W f_j = e A f_j` for the other vertices `j`.
//!
//! A shape is a multiplicity vector over the vertices of `A`: `P1 = k^{c_e}` and
//! `P2 = ⊕_{j != e} (A2 f_j)^{c_j}`. An element is a linear map
//! `W ⊗ P2 = ⊕ (W f_j)^{c_j} -> P1`, stored as a `c_e x cols` matrix whose
//! columns run over `(j, copy, basis of W f_j)` with `j` ascending.

use std::collections::HashMap;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactalg::matrix::RowEchelon;
use crate::exactalg::module::hom_space;
use crate::exactalg::{Field, Matrix, SCAlgebra, SCModule};
use crate::quiver::{PathAlgebra, Quiver};

#[derive(Clone, Debug)]
pub struct TriangularAlgebra<F> {
    alg: Arc<SCAlgebra<F>>,
    e: usize,
    /// Basis of `W f_j`, per vertex (empty at `e`).
    w_basis: Vec<Vec<usize>>,
    /// Basis of `A2 f_j`, per vertex (empty at `e`).
    p2_basis: Vec<Vec<usize>>,
}

/// `eAe = k` and `(1-e)Ae = 0` for the vertex `e`.
pub fn is_split_vertex<F: Field>(alg: &SCAlgebra<F>, e: usize) -> bool {
    alg.peirce().is_some()
        && alg.block(e, e).len() == 1
        && (0..alg.num_vertices()).all(|i| i == e || alg.block(i, e).is_empty())
}

impl<F: Field> TriangularAlgebra<F> {
    pub fn new(alg: Arc<SCAlgebra<F>>, e: usize) -> Result<Self> {
        if alg.peirce().is_none() {
            return Err(Error::InvalidAlgebra("triangular data needs Peirce idempotents".into()));
        }
        if e >= alg.num_vertices() {
            return Err(Error::InvalidAlgebra(format!("vertex {e} out of range")));
        }
        if !is_split_vertex(&alg, e) {
            return Err(Error::InvalidAlgebra(format!("vertex {e} does not satisfy eAe = k, (1-e)Ae = 0")));
        }
        let n = alg.num_vertices();
        let mut w_basis = vec![Vec::new(); n];
        let mut p2_basis = vec![Vec::new(); n];
        for b in 0..alg.dim() {
            let (l, r) = alg.block_of(b);
            if r == e {
                continue;
            }
            if l == e {
                w_basis[r].push(b);
            } else {
                p2_basis[r].push(b);
            }
        }
        Ok(TriangularAlgebra { alg, e, w_basis, p2_basis })
    }

    /// The path algebra with `e` the lowest-numbered sink.
    pub fn from_quiver(q: &Quiver) -> Result<Self> {
        let pa = PathAlgebra::<F>::new(q)?;
        let e = q.sinks()[0];
        Self::new(pa.algebra, e)
    }

    /// Built-in aliases: `t2`, `t3`, `kronecker`, `a2tilde`, `d4tilde` and
    /// the other named quivers.
    pub fn named(name: &str) -> Result<Self> {
        let q = Quiver::named(name).ok_or_else(|| Error::InvalidQuiver(format!("unknown algebra alias {name:?}")))?;
        Self::from_quiver(&q)
    }

    pub fn algebra(&self) -> &Arc<SCAlgebra<F>> {
        &self.alg
    }

    pub fn split_vertex(&self) -> usize {
        self.e
    }

    pub fn num_vertices(&self) -> usize {
        self.alg.num_vertices()
    }

    pub fn w_dim(&self, j: usize) -> usize {
        self.w_basis[j].len()
    }

    /// Columns of an element: `dim W ⊗ P2`.
    pub fn columns(&self, shape: &[usize]) -> usize {
        (0..self.num_vertices()).filter(|&j| j != self.e).map(|j| shape[j] * self.w_basis[j].len()).sum()
    }

    /// `dim ldW(P2, P1)`.
    pub fn element_space_dim(&self, shape: &[usize]) -> usize {
        shape[self.e] * self.columns(shape)
    }

    fn check_shape(&self, shape: &[usize]) -> Result<()> {
        if shape.len() != self.num_vertices() {
            return Err(Error::DimensionMismatch(format!(
                "shape has {} entries for {} vertices",
                shape.len(),
                self.num_vertices()
            )));
        }
        Ok(())
    }

    fn col_offsets(&self, shape: &[usize]) -> Vec<usize> {
        let mut off = vec![0; self.num_vertices() + 1];
        for j in 0..self.num_vertices() {
            let w = if j == self.e { 0 } else { shape[j] * self.w_basis[j].len() };
            off[j + 1] = off[j] + w;
        }
        off
    }

    fn p2_offsets(&self, shape: &[usize]) -> Vec<usize> {
        let mut off = vec![shape[self.e]; self.num_vertices() + 1];
        for j in 0..self.num_vertices() {
            let w = if j == self.e { 0 } else { shape[j] * self.p2_basis[j].len() };
            off[j + 1] = off[j] + w;
        }
        off
    }

    /// `dim Hom_{A2}(P2, P2')`.
    pub fn p2_hom_dim(&self, shape: &[usize], shape2: &[usize]) -> usize {
        let n = self.num_vertices();
        let mut d = 0;
        for j in (0..n).filter(|&j| j != self.e) {
            for i in (0..n).filter(|&i| i != self.e) {
                d += shape[j] * shape2[i] * self.alg.block(j, i).len();
            }
        }
        d
    }

    /// Unknowns of `Hom_{A2}(P2, P2')`: `(j, r, i, s, x)` meaning
    /// `f_j` of copy `r` goes to `x f_i` of copy `s`, `x ∈ f_j A f_i`.
    fn p2_hom_labels(&self, shape: &[usize], shape2: &[usize]) -> Vec<(usize, usize, usize, usize, usize)> {
        let n = self.num_vertices();
        let mut out = Vec::new();
        for j in (0..n).filter(|&j| j != self.e) {
            for r in 0..shape[j] {
                for i in (0..n).filter(|&i| i != self.e) {
                    for s in 0..shape2[i] {
                        for x in self.alg.block(j, i) {
                            out.push((j, r, i, s, x));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn zero_element(&self, shape: &[usize]) -> Result<BimoduleElement<F>> {
        self.check_shape(shape)?;
        Ok(BimoduleElement { shape: shape.to_vec(), data: Matrix::zeros(shape[self.e], self.columns(shape)) })
    }

    pub fn element(&self, shape: &[usize], data: Matrix<F>) -> Result<BimoduleElement<F>> {
        self.check_shape(shape)?;
        if data.rows() != shape[self.e] || data.cols() != self.columns(shape) {
            return Err(Error::DimensionMismatch(format!(
                "element matrix is {}x{}, shape needs {}x{}",
                data.rows(),
                data.cols(),
                shape[self.e],
                self.columns(shape)
            )));
        }
        Ok(BimoduleElement { shape: shape.to_vec(), data })
    }

    pub fn random_element<R: Rng + ?Sized>(&self, shape: &[usize], rng: &mut R) -> Result<BimoduleElement<F>> {
        self.check_shape(shape)?;
        Ok(BimoduleElement {
            shape: shape.to_vec(),
            data: Matrix::random(shape[self.e], self.columns(shape), rng),
        })
    }

    /// Labels of the basis of `M(w)`: `None` for the `P1` part, else `(j, copy, b)`.
    pub fn module_labels(&self, shape: &[usize]) -> Vec<Option<(usize, usize, usize)>> {
        let mut out = vec![None; shape[self.e]];
        for j in (0..self.num_vertices()).filter(|&j| j != self.e) {
            for r in 0..shape[j] {
                out.extend(self.p2_basis[j].iter().map(|&b| Some((j, r, b))));
            }
        }
        out
    }

    /// The module `M(w) = (P1, w, P2)`: first `P1`, then each copy of `A2 f_j`.
    pub fn to_module(&self, w: &BimoduleElement<F>) -> SCModule<F> {
        let shape = &w.shape;
        let labels = self.module_labels(shape);
        let d = labels.len();
        let p1 = shape[self.e];
        let coff = self.col_offsets(shape);
        let poff = self.p2_offsets(shape);
        let ppos = |j: usize, r: usize, b: usize| -> usize {
            poff[j] + r * self.p2_basis[j].len() + self.p2_basis[j].iter().position(|&x| x == b).unwrap()
        };
        let wpos = |j: usize, r: usize, y: usize| -> usize {
            coff[j] + r * self.w_basis[j].len() + self.w_basis[j].iter().position(|&x| x == y).unwrap()
        };
        let e_idem = self.alg.idempotent(self.e);
        let action = (0..self.alg.dim())
            .map(|x| {
                let mut m = Matrix::zeros(d, d);
                if x == e_idem {
                    for i in 0..p1 {
                        m[(i, i)] = F::one();
                    }
                }
                for (col, lab) in labels.iter().enumerate() {
                    let Some((j, r, b)) = *lab else { continue };
                    for (k, c) in self.alg.product(x, b) {
                        if self.alg.block_of(*k).0 == self.e {
                            let wc = wpos(j, r, *k);
                            for row in 0..p1 {
                                let v = c.clone() * w.data[(row, wc)].clone();
                                m[(row, col)] = m[(row, col)].clone() + v;
                            }
                        } else {
                            let row = ppos(j, r, *k);
                            m[(row, col)] = m[(row, col)].clone() + c.clone();
                        }
                    }
                }
                m
            })
            .collect();
        SCModule::new_unchecked(self.alg.clone(), d, action).unwrap()
    }

    /// Matrix of `1 ⊗ α2: W ⊗ P2 -> W ⊗ P2'` for `α2` in the coordinates of
    /// the labels of `Hom_{A2}(P2, P2')`.
    fn tensor_matrix(&self, shape: &[usize], shape2: &[usize], alpha2: &[F]) -> Matrix<F> {
        let labels = self.p2_hom_labels(shape, shape2);
        let (c1, c2) = (self.col_offsets(shape), self.col_offsets(shape2));
        let mut t = Matrix::<F>::zeros(self.columns(shape2), self.columns(shape));
        for (u, &(j, r, i, s, x)) in labels.iter().enumerate() {
            let a = &alpha2[u];
            if a.is_zero() {
                continue;
            }
            for (yi, &y) in self.w_basis[j].iter().enumerate() {
                let col = c1[j] + r * self.w_basis[j].len() + yi;
                for (k, c) in self.alg.product(y, x) {
                    let ki = self.w_basis[i].iter().position(|z| z == k).unwrap();
                    let row = c2[i] + s * self.w_basis[i].len() + ki;
                    t[(row, col)] = t[(row, col)].clone() + a.clone() * c.clone();
                }
            }
        }
        t
    }

    /// The map `δ(α1, α2) = α1 w - w' (1 ⊗ α2)` whose kernel is `Hom_W(w, w')`
    /// and whose cokernel is `Ext^1(M(w), M(w'))`. Columns: `α1` entries
    /// row-major, then the `α2` labels.
    pub fn delta_map(&self, w: &BimoduleElement<F>, w2: &BimoduleElement<F>) -> Matrix<F> {
        let (p1, q1) = (w.shape[self.e], w2.shape[self.e]);
        let cols = self.columns(&w.shape);
        let labels = self.p2_hom_labels(&w.shape, &w2.shape);
        let unknowns = q1 * p1 + labels.len();
        let mut delta = Matrix::zeros(q1 * cols, unknowns);
        // α1 w: entry (ρ, c) = sum_σ α1[ρ, σ] w[σ, c]
        for rho in 0..q1 {
            for c in 0..cols {
                for sigma in 0..p1 {
                    delta[(rho * cols + c, rho * p1 + sigma)] = w.data[(sigma, c)].clone();
                }
            }
        }
        for u in 0..labels.len() {
            let mut unit = vec![F::zero(); labels.len()];
            unit[u] = F::one();
            let t = self.tensor_matrix(&w.shape, &w2.shape, &unit);
            let img = w2.data.mul(&t);
            for rho in 0..q1 {
                for c in 0..cols {
                    let v = &img[(rho, c)];
                    if !v.is_zero() {
                        delta[(rho * cols + c, q1 * p1 + u)] = -v.clone();
                    }
                }
            }
        }
        delta
    }

    /// Basis of `Hom_W(w, w')`.
    pub fn hom_w(&self, w: &BimoduleElement<F>, w2: &BimoduleElement<F>) -> Result<Vec<WMorphism<F>>> {
        self.check_shape(&w.shape)?;
        self.check_shape(&w2.shape)?;
        let (p1, q1) = (w.shape[self.e], w2.shape[self.e]);
        let delta = self.delta_map(w, w2);
        Ok(delta
            .kernel()
            .into_iter()
            .map(|v| WMorphism {
                alpha1: Matrix::from_vec(q1, p1, v[..q1 * p1].to_vec()),
                alpha2: v[q1 * p1..].to_vec(),
            })
            .collect())
    }

    /// `(dim Hom_W(w, w'), dim Ext^1(M(w), M(w')))` from the standard resolution.
    pub fn hom_ext(&self, w: &BimoduleElement<F>, w2: &BimoduleElement<F>) -> (usize, usize) {
        let delta = self.delta_map(w, w2);
        let r = delta.rank();
        (delta.cols() - r, delta.rows() - r)
    }

    /// The Tits form of the bimodule on the classes of two shapes.
    pub fn bimodule_dims(&self, shape: &[usize], shape2: &[usize]) -> crate::forms::BimoduleDims {
        crate::forms::BimoduleDims {
            hom1: (shape[self.e] * shape2[self.e]) as u64,
            hom2: self.p2_hom_dim(shape, shape2) as u64,
            w: (shape2[self.e] * self.columns(shape)) as u64,
        }
    }

    /// The module map `M(w) -> M(w')` of a morphism pair.
    pub fn module_map(&self, shape: &[usize], shape2: &[usize], f: &WMorphism<F>) -> Matrix<F> {
        let l1 = self.module_labels(shape);
        let l2 = self.module_labels(shape2);
        let pos2: HashMap<(usize, usize, usize), usize> =
            l2.iter().enumerate().filter_map(|(k, l)| l.map(|t| (t, k))).collect();
        let mut m = Matrix::zeros(l2.len(), l1.len());
        m.set_block(0, 0, &f.alpha1);
        let labels = self.p2_hom_labels(shape, shape2);
        for (u, &(j, r, i, s, x)) in labels.iter().enumerate() {
            let a = &f.alpha2[u];
            if a.is_zero() {
                continue;
            }
            for &b in &self.p2_basis[j] {
                let col = l1.iter().position(|l| *l == Some((j, r, b))).unwrap();
                for (k, c) in self.alg.product(b, x) {
                    let row = pos2[&(i, s, *k)];
                    m[(row, col)] = m[(row, col)].clone() + a.clone() * c.clone();
                }
            }
        }
        m
    }

    /// Reads a module whose restriction to `A2` is projective back as an
    /// element. Returns the element and an isomorphism `M(w) -> n`.
    pub fn from_module(&self, n0: &SCModule<F>) -> Result<(BimoduleElement<F>, Matrix<F>)> {
        let (n, regrade) = n0.graded()?;
        let n = &n;
        let nv = self.num_vertices();
        let e_part = n.vertex_basis(self.e);
        // radical of A2 applied to N
        let rad: Vec<usize> = (0..self.alg.dim())
            .filter(|&x| {
                let (l, r) = self.alg.block_of(x);
                l != self.e && r != self.e && x != self.alg.idempotent(l)
            })
            .collect();
        let mut gens: Vec<Vec<Vec<F>>> = vec![Vec::new(); nv];
        for j in (0..nv).filter(|&j| j != self.e) {
            let basis = n.vertex_basis(j);
            let mut ech = RowEchelon::new(basis.len());
            for &x in &rad {
                if self.alg.block_of(x).0 != j {
                    continue;
                }
                let act = n.action(x);
                for c in 0..n.dim() {
                    let v: Vec<F> = basis.iter().map(|&r| act[(r, c)].clone()).collect();
                    ech.push(v);
                }
            }
            for k in 0..basis.len() {
                let mut unit = vec![F::zero(); basis.len()];
                unit[k] = F::one();
                if ech.push(unit.clone()) {
                    let mut full = vec![F::zero(); n.dim()];
                    full[basis[k]] = F::one();
                    gens[j].push(full);
                }
            }
        }
        let mut shape = vec![0; nv];
        shape[self.e] = e_part.len();
        for j in (0..nv).filter(|&j| j != self.e) {
            shape[j] = gens[j].len();
        }
        // element matrix: y · g_{j,r} read on the e-part
        let cols = self.columns(&shape);
        let coff = self.col_offsets(&shape);
        let mut data = Matrix::zeros(shape[self.e], cols);
        for j in (0..nv).filter(|&j| j != self.e) {
            for (r, gv) in gens[j].iter().enumerate() {
                for (yi, &y) in self.w_basis[j].iter().enumerate() {
                    let img = n.action(y).mul_vec(gv);
                    for (row, &b) in e_part.iter().enumerate() {
                        data[(row, coff[j] + r * self.w_basis[j].len() + yi)] = img[b].clone();
                    }
                }
            }
        }
        let w = BimoduleElement { shape: shape.clone(), data };
        let labels = self.module_labels(&shape);
        if labels.len() != n.dim() {
            return Err(Error::NotInModP("the restriction to A2 is not projective".into()));
        }
        let mut iso = Matrix::zeros(n.dim(), labels.len());
        for (col, lab) in labels.iter().enumerate() {
            match *lab {
                None => iso[(e_part[col], col)] = F::one(),
                Some((j, r, b)) => {
                    let img = n.action(b).mul_vec(&gens[j][r]);
                    for (row, v) in img.into_iter().enumerate() {
                        iso[(row, col)] = v;
                    }
                }
            }
        }
        if !iso.is_invertible() {
            return Err(Error::NotInModP("the restriction to A2 is not projective".into()));
        }
        let m = self.to_module(&w);
        if !m.is_hom(n, &iso) {
            return Err(Error::Internal("reconstructed element does not match the module".into()));
        }
        Ok((w, regrade.mul(&iso)))
    }

    pub fn direct_sum(&self, a: &BimoduleElement<F>, b: &BimoduleElement<F>) -> BimoduleElement<F> {
        let nv = self.num_vertices();
        let shape: Vec<usize> = (0..nv).map(|i| a.shape[i] + b.shape[i]).collect();
        let mut data = Matrix::zeros(shape[self.e], self.columns(&shape));
        let (oa, ob, os) = (self.col_offsets(&a.shape), self.col_offsets(&b.shape), self.col_offsets(&shape));
        let pa = a.shape[self.e];
        for j in (0..nv).filter(|&j| j != self.e) {
            let wj = self.w_basis[j].len();
            for c in 0..a.shape[j] * wj {
                for r in 0..pa {
                    data[(r, os[j] + c)] = a.data[(r, oa[j] + c)].clone();
                }
            }
            for c in 0..b.shape[j] * wj {
                for r in 0..b.shape[self.e] {
                    data[(pa + r, os[j] + a.shape[j] * wj + c)] = b.data[(r, ob[j] + c)].clone();
                }
            }
        }
        BimoduleElement { shape, data }
    }

    /// Splits `w` along an idempotent endomorphism; returns the two summands
    /// with isomorphisms `M(w_i) -> M(w)` onto the image and kernel of `p`.
    #[allow(clippy::type_complexity)]
    pub fn split(
        &self,
        w: &BimoduleElement<F>,
        p: &WMorphism<F>,
    ) -> Result<((BimoduleElement<F>, Matrix<F>), (BimoduleElement<F>, Matrix<F>))> {
        let m = self.to_module(w);
        let pm = self.module_map(&w.shape, &w.shape, p);
        if pm.mul(&pm) != pm {
            return Err(Error::NotIdempotent);
        }
        let q = Matrix::identity(m.dim()).sub(&pm);
        let piece = |f: &Matrix<F>| -> Result<(BimoduleElement<F>, Matrix<F>)> {
            let basis = graded_image(&m, f);
            let sub = m.submodule(&basis)?;
            let (el, iso) = self.from_module(&sub)?;
            Ok((el, basis.mul(&iso)))
        };
        Ok((piece(&pm)?, piece(&q)?))
    }

    /// `g·w = g1 w (1 ⊗ g2)^{-1}` for an automorphism `(g1, g2)` of `(P1, P2)`.
    pub fn act(&self, w: &BimoduleElement<F>, g1: &Matrix<F>, g2: &[F]) -> Result<BimoduleElement<F>> {
        let t = self.tensor_matrix(&w.shape, &w.shape, g2);
        let tinv = t.inverse().ok_or_else(|| Error::InvalidModule("group element is singular".into()))?;
        Ok(BimoduleElement { shape: w.shape.clone(), data: g1.mul(&w.data).mul(&tinv) })
    }

    /// A random element of `GL(P1) x Aut_{A2}(P2)` as `(g1, g2)`.
    pub fn random_group_element<R: Rng + ?Sized>(&self, shape: &[usize], rng: &mut R) -> (Matrix<F>, Vec<F>) {
        let labels = self.p2_hom_labels(shape, shape).len();
        loop {
            let g1 = Matrix::random(shape[self.e], shape[self.e], rng);
            let g2: Vec<F> = (0..labels).map(|_| F::random(rng)).collect();
            if g1.is_invertible() && self.tensor_matrix(shape, shape, &g2).is_invertible() {
                return (g1, g2);
            }
        }
    }

    /// The two-term resolution `0 -> Q1 -> Q0 -> M(w) -> 0` at module level.
    pub fn standard_resolution(&self, w: &BimoduleElement<F>) -> Result<StandardResolution<F>> {
        let cols = self.columns(&w.shape);
        let p1 = w.shape[self.e];
        let e_idem = self.alg.idempotent(self.e);
        let simple_power = |k: usize| -> SCModule<F> {
            let action = (0..self.alg.dim())
                .map(|x| if x == e_idem { Matrix::identity(k) } else { Matrix::zeros(k, k) })
                .collect();
            SCModule::new_unchecked(self.alg.clone(), k, action).unwrap()
        };
        let q1 = simple_power(cols);
        let mut ushape = w.shape.clone();
        ushape[self.e] = cols;
        let universal = BimoduleElement { shape: ushape, data: Matrix::identity(cols) };
        let (q0, _) = SCModule::direct_sum(&[simple_power(p1), self.to_module(&universal)])?;
        let m = self.to_module(w);
        let d0 = q0.dim();
        let mut d = Matrix::zeros(d0, cols);
        d.set_block(0, 0, &w.data);
        d.set_block(p1, 0, &Matrix::identity(cols).neg());
        let mut eps = Matrix::zeros(m.dim(), d0);
        eps.set_block(0, 0, &Matrix::identity(p1));
        eps.set_block(0, p1, &w.data);
        let rest = m.dim() - p1;
        eps.set_block(p1, p1 + cols, &Matrix::identity(rest));
        let res = StandardResolution { q1, q0, d, eps, module: m };
        res.verify()?;
        Ok(res)
    }
}

/// Columns spanning the image of `f`, chosen vertex by vertex so the
/// submodule stays graded.
fn graded_image<F: Field>(m: &SCModule<F>, f: &Matrix<F>) -> Matrix<F> {
    let mut cols = Vec::new();
    for v in 0..m.algebra().num_vertices() {
        let idx = m.vertex_basis(v);
        let block = f.submatrix(&(0..f.rows()).collect::<Vec<_>>(), &idx);
        let sp = block.column_space();
        for c in 0..sp.cols() {
            cols.push(sp.column(c));
        }
    }
    Matrix::from_columns(m.dim(), &cols)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleElement<F> {
    pub shape: Vec<usize>,
    pub data: Matrix<F>,
}

/// A morphism pair `(α1, α2)`; `α2` in the coordinates of
/// `Hom_{A2}(P2, P2')` used by [`TriangularAlgebra::hom_w`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WMorphism<F> {
    pub alpha1: Matrix<F>,
    pub alpha2: Vec<F>,
}

#[derive(Clone, Debug)]
pub struct StandardResolution<F> {
    pub q1: SCModule<F>,
    pub q0: SCModule<F>,
    pub d: Matrix<F>,
    pub eps: Matrix<F>,
    pub module: SCModule<F>,
}

impl<F: Field> StandardResolution<F> {
    /// Homomorphisms, injectivity, surjectivity and exactness by ranks.
    pub fn verify(&self) -> Result<()> {
        let ok = self.q1.is_hom(&self.q0, &self.d)
            && self.q0.is_hom(&self.module, &self.eps)
            && self.eps.mul(&self.d).is_zero()
            && self.d.rank() == self.q1.dim()
            && self.eps.rank() == self.module.dim()
            && self.q0.dim() == self.q1.dim() + self.module.dim();
        if ok {
            Ok(())
        } else {
            Err(Error::Internal("standard resolution is not exact".into()))
        }
    }

    /// `Ext^1(M, N) = coker(Hom(Q0, N) -> Hom(Q1, N))`, Hom spaces by intertwiners.
    pub fn ext1(&self, n: &SCModule<F>) -> Result<usize> {
        let h1 = hom_space(&self.q1, n)?.len();
        let images: Vec<Vec<F>> = hom_space(&self.q0, n)?
            .iter()
            .map(|f| f.mul(&self.d).data().to_vec())
            .collect();
        let width = n.dim() * self.q1.dim();
        let mut ech = RowEchelon::new(width);
        for v in images {
            ech.push(v);
        }
        Ok(h1 - ech.rank())
    }
}
