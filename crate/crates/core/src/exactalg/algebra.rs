//! Finite-dimensional associative algebras given by structure constants.

use std::collections::BTreeMap;

use super::field::Field;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Sparse coefficient vector: `(basis index, nonzero coefficient)`, sorted by index.
pub type Sparse<F> = Vec<(usize, F)>;

/// Peirce-adapted basis data: each vertex idempotent is a basis element and each
/// basis element `b` lies in `e_i A e_j` for `blocks[b] = (i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Peirce {
    pub idempotents: Vec<usize>,
    pub blocks: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SCAlgebra<F> {
    dim: usize,
    table: Vec<Sparse<F>>,
    unit: Vec<F>,
    peirce: Option<Peirce>,
    generators: Option<Vec<usize>>,
}

fn to_sparse<F: Field>(v: &[F]) -> Sparse<F> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

fn sparse_add<F: Field>(acc: &mut BTreeMap<usize, F>, k: usize, c: F) {
    let e = acc.entry(k).or_insert_with(F::zero);
    *e = e.clone() + c;
}

fn collect_sparse<F: Field>(acc: BTreeMap<usize, F>) -> Sparse<F> {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl<F: Field> SCAlgebra<F> {
    /// `product(i, j)` gives the coordinates of `b_i b_j`.
    pub fn from_fn(
        dim: usize,
        unit: Vec<F>,
        mut product: impl FnMut(usize, usize) -> Vec<F>,
    ) -> Result<Self> {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = product(i, j);
                if p.len() != dim {
                    return Err(Error::InvalidAlgebra(format!(
                        "product ({i},{j}) has {} coordinates, expected {dim}",
                        p.len()
                    )));
                }
                table.push(to_sparse(&p));
            }
        }
        Self::from_sparse(dim, table, unit)
    }

    /// Validated construction from a sparse table indexed by `i * dim + j`.
    pub fn from_sparse(dim: usize, table: Vec<Sparse<F>>, unit: Vec<F>) -> Result<Self> {
        let a = Self::from_sparse_unchecked(dim, table, unit)?;
        a.validate()?;
        Ok(a)
    }

    pub(crate) fn from_sparse_unchecked(
        dim: usize,
        table: Vec<Sparse<F>>,
        unit: Vec<F>,
    ) -> Result<Self> {
        if table.len() != dim * dim || unit.len() != dim {
            return Err(Error::InvalidAlgebra("structure table has wrong size".into()));
        }
        if table.iter().flatten().any(|(k, _)| *k >= dim) {
            return Err(Error::InvalidAlgebra("basis index out of range".into()));
        }
        Ok(SCAlgebra { dim, table, unit, peirce: None, generators: None })
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            let e = self.basis_vector(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(Error::InvalidAlgebra(format!("unit law fails on basis element {i}")));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.product(i, j);
                for k in 0..n {
                    let mut lhs = BTreeMap::new();
                    for (m, c) in ij {
                        for (q, d) in self.product(*m, k) {
                            sparse_add(&mut lhs, *q, c.clone() * d.clone());
                        }
                    }
                    let mut rhs = BTreeMap::new();
                    for (m, c) in self.product(j, k) {
                        for (q, d) in self.product(i, *m) {
                            sparse_add(&mut rhs, *q, c.clone() * d.clone());
                        }
                    }
                    if collect_sparse(lhs) != collect_sparse(rhs) {
                        return Err(Error::InvalidAlgebra(format!(
                            "associativity fails on ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Attaches and validates Peirce data.
    pub fn with_peirce(mut self, p: Peirce) -> Result<Self> {
        let n = self.dim;
        if p.blocks.len() != n {
            return Err(Error::InvalidAlgebra("peirce blocks have wrong length".into()));
        }
        let v = p.idempotents.len();
        let mut unit = vec![F::zero(); n];
        for (i, &e) in p.idempotents.iter().enumerate() {
            if e >= n || p.blocks[e] != (i, i) {
                return Err(Error::InvalidAlgebra(format!("idempotent {i} is misplaced")));
            }
            unit[e] = unit[e].clone() + F::one();
        }
        if unit != self.unit {
            return Err(Error::InvalidAlgebra("idempotents do not sum to the unit".into()));
        }
        for b in 0..n {
            let (l, r) = p.blocks[b];
            if l >= v || r >= v {
                return Err(Error::InvalidAlgebra("peirce index out of range".into()));
            }
            let bv = self.basis_vector(b);
            for (i, &e) in p.idempotents.iter().enumerate() {
                let ev = self.basis_vector(e);
                let left = self.mul(&ev, &bv);
                let right = self.mul(&bv, &ev);
                let zero = vec![F::zero(); n];
                if (i == l && left != bv) || (i != l && left != zero) {
                    return Err(Error::InvalidAlgebra(format!("basis element {b} not in e_{l}A")));
                }
                if (i == r && right != bv) || (i != r && right != zero) {
                    return Err(Error::InvalidAlgebra(format!("basis element {b} not in Ae_{r}")));
                }
            }
        }
        self.peirce = Some(p);
        Ok(self)
    }

    pub(crate) fn with_peirce_unchecked(mut self, p: Peirce) -> Self {
        self.peirce = Some(p);
        self
    }

    /// Records a generating set (together with the idempotents); checked.
    pub fn with_generators(mut self, gens: Vec<usize>) -> Result<Self> {
        let mut span: Vec<Vec<F>> = Vec::new();
        let mut seed: Vec<usize> = gens.clone();
        if let Some(p) = &self.peirce {
            seed.extend(p.idempotents.iter().copied());
        }
        let mut frontier: Vec<Vec<F>> = seed.iter().map(|&g| self.basis_vector(g)).collect();
        frontier.push(self.unit.clone());
        let mut rank = 0;
        while let Some(x) = frontier.pop() {
            let mut trial = span.clone();
            trial.push(x.clone());
            let r = Matrix::from_columns(self.dim, &trial).rank();
            if r > rank {
                rank = r;
                span.push(x.clone());
                for &g in &seed {
                    frontier.push(self.mul(&self.basis_vector(g), &x));
                }
            }
        }
        if rank < self.dim {
            return Err(Error::InvalidAlgebra(format!(
                "generators span only {rank} of {} dimensions",
                self.dim
            )));
        }
        self.generators = Some(gens);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn peirce(&self) -> Option<&Peirce> {
        self.peirce.as_ref()
    }

    pub fn generators(&self) -> Option<&[usize]> {
        self.generators.as_deref()
    }

    pub fn num_vertices(&self) -> usize {
        self.peirce.as_ref().map_or(0, |p| p.idempotents.len())
    }

    /// Basis indices in `e_i A e_j`.
    pub fn block(&self, i: usize, j: usize) -> Vec<usize> {
        let p = self.peirce.as_ref().expect("algebra has no Peirce data");
        (0..self.dim).filter(|&b| p.blocks[b] == (i, j)).collect()
    }

    pub fn block_of(&self, b: usize) -> (usize, usize) {
        self.peirce.as_ref().expect("algebra has no Peirce data").blocks[b]
    }

    pub fn idempotent(&self, i: usize) -> usize {
        self.peirce.as_ref().expect("algebra has no Peirce data").idempotents[i]
    }

    pub fn product(&self, i: usize, j: usize) -> &Sparse<F> {
        &self.table[i * self.dim + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        v[i] = F::one();
        v
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.clone() * b.clone();
                for (k, c) in self.product(i, j) {
                    out[*k] = out[*k].clone() + ab.clone() * c.clone();
                }
            }
        }
        out
    }

    /// Matrix of `y -> x y`.
    pub fn left_mult(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Matrix of `y -> y x`.
    pub fn right_mult(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.product(i, j) == self.product(j, i)))
    }

    pub fn opposite(&self) -> Self {
        let n = self.dim;
        let table = (0..n * n).map(|ij| self.table[(ij % n) * n + ij / n].clone()).collect();
        SCAlgebra {
            dim: n,
            table,
            unit: self.unit.clone(),
            peirce: self.peirce.as_ref().map(|p| Peirce {
                idempotents: p.idempotents.clone(),
                blocks: p.blocks.iter().map(|&(a, b)| (b, a)).collect(),
            }),
            generators: self.generators.clone(),
        }
    }

    /// The corner `eAe` for `e` the sum of the listed vertex idempotents,
    /// with vertices renumbered in the given order. Also returns the kept basis indices.
    pub fn corner(&self, vertices: &[usize]) -> (Self, Vec<usize>) {
        let p = self.peirce.as_ref().expect("corner needs Peirce data");
        let pos: BTreeMap<usize, usize> = vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let keep: Vec<usize> = (0..self.dim)
            .filter(|&b| pos.contains_key(&p.blocks[b].0) && pos.contains_key(&p.blocks[b].1))
            .collect();
        let new_index: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(k, &b)| (b, k)).collect();
        let n = keep.len();
        let mut table = Vec::with_capacity(n * n);
        for &i in &keep {
            for &j in &keep {
                table.push(
                    self.product(i, j)
                        .iter()
                        .map(|(k, c)| (new_index[k], c.clone()))
                        .collect(),
                );
            }
        }
        let mut unit = vec![F::zero(); n];
        let idempotents: Vec<usize> = vertices.iter().map(|&v| new_index[&p.idempotents[v]]).collect();
        for &e in &idempotents {
            unit[e] = F::one();
        }
        let blocks = keep.iter().map(|&b| (pos[&p.blocks[b].0], pos[&p.blocks[b].1])).collect();
        // paths through dropped vertices become indecomposable, so the old
        // generators need not generate the corner
        let generators = None;
        let alg = SCAlgebra {
            dim: n,
            table,
            unit,
            peirce: Some(Peirce { idempotents, blocks }),
            generators,
        };
        (alg, keep)
    }

    /// The full matrix algebra `Mat_n(k)` with matrix units as basis.
    pub fn matrix_algebra(n: usize) -> Self {
        let dim = n * n;
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let (a, b) = (i / n, i % n);
                let (c, d) = (j / n, j % n);
                table.push(if b == c { vec![(a * n + d, F::one())] } else { Vec::new() });
            }
        }
        let mut unit = vec![F::zero(); dim];
        for i in 0..n {
            unit[i * n + i] = F::one();
        }
        let blocks = (0..dim).map(|i| (i / n, i % n)).collect();
        SCAlgebra { dim, table, unit, peirce: None, generators: None }
            .with_peirce_unchecked(Peirce { idempotents: (0..n).map(|i| i * n + i).collect(), blocks })
    }

    /// The algebra `E_A(c)` of `c`-blocked matrices whose `(j,l)` block has
    /// entries in `e_j A e_l`. Peirce data is over the `sum c` diagonal idempotents.
    pub fn block_matrix_algebra(&self, c: &[usize]) -> Result<Self> {
        let p = self
            .peirce
            .as_ref()
            .ok_or_else(|| Error::InvalidAlgebra("block matrix algebra needs Peirce data".into()))?;
        let v = p.idempotents.len();
        if c.len() != v {
            return Err(Error::DimensionMismatch(format!(
                "multiplicity vector of length {} for {v} vertices",
                c.len()
            )));
        }
        let slots: Vec<(usize, usize)> =
            (0..v).flat_map(|j| (0..c[j]).map(move |s| (j, s))).collect();
        let mut basis: Vec<(usize, usize, usize)> = Vec::new();
        let mut index = BTreeMap::new();
        for (x, &(j, _)) in slots.iter().enumerate() {
            for (y, &(l, _)) in slots.iter().enumerate() {
                for b in self.block(j, l) {
                    index.insert((x, y, b), basis.len());
                    basis.push((x, y, b));
                }
            }
        }
        let n = basis.len();
        let mut table = Vec::with_capacity(n * n);
        for &(x, y, b) in &basis {
            for &(y2, z, b2) in &basis {
                if y != y2 {
                    table.push(Vec::new());
                    continue;
                }
                table.push(
                    self.product(b, b2)
                        .iter()
                        .map(|(k, coef)| (index[&(x, z, *k)], coef.clone()))
                        .collect(),
                );
            }
        }
        let mut unit = vec![F::zero(); n];
        let mut idempotents = Vec::new();
        for (x, &(j, _)) in slots.iter().enumerate() {
            let e = index[&(x, x, p.idempotents[j])];
            unit[e] = F::one();
            idempotents.push(e);
        }
        let blocks = basis.iter().map(|&(x, y, _)| (x, y)).collect();
        Ok(SCAlgebra { dim: n, table, unit, peirce: None, generators: None }
            .with_peirce_unchecked(Peirce { idempotents, blocks }))
    }
}
