//! Left modules over structure-constant algebras, Hom spaces and
//! Hom/Ext from projective presentations.

use std::collections::HashMap;
use std::sync::Arc;

use super::algebra::SCAlgebra;
use super::field::Field;
use super::matrix::{Matrix, RowEchelon};
use crate::error::{Error, Result};

/// A left module: `action[b]` is the matrix of basis element `b`.
///
/// When the algebra carries Peirce data and every vertex idempotent acts by a
/// 0/1 diagonal matrix, `grading[v]` records the vertex of basis vector `v`.
#[derive(Clone, Debug)]
pub struct SCModule<F> {
    alg: Arc<SCAlgebra<F>>,
    dim: usize,
    action: Vec<Matrix<F>>,
    grading: Option<Vec<usize>>,
}

impl<F: Field> SCModule<F> {
    pub fn new(alg: Arc<SCAlgebra<F>>, dim: usize, action: Vec<Matrix<F>>) -> Result<Self> {
        let m = Self::new_unchecked(alg, dim, action)?;
        m.validate()?;
        Ok(m)
    }

    /// Shape checks only; the module axioms are assumed.
    pub fn new_unchecked(alg: Arc<SCAlgebra<F>>, dim: usize, action: Vec<Matrix<F>>) -> Result<Self> {
        if action.len() != alg.dim() {
            return Err(Error::InvalidModule(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                alg.dim()
            )));
        }
        if action.iter().any(|a| a.rows() != dim || a.cols() != dim) {
            return Err(Error::InvalidModule("action matrix has wrong shape".into()));
        }
        let grading = detect_grading(&alg, dim, &action);
        Ok(SCModule { alg, dim, action, grading })
    }

    pub fn validate(&self) -> Result<()> {
        if !self.act(self.alg.unit()).is_identity() {
            return Err(Error::InvalidModule("unit does not act as the identity".into()));
        }
        let n = self.alg.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.action[i].mul(&self.action[j]);
                let mut rhs = Matrix::zeros(self.dim, self.dim);
                for (k, c) in self.alg.product(i, j) {
                    rhs.add_scaled(&self.action[*k], c);
                }
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "action is not multiplicative on ({i},{j})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(alg: Arc<SCAlgebra<F>>) -> Self {
        let n = alg.dim();
        Self::new_unchecked(alg, 0, vec![Matrix::zeros(0, 0); n]).unwrap()
    }

    /// The left regular module `A`.
    pub fn regular(alg: Arc<SCAlgebra<F>>) -> Self {
        let action = (0..alg.dim()).map(|b| alg.left_mult(&alg.basis_vector(b))).collect();
        let d = alg.dim();
        Self::new_unchecked(alg, d, action).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn algebra(&self) -> &Arc<SCAlgebra<F>> {
        &self.alg
    }

    pub fn action(&self, b: usize) -> &Matrix<F> {
        &self.action[b]
    }

    pub fn actions(&self) -> &[Matrix<F>] {
        &self.action
    }

    /// Matrix of an algebra element given in coordinates.
    pub fn act(&self, x: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (b, c) in x.iter().enumerate() {
            m.add_scaled(&self.action[b], c);
        }
        m
    }

    pub fn grading(&self) -> Option<&[usize]> {
        self.grading.as_deref()
    }

    /// Basis indices of `e_i M`; requires a graded module.
    pub fn vertex_basis(&self, i: usize) -> Vec<usize> {
        let g = self.grading.as_ref().expect("module is not graded");
        (0..self.dim).filter(|&v| g[v] == i).collect()
    }

    /// `dim e_i M` for each vertex, computed as ranks so it works ungraded too.
    pub fn dim_vector(&self) -> Vec<usize> {
        let v = self.alg.num_vertices();
        match &self.grading {
            Some(g) => (0..v).map(|i| g.iter().filter(|&&x| x == i).count()).collect(),
            None => (0..v).map(|i| self.action[self.alg.idempotent(i)].rank()).collect(),
        }
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) || *self.alg == *other.alg
    }

    /// Direct sum with the canonical inclusions.
    pub fn direct_sum(parts: &[Self]) -> Result<(Self, Vec<Matrix<F>>)> {
        let first = parts
            .first()
            .ok_or_else(|| Error::InvalidModule("empty direct sum".into()))?;
        if parts.iter().any(|p| !p.same_algebra(first)) {
            return Err(Error::AlgebraMismatch);
        }
        let alg = first.alg.clone();
        let dim: usize = parts.iter().map(|p| p.dim).sum();
        let action = (0..alg.dim())
            .map(|b| Matrix::block_diag(&parts.iter().map(|p| p.action[b].clone()).collect::<Vec<_>>()))
            .collect();
        let mut incl = Vec::new();
        let mut off = 0;
        for p in parts {
            let mut m = Matrix::zeros(dim, p.dim);
            for i in 0..p.dim {
                m[(off + i, i)] = F::one();
            }
            incl.push(m);
            off += p.dim;
        }
        Ok((Self::new_unchecked(alg, dim, action)?, incl))
    }

    /// The submodule spanned by the (independent) columns of `basis`.
    pub fn submodule(&self, basis: &Matrix<F>) -> Result<Self> {
        let k = basis.cols();
        let mut action = Vec::with_capacity(self.action.len());
        for a in &self.action {
            let img = a.mul(basis);
            let x = basis
                .solve_matrix(&img)
                .ok_or_else(|| Error::InvalidModule("subspace is not invariant".into()))?;
            action.push(x);
        }
        Self::new_unchecked(self.alg.clone(), k, action)
    }

    /// Transport of structure along an invertible `p`: the new basis is the columns of `p`.
    pub fn change_basis(&self, p: &Matrix<F>) -> Result<Self> {
        let inv = p
            .inverse()
            .ok_or_else(|| Error::InvalidModule("change of basis is singular".into()))?;
        let action = self.action.iter().map(|a| inv.mul(a).mul(p)).collect();
        Self::new_unchecked(self.alg.clone(), self.dim, action)
    }

    /// An isomorphic graded module and the isomorphism (columns = new basis in old coordinates).
    pub fn graded(&self) -> Result<(Self, Matrix<F>)> {
        if self.grading.is_some() {
            return Ok((self.clone(), Matrix::identity(self.dim)));
        }
        let v = self.alg.num_vertices();
        if v == 0 {
            return Err(Error::InvalidModule("algebra has no vertex idempotents".into()));
        }
        let mut cols = Vec::new();
        for i in 0..v {
            let img = self.action[self.alg.idempotent(i)].column_space();
            for c in 0..img.cols() {
                cols.push(img.column(c));
            }
        }
        let p = Matrix::from_columns(self.dim, &cols);
        let m = self.change_basis(&p)?;
        if m.grading.is_none() {
            return Err(Error::Internal("regrading failed".into()));
        }
        Ok((m, p))
    }

    /// Whether `f: self -> other` commutes with the action.
    pub fn is_hom(&self, other: &Self, f: &Matrix<F>) -> bool {
        f.rows() == other.dim
            && f.cols() == self.dim
            && (0..self.action.len()).all(|b| f.mul(&self.action[b]) == other.action[b].mul(f))
    }
}

fn detect_grading<F: Field>(alg: &SCAlgebra<F>, dim: usize, action: &[Matrix<F>]) -> Option<Vec<usize>> {
    let p = alg.peirce()?;
    let mut g = vec![usize::MAX; dim];
    for (i, &e) in p.idempotents.iter().enumerate() {
        let m = &action[e];
        for r in 0..dim {
            for c in 0..dim {
                let x = &m[(r, c)];
                if r != c && !x.is_zero() {
                    return None;
                }
            }
            let d = &m[(r, r)];
            if d.is_one() {
                if g[r] != usize::MAX {
                    return None;
                }
                g[r] = i;
            } else if !d.is_zero() {
                return None;
            }
        }
    }
    if g.contains(&usize::MAX) {
        return None;
    }
    Some(g)
}

fn check_pair<F: Field>(m: &SCModule<F>, n: &SCModule<F>) -> Result<()> {
    if m.same_algebra(n) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

/// Basis of `Hom_A(M, N)`, each an `dim N x dim M` matrix.
///
/// Graded modules only need the vertex-preserving blocks as unknowns and only
/// the recorded generators (or all non-idempotent basis elements) as equations.
pub fn hom_space<F: Field>(m: &SCModule<F>, n: &SCModule<F>) -> Result<Vec<Matrix<F>>> {
    check_pair(m, n)?;
    let (Some(gm), Some(gn)) = (m.grading(), n.grading()) else {
        return hom_space_full(m, n);
    };
    let alg = m.algebra();
    let idem: Vec<usize> = alg.peirce().unwrap().idempotents.clone();
    let gens: Vec<usize> = match alg.generators() {
        Some(g) => g.to_vec(),
        None => (0..alg.dim()).filter(|b| !idem.contains(b)).collect(),
    };
    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut unknowns = Vec::new();
    for y in 0..n.dim() {
        for x in 0..m.dim() {
            if gn[y] == gm[x] {
                index.insert((y, x), unknowns.len());
                unknowns.push((y, x));
            }
        }
    }
    let mut sys = RowEchelon::new(unknowns.len());
    for &a in &gens {
        let (l, r) = alg.block_of(a);
        let ma = m.action(a);
        let na = n.action(a);
        // f ma - na f, entry (y, x) with y at vertex l and x at vertex r
        for y in (0..n.dim()).filter(|&y| gn[y] == l) {
            for x in (0..m.dim()).filter(|&x| gm[x] == r) {
                let mut row = Vec::new();
                for x2 in 0..m.dim() {
                    let c = &ma[(x2, x)];
                    if !c.is_zero() {
                        if let Some(&u) = index.get(&(y, x2)) {
                            row.push((u, c.clone()));
                        }
                    }
                }
                for y2 in 0..n.dim() {
                    let c = &na[(y, y2)];
                    if !c.is_zero() {
                        if let Some(&u) = index.get(&(y2, x)) {
                            row.push((u, -c.clone()));
                        }
                    }
                }
                sys.push_sparse(&row);
                if sys.is_full() {
                    return Ok(Vec::new());
                }
            }
        }
    }
    Ok(sys
        .kernel()
        .into_iter()
        .map(|v| {
            let mut f = Matrix::zeros(n.dim(), m.dim());
            for (k, c) in v.into_iter().enumerate() {
                f[unknowns[k]] = c;
            }
            f
        })
        .collect())
}

/// Hom space from the full system over every basis element; the reference route.
pub fn hom_space_full<F: Field>(m: &SCModule<F>, n: &SCModule<F>) -> Result<Vec<Matrix<F>>> {
    check_pair(m, n)?;
    let (dm, dn) = (m.dim(), n.dim());
    let var = |y: usize, x: usize| y * dm + x;
    let mut sys = RowEchelon::new(dm * dn);
    for b in 0..m.algebra().dim() {
        let ma = m.action(b);
        let na = n.action(b);
        for y in 0..dn {
            for x in 0..dm {
                let mut row = Vec::new();
                for x2 in 0..dm {
                    if !ma[(x2, x)].is_zero() {
                        row.push((var(y, x2), ma[(x2, x)].clone()));
                    }
                }
                for y2 in 0..dn {
                    if !na[(y, y2)].is_zero() {
                        row.push((var(y2, x), -na[(y, y2)].clone()));
                    }
                }
                sys.push_sparse(&row);
            }
        }
    }
    Ok(sys
        .kernel()
        .into_iter()
        .map(|v| Matrix::from_vec(dn, dm, v))
        .collect())
}

pub fn hom_dim<F: Field>(m: &SCModule<F>, n: &SCModule<F>) -> Result<usize> {
    Ok(hom_space(m, n)?.len())
}

/// A map of projectives `P1 -> P0`, with `P0 = sum_j A e_{top[j]}` and
/// `P1 = sum_k A e_{relations[k]}`. Generator `k` of `P1` maps to
/// `sum c * (b @ j)` over `images[k] = [(j, b, c), ...]`, with `b` in
/// `e_{relations[k]} A e_{top[j]}`.
#[derive(Clone, Debug)]
pub struct ProjectivePresentation<F> {
    pub top: Vec<usize>,
    pub relations: Vec<usize>,
    pub images: Vec<Vec<(usize, usize, F)>>,
}

/// `sum_j A e_{vertices[j]}` with basis `(j, b)` for `b` in `A e_{vertices[j]}`,
/// ordered by `j` then `b`. Also returns the basis labels.
pub fn projective_module<F: Field>(
    alg: &Arc<SCAlgebra<F>>,
    vertices: &[usize],
) -> (SCModule<F>, Vec<(usize, usize)>) {
    let mut labels = Vec::new();
    for (j, &v) in vertices.iter().enumerate() {
        for b in 0..alg.dim() {
            if alg.block_of(b).1 == v {
                labels.push((j, b));
            }
        }
    }
    let pos: HashMap<(usize, usize), usize> = labels.iter().enumerate().map(|(k, &l)| (l, k)).collect();
    let d = labels.len();
    let action = (0..alg.dim())
        .map(|a| {
            let mut m = Matrix::zeros(d, d);
            for (col, &(j, b)) in labels.iter().enumerate() {
                for (k, c) in alg.product(a, b) {
                    m[(pos[&(j, *k)], col)] = c.clone();
                }
            }
            m
        })
        .collect();
    (SCModule::new_unchecked(alg.clone(), d, action).unwrap(), labels)
}

impl<F: Field> ProjectivePresentation<F> {
    /// Matrix of the module map `P1 -> P0` in the bases of [`projective_module`].
    pub fn matrix(&self, alg: &Arc<SCAlgebra<F>>) -> Matrix<F> {
        let (_, l0) = projective_module(alg, &self.top);
        let (_, l1) = projective_module(alg, &self.relations);
        let pos0: HashMap<(usize, usize), usize> = l0.iter().enumerate().map(|(k, &l)| (l, k)).collect();
        let mut m = Matrix::<F>::zeros(l0.len(), l1.len());
        for (col, &(k, b1)) in l1.iter().enumerate() {
            for (j, b, c) in &self.images[k] {
                for (q, d) in alg.product(b1, *b) {
                    let r = pos0[&(*j, *q)];
                    m[(r, col)] = m[(r, col)].clone() + c.clone() * d.clone();
                }
            }
        }
        m
    }

    /// `(dim Hom(M, N), dim Ext^1(M, N))` where `0 -> P1 -> P0 -> M -> 0` is exact.
    pub fn hom_ext(&self, n: &SCModule<F>) -> Result<(usize, usize)> {
        if n.grading().is_none() {
            return Err(Error::InvalidModule("Hom from a presentation needs a graded module".into()));
        }
        let dom: Vec<Vec<usize>> = self.top.iter().map(|&v| n.vertex_basis(v)).collect();
        let cod: Vec<Vec<usize>> = self.relations.iter().map(|&v| n.vertex_basis(v)).collect();
        let dom_dim: usize = dom.iter().map(|x| x.len()).sum();
        let cod_dim: usize = cod.iter().map(|x| x.len()).sum();
        let mut dom_off = vec![0; dom.len()];
        for j in 1..dom.len() {
            dom_off[j] = dom_off[j - 1] + dom[j - 1].len();
        }
        let mut delta = Matrix::<F>::zeros(cod_dim, dom_dim);
        let mut row0 = 0;
        for (k, rows) in cod.iter().enumerate() {
            for (j, b, c) in &self.images[k] {
                let act = n.action(*b);
                for (ri, &y) in rows.iter().enumerate() {
                    for (ci, &x) in dom[*j].iter().enumerate() {
                        let v = &act[(y, x)];
                        if !v.is_zero() {
                            let cell = &mut delta[(row0 + ri, dom_off[*j] + ci)];
                            *cell = cell.clone() + c.clone() * v.clone();
                        }
                    }
                }
            }
            row0 += rows.len();
        }
        let r = delta.rank();
        Ok((dom_dim - r, cod_dim - r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::algebra::Peirce;
    use crate::exactalg::field::{Rational, F5};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Kronecker path algebra: e0, e1, a, b with a, b: 0 -> 1.
    fn kronecker<F: Field>() -> Arc<SCAlgebra<F>> {
        let unit = vec![F::one(), F::one(), F::zero(), F::zero()];
        let alg = SCAlgebra::from_fn(4, unit, |i, j| {
            let mut v = vec![F::zero(); 4];
            match (i, j) {
                (0, 0) => v[0] = F::one(),
                (1, 1) => v[1] = F::one(),
                (1, 2) | (2, 0) => v[2] = F::one(),
                (1, 3) | (3, 0) => v[3] = F::one(),
                _ => {}
            }
            v
        })
        .unwrap()
        .with_peirce(Peirce { idempotents: vec![0, 1], blocks: vec![(0, 0), (1, 1), (1, 0), (1, 0)] })
        .unwrap()
        .with_generators(vec![2, 3])
        .unwrap();
        Arc::new(alg)
    }

    fn rep<F: Field>(alg: &Arc<SCAlgebra<F>>, d0: usize, d1: usize, a: Matrix<F>, b: Matrix<F>) -> SCModule<F> {
        let n = d0 + d1;
        let mut act = vec![Matrix::zeros(n, n); 4];
        for i in 0..d0 {
            act[0][(i, i)] = F::one();
        }
        for i in d0..n {
            act[1][(i, i)] = F::one();
        }
        act[2].set_block(d0, 0, &a);
        act[3].set_block(d0, 0, &b);
        SCModule::new(alg.clone(), n, act).unwrap()
    }

    #[test]
    fn regular_module_end_is_algebra() {
        let alg = kronecker::<Rational>();
        let a = SCModule::regular(alg);
        assert_eq!(hom_dim(&a, &a).unwrap(), 4);
    }

    #[test]
    fn graded_and_full_agree_on_bricks() {
        let alg = kronecker::<Rational>();
        let one = Matrix::<Rational>::identity(1);
        let m = rep(&alg, 1, 1, one.clone(), Matrix::from_i64(&[&[2]]));
        let n = rep(&alg, 1, 1, one.clone(), Matrix::from_i64(&[&[3]]));
        assert_eq!(hom_dim(&m, &m).unwrap(), 1);
        assert_eq!(hom_dim(&m, &n).unwrap(), 0);
        assert_eq!(hom_space_full(&m, &n).unwrap().len(), 0);
    }

    #[test]
    fn presentation_hom_ext_for_kronecker_brick() {
        // M = F(1, lambda): 0 -> P1 -> P0^1 with relation b - lambda a from top vertex 0.
        // Here P0 = A e0, P1 = A e1, the relation maps e1 to (b - 2a) @ 0.
        let alg = kronecker::<Rational>();
        let pres = ProjectivePresentation {
            top: vec![0],
            relations: vec![1],
            images: vec![vec![(0, 3, Rational::one()), (0, 2, Rational::from_i64(-2))]],
        };
        let one = Matrix::<Rational>::identity(1);
        let m = rep(&alg, 1, 1, one.clone(), Matrix::from_i64(&[&[2]]));
        let n = rep(&alg, 1, 1, one.clone(), Matrix::from_i64(&[&[3]]));
        assert_eq!(pres.hom_ext(&m).unwrap(), (1, 1));
        assert_eq!(pres.hom_ext(&n).unwrap(), (0, 0));
        let d = pres.matrix(&alg);
        assert_eq!(d.rank(), 1);
    }

    #[test]
    fn regrading_recovers_grading() {
        let alg = kronecker::<Rational>();
        let m = rep(&alg, 1, 1, Matrix::identity(1), Matrix::identity(1));
        let p = Matrix::<Rational>::from_i64(&[&[1, 1], &[0, 1]]);
        let twisted = m.change_basis(&p).unwrap();
        assert!(twisted.grading().is_none());
        let (g, iso) = twisted.graded().unwrap();
        assert!(g.grading().is_some());
        assert_eq!(g.dim_vector(), vec![1, 1]);
        assert!(g.is_hom(&twisted, &iso));
        twisted.validate().unwrap();
    }

    proptest! {
        #[test]
        fn hom_graded_matches_full(seed in any::<u64>(), d0 in 0usize..3, d1 in 0usize..3, e0 in 0usize..3, e1 in 0usize..3) {
            let alg = kronecker::<F5>();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = rep(&alg, d0, d1, Matrix::random(d1, d0, &mut rng), Matrix::random(d1, d0, &mut rng));
            let n = rep(&alg, e0, e1, Matrix::random(e1, e0, &mut rng), Matrix::random(e1, e0, &mut rng));
            let h = hom_space(&m, &n).unwrap();
            prop_assert_eq!(h.len(), hom_space_full(&m, &n).unwrap().len());
            for f in &h {
                prop_assert!(m.is_hom(&n, f));
            }
        }
    }
}
