//! Krull-Schmidt decomposition by Fitting splittings of endomorphisms.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::Field;
use super::matrix::{Matrix, RowEchelon};
use super::module::{hom_space, SCModule};
use super::poly;
use crate::error::{Error, Result};

/// Attempts at a Fitting splitting before giving up.
pub const DEFAULT_SPLIT_ATTEMPTS: usize = 30;

const ISO_RANDOM_TRIES: usize = 64;
const ENUMERATION_LIMIT: u128 = 1 << 12;

#[derive(Clone, Debug)]
pub struct Summand<F> {
    pub module: SCModule<F>,
    pub multiplicity: usize,
    /// One split injection `module -> M` per copy.
    pub embeddings: Vec<Matrix<F>>,
    pub end_dim: usize,
}

#[derive(Clone, Debug)]
pub struct Decomposition<F> {
    pub summands: Vec<Summand<F>>,
}

impl<F: Field> Decomposition<F> {
    pub fn total_summands(&self) -> usize {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }
}

/// Powers of `f` until the rank stabilises.
fn stable_power<F: Field>(f: &Matrix<F>) -> Matrix<F> {
    let mut p = f.clone();
    let mut r = p.rank();
    loop {
        let q = p.mul(f);
        let rq = q.rank();
        if rq == r {
            return p;
        }
        p = q;
        r = rq;
    }
}

/// Kernel and image bases of an endomorphism, per vertex when graded.
fn kernel_image<F: Field>(m: &SCModule<F>, f: &Matrix<F>) -> (Matrix<F>, Matrix<F>) {
    let n = m.dim();
    match m.grading() {
        Some(_) => {
            let mut ker = Vec::new();
            let mut img = Vec::new();
            for v in 0..m.algebra().num_vertices() {
                let idx = m.vertex_basis(v);
                if idx.is_empty() {
                    continue;
                }
                let block = f.submatrix(&idx, &idx);
                let embed = |w: Vec<F>| {
                    let mut full = vec![F::zero(); n];
                    for (k, &i) in idx.iter().enumerate() {
                        full[i] = w[k].clone();
                    }
                    full
                };
                ker.extend(block.kernel().into_iter().map(embed));
                let cs = block.column_space();
                img.extend((0..cs.cols()).map(|c| embed(cs.column(c))));
            }
            (Matrix::from_columns(n, &ker), Matrix::from_columns(n, &img))
        }
        None => (f.kernel_matrix(), f.column_space()),
    }
}

/// Exact locality test for split endomorphism rings: every basis element has a
/// single eigenvalue and the nilpotent parts span a nilpotent ideal of codimension 1.
pub fn is_local<F: Field>(end: &[Matrix<F>]) -> bool {
    let h = end.len();
    if h == 0 {
        return false;
    }
    if h == 1 {
        return true;
    }
    let n = end[0].rows();
    let mut nil = Vec::new();
    for f in end {
        let cp = f.charpoly();
        let roots = F::roots(&cp);
        if roots.len() != 1 || poly::root_multiplicity(&cp, &roots[0]) != n {
            return false;
        }
        nil.push(f.sub(&Matrix::identity(n).scale(&roots[0])));
    }
    let mut ech = RowEchelon::new(n * n);
    let mut basis = Vec::new();
    for x in nil {
        if ech.push(x.data().to_vec()) {
            basis.push(x);
        }
    }
    if basis.len() != h - 1 {
        return false;
    }
    for a in &basis {
        for b in &basis {
            let mut probe = ech.clone();
            if probe.push(a.mul(b).data().to_vec()) {
                return false;
            }
        }
    }
    basis.iter().all(|x| x.is_nilpotent())
}

fn random_combination<F: Field>(basis: &[Matrix<F>], rng: &mut ChaCha8Rng) -> Matrix<F> {
    let mut acc = Matrix::zeros(basis[0].rows(), basis[0].cols());
    for b in basis {
        acc.add_scaled(b, &F::random(rng));
    }
    acc
}

/// A nontrivial Fitting splitting `M = ker z^N + im z^N` for some `z - lambda`.
fn try_split<F: Field>(
    m: &SCModule<F>,
    end: &[Matrix<F>],
    attempts: usize,
    rng: &mut ChaCha8Rng,
) -> Option<(Matrix<F>, Matrix<F>)> {
    let n = m.dim();
    let candidates = end.iter().cloned().chain((0..attempts).map(|_| random_combination(end, rng)));
    for z in candidates {
        for lam in F::roots(&z.charpoly()) {
            let y = z.sub(&Matrix::identity(n).scale(&lam));
            let p = stable_power(&y);
            let (k, i) = kernel_image(m, &p);
            if k.cols() > 0 && i.cols() > 0 {
                return Some((k, i));
            }
        }
    }
    None
}

/// An isomorphism `m -> n`, if one exists.
pub fn find_isomorphism<F: Field>(
    m: &SCModule<F>,
    n: &SCModule<F>,
    rng: &mut ChaCha8Rng,
) -> Result<Option<Matrix<F>>> {
    if m.dim() != n.dim() || m.dim_vector() != n.dim_vector() {
        return Ok(None);
    }
    if m.dim() == 0 {
        return Ok(Some(Matrix::zeros(0, 0)));
    }
    let hom = hom_space(m, n)?;
    if hom.is_empty() {
        return Ok(None);
    }
    if let (Some(elts), Some(q)) = (F::elements(), F::order()) {
        if q.checked_pow(hom.len() as u32).is_some_and(|t| t <= ENUMERATION_LIMIT) {
            return Ok(enumerate_combinations(&hom, &elts).find(|f| f.is_invertible()));
        }
    }
    for f in hom.iter().cloned().chain((0..ISO_RANDOM_TRIES).map(|_| random_combination(&hom, rng))) {
        if f.is_invertible() {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// Every linear combination of `basis` with coefficients in `elts`.
pub fn enumerate_combinations<'a, F: Field>(
    basis: &'a [Matrix<F>],
    elts: &'a [F],
) -> impl Iterator<Item = Matrix<F>> + 'a {
    let q = elts.len();
    let h = basis.len();
    let total = (q as u128).pow(h as u32);
    (0..total).map(move |mut idx| {
        let mut acc = Matrix::zeros(basis[0].rows(), basis[0].cols());
        for b in basis {
            acc.add_scaled(b, &elts[(idx % q as u128) as usize]);
            idx /= q as u128;
        }
        acc
    })
}

/// Decomposes `m` into indecomposables grouped by isomorphism class.
pub fn krull_schmidt<F: Field>(m: &SCModule<F>, seed: u64) -> Result<Decomposition<F>> {
    krull_schmidt_with(m, seed, DEFAULT_SPLIT_ATTEMPTS)
}

pub fn krull_schmidt_with<F: Field>(
    m: &SCModule<F>,
    seed: u64,
    attempts: usize,
) -> Result<Decomposition<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stack = vec![(m.clone(), Matrix::identity(m.dim()))];
    let mut pieces: Vec<(SCModule<F>, Matrix<F>, usize)> = Vec::new();
    while let Some((x, emb)) = stack.pop() {
        if x.dim() == 0 {
            continue;
        }
        let end = hom_space(&x, &x)?;
        if is_local(&end) {
            pieces.push((x, emb, end.len()));
            continue;
        }
        let (k, i) = try_split(&x, &end, attempts, &mut rng).ok_or_else(|| {
            Error::NotSplit(format!(
                "no splitting idempotent found for a module of dimension {} after {attempts} attempts",
                x.dim()
            ))
        })?;
        let xk = x.submodule(&k)?;
        let xi = x.submodule(&i)?;
        stack.push((xi, emb.mul(&i)));
        stack.push((xk, emb.mul(&k)));
    }
    let mut summands: Vec<Summand<F>> = Vec::new();
    for (x, emb, end_dim) in pieces {
        let mut placed = false;
        for s in summands.iter_mut() {
            if s.end_dim != end_dim {
                continue;
            }
            if let Some(iso) = find_isomorphism(&s.module, &x, &mut rng)? {
                // transport the new copy onto the representative's basis
                s.embeddings.push(emb.mul(&iso));
                s.multiplicity += 1;
                placed = true;
                break;
            }
        }
        if !placed {
            summands.push(Summand { module: x, multiplicity: 1, embeddings: vec![emb], end_dim });
        }
    }
    Ok(Decomposition { summands })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::algebra::{Peirce, SCAlgebra};
    use crate::exactalg::field::{Rational, F3, F31};
    use std::sync::Arc;

    fn kronecker<F: Field>() -> Arc<SCAlgebra<F>> {
        let unit = vec![F::one(), F::one(), F::zero(), F::zero()];
        Arc::new(
            SCAlgebra::from_fn(4, unit, |i, j| {
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
            .unwrap(),
        )
    }

    fn pencil<F: Field>(alg: &Arc<SCAlgebra<F>>, a: Matrix<F>, b: Matrix<F>) -> SCModule<F> {
        let (d1, d0) = (a.rows(), a.cols());
        let n = d0 + d1;
        let mut act = vec![Matrix::zeros(n, n); 4];
        for i in 0..n {
            act[if i < d0 { 0 } else { 1 }][(i, i)] = F::one();
        }
        act[2].set_block(d0, 0, &a);
        act[3].set_block(d0, 0, &b);
        SCModule::new(alg.clone(), n, act).unwrap()
    }

    fn reassembles<F: Field>(m: &SCModule<F>, d: &Decomposition<F>) -> bool {
        let cols: Vec<Matrix<F>> = d.summands.iter().flat_map(|s| s.embeddings.clone()).collect();
        let mut all = Matrix::zeros(m.dim(), 0);
        for c in &cols {
            all = all.hstack(c);
        }
        all.is_invertible()
            && d.summands.iter().all(|s| s.embeddings.iter().all(|e| s.module.is_hom(m, e)))
    }

    #[test]
    fn distinct_eigenvalues_split() {
        let alg = kronecker::<Rational>();
        let m = pencil(&alg, Matrix::identity(2), Matrix::from_i64(&[&[2, 0], &[0, 5]]));
        let d = krull_schmidt(&m, 1).unwrap();
        assert_eq!(d.summands.len(), 2);
        assert!(d.summands.iter().all(|s| s.multiplicity == 1 && s.end_dim == 1));
        assert!(reassembles(&m, &d));
    }

    #[test]
    fn repeated_brick_multiplicity() {
        let alg = kronecker::<F31>();
        let m = pencil(&alg, Matrix::identity(3), Matrix::identity(3).scale(&F31::new(4)));
        let d = krull_schmidt(&m, 2).unwrap();
        assert_eq!(d.summands.len(), 1);
        assert_eq!(d.summands[0].multiplicity, 3);
        assert!(reassembles(&m, &d));
    }

    #[test]
    fn jordan_block_is_indecomposable() {
        let alg = kronecker::<F3>();
        let m = pencil(&alg, Matrix::identity(2), Matrix::from_i64(&[&[1, 1], &[0, 1]]));
        let d = krull_schmidt(&m, 3).unwrap();
        assert_eq!(d.total_summands(), 1);
        assert_eq!(d.summands[0].end_dim, 2);
    }

    #[test]
    fn non_split_pencil_reports_error() {
        // B = [[0,-1],[1,0]] has eigenvalues +-i, not in Q: End = Q(i)
        let alg = kronecker::<Rational>();
        let m = pencil(&alg, Matrix::identity(2), Matrix::from_i64(&[&[0, -1], &[1, 0]]));
        assert!(matches!(krull_schmidt(&m, 4), Err(Error::NotSplit(_))));
    }
}
