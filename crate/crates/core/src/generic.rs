//! Generic elements of a bimodule shape and their direct-sum type.
//!
//! Generic means: the minimal `dim End` among random samples, with the same
//! decomposition type seen at least twice, then certified by recomputing
//! every Hom and Ext dimension exactly.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bimod::{BimoduleElement, TriangularAlgebra};
use crate::error::{Error, Result};
use crate::exactalg::algebra::{Peirce, Sparse};
use crate::exactalg::krull_schmidt::krull_schmidt;
use crate::exactalg::module::{hom_dim, hom_space};
use crate::exactalg::poly;
use crate::exactalg::{Field, Matrix, SCAlgebra, SCModule};
use crate::forms::bimodule_tits;

/// Redraws of a sample whose module does not split over the ground field.
pub const MAX_REDRAWS: usize = 500;

#[derive(Clone, Debug)]
pub struct SummandData<F> {
    pub element: BimoduleElement<F>,
    pub module: SCModule<F>,
    /// Split injections `M(element) -> M(w)`, one per copy.
    pub embeddings: Vec<Matrix<F>>,
    pub dim_vector: Vec<usize>,
    pub multiplicity: usize,
    pub end_dim: usize,
    pub self_ext: usize,
}

/// One entry per isomorphism class: `(shape, multiplicity, dim End, dim Ext^1(N, N))`.
pub type DecompositionType = Vec<(Vec<usize>, usize, usize, usize)>;

/// Pairwise Hom and Ext dimensions among the summand classes, rigid ones first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub hom: Vec<Vec<usize>>,
    pub ext: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct GenericDecomposition<F> {
    pub rigid: Vec<SummandData<F>>,
    pub delta_bricks: Vec<SummandData<F>>,
    pub end_dim: usize,
    pub self_ext: usize,
    pub certificate: Certificate,
}

impl<F: Field> GenericDecomposition<F> {
    pub fn delta_brick_count(&self) -> usize {
        self.delta_bricks.len()
    }

    pub fn decomposition_type(&self) -> DecompositionType {
        type_of(self.rigid.iter().chain(&self.delta_bricks))
    }

    pub fn is_rigid(&self) -> bool {
        self.delta_bricks.is_empty()
    }
}

fn type_of<'a, F: Field>(s: impl Iterator<Item = &'a SummandData<F>>) -> DecompositionType {
    let mut t: DecompositionType =
        s.map(|x| (x.element.shape.clone(), x.multiplicity, x.end_dim, x.self_ext)).collect();
    t.sort();
    t
}

fn trial_seed(seed: u64, i: usize) -> u64 {
    seed ^ (i as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Krull-Schmidt decomposition of `M(w)` with every summand read back as an element.
pub fn decompose_element<F: Field>(
    t: &TriangularAlgebra<F>,
    w: &BimoduleElement<F>,
    seed: u64,
) -> Result<Vec<SummandData<F>>> {
    let m = t.to_module(w);
    let dec = krull_schmidt(&m, seed)?;
    let mut out = Vec::new();
    for s in dec.summands {
        let (element, iso) = t.from_module(&s.module)?;
        let (end_dim, self_ext) = t.hom_ext(&element, &element);
        if end_dim != s.end_dim {
            return Err(Error::Internal("End dimension of a summand changed under transport".into()));
        }
        let module = t.to_module(&element);
        out.push(SummandData {
            dim_vector: module.dim_vector(),
            embeddings: s.embeddings.iter().map(|e| e.mul(&iso)).collect(),
            element,
            module,
            multiplicity: s.multiplicity,
            end_dim,
            self_ext,
        });
    }
    out.sort_by(|a, b| (&a.element.shape, &a.dim_vector).cmp(&(&b.element.shape, &b.dim_vector)));
    Ok(out)
}

struct Sample<F> {
    w: BimoduleElement<F>,
    end_dim: usize,
    self_ext: usize,
    summands: Vec<SummandData<F>>,
}

fn sample<F: Field>(t: &TriangularAlgebra<F>, shape: &[usize], seed: u64) -> Result<Sample<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..MAX_REDRAWS {
        let w = t.random_element(shape, &mut rng)?;
        match decompose_element(t, &w, trial_seed(seed, k)) {
            Ok(summands) => {
                let (end_dim, self_ext) = t.hom_ext(&w, &w);
                return Ok(Sample { w, end_dim, self_ext, summands });
            }
            Err(Error::NotSplit(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::NotSplit(format!("no sample split over {} after {MAX_REDRAWS} draws", F::name())))
}

/// A generic element of `shape` and its certified decomposition.
pub fn generic_element<F: Field>(
    t: &TriangularAlgebra<F>,
    shape: &[usize],
    trials: usize,
    seed: u64,
) -> Result<(BimoduleElement<F>, GenericDecomposition<F>)> {
    if trials == 0 {
        return Err(Error::GenericUnstable);
    }
    let samples: Vec<Sample<F>> = (0..trials)
        .into_par_iter()
        .map(|i| sample(t, shape, trial_seed(seed, i)))
        .collect::<Result<_>>()?;
    let min = samples.iter().map(|s| s.end_dim).min().unwrap();
    let best: Vec<&Sample<F>> = samples.iter().filter(|s| s.end_dim == min).collect();
    let ty = type_of(best[0].summands.iter());
    if best.iter().any(|s| type_of(s.summands.iter()) != ty) || (trials >= 2 && best.len() < 2) {
        return Err(Error::GenericUnstable);
    }
    let s = best[0];
    let (rigid, delta_bricks) = classify_summands(s.summands.clone())?;
    let mut dec = GenericDecomposition {
        rigid,
        delta_bricks,
        end_dim: s.end_dim,
        self_ext: s.self_ext,
        certificate: Certificate { hom: Vec::new(), ext: Vec::new() },
    };
    dec.certificate = certify(t, &s.w, &dec)?;
    Ok((s.w.clone(), dec))
}

/// Rigid bricks and δ-type bricks (self-Ext 1); anything else is outside the
/// generic picture for Dynkinian and Euclidean bimodules.
#[allow(clippy::type_complexity)]
fn classify_summands<F: Field>(s: Vec<SummandData<F>>) -> Result<(Vec<SummandData<F>>, Vec<SummandData<F>>)> {
    let mut rigid = Vec::new();
    let mut delta = Vec::new();
    for x in s {
        match (x.end_dim, x.self_ext) {
            (1, 0) => rigid.push(x),
            (1, 1) if x.multiplicity == 1 => delta.push(x),
            (1, 1) => return Err(Error::RepeatedParameter),
            (e, x) => {
                return Err(Error::Certification(format!(
                    "generic summand with dim End = {e}, dim Ext^1 = {x} is neither rigid nor a δ-brick"
                )))
            }
        }
    }
    Ok((rigid, delta))
}

/// Recomputes every dimension in the decomposition from scratch and checks
/// the generic shape: rigid bricks pairwise Ext-orthogonal, δ-bricks of
/// multiplicity one, no Hom in either direction between the two parts.
pub fn certify<F: Field>(
    t: &TriangularAlgebra<F>,
    w: &BimoduleElement<F>,
    dec: &GenericDecomposition<F>,
) -> Result<Certificate> {
    let all: Vec<&SummandData<F>> = dec.rigid.iter().chain(&dec.delta_bricks).collect();
    let m = t.to_module(w);
    // the embeddings assemble to an isomorphism onto M(w)
    let mut cols = Vec::new();
    for s in &all {
        if s.embeddings.len() != s.multiplicity {
            return Err(Error::Certification("embedding count differs from multiplicity".into()));
        }
        for e in &s.embeddings {
            if !s.module.is_hom(&m, e) {
                return Err(Error::Certification("summand embedding is not a homomorphism".into()));
            }
            cols.extend((0..e.cols()).map(|c| e.column(c)));
        }
    }
    if !Matrix::from_columns(m.dim(), &cols).is_invertible() {
        return Err(Error::Certification("summands do not reassemble the module".into()));
    }
    let n = all.len();
    let mut hom = vec![vec![0; n]; n];
    let mut ext = vec![vec![0; n]; n];
    for i in 0..n {
        let res = t.standard_resolution(&all[i].element)?;
        for j in 0..n {
            let (a, b) = (&all[i].element, &all[j].element);
            let (h, x) = t.hom_ext(a, b);
            let hm = hom_dim(&all[i].module, &all[j].module)?;
            let xm = res.ext1(&all[j].module)?;
            let tits = bimodule_tits(t.bimodule_dims(&a.shape, &b.shape));
            if h != hm || x != xm || h as i64 - x as i64 != tits {
                return Err(Error::Internal(format!("Hom/Ext routes disagree on summands ({i}, {j})")));
            }
            hom[i][j] = h;
            ext[i][j] = x;
        }
    }
    let r = dec.rigid.len();
    for i in 0..n {
        let (want_ext, kind) = if i < r { (0, "rigid") } else { (1, "δ") };
        if hom[i][i] != 1 || ext[i][i] != want_ext {
            return Err(Error::Certification(format!("{kind} summand N{i} has End {} and self-Ext {}", hom[i][i], ext[i][i])));
        }
        if i >= r && all[i].multiplicity != 1 {
            return Err(Error::Certification(format!("δ-brick N{i} has multiplicity {}", all[i].multiplicity)));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if i < r && j < r && ext[i][j] != 0 {
                return Err(Error::Certification(format!("Ext^1(N{i}, N{j}) = {}", ext[i][j])));
            }
            if (i < r) != (j < r) && hom[i][j] != 0 {
                return Err(Error::Certification(format!("Hom(N{i}, N{j}) = {} across the rigid/δ split", hom[i][j])));
            }
            if i >= r && j >= r && hom[i][j] != 0 {
                return Err(Error::RepeatedParameter);
            }
        }
    }
    Ok(Certificate { hom, ext })
}

/// A point of the projective line.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum P1Point<F> {
    Finite(F),
    Infinity,
}

/// `(s, p, q)`: a source `s` with exactly two independent paths `p < q` from
/// `s` to the split vertex, and no paths into `s`.
fn pencil_model<F: Field>(t: &TriangularAlgebra<F>) -> Option<(usize, usize, usize)> {
    let alg = t.algebra();
    let e = t.split_vertex();
    let n = alg.num_vertices();
    let cands: Vec<usize> = (0..n)
        .filter(|&s| s != e && alg.block(e, s).len() == 2 && (0..n).all(|i| i == s || alg.block(s, i).is_empty()))
        .collect();
    let others_thin = (0..n).all(|i| (0..n).all(|j| alg.block(i, j).len() <= 1 || (i == e && cands.contains(&j))));
    match cands.as_slice() {
        [s] if others_thin => {
            let b = alg.block(e, *s);
            Some((*s, b[0], b[1]))
        }
        _ => None,
    }
}

/// `det(Y - λX)` as a polynomial, by interpolation at `0, 1, ..., m`.
fn pencil_polynomial<F: Field>(x: &Matrix<F>, y: &Matrix<F>) -> Vec<F> {
    let m = x.rows();
    let pts: Vec<F> = (0..=m as i64).map(F::from_i64).collect();
    let vals: Vec<F> = pts.iter().map(|l| y.sub(&x.scale(l)).det()).collect();
    let mut out = vec![F::zero()];
    for (i, xi) in pts.iter().enumerate() {
        let mut basis = vec![F::one()];
        let mut denom = F::one();
        for (j, xj) in pts.iter().enumerate() {
            if i != j {
                basis = poly::mul(&basis, &[-xj.clone(), F::one()]);
                denom = denom * (xi.clone() - xj.clone());
            }
        }
        let c = vals[i].clone() * denom.inv().expect("interpolation nodes are distinct");
        out = poly::add(&out, &basis.iter().map(|b| b.clone() * c.clone()).collect::<Vec<_>>());
    }
    poly::trim(&mut out);
    out
}

fn check_distinct<F: Field>(mut v: Vec<P1Point<F>>) -> Result<Vec<P1Point<F>>> {
    v.sort();
    if v.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::RepeatedParameter);
    }
    Ok(v)
}

/// Generalized eigenvalues of the pencil `(X, Y)` from `M_s` to `M_e` given by
/// the two paths: roots of `det(Y - λX)` plus `m - deg` points at infinity.
pub fn pencil_parameters<F: Field>(x: &Matrix<F>, y: &Matrix<F>) -> Result<Vec<P1Point<F>>> {
    let m = x.rows();
    if x.cols() != m || y.rows() != m || y.cols() != m {
        return Err(Error::DimensionMismatch("pencil matrices must be square of one size".into()));
    }
    if F::order().is_some_and(|q| q <= m as u128) {
        return Err(Error::Unsupported("field too small to interpolate the pencil".into()));
    }
    let p = pencil_polynomial(x, y);
    if p.is_empty() {
        return Err(Error::Certification("singular pencil".into()));
    }
    let deg = p.len() - 1;
    let mut out = Vec::new();
    let mut total = 0;
    for r in F::roots(&p) {
        let k = poly::root_multiplicity(&p, &r);
        total += k;
        out.extend(std::iter::repeat_n(P1Point::Finite(r), k));
    }
    if total != deg {
        return Err(Error::NotSplit("pencil eigenvalues lie outside the ground field".into()));
    }
    out.extend(std::iter::repeat_n(P1Point::Infinity, m - deg));
    check_distinct(out)
}

fn path_block<F: Field>(m: &SCModule<F>, path: usize, s: usize, e: usize) -> Matrix<F> {
    m.action(path).submatrix(&m.vertex_basis(e), &m.vertex_basis(s))
}

/// Points of `P^1` of the δ-bricks, where a pencil model exists. The whole
/// pencil of a pure `mδ` element and the individual bricks are read off
/// independently and must agree.
pub fn tube_parameters<F: Field>(
    t: &TriangularAlgebra<F>,
    w: &BimoduleElement<F>,
    dec: &GenericDecomposition<F>,
) -> Result<Vec<P1Point<F>>> {
    if dec.delta_bricks.is_empty() {
        return Err(Error::Unsupported("no δ-bricks".into()));
    }
    let Some((s, p, q)) = pencil_model(t) else {
        return Err(Error::Unsupported("no pencil model for this algebra".into()));
    };
    let e = t.split_vertex();
    let mut per_brick = Vec::new();
    for b in &dec.delta_bricks {
        let x = path_block(&b.module, p, s, e);
        let y = path_block(&b.module, q, s, e);
        if (x.rows(), x.cols()) != (1, 1) {
            return Err(Error::Unsupported("δ is not thin at the pencil vertices".into()));
        }
        per_brick.push(match x[(0, 0)].inv() {
            Some(xi) => P1Point::Finite(y[(0, 0)].clone() * xi),
            None => P1Point::Infinity,
        });
    }
    let per_brick = check_distinct(per_brick)?;
    if dec.rigid.is_empty() {
        let m = t.to_module(w);
        let whole = pencil_parameters(&path_block(&m, p, s, e), &path_block(&m, q, s, e))?;
        if whole != per_brick {
            return Err(Error::Internal("pencil and brick parameters disagree".into()));
        }
    }
    Ok(per_brick)
}

/// A basic algebra `B` with vertices the given modules, `e_i B e_j = Hom(N_j, N_i)`
/// and product composition; `e_i` is the identity of `N_i`.
#[derive(Clone, Debug)]
pub struct EndAlgebra<F> {
    pub algebra: Arc<SCAlgebra<F>>,
    pub multiplicities: Vec<usize>,
    /// The module map of each basis element.
    pub maps: Vec<Matrix<F>>,
}

pub fn basic_end_algebra<F: Field>(modules: &[&SCModule<F>], multiplicities: &[usize]) -> Result<EndAlgebra<F>> {
    let n = modules.len();
    let mut maps: Vec<Matrix<F>> = Vec::new();
    let mut blocks = Vec::new();
    let mut idempotents = vec![0; n];
    let mut block_basis = vec![vec![Vec::new(); n]; n];
    for (i, &ni) in modules.iter().enumerate() {
        let id = Matrix::identity(ni.dim());
        idempotents[i] = maps.len();
        block_basis[i][i].push(maps.len());
        maps.push(id.clone());
        blocks.push((i, i));
        // complete the identity to a basis of End(N_i)
        let end = hom_space(ni, ni)?;
        let mut ech = crate::exactalg::RowEchelon::new(ni.dim() * ni.dim());
        ech.push(id.data().to_vec());
        for f in end {
            if ech.push(f.data().to_vec()) {
                block_basis[i][i].push(maps.len());
                maps.push(f);
                blocks.push((i, i));
            }
        }
    }
    for (i, &ni) in modules.iter().enumerate() {
        for (j, &nj) in modules.iter().enumerate() {
            if i == j {
                continue;
            }
            for f in hom_space(nj, ni)? {
                block_basis[i][j].push(maps.len());
                maps.push(f);
                blocks.push((i, j));
            }
        }
    }
    // coordinates inside each block
    let solvers: BTreeMap<(usize, usize), Matrix<F>> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !block_basis[i][j].is_empty())
        .map(|(i, j)| {
            let rows = modules[i].dim() * modules[j].dim();
            let cols: Vec<Vec<F>> = block_basis[i][j].iter().map(|&b| maps[b].data().to_vec()).collect();
            ((i, j), Matrix::from_columns(rows, &cols))
        })
        .collect();
    let d = maps.len();
    let mut table: Vec<Sparse<F>> = Vec::with_capacity(d * d);
    for a in 0..d {
        for b in 0..d {
            let ((i, j), (j2, k)) = (blocks[a], blocks[b]);
            if j != j2 {
                table.push(Vec::new());
                continue;
            }
            let h = maps[a].mul(&maps[b]);
            if h.is_zero() {
                table.push(Vec::new());
                continue;
            }
            let solver = solvers
                .get(&(i, k))
                .ok_or_else(|| Error::Internal("composition lands in an empty Hom block".into()))?;
            let c = solver
                .solve(h.data())
                .ok_or_else(|| Error::Internal("composition outside the Hom basis".into()))?;
            table.push(
                c.into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(u, x)| (block_basis[i][k][u], x))
                    .collect(),
            );
        }
    }
    let mut unit = vec![F::zero(); d];
    for &e in &idempotents {
        unit[e] = F::one();
    }
    let alg = SCAlgebra::from_sparse(d, table, unit)?.with_peirce(Peirce { idempotents, blocks })?;
    Ok(EndAlgebra { algebra: Arc::new(alg), multiplicities: multiplicities.to_vec(), maps })
}

/// The basic endomorphism algebra of a generic element; `delta` flags the
/// central field factors coming from δ-bricks.
pub fn end_algebra<F: Field>(dec: &GenericDecomposition<F>) -> Result<(EndAlgebra<F>, Vec<bool>)> {
    let all: Vec<&SummandData<F>> = dec.rigid.iter().chain(&dec.delta_bricks).collect();
    let modules: Vec<&SCModule<F>> = all.iter().map(|s| &s.module).collect();
    let mult: Vec<usize> = all.iter().map(|s| s.multiplicity).collect();
    let flags = (0..all.len()).map(|i| i >= dec.rigid.len()).collect();
    Ok((basic_end_algebra(&modules, &mult)?, flags))
}
