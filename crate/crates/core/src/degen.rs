//! Degenerations of elements: the Hom order as a necessary condition,
//! conflation witnesses `0 -> w' -> w ⊕ v -> v -> 0` as certificates, and
//! exhaustive orbit censuses over small fields.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bimod::{BimoduleElement, TriangularAlgebra, WMorphism};
use crate::error::{Error, Result};
use crate::exactalg::krull_schmidt::{enumerate_combinations, find_isomorphism};
use crate::exactalg::{Field, Matrix, RowEchelon, SCModule};
use crate::generic::decompose_element;

/// Largest element space a census will enumerate.
pub const CENSUS_MAX_DIM: usize = 12;
pub const CENSUS_MAX_FIELD: u128 = 4;
/// Largest `q^{dim End}` for counting automorphisms by enumeration.
pub const AUT_ENUMERATION_LIMIT: u128 = 1 << 20;

const ALPHA_TRIES: usize = 24;
const RANDOM_PROBES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomOrder<F> {
    Consistent,
    /// A probe violating one of the inequalities.
    Refuted(BimoduleElement<F>),
}

/// Tests `dim Hom(w, z) <= dim Hom(w', z)` and `dim Hom(z, w) <= dim Hom(z, w')`
/// for every probe `z`, as needed for `w'` to be a degeneration of `w`.
pub fn hom_order_leq<F: Field>(
    t: &TriangularAlgebra<F>,
    w: &BimoduleElement<F>,
    w2: &BimoduleElement<F>,
    probes: &[BimoduleElement<F>],
) -> Result<HomOrder<F>> {
    if w.shape != w2.shape {
        return Err(Error::DimensionMismatch("Hom order compares elements of one shape".into()));
    }
    for z in probes {
        let h = |a: &BimoduleElement<F>, b: &BimoduleElement<F>| t.hom_ext(a, b).0;
        if h(w, z) > h(w2, z) || h(z, w) > h(z, w2) {
            return Ok(HomOrder::Refuted(z.clone()));
        }
    }
    Ok(HomOrder::Consistent)
}

/// `w`, `w'`, their summands and random elements of their shape.
pub fn default_probes<F: Field>(
    t: &TriangularAlgebra<F>,
    w: &BimoduleElement<F>,
    w2: &BimoduleElement<F>,
    seed: u64,
) -> Result<Vec<BimoduleElement<F>>> {
    let mut out = vec![w.clone(), w2.clone()];
    for x in [w, w2] {
        out.extend(decompose_element(t, x, seed)?.into_iter().map(|s| s.element));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_PROBES {
        out.push(t.random_element(&w.shape, &mut rng)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflationWitness<F> {
    pub v: BimoduleElement<F>,
    /// `w' -> w ⊕ v`.
    pub alpha: WMorphism<F>,
    /// `w ⊕ v -> v`.
    pub beta: WMorphism<F>,
}

fn check_pair<F: Field>(
    t: &TriangularAlgebra<F>,
    a: &BimoduleElement<F>,
    b: &BimoduleElement<F>,
    f: &WMorphism<F>,
) -> Result<bool> {
    let delta = t.delta_map(a, b);
    let p1 = a.shape[t.split_vertex()];
    let q1 = b.shape[t.split_vertex()];
    if f.alpha1.rows() != q1 || f.alpha1.cols() != p1 || delta.cols() != q1 * p1 + f.alpha2.len() {
        return Err(Error::MalformedWitness("morphism has the wrong size".into()));
    }
    let mut x = f.alpha1.data().to_vec();
    x.extend(f.alpha2.iter().cloned());
    Ok(delta.mul_vec(&x).iter().all(|c| c.is_zero()))
}

/// Checks every condition of a witness exactly: both maps are morphisms, the
/// composite vanishes, `α` is injective, `β` surjective and the dimensions add up.
pub fn verify_witness<F: Field>(
    t: &TriangularAlgebra<F>,
    w: &BimoduleElement<F>,
    w2: &BimoduleElement<F>,
    cw: &ConflationWitness<F>,
) -> Result<bool> {
    if w.shape != w2.shape || cw.v.shape.len() != w.shape.len() {
        return Err(Error::MalformedWitness("shapes do not match".into()));
    }
    let s = t.direct_sum(w, &cw.v);
    if !check_pair(t, w2, &s, &cw.alpha)? || !check_pair(t, &s, &cw.v, &cw.beta)? {
        return Ok(false);
    }
    let a = t.module_map(&w2.shape, &s.shape, &cw.alpha);
    let b = t.module_map(&s.shape, &cw.v.shape, &cw.beta);
    let (m2, ms, mv) = (t.to_module(w2), t.to_module(&s), t.to_module(&cw.v));
    Ok(m2.is_hom(&ms, &a)
        && ms.is_hom(&mv, &b)
        && b.mul(&a).is_zero()
        && a.rank() == m2.dim()
        && b.rank() == mv.dim()
        && ms.dim() == m2.dim() + mv.dim())
}

/// Coordinates of a module map in the basis of `Hom_W(a, b)`.
fn to_morphism<F: Field>(
    t: &TriangularAlgebra<F>,
    basis: &[WMorphism<F>],
    a: &BimoduleElement<F>,
    b: &BimoduleElement<F>,
    map: &Matrix<F>,
) -> Option<WMorphism<F>> {
    if basis.is_empty() {
        return map.is_zero().then(|| WMorphism { alpha1: Matrix::zeros(b.shape[t.split_vertex()], a.shape[t.split_vertex()]), alpha2: vec![F::zero(); t.p2_hom_dim(&a.shape, &b.shape)] });
    }
    let cols: Vec<Vec<F>> = basis.iter().map(|f| t.module_map(&a.shape, &b.shape, f).data().to_vec()).collect();
    let c = Matrix::from_columns(map.rows() * map.cols(), &cols).solve(map.data())?;
    Some(combine(basis, &c))
}

fn combine<F: Field>(basis: &[WMorphism<F>], c: &[F]) -> WMorphism<F> {
    let mut out = WMorphism { alpha1: basis[0].alpha1.scale(&F::zero()), alpha2: vec![F::zero(); basis[0].alpha2.len()] };
    for (f, x) in basis.iter().zip(c) {
        out.alpha1.add_scaled(&f.alpha1, x);
        for (o, y) in out.alpha2.iter_mut().zip(&f.alpha2) {
            *o = o.clone() + x.clone() * y.clone();
        }
    }
    out
}

/// `M / im(f)` for an injective graded map, with the projection.
fn cokernel<F: Field>(m: &SCModule<F>, f: &Matrix<F>) -> Result<(SCModule<F>, Matrix<F>)> {
    let n = m.dim();
    let mut ech = RowEchelon::new(n);
    for c in 0..f.cols() {
        ech.push(f.column(c));
    }
    let mut comp = Vec::new();
    for v in 0..m.algebra().num_vertices() {
        for i in m.vertex_basis(v) {
            let mut u = vec![F::zero(); n];
            u[i] = F::one();
            if ech.push(u.clone()) {
                comp.push(u);
            }
        }
    }
    let c = Matrix::from_columns(n, &comp);
    let full = f.hstack(&c);
    let inv = full.inverse().ok_or_else(|| Error::Internal("cokernel basis is singular".into()))?;
    let rows: Vec<usize> = (f.cols()..n).collect();
    let all: Vec<usize> = (0..n).collect();
    let proj = inv.submatrix(&rows, &all);
    let action = m.actions().iter().map(|a| proj.mul(a).mul(&c)).collect();
    Ok((SCModule::new_unchecked(m.algebra().clone(), comp.len(), action)?, proj))
}

/// Sub-multisets of the summands, smallest module first.
fn summand_sums<F: Field>(t: &TriangularAlgebra<F>, w: &BimoduleElement<F>, seed: u64) -> Result<Vec<BimoduleElement<F>>> {
    let parts = decompose_element(t, w, seed)?;
    let mut out: Vec<BimoduleElement<F>> = vec![t.zero_element(&vec![0; t.num_vertices()])?];
    for p in &parts {
        let mut next = Vec::new();
        for base in &out {
            let mut acc = base.clone();
            for _ in 0..p.multiplicity {
                acc = t.direct_sum(&acc, &p.element);
                next.push(acc.clone());
            }
        }
        out.extend(next);
    }
    Ok(out)
}

/// Shapes whose module dimension is at most `bound`.
fn shapes_up_to<F: Field>(t: &TriangularAlgebra<F>, bound: usize) -> Vec<Vec<usize>> {
    let n = t.num_vertices();
    let unit_dim: Vec<usize> = (0..n)
        .map(|i| {
            let mut s = vec![0; n];
            s[i] = 1;
            t.to_module(&t.zero_element(&s).unwrap()).dim()
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn rec(i: usize, left: usize, cur: &mut Vec<usize>, unit: &[usize], out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        let mut k = 0;
        while k * unit[i] <= left {
            cur[i] = k;
            rec(i + 1, left - k * unit[i], cur, unit, out);
            k += 1;
        }
        cur[i] = 0;
    }
    rec(0, bound, &mut cur, &unit_dim, &mut out);
    out.sort_by_key(|s| s.iter().zip(&unit_dim).map(|(a, b)| a * b).sum::<usize>());
    out
}

fn try_v<F: Field>(
    t: &TriangularAlgebra<F>,
    w: &BimoduleElement<F>,
    w2: &BimoduleElement<F>,
    v: &BimoduleElement<F>,
    rng: &mut ChaCha8Rng,
) -> Result<Option<ConflationWitness<F>>> {
    let s = t.direct_sum(w, v);
    let (m2, ms, mv) = (t.to_module(w2), t.to_module(&s), t.to_module(v));
    if ms.dim() != m2.dim() + mv.dim() {
        return Ok(None);
    }
    let homs = t.hom_w(w2, &s)?;
    if homs.is_empty() && m2.dim() > 0 {
        return Ok(None);
    }
    let beta_basis = t.hom_w(&s, v)?;
    for k in 0..ALPHA_TRIES.max(1) {
        // the first tries use random subsets of the basis
        let c: Vec<F> = (0..homs.len())
            .map(|_| if k < ALPHA_TRIES / 2 && rng.gen_bool(0.5) { F::zero() } else { F::random(rng) })
            .collect();
        let alpha = if homs.is_empty() {
            WMorphism { alpha1: Matrix::zeros(s.shape[t.split_vertex()], 0), alpha2: vec![F::zero(); t.p2_hom_dim(&w2.shape, &s.shape)] }
        } else {
            combine(&homs, &c)
        };
        let a = t.module_map(&w2.shape, &s.shape, &alpha);
        if a.rank() != m2.dim() {
            continue;
        }
        let (q, proj) = cokernel(&ms, &a)?;
        let Some(iso) = find_isomorphism(&q, &mv, rng)? else {
            continue;
        };
        let b = iso.mul(&proj);
        let Some(beta) = to_morphism(t, &beta_basis, &s, v, &b) else {
            return Err(Error::Internal("projection is not a morphism of elements".into()));
        };
        let cw = ConflationWitness { v: v.clone(), alpha, beta };
        if verify_witness(t, w, w2, &cw)? {
            return Ok(Some(cw));
        }
    }
    Ok(None)
}

/// Looks for a witness that `w'` is a degeneration of `w`, trying `v = 0`,
/// sums of summands of `w'` and `w`, then random elements of every shape
/// whose module has dimension at most `bound`. `None` is inconclusive.
pub fn search_witness<F: Field>(
    t: &TriangularAlgebra<F>,
    w: &BimoduleElement<F>,
    w2: &BimoduleElement<F>,
    bound: usize,
    seed: u64,
) -> Result<Option<ConflationWitness<F>>> {
    if w.shape != w2.shape {
        return Err(Error::DimensionMismatch("witness search compares elements of one shape".into()));
    }
    if let HomOrder::Refuted(_) = hom_order_leq(t, w, w2, &[w.clone(), w2.clone()])? {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cands = summand_sums(t, w2, seed)?;
    cands.extend(summand_sums(t, w, seed)?);
    cands.retain(|v| t.to_module(v).dim() <= bound);
    cands.sort_by_key(|v| t.to_module(v).dim());
    for v in &cands {
        if let Some(cw) = try_v(t, w, w2, v, &mut rng)? {
            return Ok(Some(cw));
        }
    }
    for shape in shapes_up_to(t, bound) {
        let v = t.random_element(&shape, &mut rng)?;
        if let Some(cw) = try_v(t, w, w2, &v, &mut rng)? {
            return Ok(Some(cw));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub struct Orbit<F> {
    pub representative: BimoduleElement<F>,
    pub size: u128,
    pub end_dim: usize,
    pub aut_order: u128,
}

#[derive(Clone, Debug)]
pub struct OrbitCensus<F> {
    pub q: u128,
    pub shape: Vec<usize>,
    pub element_space_dim: usize,
    pub group_order: u128,
    pub orbits: Vec<Orbit<F>>,
    /// `hom[i][j] = dim Hom_W(orbit i, orbit j)`.
    pub hom: Vec<Vec<usize>>,
}

impl<F: Field> OrbitCensus<F> {
    pub fn total(&self) -> u128 {
        self.orbits.iter().map(|o| o.size).sum()
    }

    /// `Σ sizes = q^N` and `size · |Aut| = |G|` for every orbit.
    pub fn check_counts(&self) -> bool {
        self.total() == self.q.pow(self.element_space_dim as u32)
            && self.orbits.iter().all(|o| o.size * o.aut_order == self.group_order)
    }
}

/// Number of invertible endomorphisms, by enumeration.
pub fn aut_order<F: Field>(t: &TriangularAlgebra<F>, w: &BimoduleElement<F>) -> Result<u128> {
    let (elts, q) = match (F::elements(), F::order()) {
        (Some(e), Some(q)) => (e, q),
        _ => return Err(Error::Unsupported("automorphism counts need a small finite field".into())),
    };
    let end: Vec<Matrix<F>> = t.hom_w(w, w)?.iter().map(|f| t.module_map(&w.shape, &w.shape, f)).collect();
    if end.is_empty() {
        return Ok(1);
    }
    if q.checked_pow(end.len() as u32).is_none_or(|x| x > AUT_ENUMERATION_LIMIT) {
        return Err(Error::CensusTooLarge(format!("{q}^{} endomorphisms", end.len())));
    }
    Ok(enumerate_combinations(&end, &elts).filter(|f| f.is_invertible()).count() as u128)
}

fn element_from_index<F: Field>(t: &TriangularAlgebra<F>, shape: &[usize], elts: &[F], mut idx: u128) -> BimoduleElement<F> {
    let rows = shape[t.split_vertex()];
    let cols = t.columns(shape);
    let q = elts.len() as u128;
    let data = (0..rows * cols)
        .map(|_| {
            let x = elts[(idx % q) as usize].clone();
            idx /= q;
            x
        })
        .collect();
    BimoduleElement { shape: shape.to_vec(), data: Matrix::from_vec(rows, cols, data) }
}

/// Every element of `shape` over a field with at most four elements, grouped
/// into isomorphism classes certified by explicit isomorphisms.
pub fn census<F: Field>(t: &TriangularAlgebra<F>, shape: &[usize], seed: u64) -> Result<OrbitCensus<F>> {
    let (elts, q) = match (F::elements(), F::order()) {
        (Some(e), Some(q)) if q <= CENSUS_MAX_FIELD => (e, q),
        _ => return Err(Error::CensusTooLarge(format!("census needs a field with at most {CENSUS_MAX_FIELD} elements"))),
    };
    let n = t.element_space_dim(shape);
    if n > CENSUS_MAX_DIM {
        return Err(Error::CensusTooLarge(format!("element space of dimension {n} exceeds {CENSUS_MAX_DIM}")));
    }
    let total = q.pow(n as u32);
    // bucket by End dimension and the rank of the matrix
    let keys: Vec<(usize, usize)> = (0..total)
        .into_par_iter()
        .map(|i| {
            let w = element_from_index(t, shape, &elts, i);
            (t.hom_ext(&w, &w).0, w.data.rank())
        })
        .collect();
    let mut buckets: BTreeMap<(usize, usize), Vec<u128>> = BTreeMap::new();
    for (i, k) in keys.into_iter().enumerate() {
        buckets.entry(k).or_default().push(i as u128);
    }
    let classes: Vec<Vec<(BimoduleElement<F>, u128)>> = buckets
        .into_par_iter()
        .map(|(_, idx)| -> Result<Vec<(BimoduleElement<F>, u128)>> {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut reps: Vec<(BimoduleElement<F>, SCModule<F>, u128)> = Vec::new();
            for i in idx {
                let w = element_from_index(t, shape, &elts, i);
                let m = t.to_module(&w);
                let mut placed = false;
                for r in reps.iter_mut() {
                    if find_isomorphism(&r.1, &m, &mut rng)?.is_some() {
                        r.2 += 1;
                        placed = true;
                        break;
                    }
                }
                if !placed {
                    reps.push((w, m, 1));
                }
            }
            Ok(reps.into_iter().map(|(w, _, c)| (w, c)).collect())
        })
        .collect::<Result<_>>()?;
    let group_order = aut_order(t, &t.zero_element(shape)?)?;
    let mut orbits = Vec::new();
    for (w, size) in classes.into_iter().flatten() {
        let aut = aut_order(t, &w)?;
        let end_dim = t.hom_ext(&w, &w).0;
        orbits.push(Orbit { representative: w, size, end_dim, aut_order: aut });
    }
    orbits.sort_by(|a, b| (b.end_dim, &a.representative.data.data()).cmp(&(a.end_dim, &b.representative.data.data())));
    let hom = orbits
        .iter()
        .map(|a| orbits.iter().map(|b| t.hom_ext(&a.representative, &b.representative).0).collect())
        .collect();
    Ok(OrbitCensus { q, shape: shape.to_vec(), element_space_dim: n, group_order, orbits, hom })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::{F2, F3, F31};
    use crate::exactalg::Gf4;

    fn t2<F: Field>() -> TriangularAlgebra<F> {
        TriangularAlgebra::named("t2").unwrap()
    }

    fn f(v: u64) -> F31 {
        F31::new(v)
    }

    /// Kronecker element with pencil `(a, b)`, both `c1 x c0`.
    fn pencil(t: &TriangularAlgebra<F31>, a: &Matrix<F31>, b: &Matrix<F31>) -> BimoduleElement<F31> {
        let (r, c) = (a.rows(), a.cols());
        t.element(&[c, r], Matrix::from_fn(r, 2 * c, |i, j| if j % 2 == 0 { a[(i, j / 2)] } else { b[(i, j / 2)] }))
            .unwrap()
    }

    #[test]
    fn hom_order_on_t2() {
        let t = t2::<F31>();
        let id = t.element(&[1, 1], Matrix::identity(1)).unwrap();
        let zero = t.zero_element(&[1, 1]).unwrap();
        let probes = default_probes(&t, &id, &zero, 1).unwrap();
        assert_eq!(hom_order_leq(&t, &id, &id, &probes).unwrap(), HomOrder::Consistent);
        assert_eq!(hom_order_leq(&t, &id, &zero, &probes).unwrap(), HomOrder::Consistent);
        assert!(matches!(hom_order_leq(&t, &zero, &id, &probes).unwrap(), HomOrder::Refuted(_)));
        assert!(hom_order_leq(&t, &id, &t.zero_element(&[1, 2]).unwrap(), &probes).is_err());
    }

    #[test]
    fn explicit_witnesses() {
        let t = t2::<F31>();
        let id = t.element(&[1, 1], Matrix::identity(1)).unwrap();
        let zero = t.zero_element(&[1, 1]).unwrap();
        // trivial degeneration
        let triv = ConflationWitness {
            v: t.zero_element(&[0, 0]).unwrap(),
            alpha: WMorphism { alpha1: Matrix::identity(1), alpha2: vec![f(1)] },
            beta: WMorphism { alpha1: Matrix::zeros(0, 1), alpha2: vec![] },
        };
        assert!(verify_witness(&t, &id, &id, &triv).unwrap());
        // 0 -> S1 ⊕ S0 -> P0 ⊕ S0 -> S0 -> 0 from the extension 0 -> S1 -> P0 -> S0 -> 0
        let v = t.zero_element(&[1, 0]).unwrap();
        let cw = ConflationWitness {
            v: v.clone(),
            alpha: WMorphism { alpha1: Matrix::identity(1), alpha2: vec![f(0), f(1)] },
            beta: WMorphism { alpha1: Matrix::zeros(0, 1), alpha2: vec![f(1), f(0)] },
        };
        assert!(verify_witness(&t, &id, &zero, &cw).unwrap());
        // β missing the P0 component: the sequence is not exact
        let bad = ConflationWitness { beta: WMorphism { alpha1: Matrix::zeros(0, 1), alpha2: vec![f(0), f(0)] }, ..cw.clone() };
        assert!(!verify_witness(&t, &id, &zero, &bad).unwrap());
        let malformed = ConflationWitness { alpha: WMorphism { alpha1: Matrix::identity(2), alpha2: vec![] }, ..cw };
        assert!(matches!(verify_witness(&t, &id, &zero, &malformed), Err(Error::MalformedWitness(_))));
    }

    #[test]
    fn searched_witnesses() {
        let t = t2::<F31>();
        let id = t.element(&[1, 1], Matrix::identity(1)).unwrap();
        let zero = t.zero_element(&[1, 1]).unwrap();
        let cw = search_witness(&t, &id, &id, 2, 1).unwrap().unwrap();
        assert_eq!(t.to_module(&cw.v).dim(), 0);
        let cw = search_witness(&t, &id, &zero, 2, 1).unwrap().unwrap();
        assert!(t.to_module(&cw.v).dim() <= 2);
        assert!(verify_witness(&t, &id, &zero, &cw).unwrap());
        assert!(search_witness(&t, &zero, &id, 4, 1).unwrap().is_none());
    }

    #[test]
    fn kronecker_collisions() {
        let t = TriangularAlgebra::<F31>::named("kronecker").unwrap();
        let i2 = Matrix::<F31>::identity(2);
        let jordan = Matrix::from_fn(2, 2, |r, c| match (r, c) { (0, 1) => f(1), (r, c) if r == c => f(3), _ => f(0) });
        let w = pencil(&t, &i2, &jordan);
        let w0 = pencil(&t, &i2, &i2.scale(&f(3)));
        let cw = search_witness(&t, &w, &w0, 4, 2).unwrap().unwrap();
        assert!(verify_witness(&t, &w, &w0, &cw).unwrap());
        assert!(search_witness(&t, &w0, &w, 4, 2).unwrap().is_none());
    }

    #[test]
    fn small_censuses() {
        let c = census(&t2::<F2>(), &[1, 1], 0).unwrap();
        assert_eq!(c.orbits.len(), 2);
        assert_eq!(c.orbits.iter().map(|o| o.size).collect::<Vec<_>>(), vec![1, 1]);
        assert!(c.check_counts());
        let c = census(&t2::<F2>(), &[2, 2], 0).unwrap();
        assert_eq!(c.orbits.len(), 3);
        assert_eq!(c.total(), 16);
        // |GL2(F2)|^2
        assert_eq!(c.group_order, 36);
        assert!(c.check_counts());
        let k = TriangularAlgebra::<F3>::named("kronecker").unwrap();
        let c = census(&k, &[1, 1], 0).unwrap();
        assert_eq!(c.orbits.len(), 5);
        assert!(c.check_counts());
        let c = census(&t2::<Gf4>(), &[2, 1], 0).unwrap();
        assert_eq!(c.orbits.len(), 2);
        assert!(c.check_counts());
        assert!(matches!(census(&t2::<F31>(), &[1, 1], 0), Err(Error::CensusTooLarge(_))));
        assert!(matches!(census(&t2::<F2>(), &[4, 4], 0), Err(Error::CensusTooLarge(_))));
    }

    #[test]
    fn census_rigidity() {
        // equal End dimension and Hom order both ways forces isomorphism
        let t = TriangularAlgebra::<F3>::named("kronecker").unwrap();
        let c = census(&t, &[1, 1], 0).unwrap();
        let reps: Vec<_> = c.orbits.iter().map(|o| o.representative.clone()).collect();
        for (i, a) in reps.iter().enumerate() {
            for (j, b) in reps.iter().enumerate() {
                if i != j && c.orbits[i].end_dim == c.orbits[j].end_dim {
                    let both = hom_order_leq(&t, a, b, &reps).unwrap() == HomOrder::Consistent
                        && hom_order_leq(&t, b, a, &reps).unwrap() == HomOrder::Consistent;
                    assert!(!both, "distinct orbits {i}, {j} are Hom-order equivalent");
                }
            }
        }
    }
}
