//! Quiver representations and their Hom/Ext over path algebras.

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactalg::module::{hom_dim, ProjectivePresentation};
use crate::exactalg::{Field, Matrix, SCModule};
use crate::quiver::{PathAlgebra, Quiver};

/// `maps[a]` is `dims[target] x dims[source]` for arrow `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverRep<F> {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix<F>>,
}

impl<F: Field> QuiverRep<F> {
    pub fn new(q: &Quiver, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self> {
        if dims.len() != q.vertex_count() || maps.len() != q.arrows().len() {
            return Err(Error::DimensionMismatch("representation does not fit the quiver".into()));
        }
        for (a, &(s, t)) in q.arrows().iter().enumerate() {
            if maps[a].rows() != dims[t] || maps[a].cols() != dims[s] {
                return Err(Error::DimensionMismatch(format!("arrow {a} has the wrong shape")));
            }
        }
        Ok(QuiverRep { dims, maps })
    }

    pub fn random<R: Rng + ?Sized>(q: &Quiver, dims: &[usize], rng: &mut R) -> Self {
        let maps = q.arrows().iter().map(|&(s, t)| Matrix::random(dims[t], dims[s], rng)).collect();
        QuiverRep { dims: dims.to_vec(), maps }
    }

    fn offsets(&self) -> Vec<usize> {
        let mut off = vec![0; self.dims.len() + 1];
        for i in 0..self.dims.len() {
            off[i + 1] = off[i] + self.dims[i];
        }
        off
    }

    /// Map along a path given by its arrows in traversal order.
    pub fn path_map(&self, source: usize, arrows: &[usize]) -> Matrix<F> {
        arrows
            .iter()
            .fold(Matrix::identity(self.dims[source]), |m, &a| self.maps[a].mul(&m))
    }

    /// The module over the path algebra, basis ordered by vertex.
    pub fn to_module(&self, pa: &PathAlgebra<F>) -> SCModule<F> {
        let off = self.offsets();
        let d = off[self.dims.len()];
        let action = pa
            .paths
            .iter()
            .map(|p| {
                let mut m = Matrix::zeros(d, d);
                let block = self.path_map(p.source, &p.arrows);
                m.set_block(off[p.target], off[p.source], &block);
                m
            })
            .collect();
        SCModule::new_unchecked(pa.algebra.clone(), d, action).unwrap()
    }

    /// Reads a graded module back into arrow matrices.
    pub fn from_module(pa: &PathAlgebra<F>, m: &SCModule<F>) -> Result<Self> {
        if m.grading().is_none() {
            return Err(Error::InvalidModule("module is not graded".into()));
        }
        let q = &pa.quiver;
        let bases: Vec<Vec<usize>> = (0..q.vertex_count()).map(|v| m.vertex_basis(v)).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| m.action(pa.arrow_index(a)).submatrix(&bases[t], &bases[s]))
            .collect();
        QuiverRep::new(q, bases.iter().map(|b| b.len()).collect(), maps)
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// The standard resolution `0 -> ⊕_a P(t a) ⊗ M_{s a} -> ⊕_i P(i) ⊗ M_i -> M -> 0`.
    pub fn standard_resolution(&self, pa: &PathAlgebra<F>) -> ProjectivePresentation<F> {
        let q = &pa.quiver;
        let off = self.offsets();
        let mut top = Vec::new();
        for (i, &d) in self.dims.iter().enumerate() {
            top.extend(std::iter::repeat_n(i, d));
        }
        let mut relations = Vec::new();
        let mut images = Vec::new();
        for (a, &(s, t)) in q.arrows().iter().enumerate() {
            for x in 0..self.dims[s] {
                relations.push(t);
                // e_t ⊗ x  ->  a ⊗ x - e_t ⊗ (a x)
                let mut img = vec![(off[s] + x, pa.arrow_index(a), F::one())];
                for y in 0..self.dims[t] {
                    let c = &self.maps[a][(y, x)];
                    if !c.is_zero() {
                        img.push((off[t] + y, t, -c.clone()));
                    }
                }
                images.push(img);
            }
        }
        ProjectivePresentation { top, relations, images }
    }
}

/// `(dim Hom, dim Ext^1)` as kernel and cokernel of
/// `⊕_i Hom(M_i, N_i) -> ⊕_a Hom(M_{s a}, N_{t a})`, `(f_i) -> (N_a f_s - f_t M_a)`.
pub fn ringel_hom_ext<F: Field>(q: &Quiver, m: &QuiverRep<F>, n: &QuiverRep<F>) -> (usize, usize) {
    let mut dom_off = vec![0; q.vertex_count() + 1];
    for i in 0..q.vertex_count() {
        dom_off[i + 1] = dom_off[i] + m.dims[i] * n.dims[i];
    }
    let dom = dom_off[q.vertex_count()];
    let mut rows = 0;
    for &(s, t) in q.arrows() {
        rows += n.dims[t] * m.dims[s];
    }
    let mut delta = Matrix::<F>::zeros(rows, dom);
    let mut r0 = 0;
    // f_i is dims_N[i] x dims_M[i], unknown (y, x) at dom_off[i] + y * dims_M[i] + x
    for (a, &(s, t)) in q.arrows().iter().enumerate() {
        let (ma, na) = (&m.maps[a], &n.maps[a]);
        for y in 0..n.dims[t] {
            for x in 0..m.dims[s] {
                let r = r0 + y * m.dims[s] + x;
                // (N_a f_s)[y, x] = sum_k N_a[y, k] f_s[k, x]
                for k in 0..n.dims[s] {
                    let c = &na[(y, k)];
                    if !c.is_zero() {
                        let u = dom_off[s] + k * m.dims[s] + x;
                        delta[(r, u)] = delta[(r, u)].clone() + c.clone();
                    }
                }
                // (f_t M_a)[y, x] = sum_k f_t[y, k] M_a[k, x]
                for k in 0..m.dims[t] {
                    let c = &ma[(k, x)];
                    if !c.is_zero() {
                        let u = dom_off[t] + y * m.dims[t] + k;
                        delta[(r, u)] = delta[(r, u)].clone() - c.clone();
                    }
                }
            }
        }
        r0 += n.dims[t] * m.dims[s];
    }
    let rank = delta.rank();
    (dom - rank, rows - rank)
}

/// Hom by solving for intertwiners and Ext^1 from the standard resolution,
/// with the resolution's Hom count checked against the intertwiner count.
pub fn hom_ext<F: Field>(pa: &PathAlgebra<F>, m: &QuiverRep<F>, n: &QuiverRep<F>) -> Result<(usize, usize)> {
    let nm = n.to_module(pa);
    let hom = hom_dim(&m.to_module(pa), &nm)?;
    let (hom_res, ext) = m.standard_resolution(pa).hom_ext(&nm)?;
    if hom_res != hom {
        return Err(Error::Internal(format!("Hom from resolution {hom_res} vs intertwiners {hom}")));
    }
    Ok((hom, ext))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ext::ext1_by_derivations;
    use crate::exactalg::field::{F31, F5};
    use crate::exactalg::krull_schmidt::krull_schmidt;
    use crate::forms::quiver_form;
    use crate::roots::coxeter;
    use proptest::prelude::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn module_round_trip_and_validity() {
        let q = Quiver::named("a2tilde").unwrap();
        let pa = PathAlgebra::<F5>::new(&q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let r = QuiverRep::random(&q, &[2, 1, 3], &mut rng);
        let m = r.to_module(&pa);
        m.validate().unwrap();
        assert_eq!(QuiverRep::from_module(&pa, &m).unwrap(), r);
        let res = r.standard_resolution(&pa);
        let d = res.matrix(&pa.algebra);
        // one relation per arrow and source basis vector; injective map
        assert_eq!(d.cols(), d.rank());
    }

    /// `P(i)` as a representation: paths out of `i`.
    fn projective(pa: &PathAlgebra<F31>, i: usize) -> QuiverRep<F31> {
        let (m, _) = crate::exactalg::module::projective_module(&pa.algebra, &[i]);
        let (g, _) = m.graded().unwrap();
        QuiverRep::from_module(pa, &g).unwrap()
    }

    #[test]
    fn coxeter_is_translate_on_kronecker() {
        // dim (tau M)_i = dim Hom(P(i), tau M) = dim Ext^1(M, P(i))
        let q = Quiver::kronecker();
        let pa = PathAlgebra::<F31>::new(&q).unwrap();
        let phi = coxeter(&q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let ps = [projective(&pa, 0), projective(&pa, 1)];
        assert_eq!(ps[0].dims, vec![1, 2]);
        assert_eq!(ps[1].dims, vec![0, 1]);
        for dims in [[1usize, 0], [2, 1], [3, 2], [1, 1], [2, 2]] {
            let mut m = QuiverRep::random(&q, &dims, &mut rng);
            if dims == [2, 2] {
                // an indecomposable of dimension 2 delta: a Jordan block
                m.maps[0] = Matrix::identity(2);
                m.maps[1] = Matrix::from_fn(2, 2, |r, c| match (r, c) {
                    (0, 0) | (1, 1) => F31::new(4),
                    (0, 1) => F31::one(),
                    _ => F31::zero(),
                });
            }
            let mm = m.to_module(&pa);
            let dec = krull_schmidt(&mm, 3).unwrap();
            assert_eq!(dec.total_summands(), 1, "{dims:?} should be indecomposable");
            let tau: Vec<i64> = ps.iter().map(|p| hom_ext(&pa, &m, p).unwrap().1 as i64).collect();
            let d: Vec<i64> = dims.iter().map(|&x| x as i64).collect();
            assert_eq!(phi.apply(&d), tau, "{dims:?}");
        }
    }

    #[test]
    fn three_routes_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for name in ["kronecker", "a2tilde", "d4tilde", "t3"] {
            let q = Quiver::named(name).unwrap();
            let pa = PathAlgebra::<F31>::new(&q).unwrap();
            let f = quiver_form(&q);
            for _ in 0..20 {
                let d: Vec<usize> = (0..q.vertex_count()).map(|_| rng.gen_range(0..3)).collect();
                let e: Vec<usize> = (0..q.vertex_count()).map(|_| rng.gen_range(0..3)).collect();
                let m = QuiverRep::<F31>::random(&q, &d, &mut rng);
                let n = QuiverRep::<F31>::random(&q, &e, &mut rng);
                let (h, x) = hom_ext(&pa, &m, &n).unwrap();
                assert_eq!(ringel_hom_ext(&q, &m, &n), (h, x));
                let der = ext1_by_derivations(&m.to_module(&pa), &n.to_module(&pa)).unwrap();
                assert_eq!(der, x);
                let di: Vec<i64> = d.iter().map(|&v| v as i64).collect();
                let ei: Vec<i64> = e.iter().map(|&v| v as i64).collect();
                assert_eq!(h as i64 - x as i64, f.bilinear(&di, &ei));
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn euler_equals_tits(idx in 0usize..34, seed in any::<u64>()) {
            let (_, q) = &Quiver::diagrams_up_to(9)[idx];
            let pa = PathAlgebra::<F31>::new(q).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let d: Vec<usize> = (0..q.vertex_count()).map(|_| rng.gen_range(0..3)).collect();
            let e: Vec<usize> = (0..q.vertex_count()).map(|_| rng.gen_range(0..3)).collect();
            let m = QuiverRep::<F31>::random(q, &d, &mut rng);
            let n = QuiverRep::<F31>::random(q, &e, &mut rng);
            let (h, x) = hom_ext(&pa, &m, &n).unwrap();
            let di: Vec<i64> = d.iter().map(|&v| v as i64).collect();
            let ei: Vec<i64> = e.iter().map(|&v| v as i64).collect();
            prop_assert_eq!(h as i64 - x as i64, quiver_form(q).bilinear(&di, &ei));
        }
    }
}
