//! The recursion computing the signature `(d_1..d_s; m)` of a fat subset of
//! the dual of `GL(P, A)`.
//!
//! Each step writes `A = k[W]A2` at a vertex `e` with `eAe = k`, `(1-e)Ae = 0`,
//! takes a generic element `w` of the shape of `P`, splits off one torus
//! factor per δ-brick and continues with the basic endomorphism algebra of the
//! rigid part, whose unit group is the stabilizer. Vertices without any
//! connection contribute `GL(c_i)` factors directly.
//!
//! The stabilizer of a generic character lives in the dual bimodule; its unit
//! group is that of the opposite endomorphism algebra, which is isomorphic to
//! the one computed here, so the recursion runs on `W` itself.

use std::sync::Arc;

use crate::bimod::{is_split_vertex, TriangularAlgebra};
use crate::error::{Error, Result};
use crate::exactalg::{Field, SCAlgebra};
use crate::generic::{basic_end_algebra, generic_element, tube_parameters, DecompositionType, P1Point};
use crate::quiver::{PathAlgebra, Quiver};

pub const DEFAULT_TRIALS: usize = 4;
const MAX_STEPS: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub vertices: usize,
    pub multiplicities: Vec<usize>,
    pub split_vertex: usize,
    /// The step ran on the opposite algebra.
    pub opposite: bool,
    pub element_space_dim: usize,
    pub group_dim: usize,
    pub stabilizer_dim: usize,
    pub decomposition: DecompositionType,
    pub torus_split: usize,
    /// `GL` degrees of isolated vertices split off before this step.
    pub gl_split: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigSpace {
    pub m: usize,
    /// Tube parameters of the generic element at the step that produced the
    /// tori, when a pencil model exists.
    pub observed: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatSignature {
    /// Sorted.
    pub gl_degrees: Vec<usize>,
    pub torus_rank: usize,
    pub config_space: Option<ConfigSpace>,
    pub trace: Vec<TraceStep>,
}

impl FatSignature {
    /// Equality of `(gl_degrees, torus_rank)`, ignoring the trace.
    pub fn same_signature(&self, o: &Self) -> bool {
        self.gl_degrees == o.gl_degrees && self.torus_rank == o.torus_rank
    }
}

#[derive(Clone, Debug)]
pub struct RecursionState<F> {
    pub algebra: Arc<SCAlgebra<F>>,
    pub multiplicities: Vec<usize>,
    pub gl_degrees: Vec<usize>,
    pub torus_rank: usize,
    pub observed: Option<Vec<String>>,
    pub trace: Vec<TraceStep>,
}

/// `dim GL(P, A) = Σ c_i c_j dim e_i A e_j`.
pub fn group_dim<F: Field>(alg: &SCAlgebra<F>, c: &[usize]) -> usize {
    let n = alg.num_vertices();
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| c[i] * c[j] * alg.block(i, j).len()).sum()
}

fn has_w<F: Field>(alg: &SCAlgebra<F>, e: usize) -> bool {
    (0..alg.num_vertices()).any(|j| j != e && !alg.block(e, j).is_empty())
}

/// The lowest vertex `e` with `eAe = k`, `(1-e)Ae = 0`, preferring `eA(1-e) != 0`.
pub fn source_idempotent<F: Field>(alg: &SCAlgebra<F>) -> Result<usize> {
    if alg.peirce().is_none() {
        return Err(Error::NoSourceIdempotent("algebra has no Peirce data".into()));
    }
    let qualifying: Vec<usize> = (0..alg.num_vertices()).filter(|&e| is_split_vertex(alg, e)).collect();
    qualifying
        .iter()
        .copied()
        .find(|&e| has_w(alg, e))
        .or(qualifying.first().copied())
        .ok_or_else(|| Error::NoSourceIdempotent(format!("no vertex of the {}-dimensional algebra qualifies", alg.dim())))
}

impl<F: Field> RecursionState<F> {
    pub fn new(algebra: Arc<SCAlgebra<F>>, multiplicities: Vec<usize>) -> Result<Self> {
        if algebra.peirce().is_none() {
            return Err(Error::InvalidAlgebra("the recursion needs Peirce data".into()));
        }
        if multiplicities.len() != algebra.num_vertices() {
            return Err(Error::DimensionMismatch(format!(
                "{} multiplicities for {} vertices",
                multiplicities.len(),
                algebra.num_vertices()
            )));
        }
        let mut st = RecursionState {
            algebra,
            multiplicities,
            gl_degrees: Vec::new(),
            torus_rank: 0,
            observed: None,
            trace: Vec::new(),
        };
        st.normalize(&mut Vec::new());
        Ok(st)
    }

    pub fn is_terminal(&self) -> bool {
        self.algebra.num_vertices() == 0
    }

    /// Drops vertices outside the support and records isolated vertices as
    /// `GL` factors.
    fn normalize(&mut self, split: &mut Vec<usize>) {
        let support: Vec<usize> = (0..self.algebra.num_vertices()).filter(|&i| self.multiplicities[i] > 0).collect();
        self.restrict(&support);
        let alg = &self.algebra;
        let n = alg.num_vertices();
        let isolated = |i: usize| {
            alg.block(i, i).len() == 1
                && (0..n).all(|j| j == i || (alg.block(i, j).is_empty() && alg.block(j, i).is_empty()))
        };
        let mut keep = Vec::new();
        for i in 0..n {
            if isolated(i) {
                split.push(self.multiplicities[i]);
                self.gl_degrees.push(self.multiplicities[i]);
            } else {
                keep.push(i);
            }
        }
        self.restrict(&keep);
    }

    fn restrict(&mut self, keep: &[usize]) {
        if keep.len() != self.algebra.num_vertices() {
            let (corner, _) = self.algebra.corner(keep);
            self.multiplicities = keep.iter().map(|&i| self.multiplicities[i]).collect();
            self.algebra = Arc::new(corner);
        }
    }
}

/// One reduction step; `None` when the state is already terminal.
pub fn mackey_step<F: Field>(st: &RecursionState<F>, seed: u64, trials: usize) -> Result<Option<RecursionState<F>>> {
    if st.is_terminal() {
        return Ok(None);
    }
    let (alg, opposite) = match source_idempotent(&st.algebra) {
        Ok(e) if has_w(&st.algebra, e) => (st.algebra.clone(), false),
        _ => (Arc::new(st.algebra.opposite()), true),
    };
    let e = source_idempotent(&alg)?;
    if !has_w(&alg, e) {
        return Err(Error::NoSourceIdempotent("no qualifying vertex with W != 0".into()));
    }
    let t = TriangularAlgebra::new(alg.clone(), e)?;
    let c = &st.multiplicities;
    let (w, dec) = generic_element(&t, c, trials, seed)?;
    let gdim = group_dim(&alg, c);
    if dec.end_dim >= gdim {
        return Err(Error::Internal(format!("stabilizer dimension {} is not below {gdim}", dec.end_dim)));
    }
    let mut next = st.clone();
    let torus_split = dec.delta_brick_count();
    next.torus_rank += torus_split;
    if torus_split > 0 {
        match tube_parameters(&t, &w, &dec) {
            Ok(p) => {
                let obs = p
                    .iter()
                    .map(|x| match x {
                        P1Point::Finite(v) => v.to_string(),
                        P1Point::Infinity => "inf".to_string(),
                    })
                    .collect();
                next.observed.get_or_insert_with(Vec::new).extend::<Vec<String>>(obs);
            }
            Err(Error::Unsupported(_)) => {}
            Err(err) => return Err(err),
        }
    }
    let modules: Vec<_> = dec.rigid.iter().map(|s| &s.module).collect();
    let mult: Vec<usize> = dec.rigid.iter().map(|s| s.multiplicity).collect();
    if modules.is_empty() {
        next.algebra = Arc::new(SCAlgebra::from_sparse(0, Vec::new(), Vec::new())?.with_peirce(
            crate::exactalg::Peirce { idempotents: Vec::new(), blocks: Vec::new() },
        )?);
        next.multiplicities = Vec::new();
    } else {
        let b = basic_end_algebra(&modules, &mult)?;
        next.algebra = b.algebra;
        next.multiplicities = b.multiplicities;
    }
    let mut gl_split = Vec::new();
    next.normalize(&mut gl_split);
    next.trace.push(TraceStep {
        vertices: alg.num_vertices(),
        multiplicities: c.clone(),
        split_vertex: e,
        opposite,
        element_space_dim: t.element_space_dim(c),
        group_dim: gdim,
        stabilizer_dim: dec.end_dim,
        decomposition: dec.decomposition_type(),
        torus_split,
        gl_split,
    });
    Ok(Some(next))
}

fn step_seed(seed: u64, k: usize) -> u64 {
    seed.wrapping_add((k as u64).wrapping_mul(0xD1B5_4A32_D192_ED03))
}

/// Runs the recursion to a semisimple algebra.
pub fn fat_signature<F: Field>(
    alg: Arc<SCAlgebra<F>>,
    p: &[usize],
    seed: u64,
    trials: usize,
) -> Result<FatSignature> {
    let mut st = RecursionState::new(alg, p.to_vec())?;
    let initial_split = st.gl_degrees.clone();
    for k in 0..MAX_STEPS {
        match mackey_step(&st, step_seed(seed, k), trials)? {
            Some(next) => st = next,
            None => {
                let mut gl_degrees = st.gl_degrees;
                gl_degrees.sort_unstable();
                let split: usize =
                    initial_split.len() + st.trace.iter().map(|s| s.gl_split.len()).sum::<usize>();
                let torus: usize = st.trace.iter().map(|s| s.torus_split).sum();
                if split != gl_degrees.len() || torus != st.torus_rank {
                    return Err(Error::Internal("trace does not account for the signature".into()));
                }
                if st.trace.iter().any(|s| s.stabilizer_dim >= s.group_dim) {
                    return Err(Error::Internal("group dimension did not drop".into()));
                }
                return Ok(FatSignature {
                    gl_degrees,
                    torus_rank: st.torus_rank,
                    config_space: (st.torus_rank > 0)
                        .then(|| ConfigSpace { m: st.torus_rank, observed: st.observed.clone() }),
                    trace: st.trace,
                });
            }
        }
    }
    Err(Error::Internal(format!("recursion did not terminate in {MAX_STEPS} steps")))
}

/// The signature for the path algebra of `q` over `F`.
pub fn fat_signature_quiver<F: Field>(q: &Quiver, p: &[usize], seed: u64, trials: usize) -> Result<FatSignature> {
    let pa = PathAlgebra::<F>::new(q)?;
    fat_signature(pa.algebra, p, seed, trials)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::algebra::Peirce;
    use crate::exactalg::field::F31;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn sig(name: &str, p: &[usize], seed: u64) -> FatSignature {
        fat_signature_quiver::<F31>(&Quiver::named(name).unwrap(), p, seed, DEFAULT_TRIALS).unwrap()
    }

    #[test]
    fn idempotent_choice() {
        let pa = PathAlgebra::<F31>::new(&Quiver::linear(2)).unwrap();
        assert_eq!(source_idempotent(&pa.algebra).unwrap(), 1);
        assert!(!is_split_vertex(&pa.algebra, 0));
        // k[x]/(x^2)
        let mut table = vec![Vec::new(); 4];
        table[0] = vec![(0, F31::one())];
        table[1] = vec![(1, F31::one())];
        table[2] = vec![(1, F31::one())];
        let dual = SCAlgebra::from_sparse(2, table, vec![F31::one(), F31::zero()])
            .unwrap()
            .with_peirce(Peirce { idempotents: vec![0], blocks: vec![(0, 0), (0, 0)] })
            .unwrap();
        assert!(matches!(source_idempotent(&dual), Err(Error::NoSourceIdempotent(_))));
    }

    #[test]
    fn gcd_signatures() {
        for (m, n) in [(1, 1), (2, 3), (4, 6), (3, 3), (6, 4)] {
            let s = sig("t2", &[m, n], 5);
            assert_eq!(s.gl_degrees, vec![m.gcd(&n)], "({m},{n})");
            assert_eq!(s.torus_rank, 0);
            assert!(s.config_space.is_none());
        }
        let s = sig("t2", &[3, 2], 1);
        let first = &s.trace[0];
        assert_eq!(first.stabilizer_dim, 7);
        assert_eq!(first.group_dim, 4 + 9 + 6);
    }

    #[test]
    fn kronecker_signatures() {
        for n in 1..=3 {
            let s = sig("kronecker", &[n, n], 2);
            assert!(s.gl_degrees.is_empty());
            assert_eq!(s.torus_rank, n);
            let c = s.config_space.unwrap();
            assert_eq!(c.observed.unwrap().len(), n);
        }
    }

    #[test]
    fn semisimple_and_dynkin() {
        let q = Quiver::new(2, vec![]).unwrap();
        let s = fat_signature_quiver::<F31>(&q, &[2, 5], 0, 2).unwrap();
        assert_eq!((s.gl_degrees, s.torus_rank, s.trace.len()), (vec![2, 5], 0, 0));
        for p in [[1, 1, 1], [2, 1, 3], [2, 2, 2]] {
            let s = sig("t3", &p, 9);
            assert_eq!(s.torus_rank, 0);
            for step in &s.trace {
                assert!(step.stabilizer_dim < step.group_dim);
            }
        }
        let s = sig("d4", &[2, 1, 1, 1], 3);
        assert_eq!(s.torus_rank, 0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]
        #[test]
        fn relabeling_invariance(p in proptest::collection::vec(0usize..3, 3), seed in 0u64..100) {
            let q = Quiver::linear(3);
            let perm = vec![2, 0, 1];
            let q2 = q.permute(&perm);
            let mut p2 = vec![0; 3];
            for i in 0..3 {
                p2[perm[i]] = p[i];
            }
            let a = fat_signature_quiver::<F31>(&q, &p, seed, 3).unwrap();
            let b = fat_signature_quiver::<F31>(&q2, &p2, seed + 1, 3).unwrap();
            prop_assert!(a.same_signature(&b));
        }
    }
}
