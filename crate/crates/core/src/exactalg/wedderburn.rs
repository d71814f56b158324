//! Jacobson radical and the split semisimple quotient.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::algebra::SCAlgebra;
use super::field::Field;
use super::matrix::{Matrix, RowEchelon};
use super::poly;
use crate::error::{Error, Result};

const SPLIT_ATTEMPTS: usize = 40;

/// Basis of the Jacobson radical, as coordinate vectors.
///
/// Uses the trace form when the characteristic is 0 or exceeds the dimension.
/// Otherwise the algebra must carry Peirce data with local vertex corners, and
/// the radical is assembled blockwise; the result is checked to be a nilpotent
/// ideal of codimension equal to the number of vertices.
pub fn radical<F: Field>(alg: &SCAlgebra<F>) -> Result<Vec<Vec<F>>> {
    let n = alg.dim();
    let p = F::characteristic();
    let by_trace = p == 0 || p as u128 > n as u128;
    let rad = if by_trace {
        trace_radical(alg)
    } else if alg.peirce().is_some() {
        peirce_radical(alg)?
    } else {
        return Err(Error::Unsupported(format!(
            "radical in characteristic {p} for an algebra of dimension {n} without Peirce data"
        )));
    };
    if !is_nilpotent_span(alg, &rad) {
        return Err(if by_trace {
            Error::Internal("trace-form radical is not nilpotent".into())
        } else {
            Error::Unsupported(format!("radical in characteristic {p} of a non-basic algebra"))
        });
    }
    Ok(rad)
}

fn trace_radical<F: Field>(alg: &SCAlgebra<F>) -> Vec<Vec<F>> {
    let n = alg.dim();
    let tr: Vec<F> = (0..n)
        .map(|k| {
            (0..n).fold(F::zero(), |acc, j| {
                let c = alg
                    .product(k, j)
                    .iter()
                    .find(|(i, _)| *i == j)
                    .map(|(_, c)| c.clone())
                    .unwrap_or_else(F::zero);
                acc + c
            })
        })
        .collect();
    let form = Matrix::from_fn(n, n, |i, j| {
        alg.product(i, j)
            .iter()
            .fold(F::zero(), |acc, (k, c)| acc + c.clone() * tr[*k].clone())
    });
    form.kernel()
}

fn peirce_radical<F: Field>(alg: &SCAlgebra<F>) -> Result<Vec<Vec<F>>> {
    let p = alg.peirce().unwrap();
    let mut rad = Vec::new();
    for b in 0..alg.dim() {
        let (l, r) = p.blocks[b];
        if l != r {
            rad.push(alg.basis_vector(b));
            continue;
        }
        let e = p.idempotents[l];
        if b == e {
            continue;
        }
        let corner = alg.block(l, l);
        let lm = Matrix::from_fn(corner.len(), corner.len(), |i, j| {
            alg.product(b, corner[j])
                .iter()
                .find(|(k, _)| *k == corner[i])
                .map(|(_, c)| c.clone())
                .unwrap_or_else(F::zero)
        });
        let cp = lm.charpoly();
        let roots = F::roots(&cp);
        if roots.len() != 1 || poly::root_multiplicity(&cp, &roots[0]) != corner.len() {
            return Err(Error::OutsideClass(format!("vertex corner {l} is not local")));
        }
        let mut v = alg.basis_vector(b);
        v[e] = v[e].clone() - roots[0].clone();
        rad.push(v);
    }
    if alg.dim() - rad.len() != p.idempotents.len() {
        return Err(Error::Internal("radical has wrong codimension".into()));
    }
    Ok(rad)
}

fn span_basis<F: Field>(n: usize, vs: impl IntoIterator<Item = Vec<F>>) -> Vec<Vec<F>> {
    let mut ech = RowEchelon::new(n);
    let mut out = Vec::new();
    for v in vs {
        if ech.push(v.clone()) {
            out.push(v);
        }
    }
    out
}

fn is_nilpotent_span<F: Field>(alg: &SCAlgebra<F>, r: &[Vec<F>]) -> bool {
    let n = alg.dim();
    let mut pw: Vec<Vec<F>> = r.to_vec();
    for _ in 0..=n {
        if pw.is_empty() {
            return true;
        }
        let prods: Vec<Vec<F>> = pw
            .iter()
            .flat_map(|x| r.iter().map(move |y| alg.mul(x, y)))
            .collect();
        let next = span_basis(n, prods);
        if next.len() >= pw.len() {
            return false;
        }
        pw = next;
    }
    pw.is_empty()
}

/// One simple component `Mat_d(k)` of `A / rad A`.
#[derive(Clone, Debug)]
pub struct SimpleComponent<F> {
    pub degree: usize,
    /// An idempotent of `A` lifting the component's identity.
    pub idempotent: Vec<F>,
    /// A primitive idempotent of `A` inside it.
    pub primitive_idempotent: Vec<F>,
}

#[derive(Clone, Debug)]
pub struct WedderburnData<F> {
    pub radical: Vec<Vec<F>>,
    pub components: Vec<SimpleComponent<F>>,
    /// Central primitive idempotents of `A` (one per block).
    pub central_idempotents: Vec<Vec<F>>,
}

impl<F: Field> WedderburnData<F> {
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.components.iter().map(|c| c.degree).collect();
        d.sort();
        d
    }
}

/// Lifts an idempotent modulo a nilpotent ideal by `e <- 3e^2 - 2e^3`.
fn lift_idempotent<F: Field>(alg: &SCAlgebra<F>, x: &[F]) -> Result<Vec<F>> {
    let mut e = x.to_vec();
    let three = F::from_i64(3);
    let two = F::from_i64(2);
    for _ in 0..64 {
        let e2 = alg.mul(&e, &e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = alg.mul(&e2, &e);
        e = e2
            .iter()
            .zip(&e3)
            .map(|(a, b)| three.clone() * a.clone() - two.clone() * b.clone())
            .collect();
    }
    Err(Error::Internal("idempotent lifting did not converge".into()))
}

fn center<F: Field>(alg: &SCAlgebra<F>) -> Vec<Vec<F>> {
    let n = alg.dim();
    let mut sys = RowEchelon::new(n);
    for b in 0..n {
        // x b - b x = 0 as equations in the coordinates of x
        let m = alg.right_mult(&alg.basis_vector(b)).sub(&alg.left_mult(&alg.basis_vector(b)));
        for r in 0..n {
            sys.push(m.row(r).to_vec());
        }
    }
    sys.kernel()
}

/// Splits a commutative semisimple subalgebra with basis `z` into primitive
/// idempotents, Lagrange interpolation on a random element.
fn split_commutative<F: Field>(
    alg: &SCAlgebra<F>,
    z: &[Vec<F>],
    unit: &[F],
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Vec<F>>> {
    let t = z.len();
    if t <= 1 {
        return Ok(vec![unit.to_vec()]);
    }
    let zm = Matrix::from_columns(alg.dim(), z);
    for _ in 0..SPLIT_ATTEMPTS {
        let coeffs: Vec<F> = (0..t).map(|_| F::random(rng)).collect();
        let x = zm.mul_vec(&coeffs);
        let cols: Vec<Vec<F>> = z.iter().map(|v| alg.mul(&x, v)).collect();
        let Some(lx) = zm.solve_matrix(&Matrix::from_columns(alg.dim(), &cols)) else {
            return Err(Error::Internal("center is not closed under products".into()));
        };
        let roots = F::roots(&lx.charpoly());
        if roots.len() < t {
            continue;
        }
        return Ok(roots
            .iter()
            .map(|lam| lagrange(alg, &x, unit, lam, &roots))
            .collect());
    }
    Err(Error::NotSplit("center does not split into distinct eigenvalues".into()))
}

fn lagrange<F: Field>(alg: &SCAlgebra<F>, x: &[F], unit: &[F], lam: &F, roots: &[F]) -> Vec<F> {
    let mut acc = unit.to_vec();
    for mu in roots.iter().filter(|m| *m != lam) {
        let inv = (lam.clone() - mu.clone()).inv().unwrap();
        let factor: Vec<F> = x
            .iter()
            .zip(unit)
            .map(|(a, u)| (a.clone() - mu.clone() * u.clone()) * inv.clone())
            .collect();
        acc = alg.mul(&acc, &factor);
    }
    acc
}

/// Quotient `A / R` on a complement of coordinate vectors; returns the
/// quotient algebra and the lift of quotient basis element `j` to `A`.
fn quotient<F: Field>(alg: &SCAlgebra<F>, r: &[Vec<F>]) -> Result<(SCAlgebra<F>, Vec<Vec<F>>, Matrix<F>)> {
    let n = alg.dim();
    let mut ech = RowEchelon::new(n);
    for v in r {
        ech.push(v.clone());
    }
    let mut lifts = Vec::new();
    for i in 0..n {
        let e = alg.basis_vector(i);
        if ech.push(e.clone()) {
            lifts.push(e);
        }
    }
    let mut cols: Vec<Vec<F>> = r.to_vec();
    cols.extend(lifts.iter().cloned());
    let inv = Matrix::from_columns(n, &cols)
        .inverse()
        .ok_or_else(|| Error::Internal("radical complement is singular".into()))?;
    let k = r.len();
    let m = lifts.len();
    let proj = Matrix::from_fn(m, n, |i, j| inv[(k + i, j)].clone());
    let unit = proj.mul_vec(alg.unit());
    let q = SCAlgebra::from_fn(m, unit, |i, j| proj.mul_vec(&alg.mul(&lifts[i], &lifts[j])))?;
    Ok((q, lifts, proj))
}

/// Radical, split simple components and central primitive idempotents.
pub fn wedderburn<F: Field>(alg: &SCAlgebra<F>, seed: u64) -> Result<WedderburnData<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = alg.dim();
    let rad = radical(alg)?;
    let (q, lifts, proj) = quotient(alg, &rad)?;
    let lift = |v: &[F]| -> Vec<F> {
        let mut out = vec![F::zero(); n];
        for (j, c) in v.iter().enumerate() {
            for (i, x) in lifts[j].iter().enumerate() {
                out[i] = out[i].clone() + c.clone() * x.clone();
            }
        }
        out
    };
    let zq = center(&q);
    let central_q = split_commutative(&q, &zq, q.unit(), &mut rng)?;
    let mut components = Vec::new();
    for eps in &central_q {
        let block = q.left_mult(eps).column_space();
        let b = block.cols();
        let d = (1..=b).find(|d| d * d >= b).unwrap_or(0);
        if d * d != b {
            return Err(Error::NotSplit(format!("simple component of dimension {b} is not a matrix algebra")));
        }
        let prim = if d == 1 {
            eps.clone()
        } else {
            primitive_in_block(&q, eps, d, &mut rng)?
        };
        components.push(SimpleComponent {
            degree: d,
            idempotent: lift_idempotent(alg, &lift(eps))?,
            primitive_idempotent: lift_idempotent(alg, &lift(&prim))?,
        });
    }
    let central = central_idempotents(alg, &central_q, &proj, &lift)?;
    let total: usize = components.iter().map(|c| c.degree * c.degree).sum::<usize>() + rad.len();
    if total != n {
        return Err(Error::Internal("Wedderburn dimensions do not add up".into()));
    }
    Ok(WedderburnData { radical: rad, components, central_idempotents: central })
}

fn eval_in_corner<F: Field>(q: &SCAlgebra<F>, p: &[F], y: &[F], unit: &[F]) -> Vec<F> {
    let mut acc = vec![F::zero(); q.dim()];
    for c in p.iter().rev() {
        acc = q.mul(&acc, y);
        for (a, u) in acc.iter_mut().zip(unit) {
            *a = a.clone() + c.clone() * u.clone();
        }
    }
    acc
}

/// Degree of an idempotent inside a split simple block: `sqrt(dim eQe)`.
fn idempotent_rank<F: Field>(q: &SCAlgebra<F>, e: &[F]) -> usize {
    let cols: Vec<Vec<F>> = (0..q.dim())
        .map(|b| q.mul(&q.mul(e, &q.basis_vector(b)), e))
        .collect();
    let d = Matrix::from_columns(q.dim(), &cols).rank();
    (0..=d).find(|r| r * r >= d).unwrap_or(0)
}

/// Refines the block identity to a primitive idempotent by Fitting splittings
/// of corner elements with an eigenvalue in the field. Basis elements are tried
/// before random ones, since they are often matrix units.
fn primitive_in_block<F: Field>(
    q: &SCAlgebra<F>,
    eps: &[F],
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<F>> {
    let m = q.dim();
    let mut f = eps.to_vec();
    let mut r = d;
    'outer: while r > 1 {
        let basis_candidates = (0..m).map(|b| q.basis_vector(b));
        let random_candidates: Vec<Vec<F>> = (0..SPLIT_ATTEMPTS)
            .map(|_| (0..m).map(|_| F::random(rng)).collect())
            .collect();
        for cand in basis_candidates.chain(random_candidates) {
            let x = q.mul(&q.mul(&f, &cand), &f);
            let cp = q.left_mult(&x).charpoly();
            for lam in F::roots(&cp) {
                let y: Vec<F> = x.iter().zip(&f).map(|(a, e)| a.clone() - lam.clone() * e.clone()).collect();
                let py = q.left_mult(&y).charpoly();
                let k = py.iter().take_while(|c| c.is_zero()).count();
                let g: Vec<F> = py[k..].to_vec();
                let mut tk = vec![F::zero(); k];
                tk.push(F::one());
                let (_, _, t) = poly::ext_gcd(&tk, &g);
                let e1 = eval_in_corner(q, &poly::mul(&t, &g), &y, &f);
                if e1.iter().all(|c| c.is_zero()) || e1 == f || q.mul(&e1, &e1) != e1 {
                    continue;
                }
                let r1 = idempotent_rank(q, &e1);
                let (next, rn) = if 2 * r1 <= r {
                    (e1, r1)
                } else {
                    let comp: Vec<F> = f.iter().zip(&e1).map(|(a, b)| a.clone() - b.clone()).collect();
                    (comp, r - r1)
                };
                f = next;
                r = rn;
                continue 'outer;
            }
        }
        return Err(Error::NotSplit("no split corner element in a simple block".into()));
    }
    Ok(f)
}

/// Groups simple components into blocks of `A` and lifts each block idempotent
/// into the center of `A`.
fn central_idempotents<F: Field>(
    alg: &SCAlgebra<F>,
    central_q: &[Vec<F>],
    proj: &Matrix<F>,
    lift: &dyn Fn(&[F]) -> Vec<F>,
) -> Result<Vec<Vec<F>>> {
    let k = central_q.len();
    let lifted: Vec<Vec<F>> = central_q
        .iter()
        .map(|e| lift_idempotent(alg, &lift(e)))
        .collect::<Result<_>>()?;
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let linked = (0..alg.dim()).any(|b| {
                let y = alg.mul(&alg.mul(&lifted[i], &alg.basis_vector(b)), &lifted[j]);
                y.iter().any(|c| !c.is_zero())
            });
            if linked {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let z = center(alg);
    let zm = Matrix::from_columns(alg.dim(), &z);
    let pz = proj.mul(&zm);
    let mut out = Vec::new();
    for root in 0..k {
        if find(&mut parent, root) != root {
            continue;
        }
        let m = proj.rows();
        let mut target = vec![F::zero(); m];
        for i in (0..k).filter(|&i| find(&mut parent, i) == root) {
            for (t, c) in target.iter_mut().zip(&central_q[i]) {
                *t = t.clone() + c.clone();
            }
        }
        let coeffs = pz
            .solve(&target)
            .ok_or_else(|| Error::Internal("block idempotent has no central lift".into()))?;
        out.push(lift_idempotent(alg, &zm.mul_vec(&coeffs))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::algebra::Peirce;
    use crate::exactalg::field::{Rational, F2, F31};

    fn t2<F: Field>() -> SCAlgebra<F> {
        SCAlgebra::from_fn(3, vec![F::one(), F::one(), F::zero()], |i, j| {
            let mut v = vec![F::zero(); 3];
            match (i, j) {
                (0, 0) => v[0] = F::one(),
                (1, 1) => v[1] = F::one(),
                (0, 2) | (2, 1) => v[2] = F::one(),
                _ => {}
            }
            v
        })
        .unwrap()
        .with_peirce(Peirce { idempotents: vec![0, 1], blocks: vec![(0, 0), (1, 1), (0, 1)] })
        .unwrap()
    }

    #[test]
    fn triangular_radical() {
        let a = t2::<Rational>();
        let w = wedderburn(&a, 1).unwrap();
        assert_eq!(w.radical.len(), 1);
        assert_eq!(w.degrees(), vec![1, 1]);
        assert_eq!(w.central_idempotents.len(), 1);
        let r2 = radical(&t2::<F2>()).unwrap();
        assert_eq!(r2, vec![vec![F2::zero(), F2::zero(), F2::one()]]);
    }

    #[test]
    fn block_matrix_algebra_components() {
        let a = t2::<F31>();
        let e = a.block_matrix_algebra(&[2, 3]).unwrap();
        let w = wedderburn(&e, 7).unwrap();
        assert_eq!(w.degrees(), vec![2, 3]);
        assert_eq!(w.radical.len(), 6);
        let m = SCAlgebra::<Rational>::matrix_algebra(3);
        let wm = wedderburn(&m, 3).unwrap();
        assert_eq!(wm.degrees(), vec![3]);
        let p = &wm.components[0].primitive_idempotent;
        assert_eq!(m.left_mult(p).rank(), 3);
    }

    #[test]
    fn disconnected_blocks() {
        // k x k as the diagonal of Mat_2
        let a = SCAlgebra::<Rational>::from_fn(2, vec![Rational::one(), Rational::one()], |i, j| {
            let mut v = vec![Rational::zero(); 2];
            if i == j {
                v[i] = Rational::one();
            }
            v
        })
        .unwrap();
        let w = wedderburn(&a, 0).unwrap();
        assert_eq!(w.central_idempotents.len(), 2);
        assert_eq!(w.degrees(), vec![1, 1]);
    }
}
