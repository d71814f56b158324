//! Positive roots, the Coxeter matrix and the defect trichotomy.

use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, Rational};
use crate::forms::{as_signed, delta, quiver_form, DimVector, FormMatrix};
use crate::quiver::{classify, GraphTag, Quiver};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootKind {
    Real,
    Imaginary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub d: DimVector,
    pub kind: RootKind,
    /// `<δ, d>`; `None` on Dynkin quivers, which have no null root.
    pub defect: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootClass {
    Preprojective,
    Regular,
    Preinjective,
}

/// Integer matrix acting on dimension vectors as `Φ d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    pub entries: Vec<Vec<i64>>,
    pub inverse: Vec<Vec<i64>>,
}

fn apply(m: &[Vec<i64>], d: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(d).map(|(a, b)| a * b).sum()).collect()
}

impl CoxeterMatrix {
    pub fn apply(&self, d: &[i64]) -> Vec<i64> {
        apply(&self.entries, d)
    }

    pub fn apply_inverse(&self, d: &[i64]) -> Vec<i64> {
        apply(&self.inverse, d)
    }

    pub fn pow(&self, k: u32) -> Vec<Vec<i64>> {
        let n = self.entries.len();
        let mut acc: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
        for _ in 0..k {
            acc = (0..n)
                .map(|i| (0..n).map(|j| (0..n).map(|l| self.entries[i][l] * acc[l][j]).sum()).collect())
                .collect();
        }
        acc
    }
}

fn to_rational(m: &[Vec<i64>]) -> Matrix<Rational> {
    let n = m.len();
    Matrix::from_fn(n, n, |i, j| Rational::from_i64(m[i][j]))
}

fn to_integer(m: &Matrix<Rational>) -> Result<Vec<Vec<i64>>> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| {
                    let x = &m[(i, j)];
                    if !x.denom().is_one() {
                        return Err(Error::Internal("Coxeter matrix is not integral".into()));
                    }
                    i64::try_from(x.numer()).map_err(|_| Error::Internal("Coxeter entry overflow".into()))
                })
                .collect()
        })
        .collect()
}

/// `Φ = -E⁻¹ Eᵀ`. Fails when `E` is singular (oriented cycles).
pub fn coxeter(q: &Quiver) -> Result<CoxeterMatrix> {
    let e = quiver_form(q);
    let em = to_rational(&e.entries);
    let inv = em
        .inverse()
        .ok_or_else(|| Error::InvalidQuiver("Euler form is singular; the quiver has an oriented cycle".into()))?;
    let et = to_rational(&e.transpose().entries);
    let phi = inv.mul(&et).neg();
    // Φ⁻¹ = -(Eᵀ)⁻¹ E
    let phi_inv = et.inverse().unwrap().mul(&em).neg();
    Ok(CoxeterMatrix { entries: to_integer(&phi)?, inverse: to_integer(&phi_inv)? })
}

/// All nonzero `d` in `[0, bound]^n` with `Q(d) ∈ {0, 1}`, in lexicographic order.
pub fn positive_roots(q: &Quiver, bound: u64) -> Result<Vec<Root>> {
    let class = classify(q)?;
    let null = match class.tag {
        GraphTag::Wild => return Err(Error::OutsideClass("root enumeration needs a Dynkin or Euclidean quiver".into())),
        GraphTag::Dynkin(_) => None,
        GraphTag::Euclidean(_) => Some(as_signed(&delta(q)?)),
    };
    let f = quiver_form(q);
    let n = q.vertex_count();
    let mut roots: Vec<Root> = (0..=bound)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut found = Vec::new();
            let mut v = vec![0u64; n];
            v[0] = first;
            loop {
                if let Some(r) = make_root(&f, null.as_deref(), &v) {
                    found.push(r);
                }
                // odometer over coordinates 1..n
                let mut i = n;
                loop {
                    if i == 1 {
                        return found.into_iter();
                    }
                    i -= 1;
                    if v[i] < bound {
                        v[i] += 1;
                        break;
                    }
                    v[i] = 0;
                }
            }
        })
        .collect();
    roots.sort_by(|a, b| a.d.cmp(&b.d));
    Ok(roots)
}

fn make_root(f: &FormMatrix, null: Option<&[i64]>, d: &[u64]) -> Option<Root> {
    if d.iter().all(|&x| x == 0) {
        return None;
    }
    let di = as_signed(d);
    let kind = match f.quadratic(&di) {
        1 => RootKind::Real,
        0 => RootKind::Imaginary,
        _ => return None,
    };
    Some(Root { d: d.to_vec(), kind, defect: null.map(|z| f.bilinear(z, &di)) })
}

/// Defect `<δ, d>` on a Euclidean quiver.
pub fn defect(q: &Quiver, d: &[i64]) -> Result<i64> {
    let z = as_signed(&delta(q)?);
    Ok(quiver_form(q).bilinear(&z, d))
}

/// Sign of the defect: negative is preprojective, positive preinjective.
pub fn classify_root(q: &Quiver, d: &[u64]) -> Result<RootClass> {
    let z = as_signed(&delta(q)?);
    let f = quiver_form(q);
    match make_root(&f, Some(&z), d) {
        None => Err(Error::OutsideClass(format!("{d:?} is not a positive root"))),
        Some(r) => Ok(match r.defect.unwrap() {
            x if x < 0 => RootClass::Preprojective,
            0 => RootClass::Regular,
            _ => RootClass::Preinjective,
        }),
    }
}
