//! `Ext^1` as relative Hochschild cohomology: derivations vanishing on the
//! vertex idempotents modulo inner ones.
//!
//! Needs an algebra with Peirce data whose non-idempotent basis elements span
//! the radical (a split basic algebra) and graded modules. No projective
//! resolution is involved, so this is an independent check on the
//! resolution-based counts.

use std::collections::HashMap;

use super::field::Field;
use super::matrix::RowEchelon;
use super::module::{hom_dim, SCModule};
use crate::error::{Error, Result};

pub fn ext1_by_derivations<F: Field>(m: &SCModule<F>, n: &SCModule<F>) -> Result<usize> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    let alg = m.algebra();
    let peirce = alg
        .peirce()
        .ok_or_else(|| Error::Unsupported("derivation Ext needs Peirce data".into()))?;
    if m.grading().is_none() || n.grading().is_none() {
        return Err(Error::InvalidModule("derivation Ext needs graded modules".into()));
    }
    let idem = &peirce.idempotents;
    let rad: Vec<usize> = (0..alg.dim()).filter(|b| !idem.contains(b)).collect();
    let mb: Vec<Vec<usize>> = (0..alg.num_vertices()).map(|v| m.vertex_basis(v)).collect();
    let nb: Vec<Vec<usize>> = (0..alg.num_vertices()).map(|v| n.vertex_basis(v)).collect();

    // unknown (b, y, x): entry of D_b from basis vector x of M to y of N
    let mut index: HashMap<(usize, usize, usize), usize> = HashMap::new();
    for &b in &rad {
        let (t, s) = alg.block_of(b);
        for &y in &nb[t] {
            for &x in &mb[s] {
                let k = index.len();
                index.insert((b, y, x), k);
            }
        }
    }
    let unknowns = index.len();
    let mut sys = RowEchelon::new(unknowns);
    for &b in &rad {
        let (t, mid) = alg.block_of(b);
        for &b2 in &rad {
            let (mid2, s) = alg.block_of(b2);
            if mid != mid2 {
                continue;
            }
            // D(b b2) - b D(b2) - D(b) b2 = 0 on e_s M -> e_t N
            let nact = n.action(b);
            let mact = m.action(b2);
            for &y in &nb[t] {
                for &x in &mb[s] {
                    let mut row: Vec<(usize, F)> = Vec::new();
                    for (k, c) in alg.product(b, b2) {
                        if let Some(&u) = index.get(&(*k, y, x)) {
                            row.push((u, c.clone()));
                        }
                    }
                    for &y2 in &nb[mid] {
                        let c = &nact[(y, y2)];
                        if !c.is_zero() {
                            row.push((index[&(b2, y2, x)], -c.clone()));
                        }
                    }
                    for &x2 in &mb[mid] {
                        let c = &mact[(x2, x)];
                        if !c.is_zero() {
                            row.push((index[&(b, y, x2)], -c.clone()));
                        }
                    }
                    sys.push_sparse(&row);
                }
            }
        }
    }
    let der = unknowns - sys.rank();
    let hom_e: usize = (0..alg.num_vertices()).map(|v| mb[v].len() * nb[v].len()).sum();
    let inner = hom_e - hom_dim(m, n)?;
    Ok(der - inner)
}
