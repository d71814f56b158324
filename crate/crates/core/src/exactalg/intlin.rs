//! Integer lattice kernels by unimodular column reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A Z-basis of `{x in Z^n : A x = 0}` for an integer `m x n` matrix.
pub fn integer_kernel(a: &[Vec<i64>], n: usize) -> Vec<Vec<BigInt>> {
    let m = a.len();
    let mut cols: Vec<Vec<BigInt>> = (0..n)
        .map(|j| (0..m).map(|i| BigInt::from(a[i][j])).collect())
        .collect();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|j| (0..n).map(|i| BigInt::from((i == j) as i64)).collect())
        .collect();
    let mut k = 0;
    for i in 0..m {
        if k == n {
            break;
        }
        loop {
            let best = (k..n)
                .filter(|&j| !cols[j][i].is_zero())
                .min_by_key(|&j| cols[j][i].abs());
            let Some(b) = best else { break };
            cols.swap(k, b);
            u.swap(k, b);
            let mut done = true;
            for j in k + 1..n {
                if cols[j][i].is_zero() {
                    continue;
                }
                let q = cols[j][i].div_floor(&cols[k][i]);
                let ck = cols[k].clone();
                let uk = u[k].clone();
                for (x, y) in cols[j].iter_mut().zip(&ck) {
                    *x -= &q * y;
                }
                for (x, y) in u[j].iter_mut().zip(&uk) {
                    *x -= &q * y;
                }
                if !cols[j][i].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !cols[k][i].is_zero() {
            k += 1;
        }
    }
    u.drain(k..).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_kernel() {
        // symmetrised form of the Kronecker quiver: [[2,-2],[-2,2]]
        let k = integer_kernel(&[vec![2, -2], vec![-2, 2]], 2);
        assert_eq!(k.len(), 1);
        let v: Vec<i64> = k[0].iter().map(|x| x.try_into().unwrap()).collect();
        assert!(v == vec![1, 1] || v == vec![-1, -1]);
    }

    #[test]
    fn lattice_not_just_rational() {
        // x + 2y + 3z = 0 has a rank 2 lattice kernel
        let k = integer_kernel(&[vec![1, 2, 3]], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s: BigInt = &v[0] + &v[1] * 2 + &v[2] * 3;
            assert!(s.is_zero());
        }
        // the basis generates (-2, 1, 0): solve over the 2x2 minor
        let det = &k[0][1] * &k[1][2] - &k[0][2] * &k[1][1];
        assert_eq!(det.abs(), BigInt::from(1));
    }
}
