//! Euler/Tits forms of quivers and of bimodule problems, and the null root.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactalg::intlin::integer_kernel;
use crate::quiver::{classify, Quiver};

/// Non-negative coordinates, one per vertex.
pub type DimVector = Vec<u64>;

/// `E[i][j] = δ_ij - #(arrows i -> j)`, so `<d, e> = dᵀ E e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl FormMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn bilinear(&self, d: &[i64], e: &[i64]) -> i64 {
        assert_eq!(d.len(), self.size(), "dimension vector length");
        assert_eq!(e.len(), self.size(), "dimension vector length");
        let mut acc: i128 = 0;
        for (i, row) in self.entries.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                acc += d[i] as i128 * x as i128 * e[j] as i128;
            }
        }
        i64::try_from(acc).expect("form value overflows i64")
    }

    pub fn quadratic(&self, d: &[i64]) -> i64 {
        self.bilinear(d, d)
    }

    /// `E + Eᵀ`.
    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| self.entries[i][j] + self.entries[j][i]).collect())
            .collect()
    }

    pub fn transpose(&self) -> FormMatrix {
        let n = self.size();
        FormMatrix { entries: (0..n).map(|i| (0..n).map(|j| self.entries[j][i]).collect()).collect() }
    }
}

pub fn quiver_form(q: &Quiver) -> FormMatrix {
    let n = q.vertex_count();
    let mut entries = vec![vec![0i64; n]; n];
    for (i, row) in entries.iter_mut().enumerate() {
        row[i] = 1;
    }
    for &(s, t) in q.arrows() {
        entries[s][t] -= 1;
    }
    FormMatrix { entries }
}

pub fn as_signed(d: &[u64]) -> Vec<i64> {
    d.iter().map(|&x| i64::try_from(x).expect("coordinate overflows i64")).collect()
}

pub fn tits_quadratic(f: &FormMatrix, d: &[u64]) -> i64 {
    f.quadratic(&as_signed(d))
}

/// `<d, e>` straight from the arrow sum, independent of [`quiver_form`].
pub fn euler_by_arrows(q: &Quiver, d: &[i64], e: &[i64]) -> i64 {
    let diag: i64 = d.iter().zip(e).map(|(a, b)| a * b).sum();
    let arrows: i64 = q.arrows().iter().map(|&(s, t)| d[s] * e[t]).sum();
    diag - arrows
}

/// The primitive positive generator of the radical of the symmetrised form.
pub fn delta(q: &Quiver) -> Result<DimVector> {
    let class = classify(q).map_err(|e| match e {
        Error::Disconnected => Error::NoNullRoot("quiver is disconnected".into()),
        other => other,
    })?;
    if !class.is_euclidean() {
        return Err(Error::NoNullRoot(format!("{} has no null root", class.tag)));
    }
    let f = quiver_form(q);
    let kernel = integer_kernel(&f.symmetrized(), q.vertex_count());
    if kernel.len() != 1 {
        return Err(Error::Internal(format!("radical has rank {}", kernel.len())));
    }
    let mut v = kernel.into_iter().next().unwrap();
    let g = v.iter().fold(num_bigint::BigInt::zero(), |g, x| g.gcd(x));
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
    if v.iter().any(|x| x.is_negative()) {
        for x in v.iter_mut() {
            *x = -&*x;
        }
    }
    if v.iter().any(|x| !x.is_positive()) {
        return Err(Error::Internal("null root is not sincere".into()));
    }
    Ok(v.iter().map(|x| x.to_u64().unwrap()).collect())
}

/// The dimensions entering the Tits form of a bimodule problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BimoduleDims {
    pub hom1: u64,
    pub hom2: u64,
    pub w: u64,
}

/// `dim Hom(P1, P1') + dim Hom(P2, P2') - dim W(P2, P1')`.
pub fn bimodule_tits(d: BimoduleDims) -> i64 {
    d.hom1 as i64 + d.hom2 as i64 - d.w as i64
}

pub fn euler_form_module(hom_dim: u64, ext1_dim: u64) -> i64 {
    hom_dim as i64 - ext1_dim as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn form_matrices() {
        assert_eq!(quiver_form(&Quiver::linear(1)).entries, vec![vec![1]]);
        assert_eq!(quiver_form(&Quiver::kronecker()).entries, vec![vec![1, -2], vec![0, 1]]);
        let a2t = Quiver::named("a2tilde").unwrap();
        assert_eq!(
            quiver_form(&a2t).entries,
            vec![vec![1, -1, -1], vec![0, 1, -1], vec![0, 0, 1]]
        );
    }

    #[test]
    fn kronecker_values() {
        let f = quiver_form(&Quiver::kronecker());
        assert_eq!(tits_quadratic(&f, &[1, 1]), 0);
        assert_eq!(tits_quadratic(&f, &[1, 0]), 1);
        // 4 + 4 - 2*2*2
        assert_eq!(tits_quadratic(&f, &[2, 2]), 0);
    }

    /// Null root oracle: a sincere vector in the radical with no common factor.
    fn check_null_root(q: &Quiver, d: &[u64]) {
        let f = quiver_form(q);
        let s = f.symmetrized();
        let di = as_signed(d);
        for row in &s {
            assert_eq!(row.iter().zip(&di).map(|(a, b)| a * b).sum::<i64>(), 0);
        }
        assert_eq!(tits_quadratic(&f, d), 0);
        assert_eq!(d.iter().fold(0u64, |g, &x| g.gcd(&x)), 1);
    }

    #[test]
    fn null_roots() {
        let k = Quiver::kronecker();
        assert_eq!(delta(&k).unwrap(), vec![1, 1]);
        let a2t = Quiver::named("a2tilde").unwrap();
        assert_eq!(delta(&a2t).unwrap(), vec![1, 1, 1]);
        let d4t = Quiver::named("d4tilde").unwrap();
        assert_eq!(delta(&d4t).unwrap(), vec![2, 1, 1, 1, 1]);
        for name in ["e6tilde", "e7tilde", "e8tilde"] {
            let q = Quiver::named(name).unwrap();
            let d = delta(&q).unwrap();
            check_null_root(&q, &d);
            // the branch vertex carries the largest coordinate
            assert_eq!(d[0], *d.iter().max().unwrap(), "{name}");
        }
        check_null_root(&k, &[1, 1]);
        assert!(matches!(delta(&Quiver::linear(3)), Err(Error::NoNullRoot(_))));
        let wild = Quiver::new(2, vec![(0, 1); 3]).unwrap();
        assert!(matches!(delta(&wild), Err(Error::NoNullRoot(_))));
    }

    #[test]
    fn bimodule_and_module_forms() {
        // T2 at (2,3): 4 + 9 - 6
        assert_eq!(bimodule_tits(BimoduleDims { hom1: 4, hom2: 9, w: 6 }), 7);
        assert_eq!(bimodule_tits(BimoduleDims { hom1: 2, hom2: 5, w: 0 }), 7);
        assert_eq!(bimodule_tits(BimoduleDims { hom1: 1, hom2: 1, w: 2 }), 0);
        assert_eq!(euler_form_module(1, 0), 1);
        assert_eq!(euler_form_module(1, 1), 0);
        assert_eq!(euler_form_module(7, 0), 7);
    }

    /// Every nonzero vector in the box, for `n` vertices and radius `r`.
    fn for_box(n: usize, r: i64, mut f: impl FnMut(&[i64])) {
        let mut v = vec![-r; n];
        loop {
            if v.iter().any(|&x| x != 0) {
                f(&v);
            }
            let mut i = 0;
            while i < n && v[i] == r {
                v[i] = -r;
                i += 1;
            }
            if i == n {
                return;
            }
            v[i] += 1;
        }
    }

    #[test]
    fn definiteness_matches_classification() {
        // radius shrinks with the vertex count to keep the box enumerable
        for name in ["a1", "t3", "kronecker", "a2tilde", "d4", "d4tilde", "a5", "e6", "e6tilde"] {
            let q = Quiver::named(name).unwrap();
            let f = quiver_form(&q);
            let n = q.vertex_count();
            let r = match n { 1..=3 => 6, 4..=5 => 3, _ => 1 };
            let class = classify(&q).unwrap();
            let mut min = i64::MAX;
            let mut kernel = 0;
            for_box(n, r, |v| {
                let x = f.quadratic(v);
                min = min.min(x);
                if x == 0 && v.iter().all(|&c| c >= 0) && v.iter().fold(0i64, |g, &c| g.gcd(&c)) == 1 {
                    kernel += 1;
                }
            });
            if class.is_dynkin() {
                assert!(min > 0, "{name}");
            } else {
                assert!(min >= 0, "{name}");
                let d = delta(&q).unwrap();
                if d.iter().all(|&c| c as i64 <= r) {
                    assert_eq!(kernel, 1, "{name}");
                }
            }
        }
        // a wild diagram is indefinite
        let wild = Quiver::new(2, vec![(0, 1); 3]).unwrap();
        assert!(quiver_form(&wild).quadratic(&[1, 1]) < 0);
    }

    proptest! {
        #[test]
        fn matrix_agrees_with_arrow_sum(
            arrows in proptest::collection::vec((0usize..5, 0usize..5), 0..10),
            d in proptest::collection::vec(-5i64..6, 5),
            e in proptest::collection::vec(-5i64..6, 5),
        ) {
            let arrows: Vec<_> = arrows.into_iter().filter(|(s, t)| s != t).collect();
            let q = Quiver::new(5, arrows).unwrap();
            prop_assert_eq!(quiver_form(&q).bilinear(&d, &e), euler_by_arrows(&q, &d, &e));
        }

        #[test]
        fn euclidean_form_positive_off_delta(idx in 0usize..4, v in proptest::collection::vec(-4i64..5, 9)) {
            let q = Quiver::named(["kronecker", "a2tilde", "d4tilde", "e6tilde"][idx]).unwrap();
            let n = q.vertex_count();
            let v = &v[..n];
            let f = quiver_form(&q);
            let d = as_signed(&delta(&q).unwrap());
            // v proportional to d iff all 2x2 minors vanish
            let prop = (0..n).all(|i| (0..n).all(|j| v[i] * d[j] == v[j] * d[i]));
            if prop {
                prop_assert_eq!(f.quadratic(v), 0);
            } else {
                prop_assert!(f.quadratic(v) > 0);
            }
        }
    }
}
