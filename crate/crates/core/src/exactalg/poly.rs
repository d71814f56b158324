//! Dense univariate polynomials, coefficients in increasing degree.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::Field;

pub fn trim<F: Field>(p: &mut Vec<F>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Degree, `None` for the zero polynomial.
pub fn degree<F: Field>(p: &[F]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn eval<F: Field>(p: &[F], x: &F) -> F {
    p.iter()
        .rev()
        .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
}

pub fn add<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let n = a.len().max(b.len());
    let mut out: Vec<F> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(F::zero);
            let y = b.get(i).cloned().unwrap_or_else(F::zero);
            x + y
        })
        .collect();
    trim(&mut out);
    out
}

pub fn sub<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let nb: Vec<F> = b.iter().map(|c| -c.clone()).collect();
    add(a, &nb)
}

pub fn mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; panics on division by zero.
pub fn divrem<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
    let db = degree(b).expect("polynomial division by zero");
    let lead_inv = b[db].inv().unwrap();
    let mut r: Vec<F> = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![F::zero(); r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = r[dr].clone() * lead_inv.clone();
        let shift = dr - db;
        for (j, bj) in b.iter().enumerate().take(db + 1) {
            r[shift + j] = r[shift + j].clone() - c.clone() * bj.clone();
        }
        q[shift] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub fn monic<F: Field>(p: &[F]) -> Vec<F> {
    match degree(p) {
        None => Vec::new(),
        Some(d) => {
            let inv = p[d].inv().unwrap();
            p[..=d].iter().map(|c| c.clone() * inv.clone()).collect()
        }
    }
}

/// Monic gcd.
pub fn gcd<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    monic(&x)
}

/// `(g, s, t)` with `s a + t b = g`, `g` monic.
pub fn ext_gcd<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>, Vec<F>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1) = (vec![F::one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![F::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        let t2 = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match degree(&r0) {
        None => (Vec::new(), s0, t0),
        Some(d) => {
            let inv = r0[d].inv().unwrap();
            let sc = |v: &[F]| -> Vec<F> { v.iter().map(|c| c.clone() * inv.clone()).collect() };
            (sc(&r0), sc(&s0), sc(&t0))
        }
    }
}

pub fn powmod<F: Field>(base: &[F], mut e: u128, m: &[F]) -> Vec<F> {
    let mut acc = divrem(&[F::one()], m).1;
    let mut b = divrem(base, m).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = divrem(&mul(&acc, &b), m).1;
        }
        b = divrem(&mul(&b, &b), m).1;
        e >>= 1;
    }
    acc
}

pub fn derivative<F: Field>(p: &[F]) -> Vec<F> {
    let mut out: Vec<F> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.clone() * F::from_i64(i as i64))
        .collect();
    trim(&mut out);
    out
}

/// Multiplicity of `r` as a root of `p` (zero polynomial gives 0).
pub fn root_multiplicity<F: Field>(p: &[F], r: &F) -> usize {
    let mut cur = p.to_vec();
    trim(&mut cur);
    let lin = vec![-r.clone(), F::one()];
    let mut k = 0;
    while !cur.is_empty() && eval(&cur, r).is_zero() {
        cur = divrem(&cur, &lin).0;
        k += 1;
    }
    k
}

/// True if `p` is a product of linear factors over `F`.
pub fn splits<F: Field>(p: &[F]) -> bool {
    let Some(d) = degree(p) else { return false };
    let total: usize = F::roots(p).iter().map(|r| root_multiplicity(p, r)).sum();
    total == d
}

/// Distinct roots over a finite field: enumeration for small fields,
/// Cantor-Zassenhaus equal-degree splitting otherwise.
pub fn finite_field_roots<F: Field>(p: &[F]) -> Vec<F> {
    let mut f = p.to_vec();
    trim(&mut f);
    if f.len() <= 1 {
        return Vec::new();
    }
    if let Some(all) = F::elements() {
        return all.into_iter().filter(|x| eval(&f, x).is_zero()).collect();
    }
    let q = F::order().expect("root finding needs a finite field or an override");
    assert!(q % 2 == 1, "Cantor-Zassenhaus needs odd order");
    let f = monic(&f);
    let x = vec![F::zero(), F::one()];
    let xq = powmod(&x, q, &f);
    let g = gcd(&f, &sub(&xq, &x));
    let mut rng = ChaCha8Rng::seed_from_u64(0x05ee_d0ff_1e1d);
    let mut roots = Vec::new();
    split_linear(&g, q, &mut rng, &mut roots);
    roots.sort();
    roots
}

fn split_linear<F: Field>(g: &[F], q: u128, rng: &mut ChaCha8Rng, out: &mut Vec<F>) {
    match degree(g) {
        None | Some(0) => {}
        Some(1) => out.push(-(g[0].clone() * g[1].inv().unwrap())),
        Some(d) => loop {
            let a = F::random(rng);
            let h = powmod(&[a, F::one()], (q - 1) / 2, g);
            let h = sub(&h, &[F::one()]);
            let s = gcd(g, &h);
            let ds = degree(&s).unwrap_or(0);
            if ds > 0 && ds < d {
                let (rest, _) = divrem(g, &s);
                split_linear(&s, q, rng, out);
                split_linear(&rest, q, rng, out);
                return;
            }
        },
    }
}
