//! Exact scalar fields: the rationals, prime fields and GF(4).

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use super::poly;

/// An exact commutative field.
///
/// `roots` returns the distinct roots of a polynomial that lie in the field,
/// given by coefficients in increasing degree.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Ord
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
    fn characteristic() -> u64;
    /// Number of elements, `None` for infinite fields.
    fn order() -> Option<u128>;
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self;
    fn name() -> String;

    /// Every element, for fields small enough to enumerate.
    fn elements() -> Option<Vec<Self>> {
        None
    }

    fn roots(coeffs: &[Self]) -> Vec<Self> {
        poly::finite_field_roots(coeffs)
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }

    fn pow(&self, mut e: u128) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

/// Arbitrary precision rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(r: BigRational) -> Self {
        Rational(r)
    }

    /// Parses `"a"` or `"a/b"`.
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().ok()?;
                let d: BigInt = d.trim().parse().ok()?;
                if d.is_zero() {
                    return None;
                }
                Some(Rational(BigRational::new(n, d)))
            }
            None => Some(Rational(BigRational::from_integer(s.parse().ok()?))),
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

macro_rules! wrap_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                Self(self.0 + o.0)
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                Self(self.0 - o.0)
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                Self(self.0 * o.0)
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                Self(-self.0)
            }
        }
    };
}

wrap_ops!(Rational);

/// Random rationals are drawn as integers from this symmetric box.
const RATIONAL_SAMPLE_BOUND: i64 = 1000;

impl Field for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
    fn from_i64(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
    fn characteristic() -> u64 {
        0
    }
    fn order() -> Option<u128> {
        None
    }
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Rational::from_i64(rng.gen_range(-RATIONAL_SAMPLE_BOUND..=RATIONAL_SAMPLE_BOUND))
    }
    fn name() -> String {
        "Q".to_string()
    }
    fn roots(coeffs: &[Self]) -> Vec<Self> {
        rational_roots(coeffs)
    }
}

fn eval_int(h: &[BigInt], x: &BigInt) -> BigInt {
    h.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = a.mod_floor(m).extended_gcd(m);
    if g.gcd.is_one() {
        Some(g.x.mod_floor(m))
    } else {
        None
    }
}

/// Integer roots of a monic squarefree integer polynomial, from its roots
/// modulo `P` lifted by Newton iteration until the modulus exceeds twice `bound`.
/// `None` if the reduction mod `P` is not squarefree.
fn integer_roots_mod<const P: u64>(h: &[BigInt], bound: &BigInt) -> Option<Vec<BigInt>> {
    let pb = BigInt::from(P);
    let hp: Vec<Fp<P>> = h
        .iter()
        .map(|c| Fp::<P>::new(c.mod_floor(&pb).to_u64().unwrap()))
        .collect();
    if poly::degree(&poly::gcd(&hp, &poly::derivative(&hp))) != Some(0) {
        return None;
    }
    let dh: Vec<BigInt> = h
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let target = bound * 2 + 1;
    let mut out = Vec::new();
    for r in Fp::<P>::roots(&hp) {
        let mut m = pb.clone();
        let mut x = BigInt::from(r.value());
        while m <= target {
            m = &m * &m;
            let inv = mod_inverse(&eval_int(&dh, &x), &m)?;
            x = (&x - eval_int(h, &x) * inv).mod_floor(&m);
        }
        let half = &m / 2;
        if x > half {
            x -= &m;
        }
        if eval_int(h, &x).is_zero() {
            out.push(x);
        }
    }
    Some(out)
}

/// Rational roots: squarefree part, monic integer rescaling, then integer
/// roots by modular lifting.
fn rational_roots(coeffs: &[Rational]) -> Vec<Rational> {
    let mut c: Vec<Rational> = coeffs.to_vec();
    poly::trim(&mut c);
    if c.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let low_zeros = c.iter().take_while(|x| x.is_zero()).count();
    if low_zeros > 0 {
        roots.push(Rational::zero());
        c.drain(..low_zeros);
    }
    if c.len() > 1 {
        let g = poly::gcd(&c, &poly::derivative(&c));
        let sf = poly::divrem(&c, &g).0;
        let lcm = sf.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.0.denom()));
        let mut ints: Vec<BigInt> = sf
            .iter()
            .map(|x| (x.0.clone() * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for x in ints.iter_mut() {
            *x = &*x / &content;
        }
        let n = ints.len() - 1;
        let a = ints[n].clone();
        // h(y) = a^(n-1) f(y / a) is monic with integer coefficients
        let h: Vec<BigInt> = (0..=n)
            .map(|i| if i == n { BigInt::one() } else { &ints[i] * a.pow((n - 1 - i) as u32) })
            .collect();
        let bound = h.iter().map(|x| x.abs()).max().unwrap() + 1;
        let found = integer_roots_mod::<P61>(&h, &bound)
            .or_else(|| integer_roots_mod::<P31>(&h, &bound))
            .or_else(|| integer_roots_mod::<1_000_000_007>(&h, &bound))
            .or_else(|| integer_roots_mod::<998_244_353>(&h, &bound))
            .or_else(|| integer_roots_mod::<4_294_967_291>(&h, &bound))
            .unwrap_or_default();
        roots.extend(found.into_iter().map(|y| Rational(BigRational::new(y, a.clone()))));
    }
    roots.sort();
    roots.dedup();
    roots
}

/// The prime field `Z/P`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn value(&self) -> u64 {
        self.0
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp(((self.0 as u128 + o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

const ENUMERABLE: u128 = 1 << 16;

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P as u128 - 2))
        }
    }
    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }
    fn characteristic() -> u64 {
        P
    }
    fn order() -> Option<u128> {
        Some(P as u128)
    }
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp(rng.gen_range(0..P))
    }
    fn name() -> String {
        format!("F_{}", P)
    }
    fn elements() -> Option<Vec<Self>> {
        if (P as u128) <= ENUMERABLE {
            Some((0..P).map(Fp).collect())
        } else {
            None
        }
    }
}

/// GF(4) = F_2[w]/(w^2 + w + 1); the two bits are the coefficients of 1 and w.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf4(u8);

impl Gf4 {
    pub const W: Gf4 = Gf4(2);

    pub fn from_bits(b: u8) -> Self {
        Gf4(b & 3)
    }

    pub fn bits(&self) -> u8 {
        self.0
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.0 {
            0 => "0",
            1 => "1",
            2 => "w",
            _ => "w+1",
        };
        write!(f, "{}", s)
    }
}

impl Add for Gf4 {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, o: Self) -> Self {
        Gf4(self.0 ^ o.0)
    }
}

impl Sub for Gf4 {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, o: Self) -> Self {
        Gf4(self.0 ^ o.0)
    }
}

impl Neg for Gf4 {
    type Output = Self;
    fn neg(self) -> Self {
        self
    }
}

impl Mul for Gf4 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (a0, a1) = (self.0 & 1, self.0 >> 1);
        let (b0, b1) = (o.0 & 1, o.0 >> 1);
        // w^2 = w + 1
        let c0 = (a0 & b0) ^ (a1 & b1);
        let c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
        Gf4(c0 | (c1 << 1))
    }
}

impl Field for Gf4 {
    fn zero() -> Self {
        Gf4(0)
    }
    fn one() -> Self {
        Gf4(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inv(&self) -> Option<Self> {
        match self.0 {
            0 => None,
            1 => Some(Gf4(1)),
            2 => Some(Gf4(3)),
            _ => Some(Gf4(2)),
        }
    }
    fn from_i64(v: i64) -> Self {
        Gf4((v.rem_euclid(2)) as u8)
    }
    fn characteristic() -> u64 {
        2
    }
    fn order() -> Option<u128> {
        Some(4)
    }
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Gf4(rng.gen_range(0..4))
    }
    fn name() -> String {
        "F_4".to_string()
    }
    fn elements() -> Option<Vec<Self>> {
        Some((0..4).map(Gf4).collect())
    }
}

/// Mersenne prime 2^31 - 1.
pub const P31: u64 = 2_147_483_647;
/// Mersenne prime 2^61 - 1.
pub const P61: u64 = 2_305_843_009_213_693_951;

pub type F31 = Fp<P31>;
pub type F61 = Fp<P61>;
pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms<F: Field>(xs: &[F]) {
        for a in xs {
            assert_eq!(a.clone() + F::zero(), a.clone());
            assert_eq!(a.clone() * F::one(), a.clone());
            assert!((a.clone() - a.clone()).is_zero());
            if !a.is_zero() {
                assert!((a.clone() * a.inv().unwrap()).is_one());
            }
            for b in xs {
                assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
                for c in xs {
                    assert_eq!(
                        a.clone() * (b.clone() + c.clone()),
                        a.clone() * b.clone() + a.clone() * c.clone()
                    );
                }
            }
        }
    }

    #[test]
    fn gf4_is_a_field() {
        check_axioms(&Gf4::elements().unwrap());
        assert_eq!(Gf4::W * Gf4::W, Gf4::W + Gf4::one());
    }

    #[test]
    fn small_prime_fields() {
        check_axioms(&F5::elements().unwrap());
        check_axioms(&F2::elements().unwrap());
    }

    #[test]
    fn big_prime_inverse() {
        let a = F61::new(123_456_789_123);
        assert!((a * a.inv().unwrap()).is_one());
        assert_eq!(F61::from_i64(-1), F61::new(P61 - 1));
    }

    #[test]
    fn rational_parse_and_roots() {
        assert_eq!(Rational::parse("-6/4").unwrap(), Rational::new(-3, 2));
        assert!(Rational::parse("1/0").is_none());
        // (x - 2)(x - 5)(2x + 1)
        let c = [
            Rational::from_i64(10),
            Rational::from_i64(13),
            Rational::from_i64(-13),
            Rational::from_i64(2),
        ];
        assert_eq!(
            Rational::roots(&c),
            vec![Rational::new(-1, 2), Rational::from_i64(2), Rational::from_i64(5)]
        );
        // x^2 + 1 has no rational roots
        assert!(Rational::roots(&[Rational::one(), Rational::zero(), Rational::one()]).is_empty());
    }
}
