//! Residues modulo primes P < 2^31 with P ≡ 1 (mod lcm(1..16)), so that
//! products fit in a u64 and every root of unity of order dividing 720720
//! exists in F_P.

use std::fmt;

use super::cyclo::CycNumber;
use super::{Field, Ring};

/// lcm(1, ..., 16)
pub const ROOT_ORDER: u64 = 720_720;

/// Primes P with ROOT_ORDER | P − 1, with a primitive root each.
pub const PRIMES: [(u64, u64); 4] = [(2147024881, 37), (2146304161, 47), (2141259121, 29), (2139817681, 34)];

pub const P0: u64 = PRIMES[0].0;
pub const P1: u64 = PRIMES[1].0;

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a * b) % p
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp<const P: u64>(pub u64);

impl<const P: u64> Fp<P> {
    pub fn generator() -> u64 {
        PRIMES.iter().find(|(p, _)| *p == P).map(|(_, g)| *g).expect("unsupported modulus")
    }

    pub fn from_cyc(c: &CycNumber) -> Option<Self> {
        c.to_fp(P, Self::generator()).map(Fp)
    }

    pub fn value(&self) -> u64 {
        self.0
    }
}

impl<const P: u64> Ring for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    #[inline]
    fn add(&self, o: &Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= P { s - P } else { s })
    }
    #[inline]
    fn sub(&self, o: &Self) -> Self {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + P - o.0 })
    }
    #[inline]
    fn mul(&self, o: &Self) -> Self {
        Fp(mul_mod(self.0, o.0, P))
    }
    fn neg(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Field for Fp<P> {
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(Fp(pow_mod(self.0, P - 2, P)))
        }
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.0, P)
    }
}
