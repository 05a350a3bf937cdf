//! Exact coefficient arithmetic: cyclotomic numbers, Laurent polynomials,
//! prime-field residues and the linear algebra built on top of them.

pub mod cyclo;
pub mod laurent;
pub mod linalg;
pub mod modp;
pub mod poly;

use std::fmt;

pub use cyclo::{unit_root, CycNumber};
pub use laurent::{specialize, LaurentPoly};
pub use modp::Fp;
pub use poly::{cyclotomic_polynomial, poincare_polynomial};

/// Commutative ring used as the coefficient domain of Hecke algebras and
/// algebra tables.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add_assign(&mut self, o: &Self) {
        *self = self.add(o);
    }
    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
    fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul(&i))
    }
}
