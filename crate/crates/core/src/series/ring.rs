use alloc::sync::Arc;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cyclotomic::{CycInt, CyclotomicField};

/// Coefficient ring of a [`TruncatedSeries`](super::TruncatedSeries).
///
/// The ring value is a context object (for example the cyclotomic field),
/// elements are plain values.
pub trait Ring: Clone + fmt::Debug + PartialEq {
    type Elem: Clone + fmt::Debug + fmt::Display + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn int(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem);
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn one(&self) -> Self::Elem {
        self.int(1)
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// Arbitrary-precision integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IntegerRing;

impl Ring for IntegerRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn int(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn add_assign(&self, a: &mut BigInt, b: &BigInt) {
        *a += b;
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }
}

/// `ℤ[ζ_r]` for one fixed conductor.
#[derive(Clone, Debug)]
pub struct CyclotomicRing {
    field: Arc<CyclotomicField>,
}

impl CyclotomicRing {
    pub fn new(r: u32) -> Self {
        Self {
            field: CyclotomicField::new(r),
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    pub fn zeta_pow(&self, e: i64) -> CycInt {
        CycInt::zeta_pow(&self.field, e)
    }
}

impl PartialEq for CyclotomicRing {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor() == other.field.conductor()
    }
}

impl Ring for CyclotomicRing {
    type Elem = CycInt;

    fn zero(&self) -> CycInt {
        CycInt::zero(&self.field)
    }

    fn int(&self, v: i64) -> CycInt {
        CycInt::from_int(&self.field, v)
    }

    fn is_zero(&self, a: &CycInt) -> bool {
        a.is_zero()
    }

    fn add_assign(&self, a: &mut CycInt, b: &CycInt) {
        a.add_assign_unchecked(b);
    }

    fn mul(&self, a: &CycInt, b: &CycInt) -> CycInt {
        a * b
    }

    fn neg(&self, a: &CycInt) -> CycInt {
        a.neg_ref()
    }
}
