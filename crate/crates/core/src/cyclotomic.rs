//! Exact arithmetic in `ℤ[ζ_r]`.
//!
//! Elements are coordinate vectors in the power basis `1, ζ, …, ζ^{φ(r)-1}`,
//! i.e. integer polynomials reduced modulo the cyclotomic polynomial `Φ_r`.
//! Since `Φ_r` is the minimal polynomial of `ζ_r`, two elements are equal
//! exactly when their coordinates are.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::residue;

/// Integer polynomial, lowest degree first.
pub type IntPoly = Vec<BigInt>;

fn trim(p: &mut IntPoly) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut out = alloc::vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact quotient by a monic divisor; panics if the division leaves a
/// remainder.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> IntPoly {
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut rem: IntPoly = num.to_vec();
    if rem.len() <= dd {
        assert!(rem.iter().all(Zero::is_zero), "inexact division");
        return alloc::vec![BigInt::zero()];
    }
    let mut quot = alloc::vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let lead = rem[k + dd].clone();
        if lead.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &lead * d;
        }
        quot[k] = lead;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact division");
    trim(&mut quot);
    quot
}

/// `Φ_r`, obtained by dividing `x^r - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_poly(r: u32) -> IntPoly {
    assert!(r >= 1, "conductor must be positive");
    let mut num = alloc::vec![BigInt::zero(); r as usize + 1];
    num[0] = -BigInt::one();
    num[r as usize] = BigInt::one();
    let mut den = alloc::vec![BigInt::one()];
    for d in 1..r {
        if r.is_multiple_of(d) {
            den = poly_mul(&den, &cyclotomic_poly(d));
        }
    }
    poly_div_exact(&num, &den)
}

/// Precomputed data for one conductor: `Φ_r` and the coordinates of every
/// power `ζ^e`, `e ∈ [0, r)`.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    r: u32,
    phi: IntPoly,
    powers: Vec<IntPoly>,
}

impl CyclotomicField {
    pub fn new(r: u32) -> Arc<Self> {
        let phi = cyclotomic_poly(r);
        let deg = phi.len() - 1;
        let mut powers = Vec::with_capacity(r as usize);
        let mut cur = alloc::vec![BigInt::zero(); deg];
        cur[0] = BigInt::one();
        for _ in 0..r {
            powers.push(cur.clone());
            // multiply by x, then fold x^deg back with the monic relation
            let top = cur.pop().expect("deg >= 1");
            cur.insert(0, BigInt::zero());
            if !top.is_zero() {
                for (c, p) in cur.iter_mut().zip(&phi) {
                    *c -= &top * p;
                }
            }
        }
        Arc::new(Self { r, phi, powers })
    }

    #[inline]
    pub fn conductor(&self) -> u32 {
        self.r
    }

    /// `φ(r)`, the dimension of the power basis.
    #[inline]
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.phi
    }
}

/// An element of `ℤ[ζ_r]`.
#[derive(Clone, Debug)]
pub struct CycInt {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigInt>,
}

impl PartialEq for CycInt {
    fn eq(&self, other: &Self) -> bool {
        self.field.r == other.field.r && self.coeffs == other.coeffs
    }
}

impl Eq for CycInt {}

/// `ζ_r^{R_r(e)}`.
pub fn zeta_pow(r: u32, e: i64) -> CycInt {
    CycInt::zeta_pow(&CyclotomicField::new(r), e)
}

impl CycInt {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Self {
            field: field.clone(),
            coeffs: alloc::vec![BigInt::zero(); field.degree()],
        }
    }

    pub fn from_int(field: &Arc<CyclotomicField>, v: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(field);
        out.coeffs[0] = v.into();
        out
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_int(field, 1)
    }

    pub fn zeta_pow(field: &Arc<CyclotomicField>, e: i64) -> Self {
        Self {
            field: field.clone(),
            coeffs: field.powers[residue(e, field.r) as usize].clone(),
        }
    }

    /// `Σ_e counts[e]·ζ^e` for `e ∈ [0, r)`.
    pub fn from_power_counts(field: &Arc<CyclotomicField>, counts: &[BigInt]) -> Self {
        let mut out = Self::zero(field);
        for (e, k) in counts.iter().enumerate() {
            if k.is_zero() {
                continue;
            }
            for (c, p) in out.coeffs.iter_mut().zip(&field.powers[e % field.r as usize]) {
                *c += k * p;
            }
        }
        out
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    #[inline]
    pub fn conductor(&self) -> u32 {
        self.field.r
    }

    /// Coordinates in the power basis.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field.r != other.field.r {
            return Err(Error::ConductorMismatch(self.field.r, other.field.r));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let r = self.field.r as usize;
        // product in ℤ[x]/(x^r - 1), then into the power basis
        let mut wrapped = alloc::vec![BigInt::zero(); r];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    wrapped[(i + j) % r] += a * b;
                }
            }
        }
        Ok(Self::from_power_counts(&self.field, &wrapped))
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &Self) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn neg_ref(&self) -> Self {
        Self {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `a0 + a1*z + … @r`
    pub fn to_annotated_string(&self) -> String {
        alloc::format!("{self} @{}", self.field.r)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            match (i, mag.is_one()) {
                (0, _) => write!(out, "{mag}")?,
                (_, true) => out.push('z'),
                (_, false) => write!(out, "{mag}*z")?,
            }
            if i > 1 {
                write!(out, "^{i}")?;
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl Add for &CycInt {
    type Output = CycInt;

    /// Panics on conductor mismatch; see [`CycInt::checked_add`].
    fn add(self, rhs: &CycInt) -> CycInt {
        self.checked_add(rhs).expect("conductor mismatch")
    }
}

impl Sub for &CycInt {
    type Output = CycInt;

    fn sub(self, rhs: &CycInt) -> CycInt {
        self.checked_sub(rhs).expect("conductor mismatch")
    }
}

impl Mul for &CycInt {
    type Output = CycInt;

    fn mul(self, rhs: &CycInt) -> CycInt {
        self.checked_mul(rhs).expect("conductor mismatch")
    }
}

impl Neg for &CycInt {
    type Output = CycInt;

    fn neg(self) -> CycInt {
        self.neg_ref()
    }
}
