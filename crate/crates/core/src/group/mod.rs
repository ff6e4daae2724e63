//! Colored permutations and the projective reflection groups `G(r,p,s,n)`.
//!
//! An element of the wreath product `G(r,n)` is a pair `(c; σ)` of a color
//! vector `c ∈ [0,r-1]ⁿ` and a permutation `σ ∈ Sₙ`, written in window
//! notation as `[σ(1)^c₁, …, σ(n)^cₙ]`. `G(r,p,n)` keeps the elements whose
//! color sum is divisible by `p`, and `G(r,p,s,n)` is its quotient by the
//! scalar subgroup generated by `(r/s, …, r/s; id)`.
//!
//! A class of `G(r,p,s,n)` is stored through its canonical lift: the unique
//! lift whose last color lies in `[0, r/s)`. Equality of [`ProjectiveElement`]s
//! is therefore plain structural equality.

mod codec;
mod enumerate;

use alloc::vec::Vec;
use core::fmt;

pub use self::codec::{parse_element, parse_group};
pub use self::enumerate::{enumerate, unrank_permutation, Elements, DEFAULT_BUDGET};

use crate::error::{Divisibility, Error, Result};

/// `R_r(i)`: the residue of any integer in `[0, r-1]`.
#[inline]
pub fn residue(i: i64, r: u32) -> u32 {
    i.rem_euclid(r as i64) as u32
}

/// Validated parameters of `G(r,p,s,n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GroupDescriptor {
    r: u32,
    p: u32,
    s: u32,
    n: u32,
}

/// Checks the existence conditions `p | r`, `s | r`, `ps | rn`.
pub fn make_group(r: u32, p: u32, s: u32, n: u32) -> Result<GroupDescriptor> {
    GroupDescriptor::new(r, p, s, n)
}

impl GroupDescriptor {
    pub fn new(r: u32, p: u32, s: u32, n: u32) -> Result<Self> {
        if r == 0 || p == 0 || s == 0 || n == 0 {
            return Err(Error::NonPositive);
        }
        let failed = if !r.is_multiple_of(p) {
            Some(Divisibility::PDividesR)
        } else if !r.is_multiple_of(s) {
            Some(Divisibility::SDividesR)
        } else if !(r as u64 * n as u64).is_multiple_of(p as u64 * s as u64) {
            Some(Divisibility::PsDividesRn)
        } else {
            None
        };
        match failed {
            Some(failed) => Err(Error::Divisibility { r, p, s, n, failed }),
            None => Ok(Self { r, p, s, n }),
        }
    }

    /// The wreath product `G(r,n) = G(r,1,1,n)`.
    pub fn wreath(r: u32, n: u32) -> Result<Self> {
        Self::new(r, 1, 1, n)
    }

    #[inline]
    pub fn r(&self) -> u32 {
        self.r
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn s(&self) -> u32 {
        self.s
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    /// `r/s`, the color shift generating the scalar subgroup.
    #[inline]
    pub fn step(&self) -> u32 {
        self.r / self.s
    }

    pub fn is_wreath(&self) -> bool {
        self.p == 1 && self.s == 1
    }

    /// The same `r` and `n` with `p = s = 1`.
    pub fn wreath_cover(&self) -> Self {
        Self { p: 1, s: 1, ..*self }
    }

    /// The dual group `G(r,s,p,n)`.
    pub fn dual(&self) -> Self {
        Self {
            p: self.s,
            s: self.p,
            ..*self
        }
    }

    /// `rⁿ·n!/(p·s)`, saturating at `u128::MAX`.
    pub fn order(&self) -> u128 {
        let mut acc: u128 = 1;
        for i in 1..=self.n as u128 {
            acc = match acc.checked_mul(self.r as u128).and_then(|a| a.checked_mul(i)) {
                Some(a) => a,
                None => return u128::MAX,
            };
        }
        acc / (self.p as u128 * self.s as u128)
    }

    pub fn identity(&self) -> ProjectiveElement {
        ProjectiveElement {
            group: *self,
            lift: ColoredPermutation::identity(self.n as usize),
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{},{},{})", self.r, self.p, self.s, self.n)
    }
}

impl core::str::FromStr for GroupDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_group(s)
    }
}

/// A colored permutation `(c₁,…,cₙ; σ)`. Values of `σ` are 1-based; slices
/// are indexed from position 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredPermutation {
    sigma: Vec<u32>,
    colors: Vec<u32>,
}

impl ColoredPermutation {
    /// Checks that `sigma` is a permutation of `1..=n` and the lengths agree.
    /// Color ranges are checked against `r` when the lift is attached to a
    /// group.
    pub fn new(sigma: Vec<u32>, colors: Vec<u32>) -> Result<Self> {
        if sigma.len() != colors.len() {
            return Err(Error::Range(alloc::format!(
                "{} values but {} colors",
                sigma.len(),
                colors.len()
            )));
        }
        let n = sigma.len();
        let mut seen = alloc::vec![false; n + 1];
        for &v in &sigma {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::Range(alloc::format!(
                    "{sigma:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Self { sigma, colors })
    }

    pub(crate) fn from_parts_unchecked(sigma: Vec<u32>, colors: Vec<u32>) -> Self {
        debug_assert_eq!(sigma.len(), colors.len());
        Self { sigma, colors }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            sigma: (1..=n as u32).collect(),
            colors: alloc::vec![0; n],
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    /// The underlying permutation `|g|` in one-line form.
    #[inline]
    pub fn sigma(&self) -> &[u32] {
        &self.sigma
    }

    #[inline]
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color_sum(&self) -> u64 {
        self.colors.iter().map(|&c| c as u64).sum()
    }

    /// `(|g(i)|, cᵢ)` for a 1-based position `i`.
    #[inline]
    pub fn entry(&self, i: usize) -> (u32, u32) {
        (self.sigma[i - 1], self.colors[i - 1])
    }

    /// `(d;τ)(c;σ) = (R_r(c₁+d_{σ(1)}),…,R_r(cₙ+d_{σ(n)}); τσ)` with
    /// `self = (d;τ)`.
    pub fn compose(&self, rhs: &Self, r: u32) -> Self {
        let n = self.n();
        let mut sigma = Vec::with_capacity(n);
        let mut colors = Vec::with_capacity(n);
        for i in 0..n {
            let si = rhs.sigma[i] as usize - 1;
            sigma.push(self.sigma[si]);
            colors.push((rhs.colors[i] + self.colors[si]) % r);
        }
        Self { sigma, colors }
    }

    /// `|g⁻¹| = |g|⁻¹` and `cᵢ(g⁻¹) = R_r(−c_{|g|⁻¹(i)})`.
    pub fn inverse(&self, r: u32) -> Self {
        let n = self.n();
        let mut sigma = alloc::vec![0; n];
        let mut colors = alloc::vec![0; n];
        for (i, &v) in self.sigma.iter().enumerate() {
            let j = v as usize - 1;
            sigma[j] = i as u32 + 1;
            colors[j] = (r - self.colors[i] % r) % r;
        }
        Self { sigma, colors }
    }

    /// Adds `shift` to every color modulo `r`.
    pub fn shifted(&self, shift: u32, r: u32) -> Self {
        Self {
            sigma: self.sigma.clone(),
            colors: self.colors.iter().map(|&c| (c + shift) % r).collect(),
        }
    }

    /// Number of inversions of `|g|`.
    pub fn inversions(&self) -> u32 {
        let mut inv = 0;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.sigma[i] > self.sigma[j] {
                    inv += 1;
                }
            }
        }
        inv
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (&v, &c)) in self.sigma.iter().zip(&self.colors).enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if c == 0 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{c}")?;
            }
        }
        f.write_str("]")
    }
}

/// A class of `G(r,p,s,n)`, held through its canonical lift.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectiveElement {
    group: GroupDescriptor,
    lift: ColoredPermutation,
}

impl ProjectiveElement {
    /// Picks the lift with `cₙ < r/s` among the `s` lifts of `lift`'s class.
    pub fn canonicalize(lift: ColoredPermutation, group: GroupDescriptor) -> Result<Self> {
        let r = group.r();
        if lift.n() != group.n() as usize {
            return Err(Error::Range(alloc::format!(
                "window has length {} but n = {}",
                lift.n(),
                group.n()
            )));
        }
        if let Some(&c) = lift.colors.iter().find(|&&c| c >= r) {
            return Err(Error::Range(alloc::format!("color {c} not in [0,{}]", r - 1)));
        }
        let sum = lift.color_sum();
        if !sum.is_multiple_of(group.p() as u64) {
            return Err(Error::Membership { sum, p: group.p() });
        }
        Ok(Self::canonical_from_member(lift, group))
    }

    pub(crate) fn canonical_from_member(lift: ColoredPermutation, group: GroupDescriptor) -> Self {
        let step = group.step();
        let last = *lift.colors.last().expect("n >= 1");
        let excess = last - last % step;
        let lift = if excess == 0 {
            lift
        } else {
            lift.shifted(group.r() - excess, group.r())
        };
        Self { group, lift }
    }

    pub(crate) fn from_canonical_unchecked(lift: ColoredPermutation, group: GroupDescriptor) -> Self {
        debug_assert!(*lift.colors.last().unwrap() < group.step());
        Self { group, lift }
    }

    #[inline]
    pub fn group(&self) -> &GroupDescriptor {
        &self.group
    }

    #[inline]
    pub fn lift(&self) -> &ColoredPermutation {
        &self.lift
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.lift.n()
    }

    pub fn is_identity(&self) -> bool {
        self.lift == ColoredPermutation::identity(self.n())
    }

    /// Group product; representative-independent.
    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        if self.group != rhs.group {
            return Err(Error::GroupMismatch);
        }
        let lift = self.lift.compose(&rhs.lift, self.group.r());
        Ok(Self::canonical_from_member(lift, self.group))
    }

    pub fn inverse(&self) -> Self {
        Self::canonical_from_member(self.lift.inverse(self.group.r()), self.group)
    }

    /// The `s` lifts in `G(r,p,n)`; lift `j` adds `j·r/s` to every color.
    pub fn lifts(&self) -> Vec<ColoredPermutation> {
        let step = self.group.step();
        (0..self.group.s())
            .map(|j| self.lift.shifted(j * step, self.group.r()))
            .collect()
    }

    /// The same lift regarded in another group with equal `r` and `n`
    /// (e.g. the cover `G(r,1,1,n)` or a subgroup `G(r,p,s,n)`).
    pub fn reinterpret(&self, group: GroupDescriptor) -> Result<Self> {
        if group.r() != self.group.r() || group.n() != self.group.n() {
            return Err(Error::GroupMismatch);
        }
        Self::canonicalize(self.lift.clone(), group)
    }
}

impl fmt::Display for ProjectiveElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.lift.fmt(f)
    }
}
