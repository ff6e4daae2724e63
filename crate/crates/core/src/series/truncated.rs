use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::ops::Bound;

use smallvec::SmallVec;

use super::ring::Ring;
use crate::error::{Error, Result};

/// Exponent vector, one entry per variable.
pub type Exps = SmallVec<[u32; 8]>;

/// Storage key: total degree first, so map order is graded lexicographic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Key {
    deg: u64,
    exps: Exps,
}

impl Key {
    fn new(exps: Exps) -> Self {
        let deg = exps.iter().map(|&e| u64::from(e)).sum();
        Self { deg, exps }
    }
}

/// An ordered list of variable names shared by compatible series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variables(Arc<[String]>);

impl Variables {
    pub fn new(names: &[&str]) -> Self {
        Self(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.0
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

/// A monomial given by variable names and exponents. Zero exponents are
/// not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial(BTreeMap<String, u32>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(name: &str, exp: u32) -> Self {
        Self::one().times(name, exp)
    }

    pub fn from_pairs(pairs: &[(&str, u32)]) -> Self {
        pairs.iter().fold(Self::one(), |m, &(v, e)| m.times(v, e))
    }

    /// Multiplies by `name^exp`.
    pub fn times(mut self, name: &str, exp: u32) -> Self {
        if exp > 0 {
            *self.0.entry(name.to_string()).or_insert(0) += exp;
        }
        self
    }

    pub fn exponent(&self, name: &str) -> u32 {
        self.0.get(name).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u32)> {
        self.0.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn resolve(&self, vars: &Variables) -> Result<Exps> {
        let mut exps: Exps = SmallVec::from_elem(0, vars.len());
        for (name, &e) in &self.0 {
            exps[vars.index(name)?] = e;
        }
        Ok(exps)
    }

    fn from_exps(vars: &Variables, exps: &[u32]) -> Self {
        let mut m = Self::one();
        for (name, &e) in vars.names().iter().zip(exps) {
            m = m.times(name, e);
        }
        m
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (name, &e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if e == 1 {
                f.write_str(name)?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// First coefficient on which two series disagree.
#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch<E> {
    pub monomial: Monomial,
    pub lhs: E,
    pub rhs: E,
}

/// A sparse multivariate series truncated modulo the monomial ideal
/// generated by `x_v^{caps_v + 1}`.
///
/// Truncation modulo a monomial ideal commutes with sums and products of
/// series with nonnegative exponents, so every stored coefficient is exact.
/// The valid region records a possibly smaller box on which the series
/// is known to agree with the object it stands for. Sums and products keep
/// the componentwise minimum of the operands' regions.
#[derive(Clone, Debug)]
pub struct TruncatedSeries<R: Ring> {
    ring: R,
    vars: Variables,
    caps: Exps,
    valid: Exps,
    terms: BTreeMap<Key, R::Elem>,
}

impl<R: Ring> PartialEq for TruncatedSeries<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.vars == other.vars
            && self.caps == other.caps
            && self.valid == other.valid
            && self.terms == other.terms
    }
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn zero(ring: R, vars: Variables, caps: &[u32]) -> Self {
        assert_eq!(vars.len(), caps.len(), "one cap per variable");
        let caps: Exps = caps.iter().copied().collect();
        Self {
            ring,
            vars,
            valid: caps.clone(),
            caps,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: R, vars: Variables, caps: &[u32]) -> Self {
        let mut s = Self::zero(ring, vars, caps);
        let one = s.ring.one();
        s.add_term(s.zero_exps(), &one);
        s
    }

    /// An empty series with the same ring, variables and caps.
    pub fn zero_like(&self) -> Self {
        Self {
            ring: self.ring.clone(),
            vars: self.vars.clone(),
            caps: self.caps.clone(),
            valid: self.caps.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant_like(&self, c: R::Elem) -> Self {
        let mut s = self.zero_like();
        s.add_term(s.zero_exps(), &c);
        s
    }

    /// `c · x^exps`, dropped if it lies outside the caps.
    pub fn term_like(&self, c: R::Elem, exps: &[u32]) -> Self {
        let mut s = self.zero_like();
        s.add_term(exps.iter().copied().collect(), &c);
        s
    }

    pub fn monomial_like(&self, c: R::Elem, m: &Monomial) -> Result<Self> {
        let exps = m.resolve(&self.vars)?;
        Ok(self.term_like(c, &exps))
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn valid_region(&self) -> &[u32] {
        &self.valid
    }

    /// Narrows the valid region; it never grows past the caps.
    pub fn with_valid_region(mut self, region: &[u32]) -> Result<Self> {
        if region.len() != self.vars.len() {
            return Err(Error::Region("region has wrong dimension".into()));
        }
        for (v, &r) in self.valid.iter_mut().zip(region) {
            *v = (*v).min(r);
        }
        Ok(self)
    }

    /// Number of nonzero terms; see also [`Self::is_zero`].
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &R::Elem)> {
        self.terms.iter().map(|(k, c)| (&k.exps[..], c))
    }

    /// Largest exponent of variable `v` among stored terms.
    pub fn max_exponent(&self, v: usize) -> u32 {
        self.terms.keys().map(|k| k.exps[v]).max().unwrap_or(0)
    }

    fn zero_exps(&self) -> Exps {
        SmallVec::from_elem(0, self.vars.len())
    }

    fn within_caps(&self, exps: &[u32]) -> bool {
        exps.iter().zip(&self.caps).all(|(e, c)| e <= c)
    }

    fn add_term(&mut self, exps: Exps, c: &R::Elem) {
        if self.ring.is_zero(c) || !self.within_caps(&exps) {
            return;
        }
        let key = Key::new(exps);
        match self.terms.get_mut(&key) {
            Some(slot) => {
                self.ring.add_assign(slot, c);
                if self.ring.is_zero(slot) {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    /// Caps and valid region of a binary operation's result.
    fn joint(&self, other: &Self) -> Result<(Exps, Exps)> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch);
        }
        if self.ring != other.ring {
            return Err(Error::Region("coefficient rings differ".into()));
        }
        let caps = self.caps.iter().zip(&other.caps).map(|(a, b)| *a.min(b)).collect();
        let valid = self.valid.iter().zip(&other.valid).map(|(a, b)| *a.min(b)).collect();
        Ok((caps, valid))
    }

    fn empty_with(&self, caps: Exps, valid: Exps) -> Self {
        Self {
            ring: self.ring.clone(),
            vars: self.vars.clone(),
            caps,
            valid,
            terms: BTreeMap::new(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let (caps, valid) = self.joint(other)?;
        let mut out = self.empty_with(caps, valid);
        for (k, c) in self.terms.iter().chain(&other.terms) {
            out.add_term(k.exps.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.ring.neg(c);
        }
        out
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = self.empty_with(self.caps.clone(), self.valid.clone());
        for (k, a) in &self.terms {
            out.add_term(k.exps.clone(), &self.ring.mul(c, a));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (caps, valid) = self.joint(other)?;
        let mut out = self.empty_with(caps, valid);
        let mut exps = self.zero_exps();
        for (ka, a) in &self.terms {
            if !out.within_caps(&ka.exps) {
                continue;
            }
            'inner: for (kb, b) in &other.terms {
                for (v, slot) in exps.iter_mut().enumerate() {
                    *slot = ka.exps[v] + kb.exps[v];
                    if *slot > out.caps[v] {
                        continue 'inner;
                    }
                }
                out.add_term(exps.clone(), &self.ring.mul(a, b));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.constant_like(self.ring.one());
        acc.valid = self.valid.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same space");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same space");
            }
        }
        acc
    }

    /// Splits a single-term series into coefficient and exponents.
    fn as_single_term(&self) -> Result<Option<(R::Elem, Exps)>> {
        match self.terms.len() {
            0 => Ok(None),
            1 => {
                let (k, c) = self.terms.iter().next().expect("one term");
                Ok(Some((c.clone(), k.exps.clone())))
            }
            _ => Err(Error::NonMonomialBase),
        }
    }

    /// `[n]_x = 1 + x + … + x^{n-1}` for a single-term base `x`.
    pub fn q_bracket(n: u32, base: &Self) -> Result<Self> {
        let mut out = base.zero_like();
        out.valid = base.valid.clone();
        if n == 0 {
            return Ok(out);
        }
        let Some((c, m)) = base.as_single_term()? else {
            // x = 0
            out.add_term(out.zero_exps(), &base.ring.one());
            return Ok(out);
        };
        let mut coef = base.ring.one();
        let mut exps = out.zero_exps();
        for _ in 0..n {
            if !out.within_caps(&exps) {
                break;
            }
            out.add_term(exps.clone(), &coef);
            coef = base.ring.mul(&coef, &c);
            for (e, d) in exps.iter_mut().zip(&m) {
                *e += d;
            }
        }
        Ok(out)
    }

    /// `Σ_{j≥0} x^j` truncated to the caps of `base`.
    pub fn geom_inverse(base: &Self) -> Result<Self> {
        let mut out = base.constant_like(base.ring.one());
        out.valid = base.valid.clone();
        if let Some((c, m)) = base.as_single_term()? {
            out.mul_geom_in_place(&c, &m)?;
        }
        Ok(out)
    }

    /// Multiplies in place by `1/(1 - c·x^m)`.
    ///
    /// Visits keys in increasing graded order and pushes each coefficient
    /// forward by `m`; since `m` has positive degree the target is visited
    /// later, which realizes the full geometric sum.
    pub fn mul_geom_in_place(&mut self, c: &R::Elem, m: &[u32]) -> Result<()> {
        if m.iter().all(|&e| e == 0) {
            return Err(Error::ConstantTerm);
        }
        if m.len() != self.vars.len() {
            return Err(Error::VariableMismatch);
        }
        if !self.within_caps(m) {
            return Ok(());
        }
        let mut cursor = match self.terms.keys().next() {
            Some(k) => k.clone(),
            None => return Ok(()),
        };
        loop {
            let target: Exps = cursor.exps.iter().zip(m).map(|(a, b)| a + b).collect();
            if self.within_caps(&target) {
                let pushed = self.ring.mul(c, &self.terms[&cursor]);
                self.add_term(target, &pushed);
            }
            match self.terms.range((Bound::Excluded(&cursor), Bound::Unbounded)).next() {
                Some((k, _)) => cursor = k.clone(),
                None => return Ok(()),
            }
        }
    }

    /// `{F}_M`: keeps the terms whose exponent in every variable of `M` is
    /// divisible by that variable's exponent in `M`.
    pub fn extract_multiples(&self, m: &Monomial) -> Result<Self> {
        let d = m.resolve(&self.vars)?;
        Ok(self.extract_multiples_exps(&d))
    }

    pub fn extract_multiples_exps(&self, d: &[u32]) -> Self {
        let mut out = self.empty_with(self.caps.clone(), self.valid.clone());
        out.terms = self
            .terms
            .iter()
            .filter(|(k, _)| k.exps.iter().zip(d).all(|(&e, &d)| d == 0 || e % d == 0))
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        out
    }

    /// `F(…, c·x_v, …)`.
    pub fn scale_variable(&self, var: &str, c: &R::Elem) -> Result<Self> {
        let v = self.vars.index(var)?;
        let mut powers: Vec<R::Elem> = alloc::vec![self.ring.one()];
        let mut out = self.empty_with(self.caps.clone(), self.valid.clone());
        for (k, a) in &self.terms {
            let e = k.exps[v] as usize;
            while powers.len() <= e {
                let next = self.ring.mul(powers.last().expect("nonempty"), c);
                powers.push(next);
            }
            out.add_term(k.exps.clone(), &self.ring.mul(a, &powers[e]));
        }
        Ok(out)
    }

    /// Sets variable `var` to 1. Only meaningful when the series is a
    /// polynomial in `var` whose degree fits under its cap.
    pub fn specialize_to_one(&self, var: &str) -> Result<Self> {
        let v = self.vars.index(var)?;
        let mut out = self.empty_with(self.caps.clone(), self.valid.clone());
        for (k, a) in &self.terms {
            let mut exps = k.exps.clone();
            exps[v] = 0;
            out.add_term(exps, a);
        }
        Ok(out)
    }

    /// Re-expresses the coefficients in another ring.
    pub fn map_ring<S: Ring>(&self, ring: S, f: impl Fn(&R::Elem) -> S::Elem) -> TruncatedSeries<S> {
        let mut out = TruncatedSeries::zero(ring, self.vars.clone(), &self.caps);
        out.valid = self.valid.clone();
        for (k, a) in &self.terms {
            out.add_term(k.exps.clone(), &f(a));
        }
        out
    }

    /// Drops every term outside the given (smaller) caps.
    pub fn truncate(&self, caps: &[u32]) -> Self {
        let caps: Exps = self.caps.iter().zip(caps).map(|(a, b)| *a.min(b)).collect();
        let valid = self.valid.iter().zip(&caps).map(|(a, b)| *a.min(b)).collect();
        let mut out = self.empty_with(caps, valid);
        for (k, a) in &self.terms {
            out.add_term(k.exps.clone(), a);
        }
        out
    }

    pub fn coefficient(&self, m: &Monomial) -> Result<R::Elem> {
        let exps = m.resolve(&self.vars)?;
        Ok(self.coefficient_exps(&exps))
    }

    pub fn coefficient_exps(&self, exps: &[u32]) -> R::Elem {
        self.terms
            .get(&Key::new(exps.iter().copied().collect()))
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    /// Compares every coefficient inside `region`, returning the first
    /// disagreement in graded lexicographic order.
    pub fn equal_on(&self, other: &Self, region: &[u32]) -> Result<Option<Mismatch<R::Elem>>> {
        self.joint(other)?;
        if region.len() != self.vars.len() {
            return Err(Error::Region("region has wrong dimension".into()));
        }
        for (v, &bound) in region.iter().enumerate() {
            let limit = self.valid[v].min(other.valid[v]);
            if bound > limit {
                return Err(Error::Region(alloc::format!(
                    "{} <= {bound} exceeds valid bound {limit}",
                    self.vars.names()[v]
                )));
            }
        }
        let inside = |k: &&Key| k.exps.iter().zip(region).all(|(e, b)| e <= b);
        let mut keys: Vec<&Key> = self.terms.keys().filter(inside).collect();
        keys.extend(other.terms.keys().filter(inside));
        keys.sort();
        keys.dedup();
        for k in keys {
            let a = self.terms.get(k).cloned().unwrap_or_else(|| self.ring.zero());
            let b = other.terms.get(k).cloned().unwrap_or_else(|| self.ring.zero());
            if a != b {
                return Ok(Some(Mismatch {
                    monomial: Monomial::from_exps(&self.vars, &k.exps),
                    lhs: a,
                    rhs: b,
                }));
            }
        }
        Ok(None)
    }
}

impl<R: Ring> fmt::Display for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let one = self.ring.one();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let mut coef = String::new();
            write!(coef, "{c}")?;
            if coef.contains(' ') {
                coef = alloc::format!("({coef})");
            }
            let m = Monomial::from_exps(&self.vars, &k.exps);
            match (m.is_one(), *c == one) {
                (true, _) => f.write_str(&coef)?,
                (false, true) => write!(f, "{m}")?,
                (false, false) => write!(f, "{coef} * {m}")?,
            }
        }
        Ok(())
    }
}
