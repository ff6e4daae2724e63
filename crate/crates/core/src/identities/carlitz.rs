//! Carlitz-type identities: `(des, fmaj, col)` and `(fdes, fmaj, col)`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{
    bracket, int_space, require_positive_caps, series_from, term, ReportBuilder, VerificationReport, Verifier,
};
use crate::error::Result;
use crate::exec::Executor;
use crate::group::GroupDescriptor;
use crate::series::IntSeries;
use crate::stats::flag_stats;

/// Exponent caps for `t`, `q` and `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CarlitzCaps {
    pub t: u32,
    pub q: u32,
    pub a: u32,
}

impl Default for CarlitzCaps {
    fn default() -> Self {
        Self { t: 6, q: 6, a: 6 }
    }
}

/// Kept as a separate name for call sites that ignore the `a` cap.
pub type FdesCaps = CarlitzCaps;

/// `t^te q^qe` padded with zeros to the width of `like`.
fn tq(like: &IntSeries, te: u32, qe: u32) -> Vec<u32> {
    let mut e = vec![0; like.vars().len()];
    e[0] = te;
    e[1] = qe;
    e
}

fn tqa(te: u32, qe: u32, ae: u32) -> Vec<u32> {
    vec![te, qe, ae]
}

/// Multiplies by `1/((1-t) Π_{j<n} (1 - t^{inner} q^{jr}) (1 - t^{last_t} q^{n·step}))`.
fn divide_by_denominators(mut s: IntSeries, n: u32, r: u32, step: u32, inner: u32, last_t: u32) -> IntSeries {
    let one = num_bigint::BigInt::from(1);
    let mut apply = |te: u32, qe: u32| {
        let m = tq(&s, te, qe);
        s.mul_geom_in_place(&one, &m).expect("positive degree");
    };
    apply(1, 0);
    for j in 1..n {
        apply(inner, j * r);
    }
    apply(last_t, n * step);
    s
}

/// `{Σ_{k ≤ T} t^k ([k+1]_{q^{r/s}} + aq[k]_{q^{r/s}}[r/s-1]_{aq})^n}_{q^p}`.
pub(crate) fn des_generating_function(z: &IntSeries, n: u32, step: u32, p: u32) -> IntSeries {
    let mut sum = z.zero_like();
    for k in 0..=z.caps()[0] {
        let head = bracket(z, k + 1, 1, &tqa(0, step, 0));
        let tail = term(z, 1, &tqa(0, 1, 1))
            .mul(&bracket(z, k, 1, &tqa(0, step, 0)))
            .and_then(|x| x.mul(&bracket(z, step - 1, 1, &tqa(0, 1, 1))))
            .expect("same space");
        let base = head.add(&tail).expect("same space");
        let piece = term(z, 1, &tqa(k, 0, 0)).mul(&base.pow(n)).expect("same space");
        sum = sum.add(&piece).expect("same space");
    }
    sum.extract_multiples_exps(&[0, p, 0])
}

/// The closed-form bracket for the `(fdes, fmaj, col)` identity, writing
/// `k = (r/s)·Q + R`:
/// `[Q+1]_{q^{r/s}} + aq[r/s-1]_{aq}[Q]_{q^{r/s}} + a q^{Q·r/s+1}[R]_{aq}`.
pub(crate) fn fdes_bracket(z: &IntSeries, k: u32, step: u32) -> IntSeries {
    let (big_q, rem) = (k / step, k % step);
    let first = bracket(z, big_q + 1, 1, &tqa(0, step, 0));
    let second = term(z, 1, &tqa(0, 1, 1))
        .mul(&bracket(z, step - 1, 1, &tqa(0, 1, 1)))
        .and_then(|x| x.mul(&bracket(z, big_q, 1, &tqa(0, step, 0))))
        .expect("same space");
    let third = term(z, 1, &tqa(0, big_q * step + 1, 1))
        .mul(&bracket(z, rem, 1, &tqa(0, 1, 1)))
        .expect("same space");
    first.add(&second).and_then(|x| x.add(&third)).expect("same space")
}

fn fdes_generating_function(z: &IntSeries, n: u32, step: u32) -> IntSeries {
    let mut sum = z.zero_like();
    for k in 0..=z.caps()[0] {
        let piece = term(z, 1, &tqa(k, 0, 0))
            .mul(&fdes_bracket(z, k, step).pow(n))
            .expect("same space");
        sum = sum.add(&piece).expect("same space");
    }
    sum
}

/// `{Σ_{k ≤ T} t^k [k·step + 1]_q^n}_{q^p}` in `(t, q)`.
fn bracket_power_sum(z: &IntSeries, n: u32, step: u32, p: u32) -> IntSeries {
    let mut sum = z.zero_like();
    for k in 0..=z.caps()[0] {
        let piece = term(z, 1, &[k, 0])
            .mul(&bracket(z, k * step + 1, 1, &[0, 1]).pow(n))
            .expect("same space");
        sum = sum.add(&piece).expect("same space");
    }
    sum.extract_multiples_exps(&[0, p])
}

/// Direct sum over `f ∈ ℕⁿ(p)` of `t^{max f} q^{|f|} a^{col_{r/s}(f)}`,
/// times `1/(1-t)`.
fn max_statistic_oracle(z: &IntSeries, n: u32, step: u32, p: u32) -> IntSeries {
    struct Walk {
        t_cap: u32,
        q_cap: u32,
        step: u32,
        p: u32,
        tally: BTreeMap<(u32, u32, u32), i64>,
    }
    impl Walk {
        fn go(&mut self, f: (u32, u32, u32), left: u32) {
            if left == 0 {
                if f.1.is_multiple_of(self.p) {
                    *self.tally.entry(f).or_insert(0) += 1;
                }
                return;
            }
            for x in 0..=self.t_cap.min(self.q_cap - f.1) {
                self.go((f.0.max(x), f.1 + x, f.2 + x % self.step), left - 1);
            }
        }
    }
    let mut w = Walk {
        t_cap: z.caps()[0],
        q_cap: z.caps()[1],
        step,
        p,
        tally: BTreeMap::new(),
    };
    w.go((0, 0, 0), n);
    let tally = w.tally;
    let mut s = series_from(z, &tally, |k| tqa(k.0, k.1, k.2));
    s.mul_geom_in_place(&num_bigint::BigInt::from(1), &tqa(1, 0, 0))
        .expect("positive degree");
    s
}

impl<E: Executor> Verifier<E> {
    /// `(des, fmaj, col)` Carlitz identity, plus its `a = 1` specialisation and
    /// the bracket identity that links the two.
    pub fn carlitz_des(&self, group: GroupDescriptor, caps: CarlitzCaps) -> Result<VerificationReport> {
        require_positive_caps(&[("t", caps.t), ("q", caps.q)])?;
        let (r, p, s, n) = (group.r(), group.p(), group.s(), group.n());
        let step = group.step();
        let (tally, count) = self.tally(group, |g| {
            let f = flag_stats(g);
            Some(((f.des, f.fmaj, f.col), 1))
        })?;

        let z = int_space(&["t", "q", "a"], &[caps.t, caps.q, caps.a]);
        let region = [caps.t, caps.q, caps.a];
        let lhs = des_generating_function(&z, n, step, p);
        let dist = series_from(&z, &tally, |k| tqa(k.0, k.1, k.2));
        let rhs = divide_by_denominators(dist, n, r, step, s, 1);

        let mut b = ReportBuilder::new("carlitz-des")
            .group(&group)
            .param("tMax", caps.t)
            .param("qMax", caps.q)
            .param("aMax", caps.a);
        b.region(z.vars(), &region);
        b.count(count);
        b.check(
            "trivariate generating function = enumeration",
            true,
            lhs.equal_on(&rhs, &region)?,
        );

        let z2 = int_space(&["t", "q"], &[caps.t, caps.q]);
        let mut left = z2.zero_like();
        let mut right = z2.zero_like();
        for k in 0..=caps.t {
            let tk = term(&z2, 1, &[k, 0]);
            let l = bracket(&z2, k + 1, 1, &[0, step])
                .add(
                    &term(&z2, 1, &[0, 1])
                        .mul(&bracket(&z2, k, 1, &[0, step]))
                        .and_then(|x| x.mul(&bracket(&z2, step - 1, 1, &[0, 1])))
                        .expect("same space"),
                )
                .expect("same space");
            left = left.add(&tk.mul(&l).expect("same space")).expect("same space");
            right = right
                .add(&tk.mul(&bracket(&z2, k * step + 1, 1, &[0, 1])).expect("same space"))
                .expect("same space");
        }
        let region2 = [caps.t, caps.q];
        b.check("a=1 bracket collapse", true, left.equal_on(&right, &region2)?);

        let mut flat = BTreeMap::new();
        for (&(d, f, _), &w) in &tally {
            *flat.entry((d, f)).or_insert(0i64) += w;
        }
        let lhs2 = bracket_power_sum(&z2, n, step, p);
        let rhs2 = divide_by_denominators(series_from(&z2, &flat, |k| vec![k.0, k.1]), n, r, step, s, 1);
        b.check("a=1 specialisation: (des, fmaj)", true, lhs2.equal_on(&rhs2, &region2)?);
        Ok(b.finish())
    }

    /// `(fdes, fmaj)` Carlitz identity.
    pub fn carlitz_fdes(&self, group: GroupDescriptor, caps: FdesCaps) -> Result<VerificationReport> {
        require_positive_caps(&[("t", caps.t), ("q", caps.q)])?;
        let (r, p, n) = (group.r(), group.p(), group.n());
        let step = group.step();
        let (tally, count) = self.tally(group, |g| {
            let f = flag_stats(g);
            Some(((f.fdes, f.fmaj), 1))
        })?;
        let z = int_space(&["t", "q"], &[caps.t, caps.q]);
        let region = [caps.t, caps.q];
        let lhs = bracket_power_sum(&z, n, 1, p);
        let rhs = divide_by_denominators(series_from(&z, &tally, |k| vec![k.0, k.1]), n, r, step, r, step);

        let mut b = ReportBuilder::new("carlitz-fdes")
            .group(&group)
            .param("tMax", caps.t)
            .param("qMax", caps.q);
        b.region(z.vars(), &region);
        b.count(count);
        b.check("generating function = enumeration", true, lhs.equal_on(&rhs, &region)?);
        Ok(b.finish())
    }

    /// `(fdes, fmaj, col)` identity.
    ///
    /// The enumeration side is ground truth. The closed form uses
    /// `Q = ⌊k/(r/s)⌋` in the third summand, applies `{·}_{q^p}`, and takes
    /// the denominator of the `(fdes, fmaj)` identity. The report also
    /// carries a direct sum over `ℕⁿ(p)`, the `a = 1` specialisation, and
    /// two informational variants: the `des`-style denominator and the
    /// closed form without `{·}_{q^p}`.
    pub fn fdes_trivariate(&self, group: GroupDescriptor, caps: CarlitzCaps) -> Result<VerificationReport> {
        require_positive_caps(&[("t", caps.t), ("q", caps.q)])?;
        let (r, p, s, n) = (group.r(), group.p(), group.s(), group.n());
        let step = group.step();
        let (tally, count) = self.tally(group, |g| {
            let f = flag_stats(g);
            Some(((f.fdes, f.fmaj, f.col), 1))
        })?;
        let z = int_space(&["t", "q", "a"], &[caps.t, caps.q, caps.a]);
        let region = [caps.t, caps.q, caps.a];
        let dist = series_from(&z, &tally, |k| tqa(k.0, k.1, k.2));
        let enumeration = divide_by_denominators(dist.clone(), n, r, step, r, step);
        let closed_raw = fdes_generating_function(&z, n, step);
        let closed = closed_raw.extract_multiples_exps(&[0, p, 0]);

        let mut b = ReportBuilder::new("fdes-trivariate")
            .group(&group)
            .param("tMax", caps.t)
            .param("qMax", caps.q)
            .param("aMax", caps.a);
        b.region(z.vars(), &region);
        b.count(count);
        b.check(
            "closed form = enumeration",
            true,
            closed.equal_on(&enumeration, &region)?,
        );
        b.check(
            "direct sum over N^n(p) = enumeration",
            true,
            max_statistic_oracle(&z, n, step, p).equal_on(&enumeration, &region)?,
        );

        let z2 = int_space(&["t", "q"], &[caps.t, caps.q]);
        let region2 = [caps.t, caps.q];
        let mut flat = BTreeMap::new();
        for (&(d, f, _), &w) in &tally {
            *flat.entry((d, f)).or_insert(0i64) += w;
        }
        let enum_a1 = divide_by_denominators(series_from(&z2, &flat, |k| vec![k.0, k.1]), n, r, step, r, step);
        b.check(
            "a=1: enumeration = (fdes, fmaj) closed form",
            true,
            enum_a1.equal_on(&bracket_power_sum(&z2, n, 1, p), &region2)?,
        );

        let zq = int_space(&["t", "q", "a"], &[caps.t, caps.q, 0]);
        let mut left = zq.zero_like();
        let mut right = zq.zero_like();
        for k in 0..=caps.t {
            let tk = term(&zq, 1, &tqa(k, 0, 0));
            // the bracket has a-degree below r/s, so a cap of k + r/s keeps it whole
            let za = int_space(&["t", "q", "a"], &[caps.t, caps.q, k + step]);
            let full = fdes_bracket(&za, k, step)
                .specialize_to_one("a")?
                .truncate(&[caps.t, caps.q, 0]);
            left = left.add(&tk.mul(&full).expect("same space")).expect("same space");
            right = right
                .add(&tk.mul(&bracket(&zq, k + 1, 1, &tqa(0, 1, 0))).expect("same space"))
                .expect("same space");
        }
        b.check(
            "a=1: closed-form bracket = [k+1]_q",
            true,
            left.equal_on(&right, &[caps.t, caps.q, 0])?,
        );

        let des_style = divide_by_denominators(dist, n, r, step, s, 1);
        b.check(
            "variant: des-style denominator",
            false,
            closed.equal_on(&des_style, &region)?,
        );
        b.check(
            "variant: without {.}_{q^p}",
            false,
            closed_raw.equal_on(&enumeration, &region)?,
        );
        Ok(b.finish())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;

    #[test]
    fn empty_rank_gives_geometric_series() {
        let z = int_space(&["t", "q", "a"], &[5, 5, 5]);
        let lhs = des_generating_function(&z, 0, 2, 1);
        let mut one = z.constant_like(num_bigint::BigInt::from(1));
        one.mul_geom_in_place(&num_bigint::BigInt::from(1), &[1, 0, 0]).unwrap();
        assert_eq!(lhs.equal_on(&one, &[5, 5, 5]).unwrap(), None);
    }

    #[test]
    fn symmetric_group_two() {
        let v = Verifier::new();
        let g = make_group(1, 1, 1, 2).unwrap();
        let caps = CarlitzCaps { t: 4, q: 6, a: 2 };
        assert!(v.carlitz_des(g, caps).unwrap().is_match());
        assert!(v.carlitz_fdes(g, caps).unwrap().is_match());
    }

    #[test]
    fn small_groups() {
        let v = Verifier::new();
        let caps = CarlitzCaps { t: 6, q: 6, a: 6 };
        for (r, p, s, n) in [(2, 1, 1, 2), (2, 1, 2, 2), (4, 2, 2, 2), (3, 1, 1, 2), (4, 1, 2, 3)] {
            let g = make_group(r, p, s, n).unwrap();
            let rep = v.carlitz_des(g, caps).unwrap();
            assert!(rep.is_match(), "{g}: {rep:?}");
            let rep = v.carlitz_fdes(g, caps).unwrap();
            assert!(rep.is_match(), "{g}: {rep:?}");
            let rep = v.fdes_trivariate(g, caps).unwrap();
            assert!(rep.is_match(), "{g}: {rep:?}");
        }
    }

    #[test]
    fn caps_must_be_positive() {
        let v = Verifier::new();
        let g = make_group(1, 1, 1, 2).unwrap();
        let caps = CarlitzCaps { t: 0, q: 4, a: 1 };
        assert!(matches!(v.carlitz_fdes(g, caps), Err(crate::Error::Region(_))));
    }
}
