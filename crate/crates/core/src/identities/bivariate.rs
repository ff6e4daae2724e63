//! Bivariate identities: six statistics of `g` and `g⁻¹`, and the
//! Hilbert-series specialisation.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;

use num_bigint::BigInt;

use super::{
    int_space, lattice_step, require_positive_caps, series_from, term, ReportBuilder, VerificationReport, Verifier,
};
use crate::error::Result;
use crate::exec::Executor;
use crate::group::GroupDescriptor;
use crate::series::IntSeries;
use crate::stats::flag_stats;

/// Caps for `verify six-stats`. `u` is also the largest rank enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SixStatsCaps {
    pub u: u32,
    pub t: u32,
    pub q: u32,
    /// Cap for `a₁, a₂`; `None` means `u·(r/s - 1)`, which loses nothing.
    pub a: Option<u32>,
}

impl Default for SixStatsCaps {
    fn default() -> Self {
        Self {
            u: 3,
            t: 4,
            q: 6,
            a: None,
        }
    }
}

/// Caps for `verify hilbert`. `u` is also the largest rank enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HilbertCaps {
    pub u: u32,
    pub q: u32,
}

impl Default for HilbertCaps {
    fn default() -> Self {
        Self { u: 3, q: 6 }
    }
}

/// `Π 1/(1 - u a₁^{i mod step} a₂^{j mod step} q₁^i q₂^j)` over
/// `i ≤ i_max`, `j ≤ j_max`, `i + j ≡ target (mod r)`, in a space laid out
/// as `(u, q1, q2[, a1, a2])`.
fn lattice_product(z: &IntSeries, i_max: u32, j_max: u32, r: u32, target: u32, step: Option<u32>) -> IntSeries {
    let one = BigInt::from(1);
    let mut prod = z.constant_like(one.clone());
    for i in 0..=i_max {
        for j in 0..=j_max {
            if (i + j) % r != target % r {
                continue;
            }
            let mut m = vec![1, i, j];
            if let Some(step) = step {
                m.extend([i % step, j % step]);
            }
            prod.mul_geom_in_place(&one, &m).expect("positive u-degree");
        }
    }
    prod
}

/// Sum over `l < terms` of lattice products with residue `l·shift`.
fn lattice_sum(z: &IntSeries, q: u32, r: u32, shift: u32, terms: u32) -> IntSeries {
    let mut sum = z.zero_like();
    for l in 0..terms {
        sum = sum
            .add(&lattice_product(z, q, q, r, l * shift, None))
            .expect("same space");
    }
    sum
}

/// `Σ_{d | n} uⁿ H_n / ((1-q₁^{n·top})(1-q₂^{n·top}) Π_{j<n}(1-q₁^{jr})(1-q₂^{jr}))`
/// for `n ≥ 1`, plus `constant`.
fn hilbert_side(
    z: &IntSeries,
    constant: i64,
    d: u32,
    r: u32,
    top: u32,
    parts: &BTreeMap<u32, BTreeMap<(u32, u32), i64>>,
) -> IntSeries {
    let one = BigInt::from(1);
    let mut out = z.constant_like(BigInt::from(constant));
    for (&n, tally) in parts {
        if n % d != 0 {
            continue;
        }
        let mut s = series_from(z, tally, |k| vec![n, k.0, k.1]);
        s.mul_geom_in_place(&one, &[0, n * top, 0]).expect("positive degree");
        s.mul_geom_in_place(&one, &[0, 0, n * top]).expect("positive degree");
        for j in 1..n {
            s.mul_geom_in_place(&one, &[0, j * r, 0]).expect("positive degree");
            s.mul_geom_in_place(&one, &[0, 0, j * r]).expect("positive degree");
        }
        out = out.add(&s).expect("same space");
    }
    out
}

impl<E: Executor> Verifier<E> {
    /// Joint distribution of `(des, fmaj, col)` on `g` and `g⁻¹` over all
    /// ranks `n ≤ caps.u` with `d | n`, against the lattice-product
    /// generating function with `{·}_{u^d q₁^p}`.
    pub fn six_stats(&self, r: u32, p: u32, s: u32, caps: SixStatsCaps) -> Result<VerificationReport> {
        require_positive_caps(&[("u", caps.u), ("t", caps.t), ("q", caps.q)])?;
        let d = lattice_step(r, p, s);
        let base = GroupDescriptor::new(r, p, s, d)?;
        let step = base.step();
        let a_cap = caps.a.unwrap_or(caps.u * (step - 1));
        let region = [caps.u, caps.t, caps.t, caps.q, caps.q, a_cap, a_cap];
        let z = int_space(&["u", "t1", "t2", "q1", "q2", "a1", "a2"], &region);
        let one = BigInt::from(1);

        // lattice products do not involve t, so build them without it
        let w = int_space(&["u", "q1", "q2", "a1", "a2"], &[caps.u, caps.q, caps.q, a_cap, a_cap]);
        let mut cache: BTreeMap<(u32, u32), IntSeries> = BTreeMap::new();
        let mut lhs = z.zero_like();
        for k1 in 0..=caps.t {
            for k2 in 0..=caps.t {
                let key = ((k1 * step).min(caps.q), (k2 * step).min(caps.q));
                let inner = cache.entry(key).or_insert_with(|| {
                    let mut sum = w.zero_like();
                    for l in 0..s {
                        let prod = lattice_product(&w, key.0, key.1, r, l * step, Some(step));
                        sum = sum.add(&prod).expect("same space");
                    }
                    sum.extract_multiples_exps(&[d, p, 1, 1, 1])
                });
                for (e, c) in inner.terms() {
                    let lifted = z.term_like(c.clone(), &[e[0], k1, k2, e[1], e[2], e[3], e[4]]);
                    lhs = lhs.add(&lifted).expect("same space");
                }
            }
        }

        let mut rhs = term(&z, i64::from(s), &[0; 7]);
        rhs.mul_geom_in_place(&one, &[0, 1, 0, 0, 0, 0, 0])?;
        rhs.mul_geom_in_place(&one, &[0, 0, 1, 0, 0, 0, 0])?;
        let mut count = 0;
        let mut n = d;
        while n <= caps.u {
            let group = GroupDescriptor::new(r, p, s, n)?;
            let (tally, c) = self.tally(group, |g| {
                let a = flag_stats(g);
                let b = flag_stats(&g.inverse());
                Some(([a.des, b.des, a.fmaj, b.fmaj, a.col, b.col], 1))
            })?;
            count += c;
            let mut part = series_from(&z, &tally, |k| vec![n, k[0], k[1], k[2], k[3], k[4], k[5]]);
            for m in [
                [0, 1, 0, 0, 0, 0, 0],
                [0, 0, 1, 0, 0, 0, 0],
                [0, 1, 0, n * step, 0, 0, 0],
                [0, 0, 1, 0, n * step, 0, 0],
            ] {
                part.mul_geom_in_place(&one, &m)?;
            }
            for j in 1..n {
                part.mul_geom_in_place(&one, &[0, s, 0, j * r, 0, 0, 0])?;
                part.mul_geom_in_place(&one, &[0, 0, s, 0, j * r, 0, 0])?;
            }
            rhs = rhs.add(&part)?;
            n += d;
        }

        let mut b = ReportBuilder::new("six-stats")
            .param("r", r)
            .param("p", p)
            .param("s", s)
            .param("nMax", caps.u)
            .param("d", d);
        b.region(z.vars(), &region);
        b.count(count);
        b.check("lattice products = enumeration", true, lhs.equal_on(&rhs, &region)?);
        Ok(b.finish())
    }

    /// Bivariate `fmaj` distribution of `g` and `g⁻¹` against the lattice
    /// product over `i + j ≡ l·r/s (mod r)`, `l < s`, with `{·}_{u^d q₁^p}`.
    ///
    /// Also evaluates the variant with `l < p`, residues `l·r/s` and
    /// `{·}_{u^d q₁^s}`, against both `G(r,p,s,n)` and the dual `G(r,s,p,n)`,
    /// and the dual form of the main identity. These are informational; a
    /// note records which of them agree.
    pub fn hilbert(&self, r: u32, p: u32, s: u32, caps: HilbertCaps) -> Result<VerificationReport> {
        require_positive_caps(&[("u", caps.u), ("q", caps.q)])?;
        let d = lattice_step(r, p, s);
        GroupDescriptor::new(r, p, s, d)?;
        let region = [caps.u, caps.q, caps.q];
        let z = int_space(&["u", "q1", "q2"], &region);

        let mut count = 0;
        let mut primal = BTreeMap::new();
        let mut dual = BTreeMap::new();
        let mut n = d;
        while n <= caps.u {
            for (flip, out) in [(false, &mut primal), (true, &mut dual)] {
                let group = if flip {
                    GroupDescriptor::new(r, s, p, n)?
                } else {
                    GroupDescriptor::new(r, p, s, n)?
                };
                let (tally, c) = self.tally(group, |g| {
                    let a = flag_stats(g);
                    let b = flag_stats(&g.inverse());
                    Some(((a.fmaj, b.fmaj), 1))
                })?;
                if !flip {
                    count += c;
                }
                out.insert(n, tally);
            }
            n += d;
        }

        let main_lhs = lattice_sum(&z, caps.q, r, r / s, s).extract_multiples_exps(&[d, p, 1]);
        let main_rhs = hilbert_side(&z, i64::from(s), d, r, r / s, &primal);
        let variant_lhs = lattice_sum(&z, caps.q, r, r / s, p).extract_multiples_exps(&[d, s, 1]);
        let variant_same = hilbert_side(&z, i64::from(p), d, r, r / s, &primal);
        let variant_dual = hilbert_side(&z, i64::from(p), d, r, r / p, &dual);
        let dual_lhs = lattice_sum(&z, caps.q, r, r / p, p).extract_multiples_exps(&[d, s, 1]);

        let mut b = ReportBuilder::new("hilbert")
            .param("r", r)
            .param("p", p)
            .param("s", s)
            .param("nMax", caps.u)
            .param("d", d);
        b.region(z.vars(), &region);
        b.count(count);
        b.check(
            "lattice product = fmaj distribution",
            true,
            main_lhs.equal_on(&main_rhs, &region)?,
        );
        let same = variant_lhs.equal_on(&variant_same, &region)?;
        let swapped = variant_lhs.equal_on(&variant_dual, &region)?;
        let dual_main = dual_lhs.equal_on(&variant_dual, &region)?;
        let verdict = |m: &Option<_>| if m.is_none() { "agrees" } else { "disagrees" };
        b.note(format!(
            "variant (l < p, residues l*r/s, {{.}}_{{u^d q1^s}}): {} with G({r},{p},{s},n), {} with G({r},{s},{p},n)",
            verdict(&same),
            verdict(&swapped)
        ));
        b.note(format!(
            "dual form (l < p, residues l*r/p, {{.}}_{{u^d q1^s}}) {} with G({r},{s},{p},n)",
            verdict(&dual_main)
        ));
        b.check("variant l<p, q1^s vs G(r,p,s,n)", false, same);
        b.check("variant l<p, q1^s vs G(r,s,p,n)", false, swapped);
        b.check("dual form vs G(r,s,p,n)", false, dual_main);
        Ok(b.finish())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn symmetric_groups_six_stats() {
        let v = Verifier::new();
        let caps = SixStatsCaps {
            u: 2,
            t: 3,
            q: 5,
            a: None,
        };
        let rep = v.six_stats(1, 1, 1, caps).unwrap();
        assert!(rep.is_match(), "{rep:?}");
        assert_eq!(rep.count, 3);
    }

    #[test]
    fn hyperoctahedral_six_stats() {
        let v = Verifier::new();
        let caps = SixStatsCaps {
            u: 2,
            t: 3,
            q: 5,
            a: None,
        };
        let rep = v.six_stats(2, 1, 1, caps).unwrap();
        assert!(rep.is_match(), "{rep:?}");
        assert_eq!(rep.count, 10);
    }

    #[test]
    fn quotient_six_stats() {
        let v = Verifier::new();
        let caps = SixStatsCaps {
            u: 2,
            t: 3,
            q: 6,
            a: None,
        };
        for (r, p, s) in [(2, 1, 2), (2, 2, 1), (2, 2, 2), (3, 1, 3), (4, 2, 2)] {
            let rep = v.six_stats(r, p, s, caps).unwrap();
            assert!(rep.is_match(), "({r},{p},{s}): {rep:?}");
        }
    }

    #[test]
    fn classical_hilbert() {
        let v = Verifier::new();
        let rep = v.hilbert(1, 1, 1, HilbertCaps { u: 3, q: 6 }).unwrap();
        assert!(rep.is_match(), "{rep:?}");
        assert_eq!(rep.notes.len(), 2);
    }

    #[test]
    fn quotient_hilbert() {
        let v = Verifier::new();
        for (r, p, s) in [(2, 1, 2), (2, 2, 1), (4, 2, 2)] {
            let rep = v.hilbert(r, p, s, HilbertCaps { u: 2, q: 6 }).unwrap();
            assert!(rep.is_match(), "({r},{p},{s}): {rep:?}");
        }
    }

    #[test]
    fn bad_parameters() {
        let v = Verifier::new();
        assert!(matches!(
            v.hilbert(4, 3, 1, HilbertCaps::default()),
            Err(Error::Divisibility { .. })
        ));
        assert!(matches!(
            v.six_stats(
                2,
                1,
                1,
                SixStatsCaps {
                    u: 0,
                    ..SixStatsCaps::default()
                }
            ),
            Err(Error::Region(_))
        ));
    }
}
