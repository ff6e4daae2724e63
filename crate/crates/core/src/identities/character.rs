//! Signed and twisted `fmaj` generating functions.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{bracket, int_space, series_from, FirstMismatch, ReportBuilder, VerificationReport, Verifier};
use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};
use crate::exec::Executor;
use crate::group::{residue, unrank_permutation, GroupDescriptor};
use crate::series::{CycSeries, CyclotomicRing, Ring, Variables};
use crate::stats::{descent_positions, flag_stats, flag_stats_of, Order};

/// `(−1)^{inv(σ)}` and the descent mask of every `σ ∈ S_n`.
struct PermutationTable {
    rows: Vec<(u32, i8)>,
}

impl PermutationTable {
    fn new(n: usize) -> Self {
        let total: u64 = (1..=n as u64).product();
        let rows = (0..total)
            .map(|rank| {
                let w = unrank_permutation(n, rank);
                let mut mask = 0u32;
                for i in 1..n {
                    if w[i - 1] > w[i] {
                        mask |= 1 << i;
                    }
                }
                let mut inv = 0u32;
                for i in 0..n {
                    for j in i + 1..n {
                        inv += u32::from(w[i] > w[j]);
                    }
                }
                (mask, if inv.is_multiple_of(2) { 1 } else { -1 })
            })
            .collect();
        Self { rows }
    }
}

fn multinomial(top: u64, parts: &[u64]) -> BigInt {
    let mut acc = BigInt::from(1);
    let mut remaining = top;
    for &k in parts {
        acc *= num_integer::binomial(BigInt::from(remaining), BigInt::from(k));
        remaining -= k;
    }
    acc
}

impl<E: Executor> Verifier<E> {
    /// `Σ_g ε^{inv|g|} ζ_r^{k·c(g)} q^{fmaj(g)}` against the product formula.
    ///
    /// The character needs `k < r/p` and `s | kn`. The classification of
    /// one-dimensional characters assumes `n ≥ 3`; the identity itself is
    /// checked for every `n`.
    pub fn character_fmaj(&self, group: GroupDescriptor, eps: i32, k: u32) -> Result<VerificationReport> {
        let (r, p, s, n) = (group.r(), group.p(), group.s(), group.n());
        if eps != 1 && eps != -1 {
            return Err(Error::Range(alloc::format!("epsilon must be ±1, got {eps}")));
        }
        if k >= r / p {
            return Err(Error::CharacterCondition(alloc::format!(
                "k = {k} not in [0, {}]",
                r / p - 1
            )));
        }
        if !(k * n).is_multiple_of(s) {
            return Err(Error::CharacterCondition(alloc::format!(
                "s = {s} does not divide kn = {}",
                k * n
            )));
        }
        let (tally, count) = self.tally(group, |g| {
            let lift = g.lift();
            let fmaj = flag_stats(g).fmaj;
            let zeta = residue(k as i64 * lift.color_sum() as i64, r);
            let sign = if eps == -1 && lift.inversions() % 2 == 1 { -1 } else { 1 };
            Some(((fmaj, zeta), sign))
        })?;

        let max_fmaj = tally.keys().map(|k| k.0).max().unwrap_or(0);
        let rhs_degree = p * (1..n).map(|j| j * r / p - 1).sum::<u32>() + p * (n * r / (p * s) - 1) + n * (p - 1);
        let cap = max_fmaj.max(rhs_degree);

        let ring = CyclotomicRing::new(r);
        let zero = CycSeries::zero(ring.clone(), Variables::new(&["q"]), &[cap]);
        let mut lhs = zero.clone();
        let mut buckets: alloc::collections::BTreeMap<u32, Vec<BigInt>> = Default::default();
        for (&(f, z), &w) in &tally {
            let row = buckets
                .entry(f)
                .or_insert_with(|| alloc::vec![BigInt::zero(); r as usize]);
            row[z as usize] += w;
        }
        for (f, row) in buckets {
            let c = CycInt::from_power_counts(ring.field(), &row);
            lhs = lhs.add(&zero.term_like(c, &[f])).expect("same space");
        }

        let zk = ring.zeta_pow(k as i64);
        let sign = |e: u32| {
            if eps == -1 && e % 2 == 1 {
                ring.int(-1)
            } else {
                ring.one()
            }
        };
        let br = |len: u32, coef: CycInt| {
            let base = zero.term_like(ring.pow(&coef, p), &[p]);
            CycSeries::q_bracket(len, &base).expect("single-term base")
        };
        let mut rhs = zero.constant_like(ring.one());
        for j in 1..n {
            let coef = ring.mul(&sign(j - 1), &zk);
            rhs = rhs.mul(&br(j * r / p, coef)).expect("same space");
        }
        let coef = ring.mul(&sign(n - 1), &zk);
        rhs = rhs.mul(&br(n * r / (p * s), coef)).expect("same space");
        let m = n / 2;
        let plain = CycSeries::q_bracket(p, &zero.term_like(zk.clone(), &[1])).expect("single term");
        let signed = CycSeries::q_bracket(p, &zero.term_like(ring.mul(&sign(1), &zk), &[1])).expect("single term");
        let brace = plain
            .pow(n - m)
            .mul(&signed.pow(m))
            .expect("same space")
            .extract_multiples_exps(&[p]);
        rhs = rhs.mul(&brace).expect("same space");

        let mut b = ReportBuilder::new("character-fmaj")
            .group(&group)
            .param("eps", eps)
            .param("k", k);
        b.region(lhs.vars(), &[cap]);
        b.count(count);
        b.check("enumeration = product formula", true, lhs.equal_on(&rhs, &[cap])?);
        if n < 3 {
            b.note("n < 3: the character list may be incomplete, the identity is still checked".into());
        }
        Ok(b.finish())
    }

    /// `Σ_{σ ∈ S(k_{r-1},…,k_0)} sign(σ)` against the closed form: zero when
    /// two parts are odd, otherwise a multinomial in the halved parts.
    ///
    /// `composition` lists `(k_{r-1}, …, k_0)` and may contain zeros.
    pub fn signed_multinomial(&self, composition: &[u32]) -> Result<VerificationReport> {
        if composition.is_empty() {
            return Err(Error::Composition("composition has no parts".into()));
        }
        let n: u32 = composition.iter().sum();
        if n > 31 {
            return Err(Error::Composition(alloc::format!("n = {n} too large")));
        }
        let order: u128 = (1..=n as u128).product();
        if order > self.budget() as u128 {
            return Err(Error::BudgetExceeded {
                order,
                budget: self.budget(),
            });
        }
        let table = PermutationTable::new(n as usize);
        Ok(signed_multinomial_with(&table, composition))
    }

    /// Runs [`Verifier::signed_multinomial`] on every weak composition of
    /// every `n ≤ max_n` into exactly `parts` parts, reusing one sign table
    /// per `n`.
    pub fn signed_multinomial_sweep(&self, max_n: u32, parts: usize) -> Result<Vec<VerificationReport>> {
        if parts == 0 {
            return Err(Error::Composition("composition has no parts".into()));
        }
        let mut out = Vec::new();
        for n in 0..=max_n {
            let order: u128 = (1..=n as u128).product();
            if order > self.budget() as u128 {
                return Err(Error::BudgetExceeded {
                    order,
                    budget: self.budget(),
                });
            }
            let table = PermutationTable::new(n as usize);
            let mut comp = alloc::vec![0u32; parts];
            weak_compositions(n, &mut comp, 0, &mut |c| out.push(signed_multinomial_with(&table, c)));
        }
        Ok(out)
    }

    /// `Σ_{g ∈ G(r,n)} sign(|g|) q^{fmaj(g)} = [r]_q [2r]_{-q} ⋯ [nr]_{±q}`,
    /// together with the sign sum over increasing windows and the bracket
    /// identities used to assemble the product.
    pub fn signed_wreath(&self, r: u32, n: u32) -> Result<VerificationReport> {
        let group = GroupDescriptor::wreath(r, n)?;
        let (tally, count) = self.tally(group, |g| {
            let lift = g.lift();
            let sign = if lift.inversions() % 2 == 0 { 1 } else { -1 };
            let fs = flag_stats(g);
            let increasing = descent_positions(lift, Order::Color).iter().all(|&i| i == 0);
            Some(((fs.fmaj, increasing.then_some(fs.col)), sign))
        })?;

        let cap = r * n * (n + 1) / 2;
        let z = int_space(&["q"], &[cap]);
        let lhs = series_from(&z, &tally, |k| alloc::vec![k.0]);
        let mut rhs = z.constant_like(BigInt::from(1));
        for j in 1..=n {
            let c = if j % 2 == 0 { -1 } else { 1 };
            rhs = rhs.mul(&bracket(&z, j * r, c, &[1])).expect("same space");
        }

        let mut b = ReportBuilder::new("signed-wreath").param("r", r).param("n", n);
        b.region(z.vars(), &[cap]);
        b.count(count);
        b.check("enumeration = alternating product", true, lhs.equal_on(&rhs, &[cap])?);

        let m = n / 2;
        let mut u_tally = alloc::collections::BTreeMap::new();
        for ((_, col), &w) in &tally {
            if let Some(c) = col {
                *u_tally.entry(*c).or_insert(0i64) += w;
            }
        }
        let u_lhs = series_from(&z, &u_tally, |c| alloc::vec![*c]);
        let mut u_rhs = bracket(&z, r, 1, &[2]).pow(m);
        if n % 2 == 1 {
            u_rhs = u_rhs.mul(&bracket(&z, r, 1, &[1])).expect("same space");
        }
        b.check(
            "increasing windows: sign sum by col",
            true,
            u_lhs.equal_on(&u_rhs, &[cap])?,
        );

        for i in 1..=m {
            let c = 4 * i * r;
            let z = int_space(&["q"], &[c]);
            let left = bracket(&z, r, 1, &[2])
                .mul(&bracket(&z, 2 * i - 1, 1, &[r]))
                .and_then(|x| x.mul(&bracket(&z, 2 * i, -1, &[r])))
                .expect("same space");
            let right = bracket(&z, (2 * i - 1) * r, 1, &[1])
                .mul(&bracket(&z, 2 * i * r, -1, &[1]))
                .expect("same space");
            b.check(
                &alloc::format!("bracket pairing i={i}"),
                true,
                left.equal_on(&right, &[c])?,
            );
        }
        if n % 2 == 1 {
            let c = n * r;
            let z = int_space(&["q"], &[c]);
            let left = bracket(&z, r, 1, &[1])
                .mul(&bracket(&z, n, 1, &[r]))
                .expect("same space");
            b.check(
                "odd tail bracket",
                true,
                left.equal_on(&bracket(&z, n * r, 1, &[1]), &[c])?,
            );
        }
        Ok(b.finish())
    }

    /// For every class `g ∈ G(r,1,s,n)`: summing `t^{λ₁} q^{fmaj}` over its
    /// `s` lifts, each read in `G(r,n)`, gives
    /// `t^{λ₁(g)} q^{fmaj(g)} [s]_{t^{r/s} q^{nr/s}}`.
    pub fn lift_identity(&self, r: u32, s: u32, n: u32) -> Result<VerificationReport> {
        let group = GroupDescriptor::new(r, 1, s, n)?;
        self.ensure_enumerable(&group)?;
        let step = r / s;
        let found = self.exec.fold_elements(
            group,
            || (None::<FirstMismatch>, 0u64),
            |acc, g| {
                acc.1 += 1;
                if acc.0.is_some() {
                    return;
                }
                let mut lhs: Vec<(u32, u32)> = g
                    .lifts()
                    .iter()
                    .map(|l| {
                        let fs = flag_stats_of(l, r, 1);
                        (fs.fdes, fs.fmaj)
                    })
                    .collect();
                lhs.sort_unstable();
                let base = flag_stats(g);
                let rhs: Vec<(u32, u32)> = (0..s)
                    .map(|j| (base.fdes + j * step, base.fmaj + j * n * step))
                    .collect();
                if lhs != rhs {
                    acc.0 = Some(FirstMismatch {
                        monomial: g.to_string(),
                        lhs: render_tq(&lhs),
                        rhs: render_tq(&rhs),
                    });
                }
            },
            |a, b| (a.0.or(b.0), a.1 + b.1),
        );
        let mut b = ReportBuilder::new("lift").param("r", r).param("s", s).param("n", n);
        b.count(found.1);
        b.check("per-element lift sum", true, found.0);
        Ok(b.finish())
    }
}

fn render_tq(terms: &[(u32, u32)]) -> String {
    let mut out = String::new();
    for (i, (a, b)) in terms.iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        let _ = write!(out, "t^{a}*q^{b}");
    }
    out
}

fn weak_compositions(n: u32, buf: &mut [u32], at: usize, emit: &mut impl FnMut(&[u32])) {
    if at + 1 == buf.len() {
        buf[at] = n;
        emit(buf);
        return;
    }
    for k in 0..=n {
        buf[at] = k;
        weak_compositions(n - k, buf, at + 1, emit);
    }
}

fn signed_multinomial_with(table: &PermutationTable, composition: &[u32]) -> VerificationReport {
    let n: u32 = composition.iter().sum();
    // allowed descents: partial sums k_{r-1}, k_{r-1}+k_{r-2}, …, leaving out k_0
    let mut allowed = 0u32;
    let mut acc = 0;
    for &k in &composition[..composition.len() - 1] {
        acc += k;
        if acc >= 1 && acc < n {
            allowed |= 1 << acc;
        }
    }
    let lhs: i64 = table
        .rows
        .iter()
        .filter(|(mask, _)| mask & !allowed == 0)
        .map(|&(_, sgn)| i64::from(sgn))
        .sum();
    let odd = composition.iter().filter(|&&k| k % 2 == 1).count();
    let rhs = if odd >= 2 {
        BigInt::zero()
    } else {
        let halves: Vec<u64> = composition.iter().map(|&k| u64::from(k / 2)).collect();
        multinomial(u64::from(n / 2), &halves)
    };
    let comp_text = composition.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",");
    let mut b = ReportBuilder::new("signed-multinomial").param("n", n);
    for (i, &k) in composition.iter().enumerate() {
        b = b.param(&alloc::format!("k{}", composition.len() - 1 - i), k);
    }
    b.count(table.rows.len() as u64);
    let lhs = BigInt::from(lhs);
    let mismatch = (lhs != rhs).then(|| FirstMismatch {
        monomial: alloc::format!("({comp_text})"),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    });
    b.check("sign sum = multinomial", true, mismatch);
    b.finish()
}
