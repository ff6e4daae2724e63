//! 2-partite partitions and the map from `(g, λ, μ, h, k)`.

use alloc::format;
use alloc::vec::Vec;

use super::check_partition;
use crate::error::{Error, Result};
use crate::group::ProjectiveElement;
use crate::stats::lambda_data;

/// A `2 × n` matrix whose first row is weakly decreasing and whose second
/// row is weakly decreasing on ties of the first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Bipartite {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

impl Bipartite {
    pub fn is_two_partite(&self) -> bool {
        self.top.len() == self.bottom.len()
            && (1..self.top.len()).all(|i| {
                self.top[i - 1] > self.top[i]
                    || (self.top[i - 1] == self.top[i] && self.bottom[i - 1] >= self.bottom[i])
            })
    }

    /// The `l ∈ [0,s-1]` with every column sum `≡ l·r/s (mod r)`, if any.
    pub fn column_class(&self, r: u32, s: u32) -> Option<u32> {
        let step = r / s;
        let mut sums = self.top.iter().zip(&self.bottom).map(|(a, b)| (a + b) % r);
        let first = sums.next().unwrap_or(0);
        (first % step == 0 && sums.all(|x| x == first)).then_some(first / step)
    }

    /// Membership in `ℬ(r,s,1,n)`; `s = 1` gives `ℬ(r,n)`.
    pub fn is_member(&self, r: u32, s: u32) -> bool {
        self.is_two_partite() && self.column_class(r, s).is_some()
    }
}

/// `f⁽¹⁾ᵢ = λᵢ(g) + r·λᵢ + h·r/s` and
/// `f⁽²⁾ᵢ = λ_{|g(i)|}(g⁻¹) + r·μ_{|g(i)|} + k·r/s`, for `g ∈ G(r,1,s,n)`.
pub fn bipartite_from_tuple(g: &ProjectiveElement, lambda: &[u32], mu: &[u32], h: u32, k: u32) -> Result<Bipartite> {
    let group = g.group();
    if group.p() != 1 {
        return Err(Error::Scope(format!("2-partite map needs p = 1, got {group}")));
    }
    let (r, s, step) = (group.r(), group.s(), group.step());
    let n = g.n();
    check_partition(lambda, n)?;
    check_partition(mu, n)?;
    if h >= s || k >= s {
        return Err(Error::Range(format!("h = {h}, k = {k} must lie in [0,{}]", s - 1)));
    }
    let lam_g = lambda_data(g.lift(), r, step).lambda;
    let lam_inv = lambda_data(g.inverse().lift(), r, step).lambda;
    let top = (0..n).map(|i| lam_g[i] + r * lambda[i] + h * step).collect();
    let bottom = g
        .lift()
        .sigma()
        .iter()
        .map(|&v| {
            let j = v as usize - 1;
            lam_inv[j] + r * mu[j] + k * step
        })
        .collect();
    Ok(Bipartite { top, bottom })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{enumerate, make_group, parse_element};
    use crate::stats::{col_residues, flag_stats};
    use alloc::collections::BTreeSet;
    use alloc::vec;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn partitions(n: usize, max: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 0..=max {
            for mut rest in partitions(n - 1, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn examples() {
        let grp = make_group(2, 1, 1, 2).unwrap();
        let f = bipartite_from_tuple(&grp.identity(), &[0, 0], &[0, 0], 0, 0).unwrap();
        assert_eq!(
            f,
            Bipartite {
                top: vec![0, 0],
                bottom: vec![0, 0]
            }
        );
        let g = parse_element("[1^1,2^1]", grp).unwrap();
        let f = bipartite_from_tuple(&g, &[1, 0], &[0, 0], 0, 0).unwrap();
        assert_eq!(
            f,
            Bipartite {
                top: vec![3, 1],
                bottom: vec![1, 1]
            }
        );
        assert!(f.is_member(2, 1));
    }

    #[test]
    fn scope_and_range() {
        let grp = make_group(2, 2, 1, 2).unwrap();
        assert!(matches!(
            bipartite_from_tuple(&grp.identity(), &[0, 0], &[0, 0], 0, 0),
            Err(Error::Scope(_))
        ));
        let grp = make_group(2, 1, 2, 2).unwrap();
        assert!(matches!(
            bipartite_from_tuple(&grp.identity(), &[0, 0], &[0, 0], 2, 0),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn injective_on_boxes() {
        for (r, s) in [(2, 2), (3, 1)] {
            let grp = make_group(r, 1, s, 2).unwrap();
            let parts = partitions(2, 4);
            let mut seen = BTreeSet::new();
            let mut total = 0;
            for g in enumerate(grp, 1000).unwrap() {
                for lambda in &parts {
                    for mu in &parts {
                        for h in 0..s {
                            for k in 0..s {
                                let f = bipartite_from_tuple(&g, lambda, mu, h, k).unwrap();
                                assert!(f.is_member(r, s), "{g} {lambda:?} {mu:?} {h} {k} -> {f:?}");
                                seen.insert(f);
                                total += 1;
                            }
                        }
                    }
                }
            }
            assert_eq!(seen.len(), total);
        }
    }

    proptest! {
        #[test]
        fn six_statistics(rank in 0usize..72, l in proptest::collection::vec(0u32..5, 2),
                          m in proptest::collection::vec(0u32..5, 2), h in 0u32..3, k in 0u32..3) {
            let (r, s) = (6, 3);
            let step = r / s;
            let grp = make_group(r, 1, s, 2).unwrap();
            let all: Vec<_> = enumerate(grp, 1000).unwrap().collect();
            let g = &all[rank % all.len()];
            let mut lambda = l.clone();
            lambda.sort_unstable_by(|a, b| b.cmp(a));
            let mut mu = m.clone();
            mu.sort_unstable_by(|a, b| b.cmp(a));
            let f = bipartite_from_tuple(g, &lambda, &mu, h, k).unwrap();
            prop_assert!(f.is_member(r, s));
            let (a, b) = (flag_stats(g), flag_stats(&g.inverse()));
            prop_assert_eq!(*f.top.iter().max().unwrap(), a.fdes + r * lambda[0] + h * step);
            prop_assert_eq!(*f.bottom.iter().max().unwrap(), b.fdes + r * mu[0] + k * step);
            prop_assert_eq!(f.top.iter().sum::<u32>(), a.fmaj + r * lambda.iter().sum::<u32>() + h * 2 * step);
            prop_assert_eq!(f.bottom.iter().sum::<u32>(), b.fmaj + r * mu.iter().sum::<u32>() + k * 2 * step);
            prop_assert_eq!(col_residues(&f.top, step), a.col as u64);
            prop_assert_eq!(col_residues(&f.bottom, step), b.col as u64);
        }
    }
}
