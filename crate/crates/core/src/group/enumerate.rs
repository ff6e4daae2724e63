use alloc::vec::Vec;
use core::ops::Range;

use super::{ColoredPermutation, GroupDescriptor, ProjectiveElement};
use crate::error::{Error, Result};

/// Default cap on the group order for exhaustive enumeration.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// All elements of `group`, refusing groups whose order exceeds `budget`.
pub fn enumerate(group: GroupDescriptor, budget: u64) -> Result<Elements> {
    let order = group.order();
    if order > budget as u128 {
        return Err(Error::BudgetExceeded { order, budget });
    }
    Ok(Elements::permutation_range(
        group,
        0..Elements::permutation_count(&group),
    ))
}

/// The `rank`-th permutation of `1..=n` in lexicographic order.
pub fn unrank_permutation(n: usize, mut rank: u64) -> Vec<u32> {
    let mut pool: Vec<u32> = (1..=n as u32).collect();
    let mut fact = alloc::vec![1u64; n + 1];
    for i in 1..=n {
        fact[i] = fact[i - 1].saturating_mul(i as u64);
    }
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let idx = (rank / fact[i]) as usize;
        rank %= fact[i];
        out.push(pool.remove(idx));
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Deterministic stream of group elements: lexicographic in the one-line
/// form of `σ`, then lexicographic in the canonical color vector.
///
/// A stream can cover any contiguous range of permutation ranks, which is
/// how enumeration is split into independent chunks.
#[derive(Clone, Debug)]
pub struct Elements {
    group: GroupDescriptor,
    perm: Vec<u32>,
    colors: Vec<u32>,
    perms_left: u64,
    fresh: bool,
}

impl Elements {
    /// `n!`, the number of distinct underlying permutations.
    pub fn permutation_count(group: &GroupDescriptor) -> u64 {
        (1..=group.n() as u64).fold(1u64, |a, i| a.saturating_mul(i))
    }

    pub fn permutation_range(group: GroupDescriptor, ranks: Range<u64>) -> Self {
        let n = group.n() as usize;
        let total = Self::permutation_count(&group);
        let end = ranks.end.min(total);
        let start = ranks.start.min(end);
        Self {
            group,
            // an empty range still needs a valid rank to unrank
            perm: unrank_permutation(n, if start < total { start } else { 0 }),
            colors: alloc::vec![0; n],
            perms_left: end - start,
            fresh: true,
        }
    }

    pub fn group(&self) -> &GroupDescriptor {
        &self.group
    }

    /// Odometer step over colors, last position fastest. Returns false on
    /// wrap-around.
    fn bump_colors(&mut self) -> bool {
        let r = self.group.r();
        let n = self.colors.len();
        for i in (0..n).rev() {
            let bound = if i == n - 1 { self.group.step() } else { r };
            self.colors[i] += 1;
            if self.colors[i] < bound {
                return true;
            }
            self.colors[i] = 0;
        }
        false
    }

    fn advance(&mut self) -> bool {
        if self.fresh {
            self.fresh = false;
            return self.perms_left > 0;
        }
        if self.bump_colors() {
            return true;
        }
        self.perms_left -= 1;
        if self.perms_left == 0 {
            return false;
        }
        next_permutation(&mut self.perm);
        true
    }
}

impl Iterator for Elements {
    type Item = ProjectiveElement;

    fn next(&mut self) -> Option<ProjectiveElement> {
        let p = self.group.p() as u64;
        loop {
            if self.perms_left == 0 || !self.advance() {
                self.perms_left = 0;
                return None;
            }
            let sum: u64 = self.colors.iter().map(|&c| c as u64).sum();
            if sum.is_multiple_of(p) {
                let lift = ColoredPermutation::from_parts_unchecked(self.perm.clone(), self.colors.clone());
                return Some(ProjectiveElement::from_canonical_unchecked(lift, self.group));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;
    use alloc::collections::BTreeSet;

    #[test]
    fn counts_match_order_formula() {
        for (r, p, s, n, expected) in [
            (1, 1, 1, 3, 6u64),
            (2, 1, 1, 2, 8),
            (4, 2, 2, 3, 96),
            (6, 2, 3, 2, 12),
            (2, 2, 2, 2, 2),
            (6, 3, 2, 1, 1),
        ] {
            let g = make_group(r, p, s, n).unwrap();
            let all: Vec<_> = enumerate(g, DEFAULT_BUDGET).unwrap().collect();
            assert_eq!(all.len() as u64, expected, "{g}");
            assert_eq!(g.order(), expected as u128);
            let distinct: BTreeSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
        }
    }

    #[test]
    fn order_is_lexicographic() {
        let g = make_group(3, 1, 1, 3).unwrap();
        let keys: Vec<_> = enumerate(g, DEFAULT_BUDGET)
            .unwrap()
            .map(|e| (e.lift().sigma().to_vec(), e.lift().colors().to_vec()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn ranges_partition_the_stream() {
        let g = make_group(4, 2, 2, 3).unwrap();
        let whole: Vec<_> = enumerate(g, DEFAULT_BUDGET).unwrap().collect();
        let mut pieces = Vec::new();
        for chunk in [0..1, 1..4, 4..6] {
            pieces.extend(Elements::permutation_range(g, chunk));
        }
        assert_eq!(whole, pieces);
        assert_eq!(Elements::permutation_range(g, 3..3).count(), 0);
        assert_eq!(Elements::permutation_range(g, 6..9).count(), 0);
    }

    #[test]
    fn budget_is_enforced() {
        let g = make_group(4, 1, 1, 6).unwrap();
        assert_eq!(
            enumerate(g, 1000).unwrap_err(),
            Error::BudgetExceeded {
                order: 4u128.pow(6) * 720,
                budget: 1000
            }
        );
    }

    #[test]
    fn unrank_is_lexicographic() {
        assert_eq!(unrank_permutation(3, 0), [1, 2, 3]);
        assert_eq!(unrank_permutation(3, 3), [2, 3, 1]);
        assert_eq!(unrank_permutation(3, 5), [3, 2, 1]);
    }
}
