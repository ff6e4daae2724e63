//! Map-reduce over group elements.
//!
//! Enumeration is split by ranges of permutation ranks. Each range is folded
//! into its own accumulator and the accumulators are merged in rank order,
//! so an associative merge gives the same answer for every executor.

use core::ops::Range;

use crate::group::{Elements, GroupDescriptor, ProjectiveElement};

pub trait Executor: Sync {
    /// Folds every element of `group` into an accumulator.
    ///
    /// `identity` creates an empty accumulator, `fold` absorbs one element,
    /// and `merge` combines accumulators of consecutive rank ranges.
    fn fold_elements<A, I, F, M>(&self, group: GroupDescriptor, identity: I, fold: F, merge: M) -> A
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        F: Fn(&mut A, &ProjectiveElement) + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send;
}

/// Folds a single rank range.
pub fn fold_range<A, F>(group: GroupDescriptor, ranks: Range<u64>, mut acc: A, fold: &F) -> A
where
    F: Fn(&mut A, &ProjectiveElement),
{
    for g in Elements::permutation_range(group, ranks) {
        fold(&mut acc, &g);
    }
    acc
}

/// Runs on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn fold_elements<A, I, F, M>(&self, group: GroupDescriptor, identity: I, fold: F, _merge: M) -> A
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        F: Fn(&mut A, &ProjectiveElement) + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send,
    {
        let total = Elements::permutation_count(&group);
        fold_range(group, 0..total, identity(), &fold)
    }
}
