//! `ℕⁿ(p) ↔ G(r,p,s,n) × 𝒫ₙ × [0,s-1]`.
//!
//! Decoding sends `(g, λ, h)` to `f` with `f_{|g(j)|} = λⱼ(g) + r·λⱼ + h·r/s`.
//! Encoding reads `|g|` off `f` by sorting positions by value (descending,
//! ties by position), colors the lift by `f mod r`, and recovers `λ` and `h`
//! from the sorted values minus `λ(g)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::check_partition;
use crate::error::{Error, Result};
use crate::group::{ColoredPermutation, GroupDescriptor, ProjectiveElement};
use crate::stats::lambda_data;

pub fn nvec_decode(g: &ProjectiveElement, lambda: &[u32], h: u32) -> Result<Vec<u32>> {
    let group = g.group();
    let (r, step) = (group.r(), group.step());
    let n = g.n();
    check_partition(lambda, n)?;
    if h >= group.s() {
        return Err(Error::Range(format!("h = {h} not in [0,{}]", group.s() - 1)));
    }
    let lam_g = lambda_data(g.lift(), r, step).lambda;
    let mut f = vec![0; n];
    for (j, &v) in g.lift().sigma().iter().enumerate() {
        f[v as usize - 1] = lam_g[j] + r * lambda[j] + h * step;
    }
    Ok(f)
}

pub fn nvec_encode(f: &[u32], group: GroupDescriptor) -> Result<(ProjectiveElement, Vec<u32>, u32)> {
    let n = group.n() as usize;
    let (r, step) = (group.r(), group.step());
    if f.len() != n {
        return Err(Error::Range(format!("vector has {} entries, expected {n}", f.len())));
    }
    let sum: u64 = f.iter().map(|&x| x as u64).sum();
    if !sum.is_multiple_of(group.p() as u64) {
        return Err(Error::Membership { sum, p: group.p() });
    }
    let mut positions: Vec<usize> = (0..n).collect();
    positions.sort_by(|&a, &b| f[b].cmp(&f[a]).then(a.cmp(&b)));
    let sigma = positions.iter().map(|&i| i as u32 + 1).collect();
    let colors = positions.iter().map(|&i| f[i] % r).collect();
    let g = ProjectiveElement::canonicalize(ColoredPermutation::new(sigma, colors)?, group)?;

    let lam_g = lambda_data(g.lift(), r, step).lambda;
    let diff: Vec<u32> = positions
        .iter()
        .zip(&lam_g)
        .map(|(&i, &l)| f[i].checked_sub(l).expect("sorted values dominate λ(g)"))
        .collect();
    let h = (diff[0] % r) / step;
    debug_assert!(diff.iter().all(|&d| d % r == h * step));
    let lambda = diff.iter().map(|&d| (d - h * step) / r).collect();
    Ok((g, lambda, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{enumerate, make_group, parse_element};
    use crate::stats::{col_residues, flag_stats};
    use proptest::prelude::*;

    #[test]
    fn small_example() {
        let grp = make_group(2, 1, 1, 2).unwrap();
        let g = parse_element("[1^1,2^1]", grp).unwrap();
        assert_eq!(nvec_decode(&g, &[1, 0], 0).unwrap(), [3, 1]);
        let (g2, lambda, h) = nvec_encode(&[3, 1], grp).unwrap();
        assert_eq!((g2, lambda, h), (g, vec![1, 0], 0));
    }

    #[test]
    fn zero_vector() {
        let grp = make_group(6, 2, 3, 4).unwrap();
        let (g, lambda, h) = nvec_encode(&[0; 4], grp).unwrap();
        assert!(g.is_identity());
        assert_eq!((lambda, h), (vec![0; 4], 0));
        assert_eq!(nvec_decode(&grp.identity(), &[0; 4], 0).unwrap(), [0; 4]);
    }

    #[test]
    fn rejects_bad_input() {
        let grp = make_group(4, 2, 2, 3).unwrap();
        assert!(matches!(nvec_encode(&[1, 0, 0], grp), Err(Error::Membership { .. })));
        assert!(matches!(nvec_encode(&[1, 1], grp), Err(Error::Range(_))));
        let g = grp.identity();
        assert!(matches!(nvec_decode(&g, &[0, 0, 0], 2), Err(Error::Range(_))));
        assert!(matches!(nvec_decode(&g, &[0, 1, 0], 0), Err(Error::Range(_))));
    }

    #[test]
    fn box_round_trip() {
        let grp = make_group(4, 2, 2, 3).unwrap();
        let mut seen = 0;
        for a in 0..=7u32 {
            for b in 0..=7 {
                for c in 0..=7 {
                    if (a + b + c) % 2 != 0 {
                        continue;
                    }
                    let f = [a, b, c];
                    let (g, lambda, h) = nvec_encode(&f, grp).unwrap();
                    assert_eq!(nvec_decode(&g, &lambda, h).unwrap(), f);
                    seen += 1;
                }
            }
        }
        assert_eq!(seen, 256);
    }

    #[test]
    fn decode_then_encode_is_identity() {
        let grp = make_group(4, 2, 2, 2).unwrap();
        for g in enumerate(grp, 1000).unwrap() {
            for l1 in 0..3 {
                for l2 in 0..=l1 {
                    for h in 0..2 {
                        let f = nvec_decode(&g, &[l1, l2], h).unwrap();
                        assert_eq!(nvec_encode(&f, grp).unwrap(), (g.clone(), vec![l1, l2], h));
                    }
                }
            }
        }
    }

    fn arb_triple() -> impl Strategy<Value = (u64, Vec<u32>, u32)> {
        (0u64..1296, proptest::collection::vec(0u32..5, 3), 0u32..3).prop_map(|(rank, mut l, h)| {
            l.sort_unstable_by(|a, b| b.cmp(a));
            (rank, l, h)
        })
    }

    proptest! {
        #[test]
        fn statistics_transfer((rank, lambda, h) in arb_triple()) {
            let grp = make_group(6, 2, 3, 3).unwrap();
            let all: Vec<_> = enumerate(grp, 10_000).unwrap().collect();
            let g = &all[(rank as usize) % all.len()];
            let f = nvec_decode(g, &lambda, h).unwrap();
            let st = flag_stats(g);
            let (r, step, n) = (6, 2, 3);
            prop_assert_eq!(f.iter().sum::<u32>() % 2, 0);
            prop_assert_eq!(*f.iter().max().unwrap(), st.fdes + r * lambda[0] + h * step);
            prop_assert_eq!(f.iter().sum::<u32>(), st.fmaj + r * lambda.iter().sum::<u32>() + h * n * step);
            prop_assert_eq!(col_residues(&f, step), st.col as u64);
        }
    }
}
