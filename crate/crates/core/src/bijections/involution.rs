//! Relabeling that carries `<'`-descents to `<`-descents on `G(r,n)`.
//!
//! With `S(g)` the set of window entries, `ι` sends the `k`-th smallest
//! element of `S(g)` under `<'` to the `k`-th smallest under `<`, and
//! `φ(g) = [ι(g(1)),…,ι(g(n))]`. Since `S(φ(g)) = S(g)`, `φ` is a bijection
//! of `G(r,n)` for every `r`. It is an involution for `r ≤ 2`; for `r ≥ 3`
//! `ι` can be a longer cycle (`S = {1¹, 2², 3¹}` in `G(3,3)`).

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{ColoredPermutation, ProjectiveElement};
use crate::stats::{compare, ColoredValue, Order};

pub fn order_involution(g: &ProjectiveElement) -> Result<ProjectiveElement> {
    let group = *g.group();
    if !group.is_wreath() {
        return Err(Error::Scope(format!("order relabeling needs p = s = 1, got {group}")));
    }
    let lift = g.lift();
    let entries: Vec<ColoredValue> = (1..=lift.n())
        .map(|i| {
            let (v, c) = lift.entry(i);
            ColoredValue::new(v, c)
        })
        .collect();
    let mut by_prime = entries.clone();
    by_prime.sort_by(|&a, &b| compare(Order::Prime, a, b));
    let mut by_color = entries.clone();
    by_color.sort_by(|&a, &b| compare(Order::Color, a, b));
    let iota = |x: ColoredValue| {
        let k = by_prime.iter().position(|&y| y == x).expect("entry of S(g)");
        by_color[k]
    };
    let (sigma, colors) = entries.iter().map(|&x| iota(x)).map(|y| (y.value, y.color)).unzip();
    ProjectiveElement::canonicalize(ColoredPermutation::new(sigma, colors)?, group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{enumerate, make_group, parse_element};
    use crate::stats::{des_set, flag_stats};
    use alloc::collections::BTreeSet;

    #[test]
    fn signed_example() {
        let grp = make_group(2, 1, 1, 2).unwrap();
        let g = parse_element("[1^1,2^1]", grp).unwrap();
        assert_eq!(order_involution(&g).unwrap(), parse_element("[2^1,1^1]", grp).unwrap());
    }

    #[test]
    fn uncolored_fixed() {
        let grp = make_group(3, 1, 1, 4).unwrap();
        let g = parse_element("[3,1,4,2]", grp).unwrap();
        assert_eq!(order_involution(&g).unwrap(), g);
    }

    #[test]
    fn three_cycle_for_r_three() {
        let grp = make_group(3, 1, 1, 3).unwrap();
        let g = parse_element("[1^1,2^2,3^1]", grp).unwrap();
        let once = order_involution(&g).unwrap();
        assert_eq!(once, parse_element("[3^1,1^1,2^2]", grp).unwrap());
        assert_ne!(order_involution(&once).unwrap(), g);
    }

    #[test]
    fn scope() {
        let grp = make_group(2, 2, 1, 2).unwrap();
        assert!(matches!(order_involution(&grp.identity()), Err(Error::Scope(_))));
    }

    #[test]
    fn descents_and_colors_transfer() {
        for (r, n) in [(3, 3), (2, 4), (3, 2), (1, 4)] {
            let grp = make_group(r, 1, 1, n).unwrap();
            let mut image = BTreeSet::new();
            let mut total = 0;
            for g in enumerate(grp, 10_000).unwrap() {
                let phi = order_involution(&g).unwrap();
                assert_eq!(des_set(&phi, Order::Color).unwrap(), des_set(&g, Order::Prime).unwrap());
                assert_eq!(flag_stats(&phi).col, flag_stats(&g).col);
                if r <= 2 {
                    assert_eq!(order_involution(&phi).unwrap(), g);
                }
                image.insert(phi);
                total += 1;
            }
            assert_eq!(image.len(), total);
        }
    }
}
