//! Exhaustive properties of the descent statistics.

use std::collections::BTreeMap;

use projstat_core::group::{enumerate, make_group, parse_element, DEFAULT_BUDGET};
use projstat_core::stats::{des_set, flag_stats, flag_stats_of, fmaj_prime, stat_record};
use projstat_core::{GroupDescriptor, Order, ProjectiveElement, Verifier};

fn admissible(r_max: u32, n_max: u32) -> Vec<GroupDescriptor> {
    let mut out = Vec::new();
    for r in 1..=r_max {
        for p in (1..=r).filter(|p| r % p == 0) {
            for s in (1..=r).filter(|s| r % s == 0) {
                for n in 1..=n_max {
                    if let Ok(g) = make_group(r, p, s, n) {
                        out.push(g);
                    }
                }
            }
        }
    }
    out
}

fn elements(g: GroupDescriptor) -> impl Iterator<Item = ProjectiveElement> {
    enumerate(g, DEFAULT_BUDGET).unwrap()
}

#[test]
fn worked_example() {
    let g = make_group(6, 2, 3, 8).unwrap();
    let x = parse_element("[2^2,7^3,6^3,4^5,8^1,1^1,5^3,3^2]", g).unwrap();
    let st = stat_record(&x);
    assert_eq!(st.hdes, [2, 5]);
    assert_eq!(st.hvec, [2, 2, 1, 1, 1, 0, 0, 0]);
    assert_eq!(st.kvec, [18, 13, 13, 9, 5, 5, 1, 0]);
    assert_eq!((st.fdes, st.des, st.col, st.fmaj), (30, 15, 6, 106));
}

#[test]
fn lambda_shape_and_lift_invariance() {
    for g in admissible(6, 3) {
        if g.order() > 20_000 {
            continue;
        }
        let (r, s, step) = (g.r(), g.s(), g.step());
        for x in elements(g) {
            let st = stat_record(&x);
            assert!(st.lambda.windows(2).all(|w| w[0] >= w[1]), "{g} {x}");
            for i in 0..st.lambda.len() {
                assert_eq!(st.lambda[i], r * st.hvec[i] + st.kvec[i]);
                assert_eq!(st.kvec[i] % r, x.lift().colors()[i]);
                assert_eq!(st.lambda[i] % step, x.lift().colors()[i] % step);
            }
            assert_eq!(st.fmaj, st.lambda.iter().sum::<u32>());
            assert_eq!(st.fdes, st.lambda[0]);
            assert_eq!(st.des, (s * st.fdes + r - s) / r);
            let fs = flag_stats(&x);
            assert_eq!((fs.fmaj, fs.fdes, fs.des, fs.col), (st.fmaj, st.fdes, st.des, st.col));
            for l in x.lifts() {
                assert_eq!(flag_stats_of(&l, r, s), fs);
                let y = ProjectiveElement::canonicalize(l, g).unwrap();
                assert_eq!(stat_record(&y), st);
            }
        }
    }
}

/// Every weakly decreasing `β` with `βᵢ ≡ cᵢ (mod r)` in the box
/// `βᵢ ≤ kᵢ + r` dominates `k` componentwise.
#[test]
fn k_vector_is_minimal() {
    fn search(c: &[u32], k: &[u32], r: u32, beta: &mut Vec<u32>, checked: &mut u64) {
        let i = beta.len();
        if i == c.len() {
            assert!(beta.iter().zip(k).all(|(b, k)| b >= k), "{beta:?} vs {k:?}");
            *checked += 1;
            return;
        }
        let cap = beta.last().map_or(u32::MAX, |&b| b).min(k[i] + r);
        let mut v = c[i];
        while v <= cap {
            beta.push(v);
            search(c, k, r, beta, checked);
            beta.pop();
            v += r;
        }
    }
    let mut checked = 0;
    for g in admissible(4, 4) {
        if g.order() > 5_000 {
            continue;
        }
        for x in elements(g) {
            let st = stat_record(&x);
            search(x.lift().colors(), &st.kvec, g.r(), &mut Vec::new(), &mut checked);
        }
    }
    assert!(checked > 0);
}

#[test]
fn fmaj_detects_membership() {
    for r in 1..=4u32 {
        for s in (1..=r).filter(|s| r % s == 0) {
            for n in 1..=4 {
                let Ok(cover) = make_group(r, 1, s, n) else { continue };
                for p in (1..=r).filter(|p| r % p == 0) {
                    let Ok(sub) = make_group(r, p, s, n) else { continue };
                    for x in elements(cover) {
                        let member = x.reinterpret(sub).is_ok();
                        assert_eq!(member, flag_stats(&x).fmaj.is_multiple_of(p), "{sub} {x}");
                    }
                }
            }
        }
    }
}

#[test]
fn wreath_products_use_the_flag_major_index() {
    for r in 1..=4 {
        for n in 1..=5 {
            let g = make_group(r, 1, 1, n).unwrap();
            for x in elements(g) {
                let st = stat_record(&x);
                assert_eq!(st.des, st.des_g, "{x}");
                assert_eq!(st.fmaj, r * st.maj + st.col, "{x}");
            }
        }
    }
}

#[test]
fn lifts_shift_fdes_and_fmaj() {
    let v = Verifier::new();
    for (r, s) in [(2, 2), (4, 2), (6, 3)] {
        for n in 1..=3 {
            let rep = v.lift_identity(r, s, n).unwrap();
            assert!(rep.is_match(), "{rep:?}");
        }
    }
}

#[test]
fn both_orders_are_equidistributed() {
    for r in 1..=3 {
        for n in 1..=4 {
            let g = make_group(r, 1, 1, n).unwrap();
            let mut by_color: BTreeMap<(Vec<u32>, u32), i64> = BTreeMap::new();
            let mut by_fmaj: BTreeMap<u32, i64> = BTreeMap::new();
            for x in elements(g) {
                let col = flag_stats(&x).col;
                *by_color.entry((des_set(&x, Order::Color).unwrap(), col)).or_default() += 1;
                *by_color.entry((des_set(&x, Order::Prime).unwrap(), col)).or_default() -= 1;
                *by_fmaj.entry(flag_stats(&x).fmaj).or_default() += 1;
                *by_fmaj.entry(fmaj_prime(&x).unwrap()).or_default() -= 1;
            }
            assert!(by_color.values().all(|&c| c == 0), "G({r},{n})");
            assert!(by_fmaj.values().all(|&c| c == 0), "G({r},{n})");
        }
    }
}
