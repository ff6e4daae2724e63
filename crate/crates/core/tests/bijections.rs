//! Round trips and transported statistics for the bijections.

use projstat_core::bijections::{
    nvec_decode, nvec_encode, order_involution, rs_correspondence, rs_inverse, rs_transpose_map, signed_window,
};
use projstat_core::group::{enumerate, make_group, parse_element, DEFAULT_BUDGET};
use projstat_core::stats::{col_residues, des_set, flag_stats, neg_set};
use projstat_core::{GroupDescriptor, Order};

fn boxes(n: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

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

#[test]
fn nvec_round_trip_on_boxes() {
    for g in admissible(4, 3) {
        let (r, step, n) = (g.r(), g.step(), g.n());
        for f in boxes(n as usize, 2 * r) {
            if f.iter().sum::<u32>() % g.p() != 0 {
                continue;
            }
            let (x, lambda, h) = nvec_encode(&f, g).unwrap();
            assert_eq!(nvec_decode(&x, &lambda, h).unwrap(), f, "{g}");
            let st = flag_stats(&x);
            assert_eq!(*f.iter().max().unwrap(), st.fdes + r * lambda[0] + h * step);
            assert_eq!(
                f.iter().sum::<u32>(),
                st.fmaj + r * lambda.iter().sum::<u32>() + h * n * step
            );
            assert_eq!(col_residues(&f, step), st.col as u64);
        }
    }
}

#[test]
fn nvec_example() {
    let g = make_group(2, 1, 1, 2).unwrap();
    let (x, lambda, h) = nvec_encode(&[3, 1], g).unwrap();
    assert_eq!((x.to_string(), lambda, h), ("[1^1,2^1]".to_string(), vec![1, 0], 0));
}

#[test]
fn rs_round_trip_and_transpose() {
    for n in [4, 5] {
        let g = make_group(2, 1, 1, n).unwrap();
        for x in enumerate(g, DEFAULT_BUDGET).unwrap() {
            assert_eq!(rs_inverse(&rs_correspondence(&x).unwrap()).unwrap(), x);
            let y = rs_transpose_map(&x).unwrap();
            assert_eq!(neg_set(&y), neg_set(&x));
            assert_eq!(des_set(&x, Order::Color).unwrap(), des_set(&y, Order::Prime).unwrap());
            assert_eq!(
                des_set(&x.inverse(), Order::Color).unwrap(),
                des_set(&y.inverse(), Order::Prime).unwrap()
            );
        }
    }
}

#[test]
fn rs_worked_example() {
    let g = make_group(2, 1, 1, 7).unwrap();
    let x = parse_element("[5,-2,-1,-4,6,-3,-7]", g).unwrap();
    let pair = rs_correspondence(&x).unwrap();
    let rows = |t: &projstat_core::bijections::Tableau| t.rows().to_vec();
    assert_eq!(rows(&pair.p.zero), [vec![5, 6]]);
    assert_eq!(rows(&pair.p.one), [vec![1, 3, 7], vec![2, 4]]);
    assert_eq!(rows(&pair.q.zero), [vec![1, 5]]);
    assert_eq!(rows(&pair.q.one), [vec![2, 4, 7], vec![3, 6]]);
    assert_eq!(signed_window(&rs_transpose_map(&x).unwrap()), "[5,-3,-7,-1,6,-4,-2]");
}

#[test]
fn order_relabeling_properties() {
    for (r, n) in [(3, 3), (2, 4)] {
        let g = make_group(r, 1, 1, n).unwrap();
        for x in enumerate(g, DEFAULT_BUDGET).unwrap() {
            let y = order_involution(&x).unwrap();
            assert_eq!(des_set(&y, Order::Color).unwrap(), des_set(&x, Order::Prime).unwrap());
            assert_eq!(flag_stats(&y).col, flag_stats(&x).col);
            if r == 2 {
                assert_eq!(order_involution(&y).unwrap(), x);
            }
        }
    }
}
