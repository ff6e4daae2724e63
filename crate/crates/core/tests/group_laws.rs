//! Group laws checked exhaustively on small groups and against a
//! monomial-matrix model.

use projstat_core::group::{enumerate, make_group, parse_element, DEFAULT_BUDGET};
use projstat_core::{ColoredPermutation, GroupDescriptor, ProjectiveElement};

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

fn elements(g: GroupDescriptor) -> Vec<ProjectiveElement> {
    enumerate(g, DEFAULT_BUDGET).unwrap().collect()
}

/// `g` as a monomial matrix: column `i` has `ζ^{cᵢ}` in row `σ(i)`.
fn matrix(g: &ColoredPermutation) -> Vec<Vec<Option<u32>>> {
    let n = g.n();
    let mut m = vec![vec![None; n]; n];
    for i in 0..n {
        m[g.sigma()[i] as usize - 1][i] = Some(g.colors()[i]);
    }
    m
}

fn matmul(a: &[Vec<Option<u32>>], b: &[Vec<Option<u32>>], r: u32) -> Vec<Vec<Option<u32>>> {
    let n = a.len();
    let mut out = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if let (Some(x), Some(y)) = (a[i][k], b[k][j]) {
                    assert!(out[i][j].is_none(), "monomial matrices have one entry per column");
                    out[i][j] = Some((x + y) % r);
                }
            }
        }
    }
    out
}

#[test]
fn orders_match_enumeration() {
    for g in admissible(6, 3) {
        if g.order() > 5000 {
            continue;
        }
        let all = elements(g);
        assert_eq!(all.len() as u128, g.order(), "{g}");
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len(), "{g}");
    }
}

#[test]
fn associativity_identity_inverse() {
    for g in admissible(4, 3) {
        if g.order() > 48 {
            continue;
        }
        let all = elements(g);
        let e = g.identity();
        for a in &all {
            assert_eq!(e.multiply(a).unwrap(), *a);
            assert_eq!(a.multiply(&e).unwrap(), *a);
            assert!(a.multiply(&a.inverse()).unwrap().is_identity());
            for b in &all {
                let ab = a.multiply(b).unwrap();
                for c in &all {
                    assert_eq!(ab.multiply(c).unwrap(), a.multiply(&b.multiply(c).unwrap()).unwrap());
                }
            }
        }
    }
}

#[test]
fn product_agrees_with_matrices_and_ignores_lifts() {
    for g in admissible(6, 3) {
        if g.order() > 400 {
            continue;
        }
        let r = g.r();
        let cover = g.wreath_cover();
        let all = elements(g);
        for a in all.iter().step_by(3) {
            for b in all.iter().step_by(2) {
                let ab = a.multiply(b).unwrap();
                let prod = a.lift().compose(b.lift(), r);
                assert_eq!(matrix(&prod), matmul(&matrix(a.lift()), &matrix(b.lift()), r));
                for la in a.lifts() {
                    for lb in b.lifts() {
                        let via = ProjectiveElement::canonicalize(la.compose(&lb, r), g).unwrap();
                        assert_eq!(via, ab);
                    }
                }
                let wa = a.reinterpret(cover).unwrap();
                let wb = b.reinterpret(cover).unwrap();
                assert_eq!(wa.multiply(&wb).unwrap().reinterpret(g).unwrap(), ab);
            }
        }
    }
}

#[test]
fn lifts_are_distinct_and_canonicalize_back() {
    for g in admissible(6, 3) {
        if g.order() > 2000 {
            continue;
        }
        for x in elements(g) {
            let lifts = x.lifts();
            assert_eq!(lifts.len() as u32, g.s());
            assert!(x.lift().colors()[g.n() as usize - 1] < g.step());
            for (j, l) in lifts.iter().enumerate() {
                assert_eq!(l.sigma(), x.lift().sigma());
                assert_eq!(l.color_sum() % g.p() as u64, 0);
                assert_eq!(ProjectiveElement::canonicalize(l.clone(), g).unwrap(), x);
                for m in &lifts[j + 1..] {
                    assert_ne!(l.colors(), m.colors());
                }
            }
        }
    }
}

#[test]
fn small_examples() {
    let g = make_group(3, 1, 1, 2).unwrap();
    let a = ProjectiveElement::canonicalize(ColoredPermutation::new(vec![1, 2], vec![0, 2]).unwrap(), g).unwrap();
    let b = ProjectiveElement::canonicalize(ColoredPermutation::new(vec![2, 1], vec![1, 0]).unwrap(), g).unwrap();
    let ab = a.multiply(&b).unwrap();
    assert_eq!((ab.lift().sigma(), ab.lift().colors()), (&[2, 1][..], &[0, 0][..]));

    let b2 = make_group(2, 1, 1, 2).unwrap();
    let x = parse_element("[2^1,1]", b2).unwrap();
    assert_eq!(x.inverse(), parse_element("[2,1^1]", b2).unwrap());
    let y = parse_element("[1^1,2^1]", b2).unwrap();
    assert_eq!(y.inverse(), y);

    let q = make_group(2, 1, 2, 2).unwrap();
    assert!(parse_element("[1^1,2^1]", q).unwrap().is_identity());

    let big = make_group(6, 2, 3, 8).unwrap();
    let lift = ColoredPermutation::new(vec![2, 7, 6, 4, 8, 1, 5, 3], vec![4, 5, 5, 1, 3, 3, 5, 4]).unwrap();
    let x = ProjectiveElement::canonicalize(lift, big).unwrap();
    assert_eq!(x.lift().colors(), [0, 1, 1, 3, 5, 5, 1, 0]);
}
