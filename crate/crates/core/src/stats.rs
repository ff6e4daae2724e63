//! Descent-type statistics on `G(r,p,s,n)`.
//!
//! Everything is computed from the canonical lift. The statistics built from
//! `λ(g)` (`fmaj`, `fdes`, `des`, `col`) do not depend on the lift; the
//! descent sets `Des_G`, `Des_A` and `maj` are those of the stored lift.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::group::{residue, ColoredPermutation, ProjectiveElement};

/// Total order on colored values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Order {
    /// `1^{r-1} < … < n^{r-1} < … < 1¹ < … < n¹ < 0 < 1 < … < n`
    Color,
    /// `n^{r-1} <' … <' n¹ <' … <' 1^{r-1} <' … <' 1¹ <' 0 <' 1 <' … <' n`
    Prime,
}

/// A window entry `value^color`; `value = 0` is the uncolored sentinel `g(0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ColoredValue {
    pub value: u32,
    pub color: u32,
}

impl ColoredValue {
    pub const ZERO: Self = Self { value: 0, color: 0 };

    pub fn new(value: u32, color: u32) -> Self {
        Self { value, color }
    }

    fn key(self, order: Order) -> (u8, u32, u32) {
        if self.color == 0 {
            // 0 sits between the colored block and the positive values
            return (1, self.value, 0);
        }
        match order {
            Order::Color => (0, u32::MAX - self.color, self.value),
            Order::Prime => (0, u32::MAX - self.value, u32::MAX - self.color),
        }
    }
}

pub fn compare(order: Order, a: ColoredValue, b: ColoredValue) -> Ordering {
    a.key(order).cmp(&b.key(order))
}

/// All statistics of one element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "camelCase")
)]
pub struct StatRecord {
    pub des_g: u32,
    pub des_a: u32,
    pub maj: u32,
    pub fmaj: u32,
    pub fdes: u32,
    pub des: u32,
    pub col: u32,
    pub inv_abs: u32,
    pub sign_abs: i8,
    /// Homogeneous descents, 1-based positions.
    pub hdes: Vec<u32>,
    pub hvec: Vec<u32>,
    pub kvec: Vec<u32>,
    pub lambda: Vec<u32>,
    /// `R_r(c(g))`, the color sum of the canonical lift modulo `r`.
    pub color_class: u32,
}

/// The partition `λ(g)` together with its ingredients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaData {
    pub hdes: Vec<u32>,
    pub hvec: Vec<u32>,
    pub kvec: Vec<u32>,
    pub lambda: Vec<u32>,
}

/// `HDes`, `hᵢ`, `kᵢ` and `λᵢ = r·hᵢ + kᵢ` for a colored permutation read in a
/// quotient with `r/s = step`.
pub fn lambda_data(lift: &ColoredPermutation, r: u32, step: u32) -> LambdaData {
    let n = lift.n();
    let (sigma, c) = (lift.sigma(), lift.colors());
    let mut hvec = alloc::vec![0u32; n];
    let mut kvec = alloc::vec![0u32; n];
    let mut hdes = Vec::new();
    kvec[n - 1] = c[n - 1] % step;
    for i in (0..n - 1).rev() {
        let homogeneous = c[i] == c[i + 1] && sigma[i] > sigma[i + 1];
        if homogeneous {
            hdes.push(i as u32 + 1);
        }
        hvec[i] = hvec[i + 1] + u32::from(homogeneous);
        kvec[i] = kvec[i + 1] + residue(c[i] as i64 - c[i + 1] as i64, r);
    }
    hdes.reverse();
    let lambda = hvec.iter().zip(&kvec).map(|(&h, &k)| r * h + k).collect();
    LambdaData {
        hdes,
        hvec,
        kvec,
        lambda,
    }
}

/// The λ-derived statistics, computed without allocating.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct FlagStats {
    pub fmaj: u32,
    pub fdes: u32,
    pub des: u32,
    pub col: u32,
}

pub fn flag_stats_of(lift: &ColoredPermutation, r: u32, s: u32) -> FlagStats {
    let step = r / s;
    let (sigma, c) = (lift.sigma(), lift.colors());
    let n = lift.n();
    let mut k = c[n - 1] % step;
    let mut h = 0;
    let mut fmaj = k;
    let mut col = c[n - 1] % step;
    for i in (0..n - 1).rev() {
        if c[i] == c[i + 1] && sigma[i] > sigma[i + 1] {
            h += 1;
        }
        k += residue(c[i] as i64 - c[i + 1] as i64, r);
        fmaj += r * h + k;
        col += c[i] % step;
    }
    let fdes = r * h + k;
    FlagStats {
        fmaj,
        fdes,
        des: (s * fdes + r - s) / r,
        col,
    }
}

pub fn flag_stats(g: &ProjectiveElement) -> FlagStats {
    flag_stats_of(g.lift(), g.group().r(), g.group().s())
}

/// `col_k(f) = Σ R_k(fᵢ)`.
pub fn col_residues(f: &[u32], k: u32) -> u64 {
    f.iter().map(|&x| (x % k) as u64).sum()
}

fn entry(lift: &ColoredPermutation, i: usize) -> ColoredValue {
    if i == 0 {
        ColoredValue::ZERO
    } else {
        let (v, c) = lift.entry(i);
        ColoredValue::new(v, c)
    }
}

/// `{i ∈ [0,n-1] : g(i) > g(i+1)}` with `g(0) = 0`, computed on a lift.
pub fn descent_positions(lift: &ColoredPermutation, order: Order) -> Vec<u32> {
    (0..lift.n())
        .filter(|&i| compare(order, entry(lift, i), entry(lift, i + 1)) == Ordering::Greater)
        .map(|i| i as u32)
        .collect()
}

/// Descent set in the chosen order. The alternative order is only defined
/// on wreath products.
pub fn des_set(g: &ProjectiveElement, order: Order) -> Result<Vec<u32>> {
    if order == Order::Prime && !g.group().is_wreath() {
        return Err(Error::OrderScope);
    }
    Ok(descent_positions(g.lift(), order))
}

/// `fmaj'(g) = r·Σ_{i ∈ Des'_G(g)} i + col(g)`.
pub fn fmaj_prime(g: &ProjectiveElement) -> Result<u32> {
    let des = des_set(g, Order::Prime)?;
    Ok(g.group().r() * des.iter().sum::<u32>() + flag_stats(g).col)
}

pub fn stat_record(g: &ProjectiveElement) -> StatRecord {
    let group = g.group();
    let (r, s) = (group.r(), group.s());
    let lift = g.lift();
    let des_g = descent_positions(lift, Order::Color);
    let des_a: Vec<u32> = des_g.iter().copied().filter(|&i| i > 0).collect();
    let LambdaData {
        hdes,
        hvec,
        kvec,
        lambda,
    } = lambda_data(lift, r, group.step());
    let inv_abs = lift.inversions();
    let fdes = lambda[0];
    StatRecord {
        des_g: des_g.len() as u32,
        des_a: des_a.len() as u32,
        maj: des_a.iter().sum(),
        fmaj: lambda.iter().sum(),
        fdes,
        des: (s * fdes + r - s) / r,
        col: col_residues(lift.colors(), group.step()) as u32,
        inv_abs,
        sign_abs: if inv_abs.is_multiple_of(2) { 1 } else { -1 },
        hdes,
        hvec,
        kvec,
        lambda,
        color_class: (lift.color_sum() % r as u64) as u32,
    }
}

/// Splitting of `Des_G` for signed permutations (`r = 2`).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "camelCase")
)]
pub struct BnDescentSplit {
    /// `g(i) > g(i+1) > 0`
    pub hdes0: Vec<u32>,
    /// `0 > g(i) > g(i+1)`
    pub hdes1: Vec<u32>,
    /// `g(i) > 0 > g(i+1)`
    pub des_pm: Vec<u32>,
    /// `g(1) < 0`
    pub d0: bool,
    /// both `g(i)` and `g(i+1)` negative
    pub nn: Vec<u32>,
    /// positions carrying color 1
    pub neg: Vec<u32>,
}

fn require_bn(g: &ProjectiveElement) -> Result<()> {
    let grp = g.group();
    if grp.r() != 2 || !grp.is_wreath() {
        return Err(Error::Scope(alloc::format!(
            "signed-permutation statistics need G(2,1,1,n), got {grp}"
        )));
    }
    Ok(())
}

/// Positions `i ∈ [n]` with `cᵢ(g) = 1`.
pub fn neg_set(g: &ProjectiveElement) -> Vec<u32> {
    let c = g.lift().colors();
    (1..=c.len() as u32).filter(|&i| c[i as usize - 1] != 0).collect()
}

pub fn bn_descent_split(g: &ProjectiveElement) -> Result<BnDescentSplit> {
    require_bn(g)?;
    let lift = g.lift();
    let n = lift.n();
    let mut out = BnDescentSplit {
        d0: lift.colors()[0] == 1,
        neg: neg_set(g),
        ..Default::default()
    };
    for i in 1..n {
        let (a, b) = (entry(lift, i), entry(lift, i + 1));
        let pos = |x: ColoredValue| x.color == 0;
        let i = i as u32;
        if !pos(a) && !pos(b) {
            out.nn.push(i);
        }
        if compare(Order::Color, a, b) != Ordering::Greater {
            continue;
        }
        match (pos(a), pos(b)) {
            (true, true) => out.hdes0.push(i),
            (false, false) => out.hdes1.push(i),
            (true, false) => out.des_pm.push(i),
            (false, true) => unreachable!("negative entries are below positive ones"),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_group, parse_element};
    use alloc::vec;

    fn cv(v: u32, c: u32) -> ColoredValue {
        ColoredValue::new(v, c)
    }

    #[test]
    fn order_examples() {
        assert_eq!(compare(Order::Color, cv(2, 1), ColoredValue::ZERO), Ordering::Less);
        assert_eq!(compare(Order::Prime, cv(2, 1), cv(1, 2)), Ordering::Less);
        assert_eq!(compare(Order::Color, cv(2, 1), cv(1, 2)), Ordering::Greater);
        for order in [Order::Color, Order::Prime] {
            assert_eq!(compare(order, cv(3, 2), cv(3, 2)), Ordering::Equal);
            assert_eq!(compare(order, cv(1, 0), cv(2, 0)), Ordering::Less);
            assert_eq!(compare(order, cv(1, 0), ColoredValue::ZERO), Ordering::Greater);
        }
    }

    #[test]
    fn order_chains_for_r3_n2() {
        let color = [cv(1, 2), cv(2, 2), cv(1, 1), cv(2, 1), cv(0, 0), cv(1, 0), cv(2, 0)];
        let prime = [cv(2, 2), cv(2, 1), cv(1, 2), cv(1, 1), cv(0, 0), cv(1, 0), cv(2, 0)];
        for w in color.windows(2) {
            assert_eq!(compare(Order::Color, w[0], w[1]), Ordering::Less);
        }
        for w in prime.windows(2) {
            assert_eq!(compare(Order::Prime, w[0], w[1]), Ordering::Less);
        }
    }

    #[test]
    fn worked_example_statistics() {
        let g = make_group(6, 2, 3, 8).unwrap();
        let x = parse_element("[2^2,7^3,6^3,4^5,8^1,1^1,5^3,3^2]", g).unwrap();
        let st = stat_record(&x);
        assert_eq!(st.hdes, vec![2, 5]);
        assert_eq!(st.hvec, vec![2, 2, 1, 1, 1, 0, 0, 0]);
        assert_eq!(st.kvec, vec![18, 13, 13, 9, 5, 5, 1, 0]);
        assert_eq!(st.fdes, 30);
        assert_eq!(st.des, 15);
        assert_eq!(st.col, 6);
        assert_eq!(st.fmaj, 106);
        assert_eq!(st.lambda, vec![30, 25, 19, 15, 11, 5, 1, 0]);
        let fs = flag_stats(&x);
        assert_eq!((fs.fmaj, fs.fdes, fs.des, fs.col), (106, 30, 15, 6));
    }

    #[test]
    fn small_signed_example() {
        let b2 = make_group(2, 1, 1, 2).unwrap();
        let x = parse_element("[2^1,1]", b2).unwrap();
        let st = stat_record(&x);
        assert_eq!(des_set(&x, Order::Color).unwrap(), vec![0]);
        assert_eq!((st.maj, st.fmaj, st.des, st.fdes, st.col, st.des_g), (0, 1, 1, 1, 1, 1));
        assert_eq!(st.lambda, vec![1, 0]);
    }

    #[test]
    fn identity_is_all_zero() {
        let st = stat_record(&make_group(4, 2, 2, 3).unwrap().identity());
        assert_eq!(st.lambda, vec![0, 0, 0]);
        assert_eq!(
            (st.des_g, st.des_a, st.maj, st.fmaj, st.fdes, st.des, st.col, st.inv_abs),
            (0, 0, 0, 0, 0, 0, 0, 0)
        );
        assert!(st.hdes.is_empty());
    }

    #[test]
    fn descent_sets_in_both_orders() {
        let b2 = make_group(2, 1, 1, 2).unwrap();
        let x = parse_element("[1^1,2^1]", b2).unwrap();
        assert_eq!(des_set(&x, Order::Color).unwrap(), vec![0]);
        assert_eq!(des_set(&x, Order::Prime).unwrap(), vec![0, 1]);
        assert_eq!(fmaj_prime(&x).unwrap(), 4);
        assert_eq!(fmaj_prime(&b2.identity()).unwrap(), 0);
        assert!(des_set(&b2.identity(), Order::Color).unwrap().is_empty());

        let b7 = make_group(2, 1, 1, 7).unwrap();
        let g = parse_element("[5,2^1,1^1,4^1,6,3^1,7^1]", b7).unwrap();
        assert_eq!(des_set(&g, Order::Color).unwrap(), vec![1, 2, 5]);
        assert_eq!(des_set(&g.inverse(), Order::Color).unwrap(), vec![0, 1, 3, 6]);
    }

    #[test]
    fn prime_order_scope() {
        let g = make_group(2, 1, 2, 2).unwrap().identity();
        assert_eq!(des_set(&g, Order::Prime), Err(Error::OrderScope));
        assert_eq!(fmaj_prime(&g), Err(Error::OrderScope));
    }

    #[test]
    fn signed_split_example() {
        let b7 = make_group(2, 1, 1, 7).unwrap();
        let g = parse_element("[5,-2,-1,-4,6,-3,-7]", b7).unwrap();
        let split = bn_descent_split(&g).unwrap();
        assert_eq!(split.neg, vec![2, 3, 4, 6, 7]);
        assert_eq!(split.des_pm, vec![1, 5]);
        assert_eq!(split.hdes1, vec![2]);
        assert!(split.hdes0.is_empty() && !split.d0);
        assert_eq!(split.nn, vec![2, 3, 6]);
        assert_eq!(bn_descent_split(&b7.identity()).unwrap(), BnDescentSplit::default());
        let g3 = make_group(3, 1, 1, 2).unwrap().identity();
        assert!(matches!(bn_descent_split(&g3), Err(Error::Scope(_))));
    }

    #[test]
    fn col_residue_examples() {
        assert_eq!(col_residues(&[2, 3, 3, 5, 1, 1, 3, 2], 2), 6);
        assert_eq!(col_residues(&[7, 9, 11], 1), 0);
        assert_eq!(col_residues(&[3, 1], 2), 2);
    }
}
