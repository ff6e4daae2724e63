//! Robinson–Schensted for signed permutations.
//!
//! The window is split into its uncolored and its colored subword. Each is
//! row-inserted by absolute value on its own, recording positions, which
//! gives `g ↦ [(P₀,P₁),(Q₀,Q₁)]`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::group::{ColoredPermutation, GroupDescriptor, ProjectiveElement};

/// Rows of distinct positive integers, increasing along rows and down
/// columns, with weakly decreasing row lengths.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize), serde(transparent))]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Self { rows };
        t.validate()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::ShapeMismatch(msg));
        for (k, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return bad(format!("row {k} is empty"));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("row {k} is not increasing"));
            }
            if row.contains(&0) {
                return bad("entries must be positive".into());
            }
            if k > 0 {
                let above = &self.rows[k - 1];
                if row.len() > above.len() {
                    return bad(format!("row {k} is longer than the row above"));
                }
                if row.iter().zip(above).any(|(b, a)| a >= b) {
                    return bad(format!("a column is not increasing at row {k}"));
                }
            }
        }
        let content = self.content();
        if content.windows(2).any(|w| w[0] == w[1]) {
            return bad("entries repeat".into());
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Entries in increasing order.
    pub fn content(&self) -> Vec<u32> {
        let mut c: Vec<u32> = self.rows.iter().flatten().copied().collect();
        c.sort_unstable();
        c
    }

    fn row_of(&self, x: u32) -> Option<usize> {
        self.rows.iter().position(|row| row.contains(&x))
    }

    /// `i` such that `i` and `i+1` both occur, `i` in a strictly higher row.
    pub fn descents(&self) -> Vec<u32> {
        self.content()
            .into_iter()
            .filter(|&i| matches!((self.row_of(i), self.row_of(i + 1)), (Some(a), Some(b)) if a < b))
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (0..width)
            .map(|j| {
                self.rows
                    .iter()
                    .take_while(|row| row.len() > j)
                    .map(|row| row[j])
                    .collect()
            })
            .collect();
        Self { rows }
    }

    /// Row insertion; returns the row that grew.
    fn insert(&mut self, mut x: u32) -> usize {
        for (k, row) in self.rows.iter_mut().enumerate() {
            match row.iter().position(|&y| y > x) {
                Some(j) => x = core::mem::replace(&mut row[j], x),
                None => {
                    row.push(x);
                    return k;
                }
            }
        }
        self.rows.push(vec![x]);
        self.rows.len() - 1
    }

    fn push_to_row(&mut self, k: usize, x: u32) {
        if k == self.rows.len() {
            self.rows.push(vec![x]);
        } else {
            self.rows[k].push(x);
        }
    }

    /// Removes the last cell of row `k` and bumps it out through the rows above.
    fn uninsert(&mut self, k: usize) -> u32 {
        let mut x = self.rows[k].pop().expect("row is non-empty");
        if self.rows[k].is_empty() {
            self.rows.pop();
        }
        for row in self.rows[..k].iter_mut().rev() {
            let j = row.iter().rposition(|&y| y < x).expect("tableau is standard");
            x = core::mem::replace(&mut row[j], x);
        }
        x
    }
}

impl core::fmt::Display for Tableau {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("(")?;
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                f.write_str(" / ")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
        }
        f.write_str(")")
    }
}

/// A pair of tableaux: uncolored part first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Bitableau {
    pub zero: Tableau,
    pub one: Tableau,
}

/// Insertion bitableau `P` and recording bitableau `Q`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RsPair {
    pub p: Bitableau,
    pub q: Bitableau,
}

fn require_bn(group: &GroupDescriptor) -> Result<()> {
    if group.r() != 2 || !group.is_wreath() {
        return Err(Error::Scope(format!(
            "Robinson-Schensted needs G(2,1,1,n), got {group}"
        )));
    }
    Ok(())
}

pub fn rs_correspondence(g: &ProjectiveElement) -> Result<RsPair> {
    require_bn(g.group())?;
    let mut out = RsPair::default();
    for i in 1..=g.n() {
        let (v, c) = g.lift().entry(i);
        let (p, q) = if c == 0 {
            (&mut out.p.zero, &mut out.q.zero)
        } else {
            (&mut out.p.one, &mut out.q.one)
        };
        let k = p.insert(v);
        q.push_to_row(k, i as u32);
    }
    Ok(out)
}

pub fn rs_inverse(pair: &RsPair) -> Result<ProjectiveElement> {
    for t in [&pair.p.zero, &pair.p.one, &pair.q.zero, &pair.q.one] {
        t.validate()?;
    }
    if pair.p.zero.shape() != pair.q.zero.shape() || pair.p.one.shape() != pair.q.one.shape() {
        return Err(Error::ShapeMismatch("P and Q have different shapes".into()));
    }
    let n = pair.p.zero.len() + pair.p.one.len();
    let full: Vec<u32> = (1..=n as u32).collect();
    for (name, bi) in [("P", &pair.p), ("Q", &pair.q)] {
        let mut c = bi.zero.content();
        c.extend(bi.one.content());
        c.sort_unstable();
        if c != full {
            return Err(Error::ShapeMismatch(format!(
                "{name} does not contain 1..={n} exactly once"
            )));
        }
    }
    let group = GroupDescriptor::wreath(2, n as u32)?;
    let mut work = pair.clone();
    let mut sigma = vec![0; n];
    let mut colors = vec![0; n];
    for i in (1..=n as u32).rev() {
        let (color, p, q) = match work.q.zero.row_of(i) {
            Some(_) => (0, &mut work.p.zero, &mut work.q.zero),
            None => (1, &mut work.p.one, &mut work.q.one),
        };
        let k = q.row_of(i).expect("content checked");
        q.rows[k].pop();
        if q.rows[k].is_empty() {
            q.rows.pop();
        }
        sigma[i as usize - 1] = p.uninsert(k);
        colors[i as usize - 1] = color;
    }
    ProjectiveElement::canonicalize(ColoredPermutation::new(sigma, colors)?, group)
}

/// Transposes both colored tableaux and maps back.
pub fn rs_transpose_map(g: &ProjectiveElement) -> Result<ProjectiveElement> {
    let mut pair = rs_correspondence(g)?;
    pair.p.one = pair.p.one.transpose();
    pair.q.one = pair.q.one.transpose();
    rs_inverse(&pair)
}

/// Window with `-k` for `k¹` when `r = 2`, the usual form otherwise.
pub fn signed_window(g: &ProjectiveElement) -> String {
    if g.group().r() != 2 {
        return format!("{g}");
    }
    let mut s = String::from("[");
    for i in 1..=g.n() {
        let (v, c) = g.lift().entry(i);
        if i > 1 {
            s.push(',');
        }
        let _ = write!(s, "{}{v}", if c == 1 { "-" } else { "" });
    }
    s.push(']');
    s
}
