//! Explicit bijections.
//!
//! - [`nvec`]: `ℕⁿ(p) ↔ G(r,p,s,n) × 𝒫ₙ × [0,s-1]`, trading `max f`, `|f|`
//!   and `col_{r/s}(f)` for `λ₁(g)`, `fmaj(g)` and `col(g)`.
//! - [`bipartite`]: the forward map from tuples `(g,λ,μ,h,k)` to 2-partite
//!   partitions.
//! - [`involution`]: the relabeling that turns `<'`-descents into
//!   `<`-descents on `G(r,n)`.
//! - [`rsk`]: Robinson–Schensted for signed permutations and the map that
//!   transposes the colored tableaux.
//!
//! Partitions in `𝒫ₙ` are weakly decreasing vectors of length `n`
//! (trailing zeros included).

pub mod bipartite;
pub mod involution;
pub mod nvec;
pub mod rsk;

pub use bipartite::{bipartite_from_tuple, Bipartite};
pub use involution::order_involution;
pub use nvec::{nvec_decode, nvec_encode};
pub use rsk::{rs_correspondence, rs_inverse, rs_transpose_map, signed_window, Bitableau, RsPair, Tableau};

use alloc::format;

use crate::error::{Error, Result};

/// Checks that `lambda` is a weakly decreasing vector of length `n`.
pub(crate) fn check_partition(lambda: &[u32], n: usize) -> Result<()> {
    if lambda.len() != n {
        return Err(Error::Range(format!(
            "partition has {} parts, expected {n}",
            lambda.len()
        )));
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Range(format!("{lambda:?} is not weakly decreasing")));
    }
    Ok(())
}
