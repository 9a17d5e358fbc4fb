//! Deciding whether `V(I, t_i) = {0}` for an ideal generated by pure
//! binomials, over the algebraic closure of any field.
//!
//! No field arithmetic is needed: a nonzero point of the variety exists iff
//! some nonempty subset `N` of the variables avoiding `i` splits every
//! generator's supports consistently (both parts inside `N`, or neither
//! contained in `N`). The 0/1 point supported on `N` is then a witness, and
//! conversely the support of any nonzero solution yields such an `N`.

use crate::binomial::Binomial;
use crate::error::Error;

/// Largest ambient dimension accepted by the exhaustive subset scan.
pub const MAX_SUBSET_DIM: usize = 24;

/// A nonzero 0/1 point killing every generator and the excluded variable:
/// coordinates are 1 exactly on `nonzero_set` (1-based indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroPatternWitness {
    pub nonzero_set: Vec<usize>,
    pub excluded_index: usize,
}

/// Outcome of the zero-set check for one excluded variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroSetOutcome {
    /// `V(gs, t_i) = {0}`.
    OnlyOrigin,
    /// A nonzero 0/1 point exists; the scan returns one of minimal support.
    NonzeroPoint(ZeroPatternWitness),
}

impl ZeroSetOutcome {
    pub fn is_origin(&self) -> bool {
        matches!(self, ZeroSetOutcome::OnlyOrigin)
    }

    pub fn witness(&self) -> Option<&ZeroPatternWitness> {
        match self {
            ZeroSetOutcome::OnlyOrigin => None,
            ZeroSetOutcome::NonzeroPoint(w) => Some(w),
        }
    }
}

fn support_masks(gs: &[Binomial], dim: usize) -> Result<Vec<(u32, u32)>, Error> {
    if dim > MAX_SUBSET_DIM {
        return Err(Error::SubsetScanBound {
            dim,
            bound: MAX_SUBSET_DIM,
        });
    }
    gs.iter()
        .map(|g| {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: g.dim(),
                });
            }
            let plus = g.plus().support().iter().fold(0u32, |m, &i| m | 1 << i);
            let minus = g.minus().support().iter().fold(0u32, |m, &i| m | 1 << i);
            Ok((plus, minus))
        })
        .collect()
}

// every generator vanishes at the 0/1 point with support `n`:
// t^a evaluates to 1 iff supp(a) ⊆ n (the empty support always is)
fn all_vanish(masks: &[(u32, u32)], n: u32) -> bool {
    masks
        .iter()
        .all(|&(p, m)| (p & !n == 0) == (m & !n == 0))
}

// iterate k-subsets of the bits set in `allowed`, ascending
fn for_each_subset_of_size(allowed: &[usize], k: usize, f: &mut impl FnMut(u32) -> bool) -> bool {
    fn rec(
        allowed: &[usize],
        start: usize,
        k: usize,
        acc: u32,
        f: &mut impl FnMut(u32) -> bool,
    ) -> bool {
        if k == 0 {
            return f(acc);
        }
        for i in start..=allowed.len().saturating_sub(k) {
            if rec(allowed, i + 1, k - 1, acc | 1 << allowed[i], f) {
                return true;
            }
        }
        false
    }
    rec(allowed, 0, k, 0, f)
}

/// Decides `V(gs, t_i) = {0}` for the 1-based variable index `i`.
///
/// Subsets are scanned in order of increasing cardinality, so a returned
/// witness has minimal support.
pub fn variety_is_origin(gs: &[Binomial], dim: usize, i: usize) -> Result<ZeroSetOutcome, Error> {
    if i == 0 || i > dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: i,
        });
    }
    let masks = support_masks(gs, dim)?;
    let allowed: Vec<usize> = (0..dim).filter(|&j| j != i - 1).collect();
    let mut found: Option<u32> = None;
    for k in 1..=allowed.len() {
        for_each_subset_of_size(&allowed, k, &mut |n| {
            if all_vanish(&masks, n) {
                found = Some(n);
                true
            } else {
                false
            }
        });
        if found.is_some() {
            break;
        }
    }
    Ok(match found {
        Some(n) => ZeroSetOutcome::NonzeroPoint(ZeroPatternWitness {
            nonzero_set: (0..dim).filter(|&j| n & 1 << j != 0).map(|j| j + 1).collect(),
            excluded_index: i,
        }),
        None => ZeroSetOutcome::OnlyOrigin,
    })
}

/// `V(gs, t_i) = {0}` for every `i = 1, ..., s`; on failure reports the
/// first failing index with its witness.
pub fn variety_origin_all(gs: &[Binomial], dim: usize) -> Result<ZeroSetOutcome, Error> {
    for i in 1..=dim {
        if let ZeroSetOutcome::NonzeroPoint(w) = variety_is_origin(gs, dim, i)? {
            return Ok(ZeroSetOutcome::NonzeroPoint(w));
        }
    }
    Ok(ZeroSetOutcome::OnlyOrigin)
}
