//! Toric ideals of monomial curves: kernel lattice construction and a
//! recursive gluing decision for the complete-intersection property.
//!
//! The decision follows Delorme's splitting: a weight multiset is CI when it
//! is a single weight, or some bipartition `A | B` has
//! `lcm(gcd A, gcd B) ∈ ⟨A⟩ ∩ ⟨B⟩` and both halves, divided by their gcds,
//! are recursively CI. Every split writes the glue element two ways and
//! contributes one binomial, so a positive answer converts into an explicit
//! certificate that the caller can verify independently against the kernel
//! lattice.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use std::fmt;

use crate::binomial::Binomial;
use crate::error::Error;
use crate::lattice::{GradingVector, Lattice};
use crate::matrix::{left_kernel, IntMatrix};

/// Largest glue element accepted by the semigroup membership scan.
pub const MAX_SEMIGROUP_SCAN: u128 = 10_000_000;

/// Weights `(ω_1, ..., ω_s)` of a monomial curve `(y^{ω_1}, ..., y^{ω_s})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialCurveSpec {
    weights: Vec<u64>,
}

impl MonomialCurveSpec {
    pub fn new(weights: Vec<u64>) -> Result<Self, Error> {
        if weights.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::NonPositiveCurveWeight);
        }
        Ok(MonomialCurveSpec { weights })
    }

    pub fn from_bigints(weights: &[BigInt]) -> Result<Self, Error> {
        let ws: Result<Vec<u64>, Error> = weights
            .iter()
            .map(|w| {
                if !w.is_positive() {
                    return Err(Error::NonPositiveCurveWeight);
                }
                u64::try_from(w).map_err(|_| Error::CurveWeightTooLarge)
            })
            .collect();
        Self::new(ws?)
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn gcd(&self) -> u64 {
        self.weights.iter().fold(0u64, |g, &w| g.gcd(&w))
    }

    /// The weights as a grading vector.
    pub fn grading(&self) -> GradingVector {
        GradingVector::new(self.weights.iter().map(|&w| BigInt::from(w)).collect())
            .expect("weights are positive")
    }
}

/// Kernel of `e_i -> ω_i` as a rank-(s-1) lattice, homogeneous with respect
/// to the weights (the global gcd does not change the kernel).
pub fn toric_lattice_of_curve(spec: &MonomialCurveSpec) -> Lattice {
    let s = spec.dim();
    let mut col = IntMatrix::zero(s, 1);
    for (i, &w) in spec.weights().iter().enumerate() {
        col.set(i, 0, BigInt::from(w));
    }
    Lattice::from_generators(&left_kernel(&col))
}

/// Gluing certificate for a positive CI decision.
#[derive(Clone, Debug)]
pub enum GluingTree {
    /// A single generator (1-based variable index, original weight).
    Leaf { index: usize, weight: u64 },
    /// A bipartition with its glue element. Gcds and the witness refer to
    /// the scaled weights at this recursion level; the binomial's exponent
    /// relation also holds for the original weights.
    Node {
        left: Box<GluingTree>,
        right: Box<GluingTree>,
        left_indices: Vec<usize>,
        right_indices: Vec<usize>,
        gcd_left: u64,
        gcd_right: u64,
        witness: u64,
        binomial: Binomial,
    },
}

impl GluingTree {
    /// One binomial per internal node, left subtrees first.
    pub fn binomials(&self) -> Vec<Binomial> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<Binomial>) {
        if let GluingTree::Node {
            left,
            right,
            binomial,
            ..
        } = self
        {
            out.push(binomial.clone());
            left.collect(out);
            right.collect(out);
        }
    }

    fn render(&self, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        match self {
            GluingTree::Leaf { index, weight } => {
                out.push_str(&format!("{pad}leaf t{index} (weight {weight})\n"));
            }
            GluingTree::Node {
                left,
                right,
                left_indices,
                right_indices,
                gcd_left,
                gcd_right,
                witness,
                binomial,
            } => {
                let li: Vec<String> = left_indices.iter().map(|i| format!("t{i}")).collect();
                let ri: Vec<String> = right_indices.iter().map(|i| format!("t{i}")).collect();
                out.push_str(&format!(
                    "{pad}glue {{{}}} | {{{}}}: gcds ({}, {}), lcm {} -> {}\n",
                    li.join(","),
                    ri.join(","),
                    gcd_left,
                    gcd_right,
                    witness,
                    binomial
                ));
                left.render(indent + 1, out);
                right.render(indent + 1, out);
            }
        }
    }
}

impl fmt::Display for GluingTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(0, &mut s);
        write!(f, "{}", s.trim_end())
    }
}

/// Verdict of the curve decision, with the gluing certificate when CI.
#[derive(Clone, Debug)]
pub struct CurveDecision {
    pub is_ci: bool,
    pub tree: Option<GluingTree>,
}

// reachability table for ⟨weights⟩ up to `target` inclusive
fn semigroup_table(weights: &[u64], target: u64) -> Result<Vec<bool>, Error> {
    if u128::from(target) > MAX_SEMIGROUP_SCAN {
        return Err(Error::SemigroupScanBound {
            target: u128::from(target),
            bound: MAX_SEMIGROUP_SCAN,
        });
    }
    let t = target as usize;
    let mut tab = vec![false; t + 1];
    tab[0] = true;
    for x in 1..=t {
        tab[x] = weights
            .iter()
            .any(|&w| (w as usize) <= x && tab[x - w as usize]);
    }
    Ok(tab)
}

/// Dynamic-programming membership test `x ∈ ⟨weights⟩`.
pub fn semigroup_contains(weights: &[u64], x: u64) -> Result<bool, Error> {
    Ok(*semigroup_table(weights, x)?.last().unwrap())
}

// lexicographically smallest nonnegative solution of Σ u_i w_i = target
fn lex_min_representation(weights: &[u64], target: u64) -> Result<Option<Vec<u64>>, Error> {
    let k = weights.len();
    // suffix_tab[j] = reachability using weights[j..]
    let mut suffix_tab = Vec::with_capacity(k + 1);
    for j in 0..=k {
        suffix_tab.push(semigroup_table(&weights[j..], target)?);
    }
    if !suffix_tab[0][target as usize] {
        return Ok(None);
    }
    let mut repr = Vec::with_capacity(k);
    let mut rem = target;
    for j in 0..k {
        let mut chosen = None;
        for u in 0..=rem / weights[j] {
            let next = rem - u * weights[j];
            if suffix_tab[j + 1][next as usize] {
                chosen = Some(u);
                rem = next;
                break;
            }
        }
        // suffix_tab[j][rem] held, so some u works
        repr.push(chosen.expect("reachable remainder"));
    }
    debug_assert_eq!(rem, 0);
    Ok(Some(repr))
}

fn gcd_slice(ws: &[u64]) -> u64 {
    ws.iter().fold(0u64, |g, &w| g.gcd(&w))
}

// indices: original 0-based positions; weights: scaled weights, parallel
fn glue_recursive(
    ambient: usize,
    indices: &[usize],
    weights: &[u64],
) -> Result<Option<GluingTree>, Error> {
    if indices.len() == 1 {
        return Ok(Some(GluingTree::Leaf {
            index: indices[0] + 1,
            weight: weights[0],
        }));
    }
    let n = indices.len();
    // bipartitions A | B with A containing the first index, by ascending
    // mask over the remaining positions; excludes the full set
    for mask in 0u64..(1u64 << (n - 1)) - 1 {
        let mut pos_a = vec![0usize];
        let mut pos_b = Vec::new();
        for p in 1..n {
            if mask >> (p - 1) & 1 == 1 {
                pos_a.push(p);
            } else {
                pos_b.push(p);
            }
        }
        let wa: Vec<u64> = pos_a.iter().map(|&p| weights[p]).collect();
        let wb: Vec<u64> = pos_b.iter().map(|&p| weights[p]).collect();
        let da = gcd_slice(&wa);
        let db = gcd_slice(&wb);
        let m128 = u128::from(da) / u128::from(da.gcd(&db)) * u128::from(db);
        if m128 > MAX_SEMIGROUP_SCAN {
            return Err(Error::SemigroupScanBound {
                target: m128,
                bound: MAX_SEMIGROUP_SCAN,
            });
        }
        let m = m128 as u64;
        let Some(u) = lex_min_representation(&wa, m)? else {
            continue;
        };
        let Some(w) = lex_min_representation(&wb, m)? else {
            continue;
        };
        let scaled_a: Vec<u64> = wa.iter().map(|&x| x / da).collect();
        let scaled_b: Vec<u64> = wb.iter().map(|&x| x / db).collect();
        let idx_a: Vec<usize> = pos_a.iter().map(|&p| indices[p]).collect();
        let idx_b: Vec<usize> = pos_b.iter().map(|&p| indices[p]).collect();
        let Some(left) = glue_recursive(ambient, &idx_a, &scaled_a)? else {
            continue;
        };
        let Some(right) = glue_recursive(ambient, &idx_b, &scaled_b)? else {
            continue;
        };
        let mut vec = vec![BigInt::from(0); ambient];
        for (&i, &ui) in idx_a.iter().zip(&u) {
            vec[i] = BigInt::from(ui);
        }
        for (&j, &wj) in idx_b.iter().zip(&w) {
            vec[j] = -BigInt::from(wj);
        }
        let binomial = Binomial::from_vector(&vec).expect("glue element is positive");
        return Ok(Some(GluingTree::Node {
            left: Box::new(left),
            right: Box::new(right),
            left_indices: idx_a.iter().map(|&i| i + 1).collect(),
            right_indices: idx_b.iter().map(|&j| j + 1).collect(),
            gcd_left: da,
            gcd_right: db,
            witness: m,
            binomial,
        }));
    }
    Ok(None)
}

/// Decides whether the toric ideal of the monomial curve is a complete
/// intersection. Positive verdicts carry a gluing tree whose binomials form
/// a certificate for the kernel lattice.
pub fn decide_ci_monomial_curve(spec: &MonomialCurveSpec) -> Result<CurveDecision, Error> {
    let g = spec.gcd();
    let scaled: Vec<u64> = spec.weights().iter().map(|&w| w / g).collect();
    let indices: Vec<usize> = (0..spec.dim()).collect();
    let tree = glue_recursive(spec.dim(), &indices, &scaled)?;
    Ok(CurveDecision {
        is_ci: tree.is_some(),
        tree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ci::verify_ci_certificate;
    use crate::ci::CICertificate;

    fn spec(ws: &[u64]) -> MonomialCurveSpec {
        MonomialCurveSpec::new(ws.to_vec()).unwrap()
    }

    #[test]
    fn kernel_lattice_examples() {
        let l = toric_lattice_of_curve(&spec(&[2, 3]));
        assert!(l.equal(&Lattice::from_rows_i64(&[vec![3, -2]])).unwrap());

        let l = toric_lattice_of_curve(&spec(&[4, 6, 9]));
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&[3.into(), (-2).into(), 0.into()]).unwrap());
        assert!(l.contains(&[0.into(), 3.into(), (-2).into()]).unwrap());
        let w = spec(&[4, 6, 9]).grading();
        assert!(l.is_homogeneous(&w).unwrap());

        let ones = toric_lattice_of_curve(&spec(&[1, 1, 1]));
        let expected = Lattice::from_rows_i64(&[vec![1, -1, 0], vec![0, 1, -1]]);
        assert!(ones.equal(&expected).unwrap());
    }

    #[test]
    fn coprime_pairs_are_ci() {
        for (a, b) in [(2u64, 3u64), (3, 5), (7, 11), (4, 9)] {
            let d = decide_ci_monomial_curve(&spec(&[a, b])).unwrap();
            assert!(d.is_ci, "({a}, {b}) must be CI");
        }
    }

    #[test]
    fn classic_space_curves() {
        let d = decide_ci_monomial_curve(&spec(&[4, 6, 9])).unwrap();
        assert!(d.is_ci);
        let tree = d.tree.unwrap();
        assert_eq!(tree.binomials().len(), 2);

        let d = decide_ci_monomial_curve(&spec(&[3, 5, 7])).unwrap();
        assert!(!d.is_ci);
        assert!(d.tree.is_none());
    }

    #[test]
    fn positive_verdicts_verify() {
        for ws in [
            vec![4u64, 6, 9],
            vec![2, 3, 5],
            vec![1, 2, 3],
            vec![6, 10, 15],
            vec![2, 2],
            vec![5, 5, 5],
        ] {
            let sp = spec(&ws);
            let d = decide_ci_monomial_curve(&sp).unwrap();
            if let Some(tree) = d.tree {
                let cert =
                    CICertificate::new(tree.binomials(), sp.grading()).unwrap();
                let l = toric_lattice_of_curve(&sp);
                let report = verify_ci_certificate(&l, &sp.grading(), &cert).unwrap();
                assert!(report.verdict, "{ws:?}: {report:?}");
            }
        }
    }

    #[test]
    fn gcd_is_divided_out() {
        let a = decide_ci_monomial_curve(&spec(&[4, 6, 9])).unwrap();
        let b = decide_ci_monomial_curve(&spec(&[8, 12, 18])).unwrap();
        assert_eq!(a.is_ci, b.is_ci);
        assert!(toric_lattice_of_curve(&spec(&[4, 6, 9]))
            .equal(&toric_lattice_of_curve(&spec(&[8, 12, 18])))
            .unwrap());
    }

    #[test]
    fn semigroup_membership_scan() {
        assert!(semigroup_contains(&[4, 6], 12).unwrap());
        assert!(!semigroup_contains(&[4, 6], 5).unwrap());
        assert!(semigroup_contains(&[3, 5], 8).unwrap());
        assert!(!semigroup_contains(&[3, 5], 7).unwrap());
        assert!(semigroup_contains(&[7], 0).unwrap());
    }

    #[test]
    fn lex_min_representation_is_smallest() {
        // 12 over (4, 6): candidates (0, 2) and (3, 0); lex-min is (0, 2)
        let r = lex_min_representation(&[4, 6], 12).unwrap().unwrap();
        assert_eq!(r, vec![0, 2]);
        let r = lex_min_representation(&[3, 5], 11).unwrap().unwrap();
        assert_eq!(r, vec![2, 1]);
        assert!(lex_min_representation(&[3, 5], 7).unwrap().is_none());
    }

    #[test]
    fn single_weight_curve() {
        let d = decide_ci_monomial_curve(&spec(&[5])).unwrap();
        assert!(d.is_ci);
        assert!(matches!(d.tree, Some(GluingTree::Leaf { .. })));
        assert!(toric_lattice_of_curve(&spec(&[5])).is_zero());
    }

    #[test]
    fn weight_validation() {
        assert!(MonomialCurveSpec::new(vec![]).is_err());
        assert!(MonomialCurveSpec::new(vec![3, 0]).is_err());
        assert!(MonomialCurveSpec::from_bigints(&[BigInt::from(-2)]).is_err());
    }
}
