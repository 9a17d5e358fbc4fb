//! Complete-intersection certificates for 1-dimensional graded lattice
//! ideals: verification of the three certificate conditions, a bounded
//! search for generators, and the same-sign configuration report behind the
//! positive-characteristic set-theoretic statement.

use num_bigint::BigInt;

use num_traits::{Signed, Zero};

use crate::binomial::{lattice_of_binomials, Binomial};
use crate::error::Error;
use crate::lattice::{GradingVector, Lattice};
use crate::zeroset::{variety_origin_all, ZeroPatternWitness, ZeroSetOutcome};

/// Largest number of candidate vectors / tuples scanned by the search.
pub const MAX_SEARCH_SPACE: u128 = 10_000_000;

/// Candidate set of `s - 1` homogeneous binomials for a rank-(s-1) lattice.
#[derive(Clone, Debug)]
pub struct CICertificate {
    binomials: Vec<Binomial>,
    grading: GradingVector,
}

impl CICertificate {
    pub fn new(binomials: Vec<Binomial>, grading: GradingVector) -> Result<Self, Error> {
        for b in &binomials {
            if b.dim() != grading.len() {
                return Err(Error::DimensionMismatch {
                    expected: grading.len(),
                    got: b.dim(),
                });
            }
        }
        Ok(CICertificate { binomials, grading })
    }

    pub fn binomials(&self) -> &[Binomial] {
        &self.binomials
    }

    pub fn grading(&self) -> &GradingVector {
        &self.grading
    }
}

/// Per-condition outcome of certificate verification.
///
/// `verdict` is the conjunction; when it holds the certificate binomials
/// generate the lattice ideal, which is therefore a complete intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CIVerification {
    /// (i) the exponent vectors span the lattice exactly
    pub lattice_matches: bool,
    /// (ii) `V(h_1, ..., h_{s-1}, t_i) = {0}` for every `i`
    pub variety_origin: bool,
    /// (iii) count is `s - 1` and every binomial is homogeneous with
    /// disjoint-support parts
    pub shape_ok: bool,
    /// witness point when (ii) fails
    pub witness: Option<ZeroPatternWitness>,
    pub verdict: bool,
}

/// Checks a certificate against the lattice and grading.
///
/// Preconditions (errors, not verdicts): the lattice must be homogeneous
/// with respect to `omega` and of rank `s - 1`.
pub fn verify_ci_certificate(
    lattice: &Lattice,
    omega: &GradingVector,
    cert: &CICertificate,
) -> Result<CIVerification, Error> {
    let s = lattice.ambient_dim();
    if omega.len() != s {
        return Err(Error::DimensionMismatch {
            expected: s,
            got: omega.len(),
        });
    }
    if cert.grading() != omega {
        return Err(Error::NotHomogeneous);
    }
    if !lattice.is_homogeneous(omega)? {
        return Err(Error::NotHomogeneous);
    }
    if s == 0 || lattice.rank() != s - 1 {
        return Err(Error::RankMismatch {
            rank: lattice.rank(),
            required: s.saturating_sub(1),
        });
    }

    let mut shape_ok = cert.binomials().len() == s - 1;
    for b in cert.binomials() {
        if b.dim() != s
            || b.vector().iter().all(|x| x.is_zero())
            || !b.is_homogeneous(omega)?
        {
            shape_ok = false;
        }
    }

    let lattice_matches = if cert.binomials().is_empty() {
        lattice.is_zero()
    } else {
        lattice_of_binomials(cert.binomials(), s)?.equal(lattice)?
    };

    let (variety_origin, witness) = match variety_origin_all(cert.binomials(), s)? {
        ZeroSetOutcome::OnlyOrigin => (true, None),
        ZeroSetOutcome::NonzeroPoint(w) => (false, Some(w)),
    };

    let verdict = lattice_matches && variety_origin && shape_ok;
    Ok(CIVerification {
        lattice_matches,
        variety_origin,
        shape_ok,
        witness,
        verdict,
    })
}

// all sign-canonical nonzero lattice vectors of ω-degree ≤ bound, sorted by
// (degree, vector)
fn homogeneous_candidates(
    lattice: &Lattice,
    omega: &GradingVector,
    bound: &BigInt,
) -> Result<Vec<(BigInt, Vec<BigInt>)>, Error> {
    let s = lattice.ambient_dim();
    if bound.is_negative() {
        return Ok(Vec::new());
    }
    // |v_j| ≤ bound / ω_j keeps the positive-part degree within the bound
    let limits: Vec<i64> = omega
        .weights()
        .iter()
        .map(|w| {
            i64::try_from(&(bound / w)).map_err(|_| Error::SearchSpaceTooLarge {
                size: u128::MAX,
                bound: MAX_SEARCH_SPACE,
            })
        })
        .collect::<Result<_, _>>()?;
    let mut size: u128 = 1;
    for &b in &limits {
        size = size.saturating_mul(2 * b as u128 + 1);
        if size > MAX_SEARCH_SPACE {
            return Err(Error::SearchSpaceTooLarge {
                size,
                bound: MAX_SEARCH_SPACE,
            });
        }
    }

    let mut candidates = Vec::new();
    let mut counter = vec![0i64; s];
    let mut exhausted = s == 0;
    while !exhausted {
        let v: Vec<BigInt> = counter
            .iter()
            .zip(&limits)
            .map(|(&c, &b)| BigInt::from(c - b))
            .collect();
        // canonical sign: first nonzero entry positive
        if v.iter().find(|x| !x.is_zero()).is_some_and(|f| f.is_positive()) {
            let pos_degree: BigInt = v
                .iter()
                .zip(omega.weights())
                .filter(|(x, _)| x.is_positive())
                .map(|(x, w)| x * w)
                .sum();
            if &pos_degree <= bound && lattice.contains(&v)? {
                candidates.push((pos_degree, v));
            }
        }
        // odometer step
        exhausted = true;
        for j in 0..s {
            if counter[j] < 2 * limits[j] {
                counter[j] += 1;
                for c in counter.iter_mut().take(j) {
                    *c = 0;
                }
                exhausted = false;
                break;
            }
        }
    }
    candidates.sort();
    Ok(candidates)
}

fn binomial_count(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Exhaustive bounded search for a passing certificate.
///
/// Candidate vectors are enumerated by ω-degree then lexicographically;
/// tuples without repetition are tried in that order and the first
/// certificate passing `verify_ci_certificate` is returned. `None` does not
/// prove the lattice ideal is not a complete intersection: the search is
/// bound-limited.
pub fn search_ci_generators(
    lattice: &Lattice,
    omega: &GradingVector,
    degree_bound: &BigInt,
) -> Result<Option<CICertificate>, Error> {
    let s = lattice.ambient_dim();
    if omega.len() != s {
        return Err(Error::DimensionMismatch {
            expected: s,
            got: omega.len(),
        });
    }
    if !lattice.is_homogeneous(omega)? {
        return Err(Error::NotHomogeneous);
    }
    if s == 0 || lattice.rank() != s - 1 {
        return Err(Error::RankMismatch {
            rank: lattice.rank(),
            required: s.saturating_sub(1),
        });
    }
    if s == 1 {
        let cert = CICertificate::new(Vec::new(), omega.clone())?;
        return Ok(Some(cert));
    }

    let candidates = homogeneous_candidates(lattice, omega, degree_bound)?;
    let k = s - 1;
    if binomial_count(candidates.len(), k) > MAX_SEARCH_SPACE {
        return Err(Error::SearchSpaceTooLarge {
            size: binomial_count(candidates.len(), k),
            bound: MAX_SEARCH_SPACE,
        });
    }
    if candidates.len() < k {
        return Ok(None);
    }

    // lexicographic combinations of candidate indices
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let binomials: Result<Vec<Binomial>, Error> = idx
            .iter()
            .map(|&i| Binomial::from_vector(&candidates[i].1))
            .collect();
        let cert = CICertificate::new(binomials?, omega.clone())?;
        let report = verify_ci_certificate(lattice, omega, &cert)?;
        if report.verdict {
            return Ok(Some(cert));
        }
        // advance combination
        let mut j = k;
        loop {
            if j == 0 {
                return Ok(None);
            }
            j -= 1;
            if idx[j] != j + candidates.len() - k {
                break;
            }
        }
        idx[j] += 1;
        for t in j + 1..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

/// Configuration of a rank-(s-1) homogeneous lattice with the same-sign
/// check behind the positive-characteristic set-theoretic CI statement.
///
/// For homogeneous lattices the check always passes; `all_same_sign = false`
/// can only be produced by an internal bug.
#[derive(Clone, Debug)]
pub struct ConfigurationReport {
    pub configuration: Vec<BigInt>,
    pub all_same_sign: bool,
    pub char_p_stci: bool,
}

pub fn full_configuration_check(
    lattice: &Lattice,
    omega: &GradingVector,
) -> Result<ConfigurationReport, Error> {
    if !lattice.is_homogeneous(omega)? {
        return Err(Error::NotHomogeneous);
    }
    let configuration = lattice.configuration()?;
    // after sign canonicalization "same sign" means strictly positive
    let all_same_sign = configuration.iter().all(|a| a.is_positive());
    Ok(ConfigurationReport {
        configuration,
        all_same_sign,
        char_p_stci: all_same_sign,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bin(v: &[i64]) -> Binomial {
        Binomial::from_vector_i64(v).unwrap()
    }

    fn ones(n: usize) -> GradingVector {
        GradingVector::standard(n)
    }

    #[test]
    fn paper_pair_certifies() {
        let l = Lattice::from_rows_i64(&[vec![2, -1, -1], vec![0, 2, -2]]);
        let cert =
            CICertificate::new(vec![bin(&[2, -1, -1]), bin(&[0, 2, -2])], ones(3)).unwrap();
        let report = verify_ci_certificate(&l, &ones(3), &cert).unwrap();
        assert!(report.lattice_matches);
        assert!(report.variety_origin);
        assert!(report.shape_ok);
        assert!(report.verdict);
    }

    #[test]
    fn linear_torus_certifies() {
        let l = Lattice::from_rows_i64(&[vec![1, -1, 0], vec![0, 1, -1]]);
        let cert =
            CICertificate::new(vec![bin(&[1, -1, 0]), bin(&[0, 1, -1])], ones(3)).unwrap();
        assert!(verify_ci_certificate(&l, &ones(3), &cert).unwrap().verdict);
    }

    #[test]
    fn index_two_sublattice_fails_condition_i() {
        let l = Lattice::from_rows_i64(&[vec![1, -1, 0], vec![0, 1, -1]]);
        let cert =
            CICertificate::new(vec![bin(&[1, -1, 0]), bin(&[0, 2, -2])], ones(3)).unwrap();
        let report = verify_ci_certificate(&l, &ones(3), &cert).unwrap();
        assert!(!report.lattice_matches);
        assert!(!report.verdict);
    }

    #[test]
    fn verifier_preconditions() {
        let not_homog = Lattice::from_rows_i64(&[vec![1, 0, 0], vec![0, 1, -1]]);
        let cert = CICertificate::new(vec![bin(&[1, -1, 0])], ones(3)).unwrap();
        assert_eq!(
            verify_ci_certificate(&not_homog, &ones(3), &cert),
            Err(Error::NotHomogeneous)
        );

        let low_rank = Lattice::from_rows_i64(&[vec![1, -1, 0]]);
        assert!(matches!(
            verify_ci_certificate(&low_rank, &ones(3), &cert),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn search_finds_torus_pair() {
        let l = Lattice::from_rows_i64(&[vec![2, -2, 0], vec![0, 2, -2]]);
        let cert = search_ci_generators(&l, &ones(3), &BigInt::from(2))
            .unwrap()
            .expect("torus lattice is CI");
        let vecs: Vec<Vec<BigInt>> = cert.binomials().iter().map(|b| b.vector()).collect();
        assert_eq!(vecs.len(), 2);
        let report = verify_ci_certificate(&l, &ones(3), &cert).unwrap();
        assert!(report.verdict);
        // first-found pair under (degree, lex) order
        let expected: Vec<Vec<BigInt>> = vec![
            vec![0.into(), 2.into(), (-2).into()],
            vec![2.into(), (-2).into(), 0.into()],
        ];
        assert_eq!(vecs, expected);
    }

    #[test]
    fn search_principal_lattice() {
        let l = Lattice::from_rows_i64(&[vec![1, -1]]);
        let cert = search_ci_generators(&l, &ones(2), &BigInt::from(1))
            .unwrap()
            .expect("principal lattice");
        assert_eq!(cert.binomials().len(), 1);
        assert_eq!(cert.binomials()[0], bin(&[1, -1]));
    }

    #[test]
    fn search_degree_zero_finds_nothing() {
        let l = Lattice::from_rows_i64(&[vec![1, -1]]);
        assert!(search_ci_generators(&l, &ones(2), &BigInt::zero())
            .unwrap()
            .is_none());
    }

    #[test]
    fn configuration_reports() {
        let l = Lattice::from_rows_i64(&[vec![2, -2, 0], vec![0, 2, -2]]);
        let report = full_configuration_check(&l, &ones(3)).unwrap();
        assert_eq!(
            report.configuration,
            vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)]
        );
        assert!(report.all_same_sign);
        assert!(report.char_p_stci);

        let curve = Lattice::from_rows_i64(&[vec![3, -2]]);
        let w = GradingVector::from_i64(&[2, 3]).unwrap();
        let report = full_configuration_check(&curve, &w).unwrap();
        assert_eq!(
            report.configuration,
            vec![BigInt::from(2), BigInt::from(3)]
        );
        assert!(report.all_same_sign);
    }

    #[test]
    fn degenerate_curve_configuration() {
        let l = crate::curve::toric_lattice_of_curve(
            &crate::curve::MonomialCurveSpec::new(vec![1, 1, 1]).unwrap(),
        );
        let report = full_configuration_check(&l, &ones(3)).unwrap();
        assert_eq!(
            report.configuration,
            vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)]
        );
    }
}
