//! Projective algebraic toric sets over `F_q`: point enumeration, the
//! lattice of the vanishing ideal, evaluation-code parameters, and
//! complete-intersection checks for the vanishing ideal.
//!
//! The vanishing lattice is computed arithmetically: a degree-zero vector
//! `a` kills every point `[x^{v_1}, ..., x^{v_s}]` iff `Σ a_i v_i ≡ 0`
//! componentwise modulo `q - 1` (cyclicity of `F_q*`). That derivation is
//! cross-validated against brute-force evaluation in the test suites.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use std::collections::BTreeSet;

use crate::binomial::Binomial;
use crate::ci::{
    full_configuration_check, search_ci_generators, verify_ci_certificate, CICertificate,
    ConfigurationReport,
};
use crate::error::Error;
use crate::gf::{FieldSpec, Fq};
use crate::lattice::{GradingVector, Lattice};
use crate::matrix::{left_kernel, IntMatrix};

/// Largest number of parameter tuples scanned by point enumeration.
pub const MAX_ENUMERATION: u128 = 10_000_000;
/// Largest number of degree-d monomials accepted by the code computation.
pub const MAX_MONOMIALS: u128 = 100_000;
/// Largest number of codewords scanned for the minimum distance.
pub const MAX_CODEWORDS: u128 = 1_000_000;

/// Monomial parameterization `X = {[x^{v_1}, ..., x^{v_s}]}` over `F_q`.
#[derive(Clone, Debug)]
pub struct ToricSetSpec {
    exponents: IntMatrix,
    field: FieldSpec,
}

impl ToricSetSpec {
    /// `exponents` is the `s x n` matrix whose rows are the parameterizing
    /// monomials; entries must be nonnegative, `s ≥ 2`, `n ≥ 1`.
    pub fn new(exponents: IntMatrix, q: u64) -> Result<Self, Error> {
        if exponents.rows() < 2 || exponents.cols() < 1 {
            return Err(Error::Parse(
                "toric set needs at least 2 rows and 1 column".into(),
            ));
        }
        for i in 0..exponents.rows() {
            for j in 0..exponents.cols() {
                if exponents.get(i, j).is_negative() {
                    return Err(Error::NegativeExponent);
                }
            }
        }
        Ok(ToricSetSpec {
            exponents,
            field: FieldSpec::new(q)?,
        })
    }

    pub fn num_variables(&self) -> usize {
        self.exponents.rows()
    }

    pub fn num_parameters(&self) -> usize {
        self.exponents.cols()
    }

    pub fn exponents(&self) -> &IntMatrix {
        &self.exponents
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    // exponents reduced modulo q-1, indexed [variable][parameter]
    fn reduced_exponents(&self) -> Vec<Vec<u64>> {
        let order = BigInt::from(self.field.q() - 1);
        (0..self.exponents.rows())
            .map(|i| {
                (0..self.exponents.cols())
                    .map(|j| {
                        self.exponents
                            .get(i, j)
                            .mod_floor(&order)
                            .to_u64()
                            .expect("reduced exponent fits")
                    })
                    .collect()
            })
            .collect()
    }
}

/// Point of `X` with all coordinates nonzero, scaled so the first is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: Vec<Fq>,
}

impl ProjectivePoint {
    pub fn coords(&self) -> &[Fq] {
        &self.coords
    }
}

/// Deduplicated, sorted list of the normalized points of `X`.
pub fn enumerate_points(spec: &ToricSetSpec) -> Result<Vec<ProjectivePoint>, Error> {
    let q = spec.field.q();
    let n = spec.num_parameters();
    let s = spec.num_variables();
    let size = (1..=n).try_fold(1u128, |acc, _| {
        let next = acc.saturating_mul(u128::from(q - 1));
        if next > MAX_ENUMERATION {
            None
        } else {
            Some(next)
        }
    });
    if size.is_none() {
        return Err(Error::EnumerationTooLarge {
            size: u128::MAX,
            bound: MAX_ENUMERATION,
        });
    }

    let vmod = spec.reduced_exponents();
    let field = &spec.field;
    let order = q - 1;
    let mut set = BTreeSet::new();
    // odometer over the discrete logs of the parameters
    let mut logs = vec![0u64; n];
    loop {
        let point_logs: Vec<u64> = (0..s)
            .map(|i| {
                vmod[i]
                    .iter()
                    .zip(&logs)
                    .map(|(&v, &l)| v % order * l % order)
                    .sum::<u64>()
                    % order
            })
            .collect();
        // scale so the first coordinate is 1
        let base = point_logs[0];
        let coords: Vec<Fq> = point_logs
            .iter()
            .map(|&l| field.exp(l + order - base))
            .collect();
        set.insert(ProjectivePoint { coords });

        let mut done = true;
        for j in 0..n {
            if logs[j] + 1 < order {
                logs[j] += 1;
                for l in logs.iter_mut().take(j) {
                    *l = 0;
                }
                done = false;
                break;
            }
        }
        if done {
            break;
        }
    }
    Ok(set.into_iter().collect())
}

/// The unique standard-homogeneous lattice whose lattice ideal is the
/// vanishing ideal `I(X)`.
pub fn vanishing_lattice(spec: &ToricSetSpec) -> Lattice {
    let s = spec.num_variables();
    let n = spec.num_parameters();
    let order = BigInt::from(spec.field.q() - 1);
    // unknowns (a, k) ∈ Z^{s+n}; columns force Σ a_i = 0 and
    // Σ a_i v_{ij} + (q-1) k_j = 0
    let mut m = IntMatrix::zero(s + n, n + 1);
    for i in 0..s {
        m.set(i, 0, BigInt::from(1));
        for j in 0..n {
            m.set(i, j + 1, spec.exponents.get(i, j).clone());
        }
    }
    for j in 0..n {
        m.set(s + j, j + 1, order.clone());
    }
    let kernel = left_kernel(&m);
    let rows: Vec<Vec<BigInt>> = (0..kernel.rows())
        .map(|r| (0..s).map(|c| kernel.get(r, c).clone()).collect())
        .collect();
    Lattice::from_rows(s, rows)
}

/// Brute-force evaluation of a standard-homogeneous binomial on every point
/// of `X`.
pub fn binomial_vanishes(spec: &ToricSetSpec, g: &Binomial) -> Result<bool, Error> {
    let s = spec.num_variables();
    if g.dim() != s {
        return Err(Error::DimensionMismatch {
            expected: s,
            got: g.dim(),
        });
    }
    if !g.is_homogeneous(&GradingVector::standard(s))? {
        return Err(Error::NonHomogeneousBinomial);
    }
    let order = BigInt::from(spec.field.q() - 1);
    let gmod: Vec<u64> = g
        .vector()
        .iter()
        .map(|x| x.mod_floor(&order).to_u64().expect("reduced exponent fits"))
        .collect();
    let o = spec.field.q() - 1;
    for pt in enumerate_points(spec)? {
        // t^{a+} = t^{a-} at a point with nonzero coordinates iff the
        // log-linear form of ĝ vanishes mod q-1
        let acc = pt
            .coords()
            .iter()
            .zip(&gmod)
            .map(|(&c, &e)| {
                let l = u64::from(spec.field.log(c).expect("point coordinates are nonzero"));
                l % o * (e % o) % o
            })
            .sum::<u64>()
            % o;
        if acc != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Parameters of the degree-`d` evaluation code over `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeParams {
    pub length: usize,
    pub degree: u64,
    pub dimension: usize,
    pub min_distance: Option<usize>,
}

// exponent tuples of total degree d over s variables, ascending lex
fn degree_monomials(s: usize, d: u64) -> Vec<Vec<u64>> {
    fn rec(s: usize, d: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if s == 1 {
            acc.push(d);
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for e in 0..=d {
            acc.push(e);
            rec(s - 1, d - e, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(s, d, &mut Vec::new(), &mut out);
    out
}

fn monomial_count(s: usize, d: u64) -> u128 {
    // C(d + s - 1, s - 1)
    let mut acc: u128 = 1;
    for i in 1..s as u128 {
        acc = acc.saturating_mul(u128::from(d) + i) / i;
    }
    acc
}

// reduced row basis of the code spanned by degree-d monomial evaluations
fn code_basis(spec: &ToricSetSpec, d: u64) -> Result<(Vec<ProjectivePoint>, Vec<Vec<Fq>>), Error> {
    let s = spec.num_variables();
    let count = monomial_count(s, d);
    if count > MAX_MONOMIALS {
        return Err(Error::MonomialCountTooLarge {
            count,
            degree: d,
            bound: MAX_MONOMIALS,
        });
    }
    let points = enumerate_points(spec)?;
    let field = &spec.field;
    // pivot rows with pairwise distinct leading indices; reducing a word
    // strictly advances its leading index, so the loop terminates
    let mut basis: Vec<Vec<Fq>> = Vec::new();
    for mono in degree_monomials(s, d) {
        let mut word: Vec<Fq> = points
            .iter()
            .map(|pt| {
                mono.iter()
                    .zip(pt.coords())
                    .fold(field.one(), |acc, (&e, &c)| acc_mul_pow(field, acc, c, e))
            })
            .collect();
        loop {
            let Some(lead) = word.iter().position(|&x| x != 0) else {
                break;
            };
            let pivot = basis
                .iter()
                .find(|row| row.iter().position(|&x| x != 0) == Some(lead));
            match pivot {
                Some(row) => {
                    let factor =
                        field.div(word[lead], row[lead]).expect("leading entry nonzero");
                    for (w, &r) in word.iter_mut().zip(row) {
                        *w = field.sub(*w, field.mul(factor, r));
                    }
                }
                None => {
                    basis.push(word);
                    break;
                }
            }
        }
    }
    Ok((points, basis))
}

fn acc_mul_pow(field: &FieldSpec, acc: Fq, base: Fq, e: u64) -> Fq {
    field.mul(acc, field.pow(base, e))
}

/// Length and dimension of the degree-`d` evaluation code (minimum distance
/// left unset).
pub fn code_params(spec: &ToricSetSpec, d: u64) -> Result<CodeParams, Error> {
    let (points, basis) = code_basis(spec, d)?;
    Ok(CodeParams {
        length: points.len(),
        degree: d,
        dimension: basis.len(),
        min_distance: None,
    })
}

/// Minimum Hamming weight over all nonzero codewords, by exhaustive scan.
pub fn min_distance(spec: &ToricSetSpec, d: u64) -> Result<usize, Error> {
    let (points, basis) = code_basis(spec, d)?;
    let field = &spec.field;
    let dim = basis.len();
    let words = (0..dim).try_fold(1u128, |acc, _| {
        let next = acc.saturating_mul(u128::from(field.q()));
        if next > MAX_CODEWORDS {
            None
        } else {
            Some(next)
        }
    });
    if words.is_none() {
        return Err(Error::CodewordScanTooLarge {
            size: u128::MAX,
            bound: MAX_CODEWORDS,
        });
    }
    if dim == 0 {
        return Ok(0);
    }
    let mut best = points.len() + 1;
    let mut coeffs = vec![0 as Fq; dim];
    loop {
        // advance odometer first so the zero vector is skipped
        let mut done = true;
        for c in coeffs.iter_mut() {
            if u64::from(*c) + 1 < field.q() {
                *c += 1;
                done = false;
                break;
            }
            *c = 0;
        }
        if done {
            break;
        }
        let mut weight = 0usize;
        for j in 0..points.len() {
            let mut acc = field.zero();
            for (c, row) in coeffs.iter().zip(&basis) {
                acc = field.add(acc, field.mul(*c, row[j]));
            }
            if acc != 0 {
                weight += 1;
            }
        }
        if weight > 0 && weight < best {
            best = weight;
        }
    }
    Ok(best)
}

/// `code_params` plus the exhaustive minimum distance.
pub fn code_params_with_distance(spec: &ToricSetSpec, d: u64) -> Result<CodeParams, Error> {
    let mut params = code_params(spec, d)?;
    params.min_distance = Some(min_distance(spec, d)?);
    Ok(params)
}

/// Searches for a complete-intersection certificate of the vanishing ideal,
/// and double-checks every returned binomial by brute-force vanishing.
pub fn ci_check_vanishing(
    spec: &ToricSetSpec,
    degree_bound: &BigInt,
) -> Result<Option<CICertificate>, Error> {
    let lattice = vanishing_lattice(spec);
    let omega = GradingVector::standard(spec.num_variables());
    let Some(cert) = search_ci_generators(&lattice, &omega, degree_bound)? else {
        return Ok(None);
    };
    for b in cert.binomials() {
        if !binomial_vanishes(spec, b)? {
            return Err(Error::InternalVerification(
                "certificate binomial does not vanish on X".into(),
            ));
        }
    }
    debug_assert!(verify_ci_certificate(&lattice, &omega, &cert)?.verdict);
    Ok(Some(cert))
}

/// Configuration report for the vanishing lattice; same-sign always holds.
pub fn stci_report_vanishing(spec: &ToricSetSpec) -> Result<ConfigurationReport, Error> {
    let lattice = vanishing_lattice(spec);
    let omega = GradingVector::standard(spec.num_variables());
    full_configuration_check(&lattice, &omega)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus(s: usize, q: u64) -> ToricSetSpec {
        ToricSetSpec::new(IntMatrix::identity(s), q).unwrap()
    }

    fn pair_spec(q: u64) -> ToricSetSpec {
        // V = [[1], [2]]
        ToricSetSpec::new(IntMatrix::from_rows_i64(&[vec![1], vec![2]]), q).unwrap()
    }

    #[test]
    fn degenerate_binary_torus() {
        let spec = torus(3, 2);
        let pts = enumerate_points(&spec).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].coords(), &[1, 1, 1]);
    }

    #[test]
    fn ternary_torus_has_four_points() {
        let spec = torus(3, 3);
        let pts = enumerate_points(&spec).unwrap();
        assert_eq!(pts.len(), 4);
        for pt in &pts {
            assert_eq!(pt.coords()[0], 1);
            assert!(pt.coords().iter().all(|&c| c != 0));
        }
    }

    #[test]
    fn projected_pair_over_f5() {
        let spec = pair_spec(5);
        let pts = enumerate_points(&spec).unwrap();
        assert_eq!(pts.len(), 4);
        // [x, x^2] ~ [1, x]
        let second: BTreeSet<Fq> = pts.iter().map(|p| p.coords()[1]).collect();
        assert_eq!(second.len(), 4);
    }

    #[test]
    fn vanishing_lattice_examples() {
        let l = vanishing_lattice(&torus(3, 3));
        let expected = Lattice::from_rows_i64(&[vec![2, -2, 0], vec![0, 2, -2]]);
        assert!(l.equal(&expected).unwrap());

        let l2 = vanishing_lattice(&torus(3, 2));
        let expected2 = Lattice::from_rows_i64(&[vec![1, -1, 0], vec![0, 1, -1]]);
        assert!(l2.equal(&expected2).unwrap());

        let l3 = vanishing_lattice(&pair_spec(5));
        let expected3 = Lattice::from_rows_i64(&[vec![4, -4]]);
        assert!(l3.equal(&expected3).unwrap());
    }

    #[test]
    fn vanishing_brute_force_agreement() {
        let spec = torus(3, 3);
        let power = Binomial::from_vector_i64(&[2, -2, 0]).unwrap();
        assert!(binomial_vanishes(&spec, &power).unwrap());
        let linear = Binomial::from_vector_i64(&[1, -1, 0]).unwrap();
        assert!(!binomial_vanishes(&spec, &linear).unwrap());
        let skew = Binomial::from_vector_i64(&[1, 1, -2]).unwrap();
        assert!(!binomial_vanishes(&spec, &skew).unwrap());

        let not_homog = Binomial::from_vector_i64(&[1, 0, 0]).unwrap();
        assert_eq!(
            binomial_vanishes(&spec, &not_homog),
            Err(Error::NonHomogeneousBinomial)
        );
    }

    #[test]
    fn q_minus_one_powers_always_vanish() {
        for q in [3u64, 4, 5, 7, 8, 9] {
            let spec = torus(3, q);
            let e = q as i64 - 1;
            let g = Binomial::from_vector_i64(&[e, -e, 0]).unwrap();
            assert!(binomial_vanishes(&spec, &g).unwrap(), "q = {q}");
        }
    }

    #[test]
    fn torus_code_parameters() {
        let spec = torus(3, 3);
        assert_eq!(
            code_params(&spec, 0).unwrap(),
            CodeParams { length: 4, degree: 0, dimension: 1, min_distance: None }
        );
        let p1 = code_params(&spec, 1).unwrap();
        assert_eq!((p1.length, p1.dimension), (4, 3));
        // regularity: dimension saturates at |X|
        for d in 2..=6 {
            assert_eq!(code_params(&spec, d).unwrap().dimension, 4, "d = {d}");
        }
    }

    #[test]
    fn torus_minimum_distance() {
        let spec = torus(3, 3);
        assert_eq!(min_distance(&spec, 1).unwrap(), 2);
        // at and beyond regularity the code is the full space
        assert_eq!(min_distance(&spec, 2).unwrap(), 1);
        let full = code_params_with_distance(&spec, 1).unwrap();
        assert_eq!(full.min_distance, Some(2));
        // Singleton bound
        assert!(full.min_distance.unwrap() <= full.length - full.dimension + 1);
    }

    #[test]
    fn length_one_code() {
        let spec = torus(3, 2);
        let p = code_params_with_distance(&spec, 1).unwrap();
        assert_eq!(p.length, 1);
        assert_eq!(p.dimension, 1);
        assert_eq!(p.min_distance, Some(1));
    }

    #[test]
    fn ci_certificates_for_small_tori() {
        let spec = torus(3, 3);
        let cert = ci_check_vanishing(&spec, &BigInt::from(2))
            .unwrap()
            .expect("ternary torus is CI");
        assert_eq!(cert.binomials().len(), 2);
        for b in cert.binomials() {
            assert_eq!(b.degree(&GradingVector::standard(3)).unwrap(), BigInt::from(2));
        }

        let pair = pair_spec(5);
        let cert = ci_check_vanishing(&pair, &BigInt::from(4))
            .unwrap()
            .expect("principal lattice is CI");
        assert_eq!(cert.binomials().len(), 1);
        assert_eq!(
            cert.binomials()[0],
            Binomial::from_vector_i64(&[4, -4]).unwrap()
        );

        let degenerate = torus(3, 2);
        let cert = ci_check_vanishing(&degenerate, &BigInt::from(1))
            .unwrap()
            .expect("degree-zero lattice is CI");
        assert_eq!(cert.binomials().len(), 2);
    }

    #[test]
    fn stci_reports() {
        let report = stci_report_vanishing(&torus(3, 3)).unwrap();
        assert_eq!(
            report.configuration,
            vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)]
        );
        assert!(report.char_p_stci);

        let report = stci_report_vanishing(&pair_spec(5)).unwrap();
        assert_eq!(report.configuration, vec![BigInt::from(1), BigInt::from(1)]);
        assert!(report.all_same_sign);
    }

    #[test]
    fn vanishing_rank_is_corank_one() {
        for (v, q) in [
            (IntMatrix::identity(4), 5u64),
            (IntMatrix::from_rows_i64(&[vec![1, 2], vec![0, 1], vec![3, 1]]), 4),
            (IntMatrix::from_rows_i64(&[vec![2], vec![3], vec![5]]), 7),
        ] {
            let s = v.rows();
            let spec = ToricSetSpec::new(v, q).unwrap();
            assert_eq!(vanishing_lattice(&spec).rank(), s - 1);
        }
    }

    #[test]
    fn guards_fire() {
        // (q-1)^n too large: q = 101, n = 5 -> 100^5 = 10^10
        let m = IntMatrix::from_rows_i64(&[vec![1, 0, 0, 0, 0], vec![0, 1, 0, 0, 0]]);
        let spec = ToricSetSpec::new(m, 101).unwrap();
        assert!(matches!(
            enumerate_points(&spec),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }
}
