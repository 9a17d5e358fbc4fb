//! Sparse polynomials with exact rational coefficients, simple-component
//! decomposition, and monomial-multiplier certificates.
//!
//! The certificate construction follows the telescoping argument: write the
//! target's exponent vector as an integer combination of the generators'
//! vectors, flip generators so all coefficients are nonnegative, expand the
//! product of powers minus one as a telescoping sum in the Laurent ring, and
//! clear denominators with a single monomial `t^δ`. The combination is
//! re-expanded exactly before it is returned.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

use crate::binomial::{lattice_of_binomials, Binomial, Monomial};
use crate::error::Error;
use crate::lattice::Lattice;
use crate::matrix::hnf;

/// Sparse multivariate polynomial over the rationals.
///
/// No zero coefficients are stored; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Polynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// Single-term polynomial `c * t^m`.
    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut p = Polynomial::zero(m.dim());
        p.add_term(m, c);
        p
    }

    /// The binomial `t^{a+} - t^{a-}` as a polynomial.
    pub fn from_binomial(g: &Binomial) -> Self {
        let mut p = Polynomial::zero(g.dim());
        p.add_term(g.plus().clone(), BigRational::one());
        p.add_term(g.minus().clone(), -BigRational::one());
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        assert_eq!(m.dim(), self.dim, "term dimension mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (m, c) in self.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Product with a single monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (mt, c) in self.terms() {
            out.add_term(mt.mul(m), c.clone());
        }
        out
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Polynomial {
    /// Term format `coeff:e1,e2,...,es`, terms separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0:{}", vec!["0"; self.dim].join(","));
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| {
                let exps: Vec<String> = m.exponents().iter().map(|e| e.to_string()).collect();
                format!("{}:{}", c, exps.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Witness that `t^δ * f` lies in the ideal generated by the `gs`:
/// `t^δ * f = Σ coeff_k * gs[index_k]`, checked by exact expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplierCertificate {
    pub delta: Monomial,
    pub combination: Vec<(Polynomial, usize)>,
}

impl MultiplierCertificate {
    /// Exact re-expansion of the combination against the generators;
    /// `true` iff it reproduces `t^δ * f`.
    pub fn verify(&self, f: &Binomial, gs: &[Binomial]) -> bool {
        let mut sum = Polynomial::zero(f.dim());
        for (coeff, idx) in &self.combination {
            if *idx >= gs.len() {
                return false;
            }
            sum = sum.add(&coeff.mul(&Polynomial::from_binomial(&gs[*idx])));
        }
        let target = Polynomial::from_binomial(f).mul_monomial(&self.delta);
        sum == target
    }
}

// Laurent polynomial scratch type: exponents may be negative.
type Laurent = BTreeMap<Vec<BigInt>, BigRational>;

fn laurent_monomial(exps: Vec<BigInt>) -> Laurent {
    let mut m = Laurent::new();
    m.insert(exps, BigRational::one());
    m
}

fn laurent_add_term(p: &mut Laurent, exps: Vec<BigInt>, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match p.entry(exps) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn laurent_mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let exps: Vec<BigInt> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            laurent_add_term(&mut out, exps, ca * cb);
        }
    }
    out
}

// shift every exponent vector by `shift`
fn laurent_shift(p: &Laurent, shift: &[BigInt]) -> Laurent {
    p.iter()
        .map(|(e, c)| {
            let exps: Vec<BigInt> = e.iter().zip(shift).map(|(x, y)| x + y).collect();
            (exps, c.clone())
        })
        .collect()
}

/// Constructive ideal membership up to a monomial multiplier.
///
/// Requires `f̂ ∈ ⟨ĝ_1, ..., ĝ_r⟩` (the lemma's hypothesis, checked). The
/// returned `δ` is whatever the telescoping construction yields; it is not
/// minimized.
pub fn monomial_multiplier(
    f: &Binomial,
    gs: &[Binomial],
) -> Result<MultiplierCertificate, Error> {
    if gs.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let s = f.dim();
    let lattice = lattice_of_binomials(gs, s)?;
    let fvec = f.vector();

    // zero binomial: empty combination with δ = 0
    if fvec.iter().all(|x| x.is_zero()) {
        return Ok(MultiplierCertificate {
            delta: Monomial::one(s),
            combination: Vec::new(),
        });
    }

    // express f̂ = Σ λ_i ĝ_i through the Hermite form: with u * g = h and
    // f̂ = y * h (coordinates against the canonical rows), λ = y_padded * u
    let gmat = crate::matrix::IntMatrix::from_rows(
        gs.iter().map(|g| g.vector()).collect(),
        s,
    );
    let coords = lattice
        .coordinates(&fvec)?
        .ok_or(Error::MembershipHypothesis)?;
    let hf = hnf(&gmat);
    let mut y = coords;
    y.resize(gs.len(), BigInt::zero());
    let lambda = hf.u.mul_row_vec(&y);

    // flip generators so every coefficient is nonnegative
    let mut oriented: Vec<(Binomial, BigInt, bool)> = Vec::with_capacity(gs.len());
    for (g, l) in gs.iter().zip(&lambda) {
        if l.is_negative() {
            oriented.push((g.negated(), -l.clone(), true));
        } else {
            oriented.push((g.clone(), l.clone(), false));
        }
    }

    // telescoping sum in the Laurent ring:
    //   t^a/t^b - 1 = Σ_i prefix_i * (Σ_{k<λ_i} x_i^k) * (x_i - 1)
    // with x_i = t^{ĝ'_i} and prefix_i = Π_{j<i} x_j^{λ_j}; multiplying by
    // t^{b - β'_i} turns the i-th factor (x_i - 1) into g'_i
    let b_exp = f.minus().exponents().to_vec();
    let mut prefix_exp = vec![BigInt::zero(); s];
    let mut laurent_coeffs: Vec<(Laurent, usize, bool)> = Vec::new();
    for (i, (g, l, flipped)) in oriented.iter().enumerate() {
        if l.is_zero() {
            continue;
        }
        let gvec = g.vector();
        // geometric sum Σ_{k=0}^{λ-1} x^k
        let mut geo = Laurent::new();
        let mut k_exp = vec![BigInt::zero(); s];
        let mut k = BigInt::zero();
        while &k < l {
            laurent_add_term(&mut geo, k_exp.clone(), BigRational::one());
            for (e, d) in k_exp.iter_mut().zip(&gvec) {
                *e += d;
            }
            k += 1;
        }
        let prefix = laurent_monomial(prefix_exp.clone());
        let mut coeff = laurent_mul(&prefix, &geo);
        // multiply by t^{b - β'_i}
        let shift: Vec<BigInt> = b_exp
            .iter()
            .zip(g.minus().exponents())
            .map(|(x, y)| x - y)
            .collect();
        coeff = laurent_shift(&coeff, &shift);
        laurent_coeffs.push((coeff, i, *flipped));

        // prefix *= x_i^{λ_i}
        for (e, d) in prefix_exp.iter_mut().zip(&gvec) {
            *e += l * d;
        }
    }

    // smallest t^δ clearing all negative exponents
    let mut delta = vec![BigInt::zero(); s];
    for (coeff, _, _) in &laurent_coeffs {
        for exps in coeff.keys() {
            for (d, e) in delta.iter_mut().zip(exps) {
                if e.is_negative() && -e > *d {
                    *d = -e.clone();
                }
            }
        }
    }

    let mut combination = Vec::with_capacity(laurent_coeffs.len());
    for (coeff, i, flipped) in laurent_coeffs {
        let shifted = laurent_shift(&coeff, &delta);
        let mut poly = Polynomial::zero(s);
        for (exps, c) in shifted {
            let m = Monomial::new(exps).map_err(|_| {
                Error::InternalVerification("negative exponent after clearing".into())
            })?;
            // a flipped generator contributes with opposite sign against
            // the original
            poly.add_term(m, if flipped { -c } else { c });
        }
        combination.push((poly, i));
    }

    let cert = MultiplierCertificate {
        delta: Monomial::new(delta)
            .map_err(|_| Error::InternalVerification("negative delta".into()))?,
        combination,
    };
    if !cert.verify(f, gs) {
        return Err(Error::InternalVerification(
            "multiplier combination does not expand to t^δ·f".into(),
        ));
    }
    Ok(cert)
}

/// Partition of the terms of `f` into equivalence classes under
/// `a ~ b  iff  a - b ∈ G`, one polynomial per class.
///
/// Classes are ordered by their smallest monomial in lexicographic order.
pub fn simple_components(f: &Polynomial, g: &Lattice) -> Result<Vec<Polynomial>, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.dim() != g.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: g.ambient_dim(),
            got: f.dim(),
        });
    }
    let mut classes: Vec<(Monomial, Polynomial)> = Vec::new();
    // BTreeMap iteration is ascending, so each class representative is its
    // smallest monomial and classes appear in representative order
    for (m, c) in f.terms() {
        let mut placed = false;
        for (rep, poly) in classes.iter_mut() {
            let diff: Vec<BigInt> = m
                .exponents()
                .iter()
                .zip(rep.exponents())
                .map(|(a, b)| a - b)
                .collect();
            if g.contains(&diff)? {
                poly.add_term(m.clone(), c.clone());
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push((m.clone(), Polynomial::term(m.clone(), c.clone())));
        }
    }
    Ok(classes.into_iter().map(|(_, p)| p).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bin(v: &[i64]) -> Binomial {
        Binomial::from_vector_i64(v).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn polynomial_arithmetic_basics() {
        let g = bin(&[2, -1, -1]);
        let p = Polynomial::from_binomial(&g);
        assert_eq!(p.num_terms(), 2);
        assert!(p.sub(&p).is_zero());

        let q = p.mul(&p);
        // (t1^2 - t2 t3)^2 = t1^4 - 2 t1^2 t2 t3 + t2^2 t3^2
        assert_eq!(q.num_terms(), 3);
        let m = Monomial::from_i64(&[2, 1, 1]).unwrap();
        assert_eq!(q.terms().find(|(mm, _)| *mm == &m).unwrap().1, &rat(-2));
    }

    #[test]
    fn multiplier_for_a_generator_is_trivial() {
        let g1 = bin(&[2, -1, -1]);
        let g2 = bin(&[0, 2, -2]);
        let cert = monomial_multiplier(&g1, &[g1.clone(), g2]).unwrap();
        assert!(cert.delta.is_one());
        assert_eq!(cert.combination.len(), 1);
        assert_eq!(cert.combination[0].1, 0);
        assert_eq!(cert.combination[0].0, Polynomial::term(
            Monomial::one(3),
            rat(1)
        ));
    }

    #[test]
    fn multiplier_paper_style_example() {
        // t2 * (t1 - t3) = (t1^2 - t2 t3) - (t1^2 - t1 t2)
        let f = bin(&[1, 0, -1]);
        let g1 = bin(&[2, -1, -1]);
        let g2 = Binomial::new(
            Monomial::from_i64(&[2, 0, 0]).unwrap(),
            Monomial::from_i64(&[1, 1, 0]).unwrap(),
        )
        .unwrap();
        let cert = monomial_multiplier(&f, &[g1.clone(), g2.clone()]).unwrap();
        assert!(cert.verify(&f, &[g1, g2]));
    }

    #[test]
    fn multiplier_with_zero_delta() {
        // t2^2 - t1 t3 = t1(t2 - t3) - t2(t1 - t2)... membership:
        // (−1, 2, −1) = −(1, −1, 0) + (0, 1, −1)... oriented combination
        let f = Binomial::new(
            Monomial::from_i64(&[0, 2, 0]).unwrap(),
            Monomial::from_i64(&[1, 0, 1]).unwrap(),
        )
        .unwrap();
        let g1 = bin(&[1, -1, 0]);
        let g2 = bin(&[0, 1, -1]);
        let cert = monomial_multiplier(&f, &[g1.clone(), g2.clone()]).unwrap();
        assert!(cert.verify(&f, &[g1, g2]));
    }

    #[test]
    fn multiplier_hypothesis_failure() {
        let f = bin(&[1, -1]);
        let g = bin(&[2, -2]);
        assert_eq!(
            monomial_multiplier(&f, &[g]),
            Err(Error::MembershipHypothesis)
        );
    }

    #[test]
    fn multiplier_needs_negative_coefficients() {
        // f̂ = ĝ1 - ĝ2 forces a sign flip in the construction
        let g1 = bin(&[3, -1, 0]);
        let g2 = bin(&[1, 1, -2]);
        let fvec = [2i64, -2, 2];
        let f = bin(&fvec);
        let cert = monomial_multiplier(&f, &[g1.clone(), g2.clone()]).unwrap();
        assert!(cert.verify(&f, &[g1, g2]));
    }

    #[test]
    fn simple_components_split_by_lattice() {
        // f = t1^2 + t1 t2 - 2 t2^2
        let mut f = Polynomial::zero(3);
        f.add_term(Monomial::from_i64(&[2, 0, 0]).unwrap(), rat(1));
        f.add_term(Monomial::from_i64(&[1, 1, 0]).unwrap(), rat(1));
        f.add_term(Monomial::from_i64(&[0, 2, 0]).unwrap(), rat(-2));

        let coarse = Lattice::from_rows_i64(&[vec![1, -1, 0]]);
        let comps = simple_components(&f, &coarse).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0], f);

        let fine = Lattice::from_rows_i64(&[vec![2, -2, 0]]);
        let comps = simple_components(&f, &fine).unwrap();
        assert_eq!(comps.len(), 2);
        // smallest monomial first: t2^2 class { t1^2 - 2 t2^2 }, then t1 t2
        assert_eq!(comps[0].num_terms(), 2);
        assert_eq!(comps[1].num_terms(), 1);

        let single = Polynomial::term(Monomial::from_i64(&[1, 0, 0]).unwrap(), rat(5));
        let comps = simple_components(&single, &fine).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0], single);

        assert_eq!(
            simple_components(&Polynomial::zero(3), &fine),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn display_roundtrip_format() {
        let mut f = Polynomial::zero(2);
        f.add_term(Monomial::from_i64(&[2, 0]).unwrap(), rat(1));
        f.add_term(
            Monomial::from_i64(&[0, 1]).unwrap(),
            BigRational::new(BigInt::from(-3), BigInt::from(2)),
        );
        assert_eq!(f.to_string(), "-3/2:0,1 1:2,0");
    }
}
