//! Monomials and pure binomials `t^a - t^b` with disjoint-support parts.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;

use crate::error::Error;
use crate::lattice::{GradingVector, Lattice};
use crate::matrix::IntMatrix;

/// Monomial `t^a` given by its nonnegative exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<BigInt>);

impl Monomial {
    pub fn new(exponents: Vec<BigInt>) -> Result<Self, Error> {
        if exponents.iter().any(|e| e.is_negative()) {
            return Err(Error::NegativeExponent);
        }
        Ok(Monomial(exponents))
    }

    /// The constant monomial `1` in `s` variables.
    pub fn one(dim: usize) -> Self {
        Monomial(vec![BigInt::zero(); dim])
    }

    pub fn from_i64(exponents: &[i64]) -> Result<Self, Error> {
        Self::new(exponents.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|e| e.is_zero())
    }

    /// Indices of variables appearing with positive exponent (0-based).
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| !self.0[i].is_zero()).collect()
    }

    /// Product of two monomials (exponent sum).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Weighted degree `<ω, a>`.
    pub fn degree(&self, omega: &GradingVector) -> Result<BigInt, Error> {
        omega.dot(&self.0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, e) in self.0.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == &BigInt::from(1) {
                write!(f, "t{}", i + 1)?;
            } else {
                write!(f, "t{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Pure binomial `t^{a+} - t^{a-}` with disjoint supports.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    plus: Monomial,
    minus: Monomial,
}

impl Binomial {
    /// Builds a binomial from its two monomials, which must live in the
    /// same dimension and have disjoint supports.
    pub fn new(plus: Monomial, minus: Monomial) -> Result<Self, Error> {
        if plus.dim() != minus.dim() {
            return Err(Error::DimensionMismatch {
                expected: plus.dim(),
                got: minus.dim(),
            });
        }
        let disjoint = plus
            .exponents()
            .iter()
            .zip(minus.exponents())
            .all(|(a, b)| a.is_zero() || b.is_zero());
        if !disjoint {
            return Err(Error::Parse(
                "binomial parts must have disjoint support".into(),
            ));
        }
        Ok(Binomial { plus, minus })
    }

    /// Splits a nonzero integer vector into positive and negative parts:
    /// `a -> t^{a+} - t^{a-}`.
    pub fn from_vector(a: &[BigInt]) -> Result<Self, Error> {
        if a.iter().all(|x| x.is_zero()) {
            return Err(Error::ZeroVector);
        }
        let plus: Vec<BigInt> = a
            .iter()
            .map(|x| if x.is_positive() { x.clone() } else { BigInt::zero() })
            .collect();
        let minus: Vec<BigInt> = a
            .iter()
            .map(|x| if x.is_negative() { -x.clone() } else { BigInt::zero() })
            .collect();
        Ok(Binomial {
            plus: Monomial(plus),
            minus: Monomial(minus),
        })
    }

    pub fn from_vector_i64(a: &[i64]) -> Result<Self, Error> {
        let v: Vec<BigInt> = a.iter().map(|&x| BigInt::from(x)).collect();
        Self::from_vector(&v)
    }

    pub fn plus(&self) -> &Monomial {
        &self.plus
    }

    pub fn minus(&self) -> &Monomial {
        &self.minus
    }

    pub fn dim(&self) -> usize {
        self.plus.dim()
    }

    /// The exponent vector `ĝ = a+ - a-`.
    pub fn vector(&self) -> Vec<BigInt> {
        self.plus
            .exponents()
            .iter()
            .zip(self.minus.exponents())
            .map(|(a, b)| a - b)
            .collect()
    }

    /// The binomial with plus and minus parts swapped (`-g` up to sign).
    pub fn negated(&self) -> Binomial {
        Binomial {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    /// Sign-canonical representative: the first nonzero entry of the
    /// exponent vector is made positive, so `g` and `-g` compare equal
    /// after normalization.
    pub fn normalized(&self) -> Binomial {
        let v = self.vector();
        match v.iter().find(|x| !x.is_zero()) {
            Some(first) if first.is_negative() => self.negated(),
            _ => self.clone(),
        }
    }

    /// True iff both parts have the same weighted degree.
    pub fn is_homogeneous(&self, omega: &GradingVector) -> Result<bool, Error> {
        Ok(omega.dot(&self.vector())?.is_zero())
    }

    /// Weighted degree of the positive part (equals the negative part's
    /// degree when homogeneous).
    pub fn degree(&self, omega: &GradingVector) -> Result<BigInt, Error> {
        self.plus.degree(omega)
    }
}

impl fmt::Debug for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

/// The lattice `⟨ĝ_1, ..., ĝ_r⟩` spanned by the exponent vectors of the
/// generators.
pub fn lattice_of_binomials(gs: &[Binomial], ambient_dim: usize) -> Result<Lattice, Error> {
    if gs.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    for g in gs {
        if g.dim() != ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                got: g.dim(),
            });
        }
    }
    let rows: Vec<Vec<BigInt>> = gs.iter().map(|g| g.vector()).collect();
    Ok(Lattice::from_generators(&IntMatrix::from_rows(
        rows,
        ambient_dim,
    )))
}

/// Lattice-ideal membership for binomials: `t^a - t^b ∈ I(L)` iff
/// `a - b ∈ L`.
pub fn in_lattice_ideal(g: &Binomial, lattice: &Lattice) -> Result<bool, Error> {
    lattice.contains(&g.vector())
}
