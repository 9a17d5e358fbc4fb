//! Plain-text formats for matrices, lattices, binomial lists, polynomials,
//! and toric-set specifications.
//!
//! Matrix: first line `rows cols`, then one line of integers per row.
//! Binomials: one exponent vector `ĝ` per line (signed integers).
//! Polynomial: whitespace-separated terms `coeff:e1,e2,...,es`.
//! Toric set: first line `s n q`, then `s` lines of `n` nonnegative
//! integers.
//!
//! All integers are parsed with arbitrary precision.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::str::FromStr;

use crate::binomial::{Binomial, Monomial};
use crate::error::Error;
use crate::lattice::Lattice;
use crate::matrix::IntMatrix;
use crate::poly::Polynomial;
use crate::toric::ToricSetSpec;

fn parse_int(token: &str) -> Result<BigInt, Error> {
    BigInt::from_str(token).map_err(|_| Error::Parse(format!("invalid integer `{token}`")))
}

fn parse_count(token: &str) -> Result<usize, Error> {
    token
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("invalid count `{token}`")))
}

/// Parses whitespace- or comma-separated integers.
pub fn parse_int_list(text: &str) -> Result<Vec<BigInt>, Error> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(parse_int)
        .collect()
}

/// Parses the `rows cols` + row-lines matrix format.
pub fn parse_matrix(text: &str) -> Result<IntMatrix, Error> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix input".into()))?;
    let mut parts = header.split_whitespace();
    let rows = parse_count(
        parts
            .next()
            .ok_or_else(|| Error::Parse("missing row count".into()))?,
    )?;
    let cols = parse_count(
        parts
            .next()
            .ok_or_else(|| Error::Parse("missing column count".into()))?,
    )?;
    if parts.next().is_some() {
        return Err(Error::Parse("matrix header must be `rows cols`".into()));
    }
    let mut m = IntMatrix::zero(rows, cols);
    for i in 0..rows {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing matrix row {}", i + 1)))?;
        let entries = parse_int_list(line)?;
        if entries.len() != cols {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected {}",
                i + 1,
                entries.len(),
                cols
            )));
        }
        for (j, v) in entries.into_iter().enumerate() {
            m.set(i, j, v);
        }
    }
    if lines.next().is_some() {
        return Err(Error::Parse("trailing lines after matrix rows".into()));
    }
    Ok(m)
}

/// Parses a matrix file as a lattice (rows are generators).
pub fn parse_lattice(text: &str) -> Result<Lattice, Error> {
    Ok(Lattice::from_generators(&parse_matrix(text)?))
}

/// Parses one exponent vector per nonempty line; all lines must agree on
/// the dimension. Returns the binomials and their common dimension.
pub fn parse_binomials(text: &str) -> Result<(Vec<Binomial>, usize), Error> {
    let mut out = Vec::new();
    let mut dim = None;
    for line in text.lines() {
        if line.trim().is_empty() {
            continue;
        }
        let v = parse_int_list(line)?;
        match dim {
            None => dim = Some(v.len()),
            Some(d) if d != v.len() => {
                return Err(Error::Parse(format!(
                    "binomial vector has {} entries, expected {}",
                    v.len(),
                    d
                )));
            }
            _ => {}
        }
        out.push(Binomial::from_vector(&v)?);
    }
    let dim = dim.ok_or_else(|| Error::Parse("no binomials in input".into()))?;
    Ok((out, dim))
}

/// One exponent vector per line.
pub fn format_binomials(gs: &[Binomial]) -> String {
    let mut out = String::new();
    for g in gs {
        let parts: Vec<String> = g.vector().iter().map(|x| x.to_string()).collect();
        out.push_str(&parts.join(" "));
        out.push('\n');
    }
    out
}

/// Parses `coeff:e1,e2,...,es` terms separated by whitespace.
pub fn parse_polynomial(text: &str) -> Result<Polynomial, Error> {
    let mut terms = Vec::new();
    let mut dim = None;
    for token in text.split_whitespace() {
        let (coeff_str, exps_str) = token
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("term `{token}` is not coeff:exponents")))?;
        let coeff = BigRational::from_str(coeff_str)
            .map_err(|_| Error::Parse(format!("invalid coefficient `{coeff_str}`")))?;
        let exps: Vec<BigInt> = exps_str
            .split(',')
            .map(parse_int)
            .collect::<Result<_, _>>()?;
        match dim {
            None => dim = Some(exps.len()),
            Some(d) if d != exps.len() => {
                return Err(Error::Parse(format!(
                    "term `{token}` has {} exponents, expected {}",
                    exps.len(),
                    d
                )));
            }
            _ => {}
        }
        terms.push((Monomial::new(exps)?, coeff));
    }
    let dim = dim.ok_or_else(|| Error::Parse("no polynomial terms in input".into()))?;
    let mut poly = Polynomial::zero(dim);
    for (m, c) in terms {
        poly.add_term(m, c);
    }
    Ok(poly)
}

/// Parses the `s n q` + exponent-rows toric-set format.
pub fn parse_toric_spec(text: &str) -> Result<ToricSetSpec, Error> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty toric-set input".into()))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 3 {
        return Err(Error::Parse("toric-set header must be `s n q`".into()));
    }
    let s = parse_count(parts[0])?;
    let n = parse_count(parts[1])?;
    let q = parts[2]
        .parse::<u64>()
        .map_err(|_| Error::Parse(format!("invalid field size `{}`", parts[2])))?;
    let mut v = IntMatrix::zero(s, n);
    for i in 0..s {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing exponent row {}", i + 1)))?;
        let entries = parse_int_list(line)?;
        if entries.len() != n {
            return Err(Error::Parse(format!(
                "exponent row {} has {} entries, expected {}",
                i + 1,
                entries.len(),
                n
            )));
        }
        for (j, e) in entries.into_iter().enumerate() {
            if e < BigInt::zero() {
                return Err(Error::NegativeExponent);
            }
            v.set(i, j, e);
        }
    }
    if lines.next().is_some() {
        return Err(Error::Parse("trailing lines after exponent rows".into()));
    }
    ToricSetSpec::new(v, q)
}
