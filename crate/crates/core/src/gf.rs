//! Small finite fields `F_q`, `q = p^m ≤ 2^16`, with exp/log tables over a
//! primitive element.
//!
//! Elements are dense codes `0..q`: the zero element is `0`, and a nonzero
//! element with polynomial coordinates `c_0 + c_1 x + ...` over `F_p` has
//! code `Σ c_i p^i` (for prime fields the code is the residue itself).
//! Multiplication, inversion and powers go through the tables; addition
//! works digitwise base `p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// Field element code; `0` is the zero element.
pub type Fq = u32;

/// Irreducible monic polynomials (ascending coefficients, degree = len-1)
/// for the extension fields in everyday desk range; anything else falls
/// back to a deterministic search.
const IRREDUCIBLE_TABLE: &[(u64, u32, &[u64])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 2, &[2, 12, 1]),
];

/// Arithmetic tables for one finite field.
#[derive(Clone)]
pub struct FieldSpec {
    q: u64,
    p: u64,
    m: u32,
    /// `exp[k]` = code of `γ^k`, `k = 0..q-1`
    exp: Vec<Fq>,
    /// `log[code]` for nonzero codes; `log[0]` unused
    log: Vec<u32>,
    /// modulus polynomial (empty for prime fields)
    modulus: Vec<u64>,
}

fn trial_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// ---- polynomial arithmetic over F_p (coefficients ascending) ----

fn poly_trim(f: &mut Vec<u64>) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    poly_trim(&mut out);
    out
}

// remainder of `a` modulo monic `f`
fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let df = f.len() - 1;
    while r.len() > df {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - df;
        for (i, &fi) in f.iter().enumerate() {
            let idx = i + shift;
            r[idx] = (r[idx] + (p - lead % p) * fi) % p;
        }
        poly_trim(&mut r);
    }
    r
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    if m == 0 {
        return false;
    }
    // trial division by all monic polynomials of degree 1..=m/2
    for d in 1..=m / 2 {
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                g.push(c % p);
                c /= p;
            }
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn find_irreducible(p: u64, m: u32) -> Vec<u64> {
    if let Some((_, _, coeffs)) = IRREDUCIBLE_TABLE
        .iter()
        .find(|&&(tp, tm, _)| tp == p && tm == m)
    {
        let f = coeffs.to_vec();
        if is_irreducible(&f, p) {
            return f;
        }
    }
    // lexicographically smallest monic irreducible of degree m
    let count = p.pow(m);
    for code in 0..count {
        let mut f = Vec::with_capacity(m as usize + 1);
        let mut c = code;
        for _ in 0..m {
            f.push(c % p);
            c /= p;
        }
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}

fn code_to_poly(code: u64, p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut c = code;
    while c > 0 {
        out.push(c % p);
        c /= p;
    }
    out
}

fn poly_to_code(f: &[u64], p: u64) -> u64 {
    f.iter().rev().fold(0u64, |acc, &c| acc * p + c)
}

impl FieldSpec {
    /// Builds the tables for `F_q`; `q` must be a prime power `≤ 2^16`.
    pub fn new(q: u64) -> Result<FieldSpec, Error> {
        if q < 2 {
            return Err(Error::NotPrimePower(q));
        }
        if q > MAX_FIELD_SIZE {
            return Err(Error::FieldTooLarge {
                q,
                bound: MAX_FIELD_SIZE,
            });
        }
        let primes = trial_prime_factors(q);
        if primes.len() != 1 {
            return Err(Error::NotPrimePower(q));
        }
        let p = primes[0];
        let mut m = 0u32;
        let mut acc = 1u64;
        while acc < q {
            acc *= p;
            m += 1;
        }
        if acc != q {
            return Err(Error::NotPrimePower(q));
        }

        let modulus = if m > 1 { find_irreducible(p, m) } else { Vec::new() };

        // raw product of codes, usable before the tables exist
        let raw_mul = |a: u64, b: u64| -> u64 {
            if m == 1 {
                a * b % p
            } else {
                let prod = poly_mul(&code_to_poly(a, p), &code_to_poly(b, p), p);
                poly_to_code(&poly_rem(&prod, &modulus, p), p)
            }
        };
        let raw_pow = |mut base: u64, mut e: u64| -> u64 {
            let mut acc = 1u64;
            while e > 0 {
                if e & 1 == 1 {
                    acc = raw_mul(acc, base);
                }
                base = raw_mul(base, base);
                e >>= 1;
            }
            acc
        };

        // primitive element: order q-1, checked against the prime factors
        // of q-1; try the class of x first for extensions
        let order = q - 1;
        let order_primes = trial_prime_factors(order);
        let mut first_candidates: Vec<u64> = Vec::new();
        if m > 1 {
            first_candidates.push(p); // the class of x
        }
        let candidates = first_candidates
            .into_iter()
            .chain(2..q)
            .chain(std::iter::once(1));
        let mut generator = None;
        for g in candidates {
            if g == 0 {
                continue;
            }
            let primitive = order == 1
                || (raw_pow(g, order) == 1
                    && order_primes.iter().all(|&r| raw_pow(g, order / r) != 1));
            if primitive {
                generator = Some(g);
                break;
            }
        }
        let generator = generator.expect("F_q* is cyclic");

        let mut exp = vec![0 as Fq; order as usize];
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u64;
        for (k, slot) in exp.iter_mut().enumerate() {
            *slot = cur as Fq;
            log[cur as usize] = k as u32;
            cur = raw_mul(cur, generator);
        }
        debug_assert_eq!(cur, 1, "generator order must divide q-1 exactly");

        Ok(FieldSpec {
            q,
            p,
            m,
            exp,
            log,
            modulus,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.m
    }

    /// Modulus polynomial of the extension (ascending coefficients); empty
    /// for prime fields.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> Fq {
        0
    }

    pub fn one(&self) -> Fq {
        1
    }

    /// All element codes, zero first.
    pub fn elements(&self) -> impl Iterator<Item = Fq> + '_ {
        0..self.q as Fq
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fq> + '_ {
        1..self.q as Fq
    }

    /// Discrete log of a nonzero element.
    pub fn log(&self, a: Fq) -> Option<u32> {
        if a == 0 || u64::from(a) >= self.q {
            None
        } else {
            Some(self.log[a as usize])
        }
    }

    /// `γ^k` for `k` modulo `q-1`.
    pub fn exp(&self, k: u64) -> Fq {
        self.exp[(k % (self.q - 1)) as usize]
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        if self.m == 1 {
            ((u64::from(a) + u64::from(b)) % self.p) as Fq
        } else {
            let mut out = 0u64;
            let mut pw = 1u64;
            let (mut x, mut y) = (u64::from(a), u64::from(b));
            while x > 0 || y > 0 {
                out += (x % self.p + y % self.p) % self.p * pw;
                x /= self.p;
                y /= self.p;
                pw *= self.p;
            }
            out as Fq
        }
    }

    pub fn neg(&self, a: Fq) -> Fq {
        let mut out = 0u64;
        let mut pw = 1u64;
        let mut x = u64::from(a);
        while x > 0 {
            out += (self.p - x % self.p) % self.p * pw;
            x /= self.p;
            pw *= self.p;
        }
        out as Fq
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a == 0 || b == 0 {
            return 0;
        }
        let k = u64::from(self.log[a as usize]) + u64::from(self.log[b as usize]);
        self.exp(k)
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: Fq) -> Option<Fq> {
        if a == 0 {
            return None;
        }
        let k = (self.q - 1 - u64::from(self.log[a as usize])) % (self.q - 1);
        Some(self.exp(k))
    }

    pub fn div(&self, a: Fq, b: Fq) -> Option<Fq> {
        self.inv(b).map(|ib| self.mul(a, ib))
    }

    pub fn pow(&self, a: Fq, e: u64) -> Fq {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let k = u64::from(self.log[a as usize]) % (self.q - 1);
        self.exp(k * (e % (self.q - 1)))
    }

    /// Power with an arbitrary-precision exponent, reduced modulo `q-1`
    /// for nonzero bases. Negative exponents invert the base.
    pub fn pow_bigint(&self, a: Fq, e: &BigInt) -> Option<Fq> {
        if a == 0 {
            return if e.is_zero() {
                Some(1)
            } else if e.is_positive() {
                Some(0)
            } else {
                None
            };
        }
        let order = BigInt::from(self.q - 1);
        let r = e.mod_floor(&order).to_u64().expect("reduced exponent fits");
        Some(self.pow(a, r))
    }
}

impl std::fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FieldSpec(q = {} = {}^{})", self.q, self.p, self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_tables() {
        let f7 = FieldSpec::new(7).unwrap();
        assert_eq!(f7.characteristic(), 7);
        assert_eq!(f7.extension_degree(), 1);
        assert_eq!(f7.add(3, 5), 1);
        assert_eq!(f7.mul(3, 5), 1);
        assert_eq!(f7.mul(3, f7.inv(3).unwrap()), 1);
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(matches!(FieldSpec::new(6), Err(Error::NotPrimePower(6))));
        assert!(matches!(FieldSpec::new(12), Err(Error::NotPrimePower(12))));
        assert!(matches!(FieldSpec::new(1), Err(Error::NotPrimePower(1))));
        assert!(matches!(
            FieldSpec::new(1 << 17),
            Err(Error::FieldTooLarge { .. })
        ));
    }

    #[test]
    fn extension_fields_build() {
        for q in [4u64, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128] {
            let f = FieldSpec::new(q).unwrap();
            assert_eq!(f.q(), q);
            // roundtrip on every nonzero element
            for a in f.nonzero_elements() {
                assert_eq!(f.exp(u64::from(f.log(a).unwrap())), a);
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small_q() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64] {
            let f = FieldSpec::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let f9 = FieldSpec::new(9).unwrap();
        for a in f9.nonzero_elements() {
            let mut acc = 1;
            for e in 0..20u64 {
                assert_eq!(f9.pow(a, e), acc);
                acc = f9.mul(acc, a);
            }
        }
        // Fermat: a^(q-1) = 1
        for a in f9.nonzero_elements() {
            assert_eq!(f9.pow(a, 8), 1);
        }
    }

    #[test]
    fn bigint_exponents_reduce() {
        let f5 = FieldSpec::new(5).unwrap();
        let big = BigInt::from(10u64).pow(30);
        for a in f5.nonzero_elements() {
            // 10^30 ≡ 0 mod 4
            assert_eq!(f5.pow_bigint(a, &big).unwrap(), 1);
        }
        assert_eq!(f5.pow_bigint(2, &BigInt::from(-1)).unwrap(), 3);
        assert_eq!(f5.pow_bigint(0, &BigInt::from(3)).unwrap(), 0);
        assert!(f5.pow_bigint(0, &BigInt::from(-3)).is_none());
    }
}
