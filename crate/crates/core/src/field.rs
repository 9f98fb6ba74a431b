//! Small finite fields `F_q` with precomputed operation tables.
//!
//! Elements are integers in `0..q`. For `q = p^k` with `k > 1` an element
//! encodes the polynomial `c_0 + c_1 x + … + c_{k-1} x^{k-1}` as the base-`p`
//! number `c_0 + c_1 p + …`, reduced modulo a fixed irreducible polynomial.

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FiniteField {
    q: usize,
    p: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
}

/// Monic irreducible polynomials for the supported prime powers, lowest
/// coefficient first with the leading 1 omitted.
fn irreducible(q: usize) -> Option<(usize, &'static [usize])> {
    match q {
        4 => Some((2, &[1, 1])),    // x^2 + x + 1
        8 => Some((2, &[1, 1, 0])), // x^3 + x + 1
        9 => Some((3, &[1, 0])),    // x^2 + 1
        _ => None,
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

impl FiniteField {
    pub fn new(q: usize) -> Result<Self> {
        if q > 251 {
            return Err(Error::usage(format!(
                "field order {q} not supported (max 251)"
            )));
        }
        if is_prime(q) {
            return Ok(Self::from_ops(q, q, |a, b| (a + b) % q, |a, b| (a * b) % q));
        }
        let (p, modulus) = irreducible(q).ok_or_else(|| {
            Error::usage(format!(
                "F_{q}: only primes and the prime powers 4, 8, 9 are supported"
            ))
        })?;
        let k = modulus.len();
        let digits = |mut a: usize| {
            let mut d = vec![0usize; k];
            for slot in d.iter_mut() {
                *slot = a % p;
                a /= p;
            }
            d
        };
        let encode = |d: &[usize]| d.iter().rev().fold(0, |acc, &c| acc * p + c);
        let add = |a: usize, b: usize| {
            let (x, y) = (digits(a), digits(b));
            let s: Vec<usize> = x.iter().zip(&y).map(|(u, v)| (u + v) % p).collect();
            encode(&s)
        };
        let mul = |a: usize, b: usize| {
            let (x, y) = (digits(a), digits(b));
            let mut prod = vec![0usize; 2 * k - 1];
            for (i, u) in x.iter().enumerate() {
                for (j, v) in y.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + u * v) % p;
                }
            }
            // x^k = -(modulus)
            for deg in (k..prod.len()).rev() {
                let c = prod[deg];
                if c == 0 {
                    continue;
                }
                prod[deg] = 0;
                for (i, m) in modulus.iter().enumerate() {
                    let slot = &mut prod[deg - k + i];
                    *slot = (*slot + (p - (c * m) % p)) % p;
                }
            }
            encode(&prod[..k])
        };
        Ok(Self::from_ops(q, p, add, mul))
    }

    fn from_ops(
        q: usize,
        p: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let mut add_t = vec![0u8; q * q];
        let mut mul_t = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                add_t[a * q + b] = add(a, b) as u8;
                mul_t[a * q + b] = mul(a, b) as u8;
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add_t[a * q + b] == 0).unwrap() as u8)
            .collect();
        FiniteField {
            q,
            p,
            add: add_t,
            mul: mul_t,
            neg,
        }
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }
}
