//! Arithmetic in GF(p^k).
//!
//! Elements are integer codes `c_0 + c_1 p + ... + c_{k-1} p^{k-1}` standing
//! for the residue class of `c_0 + c_1 x + ... + c_{k-1} x^{k-1}` modulo the
//! field's modulus. Code 0 is zero and code 1 is one.

use std::fmt;

use crate::arith::{is_prime, prime_divisors};
use crate::error::GroupError;

/// Fields up to this size get a full addition table.
const ADD_TABLE_LIMIT: u32 = 256;

pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, coefficients low to high (length k + 1).
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for a primitive element g, stored twice over.
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Option<Vec<u32>>,
    neg: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}) mod {:?}", self.q, self.modulus)
    }
}

/// Builds GF(p^k) using the smallest monic irreducible modulus, ordering
/// candidates by their code (the non-leading coefficients read as a base-p
/// number with the constant term least significant).
pub fn field_make(p: u64, k: u32) -> Result<FiniteField, GroupError> {
    check_size(p, k)?;
    let p32 = p as u32;
    let q = p32.pow(k);
    for code in 0..q {
        let mut modulus = digits(code, p32, k);
        modulus.push(1);
        if is_irreducible(&modulus, p32) {
            return FiniteField::build(p32, modulus);
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

fn check_size(p: u64, k: u32) -> Result<(), GroupError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    if k == 0 {
        return Err(GroupError::InvalidParameter(
            "extension degree must be at least 1".into(),
        ));
    }
    match p.checked_pow(k) {
        Some(q) if q <= 1 << 16 => Ok(()),
        _ => Err(GroupError::SizeOverflow { p, k }),
    }
}

fn digits(mut code: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = code % p;
            code /= p;
            d
        })
        .collect()
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut b = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Remainder of `a` modulo monic-or-not `b` over GF(p); both low to high.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while r.len() > db {
        let top = *r.last().unwrap();
        if top != 0 {
            let f = top * lead_inv % p;
            let off = r.len() - 1 - db;
            for (i, &c) in b.iter().enumerate() {
                r[off + i] = (r[off + i] + p - f * c % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Trial division by every monic polynomial of degree up to half.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() as u32 - 1;
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d) {
            let mut divisor = digits(code, p, d);
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    deg >= 1
}

impl FiniteField {
    /// GF(p^k) with an explicit monic modulus (coefficients low to high).
    pub fn with_modulus(p: u64, modulus: &[u32]) -> Result<Self, GroupError> {
        let k = modulus.len().saturating_sub(1) as u32;
        check_size(p, k)?;
        let p32 = p as u32;
        if modulus.last() != Some(&1) || modulus.iter().any(|&c| c >= p32) {
            return Err(GroupError::InvalidParameter(format!(
                "modulus {modulus:?} is not a monic polynomial over GF({p})"
            )));
        }
        if !is_irreducible(modulus, p32) {
            return Err(GroupError::ReducibleModulus { p });
        }
        Self::build(p32, modulus.to_vec())
    }

    fn build(p: u32, modulus: Vec<u32>) -> Result<Self, GroupError> {
        let k = modulus.len() as u32 - 1;
        let q = p.pow(k);
        let slow_mul = |a: u32, b: u32| -> u32 {
            let (da, db) = (digits(a, p, k), digits(b, p, k));
            let mut prod = vec![0u32; (2 * k - 1) as usize];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            undigits(&poly_rem(&prod, &modulus, p), p)
        };
        let slow_pow = |a: u32, mut e: u32| -> u32 {
            let (mut acc, mut b) = (1u32, a);
            while e > 0 {
                if e & 1 == 1 {
                    acc = slow_mul(acc, b);
                }
                b = slow_mul(b, b);
                e >>= 1;
            }
            acc
        };

        let group_order = q - 1;
        let cofactors: Vec<u32> = prime_divisors(group_order as u64)
            .into_iter()
            .map(|r| group_order / r as u32)
            .collect();
        let generator = (1..q)
            .find(|&g| g != 0 && cofactors.iter().all(|&c| slow_pow(g, c) != 1))
            .expect("the multiplicative group of a finite field is cyclic");

        let mut exp = vec![0u32; 2 * group_order as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..group_order {
            exp[i as usize] = x;
            exp[(i + group_order) as usize] = x;
            log[x as usize] = i;
            x = slow_mul(x, generator);
        }

        let add_digits = |a: u32, b: u32| -> u32 {
            let (da, db) = (digits(a, p, k), digits(b, p, k));
            let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            undigits(&sum, p)
        };
        let neg: Vec<u32> = (0..q)
            .map(|a| {
                undigits(
                    &digits(a, p, k)
                        .iter()
                        .map(|&d| (p - d) % p)
                        .collect::<Vec<_>>(),
                    p,
                )
            })
            .collect();
        let add_table = (q <= ADD_TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = add_digits(a, b);
                }
            }
            t
        });

        Ok(Self {
            p,
            k,
            q,
            modulus,
            exp,
            log,
            add_table,
            neg,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Number of elements, `q = p^k`.
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        self.exp[1 % self.exp.len().max(1)]
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if let Some(t) = &self.add_table {
            return t[(a * self.q + b) as usize];
        }
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b, mut place, mut out) = (a, b, 1u32, 0u32);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    /// `x -> x^p`.
    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.p as u64)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: u32) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let n = (self.q - 1) as u64;
        Some(n / crate::arith::gcd(self.log[a as usize] as u64, n))
    }
}
