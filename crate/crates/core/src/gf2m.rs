//! Arithmetic in F_{2^m} for 1 <= m <= 16.
//!
//! Elements are packed polynomial representatives over F_2. Fields with
//! m <= 8 multiply through log/antilog tables; larger fields use a
//! carry-less multiply followed by reduction.

use std::fmt;
use std::ops::{Add, AddAssign};
use std::sync::Arc;

use crate::error::{Error, Result};

pub const MAX_DEGREE: u32 = 16;
const TABLE_MAX_DEGREE: u32 = 8;

/// An element of F_{2^m}, stored as its reduced bit-vector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn bits(self) -> u16 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

// addition in characteristic 2 is XOR
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for FieldElement {
    type Output = FieldElement;
    #[inline]
    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for FieldElement {
    #[inline]
    fn add_assign(&mut self, rhs: FieldElement) {
        self.0 ^= rhs.0;
    }
}

impl fmt::LowerHex for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

struct Tables {
    log: Vec<u16>,
    // doubled so that exp[log a + log b] needs no reduction
    exp: Vec<u16>,
}

struct Inner {
    m: u32,
    modulus: u32,
    tables: Option<Tables>,
}

/// A validated description of F_{2^m}: degree plus irreducible modulus.
///
/// Cloning is cheap; all clones share the same tables.
#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("m", &self.0.m)
            .field("modulus", &format_args!("{:#x}", self.0.modulus))
            .finish()
    }
}

/// Carry-less product of two polynomials over F_2.
#[inline]
pub(crate) fn clmul(a: u32, b: u32) -> u64 {
    let mut acc = 0u64;
    let a = a as u64;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a << shift;
        }
        b >>= 1;
        shift += 1;
    }
    acc
}

fn degree(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

/// Remainder of `a` modulo `p` over F_2. `p` must be nonzero.
pub(crate) fn poly_rem(mut a: u64, p: u64) -> u64 {
    let dp = degree(p);
    while a != 0 && degree(a) >= dp {
        a ^= p << (degree(a) - dp);
    }
    a
}

/// Irreducibility over F_2 by trial division with every polynomial of
/// degree at most deg/2.
pub fn is_irreducible(p: u32) -> bool {
    let d = degree(p as u64);
    if d < 1 {
        return false;
    }
    for q in 2u64..(1u64 << (d / 2 + 1)) {
        if poly_rem(p as u64, q) == 0 {
            return false;
        }
    }
    true
}

/// Smallest irreducible polynomial of degree `m` with constant term 1, read
/// as an integer.
pub fn default_modulus(m: u32) -> Result<u32> {
    if !(1..=MAX_DEGREE).contains(&m) {
        return Err(Error::DegreeOutOfRange(m));
    }
    ((1u32 << m) + 1..(1u32 << (m + 1)))
        .step_by(2)
        .find(|&p| is_irreducible(p))
        .ok_or(Error::ReducibleModulus(0))
}

impl FieldSpec {
    /// Validates `modulus` as an irreducible degree-`m` polynomial.
    pub fn new(m: u32, modulus: u32) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        let found = if modulus == 0 { 0 } else { degree(modulus as u64) as u32 };
        if modulus == 0 || found != m {
            return Err(Error::DegreeMismatch { modulus, expected: m, found });
        }
        if modulus & 1 == 0 {
            return Err(Error::ZeroConstantTerm(modulus));
        }
        if !is_irreducible(modulus) {
            return Err(Error::ReducibleModulus(modulus));
        }
        let mut inner = Inner { m, modulus, tables: None };
        if m <= TABLE_MAX_DEGREE {
            inner.tables = Some(build_tables(m, modulus));
        }
        Ok(FieldSpec(Arc::new(inner)))
    }

    /// The field of degree `m` under [`default_modulus`].
    pub fn with_default_modulus(m: u32) -> Result<Self> {
        Self::new(m, default_modulus(m)?)
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.0.m
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.0.modulus
    }

    /// Number of field elements, 2^m.
    #[inline]
    pub fn order(&self) -> u32 {
        1 << self.0.m
    }

    pub fn element(&self, bits: u32) -> Result<FieldElement> {
        if bits >= self.order() {
            return Err(Error::ElementOutOfRange { bits, m: self.0.m });
        }
        Ok(FieldElement(bits as u16))
    }

    /// Element from raw bits; the caller guarantees `bits < 2^m`.
    #[inline]
    pub(crate) fn element_unchecked(&self, bits: u32) -> FieldElement {
        debug_assert!(bits < self.order());
        FieldElement(bits as u16)
    }

    /// All elements in increasing bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order()).map(|b| FieldElement(b as u16))
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        a + b
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        match &self.0.tables {
            Some(t) => {
                let i = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
                FieldElement(t.exp[i])
            }
            None => {
                let p = clmul(a.0 as u32, b.0 as u32);
                FieldElement(poly_rem(p, self.0.modulus as u64) as u16)
            }
        }
    }

    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, a^(2^m - 2).
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(t) = &self.0.tables {
            let q1 = self.order() as usize - 1;
            let l = t.log[a.0 as usize] as usize;
            return Ok(FieldElement(t.exp[(q1 - l) % q1]));
        }
        Ok(self.pow(a, self.order() as u64 - 2))
    }
}

fn slow_mul(a: u32, b: u32, modulus: u32) -> u32 {
    poly_rem(clmul(a, b), modulus as u64) as u32
}

fn build_tables(m: u32, modulus: u32) -> Tables {
    let q = 1usize << m;
    let q1 = q - 1;
    // the modulus need not be primitive, so search for a generator
    let generator = (2..q as u32)
        .find(|&g| {
            let mut x = 1u32;
            for k in 1..=q1 {
                x = slow_mul(x, g, modulus);
                if x == 1 {
                    return k == q1;
                }
            }
            false
        })
        .unwrap_or(1);
    let mut log = vec![0u16; q];
    let mut exp = vec![0u16; 2 * q1.max(1)];
    let mut x = 1u32;
    for i in 0..q1 {
        exp[i] = x as u16;
        exp[i + q1] = x as u16;
        log[x as usize] = i as u16;
        x = slow_mul(x, generator, modulus);
    }
    Tables { log, exp }
}
