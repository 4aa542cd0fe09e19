//! The chain ring R = F_{2^m} + uF_{2^m} with u^2 = 0, and vectors over it.

use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};
use crate::gf2m::{FieldElement, FieldSpec};

/// The element a + bu.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingElement {
    pub a: FieldElement,
    pub b: FieldElement,
}

impl RingElement {
    pub const ZERO: RingElement = RingElement { a: FieldElement::ZERO, b: FieldElement::ZERO };
    pub const ONE: RingElement = RingElement { a: FieldElement::ONE, b: FieldElement::ZERO };
    pub const U: RingElement = RingElement { a: FieldElement::ZERO, b: FieldElement::ONE };

    pub fn new(a: FieldElement, b: FieldElement) -> Self {
        RingElement { a, b }
    }

    pub fn is_zero(self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_unit(self) -> bool {
        !self.a.is_zero()
    }

    /// (a1 + b1 u)(a2 + b2 u) = a1 a2 + (a1 b2 + a2 b1) u.
    pub fn mul(self, other: RingElement, field: &FieldSpec) -> RingElement {
        RingElement {
            a: field.mul(self.a, other.a),
            b: field.mul(self.a, other.b) + field.mul(other.a, self.b),
        }
    }

    /// Multiplication by u: (a + bu)u = au.
    pub fn times_u(self) -> RingElement {
        RingElement { a: FieldElement::ZERO, b: self.a }
    }

    /// Hamming weight of the Gray pair (b, a + b).
    pub fn lee_weight(self) -> usize {
        usize::from(!self.b.is_zero()) + usize::from(!(self.a + self.b).is_zero())
    }
}

impl Add for RingElement {
    type Output = RingElement;
    fn add(self, other: RingElement) -> RingElement {
        RingElement { a: self.a + other.a, b: self.b + other.b }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}:{:x}", self.a, self.b)
    }
}

/// A vector in R^N. Length is not restricted to powers of two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingVector {
    field: FieldSpec,
    entries: Vec<RingElement>,
}

impl RingVector {
    pub fn new(field: FieldSpec, entries: Vec<RingElement>) -> Self {
        RingVector { field, entries }
    }

    pub fn zero(field: FieldSpec, len: usize) -> Self {
        RingVector { field, entries: vec![RingElement::ZERO; len] }
    }

    /// Builds a vector from its unit parts and u-parts.
    pub fn from_parts(field: FieldSpec, a: &[FieldElement], b: &[FieldElement]) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch(a.len(), b.len()));
        }
        let entries = a.iter().zip(b).map(|(&a, &b)| RingElement { a, b }).collect();
        Ok(RingVector { field, entries })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[RingElement] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<RingElement> {
        self.entries
    }

    fn check(&self, other: &RingVector) -> Result<()> {
        if self.field != other.field {
            return Err(Error::SpecMismatch);
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(())
    }

    /// Euclidean inner product sum_i x_i y_i.
    pub fn inner_product(&self, other: &RingVector) -> Result<RingElement> {
        self.check(other)?;
        let f = &self.field;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(RingElement::ZERO, |acc, (&x, &y)| acc + x.mul(y, f)))
    }

    pub fn add(&self, other: &RingVector) -> Result<RingVector> {
        self.check(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(&x, &y)| x + y).collect();
        Ok(RingVector { field: self.field.clone(), entries })
    }

    pub fn scale(&self, r: RingElement) -> RingVector {
        let entries = self.entries.iter().map(|&x| r.mul(x, &self.field)).collect();
        RingVector { field: self.field.clone(), entries }
    }

    /// (v_0, ..., v_{N-1}) -> (v_{N-1}, v_0, ..., v_{N-2}).
    pub fn cyclic_shift(&self) -> RingVector {
        let mut entries = self.entries.clone();
        if !entries.is_empty() {
            entries.rotate_right(1);
        }
        RingVector { field: self.field.clone(), entries }
    }

    pub fn lee_weight(&self) -> usize {
        self.entries.iter().map(|x| x.lee_weight()).sum()
    }
}

impl fmt::Display for RingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}
