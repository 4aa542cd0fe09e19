//! Row reduction over F_{2^m}.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::gf2m::{FieldElement, FieldSpec};

/// A subspace of F_{2^m}^len held as its reduced row echelon basis.
///
/// The echelon form is unique, so two subspaces are equal iff their bases
/// are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    len: usize,
    rows: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, len: usize) -> Self {
        Subspace { field, len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn span<I>(field: FieldSpec, len: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<FieldElement>>,
    {
        let mut sub = Subspace::zero(field, len);
        for v in vectors {
            sub.insert(v)?;
        }
        Ok(sub)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<FieldElement>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// q^rank.
    pub fn cardinality(&self) -> BigUint {
        BigUint::from(1u32) << (self.rank() * self.field.m() as usize)
    }

    fn reduce(&self, v: &mut [FieldElement]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if !c.is_zero() {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x += self.field.mul(c, r);
                }
            }
        }
    }

    /// Adds `v` to the spanning set. Returns true if the rank grew.
    pub fn insert(&mut self, mut v: Vec<FieldElement>) -> Result<bool> {
        if v.len() != self.len {
            return Err(Error::LengthMismatch(v.len(), self.len));
        }
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return Ok(false);
        };
        let inv = self.field.inv(v[p])?;
        for x in v.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[p];
            if !c.is_zero() {
                for (x, &r) in row.iter_mut().zip(&v) {
                    *x += self.field.mul(c, r);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        Ok(true)
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        if v.len() != self.len {
            return false;
        }
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(|c| c.is_zero())
    }

    /// Every vector of the subspace. Fails if there are more than `cap`.
    pub fn elements(&self, cap: u64) -> Result<Vec<Vec<FieldElement>>> {
        let size = self.cardinality();
        if size > BigUint::from(cap) {
            return Err(Error::CapExceeded { what: "subspace elements", needed: size.to_string(), cap });
        }
        let mut out = vec![vec![FieldElement::ZERO; self.len]];
        for row in &self.rows {
            let mut next = Vec::with_capacity(out.len() * self.field.order() as usize);
            for c in self.field.elements() {
                for w in &out {
                    next.push(w.iter().zip(row).map(|(&x, &r)| x + self.field.mul(c, r)).collect());
                }
            }
            out = next;
        }
        Ok(out)
    }
}
