//! The Gray map φ(a + bu) = (b, a + b) from (R^N, Lee) to (F_{2^m}^{2N}, Hamming).
//!
//! Images are laid out in blocks: φ(v) = (b_0..b_{N-1}, a_0+b_0..a_{N-1}+b_{N-1}).
//! A cyclic shift of v rotates both blocks at once, so images of cyclic codes
//! are invariant under [`block_rotate`]. [`interleave`] reorders a block word
//! to (b_0, a_0+b_0, b_1, a_1+b_1, ...), where the same symmetry becomes a
//! shift by two positions.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gf2m::{FieldElement, FieldSpec};
use crate::linalg::Subspace;
use crate::oracle::{self, CodewordSet};
use crate::ring::RingVector;
use crate::codes::CodeSpec;

pub fn gray_word(v: &RingVector) -> Vec<FieldElement> {
    let e = v.entries();
    e.iter().map(|x| x.b).chain(e.iter().map(|x| x.a + x.b)).collect()
}

/// Simultaneous rotation by one of both length-N halves.
pub fn block_rotate(w: &[FieldElement]) -> Vec<FieldElement> {
    let n = w.len() / 2;
    let mut lo = w[..n].to_vec();
    let mut hi = w[n..].to_vec();
    if n > 0 {
        lo.rotate_right(1);
        hi.rotate_right(1);
    }
    lo.extend(hi);
    lo
}

/// Position i of the interleaved word holds block coordinate `perm[i]`.
pub fn interleave_permutation(n: usize) -> Vec<usize> {
    (0..n).flat_map(|i| [i, n + i]).collect()
}

pub fn interleave(w: &[FieldElement]) -> Vec<FieldElement> {
    interleave_permutation(w.len() / 2).into_iter().map(|p| w[p]).collect()
}

/// Cyclic shift by two positions.
pub fn shift_by_two(w: &[FieldElement]) -> Vec<FieldElement> {
    let mut out = w.to_vec();
    if out.len() >= 2 {
        out.rotate_right(2);
    }
    out
}

/// A set of words over F_{2^m}, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldWordSet {
    field: FieldSpec,
    len: usize,
    words: Vec<Vec<FieldElement>>,
}

impl FieldWordSet {
    pub fn new(field: FieldSpec, len: usize, mut words: Vec<Vec<FieldElement>>) -> Result<Self> {
        if let Some(w) = words.iter().find(|w| w.len() != len) {
            return Err(Error::LengthMismatch(w.len(), len));
        }
        words.sort_unstable();
        words.dedup();
        Ok(FieldWordSet { field, len, words })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Word length.
    pub fn word_len(&self) -> usize {
        self.len
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Vec<FieldElement>] {
        &self.words
    }

    pub fn contains(&self, w: &[FieldElement]) -> bool {
        self.words.binary_search_by(|x| x.as_slice().cmp(w)).is_ok()
    }

    pub fn span(&self) -> Subspace {
        Subspace::span(self.field.clone(), self.len, self.words.iter().cloned()).expect("lengths checked")
    }

    /// True iff the set equals the span of its words.
    pub fn is_linear(&self) -> bool {
        num_bigint::BigUint::from(self.len()) == self.span().cardinality()
    }

    pub fn map(&self, f: impl Fn(&[FieldElement]) -> Vec<FieldElement>) -> Result<FieldWordSet> {
        FieldWordSet::new(self.field.clone(), self.len, self.words.iter().map(|w| f(w)).collect())
    }

    /// Invariant under rotating both halves together.
    pub fn is_block_quasi_cyclic(&self) -> bool {
        self.len.is_multiple_of(2) && self.words.iter().all(|w| self.contains(&block_rotate(w)))
    }

    /// Invariant under the shift by two positions.
    pub fn is_two_quasi_cyclic(&self) -> bool {
        self.len.is_multiple_of(2) && self.words.iter().all(|w| self.contains(&shift_by_two(w)))
    }

    /// Linear, self-orthogonal and |C|^2 = q^len.
    pub fn is_self_dual(&self) -> bool {
        if !self.is_linear() {
            return false;
        }
        let basis = self.span();
        let orthogonal = basis.rows().iter().enumerate().all(|(i, x)| {
            basis.rows()[i..].iter().all(|y| {
                x.iter().zip(y).fold(FieldElement::ZERO, |acc, (&p, &q)| acc + self.field.mul(p, q)).is_zero()
            })
        });
        orthogonal && 2 * basis.rank() == self.len
    }
}

pub fn gray_image(set: &CodewordSet) -> FieldWordSet {
    let words = set.iter().map(|v| gray_word(&v)).collect();
    FieldWordSet::new(set.field().clone(), 2 * set.n(), words).expect("uniform length")
}

/// Echelon basis of φ(C), computed from a basis of C without expanding it.
pub fn image_generators(c: &CodeSpec) -> Subspace {
    let field = c.field().clone();
    let rows = oracle::code_subspace(c)
        .rows()
        .iter()
        .map(|r| gray_word(&oracle::from_field_coords(&field, r)))
        .collect::<Vec<_>>();
    Subspace::span(field, 2 * c.n(), rows).expect("uniform length")
}

/// Number of words of each weight.
pub type WeightDistribution = BTreeMap<usize, u64>;

pub fn lee_distribution(set: &CodewordSet) -> WeightDistribution {
    let mut d = WeightDistribution::new();
    for v in set.iter() {
        *d.entry(v.lee_weight()).or_default() += 1;
    }
    d
}

pub fn hamming_distribution(set: &FieldWordSet) -> WeightDistribution {
    let mut d = WeightDistribution::new();
    for w in set.words() {
        *d.entry(w.iter().filter(|x| !x.is_zero()).count()).or_default() += 1;
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::enumerate_selfdual;
    use crate::oracle::expand;
    use crate::ring::RingElement;
    use proptest::prelude::*;

    fn f(m: u32) -> FieldSpec {
        FieldSpec::with_default_modulus(m).unwrap()
    }

    fn vec_of(field: &FieldSpec, bits: &[(u32, u32)]) -> RingVector {
        let e = bits
            .iter()
            .map(|&(a, b)| RingElement::new(field.element(a).unwrap(), field.element(b).unwrap()))
            .collect();
        RingVector::new(field.clone(), e)
    }

    #[test]
    fn gray_word_layout() {
        let field = f(1);
        let v = vec_of(&field, &[(1, 0), (0, 1), (1, 1)]);
        let bits: Vec<u16> = gray_word(&v).iter().map(|x| x.bits()).collect();
        assert_eq!(bits, [0, 1, 1, 1, 1, 0]);
        let inter: Vec<u16> = interleave(&gray_word(&v)).iter().map(|x| x.bits()).collect();
        assert_eq!(inter, [0, 1, 1, 1, 1, 0]);
        assert_eq!(interleave_permutation(3), [0, 3, 1, 4, 2, 5]);
    }

    proptest! {
        #[test]
        fn lee_weight_is_hamming_weight_of_image(bits in prop::collection::vec((0u32..16, 0u32..16), 0..12)) {
            let field = f(4);
            let v = vec_of(&field, &bits);
            let img = gray_word(&v);
            prop_assert_eq!(v.lee_weight(), img.iter().filter(|x| !x.is_zero()).count());
        }

        #[test]
        fn shift_commutes_with_block_rotation(bits in prop::collection::vec((0u32..4, 0u32..4), 1..10)) {
            let field = f(2);
            let v = vec_of(&field, &bits);
            let rotated = block_rotate(&gray_word(&v));
            prop_assert_eq!(gray_word(&v.cyclic_shift()), rotated.clone());
            prop_assert_eq!(interleave(&rotated), shift_by_two(&interleave(&gray_word(&v))));
        }
    }

    #[test]
    fn selfdual_images_s2() {
        for m in 1..=2 {
            for c in enumerate_selfdual(2, &f(m), None).unwrap() {
                let set = expand(&c, 1 << 16).unwrap();
                let img = gray_image(&set);
                assert!(img.is_self_dual());
                assert!(img.is_block_quasi_cyclic());
                assert!(img.map(interleave).unwrap().is_two_quasi_cyclic());
                assert_eq!(lee_distribution(&set), hamming_distribution(&img));
                assert_eq!(image_generators(&c), img.span());
            }
        }
    }

    #[test]
    fn non_linear_set_detected() {
        let field = f(1);
        let one = vec![FieldElement::ONE, FieldElement::ZERO];
        let set = FieldWordSet::new(field, 2, vec![one]).unwrap();
        assert!(!set.is_linear());
        assert!(!set.is_self_dual());
    }
}
