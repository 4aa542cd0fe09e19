//! Brute-force checks that rely only on the generators of a code.
//!
//! A cyclic code is rebuilt as the F_{2^m}-span of its generators, their
//! cyclic shifts and u-multiples. Sizes come from the rank of that span,
//! never from the family tables, so the tables can be checked against it.

use std::collections::HashSet;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::codes::{self, CodeSpec};
use crate::error::{Error, Result};
use crate::gf2m::{FieldElement, FieldSpec};
use crate::linalg::Subspace;
use crate::ring::{RingElement, RingVector};

/// Expansion limit when nothing else is configured.
pub const DEFAULT_CAP: u64 = 1 << 24;

/// Environment variable overriding [`DEFAULT_CAP`].
pub const CAP_ENV: &str = "SELFDUAL_CAP";

/// [`DEFAULT_CAP`] unless the environment variable holds a number.
pub fn configured_cap() -> u64 {
    std::env::var(CAP_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_CAP)
}

/// v in R^N as (a_0..a_{N-1}, b_0..b_{N-1}) over F_{2^m}.
pub fn to_field_coords(v: &RingVector) -> Vec<FieldElement> {
    let e = v.entries();
    e.iter().map(|x| x.a).chain(e.iter().map(|x| x.b)).collect()
}

pub fn from_field_coords(field: &FieldSpec, coords: &[FieldElement]) -> RingVector {
    let n = coords.len() / 2;
    RingVector::from_parts(field.clone(), &coords[..n], &coords[n..]).expect("even length")
}

/// Generators of the code together with all their cyclic shifts.
pub fn shift_basis(c: &CodeSpec) -> Vec<RingVector> {
    let mut out = Vec::new();
    for g in c.generators() {
        let mut v = g;
        for _ in 0..c.n() {
            let next = v.cyclic_shift();
            out.push(v);
            v = next;
        }
    }
    out
}

/// The code as an F_{2^m}-subspace of F_{2^m}^{2N}.
pub fn code_subspace(c: &CodeSpec) -> Subspace {
    let vectors = shift_basis(c)
        .into_iter()
        .flat_map(|v| {
            let uv = v.scale(RingElement::U);
            [to_field_coords(&v), to_field_coords(&uv)]
        });
    Subspace::span(c.field().clone(), 2 * c.n(), vectors).expect("consistent lengths")
}

/// A set of codewords, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodewordSet {
    field: FieldSpec,
    n: usize,
    words: Vec<Vec<FieldElement>>,
}

impl CodewordSet {
    pub fn from_words(field: FieldSpec, n: usize, mut words: Vec<Vec<FieldElement>>) -> Result<Self> {
        if let Some(w) = words.iter().find(|w| w.len() != 2 * n) {
            return Err(Error::LengthMismatch(w.len(), 2 * n));
        }
        words.sort_unstable();
        words.dedup();
        Ok(CodewordSet { field, n, words })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Code length N.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, v: &RingVector) -> bool {
        v.len() == self.n && self.words.binary_search(&to_field_coords(v)).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = RingVector> + '_ {
        self.words.iter().map(|w| from_field_coords(&self.field, w))
    }

    /// True iff the set is closed under addition, R-scaling and cyclic shift.
    pub fn is_cyclic_code(&self) -> bool {
        let words: Vec<RingVector> = self.iter().collect();
        let ring: Vec<RingElement> = self
            .field
            .elements()
            .flat_map(|a| self.field.elements().map(move |b| RingElement::new(a, b)))
            .collect();
        words.iter().all(|v| {
            self.contains(&v.cyclic_shift())
                && ring.iter().all(|&r| self.contains(&v.scale(r)))
                && words.iter().all(|w| self.contains(&v.add(w).expect("same length")))
        })
    }
}

/// Every codeword of `c`.
///
/// Fails with `CapExceeded` above `cap` codewords and with
/// `CardinalityMismatch` if the span disagrees with the family table size.
pub fn expand(c: &CodeSpec, cap: u64) -> Result<CodewordSet> {
    let sub = code_subspace(c);
    let size = sub.cardinality();
    if size > BigUint::from(cap) {
        return Err(Error::CapExceeded { what: "codewords", needed: size.to_string(), cap });
    }
    if sub.rank() != c.log_size() {
        return Err(Error::CardinalityMismatch { expected: c.log_size(), found: sub.rank() });
    }
    CodewordSet::from_words(c.field().clone(), c.n(), sub.elements(cap)?)
}

/// [v, w] = 0 for every pair of shift-basis vectors.
pub fn is_self_orthogonal(c: &CodeSpec) -> bool {
    let basis = shift_basis(c);
    basis.iter().enumerate().all(|(i, v)| {
        basis[i..].iter().all(|w| v.inner_product(w).expect("same code").is_zero())
    })
}

/// Self-orthogonal with |C| = q^N.
pub fn is_self_dual(c: &CodeSpec) -> bool {
    is_self_orthogonal(c) && code_subspace(c).rank() == c.n()
}

/// {v in R^N : [v, c] = 0 for all c in the set}, found by scanning all of R^N.
pub fn orthogonal_complement_exhaustive(set: &CodewordSet, cap: u64) -> Result<CodewordSet> {
    let n = set.n();
    let ambient = BigUint::from(1u32) << (2 * n * set.field().m() as usize);
    if ambient > BigUint::from(cap) {
        return Err(Error::CapExceeded { what: "ambient vectors", needed: ambient.to_string(), cap });
    }
    let words: Vec<RingVector> = set.iter().collect();
    let field = set.field().clone();
    let orth = codes::Assignments::new(field.clone(), 2 * n)
        .filter(|coords| {
            let v = from_field_coords(&field, coords);
            words.iter().all(|w| v.inner_product(w).expect("same length").is_zero())
        })
        .collect();
    CodewordSet::from_words(field, n, orth)
}

/// Result of checking every cyclic code of one length.
#[derive(Clone, Debug)]
pub struct Census {
    pub total: usize,
    pub distinct: usize,
    pub self_dual: Vec<CodeSpec>,
}

/// Checks every cyclic code of length 2^s for self-duality, on the current
/// rayon pool. `cap` bounds the number of codes visited.
pub fn census(s: u32, field: &FieldSpec, cap: u64) -> Result<Census> {
    let needed = codes::count_all_cyclic(s, field.m());
    if needed > BigUint::from(cap) {
        return Err(Error::CapExceeded { what: "cyclic codes", needed: needed.to_string(), cap });
    }
    let all: Vec<CodeSpec> = codes::enumerate_all_cyclic(s, field, None)?.collect();
    let checked: Vec<(Vec<Vec<FieldElement>>, bool)> = all
        .par_iter()
        .map(|c| (code_subspace(c).rows().to_vec(), is_self_dual(c)))
        .collect();
    let distinct = checked.iter().map(|(key, _)| key).collect::<HashSet<_>>().len();
    let self_dual = all.into_iter().zip(&checked).filter(|(_, (_, sd))| *sd).map(|(c, _)| c).collect();
    Ok(Census { total: checked.len(), distinct, self_dual })
}

/// Number of self-dual cyclic codes of length 2^s, by exhaustive check.
pub fn brute_count_selfdual(s: u32, field: &FieldSpec, cap: u64) -> Result<BigUint> {
    Ok(BigUint::from(census(s, field, cap)?.self_dual.len()))
}

/// True iff `a` and `b` are the same code.
pub fn same_code(a: &CodeSpec, b: &CodeSpec) -> bool {
    a.n() == b.n() && a.field() == b.field() && code_subspace(a) == code_subspace(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{enumerate_all_cyclic, enumerate_selfdual, Family};

    fn f(m: u32) -> FieldSpec {
        FieldSpec::with_default_modulus(m).unwrap()
    }

    #[test]
    fn table_sizes_match_span_rank() {
        for m in 1..=2 {
            for c in enumerate_all_cyclic(3, &f(m), None).unwrap() {
                assert_eq!(code_subspace(&c).rank(), c.log_size(), "{} {:?}", c.describe(), c.b());
            }
        }
    }

    #[test]
    fn expanded_sets_are_cyclic_codes() {
        for c in enumerate_all_cyclic(2, &f(1), None).unwrap() {
            let set = expand(&c, 1 << 10).unwrap();
            assert_eq!(set.len(), 1 << c.log_size());
            assert!(set.is_cyclic_code());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let c = enumerate_selfdual(3, &f(1), None).unwrap().next().unwrap();
        assert!(matches!(expand(&c, 255), Err(Error::CapExceeded { .. })));
        assert_eq!(expand(&c, 256).unwrap().len(), 256);
    }

    #[test]
    fn enumerated_codes_are_self_dual_and_distinct() {
        for (s, m) in [(1, 1), (2, 2), (3, 1), (4, 1), (3, 2)] {
            let mut keys = HashSet::new();
            for c in enumerate_selfdual(s, &f(m), None).unwrap() {
                assert!(is_self_dual(&c), "{} {:?}", c.describe(), c.b());
                assert!(keys.insert(code_subspace(&c).rows().to_vec()));
            }
        }
    }

    #[test]
    fn census_small() {
        let c = census(2, &f(1), 100).unwrap();
        assert_eq!((c.total, c.distinct, c.self_dual.len()), (23, 23, 7));
        assert!(matches!(census(3, &f(1), 100), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn non_selfdual_detected() {
        let c = CodeSpec::new(f(1), 2, Family::CaseIII, Some(1), None, None).unwrap();
        assert!(!is_self_orthogonal(&c));
        let d = CodeSpec::new(f(1), 2, Family::CaseIII, Some(3), None, None).unwrap();
        assert!(is_self_orthogonal(&d));
        assert!(!is_self_dual(&d));
    }

    #[test]
    fn complement_of_zero_code_is_everything() {
        let c = CodeSpec::new(f(1), 1, Family::CaseIII, Some(2), None, None).unwrap();
        let set = expand(&c, 16).unwrap();
        assert_eq!(set.len(), 1);
        assert_eq!(orthogonal_complement_exhaustive(&set, 16).unwrap().len(), 16);
    }
}
