//! Small worked examples for the oracle and the Gray map.

use std::collections::BTreeMap;

use selfdual_core::codes::{enumerate_all_cyclic, enumerate_selfdual, CodeSpec, Family};
use selfdual_core::gray;
use selfdual_core::linalg::Subspace;
use selfdual_core::oracle::{self, expand};
use selfdual_core::{FieldElement, FieldSpec, RingElement, RingVector, YPoly};

fn f(m: u32) -> FieldSpec {
    FieldSpec::with_default_modulus(m).unwrap()
}

fn u_code(s: u32) -> CodeSpec {
    let n = 1usize << s;
    CodeSpec::new(f(1), s, Family::CaseI, None, None, Some(YPoly::zero(f(1), n - 1))).unwrap()
}

fn bits(w: &[FieldElement]) -> Vec<u16> {
    w.iter().map(|x| x.bits()).collect()
}

#[test]
fn code_generated_by_u() {
    let set = expand(&u_code(1), 16).unwrap();
    let words: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    assert_eq!(words.len(), 4);
    for w in ["(0:0, 0:0)", "(0:1, 0:0)", "(0:0, 0:1)", "(0:1, 0:1)"] {
        assert!(words.contains(&w.to_string()), "{w}");
    }
    let image = gray::gray_image(&set);
    let img: Vec<Vec<u16>> = image.words().iter().map(|w| bits(w)).collect();
    assert_eq!(img, vec![vec![0, 0, 0, 0], vec![0, 1, 0, 1], vec![1, 0, 1, 0], vec![1, 1, 1, 1]]);
    let want: BTreeMap<usize, u64> = [(0, 1), (2, 2), (4, 1)].into();
    assert_eq!(gray::lee_distribution(&set), want);
    assert_eq!(gray::hamming_distribution(&image), want);
}

#[test]
fn code_generated_by_x_plus_one() {
    let c = CodeSpec::new(f(1), 1, Family::CaseIII, Some(1), None, None).unwrap();
    let set = expand(&c, 16).unwrap();
    assert_eq!(set.len(), 4);
    assert!(set.iter().all(|v| v.entries()[0] == v.entries()[1]));
}

#[test]
fn zero_and_whole_codes() {
    for s in 1..=3 {
        let n = 1usize << s;
        let zero = CodeSpec::new(f(1), s, Family::CaseIII, Some(n), None, None).unwrap();
        let set = expand(&zero, 1).unwrap();
        assert_eq!(set.len(), 1);
        let image = gray::gray_image(&set);
        assert!(image.is_two_quasi_cyclic() && image.is_block_quasi_cyclic());
        assert_eq!(gray::hamming_distribution(&image), [(0, 1)].into());

        let whole = CodeSpec::new(f(1), s, Family::CaseIII, Some(0), None, None).unwrap();
        assert!(!oracle::is_self_orthogonal(&whole));
        if s == 1 {
            assert!(!gray::gray_image(&expand(&whole, 16).unwrap()).is_self_dual());
        }
        let half = CodeSpec::new(f(1), s, Family::CaseIII, Some(n / 2), None, None).unwrap();
        assert!(oracle::is_self_dual(&half));
        for k in 0..n / 2 {
            let c = CodeSpec::new(f(1), s, Family::CaseIII, Some(k), None, None).unwrap();
            assert!(!oracle::is_self_orthogonal(&c));
        }
    }
}

#[test]
fn gray_word_examples() {
    let field = f(1);
    let one_u = RingElement::new(FieldElement::ONE, FieldElement::ONE);
    let v = RingVector::new(field.clone(), vec![RingElement::ONE, one_u]);
    assert_eq!(bits(&gray::gray_word(&v)), [0, 1, 1, 0]);
    let v = RingVector::new(field.clone(), vec![RingElement::U]);
    assert_eq!(bits(&gray::gray_word(&v)), [1, 1]);
    assert_eq!(bits(&gray::gray_word(&RingVector::zero(field, 3))), [0; 6]);
}

#[test]
fn singleton_is_not_quasi_cyclic() {
    let w = vec![FieldElement::ONE, FieldElement::ZERO, FieldElement::ZERO, FieldElement::ZERO];
    let set = gray::FieldWordSet::new(f(1), 4, vec![w]).unwrap();
    assert!(!set.is_two_quasi_cyclic());
    assert!(!set.is_block_quasi_cyclic());
}

#[test]
fn shift_basis_spans_expansion() {
    for s in 1..=3 {
        for c in enumerate_all_cyclic(s, &f(1), None).unwrap() {
            let basis = oracle::shift_basis(&c);
            assert_eq!(basis.len(), c.generators().len() << s);
            let set = expand(&c, 1 << 16).unwrap();
            assert!(basis.iter().all(|v| set.contains(v)));
            // R-combinations of the basis stay inside the set
            let mut acc = RingVector::zero(f(1), c.n());
            for (i, v) in basis.iter().enumerate() {
                let r = [RingElement::ONE, RingElement::U][i % 2];
                acc = acc.add(&v.scale(r)).unwrap();
                assert!(set.contains(&acc));
            }
        }
    }
}

#[test]
fn pairwise_orthogonality_agrees_with_shift_basis() {
    for s in 1..=2 {
        for c in enumerate_all_cyclic(s, &f(1), None).unwrap() {
            let words: Vec<RingVector> = expand(&c, 1 << 16).unwrap().iter().collect();
            let pairwise = words.iter().all(|v| words.iter().all(|w| v.inner_product(w).unwrap().is_zero()));
            assert_eq!(pairwise, oracle::is_self_orthogonal(&c), "{}", c.describe());
        }
    }
}

#[test]
fn two_generator_sizes() {
    for m in 1..=2 {
        for c in enumerate_all_cyclic(3, &f(m), None).unwrap() {
            if c.family() == Family::CaseV {
                let (k, t) = (c.k().unwrap(), c.t().unwrap());
                let e = 2 * c.n() - 2 * k - t;
                assert_eq!(oracle::code_subspace(&c).rank(), e);
                if m == 1 {
                    assert_eq!(expand(&c, 1 << 16).unwrap().len(), 1 << e);
                }
            }
        }
    }
}

#[test]
fn no_self_dual_codes_in_families_two_and_four() {
    for c in enumerate_all_cyclic(3, &f(2), None).unwrap() {
        if matches!(c.family(), Family::CaseII | Family::CaseIV) {
            assert!(!oracle::is_self_dual(&c));
        }
    }
}

#[test]
fn gray_transfer_at_m2() {
    for c in enumerate_selfdual(2, &f(2), None).unwrap() {
        let set = expand(&c, 1 << 16).unwrap();
        let image = gray::gray_image(&set);
        assert!(image.is_self_dual());
        assert_eq!(gray::lee_distribution(&set), gray::hamming_distribution(&image));
    }
}

#[test]
fn cyclic_images_are_quasi_cyclic() {
    for c in enumerate_all_cyclic(2, &f(2), None).unwrap() {
        let image = gray::gray_image(&expand(&c, 1 << 16).unwrap());
        assert!(image.is_block_quasi_cyclic());
        assert!(image.map(gray::interleave).unwrap().is_two_quasi_cyclic());
        let sub: Subspace = image.span();
        assert_eq!(sub, gray::image_generators(&c));
    }
}

#[test]
fn cap_from_environment_default() {
    assert_eq!(oracle::DEFAULT_CAP, 1 << 24);
}
