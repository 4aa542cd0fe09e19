//! Truncated polynomials in A_l = F_{2^m}[x]/((x+1)^l), stored in the
//! (x+1)-adic basis: coefficient i multiplies (x+1)^i.
//!
//! In this basis x = 1 + (x+1) and x^{-1} = 1 + (x+1) + ... + (x+1)^{l-1}.
//! The map b(x) -> x^{-1} b(x^{-1}) acts on coefficient vectors as the
//! Pascal-mod-2 matrix built by [`crate::solver::build_g_block`]; a second,
//! independent route evaluates it by substitution.

use crate::error::{Error, Result};
use crate::gf2m::{FieldElement, FieldSpec};
use crate::solver;

/// Parity of binom(n, k) by Lucas' theorem.
#[inline]
pub fn binom_odd(n: usize, k: usize) -> bool {
    k & !n == 0
}

/// An element of F_{2^m}[x]/((x+1)^l). `l = 0` denotes the zero ring, which
/// shows up as the empty coefficient window of some codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YPoly {
    field: FieldSpec,
    coeffs: Vec<FieldElement>,
}

impl YPoly {
    pub fn new(field: FieldSpec, coeffs: Vec<FieldElement>) -> Self {
        YPoly { field, coeffs }
    }

    pub fn zero(field: FieldSpec, l: usize) -> Self {
        YPoly { field, coeffs: vec![FieldElement::ZERO; l] }
    }

    pub fn one(field: FieldSpec, l: usize) -> Self {
        Self::monomial(field, l, 0, FieldElement::ONE)
    }

    /// c (x+1)^i, reduced (zero when i >= l).
    pub fn monomial(field: FieldSpec, l: usize, i: usize, c: FieldElement) -> Self {
        let mut p = Self::zero(field, l);
        if i < l {
            p.coeffs[i] = c;
        }
        p
    }

    /// x = 1 + (x+1).
    pub fn x(field: FieldSpec, l: usize) -> Self {
        let mut p = Self::one(field, l);
        if l > 1 {
            p.coeffs[1] = FieldElement::ONE;
        }
        p
    }

    /// x^{-1} = sum_{i<l} (x+1)^i, the all-ones vector.
    pub fn x_inverse(field: FieldSpec, l: usize) -> Result<Self> {
        if l == 0 {
            return Err(Error::LengthOutOfRange { len: 0, max: solver::MAX_LEN });
        }
        Ok(YPoly { field, coeffs: vec![FieldElement::ONE; l] })
    }

    pub fn l(&self) -> usize {
        self.coeffs.len()
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldElement> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Index of the lowest nonzero coefficient, i.e. the (x+1)-adic valuation.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check(&self, other: &YPoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::SpecMismatch);
        }
        if self.l() != other.l() {
            return Err(Error::ModulusMismatch(self.l(), other.l()));
        }
        Ok(())
    }

    pub fn add(&self, other: &YPoly) -> Result<YPoly> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| a + b).collect();
        Ok(YPoly { field: self.field.clone(), coeffs })
    }

    pub fn scale(&self, c: FieldElement) -> YPoly {
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        YPoly { field: self.field.clone(), coeffs }
    }

    /// Product modulo (x+1)^l.
    pub fn mul_mod(&self, other: &YPoly) -> Result<YPoly> {
        self.check(other)?;
        let l = self.l();
        let f = &self.field;
        let mut out = vec![FieldElement::ZERO; l];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs[..l - i].iter().enumerate() {
                out[i + j] += f.mul(a, b);
            }
        }
        Ok(YPoly { field: f.clone(), coeffs: out })
    }

    /// Multiplication by (x+1)^k: coefficients move up by k, the top k drop.
    pub fn shift_up(&self, k: usize) -> YPoly {
        let l = self.l();
        let mut out = vec![FieldElement::ZERO; l];
        if k < l {
            out[k..].copy_from_slice(&self.coeffs[..l - k]);
        }
        YPoly { field: self.field.clone(), coeffs: out }
    }

    /// Image in A_{l'}: reduction when l' <= l, zero-padded lift otherwise.
    pub fn with_modulus(&self, l: usize) -> YPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(l, FieldElement::ZERO);
        YPoly { field: self.field.clone(), coeffs }
    }

    /// x^{-1} b(x^{-1}) mod (x+1)^l, computed as G_l B_l.
    pub fn reciprocal_transform(&self) -> YPoly {
        let l = self.l();
        if l == 0 {
            return self.clone();
        }
        let g = solver::build_g_block(l).expect("modulus within solver range");
        let coeffs = (0..l)
            .map(|i| g.row(i).ones().fold(FieldElement::ZERO, |acc, j| acc + self.coeffs[j]))
            .collect();
        YPoly { field: self.field.clone(), coeffs }
    }

    /// x^{-1} b(x^{-1}) mod (x+1)^l by direct substitution: with
    /// w = x^{-1} + 1, evaluates x^{-1} * sum_i b_i w^i by Horner's rule.
    pub fn reciprocal_by_substitution(&self) -> YPoly {
        let l = self.l();
        if l == 0 {
            return self.clone();
        }
        let xinv = YPoly::x_inverse(self.field.clone(), l).expect("l >= 1");
        let w = xinv.add(&YPoly::one(self.field.clone(), l)).expect("same modulus");
        let mut acc = YPoly::zero(self.field.clone(), l);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul_mod(&w).expect("same modulus");
            acc.coeffs[0] += c;
        }
        acc.mul_mod(&xinv).expect("same modulus")
    }

    /// b + x^{-1} b(x^{-1}); zero exactly when b lies in Omega_l.
    pub fn selfdual_defect(&self) -> YPoly {
        self.add(&self.reciprocal_transform()).expect("same modulus")
    }

    /// Coefficients in the standard basis 1, x, ..., x^{l-1}:
    /// c_j = sum_i binom(i, j) b_i over F_2.
    pub fn to_x_basis(&self) -> Vec<FieldElement> {
        binomial_transform(&self.coeffs)
    }

    /// Inverse of [`YPoly::to_x_basis`]; the transform is an involution.
    pub fn from_x_basis(field: FieldSpec, coeffs: &[FieldElement]) -> YPoly {
        YPoly { field, coeffs: binomial_transform(coeffs) }
    }
}

fn binomial_transform(v: &[FieldElement]) -> Vec<FieldElement> {
    let l = v.len();
    let mut out = vec![FieldElement::ZERO; l];
    for (i, &b) in v.iter().enumerate() {
        if b.is_zero() {
            continue;
        }
        // submasks j of i are exactly the j with binom(i, j) odd
        let mut j = i;
        loop {
            out[j] += b;
            if j == 0 {
                break;
            }
            j = (j - 1) & i;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(m: u32) -> FieldSpec {
        FieldSpec::with_default_modulus(m).unwrap()
    }

    fn poly(field: &FieldSpec, bits: &[u32]) -> YPoly {
        YPoly::new(field.clone(), bits.iter().map(|&b| field.element(b).unwrap()).collect())
    }

    #[test]
    fn x_inverse_values() {
        let f1 = f(1);
        assert_eq!(YPoly::x_inverse(f1.clone(), 1).unwrap(), poly(&f1, &[1]));
        assert_eq!(YPoly::x_inverse(f1.clone(), 3).unwrap(), poly(&f1, &[1, 1, 1]));
        for l in 1..=40 {
            let p = YPoly::x_inverse(f1.clone(), l).unwrap();
            assert_eq!(p.mul_mod(&YPoly::x(f1.clone(), l)).unwrap(), YPoly::one(f1.clone(), l));
        }
    }

    #[test]
    fn mul_mod_examples() {
        let f2 = f(2);
        let q = poly(&f2, &[1, 2, 3, 1]);
        let y = poly(&f2, &[0, 1, 0, 0]);
        assert_eq!(y.mul_mod(&q).unwrap(), poly(&f2, &[0, 1, 2, 3]));
        assert_eq!(q.shift_up(1), poly(&f2, &[0, 1, 2, 3]));
        let top = poly(&f2, &[0, 0, 0, 1]);
        assert!(top.mul_mod(&y).unwrap().is_zero());
        let x = YPoly::x(f2.clone(), 4);
        assert_eq!(x.mul_mod(&x).unwrap(), poly(&f2, &[1, 0, 1, 0]));
        assert_eq!(
            YPoly::zero(f2.clone(), 3).mul_mod(&YPoly::zero(f2.clone(), 4)),
            Err(Error::ModulusMismatch(3, 4))
        );
        assert_eq!(YPoly::zero(f2, 3).add(&YPoly::zero(f(1), 3)), Err(Error::SpecMismatch));
    }

    #[test]
    fn reciprocal_examples() {
        let f1 = f(1);
        for l in 1..=20 {
            let one = YPoly::one(f1.clone(), l);
            assert_eq!(one.reciprocal_transform(), YPoly::x_inverse(f1.clone(), l).unwrap());
        }
        // b = x + 1 at l = 2: x^{-1}(x^{-1} + 1) = (0, 1)
        let b = poly(&f1, &[0, 1]);
        assert_eq!(b.reciprocal_transform(), b);
        assert_eq!(b.reciprocal_by_substitution(), b);
    }

    #[test]
    fn defect_examples() {
        let f2 = f(2);
        for c in 0..4 {
            assert!(poly(&f2, &[c]).selfdual_defect().is_zero());
        }
        for b1 in 0..4 {
            for b2 in 0..4 {
                assert!(poly(&f2, &[0, b1, b2]).selfdual_defect().is_zero());
            }
        }
        assert_eq!(poly(&f2, &[1, 0, 0]).selfdual_defect(), poly(&f2, &[0, 1, 1]));
    }

    #[test]
    fn basis_change_examples() {
        let f1 = f(1);
        assert_eq!(poly(&f1, &[0, 1]).to_x_basis(), poly(&f1, &[1, 1]).coeffs());
        assert_eq!(poly(&f1, &[1, 0, 0, 0]).to_x_basis(), poly(&f1, &[1, 0, 0, 0]).coeffs());
        // (x+1)^3 = 1 + x + x^2 + x^3
        assert_eq!(poly(&f1, &[0, 0, 0, 1]).to_x_basis(), poly(&f1, &[1, 1, 1, 1]).coeffs());
    }

    #[test]
    fn binomial_transform_matches_naive_expansion() {
        // expand (x+1)^i by repeated multiplication in the x basis
        let f1 = f(1);
        for l in 1..=32 {
            let mut power = vec![0u8; l];
            power[0] = 1;
            for i in 0..l {
                let got: Vec<u8> = YPoly::monomial(f1.clone(), l, i, FieldElement::ONE)
                    .to_x_basis()
                    .iter()
                    .map(|c| c.bits() as u8)
                    .collect();
                assert_eq!(got, power, "l={l} i={i}");
                let mut next = vec![0u8; l];
                for j in 0..l {
                    next[j] ^= power[j];
                    if j + 1 < l {
                        next[j + 1] ^= power[j];
                    }
                }
                power = next;
            }
        }
    }

    fn arb_poly(m: u32, max_l: usize) -> impl Strategy<Value = YPoly> {
        (1..=max_l).prop_flat_map(move |l| {
            proptest::collection::vec(0u32..(1 << m), l).prop_map(move |bits| {
                let field = FieldSpec::with_default_modulus(m).unwrap();
                YPoly::new(field.clone(), bits.into_iter().map(|b| field.element(b).unwrap()).collect())
            })
        })
    }

    proptest! {
        #[test]
        fn basis_change_is_involution(p in arb_poly(3, 32)) {
            let c = p.to_x_basis();
            prop_assert_eq!(YPoly::from_x_basis(p.field().clone(), &c), p);
        }

        #[test]
        fn matrix_and_substitution_routes_agree(p in arb_poly(2, 48)) {
            prop_assert_eq!(p.reciprocal_transform(), p.reciprocal_by_substitution());
        }

        #[test]
        fn reciprocal_is_involution(p in arb_poly(3, 40)) {
            prop_assert_eq!(p.reciprocal_transform().reciprocal_transform(), p);
        }

        #[test]
        fn reciprocal_is_multiplicative_up_to_xinv(p in arb_poly(2, 24), seed in any::<u64>()) {
            // (ab)~ = x * a~ * b~ where ~ denotes x^{-1} c(x^{-1})
            let l = p.l();
            let field = p.field().clone();
            let q = YPoly::new(field.clone(), (0..l).map(|i| field.element(((seed >> (2 * (i % 32))) & 3) as u32).unwrap()).collect());
            let lhs = p.mul_mod(&q).unwrap().reciprocal_transform();
            let rhs = YPoly::x(field, l)
                .mul_mod(&p.reciprocal_transform()).unwrap()
                .mul_mod(&q.reciprocal_transform()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
