//! Cyclic codes of length N = 2^s over R = F_{2^m} + uF_{2^m}.
//!
//! Codes are ideals of R[x]/(x^N - 1) = R[x]/((x+1)^N). They fall into five
//! families by generator shape:
//!
//! | family | generators                                   | log_q |C|  |
//! |--------|----------------------------------------------|------------|
//! | I      | (x+1) b + u                                  | N          |
//! | II     | (x+1)^{k+1} b + u (x+1)^k                    | N - k      |
//! | III    | (x+1)^k                                      | 2(N - k)   |
//! | IV     | (x+1) b + u, (x+1)^t                         | 2N - t     |
//! | V      | (x+1)^{k+1} b + u (x+1)^k, (x+1)^{k+t}       | 2N - 2k - t|
//!
//! where b ranges over a coset window `(x+1)^α · A/((x+1)^β)` fixed by the
//! family and its parameters. The self-dual codes form three families: the
//! single code ⟨(x+1)^{N/2}⟩, family I codes whose b is fixed by
//! b -> x^{-1} b(x^{-1}), and family V codes with t = N - 2k and such a b.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gf2m::{FieldElement, FieldSpec};
use crate::ring::RingVector;
use crate::solver::{self, SolutionSpace};
use crate::ypoly::YPoly;

/// Largest supported length exponent; keeps N - 1 within [`solver::MAX_LEN`].
pub const MAX_S: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    CaseI,
    CaseII,
    CaseIII,
    CaseIV,
    CaseV,
    /// ⟨(x+1)^{N/2}⟩.
    SdTrivial,
    /// ⟨(x+1) b + u⟩ with b ∈ Ω_{N-1}.
    SdTypeB,
    /// ⟨(x+1)^{k+1} b + u (x+1)^k, (x+1)^{N-k}⟩ with b ∈ Ω_{N-2k-1}.
    SdTypeC,
}

impl Family {
    pub const CASES: [Family; 5] =
        [Family::CaseI, Family::CaseII, Family::CaseIII, Family::CaseIV, Family::CaseV];
    pub const SELF_DUAL: [Family; 3] = [Family::SdTrivial, Family::SdTypeB, Family::SdTypeC];

    pub fn name(self) -> &'static str {
        match self {
            Family::CaseI => "CaseI",
            Family::CaseII => "CaseII",
            Family::CaseIII => "CaseIII",
            Family::CaseIV => "CaseIV",
            Family::CaseV => "CaseV",
            Family::SdTrivial => "SD-Trivial",
            Family::SdTypeB => "SD-TypeB",
            Family::SdTypeC => "SD-TypeC",
        }
    }

    pub fn is_self_dual_family(self) -> bool {
        matches!(self, Family::SdTrivial | Family::SdTypeB | Family::SdTypeC)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub(crate) fn check_s(s: u32) -> Result<usize> {
    if !(1..=MAX_S).contains(&s) {
        return Err(Error::InvalidParameters(format!("s = {s} outside 1..={MAX_S}")));
    }
    Ok(1usize << s)
}

/// Window (α, β) for b: coefficients α..β-1 of the (x+1)-expansion are free,
/// the rest vanish.
fn window(family: Family, n: usize, k: usize, t: usize) -> Option<(usize, usize)> {
    let half_ceil = |x: usize| x.div_ceil(2);
    match family {
        Family::CaseI | Family::SdTypeB => Some((n / 2 - 1, n - 1)),
        Family::CaseII => Some((half_ceil(n - k) - 1, n - k - 1)),
        Family::CaseIV | Family::CaseV => Some((half_ceil(t) - 1, t - 1)),
        Family::SdTypeC => Some((n / 2 - k - 1, n - 2 * k - 1)),
        Family::CaseIII | Family::SdTrivial => None,
    }
}

/// A cyclic code over R described by its family and parameters.
///
/// `b` is stored in its full window modulus β with the coefficients below α
/// equal to zero. Two specs are equal iff family, k, t and b agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    s: u32,
    field: FieldSpec,
    family: Family,
    k: Option<usize>,
    t: Option<usize>,
    b: Option<YPoly>,
}

impl CodeSpec {
    /// Validates parameter ranges and the window (and, for the self-dual
    /// families, membership of b in Ω).
    pub fn new(
        field: FieldSpec,
        s: u32,
        family: Family,
        k: Option<usize>,
        t: Option<usize>,
        b: Option<YPoly>,
    ) -> Result<Self> {
        let n = check_s(s)?;
        let bad = |what: String| Err(Error::InvalidParameters(format!("{family}: {what}")));
        let need = |v: Option<usize>, name: &str| -> Result<usize> {
            v.ok_or_else(|| Error::InvalidParameters(format!("{family}: missing {name}")))
        };
        let (kk, tt) = match family {
            Family::CaseI | Family::SdTypeB | Family::SdTrivial => {
                if k.is_some() || t.is_some() {
                    return bad("takes no k or t".into());
                }
                (0, 0)
            }
            Family::CaseII => {
                let k = need(k, "k")?;
                if !(1..n).contains(&k) || t.is_some() {
                    return bad(format!("needs 1 <= k <= {} and no t", n - 1));
                }
                (k, 0)
            }
            Family::CaseIII => {
                let k = need(k, "k")?;
                if k > n || t.is_some() || b.is_some() {
                    return bad(format!("needs 0 <= k <= {n}, no t and no b"));
                }
                (k, 0)
            }
            Family::CaseIV => {
                let t = need(t, "t")?;
                if !(1..n).contains(&t) || k.is_some() {
                    return bad(format!("needs 1 <= t <= {} and no k", n - 1));
                }
                (0, t)
            }
            Family::CaseV => {
                let (k, t) = (need(k, "k")?, need(t, "t")?);
                if k < 1 || k + 2 > n || t < 1 || k + t + 1 > n {
                    return bad(format!("needs 1 <= k <= {}, 1 <= t <= N - k - 1", n - 2));
                }
                (k, t)
            }
            Family::SdTypeC => {
                let k = need(k, "k")?;
                if !(1..n / 2).contains(&k) || t.is_some() {
                    return bad(format!("needs 1 <= k <= {} and no t", n / 2 - 1));
                }
                (k, 0)
            }
        };
        match (window(family, n, kk, tt), &b) {
            (None, None) => {}
            (None, Some(_)) => return bad("takes no b".into()),
            (Some(_), None) => return bad("missing b".into()),
            (Some((alpha, beta)), Some(b)) => {
                if b.field() != &field {
                    return Err(Error::SpecMismatch);
                }
                if b.l() != beta {
                    return Err(Error::ModulusMismatch(b.l(), beta));
                }
                if b.coeffs()[..alpha.min(beta)].iter().any(|c| !c.is_zero()) {
                    return bad(format!("b must vanish below (x+1)^{alpha}"));
                }
                if matches!(family, Family::SdTypeB | Family::SdTypeC) && !b.selfdual_defect().is_zero() {
                    return bad("b is not fixed by b -> x^-1 b(x^-1)".into());
                }
            }
        }
        Ok(CodeSpec { s, field, family, k, t, b })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Code length N = 2^s.
    pub fn n(&self) -> usize {
        1 << self.s
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> Option<usize> {
        self.k
    }

    pub fn t(&self) -> Option<usize> {
        self.t
    }

    pub fn b(&self) -> Option<&YPoly> {
        self.b.as_ref()
    }

    /// (α, β) of the b window, when the family has one.
    pub fn window(&self) -> Option<(usize, usize)> {
        window(self.family, self.n(), self.k.unwrap_or(0), self.t.unwrap_or(0))
    }

    /// The same code tagged with its family I-V form.
    pub fn case_form(&self) -> CodeSpec {
        let n = self.n();
        let (family, k, t) = match self.family {
            Family::SdTrivial => (Family::CaseIII, Some(n / 2), None),
            Family::SdTypeB => (Family::CaseI, None, None),
            Family::SdTypeC => {
                let k = self.k.expect("validated");
                (Family::CaseV, Some(k), Some(n - 2 * k))
            }
            _ => return self.clone(),
        };
        CodeSpec { family, k, t, ..self.clone() }
    }

    /// e such that |C| = (2^m)^e, read off the family table.
    pub fn log_size(&self) -> usize {
        let c = self.case_form();
        let n = self.n();
        let (k, t) = (c.k.unwrap_or(0), c.t.unwrap_or(0));
        match c.family {
            Family::CaseI => n,
            Family::CaseII => n - k,
            Family::CaseIII => 2 * (n - k),
            Family::CaseIV => 2 * n - t,
            Family::CaseV => 2 * n - 2 * k - t,
            _ => unreachable!("case_form returns a case family"),
        }
    }

    fn lifted_b(&self) -> YPoly {
        self.b.as_ref().expect("family carries b").with_modulus(self.n())
    }

    /// Generator polynomials as (unit part, u part) in the (x+1)-basis of
    /// F_{2^m}[x]/((x+1)^N).
    pub fn generator_polys(&self) -> Vec<(YPoly, YPoly)> {
        let n = self.n();
        let f = self.field.clone();
        let y_pow = |i: usize| YPoly::monomial(f.clone(), n, i, FieldElement::ONE);
        let zero = YPoly::zero(f.clone(), n);
        let c = self.case_form();
        let (k, t) = (c.k.unwrap_or(0), c.t.unwrap_or(0));
        match c.family {
            Family::CaseI => vec![(c.lifted_b().shift_up(1), y_pow(0))],
            Family::CaseII => vec![(c.lifted_b().shift_up(k + 1), y_pow(k))],
            Family::CaseIII => vec![(y_pow(k), zero)],
            Family::CaseIV => vec![(c.lifted_b().shift_up(1), y_pow(0)), (y_pow(t), zero)],
            Family::CaseV => vec![(c.lifted_b().shift_up(k + 1), y_pow(k)), (y_pow(k + t), zero)],
            _ => unreachable!("case_form returns a case family"),
        }
    }

    /// Generators as length-N coefficient vectors over R (x-basis).
    pub fn generators(&self) -> Vec<RingVector> {
        self.generator_polys()
            .into_iter()
            .map(|(a, b)| {
                RingVector::from_parts(self.field.clone(), &a.to_x_basis(), &b.to_x_basis())
                    .expect("equal lengths")
            })
            .collect()
    }

    /// The dual code C^⊥, re-tagged into its own family.
    pub fn dual(&self) -> Result<CodeSpec> {
        if self.family.is_self_dual_family() {
            return Err(Error::UnsupportedFamily(self.family.name()));
        }
        let n = self.n();
        // reciprocal in the full ambient modulus, then back into the window
        let rec = |beta: usize| Some(self.lifted_b().reciprocal_transform().with_modulus(beta));
        let f = self.field.clone();
        let (k, t) = (self.k.unwrap_or(0), self.t.unwrap_or(0));
        match self.family {
            Family::CaseI => CodeSpec::new(f, self.s, Family::CaseI, None, None, rec(n - 1)),
            Family::CaseII => CodeSpec::new(f, self.s, Family::CaseIV, None, Some(n - k), rec(n - k - 1)),
            Family::CaseIII => CodeSpec::new(f, self.s, Family::CaseIII, Some(n - k), None, None),
            Family::CaseIV => CodeSpec::new(f, self.s, Family::CaseII, Some(n - t), None, rec(t - 1)),
            Family::CaseV => CodeSpec::new(f, self.s, Family::CaseV, Some(n - k - t), Some(t), rec(t - 1)),
            _ => unreachable!(),
        }
    }

    /// Free-form description such as `<(x+1)^3 b(x) + u(x+1)^2, (x+1)^6>`.
    pub fn describe(&self) -> String {
        let c = self.case_form();
        let n = self.n();
        let y = |e: usize| match e {
            0 => "1".to_string(),
            1 => "(x+1)".to_string(),
            e => format!("(x+1)^{e}"),
        };
        let (k, t) = (c.k.unwrap_or(0), c.t.unwrap_or(0));
        let body = match c.family {
            Family::CaseI => "(x+1)b(x) + u".to_string(),
            Family::CaseII => format!("{}b(x) + u{}", y(k + 1), y(k)),
            Family::CaseIII if k == n => "0".to_string(),
            Family::CaseIII => y(k),
            Family::CaseIV => format!("(x+1)b(x) + u, {}", y(t)),
            Family::CaseV => format!("{}b(x) + u{}, {}", y(k + 1), y(k), y(k + t)),
            _ => unreachable!(),
        };
        format!("<{body}>")
    }
}

/// All vectors of `len` field values in lexicographic order, first
/// coordinate most significant.
pub struct Assignments {
    field: FieldSpec,
    digits: Vec<u32>,
    done: bool,
}

impl Assignments {
    pub fn new(field: FieldSpec, len: usize) -> Self {
        Assignments { field, digits: vec![0; len], done: false }
    }
}

impl Iterator for Assignments {
    type Item = Vec<FieldElement>;

    fn next(&mut self) -> Option<Vec<FieldElement>> {
        if self.done {
            return None;
        }
        let out = self.digits.iter().map(|&d| self.field.element_unchecked(d)).collect();
        let q = self.field.order();
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < q {
                break;
            }
            self.digits[i] = 0;
        }
        Some(out)
    }
}

pub type CodeStream = Box<dyn Iterator<Item = CodeSpec> + Send>;

fn check_cap(count: &BigUint, cap: Option<u64>) -> Result<()> {
    if let Some(cap) = cap {
        if *count > BigUint::from(cap) {
            return Err(Error::SizeOverflow { count: count.to_string(), cap });
        }
    }
    Ok(())
}

/// Family II-V codes with b ranging over an unconstrained window.
fn windowed(
    field: &FieldSpec,
    s: u32,
    family: Family,
    k: Option<usize>,
    t: Option<usize>,
) -> impl Iterator<Item = CodeSpec> + Send {
    let n = 1usize << s;
    let (alpha, beta) = window(family, n, k.unwrap_or(0), t.unwrap_or(0)).expect("family with b");
    let width = beta.saturating_sub(alpha);
    let f = field.clone();
    Assignments::new(field.clone(), width).map(move |vals| {
        let mut coeffs = vec![FieldElement::ZERO; beta - width];
        coeffs.extend(vals);
        CodeSpec { s, field: f.clone(), family, k, t, b: Some(YPoly::new(f.clone(), coeffs)) }
    })
}

/// Codes whose b ranges over the materializations of a truncated space.
fn from_space(
    field: &FieldSpec,
    s: u32,
    family: Family,
    k: Option<usize>,
    space: SolutionSpace,
) -> impl Iterator<Item = CodeSpec> + Send {
    let f = field.clone();
    let delta = space.delta();
    Assignments::new(field.clone(), space.dim()).map(move |vals| {
        let mut coeffs = vec![FieldElement::ZERO; delta];
        coeffs.extend(space.materialize_ordered(&vals).expect("one value per free coordinate"));
        CodeSpec { s, field: f.clone(), family, k, t: None, b: Some(YPoly::new(f.clone(), coeffs)) }
    })
}

/// S_l^{[δ]} for the b-window of a self-dual family, via the recursion.
pub fn selfdual_window_space(s: u32, family: Family, k: usize) -> Result<SolutionSpace> {
    let n = check_s(s)?;
    let (delta, l) = match family {
        Family::SdTypeB => (n / 2 - 1, n - 1),
        Family::SdTypeC if (1..n / 2).contains(&k) => (n / 2 - k - 1, n - 2 * k - 1),
        _ => return Err(Error::InvalidParameters(format!("{family} with k = {k} has no window space"))),
    };
    solver::solve_recursive(l)?.truncate(delta)
}

/// The self-dual codes of length 2^s from the listed families, in canonical
/// order: the trivial code, then family B in lexicographic order of its free
/// coordinates, then family C by ascending k.
pub fn enumerate_selfdual_families(
    s: u32,
    field: &FieldSpec,
    families: &[Family],
    cap: Option<u64>,
) -> Result<CodeStream> {
    let n = check_s(s)?;
    let m = field.m();
    let count: BigUint = families
        .iter()
        .filter(|f| f.is_self_dual_family())
        .map(|&f| count_selfdual_family(s, m, f))
        .sum();
    check_cap(&count, cap)?;

    let mut stream: CodeStream = Box::new(std::iter::empty());
    if families.contains(&Family::SdTrivial) {
        let trivial = CodeSpec { s, field: field.clone(), family: Family::SdTrivial, k: None, t: None, b: None };
        stream = Box::new(stream.chain(std::iter::once(trivial)));
    }
    if families.contains(&Family::SdTypeB) {
        let space = selfdual_window_space(s, Family::SdTypeB, 0)?;
        stream = Box::new(stream.chain(from_space(field, s, Family::SdTypeB, None, space)));
    }
    if families.contains(&Family::SdTypeC) {
        for k in 1..n / 2 {
            let space = selfdual_window_space(s, Family::SdTypeC, k)?;
            stream = Box::new(stream.chain(from_space(field, s, Family::SdTypeC, Some(k), space)));
        }
    }
    Ok(stream)
}

/// Every self-dual cyclic code of length 2^s over R.
pub fn enumerate_selfdual(s: u32, field: &FieldSpec, cap: Option<u64>) -> Result<CodeStream> {
    enumerate_selfdual_families(s, field, &Family::SELF_DUAL, cap)
}

/// Every cyclic code of length 2^s over R, families I to V in order.
pub fn enumerate_all_cyclic(s: u32, field: &FieldSpec, cap: Option<u64>) -> Result<CodeStream> {
    let n = check_s(s)?;
    check_cap(&count_all_cyclic(s, field.m()), cap)?;
    let f = field.clone();
    let case1 = windowed(field, s, Family::CaseI, None, None);
    let f2 = f.clone();
    let case2 = (1..n).flat_map(move |k| windowed(&f2, s, Family::CaseII, Some(k), None));
    let f3 = f.clone();
    let case3 = (0..=n).map(move |k| CodeSpec {
        s,
        field: f3.clone(),
        family: Family::CaseIII,
        k: Some(k),
        t: None,
        b: None,
    });
    let f4 = f.clone();
    let case4 = (1..n).flat_map(move |t| windowed(&f4, s, Family::CaseIV, None, Some(t)));
    let f5 = f;
    let case5 = (1..n.saturating_sub(1)).flat_map(move |k| {
        let f5 = f5.clone();
        (1..n - k).flat_map(move |t| windowed(&f5, s, Family::CaseV, Some(k), Some(t)))
    });
    Ok(Box::new(case1.chain(case2).chain(case3).chain(case4).chain(case5)))
}

fn q_pow(m: u32, e: usize) -> BigUint {
    BigUint::one() << (m as usize * e)
}

/// Number of codes in one self-dual family.
pub fn count_selfdual_family(s: u32, m: u32, family: Family) -> BigUint {
    let q = q_pow(m, 1);
    match (family, s) {
        (Family::SdTrivial, _) => BigUint::one(),
        (Family::SdTypeB, 1) => q,
        (Family::SdTypeB, 2) => q_pow(m, 2),
        (Family::SdTypeB, _) => q_pow(m, (1usize << (s - 2)) + 1),
        (Family::SdTypeC, 1) => BigUint::zero(),
        (Family::SdTypeC, 2) => q,
        (Family::SdTypeC, _) => {
            // k = N/2 - 1 contributes q; k = N/2 - 2h and N/2 - 2h - 1 each q^{h+1}
            let sum: BigUint = (1..(1usize << (s - 2))).map(|h| q_pow(m, h + 1)).sum();
            q + sum * 2u32
        }
        _ => BigUint::zero(),
    }
}

/// N_s, the number of self-dual cyclic codes of length 2^s, as an exact sum.
pub fn count_selfdual(s: u32, m: u32) -> BigUint {
    Family::SELF_DUAL.iter().map(|&f| count_selfdual_family(s, m, f)).sum()
}

/// N_s from the closed form with the geometric quotient, for s >= 3.
pub fn count_selfdual_closed_form(s: u32, m: u32) -> Option<BigUint> {
    if s < 3 || m == 0 {
        return None;
    }
    let q = q_pow(m, 1);
    let e = 1usize << (s - 2);
    let geometric = (q_pow(m, e - 1) - 1u32) / (&q - 1u32);
    Some(BigUint::one() + &q + q_pow(m, 2) * 2u32 * geometric + q_pow(m, e + 1))
}

/// Sum over i = 0..=N/2 of (1 + 4i) 2^{(N/2 - i) m}.
pub fn count_all_cyclic(s: u32, m: u32) -> BigUint {
    let half = 1usize << (s - 1);
    (0..=half).map(|i| q_pow(m, half - i) * (1 + 4 * i)).sum()
}

/// Number of codes per family I..V.
pub fn count_by_case(s: u32, m: u32) -> [BigUint; 5] {
    let n = 1usize << s;
    let w = |x: usize| q_pow(m, x - x.div_ceil(2));
    [
        q_pow(m, n - n / 2),
        (1..n).map(|k| w(n - k)).sum(),
        BigUint::from(n + 1),
        (1..n).map(w).sum(),
        (1..n.saturating_sub(1)).flat_map(|k| (1..n - k).map(w)).sum(),
    ]
}
