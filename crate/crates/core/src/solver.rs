//! The matrix route to Omega_l.
//!
//! `G_{2^λ}` is the λ-fold Kronecker power of `[[1,0],[1,1]]` and acts on
//! (x+1)-adic coefficient vectors as b(x) -> x^{-1} b(x^{-1}). `M_l`, the
//! upper-left l x l block of `I + G_{2^λ}`, therefore has the coefficient
//! vectors of Omega_l as its null space. This module builds both matrices,
//! solves `M_l Y = 0` directly and by the doubling recursion, and describes
//! the solution sets as [`SolutionSpace`] values with named free coordinates.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;

use crate::bitmatrix::{BitMatrix, BitRow};
use crate::error::{Error, Result};
use crate::gf2m::FieldElement;

/// Largest supported modulus exponent l. Dense M_l costs l^2 bits.
pub const MAX_LEN: usize = 1 << 12;

fn check_len(l: usize) -> Result<()> {
    if l == 0 || l > MAX_LEN {
        return Err(Error::LengthOutOfRange { len: l, max: MAX_LEN });
    }
    Ok(())
}

/// Least λ >= 1 with l <= 2^λ.
pub fn level_for(l: usize) -> u32 {
    l.max(2).next_power_of_two().trailing_zeros()
}

/// G_{2^λ} by the Kronecker recursion G_{2^λ} = G_2 ⊗ G_{2^{λ-1}}, G_1 = (1).
pub fn build_g(level: u32) -> Result<BitMatrix> {
    if level >= usize::BITS || (1usize << level) > MAX_LEN {
        return Err(Error::LengthOutOfRange { len: 1usize.checked_shl(level).unwrap_or(0), max: MAX_LEN });
    }
    let g2 = BitMatrix::from_strings(&["10", "11"]);
    let mut g = BitMatrix::identity(1);
    for _ in 0..level {
        g = g2.kron(&g);
    }
    Ok(g)
}

/// Upper-left l x l block of G_{2^λ}, λ minimal.
pub fn build_g_block(l: usize) -> Result<BitMatrix> {
    check_len(l)?;
    Ok(build_g(level_for(l))?.top_left(l, l))
}

/// M_l: upper-left l x l block of I + G_{2^λ}, λ minimal.
pub fn build_m(l: usize) -> Result<BitMatrix> {
    check_len(l)?;
    let g = build_g(level_for(l))?;
    let n = g.rows();
    Ok(BitMatrix::identity(n).add(&g).top_left(l, l))
}

/// Row reduction that pivots every row on its highest nonzero column.
///
/// Each entry of `rows` is a coefficient row over the unknowns paired with a
/// symbolic right-hand side. Returns, per pivot column, the right-hand side
/// and the free unknowns it still involves once the row is fully reduced.
/// Fails if some row reduces to `0 = nonzero`.
fn reduce_highest_pivot(
    rows: Vec<(BitRow, BitRow)>,
) -> Result<BTreeMap<usize, (BitRow, BitRow)>> {
    let mut pivots: BTreeMap<usize, (BitRow, BitRow)> = BTreeMap::new();
    for (index, (mut lhs, mut rhs)) in rows.into_iter().enumerate() {
        loop {
            match lhs.last_one() {
                None => {
                    if !rhs.is_zero() {
                        return Err(Error::InconsistentSystem(index));
                    }
                    break;
                }
                Some(h) => match pivots.get(&h) {
                    Some((pl, pr)) => {
                        lhs.xor_assign(pl);
                        rhs.xor_assign(pr);
                    }
                    None => {
                        pivots.insert(h, (lhs, rhs));
                        break;
                    }
                },
            }
        }
    }
    // Back-substitute in increasing pivot order; a reduced pivot row only
    // involves its own pivot and free columns.
    let cols: Vec<usize> = pivots.keys().copied().collect();
    for &h in &cols {
        let (mut lhs, mut rhs) = pivots[&h].clone();
        let lower: Vec<usize> = lhs.ones().filter(|&c| c != h && pivots.contains_key(&c)).collect();
        for c in lower {
            let (pl, pr) = &pivots[&c];
            lhs.xor_assign(pl);
            rhs.xor_assign(pr);
        }
        pivots.insert(h, (lhs, rhs));
    }
    for (h, (lhs, _)) in pivots.iter_mut() {
        lhs.set(*h, false);
    }
    Ok(pivots)
}

/// A parametrized description of S_l or its truncation S_l^{[δ]}.
///
/// Coordinates are named by their index in the full length-l vector, so
/// S_15^{[7]} has coordinates b7..b14. Each bound coordinate is an F_2-linear
/// combination of free coordinates, recorded as a bit row over 0..l.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSpace {
    len: usize,
    delta: usize,
    free: Vec<usize>,
    bound: BTreeMap<usize, BitRow>,
}

impl SolutionSpace {
    /// Ambient length l.
    pub fn l(&self) -> usize {
        self.len
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    /// Number of coordinates, l - δ.
    pub fn width(&self) -> usize {
        self.len - self.delta
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Free coordinate indices in increasing order.
    pub fn free(&self) -> &[usize] {
        &self.free
    }

    pub fn is_free(&self, index: usize) -> bool {
        self.free.binary_search(&index).is_ok()
    }

    /// Free indices that bound coordinate `index` sums; `None` if `index`
    /// is free or out of range.
    pub fn bound_row(&self, index: usize) -> Option<Vec<usize>> {
        self.bound.get(&index).map(|r| r.ones().collect())
    }

    /// Bound coordinates with their dependency rows, increasing index.
    pub fn bound(&self) -> impl Iterator<Item = (usize, Vec<usize>)> + '_ {
        self.bound.iter().map(|(&i, r)| (i, r.ones().collect()))
    }

    /// |S| = (2^m)^dim.
    pub fn cardinality(&self, m: u32) -> BigUint {
        BigUint::from(1u32) << (m as usize * self.dim())
    }

    /// Fills in bound coordinates from values of the free ones.
    pub fn materialize(&self, assignment: &HashMap<usize, FieldElement>) -> Result<Vec<FieldElement>> {
        if let Some(&extra) = assignment.keys().find(|k| !self.is_free(**k)) {
            return Err(Error::UnknownCoordinate(extra));
        }
        let values = self
            .free
            .iter()
            .map(|i| assignment.get(i).copied().ok_or(Error::MissingAssignment(*i)))
            .collect::<Result<Vec<_>>>()?;
        self.materialize_ordered(&values)
    }

    /// Like [`SolutionSpace::materialize`] with values listed in
    /// [`SolutionSpace::free`] order.
    pub fn materialize_ordered(&self, values: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if values.len() != self.free.len() {
            return Err(Error::LengthMismatch(values.len(), self.free.len()));
        }
        let mut full = vec![FieldElement::ZERO; self.len];
        for (&i, &v) in self.free.iter().zip(values) {
            full[i] = v;
        }
        for (&i, row) in &self.bound {
            full[i] = row.ones().fold(FieldElement::ZERO, |acc, j| acc + full[j]);
        }
        Ok(full.split_off(self.delta))
    }

    /// S^{[δ]}: zero the coordinates below δ and keep the rest.
    pub fn truncate(&self, delta: usize) -> Result<SolutionSpace> {
        if delta < self.delta || delta >= self.len {
            return Err(Error::InvalidOffset { delta, len: self.len });
        }
        let mut bound = BTreeMap::new();
        for (&i, row) in &self.bound {
            if i < delta {
                // forced to zero; must not constrain surviving free coordinates
                if row.ones().any(|j| j >= delta) {
                    return Err(Error::InconsistentSystem(i));
                }
                continue;
            }
            let mut r = row.clone();
            for j in self.free.iter().copied().take_while(|&j| j < delta) {
                r.set(j, false);
            }
            bound.insert(i, r);
        }
        let free = self.free.iter().copied().filter(|&j| j >= delta).collect();
        Ok(SolutionSpace { len: self.len, delta, free, bound })
    }

    fn from_coordinate_rows(len: usize, free: Vec<usize>, bound: BTreeMap<usize, BitRow>) -> Self {
        SolutionSpace { len, delta: 0, free, bound }
    }

    /// The symbolic value of every coordinate as a row over free indices.
    fn coordinate_rows(&self, width: usize) -> Vec<BitRow> {
        (self.delta..self.len)
            .map(|i| match self.bound.get(&i) {
                Some(r) => r.resized(width),
                None => BitRow::unit(width, i),
            })
            .collect()
    }
}

impl fmt::Display for SolutionSpace {
    /// Tuple form, e.g. `(0, b1, b1, b3)` or `(b7, 0, b9, b9, ...)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in self.delta..self.len {
            if i > self.delta {
                write!(f, ", ")?;
            }
            match self.bound.get(&i) {
                None => write!(f, "b{i}")?,
                Some(r) if r.is_zero() => write!(f, "0")?,
                Some(r) => {
                    let terms: Vec<String> = r.ones().map(|j| format!("b{j}")).collect();
                    write!(f, "{}", terms.join("+"))?;
                }
            }
        }
        write!(f, ")")
    }
}

/// S_l as the null space of M_l.
pub fn solve_homogeneous(l: usize) -> Result<SolutionSpace> {
    let m = build_m(l)?;
    let rows = (0..l).map(|i| (m.row(i), BitRow::zeros(l))).collect();
    let pivots = reduce_highest_pivot(rows)?;
    let free: Vec<usize> = (0..l).filter(|c| !pivots.contains_key(c)).collect();
    let bound = pivots.into_iter().map(|(h, (lhs, _))| (h, lhs)).collect();
    Ok(SolutionSpace::from_coordinate_rows(l, free, bound))
}

/// S_l by the doubling recursion: for l = 2^{λ-1} + τ, take S_{2^{λ-1}}
/// symbolically and solve M_τ (b_{2^{λ-1}}, ..., b_{l-1})^T = (b_0, ..., b_{τ-1})^T.
pub fn solve_recursive(l: usize) -> Result<SolutionSpace> {
    check_len(l)?;
    if l <= 2 {
        // S_1 = F_{2^m}, S_2 = {(0, b1)}; the recursion starts at λ = 2
        return solve_homogeneous(l);
    }
    let half = 1usize << (level_for(l) - 1);
    let tau = l - half;
    let outer = solve_recursive(half)?;
    let m_tau = build_m(tau)?;
    let outer_rows = outer.coordinate_rows(l);

    let system = (0..tau).map(|i| (m_tau.row(i), outer_rows[i].clone())).collect();
    let pivots = reduce_highest_pivot(system)?;

    let mut free = outer.free.clone();
    let mut bound: BTreeMap<usize, BitRow> =
        outer.bound.iter().map(|(&i, r)| (i, r.resized(l))).collect();
    for j in 0..tau {
        match pivots.get(&j) {
            None => free.push(half + j),
            Some((lhs, rhs)) => {
                let mut row = rhs.clone();
                for c in lhs.ones() {
                    row.set(half + c, !row.get(half + c));
                }
                bound.insert(half + j, row);
            }
        }
    }
    Ok(SolutionSpace::from_coordinate_rows(l, free, bound))
}

/// Whether the zero-padded vector `(0, .., 0, tail)` of length l satisfies
/// M_l B = 0 over F_{2^m}.
pub fn in_kernel(m_l: &BitMatrix, tail: &[FieldElement]) -> bool {
    let l = m_l.rows();
    if tail.len() > l {
        return false;
    }
    let offset = l - tail.len();
    (0..l).all(|i| {
        m_l.row(i)
            .ones()
            .filter(|&j| j >= offset)
            .fold(FieldElement::ZERO, |acc, j| acc + tail[j - offset])
            .is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2m::FieldSpec;
    use crate::ypoly::binom_odd;

    #[test]
    fn g_small_levels() {
        assert_eq!(build_g(1).unwrap(), BitMatrix::from_strings(&["10", "11"]));
        assert_eq!(
            build_g(2).unwrap(),
            BitMatrix::from_strings(&["1000", "1100", "1010", "1111"])
        );
        assert_eq!(build_g(0).unwrap().to_row_strings(), ["1"]);
        assert!(build_g(13).is_err());
        assert!(build_g(13).is_err());
    }

    #[test]
    fn g_is_pascal_mod_2_and_involution() {
        for level in 1..=6 {
            let g = build_g(level).unwrap();
            let n = g.rows();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(g.get(i, j), binom_odd(i, j), "level {level} ({i},{j})");
                }
            }
            assert!(g.is_lower_unitriangular());
            assert_eq!(g.mul(&g), BitMatrix::identity(n));
        }
    }

    #[test]
    fn m_examples() {
        assert_eq!(build_m(1).unwrap(), BitMatrix::from_strings(&["0"]));
        assert_eq!(build_m(2).unwrap(), BitMatrix::from_strings(&["00", "10"]));
        assert_eq!(
            build_m(4).unwrap(),
            BitMatrix::from_strings(&["0000", "1000", "1000", "1110"])
        );
        assert!(build_m(0).is_err());
        assert!(build_m(MAX_LEN + 1).is_err());
    }

    #[test]
    fn rank_and_dimension() {
        for l in 1..=64 {
            let m = build_m(l).unwrap();
            assert!(m.is_strictly_lower_triangular());
            assert_eq!(m.rank(), l / 2, "rank M_{l}");
            assert_eq!(solve_homogeneous(l).unwrap().dim(), l.div_ceil(2));
        }
    }

    #[test]
    fn s4_and_s8() {
        let s4 = solve_homogeneous(4).unwrap();
        assert_eq!(s4.free(), &[1, 3]);
        assert_eq!(s4.bound_row(0), Some(vec![]));
        assert_eq!(s4.bound_row(2), Some(vec![1]));
        assert_eq!(s4.to_string(), "(0, b1, b1, b3)");
        let s8 = solve_homogeneous(8).unwrap();
        assert_eq!(s8.to_string(), "(0, b1, b1, b3, b1, b5, b1+b3+b5, b7)");
    }

    #[test]
    fn recursion_small() {
        assert_eq!(solve_recursive(3).unwrap().to_string(), "(0, b1, b2)");
        let s6 = solve_recursive(6).unwrap();
        assert_eq!(s6.bound_row(4), Some(vec![1]));
        assert!(s6.is_free(5));
        let s14 = solve_recursive(14).unwrap();
        assert_eq!(s14.bound_row(12), Some(vec![1, 5, 9]));
        assert!(s14.is_free(13));
    }

    #[test]
    fn truncations() {
        let t = |l, d| solve_homogeneous(l).unwrap().truncate(d).unwrap().to_string();
        assert_eq!(t(7, 3), "(b3, 0, b5, b6)");
        assert_eq!(t(15, 7), "(b7, 0, b9, b9, b11, b9, b13, b14)");
        assert_eq!(t(13, 6), "(0, b7, 0, b9, b9, b11, b12)");
        assert_eq!(t(1, 0), "(b0)");
        assert_eq!(t(3, 1), "(b1, b2)");
        assert!(solve_homogeneous(5).unwrap().truncate(5).is_err());
    }

    #[test]
    fn materialize_examples() {
        let f2 = FieldSpec::with_default_modulus(2).unwrap();
        let s4 = solve_homogeneous(4).unwrap();
        let (a, c) = (f2.element(2).unwrap(), f2.element(3).unwrap());
        let z = FieldElement::ZERO;
        assert_eq!(s4.materialize_ordered(&[z, z]).unwrap(), vec![z; 4]);
        let assignment: HashMap<usize, FieldElement> = [(1, a), (3, c)].into();
        assert_eq!(s4.materialize(&assignment).unwrap(), vec![z, a, a, c]);
        let partial: HashMap<usize, FieldElement> = [(1, a)].into();
        assert_eq!(s4.materialize(&partial), Err(Error::MissingAssignment(3)));
        let extra: HashMap<usize, FieldElement> = [(1, a), (3, c), (2, a)].into();
        assert_eq!(s4.materialize(&extra), Err(Error::UnknownCoordinate(2)));
    }

    #[test]
    fn materialized_vectors_in_kernel_m1_exhaustive() {
        let one = FieldElement::ONE;
        for l in 1..=16 {
            let s = solve_homogeneous(l).unwrap();
            let m = build_m(l).unwrap();
            let d = s.dim();
            for mask in 0u32..(1 << d) {
                let vals: Vec<_> =
                    (0..d).map(|i| if mask >> i & 1 == 1 { one } else { FieldElement::ZERO }).collect();
                assert!(in_kernel(&m, &s.materialize_ordered(&vals).unwrap()));
            }
        }
    }

    #[test]
    fn cardinalities() {
        let s1 = solve_homogeneous(1).unwrap();
        assert_eq!(s1.cardinality(1), BigUint::from(2u32));
        assert_eq!(solve_homogeneous(7).unwrap().cardinality(1), BigUint::from(16u32));
        let t = solve_homogeneous(15).unwrap().truncate(7).unwrap();
        assert_eq!(t.cardinality(3), BigUint::from(8u32).pow(5));
    }

    #[test]
    fn level_choice() {
        assert_eq!(level_for(1), 1);
        assert_eq!(level_for(2), 1);
        assert_eq!(level_for(3), 2);
        assert_eq!(level_for(8), 3);
        assert_eq!(level_for(9), 4);
    }
}
