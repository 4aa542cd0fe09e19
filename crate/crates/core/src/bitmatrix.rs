//! Dense row-major matrices and row vectors over F_2.

use std::fmt;

const WORD: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// A packed vector over F_2.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow { len, words: vec![0; words_for(len)] }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut r = Self::zeros(len);
        r.set(i, true);
        r
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if v {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Highest set index, if any.
    pub fn last_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * WORD + (WORD - 1 - w.leading_zeros() as usize))
    }

    /// Set indices in increasing order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + t)
            })
        })
    }

    /// Parity of the bitwise AND with `other`.
    pub fn dot(&self, other: &BitRow) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Copy with length changed; bits beyond the new length are dropped.
    pub fn resized(&self, len: usize) -> BitRow {
        let mut r = BitRow::zeros(len);
        for i in self.ones().take_while(|&i| i < len) {
            r.set(i, true);
        }
        r
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

/// A dense matrix over F_2.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BitMatrix { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Parses rows of `0`/`1` characters; whitespace inside a row is ignored.
    pub fn from_strings(rows: &[&str]) -> Self {
        let parsed: Vec<Vec<bool>> = rows
            .iter()
            .map(|r| r.chars().filter(|c| !c.is_whitespace()).map(|c| c == '1').collect())
            .collect();
        let cols = parsed.first().map_or(0, Vec::len);
        let mut m = Self::zeros(parsed.len(), cols);
        for (i, row) in parsed.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix literal");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.stride + j / WORD] >> (j % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let w = &mut self.data[i * self.stride + j / WORD];
        let mask = 1u64 << (j % WORD);
        if v {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn row(&self, i: usize) -> BitRow {
        let words = self.data[i * self.stride..(i + 1) * self.stride].to_vec();
        BitRow { len: self.cols, words }
    }

    /// Kronecker product: block (i, j) of the result is self[i][j] * other.
    pub fn kron(&self, other: &BitMatrix) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.get(i, j) {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        if other.get(p, q) {
                            out.set(i * other.rows + p, j * other.cols + q, true);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a ^ b).collect();
        BitMatrix { data, ..*self }
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    let (src, dst) = (k * other.stride, i * out.stride);
                    for w in 0..out.stride {
                        out.data[dst + w] ^= other.data[src + w];
                    }
                }
            }
        }
        out
    }

    /// Upper-left `rows x cols` block.
    pub fn top_left(&self, rows: usize, cols: usize) -> BitMatrix {
        assert!(rows <= self.rows && cols <= self.cols);
        let mut out = BitMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if self.get(i, j) {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| self.get(i, i) && (i + 1..self.cols).all(|j| !self.get(i, j)))
    }

    pub fn is_strictly_lower_triangular(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (i..self.cols).all(|j| !self.get(i, j)))
    }

    /// Rank over F_2 by plain Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<BitRow> = (0..self.rows).map(|i| self.row(i)).collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            rank += 1;
        }
        rank
    }

    /// One string of `0`/`1` per row.
    pub fn to_row_strings(&self) -> Vec<String> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }).collect())
            .collect()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in self.to_row_strings() {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.to_row_strings() {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_of_identity() {
        let i2 = BitMatrix::identity(2);
        assert_eq!(i2.kron(&i2), BitMatrix::identity(4));
        let g2 = BitMatrix::from_strings(&["10", "11"]);
        let g4 = g2.kron(&g2);
        assert_eq!(g4, BitMatrix::from_strings(&["1000", "1100", "1010", "1111"]));
    }

    #[test]
    fn rank_and_mul() {
        let m = BitMatrix::from_strings(&["110", "011", "101"]);
        assert_eq!(m.rank(), 2);
        assert_eq!(BitMatrix::identity(5).rank(), 5);
        assert_eq!(m.mul(&BitMatrix::identity(3)), m);
        assert!(m.add(&m).is_zero());
    }

    #[test]
    fn row_ops() {
        let mut r = BitRow::zeros(130);
        r.set(3, true);
        r.set(129, true);
        r.set(64, true);
        assert_eq!(r.ones().collect::<Vec<_>>(), vec![3, 64, 129]);
        assert_eq!(r.last_one(), Some(129));
        assert_eq!(r.count_ones(), 3);
        assert_eq!(r.resized(100).ones().collect::<Vec<_>>(), vec![3, 64]);
        assert!(r.dot(&BitRow::unit(130, 64)));
        assert!(!r.dot(&BitRow::unit(130, 65)));
        assert_eq!(BitRow::zeros(10).last_one(), None);
    }
}
