//! Dense linear algebra over GF(2) with rows packed into machine words.
//!
//! Rows are stored as `u64` blocks so elimination is word-parallel XOR. All
//! routines are deterministic: pivots are always the first usable row in
//! order, and kernel bases are emitted in increasing free-column order.

use crate::{Error, Result};

/// A vector over GF(2), packed least-significant-bit first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GF2Vector {
    len: usize,
    words: Vec<u64>,
}

impl GF2Vector {
    pub fn zeros(len: usize) -> Self {
        GF2Vector {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = GF2Vector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    /// Unpacks a low-order integer code into `len` bits.
    pub fn from_code(code: u64, len: usize) -> Self {
        assert!(len <= 64);
        let mut v = GF2Vector::zeros(len);
        if len > 0 {
            v.words[0] = if len == 64 { code } else { code & ((1u64 << len) - 1) };
        }
        v
    }

    /// Packs the first `min(len, 64)` bits into an integer code.
    pub fn to_code(&self) -> u64 {
        assert!(self.len <= 64, "vector too long for a single code word");
        if self.len == 0 {
            0
        } else {
            self.words[0]
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &GF2Vector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Dot product over GF(2).
    pub fn dot(&self, other: &GF2Vector) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }

    pub fn iter_bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }
}

impl std::fmt::Debug for GF2Vector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

/// A matrix over GF(2); each row is a packed [`GF2Vector`]-style word block.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GF2Matrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    data: Vec<u64>,
}

impl GF2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let wpr = cols.div_ceil(64).max(1);
        GF2Matrix {
            rows,
            cols,
            wpr,
            data: vec![0; rows * wpr],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = GF2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = GF2Matrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &b) in row.iter().enumerate() {
                if b & 1 == 1 {
                    m.set(i, j, true);
                }
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

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        (self.data[i * self.wpr + j / 64] >> (j % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let mask = 1u64 << (j % 64);
        let w = &mut self.data[i * self.wpr + j / 64];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.wpr..(i + 1) * self.wpr]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let (a, b) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst * self.wpr);
            (&lo[src * self.wpr..src * self.wpr + self.wpr], &mut hi[..self.wpr])
        } else {
            let (lo, hi) = self.data.split_at_mut(src * self.wpr);
            (&hi[..self.wpr], &mut lo[dst * self.wpr..dst * self.wpr + self.wpr])
        };
        for (d, s) in b.iter_mut().zip(a) {
            *d ^= s;
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.wpr {
            self.data.swap(i * self.wpr + k, j * self.wpr + k);
        }
    }

    /// Extracts row `i` as a vector of length `cols`.
    pub fn row(&self, i: usize) -> GF2Vector {
        GF2Vector {
            len: self.cols,
            words: self.row_words(i).to_vec(),
        }
    }

    pub fn transpose(&self) -> GF2Matrix {
        let mut t = GF2Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    pub fn add(&self, other: &GF2Matrix) -> GF2Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
        out
    }

    pub fn mul(&self, other: &GF2Matrix) -> GF2Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = GF2Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    let (dst, src) = (i * out.wpr, k * other.wpr);
                    for w in 0..other.wpr {
                        out.data[dst + w] ^= other.data[src + w];
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &GF2Vector) -> GF2Vector {
        assert_eq!(self.cols, v.len, "matrix/vector dimensions differ");
        let mut out = GF2Vector::zeros(self.rows);
        for i in 0..self.rows {
            let mut acc = 0u64;
            for (a, b) in self.row_words(i).iter().zip(&v.words) {
                acc ^= a & b;
            }
            if acc.count_ones() % 2 == 1 {
                out.set(i, true);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> GF2Matrix {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = GF2Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == GF2Matrix::identity(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Row echelon form in place; returns the pivot columns.
    fn echelonize(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for j in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, j)) else {
                continue;
            };
            self.swap_rows(r, p);
            for i in 0..self.rows {
                if i != r && self.get(i, j) {
                    self.xor_row_into(r, i);
                }
            }
            pivots.push(j);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().echelonize().len()
    }

    /// Rank together with a basis of the right kernel `{x : Mx = 0}`.
    ///
    /// `rank + kernel.len() == cols`, and the basis vectors are linearly
    /// independent (one per free column, in column order).
    pub fn rank_kernel(&self) -> (usize, Vec<GF2Vector>) {
        let mut m = self.clone();
        let pivots = m.echelonize();
        let rank = pivots.len();
        let mut is_pivot = vec![false; self.cols];
        for &j in &pivots {
            is_pivot[j] = true;
        }
        let mut kernel = Vec::with_capacity(self.cols - rank);
        #[allow(clippy::needless_range_loop)]
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = GF2Vector::zeros(self.cols);
            v.set(free, true);
            for (r, &pj) in pivots.iter().enumerate() {
                if m.get(r, free) {
                    v.set(pj, true);
                }
            }
            kernel.push(v);
        }
        (rank, kernel)
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Solves `Mx = b`. On success returns a particular solution and a basis
    /// of the kernel, so the full solution set is `x + ker M`.
    pub fn solve_affine(&self, b: &GF2Vector) -> Result<Option<(GF2Vector, Vec<GF2Vector>)>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} rows but right-hand side has length {}",
                self.rows,
                b.len()
            )));
        }
        // Eliminate on [M | b].
        let mut aug = GF2Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for (w, &word) in self.row_words(i).iter().enumerate() {
                aug.data[i * aug.wpr + w] = word;
            }
            // Clear any packing slack before writing the augmented column.
            if !self.cols.is_multiple_of(64) {
                let last = self.cols / 64;
                aug.data[i * aug.wpr + last] &= (1u64 << (self.cols % 64)) - 1;
            }
            if b.get(i) {
                aug.set(i, self.cols, true);
            }
        }
        let pivots = aug.echelonize();
        if pivots.last() == Some(&self.cols) {
            return Ok(None); // a pivot in the augmented column: inconsistent
        }
        let mut x = GF2Vector::zeros(self.cols);
        for (r, &pj) in pivots.iter().enumerate() {
            if aug.get(r, self.cols) {
                x.set(pj, true);
            }
        }
        let (_, kernel) = self.rank_kernel();
        Ok(Some((x, kernel)))
    }

    /// Inverse over GF(2), if the matrix is square and nonsingular.
    pub fn inverse(&self) -> Result<GF2Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = GF2Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                if self.get(i, j) {
                    aug.set(i, j, true);
                }
            }
            aug.set(i, n + i, true);
        }
        let pivots = aug.echelonize();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::NotInvertible);
        }
        let mut inv = GF2Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if aug.get(i, n + j) {
                    inv.set(i, j, true);
                }
            }
        }
        Ok(inv)
    }

    /// Low 64 bits of each row, for bit-twiddling callers (`cols <= 64`).
    pub fn row_masks(&self) -> Vec<u64> {
        assert!(self.cols <= 64);
        (0..self.rows).map(|i| self.row_words(i)[0]).collect()
    }
}

impl std::fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "GF2Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, "{}", u8::from(self.get(i, j)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Stacks matrices vertically.
pub fn vstack(mats: &[&GF2Matrix]) -> GF2Matrix {
    assert!(!mats.is_empty());
    let cols = mats[0].cols;
    let rows = mats.iter().map(|m| m.rows).sum();
    let mut out = GF2Matrix::zeros(rows, cols);
    let mut at = 0;
    for m in mats {
        assert_eq!(m.cols, cols);
        for i in 0..m.rows {
            for w in 0..m.wpr.min(out.wpr) {
                out.data[(at + i) * out.wpr + w] = m.data[i * m.wpr + w];
            }
        }
        at += m.rows;
    }
    out
}
