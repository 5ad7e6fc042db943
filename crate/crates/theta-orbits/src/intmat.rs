//! Exact integer matrices and Smith normal form.
//!
//! Entries are arbitrary-precision throughout; no modular shortcuts. The SNF
//! pivot rule is fixed (smallest nonzero absolute value, ties broken by lowest
//! `(row, col)`) so the transform matrices are reproducible run to run.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(x);
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

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        out
    }

    pub fn neg(&self) -> IntMatrix {
        let mut out = self.clone();
        for x in &mut out.data {
            *x = -x.clone();
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        self.add(&other.neg())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == IntMatrix::identity(self.rows)
    }

    pub fn trace(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    /// Reduction mod 2 of the matrix.
    pub fn mod2(&self) -> crate::gf2::GF2Matrix {
        let mut m = crate::gf2::GF2Matrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self[(i, j)].is_odd() {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_mul(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for k in 0..self.cols {
            let t = &self.data[src * self.cols + k] * q;
            self.data[dst * self.cols + k] += t;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col_mul(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let t = &self.data[r * self.cols + src] * q;
            self.data[r * self.cols + dst] += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for k in 0..self.cols {
            let x = &mut self.data[i * self.cols + k];
            *x = -x.clone();
        }
    }

    fn negate_col(&mut self, j: usize) {
        for r in 0..self.rows {
            let x = &mut self.data[r * self.cols + j];
            *x = -x.clone();
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `u * m * v = d` with `d` diagonal, nonnegative, and `d1 | d2 | ...`.
///
/// `u_inv` is maintained alongside `u` so callers can pull integral
/// representatives out of the quotient without rational arithmetic.
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub rank: usize,
}

/// Smith normal form by unimodular row/column operations.
///
/// Pivoting picks the smallest nonzero absolute value in the trailing
/// submatrix, ties broken by lowest `(row, col)`.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut u_inv = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let n = m.rows.min(m.cols);

    let mut k = 0;
    'outer: while k < n {
        loop {
            // Smallest nonzero |entry| in the trailing submatrix.
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..d.rows {
                for j in k..d.cols {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    let better = match pivot {
                        None => true,
                        Some((pi, pj)) => {
                            let cur = d[(pi, pj)].abs();
                            let cand = d[(i, j)].abs();
                            cand < cur
                        }
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                break 'outer; // trailing submatrix is zero
            };
            if pi != k {
                d.swap_rows(k, pi);
                u.swap_rows(k, pi);
                u_inv.swap_cols(k, pi);
            }
            if pj != k {
                d.swap_cols(k, pj);
                v.swap_cols(k, pj);
            }

            let mut dirty = false;
            for i in k + 1..d.rows {
                if d[(i, k)].is_zero() {
                    continue;
                }
                let q = -(&d[(i, k)] / &d[(k, k)]);
                d.add_row_mul(i, k, &q);
                u.add_row_mul(i, k, &q);
                u_inv.add_col_mul(k, i, &(-&q));
                if !d[(i, k)].is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..d.cols {
                if d[(k, j)].is_zero() {
                    continue;
                }
                let q = -(&d[(k, j)] / &d[(k, k)]);
                d.add_col_mul(j, k, &q);
                v.add_col_mul(j, k, &q);
                if !d[(k, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue; // remainders give smaller pivot candidates
            }

            // Pivot must divide the whole trailing block.
            let p = d[(k, k)].clone();
            let offender = (k + 1..d.rows)
                .flat_map(|i| (k + 1..d.cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&d[(i, j)] % &p).is_zero());
            match offender {
                Some((i, _)) => {
                    d.add_row_mul(k, i, &BigInt::one());
                    u.add_row_mul(k, i, &BigInt::one());
                    u_inv.add_col_mul(i, k, &(-BigInt::one()));
                }
                None => break,
            }
        }
        if d[(k, k)].is_negative() {
            d.negate_row(k);
            u.negate_row(k);
            u_inv.negate_col(k);
        }
        k += 1;
    }

    let rank = d.diagonal().iter().filter(|x| !x.is_zero()).count();
    SmithForm { d, u, v, u_inv, rank }
}

/// Rank of the integer kernel: `cols - rank` over the rationals, which equals
/// the number of zero diagonal entries in the Smith form for square input.
pub fn int_kernel_rank(m: &IntMatrix) -> usize {
    m.cols - smith_normal_form(m).rank
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
///
/// Kept separate from the SNF path so the two can cross-check each other.
pub fn rational_rank(m: &IntMatrix) -> usize {
    let mut a = m.clone();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        for i in r + 1..a.rows {
            for j in c + 1..a.cols {
                let num = &a[(r, c)] * &a[(i, j)] - &a[(i, c)] * &a[(r, j)];
                a[(i, j)] = num / &prev;
            }
            a[(i, c)] = BigInt::zero();
        }
        prev = a[(r, c)].clone();
        r += 1;
    }
    r
}

/// Determinant by fraction-free elimination (test oracle for unimodularity).
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return BigInt::zero();
            };
            a.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[(k, k)] * &a[(i, j)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = num / &prev;
            }
            a[(i, k)] = BigInt::zero();
        }
        prev = a[(k, k)].clone();
    }
    let det = a[(n - 1, n - 1)].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Inverse of a unimodular integer matrix, via `u m v = I  =>  m^-1 = v u`.
pub fn unimodular_inverse(m: &IntMatrix) -> Option<IntMatrix> {
    assert_eq!(m.rows, m.cols);
    let snf = smith_normal_form(m);
    if !snf.d.is_identity() {
        return None;
    }
    Some(snf.v.mul(&snf.u))
}

/// A basis for the lattice spanned by the columns of `m`, as column vectors.
pub fn column_lattice_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    // span(cols of m) = u_inv * span(cols of d); basis vectors are
    // d_i * (column i of u_inv) for the nonzero diagonal entries.
    (0..snf.rank)
        .map(|i| {
            (0..m.rows)
                .map(|r| &snf.u_inv[(r, i)] * &snf.d[(i, i)])
                .collect()
        })
        .collect()
}

/// Canonical invariant-factor chain of `Z/o1 + Z/o2 + ...` (1s dropped,
/// ascending divisibility). Used to compare finite abelian groups.
pub fn invariant_factors(orders: &[u64]) -> Vec<u64> {
    use std::collections::BTreeMap;
    // prime -> exponents, largest first
    let mut primes: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &o in orders {
        assert!(o > 0, "order must be positive");
        let mut n = o;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                let mut e = 0;
                while n % p == 0 {
                    n /= p;
                    e += 1;
                }
                primes.entry(p).or_default().push(e);
            }
            p += 1;
        }
        if n > 1 {
            primes.entry(n).or_default().push(1);
        }
    }
    let mut slots = 0;
    for exps in primes.values_mut() {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        slots = slots.max(exps.len());
    }
    let mut factors = vec![1u64; slots];
    for (p, exps) in &primes {
        for (slot, &e) in exps.iter().enumerate() {
            factors[slot] *= p.pow(e);
        }
    }
    factors.reverse(); // ascending divisibility
    factors.retain(|&f| f > 1);
    factors
}
