//! Exact rational matrices: rank and kernels via fraction-free elimination,
//! plus the derivation actions induced on symmetric and exterior powers.

use num::{BigInt, BigRational, One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::Error;

/// Arbitrary-precision rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `p/q`.
pub fn rat_frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses a rational given as `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt, Error> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("invalid rational `{s}`")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

/// Formats a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| format_rat(self.at(r, c))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { Rat::one() } else { Rat::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        RationalMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        RationalMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer-entry convenience constructor.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..r).all(|c| self.at(r, c) == self.at(c, r)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.at(r, c) * s)
    }

    pub fn row(&self, r: usize) -> Vec<Rat> {
        (0..self.cols).map(|c| self.at(r, c).clone()).collect()
    }

    pub fn col(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn from_cols(cols: &[Vec<Rat>]) -> Self {
        let nrows = cols.first().map_or(0, |c| c.len());
        Self::from_fn(nrows, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.at(i, i)).fold(Rat::zero(), |a, b| a + b)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for c in 0..self.cols {
                    let a = self.at(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc += a * &v[c];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self * other - other * self
    }

    /// Exact k-th power by repeated multiplication.
    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Smallest `m` with `self^(m+1) = 0`, or `None` if no power up to
    /// `dim + 1` vanishes (the matrix is not nilpotent).
    pub fn nilpotency_index(&self) -> Option<usize> {
        assert!(self.is_square());
        if self.is_zero() {
            return Some(0);
        }
        let mut p = self.clone();
        let mut m = 1usize;
        while m <= self.rows {
            p = &p * self;
            if p.is_zero() {
                return Some(m);
            }
            m += 1;
        }
        None
    }

    /// Horizontal stack of blocks on the diagonal, zeros elsewhere.
    pub fn block_diag(blocks: &[&Self]) -> Self {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zero(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.set(r0 + r, c0 + c, b.at(r, c).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Exact rank over the rationals by fraction-free (Bareiss) elimination.
    ///
    /// Rows are scaled to integers first; scaling does not change the rank.
    pub fn rank(&self) -> usize {
        let mut m = self.integer_rows();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0usize;
        let mut prev = BigInt::one();
        let mut pivot_row = 0usize;
        for col in 0..cols {
            let Some(p) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(pivot_row, p);
            for r in pivot_row + 1..rows {
                for c in col + 1..cols {
                    let num = &m[pivot_row][col] * &m[r][c] - &m[r][col] * &m[pivot_row][c];
                    m[r][c] = &num / &prev;
                }
                m[r][col] = BigInt::zero();
            }
            prev = m[pivot_row][col].clone();
            rank += 1;
            pivot_row += 1;
            if pivot_row == rows {
                break;
            }
        }
        rank
    }

    /// Determinant by Bareiss elimination (integer-scaled, exact).
    pub fn det(&self) -> Rat {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Rat::one();
        }
        let mut m = self.integer_rows();
        let mut scale = Rat::one();
        for r in 0..n {
            let lcm = row_denominator_lcm(&self.row(r));
            scale *= Rat::from_integer(lcm);
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Rat::zero();
            };
            if p != col {
                m.swap(col, p);
                sign = -sign;
            }
            for r in col + 1..n {
                for c in col + 1..n {
                    let num = &m[col][col] * &m[r][c] - &m[r][col] * &m[col][c];
                    m[r][c] = &num / &prev;
                }
                m[r][col] = BigInt::zero();
            }
            prev = m[col][col].clone();
        }
        Rat::from_integer(sign * m[n - 1][n - 1].clone()) / scale
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let lcm = row_denominator_lcm(&row);
                row.iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect()
            })
            .collect()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for col in 0..cols {
            if pr >= rows {
                break;
            }
            let Some(p) = (pr..rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            for c in 0..cols {
                let a = m.at(p, c).clone();
                m.set(p, c, m.at(pr, c).clone());
                m.set(pr, c, a);
            }
            let inv = Rat::one() / m.at(pr, col).clone();
            for c in col..cols {
                let v = m.at(pr, c) * &inv;
                m.set(pr, c, v);
            }
            for r in 0..rows {
                if r != pr && !m.at(r, col).is_zero() {
                    let f = m.at(r, col).clone();
                    for c in col..cols {
                        let v = m.at(r, c) - &f * m.at(pr, c);
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            pr += 1;
        }
        (m, pivots)
    }

    /// Basis of the exact kernel; length is `cols - rank`.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_of_col = vec![None; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = Some(i);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.at(i, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = rhs` exactly; `None` when inconsistent.
    pub fn solve(&self, rhs: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(rhs.len(), self.rows);
        let aug = Self::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                rhs[r].clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = red.at(i, self.cols).clone();
        }
        Some(x)
    }
}

fn row_denominator_lcm(row: &[Rat]) -> BigInt {
    row.iter()
        .fold(BigInt::one(), |acc, x| num::integer::lcm(acc, x.denom().clone()))
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RationalMatrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + rhs.at(r, c))
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RationalMatrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) - rhs.at(r, c))
    }
}

impl Sub for RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, rhs: RationalMatrix) -> RationalMatrix {
        &self - &rhs
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;
    fn neg(self) -> RationalMatrix {
        RationalMatrix::from_fn(self.rows, self.cols, |r, c| -self.at(r, c).clone())
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = RationalMatrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(r, c) + a * b;
                    out.set(r, c, v);
                }
            }
        }
        out
    }
}

/// Weakly increasing index tuples of length `k` over `0..m`, in lex order.
/// These index the monomial basis of the k-th symmetric power.
pub fn sym_basis(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(m: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(m, k, i, cur, out);
            cur.pop();
        }
    }
    rec(m, k, 0, &mut cur, &mut out);
    out
}

/// Strictly increasing index tuples of length `k` over `0..m`, in lex order.
/// These index the basis of the k-th exterior power.
pub fn wedge_basis(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(m: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(m, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(m, k, 0, &mut cur, &mut out);
    out
}

fn index_of(basis: &[Vec<usize>], tuple: &[usize]) -> usize {
    basis.binary_search_by(|b| b.as_slice().cmp(tuple)).expect("tuple not in basis")
}

/// Derivation (Leibniz) action of a square matrix on the monomial basis of
/// the k-th symmetric power. The construction is a Lie algebra homomorphism.
pub fn induced_sym_power(n: &RationalMatrix, k: usize) -> RationalMatrix {
    assert!(n.is_square());
    let m = n.rows();
    let basis = sym_basis(m, k);
    let dim = basis.len();
    let mut out = RationalMatrix::zero(dim, dim);
    for (col, mono) in basis.iter().enumerate() {
        for pos in 0..k {
            let j = mono[pos];
            for a in 0..m {
                let coeff = n.at(a, j);
                if coeff.is_zero() {
                    continue;
                }
                let mut t = mono.clone();
                t[pos] = a;
                t.sort_unstable();
                let row = index_of(&basis, &t);
                let v = out.at(row, col) + coeff;
                out.set(row, col, v);
            }
        }
    }
    out
}

/// Derivation (Leibniz) action on the k-th exterior power. Basis tuples are
/// strictly increasing; Koszul signs come from sorted insertion.
pub fn induced_wedge_power(n: &RationalMatrix, k: usize) -> RationalMatrix {
    assert!(n.is_square());
    let m = n.rows();
    assert!(k <= m, "wedge degree exceeds dimension");
    let basis = wedge_basis(m, k);
    let dim = basis.len();
    let mut out = RationalMatrix::zero(dim, dim);
    for (col, tuple) in basis.iter().enumerate() {
        for pos in 0..k {
            let j = tuple[pos];
            for a in 0..m {
                let coeff = n.at(a, j);
                if coeff.is_zero() {
                    continue;
                }
                if a != j && tuple.contains(&a) {
                    continue; // repeated factor wedges to zero
                }
                let mut t = tuple.clone();
                t[pos] = a;
                // sorted insertion: count transpositions moving slot `pos` home
                let mut swaps = 0usize;
                let mut i = pos;
                while i + 1 < k && t[i] > t[i + 1] {
                    t.swap(i, i + 1);
                    i += 1;
                    swaps += 1;
                }
                while i > 0 && t[i - 1] > t[i] {
                    t.swap(i - 1, i);
                    i -= 1;
                    swaps += 1;
                }
                let row = index_of(&basis, &t);
                let signed = if swaps % 2 == 0 { coeff.clone() } else { -coeff.clone() };
                let v = out.at(row, col) + signed;
                out.set(row, col, v);
            }
        }
    }
    out
}

/// Incremental span tracker: feeds vectors one by one and reports whether
/// each enlarges the span. Used for basis completion and closure loops.
pub struct SpanTracker {
    dim: usize,
    // rows kept in echelon form; pivot column of each row
    rows: Vec<(usize, Vec<Rat>)>,
}

impl SpanTracker {
    pub fn new(dim: usize) -> Self {
        SpanTracker { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Returns true when `v` was independent of the current span.
    pub fn add(&mut self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        for (pivot, row) in &self.rows {
            if !w[*pivot].is_zero() {
                let f = w[*pivot].clone();
                for c in *pivot..self.dim {
                    let val = &w[c] - &f * &row[c];
                    w[c] = val;
                }
            }
        }
        match w.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let inv = Rat::one() / w[p].clone();
                for c in p..self.dim {
                    let val = &w[c] * &inv;
                    w[c] = val;
                }
                self.rows.push((p, w));
                self.rows.sort_by_key(|(p, _)| *p);
                true
            }
        }
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        let mut w = v.to_vec();
        for (pivot, row) in &self.rows {
            if !w[*pivot].is_zero() {
                let f = w[*pivot].clone();
                for c in *pivot..self.dim {
                    let val = &w[c] - &f * &row[c];
                    w[c] = val;
                }
            }
        }
        w.iter().all(|x| x.is_zero())
    }
}

/// Flattens a matrix into a row-major coordinate vector.
pub fn vectorize(m: &RationalMatrix) -> Vec<Rat> {
    let mut v = Vec::with_capacity(m.rows() * m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            v.push(m.at(r, c).clone());
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn random_nilpotent(dim: usize, seed: u64) -> RationalMatrix {
        // strictly upper triangular with small entries
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
        let mut m = RationalMatrix::zero(dim, dim);
        for r in 0..dim {
            for c in r + 1..dim {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                m.set(r, c, rat(((state >> 33) % 5) as i64 - 2));
            }
        }
        m
    }

    #[test]
    fn rank_zero_and_identity() {
        assert_eq!(RationalMatrix::zero(3, 3).rank(), 0);
        assert_eq!(RationalMatrix::identity(4).rank(), 4);
    }

    #[test]
    fn rank_of_split_gram() {
        // block form [[0, I2], [I2, 0]]: full rank 4
        let g = RationalMatrix::from_i64(&[
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
        ]);
        assert_eq!(g.rank(), 4);
    }

    #[test]
    fn kernel_trivial_and_full() {
        assert!(RationalMatrix::identity(3).kernel_basis().is_empty());
        assert_eq!(RationalMatrix::zero(2, 2).kernel_basis().len(), 2);
    }

    #[test]
    fn kernel_vectors_annihilated_rank_nullity() {
        let m = RationalMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let ker = m.kernel_basis();
        assert_eq!(m.rank() + ker.len(), m.cols());
        for v in &ker {
            assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = RationalMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let x = m.solve(&[rat(3), rat(1)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(1)]);
        let sing = RationalMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert!(sing.solve(&[rat(0), rat(1)]).is_none());
    }

    #[test]
    fn sym_power_trivial_cases() {
        let z = RationalMatrix::zero(3, 3);
        assert!(induced_sym_power(&z, 2).is_zero());
        let n = random_nilpotent(4, 7);
        assert_eq!(induced_sym_power(&n, 1), n);
    }

    #[test]
    fn wedge_power_trivial_cases() {
        let n = RationalMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let w0 = induced_wedge_power(&n, 0);
        assert_eq!(w0.rows(), 1);
        assert!(w0.is_zero());
        // top wedge: derivation acts by the trace
        let top = induced_wedge_power(&n, 2);
        assert_eq!(top.rows(), 1);
        assert_eq!(top.at(0, 0), &rat(5));
    }

    #[test]
    fn sym_index_multiplicativity_vs_powering() {
        for seed in 0..6u64 {
            let dim = 3 + (seed as usize % 4);
            let n = random_nilpotent(dim, seed + 1);
            let Some(nu) = n.nilpotency_index() else { panic!() };
            if nu == 0 {
                continue;
            }
            for k in 1..=4usize {
                let s = induced_sym_power(&n, k);
                let expected = k * nu;
                assert_eq!(s.nilpotency_index(), Some(expected), "seed {seed} k {k}");
            }
        }
    }

    #[test]
    fn induced_powers_are_lie_homomorphisms() {
        let a = RationalMatrix::from_i64(&[&[0, 1, 2, 0], &[1, 0, 0, 3], &[0, 2, 1, 0], &[1, 1, 0, 0]]);
        let b = RationalMatrix::from_i64(&[&[2, 0, 1, 1], &[0, 1, 0, 0], &[3, 0, 0, 2], &[0, 1, 1, 0]]);
        let comm = a.commutator(&b);
        for k in 1..=3usize {
            let lhs = induced_sym_power(&comm, k);
            let rhs = induced_sym_power(&a, k).commutator(&induced_sym_power(&b, k));
            assert_eq!(lhs, rhs, "sym k={k}");
            let lhs = induced_wedge_power(&comm, k);
            let rhs = induced_wedge_power(&a, k).commutator(&induced_wedge_power(&b, k));
            assert_eq!(lhs, rhs, "wedge k={k}");
        }
    }

    #[test]
    fn det_split_gram() {
        let g = RationalMatrix::from_i64(&[
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
        ]);
        assert_eq!(g.det(), rat(1));
    }

    #[test]
    fn parse_and_format_roundtrip() {
        for s in ["3", "-7", "1/2", "-5/3"] {
            let x = parse_rat(s).unwrap();
            assert_eq!(format_rat(&x), s);
        }
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("abc").is_err());
    }

    #[test]
    fn span_tracker_ranks() {
        let mut t = SpanTracker::new(3);
        assert!(t.add(&[rat(1), rat(0), rat(1)]));
        assert!(t.add(&[rat(0), rat(1), rat(0)]));
        assert!(!t.add(&[rat(2), rat(3), rat(2)]));
        assert_eq!(t.rank(), 2);
        assert!(t.contains(&[rat(1), rat(1), rat(1)]));
        assert!(!t.contains(&[rat(0), rat(0), rat(1)]));
    }
}
