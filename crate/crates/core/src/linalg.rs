//! Dense exact linear algebra over the rationals.
//!
//! Everything here is plain Gauss-Jordan elimination on `BigRational`
//! entries. Matrices in this crate stay small (at most a few hundred rows),
//! so no fraction-free or modular tricks are needed.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{to_short, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(to_short).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<Rational>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row.iter().cloned());
        }
        Ok(RationalMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows).map(|r| dot(self.row(r), v)).collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref_with_pivots(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead_row = 0;
        for col in 0..m.cols {
            if lead_row == m.rows {
                break;
            }
            let Some(p) = (lead_row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(lead_row, p);
            let inv = m[(lead_row, col)].recip();
            for c in col..m.cols {
                let v = &m[(lead_row, c)] * &inv;
                m[(lead_row, c)] = v;
            }
            for r in 0..m.rows {
                if r == lead_row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    let delta = &factor * &m[(lead_row, c)];
                    if !delta.is_zero() {
                        m[(r, c)] -= delta;
                    }
                }
            }
            pivots.push(col);
            lead_row += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> Self {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Right kernel `{x : M x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, free)].clone();
            }
            basis.push(v);
        }
        Subspace::span(self.cols, &basis).expect("kernel vectors have ambient length")
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = Rational::one();
        }
        let (red, pivots) = aug.rref_with_pivots();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = red[(r, n + c)].clone();
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Solves `M x = b`, returning one solution if the system is consistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        if b.len() != self.rows {
            return None;
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = b[r].clone();
        }
        let (red, pivots) = aug.rref_with_pivots();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = red[(row, self.cols)].clone();
        }
        Some(x)
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;

    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// A linear subspace of `Q^ambient`, stored by its canonical RREF basis so
/// that `==` decides subspace equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RationalMatrix::identity(ambient).row_vectors(),
        }
    }

    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let m = RationalMatrix::from_rows(ambient, vectors)?;
        let (r, pivots) = m.rref_with_pivots();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Subspace { ambient, basis })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        RationalMatrix::from_rows(self.ambient, &rows)
            .map(|m| m.rank() == self.dim())
            .unwrap_or(false)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` with respect to `vectors` (which need not be
    /// independent), if `v` lies in their span.
    pub fn coordinates(vectors: &[Vec<Rational>], v: &[Rational]) -> Option<Vec<Rational>> {
        let ambient = v.len();
        if vectors.is_empty() {
            return v.iter().all(Zero::is_zero).then(Vec::new);
        }
        let m = RationalMatrix::from_rows(ambient, vectors)
            .ok()?
            .transpose();
        m.solve(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ints(rows: &[&[i64]]) -> RationalMatrix {
        let cols = rows[0].len();
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        RationalMatrix::from_rows(cols, &rows).unwrap()
    }

    #[test]
    fn identity_is_its_own_rref() {
        let id = RationalMatrix::identity(4);
        assert_eq!(id.rref(), id);
        assert_eq!(id.kernel().dim(), 0);
    }

    #[test]
    fn kernel_of_row_of_ones() {
        let m = ints(&[&[1, 1]]);
        let k = m.kernel();
        assert_eq!(k, Subspace::span(2, &[vec![int(1), int(-1)]]).unwrap());
    }

    #[test]
    fn random_invertible_reduces_to_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut m = RationalMatrix::identity(6);
        for _ in 0..40 {
            let (a, b) = (rng.gen_range(0..6), rng.gen_range(0..6));
            if a == b {
                continue;
            }
            let k = int(rng.gen_range(-5..=5));
            for c in 0..6 {
                let v = &m[(b, c)] * &k;
                m[(a, c)] += v;
            }
        }
        assert_eq!(m.rref(), RationalMatrix::identity(6));
        assert_eq!(m.kernel().dim(), 0);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RationalMatrix::identity(6));
    }

    #[test]
    fn rank_nullity() {
        let m = ints(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1]]);
        assert_eq!(m.rank() + m.kernel().dim(), m.cols());
        for v in m.kernel().basis() {
            assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn subspace_equality_is_canonical() {
        let a = Subspace::span(
            3,
            &[vec![int(1), int(1), int(0)], vec![int(0), int(1), int(1)]],
        )
        .unwrap();
        let b = Subspace::span(
            3,
            &[vec![int(1), int(2), int(1)], vec![int(1), int(0), int(-1)]],
        )
        .unwrap();
        assert_eq!(a, b);
        assert!(a.contains(&[int(2), int(3), int(1)]));
        assert!(!a.contains(&[int(1), int(0), int(0)]));
    }

    #[test]
    fn singular_has_no_inverse() {
        assert!(ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert!(ints(&[&[1, 2], &[2, 4]]).solve(&[int(1), int(3)]).is_none());
        let x = ints(&[&[1, 2], &[2, 4]]).solve(&[int(1), int(2)]).unwrap();
        assert_eq!(x, vec![int(1), int(0)]);
    }
}
