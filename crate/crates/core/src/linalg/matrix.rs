use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::gaussian::{GaussInt, GaussianRational};
use crate::error::{Error, Result};

/// Dense row-major matrix over the Gaussian rationals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = GaussianRational::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<GaussianRational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(ExactMatrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    /// A matrix of small integers, mostly for tests and literals.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_fn(r, c, |i, j| GaussianRational::from_int(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn data(&self) -> &[GaussianRational] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussianRational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn conj(&self) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(GaussianRational::conj).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    fn check_same_shape(&self, o: &Self) -> Result<()> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::InvalidArgument(format!(
                "shape mismatch {}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_same_shape(o)?;
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check_same_shape(o)?;
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let p = a * b;
                        out.data[i * o.cols + j] += &p;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; row `(r1, r2)` maps to `r1 * o.rows + r2`.
    pub fn kron(&self, o: &Self) -> Self {
        Self::from_fn(self.rows * o.rows, self.cols * o.cols, |r, c| {
            self.get(r / o.rows, c / o.cols) * o.get(r % o.rows, c % o.cols)
        })
    }

    /// Inverse by Gauss-Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a: Vec<Vec<GaussianRational>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| if c == r { GaussianRational::one() } else { GaussianRational::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, p);
            let inv = a[col][col].inv().expect("nonzero pivot");
            for x in a[col].iter_mut() {
                *x = &*x * &inv;
            }
            let pivot_row = a[col].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, p) in row.iter_mut().zip(&pivot_row) {
                        if !p.is_zero() {
                            *x -= &(&f * p);
                        }
                    }
                }
            }
        }
        Some(Self::from_fn(n, n, |r, c| a[r][n + c].clone()))
    }

    /// Rank by fraction-free (Bareiss) elimination over the Gaussian integers,
    /// after clearing denominators row by row.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<GaussInt>> = (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let scale = row
                    .iter()
                    .fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, &x.denom_lcm()));
                row.iter().map(|x| GaussInt::from_scaled(x, &scale)).collect()
            })
            .collect();
        let (m, n) = (self.rows, self.cols);
        let mut prev = GaussInt::one();
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            for i in r + 1..m {
                for j in c + 1..n {
                    let v = a[r][c].mul(&a[i][j]).sub(&a[i][c].mul(&a[r][j]));
                    a[i][j] = v.div_exact(&prev);
                }
                a[i][c] = GaussInt::zero();
            }
            prev = a[r][c].clone();
            r += 1;
        }
        r
    }

    /// Reduced row echelon form over the field and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut ech = Echelon::new(self.cols);
        for r in 0..self.rows {
            ech.insert(self.row(r).to_vec());
        }
        let pivots = ech.pivots.clone();
        let rows = ech.reduced_rows();
        let mut out = Self::zeros(self.rows, self.cols);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, x) in row.into_iter().enumerate() {
                out.set(i, j, x);
            }
        }
        (out, pivots)
    }

    /// Basis of the right null space `{x : A x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<GaussianRational>> {
        let mut ech = Echelon::new(self.cols);
        for r in 0..self.rows {
            ech.insert(self.row(r).to_vec());
        }
        ech.nullspace()
    }

    /// Fraction grid, one row per line.
    pub fn to_grid(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(ToString::to_string).collect())
            .collect()
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_grid() {
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Incrementally built reduced row echelon form over the Gaussian rationals.
///
/// Rows are kept fully reduced with unit pivots, so inserting a row costs one
/// pass over the stored rows.
#[derive(Debug, Clone)]
pub struct Echelon {
    cols: usize,
    rows: Vec<Vec<GaussianRational>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    fn reduce(&self, row: &mut [GaussianRational]) {
        for (prow, &pc) in self.rows.iter().zip(&self.pivots) {
            if row[pc].is_zero() {
                continue;
            }
            let f = row[pc].clone();
            for (x, p) in row.iter_mut().zip(prow) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
    }

    /// True when `row` lies in the span of the inserted rows.
    pub fn contains(&self, row: &[GaussianRational]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        r.iter().all(GaussianRational::is_zero)
    }

    /// Inserts a row; returns whether the rank grew.
    pub fn insert(&mut self, mut row: Vec<GaussianRational>) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        self.reduce(&mut row);
        let Some(pc) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[pc].inv().expect("nonzero");
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for prow in self.rows.iter_mut() {
            if prow[pc].is_zero() {
                continue;
            }
            let f = prow[pc].clone();
            for (x, p) in prow.iter_mut().zip(&row) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, row);
        true
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn reduced_rows(&self) -> Vec<Vec<GaussianRational>> {
        self.rows.clone()
    }

    /// Basis of `{x : row · x = 0 for every stored row}`.
    pub fn nullspace(&self) -> Vec<Vec<GaussianRational>> {
        let free: Vec<usize> = (0..self.cols).filter(|c| !self.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![GaussianRational::zero(); self.cols];
                v[f] = GaussianRational::one();
                for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                    v[pc] = -&row[f];
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn rank_examples() {
        let m = ExactMatrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.nullspace().len(), 1);
        assert_eq!(ExactMatrix::identity(4).rank(), 4);
        assert_eq!(ExactMatrix::zeros(3, 2).rank(), 0);
        let c = ExactMatrix::from_vec(2, 2, vec![g("1"), g("i"), g("i"), g("-1")]).unwrap();
        assert_eq!(c.rank(), 1);
        let d = ExactMatrix::from_vec(2, 2, vec![g("1/2"), g("i"), g("-i"), g("1/3")]).unwrap();
        assert_eq!(d.rank(), 2);
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let m = ExactMatrix::from_vec(
            2,
            4,
            vec![g("1"), g("1+i"), g("0"), g("2/3"), g("0"), g("1"), g("i"), g("1")],
        )
        .unwrap();
        for v in m.nullspace() {
            let col = ExactMatrix::from_vec(4, 1, v).unwrap();
            assert!(m.mul(&col).unwrap().is_zero());
        }
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert!(r.get(0, 0).is_one() && r.get(0, 1).is_zero());
    }

    #[test]
    fn inverse_and_products() {
        let m = ExactMatrix::from_vec(2, 2, vec![g("1"), g("2i"), g("1/2"), g("3")]).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(ExactMatrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let a = ExactMatrix::from_ints(&[&[1, 2], &[3, 4]]);
        let b = ExactMatrix::identity(2);
        let k = a.kron(&b);
        assert_eq!(k.get(2, 0), &GaussianRational::from_int(3));
        assert_eq!(k.get(1, 1), &GaussianRational::from_int(1));
        assert_eq!(a.adjoint(), a.transpose());
    }
}
